//! Classifies all 3-graphs on five vertices up to isomorphism.

use cellres::casestudy::{case_study, ss_width_gap_search, CLASSIFICATION_HEADER};

fn main() -> cellres::Result<()> {
    let (rows, summary) = case_study(3, 5)?;
    println!("{CLASSIFICATION_HEADER}");
    for row in &rows {
        println!("{row}");
    }
    print!("{summary}");
    for row in ss_width_gap_search(&rows) {
        println!("width gap: {}", row.graph.edges().map(|e| format!("{e:?}")).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}
