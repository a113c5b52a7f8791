//! Tests cointerval and strongly stable labelings, then searches for one.

use cellres::hypergraph::{find_cointerval_labeling, find_strongly_stable_labeling, Hypergraph};

fn main() -> cellres::Result<()> {
    let worked = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]])?;
    println!("worked example cointerval: {}", worked.is_cointerval());
    println!("worked example strongly stable: {}", worked.is_strongly_stable()?);
    println!("intervals:");
    for (v, (a, b)) in worked.interval_representation()?.iter() {
        println!("  {v}: [{a}, {b}]");
    }

    // a path with a bad labeling, then the fix
    let path = Hypergraph::on_range(2, 4, [[1, 3], [3, 2], [2, 4]])?;
    println!("path cointerval as given: {}", path.is_cointerval());
    if let Some(r) = find_cointerval_labeling(&path) {
        println!("cointerval labeling: {r}");
        print!("{}", path.relabel(&r)?.to_text());
    }
    match find_strongly_stable_labeling(&path) {
        Some(r) => println!("strongly stable labeling: {r}"),
        None => println!("no strongly stable labeling"),
    }

    let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]])?;
    println!("2K2 admits a cointerval labeling: {}", find_cointerval_labeling(&two_k2).is_some());
    Ok(())
}
