//! Builds the staircase subdivision of `d Δ_m`, restricts it to a graph
//! and checks the face poset against `X_H`.

use cellres::hypergraph::Hypergraph;
use cellres::mixedsub::{enumerate_staircase, restrict_to_graph, staircase_geometry, staircase_volume};

fn main() -> cellres::Result<()> {
    let (d, m) = (2, 3);
    let cells = enumerate_staircase(d, m)?;
    println!("staircase cells of {d}Δ_{m}: {} (volume {})", cells.len(), staircase_volume(d, m)?);
    for b in &cells {
        println!("  {b} dims {:?}", b.dimension_vector());
    }
    let g = staircase_geometry(d, m)?;
    println!("full subdivision f-vector: {:?}", g.f_vector());

    let h = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]])?;
    let restricted = restrict_to_graph(2, 5, &h)?;
    println!("restricted f-vector: {:?}", restricted.f_vector());
    print!("{}", restricted.to_text());
    Ok(())
}
