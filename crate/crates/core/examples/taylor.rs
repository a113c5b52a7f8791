//! The Taylor complex always resolves but is rarely minimal.

use cellres::hypergraph::Hypergraph;
use cellres::resolution::{face_table, taylor_complex, verify_resolution};

fn main() -> cellres::Result<()> {
    let path = Hypergraph::on_range(2, 4, [[1, 2], [2, 3], [3, 4]])?;
    let t = taylor_complex(&path)?;
    println!("taylor f-vector: {:?}", t.f_vector());
    print!("{}", verify_resolution(&t)?);
    println!("face totals: {:?}", face_table(&t).totals());
    Ok(())
}
