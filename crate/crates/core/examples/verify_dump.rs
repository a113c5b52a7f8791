//! Deletes the top cell of `X_H` and shows the verifier catching it.

use cellres::complex::build_complex;
use cellres::hypergraph::Hypergraph;
use cellres::resolution::verify_resolution;

fn main() -> cellres::Result<()> {
    let h = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]])?;
    let x = build_complex(&h);
    let top = x.cells().last().expect("nonempty").key.clone();
    println!("removing {top}");
    let broken = x.without_cell(&top)?;
    let text = broken.to_dump();
    let reread = cellres::complex::LabeledComplex::from_dump(&text)?;
    print!("{}", verify_resolution(&reread)?);
    Ok(())
}
