//! Covers a non-cointerval graph by cointerval pieces and glues their
//! complexes into a resolution.

use cellres::decomposition::{glued_resolution, linear_width, linear_width_strict, Family};
use cellres::hypergraph::Hypergraph;

fn main() -> cellres::Result<()> {
    let c4 = Hypergraph::on_range(2, 4, [[1, 2], [2, 3], [3, 4], [1, 4]])?;
    for family in [Family::Cointerval, Family::StronglyStable] {
        let (w, cover) = linear_width(&c4, family)?;
        match linear_width_strict(&c4, family) {
            Ok((strict, _)) => println!("{family}: width {w}, with fixed labels {strict}"),
            Err(e) => println!("{family}: width {w}, with fixed labels none ({e})"),
        }
        print!("{cover}");
        let (x, report) = glued_resolution(&c4, &cover)?;
        println!("glued complex f-vector: {:?}", x.f_vector());
        print!("{report}");
    }
    Ok(())
}
