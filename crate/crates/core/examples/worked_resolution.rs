//! Builds `X_H` for the worked example and checks that it is a minimal
//! linear resolution.

use cellres::complex::build_complex;
use cellres::hypergraph::Hypergraph;
use cellres::resolution::{betti_from_faces, is_d_linear, verify_resolution};

fn main() -> cellres::Result<()> {
    let h = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]])?;
    let x = build_complex(&h);
    println!("f-vector: {:?}", x.f_vector());
    println!("euler characteristic: {}", x.euler_characteristic());
    print!("{}", x.to_dump());

    print!("{}", verify_resolution(&x)?);
    let betti = betti_from_faces(&h)?;
    print!("{betti}");
    println!("2-linear: {}", is_d_linear(&betti, 2));
    Ok(())
}
