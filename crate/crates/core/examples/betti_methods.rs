//! Computes Betti numbers three ways and compares them.

use cellres::complex::build_complex;
use cellres::homology::FieldSpec;
use cellres::hypergraph::Hypergraph;
use cellres::resolution::{betti_from_downset_homology, betti_from_faces, betti_hochster, cube_betti};

fn main() -> cellres::Result<()> {
    let h = Hypergraph::on_range(3, 5, [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [2, 3, 4]])?;
    let faces = betti_from_faces(&h)?;
    let cellular = betti_from_downset_homology(&build_complex(&h), FieldSpec::RATIONALS)?;
    let hochster = betti_hochster(&h, FieldSpec::GF2)?;
    print!("{faces}");
    println!("faces = cellular: {}", faces == cellular);
    println!("faces = hochster: {}", faces == hochster);
    println!("cube count on 1 2 3 4: {}", cube_betti(&h, &[1, 2, 3, 4])?);

    // Hochster still works when X_H is not a resolution
    let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]])?;
    print!("{}", betti_hochster(&two_k2, FieldSpec::RATIONALS)?);
    Ok(())
}
