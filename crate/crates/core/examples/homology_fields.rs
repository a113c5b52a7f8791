//! Reduced homology over several fields, with a complex whose answer
//! depends on the characteristic.

use cellres::complex::{Cell, JoinCell, LabeledComplex, Multidegree};
use cellres::homology::{reduced_homology, FieldSpec};
use cellres::hypergraph::Vertex;

fn simplicial(facets: &[&[Vertex]]) -> cellres::Result<LabeledComplex> {
    let mut faces = std::collections::BTreeSet::new();
    for f in facets {
        for mask in 1u32..1 << f.len() {
            let face: Vec<Vertex> = (0..f.len()).filter(|k| mask >> k & 1 == 1).map(|k| f[k]).collect();
            faces.insert(face);
        }
    }
    let cells = faces
        .into_iter()
        .map(|face| Ok((JoinCell::single(Cell::new(vec![face.clone()])?), Multidegree::new(face))))
        .collect::<cellres::Result<Vec<_>>>()?;
    LabeledComplex::from_cells(1, cells)
}

fn main() -> cellres::Result<()> {
    let rp2 = simplicial(&[
        &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
        &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
    ])?;
    for field in FieldSpec::STANDARD {
        let h = reduced_homology(&rp2, field)?;
        let ranks: Vec<String> = h.iter().map(|(i, r)| format!("{i}:{r}")).collect();
        println!("RP2 over {field}: {}", ranks.join(" "));
    }
    Ok(())
}
