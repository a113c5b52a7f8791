//! Joins of labeled complexes, glued resolutions from covers by cointerval
//! parts, and linear width.

use std::fmt;

use rayon::prelude::*;

use crate::complex::{build_complex, Cell, JoinCell, LabeledComplex, Multidegree};
use crate::error::{Error, Result};
use crate::hypergraph::{find_cointerval_labeling, find_strongly_stable_labeling, Edge, Hypergraph, VertexRelabeling};
use crate::resolution::{verify_resolution, VerificationReport};

/// Largest edge count accepted by [`linear_width`].
pub const LINEAR_WIDTH_MAX_EDGES: usize = 12;

/// Largest number of cells accepted by [`join`].
pub const JOIN_MAX_CELLS: usize = 1 << 20;

/// The join of labeled complexes. Factor slots are concatenated, so joining
/// joins stays flat. Labels are unions of the constituent labels.
pub fn join(xs: &[LabeledComplex]) -> Result<LabeledComplex> {
    let slots: usize = xs.iter().map(LabeledComplex::factors).sum();
    let total = xs.iter().try_fold(1usize, |acc, x| acc.checked_mul(x.len() + 1));
    if total.is_none_or(|t| t > JOIN_MAX_CELLS) {
        return Err(Error::TooLarge("join has too many cells".into()));
    }
    let mut acc: Vec<(Vec<Option<Cell>>, Multidegree)> = vec![(Vec::with_capacity(slots), Multidegree::default())];
    for x in xs {
        let mut next = Vec::with_capacity(acc.len() * (x.len() + 1));
        for (parts, label) in &acc {
            let mut empty = parts.clone();
            empty.extend(std::iter::repeat_n(None, x.factors()));
            next.push((empty, label.clone()));
            for e in x.cells() {
                let mut p = parts.clone();
                p.extend(e.key.parts().iter().cloned());
                next.push((p, label.union(&e.label)));
            }
        }
        acc = next;
    }
    let cells = acc
        .into_iter()
        .filter(|(parts, _)| parts.iter().any(Option::is_some))
        .map(|(parts, label)| Ok((JoinCell::new(parts)?, label)))
        .collect::<Result<Vec<_>>>()?;
    LabeledComplex::from_cells(slots, cells)
}

/// Which hypergraphs may serve as parts of a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cointerval,
    StronglyStable,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "cointerval" => Ok(Family::Cointerval),
            "strongly-stable" | "strongly_stable" | "ss" => Ok(Family::StronglyStable),
            other => Err(Error::Precondition(format!("unknown family `{other}`"))),
        }
    }

    /// A labeling under which `h` belongs to the family. With `strict`,
    /// only the identity labeling is tried.
    pub fn certify(self, h: &Hypergraph, strict: bool) -> Option<VertexRelabeling> {
        if strict {
            let ok = match self {
                Family::Cointerval => h.is_cointerval(),
                Family::StronglyStable => h.is_strongly_stable().unwrap_or(false),
            };
            return ok.then(|| VertexRelabeling::identity(h.vertices()));
        }
        match self {
            Family::Cointerval => find_cointerval_labeling(h),
            Family::StronglyStable => find_strongly_stable_labeling(h),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cointerval => "cointerval",
            Family::StronglyStable => "strongly-stable",
        })
    }
}

/// A part of a cover together with a labeling that makes it cointerval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPart {
    pub graph: Hypergraph,
    pub labeling: VertexRelabeling,
}

impl CoverPart {
    /// `X` of the relabeled part, with labels mapped back to the original
    /// vertex names.
    pub fn complex(&self) -> Result<LabeledComplex> {
        let relabeled = self.graph.relabel(&self.labeling)?;
        let back = self.labeling.inverse();
        Ok(build_complex(&relabeled).map_labels(|v| back.apply(v).expect("labeling covers the vertex set")))
    }
}

/// Hypergraphs on the vertex set of `H` whose edge sets cover `E(H)`, each
/// cointerval after its own relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    parts: Vec<CoverPart>,
}

impl Cover {
    pub fn new(h: &Hypergraph, parts: Vec<CoverPart>) -> Result<Cover> {
        let mut covered = std::collections::BTreeSet::new();
        for (k, p) in parts.iter().enumerate() {
            if p.graph.d() != h.d() || p.graph.vertices() != h.vertices() {
                return Err(Error::Precondition(format!("part {k} is not on the vertex set of H")));
            }
            if !p.graph.edge_set().is_subset(h.edge_set()) {
                return Err(Error::Precondition(format!("part {k} has edges outside H")));
            }
            if !p.graph.relabel(&p.labeling)?.is_cointerval() {
                return Err(Error::Precondition(format!("labeling of part {k} is not a cointerval certificate")));
            }
            covered.extend(p.graph.edges().cloned());
        }
        if &covered != h.edge_set() {
            return Err(Error::Precondition("parts do not cover every edge".into()));
        }
        Ok(Cover { parts })
    }

    /// One single-edge part per edge.
    pub fn singletons(h: &Hypergraph) -> Result<Cover> {
        let parts = h
            .edges()
            .map(|e| {
                let graph = h.with_edges([e])?;
                Ok(CoverPart { labeling: VertexRelabeling::identity(h.vertices()), graph })
            })
            .collect::<Result<Vec<_>>>()?;
        Cover::new(h, parts)
    }

    pub fn parts(&self) -> &[CoverPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parts {
            let edges: Vec<String> =
                p.graph.edges().map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
            writeln!(f, "part: {} | labels: {}", edges.join(", "), p.labeling)?;
        }
        Ok(())
    }
}

/// The join of the part complexes, verified as a resolution of `I_H`.
pub fn glued_resolution(h: &Hypergraph, cover: &Cover) -> Result<(LabeledComplex, VerificationReport)> {
    Cover::new(h, cover.parts.clone())?;
    let factors = cover.parts.iter().map(CoverPart::complex).collect::<Result<Vec<_>>>()?;
    let x = join(&factors)?;
    let report = verify_resolution(&x)?;
    Ok((x, report))
}

/// Smallest number of parts in a cover of `E(H)` by family members, with a
/// witness. Only inclusion-maximal members are used as parts, which loses
/// nothing; among minimum covers by such members the one whose sorted part
/// edge lists are lexicographically least is returned.
pub fn linear_width(h: &Hypergraph, family: Family) -> Result<(usize, Cover)> {
    width_search(h, family, false)
}

/// As [`linear_width`], but every part must belong to the family under the
/// labels of `H` itself. Fails with a precondition error when no such cover
/// exists, which happens for strongly stable parts.
pub fn linear_width_strict(h: &Hypergraph, family: Family) -> Result<(usize, Cover)> {
    width_search(h, family, true)
}

fn width_search(h: &Hypergraph, family: Family, strict: bool) -> Result<(usize, Cover)> {
    let edges: Vec<Edge> = h.edges().cloned().collect();
    let e = edges.len();
    if e > LINEAR_WIDTH_MAX_EDGES {
        return Err(Error::TooLarge(format!("linear width limited to {LINEAR_WIDTH_MAX_EDGES} edges, got {e}")));
    }
    if e == 0 {
        return Ok((0, Cover { parts: Vec::new() }));
    }
    let part = |mask: u32| h.with_edges((0..e).filter(|b| mask >> b & 1 == 1).map(|b| &edges[b]));
    let certificates: Vec<Option<VertexRelabeling>> = (0u32..1 << e)
        .into_par_iter()
        .map(|mask| if mask == 0 { None } else { family.certify(&part(mask).expect("subgraph"), strict) })
        .collect();

    let members: Vec<u32> = (1u32..1 << e).filter(|&m| certificates[m as usize].is_some()).collect();
    let mut maximal: Vec<u32> = members
        .iter()
        .copied()
        .filter(|&m| !members.iter().any(|&o| o != m && o & m == m))
        .collect();
    // order parts by their sorted edge lists; bit b is the b-th smallest edge
    let key = |m: u32| -> Vec<usize> { (0..e).filter(|b| m >> b & 1 == 1).collect() };
    maximal.sort_by_key(|&m| key(m));

    let full = (1u32 << e) - 1;
    for k in 1..=e {
        let mut chosen = Vec::with_capacity(k);
        if first_cover(&maximal, 0, k, 0, full, &mut chosen) {
            let parts = chosen
                .iter()
                .map(|&m| {
                    let graph = part(m)?;
                    let labeling = certificates[m as usize].clone().expect("member");
                    Ok(CoverPart { graph, labeling })
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok((k, Cover::new(h, parts)?));
        }
    }
    // only reachable with fixed labels: a lone edge need not be strongly stable
    Err(Error::Precondition(format!("no cover by {family} parts under the given labels")))
}

/// Lexicographically first choice of `k` members (in the given order) whose
/// union is `full`.
fn first_cover(members: &[u32], start: usize, k: usize, covered: u32, full: u32, chosen: &mut Vec<u32>) -> bool {
    if covered == full {
        return true;
    }
    if chosen.len() == k {
        return false;
    }
    let remaining = k - chosen.len();
    let widest = members[start..].iter().map(|m| (m & !covered).count_ones()).max().unwrap_or(0);
    if widest * (remaining as u32) < (full & !covered).count_ones() {
        return false;
    }
    for i in start..members.len() {
        if members[i] & !covered == 0 {
            continue;
        }
        chosen.push(members[i]);
        if first_cover(members, i + 1, k, covered | members[i], full, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::{betti_hochster, face_table, taylor_complex, verify_minimal};
    use crate::homology::FieldSpec;

    fn point(label: &[i32]) -> LabeledComplex {
        let c = Cell::new(vec![label.to_vec()]).unwrap();
        LabeledComplex::from_product_cells([(c, Multidegree::new(label.iter().copied()))]).unwrap()
    }

    #[test]
    fn joins_of_points_and_segments() {
        let pts: Vec<LabeledComplex> = (1..=4).map(|v| point(&[v])).collect();
        let simplex = join(&pts).unwrap();
        assert_eq!(simplex.f_vector(), vec![4, 6, 4, 1]);
        let seg = taylor_complex(&Hypergraph::on_range(2, 3, [[1, 2], [2, 3]]).unwrap()).unwrap();
        let j = join(&[seg.clone(), seg]).unwrap();
        assert_eq!(j.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(j.factors(), 2);
    }

    #[test]
    fn downsets_factor() {
        let h1 = Hypergraph::on_range(2, 4, [[1, 2], [1, 3]]).unwrap();
        let h2 = Hypergraph::on_range(2, 4, [[3, 4]]).unwrap();
        let xs = [build_complex(&h1), build_complex(&h2)];
        let j = join(&xs).unwrap();
        for alpha in j.lcm_lattice() {
            let parts: Vec<LabeledComplex> = xs.iter().map(|x| x.downset_leq(&alpha)).collect();
            assert_eq!(j.downset_leq(&alpha), join(&parts).unwrap(), "{alpha}");
        }
    }

    #[test]
    fn glued_two_k2_is_taylor() {
        let h = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        let (x, report) = glued_resolution(&h, &Cover::singletons(&h).unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(x.f_vector(), vec![2, 1]);
        assert_eq!(face_table(&x), face_table(&taylor_complex(&h).unwrap()));
        let (k, cover) = linear_width(&h, Family::Cointerval).unwrap();
        assert_eq!(k, 2);
        assert_eq!(cover.parts()[0].graph.edges().cloned().collect::<Vec<_>>(), vec![vec![1, 2]]);
    }

    #[test]
    fn single_part_cover_is_x_h() {
        let h = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]).unwrap();
        let (k, cover) = linear_width(&h, Family::Cointerval).unwrap();
        assert_eq!(k, 1);
        let (x, report) = glued_resolution(&h, &cover).unwrap();
        assert!(report.passed() && report.minimal);
        assert_eq!(x.f_vector(), vec![7, 11, 6, 1]);
    }

    #[test]
    fn relabeled_parts_map_back() {
        // the 4-cycle 1-2-3-4 is cointerval only after relabeling
        let c4 = Hypergraph::on_range(2, 4, [[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap();
        assert!(!c4.is_cointerval());
        let (k, cover) = linear_width(&c4, Family::Cointerval).unwrap();
        assert_eq!(k, 1);
        let (x, report) = glued_resolution(&c4, &cover).unwrap();
        assert!(report.passed() && verify_minimal(&x));
        let mut labels: Vec<Multidegree> = x.vertex_labels().cloned().collect();
        labels.sort();
        let edges: Vec<Multidegree> = c4.edges().map(|e| Multidegree::new(e.iter().copied())).collect();
        assert_eq!(labels, edges);
        let (strict, _) = linear_width_strict(&c4, Family::Cointerval).unwrap();
        assert_eq!(strict, 3);
        assert!(matches!(linear_width_strict(&c4, Family::StronglyStable), Err(Error::Precondition(_))));
    }

    #[test]
    fn glued_complex_bounds_betti_numbers() {
        let h = Hypergraph::on_range(2, 6, [[1, 2], [3, 4], [5, 6], [1, 4]]).unwrap();
        let (_, cover) = linear_width(&h, Family::Cointerval).unwrap();
        let (x, report) = glued_resolution(&h, &cover).unwrap();
        assert!(report.passed());
        let glued = face_table(&x).coarse();
        for (ij, b) in betti_hochster(&h, FieldSpec::GF2).unwrap().coarse() {
            assert!(glued.get(&ij).copied().unwrap_or(0) >= b);
        }
    }

    #[test]
    fn invalid_covers() {
        let h = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        let part = CoverPart {
            graph: h.with_edges([[1, 2]]).unwrap(),
            labeling: VertexRelabeling::identity(h.vertices()),
        };
        assert!(Cover::new(&h, vec![part]).is_err());
        let big = Hypergraph::complete(2, 6).unwrap();
        assert!(matches!(linear_width(&big, Family::Cointerval), Err(Error::TooLarge(_))));
    }
}
