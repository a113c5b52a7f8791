//! Cellular resolution checks and Betti tables.
//!
//! Homological degrees follow the convention that a cell of dimension `i`
//! contributes to `β_{i,α}`; for a `d`-linear resolution this means
//! `i = |α| - d`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::complex::{build_complex, Cell, LabeledComplex, Multidegree};
use crate::error::{Error, Result};
use crate::homology::{is_acyclic, reduced_homology, Acyclicity, FieldSpec};
use crate::hypergraph::{Hypergraph, Vertex};

/// Largest edge count accepted by [`taylor_complex`].
pub const TAYLOR_MAX_EDGES: usize = 16;

/// Finely graded Betti numbers `β_{i,α}`; zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Multidegree), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `beta` to the entry at `(i, alpha)`.
    pub fn add(&mut self, i: usize, alpha: Multidegree, beta: usize) {
        if beta > 0 {
            *self.entries.entry((i, alpha)).or_default() += beta;
        }
    }

    pub fn get(&self, i: usize, alpha: &Multidegree) -> usize {
        // BTreeMap lookups need an owned key here
        self.entries.get(&(i, alpha.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, α)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> + '_ {
        self.entries.iter().map(|((i, a), b)| (*i, a, *b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_{i,j} = Σ_{|α| = j} β_{i,α}`.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (i, a, b) in self.iter() {
            *out.entry((i, a.len())).or_default() += b;
        }
        out
    }

    /// `β_i = Σ_α β_{i,α}` for `i = 0..=pdim`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.pdim().map_or(0, |p| p + 1)];
        for (i, _, b) in self.iter() {
            out[i] += b;
        }
        out
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn pdim(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Renames the variables of every multidegree.
    pub fn map_labels(&self, f: impl Fn(Vertex) -> Vertex) -> BettiTable {
        let mut out = BettiTable::new();
        for (i, a, b) in self.iter() {
            out.add(i, a.map(&f), b);
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a, b) in self.iter() {
            writeln!(f, "{i} | {a} | {b}")?;
        }
        writeln!(f, "coarse:")?;
        for ((i, j), b) in self.coarse() {
            writeln!(f, "{i} | {j} | {b}")?;
        }
        let totals: Vec<String> = self.totals().iter().map(usize::to_string).collect();
        write!(f, "totals:")?;
        for t in totals {
            write!(f, " {t}")?;
        }
        writeln!(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DownsetStatus {
    Acyclic,
    /// Nonzero reduced homology over the recorded field.
    Failed { field: FieldSpec },
    Skipped,
}

/// Outcome of [`verify_resolution`]: one status per element of the lcm lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub statuses: Vec<(Multidegree, DownsetStatus)>,
    pub minimal: bool,
    pub fields: Vec<FieldSpec>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.witnesses().next().is_none()
    }

    /// Multidegrees whose downset is not acyclic.
    pub fn witnesses(&self) -> impl Iterator<Item = &Multidegree> + '_ {
        self.statuses.iter().filter(|(_, s)| matches!(s, DownsetStatus::Failed { .. })).map(|(a, _)| a)
    }

    /// Number of downsets actually checked.
    pub fn checked(&self) -> usize {
        self.statuses.iter().filter(|(_, s)| *s != DownsetStatus::Skipped).count()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: Vec<String> = self.fields.iter().map(FieldSpec::to_string).collect();
        writeln!(f, "resolution: {}", if self.passed() { "yes" } else { "no" })?;
        writeln!(f, "minimal: {}", if self.minimal { "yes" } else { "no" })?;
        writeln!(f, "fields: {}", fields.join(" "))?;
        writeln!(f, "downsets checked: {}", self.checked())?;
        for (a, s) in &self.statuses {
            if let DownsetStatus::Failed { field } = s {
                writeln!(f, "witness: {a} over {field}")?;
            }
        }
        Ok(())
    }
}

/// Checks `X_{≤α}` for acyclicity over GF(2) and then the rationals.
pub fn verify_resolution(x: &LabeledComplex) -> Result<VerificationReport> {
    verify_resolution_over(x, &[FieldSpec::GF2, FieldSpec::RATIONALS])
}

/// Checks `X_{≤α}` for every `α` in the lcm lattice, over each field in turn.
pub fn verify_resolution_over(x: &LabeledComplex, fields: &[FieldSpec]) -> Result<VerificationReport> {
    let statuses = x
        .lcm_lattice()
        .into_par_iter()
        .map(|alpha| {
            let down = x.downset_leq(&alpha);
            for &field in fields {
                match is_acyclic(&down, field)? {
                    Acyclicity::Acyclic => {}
                    Acyclicity::Empty => return Ok((alpha, DownsetStatus::Skipped)),
                    Acyclicity::NotAcyclic => return Ok((alpha, DownsetStatus::Failed { field })),
                }
            }
            Ok((alpha, DownsetStatus::Acyclic))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport { statuses, minimal: verify_minimal(x), fields: fields.to_vec() })
}

/// Every facet label strictly divides the label of the cell above it.
pub fn verify_minimal(x: &LabeledComplex) -> bool {
    (0..x.len()).all(|k| {
        let label = &x.cells()[k].label;
        x.facets_of(k).iter().all(|&(f, _)| x.cells()[f].label.is_proper_subset(label))
    })
}

/// Counts cells of `X_H` by dimension and label.
pub fn betti_from_faces(h: &Hypergraph) -> Result<BettiTable> {
    if !h.is_cointerval() {
        return Err(Error::Precondition("hypergraph is not cointerval".into()));
    }
    Ok(face_table(&build_complex(h)))
}

/// `β_{dim σ, label σ}` summed over the cells of `x`.
pub fn face_table(x: &LabeledComplex) -> BettiTable {
    let mut table = BettiTable::new();
    for e in x.cells() {
        table.add(e.dim, e.label.clone(), 1);
    }
    table
}

/// `β_{i,α} = dim H̃_{i-1}(X_{<α})` for `i ≥ 1`, with `β_0` read off the
/// vertex labels. Fails if `x` is not a resolution.
pub fn betti_from_downset_homology(x: &LabeledComplex, field: FieldSpec) -> Result<BettiTable> {
    let report = verify_resolution_over(x, &[field])?;
    if let Some(alpha) = report.witnesses().next() {
        return Err(Error::Precondition(format!("not a resolution: X_<={alpha} is not acyclic over {field}")));
    }
    let rows = x
        .lcm_lattice()
        .into_par_iter()
        .map(|alpha| {
            let h = reduced_homology(&x.downset_lt(&alpha), field)?;
            let row: Vec<(usize, usize)> = h
                .iter()
                .filter(|&(q, r)| q >= 0 && r > 0)
                .map(|(q, r)| (q as usize + 1, r))
                .collect();
            Ok((alpha, row))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = BettiTable::new();
    let mut generators: Vec<&Multidegree> = x.vertex_labels().collect();
    generators.sort();
    generators.dedup();
    for g in generators {
        table.add(0, g.clone(), 1);
    }
    for (alpha, row) in rows {
        for (i, r) in row {
            table.add(i, alpha.clone(), r);
        }
    }
    Ok(table)
}

/// The independence complex of `H` as a simplicial complex of single-block
/// cells labeled by their vertex sets. Includes isolated vertices.
pub fn independence_complex(h: &Hypergraph) -> Result<LabeledComplex> {
    let vs = h.vertices();
    if vs.len() > 20 {
        return Err(Error::TooLarge(format!("independence complex on {} vertices", vs.len())));
    }
    let edge_masks: Vec<u32> = h
        .edges()
        .map(|e| e.iter().map(|v| 1u32 << vs.binary_search(v).expect("edge vertex")).sum())
        .collect();
    let faces = (1u32..(1 << vs.len())).filter(|m| edge_masks.iter().all(|e| m & e != *e)).map(|m| {
        let face: Vec<Vertex> = (0..vs.len()).filter(|b| m >> b & 1 == 1).map(|b| vs[b]).collect();
        (Cell::new(vec![face.clone()]).expect("nonempty block"), Multidegree::new(face))
    });
    LabeledComplex::from_product_cells(faces)
}

/// Hochster's formula: `β_{i,α} = dim H̃_{|α|-i-2}(Ind(H)[α])` over all
/// `α ⊆ V(H)`. Independent of any cell complex; works for every `H`.
pub fn betti_hochster(h: &Hypergraph, field: FieldSpec) -> Result<BettiTable> {
    let ind = independence_complex(h)?;
    let vs = h.vertices();
    let rows = (1u32..(1 << vs.len()))
        .into_par_iter()
        .map(|m| {
            let alpha = Multidegree::new((0..vs.len()).filter(|b| m >> b & 1 == 1).map(|b| vs[b]));
            let restricted = ind.downset_leq(&alpha);
            let hom = reduced_homology(&restricted, field)?;
            let row: Vec<(usize, usize)> = hom
                .iter()
                .filter(|&(_, r)| r > 0)
                .filter_map(|(q, r)| {
                    let i = alpha.len() as isize - q - 2;
                    (i >= 0).then_some((i as usize, r))
                })
                .collect();
            Ok((alpha, row))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = BettiTable::new();
    for (alpha, row) in rows {
        for (i, r) in row {
            table.add(i, alpha.clone(), r);
        }
    }
    Ok(table)
}

/// Counts products `S_1 × ⋯ × S_d` of nonempty sets, contained in the set of
/// increasing edge tuples, with `S_1 ∪ ⋯ ∪ S_d = V`. Exhaustive over the
/// `d^|V|` ways to distribute `V` among the factors.
pub fn cube_betti(h: &Hypergraph, v: &[Vertex]) -> Result<usize> {
    if !h.is_cointerval() {
        return Err(Error::Precondition("hypergraph is not cointerval".into()));
    }
    if let Some(u) = v.iter().find(|u| !h.has_vertex(**u)) {
        return Err(Error::UnknownVertex(*u));
    }
    let v = Multidegree::new(v.iter().copied());
    let d = h.d();
    let total = d.checked_pow(v.len() as u32).filter(|t| *t <= 1 << 24);
    let Some(total) = total else {
        return Err(Error::TooLarge(format!("{d}^{} cube assignments", v.len())));
    };
    let mut count = 0;
    for code in 0..total {
        let mut sets = vec![Vec::new(); d];
        let mut c = code;
        for &u in v.as_slice() {
            sets[c % d].push(u);
            c /= d;
        }
        if sets.iter().any(Vec::is_empty) {
            continue;
        }
        if all_transversals(&sets, &mut Vec::with_capacity(d), &|t| {
            t.windows(2).all(|w| w[0] < w[1]) && h.has_edge(t)
        }) {
            count += 1;
        }
    }
    Ok(count)
}

fn all_transversals(sets: &[Vec<Vertex>], prefix: &mut Vec<Vertex>, ok: &impl Fn(&[Vertex]) -> bool) -> bool {
    let Some((first, rest)) = sets.split_first() else { return ok(prefix) };
    first.iter().all(|&u| {
        prefix.push(u);
        let r = all_transversals(rest, prefix, ok);
        prefix.pop();
        r
    })
}

/// The Taylor simplex: one vertex per generator (edges in sorted order,
/// numbered from 1), every face labeled by the lcm of its generators.
pub fn taylor_complex(h: &Hypergraph) -> Result<LabeledComplex> {
    let edges: Vec<&Vec<Vertex>> = h.edges().collect();
    if edges.is_empty() {
        return Err(Error::Precondition("Taylor complex needs at least one edge".into()));
    }
    if edges.len() > TAYLOR_MAX_EDGES {
        return Err(Error::TooLarge(format!("Taylor complex on {} generators", edges.len())));
    }
    let cells = (1u32..(1 << edges.len())).map(|m| {
        let members: Vec<usize> = (0..edges.len()).filter(|b| m >> b & 1 == 1).collect();
        let label = Multidegree::new(members.iter().flat_map(|&b| edges[b].iter().copied()));
        let block = members.iter().map(|&b| b as Vertex + 1).collect();
        (Cell::new(vec![block]).expect("nonempty block"), label)
    });
    LabeledComplex::from_product_cells(cells)
}

/// `β_{i,α} = 0` unless `|α| = i + d`.
pub fn is_d_linear(b: &BettiTable, d: usize) -> bool {
    b.iter().all(|(i, a, _)| a.len() == i + d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::JoinCell;

    fn example() -> Hypergraph {
        Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]).unwrap()
    }

    fn md(v: &[Vertex]) -> Multidegree {
        Multidegree::new(v.iter().copied())
    }

    #[test]
    fn worked_example_tables() {
        let h = example();
        let b = betti_from_faces(&h).unwrap();
        assert_eq!(b.totals(), vec![7, 11, 6, 1]);
        assert_eq!(b.get(1, &md(&[1, 2, 4])), 2);
        assert_eq!(b.get(2, &md(&[1, 2, 3, 5])), 2);
        assert_eq!(b.get(3, &md(&[1, 2, 3, 4, 5])), 1);
        assert_eq!(b.get(2, &md(&[1, 2, 3, 4])), 1);
        assert!(is_d_linear(&b, 2));
        assert_eq!(b.pdim(), Some(3));
        let x = build_complex(&h);
        assert_eq!(b.pdim(), x.dim());
        for field in FieldSpec::STANDARD {
            assert_eq!(betti_from_downset_homology(&x, field).unwrap(), b);
            assert_eq!(betti_hochster(&h, field).unwrap(), b);
        }
    }

    #[test]
    fn triangle() {
        let k3 = Hypergraph::complete(2, 3).unwrap();
        let b = betti_from_faces(&k3).unwrap();
        assert_eq!(b.get(1, &md(&[1, 2, 3])), 2);
        assert_eq!(b.totals(), vec![3, 2]);
        let h = betti_hochster(&k3, FieldSpec::GF2).unwrap();
        assert_eq!(h.get(1, &md(&[1, 2, 3])), 2);
    }

    #[test]
    fn display_format() {
        let b = betti_from_faces(&Hypergraph::complete(2, 3).unwrap()).unwrap();
        assert_eq!(
            b.to_string(),
            "0 | 1 2 | 1\n0 | 1 3 | 1\n0 | 2 3 | 1\n1 | 1 2 3 | 2\ncoarse:\n0 | 2 | 3\n1 | 3 | 2\ntotals: 3 2\n"
        );
    }

    #[test]
    fn verification_and_mutilation() {
        let x = build_complex(&example());
        let report = verify_resolution(&x).unwrap();
        assert!(report.passed() && report.minimal);
        let top = x.cells().last().unwrap().key.clone();
        assert_eq!(top.dim(), 3);
        let broken = x.without_cell(&top).unwrap();
        let report = verify_resolution(&broken).unwrap();
        assert!(!report.passed());
        assert_eq!(report.witnesses().cloned().collect::<Vec<_>>(), vec![md(&[1, 2, 3, 4, 5])]);
        assert!(betti_from_downset_homology(&broken, FieldSpec::GF2).is_err());
    }

    #[test]
    fn taylor_complexes() {
        let one = Hypergraph::on_range(2, 2, [[1, 2]]).unwrap();
        assert_eq!(taylor_complex(&one).unwrap().f_vector(), vec![1]);
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        let t = taylor_complex(&two_k2).unwrap();
        assert_eq!(t.f_vector(), vec![2, 1]);
        assert_eq!(t.cells()[2].label, md(&[1, 2, 3, 4]));
        assert!(verify_resolution(&t).unwrap().passed());
        let b = betti_from_downset_homology(&t, FieldSpec::RATIONALS).unwrap();
        assert_eq!(b.get(1, &md(&[1, 2, 3, 4])), 1);
        assert!(!is_d_linear(&b, 2));
        assert_eq!(b, betti_hochster(&two_k2, FieldSpec::RATIONALS).unwrap());
        let k3 = taylor_complex(&Hypergraph::complete(2, 3).unwrap()).unwrap();
        assert!(verify_resolution(&k3).unwrap().passed());
        assert!(!verify_minimal(&k3));
        assert!(taylor_complex(&Hypergraph::on_range(2, 2, Vec::<Vec<i32>>::new()).unwrap()).is_err());
    }

    #[test]
    fn join_of_equal_points_is_not_minimal() {
        let point = Cell::new(vec![vec![1], vec![2]]).unwrap();
        let l = md(&[1, 2]);
        let x = LabeledComplex::from_cells(
            2,
            [
                (JoinCell::new(vec![Some(point.clone()), None]).unwrap(), l.clone()),
                (JoinCell::new(vec![None, Some(point.clone())]).unwrap(), l.clone()),
                (JoinCell::new(vec![Some(point.clone()), Some(point)]).unwrap(), l),
            ],
        )
        .unwrap();
        assert!(!verify_minimal(&x));
        assert!(verify_resolution(&x).unwrap().passed());
    }

    #[test]
    fn cubes() {
        let h = example();
        assert_eq!(cube_betti(&h, &[1, 2]).unwrap(), 1);
        assert_eq!(cube_betti(&h, &[1, 2, 3, 4, 5]).unwrap(), 1);
        assert_eq!(cube_betti(&h, &[1, 2, 3, 4]).unwrap(), 1);
        assert_eq!(cube_betti(&h, &[1, 2, 4]).unwrap(), 2);
        assert!(cube_betti(&h, &[1, 9]).is_err());
        let b = betti_from_faces(&h).unwrap();
        for m in 1u32..32 {
            let v: Vec<Vertex> = (0..5).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect();
            let expected = if v.len() >= 2 { b.get(v.len() - 2, &md(&v)) } else { 0 };
            assert_eq!(cube_betti(&h, &v).unwrap(), expected, "{v:?}");
        }
    }

    #[test]
    fn hochster_on_worked_example_top_degree() {
        let ind = independence_complex(&example()).unwrap();
        // components {1} and the path 2-3-4-5
        let h = reduced_homology(&ind, FieldSpec::GF2).unwrap();
        assert_eq!(h.get(0), 1);
        assert_eq!(h.get(1), 0);
    }

    #[test]
    fn empty_table_is_linear() {
        assert!(is_d_linear(&BettiTable::new(), 3));
        assert_eq!(BettiTable::new().totals(), Vec::<usize>::new());
    }
}
