//! The staircase fine mixed subdivision of the dilated simplex `dΔ_m`.
//!
//! Maximal cells are Minkowski sums `B_1 + ⋯ + B_d` of coordinate simplices
//! `B_i = conv{e_{b_i}, …, e_{b_{i+1}}}` indexed by weakly increasing
//! sequences `1 = b_1 ≤ ⋯ ≤ b_{d+1} = m + 1`. Lattice points are degree-`d`
//! monomials in `m + 1` variables; polarization turns them into `d`-subsets
//! of `[m + d]`, and the subdivision restricted to the polarized edges of
//! `H` is isomorphic to `X_H`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::path::Path;

use rayon::prelude::*;

use crate::complex::{build_complex, Cell, Multidegree};
use crate::error::{Error, Result};
use crate::homology::{rank, FieldSpec};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::perm::{combinations, factorial};

/// Largest `m + d` for which [`Geometry`] is built (faces are enumerated).
pub const GEOMETRY_MAX_N: usize = 9;

/// `(b_1, …, b_{d+1})` with `1 = b_1 ≤ ⋯ ≤ b_{d+1} = m + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BSeq(Vec<usize>);

impl BSeq {
    pub fn new(b: Vec<usize>) -> Result<BSeq> {
        if b.len() < 2 || b[0] != 1 || b.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Precondition(format!("{b:?} is not a weakly increasing sequence from 1")));
        }
        Ok(BSeq(b))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn m(&self) -> usize {
        self.0[self.0.len() - 1] - 1
    }

    /// Coordinate indices of the simplex `B_i` (1-based `i`).
    pub fn block(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.0[i - 1]..=self.0[i]
    }

    /// `k_i = b_{i+1} - b_i`, summing to `m`.
    pub fn dimension_vector(&self) -> Vec<usize> {
        self.0.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

impl fmt::Display for BSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// All maximal cells of the staircase subdivision of `dΔ_m`, in
/// lexicographic order. There are `C(m + d - 1, d - 1)` of them.
pub fn enumerate_staircase(d: usize, m: usize) -> Result<Vec<BSeq>> {
    if d == 0 {
        return Err(Error::Uniformity { expected: "d >= 1", actual: d });
    }
    // interior values b_2..b_d form a weakly increasing (d-1)-tuple over [1, m+1]
    let inner = combinations(m + d - 1, d - 1);
    Ok(inner
        .into_iter()
        .map(|c| {
            let mut b = vec![1];
            b.extend(c.iter().enumerate().map(|(k, &x)| x + 1 - k));
            b.push(m + 1);
            BSeq(b)
        })
        .collect())
}

/// `m! / (k_1! ⋯ k_d!)`.
pub fn multinomial(k: &[usize]) -> u64 {
    let m: usize = k.iter().sum();
    k.iter().fold(factorial(m), |acc, &x| acc / factorial(x))
}

/// Sum of normalized volumes of the maximal cells; equals `d^m` when the
/// cells tile `dΔ_m`.
pub fn staircase_volume(d: usize, m: usize) -> Result<u64> {
    Ok(enumerate_staircase(d, m)?.iter().map(|b| multinomial(&b.dimension_vector())).sum())
}

/// `(i_1 ≤ ⋯ ≤ i_d) ↦ {i_1, i_2 + 1, …, i_d + d - 1}`.
pub fn polarize(multiset: &[usize], m: usize) -> Result<Vec<Vertex>> {
    let valid = multiset.first().is_some_and(|&x| x >= 1)
        && multiset.windows(2).all(|w| w[0] <= w[1])
        && multiset.last().is_some_and(|&x| x <= m + 1);
    if !valid {
        return Err(Error::Precondition(format!("{multiset:?} is not a weakly increasing tuple over [1, {}]", m + 1)));
    }
    Ok(multiset.iter().enumerate().map(|(k, &x)| (x + k) as Vertex).collect())
}

/// Inverse of [`polarize`].
pub fn depolarize(set: &[Vertex]) -> Result<Vec<usize>> {
    let valid = set.first().is_some_and(|&x| x >= 1) && set.windows(2).all(|w| w[0] < w[1]);
    if !valid {
        return Err(Error::Precondition(format!("{set:?} is not a strictly increasing set of positive labels")));
    }
    Ok(set.iter().enumerate().map(|(k, &x)| x as usize - k).collect())
}

/// `σ_i = {b_i + i - 1, …, b_{i+1} + i - 1}`.
pub fn cell_to_blocks(b: &BSeq) -> Cell {
    let blocks = (1..=b.d())
        .map(|i| b.block(i).map(|x| (x + i - 1) as Vertex).collect())
        .collect();
    Cell::new(blocks).expect("staircase blocks are increasing")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeoVertex {
    /// Exponent vector in `ℤ^{m+1}`, entries summing to `d`.
    pub coords: Vec<usize>,
    /// The same point as a weakly increasing `d`-tuple of coordinate indices.
    pub multiset: Vec<usize>,
    /// Polarized squarefree label.
    pub label: Multidegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeoCell {
    pub bseq: BSeq,
    pub vertices: Vec<usize>,
}

/// A face `C_1 + ⋯ + C_d` with `C_i ⊆ B_i` for some maximal cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeoFace {
    pub parts: Vec<Vec<usize>>,
    pub dim: usize,
    pub vertices: Vec<usize>,
    /// Faces of one lower dimension whose point sets lie in this one.
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub d: usize,
    pub m: usize,
    pub vertices: Vec<GeoVertex>,
    pub cells: Vec<GeoCell>,
    pub faces: Vec<GeoFace>,
}

fn nonempty_subsets(range: std::ops::RangeInclusive<usize>) -> Vec<Vec<usize>> {
    let items: Vec<usize> = range.collect();
    (1u32..(1 << items.len()))
        .map(|mask| (0..items.len()).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect())
        .collect()
}

fn product_of(parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    parts.iter().fold(vec![Vec::new()], |acc, part| {
        acc.iter()
            .flat_map(|prefix| {
                part.iter().map(move |&x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

impl Geometry {
    pub fn n(&self) -> usize {
        self.m + self.d
    }

    /// Face counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in &self.faces {
            if f.len() <= face.dim {
                f.resize(face.dim + 1, 0);
            }
            f[face.dim] += 1;
        }
        f
    }

    /// Dimension of the affine span of a face's vertices.
    pub fn affine_dimension(&self, face: &GeoFace) -> usize {
        let Some((&first, rest)) = face.vertices.split_first() else { return 0 };
        let base = &self.vertices[first].coords;
        let rows: Vec<Vec<i64>> = rest
            .iter()
            .map(|&v| self.vertices[v].coords.iter().zip(base).map(|(a, b)| *a as i64 - *b as i64).collect())
            .collect();
        rank(&rows, FieldSpec::RATIONALS)
    }

    /// The label of a face: the union of its vertex labels.
    pub fn face_label(&self, face: &GeoFace) -> Multidegree {
        face.vertices.iter().fold(Multidegree::default(), |acc, &v| acc.union(&self.vertices[v].label))
    }

    /// The subcomplex induced on the vertices whose label satisfies `keep`,
    /// with vertex and face ids renumbered in order.
    pub fn induced(&self, keep: impl Fn(&Multidegree) -> bool) -> Geometry {
        let mut vertex_map = vec![None; self.vertices.len()];
        let mut vertices = Vec::new();
        for (k, v) in self.vertices.iter().enumerate() {
            if keep(&v.label) {
                vertex_map[k] = Some(vertices.len());
                vertices.push(v.clone());
            }
        }
        let remap = |ids: &[usize]| -> Option<Vec<usize>> { ids.iter().map(|&v| vertex_map[v]).collect() };
        let cells = self
            .cells
            .iter()
            .filter_map(|c| Some(GeoCell { bseq: c.bseq.clone(), vertices: remap(&c.vertices)? }))
            .collect();
        let mut face_map = vec![None; self.faces.len()];
        let mut faces = Vec::new();
        for (k, f) in self.faces.iter().enumerate() {
            if let Some(ids) = remap(&f.vertices) {
                face_map[k] = Some(faces.len());
                faces.push(GeoFace { parts: f.parts.clone(), dim: f.dim, vertices: ids, facets: f.facets.clone() });
            }
        }
        for f in &mut faces {
            f.facets = f.facets.iter().map(|&k| face_map[k].expect("facets of kept faces are kept")).collect();
        }
        Geometry { d: self.d, m: self.m, vertices, cells, faces }
    }

    /// Text export: a `d m n` header, then `vertices:` lines
    /// `id coords multiset label`, `cells:` lines `bseq | vertex ids`, and
    /// `faces:` lines `id dim | vertex ids | facet ids`.
    pub fn to_text(&self) -> String {
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(" ");
        let mut out = format!("{} {} {}\nvertices:\n", self.d, self.m, self.n());
        for (id, v) in self.vertices.iter().enumerate() {
            let coords = join(&mut v.coords.iter().map(usize::to_string));
            let multiset = join(&mut v.multiset.iter().map(usize::to_string));
            writeln!(out, "{id} {coords} {multiset} {}", v.label).unwrap();
        }
        out.push_str("cells:\n");
        for c in &self.cells {
            writeln!(out, "{} | {}", c.bseq, join(&mut c.vertices.iter().map(usize::to_string))).unwrap();
        }
        out.push_str("faces:\n");
        for (id, face) in self.faces.iter().enumerate() {
            let vs = join(&mut face.vertices.iter().map(usize::to_string));
            let fs = join(&mut face.facets.iter().map(usize::to_string));
            let line = format!("{id} {} | {vs} | {fs}", face.dim);
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// The whole subdivision of `dΔ_m` with every face.
pub fn staircase_geometry(d: usize, m: usize) -> Result<Geometry> {
    build_geometry(d, m, |_| true)
}

fn build_geometry(d: usize, m: usize, keep: impl Fn(&[Vertex]) -> bool + Sync) -> Result<Geometry> {
    if m + d > GEOMETRY_MAX_N {
        return Err(Error::TooLarge(format!("geometry of X_{{{d},{}}}", m + d)));
    }
    let bseqs = enumerate_staircase(d, m)?;
    let label_of = |t: &[usize]| -> Vec<Vertex> { polarize(t, m).expect("tuple in range") };

    let mut vertices = Vec::new();
    let mut vertex_id: HashMap<Vec<usize>, usize> = HashMap::new();
    for set in combinations(m + d, d) {
        let set: Vec<Vertex> = set.iter().map(|&x| x as Vertex + 1).collect();
        if !keep(&set) {
            continue;
        }
        let multiset = depolarize(&set)?;
        let mut coords = vec![0; m + 1];
        for &x in &multiset {
            coords[x - 1] += 1;
        }
        vertex_id.insert(multiset.clone(), vertices.len());
        vertices.push(GeoVertex { coords, multiset, label: Multidegree::new(set) });
    }

    type FaceParts = Vec<Vec<Vec<usize>>>;
    let per_cell: Vec<(Option<GeoCell>, FaceParts)> = bseqs
        .par_iter()
        .map(|b| {
            let choices: Vec<Vec<Vec<usize>>> = (1..=d).map(|i| nonempty_subsets(b.block(i))).collect();
            let faces: Vec<Vec<Vec<usize>>> = product_of_sets(&choices)
                .into_iter()
                .filter(|parts| product_of(parts).iter().all(|t| keep(&label_of(t))))
                .collect();
            let full: Vec<Vec<usize>> = (1..=d).map(|i| b.block(i).collect()).collect();
            let cell = product_of(&full).iter().all(|t| keep(&label_of(t))).then(|| {
                let mut ids: Vec<usize> = product_of(&full).iter().map(|t| vertex_id[t]).collect();
                ids.sort_unstable();
                GeoCell { bseq: b.clone(), vertices: ids }
            });
            (cell, faces)
        })
        .collect();

    let mut cells = Vec::new();
    let mut face_keys: BTreeSet<(usize, Vec<Vec<usize>>)> = BTreeSet::new();
    for (cell, faces) in per_cell {
        cells.extend(cell);
        face_keys.extend(faces.into_iter().map(|p| (p.iter().map(|c| c.len() - 1).sum(), p)));
    }
    let mut faces: Vec<GeoFace> = face_keys
        .into_iter()
        .map(|(dim, parts)| {
            let mut ids: Vec<usize> = product_of(&parts).iter().map(|t| vertex_id[t]).collect();
            ids.sort_unstable();
            GeoFace { parts, dim, vertices: ids, facets: Vec::new() }
        })
        .collect();
    let incidences: Vec<Vec<usize>> = faces
        .par_iter()
        .map(|g| {
            faces
                .iter()
                .enumerate()
                .filter(|(_, f)| f.dim + 1 == g.dim && is_sorted_subset(&f.vertices, &g.vertices))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    for (face, facets) in faces.iter_mut().zip(incidences) {
        face.facets = facets;
    }
    Ok(Geometry { d, m, vertices, cells, faces })
}

fn product_of_sets(choices: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    choices.iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |c| {
                    let mut t = prefix.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect()
    })
}

fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// The subcomplex of `X_{d,n}` induced on the polarized edges of `H`, after
/// checking that its face poset matches `X_H`.
pub fn restrict_to_graph(d: usize, n: usize, h: &Hypergraph) -> Result<Geometry> {
    if h.d() != d {
        return Err(Error::Uniformity { expected: "matching uniformity", actual: h.d() });
    }
    if n < d || !h.is_standard_range() || h.n() != n {
        return Err(Error::Precondition(format!("vertex set must be [{n}] with n >= d")));
    }
    let g = build_geometry(d, n - d, |e| h.has_edge(e))?;
    check_embedding(&g, h)?;
    Ok(g)
}

/// Checks that shifting the parts of each face (`C_i + i - 1`) is a
/// dimension- and label-preserving isomorphism of face posets onto `X_H`,
/// with geometric incidence matching the cell boundary.
pub fn check_embedding(g: &Geometry, h: &Hypergraph) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(msg));
    let x = build_complex(h);
    if x.len() != g.faces.len() {
        return fail(format!("{} faces but {} cells", g.faces.len(), x.len()));
    }
    let to_cell = |face: &GeoFace| {
        let blocks = face.parts.iter().enumerate().map(|(i, c)| c.iter().map(|&v| (v + i) as Vertex).collect()).collect();
        Cell::new(blocks)
    };
    let cells: Vec<Cell> = g.faces.iter().map(to_cell).collect::<Result<_>>()?;
    let position: HashMap<&Cell, usize> = cells.iter().enumerate().map(|(k, c)| (c, k)).collect();
    for (k, face) in g.faces.iter().enumerate() {
        let cell = &cells[k];
        let Some(entry) = x.position(&crate::complex::JoinCell::single(cell.clone())).map(|p| &x.cells()[p]) else {
            return fail(format!("face {k} maps to {cell}, not a cell of X_H"));
        };
        if entry.dim != face.dim || g.affine_dimension(face) != face.dim {
            return fail(format!("dimension mismatch at face {k}"));
        }
        if entry.label != g.face_label(face) {
            return fail(format!("label mismatch at face {k}"));
        }
        let mut expected: Vec<usize> = cell.facets().iter().map(|(f, _)| position[f]).collect();
        expected.sort_unstable();
        if expected != face.facets {
            return fail(format!("incidence mismatch at face {k}"));
        }
    }
    Ok(())
}

/// Writes [`Geometry::to_text`] to `path`.
pub fn export_geometry(g: &Geometry, path: &Path) -> Result<()> {
    std::fs::write(path, g.to_text())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::binomial;

    fn seqs(d: usize, m: usize) -> Vec<Vec<usize>> {
        enumerate_staircase(d, m).unwrap().into_iter().map(|b| b.0).collect()
    }

    #[test]
    fn printed_examples() {
        assert_eq!(seqs(2, 3), vec![vec![1, 1, 4], vec![1, 2, 4], vec![1, 3, 4], vec![1, 4, 4]]);
        assert_eq!(
            seqs(3, 2),
            vec![
                vec![1, 1, 1, 3],
                vec![1, 1, 2, 3],
                vec![1, 1, 3, 3],
                vec![1, 2, 2, 3],
                vec![1, 2, 3, 3],
                vec![1, 3, 3, 3]
            ]
        );
        assert_eq!(seqs(1, 4), vec![vec![1, 5]]);
        assert_eq!(seqs(3, 0), vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn counts_and_volumes() {
        for d in 1..=6 {
            for m in 0..=6 {
                assert_eq!(seqs(d, m).len() as u64, binomial(m + d - 1, d - 1));
                assert_eq!(staircase_volume(d, m).unwrap(), (d as u64).pow(m as u32));
            }
        }
    }

    #[test]
    fn polarization() {
        assert_eq!(polarize(&[1, 1], 3).unwrap(), vec![1, 2]);
        assert_eq!(polarize(&[2, 2, 3], 2).unwrap(), vec![2, 3, 5]);
        assert_eq!(polarize(&[4], 3).unwrap(), vec![4]);
        assert!(polarize(&[2, 1], 3).is_err());
        assert!(polarize(&[1, 5], 3).is_err());
        assert!(depolarize(&[2, 2]).is_err());
        for d in 1..=4 {
            for m in 0..=4 {
                for set in combinations(m + d, d) {
                    let set: Vec<Vertex> = set.iter().map(|&x| x as Vertex + 1).collect();
                    let ms = depolarize(&set).unwrap();
                    assert!(ms.iter().all(|&x| (1..=m + 1).contains(&x)));
                    assert_eq!(polarize(&ms, m).unwrap(), set);
                }
            }
        }
    }

    #[test]
    fn blocks() {
        let b = |v: Vec<usize>| cell_to_blocks(&BSeq::new(v).unwrap()).to_string();
        assert_eq!(b(vec![1, 2, 4]), "1 2 ; 3 4 5");
        assert_eq!(b(vec![1, 1, 4]), "1 ; 2 3 4 5");
        assert_eq!(b(vec![1, 1, 1, 3]), "1 ; 2 ; 3 4 5");
        assert!(BSeq::new(vec![2, 3]).is_err());
    }

    #[test]
    fn full_geometries() {
        let g = staircase_geometry(2, 3).unwrap();
        assert_eq!((g.vertices.len(), g.cells.len()), (10, 4));
        assert!(g.vertices.iter().all(|v| v.coords.iter().sum::<usize>() == 2));
        assert_eq!(g.vertices[1].coords, vec![1, 1, 0, 0]);
        let g = staircase_geometry(3, 2).unwrap();
        assert_eq!((g.vertices.len(), g.cells.len()), (10, 6));
        check_embedding(&g, &Hypergraph::complete(3, 5).unwrap()).unwrap();
    }

    #[test]
    fn restrictions() {
        let h = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]).unwrap();
        let g = restrict_to_graph(2, 5, &h).unwrap();
        assert_eq!(g.f_vector(), vec![7, 11, 6, 1]);
        let single = Hypergraph::on_range(3, 5, [[2, 3, 5]]).unwrap();
        let g = restrict_to_graph(3, 5, &single).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.vertices[0].multiset, vec![2, 2, 3]);
        assert!(g.cells.is_empty());
        let k = Hypergraph::complete(2, 5).unwrap();
        let full = staircase_geometry(2, 3).unwrap();
        assert_eq!(restrict_to_graph(2, 5, &k).unwrap(), full);
        let induced = full.induced(|l| h.has_edge(l.as_slice()));
        assert_eq!(induced, restrict_to_graph(2, 5, &h).unwrap());
        assert!(restrict_to_graph(3, 5, &h).is_err());
    }

    #[test]
    fn export_format() {
        let empty = Hypergraph::on_range(2, 3, Vec::<Vec<Vertex>>::new()).unwrap();
        let g = restrict_to_graph(2, 3, &empty).unwrap();
        assert_eq!(g.to_text(), "2 1 3\nvertices:\ncells:\nfaces:\n");
        let g = staircase_geometry(2, 1).unwrap();
        assert_eq!(
            g.to_text(),
            "2 1 3\nvertices:\n0 2 0 1 1 1 2\n1 1 1 1 2 1 3\n2 0 2 2 2 2 3\n\
             cells:\n1 1 2 | 0 1\n1 2 2 | 1 2\n\
             faces:\n0 0 | 0 |\n1 0 | 1 |\n2 0 | 2 |\n3 1 | 0 1 | 0 1\n4 1 | 1 2 | 1 2\n"
        );
    }
}
