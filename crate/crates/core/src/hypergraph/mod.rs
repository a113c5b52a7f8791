//! Uniform hypergraphs on integer-labeled vertex sets.
//!
//! A [`Hypergraph`] is a `d`-uniform edge set on a finite set of integers. The
//! integer labels matter: layers, cointervality and strong stability are all
//! defined relative to the vertex order. Use [`find_cointerval_labeling`] for
//! the unlabeled notion.

mod labeling;
mod text;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub use labeling::{
    canonical_form, find_cointerval_labeling, find_strongly_stable_labeling, VertexRelabeling,
    CANONICAL_FORM_MAX_VERTICES,
};

pub type Vertex = i32;

/// A sorted list of `d` distinct vertices.
pub type Edge = Vec<Vertex>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    d: usize,
    vertices: Vec<Vertex>,
    edges: BTreeSet<Edge>,
}

impl Hypergraph {
    /// Builds a `d`-graph, validating every edge against the vertex set.
    ///
    /// Vertices may be given in any order but must be distinct. Edges are
    /// sorted on the way in; duplicates are rejected.
    pub fn new<I, E>(d: usize, vertices: impl IntoIterator<Item = Vertex>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if d == 0 {
            return Err(Error::InvalidHypergraph("uniformity must be at least 1".into()));
        }
        let mut vertices: Vec<Vertex> = vertices.into_iter().collect();
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph("duplicate vertex label".into()));
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let mut e = e.as_ref().to_vec();
            e.sort_unstable();
            if e.len() != d || e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} does not have {d} distinct vertices"
                )));
            }
            if let Some(v) = e.iter().find(|v| vertices.binary_search(v).is_err()) {
                return Err(Error::UnknownVertex(*v));
            }
            if !set.insert(e.clone()) {
                return Err(Error::InvalidHypergraph(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Hypergraph { d, vertices, edges: set })
    }

    /// A `d`-graph on `[n] = {1, …, n}`.
    pub fn on_range<I, E>(d: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        Self::new(d, 1..=n as Vertex, edges)
    }

    /// The complete `d`-graph `K_n^d`.
    pub fn complete(d: usize, n: usize) -> Result<Self> {
        let edges = crate::perm::combinations(n, d)
            .into_iter()
            .map(|c| c.into_iter().map(|i| i as Vertex + 1).collect::<Edge>());
        Self::on_range(d, n, edges)
    }

    pub(crate) fn from_parts(d: usize, vertices: Vec<Vertex>, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == d));
        Hypergraph { d, vertices, edges }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, edge: &[Vertex]) -> bool {
        self.edges.contains(edge)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True when `V(H) = [n]`.
    pub fn is_standard_range(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &v)| v == i as Vertex + 1)
    }

    /// Vertices that lie in at least one edge, ascending.
    pub fn support(&self) -> Vec<Vertex> {
        let s: BTreeSet<Vertex> = self.edges.iter().flatten().copied().collect();
        s.into_iter().collect()
    }

    /// Same vertex set, replacing the edge set.
    pub fn with_edges<I, E>(&self, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        Self::new(self.d, self.vertices.iter().copied(), edges)
    }

    /// The `v`-layer: the `(d-1)`-graph on `V ∖ {v}` of edges `e ∖ {v}` where
    /// `v` is the minimum of `e`.
    pub fn layer(&self, v: Vertex) -> Result<Hypergraph> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        if self.d == 1 {
            return Err(Error::Uniformity { expected: "d >= 2", actual: 1 });
        }
        let vertices = self.vertices.iter().copied().filter(|&u| u != v).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e[0] == v)
            .map(|e| e[1..].to_vec())
            .collect();
        Ok(Hypergraph::from_parts(self.d - 1, vertices, edges))
    }

    /// The induced subgraph `H[W]`.
    pub fn induced(&self, w: &[Vertex]) -> Result<Hypergraph> {
        let mut w = w.to_vec();
        w.sort_unstable();
        w.dedup();
        if let Some(v) = w.iter().find(|v| !self.has_vertex(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| w.binary_search(v).is_ok()))
            .cloned()
            .collect();
        Ok(Hypergraph::from_parts(self.d, w, edges))
    }

    /// Cointervality with respect to the given integer labels.
    ///
    /// Every layer must be cointerval and, for `i < j`, the `j`-layer's edges
    /// must be contained in the `i`-layer's edges. Vertices lying in no edge
    /// impose no constraint. Containment is transitive, so consecutive
    /// support vertices suffice.
    pub fn is_cointerval(&self) -> bool {
        if self.d == 1 {
            return true;
        }
        let layers: Vec<Hypergraph> = self
            .support()
            .into_iter()
            .map(|v| self.layer(v).expect("support vertex"))
            .collect();
        layers.windows(2).all(|w| w[1].edges.is_subset(&w[0].edges))
            && layers.iter().all(Hypergraph::is_cointerval)
    }

    /// Applies a vertex bijection. Its domain must be exactly `V(H)`.
    pub fn relabel(&self, relabeling: &VertexRelabeling) -> Result<Hypergraph> {
        if relabeling.domain().ne(self.vertices.iter().copied()) {
            return Err(Error::Precondition(
                "relabeling domain differs from the vertex set".into(),
            ));
        }
        let map = |v: &Vertex| relabeling.apply(*v).expect("domain checked");
        Hypergraph::new(
            self.d,
            self.vertices.iter().map(map),
            self.edges.iter().map(|e| e.iter().map(map).collect::<Edge>()),
        )
    }

    /// Strong stability (shiftedness) on `[n]`: replacing any `i ∈ E` by
    /// `i - 1 ∉ E` stays inside the edge set.
    pub fn is_strongly_stable(&self) -> Result<bool> {
        if !self.is_standard_range() {
            return Err(Error::Precondition("strong stability needs V(H) = [n]".into()));
        }
        for e in &self.edges {
            for (k, &i) in e.iter().enumerate() {
                if i <= 1 || (k > 0 && e[k - 1] == i - 1) {
                    continue;
                }
                let mut shifted = e.clone();
                shifted[k] = i - 1;
                if !self.edges.contains(&shifted) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn require_graph(&self) -> Result<()> {
        if self.d != 2 {
            return Err(Error::Uniformity { expected: "d = 2", actual: self.d });
        }
        Ok(())
    }

    /// Complement of a 2-graph on the same vertex set.
    pub fn complement2(&self) -> Result<Hypergraph> {
        self.require_graph()?;
        let mut edges = BTreeSet::new();
        for (a, &u) in self.vertices.iter().enumerate() {
            for &v in &self.vertices[a + 1..] {
                if !self.edges.contains(&[u, v][..]) {
                    edges.insert(vec![u, v]);
                }
            }
        }
        Ok(Hypergraph::from_parts(2, self.vertices.clone(), edges))
    }

    /// Chordality by repeated removal of simplicial vertices.
    pub fn is_chordal(&self) -> Result<bool> {
        self.require_graph()?;
        let mut remaining: BTreeSet<Vertex> = self.vertices.iter().copied().collect();
        let adjacent = |u: Vertex, v: Vertex| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            self.edges.contains(&[a, b][..])
        };
        while !remaining.is_empty() {
            let simplicial = remaining.iter().copied().find(|&v| {
                let nbrs: Vec<Vertex> =
                    remaining.iter().copied().filter(|&u| u != v && adjacent(u, v)).collect();
                nbrs.iter()
                    .enumerate()
                    .all(|(k, &a)| nbrs[k + 1..].iter().all(|&b| adjacent(a, b)))
            });
            match simplicial {
                Some(v) => {
                    remaining.remove(&v);
                }
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Interval model of the complement of a cointerval 2-graph on `[n]`.
    ///
    /// Vertex `i` gets `[ℓ_i + 1, i]` with `ℓ_i` its largest neighbour below
    /// `i`, or `[1, i]` without one. Vertices in no edge get `[1, n]`, since
    /// they meet every other interval. The result is checked before return.
    pub fn interval_representation(&self) -> Result<IntervalRep> {
        self.require_graph()?;
        if !self.is_standard_range() {
            return Err(Error::Precondition("interval representation needs V(H) = [n]".into()));
        }
        if !self.is_cointerval() {
            return Err(Error::Precondition("graph is not cointerval under its labels".into()));
        }
        let n = self.n() as Vertex;
        let support = self.support();
        let mut intervals = BTreeMap::new();
        for &i in &self.vertices {
            let iv = if support.binary_search(&i).is_err() {
                (1, n)
            } else {
                let below = self.edges.iter().filter(|e| e[1] == i).map(|e| e[0]).max();
                match below {
                    Some(l) => (l + 1, i),
                    None => (1, i),
                }
            };
            intervals.insert(i, iv);
        }
        let rep = IntervalRep { intervals };
        if rep.disjointness_graph() != *self {
            return Err(Error::Internal("interval representation does not reproduce the graph".into()));
        }
        Ok(rep)
    }
}

/// Closed integer intervals per vertex. Two vertices are adjacent in the
/// represented graph exactly when their intervals are disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: BTreeMap<Vertex, (Vertex, Vertex)>,
}

impl IntervalRep {
    pub fn new(intervals: impl IntoIterator<Item = (Vertex, (Vertex, Vertex))>) -> Result<Self> {
        let intervals: BTreeMap<_, _> = intervals.into_iter().collect();
        if intervals.values().any(|(a, b)| a > b) {
            return Err(Error::Precondition("interval with a > b".into()));
        }
        Ok(IntervalRep { intervals })
    }

    pub fn get(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        self.intervals.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, (Vertex, Vertex))> + '_ {
        self.intervals.iter().map(|(v, iv)| (*v, *iv))
    }

    pub fn disjointness_graph(&self) -> Hypergraph {
        let items: Vec<_> = self.iter().collect();
        let mut edges = BTreeSet::new();
        for (k, &(u, (a, b))) in items.iter().enumerate() {
            for &(v, (c, e)) in &items[k + 1..] {
                if b < c || e < a {
                    edges.insert(vec![u, v]);
                }
            }
        }
        Hypergraph::from_parts(2, items.iter().map(|(v, _)| *v).collect(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_graph() -> Hypergraph {
        Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]).unwrap()
    }

    fn edges_of(h: &Hypergraph) -> Vec<Edge> {
        h.edges().cloned().collect()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Hypergraph::on_range(0, 3, Vec::<Edge>::new()).is_err());
        assert!(Hypergraph::on_range(2, 3, [[1, 1]]).is_err());
        assert!(Hypergraph::on_range(2, 3, [[1, 4]]).is_err());
        assert!(Hypergraph::on_range(2, 3, [[1, 2], [2, 1]]).is_err());
        assert!(Hypergraph::new(2, [1, 1], Vec::<Edge>::new()).is_err());
        assert!(Hypergraph::on_range(3, 3, [[1, 2]]).is_err());
    }

    #[test]
    fn layers() {
        let h = Hypergraph::on_range(3, 3, [[1, 2, 3]]).unwrap();
        assert_eq!(edges_of(&h.layer(1).unwrap()), vec![vec![2, 3]]);
        assert!(h.layer(2).unwrap().edge_set().is_empty());
        assert_eq!(edges_of(&example_graph().layer(2).unwrap()), vec![vec![4], vec![5]]);
        assert!(matches!(h.layer(9), Err(Error::UnknownVertex(9))));
        let one = Hypergraph::on_range(1, 2, [[1]]).unwrap();
        assert!(matches!(one.layer(1), Err(Error::Uniformity { .. })));
    }

    #[test]
    fn induced_subgraphs() {
        let h = example_graph();
        assert_eq!(h.induced(h.vertices()).unwrap(), h);
        assert_eq!(
            edges_of(&h.induced(&[2, 3, 4, 5]).unwrap()),
            vec![vec![2, 4], vec![2, 5], vec![3, 5]]
        );
        assert!(h.induced(&[3]).unwrap().edge_set().is_empty());
        assert!(h.induced(&[7]).is_err());
    }

    #[test]
    fn cointerval_examples() {
        assert!(Hypergraph::on_range(1, 4, [[1], [3]]).unwrap().is_cointerval());
        assert!(example_graph().is_cointerval());
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        assert!(!two_k2.is_cointerval());
        assert!(find_cointerval_labeling(&two_k2).is_none());
        assert!(Hypergraph::complete(3, 5).unwrap().is_cointerval());
        // an edgeless vertex before the edges imposes nothing
        assert!(Hypergraph::on_range(2, 3, [[2, 3]]).unwrap().is_cointerval());
    }

    #[test]
    fn strong_stability() {
        assert!(Hypergraph::complete(3, 5).unwrap().is_strongly_stable().unwrap());
        assert!(!example_graph().is_strongly_stable().unwrap());
        assert!(Hypergraph::on_range(2, 3, [[1, 2], [1, 3]]).unwrap().is_strongly_stable().unwrap());
        let off = Hypergraph::new(2, [2, 3], [[2, 3]]).unwrap();
        assert!(matches!(off.is_strongly_stable(), Err(Error::Precondition(_))));
    }

    #[test]
    fn interval_representation_examples() {
        let rep = example_graph().interval_representation().unwrap();
        assert_eq!(rep.get(1), Some((1, 1)));
        assert_eq!(rep.get(4), Some((3, 4)));
        assert_eq!(rep.get(2), Some((2, 2)));
        let star = Hypergraph::on_range(2, 3, [[1, 3]]).unwrap();
        let rep = star.interval_representation().unwrap();
        assert_eq!(rep.get(2), Some((1, 3)));
        assert_eq!(rep.get(3), Some((2, 3)));
        assert!(Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap().interval_representation().is_err());
    }

    #[test]
    fn complements_and_chordality() {
        let k4 = Hypergraph::complete(2, 4).unwrap();
        assert_eq!(k4.complement2().unwrap().edge_count(), 0);
        let empty = Hypergraph::on_range(2, 4, Vec::<Edge>::new()).unwrap();
        assert_eq!(empty.complement2().unwrap(), k4);
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        let c4 = two_k2.complement2().unwrap();
        assert_eq!(edges_of(&c4), vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        assert!(!c4.is_chordal().unwrap());
        let tree = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [3, 4], [3, 5]]).unwrap();
        assert!(tree.is_chordal().unwrap());
        let net = Hypergraph::on_range(2, 6, [[1, 2], [1, 3], [2, 3], [1, 4], [2, 5], [3, 6]]).unwrap();
        assert!(net.is_chordal().unwrap());
        assert!(Hypergraph::complete(3, 4).unwrap().is_chordal().is_err());
    }
}
