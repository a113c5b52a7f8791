use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{Edge, Hypergraph, Vertex};
use crate::error::{Error, Result};
use crate::perm::next_permutation;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_FORM_MAX_VERTICES: usize = 9;

/// A bijection between two vertex sets, stored as `(source, target)` pairs
/// sorted by source.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRelabeling {
    pairs: Vec<(Vertex, Vertex)>,
}

impl VertexRelabeling {
    pub fn new(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        let mut targets: Vec<Vertex> = pairs.iter().map(|p| p.1).collect();
        targets.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) || targets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("relabeling is not a bijection".into()));
        }
        Ok(VertexRelabeling { pairs })
    }

    pub fn identity(vertices: &[Vertex]) -> Self {
        VertexRelabeling { pairs: vertices.iter().map(|&v| (v, v)).collect() }
    }

    /// Sends `order[k]` to `targets[k]`.
    pub fn from_order(order: &[Vertex], targets: &[Vertex]) -> Result<Self> {
        if order.len() != targets.len() {
            return Err(Error::Precondition("order and targets differ in length".into()));
        }
        Self::new(order.iter().copied().zip(targets.iter().copied()))
    }

    pub fn apply(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.binary_search_by_key(&v, |p| p.0).ok().map(|k| self.pairs[k].1)
    }

    pub fn domain(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn inverse(&self) -> VertexRelabeling {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort_unstable();
        VertexRelabeling { pairs }
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(a, b)| a == b)
    }
}

impl fmt::Display for VertexRelabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, b)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        Ok(())
    }
}

const UNPLACED: usize = usize::MAX;

/// Checks every cointerval condition already decided by a partial vertex
/// order. `pos` gives placement indices; unplaced vertices sort after all
/// placed ones. With every vertex placed this is exactly cointervality.
fn prefix_consistent(edges: &[&[Vertex]], d: usize, pos: &HashMap<Vertex, usize>) -> bool {
    if d == 1 {
        return true;
    }
    let at = |v: &Vertex| pos.get(v).copied().unwrap_or(UNPLACED);
    let mut placed: Vec<(usize, Vertex)> = edges
        .iter()
        .flat_map(|e| e.iter())
        .filter(|v| at(v) != UNPLACED)
        .map(|v| (at(v), *v))
        .collect();
    placed.sort_unstable();
    placed.dedup();

    let mut previous: Option<BTreeSet<Edge>> = None;
    for (p, v) in placed {
        let layer_edges: Vec<Edge> = edges
            .iter()
            .filter(|e| e.contains(&v) && e.iter().all(|u| *u == v || at(u) > p))
            .map(|e| e.iter().copied().filter(|u| *u != v).collect())
            .collect();
        let layer: BTreeSet<Edge> = layer_edges.iter().cloned().collect();
        if let Some(prev) = &previous {
            if !layer.is_subset(prev) {
                return false;
            }
        }
        let refs: Vec<&[Vertex]> = layer_edges.iter().map(Vec::as_slice).collect();
        if !prefix_consistent(&refs, d - 1, pos) {
            return false;
        }
        previous = Some(layer);
    }
    true
}

/// Searches vertex orders depth-first (smallest vertex first) for one under
/// which `H` is cointerval. The `k`-th vertex of the order receives the
/// `k`-th smallest label of `V(H)`. Prefixes that already break layer nesting
/// are cut.
pub fn find_cointerval_labeling(h: &Hypergraph) -> Option<VertexRelabeling> {
    let edges: Vec<&[Vertex]> = h.edges().map(Vec::as_slice).collect();
    let mut order = Vec::with_capacity(h.n());
    let mut pos = HashMap::with_capacity(h.n());
    if search(h, &edges, &mut order, &mut pos) {
        let labeling = VertexRelabeling::from_order(&order, h.vertices()).expect("permutation");
        debug_assert!(h.relabel(&labeling).unwrap().is_cointerval());
        Some(labeling)
    } else {
        None
    }
}

fn search(
    h: &Hypergraph,
    edges: &[&[Vertex]],
    order: &mut Vec<Vertex>,
    pos: &mut HashMap<Vertex, usize>,
) -> bool {
    if order.len() == h.n() {
        return true;
    }
    for &v in h.vertices() {
        if pos.contains_key(&v) {
            continue;
        }
        pos.insert(v, order.len());
        order.push(v);
        if prefix_consistent(edges, h.d(), pos) && search(h, edges, order, pos) {
            return true;
        }
        order.pop();
        pos.remove(&v);
    }
    false
}

/// Searches vertex orders lexicographically for one under which `H`
/// (relabeled onto `[n]`) is strongly stable.
pub fn find_strongly_stable_labeling(h: &Hypergraph) -> Option<VertexRelabeling> {
    let targets: Vec<Vertex> = (1..=h.n() as Vertex).collect();
    let mut order = h.vertices().to_vec();
    loop {
        let labeling = VertexRelabeling::from_order(&order, &targets).expect("permutation");
        let relabeled = h.relabel(&labeling).expect("bijection onto [n]");
        if relabeled.is_strongly_stable().expect("standard range") {
            return Some(labeling);
        }
        if !next_permutation(&mut order) {
            return None;
        }
    }
}

/// Lexicographically least sorted edge list over all relabelings of `V(H)`
/// onto `[n]`. Isomorphic hypergraphs share a canonical form.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    let n = h.n();
    if n > CANONICAL_FORM_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "canonical form limited to {CANONICAL_FORM_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let index: HashMap<Vertex, usize> = h.vertices().iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let indexed: Vec<Vec<usize>> =
        h.edges().map(|e| e.iter().map(|v| index[v]).collect()).collect();
    let mut image: Vec<Vertex> = (1..=n as Vertex).collect();
    let mut best: Option<Vec<Edge>> = None;
    let mut buf: Vec<Edge> = Vec::with_capacity(indexed.len());
    loop {
        buf.clear();
        buf.extend(indexed.iter().map(|e| {
            let mut m: Edge = e.iter().map(|&k| image[k]).collect();
            m.sort_unstable();
            m
        }));
        buf.sort_unstable();
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
        if !next_permutation(&mut image) {
            break;
        }
    }
    Hypergraph::on_range(h.d(), n, best.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_cointerval(h: &Hypergraph) -> bool {
        let mut order = h.vertices().to_vec();
        loop {
            let r = VertexRelabeling::from_order(&order, h.vertices()).unwrap();
            if h.relabel(&r).unwrap().is_cointerval() {
                return true;
            }
            if !next_permutation(&mut order) {
                return false;
            }
        }
    }

    #[test]
    fn single_edge_gets_identity() {
        let h = Hypergraph::on_range(3, 3, [[1, 2, 3]]).unwrap();
        assert!(find_cointerval_labeling(&h).unwrap().is_identity());
    }

    #[test]
    fn bipartite_k22_is_found() {
        let h = Hypergraph::on_range(2, 4, [[1, 3], [1, 4], [2, 3], [2, 4]]).unwrap();
        assert!(h.is_cointerval());
        let r = find_cointerval_labeling(&h).unwrap();
        assert!(h.relabel(&r).unwrap().is_cointerval());
    }

    #[test]
    fn search_agrees_with_brute_force_on_all_small_3_graphs() {
        let all: Vec<Edge> = crate::perm::combinations(5, 3)
            .into_iter()
            .map(|c| c.into_iter().map(|i| i as Vertex + 1).collect())
            .collect();
        for mask in 0u32..(1 << all.len()) {
            let edges: Vec<&Edge> = (0..all.len()).filter(|b| mask >> b & 1 == 1).map(|b| &all[b]).collect();
            let h = Hypergraph::on_range(3, 5, edges).unwrap();
            assert_eq!(find_cointerval_labeling(&h).is_some(), brute_force_cointerval(&h), "{h:?}");
        }
    }

    #[test]
    fn canonical_forms() {
        let h = Hypergraph::new(2, [2, 4], [[2, 4]]).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), Hypergraph::on_range(2, 2, [[1, 2]]).unwrap());
        let a = Hypergraph::on_range(2, 4, [[1, 3], [1, 4], [2, 3], [2, 4]]).unwrap();
        let b = Hypergraph::on_range(2, 4, [[1, 2], [1, 4], [2, 3], [3, 4]]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let empty = Hypergraph::on_range(2, 3, Vec::<Edge>::new()).unwrap();
        assert_eq!(canonical_form(&empty).unwrap(), empty);
        let big = Hypergraph::on_range(2, 10, Vec::<Edge>::new()).unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn relabeling_validation() {
        assert!(VertexRelabeling::new([(1, 2), (2, 2)]).is_err());
        let r = VertexRelabeling::new([(1, 3), (2, 1), (3, 2)]).unwrap();
        assert_eq!(r.inverse().apply(3), Some(1));
        assert_eq!(r.to_string(), "1->3 2->1 3->2");
        let h = Hypergraph::on_range(2, 4, [[1, 2]]).unwrap();
        assert!(h.relabel(&r).is_err());
    }

    #[test]
    fn strongly_stable_search() {
        // the path 1-2-3 with the middle vertex labeled 1 is a star
        let path = Hypergraph::on_range(2, 3, [[1, 2], [2, 3]]).unwrap();
        assert!(!path.is_strongly_stable().unwrap());
        let r = find_strongly_stable_labeling(&path).unwrap();
        assert_eq!(r.apply(2), Some(1));
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        assert!(find_strongly_stable_labeling(&two_k2).is_none());
    }
}
