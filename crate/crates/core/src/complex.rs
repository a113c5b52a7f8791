//! Labeled polyhedral complexes built from products of simplices.
//!
//! Every cell in this crate is a join of factor cells, each factor cell being
//! a product of simplices `Δ_{σ_1} × ⋯ × Δ_{σ_d}` written as its block tuple.
//! Ordinary complexes such as `X_H` have a single factor; joins of several
//! complexes keep one slot per factor, with `None` marking an empty slot.
//! Cell labels are squarefree monomials stored as vertex sets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph, Vertex};

/// A squarefree monomial, stored as the sorted set of its variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<Vertex>);

impl Multidegree {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Multidegree(v)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Divisibility of squarefree monomials.
    pub fn is_subset(&self, other: &Multidegree) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn is_proper_subset(&self, other: &Multidegree) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// Least common multiple.
    pub fn union(&self, other: &Multidegree) -> Multidegree {
        Multidegree::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Multidegree {
        Multidegree::new(self.0.iter().map(|&v| f(v)))
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ints(f, &self.0)
    }
}

fn write_ints(f: &mut impl fmt::Write, xs: &[Vertex]) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A product of simplices `Δ_{σ_1} × ⋯ × Δ_{σ_d}` with `σ_1 < σ_2 < ⋯ < σ_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    blocks: Vec<Vec<Vertex>>,
}

impl Cell {
    pub fn new(blocks: Vec<Vec<Vertex>>) -> Result<Cell> {
        if blocks.is_empty() {
            return Err(Error::Precondition("a cell needs at least one block".into()));
        }
        for b in &blocks {
            if b.is_empty() || b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!("block {b:?} is empty or not strictly increasing")));
            }
        }
        if blocks.windows(2).any(|w| w[0].last() >= w[1].first()) {
            return Err(Error::Precondition("blocks are not increasing".into()));
        }
        Ok(Cell { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum::<usize>() - self.blocks.len()
    }

    pub fn label(&self) -> Multidegree {
        Multidegree::new(self.blocks.iter().flatten().copied())
    }

    /// Codimension-one faces with incidence signs. Deleting position `p` of
    /// block `i` carries `(-1)^(Σ_{j<i}(|σ_j|-1) + p)`.
    pub fn facets(&self) -> Vec<(Cell, i64)> {
        let mut out = Vec::new();
        let mut offset = 0usize;
        for (i, block) in self.blocks.iter().enumerate() {
            if block.len() >= 2 {
                for p in 0..block.len() {
                    let mut blocks = self.blocks.clone();
                    blocks[i].remove(p);
                    let sign = if (offset + p).is_multiple_of(2) { 1 } else { -1 };
                    out.push((Cell { blocks }, sign));
                }
            }
            offset += block.len() - 1;
        }
        out
    }

    pub fn is_face_of(&self, other: &Cell) -> bool {
        self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.iter().all(|v| b.binary_search(v).is_ok()))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(" ; ")?;
            }
            write_ints(f, b)?;
        }
        Ok(())
    }
}

/// A cell of a join: one optional factor cell per join factor, not all empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JoinCell {
    parts: Vec<Option<Cell>>,
}

impl JoinCell {
    pub fn new(parts: Vec<Option<Cell>>) -> Result<JoinCell> {
        if parts.iter().all(Option::is_none) {
            return Err(Error::Precondition("join cell with every factor empty".into()));
        }
        Ok(JoinCell { parts })
    }

    pub fn single(cell: Cell) -> JoinCell {
        JoinCell { parts: vec![Some(cell)] }
    }

    pub fn parts(&self) -> &[Option<Cell>] {
        &self.parts
    }

    /// The factor cell of a single-factor complex.
    pub fn as_single(&self) -> Option<&Cell> {
        match &self.parts[..] {
            [Some(c)] => Some(c),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().flatten().map(|c| c.dim() + 1).sum::<usize>() - 1
    }

    /// Leibniz rule over factors. A factor vertex maps to the empty slot
    /// (augmentation), dropped when it would empty the whole cell.
    pub fn facets(&self) -> Vec<(JoinCell, i64)> {
        let mut out = Vec::new();
        let mut shift = 0usize;
        let nonempty = self.parts.iter().flatten().count();
        for (i, part) in self.parts.iter().enumerate() {
            let Some(cell) = part else { continue };
            let outer = if shift.is_multiple_of(2) { 1 } else { -1 };
            if cell.dim() == 0 {
                if nonempty > 1 {
                    let mut parts = self.parts.clone();
                    parts[i] = None;
                    out.push((JoinCell { parts }, outer));
                }
            } else {
                for (f, s) in cell.facets() {
                    let mut parts = self.parts.clone();
                    parts[i] = Some(f);
                    out.push((JoinCell { parts }, outer * s));
                }
            }
            shift += cell.dim() + 1;
        }
        out
    }
}

impl fmt::Display for JoinCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            match p {
                Some(c) => write!(f, "{c}")?,
                None => f.write_str("-")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub key: JoinCell,
    pub dim: usize,
    pub label: Multidegree,
}

/// A finite labeled complex, closed under faces, with cells sorted by
/// `(dim, key)`. Labels of positive-dimensional cells are the lcm of their
/// facet labels.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    factors: usize,
    cells: Vec<Entry>,
    index: HashMap<JoinCell, usize>,
}

impl PartialEq for LabeledComplex {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors && self.cells == other.cells
    }
}

impl Eq for LabeledComplex {}

impl LabeledComplex {
    pub fn empty(factors: usize) -> Self {
        LabeledComplex { factors, cells: Vec::new(), index: HashMap::new() }
    }

    /// Validates closure under faces and lcm labels.
    pub fn from_cells(factors: usize, cells: impl IntoIterator<Item = (JoinCell, Multidegree)>) -> Result<Self> {
        let mut entries: Vec<Entry> = Vec::new();
        for (key, label) in cells {
            if key.parts.len() != factors {
                return Err(Error::Precondition(format!("cell {key} does not have {factors} factors")));
            }
            entries.push(Entry { dim: key.dim(), key, label });
        }
        let complex = Self::from_sorted(factors, entries)?;
        for (k, e) in complex.cells.iter().enumerate() {
            let facets = e.key.facets();
            let mut lcm = Multidegree::default();
            for (f, _) in &facets {
                let Some(&fi) = complex.index.get(f) else {
                    return Err(Error::Precondition(format!("face {f} of {} is missing", e.key)));
                };
                lcm = lcm.union(&complex.cells[fi].label);
            }
            if !facets.is_empty() && lcm != e.label {
                return Err(Error::Precondition(format!(
                    "label of {} is {}, expected the lcm {lcm}",
                    e.key, e.label
                )));
            }
            debug_assert_eq!(complex.index[&e.key], k);
        }
        Ok(complex)
    }

    pub fn from_product_cells(cells: impl IntoIterator<Item = (Cell, Multidegree)>) -> Result<Self> {
        Self::from_cells(1, cells.into_iter().map(|(c, l)| (JoinCell::single(c), l)))
    }

    fn from_sorted(factors: usize, mut entries: Vec<Entry>) -> Result<Self> {
        entries.sort_by(|a, b| (a.dim, &a.key).cmp(&(b.dim, &b.key)));
        if let Some(w) = entries.windows(2).find(|w| w[0].key == w[1].key) {
            return Err(Error::Precondition(format!("duplicate cell {}", w[0].key)));
        }
        let index = entries.iter().enumerate().map(|(k, e)| (e.key.clone(), k)).collect();
        Ok(LabeledComplex { factors, cells: entries, index })
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Entry] {
        &self.cells
    }

    pub fn position(&self, key: &JoinCell) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn contains(&self, key: &JoinCell) -> bool {
        self.index.contains_key(key)
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|e| e.dim)
    }

    /// Number of cells per dimension; empty for the empty complex.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for e in &self.cells {
            f[e.dim] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// Signed facet incidences of cell `k`, as indices into [`cells`](Self::cells).
    pub fn facets_of(&self, k: usize) -> Vec<(usize, i64)> {
        self.cells[k]
            .key
            .facets()
            .into_iter()
            .map(|(f, s)| (self.index[&f], s))
            .collect()
    }

    pub fn vertex_labels(&self) -> impl Iterator<Item = &Multidegree> + '_ {
        self.cells.iter().take_while(|e| e.dim == 0).map(|e| &e.label)
    }

    /// All lcms of nonempty sets of vertex labels, sorted.
    pub fn lcm_lattice(&self) -> Vec<Multidegree> {
        let mut lattice: BTreeSet<Multidegree> = BTreeSet::new();
        for label in self.vertex_labels() {
            let joined: Vec<Multidegree> = lattice.iter().map(|m| m.union(label)).collect();
            lattice.extend(joined);
            lattice.insert(label.clone());
        }
        lattice.into_iter().collect()
    }

    /// Keeps the cells whose label satisfies `keep`. The predicate must be
    /// closed downward under divisibility for the result to be a complex.
    pub fn restrict(&self, keep: impl Fn(&Multidegree) -> bool) -> LabeledComplex {
        let entries: Vec<Entry> = self.cells.iter().filter(|e| keep(&e.label)).cloned().collect();
        let index = entries.iter().enumerate().map(|(k, e)| (e.key.clone(), k)).collect();
        LabeledComplex { factors: self.factors, cells: entries, index }
    }

    /// `X_{≤α}`: cells whose label divides `alpha`.
    pub fn downset_leq(&self, alpha: &Multidegree) -> LabeledComplex {
        self.restrict(|l| l.is_subset(alpha))
    }

    /// `X_{<α}`: cells whose label strictly divides `alpha`.
    pub fn downset_lt(&self, alpha: &Multidegree) -> LabeledComplex {
        self.restrict(|l| l.is_proper_subset(alpha))
    }

    /// Renames the variables of every label.
    pub fn map_labels(&self, f: impl Fn(Vertex) -> Vertex) -> LabeledComplex {
        let entries = self.cells.iter().map(|e| Entry { label: e.label.map(&f), ..e.clone() }).collect();
        Self::from_sorted(self.factors, entries).expect("keys unchanged")
    }

    /// Removes a cell that is not a face of any other cell.
    pub fn without_cell(&self, key: &JoinCell) -> Result<LabeledComplex> {
        let Some(k) = self.position(key) else {
            return Err(Error::Precondition(format!("cell {key} not in complex")));
        };
        let is_facet_of_something =
            self.cells.iter().any(|e| e.dim == self.cells[k].dim + 1 && e.key.facets().iter().any(|(f, _)| f == key));
        if is_facet_of_something {
            return Err(Error::Precondition(format!("cell {key} is not maximal")));
        }
        let entries = self.cells.iter().filter(|e| &e.key != key).cloned().collect();
        Self::from_sorted(self.factors, entries)
    }

    /// One line per cell: `dim | key | label`, in `(dim, key)` order.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for e in &self.cells {
            out.push_str(&format!("{} | {} | {}\n", e.dim, e.key, e.label));
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<LabeledComplex> {
        let mut factors = None;
        let mut cells = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line, msg };
            let fields: Vec<&str> = content.split('|').map(str::trim).collect();
            let [dim, key, label] = fields[..] else {
                return Err(perr("expected `dim | key | label`".into()));
            };
            let dim: usize = dim.parse().map_err(|_| perr(format!("bad dimension `{dim}`")))?;
            let mut parts = Vec::new();
            for factor in key.split('*').map(str::trim) {
                if factor == "-" {
                    parts.push(None);
                    continue;
                }
                let blocks = factor
                    .split(';')
                    .map(|b| {
                        b.split_whitespace()
                            .map(|t| t.parse::<Vertex>().map_err(|_| perr(format!("bad vertex `{t}`"))))
                            .collect::<Result<Vec<Vertex>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                parts.push(Some(Cell::new(blocks).map_err(|e| perr(e.to_string()))?));
            }
            let key = JoinCell::new(parts).map_err(|e| perr(e.to_string()))?;
            if key.dim() != dim {
                return Err(perr(format!("cell {key} has dimension {}, line says {dim}", key.dim())));
            }
            if *factors.get_or_insert(key.parts.len()) != key.parts.len() {
                return Err(perr("inconsistent number of join factors".into()));
            }
            let label = label
                .split_whitespace()
                .map(|t| t.parse::<Vertex>().map_err(|_| perr(format!("bad label entry `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            cells.push((key, Multidegree::new(label)));
        }
        Self::from_cells(factors.unwrap_or(1), cells).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
    }
}

/// The complex `X_H`: block tuples `σ_1 < ⋯ < σ_d` all of whose
/// transversals are edges, labeled by `σ_1 ∪ ⋯ ∪ σ_d`.
pub fn build_complex(h: &Hypergraph) -> LabeledComplex {
    let mut cells = Vec::new();
    let edges: Vec<&[Vertex]> = h.edges().map(Vec::as_slice).collect();
    let mut prefix = Vec::new();
    extend_blocks(&edges, h.d(), Vertex::MIN, &mut prefix, &mut cells);
    let entries = cells
        .into_iter()
        .map(|blocks| {
            let cell = Cell { blocks };
            Entry { dim: cell.dim(), label: cell.label(), key: JoinCell::single(cell) }
        })
        .collect();
    LabeledComplex::from_sorted(1, entries).expect("distinct block tuples")
}

/// `edges` is the common "tail" graph every transversal of the prefix must
/// extend into; each is a sorted list of the `d` remaining vertices.
fn extend_blocks(
    edges: &[&[Vertex]],
    d: usize,
    lower: Vertex,
    prefix: &mut Vec<Vec<Vertex>>,
    out: &mut Vec<Vec<Vec<Vertex>>>,
) {
    let firsts: BTreeSet<Vertex> = edges.iter().map(|e| e[0]).filter(|&v| v > lower).collect();
    let firsts: Vec<Vertex> = firsts.into_iter().collect();
    // grow the next block one increasing vertex at a time, intersecting the
    // tails; once the intersection is empty no extension can succeed
    fn grow(
        edges: &[&[Vertex]],
        d: usize,
        firsts: &[Vertex],
        block: &mut Vec<Vertex>,
        tails: Option<BTreeSet<&[Vertex]>>,
        prefix: &mut Vec<Vec<Vertex>>,
        out: &mut Vec<Vec<Vec<Vertex>>>,
    ) {
        for (k, &v) in firsts.iter().enumerate() {
            let own: BTreeSet<&[Vertex]> = edges.iter().filter(|e| e[0] == v).map(|e| &e[1..]).collect();
            let next: BTreeSet<&[Vertex]> = match &tails {
                None => own,
                Some(t) => t.intersection(&own).copied().collect(),
            };
            let next: BTreeSet<&[Vertex]> = next.into_iter().filter(|t| t.first().is_none_or(|&u| u > v)).collect();
            if d > 1 && next.is_empty() {
                continue;
            }
            block.push(v);
            prefix.push(block.clone());
            if d == 1 {
                out.push(prefix.clone());
            } else {
                let tail_edges: Vec<&[Vertex]> = next.iter().copied().collect();
                extend_blocks(&tail_edges, d - 1, v, prefix, out);
            }
            prefix.pop();
            grow(edges, d, &firsts[k + 1..], block, Some(next), prefix, out);
            block.pop();
        }
    }
    let mut block = Vec::new();
    grow(edges, d, &firsts, &mut block, None, prefix, out);
}

/// Removes the edges `{j} ∪ e` for `e` in the `j`-layer, provided that layer
/// is contained in the `i`-layer (`i < j`).
pub fn fold(h: &Hypergraph, i: Vertex, j: Vertex) -> Result<Hypergraph> {
    if i >= j {
        return Err(Error::Precondition(format!("fold needs i < j, got {i}, {j}")));
    }
    let inner = h.layer(j)?;
    let outer = h.layer(i)?;
    if !inner.edge_set().is_subset(outer.edge_set()) {
        return Err(Error::Precondition(format!("the {j}-layer is not contained in the {i}-layer")));
    }
    let kept: Vec<&Edge> = h.edges().filter(|e| e[0] != j).collect();
    h.with_edges(kept)
}

/// One fold applied inside the nested layer reached by descending through
/// `path` (each step passes to the unique nonempty layer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldStep {
    pub path: Vec<Vertex>,
    pub i: Vertex,
    pub j: Vertex,
}

fn nonempty_layers(h: &Hypergraph) -> Vec<Vertex> {
    let s: BTreeSet<Vertex> = h.edges().map(|e| e[0]).collect();
    s.into_iter().collect()
}

/// A sequence of folds certifying that `X_H` is contractible. While more
/// than one layer is nonempty the largest one is folded into the smallest;
/// with a single nonempty layer the complex is isomorphic to that layer's,
/// and the process recurses down to a 1-graph, whose complex is a simplex.
pub fn contractibility_certificate(h: &Hypergraph) -> Result<Vec<FoldStep>> {
    if h.edge_count() == 0 {
        return Err(Error::Precondition("empty hypergraph has an empty complex".into()));
    }
    if !h.is_cointerval() {
        return Err(Error::Precondition("hypergraph is not cointerval".into()));
    }
    let mut steps = Vec::new();
    let mut g = h.clone();
    let mut path = Vec::new();
    while g.d() > 1 {
        let layers = nonempty_layers(&g);
        if let [v] = layers[..] {
            g = g.layer(v)?;
            path.push(v);
            continue;
        }
        let (i, j) = (layers[0], *layers.last().expect("nonempty"));
        g = fold(&g, i, j)?;
        steps.push(FoldStep { path: path.clone(), i, j });
    }
    Ok(steps)
}

/// Replays a certificate, checking every fold and descent. Returns the final
/// 1-graph.
pub fn replay_certificate(h: &Hypergraph, steps: &[FoldStep]) -> Result<Hypergraph> {
    let mut g = h.clone();
    let mut path: Vec<Vertex> = Vec::new();
    let descend = |g: &Hypergraph, v: Vertex| -> Result<Hypergraph> {
        if nonempty_layers(g) != [v] {
            return Err(Error::Precondition(format!("cannot descend into layer {v}: other layers are nonempty")));
        }
        g.layer(v)
    };
    for step in steps {
        if !step.path.starts_with(&path) {
            return Err(Error::Precondition("certificate path does not extend the current path".into()));
        }
        for &v in &step.path[path.len()..] {
            g = descend(&g, v)?;
        }
        path = step.path.clone();
        g = fold(&g, step.i, step.j)?;
    }
    while g.d() > 1 {
        let layers = nonempty_layers(&g);
        let [v] = layers[..] else {
            return Err(Error::Precondition("certificate leaves several nonempty layers".into()));
        };
        g = descend(&g, v)?;
    }
    if g.edge_count() == 0 {
        return Err(Error::Precondition("certificate ends at an empty graph".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Hypergraph {
        Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]).unwrap()
    }

    fn cell(blocks: &[&[Vertex]]) -> JoinCell {
        JoinCell::single(Cell::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap())
    }

    /// Enumerates block tuples directly from the definition: every way of
    /// assigning a subset of vertices to `d` ordered nonempty blocks.
    fn brute_force_cells(h: &Hypergraph) -> BTreeSet<Vec<Vec<Vertex>>> {
        let n = h.n();
        let d = h.d();
        let mut out = BTreeSet::new();
        let total = (d + 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut blocks = vec![Vec::new(); d];
            for &v in h.vertices() {
                let slot = c % (d + 1);
                c /= d + 1;
                if slot > 0 {
                    blocks[slot - 1].push(v);
                }
            }
            if blocks.iter().any(Vec::is_empty) || blocks.windows(2).any(|w| w[0].last() >= w[1].first()) {
                continue;
            }
            let mut transversals = vec![Vec::new()];
            for b in &blocks {
                transversals = transversals
                    .into_iter()
                    .flat_map(|t: Vec<Vertex>| b.iter().map(move |&v| [t.clone(), vec![v]].concat()))
                    .collect();
            }
            if transversals.iter().all(|t| h.has_edge(t)) {
                out.insert(blocks);
            }
        }
        out
    }

    #[test]
    fn single_edge_is_a_point() {
        let h = Hypergraph::on_range(3, 3, [[1, 2, 3]]).unwrap();
        let x = build_complex(&h);
        assert_eq!(x.f_vector(), vec![1]);
        assert_eq!(x.cells()[0].label, Multidegree::new([1, 2, 3]));
    }

    #[test]
    fn worked_example_f_vector() {
        assert_eq!(build_complex(&example()).f_vector(), vec![7, 11, 6, 1]);
    }

    #[test]
    fn triangle_complex() {
        let x = build_complex(&Hypergraph::complete(2, 3).unwrap());
        assert_eq!(x.f_vector(), vec![3, 2]);
        assert!(x.contains(&cell(&[&[1], &[2, 3]])));
        assert!(x.contains(&cell(&[&[1, 2], &[3]])));
    }

    #[test]
    fn construction_matches_brute_force() {
        let graphs = [
            example(),
            Hypergraph::complete(2, 5).unwrap(),
            Hypergraph::complete(3, 5).unwrap(),
            Hypergraph::on_range(3, 5, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 5], [2, 4, 5]]).unwrap(),
            Hypergraph::new(2, [-3, 0, 4, 7], [[-3, 4], [-3, 7], [0, 7]]).unwrap(),
        ];
        for h in graphs {
            let x = build_complex(&h);
            let got: BTreeSet<Vec<Vec<Vertex>>> =
                x.cells().iter().map(|e| e.key.as_single().unwrap().blocks().to_vec()).collect();
            assert_eq!(got, brute_force_cells(&h), "{h:?}");
            assert_eq!(LabeledComplex::from_cells(1, x.cells().iter().map(|e| (e.key.clone(), e.label.clone()))).unwrap(), x);
        }
    }

    #[test]
    fn downsets_of_the_example() {
        let x = build_complex(&example());
        let vertex = x.cells()[0].label.clone();
        assert_eq!(x.downset_leq(&vertex).len(), 1);
        assert!(x.downset_lt(&vertex).is_empty());
        let low = x.downset_leq(&Multidegree::new([1, 2, 3, 4]));
        assert_eq!(low.f_vector(), vec![4, 4, 1]);
        assert_eq!(low.euler_characteristic(), 1);
        let top = x.downset_lt(&Multidegree::new([1, 2, 3, 4, 5]));
        assert_eq!(top.f_vector(), vec![7, 11, 6]);
        assert!(x.downset_leq(&Multidegree::default()).is_empty());
        assert!(x.downset_lt(&Multidegree::default()).is_empty());
    }

    #[test]
    fn downset_equals_complex_of_induced_subgraph() {
        let h = example();
        let x = build_complex(&h);
        for mask in 0u32..32 {
            let w: Vec<Vertex> = (1..=5).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            assert_eq!(x.downset_leq(&Multidegree::new(w.clone())), build_complex(&h.induced(&w).unwrap()));
        }
    }

    #[test]
    fn labels_track_dimension() {
        let h = Hypergraph::complete(3, 6).unwrap();
        for e in build_complex(&h).cells() {
            assert_eq!(e.label.len(), e.dim + 3);
        }
    }

    #[test]
    fn cell_validation_and_facets() {
        assert!(Cell::new(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Cell::new(vec![vec![]]).is_err());
        let c = Cell::new(vec![vec![1], vec![2, 3]]).unwrap();
        let f = c.facets();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], (Cell::new(vec![vec![1], vec![3]]).unwrap(), 1));
        assert_eq!(f[1], (Cell::new(vec![vec![1], vec![2]]).unwrap(), -1));
    }

    #[test]
    fn folds() {
        let h = example();
        let folded = fold(&h, 1, 2).unwrap();
        assert!(!folded.has_edge(&[2, 4]) && !folded.has_edge(&[2, 5]));
        assert_eq!(folded.edge_count(), 5);
        assert_eq!(fold(&h, 4, 5).unwrap(), h);
        assert_eq!(fold(&h, 2, 3).unwrap().edge_count(), 6);
        assert!(fold(&h, 3, 2).is_err());
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        assert!(fold(&two_k2, 1, 3).is_err());
    }

    #[test]
    fn certificates() {
        let single = Hypergraph::on_range(2, 2, [[1, 2]]).unwrap();
        assert!(contractibility_certificate(&single).unwrap().is_empty());
        let steps = contractibility_certificate(&example()).unwrap();
        assert!(steps.len() <= 4);
        let end = replay_certificate(&example(), &steps).unwrap();
        assert_eq!(end.edges().cloned().collect::<Vec<_>>(), vec![vec![2], vec![3], vec![4], vec![5]]);
        let k3 = Hypergraph::complete(2, 3).unwrap();
        let steps = contractibility_certificate(&k3).unwrap();
        assert_eq!(steps, vec![FoldStep { path: vec![], i: 1, j: 2 }]);
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        assert!(contractibility_certificate(&two_k2).is_err());
        assert!(replay_certificate(&two_k2, &[]).is_err());
    }

    #[test]
    fn dump_round_trip_and_mutilation() {
        let x = build_complex(&example());
        let dump = x.to_dump();
        assert!(dump.starts_with("0 | 1 ; 2 | 1 2\n"));
        assert_eq!(LabeledComplex::from_dump(&dump).unwrap(), x);
        let top = x.cells().last().unwrap().key.clone();
        let cut = x.without_cell(&top).unwrap();
        assert_eq!(cut.f_vector(), vec![7, 11, 6]);
        assert!(x.without_cell(&x.cells()[0].key).is_err());
        let missing_face = dump.lines().filter(|l| !l.starts_with("0 | 1 ; 2 |")).collect::<Vec<_>>().join("\n");
        assert!(LabeledComplex::from_dump(&missing_face).is_err());
        assert!(LabeledComplex::from_dump("1 | 1 ; 2 | 1 2\n").is_err());
        assert!(LabeledComplex::from_dump("0 | 1 ; x | 1 2\n").is_err());
    }

    #[test]
    fn lcm_lattice_of_two_k2() {
        let x = build_complex(&Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap());
        let lattice = x.lcm_lattice();
        assert_eq!(lattice, vec![Multidegree::new([1, 2]), Multidegree::new([1, 2, 3, 4]), Multidegree::new([3, 4])]);
    }
}
