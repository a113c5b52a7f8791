//! Exhaustive classification of small uniform hypergraphs and the search for
//! a graph with a linear resolution that no `X_G` supports.

use std::fmt;

use rayon::prelude::*;

use crate::complex::build_complex;
use crate::decomposition::{linear_width, Family, LINEAR_WIDTH_MAX_EDGES};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::hypergraph::{find_cointerval_labeling, find_strongly_stable_labeling, Edge, Hypergraph, Vertex, VertexRelabeling};
use crate::perm::{combinations, factorial, next_permutation};
use crate::resolution::{betti_hochster, verify_minimal, verify_resolution, BettiTable};

/// Largest `C(n, d)` accepted by [`enumerate_classes`].
pub const MAX_POTENTIAL_EDGES: usize = 16;

/// Largest `n` accepted by [`counterexample_search`].
pub const COUNTEREXAMPLE_MAX_VERTICES: usize = 8;

struct EdgeSpace {
    n: usize,
    edges: Vec<Edge>,
    /// `perms[g][e]`: index of the image of edge `e` under the `g`-th permutation.
    perms: Vec<Vec<usize>>,
}

impl EdgeSpace {
    fn new(d: usize, n: usize) -> Result<EdgeSpace> {
        if d == 0 || d > n {
            return Err(Error::Uniformity { expected: "1 <= d <= n", actual: d });
        }
        let edges: Vec<Edge> =
            combinations(n, d).into_iter().map(|c| c.into_iter().map(|i| i as Vertex + 1).collect()).collect();
        if edges.len() > MAX_POTENTIAL_EDGES {
            return Err(Error::TooLarge(format!(
                "C({n},{d}) = {} potential edges exceeds {MAX_POTENTIAL_EDGES}",
                edges.len()
            )));
        }
        let index = |e: &Edge| edges.binary_search(e).expect("d-subset");
        let mut image: Vec<Vertex> = (1..=n as Vertex).collect();
        let mut perms = Vec::with_capacity(factorial(n) as usize);
        loop {
            perms.push(
                edges
                    .iter()
                    .map(|e| {
                        let mut m: Edge = e.iter().map(|&v| image[v as usize - 1]).collect();
                        m.sort_unstable();
                        index(&m)
                    })
                    .collect(),
            );
            if !next_permutation(&mut image) {
                break;
            }
        }
        Ok(EdgeSpace { n, edges, perms })
    }

    /// Bit `E - 1 - k` marks edge `k`, so within a fixed edge count the
    /// largest mask has the lexicographically least sorted edge list.
    fn bit(&self, k: usize) -> u32 {
        1 << (self.edges.len() - 1 - k)
    }

    fn apply(&self, g: usize, mask: u32) -> u32 {
        (0..self.edges.len()).filter(|&k| mask & self.bit(k) != 0).map(|k| self.bit(self.perms[g][k])).sum()
    }

    fn graph(&self, d: usize, mask: u32) -> Hypergraph {
        let edges = (0..self.edges.len()).filter(|&k| mask & self.bit(k) != 0).map(|k| &self.edges[k]);
        Hypergraph::on_range(d, self.n, edges).expect("edges of K_n^d")
    }
}

/// One representative per isomorphism class of `d`-graphs on `[n]`
/// (isolated vertices allowed), each the lexicographically least sorted edge
/// list in its class, sorted by edge list.
pub fn enumerate_classes(d: usize, n: usize) -> Result<Vec<Hypergraph>> {
    let space = EdgeSpace::new(d, n)?;
    let total = 1usize << space.edges.len();
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for mask in 0..total as u32 {
        if seen[mask as usize] {
            continue;
        }
        let mut best = mask;
        for g in 0..space.perms.len() {
            let image = space.apply(g, mask);
            seen[image as usize] = true;
            best = best.max(image);
        }
        reps.push(space.graph(d, best));
    }
    reps.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(reps)
}

/// Orbit count of `S_n` on subsets of `d`-sets, by Burnside's lemma:
/// the average over permutations of `2^(cycles on d-sets)`.
pub fn burnside_count(d: usize, n: usize) -> Result<u128> {
    let space = EdgeSpace::new(d, n)?;
    let sum: u128 = space
        .perms
        .iter()
        .map(|p| {
            let mut visited = vec![false; p.len()];
            let mut cycles = 0;
            for start in 0..p.len() {
                if !visited[start] {
                    cycles += 1;
                    let mut k = start;
                    while !visited[k] {
                        visited[k] = true;
                        k = p[k];
                    }
                }
            }
            1u128 << cycles
        })
        .sum();
    Ok(sum / space.perms.len() as u128)
}

/// Flags and invariants for one isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub graph: Hypergraph,
    pub cointerval: Option<VertexRelabeling>,
    pub strongly_stable: Option<VertexRelabeling>,
    /// f-vector of `X` for the cointerval relabeling.
    pub f_vector: Option<Vec<usize>>,
    /// Hochster table over GF(2).
    pub betti: BettiTable,
    /// The Hochster table over the rationals matches the GF(2) one.
    pub characteristic_independent: bool,
    /// `X` of the cointerval relabeling is a minimal resolution over GF(2) and ℚ.
    pub resolution_verified: Option<bool>,
    pub width_cointerval: Option<usize>,
    pub width_strongly_stable: Option<usize>,
}

impl ClassificationRow {
    pub fn is_cointerval(&self) -> bool {
        self.cointerval.is_some()
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.strongly_stable.is_some()
    }
}

fn opt_width(w: Option<usize>) -> String {
    w.map_or_else(|| "-".to_string(), |w| w.to_string())
}

fn join_nums(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for ClassificationRow {
    /// `edges | cointerval | strongly-stable | f-vector | betti | ω coint | ω ss`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.graph.edges().map(|e| e.iter().map(Vertex::to_string).collect::<String>()).collect();
        let edges = if edges.is_empty() { "-".to_string() } else { edges.join(" ") };
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "{edges} | {} | {} | {} | {} | {} | {}",
            yn(self.is_cointerval()),
            yn(self.is_strongly_stable()),
            self.f_vector.as_deref().map_or_else(|| "-".to_string(), join_nums),
            join_nums(&self.betti.totals()),
            opt_width(self.width_cointerval),
            opt_width(self.width_strongly_stable),
        )
    }
}

pub const CLASSIFICATION_HEADER: &str = "edges | cointerval | strongly-stable | f-vector | betti | width-cointerval | width-ss";

pub fn classify(h: &Hypergraph) -> Result<ClassificationRow> {
    let cointerval = find_cointerval_labeling(h);
    let strongly_stable = find_strongly_stable_labeling(h);
    let (f_vector, resolution_verified) = match &cointerval {
        Some(r) => {
            let x = build_complex(&h.relabel(r)?);
            let ok = verify_resolution(&x)?.passed() && verify_minimal(&x);
            (Some(x.f_vector()), Some(ok))
        }
        None => (None, None),
    };
    let betti = betti_hochster(h, FieldSpec::GF2)?;
    let characteristic_independent = betti_hochster(h, FieldSpec::RATIONALS)? == betti;
    let (width_cointerval, width_strongly_stable) = if h.edge_count() <= LINEAR_WIDTH_MAX_EDGES {
        (Some(linear_width(h, Family::Cointerval)?.0), Some(linear_width(h, Family::StronglyStable)?.0))
    } else {
        (None, None)
    };
    Ok(ClassificationRow {
        graph: h.clone(),
        cointerval,
        strongly_stable,
        f_vector,
        betti,
        characteristic_independent,
        resolution_verified,
        width_cointerval,
        width_strongly_stable,
    })
}

/// Classifies every isomorphism class of `d`-graphs on `[n]`.
pub fn classify_all(d: usize, n: usize) -> Result<Vec<ClassificationRow>> {
    enumerate_classes(d, n)?.par_iter().map(classify).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseStudySummary {
    pub classes: usize,
    pub cointerval: usize,
    pub strongly_stable: usize,
    pub cointerval_not_strongly_stable: usize,
    pub orbit_count: u128,
}

impl CaseStudySummary {
    pub fn new(rows: &[ClassificationRow], orbit_count: u128) -> Self {
        let count = |p: &dyn Fn(&ClassificationRow) -> bool| rows.iter().filter(|r| p(r)).count();
        CaseStudySummary {
            classes: rows.len(),
            cointerval: count(&|r| r.is_cointerval()),
            strongly_stable: count(&|r| r.is_strongly_stable()),
            cointerval_not_strongly_stable: count(&|r| r.is_cointerval() && !r.is_strongly_stable()),
            orbit_count,
        }
    }
}

impl fmt::Display for CaseStudySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "counts: {} {} {} {}",
            self.classes, self.cointerval, self.strongly_stable, self.cointerval_not_strongly_stable
        )?;
        writeln!(f, "orbit-count: {}", self.orbit_count)
    }
}

/// Classification rows, a summary, and an orbit count from Burnside's lemma.
pub fn case_study(d: usize, n: usize) -> Result<(Vec<ClassificationRow>, CaseStudySummary)> {
    let rows = classify_all(d, n)?;
    let summary = CaseStudySummary::new(&rows, burnside_count(d, n)?);
    Ok((rows, summary))
}

/// Classes whose cointerval width is 2 while their strongly stable width is 3.
pub fn ss_width_gap_search(rows: &[ClassificationRow]) -> Vec<&ClassificationRow> {
    rows.iter()
        .filter(|r| r.width_cointerval == Some(2) && r.width_strongly_stable == Some(3))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub tried: usize,
    /// Labelings `v ↦ label` under which `X_G` supports a resolution.
    pub passing: Vec<VertexRelabeling>,
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "labelings tried: {}", self.tried)?;
        writeln!(f, "labelings passing: {}", self.passing.len())?;
        for r in &self.passing {
            writeln!(f, "pass: {r}")?;
        }
        Ok(())
    }
}

/// Runs [`verify_resolution`] on `X_G` for every bijection `V(G) → [n]`.
pub fn counterexample_search(g: &Hypergraph) -> Result<CounterexampleReport> {
    let n = g.n();
    if n > COUNTEREXAMPLE_MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n}! labelings")));
    }
    let targets: Vec<Vertex> = (1..=n as Vertex).collect();
    let mut orders = Vec::new();
    let mut order = g.vertices().to_vec();
    loop {
        orders.push(order.clone());
        if !next_permutation(&mut order) {
            break;
        }
    }
    let results = orders
        .par_iter()
        .map(|order| {
            let r = VertexRelabeling::from_order(order, &targets)?;
            let x = build_complex(&g.relabel(&r)?);
            let ok = !x.is_empty() && verify_resolution(&x)?.passed();
            Ok(ok.then_some(r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CounterexampleReport { tried: orders.len(), passing: results.into_iter().flatten().collect() })
}

/// The net: a triangle `123` with pendant edges `14`, `25`, `36`. It is
/// chordal but not an interval graph.
pub fn net_graph() -> Hypergraph {
    Hypergraph::on_range(2, 6, [[1, 2], [1, 3], [2, 3], [1, 4], [2, 5], [3, 6]]).expect("valid graph")
}

/// The complement of the net. Its edge ideal has a 2-linear resolution, yet
/// it is not cointerval under any labeling.
pub fn net_complement() -> Hypergraph {
    net_graph().complement2().expect("2-graph")
}
