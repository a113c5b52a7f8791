//! Cellular chain complexes and homology ranks over exact fields.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::complex::LabeledComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Prime(u32),
    Rationals,
}

/// Coefficient field: the rationals or `GF(p)` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Repr);

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(Repr::Rationals);
    pub const GF2: FieldSpec = FieldSpec(Repr::Prime(2));
    pub const GF3: FieldSpec = FieldSpec(Repr::Prime(3));
    pub const GF32003: FieldSpec = FieldSpec(Repr::Prime(32003));

    /// The four fields exercised throughout the test suite.
    pub const STANDARD: [FieldSpec; 4] = [Self::GF2, Self::GF3, Self::GF32003, Self::RATIONALS];

    pub fn prime(p: u32) -> Result<FieldSpec> {
        let is_prime = p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k));
        if !is_prime {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(FieldSpec(Repr::Prime(p)))
    }

    /// `q`/`Q` for the rationals, otherwise a prime.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        match s.trim() {
            "q" | "Q" | "QQ" => Ok(Self::RATIONALS),
            other => {
                let p = other
                    .parse::<u32>()
                    .map_err(|_| Error::Precondition(format!("unknown field `{other}`")))?;
                Self::prime(p)
            }
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u32 {
        match self.0 {
            Repr::Prime(p) => p,
            Repr::Rationals => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Prime(p) => write!(f, "GF({p})"),
            Repr::Rationals => f.write_str("QQ"),
        }
    }
}

/// Sparse integer columns `(row, value)`.
type Columns = Vec<Vec<(usize, i64)>>;

/// Cellular chain complex with exact integer boundary matrices.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    field: FieldSpec,
    augmented: bool,
    /// Basis sizes, starting at degree -1 when augmented.
    dims: Vec<usize>,
    /// `boundaries[k]` maps basis `k` to basis `k - 1`; `boundaries[0]` is empty.
    boundaries: Vec<Columns>,
}

/// Builds the cellular chain complex of `x`, optionally augmented by a
/// degree -1 copy of the field. Fails if `∂ ∘ ∂ ≠ 0`.
pub fn boundary_matrices(x: &LabeledComplex, field: FieldSpec, augmented: bool) -> Result<ChainComplex> {
    let offset = usize::from(augmented);
    let top = x.dim().map_or(0, |d| d + 1);
    let mut dims = vec![0usize; top + offset];
    if augmented {
        dims[0] = 1;
    }
    let mut local = vec![0usize; x.len()];
    for (k, e) in x.cells().iter().enumerate() {
        local[k] = dims[e.dim + offset];
        dims[e.dim + offset] += 1;
    }
    let mut boundaries: Vec<Columns> = dims.iter().map(|_| Vec::new()).collect();
    for (k, e) in x.cells().iter().enumerate() {
        let idx = e.dim + offset;
        if idx == 0 {
            continue;
        }
        let column = if e.dim == 0 {
            vec![(0, 1)]
        } else {
            x.facets_of(k).into_iter().map(|(f, s)| (local[f], s)).collect()
        };
        boundaries[idx].push(column);
    }
    let complex = ChainComplex { field, augmented, dims, boundaries };
    complex.check_square_zero()?;
    Ok(complex)
}

impl ChainComplex {
    fn offset(&self) -> isize {
        isize::from(self.augmented)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    /// Basis size in `degree`.
    pub fn rank_of_chains(&self, degree: isize) -> usize {
        usize::try_from(degree + self.offset()).ok().and_then(|i| self.dims.get(i)).copied().unwrap_or(0)
    }

    fn check_square_zero(&self) -> Result<()> {
        for k in 2..self.boundaries.len() {
            for (c, col) in self.boundaries[k].iter().enumerate() {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(r, a) in col {
                    for &(s, b) in &self.boundaries[k - 1][r] {
                        *acc.entry(s).or_default() += a * b;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return Err(Error::Internal(format!(
                        "boundary of boundary is nonzero at column {c} of degree {}",
                        k as isize - self.offset()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Rank of the boundary map out of `degree`.
    pub fn boundary_rank(&self, degree: isize) -> usize {
        let Ok(idx) = usize::try_from(degree + self.offset()) else { return 0 };
        if idx == 0 || idx >= self.boundaries.len() {
            return 0;
        }
        column_rank(&self.boundaries[idx], self.dims[idx - 1], self.field)
    }

    /// Triplets `degree row col value`, with `col` a cell of `degree` and
    /// `row` a cell of `degree - 1`, both in the complex's sorted order.
    pub fn matrix_dump(&self) -> String {
        let mut out = String::new();
        for (idx, cols) in self.boundaries.iter().enumerate() {
            let degree = idx as isize - self.offset();
            for (c, col) in cols.iter().enumerate() {
                let mut col = col.clone();
                col.sort_unstable();
                for (r, v) in col {
                    out.push_str(&format!("{degree} {r} {c} {v}\n"));
                }
            }
        }
        out
    }
}

/// Homology ranks by degree; reduced when computed from an augmented complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    reduced: bool,
    ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    fn first_degree(&self) -> isize {
        -isize::from(self.reduced)
    }

    pub fn get(&self, degree: isize) -> usize {
        usize::try_from(degree - self.first_degree()).ok().and_then(|i| self.ranks.get(i)).copied().unwrap_or(0)
    }

    /// `(degree, rank)` pairs from the lowest degree up.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        let first = self.first_degree();
        self.ranks.iter().enumerate().map(move |(k, &r)| (k as isize + first, r))
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(q, r)| if q.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) }).sum()
    }
}

pub fn homology_ranks(c: &ChainComplex) -> HomologyRanks {
    let first = -c.offset();
    let last = c.dims.len() as isize - c.offset();
    let ranks = (first..last)
        .map(|q| {
            let cycles = c.rank_of_chains(q) - c.boundary_rank(q);
            cycles - c.boundary_rank(q + 1)
        })
        .collect();
    HomologyRanks { reduced: c.augmented, ranks }
}

/// Reduced homology ranks of `x`.
pub fn reduced_homology(x: &LabeledComplex, field: FieldSpec) -> Result<HomologyRanks> {
    Ok(homology_ranks(&boundary_matrices(x, field, true)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic,
    NotAcyclic,
    /// The empty complex, whose reduced homology lives in degree -1.
    Empty,
}

impl Acyclicity {
    pub fn is_acyclic(self) -> bool {
        self == Acyclicity::Acyclic
    }
}

pub fn is_acyclic(x: &LabeledComplex, field: FieldSpec) -> Result<Acyclicity> {
    if x.is_empty() {
        return Ok(Acyclicity::Empty);
    }
    Ok(if reduced_homology(x, field)?.is_zero() { Acyclicity::Acyclic } else { Acyclicity::NotAcyclic })
}

/// Rank of a dense integer matrix over `field`.
pub fn rank(matrix: &[Vec<i64>], field: FieldSpec) -> usize {
    let width = matrix.first().map_or(0, Vec::len);
    let columns: Columns = matrix
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, v)| **v != 0).map(|(k, v)| (k, *v)).collect())
        .collect();
    column_rank(&columns, width, field)
}

/// Rank of the matrix whose columns (treated as rows here) are `cols`, each
/// of length `height`.
fn column_rank(cols: &Columns, height: usize, field: FieldSpec) -> usize {
    if cols.is_empty() || height == 0 {
        return 0;
    }
    match field.0 {
        Repr::Prime(2) => rank_gf2(cols, height),
        Repr::Prime(p) => rank_mod_p(cols, height, p),
        Repr::Rationals => rank_integer_checked(cols, height).unwrap_or_else(|| rank_integer_big(cols, height)),
    }
}

fn rank_gf2(cols: &Columns, height: usize) -> usize {
    let words = height.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = cols
        .iter()
        .map(|col| {
            let mut bits = vec![0u64; words];
            for &(r, v) in col {
                if v.rem_euclid(2) == 1 {
                    bits[r / 64] ^= 1 << (r % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for bit in 0..height {
        let (w, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut().filter(|row| row[w] & mask != 0) {
            for (a, b) in row[w..].iter_mut().zip(&pivot[w..]) {
                *a ^= b;
            }
        }
        rank += 1;
    }
    rank
}

fn rank_mod_p(cols: &Columns, height: usize, p: u32) -> usize {
    let p = p as u64;
    let mut rows: Vec<Vec<u64>> = cols
        .iter()
        .map(|col| {
            let mut row = vec![0u64; height];
            for &(r, v) in col {
                row[r] = (row[r] + v.rem_euclid(p as i64) as u64) % p;
            }
            row
        })
        .collect();
    let inverse = |a: u64| {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..height {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = inverse(rows[rank][c]);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let factor = row[c] * inv % p;
            for k in c..height {
                row[k] = (row[k] + (p - factor) * pivot[k]) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination over the integers with row-content
/// normalization. `None` on overflow.
fn rank_integer_checked(cols: &Columns, height: usize) -> Option<usize> {
    let mut rows: Vec<Vec<i64>> = cols
        .iter()
        .map(|col| {
            let mut row = vec![0i64; height];
            for &(r, v) in col {
                row[r] += v;
            }
            row
        })
        .collect();
    let mut rank = 0;
    for c in 0..height {
        let candidates = (rank..rows.len()).filter(|&r| rows[r][c] != 0);
        let Some(piv) = candidates.min_by_key(|&r| rows[r][c].unsigned_abs()) else { continue };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let a = pivot[c];
        for row in tail.iter_mut() {
            let b = row[c];
            if b == 0 {
                continue;
            }
            let g = a.gcd(&b);
            let (ma, mb) = (a / g, b / g);
            let mut content = 0i64;
            for k in c..height {
                row[k] = row[k].checked_mul(ma)?.checked_sub(pivot[k].checked_mul(mb)?)?;
                content = content.gcd(&row[k]);
            }
            if content > 1 {
                row[c..].iter_mut().for_each(|x| *x /= content);
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_integer_big(cols: &Columns, height: usize) -> usize {
    let mut rows: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|col| {
            let mut row = vec![BigInt::zero(); height];
            for &(r, v) in col {
                row[r] += v;
            }
            row
        })
        .collect();
    let mut rank = 0;
    for c in 0..height {
        let candidates = (rank..rows.len()).filter(|&r| !rows[r][c].is_zero());
        let Some(piv) = candidates.min_by_key(|&r| rows[r][c].abs()) else { continue };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let a = pivot[c].clone();
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = a.gcd(&row[c]);
            let (ma, mb) = (&a / &g, &row[c] / &g);
            let mut content = BigInt::zero();
            for k in c..height {
                row[k] = &row[k] * &ma - &pivot[k] * &mb;
                content = content.gcd(&row[k]);
            }
            if content > BigInt::from(1) {
                row[c..].iter_mut().for_each(|x| *x = &*x / &content);
            }
        }
        rank += 1;
    }
    rank
}
