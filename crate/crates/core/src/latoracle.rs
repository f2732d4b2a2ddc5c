//! Explicit even unimodular Gram lattices with exact shell enumeration.
//!
//! Shells are found by Fincke–Pohst enumeration on the rational
//! decomposition `x^T G x = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)²`, so no
//! floating point enters the search. Vectors are coordinate tuples in the
//! lattice basis.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{int, linalg, Rational};
use crate::harmonics::gegenbauer;

pub const MAX_RANK: usize = 16;
pub const MAX_NORM: u32 = 8;
/// Cap on lattice points of norm `≤ 2m` visited by one enumeration.
pub const DEFAULT_BUDGET: usize = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    name: String,
    gram: Vec<Vec<i64>>,
}

impl GramLattice {
    /// Validates symmetry, even diagonal and positive definiteness (all
    /// leading principal minors positive).
    pub fn new(name: impl Into<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: "square Gram matrix",
                rows: n,
                cols: gram.first().map_or(0, Vec::len),
            });
        }
        for i in 0..n {
            if gram[i][i] % 2 != 0 {
                return Err(Error::Invalid(format!("odd diagonal entry at {i}")));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invalid(format!("Gram matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        let lat = Self {
            name: name.into(),
            gram,
        };
        for k in 1..=n {
            if !linalg::determinant(&lat.leading_block(k))?.is_positive() {
                return Err(Error::Invalid(format!(
                    "Gram matrix not positive definite (minor {k})"
                )));
            }
        }
        Ok(lat)
    }

    pub fn e8() -> Self {
        let mut g = vec![vec![0; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Chain 0-1-2-3-4-5-6 with node 7 attached to node 2.
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)] {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        Self::new("e8", g).expect("E8 Cartan matrix is a valid Gram matrix")
    }

    pub fn e8e8() -> Self {
        let e8 = Self::e8();
        let mut g = vec![vec![0; 16]; 16];
        for i in 0..8 {
            for j in 0..8 {
                g[i][j] = e8.gram[i][j];
                g[i + 8][j + 8] = e8.gram[i][j];
            }
        }
        Self::new("e8e8", g).expect("block sum of E8 is a valid Gram matrix")
    }

    /// `D16⁺ = D16 ∪ (D16 + (½)^16)` on the basis
    /// `(½^8, −½^8), e_i − e_{i+1} (i = 2..15), e_15 + e_16`.
    pub fn d16plus() -> Self {
        // Doubled coordinates keep everything integral.
        let mut basis: Vec<[i64; 16]> = Vec::with_capacity(16);
        let mut g = [1i64; 16];
        g[8..].fill(-1);
        basis.push(g);
        for i in 1..15 {
            let mut v = [0i64; 16];
            v[i] = 2;
            v[i + 1] = -2;
            basis.push(v);
        }
        let mut last = [0i64; 16];
        last[14] = 2;
        last[15] = 2;
        basis.push(last);
        let gram = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() / 4)
                    .collect()
            })
            .collect();
        Self::new("d16plus", gram).expect("D16+ basis gives a valid Gram matrix")
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "e8" => Ok(Self::e8()),
            "e8e8" => Ok(Self::e8e8()),
            "d16plus" => Ok(Self::d16plus()),
            other => Err(Error::Invalid(format!(
                "unknown lattice {other:?} (expected e8, e8e8 or d16plus)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    fn leading_block(&self, k: usize) -> linalg::RatMatrix {
        (0..k)
            .map(|i| (0..k).map(|j| int(self.gram[i][j])).collect())
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        linalg::determinant(&self.leading_block(self.rank())).expect("square")
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            acc += xi * self.gram[i].iter().zip(y).map(|(g, yj)| g * yj).sum::<i64>();
        }
        acc
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.inner(x, x)
    }

    /// Upper-triangular `q` with `x^T G x = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)²`.
    fn quadratic_decomposition(&self) -> Vec<Vec<Rational>> {
        let n = self.rank();
        let mut q: Vec<Vec<Rational>> = self.leading_block(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = &q[i][j] / &q[i][i];
                q[j][i] = q[i][j].clone();
                q[i][j] = v;
            }
            for k in i + 1..n {
                for l in k..n {
                    let delta = &q[k][i] * &q[i][l];
                    q[k][l] -= delta;
                }
            }
        }
        q
    }
}

/// All vectors of one norm, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellSet {
    pub norm: u32,
    pub vectors: Vec<Vec<i64>>,
}

impl ShellSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.vectors.iter().all(|v| {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            self.vectors.binary_search(&neg).is_ok()
        })
    }
}

struct Enumerator<'a> {
    q: &'a [Vec<Rational>],
    bound: Rational,
    visited: &'a AtomicUsize,
    budget: usize,
}

impl Enumerator<'_> {
    /// Integers `x` with `q_ii (x − c)² ≤ remaining`.
    fn range(&self, i: usize, center: &Rational, remaining: &Rational) -> Vec<i64> {
        let w_sq = remaining / &self.q[i][i];
        let reach = w_sq.floor().to_integer().sqrt() + 1;
        let mid = center.floor().to_integer();
        let lo = i64::try_from(&mid - &reach).expect("coordinate fits i64");
        let hi = i64::try_from(&mid + &reach + 1).expect("coordinate fits i64");
        (lo..=hi)
            .filter(|&x| {
                let d = int(x) - center;
                &d * &d <= w_sq
            })
            .collect()
    }

    fn center(&self, i: usize, x: &[i64]) -> Rational {
        let mut c = Rational::zero();
        for (j, xj) in x.iter().enumerate().skip(i + 1) {
            if *xj != 0 {
                c -= &self.q[i][j] * int(*xj);
            }
        }
        c
    }

    /// Fills coordinates `0..=i` of `x` below the remaining budget and
    /// pushes every completed vector of norm exactly `bound`.
    fn descend(&self, i: usize, x: &mut [i64], remaining: Rational, out: &mut Vec<Vec<i64>>) -> Result<()> {
        let center = self.center(i, x);
        for xi in self.range(i, &center, &remaining) {
            let d = int(xi) - &center;
            let rest = &remaining - &self.q[i][i] * &d * &d;
            x[i] = xi;
            if i == 0 {
                if self.visited.fetch_add(1, Ordering::Relaxed) >= self.budget {
                    return Err(Error::Resource(format!(
                        "enumeration exceeded {} lattice points",
                        self.budget
                    )));
                }
                if rest.is_zero() {
                    out.push(x.to_vec());
                }
            } else {
                self.descend(i - 1, x, rest, out)?;
            }
        }
        x[i] = 0;
        Ok(())
    }
}

pub fn enumerate_shell(lat: &GramLattice, norm: u32) -> Result<ShellSet> {
    enumerate_shell_with_budget(lat, norm, DEFAULT_BUDGET)
}

/// Exhaustive list of lattice vectors with `x^T G x = norm`.
pub fn enumerate_shell_with_budget(lat: &GramLattice, norm: u32, budget: usize) -> Result<ShellSet> {
    if norm < 2 || norm % 2 != 0 {
        return Err(Error::Invalid(format!("shell norm must be even and >= 2, got {norm}")));
    }
    if lat.rank() > MAX_RANK || norm > MAX_NORM {
        return Err(Error::Resource(format!(
            "enumeration limited to rank <= {MAX_RANK} and norm <= {MAX_NORM}"
        )));
    }
    let n = lat.rank();
    let q = lat.quadratic_decomposition();
    let visited = AtomicUsize::new(0);
    let en = Enumerator {
        q: &q,
        bound: int(norm),
        visited: &visited,
        budget,
    };
    let top = n - 1;
    let zero = vec![0i64; n];
    let first = en.range(top, &Rational::zero(), &en.bound);
    let parts = first
        .into_par_iter()
        .map(|xt| {
            let mut x = zero.clone();
            x[top] = xt;
            let rest = &en.bound - &q[top][top] * int(xt) * int(xt);
            let mut out = Vec::new();
            if top == 0 {
                if rest.is_zero() {
                    out.push(x);
                }
            } else {
                en.descend(top - 1, &mut x, rest, &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut vectors: Vec<Vec<i64>> = parts.into_iter().flatten().collect();
    vectors.sort();
    Ok(ShellSet { norm, vectors })
}

/// Histogram `j ↦ #{x ∈ shell : ⟨x, x₀⟩ = j}`.
pub fn shell_counts(lat: &GramLattice, shell: &ShellSet, x0: &[i64]) -> BTreeMap<i64, usize> {
    let mut counts = BTreeMap::new();
    for x in &shell.vectors {
        *counts.entry(lat.inner(x, x0)).or_insert(0) += 1;
    }
    counts
}

/// `Σ_{x ∈ shell} ⟨x, x₀⟩^exponent`.
pub fn power_sum(lat: &GramLattice, shell: &ShellSet, x0: &[i64], exponent: u32) -> BigInt {
    shell
        .vectors
        .iter()
        .map(|x| BigInt::from(lat.inner(x, x0)).pow(exponent))
        .sum()
}

/// `Σ_{x ∈ shell} G_d(⟨x, x₀⟩, s)` with `s² = norm · ⟨x₀, x₀⟩`, the
/// shell's contribution to the theta series weighted by the degree-`d`
/// zonal harmonic around `x₀`.
pub fn weighted_theta_sum(lat: &GramLattice, shell: &ShellSet, x0: &[i64], d: u32) -> Result<Rational> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::Unsupported(format!("weighted sums need even degree >= 2, got {d}")));
    }
    let g = gegenbauer(d, lat.rank() as u32)?;
    let s_sq = int(shell.norm as i64 * lat.norm(x0));
    Ok(shell
        .vectors
        .iter()
        .map(|x| g.eval(&int(lat.inner(x, x0)), &s_sq))
        .sum())
}
