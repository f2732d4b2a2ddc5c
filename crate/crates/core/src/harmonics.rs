//! Zonal spherical harmonics and the linear rows they induce on shell
//! counts.
//!
//! For a vector `x₀` of norm `2t` and a shell of norm `2m`, a vector `x`
//! in the shell contributes `G_d(⟨x, x₀⟩, s)` with `s² = 2m · 2t`. Since
//! `G_d` only carries even powers of `s`, every such quantity is a
//! polynomial in `t`. Unknowns are indexed by the inner product `j ≥ 0`;
//! the involution `x ↦ −x` pairs `j` with `−j`, so index `0` is weighted
//! by one and every other index by two.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, PolyT, Rational};

/// Weight of unknown index `j` after folding `±j` together.
pub fn index_weight(j: usize) -> u32 {
    if j == 0 {
        1
    } else {
        2
    }
}

/// Homogeneous `G_d(u, s) = Σ_i coeffs[i] · u^{d−2i} s^{2i}` with
/// `G_d(u, 1)` the Gegenbauer polynomial `C_d^{(λ)}(u)`, `λ = (n − 2)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonalPoly {
    pub degree: u32,
    pub dim: u32,
    pub coeffs: Vec<Rational>,
}

impl ZonalPoly {
    /// Value at `u` with `s²` given directly.
    pub fn eval(&self, u: &Rational, s_sq: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut s_pow = Rational::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            let u_pow = self.degree as usize - 2 * i;
            acc += c * num_traits::pow(u.clone(), u_pow) * &s_pow;
            s_pow *= s_sq;
        }
        acc
    }

    /// `G_d(u, s)` as a polynomial in `t` once `s² = s_sq(t)`.
    pub fn eval_poly(&self, u: &Rational, s_sq: &PolyT) -> PolyT {
        let mut acc = PolyT::zero();
        let mut s_pow = PolyT::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            let u_pow = self.degree as usize - 2 * i;
            let scalar = c * num_traits::pow(u.clone(), u_pow);
            acc = &acc + &s_pow.scale(&scalar);
            s_pow = &s_pow * s_sq;
        }
        acc
    }

    /// Laplacian in `x` of `x ↦ G_d(⟨x, x₀⟩, (⟨x, x⟩⟨x₀, x₀⟩)^{1/2})`, as a
    /// polynomial in `A = ⟨x, x₀⟩`, `B = ⟨x, x⟩`, `C = ⟨x₀, x₀⟩` keyed by
    /// exponent triples.
    ///
    /// Uses `Δ(A^a B^b) = a(a−1) C A^{a−2} B^b + 2b(2a + 2b − 2 + n) A^a B^{b−1}`
    /// in dimension `n`; `C` is constant in `x`.
    pub fn laplacian(&self) -> BTreeMap<(u32, u32, u32), Rational> {
        let n = self.dim as i64;
        let mut out: BTreeMap<(u32, u32, u32), Rational> = BTreeMap::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = self.degree - 2 * i as u32;
            let b = i as u32;
            let cexp = i as u32;
            if a >= 2 {
                let f = int((a as i64) * (a as i64 - 1));
                *out.entry((a - 2, b, cexp + 1)).or_insert_with(Rational::zero) += c * f;
            }
            if b >= 1 {
                let f = int(2 * b as i64 * (2 * a as i64 + 2 * b as i64 - 2 + n));
                *out.entry((a, b - 1, cexp)).or_insert_with(Rational::zero) += c * f;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_empty()
    }
}

/// `C_d^{(λ)}` by the three-term recurrence, homogenized in `(u, s)`.
pub fn gegenbauer(d: u32, n: u32) -> Result<ZonalPoly> {
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "zonal harmonics need dimension at least 3, got {n}"
        )));
    }
    let lambda = rat(n as i64 - 2, 2);
    // Polynomials in u, ascending coefficients.
    let mut prev: Vec<Rational> = vec![Rational::one()];
    let mut cur: Vec<Rational> = vec![Rational::zero(), &lambda * int(2)];
    if d == 0 {
        cur = prev.clone();
    }
    for k in 2..=d {
        let kk = int(k);
        let a = (&lambda + int(k - 1)) * int(2) / &kk;
        let b = (&lambda * int(2) + int(k) - int(2)) / &kk;
        let mut next = vec![Rational::zero(); k as usize + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * &a;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c * &b;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    // cur[m] is the coefficient of u^m, with m ≡ d (mod 2).
    let coeffs = (0..=d / 2)
        .map(|i| cur[(d - 2 * i) as usize].clone())
        .collect();
    Ok(ZonalPoly {
        degree: d,
        dim: n,
        coeffs,
    })
}

/// `(2d−1)!! / (n (n+2) ⋯ (n+2d−2))`, the average of `⟨x, y⟩^{2d}` over
/// the unit sphere in dimension `n` for a fixed unit `y`.
pub fn sphere_moment_const(d: u32, n: u32) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..d {
        num *= 2 * i + 1;
        den *= n + 2 * i;
    }
    Rational::new(num, den)
}

/// One linear equation `Σ_j coeffs[j] · U_j = rhs` over unknowns `U_j`
/// indexed by inner product `j ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentRow {
    pub shell_norm: u32,
    pub coeffs: Vec<PolyT>,
    pub rhs: PolyT,
}

/// `s² = 2m · 2t` for a shell of norm `2m` against `⟨x₀, x₀⟩ = 2t`.
pub fn s_squared(shell_norm: u32) -> PolyT {
    PolyT::monomial(int(2 * shell_norm), 1)
}

/// `Σ_j w_j j^{2k} U_j = a · sphere_moment_const(k, n) · (2m · 2t)^k`
/// on unknown indices `0..=max_index`.
pub fn pure_moment_row(
    k: u32,
    shell_norm: u32,
    n: u32,
    a_count: &Rational,
    max_index: usize,
) -> MomentRow {
    let coeffs = (0..=max_index)
        .map(|j| {
            let v = BigInt::from(j).pow(2 * k) * index_weight(j);
            PolyT::constant(Rational::from_integer(v))
        })
        .collect();
    let rhs = s_squared(shell_norm)
        .pow(k)
        .scale(&(a_count * sphere_moment_const(k, n)));
    MomentRow {
        shell_norm,
        coeffs,
        rhs,
    }
}

/// `Σ_j w_j G_d(j, s) U_j` with `s² = 2m · 2t`; the right-hand side is
/// zero. Odd degrees are rejected since their shell sums vanish by the
/// involution.
pub fn zonal_shell_row(d: u32, shell_norm: u32, n: u32, max_index: usize) -> Result<MomentRow> {
    if d % 2 != 0 || d < 2 {
        return Err(Error::Unsupported(format!(
            "zonal rows need even degree >= 2, got {d}"
        )));
    }
    let g = gegenbauer(d, n)?;
    let s_sq = s_squared(shell_norm);
    let coeffs = (0..=max_index)
        .map(|j| {
            g.eval_poly(&int(j as u64), &s_sq)
                .scale(&int(index_weight(j)))
        })
        .collect();
    Ok(MomentRow {
        shell_norm,
        coeffs,
        rhs: PolyT::zero(),
    })
}

/// Coefficients `α_e` with `u^{2k} = Σ_{e=0..k} α_e · s^{2k−2e} · G_{2e}(u, s)`.
///
/// `α_0` equals [`sphere_moment_const`]`(k, n)`; summing over a shell on
/// which every `G_{2e}`, `e ≥ 1`, sums to zero leaves only that term.
pub fn power_in_zonal_basis(k: u32, n: u32) -> Result<Vec<Rational>> {
    let polys = (0..=k)
        .map(|e| gegenbauer(2 * e, n))
        .collect::<Result<Vec<_>>>()?;
    // Work in ascending powers of u^2: G_{2e} has u^{2e-2i} coefficient coeffs[i].
    let mut target = vec![Rational::zero(); k as usize + 1];
    target[k as usize] = Rational::one();
    let mut alpha = vec![Rational::zero(); k as usize + 1];
    for e in (0..=k as usize).rev() {
        let lead = &polys[e].coeffs[0];
        let a = &target[e] / lead;
        for (i, c) in polys[e].coeffs.iter().enumerate() {
            target[e - i] -= &a * c;
        }
        alpha[e] = a;
    }
    Ok(alpha)
}
