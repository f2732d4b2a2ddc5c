//! `q`-expansions of level-one modular forms.
//!
//! `E4`, `E6` come from their divisor-sum formulas, `Δ = (E4³ − E6²)/1728`,
//! and every `M_k` is spanned by the monomials `E4^a E6^b` with
//! `4a + 6b = k`. The extremal theta series of an even unimodular lattice
//! of rank `n` is the unique element of `M_{n/2}` of the form
//! `1 + O(q^{⌊n/24⌋+1})`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{int, linalg, QSeries, Rational};

/// `σ_k(n) = Σ_{d | n} d^k`.
pub fn divisor_sum(k: u32, n: u64) -> BigInt {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| BigInt::from(d).pow(k))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EisensteinId {
    E4,
    E6,
}

impl EisensteinId {
    pub fn from_weight(weight: u32) -> Result<Self> {
        match weight {
            4 => Ok(Self::E4),
            6 => Ok(Self::E6),
            w => Err(Error::Invalid(format!(
                "Eisenstein weight must be 4 or 6, got {w}"
            ))),
        }
    }

    pub fn weight(self) -> u32 {
        match self {
            Self::E4 => 4,
            Self::E6 => 6,
        }
    }
}

/// `E4 = 1 + 240 Σ σ₃(n) qⁿ`, `E6 = 1 − 504 Σ σ₅(n) qⁿ`, to `O(q^terms)`.
pub fn eisenstein_q(id: EisensteinId, terms: usize) -> QSeries {
    let (k, scale) = match id {
        EisensteinId::E4 => (3, 240),
        EisensteinId::E6 => (5, -504),
    };
    let coeffs = (0..terms)
        .map(|n| {
            if n == 0 {
                Rational::one()
            } else {
                int(divisor_sum(k, n as u64) * scale)
            }
        })
        .collect();
    QSeries::new(coeffs)
}

/// `Δ = (E4³ − E6²)/1728 = q − 24q² + 252q³ − …`, to `O(q^terms)`.
pub fn delta_q(terms: usize) -> QSeries {
    let e4 = eisenstein_q(EisensteinId::E4, terms);
    let e6 = eisenstein_q(EisensteinId::E6, terms);
    (&e4.pow(3) - &e6.pow(2)).scale(&Rational::new(BigInt::one(), BigInt::from(1728)))
}

/// `dim M_k`: `⌊k/12⌋ + 1` unless `k ≡ 2 (mod 12)`, zero for odd or
/// negative `k`.
pub fn dim_modular_forms(k: i64) -> usize {
    if k < 0 || k % 2 != 0 {
        return 0;
    }
    let base = (k / 12) as usize;
    if k % 12 == 2 {
        base
    } else {
        base + 1
    }
}

/// `dim M_k⁰`, which equals `dim M_{k−12}` for `k ≥ 12` and is zero below.
pub fn dim_cusp_forms(k: i64) -> usize {
    if k == 0 {
        0
    } else {
        dim_modular_forms(k - 12)
    }
}

/// The monomials `E4^a E6^b` of weight `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceBasis {
    pub weight: i64,
    pub monomials: Vec<(u32, u32)>,
}

impl SpaceBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    /// `q`-expansion of each monomial, to `O(q^terms)`.
    pub fn expansions(&self, terms: usize) -> Vec<QSeries> {
        let e4 = eisenstein_q(EisensteinId::E4, terms);
        let e6 = eisenstein_q(EisensteinId::E6, terms);
        self.monomials
            .iter()
            .map(|&(a, b)| &e4.pow(a) * &e6.pow(b))
            .collect()
    }
}

/// Enumerates `(a, b)` with `4a + 6b = k`, ordered by decreasing `a`.
///
/// Odd or negative weights are rejected; `k = 2` yields the empty basis.
pub fn basis(k: i64) -> Result<SpaceBasis> {
    if k < 0 || k % 2 != 0 {
        return Err(Error::EmptySpace(k));
    }
    let monomials: Vec<(u32, u32)> = (0..=k / 6)
        .filter(|b| (k - 6 * b) % 4 == 0)
        .map(|b| (((k - 6 * b) / 4) as u32, b as u32))
        .collect();
    debug_assert_eq!(monomials.len(), dim_modular_forms(k));
    Ok(SpaceBasis {
        weight: k,
        monomials,
    })
}

/// Theta series of a (hypothetical) extremal even unimodular lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalTheta {
    pub rank: u64,
    pub series: QSeries,
}

impl ExtremalTheta {
    /// Minimal nonzero norm `2⌊n/24⌋ + 2`.
    pub fn min_norm(&self) -> u64 {
        min_norm(self.rank)
    }

    /// `a(2k, L)`, the number of vectors of norm `norm = 2k`.
    ///
    /// `None` for odd norms or norms past the computed order.
    pub fn shell_count(&self, norm: u64) -> Option<BigInt> {
        if norm % 2 != 0 {
            return None;
        }
        self.series
            .coeff((norm / 2) as usize)
            .map(|c| c.to_integer())
    }

    /// Every computed coefficient as an integer, `a(0), a(2), a(4), …`.
    pub fn counts(&self) -> Vec<BigInt> {
        self.series.coeffs().iter().map(|c| c.to_integer()).collect()
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.series
            .coeffs()
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

pub fn min_norm(rank: u64) -> u64 {
    2 * (rank / 24) + 2
}

/// Solves for the unique `Θ ∈ M_{n/2}` with `Θ = 1 + O(q^{⌊n/24⌋+1})`.
pub fn extremal_theta(rank: u64, terms: usize) -> Result<ExtremalTheta> {
    if rank == 0 || rank % 8 != 0 {
        return Err(Error::Invalid(format!(
            "even unimodular rank must be a positive multiple of 8, got {rank}"
        )));
    }
    let vanishing = (rank / 24) as usize;
    if terms < vanishing + 2 {
        return Err(Error::Truncation {
            needed: vanishing + 2,
            available: terms,
        });
    }
    let space = basis((rank / 2) as i64)?;
    let expansions = space.expansions(terms);
    let conditions = vanishing + 1;
    if space.dim() != conditions {
        return Err(Error::Rank {
            rank: space.dim(),
            expected: conditions,
        });
    }
    // Row i: coefficient of q^i in each monomial.
    let system: linalg::RatMatrix = (0..conditions)
        .map(|i| expansions.iter().map(|s| s.coeffs()[i].clone()).collect())
        .collect();
    let mut rhs = vec![Rational::zero(); conditions];
    rhs[0] = Rational::one();
    let weights = linalg::solve(&system, &rhs)?;

    let mut series = QSeries::zero(terms);
    for (w, s) in weights.iter().zip(&expansions) {
        series = &series + &s.scale(w);
    }
    Ok(ExtremalTheta { rank, series })
}

/// Second coefficients of the normalized cusp forms spanning the
/// one-dimensional spaces that carry the degree-`4r` and `4r+4` weighted
/// theta series of a rank-`40r` extremal lattice:
/// `Δ^{2r} = q^{2r} + c_{4r} q^{2r+1} + …` and
/// `E4·Δ^{2r} = q^{2r} + c_{4r+4} q^{2r+1} + …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspLeading {
    pub r: u32,
    pub c_4r: Rational,
    pub c_4r_plus_4: Rational,
}

pub fn cusp_leading(r: u32, terms: usize) -> Result<CuspLeading> {
    if r == 0 {
        return Err(Error::Invalid("r must be at least 1".into()));
    }
    let lead = 2 * r as usize;
    if terms < lead + 2 {
        return Err(Error::Truncation {
            needed: lead + 2,
            available: terms,
        });
    }
    let delta_power = delta_q(terms).pow(2 * r);
    let with_e4 = &eisenstein_q(EisensteinId::E4, terms) * &delta_power;
    for s in [&delta_power, &with_e4] {
        if s.valuation() != Some(lead) || !s.coeffs()[lead].is_one() {
            return Err(Error::Consistency(format!(
                "cusp form does not start with q^{lead}"
            )));
        }
    }
    Ok(CuspLeading {
        r,
        c_4r: delta_power.coeffs()[lead + 1].clone(),
        c_4r_plus_4: with_e4.coeffs()[lead + 1].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(divisor_sum(3, 4), BigInt::from(73));
        assert_eq!(divisor_sum(5, 1), BigInt::from(1));
    }

    #[test]
    fn eisenstein_weights() {
        assert_eq!(EisensteinId::from_weight(6).unwrap(), EisensteinId::E6);
        assert!(EisensteinId::from_weight(8).is_err());
    }

    #[test]
    fn eisenstein_e4_fifth_coefficient() {
        let e4 = eisenstein_q(EisensteinId::E4, 5);
        assert_eq!(ints(&e4), vec![1, 240, 2160, 6720, 17520]);
    }

    #[test]
    fn basis_examples() {
        assert_eq!(basis(4).unwrap().monomials, vec![(1, 0)]);
        assert!(basis(2).unwrap().monomials.is_empty());
        assert_eq!(basis(20).unwrap().monomials, vec![(5, 0), (2, 2)]);
        assert!(matches!(basis(7), Err(Error::EmptySpace(7))));
        assert!(matches!(basis(-4), Err(Error::EmptySpace(-4))));
    }

    #[test]
    fn dimension_formula_matches_enumeration() {
        for k in (0..200).step_by(2) {
            assert_eq!(basis(k).unwrap().dim(), dim_modular_forms(k), "k = {k}");
        }
        for k in [0, 4, 6, 8, 10, 14] {
            assert_eq!(dim_modular_forms(k), 1);
            assert_eq!(dim_cusp_forms(k), 0);
        }
        assert_eq!(dim_modular_forms(2), 0);
        assert_eq!(dim_cusp_forms(12), 1);
    }

    #[test]
    fn rank_eight_is_e4() {
        let th = extremal_theta(8, 6).unwrap();
        assert_eq!(th.series, eisenstein_q(EisensteinId::E4, 6));
        assert_eq!(th.shell_count(2), Some(BigInt::from(240)));
        assert_eq!(th.shell_count(4), Some(BigInt::from(2160)));
        assert_eq!(th.shell_count(3), None);
    }

    #[test]
    fn extremal_theta_rejects_bad_input() {
        assert!(extremal_theta(12, 5).is_err());
        assert!(matches!(
            extremal_theta(48, 2),
            Err(Error::Truncation { needed: 4, .. })
        ));
    }

    #[test]
    fn cusp_leading_rejects_short_series() {
        assert!(matches!(cusp_leading(2, 5), Err(Error::Truncation { .. })));
        assert!(cusp_leading(0, 10).is_err());
    }
}
