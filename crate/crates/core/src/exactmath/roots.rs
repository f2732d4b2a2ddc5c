use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::divisors;
use super::poly::PolyT;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `Σ a_i p^i q^{n−i}`, i.e. `q^n · f(p/q)` for integer coefficients.
fn homogeneous_eval(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut q_pow = BigInt::one();
    for (i, a) in coeffs.iter().enumerate().rev() {
        acc = acc * p + a * &q_pow;
        if i > 0 {
            q_pow *= q;
        }
    }
    acc
}

/// All distinct rational roots of `p`, ascending.
///
/// `p` is cleared to a primitive integer polynomial and every candidate
/// `±u/v` with `u | a_0`, `v | a_n` is tested exactly. Candidates are
/// pre-filtered by the Cauchy bound and by `(v − u) | f(1)`,
/// `(v + u) | f(−1)`.
pub fn rational_roots(p: &PolyT) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::UndefinedRoots);
    }
    let (_, mut coeffs) = p.primitive_part();
    let mut roots = Vec::new();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..zeros);
    }
    if coeffs.len() <= 1 {
        return Ok(roots);
    }

    let lead = coeffs.last().unwrap().clone();
    let constant = coeffs[0].clone();
    let at_one: BigInt = coeffs.iter().sum();
    let at_minus_one: BigInt = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .sum();
    // Cauchy: |root| < 1 + max |a_i / a_n|, so |u| < |v| * cauchy_num / |a_n|.
    let max_lower = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap();
    let cauchy_num = lead.abs() + max_lower;

    let us = divisors(constant.magnitude());
    let vs = divisors(lead.magnitude());
    for v in &vs {
        let v = BigInt::from_biguint(Sign::Plus, v.clone());
        for u in &us {
            let u = BigInt::from_biguint(Sign::Plus, u.clone());
            if !u.gcd(&v).is_one() {
                continue;
            }
            if &u * lead.abs() >= &v * &cauchy_num {
                continue;
            }
            for cand in [u.clone(), -u.clone()] {
                let minus = &v - &cand;
                if !at_one.is_zero() && (minus.is_zero() || !(&at_one % &minus).is_zero()) {
                    continue;
                }
                let plus = &v + &cand;
                if !at_minus_one.is_zero()
                    && (plus.is_zero() || !(&at_minus_one % &plus).is_zero())
                {
                    continue;
                }
                if homogeneous_eval(&coeffs, &cand, &v).is_zero() {
                    roots.push(Rational::new(cand, v.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn linear_factor() {
        let p = PolyT::from_ints(&[-13, 6]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(13, 6)]);
    }

    #[test]
    fn difference_of_squares() {
        let p = PolyT::from_ints(&[-1, 0, 1]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn quadratic_without_rational_roots() {
        assert!(rational_roots(&PolyT::from_ints(&[77, -55, 10]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn zero_root_and_repeated_roots() {
        let p = PolyT::from_roots(&[rat(0, 1), rat(0, 1), rat(2, 1), rat(2, 1), rat(-3, 7)]);
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![rat(-3, 7), rat(0, 1), rat(2, 1)]
        );
    }

    #[test]
    fn rational_coefficients() {
        // (t/2 - 1/3)(t + 5/4)
        let p = &PolyT::from_coeffs(vec![rat(-1, 3), rat(1, 2)])
            * &PolyT::from_coeffs(vec![rat(5, 4), rat(1, 1)]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-5, 4), rat(2, 3)]);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(rational_roots(&PolyT::constant(rat(-7, 2))).unwrap().is_empty());
        assert!(matches!(rational_roots(&PolyT::zero()), Err(Error::UndefinedRoots)));
    }
}
