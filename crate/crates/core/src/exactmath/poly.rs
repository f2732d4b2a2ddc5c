use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t` over the rationals.
///
/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyT {
    coeffs: Vec<Rational>,
}

impl PolyT {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Ascending integer coefficients, e.g. `[77, -55, 10]` for `10t² − 55t + 77`.
    pub fn from_ints<T: Copy + Into<BigInt>>(coeffs: &[T]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Descending coefficients given as decimal strings, the order in which
    /// polynomials are usually printed.
    pub fn from_descending_decimal(coeffs: &[&str]) -> Result<Self> {
        let mut out = Vec::with_capacity(coeffs.len());
        for s in coeffs.iter().rev() {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::Invalid(format!("bad integer coefficient {s:?}")))?;
            out.push(Rational::from_integer(c));
        }
        Ok(Self::from_coeffs(out))
    }

    /// `∏ (t − root)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::from_coeffs(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `t ↦ c·t`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &PolyT) -> Result<(PolyT, PolyT)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Returns `q` with `self = q · divisor`, or [`Error::InexactDivision`]
    /// when the remainder is nonzero.
    pub fn exact_divide(&self, divisor: &PolyT) -> Result<PolyT> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision {
                divisor: divisor.clone(),
            })
        }
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Splits `self = content · primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if scaled.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let primitive = scaled.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, den_lcm), primitive)
    }

    /// Primitive integer normalization as a polynomial.
    pub fn primitive(&self) -> Self {
        Self::from_coeffs(
            self.primitive_part()
                .1
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    /// Newton interpolation through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        let n = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                if dx.is_zero() {
                    return Err(Error::Invalid("interpolation nodes must be distinct".into()));
                }
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        let mut acc = PolyT::zero();
        for i in (0..n).rev() {
            let factor = PolyT::from_coeffs(vec![-points[i].0.clone(), Rational::one()]);
            acc = &(&acc * &factor) + &PolyT::constant(table[i].clone());
        }
        Ok(acc)
    }
}

impl From<Rational> for PolyT {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> PolyT {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(if negate_b { x - y } else { x + y });
    }
    PolyT::from_coeffs(out)
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        if self.is_zero() || rhs.is_zero() {
            return PolyT::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyT::from_coeffs(out)
    }
}

impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyT {
            type Output = PolyT;
            fn $m(self, rhs: PolyT) -> PolyT {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        -&self
    }
}

impl fmt::Display for PolyT {
    /// Descending powers, e.g. `10*t^2 - 55*t + 77`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let body = format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{body}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{body}*t^{i}")?,
            }
        }
        Ok(())
    }
}
