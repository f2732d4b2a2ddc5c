use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

/// Power series in `q` known exactly up to `O(q^order)`.
///
/// `coeffs.len() == order` always; coefficient `i` is that of `q^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Takes `coeffs` as `q^0 .. q^{len-1}`; the order is `coeffs.len()`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// `c·q^power + O(q^order)`.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` past the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    /// Index of the first nonzero coefficient within the known range.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Valid order of a product: `min(order_a + v_b, order_b + v_a)`,
    /// where `v` is the valuation. With both valuations zero this is the
    /// usual `min(order_a, order_b)`.
    fn product_order(&self, rhs: &Self) -> usize {
        let va = self.valuation().unwrap_or(self.order());
        let vb = rhs.valuation().unwrap_or(rhs.order());
        (self.order() + vb).min(rhs.order() + va)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
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
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        QSeries::new((0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        QSeries::new((0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.product_order(rhs);
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        QSeries::new(out)
    }
}
