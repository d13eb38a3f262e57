use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in `t` with integer coefficients; `coeffs()[k]` multiplies
/// `t^k`. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `t - a`.
    pub fn linear_root(a: i64) -> Self {
        IntPolynomial::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact value at any integer `t`, by Horner's rule.
    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn evaluate_i64(&self, t: i64) -> BigInt {
        self.evaluate(&BigInt::from(t))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::from_i64(&[1]), |acc, _| &acc * self)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// `evaluate` as a free function.
pub fn evaluate(p: &IntPolynomial, t: i64) -> BigInt {
    p.evaluate_i64(t)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &-rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Highest power first, e.g. `t^4 - 4t^3 + 5t^2 - 2t`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_poly() -> IntPolynomial {
        // t(t-1)^2(t-2)
        let t = IntPolynomial::monomial(1);
        &(&t * &IntPolynomial::linear_root(1).pow(2)) * &IntPolynomial::linear_root(2)
    }

    #[test]
    fn closed_form_expands() {
        assert_eq!(fig1_poly(), IntPolynomial::from_i64(&[0, -2, 5, -4, 1]));
        assert_eq!(fig1_poly().to_string(), "t^4 - 4t^3 + 5t^2 - 2t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[-1, 0, -3]).to_string(), "-3t^2 - 1");
    }

    #[test]
    fn evaluation() {
        let p = fig1_poly();
        assert_eq!(evaluate(&p, 4), BigInt::from(72));
        assert_eq!(evaluate(&p, -1), BigInt::from(12));
        assert_eq!(evaluate(&p, -2), BigInt::from(72));
        let q = IntPolynomial::from_i64(&[7, 3, 1]);
        assert_eq!(evaluate(&q, 0), BigInt::from(7));
        assert_eq!(evaluate(&IntPolynomial::zero(), 5), BigInt::zero());
    }

    #[test]
    fn canonical_form() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!((&p - &p).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }
}
