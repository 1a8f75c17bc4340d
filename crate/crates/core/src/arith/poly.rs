use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Dense polynomial in `x` with rational coefficients, lowest power first.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient list and [`Poly::degree`] returns `None` for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(-x)`: negates the odd-power coefficients.
    pub fn compose_neg(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(a + b x)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Self::from_coeffs(vec![a.clone(), b.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &inner) + &Self::constant(c.clone())
        })
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
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
        Poly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, rational_int};

    fn poly(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(a, b)| rational(a, b)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(poly(&[(0, 1)]).degree(), None);
        assert!(poly(&[(0, 1), (0, 3)]).is_zero());
    }

    #[test]
    fn compose_neg_of_zero_is_zero() {
        assert_eq!(Poly::zero().compose_neg(), Poly::zero());
    }

    #[test]
    fn compose_neg_flips_odd_coefficients() {
        let p = poly(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(p.compose_neg(), poly(&[(1, 1), (-2, 1), (3, 1), (-4, 1)]));
    }

    #[test]
    fn eval_small_bernoulli_polynomials() {
        let b1 = poly(&[(-1, 2), (1, 1)]);
        assert_eq!(b1.eval(&rational_int(1)), rational(1, 2));
        let b2 = poly(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(b2.eval(&rational_int(0)), rational(1, 6));
        assert_eq!(b2.eval(&rational(1, 2)), rational(-1, 12));
    }

    #[test]
    fn add_cancels_to_lower_degree() {
        let p = poly(&[(1, 1), (1, 1)]);
        let q = poly(&[(1, 2), (-1, 1)]);
        assert_eq!(&p + &q, poly(&[(3, 2)]));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn scale_and_mul() {
        let p = poly(&[(1, 1), (1, 1)]);
        assert_eq!(p.scale(&rational(1, 2)), poly(&[(1, 2), (1, 2)]));
        assert!(p.scale(&rational_int(0)).is_zero());
        assert_eq!(&p * &p, poly(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn compose_affine_reflection() {
        // (x^2)(1 - x) = 1 - 2x + x^2
        let sq = poly(&[(0, 1), (0, 1), (1, 1)]);
        let r = sq.compose_affine(&rational_int(1), &rational_int(-1));
        assert_eq!(r, poly(&[(1, 1), (-2, 1), (1, 1)]));
        assert_eq!(sq.compose_affine(&rational_int(0), &rational_int(-1)), sq.compose_neg());
    }
}
