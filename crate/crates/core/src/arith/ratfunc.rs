//! Rational functions `num / den` over an exact field, reduced with a monic
//! denominator. They form a field, so they nest: `RatFunc<RatFunc<Cyc8>>` is
//! ℚ(ζ₈)(t)(x).

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::Field;
use super::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading().expect("nonzero").clone();
        let inv = F::one() / lc;
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// Applies a coefficient map to numerator and denominator. The map must be
    /// a ring homomorphism that keeps the denominator nonzero.
    pub fn map_coeffs(&self, f: impl Fn(usize, &F) -> F) -> Self {
        Self::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den);
        }
        Self::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Field> Div for RatFunc<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "rational function division by zero");
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{rat, Rational};

    type Q = Rational;

    #[test]
    fn reduces_to_lowest_terms() {
        let t = Poly::<Q>::x();
        let one = Poly::<Q>::one();
        // (t^2 - 1) / (2t - 2) = (t + 1) / 2
        let f = RatFunc::new(&(&t * &t) - &one, (&t - &one).scale(&rat(2)));
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(f.num(), &(&t + &one).scale(&(Q::one() / rat(2))));
    }

    #[test]
    fn field_identities() {
        let t = RatFunc::<Q>::var();
        let f = (t.clone() + RatFunc::one()) / (t.clone() - RatFunc::constant(rat(3)));
        assert_eq!(f.clone() / f.clone(), RatFunc::one());
        assert_eq!(f.clone() - f, RatFunc::zero());
    }
}
