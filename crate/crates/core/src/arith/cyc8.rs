//! The cyclotomic field ℚ(ζ₈) in the power basis (1, ζ, ζ², ζ³), ζ⁴ = −1.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::field::{rat, Field, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc8 {
    coords: [Rational; 4],
}

impl Cyc8 {
    pub fn new(coords: [Rational; 4]) -> Self {
        Cyc8 { coords }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyc8::new(c.map(rat))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyc8::new([q, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    /// `ζ^e` for any integer `e`.
    pub fn zeta_pow(e: i64) -> Self {
        let e = e.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if e < 4 {
            c[e] = 1;
        } else {
            c[e - 4] = -1;
        }
        Cyc8::from_ints(c)
    }

    /// The automorphism ζ ↦ ζ^j, for `j` odd. `galois(7)` is complex
    /// conjugation.
    pub fn galois(&self, j: i64) -> Result<Self> {
        if j.rem_euclid(2) == 0 {
            return Err(Error::InvalidArgument(format!("ζ ↦ ζ^{j} is not an automorphism of Q(ζ8)")));
        }
        let mut out = Cyc8::zero();
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out = out + Cyc8::zeta_pow(j * k as i64).scale(c);
            }
        }
        Ok(out)
    }

    pub fn conj(&self) -> Self {
        self.galois(7).expect("7 is odd")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyc8::new(self.coords.clone().map(|c| c * q))
    }

    /// Multiplicative inverse, by solving the 4×4 rational system `x·y = 1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Column k of the multiplication matrix is self·ζ^k.
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); 5]; 4];
        for k in 0..4 {
            let col = self.clone() * Cyc8::zeta_pow(k as i64);
            for (r, row) in m.iter_mut().enumerate() {
                row[k] = col.coords[r].clone();
            }
        }
        m[0][4] = Rational::one();
        for col in 0..4 {
            let piv =
                (col..4).find(|&r| !m[r][col].is_zero()).expect("multiplication by a nonzero element is invertible");
            m.swap(col, piv);
            let inv = Rational::one() / m[col][col].clone();
            for v in m[col].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..5 {
                        let d = m[col][c].clone() * f.clone();
                        m[r][c] = m[r][c].clone() - d;
                    }
                }
            }
        }
        Ok(Cyc8::new([m[0][4].clone(), m[1][4].clone(), m[2][4].clone(), m[3][4].clone()]))
    }
}

impl Zero for Cyc8 {
    fn zero() -> Self {
        Cyc8::from_ints([0; 4])
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl One for Cyc8 {
    fn one() -> Self {
        Cyc8::from_ints([1, 0, 0, 0])
    }
}

impl Add for Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: Cyc8) -> Cyc8 {
        let [a0, a1, a2, a3] = self.coords;
        let [b0, b1, b2, b3] = rhs.coords;
        Cyc8::new([a0 + b0, a1 + b1, a2 + b2, a3 + b3])
    }
}

impl Sub for Cyc8 {
    type Output = Cyc8;
    fn sub(self, rhs: Cyc8) -> Cyc8 {
        self + (-rhs)
    }
}

impl Neg for Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        Cyc8::new(self.coords.map(|c| -c))
    }
}

impl Mul for Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: Cyc8) -> Cyc8 {
        let mut out: [Rational; 4] = Default::default();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                let p = a * b;
                let k = i + j;
                if k < 4 {
                    out[k] += p;
                } else {
                    out[k - 4] -= p;
                }
            }
        }
        Cyc8::new(out)
    }
}

impl Div for Cyc8 {
    type Output = Cyc8;
    fn div(self, rhs: Cyc8) -> Cyc8 {
        self * rhs.inverse().expect("division by zero in Q(ζ8)")
    }
}

impl Field for Cyc8 {
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn from_i64(n: i64) -> Self {
        Cyc8::from_rational(rat(n))
    }
}

impl fmt::Display for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const BASIS: [&str; 4] = ["", "ζ", "ζ^2", "ζ^3"];
        let mut wrote = false;
        for (c, b) in self.coords.iter().zip(BASIS) {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            if b.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "({c}){b}")?;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc8[{}]", self)
    }
}

impl Serialize for Cyc8 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::ratio;

    fn z(e: i64) -> Cyc8 {
        Cyc8::zeta_pow(e)
    }

    #[test]
    fn zeta_squared_squared_is_minus_one() {
        assert_eq!(z(2) * z(2), -Cyc8::one());
    }

    #[test]
    fn zeta_pow_examples() {
        assert_eq!(z(0), Cyc8::one());
        assert_eq!(z(4), Cyc8::from_ints([-1, 0, 0, 0]));
        assert_eq!(z(7), Cyc8::from_ints([0, 0, 0, -1]));
        assert_eq!(z(-1), z(7));
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        let x = Cyc8::one() - z(1);
        assert_eq!(x.inverse().unwrap() * x, Cyc8::one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(Cyc8::zero().inverse(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn norm_of_one_minus_zeta_is_two() {
        // Φ8(1) = 2
        let p = [1, 3, 5, 7].into_iter().map(|j| Cyc8::one() - z(j)).fold(Cyc8::one(), |a, b| a * b);
        assert_eq!(p, Cyc8::from_ints([2, 0, 0, 0]));
    }

    #[test]
    fn galois_seven_is_conjugation() {
        let x = Cyc8::new([ratio(1, 2), rat(3), rat(-1), ratio(2, 7)]);
        // ζ̄ = ζ^{-1}
        let expected =
            Cyc8::from_rational(ratio(1, 2)) + z(-1).scale(&rat(3)) + z(-2).scale(&rat(-1)) + z(-3).scale(&ratio(2, 7));
        assert_eq!(x.conj(), expected);
        assert!(x.galois(2).is_err());
    }
}
