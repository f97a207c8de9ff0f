//! Rational-coefficient polynomials: squarefree decomposition, rational
//! roots, valuations at places, and the JSON term-list encoding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{parse_rational, Rational};
use super::poly::Poly;
use crate::error::{Error, Result};

pub type RationalPolynomial = Poly<Rational>;

/// Order of vanishing; the zero polynomial vanishes to infinite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn at_least(self, n: u32) -> bool {
        self >= Valuation::Finite(n)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u32(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A point of the base ℙ¹.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    /// `t = t₀`.
    Rational(Rational),
    /// The zeros of a monic squarefree polynomial of degree ≥ 2 without
    /// rational roots. Only squarefree decomposition is performed, so the
    /// polynomial stands for `deg` conjugate places sharing every valuation
    /// computed here; it is irreducible in all cases the examples produce.
    Irreducible(RationalPolynomial),
    Infinity,
}

impl Place {
    pub fn zero() -> Self {
        Place::Rational(Rational::zero())
    }

    /// Creates a finite place from a monic factor, normalizing linear factors
    /// to their root.
    pub fn from_factor(p: &RationalPolynomial) -> Result<Self> {
        match p.degree() {
            None | Some(0) => Err(Error::InvalidArgument("a place needs a factor of positive degree".into())),
            Some(1) => {
                let m = p.monic();
                Ok(Place::Rational(-m.coeff(0)))
            }
            Some(_) => Ok(Place::Irreducible(p.monic())),
        }
    }

    /// Number of geometric points this place stands for.
    pub fn degree(&self) -> usize {
        match self {
            Place::Rational(_) | Place::Infinity => 1,
            Place::Irreducible(p) => p.degree().unwrap_or(0),
        }
    }

    fn factor(&self) -> Option<RationalPolynomial> {
        match self {
            Place::Rational(t0) => Some(RationalPolynomial::from_coeffs(vec![-t0.clone(), Rational::one()])),
            Place::Irreducible(p) => Some(p.clone()),
            Place::Infinity => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Rational(t0) => write!(f, "t={t0}"),
            Place::Irreducible(p) => write!(f, "roots of {p}"),
            Place::Infinity => write!(f, "t=inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Multiplicity of `place` as a root of `p`. Infinity has no intrinsic
/// meaning without a weight; use [`infinity_transform`](super::infinity_transform)
/// and evaluate at `s = 0`.
pub fn valuation_at(p: &RationalPolynomial, place: &Place) -> Result<Valuation> {
    let Some(factor) = place.factor() else {
        return Err(Error::InvalidArgument("valuation at infinity needs the weighted chart transform".into()));
    };
    if p.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let mut v = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.exact_div(&factor) {
        cur = q;
        v += 1;
    }
    Ok(Valuation::Finite(v))
}

/// Squarefree decomposition (Yun): pairs `(g_i, i)` with `p = c · Π g_i^i`,
/// each `g_i` monic, squarefree, pairwise coprime and nonconstant.
pub fn squarefree_decomposition(p: &RationalPolynomial) -> Result<Vec<(RationalPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let nb = b.exact_div(&a).expect("gcd divides");
        let nc = d.exact_div(&a).expect("gcd divides");
        d = &nc - &nb.derivative();
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        b = nb;
        i += 1;
    }
    Ok(out)
}

/// Clears denominators and content: a primitive integer polynomial with
/// positive leading coefficient, same roots.
pub fn primitive_integer_part(p: &RationalPolynomial) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> =
        p.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    ints
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &RationalPolynomial) -> Vec<Rational> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        let k = q.order_at_zero().unwrap_or(0);
        q = RationalPolynomial::from_coeffs(q.coeffs()[k..].to_vec());
    }
    if !q.is_constant() {
        let ints = primitive_integer_part(&q);
        let a0 = ints.first().expect("nonzero").clone();
        let an = ints.last().expect("nonzero").clone();
        for num in positive_divisors(&a0) {
            for den in positive_divisors(&an) {
                for cand in [Rational::new(num.clone(), den.clone()), -Rational::new(num.clone(), den.clone())] {
                    if q.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// One multiplicity class of a polynomial's factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub place: Place,
    pub multiplicity: usize,
}

impl ProfileEntry {
    pub fn degree(&self) -> usize {
        self.place.degree()
    }
}

/// Rational roots and residual squarefree factors of `p`, each with its
/// multiplicity. `Σ multiplicity · degree = deg p`.
pub fn multiplicity_profile(p: &RationalPolynomial) -> Result<Vec<ProfileEntry>> {
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(p)? {
        let mut residual = g.clone();
        for r in rational_roots(&g) {
            let lin = RationalPolynomial::from_coeffs(vec![-r.clone(), Rational::one()]);
            residual = residual.exact_div(&lin).expect("root divides");
            out.push(ProfileEntry { place: Place::Rational(r), multiplicity: mult });
        }
        if !residual.is_constant() {
            out.push(ProfileEntry { place: Place::Irreducible(residual.monic()), multiplicity: mult });
        }
    }
    out.sort_by(|a, b| match (&a.place, &b.place) {
        (Place::Rational(x), Place::Rational(y)) => x.cmp(y),
        (Place::Rational(_), _) => Ordering::Less,
        (_, Place::Rational(_)) => Ordering::Greater,
        _ => b.multiplicity.cmp(&a.multiplicity),
    });
    Ok(out)
}

impl Serialize for Poly<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(String, usize)> =
            self.terms().collect::<Vec<_>>().into_iter().rev().map(|(e, c)| (c.to_string(), e)).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(String, usize)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (c, e) in raw {
            let q = parse_rational(&c).ok_or_else(|| D::Error::custom(format!("bad rational literal {c:?}")))?;
            terms.push((q, e));
        }
        Ok(Poly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{rat, ratio};

    fn poly(terms: &[(i64, usize)]) -> RationalPolynomial {
        Poly::from_terms(terms.iter().map(|&(c, e)| (rat(c), e)))
    }

    #[test]
    fn valuation_at_rational_root() {
        // t^3 (t - 1)
        let p = poly(&[(1, 4), (-1, 3)]);
        assert_eq!(valuation_at(&p, &Place::zero()).unwrap(), Valuation::Finite(3));
        assert_eq!(valuation_at(&p, &Place::Rational(rat(1))).unwrap(), Valuation::Finite(1));
        assert_eq!(valuation_at(&p, &Place::Rational(rat(2))).unwrap(), Valuation::Finite(0));
    }

    #[test]
    fn valuation_at_irreducible_factor() {
        let p = poly(&[(1, 2), (1, 0)]);
        let place = Place::from_factor(&p).unwrap();
        assert_eq!(valuation_at(&p, &place).unwrap(), Valuation::Finite(1));
        assert_eq!(valuation_at(&RationalPolynomial::zero(), &place).unwrap(), Valuation::Infinite);
        assert!(valuation_at(&p, &Place::Infinity).is_err());
    }

    #[test]
    fn linear_factor_normalizes_to_root() {
        let p = poly(&[(2, 1), (-3, 0)]);
        assert_eq!(Place::from_factor(&p).unwrap(), Place::Rational(ratio(3, 2)));
    }

    #[test]
    fn profile_of_visible_factorization() {
        // t^2 (t - 1)
        let p = poly(&[(1, 3), (-1, 2)]);
        let prof = multiplicity_profile(&p).unwrap();
        assert_eq!(
            prof,
            vec![
                ProfileEntry { place: Place::Rational(rat(0)), multiplicity: 2 },
                ProfileEntry { place: Place::Rational(rat(1)), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn profile_rejects_zero() {
        assert_eq!(multiplicity_profile(&RationalPolynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_recovers_exponents() {
        // (t^2+1)^3 (t-2)^2 (3t+1)
        let a = poly(&[(1, 2), (1, 0)]);
        let b = poly(&[(1, 1), (-2, 0)]);
        let c = poly(&[(3, 1), (1, 0)]);
        let p = &(&a.pow(3) * &b.pow(2)) * &c;
        let dec = squarefree_decomposition(&p).unwrap();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], (c.monic(), 1));
        assert_eq!(dec[1], (b, 2));
        assert_eq!(dec[2], (a, 3));
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2t - 3)(5t + 4) t
        let p = &(&poly(&[(2, 1), (-3, 0)]) * &poly(&[(5, 1), (4, 0)])) * &poly(&[(1, 1)]);
        assert_eq!(rational_roots(&p), vec![ratio(-4, 5), rat(0), ratio(3, 2)]);
    }

    #[test]
    fn json_term_list() {
        let p = Poly::from_terms([(ratio(1, 2), 8), (rat(-3), 0)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[["1/2",8],["-3",0]]"#);
        let back: RationalPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<RationalPolynomial>(r#"[["1/0",1]]"#).is_err());
    }
}
