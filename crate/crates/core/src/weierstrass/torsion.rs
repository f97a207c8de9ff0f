//! Translation by the 2-torsion section of `y² = x(x² + a x + b)`.
//!
//! Functions on the generic fiber are `p(x) + q(x)·y` with `p, q` in
//! `K(x)`, `K = ℚ(ζ₈)(t)`, reduced by `y² = x³ + a x² + b x`. The
//! translation `P ↦ P + T` by `T = (0, 0)` is `(x, y) ↦ (b/x, −b y/x²)`.

use num_traits::{One, Zero};
use serde::Serialize;

use super::kodaira::discriminant_places;
use super::{kodaira_type_at, DiagonalAutomorphism, Form, Kodaira, WeierstrassFibration};
use crate::arith::{rat, valuation_at, Cyc8, Place, Poly, RatFunc, RationalPolynomial};
use crate::error::{Error, Result};

/// `(A, B) = (9b − 3a², 2a³ − 9ab)`, a short model of `y² = x(x² + ax + b)`.
pub fn convert_two_torsion_form(
    a: &RationalPolynomial,
    b: &RationalPolynomial,
) -> (RationalPolynomial, RationalPolynomial) {
    let a2 = a * a;
    let big_a = &b.scale(&rat(9)) - &a2.scale(&rat(3));
    let big_b = &(&a2 * a).scale(&rat(2)) - &(a * b).scale(&rat(9));
    (big_a, big_b)
}

type K = RatFunc<Cyc8>;
type KX = RatFunc<K>;

fn lift_t(p: &RationalPolynomial) -> K {
    RatFunc::from_poly(p.map_coeffs(|_, c| Cyc8::from_rational(c.clone())))
}

/// An element `p + q·y` of the function field of the generic fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFunction {
    p: KX,
    q: KX,
}

#[derive(Clone, Debug)]
struct Curve {
    b: K,
    cubic: KX,
}

impl Curve {
    fn new(a: &RationalPolynomial, b: &RationalPolynomial) -> Curve {
        let (a, b) = (lift_t(a), lift_t(b));
        let cubic = RatFunc::from_poly(Poly::from_coeffs(vec![K::zero(), b.clone(), a.clone(), K::one()]));
        Curve { b, cubic }
    }

    fn x(&self) -> CurveFunction {
        CurveFunction { p: KX::var(), q: KX::zero() }
    }

    fn y(&self) -> CurveFunction {
        CurveFunction { p: KX::zero(), q: KX::one() }
    }

    fn constant(&self, c: K) -> CurveFunction {
        CurveFunction { p: KX::constant(c), q: KX::zero() }
    }

    fn add(&self, u: &CurveFunction, v: &CurveFunction) -> CurveFunction {
        CurveFunction { p: u.p.clone() + v.p.clone(), q: u.q.clone() + v.q.clone() }
    }

    fn mul(&self, u: &CurveFunction, v: &CurveFunction) -> CurveFunction {
        let p = u.p.clone() * v.p.clone() + u.q.clone() * v.q.clone() * self.cubic.clone();
        let q = u.p.clone() * v.q.clone() + u.q.clone() * v.p.clone();
        CurveFunction { p, q }
    }

    fn inv(&self, u: &CurveFunction) -> Result<CurveFunction> {
        let norm = u.p.clone() * u.p.clone() - u.q.clone() * u.q.clone() * self.cubic.clone();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CurveFunction { p: u.p.clone() / norm.clone(), q: -(u.q.clone()) / norm })
    }

    fn eval_poly(&self, p: &Poly<K>, at: &CurveFunction) -> CurveFunction {
        let mut acc = CurveFunction { p: KX::zero(), q: KX::zero() };
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, at), &self.constant(c.clone()));
        }
        acc
    }

    fn eval_rational(&self, r: &KX, at: &CurveFunction) -> Result<CurveFunction> {
        let num = self.eval_poly(r.num(), at);
        let den = self.eval_poly(r.den(), at);
        Ok(self.mul(&num, &self.inv(&den)?))
    }

    /// `u ∘ φ` for the map `φ = (X, Y)`.
    fn compose(&self, u: &CurveFunction, map: &(CurveFunction, CurveFunction)) -> Result<CurveFunction> {
        let p = self.eval_rational(&u.p, &map.0)?;
        let q = self.eval_rational(&u.q, &map.0)?;
        Ok(self.add(&p, &self.mul(&q, &map.1)))
    }

    /// `u ∘ σ` for a diagonal σ.
    fn pullback(&self, u: &CurveFunction, g: &DiagonalAutomorphism) -> CurveFunction {
        let on_t = |c: &K| c.map_coeffs(|n, z| z.clone() * Cyc8::zeta_pow(g.et as i64 * n as i64));
        let on_x = |r: &KX| r.map_coeffs(|n, c| on_t(c) * K::constant(Cyc8::zeta_pow(g.ex as i64 * n as i64)));
        let y_scale = KX::constant(K::constant(Cyc8::zeta_pow(g.ey as i64)));
        CurveFunction { p: on_x(&u.p), q: on_x(&u.q) * y_scale }
    }

    fn scaled(&self, u: &CurveFunction, e: u8) -> CurveFunction {
        self.mul(&self.constant(K::constant(Cyc8::zeta_pow(e as i64))), u)
    }

    fn translation(&self) -> Result<(CurveFunction, CurveFunction)> {
        let x = self.x();
        let inv_x = self.inv(&x)?;
        let big_x = self.mul(&self.constant(self.b.clone()), &inv_x);
        let big_y = self.mul(&self.constant(-self.b.clone()), &self.mul(&self.y(), &self.mul(&inv_x, &inv_x)));
        Ok((big_x, big_y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationReport {
    /// `τ ∘ τ = id`.
    pub involutive: bool,
    /// `τ` maps the curve to itself.
    pub on_curve: bool,
    /// `x · τ*(x) = b`, so `τ` exchanges `O` (pole of `x`) and `T` (zero of `x`).
    pub swaps_sections: bool,
    /// `σ ∘ τ = τ ∘ σ`, when a σ is supplied.
    pub commutes: Option<bool>,
}

pub fn verify_translation(f: &WeierstrassFibration, g: Option<&DiagonalAutomorphism>) -> Result<TranslationReport> {
    if f.form != Form::TwoTorsion {
        return Err(Error::InvalidArgument("translation needs the 2-torsion form".into()));
    }
    let c = Curve::new(&f.a, &f.b);
    let tau = c.translation()?;
    let (x, y) = (c.x(), c.y());
    let involutive = c.compose(&tau.0, &tau)? == x && c.compose(&tau.1, &tau)? == y;
    let lhs = c.mul(&tau.1, &tau.1);
    let rhs = c.compose(&CurveFunction { p: c.cubic.clone(), q: KX::zero() }, &tau)?;
    let on_curve = lhs == rhs;
    let swaps_sections = c.mul(&x, &tau.0) == c.constant(c.b.clone());
    let commutes =
        g.map(|g| c.scaled(&tau.0, g.ex) == c.pullback(&tau.0, g) && c.scaled(&tau.1, g.ey) == c.pullback(&tau.1, g));
    Ok(TranslationReport { involutive, on_curve, swaps_sections, commutes })
}

/// Fixed points of the translation, counted over the singular fibers: on
/// I_n it fixes the n nodes when `T` meets the identity component, and
/// nothing when `T` is the node of the Weierstrass model.
pub fn translation_fixed_points(f: &WeierstrassFibration) -> Result<u32> {
    if f.form != Form::TwoTorsion {
        return Err(Error::InvalidArgument("translation needs the 2-torsion form".into()));
    }
    let b_inf = f.b.reverse_with_weight(8).ok_or_else(|| Error::NotK3Datum("deg b > 8".into()))?;
    let mut places: Vec<(Place, RationalPolynomial, Place)> =
        discriminant_places(f)?.into_iter().map(|p| (p.clone(), f.b.clone(), p)).collect();
    places.push((Place::Infinity, b_inf, Place::zero()));
    let mut total = 0;
    for (place, b, local) in places {
        let rep = kodaira_type_at(f, &place)?;
        let n = match rep.kodaira {
            Kodaira::I(0) => continue,
            Kodaira::I(n) => n,
            k => return Err(Error::InvalidArgument(format!("translation on a fiber of type {k}"))),
        };
        let t_at_node = valuation_at(&b, &local)?.at_least(1);
        if !t_at_node {
            total += n * place.degree() as u32;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{weierstrass_discriminant, Poly};

    fn poly(terms: &[(i64, usize)]) -> RationalPolynomial {
        Poly::from_terms(terms.iter().map(|&(c, e)| (rat(c), e)))
    }

    #[test]
    fn conversion_matches_family() {
        // a = αt⁴, b = βt⁸ + γ
        let (al, be, ga) = (3, 1, 1);
        let (a, b) = convert_two_torsion_form(&poly(&[(al, 4)]), &poly(&[(be, 8), (ga, 0)]));
        assert_eq!(a, poly(&[(9 * be - 3 * al * al, 8), (9 * ga, 0)]));
        assert_eq!(b, poly(&[(2 * al * al * al - 9 * al * be, 12), (-9 * al * ga, 4)]));
        let (a0, b0) = convert_two_torsion_form(&Poly::zero(), &poly(&[(2, 8), (5, 0)]));
        assert!(b0.is_zero());
        assert_eq!(a0, poly(&[(18, 8), (45, 0)]));
    }

    #[test]
    fn discriminant_ratio() {
        let samples = [
            (poly(&[(3, 4)]), poly(&[(1, 8), (1, 0)])),
            (poly(&[(1, 4), (-2, 1), (5, 0)]), poly(&[(2, 7), (1, 3), (-1, 0)])),
            (poly(&[(7, 2), (1, 0)]), poly(&[(-3, 8), (4, 5), (2, 0)])),
        ];
        for (a, b) in samples {
            let (big_a, big_b) = convert_two_torsion_form(&a, &b);
            let d = weierstrass_discriminant(&big_a, &big_b);
            let target = &(&b * &b) * &(&(&a * &a) - &b.scale(&rat(4)));
            let (q, r) = d.div_rem(&target);
            assert!(r.is_zero());
            assert_eq!(q, Poly::constant(rat(-729)));
        }
    }

    #[test]
    fn translation_identities() {
        let f = WeierstrassFibration::two_torsion(poly(&[(3, 4)]), poly(&[(1, 8), (1, 0)])).unwrap();
        let g = DiagonalAutomorphism::new(4, 2, 7);
        let rep = verify_translation(&f, Some(&g)).unwrap();
        assert!(rep.involutive && rep.on_curve && rep.swaps_sections);
        assert_eq!(rep.commutes, Some(true));
        // x ↦ ix needs b(ζᵉᵗt) = −b(t)
        let bad = DiagonalAutomorphism::new(2, 3, 1);
        assert_eq!(verify_translation(&f, Some(&bad)).unwrap().commutes, Some(false));
    }
}
