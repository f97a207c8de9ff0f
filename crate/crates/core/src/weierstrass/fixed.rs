use num_traits::Zero;
use serde::Serialize;

use super::{kodaira_type_at, two_form_multiplier, DiagonalAutomorphism, Kodaira, WeierstrassFibration};
use crate::arith::{infinity_transform, Place, Rational};
use crate::error::{Error, Result};
use crate::lefschetz::PointType;

/// Exponents `(ex, ey, et)` of the automorphism in the chart around the
/// fiber over `t = 0` or `t = ∞`.
pub fn chart_exponents(g: &DiagonalAutomorphism, place: &Place) -> Result<(u8, u8, u8)> {
    let m = |e: i64| e.rem_euclid(8) as u8;
    let (ex, ey, et) = (g.ex as i64, g.ey as i64, g.et as i64);
    match place {
        Place::Infinity => Ok((m(ex - 4 * et), m(ey - 6 * et), m(-et))),
        p if *p == Place::zero() => Ok((g.ex, g.ey, g.et)),
        p => Err(Error::InvalidArgument(format!("{p} is not fixed by the base action"))),
    }
}

/// A σ-fixed point (or a σ-invariant set of `count` conjugate points) on a
/// smooth invariant fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberFixedPoint {
    pub point: String,
    pub count: u32,
    pub tangent: u8,
    pub normal: u8,
    pub point_type: Option<PointType>,
}

fn fiber_constants(f: &WeierstrassFibration, place: &Place) -> Result<(Rational, Rational)> {
    let (a, b) = f.short_model();
    match place {
        Place::Infinity => {
            let ch = infinity_transform(&a, &b)?;
            Ok((ch.a.coeff(0), ch.b.coeff(0)))
        }
        _ => Ok((a.coeff(0), b.coeff(0))),
    }
}

/// Fixed points of the diagonal part on the smooth fiber over `0` or `∞`.
///
/// The fixed points are `O` and the affine points with `x = 0` (if `x` is
/// scaled) and `y = 0` (if `y` is scaled). The tangent exponent comes from
/// implicit differentiation of `y² = x³ + A₀x + B₀`: the local parameter is
/// `x/y` at `O`, `x` where `y ≠ 0` and `y` where `y = 0`.
pub fn fixed_points_on_fiber(
    f: &WeierstrassFibration,
    g: &DiagonalAutomorphism,
    place: &Place,
) -> Result<Vec<FiberFixedPoint>> {
    if g.translate {
        return Err(Error::InvalidArgument("fixed points are computed for the diagonal part only".into()));
    }
    let (ex, ey, et) = chart_exponents(g, place)?;
    let report = kodaira_type_at(f, place)?;
    if report.kodaira != Kodaira::I(0) {
        return Err(Error::SingularFiber(format!("{} over {place}", report.kodaira)));
    }
    if ex == 0 && ey == 0 {
        return Err(Error::InvalidArgument(format!("the fiber over {place} is fixed pointwise")));
    }
    let (a0, b0) = fiber_constants(f, place)?;
    let e = two_form_multiplier(g);
    let make = |point: String, count: u32, tangent: u8| -> Result<FiberFixedPoint> {
        if (tangent + et) % 8 != e {
            return Err(Error::InconsistentConfiguration(format!("local exponents ({tangent}, {et}) at {point}")));
        }
        Ok(FiberFixedPoint { point, count, tangent, normal: et, point_type: PointType::from_exponents(tangent, et) })
    };
    let mut out = vec![make("O".into(), 1, (8 + ex - ey) % 8)?];
    match (ex != 0, ey != 0) {
        (true, true) => {
            if b0.is_zero() {
                out.push(make("(0,0)".into(), 1, ey)?);
            }
        }
        (true, false) => {
            if b0.is_zero() {
                out.push(make("(0,0)".into(), 1, ey)?);
            } else {
                out.push(make(format!("x=0, y^2={b0}"), 2, ex)?);
            }
        }
        (false, true) => {
            out.push(make(format!("y=0, x^3+({a0})x+({b0})=0"), 3, ey)?);
        }
        (false, false) => unreachable!(),
    }
    Ok(out)
}
