//! Exact rational, polynomial and ℚ(ζ₈) arithmetic.

mod cyc8;
mod field;
mod poly;
mod ratfunc;
mod rpoly;

pub use cyc8::Cyc8;
pub use field::{parse_rational, rat, ratio, Field, Rational};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rpoly::{
    multiplicity_profile, primitive_integer_part, rational_roots, squarefree_decomposition, valuation_at, Place,
    ProfileEntry, RationalPolynomial, Valuation,
};

use crate::error::{Error, Result};

/// `4a³ + 27b²`.
pub fn weierstrass_discriminant(a: &RationalPolynomial, b: &RationalPolynomial) -> RationalPolynomial {
    &a.pow(3).scale(&rat(4)) + &b.pow(2).scale(&rat(27))
}

/// Coefficients of `y² = x³ + a x + b` in the chart `s = 1/t` at infinity,
/// i.e. `(s⁸ a(1/s), s¹² b(1/s), s²⁴ Δ(1/s))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityChart {
    pub a: RationalPolynomial,
    pub b: RationalPolynomial,
    pub delta: RationalPolynomial,
}

pub fn infinity_transform(a: &RationalPolynomial, b: &RationalPolynomial) -> Result<InfinityChart> {
    let at = a
        .reverse_with_weight(8)
        .ok_or_else(|| Error::NotK3Datum(format!("deg a = {} > 8", a.degree().unwrap_or(0))))?;
    let bt = b
        .reverse_with_weight(12)
        .ok_or_else(|| Error::NotK3Datum(format!("deg b = {} > 12", b.degree().unwrap_or(0))))?;
    let delta = weierstrass_discriminant(&at, &bt);
    Ok(InfinityChart { a: at, b: bt, delta })
}
