//! Explicit elliptic K3 surfaces `y² = x³ + a(t)x + b(t)` over ℚ and their
//! diagonal automorphisms `(x, y, t) ↦ (ζᵉˣ x, ζᵉʸ y, ζᵉᵗ t)`.

mod analysis;
mod fixed;
mod kodaira;
mod torsion;

pub use analysis::{
    analyze, paper_example, AnalysisReport, Configuration, Degeneration, ExampleReport, FiberAnalysis, Variant,
};
pub use fixed::{chart_exponents, fixed_points_on_fiber, FiberFixedPoint};
pub use kodaira::{fiber_inventory, kodaira_from_valuations, kodaira_type_at, FiberInventory, FiberReport, Kodaira};
pub use torsion::{
    convert_two_torsion_form, translation_fixed_points, verify_translation, CurveFunction, TranslationReport,
};

use serde::{Deserialize, Serialize};

use crate::arith::{weierstrass_discriminant, RationalPolynomial};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    /// `y² = x³ + a x + b`
    #[default]
    Short,
    /// `y² = x(x² + a x + b)`, with the 2-torsion section `(0, 0)`.
    TwoTorsion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassFibration {
    pub a: RationalPolynomial,
    pub b: RationalPolynomial,
    #[serde(default)]
    pub form: Form,
}

impl WeierstrassFibration {
    pub fn short(a: RationalPolynomial, b: RationalPolynomial) -> Result<Self> {
        Self { a, b, form: Form::Short }.validated()
    }

    pub fn two_torsion(a: RationalPolynomial, b: RationalPolynomial) -> Result<Self> {
        Self { a, b, form: Form::TwoTorsion }.validated()
    }

    /// Degree bounds `(a, b)` of the native coefficients.
    pub fn weights(&self) -> (usize, usize) {
        match self.form {
            Form::Short => (8, 12),
            Form::TwoTorsion => (4, 8),
        }
    }

    pub fn validated(self) -> Result<Self> {
        let (wa, wb) = self.weights();
        if self.a.degree().unwrap_or(0) > wa || self.b.degree().unwrap_or(0) > wb {
            return Err(Error::NotK3Datum(format!("coefficient degrees exceed ({wa}, {wb})")));
        }
        if self.form == Form::TwoTorsion && self.b.is_zero() {
            return Err(Error::NotK3Datum("b = 0 makes the cubic singular".into()));
        }
        if self.discriminant().is_zero() {
            return Err(Error::NotK3Datum("discriminant vanishes identically".into()));
        }
        Ok(self)
    }

    /// Coefficients `(A, B)` of the short model.
    pub fn short_model(&self) -> (RationalPolynomial, RationalPolynomial) {
        match self.form {
            Form::Short => (self.a.clone(), self.b.clone()),
            Form::TwoTorsion => convert_two_torsion_form(&self.a, &self.b),
        }
    }

    pub fn discriminant(&self) -> RationalPolynomial {
        let (a, b) = self.short_model();
        weierstrass_discriminant(&a, &b)
    }
}

/// `(x, y, t) ↦ (ζᵉˣ x, ζᵉʸ y, ζᵉᵗ t)`, optionally followed by translation by
/// the 2-torsion section.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalAutomorphism {
    pub ex: u8,
    pub ey: u8,
    pub et: u8,
    #[serde(default)]
    pub translate: bool,
}

impl DiagonalAutomorphism {
    pub fn new(ex: i64, ey: i64, et: i64) -> Self {
        let m = |e: i64| e.rem_euclid(8) as u8;
        DiagonalAutomorphism { ex: m(ex), ey: m(ey), et: m(et), translate: false }
    }

    pub fn with_translation(mut self) -> Self {
        self.translate = true;
        self
    }

    pub fn diagonal_part(&self) -> Self {
        DiagonalAutomorphism { translate: false, ..*self }
    }

    /// The `k`-th power; the translation survives for odd `k`.
    pub fn power(&self, k: u8) -> Self {
        let m = |e: u8| ((e as u32 * k as u32) % 8) as u8;
        DiagonalAutomorphism { ex: m(self.ex), ey: m(self.ey), et: m(self.et), translate: self.translate && k % 2 == 1 }
    }
}

fn exponents_ok(p: &RationalPolynomial, et: u8, target: i64) -> bool {
    p.terms().all(|(n, _)| (et as i64 * n as i64 - target).rem_euclid(8) == 0)
}

/// Whether the automorphism preserves the surface. For the short form this
/// means `2ey ≡ 3ex`, `a(ζᵉᵗt) = ζ^{2ey−ex} a(t)` and `b(ζᵉᵗt) = ζ^{2ey} b(t)`;
/// for the 2-torsion form `x²` and `x` carry `a` and `b` instead.
pub fn check_invariance(f: &WeierstrassFibration, g: &DiagonalAutomorphism) -> bool {
    let (ex, ey) = (g.ex as i64, g.ey as i64);
    if (2 * ey - 3 * ex).rem_euclid(8) != 0 {
        return false;
    }
    match f.form {
        Form::Short => exponents_ok(&f.a, g.et, 2 * ey - ex) && exponents_ok(&f.b, g.et, 2 * ey),
        Form::TwoTorsion => exponents_ok(&f.a, g.et, 2 * ey - 2 * ex) && exponents_ok(&f.b, g.et, 2 * ey - ex),
    }
}

/// Exponent `e` with `σ*ω = ζᵉ ω` for `ω = dt ∧ dx / 2y`.
pub fn two_form_multiplier(g: &DiagonalAutomorphism) -> u8 {
    ((g.et as i64 + g.ex as i64 - g.ey as i64).rem_euclid(8)) as u8
}

/// The two fixed points `t = 0, ∞` of the base with the local exponents of
/// the base action there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BaseFixedFibers {
    pub zero: u8,
    pub infinity: u8,
}

pub fn base_fixed_fibers(g: &DiagonalAutomorphism) -> Result<BaseFixedFibers> {
    if g.et.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("t ↦ ζ^{} t does not have order 8", g.et)));
    }
    Ok(BaseFixedFibers { zero: g.et, infinity: (8 - g.et) % 8 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Poly};

    fn poly(terms: &[(i64, usize)]) -> RationalPolynomial {
        Poly::from_terms(terms.iter().map(|&(c, e)| (rat(c), e)))
    }

    #[test]
    fn invariance_examples() {
        let f1 = WeierstrassFibration::short(poly(&[(1, 8), (1, 0)]), poly(&[(1, 8), (2, 0)])).unwrap();
        assert!(check_invariance(&f1, &DiagonalAutomorphism::new(0, 0, 1)));
        assert!(!check_invariance(&f1, &DiagonalAutomorphism::new(0, 1, 1)));
        let f3 = WeierstrassFibration::short(poly(&[(1, 8), (1, 0)]), poly(&[(1, 4), (1, 12)])).unwrap();
        assert!(check_invariance(&f3, &DiagonalAutomorphism::new(4, 2, 7)));
        assert!(check_invariance(&f3, &DiagonalAutomorphism::new(4, 6, 3)));
        let f4 = WeierstrassFibration::two_torsion(poly(&[(3, 4)]), poly(&[(1, 8), (1, 0)])).unwrap();
        assert!(check_invariance(&f4, &DiagonalAutomorphism::new(4, 2, 7)));
    }

    #[test]
    fn multipliers() {
        assert_eq!(two_form_multiplier(&DiagonalAutomorphism::new(4, 2, 7)), 1);
        assert_eq!(two_form_multiplier(&DiagonalAutomorphism::new(0, 0, 1)), 1);
        assert_eq!(two_form_multiplier(&DiagonalAutomorphism::new(4, 6, 3)), 1);
        assert_eq!(two_form_multiplier(&DiagonalAutomorphism::new(0, 4, 1)), 5);
        assert_eq!(two_form_multiplier(&DiagonalAutomorphism::new(0, 4, 1).power(5)), 1);
    }

    #[test]
    fn base_fibers() {
        assert_eq!(base_fixed_fibers(&DiagonalAutomorphism::new(0, 0, 1)).unwrap().infinity, 7);
        assert_eq!(base_fixed_fibers(&DiagonalAutomorphism::new(4, 2, 7)).unwrap().infinity, 1);
        assert!(base_fixed_fibers(&DiagonalAutomorphism::new(0, 0, 2)).is_err());
    }

    #[test]
    fn degree_bounds() {
        assert!(WeierstrassFibration::short(poly(&[(1, 9)]), poly(&[(1, 0)])).is_err());
        assert!(WeierstrassFibration::two_torsion(poly(&[(1, 5)]), poly(&[(1, 0)])).is_err());
        assert!(WeierstrassFibration::short(poly(&[]), poly(&[])).is_err());
    }
}
