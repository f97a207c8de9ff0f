use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    base_fixed_fibers, chart_exponents, check_invariance, fiber_inventory, fixed_points_on_fiber, kodaira_type_at,
    translation_fixed_points, two_form_multiplier, verify_translation, DiagonalAutomorphism, FiberFixedPoint,
    FiberInventory, FiberReport, Form, TranslationReport, WeierstrassFibration,
};
use crate::arith::{rat, valuation_at, Place, Poly, Rational, RationalPolynomial};
use crate::classifier::enumerate_cases;
use crate::error::{Error, Result};
use crate::fiber::{action_label, elliptic_action_data, fiber_fixed_data, EllipticAction, FiberAction, FiberShape};
use crate::lefschetz::PointType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberAnalysis {
    pub place: Place,
    pub report: FiberReport,
    /// Exponents `(ex, ey, et)` in the local chart.
    pub chart: (u8, u8, u8),
    #[serde(skip)]
    pub shape: Option<FiberShape>,
    #[serde(skip)]
    pub action: Option<FiberAction>,
    pub action_label: Option<String>,
    pub fixed_points: Vec<FiberFixedPoint>,
    /// Whether the 2-torsion section passes through the node.
    pub torsion_at_node: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub c_place: Place,
    pub action_on_c: String,
    pub action_on_second: String,
    pub n2: u32,
    pub n3: u32,
    pub n4: u32,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub fibration: WeierstrassFibration,
    pub automorphism: DiagonalAutomorphism,
    /// The automorphism as given, when a power of it was taken to make the
    /// two-form multiplier ζ₈.
    pub normalized_from: Option<DiagonalAutomorphism>,
    pub two_form_exponent: u8,
    pub inventory: FiberInventory,
    pub euler_sum: u32,
    pub invariant_fibers: Vec<FiberAnalysis>,
    pub translation: Option<TranslationReport>,
    pub translation_fixed_points: Option<u32>,
    pub configuration: Option<Configuration>,
    pub matched_row: Option<usize>,
    pub notes: Vec<String>,
}

fn torsion_at_node(f: &WeierstrassFibration, place: &Place) -> Result<bool> {
    let (b, at) = match place {
        Place::Infinity => {
            (f.b.reverse_with_weight(8).ok_or_else(|| Error::NotK3Datum("deg b > 8".into()))?, Place::zero())
        }
        p => (f.b.clone(), p.clone()),
    };
    Ok(valuation_at(&b, &at)?.at_least(1))
}

fn smooth_action(
    f: &WeierstrassFibration,
    g: &DiagonalAutomorphism,
    place: &Place,
    chart: (u8, u8, u8),
    notes: &mut Vec<String>,
) -> Result<(Option<EllipticAction>, Vec<FiberFixedPoint>)> {
    let (ex, ey, _) = chart;
    if ex == 0 && ey == 0 {
        let a = if g.translate { EllipticAction::Translation2 } else { EllipticAction::Identity };
        return Ok((Some(a), Vec::new()));
    }
    let pts = fixed_points_on_fiber(f, &g.diagonal_part(), place)?;
    let action = match (ex, ey) {
        (0, 4) => Some(EllipticAction::Involution),
        (4, 2) | (4, 6) => {
            let types: Vec<Option<PointType>> = pts.iter().map(|p| p.point_type).collect();
            match types.first() {
                Some(&Some(t)) if types.iter().all(|&x| x == Some(t)) => Some(EllipticAction::OrderFour([t, t])),
                _ => None,
            }
        }
        _ => None,
    };
    if action.is_none() {
        notes.push(format!("unmodelled action ({ex}, {ey}) on the smooth fiber over {place}"));
    }
    Ok((action, pts))
}

fn analyze_fiber(
    f: &WeierstrassFibration,
    g: &DiagonalAutomorphism,
    place: Place,
    notes: &mut Vec<String>,
) -> Result<FiberAnalysis> {
    let report = kodaira_type_at(f, &place)?;
    let chart = chart_exponents(g, &place)?;
    let (ex, ey, et) = chart;
    let shape = report.kodaira.shape();
    let mut fixed_points = Vec::new();
    let mut torsion = None;
    let action = match shape {
        Some(FiberShape::Smooth) => {
            let (a, pts) = smooth_action(f, g, &place, chart, notes)?;
            fixed_points = pts;
            a.map(FiberAction::Elliptic)
        }
        Some(FiberShape::I(n)) => {
            // the two branches at the node are y = ±c·(x − x₀)
            let mut a = match (8 + ey - ex) % 8 {
                0 => Some(FiberAction::Preserve),
                4 => Some(FiberAction::Reflection),
                _ => None,
            };
            if g.translate {
                let at_node = torsion_at_node(f, &place)?;
                torsion = Some(at_node);
                if at_node && a == Some(FiberAction::Preserve) {
                    a = Some(FiberAction::Rotation(2));
                }
            }
            if let Some(act) = a {
                match fiber_fixed_data(FiberShape::I(n), act) {
                    Ok(d) if d.base_exponents.contains(&et) => {}
                    _ => {
                        notes.push(format!("{act:?} on I_{n} is inconsistent with base exponent {et}"));
                        a = None;
                    }
                }
            }
            a
        }
        Some(FiberShape::IVStar) => [FiberAction::Preserve, FiberAction::BranchSwap].into_iter().find(|&a| {
            fiber_fixed_data(FiberShape::IVStar, a).map(|d| d.base_exponents.contains(&et)).unwrap_or(false)
        }),
        None => None,
    };
    let action_label = match (shape, action) {
        (Some(s), Some(a)) => action_label(s, a).ok(),
        _ => None,
    };
    Ok(FiberAnalysis { place, report, chart, shape, action, action_label, fixed_points, torsion_at_node: torsion })
}

fn configuration(
    fibers: &[FiberAnalysis],
    notes: &mut Vec<String>,
) -> Result<Option<(Configuration, EllipticAction, (FiberShape, FiberAction))>> {
    let elliptic = |fa: &FiberAnalysis| match fa.action {
        Some(FiberAction::Elliptic(e)) => Some(e),
        _ => None,
    };
    let order_four = |fa: &FiberAnalysis| matches!(elliptic(fa), Some(EllipticAction::OrderFour(_)));
    let (ci, si) = match (elliptic(&fibers[0]), elliptic(&fibers[1])) {
        (Some(_), Some(_)) => match (order_four(&fibers[0]), order_four(&fibers[1])) {
            (false, true) => (0, 1),
            (true, false) => (1, 0),
            _ => {
                notes.push("σ must act with order four on exactly one smooth invariant fiber".into());
                return Ok(None);
            }
        },
        (Some(_), None) => (0, 1),
        (None, Some(_)) => (1, 0),
        (None, None) => {
            notes.push("no smooth invariant fiber".into());
            return Ok(None);
        }
    };
    let c = elliptic(&fibers[ci]).expect("checked");
    let (Some(shape), Some(action)) = (fibers[si].shape, fibers[si].action) else {
        notes.push("the second invariant fiber carries no modelled action".into());
        return Ok(None);
    };
    let dc = elliptic_action_data(c)?;
    let d2 = fiber_fixed_data(shape, action)?;
    for fa in [&fibers[ci], &fibers[si]] {
        if let Some(FiberAction::Elliptic(e)) = fa.action {
            let expected = elliptic_action_data(e)?.points.total();
            let found: u32 = fa.fixed_points.iter().map(|p| p.count).sum();
            if !fa.fixed_points.is_empty() && expected != found {
                notes.push(format!("{found} fixed points over {} where {expected} were expected", fa.place));
            }
        }
    }
    let pts = dc.points + d2.points;
    let cfg = Configuration {
        c_place: fibers[ci].place.clone(),
        action_on_c: c.label().to_string(),
        action_on_second: action_label(shape, action)?,
        n2: pts.n2,
        n3: pts.n3,
        n4: pts.n4,
        k: d2.k_sigma,
    };
    Ok(Some((cfg, c, (shape, action))))
}

/// Full analysis of a fibration with a diagonal automorphism (possibly
/// composed with the 2-torsion translation).
pub fn analyze(f: &WeierstrassFibration, g: &DiagonalAutomorphism) -> Result<AnalysisReport> {
    if !check_invariance(f, g) {
        return Err(Error::ConditionViolated("the automorphism does not preserve the surface".into()));
    }
    if g.translate && f.form != Form::TwoTorsion {
        return Err(Error::InvalidArgument("translation needs the 2-torsion form".into()));
    }
    base_fixed_fibers(g)?;
    let e = two_form_multiplier(g);
    if e.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("two-form multiplier ζ^{e} does not have order 8")));
    }
    // e² ≡ 1 mod 8, so σᵉ acts on the two-form by ζ
    let (g, normalized_from) = if e == 1 { (*g, None) } else { (g.power(e), Some(*g)) };
    let inventory = fiber_inventory(f)?;
    let mut notes = Vec::new();
    let fibers =
        vec![analyze_fiber(f, &g, Place::zero(), &mut notes)?, analyze_fiber(f, &g, Place::Infinity, &mut notes)?];
    let (translation, translation_fixed_points) = if g.translate {
        (Some(verify_translation(f, Some(&g.diagonal_part()))?), Some(translation_fixed_points(f)?))
    } else {
        (None, None)
    };
    let cfg = configuration(&fibers, &mut notes)?;
    let matched_row = cfg.as_ref().and_then(|(cfg, c, second)| {
        enumerate_cases()
            .into_iter()
            .find(|r| {
                r.c_action == *c && r.second == *second && (r.n2, r.n3, r.n4, r.k) == (cfg.n2, cfg.n3, cfg.n4, cfg.k)
            })
            .map(|r| r.index)
    });
    if cfg.is_some() && matched_row.is_none() {
        notes.push("the configuration matches no classification row".into());
    }
    Ok(AnalysisReport {
        fibration: f.clone(),
        automorphism: g,
        normalized_from,
        two_form_exponent: two_form_multiplier(&g),
        euler_sum: inventory.euler_sum,
        inventory,
        invariant_fibers: fibers,
        translation,
        translation_fixed_points,
        configuration: cfg.map(|c| c.0),
        matched_row,
        notes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneration {
    Generic,
    /// `a = 0` in the first two families.
    AZero,
    /// `h₁ = 4a³ + 27d² = 0` in the third family.
    H1,
    /// `h₁ = h₂ = 0`, `h₂ = 12a²b + 54cd`.
    H1H2,
    /// `α² = 4β` in the 2-torsion family.
    Discriminant,
    /// `β = 0` in the 2-torsion family.
    BetaZero,
}

impl fmt::Display for Degeneration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degeneration::Generic => "none",
            Degeneration::AZero => "a=0",
            Degeneration::H1 => "h1=0",
            Degeneration::H1H2 => "h1=h2=0",
            Degeneration::Discriminant => "alpha^2=4beta",
            Degeneration::BetaZero => "beta=0",
        })
    }
}

impl FromStr for Degeneration {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "none" | "generic" => Degeneration::Generic,
            "a=0" => Degeneration::AZero,
            "h1=0" => Degeneration::H1,
            "h1=h2=0" => Degeneration::H1H2,
            "alpha^2=4beta" | "alpha^2-4beta=0" => Degeneration::Discriminant,
            "beta=0" => Degeneration::BetaZero,
            _ => return Err(Error::InvalidArgument(format!("unknown degeneration {s:?}"))),
        })
    }
}

impl Serialize for Degeneration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Which automorphism of a family to analyze. The alternate is the second
/// automorphism of the third family, `(−x, −iy, ζ³t)`, and the plain
/// diagonal σ (without translation) of the 2-torsion family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Primary,
    Alternate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub id: u8,
    pub degeneration: Degeneration,
    pub variant: Variant,
    pub params: Vec<String>,
    pub analysis: AnalysisReport,
}

fn preset(id: u8, d: Degeneration) -> Option<Vec<i64>> {
    use Degeneration::*;
    Some(match (id, d) {
        (1 | 2, Generic) => vec![1, 1, 1, 3],
        (1 | 2, AZero) => vec![0, 1, 1, 1],
        (3, Generic) => vec![2, 1, 1, 1],
        (3, H1) => vec![-3, 1, 1, 2],
        (3, H1H2) => vec![-3, 1, -1, 2],
        (4, Generic) => vec![3, 1, 1],
        (4, Discriminant) => vec![2, 1, 1],
        (4, BetaZero) => vec![1, 0, 1],
        _ => return None,
    })
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConditionViolated(what.to_string()))
    }
}

fn p2(c_hi: &Rational, hi: usize, c_lo: &Rational, lo: usize) -> RationalPolynomial {
    Poly::from_terms([(c_hi.clone(), hi), (c_lo.clone(), lo)])
}

/// Builds one of the four example families at the given (or preset)
/// parameters and analyzes it.
pub fn paper_example(
    id: u8,
    params: Option<&[Rational]>,
    degeneration: Degeneration,
    variant: Variant,
) -> Result<ExampleReport> {
    use Degeneration::*;
    let owned: Vec<Rational> = match params {
        Some(p) => p.to_vec(),
        None => preset(id, degeneration)
            .ok_or_else(|| Error::InvalidArgument(format!("example {id} has no degeneration {degeneration}")))?
            .into_iter()
            .map(rat)
            .collect(),
    };
    let arity = if id == 4 { 3 } else { 4 };
    if owned.len() != arity {
        return Err(Error::InvalidArgument(format!("example {id} takes {arity} parameters")));
    }
    let p = &owned;
    let zero = rat(0);
    let (f, g) = match id {
        1 | 2 => {
            match degeneration {
                Generic => require(p[0] != zero, "a != 0")?,
                AZero => require(p[0] == zero && p[1] != zero && p[2] != zero, "a = 0, b != 0, c != 0")?,
                _ => return Err(Error::InvalidArgument(format!("example {id} has no degeneration {degeneration}"))),
            }
            let f = WeierstrassFibration::short(p2(&p[0], 8, &p[1], 0), p2(&p[2], 8, &p[3], 0))?;
            let g = if id == 1 { DiagonalAutomorphism::new(0, 0, 1) } else { DiagonalAutomorphism::new(0, 4, 1) };
            (f, g)
        }
        3 => {
            let (a, b, c, d) = (&p[0], &p[1], &p[2], &p[3]);
            let h1 = a * a * a * rat(4) + d * d * rat(27);
            let h2 = a * a * b * rat(12) + c * d * rat(54);
            let h3 = a * b * b * rat(12) + c * c * rat(27);
            require(*b != zero, "b != 0")?;
            match degeneration {
                Generic => require(h1 != zero, "h1 != 0")?,
                H1 => require(h1 == zero && h2 != zero, "h1 = 0, h2 != 0")?,
                H1H2 => require(h1 == zero && h2 == zero && h3 != zero, "h1 = h2 = 0, h3 != 0")?,
                _ => return Err(Error::InvalidArgument(format!("example 3 has no degeneration {degeneration}"))),
            }
            let f = WeierstrassFibration::short(p2(a, 8, b, 0), p2(d, 12, c, 4))?;
            let g = match variant {
                Variant::Primary => DiagonalAutomorphism::new(4, 2, 7),
                Variant::Alternate => DiagonalAutomorphism::new(4, 6, 3),
            };
            (f, g)
        }
        4 => {
            let (al, be, ga) = (&p[0], &p[1], &p[2]);
            let disc = al * al - be * rat(4);
            require(*ga != zero, "gamma != 0")?;
            match degeneration {
                Generic => require(disc != zero && *be != zero, "alpha^2 - 4beta != 0, beta != 0")?,
                Discriminant => require(disc == zero && *be != zero, "alpha^2 = 4beta, beta != 0")?,
                BetaZero => require(*be == zero && *al != zero, "beta = 0, alpha != 0")?,
                _ => return Err(Error::InvalidArgument(format!("example 4 has no degeneration {degeneration}"))),
            }
            let f = WeierstrassFibration::two_torsion(Poly::monomial(al.clone(), 4), p2(be, 8, ga, 0))?;
            let g = DiagonalAutomorphism::new(4, 2, 7);
            let g = if variant == Variant::Primary { g.with_translation() } else { g };
            (f, g)
        }
        _ => return Err(Error::InvalidArgument(format!("no example {id}"))),
    };
    if degeneration == Generic && id != 4 {
        let delta = f.discriminant();
        require(delta.gcd(&delta.derivative()).is_constant(), "discriminant squarefree")?;
    }
    let analysis = analyze(&f, &g)?;
    Ok(ExampleReport { id, degeneration, variant, params: owned.iter().map(|q| q.to_string()).collect(), analysis })
}
