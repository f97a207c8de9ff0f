use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Form, WeierstrassFibration};
use crate::arith::{infinity_transform, multiplicity_profile, valuation_at, Place, RationalPolynomial, Valuation};
use crate::error::{Error, Result};
use crate::fiber::FiberShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kodaira {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    pub fn euler_number(&self) -> u32 {
        match self {
            Kodaira::I(n) => *n,
            Kodaira::II => 2,
            Kodaira::III => 3,
            Kodaira::IV => 4,
            Kodaira::IStar(n) => 6 + n,
            Kodaira::IVStar => 8,
            Kodaira::IIIStar => 9,
            Kodaira::IIStar => 10,
        }
    }

    /// The shape modelled by the fiber engine, if any.
    pub fn shape(&self) -> Option<FiberShape> {
        match self {
            Kodaira::I(0) => Some(FiberShape::Smooth),
            Kodaira::I(n) => Some(FiberShape::I(*n)),
            Kodaira::IVStar => Some(FiberShape::IVStar),
            _ => None,
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I_{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::IStar(n) => write!(f, "I_{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

impl Serialize for Kodaira {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Kodaira type from `(v(a), v(b), v(Δ))` of a minimal short model in
/// characteristic zero.
pub fn kodaira_from_valuations(va: Valuation, vb: Valuation, vd: u32) -> Result<Kodaira> {
    let big = |v: Valuation| v.finite().unwrap_or(u32::MAX);
    let (a, b) = (big(va), big(vb));
    if a >= 4 && b >= 6 {
        return Err(Error::NonMinimal { place: String::new() });
    }
    let bad = || Error::InconsistentValuations(format!("({a}, {b}, {vd})"));
    let k = if vd == 0 {
        Kodaira::I(0)
    } else if a == 0 || b == 0 {
        if a != 0 || b != 0 {
            return Err(bad());
        }
        Kodaira::I(vd)
    } else if b == 1 {
        Kodaira::II
    } else if a == 1 {
        Kodaira::III
    } else if b == 2 {
        Kodaira::IV
    } else if a == 2 && b == 3 {
        Kodaira::IStar(vd.checked_sub(6).ok_or_else(bad)?)
    } else if b == 3 {
        Kodaira::IStar(0)
    } else if b == 4 {
        Kodaira::IVStar
    } else if a == 3 {
        Kodaira::IIIStar
    } else {
        Kodaira::IIStar
    };
    if k.euler_number() != vd {
        return Err(bad());
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub place: Place,
    pub v_a: Valuation,
    pub v_b: Valuation,
    pub v_delta: u32,
    pub kodaira: Kodaira,
}

impl FiberReport {
    /// Number of geometric fibers the place stands for.
    pub fn count(&self) -> u32 {
        self.place.degree() as u32
    }
}

fn local_coefficients(
    f: &WeierstrassFibration,
    place: &Place,
) -> Result<(RationalPolynomial, RationalPolynomial, RationalPolynomial, Place)> {
    let (a, b) = f.short_model();
    match place {
        Place::Infinity => {
            let ch = infinity_transform(&a, &b)?;
            Ok((ch.a, ch.b, ch.delta, Place::zero()))
        }
        _ => {
            let d = f.discriminant();
            Ok((a, b, d, place.clone()))
        }
    }
}

pub fn kodaira_type_at(f: &WeierstrassFibration, place: &Place) -> Result<FiberReport> {
    let (a, b, d, at) = local_coefficients(f, place)?;
    let va = valuation_at(&a, &at)?;
    let vb = valuation_at(&b, &at)?;
    let vd =
        valuation_at(&d, &at)?.finite().ok_or_else(|| Error::NotK3Datum("discriminant vanishes identically".into()))?;
    let kodaira = kodaira_from_valuations(va, vb, vd).map_err(|e| match e {
        Error::NonMinimal { .. } => Error::NonMinimal { place: place.to_string() },
        e => e,
    })?;
    Ok(FiberReport { place: place.clone(), v_a: va, v_b: vb, v_delta: vd, kodaira })
}

/// Splits a squarefree `p` into coprime pieces on whose roots `q` has
/// constant valuation.
fn split_by(p: RationalPolynomial, q: &RationalPolynomial) -> Vec<RationalPolynomial> {
    if q.is_zero() || p.is_constant() {
        return vec![p];
    }
    let g = p.gcd(q);
    if g.is_constant() {
        return vec![p];
    }
    if g.degree() == p.degree() {
        return split_by(p.clone(), &q.exact_div(&p).expect("p divides q"));
    }
    let rest = p.exact_div(&g).expect("gcd divides");
    let mut out = split_by(g, q);
    out.extend(split_by(rest, q));
    out
}

/// Finite places of the discriminant, refined so that every listed
/// polynomial has one valuation across the roots of each place.
pub(crate) fn discriminant_places(f: &WeierstrassFibration) -> Result<Vec<Place>> {
    let (a, b) = f.short_model();
    let mut refiners = vec![a, b];
    if f.form == Form::TwoTorsion {
        refiners.push(f.a.clone());
        refiners.push(f.b.clone());
    }
    let mut places = Vec::new();
    for entry in multiplicity_profile(&f.discriminant())? {
        let Place::Irreducible(p) = &entry.place else {
            places.push(entry.place);
            continue;
        };
        let mut pieces = vec![p.clone()];
        for r in &refiners {
            pieces = pieces.into_iter().flat_map(|x| split_by(x, r)).collect();
        }
        for piece in pieces {
            places.push(Place::from_factor(&piece.monic())?);
        }
    }
    Ok(places)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberInventory {
    pub fibers: Vec<FiberReport>,
    /// Singular fiber types with multiplicity.
    pub counts: BTreeMap<String, u32>,
    pub euler_sum: u32,
}

pub fn fiber_inventory(f: &WeierstrassFibration) -> Result<FiberInventory> {
    let mut fibers = Vec::new();
    for place in discriminant_places(f)? {
        fibers.push(kodaira_type_at(f, &place)?);
    }
    let inf = kodaira_type_at(f, &Place::Infinity)?;
    if inf.v_delta > 0 {
        fibers.push(inf);
    }
    let mut counts = BTreeMap::new();
    let mut euler_sum = 0;
    for r in &fibers {
        *counts.entry(r.kodaira.to_string()).or_insert(0) += r.count();
        euler_sum += r.count() * r.kodaira.euler_number();
    }
    if euler_sum != 24 {
        return Err(Error::NotK3Datum(format!("Euler numbers of singular fibers sum to {euler_sum}, not 24")));
    }
    Ok(FiberInventory { fibers, counts, euler_sum })
}
