//! Holomorphic and topological Lefschetz fixed-point formulas for σ and σ²,
//! evaluated exactly in ℚ(ζ₈).
//!
//! For σ with σ*ω = ζω the holomorphic Lefschetz number is `1 + ζ⁷`. An
//! isolated fixed point with local action `diag(ζ^t, ζ^s)` contributes
//! `1 / ((1 − ζ^t)(1 − ζ^s))`, and a pointwise fixed curve of genus `g`
//! whose normal direction is scaled by `ζ^e` contributes
//! `(1 − g)(1 + ζ^e) / (1 − ζ^e)²`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Cyc8, Rational};
use crate::error::{Error, Result};

/// Local type `(t, 9 − t)` of an isolated fixed point of σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointType {
    #[serde(rename = "(2,7)")]
    T27,
    #[serde(rename = "(3,6)")]
    T36,
    #[serde(rename = "(4,5)")]
    T45,
}

impl PointType {
    pub const ALL: [PointType; 3] = [PointType::T27, PointType::T36, PointType::T45];

    pub fn t(self) -> u8 {
        match self {
            PointType::T27 => 2,
            PointType::T36 => 3,
            PointType::T45 => 4,
        }
    }

    pub fn s(self) -> u8 {
        9 - self.t()
    }

    /// Classifies an unordered pair of tangent exponents with sum ≡ 1 mod 8.
    /// Returns `None` when one exponent is 0 (the point lies on a fixed curve).
    pub fn from_exponents(a: u8, b: u8) -> Option<PointType> {
        let (a, b) = (a % 8, b % 8);
        if a == 0 || b == 0 || (a + b) % 8 != 1 {
            return None;
        }
        match a.min(b) {
            2 => Some(PointType::T27),
            3 => Some(PointType::T36),
            4 => Some(PointType::T45),
            _ => None,
        }
    }
}

impl fmt::Display for PointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t(), self.s())
    }
}

/// A smooth curve fixed pointwise by a power of σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedCurve {
    pub genus: u32,
    #[serde(rename = "normal_exp")]
    pub normal_exponent: u8,
}

impl FixedCurve {
    pub fn rational() -> Self {
        FixedCurve { genus: 0, normal_exponent: 1 }
    }

    pub fn elliptic() -> Self {
        FixedCurve { genus: 1, normal_exponent: 1 }
    }
}

/// Fixed locus of σ: pointwise fixed curves plus isolated points by type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLocusConfig {
    #[serde(default)]
    pub curves: Vec<FixedCurve>,
    pub n2: u32,
    pub n3: u32,
    pub n4: u32,
}

impl FixedLocusConfig {
    pub fn n(&self) -> u32 {
        self.n2 + self.n3 + self.n4
    }

    /// `Σ (1 − g)` over fixed curves.
    pub fn alpha(&self) -> i64 {
        self.curves.iter().map(|c| 1 - c.genus as i64).sum()
    }

    /// Number of fixed rational curves.
    pub fn k(&self) -> u32 {
        self.curves.iter().filter(|c| c.genus == 0).count() as u32
    }

    pub fn count(&self, t: PointType) -> u32 {
        match t {
            PointType::T27 => self.n2,
            PointType::T36 => self.n3,
            PointType::T45 => self.n4,
        }
    }
}

/// Fixed locus of σ². Every isolated point has local action `diag(−i, −1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareFixedLocus {
    pub curves: Vec<FixedCurve>,
    pub isolated: u32,
}

impl SquareFixedLocus {
    pub fn alpha(&self) -> i64 {
        self.curves.iter().map(|c| 1 - c.genus as i64).sum()
    }

    pub fn k(&self) -> u32 {
        self.curves.iter().filter(|c| c.genus == 0).count() as u32
    }
}

/// Exponents of the σ²-isolated local type `diag(−i, −1)`.
pub const SQUARE_POINT_EXPONENTS: (u8, u8) = (6, 4);

fn one_minus_zeta(e: i64) -> Cyc8 {
    Cyc8::one() - Cyc8::zeta_pow(e)
}

/// `1 + ζ^{8−j}`: the alternating trace of σ^j on `H^•(X, O_X)`.
pub fn holo_target(power: u8) -> Cyc8 {
    Cyc8::one() + Cyc8::zeta_pow(8 - power as i64)
}

/// `1 / ((1 − ζ^a)(1 − ζ^b))` for an isolated point with local exponents
/// `(a, b)`, both nonzero mod 8.
pub fn isolated_point_term(a: u8, b: u8) -> Result<Cyc8> {
    if a.is_multiple_of(8) || b.is_multiple_of(8) {
        return Err(Error::InvalidArgument(format!("({a},{b}) has a trivial eigenvalue; the point is not isolated")));
    }
    (one_minus_zeta(a as i64) * one_minus_zeta(b as i64)).inverse()
}

pub fn point_term(pt: PointType) -> Cyc8 {
    isolated_point_term(pt.t(), pt.s()).expect("point types are isolated")
}

pub fn curve_term(c: &FixedCurve) -> Result<Cyc8> {
    let e = c.normal_exponent as i64;
    if e.rem_euclid(8) == 0 {
        return Err(Error::InvalidArgument("a fixed curve needs a nontrivial normal eigenvalue".into()));
    }
    let d = one_minus_zeta(e);
    let frac = (Cyc8::one() + Cyc8::zeta_pow(e)) * (d.clone() * d).inverse()?;
    Ok(frac.scale(&Rational::from_integer((1 - c.genus as i64).into())))
}

/// Outcome of comparing the fixed-point side of the holomorphic formula
/// with the trace side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoloCheck {
    pub total: Cyc8,
    pub target: Cyc8,
    pub residual: Cyc8,
    pub matches: bool,
}

impl HoloCheck {
    fn new(total: Cyc8, target: Cyc8) -> Self {
        let residual = total.clone() - target.clone();
        let matches = residual.is_zero();
        HoloCheck { total, target, residual, matches }
    }
}

/// Holomorphic Lefschetz for σ.
pub fn holo_total(config: &FixedLocusConfig) -> Result<HoloCheck> {
    let mut total = Cyc8::zero();
    for pt in PointType::ALL {
        let n = config.count(pt);
        if n > 0 {
            total = total + point_term(pt).scale(&Rational::from_integer(n.into()));
        }
    }
    for c in &config.curves {
        total = total + curve_term(c)?;
    }
    Ok(HoloCheck::new(total, holo_target(1)))
}

/// Holomorphic Lefschetz for σ².
pub fn holo_total_square(locus: &SquareFixedLocus) -> Result<HoloCheck> {
    let (a, b) = SQUARE_POINT_EXPONENTS;
    let mut total = isolated_point_term(a, b)?.scale(&Rational::from_integer(locus.isolated.into()));
    for c in &locus.curves {
        total = total + curve_term(c)?;
    }
    Ok(HoloCheck::new(total, holo_target(2)))
}

/// Topological Lefschetz for σ: `N + 2α = r − l + 2`.
pub fn topo_check(config: &FixedLocusConfig, r: i64, l: i64) -> bool {
    config.n() as i64 + 2 * config.alpha() == r - l + 2
}

/// Topological Lefschetz for σ², whose trace on H² is `r_{σ²} − l_{σ²}`.
pub fn topo_check_square(locus: &SquareFixedLocus, r2: i64, l2: i64) -> bool {
    locus.isolated as i64 + 2 * locus.alpha() == r2 - l2 + 2
}

/// Where an isolated σ-fixed point ends up in `Fix(σ²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareBehavior {
    Isolated,
    OnFixedCurve,
}

pub fn power_point_type(pt: PointType) -> SquareBehavior {
    let (a, b) = ((2 * pt.t()) % 8, (2 * pt.s()) % 8);
    if a == 0 || b == 0 {
        SquareBehavior::OnFixedCurve
    } else {
        SquareBehavior::Isolated
    }
}

/// The two linear relations among `(n₂, n₃, n₄, α)` forced by the
/// holomorphic formula.
pub fn point_relations_hold(n2: i64, n3: i64, n4: i64, alpha: i64) -> bool {
    n2 + n3 == 2 + 4 * alpha && n4 + n2 - n3 == 2 + 2 * alpha
}

/// Nonnegative `(n₂, n₃, n₄)` satisfying both relations for a given `α`,
/// with `N ≤ max_points`.
pub fn point_count_solutions(alpha: i64, max_points: i64) -> Vec<(u32, u32, u32)> {
    let s = 2 + 4 * alpha;
    let mut out = Vec::new();
    if s < 0 {
        return out;
    }
    for n2 in 0..=s {
        let n3 = s - n2;
        let n4 = 2 + 2 * alpha - n2 + n3;
        if n4 >= 0 && n2 + n3 + n4 <= max_points {
            out.push((n2 as u32, n3 as u32, n4 as u32));
        }
    }
    out
}

/// An integer linear system `A·x = b`, stored as rows `[A | b]` over the
/// unknowns `(n₂, n₃, n₄, α)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerSystem {
    pub rows: Vec<[i64; 5]>,
}

impl IntegerSystem {
    pub fn satisfied_by(&self, x: [i64; 4]) -> bool {
        self.rows.iter().all(|r| r[..4].iter().zip(x).map(|(a, v)| a * v).sum::<i64>() == r[4])
    }

    /// Hermite normal form of the saturated lattice spanned by the rows.
    pub fn hermite(&self) -> IntegerSystem {
        let q: Vec<Vec<Rational>> =
            self.rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect();
        IntegerSystem { rows: saturated_hermite(q) }
    }
}

/// Expands `Σ n_t·P_t + α·K − (1 + ζ⁷) = 0` coordinatewise in the basis
/// (1, ζ, ζ², ζ³) and returns the resulting integer system in Hermite normal
/// form, together with the rank of its coefficient matrix over ℚ.
pub fn derive_point_relations() -> (IntegerSystem, usize) {
    let columns = [
        point_term(PointType::T27),
        point_term(PointType::T36),
        point_term(PointType::T45),
        curve_term(&FixedCurve::rational()).expect("nontrivial normal"),
    ];
    let target = holo_target(1);
    let rows: Vec<Vec<Rational>> = (0..4)
        .map(|k| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c.coords()[k].clone()).collect();
            row.push(target.coords()[k].clone());
            row
        })
        .collect();
    let rank = rref(rows.iter().map(|r| r[..4].to_vec()).collect()).len();
    (IntegerSystem { rows: saturated_hermite(rows) }, rank)
}

/// Reduced row echelon form over ℚ, zero rows dropped.
fn rref(mut m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - d;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Integer points of the ℚ-row space of `m`, in Hermite normal form.
fn saturated_hermite(m: Vec<Vec<Rational>>) -> Vec<[i64; 5]> {
    let basis = rref(m);
    // An integer vector in the span has integer coordinates at the pivots,
    // and those coordinates are its coefficients in the RREF basis. Residues
    // modulo the common denominator therefore generate the lattice.
    let den = basis.iter().flatten().fold(1i64, |acc, v| num_integer::lcm(acc, to_i64(v.denom())));
    let mut gens: Vec<[i64; 5]> = Vec::new();
    let rank = basis.len();
    let mut coef = vec![0i64; rank];
    loop {
        let mut v = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, row) in basis.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                v[j] = v[j].clone() + x.clone() * Rational::from_integer(coef[i].into());
            }
        }
        if v.iter().all(|x| x.is_integer()) {
            gens.push(v.map(|x| to_i64(x.numer())));
        }
        let mut i = 0;
        while i < rank {
            coef[i] += 1;
            if coef[i] < den {
                break;
            }
            coef[i] = 0;
            i += 1;
        }
        if i == rank {
            break;
        }
    }
    for row in &basis {
        let scaled: Vec<i64> =
            row.iter().map(|x| to_i64((x.clone() * Rational::from_integer(den.into())).numer())).collect();
        gens.push([scaled[0], scaled[1], scaled[2], scaled[3], scaled[4]]);
    }
    hermite_normal_form(gens)
}

fn to_i64(v: &num_bigint::BigInt) -> i64 {
    i64::try_from(v).expect("small integer")
}

/// Row-style Hermite normal form: positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, zero rows dropped.
pub fn hermite_normal_form(mut rows: Vec<[i64; 5]>) -> Vec<[i64; 5]> {
    let mut out_rank = 0;
    for c in 0..5 {
        // Euclid on column c among rows out_rank..
        loop {
            let nz: Vec<usize> = (out_rank..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let &p = nz.iter().min_by_key(|&&i| rows[i][c].abs()).expect("nonempty");
            rows.swap(out_rank, p);
            if rows[out_rank][c] < 0 {
                rows[out_rank] = rows[out_rank].map(|v| -v);
            }
            let piv = rows[out_rank];
            let mut done = true;
            for i in out_rank + 1..rows.len() {
                let q = rows[i][c].div_euclid(piv[c]);
                if q != 0 {
                    for j in 0..5 {
                        rows[i][j] -= q * piv[j];
                    }
                }
                if rows[i][c] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if out_rank < rows.len() && rows[out_rank][c] != 0 {
            let piv = rows[out_rank];
            for i in 0..out_rank {
                let q = rows[i][c].div_euclid(piv[c]);
                if q != 0 {
                    for j in 0..5 {
                        rows[i][j] -= q * piv[j];
                    }
                }
            }
            out_rank += 1;
        }
    }
    rows.truncate(out_rank);
    rows
}
