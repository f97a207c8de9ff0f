//! Enumeration of the σ-invariant elliptic fibration configurations.
//!
//! σ⁴ fixes an elliptic fiber C. σ preserves C and a second fiber C′ over
//! the other fixed point of the base; every curve fixed by σ⁴ lies in
//! C ∪ C′. For each σ⁴ skeleton the enumerator pairs an action on C with a
//! shape and action on C′, keeps the pairs that pass the exact Lefschetz
//! filters, and solves for the eigenspace ranks.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fiber::{
    action_label, elliptic_action_data, fiber_fixed_data, EllipticAction, FiberAction, FiberFixedData, FiberShape,
};
use crate::lattice::{sigma4_skeletons, solve_ranks, Skeleton};
use crate::lefschetz::{
    holo_total, holo_total_square, point_relations_hold, topo_check, topo_check_square, FixedCurve, FixedLocusConfig,
    SquareFixedLocus,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub index: usize,
    pub r: u32,
    pub l: u32,
    pub m: u32,
    pub k_sigma2: u32,
    #[serde(rename = "num_C")]
    pub num_c: u32,
    pub rk_pic: u32,
    pub k_sigma4: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub n2: u32,
    pub n3: u32,
    pub n4: u32,
    pub k: u32,
    pub action: (String, String),
    /// Elliptic curves fixed pointwise by σ and by σ².
    pub elliptic_sigma: u32,
    pub elliptic_sigma2: u32,
    /// Isolated fixed points of σ².
    pub n_sigma2: u32,
    #[serde(skip)]
    pub c_action: EllipticAction,
    #[serde(skip)]
    pub second: (FiberShape, FiberAction),
}

impl ClassificationRow {
    pub fn m1(&self) -> u32 {
        (22 - self.rk_pic) / 4
    }

    pub fn sigma_config(&self) -> FixedLocusConfig {
        let mut curves = vec![FixedCurve::elliptic(); self.elliptic_sigma as usize];
        curves.extend(std::iter::repeat_n(FixedCurve::rational(), self.k as usize));
        FixedLocusConfig { curves, n2: self.n2, n3: self.n3, n4: self.n4 }
    }

    pub fn sigma2_locus(&self) -> SquareFixedLocus {
        let curve = |genus| FixedCurve { genus, normal_exponent: 2 };
        let mut curves = vec![curve(1); self.elliptic_sigma2 as usize];
        curves.extend(std::iter::repeat_n(curve(0), self.k_sigma2 as usize));
        SquareFixedLocus { curves, isolated: self.n_sigma2 }
    }
}

fn second_fibers(skel: &Skeleton) -> Vec<FiberShape> {
    match skel.rank_pic {
        10 => vec![FiberShape::Smooth],
        14 => vec![FiberShape::IVStar, FiberShape::I(8)],
        18 => vec![FiberShape::I(16)],
        _ => vec![],
    }
}

fn c_actions(skel: &Skeleton) -> Vec<EllipticAction> {
    if skel.num_elliptic == 2 {
        // σ² cannot fix both elliptic curves, so σ is of order four on C′ only
        EllipticAction::all().into_iter().filter(|a| !matches!(a, EllipticAction::OrderFour(_))).collect()
    } else {
        EllipticAction::all()
    }
}

fn second_actions(shape: FiberShape) -> Vec<FiberAction> {
    match shape {
        FiberShape::Smooth => EllipticAction::order_four_variants().into_iter().map(FiberAction::Elliptic).collect(),
        _ => FiberAction::for_shape(shape),
    }
}

fn bases_compatible(c: &FiberFixedData, second: &FiberFixedData) -> bool {
    c.base_exponents.iter().any(|b| second.base_exponents.contains(&((8 - b) % 8)))
}

fn fixed_by(d: &FiberFixedData, j: u8) -> u32 {
    d.elliptic_fixed_by.map_or(0, |p| u32::from(p <= j))
}

fn assemble(
    skel: &Skeleton,
    c_action: EllipticAction,
    shape: FiberShape,
    action: FiberAction,
) -> Option<ClassificationRow> {
    let dc = elliptic_action_data(c_action).ok()?;
    let d2 = fiber_fixed_data(shape, action).ok()?;
    if d2.k_sigma4 != skel.k_sigma4 || !bases_compatible(&dc, &d2) {
        return None;
    }
    if fixed_by(&dc, 4) + fixed_by(&d2, 4) != skel.num_elliptic {
        return None;
    }
    let elliptic_sigma2 = fixed_by(&dc, 2) + fixed_by(&d2, 2);
    if elliptic_sigma2 > 1 {
        return None;
    }
    let points = dc.points + d2.points;
    let k = d2.k_sigma;
    let n = points.total();
    let alpha = dc.alpha_contrib + d2.alpha_contrib;
    let k_sigma2 = d2.k_sigma2;
    let (r, l, m) = solve_ranks(((22 - skel.rank_pic) / 4) as i64, n as i64, alpha, k_sigma2 as i64).ok()?;
    let row = ClassificationRow {
        index: 0,
        r,
        l,
        m,
        k_sigma2,
        num_c: skel.num_elliptic,
        rk_pic: skel.rank_pic,
        k_sigma4: skel.k_sigma4,
        n,
        n2: points.n2,
        n3: points.n3,
        n4: points.n4,
        k,
        action: (c_action.label().to_string(), action_label(shape, action).ok()?),
        elliptic_sigma: fixed_by(&dc, 1) + fixed_by(&d2, 1),
        elliptic_sigma2,
        n_sigma2: dc.n_sigma2 + d2.n_sigma2,
        c_action,
        second: (shape, action),
    };
    validate_row(&row).all_pass().then_some(row)
}

/// All configurations surviving the filters, in table order.
pub fn enumerate_cases() -> Vec<ClassificationRow> {
    let mut rows = Vec::new();
    for skel in sigma4_skeletons() {
        for shape in second_fibers(&skel) {
            for action in second_actions(shape) {
                for c in c_actions(&skel) {
                    rows.extend(assemble(&skel, c, shape, action));
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.rk_pic, r.second.1.rank(), r.c_action.rank(), r.second.0, r.c_action));
    for (i, r) in rows.iter_mut().enumerate() {
        r.index = i + 1;
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedCurveGroups {
    /// σ fixes an elliptic curve.
    pub fixes_elliptic: Vec<(u32, u32, u32)>,
    /// σ² fixes an elliptic curve and σ does not.
    pub square_fixes_elliptic: Vec<(u32, u32, u32)>,
    pub neither: Vec<(u32, u32, u32)>,
}

/// Distinct `(k, N, rk Pic)` triples grouped by the action on C.
pub fn theorem1_groups(rows: &[ClassificationRow]) -> FixedCurveGroups {
    let mut g = FixedCurveGroups { fixes_elliptic: vec![], square_fixes_elliptic: vec![], neither: vec![] };
    for r in rows {
        let triple = (r.k, r.n, r.rk_pic);
        let bucket = if r.elliptic_sigma > 0 {
            &mut g.fixes_elliptic
        } else if r.elliptic_sigma2 > 0 {
            &mut g.square_fixes_elliptic
        } else {
            &mut g.neither
        };
        if !bucket.contains(&triple) {
            bucket.push(triple);
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect()
    }
}

pub fn validate_row(row: &ClassificationRow) -> ValidationReport {
    let cfg = row.sigma_config();
    let sq = row.sigma2_locus();
    let (r, l, m) = (row.r as i64, row.l as i64, row.m as i64);
    let (r2, l2) = (r + l, 2 * m);
    let k2 = row.k_sigma2 as i64;
    let checks = vec![
        Check { name: "point count", pass: row.n == row.n2 + row.n3 + row.n4 },
        Check {
            name: "point relations",
            pass: point_relations_hold(row.n2 as i64, row.n3 as i64, row.n4 as i64, cfg.alpha()),
        },
        Check { name: "topological", pass: topo_check(&cfg, r, l) },
        Check { name: "holomorphic", pass: holo_total(&cfg).map(|h| h.matches).unwrap_or(false) },
        Check { name: "square holomorphic", pass: holo_total_square(&sq).map(|h| h.matches).unwrap_or(false) },
        Check { name: "square topological", pass: topo_check_square(&sq, r2, l2) },
        Check { name: "square point count", pass: row.n_sigma2 as i64 == 2 * k2 + 4 },
        Check { name: "square ranks", pass: 4 * k2 == r2 - l2 - 2 },
        Check {
            name: "rank sum",
            pass: row.rk_pic <= 22 && (22 - row.rk_pic).is_multiple_of(4) && r + l + 2 * m + 4 * row.m1() as i64 == 22,
        },
    ];
    ValidationReport { checks }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(TableFormat::Table),
            "json" => Ok(TableFormat::Json),
            "csv" => Ok(TableFormat::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

pub const CSV_COLUMNS: [&str; 13] =
    ["r", "l", "m", "k_sigma2", "num_C", "rk_pic", "k_sigma4", "N", "n2", "n3", "n4", "k", "action"];

fn action_text(row: &ClassificationRow) -> String {
    format!("{}; {}", row.action.0, row.action.1)
}

fn numbers(row: &ClassificationRow) -> [u32; 12] {
    [row.r, row.l, row.m, row.k_sigma2, row.num_c, row.rk_pic, row.k_sigma4, row.n, row.n2, row.n3, row.n4, row.k]
}

pub fn render(rows: &[ClassificationRow], format: TableFormat) -> Result<String> {
    match format {
        TableFormat::Json => serde_json::to_string_pretty(rows).map_err(|e| Error::InvalidArgument(e.to_string())),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
            w.write_record(CSV_COLUMNS).map_err(io)?;
            for row in rows {
                let mut rec: Vec<String> = numbers(row).iter().map(u32::to_string).collect();
                rec.push(action_text(row));
                w.write_record(&rec).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
        }
        TableFormat::Table => {
            let header = ["#", "r", "l", "m", "kσ²", "#C", "rkPic", "kσ⁴", "N", "n27", "n36", "n45", "k"];
            let mut out = String::new();
            for h in header {
                let _ = write!(out, "{h:>6}");
            }
            out.push_str("  action on C; action on C'\n");
            for row in rows {
                let _ = write!(out, "{:>6}", row.index);
                for v in numbers(row) {
                    let _ = write!(out, "{v:>6}");
                }
                let _ = writeln!(out, "  {}", action_text(row));
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_rows() {
        let rows = enumerate_cases();
        assert_eq!(rows.len(), 16);
        let r12 = &rows[11];
        assert_eq!((r12.r, r12.l, r12.m, r12.n2, r12.n3, r12.n4, r12.k, r12.n), (10, 2, 1, 4, 2, 2, 1, 8));
        let r4 = &rows[3];
        assert_eq!((r4.r, r4.l, r4.m, r4.n2, r4.n3, r4.n4, r4.n), (5, 1, 2, 0, 2, 4, 6));
        let r15 = &rows[14];
        assert_eq!((r15.r, r15.l, r15.m, r15.n, r15.k_sigma2), (11, 7, 0, 6, 4));
        assert_eq!(r15.action.1, "reflection on I_16");
    }

    #[test]
    fn validation_cross_checks() {
        let rows = enumerate_cases();
        assert_eq!((rows[4].k_sigma2, rows[4].n_sigma2), (1, 6));
        assert_eq!((rows[12].k_sigma2, rows[12].n_sigma2), (4, 12));
        let mut bad = rows[4].clone();
        bad.l = 5;
        let rep = validate_row(&bad);
        assert!(rep.failures().contains(&"topological"));
    }

    #[test]
    fn groups() {
        let g = theorem1_groups(&enumerate_cases());
        assert_eq!(g.fixes_elliptic, vec![(0, 2, 10), (0, 4, 14)]);
        assert_eq!(g.square_fixes_elliptic, vec![(0, 2, 10), (0, 6, 10), (0, 4, 14), (1, 10, 14)]);
        assert!(g.neither.contains(&(2, 14, 18)));
    }

    #[test]
    fn csv_header() {
        let out = render(&enumerate_cases(), TableFormat::Csv).unwrap();
        let first = out.lines().next().unwrap();
        assert_eq!(first, CSV_COLUMNS.join(","));
        assert_eq!(out.lines().count(), 17);
    }
}
