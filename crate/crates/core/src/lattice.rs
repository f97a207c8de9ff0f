//! Eigenspace ranks of σ* on H²(X, ℂ) and the fixed-locus shapes of the
//! non-symplectic involution σ⁴.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ranks of the eigenspaces of σ* for the eigenvalues 1, −1, i and ζ₈.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EigenRanks {
    pub r: u32,
    pub l: u32,
    pub m: u32,
    pub m1: u32,
}

impl EigenRanks {
    pub fn new(r: u32, l: u32, m: u32, m1: u32) -> Result<Self> {
        if r + l + 2 * m + 4 * m1 != 22 {
            return Err(Error::InvalidArgument(format!("r + l + 2m + 4m1 = {} != 22", r + l + 2 * m + 4 * m1)));
        }
        if !(1..=5).contains(&m1) {
            return Err(Error::InvalidArgument(format!("m1 = {m1} outside 1..=5")));
        }
        if r == 0 {
            return Err(Error::InvalidArgument("no invariant class (r = 0)".into()));
        }
        Ok(EigenRanks { r, l, m, m1 })
    }

    /// Rank of the transcendental lattice, `4 m₁`.
    pub fn rank_transcendental(&self) -> u32 {
        4 * self.m1
    }

    /// `22 − 4 m₁`, the Picard rank when Pic(X) is the σ⁴-invariant lattice.
    pub fn rank_pic(&self) -> u32 {
        22 - 4 * self.m1
    }
}

/// Eigenspace ranks `(r_j, l_j, m_j)` of a power of σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PowerRanks {
    pub r: u32,
    pub l: u32,
    pub m: u32,
}

/// Ranks for σ² (`j = 2`) or σ⁴ (`j = 4`).
pub fn power_ranks(e: &EigenRanks, j: u32) -> Result<PowerRanks> {
    match j {
        2 => Ok(PowerRanks { r: e.r + e.l, l: 2 * e.m, m: 2 * e.m1 }),
        4 => Ok(PowerRanks { r: e.r + e.l + 2 * e.m, l: 4 * e.m1, m: 0 }),
        _ => Err(Error::InvalidArgument(format!("power {j} is not 2 or 4"))),
    }
}

/// The ranks of an order-4 automorphism's powers, applied to the ranks of
/// σ² regarded as an order-4 datum: squaring merges the `1`/`−1`
/// eigenspaces and sends `i` to `−1`.
pub fn square_order4_ranks(p: &PowerRanks) -> PowerRanks {
    PowerRanks { r: p.r + p.l, l: 2 * p.m, m: 0 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialLattice {
    /// U(2) ⊕ E₈(2)
    EmptyLattice,
    /// U ⊕ E₈(2)
    TwoEllipticLattice,
}

/// Invariants `(rk S, a)` of the 2-elementary invariant lattice of a
/// non-symplectic involution, `det = 2^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvolutionFixData {
    pub rank: u32,
    pub a: u32,
    pub special: Option<SpecialLattice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum InvolutionFixedLocus {
    Empty,
    TwoEllipticCurves,
    /// One curve of genus `g` plus `k` rational curves.
    CurveAndRational {
        g: u32,
        k: u32,
    },
}

pub fn nikulin_fixed_locus(d: &InvolutionFixData) -> Result<InvolutionFixedLocus> {
    match d.special {
        Some(SpecialLattice::EmptyLattice) => {
            if (d.rank, d.a) != (10, 10) {
                return Err(Error::InvalidTwoElementary("U(2)+E8(2) has (rk, a) = (10, 10)".into()));
            }
            Ok(InvolutionFixedLocus::Empty)
        }
        Some(SpecialLattice::TwoEllipticLattice) => {
            if (d.rank, d.a) != (10, 8) {
                return Err(Error::InvalidTwoElementary("U+E8(2) has (rk, a) = (10, 8)".into()));
            }
            Ok(InvolutionFixedLocus::TwoEllipticCurves)
        }
        None => {
            let (rk, a) = (d.rank as i64, d.a as i64);
            let two_g = 22 - rk - a;
            let two_k = rk - a;
            if rk > 20 || two_g < 0 || two_k < 0 || two_g % 2 != 0 || two_k % 2 != 0 {
                return Err(Error::InvalidTwoElementary(format!("(rk, a) = ({rk}, {a})")));
            }
            Ok(InvolutionFixedLocus::CurveAndRational { g: (two_g / 2) as u32, k: (two_k / 2) as u32 })
        }
    }
}

/// Coarse shape of `Fix(σ⁴)`: Picard rank, number of fixed elliptic curves,
/// number of fixed rational curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Skeleton {
    pub rank_pic: u32,
    pub num_elliptic: u32,
    pub k_sigma4: u32,
}

/// The σ⁴ fixed-locus shapes that contain an elliptic curve.
///
/// The Picard rank is `22 − 4m₁` with `1 ≤ m₁ ≤ 5`; a genus-1 fixed curve
/// forces `rk ≥ 10`. For each rank the generic formula gives `a = 20 − rk`;
/// at rank 10 that pair `(10, 10)` is the lattice U(2) ⊕ E₈(2) whose fixed
/// locus is empty, so the elliptic shape there is the two-curve lattice
/// U ⊕ E₈(2).
pub fn sigma4_skeletons() -> Vec<Skeleton> {
    let mut out = Vec::new();
    for m1 in (1..=5u32).rev() {
        let rank = 22 - 4 * m1;
        if rank < 10 {
            continue;
        }
        let generic = InvolutionFixData { rank, a: 20 - rank, special: None };
        let locus = if rank == 10 {
            nikulin_fixed_locus(&InvolutionFixData { rank, a: 8, special: Some(SpecialLattice::TwoEllipticLattice) })
        } else {
            nikulin_fixed_locus(&generic)
        };
        match locus {
            Ok(InvolutionFixedLocus::TwoEllipticCurves) => {
                out.push(Skeleton { rank_pic: rank, num_elliptic: 2, k_sigma4: 0 })
            }
            Ok(InvolutionFixedLocus::CurveAndRational { g: 1, k }) => {
                out.push(Skeleton { rank_pic: rank, num_elliptic: 1, k_sigma4: k })
            }
            _ => {}
        }
    }
    out
}

/// Solves
/// `r + l + 2m = 22 − 4m₁`, `r − l = N + 2α − 2`, `r + l − 2m = 4k_{σ²} + 2`
/// for nonnegative integers.
pub fn solve_ranks(m1: i64, n: i64, alpha: i64, k_sigma2: i64) -> Result<(u32, u32, u32)> {
    let total = 22 - 4 * m1;
    let diff = n + 2 * alpha - 2;
    let sq = 4 * k_sigma2 + 2;
    let err = || {
        Error::InconsistentConfiguration(format!(
            "no nonnegative integral ranks for (m1, N, alpha, k_sigma2) = ({m1}, {n}, {alpha}, {k_sigma2})"
        ))
    };
    if (total + sq) % 2 != 0 || (total - sq) % 4 != 0 {
        return Err(err());
    }
    let rl = (total + sq) / 2;
    let m = (total - sq) / 4;
    if (rl + diff) % 2 != 0 {
        return Err(err());
    }
    let r = (rl + diff) / 2;
    let l = (rl - diff) / 2;
    if r < 0 || l < 0 || m < 0 {
        return Err(err());
    }
    Ok((r as u32, l as u32, m as u32))
}
