//! Fixed data of σ, σ², σ⁴ on a σ-invariant fiber.
//!
//! Singular fibers are dual graphs of rational curves with multiplicities.
//! A labeling assigns to every σʲ-preserved component the tangent exponents
//! of σʲ at its fixed points; the admissible labelings are found by a finite
//! search over the base exponent `b` (σ acts on the base near the fiber by
//! `t ↦ ζᵇ t`) and the starting exponents, then cross-checked between the
//! three powers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::arith::{Cyc8, Rational};
use crate::error::{Error, Result};
use crate::lefschetz::PointType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberShape {
    Smooth,
    I(u32),
    IVStar,
}

impl fmt::Display for FiberShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberShape::Smooth => write!(f, "smooth"),
            FiberShape::I(n) => write!(f, "I_{n}"),
            FiberShape::IVStar => write!(f, "IV*"),
        }
    }
}

impl Serialize for FiberShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn euler_number(shape: FiberShape) -> u32 {
    match shape {
        FiberShape::Smooth => 0,
        FiberShape::I(n) => n,
        FiberShape::IVStar => 8,
    }
}

/// σ on a smooth elliptic fiber. The order-four case records the types of
/// its two fixed points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EllipticAction {
    Identity,
    Translation2,
    Translation4,
    Involution,
    OrderFour([PointType; 2]),
}

impl EllipticAction {
    pub fn label(&self) -> &'static str {
        match self {
            EllipticAction::Identity => "identity",
            EllipticAction::Translation2 => "translation of order two",
            EllipticAction::Translation4 => "translation of order four",
            EllipticAction::Involution => "involution",
            EllipticAction::OrderFour(_) => "order four",
        }
    }

    pub fn all() -> Vec<EllipticAction> {
        let mut v = vec![
            EllipticAction::Identity,
            EllipticAction::Translation2,
            EllipticAction::Translation4,
            EllipticAction::Involution,
        ];
        v.extend(Self::order_four_variants());
        v
    }

    pub fn order_four_variants() -> Vec<EllipticAction> {
        use PointType::*;
        vec![
            EllipticAction::OrderFour([T27, T27]),
            EllipticAction::OrderFour([T36, T36]),
            EllipticAction::OrderFour([T27, T36]),
        ]
    }

    /// Position in the table ordering.
    pub fn rank(&self) -> u8 {
        match self {
            EllipticAction::Identity => 0,
            EllipticAction::Translation2 => 1,
            EllipticAction::Translation4 => 2,
            EllipticAction::Involution => 3,
            EllipticAction::OrderFour(_) => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberAction {
    Preserve,
    /// `i ↦ −i` on the cycle of I_n.
    Reflection,
    /// `i ↦ i + n/order` on the cycle of I_n.
    Rotation(u32),
    /// Swaps two arms of IV*.
    BranchSwap,
    Elliptic(EllipticAction),
}

impl FiberAction {
    /// Actions modelled for a shape.
    pub fn for_shape(shape: FiberShape) -> Vec<FiberAction> {
        match shape {
            FiberShape::Smooth => EllipticAction::all().into_iter().map(FiberAction::Elliptic).collect(),
            FiberShape::I(_) => {
                vec![FiberAction::Preserve, FiberAction::Reflection, FiberAction::Rotation(2), FiberAction::Rotation(4)]
            }
            FiberShape::IVStar => vec![FiberAction::Preserve, FiberAction::BranchSwap],
        }
    }

    /// Ordering of second-fiber actions in the table.
    pub fn rank(&self) -> u8 {
        match self {
            FiberAction::Elliptic(_) => 0,
            FiberAction::BranchSwap => 1,
            FiberAction::Rotation(2) => 2,
            FiberAction::Rotation(_) => 3,
            FiberAction::Reflection => 4,
            FiberAction::Preserve => 5,
        }
    }
}

pub fn action_label(shape: FiberShape, action: FiberAction) -> Result<String> {
    Ok(match (shape, action) {
        (FiberShape::Smooth, FiberAction::Elliptic(e)) => e.label().to_string(),
        (FiberShape::I(_), FiberAction::Preserve) => format!("preserves each curve of {shape}"),
        (FiberShape::I(_), FiberAction::Reflection) => format!("reflection on {shape}"),
        (FiberShape::I(_), FiberAction::Rotation(o)) => format!("rotation of order {o} on {shape}"),
        (FiberShape::IVStar, FiberAction::Preserve) => "preserves each curve of IV*".to_string(),
        (FiberShape::IVStar, FiberAction::BranchSwap) => "reflection of IV*".to_string(),
        _ => return Err(incompatible(shape, action)),
    })
}

fn incompatible(shape: FiberShape, action: FiberAction) -> Error {
    Error::IncompatibleAction { shape: shape.to_string(), action: format!("{action:?}") }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PointCounts {
    pub n2: u32,
    pub n3: u32,
    pub n4: u32,
}

impl PointCounts {
    pub fn add(&mut self, t: PointType) {
        match t {
            PointType::T27 => self.n2 += 1,
            PointType::T36 => self.n3 += 1,
            PointType::T45 => self.n4 += 1,
        }
    }

    pub fn total(&self) -> u32 {
        self.n2 + self.n3 + self.n4
    }
}

impl std::ops::Add for PointCounts {
    type Output = PointCounts;
    fn add(self, o: PointCounts) -> PointCounts {
        PointCounts { n2: self.n2 + o.n2, n3: self.n3 + o.n3, n4: self.n4 + o.n4 }
    }
}

/// Fixed data on one fiber. `k_*` count pointwise fixed rational curves;
/// `elliptic_fixed_by` is the least power of σ fixing a smooth fiber
/// pointwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberFixedData {
    pub k_sigma: u32,
    pub points: PointCounts,
    pub k_sigma2: u32,
    pub n_sigma2: u32,
    pub k_sigma4: u32,
    pub alpha_contrib: i64,
    pub elliptic_fixed_by: Option<u8>,
    pub base_exponents: Vec<u8>,
}

/// Successor of a local action along a chain of invariant rational curves.
pub fn chain_step((t, s): (u8, u8)) -> (u8, u8) {
    ((t + 7) % 8, (s + 1) % 8)
}

fn tangent_fixed_points(e: u8) -> u32 {
    // |1 − ζ^e|² fixed points of z ↦ ζ^e z on an elliptic curve
    let one_minus = Cyc8::one() - Cyc8::zeta_pow(e as i64);
    let norm = one_minus.clone() * one_minus.conj();
    let c = &norm.coords()[0];
    debug_assert!(norm.coords()[1..].iter().all(|x| *x == Rational::from_integer(0.into())));
    c.to_integer().try_into().expect("small count")
}

pub fn elliptic_action_data(action: EllipticAction) -> Result<FiberFixedData> {
    let mut d = FiberFixedData {
        k_sigma: 0,
        points: PointCounts::default(),
        k_sigma2: 0,
        n_sigma2: 0,
        k_sigma4: 0,
        alpha_contrib: 0,
        elliptic_fixed_by: None,
        base_exponents: vec![1],
    };
    match action {
        EllipticAction::Identity => d.elliptic_fixed_by = Some(1),
        EllipticAction::Translation2 => d.elliptic_fixed_by = Some(2),
        EllipticAction::Translation4 => d.elliptic_fixed_by = Some(4),
        EllipticAction::Involution => {
            for _ in 0..tangent_fixed_points(4) {
                d.points.add(PointType::T45);
            }
            d.elliptic_fixed_by = Some(2);
            d.base_exponents = vec![5];
        }
        EllipticAction::OrderFour(types) => {
            let mut tangents = BTreeSet::new();
            for t in types {
                let e = match t {
                    PointType::T27 => 2,
                    PointType::T36 => 6,
                    PointType::T45 => return Err(incompatible(FiberShape::Smooth, FiberAction::Elliptic(action))),
                };
                tangents.insert(e);
                d.points.add(t);
            }
            d.n_sigma2 = tangent_fixed_points(4);
            d.elliptic_fixed_by = Some(4);
            // the differential is constant, so both points share one tangent
            d.base_exponents = match tangents.len() {
                1 => vec![(9 - tangents.into_iter().next().unwrap()) % 8],
                _ => vec![],
            };
        }
    }
    Ok(d)
}

struct Graph {
    mult: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    fn cycle(n: usize) -> Graph {
        let adj = (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect();
        Graph { mult: vec![1; n], adj }
    }

    fn iv_star() -> Graph {
        let mut adj = vec![Vec::new(); 7];
        for i in 1..=3 {
            adj[0].push(i);
            adj[i].push(0);
            adj[i].push(i + 3);
            adj[i + 3].push(i);
        }
        Graph { mult: vec![3, 2, 2, 2, 1, 1, 1], adj }
    }
}

fn fiber_model(shape: FiberShape, action: FiberAction) -> Result<(Graph, Vec<usize>)> {
    match (shape, action) {
        (FiberShape::I(n), _) if n >= 3 => {
            let n = n as usize;
            let perm: Vec<usize> = match action {
                FiberAction::Preserve => (0..n).collect(),
                FiberAction::Reflection if n.is_multiple_of(2) => (0..n).map(|i| (n - i) % n).collect(),
                FiberAction::Rotation(o) if (o == 2 || o == 4) && n.is_multiple_of(o as usize) => {
                    (0..n).map(|i| (i + n / o as usize) % n).collect()
                }
                _ => return Err(incompatible(shape, action)),
            };
            Ok((Graph::cycle(n), perm))
        }
        (FiberShape::IVStar, FiberAction::Preserve) => Ok((Graph::iv_star(), (0..7).collect())),
        (FiberShape::IVStar, FiberAction::BranchSwap) => Ok((Graph::iv_star(), vec![0, 1, 3, 2, 4, 6, 5])),
        _ => Err(incompatible(shape, action)),
    }
}

/// Tangent exponents of σʲ at its fixed points on preserved components.
#[derive(Clone, Debug)]
struct Labeling {
    preserved: Vec<bool>,
    pointwise: Vec<bool>,
    /// `(A, B) ↦` tangent along A at A ∩ B.
    node: BTreeMap<(usize, usize), u8>,
    interior: Vec<Vec<u8>>,
}

impl Labeling {
    fn interior_sorted(&self, a: usize) -> Vec<u8> {
        let mut v = self.interior[a].clone();
        v.sort_unstable();
        v
    }

    fn pointwise_count(&self) -> u32 {
        self.pointwise.iter().filter(|&&p| p).count() as u32
    }

    /// Isolated fixed points as tangent pairs.
    fn isolated(&self, g: &Graph, j: u8) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for (&(a, b), &x) in &self.node {
            if a < b && !self.pointwise[a] && !self.pointwise[b] {
                out.push((x, self.node[&(b, a)]));
            }
        }
        for a in 0..g.mult.len() {
            if self.preserved[a] && !self.pointwise[a] {
                for &x in &self.interior[a] {
                    out.push((x, (8 + j - x) % 8));
                }
            }
        }
        out
    }
}

fn perm_power(perm: &[usize], j: u32) -> Vec<usize> {
    (0..perm.len())
        .map(|mut i| {
            for _ in 0..j {
                i = perm[i];
            }
            i
        })
        .collect()
}

fn labelings(g: &Graph, perm: &[usize], j: u8, b: u8) -> Vec<Labeling> {
    let n = g.mult.len();
    let p = perm_power(perm, j as u32);
    let preserved: Vec<bool> = (0..n).map(|i| p[i] == i).collect();
    let fixed_nodes: Vec<Vec<usize>> =
        (0..n).map(|a| g.adj[a].iter().copied().filter(|&b| preserved[b]).collect()).collect();
    let order: Vec<usize> = bfs_order(g, &preserved);
    let jb = (j as u32 * b as u32 % 8) as u8;
    let mut values = vec![None; n];
    let mut out = Vec::new();
    search(g, &preserved, &fixed_nodes, &order, 0, j, jb, &mut values, &mut out);
    out
}

fn bfs_order(g: &Graph, preserved: &[bool]) -> Vec<usize> {
    let n = g.mult.len();
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    for s in 0..n {
        if !preserved[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            order.push(a);
            for &b in &g.adj[a] {
                if preserved[b] && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
    }
    order
}

/// Tangent at the `idx`-th fixed point of a component labelled `v`.
fn slot_tangent(v: u8, idx: usize) -> u8 {
    if idx == 0 {
        v
    } else {
        (8 - v) % 8
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    preserved: &[bool],
    fixed_nodes: &[Vec<usize>],
    order: &[usize],
    pos: usize,
    j: u8,
    jb: u8,
    values: &mut Vec<Option<u8>>,
    out: &mut Vec<Labeling>,
) {
    if pos == order.len() {
        if let Some(l) = build_labeling(g, preserved, fixed_nodes, values, j, jb) {
            out.push(l);
        }
        return;
    }
    let a = order[pos];
    for v in (0..8u8).step_by(j as usize) {
        if v != 0 && fixed_nodes[a].len() > 2 {
            continue;
        }
        if v == 0 && fixed_nodes[a].len() < g.adj[a].len() {
            continue;
        }
        let ok = fixed_nodes[a].iter().enumerate().all(|(idx, &b)| match values[b] {
            None => true,
            Some(vb) => {
                let ta = if v == 0 { 0 } else { slot_tangent(v, idx) };
                let ib = fixed_nodes[b].iter().position(|&x| x == a).unwrap();
                let tb = if vb == 0 { 0 } else { slot_tangent(vb, ib) };
                (ta + tb) % 8 == j % 8
            }
        });
        if !ok {
            continue;
        }
        values[a] = Some(v);
        search(g, preserved, fixed_nodes, order, pos + 1, j, jb, values, out);
        values[a] = None;
    }
}

fn build_labeling(
    g: &Graph,
    preserved: &[bool],
    fixed_nodes: &[Vec<usize>],
    values: &[Option<u8>],
    j: u8,
    jb: u8,
) -> Option<Labeling> {
    let n = g.mult.len();
    let mut l = Labeling {
        preserved: preserved.to_vec(),
        pointwise: vec![false; n],
        node: BTreeMap::new(),
        interior: vec![Vec::new(); n],
    };
    for a in 0..n {
        let Some(v) = values[a] else { continue };
        let mu = g.mult[a] as u32;
        if v == 0 {
            l.pointwise[a] = true;
            if mu * j as u32 % 8 != jb as u32 {
                return None;
            }
            for &b in &fixed_nodes[a] {
                l.node.insert((a, b), 0);
            }
            continue;
        }
        for (idx, &b) in fixed_nodes[a].iter().enumerate() {
            l.node.insert((a, b), slot_tangent(v, idx));
        }
        for idx in fixed_nodes[a].len()..2 {
            let x = slot_tangent(v, idx);
            let normal = (8 + j - x) % 8;
            if mu * normal as u32 % 8 != jb as u32 {
                return None;
            }
            l.interior[a].push(x);
        }
    }
    for (&(a, b), &ta) in &l.node {
        let tb = l.node[&(b, a)];
        if (ta + tb) % 8 != j % 8 {
            return None;
        }
        let lhs = g.mult[a] as u32 * tb as u32 + g.mult[b] as u32 * ta as u32;
        if lhs % 8 != jb as u32 {
            return None;
        }
    }
    Some(l)
}

/// σ maps the σʲ-fixed data to itself.
fn equivariant(l: &Labeling, perm: &[usize]) -> bool {
    let n = perm.len();
    for a in 0..n {
        if l.preserved[a] != l.preserved[perm[a]] || l.pointwise[a] != l.pointwise[perm[a]] {
            return false;
        }
        if l.interior_sorted(a) != l.interior_sorted(perm[a]) {
            return false;
        }
    }
    l.node.iter().all(|(&(a, b), &x)| l.node.get(&(perm[a], perm[b])) == Some(&x))
}

/// `hi` is the labeling of the square of the automorphism labelled by `lo`.
fn squares_to(lo: &Labeling, hi: &Labeling) -> bool {
    for a in 0..lo.preserved.len() {
        if !lo.preserved[a] {
            continue;
        }
        if lo.pointwise[a] {
            if !hi.pointwise[a] {
                return false;
            }
            continue;
        }
        let doubled_nodes: Vec<((usize, usize), u8)> =
            lo.node.iter().filter(|(&(x, _), _)| x == a).map(|(&k, &t)| (k, 2 * t % 8)).collect();
        let mut doubled_interior: Vec<u8> = lo.interior[a].iter().map(|&t| 2 * t % 8).collect();
        doubled_interior.sort_unstable();
        if hi.pointwise[a] {
            if doubled_nodes.iter().any(|&(_, t)| t != 0) || doubled_interior.iter().any(|&t| t != 0) {
                return false;
            }
            continue;
        }
        if doubled_nodes.iter().any(|&(k, t)| hi.node.get(&k) != Some(&t)) {
            return false;
        }
        if doubled_interior != hi.interior_sorted(a) {
            return false;
        }
    }
    true
}

fn to_point_type(pair: (u8, u8)) -> Option<PointType> {
    PointType::from_exponents(pair.0, pair.1)
}

pub fn fiber_fixed_data(shape: FiberShape, action: FiberAction) -> Result<FiberFixedData> {
    if let (FiberShape::Smooth, FiberAction::Elliptic(e)) = (shape, action) {
        return elliptic_action_data(e);
    }
    let (g, perm) = fiber_model(shape, action)?;
    let mut found: Vec<(u8, FiberFixedData)> = Vec::new();
    for b in [1u8, 3, 5, 7] {
        let l1 = labelings(&g, &perm, 1, b);
        let l2: Vec<Labeling> = labelings(&g, &perm, 2, b).into_iter().filter(|l| equivariant(l, &perm)).collect();
        let l4: Vec<Labeling> = labelings(&g, &perm, 4, b).into_iter().filter(|l| equivariant(l, &perm)).collect();
        for a in &l1 {
            for s in l2.iter().filter(|s| squares_to(a, s)) {
                for f in l4.iter().filter(|f| squares_to(s, f)) {
                    if let Some(d) = summarize(&g, a, s, f) {
                        found.push((b, d));
                    }
                }
            }
        }
    }
    let desc = || format!("{shape} with {action:?}");
    let Some((_, first)) = found.first().cloned() else {
        return Err(Error::NoConsistentLabeling(desc()));
    };
    if found.iter().any(|(_, d)| *d != first) {
        return Err(Error::AmbiguousLabeling(desc()));
    }
    let bases: BTreeSet<u8> = found.iter().map(|(b, _)| *b).collect();
    Ok(FiberFixedData { base_exponents: bases.into_iter().collect(), ..first })
}

fn summarize(g: &Graph, l1: &Labeling, l2: &Labeling, l4: &Labeling) -> Option<FiberFixedData> {
    let mut points = PointCounts::default();
    for pair in l1.isolated(g, 1) {
        points.add(to_point_type(pair)?);
    }
    let iso2 = l2.isolated(g, 2);
    if iso2.iter().any(|&(x, y)| x == 0 || y == 0) || !l4.isolated(g, 4).is_empty() {
        return None;
    }
    let k_sigma = l1.pointwise_count();
    Some(FiberFixedData {
        k_sigma,
        points,
        k_sigma2: l2.pointwise_count(),
        n_sigma2: iso2.len() as u32,
        k_sigma4: l4.pointwise_count(),
        alpha_contrib: k_sigma as i64,
        elliptic_fixed_by: None,
        base_exponents: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(n2: u32, n3: u32, n4: u32) -> PointCounts {
        PointCounts { n2, n3, n4 }
    }

    fn data(shape: FiberShape, action: FiberAction) -> FiberFixedData {
        fiber_fixed_data(shape, action).unwrap()
    }

    #[test]
    fn chain_sequence() {
        let mut p = (0, 1);
        let expected = [(7, 2), (6, 3), (5, 4), (4, 5), (3, 6), (2, 7), (1, 0), (0, 1)];
        for e in expected {
            p = chain_step(p);
            assert_eq!(p, e);
        }
    }

    #[test]
    fn i8_preserve() {
        let d = data(FiberShape::I(8), FiberAction::Preserve);
        assert_eq!((d.k_sigma, d.points, d.k_sigma2, d.k_sigma4), (1, pc(2, 2, 2), 2, 4));
        assert_eq!(d.base_exponents, vec![1]);
        assert_eq!(d.n_sigma2, 4);
    }

    #[test]
    fn i16_preserve() {
        let d = data(FiberShape::I(16), FiberAction::Preserve);
        assert_eq!((d.k_sigma, d.points, d.k_sigma2, d.k_sigma4), (2, pc(4, 4, 4), 4, 8));
    }

    #[test]
    fn reflections() {
        for (n, k2) in [(8, 2), (16, 4)] {
            let d = data(FiberShape::I(n), FiberAction::Reflection);
            assert_eq!((d.k_sigma, d.points, d.k_sigma2, d.k_sigma4), (0, pc(0, 0, 4), k2, n / 2));
            assert_eq!(d.base_exponents, vec![5]);
        }
    }

    #[test]
    fn rotations() {
        for n in [8, 16] {
            let r2 = data(FiberShape::I(n), FiberAction::Rotation(2));
            assert_eq!((r2.k_sigma, r2.points.total(), r2.k_sigma2), (0, 0, n / 4));
            assert_eq!(r2.base_exponents, vec![1, 5]);
            let r4 = data(FiberShape::I(n), FiberAction::Rotation(4));
            assert_eq!((r4.k_sigma, r4.points.total(), r4.k_sigma2, r4.n_sigma2), (0, 0, 0, 0));
            assert_eq!(r4.k_sigma4, n / 2);
        }
    }

    #[test]
    fn iv_star_actions() {
        let p = data(FiberShape::IVStar, FiberAction::Preserve);
        assert_eq!((p.k_sigma, p.points, p.k_sigma2, p.n_sigma2, p.k_sigma4), (1, pc(3, 3, 0), 1, 6, 4));
        assert_eq!(p.base_exponents, vec![3]);
        let s = data(FiberShape::IVStar, FiberAction::BranchSwap);
        assert_eq!((s.k_sigma, s.points, s.k_sigma2, s.n_sigma2, s.k_sigma4), (0, pc(1, 1, 2), 1, 6, 4));
        assert_eq!(s.base_exponents, vec![7]);
    }

    #[test]
    fn incompatible_actions() {
        assert!(fiber_fixed_data(FiberShape::IVStar, FiberAction::Reflection).is_err());
        assert!(fiber_fixed_data(FiberShape::I(6), FiberAction::Rotation(4)).is_err());
        assert!(fiber_fixed_data(FiberShape::I(7), FiberAction::Reflection).is_err());
        assert!(action_label(FiberShape::Smooth, FiberAction::Preserve).is_err());
    }

    #[test]
    fn elliptic_data() {
        let inv = elliptic_action_data(EllipticAction::Involution).unwrap();
        assert_eq!(inv.points, pc(0, 0, 4));
        assert_eq!(inv.elliptic_fixed_by, Some(2));
        let id = elliptic_action_data(EllipticAction::Identity).unwrap();
        assert_eq!((id.points.total(), id.elliptic_fixed_by, id.alpha_contrib), (0, Some(1), 0));
        let t4 = elliptic_action_data(EllipticAction::Translation4).unwrap();
        assert_eq!((t4.points.total(), t4.n_sigma2, t4.elliptic_fixed_by), (0, 0, Some(4)));
        use PointType::*;
        let o = elliptic_action_data(EllipticAction::OrderFour([T27, T27])).unwrap();
        assert_eq!((o.points, o.n_sigma2, o.base_exponents.clone()), (pc(2, 0, 0), 4, vec![7]));
        let o = elliptic_action_data(EllipticAction::OrderFour([T36, T36])).unwrap();
        assert_eq!(o.base_exponents, vec![3]);
        let mixed = elliptic_action_data(EllipticAction::OrderFour([T27, T36])).unwrap();
        assert!(mixed.base_exponents.is_empty());
        assert!(elliptic_action_data(EllipticAction::OrderFour([T45, T45])).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(action_label(FiberShape::I(8), FiberAction::Rotation(2)).unwrap(), "rotation of order 2 on I_8");
        assert_eq!(action_label(FiberShape::IVStar, FiberAction::BranchSwap).unwrap(), "reflection of IV*");
        assert_eq!(action_label(FiberShape::I(16), FiberAction::Preserve).unwrap(), "preserves each curve of I_16");
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(FiberShape::I(1)), 1);
        assert_eq!(euler_number(FiberShape::IVStar), 8);
        assert_eq!(euler_number(FiberShape::I(16)), 16);
        assert_eq!(euler_number(FiberShape::Smooth), 0);
    }

    #[test]
    fn power_monotonicity() {
        for shape in [FiberShape::I(8), FiberShape::I(16), FiberShape::IVStar] {
            for a in FiberAction::for_shape(shape) {
                let d = data(shape, a);
                assert!(d.k_sigma <= d.k_sigma2 && d.k_sigma2 <= d.k_sigma4, "{shape} {a:?}");
            }
        }
    }
}
