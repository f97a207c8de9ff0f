use std::process::ExitCode;
use std::time::Instant;

use k3auto::arith::{multiplicity_profile, rat, ratio, Cyc8, Place, Poly};
use k3auto::classifier::{enumerate_cases, theorem1_groups};
use k3auto::fiber::chain_step;
use k3auto::lattice::solve_ranks;
use k3auto::lefschetz::{derive_point_relations, holo_target, holo_total, topo_check, IntegerSystem, PointType};
use k3auto::weierstrass::{fixed_points_on_fiber, paper_example, Degeneration, DiagonalAutomorphism, Variant};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

mod common;
use common::{row_tuple, TABLE};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_reproduction() -> Outcome {
    let mut got: Vec<_> = enumerate_cases().iter().map(|r| format!("{:?}", row_tuple(r))).collect();
    let mut want: Vec<_> = TABLE.iter().map(|r| format!("{r:?}")).collect();
    got.sort();
    want.sort();
    ensure(got == want, || format!("{} rows differ", got.iter().zip(&want).filter(|(a, b)| a != b).count()))
}

fn groupings() -> Outcome {
    let g = theorem1_groups(&enumerate_cases());
    let sorted = |mut v: Vec<(u32, u32, u32)>| {
        v.sort();
        v.dedup();
        v
    };
    let first = sorted(vec![(0, 2, 10), (0, 4, 14)]);
    let second = sorted(vec![(0, 2, 10), (0, 6, 10), (0, 4, 14), (1, 10, 14)]);
    let third =
        sorted(vec![(0, 2, 10), (0, 4, 14), (0, 2, 14), (0, 6, 14), (1, 8, 14), (0, 2, 18), (0, 6, 18), (2, 14, 18)]);
    let got = (sorted(g.fixes_elliptic), sorted(g.square_fixes_elliptic), sorted(g.neither));
    ensure(got == (first, second, third), || format!("{got:?}"))
}

fn symbolic_relations() -> Outcome {
    let (derived, rank) = derive_point_relations();
    let expected = IntegerSystem { rows: vec![[1, 1, 0, -4, 2], [1, -1, 1, -2, 2]] }.hermite();
    ensure(rank == 2 && derived == expected, || format!("rank {rank}, {:?} vs {:?}", derived.rows, expected.rows))
}

fn lefschetz_closure() -> Outcome {
    for row in enumerate_cases() {
        let cfg = row.sigma_config();
        let h = holo_total(&cfg).map_err(|e| e.to_string())?;
        ensure(h.residual.is_zero() && h.target == holo_target(1), || {
            format!("row {}: residual {}", row.index, h.residual)
        })?;
        ensure(topo_check(&cfg, row.r as i64, row.l as i64), || format!("row {}: topological", row.index))?;
    }
    Ok(())
}

fn rank_solver() -> Outcome {
    for row in enumerate_cases() {
        let got = solve_ranks(row.m1() as i64, row.n as i64, row.k as i64, row.k_sigma2 as i64)
            .map_err(|e| format!("row {}: {e}", row.index))?;
        ensure(got == (row.r, row.l, row.m), || format!("row {}: {got:?}", row.index))?;
        ensure(4 * row.k_sigma2 + 2 * row.m + 2 == row.r + row.l, || format!("row {}: 4k", row.index))?;
    }
    Ok(())
}

fn examples() -> Outcome {
    use Degeneration::*;
    use Variant::*;
    let cases: [(u8, Degeneration, Variant, Option<(&str, u32)>, usize); 13] = [
        (1, Generic, Primary, Some(("I_1", 24)), 1),
        (1, AZero, Primary, Some(("IV*", 1)), 5),
        (2, Generic, Primary, None, 4),
        (2, AZero, Primary, None, 11),
        (3, H1, Primary, Some(("I_8", 1)), 12),
        (3, H1, Alternate, Some(("I_8", 1)), 10),
        (3, H1H2, Primary, Some(("I_16", 1)), 16),
        (3, H1H2, Alternate, Some(("I_16", 1)), 15),
        (4, Generic, Primary, Some(("I_2", 8)), 2),
        (4, Generic, Primary, Some(("I_1", 8)), 2),
        (4, Discriminant, Primary, Some(("I_8", 1)), 8),
        (4, BetaZero, Primary, Some(("I_16", 1)), 13),
        (1, AZero, Primary, None, 5),
    ];
    let mut failures = Vec::new();
    for (id, d, v, fiber, row) in cases {
        let r = paper_example(id, None, d, v).map_err(|e| format!("example {id} {d}: {e}"))?;
        let a = &r.analysis;
        if let Some((name, n)) = fiber {
            if a.inventory.counts.get(name) != Some(&n) {
                failures.push(format!("example {id} {d} {v:?}: {:?}", a.inventory.counts));
            }
        }
        if a.matched_row != Some(row) {
            failures.push(format!("example {id} {d} {v:?}: row {:?}, expected {row}", a.matched_row));
        }
    }
    let inf = &paper_example(1, None, AZero, Primary).map_err(|e| e.to_string())?.analysis.invariant_fibers[1];
    if inf.place != Place::Infinity || inf.report.kodaira.to_string() != "IV*" {
        failures.push("example 1 a=0: IV* not at infinity".into());
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn local_types() -> Outcome {
    let f =
        paper_example(3, None, Degeneration::Generic, Variant::Primary).map_err(|e| e.to_string())?.analysis.fibration;
    for (g, t) in
        [(DiagonalAutomorphism::new(4, 2, 7), PointType::T27), (DiagonalAutomorphism::new(4, 6, 3), PointType::T36)]
    {
        let pts = fixed_points_on_fiber(&f, &g, &Place::zero()).map_err(|e| e.to_string())?;
        ensure(pts.len() == 2 && pts.iter().all(|p| p.point_type == Some(t)), || format!("{g:?}: {pts:?}"))?;
    }
    Ok(())
}

fn structural() -> Outcome {
    use Degeneration::*;
    use Variant::*;
    let all = [
        (1, Generic, Primary),
        (1, AZero, Primary),
        (2, Generic, Primary),
        (2, AZero, Primary),
        (3, Generic, Primary),
        (3, H1, Primary),
        (3, H1H2, Primary),
        (3, Generic, Alternate),
        (3, H1, Alternate),
        (3, H1H2, Alternate),
        (4, Generic, Primary),
        (4, Discriminant, Primary),
        (4, BetaZero, Primary),
    ];
    for (id, d, v) in all {
        let r = paper_example(id, None, d, v).map_err(|e| format!("example {id} {d}: {e}"))?;
        let a = &r.analysis;
        ensure(a.euler_sum == 24, || format!("example {id} {d}: Euler sum {}", a.euler_sum))?;
        ensure(a.two_form_exponent == 1, || format!("example {id} {d}: multiplier ζ^{}", a.two_form_exponent))?;
        if id == 4 {
            let t = a.translation.as_ref().ok_or("no translation report")?;
            ensure(t.involutive && t.on_curve && t.commutes == Some(true), || format!("example 4 {d}: {t:?}"))?;
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 1000, ..Config::default() });
    let cyc = || prop::array::uniform4((-20i64..=20, 1i64..=6)).prop_map(|c| Cyc8::new(c.map(|(n, d)| ratio(n, d))));
    runner
        .run(&(cyc(), cyc(), cyc()), |(a, b, c)| {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inverse().unwrap(), Cyc8::one());
            }
            Ok(())
        })
        .map_err(|e| format!("field axioms: {e}"))?;

    let mut runner = TestRunner::new(Config { cases: 100, ..Config::default() });
    let poly =
        prop::collection::vec(-4i64..=4, 1..=5).prop_map(|c| Poly::from_coeffs(c.into_iter().map(rat).collect()));
    runner
        .run(&(poly.clone(), poly, 1u32..=3), |(f, g, e)| {
            let p = &f * &g.pow(e);
            if p.is_zero() {
                return Ok(());
            }
            let total: usize = multiplicity_profile(&p).unwrap().iter().map(|x| x.multiplicity * x.degree()).sum();
            prop_assert_eq!(Some(total), p.degree());
            Ok(())
        })
        .map_err(|e| format!("degree conservation: {e}"))?;

    for t in 0..8u8 {
        let start = (t, (9 - t) % 8);
        let mut p = start;
        for i in 1..=8 {
            p = chain_step(p);
            ensure((p == start) == (i == 8), || format!("chain from {start:?}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("table reproduction", table_reproduction),
        ("groupings of fixed elliptic curves", groupings),
        ("symbolic point relations", symbolic_relations),
        ("exact Lefschetz closure", lefschetz_closure),
        ("rank solver", rank_solver),
        ("example regression", examples),
        ("local types on the invariant fiber", local_types),
        ("structural invariants", structural),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 passed in {:.1?}", 9 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
