use k3auto::arith::{multiplicity_profile, rat, ratio, Cyc8, Poly, RationalPolynomial};
use k3auto::fiber::chain_step;
use k3auto::weierstrass::{kodaira_type_at, WeierstrassFibration};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cyc8() -> impl Strategy<Value = Cyc8> {
    prop::array::uniform4((-20i64..=20, 1i64..=6)).prop_map(|c| Cyc8::new(c.map(|(n, d)| ratio(n, d))))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1).prop_map(|c| Poly::from_coeffs(c.into_iter().map(rat).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cyc8_field_axioms(a in cyc8(), b in cyc8(), c in cyc8()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() + Cyc8::zero(), a.clone());
        prop_assert_eq!(a.clone() * Cyc8::one(), a.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inverse().unwrap(), Cyc8::one());
        }
    }

    #[test]
    fn galois_is_multiplicative_and_composes(a in cyc8(), b in cyc8(), j in prop::sample::select(vec![1i64, 3, 5, 7]), k in prop::sample::select(vec![1i64, 3, 5, 7])) {
        prop_assert_eq!((a.clone() * b.clone()).galois(j).unwrap(), a.galois(j).unwrap() * b.galois(j).unwrap());
        prop_assert_eq!(a.galois(j).unwrap().galois(k).unwrap(), a.galois(j * k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn profile_conserves_degree(f in small_poly(4), g in small_poly(3), e in 1u32..=3) {
        let p = &f * &g.pow(e);
        prop_assume!(!p.is_zero());
        let profile = multiplicity_profile(&p).unwrap();
        let total: usize = profile.iter().map(|x| x.multiplicity * x.degree()).sum();
        prop_assert_eq!(total, p.degree().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn kodaira_invariant_under_rescaling(
        a in small_poly(8),
        b in small_poly(12),
        lambda in prop::sample::select(vec![2i64, 3, -1, 5]),
    ) {
        let Ok(f) = WeierstrassFibration::short(a.clone(), b.clone()) else { return Ok(()) };
        let g = WeierstrassFibration::short(a.scale(&rat(lambda.pow(4))), b.scale(&rat(lambda.pow(6)))).unwrap();
        let zero = k3auto::arith::Place::zero();
        let (kf, kg) = (kodaira_type_at(&f, &zero), kodaira_type_at(&g, &zero));
        match (kf, kg) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x.kodaira, y.kodaira),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "only one of the models is minimal"),
        }
    }
}

#[test]
fn chain_step_has_period_eight() {
    for t in 0..8u8 {
        let start = (t, (9 - t) % 8);
        let mut p = start;
        for i in 1..=8 {
            p = chain_step(p);
            assert_eq!((p.0 + p.1) % 8, 1);
            assert_eq!(p == start, i == 8);
        }
    }
}
