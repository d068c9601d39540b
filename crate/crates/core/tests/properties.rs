use num_bigint::BigInt;
use proptest::prelude::*;
use qkz_hirota::combin::LinkPattern;
use qkz_hirota::qkz::enumerate_dyck;
use qkz_hirota::ring::{pluecker_check, rat, tau_qnumber, Matrix, TauPoly};

fn tau_poly() -> impl Strategy<Value = TauPoly> {
    prop::collection::vec((-8i32..=8, -50i64..=50), 0..7)
        .prop_map(|t| TauPoly::from_terms(t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn square(n: usize) -> impl Strategy<Value = Matrix<TauPoly>> {
    prop::collection::vec(tau_poly(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in tau_poly(), b in tau_poly(), c in tau_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn json_round_trip(a in tau_poly()) {
        prop_assert_eq!(TauPoly::from_json(&a.to_json()), Some(a));
    }

    #[test]
    fn display_parse_round_trip(a in tau_poly()) {
        prop_assert_eq!(TauPoly::parse(&a.to_string()), Some(a));
    }

    #[test]
    fn pluecker_3x3(a in square(3), b in square(3)) {
        prop_assert!(pluecker_check(&a, &b).unwrap());
    }

    #[test]
    fn qnumber_limit(k in 0u32..60) {
        prop_assert_eq!(tau_qnumber(k).eval(&rat(-2, 1)), rat(k as i64, 1));
    }

    #[test]
    fn link_pattern_round_trips(l in 1usize..=14, pick in any::<prop::sample::Index>()) {
        let paths = enumerate_dyck(l);
        let a = &paths[pick.index(paths.len())];
        let lp = LinkPattern::from_dyck(a);
        prop_assert_eq!(&lp.to_dyck(), a);
        prop_assert_eq!(&LinkPattern::from_tableau(&lp.to_tableau()).unwrap(), &lp);
        prop_assert_eq!(&LinkPattern::from_parens(&lp.to_parens()).unwrap(), &lp);
    }
}
