use g2_cartan::g2::{self, BasisLabel, G2Element};
use g2_cartan::{rat, Rational};
use proptest::prelude::*;

#[test]
fn jacobi_on_all_basis_triples() {
    let s = g2::check_jacobi();
    assert_eq!(s.count, 364);
    assert!(s.passed(), "{:?}", s.failures);
}

#[test]
fn killing_trace_matches_closed_form() {
    let s = g2::check_killing();
    assert!(s.passed(), "{:?}", s.failures);
}

#[test]
fn rep7_is_homomorphism_preserving_g_and_psi() {
    let h = g2::check_rep7_homomorphism();
    assert_eq!(h.count, 196);
    assert!(h.passed(), "{:?}", h.failures);
    let t = g2::check_rep7_tensors();
    assert!(t.passed(), "{:?}", t.failures);
}

#[test]
fn antisymmetry_of_table() {
    for a in BasisLabel::ALL {
        for b in BasisLabel::ALL {
            let x = g2::bracket_labels::<Rational>(a, b);
            let y = g2::bracket_labels::<Rational>(b, a);
            assert_eq!(x, -y);
        }
    }
}

#[test]
fn grading_respected_by_bracket() {
    for a in BasisLabel::ALL {
        for b in BasisLabel::ALL {
            let x = g2::bracket_labels::<Rational>(a, b);
            for (l, _) in x.support() {
                let (ra, rb) = (a.root(), b.root());
                assert_eq!(l.root(), (ra.0 + rb.0, ra.1 + rb.1), "[{},{}]", a, b);
            }
        }
    }
}

fn element() -> impl Strategy<Value = G2Element<Rational>> {
    proptest::collection::vec(-5i64..=5, 14)
        .prop_map(|v| G2Element::from_coords(v.into_iter().map(|c| rat(c, 1)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_random(x in element(), y in element(), z in element()) {
        let s = g2::bracket(&x, &g2::bracket(&y, &z))
            + g2::bracket(&y, &g2::bracket(&z, &x))
            + g2::bracket(&z, &g2::bracket(&x, &y));
        prop_assert!(s.is_zero());
    }

    #[test]
    fn killing_ad_invariant(x in element(), y in element(), z in element()) {
        prop_assert!(g2::killing_invariance(&x, &y, &z));
    }

    #[test]
    fn bracket_bilinear(x in element(), y in element(), z in element(), c in -4i64..4) {
        let c = rat(c, 1);
        let lhs = g2::bracket(&(x.clone().scale(&c) + y.clone()), &z);
        let rhs = g2::bracket(&x, &z).scale(&c) + g2::bracket(&y, &z);
        prop_assert_eq!(lhs, rhs);
    }
}
