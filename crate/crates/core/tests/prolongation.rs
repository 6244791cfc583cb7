use g2_cartan::g2::{self, BasisLabel::*};
use g2_cartan::linalg;
use g2_cartan::parabolic;
use g2_cartan::prolongation::{annihilator, g0_action, tanaka_prolong, BinaryQuartic, ProlongationError, RootType, G0};
use g2_cartan::{rat, G2Element, Rational, RationalG2, Ring};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn span_eq(a: &[RationalG2], b: &[RationalG2]) -> bool {
    let a: Vec<Vec<Rational>> = a.iter().map(|x| x.coords().to_vec()).collect();
    let b: Vec<Vec<Rational>> = b.iter().map(|x| x.coords().to_vec()).collect();
    let ra = linalg::rank(&a);
    ra == linalg::rank(&b) && linalg::intersection_dim(&a, &b) == ra
}

fn el(terms: &[(i64, g2_cartan::BasisLabel)]) -> RationalG2 {
    G2Element::from_terms(terms)
}

fn nf(t: RootType) -> BinaryQuartic<Rational> {
    BinaryQuartic::normal_form(t, rat(-2, 1))
}

#[test]
fn root_type_table() {
    let rows = [
        (RootType::N, vec![el(&[(1, Z2)]), el(&[(1, F01)])], 7),
        (RootType::III, vec![el(&[(1, Z1), (-4, Z2)])], 6),
        (RootType::D, vec![el(&[(1, Z1), (-2, Z2)])], 6),
        (RootType::II, vec![], 5),
        (RootType::I, vec![], 5),
    ];
    for (t, ann, dim) in rows {
        let phi = nf(t);
        assert_eq!(phi.tag, Some(t));
        assert!(span_eq(&annihilator(&phi), &ann), "ann for {}", t);
        let a = tanaka_prolong(&phi).unwrap();
        assert_eq!(a.dim(), dim, "dim for {}", t);
        assert!(a.is_rigid());
        assert_eq!(a.part(0).len(), ann.len());
    }
}

#[test]
fn generic_type_i_parameters() {
    for k in [rat(2, 1), rat(-1, 1), rat(7, 3), rat(-5, 11)] {
        let phi = BinaryQuartic::normal_form(RootType::I, k);
        assert_eq!(tanaka_prolong(&phi).unwrap().dim(), 5);
    }
}

#[test]
fn zero_quartic() {
    let z = BinaryQuartic::<Rational>::normal_form(RootType::O, rat(0, 1));
    assert!(z.is_zero());
    assert_eq!(tanaka_prolong(&z).unwrap_err(), ProlongationError::ZeroQuartic);
    assert_eq!(annihilator(&z).len(), 4);
}

#[test]
fn rigidity_brackets() {
    // X = a·e10 + b·e11 against 𝔤₋₁
    for (a, b) in [(1, 0), (0, 1), (2, -3)] {
        let x = el(&[(a, E10), (b, E11)]);
        assert_eq!(g2::bracket(&x, &G2Element::basis(F10)), el(&[(2 * a, Z1), (-3 * a, Z2), (-3 * b, E01)]));
        assert_eq!(g2::bracket(&x, &G2Element::basis(F11)), el(&[(-b, Z1), (3 * b, Z2), (-3 * a, F01)]));
    }
}

#[test]
fn fifty_random_quartics_are_rigid() {
    let mut rng = StdRng::seed_from_u64(0x235);
    for _ in 0..50 {
        let c: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-9..=9));
        let phi: BinaryQuartic<Rational> = BinaryQuartic::from_ints(c);
        if phi.is_zero() {
            continue;
        }
        let a = tanaka_prolong(&phi).unwrap();
        assert!(a.part(1).is_empty(), "𝔞₁ ≠ 0 for {}", phi);
        assert!(a.is_rigid());
        assert_eq!(a.dim(), 5 + annihilator(&phi).len());
    }
}

fn exp_action(x: &RationalG2, phi: &BinaryQuartic<Rational>) -> BinaryQuartic<Rational> {
    let mut total = phi.clone();
    let mut term = phi.clone();
    for k in 1..=5 {
        term = g0_action(x, &term).unwrap().scale(&rat(1, k));
        total = total.add(&term);
    }
    total
}

fn quartic() -> impl Strategy<Value = BinaryQuartic<Rational>> {
    prop::array::uniform5(-4i64..=4).prop_map(BinaryQuartic::from_ints)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn annihilator_is_equivariant(phi in quartic(), s in -3i64..=3, t in -3i64..=3) {
        let x = el(&[(s, E01)]);
        let y = el(&[(t, F01)]);
        let g_phi = exp_action(&y, &exp_action(&x, &phi));
        let moved: Vec<RationalG2> = annihilator(&phi)
            .iter()
            .map(|a| parabolic::exp_ad(&y, &parabolic::exp_ad(&x, a).unwrap()).unwrap())
            .collect();
        prop_assert!(span_eq(&annihilator(&g_phi), &moved));
    }

    #[test]
    fn action_is_a_representation(phi in quartic()) {
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = (G2Element::basis(G0[i]), G2Element::basis(G0[j]));
                let ab = g0_action(&a, &g0_action(&b, &phi).unwrap()).unwrap();
                let ba = g0_action(&b, &g0_action(&a, &phi).unwrap()).unwrap();
                let lhs = ab.add(&ba.scale(&Rational::from_int(-1)));
                let rhs = g0_action(&g2::bracket(&a, &b), &phi).unwrap();
                prop_assert_eq!(lhs.coeffs, rhs.coeffs);
            }
        }
    }

    #[test]
    fn dimension_formula(phi in quartic()) {
        prop_assume!(!phi.is_zero());
        let a = tanaka_prolong(&phi).unwrap();
        prop_assert_eq!(a.dim(), 5 + annihilator(&phi).len());
    }
}
