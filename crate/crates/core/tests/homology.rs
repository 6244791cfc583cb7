use g2_cartan::g2::{BasisLabel, BasisLabel::*, G2Element};
use g2_cartan::homology::{self, module_e, Chain, Cochain, Coefficient};
use g2_cartan::{linalg, rat, Rational};
use proptest::prelude::*;

mod common;

fn unit_cochain(k: usize, p: usize) -> Cochain<Rational> {
    let mut v = vec![rat(0, 1); homology::space_dim(k)];
    v[p] = rat(1, 1);
    Cochain::from_vec(k, v)
}

fn unit_chain(k: usize, p: usize) -> Chain<Rational> {
    let mut v = vec![rat(0, 1); homology::space_dim(k)];
    v[p] = rat(1, 1);
    Chain::from_vec(k, v)
}

#[test]
fn hodge_slice_in_degree_two() {
    let h = homology::hodge2();
    assert_eq!(h.total, 140);
    let (a, b, c) = h.dims();
    assert_eq!(b, 5);
    assert_eq!(a + b + c, 140);
    assert!(h.pairwise_trivial());
    assert!(h.spans_everything());
    assert!(h.harmonic_is_joint_kernel());
    let phi0 = homology::to_cochain(&homology::phi0()).into_vec();
    let all: Vec<Vec<Rational>> = h.harmonic.iter().cloned().chain([phi0]).collect();
    assert_eq!(linalg::rank(&all), 5);
}

#[test]
fn harmonic_first_degree() {
    // three-dimensional, Z1 acting by −2
    let h = homology::hodge_decompose(1);
    assert_eq!(h.harmonic.len(), 3);
    for v in &h.harmonic {
        let c = Cochain::from_vec(1, v.clone());
        let z = homology::act_cochain(&G2Element::basis(Z1), &c);
        assert_eq!(z, c.scale(&rat(-2, 1)));
    }
}

#[test]
fn differentials_square_to_zero() {
    for k in 0..=2 {
        for p in 0..homology::space_dim(k) {
            let c = unit_cochain(k, p);
            assert!(homology::partial(&homology::partial(&c)).is_zero(), "k={} p={}", k, p);
        }
    }
    for k in 2..=3 {
        for p in 0..homology::space_dim(k) {
            let c = unit_chain(k, p);
            assert!(homology::partial_star(&homology::partial_star(&c)).is_zero());
        }
    }
}

#[test]
fn laplacian_is_g0_equivariant() {
    for l in [Z1, Z2, E01, F01] {
        let x = G2Element::<Rational>::basis(l);
        for p in (0..140).step_by(3) {
            let c = unit_cochain(2, p);
            let lhs = homology::laplacian(&homology::act_cochain(&x, &c));
            let rhs = homology::act_cochain(&x, &homology::laplacian(&c));
            assert_eq!(lhs, rhs, "{} at {}", l, p);
        }
    }
}

#[test]
fn weight_ladder_on_h2() {
    let e01 = G2Element::<Rational>::basis(E01);
    let mut c = homology::to_chain(&homology::lowest_weight_cochain::<Rational>());
    for step in 0..4 {
        c = homology::act_chain(&e01, &c);
        assert!(!c.is_zero(), "step {}", step);
    }
    assert!(homology::act_chain(&e01, &c).is_zero());
}

#[test]
fn curvature_module_generation() {
    let e = homology::generate_e();
    assert_eq!(e.dim, 24);
    let dims: Vec<usize> = e.component_dims.iter().map(|(_, d)| *d).collect();
    assert_eq!(dims, vec![5, 4, 3, 2, 4, 1, 3, 2]);
    assert!(e.all_printed_match(), "{:?}", e.ratios);
    assert!(e.is_p_stable());
    assert!(e.in_kernel_of_partial_star());
    assert_eq!(e.min_homogeneity(), 4);
    assert!(e.components_irreducible());
    assert!(e.dictionary_matches_printed());
}

#[test]
fn weight_restricted_part_of_e() {
    let got = module_e::weight_restricted_e((2, 1));
    assert_eq!(got, vec![Coefficient::A3, Coefficient::C2, Coefficient::E, Coefficient::Et2]);
}

#[test]
fn vertical_variation_reproduces_secondary_equations() {
    for name in common::P_LABELS {
        let l = BasisLabel::from_name(name).unwrap();
        let v = homology::vertical_variation(&G2Element::<Rational>::basis(l)).unwrap();
        assert_eq!(v, common::expected_variation(l), "along {}", name);
    }
}

#[test]
fn vertical_variation_edge_cases() {
    let zero = homology::vertical_variation(&G2Element::<Rational>::zero()).unwrap();
    assert!(zero.iter().all(|r| linalg::is_zero_vec(r)));
    let v = homology::vertical_variation(&G2Element::<Rational>::basis(E01)).unwrap();
    let k: Vec<Rational> = (1..=24).map(|i| rat(i, 1)).collect();
    let out = module_e::apply_variation(&v, &k);
    let expected = [0, -1, -4, -9, -16, 0, -6];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(out[i], rat(*e, 1));
    }
    assert_eq!(homology::vertical_variation(&G2Element::<Rational>::basis(F10)), Err(homology::HomologyError::NotInP));
}

#[test]
fn harmonic_quartic_normalization() {
    // κ = Σ A_j d_Aj has harmonic part A1y⁴ + 4A2xy³ + 6A3x²y² + 4A4x³y + A5x⁴
    let factors = [1, 4, 6, 4, 1];
    for (k, c) in
        [Coefficient::A1, Coefficient::A2, Coefficient::A3, Coefficient::A4, Coefficient::A5].into_iter().enumerate()
    {
        let q = homology::harmonic_quartic(&module_e::dictionary_cochain(c));
        for (m, v) in q.iter().enumerate() {
            assert_eq!(*v, rat(if m == k { factors[k] } else { 0 }, 1), "{} monomial {}", c, m);
        }
    }
    for c in &Coefficient::ALL[5..] {
        let q = homology::harmonic_quartic(&module_e::dictionary_cochain(*c));
        assert!(q.iter().all(|x| *x == rat(0, 1)), "{}", c);
    }
}

#[test]
fn covariants_of_zero_and_outside_e() {
    let z = homology::quartic_covariants(&Cochain::<Rational>::zero(2)).unwrap();
    assert!(z.binary.iter().all(|x| *x == rat(0, 1)));
    assert!(z.ternary.iter().all(|(_, x)| *x == rat(0, 1)));
    let bad: Cochain<Rational> = Cochain::term(&[F10, F11], G2Element::basis(Z1));
    assert_eq!(homology::quartic_covariants(&bad), Err(homology::HomologyError::NotInE));
}

fn small_e_element() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coefficients_round_trip(k in small_e_element()) {
        let mut kappa = Cochain::<Rational>::zero(2);
        for (c, d) in k.iter().zip(module_e::dictionary()) {
            kappa = kappa + d.scale(&rat(*c, 1));
        }
        let got = homology::coefficients(&kappa).unwrap();
        let want: Vec<Rational> = k.iter().map(|&c| rat(c, 1)).collect();
        prop_assert_eq!(got, want);
        prop_assert!(homology::partial_star_cochain(&kappa).is_zero());
    }

    #[test]
    fn e_chains_are_cycles_of_partial_star(k in small_e_element()) {
        let e = homology::generate_e();
        let mut c = Chain::<Rational>::zero(2);
        for (x, p) in k.iter().zip(&e.printed) {
            c = c + p.scale(&rat(*x, 1));
        }
        prop_assert!(homology::partial_star(&c).is_zero());
    }
}
