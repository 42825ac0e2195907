//! Property tests for the crate-wide invariants.

use num_complex::Complex64;
use proptest::prelude::*;

use turan::bounds::{
    check_point, lemma42_residual, seq_inequality, BoundKind, NormContext, SeqDirection,
};
use turan::circle::{min_on_circle, sup_on_circle};
use turan::poly::{conj_reciprocal, polar_derivative, Polynomial, RootForm};
use turan::rational::{Blaschke, PoleSet, RationalFn};

const TAU: f64 = std::f64::consts::TAU;

fn unit(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

prop_compose! {
    fn arb_complex(max_norm: f64)(radius in 0.0..1.0f64, angle in 0.0..TAU) -> Complex64 {
        Complex64::from_polar(radius.sqrt() * max_norm, angle)
    }
}

prop_compose! {
    fn arb_poleset(max_n: usize)(
        moduli in prop::collection::vec(1.3..3.5f64, 1..=max_n),
        angles in prop::collection::vec(0.0..TAU, 16),
    ) -> PoleSet {
        let poles = moduli
            .iter()
            .zip(&angles)
            .map(|(&m, &a)| Complex64::from_polar(m, a))
            .collect();
        PoleSet::new(poles).unwrap()
    }
}

prop_compose! {
    fn arb_instance()(
        poles in arb_poleset(6),
        k in 0.2..=1.0f64,
        m_frac in 0.0..1.0f64,
        s_frac in 0.0..1.0f64,
        radii in prop::collection::vec(0.0..1.0f64, 8),
        angles in prop::collection::vec(0.0..TAU, 8),
        lead_mod in 0.5..2.0f64,
        lead_angle in 0.0..TAU,
    ) -> RationalFn {
        let n = poles.n();
        let m = ((n as f64 + 0.999) * m_frac) as usize;
        let s = ((m as f64 + 0.999) * s_frac) as usize;
        let roots = radii
            .iter()
            .zip(&angles)
            .take(m - s)
            .map(|(&r, &a)| Complex64::from_polar(k * r.sqrt(), a))
            .collect();
        RationalFn::new(
            RootForm::new(Complex64::from_polar(lead_mod, lead_angle), roots, s),
            poles,
            k,
        )
        .unwrap()
    }
}

prop_compose! {
    fn arb_poly(max_deg: usize)(
        coeffs in prop::collection::vec(
            (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im)),
            1..=max_deg + 1,
        ),
    ) -> Polynomial {
        Polynomial::new(coeffs)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expand_matches_rootform_on_circle(
        leading in arb_complex(2.0),
        roots in prop::collection::vec(arb_complex(1.5), 0..8),
        s in 0usize..3,
        theta in 0.0..TAU,
    ) {
        prop_assume!(leading.norm() > 0.1);
        let rf = RootForm::new(leading, roots, s);
        let p = rf.expand();
        let z = unit(theta);
        let (a, b) = (rf.eval(z), p.eval(z));
        prop_assert!((a - b).norm() <= 1e-10 * a.norm().max(1e-12));
    }

    #[test]
    fn conj_reciprocal_involution(p in arb_poly(8), pad in 0usize..3) {
        let n = p.degree().unwrap_or(0) + pad;
        let back = conj_reciprocal(&conj_reciprocal(&p, n).unwrap(), n).unwrap();
        prop_assert_eq!(p.coeffs().len(), back.coeffs().len());
        for (a, b) in p.coeffs().iter().zip(back.coeffs()) {
            prop_assert!((a - b).norm() <= 1e-14);
        }
    }

    #[test]
    fn polar_derivative_two_routes(
        p in arb_poly(8),
        pad in 0usize..3,
        alpha in arb_complex(5.0),
        theta in 0.0..TAU,
    ) {
        let n = p.degree().unwrap_or(0) + pad;
        let z = unit(theta);
        let via_poly = polar_derivative(&p, n, alpha).unwrap().eval(z);
        let direct = p.eval(z) * (n as f64) + (alpha - z) * p.derivative().eval(z);
        prop_assert!((via_poly - direct).norm() <= 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn blaschke_is_unimodular_and_has_real_angular_derivative(
        poles in arb_poleset(8),
        theta in 0.0..TAU,
    ) {
        let b = Blaschke::new(poles);
        let z = unit(theta);
        let bv = b.eval(z).unwrap();
        prop_assert!((bv.norm() - 1.0).abs() <= 1e-10);
        let q = z * b.eval_prime(z).unwrap() / bv;
        let abs_bp = b.abs_prime_on_circle(z).unwrap();
        prop_assert!(q.im.abs() <= 1e-9 * abs_bp.max(1.0));
        prop_assert!((q.re - abs_bp).abs() <= 1e-9 * abs_bp.max(1.0));
    }

    #[test]
    fn lemma42_identity(poles in arb_poleset(8), theta in 0.0..TAU) {
        let residual = lemma42_residual(&poles, unit(theta)).unwrap();
        prop_assert!(residual.abs() < 1e-9);
    }

    #[test]
    fn derivative_paths_agree(r in arb_instance(), theta in 0.0..TAU) {
        let z = unit(theta);
        prop_assume!(r.distance_to_zeros(z) > 1e-3);
        let a = r.derivative_product_form(z).unwrap();
        let b = r.derivative_quotient_form(z).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1e-9));
    }

    #[test]
    fn star_transform_preserves_modulus(r in arb_instance(), theta in 0.0..TAU) {
        let z = unit(theta);
        let star = r.star(z).unwrap().norm();
        let plain = r.eval(z).unwrap().norm();
        prop_assert!((star - plain).abs() <= 1e-10 * plain.max(1.0));
    }

    #[test]
    fn circle_extrema_bracket_every_sample(r in arb_instance()) {
        let f = |z: Complex64| r.eval(z).unwrap_or(Complex64::new(f64::NAN, 0.0));
        let sup = sup_on_circle(f, 1.0, 256, 1e-10).unwrap();
        let min = min_on_circle(f, 1.0, 256, 1e-10).unwrap();
        for i in 0..256 {
            let v = f(unit(TAU * i as f64 / 256.0)).norm();
            prop_assert!(v <= sup.value + 1e-12);
            prop_assert!(v >= min.value - 1e-12);
        }
    }

    #[test]
    fn sequence_inequality_le_one(xs in prop::collection::vec(0.0..=1.0f64, 1..16)) {
        prop_assert!(seq_inequality(&xs, SeqDirection::LeOne).unwrap().holds);
    }

    #[test]
    fn sequence_inequality_ge_one(xs in prop::collection::vec(1.0..=6.0f64, 1..16)) {
        prop_assert!(seq_inequality(&xs, SeqDirection::GeOne).unwrap().holds);
    }

    #[test]
    fn lower_bounds_hold_pointwise(r in arb_instance(), theta in 0.0..TAU) {
        let z = unit(theta);
        let ctx = NormContext::empty();
        for kind in [BoundKind::Thm2_2, BoundKind::Thm2_3, BoundKind::Thm3_1,
                     BoundKind::Cor3_2, BoundKind::Cor3_2_exponent_fixed, BoundKind::Cor3_3] {
            let m = check_point(kind, &r, z, &ctx).unwrap();
            prop_assert!(
                m.slack() >= -1e-9 * m.lhs.max(1.0),
                "{} slack {}", kind, m.slack()
            );
        }
    }
}
