use nchess_core::classify::{berkovich_factor, classify_one_negative, linear_poly, quad_form_matrix, synthesize, Verdict};
use nchess_core::inertia::{exact_inertia, min_signature_hessian};
use nchess_core::kronops::{reversal_permutation, structured_transpose};
use nchess_core::midmat::MiddleMatrix;
use nchess_core::ncderiv::hessian;
use nchess_core::ncparse::{parse, print};
use nchess_core::positivity::{
    coords_to_tuple, h_dimension, hessian_form, middle_inertia_transport, relaxed_positivity, relaxed_value,
    HessianVariant, PositivityVerdict,
};
use nchess_core::sample::Sampler;
use nchess_core::{rat, Matrix, NcPoly, QMatrix, QPoly, Rational};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn invertible(s: &mut Sampler, n: usize) -> QMatrix {
    loop {
        let m = s.matrix(n, n);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// `⟨p(X + tH)v, v⟩` as a polynomial in `t`, coefficients by Vandermonde
/// interpolation at `t = 0..=d`.
fn t_coefficients(p: &QPoly, xs: &nchess_core::QTuple, hs: &nchess_core::QTuple, v: &[Rational]) -> Vec<Rational> {
    let d = p.degree().unwrap_or(0);
    let pts: Vec<Rational> = (0..=d as i64).map(|t| rat(t, 1)).collect();
    let values: Vec<Rational> = pts
        .iter()
        .map(|t| {
            let shifted =
                nchess_core::MatrixTuple::new(xs.matrices().iter().zip(hs.matrices()).map(|(x, h)| x.add(&h.scale(t))).collect())
                    .unwrap();
            let pv = p.evaluate(&shifted, None).unwrap().mul_vec(v);
            pv.iter().zip(v).fold(rat(0, 1), |a, (x, y)| a + x.clone() * y.clone())
        })
        .collect();
    let vander = Matrix::from_fn(d + 1, d + 1, |i, j| {
        (0..j).fold(rat(1, 1), |acc, _| acc * pts[i].clone())
    });
    vander.inverse().unwrap().mul_vec(&values)
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn parse_print_round_trip(seed in any::<u64>(), g in 1usize..=3, d in 0usize..=4) {
        let p = Sampler::new(seed).symmetric_poly(g, d);
        let text = print(&p);
        let back = parse(&text, g).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(print(&back), text);
    }

    #[test]
    fn involution_is_an_anti_automorphism(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = s.symmetric_poly(2, 3) + s.homogeneous_symmetric(2, 1) * s.homogeneous_symmetric(2, 2);
        let b = s.symmetric_poly(2, 2);
        prop_assert_eq!(a.involution().involution(), a.clone());
        prop_assert_eq!((&a * &b).involution(), &b.involution() * &a.involution());
    }

    #[test]
    fn linear_substitution_round_trip(seed in any::<u64>(), g in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let p = s.symmetric_poly(g, 3);
        let m = invertible(&mut s, g);
        let back = p.substitute_linear(&m).unwrap().substitute_linear(&m.inverse().unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn evaluation_respects_involution(seed in any::<u64>(), n in 1usize..=4) {
        let mut s = Sampler::new(seed);
        let h = s.homogeneous_symmetric(2, 3) * s.symmetric_poly(2, 1);
        let xs = s.tuple(2, n);
        prop_assert_eq!(h.involution().evaluate(&xs, None).unwrap(), h.evaluate(&xs, None).unwrap().transpose());
    }

    #[test]
    fn reversal_and_structured_transpose_are_involutions(seed in any::<u64>(), g in 1usize..=3, j in 0usize..=3) {
        let pi = reversal_permutation(g, j);
        prop_assert!(pi.compose(&pi).is_identity());
        let mut s = Sampler::new(seed);
        let c = s.matrix(g, g * g);
        prop_assert_eq!(structured_transpose(&structured_transpose(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn middle_matrix_reproduces_hessian(seed in any::<u64>(), g in 1usize..=2, d in 2usize..=4) {
        let p = Sampler::new(seed).symmetric_poly(g, d);
        let mm = MiddleMatrix::build(&p).unwrap();
        prop_assert_eq!(mm.reconstruct(), hessian(&p).unwrap());
        prop_assert!(mm.structure_violations().is_empty());
    }

    #[test]
    fn inertia_is_congruence_invariant(seed in any::<u64>(), n in 1usize..=6) {
        let mut s = Sampler::new(seed);
        let m = s.symmetric(n);
        let t = invertible(&mut s, n);
        let (a, cert) = exact_inertia(&m).unwrap();
        let (b, _) = exact_inertia(&t.transpose().mul(&m).mul(&t)).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(cert.reconstruct(), m);
    }

    #[test]
    fn quadratic_form_matrix_round_trip(seed in any::<u64>(), g in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let m = s.matrix(g, g);
        let q = nchess_core::classify::quadratic_poly(&m);
        let back = quad_form_matrix(&q.clone().with_g(g)).unwrap();
        prop_assert_eq!(&back.matrix, &m);
        prop_assert_eq!(back.to_poly(), q);
    }

    #[test]
    fn factorization_through_linear_forms(seed in any::<u64>(), g in 2usize..=3) {
        let mut s = Sampler::new(seed);
        let u = s.nonzero_vector(g);
        let b = s.nonzero_vector(g);
        let f3 = s.symmetric_poly(g, 2);
        let f3 = &f3 - &NcPoly::constant(g, f3.constant_term());
        let f1 = &f3 * &linear_poly(&b);
        let f2 = &linear_poly(&u) * &f3;
        prop_assert_eq!(berkovich_factor(&u, &b, &f1, &f2).unwrap(), f3);
    }

    #[test]
    fn degree_is_bounded_by_signature(seed in any::<u64>(), g in 1usize..=3, d in 2usize..=5) {
        let p = Sampler::new(seed).symmetric_poly(g, d);
        let sig = min_signature_hessian(&p).unwrap();
        prop_assert!(d <= 2 * sig.plus + 2 && d <= 2 * sig.minus + 2, "d = {}, {:?}", d, sig);
    }

    #[test]
    fn hessian_form_matches_second_t_coefficient(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let p = s.symmetric_poly(2, 4);
        let xs = s.tuple(2, n);
        let v = s.vector(n);
        let coords = s.vector(h_dimension(2, n));
        let hs = coords_to_tuple(2, n, &coords).unwrap();
        let m = hessian_form(&p, &xs, &v, &HessianVariant::Plain).unwrap();
        let t = t_coefficients(&p, &xs, &hs, &v);
        prop_assert_eq!(m.quadratic_form(&coords), rat(2, 1) * t[2].clone());
    }

    #[test]
    fn middle_inertia_transports(seed in any::<u64>(), g in 1usize..=2, n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let p = s.symmetric_poly(g, 4);
        let xs = s.tuple(g, n);
        prop_assert!(middle_inertia_transport(&p, &xs, 0.0).unwrap().holds());
    }
}

proptest! {
    #![proptest_config(config(20))]

    #[test]
    fn synthesized_polynomials_classify_back(seed in any::<u64>()) {
        let p = Sampler::new(seed).one_negative(2).unwrap();
        let rep = classify_one_negative(&p).unwrap();
        prop_assert!(rep.verdict != Verdict::SigmaAtLeastTwo);
        if let Some(data) = rep.data {
            let rebuilt = synthesize(
                &data.constant,
                &data.linear,
                &data.quadratic,
                &data.direction,
                &data.cofactor,
                &data.quartic_factor,
            ).unwrap();
            prop_assert_eq!(rebuilt, p);
            prop_assert!(data.form_certificate_inertia.is_psd());
        }
    }

    #[test]
    fn negative_witnesses_re_evaluate(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let p = s.symmetric_poly(1, 4);
        let xs = s.tuple(1, n);
        let v = s.nonzero_vector(n);
        let delta = rat(1, 10);
        if let PositivityVerdict::Negative { witness, value, .. } =
            relaxed_positivity(&p, &xs, &v, &delta, 1e4, 1e-9).unwrap()
        {
            prop_assert!(value < rat(0, 1));
            for lambda in [rat(0, 1), rat(1000, 1)] {
                prop_assert_eq!(relaxed_value(&p, &xs, &v, &witness, &lambda, &delta).unwrap(), value.clone());
            }
        }
    }

    #[test]
    fn convex_quadratics_are_never_negative(seed in any::<u64>(), g in 1usize..=2, n in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let r = s.matrix(g, g);
        let gram = r.transpose().mul(&r);
        let p = nchess_core::classify::quadratic_poly(&gram) + s.symmetric_poly(g, 1);
        let xs = s.tuple(g, n);
        let v = s.nonzero_vector(n);
        let verdict = relaxed_positivity(&p, &xs, &v, &rat(1, 10), 1e4, 1e-9).unwrap();
        prop_assert_ne!(verdict.label(), "Negative");
    }
}

/// Relaxed positivity fails near the origin for a cubic.
#[test]
fn cubic_is_negative_somewhere_near_origin() {
    let p = parse("x1^3", 1).unwrap();
    let mut s = Sampler::new(0);
    let eps = rat(1, 100);
    let found = (0..100).any(|_| {
        let xs = s.tuple(1, 3).scale(&eps);
        let v = s.nonzero_vector(3);
        let verdict = relaxed_positivity(&p, &xs, &v, &rat(1, 1_000_000), 1e6, 1e-9).unwrap();
        verdict.label() == "Negative"
    });
    assert!(found);
}
