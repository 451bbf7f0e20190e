use std::f64::consts::PI;

use proptest::prelude::*;

use sdkp_core::algebra::{self, max_abs, trace_identity, IndexString, Mat5};
use sdkp_core::amplitudes::{compton_msq, coulomb_field, coulomb_msq, moller_msq};
use sdkp_core::cross_sections::{compton_dcs_unpolarized, coulomb_dcs, moller_dcs_cm};
use sdkp_core::distributions::{
    dkp_feynman, fix_gauge_constant, gauge_remainder, singular_order, split, DistributionDescriptor, FrequencyFactor,
};
use sdkp_core::kinematics::{
    cm_elastic, compton_lab, compton_omega_f, coulomb_elastic, polarization_basis, FourVector,
};
use sdkp_core::spinors::{projector, solve_u, Frequency};
use sdkp_core::{Complex64, Tolerances};

fn on_shell() -> impl Strategy<Value = (FourVector, f64)> {
    (0.1..5.0_f64, 0.0..50.0_f64, -1.0..1.0_f64, 0.0..(2.0 * PI)).prop_map(|(m, p, c, phi)| {
        let s = (1.0 - c * c).sqrt();
        (FourVector::on_shell(m, p * s * phi.cos(), p * s * phi.sin(), p * c), m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn odd_traces_vanish(ix in prop::collection::vec(0..4usize, 1..8).prop_filter("odd", |v| v.len() % 2 == 1)) {
        let s = IndexString::new(ix).unwrap();
        prop_assert!(algebra::standard().product(&s).trace().norm() < 1e-12);
        prop_assert_eq!(trace_identity(&s), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn even_traces_match(ix in prop::collection::vec(0..4usize, 2..9).prop_filter("even", |v| v.len() % 2 == 0)) {
        let s = IndexString::new(ix).unwrap();
        let d = algebra::standard().product(&s).trace() - trace_identity(&s);
        prop_assert!(d.norm() < 1e-10);
    }

    #[test]
    fn slash_cubed((p, _) in on_shell()) {
        let s = algebra::standard().slash(&p);
        let lhs = s * s * s;
        let rhs = s * Complex64::from(p.norm_sq());
        prop_assert!(max_abs(&(lhs - rhs)) <= 1e-10 * max_abs(&rhs).max(1.0));
    }

    #[test]
    fn spinor_normalization((p, m) in on_shell()) {
        let b0 = *algebra::standard().beta(0);
        let um = solve_u(&p, Frequency::Negative, m).unwrap();
        let up = solve_u(&p, Frequency::Positive, m).unwrap();
        prop_assert!((um.sandwich(&b0).re - 1.0).abs() < 1e-10);
        prop_assert!((up.sandwich(&b0).re + 1.0).abs() < 1e-10);
        prop_assert!(max_abs(&(um.outer() - projector(&p, m).unwrap())) < 1e-10);
    }

    #[test]
    fn propagator_identity(m in 0.2..5.0_f64, q in prop::array::uniform4(-10.0..10.0_f64)) {
        let q = FourVector::new(q[0], q[1], q[2], q[3]);
        prop_assume!(((q.norm_sq() - m * m) / (m * m)).abs() > 1e-3);
        let s = algebra::standard().slash(&q);
        let prop = dkp_feynman(&q, m, &Mat5::zeros()).unwrap().matrix;
        let lhs = (s - Mat5::identity() * Complex64::from(m)) * prop;
        let rhs = -s / Complex64::from(m);
        prop_assert!(max_abs(&(lhs - rhs)) <= 1e-10 * max_abs(&rhs));
        let c = fix_gauge_constant(m).unwrap();
        prop_assert!(max_abs(&gauge_remainder(&q, m, &c).unwrap()) <= 1e-10 * max_abs(&s) / m);
    }

    #[test]
    fn singular_order_is_degree_minus_two(deg in 0usize..6, m in 0.0..3.0_f64) {
        let d = DistributionDescriptor::scalar_monomial(deg, m, FrequencyFactor::Sign);
        prop_assert_eq!(singular_order(&d).unwrap().value(), deg as i32 - 2);
        let r = split(&d).unwrap();
        let expected: usize = (0..=(deg as i32 - 2)).map(|l| { let l = l as usize; (l + 1) * (l + 2) * (l + 3) / 6 }).sum();
        prop_assert_eq!(r.free_constants(), expected);
    }

    #[test]
    fn descriptor_text_roundtrip(deg in 0usize..6, m in 0.0..10.0_f64, tag in 0..3usize) {
        let name = ["sgn", "pos", "neg"][tag];
        let d: DistributionDescriptor = format!("delta m={m} deg={deg} {name}").parse().unwrap();
        prop_assert_eq!(d.degree(), deg);
        prop_assert_eq!(d.mass, m);
    }

    #[test]
    fn mandelstam_sum(s in 4.5..200.0_f64, theta in 0.05..3.09_f64) {
        let proc = cm_elastic(s, theta, 1.0).unwrap();
        let mand = proc.mandelstam().unwrap();
        prop_assert!((mand.sum() - 4.0).abs() < 1e-10 * s);
    }

    #[test]
    fn compton_kinematics_conserve(w in 1e-3..50.0_f64, theta in 0.0..PI) {
        let proc = compton_lab(w, theta, 1.0).unwrap();
        prop_assert!((proc.partner_out.unwrap().t - compton_omega_f(w, theta, 1.0)).abs() < 1e-14 * w);
        let mand = proc.mandelstam().unwrap();
        prop_assert!((mand.sum() - 2.0).abs() < 1e-9 * (1.0 + w));
    }

    #[test]
    fn polarization_basis_is_orthonormal_and_transverse(theta in 0.0..PI, w in 0.1..10.0_f64) {
        let k = FourVector::new(w, w * theta.sin(), 0.0, w * theta.cos());
        let [a, b] = polarization_basis(&k).unwrap();
        prop_assert!((a.overlap(&a) - 1.0).abs() < 1e-14 && (b.overlap(&b) - 1.0).abs() < 1e-14);
        prop_assert!(a.overlap(&b).abs() < 1e-14);
        prop_assert!(a.epsilon.spatial_dot(&k).abs() < 1e-12 * w);
        prop_assert!(b.epsilon.spatial_dot(&k).abs() < 1e-12 * w);
    }

    #[test]
    fn coulomb_pipelines(energy in 1.05..20.0_f64, theta in 0.05..PI, z in 1.0..100.0_f64) {
        let proc = coulomb_elastic(energy, theta, 1.0).unwrap();
        let msq = coulomb_msq(&proc, &coulomb_field(z, proc.coupling), &Tolerances::default()).unwrap();
        prop_assert!(msq.spread < 1e-10);
        let p = (energy * energy - 1.0).sqrt();
        let pair = coulomb_dcs(z, energy, p, theta, 0.3).unwrap();
        prop_assert!(pair.value() >= 0.0 && pair.spread < 1e-8);
    }

    #[test]
    fn moller_symmetry(s in 4.5..500.0_f64, theta in 0.05..1.5_f64) {
        let a = moller_dcs_cm(s, theta, 1.0, 0.01).unwrap();
        let b = moller_dcs_cm(s, PI - theta, 1.0, 0.01).unwrap();
        prop_assert!(a.spread < 1e-8 && b.spread < 1e-8);
        prop_assert!((a.value() - b.value()).abs() <= 1e-10 * a.value());
        let msq = moller_msq(&cm_elastic(s, theta, 1.0).unwrap(), &Tolerances::default()).unwrap();
        prop_assert!(msq.spread < 1e-8);
    }

    #[test]
    fn compton_pole_part_cancels(w in 1e-3..100.0_f64, theta in 0.0..PI, i in 0..2usize, f in 0..2usize) {
        let proc = compton_lab(w, theta, 1.0).unwrap();
        let bi = polarization_basis(&proc.partner_in.unwrap()).unwrap();
        let bf = polarization_basis(&proc.partner_out.unwrap()).unwrap();
        let parts = compton_msq(&proc, &bi[i], &bf[f], &fix_gauge_constant(1.0).unwrap(), &Tolerances::default()).unwrap();
        let aligned = compton_msq(&proc, &bi[1], &bf[1], &fix_gauge_constant(1.0).unwrap(), &Tolerances::default()).unwrap();
        let scale = aligned.seagull_sq.value();
        prop_assert!(parts.pole_sq.value() < 1e-10 * scale);
        prop_assert!(parts.cross.value().abs() < 1e-10 * scale);
    }

    #[test]
    fn compton_unpolarized_shape(w in 1e-3..20.0_f64, theta in 0.0..PI) {
        let alpha = 0.01;
        let v = compton_dcs_unpolarized(w, theta, 1.0, alpha).unwrap();
        let r = compton_omega_f(w, theta, 1.0) / w;
        let expected = alpha * alpha / 2.0 * r * r * (1.0 + theta.cos().powi(2));
        prop_assert!((v.value() - expected).abs() < 1e-8 * expected);
    }
}
