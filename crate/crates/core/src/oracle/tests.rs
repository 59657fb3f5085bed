use nalgebra::{DVector, Matrix2};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::cfunction::{c_function_complex, hyperbolic_closed_form, radon_eigenvalue};
use crate::rational;
use crate::root_system::LambdaElement;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn group_data_matches_catalog() {
    for g in [RankOneGroup::SL2R, RankOneGroup::SL2C] {
        let rs = g.root_system();
        assert_eq!(rs.positive_roots()[0].multiplicity as usize, g.ubar_dim());
        assert_eq!(RankOneGroup::for_system(&rs), Some(g));
        assert_eq!(rational::to_f64(&rs.rho_pairings()[0]), g.rho_coeff());
    }
    let h3 = build_from_catalog("hyperbolic-real-3").unwrap();
    assert_eq!(RankOneGroup::for_system(&h3), Some(RankOneGroup::SL2C));
    assert_eq!(RankOneGroup::for_system(&build_from_catalog("hyperbolic-real-4").unwrap()), None);
    assert_eq!(RankOneGroup::for_system(&build_from_catalog("slnr-son-3").unwrap()), None);
}

#[test]
fn iwasawa_examples() {
    let id = real_matrix(&Matrix2::identity());
    assert_eq!(iwasawa_h(&id, RankOneGroup::SL2R).unwrap(), 0.0);
    let h = iwasawa_h(&ubar(c(1.0, 0.0)), RankOneGroup::SL2R).unwrap();
    assert!((h - 2f64.ln()).abs() < 1e-15);
    let e = std::f64::consts::E;
    let a = real_matrix(&Matrix2::new(e, 0.0, 0.0, 1.0 / e));
    assert!((iwasawa_h(&a, RankOneGroup::SL2R).unwrap() - 2.0).abs() < 1e-15);
}

#[test]
fn iwasawa_rejects_bad_input() {
    let g = real_matrix(&Matrix2::new(2.0, 0.0, 0.0, 1.0));
    assert!(matches!(iwasawa(&g, RankOneGroup::SL2R), Err(Error::Domain(_))));
    let singular = real_matrix(&Matrix2::new(1.0, 2.0, 2.0, 4.0));
    assert!(iwasawa(&singular, RankOneGroup::SL2R).is_err());
    assert!(iwasawa(&ubar(c(0.0, 1.0)), RankOneGroup::SL2R).is_err());
    assert!(iwasawa(&ubar(c(0.0, 1.0)), RankOneGroup::SL2C).is_ok());
}

#[test]
fn iwasawa_reconstructs_random_elements() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let x = c(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
        let d = iwasawa(&ubar(x), RankOneGroup::SL2C).unwrap();
        let err = (d.reconstruct() - ubar(x)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(err < 1e-12, "{x}: {err}");
        assert!((d.alpha_h - (1.0 + x.norm_sqr()).ln()).abs() < 1e-12);
        assert!((d.k.adjoint() * d.k - CMatrix2::identity()).norm() < 1e-12);
        assert!((d.k.determinant() - 1.0).norm() < 1e-12);
        assert!(d.u[(1, 0)].norm() == 0.0 && d.u[(0, 0)] == c(1.0, 0.0));

        let xr = c(x.re, 0.0);
        let d = iwasawa(&ubar(xr), RankOneGroup::SL2R).unwrap();
        let err = (d.reconstruct() - ubar(xr)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(err < 1e-12);
        assert!((d.alpha_h - (1.0 + x.re * x.re).ln()).abs() < 1e-12);
    }
}

#[test]
fn quadrature_spec_validation() {
    let q = QuadratureSpec::default();
    assert!(q.validate().is_ok());
    assert!(q.with_nodes(63).validate().is_err());
    assert!(q.with_nodes(64).validate().is_ok());
    assert!(q.with_target(1e-11).validate().is_err());
    assert!(q.with_target(f64::NAN).validate().is_err());
}

#[test]
fn cbar_examples() {
    let q = QuadratureSpec::default();
    let v = cbar_integral(RankOneGroup::SL2R, c(0.5, 0.0), &q).unwrap();
    assert!((v.value - 1.0).norm() <= q.target);
    let v = cbar_integral(RankOneGroup::SL2R, c(1.0, 0.0), &q).unwrap();
    assert!((v.value - 2.0 / std::f64::consts::PI).norm() < 1e-9, "{:?}", v);
    let v = cbar_integral(RankOneGroup::SL2C, c(2.0, 0.0), &q).unwrap();
    assert!((v.value - 0.5).norm() < 1e-9);
    let v = cbar_integral(RankOneGroup::SL2C, c(1.0, 0.0), &q).unwrap();
    assert!((v.value - 1.0).norm() <= q.target);
}

#[test]
fn cbar_domain_and_budget_errors() {
    let q = QuadratureSpec::default();
    assert!(matches!(cbar_integral(RankOneGroup::SL2R, c(0.0, 1.0), &q), Err(Error::Domain(_))));
    assert!(matches!(cbar_integral(RankOneGroup::SL2C, c(-1.0, 0.0), &q), Err(Error::Domain(_))));
    match cbar_integral(RankOneGroup::SL2R, c(0.05, 3.0), &q.with_nodes(64)) {
        Err(Error::Quadrature { achieved, nodes, .. }) => assert!(achieved > 0.0 && nodes >= 64),
        other => panic!("{other:?}"),
    }
}

#[test]
fn cbar_matches_product_formula() {
    let q = QuadratureSpec::default();
    for g in [RankOneGroup::SL2R, RankOneGroup::SL2C] {
        let rs = g.root_system();
        for z in [c(0.75, 0.0), c(1.0, 0.0), c(1.5, 0.0), c(2.0, 0.0), c(2.5, 0.0), c(1.0, 1.0), c(2.0, 0.5)] {
            let got = cbar_integral(g, z, &q).unwrap().value;
            let w = rs.from_simple_coordinates_complex(&[z]).unwrap();
            let want = c_function_complex(&rs, &w).unwrap().as_complex().unwrap();
            assert!((got - want).norm() <= 1e-8, "{g} {z}: {got} vs {want}");
        }
    }
}

#[test]
fn cbar_is_deterministic() {
    let q = QuadratureSpec::default();
    let a = cbar_integral(RankOneGroup::SL2C, c(1.0, 1.0), &q).unwrap();
    let b = cbar_integral(RankOneGroup::SL2C, c(1.0, 1.0), &q).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rep_examples() {
    let r = build_rep(0).unwrap();
    assert_eq!(r.dim(), 1);
    assert_eq!(r.phi_k, r.phi_s);
    assert!((cos2_alpha(&r) - 1.0).abs() < 1e-15);

    let r = build_rep(1).unwrap();
    assert_eq!(r.dim(), 3);
    // φ^S = x₂₂, φ^K = (x₁₁ + x₂₂)/2
    assert!((&r.phi_s - DVector::from_row_slice(&[0.0, 0.0, 1.0])).norm() < 1e-12);
    assert!((&r.phi_k - DVector::from_row_slice(&[0.5, 0.0, 0.5])).norm() < 1e-12);
    assert!((cos2_alpha(&r) - 0.5).abs() < 1e-12);

    let r = build_rep(3).unwrap();
    assert!((cos2_alpha(&r) - 5.0 / 16.0).abs() < 1e-12);
}

#[test]
fn rep_structure() {
    let mut rng = StdRng::seed_from_u64(11);
    for l in 0..=6 {
        let r = build_rep(l).unwrap();
        assert_eq!(r.dim() as u64, 2 * l + 1);
        let eig = r.gram.clone().symmetric_eigen().eigenvalues;
        assert!(eig.min() > 0.0);
        assert!((&r.gram - r.gram.transpose()).norm() == 0.0);
        for _ in 0..5 {
            let theta = rng.gen_range(-3.0..3.0);
            let s = rng.gen_range(-1.0..1.0);
            assert!(r.orthogonality_defect(theta) < 1e-12, "l={l}");
            assert!(r.self_adjoint_defect(s) < 1e-12, "l={l}");
            assert!(r.rotation_residual(&r.phi_k, theta) < 1e-12);
        }
        assert!((r.eval.dot(&r.phi_k) - 1.0).abs() < 1e-14);
        assert!((r.eval.dot(&r.phi_s) - 1.0).abs() < 1e-14);
    }
}

#[test]
fn action_is_a_homomorphism() {
    let g = Matrix2::new(2.0, 1.0, 3.0, 2.0);
    let h = Matrix2::new(1.0, -0.5, 0.0, 1.0);
    let r = build_rep(3).unwrap();
    let lhs = r.action(&(g * h));
    let rhs = r.action(&g) * r.action(&h);
    assert!((lhs - rhs).norm() < 1e-9);
    // (g·φ)(x) = φ(g⁻¹ x g⁻ᵀ)
    let x = Matrix2::new(2.0, 0.3, 0.3, 0.7);
    let gi = g.try_inverse().unwrap();
    let moved = r.action(&g) * &r.phi_k;
    assert!((r.evaluate(&moved, &x) - r.evaluate(&r.phi_k, &(gi * x * gi.transpose()))).abs() < 1e-9);
}

#[test]
fn main_theorem_on_sl2r() {
    let rs = RankOneGroup::SL2R.root_system();
    for l in 0..=5u64 {
        let want = radon_eigenvalue(&rs, &LambdaElement::new(vec![l])).unwrap().as_f64().unwrap();
        let got = cos2_alpha(&build_rep(l).unwrap());
        assert!((got - want).abs() <= 1e-10, "l={l}: {got} vs {want}");
        let closed = hyperbolic_closed_form(2, l).unwrap().as_f64().unwrap();
        assert!((got - closed).abs() <= 1e-10);
    }
}

#[test]
fn asymptotics_match_projection() {
    for l in 0..=4 {
        let r = build_rep(l).unwrap();
        let a = asymptotic_coefficient(&r, &default_t_grid()).unwrap();
        assert!((a - cos2_alpha(&r)).abs() <= 1e-6, "l={l}");
    }
    let r = build_rep(2).unwrap();
    assert!(matches!(asymptotic_coefficient(&r, &[0.1, 0.2]), Err(Error::NotConverged(_))));
    assert!(matches!(asymptotic_coefficient(&r, &[2.0, 1.0]), Err(Error::Domain(_))));
}
