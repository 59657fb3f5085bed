use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::gamma::numeric::gamma_real;
use crate::rational::{int, ratio};
use crate::root_system::{build_custom, build_from_catalog, shipped_systems, Multiplicities, RootSystemDescription, RootType};

fn sys(name: &str) -> RestrictedRootSystem {
    build_from_catalog(name).unwrap()
}

fn a2(m: i64) -> RestrictedRootSystem {
    build_custom(&RootSystemDescription::classical("a2", RootType::A, 2, Multiplicities::single(m))).unwrap()
}

fn exact(v: &CValue) -> Rational {
    v.exact().cloned().unwrap_or_else(|| panic!("not exact: {v:?}"))
}

fn rank_one_weight(rs: &RestrictedRootSystem, l: Rational) -> Weight {
    rs.simple_roots()[0].scaled(&l)
}

fn lam(c: &[u64]) -> LambdaElement {
    LambdaElement::new(c.to_vec())
}

#[test]
fn gk_term_examples() {
    let rs = sys("hyperbolic-real-2");
    let alpha = &rs.positive_roots()[0];
    let t = gk_term(&rs, alpha, &rank_one_weight(&rs, int(1))).unwrap();
    match t.eval() {
        GammaValue::Finite(v) => assert!((v - 0.45015815807855303).abs() < 1e-15, "{v}"),
        other => panic!("{other:?}"),
    }

    let rs = sys("sl2c");
    let alpha = &rs.positive_roots()[0];
    let t = gk_term(&rs, alpha, &rank_one_weight(&rs, int(1))).unwrap();
    // 2^{-1} Γ(1) / (Γ(3/2) Γ(1)) = π^{-1/2}
    assert_eq!(t.simplify().closed_form(), Some((int(1), -1)));

    let t = gk_term(&rs, alpha, &Weight::zero(1)).unwrap();
    assert_eq!(t.eval(), GammaValue::Pole(1));
}

#[test]
fn gk_term_rejects_divisible_roots() {
    let rs = sys("complex-hyperbolic-2");
    let double = &rs.positive_roots()[1];
    assert!(double.divisible);
    assert!(matches!(gk_term(&rs, double, rs.rho()), Err(Error::Domain(_))));
    let z = rs.rho().to_complex();
    assert!(gk_term_complex(&rs, double, &z, &NumericOptions::default()).is_err());
}

#[test]
fn hyperbolic_real_2_at_alpha() {
    let rs = sys("hyperbolic-real-2");
    let alpha = rank_one_weight(&rs, int(1));
    let g = c_expr(&rs, &alpha).unwrap();
    assert_eq!(g.closed_form(), Some((int(2), -2)));
    match c_function(&rs, &alpha).unwrap() {
        CValue::RealFloat(v) => assert!((v - std::f64::consts::FRAC_2_PI).abs() < 1e-15),
        other => panic!("{other:?}"),
    }
    let prod = &kappa(&rs).unwrap() * &c_unnormalized(&rs, &alpha);
    assert_eq!(prod.simplify(), g);
    assert_eq!(c_function(&rs, &Weight::zero(1)).unwrap(), CValue::Pole(1));
}

#[test]
fn kappa_constants() {
    let rs = sys("hyperbolic-real-2");
    assert_eq!(kappa_reduced(&rs).unwrap().closed_form(), Some((int(1), -1)));
    // the product form carries the duplication constant 2^{m/2-1} π^{-1/2} per root
    let k = kappa(&rs).unwrap();
    assert_eq!(k.two_exponent(), &ratio(1, 2));
    assert_eq!(k.sqrt_pi_exponent(), 0);
    assert!(kappa_reduced(&sys("complex-hyperbolic-2")).is_err());

    for name in shipped_systems() {
        let rs = sys(&name);
        let k = kappa(&rs).unwrap();
        assert_eq!((&k * &c_unnormalized(&rs, rs.rho())).simplify().exact_value(), Some(int(1)), "{name}");
        if !rs.is_reduced() {
            continue;
        }
        let dup = rs
            .positive_roots()
            .iter()
            .map(|a| {
                let m = Rational::from_integer(a.multiplicity.into());
                &GammaExpr::power_of_two(m / int(2) - int(1)) * &GammaExpr::sqrt_pi_power(-1)
            })
            .fold(GammaExpr::one(), |acc, t| &acc * &t);
        assert_eq!((&k * &dup).simplify(), kappa_reduced(&rs).unwrap(), "{name}");
    }
}

#[test]
fn normalization_on_catalog() {
    for name in shipped_systems() {
        let rs = sys(&name);
        assert_eq!(c_function(&rs, rs.rho()).unwrap(), CValue::ExactRational(int(1)), "{name}");
        assert_eq!(radon_eigenvalue(&rs, &LambdaElement::zero(rs.rank())).unwrap(), CValue::ExactRational(int(1)));
    }
}

#[test]
fn complex_group_is_reciprocal() {
    let rs = sys("sl2c");
    for l in 1..=6 {
        let v = c_function(&rs, &rank_one_weight(&rs, int(l))).unwrap();
        assert_eq!(exact(&v), ratio(1, l));
    }
    assert_eq!(exact(&c_even_multiplicity(&rs, &rank_one_weight(&rs, int(3))).unwrap()), ratio(1, 3));
    assert_eq!(exact(&c_even_multiplicity(&rs, rs.rho()).unwrap()), int(1));
}

#[test]
fn reduced_formula_examples() {
    for n in 2..=8i64 {
        let rs = sys(&format!("hyperbolic-real-{n}"));
        for l in 1..=5i64 {
            let v = c_reduced(&rs, &rank_one_weight(&rs, int(l))).unwrap().as_f64().unwrap();
            let h = (n - 1) as f64 / 2.0;
            let want = gamma_real((n - 1) as f64) * gamma_real(l as f64)
                / (gamma_real(h) * gamma_real(l as f64 + h));
            assert!((v - want).abs() <= 1e-13 * want, "n={n} l={l}: {v} vs {want}");
        }
        assert_eq!(c_reduced(&rs, rs.rho()).unwrap(), CValue::ExactRational(int(1)));
    }
    assert!(matches!(c_reduced(&sys("complex-hyperbolic-2"), &Weight::zero(1)), Err(Error::Domain(_))));
}

#[test]
fn a2_first_fundamental_weight() {
    // ω₁ = 2ϖ₁ here, so ω₁ + ρ pairs to (3/2, 1/2, 2) when m = 1 and to (2, 1, 3) when m = 2
    let rs = a2(1);
    let w = &rs.fundamental_weights()[0] + rs.rho();
    assert_eq!(exact(&c_reduced(&rs, &w).unwrap()), ratio(1, 3));
    assert_eq!(exact(&c_function(&rs, &w).unwrap()), ratio(1, 3));

    let rs = a2(2);
    let w = &rs.fundamental_weights()[0] + rs.rho();
    assert_eq!(exact(&c_even_multiplicity(&rs, &w).unwrap()), ratio(1, 3));
    assert_eq!(exact(&c_function(&rs, &w).unwrap()), ratio(1, 3));
}

#[test]
fn frozen_table_values() {
    let rs = a2(1);
    for (c, p, q) in [([1, 0], 1, 3), ([0, 1], 1, 3), ([1, 1], 2, 15), ([2, 0], 1, 5), ([2, 1], 3, 35), ([3, 0], 1, 7)] {
        assert_eq!(exact(&radon_eigenvalue(&rs, &lam(&c)).unwrap()), ratio(p, q), "{c:?}");
    }
    let cases: [(&str, &[(u64, i64, i64)]); 3] = [
        ("complex-hyperbolic-2", &[(1, 3, 8), (2, 5, 24), (3, 35, 256)]),
        ("complex-hyperbolic-3", &[(1, 1, 3), (2, 5, 32)]),
        ("quaternionic-hyperbolic-2", &[(1, 3, 8), (2, 7, 40)]),
    ];
    for (name, rows) in cases {
        let rs = sys(name);
        for &(l, p, q) in rows {
            assert_eq!(exact(&radon_eigenvalue(&rs, &lam(&[l])).unwrap()), ratio(p, q), "{name} {l}");
        }
    }
}

#[test]
fn radon_examples() {
    assert_eq!(exact(&radon_eigenvalue(&sys("hyperbolic-real-2"), &lam(&[1])).unwrap()), ratio(1, 2));
    assert_eq!(exact(&radon_eigenvalue(&sys("hyperbolic-real-3"), &lam(&[2])).unwrap()), ratio(1, 3));
}

#[test]
fn hyperbolic_closed_form_examples() {
    assert_eq!(exact(&hyperbolic_closed_form(2, 1).unwrap()), ratio(1, 2));
    assert_eq!(exact(&hyperbolic_closed_form(4, 2).unwrap()), ratio(5, 16));
    for n in 2..10 {
        assert_eq!(exact(&hyperbolic_closed_form(n, 0).unwrap()), int(1));
    }
    for l in 0..8 {
        assert_eq!(exact(&hyperbolic_closed_form(3, l).unwrap()), ratio(1, l as i64 + 1));
    }
    assert!(hyperbolic_closed_form(1, 2).is_err());
}

#[test]
fn closed_form_matches_eigenvalues() {
    for n in 2..=8u64 {
        let rs = sys(&format!("hyperbolic-real-{n}"));
        for l in 0..=6u64 {
            let want = exact(&hyperbolic_closed_form(n, l).unwrap());
            for s in [Strategy::Auto, Strategy::General, Strategy::Reduced] {
                assert_eq!(exact(&radon_eigenvalue_with(&rs, &lam(&[l]), s).unwrap()), want, "n={n} l={l} {s:?}");
            }
        }
    }
}

#[test]
fn strategies_agree_on_catalog() {
    for name in shipped_systems() {
        let rs = sys(&name);
        let mut strategies = vec![Strategy::General];
        if rs.is_reduced() {
            strategies.push(Strategy::Reduced);
            if rs.has_even_multiplicities() {
                strategies.push(Strategy::EvenMultiplicity);
            }
        } else {
            assert!(radon_eigenvalue_with(&rs, &LambdaElement::zero(rs.rank()), Strategy::Reduced).is_err());
        }
        for l in LambdaElement::up_to_degree(rs.rank(), 3) {
            let auto = radon_eigenvalue(&rs, &l).unwrap();
            for &s in &strategies {
                assert_eq!(radon_eigenvalue_with(&rs, &l, s).unwrap(), auto, "{name} {l} {s:?}");
            }
        }
    }
}

#[test]
fn eigenvalues_are_rational_positive_and_bounded() {
    for name in shipped_systems() {
        let rs = sys(&name);
        for l in LambdaElement::up_to_degree(rs.rank(), 8) {
            let v = exact(&radon_eigenvalue(&rs, &l).unwrap());
            assert!(v > int(0), "{name} {l}");
            if l.is_zero() {
                assert_eq!(v, int(1));
            } else {
                assert!(v < int(1), "{name} {l}: {v}");
            }
        }
    }
}

#[test]
fn scale_invariance() {
    for name in ["slnr-son-3", "sopq-2-3", "supq-2-3", "spnr-un-2"] {
        let rs = sys(name);
        let scaled = rs.with_scaled_gram(&ratio(7, 3)).unwrap();
        for l in LambdaElement::up_to_degree(rs.rank(), 3) {
            assert_eq!(radon_eigenvalue(&rs, &l).unwrap(), radon_eigenvalue(&scaled, &l).unwrap(), "{name} {l}");
        }
    }
}

fn random_dominant(rs: &RestrictedRootSystem, rng: &mut StdRng) -> Weight {
    let mut w = Weight::zero(rs.ambient_dim());
    for omega in rs.fundamental_weights() {
        let t = ratio(rng.gen_range(1..=36), rng.gen_range(1..=12));
        w = &w + &omega.scaled(&t);
    }
    let max = indivisible_pairings(rs, &w).into_iter().max().unwrap();
    if max > int(10) {
        w = w.scaled(&(int(10) / max));
    }
    w
}

#[test]
fn path_agreement_on_random_points() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let reduced: Vec<_> = shipped_systems().into_iter().map(|n| sys(&n)).filter(|r| r.is_reduced()).collect();
    for i in 0..100 {
        let rs = &reduced[i % reduced.len()];
        let w = random_dominant(rs, &mut rng);
        assert!(indivisible_pairings(rs, &w).iter().all(|l| l > &int(0) && l <= &int(10)));
        let general = c_function(rs, &w).unwrap();
        let g = general.as_f64().unwrap();
        let r = c_reduced(rs, &w).unwrap().as_f64().unwrap();
        assert!((g - r).abs() <= 1e-12 * g.abs(), "{}: {g} vs {r}", rs.name());
        if rs.has_even_multiplicities() {
            let e = c_even_multiplicity(rs, &w).unwrap();
            assert_eq!(Some(exact(&e)), general.exact().cloned(), "{}", rs.name());
        }
    }
}

#[test]
fn complex_path_matches_exact_path() {
    for name in shipped_systems() {
        let rs = sys(&name);
        for l in LambdaElement::up_to_degree(rs.rank(), 2) {
            let w = &rs.weight_of(&l).unwrap() + rs.rho();
            let want = radon_eigenvalue(&rs, &l).unwrap().as_f64().unwrap();
            let z = c_function_complex(&rs, &w.to_complex()).unwrap().as_complex().unwrap();
            assert!((z.re - want).abs() < 1e-12 && z.im.abs() < 1e-12, "{name} {l}: {z} vs {want}");
        }
    }
}

#[test]
fn complex_arguments() {
    let at = |name: &str, z: Complex64| {
        let rs = sys(name);
        let w = rs.from_simple_coordinates_complex(&[z]).unwrap();
        c_function_complex(&rs, &w).unwrap().as_complex().unwrap()
    };
    let close = |a: Complex64, b: Complex64| (a - b).norm() < 1e-13;
    assert!(close(at("hyperbolic-real-2", Complex64::new(1.0, 1.0)), Complex64::new(0.454404029768527898, -0.221625239678151644)));
    assert!(close(at("hyperbolic-real-2", Complex64::new(2.0, 0.5)), Complex64::new(0.412677734210735644, -0.0568218383397939563)));
    assert!(close(at("complex-hyperbolic-2", Complex64::new(1.5, 0.7)), Complex64::new(1.08366738540282053, -0.737653233053219060)));
    let z = Complex64::new(2.0, 0.5);
    assert!(close(at("sl2c", z), 1.0 / z));
    // c(λ̄) is the conjugate of c(λ)
    assert!(close(at("sl2c", z.conj()), (1.0 / z).conj()));
    let rs = sys("hyperbolic-real-2");
    let zero = rs.from_simple_coordinates_complex(&[Complex64::new(0.0, 0.0)]).unwrap();
    assert_eq!(c_function_complex(&rs, &zero).unwrap(), CValue::Pole(1));
}

#[test]
fn even_path_reports_poles() {
    let rs = sys("sl2c");
    assert_eq!(c_even_multiplicity(&rs, &Weight::zero(1)).unwrap(), CValue::Pole(1));
    assert!(c_even_multiplicity(&sys("hyperbolic-real-2"), rs.rho()).is_err());
}

#[test]
fn display() {
    assert_eq!(CValue::ExactRational(ratio(3, 8)).to_string(), "3/8");
    assert_eq!(CValue::RealFloat(0.5).to_string(), "0.5");
    assert_eq!(CValue::ComplexFloat(Complex64::new(0.5, -0.25)).to_string(), "0.5-0.25i");
    assert_eq!(CValue::Pole(2).to_string(), "pole(order 2)");
}
