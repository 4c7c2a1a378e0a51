use core::f64::consts::PI;

use asmval_core::special::{
    euler_maclaurin_cutoff, hurwitz_zeta, hurwitz_zeta_with_cutoff, log_gamma_real, riemann_zeta,
};
use asmval_core::ComplexValue;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

fn random_s(rng: &mut StdRng, im_max: f64) -> ComplexValue {
    ComplexValue::new(rng.gen_range(-0.5..3.0), rng.gen_range(-im_max..im_max))
}

#[test]
fn conjugate_symmetry() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let s = random_s(&mut rng, 500.0);
        for alpha in [1.0 / 3.0, 2.0 / 3.0, 1.0] {
            let a = hurwitz_zeta(s.conj(), alpha).unwrap();
            let b = hurwitz_zeta(s, alpha).unwrap().conj();
            assert!(rel(a, b) < 1e-10, "s={s} alpha={alpha}");
        }
    }
}

#[test]
fn multiplication_theorem() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..100 {
        let s = random_s(&mut rng, 500.0);
        let z = riemann_zeta(s).unwrap();
        let lhs = hurwitz_zeta(s, 1.0 / 3.0).unwrap() + hurwitz_zeta(s, 2.0 / 3.0).unwrap() + z;
        let rhs = (s * 3f64.ln()).exp() * z;
        assert!(rel(lhs, rhs) < 1e-10, "s={s}");
    }
}

#[test]
fn shift_periodicity_is_exact() {
    let s = ComplexValue::new(0.7, 123.4);
    for alpha in [0.25, 0.375, 0.5, 0.875] {
        assert_eq!(
            hurwitz_zeta(s, alpha).unwrap(),
            hurwitz_zeta(s, alpha + 1.0).unwrap()
        );
        assert_eq!(
            hurwitz_zeta(s, alpha).unwrap(),
            hurwitz_zeta(s, alpha - 3.0).unwrap()
        );
    }
    // 1/3 + 1 is rounded, so only the reduced shift differs in the last bit
    let third = hurwitz_zeta(s, 1.0 / 3.0).unwrap();
    assert!(rel(hurwitz_zeta(s, 4.0 / 3.0).unwrap(), third) < 1e-13);
    assert_eq!(hurwitz_zeta(s, 0.0).unwrap(), riemann_zeta(s).unwrap());
}

#[test]
fn agrees_with_direct_summation() {
    for alpha in [1.0 / 3.0, 2.0 / 3.0, 1.0] {
        for im in [0.0, 3.0, 25.0] {
            let s = ComplexValue::new(2.0, im);
            let mut direct = ComplexValue::new(0.0, 0.0);
            for n in (0..1_000_000u64).rev() {
                direct += (-s * (n as f64 + alpha).ln()).exp();
            }
            let tail_start = 1_000_000.0 + alpha - 0.5;
            direct += (-(s - 1.0) * f64::ln(tail_start)).exp() / (s - 1.0);
            let em = hurwitz_zeta(s, alpha).unwrap();
            assert!(rel(em, direct) < 1e-9, "alpha={alpha} im={im}");
        }
    }
}

#[test]
fn doubling_the_cutoff_changes_little() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..50 {
        let s = random_s(&mut rng, 100.0);
        let alpha = rng.gen_range(0.05..1.0);
        let m = euler_maclaurin_cutoff(s);
        let a = hurwitz_zeta_with_cutoff(s, alpha, m).unwrap();
        let b = hurwitz_zeta_with_cutoff(s, alpha, 2 * m).unwrap();
        assert!(rel(a, b) < 1e-12, "s={s} alpha={alpha}");
    }
}

#[test]
fn zeta_at_zero_is_linear_in_shift() {
    for i in 1..=10 {
        let alpha = i as f64 / 10.0;
        let z = hurwitz_zeta(ComplexValue::new(0.0, 0.0), alpha).unwrap();
        assert!(
            (z.re - (0.5 - alpha)).abs() < 1e-12 && z.im == 0.0,
            "alpha={alpha}"
        );
    }
}

#[test]
fn gamma_reflection_at_thirds() {
    let lhs = log_gamma_real(1.0 / 3.0).unwrap() + log_gamma_real(2.0 / 3.0).unwrap();
    assert!((lhs - (2.0 * PI / 3f64.sqrt()).ln()).abs() < 1e-12);
}
