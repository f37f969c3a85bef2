use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use qramsey::interference::{decohered_pattern, entangled_pattern, fringe_visibility, local_maxima, pattern, CorrelationMatrix, InterferenceConfig};

/// Direct evaluation from the slit geometry, 0-based slit `i` at
/// `(i − (n−1)/2)·d`.
fn psi(n: usize, i: usize, s: f64, phase: f64) -> Complex64 {
    let (k, w, d, l) = (TAU, 1.0, 5.0, 100.0);
    let center = (i as f64 - (n as f64 - 1.0) / 2.0) * d;
    let u = k * w * s / (2.0 * l);
    let env = if u == 0.0 { 1.0 } else { u.sin() / u };
    Complex64::from_polar(env, k * center * s / l + phase)
}

fn entangled_oracle(n: usize, c: &[Vec<Complex64>], s: f64, phase: f64) -> f64 {
    let a: Vec<Complex64> = (0..n).map(|i| psi(n, i, s, phase)).collect();
    let mut total: Complex64 = a.iter().sum();
    for i in 0..n {
        for j in 0..n {
            total += c[i][j] * a[i] * a[j];
        }
    }
    total.norm_sqr()
}

#[test]
fn entangled_pattern_matches_oracle_and_is_phase_sensitive() {
    let n = 3;
    let c01 = Complex64::new(0.2, 0.1);
    let c12 = Complex64::new(-0.05, 0.3);
    let mut table = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    table[0][1] = c01;
    table[1][0] = c01.conj();
    table[1][2] = c12;
    table[2][1] = c12.conj();
    let cm = CorrelationMatrix::from_upper(n, &[(0, 1, c01), (1, 2, c12)]).unwrap();
    let cfg = InterferenceConfig::uniform(n, 5.0, 1.0, TAU, 100.0, (-30.0, 30.0), 101).unwrap();
    let p = entangled_pattern(&cfg, &cm).unwrap();
    assert_eq!(p.samples.len(), 101);
    let mut moved = 0.0f64;
    for &(s, got) in &p.samples {
        let want = entangled_oracle(n, &table, s, 0.0);
        assert!((got - want).abs() <= 1e-12 * want.max(1.0), "s = {s}: {got} vs {want}");
        moved = moved.max((entangled_oracle(n, &table, s, FRAC_PI_2) - want).abs());
    }
    assert!(moved > 1e-3, "global phase should change the result, moved {moved}");
}

#[test]
fn zero_correlation_reduces_to_coherent_pattern() {
    let cfg = InterferenceConfig::reference(4).unwrap();
    let p = entangled_pattern(&cfg, &CorrelationMatrix::zeros(4)).unwrap();
    assert_eq!(p, pattern(&cfg));
}

#[test]
fn full_decoherence_is_sum_of_single_slits() {
    let cfg = InterferenceConfig::reference(3).unwrap();
    let p = decohered_pattern(&cfg, 60.0).unwrap();
    for &(s, got) in &p.samples {
        let want: f64 = (0..3).map(|i| psi(3, i, s, 0.0).norm_sqr()).sum();
        assert!((got - want).abs() < 1e-12, "s = {s}");
    }
}

#[test]
fn central_maxima_do_not_decrease_with_slit_count() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| local_maxima(&pattern(&InterferenceConfig::reference(n).unwrap()), (-30.0, 30.0)))
        .collect();
    assert!(counts.windows(2).all(|w| w[1] >= w[0]), "{counts:?}");
}

#[test]
fn visibility_falls_with_gamma() {
    let cfg = InterferenceConfig::reference(2).unwrap();
    let mut last = f64::INFINITY;
    for gamma in [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let v = fringe_visibility(&decohered_pattern(&cfg, gamma).unwrap(), (-30.0, 30.0)).unwrap();
        assert!(v < last, "gamma {gamma}: {v} >= {last}");
        last = v;
    }
}

#[test]
fn rejects_bad_correlations() {
    let mut c = ndarray::Array2::<Complex64>::zeros((2, 2));
    c[[0, 1]] = Complex64::new(1.0, 1.0);
    c[[1, 0]] = Complex64::new(1.0, 1.0);
    assert!(CorrelationMatrix::new(c).is_err());
    let cfg = InterferenceConfig::reference(3).unwrap();
    assert!(entangled_pattern(&cfg, &CorrelationMatrix::zeros(2)).is_err());
}
