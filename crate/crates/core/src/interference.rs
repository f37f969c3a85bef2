//! Multi-slit interference patterns: coherent, decohered and with a
//! path-correlation term.
//!
//! Each slit contributes the Fraunhofer amplitude
//! `ψ_i(s) = sinc(k·w·s / 2L) · exp(i·k·c_i·s / L)` at screen position `s`.

use ndarray::Array2;
use num_complex::Complex64;

pub const MAX_SLITS: usize = 8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InterferenceError {
    #[error("slit count must be in 1..={MAX_SLITS}, got {0}")]
    SlitCount(usize),
    #[error("{0} slit centers given for {1} slits")]
    CenterCount(usize, usize),
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
    #[error("slit width {width} must be below the minimum slit spacing {spacing}")]
    WidthTooLarge { width: f64, spacing: f64 },
    #[error("slit index {index} out of range for {n} slits")]
    SlitIndex { index: usize, n: usize },
    #[error("correlation matrix is {0}x{1}, expected {2}x{2}")]
    Dimension(usize, usize, usize),
    #[error("correlation matrix: {0}")]
    Correlation(String),
    #[error("window contains {0} samples, need at least 3")]
    EmptyWindow(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterferenceConfig {
    slit_centers: Vec<f64>,
    slit_width: f64,
    wavenumber: f64,
    screen_distance: f64,
    screen_range: (f64, f64),
    sample_count: usize,
}

impl InterferenceConfig {
    pub fn new(
        slit_centers: Vec<f64>,
        slit_width: f64,
        wavenumber: f64,
        screen_distance: f64,
        screen_range: (f64, f64),
        sample_count: usize,
    ) -> Result<Self, InterferenceError> {
        let n = slit_centers.len();
        if !(1..=MAX_SLITS).contains(&n) {
            return Err(InterferenceError::SlitCount(n));
        }
        if slit_centers.iter().any(|c| !c.is_finite()) {
            return Err(InterferenceError::Parameter("slit centers must be finite"));
        }
        if !(slit_width > 0.0 && slit_width.is_finite()) {
            return Err(InterferenceError::Parameter("slit width must be positive"));
        }
        if !(wavenumber > 0.0 && wavenumber.is_finite()) {
            return Err(InterferenceError::Parameter("wavenumber must be positive"));
        }
        if !(screen_distance > 0.0 && screen_distance.is_finite()) {
            return Err(InterferenceError::Parameter("screen distance must be positive"));
        }
        if !(screen_range.0 < screen_range.1) {
            return Err(InterferenceError::Parameter("screen range must be increasing"));
        }
        if sample_count < 2 {
            return Err(InterferenceError::Parameter("at least 2 samples are required"));
        }
        let mut sorted = slit_centers.clone();
        sorted.sort_by(f64::total_cmp);
        if let Some(spacing) = sorted.windows(2).map(|w| w[1] - w[0]).reduce(f64::min) {
            if slit_width >= spacing {
                return Err(InterferenceError::WidthTooLarge {
                    width: slit_width,
                    spacing,
                });
            }
        }
        Ok(Self {
            slit_centers,
            slit_width,
            wavenumber,
            screen_distance,
            screen_range,
            sample_count,
        })
    }

    /// `n` slits spaced `d` apart, centered on the axis.
    pub fn uniform(
        n: usize,
        spacing: f64,
        slit_width: f64,
        wavenumber: f64,
        screen_distance: f64,
        screen_range: (f64, f64),
        sample_count: usize,
    ) -> Result<Self, InterferenceError> {
        if !(1..=MAX_SLITS).contains(&n) {
            return Err(InterferenceError::SlitCount(n));
        }
        let mid = (n as f64 - 1.0) / 2.0;
        let centers = (0..n).map(|i| (i as f64 - mid) * spacing).collect();
        Self::new(centers, slit_width, wavenumber, screen_distance, screen_range, sample_count)
    }

    /// Fixture geometry: λ = 1 (k = 2π), d = 5, w = 1, L = 100, screen
    /// `[-30, 30]` with 1201 samples.
    pub fn reference(n: usize) -> Result<Self, InterferenceError> {
        Self::uniform(n, 5.0, 1.0, std::f64::consts::TAU, 100.0, (-30.0, 30.0), 1201)
    }

    pub fn n_slits(&self) -> usize {
        self.slit_centers.len()
    }

    pub fn slit_centers(&self) -> &[f64] {
        &self.slit_centers
    }

    pub fn slit_width(&self) -> f64 {
        self.slit_width
    }

    pub fn wavenumber(&self) -> f64 {
        self.wavenumber
    }

    pub fn screen_distance(&self) -> f64 {
        self.screen_distance
    }

    /// Uniformly spaced sample positions over the screen range.
    pub fn positions(&self) -> Vec<f64> {
        let (lo, hi) = self.screen_range;
        let last = (self.sample_count - 1) as f64;
        (0..self.sample_count)
            .map(|k| if k + 1 == self.sample_count { hi } else { lo + (hi - lo) * k as f64 / last })
            .collect()
    }

    fn amplitude(&self, center: f64, s: f64) -> Complex64 {
        let u = self.wavenumber * self.slit_width * s / (2.0 * self.screen_distance);
        let phase = self.wavenumber * center * s / self.screen_distance;
        Complex64::from_polar(sinc(u), phase)
    }

    fn amplitudes(&self, s: f64) -> Vec<Complex64> {
        self.slit_centers.iter().map(|c| self.amplitude(*c, s)).collect()
    }
}

pub fn sinc(u: f64) -> f64 {
    if u == 0.0 {
        1.0
    } else {
        u.sin() / u
    }
}

/// Amplitude of slit `index` (0-based) at screen position `s`.
pub fn slit_amplitude(cfg: &InterferenceConfig, index: usize, s: f64) -> Result<Complex64, InterferenceError> {
    let center = cfg.slit_centers.get(index).ok_or(InterferenceError::SlitIndex {
        index,
        n: cfg.n_slits(),
    })?;
    Ok(cfg.amplitude(*center, s))
}

/// Sampled screen intensities, positions strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct Pattern {
    pub samples: Vec<(f64, f64)>,
}

impl Pattern {
    fn sample<F: Fn(f64) -> f64>(cfg: &InterferenceConfig, f: F) -> Self {
        Self {
            samples: cfg.positions().into_iter().map(|s| (s, f(s))).collect(),
        }
    }

    pub fn intensities(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|(_, p)| *p)
    }

    fn window(&self, window: (f64, f64)) -> Vec<f64> {
        self.samples
            .iter()
            .filter(|(s, _)| *s >= window.0 && *s <= window.1)
            .map(|(_, p)| *p)
            .collect()
    }

    /// `s,intensity` CSV with 15 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,intensity\n");
        for (s, p) in &self.samples {
            out.push_str(&format!("{s:.14e},{p:.14e}\n"));
        }
        out
    }
}

/// `P(s) = |Σ ψ_i(s)|²`.
pub fn pattern(cfg: &InterferenceConfig) -> Pattern {
    Pattern::sample(cfg, |s| cfg.amplitudes(s).into_iter().sum::<Complex64>().norm_sqr())
}

/// Cross terms damped by `e^{-γ}`:
/// `P_γ = Σ|ψ_i|² + e^{-γ} Σ_{i≠j} ψ_i ψ_j*`, evaluated as the convex
/// combination `e^{-γ}|Σψ|² + (1 − e^{-γ}) Σ|ψ_i|²` so that γ = 0 reproduces
/// [`pattern`] bit for bit.
pub fn decohered_pattern(cfg: &InterferenceConfig, gamma: f64) -> Result<Pattern, InterferenceError> {
    if !(gamma >= 0.0) {
        return Err(InterferenceError::Parameter("gamma must be non-negative"));
    }
    let keep = (-gamma).exp();
    let lose = -(-gamma).exp_m1();
    Ok(Pattern::sample(cfg, |s| {
        let amps = cfg.amplitudes(s);
        let coherent = amps.iter().sum::<Complex64>().norm_sqr();
        let incoherent: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        keep * coherent + lose * incoherent
    }))
}

/// Path-correlation matrix: zero diagonal, `C_ij = conj(C_ji)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationMatrix {
    c: Array2<Complex64>,
}

impl CorrelationMatrix {
    pub const SYMMETRY_TOL: f64 = 1e-12;

    pub fn new(c: Array2<Complex64>) -> Result<Self, InterferenceError> {
        let (r, k) = c.dim();
        if r != k {
            return Err(InterferenceError::Dimension(r, k, r));
        }
        for i in 0..r {
            if c[[i, i]].norm() != 0.0 {
                return Err(InterferenceError::Correlation(format!("diagonal entry ({i}, {i}) must be zero")));
            }
            for j in i + 1..r {
                if (c[[i, j]] - c[[j, i]].conj()).norm() > Self::SYMMETRY_TOL {
                    return Err(InterferenceError::Correlation(format!(
                        "entries ({i}, {j}) and ({j}, {i}) are not conjugate"
                    )));
                }
            }
        }
        Ok(Self { c })
    }

    pub fn zeros(n: usize) -> Self {
        Self { c: Array2::zeros((n, n)) }
    }

    /// Builds from upper-triangle entries `(i, j, value)` with `i < j`
    /// (0-based); the lower triangle is filled with conjugates.
    pub fn from_upper(n: usize, entries: &[(usize, usize, Complex64)]) -> Result<Self, InterferenceError> {
        let mut c = Array2::zeros((n, n));
        for &(i, j, v) in entries {
            if i >= j || j >= n {
                return Err(InterferenceError::Correlation(format!("entry ({i}, {j}) is not strictly upper-triangular for n = {n}")));
            }
            c[[i, j]] = v;
            c[[j, i]] = v.conj();
        }
        Self::new(c)
    }

    pub fn dim(&self) -> usize {
        self.c.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.c[[i, j]]
    }
}

/// `|Σ_i ψ_i + Σ_{i,j} C_ij ψ_i ψ_j|²`, evaluated literally. The quadratic
/// term makes the result depend on the global phase of the amplitudes and it
/// is not bounded by any normalization.
pub fn entangled_pattern(cfg: &InterferenceConfig, c: &CorrelationMatrix) -> Result<Pattern, InterferenceError> {
    let n = cfg.n_slits();
    if c.dim() != n {
        return Err(InterferenceError::Dimension(c.dim(), c.dim(), n));
    }
    Ok(Pattern::sample(cfg, |s| {
        let amps = cfg.amplitudes(s);
        let mut total: Complex64 = amps.iter().sum();
        for i in 0..n {
            for j in 0..n {
                total += c.get(i, j) * amps[i] * amps[j];
            }
        }
        total.norm_sqr()
    }))
}

/// `(P_max − P_min)/(P_max + P_min)` over samples with `s` in `window`
/// (inclusive); 0 when the window is dark.
pub fn fringe_visibility(p: &Pattern, window: (f64, f64)) -> Result<f64, InterferenceError> {
    let w = p.window(window);
    if w.len() < 3 {
        return Err(InterferenceError::EmptyWindow(w.len()));
    }
    let max = w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = w.iter().copied().fold(f64::INFINITY, f64::min);
    if max <= 0.0 {
        return Ok(0.0);
    }
    Ok((max - min) / (max + min))
}

/// Number of interior local maxima among the samples in `window`.
pub fn local_maxima(p: &Pattern, window: (f64, f64)) -> usize {
    let w = p.window(window);
    w.windows(3).filter(|t| t[1] > t[0] && t[1] >= t[2]).count()
}
