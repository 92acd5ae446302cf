//! Far-user message statistics: the T-round accumulated-SINR CDF series and
//! its closed window-average form.
//!
//! The series alternates with weights spanning eleven orders of magnitude, so
//! its value is a tiny residue of cancelling terms (condition numbers up to
//! ~5e10 were measured in the regimes of interest). Coefficient tables are
//! plain `f64` — the value is insensitive to their rounding — but every
//! arithmetic step downstream of them runs in double-double precision, which
//! keeps the evaluated result accurate to full `f64` resolution.

use crate::analytic::kernel::Kernel;
use crate::analytic::series::{chebyshev_nodes, enumerate_compositions};
use crate::analytic::{BlerEstimate, CdfApprox, Method, QuadratureConfig};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::model::{linearize, CodingConfig, SystemConfig, User};
use crate::real::Real;

/// Below this, the Ψ denominator is too close to its pole to evaluate.
const PSI_DENOM_FLOOR: f64 = 1e-12;

/// Characteristic-approximation factor at node `a`:
/// Ψ(a) = √(1−a²)/D² · exp(−2α₂/(μρα₁D)) with D = 2α₂ − α₁κ(a+1).
pub fn psi<R: Real>(node: R, rho: R, alpha1: R, mu: R) -> Result<R> {
    if !(node > -R::one() && node < R::one()) {
        return Err(Error::domain(
            "psi",
            format!("node must lie in (-1, 1), got {node}"),
        ));
    }
    let alpha2 = R::one() - alpha1;
    let kappa = alpha2 / alpha1;
    let two = R::of(2.0);
    let d = two * alpha2 - alpha1 * kappa * (node + R::one());
    if d < R::of(PSI_DENOM_FLOOR) {
        return Err(Error::domain(
            "psi",
            format!("denominator {d} below numerical floor {PSI_DENOM_FLOOR}"),
        ));
    }
    let num = (R::one() - node * node).sqrt();
    let expo = -two * alpha2 / (mu * rho * alpha1 * d);
    Ok(num / (d * d) * expo.exp())
}

/// Decay rate S_{k,j} = k · b_j of the k-th inversion term for a composition:
/// b_j = (κ ln2 / 2) Σ_n p_n (a_n + 1).
pub fn s_kn<R: Real>(k: usize, parts: &[u32], nodes: &[R], kappa: R) -> Result<R> {
    if k < 1 {
        return Err(Error::domain("s_kn", "term index must be at least 1"));
    }
    if parts.len() != nodes.len() {
        return Err(Error::domain(
            "s_kn",
            format!(
                "composition has {} parts but {} nodes were supplied",
                parts.len(),
                nodes.len()
            ),
        ));
    }
    let mut base = R::zero();
    for (&p, &a) in parts.iter().zip(nodes.iter()) {
        base += R::of_usize(p as usize) * (a + R::one());
    }
    let half_ln2 = R::of(0.5 * std::f64::consts::LN_2);
    Ok(R::of_usize(k) * kappa * half_ln2 * base)
}

/// Antiderivative kernel Ω(x, y) = x e^{−y/x} − (x + y) E1(y/x), for
/// x, y > 0; dΩ/dx = −E1(y/x) and Ω(0⁺, y) = 0.
pub fn omega_fn<R: Real>(x: R, y: R) -> Result<R> {
    if !(x > R::zero()) || !(y > R::zero()) {
        return Err(Error::domain(
            "omega_fn",
            format!("arguments must be positive, got x={x}, y={y}"),
        ));
    }
    let xf = x.as_f64();
    let yf = y.as_f64();
    let u = Dd::from_f64(yf).div_f64(xf);
    let e = u.neg().exp();
    Ok(R::of(omega_core(xf, Dd::from_f64(yf), u, e).to_f64()))
}

/// Ω with the argument's exponential supplied externally so series loops can
/// reuse running powers.
fn omega_core(x: f64, y: Dd, u: Dd, exp_neg_u: Dd) -> Dd {
    let e1 = Dd::e1_with_exp(u, exp_neg_u);
    exp_neg_u.mul_f64(x).sub(y.add_f64(x).mul(e1))
}

/// One composition's flattened coefficients: amplitude A_j (multinomial
/// weight, Ψ products, and the c^T prefactor folded together), decay base
/// b_j, and ln b_j precomputed for the window path.
#[derive(Debug, Clone, Copy)]
struct FarCoeff {
    a: f64,
    b: f64,
    ln_b: Dd,
}

/// Precomputed far-user series for one (ρ, α₁, μ, T) point: build once, then
/// evaluate the CDF or its window average at any argument.
#[derive(Debug, Clone)]
pub struct FarSeries {
    coeffs: Vec<FarCoeff>,
    kernel: Kernel,
    t_kappa: f64,
}

impl FarSeries {
    /// Build for a system configuration, decoding the far message at `decoder`'s
    /// channel statistics.
    pub fn new<R: Real>(
        config: &SystemConfig<R>,
        quad: &QuadratureConfig,
        decoder: User,
    ) -> Result<Self> {
        Self::from_parts(
            config.rho.as_f64(),
            config.alpha1.as_f64(),
            config.mu(decoder).as_f64(),
            config.t_rounds,
            quad,
        )
    }

    /// Build from primitive parameters. `alpha1` may range over (0, 1) here:
    /// the power-allocation solver probes the full bracket, beyond the
    /// physically configured α₁ < 1/2.
    pub fn from_parts(
        rho: f64,
        alpha1: f64,
        mu: f64,
        t_rounds: u32,
        quad: &QuadratureConfig,
    ) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::Config(format!("rho must be positive, got {rho}")));
        }
        if !(alpha1 > 0.0 && alpha1 < 1.0) {
            return Err(Error::Config(format!(
                "alpha1 must lie in (0, 1), got {alpha1}"
            )));
        }
        if !(mu > 0.0 && mu <= 1.0) {
            return Err(Error::Config(format!("mu must lie in (0, 1], got {mu}")));
        }
        if t_rounds < 1 {
            return Err(Error::Config("t_rounds must be at least 1".into()));
        }
        let n = quad.n_nodes;
        let alpha2 = 1.0 - alpha1;
        let kappa = alpha2 / alpha1;
        let mur = mu * rho;
        let nodes: Vec<f64> = chebyshev_nodes(n)?;
        let mut ln_psi = Vec::with_capacity(n);
        let mut psi_exp = Vec::with_capacity(n);
        let mut node_s = Vec::with_capacity(n);
        for &a in &nodes {
            let d = 2.0 * alpha2 - alpha1 * kappa * (a + 1.0);
            if d < PSI_DENOM_FLOOR {
                return Err(Error::domain(
                    "psi",
                    format!("denominator {d} below numerical floor {PSI_DENOM_FLOOR}"),
                ));
            }
            ln_psi.push(0.5 * (1.0 - a * a).ln() - 2.0 * d.ln());
            psi_exp.push(-2.0 * alpha2 / (mur * alpha1 * d));
            node_s.push(a + 1.0);
        }
        let ln_c = (2.0 * std::f64::consts::PI * kappa * alpha2 / (n as f64 * mur)).ln();
        let c_exp = (mur * alpha1).recip();
        let tf = t_rounds as f64;
        let half_kln2 = 0.5 * kappa * std::f64::consts::LN_2;
        let comps = enumerate_compositions(t_rounds, n)?;
        let mut coeffs = Vec::with_capacity(comps.len());
        for comp in &comps {
            // The c^T growth exponent pairs against the Ψ decay exponents;
            // their sum is never positive, so amplitudes cannot overflow.
            let mut ln_a = (comp.weight as f64).ln() + tf * ln_c;
            let mut expo = tf * c_exp;
            let mut base = 0.0;
            for (idx, &p) in comp.parts.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let pf = p as f64;
                ln_a += pf * ln_psi[idx];
                expo += pf * psi_exp[idx];
                base += pf * node_s[idx];
            }
            let b = half_kln2 * base;
            coeffs.push(FarCoeff {
                a: (ln_a + expo).exp(),
                b,
                ln_b: Dd::from_f64(b).ln(),
            });
        }
        Ok(Self {
            coeffs,
            kernel: Kernel::new(quad.l_terms)?,
            t_kappa: tf * kappa,
        })
    }

    /// Almost-sure ceiling T·κ of the accumulated SINR; the series loses
    /// validity at and beyond it.
    pub fn validity_edge(&self) -> f64 {
        self.t_kappa
    }

    /// Test hook: scale one inversion weight by `factor` to emulate a
    /// corrupted table. Downstream equivalence checks must detect this.
    pub fn scale_omega(&mut self, index: usize, factor: f64) {
        self.kernel.scale_entry(index, factor);
    }

    /// Raw series value of the accumulated-SINR CDF at r > 0 (unclamped):
    /// F(r) = Σ_j A_j S(b_j / r).
    pub fn cdf_raw(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::domain(
                "cdf_far_sinr",
                format!("threshold must be positive, got {r}"),
            ));
        }
        let mut acc = Dd::ZERO;
        for c in &self.coeffs {
            if c.a == 0.0 {
                continue;
            }
            let u = Dd::from_f64(c.b).div_f64(r);
            acc = acc.add(self.kernel.s_plain(u).mul_f64(c.a));
        }
        Ok(acc.to_f64())
    }

    /// CDF value clamped to [0, 1] with the validity flag for r ≥ T·κ.
    pub fn cdf_approx<R: Real>(&self, r: f64) -> Result<CdfApprox<R>> {
        let raw = self.cdf_raw(r)?;
        Ok(CdfApprox {
            value: R::of(raw.clamp(0.0, 1.0)),
            raw: R::of(raw),
            beyond_validity: r >= self.t_kappa,
        })
    }

    /// Closed window form λ Σ_j A_j Σ_k (ω_k ln2)[Ω(lo, k b_j) − Ω(hi, k b_j)]
    /// = λ ∫_lo^hi F(r) dr, unclamped. `lo` = 0 uses Ω(0⁺, ·) = 0.
    ///
    /// The inner weight sum collapses through the kernel:
    /// Σ_k (ω_k ln2) Ω(x, k b) = x (P(u) − S(u)) − b S1(u) with u = b/x.
    pub fn window_average_raw(&self, lambda: f64, lo: f64, hi: f64) -> Result<f64> {
        if !(lo >= 0.0 && hi > lo) {
            return Err(Error::domain(
                "window_average",
                format!("need 0 <= lo < hi, got lo={lo}, hi={hi}"),
            ));
        }
        let ln_hi = Dd::from_f64(hi).ln();
        let ln_lo = (lo > 0.0).then(|| Dd::from_f64(lo).ln());
        let mut acc = Dd::ZERO;
        for c in &self.coeffs {
            if c.a == 0.0 {
                continue;
            }
            let om_hi = self.omega_sum(c, hi, ln_hi);
            let om_lo = match ln_lo {
                Some(l) => self.omega_sum(c, lo, l),
                None => Dd::ZERO,
            };
            acc = acc.add(om_lo.sub(om_hi).mul_f64(c.a));
        }
        Ok(acc.mul_f64(lambda).to_f64())
    }

    /// Σ_k (ω_k ln2) Ω(x, k b_j) for one coefficient.
    fn omega_sum(&self, c: &FarCoeff, x: f64, ln_x: Dd) -> Dd {
        let u = Dd::from_f64(c.b).div_f64(x);
        let (s, s1, p) = self.kernel.s_all(u, c.ln_b.sub(ln_x));
        p.sub(s).mul_f64(x).sub(s1.mul_f64(c.b))
    }
}

/// Accumulated far-message SINR CDF at threshold `r` for the given decoder's
/// channel. Values are clamped to [0, 1]; thresholds at or beyond T·κ carry
/// a validity warning on the result.
pub fn cdf_far_sinr<R: Real>(
    r: R,
    config: &SystemConfig<R>,
    quad: &QuadratureConfig,
    decoder: User,
) -> Result<CdfApprox<R>> {
    if !(r > R::zero()) {
        return Err(Error::domain(
            "cdf_far_sinr",
            format!("threshold must be positive, got {r}"),
        ));
    }
    FarSeries::new(config, quad, decoder)?.cdf_approx(r.as_f64())
}

/// Average BLER of the far-message decoding stage at `decoder` (the far
/// user's own decode, or the near user's SIC stage), via the closed window
/// form. Errors when the decode threshold θ₂ is infeasible (θ₂ ≥ T·κ).
pub fn avg_bler_far_decode<R: Real>(
    config: &SystemConfig<R>,
    coding: &CodingConfig<R>,
    quad: &QuadratureConfig,
    decoder: User,
) -> Result<BlerEstimate<R>> {
    let series = FarSeries::new(config, quad, decoder)?;
    avg_bler_far_with_series(&series, coding.n2.as_f64(), coding.m.as_f64())
}

/// Window-form average over an already-built series; shared by the public op
/// and harness paths that sweep many windows over one series.
pub fn avg_bler_far_with_series<R: Real>(
    series: &FarSeries,
    n2: f64,
    m: f64,
) -> Result<BlerEstimate<R>> {
    let lin = linearize(n2, m)?;
    if lin.theta >= series.t_kappa {
        return Err(Error::Infeasible(format!(
            "decode threshold {} is at or beyond the accumulated-SINR ceiling {}",
            lin.theta, series.t_kappa
        )));
    }
    let raw = series.window_average_raw(lin.lambda, lin.upsilon.max(0.0), lin.tau)?;
    Ok(BlerEstimate::clamped(R::of(raw), Method::ClosedForm))
}
