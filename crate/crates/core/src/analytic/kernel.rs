//! Inner weight-sum kernel of the far-user series.
//!
//! Every series evaluation reduces to three sums over the inversion weights,
//! shared by the CDF and its closed window form:
//!
//!   S(u)  = Σ_k (ω_k ln2) E1(k u)
//!   S1(u) = Σ_k (ω_k ln2) k E1(k u)
//!   P(u)  = Σ_k (ω_k ln2) e^{-k u}
//!
//! Expanding E1 term-by-term and swapping the order of summation collapses
//! each of these into a single power series in `u` whose coefficients are
//! exact rationals of the weight table (frozen in `kernel_tables`): the
//! Euler-constant and `ln u` pieces cancel against Σω_k = 0, leaving
//!
//!   S(u)  = -SK0 + Σ_m (-1)^{m+1} SC_m  u^m
//!   S1(u) = -(LGM1 + LK1) - LM1 ln u + Σ_m (-1)^{m+1} SC1_m u^m
//!   P(u)  = Σ_m (-1)^m (m SC_m) u^m
//!
//! That replaces 18 double-double E1 evaluations with one short power
//! series — an order-of-magnitude speedup on the hot path. The moment
//! coefficients grow to ~1e14 before the factorial wins, so the expansion
//! is well conditioned only for u ≤ [`MOMENT_MAX_U`]; beyond the cutoff,
//! for weight tables of other lengths, and after fault injection, the
//! kernel falls back to summing the ladder of E1 terms directly.

use crate::analytic::kernel_tables::{LGM1, LK1, LM1, SC, SC1, SK0};
use crate::analytic::series::omega_ln2_dd;
use crate::dd::Dd;
use crate::error::Result;

/// Largest `u` the moment expansion is trusted for. The peak intermediate
/// term grows with u (~2.5e14 at 1.25, ~1.2e17 at the cutoff), leaving the
/// double-double accumulation a few units of 1e-15 absolute — four orders
/// below the tightest downstream equivalence budget. Beyond the cutoff the
/// peak grows another order per ~0.15 in u, so the kernel switches to the
/// direct ladder there.
pub(crate) const MOMENT_MAX_U: f64 = 1.55;

/// Terms smaller than this fraction of the running peak cannot move the
/// double-double accumulator; the moment loop stops there.
const MOMENT_TERM_CUTOFF: f64 = 1e-34;

/// Weight-sum evaluator: the frozen moment tables cover exactly the 18-term
/// table, so `fast` holds iff the table length matches and no entry has been
/// tampered with.
#[derive(Debug, Clone)]
pub(crate) struct Kernel {
    omega_ln2: Vec<Dd>,
    fast: bool,
}

impl Kernel {
    pub fn new(l_terms: usize) -> Result<Self> {
        Ok(Self {
            omega_ln2: omega_ln2_dd(l_terms)?,
            fast: l_terms == 18,
        })
    }

    /// Fault-injection hook: scale one weight, which also invalidates the
    /// moment tables and drops the kernel to the direct path.
    pub fn scale_entry(&mut self, index: usize, factor: f64) {
        if let Some(w) = self.omega_ln2.get_mut(index) {
            *w = w.mul_f64(factor);
            self.fast = false;
        }
    }

    /// S(u) alone — the CDF integrand path.
    pub fn s_plain(&self, u: Dd) -> Dd {
        debug_assert!(u.hi > 0.0, "kernel argument must be positive");
        if self.fast && u.hi <= MOMENT_MAX_U {
            moment_s(u)
        } else {
            self.direct_s(u)
        }
    }

    /// (S, S1, P) together — the window (antiderivative) path. `ln_u` must
    /// equal ln(u); callers assemble it from precomputed logarithms.
    pub fn s_all(&self, u: Dd, ln_u: Dd) -> (Dd, Dd, Dd) {
        debug_assert!(u.hi > 0.0, "kernel argument must be positive");
        if self.fast && u.hi <= MOMENT_MAX_U {
            moment_all(u, ln_u)
        } else {
            self.direct_all(u)
        }
    }

    fn direct_s(&self, u: Dd) -> Dd {
        let e_step = u.neg().exp();
        if e_step.hi == 0.0 {
            return Dd::ZERO;
        }
        let mut ek = e_step;
        let mut s = Dd::ZERO;
        for (ki, w) in self.omega_ln2.iter().enumerate() {
            // E1(ku) <= e^{-ku}: once the running power underflows, so does
            // every remaining term.
            if ek.hi == 0.0 {
                break;
            }
            let e1 = Dd::e1_with_exp(u.mul_f64((ki + 1) as f64), ek);
            s = s.add(w.mul(e1));
            ek = ek.mul(e_step);
        }
        s
    }

    fn direct_all(&self, u: Dd) -> (Dd, Dd, Dd) {
        let e_step = u.neg().exp();
        if e_step.hi == 0.0 {
            return (Dd::ZERO, Dd::ZERO, Dd::ZERO);
        }
        let mut ek = e_step;
        let mut s = Dd::ZERO;
        let mut s1 = Dd::ZERO;
        let mut p = Dd::ZERO;
        for (ki, w) in self.omega_ln2.iter().enumerate() {
            if ek.hi == 0.0 {
                break;
            }
            let k = (ki + 1) as f64;
            let e1 = Dd::e1_with_exp(u.mul_f64(k), ek);
            let we = w.mul(e1);
            s = s.add(we);
            s1 = s1.add(we.mul_f64(k));
            p = p.add(w.mul(ek));
            ek = ek.mul(e_step);
        }
        (s, s1, p)
    }
}

/// Moment expansion of S only.
fn moment_s(u: Dd) -> Dd {
    let mut s = SK0.neg();
    let mut pow = Dd::ONE;
    let mut peak = 0.0f64;
    for (mi, c) in SC.iter().enumerate() {
        pow = pow.mul(u);
        let term = c.mul(pow);
        let mag = term.hi.abs();
        if mag > peak {
            peak = mag;
        } else if mag < peak * MOMENT_TERM_CUTOFF {
            break;
        }
        s = if mi % 2 == 0 { s.add(term) } else { s.sub(term) };
    }
    s
}

/// Moment expansion of (S, S1, P) with one shared power ladder.
fn moment_all(u: Dd, ln_u: Dd) -> (Dd, Dd, Dd) {
    let mut s = SK0.neg();
    let mut s1 = LGM1.add(LK1).add(LM1.mul(ln_u)).neg();
    let mut p = Dd::ZERO;
    let mut pow = Dd::ONE;
    let mut peak = 0.0f64;
    for mi in 0..SC.len() {
        pow = pow.mul(u);
        let m = (mi + 1) as f64;
        let st = SC[mi].mul(pow);
        let s1t = SC1[mi].mul(pow);
        let pt = st.mul_f64(m);
        // SC1 dominates SC and m·SC tracks SC, so SC1 governs convergence.
        let mag = s1t.hi.abs();
        if mag > peak {
            peak = mag;
        } else if mag < peak * MOMENT_TERM_CUTOFF {
            break;
        }
        if mi % 2 == 0 {
            s = s.add(st);
            s1 = s1.add(s1t);
            p = p.sub(pt);
        } else {
            s = s.sub(st);
            s1 = s1.sub(s1t);
            p = p.add(pt);
        }
    }
    (s, s1, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(got: Dd, want: (f64, f64)) -> f64 {
        let w = Dd {
            hi: want.0,
            lo: want.1,
        };
        let d = got.sub(w);
        (d.hi.abs() + d.lo.abs()) / (w.hi.abs() + w.lo.abs()).max(f64::MIN_POSITIVE)
    }

    /// 60-digit references for (u, S, S1, P) at the exact binary value of
    /// each `u`, spanning both evaluation paths. Tolerances follow the
    /// conditioning: the sums cancel down from a peak term that grows with
    /// u, hardest where S crosses zero (u near 1.1 and 1.6).
    const REFS: [(f64, (f64, f64), (f64, f64), (f64, f64), f64); 8] = [
        (
            0.05,
            (1.0002531344939034, -7.151627566661867e-17),
            (-1.4465022993345267, -5.770088589662958e-17),
            (0.00014853136223751373, -7.222199365894039e-21),
            1e-28,
        ),
        (
            0.3,
            (0.9729898305937627, -4.963457099564388e-17),
            (-1.1095778801694913, -5.652497489368782e-17),
            (0.07254554535809563, -5.534649201110792e-18),
            1e-24,
        ),
        (
            0.7411,
            (0.2990499824255998, 5.848611197302934e-18),
            (3.2619258236516715, 1.8421783405194372e-16),
            (2.705701646949983, 2.0113006176295236e-16),
            1e-21,
        ),
        (
            1.1,
            (-0.022252691671182767, 9.583900766274257e-19),
            (-0.375102093596949, -1.0453293986408686e-17),
            (-0.4365840561172499, -2.099753096909335e-18),
            1e-16,
        ),
        (
            1.6,
            (-0.0016624845411359185, -2.418515400740623e-20),
            (0.044130781995219276, -9.781286058006196e-19),
            (0.06952334039301628, -1.472682108850679e-18),
            1e-20,
        ),
        (
            2.4,
            (0.000630128346829814, 4.383923346618436e-20),
            (0.001367038692894881, 9.105800938920471e-20),
            (0.003878109430175327, -1.6526445527293557e-19),
            1e-20,
        ),
        (
            5.0,
            (4.620819812398301e-07, 2.0264894140595893e-24),
            (1.8794296753600624e-06, 8.096425330062779e-23),
            (9.853696810859883e-06, 8.2055975701602295e-22),
            1e-19,
        ),
        (
            20.0,
            (3.3816360671429333e-15, -7.945120186280596e-32),
            (3.381592261029465e-15, -9.498749169993541e-32),
            (7.0865408446536e-14, -5.294446252400608e-30),
            1e-24,
        ),
    ];

    #[test]
    fn frozen_references() {
        let k = Kernel::new(18).unwrap();
        let mut failures = Vec::new();
        for (u, s_ref, s1_ref, p_ref, tol) in REFS {
            let ud = Dd::from_f64(u);
            let ln_u = ud.ln();
            let (s, s1, p) = k.s_all(ud, ln_u);
            for (label, got, want) in [("S", s, s_ref), ("S1", s1, s1_ref), ("P", p, p_ref)] {
                let err = rel_err(got, want);
                if err >= tol {
                    failures.push(format!("{label}({u}): rel err {err:.2e} vs {tol:.0e}"));
                }
            }
            let err = rel_err(k.s_plain(ud), s_ref);
            if err >= tol {
                failures.push(format!("s_plain({u}): rel err {err:.2e} vs {tol:.0e}"));
            }
        }
        assert!(failures.is_empty(), "{}", failures.join("; "));
    }

    #[test]
    fn paths_agree_at_the_cutoff() {
        // Force each path on the same arguments and compare. The direct path
        // is conditioned to ~1e-22 throughout; the moment path degrades with
        // its peak term, so the agreement bound tracks u.
        let k = Kernel::new(18).unwrap();
        let mut slow = k.clone();
        slow.fast = false;
        for &(u, tol) in &[
            (0.4, 1e-13),
            (0.9, 1e-13),
            (1.1, 1e-13),
            (1.2, 1e-13),
            (1.4, 1e-12),
            (1.5, 1e-11),
            (MOMENT_MAX_U, 1e-11),
        ] {
            let ud = Dd::from_f64(u);
            let ln_u = ud.ln();
            let (fs, fs1, fp) = k.s_all(ud, ln_u);
            let (ds, ds1, dp) = slow.s_all(ud, ln_u);
            assert!(rel_err(fs, (ds.hi, ds.lo)) < tol, "S mismatch at u={u}");
            assert!(rel_err(fs1, (ds1.hi, ds1.lo)) < tol, "S1 mismatch at u={u}");
            assert!(rel_err(fp, (dp.hi, dp.lo)) < tol, "P mismatch at u={u}");
            assert!(
                rel_err(k.s_plain(ud), (ds.hi, ds.lo)) < tol,
                "s_plain mismatch at u={u}"
            );
        }
    }

    #[test]
    fn corruption_disables_fast_path() {
        let mut k = Kernel::new(18).unwrap();
        assert!(k.fast);
        let u = Dd::from_f64(0.3);
        let clean = k.s_plain(u);
        k.scale_entry(2, 1.001);
        assert!(!k.fast);
        let dirty = k.s_plain(u);
        let shift = dirty.sub(clean).hi.abs() / clean.hi.abs();
        assert!(shift > 1e-9, "weight corruption must shift S, got {shift}");
        // Out-of-range index is a no-op and keeps the current mode.
        let mut k2 = Kernel::new(18).unwrap();
        k2.scale_entry(99, 2.0);
        assert!(k2.fast);
    }

    #[test]
    fn other_table_lengths_use_direct_path() {
        let k = Kernel::new(16).unwrap();
        assert!(!k.fast);
        // Still a valid inversion table: S(u) ≈ 1 for small u.
        let s = k.s_plain(Dd::from_f64(0.01)).to_f64();
        assert!((s - 1.0).abs() < 1e-3, "16-term S(0.01) = {s}");
    }

    #[test]
    fn deep_tail_underflows_to_zero() {
        let k = Kernel::new(18).unwrap();
        let (s, s1, p) = k.s_all(Dd::from_f64(800.0), Dd::from_f64(800.0f64.ln()));
        assert_eq!(s.hi, 0.0);
        assert_eq!(s1.hi, 0.0);
        assert_eq!(p.hi, 0.0);
    }
}
