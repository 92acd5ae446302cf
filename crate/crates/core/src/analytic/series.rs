//! Building blocks of the far-user closed form: Gauss–Chebyshev nodes, the
//! assignments of combining rounds to nodes ("compositions") with their
//! multinomial weights, and the alternating inversion weights ω_k.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::{binomial_u128, factorial_u128};

/// Largest composition set that will be materialized.
pub const COMPOSITION_CAP: u128 = 10_000_000;

/// First-kind Gauss–Chebyshev abscissas a_n = cos((2n−1)π/(2N)), n = 1..N,
/// in descending order inside (−1, 1).
pub fn chebyshev_nodes<R: Real>(count: usize) -> Result<Vec<R>> {
    if count < 1 {
        return Err(Error::domain(
            "chebyshev_nodes",
            "node count must be at least 1",
        ));
    }
    let denom = R::of_usize(2 * count);
    Ok((1..=count)
        .map(|n| (R::PI() * R::of_usize(2 * n - 1) / denom).cos())
        .collect())
}

/// One assignment of T combining rounds to quadrature nodes, with its
/// multinomial weight Λ = T!/Π p_n!.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    /// Rounds assigned to each node; sums to T.
    pub parts: Vec<u32>,
    /// Multinomial weight.
    pub weight: u128,
}

/// Number of compositions of t rounds over n nodes: C(t+n−1, n−1).
pub fn composition_count(t: u32, n: usize) -> Result<u128> {
    binomial_u128(t as u64 + n as u64 - 1, n as u64 - 1)
}

/// Enumerate every composition of `t` rounds over `n` nodes, in the
/// deterministic order that assigns the largest counts to earlier nodes
/// first. Errors if the set would exceed [`COMPOSITION_CAP`].
pub fn enumerate_compositions(t: u32, n: usize) -> Result<Vec<Composition>> {
    if t < 1 || n < 1 {
        return Err(Error::domain(
            "enumerate_compositions",
            format!("need t >= 1 rounds and n >= 1 nodes, got t={t}, n={n}"),
        ));
    }
    let count = composition_count(t, n)?;
    if count > COMPOSITION_CAP {
        return Err(Error::Resource(format!(
            "composition set of size {count} exceeds cap {COMPOSITION_CAP}"
        )));
    }
    let t_fact = factorial_u128(t)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut prefix = Vec::with_capacity(n);
    fn rec(
        remaining: u32,
        slots: usize,
        prefix: &mut Vec<u32>,
        t_fact: u128,
        out: &mut Vec<Composition>,
    ) {
        if slots == 1 {
            prefix.push(remaining);
            let mut w = t_fact;
            for &p in prefix.iter() {
                w /= factorial_u128(p).expect("part factorial fits: p <= t");
            }
            out.push(Composition {
                parts: prefix.clone(),
                weight: w,
            });
            prefix.pop();
            return;
        }
        for p in (0..=remaining).rev() {
            prefix.push(p);
            rec(remaining - p, slots - 1, prefix, t_fact, out);
            prefix.pop();
        }
    }
    rec(t, n, &mut prefix, t_fact, &mut out);
    Ok(out)
}

/// Exact integer numerators of the inversion weights: ω_k = num_k/(l/2)! with
/// num_k = (−1)^{l/2+k} Σ_j j^{l/2+1} C(l/2,j) C(2j,j) C(j,k−j), the sum
/// running over j = ⌈k/2⌉..min(k, l/2).
pub fn omega_numerators(l: usize) -> Result<Vec<i128>> {
    if l < 2 || l % 2 != 0 {
        return Err(Error::domain(
            "omega_numerators",
            format!("term count must be even and at least 2, got {l}"),
        ));
    }
    let h = l / 2;
    let mut out = Vec::with_capacity(l);
    for k in 1..=l {
        let mut sum: u128 = 0;
        for j in k.div_ceil(2)..=k.min(h) {
            if k - j > j {
                continue;
            }
            let mut term: u128 = 1;
            for _ in 0..=h {
                term = term.checked_mul(j as u128).ok_or_else(|| {
                    Error::Resource(format!("omega numerator overflows u128 at l={l}"))
                })?;
            }
            let b1 = binomial_u128(h as u64, j as u64)?;
            let b2 = binomial_u128(2 * j as u64, j as u64)?;
            let b3 = binomial_u128(j as u64, (k - j) as u64)?;
            term = term
                .checked_mul(b1)
                .and_then(|v| v.checked_mul(b2))
                .and_then(|v| v.checked_mul(b3))
                .ok_or_else(|| {
                    Error::Resource(format!("omega numerator overflows u128 at l={l}"))
                })?;
            sum = sum
                .checked_add(term)
                .ok_or_else(|| Error::Resource(format!("omega numerator overflows at l={l}")))?;
        }
        if sum > i128::MAX as u128 {
            return Err(Error::Resource(format!(
                "omega numerator exceeds i128 at l={l}"
            )));
        }
        let signed = if (h + k) % 2 == 0 {
            sum as i128
        } else {
            -(sum as i128)
        };
        out.push(signed);
    }
    Ok(out)
}

/// Inversion weights ω_k as scalars.
pub fn omega_coefficients<R: Real>(l: usize) -> Result<Vec<R>> {
    let nums = omega_numerators(l)?;
    let den = R::of(factorial_u128((l / 2) as u32)? as f64);
    Ok(nums.iter().map(|&n| R::of(n as f64) / den).collect())
}

/// Inversion weights premultiplied by ln 2 in extended precision, as consumed
/// by the series kernel: (ω_k ln 2).
pub fn omega_ln2_dd(l: usize) -> Result<Vec<Dd>> {
    let nums = omega_numerators(l)?;
    let den = factorial_u128((l / 2) as u32)? as f64;
    Ok(nums
        .iter()
        .map(|&n| Dd::from_i128(n).div_f64(den).mul(crate::dd::LN2))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_bigint::BigInt;

    #[test]
    fn nodes_shape_and_symmetry() {
        let nodes: Vec<f64> = chebyshev_nodes(30).unwrap();
        assert_eq!(nodes.len(), 30);
        for w in nodes.windows(2) {
            assert!(w[0] > w[1], "descending");
        }
        for (i, &a) in nodes.iter().enumerate() {
            assert!(a.abs() < 1.0);
            assert_relative_eq!(a, -nodes[29 - i], epsilon = 1e-15);
        }
        assert_relative_eq!(
            nodes[0],
            (std::f64::consts::PI / 60.0).cos(),
            max_relative = 1e-15
        );
        let single: Vec<f64> = chebyshev_nodes(1).unwrap();
        assert!(single[0].abs() < 1e-15);
        assert!(chebyshev_nodes::<f64>(0).is_err());
    }

    #[test]
    fn composition_counts_and_weights() {
        assert_eq!(composition_count(3, 30).unwrap(), 4960);
        let comps = enumerate_compositions(3, 30).unwrap();
        assert_eq!(comps.len(), 4960);
        // Multinomial weights sum to n^t.
        let total: u128 = comps.iter().map(|c| c.weight).sum();
        assert_eq!(total, 30u128.pow(3));
        for c in &comps {
            assert_eq!(c.parts.iter().sum::<u32>(), 3);
            assert_eq!(c.parts.len(), 30);
        }
        // Deterministic order: first composition concentrates on node 1.
        assert_eq!(comps[0].parts[0], 3);
        assert_eq!(comps[0].weight, 1);
        assert_eq!(comps[1].parts[0], 2);
        assert_eq!(comps[1].parts[1], 1);
        assert_eq!(comps[1].weight, 3);
    }

    #[test]
    fn composition_cap_enforced() {
        // C(39, 29) = 635_745_396_825 blows the cap.
        assert!(matches!(
            enumerate_compositions(10, 30),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn omega_small_and_frozen_values() {
        assert_eq!(omega_numerators(2).unwrap(), vec![2, -2]);
        let w: Vec<f64> = omega_coefficients(18).unwrap();
        assert_eq!(w.len(), 18);
        assert_relative_eq!(w[0], 18.0 / 362_880.0, max_relative = 1e-15);
        assert_relative_eq!(w[17], -4.671_722_265_669_642_69e8, max_relative = 1e-14);
        let peak = w.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        assert!(peak > 7.8e10 && peak < 7.9e10, "peak magnitude {peak}");
        assert!(omega_numerators(17).is_err());
        assert!(omega_numerators(0).is_err());
    }

    #[test]
    fn omega_matches_bigint_recomputation() {
        // Guard the checked-u128 arithmetic against silent overflow paths by
        // recomputing the numerators in arbitrary precision.
        fn big_binom(n: u64, k: u64) -> BigInt {
            if k > n {
                return BigInt::from(0);
            }
            let mut acc = BigInt::from(1);
            for i in 0..k.min(n - k) {
                acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
            }
            acc
        }
        for l in [2usize, 6, 18] {
            let h = l / 2;
            let got = omega_numerators(l).unwrap();
            for (idx, k) in (1..=l).enumerate() {
                let mut sum = BigInt::from(0);
                for j in k.div_ceil(2)..=k.min(h) {
                    if k - j > j {
                        continue;
                    }
                    sum += BigInt::from(j).pow(h as u32 + 1)
                        * big_binom(h as u64, j as u64)
                        * big_binom(2 * j as u64, j as u64)
                        * big_binom(j as u64, (k - j) as u64);
                }
                if (h + k) % 2 == 1 {
                    sum = -sum;
                }
                assert_eq!(BigInt::from(got[idx]), sum, "l={l} k={k}");
            }
        }
    }

    #[test]
    fn omega_moment_identities() {
        // First moment is an exact integer identity: Σ ω_k / k = 1, i.e.
        // Σ num_k · (lcm(1..18)/k) = lcm(1..18) · 9!. Higher moments
        // Σ ω_k k^{-p} are exact rationals that approach (ln 2)^{p-1}/(p-1)!
        // only to the inversion order's own accuracy, so they are pinned to
        // frozen exact-rational values instead. The sums cancel through
        // eleven orders of magnitude, so they are taken in extended
        // precision, which doubles as a cancellation stress test of the
        // arithmetic the series kernel uses.
        let nums = omega_numerators(18).unwrap();
        let lcm: i128 = 12_252_240; // lcm(1..18)
        let first: i128 = nums
            .iter()
            .enumerate()
            .map(|(idx, &num)| num * (lcm / (idx as i128 + 1)))
            .sum();
        assert_eq!(first, lcm * factorial_u128(9).unwrap() as i128);

        // Frozen (hi, lo) pairs of the exact rationals Σ ω_k k^{-p}.
        let expect = [
            (2u32, 0.6931471813120644, 2.1851611073162077e-17),
            (3, 0.2402265226835593, -8.990273922505897e-18),
            (4, 0.05550410827675461, -1.264273297850742e-18),
            (5, 0.009618061085626427, 7.339081465472028e-19),
            (6, 0.0013333565712211743, 6.911955506955522e-21),
        ];
        let den = factorial_u128(9).unwrap() as f64;
        for (p, hi, lo) in expect {
            let mut acc = Dd::ZERO;
            for (idx, &num) in nums.iter().enumerate() {
                let k = (idx + 1) as f64;
                let mut kp = Dd::from_f64(1.0);
                for _ in 0..p {
                    kp = kp.mul_f64(k);
                }
                acc = acc.add(Dd::from_i128(num).div(kp));
            }
            acc = acc.div_f64(den);
            let want = Dd { hi, lo };
            let dev = acc.sub(want).abs().to_f64() / hi;
            // Cancellation eats ~11 of the ~32 carried digits; anything this
            // far below f64 precision proves the extended path is live.
            assert!(dev < 1e-22, "moment p={p} deviates by {dev:e}");
            // The rational sums track the transcendental targets only to the
            // inversion accuracy; document that envelope loosely.
            let mut target = Dd::from_f64(1.0);
            for _ in 1..p {
                target = target.mul(crate::dd::LN2);
            }
            target = target.div_f64(factorial_u128(p - 1).unwrap() as f64);
            let approx_dev = acc.sub(target).abs().to_f64() / target.to_f64();
            assert!(approx_dev < 1e-5, "moment p={p} misses ln2 form by {approx_dev:e}");
        }
    }

    #[test]
    fn omega_sum_is_zero() {
        // Σ ω_k = 0 exactly (the p -> 0 moment), in integer arithmetic.
        let nums = omega_numerators(18).unwrap();
        assert_eq!(nums.iter().sum::<i128>(), 0);
    }

    #[test]
    fn omega_ln2_matches_plain() {
        let dd = omega_ln2_dd(6).unwrap();
        let plain: Vec<f64> = omega_coefficients(6).unwrap();
        for (d, w) in dd.iter().zip(plain.iter()) {
            assert_relative_eq!(
                d.to_f64(),
                w * std::f64::consts::LN_2,
                max_relative = 1e-15
            );
        }
    }
}
