//! Built-in parameter sets for each subcommand.
//!
//! Resolution order everywhere is: these defaults, then an optional JSON
//! config file, then individual command-line flags.  The sweep axes (the SNR
//! and blocklength grids and the second far-user target) are fixed program
//! constants rather than config keys; overriding the corresponding scalar key
//! moves the nominal point recorded in the provenance line but not the grid.

use noma_bler::config::Scenario;
use noma_bler::GammaInverse;

/// SNR grid for the per-round BLER sweep and the design sweep, in dB.
pub const RHO_GRID_DB: [f64; 7] = [10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0];

/// Combining-round counts covered by the per-round BLER sweep.
pub const T_GRID: [u32; 3] = [1, 2, 3];

/// Blocklength grid for the NOMA/OMA comparison sweep.
pub const M_GRID: [f64; 16] = [
    500.0, 600.0, 700.0, 800.0, 900.0, 1000.0, 1100.0, 1200.0, 1300.0, 1400.0, 1500.0, 1600.0,
    1700.0, 1800.0, 1900.0, 2000.0,
];

/// Near-user blocklength shares for the two OMA splits in the comparison
/// sweep; the far user gets the remainder.
pub const OMA_SHARES: [f64; 2] = [0.2, 0.5];

/// Far-user reliability targets covered by the design sweep.
pub const EPS2_TARGETS: [f64; 2] = [1e-5, 5e-6];

fn base() -> Scenario {
    Scenario {
        rho_db: 30.0,
        alpha1: 0.1,
        d1: 3.0,
        d2: 7.0,
        eta: 2.0,
        t_rounds: 3,
        n1: 160.0,
        n2: 160.0,
        m: 200.0,
        quad_n: 30,
        quad_l: 18,
        seed: 1729,
        trials: 1_000_000,
        eps1_target: None,
        eps2_target: None,
        delta: None,
        nu: None,
        gamma_inverse: GammaInverse::Regularized,
    }
}

/// Defaults for the per-round BLER versus SNR sweep.
pub fn figure1() -> Scenario {
    base()
}

/// Defaults for the NOMA/OMA BLER versus blocklength sweep.
pub fn figure2() -> Scenario {
    Scenario {
        alpha1: 0.2,
        n1: 300.0,
        n2: 300.0,
        m: 500.0,
        ..base()
    }
}

/// Defaults for the design sweep: reliability targets are filled in so the
/// sweep runs without a config file.
pub fn figure3() -> Scenario {
    Scenario {
        n1: 300.0,
        n2: 300.0,
        m: 500.0,
        eps1_target: Some(1e-5),
        eps2_target: Some(1e-5),
        delta: Some(0.1),
        nu: Some(1e-7),
        ..base()
    }
}

/// Defaults for the single-point solver: same shape as the design sweep, but
/// the design keys carry no defaults — they must come from the config file,
/// so a missing target is an input error rather than a silent fallback.
pub fn solve() -> Scenario {
    Scenario {
        eps1_target: None,
        eps2_target: None,
        delta: None,
        nu: None,
        ..figure3()
    }
}

/// Defaults for the self-check battery: the per-round BLER regime plus the
/// solver targets used by the design round-trip rows.
pub fn validate() -> Scenario {
    figure3()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_produce_valid_typed_views() {
        for s in [figure1(), figure2(), figure3(), validate()] {
            assert!(s.system().is_ok());
            assert!(s.coding().is_ok());
            assert!(s.quadrature().is_ok());
        }
        assert!(figure3().solver_targets().is_ok());
        assert!(figure1().solver_targets().is_err(), "targets are design-only keys");
        assert!(solve().solver_targets().is_err(), "solve requires explicit targets");
    }

    #[test]
    fn grids_are_ordered() {
        assert!(RHO_GRID_DB.windows(2).all(|w| w[0] < w[1]));
        assert!(M_GRID.windows(2).all(|w| w[0] < w[1]));
        assert!(EPS2_TARGETS[0] > EPS2_TARGETS[1]);
    }
}
