//! Subcommand implementations.
//!
//! Every command resolves its scenario the same way (built-in defaults, then
//! the config file, then individual flags), computes, and only then writes
//! output, so a rejected config never leaves a partial file behind.  Exit
//! codes: 0 success, 1 self-check failure, 2 input error, 3 sweep ran but
//! some points were flagged, 4 solver targets infeasible.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use noma_bler::analytic::{avg_bler_far_with_series, avg_bler_near_own, avg_bler_oma, avg_bler_user};
use noma_bler::asymptotic::{oma_required_blocklength, solve_power_blocklength};
use noma_bler::config::{Scenario, ScenarioPatch};
use noma_bler::model::User;
use noma_bler::montecarlo::simulate_avg_bler;
use noma_bler::{
    CodingConfig, Error, FarSeries, ReliabilityTargets, Result, SolverScenario, SystemConfig,
};

use crate::csvout::{self, num, Row};
use crate::defaults;
use crate::harness::{self, HarnessOptions};
use crate::sweep::{self, SweepSpec, SweepVar};

/// Command-line overrides common to all subcommands.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub config: Option<PathBuf>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub quad_n: Option<usize>,
    pub quad_l: Option<usize>,
    pub gamma_inverse: Option<String>,
}

/// Overlay the config file and the individual flags onto `scenario`.
pub fn resolve(mut scenario: Scenario, ov: &Overrides) -> Result<Scenario> {
    if let Some(path) = &ov.config {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        scenario.apply(&ScenarioPatch::from_json(&text)?);
    }
    if let Some(v) = ov.seed {
        scenario.seed = v;
    }
    if let Some(v) = ov.trials {
        scenario.trials = v;
    }
    if let Some(v) = ov.quad_n {
        scenario.quad_n = v;
    }
    if let Some(v) = ov.quad_l {
        scenario.quad_l = v;
    }
    if let Some(v) = &ov.gamma_inverse {
        scenario.gamma_inverse = v.parse()?;
    }
    Ok(scenario)
}

/// Flag text for errors that mark a single sweep point rather than the whole
/// run; `None` means the error is fatal to the command.
fn flag_for(err: &Error) -> Option<&'static str> {
    match err {
        Error::Infeasible(_) => Some("infeasible"),
        Error::Regime { .. } => Some("regime"),
        Error::Convergence { .. } => Some("no-convergence"),
        _ => None,
    }
}

/// Write to `out` when given, otherwise to standard output.
fn emit(out: Option<&Path>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Config(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Collapse per-point results into (rows, exit code): any flagged row turns
/// the exit code into 3, any fatal error aborts.
fn collect_rows(groups: Vec<Result<Vec<Row>>>) -> Result<(Vec<Row>, i32)> {
    let mut rows = Vec::new();
    for group in groups {
        rows.extend(group?);
    }
    let code = if rows.iter().any(|r| !r.flag.is_empty()) { 3 } else { 0 };
    Ok((rows, code))
}

/// Per-round BLER versus SNR: analytic and Monte Carlo columns for both
/// users, every combining-round count, over the built-in SNR grid.
pub fn cmd_figure1(ov: &Overrides, out: Option<&Path>) -> Result<i32> {
    let scenario = resolve(defaults::figure1(), ov)?;
    let quad = scenario.quadrature()?;
    let spec = SweepSpec::new(SweepVar::RhoDb, 10.0, 40.0, 5.0, scenario.clone())?;
    let points = spec.points();
    let groups = sweep::run_ordered(&points, |&rho| -> Result<Vec<Row>> {
        let mut rows = Vec::new();
        for &t in &defaults::T_GRID {
            let mut s = spec.scenario_at(rho);
            s.t_rounds = t;
            let kept = |user: &str| vec![num(rho), format!("{t}"), user.to_string()];
            let point = (|| -> Result<[(f64, f64, f64); 2]> {
                let sys = s.system()?;
                let coding = s.coding()?;
                let u1 = avg_bler_user(&sys, &coding, &quad, User::Near)?;
                let u2 = avg_bler_user(&sys, &coding, &quad, User::Far)?;
                let mc = simulate_avg_bler(&sys, &coding, &s.mc())?;
                Ok([
                    (u1.value, mc.eps1.value, mc.eps1.std_err.unwrap_or(f64::NAN)),
                    (u2.value, mc.eps2.value, mc.eps2.std_err.unwrap_or(f64::NAN)),
                ])
            })();
            match point {
                Ok(vals) => {
                    for (user, (a, m, se)) in ["u1", "u2"].iter().zip(vals) {
                        let mut fields = kept(user);
                        fields.extend([num(a), num(m), num(se)]);
                        rows.push(Row::ok(fields));
                    }
                }
                Err(e) => match flag_for(&e) {
                    Some(flag) => {
                        for user in ["u1", "u2"] {
                            rows.push(Row::flagged(kept(user), 3, flag));
                        }
                    }
                    None => return Err(e),
                },
            }
        }
        Ok(rows)
    });
    let (rows, code) = collect_rows(groups)?;
    let mut body = Vec::new();
    csvout::write_csv(
        &mut body,
        &scenario.resolved_json(),
        &["rho_db", "T", "user", "bler_analytic", "bler_mc", "mc_stderr"],
        &rows,
    )
    .expect("in-memory write cannot fail");
    emit(out, std::str::from_utf8(&body).expect("csv is utf-8"))?;
    Ok(code)
}

/// All six BLER columns of the blocklength-comparison sweep at one point.
///
/// Shared with the self-check battery's monotonicity criterion so both sides
/// see exactly the same numbers.  The two far-decode series (SIC stage at the
/// near user, own decode at the far user) depend only on the fixed scenario
/// and are built once by the caller.
pub fn figure2_point(
    sys: &SystemConfig,
    series_sic: &FarSeries,
    series_far: &FarSeries,
    n1: f64,
    n2: f64,
    m: f64,
) -> Result<[f64; 6]> {
    let coding = CodingConfig::new(n1, n2, m)?;
    let sic = avg_bler_far_with_series::<f64>(series_sic, n2, m)?;
    let own = avg_bler_near_own(sys, &coding)?;
    let noma_u1 = (sic.value + (1.0 - sic.value) * own.value).clamp(0.0, 1.0);
    let noma_u2 = avg_bler_far_with_series::<f64>(series_far, n2, m)?.value;
    let mut cols = [noma_u1, noma_u2, 0.0, 0.0, 0.0, 0.0];
    for (i, share) in defaults::OMA_SHARES.iter().enumerate() {
        cols[2 + 2 * i] = avg_bler_oma(sys, n1, share * m, User::Near)?.value;
        cols[3 + 2 * i] = avg_bler_oma(sys, n2, (1.0 - share) * m, User::Far)?.value;
    }
    Ok(cols)
}

/// NOMA versus OMA BLER over the built-in blocklength grid.
pub fn cmd_figure2(ov: &Overrides, out: Option<&Path>) -> Result<i32> {
    let scenario = resolve(defaults::figure2(), ov)?;
    let quad = scenario.quadrature()?;
    let spec = SweepSpec::new(SweepVar::M, 500.0, 2000.0, 100.0, scenario.clone())?;
    let sys = scenario.system()?;
    let series_sic = FarSeries::new(&sys, &quad, User::Near)?;
    let series_far = FarSeries::new(&sys, &quad, User::Far)?;
    let points = spec.points();
    let groups = sweep::run_ordered(&points, |&m| -> Result<Vec<Row>> {
        match figure2_point(&sys, &series_sic, &series_far, scenario.n1, scenario.n2, m) {
            Ok(cols) => {
                let mut fields = vec![num(m)];
                fields.extend(cols.iter().map(|&v| num(v)));
                Ok(vec![Row::ok(fields)])
            }
            Err(e) => match flag_for(&e) {
                Some(flag) => Ok(vec![Row::flagged(vec![num(m)], 6, flag)]),
                None => Err(e),
            },
        }
    });
    let (rows, code) = collect_rows(groups)?;
    let mut body = Vec::new();
    csvout::write_csv(
        &mut body,
        &scenario.resolved_json(),
        &[
            "m",
            "bler_noma_u1",
            "bler_noma_u2",
            "bler_oma20_u1",
            "bler_oma20_u2",
            "bler_oma50_u1",
            "bler_oma50_u2",
        ],
        &rows,
    )
    .expect("in-memory write cannot fail");
    emit(out, std::str::from_utf8(&body).expect("csv is utf-8"))?;
    Ok(code)
}

/// Required blocklengths (joint design versus the orthogonal baseline) over
/// the built-in SNR grid and far-user target pair.
pub fn cmd_figure3(ov: &Overrides, out: Option<&Path>) -> Result<i32> {
    let scenario = resolve(defaults::figure3(), ov)?;
    let quad = scenario.quadrature()?;
    let base_targets = scenario.solver_targets()?;
    let mode = scenario.gamma_inverse;
    let spec = SweepSpec::new(SweepVar::RhoDb, 10.0, 40.0, 5.0, scenario.clone())?;
    let points = spec.points();
    let groups = sweep::run_ordered(&points, |&rho| -> Result<Vec<Row>> {
        let s = spec.scenario_at(rho);
        let sys = s.system()?;
        let scen = SolverScenario::from_system(&sys, s.n1, s.n2)?;
        let mut rows = Vec::new();
        for &eps2 in &defaults::EPS2_TARGETS {
            let kept = vec![num(rho), num(eps2)];
            let point = (|| -> Result<(f64, f64)> {
                let targets = ReliabilityTargets::new(
                    base_targets.eps1,
                    eps2,
                    base_targets.delta,
                    base_targets.nu,
                )?;
                let sol = solve_power_blocklength(&scen, &targets, &quad, mode)?;
                let oma = oma_required_blocklength(&scen, &targets, mode)?;
                Ok((sol.m_req_real, oma.total()))
            })();
            match point {
                Ok((m_noma, m_oma)) => {
                    let mut fields = kept;
                    fields.extend([num(m_noma), num(m_oma), num(m_oma - m_noma)]);
                    rows.push(Row::ok(fields));
                }
                Err(e) => match flag_for(&e) {
                    Some(flag) => rows.push(Row::flagged(kept, 3, flag)),
                    None => return Err(e),
                },
            }
        }
        Ok(rows)
    });
    let (rows, code) = collect_rows(groups)?;
    let mut body = Vec::new();
    csvout::write_csv(
        &mut body,
        &scenario.resolved_json(),
        &["rho_db", "eps2_target", "m_noma", "m_oma", "gap"],
        &rows,
    )
    .expect("in-memory write cannot fail");
    emit(out, std::str::from_utf8(&body).expect("csv is utf-8"))?;
    Ok(code)
}

/// Single-point joint design solve; result as JSON on standard output.
/// Infeasible-class failures print a machine-readable reason and exit 4;
/// missing design keys are an input error.
pub fn cmd_solve(ov: &Overrides) -> Result<i32> {
    let scenario = resolve(defaults::solve(), ov)?;
    let quad = scenario.quadrature()?;
    let targets = scenario.solver_targets()?;
    let sys = scenario.system()?;
    let scen = SolverScenario::from_system(&sys, scenario.n1, scenario.n2)?;
    match solve_power_blocklength(&scen, &targets, &quad, scenario.gamma_inverse) {
        Ok(sol) => {
            let doc = serde_json::json!({
                "alpha1_star": sol.alpha1_star,
                "m_req_real": sol.m_req_real,
                "m_req_ceil": sol.m_req_ceil,
                "iterations": sol.iterations,
                "residual": sol.residual,
            });
            println!("{doc}");
            Ok(0)
        }
        Err(e) => match flag_for(&e) {
            Some(kind) => {
                let doc = serde_json::json!({
                    "error": { "kind": kind, "message": format!("{e}") },
                });
                println!("{doc}");
                Ok(4)
            }
            None => Err(e),
        },
    }
}

/// Self-check battery: run every criterion, write a byte-stable report, exit
/// 0 only if all pass.  `corrupt_omega` is a fault-injection hook that must
/// make the far-window equivalence criterion fail.
pub fn cmd_validate(ov: &Overrides, out: Option<&Path>, corrupt_omega: bool) -> Result<i32> {
    let scenario = resolve(defaults::validate(), ov)?;
    let opts = HarnessOptions {
        seed: scenario.seed,
        trials: scenario.trials,
        quad: scenario.quadrature()?,
        corrupt_omega,
    };
    let results = harness::run_all(&opts);
    let mut body = format!("# {}\n", scenario.resolved_json());
    for r in &results {
        body.push_str(&r.line());
        body.push('\n');
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let verdict = if passed == results.len() { "PASS" } else { "FAIL" };
    body.push_str(&format!("overall: {verdict} ({passed}/{})\n", results.len()));
    emit(out, &body)?;
    Ok(if passed == results.len() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp(name: &str) -> PathBuf {
        let mut p = std::env::temp_dir();
        p.push(format!("noma-bler-test-{}-{name}", std::process::id()));
        p
    }

    #[test]
    fn resolve_precedence_file_then_flags() {
        let path = tmp("cfg.json");
        fs::write(&path, r#"{"rho_db": 22.0, "seed": 5, "trials": 10}"#).unwrap();
        let ov = Overrides {
            config: Some(path.clone()),
            seed: Some(99),
            gamma_inverse: Some("literal".into()),
            ..Default::default()
        };
        let s = resolve(defaults::figure1(), &ov).unwrap();
        assert_eq!(s.rho_db, 22.0, "file overrides the default");
        assert_eq!(s.seed, 99, "flag overrides the file");
        assert_eq!(s.trials, 10, "file keys without flags stick");
        assert_eq!(s.gamma_inverse, noma_bler::GammaInverse::Literal);
        fs::remove_file(&path).ok();
    }

    #[test]
    fn resolve_rejects_unknown_keys_and_bad_modes() {
        let path = tmp("bad.json");
        fs::write(&path, r#"{"rho": 22.0}"#).unwrap();
        let ov = Overrides { config: Some(path.clone()), ..Default::default() };
        assert!(matches!(resolve(defaults::figure1(), &ov), Err(Error::Config(_))));
        fs::remove_file(&path).ok();
        let ov = Overrides { gamma_inverse: Some("exact".into()), ..Default::default() };
        assert!(resolve(defaults::figure1(), &ov).is_err());
        let ov = Overrides { config: Some(tmp("missing.json")), ..Default::default() };
        assert!(matches!(resolve(defaults::figure1(), &ov), Err(Error::Config(_))));
    }

    #[test]
    fn error_classification() {
        assert_eq!(flag_for(&Error::Infeasible("x".into())), Some("infeasible"));
        assert_eq!(flag_for(&Error::Regime { m: 50.0 }), Some("regime"));
        assert_eq!(
            flag_for(&Error::Convergence { routine: "r", iterations: 1 }),
            Some("no-convergence")
        );
        assert_eq!(flag_for(&Error::Config("x".into())), None);
        assert_eq!(flag_for(&Error::domain("c", "m")), None);
    }

    #[test]
    fn solve_reports_infeasible_targets_as_exit_4() {
        // A far-user target far above any achievable CDF value flips the
        // residual negative at the bracket edge immediately.
        let path = tmp("solve.json");
        fs::write(
            &path,
            r#"{"eps1_target": 1e-5, "eps2_target": 0.9, "delta": 0.1, "nu": 1e-7, "quad_n": 6}"#,
        )
        .unwrap();
        let ov = Overrides { config: Some(path.clone()), ..Default::default() };
        assert_eq!(cmd_solve(&ov).unwrap(), 4);
        fs::remove_file(&path).ok();
    }

    #[test]
    fn solve_requires_explicit_targets() {
        let err = cmd_solve(&Overrides::default()).unwrap_err();
        assert!(format!("{err}").contains("missing solver keys"), "{err}");
    }

    #[test]
    fn collect_rows_flag_propagation() {
        let groups = vec![
            Ok(vec![Row::ok(vec!["1".into()])]),
            Ok(vec![Row::flagged(vec!["2".into()], 0, "infeasible")]),
        ];
        let (rows, code) = collect_rows(groups).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(code, 3);
        let groups = vec![Ok(vec![Row::ok(vec!["1".into()])])];
        assert_eq!(collect_rows(groups).unwrap().1, 0);
        let groups: Vec<Result<Vec<Row>>> = vec![Err(Error::Config("x".into()))];
        assert!(collect_rows(groups).is_err());
    }
}
