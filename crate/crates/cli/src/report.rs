//! Sweeps over cases and tilting objects, assembled into a versioned report.

use std::time::Instant;

use cluster_index::{enumerate_tilting, validate_tilting, HomTable, IndObj, IndexEngine, ModelParams, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checks::{self, CheckKind, CheckReport, Status};
use crate::config::{parse_family, Case, ConfigEcho, SweepConfig, TiltingScope};
use crate::error::{CliError, EXIT_ANOMALY, EXIT_FAILED, EXIT_OK};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub n: usize,
    pub d: usize,
    pub objects: usize,
    pub tilting_objects: usize,
    pub status: Status,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub status: Status,
    pub failed: usize,
    pub anomalies: usize,
    pub findings: usize,
    pub exit_code: i32,
}

/// Wall-clock timings, kept apart from the data so reports stay comparable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
    pub cases_ms: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &checks::Witness> {
        self.cases.iter().flat_map(|c| c.checks.iter()).flat_map(|c| c.witnesses.iter())
    }
}

pub fn exit_code_for(status: Status) -> i32 {
    match status {
        Status::Fail => EXIT_FAILED,
        Status::Anomaly => EXIT_ANOMALY,
        Status::Pass | Status::Findings => EXIT_OK,
    }
}

/// Tilting objects a case visits, plus whatever did not validate.
pub struct ScopedTilting {
    pub tilting: Vec<cluster_index::TiltingObject>,
    pub rejected: Vec<(Vec<Vec<usize>>, String)>,
    /// Maximal families of the wrong size, when the scope enumerates.
    pub anomalies: Option<(Vec<Vec<IndObj>>, usize)>,
}

pub fn resolve_scope(scope: &TiltingScope, params: &ModelParams) -> Result<ScopedTilting, CliError> {
    match scope {
        TiltingScope::All | TiltingScope::First(_) => {
            let e = enumerate_tilting(params);
            let families = e.tilting.len() + e.anomalies.len();
            let mut tilting = e.tilting;
            if let TiltingScope::First(k) = scope {
                tilting.truncate(*k);
            }
            Ok(ScopedTilting { tilting, rejected: Vec::new(), anomalies: Some((e.anomalies, families)) })
        }
        TiltingScope::Explicit(families) => {
            let mut out = ScopedTilting { tilting: Vec::new(), rejected: Vec::new(), anomalies: None };
            for text in families {
                let family = parse_family(text)?;
                let objs: Result<Vec<IndObj>, _> = family.iter().map(|v| IndObj::new(v.clone(), params)).collect();
                match objs.map_err(|e| e.to_string()).and_then(|o| validate_tilting(&o, params).map_err(|e| e.to_string())) {
                    Ok(t) => out.tilting.push(t),
                    Err(reason) => out.rejected.push((family, reason)),
                }
            }
            Ok(out)
        }
    }
}

fn run_case(case: Case, config: &SweepConfig) -> Result<CaseReport, CliError> {
    let params = case.params()?;
    let table = HomTable::new(params);
    let scope = resolve_scope(&config.tilting, &params)?;
    let engines = scope.tilting.iter().map(|t| IndexEngine::new(t, &table)).collect::<Result<Vec<_>, _>>()?;
    let selected = config.selected_checks();
    let wants = |c: CheckKind| selected.contains(&c);

    let needs_index = wants(CheckKind::Injectivity) || wants(CheckKind::Collisions);
    let indices: Vec<_> = if needs_index {
        engines.par_iter().map(|e| Some(e.index_table::<Rational>(config.route).map_err(|err| err.to_string()))).collect()
    } else {
        engines.iter().map(|_| None).collect()
    };

    let mut reports = Vec::new();
    for check in CheckKind::ALL {
        let wanted = wants(check);
        if !wanted && !(check == CheckKind::TiltingSanity && !scope.rejected.is_empty()) {
            continue;
        }
        let per_tilting: Vec<CheckReport> = match check {
            CheckKind::TiltingSanity => engines.par_iter().map(|e| checks::check_tilting(e, config.prime_check)).collect(),
            CheckKind::Associativity => engines.par_iter().map(checks::check_algebra_laws).collect(),
            CheckKind::Serre => engines.par_iter().map(checks::check_serre_duality).collect(),
            CheckKind::DimensionFormula => engines.par_iter().map(checks::check_dimension_formula).collect(),
            CheckKind::Disjointness => engines.par_iter().map(checks::check_disjointness).collect(),
            CheckKind::Injectivity | CheckKind::Collisions => engines
                .iter()
                .zip(&indices)
                .map(|(e, idx)| match idx.as_ref().expect("computed when selected") {
                    Ok(t) if check == CheckKind::Injectivity => checks::check_injectivity(e, t),
                    Ok(t) => checks::find_collisions(e, t),
                    Err(message) => checks::index_failure(check, e, message.clone()),
                })
                .collect(),
        };
        let mut report = match check {
            CheckKind::Associativity => checks::check_associativity(&table),
            CheckKind::Serre => checks::check_serre_symmetry(&table),
            _ => CheckReport::new(check),
        };
        if check == CheckKind::TiltingSanity {
            for (family, reason) in &scope.rejected {
                report.merge(checks::rejected_family(&params, family.clone(), reason.clone()));
            }
            if let Some((anomalies, families)) = &scope.anomalies {
                report.merge(checks::check_maximal_families(&params, anomalies, *families));
            }
        }
        for r in per_tilting {
            report.merge(r);
        }
        reports.push(report);
    }
    let status = reports.iter().map(|r| r.status).max().unwrap_or(Status::Pass);
    Ok(CaseReport {
        n: case.n,
        d: case.d,
        objects: table.len(),
        tilting_objects: scope.tilting.len(),
        status,
        checks: reports,
    })
}

pub fn run_sweep(config: &SweepConfig) -> Result<VerificationReport, CliError> {
    config.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let results: Vec<(CaseReport, f64)> = pool.install(|| {
        config
            .cases
            .par_iter()
            .map(|&case| {
                let t = Instant::now();
                run_case(case, config).map(|r| (r, t.elapsed().as_secs_f64() * 1e3))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    let (cases, cases_ms): (Vec<CaseReport>, Vec<f64>) = results.into_iter().unzip();

    let all = cases.iter().flat_map(|c| c.checks.iter());
    let count = |s: Status| cases.iter().flat_map(|c| c.checks.iter()).filter(|r| r.status == s).count();
    let status = all.map(|r| r.status).max().unwrap_or(Status::Pass);
    let summary = Summary {
        status,
        failed: count(Status::Fail),
        anomalies: count(Status::Anomaly),
        findings: count(Status::Findings),
        exit_code: exit_code_for(status),
    };
    let timing = config.timing.then(|| Timing { total_ms: start.elapsed().as_secs_f64() * 1e3, cases_ms });
    Ok(VerificationReport { schema_version: SCHEMA_VERSION, config: config.echo(), cases, summary, timing })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: usize, d: usize) -> SweepConfig {
        SweepConfig { cases: vec![Case { n, d }], ..Default::default() }
    }

    #[test]
    fn pentagon_sweep_is_clean() {
        let report = run_sweep(&config(2, 1)).unwrap();
        assert_eq!(report.summary.status, Status::Pass);
        assert_eq!(report.exit_code(), EXIT_OK);
        assert_eq!(report.cases[0].tilting_objects, 5);
        assert_eq!(report.cases[0].checks.len(), CheckKind::ALL.len());
    }

    #[test]
    fn even_d_reports_findings_without_failing() {
        let report = run_sweep(&config(2, 2)).unwrap();
        assert_eq!(report.summary.status, Status::Findings);
        assert_eq!(report.exit_code(), EXIT_OK);
    }

    #[test]
    fn d3_maximal_families_raise_anomaly() {
        let mut c = config(2, 3);
        c.checks = vec![CheckKind::TiltingSanity];
        let report = run_sweep(&c).unwrap();
        assert_eq!(report.summary.status, Status::Anomaly);
        assert_eq!(report.exit_code(), EXIT_ANOMALY);
    }

    #[test]
    fn rejected_explicit_family_fails() {
        let mut c = config(2, 2);
        c.tilting = TiltingScope::Explicit(vec!["1,3,5;2,4,6".into()]);
        c.checks = vec![CheckKind::Injectivity];
        let report = run_sweep(&c).unwrap();
        assert_eq!(report.exit_code(), EXIT_FAILED);
        let sanity = &report.cases[0].checks[0];
        assert_eq!(sanity.check, CheckKind::TiltingSanity);
        assert!(!sanity.witnesses.is_empty());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let mut c = SweepConfig { cases: vec![Case { n: 2, d: 1 }, Case { n: 3, d: 1 }, Case { n: 2, d: 2 }], ..Default::default() };
        c.workers = Some(1);
        let a = serde_json::to_string(&run_sweep(&c).unwrap()).unwrap();
        c.workers = Some(4);
        let b = serde_json::to_string(&run_sweep(&c).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
