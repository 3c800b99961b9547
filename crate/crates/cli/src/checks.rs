//! Verification checks. Every check is a sweep over single instances, and
//! each instance evaluator is shared with `replay`.

use clap::ValueEnum;
use cluster_index::{
    validate_tilting, GfMersenne31, HomTable, IndObj, IndexEngine, IndexTable, IndexVector, Matrix, ModelParams,
    Rational, TiltingObject,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Witnesses kept per check report; `violations` still counts all of them.
pub const MAX_WITNESSES: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    TiltingSanity,
    Associativity,
    Serre,
    DimensionFormula,
    Disjointness,
    Injectivity,
    Collisions,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::TiltingSanity,
        CheckKind::Associativity,
        CheckKind::Serre,
        CheckKind::DimensionFormula,
        CheckKind::Disjointness,
        CheckKind::Injectivity,
        CheckKind::Collisions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::TiltingSanity => "tilting-sanity",
            CheckKind::Associativity => "associativity",
            CheckKind::Serre => "serre",
            CheckKind::DimensionFormula => "dimension-formula",
            CheckKind::Disjointness => "disjointness",
            CheckKind::Injectivity => "injectivity",
            CheckKind::Collisions => "collisions",
        }
    }
}

/// Outcome of a check, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Violations of a statement whose hypotheses exclude this case.
    Findings,
    Anomaly,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Findings => "findings",
            Status::Anomaly => "anomaly",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Detail {
    DimensionFormula {
        c: IndObj,
        x: IndObj,
        index: IndexVector,
        quotient: i64,
        ideal: i64,
        dual_quotient: i64,
        rhs: i64,
    },
    Serre {
        x: IndObj,
        y: IndObj,
        hom: i64,
        dual: i64,
    },
    Duality {
        c: IndObj,
        x: IndObj,
        ideal: i64,
        quotient: i64,
    },
    Disjointness {
        c: IndObj,
        x: IndObj,
        quotient: i64,
        dual_quotient: i64,
    },
    Collision {
        a: IndObj,
        b: IndObj,
        index_a: IndexVector,
        index_b: IndexVector,
    },
    Associativity {
        objects: Vec<IndObj>,
        left: i64,
        right: i64,
    },
    AlgebraLaw {
        message: String,
    },
    TiltingRejected {
        family: Vec<Vec<usize>>,
        reason: String,
    },
    ShiftedHom {
        t: IndObj,
        s: IndObj,
        hom: i64,
    },
    MaximalFamily {
        family: Vec<IndObj>,
        size: usize,
        expected: usize,
    },
    RankDisagreement {
        rational: usize,
        prime: usize,
        modulus: u64,
    },
    IndexFailure {
        message: String,
    },
}

/// A self-contained record of one instance, enough to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: CheckKind,
    pub n: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tilting: Option<TiltingObject>,
    pub status: Status,
    pub detail: Detail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckKind,
    pub status: Status,
    /// Instances evaluated.
    pub instances: usize,
    /// Instances that did not pass.
    pub violations: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new(check: CheckKind) -> Self {
        CheckReport { check, status: Status::Pass, instances: 0, violations: 0, witnesses: Vec::new() }
    }

    fn record(&mut self, params: &ModelParams, tilting: Option<&TiltingObject>, status: Status, detail: Detail) {
        self.instances += 1;
        if status == Status::Pass {
            return;
        }
        self.violations += 1;
        self.status = self.status.max(status);
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                check: self.check,
                n: params.n(),
                d: params.d(),
                tilting: tilting.cloned(),
                status,
                detail,
            });
        }
    }

    fn pass(&mut self, count: usize) {
        self.instances += count;
    }

    pub fn merge(&mut self, other: CheckReport) {
        debug_assert_eq!(self.check, other.check);
        self.instances += other.instances;
        self.violations += other.violations;
        self.status = self.status.max(other.status);
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
    }
}

fn odd_or_findings(params: &ModelParams) -> Status {
    if params.d() % 2 == 1 {
        Status::Fail
    } else {
        Status::Findings
    }
}

fn verdict(ok: bool, bad: Status) -> Status {
    if ok {
        Status::Pass
    } else {
        bad
    }
}

// ---- instance evaluators ----

fn dimension_instance(engine: &IndexEngine, c: usize, index: &IndexVector, x: usize) -> (Status, Detail) {
    let table = engine.table();
    let sign = table.params().sign();
    let s = engine.shifted_ids();
    let rhs: i64 = index
        .coefficients()
        .iter()
        .zip(engine.algebra().summand_ids())
        .map(|(a, &t)| a * table.hom(t, x).value())
        .sum();
    let quotient = table.quotient(c, x, s).value();
    let ideal = table.ideal(c, table.shift(x, 1), s).value();
    let dual_quotient = table.quotient(x, table.shift(c, 1), s).value();
    let ok = quotient + sign * ideal == rhs && quotient + sign * dual_quotient == rhs;
    let detail = Detail::DimensionFormula {
        c: table.object(c).clone(),
        x: table.object(x).clone(),
        index: index.clone(),
        quotient,
        ideal,
        dual_quotient,
        rhs,
    };
    (verdict(ok, Status::Fail), detail)
}

fn serre_instance(table: &HomTable, x: usize, y: usize) -> (Status, Detail) {
    let hom = table.hom(x, y).value();
    let dual = table.hom(y, table.shift(x, 2)).value();
    let detail = Detail::Serre { x: table.object(x).clone(), y: table.object(y).clone(), hom, dual };
    (verdict(hom == dual, Status::Fail), detail)
}

fn duality_instance(engine: &IndexEngine, c: usize, x: usize) -> (Status, Detail) {
    let table = engine.table();
    let s = engine.shifted_ids();
    let ideal = table.ideal(c, table.shift(x, 1), s).value();
    let quotient = table.quotient(x, table.shift(c, 1), s).value();
    let detail = Detail::Duality { c: table.object(c).clone(), x: table.object(x).clone(), ideal, quotient };
    (verdict(ideal == quotient, Status::Fail), detail)
}

fn disjointness_instance(engine: &IndexEngine, c: usize, x: usize) -> (Status, Detail) {
    let table = engine.table();
    let s = engine.shifted_ids();
    let quotient = table.quotient(c, x, s).value();
    let dual_quotient = table.quotient(x, table.shift(c, 1), s).value();
    let detail =
        Detail::Disjointness { c: table.object(c).clone(), x: table.object(x).clone(), quotient, dual_quotient };
    (verdict(quotient == 0 || dual_quotient == 0, odd_or_findings(table.params())), detail)
}

fn associativity_values(table: &HomTable, w: usize, x: usize, y: usize, z: usize) -> Option<(i64, i64)> {
    if !(table.hom(w, x).is_nonzero() && table.hom(x, y).is_nonzero() && table.hom(y, z).is_nonzero()) {
        return None;
    }
    let c = |a, b, c| table.compose(a, b, c).map(|h| h.value()).unwrap_or(0);
    Some((c(x, y, z) * c(w, x, z), c(w, x, y) * c(w, y, z)))
}

fn associativity_detail(table: &HomTable, quad: [usize; 4], left: i64, right: i64) -> Detail {
    Detail::Associativity { objects: quad.iter().map(|&i| table.object(i).clone()).collect(), left, right }
}

fn system_ranks(engine: &IndexEngine) -> (usize, usize) {
    let m = engine.table().len();
    let r = engine.algebra().rank();
    let flat: Vec<i64> = engine.system_matrix().into_iter().flatten().collect();
    (Matrix::<Rational>::from_i64(m, r, &flat).rank(), Matrix::<GfMersenne31>::from_i64(m, r, &flat).rank())
}

// ---- checks ----

/// Dimension formula in the ideal form and the Calabi-Yau quotient form,
/// with the right-hand side taken from the resolution route.
pub fn check_dimension_formula(engine: &IndexEngine) -> CheckReport {
    let table = engine.table();
    let params = table.params();
    let mut report = CheckReport::new(CheckKind::DimensionFormula);
    for (c, obj) in table.objects().iter().enumerate() {
        let index = match engine.index_of::<Rational>(obj) {
            Ok(v) => v,
            Err(e) => {
                let message = format!("resolution index of {obj}: {e}");
                report.record(params, Some(engine.tilting()), Status::Fail, Detail::IndexFailure { message });
                continue;
            }
        };
        for x in 0..table.len() {
            let (status, detail) = dimension_instance(engine, c, &index, x);
            report.record(params, Some(engine.tilting()), status, detail);
        }
    }
    report
}

/// `dim Hom(X, Y) = dim Hom(Y, Σ^{2d} X)` over all pairs.
pub fn check_serre_symmetry(table: &HomTable) -> CheckReport {
    let mut report = CheckReport::new(CheckKind::Serre);
    for x in 0..table.len() {
        for y in 0..table.len() {
            let (status, detail) = serre_instance(table, x, y);
            report.record(table.params(), None, status, detail);
        }
    }
    report
}

/// `dim Hom^{[Σ^d T]}(c, Σ^d x) = dim Hom_{C/[Σ^d T]}(x, Σ^d c)` over all pairs.
pub fn check_serre_duality(engine: &IndexEngine) -> CheckReport {
    let table = engine.table();
    let mut report = CheckReport::new(CheckKind::Serre);
    for c in 0..table.len() {
        for x in 0..table.len() {
            let (status, detail) = duality_instance(engine, c, x);
            report.record(table.params(), Some(engine.tilting()), status, detail);
        }
    }
    report
}

/// Both Serre identities; the second needs a tilting object.
pub fn check_serre(table: &HomTable, engine: Option<&IndexEngine>) -> CheckReport {
    let mut report = check_serre_symmetry(table);
    if let Some(engine) = engine {
        report.merge(check_serre_duality(engine));
    }
    report
}

/// No pair with both quotient hom spaces nonzero. Findings only at even `d`.
pub fn check_disjointness(engine: &IndexEngine) -> CheckReport {
    let table = engine.table();
    let mut report = CheckReport::new(CheckKind::Disjointness);
    for c in 0..table.len() {
        for x in 0..table.len() {
            let (status, detail) = disjointness_instance(engine, c, x);
            report.record(table.params(), Some(engine.tilting()), status, detail);
        }
    }
    report
}

fn collision_report(check: CheckKind, bad: Status, engine: &IndexEngine, indices: &IndexTable) -> CheckReport {
    let params = engine.table().params();
    let mut report = CheckReport::new(check);
    let pairs = indices.collisions();
    let m = indices.rows.len();
    report.pass(m * m.saturating_sub(1) / 2 - pairs.len());
    for (a, b) in pairs {
        let index = indices.get(&a).expect("row present").clone();
        let detail = Detail::Collision { a, b, index_a: index.clone(), index_b: index };
        report.record(params, Some(engine.tilting()), bad, detail);
    }
    report
}

/// Distinct indices for distinct indecomposables. Fails only at odd `d`.
pub fn check_injectivity(engine: &IndexEngine, indices: &IndexTable) -> CheckReport {
    collision_report(CheckKind::Injectivity, odd_or_findings(engine.table().params()), engine, indices)
}

/// Every unordered pair with equal index, reported as findings at any `d`.
pub fn find_collisions(engine: &IndexEngine, indices: &IndexTable) -> CheckReport {
    collision_report(CheckKind::Collisions, Status::Findings, engine, indices)
}

/// An index computation failure charged to `check`.
pub fn index_failure(check: CheckKind, engine: &IndexEngine, message: String) -> CheckReport {
    let mut report = CheckReport::new(check);
    report.record(engine.table().params(), Some(engine.tilting()), Status::Fail, Detail::IndexFailure { message });
    report
}

/// Rigidity of one tilting object, plus the optional prime-field rank comparison.
pub fn check_tilting(engine: &IndexEngine, prime_check: bool) -> CheckReport {
    let table = engine.table();
    let params = table.params();
    let tilting = engine.tilting();
    let mut report = CheckReport::new(CheckKind::TiltingSanity);
    match validate_tilting(tilting.summands(), params) {
        Ok(_) => report.pass(1),
        Err(e) => report.record(
            params,
            Some(tilting),
            Status::Fail,
            Detail::TiltingRejected { family: raw(tilting.summands()), reason: e.to_string() },
        ),
    }
    for &t in engine.algebra().summand_ids() {
        for &s in engine.shifted_ids() {
            let hom = table.hom(t, s).value();
            let detail = Detail::ShiftedHom { t: table.object(t).clone(), s: table.object(s).clone(), hom };
            report.record(params, Some(tilting), verdict(hom == 0, Status::Fail), detail);
        }
    }
    if prime_check {
        let (rational, prime) = system_ranks(engine);
        let detail = Detail::RankDisagreement { rational, prime, modulus: 2_147_483_647 };
        report.record(params, Some(tilting), verdict(rational == prime, Status::Anomaly), detail);
    }
    report
}

/// Maximal non-intertwining families whose size is not the tilting size.
pub fn check_maximal_families(params: &ModelParams, anomalies: &[Vec<IndObj>], families: usize) -> CheckReport {
    let mut report = CheckReport::new(CheckKind::TiltingSanity);
    report.pass(families.saturating_sub(anomalies.len()));
    for family in anomalies {
        let detail =
            Detail::MaximalFamily { family: family.clone(), size: family.len(), expected: params.tilting_size() };
        report.record(params, None, Status::Anomaly, detail);
    }
    report
}

/// A candidate family that failed to parse or validate.
pub fn rejected_family(params: &ModelParams, family: Vec<Vec<usize>>, reason: String) -> CheckReport {
    let mut report = CheckReport::new(CheckKind::TiltingSanity);
    report.record(params, None, Status::Fail, Detail::TiltingRejected { family, reason });
    report
}

/// Associativity of the composition table over every composable quadruple.
pub fn check_associativity(table: &HomTable) -> CheckReport {
    let m = table.len();
    let params = table.params();
    let mut report = CheckReport::new(CheckKind::Associativity);
    for w in 0..m {
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if let Some((left, right)) = associativity_values(table, w, x, y, z) {
                        if left == right {
                            report.pass(1);
                        } else {
                            let detail = associativity_detail(table, [w, x, y, z], left, right);
                            report.record(params, None, Status::Fail, detail);
                        }
                    }
                }
            }
        }
    }
    report
}

/// Associativity and radical structure of `End(T)`.
pub fn check_algebra_laws(engine: &IndexEngine) -> CheckReport {
    let params = engine.table().params();
    let mut report = CheckReport::new(CheckKind::Associativity);
    for law in [engine.algebra().check_associativity(), engine.algebra().check_radical()] {
        match law {
            Ok(()) => report.pass(1),
            Err(e) => report.record(
                params,
                Some(engine.tilting()),
                Status::Fail,
                Detail::AlgebraLaw { message: e.to_string() },
            ),
        }
    }
    report
}

fn raw(objs: &[IndObj]) -> Vec<Vec<usize>> {
    objs.iter().map(|o| o.elements().to_vec()).collect()
}

// ---- replay ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replay {
    pub original: Witness,
    pub recomputed: Witness,
}

fn revalidate(obj: &IndObj, table: &HomTable) -> Result<usize, CliError> {
    let fresh = IndObj::new(obj.elements().to_vec(), table.params()).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(table.index_of(&fresh)?)
}

fn replay_engine<'a>(w: &Witness, table: &'a HomTable) -> Result<IndexEngine<'a>, CliError> {
    let tilting = w.tilting.as_ref().ok_or_else(|| CliError::Usage("witness has no tilting object".into()))?;
    let tilting =
        validate_tilting(tilting.summands(), table.params()).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(IndexEngine::new(&tilting, table)?)
}

/// Recomputes the single instance a witness describes.
pub fn replay(w: &Witness) -> Result<Replay, CliError> {
    let params = ModelParams::new(w.n, w.d).map_err(|e| CliError::Usage(e.to_string()))?;
    let table = HomTable::new(params);
    let (status, detail) = match &w.detail {
        Detail::DimensionFormula { c, x, .. } => {
            let engine = replay_engine(w, &table)?;
            let index = engine.index_of::<Rational>(table.object(revalidate(c, &table)?))?;
            dimension_instance(&engine, revalidate(c, &table)?, &index, revalidate(x, &table)?)
        }
        Detail::Serre { x, y, .. } => serre_instance(&table, revalidate(x, &table)?, revalidate(y, &table)?),
        Detail::Duality { c, x, .. } => {
            let engine = replay_engine(w, &table)?;
            duality_instance(&engine, revalidate(c, &table)?, revalidate(x, &table)?)
        }
        Detail::Disjointness { c, x, .. } => {
            let engine = replay_engine(w, &table)?;
            disjointness_instance(&engine, revalidate(c, &table)?, revalidate(x, &table)?)
        }
        Detail::Collision { a, b, .. } => {
            let engine = replay_engine(w, &table)?;
            let (ia, ib) = (revalidate(a, &table)?, revalidate(b, &table)?);
            let index_a = engine.index_of::<Rational>(table.object(ia))?;
            let index_b = engine.index_of::<Rational>(table.object(ib))?;
            let bad = match w.check {
                CheckKind::Injectivity => odd_or_findings(&params),
                _ => Status::Findings,
            };
            let detail = Detail::Collision { a: a.clone(), b: b.clone(), index_a: index_a.clone(), index_b: index_b.clone() };
            (verdict(index_a != index_b, bad), detail)
        }
        Detail::Associativity { objects, .. } => {
            let ids = objects.iter().map(|o| revalidate(o, &table)).collect::<Result<Vec<_>, _>>()?;
            let quad: [usize; 4] =
                ids.try_into().map_err(|_| CliError::Usage("associativity witness needs four objects".into()))?;
            let (left, right) = associativity_values(&table, quad[0], quad[1], quad[2], quad[3])
                .ok_or_else(|| CliError::Usage("witness objects are not composable".into()))?;
            (verdict(left == right, Status::Fail), associativity_detail(&table, quad, left, right))
        }
        Detail::AlgebraLaw { .. } => {
            let report = check_algebra_laws(&replay_engine(w, &table)?);
            single(report, || Detail::AlgebraLaw { message: "associativity and radical hold".into() })
        }
        Detail::TiltingRejected { family, .. } => {
            let objs: Result<Vec<IndObj>, _> = family.iter().map(|v| IndObj::new(v.clone(), &params)).collect();
            let reason = match objs {
                Err(e) => Some(e.to_string()),
                Ok(objs) => validate_tilting(&objs, &params).err().map(|e| e.to_string()),
            };
            let status = verdict(reason.is_none(), Status::Fail);
            (status, Detail::TiltingRejected { family: family.clone(), reason: reason.unwrap_or_else(|| "valid".into()) })
        }
        Detail::ShiftedHom { t, s, .. } => {
            let (it, is) = (revalidate(t, &table)?, revalidate(s, &table)?);
            let hom = table.hom(it, is).value();
            (verdict(hom == 0, Status::Fail), Detail::ShiftedHom { t: t.clone(), s: s.clone(), hom })
        }
        Detail::MaximalFamily { family, expected, .. } => {
            let objs = family.iter().map(|o| revalidate(o, &table).map(|i| table.object(i).clone()));
            let objs = objs.collect::<Result<Vec<_>, _>>()?;
            let reason = validate_tilting(&objs, &params).err();
            let status = match reason {
                Some(cluster_index::TiltingError::Size { .. }) => Status::Anomaly,
                Some(_) => Status::Fail,
                None => Status::Pass,
            };
            (status, Detail::MaximalFamily { family: family.clone(), size: objs.len(), expected: *expected })
        }
        Detail::RankDisagreement { modulus, .. } => {
            let (rational, prime) = system_ranks(&replay_engine(w, &table)?);
            (verdict(rational == prime, Status::Anomaly), Detail::RankDisagreement { rational, prime, modulus: *modulus })
        }
        Detail::IndexFailure { .. } => {
            let engine = replay_engine(w, &table)?;
            match engine.index_table::<Rational>(cluster_index::Route::Both) {
                Ok(_) => (Status::Pass, Detail::IndexFailure { message: "both routes agree".into() }),
                Err(e) => (Status::Fail, Detail::IndexFailure { message: e.to_string() }),
            }
        }
    };
    let recomputed = Witness { status, detail, ..w.clone() };
    Ok(Replay { original: w.clone(), recomputed })
}

fn single(report: CheckReport, ok: impl FnOnce() -> Detail) -> (Status, Detail) {
    match report.witnesses.into_iter().next() {
        Some(w) => (w.status, w.detail),
        None => (Status::Pass, ok()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cluster_index::{enumerate_tilting, Route};

    fn setup(n: usize, d: usize) -> (HomTable, Vec<TiltingObject>) {
        let params = ModelParams::new(n, d).unwrap();
        (HomTable::new(params), enumerate_tilting(&params).tilting)
    }

    #[test]
    fn pentagon_passes_everything() {
        let (table, tiltings) = setup(2, 1);
        assert_eq!(check_serre_symmetry(&table).status, Status::Pass);
        assert_eq!(check_associativity(&table).status, Status::Pass);
        for t in &tiltings {
            let engine = IndexEngine::new(t, &table).unwrap();
            let indices = engine.index_table::<Rational>(Route::Both).unwrap();
            let dim = check_dimension_formula(&engine);
            assert_eq!((dim.status, dim.instances), (Status::Pass, 25));
            assert_eq!(check_serre_duality(&engine).status, Status::Pass);
            assert_eq!(check_disjointness(&engine).status, Status::Pass);
            assert_eq!(check_injectivity(&engine, &indices).status, Status::Pass);
            assert_eq!(check_tilting(&engine, true).status, Status::Pass);
            assert_eq!(check_algebra_laws(&engine).status, Status::Pass);
        }
    }

    #[test]
    fn even_d_collisions_are_findings() {
        let (table, tiltings) = setup(2, 2);
        for t in &tiltings {
            let engine = IndexEngine::new(t, &table).unwrap();
            let indices = engine.index_table::<Rational>(Route::Both).unwrap();
            let report = check_injectivity(&engine, &indices);
            assert_eq!(report.status, Status::Findings);
            assert_eq!(report.instances, 21);
            assert!(!report.witnesses.is_empty());
        }
    }

    #[test]
    fn replay_reproduces_a_collision() {
        let (table, tiltings) = setup(2, 2);
        let engine = IndexEngine::new(&tiltings[0], &table).unwrap();
        let indices = engine.index_table::<Rational>(Route::Both).unwrap();
        let w = find_collisions(&engine, &indices).witnesses[0].clone();
        let r = replay(&w).unwrap();
        assert_eq!(r.recomputed, w);
    }

    #[test]
    fn replay_flags_a_doctored_witness() {
        let (table, _) = setup(2, 1);
        let (_, detail) = serre_instance(&table, 0, 1);
        let mut w = Witness { check: CheckKind::Serre, n: 2, d: 1, tilting: None, status: Status::Fail, detail };
        if let Detail::Serre { hom, .. } = &mut w.detail {
            *hom = 7;
        }
        let r = replay(&w).unwrap();
        assert_eq!(r.recomputed.status, Status::Pass);
        assert_ne!(r.recomputed.detail, w.detail);
    }

    #[test]
    fn maximal_families_at_d3_are_anomalies() {
        let params = ModelParams::new(2, 3).unwrap();
        let e = enumerate_tilting(&params);
        let report = check_maximal_families(&params, &e.anomalies, e.tilting.len() + e.anomalies.len());
        assert_eq!(report.status, Status::Anomaly);
        assert_eq!(report.violations, 3);
        assert_eq!(replay(&report.witnesses[0]).unwrap().recomputed.status, Status::Anomaly);
    }
}
