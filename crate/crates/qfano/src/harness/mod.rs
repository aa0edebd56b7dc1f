//! Named, reproducible checks with structured reports.

pub mod elim;
pub mod local;
pub mod laurent;
mod family_checks;
mod key_checks;
mod toric_checks;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::data::{family, family_ids, DataError, FamilyRecord, Kind};
use crate::groebner::{GbConfig, GbError};
use crate::poly::{Field, PolyError};
use crate::singularity::SingularityError;
use crate::vgit::VgitError;

pub use key_checks::CORRECTED_S126;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Vgit(#[from] VgitError),
    #[error(transparent)]
    Singularity(#[from] SingularityError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub anchor: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub verdict: Verdict,
    pub mode: String,
    pub family: Option<u32>,
    pub seed: u64,
    pub elapsed_ms: u64,
    pub assertions: Vec<Assertion>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub check: String,
    pub family: Option<u32>,
    /// Selects the family by d for the per-degree checks C8 and C12.
    pub d: Option<i64>,
    /// 0 for the rationals.
    pub prime: u32,
    pub seed: u64,
    /// Maximum S-pair reductions per Gröbner basis.
    pub budget: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Reports elapsed_ms as 0 so that reports are byte-identical across runs.
    pub stable_timing: bool,
}

impl CheckConfig {
    pub fn new(check: &str) -> CheckConfig {
        CheckConfig {
            check: check.to_string(),
            family: None,
            d: None,
            prime: 0,
            seed: 0,
            budget: None,
            time_limit: None,
            stable_timing: false,
        }
    }

    pub fn with_family(mut self, id: u32) -> CheckConfig {
        self.family = Some(id);
        self
    }

    pub fn with_prime(mut self, p: u32) -> CheckConfig {
        self.prime = p;
        self
    }

    pub fn with_seed(mut self, s: u64) -> CheckConfig {
        self.seed = s;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Global,
    /// One run per family.
    Family,
    /// One run per del Pezzo type family.
    DpFamily,
    /// One run per d of a del Pezzo type family.
    DpDegree,
    /// One run per d of a divisorial type family.
    DivDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    pub description: &'static str,
    pub stretch: bool,
    pub scope: Scope,
}

pub fn list_checks() -> Vec<CheckInfo> {
    let c = |id, anchor, description, scope| CheckInfo {
        id,
        anchor,
        description,
        stretch: false,
        scope,
    };
    vec![
        c("C1", "is generated by", "the twenty 3x3 minors of M and the eight listed minors generate the same ideal", Scope::Global),
        c("C2", "it vanishes at every point", "the listed minors reduce to 0 modulo the 2x2 minors of M", Scope::Global),
        c("C3", "coincides with the exceptional divisor", "the exceptional parametrization annihilates the listed minors", Scope::Global),
        c("C4", "smooth at the point with", "the gradient of F is nonzero at the listed point of F", Scope::Global),
        c("C5", "the transition functions", "transition maps between the s123- and s135-charts compose to the identity", Scope::Global),
        c("C6", "we can eliminate t135", "I is linear in t135 with coefficient s135; chart relations satisfy w2*s = D", Scope::Global),
        c("C7", "first torus action", "stage-one chamber scan and the weighted blow-up map at the s1 wall", Scope::Family),
        c("C8", "a toric flip of type", "stage-two scan for the del Pezzo type: base P^1, fibre weights, flip type", Scope::DpDegree),
        c("C9", "weighted blow-up at the s1-point", "sections homogeneous, s1-point on X, local elimination and quotient type", Scope::Family),
        c("C10", "apply the Reid-Tai criterion", "every chart quotient point is terminal", Scope::Family),
        c("C11", "quadratic part", "the Gorenstein point on the flipped curve is an ordinary cA point", Scope::DpFamily),
        c("C12", "is a conic contained in", "stage-two scan for the divisorial type: final and exceptional weights, image conic", Scope::DivDegree),
        c("C13", "del Pezzo fibre", "a general fibre is a sextic in P(1,1,2,3)", Scope::DpFamily),
        CheckInfo {
            id: "C14",
            anchor: "the products of the",
            description: "2x2 minors times F lie in the ideal of 4x4 minors of L; F in its radical; singular locus codimension",
            stretch: true,
            scope: Scope::Global,
        },
    ]
}

pub fn check_info(id: &str) -> Option<CheckInfo> {
    list_checks().into_iter().find(|c| c.id == id)
}

pub(crate) fn family_for_degree(kind: Kind, d: i64) -> Option<u32> {
    family_ids().into_iter().find(|&id| {
        let f = family(id).expect("catalogue families load");
        f.kind == kind && f.d == d
    })
}

/// Accumulates assertions; a Gröbner budget error ends the check as budget_exceeded.
pub(crate) struct Ctx {
    pub field: Field,
    pub gb: GbConfig,
    pub seed: u64,
    pub assertions: Vec<Assertion>,
    pub inapplicable: bool,
}

impl Ctx {
    pub fn assert(&mut self, anchor: &str, ok: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            anchor: anchor.to_string(),
            ok,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, anchor: &str, detail: impl Into<String>) {
        self.assert(anchor, true, detail);
    }
}

fn validate_prime(p: u32) -> Result<Field, HarnessError> {
    if p == 0 {
        return Ok(Field::Rationals);
    }
    // Sampled coefficients have numerators and denominators of size at most 50.
    if p <= 100 {
        return Err(HarnessError::Config(format!("prime {} must exceed 100", p)));
    }
    Field::prime(p).map_err(|e| HarnessError::Config(e.to_string()))
}

fn resolve_family(cfg: &CheckConfig, info: &CheckInfo) -> Result<Option<FamilyRecord>, HarnessError> {
    match info.scope {
        Scope::Global => Ok(None),
        Scope::Family | Scope::DpFamily => {
            let id = cfg
                .family
                .ok_or_else(|| HarnessError::Config(format!("{} needs --family", info.id)))?;
            Ok(Some(family(id)?))
        }
        Scope::DpDegree | Scope::DivDegree => {
            let kind = if info.scope == Scope::DpDegree { Kind::Dp } else { Kind::Div };
            match (cfg.family, cfg.d) {
                (Some(id), _) => Ok(Some(family(id)?)),
                (None, Some(d)) => match family_for_degree(kind, d) {
                    Some(id) => Ok(Some(family(id)?)),
                    None => Err(HarnessError::Config(format!("no {:?} family with d = {}", kind, d))),
                },
                (None, None) => Err(HarnessError::Config(format!("{} needs --family or --d", info.id))),
            }
        }
    }
}

pub fn run_check(cfg: &CheckConfig) -> Result<VerificationReport, HarnessError> {
    let info = check_info(&cfg.check).ok_or_else(|| HarnessError::Config(format!("unknown check `{}`", cfg.check)))?;
    let mut prime = cfg.prime;
    if info.id == "C14" && prime == 0 {
        prime = key_checks::C14_DEFAULT_PRIME;
    }
    let field = validate_prime(prime)?;
    let fam = resolve_family(cfg, &info)?;
    let mut limit = cfg.time_limit;
    if info.id == "C14" && limit.is_none() {
        limit = Some(Duration::from_secs(30 * 60));
    }
    let start = Instant::now();
    let gb = GbConfig {
        max_pairs: cfg.budget.unwrap_or(GbConfig::default().max_pairs),
        deadline: limit.map(|l| start + l),
    };
    let mut ctx = Ctx {
        field,
        gb,
        seed: cfg.seed,
        assertions: Vec::new(),
        inapplicable: false,
    };
    let wanted_kind = match info.scope {
        Scope::DpFamily | Scope::DpDegree => Some(Kind::Dp),
        Scope::DivDegree => Some(Kind::Div),
        _ => None,
    };
    let outcome = match (&fam, wanted_kind) {
        (Some(f), Some(k)) if f.kind != k => {
            ctx.inapplicable = true;
            ctx.note("scope", format!("family {} has type {:?}; {} applies to {:?}", f.id, f.kind, info.id, k));
            Ok(())
        }
        _ => dispatch(info.id, &mut ctx, fam.as_ref()),
    };
    let verdict = match outcome {
        Ok(()) if ctx.inapplicable => Verdict::Inapplicable,
        Ok(()) if ctx.assertions.iter().all(|a| a.ok) => Verdict::Pass,
        Ok(()) => Verdict::Fail,
        Err(HarnessError::Gb(e @ (GbError::Budget(_) | GbError::Deadline(_)))) => {
            ctx.assert("budget", false, e.to_string());
            // Assertions completed before the budget ran out still count.
            if ctx.assertions.iter().any(|a| !a.ok && a.anchor != "budget") {
                Verdict::Fail
            } else {
                Verdict::BudgetExceeded
            }
        }
        Err(e) => return Err(e),
    };
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(VerificationReport {
        check: info.id.to_string(),
        verdict,
        mode: if prime == 0 { "exact".to_string() } else { format!("modular({})", prime) },
        family: fam.map(|f| f.id),
        seed: cfg.seed,
        elapsed_ms: if cfg.stable_timing { 0 } else { elapsed },
        assertions: ctx.assertions,
    })
}

fn dispatch(id: &str, ctx: &mut Ctx, fam: Option<&FamilyRecord>) -> Result<(), HarnessError> {
    match (id, fam) {
        ("C1", _) => key_checks::c1(ctx),
        ("C2", _) => key_checks::c2(ctx),
        ("C3", _) => key_checks::c3(ctx),
        ("C4", _) => key_checks::c4(ctx),
        ("C5", _) => key_checks::c5(ctx),
        ("C6", _) => key_checks::c6(ctx),
        ("C14", _) => key_checks::c14(ctx),
        ("C7", Some(f)) => toric_checks::c7(ctx, f),
        ("C8", Some(f)) => toric_checks::c8(ctx, f),
        ("C10", Some(f)) => toric_checks::c10(ctx, f),
        ("C12", Some(f)) => toric_checks::c12(ctx, f),
        ("C9", Some(f)) => family_checks::c9(ctx, f),
        ("C11", Some(f)) => family_checks::c11(ctx, f),
        ("C13", Some(f)) => family_checks::c13(ctx, f),
        _ => Err(HarnessError::Config(format!("{} needs a family", id))),
    }
}

/// Configurations covering every applicable family or degree of `id`.
pub fn expand(id: &str, base: &CheckConfig) -> Result<Vec<CheckConfig>, HarnessError> {
    let info = check_info(id).ok_or_else(|| HarnessError::Config(format!("unknown check `{}`", id)))?;
    let mut cfg = base.clone();
    cfg.check = id.to_string();
    if info.scope == Scope::Global || cfg.family.is_some() || cfg.d.is_some() {
        return Ok(vec![cfg]);
    }
    let mut out = Vec::new();
    for fid in family_ids() {
        let f = family(fid)?;
        let keep = match info.scope {
            Scope::Family => true,
            Scope::DpFamily | Scope::DpDegree => f.kind == Kind::Dp,
            Scope::DivDegree => f.kind == Kind::Div,
            Scope::Global => unreachable!(),
        };
        if keep {
            let mut c = cfg.clone();
            c.family = Some(fid);
            out.push(c);
        }
    }
    Ok(out)
}

/// Every non-stretch check over all applicable families, plus the stretch checks if asked.
pub fn expand_all(base: &CheckConfig, include_stretch: bool) -> Result<Vec<CheckConfig>, HarnessError> {
    let mut out = Vec::new();
    for info in list_checks() {
        if info.stretch && !include_stretch {
            continue;
        }
        let mut b = base.clone();
        b.family = None;
        b.d = None;
        out.extend(expand(info.id, &b)?);
    }
    Ok(out)
}

fn check_number(id: &str) -> u32 {
    id.trim_start_matches('C').parse().unwrap_or(u32::MAX)
}

/// Runs checks on at most `workers` threads; results come back ordered by check id and family.
pub fn run_many(cfgs: &[CheckConfig], workers: usize) -> Vec<(CheckConfig, Result<VerificationReport, HarnessError>)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let mut out: Vec<(CheckConfig, Result<VerificationReport, HarnessError>)> =
        pool.install(|| cfgs.par_iter().map(|c| (c.clone(), run_check(c))).collect());
    out.sort_by_key(|(c, _)| (check_number(&c.check), c.family, c.d));
    out
}

/// Text diagram of a family's chamber structure: weight matrix, rays and chambers, and the
/// type of every interior wall crossing.
pub fn diagram(stage: crate::data::Stage, family_id: u32) -> Result<String, HarnessError> {
    let fam = family(family_id)?;
    let w = crate::data::weight_matrix(stage, &fam)?;
    let scan = crate::vgit::chamber_scan(&w)?;
    let mut out = format!("family {} ({:?}, d = {}), {:?} torus action\n\n{}\n{}", fam.id, fam.kind, fam.d, stage, w.render(), scan.render());
    out.push('\n');
    for k in scan.walls() {
        let c = crate::vgit::crossing_type(&w, &scan, k, &[])?;
        out.push_str(&format!("wall {} [{}]: {:?} {}\n", k, c.wall_columns.join(" "), c.kind, c.type_string()));
    }
    Ok(out)
}
