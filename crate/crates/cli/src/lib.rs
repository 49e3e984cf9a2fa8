//! Command-line orchestration for `syzlab`: input parsing, caching and
//! versioned JSON reports.

pub mod cache;
pub mod config;
pub mod input;
mod report;

use std::fs;
use std::io::Read;

use serde_json::{json, Value};
use syzlab::checks::{
    anticanonical_width_scan, clifford_prediction, duality_identity_check, exactness_check,
    green_check, hering_schenck_check, interior_boundary_scan, linear_strand_check,
    serre_duality_check, sum_formula_check, sum_formula_hypotheses, CheckError, EnumerationError,
    PredicateReport,
};
use syzlab::curve::{
    curve_betti, CurveBetti, CurveError, CurveOptions, LaurentPolynomial, SamplingMode,
};
use syzlab::fan::Fan;
use syzlab::koszul::{surface_betti_of, untwisted_c, KoszulError, KoszulOptions, SurfaceComplex};
use syzlab::lattice::{Hull, LatticePolygon};

use cache::{Cache, CacheKey};
use config::{Command, RunConfig};
pub use report::render_text;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SCHEMA: u64 = 1;

/// Largest genus for which `verify` recomputes `c` from the untwisted complex.
pub const SERRE_CHECK_MAX_GENUS: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    CheckFailed = 1,
    InvalidInput = 2,
    BudgetExceeded = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    /// Pretty-printed report JSON, newline-terminated.
    pub report: Option<String>,
    pub diagnostics: Vec<String>,
    pub cache_hit: bool,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
    Check(String),
}

impl From<KoszulError> for Failure {
    fn from(e: KoszulError) -> Self {
        match e {
            KoszulError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            KoszulError::DegenerateInterior | KoszulError::GenusTooSmall(_) => {
                Failure::Input(e.to_string())
            }
            KoszulError::RegionMismatch(_) => Failure::Check(e.to_string()),
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Koszul(k) => k.into(),
            CurveError::ConsistencyFailure(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        Failure::Budget(e.to_string())
    }
}

/// Executes one command. Never panics on bad input; the exit status carries
/// the outcome.
pub fn run(cfg: &RunConfig) -> Outcome {
    match run_inner(cfg) {
        Ok((report, cache_hit)) => {
            let status = if report_passes(&report) {
                ExitStatus::Success
            } else {
                ExitStatus::CheckFailed
            };
            Outcome {
                status,
                report: Some(report),
                diagnostics: Vec::new(),
                cache_hit,
            }
        }
        Err(f) => {
            let (status, msg) = match f {
                Failure::Input(m) => (ExitStatus::InvalidInput, m),
                Failure::Budget(m) => (ExitStatus::BudgetExceeded, m),
                Failure::Check(m) => (ExitStatus::CheckFailed, m),
            };
            Outcome {
                status,
                report: None,
                diagnostics: vec![format!("error: {msg}")],
                cache_hit: false,
            }
        }
    }
}

fn report_passes(report: &str) -> bool {
    let v: Value = serde_json::from_str(report).expect("reports are valid JSON");
    v.get("checks")
        .and_then(Value::as_array)
        .is_none_or(|cs| {
            cs.iter()
                .all(|c| c.get("status").and_then(Value::as_str) != Some("fail"))
        })
}

fn read_input(cfg: &RunConfig) -> Result<(LatticePolygon, Option<LaurentPolynomial>), Failure> {
    let path = cfg.input.as_ref().expect("validated");
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{name}: {e}")))?
    };
    let parsed = input::parse_input(&text).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
    let f = match &cfg.f {
        Some(expr) => Some(input::parse_f(expr).map_err(|e| Failure::Input(format!("--f: {e}")))?),
        None => parsed.f,
    };
    Ok((parsed.polygon, f))
}

fn koszul_options(cfg: &RunConfig) -> Result<KoszulOptions, Failure> {
    Ok(KoszulOptions {
        primes: cfg.primes.clone(),
        budget: cfg.budget,
        backend: cfg
            .rank_backend()
            .map_err(|e| Failure::Input(e.to_string()))?,
    })
}

fn curve_options(cfg: &RunConfig, f: Option<LaurentPolynomial>) -> Result<CurveOptions, Failure> {
    Ok(CurveOptions {
        koszul: koszul_options(cfg)?,
        trials: cfg.trials,
        seed: cfg.seed,
        mode: if cfg.boundary_only {
            SamplingMode::Boundary
        } else {
            SamplingMode::Full
        },
        explicit: f,
    })
}

fn run_inner(cfg: &RunConfig) -> Result<(String, bool), Failure> {
    cfg.validate().map_err(|e| Failure::Input(e.to_string()))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Failure::Input(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cfg))
}

fn dispatch(cfg: &RunConfig) -> Result<(String, bool), Failure> {
    if cfg.command == Command::Enumerate {
        return Ok((finish(enumerate(cfg)?), false));
    }
    let (polygon, f) = read_input(cfg)?;
    match cfg.command {
        Command::Analyze => Ok((finish(analyze(&polygon)?), false)),
        Command::Resolve => Ok((finish(resolve(&polygon)), false)),
        _ => cached(cfg, polygon, f),
    }
}

/// Betti computations depend only on the equivalence class of `Δ`, so they
/// run on the canonical form unless an explicit `f` pins the coordinates.
fn cached(
    cfg: &RunConfig,
    polygon: LatticePolygon,
    f: Option<LaurentPolynomial>,
) -> Result<(String, bool), Failure> {
    let delta = if f.is_some() {
        polygon
    } else {
        polygon.canonical_form()
    };
    let key = CacheKey {
        tag: cfg.command.tag().to_string(),
        vertices: serde_json::to_string(delta.vertices()).expect("serializable"),
        primes: cfg.primes.clone(),
        version: VERSION,
        extra: match cfg.command {
            Command::BettiSurface => String::new(),
            _ => format!(
                "seed={};trials={};boundary_only={};f={}",
                cfg.seed,
                cfg.trials,
                cfg.boundary_only,
                f.as_ref().map(|f| f.to_string()).unwrap_or_default()
            ),
        },
    };
    let cache = cfg.cache_dir.as_ref().map(Cache::new);
    if let Some(hit) = cache.as_ref().and_then(|c| c.load(&key)) {
        return Ok((hit, true));
    }
    let body = match cfg.command {
        Command::BettiSurface => betti_surface(cfg, &delta)?,
        Command::BettiCurve => betti_curve(cfg, &delta, f)?.0,
        Command::Verify => verify(cfg, &delta, f)?,
        _ => unreachable!("uncached command"),
    };
    let payload = finish(body);
    if let Some(c) = &cache {
        // a failed cache write only costs a recomputation later
        let _ = c.store(&key, &payload);
    }
    Ok((payload, false))
}

/// Adds the envelope fields and renders the report.
fn finish(mut body: Value) -> String {
    let obj = body.as_object_mut().expect("report bodies are objects");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("version".into(), json!(VERSION));
    let mut s = serde_json::to_string_pretty(&body).expect("serializable");
    s.push('\n');
    s
}

fn interior_of(delta: &LatticePolygon) -> Result<LatticePolygon, Failure> {
    match delta.interior_hull() {
        Hull::Polygon(p) => Ok(p),
        _ => Err(Failure::Input(CheckError::DegenerateInterior.to_string())),
    }
}

fn analyze(delta: &LatticePolygon) -> Result<Value, Failure> {
    let inner = interior_of(delta)?;
    let clifford = clifford_prediction(delta)?;
    let t2 = sum_formula_hypotheses(delta)?;
    let (lw, dir) = delta.lattice_width();
    let (inner_lw, inner_dir) = inner.lattice_width();
    Ok(json!({
        "command": "analyze",
        "polygon": delta,
        "genus": inner.point_count(),
        "lattice_width": lw,
        "width_direction": dir,
        "boundary_points": delta.boundary_count(),
        "interior": {
            "polygon": inner,
            "lattice_width": inner_lw,
            "width_direction": inner_dir,
            "boundary_points": inner.boundary_count(),
            "special": inner.detect_special().label(),
        },
        "gorenstein_weak_fano": {
            "outer": t2.outer_gorenstein_weak_fano,
            "interior": t2.gorenstein_weak_fano,
        },
        "clifford": clifford,
        "hypotheses": t2,
        "sum_formula_predicted": t2.sum_formula_predicted(),
        "checks": [t2.substitution_report()],
    }))
}

fn resolve(delta: &LatticePolygon) -> Value {
    let fan = Fan::normal_fan(delta);
    let res = fan.minimal_resolution();
    json!({
        "command": "resolve",
        "polygon": delta,
        "smooth": fan.is_smooth(),
        "gorenstein_weak_fano": fan.is_gorenstein_weak_fano(),
        "resolution": res,
        "minimal": res.is_minimal(),
    })
}

fn betti_surface(cfg: &RunConfig, delta: &LatticePolygon) -> Result<Value, Failure> {
    let cx = SurfaceComplex::from_outer(delta)?;
    let opts = koszul_options(cfg)?;
    cx.check_budget(&cx.betti_plan(), &opts)?;
    let s = surface_betti_of(&cx, &opts)?;
    let checks = vec![prime_agreement(s.primes_agree)];
    Ok(json!({
        "command": "betti-surface",
        "polygon": delta,
        "g": s.g,
        "b": s.b,
        "c": s.c,
        "primes": s.primes,
        "per_prime": s.per_prime,
        "primes_agree": s.primes_agree,
        "checks": checks,
    }))
}

fn prime_agreement(agree: bool) -> PredicateReport {
    PredicateReport::new(
        "prime_agreement",
        agree,
        "surface ranks agree across primes",
        &[("agree", agree as i64)],
    )
}

fn betti_curve(
    cfg: &RunConfig,
    delta: &LatticePolygon,
    f: Option<LaurentPolynomial>,
) -> Result<(Value, CurveBetti), Failure> {
    let cb = curve_betti(delta, &curve_options(cfg, f)?)?;
    let mut body = serde_json::to_value(&cb).expect("serializable");
    let obj = body.as_object_mut().unwrap();
    obj.insert("command".into(), json!("betti-curve"));
    obj.insert("polygon".into(), json!(delta));
    let six: Vec<Value> = (1..=cb.g as i64 - 2)
        .map(|l| json!({ "l": l, "dims": cb.six_term(l) }))
        .collect();
    obj.insert("six_term".into(), json!(six));
    Ok((body, cb))
}

fn verify(
    cfg: &RunConfig,
    delta: &LatticePolygon,
    f: Option<LaurentPolynomial>,
) -> Result<Value, Failure> {
    let inner = interior_of(delta)?;
    let clifford = clifford_prediction(delta)?;
    let t2 = sum_formula_hypotheses(delta)?;
    let (mut body, cb) = betti_curve(cfg, delta, f)?;
    let g = cb.g;
    let mut checks = vec![
        green_check(&cb.a, g, clifford.value),
        linear_strand_check(&cb.b, &inner),
        hering_schenck_check(&cb.c, &inner),
        duality_identity_check(&cb.b, &cb.c, g),
        exactness_check(&cb.a, &cb.b, &cb.c, g),
        if t2.sum_formula_predicted() {
            sum_formula_check(&cb.a, &cb.b, &cb.c)
        } else {
            PredicateReport::skipped("sum_formula", "neither hypothesis holds")
        },
        t2.substitution_report(),
    ];
    if g <= SERRE_CHECK_MAX_GENUS {
        let cx = SurfaceComplex::from_outer(delta)?;
        let opts = koszul_options(cfg)?;
        checks.push(serre_duality_check(&cb.c, &untwisted_c(&cx, &opts)?));
    } else {
        checks.push(PredicateReport::skipped(
            "serre_duality",
            format!("genus {g} above {SERRE_CHECK_MAX_GENUS}"),
        ));
    }
    checks.push(prime_agreement(cb.surface.primes_agree));
    let agree = cb.induced.iter().all(|r| r.samples_agree());
    checks.push(PredicateReport::new(
        "sample_agreement",
        agree,
        "induced ranks agree across samples and primes",
        &[("agree", agree as i64)],
    ));
    let obj = body.as_object_mut().unwrap();
    obj.insert("command".into(), json!("verify"));
    obj.insert("clifford".into(), json!(clifford));
    obj.insert("hypotheses".into(), json!(t2));
    obj.insert("checks".into(), json!(checks));
    Ok(body)
}

fn enumerate(cfg: &RunConfig) -> Result<Value, Failure> {
    let scan = interior_boundary_scan(cfg.max_points)?;
    let width = anticanonical_width_scan(cfg.max_points)?;
    let violators: Vec<Value> = scan
        .violators
        .iter()
        .map(|p| json!({ "polygon": p, "special": p.detect_special().label() }))
        .collect();
    Ok(json!({
        "command": "enumerate",
        "max_points": scan.max_points,
        "polygons": scan.polygons,
        "interior_polygons": scan.interior_polygons,
        "violators": violators,
        "checks": [scan.report, width],
    }))
}
