//! Acceptance suite. Prints one line per criterion and fails if any is red.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use syzlab::checks::{
    clifford_prediction, duality_identity_check, genus, green_check, hering_schenck_check,
    interior_boundary_scan, reflexive_classes, serre_duality_check, sum_formula_check,
};
use syzlab::curve::{
    curve_betti, CoefficientAssignment, CurveBetti, CurveOptions, InducedSetup, LaurentPolynomial,
};
use syzlab::fan::fujita_check;
use syzlab::koszul::{untwisted_c, DiffKey, KoszulOptions, Piece, SurfaceComplex, DEFAULT_PRIMES};
use syzlab::lattice::{pt, Hull, LatticePoint, LatticePolygon, SpecialShape, UnimodularAffineMap};
use syzlab_cli::config::{Command, RunConfig};
use syzlab_cli::{run, ExitStatus};

const GENUS12_A: [u64; 9] = [45, 231, 550, 693, 399, 69, 0, 0, 0];
const GENUS12_B: [u64; 9] = [39, 186, 414, 504, 295, 69, 0, 0, 0];
const GENUS12_C: [u64; 9] = [6, 45, 136, 189, 105, 1, 0, 0, 0];
const GENUS12_SIX_TERM: [u64; 6] = [295, 399, 105, 1, 69, 69];
const GENUS12_LIMIT: Duration = Duration::from_secs(600);
const SUM_FORMULA_LIMIT: Duration = Duration::from_secs(120);
const SCAN_LIMIT: Duration = Duration::from_secs(300);
const CORPUS_SIZE: usize = 200;
const MAPS_PER_POLYGON: usize = 100;

type Verdict = Result<String, String>;

struct Instance {
    name: &'static str,
    delta: LatticePolygon,
    betti: CurveBetti,
}

fn genus12() -> LatticePolygon {
    LatticePolygon::new([pt(0, 2), pt(6, 0), pt(2, 6)]).unwrap()
}

fn genus12_f() -> LaurentPolynomial {
    LaurentPolynomial::parse("x^6+y^2+x^2*y^6").unwrap()
}

fn gwf_instances() -> Vec<(&'static str, LatticePolygon)> {
    vec![
        ("5Σ", LatticePolygon::sigma(5)),
        ("[0,4]²", LatticePolygon::rectangle(0, 4, 0, 4)),
        ("[0,3]×[0,4]", LatticePolygon::rectangle(0, 3, 0, 4)),
        (
            "conv{(0,0),(6,0),(0,3)}",
            LatticePolygon::new([pt(0, 0), pt(6, 0), pt(0, 3)]).unwrap(),
        ),
    ]
}

fn curve_opts(explicit: Option<LaurentPolynomial>) -> CurveOptions {
    CurveOptions {
        explicit,
        ..CurveOptions::default()
    }
}

fn cli_json(command: Command, input: &str, f: Option<&str>) -> (ExitStatus, Option<Value>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.json");
    std::fs::write(&path, input).unwrap();
    let mut cfg = RunConfig::new(command);
    cfg.input = Some(path);
    cfg.json = true;
    cfg.f = f.map(str::to_string);
    let out = run(&cfg);
    (
        out.status,
        out.report.map(|r| serde_json::from_str(&r).unwrap()),
    )
}

fn u64s(v: &Value) -> Vec<u64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect()
}

fn check(cond: bool, ok: String, bad: String) -> Verdict {
    if cond {
        Ok(ok)
    } else {
        Err(bad)
    }
}

fn criterion_1_and_2() -> (Verdict, Verdict) {
    let t = Instant::now();
    let input = r#"{"vertices":[[0,2],[6,0],[2,6]]}"#;
    let (status, report) = cli_json(Command::Verify, input, Some("x^6+y^2+x^2*y^6"));
    let elapsed = t.elapsed();
    let Some(report) = report else {
        let e = Err(format!("verify exited with {status:?} and no report"));
        return (e.clone(), e);
    };
    let (a, b, c, r) = (
        u64s(&report["a"]),
        u64s(&report["b"]),
        u64s(&report["c"]),
        u64s(&report["r"]),
    );
    let first = check(
        status == ExitStatus::Success
            && a == GENUS12_A
            && b == GENUS12_B
            && c == GENUS12_C
            && r.get(4) == Some(&1)
            && elapsed <= GENUS12_LIMIT,
        format!("a, b, c exact, r5 = 1, exit 0, {:.1?}", elapsed),
        format!("status {status:?}, a {a:?}, b {b:?}, c {c:?}, r {r:?}, {elapsed:.1?}"),
    );
    let six = report["six_term"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["l"] == 5)
        .map(|e| u64s(&e["dims"]))
        .unwrap_or_default();
    let second = check(
        six == GENUS12_SIX_TERM,
        format!("l = 5: {six:?}"),
        format!("l = 5 reported {six:?}"),
    );
    (first, second)
}

fn criterion_3(instances: &[Instance], elapsed: Duration) -> Verdict {
    let mut bad = Vec::new();
    for inst in instances {
        let zero_ranks = inst
            .betti
            .induced
            .iter()
            .all(|res| res.per_prime.values().flatten().all(|&x| x == 0));
        let all_samples = inst
            .betti
            .induced
            .iter()
            .filter(|res| !res.trivial)
            .all(|res| res.per_prime.len() == 2 && res.per_prime.values().all(|v| v.len() == 3));
        let sum = sum_formula_check(&inst.betti.a, &inst.betti.b, &inst.betti.c);
        if !zero_ranks || !all_samples || !sum.passed() {
            bad.push(format!(
                "{}: r {:?}, {}",
                inst.name, inst.betti.r, sum.detail
            ));
        }
    }
    if elapsed > SUM_FORMULA_LIMIT {
        bad.push(format!("runtime {elapsed:.1?}"));
    }
    check(
        bad.is_empty(),
        format!(
            "a = b + c on {} instances, {} maps sampled (3 samples x 2 primes), {} with zero source or target, {:.1?}",
            instances.len(),
            instances.iter().flat_map(|i| &i.betti.induced).filter(|r| !r.trivial).count(),
            instances.iter().flat_map(|i| &i.betti.induced).filter(|r| r.trivial).count(),
            elapsed
        ),
        bad.join("; "),
    )
}

fn per_instance(instances: &[Instance], f: impl Fn(&Instance) -> Result<(), String>) -> Verdict {
    let bad: Vec<String> = instances
        .iter()
        .filter_map(|i| f(i).err().map(|e| format!("{}: {e}", i.name)))
        .collect();
    check(
        bad.is_empty(),
        format!("{} instances", instances.len()),
        bad.join("; "),
    )
}

fn interior(delta: &LatticePolygon) -> LatticePolygon {
    match delta.interior_hull() {
        Hull::Polygon(p) => p,
        other => panic!("interior of {delta} is a {}", other.tag()),
    }
}

fn criterion_4(all: &[Instance]) -> Verdict {
    per_instance(all, |i| {
        let r = hering_schenck_check(&i.betti.c, &interior(&i.delta));
        if r.passed() {
            Ok(())
        } else {
            Err(r.detail)
        }
    })
}

fn criterion_5(all: &[Instance]) -> Verdict {
    let g12 = all
        .iter()
        .find(|i| i.betti.g == 12)
        .expect("genus-12 instance");
    let lhs = g12.betti.b(5) as i64 + g12.betti.c(5) as i64
        - g12.betti.c(6) as i64
        - g12.betti.b(6) as i64;
    let aside = g12.betti.a(5) as i64 - g12.betti.a(6) as i64;
    if lhs != 330 || aside != 330 {
        return Err(format!("genus 12, l = 5: b + c side {lhs}, a side {aside}"));
    }
    per_instance(all, |i| {
        let r = duality_identity_check(&i.betti.b, &i.betti.c, i.betti.g);
        if r.passed() {
            Ok(())
        } else {
            Err(r.detail)
        }
    })
    .map(|s| format!("{s}, 330 = 399 - 69 at g = 12"))
}

fn criterion_6(all: &[Instance]) -> Verdict {
    let small: Vec<&Instance> = all.iter().filter(|i| i.betti.g <= 9).collect();
    let mut bad = Vec::new();
    for i in &small {
        let cx = SurfaceComplex::from_outer(&i.delta).unwrap();
        let dual = untwisted_c(&cx, &KoszulOptions::default()).unwrap();
        let r = serre_duality_check(&i.betti.c, &dual);
        if !r.passed() {
            bad.push(format!("{}: {}", i.name, r.detail));
        }
    }
    check(
        bad.is_empty() && !small.is_empty(),
        format!("{} instances with g ≤ 9", small.len()),
        format!("{bad:?} over {} instances", small.len()),
    )
}

fn criterion_7(all: &[Instance]) -> Verdict {
    per_instance(all, |i| {
        let ci = clifford_prediction(&i.delta).map_err(|e| e.to_string())?;
        let r = green_check(&i.betti.a, i.betti.g, ci.value);
        if r.passed() {
            Ok(())
        } else {
            Err(r.detail)
        }
    })
}

fn criterion_8() -> Verdict {
    let t = Instant::now();
    let scan = interior_boundary_scan(12).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let shapes: Vec<SpecialShape> = scan.violators.iter().map(|p| p.detect_special()).collect();
    check(
        shapes == [SpecialShape::Upsilon] && elapsed <= SCAN_LIMIT,
        format!(
            "violators {{Υ}} among {} interior polygons, {:.1?}",
            scan.interior_polygons, elapsed
        ),
        format!("violators {shapes:?}, {elapsed:.1?}"),
    )
}

fn criterion_9() -> Verdict {
    let delta = LatticePolygon::new([pt(4, 0), pt(0, 10), pt(10, 4)]).unwrap();
    let inner = interior(&delta);
    let (g, lw, boundary) = (
        genus(&delta),
        inner.lattice_width().0,
        inner.boundary_count(),
    );
    let (status, report) = cli_json(
        Command::BettiSurface,
        r#"{"vertices":[[4,0],[0,10],[10,4]]}"#,
        None,
    );
    check(
        (g, lw, boundary) == (36, 8, 9) && status == ExitStatus::BudgetExceeded && report.is_none(),
        "g = 36, lw = 8, boundary 9, betti-surface refused with exit 3".into(),
        format!("g {g}, lw {lw}, boundary {boundary}, status {status:?}"),
    )
}

fn random_polygon(rng: &mut ChaCha8Rng) -> LatticePolygon {
    loop {
        let n = rng.gen_range(3..9);
        let pts: Vec<LatticePoint> = (0..n)
            .map(|_| pt(rng.gen_range(-6..=6), rng.gen_range(-6..=6)))
            .collect();
        if let Ok(p) = LatticePolygon::hull_of(pts) {
            return p;
        }
    }
}

fn random_map(rng: &mut ChaCha8Rng) -> UnimodularAffineMap {
    let mut m = UnimodularAffineMap::identity();
    for _ in 0..rng.gen_range(1..6) {
        let k = rng.gen_range(-3..=3);
        let step = match rng.gen_range(0..3) {
            0 => [[1, k], [0, 1]],
            1 => [[1, 0], [k, 1]],
            _ => [[0, 1], [1, 0]],
        };
        m = m.then(&UnimodularAffineMap::new(step, pt(0, 0)).unwrap());
    }
    m.then(&UnimodularAffineMap::translation(pt(
        rng.gen_range(-20..=20),
        rng.gen_range(-20..=20),
    )))
}

fn brute_count(p: &LatticePolygon) -> usize {
    let v = p.vertices();
    let (x0, x1) = (
        v.iter().map(|q| q.x).min().unwrap(),
        v.iter().map(|q| q.x).max().unwrap(),
    );
    let (y0, y1) = (
        v.iter().map(|q| q.y).min().unwrap(),
        v.iter().map(|q| q.y).max().unwrap(),
    );
    (x0..=x1)
        .flat_map(|x| (y0..=y1).map(move |y| pt(x, y)))
        .filter(|&q| p.contains(q))
        .count()
}

fn delta_squared_vanishes(delta: &LatticePolygon) -> Result<usize, String> {
    let cx = SurfaceComplex::from_outer(delta).map_err(|e| e.to_string())?;
    let prime = DEFAULT_PRIMES[0];
    let mut keys = cx.betti_plan();
    keys.extend(cx.dual_plan());
    keys.sort();
    keys.dedup();
    let mut pairs = 0;
    for key in keys
        .into_iter()
        .filter(|k| k.p >= 2 && matches!(k.source, Piece::Zero | Piece::One))
    {
        let first = cx.differential(key, prime).map_err(|e| e.to_string())?;
        let next = DiffKey {
            p: key.p - 1,
            source: key.source.target(),
        };
        let second = cx.differential(next, prime).map_err(|e| e.to_string())?;
        if !second.compose(&first).is_zero() {
            return Err(format!("δ∘δ ≠ 0 at {key:?}"));
        }
        pairs += 1;
    }
    Ok(pairs)
}

fn interior_mu_vanishes(delta: &LatticePolygon) -> Result<usize, String> {
    let cx = SurfaceComplex::from_outer(delta).map_err(|e| e.to_string())?;
    let prime = DEFAULT_PRIMES[0];
    let g = cx.genus();
    let inner_points: Vec<LatticePoint> = cx.basis(Piece::InnerOne).points().to_vec();
    let mut count = 0;
    for l in 1..=(g - 1) / 2 {
        let setup = InducedSetup::new(&cx, l, prime).map_err(|e| e.to_string())?;
        if setup.domain_dim() == 0 {
            continue;
        }
        for &m in &inner_points {
            let r = setup
                .rank(&CoefficientAssignment::monomial(m, prime))
                .map_err(|e| e.to_string())?;
            if r != 0 {
                return Err(format!("x^{m} induces rank {r} at l = {l}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

fn criterion_10(all: &[Instance]) -> Verdict {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let corpus: Vec<LatticePolygon> = (0..CORPUS_SIZE).map(|_| random_polygon(&mut rng)).collect();

    let mut complexes = 0;
    for i in all {
        match delta_squared_vanishes(&i.delta) {
            Ok(n) => complexes += n,
            Err(e) => failures.push(format!("{}: {e}", i.name)),
        }
    }

    for p in &corpus {
        let (b, interior_pts) = (p.boundary_count() as i64, p.interior_count() as i64);
        let pick = p.twice_area() == 2 * interior_pts + b - 2;
        let counts = brute_count(p) == p.point_count();
        let ehrhart = (2..=3).all(|k: i64| {
            2 * brute_count(&p.dilate(k)) as i64 == p.twice_area() * k * k + b * k + 2
        });
        if !(pick && counts && ehrhart) {
            failures.push(format!("Pick/Ehrhart fails on {p}"));
        }
        let canon = p.canonical_form();
        for _ in 0..MAPS_PER_POLYGON {
            if p.transform(&random_map(&mut rng)).canonical_form() != canon {
                failures.push(format!("canonical form not invariant on {p}"));
                break;
            }
        }
        if matches!(p.interior_hull(), Hull::Polygon(_)) {
            if let Err(e) = fujita_check(p) {
                failures.push(format!("divisor polygons of {p}: {e}"));
            }
        }
    }

    let mut mu_checks = 0;
    for i in all {
        match interior_mu_vanishes(&i.delta) {
            Ok(n) => mu_checks += n,
            Err(e) => failures.push(format!("{}: {e}", i.name)),
        }
    }

    let reflexive = reflexive_classes().len();
    if reflexive != 16 {
        failures.push(format!("{reflexive} reflexive classes"));
    }

    for i in all {
        if !i.betti.surface.primes_agree || !i.betti.induced.iter().all(|r| r.samples_agree()) {
            failures.push(format!("{}: ranks differ between primes", i.name));
        }
    }

    check(
        failures.is_empty(),
        format!(
            "δ∘δ = 0 on {complexes} pairs, {CORPUS_SIZE}-polygon corpus, {mu_checks} interior μ maps vanish, \
             16 reflexive classes, primes agree"
        ),
        failures.join("; "),
    )
}

fn main() {
    let mut all = vec![Instance {
        name: "genus 12",
        delta: genus12(),
        betti: curve_betti(&genus12(), &curve_opts(Some(genus12_f()))).unwrap(),
    }];
    let t = Instant::now();
    let gwf: Vec<Instance> = gwf_instances()
        .into_iter()
        .map(|(name, delta)| {
            let betti = curve_betti(&delta, &curve_opts(None)).unwrap();
            Instance { name, delta, betti }
        })
        .collect();
    let gwf_elapsed = t.elapsed();

    let (c1, c2) = criterion_1_and_2();
    let c3 = criterion_3(&gwf, gwf_elapsed);
    all.extend(gwf);
    let results = [
        (1, "genus-12 reproduction", c1),
        (2, "six-term snapshot", c2),
        (3, "sum formula on GWF instances", c3),
        (4, "Hering-Schenck equality", criterion_4(&all)),
        (5, "duality binomial identity", criterion_5(&all)),
        (6, "Serre-duality cross-check", criterion_6(&all)),
        (7, "Green predicate", criterion_7(&all)),
        (8, "interior polygon scan", criterion_8()),
        (9, "genus-36 combinatorics and memory guard", criterion_9()),
        (10, "property suites", criterion_10(&all)),
    ];
    let mut failed = Vec::new();
    for (id, name, verdict) in &results {
        match verdict {
            Ok(detail) => println!("PASS criterion {id:>2} {name}: {detail}"),
            Err(detail) => {
                println!("FAIL criterion {id:>2} {name}: {detail}");
                failed.push(*id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
