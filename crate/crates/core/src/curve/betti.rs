use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::induced::InducedSetup;
use super::poly::LaurentPolynomial;
use super::sample::{sample_f, sample_seed, CoefficientAssignment, SamplingMode};
use super::CurveError;
use crate::koszul::{
    row_entry, surface_betti_of, DiffKey, KoszulOptions, Piece, SurfaceBetti, SurfaceComplex,
};
use crate::lattice::LatticePolygon;

#[derive(Clone, Debug)]
pub struct CurveOptions {
    pub koszul: KoszulOptions,
    pub trials: usize,
    pub seed: u64,
    pub mode: SamplingMode,
    /// Fixed `f` used instead of random samples.
    pub explicit: Option<LaurentPolynomial>,
}

impl Default for CurveOptions {
    fn default() -> Self {
        CurveOptions {
            koszul: KoszulOptions::default(),
            trials: 3,
            seed: 0,
            mode: SamplingMode::Full,
            explicit: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedRankResult {
    pub l: usize,
    /// Maximum over samples and primes.
    pub r: u64,
    /// Per prime, the rank for each sample.
    pub per_prime: BTreeMap<u64, Vec<u64>>,
    /// True when `c_ℓ` or `c_{g-1-ℓ}` vanishes and no computation was needed.
    pub trivial: bool,
}

impl InducedRankResult {
    pub fn samples_agree(&self) -> bool {
        let mut all = self.per_prime.values().flatten();
        match all.next() {
            Some(first) => all.all(|x| x == first),
            None => true,
        }
    }
}

/// Row `a_ℓ = dim K_{ℓ,1}(C, K_C)` for `ℓ = 1, …, g-3` (index `ℓ - 1`),
/// together with the surface rows and the induced ranks `r_ℓ`,
/// `ℓ = 1, …, ⌊(g-1)/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveBetti {
    pub g: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub r: Vec<u64>,
    pub induced: Vec<InducedRankResult>,
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
    pub trials: usize,
    pub mode: SamplingMode,
    pub explicit_f: Option<String>,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub surface: SurfaceBetti,
}

impl CurveBetti {
    pub fn a(&self, l: i64) -> u64 {
        row_entry(&self.a, l)
    }

    pub fn b(&self, l: i64) -> u64 {
        row_entry(&self.b, l)
    }

    pub fn c(&self, l: i64) -> u64 {
        row_entry(&self.c, l)
    }

    /// `r_ℓ`, with `r_ℓ = r_{g-1-ℓ}`.
    pub fn r(&self, l: i64) -> u64 {
        let g = self.g as i64;
        let l = l.min(g - 1 - l);
        row_entry(&self.r, l)
    }

    /// `(b_ℓ, a_ℓ, c_ℓ, c_{g-1-ℓ}, a_{g-1-ℓ}, b_{g-1-ℓ})`.
    pub fn six_term(&self, l: i64) -> [u64; 6] {
        let m = self.g as i64 - 1 - l;
        [
            self.b(l),
            self.a(l),
            self.c(l),
            self.c(m),
            self.a(m),
            self.b(m),
        ]
    }
}

pub fn curve_betti(delta: &LatticePolygon, opts: &CurveOptions) -> Result<CurveBetti, CurveError> {
    assert!(opts.trials >= 1, "at least one trial is needed");
    let cx = SurfaceComplex::from_outer(delta)?;
    let g = cx.genus();
    if let Some(f) = &opts.explicit {
        if let Some(m) = f.support().into_iter().find(|&m| !delta.contains(m)) {
            return Err(CurveError::SupportOutsidePolygon(m));
        }
    }
    let half = (g - 1) / 2;
    let mut plan = cx.betti_plan();
    for l in 1..=half {
        plan.push(DiffKey {
            p: l - 1,
            source: Piece::Two,
        });
    }
    cx.check_budget(&plan, &opts.koszul)?;

    let surface = surface_betti_of(&cx, &opts.koszul)?;
    let needed: Vec<usize> = (1..=half)
        .filter(|&l| surface.c(l as i64) > 0 && surface.c((g - 1 - l) as i64) > 0)
        .collect();
    let seeds: Vec<u64> = match opts.explicit {
        Some(_) => Vec::new(),
        None => (0..opts.trials as u64)
            .map(|i| sample_seed(opts.seed, i))
            .collect(),
    };

    let jobs: Vec<(usize, u64)> = needed
        .iter()
        .flat_map(|&l| opts.koszul.primes.iter().map(move |&p| (l, p)))
        .collect();
    let ranks: Vec<((usize, u64), Vec<u64>)> = jobs
        .par_iter()
        .map(|&(l, prime)| {
            let setup = InducedSetup::new(&cx, l, prime)?;
            let samples: Vec<CoefficientAssignment> = match &opts.explicit {
                Some(f) => vec![CoefficientAssignment::from_polynomial(f, prime)?],
                None => seeds
                    .iter()
                    .map(|&s| sample_f(delta, prime, s, opts.mode))
                    .collect(),
            };
            let rs = samples
                .iter()
                .map(|f| setup.rank(f).map(|r| r as u64))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(((l, prime), rs))
        })
        .collect::<Result<_, CurveError>>()?;

    let mut induced: Vec<InducedRankResult> = (1..=half)
        .map(|l| InducedRankResult {
            l,
            r: 0,
            per_prime: BTreeMap::new(),
            trivial: !needed.contains(&l),
        })
        .collect();
    for ((l, prime), rs) in ranks {
        let entry = &mut induced[l - 1];
        entry.r = entry.r.max(rs.iter().copied().max().unwrap_or(0));
        entry.per_prime.insert(prime, rs);
    }

    let mut warnings = Vec::new();
    if !surface.primes_agree {
        warnings.push("surface ranks differ between primes; the largest rank was used".to_string());
    }
    for res in induced.iter().filter(|r| !r.samples_agree()) {
        warnings.push(format!("l = {}: induced ranks differ across samples {:?}; non-generic sample, reporting the maximum", res.l, res.per_prime));
    }

    let r: Vec<u64> = induced.iter().map(|x| x.r).collect();
    let mut a = vec![0u64; g - 3];
    for l in 1..=g - 3 {
        let li = l as i64;
        let rl = row_entry(&r, li.min(g as i64 - 1 - li));
        let v = surface.b(li) + surface.c(li);
        a[l - 1] = v.checked_sub(rl).ok_or_else(|| {
            CurveError::ConsistencyFailure(format!("r_{l} = {rl} exceeds b_{l} + c_{l} = {v}"))
        })?;
    }

    Ok(CurveBetti {
        g,
        a,
        b: surface.b.clone(),
        c: surface.c.clone(),
        r,
        induced,
        primes: opts.koszul.primes.clone(),
        seeds,
        trials: if opts.explicit.is_some() {
            1
        } else {
            opts.trials
        },
        mode: opts.mode,
        explicit_f: opts.explicit.as_ref().map(|f| f.to_string()),
        warnings,
        surface,
    })
}

/// Distribution of `r_ℓ` over independent samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstancyReport {
    /// `ℓ ↦ (r ↦ number of samples)`, over all samples and primes.
    pub histograms: BTreeMap<usize, BTreeMap<u64, usize>>,
    pub varied: bool,
    pub curve: CurveBetti,
}

pub fn constancy_experiment(
    delta: &LatticePolygon,
    opts: &CurveOptions,
) -> Result<ConstancyReport, CurveError> {
    let curve = curve_betti(delta, opts)?;
    let mut histograms = BTreeMap::new();
    for res in &curve.induced {
        let h: &mut BTreeMap<u64, usize> = histograms.entry(res.l).or_default();
        if res.trivial {
            *h.entry(0).or_default() += curve.trials * curve.primes.len();
        }
        for &x in res.per_prime.values().flatten() {
            *h.entry(x).or_default() += 1;
        }
    }
    let varied = histograms.values().any(|h| h.len() > 1);
    Ok(ConstancyReport {
        histograms,
        varied,
        curve,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    #[test]
    fn plane_quintic() {
        let c = curve_betti(&LatticePolygon::sigma(5), &CurveOptions::default()).unwrap();
        assert_eq!(c.a, vec![6, 8, 3]);
        assert_eq!(c.r, vec![0, 0]);
    }

    #[test]
    fn square_first_entry() {
        let c = curve_betti(
            &LatticePolygon::rectangle(0, 4, 0, 4),
            &CurveOptions::default(),
        )
        .unwrap();
        assert_eq!(c.a[0], 21);
    }

    #[test]
    fn explicit_support_must_fit() {
        let opts = CurveOptions {
            explicit: Some(LaurentPolynomial::parse("x^7").unwrap()),
            ..CurveOptions::default()
        };
        let err = curve_betti(&LatticePolygon::sigma(5), &opts).unwrap_err();
        assert_eq!(err, CurveError::SupportOutsidePolygon(pt(7, 0)));
    }
}
