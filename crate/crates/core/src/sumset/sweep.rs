use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use itertools::Itertools;
use rayon::prelude::*;

use crate::bounds::{theorem1_bound, BoundReport};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::BPoly;

use super::{restricted_sumset, FSet, SplitMix64, VerifyRecord};

/// Skip reason recorded for instances whose polynomial fails the top-coefficient
/// hypothesis at the given sizes.
pub const HYPOTHESIS_SKIP: &str = "hypothesis not met";

/// How many extremal (minimum-slack) instances a report keeps.
const EXTREMAL_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every pair of subsets of the requested sizes, in lexicographic order of
    /// canonical element indices. Fails up front if the instance count exceeds
    /// `budget`.
    Exhaustive { budget: u128 },
    /// `samples` instances drawn with [`SplitMix64`] from `seed`. Per sample:
    /// polynomial index, `|A|`, `|B|` (skipped for diagonal pairing), then the
    /// subset `A`, then `B`, each by [`SplitMix64::below`] / [`SplitMix64::subset`].
    Random { seed: u64, samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `A` and `B` range independently.
    Independent,
    /// `B = A`; the `nb` range is ignored.
    Diagonal,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub ctx: FieldCtx,
    pub polys: Vec<BPoly>,
    pub na: RangeInclusive<usize>,
    pub nb: RangeInclusive<usize>,
    pub pairing: Pairing,
    pub mode: SweepMode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRecord {
    /// Index into [`SweepConfig::polys`].
    pub poly: usize,
    pub a: FSet,
    pub b: FSet,
    pub verify: VerifyRecord,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    /// Checked instances, in enumeration (or sampling) order.
    pub records: Vec<SweepRecord>,
    /// Checked plus skipped.
    pub instances: usize,
    pub violations: usize,
    pub skipped: BTreeMap<String, usize>,
    pub slack_histogram: BTreeMap<i64, usize>,
    pub min_slack: Option<i64>,
    /// The first few records attaining `min_slack`.
    pub extremal: Vec<SweepRecord>,
}

impl SweepReport {
    pub fn checked(&self) -> usize {
        self.records.len()
    }

    pub fn skipped_total(&self) -> usize {
        self.skipped.values().sum()
    }

    fn finish(records: Vec<SweepRecord>, skipped: BTreeMap<String, usize>) -> Self {
        let mut slack_histogram = BTreeMap::new();
        for r in &records {
            *slack_histogram.entry(r.verify.slack).or_insert(0) += 1;
        }
        let min_slack = slack_histogram.keys().next().copied();
        let extremal = records
            .iter()
            .filter(|r| Some(r.verify.slack) == min_slack)
            .take(EXTREMAL_CAP)
            .cloned()
            .collect();
        Self {
            instances: records.len() + skipped.values().sum::<usize>(),
            violations: records.iter().filter(|r| !r.verify.ok).count(),
            records,
            skipped,
            slack_histogram,
            min_slack,
            extremal,
        }
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

fn instance_count(pairing: Pairing, q: u64, na: usize, nb: usize) -> u128 {
    match pairing {
        Pairing::Independent => binomial(q, na as u64).saturating_mul(binomial(q, nb as u64)),
        Pairing::Diagonal => binomial(q, na as u64),
    }
}

fn validate(cfg: &SweepConfig, q: u64) -> Result<()> {
    if cfg.polys.is_empty() {
        return Err(Error::GuardFailed("sweep needs at least one polynomial".into()));
    }
    if cfg.polys.iter().any(|p| p.ctx() != &cfg.ctx) {
        return Err(Error::CtxMismatch);
    }
    let ranges: &[&RangeInclusive<usize>] = match cfg.pairing {
        Pairing::Independent => &[&cfg.na, &cfg.nb],
        Pairing::Diagonal => &[&cfg.na],
    };
    for r in ranges {
        if r.is_empty() {
            return Err(Error::GuardFailed(format!("empty size range {r:?}")));
        }
        if *r.start() == 0 {
            return Err(Error::EmptySet);
        }
        if *r.end() as u64 > q {
            return Err(Error::GuardFailed(format!("set size {} exceeds field order {q}", r.end())));
        }
    }
    Ok(())
}

fn size_pairs(cfg: &SweepConfig) -> Vec<(usize, usize)> {
    match cfg.pairing {
        Pairing::Independent => cfg.na.clone().cartesian_product(cfg.nb.clone()).collect(),
        Pairing::Diagonal => cfg.na.clone().map(|n| (n, n)).collect(),
    }
}

/// Runs the general-bound check over the configured instance space.
///
/// Instances where the polynomial fails the coefficient hypothesis are counted
/// under [`HYPOTHESIS_SKIP`] and otherwise ignored.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let q = cfg.ctx.order().ok_or(Error::NotFiniteField)?;
    validate(cfg, q)?;
    match cfg.mode {
        SweepMode::Exhaustive { budget } => exhaustive(cfg, q, budget),
        SweepMode::Random { seed, samples } => random(cfg, q, seed, samples),
    }
}

type BoundCache = BTreeMap<(usize, usize, usize), Result<BoundReport>>;

fn bound_for(cache: &mut BoundCache, cfg: &SweepConfig, poly: usize, na: usize, nb: usize) -> Result<BoundReport> {
    cache.entry((poly, na, nb)).or_insert_with(|| theorem1_bound(&cfg.polys[poly], na, nb)).clone()
}

fn check(cfg: &SweepConfig, poly: usize, a: FSet, b: FSet, report: BoundReport) -> Result<SweepRecord> {
    let c = restricted_sumset(&a, &b, &cfg.polys[poly])?;
    Ok(SweepRecord { poly, a, b, verify: VerifyRecord::new(c.len(), report) })
}

fn exhaustive(cfg: &SweepConfig, q: u64, budget: u128) -> Result<SweepReport> {
    let pairs = size_pairs(cfg);
    let per_poly: u128 =
        pairs.iter().map(|&(na, nb)| instance_count(cfg.pairing, q, na, nb)).fold(0, u128::saturating_add);
    let needed = per_poly.saturating_mul(cfg.polys.len() as u128);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let mut cache = BoundCache::new();
    let mut records = Vec::new();
    let mut skipped = BTreeMap::new();
    for poly in 0..cfg.polys.len() {
        for &(na, nb) in &pairs {
            let report = match bound_for(&mut cache, cfg, poly, na, nb) {
                Ok(r) => r,
                Err(Error::HypothesisNotMet { .. }) => {
                    let n = instance_count(cfg.pairing, q, na, nb) as usize;
                    *skipped.entry(HYPOTHESIS_SKIP.to_string()).or_insert(0) += n;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let subsets_a: Vec<Vec<u64>> = (0..q).combinations(na).collect();
            let chunk: Vec<Vec<SweepRecord>> = match cfg.pairing {
                Pairing::Independent => {
                    let subsets_b: Vec<Vec<u64>> = (0..q).combinations(nb).collect();
                    subsets_a
                        .par_iter()
                        .map(|ia| {
                            let a = FSet::from_indices(&cfg.ctx, ia)?;
                            subsets_b
                                .iter()
                                .map(|ib| check(cfg, poly, a.clone(), FSet::from_indices(&cfg.ctx, ib)?, report.clone()))
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<_>>()?
                }
                Pairing::Diagonal => subsets_a
                    .par_iter()
                    .map(|ia| {
                        let a = FSet::from_indices(&cfg.ctx, ia)?;
                        Ok(vec![check(cfg, poly, a.clone(), a, report.clone())?])
                    })
                    .collect::<Result<_>>()?,
            };
            records.extend(chunk.into_iter().flatten());
        }
    }
    Ok(SweepReport::finish(records, skipped))
}

fn random(cfg: &SweepConfig, q: u64, seed: u64, samples: usize) -> Result<SweepReport> {
    let mut rng = SplitMix64::new(seed);
    let pick = |rng: &mut SplitMix64, r: &RangeInclusive<usize>| {
        r.start() + rng.below((r.end() - r.start() + 1) as u64) as usize
    };
    let mut cache = BoundCache::new();
    let mut records = Vec::new();
    let mut skipped = BTreeMap::new();
    for _ in 0..samples {
        let poly = rng.below(cfg.polys.len() as u64) as usize;
        let na = pick(&mut rng, &cfg.na);
        let nb = match cfg.pairing {
            Pairing::Independent => pick(&mut rng, &cfg.nb),
            Pairing::Diagonal => na,
        };
        let a = FSet::from_indices(&cfg.ctx, &rng.subset(q, na))?;
        let b = match cfg.pairing {
            Pairing::Independent => FSet::from_indices(&cfg.ctx, &rng.subset(q, nb))?,
            Pairing::Diagonal => a.clone(),
        };
        match bound_for(&mut cache, cfg, poly, na, nb) {
            Ok(report) => records.push(check(cfg, poly, a, b, report)?),
            Err(Error::HypothesisNotMet { .. }) => {
                *skipped.entry(HYPOTHESIS_SKIP.to_string()).or_insert(0) += 1;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(SweepReport::finish(records, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: u64, na: RangeInclusive<usize>, nb: RangeInclusive<usize>, mode: SweepMode) -> SweepConfig {
        let ctx = FieldCtx::prime(p).unwrap();
        let poly = BPoly::x(&ctx).sub(&BPoly::y(&ctx)).unwrap();
        SweepConfig { ctx, polys: vec![poly], na, nb, pairing: Pairing::Independent, mode }
    }

    #[test]
    fn gf5_pairs_of_two() {
        let r = sweep(&cfg(5, 2..=2, 2..=2, SweepMode::Exhaustive { budget: 1000 })).unwrap();
        assert_eq!(r.instances, 100);
        assert_eq!(r.checked(), 100);
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn gf7_triples_reach_zero_slack() {
        let r = sweep(&cfg(7, 3..=3, 3..=3, SweepMode::Exhaustive { budget: 10_000 })).unwrap();
        assert_eq!(r.violations, 0);
        assert_eq!(r.min_slack, Some(0));
        let first = &r.extremal[0];
        assert_eq!(first.a.indices().unwrap(), vec![0, 1, 2]);
        assert_eq!(first.b.indices().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn budget_enforced() {
        let c = cfg(251, 1..=251, 1..=251, SweepMode::Exhaustive { budget: 1_000_000 });
        assert!(matches!(sweep(&c), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn hypothesis_failures_are_skipped() {
        let ctx = FieldCtx::prime(5).unwrap();
        let xy = BPoly::from_i64_terms(&ctx, &[((1, 1), 1)]);
        let c = SweepConfig {
            ctx,
            polys: vec![xy],
            na: 1..=2,
            nb: 2..=2,
            pairing: Pairing::Independent,
            mode: SweepMode::Exhaustive { budget: 1000 },
        };
        let r = sweep(&c).unwrap();
        assert_eq!(r.skipped[HYPOTHESIS_SKIP], 50);
        assert_eq!(r.checked(), 100);
        assert_eq!(r.instances, 150);
    }

    #[test]
    fn random_mode_reproducible() {
        let c = cfg(7, 1..=7, 1..=7, SweepMode::Random { seed: 9, samples: 200 });
        let r1 = sweep(&c).unwrap();
        let r2 = sweep(&c).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(r1.instances, 200);
        let other = sweep(&cfg(7, 1..=7, 1..=7, SweepMode::Random { seed: 10, samples: 200 })).unwrap();
        assert_ne!(r1.records, other.records);
    }

    #[test]
    fn bad_configs() {
        assert_eq!(sweep(&cfg(5, 0..=2, 1..=1, SweepMode::Exhaustive { budget: 10 })), Err(Error::EmptySet));
        assert!(matches!(
            sweep(&cfg(5, 1..=6, 1..=1, SweepMode::Exhaustive { budget: 10 })),
            Err(Error::GuardFailed(_))
        ));
        let mut q = cfg(5, 1..=1, 1..=1, SweepMode::Exhaustive { budget: 10 });
        q.ctx = FieldCtx::rationals();
        assert_eq!(sweep(&q), Err(Error::NotFiniteField));
    }
}
