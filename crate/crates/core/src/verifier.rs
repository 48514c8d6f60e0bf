//! Exhaustive and sampled sweeps of Conjectures H and D over ordered pairs.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use dashmap::DashMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bruhat::reflections_reached;
use crate::coxeter::{CoxeterSystem, ElemId, Group};
use crate::scalar::Backend;
use crate::subset::RootSubset;
use crate::weak_order::{conjectural_join_d, join_of_union};
use crate::{Error, Result};

/// Maximum number of failures kept in a report.
pub const FAILURE_LIMIT: usize = 100;

/// Current report schema version.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// `T_L(u ∨ v) = T ∩ V_W(u, v)`.
    H,
    /// `J(Phi_u, Phi_v) = Phi_{u ∨ v}`.
    D,
    /// H and D give the same verdict and the same right-hand side.
    Eq,
}

impl Conjecture {
    pub fn as_str(self) -> &'static str {
        match self {
            Conjecture::H => "H",
            Conjecture::D => "D",
            Conjecture::Eq => "EQ",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "H" => Ok(Conjecture::H),
            "D" => Ok(Conjecture::D),
            "EQ" | "EQUIVALENCE" => Ok(Conjecture::Eq),
            _ => Err(Error::Parse(format!(
                "unknown conjecture `{s}` (expected H, D or EQ)"
            ))),
        }
    }
}

impl Serialize for Conjecture {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    /// `size` ordered pairs drawn uniformly with a seeded generator.
    Sample {
        size: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub mode: SweepMode,
    /// Worker threads; 0 means one per available core.
    pub workers: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            mode: SweepMode::Exhaustive,
            workers: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub u: String,
    pub v: String,
    pub lhs: RootSubset,
    pub rhs: RootSubset,
    pub diff: RootSubset,
    #[serde(skip)]
    key: (usize, usize, Vec<usize>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub type_name: String,
    pub conjecture: Conjecture,
    pub backend: Backend,
    pub pairs_checked: u64,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
    pub wall_time_ms: u64,
    pub seed: Option<u64>,
    pub workers: usize,
    pub mode: &'static str,
}

impl SweepReport {
    pub fn holds(&self) -> bool {
        self.failure_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Per-union outcome: `lhs` and `rhs` of the conjecture under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Outcome {
    lhs: RootSubset,
    rhs: RootSubset,
    ok: bool,
}

fn evaluate(group: &Group, conjecture: Conjecture, union: RootSubset) -> Result<Outcome> {
    let join = group.inversions(join_of_union(group, union)?);
    Ok(match conjecture {
        Conjecture::H => {
            let rhs = reflections_reached(group, union);
            Outcome {
                lhs: join,
                rhs,
                ok: join == rhs,
            }
        }
        Conjecture::D => {
            let rhs = conjectural_join_d(group, union, RootSubset::empty());
            Outcome {
                lhs: join,
                rhs,
                ok: join == rhs,
            }
        }
        Conjecture::Eq => {
            let v = reflections_reached(group, union);
            let j = conjectural_join_d(group, union, RootSubset::empty());
            let same_verdict = (join == v) == (join == j);
            Outcome {
                lhs: v,
                rhs: j,
                ok: same_verdict && v == j,
            }
        }
    })
}

struct Sweeper<'a> {
    sys: &'a CoxeterSystem,
    conjecture: Conjecture,
    memo: DashMap<RootSubset, Outcome>,
}

impl Sweeper<'_> {
    fn outcome(&self, union: RootSubset) -> Result<Outcome> {
        if let Some(o) = self.memo.get(&union) {
            return Ok(*o);
        }
        let o = evaluate(self.sys.group(), self.conjecture, union)?;
        if let Some(prev) = self.memo.insert(union, o) {
            debug_assert_eq!(prev, o, "memo values for one union must agree");
        }
        Ok(o)
    }

    fn check(&self, u: ElemId, v: ElemId) -> Result<Option<Failure>> {
        let g = self.sys.group();
        let o = self.outcome(g.inversions(u).union(g.inversions(v)))?;
        if o.ok {
            return Ok(None);
        }
        Ok(Some(Failure {
            u: self.sys.format_element(u),
            v: self.sys.format_element(v),
            lhs: o.lhs,
            rhs: o.rhs,
            diff: o.lhs.symmetric_difference(o.rhs),
            key: (g.length(u), g.length(v), g.word(u), g.word(v)),
        }))
    }
}

fn sample_pairs(order: usize, size: usize, seed: u64) -> Vec<(ElemId, ElemId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            let u = rng.gen_range(0..order) as u32;
            let v = rng.gen_range(0..order) as u32;
            (ElemId(u), ElemId(v))
        })
        .collect()
}

/// Runs `conjecture` over the pairs selected by `config.mode`.
pub fn sweep(
    sys: &CoxeterSystem,
    conjecture: Conjecture,
    config: &SweepConfig,
) -> Result<SweepReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Parse(format!("cannot start worker pool: {e}")))?;
    let workers = pool.current_num_threads();
    let sweeper = Sweeper {
        sys,
        conjecture,
        memo: DashMap::new(),
    };
    let order = sys.group().order();

    let (pairs_checked, mut failures) = pool.install(|| -> Result<(u64, Vec<Failure>)> {
        match config.mode {
            SweepMode::Exhaustive => {
                let per_u: Vec<Vec<Failure>> = (0..order as u32)
                    .into_par_iter()
                    .map(|u| {
                        let mut out = Vec::new();
                        for v in 0..order as u32 {
                            if let Some(f) = sweeper.check(ElemId(u), ElemId(v))? {
                                out.push(f);
                            }
                        }
                        Ok(out)
                    })
                    .collect::<Result<_>>()?;
                Ok((
                    (order * order) as u64,
                    per_u.into_iter().flatten().collect(),
                ))
            }
            SweepMode::Sample { size, seed } => {
                let pairs = sample_pairs(order, size, seed);
                let found: Vec<Option<Failure>> = pairs
                    .par_iter()
                    .map(|&(u, v)| sweeper.check(u, v))
                    .collect::<Result<_>>()?;
                Ok((size as u64, found.into_iter().flatten().collect()))
            }
        }
    })?;

    failures.sort_by(|a, b| a.key.cmp(&b.key));
    let failure_count = failures.len() as u64;
    failures.truncate(FAILURE_LIMIT);
    let (seed, mode) = match config.mode {
        SweepMode::Exhaustive => (None, "exhaustive"),
        SweepMode::Sample { seed, .. } => (Some(seed), "sample"),
    };
    Ok(SweepReport {
        schema: SCHEMA_VERSION,
        type_name: sys.name(),
        conjecture,
        backend: sys.backend(),
        pairs_checked,
        failures,
        failure_count,
        wall_time_ms: start.elapsed().as_millis() as u64,
        seed,
        workers,
        mode,
    })
}

pub fn sweep_h(sys: &CoxeterSystem, config: &SweepConfig) -> Result<SweepReport> {
    sweep(sys, Conjecture::H, config)
}

pub fn sweep_d(sys: &CoxeterSystem, config: &SweepConfig) -> Result<SweepReport> {
    sweep(sys, Conjecture::D, config)
}

pub fn sweep_equivalence(sys: &CoxeterSystem, config: &SweepConfig) -> Result<SweepReport> {
    sweep(sys, Conjecture::Eq, config)
}
