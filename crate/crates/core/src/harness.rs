//! Exhaustive and seeded-random sweeps that cross-check the Cartier-data
//! verdict against hesitant lambda-walk avoidance, plus both witness
//! round trips and the census of untwisted cubes.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartier::{hesitant_walk_from_twist_witness, is_untwisted_capped, witness_sigma_from_walk};
use crate::error::{Error, Result};
use crate::rootdata::LieType;
use crate::twistedcube::{contains_integer, contains_pd_integer, lattice_points_capped, DEFAULT_MAX_N};
use crate::walks::{
    find_hesitant_lambda_walk, find_hesitant_lambda_walk_naive, is_minimal, minimize, NAIVE_MAX_N,
};
use crate::weightword::{DominantWeight, Instance, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepEntry {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub max_len: usize,
    /// Every weight whose coefficients all lie in this set is swept.
    pub alphabet: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub entries: Vec<SweepEntry>,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Extra random instances drawn from the entries after the exhaustive part.
    #[serde(default)]
    pub samples: usize,
}

impl SweepSpec {
    pub fn empty() -> SweepSpec {
        SweepSpec {
            entries: Vec::new(),
            seed: None,
            samples: 0,
        }
    }

    fn from_table(rows: &[(&str, usize, &[i64])]) -> SweepSpec {
        SweepSpec {
            entries: rows
                .iter()
                .map(|(t, max_len, alphabet)| SweepEntry {
                    lie_type: t.parse().expect("valid type"),
                    max_len: *max_len,
                    alphabet: alphabet.to_vec(),
                })
                .collect(),
            seed: None,
            samples: 0,
        }
    }

    /// A1-A3, B2-B3, C3 up to length 5, D4 and F4 up to 4, G2 up to 6;
    /// coefficients {0,1}, widened to {0,1,2} for ranks at most 2.
    pub fn default_sweep() -> SweepSpec {
        const BIN: &[i64] = &[0, 1];
        const TRI: &[i64] = &[0, 1, 2];
        Self::from_table(&[
            ("A1", 5, TRI),
            ("A2", 5, TRI),
            ("A3", 5, BIN),
            ("B2", 5, TRI),
            ("B3", 5, BIN),
            ("C3", 5, BIN),
            ("D4", 4, BIN),
            ("F4", 4, BIN),
            ("G2", 6, TRI),
        ])
    }

    /// The default type/length table with coefficients {0,1} throughout.
    pub fn default_binary_sweep() -> SweepSpec {
        let mut spec = Self::default_sweep();
        for e in &mut spec.entries {
            e.alphabet = vec![0, 1];
        }
        spec
    }

    pub fn validate(&self, max_n: usize) -> Result<()> {
        for e in &self.entries {
            if e.max_len > max_n {
                return Err(Error::CapExceeded {
                    size: e.max_len,
                    cap: max_n,
                });
            }
            if e.alphabet.is_empty() || e.alphabet.iter().any(|&v| v < 0) {
                return Err(Error::Parse(format!(
                    "alphabet for {} must be nonempty and nonnegative",
                    e.lie_type
                )));
            }
        }
        if self.samples > 0 && self.entries.is_empty() {
            return Err(Error::Parse("random samples need at least one entry".into()));
        }
        Ok(())
    }

    /// Exhaustive instances in canonical order, then the seeded samples.
    pub fn instances(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        for e in &self.entries {
            let weights = weights_over(e.lie_type.rank(), &e.alphabet);
            for len in 0..=e.max_len {
                for word in words_of_length(e.lie_type.rank(), len) {
                    for w in &weights {
                        out.push(Instance {
                            lie_type: e.lie_type,
                            word: word.clone(),
                            weight: w.clone(),
                        });
                    }
                }
            }
        }
        if self.samples > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0));
            for _ in 0..self.samples {
                let e = &self.entries[rng.gen_range(0..self.entries.len())];
                let r = e.lie_type.rank();
                let len = rng.gen_range(0..=e.max_len);
                let word = (0..len).map(|_| rng.gen_range(1..=r)).collect();
                let weight = (0..r)
                    .map(|_| e.alphabet[rng.gen_range(0..e.alphabet.len())])
                    .collect();
                out.push(Instance {
                    lie_type: e.lie_type,
                    word: Word::new(word),
                    weight: DominantWeight::new(weight).expect("nonnegative alphabet"),
                });
            }
        }
        out
    }
}

/// All words of the given length over `1..=rank`, lexicographic.
pub fn words_of_length(rank: usize, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = vec![1usize; len];
    loop {
        out.push(Word::new(cur.clone()));
        // odometer increment from the right
        let mut p = len;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if cur[p] < rank {
                cur[p] += 1;
                for v in &mut cur[p + 1..] {
                    *v = 1;
                }
                break;
            }
        }
    }
}

/// All weights with coefficients drawn from `alphabet`, lexicographic in
/// alphabet order.
pub fn weights_over(rank: usize, alphabet: &[i64]) -> Vec<DominantWeight> {
    let mut out = vec![Vec::with_capacity(rank)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                alphabet.iter().map(move |&a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| DominantWeight::new(v).expect("nonnegative alphabet"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Cartier verdict disagrees with walk avoidance.
    Equivalence,
    /// Efficient and exhaustive detectors disagree, or a witness is invalid.
    DetectorOracle,
    /// The walk rebuilt from a failing sigma is not a hesitant lambda-walk.
    NecessityRoundtrip,
    /// Minimizing a walk and building its sigma does not give a negative entry.
    SufficiencyRoundtrip,
    /// An untwisted cube has a negative lattice point or `C != P_D` on its points.
    Census,
    /// Scaling the weight by 3 changed the verdict.
    SupportScaling,
    /// Any operation returned an error.
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub check: CheckKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
    pub untwisted_count: usize,
    pub twisted_count: usize,
    pub wall_ms: u64,
}

struct Outcome {
    untwisted: bool,
    failures: Vec<Counterexample>,
}

/// Runs every cross-check on one instance; an empty result means it passed.
pub fn recheck(inst: &Instance) -> Vec<Counterexample> {
    match run_checks(inst) {
        Ok(o) => o.failures,
        Err(e) => vec![fail(inst, CheckKind::Failure, e.to_string())],
    }
}

fn fail(inst: &Instance, check: CheckKind, detail: String) -> Counterexample {
    Counterexample {
        instance: inst.clone(),
        check,
        detail,
    }
}

fn run_checks(inst: &Instance) -> Result<Outcome> {
    inst.validate()?;
    let rd = inst.lie_type.root_data();
    let d = inst.twist_data()?;
    let mut failures = Vec::new();

    let verdict = is_untwisted_capped(&d, DEFAULT_MAX_N)?;
    let walk = find_hesitant_lambda_walk(&rd, &inst.word, &inst.weight);

    if verdict.untwisted != walk.is_none() {
        failures.push(fail(
            inst,
            CheckKind::Equivalence,
            format!("untwisted = {}, walk = {:?}", verdict.untwisted, walk),
        ));
    }

    if inst.word.len() <= NAIVE_MAX_N {
        let naive = find_hesitant_lambda_walk_naive(&rd, &inst.word, &inst.weight)?;
        if naive.is_some() != walk.is_some() {
            failures.push(fail(
                inst,
                CheckKind::DetectorOracle,
                format!("efficient = {walk:?}, naive = {naive:?}"),
            ));
        }
        for w in naive.iter().chain(walk.iter()) {
            if !w.validate(&rd, &inst.word, &inst.weight) {
                failures.push(fail(inst, CheckKind::DetectorOracle, format!("invalid witness {w:?}")));
            }
        }
    }

    if let Some(tw) = &verdict.witness {
        let back = hesitant_walk_from_twist_witness(&d, &inst.word, &tw.sigma, tw.k)?;
        if !back.validate(&rd, &inst.word, &inst.weight) {
            failures.push(fail(
                inst,
                CheckKind::NecessityRoundtrip,
                format!("sigma {} gives {:?}", tw.sigma, back.positions),
            ));
        }
    }

    if let Some(w) = &walk {
        let min = minimize(&rd, &inst.word, w, &inst.weight)?;
        let ok = is_minimal(&rd, &inst.word, &min, &inst.weight)?
            && min.positions.iter().all(|p| w.positions.contains(p));
        let sigma_ok = ok
            && match witness_sigma_from_walk(&d, &min.positions) {
                Ok((_, m)) => m.get(min.positions[0]) < 0,
                Err(_) => false,
            };
        if !sigma_ok {
            failures.push(fail(
                inst,
                CheckKind::SufficiencyRoundtrip,
                format!("walk {:?} minimized to {:?}", w.positions, min.positions),
            ));
        }
    }

    if verdict.untwisted {
        let census = lattice_points_capped(&d, DEFAULT_MAX_N)?;
        for p in &census.points {
            let same = contains_integer(&d, &p.x)? == contains_pd_integer(&d, &p.x)?;
            if p.rho != 1 || !same {
                failures.push(fail(
                    inst,
                    CheckKind::Census,
                    format!("point {:?} has rho {} (in P_D: {})", p.x, p.rho, same),
                ));
                break;
            }
        }
    }

    let scaled = inst.twist_data_for(&inst.weight.scaled(3))?;
    if is_untwisted_capped(&scaled, DEFAULT_MAX_N)?.untwisted != verdict.untwisted {
        failures.push(fail(inst, CheckKind::SupportScaling, "verdict changed under 3*lambda".into()));
    }

    Ok(Outcome {
        untwisted: verdict.untwisted,
        failures,
    })
}

fn run_parallel<T: Send, F: Fn(&Instance) -> T + Sync + Send>(
    instances: &[Instance],
    jobs: usize,
    f: F,
) -> Vec<T> {
    if jobs <= 1 {
        return instances.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| instances.par_iter().map(f).collect())
}

/// Checks every instance of the sweep. Results are independent of `jobs`
/// except for `wall_ms`.
pub fn verify_equivalence(spec: &SweepSpec, jobs: usize) -> Result<SweepReport> {
    spec.validate(DEFAULT_MAX_N)?;
    let start = Instant::now();
    let instances = spec.instances();
    let outcomes = run_parallel(&instances, jobs, |inst| match run_checks(inst) {
        Ok(o) => o,
        Err(e) => Outcome {
            untwisted: false,
            failures: vec![fail(inst, CheckKind::Failure, e.to_string())],
        },
    });
    let mut report = SweepReport {
        instances: instances.len(),
        counterexamples: Vec::new(),
        untwisted_count: 0,
        twisted_count: 0,
        wall_ms: 0,
    };
    for o in outcomes {
        if o.untwisted {
            report.untwisted_count += 1;
        } else {
            report.twisted_count += 1;
        }
        report.counterexamples.extend(o.failures);
    }
    report.counterexamples.sort();
    report.wall_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRow {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub weight: DominantWeight,
    pub length: usize,
    pub words: usize,
    pub avoiding: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasReport {
    pub rows: Vec<AtlasRow>,
}

/// Counts hesitant-lambda-walk-avoiding words per type, weight and length
/// over the exhaustive part of the spec.
pub fn atlas(spec: &SweepSpec, jobs: usize) -> Result<AtlasReport> {
    spec.validate(DEFAULT_MAX_N)?;
    let mut cells = Vec::new();
    for e in &spec.entries {
        for w in weights_over(e.lie_type.rank(), &e.alphabet) {
            for len in 0..=e.max_len {
                cells.push((e.lie_type, w.clone(), len));
            }
        }
    }
    let count = |(t, w, len): &(LieType, DominantWeight, usize)| {
        let rd = t.root_data();
        let words = words_of_length(t.rank(), *len);
        let avoiding = words
            .iter()
            .filter(|word| find_hesitant_lambda_walk(&rd, word, w).is_none())
            .count();
        AtlasRow {
            lie_type: *t,
            weight: w.clone(),
            length: *len,
            words: words.len(),
            avoiding,
        }
    };
    let rows = if jobs <= 1 {
        cells.iter().map(count).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| cells.par_iter().map(count).collect())
    };
    Ok(AtlasReport { rows })
}
