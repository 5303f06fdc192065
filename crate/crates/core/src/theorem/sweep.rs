//! Corpus sweeps: run theorem checkers over every instance, in parallel if
//! asked, with order-independent aggregation re-sorted into instance order.

use rayon::prelude::*;

use super::corpus::{instances_for, Corpus};
use super::{check_theorem, TheoremId, TheoremVerdict};

/// Per-theorem pass/vacuous/fail counts. `pass` counts substantive
/// (non-vacuous) passes only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepStats {
    pub theorem: TheoremId,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
}

impl SweepStats {
    pub fn instances(&self) -> usize {
        self.pass + self.vacuous + self.fail
    }
}

#[derive(Debug)]
pub struct SweepOutcome {
    /// Every verdict, ordered by (theorem catalog order, instance order).
    pub verdicts: Vec<TheoremVerdict>,
    pub stats: Vec<SweepStats>,
}

impl SweepOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    pub fn total_failures(&self) -> usize {
        self.stats.iter().map(|s| s.fail).sum()
    }
}

/// Runs the listed theorems over the corpus with `jobs` worker threads
/// (1 = fully sequential). Output order does not depend on `jobs`.
pub fn sweep(corpus: &Corpus, ids: &[TheoremId], jobs: usize) -> SweepOutcome {
    let mut verdicts = Vec::new();
    let mut stats = Vec::new();
    let pool = (jobs > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
    });
    for &id in ids {
        let instances = instances_for(id, corpus);
        let mut batch: Vec<TheoremVerdict> = match &pool {
            Some(pool) => pool.install(|| {
                instances
                    .par_iter()
                    .map(|inst| check_theorem(id, inst).expect("instance shape from generator"))
                    .collect()
            }),
            None => instances
                .iter()
                .map(|inst| check_theorem(id, inst).expect("instance shape from generator"))
                .collect(),
        };
        let mut s = SweepStats {
            theorem: id,
            pass: 0,
            vacuous: 0,
            fail: 0,
        };
        for v in &batch {
            if !v.holds {
                s.fail += 1;
            } else if v.vacuous {
                s.vacuous += 1;
            } else {
                s.pass += 1;
            }
        }
        stats.push(s);
        verdicts.append(&mut batch);
    }
    SweepOutcome { verdicts, stats }
}
