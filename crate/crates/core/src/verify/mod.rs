//! Exhaustive checkers over small universes.
//!
//! Every checker returns an [`AxiomReport`] counting the cases it examined
//! and, on failure, the first violating [`Witness`] in canonical order.
//! Witnesses can be replayed with [`replay`], which re-derives the violation
//! at the level of belief sets instead of reusing the checker's own
//! shortcuts.

mod agm;
mod counterexample;
mod enumerate;
mod iteration;
mod replay;
mod representation;
mod reversibility;
mod successors;

use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::ranking::{Ocf, Preference, RankedModel};
use crate::revision::EpistemicInput;
use crate::world::Proposition;

pub use agm::{check_agm, check_degree_conditions};
pub use counterexample::{counterexample_verify, CounterexampleFixture, CounterexampleReport};
pub use enumerate::{canonical_cmp, enumerate_normalized_ocfs, enumerate_ranked_models};
pub use iteration::{check_iteration_axiom, check_order_preservation};
pub use replay::replay;
pub use representation::{representation_check, representing_models, RevisionTable};
pub use reversibility::{
    check_ocf_reversibility, check_reversibility, find_irreversibility, find_ocf_irreversibility,
    Reversal, Reversibility,
};
pub use successors::{constrained_successors, merged_successors};

/// Size limits for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest universe an exhaustive check accepts.
    pub max_worlds: usize,
    /// Largest absolute strength tried when searching for a reversing input.
    pub max_strength: u64,
}

pub const DEFAULT_CHECK_BOUND: usize = 5;
pub const MAX_ENUMERATION_BOUND: usize = 6;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_worlds: DEFAULT_CHECK_BOUND,
            max_strength: 3,
        }
    }
}

impl Limits {
    pub fn check_width(&self, width: usize) -> Result<()> {
        if width > self.max_worlds {
            return Err(crate::Error::BoundExceeded {
                width,
                bound: self.max_worlds,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    /// B1 through B8 together.
    Agm,
    B9,
    B10,
    OrderPreservation,
    DegreeConditions,
    Reversibility,
    Counterexample,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::B1 => "B1",
            Axiom::B2 => "B2",
            Axiom::B3 => "B3",
            Axiom::B4 => "B4",
            Axiom::B5 => "B5",
            Axiom::B6 => "B6",
            Axiom::B7 => "B7",
            Axiom::B8 => "B8",
            Axiom::Agm => "AGM",
            Axiom::B9 => "B9",
            Axiom::B10 => "B10",
            Axiom::OrderPreservation => "order",
            Axiom::DegreeConditions => "degrees",
            Axiom::Reversibility => "R",
            Axiom::Counterexample => "counterexample",
        };
        f.write_str(name)
    }
}

/// A concrete violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A single-step axiom fails for `model` at `a` (and `b` for B7/B8).
    Agm {
        axiom: Axiom,
        model: RankedModel,
        a: Proposition,
        b: Option<Proposition>,
    },
    /// Believing `a` and then `b` differs from believing `b` directly.
    Iteration {
        axiom: Axiom,
        rule: String,
        model: RankedModel,
        a: Proposition,
        b: Proposition,
    },
    /// Two worlds on the same side of the input change their relative order.
    Order {
        rule: String,
        model: RankedModel,
        input: EpistemicInput,
        worlds: (usize, usize),
        before: Preference,
        after: Preference,
    },
    /// Degree condition (i) fails when `b` is `None`, (ii) otherwise.
    Degree {
        model: RankedModel,
        a: Proposition,
        b: Option<Proposition>,
    },
    /// No input on the same proposition takes `successor` back to `model`.
    Irreversible {
        rule: String,
        model: RankedModel,
        input: EpistemicInput,
        successor: RankedModel,
        max_strength: u64,
    },
    /// No strength on `prop` takes `successor` back to `ocf`.
    OcfIrreversible {
        ocf: Ocf,
        prop: Proposition,
        alpha: i64,
        successor: Ocf,
        max_strength: Option<u64>,
    },
    /// A step of the counterexample argument did not go through.
    Counterexample { step: String },
}

/// Outcome of one checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub cases: u64,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    pub fn new(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            cases: 0,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Records one examined case; keeps the earliest failure.
    pub(crate) fn record(&mut self, failure: impl FnOnce() -> Option<Witness>) {
        self.cases += 1;
        if self.witness.is_none() {
            self.witness = failure();
        }
    }

    /// Combines reports for consecutive slices of one search. Associative;
    /// the witness from the earlier slice wins.
    pub fn merge(self, later: AxiomReport) -> AxiomReport {
        debug_assert_eq!(self.axiom, later.axiom);
        AxiomReport {
            axiom: self.axiom,
            cases: self.cases + later.cases,
            witness: self.witness.or(later.witness),
        }
    }
}

/// Runs `check` on every model and merges the reports in model order.
/// With `parallel`, models are split into contiguous chunks evaluated on
/// the rayon pool; the merged report does not depend on the split.
pub fn check_models<F>(
    axiom: Axiom,
    models: &[RankedModel],
    parallel: bool,
    check: F,
) -> Result<AxiomReport>
where
    F: Fn(&RankedModel) -> Result<AxiomReport> + Sync,
{
    let reports: Vec<AxiomReport> = if parallel {
        let chunk = models
            .len()
            .div_ceil(rayon::current_num_threads().max(1))
            .max(1);
        models
            .par_chunks(chunk)
            .map(|slice| {
                slice.iter().try_fold(AxiomReport::new(axiom), |acc, m| {
                    Ok::<_, crate::Error>(acc.merge(check(m)?))
                })
            })
            .collect::<Result<_>>()?
    } else {
        models.iter().map(&check).collect::<Result<_>>()?
    };
    Ok(reports
        .into_iter()
        .fold(AxiomReport::new(axiom), AxiomReport::merge))
}
