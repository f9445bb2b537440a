//! The irreversibility counterexample, machine-checked.
//!
//! Split the worlds into four non-empty parts `W1..W4` and let
//! `A = W1 ∪ W2`. The rankings
//!
//! ```text
//! r1 = ⟨W3, W1 ∪ W2 ∪ W4⟩
//! r2 = ⟨W3, A, W4⟩
//! r3 = ⟨A, W3, W4⟩
//! ```
//!
//! are such that any rule obeying B9 and B10 must take both `r1` and `r2` to
//! `r3` on believing `A`. From `r3`, believing or suspending on `A` cannot
//! reach either of them, and disbelieving `A` can reach each one but a rule
//! is a function, so it reaches at most one. Whichever is missed cannot be
//! recovered.
//!
//! With two atoms `A`, `B` and `W1..W4 = {AB}, {Ab}, {aB}, {ab}`:
//! `r1 = [aB] [AB Ab ab]`, `r2 = [aB] [AB Ab] [ab]`, `r3 = [AB Ab] [aB] [ab]`.
//! Both `r1` and `r2` give `A` degree 1 and `¬A` degree 0, so degrees read
//! off the rankings cannot tell them apart either.

use super::reversibility::strengths;
use super::successors::constrained_successors;
use super::{Axiom, AxiomReport, Witness};
use crate::error::{Error, Result};
use crate::ranking::{ocf_from_rpm, rpm_from_ocf, RankedModel};
use crate::revision::{spohn_conditionalize, EpistemicInput};
use crate::world::{Proposition, Universe};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleFixture {
    pub universe: Universe,
    pub a: Proposition,
    pub r1: RankedModel,
    pub r2: RankedModel,
    pub r3: RankedModel,
}

impl CounterexampleFixture {
    /// Four worlds over atoms `A` and `B`.
    pub fn standard() -> Self {
        let universe = Universe::from_atoms(["A", "B"]).expect("two atoms");
        let parts = ["AB", "Ab", "aB", "ab"].map(|l| universe.prop([l]).expect("declared"));
        Self::from_parts(universe, parts)
    }

    /// `sizes[i]` worlds in part `W(i+1)`, labeled `w1a w1b … w4a`.
    pub fn generalized(sizes: [usize; 4]) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::NotAPartition("every part needs a world".into()));
        }
        let mut labels = Vec::new();
        let mut members = vec![Vec::new(); 4];
        for (part, &size) in sizes.iter().enumerate() {
            for k in 0..size {
                let suffix = char::from(b'a' + (k % 26) as u8);
                let repeat = if k >= 26 {
                    format!("{}", k / 26)
                } else {
                    String::new()
                };
                members[part].push(labels.len());
                labels.push(format!("w{}{}{}", part + 1, suffix, repeat));
            }
        }
        let universe = Universe::new(labels)?;
        let width = universe.len();
        let parts = [0, 1, 2, 3].map(|i| {
            Proposition::from_indices(width, members[i].iter().copied()).expect("in range")
        });
        Ok(Self::from_parts(universe, parts))
    }

    fn from_parts(universe: Universe, [w1, w2, w3, w4]: [Proposition; 4]) -> Self {
        let a = w1 | w2;
        let r1 = RankedModel::new(vec![w3, !w3]).expect("partition");
        let r2 = RankedModel::new(vec![w3, a, w4]).expect("partition");
        let r3 = RankedModel::new(vec![a, w3, w4]).expect("partition");
        CounterexampleFixture {
            universe,
            a,
            r1,
            r2,
            r3,
        }
    }
}

/// Everything the argument computes, for display and inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub believe_from_r1: Vec<RankedModel>,
    pub believe_from_r2: Vec<RankedModel>,
    pub believe_from_r3: Vec<RankedModel>,
    pub suspend_from_r3: Vec<RankedModel>,
    pub disbelieve_from_r3: Vec<RankedModel>,
    /// `(d(A), d(¬A))` in `r1` and in `r2`.
    pub degrees: [(usize, usize); 2],
    /// Ranking reached from `r3` by conditionalizing on `A` with each strength.
    pub spohn_from_r3: Vec<(i64, RankedModel)>,
    pub report: AxiomReport,
}

/// Runs every step of the argument on `fixture`; strengths for the numeric
/// coda range over `±max_strength`.
pub fn counterexample_verify(
    fixture: &CounterexampleFixture,
    max_strength: u64,
) -> Result<CounterexampleReport> {
    let CounterexampleFixture { a, r1, r2, r3, .. } = fixture;
    let believe_from_r1 = constrained_successors(r1, &EpistemicInput::believe(*a))?;
    let believe_from_r2 = constrained_successors(r2, &EpistemicInput::believe(*a))?;
    let believe_from_r3 = constrained_successors(r3, &EpistemicInput::believe(*a))?;
    let suspend_from_r3 = constrained_successors(r3, &EpistemicInput::suspend(*a))?;
    let disbelieve_from_r3 = constrained_successors(r3, &EpistemicInput::disbelieve(*a))?;
    let degrees = [
        (r1.disbelief_degree(a)?, r1.disbelief_degree(&!*a)?),
        (r2.disbelief_degree(a)?, r2.disbelief_degree(&!*a)?),
    ];
    let start = ocf_from_rpm(r3);
    let spohn_from_r3 = strengths(max_strength)
        .map(|beta| Ok((beta, rpm_from_ocf(&spohn_conditionalize(&start, a, beta)?))))
        .collect::<Result<Vec<_>>>()?;

    let only_r3 = vec![r3.clone()];
    let is_history = |m: &RankedModel| m == r1 || m == r2;
    let reached_r1 = spohn_from_r3.iter().any(|(_, m)| m == r1);
    let reached_r2 = spohn_from_r3.iter().any(|(_, m)| m == r2);
    let steps: [(&str, bool); 5] = [
        (
            "believing A forces both r1 and r2 to r3",
            believe_from_r1 == only_r3 && believe_from_r2 == only_r3,
        ),
        (
            "believing or suspending on A cannot return r3 to r1 or r2",
            !believe_from_r3
                .iter()
                .chain(&suspend_from_r3)
                .any(is_history),
        ),
        (
            "disbelieving A can return r3 to r1 and to r2",
            disbelieve_from_r3.contains(r1) && disbelieve_from_r3.contains(r2),
        ),
        (
            "r1 and r2 give A degree 1 and not-A degree 0",
            degrees == [(1, 0), (1, 0)],
        ),
        (
            "no strength returns r3 to both r1 and r2",
            !(reached_r1 && reached_r2),
        ),
    ];
    let mut report = AxiomReport::new(Axiom::Counterexample);
    for (step, holds) in steps {
        report.record(|| {
            (!holds).then(|| Witness::Counterexample {
                step: step.to_string(),
            })
        });
    }
    Ok(CounterexampleReport {
        believe_from_r1,
        believe_from_r2,
        believe_from_r3,
        suspend_from_r3,
        disbelieve_from_r3,
        degrees,
        spohn_from_r3,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_fixture_matches_the_two_atom_reading() {
        let f = CounterexampleFixture::standard();
        assert_eq!(f.r1.format(&f.universe), "[aB] [AB Ab ab]");
        assert_eq!(f.r2.format(&f.universe), "[aB] [AB Ab] [ab]");
        assert_eq!(f.r3.format(&f.universe), "[AB Ab] [aB] [ab]");
        assert_eq!(f.universe.format_prop(&f.a), "{AB Ab}");
    }

    #[test]
    fn argument_goes_through() {
        let report = counterexample_verify(&CounterexampleFixture::standard(), 3).unwrap();
        assert!(report.report.passed());
        assert_eq!(report.report.cases, 5);
        assert_eq!(report.disbelieve_from_r3.len(), 3);
        assert_eq!(report.spohn_from_r3.len(), 7);
    }

    #[test]
    fn generalized_fixture() {
        let f = CounterexampleFixture::generalized([2, 1, 1, 1]).unwrap();
        assert_eq!(f.universe.labels(), ["w1a", "w1b", "w2a", "w3a", "w4a"]);
        assert!(counterexample_verify(&f, 3).unwrap().report.passed());
        assert!(CounterexampleFixture::generalized([0, 1, 1, 1]).is_err());
    }
}
