//! Reversibility: after any input on `A`, some input on the same `A` must
//! restore the previous state.

use rayon::prelude::*;

use super::enumerate::{enumerate_normalized_ocfs, enumerate_ranked_models};
use super::{Axiom, AxiomReport, Limits, Witness, MAX_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::ranking::{Ocf, RankedModel};
use crate::revision::{
    apply_rule, apply_strength, reverse_strength, spohn_conditionalize, Attitude, EpistemicInput,
    RevisionRule,
};
use crate::world::Proposition;

/// The input that undid a change.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reversal {
    Attitude(Attitude),
    Strength(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reversibility {
    pub report: AxiomReport,
    /// Set when the check passed.
    pub reversal: Option<Reversal>,
}

/// `0, 1, -1, 2, -2, …, max, -max`.
pub(crate) fn strengths(max: u64) -> impl Iterator<Item = i64> {
    let max = max as i64;
    std::iter::once(0).chain((1..=max).flat_map(|s| [s, -s]))
}

/// Tries the three attitudes on the input's proposition, then (for rules
/// driven by strengths) every signed strength up to `limits.max_strength`.
pub fn check_reversibility<R: RevisionRule + ?Sized>(
    rule: &R,
    model: &RankedModel,
    input: &EpistemicInput,
    limits: &Limits,
) -> Result<Reversibility> {
    let successor = apply_rule(rule, model, input)?;
    let prop = input.proposition;
    let mut reversal = None;
    for attitude in Attitude::ALL {
        if apply_rule(rule, &successor, &EpistemicInput::new(prop, attitude))? == *model {
            reversal = Some(Reversal::Attitude(attitude));
            break;
        }
    }
    if reversal.is_none() {
        for strength in strengths(limits.max_strength) {
            match apply_strength(rule, &successor, &prop, strength)? {
                None => break,
                Some(back) if back == *model => {
                    reversal = Some(Reversal::Strength(strength));
                    break;
                }
                Some(_) => {}
            }
        }
    }
    let mut report = AxiomReport::new(Axiom::Reversibility);
    report.record(|| {
        reversal.is_none().then(|| Witness::Irreversible {
            rule: rule.name(),
            model: model.clone(),
            input: *input,
            successor: successor.clone(),
            max_strength: limits.max_strength,
        })
    });
    Ok(Reversibility { report, reversal })
}

/// Searches models in canonical order, then contingent propositions in mask
/// order, then believe/disbelieve/suspend, for the first input `rule`
/// cannot undo.
pub fn find_irreversibility<R: RevisionRule + ?Sized>(
    rule: &R,
    width: usize,
    limits: &Limits,
) -> Result<Option<Witness>> {
    if width < 4 {
        return Err(Error::UniverseTooSmall { width, min: 4 });
    }
    limits.check_width(width)?;
    let models = enumerate_ranked_models(width, MAX_ENUMERATION_BOUND)?;
    let found: Option<Result<Witness>> = models.par_iter().find_map_first(|model| {
        for prop in Proposition::all(width).filter(Proposition::is_contingent) {
            for attitude in Attitude::ALL {
                let input = EpistemicInput::new(prop, attitude);
                match check_reversibility(rule, model, &input, limits) {
                    Err(e) => return Some(Err(e)),
                    Ok(r) => {
                        if let Some(w) = r.report.witness {
                            return Some(Ok(w));
                        }
                    }
                }
            }
        }
        None
    });
    found.transpose()
}

/// Reversibility at the OCF level. With `max_strength` set, every strength
/// in range is tried; without it the single candidate
/// [`reverse_strength`] is tried.
pub fn check_ocf_reversibility(
    ocf: &Ocf,
    prop: &Proposition,
    alpha: i64,
    max_strength: Option<u64>,
) -> Result<Reversibility> {
    let successor = spohn_conditionalize(ocf, prop, alpha)?;
    let candidates: Vec<i64> = match max_strength {
        Some(max) => strengths(max).collect(),
        None => vec![reverse_strength(ocf, prop)?],
    };
    let mut reversal = None;
    for beta in candidates {
        if spohn_conditionalize(&successor, prop, beta)? == *ocf {
            reversal = Some(Reversal::Strength(beta));
            break;
        }
    }
    let mut report = AxiomReport::new(Axiom::Reversibility);
    report.record(|| {
        reversal.is_none().then(|| Witness::OcfIrreversible {
            ocf: ocf.clone(),
            prop: *prop,
            alpha,
            successor: successor.clone(),
            max_strength,
        })
    });
    Ok(Reversibility { report, reversal })
}

/// Every normalized OCF with values up to `max_value`, every contingent
/// proposition, every `alpha` in `±max_alpha`.
pub fn find_ocf_irreversibility(
    width: usize,
    max_value: u64,
    max_alpha: u64,
    max_strength: Option<u64>,
    limits: &Limits,
) -> Result<AxiomReport> {
    limits.check_width(width)?;
    let ocfs = enumerate_normalized_ocfs(width, max_value, MAX_ENUMERATION_BOUND)?;
    let mut report = AxiomReport::new(Axiom::Reversibility);
    for ocf in &ocfs {
        for prop in Proposition::all(width).filter(Proposition::is_contingent) {
            for alpha in -(max_alpha as i64)..=(max_alpha as i64) {
                let checked = check_ocf_reversibility(ocf, &prop, alpha, max_strength)?;
                report = report.merge(checked.report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revision::{Lexicographic, Natural, SpohnRule};
    use crate::verify::CounterexampleFixture;

    #[test]
    fn strength_order() {
        assert_eq!(strengths(2).collect::<Vec<_>>(), [0, 1, -1, 2, -2]);
    }

    #[test]
    fn lex_cannot_undo_believing_a_from_r1() {
        let f = CounterexampleFixture::standard();
        let limits = Limits::default();
        let r = check_reversibility(
            &Lexicographic,
            &f.r1,
            &EpistemicInput::believe(f.a),
            &limits,
        )
        .unwrap();
        assert!(!r.report.passed());
        assert_eq!(r.reversal, None);
        let r = check_reversibility(
            &Lexicographic,
            &f.r3,
            &EpistemicInput::believe(f.a),
            &limits,
        )
        .unwrap();
        assert_eq!(r.reversal, Some(Reversal::Attitude(Attitude::Believe)));
    }

    #[test]
    fn ocf_reversal_uses_the_reverse_strength() {
        let f = CounterexampleFixture::standard();
        let k1 = Ocf::new(vec![1, 1, 0, 2]).unwrap();
        let r = check_ocf_reversibility(&k1, &f.a, 1, Some(3)).unwrap();
        assert_eq!(r.reversal, Some(Reversal::Strength(-1)));
        let r = check_ocf_reversibility(&k1, &f.a, 1, None).unwrap();
        assert_eq!(r.reversal, Some(Reversal::Strength(-1)));
    }

    #[test]
    fn rules_are_irreversible_on_four_worlds() {
        let limits = Limits::default();
        assert!(find_irreversibility(&Lexicographic, 4, &limits)
            .unwrap()
            .is_some());
        assert!(find_irreversibility(&Natural, 4, &limits)
            .unwrap()
            .is_some());
        let spohn = SpohnRule::new(1).unwrap();
        assert!(find_irreversibility(&spohn, 4, &limits).unwrap().is_some());
        assert_eq!(
            find_irreversibility(&Natural, 3, &limits),
            Err(Error::UniverseTooSmall { width: 3, min: 4 })
        );
    }
}
