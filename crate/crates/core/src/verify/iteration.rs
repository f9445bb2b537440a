use super::{Axiom, AxiomReport, Limits, Witness};
use crate::error::{Error, Result};
use crate::ranking::RankedModel;
use crate::revision::{apply_rule, revise, EpistemicInput, RevisionRule};
use crate::world::Proposition;

/// B9 (`B ⊆ A`) or B10 (`B ⊆ ¬A`): after believing `A` with `rule`, revising
/// by `B` yields the same content as revising the original by `B`. Checked
/// for every contingent `A` and every non-empty `B` on the relevant side.
pub fn check_iteration_axiom<R: RevisionRule + ?Sized>(
    rule: &R,
    axiom: Axiom,
    model: &RankedModel,
    limits: &Limits,
) -> Result<AxiomReport> {
    let width = model.width();
    limits.check_width(width)?;
    let outside = match axiom {
        Axiom::B9 => false,
        Axiom::B10 => true,
        other => panic!("{other} is not an iteration axiom"),
    };
    let mut report = AxiomReport::new(axiom);
    for a in Proposition::all(width).filter(Proposition::is_contingent) {
        let after = apply_rule(rule, model, &EpistemicInput::believe(a))?;
        let side = if outside { a.complement() } else { a };
        for b in Proposition::all(width) {
            if b.is_empty() || !b.is_subset(&side) {
                continue;
            }
            let holds = revise(&after, &b) == revise(model, &b);
            report.record(|| {
                (!holds).then(|| Witness::Iteration {
                    axiom,
                    rule: rule.name(),
                    model: model.clone(),
                    a,
                    b,
                })
            });
        }
    }
    Ok(report)
}

/// Every pair of distinct worlds on the same side of the input keeps its
/// relative order through `rule`.
pub fn check_order_preservation<R: RevisionRule + ?Sized>(
    rule: &R,
    model: &RankedModel,
    input: &EpistemicInput,
) -> Result<AxiomReport> {
    if !input.proposition.is_contingent() {
        return Err(Error::DegenerateInput);
    }
    let after = apply_rule(rule, model, input)?;
    let prop = input.proposition;
    let mut report = AxiomReport::new(Axiom::OrderPreservation);
    for w1 in 0..model.width() {
        for w2 in (w1 + 1)..model.width() {
            if prop.contains(w1) != prop.contains(w2) {
                continue;
            }
            let before = model.preference(w1, w2)?;
            let now = after.preference(w1, w2)?;
            report.record(|| {
                (before != now).then(|| Witness::Order {
                    rule: rule.name(),
                    model: model.clone(),
                    input: *input,
                    worlds: (w1, w2),
                    before,
                    after: now,
                })
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revision::{FlipRule, Lexicographic, Natural, SpohnRule};
    use crate::verify::CounterexampleFixture;

    #[test]
    fn flip_fails_b10_on_r2() {
        let f = CounterexampleFixture::standard();
        let report =
            check_iteration_axiom(&FlipRule, Axiom::B10, &f.r2, &Limits::default()).unwrap();
        assert!(!report.passed());
        assert!(matches!(
            report.witness,
            Some(Witness::Iteration {
                axiom: Axiom::B10,
                ..
            })
        ));
    }

    #[test]
    fn order_preservation_examples() {
        let f = CounterexampleFixture::standard();
        let believe = EpistemicInput::believe(f.a);
        assert!(check_order_preservation(&Lexicographic, &f.r1, &believe)
            .unwrap()
            .passed());
        let spohn = SpohnRule::new(1).unwrap();
        assert!(check_order_preservation(&spohn, &f.r2, &believe)
            .unwrap()
            .passed());
        assert!(!check_order_preservation(&FlipRule, &f.r2, &believe)
            .unwrap()
            .passed());
        assert!(check_order_preservation(&Natural, &f.r2, &believe)
            .unwrap()
            .passed());
        let degenerate = EpistemicInput::believe(f.universe.full());
        assert_eq!(
            check_order_preservation(&Natural, &f.r2, &degenerate),
            Err(Error::DegenerateInput)
        );
    }
}
