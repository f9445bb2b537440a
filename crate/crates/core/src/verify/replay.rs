use super::reversibility::strengths;
use super::{Axiom, Witness};
use crate::error::{Error, Result};
use crate::ranking::RankedModel;
use crate::revision::{
    apply_rule, apply_strength, revise, spohn_conditionalize, Attitude, EpistemicInput,
    RevisionRule,
};
use crate::world::{Proposition, TotalContent};

/// Membership-level inclusion of belief sets: every proposition believed
/// under `smaller` is believed under `larger`.
fn belief_set_included(smaller: &TotalContent, larger: &TotalContent) -> Result<bool> {
    let width = smaller.content().width();
    for x in Proposition::all(width) {
        if smaller.believes(&x)? && !larger.believes(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn same_belief_set(a: &TotalContent, b: &TotalContent) -> Result<bool> {
    Ok(belief_set_included(a, b)? && belief_set_included(b, a)?)
}

fn named_rule<'r>(
    rule: Option<&'r dyn RevisionRule>,
    expected: &str,
) -> Result<&'r dyn RevisionRule> {
    let rule = rule.ok_or(Error::MissingRule)?;
    if rule.name() != expected {
        return Err(Error::RuleMismatch {
            expected: expected.to_string(),
            found: rule.name(),
        });
    }
    Ok(rule)
}

/// Re-derives a witness's violation through the public operations,
/// comparing belief sets member by member rather than through content
/// inclusion. `Ok(true)` means the violation reproduces. Rule-based
/// witnesses need the rule that produced them.
pub fn replay(witness: &Witness, rule: Option<&dyn RevisionRule>) -> Result<bool> {
    match witness {
        Witness::Agm { axiom, model, a, b } => replay_agm(*axiom, model, *a, *b),
        Witness::Iteration {
            axiom,
            rule: name,
            model,
            a,
            b,
        } => {
            let rule = named_rule(rule, name)?;
            let side = match axiom {
                Axiom::B10 => a.complement(),
                _ => *a,
            };
            if b.is_empty() || !b.entails(&side)? {
                return Ok(false);
            }
            let after = apply_rule(rule, model, &EpistemicInput::believe(*a))?;
            Ok(!same_belief_set(&revise(&after, b), &revise(model, b))?)
        }
        Witness::Order {
            rule: name,
            model,
            input,
            worlds: (w1, w2),
            ..
        } => {
            let rule = named_rule(rule, name)?;
            let prop = input.proposition;
            if prop.contains(*w1) != prop.contains(*w2) {
                return Ok(false);
            }
            let after = apply_rule(rule, model, input)?;
            let pair = Proposition::from_indices(model.width(), [*w1, *w2])?;
            // Revising by the pair reveals the preference between its worlds.
            Ok(revise(model, &pair) != revise(&after, &pair))
        }
        Witness::Degree { model, a, b } => match b {
            None => {
                let Some(w) = a.first() else { return Ok(false) };
                Ok(a.len() == 1 && model.disbelief_degree(a)? != model.rank_of(w)?)
            }
            Some(b) => {
                let (da, db) = (model.disbelief_degree(a)?, model.disbelief_degree(b)?);
                let union = a.union(b)?;
                let first = model.blocks()[model.disbelief_degree(&union)?];
                Ok((da < db) != first.is_disjoint(b))
            }
        },
        Witness::Irreversible {
            rule: name,
            model,
            input,
            successor,
            max_strength,
        } => {
            let rule = named_rule(rule, name)?;
            if apply_rule(rule, model, input)? != *successor {
                return Ok(false);
            }
            let prop = input.proposition;
            for attitude in Attitude::ALL {
                if apply_rule(rule, successor, &EpistemicInput::new(prop, attitude))? == *model {
                    return Ok(false);
                }
            }
            for strength in strengths(*max_strength) {
                if apply_strength(rule, successor, &prop, strength)?.as_ref() == Some(model) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::OcfIrreversible {
            ocf,
            prop,
            alpha,
            successor,
            max_strength,
        } => {
            if spohn_conditionalize(ocf, prop, *alpha)? != *successor {
                return Ok(false);
            }
            let Some(max) = max_strength else {
                return Ok(false);
            };
            for beta in strengths(*max) {
                if spohn_conditionalize(successor, prop, beta)? == *ocf {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::Counterexample { .. } => {
            let fixture = super::CounterexampleFixture::standard();
            Ok(!super::counterexample_verify(&fixture, 3)?.report.passed())
        }
    }
}

fn replay_agm(
    axiom: Axiom,
    model: &RankedModel,
    a: Proposition,
    b: Option<Proposition>,
) -> Result<bool> {
    let current = model.total_content();
    let revised = revise(model, &a);
    let violated = match (axiom, b) {
        (Axiom::B2, _) => !revised.believes(&a)?,
        (Axiom::B3, _) => !belief_set_included(&revised, &current.expand(&a)?)?,
        (Axiom::B4, _) => {
            !current.believes(&a.complement())?
                && !belief_set_included(&current.expand(&a)?, &revised)?
        }
        (Axiom::B5, _) => {
            let inconsistent = revised.believes(&a.complement())? && revised.believes(&a)?;
            let contradictory = a.is_empty();
            inconsistent != contradictory
        }
        (Axiom::B7, Some(b)) => {
            let joint = revise(model, &a.intersect(&b)?);
            !belief_set_included(&joint, &revised.expand(&b)?)?
        }
        (Axiom::B8, Some(b)) => {
            let joint = revise(model, &a.intersect(&b)?);
            !revised.believes(&b.complement())?
                && !belief_set_included(&revised.expand(&b)?, &joint)?
        }
        _ => false,
    };
    Ok(violated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revision::{FlipRule, Lexicographic};
    use crate::verify::{
        check_iteration_axiom, check_order_preservation, check_reversibility,
        CounterexampleFixture, Limits,
    };

    #[test]
    fn failing_witnesses_replay() {
        let f = CounterexampleFixture::standard();
        let limits = Limits::default();
        let b10 = check_iteration_axiom(&FlipRule, Axiom::B10, &f.r2, &limits).unwrap();
        assert!(replay(b10.witness.as_ref().unwrap(), Some(&FlipRule)).unwrap());

        let order =
            check_order_preservation(&FlipRule, &f.r2, &EpistemicInput::believe(f.a)).unwrap();
        assert!(replay(order.witness.as_ref().unwrap(), Some(&FlipRule)).unwrap());

        let rev = check_reversibility(
            &Lexicographic,
            &f.r1,
            &EpistemicInput::believe(f.a),
            &limits,
        )
        .unwrap();
        let witness = rev.report.witness.unwrap();
        assert!(replay(&witness, Some(&Lexicographic)).unwrap());
        assert_eq!(replay(&witness, None), Err(Error::MissingRule));
        assert!(matches!(
            replay(&witness, Some(&FlipRule)),
            Err(Error::RuleMismatch { .. })
        ));
    }

    #[test]
    fn fabricated_agm_witnesses_do_not_replay() {
        let f = CounterexampleFixture::standard();
        for axiom in [Axiom::B2, Axiom::B3, Axiom::B4, Axiom::B5] {
            let w = Witness::Agm {
                axiom,
                model: f.r1.clone(),
                a: f.a,
                b: None,
            };
            assert!(!replay(&w, None).unwrap());
        }
        for axiom in [Axiom::B7, Axiom::B8] {
            let w = Witness::Agm {
                axiom,
                model: f.r1.clone(),
                a: f.a,
                b: Some(f.universe.prop(["AB", "aB"]).unwrap()),
            };
            assert!(!replay(&w, None).unwrap());
        }
    }
}
