//! Rankings an input may lead to once B9 and B10 are imposed.
//!
//! B9 and B10 force every rule to keep the relative order of worlds inside
//! the input proposition and inside its complement. Together with the total
//! content the attitude demands, that pins down a small set of candidates.

use super::enumerate::{canonical_cmp, enumerate_ranked_models};
use super::MAX_ENUMERATION_BOUND;
use crate::error::{Error, Result};
use crate::ranking::RankedModel;
use crate::revision::{attitude_content, EpistemicInput};
use crate::world::Proposition;

fn same_side_orders_match(
    model: &RankedModel,
    candidate: &RankedModel,
    prop: &Proposition,
) -> bool {
    let (before, after) = (model.ranks(), candidate.ranks());
    let width = model.width();
    (0..width).all(|w1| {
        ((w1 + 1)..width).all(|w2| {
            prop.contains(w1) != prop.contains(w2)
                || before[w1].cmp(&before[w2]) == after[w1].cmp(&after[w2])
        })
    })
}

/// Filters the full enumeration: keeps every ranking whose within-side
/// orders equal `model`'s and whose first block is the content the input
/// demands. Canonical order.
pub fn constrained_successors(
    model: &RankedModel,
    input: &EpistemicInput,
) -> Result<Vec<RankedModel>> {
    let prop = input.proposition;
    if !prop.is_contingent() {
        return Err(Error::DegenerateInput);
    }
    let required = attitude_content(model, input).content();
    Ok(
        enumerate_ranked_models(model.width(), MAX_ENUMERATION_BOUND)?
            .into_iter()
            .filter(|c| c.most_believable() == required && same_side_orders_match(model, c, &prop))
            .collect(),
    )
}

/// Builds the same set directly: every interleaving of the two side chains
/// (where a level may take the next block of one side, the other, or both),
/// then keeps those with the demanded first block. Canonical order.
pub fn merged_successors(model: &RankedModel, input: &EpistemicInput) -> Result<Vec<RankedModel>> {
    let prop = input.proposition;
    if !prop.is_contingent() {
        return Err(Error::DegenerateInput);
    }
    let chain = |side: Proposition| -> Vec<Proposition> {
        model
            .blocks()
            .iter()
            .map(|b| *b & side)
            .filter(|b| !b.is_empty())
            .collect()
    };
    let inside = chain(prop);
    let outside = chain(prop.complement());
    let mut out = Vec::new();
    interleave(&inside, &outside, &mut Vec::new(), &mut out);
    let required = attitude_content(model, input).content();
    let mut result: Vec<RankedModel> = out
        .into_iter()
        .map(RankedModel::new)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|c| c.most_believable() == required)
        .collect();
    result.sort_by(canonical_cmp);
    Ok(result)
}

fn interleave(
    left: &[Proposition],
    right: &[Proposition],
    prefix: &mut Vec<Proposition>,
    out: &mut Vec<Vec<Proposition>>,
) {
    match (left.split_first(), right.split_first()) {
        (None, None) => out.push(prefix.clone()),
        (Some((l, rest)), None) => {
            prefix.push(*l);
            interleave(rest, right, prefix, out);
            prefix.pop();
        }
        (None, Some((r, rest))) => {
            prefix.push(*r);
            interleave(left, rest, prefix, out);
            prefix.pop();
        }
        (Some((l, lrest)), Some((r, rrest))) => {
            prefix.push(*l);
            interleave(lrest, right, prefix, out);
            prefix.pop();
            prefix.push(*r);
            interleave(left, rrest, prefix, out);
            prefix.pop();
            prefix.push(*l | *r);
            interleave(lrest, rrest, prefix, out);
            prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::CounterexampleFixture;

    #[test]
    fn forced_successors() {
        let f = CounterexampleFixture::standard();
        let believe = EpistemicInput::believe(f.a);
        assert_eq!(
            constrained_successors(&f.r1, &believe).unwrap(),
            vec![f.r3.clone()]
        );
        assert_eq!(
            constrained_successors(&f.r2, &believe).unwrap(),
            vec![f.r3.clone()]
        );
        let disbelieve = EpistemicInput::disbelieve(f.a);
        let third = RankedModel::new(vec![
            f.universe.prop(["aB"]).unwrap(),
            f.universe.prop(["ab"]).unwrap(),
            f.a,
        ])
        .unwrap();
        let mut expected = vec![f.r1.clone(), f.r2.clone(), third];
        expected.sort_by(canonical_cmp);
        assert_eq!(
            constrained_successors(&f.r3, &disbelieve).unwrap(),
            expected
        );
        assert_eq!(merged_successors(&f.r3, &disbelieve).unwrap(), expected);
    }

    #[test]
    fn both_routes_agree_on_four_worlds() {
        let models = enumerate_ranked_models(4, 6).unwrap();
        for model in &models {
            for prop in Proposition::all(4).filter(Proposition::is_contingent) {
                for attitude in crate::revision::Attitude::ALL {
                    let input = EpistemicInput::new(prop, attitude);
                    assert_eq!(
                        constrained_successors(model, &input).unwrap(),
                        merged_successors(model, &input).unwrap()
                    );
                }
            }
        }
    }
}
