//! Belief revision over ranked models.
//!
//! [`revise`] is the single-step rule: the new total content is `E_i ∩ A`
//! for the first block `E_i` meeting `A`. Iterated revision needs a whole
//! successor ranking, which is what a [`RevisionRule`] produces. Three rules
//! are provided: [`Lexicographic`], [`Natural`] and [`SpohnRule`] (which
//! routes through an [`Ocf`] and [`spohn_conditionalize`]). [`FlipRule`] is
//! deliberately broken and exists so that the checkers in
//! [`verify`](crate::verify) can be seen to fail.

use std::fmt;

use crate::error::{Error, Result};
use crate::ranking::{ocf_from_rpm, rpm_from_ocf, Ocf, RankedModel};
use crate::world::{Proposition, TotalContent};

/// Belief, disbelief, or suspension of judgment in a proposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Attitude {
    Believe,
    Disbelieve,
    Suspend,
}

impl Attitude {
    pub const ALL: [Attitude; 3] = [Attitude::Believe, Attitude::Disbelieve, Attitude::Suspend];

    /// The signed strength encoding: believe is `+strength`, disbelieve is
    /// `-strength`, suspend is 0.
    pub fn signed(self, strength: u64) -> i64 {
        match self {
            Attitude::Believe => strength as i64,
            Attitude::Disbelieve => -(strength as i64),
            Attitude::Suspend => 0,
        }
    }
}

impl fmt::Display for Attitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Attitude::Believe => "believe",
            Attitude::Disbelieve => "disbelieve",
            Attitude::Suspend => "suspend",
        })
    }
}

/// A proposition paired with an attitude towards it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EpistemicInput {
    pub proposition: Proposition,
    pub attitude: Attitude,
}

impl EpistemicInput {
    pub fn new(proposition: Proposition, attitude: Attitude) -> Self {
        EpistemicInput {
            proposition,
            attitude,
        }
    }

    pub fn believe(proposition: Proposition) -> Self {
        Self::new(proposition, Attitude::Believe)
    }

    pub fn disbelieve(proposition: Proposition) -> Self {
        Self::new(proposition, Attitude::Disbelieve)
    }

    pub fn suspend(proposition: Proposition) -> Self {
        Self::new(proposition, Attitude::Suspend)
    }
}

/// Total content after coming to believe `prop`. Empty iff `prop` is.
///
/// # Panics
///
/// Panics if `prop` ranges over a different universe than `model`.
pub fn revise(model: &RankedModel, prop: &Proposition) -> TotalContent {
    assert_eq!(model.width(), prop.width(), "universe mismatch");
    match model.first_consistent_block(prop) {
        Some(i) => TotalContent::new(model.blocks()[i] & *prop),
        None => TotalContent::new(*prop),
    }
}

/// Total content after suspending judgment on `prop`: what is believed
/// both after believing and after disbelieving it. Belief sets intersect,
/// so contents unite.
pub fn suspend_content(model: &RankedModel, prop: &Proposition) -> TotalContent {
    let believe = revise(model, prop).content();
    let disbelieve = revise(model, &prop.complement()).content();
    TotalContent::new(believe | disbelieve)
}

/// The total content an input demands of any successor of `model`.
pub fn attitude_content(model: &RankedModel, input: &EpistemicInput) -> TotalContent {
    let prop = &input.proposition;
    match input.attitude {
        Attitude::Believe => revise(model, prop),
        Attitude::Disbelieve => revise(model, &prop.complement()),
        Attitude::Suspend => suspend_content(model, prop),
    }
}

/// A deterministic rule for revising whole rankings.
///
/// Implementations may assume the proposition is contingent and ranges over
/// the model's universe; [`apply_rule`] enforces both.
pub trait RevisionRule: Sync {
    fn name(&self) -> String;

    fn revise_ranking(
        &self,
        model: &RankedModel,
        prop: &Proposition,
        attitude: Attitude,
    ) -> RankedModel;

    /// Rules driven by numeric strengths accept any signed strength here.
    fn revise_with_strength(
        &self,
        _model: &RankedModel,
        _prop: &Proposition,
        _strength: i64,
    ) -> Option<RankedModel> {
        None
    }
}

fn check_input(model: &RankedModel, prop: &Proposition) -> Result<()> {
    if prop.width() != model.width() {
        return Err(Error::UniverseMismatch {
            left: model.width(),
            right: prop.width(),
        });
    }
    if !prop.is_contingent() {
        return Err(Error::DegenerateInput);
    }
    Ok(())
}

pub fn apply_rule<R: RevisionRule + ?Sized>(
    rule: &R,
    model: &RankedModel,
    input: &EpistemicInput,
) -> Result<RankedModel> {
    check_input(model, &input.proposition)?;
    Ok(rule.revise_ranking(model, &input.proposition, input.attitude))
}

/// Applies a signed-strength input; `Ok(None)` if the rule takes attitudes only.
pub fn apply_strength<R: RevisionRule + ?Sized>(
    rule: &R,
    model: &RankedModel,
    prop: &Proposition,
    strength: i64,
) -> Result<Option<RankedModel>> {
    check_input(model, prop)?;
    Ok(rule.revise_with_strength(model, prop, strength))
}

/// Blocks of `model` restricted to `side`, empty ones dropped.
fn side_blocks(model: &RankedModel, side: Proposition) -> Vec<Proposition> {
    model
        .blocks()
        .iter()
        .map(|b| *b & side)
        .filter(|b| !b.is_empty())
        .collect()
}

fn merge_by_relative_rank(left: Vec<Proposition>, right: Vec<Proposition>) -> RankedModel {
    let levels = left.len().max(right.len());
    let width = left.first().or(right.first()).expect("non-empty").width();
    let empty = Proposition::empty(width).expect("valid width");
    RankedModel::from_blocks_lossy(
        (0..levels).map(|i| *left.get(i).unwrap_or(&empty) | *right.get(i).unwrap_or(&empty)),
    )
}

/// Target side first, each side keeping its internal order. Suspension
/// merges the two sides level by level.
#[derive(Clone, Copy, Debug, Default)]
pub struct Lexicographic;

impl RevisionRule for Lexicographic {
    fn name(&self) -> String {
        "lex".into()
    }

    fn revise_ranking(
        &self,
        model: &RankedModel,
        prop: &Proposition,
        attitude: Attitude,
    ) -> RankedModel {
        let inside = side_blocks(model, *prop);
        let outside = side_blocks(model, prop.complement());
        match attitude {
            Attitude::Believe => RankedModel::from_blocks_lossy(inside.into_iter().chain(outside)),
            Attitude::Disbelieve => {
                RankedModel::from_blocks_lossy(outside.into_iter().chain(inside))
            }
            Attitude::Suspend => merge_by_relative_rank(inside, outside),
        }
    }
}

/// Moves only the demanded total content to the front; every other world
/// keeps its block.
#[derive(Clone, Copy, Debug, Default)]
pub struct Natural;

impl RevisionRule for Natural {
    fn name(&self) -> String {
        "natural".into()
    }

    fn revise_ranking(
        &self,
        model: &RankedModel,
        prop: &Proposition,
        attitude: Attitude,
    ) -> RankedModel {
        let front = attitude_content(model, &EpistemicInput::new(*prop, attitude)).content();
        RankedModel::from_blocks_lossy(
            std::iter::once(front).chain(model.blocks().iter().map(|b| *b - front)),
        )
    }
}

/// Conditionalizes the rank-valued OCF of a model and collapses the result
/// back to a ranking. Believe and disbelieve use strength `alpha`.
#[derive(Clone, Copy, Debug)]
pub struct SpohnRule {
    alpha: u64,
}

impl SpohnRule {
    pub fn new(alpha: u64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::ZeroStrength);
        }
        Ok(SpohnRule { alpha })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }
}

impl RevisionRule for SpohnRule {
    fn name(&self) -> String {
        format!("spohn:{}", self.alpha)
    }

    fn revise_ranking(
        &self,
        model: &RankedModel,
        prop: &Proposition,
        attitude: Attitude,
    ) -> RankedModel {
        self.revise_with_strength(model, prop, attitude.signed(self.alpha))
            .expect("strength rule")
    }

    fn revise_with_strength(
        &self,
        model: &RankedModel,
        prop: &Proposition,
        strength: i64,
    ) -> Option<RankedModel> {
        let kappa = spohn_conditionalize(&ocf_from_rpm(model), prop, strength)
            .expect("contingent input and small ranks");
        Some(rpm_from_ocf(&kappa))
    }
}

/// Like [`Lexicographic`], but turns the non-target side upside down.
/// Violates the iteration axioms; used to exercise failing checks.
#[derive(Clone, Copy, Debug, Default)]
pub struct FlipRule;

impl RevisionRule for FlipRule {
    fn name(&self) -> String {
        "flip".into()
    }

    fn revise_ranking(
        &self,
        model: &RankedModel,
        prop: &Proposition,
        attitude: Attitude,
    ) -> RankedModel {
        let inside = side_blocks(model, *prop);
        let mut outside = side_blocks(model, prop.complement());
        outside.reverse();
        match attitude {
            Attitude::Believe => RankedModel::from_blocks_lossy(inside.into_iter().chain(outside)),
            Attitude::Disbelieve => {
                let mut inside = inside;
                inside.reverse();
                let outside = side_blocks(model, prop.complement());
                RankedModel::from_blocks_lossy(outside.into_iter().chain(inside))
            }
            Attitude::Suspend => merge_by_relative_rank(inside, outside),
        }
    }
}

/// `(A, α)`-conditionalization. A non-negative `alpha` targets `prop`, a
/// negative one targets its complement; the target side is shifted down to
/// minimum 0 and the other side to minimum `|alpha|`.
pub fn spohn_conditionalize(ocf: &Ocf, prop: &Proposition, alpha: i64) -> Result<Ocf> {
    if prop.width() != ocf.width() {
        return Err(Error::UniverseMismatch {
            left: ocf.width(),
            right: prop.width(),
        });
    }
    if !prop.is_contingent() {
        return Err(Error::DegenerateInput);
    }
    let target = if alpha >= 0 { *prop } else { prop.complement() };
    let strength = alpha.unsigned_abs();
    let target_min = ocf.kappa_degree(&target)?;
    let other_min = ocf.kappa_degree(&target.complement())?;
    let kappa = (0..ocf.width())
        .map(|w| {
            let k = ocf.kappa(w);
            if target.contains(w) {
                Ok(k - target_min)
            } else {
                (k - other_min).checked_add(strength).ok_or(Error::Overflow)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ocf::from_normalized(kappa))
}

/// The strength that undoes any conditionalization of `ocf` on `prop`:
/// `κ(¬A) − κ(A)`.
pub fn reverse_strength(ocf: &Ocf, prop: &Proposition) -> Result<i64> {
    if !prop.is_contingent() {
        return Err(Error::DegenerateInput);
    }
    let inside = ocf.kappa_degree(prop)?;
    let outside = ocf.kappa_degree(&prop.complement())?;
    let inside = i64::try_from(inside).map_err(|_| Error::Overflow)?;
    let outside = i64::try_from(outside).map_err(|_| Error::Overflow)?;
    Ok(outside - inside)
}
