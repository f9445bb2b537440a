//! Belief revision over finite sets of possible worlds.
//!
//! Propositions are sets of worlds ([`world`]). A belief state is either a
//! [`RankedModel`], an ordered partition of the worlds with the most
//! believable first, or an [`Ocf`], which grades every world with a natural
//! number of disbelief ([`ranking`]). Revising a ranked model by `A` leaves
//! `E_i ∩ A` as the new total content, `E_i` being the first block that
//! meets `A` ([`revision`]).
//!
//! The [`verify`] module checks, by exhaustive enumeration over small
//! universes, the single-step revision axioms B1–B8, the iteration axioms
//! B9/B10, reversibility of belief change, and a counterexample showing that
//! no rule for revising ranked models satisfies all three.
//!
//! ```
//! use rankrev::{revise, Lexicographic, EpistemicInput, RankedModel, Universe, apply_rule};
//!
//! let u = Universe::from_atoms(["A", "B"])?;
//! let a = u.prop(["AB", "Ab"])?;
//! let r1 = RankedModel::new(vec![u.prop(["aB"])?, u.prop(["AB", "Ab", "ab"])?])?;
//!
//! assert_eq!(revise(&r1, &a).content(), a);
//! let r3 = apply_rule(&Lexicographic, &r1, &EpistemicInput::believe(a))?;
//! assert_eq!(r3.format(&u), "[AB Ab] [aB] [ab]");
//! # Ok::<(), rankrev::Error>(())
//! ```

pub mod error;
pub mod ranking;
pub mod revision;
pub mod verify;
pub mod world;

pub use error::{Error, Result};
pub use ranking::{ocf_from_rpm, rpm_from_ocf, DegreeReport, Ocf, Preference, RankedModel};
pub use revision::{
    apply_rule, apply_strength, attitude_content, reverse_strength, revise, spohn_conditionalize,
    suspend_content, Attitude, EpistemicInput, FlipRule, Lexicographic, Natural, RevisionRule,
    SpohnRule,
};
pub use world::{Proposition, TotalContent, Universe};

// The guide under `book/` is compiled as doc tests so its snippets stay in
// sync with the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/worlds.md")]
    mod worlds {}
    #[doc = include_str!("../../../book/src/rankings.md")]
    mod rankings {}
    #[doc = include_str!("../../../book/src/degrees.md")]
    mod degrees {}
    #[doc = include_str!("../../../book/src/rules.md")]
    mod rules {}
    #[doc = include_str!("../../../book/src/ocf.md")]
    mod ocf {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/counterexample.md")]
    mod counterexample {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
