//! Single-step axioms B1–B8 and the degree-of-disbelief conditions.
//!
//! Belief sets are compared through their total contents, where inclusion
//! runs the other way: `belief_set(T1) ⊆ belief_set(T2)` iff `T2 ⊆ T1`.
//! With `K` the current content, `R(X)` the content after revising by `X`:
//!
//! | axiom | content form |
//! |-------|--------------|
//! | B2 | `R(A) ⊆ A` |
//! | B3 | `K ∩ A ⊆ R(A)` |
//! | B4 | `K ∩ A ≠ ∅ ⇒ R(A) ⊆ K ∩ A` |
//! | B5 | `R(A) = ∅ ⇔ A = ∅` |
//! | B7 | `R(A) ∩ B ⊆ R(A ∩ B)` |
//! | B8 | `R(A) ∩ B ≠ ∅ ⇒ R(A ∩ B) ⊆ R(A) ∩ B` |
//!
//! B1 and B6 hold by representation: every content induces a deductively
//! closed set, and revision is a function of the world set alone.

use super::{Axiom, AxiomReport, Limits, Witness};
use crate::error::Result;
use crate::ranking::RankedModel;
use crate::revision::revise;
use crate::world::Proposition;

fn single_failure(model: &RankedModel, a: Proposition) -> Option<Axiom> {
    let current = model.most_believable();
    let revised = revise(model, &a).content();
    let expanded = current & a;
    if !revised.is_subset(&a) {
        Some(Axiom::B2)
    } else if !expanded.is_subset(&revised) {
        Some(Axiom::B3)
    } else if !expanded.is_empty() && !revised.is_subset(&expanded) {
        Some(Axiom::B4)
    } else if revised.is_empty() != a.is_empty() {
        Some(Axiom::B5)
    } else {
        None
    }
}

fn pair_failure(model: &RankedModel, a: Proposition, b: Proposition) -> Option<Axiom> {
    let revised_a = revise(model, &a).content();
    let revised_ab = revise(model, &(a & b)).content();
    let then_b = revised_a & b;
    if !then_b.is_subset(&revised_ab) {
        Some(Axiom::B7)
    } else if !then_b.is_empty() && !revised_ab.is_subset(&then_b) {
        Some(Axiom::B8)
    } else {
        None
    }
}

/// Checks B1–B6 for every proposition and B7–B8 for every ordered pair:
/// `2^n + 4^n` cases.
pub fn check_agm(model: &RankedModel, limits: &Limits) -> Result<AxiomReport> {
    let width = model.width();
    limits.check_width(width)?;
    let mut report = AxiomReport::new(Axiom::Agm);
    for a in Proposition::all(width) {
        report.record(|| {
            single_failure(model, a).map(|axiom| Witness::Agm {
                axiom,
                model: model.clone(),
                a,
                b: None,
            })
        });
    }
    for a in Proposition::all(width) {
        for b in Proposition::all(width) {
            report.record(|| {
                pair_failure(model, a, b).map(|axiom| Witness::Agm {
                    axiom,
                    model: model.clone(),
                    a,
                    b: Some(b),
                })
            });
        }
    }
    Ok(report)
}

/// (i) a singleton's degree is its world's rank; (ii) for non-empty `A`,
/// `B`: `d(A) < d(B)` iff the first block meeting `A ∪ B` misses `B`.
pub fn check_degree_conditions(model: &RankedModel, limits: &Limits) -> Result<AxiomReport> {
    let width = model.width();
    limits.check_width(width)?;
    let mut report = AxiomReport::new(Axiom::DegreeConditions);
    for w in 0..width {
        let single = Proposition::singleton(width, w)?;
        let holds = model.disbelief_degree(&single)? == model.rank_of(w)?;
        report.record(|| {
            (!holds).then(|| Witness::Degree {
                model: model.clone(),
                a: single,
                b: None,
            })
        });
    }
    let nonempty: Vec<Proposition> = Proposition::all(width).skip(1).collect();
    for &a in &nonempty {
        let da = model.disbelief_degree(&a)?;
        for &b in &nonempty {
            let db = model.disbelief_degree(&b)?;
            let first = model
                .first_consistent_block(&(a | b))
                .expect("non-empty union");
            let misses_b = model.blocks()[first].is_disjoint(&b);
            report.record(|| {
                ((da < db) != misses_b).then(|| Witness::Degree {
                    model: model.clone(),
                    a,
                    b: Some(b),
                })
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::CounterexampleFixture;

    #[test]
    fn fixture_models_pass_agm() {
        let f = CounterexampleFixture::standard();
        let limits = Limits::default();
        for model in [&f.r1, &f.r2, &f.r3] {
            let report = check_agm(model, &limits).unwrap();
            assert!(report.passed());
            assert_eq!(report.cases, 16 + 256);
        }
        let single = RankedModel::flat(1).unwrap();
        assert!(check_agm(&single, &limits).unwrap().passed());
    }

    #[test]
    fn bound_is_enforced() {
        let big = RankedModel::flat(6).unwrap();
        assert!(check_agm(&big, &Limits::default()).is_err());
        let wide = Limits {
            max_worlds: 6,
            ..Limits::default()
        };
        assert!(check_agm(&big, &wide).unwrap().passed());
    }

    #[test]
    fn degree_conditions() {
        let f = CounterexampleFixture::standard();
        let limits = Limits::default();
        assert!(check_degree_conditions(&f.r1, &limits).unwrap().passed());
        assert!(check_degree_conditions(&f.r3, &limits).unwrap().passed());
        let flat = RankedModel::flat(4).unwrap();
        let report = check_degree_conditions(&flat, &limits).unwrap();
        assert!(report.passed());
        assert_eq!(report.cases, 4 + 15 * 15);
    }
}
