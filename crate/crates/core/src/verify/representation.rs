//! Recovering a ranked model from a revision table.
//!
//! A table that satisfies B1–B8 is generated by some ranked model. Given the
//! table, the model can be read off directly: `E0` is the content after
//! revising by the tautology, `E1` the content after revising by everything
//! outside `E0`, and so on. The candidate is then checked against every
//! entry.

use super::enumerate::enumerate_ranked_models;
use super::Limits;
use crate::error::{Error, Result};
use crate::ranking::RankedModel;
use crate::revision::revise;
use crate::world::{Proposition, TotalContent};

/// Total content after revising by each non-empty proposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevisionTable {
    width: usize,
    entries: Vec<Option<TotalContent>>,
}

impl RevisionTable {
    pub fn new(width: usize, limits: &Limits) -> Result<Self> {
        Proposition::full(width)?;
        limits.check_width(width)?;
        Ok(RevisionTable {
            width,
            entries: vec![None; 1 << width],
        })
    }

    /// The table a ranked model induces.
    pub fn from_model(model: &RankedModel, limits: &Limits) -> Result<Self> {
        let mut table = Self::new(model.width(), limits)?;
        for a in Proposition::all(model.width()).skip(1) {
            table.insert(a, revise(model, &a))?;
        }
        Ok(table)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, input: Proposition, content: TotalContent) -> Result<()> {
        for p in [input, content.content()] {
            if p.width() != self.width {
                return Err(Error::UniverseMismatch {
                    left: self.width,
                    right: p.width(),
                });
            }
        }
        self.entries[input.bits() as usize] = Some(content);
        Ok(())
    }

    pub fn get(&self, input: &Proposition) -> Option<TotalContent> {
        self.entries.get(input.bits() as usize).copied().flatten()
    }

    fn check_total(&self) -> Result<()> {
        if self.entries.iter().skip(1).any(Option::is_none) {
            return Err(Error::PartialTable);
        }
        Ok(())
    }

    fn generated_by(&self, model: &RankedModel) -> bool {
        Proposition::all(self.width)
            .skip(1)
            .all(|a| self.get(&a) == Some(revise(model, &a)))
    }
}

/// The ranked model whose revisions reproduce `table`, if there is one.
pub fn representation_check(table: &RevisionTable) -> Result<Option<RankedModel>> {
    table.check_total()?;
    let mut remaining = Proposition::full(table.width)?;
    let mut blocks = Vec::new();
    while !remaining.is_empty() {
        let block = table.get(&remaining).expect("total").content();
        if block.is_empty() || !block.is_subset(&remaining) {
            return Ok(None);
        }
        blocks.push(block);
        remaining = remaining - block;
    }
    let model = RankedModel::new(blocks)?;
    Ok(table.generated_by(&model).then_some(model))
}

/// Every enumerated model that reproduces `table`, by full scan.
pub fn representing_models(table: &RevisionTable, bound: usize) -> Result<Vec<RankedModel>> {
    table.check_total()?;
    Ok(enumerate_ranked_models(table.width, bound)?
        .into_iter()
        .filter(|m| table.generated_by(m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{CounterexampleFixture, MAX_ENUMERATION_BOUND};

    #[test]
    fn round_trip_r2() {
        let f = CounterexampleFixture::standard();
        let limits = Limits::default();
        let table = RevisionTable::from_model(&f.r2, &limits).unwrap();
        assert_eq!(representation_check(&table).unwrap(), Some(f.r2.clone()));
        assert_eq!(
            representing_models(&table, MAX_ENUMERATION_BOUND).unwrap(),
            vec![f.r2.clone()]
        );
    }

    #[test]
    fn b2_violation_has_no_model() {
        let f = CounterexampleFixture::standard();
        let limits = Limits::default();
        let mut table = RevisionTable::from_model(&f.r2, &limits).unwrap();
        table
            .insert(f.a, TotalContent::new(f.universe.prop(["aB"]).unwrap()))
            .unwrap();
        assert_eq!(representation_check(&table).unwrap(), None);
        assert!(representing_models(&table, MAX_ENUMERATION_BOUND)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn single_world() {
        let limits = Limits::default();
        let mut table = RevisionTable::new(1, &limits).unwrap();
        let w = Proposition::full(1).unwrap();
        table.insert(w, TotalContent::new(w)).unwrap();
        assert_eq!(
            representation_check(&table).unwrap(),
            Some(RankedModel::flat(1).unwrap())
        );
    }

    #[test]
    fn partial_tables_are_rejected() {
        let table = RevisionTable::new(3, &Limits::default()).unwrap();
        assert_eq!(representation_check(&table), Err(Error::PartialTable));
        assert!(matches!(
            RevisionTable::new(6, &Limits::default()),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
