//! Ranked models (ordered partitions of the worlds) and ordinal conditional
//! functions (integer degrees of disbelief), with the conversions between them.
//!
//! A [`RankedModel`] lists its blocks most believable first. The rank of a
//! world is the index of its block; the degree of disbelief in a proposition
//! is the least rank among its worlds. An [`Ocf`] carries the same kind of
//! information with arbitrary natural numbers, so distances between ranks
//! survive. Converting an OCF to a ranked model collapses gaps between the
//! values it uses; the reverse direction is exact.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::world::{Proposition, TotalContent, Universe};

/// An ordered partition `⟨E0, …, Ek⟩` of the universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankedModel {
    blocks: Vec<Proposition>,
}

/// Outcome of comparing two worlds in a ranking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preference {
    /// The first world is strictly more believable.
    First,
    /// The second world is strictly more believable.
    Second,
    Tie,
}

impl RankedModel {
    /// Validates that `blocks` are non-empty, pairwise disjoint and cover
    /// the whole universe.
    pub fn new(blocks: Vec<Proposition>) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::NotAPartition("no blocks".into()));
        };
        let width = first.width();
        let mut covered = Proposition::empty(width)?;
        for (i, block) in blocks.iter().enumerate() {
            if block.width() != width {
                return Err(Error::UniverseMismatch {
                    left: width,
                    right: block.width(),
                });
            }
            if block.is_empty() {
                return Err(Error::NotAPartition(format!("block {i} is empty")));
            }
            if !covered.is_disjoint(block) {
                let w = (covered & *block).first().unwrap_or_default();
                return Err(Error::NotAPartition(format!(
                    "world {w} appears in more than one block"
                )));
            }
            covered = covered | *block;
        }
        if let Some(w) = covered.complement().first() {
            return Err(Error::NotAPartition(format!("world {w} is in no block")));
        }
        Ok(RankedModel { blocks })
    }

    /// Builds a model from a rank per world. Ranks must be consecutive from 0.
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        let width = ranks.len();
        let levels = ranks.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Proposition::empty(width)?; levels];
        for (world, &rank) in ranks.iter().enumerate() {
            blocks[rank] = blocks[rank] | Proposition::singleton(width, world)?;
        }
        if let Some(rank) = blocks.iter().position(Proposition::is_empty) {
            return Err(Error::NotAPartition(format!("no world has rank {rank}")));
        }
        Ok(RankedModel { blocks })
    }

    /// All worlds tied.
    pub fn flat(width: usize) -> Result<Self> {
        Ok(RankedModel {
            blocks: vec![Proposition::full(width)?],
        })
    }

    /// Drops empty blocks from an otherwise valid ordered cover.
    pub(crate) fn from_blocks_lossy(blocks: impl IntoIterator<Item = Proposition>) -> Self {
        let blocks: Vec<Proposition> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        debug_assert!(RankedModel::new(blocks.clone()).is_ok());
        RankedModel { blocks }
    }

    pub fn width(&self) -> usize {
        self.blocks[0].width()
    }

    pub fn blocks(&self) -> &[Proposition] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `E0`, the worlds not disbelieved.
    pub fn most_believable(&self) -> Proposition {
        self.blocks[0]
    }

    /// The belief set of this state.
    pub fn total_content(&self) -> TotalContent {
        TotalContent::new(self.blocks[0])
    }

    pub fn rank_of(&self, world: usize) -> Result<usize> {
        if world >= self.width() {
            return Err(Error::WorldOutOfRange {
                index: world,
                width: self.width(),
            });
        }
        Ok(self
            .blocks
            .iter()
            .position(|b| b.contains(world))
            .expect("blocks cover the universe"))
    }

    /// Rank of every world, by world index.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.width()];
        for (rank, block) in self.blocks.iter().enumerate() {
            for w in block.iter() {
                ranks[w] = rank;
            }
        }
        ranks
    }

    /// Index of the first block meeting `prop`; `None` iff `prop` is empty.
    pub fn first_consistent_block(&self, prop: &Proposition) -> Option<usize> {
        self.blocks.iter().position(|b| !b.is_disjoint(prop))
    }

    /// `d(A)`: the least rank among the worlds of `prop`.
    pub fn disbelief_degree(&self, prop: &Proposition) -> Result<usize> {
        if prop.width() != self.width() {
            return Err(Error::UniverseMismatch {
                left: self.width(),
                right: prop.width(),
            });
        }
        self.first_consistent_block(prop)
            .ok_or(Error::EmptyProposition)
    }

    pub fn degree_report(&self, prop: &Proposition) -> Result<DegreeReport> {
        Ok(DegreeReport {
            proposition: *prop,
            degree: self.disbelief_degree(prop)? as u64,
        })
    }

    pub fn preference(&self, w1: usize, w2: usize) -> Result<Preference> {
        if w1 == w2 {
            return Err(Error::SameWorld);
        }
        let (r1, r2) = (self.rank_of(w1)?, self.rank_of(w2)?);
        Ok(match r1.cmp(&r2) {
            std::cmp::Ordering::Less => Preference::First,
            std::cmp::Ordering::Greater => Preference::Second,
            std::cmp::Ordering::Equal => Preference::Tie,
        })
    }

    /// Renders the ranking as `[aB] [AB Ab] [ab]`.
    pub fn format(&self, universe: &Universe) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|w| universe.label(w)).collect();
                format!("[{}]", names.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A proposition's degree of disbelief.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub proposition: Proposition,
    pub degree: u64,
}

/// An ordinal conditional function: a natural-number degree of disbelief
/// per world, with minimum 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ocf {
    kappa: Vec<u64>,
}

impl Ocf {
    /// Rejects empty and non-normalized inputs. Values are not shifted.
    pub fn new(kappa: Vec<u64>) -> Result<Self> {
        Proposition::full(kappa.len())?;
        let min = *kappa.iter().min().expect("non-empty");
        if min != 0 {
            return Err(Error::NotNormalized(min));
        }
        Ok(Ocf { kappa })
    }

    pub(crate) fn from_normalized(kappa: Vec<u64>) -> Self {
        debug_assert_eq!(kappa.iter().min(), Some(&0));
        Ocf { kappa }
    }

    pub fn width(&self) -> usize {
        self.kappa.len()
    }

    pub fn values(&self) -> &[u64] {
        &self.kappa
    }

    pub fn kappa(&self, world: usize) -> u64 {
        self.kappa[world]
    }

    /// `κ(A)`: the least value among the worlds of `prop`.
    pub fn kappa_degree(&self, prop: &Proposition) -> Result<u64> {
        if prop.width() != self.width() {
            return Err(Error::UniverseMismatch {
                left: self.width(),
                right: prop.width(),
            });
        }
        prop.iter()
            .map(|w| self.kappa[w])
            .min()
            .ok_or(Error::EmptyProposition)
    }

    /// Renders as `{AB:1 Ab:1 aB:0 ab:2}`.
    pub fn format(&self, universe: &Universe) -> String {
        let entries: Vec<String> = self
            .kappa
            .iter()
            .enumerate()
            .map(|(w, k)| format!("{}:{}", universe.label(w), k))
            .collect();
        format!("{{{}}}", entries.join(" "))
    }
}

/// Groups worlds by equal value, ascending; unused values between them are
/// collapsed so ranks stay consecutive.
pub fn rpm_from_ocf(ocf: &Ocf) -> RankedModel {
    let width = ocf.width();
    let mut levels: BTreeMap<u64, Proposition> = BTreeMap::new();
    for (world, &k) in ocf.kappa.iter().enumerate() {
        let single = Proposition::singleton(width, world).expect("index in range");
        levels
            .entry(k)
            .and_modify(|b| *b = *b | single)
            .or_insert(single);
    }
    RankedModel {
        blocks: levels.into_values().collect(),
    }
}

/// `κ(w) := rank(w)`.
pub fn ocf_from_rpm(model: &RankedModel) -> Ocf {
    Ocf::from_normalized(model.ranks().into_iter().map(|r| r as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Universe {
        Universe::from_atoms(["A", "B"]).unwrap()
    }

    fn rpm(u: &Universe, blocks: &[&[&str]]) -> RankedModel {
        RankedModel::new(blocks.iter().map(|b| u.prop(b.iter()).unwrap()).collect()).unwrap()
    }

    fn ocf(u: &Universe, entries: &[(&str, u64)]) -> Ocf {
        let mut kappa = vec![0; u.len()];
        for (label, k) in entries {
            kappa[u.index_of(label).unwrap()] = *k;
        }
        Ocf::new(kappa).unwrap()
    }

    #[test]
    fn rank_of_r2() {
        let u = u();
        let r2 = rpm(&u, &[&["aB"], &["AB", "Ab"], &["ab"]]);
        let rank = |l| r2.rank_of(u.index_of(l).unwrap()).unwrap();
        assert_eq!((rank("aB"), rank("Ab"), rank("ab")), (0, 1, 2));
        assert!(matches!(
            r2.rank_of(4),
            Err(Error::WorldOutOfRange { index: 4, .. })
        ));
    }

    #[test]
    fn first_consistent_block_examples() {
        let u = u();
        let r2 = rpm(&u, &[&["aB"], &["AB", "Ab"], &["ab"]]);
        let r3 = rpm(&u, &[&["AB", "Ab"], &["aB"], &["ab"]]);
        assert_eq!(r2.first_consistent_block(&u.prop(["ab"]).unwrap()), Some(2));
        assert_eq!(r3.first_consistent_block(&u.full()), Some(0));
        assert_eq!(r2.first_consistent_block(&u.empty()), None);
    }

    #[test]
    fn disbelief_degree_examples() {
        let u = u();
        let a = u.prop(["AB", "Ab"]).unwrap();
        let r1 = rpm(&u, &[&["aB"], &["AB", "Ab", "ab"]]);
        let r2 = rpm(&u, &[&["aB"], &["AB", "Ab"], &["ab"]]);
        assert_eq!(r1.disbelief_degree(&a), Ok(1));
        assert_eq!(r1.disbelief_degree(&!a), Ok(0));
        assert_eq!(r2.disbelief_degree(&u.prop(["ab"]).unwrap()), Ok(2));
        assert_eq!(
            r1.disbelief_degree(&u.empty()),
            Err(Error::EmptyProposition)
        );
        assert_eq!(
            r1.degree_report(&a).unwrap(),
            DegreeReport {
                proposition: a,
                degree: 1
            }
        );
    }

    #[test]
    fn preference_examples() {
        let u = u();
        let w = |l| u.index_of(l).unwrap();
        let r1 = rpm(&u, &[&["aB"], &["AB", "Ab", "ab"]]);
        let r2 = rpm(&u, &[&["aB"], &["AB", "Ab"], &["ab"]]);
        let r3 = rpm(&u, &[&["AB", "Ab"], &["aB"], &["ab"]]);
        assert_eq!(r2.preference(w("aB"), w("AB")), Ok(Preference::First));
        assert_eq!(r1.preference(w("AB"), w("Ab")), Ok(Preference::Tie));
        assert_eq!(r3.preference(w("ab"), w("aB")), Ok(Preference::Second));
        assert_eq!(r3.preference(w("ab"), w("ab")), Err(Error::SameWorld));
    }

    #[test]
    fn kappa_degree_examples() {
        let u = u();
        let k1 = ocf(&u, &[("AB", 1), ("Ab", 1), ("aB", 0), ("ab", 2)]);
        assert_eq!(k1.kappa_degree(&u.prop(["AB", "Ab"]).unwrap()), Ok(1));
        assert_eq!(k1.kappa_degree(&u.full()), Ok(0));
        assert_eq!(k1.kappa_degree(&u.prop(["ab"]).unwrap()), Ok(2));
        assert_eq!(k1.kappa_degree(&u.empty()), Err(Error::EmptyProposition));
    }

    #[test]
    fn conversions() {
        let u = u();
        let r2 = rpm(&u, &[&["aB"], &["AB", "Ab"], &["ab"]]);
        let r3 = rpm(&u, &[&["AB", "Ab"], &["aB"], &["ab"]]);
        let k1 = ocf(&u, &[("AB", 1), ("Ab", 1), ("aB", 0), ("ab", 2)]);
        assert_eq!(rpm_from_ocf(&k1), r2);
        let gapped = ocf(&u, &[("AB", 0), ("Ab", 0), ("aB", 1), ("ab", 3)]);
        assert_eq!(rpm_from_ocf(&gapped), r3);
        assert_eq!(rpm_from_ocf(&Ocf::new(vec![0; 4]).unwrap()).num_blocks(), 1);

        assert_eq!(ocf_from_rpm(&r2), k1);
        assert_eq!(
            ocf_from_rpm(&RankedModel::flat(4).unwrap()).values(),
            [0; 4]
        );
        assert_eq!(rpm_from_ocf(&ocf_from_rpm(&r3)), r3);
    }

    #[test]
    fn validation() {
        let u = u();
        let overlapping = RankedModel::new(vec![
            u.prop(["AB", "Ab"]).unwrap(),
            u.prop(["Ab", "aB", "ab"]).unwrap(),
        ]);
        assert!(matches!(overlapping, Err(Error::NotAPartition(_))));
        let gap = RankedModel::new(vec![u.prop(["AB"]).unwrap()]);
        assert!(matches!(gap, Err(Error::NotAPartition(_))));
        let empty_block = RankedModel::new(vec![u.full(), u.empty()]);
        assert!(matches!(empty_block, Err(Error::NotAPartition(_))));
        assert!(matches!(
            RankedModel::from_ranks(&[0, 2]),
            Err(Error::NotAPartition(_))
        ));
        assert_eq!(Ocf::new(vec![1, 2]), Err(Error::NotNormalized(1)));
        assert_eq!(Ocf::new(vec![]), Err(Error::EmptyUniverse));
    }

    #[test]
    fn format() {
        let u = u();
        let r1 = rpm(&u, &[&["aB"], &["AB", "Ab", "ab"]]);
        assert_eq!(r1.format(&u), "[aB] [AB Ab ab]");
        let k1 = ocf(&u, &[("AB", 1), ("Ab", 1), ("aB", 0), ("ab", 2)]);
        assert_eq!(k1.format(&u), "{AB:1 Ab:1 aB:0 ab:2}");
    }
}
