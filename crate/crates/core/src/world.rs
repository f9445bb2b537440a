//! Finite universes of possible worlds, propositions as world sets, and belief
//! sets represented by their total content.
//!
//! Worlds are identified by their index in declaration order. A
//! [`Proposition`] is a set of indices together with the width of the
//! universe it ranges over, so operands from universes of different size are
//! rejected instead of silently combined.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest supported universe. Propositions are stored as a 64-bit mask.
pub const MAX_WORLDS: usize = 64;

/// A set of worlds over a universe of `width` worlds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Proposition {
    width: u8,
    bits: u64,
}

fn width_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl Proposition {
    fn check_width(width: usize) -> Result<()> {
        if width == 0 {
            return Err(Error::EmptyUniverse);
        }
        if width > MAX_WORLDS {
            return Err(Error::TooManyWorlds(width));
        }
        Ok(())
    }

    /// The contradiction.
    pub fn empty(width: usize) -> Result<Self> {
        Self::check_width(width)?;
        Ok(Proposition {
            width: width as u8,
            bits: 0,
        })
    }

    /// The tautology.
    pub fn full(width: usize) -> Result<Self> {
        Self::check_width(width)?;
        Ok(Proposition {
            width: width as u8,
            bits: width_mask(width),
        })
    }

    /// Builds a proposition from a raw membership mask; bit `i` is world `i`.
    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        Self::check_width(width)?;
        if bits & !width_mask(width) != 0 {
            let index = 63 - (bits & !width_mask(width)).leading_zeros() as usize;
            return Err(Error::WorldOutOfRange { index, width });
        }
        Ok(Proposition {
            width: width as u8,
            bits,
        })
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::check_width(width)?;
        let mut bits = 0u64;
        for index in indices {
            if index >= width {
                return Err(Error::WorldOutOfRange { index, width });
            }
            bits |= 1 << index;
        }
        Ok(Proposition {
            width: width as u8,
            bits,
        })
    }

    pub fn singleton(width: usize, index: usize) -> Result<Self> {
        Self::from_indices(width, [index])
    }

    /// Every proposition over `width` worlds, in increasing mask order
    /// (the empty set first, the full set last).
    ///
    /// # Panics
    ///
    /// Panics if `width` is 0 or larger than 63; exhaustive enumeration is
    /// only meaningful for small universes.
    pub fn all(width: usize) -> impl Iterator<Item = Proposition> {
        assert!(
            (1..64).contains(&width),
            "cannot enumerate propositions over {width} worlds"
        );
        (0..(1u64 << width)).map(move |bits| Proposition {
            width: width as u8,
            bits,
        })
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == width_mask(self.width())
    }

    /// Neither the contradiction nor the tautology.
    pub fn is_contingent(&self) -> bool {
        !self.is_empty() && !self.is_full()
    }

    pub fn contains(&self, world: usize) -> bool {
        world < self.width() && self.bits & (1 << world) != 0
    }

    /// Member world indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.width()).filter(move |i| bits & (1 << i) != 0)
    }

    /// Lowest-indexed member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    fn same_universe(&self, other: &Proposition) -> Result<()> {
        if self.width != other.width {
            return Err(Error::UniverseMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        Ok(())
    }

    pub fn complement(&self) -> Proposition {
        Proposition {
            width: self.width,
            bits: !self.bits & width_mask(self.width()),
        }
    }

    pub fn intersect(&self, other: &Proposition) -> Result<Proposition> {
        self.same_universe(other)?;
        Ok(*self & *other)
    }

    pub fn union(&self, other: &Proposition) -> Result<Proposition> {
        self.same_universe(other)?;
        Ok(*self | *other)
    }

    /// `self` entails `other` iff every `self`-world is an `other`-world.
    pub fn entails(&self, other: &Proposition) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.is_subset(other))
    }

    /// Unchecked subset test.
    ///
    /// # Panics
    ///
    /// Panics if the operands range over different universes.
    pub fn is_subset(&self, other: &Proposition) -> bool {
        assert_eq!(self.width, other.width, "universe mismatch");
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Proposition) -> bool {
        (*self & *other).is_empty()
    }
}

impl BitAnd for Proposition {
    type Output = Proposition;

    /// # Panics
    ///
    /// Panics on universe mismatch; use [`Proposition::intersect`] for a checked form.
    fn bitand(self, rhs: Proposition) -> Proposition {
        assert_eq!(self.width, rhs.width, "universe mismatch");
        Proposition {
            width: self.width,
            bits: self.bits & rhs.bits,
        }
    }
}

impl BitOr for Proposition {
    type Output = Proposition;

    fn bitor(self, rhs: Proposition) -> Proposition {
        assert_eq!(self.width, rhs.width, "universe mismatch");
        Proposition {
            width: self.width,
            bits: self.bits | rhs.bits,
        }
    }
}

impl Sub for Proposition {
    type Output = Proposition;

    fn sub(self, rhs: Proposition) -> Proposition {
        assert_eq!(self.width, rhs.width, "universe mismatch");
        Proposition {
            width: self.width,
            bits: self.bits & !rhs.bits,
        }
    }
}

impl Not for Proposition {
    type Output = Proposition;

    fn not(self) -> Proposition {
        self.complement()
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite, ordered set of labeled worlds, optionally carrying a truth
/// valuation over declared atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    atoms: Vec<String>,
    valuations: Option<Vec<Vec<bool>>>,
    index: HashMap<String, usize>,
}

fn valid_atom(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Universe {
    /// A universe of bare labeled worlds.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        Self::build(labels, Vec::new(), None)
    }

    /// All `2^atoms` valuations, true before false with the first atom most
    /// significant. Labels concatenate the atom names, upper-cased when the
    /// atom is true and lower-cased when false: atoms `A B` give
    /// `AB Ab aB ab`.
    pub fn from_atoms<S: Into<String>>(atoms: impl IntoIterator<Item = S>) -> Result<Self> {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.len() > 6 {
            return Err(Error::TooManyWorlds(1usize << atoms.len().min(63)));
        }
        let count = 1usize << atoms.len();
        let mut worlds = Vec::with_capacity(count);
        for i in 0..count {
            let valuation: Vec<bool> = (0..atoms.len())
                .map(|a| (i >> (atoms.len() - 1 - a)) & 1 == 0)
                .collect();
            worlds.push((Self::auto_label(&atoms, &valuation), valuation));
        }
        Self::with_valuations(atoms, worlds)
    }

    /// The canonical label of a valuation, as produced by [`Universe::from_atoms`].
    pub fn auto_label(atoms: &[String], valuation: &[bool]) -> String {
        atoms
            .iter()
            .zip(valuation)
            .map(|(atom, &value)| {
                if value {
                    atom.to_uppercase()
                } else {
                    atom.to_lowercase()
                }
            })
            .collect()
    }

    /// Explicitly declared worlds with one truth value per atom each.
    pub fn with_valuations<S: Into<String>>(
        atoms: impl IntoIterator<Item = S>,
        worlds: impl IntoIterator<Item = (String, Vec<bool>)>,
    ) -> Result<Self> {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        let (labels, valuations): (Vec<String>, Vec<Vec<bool>>) = worlds.into_iter().unzip();
        Self::build(labels, atoms, Some(valuations))
    }

    fn build(
        labels: Vec<String>,
        atoms: Vec<String>,
        valuations: Option<Vec<Vec<bool>>>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_WORLDS {
            return Err(Error::TooManyWorlds(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateWorld(label.clone()));
            }
        }
        for (i, atom) in atoms.iter().enumerate() {
            if !valid_atom(atom) {
                return Err(Error::InvalidAtom(atom.clone()));
            }
            if atoms[..i].contains(atom) {
                return Err(Error::DuplicateAtom(atom.clone()));
            }
        }
        if let Some(valuations) = &valuations {
            let mut seen: HashMap<&[bool], usize> = HashMap::new();
            for (i, valuation) in valuations.iter().enumerate() {
                if valuation.len() != atoms.len() {
                    return Err(Error::ValuationArity {
                        world: labels[i].clone(),
                        expected: atoms.len(),
                        found: valuation.len(),
                    });
                }
                if let Some(&j) = seen.get(valuation.as_slice()) {
                    return Err(Error::DuplicateValuation(
                        labels[j].clone(),
                        labels[i].clone(),
                    ));
                }
                seen.insert(valuation, i);
            }
        }
        Ok(Universe {
            labels,
            atoms,
            valuations,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; universes hold at least one world.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, world: usize) -> &str {
        &self.labels[world]
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn has_valuations(&self) -> bool {
        self.valuations.is_some()
    }

    /// Truth values of the declared atoms at `world`, in atom order.
    pub fn valuation(&self, world: usize) -> Option<&[bool]> {
        self.valuations.as_ref().map(|v| v[world].as_slice())
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownWorld(label.to_string()))
    }

    pub fn empty(&self) -> Proposition {
        Proposition {
            width: self.len() as u8,
            bits: 0,
        }
    }

    pub fn full(&self) -> Proposition {
        Proposition {
            width: self.len() as u8,
            bits: width_mask(self.len()),
        }
    }

    /// The proposition holding exactly at the named worlds.
    pub fn prop<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Proposition> {
        let indices = labels
            .into_iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Proposition::from_indices(self.len(), indices)
    }

    /// Worlds at which `atom` is true; `None` for an undeclared atom.
    pub fn atom_prop(&self, atom: &str) -> Option<Proposition> {
        let a = self.atoms.iter().position(|x| x == atom)?;
        let valuations = self.valuations.as_ref()?;
        let indices = (0..self.len()).filter(|&w| valuations[w][a]);
        Proposition::from_indices(self.len(), indices).ok()
    }

    /// Renders a proposition as `{AB Ab}`.
    pub fn format_prop(&self, prop: &Proposition) -> String {
        let names: Vec<&str> = prop.iter().map(|w| self.label(w)).collect();
        format!("{{{}}}", names.join(" "))
    }
}

/// A belief set, held as its total content: the conjunction of everything
/// believed. The belief set itself is `{A : content ⊆ A}`, which is
/// deductively closed by construction. Empty content is the inconsistent
/// belief set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalContent(Proposition);

impl TotalContent {
    pub fn new(content: Proposition) -> Self {
        TotalContent(content)
    }

    pub fn content(&self) -> Proposition {
        self.0
    }

    pub fn is_consistent(&self) -> bool {
        !self.0.is_empty()
    }

    /// Membership of `prop` in the induced belief set.
    pub fn believes(&self, prop: &Proposition) -> Result<bool> {
        self.0.entails(prop)
    }

    /// Expansion: the deductive closure of the beliefs plus `prop`. May be
    /// inconsistent.
    pub fn expand(&self, prop: &Proposition) -> Result<TotalContent> {
        Ok(TotalContent(self.0.intersect(prop)?))
    }

    /// Whether every belief of `self` is also a belief of `other`; belief
    /// sets are ordered by reversed content inclusion.
    pub fn beliefs_within(&self, other: &TotalContent) -> bool {
        other.0.is_subset(&self.0)
    }
}
