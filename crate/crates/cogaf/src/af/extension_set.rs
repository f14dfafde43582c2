//! Collections of extensions in canonical order.

use super::arg_set::ArgSet;

/// A duplicate-free list of argument sets in canonical order
/// (ascending cardinality, then ascending bit-pattern value).
///
/// All members are expected to index into the same framework; the type
/// itself only enforces ordering and uniqueness.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionSet {
    sets: Vec<ArgSet>,
}

impl ExtensionSet {
    pub fn empty() -> Self {
        ExtensionSet::default()
    }

    /// Builds from arbitrary input, sorting canonically and dropping
    /// duplicates.
    pub fn new(mut sets: Vec<ArgSet>) -> Self {
        sets.sort();
        sets.dedup();
        ExtensionSet { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: ArgSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = ArgSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn as_slice(&self) -> &[ArgSet] {
        &self.sets
    }

    /// Union of all member sets.
    pub fn union_all(&self) -> ArgSet {
        self.sets
            .iter()
            .fold(ArgSet::EMPTY, |acc, s| acc | *s)
    }

    /// Members of `self` that are not members of `other`, canonical order.
    pub fn difference(&self, other: &ExtensionSet) -> ExtensionSet {
        ExtensionSet {
            sets: self.iter().filter(|s| !other.contains(*s)).collect(),
        }
    }
}

impl FromIterator<ArgSet> for ExtensionSet {
    fn from_iter<I: IntoIterator<Item = ArgSet>>(iter: I) -> Self {
        ExtensionSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = ArgSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, ArgSet>>;
    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter().copied()
    }
}
