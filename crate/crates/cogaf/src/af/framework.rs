//! The framework data model: arguments, attacks and the definitional
//! predicates everything else is built from.

use std::collections::BTreeSet;
use std::fmt;

use super::arg_set::ArgSet;
use crate::error::{Error, Result};

/// A finite argumentation framework: a set of named arguments and a
/// directed attack relation between them.
///
/// Arguments are dense indices `0..n` in declaration order, with a label
/// table mapping them back to names. The attack relation is kept three
/// ways: as a sorted pair list and as forward/backward adjacency bit sets,
/// which must mirror each other exactly. Values are immutable after
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Framework {
    labels: Vec<String>,
    attacks: Vec<(usize, usize)>,
    forward: Vec<ArgSet>,
    backward: Vec<ArgSet>,
}

impl Framework {
    /// Hard cap on the argument count, fixed by the bit-set width.
    pub const MAX_ARGS: usize = ArgSet::MAX_WIDTH;

    /// Builds a framework from argument names and name pairs.
    ///
    /// Indices are assigned in declaration order. Duplicate attack pairs
    /// are deduplicated; self-attacks are legal and preserved.
    pub fn new<L, A, N, S, T>(labels: L, attacks: A) -> Result<Self>
    where
        L: IntoIterator<Item = N>,
        N: Into<String>,
        A: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut pairs = Vec::new();
        for (src, dst) in attacks {
            let src = resolve(&labels, src.as_ref())?;
            let dst = resolve(&labels, dst.as_ref())?;
            pairs.push((src, dst));
        }
        Self::from_index_pairs(labels, pairs)
    }

    /// Builds a framework from argument names and index pairs.
    pub fn from_index_pairs<A>(labels: Vec<String>, attacks: A) -> Result<Self>
    where
        A: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        if n > Self::MAX_ARGS {
            return Err(Error::TooManyArguments {
                actual: n,
                limit: Self::MAX_ARGS,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut pairs = BTreeSet::new();
        for (src, dst) in attacks {
            for index in [src, dst] {
                if index >= n {
                    return Err(Error::InvalidAttack {
                        index,
                        arg_count: n,
                    });
                }
            }
            pairs.insert((src, dst));
        }
        let mut forward = vec![ArgSet::EMPTY; n];
        let mut backward = vec![ArgSet::EMPTY; n];
        for &(src, dst) in &pairs {
            forward[src].insert(dst);
            backward[dst].insert(src);
        }
        Ok(Framework {
            labels,
            attacks: pairs.into_iter().collect(),
            forward,
            backward,
        })
    }

    /// The framework with no arguments and no attacks.
    pub fn empty() -> Self {
        Framework {
            labels: Vec::new(),
            attacks: Vec::new(),
            forward: Vec::new(),
            backward: Vec::new(),
        }
    }

    pub fn arg_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Attack pairs in ascending (source, target) index order.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_pair(&self, src: usize, dst: usize) -> bool {
        self.forward[src].contains(dst)
    }

    /// The set of all arguments.
    pub fn all_args(&self) -> ArgSet {
        ArgSet::full(self.arg_count())
    }

    /// Arguments attacked by argument `index`.
    pub fn attacks_from(&self, index: usize) -> ArgSet {
        self.forward[index]
    }

    /// Arguments attacking argument `index`.
    pub fn attackers_of_arg(&self, index: usize) -> ArgSet {
        self.backward[index]
    }

    /// All arguments that attack some member of `set`.
    pub fn attackers_of(&self, set: ArgSet) -> ArgSet {
        debug_assert!(set.is_subset_of(self.all_args()));
        set.iter()
            .fold(ArgSet::EMPTY, |acc, i| acc | self.backward[i])
    }

    /// All arguments attacked by some member of `set`.
    pub fn targets_of(&self, set: ArgSet) -> ArgSet {
        debug_assert!(set.is_subset_of(self.all_args()));
        set.iter()
            .fold(ArgSet::EMPTY, |acc, i| acc | self.forward[i])
    }

    /// The attack range of `set`: what it attacks, and itself together
    /// with what it attacks.
    pub fn range_closure(&self, set: ArgSet) -> (ArgSet, ArgSet) {
        let plus = self.targets_of(set);
        (plus, set | plus)
    }

    /// True iff no member of `set` attacks a member of `set`.
    pub fn is_conflict_free(&self, set: ArgSet) -> bool {
        debug_assert!(set.is_subset_of(self.all_args()));
        set.iter().all(|i| !self.forward[i].intersects(set))
    }

    /// True iff `set` is conflict-free and counterattacks every attacker.
    pub fn is_admissible(&self, set: ArgSet) -> bool {
        self.is_conflict_free(set) && self.attackers_of(set).is_subset_of(self.targets_of(set))
    }

    /// Cuts the attack relation down to pairs inside `within`, keeping the
    /// argument set unchanged.
    pub fn restrict(&self, within: ArgSet) -> Framework {
        debug_assert!(within.is_subset_of(self.all_args()));
        let pairs = self
            .attacks
            .iter()
            .copied()
            .filter(|&(src, dst)| within.contains(src) && within.contains(dst));
        Self::from_index_pairs(self.labels.clone(), pairs)
            .expect("restriction of a valid framework is valid")
    }

    /// The induced subframework on the arguments outside `set`'s range:
    /// the arguments neither in `set` nor attacked by it, with the attack
    /// relation cut down to them. Labels carry over, so the result's
    /// arguments remain identifiable as a subset of this framework's.
    pub fn reduct(&self, set: ArgSet) -> Framework {
        let (_, oplus) = self.range_closure(set);
        let survivors = self.all_args().difference(oplus);
        self.induced(survivors)
    }

    /// The induced subframework on `survivors`, reindexed densely with
    /// labels carried over.
    pub fn induced(&self, survivors: ArgSet) -> Framework {
        debug_assert!(survivors.is_subset_of(self.all_args()));
        let mut new_index = vec![usize::MAX; self.arg_count()];
        let mut labels = Vec::with_capacity(survivors.len());
        for (next, old) in survivors.iter().enumerate() {
            new_index[old] = next;
            labels.push(self.labels[old].clone());
        }
        let pairs = self
            .attacks
            .iter()
            .filter(|&&(src, dst)| survivors.contains(src) && survivors.contains(dst))
            .map(|&(src, dst)| (new_index[src], new_index[dst]));
        Self::from_index_pairs(labels, pairs)
            .expect("induced subframework of a valid framework is valid")
    }

    /// Labels of the members of `set`, in index order.
    pub fn set_labels(&self, set: ArgSet) -> Vec<&str> {
        set.iter().map(|i| self.label(i)).collect()
    }
}

fn resolve(labels: &[String], name: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == name)
        .ok_or_else(|| Error::UnknownLabel(name.to_string()))
}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Framework")
            .field("labels", &self.labels)
            .field("attacks", &self.attacks)
            .finish()
    }
}
