//! Weak admissibility via recursion on reducts.
//!
//! A conflict-free set `E` is weakly admissible when no attacker of `E`
//! appears in any weakly admissible set of the reduct, the subframework
//! induced on the arguments neither in `E` nor attacked by `E`. The
//! recursion terminates because a nonempty `E` strictly shrinks the
//! reduct, and the empty set has no attackers.
//!
//! Rather than materializing each reduct as a fresh framework, the
//! recursion works on views of the root framework: a subframework is a
//! mask of still-present arguments, sets keep their root indices, and
//! results are memoized by mask. Distinct recursion paths reaching the
//! same argument set share one entry.

use std::collections::HashMap;

use crate::af::{ArgSet, ExtensionSet, Framework};

/// Memoized weakly-admissible sets for subframeworks of one root
/// framework, keyed by the mask of present arguments.
///
/// A table must only be used with the framework it was first queried
/// with; mixing frameworks would serve answers for the wrong attack
/// relation.
#[derive(Debug, Default)]
pub struct MemoTable {
    entries: HashMap<u64, MemoEntry>,
}

#[derive(Debug)]
struct MemoEntry {
    /// Weakly admissible sets of the subframework, in root indices.
    sets: Vec<ArgSet>,
    /// Union of `sets`, cached for the attacker-overlap test.
    union: ArgSet,
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::default()
    }

    /// Computes the entry for the subframework induced on `present`,
    /// recursing into reducts as needed.
    fn ensure_computed(&mut self, f: &Framework, present: ArgSet) {
        if self.entries.contains_key(&present.bits()) {
            return;
        }
        let mut sets = Vec::new();
        let mut union = ArgSet::EMPTY;
        // Subsets of `present` in descending bit order; the standard
        // submask walk. The final 0 (empty set) is handled after the loop
        // since the decrement wraps.
        let mut bits = present.bits();
        loop {
            let e = ArgSet::from_bits(bits);
            if self.admissible_in_view(f, present, e) {
                sets.push(e);
                union = union | e;
            }
            if bits == 0 {
                break;
            }
            bits = (bits - 1) & present.bits();
        }
        sets.sort();
        self.entries.insert(present.bits(), MemoEntry { sets, union });
    }

    /// Weak admissibility of `e` within the subframework on `present`.
    ///
    /// Attacks between present arguments are exactly the root attacks
    /// masked to `present`, so conflict-freeness and attacker sets need
    /// no reindexing.
    fn admissible_in_view(&mut self, f: &Framework, present: ArgSet, e: ArgSet) -> bool {
        if !f.is_conflict_free(e) {
            return false;
        }
        let attackers = f.attackers_of(e) & present;
        if attackers.is_empty() {
            return true;
        }
        // e is nonempty here: the empty set has no attackers.
        let survivors = present.difference(e | f.targets_of(e));
        self.ensure_computed(f, survivors);
        !attackers.intersects(self.entries[&survivors.bits()].union)
    }
}

/// True iff `e` is weakly admissible in `f`.
///
/// The table carries memoized subframework results across calls on the
/// same framework; pass a fresh one per framework.
pub fn is_weakly_admissible(f: &Framework, e: ArgSet, memo: &mut MemoTable) -> bool {
    memo.admissible_in_view(f, f.all_args(), e)
}

/// All weakly admissible subsets, canonically ordered.
pub(crate) fn enumerate_impl(f: &Framework, memo: &mut MemoTable) -> ExtensionSet {
    memo.ensure_computed(f, f.all_args());
    ExtensionSet::new(memo.entries[&f.all_args().bits()].sets.clone())
}

/// Weakly admissible sets of the reduct of `f` by `e`, as arguments of
/// the reduct framework returned alongside them.
pub(crate) fn in_reduct_impl(f: &Framework, e: ArgSet, memo: &mut MemoTable) -> (Framework, ExtensionSet) {
    let reduct = f.reduct(e);
    let survivors: Vec<usize> = f
        .all_args()
        .difference(e | f.targets_of(e))
        .iter()
        .collect();
    memo.ensure_computed(f, f.all_args().difference(e | f.targets_of(e)));
    let entry = &memo.entries[&f.all_args().difference(e | f.targets_of(e)).bits()];
    // Root indices of survivors are dense-reindexed in the reduct; the
    // survivor list is ascending, so position = reduct index.
    let translated = entry
        .sets
        .iter()
        .map(|s| {
            s.iter()
                .map(|root| survivors.binary_search(&root).expect("survivor index"))
                .collect::<ArgSet>()
        })
        .collect::<Vec<_>>();
    (reduct, ExtensionSet::new(translated))
}
