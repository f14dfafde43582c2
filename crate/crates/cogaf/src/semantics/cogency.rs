//! The cogency order on argument subsets and cogent-extension
//! enumeration.
//!
//! A set `E` is at least as cogent as `E'` when `E` is admissible in the
//! framework restricted to `E ∪ E'`. A set is cogent when no subset is
//! strictly more cogent than it.

use crate::af::{ArgSet, ExtensionSet, Framework};

/// True iff `e` is at least as cogent as `e2`.
///
/// Equivalent to `f.restrict(e | e2).is_admissible(e)`. The restriction
/// keeps every argument and drops attacks leaving the union, so the check
/// reduces to: `e` is conflict-free, and every attacker of `e` inside the
/// union is counterattacked by `e`.
pub fn geq_cog(f: &Framework, e: ArgSet, e2: ArgSet) -> bool {
    let union = e | e2;
    f.is_conflict_free(e) && (f.attackers_of(e) & union).is_subset_of(f.targets_of(e))
}

/// True iff `e` is strictly more cogent than `e2`.
pub fn gt_cog(f: &Framework, e: ArgSet, e2: ArgSet) -> bool {
    geq_cog(f, e, e2) && !geq_cog(f, e2, e)
}

/// True iff no subset of `f`'s arguments is strictly more cogent than `e`.
///
/// Iterates every candidate challenger with early exit. Challengers that
/// are not conflict-free are skipped: such a set is not admissible in any
/// restriction, so it is never strictly above anything (the equivalence
/// with the unskipped definitional loop is covered by the reference
/// implementation tests).
pub(crate) fn is_cogent_impl(f: &Framework, e: ArgSet) -> bool {
    let n = f.arg_count();
    for challenger_bits in 0..1u64 << n {
        let challenger = ArgSet::from_bits(challenger_bits);
        if !f.is_conflict_free(challenger) {
            continue;
        }
        if gt_cog(f, challenger, e) {
            return false;
        }
    }
    true
}

/// All cogent subsets, canonically ordered.
pub(crate) fn enumerate_impl(f: &Framework) -> ExtensionSet {
    let tables = SubsetTables::build(f);
    let n = f.arg_count();
    let mut found = Vec::new();
    for candidate in 0..1u64 << n {
        if !tables.has_stricter(n, candidate) {
            found.push(ArgSet::from_bits(candidate));
        }
    }
    ExtensionSet::new(found)
}

/// Per-subset attack data for a whole framework, indexed by bit pattern.
///
/// Makes each cogency comparison O(1) once the O(2^n) tables exist, which
/// is what the all-pairs enumeration loop needs.
pub(crate) struct SubsetTables {
    /// targets_of(S) for every subset S.
    forward: Vec<u64>,
    /// attackers_of(S) for every subset S.
    attackers: Vec<u64>,
    conflict_free: Vec<bool>,
}

impl SubsetTables {
    pub(crate) fn build(f: &Framework) -> Self {
        let n = f.arg_count();
        let size = 1usize << n;
        let mut forward = vec![0u64; size];
        let mut attackers = vec![0u64; size];
        let mut conflict_free = vec![false; size];
        conflict_free[0] = true;
        for bits in 1..size {
            let low = bits.trailing_zeros() as usize;
            let rest = bits & (bits - 1);
            let row_out = f.attacks_from(low).bits();
            let row_in = f.attackers_of_arg(low).bits();
            forward[bits] = forward[rest] | row_out;
            attackers[bits] = attackers[rest] | row_in;
            conflict_free[bits] = conflict_free[rest]
                && row_out & bits as u64 == 0
                && row_in & bits as u64 == 0;
        }
        SubsetTables {
            forward,
            attackers,
            conflict_free,
        }
    }

    fn geq(&self, e: u64, e2: u64) -> bool {
        let union = e | e2;
        self.conflict_free[e as usize]
            && (self.attackers[e as usize] & union) & !self.forward[e as usize] == 0
    }

    /// True iff some subset is strictly more cogent than `e`. Challengers
    /// that are not conflict-free are skipped (see `is_cogent_impl`).
    fn has_stricter(&self, n: usize, e: u64) -> bool {
        for challenger in 0..1u64 << n {
            if !self.conflict_free[challenger as usize] {
                continue;
            }
            if self.geq(challenger, e) && !self.geq(e, challenger) {
                return true;
            }
        }
        false
    }
}
