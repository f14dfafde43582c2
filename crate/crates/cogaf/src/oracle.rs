//! Definition-literal reference implementations for differential
//! testing.
//!
//! Everything here recomputes from the definitions on materialized
//! frameworks: cogency comparisons go through an explicit restriction,
//! weak admissibility recurses on freshly built reducts, and nothing is
//! cached or pruned. The engine in `semantics` must agree with these on
//! every input; the two share only the core framework type, so an
//! optimization bug on either side shows up as a disagreement.

use crate::af::{ArgSet, Framework};
use crate::error::{Error, Result};

/// Largest framework the oracle accepts. The naive recursion multiplies
/// subset scans across reduct levels, so this is deliberately small.
pub const ORACLE_MAX_ARGS: usize = 8;

fn check_size(f: &Framework) -> Result<()> {
    if f.arg_count() > ORACLE_MAX_ARGS {
        return Err(Error::SizeLimitExceeded {
            actual: f.arg_count(),
            limit: ORACLE_MAX_ARGS,
        });
    }
    Ok(())
}

/// True iff no subset of `f`'s arguments is strictly more cogent than
/// `e`, comparing via materialized restrictions.
///
/// Every challenger is tried, including sets that are not conflict-free.
pub fn oracle_is_cogent(f: &Framework, e: ArgSet) -> Result<bool> {
    check_size(f)?;
    for bits in 0..1u64 << f.arg_count() {
        let challenger = ArgSet::from_bits(bits);
        if oracle_geq(f, challenger, e) && !oracle_geq(f, e, challenger) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn oracle_geq(f: &Framework, e: ArgSet, e2: ArgSet) -> bool {
    f.restrict(e | e2).is_admissible(e)
}

/// True iff `e` is weakly admissible in `f`, recursing on materialized
/// reducts.
pub fn oracle_is_weakly_admissible(f: &Framework, e: ArgSet) -> Result<bool> {
    check_size(f)?;
    Ok(weakly_admissible_naive(f, e))
}

fn weakly_admissible_naive(f: &Framework, e: ArgSet) -> bool {
    if !f.is_conflict_free(e) {
        return false;
    }
    let attackers = f.attackers_of(e);
    if attackers.is_empty() {
        return true;
    }
    // e is nonempty (the empty set has no attackers), so the reduct is
    // strictly smaller and the recursion terminates.
    let reduct = f.reduct(e);
    for bits in 0..1u64 << reduct.arg_count() {
        let w = ArgSet::from_bits(bits);
        if !weakly_admissible_naive(&reduct, w) {
            continue;
        }
        // Reduct labels are carried over from f, so membership of an
        // attacker translates by label.
        for member in w.iter() {
            let root = f.index_of(reduct.label(member)).expect("carried label");
            if attackers.contains(root) {
                return false;
            }
        }
    }
    true
}
