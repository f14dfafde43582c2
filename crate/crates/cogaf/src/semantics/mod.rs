//! Extension enumeration under the four supported semantics.
//!
//! Free functions cover the pairwise comparisons and membership tests
//! that need no size guard. [`Solver`] wraps the enumerators, which walk
//! all 2^n subsets and therefore refuse frameworks above a configured
//! argument cap instead of hanging.

mod cogency;
mod weak;

pub use cogency::{geq_cog, gt_cog};
pub use weak::{is_weakly_admissible, MemoTable};

use crate::af::{ArgSet, ExtensionSet, Framework};
use crate::error::{Error, Result};

/// Default argument cap for the enumerating entry points.
pub const DEFAULT_MAX_ARGS: usize = 20;

/// Entry point for whole-framework enumeration.
///
/// Carries only the argument cap; all methods are pure. The cap exists
/// because every enumerator is exponential in the argument count by
/// definition, so oversized inputs get a refusal rather than a hang.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    max_args: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            max_args: DEFAULT_MAX_ARGS,
        }
    }
}

impl Solver {
    pub fn new() -> Self {
        Solver::default()
    }

    pub fn with_max_args(max_args: usize) -> Self {
        Solver { max_args }
    }

    pub fn max_args(&self) -> usize {
        self.max_args
    }

    fn check_size(&self, f: &Framework) -> Result<()> {
        if f.arg_count() > self.max_args {
            return Err(Error::SizeLimitExceeded {
                actual: f.arg_count(),
                limit: self.max_args,
            });
        }
        Ok(())
    }

    /// All conflict-free subsets, canonically ordered.
    pub fn enumerate_conflict_free(&self, f: &Framework) -> Result<ExtensionSet> {
        self.check_size(f)?;
        Ok(self.filter_subsets(f, |s| f.is_conflict_free(s)))
    }

    /// All admissible subsets, canonically ordered.
    pub fn enumerate_admissible(&self, f: &Framework) -> Result<ExtensionSet> {
        self.check_size(f)?;
        Ok(self.filter_subsets(f, |s| f.is_admissible(s)))
    }

    /// True iff no subset of `f`'s arguments is strictly more cogent
    /// than `e`.
    pub fn is_cogent(&self, f: &Framework, e: ArgSet) -> Result<bool> {
        self.check_size(f)?;
        Ok(cogency::is_cogent_impl(f, e))
    }

    /// All cogent subsets, canonically ordered.
    pub fn enumerate_cogent(&self, f: &Framework) -> Result<ExtensionSet> {
        self.check_size(f)?;
        Ok(cogency::enumerate_impl(f))
    }

    /// All weakly admissible subsets, canonically ordered.
    pub fn enumerate_weakly_admissible(&self, f: &Framework) -> Result<ExtensionSet> {
        self.check_size(f)?;
        Ok(weak::enumerate_impl(f, &mut MemoTable::new()))
    }

    /// Union of all weakly admissible subsets.
    pub fn weak_union(&self, f: &Framework) -> Result<ArgSet> {
        Ok(self.enumerate_weakly_admissible(f)?.union_all())
    }

    /// The reduct of `f` by `e` together with its weakly admissible
    /// sets, indexed against the returned reduct framework.
    pub fn weakly_admissible_in_reduct(
        &self,
        f: &Framework,
        e: ArgSet,
    ) -> Result<(Framework, ExtensionSet)> {
        self.check_size(f)?;
        Ok(weak::in_reduct_impl(f, e, &mut MemoTable::new()))
    }

    fn filter_subsets(&self, f: &Framework, keep: impl Fn(ArgSet) -> bool) -> ExtensionSet {
        let mut found = Vec::new();
        for bits in 0..1u64 << f.arg_count() {
            let s = ArgSet::from_bits(bits);
            if keep(s) {
                found.push(s);
            }
        }
        ExtensionSet::new(found)
    }
}

/// The ⊆-maximal members of `sets`, canonically ordered.
pub fn maximal_by_inclusion(sets: &ExtensionSet) -> ExtensionSet {
    let slice = sets.as_slice();
    let mut keep = Vec::new();
    'outer: for (i, &s) in slice.iter().enumerate() {
        // Canonical order ascends by cardinality, so only later members
        // can strictly contain s.
        for &t in &slice[i + 1..] {
            if s != t && s.is_subset_of(t) {
                continue 'outer;
            }
        }
        keep.push(s);
    }
    ExtensionSet::new(keep)
}
