//! Fixtures shared by unit tests.

use crate::af::{ArgSet, Framework};

/// ({a,b}, {(a,a),(a,b)}): a self-attacker silencing b.
pub(crate) fn self_attack_pair() -> Framework {
    Framework::new(["a", "b"], [("a", "a"), ("a", "b")]).unwrap()
}

/// ({a,b,c}, {(a,b),(b,c)}): a two-step attack chain.
pub(crate) fn chain_three() -> Framework {
    Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
}

/// ({a,b,c,d}, {(a,b),(b,c),(c,a),(b,d)}): a 3-cycle with a tail.
pub(crate) fn cycle_with_tail() -> Framework {
    Framework::new(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "a"), ("b", "d")],
    )
    .unwrap()
}

pub(crate) fn set(indices: &[usize]) -> ArgSet {
    ArgSet::from_indices(indices.iter().copied())
}
