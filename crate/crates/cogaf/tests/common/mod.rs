//! Fixtures shared by the integration test targets.

// Each test target compiles its own copy; not every target uses every
// fixture.
#![allow(dead_code)]

use cogaf::{ArgSet, Framework};

/// Two arguments where the attacker also attacks itself: a -> a, a -> b.
pub fn self_attack_pair() -> Framework {
    Framework::new(["a", "b"], [("a", "a"), ("a", "b")]).unwrap()
}

/// Three arguments in an attack chain: a -> b -> c.
pub fn chain_three() -> Framework {
    Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
}

/// A 3-cycle a -> b -> c -> a with b -> d hanging off it.
pub fn cycle_with_tail() -> Framework {
    Framework::new(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "a"), ("b", "d")],
    )
    .unwrap()
}

pub fn set(indices: &[usize]) -> ArgSet {
    ArgSet::from_indices(indices.iter().copied())
}
