//! Framework generators for sweeps: seeded random graphs and exhaustive
//! enumeration of all small frameworks.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::af::Framework;
use crate::error::{Error, Result};

/// Largest argument count for exhaustive framework enumeration; there
/// are 2^(n^2) labeled frameworks on n arguments.
pub const ENUMERATE_MAX_ARGS: usize = 4;

/// Parameters for one random framework.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    /// Independent inclusion probability for each ordered attack pair.
    pub p: f64,
    pub seed: u64,
    pub allow_self_attacks: bool,
}

/// Generates a random framework with arguments `a0..a(n-1)`.
///
/// Reproducibility contract: the pseudo-random stream is ChaCha8 seeded
/// with `seed` via `seed_from_u64`; each candidate pair draws one `u64`
/// reduced to 53 uniform bits, in row-major (source, target) order,
/// skipping the diagonal without a draw when self-attacks are off.
/// Identical configs yield identical frameworks on every platform.
pub fn random_af(cfg: GenConfig) -> Result<Framework> {
    if !(0.0..=1.0).contains(&cfg.p) {
        return Err(Error::InvalidConfig(format!(
            "attack probability must be in [0, 1], got {}",
            cfg.p
        )));
    }
    if cfg.n > Framework::MAX_ARGS {
        return Err(Error::InvalidConfig(format!(
            "argument count {} exceeds the supported maximum of {}",
            cfg.n,
            Framework::MAX_ARGS
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut attacks = Vec::new();
    for source in 0..cfg.n {
        for target in 0..cfg.n {
            if source == target && !cfg.allow_self_attacks {
                continue;
            }
            // 53-bit draw: uniform in [0, 1), so p = 1.0 includes every
            // pair and p = 0.0 none.
            let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if unit < cfg.p {
                attacks.push((source, target));
            }
        }
    }
    let labels: Vec<String> = (0..cfg.n).map(|i| format!("a{i}")).collect();
    Framework::from_index_pairs(labels, attacks)
}

/// Yields every labeled framework on `n` arguments exactly once, in
/// ascending order of the relation bitmask (bit k encodes the attack
/// (k / n, k % n)).
pub fn enumerate_all_afs(n: usize) -> Result<impl Iterator<Item = Framework>> {
    if n > ENUMERATE_MAX_ARGS {
        return Err(Error::SizeLimitExceeded {
            actual: n,
            limit: ENUMERATE_MAX_ARGS,
        });
    }
    let labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    Ok((0..1u64 << (n * n)).map(move |mask| {
        let attacks: Vec<(usize, usize)> = (0..n * n)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| (k / n, k % n))
            .collect();
        Framework::from_index_pairs(labels.clone(), attacks).expect("indices in range")
    }))
}
