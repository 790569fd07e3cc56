//! Exhaustive-or-sampled enumeration of check instances.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default maximum number of instances examined by one check.
pub const DEFAULT_CHECK_CAP: usize = 2_000_000;

/// Limits the number of instances a window check examines. Populations at or
/// below `cap` are examined exhaustively; larger ones are sampled uniformly
/// without replacement using a generator seeded with `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub cap: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self { cap: DEFAULT_CHECK_CAP, seed: 0 }
    }
}

impl Budget {
    pub fn exhaustive() -> Self {
        Self { cap: usize::MAX, seed: 0 }
    }

    /// Indices into `0..population` to examine, in increasing order.
    pub fn select(&self, population: usize) -> Selection {
        if population <= self.cap {
            Selection::All(population)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            let mut picked = rand::seq::index::sample(&mut rng, population, self.cap).into_vec();
            picked.sort_unstable();
            Selection::Sample(picked)
        }
    }
}

pub enum Selection {
    All(usize),
    Sample(Vec<usize>),
}

impl Selection {
    pub fn len(&self) -> usize {
        match self {
            Selection::All(n) => *n,
            Selection::Sample(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let (all, sample) = match self {
            Selection::All(n) => (Some(0..*n), None),
            Selection::Sample(v) => (None, Some(v.iter().copied())),
        };
        all.into_iter().flatten().chain(sample.into_iter().flatten())
    }
}

/// Splits a flat index into mixed-radix digits, most significant first.
pub(crate) fn digits<const N: usize>(mut index: usize, radices: [usize; N]) -> [usize; N] {
    let mut out = [0; N];
    for k in (0..N).rev() {
        out[k] = index % radices[k];
        index /= radices[k];
    }
    out
}
