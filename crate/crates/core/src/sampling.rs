//! Seeded, splittable sampling. Each check draws from its own ChaCha stream
//! keyed by the check id, so adding or reordering checks never shifts the
//! samples another check sees.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sampling parameters shared by every sampled check in a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            seed: 0,
            samples: 10_000,
        }
    }
}

impl Sampling {
    pub fn rng(&self, stream: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(fnv1a(stream.as_bytes()));
        rng
    }

    /// `samples` indices drawn uniformly from `0..n`.
    pub fn indices(&self, stream: &str, n: u64) -> Vec<u64> {
        let mut rng = self.rng(stream);
        (0..self.samples).map(|_| rng.gen_range(0..n)).collect()
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let s = Sampling {
            seed: 5,
            samples: 20,
        };
        assert_eq!(s.indices("a", 1000), s.indices("a", 1000));
        assert_ne!(s.indices("a", 1000), s.indices("b", 1000));
        let t = Sampling {
            seed: 6,
            samples: 20,
        };
        assert_ne!(s.indices("a", 1000), t.indices("a", 1000));
    }
}
