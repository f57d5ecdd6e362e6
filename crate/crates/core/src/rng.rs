//! Deterministic random source shared by every sampler.
//!
//! The generator is ChaCha8 (`rand_chacha` 0.3, pinned) seeded through
//! `SeedableRng::seed_from_u64`. Integer ranges use Lemire's unbiased
//! multiply-and-reject method and floats take the top 53 bits of a `u64`,
//! both implemented here so that a seed produces the same stream regardless
//! of which `rand` distribution code happens to be linked in.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Name of the underlying generator; bumped if the stream ever changes.
pub const GENERATOR: &str = "chacha8-v1";

/// A seeded, single-owner pseudo-random stream.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `0..n`. Consumes nothing when `n == 1`.
    ///
    /// Panics if `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0) has no valid outcome");
        if n == 1 {
            return 0;
        }
        let n = n as u64;
        let mut m = u128::from(self.next_u64()) * u128::from(n);
        let mut low = m as u64;
        if low < n {
            let threshold = n.wrapping_neg() % n;
            while low < threshold {
                m = u128::from(self.next_u64()) * u128::from(n);
                low = m as u64;
            }
        }
        (m >> 64) as usize
    }

    /// Uniform real in `[0, 1)`.
    #[inline]
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Bernoulli trial with success probability `p`.
    #[inline]
    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> Option<&'a T> {
        if items.is_empty() {
            None
        } else {
            Some(&items[self.below(items.len())])
        }
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        let len = items.len();
        self.partial_shuffle(items, len);
    }

    /// Moves a uniform random `k`-subset (in uniform random order) to the
    /// front of `items` and returns it. A full shuffle is `partial_shuffle(len)`
    /// and consumes the same draws as any `k >= len`.
    pub fn partial_shuffle<'a, T>(&mut self, items: &'a mut [T], k: usize) -> &'a mut [T] {
        let len = items.len();
        let k = k.min(len);
        for i in 0..k {
            let j = i + self.below(len - i);
            items.swap(i, j);
        }
        &mut items[..k]
    }

    /// Index drawn with probability proportional to `weights[i]` by
    /// cumulative-sum inversion. Returns `None` when no weight is positive.
    pub fn weighted_index(&mut self, weights: &[f64]) -> Option<usize> {
        let total: f64 = weights.iter().filter(|w| **w > 0.0).sum();
        if total.is_nan() || total <= 0.0 {
            return None;
        }
        let target = self.unit() * total;
        let mut acc = 0.0;
        let mut last = None;
        for (i, &w) in weights.iter().enumerate() {
            if w <= 0.0 {
                continue;
            }
            acc += w;
            last = Some(i);
            if target < acc {
                return Some(i);
            }
        }
        last
    }
}
