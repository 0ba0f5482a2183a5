use std::fmt;
use std::ops::AddAssign;

use serde_json::{Map, Value};

/// Multiplicities `f_m` of the momentum numbers `m = 0..N-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MomentumTally {
    counts: Vec<u64>,
}

impl MomentumTally {
    pub fn new(sites: u32) -> Self {
        MomentumTally { counts: vec![0; sites as usize] }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        MomentumTally { counts }
    }

    pub fn sites(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn add(&mut self, m: u32, count: u64) {
        self.counts[m as usize] += count;
    }

    pub fn get(&self, m: u32) -> u64 {
        self.counts[m as usize]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The tally of the conjugate eigenvalues, `m -> -m mod N`.
    pub fn negated(&self) -> Self {
        let n = self.counts.len();
        MomentumTally { counts: (0..n).map(|m| self.counts[(n - m) % n]).collect() }
    }

    pub fn is_negation_symmetric(&self) -> bool {
        *self == self.negated()
    }

    /// Deterministic FNV-1a digest of the counts, used to compare methods.
    pub fn checksum(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for &c in &self.counts {
            for b in c.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
        h
    }

    /// `{"m": count}` for every nonzero count, in increasing `m`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (m, &c) in self.counts.iter().enumerate() {
            if c > 0 {
                map.insert(m.to_string(), Value::from(c));
            }
        }
        Value::Object(map)
    }
}

impl AddAssign<&MomentumTally> for MomentumTally {
    fn add_assign(&mut self, rhs: &MomentumTally) {
        assert_eq!(self.counts.len(), rhs.counts.len(), "tallies over different N");
        for (a, b) in self.counts.iter_mut().zip(&rhs.counts) {
            *a += b;
        }
    }
}

impl fmt::Display for MomentumTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(m, c)| format!("{m}:{c}"))
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}
