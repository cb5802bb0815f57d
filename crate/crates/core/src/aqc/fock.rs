use serde::Serialize;

use super::AqcError;

/// Occupations `0..=cutoff` on each of `num_modes` modes, basis in
/// lexicographic order with the first mode most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruncatedFockSpace {
    pub num_modes: usize,
    pub cutoff: u64,
}

impl TruncatedFockSpace {
    pub fn new(num_modes: usize, cutoff: u64) -> Result<Self, AqcError> {
        if num_modes == 0 {
            return Err(AqcError::Validation("need at least one mode".into()));
        }
        let s = TruncatedFockSpace { num_modes, cutoff };
        s.checked_dimension()?;
        Ok(s)
    }

    fn checked_dimension(&self) -> Result<usize, AqcError> {
        let base = self.cutoff.checked_add(1).and_then(|b| usize::try_from(b).ok());
        base.and_then(|b| b.checked_pow(self.num_modes as u32))
            .ok_or_else(|| AqcError::Resource(format!("(cutoff + 1)^{} overflows", self.num_modes)))
    }

    pub fn dimension(&self) -> usize {
        self.checked_dimension().expect("checked at construction")
    }

    pub fn tuple(&self, mut index: usize) -> Vec<u64> {
        let base = self.cutoff as usize + 1;
        let mut out = vec![0u64; self.num_modes];
        for slot in out.iter_mut().rev() {
            *slot = (index % base) as u64;
            index /= base;
        }
        out
    }

    pub fn index(&self, tuple: &[u64]) -> Option<usize> {
        if tuple.len() != self.num_modes || tuple.iter().any(|&n| n > self.cutoff) {
            return None;
        }
        let base = self.cutoff as usize + 1;
        Some(tuple.iter().fold(0, |acc, &n| acc * base + n as usize))
    }

    /// All basis tuples in index order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.dimension()).map(|i| self.tuple(i))
    }
}
