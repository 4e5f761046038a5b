use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Exponents `m_1..m_n` of a weight monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn from_vec(v: Vec<usize>) -> Self {
        WeightVector(v)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `m_i` with 1-based `i`, zero out of range.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub(crate) fn bump(&mut self, letter: u32) {
        self.0[letter as usize - 1] += 1;
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition::from_trimmed(self.0.clone()))
    }

    pub fn reversed(&self) -> Self {
        WeightVector(self.0.iter().rev().copied().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_check() {
        assert!(WeightVector::from_vec(vec![2, 2, 0]).is_partition());
        assert!(!WeightVector::from_vec(vec![1, 2]).is_partition());
        assert_eq!(
            WeightVector::from_vec(vec![3, 1, 0]).to_partition().unwrap().parts(),
            &[3, 1]
        );
    }
}
