use crate::graph::DistanceMatrix;
use serde::Serialize;

/// Per-vertex transmissions (distance row sums) and their aggregates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransmissionVector {
    pub tr: Vec<u64>,
    pub tr_max: u64,
    pub tr_min: u64,
    /// Wiener index, half the sum of all transmissions.
    pub wiener: u64,
}

impl TransmissionVector {
    pub fn is_regular(&self) -> bool {
        self.tr_max == self.tr_min
    }

    pub fn order(&self) -> usize {
        self.tr.len()
    }
}

pub fn transmissions(d: &DistanceMatrix) -> TransmissionVector {
    let tr: Vec<u64> = (0..d.order())
        .map(|i| d.row(i).iter().map(|&x| x as u64).sum())
        .collect();
    let total: u64 = tr.iter().sum();
    debug_assert_eq!(total % 2, 0, "distance matrix must be symmetric");
    TransmissionVector {
        tr_max: tr.iter().copied().max().unwrap_or(0),
        tr_min: tr.iter().copied().min().unwrap_or(0),
        wiener: total / 2,
        tr,
    }
}
