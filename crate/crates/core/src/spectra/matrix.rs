use super::{Alpha, SpectraError, TransmissionVector};
use crate::graph::DistanceMatrix;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymmetricMatrix {
    /// Checks shape, finiteness and exact symmetry.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self, SpectraError> {
        if n == 0 {
            return Err(SpectraError::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(SpectraError::Dimension(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if !entries[i * n + j].is_finite() {
                    return Err(SpectraError::NonFinite(i, j));
                }
                if j > i && entries[i * n + j] != entries[j * n + i] {
                    return Err(SpectraError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymmetricMatrix { n, a: entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectraError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SpectraError::Dimension(
                "rows are not all of length n".into(),
            ));
        }
        SymmetricMatrix::new(n, rows.concat())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.a
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0.0))
    }

    /// `y = A x`.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// Entrywise sum, used for `Tr + D`.
    pub fn add(&self, other: &SymmetricMatrix) -> Result<SymmetricMatrix, SpectraError> {
        if self.n != other.n {
            return Err(SpectraError::Dimension(format!(
                "cannot add {0}x{0} and {1}x{1}",
                self.n, other.n
            )));
        }
        Ok(SymmetricMatrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn scale(&self, c: f64) -> SymmetricMatrix {
        SymmetricMatrix {
            n: self.n,
            a: self.a.iter().map(|x| c * x).collect(),
        }
    }
}

/// `D_α = α·diag(Tr) + (1-α)·D`.
pub fn build_d_alpha(
    d: &DistanceMatrix,
    t: &TransmissionVector,
    alpha: Alpha,
) -> Result<SymmetricMatrix, SpectraError> {
    let n = d.order();
    if t.order() != n {
        return Err(SpectraError::Dimension(format!(
            "{n}x{n} distance matrix with {} transmissions",
            t.order()
        )));
    }
    let a = alpha.get();
    let off = 1.0 - a;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(if i == j {
                a * t.tr[i] as f64
            } else {
                off * d.get(i, j) as f64
            });
        }
    }
    Ok(SymmetricMatrix { n, a: entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apsp, make_path};
    use crate::spectra::transmissions;

    fn p3() -> (DistanceMatrix, TransmissionVector) {
        let d = apsp(&make_path(3).unwrap()).unwrap();
        let t = transmissions(&d);
        (d, t)
    }

    #[test]
    fn anchors() {
        let (d, t) = p3();
        let m0 = build_d_alpha(&d, &t, Alpha::ZERO).unwrap();
        assert_eq!(m0.as_slice(), &[0., 1., 2., 1., 0., 1., 2., 1., 0.]);
        let m1 = build_d_alpha(&d, &t, Alpha::ONE).unwrap();
        assert_eq!(m1.as_slice(), &[3., 0., 0., 0., 2., 0., 0., 0., 3.]);
        assert!(m1.is_diagonal());
        let mh = build_d_alpha(&d, &t, Alpha::HALF).unwrap();
        assert_eq!(mh.as_slice(), &[1.5, 0.5, 1., 0.5, 1., 0.5, 1., 0.5, 1.5]);
    }

    #[test]
    fn row_sums_are_transmissions() {
        let (d, t) = p3();
        for a in [0.0, 0.3, 0.8] {
            let m = build_d_alpha(&d, &t, Alpha::new(a).unwrap()).unwrap();
            for (s, &tr) in m.row_sums().iter().zip(&t.tr) {
                assert!((s - tr as f64).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn dimension_mismatch() {
        let (d, _) = p3();
        let other = transmissions(&apsp(&make_path(4).unwrap()).unwrap());
        assert!(matches!(
            build_d_alpha(&d, &other, Alpha::ZERO),
            Err(SpectraError::Dimension(_))
        ));
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(
            SymmetricMatrix::new(0, vec![]),
            Err(SpectraError::EmptyMatrix)
        );
        assert_eq!(
            SymmetricMatrix::new(2, vec![0., 1., 2., 0.]),
            Err(SpectraError::NotSymmetric(0, 1))
        );
        assert!(matches!(
            SymmetricMatrix::new(2, vec![0., 1., 1.]),
            Err(SpectraError::Dimension(_))
        ));
        assert_eq!(
            SymmetricMatrix::new(1, vec![f64::NAN]),
            Err(SpectraError::NonFinite(0, 0))
        );
    }
}
