use super::{SpectraError, SymmetricMatrix};

const EQUITABLE_TOL: f64 = 1e-12;

/// Block-average row-sum matrix of a partitioned matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    pub t: usize,
    /// Row-major `t x t`; `b[i*t + j]` is the mean row sum of block `(i, j)`.
    pub b: Vec<f64>,
    /// Every block has constant row sums.
    pub equitable: bool,
}

impl QuotientMatrix {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.b[i * self.t + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.b.chunks(self.t).map(<[f64]>::to_vec).collect()
    }

    /// Perron root of a nonnegative quotient matrix via Collatz-Wielandt
    /// bracketing: for positive `x`, `min (Bx)_i/x_i <= ρ <= max (Bx)_i/x_i`.
    /// The matrix is shifted by `I` so the iteration cannot cycle.
    pub fn spectral_radius(&self) -> f64 {
        let t = self.t;
        let mut x = vec![1.0; t];
        let mut y = vec![0.0; t];
        let mut bracket = (0.0, f64::INFINITY);
        for _ in 0..100_000 {
            for (i, yi) in y.iter_mut().enumerate() {
                *yi = (0..t).map(|j| self.get(i, j) * x[j]).sum();
            }
            let (lo, hi) = y
                .iter()
                .zip(&x)
                .fold((f64::INFINITY, 0.0f64), |(lo, hi), (a, b)| {
                    (lo.min(a / b), hi.max(a / b))
                });
            bracket = (lo, hi);
            if hi - lo <= 1e-15 * hi.max(1.0) {
                break;
            }
            let norm = y.iter().zip(&x).map(|(a, b)| a + b).fold(0.0, f64::max);
            for (xi, yi) in x.iter_mut().zip(&y) {
                *xi = (*xi + yi) / norm;
            }
        }
        0.5 * (bracket.0 + bracket.1)
    }
}

/// Quotient of `m` with respect to `partition` (blocks of vertex indices).
pub fn equitable_quotient(
    m: &SymmetricMatrix,
    partition: &[Vec<usize>],
) -> Result<QuotientMatrix, SpectraError> {
    let n = m.order();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(SpectraError::InvalidPartition(format!(
                "block {b} is empty"
            )));
        }
        for &v in block {
            if v >= n {
                return Err(SpectraError::InvalidPartition(format!(
                    "vertex {v} out of range for order {n}"
                )));
            }
            if block_of[v] != usize::MAX {
                return Err(SpectraError::InvalidPartition(format!(
                    "vertex {v} appears in more than one block"
                )));
            }
            block_of[v] = b;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(SpectraError::InvalidPartition(format!(
            "vertex {v} is not covered"
        )));
    }

    let t = partition.len();
    let mut b = vec![0.0; t * t];
    let mut equitable = true;
    let mut sums = vec![0.0; t];
    for (i, block) in partition.iter().enumerate() {
        let mut lo = vec![f64::INFINITY; t];
        let mut hi = vec![f64::NEG_INFINITY; t];
        for &r in block {
            sums.iter_mut().for_each(|s| *s = 0.0);
            for (c, &a) in m.row(r).iter().enumerate() {
                sums[block_of[c]] += a;
            }
            for j in 0..t {
                b[i * t + j] += sums[j];
                lo[j] = lo[j].min(sums[j]);
                hi[j] = hi[j].max(sums[j]);
            }
        }
        for j in 0..t {
            b[i * t + j] /= block.len() as f64;
            if hi[j] - lo[j] > EQUITABLE_TOL * hi[j].abs().max(1.0) {
                equitable = false;
            }
        }
    }
    Ok(QuotientMatrix { t, b, equitable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apsp, make_complete_multipartite, make_cycle, make_dvdr, make_path, Graph};
    use crate::spectra::{build_d_alpha, spectral_radius, transmissions, Alpha};

    fn d0(g: &Graph) -> SymmetricMatrix {
        let d = apsp(g).unwrap();
        build_d_alpha(&d, &transmissions(&d), Alpha::ZERO).unwrap()
    }

    fn hub_partition(n: usize) -> Vec<Vec<usize>> {
        vec![vec![0], (1..n).collect()]
    }

    #[test]
    fn k122_quotient() {
        let m = d0(&make_complete_multipartite(&[1, 2, 2]).unwrap());
        let q = equitable_quotient(&m, &hub_partition(5)).unwrap();
        assert!(q.equitable);
        assert_eq!(q.rows(), vec![vec![0.0, 4.0], vec![1.0, 4.0]]);
        assert!((q.spectral_radius() - (2.0 + 8f64.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn wheel_quotient() {
        let wheel = make_dvdr(&make_cycle(5).unwrap()).unwrap();
        let m = d0(&wheel);
        let q = equitable_quotient(&m, &hub_partition(6)).unwrap();
        assert!(q.equitable);
        assert_eq!(q.rows(), vec![vec![0.0, 5.0], vec![1.0, 6.0]]);
        let rho = spectral_radius(&m).unwrap().mu;
        assert!((q.spectral_radius() - rho).abs() < 1e-12);
    }

    #[test]
    fn path_is_not_equitable() {
        let m = d0(&make_path(4).unwrap());
        let q = equitable_quotient(&m, &[vec![0], vec![1, 2, 3]]).unwrap();
        assert!(!q.equitable);
        // row sums of v1, v2, v3 over {v0} are 1, 2, 3
        assert_eq!(q.get(1, 0), 2.0);
    }

    #[test]
    fn trivial_partition_is_equitable() {
        let m = d0(&make_path(4).unwrap());
        let q = equitable_quotient(&m, &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert!(q.equitable);
        assert_eq!(q.b, m.as_slice());
    }

    #[test]
    fn invalid_partitions() {
        let m = d0(&make_path(3).unwrap());
        for bad in [
            vec![vec![0], vec![1]],
            vec![vec![0, 1], vec![1, 2]],
            vec![vec![0, 1, 2], vec![]],
            vec![vec![0, 1, 3]],
        ] {
            assert!(matches!(
                equitable_quotient(&m, &bad),
                Err(SpectraError::InvalidPartition(_))
            ));
        }
    }
}
