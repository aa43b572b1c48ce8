//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Serves both as the fallback for the power iteration and as the
//! independent oracle the power iteration is checked against, so it shares
//! no numerical code with that path.

use super::SymmetricMatrix;

const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition. Eigenvalues are sorted in decreasing order and
/// `vectors[k]` is the unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn largest(&self) -> f64 {
        self.values[0]
    }
}

pub fn jacobi_eigen(m: &SymmetricMatrix) -> SymmetricEigen {
    let n = m.order();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = f64::EPSILON * frob.max(f64::MIN_POSITIVE);
    let mut sweeps = 0;

    while sweeps < MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // choose the rotation angle that annihilates a[p][q]
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                // f64::signum(0.0) is 1.0, so theta = 0 gives a 45 degree rotation
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (rp, rq) = if p < q {
                    let (lo, hi) = a.split_at_mut(q);
                    (&mut lo[p], &mut hi[0])
                } else {
                    let (lo, hi) = a.split_at_mut(p);
                    (&mut hi[0], &mut lo[q])
                };
                for (apk, aqk) in rp.iter_mut().zip(rq.iter_mut()) {
                    let (x, y) = (*apk, *aqk);
                    *apk = c * x - s * y;
                    *aqk = s * x + c * y;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.iter().map(|&k| a[k][k]).collect();
    let vectors = order
        .iter()
        .map(|&k| v.iter().map(|row| row[k]).collect())
        .collect();
    SymmetricEigen {
        values,
        vectors,
        sweeps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn two_by_two() {
        let m = SymmetricMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = jacobi_eigen(&m);
        assert!(close(e.values[0], 3.0, 1e-14));
        assert!(close(e.values[1], 1.0, 1e-14));
        let x = &e.vectors[0];
        assert!(close(x[0].abs(), 0.5f64.sqrt(), 1e-14));
    }

    #[test]
    fn distance_matrix_of_p3() {
        // characteristic polynomial of [[0,1,2],[1,0,1],[2,1,0]] is
        // -(λ+2)(λ²-2λ-2)
        let m = SymmetricMatrix::from_rows(&[
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![2.0, 1.0, 0.0],
        ])
        .unwrap();
        let e = jacobi_eigen(&m);
        assert!(close(e.values[0], 1.0 + 3f64.sqrt(), 1e-13));
        assert!(close(e.values[1], 1.0 - 3f64.sqrt(), 1e-13));
        assert!(close(e.values[2], -2.0, 1e-13));
    }

    #[test]
    fn eigenpairs_reconstruct() {
        let rows = vec![
            vec![4.0, 1.0, -2.0, 2.0],
            vec![1.0, 2.0, 0.0, 1.0],
            vec![-2.0, 0.0, 3.0, -2.0],
            vec![2.0, 1.0, -2.0, -1.0],
        ];
        let m = SymmetricMatrix::from_rows(&rows).unwrap();
        let e = jacobi_eigen(&m);
        let trace: f64 = (0..4).map(|i| rows[i][i]).sum();
        assert!(close(e.values.iter().sum::<f64>(), trace, 1e-12));
        let mut y = vec![0.0; 4];
        for (lambda, x) in e.values.iter().zip(&e.vectors) {
            m.mul_vec(x, &mut y);
            for i in 0..4 {
                assert!(close(y[i], lambda * x[i], 1e-12));
            }
            let norm: f64 = x.iter().map(|t| t * t).sum();
            assert!(close(norm, 1.0, 1e-12));
        }
    }

    #[test]
    fn diagonal_and_scalar() {
        let m = SymmetricMatrix::from_rows(&[vec![3.0, 0.0], vec![0.0, 5.0]]).unwrap();
        let e = jacobi_eigen(&m);
        assert_eq!(e.values, vec![5.0, 3.0]);
        assert_eq!(e.sweeps, 0);
        let one = SymmetricMatrix::new(1, vec![-2.0]).unwrap();
        assert_eq!(jacobi_eigen(&one).values, vec![-2.0]);
    }
}
