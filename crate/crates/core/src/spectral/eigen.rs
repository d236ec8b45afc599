//! Symmetric eigensolvers: cyclic Jacobi rotations for a full decomposition and
//! shifted power iteration for the top eigenpair of large matrices.

use crate::error::{Error, Result};
use crate::matrix::{dot, norm, Matrix};

/// Full decomposition, eigenvalues in descending order; `vectors[k]` is the unit
/// eigenvector of `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub rotations: usize,
}

impl SymmetricEigen {
    pub fn max_value(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn min_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// Cyclic Jacobi diagonalization. `max_rotations` bounds the number of plane
/// rotations applied.
pub fn jacobi(m: &Matrix, max_rotations: usize) -> Result<SymmetricEigen> {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = Matrix::identity(n);
    let scale = m.frobenius_norm();
    let skip_below = f64::EPSILON * 1e-2 * scale;
    let mut rotations = 0;

    loop {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= skip_below || apq == 0.0 {
                    continue;
                }
                if rotations == max_rotations {
                    let off: f64 = off_diagonal_sq(&a).sqrt();
                    return Err(Error::EigenBudget { iterations: rotations, best_residual: off });
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
                rotations += 1;
                rotated = true;
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|k| v[(k, i)]).collect()).collect();
    Ok(SymmetricEigen { values, vectors, rotations })
}

fn off_diagonal_sq(a: &Matrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s
}

/// Top eigenpair of `m` by power iteration on `m + σI`, `σ` the largest absolute
/// row sum. Every eigenvalue of the shifted matrix is nonnegative, so its dominant
/// eigenvalue is the algebraically largest of `m`.
pub fn shifted_power(m: &Matrix, tol: f64, max_iter: usize) -> Result<(f64, Vec<f64>, f64, usize)> {
    let n = m.dim();
    let shift = m.max_abs_row_sum();
    // deterministic start with no special alignment
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + ((i as f64 + 1.0) * 0.618_033_988_749_895).fract()).collect();
    let nx = norm(&x);
    x.iter_mut().for_each(|v| *v /= nx);

    let mut best = f64::INFINITY;
    for it in 1..=max_iter {
        let mx = m.mul_vec(&x);
        let lambda = dot(&x, &mx);
        let residual = norm(&mx.iter().zip(&x).map(|(a, b)| a - lambda * b).collect::<Vec<_>>());
        best = best.min(residual);
        if residual <= tol {
            return Ok((lambda, x, residual, it));
        }
        let mut y: Vec<f64> = mx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        let ny = norm(&y);
        if ny == 0.0 {
            // m = −σI on the iterate's span: any vector is an eigenvector
            return Ok((lambda, x, residual, it));
        }
        y.iter_mut().for_each(|v| *v /= ny);
        x = y;
    }
    Err(Error::EigenBudget { iterations: max_iter, best_residual: best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sym(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
        let b = Matrix::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
        b.add(&b.transpose()).scale(0.5)
    }

    #[test]
    fn jacobi_matches_nalgebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for n in [1usize, 2, 3, 7, 12, 30] {
            let m = random_sym(&mut rng, n);
            let ours = jacobi(&m, 10 * n * n + 10).unwrap();
            let reference = nalgebra::DMatrix::from_row_slice(n, n, m.as_slice()).symmetric_eigen();
            let mut expected: Vec<f64> = reference.eigenvalues.iter().copied().collect();
            expected.sort_by(|a, b| b.total_cmp(a));
            for (a, b) in ours.values.iter().zip(&expected) {
                assert!((a - b).abs() < 1e-12, "{a} vs {b}");
            }
            for (val, vec) in ours.values.iter().zip(&ours.vectors) {
                let r: Vec<f64> = m.mul_vec(vec).iter().zip(vec).map(|(a, b)| a - val * b).collect();
                assert!(norm(&r) < 1e-12);
                assert!((norm(vec) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn jacobi_budget_error() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let m = random_sym(&mut rng, 6);
        assert!(matches!(jacobi(&m, 3), Err(Error::EigenBudget { iterations: 3, .. })));
    }

    #[test]
    fn power_agrees_with_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..5 {
            let m = random_sym(&mut rng, 25);
            let full = jacobi(&m, 20_000).unwrap();
            let (lambda, v, residual, _) = shifted_power(&m, 1e-10, 200_000).unwrap();
            assert!(residual <= 1e-10);
            assert!((lambda - full.max_value()).abs() < 1e-9);
            assert!(dot(&v, &full.vectors[0]).abs() > 1.0 - 1e-8);
        }
    }

    #[test]
    fn power_picks_algebraic_max_not_modulus() {
        // eigenvalues 1 and -3: the dominant-modulus one is negative
        let m = Matrix::from_rows(&[vec![-1.0, 2.0], vec![2.0, -1.0]]).unwrap();
        let (lambda, _, _, _) = shifted_power(&m, 1e-12, 10_000).unwrap();
        assert!((lambda - 1.0).abs() < 1e-12);
    }
}
