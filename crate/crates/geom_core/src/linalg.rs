use crate::GeomError;
use cqe_numerics::Real;

/// Determinant by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn det<T: Real>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut d = T::one();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[piv][col] == T::zero() {
            return T::zero();
        }
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        d = d * a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let t = a[col][c];
                a[r][c] = a[r][c] - f * t;
            }
        }
    }
    d
}

/// Unit null vector of an (n-1) x n matrix of full row rank, by Gaussian
/// elimination with full pivoting. Rank deficiency is declared when a pivot
/// falls below `rel_eps` times the largest entry.
#[allow(clippy::needless_range_loop)]
pub fn null_vector<T: Real>(m: &[Vec<T>], rel_eps: f64) -> Result<Vec<T>, GeomError> {
    let rows = m.len();
    let cols = rows + 1;
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut perm: Vec<usize> = (0..cols).collect();
    let scale = a.iter().flatten().fold(T::zero(), |acc, x| acc.max(x.abs()));
    if scale == T::zero() {
        return Err(GeomError::RankDeficient);
    }
    for k in 0..rows {
        let (mut pr, mut pc, mut best) = (k, k, T::zero());
        for (r, row) in a.iter().enumerate().skip(k) {
            for (c, x) in row.iter().enumerate().skip(k) {
                if x.abs() > best {
                    (pr, pc, best) = (r, c, x.abs());
                }
            }
        }
        if best <= T::lit(rel_eps) * scale {
            return Err(GeomError::RankDeficient);
        }
        a.swap(k, pr);
        for row in a.iter_mut() {
            row.swap(k, pc);
        }
        perm.swap(k, pc);
        for r in 0..rows {
            if r != k {
                let f = a[r][k] / a[k][k];
                for c in k..cols {
                    let t = a[k][c];
                    a[r][c] = a[r][c] - f * t;
                }
            }
        }
    }
    // Reduced form: x_k = -a[k][last]/a[k][k] * x_last with x_last = 1.
    let mut x = vec![T::zero(); cols];
    x[perm[rows]] = T::one();
    for k in 0..rows {
        x[perm[k]] = -a[k][rows] / a[k][k];
    }
    let norm = x.iter().fold(T::zero(), |acc, v| acc + *v * *v).sqrt();
    Ok(x.into_iter().map(|v| v / norm).collect())
}
