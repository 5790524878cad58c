//! Permutation-matrix coset representatives for the mirabolic filtration of `GL_n`.

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix};

/// Matrix with a single 1 in each row `r`, at column `target[r]` (0-based).
fn permutation(target: &[usize]) -> Matrix {
    let n = target.len();
    let mut m = Matrix::zeros(n, n);
    for (r, &c) in target.iter().enumerate() {
        m.set(r, c, rat(1));
    }
    m
}

/// The block matrix of shape `(1, k, 1, n-k-2)`: row 2 moves to column `k + 2`
/// and rows `3..k+2` shift left by one (1-based); the rest is the identity.
pub fn double_coset_rep(n: usize, k: usize) -> Matrix {
    assert!(k <= n - 3);
    let mut target: Vec<usize> = (0..n).collect();
    if k > 0 {
        target[1] = k + 1;
        for r in 2..k + 2 {
            target[r] = r - 1;
        }
    }
    permutation(&target)
}

/// `g_0 = I, g_1, ..., g_{n-3}`: `n - 2` matrices.
pub fn double_coset_reps(n: usize) -> Result<Vec<Matrix>> {
    if n < 4 {
        return Err(Error::InvalidSize { value: n, min: 4 });
    }
    Ok((0..=n - 3).map(|k| double_coset_rep(n, k)).collect())
}

/// The block matrix of shape `(1, 1, l, 1, n-l-3)`: row 3 moves to column `l + 3`
/// and rows `4..l+3` shift left by one (1-based); the rest is the identity.
pub fn inner_coset_rep(n: usize, l: usize) -> Matrix {
    assert!(l <= n - 4);
    let mut target: Vec<usize> = (0..n).collect();
    if l > 0 {
        target[2] = l + 2;
        for r in 3..l + 3 {
            target[r] = r - 1;
        }
    }
    permutation(&target)
}

/// `h_0 = I, h_1, ..., h_{n-4}`: `n - 3` matrices.
pub fn inner_coset_reps(n: usize) -> Result<Vec<Matrix>> {
    if n < 5 {
        return Err(Error::InvalidSize { value: n, min: 5 });
    }
    Ok((0..=n - 4).map(|l| inner_coset_rep(n, l)).collect())
}
