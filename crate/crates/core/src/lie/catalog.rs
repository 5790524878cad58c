//! Standard nilpotent algebras with their Levi actions: the strictly upper
//! triangular matrices (unipotent radical of the GL Borel), the unipotent radical
//! of the Sp Borel in the anti-diagonal form, and Heisenberg algebras.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix, Rational};
use crate::lie::{BracketEntry, LeviAction, LieAlgebra};

/// Which family a catalog entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GlUpper(usize),
    Sp(usize),
    Heisenberg(usize),
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::GlUpper(n) => format!("gl_upper:{n}"),
            Family::Sp(n) => format!("sp:{n}"),
            Family::Heisenberg(m) => format!("heis:{m}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    pub algebra: LieAlgebra,
    pub levi: LeviAction,
}

/// Resolves names such as `gl_upper:4`, `sp:3` or `heis:2`.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    let (family, size) = name.trim().split_once(':').ok_or_else(unknown)?;
    let size: usize = size.trim().parse().map_err(|_| unknown())?;
    let (family, (algebra, levi)) = match family.trim() {
        "gl_upper" | "gl" => (Family::GlUpper(size), gl_upper(size)?),
        "sp" => (Family::Sp(size), sp_unipotent(size)?),
        "heis" | "heisenberg" => (Family::Heisenberg(size), heisenberg_torus(size)?),
        _ => return Err(unknown()),
    };
    Ok(CatalogEntry { family, algebra, levi })
}

pub fn gl_label(i: usize, j: usize) -> String {
    format!("e_{i},{j}")
}

fn unit_matrix(size: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(size, size);
    m.set(i, j, rat(1));
    m
}

/// Algebra spanned by `basis` (closed under commutators), with `coords` reading
/// a matrix in the span back into basis coordinates.
fn matrix_algebra(
    labels: Vec<String>,
    basis: &[Matrix],
    coords: &dyn Fn(&Matrix) -> Vec<Rational>,
) -> Result<LieAlgebra> {
    let mut entries: Vec<BracketEntry> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let out: Vec<(usize, Rational)> = coords(&basis[i].commutator(&basis[j]))
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !out.is_empty() {
                entries.push((i, j, out));
            }
        }
    }
    LieAlgebra::new(labels, entries)
}

/// `ad R` on the algebra for every realization matrix `R`.
fn matrix_action(basis: &[Matrix], levi: &[Matrix], coords: &dyn Fn(&Matrix) -> Vec<Rational>) -> Vec<Matrix> {
    levi.iter()
        .map(|r| {
            let cols: Vec<Vec<Rational>> = basis.iter().map(|b| coords(&r.commutator(b))).collect();
            Matrix::from_columns(basis.len(), &cols)
        })
        .collect()
}

/// Integer weights read off the diagonal of the first `rank` action matrices.
fn diagonal_weights(action: &[Matrix], rank: usize) -> Vec<Vec<i64>> {
    let n = action.first().map_or(0, Matrix::rows);
    (0..n)
        .map(|i| {
            (0..rank)
                .map(|k| action[k].get(i, i).to_integer().to_i64().expect("small weight"))
                .collect()
        })
        .collect()
}

fn gl_parts(n: usize) -> Result<(Vec<String>, Vec<(usize, usize)>, Vec<Matrix>)> {
    if n < 2 {
        return Err(Error::InvalidSize { value: n, min: 2 });
    }
    let mut labels = Vec::new();
    let mut pairs = Vec::new();
    let mut basis = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            labels.push(gl_label(i, j));
            pairs.push((i, j));
            basis.push(unit_matrix(n, i - 1, j - 1));
        }
    }
    Ok((labels, pairs, basis))
}

fn diagonal_torus(n: usize) -> (Vec<String>, Vec<Matrix>) {
    let labels = (1..=n).map(|k| format!("E_{k},{k}")).collect();
    let mats = (0..n).map(|k| unit_matrix(n, k, k)).collect();
    (labels, mats)
}

/// Strictly upper triangular `n x n` matrices with basis `e_i,j` (`i < j`,
/// lexicographic) and the diagonal torus `E_k,k` acting by commutator.
pub fn gl_upper(n: usize) -> Result<(LieAlgebra, LeviAction)> {
    gl_upper_with(n, &[])
}

/// As [`gl_upper`], with the Levi enlarged by `ad E_i,j` for each listed pair
/// `(i, j)` with `i < j` (1-based), added after the torus.
pub fn gl_upper_with(n: usize, extra: &[(usize, usize)]) -> Result<(LieAlgebra, LeviAction)> {
    let (labels, pairs, basis) = gl_parts(n)?;
    let coords = |m: &Matrix| pairs.iter().map(|&(i, j)| m.get(i - 1, j - 1).clone()).collect();
    let alg = matrix_algebra(labels, &basis, &coords)?;
    let (mut levi_labels, mut real) = diagonal_torus(n);
    for &(i, j) in extra {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::IndexOutOfRange { i, j, dim: n });
        }
        levi_labels.push(format!("E_{i},{j}"));
        real.push(unit_matrix(n, i - 1, j - 1));
    }
    let action = matrix_action(&basis, &real, &coords);
    let weights = diagonal_weights(&action, n);
    let levi = LeviAction::from_realization(&alg, levi_labels, real, action)?.with_torus(weights)?;
    Ok((alg, levi))
}

/// Sign `s_i` of the anti-diagonal form `J = [[0, D], [-D, 0]]` on `2n` indices.
fn sp_sign(n: usize, i: usize) -> i64 {
    if i <= n {
        1
    } else {
        -1
    }
}

/// The form `J = [[0, D], [-D, 0]]` with `D` the `n x n` anti-diagonal matrix of ones.
pub fn sp_form(n: usize) -> Matrix {
    let size = 2 * n;
    Matrix::from_fn(size, size, |r, c| {
        if r + c + 1 == size {
            rat(sp_sign(n, r + 1))
        } else {
            rat(0)
        }
    })
}

/// Index pairs `(i, j)`, 1-based with `i < j` and `i + j <= 2n + 1`, labelling the
/// coordinates of the Sp unipotent radical by matrix entries.
pub fn sp_pairs(n: usize) -> Vec<(usize, usize)> {
    let size = 2 * n;
    let mut out = Vec::new();
    for i in 1..=size {
        for j in (i + 1)..=size {
            if i + j <= size + 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Basis matrices `X_i,j = E_i,j - s_i s_j E_j',i'` (`m' = 2n + 1 - m`), or `E_i,j`
/// itself on the anti-diagonal, each satisfying `A^T J + J A = 0`.
pub fn sp_basis_matrices(n: usize) -> Vec<Matrix> {
    let size = 2 * n;
    sp_pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let mut m = unit_matrix(size, i - 1, j - 1);
            if i + j < size + 1 {
                let (ip, jp) = (size + 1 - i, size + 1 - j);
                m.set(jp - 1, ip - 1, rat(-sp_sign(n, i) * sp_sign(n, j)));
            }
            m
        })
        .collect()
}

/// Unipotent radical of the Borel of `Sp_2n` for the anti-diagonal form, dimension
/// `n^2`, with the torus `H_k = E_k,k - E_k',k'` acting by commutator.
pub fn sp_unipotent(n: usize) -> Result<(LieAlgebra, LeviAction)> {
    if n < 2 {
        return Err(Error::InvalidSize { value: n, min: 2 });
    }
    let size = 2 * n;
    let pairs = sp_pairs(n);
    let labels = pairs.iter().map(|&(i, j)| gl_label(i, j)).collect();
    let basis = sp_basis_matrices(n);
    let coords = |m: &Matrix| pairs.iter().map(|&(i, j)| m.get(i - 1, j - 1).clone()).collect();
    let alg = matrix_algebra(labels, &basis, &coords)?;
    let levi_labels = (1..=n).map(|k| format!("H_{k}")).collect();
    let real: Vec<Matrix> = (1..=n)
        .map(|k| {
            let mut m = unit_matrix(size, k - 1, k - 1);
            m.set(size - k, size - k, rat(-1));
            m
        })
        .collect();
    let action = matrix_action(&basis, &real, &coords);
    let weights = diagonal_weights(&action, n);
    let levi = LeviAction::from_realization(&alg, levi_labels, real, action)?.with_torus(weights)?;
    Ok((alg, levi))
}

/// Labels `p_1..p_m, q_1..q_m, z`.
pub fn heisenberg_labels(m: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=m).map(|i| format!("p_{i}")).collect();
    labels.extend((1..=m).map(|i| format!("q_{i}")));
    labels.push("z".into());
    labels
}

/// Heisenberg algebra of dimension `2m + 1`: `[p_i, q_i] = z`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m < 1 {
        return Err(Error::InvalidSize { value: m, min: 1 });
    }
    let entries = (0..m).map(|i| (i, m + i, vec![(2 * m, rat(1))]));
    LieAlgebra::new(heisenberg_labels(m), entries)
}

/// Heisenberg algebra with the rank `m + 1` torus: `a_i` scales `p_i` by 1 and
/// `q_i` by -1; `c` scales every `p_i` and `z` by 1.
pub fn heisenberg_torus(m: usize) -> Result<(LieAlgebra, LeviAction)> {
    let alg = heisenberg(m)?;
    let dim = 2 * m + 1;
    let mut weights = vec![vec![0i64; m + 1]; dim];
    for i in 0..m {
        weights[i][i] = 1;
        weights[m + i][i] = -1;
        weights[i][m] = 1;
    }
    weights[2 * m][m] = 1;
    let action: Vec<Matrix> = (0..=m)
        .map(|k| Matrix::from_fn(dim, dim, |r, c| if r == c { rat(weights[r][k]) } else { rat(0) }))
        .collect();
    let mut labels: Vec<String> = (1..=m).map(|i| format!("a_{i}")).collect();
    labels.push("c".into());
    let levi = LeviAction::from_realization(&alg, labels, action.clone(), action)?.with_torus(weights)?;
    Ok((alg, levi))
}

/// Heisenberg algebra of dimension 3 with `sl_2` acting on `span(p_1, q_1)`:
/// `X` sends `p_1` to `q_1`, `Y` sends `q_1` to `p_1`, `H = diag(1, -1, 0)`.
pub fn heisenberg_sl2() -> Result<(LieAlgebra, LeviAction)> {
    let alg = heisenberg(1)?;
    let x = Matrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    let y = Matrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let h = Matrix::from_i64_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
    let mats = vec![x, y, h];
    let levi = LeviAction::from_realization(&alg, vec!["X".into(), "Y".into(), "H".into()], mats.clone(), mats)?;
    Ok((alg, levi))
}

/// Coordinates `e_1,n` and every `e_i,j` with `i >= 2`.
pub fn gl_stable_polarization_labels(n: usize) -> Vec<String> {
    let mut out = vec![gl_label(1, n)];
    for i in 2..=n {
        for j in (i + 1)..=n {
            out.push(gl_label(i, j));
        }
    }
    out
}

/// Every Sp coordinate except `e_1,j` for `2 <= j <= n`.
pub fn sp_stable_polarization_labels(n: usize) -> Vec<String> {
    sp_pairs(n)
        .into_iter()
        .filter(|&(i, j)| !(i == 1 && (2..=n).contains(&j)))
        .map(|(i, j)| gl_label(i, j))
        .collect()
}
