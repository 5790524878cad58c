use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Rational, Subspace};

/// One nonzero bracket `[x_i, x_j] = sum_k c_k x_k`, stored for `i < j`.
pub type BracketEntry = (usize, usize, Vec<(usize, Rational)>);

/// A finite-dimensional nilpotent Lie algebra given by structure constants on a
/// labelled basis. Construction verifies the Jacobi identity on every basis
/// triple and that the lower central series reaches zero.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// Nonzero brackets for `i < j`, sparse.
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    /// Dense cache: `table[i * dim + j] = [x_i, x_j]` for all ordered pairs.
    table: Vec<Vec<Rational>>,
    series: Vec<Subspace>,
    adapted: [Vec<Vec<Rational>>; 2],
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("labels", &self.labels)
            .field("brackets", &self.brackets.len())
            .finish()
    }
}

impl LieAlgebra {
    /// Validated constructor. Entries with `i > j` are accepted and stored with
    /// the sign flipped; repeated `(i, j)` pairs are summed.
    pub fn new(labels: Vec<String>, entries: impl IntoIterator<Item = BracketEntry>) -> Result<Self> {
        let dim = labels.len();
        let mut dense: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for (i, j, out) in entries {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfRange { i, j, dim });
            }
            if i == j {
                if out.iter().all(|(_, c)| c.is_zero()) {
                    continue;
                }
                return Err(Error::Parse(format!("nonzero self-bracket [x_{i}, x_{i}]")));
            }
            let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            let v = dense.entry((a, b)).or_insert_with(|| zero_vec(dim));
            for (k, c) in out {
                if k >= dim {
                    return Err(Error::IndexOutOfRange { i: a, j: k, dim });
                }
                if sign > 0 {
                    v[k] += c;
                } else {
                    v[k] -= c;
                }
            }
        }
        let brackets: BTreeMap<_, _> = dense
            .into_iter()
            .filter(|(_, v)| !is_zero_vec(v))
            .map(|(key, v)| {
                let sparse = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>();
                (key, sparse)
            })
            .collect();
        let mut alg = Self::from_parts(labels, brackets);
        alg.check_jacobi()?;
        alg.series = alg.try_lower_central_series()?;
        alg.adapted = [alg.compute_adapted_basis(false), alg.compute_adapted_basis(true)];
        Ok(alg)
    }

    fn from_parts(labels: Vec<String>, brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>) -> Self {
        let dim = labels.len();
        let mut table = vec![zero_vec(dim); dim * dim];
        for (&(i, j), out) in &brackets {
            for (k, c) in out {
                table[i * dim + j][*k] = c.clone();
                table[j * dim + i][*k] = -c.clone();
            }
        }
        LieAlgebra { labels, brackets, table, series: Vec::new(), adapted: [Vec::new(), Vec::new()] }
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        Self::new(labels, Vec::new()).expect("abelian tables are valid")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Nonzero structure constants for `i < j`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[x_i, x_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut out = zero_vec(n);
        for (&(i, j), entries) in &self.brackets {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (k, s) in entries {
                out[*k] += &c * s;
            }
        }
        out
    }

    /// Matrix of `ad x` acting on column vectors: column `j` is `[x, x_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut cols = vec![zero_vec(n); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, col) in cols.iter_mut().enumerate() {
                axpy(col, xi, self.bracket_basis(i, j));
            }
        }
        Matrix::from_columns(n, &cols)
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let n = self.dim();
        let mut vectors = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                let w = self.bracket(u, v);
                if !is_zero_vec(&w) {
                    vectors.push(w);
                }
            }
        }
        Subspace::span(n, vectors)
    }

    /// `N_1 = n, N_{k+1} = [N_k, n]`, ending with the zero subspace.
    pub fn lower_central_series(&self) -> &[Subspace] {
        &self.series
    }

    fn try_lower_central_series(&self) -> Result<Vec<Subspace>> {
        let n = self.dim();
        let full = Subspace::full(n);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_zero() {
                return Ok(series);
            }
            let next = self.bracket_subspaces(last, &full);
            if next.dim() == last.dim() {
                return Err(Error::NotNilpotent);
            }
            series.push(next);
        }
    }

    /// Smallest `c` with `N_{c+1} = 0`.
    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x is central iff [x, x_j] = 0 for all j: stack the maps x -> [x, x_j].
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.bracket_basis(i, j)[k].clone()).collect());
            }
        }
        Matrix::from_rows(n, rows).expect("square").kernel()
    }

    /// Errors with `NotAnIdeal` unless `[n, s] ⊆ s`.
    pub fn check_ideal(&self, s: &Subspace) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let x = unit_vec(n, i);
            for (j, b) in s.basis().iter().enumerate() {
                if !s.contains(&self.bracket(&x, b)) {
                    return Err(Error::NotAnIdeal { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.check_ideal(s).is_ok()
    }

    /// Errors with `NotClosed(i, j)` (indices into the echelon basis of `s`) unless
    /// `s` is closed under the bracket.
    pub fn check_subalgebra(&self, s: &Subspace) -> Result<()> {
        let basis = s.basis();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                if !s.contains(&self.bracket(&basis[i], &basis[j])) {
                    return Err(Error::NotClosed { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.check_subalgebra(s).is_ok()
    }

    /// Span of the listed coordinates, certified closed. `NotClosed` reports the
    /// offending pair as algebra indices.
    pub fn subalgebra_from_pattern(&self, coords: &[usize]) -> Result<Subspace> {
        let n = self.dim();
        for &c in coords {
            if c >= n {
                return Err(Error::IndexOutOfRange { i: c, j: c, dim: n });
            }
        }
        let s = Subspace::coordinate(n, coords.iter().copied());
        for (a, &i) in coords.iter().enumerate() {
            for &j in &coords[a + 1..] {
                if !s.contains(self.bracket_basis(i, j)) {
                    return Err(Error::NotClosed { i: i.min(j), j: i.max(j) });
                }
            }
        }
        Ok(s)
    }

    /// Same as [`subalgebra_from_pattern`](Self::subalgebra_from_pattern), by label.
    pub fn subalgebra_from_labels(&self, labels: &[&str]) -> Result<Subspace> {
        let coords = labels.iter().map(|l| self.label_index(l)).collect::<Result<Vec<_>>>()?;
        self.subalgebra_from_pattern(&coords)
    }

    /// Quotient by an ideal. The quotient basis is the set of coordinates that are
    /// not pivots of the ideal, keeping their labels; the returned matrix is the
    /// projection `n -> n / ideal` in those coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix)> {
        let n = self.dim();
        if ideal.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: ideal.ambient_dim() });
        }
        self.check_ideal(ideal)?;
        let keep = ideal.complement_indices();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut entries = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                let w = ideal.quotient_coords(self.bracket_basis(i, j));
                let sparse: Vec<(usize, Rational)> =
                    w.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !sparse.is_empty() {
                    entries.push((a, b, sparse));
                }
            }
        }
        let projection = Matrix::from_columns(
            keep.len(),
            &(0..n).map(|j| ideal.quotient_coords(&unit_vec(n, j))).collect::<Vec<_>>(),
        );
        Ok((LieAlgebra::new(labels, entries)?, projection))
    }

    /// A basis `z_1, ..., z_d` adapted to the lower central series, deepest term
    /// first: every prefix spans an ideal and `[n, z_k]` lies in the span of
    /// `z_1, ..., z_{k-1}`. Within a layer, vectors follow the echelon (label) order,
    /// or its reverse when `reverse_layers` is set.
    pub fn adapted_basis(&self, reverse_layers: bool) -> &[Vec<Rational>] {
        &self.adapted[reverse_layers as usize]
    }

    fn compute_adapted_basis(&self, reverse_layers: bool) -> Vec<Vec<Rational>> {
        let series = &self.series;
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        let mut span = Subspace::zero(self.dim());
        for term in series.iter().rev().skip(1) {
            let mut layer = Vec::new();
            for v in term.basis() {
                if !span.contains(v) {
                    span = span.sum(&Subspace::span(self.dim(), vec![v.clone()]));
                    layer.push(v.clone());
                }
            }
            if reverse_layers {
                layer.reverse();
            }
            basis.extend(layer);
        }
        basis
    }

    pub(crate) fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let br = |x: &[Rational], k: usize| -> Vec<Rational> {
            let mut out = zero_vec(n);
            for (i, xi) in x.iter().enumerate() {
                axpy(&mut out, xi, self.bracket_basis(i, k));
            }
            out
        };
        for i in 0..n {
            for j in (i + 1)..n {
                let ij = self.bracket_basis(i, j);
                for k in (j + 1)..n {
                    let mut total = br(ij, k);
                    let jk = br(self.bracket_basis(j, k), i);
                    let ki = br(self.bracket_basis(k, i), j);
                    for (t, (a, b)) in total.iter_mut().zip(jk.iter().zip(&ki)) {
                        *t += a + b;
                    }
                    if !is_zero_vec(&total) {
                        return Err(Error::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

}

/// Labels `x_1, ..., x_n` for ad hoc algebras.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x_{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn heis1() -> LieAlgebra {
        LieAlgebra::new(
            vec!["p".into(), "q".into(), "z".into()],
            vec![(0, 1, vec![(2, rat(1))])],
        )
        .unwrap()
    }

    #[test]
    fn abelian_has_class_one() {
        let a = LieAlgebra::new(default_labels(3), vec![]).unwrap();
        assert_eq!(a.nilpotency_class(), 1);
        let dims: Vec<usize> = a.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 0]);
    }

    #[test]
    fn rejects_non_nilpotent() {
        let err = LieAlgebra::new(default_labels(2), vec![(0, 1, vec![(0, rat(1))])]).unwrap_err();
        assert_eq!(err, Error::NotNilpotent);
    }

    #[test]
    fn rejects_jacobi_violation() {
        // [x1,x2]=x3, [x2,x3]=x4, [x1,x4]=x5: the cyclic sum on (x1,x2,x3) is -x5.
        let bad = vec![
            (0, 1, vec![(2, rat(1))]),
            (1, 2, vec![(3, rat(1))]),
            (0, 3, vec![(4, rat(1))]),
        ];
        assert_eq!(
            LieAlgebra::new(default_labels(5), bad).unwrap_err(),
            Error::JacobiViolation { i: 0, j: 1, k: 2 }
        );
    }

    #[test]
    fn rejects_out_of_range() {
        let err = LieAlgebra::new(default_labels(2), vec![(0, 2, vec![])]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { .. }));
    }

    #[test]
    fn heisenberg_quotient_by_center() {
        let h = heis1();
        let (q, proj) = h.quotient(&h.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
        assert_eq!(proj.rows(), 2);
        assert_eq!(proj.cols(), 3);
    }

    #[test]
    fn quotient_by_full_is_zero() {
        let h = heis1();
        let (q, _) = h.quotient(&Subspace::full(3)).unwrap();
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn quotient_requires_ideal() {
        let h = heis1();
        let s = Subspace::coordinate(3, [0]);
        assert!(matches!(h.quotient(&s), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn antisymmetric_input_is_normalized() {
        let a = LieAlgebra::new(
            vec!["p".into(), "q".into(), "z".into()],
            vec![(1, 0, vec![(2, rat(-1))])],
        )
        .unwrap();
        assert_eq!(a, heis1());
    }

    #[test]
    fn adapted_basis_prefixes_are_ideals() {
        let h = heis1();
        let basis = h.adapted_basis(false);
        assert_eq!(basis[0], unit_vec(3, 2));
        for k in 1..=3 {
            let s = Subspace::span(3, basis[..k].to_vec());
            assert!(h.is_ideal(&s));
        }
    }
}
