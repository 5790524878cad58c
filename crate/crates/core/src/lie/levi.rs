use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{is_zero_vec, rat, unit_vec, zero_vec, Matrix, Rational, Subspace};
use crate::lie::LieAlgebra;

/// A Lie algebra `m` acting on `n` by derivations.
///
/// Direction `k` of `m` acts through the matrix `action[k]` (on column
/// coordinate vectors of `n`). When `torus_rank > 0`, the first `torus_rank`
/// directions span a split torus acting diagonally on the coordinate basis,
/// with integer weights recorded per coordinate of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviAction {
    labels: Vec<String>,
    action: Vec<Matrix>,
    /// `brackets[a * m + b]` = coordinates of `[X_a, X_b]` in `m`.
    brackets: Vec<Vec<Rational>>,
    torus_rank: usize,
    weights: Vec<Vec<i64>>,
    realization: Option<Vec<Matrix>>,
}

impl LeviAction {
    /// Validated constructor: every action matrix is a derivation, the bracket
    /// table satisfies Jacobi and the action is a representation.
    pub fn new(
        alg: &LieAlgebra,
        labels: Vec<String>,
        action: Vec<Matrix>,
        brackets: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let m = labels.len();
        let n = alg.dim();
        if action.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: action.len() });
        }
        if brackets.len() != m * m {
            return Err(Error::DimensionMismatch { expected: m * m, found: brackets.len() });
        }
        for a in &action {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: a.rows() });
            }
        }
        let levi = LeviAction { labels, action, brackets, torus_rank: 0, weights: Vec::new(), realization: None };
        levi.check_derivations(alg)?;
        levi.check_bracket_table()?;
        levi.check_representation()?;
        Ok(levi)
    }

    /// Builds the action from a faithful matrix realization `realization[k]` of each
    /// Levi direction together with its action on `n`; the Levi bracket table is
    /// read off from commutators of the realization.
    pub fn from_realization(
        alg: &LieAlgebra,
        labels: Vec<String>,
        realization: Vec<Matrix>,
        action: Vec<Matrix>,
    ) -> Result<Self> {
        let m = realization.len();
        if labels.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: labels.len() });
        }
        let flat = |a: &Matrix| -> Vec<Rational> { a.to_rows().into_iter().flatten().collect() };
        let size = realization.first().map_or(0, |r| r.rows() * r.cols());
        let system = Matrix::from_columns(size, &realization.iter().map(flat).collect::<Vec<_>>());
        if system.rank() != m {
            return Err(Error::Parse("Levi realization is linearly dependent".into()));
        }
        let mut brackets = Vec::with_capacity(m * m);
        for a in &realization {
            for b in &realization {
                match system.solve(&flat(&a.commutator(b)))? {
                    Some((x, _)) => brackets.push(x),
                    None => return Err(Error::Parse("Levi realization is not closed under commutators".into())),
                }
            }
        }
        Ok(Self::new(alg, labels, action, brackets)?.with_realization(realization))
    }

    /// The zero-dimensional Levi.
    pub fn trivial() -> Self {
        LeviAction {
            labels: Vec::new(),
            action: Vec::new(),
            brackets: Vec::new(),
            torus_rank: 0,
            weights: Vec::new(),
            realization: None,
        }
    }

    /// Attaches torus weights: the first `weights[i].len()` directions must act on
    /// coordinate `i` of `n` by the scalar `weights[i][k]`.
    pub fn with_torus(mut self, weights: Vec<Vec<i64>>) -> Result<Self> {
        let rank = weights.first().map_or(0, |w| w.len());
        if rank > self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: rank });
        }
        for (i, w) in weights.iter().enumerate() {
            if w.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: w.len() });
            }
            for (k, &wk) in w.iter().enumerate() {
                let a = &self.action[k];
                if a.rows() != weights.len() {
                    return Err(Error::DimensionMismatch { expected: a.rows(), found: weights.len() });
                }
                let mut expected = zero_vec(a.rows());
                expected[i] = rat(wk);
                if a.column(i) != expected {
                    return Err(Error::Parse(format!(
                        "torus direction {k} does not act on coordinate {i} with weight {wk}"
                    )));
                }
            }
        }
        for a in 0..rank {
            for b in 0..rank {
                if !is_zero_vec(&self.brackets[a * self.dim() + b]) {
                    return Err(Error::Parse("torus directions do not commute".into()));
                }
            }
        }
        self.torus_rank = rank;
        self.weights = weights;
        Ok(self)
    }

    /// Records the Levi basis as explicit matrices (used for diagonal patterns).
    pub fn with_realization(mut self, mats: Vec<Matrix>) -> Self {
        assert_eq!(mats.len(), self.dim());
        self.realization = Some(mats);
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    /// Torus weight of each coordinate of `n` (empty when there is no torus).
    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn realization(&self) -> Option<&[Matrix]> {
        self.realization.as_deref()
    }

    /// `ad X` on `n` for a Levi element given in Levi coordinates.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.dim());
        let n = self.action.first().map_or(0, Matrix::rows);
        let mut out = Matrix::zeros(n, n);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&a.scale(c));
            }
        }
        out
    }

    /// Bracket in the Levi algebra.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let m = self.dim();
        let mut out = zero_vec(m);
        for a in 0..m {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..m {
                let c = &x[a] * &y[b];
                if c.is_zero() {
                    continue;
                }
                for (k, s) in self.brackets[a * m + b].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &c * s;
                    }
                }
            }
        }
        out
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis();
        basis.iter().enumerate().all(|(i, u)| {
            basis[i + 1..].iter().all(|v| s.contains(&self.bracket(u, v)))
        })
    }

    /// Levi elements acting by zero on `n`.
    pub fn kernel_of_action(&self) -> Subspace {
        let m = self.dim();
        if m == 0 {
            return Subspace::zero(0);
        }
        let n = self.action[0].rows();
        let mut rows = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                rows.push((0..m).map(|k| self.action[k].get(r, c).clone()).collect());
            }
        }
        Matrix::from_rows(m, rows).expect("shape").kernel()
    }

    /// Subspace of the Levi spanned by explicit matrices, using the recorded realization.
    pub fn subspace_from_matrices(&self, mats: &[Matrix]) -> Result<Subspace> {
        let real = self.realization.as_ref().ok_or(Error::MissingTorusWeights)?;
        let m = self.dim();
        let mut vectors = Vec::new();
        for target in mats {
            let size = target.rows() * target.cols();
            let cols: Vec<Vec<Rational>> = real
                .iter()
                .map(|r| r.to_rows().into_iter().flatten().collect())
                .collect();
            let system = Matrix::from_columns(size, &cols);
            let rhs: Vec<Rational> = target.to_rows().into_iter().flatten().collect();
            match system.solve(&rhs)? {
                Some((x, _)) => vectors.push(x),
                None => return Err(Error::Parse("matrix is not in the Levi".into())),
            }
        }
        Ok(Subspace::span(m, vectors))
    }

    /// Subspace of diagonal Levi elements described by a pattern such as
    /// `["x", "y", "y", "x"]` or `["0", "x2", "-x2", "0"]`: each variable
    /// contributes the diagonal matrix with `±1` where it appears.
    pub fn diagonal_pattern(&self, pattern: &[&str]) -> Result<Subspace> {
        let size = pattern.len();
        let mut vars: Vec<String> = Vec::new();
        for p in pattern {
            let name = p.trim().trim_start_matches('-');
            if name != "0" && !vars.iter().any(|v| v == name) {
                vars.push(name.to_string());
            }
        }
        let mats: Vec<Matrix> = vars
            .iter()
            .map(|v| {
                let mut d = Matrix::zeros(size, size);
                for (i, p) in pattern.iter().enumerate() {
                    let p = p.trim();
                    if p.trim_start_matches('-') == v {
                        d.set(i, i, if p.starts_with('-') { rat(-1) } else { rat(1) });
                    }
                }
                d
            })
            .collect();
        self.subspace_from_matrices(&mats)
    }

    fn check_derivations(&self, alg: &LieAlgebra) -> Result<()> {
        let n = alg.dim();
        for (k, d) in self.action.iter().enumerate() {
            for i in 0..n {
                let di = d.column(i);
                for j in (i + 1)..n {
                    let dj = d.column(j);
                    let lhs = d.mul_vec(alg.bracket_basis(i, j));
                    let rhs: Vec<Rational> = alg
                        .bracket(&di, &unit_vec(n, j))
                        .into_iter()
                        .zip(alg.bracket(&unit_vec(n, i), &dj))
                        .map(|(a, b)| a + b)
                        .collect();
                    if lhs != rhs {
                        return Err(Error::NotADerivation { k, i, j });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_bracket_table(&self) -> Result<()> {
        let m = self.dim();
        for a in 0..m {
            for b in 0..m {
                let ab = &self.brackets[a * m + b];
                let ba = &self.brackets[b * m + a];
                if ab.len() != m || ab.iter().zip(ba).any(|(x, y)| x != &-y.clone()) {
                    return Err(Error::Parse(format!("Levi bracket table not antisymmetric at ({a}, {b})")));
                }
            }
        }
        for a in 0..m {
            for b in (a + 1)..m {
                for c in (b + 1)..m {
                    let (ea, eb, ec) = (unit_vec(m, a), unit_vec(m, b), unit_vec(m, c));
                    let t1 = self.bracket(&self.bracket(&ea, &eb), &ec);
                    let t2 = self.bracket(&self.bracket(&eb, &ec), &ea);
                    let t3 = self.bracket(&self.bracket(&ec, &ea), &eb);
                    let sum: Vec<Rational> = t1.iter().zip(&t2).zip(&t3).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vec(&sum) {
                        return Err(Error::JacobiViolation { i: a, j: b, k: c });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_representation(&self) -> Result<()> {
        let m = self.dim();
        for a in 0..m {
            for b in (a + 1)..m {
                let lhs = self.action[a].commutator(&self.action[b]);
                let rhs = self.act(&self.brackets[a * m + b]);
                if lhs != rhs {
                    return Err(Error::NotARepresentation { a, b });
                }
            }
        }
        Ok(())
    }
}
