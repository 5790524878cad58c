use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix};
use crate::lie::catalog::{gl_label, sp_pairs, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupType {
    /// `GL_n`
    GL(usize),
    /// `Sp_2n`
    Sp(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub label: String,
    /// Coordinates in the standard basis `eps_1..eps_r` of the character lattice.
    pub weight: Vec<i64>,
    /// Coordinate of the root vector in the catalog algebra.
    pub coordinate: usize,
}

/// Positive roots of a split group with respect to the upper triangular Borel,
/// matched to the coordinates of the catalog algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub group: GroupType,
    pub roots: Vec<Root>,
    /// Indices into `roots`.
    pub simple_roots: Vec<usize>,
    /// Indices into `simple_roots` defining the standard parabolic; empty for the Borel.
    pub parabolic_j: Vec<usize>,
}

impl RootDatum {
    pub fn gl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize { value: n, min: 2 });
        }
        let mut roots = Vec::new();
        let mut simple = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let mut w = vec![0; n];
                w[i - 1] = 1;
                w[j - 1] = -1;
                if j == i + 1 {
                    simple.push(roots.len());
                }
                roots.push(Root { label: gl_label(i, j), weight: w, coordinate: roots.len() });
            }
        }
        Ok(RootDatum { group: GroupType::GL(n), roots, simple_roots: simple, parabolic_j: Vec::new() })
    }

    /// Roots of `Sp_2n`: the coordinate `e_i,j` carries `h_i - h_j` with
    /// `h_m = eps_m` for `m <= n` and `h_m = -eps_{2n+1-m}` otherwise.
    pub fn sp(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize { value: n, min: 2 });
        }
        let h = |m: usize| -> Vec<i64> {
            let mut v = vec![0; n];
            if m <= n {
                v[m - 1] = 1;
            } else {
                v[2 * n - m] = -1;
            }
            v
        };
        let mut roots = Vec::new();
        let mut simple = Vec::new();
        for (coord, (i, j)) in sp_pairs(n).into_iter().enumerate() {
            let w: Vec<i64> = h(i).iter().zip(h(j)).map(|(a, b)| a - b).collect();
            if j == i + 1 && i <= n {
                simple.push(coord);
            }
            roots.push(Root { label: gl_label(i, j), weight: w, coordinate: coord });
        }
        Ok(RootDatum { group: GroupType::Sp(n), roots, simple_roots: simple, parabolic_j: Vec::new() })
    }

    pub fn for_family(family: Family) -> Result<Self> {
        match family {
            Family::GlUpper(n) => Self::gl(n),
            Family::Sp(n) => Self::sp(n),
            Family::Heisenberg(_) => Err(Error::UnknownCatalog("no root datum for a Heisenberg algebra".into())),
        }
    }

    pub fn with_parabolic(mut self, j: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = j.iter().find(|&&k| k >= self.simple_roots.len()) {
            return Err(Error::IndexOutOfRange { i: bad, j: bad, dim: self.simple_roots.len() });
        }
        self.parabolic_j = j;
        Ok(self)
    }

    pub fn root_at(&self, coordinate: usize) -> Option<&Root> {
        self.roots.iter().find(|r| r.coordinate == coordinate)
    }

    pub fn is_simple(&self, coordinate: usize) -> bool {
        self.simple_roots.iter().any(|&s| self.roots[s].coordinate == coordinate)
    }

    /// Whether `weight` is orthogonal, for the standard inner product, to every root in `J`.
    pub fn orthogonal_to_j(&self, weight: &[i64]) -> bool {
        self.parabolic_j.iter().all(|&k| {
            let alpha = &self.roots[self.simple_roots[k]].weight;
            alpha.iter().zip(weight).map(|(a, b)| a * b).sum::<i64>() == 0
        })
    }

    /// Whether every positive root is a nonnegative integer combination of the simple
    /// roots (the combination is unique, so solving exactly decides it).
    pub fn simple_roots_generate(&self) -> bool {
        let rank = self.roots.first().map_or(0, |r| r.weight.len());
        let cols: Vec<Vec<_>> = self
            .simple_roots
            .iter()
            .map(|&s| self.roots[s].weight.iter().map(|&x| rat(x)).collect())
            .collect();
        let system = Matrix::from_columns(rank, &cols);
        self.roots.iter().all(|r| {
            let b: Vec<_> = r.weight.iter().map(|&x| rat(x)).collect();
            match system.solve(&b) {
                Ok(Some((x, kernel))) => kernel.is_zero() && x.iter().all(|c| c.is_integer() && *c >= rat(0)),
                _ => false,
            }
        })
    }
}
