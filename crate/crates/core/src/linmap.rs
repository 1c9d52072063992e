//! Sparse linear maps between tensor words: the morphisms every diagram is built from.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::space::Space;

type Column<K> = Vec<(usize, K)>;

/// A linear map `domain → codomain`, stored column by column.
///
/// Column `j` lists the nonzero coefficients of the image of basis vector `j`,
/// sorted by row. Zero coefficients are never stored, so two maps are equal
/// exactly when their shapes and stored columns agree.
#[derive(Clone, Debug)]
pub struct LinMap<K> {
    domain: Space,
    codomain: Space,
    cols: Vec<Column<K>>,
}

/// The first entry where two maps of equal shape disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference<K> {
    pub row: usize,
    pub col: usize,
    pub lhs: K,
    pub rhs: K,
}

fn normalize<K: Field>(mut col: Column<K>) -> Column<K> {
    if col.len() <= 1 {
        col.retain(|(_, v)| !v.is_zero());
        return col;
    }
    col.sort_by_key(|&(r, _)| r);
    let mut out: Column<K> = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = lv.clone() + v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl<K: Field> LinMap<K> {
    pub fn zero(domain: Space, codomain: Space) -> Self {
        let cols = vec![Vec::new(); domain.dim()];
        LinMap {
            domain,
            codomain,
            cols,
        }
    }

    pub fn identity(space: &Space) -> Self {
        let cols = (0..space.dim()).map(|i| vec![(i, K::one())]).collect();
        LinMap {
            domain: space.clone(),
            codomain: space.clone(),
            cols,
        }
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(
        domain: Space,
        codomain: Space,
        triplets: impl IntoIterator<Item = (usize, usize, K)>,
    ) -> Result<Self> {
        let (rows, ncols) = (codomain.dim(), domain.dim());
        let mut cols: Vec<Column<K>> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            if r >= rows || c >= ncols {
                return Err(Error::OutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols: ncols,
                });
            }
            cols[c].push((r, v));
        }
        let cols = cols.into_iter().map(normalize).collect();
        Ok(LinMap {
            domain,
            codomain,
            cols,
        })
    }

    /// Builds a map from the image of each basis vector of the domain.
    pub fn from_basis_images(
        domain: Space,
        codomain: Space,
        mut image: impl FnMut(usize) -> Vec<(usize, K)>,
    ) -> Result<Self> {
        let n = domain.dim();
        Self::from_triplets(
            domain,
            codomain,
            (0..n).flat_map(|c| image(c).into_iter().map(move |(r, v)| (r, c, v))),
        )
    }

    /// Builds a map from a dense row-major matrix.
    pub fn from_dense(domain: Space, codomain: Space, rows: &[Vec<K>]) -> Result<Self> {
        if rows.len() != codomain.dim() || rows.iter().any(|r| r.len() != domain.dim()) {
            return Err(Error::ShapeMismatch {
                op: "from_dense",
                left: format!("{}x{}", codomain.dim(), domain.dim()),
                right: format!("{}x{}", rows.len(), rows.first().map_or(0, |r| r.len())),
            });
        }
        Self::from_triplets(
            domain,
            codomain,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))),
        )
    }

    /// The symmetry `σ_{X,Y}: X⊗Y → Y⊗X`, sending basis `(i, j)` to `(j, i)`.
    pub fn symmetry(x: &Space, y: &Space) -> Self {
        let (dx, dy) = (x.dim(), y.dim());
        let cols = (0..dx * dy)
            .map(|c| {
                let (i, j) = (c / dy, c % dy);
                vec![(j * dx + i, K::one())]
            })
            .collect();
        LinMap {
            domain: x.tensor(y),
            codomain: y.tensor(x),
            cols,
        }
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn nrows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn ncols(&self) -> usize {
        self.domain.dim()
    }

    pub fn column(&self, j: usize) -> &[(usize, K)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> K {
        self.cols[col]
            .binary_search_by_key(&row, |&(r, _)| r)
            .map(|i| self.cols[col][i].1.clone())
            .unwrap_or_else(|_| K::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, K)> {
        let mut out: Vec<(usize, usize, K)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|&(r, c, _)| (r, c));
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<K>> {
        let mut rows = vec![vec![K::zero(); self.ncols()]; self.nrows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    /// Applies the map to a sparse vector given as `(index, coefficient)` pairs.
    pub fn apply(&self, v: &[(usize, K)]) -> Vec<(usize, K)> {
        let mut acc = Vec::new();
        for (k, a) in v {
            for (r, b) in &self.cols[*k] {
                acc.push((*r, b.clone() * a.clone()));
            }
        }
        normalize(acc)
    }

    /// `self · f`: apply `f`, then `self`.
    pub fn compose(&self, f: &LinMap<K>) -> Result<LinMap<K>> {
        if !f.codomain.same_shape(&self.domain) {
            return Err(Error::ShapeMismatch {
                op: "compose",
                left: self.domain.to_string(),
                right: f.codomain.to_string(),
            });
        }
        let cols = f.cols.iter().map(|col| self.apply(col)).collect();
        Ok(LinMap {
            domain: f.domain.clone(),
            codomain: self.codomain.clone(),
            cols,
        })
    }

    /// Kronecker product; column `(j₁, j₂)` of the result is `j₁·dim₂ + j₂`.
    pub fn tensor(&self, g: &LinMap<K>) -> LinMap<K> {
        let rows2 = g.nrows();
        let mut cols = Vec::with_capacity(self.ncols() * g.ncols());
        for c1 in &self.cols {
            for c2 in &g.cols {
                let mut col = Vec::with_capacity(c1.len() * c2.len());
                for (r1, a) in c1 {
                    for (r2, b) in c2 {
                        col.push((r1 * rows2 + r2, a.clone() * b.clone()));
                    }
                }
                cols.push(col);
            }
        }
        LinMap {
            domain: self.domain.tensor(&g.domain),
            codomain: self.codomain.tensor(&g.codomain),
            cols,
        }
    }

    fn check_same_shape(&self, other: &LinMap<K>, op: &'static str) -> Result<()> {
        if self.domain.same_shape(&other.domain) && self.codomain.same_shape(&other.codomain) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                op,
                left: format!("{} → {}", self.domain, self.codomain),
                right: format!("{} → {}", other.domain, other.codomain),
            })
        }
    }

    pub fn add(&self, other: &LinMap<K>) -> Result<LinMap<K>> {
        self.check_same_shape(other, "add")?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| normalize(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        Ok(LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            cols,
        })
    }

    pub fn sub(&self, other: &LinMap<K>) -> Result<LinMap<K>> {
        self.add(&other.scale(&-K::one()))
    }

    pub fn scale(&self, s: &K) -> LinMap<K> {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                normalize(
                    col.iter()
                        .map(|(r, v)| (*r, v.clone() * s.clone()))
                        .collect(),
                )
            })
            .collect();
        LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            cols,
        }
    }

    pub fn transpose(&self) -> LinMap<K> {
        let mut cols: Vec<Column<K>> = vec![Vec::new(); self.nrows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        LinMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            cols,
        }
    }

    /// Reinterprets the map between spaces of the same total dimensions.
    pub fn reshaped(&self, domain: Space, codomain: Space) -> Result<LinMap<K>> {
        if domain.dim() != self.domain.dim() || codomain.dim() != self.codomain.dim() {
            return Err(Error::ShapeMismatch {
                op: "reshape",
                left: format!("{} → {}", self.domain, self.codomain),
                right: format!("{domain} → {codomain}"),
            });
        }
        Ok(LinMap {
            domain,
            codomain,
            cols: self.cols.clone(),
        })
    }

    /// Replaces one entry, dropping it when the new value is zero.
    pub fn with_entry(&self, row: usize, col: usize, value: K) -> Result<LinMap<K>> {
        if row >= self.nrows() || col >= self.ncols() {
            return Err(Error::OutOfBounds {
                row,
                col,
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        let mut out = self.clone();
        let column = &mut out.cols[col];
        column.retain(|(r, _)| *r != row);
        column.push((row, value));
        out.cols[col] = normalize(std::mem::take(&mut out.cols[col]));
        Ok(out)
    }

    /// First disagreeing entry, scanning domain basis vectors in order and rows
    /// within a column. `None` when the maps are equal.
    pub fn first_difference(&self, other: &LinMap<K>) -> Result<Option<Difference<K>>> {
        self.check_same_shape(other, "compare")?;
        for (c, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let (mut i, mut j) = (0, 0);
            loop {
                let ra = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                let rb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                let row = ra.min(rb);
                let lhs = if ra == row { a[i].1.clone() } else { K::zero() };
                let rhs = if rb == row { b[j].1.clone() } else { K::zero() };
                if lhs != rhs {
                    return Ok(Some(Difference {
                        row,
                        col: c,
                        lhs,
                        rhs,
                    }));
                }
                if ra == row {
                    i += 1;
                }
                if rb == row {
                    j += 1;
                }
            }
        }
        Ok(None)
    }
}

impl<K: Field> PartialEq for LinMap<K> {
    fn eq(&self, other: &Self) -> bool {
        self.domain.same_shape(&other.domain)
            && self.codomain.same_shape(&other.codomain)
            && self.cols == other.cols
    }
}

impl<K: Field> Eq for LinMap<K> {}

impl<K: Field> fmt::Display for LinMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} → {}", self.domain, self.codomain)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `g · f`.
pub fn compose<K: Field>(g: &LinMap<K>, f: &LinMap<K>) -> Result<LinMap<K>> {
    g.compose(f)
}

/// Composite written in diagram order: `chain(&[a, b, c]) = a · b · c`, so `c` acts first.
pub fn chain<K: Field>(maps: &[&LinMap<K>]) -> Result<LinMap<K>> {
    let (last, rest) = maps.split_last().expect("chain of at least one map");
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, g| g.compose(&acc))
}

pub fn tensor<K: Field>(f: &LinMap<K>, g: &LinMap<K>) -> LinMap<K> {
    f.tensor(g)
}

/// `f₁ ⊗ f₂ ⊗ … ⊗ fₙ`.
pub fn tensor_all<K: Field>(maps: &[&LinMap<K>]) -> LinMap<K> {
    let (first, rest) = maps.split_first().expect("tensor of at least one map");
    rest.iter().fold((*first).clone(), |acc, g| acc.tensor(g))
}

pub fn symmetry<K: Field>(x: &Space, y: &Space) -> LinMap<K> {
    LinMap::symmetry(x, y)
}
