//! Exact elimination: rank, inverses, linear solves, subspaces, equalizers and quotients.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linmap::LinMap;
use crate::space::Space;

/// Row-reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Pivots are taken at the first column, scanning left to right, that has
/// a nonzero entry at or below the current pivot row.
pub fn rref<K: Field>(rows: &mut Vec<Vec<K>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for v in rows[r].iter_mut().skip(c) {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in c..ncols {
                if rows[r][j].is_zero() {
                    continue;
                }
                let d = rows[r][j].clone() * factor.clone();
                rows[i][j] = rows[i][j].clone() - d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Dense rows of `f`, skipping rows that are identically zero.
fn nonzero_rows<K: Field>(f: &LinMap<K>) -> Vec<Vec<K>> {
    let mut by_row: std::collections::BTreeMap<usize, Vec<K>> = Default::default();
    for (r, c, v) in f.triplets() {
        by_row
            .entry(r)
            .or_insert_with(|| vec![K::zero(); f.ncols()])[c] = v;
    }
    by_row.into_values().collect()
}

pub fn rank<K: Field>(f: &LinMap<K>) -> usize {
    let mut rows = nonzero_rows(f);
    rref(&mut rows).len()
}

/// Basis of `{v : f·v = 0}` as sparse vectors, one per free column of the row echelon form.
pub fn nullspace_vectors<K: Field>(f: &LinMap<K>) -> Vec<Vec<(usize, K)>> {
    let mut rows = nonzero_rows(f);
    let pivots = rref(&mut rows);
    let n = f.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![(free, K::one())];
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v.push((p, -row[free].clone()));
                }
            }
            v.sort_by_key(|e| e.0);
            v
        })
        .collect()
}

/// Two-sided inverse of a square map.
pub fn invert<K: Field>(f: &LinMap<K>) -> Result<LinMap<K>> {
    let n = f.ncols();
    if f.nrows() != n {
        return Err(Error::NotSquare {
            rows: f.nrows(),
            cols: n,
        });
    }
    let mut rows = f.to_dense();
    for (i, row) in rows.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { K::one() } else { K::zero() }));
    }
    let pivots = rref(&mut rows);
    let rank = pivots.iter().filter(|&&p| p < n).count();
    if rank < n {
        return Err(Error::Singular { rank, dim: n });
    }
    LinMap::from_triplets(
        f.codomain().clone(),
        f.domain().clone(),
        rows.iter().enumerate().flat_map(|(r, row)| {
            row[n..]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(c, v)| (r, c, v.clone()))
                .collect::<Vec<_>>()
        }),
    )
}

/// Solves `basis · x = target` for `x`, where `basis` has full column rank.
/// Returns `None` when some column of `target` leaves the column span of `basis`.
pub fn solve<K: Field>(basis: &LinMap<K>, target: &LinMap<K>) -> Result<Option<LinMap<K>>> {
    if basis.nrows() != target.nrows() {
        return Err(Error::ShapeMismatch {
            op: "solve",
            left: basis.codomain().to_string(),
            right: target.codomain().to_string(),
        });
    }
    let k = basis.ncols();
    let t = target.ncols();
    let mut rows: Vec<Vec<K>> = vec![vec![K::zero(); k + t]; basis.nrows()];
    for (r, c, v) in basis.triplets() {
        rows[r][c] = v;
    }
    for (r, c, v) in target.triplets() {
        rows[r][k + c] = v;
    }
    rows.retain(|row| row.iter().any(|v| !v.is_zero()));
    let pivots = rref(&mut rows);
    if pivots.iter().any(|&p| p >= k) {
        return Ok(None);
    }
    if pivots.len() < k {
        return Err(Error::Singular {
            rank: pivots.len(),
            dim: k,
        });
    }
    let x = LinMap::from_triplets(
        target.domain().clone(),
        basis.domain().clone(),
        rows.iter().enumerate().flat_map(|(i, row)| {
            row[k..]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(c, v)| (i, c, v.clone()))
                .collect::<Vec<_>>()
        }),
    )?;
    Ok(Some(x))
}

/// A subspace of a based space, held as a canonical basis.
///
/// The basis columns are in reduced column echelon form: the pivot (first nonzero
/// row) of each column is 1, pivots strictly increase, and every other basis
/// column vanishes on each pivot row. Two subspaces are equal iff their bases are.
#[derive(Clone, Debug)]
pub struct Subspace<K> {
    basis: LinMap<K>,
    pivots: Vec<usize>,
}

impl<K: Field> PartialEq for Subspace<K> {
    fn eq(&self, other: &Self) -> bool {
        self.pivots == other.pivots && self.basis == other.basis
    }
}

impl<K: Field> Eq for Subspace<K> {}

impl<K: Field> Subspace<K> {
    /// Span of arbitrary vectors of `ambient`.
    pub fn span(
        ambient: &Space,
        vectors: impl IntoIterator<Item = Vec<(usize, K)>>,
    ) -> Result<Self> {
        let n = ambient.dim();
        let mut rows = Vec::new();
        for v in vectors {
            let mut row = vec![K::zero(); n];
            for (i, x) in v {
                if i >= n {
                    return Err(Error::OutOfBounds {
                        row: i,
                        col: 0,
                        rows: n,
                        cols: 1,
                    });
                }
                row[i] = row[i].clone() + x;
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
        let pivots = rref(&mut rows);
        let k = pivots.len();
        let labels = pivots.iter().map(|&p| ambient.label(p)).collect();
        let carrier = Space::carrier("span", labels);
        let basis = LinMap::from_triplets(
            carrier,
            ambient.clone(),
            rows.iter().enumerate().flat_map(|(c, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(r, v)| (r, c, v.clone()))
                    .collect::<Vec<_>>()
            }),
        )?;
        debug_assert_eq!(basis.ncols(), k);
        Ok(Subspace { basis, pivots })
    }

    pub fn zero(ambient: &Space) -> Self {
        Self::span(ambient, std::iter::empty()).expect("empty span")
    }

    pub fn full(ambient: &Space) -> Self {
        Self::span(ambient, (0..ambient.dim()).map(|i| vec![(i, K::one())]))
            .expect("standard basis")
    }

    /// Column span of `f` inside its codomain.
    pub fn image(f: &LinMap<K>) -> Self {
        Self::span(f.codomain(), (0..f.ncols()).map(|j| f.column(j).to_vec()))
            .expect("columns lie in the codomain")
    }

    /// `{v : f·v = 0}` inside the domain of `f`.
    pub fn kernel(f: &LinMap<K>) -> Self {
        Self::span(f.domain(), nullspace_vectors(f)).expect("nullspace lies in the domain")
    }

    pub fn ambient(&self) -> &Space {
        self.basis.codomain()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// The inclusion `span → ambient`.
    pub fn basis(&self) -> &LinMap<K> {
        &self.basis
    }

    /// Pivot rows of the echelon basis, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<(usize, K)>> {
        (0..self.dim())
            .map(|j| self.basis.column(j).to_vec())
            .collect()
    }

    /// Reduces `v` against the basis; the residue is zero iff `v` lies in the subspace.
    fn residue(&self, v: &[(usize, K)]) -> Vec<(usize, K)> {
        let mut dense = vec![K::zero(); self.ambient().dim()];
        for (i, x) in v {
            dense[*i] = dense[*i].clone() + x.clone();
        }
        for (j, &p) in self.pivots.iter().enumerate() {
            let coeff = dense[p].clone();
            if coeff.is_zero() {
                continue;
            }
            for (r, b) in self.basis.column(j) {
                dense[*r] = dense[*r].clone() - coeff.clone() * b.clone();
            }
        }
        dense
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    pub fn contains(&self, v: &[(usize, K)]) -> bool {
        self.residue(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Self> {
        Self::span(
            self.ambient(),
            self.vectors().into_iter().chain(other.vectors()),
        )
    }

    /// `{v ∈ self : f·v = 0}`.
    pub fn kernel_within(&self, f: &LinMap<K>) -> Result<Self> {
        let restricted = f.compose(&self.basis)?;
        let coords = nullspace_vectors(&restricted);
        Self::span(self.ambient(), coords.iter().map(|c| self.basis.apply(c)))
    }

    /// Solves `ι · g = f` for `g`, where `ι` is this subspace's inclusion.
    pub fn factor(&self, f: &LinMap<K>) -> Result<Option<LinMap<K>>> {
        solve(&self.basis, f)
    }
}

/// The equalizer `{v : f·v = g·v}` of two parallel maps.
pub fn equalizer<K: Field>(f: &LinMap<K>, g: &LinMap<K>) -> Result<Subspace<K>> {
    Ok(Subspace::kernel(&f.sub(g)?))
}

/// Quotient of the ambient space by `u`, with its projection. The quotient basis is
/// the set of ambient basis vectors that are not pivots of `u`.
pub fn quotient<K: Field>(u: &Subspace<K>) -> Result<(Space, LinMap<K>)> {
    let ambient = u.ambient();
    let n = ambient.dim();
    let mut position = vec![None; n];
    let mut labels = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in u.pivots() {
        is_pivot[p] = true;
    }
    for i in 0..n {
        if !is_pivot[i] {
            position[i] = Some(labels.len());
            labels.push(ambient.label(i));
        }
    }
    let q = Space::carrier("quotient", labels);
    let mut pivot_column = vec![None; n];
    for (j, &p) in u.pivots().iter().enumerate() {
        pivot_column[p] = Some(j);
    }
    let proj = LinMap::from_basis_images(ambient.clone(), q.clone(), |i| match position[i] {
        Some(pos) => vec![(pos, K::one())],
        None => {
            let j = pivot_column[i].expect("pivot row has a basis column");
            u.basis()
                .column(j)
                .iter()
                .filter_map(|(r, v)| position[*r].map(|pos| (pos, -v.clone())))
                .collect()
        }
    })?;
    Ok((q, proj))
}
