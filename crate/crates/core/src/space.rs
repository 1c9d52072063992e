//! Tensor words of based vector spaces.

use std::fmt;
use std::sync::Arc;

/// A named base object with a fixed, labelled basis.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub name: String,
    pub labels: Vec<String>,
}

impl Factor {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// An ordered tensor product of base objects. The empty word is the unit object `I`.
///
/// Basis vectors of a word are indexed row-major: the multi-index `(i₁, …, iₙ)`
/// sits at `((i₁·d₂ + i₂)·d₃ + …)·dₙ + iₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Space {
    factors: Vec<Arc<Factor>>,
}

impl Space {
    /// The monoidal unit `I`, of dimension one.
    pub fn unit() -> Self {
        Space::default()
    }

    /// A single base object. Panics on an empty basis.
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Self {
        assert!(
            !labels.is_empty(),
            "a base object needs a positive dimension"
        );
        Space {
            factors: vec![Arc::new(Factor {
                name: name.into(),
                labels,
            })],
        }
    }

    /// Carrier of a subspace or quotient; unlike [`Space::new`] it may be zero-dimensional.
    pub fn carrier(name: impl Into<String>, labels: Vec<String>) -> Self {
        Space {
            factors: vec![Arc::new(Factor {
                name: name.into(),
                labels,
            })],
        }
    }

    /// A base object with labels `0..dim`.
    pub fn numbered(name: impl Into<String>, dim: usize) -> Self {
        Space::new(name, (0..dim).map(|i| i.to_string()).collect())
    }

    pub fn factors(&self) -> &[Arc<Factor>] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim()).collect()
    }

    /// Same factor dimensions in the same order; names and labels are ignored.
    pub fn same_shape(&self, other: &Space) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.dim() == b.dim())
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Space { factors }
    }

    /// `self ⊗ self ⊗ … ⊗ self` with `n` copies; `n = 0` gives `I`.
    pub fn power(&self, n: usize) -> Space {
        let mut factors = Vec::with_capacity(self.factors.len() * n);
        for _ in 0..n {
            factors.extend(self.factors.iter().cloned());
        }
        Space { factors }
    }

    pub fn multi_index(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % f.dim();
            index /= f.dim();
        }
        out
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.factors.len(), "multi-index arity");
        multi
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&i, f)| acc * f.dim() + i)
    }

    /// Human-readable basis label such as `r⊗s`; `1` for the unit object.
    pub fn label(&self, index: usize) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.multi_index(index)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.labels[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// All basis labels in index order.
    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "I");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("{}[{}]", x.name, x.dim()))
            .collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_has_dimension_one() {
        let i = Space::unit();
        assert_eq!(i.dim(), 1);
        assert_eq!(i.label(0), "1");
        let v = Space::numbered("V", 3);
        assert_eq!(v.tensor(&i), v);
        assert_eq!(i.tensor(&v), v);
    }

    #[test]
    fn row_major_indexing() {
        let s = Space::numbered("A", 2).tensor(&Space::numbered("B", 3));
        assert_eq!(s.dim(), 6);
        assert_eq!(s.multi_index(4), vec![1, 1]);
        assert_eq!(s.flat_index(&[1, 2]), 5);
        assert_eq!(s.label(5), "1⊗2");
        for i in 0..6 {
            assert_eq!(s.flat_index(&s.multi_index(i)), i);
        }
    }

    #[test]
    fn shape_ignores_names() {
        let a = Space::numbered("A", 2);
        let b = Space::numbered("B", 2);
        assert!(a.same_shape(&b));
        assert_ne!(a, b);
        assert!(!a.tensor(&a).same_shape(&Space::numbered("C", 4)));
    }
}
