//! Linear subspaces of `C^n` in canonical form, with the lattice primitives
//! on them.

use std::fmt;

use crate::error::Error;
use crate::matrix::{ExactMatrix, ExactVector};
use crate::scalar::GaussianRational;

/// A subspace of `C^n`, stored as the nonzero rows of the reduced row-echelon
/// form of any spanning set. Two subspaces are equal iff these rows are
/// identical, so derived `Eq` is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<ExactVector>,
}

fn check_ambient(op: &'static str, u: &Subspace, v: &Subspace) -> Result<(), Error> {
    if u.ambient_dim == v.ambient_dim {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            expected: u.ambient_dim,
            found: v.ambient_dim,
        })
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|k| ExactVector::unit(ambient_dim, k))
                .collect(),
        }
    }

    /// Canonical subspace spanned by `vectors`.
    pub fn from_span(ambient_dim: usize, vectors: &[ExactVector]) -> Result<Self, Error> {
        for v in vectors {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    op: "span",
                    expected: ambient_dim,
                    found: v.dim(),
                });
            }
        }
        if vectors.is_empty() || ambient_dim == 0 {
            return Ok(Self::zero(ambient_dim));
        }
        let reduced = ExactMatrix::from_row_vectors(vectors)?.rref();
        Ok(Subspace {
            ambient_dim,
            basis: (0..reduced.rank).map(|r| reduced.matrix.row(r)).collect(),
        })
    }

    /// Span of a single vector.
    pub fn line(v: &ExactVector) -> Self {
        Self::from_span(v.dim(), std::slice::from_ref(v)).expect("dimension matches")
    }

    /// Column space of `m`.
    pub fn column_space(m: &ExactMatrix) -> Self {
        Self::from_span(m.rows(), &m.column_vectors()).expect("columns have length rows")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[ExactVector] {
        &self.basis
    }

    /// The canonical basis as a matrix, `None` for the zero subspace.
    pub fn basis_matrix(&self) -> Option<ExactMatrix> {
        ExactMatrix::from_row_vectors(&self.basis).ok()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// `{w : ⟨b, w⟩ = 0 for every basis vector b}`, as the null space of the
    /// conjugated basis matrix.
    pub fn orthocomplement(&self) -> Subspace {
        let n = self.ambient_dim;
        if self.is_zero() {
            return Self::full(n);
        }
        // The conjugated basis is still in reduced echelon form, so its null
        // space can be read off directly: one vector per free column.
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|b| {
                b.entries()
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect();
        let kernel: Vec<ExactVector> = (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![GaussianRational::zero(); n];
                v[free] = GaussianRational::one();
                for (b, &p) in self.basis.iter().zip(&pivots) {
                    v[p] = -b[free].conj();
                }
                ExactVector::new(v)
            })
            .collect();
        Self::from_span(n, &kernel).expect("kernel vectors have ambient length")
    }

    /// Intersection, computed as the orthocomplement of the span of both
    /// orthocomplements.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace, Error> {
        check_ambient("meet", self, other)?;
        if self.is_full() || other.is_zero() {
            return Ok(other.clone());
        }
        if other.is_full() || self.is_zero() {
            return Ok(self.clone());
        }
        let mut rows: Vec<ExactVector> = self.orthocomplement().basis;
        rows.extend(other.orthocomplement().basis);
        let stacked = ExactMatrix::from_row_vectors(&rows)?.conj();
        Self::from_span(self.ambient_dim, &stacked.null_space())
    }

    /// Smallest subspace containing both.
    pub fn join(&self, other: &Subspace) -> Result<Subspace, Error> {
        check_ambient("join", self, other)?;
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_span(self.ambient_dim, &rows)
    }

    /// Inclusion `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool, Error> {
        check_ambient("inclusion test", self, other)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains(&self, w: &ExactVector) -> Result<bool, Error> {
        if w.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                op: "membership test",
                expected: self.ambient_dim,
                found: w.dim(),
            });
        }
        if w.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let mut rows = self.basis.clone();
        rows.push(w.clone());
        Ok(ExactMatrix::from_row_vectors(&rows)?.rank() == self.dim())
    }

    /// Canonical text form of the basis, e.g. `[[1, -i]]`; `[]` for `{0}`.
    pub fn basis_string(&self) -> String {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|v| {
                let entries: Vec<String> = v.entries().iter().map(ToString::to_string).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        if self == other {
            return Some(Ordering::Equal);
        }
        match (self.leq(other).ok()?, other.leq(self).ok()?) {
            (true, _) => Some(Ordering::Less),
            (_, true) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "{{0}}")
        } else if self.is_full() {
            write!(f, "C^{}", self.ambient_dim)
        } else {
            let vs: Vec<String> = self.basis.iter().map(ToString::to_string).collect();
            write!(f, "span{{{}}}", vs.join(", "))
        }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(n={}, {})",
            self.ambient_dim,
            self.basis_string()
        )
    }
}
