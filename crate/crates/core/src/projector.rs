//! Orthogonal projectors and maximal contexts.

use std::fmt;

use crate::error::Error;
use crate::lattice::SubspaceLattice;
use crate::matrix::ExactMatrix;
use crate::subspace::Subspace;

/// A self-adjoint idempotent matrix, validated exactly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Projector {
    matrix: ExactMatrix,
}

impl Projector {
    pub fn new(m: ExactMatrix) -> Result<Self, Error> {
        validate_projector(m)
    }

    pub fn zero(n: usize) -> Self {
        Projector {
            matrix: ExactMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Projector {
            matrix: ExactMatrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Column space, the vectors fixed by the projector.
    pub fn ran(&self) -> Subspace {
        Subspace::column_space(&self.matrix)
    }

    pub fn ker(&self) -> Subspace {
        Subspace::from_span(self.dim(), &self.matrix.null_space())
            .expect("null space vectors have ambient length")
    }

    /// `1 − P`.
    pub fn negation(&self) -> Projector {
        Projector {
            matrix: ExactMatrix::identity(self.dim())
                .sub(&self.matrix)
                .expect("same shape"),
        }
    }

    pub fn commutes(&self, other: &Projector) -> Result<bool, Error> {
        Ok(self.matrix.matmul(&other.matrix)? == other.matrix.matmul(&self.matrix)?)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The orthogonal projector with column space `u`, `C (C*C)⁻¹ C*` where
    /// the columns of `C` are the canonical basis of `u`.
    pub fn onto(u: &Subspace) -> Projector {
        projector_from_subspace(u)
    }

    /// Sum of projectors known to be mutually orthogonal. Not validated.
    pub(crate) fn sum_unchecked<'a>(
        n: usize,
        ps: impl IntoIterator<Item = &'a Projector>,
    ) -> Projector {
        let matrix = ps.into_iter().fold(ExactMatrix::zeros(n, n), |acc, p| {
            acc.add(&p.matrix).expect("same shape")
        });
        Projector { matrix }
    }
}

impl fmt::Display for Projector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.matrix, f)
    }
}

impl fmt::Debug for Projector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Projector({})", self.matrix)
    }
}

pub fn validate_projector(m: ExactMatrix) -> Result<Projector, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.adjoint() != m {
        return Err(Error::NotSelfAdjoint);
    }
    if m.matmul(&m)? != m {
        return Err(Error::NotIdempotent);
    }
    Ok(Projector { matrix: m })
}

pub fn projector_from_subspace(u: &Subspace) -> Projector {
    let n = u.ambient_dim();
    let Some(b) = u.basis_matrix() else {
        return Projector::zero(n);
    };
    let c = b.transpose();
    let c_star = b.conj();
    let gram = c_star.matmul(&c).expect("k x n times n x k");
    let inv = gram
        .inverse()
        .expect("Gram matrix of an independent basis is invertible");
    let matrix = c
        .matmul(&inv)
        .and_then(|m| m.matmul(&c_star))
        .expect("shapes agree");
    Projector { matrix }
}

/// True iff `a` maps every basis vector of `u` back into `u`.
pub fn is_invariant(u: &Subspace, a: &ExactMatrix) -> Result<bool, Error> {
    if a.rows() != u.ambient_dim() || a.cols() != u.ambient_dim() {
        return Err(Error::DimensionMismatch {
            op: "invariance test",
            expected: u.ambient_dim(),
            found: a.cols(),
        });
    }
    for b in u.basis() {
        if !u.contains(&a.apply(b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{ran(0), ran(P), ran(¬P), ran(1)}`, deduplicated.
pub fn invariant_lattice_of_projector(p: &Projector) -> SubspaceLattice {
    let n = p.dim();
    SubspaceLattice::new(
        n,
        vec![
            Subspace::zero(n),
            p.ran(),
            p.negation().ran(),
            Subspace::full(n),
        ],
    )
    .expect("contains bottom and top")
}

/// A nonempty family of nonzero, pairwise orthogonal projectors summing to
/// the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalContext {
    label: String,
    projectors: Vec<Projector>,
    ambient_dim: usize,
}

impl MaximalContext {
    pub fn new(label: impl Into<String>, ms: Vec<ExactMatrix>) -> Result<Self, Error> {
        validate_context(label, ms)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn projectors(&self) -> &[Projector] {
        &self.projectors
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn matrices(&self) -> Vec<ExactMatrix> {
        self.projectors.iter().map(|p| p.matrix().clone()).collect()
    }
}

pub fn validate_context(
    label: impl Into<String>,
    ms: Vec<ExactMatrix>,
) -> Result<MaximalContext, Error> {
    let Some(first) = ms.first() else {
        return Err(Error::EmptyContext);
    };
    let n = first.rows();
    let mut projectors = Vec::with_capacity(ms.len());
    for (index, m) in ms.into_iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(Error::InvalidMember {
                index,
                reason: Box::new(Error::DimensionMismatch {
                    op: "context",
                    expected: n,
                    found: m.rows().max(m.cols()),
                }),
            });
        }
        let p = validate_projector(m).map_err(|e| Error::InvalidMember {
            index,
            reason: Box::new(e),
        })?;
        if p.is_zero() {
            return Err(Error::ZeroMember { index });
        }
        projectors.push(p);
    }
    for i in 0..projectors.len() {
        for j in i + 1..projectors.len() {
            let (a, b) = (projectors[i].matrix(), projectors[j].matrix());
            if !a.matmul(b)?.is_zero() || !b.matmul(a)?.is_zero() {
                return Err(Error::NonOrthogonalPair { i, j });
            }
        }
    }
    if !Projector::sum_unchecked(n, &projectors)
        .matrix()
        .is_identity()
    {
        return Err(Error::SumNotIdentity);
    }
    Ok(MaximalContext {
        label: label.into(),
        projectors,
        ambient_dim: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExactVector;
    use crate::spin_half::{self, Axis};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_ints(rows).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_projector(spin_half::matrix(Axis::X, 1)).is_ok());
        assert_eq!(
            validate_projector(m(&[&[1, 1], &[0, 0]])),
            Err(Error::NotSelfAdjoint)
        );
        assert!(validate_projector(ExactMatrix::identity(2)).is_ok());
        assert_eq!(
            validate_projector(m(&[&[2, 0], &[0, 0]])),
            Err(Error::NotIdempotent)
        );
        assert!(matches!(
            validate_projector(ExactMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn ran_examples() {
        let p2x = spin_half::projector(Axis::X, 2);
        assert_eq!(p2x.ran().basis(), &[ExactVector::from_ints(&[1, -1])]);
        assert!(Projector::zero(2).ran().is_zero());
        assert!(Projector::identity(2).ran().is_full());
        for b in p2x.ran().basis() {
            assert_eq!(&p2x.matrix().apply(b).unwrap(), b);
        }
    }

    #[test]
    fn ker_examples() {
        let p1z = spin_half::projector(Axis::Z, 1);
        assert_eq!(p1z.ker(), Subspace::line(&ExactVector::from_ints(&[0, 1])));
        assert!(Projector::identity(2).ker().is_zero());
        let p1y = spin_half::projector(Axis::Y, 1);
        let p2y = spin_half::projector(Axis::Y, 2);
        assert_eq!(p1y.ker(), p2y.ran());
        for b in p2y.ran().basis() {
            assert!(p1y.matrix().apply(b).unwrap().is_zero());
        }
        assert_eq!(p1y.ker(), p1y.ran().orthocomplement());
    }

    #[test]
    fn negation_examples() {
        for axis in Axis::ALL {
            assert_eq!(
                spin_half::projector(axis, 1).negation(),
                spin_half::projector(axis, 2)
            );
        }
        assert_eq!(Projector::zero(2).negation(), Projector::identity(2));
    }

    #[test]
    fn commutation_examples() {
        let p1z = spin_half::projector(Axis::Z, 1);
        assert!(p1z.commutes(&spin_half::projector(Axis::Z, 2)).unwrap());
        assert!(!p1z.commutes(&spin_half::projector(Axis::X, 1)).unwrap());
        for p in spin_half::all_projectors() {
            assert!(p.commutes(&Projector::identity(2)).unwrap());
        }
        assert!(p1z.commutes(&Projector::identity(3)).is_err());
    }

    #[test]
    fn invariance_examples() {
        let p1z = spin_half::projector(Axis::Z, 1);
        let p1x = spin_half::projector(Axis::X, 1);
        assert!(is_invariant(&p1z.ran(), p1z.matrix()).unwrap());
        // P1z·(1,1) = (1,0), not in span{(1,1)}
        let image = p1z
            .matrix()
            .apply(&ExactVector::from_ints(&[1, 1]))
            .unwrap();
        assert!(!p1x.ran().contains(&image).unwrap());
        assert!(!is_invariant(&p1x.ran(), p1z.matrix()).unwrap());
        for p in spin_half::all_projectors() {
            assert!(is_invariant(&Subspace::zero(2), p.matrix()).unwrap());
            assert!(is_invariant(&Subspace::full(2), p.matrix()).unwrap());
        }
    }

    #[test]
    fn lattice_of_single_projector() {
        let l = invariant_lattice_of_projector(&spin_half::projector(Axis::Z, 1));
        let expected = [
            Subspace::zero(2),
            Subspace::line(&ExactVector::from_ints(&[1, 0])),
            Subspace::line(&ExactVector::from_ints(&[0, 1])),
            Subspace::full(2),
        ];
        assert_eq!(l.elements(), &expected);

        assert_eq!(
            invariant_lattice_of_projector(&Projector::identity(2)).len(),
            2
        );

        let p1y = spin_half::projector(Axis::Y, 1);
        let l = invariant_lattice_of_projector(&p1y);
        assert_eq!(l.len(), 4);
        let i = crate::GaussianRational::i();
        // the {[ia; a]} line
        let ia_a = Subspace::line(&ExactVector::new(vec![i, crate::GaussianRational::one()]));
        assert!(l.index_of(&ia_a).is_some());
        for u in l.elements() {
            assert!(is_invariant(u, p1y.matrix()).unwrap());
        }
    }

    #[test]
    fn context_validation() {
        let z = spin_half::context(Axis::Z);
        assert_eq!(z.len(), 2);
        let err = validate_context(
            "bad",
            vec![spin_half::matrix(Axis::Z, 1), spin_half::matrix(Axis::X, 1)],
        );
        assert_eq!(err, Err(Error::NonOrthogonalPair { i: 0, j: 1 }));
        let single = validate_context("one", vec![ExactMatrix::identity(2)]).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(
            validate_context("partial", vec![spin_half::matrix(Axis::Z, 1)]),
            Err(Error::SumNotIdentity)
        );
        assert_eq!(
            validate_context(
                "zero",
                vec![ExactMatrix::zeros(2, 2), ExactMatrix::identity(2)]
            ),
            Err(Error::ZeroMember { index: 0 })
        );
        assert!(matches!(
            validate_context("bad member", vec![m(&[&[1, 1], &[0, 0]])]),
            Err(Error::InvalidMember { index: 0, .. })
        ));
        assert_eq!(validate_context("empty", vec![]), Err(Error::EmptyContext));
    }

    #[test]
    fn projector_from_subspace_examples() {
        let diag = Subspace::line(&ExactVector::from_ints(&[1, 1]));
        assert_eq!(
            projector_from_subspace(&diag),
            spin_half::projector(Axis::X, 1)
        );
        assert_eq!(
            projector_from_subspace(&Subspace::zero(2)),
            Projector::zero(2)
        );
        let i = crate::GaussianRational::i();
        let line = Subspace::line(&ExactVector::new(vec![-i, crate::GaussianRational::one()]));
        let p = projector_from_subspace(&line);
        assert_eq!(p, spin_half::projector(Axis::Y, 1));
        assert!(validate_projector(p.matrix().clone()).is_ok());
        assert_eq!(p.ran(), line);
    }

    #[test]
    fn complement_split() {
        for p in spin_half::all_projectors() {
            let (r, k) = (p.ran(), p.negation().ran());
            assert!(r.join(&k).unwrap().is_full());
            assert!(r.meet(&k).unwrap().is_zero());
            assert_eq!(r.dim() + p.ker().dim(), 2);
        }
    }
}
