//! Generated matrix algebras and the Burnside irreducibility criterion: a
//! family of `n×n` complex matrices has no common nontrivial invariant
//! subspace iff the unital algebra it generates has dimension `n²`.

use crate::error::Error;
use crate::matrix::{EchelonBasis, ExactMatrix};
use crate::projector::is_invariant;
use crate::scalar::GaussianRational;
use crate::spin_half::{self, Axis};
use crate::subspace::Subspace;

/// The unital algebra generated by a set of matrices, as a vectorized basis.
#[derive(Clone, Debug)]
pub struct AlgebraSpan {
    ambient_dim: usize,
    basis: Vec<ExactMatrix>,
    generators: Vec<ExactMatrix>,
    rounds: Vec<usize>,
}

impl AlgebraSpan {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    /// Span size after seeding (index 0) and after each product round.
    pub fn rounds(&self) -> &[usize] {
        &self.rounds
    }

    pub fn is_full(&self) -> bool {
        self.dimension() == self.ambient_dim * self.ambient_dim
    }

    pub fn contains(&self, m: &ExactMatrix) -> Result<bool, Error> {
        self.echelon().contains(&m.vectorize())
    }

    fn echelon(&self) -> EchelonBasis {
        let mut span = EchelonBasis::new(self.ambient_dim * self.ambient_dim);
        for b in &self.basis {
            span.insert(&b.vectorize()).expect("n x n");
        }
        span
    }

    /// Checks from scratch that `B·G` and `G·B` lie in the span for every
    /// basis element `B` and generator `G`, and that the span holds `1`.
    pub fn is_closed(&self) -> bool {
        let span = self.echelon();
        let inside = |m: ExactMatrix| span.contains(&m.vectorize()).unwrap_or(false);
        inside(ExactMatrix::identity(self.ambient_dim))
            && self.basis.iter().all(|b| {
                self.generators.iter().all(|g| {
                    inside(b.matmul(g).expect("n x n")) && inside(g.matmul(b).expect("n x n"))
                })
            })
    }
}

fn check_generators(n: usize, generators: &[ExactMatrix]) -> Result<(), Error> {
    for g in generators {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch {
                op: "algebra closure",
                expected: n,
                found: if g.rows() != n { g.rows() } else { g.cols() },
            });
        }
    }
    Ok(())
}

/// Smallest unital subalgebra of `M_n` containing `generators`.
///
/// Seeds the span with `1` and the generators, then breadth-first adjoins
/// `B·G` and `G·B` for each newly added basis element `B` until a round adds
/// nothing.
pub fn algebra_closure(
    ambient_dim: usize,
    generators: &[ExactMatrix],
) -> Result<AlgebraSpan, Error> {
    check_generators(ambient_dim, generators)?;
    let n = ambient_dim;
    let mut span = EchelonBasis::new(n * n);
    let mut basis = Vec::new();
    let mut frontier = Vec::new();
    for m in std::iter::once(ExactMatrix::identity(n)).chain(generators.iter().cloned()) {
        if span.insert(&m.vectorize())? {
            basis.push(m.clone());
            frontier.push(m);
        }
    }
    let mut rounds = vec![basis.len()];
    while !frontier.is_empty() {
        let mut added = Vec::new();
        for b in &frontier {
            for g in generators {
                for m in [b.matmul(g)?, g.matmul(b)?] {
                    if span.insert(&m.vectorize())? {
                        basis.push(m.clone());
                        added.push(m);
                    }
                }
            }
        }
        rounds.push(basis.len());
        frontier = added;
    }
    let alg = AlgebraSpan {
        ambient_dim: n,
        basis,
        generators: generators.to_vec(),
        rounds,
    };
    assert!(
        alg.is_closed(),
        "closure iteration produced a span that is not closed"
    );
    Ok(alg)
}

/// Candidates invariant under every generator.
pub fn common_invariant_filter(
    generators: &[ExactMatrix],
    candidates: &[Subspace],
) -> Result<Vec<Subspace>, Error> {
    let mut out = Vec::new();
    for u in candidates {
        let mut keep = true;
        for g in generators {
            if !is_invariant(u, g)? {
                keep = false;
                break;
            }
        }
        if keep {
            out.push(u.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub span: AlgebraSpan,
    /// A nontrivial candidate invariant under every generator, when the
    /// family is reducible and one was supplied.
    pub invariant_subspace: Option<Subspace>,
}

/// Burnside test: irreducible iff the generated algebra is all of `M_n`.
pub fn is_irreducible(
    ambient_dim: usize,
    generators: &[ExactMatrix],
    candidates: &[Subspace],
) -> Result<Irreducibility, Error> {
    if ambient_dim < 2 {
        return Err(Error::DimensionOutOfScope(ambient_dim));
    }
    let span = algebra_closure(ambient_dim, generators)?;
    let irreducible = span.is_full();
    let invariant_subspace = if irreducible {
        None
    } else {
        common_invariant_filter(generators, candidates)?
            .into_iter()
            .find(|u| !u.is_zero() && !u.is_full())
    };
    Ok(Irreducibility {
        irreducible,
        span,
        invariant_subspace,
    })
}

/// `M = c·1 + a_z σ_z + a_x σ_x + a_y σ_y` with `σ_Q = P_1^(Q) − P_2^(Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliDecomposition {
    pub c: GaussianRational,
    pub a_z: GaussianRational,
    pub a_x: GaussianRational,
    pub a_y: GaussianRational,
}

fn sigma(axis: Axis) -> ExactMatrix {
    spin_half::matrix(axis, 1)
        .sub(&spin_half::matrix(axis, 2))
        .expect("2x2")
}

impl PauliDecomposition {
    pub fn reassemble(&self) -> ExactMatrix {
        [
            (&self.a_z, sigma(Axis::Z)),
            (&self.a_x, sigma(Axis::X)),
            (&self.a_y, sigma(Axis::Y)),
        ]
        .into_iter()
        .fold(ExactMatrix::identity(2).scale(&self.c), |acc, (a, s)| {
            acc.add(&s.scale(a)).expect("2x2")
        })
    }
}

pub fn pauli_decompose(m: &ExactMatrix) -> Result<PauliDecomposition, Error> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch {
            op: "Pauli decomposition",
            expected: 2,
            found: if m.rows() != 2 { m.rows() } else { m.cols() },
        });
    }
    let half = GaussianRational::ratio(1, 2);
    let (m00, m01, m10, m11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    Ok(PauliDecomposition {
        c: (m00 + m11) * &half,
        a_z: (m00 - m11) * &half,
        a_x: (m01 + m10) * &half,
        a_y: (m01 - m10) * GaussianRational::complex(0, 1, 1, 2),
    })
}
