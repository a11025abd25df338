//! Random exact instances for property tests: Gaussian-rational vectors,
//! subspaces, orthogonal bases and the contexts built from them.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matrix::{ExactMatrix, ExactVector};
use crate::projector::{MaximalContext, Projector};
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

/// `a/b + (c/d)i` with numerators in `-3..=3` and denominators in `1..=3`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    GaussianRational::complex(
        rng.gen_range(-3..=3),
        rng.gen_range(1..=3),
        rng.gen_range(-3..=3),
        rng.gen_range(1..=3),
    )
}

fn small_scalar<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    GaussianRational::complex(rng.gen_range(-2..=2), 1, rng.gen_range(-2..=2), 1)
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ExactVector {
    ExactVector::new((0..dim).map(|_| scalar(rng)).collect())
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::new(rows, cols, (0..rows * cols).map(|_| scalar(rng)).collect()).expect("shape")
}

/// Span of up to `dim` random vectors with small Gaussian-integer entries;
/// any dimension from 0 to `dim` can come out.
pub fn subspace<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Subspace {
    let k = rng.gen_range(0..=dim);
    let vs: Vec<ExactVector> = (0..k)
        .map(|_| ExactVector::new((0..dim).map(|_| small_scalar(rng)).collect()))
        .collect();
    Subspace::from_span(dim, &vs).expect("dimension matches")
}

/// Pairwise orthogonal nonzero vectors spanning `C^dim`, by unnormalized
/// Gram–Schmidt on random Gaussian-integer vectors.
pub fn orthogonal_basis<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<ExactVector> {
    let mut basis: Vec<ExactVector> = Vec::with_capacity(dim);
    while basis.len() < dim {
        let mut v = ExactVector::new((0..dim).map(|_| small_scalar(rng)).collect());
        for b in &basis {
            let coeff = b
                .inner(&v)
                .and_then(|num| num.checked_div(&b.inner(b)?))
                .expect("b is nonzero");
            v = v.sub(&b.scale(&coeff)).expect("same length");
        }
        if !v.is_zero() {
            basis.push(v);
        }
    }
    basis
}

/// `v v* / ⟨v, v⟩`.
pub fn rank_one_projector(v: &ExactVector) -> Projector {
    let n = v.dim();
    let norm = v.inner(v).expect("same length");
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            entries.push(
                (&v[r] * &v[c].conj())
                    .checked_div(&norm)
                    .expect("nonzero vector"),
            );
        }
    }
    Projector::new(ExactMatrix::new(n, n, entries).expect("n x n")).expect("rank-one projector")
}

fn group_sum(group: &[Projector], n: usize) -> Projector {
    let m = group.iter().fold(ExactMatrix::zeros(n, n), |acc, p| {
        acc.add(p.matrix()).expect("n x n")
    });
    Projector::new(m).expect("sum of orthogonal projectors")
}

/// A maximal context on `C^dim` with exactly `members` nonzero projectors,
/// `1 ≤ members ≤ dim`, of random ranks.
pub fn context<R: Rng + ?Sized>(rng: &mut R, dim: usize, members: usize) -> MaximalContext {
    assert!((1..=dim).contains(&members), "need 1 ≤ members ≤ dim");
    let mut rank_ones: Vec<Projector> = orthogonal_basis(rng, dim)
        .iter()
        .map(rank_one_projector)
        .collect();
    rank_ones.shuffle(rng);
    let mut cuts: Vec<usize> = (1..dim).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(members - 1).collect();
    cuts.sort_unstable();
    cuts.push(dim);
    let mut start = 0;
    let mut ms = Vec::with_capacity(members);
    for end in cuts {
        ms.push(group_sum(&rank_ones[start..end], dim).into_matrix());
        start = end;
    }
    MaximalContext::new("random", ms).expect("orthogonal resolution of identity")
}

/// Sum of a random subset of rank-one projectors onto an orthogonal basis.
pub fn projector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Projector {
    let basis = orthogonal_basis(rng, dim);
    let chosen: Vec<Projector> = basis
        .iter()
        .filter(|_| rng.gen_bool(0.5))
        .map(rank_one_projector)
        .collect();
    group_sum(&chosen, dim)
}

/// Two projectors diagonal in one shared orthogonal basis, together with the
/// basis indices each one selects.
pub fn commuting_pair<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
) -> (Projector, Projector, Vec<bool>, Vec<bool>) {
    let rank_ones: Vec<Projector> = orthogonal_basis(rng, dim)
        .iter()
        .map(rank_one_projector)
        .collect();
    let sel_p: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
    let sel_q: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
    let pick = |sel: &[bool]| -> Vec<Projector> {
        rank_ones
            .iter()
            .zip(sel)
            .filter(|(_, &s)| s)
            .map(|(p, _)| p.clone())
            .collect()
    };
    let p = group_sum(&pick(&sel_p), dim);
    let q = group_sum(&pick(&sel_q), dim);
    (p, q, sel_p, sel_q)
}
