//! Invariant-subspace lattices of maximal contexts and their operator-side
//! mirror, plus intersections of lattices across contexts.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::lattice::SubspaceLattice;
use crate::matrix::ExactMatrix;
use crate::projector::{MaximalContext, Projector};
use crate::subspace::Subspace;

/// A selection of members of one context, standing for `Σ_{i∈S} P_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetSum {
    context_label: String,
    members: BTreeSet<usize>,
}

impl SubsetSum {
    pub fn new(
        ctx: &MaximalContext,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, Error> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&index) = members.iter().find(|&&i| i >= ctx.len()) {
            return Err(Error::SelectorOutOfRange {
                index,
                size: ctx.len(),
            });
        }
        Ok(SubsetSum {
            context_label: ctx.label().to_string(),
            members,
        })
    }

    fn from_mask(ctx: &MaximalContext, mask: usize) -> Self {
        SubsetSum {
            context_label: ctx.label().to_string(),
            members: (0..ctx.len()).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn context_label(&self) -> &str {
        &self.context_label
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn intersection(&self, other: &SubsetSum) -> SubsetSum {
        SubsetSum {
            context_label: self.context_label.clone(),
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    fn check(&self, ctx: &MaximalContext) -> Result<(), Error> {
        if self.context_label != ctx.label() {
            return Err(Error::SelectorMismatch {
                expected: ctx.label().to_string(),
                found: self.context_label.clone(),
            });
        }
        match self.members.iter().find(|&&i| i >= ctx.len()) {
            Some(&index) => Err(Error::SelectorOutOfRange {
                index,
                size: ctx.len(),
            }),
            None => Ok(()),
        }
    }
}

/// `Σ_{i∈S} P_i`.
pub fn subset_projector(ctx: &MaximalContext, s: &SubsetSum) -> Result<Projector, Error> {
    s.check(ctx)?;
    let members = ctx.projectors();
    Ok(Projector::sum_unchecked(
        ctx.ambient_dim(),
        s.members.iter().map(|&i| &members[i]),
    ))
}

fn subsets(ctx: &MaximalContext) -> impl Iterator<Item = SubsetSum> + '_ {
    assert!(
        ctx.len() < usize::BITS as usize,
        "context too large to enumerate"
    );
    (0..1usize << ctx.len()).map(move |mask| SubsetSum::from_mask(ctx, mask))
}

/// Every subset sum paired with its selector, in binary-counting order of
/// the selector (bit `i` set selects member `i`).
pub fn operator_lattice(ctx: &MaximalContext) -> Vec<(SubsetSum, Projector)> {
    subsets(ctx)
        .map(|s| {
            let p = subset_projector(ctx, &s).expect("selector drawn from ctx");
            (s, p)
        })
        .collect()
}

/// `{ ran(Σ_{i∈S} P_i) : S ⊆ members }`, ordered as [`operator_lattice`].
/// Has `2^N` elements for a context of `N` members.
pub fn context_lattice(ctx: &MaximalContext) -> SubspaceLattice {
    let elements = operator_lattice(ctx)
        .into_iter()
        .map(|(_, p)| p.ran())
        .collect();
    SubspaceLattice::new(ctx.ambient_dim(), elements)
        .expect("empty and full subsets give the bounds")
}

/// Column spaces of all products `R_1 R_2 ⋯ R_N` with each factor drawn
/// from `{0, P_i, 1 − P_i, 1}`. For an orthogonal resolution of the identity
/// this is the same family as [`context_lattice`], reached without subset
/// sums.
pub fn product_lattice(ctx: &MaximalContext) -> SubspaceLattice {
    let n = ctx.ambient_dim();
    let mut products: Vec<ExactMatrix> = vec![ExactMatrix::identity(n)];
    for p in ctx.projectors() {
        let choices = [
            ExactMatrix::zeros(n, n),
            p.matrix().clone(),
            p.negation().into_matrix(),
            ExactMatrix::identity(n),
        ];
        let mut next: Vec<ExactMatrix> = Vec::new();
        for acc in &products {
            for r in &choices {
                let m = acc.matmul(r).expect("n x n");
                if !next.contains(&m) {
                    next.push(m);
                }
            }
        }
        products = next;
    }
    let elements = products.iter().map(Subspace::column_space).collect();
    SubspaceLattice::new(n, elements).expect("zero and identity factors give the bounds")
}

/// Elements common to every lattice, in the order of the first.
pub fn intersect_lattices(ls: &[SubspaceLattice]) -> Result<SubspaceLattice, Error> {
    let Some(first) = ls.first() else {
        return Err(Error::NoLattices);
    };
    if let Some(bad) = ls.iter().find(|l| l.ambient_dim() != first.ambient_dim()) {
        return Err(Error::DimensionMismatch {
            op: "lattice intersection",
            expected: first.ambient_dim(),
            found: bad.ambient_dim(),
        });
    }
    let common = first
        .elements()
        .iter()
        .filter(|e| ls[1..].iter().all(|l| l.contains(e)))
        .cloned()
        .collect();
    SubspaceLattice::new(first.ambient_dim(), common)
}

/// The projector of `S ∩ T`, which is also the product of the two subset
/// sums.
pub fn projector_meet_in_context(
    ctx: &MaximalContext,
    s: &SubsetSum,
    t: &SubsetSum,
) -> Result<Projector, Error> {
    s.check(ctx)?;
    t.check(ctx)?;
    subset_projector(ctx, &s.intersection(t))
}
