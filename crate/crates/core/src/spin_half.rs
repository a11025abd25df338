//! The spin-½ projectors on `C²` along the z, x and y axes, and the
//! eight-element family of their column spaces together with `{0}` and `C²`.

use std::fmt;

use crate::matrix::{ExactMatrix, ExactVector};
use crate::projector::{MaximalContext, Projector};
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Z,
    X,
    Y,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Z, Axis::X, Axis::Y];

    pub fn label(self) -> &'static str {
        match self {
            Axis::Z => "z",
            Axis::X => "x",
            Axis::Y => "y",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Matrix of `P_k` along `axis`, `k ∈ {1, 2}`. `P_1` is spin up.
pub fn matrix(axis: Axis, k: u8) -> ExactMatrix {
    assert!(k == 1 || k == 2, "spin-½ projectors are indexed 1 and 2");
    let up = k == 1;
    let g = |re: i64, im: i64| GaussianRational::complex(re, 2, im, 2);
    let rows = match (axis, up) {
        (Axis::Z, true) => vec![vec![g(2, 0), g(0, 0)], vec![g(0, 0), g(0, 0)]],
        (Axis::Z, false) => vec![vec![g(0, 0), g(0, 0)], vec![g(0, 0), g(2, 0)]],
        (Axis::X, true) => vec![vec![g(1, 0), g(1, 0)], vec![g(1, 0), g(1, 0)]],
        (Axis::X, false) => vec![vec![g(1, 0), g(-1, 0)], vec![g(-1, 0), g(1, 0)]],
        (Axis::Y, true) => vec![vec![g(1, 0), g(0, -1)], vec![g(0, 1), g(1, 0)]],
        (Axis::Y, false) => vec![vec![g(1, 0), g(0, 1)], vec![g(0, -1), g(1, 0)]],
    };
    ExactMatrix::from_rows(rows).expect("2x2")
}

pub fn projector(axis: Axis, k: u8) -> Projector {
    Projector::new(matrix(axis, k)).expect("spin-½ matrices are projectors")
}

pub fn context(axis: Axis) -> MaximalContext {
    MaximalContext::new(axis.label(), vec![matrix(axis, 1), matrix(axis, 2)])
        .expect("spin-½ pairs are maximal contexts")
}

pub fn contexts() -> Vec<MaximalContext> {
    Axis::ALL.into_iter().map(context).collect()
}

/// `P1z, P2z, P1x, P2x, P1y, P2y`.
pub fn all_projectors() -> Vec<Projector> {
    Axis::ALL
        .into_iter()
        .flat_map(|a| [projector(a, 1), projector(a, 2)])
        .collect()
}

/// The column-space family in the order
/// `{0}, [a;0], [0;a], [a;a], [a;−a], [ia;a], [a;ia], C²`.
pub fn column_space_family() -> Vec<Subspace> {
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    let line =
        |a: GaussianRational, b: GaussianRational| Subspace::line(&ExactVector::new(vec![a, b]));
    vec![
        Subspace::zero(2),
        line(one.clone(), GaussianRational::zero()),
        line(GaussianRational::zero(), one.clone()),
        line(one.clone(), one.clone()),
        line(one.clone(), -one.clone()),
        line(i.clone(), one.clone()),
        line(one, i),
        Subspace::full(2),
    ]
}
