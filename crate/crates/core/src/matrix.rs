//! Dense exact matrices and vectors over [`GaussianRational`], with the
//! row-reduction kernel everything else is built on.

use std::fmt;

use crate::error::Error;
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactVector {
    entries: Vec<GaussianRational>,
}

impl ExactVector {
    pub fn new(entries: Vec<GaussianRational>) -> Self {
        ExactVector { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![GaussianRational::zero(); dim])
    }

    /// Standard basis vector `e_k` of length `dim`.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.entries[k] = GaussianRational::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self::new(xs.iter().map(|&x| GaussianRational::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<GaussianRational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.entries.iter().map(GaussianRational::conj).collect())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self::new(self.entries.iter().map(|x| x * s).collect())
    }

    /// Hermitian inner product `Σ conj(self_i) · other_i`.
    pub fn inner(&self, other: &ExactVector) -> Result<GaussianRational, Error> {
        check_dim("inner product", self.dim(), other.dim())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn add(&self, other: &ExactVector) -> Result<ExactVector, Error> {
        check_dim("vector addition", self.dim(), other.dim())?;
        Ok(Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &ExactVector) -> Result<ExactVector, Error> {
        check_dim("vector subtraction", self.dim(), other.dim())?;
        Ok(Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }
}

impl std::ops::Index<usize> for ExactVector {
    type Output = GaussianRational;
    fn index(&self, i: usize) -> &GaussianRational {
        &self.entries[i]
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A dense row-major matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Result of [`ExactMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn check_dim(op: &'static str, expected: usize, found: usize) -> Result<(), Error> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            expected,
            found,
        })
    }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        check_dim("matrix construction", rows * cols, entries.len())?;
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedRows {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Self::new(n, cols, entries)
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(vectors: &[ExactVector]) -> Result<Self, Error> {
        Self::from_rows(vectors.iter().map(|v| v.entries().to_vec()).collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = GaussianRational::one();
        }
        m
    }

    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> ExactVector {
        ExactVector::new(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<ExactVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column_vectors(&self) -> Vec<ExactVector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussianRational>> {
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    fn map(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        self.map(|x| x * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<(), Error> {
        check_dim(op, self.rows, other.rows)?;
        check_dim(op, self.cols, other.cols)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_shape(other, "matrix addition")?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_shape(other, "matrix subtraction")?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, Error> {
        check_dim("matrix multiplication", self.cols, other.rows)?;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a * other.get(k, c));
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector, Error> {
        check_dim("matrix-vector product", self.cols, v.dim())?;
        Ok(ExactVector::new(
            (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
                .collect(),
        ))
    }

    pub fn trace(&self) -> Result<GaussianRational, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|k| self.get(k, k).clone()).sum())
    }

    /// Row-major flattening into a vector of length `rows·cols`.
    pub fn vectorize(&self) -> ExactVector {
        ExactVector::new(self.entries.clone())
    }

    /// Reduced row-echelon form. Pivots are chosen as the first nonzero
    /// entry at or below the current row, scanning columns left to right.
    pub fn rref(&self) -> Rref {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&k| !m[k][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().expect("pivot is nonzero");
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = m[r].clone();
            for (k, row) in m.iter_mut().enumerate() {
                if k == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&f * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: ExactMatrix {
                rows: self.rows,
                cols: self.cols,
                entries: m.into_iter().flatten().collect(),
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<ExactVector> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(k, free);
            }
            basis.push(ExactVector::new(v));
        }
        basis
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let augmented: Vec<Vec<GaussianRational>> = self
            .to_rows()
            .into_iter()
            .enumerate()
            .map(|(r, mut row)| {
                row.extend((0..n).map(|c| {
                    if r == c {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                }));
                row
            })
            .collect();
        let reduced = ExactMatrix::from_rows(augmented)?.rref();
        if reduced.pivots.iter().copied().take(n).ne(0..n) {
            return Err(Error::Singular);
        }
        let m = reduced.matrix;
        let entries = (0..n)
            .flat_map(|r| (n..2 * n).map(move |c| (r, c)))
            .map(|(r, c)| m.get(r, c).clone())
            .collect();
        ExactMatrix::new(n, n, entries)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Incrementally maintained reduced echelon basis of a span of vectors of a
/// fixed length. Each stored row has a leading one at its pivot and zeros in
/// every other row's pivot column.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &ExactVector) -> Result<bool, Error> {
        check_dim("span membership", self.len, v.dim())?;
        Ok(self
            .reduce(v.entries())
            .iter()
            .all(GaussianRational::is_zero))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &ExactVector) -> Result<bool, Error> {
        check_dim("span insertion", self.len, v.dim())?;
        let mut r = self.reduce(v.entries());
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    fn half(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_ints(rows).unwrap().scale(&q(1, 2))
    }

    fn p1y() -> ExactMatrix {
        let h = q(1, 2);
        let ih = GaussianRational::complex(0, 1, 1, 2);
        ExactMatrix::from_rows(vec![vec![h.clone(), -&ih], vec![ih, h]]).unwrap()
    }

    // Entrywise Σ_k a[r][k]·b[k][c] without going through matmul.
    fn product_oracle(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        let mut rows = Vec::new();
        for r in 0..a.rows() {
            let mut row = Vec::new();
            for c in 0..b.cols() {
                let mut s = GaussianRational::zero();
                for k in 0..a.cols() {
                    s = s + a.get(r, k) * b.get(k, c);
                }
                row.push(s);
            }
            rows.push(row);
        }
        ExactMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn orthogonal_z_projectors_multiply_to_zero() {
        let p1 = ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]).unwrap();
        let p2 = ExactMatrix::from_ints(&[&[0, 0], &[0, 1]]).unwrap();
        assert!(p1.matmul(&p2).unwrap().is_zero());
        assert!(p2.matmul(&p1).unwrap().is_zero());
    }

    #[test]
    fn identity_is_neutral() {
        let p1x = half(&[&[1, 1], &[1, 1]]);
        assert_eq!(ExactMatrix::identity(2).matmul(&p1x).unwrap(), p1x);
    }

    #[test]
    fn p1z_times_p1x() {
        let p1z = ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]).unwrap();
        let p1x = half(&[&[1, 1], &[1, 1]]);
        let expected = product_oracle(&p1z, &p1x);
        assert_eq!(expected, half(&[&[1, 1], &[0, 0]]));
        assert_eq!(p1z.matmul(&p1x).unwrap(), expected);
    }

    #[test]
    fn matmul_rejects_bad_shapes() {
        let a = ExactMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(p1y().adjoint(), p1y());
        let n = ExactMatrix::from_ints(&[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(
            n.adjoint(),
            ExactMatrix::from_ints(&[&[0, 0], &[1, 0]]).unwrap()
        );
        let i = ExactMatrix::from_rows(vec![vec![GaussianRational::i()]]).unwrap();
        assert_eq!(
            i.adjoint(),
            ExactMatrix::from_rows(vec![vec![-GaussianRational::i()]]).unwrap()
        );
    }

    #[test]
    fn rref_examples() {
        let r = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]).unwrap().rref();
        assert_eq!(
            r.matrix,
            ExactMatrix::from_ints(&[&[1, 1], &[0, 0]]).unwrap()
        );
        assert_eq!((r.rank, r.pivots), (1, vec![0]));

        let r = ExactMatrix::identity(2).rref();
        assert_eq!(r.matrix, ExactMatrix::identity(2));
        assert_eq!((r.rank, r.pivots), (2, vec![0, 1]));

        let r = p1y().rref();
        let expected = ExactMatrix::from_rows(vec![
            vec![GaussianRational::one(), -GaussianRational::i()],
            vec![GaussianRational::zero(), GaussianRational::zero()],
        ])
        .unwrap();
        assert_eq!(r.matrix, expected);
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
        // both original rows lie in the row space of the reduced row
        let mut span = EchelonBasis::new(2);
        span.insert(&expected.row(0)).unwrap();
        for row in p1y().row_vectors() {
            assert!(span.contains(&row).unwrap());
        }
    }

    #[test]
    fn null_space_examples() {
        let p1z = ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]).unwrap();
        assert_eq!(p1z.null_space(), vec![ExactVector::from_ints(&[0, 1])]);
        assert!(ExactMatrix::identity(2).null_space().is_empty());
        let p1x = half(&[&[1, 1], &[1, 1]]);
        assert_eq!(p1x.null_space(), vec![ExactVector::from_ints(&[-1, 1])]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = ExactMatrix::from_rows(vec![
            vec![GaussianRational::int(2), GaussianRational::i()],
            vec![GaussianRational::int(1), GaussianRational::int(3)],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).unwrap().is_identity());
        let singular = ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.inverse(), Err(Error::Singular));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(ExactMatrix::from_rows(vec![]), Err(Error::EmptyMatrix));
        assert!(matches!(
            ExactMatrix::from_ints(&[&[1, 2], &[3]]),
            Err(Error::RaggedRows { row: 1, .. })
        ));
    }

    #[test]
    fn echelon_basis_tracks_rank() {
        let mut span = EchelonBasis::new(3);
        assert!(span.insert(&ExactVector::from_ints(&[1, 1, 0])).unwrap());
        assert!(span.insert(&ExactVector::from_ints(&[0, 1, 1])).unwrap());
        assert!(!span.insert(&ExactVector::from_ints(&[1, 2, 1])).unwrap());
        assert!(span.contains(&ExactVector::from_ints(&[1, 0, -1])).unwrap());
        assert!(!span.contains(&ExactVector::from_ints(&[0, 0, 1])).unwrap());
        assert_eq!(span.rank(), 2);
    }
}
