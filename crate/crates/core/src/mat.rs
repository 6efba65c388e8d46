//! Dense matrices over an exact field, with reduced row echelon form as the
//! canonical representative of a row space.

use crate::scalar::Scalar;

/// Row-major dense matrix. Zero-row matrices are allowed (the span of no
/// vectors), which is how the ambient space itself is keyed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        Mat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        for row in &rows {
            assert_eq!(row.len(), cols, "ragged rows");
        }
        let nrows = rows.len();
        Mat {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mat(&self, r: usize) -> Mat<T> {
        Mat::new(1, self.cols, self.row(r).to_vec())
    }

    fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = Vec::with_capacity((self.rows + other.rows) * self.cols);
        data.extend_from_slice(&self.data);
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// The first `k` rows as a new matrix.
    pub fn take_rows(&self, k: usize) -> Mat<T> {
        assert!(k <= self.rows);
        Mat {
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    /// Restrict to the given columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Mat<T> {
        Mat::from_fn(self.rows, cols.len(), |r, c| self.at(r, cols[c]).clone())
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.row(r).iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form and rank. The RREF is the unique canonical
    /// representative of the row space: two matrices have equal row spaces
    /// iff their nonzero RREF rows coincide.
    pub fn rref(&self) -> (Mat<T>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let pivot = m.at(r, c).clone();
            for j in c..m.cols {
                let v = m.at(r, j).clone() / pivot.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let factor = m.at(i, c).clone();
                for j in c..m.cols {
                    let v = m.at(i, j).clone() - factor.clone() * m.at(r, j).clone();
                    m.set(i, j, v);
                }
                m.set(i, c, T::zero());
            }
            pivots.push(c);
            r += 1;
        }
        (m, r)
    }

    /// The nonzero rows of the RREF: the canonical key of the row space.
    pub fn row_space_basis(&self) -> Mat<T> {
        let (m, rank) = self.rref();
        m.take_rows(rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Column indices of the RREF pivots.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let (m, rank) = self.rref();
        (0..rank)
            .map(|r| (0..m.cols).find(|&c| !m.at(r, c).is_zero()).unwrap())
            .collect()
    }
}

/// True iff the row space of `b` is contained in the row space of `a`,
/// tested as rank(a) = rank(a stacked with b).
pub fn span_contains<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> bool {
    assert_eq!(a.cols(), b.cols(), "column count mismatch");
    a.rank() == a.stack(b).rank()
}
