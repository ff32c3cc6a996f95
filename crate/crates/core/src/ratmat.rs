//! Dense matrices over the exact rationals.
//!
//! Everything downstream (hom solving, kernels, resolutions) reduces to
//! reduced row echelon form here, so the pivoting and nullspace-basis
//! conventions below fix the bases used throughout the engine:
//! pivots are the first nonzero entry scanning rows top-down, and the
//! nullspace basis vector for free column `f` has a `1` at `f` and the
//! back-substituted pivot entries elsewhere.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = BigRational;

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Row-major dense matrix over `Q`. Zero-dimensional shapes are legal and
/// behave as the empty matrix of that shape.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![q_zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, q_one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| q_int(n)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut m = QMat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn set_col(&mut self, c: usize, v: &[Q]) {
        assert_eq!(v.len(), self.rows);
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    /// Flattened row-major entries, cloned.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Q) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    /// Stacks matrices left to right. All must have the same row count.
    pub fn hstack(parts: &[&QMat]) -> QMat {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows));
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = QMat::zeros(rows, cols);
        let mut off = 0;
        for m in parts {
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, off + c, m.get(r, c).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    /// Stacks matrices top to bottom. All must have the same column count.
    /// An empty list yields the 0x`cols_hint` matrix.
    pub fn vstack(parts: &[&QMat], cols_hint: usize) -> QMat {
        let cols = parts.first().map_or(cols_hint, |m| m.cols);
        assert!(parts.iter().all(|m| m.cols == cols));
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = QMat::zeros(rows, cols);
        let mut off = 0;
        for m in parts {
            for r in 0..m.rows {
                for c in 0..cols {
                    out.set(off + r, c, m.get(r, c).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    pub fn block_diag(parts: &[&QMat]) -> QMat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = QMat::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(ro + r, co + c, m.get(r, c).clone());
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Matrix applied to a column vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = q_zero();
                for c in 0..self.cols {
                    let e = self.get(r, c);
                    if !e.is_zero() {
                        acc += e * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // first nonzero entry in this column at or below `row`
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &factor * m.get(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right nullspace. The returned matrix has one
    /// column per free column of the RREF (in increasing column order), and
    /// `free[k]` is the column index where basis column `k` carries its `1`.
    /// A vector known to lie in the span therefore has coordinate `k` equal
    /// to its entry at `free[k]`.
    pub fn nullspace(&self) -> (QMat, Vec<usize>) {
        let (r, pivots) = self.rref();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = QMat::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, q_one());
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(p, k, -r.get(i, f).clone());
            }
        }
        (basis, free)
    }

    /// Solves `self * x = rhs` column by column; `None` when inconsistent.
    pub fn solve(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, rhs.rows());
        let aug = QMat::hstack(&[self, rhs]);
        let (r, pivots) = aug.rref();
        // any pivot beyond the coefficient block means inconsistency
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = QMat::zeros(self.cols, rhs.cols());
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols() {
                x.set(p, c, r.get(i, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Pretty one-line form for diagnostics.
    pub fn brief(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }
}

impl Mul for &QMat {
    type Output = QMat;

    fn mul(self, rhs: &QMat) -> QMat {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch: {} * {}",
            self.brief(),
            rhs.brief()
        );
        let mut out = QMat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }
}

impl Add for &QMat {
    type Output = QMat;

    fn add(self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QMat {
    type Output = QMat;

    fn sub(self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &QMat {
    type Output = QMat;

    fn neg(self) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// JSON-friendly exact matrix: entries are `[numerator, denominator]` pairs
/// rendered as decimal strings so arbitrary-precision values survive.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct JsonMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[String; 2]>,
}

impl JsonMat {
    pub fn encode(m: &QMat) -> JsonMat {
        JsonMat {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .data
                .iter()
                .map(|q| {
                    let q = q.reduced();
                    let (mut num, mut den) = (q.numer().clone(), q.denom().clone());
                    if den.is_negative() {
                        num = -num;
                        den = -den;
                    }
                    [num.to_string(), den.to_string()]
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> crate::error::Result<QMat> {
        use crate::error::Error;
        if self.data.len() != self.rows * self.cols {
            return Err(Error::Parse("matrix entry count mismatch".into()));
        }
        let mut data = Vec::with_capacity(self.data.len());
        for [n, d] in &self.data {
            let num: BigInt = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?;
            let den: BigInt = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            data.push(Q::new(num, den));
        }
        Ok(QMat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let m = QMat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rank(), 2);
        // rows after the rank are zero
        assert!((0..3).all(|c| r.get(2, c).is_zero()));
    }

    #[test]
    fn nullspace_structure() {
        // x + 2y + 3z = 0 has a 2-dimensional nullspace with free columns 1, 2
        let m = QMat::from_int_rows(&[&[1, 2, 3]]);
        let (basis, free) = m.nullspace();
        assert_eq!(free, vec![1, 2]);
        assert_eq!(basis.cols(), 2);
        assert!((&m * &basis).is_zero());
        // coordinate-extraction convention: identity at the free rows
        for k in 0..free.len() {
            for (j, &fj) in free.iter().enumerate() {
                let expect = if j == k { q_one() } else { q_zero() };
                assert_eq!(*basis.get(fj, k), expect);
            }
        }
    }

    #[test]
    fn nullspace_of_empty_constraints_is_full() {
        let m = QMat::zeros(0, 4);
        let (basis, free) = m.nullspace();
        assert!(basis.is_identity());
        assert_eq!(free, vec![0, 1, 2, 3]);
    }

    #[test]
    fn zero_dimensional_shapes() {
        let a = QMat::zeros(0, 3);
        let b = QMat::zeros(3, 2);
        let c = &a * &b;
        assert_eq!((c.rows(), c.cols()), (0, 2));
        assert_eq!(QMat::zeros(2, 0).rank(), 0);
        let (basis, free) = QMat::zeros(2, 0).nullspace();
        assert_eq!((basis.rows(), basis.cols()), (0, 0));
        assert!(free.is_empty());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = QMat::from_int_rows(&[&[2, 0], &[0, 3]]);
        let b = QMat::from_int_rows(&[&[4], &[9]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);

        let bad = QMat::from_int_rows(&[&[1, 1], &[2, 2]]);
        let rhs = QMat::from_int_rows(&[&[1], &[3]]);
        assert!(bad.solve(&rhs).is_none());
    }

    #[test]
    fn json_round_trip() {
        let m = QMat::from_rows(vec![
            vec![q_ratio(1, 2), q_int(-3)],
            vec![q_zero(), q_ratio(-7, 5)],
        ]);
        let enc = JsonMat::encode(&m);
        assert_eq!(enc.decode().unwrap(), m);
    }
}
