//! Exact integer and rational matrix routines: fraction-free elimination,
//! Smith normal form and a column echelon form used to canonicalize charts.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`IntMatrix::from_rows`] but keeps the column count when `rows` is empty.
    pub fn from_rows_with_cols<R: AsRef<[i64]>>(rows: &[R], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Converts to `i64` rows, or `None` if any entry overflows.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_i64()).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Leading principal minors of a square matrix by fraction-free (Bareiss)
/// elimination without pivoting. Stops after the first vanishing minor, so
/// the result may be shorter than the matrix order.
pub fn leading_principal_minors(a: &IntMatrix) -> Vec<BigInt> {
    assert_eq!(a.nrows(), a.ncols(), "leading minors need a square matrix");
    let n = a.nrows();
    let mut m = a.clone();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[(k, k)].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &pivot - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
        }
        prev = pivot;
    }
    minors
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.nrows(), a.ncols(), "determinant needs a square matrix");
    let n = a.nrows();
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap_rows(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
        }
        prev = m[(k, k)].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &m[(n - 1, n - 1)]
    }
}

/// Solves `a * x = b` for a nonsingular square `a` over the rationals.
/// Forward elimination is fraction-free; only back substitution divides.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.nrows();
    assert_eq!(a.ncols(), n);
    assert_eq!(b.len(), n);
    let mut m = IntMatrix::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = a[(i, j)].clone();
        }
        m[(i, n)] = b[i].clone();
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[(i, k)].is_zero())?;
        m.swap_rows(p, k);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[(i, n)].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(m[(i, j)].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(m[(i, i)].clone());
    }
    Some(x)
}

/// Result of a Smith normal form computation: `p * m * q = d`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Diagonal entries `d_0 | d_1 | ...`, nonnegative; length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl Smith {
    /// The full diagonal matrix `d` with the shape of the input.
    pub fn d(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.p.nrows(), self.q.nrows());
        for (i, v) in self.diagonal.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms. Pivots on the entry of
/// smallest absolute value in the active block.
pub fn smith_normal_form(input: &IntMatrix) -> Smith {
    let rows = input.nrows();
    let cols = input.ncols();
    let mut m = input.clone();
    let mut p = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        loop {
            // smallest nonzero |entry| in the active block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = &m[(i, j)];
                    if v.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if m[(bi, bj)].abs() <= v.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap_rows(t, bi);
            p.swap_rows(t, bi);
            m.swap_cols(t, bj);
            q.swap_cols(t, bj);

            let pivot = m[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if m[(i, t)].is_zero() {
                    continue;
                }
                let k = -m[(i, t)].div_floor(&pivot);
                m.add_row(i, t, &k);
                p.add_row(i, t, &k);
                if !m[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[(t, j)].is_zero() {
                    continue;
                }
                let k = -m[(t, j)].div_floor(&pivot);
                m.add_col(j, t, &k);
                q.add_col(j, t, &k);
                if !m[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the active block
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    m.add_row(t, i, &one);
                    p.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if m[(t, t)].is_negative() {
            m.negate_row(t);
            p.negate_row(t);
        }
    }

    let diagonal = (0..steps).map(|i| m[(i, i)].clone()).collect();
    Smith { diagonal, p, q }
}

/// Column-echelon form processed from the last row upward: returns `(h, u)`
/// with `h = f * u`, `u` unimodular, and each pivot row of `h` (scanning from
/// the bottom) having a single positive entry in its pivot column with the
/// previous pivot columns reduced into `[0, pivot)`.
pub fn reverse_column_echelon(f: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = f.nrows();
    let cols = f.ncols();
    let mut h = f.clone();
    let mut u = IntMatrix::identity(cols);
    let mut next = 0usize;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for i in (0..rows).rev() {
        if next == cols {
            break;
        }
        // gcd-reduce the entries of row i in columns next.. into column `next`
        loop {
            let mut best: Option<usize> = None;
            for j in next..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if h[(i, b)].abs() <= h[(i, j)].abs() => {}
                    _ => best = Some(j),
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(next, b);
            u.swap_cols(next, b);
            let pivot = h[(i, next)].clone();
            let mut done = true;
            for j in next + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let k = -h[(i, j)].div_floor(&pivot);
                h.add_col(j, next, &k);
                u.add_col(j, next, &k);
                if !h[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(i, next)].is_zero() {
            continue;
        }
        if h[(i, next)].is_negative() {
            h.negate_col(next);
            u.negate_col(next);
        }
        let pivot = h[(i, next)].clone();
        for &(_, pc) in &pivots {
            let k = -h[(i, pc)].div_floor(&pivot);
            if !k.is_zero() {
                h.add_col(pc, next, &k);
                u.add_col(pc, next, &k);
            }
        }
        pivots.push((i, next));
        next += 1;
    }
    (h, u)
}

/// Inverse of a unimodular matrix, exact.
pub fn unimodular_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    let n = a.nrows();
    if a.ncols() != n {
        return None;
    }
    let mut inv = IntMatrix::zeros(n, n);
    for col in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[col] = BigInt::one();
        let x = solve_rational(a, &e)?;
        for (row, v) in x.into_iter().enumerate() {
            if !v.is_integer() {
                return None;
            }
            inv[(row, col)] = v.to_integer();
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn smith_of_diag_2_3() {
        let s = smith_normal_form(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        let m = big(&[&[2, 0], &[0, 3]]);
        assert_eq!(s.p.mul(&m).mul(&s.q), s.d());
    }

    #[test]
    fn smith_of_identity() {
        let s = smith_normal_form(&IntMatrix::identity(3));
        assert!(s.diagonal.iter().all(|d| d.is_one()));
    }

    #[test]
    fn smith_handles_empty_shapes() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert!(s.diagonal.is_empty());
        assert_eq!(s.q.nrows(), 3);
        let s = smith_normal_form(&IntMatrix::zeros(2, 0));
        assert_eq!(s.p.nrows(), 2);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&big(&[&[2, 1], &[4, 2]])), BigInt::zero());
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)), BigInt::one());
    }

    #[test]
    fn leading_minors_stop_at_zero() {
        let minors = leading_principal_minors(&big(&[&[0, 1], &[1, 0]]));
        assert_eq!(minors, vec![BigInt::zero()]);
        let minors = leading_principal_minors(&big(&[&[-2, 1], &[1, -3]]));
        assert_eq!(minors, vec![BigInt::from(-2), BigInt::from(5)]);
    }

    #[test]
    fn rational_solve() {
        let a = big(&[&[-2, 1], &[1, -3]]);
        let x = solve_rational(&a, &[BigInt::from(0), BigInt::from(-1)]).unwrap();
        // -2x + y = 0, x - 3y = -1  =>  x = 1/5, y = 2/5
        assert_eq!(x[0], BigRational::new(1.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(2.into(), 5.into()));
    }

    #[test]
    fn echelon_from_bottom() {
        let f = big(&[&[2, 1], &[4, 2], &[1, 0], &[0, 1]]);
        let (h, u) = reverse_column_echelon(&f);
        assert_eq!(f.mul(&u), h);
        assert!(determinant(&u).abs().is_one());
        assert_eq!(h.row(3), &[BigInt::from(1), BigInt::from(0)]);
        assert_eq!(h.row(2), &[BigInt::from(0), BigInt::from(1)]);
    }
}
