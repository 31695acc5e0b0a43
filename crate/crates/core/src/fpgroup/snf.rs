//! Smith normal form over the integers with unimodular transforms.
//!
//! Arithmetic is carried out in `i128` with overflow checks; an overflow is a
//! bug for the matrix sizes handled here and aborts with a panic.

use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// `cols` is needed for matrices without rows.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = x as i128;
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

    pub fn column(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = checked_mul(a, other[(k, j)]);
                    out[(i, j)] = checked_add(out[(i, j)], t);
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a = self.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[(k, k)] == 0 {
                match (k + 1..n).find(|&i| a[(i, k)] != 0) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = checked_add(checked_mul(a[(i, j)], a[(k, k)]), -checked_mul(a[(i, k)], a[(k, j)]));
                    a[(i, j)] = num / prev;
                }
            }
            prev = a[(k, k)];
        }
        sign * a[(n - 1, n - 1)]
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
    fn add_row(&mut self, dst: usize, src: usize, k: i128) {
        for j in 0..self.cols {
            let t = checked_mul(k, self[(src, j)]);
            self[(dst, j)] = checked_add(self[(dst, j)], t);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i128) {
        for i in 0..self.rows {
            let t = checked_mul(k, self[(i, src)]);
            self[(i, dst)] = checked_add(self[(i, dst)], t);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<i128>> = (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)]).collect()).collect();
        write!(f, "{rows:?}")
    }
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in Smith normal form")
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in Smith normal form")
}

/// `d = p * r * q` with `p`, `q` unimodular and `d` diagonal with `d[0] | d[1] | ...`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn nonzero_count(&self) -> usize {
        self.d.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn smith_normal_form(r: &IntMatrix) -> SmithForm {
    let (m, n) = (r.rows(), r.cols());
    let mut d = r.clone();
    let mut p = IntMatrix::identity(m);
    let mut q = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_entry(&d, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        d.swap_rows(t, pi);
        p.swap_rows(t, pi);
        d.swap_cols(t, pj);
        q.swap_cols(t, pj);

        loop {
            let piv = d[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let k = d[(i, t)] / piv;
                if k != 0 {
                    d.add_row(i, t, -k);
                    p.add_row(i, t, -k);
                }
                clean &= d[(i, t)] == 0;
            }
            for j in t + 1..n {
                let k = d[(t, j)] / piv;
                if k != 0 {
                    d.add_col(j, t, -k);
                    q.add_col(j, t, -k);
                }
                clean &= d[(t, j)] == 0;
            }
            if !clean {
                // a remainder smaller than the pivot is left in row or column t
                let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (pi, pj) = smallest_entry(&d, cross).expect("pivot vanished");
                d.swap_rows(t, pi);
                p.swap_rows(t, pi);
                d.swap_cols(t, pj);
                q.swap_cols(t, pj);
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[(i, j)] % piv != 0));
            match bad {
                Some(i) => {
                    d.add_row(t, i, 1);
                    p.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    SmithForm { d, p, q }
}

fn smallest_entry(d: &IntMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells.filter(|&c| d[c] != 0).min_by_key(|&c| d[c].unsigned_abs())
}
