//! Dense row reduction over GF(q).

use crate::gf::{Elem, FieldSpec};

pub type Matrix = Vec<Vec<Elem>>;

/// Reduced row echelon form. Pivots are found by scanning columns left to
/// right and taking the first row with a nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the echelon rows, returning the remainder.
    pub fn reduce(&self, field: &FieldSpec, v: &[Elem]) -> Vec<Elem> {
        let mut r = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = r[pc];
            if !c.is_zero() {
                axpy(field, &mut r, field.neg(c), row);
            }
        }
        r
    }

    pub fn contains(&self, field: &FieldSpec, v: &[Elem]) -> bool {
        self.reduce(field, v).iter().all(|x| x.is_zero())
    }

    /// Coefficients `c` with `v = sum_i c_i rows[i]`, if `v` is in the span.
    pub fn coordinates(&self, field: &FieldSpec, v: &[Elem]) -> Option<Vec<Elem>> {
        let coeffs: Vec<Elem> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let mut r = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&coeffs) {
            if !c.is_zero() {
                axpy(field, &mut r, field.neg(c), row);
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(coeffs)
    }
}

/// `y += a * x`.
#[inline]
pub fn axpy(field: &FieldSpec, y: &mut [Elem], a: Elem, x: &[Elem]) {
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = field.add(*yi, field.mul(a, xi));
        }
    }
}

pub fn scale(field: &FieldSpec, a: Elem, x: &[Elem]) -> Vec<Elem> {
    x.iter().map(|&xi| field.mul(a, xi)).collect()
}

pub fn rref(field: &FieldSpec, rows: &[Vec<Elem>], ncols: usize) -> Echelon {
    rref_with_order(field, rows, &(0..ncols).collect::<Vec<_>>())
}

/// Row reduction where pivot columns are searched in `col_order`.
pub fn rref_with_order(field: &FieldSpec, rows: &[Vec<Elem>], col_order: &[usize]) -> Echelon {
    let mut m: Matrix = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in col_order {
        if r == m.len() {
            break;
        }
        let Some(found) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        m[r] = scale(field, inv, &m[r]);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = field.neg(row[c]);
                axpy(field, row, f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

pub fn rank(field: &FieldSpec, rows: &[Vec<Elem>], ncols: usize) -> usize {
    rref(field, rows, ncols).rank()
}

/// Rank of the submatrix on the given columns.
pub fn column_rank(field: &FieldSpec, rows: &[Vec<Elem>], cols: &[usize]) -> usize {
    let sub: Matrix = rows
        .iter()
        .map(|row| cols.iter().map(|&c| row[c]).collect())
        .collect();
    rank(field, &sub, cols.len())
}

/// Basis of `{ v : rows * v = 0 }`.
pub fn null_space(field: &FieldSpec, rows: &[Vec<Elem>], ncols: usize) -> Matrix {
    let ech = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Elem::ZERO; ncols];
            v[f] = Elem::ONE;
            for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                v[pc] = field.neg(row[f]);
            }
            v
        })
        .collect()
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}
