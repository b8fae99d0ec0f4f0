//! Linear codes over GF(q): duals, Schur powers, twists, exhaustive distance
//! and the multiplication property `u ⋆ C^{⋆m} ⊆ C^⊥`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Elem, FieldBlock, FieldError, FieldSpec};
use crate::linalg::{self, axpy, Echelon, Matrix};
use crate::perm::Permutation;

/// Default cap on enumerated messages or supports.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("row {row} has length {len}, expected {n}")]
    RowLength { row: usize, len: usize, n: usize },
    #[error("generator rows are linearly dependent")]
    DependentRows,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("codes are defined over different fields")]
    FieldMismatch,
    #[error("twist vector has a zero entry at coordinate {0}")]
    ZeroTwistEntry(usize),
    #[error("code is the full space; its dual is the zero code")]
    DegenerateCode,
    #[error("code has dimension zero")]
    ZeroDimensional,
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("the all-ones vector is not a codeword")]
    AllOnesMissing,
    #[error("permutation {index} is not an automorphism of the code")]
    NotAutomorphism { index: usize },
    #[error("permutation acts on {got} coordinates, code has length {n}")]
    PermutationLength { got: usize, n: usize },
    #[error("multiplication order must be at least 1")]
    ZeroOrder,
}

/// Serialized code: `{ "field": {...}, "n": int, "gens": [[int, ...], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeBlock {
    pub field: FieldBlock,
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

/// A linear code given by a generator matrix with independent rows.
/// Zero-dimensional codes have no rows but keep their length.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    gens: Matrix,
    echelon: Echelon,
}

/// Same row space, same field.
impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.echelon == other.echelon
    }
}

impl Eq for LinearCode {}

fn check_rows(field: &FieldSpec, n: usize, rows: &[Vec<Elem>]) -> Result<(), CodeError> {
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CodeError::RowLength {
                row: i,
                len: row.len(),
                n,
            });
        }
        if let Some(bad) = row.iter().find(|&&x| !field.contains(x)) {
            return Err(FieldError::OutOfRange {
                value: bad.0,
                q: field.q(),
            }
            .into());
        }
    }
    Ok(())
}

impl LinearCode {
    /// Wraps an independent generator matrix; rows are kept as given.
    pub fn new(field: FieldSpec, n: usize, gens: Matrix) -> Result<Self, CodeError> {
        check_rows(&field, n, &gens)?;
        let echelon = linalg::rref(&field, &gens, n);
        if echelon.rank() != gens.len() {
            return Err(CodeError::DependentRows);
        }
        Ok(LinearCode {
            field,
            n,
            gens,
            echelon,
        })
    }

    /// The span of arbitrary rows; the generator matrix is its reduced echelon form.
    pub fn from_spanning(field: FieldSpec, n: usize, rows: &[Vec<Elem>]) -> Result<Self, CodeError> {
        check_rows(&field, n, rows)?;
        let echelon = linalg::rref(&field, rows, n);
        Ok(LinearCode {
            field,
            n,
            gens: echelon.rows.clone(),
            echelon,
        })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinearCode {
            field,
            n,
            gens: Vec::new(),
            echelon: Echelon {
                rows: Vec::new(),
                pivots: Vec::new(),
            },
        }
    }

    pub fn full_space(field: FieldSpec, n: usize) -> Self {
        let gens = (0..n)
            .map(|i| {
                let mut v = vec![Elem::ZERO; n];
                v[i] = Elem::ONE;
                v
            })
            .collect();
        LinearCode::new(field, n, gens).expect("identity rows are independent")
    }

    /// Evaluations of `1, x, ..., x^{k-1}` at `points`, one row per monomial.
    pub fn reed_solomon(field: FieldSpec, points: &[Elem], k: usize) -> Result<Self, CodeError> {
        let gens = (0..k)
            .map(|d| points.iter().map(|&x| field.pow(x, d as u64)).collect())
            .collect();
        LinearCode::new(field, points.len(), gens)
    }

    /// RS code evaluated at every field element in canonical order.
    pub fn reed_solomon_full(field: FieldSpec, k: usize) -> Result<Self, CodeError> {
        let points: Vec<Elem> = field.elements().collect();
        Self::reed_solomon(field, &points, k)
    }

    pub fn from_block(block: &CodeBlock) -> Result<Self, CodeError> {
        let field = FieldSpec::from_block(&block.field)?;
        let gens = block
            .gens
            .iter()
            .map(|r| r.iter().map(|&x| Elem(x)).collect())
            .collect();
        LinearCode::new(field, block.n, gens)
    }

    pub fn to_block(&self) -> CodeBlock {
        CodeBlock {
            field: self.field.to_block(),
            n: self.n,
            gens: self
                .gens
                .iter()
                .map(|r| r.iter().map(|x| x.0).collect())
                .collect(),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &Matrix {
        &self.gens
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; self.n];
        for (row, &c) in self.gens.iter().zip(message) {
            axpy(&self.field, &mut v, c, row);
        }
        v
    }

    pub fn contains_vector(&self, v: &[Elem]) -> bool {
        v.len() == self.n && self.echelon.contains(&self.field, v)
    }

    /// Subspace test: every generator of `inner` lies in `self`.
    pub fn contains(&self, inner: &LinearCode) -> Result<bool, CodeError> {
        self.compatible(inner)?;
        Ok(inner.gens.iter().all(|g| self.contains_vector(g)))
    }

    fn compatible(&self, other: &LinearCode) -> Result<(), CodeError> {
        if self.field != other.field {
            return Err(CodeError::FieldMismatch);
        }
        if self.n != other.n {
            return Err(CodeError::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// The dual under the standard inner product. The dual of the full
    /// space is the zero code.
    pub fn dual(&self) -> LinearCode {
        let rows = linalg::null_space(&self.field, &self.gens, self.n);
        LinearCode::new(self.field.clone(), self.n, rows).expect("null space basis is independent")
    }

    /// As [`dual`](Self::dual) but refuses full-space input.
    pub fn try_dual(&self) -> Result<LinearCode, CodeError> {
        if self.dim() == self.n {
            return Err(CodeError::DegenerateCode);
        }
        Ok(self.dual())
    }

    /// Span of all `m`-fold coordinatewise products of codewords.
    pub fn schur_power(&self, m: usize) -> Result<LinearCode, CodeError> {
        if m == 0 {
            return Err(CodeError::ZeroOrder);
        }
        let f = &self.field;
        let mut current = self.echelon.rows.clone();
        for _ in 1..m {
            let products: Matrix = current
                .iter()
                .flat_map(|a| {
                    self.gens
                        .iter()
                        .map(move |g| a.iter().zip(g).map(|(&x, &y)| f.mul(x, y)).collect())
                })
                .collect();
            current = linalg::rref(f, &products, self.n).rows;
        }
        LinearCode::from_spanning(f.clone(), self.n, &current)
    }

    /// `u ⋆ C`: every codeword scaled coordinatewise by `u`.
    pub fn twist(&self, u: &TwistVector) -> Result<LinearCode, CodeError> {
        if u.len() != self.n {
            return Err(CodeError::LengthMismatch {
                left: u.len(),
                right: self.n,
            });
        }
        let gens = self.gens.iter().map(|g| u.apply(&self.field, g)).collect();
        LinearCode::new(self.field.clone(), self.n, gens)
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains_vector(&vec![Elem::ONE; self.n])
    }

    /// Exact minimum distance by enumerating messages. Only messages whose
    /// first nonzero coefficient is 1 are visited; stops early at weight 1.
    pub fn min_distance(&self, budget: u64) -> Result<usize, CodeError> {
        if self.is_zero() {
            return Err(CodeError::ZeroDimensional);
        }
        let needed = (self.field.q() as u128).pow(self.dim() as u32);
        if needed > budget as u128 {
            return Err(CodeError::BudgetExceeded { needed, budget });
        }
        let mut best = usize::MAX;
        for_each_normalized_codeword(&self.field, &self.gens, self.n, |v| {
            let w = linalg::weight(v);
            if w < best {
                best = w;
            }
            best > 1
        });
        Ok(best)
    }

    /// Minimum distance of the dual, computed as the smallest number of
    /// linearly dependent columns of the generator matrix.
    pub fn dual_distance(&self, budget: u64) -> Result<usize, CodeError> {
        if self.dim() == self.n {
            return Err(CodeError::DegenerateCode);
        }
        let mut examined: u128 = 0;
        // any dim + 1 columns are dependent
        for w in 1..=(self.dim() + 1).min(self.n) {
            let mut idx: Vec<usize> = (0..w).collect();
            loop {
                examined += 1;
                if examined > budget as u128 {
                    return Err(CodeError::BudgetExceeded {
                        needed: examined,
                        budget,
                    });
                }
                if !self.columns_independent(&idx) {
                    return Ok(w);
                }
                if !linalg::next_combination(&mut idx, self.n) {
                    break;
                }
            }
        }
        unreachable!("dim + 1 <= n columns are always dependent")
    }

    /// True iff every `t` columns are independent, i.e. the dual distance
    /// exceeds `t`. Only the `t`-subsets need checking.
    pub fn dual_distance_exceeds(&self, t: usize, budget: u64) -> Result<bool, CodeError> {
        if t == 0 {
            return Ok(true);
        }
        if t > self.dim() || t > self.n {
            return Ok(false);
        }
        let mut examined: u128 = 0;
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            examined += 1;
            if examined > budget as u128 {
                return Err(CodeError::BudgetExceeded { needed: examined, budget });
            }
            if !self.columns_independent(&idx) {
                return Ok(false);
            }
            if !linalg::next_combination(&mut idx, self.n) {
                return Ok(true);
            }
        }
    }

    /// True iff the columns indexed by `cols` are linearly independent.
    pub fn columns_independent(&self, cols: &[usize]) -> bool {
        linalg::column_rank(&self.field, &self.gens, cols) == cols.len()
    }

    /// True iff pulling every generator back along `perm` stays in the code.
    pub fn is_invariant_under(&self, perm: &Permutation) -> Result<bool, CodeError> {
        if perm.len() != self.n {
            return Err(CodeError::PermutationLength {
                got: perm.len(),
                n: self.n,
            });
        }
        Ok(self.gens.iter().all(|g| self.contains_vector(&perm.pull_back(g))))
    }

    /// True iff the group generated by `group` moves coordinate 0 everywhere.
    pub fn is_transitive(&self, group: &[Permutation]) -> Result<bool, CodeError> {
        for (index, p) in group.iter().enumerate() {
            if !self.is_invariant_under(p)? {
                return Err(CodeError::NotAutomorphism { index });
            }
        }
        if self.n == 0 {
            return Ok(true);
        }
        Ok(orbit(0, self.n, group).len() == self.n)
    }

    /// `u ⋆ C^{⋆m} ⊆ C^⊥`.
    pub fn has_multiplication_property(&self, u: &TwistVector, m: usize) -> Result<bool, CodeError> {
        let power = self.schur_power(m)?;
        let twisted = power.twist(u)?;
        self.dual().contains(&twisted)
    }

    /// The multiplication property for every order `1..=m`. Requires the
    /// all-ones vector in the code, under which a single check at `m`
    /// already implies the lower orders.
    pub fn has_multiplication_property_up_to(
        &self,
        u: &TwistVector,
        m: usize,
    ) -> Result<bool, CodeError> {
        if !self.contains_all_ones() {
            return Err(CodeError::AllOnesMissing);
        }
        for order in 1..=m {
            if !self.has_multiplication_property(u, order)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Orbit of `start` under the group generated by `gens`.
pub fn orbit(start: usize, n: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(i) = stack.pop() {
        for g in gens {
            let j = g.apply(i);
            if !seen[j] {
                seen[j] = true;
                out.push(j);
                stack.push(j);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Calls `visit` on each codeword whose leading message coefficient is 1.
/// `visit` returns false to stop.
pub(crate) fn for_each_normalized_codeword(
    field: &FieldSpec,
    rows: &[Vec<Elem>],
    n: usize,
    mut visit: impl FnMut(&[Elem]) -> bool,
) {
    for lead in 0..rows.len() {
        if !for_each_with_lead(field, &rows[lead], &rows[lead + 1..], n, &mut visit) {
            return;
        }
    }
}

/// Visits `lead + Σ c_i tail_i` for every coefficient vector `c`. Returns
/// false if `visit` asked to stop.
pub(crate) fn for_each_with_lead(
    field: &FieldSpec,
    lead: &[Elem],
    tail: &[Vec<Elem>],
    n: usize,
    visit: &mut impl FnMut(&[Elem]) -> bool,
) -> bool {
    let q = field.q();
    let mut coeffs = vec![0u32; tail.len()];
    let mut v = lead.to_vec();
    debug_assert_eq!(v.len(), n);
    loop {
        if !visit(&v) {
            return false;
        }
        // odometer step, updating v incrementally
        let mut i = 0;
        while i < tail.len() {
            let old = Elem(coeffs[i]);
            let new = Elem((coeffs[i] + 1) % q);
            coeffs[i] = new.0;
            axpy(field, &mut v, field.sub(new, old), &tail[i]);
            if new.0 != 0 {
                break;
            }
            i += 1;
        }
        if i == tail.len() {
            return true;
        }
    }
}

/// Smallest weight of a vector `v` with `a_rows · v = 0` and `b_rows · v ≠ 0`,
/// found by scanning supports of growing size. A support `T` carries such a
/// vector iff `rank([A; B]_T) > rank(A_T)`. Returns `None` when no such
/// vector exists. The budget bounds the number of supports examined.
pub fn min_weight_by_supports(
    field: &FieldSpec,
    n: usize,
    a_rows: &[Vec<Elem>],
    b_rows: &[Vec<Elem>],
    budget: u64,
) -> Result<Option<usize>, CodeError> {
    let mut stacked: Matrix = a_rows.to_vec();
    stacked.extend_from_slice(b_rows);
    let mut examined: u128 = 0;
    for w in 1..=n {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            examined += 1;
            if examined > budget as u128 {
                return Err(CodeError::BudgetExceeded {
                    needed: examined,
                    budget,
                });
            }
            if linalg::column_rank(field, &stacked, &idx) > linalg::column_rank(field, a_rows, &idx)
            {
                return Ok(Some(w));
            }
            if !linalg::next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// A coordinatewise scaling with no zero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistVector {
    entries: Vec<Elem>,
}

/// Serialized twist: `{ "u": [int, ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistBlock {
    pub u: Vec<u32>,
}

impl TwistVector {
    pub fn new(entries: Vec<Elem>) -> Result<Self, CodeError> {
        if let Some(i) = entries.iter().position(|x| x.is_zero()) {
            return Err(CodeError::ZeroTwistEntry(i));
        }
        Ok(TwistVector { entries })
    }

    pub fn all_ones(n: usize) -> Self {
        TwistVector {
            entries: vec![Elem::ONE; n],
        }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Elem {
        self.entries[i]
    }

    pub fn inverse(&self, field: &FieldSpec) -> TwistVector {
        TwistVector {
            entries: self
                .entries
                .iter()
                .map(|&x| field.inv(x).expect("twist entries are nonzero"))
                .collect(),
        }
    }

    pub fn apply(&self, field: &FieldSpec, v: &[Elem]) -> Vec<Elem> {
        v.iter()
            .zip(&self.entries)
            .map(|(&x, &u)| field.mul(x, u))
            .collect()
    }

    pub fn to_block(&self) -> TwistBlock {
        TwistBlock {
            u: self.entries.iter().map(|x| x.0).collect(),
        }
    }

    pub fn from_block(field: &FieldSpec, block: &TwistBlock) -> Result<Self, CodeError> {
        let entries = block
            .u
            .iter()
            .map(|&x| field.elem(x))
            .collect::<Result<Vec<_>, _>>()?;
        TwistVector::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(q_exp: u32, k: usize) -> LinearCode {
        LinearCode::reed_solomon_full(FieldSpec::gf(2, q_exp), k).unwrap()
    }

    fn e(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    /// Independent check of `u ⋆ C^{⋆m} ⊆ C^⊥`: every (m+1)-tuple of generator
    /// rows has vanishing twisted sum.
    fn tuple_sum_oracle(c: &LinearCode, u: &TwistVector, m: usize) -> bool {
        let f = c.field();
        let k = c.dim();
        let total = k.pow(m as u32 + 1);
        (0..total).all(|mut t| {
            let mut prod = u.entries().to_vec();
            for _ in 0..=m {
                let row = &c.gens()[t % k];
                t /= k;
                for (p, &x) in prod.iter_mut().zip(row) {
                    *p = f.mul(*p, x);
                }
            }
            prod.iter().fold(Elem::ZERO, |a, &b| f.add(a, b)).is_zero()
        })
    }

    #[test]
    fn repetition_code_is_self_dual() {
        let f = FieldSpec::gf(2, 1);
        let c = LinearCode::new(f, 2, vec![e(&[1, 1])]).unwrap();
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn rs16_dual_is_rs16_12() {
        let c = rs(4, 4);
        let expected = rs(4, 12);
        let f = c.field().clone();
        // brute-force inner products of the two monomial bases
        for a in c.gens() {
            for b in expected.gens() {
                assert!(f.dot(a, b).is_zero());
            }
        }
        assert_eq!(c.dual(), expected);
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn full_space_dual_is_zero() {
        let c = LinearCode::full_space(FieldSpec::gf(2, 1), 2);
        assert!(c.dual().is_zero());
        assert_eq!(c.dual().len(), 2);
        assert_eq!(c.try_dual().unwrap_err(), CodeError::DegenerateCode);
    }

    #[test]
    fn schur_powers_of_rs16() {
        let c = rs(4, 4);
        assert_eq!(c.schur_power(1).unwrap(), c);
        assert_eq!(c.schur_power(2).unwrap(), rs(4, 7));
        assert_eq!(c.schur_power(3).unwrap(), rs(4, 10));
        assert_eq!(c.schur_power(0).unwrap_err(), CodeError::ZeroOrder);
    }

    #[test]
    fn twist_examples() {
        let c = rs(3, 3);
        let f = c.field().clone();
        assert_eq!(c.twist(&TwistVector::all_ones(8)).unwrap(), c);
        let u = TwistVector::new(f.elements().skip(1).chain([Elem(5)]).collect()).unwrap();
        let back = c.twist(&u).unwrap().twist(&u.inverse(&f)).unwrap();
        assert_eq!(back, c);

        let f4 = FieldSpec::gf(2, 2);
        let c = LinearCode::new(f4.clone(), 2, vec![e(&[1, 1])]).unwrap();
        let u = TwistVector::new(e(&[1, 2])).unwrap();
        assert_eq!(c.twist(&u).unwrap().gens(), &vec![e(&[1, 2])]);
        assert!(matches!(
            c.twist(&TwistVector::all_ones(3)),
            Err(CodeError::LengthMismatch { .. })
        ));
        assert_eq!(
            TwistVector::new(e(&[1, 0])).unwrap_err(),
            CodeError::ZeroTwistEntry(1)
        );
    }

    #[test]
    fn containment_examples() {
        let c = rs(4, 4);
        assert!(c.contains(&c).unwrap());
        assert!(rs(4, 12).contains(&rs(4, 10)).unwrap());
        assert!(!c.contains(&rs(4, 12)).unwrap());
        assert!(matches!(c.contains(&rs(3, 2)), Err(CodeError::FieldMismatch)));
    }

    #[test]
    fn min_distance_examples() {
        let f = FieldSpec::gf(2, 1);
        let rep = LinearCode::new(f, 3, vec![e(&[1, 1, 1])]).unwrap();
        assert_eq!(rep.min_distance(DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(rs(4, 4).min_distance(DEFAULT_BUDGET).unwrap(), 13);
        assert_eq!(rs(3, 3).min_distance(DEFAULT_BUDGET).unwrap(), 6);
        assert!(matches!(
            rs(4, 4).min_distance(100),
            Err(CodeError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dual_distance_threshold() {
        let c = rs(4, 4);
        for t in 0..=4 {
            assert!(c.dual_distance_exceeds(t, DEFAULT_BUDGET).unwrap());
        }
        assert!(!c.dual_distance_exceeds(5, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn dual_distance_by_columns_matches_enumeration() {
        let c = rs(3, 3);
        assert_eq!(c.dual_distance(DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(c.dual().min_distance(DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(rs(4, 4).dual_distance(DEFAULT_BUDGET).unwrap(), 5);
    }

    #[test]
    fn multiplication_property_examples() {
        let c = rs(4, 4);
        let u = TwistVector::all_ones(16);
        for m in 1..=3 {
            assert!(c.has_multiplication_property(&u, m).unwrap());
            assert!(tuple_sum_oracle(&c, &u, m));
        }
        assert!(!c.has_multiplication_property(&u, 4).unwrap());
        assert!(!tuple_sum_oracle(&c, &u, 4));
        let c8 = rs(3, 3);
        assert!(c8.has_multiplication_property(&TwistVector::all_ones(8), 2).unwrap());
        assert!(!c8.has_multiplication_property(&TwistVector::all_ones(8), 3).unwrap());
    }

    #[test]
    fn downgrade_examples() {
        let c = rs(4, 4);
        let u = TwistVector::all_ones(16);
        assert!(c.has_multiplication_property_up_to(&u, 3).unwrap());
        assert_eq!(
            c.has_multiplication_property_up_to(&u, 3).unwrap(),
            c.has_multiplication_property(&u, 3).unwrap()
        );
        assert!(rs(3, 3)
            .has_multiplication_property_up_to(&TwistVector::all_ones(8), 2)
            .unwrap());
        let f = FieldSpec::gf(2, 1);
        let no_ones = LinearCode::new(f, 3, vec![e(&[1, 0, 0])]).unwrap();
        assert_eq!(
            no_ones
                .has_multiplication_property_up_to(&TwistVector::all_ones(3), 1)
                .unwrap_err(),
            CodeError::AllOnesMissing
        );
    }

    fn translation(field: &FieldSpec, shift: Elem) -> Permutation {
        Permutation::new(field.elements().map(|x| field.add(x, shift).0 as usize).collect())
            .unwrap()
    }

    #[test]
    fn invariance_examples() {
        let c = rs(4, 4);
        let f = c.field().clone();
        assert!(c.is_invariant_under(&Permutation::identity(16)).unwrap());
        assert!(c.is_invariant_under(&translation(&f, Elem::ONE)).unwrap());
        let swap = Permutation::transposition(16, 0, 1);
        assert!(!c.is_invariant_under(&swap).unwrap());
        // the row of x pulled back along the swap differs from x in two
        // places, so it cannot be a codeword of a distance-13 code
        let x_row = &c.gens()[1];
        assert!(!c.contains_vector(&swap.pull_back(x_row)));
    }

    #[test]
    fn transitivity_examples() {
        let c = rs(4, 4);
        let f = c.field().clone();
        let all: Vec<_> = f.elements().map(|v| translation(&f, v)).collect();
        assert!(c.is_transitive(&all).unwrap());
        assert!(!c.is_transitive(&[Permutation::identity(16)]).unwrap());
        let pair = [Permutation::identity(16), translation(&f, Elem::ONE)];
        assert!(!c.is_transitive(&pair).unwrap());
        assert_eq!(orbit(0, 16, &pair), vec![0, 1]);
        assert_eq!(
            c.is_transitive(&[Permutation::identity(16), Permutation::transposition(16, 0, 1)])
                .unwrap_err(),
            CodeError::NotAutomorphism { index: 1 }
        );
    }

    #[test]
    fn code_block_round_trip() {
        let c = rs(3, 3);
        let block = c.to_block();
        let json = serde_json::to_string(&block).unwrap();
        let back = LinearCode::from_block(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.gens(), c.gens());
        let mut bad = block.clone();
        bad.gens[1].pop();
        assert!(matches!(
            LinearCode::from_block(&bad),
            Err(CodeError::RowLength { row: 1, .. })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_code() -> impl Strategy<Value = LinearCode> {
            (prop_oneof![Just((2u32, 1u32)), Just((2, 2)), Just((3, 1)), Just((5, 1))], 2usize..7)
                .prop_flat_map(|((p, e), n)| {
                    let q = p.pow(e);
                    (Just((p, e, n)), proptest::collection::vec(proptest::collection::vec(0..q, n), 1..n))
                })
                .prop_map(|((p, e, n), rows)| {
                    let f = FieldSpec::gf(p, e);
                    let rows: Vec<Vec<Elem>> =
                        rows.into_iter().map(|r| r.into_iter().map(Elem).collect()).collect();
                    LinearCode::from_spanning(f, n, &rows).unwrap()
                })
        }

        proptest! {
            #[test]
            fn duality(c in small_code()) {
                let d = c.dual();
                prop_assert_eq!(d.dim(), c.len() - c.dim());
                prop_assert_eq!(d.dual(), c.clone());
                for a in c.gens() {
                    for b in d.gens() {
                        prop_assert!(c.field().dot(a, b).is_zero());
                    }
                }
            }

            #[test]
            fn twist_preserves_distance(c in small_code(), seed in any::<u64>()) {
                prop_assume!(!c.is_zero());
                let f = c.field().clone();
                let u: Vec<Elem> = (0..c.len())
                    .map(|i| Elem(1 + ((seed >> (3 * i)) as u32 % (f.q() - 1))))
                    .collect();
                let u = TwistVector::new(u).unwrap();
                let t = c.twist(&u).unwrap();
                prop_assert_eq!(t.dim(), c.dim());
                prop_assert_eq!(t.min_distance(DEFAULT_BUDGET).unwrap(), c.min_distance(DEFAULT_BUDGET).unwrap());
            }

            #[test]
            fn multiplication_property_matches_tuple_sums(c in small_code(), m in 1usize..3) {
                let u = TwistVector::all_ones(c.len());
                prop_assert_eq!(c.has_multiplication_property(&u, m).unwrap(), tuple_sum_oracle(&c, &u, m));
            }
        }

        #[test]
        fn rs_codes_are_mds() {
            for (p, e) in [(2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4)] {
                let f = FieldSpec::gf(p, e);
                let q = f.q() as usize;
                for k in 1..q.min(5) {
                    let c = LinearCode::reed_solomon_full(f.clone(), k).unwrap();
                    prop_assert_eq_helper(c.min_distance(DEFAULT_BUDGET).unwrap(), q - k + 1);
                    prop_assert_eq_helper(c.dual_distance(DEFAULT_BUDGET).unwrap(), k + 1);
                }
            }
        }

        fn prop_assert_eq_helper(a: usize, b: usize) {
            assert_eq!(a, b);
        }

        #[test]
        fn schur_powers_are_monotone_with_all_ones() {
            for c in [rs(4, 4), rs(3, 3), rs(3, 2)] {
                assert!(c.contains_all_ones());
                for m in 1..4 {
                    let lo = c.schur_power(m).unwrap();
                    let hi = c.schur_power(m + 1).unwrap();
                    assert!(hi.contains(&lo).unwrap());
                }
            }
        }
    }
}
