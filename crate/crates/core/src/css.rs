//! Standard form, puncturing and the CSS code built from a family instance.
//!
//! The generator matrix of the instance code is brought to the shape
//!
//! ```text
//!   [ I_k | G1 ]
//!   [ 0   | G0 ]
//! ```
//!
//! with the logical block's columns first. Deleting those columns leaves the
//! CSS pair `C0 = ker G0`, `C1 = rowspan [G1; G0]` on the physical
//! coordinates, with `C0^⊥ = rowspan G0 ⊆ C1`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{self, CodeError};
use crate::family::FamilyInstance;
use crate::gf::{Elem, FieldSpec};
use crate::linalg::{self, axpy, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CssError {
    #[error("logical columns {labels:?} are linearly dependent")]
    LogicalColumnsDependent { labels: Vec<usize> },
    #[error("rows {row_a} and {row_b} have twisted inner product {value}, breaking block independence")]
    IndependenceViolated {
        row_a: usize,
        row_b: usize,
        value: u32,
    },
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("rows of [G1; G0] are linearly dependent")]
    RankDeficient,
    #[error("the code encodes no logical qudits")]
    NoLogicalQudits,
    #[error("logical vector has length {got}, expected {k}")]
    LogicalLength { got: usize, k: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// The instance generator matrix reduced so that its top `k` rows are the
/// delta functions of the logical block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    /// `K × N`, columns in `column_order`.
    pub g_tilde: Matrix,
    pub k: usize,
    /// Column `j` of `g_tilde` is instance coordinate `column_order[j]`;
    /// the logical block comes first, then the physical labels ascending.
    pub column_order: Vec<usize>,
}

impl StandardForm {
    pub fn dim(&self) -> usize {
        self.g_tilde.len()
    }

    pub fn len(&self) -> usize {
        self.column_order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.column_order.is_empty()
    }

    /// Row `i` re-indexed by instance coordinate.
    pub fn row_in_instance_order(&self, i: usize) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; self.len()];
        for (j, &c) in self.column_order.iter().enumerate() {
            out[c] = self.g_tilde[i][j];
        }
        out
    }

    /// The full-length row `g̃_Q` for logical position `i` (instance order).
    pub fn logical_row(&self, i: usize) -> Vec<Elem> {
        assert!(i < self.k);
        self.row_in_instance_order(i)
    }
}

/// Reduces the instance generator matrix to standard form. Pivots are taken
/// in the logical block's order; the remaining rows are left as they come
/// out of the elimination, so an input already in standard form is returned
/// unchanged.
pub fn standard_form(instance: &FamilyInstance) -> Result<StandardForm, CssError> {
    let f = instance.field();
    let block = instance.logical_block();
    let k = block.len();
    let mut column_order = block.to_vec();
    column_order.extend(instance.physical_labels());
    let mut m: Matrix = instance
        .code()
        .gens()
        .iter()
        .map(|row| column_order.iter().map(|&c| row[c]).collect())
        .collect();

    for j in 0..k {
        let Some(found) = (j..m.len()).find(|&i| !m[i][j].is_zero()) else {
            // column j is a combination of the pivot columns 0..j
            let mut labels: Vec<usize> = (0..j.min(m.len()))
                .filter(|&i| !m[i][j].is_zero())
                .map(|i| block[i])
                .collect();
            labels.push(block[j]);
            return Err(CssError::LogicalColumnsDependent { labels });
        };
        m.swap(j, found);
        let inv = f.inv(m[j][j]).expect("pivot is nonzero");
        m[j] = linalg::scale(f, inv, &m[j]);
        let pivot = m[j].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != j && !row[j].is_zero() {
                let c = f.neg(row[j]);
                axpy(f, row, c, &pivot);
            }
        }
    }
    Ok(StandardForm {
        g_tilde: m,
        k,
        column_order,
    })
}

/// Serialized CSS artifact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CssBlock {
    pub k: usize,
    pub n: usize,
    pub g1: Vec<Vec<u32>>,
    pub g0: Vec<Vec<u32>>,
    pub u_phys: Vec<u32>,
    pub u_log: Vec<u32>,
    pub labels: LabelBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelBlock {
    pub physical: Vec<usize>,
    pub logical: Vec<usize>,
}

/// `CSS(C0, C1)` on the physical coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssCode {
    pub field: FieldSpec,
    pub k: usize,
    pub n: usize,
    /// `k × n`: the punctured delta rows `g_Q`, logical X operators.
    pub g1: Matrix,
    /// `(K − k) × n`: generators of `C0^⊥`.
    pub g0: Matrix,
    pub u_phys: Vec<Elem>,
    pub u_log: Vec<Elem>,
    /// Instance coordinates of the physical qudits, in column order.
    pub physical_labels: Vec<usize>,
    /// Instance coordinates of the logical qudits, in block order.
    pub logical_labels: Vec<usize>,
}

fn to_u32(m: &Matrix) -> Vec<Vec<u32>> {
    m.iter().map(|r| r.iter().map(|x| x.0).collect()).collect()
}

impl CssCode {
    pub fn physical_index(&self, label: usize) -> Option<usize> {
        self.physical_labels.iter().position(|&l| l == label)
    }

    pub fn logical_index(&self, label: usize) -> Option<usize> {
        self.logical_labels.iter().position(|&l| l == label)
    }

    /// Rows of `G = [G1; G0]`.
    pub fn rows(&self) -> impl Iterator<Item = &Vec<Elem>> {
        self.g1.iter().chain(&self.g0)
    }

    /// `⟨g_a, u ⋆ g_b⟩` over the physical coordinates for all rows of `G`.
    pub fn inner_product_table(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let twisted: Vec<Vec<Elem>> = self
            .rows()
            .map(|r| r.iter().zip(&self.u_phys).map(|(&x, &u)| f.mul(x, u)).collect())
            .collect();
        self.rows()
            .map(|a| twisted.iter().map(|b| f.dot(a, b)).collect())
            .collect()
    }

    /// Verifies that the table is nonzero exactly on the diagonal of the G1
    /// block, which forces `rowspan G0 ∩ rowspan G1 = 0` and full rank.
    pub fn check_independence(&self) -> Result<(), CssError> {
        let table = self.inner_product_table();
        for (a, row) in table.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                let want_nonzero = a == b && a < self.k;
                if v.is_zero() == want_nonzero {
                    return Err(CssError::IndependenceViolated {
                        row_a: a,
                        row_b: b,
                        value: v.0,
                    });
                }
            }
        }
        let all: Matrix = self.rows().cloned().collect();
        if linalg::rank(&self.field, &all, self.n) != all.len() {
            return Err(CssError::RankDeficient);
        }
        Ok(())
    }

    pub fn to_block(&self) -> CssBlock {
        CssBlock {
            k: self.k,
            n: self.n,
            g1: to_u32(&self.g1),
            g0: to_u32(&self.g0),
            u_phys: self.u_phys.iter().map(|x| x.0).collect(),
            u_log: self.u_log.iter().map(|x| x.0).collect(),
            labels: LabelBlock {
                physical: self.physical_labels.clone(),
                logical: self.logical_labels.clone(),
            },
        }
    }

    pub fn from_block(field: FieldSpec, block: &CssBlock) -> CssCode {
        let conv = |m: &Vec<Vec<u32>>| -> Matrix {
            m.iter().map(|r| r.iter().map(|&x| Elem(x)).collect()).collect()
        };
        CssCode {
            field,
            k: block.k,
            n: block.n,
            g1: conv(&block.g1),
            g0: conv(&block.g0),
            u_phys: block.u_phys.iter().map(|&x| Elem(x)).collect(),
            u_log: block.u_log.iter().map(|&x| Elem(x)).collect(),
            physical_labels: block.labels.physical.clone(),
            logical_labels: block.labels.logical.clone(),
        }
    }
}

/// Punctures the standard form on the logical columns and checks block
/// independence through the twisted inner-product table.
pub fn build_css(sf: &StandardForm, instance: &FamilyInstance) -> Result<CssCode, CssError> {
    let k = sf.k;
    let u = instance.u();
    let puncture = |rows: &[Vec<Elem>]| -> Matrix { rows.iter().map(|r| r[k..].to_vec()).collect() };
    let css = CssCode {
        field: instance.field().clone(),
        k,
        n: sf.len() - k,
        g1: puncture(&sf.g_tilde[..k]),
        g0: puncture(&sf.g_tilde[k..]),
        u_phys: sf.column_order[k..].iter().map(|&c| u.get(c)).collect(),
        u_log: sf.column_order[..k].iter().map(|&c| u.get(c)).collect(),
        physical_labels: sf.column_order[k..].to_vec(),
        logical_labels: sf.column_order[..k].to_vec(),
    };
    css.check_independence()?;
    Ok(css)
}

/// The `q^{K−k}` computational strings `Σ_Q x_Q g_Q + g`, `g ∈ rowspan G0`,
/// that make up the logical basis state `|x̄⟩` (all amplitudes equal).
pub fn logical_basis(css: &CssCode, x: &[Elem], budget: u64) -> Result<Vec<Vec<Elem>>, CssError> {
    if x.len() != css.k {
        return Err(CssError::LogicalLength {
            got: x.len(),
            k: css.k,
        });
    }
    let f = &css.field;
    let needed = (f.q() as u128).pow(css.g0.len() as u32);
    if needed > budget as u128 {
        return Err(CssError::BudgetExceeded { needed, budget });
    }
    let mut offset = vec![Elem::ZERO; css.n];
    for (row, &c) in css.g1.iter().zip(x) {
        axpy(f, &mut offset, c, row);
    }
    let mut out = Vec::with_capacity(needed as usize);
    let mut coeffs = vec![0u32; css.g0.len()];
    let mut v = offset;
    loop {
        out.push(v.clone());
        let mut i = 0;
        while i < coeffs.len() {
            let old = Elem(coeffs[i]);
            let new = Elem((coeffs[i] + 1) % f.q());
            coeffs[i] = new.0;
            axpy(f, &mut v, f.sub(new, old), &css.g0[i]);
            if new.0 != 0 {
                break;
            }
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CssDistance {
    pub dx: usize,
    pub dz: usize,
    pub d: usize,
}

/// Exact X and Z distances.
///
/// `dx` is the minimum weight over `C1 \ rowspan G0`, by enumerating the
/// messages whose G1 part is nonzero (`q^K` budget). `dz` is the minimum
/// weight over `C0 \ C1^⊥`, by scanning supports of increasing size: a
/// support carries such a vector iff adding the G1 rows raises the column
/// rank of G0 there.
pub fn css_distance(css: &CssCode, budget: u64) -> Result<CssDistance, CssError> {
    if css.k == 0 {
        return Err(CssError::NoLogicalQudits);
    }
    let f = &css.field;
    let total_rows = css.k + css.g0.len();
    let needed = (f.q() as u128).pow(total_rows as u32);
    if needed > budget as u128 {
        return Err(CssError::BudgetExceeded { needed, budget });
    }
    // leading nonzero coefficient on a G1 row, normalized to 1
    let rows: Matrix = css.rows().cloned().collect();
    let mut dx = usize::MAX;
    for lead in 0..css.k {
        let more = codes::for_each_with_lead(f, &rows[lead], &rows[lead + 1..], css.n, &mut |v| {
            dx = dx.min(linalg::weight(v));
            dx > 1
        });
        if !more {
            break;
        }
    }
    let dz = codes::min_weight_by_supports(f, css.n, &css.g0, &css.g1, budget)
        .map_err(|e| match e {
            CodeError::BudgetExceeded { needed, budget } => CssError::BudgetExceeded { needed, budget },
            other => CssError::Code(other),
        })?
        .ok_or(CssError::NoLogicalQudits)?;
    Ok(CssDistance {
        dx,
        dz,
        d: dx.min(dz),
    })
}

/// A family instance together with its standard form and CSS code.
#[derive(Debug, Clone)]
pub struct QuantumCode {
    pub instance: FamilyInstance,
    pub form: StandardForm,
    pub css: CssCode,
}

impl QuantumCode {
    pub fn new(instance: FamilyInstance) -> Result<Self, CssError> {
        let form = standard_form(&instance)?;
        let css = build_css(&form, &instance)?;
        Ok(QuantumCode {
            instance,
            form,
            css,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        self.instance.field()
    }

    pub fn k(&self) -> usize {
        self.css.k
    }
}
