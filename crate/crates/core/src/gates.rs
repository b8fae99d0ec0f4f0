//! Diagonal multi-control-Z circuits as phase polynomials over GF(q).
//!
//! A gate `C^{m-1}Z^β[t_0, …, t_{m-1}]` multiplies the basis state
//! `|x_0 … x_{m-1}⟩` by `ω^{tr(β x_0 ⋯ x_{m-1})}`, `ω = e^{2πi/p}`. Phases are
//! kept as exponents in `Z_p`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::css::{CssError, QuantumCode};
use crate::family::FamilyInstance;
use crate::gf::{Elem, FieldSpec};
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GateError {
    #[error("label {label} is not a {kind} label of the instance")]
    UnknownLabel { label: usize, kind: &'static str },
    #[error("expected {expected} blocks, found {found}")]
    BlockMismatch { expected: usize, found: usize },
    #[error("gate has {found} targets, circuit arity is {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("arity {m} unsupported: need 2 <= m <= {m_max}")]
    ArityUnsupported { m: usize, m_max: usize },
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{value} is not an element of GF({q})")]
    NotInField { value: u32, q: u32 },
    #[error("group index {index} out of range")]
    BadSigma { index: usize },
    #[error("no unique group element maps {from} to {to}")]
    NonRegular { from: usize, to: usize },
    #[error("modulation vector is not a codeword")]
    NotInCode,
    #[error("{needed} term tuples exceed budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error(transparent)]
    Css(#[from] CssError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LogicalGate {
    pub gamma: Elem,
    /// Logical labels, entry `j` in code block `j`.
    pub targets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PhysicalGate {
    pub exponent: Elem,
    /// Physical labels, entry `j` in code block `j`.
    pub targets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogicalCircuit {
    pub m: usize,
    pub gates: Vec<LogicalGate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhysicalCircuit {
    pub m: usize,
    pub gates: Vec<PhysicalGate>,
}

/// `M = Σ_{Q∈S} γ_Q u_Q^{-1} g̃_Q`, evaluated on all instance coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulationSpec {
    pub gamma: BTreeMap<usize, Elem>,
    pub m_vector: Vec<Elem>,
}

impl ModulationSpec {
    /// The support set `S`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.gamma.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.m_vector.iter().all(|x| x.is_zero())
    }
}

fn check_elem(field: &FieldSpec, a: Elem) -> Result<(), GateError> {
    if field.contains(a) {
        Ok(())
    } else {
        Err(GateError::NotInField {
            value: a.0,
            q: field.q(),
        })
    }
}

pub fn modulation_build(qc: &QuantumCode, gamma: &BTreeMap<usize, Elem>) -> Result<ModulationSpec, GateError> {
    let f = qc.field();
    let mut m_vector = vec![Elem::ZERO; qc.instance.len()];
    for (&label, &g) in gamma {
        let i = qc.css.logical_index(label).ok_or(GateError::UnknownLabel {
            label,
            kind: "logical",
        })?;
        check_elem(f, g)?;
        let c = f.mul(g, f.inv(qc.css.u_log[i]).expect("twist entries are nonzero"));
        linalg::axpy(f, &mut m_vector, c, &qc.form.logical_row(i));
    }
    if !qc.instance.code().contains_vector(&m_vector) {
        return Err(GateError::NotInCode);
    }
    Ok(ModulationSpec {
        gamma: gamma.clone(),
        m_vector,
    })
}

fn sigma_perms<'a>(
    instance: &'a FamilyInstance,
    sigmas: &[usize],
) -> Result<Vec<&'a crate::perm::Permutation>, GateError> {
    sigmas
        .iter()
        .map(|&s| instance.group().get(s).ok_or(GateError::BadSigma { index: s }))
        .collect()
}

/// `∏_P C^{m-1}Z^{-u_P M(P)}[P, σ_1(P), …, σ_{m-1}(P)]` over the physical
/// labels, zero exponents omitted.
pub fn physical_layer(qc: &QuantumCode, modulation: &ModulationSpec, sigmas: &[usize]) -> Result<Vec<PhysicalGate>, GateError> {
    let f = qc.field();
    let perms = sigma_perms(&qc.instance, sigmas)?;
    let mut gates = Vec::new();
    for (&p, &u) in qc.css.physical_labels.iter().zip(&qc.css.u_phys) {
        let exponent = f.neg(f.mul(u, modulation.m_vector[p]));
        if exponent.is_zero() {
            continue;
        }
        let mut targets = vec![p];
        targets.extend(perms.iter().map(|s| s.apply(p)));
        gates.push(PhysicalGate { exponent, targets });
    }
    Ok(gates)
}

/// The logical gates `C^{m-1}Z^{γ_Q}[Q, σ_1(Q), …]`, `Q ∈ S`, that a layer
/// implements.
pub fn layer_logical_gates(
    instance: &FamilyInstance,
    modulation: &ModulationSpec,
    sigmas: &[usize],
) -> Result<Vec<LogicalGate>, GateError> {
    let perms = sigma_perms(instance, sigmas)?;
    Ok(modulation
        .gamma
        .iter()
        .filter(|(_, g)| !g.is_zero())
        .map(|(&q, &gamma)| {
            let mut targets = vec![q];
            targets.extend(perms.iter().map(|s| s.apply(q)));
            LogicalGate { gamma, targets }
        })
        .collect())
}

fn resolve(labels: &[usize], index: impl Fn(usize) -> Option<usize>, kind: &'static str) -> Result<Vec<usize>, GateError> {
    labels
        .iter()
        .map(|&l| index(l).ok_or(GateError::UnknownLabel { label: l, kind }))
        .collect()
}

fn check_blocks(values: &[Vec<Elem>], expected_blocks: usize, len: usize) -> Result<(), GateError> {
    if values.len() != expected_blocks {
        return Err(GateError::BlockMismatch {
            expected: expected_blocks,
            found: values.len(),
        });
    }
    for v in values {
        if v.len() != len {
            return Err(GateError::LengthMismatch {
                expected: len,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// A circuit with targets resolved to column indices, ready for repeated
/// evaluation.
#[derive(Debug, Clone)]
pub struct PhaseProgram {
    field: FieldSpec,
    m: usize,
    terms: Vec<(Elem, Vec<usize>)>,
}

impl PhaseProgram {
    pub fn logical(qc: &QuantumCode, gates: &[LogicalGate]) -> Result<Self, GateError> {
        Self::build(qc.field(), gates.iter().map(|g| (g.gamma, &g.targets[..])), |l| qc.css.logical_index(l), "logical")
    }

    pub fn physical(qc: &QuantumCode, gates: &[PhysicalGate]) -> Result<Self, GateError> {
        Self::build(qc.field(), gates.iter().map(|g| (g.exponent, &g.targets[..])), |l| qc.css.physical_index(l), "physical")
    }

    fn build<'a>(
        field: &FieldSpec,
        gates: impl Iterator<Item = (Elem, &'a [usize])>,
        index: impl Fn(usize) -> Option<usize> + Copy,
        kind: &'static str,
    ) -> Result<Self, GateError> {
        let mut m = None;
        let mut terms = Vec::new();
        for (coef, targets) in gates {
            check_elem(field, coef)?;
            let expected = *m.get_or_insert(targets.len());
            if targets.len() != expected {
                return Err(GateError::ArityMismatch {
                    expected,
                    found: targets.len(),
                });
            }
            terms.push((coef, resolve(targets, index, kind)?));
        }
        Ok(PhaseProgram {
            field: field.clone(),
            m: m.unwrap_or(0),
            terms,
        })
    }

    /// Arity, or 0 for the empty circuit.
    pub fn arity(&self) -> usize {
        self.m
    }

    /// `Σ_gates coef · Π_j v_j[t_j]` before the trace.
    pub fn field_value<V: AsRef<[Elem]>>(&self, values: &[V]) -> Elem {
        let f = &self.field;
        let mut acc = Elem::ZERO;
        for (coef, idx) in &self.terms {
            let mut prod = *coef;
            for (v, &i) in values.iter().zip(idx) {
                if prod.is_zero() {
                    break;
                }
                prod = f.mul(prod, v.as_ref()[i]);
            }
            acc = f.add(acc, prod);
        }
        acc
    }

    pub fn phase<V: AsRef<[Elem]>>(&self, values: &[V]) -> u32 {
        self.field.trace_exponent(self.field_value(values))
    }
}

/// `Σ_gates tr(γ Π_j x^j[target_j])` in `Z_p`; `x[j]` is indexed by logical
/// position.
pub fn logical_phase(qc: &QuantumCode, gates: &[LogicalGate], x: &[Vec<Elem>]) -> Result<u32, GateError> {
    let prog = PhaseProgram::logical(qc, gates)?;
    if prog.arity() == 0 {
        return Ok(0);
    }
    check_blocks(x, prog.arity(), qc.css.k)?;
    Ok(prog.phase(x))
}

/// `Σ_gates tr(β Π_j f^j[target_j])` in `Z_p`; `strings[j]` is indexed by
/// physical position.
pub fn physical_phase(qc: &QuantumCode, gates: &[PhysicalGate], strings: &[Vec<Elem>]) -> Result<u32, GateError> {
    let prog = PhaseProgram::physical(qc, gates)?;
    if prog.arity() == 0 {
        return Ok(0);
    }
    check_blocks(strings, prog.arity(), qc.css.n)?;
    Ok(prog.phase(strings))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Pass { checked: u64 },
    Fail { witness: Vec<usize>, lhs: Elem, rhs: Elem },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }
}

/// Calls `visit` on every tuple in `0..base` of the given length, first
/// entry slowest. Stops early when `visit` returns false.
fn for_each_tuple(len: usize, base: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if base == 0 && len > 0 {
        return;
    }
    let mut t = vec![0usize; len];
    loop {
        if !visit(&t) {
            return;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Checks, for every tuple of generator rows `(b^0, …, b^{m-1})`,
///
/// `Σ_{P phys} u_P M(P) b^0(P) Π_j b^j(σ_j(P)) = −Σ_{Q∈S} γ_Q b^0(Q) Π_j b^j(σ_j(Q))`.
///
/// Both sides are multilinear, so the identity extends to all codewords.
pub fn verify_main_theorem(qc: &QuantumCode, modulation: &ModulationSpec, sigmas: &[usize]) -> Result<Verdict, GateError> {
    let f = qc.field();
    let inst = &qc.instance;
    let perms = sigma_perms(inst, sigmas)?;
    let rows: Matrix = (0..qc.form.dim()).map(|i| qc.form.row_in_instance_order(i)).collect();
    // pulled[j][r][P] = row r at σ_j(P), with σ_0 = id
    let mut pulled = vec![rows.clone()];
    for s in &perms {
        pulled.push(rows.iter().map(|r| s.pull_back(r)).collect());
    }
    let physical: Vec<(usize, Elem)> = qc
        .css
        .physical_labels
        .iter()
        .zip(&qc.css.u_phys)
        .map(|(&p, &u)| (p, f.mul(u, modulation.m_vector[p])))
        .collect();
    let support: Vec<(usize, Elem)> = modulation.gamma.iter().map(|(&q, &g)| (q, g)).collect();
    let m = perms.len() + 1;
    let product = |t: &[usize], at: usize| {
        t.iter()
            .enumerate()
            .fold(Elem::ONE, |acc, (j, &r)| f.mul(acc, pulled[j][r][at]))
    };
    let mut verdict = None;
    let mut checked = 0u64;
    for_each_tuple(m, rows.len(), |t| {
        let lhs = physical
            .iter()
            .fold(Elem::ZERO, |acc, &(p, c)| f.add(acc, f.mul(c, product(t, p))));
        let rhs = f.neg(
            support
                .iter()
                .fold(Elem::ZERO, |acc, &(q, g)| f.add(acc, f.mul(g, product(t, q)))),
        );
        checked += 1;
        if lhs != rhs {
            verdict = Some(Verdict::Fail {
                witness: t.to_vec(),
                lhs,
                rhs,
            });
            return false;
        }
        true
    });
    Ok(verdict.unwrap_or(Verdict::Pass { checked }))
}

/// Checks `Σ_i u_i f^0(i) ⋯ f^m(i) = 0` for every `(m+1)`-tuple of generator
/// rows of the instance code. On failure `lhs` is the sum and `rhs` zero.
pub fn corollary_sum_check(instance: &FamilyInstance, m: usize) -> Verdict {
    let f = instance.field();
    let gens = instance.code().gens();
    let u = instance.u().entries();
    let n = instance.len();
    let mut verdict = None;
    let mut checked = 0u64;
    let mut acc = vec![Elem::ZERO; n];
    for_each_tuple(m + 1, gens.len(), |t| {
        acc.copy_from_slice(u);
        for &r in t {
            for (a, &g) in acc.iter_mut().zip(&gens[r]) {
                *a = f.mul(*a, g);
            }
        }
        let sum = acc.iter().fold(Elem::ZERO, |s, &x| f.add(s, x));
        checked += 1;
        if !sum.is_zero() {
            verdict = Some(Verdict::Fail {
                witness: t.to_vec(),
                lhs: sum,
                rhs: Elem::ZERO,
            });
            return false;
        }
        true
    });
    verdict.unwrap_or(Verdict::Pass { checked })
}

/// Phase exponents for every tuple of terms of `m` sparse states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOutcome {
    /// Term count of each state.
    pub shape: Vec<usize>,
    /// Exponents in odometer order, first state slowest.
    pub exponents: Vec<u32>,
}

impl SparseOutcome {
    pub fn get(&self, terms: &[usize]) -> u32 {
        let idx = terms.iter().zip(&self.shape).fold(0, |acc, (&t, &s)| acc * s + t);
        self.exponents[idx]
    }

    /// The common exponent if every term tuple picks up the same phase.
    pub fn uniform(&self) -> Option<u32> {
        let first = *self.exponents.first()?;
        self.exponents.iter().all(|&e| e == first).then_some(first)
    }
}

/// Applies a diagonal physical circuit to a tensor product of states, each
/// given by its computational strings (equal amplitudes).
pub fn sparse_apply<S: AsRef<[Vec<Elem>]>>(
    qc: &QuantumCode,
    gates: &[PhysicalGate],
    states: &[S],
    budget: u64,
) -> Result<SparseOutcome, GateError> {
    let states: Vec<&[Vec<Elem>]> = states.iter().map(|s| s.as_ref()).collect();
    let prog = PhaseProgram::physical(qc, gates)?;
    if prog.arity() != 0 && prog.arity() != states.len() {
        return Err(GateError::BlockMismatch {
            expected: prog.arity(),
            found: states.len(),
        });
    }
    for s in &states {
        check_blocks(s, s.len(), qc.css.n)?;
    }
    let shape: Vec<usize> = states.iter().map(|s| s.len()).collect();
    let needed = shape.iter().map(|&s| s as u128).product::<u128>();
    if needed > budget as u128 {
        return Err(GateError::BudgetExceeded { needed, budget });
    }
    let mut exponents = Vec::with_capacity(needed as usize);
    let mut picked: Vec<&[Elem]> = vec![&[]; states.len()];
    let mut t = vec![0usize; states.len()];
    if needed > 0 {
        loop {
            for (j, &i) in t.iter().enumerate() {
                picked[j] = &states[j][i];
            }
            exponents.push(prog.phase(&picked));
            let mut j = t.len();
            let mut carried_out = true;
            while j > 0 {
                j -= 1;
                t[j] += 1;
                if t[j] < shape[j] {
                    carried_out = false;
                    break;
                }
                t[j] = 0;
            }
            if carried_out {
                break;
            }
        }
    }
    Ok(SparseOutcome { shape, exponents })
}
