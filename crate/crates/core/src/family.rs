//! Code instances carrying a regular group action on a block of logical
//! coordinates, plus closed-form parameter bounds for the asymptotic family.
//!
//! An instance bundles everything the CSS construction and the gate compiler
//! consume: a code containing the all-ones word, a twist `u` with
//! `u ⋆ C^{⋆m} ⊆ C^⊥` up to `m_max`, a permutation group of code
//! automorphisms whose first element is the identity, and a logical block
//! `L` on which the group acts regularly. Generalized Reed-Solomon codes over
//! the full field with translations by an additive subgroup are the concrete
//! members built here.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{CodeBlock, CodeError, LinearCode, TwistVector, DEFAULT_BUDGET};
use crate::gf::{Elem, FieldSpec};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("multiplication property fails at order {order}")]
    MultiplicationTooWeak { order: usize },
    #[error("dual distance {dual_distance} does not exceed the logical block size {block}")]
    DualDistanceTooSmall { dual_distance: usize, block: usize },
    #[error("logical block is not a regular orbit of the group: {0}")]
    BlockNotCoset(String),
    #[error("group element {index} is not a code automorphism")]
    NotAutomorphism { index: usize },
    #[error("subgroup size {size} is not a power of {p} dividing {q}")]
    BadSubgroup { size: u32, p: u32, q: u32 },
    #[error("instance check `{check}` failed: {detail}")]
    Invalid { check: &'static str, detail: String },
}

/// Serialized instance:
/// `{ "code": {...}, "u": [...], "group": [[perm], ...], "logical_block": [...], "m_max": int }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceBlock {
    pub code: CodeBlock,
    pub u: Vec<u32>,
    pub group: Vec<Permutation>,
    pub logical_block: Vec<usize>,
    pub m_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    code: LinearCode,
    u: TwistVector,
    group: Vec<Permutation>,
    logical_block: Vec<usize>,
    m_max: usize,
}

/// One line of a validation report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    /// The mathematical statement being checked.
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// Whether `u` is fixed by every group element. Recorded, not required.
    pub twist_invariant: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{mark:4}  {:<22} {}", c.name, c.claim)?;
            if !c.detail.is_empty() {
                writeln!(f, "      {}", c.detail)?;
            }
        }
        Ok(())
    }
}

pub const CHECK_SHAPES: &str = "shapes";
pub const CHECK_ALL_ONES: &str = "all_ones";
pub const CHECK_IDENTITY: &str = "identity_first";
pub const CHECK_AUTOMORPHISM: &str = "automorphisms";
pub const CHECK_BLOCK: &str = "block_preserved";
pub const CHECK_REGULAR: &str = "regular_on_block";
pub const CHECK_CLOSED: &str = "group_closed";
pub const CHECK_DUAL_DISTANCE: &str = "dual_distance";
pub const CHECK_MULTIPLICATION: &str = "multiplication";

impl FamilyInstance {
    /// Builds an instance and rejects it unless every invariant holds.
    pub fn new(
        code: LinearCode,
        u: TwistVector,
        group: Vec<Permutation>,
        logical_block: Vec<usize>,
        m_max: usize,
    ) -> Result<Self, InstanceError> {
        let inst = Self::new_unchecked(code, u, group, logical_block, m_max);
        inst.ensure_valid()?;
        Ok(inst)
    }

    /// Builds an instance without validation. Downstream stages assume the
    /// invariants; use [`validate`](Self::validate) before relying on them.
    pub fn new_unchecked(
        code: LinearCode,
        u: TwistVector,
        group: Vec<Permutation>,
        logical_block: Vec<usize>,
        m_max: usize,
    ) -> Self {
        FamilyInstance {
            code,
            u,
            group,
            logical_block,
            m_max,
        }
    }

    pub fn from_block(block: &InstanceBlock) -> Result<Self, InstanceError> {
        let inst = Self::from_block_unchecked(block)?;
        inst.ensure_valid()?;
        Ok(inst)
    }

    /// Parses the code and twist but leaves the remaining invariants to
    /// [`validate`](Self::validate).
    pub fn from_block_unchecked(block: &InstanceBlock) -> Result<Self, InstanceError> {
        let code = LinearCode::from_block(&block.code)?;
        let u = TwistVector::new(
            block
                .u
                .iter()
                .map(|&x| code.field().elem(x))
                .collect::<Result<_, _>>()
                .map_err(CodeError::from)?,
        )?;
        Ok(Self::new_unchecked(
            code,
            u,
            block.group.clone(),
            block.logical_block.clone(),
            block.m_max,
        ))
    }

    pub fn to_block(&self) -> InstanceBlock {
        InstanceBlock {
            code: self.code.to_block(),
            u: self.u.to_block().u,
            group: self.group.clone(),
            logical_block: self.logical_block.clone(),
            m_max: self.m_max,
        }
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn field(&self) -> &FieldSpec {
        self.code.field()
    }

    pub fn u(&self) -> &TwistVector {
        &self.u
    }

    pub fn group(&self) -> &[Permutation] {
        &self.group
    }

    pub fn logical_block(&self) -> &[usize] {
        &self.logical_block
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    /// Number of logical qudits, `|L|`.
    pub fn k(&self) -> usize {
        self.logical_block.len()
    }

    /// Coordinates outside the logical block, ascending.
    pub fn physical_labels(&self) -> Vec<usize> {
        let mut in_block = vec![false; self.len()];
        for &q in &self.logical_block {
            in_block[q] = true;
        }
        (0..self.len()).filter(|&i| !in_block[i]).collect()
    }

    /// Copy with one group element replaced, for negative tests.
    pub fn with_group_element(&self, index: usize, perm: Permutation) -> Self {
        let mut out = self.clone();
        out.group[index] = perm;
        out
    }

    /// Copy with a different logical block, for negative tests.
    pub fn with_logical_block(&self, block: Vec<usize>) -> Self {
        let mut out = self.clone();
        out.logical_block = block;
        out
    }

    /// Copy with a different twist, for negative tests.
    pub fn with_twist(&self, u: TwistVector) -> Self {
        let mut out = self.clone();
        out.u = u;
        out
    }

    fn ensure_valid(&self) -> Result<(), InstanceError> {
        let report = self.validate();
        let Some(fail) = report.failures().next() else {
            return Ok(());
        };
        Err(match fail.name {
            CHECK_DUAL_DISTANCE => InstanceError::DualDistanceTooSmall {
                dual_distance: self.code.dual_distance(DEFAULT_BUDGET).unwrap_or(0),
                block: self.k(),
            },
            CHECK_MULTIPLICATION => {
                let order = (1..=self.m_max)
                    .find(|&m| !self.code.has_multiplication_property(&self.u, m).unwrap_or(false))
                    .unwrap_or(self.m_max);
                InstanceError::MultiplicationTooWeak { order }
            }
            CHECK_BLOCK | CHECK_REGULAR => InstanceError::BlockNotCoset(fail.detail.clone()),
            CHECK_AUTOMORPHISM => InstanceError::NotAutomorphism {
                index: self
                    .group
                    .iter()
                    .position(|g| !self.code.is_invariant_under(g).unwrap_or(false))
                    .unwrap_or(0),
            },
            name => InstanceError::Invalid {
                check: name,
                detail: fail.detail.clone(),
            },
        })
    }

    /// Re-checks every instance invariant from scratch. Failures are itemized
    /// rather than aborting; later checks are skipped only when the shapes
    /// are inconsistent.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let n = self.len();
        let shape_problem = self.shape_problem();
        checks.push(Check {
            name: CHECK_SHAPES,
            claim: "u, group and block live on the code's coordinates",
            passed: shape_problem.is_none(),
            detail: shape_problem.clone().unwrap_or_default(),
        });
        if shape_problem.is_some() {
            return ValidationReport {
                checks,
                twist_invariant: false,
            };
        }

        checks.push(Check {
            name: CHECK_ALL_ONES,
            claim: "the all-ones word is a codeword",
            passed: self.code.contains_all_ones(),
            detail: String::new(),
        });

        let id_ok = self.group.first().is_some_and(Permutation::is_identity);
        checks.push(Check {
            name: CHECK_IDENTITY,
            claim: "the first group element is the identity",
            passed: id_ok,
            detail: String::new(),
        });

        // f(σ(P)) read on P must again be a codeword, for every generator f
        let mut auto_detail = Vec::new();
        for (si, sigma) in self.group.iter().enumerate() {
            for (ri, g) in self.code.gens().iter().enumerate() {
                if !self.code.contains_vector(&sigma.pull_back(g)) {
                    auto_detail.push(format!("element {si} moves generator {ri} out of the code"));
                    break;
                }
            }
        }
        checks.push(Check {
            name: CHECK_AUTOMORPHISM,
            claim: "every group element maps codewords to codewords (g∘σ ∈ C)",
            passed: auto_detail.is_empty(),
            detail: auto_detail.join("; "),
        });

        let mut in_block = vec![false; n];
        for &q in &self.logical_block {
            in_block[q] = true;
        }
        let block_detail: Vec<String> = self
            .group
            .iter()
            .enumerate()
            .filter(|(_, s)| (0..n).any(|i| in_block[s.apply(i)] != in_block[i]))
            .map(|(si, _)| format!("element {si} does not preserve the block"))
            .collect();
        checks.push(Check {
            name: CHECK_BLOCK,
            claim: "the group fixes the logical block and its complement setwise",
            passed: block_detail.is_empty(),
            detail: block_detail.join("; "),
        });

        checks.push(self.regularity_check());

        let mut closure_detail = String::new();
        'outer: for (a, sa) in self.group.iter().enumerate() {
            for (b, sb) in self.group.iter().enumerate() {
                if !self.group.contains(&sa.compose(sb)) {
                    closure_detail = format!("element {a} ∘ element {b} is not in the group");
                    break 'outer;
                }
            }
        }
        checks.push(Check {
            name: CHECK_CLOSED,
            claim: "the group is closed under composition",
            passed: closure_detail.is_empty(),
            detail: closure_detail,
        });

        let (dd_ok, dd_detail) = match self.code.dual_distance_exceeds(self.k(), DEFAULT_BUDGET) {
            Ok(true) => (true, format!("every {} columns are independent", self.k())),
            Ok(false) => (false, format!("some {} columns are dependent", self.k())),
            Err(e) => (false, e.to_string()),
        };
        checks.push(Check {
            name: CHECK_DUAL_DISTANCE,
            claim: "the dual distance exceeds the logical block size",
            passed: dd_ok,
            detail: dd_detail,
        });

        let mult = self.code.has_multiplication_property(&self.u, self.m_max);
        checks.push(Check {
            name: CHECK_MULTIPLICATION,
            claim: "u ⋆ C^{⋆m} ⊆ C^⊥ at m = m_max",
            passed: matches!(mult, Ok(true)),
            detail: match mult {
                Ok(_) => format!("m_max = {}", self.m_max),
                Err(e) => e.to_string(),
            },
        });

        let twist_invariant = self
            .group
            .iter()
            .all(|s| s.pull_back(self.u.entries()) == self.u.entries());
        ValidationReport {
            checks,
            twist_invariant,
        }
    }

    fn shape_problem(&self) -> Option<String> {
        let n = self.len();
        if self.u.len() != n {
            return Some(format!("u has length {}, code has length {n}", self.u.len()));
        }
        if self.m_max == 0 {
            return Some("m_max must be at least 1".into());
        }
        if self.group.is_empty() {
            return Some("group is empty".into());
        }
        if let Some(i) = self.group.iter().position(|g| g.len() != n) {
            return Some(format!("group element {i} has the wrong length"));
        }
        let mut seen = vec![false; n];
        for &q in &self.logical_block {
            if q >= n || seen[q] {
                return Some(format!("logical label {q} is out of range or repeated"));
            }
            seen[q] = true;
        }
        if self.logical_block.is_empty() {
            return Some("logical block is empty".into());
        }
        None
    }

    fn regularity_check(&self) -> Check {
        let mut problems = Vec::new();
        if self.logical_block.len() != self.group.len() {
            problems.push(format!(
                "block has {} labels, group has {} elements",
                self.logical_block.len(),
                self.group.len()
            ));
        }
        for &from in &self.logical_block {
            for &to in &self.logical_block {
                let hits = self.group.iter().filter(|s| s.apply(from) == to).count();
                if hits != 1 {
                    problems.push(format!("{hits} elements map {from} to {to}"));
                }
            }
        }
        Check {
            name: CHECK_REGULAR,
            claim: "exactly one group element maps each block label to each other",
            passed: problems.is_empty(),
            detail: problems.into_iter().take(4).collect::<Vec<_>>().join("; "),
        }
    }

    /// Index of the unique group element with `σ(from) = to`.
    pub fn sigma_index(&self, from: usize, to: usize) -> Option<usize> {
        let mut hits = self
            .group
            .iter()
            .enumerate()
            .filter(|(_, s)| s.apply(from) == to)
            .map(|(i, _)| i);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    /// Index of the group element equal to `perm`.
    pub fn group_index(&self, perm: &Permutation) -> Option<usize> {
        self.group.iter().position(|g| g == perm)
    }
}

/// Largest `m` for which `u ⋆ C^{⋆m} ⊆ C^⊥`, scanning upward from 1.
/// Returns 0 when even `m = 1` fails.
pub fn max_multiplication_order(code: &LinearCode, u: &TwistVector) -> Result<usize, CodeError> {
    let mut m = 0;
    while m < code.len() && code.has_multiplication_property(u, m + 1)? {
        m += 1;
    }
    Ok(m)
}

/// The additive subgroup spanned by the first `log_p(size)` canonical basis
/// elements; in the integer encoding these are exactly the values below `size`.
pub fn canonical_subgroup(field: &FieldSpec, size: u32) -> Result<Vec<Elem>, InstanceError> {
    let p = field.p();
    let mut s = 1u32;
    while s < size {
        s *= p;
    }
    if s != size || size > field.q() || size == 0 {
        return Err(InstanceError::BadSubgroup {
            size,
            p,
            q: field.q(),
        });
    }
    Ok((0..size).map(Elem).collect())
}

/// Translation `x ↦ x + shift` on coordinates labelled by field elements.
pub fn translation(field: &FieldSpec, shift: Elem) -> Permutation {
    Permutation::new(field.elements().map(|x| field.add(x, shift).0 as usize).collect())
        .expect("translations are bijective")
}

/// Reed-Solomon instance: degree `< k` polynomials evaluated on all of GF(q)
/// in canonical order, `u` all ones, the group of translations by the
/// canonical subgroup `V` of size `subgroup_size`, and logical block
/// `coset_rep + V`. `m_max` is the largest verified multiplication order,
/// which must be at least 2.
pub fn grs_build(
    field: &FieldSpec,
    k: usize,
    subgroup_size: u32,
    coset_rep: Elem,
) -> Result<FamilyInstance, InstanceError> {
    if !field.contains(coset_rep) {
        return Err(InstanceError::BlockNotCoset(format!(
            "coset representative {coset_rep} is not a field element"
        )));
    }
    let subgroup = canonical_subgroup(field, subgroup_size)?;
    let code = LinearCode::reed_solomon_full(field.clone(), k)?;
    let n = code.len();
    // the dual of a full-length RS code is MDS with distance k + 1
    if !code.dual_distance_exceeds(subgroup.len(), DEFAULT_BUDGET)? {
        return Err(InstanceError::DualDistanceTooSmall {
            dual_distance: code.dual_distance(DEFAULT_BUDGET)?,
            block: subgroup.len(),
        });
    }
    let u = TwistVector::all_ones(n);
    let m_max = max_multiplication_order(&code, &u)?;
    if m_max < 2 {
        return Err(InstanceError::MultiplicationTooWeak { order: m_max + 1 });
    }
    let group = subgroup.iter().map(|&v| translation(field, v)).collect();
    let block = subgroup
        .iter()
        .map(|&v| field.add(coset_rep, v).0 as usize)
        .collect();
    FamilyInstance::new(code, u, group, block, m_max)
}

/// Checks the supplied-twist duality `u ⋆ complement = C^⊥` as row spaces.
pub fn check_twisted_duality(
    code: &LinearCode,
    u: &TwistVector,
    complement: &LinearCode,
) -> Result<bool, CodeError> {
    Ok(complement.twist(u)? == code.dual())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

/// Closed-form parameter bounds for the asymptotic code family, evaluated in
/// exact rational arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub ell: i64,
    pub s: i64,
    pub n: i64,
    /// `K ≥ (ℓ+1−s)/(s(ℓ−1)) · N`
    pub k_lb: Ratio<i64>,
    /// `D ≥ (1 − 3/(s(ℓ−1))) · N`
    pub d_lb: Ratio<i64>,
    /// `D^⊥ ≥ (ℓ+1)/(s(ℓ−1)) · N`
    pub dperp_lb: Ratio<i64>,
    /// Logical dimension, when supplied.
    pub k: Option<u64>,
    /// `max(0, min(D, D^⊥) − k)` from the floored classical bounds.
    pub quantum_d_lb: Option<u64>,
    /// `k^{m−1}`, when an arity is supplied.
    pub depth_ub: Option<u64>,
}

fn floor_nonneg(r: &Ratio<i64>) -> u64 {
    r.floor().to_integer().max(0) as u64
}

impl BoundReport {
    pub fn k_lb_floor(&self) -> u64 {
        floor_nonneg(&self.k_lb)
    }

    pub fn d_lb_floor(&self) -> u64 {
        floor_nonneg(&self.d_lb)
    }

    pub fn dperp_lb_floor(&self) -> u64 {
        floor_nonneg(&self.dperp_lb)
    }

    /// Adds the logical dimension and, optionally, the gate arity.
    pub fn with_logical(mut self, k: u64, m: Option<u32>) -> Self {
        self.k = Some(k);
        self.quantum_d_lb = Some(quantum_bounds(self.d_lb_floor(), self.dperp_lb_floor(), k));
        self.depth_ub = m.map(|m| depth_bound(k, m));
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ell": self.ell,
            "s": self.s,
            "N": self.n,
            "K_lb": self.k_lb.to_string(),
            "D_lb": self.d_lb.to_string(),
            "Dperp_lb": self.dperp_lb.to_string(),
            "K_lb_floor": self.k_lb_floor(),
            "D_lb_floor": self.d_lb_floor(),
            "Dperp_lb_floor": self.dperp_lb_floor(),
            "k": self.k,
            "d_lb": self.quantum_d_lb,
            "depth_ub": self.depth_ub,
        })
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<10} {}", "ell", self.ell)?;
        writeln!(f, "{:<10} {}", "s", self.s)?;
        writeln!(f, "{:<10} {}", "N", self.n)?;
        writeln!(f, "{:<10} {:<10} (floor {})", "K >=", self.k_lb.to_string(), self.k_lb_floor())?;
        writeln!(f, "{:<10} {:<10} (floor {})", "D >=", self.d_lb.to_string(), self.d_lb_floor())?;
        writeln!(
            f,
            "{:<10} {:<10} (floor {})",
            "Dperp >=",
            self.dperp_lb.to_string(),
            self.dperp_lb_floor()
        )?;
        if let Some(k) = self.k {
            writeln!(f, "{:<10} {}", "k", k)?;
        }
        if let Some(d) = self.quantum_d_lb {
            writeln!(f, "{:<10} {}", "d >=", d)?;
        }
        if let Some(depth) = self.depth_ub {
            writeln!(f, "{:<10} {}", "depth <=", depth)?;
        }
        Ok(())
    }
}

/// Evaluates the three classical bounds. Requires `ℓ ≥ 4`, `s ≥ 1` and
/// `ℓ ≥ 2s − 1`.
pub fn classical_bounds(ell: i64, s: i64, n: i64) -> Result<BoundReport, BoundsError> {
    if ell < 4 {
        return Err(BoundsError::HypothesisViolated(format!("ell >= 4 (ell = {ell})")));
    }
    if s < 1 {
        return Err(BoundsError::HypothesisViolated(format!("s >= 1 (s = {s})")));
    }
    if ell < 2 * s - 1 {
        return Err(BoundsError::HypothesisViolated(format!(
            "ell >= 2s - 1 ({ell} < {})",
            2 * s - 1
        )));
    }
    if n < 0 {
        return Err(BoundsError::HypothesisViolated(format!("N >= 0 (N = {n})")));
    }
    let denom = s * (ell - 1);
    let nr = Ratio::from_integer(n);
    Ok(BoundReport {
        ell,
        s,
        n,
        k_lb: Ratio::new(ell + 1 - s, denom) * nr,
        d_lb: (Ratio::from_integer(1) - Ratio::new(3, denom)) * nr,
        dperp_lb: Ratio::new(ell + 1, denom) * nr,
        k: None,
        quantum_d_lb: None,
        depth_ub: None,
    })
}

/// `max(0, min(D, D^⊥) − k)`.
pub fn quantum_bounds(d: u64, dperp: u64, k: u64) -> u64 {
    d.min(dperp).saturating_sub(k)
}

/// `k^{m−1}`.
pub fn depth_bound(k: u64, m: u32) -> u64 {
    debug_assert!(k >= 1 && m >= 2);
    k.pow(m.saturating_sub(1))
}

/// The two standard small instances used throughout the tests.
pub mod presets {
    use super::*;

    /// RS(16, 4) with translations by a 2-element subgroup; supports CCZ.
    pub fn rs16_ccz() -> FamilyInstance {
        grs_build(&FieldSpec::gf(2, 4), 4, 2, Elem::ZERO).expect("rs16-ccz is valid")
    }

    /// RS(8, 3) with translations by a 2-element subgroup; supports CZ.
    pub fn rs8_cz() -> FamilyInstance {
        grs_build(&FieldSpec::gf(2, 3), 3, 2, Elem::ZERO).expect("rs8-cz is valid")
    }

    /// RS(25, 6) with translations by a 5-element subgroup; odd characteristic.
    pub fn rs25_cz() -> FamilyInstance {
        grs_build(&FieldSpec::gf(5, 2), 6, 5, Elem::ZERO).expect("rs25-cz is valid")
    }

    /// RS(9, 3) with translations by a 3-element subgroup; odd characteristic.
    pub fn rs9_cz() -> FamilyInstance {
        grs_build(&FieldSpec::gf(3, 2), 3, 3, Elem::ZERO).expect("rs9-cz is valid")
    }

    pub fn by_name(name: &str) -> Option<FamilyInstance> {
        match name {
            "rs16-ccz" => Some(rs16_ccz()),
            "rs8-cz" => Some(rs8_cz()),
            "rs25-cz" => Some(rs25_cz()),
            "rs9-cz" => Some(rs9_cz()),
            _ => None,
        }
    }

    pub const NAMES: [&str; 4] = ["rs16-ccz", "rs8-cz", "rs25-cz", "rs9-cz"];
}
