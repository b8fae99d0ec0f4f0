//! The full invariant suite behind `mcz check`.

use std::collections::BTreeMap;

use mcz_core::css::{self, CssError, QuantumCode};
use mcz_core::family::{FamilyInstance, CHECK_SHAPES};
use mcz_core::gates::{self, Verdict};
use mcz_core::gf::Elem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub name: String,
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

impl Item {
    fn new(name: &str, claim: &str, passed: bool, detail: impl Into<String>) -> Self {
        Item {
            name: name.to_string(),
            claim: claim.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub arity: usize,
    pub seed: u64,
    pub passed: bool,
    pub failures: Vec<String>,
    pub checks: Vec<Item>,
}

fn verdict_detail(v: &Verdict) -> String {
    match v {
        Verdict::Pass { checked } => format!("{checked} tuples"),
        Verdict::Fail { witness, lhs, rhs } => format!("rows {witness:?}: {lhs} != {rhs}"),
    }
}

fn tuples(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn run(instance: FamilyInstance, arity: usize, seed: u64, draws: usize) -> CheckReport {
    let mut checks = Vec::new();
    let validation = instance.validate();
    for c in &validation.checks {
        checks.push(Item::new(c.name, c.claim, c.passed, c.detail.clone()));
    }
    checks.push(Item::new(
        "twist_invariant",
        "informational: u is constant on group orbits",
        true,
        validation.twist_invariant.to_string(),
    ));
    let shapes_ok = validation.get(CHECK_SHAPES).is_some_and(|c| c.passed);
    if shapes_ok {
        suite(&instance, arity, seed, draws, &mut checks);
    }
    let failures: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    CheckReport {
        arity,
        seed,
        passed: failures.is_empty(),
        failures,
        checks,
    }
}

fn suite(instance: &FamilyInstance, arity: usize, seed: u64, draws: usize, checks: &mut Vec<Item>) {
    let f = instance.field().clone();
    let arity_ok = arity >= 2 && arity <= instance.m_max();
    checks.push(Item::new(
        "arity",
        "gate arity m satisfies 2 <= m <= m_max",
        arity_ok,
        format!("m = {arity}, m_max = {}", instance.m_max()),
    ));
    match instance.code().has_multiplication_property(instance.u(), arity) {
        Ok(ok) => checks.push(Item::new(
            "multiplication_at_arity",
            "u ⋆ C^{⋆m} ⊆ C^⊥ at the gate arity",
            ok,
            format!("m = {arity}"),
        )),
        Err(e) => checks.push(Item::new("multiplication_at_arity", "u ⋆ C^{⋆m} ⊆ C^⊥ at the gate arity", false, e.to_string())),
    }
    let v = gates::corollary_sum_check(instance, arity);
    checks.push(Item::new(
        "corollary_sums",
        "Σ_i u_i f^0(i)⋯f^m(i) = 0 for every (m+1)-tuple of generator rows, i.e. the physical sum equals minus the logical-block sum",
        v.passed(),
        verdict_detail(&v),
    ));
    let above = gates::corollary_sum_check(instance, instance.m_max() + 1);
    checks.push(Item::new(
        "multiplication_order_exact",
        "the (m_max+1)-multiplication property fails, so m_max is the largest verified order",
        !above.passed(),
        verdict_detail(&above),
    ));

    let form = match css::standard_form(instance) {
        Ok(form) => form,
        Err(e) => {
            checks.push(Item::new("standard_form", "logical-block columns are independent, giving [I | G1; 0 | G0]", false, e.to_string()));
            return;
        }
    };
    checks.push(Item::new(
        "standard_form",
        "logical-block columns are independent, giving [I | G1; 0 | G0]",
        true,
        format!("K = {}, k = {}", form.dim(), form.k),
    ));
    let mut delta_bad = Vec::new();
    for i in 0..form.k {
        let row = form.logical_row(i);
        for (j, &q) in instance.logical_block().iter().enumerate() {
            let want = if i == j { Elem::ONE } else { Elem::ZERO };
            if row[q] != want {
                delta_bad.push((i, q));
            }
        }
    }
    checks.push(Item::new(
        "delta_property",
        "g̃_Q(Q') = δ_{Q,Q'} on the logical block",
        delta_bad.is_empty(),
        format!("{} violations", delta_bad.len()),
    ));
    let css = match css::build_css(&form, instance) {
        Ok(css) => {
            checks.push(Item::new(
                "block_independence",
                "twisted inner products ⟨g_a, u⋆g_b⟩ vanish except on the G1 diagonal, so rowspan G0 ∩ rowspan G1 = 0",
                true,
                format!("[[{}, {}]]", css.n, css.k),
            ));
            css
        }
        Err(e @ CssError::IndependenceViolated { .. }) | Err(e @ CssError::RankDeficient) => {
            checks.push(Item::new("block_independence", "twisted inner products ⟨g_a, u⋆g_b⟩ vanish except on the G1 diagonal, so rowspan G0 ∩ rowspan G1 = 0", false, e.to_string()));
            return;
        }
        Err(e) => {
            checks.push(Item::new("block_independence", "CSS construction", false, e.to_string()));
            return;
        }
    };
    let k = instance.k();
    let nested = css.n + k == instance.len() && css.k == k;
    checks.push(Item::new(
        "css_parameters",
        "the punctured code has n = N − |L| physical and k = |L| logical qudits",
        nested,
        format!("[[{}, {}]]", css.n, css.k),
    ));
    if !arity_ok {
        return;
    }
    let qc = QuantumCode {
        instance: instance.clone(),
        form,
        css,
    };
    let labels = qc.css.logical_labels.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut supports: Vec<Vec<usize>> = labels.iter().map(|&q| vec![q]).collect();
    supports.push(labels.clone());
    let mut checked = 0u64;
    let mut failure = None;
    'outer: for sigmas in tuples(arity - 1, instance.group().len()) {
        for support in &supports {
            let mut gammas: Vec<BTreeMap<usize, Elem>> = vec![support.iter().map(|&q| (q, Elem::ONE)).collect()];
            for _ in 0..draws {
                gammas.push(support.iter().map(|&q| (q, Elem(rng.gen_range(1..f.q())))).collect());
            }
            for gamma in gammas {
                let modulation = match gates::modulation_build(&qc, &gamma) {
                    Ok(m) => m,
                    Err(e) => {
                        failure = Some(e.to_string());
                        break 'outer;
                    }
                };
                match gates::verify_main_theorem(&qc, &modulation, &sigmas) {
                    Ok(Verdict::Pass { checked: c }) => checked += c,
                    Ok(v) => {
                        failure = Some(format!("σ = {sigmas:?}, γ = {gamma:?}: {}", verdict_detail(&v)));
                        break 'outer;
                    }
                    Err(e) => {
                        failure = Some(e.to_string());
                        break 'outer;
                    }
                }
            }
        }
    }
    checks.push(Item::new(
        "main_theorem",
        "Σ_P u_P M(P) b⁰(P) Π_j b^j(σ_j(P)) = −Σ_{Q∈S} γ_Q b⁰(Q) Π_j b^j(σ_j(Q)) for every generator-row tuple, σ-tuple and modulation",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{checked} tuple identities")),
    ));
}
