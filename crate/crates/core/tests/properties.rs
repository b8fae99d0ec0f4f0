use std::collections::BTreeMap;

use mcz_core::codes::DEFAULT_BUDGET;
use mcz_core::css::{logical_basis, QuantumCode};
use mcz_core::family::{grs_build, presets};
use mcz_core::gates::{self, PhaseProgram, PhysicalGate};
use mcz_core::gf::{Elem, FieldSpec};
use mcz_core::linalg;
use mcz_core::scheduler::{compile, random_circuit};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn encode(qc: &QuantumCode, x: &[Elem], gauge: &[Elem]) -> Vec<Elem> {
    let f = qc.field();
    let mut v = vec![Elem::ZERO; qc.css.n];
    for (row, &c) in qc.css.g1.iter().zip(x) {
        linalg::axpy(f, &mut v, c, row);
    }
    for (row, &c) in qc.css.g0.iter().zip(gauge) {
        linalg::axpy(f, &mut v, c, row);
    }
    v
}

fn elems(q: u32, len: usize) -> impl Strategy<Value = Vec<Elem>> {
    prop::collection::vec((0..q).prop_map(Elem), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phases_add_over_concatenation(
        seed in any::<u64>(),
        strings in prop::collection::vec(elems(16, 14), 3),
    ) {
        let qc = QuantumCode::new(presets::rs16_ccz()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = compile(&qc, 3, &random_circuit(&qc.instance, 3, 5, &mut rng)).unwrap().physical_gates();
        let b = compile(&qc, 3, &random_circuit(&qc.instance, 3, 5, &mut rng)).unwrap().physical_gates();
        let ab: Vec<PhysicalGate> = a.iter().chain(&b).cloned().collect();
        let pa = gates::physical_phase(&qc, &a, &strings).unwrap();
        let pb = gates::physical_phase(&qc, &b, &strings).unwrap();
        prop_assert_eq!(gates::physical_phase(&qc, &ab, &strings).unwrap(), (pa + pb) % 2);
    }

    #[test]
    fn compiled_ccz_phase_is_gauge_free(
        seed in any::<u64>(),
        x in prop::collection::vec(elems(16, 2), 3),
        gauge in prop::collection::vec(elems(16, 2), 3),
    ) {
        let qc = QuantumCode::new(presets::rs16_ccz()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let circuit = random_circuit(&qc.instance, 3, 6, &mut rng);
        let physical = compile(&qc, 3, &circuit).unwrap().physical_gates();
        let strings: Vec<_> = x.iter().zip(&gauge).map(|(xi, gi)| encode(&qc, xi, gi)).collect();
        prop_assert_eq!(
            gates::physical_phase(&qc, &physical, &strings).unwrap(),
            gates::logical_phase(&qc, &circuit, &x).unwrap()
        );
    }

    #[test]
    fn compiled_cz_is_uniform_on_logical_states(
        seed in any::<u64>(),
        x in prop::collection::vec(elems(25, 5), 2),
    ) {
        let qc = QuantumCode::new(presets::rs25_cz()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let circuit = random_circuit(&qc.instance, 2, 4, &mut rng);
        let physical = compile(&qc, 2, &circuit).unwrap().physical_gates();
        let states: Vec<_> = x.iter().map(|xi| logical_basis(&qc.css, xi, DEFAULT_BUDGET).unwrap()).collect();
        let out = gates::sparse_apply(&qc, &physical, &states, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(out.uniform(), Some(gates::logical_phase(&qc, &circuit, &x).unwrap()));
    }
}

#[test]
fn lower_arity_on_ccz_instance() {
    let qc = QuantumCode::new(presets::rs16_ccz()).unwrap();
    let labels = qc.css.logical_labels.clone();
    for s in 0..qc.instance.group().len() {
        for support in [vec![labels[0]], vec![labels[1]], labels.clone()] {
            let gamma: BTreeMap<_, _> = support.iter().map(|&q| (q, Elem(7))).collect();
            let m = gates::modulation_build(&qc, &gamma).unwrap();
            assert!(gates::verify_main_theorem(&qc, &m, &[s]).unwrap().passed());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let circuit = random_circuit(&qc.instance, 2, 8, &mut rng);
    let schedule = compile(&qc, 2, &circuit).unwrap();
    assert!(schedule.depth() <= 2);
    let lp = PhaseProgram::logical(&qc, &circuit).unwrap();
    let pp = PhaseProgram::physical(&qc, &schedule.physical_gates()).unwrap();
    for a in 0..256u32 {
        for b in 0..256u32 {
            let x0 = [Elem(a % 16), Elem(a / 16)];
            let x1 = [Elem(b % 16), Elem(b / 16)];
            let e0 = encode(&qc, &x0, &[Elem(3), Elem(9)]);
            let e1 = encode(&qc, &x1, &[Elem(1), Elem(0)]);
            assert_eq!(pp.field_value(&[&e0, &e1]), lp.field_value(&[&x0, &x1]));
        }
    }
}

#[test]
fn shifted_coset_block() {
    // logical block {5, 5 + 1} instead of the subgroup itself
    let inst = grs_build(&FieldSpec::gf(2, 4), 4, 2, Elem(5)).unwrap();
    assert_eq!(inst.logical_block(), &[5, 4]);
    let qc = QuantumCode::new(inst).unwrap();
    assert_eq!((qc.css.n, qc.css.k), (14, 2));
    let gamma: BTreeMap<_, _> = qc.css.logical_labels.iter().map(|&q| (q, Elem(2))).collect();
    let m = gates::modulation_build(&qc, &gamma).unwrap();
    for s1 in 0..2 {
        for s2 in 0..2 {
            assert!(gates::verify_main_theorem(&qc, &m, &[s1, s2]).unwrap().passed());
        }
    }
}

#[test]
fn exhaustive_rs9_phase_equality() {
    let qc = QuantumCode::new(presets::rs9_cz()).unwrap();
    assert!(qc.css.g0.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let xs: Vec<Vec<Elem>> = (0..729u32).map(|i| vec![Elem(i % 9), Elem(i / 9 % 9), Elem(i / 81)]).collect();
    let enc: Vec<_> = xs.iter().map(|x| encode(&qc, x, &[])).collect();
    for count in [1, 3, 9] {
        let circuit = random_circuit(&qc.instance, 2, count, &mut rng);
        let lp = PhaseProgram::logical(&qc, &circuit).unwrap();
        let pp = PhaseProgram::physical(&qc, &compile(&qc, 2, &circuit).unwrap().physical_gates()).unwrap();
        for (x0, e0) in xs.iter().zip(&enc) {
            for (x1, e1) in xs.iter().zip(&enc) {
                assert_eq!(pp.phase(&[e0, e1]), lp.phase(&[x0, x1]));
            }
        }
    }
}
