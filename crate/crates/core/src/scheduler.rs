//! Compilation of inter-block logical circuits into depth-one physical
//! layers, one per σ-tuple.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::css::QuantumCode;
use crate::family::FamilyInstance;
use crate::gates::{self, GateError, LogicalGate, ModulationSpec, PhysicalGate};
use crate::gf::Elem;

/// The unique group element mapping `from` to `to`, both logical labels.
pub fn sigma_lookup(instance: &FamilyInstance, from: usize, to: usize) -> Result<usize, GateError> {
    for label in [from, to] {
        if !instance.logical_block().contains(&label) {
            return Err(GateError::UnknownLabel { label, kind: "logical" });
        }
    }
    instance
        .sigma_index(from, to)
        .ok_or(GateError::NonRegular { from, to })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub sigmas: Vec<usize>,
    pub modulation: ModulationSpec,
    pub gates: Vec<PhysicalGate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateSchedule {
    pub m: usize,
    pub layers: Vec<Layer>,
    pub source: Vec<LogicalGate>,
}

impl GateSchedule {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// All physical gates, layer by layer.
    pub fn physical_gates(&self) -> Vec<PhysicalGate> {
        self.layers.iter().flat_map(|l| l.gates.iter().cloned()).collect()
    }

    /// The merged logical circuit the layers implement.
    pub fn logical_reading(&self, instance: &FamilyInstance) -> Vec<LogicalGate> {
        self.layers
            .iter()
            .flat_map(|l| {
                gates::layer_logical_gates(instance, &l.modulation, &l.sigmas).expect("sigmas come from the instance")
            })
            .collect()
    }

    pub fn to_file(&self) -> ScheduleFile {
        ScheduleFile {
            m: self.m,
            layers: self
                .layers
                .iter()
                .map(|l| LayerFile {
                    sigmas: l.sigmas.clone(),
                    support: l.modulation.support(),
                    gamma: l.modulation.gamma.clone(),
                    gates: l.gates.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a schedule from its file form, recomputing each modulation
    /// vector and checking the stored gates against it.
    pub fn from_file(qc: &QuantumCode, file: &ScheduleFile) -> Result<Self, ScheduleFileError> {
        let mut layers = Vec::with_capacity(file.layers.len());
        for (i, lf) in file.layers.iter().enumerate() {
            if lf.sigmas.len() + 1 != file.m {
                return Err(GateError::ArityMismatch {
                    expected: file.m,
                    found: lf.sigmas.len() + 1,
                }
                .into());
            }
            if lf.support != lf.gamma.keys().copied().collect::<Vec<_>>() {
                return Err(ScheduleFileError::Inconsistent { layer: i, what: "S differs from the gamma keys" });
            }
            let modulation = gates::modulation_build(qc, &lf.gamma)?;
            let gates = gates::physical_layer(qc, &modulation, &lf.sigmas)?;
            if gates != lf.gates {
                return Err(ScheduleFileError::Inconsistent { layer: i, what: "gates differ from the modulation" });
            }
            layers.push(Layer {
                sigmas: lf.sigmas.clone(),
                modulation,
                gates,
            });
        }
        let mut schedule = GateSchedule {
            m: file.m,
            layers,
            source: Vec::new(),
        };
        schedule.source = schedule.logical_reading(&qc.instance);
        Ok(schedule)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerFile {
    pub sigmas: Vec<usize>,
    #[serde(rename = "S")]
    pub support: Vec<usize>,
    pub gamma: BTreeMap<usize, Elem>,
    pub gates: Vec<PhysicalGate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleFile {
    pub m: usize,
    pub layers: Vec<LayerFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScheduleFileError {
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error("layer {layer}: {what}")]
    Inconsistent { layer: usize, what: &'static str },
}

/// Buckets gates by `(σ(Q_0→Q_1), …, σ(Q_0→Q_{m-1}))`, merges equal anchors
/// by summing γ, drops zero sums and empty buckets, and emits one layer per
/// bucket in lexicographic order of the σ-tuple.
pub fn compile(qc: &QuantumCode, m: usize, circuit: &[LogicalGate]) -> Result<GateSchedule, GateError> {
    let inst = &qc.instance;
    let f = qc.field();
    if m < 2 || m > inst.m_max() {
        return Err(GateError::ArityUnsupported { m, m_max: inst.m_max() });
    }
    let mut buckets: BTreeMap<Vec<usize>, BTreeMap<usize, Elem>> = BTreeMap::new();
    for gate in circuit {
        if gate.targets.len() != m {
            return Err(GateError::ArityMismatch {
                expected: m,
                found: gate.targets.len(),
            });
        }
        if !f.contains(gate.gamma) {
            return Err(GateError::NotInField {
                value: gate.gamma.0,
                q: f.q(),
            });
        }
        let q0 = gate.targets[0];
        let key = gate.targets[1..]
            .iter()
            .map(|&t| sigma_lookup(inst, q0, t))
            .collect::<Result<Vec<_>, _>>()?;
        let entry = buckets.entry(key).or_default().entry(q0).or_insert(Elem::ZERO);
        *entry = f.add(*entry, gate.gamma);
    }
    let mut layers = Vec::new();
    for (sigmas, mut gamma) in buckets {
        gamma.retain(|_, g| !g.is_zero());
        if gamma.is_empty() {
            continue;
        }
        let modulation = gates::modulation_build(qc, &gamma)?;
        let gates = gates::physical_layer(qc, &modulation, &sigmas)?;
        layers.push(Layer {
            sigmas,
            modulation,
            gates,
        });
    }
    Ok(GateSchedule {
        m,
        layers,
        source: circuit.to_vec(),
    })
}

pub fn schedule_depth(schedule: &GateSchedule) -> usize {
    schedule.depth()
}

/// Every inter-block gate `C^{m-1}Z[Q_0, …, Q_{m-1}]`, `Q_j` ranging over
/// the logical block, with `γ = 1`.
pub fn all_to_all(instance: &FamilyInstance, m: usize) -> Vec<LogicalGate> {
    let block = instance.logical_block();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        out.push(LogicalGate {
            gamma: Elem::ONE,
            targets: idx.iter().map(|&i| block[i]).collect(),
        });
        let mut j = m;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < block.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// `count` gates with uniform targets and uniform nonzero γ.
pub fn random_circuit<R: Rng>(instance: &FamilyInstance, m: usize, count: usize, rng: &mut R) -> Vec<LogicalGate> {
    let block = instance.logical_block();
    let q = instance.field().q();
    (0..count)
        .map(|_| LogicalGate {
            gamma: Elem(rng.gen_range(1..q)),
            targets: (0..m).map(|_| block[rng.gen_range(0..block.len())]).collect(),
        })
        .collect()
}
