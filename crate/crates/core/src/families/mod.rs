//! Deterministic graph families with their prescribed cycles, named small
//! fixtures, and seeded random instances.

mod constructions;
mod named;
mod random;

pub use constructions::{gen_doubled, gen_sec6_2k, gen_thm4, gen_thm5, Thm4Case};
pub use named::{
    circulant, complete, complete_bipartite, cycle_graph, doubled, petersen, petersen_cycles,
};
pub use random::{pack_cycles, random_regular, RandomInstance};

use crate::graph::{CycleSet, Multigraph};
use crate::io::{write_cycles, write_multigraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMeta {
    pub family: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub regular: usize,
    /// Claimed vertex connectivity, if the construction states one.
    pub connectivity: Option<usize>,
    /// Values of `t` for which no `t`-factor hits every prescribed cycle.
    pub unsat_t: Vec<usize>,
    /// Values of `t` for which a `t`-factor (ignoring the cycles) exists.
    pub has_factor_t: Vec<usize>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Multigraph,
    pub cycles: CycleSet,
    pub meta: FamilyMeta,
}

impl FamilyInstance {
    /// Header comments shared by the `.mg` and `.cyc` files.
    pub fn comments(&self) -> Vec<String> {
        let m = &self.meta;
        let params: String = m.params.iter().map(|(k, v)| format!(" {k}={v}")).collect();
        let mut out = vec![
            format!("family: {}{params}", m.family),
            format!("claim: {}-regular", m.regular),
        ];
        if let Some(k) = m.connectivity {
            out.push(format!("claim: {k}-connected"));
        }
        let list = |ts: &[usize]| {
            ts.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        if !m.unsat_t.is_empty() {
            out.push(format!(
                "claim: no t-factor hits every cycle for t in {{{}}}",
                list(&m.unsat_t)
            ));
        }
        if !m.has_factor_t.is_empty() {
            out.push(format!(
                "claim: t-factor exists for t in {{{}}}",
                list(&m.has_factor_t)
            ));
        }
        out.extend(m.notes.iter().cloned());
        out
    }

    pub fn to_mg(&self) -> String {
        write_multigraph(&self.graph, &self.comments())
    }

    pub fn to_cyc(&self) -> String {
        write_cycles(&self.cycles, &self.comments())
    }
}
