//! Search for packing-property clutters that fail max-flow min-cut.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::corpus::{enumerate_clutters, CorpusSpec};
use super::report::hash_value;
use crate::clutter::Clutter;
use crate::covering::has_packing_property;
use crate::error::Result;
use crate::polyhedra::{mfmc_bounded, MfmcVerdict};
use crate::rees::{is_normal, is_ntf_bounded, BoundedVerdict, ReesLimits};

pub const SCAN_NOTE: &str = "A candidate whose MFMC verdict is a counterexample carries an exact \
witness (packing value below the cover number at a concrete weight vector) and would refute the \
conjecture. Candidates without one failed only the NTF or normality checks and need independent review.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    Pass,
    Candidate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Escalation {
    pub max_w: u32,
    pub max_power: u32,
    pub mfmc: MfmcVerdict,
    pub ntf: BoundedVerdict,
    pub normal: bool,
    /// The MFMC verdict holds a concrete counterexample.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub clutter: String,
    pub status: ScanStatus,
    pub mfmc: MfmcVerdict,
    pub normal: bool,
    pub ntf: BoundedVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub escalation: Option<Escalation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub corpus: CorpusSpec,
    pub max_w: u32,
    pub max_power: u32,
    pub total: usize,
    pub pp_count: usize,
    pub candidates: usize,
    pub note: String,
    pub entries: Vec<ScanEntry>,
    /// SHA-256 of the report with this field empty.
    pub hash: String,
}

/// Filters the corpus to packing-property clutters and checks MFMC,
/// normality and NTF on each.
pub fn scan_conforti_cornuejols(spec: &CorpusSpec, max_w: u32, max_power: u32) -> Result<ScanReport> {
    let corpus = enumerate_clutters(spec)?;
    scan_clutters(spec, &corpus, max_w, max_power)
}

pub fn scan_clutters(spec: &CorpusSpec, corpus: &[Clutter], max_w: u32, max_power: u32) -> Result<ScanReport> {
    let limits = ReesLimits { max_vertices: 16, max_edges: 64 };
    let mut entries = Vec::new();
    for c in corpus {
        if !has_packing_property(c, 16)?.holds {
            continue;
        }
        let mfmc = mfmc_bounded(c, max_w)?;
        let normal = is_normal(c, limits)?.normal;
        let ntf = is_ntf_bounded(c, max_power)?;
        let fails = !mfmc.is_certified() || !normal || !ntf.is_certified();
        let escalation = if fails {
            let mfmc = mfmc_bounded(c, max_w + 2)?;
            Some(Escalation {
                max_w: max_w + 2,
                max_power: max_power + 2,
                exact: !mfmc.is_certified(),
                mfmc,
                ntf: is_ntf_bounded(c, max_power + 2)?,
                normal,
            })
        } else {
            None
        };
        entries.push(ScanEntry {
            clutter: c.compact(),
            status: if fails { ScanStatus::Candidate } else { ScanStatus::Pass },
            mfmc,
            normal,
            ntf,
            escalation,
        });
    }
    let mut report = ScanReport {
        corpus: spec.clone(),
        max_w,
        max_power,
        total: corpus.len(),
        pp_count: entries.len(),
        candidates: entries.iter().filter(|e| e.status == ScanStatus::Candidate).count(),
        note: SCAN_NOTE.to_string(),
        entries,
        hash: String::new(),
    };
    report.hash = hash_value(&json!(report));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_filtered_and_edge_passes() {
        let tri = Clutter::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let edge = Clutter::from_index_edges(2, &[&[0, 1]]).unwrap();
        let spec = CorpusSpec::uniform(3, 2);
        let r = scan_clutters(&spec, &[tri, edge.clone()], 2, 2).unwrap();
        assert_eq!((r.total, r.pp_count, r.candidates), (2, 1, 0));
        assert_eq!(r.entries[0].clutter, edge.compact());
        assert_eq!(r.entries[0].mfmc, MfmcVerdict::CertifiedUpTo(2));
        assert_eq!(r.hash.len(), 64);
    }

    #[test]
    fn small_graphs_have_no_candidates() {
        let spec = CorpusSpec::uniform(4, 2).with_iso_reject();
        let a = scan_conforti_cornuejols(&spec, 2, 2).unwrap();
        let b = scan_conforti_cornuejols(&spec, 2, 2).unwrap();
        assert_eq!(a.candidates, 0);
        assert_eq!(a.hash, b.hash);
    }
}
