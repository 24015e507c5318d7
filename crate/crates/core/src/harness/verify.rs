//! Implication suite: evaluates every corpus clutter and checks that the
//! structural implications between its properties hold within bounds.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::check::{check_clutter, CheckOptions, Prop, PropertyReport};
use super::corpus::{enumerate_clutters, CorpusSpec};
use crate::clutter::{advance_box, Clutter, VertexSet};
use crate::cm::{is_cohen_macaulay, Field, DEFAULT_CM_LIMIT};
use crate::covering::{has_konig, has_packing_property, matching_number, covering_number, weighted_cover_number};
use crate::error::Result;
use crate::polyhedra::{mfmc_bounded, solve_packing_ilp};
use crate::rees::{is_normal, is_ntf_bounded, ReesLimits};
use crate::transform::{adjoin_whisker_edge, graft, is_uniform, minor, parallelization};

pub const PP_IMPLIES_IDEAL: &str = "pp-implies-ideal";
pub const MFMC_IMPLIES_KONIG: &str = "mfmc-implies-konig";
pub const MFMC_IMPLIES_PP: &str = "mfmc-implies-pp";
pub const NTF_IFF_NORMAL_IDEAL: &str = "ntf-iff-normal-and-ideal";
pub const NTF_IFF_MFMC: &str = "ntf-iff-mfmc";
pub const NORMAL_BOUNDED_SOUND: &str = "normal-implies-normal-bounded";
pub const COVER_WEIGHT: &str = "cover-weight-formula";
pub const PACKING_MATCHING_LE: &str = "matching-le-packing";
pub const PACKING_MATCHING_EQ: &str = "matching-eq-packing";
pub const PARALLEL_KONIG: &str = "mfmc-iff-parallel-konig";
pub const PARALLEL_NORMAL: &str = "parallel-preserves-normal";
pub const PARALLEL_NTF: &str = "parallel-preserves-ntf";
pub const WHISKER_KONIG: &str = "whisker-konig";
pub const WHISKER_PP: &str = "whisker-pp";
pub const WHISKER_NORMAL: &str = "whisker-normal";
pub const GRAFT_CM: &str = "graft-cm";
pub const GRAFT_PP: &str = "graft-pp";
pub const GRAFT_MFMC: &str = "graft-mfmc";
pub const GRAFT_MINOR: &str = "graft-contains-minor";

/// Which stages run and the bounds each one uses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// `W` for bounded MFMC.
    pub max_w: u32,
    /// `k` for the power-bounded checks.
    pub max_power: u32,
    /// Parallelization stages use `w in {0..=parallel_w}^n`.
    pub parallel_w: u32,
    /// Power bound for NTF on parallelizations.
    pub parallel_power: u32,
    pub whisker_lengths: Vec<usize>,
    pub base: bool,
    pub weights: bool,
    pub parallel: bool,
    pub whiskers: bool,
    pub graft: bool,
    /// `W` for MFMC on grafts; defaults to `max_w`.
    pub graft_w: Option<u32>,
    pub pp_limit: usize,
    pub max_rees_vertices: usize,
    pub max_rees_edges: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_w: 2,
            max_power: 2,
            parallel_w: 2,
            parallel_power: 2,
            whisker_lengths: vec![1, 2],
            base: true,
            weights: true,
            parallel: true,
            whiskers: true,
            graft: true,
            graft_w: None,
            pp_limit: 16,
            max_rees_vertices: 16,
            max_rees_edges: 64,
        }
    }
}

impl Bounds {
    /// Only the base implications (no derived clutters).
    pub fn base_only(max_w: u32, max_power: u32) -> Self {
        Bounds {
            max_w,
            max_power,
            weights: false,
            parallel: false,
            whiskers: false,
            graft: false,
            ..Bounds::default()
        }
    }

    fn rees(&self) -> ReesLimits {
        ReesLimits { max_vertices: self.max_rees_vertices, max_edges: self.max_rees_edges }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    /// Instances where the hypothesis held and the conclusion was tested.
    pub checked: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub implication: String,
    pub clutter: String,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub corpus: CorpusSpec,
    pub bounds: Bounds,
    pub clutters: usize,
    pub tallies: BTreeMap<String, Tally>,
    pub violations: Vec<Violation>,
    /// Grafts whose Cohen-Macaulay verdict differs between Q and F2.
    pub field_disagreements: Vec<String>,
    pub reports: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.tallies.get(name).copied().unwrap_or_default()
    }
}

struct Suite {
    tallies: BTreeMap<String, Tally>,
    violations: Vec<Violation>,
    field_disagreements: Vec<String>,
}

impl Suite {
    /// Records one tested implication instance.
    fn assert(&mut self, name: &str, c: &Clutter, holds: bool, detail: impl FnOnce() -> Value) {
        let t = self.tallies.entry(name.to_string()).or_default();
        t.checked += 1;
        if !holds {
            t.violations += 1;
            self.violations.push(Violation { implication: name.to_string(), clutter: c.compact(), detail: detail() });
        }
    }
}

fn flag(r: &PropertyReport, p: Prop) -> bool {
    r.summary.get(p.name()) == Some(&Value::Bool(true))
}

/// Runs the implication suite over the corpus.
pub fn verify_theorems(spec: &CorpusSpec, bounds: &Bounds) -> Result<VerifyReport> {
    let corpus = enumerate_clutters(spec)?;
    verify_clutters(spec, &corpus, bounds)
}

/// The suite on an explicit list of clutters.
pub fn verify_clutters(spec: &CorpusSpec, corpus: &[Clutter], bounds: &Bounds) -> Result<VerifyReport> {
    let mut suite = Suite { tallies: BTreeMap::new(), violations: Vec::new(), field_disagreements: Vec::new() };
    let opts = CheckOptions {
        props: vec![Prop::Konig, Prop::Pp, Prop::Ideal, Prop::Mfmc, Prop::Normal, Prop::NormalBounded, Prop::Ntf],
        max_w: bounds.max_w,
        max_power: bounds.max_power,
        field: Field::Q,
        pp_limit: bounds.pp_limit,
        rees: bounds.rees(),
        ..CheckOptions::default()
    };
    let mut reports = Vec::with_capacity(corpus.len());
    for c in corpus {
        let r = check_clutter(c, &[], &opts)?;
        if bounds.base {
            base_stage(&mut suite, c, &r, bounds);
        }
        if bounds.weights {
            weight_stage(&mut suite, c, bounds)?;
        }
        if bounds.parallel {
            parallel_stage(&mut suite, c, &r, bounds)?;
        }
        if bounds.whiskers {
            whisker_stage(&mut suite, c, &r, bounds)?;
        }
        if bounds.graft && is_uniform(c).is_some() {
            graft_stage(&mut suite, c, &r, bounds)?;
        }
        reports.push(r);
    }
    Ok(VerifyReport {
        corpus: spec.clone(),
        bounds: bounds.clone(),
        clutters: corpus.len(),
        tallies: suite.tallies,
        violations: suite.violations,
        field_disagreements: suite.field_disagreements,
        reports,
    })
}

fn base_stage(s: &mut Suite, c: &Clutter, r: &PropertyReport, b: &Bounds) {
    let (konig, pp, ideal, mfmc) = (flag(r, Prop::Konig), flag(r, Prop::Pp), flag(r, Prop::Ideal), flag(r, Prop::Mfmc));
    let (normal, nb, ntf) = (flag(r, Prop::Normal), flag(r, Prop::NormalBounded), flag(r, Prop::Ntf));
    if pp {
        s.assert(PP_IMPLIES_IDEAL, c, ideal, || json!({ "ideal": r.verdict(Prop::Ideal).and_then(|v| v.witness.clone()) }));
    }
    if mfmc && b.max_w >= 1 {
        s.assert(MFMC_IMPLIES_KONIG, c, konig, || json!({ "konig": r.verdict(Prop::Konig).and_then(|v| v.witness.clone()) }));
    }
    // Contraction behaves like an unbounded weight once W >= n.
    if mfmc && b.max_w as usize >= c.n() {
        s.assert(MFMC_IMPLIES_PP, c, pp, || json!({ "pp": r.verdict(Prop::Pp).and_then(|v| v.witness.clone()) }));
    }
    if b.max_power >= 2 {
        s.assert(NTF_IFF_NORMAL_IDEAL, c, ntf == (nb && ideal), || json!({ "ntf": ntf, "normal_bounded": nb, "ideal": ideal }));
        s.assert(NTF_IFF_MFMC, c, ntf == mfmc, || json!({ "ntf": ntf, "mfmc": mfmc }));
    }
    if normal {
        s.assert(NORMAL_BOUNDED_SOUND, c, nb, || json!({ "normal_bounded": r.verdict(Prop::NormalBounded).and_then(|v| v.witness.clone()) }));
    }
}

fn weight_stage(s: &mut Suite, c: &Clutter, b: &Bounds) -> Result<()> {
    let mut w = vec![0u32; c.n()];
    loop {
        let cw = parallelization(c, &w)?;
        let formula = weighted_cover_number(c, &w)?;
        let alpha = covering_number(&cw) as u64;
        s.assert(COVER_WEIGHT, c, formula == alpha, || json!({ "w": w, "formula": formula, "alpha0": alpha }));
        let packing = solve_packing_ilp(c, &w)?.value;
        let beta = matching_number(&cw) as u64;
        s.assert(PACKING_MATCHING_LE, c, beta <= packing, || json!({ "w": w, "beta1": beta, "packing": packing }));
        s.assert(PACKING_MATCHING_EQ, c, beta == packing, || json!({ "w": w, "beta1": beta, "packing": packing }));
        if !advance_box(&mut w, b.parallel_w) {
            return Ok(());
        }
    }
}

fn parallel_stage(s: &mut Suite, c: &Clutter, r: &PropertyReport, b: &Bounds) -> Result<()> {
    let mfmc_top = b.parallel_w.min(b.max_w);
    let mfmc = flag(r, Prop::Mfmc);
    let normal = flag(r, Prop::Normal);
    let ntf = b.parallel_power >= 1 && is_ntf_bounded(c, b.parallel_power)?.is_certified();
    let mut w = vec![0u32; c.n()];
    loop {
        let cw = parallelization(c, &w)?;
        if mfmc && w.iter().all(|&x| x <= mfmc_top) {
            s.assert(PARALLEL_KONIG, c, has_konig(&cw), || json!({ "w": w, "parallelization": cw.compact() }));
        }
        if normal {
            let v = is_normal(&cw, b.rees())?;
            s.assert(PARALLEL_NORMAL, c, v.normal, || {
                json!({ "w": w, "parallelization": cw.compact(), "witness": v.witness })
            });
        }
        if ntf {
            let v = is_ntf_bounded(&cw, b.parallel_power)?;
            s.assert(PARALLEL_NTF, c, v.is_certified(), || json!({ "w": w, "parallelization": cw.compact(), "verdict": v }));
        }
        if !advance_box(&mut w, b.parallel_w) {
            return Ok(());
        }
    }
}

fn whisker_stage(s: &mut Suite, c: &Clutter, r: &PropertyReport, b: &Bounds) -> Result<()> {
    let (konig, pp, normal) = (flag(r, Prop::Konig), flag(r, Prop::Pp), flag(r, Prop::Normal));
    for v in 0..c.n() {
        let deleted = minor(c, VertexSet::singleton(v), VertexSet::default())?;
        let konig_hyp = konig && has_konig(&deleted);
        for &len in &b.whisker_lengths {
            let j = adjoin_whisker_edge(c, v, len)?;
            let detail = || json!({ "vertex": c.label(v), "length": len, "whiskered": j.compact() });
            if konig_hyp {
                s.assert(WHISKER_KONIG, c, has_konig(&j), detail);
            }
            if pp {
                let holds = has_packing_property(&j, b.pp_limit)?.holds;
                s.assert(WHISKER_PP, c, holds, detail);
            }
            if normal {
                let holds = is_normal(&j, b.rees())?.normal;
                s.assert(WHISKER_NORMAL, c, holds, detail);
            }
        }
    }
    Ok(())
}

fn graft_stage(s: &mut Suite, c: &Clutter, r: &PropertyReport, b: &Bounds) -> Result<()> {
    let g = graft(c)?;
    let detail = || json!({ "graft": g.compact() });
    let cm_q = is_cohen_macaulay(&g, Field::Q, DEFAULT_CM_LIMIT)?;
    s.assert(GRAFT_CM, c, cm_q.cm, || json!({ "graft": g.compact(), "witness": cm_q.witness }));
    let cm_f2 = is_cohen_macaulay(&g, Field::F2, DEFAULT_CM_LIMIT)?;
    if cm_f2.cm != cm_q.cm {
        s.field_disagreements.push(g.compact());
    }
    if flag(r, Prop::Pp) {
        let holds = has_packing_property(&g, b.pp_limit)?.holds;
        s.assert(GRAFT_PP, c, holds, detail);
    }
    let w = b.graft_w.unwrap_or(b.max_w);
    let base_mfmc = if w == b.max_w { flag(r, Prop::Mfmc) } else { mfmc_bounded(c, w)?.is_certified() };
    if base_mfmc {
        let holds = mfmc_bounded(&g, w)?.is_certified();
        s.assert(GRAFT_MFMC, c, holds, detail);
    }
    // Deleting the new vertices recovers c.
    let fresh = VertexSet::from_indices((0..g.n()).filter(|&i| c.index_of(g.label(i)).is_err()));
    let back = minor(&g, fresh, VertexSet::default())?;
    s.assert(GRAFT_MINOR, c, back == *c, || json!({ "graft": g.compact(), "minor": back.compact() }));
    Ok(())
}
