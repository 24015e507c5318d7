//! Per-clutter property evaluation into a serializable report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::clutter::{Clutter, ExponentVector};
use crate::cm::{is_cohen_macaulay, CmWitness, Field, DEFAULT_CM_LIMIT};
use crate::covering::{covering_number, has_packing_property, matching_number, minimal_vertex_covers, DEFAULT_PP_LIMIT};
use crate::error::{Error, Result};
use crate::polyhedra::vertices::DEFAULT_VERTEX_LIMIT;
use crate::polyhedra::{format_rational, is_ideal_clutter, mfmc_bounded, MfmcVerdict};
use crate::rees::{is_normal, is_normal_bounded, is_ntf_bounded, BoundedVerdict, ReesLimits};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Prop {
    Covers,
    Alpha0,
    Beta1,
    Konig,
    Pp,
    Ideal,
    Mfmc,
    Normal,
    NormalBounded,
    Ntf,
    Cm,
}

impl Prop {
    pub const ALL: [Prop; 11] = [
        Prop::Covers,
        Prop::Alpha0,
        Prop::Beta1,
        Prop::Konig,
        Prop::Pp,
        Prop::Ideal,
        Prop::Mfmc,
        Prop::Normal,
        Prop::NormalBounded,
        Prop::Ntf,
        Prop::Cm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Prop::Covers => "covers",
            Prop::Alpha0 => "alpha0",
            Prop::Beta1 => "beta1",
            Prop::Konig => "konig",
            Prop::Pp => "pp",
            Prop::Ideal => "ideal",
            Prop::Mfmc => "mfmc",
            Prop::Normal => "normal",
            Prop::NormalBounded => "normal_bounded",
            Prop::Ntf => "ntf",
            Prop::Cm => "cm",
        }
    }

    /// Parses a comma-separated list such as `konig,pp,alpha0`.
    pub fn parse_list(s: &str) -> Result<Vec<Prop>> {
        let mut out: Vec<Prop> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Prop {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Prop::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property '{s}'")))
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub props: Vec<Prop>,
    pub max_w: u32,
    pub max_power: u32,
    pub field: Field,
    pub pp_limit: usize,
    pub vertex_limit: usize,
    pub cm_limit: usize,
    pub rees: ReesLimits,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            props: Prop::ALL.to_vec(),
            max_w: 3,
            max_power: 3,
            field: Field::Q,
            pp_limit: DEFAULT_PP_LIMIT,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            cm_limit: DEFAULT_CM_LIMIT,
            rees: ReesLimits::default(),
        }
    }
}

/// One property verdict. `bound` is present for properties certified only
/// up to a bound (`W` for MFMC, `k` for powers).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verdict {
    pub prop: Prop,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropertyReport {
    pub clutter: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dropped_vertices: Vec<String>,
    /// Scalar value per property, keyed by property name.
    pub summary: BTreeMap<String, Value>,
    pub verdicts: Vec<Verdict>,
    #[serde(default)]
    pub timings_us: BTreeMap<String, u64>,
    pub tool_version: String,
}

impl PropertyReport {
    pub fn verdict(&self, p: Prop) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.prop == p)
    }

    /// Whether any evaluated yes/no property came out negative.
    pub fn any_negative(&self) -> bool {
        self.verdicts.iter().any(|v| v.value == Value::Bool(false))
    }
}

pub(crate) fn monomial(c: &Clutter, a: &ExponentVector, b: u32) -> String {
    a.monomial(c.labels(), Some(b))
}

fn bounded_json(c: &Clutter, v: &BoundedVerdict) -> Option<Value> {
    match v {
        BoundedVerdict::CertifiedUpTo(_) => None,
        BoundedVerdict::Counterexample { a, i } => Some(json!({ "a": a, "i": i, "monomial": monomial(c, a, *i) })),
    }
}

/// Evaluates the requested properties. Size limits surface as
/// [`Error::TooLarge`].
pub fn check_clutter(c: &Clutter, dropped: &[String], opts: &CheckOptions) -> Result<PropertyReport> {
    let mut verdicts = Vec::new();
    let mut timings = BTreeMap::new();
    let names = |s: crate::clutter::VertexSet| s.iter().map(|i| c.label(i).to_string()).collect::<Vec<_>>();
    for &p in &opts.props {
        let start = Instant::now();
        let v = match p {
            Prop::Covers => {
                let covers: Vec<Vec<String>> = minimal_vertex_covers(c).covers().iter().map(|&s| names(s)).collect();
                plain(p, json!(covers))
            }
            Prop::Alpha0 => plain(p, json!(covering_number(c))),
            Prop::Beta1 => plain(p, json!(matching_number(c))),
            Prop::Konig => {
                let (a, b) = (covering_number(c), matching_number(c));
                let mut v = plain(p, json!(a == b));
                if a != b {
                    v.witness = Some(json!({ "alpha0": a, "beta1": b }));
                }
                v
            }
            Prop::Pp => {
                let r = has_packing_property(c, opts.pp_limit)?;
                let mut v = plain(p, json!(r.holds));
                v.witness = r.witness.map(|w| json!(w));
                v
            }
            Prop::Ideal => {
                let r = is_ideal_clutter(c, opts.vertex_limit)?;
                let mut v = plain(p, json!(r.ideal));
                v.witness =
                    r.witness.map(|x| json!({ "vertex": x.iter().map(format_rational).collect::<Vec<_>>() }));
                v
            }
            Prop::Mfmc => {
                let r = mfmc_bounded(c, opts.max_w)?;
                let mut v = plain(p, json!(r.is_certified()));
                v.bound = Some(opts.max_w);
                match r {
                    MfmcVerdict::CertifiedUpTo(_) => v.note = Some("certified on the weight box only".into()),
                    MfmcVerdict::Counterexample { w, alpha0, packing } => {
                        v.witness = Some(json!({ "w": w, "alpha0": alpha0, "packing": packing }))
                    }
                }
                v
            }
            Prop::Normal => {
                let r = is_normal(c, opts.rees)?;
                let mut v = plain(p, json!(r.normal));
                v.witness = r
                    .witness
                    .map(|(a, b)| json!({ "a": a, "b": b, "monomial": monomial(c, &a, b) }));
                v
            }
            Prop::NormalBounded => {
                let r = is_normal_bounded(c, opts.max_power)?;
                let mut v = plain(p, json!(r.is_certified()));
                v.bound = Some(opts.max_power);
                v.witness = bounded_json(c, &r);
                v
            }
            Prop::Ntf => {
                let r = is_ntf_bounded(c, opts.max_power)?;
                let mut v = plain(p, json!(r.is_certified()));
                v.bound = Some(opts.max_power);
                v.witness = bounded_json(c, &r);
                v
            }
            Prop::Cm => {
                let r = is_cohen_macaulay(c, opts.field, opts.cm_limit)?;
                let mut v = plain(p, json!(r.cm));
                v.note = Some(format!("field {}", r.field));
                v.witness = r.witness.map(|w| match w {
                    CmWitness::Mixed { covers } => json!({ "covers": covers }),
                    CmWitness::Link { face, dim, betti } => json!({ "face": face, "dim": dim, "betti": betti }),
                });
                v
            }
        };
        timings.insert(p.name().to_string(), start.elapsed().as_micros() as u64);
        verdicts.push(v);
    }
    let summary = verdicts.iter().map(|v| (v.prop.name().to_string(), v.value.clone())).collect();
    Ok(PropertyReport {
        clutter: c.compact(),
        dropped_vertices: dropped.to_vec(),
        summary,
        verdicts,
        timings_us: timings,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

fn plain(prop: Prop, value: Value) -> Verdict {
    Verdict { prop, value, witness: None, bound: None, note: None }
}
