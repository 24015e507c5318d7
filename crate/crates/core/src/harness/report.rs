//! Versioned report documents: JSON, CSV and text renderings plus a
//! timing-independent content hash.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::check::{PropertyReport, REPORT_VERSION};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::InvalidArgument(format!("unknown format '{s}' (json, csv, text)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub version: u32,
    pub reports: Vec<PropertyReport>,
}

impl ReportDocument {
    pub fn new(reports: Vec<PropertyReport>) -> Self {
        ReportDocument { version: REPORT_VERSION, reports }
    }
}

pub fn emit_report(reports: &[PropertyReport], format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => {
            let doc = ReportDocument::new(reports.to_vec());
            serde_json::to_vec(&doc).map_err(|e| Error::Report(e.to_string()))
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(["clutter", "prop", "value", "bound", "witness", "note"]).map_err(io)?;
            for r in reports {
                for v in &r.verdicts {
                    let bound = v.bound.map(|b| b.to_string()).unwrap_or_default();
                    let witness = v.witness.as_ref().map(Value::to_string).unwrap_or_default();
                    w.write_record([
                        r.clutter.as_str(),
                        v.prop.name(),
                        &scalar(&v.value),
                        &bound,
                        &witness,
                        v.note.as_deref().unwrap_or(""),
                    ])
                    .map_err(io)?;
                }
            }
            w.into_inner().map_err(|e| Error::Io(e.to_string()))
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "clutter {}", r.clutter);
                if !r.dropped_vertices.is_empty() {
                    let _ = writeln!(s, "  dropped vertices: {}", r.dropped_vertices.join(" "));
                }
                for v in &r.verdicts {
                    let _ = write!(s, "  {:<15} {}", v.prop.name(), scalar(&v.value));
                    if let Some(b) = v.bound {
                        let _ = write!(s, " (bound {b})");
                    }
                    if let Some(w) = &v.witness {
                        let _ = write!(s, "  witness {w}");
                    }
                    s.push('\n');
                }
            }
            Ok(s.into_bytes())
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses a JSON report, rejecting unknown fields and other versions.
pub fn read_report(bytes: &[u8]) -> Result<ReportDocument> {
    let doc: ReportDocument = serde_json::from_slice(bytes).map_err(|e| Error::Report(e.to_string()))?;
    if doc.version != REPORT_VERSION {
        return Err(Error::Report(format!("unsupported report version {}", doc.version)));
    }
    Ok(doc)
}

/// SHA-256 of the JSON rendering with timings cleared, as lowercase hex.
pub fn report_hash(reports: &[PropertyReport]) -> String {
    let stripped: Vec<PropertyReport> = reports
        .iter()
        .map(|r| PropertyReport { timings_us: Default::default(), ..r.clone() })
        .collect();
    hash_value(&serde_json::to_value(ReportDocument::new(stripped)).expect("report serializes"))
}

pub(crate) fn hash_value(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::Clutter;
    use crate::harness::check::{check_clutter, CheckOptions};

    fn triangle_report() -> PropertyReport {
        let t = Clutter::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        check_clutter(&t, &[], &CheckOptions::default()).unwrap()
    }

    #[test]
    fn empty_json() {
        assert_eq!(emit_report(&[], ReportFormat::Json).unwrap(), br#"{"version":1,"reports":[]}"#);
    }

    #[test]
    fn triangle_json_and_csv() {
        let r = triangle_report();
        let json = String::from_utf8(emit_report(std::slice::from_ref(&r), ReportFormat::Json).unwrap()).unwrap();
        assert!(json.contains(r#""konig":false"#));
        assert!(json.contains(r#""witness":{"alpha0":2,"beta1":1}"#));
        let csv = String::from_utf8(emit_report(std::slice::from_ref(&r), ReportFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv.lines().count(), 1 + r.verdicts.len());
        let text = String::from_utf8(emit_report(&[r], ReportFormat::Text).unwrap()).unwrap();
        assert!(text.contains("konig"));
    }

    #[test]
    fn round_trip_and_strict_read() {
        let r = triangle_report();
        let bytes = emit_report(std::slice::from_ref(&r), ReportFormat::Json).unwrap();
        assert_eq!(read_report(&bytes).unwrap().reports, vec![r]);
        assert!(read_report(br#"{"version":1,"reports":[],"extra":0}"#).is_err());
        assert!(read_report(br#"{"version":2,"reports":[]}"#).is_err());
    }

    #[test]
    fn hash_ignores_timings() {
        let a = triangle_report();
        let mut b = a.clone();
        b.timings_us.insert("konig".into(), 12345);
        assert_eq!(report_hash(&[a.clone()]), report_hash(&[b]));
        assert_eq!(report_hash(&[a]).len(), 64);
    }
}
