//! Corpus enumeration, property reports, the implication suite and the
//! packing-property scan.

pub mod check;
pub mod corpus;
pub mod report;
pub mod scan;
pub mod verify;

pub use check::{check_clutter, CheckOptions, Prop, PropertyReport, Verdict, REPORT_VERSION};
pub use corpus::{enumerate_clutters, CorpusSpec, MAX_GENERAL_N, MAX_UNIFORM_N};
pub use report::{emit_report, read_report, report_hash, ReportDocument, ReportFormat};
pub use scan::{scan_conforti_cornuejols, ScanEntry, ScanReport, ScanStatus};
pub use verify::{verify_clutters, verify_theorems, Bounds, Tally, VerifyReport, Violation};
