//! Serialization and rendering: JSON atlas records, endpoint listings,
//! summary tables, CSV, and SVG number-line diagrams. Every emitter is
//! byte-deterministic for a given input.

mod diagram;
mod json;
mod listing;
mod tables;

pub use crate::error::ReportError;
pub use diagram::emit_diagram;
pub use json::{atlas_from_json, atlas_to_json, AtlasRecord, EntryRecord, TailRecord};
pub use listing::render_endpoint_listing;
pub use tables::{cardinality_line, length_line, render_sweep_csv, render_tables, TableFormat, AVG_PLACES};
