//! Constructive colorings of subcubic signed graphs by reducible
//! configurations.

pub mod audit;
pub mod bad_blocks;
pub mod config;
pub mod engine;
pub mod pattern;
pub mod small;
pub mod theorem3;
pub mod theorem5;

pub use audit::{audit_claim, ClaimReport};
pub use bad_blocks::{detect_bad_blocks, BadBlock, BadBlockKind};
pub use config::{find_configuration, ConfigKind, Configuration};
pub use engine::{AuditOutcome, Extension, ExtensionPath, LocalInstance};
pub use small::{color_32_small, extend_pendant, small_case_table};
pub use theorem3::color_53;
pub use theorem5::{color_theorem5, color_theorem5_traced, theorem5_demands, TraceStep};
