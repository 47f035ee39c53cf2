//! Busy Beaver workbench: machine names, an exact simulator, rule-table
//! recombination and enumeration searches over machine pools.
//!
//! ```
//! use bbrecomb::{decode_name, run, StateCount};
//!
//! let m = decode_name("(9, 0, 11, 1, 12, 2, 17, 3, 23, 4, 3, 5, 8, 6, 26, 8, 15, 9, 5)", StateCount::BB5).unwrap();
//! let outcome = run(&m, 1_000_000);
//! assert_eq!((outcome.ones, outcome.steps), (501, 134_466));
//! ```

pub mod catalog;
pub mod error;
pub mod lineage;
pub mod machine;
pub mod recombine;
pub mod search;
pub mod simulator;
pub mod tape;

pub use catalog::{builtin_catalog, builtin_pool, golden_pool, golden_recombinations, load_pool, CatalogEntry, Pool};
pub use error::{CatalogError, LineageError, ListingError, NameError, NotHalted, RecombineError, SearchError};
pub use lineage::{evaluate_lineage, Lineage, MachineRegistry};
pub use machine::{
    decode_action, decode_name, encode_name, parse_rule_listing, Action, ActionCode, Machine, MachineName, Move,
    StateCount,
};
pub use recombine::{enumerate_kway, enumerate_pairwise, recombine, Enumeration, RecombinationSpec};
pub use search::{classify_mpp, search, verify_catalog, MppClass, SearchConfig, SearchRecord, SearchReport, Verdict};
pub use simulator::{rado_report, run, RadoCounts, RunOutcome, Simulation, Status, DEFAULT_STEP_LIMIT};
pub use tape::{count_ones, Tape};
