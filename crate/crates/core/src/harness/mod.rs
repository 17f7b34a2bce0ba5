//! Verification sweeps, Table 1 reproduction and growth ratios, with a
//! polynomial cache shared across them.

mod cache;
mod checks;
mod engine;
mod record;
mod table;

pub use cache::{DiskCache, Kind, CACHE_ENV};
pub use checks::{
    abs_norm_resultant, check_2special_family, check_coefficient_lemmas, check_cross_identity, check_recurrence,
    check_special_resultants, check_unit_conjecture, mn_grid,
};
pub use engine::Engine;
pub use record::{sort_records, CheckRecord, Params, Summary, Verdict};
pub use table::{
    compare_table1, growth_from_resultants, growth_report, published_table1, parse_table1_csv,
    rows_from_resultants, table1, table1_csv, table1_resultants, GrowthEntry, GrowthReport,
    ResultantRow, Table1Mismatch, Table1Row, COMPUTED_TABLE1_CSV, PUBLISHED_TABLE1_CSV, RATIO_DIGITS,
    TABLE_LMAX, TABLE_MAX_MN,
};
