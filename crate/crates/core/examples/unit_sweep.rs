//! Which values `G_{d,m,l}(c_0)` are algebraic units, for `d = 2, 3`,
//! printed as newline-delimited JSON records.
//!
//! Run with `cargo run --release --example unit_sweep`.

use misi::harness::{check_unit_conjecture, Engine, Summary};

fn main() -> misi::Result<()> {
    let engine = Engine::new();
    for (d, max_mn) in [(2, 7), (3, 5)] {
        let records = check_unit_conjecture(&engine, d, max_mn)?;
        for r in &records {
            println!("{}", r.to_ndjson());
        }
        eprintln!("d={d}: {}", Summary::of(&records));
    }
    Ok(())
}
