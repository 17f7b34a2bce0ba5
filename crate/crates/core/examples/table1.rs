//! Heights of `Res(P_{m,n}, Phi_l)` for `m + n <= 7`, compared with the
//! published table.
//!
//! Run with `cargo run --release --example table1`.

use misi::harness::{compare_table1, published_table1, table1, table1_csv, Engine};

fn main() -> misi::Result<()> {
    let engine = Engine::new();
    let rows = table1(&engine)?;
    print!("{}", table1_csv(&rows)?);

    let diffs = compare_table1(&rows, &published_table1());
    println!("\n{} of {} cells differ from the published values", diffs.len(), rows.len() * 9);
    for d in diffs {
        println!(
            "  ({},{}) {}: published {}, computed {}",
            d.m,
            d.n,
            d.column,
            d.expected.unwrap_or_default(),
            d.computed.unwrap_or_default()
        );
    }
    Ok(())
}
