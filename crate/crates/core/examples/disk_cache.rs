//! Persisting `G` and `P` between runs.
//!
//! Run with `cargo run --release --example disk_cache -- /tmp/misi-cache`.

use std::time::Instant;

use misi::harness::{check_2special_family, DiskCache, Engine, Summary};

fn main() -> misi::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| {
        std::env::temp_dir().join("misi-cache-example").display().to_string()
    });
    for pass in ["cold", "warm"] {
        let engine = Engine::with_disk(DiskCache::new(&dir));
        let start = Instant::now();
        let records = check_2special_family(&engine, 8)?;
        println!("{pass}: {} in {:?}", Summary::of(&records), start.elapsed());
    }
    println!("cache lives in {dir}");
    Ok(())
}
