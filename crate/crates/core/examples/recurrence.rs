//! The recurrence `b_{j+1} = zeta^(d-1) C b_j + 1` modulo `B_1`, and the
//! quotients it is about.
//!
//! Run with `cargo run --release --example recurrence`.

use misi::OrbitCtx;

fn main() -> misi::Result<()> {
    let ctx = OrbitCtx::new(2)?;
    println!("B_1 = {}", ctx.big_b(2, 1, 1, 1)?.to_human("c"));
    println!("B_2 = {}", ctx.big_b(2, 1, 2, 1)?.to_human("c"));
    println!("b_2 = {}", ctx.small_b(2, 1, 2, 1)?.to_human("c"));
    println!("C   = {}", ctx.c_const(2, 1)?.to_human("c"));

    for d in [2, 3] {
        let ctx = OrbitCtx::new(d)?;
        for e in 1..d {
            for m in 2..=4 {
                for l in 1..=2 {
                    let rec = ctx.recurrence_check(m, l, 3, e)?;
                    let geo = ctx.geometric_check(m, l, 3, e)?;
                    println!("d={d} e={e} m={m} l={l}: recurrence {rec}, closed form {geo}");
                }
            }
        }
    }
    Ok(())
}
