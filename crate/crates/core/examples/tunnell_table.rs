//! Tunnell's criterion for square-free n up to a limit.
//!
//!     cargo run --example tunnell_table -- 120

use congruent::tunnell::{kernel_scan, CongruenceStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(65);
    let rows = kernel_scan(limit, 200)?;

    println!("{:>6} {:>5} {:>5} {:>5} {:>5} {:>5}  status", "n", "A", "B", "C", "D", "L•");
    for row in &rows {
        let c = row.counts;
        let detail = match &row.status {
            CongruenceStatus::CongruentWitnessed(w) => w.triangle.to_string(),
            other => other.describe().to_string(),
        };
        println!("{:>6} {:>5} {:>5} {:>5} {:>5} {:>5}  {detail}", c.n, c.a, c.b, c.c, c.d, row.l_bullet);
    }

    let kernel = rows.iter().filter(|r| r.l_bullet == 0).count();
    let witnessed = rows.iter().filter(|r| r.status.witness().is_some()).count();
    println!("\n{} square-free n ≤ {limit}: {kernel} with L• = 0, {witnessed} with a triangle found", rows.len());
    Ok(())
}
