//! ζ(s) as a partial sum and an Euler product, and local data of E[n].

use congruent::lseries::{count_points_mod_p, l_curve_truncated, tail_bound, zeta_euler, zeta_partial};

fn main() -> congruent::Result<()> {
    let exact = std::f64::consts::PI.powi(2) / 6.0;
    println!("{:>8} {:>20} {:>20} {:>10}", "terms", "Σ n^-2", "∏ (1-p^-2)^-1", "tail");
    for b in [10u64, 100, 1_000, 10_000, 100_000] {
        println!("{b:>8} {:>20.15} {:>20.15} {:>10.1e}", zeta_partial(2.0, b)?, zeta_euler(2.0, b)?, tail_bound(2.0, b));
    }
    println!("{:>8} {exact:>20.15}", "π²/6");

    println!("\nE[5] mod p:");
    for p in [3u64, 7, 11, 13, 17, 29, 37] {
        let f = count_points_mod_p(5, p)?;
        println!("  p={p:>2}  #E = {:>3}  a_p = {:>3}  {:?}", f.point_count, f.a_p, f.reduction);
    }
    let l = l_curve_truncated(5, 2.0, 10_000)?;
    println!("\nL(E[5], 2) over primes ≤ 10⁴ ≈ {:.6}", l.value);
    Ok(())
}
