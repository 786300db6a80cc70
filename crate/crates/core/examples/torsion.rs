//! Torsion of E[n] via Nagell–Lutz, and the Weierstrass invariants.

use congruent::arith::int;
use congruent::elliptic::{curve_invariants, is_torsion, torsion_points, CurveE, CurvePoint};

fn main() -> congruent::Result<()> {
    for n in [1u64, 5, 6, 30, 210] {
        let pts: Vec<String> = torsion_points(n)?.iter().map(|p| p.to_string()).collect();
        let inv = curve_invariants(&int(n as i64))?;
        println!("E[{n}]: torsion {{{}}}; Δ = {}, j = {}", pts.join(", "), inv.disc, inv.j);
    }

    // (12, 36) is integral but of infinite order on E[6]
    let e6 = CurveE::from_int(6)?;
    let p = CurvePoint::affine(int(12), int(36));
    println!("\n(12, 36) torsion on E[6]? {}", is_torsion(&e6, &p));
    println!("2·(12, 36) = {}", e6.double(&p));
    Ok(())
}
