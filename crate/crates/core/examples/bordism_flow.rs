//! Components of E[n](ℝ), conform scaling between curves, and the scaling flow.

use congruent::arith::{int, rat};
use congruent::elliptic::{bordant, component, conform_image, flow_map, is_square_scaling, CurveE, CurvePoint};

fn main() -> congruent::Result<()> {
    let e5 = CurveE::from_int(5)?;
    let p = CurvePoint::affine(rat(25, 4), rat(75, 8));
    let q = CurvePoint::affine(int(-4), int(6));
    println!("{p}: {:?}   {q}: {:?}   bordant: {}", component(&e5, &p)?, component(&e5, &q)?, bordant(&e5, &p, &q)?);

    let img = conform_image(&e5, &rat(3, 1), &p)?;
    println!("\ns = 3 sends {p} on E[5] to {img} on E[45]");

    for target in [45u64, 20, 6] {
        println!("\nflow 5 → {target} (square class shared: {})", is_square_scaling(5, target)?);
        for lambda in [0.0, 0.5, 1.0] {
            let f = flow_map(5, target, lambda, &p)?;
            let exact = f.exact.map(|e| e.to_string()).unwrap_or_else(|| "-".into());
            println!(
                "  λ={lambda:<3} n_λ={:<5} approx={:?} exact={exact} residual={:.1e}",
                f.n_lambda, f.approx.unwrap(), f.residual
            );
        }
    }
    Ok(())
}
