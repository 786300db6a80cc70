//! Triangles of area q as points of E[q]: y² = x³ − q²x, and new triangles
//! from the group law.

use congruent::arith::{int, rat};
use congruent::elliptic::{generate_points, orbit8, point_from_triangle, triangle_from_point, CurveE};
use congruent::triangles::RationalTriangle;

fn main() -> congruent::Result<()> {
    let t = RationalTriangle::new(int(5), rat(3, 2), rat(20, 3), rat(41, 6))?;
    let e5 = CurveE::from_int(5)?;
    let p = point_from_triangle(&t)?;
    println!("{t} ↦ {p}");

    println!("\nsign and leg changes:");
    for q in orbit8(&t)? {
        println!("  {q:<22} ↤ {}", triangle_from_point(&e5, &q)?);
    }

    println!("\nmultiples of P give ever larger triangles of area 5:");
    for (k, q) in generate_points(&e5, &p, 3)?.iter().enumerate() {
        let tri = triangle_from_point(&e5, q)?;
        println!("  {}P = {q}\n      {tri}", k + 2);
    }
    Ok(())
}
