//! Pythagorean triples, their square-free classes, and triangle searches.

use congruent::arith::rat;
use congruent::triangles::{
    class_of, enumerate_pythagorean, rst_from_triangle, scale_triangle, triangle_from_rst, witness_search,
};

fn main() -> congruent::Result<()> {
    println!("primitive triples with area ≤ 2000 and their classes:");
    for t in enumerate_pythagorean(2000) {
        let class = class_of(&t);
        println!(
            "  (κ,l)=({},{})  {:?} hyp {}  area {:>5}  →  {}",
            t.kappa, t.l, t.legs, t.hyp, t.area, class.triangle
        );
    }

    println!("\nfirst triangle found for a few n (κ ≤ 200):");
    for n in [5, 6, 7, 13, 22, 41, 65] {
        match witness_search(n, 200)? {
            Some(w) => println!("  {n:>3}: {} from (κ,l)=({},{}), m={}", w.triangle, w.kappa, w.l, w.m),
            None => println!("  {n:>3}: nothing within the bound"),
        }
    }

    let five = witness_search(5, 200)?.expect("5 is reachable").triangle;
    let rst = rst_from_triangle(&scale_triangle(&five, &rat(6, 1))?)?;
    println!("\nr, s, t for 6·[5|3/2,20/3,41/6]: {}, {}, {} (n = {})", rst.r, rst.s, rst.t, rst.n);
    println!("back to a triangle: {}", triangle_from_rst(&rst));
    Ok(())
}
