//! Dirichlet characters mod κ and their L-series.
//!
//!     cargo run --example dirichlet_characters -- 12

use congruent::lseries::{characters, l_chi, l_chi_euler, orthogonality_sum, CharValue, UnitGroup};

fn show(v: CharValue) -> String {
    match v {
        CharValue::Zero => "0".into(),
        CharValue::Root(t) => format!("e({t})"),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kappa: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10);
    let group = UnitGroup::new(kappa)?;
    println!("(ℤ/{kappa})^× has order {}, generators (g, ord g): {:?}", group.order(), group.generators);

    for (i, chi) in characters(kappa)?.iter().enumerate() {
        let row: Vec<String> = chi.values().into_iter().map(show).collect();
        let l = l_chi(2.0, chi, 100_000)?;
        let e = l_chi_euler(2.0, chi, 100_000)?;
        println!("χ{}: [{}]", i + 1, row.join(" "));
        println!("     Σχ = {:.3}   L(2,χ) ≈ {:.9}  (Euler product {:.9})", orthogonality_sum(chi), l, e);
    }
    Ok(())
}
