//! Indices, measures and genera of the principal congruence subgroups Γ(N).

use congruent::modular::{
    gamma_index, genus_general, genus_prime, genus_principal, mu_gamma0, mu_gamma1, mu_gamma_n,
    riemann_hurwitz_check, GenusInput,
};

fn main() -> congruent::Result<()> {
    println!("{:>3} {:>8} {:>6} {:>6} {:>8} {:>6}", "N", "index", "μ(Γ0)", "μ(Γ1)", "μ(Γ)", "g");
    for n in 3..=13u64 {
        println!(
            "{n:>3} {:>8} {:>6} {:>6} {:>8} {:>6}",
            gamma_index(n)?,
            mu_gamma0(n)?,
            mu_gamma1(n)?,
            mu_gamma_n(n)?,
            genus_principal(n)?
        );
    }

    println!("\nprime levels, (p+2)(p−3)(p−5)/24:");
    for p in [5u64, 7, 11, 13, 17, 19, 23] {
        print!(" g(X({p}))={}", genus_prime(p)?);
    }
    println!();

    for (n, d, cusps) in [(5u64, 60u64, 12u64), (7, 168, 24), (11, 660, 60)] {
        let data = GenusInput::new(d, 0, 0, cusps)?;
        let g = genus_general(&data)?;
        let b = data.total_ramification().to_integer() as u64;
        println!(
            "X({n}) → X(1): degree {d}, {cusps} cusps, genus {g}, ramification {b}, Riemann–Hurwitz {}",
            riemann_hurwitz_check(g as u64, 0, d, b)
        );
    }
    Ok(())
}
