//! q-expansions of E₄, E₆, Δ and j with exact coefficients.

use congruent::modular::{delta_qexp, eisenstein_qexp, j_qexp, TruncatedQSeries};

fn show(name: &str, s: &TruncatedQSeries) {
    let terms: Vec<String> = s
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{c}·q^{}", s.lowest_exponent() + i as i64))
        .collect();
    println!("{name} = {} + O(q^{})", terms.join(" + "), s.cutoff() + 1);
}

fn main() -> congruent::Result<()> {
    show("E4", &eisenstein_qexp(4, 6)?);
    show("E6", &eisenstein_qexp(6, 6)?);
    show("E8", &eisenstein_qexp(8, 6)?);
    show("Δ", &delta_qexp(10)?);
    show("j", &j_qexp(5)?);

    // E₈ = E₄²
    let e4 = eisenstein_qexp(4, 30)?;
    println!("\nE4² = E8 through q^30: {}", &e4 * &e4 == eisenstein_qexp(8, 30)?);
    Ok(())
}
