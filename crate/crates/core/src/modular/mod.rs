//! Congruence-subgroup indices, modular-curve genera and q-expansions.

mod forms;
mod genus;
mod series;

pub use forms::{delta_qexp, eisenstein_constant, eisenstein_qexp, j_qexp, ramanujan_tau};
pub use genus::{
    gamma_index, genus_general, genus_general_exact, genus_prime, genus_principal, mu_gamma0,
    mu_gamma1, mu_gamma_n, phi, psi, riemann_hurwitz_check, GenusInput,
};
pub use series::TruncatedQSeries;
