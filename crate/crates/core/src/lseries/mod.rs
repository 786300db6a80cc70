//! Dirichlet characters, zeta and L-series partial sums, Euler products, and
//! the local factors of `L(E[n], s)`.

mod characters;
mod hasse_weil;
mod zeta;

pub use characters::{characters, orthogonality_sum, CharValue, DirichletCharacter, UnitGroup};
pub use hasse_weil::{
    count_points_mod_p, l_curve_truncated, z_hasse_weil, LocalFactorData, Reduction, TruncatedL,
};
pub use zeta::{l_chi, l_chi_euler, tail_bound, zeta_euler, zeta_partial};
