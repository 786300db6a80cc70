//! Exact arithmetic around the congruent number problem.
//!
//! A positive rational `q` is congruent when it is the area of a right triangle
//! with rational sides. Such triangles correspond to points of
//! `E[q]: y² = x³ − q²x` with `y ≠ 0`, and Tunnell's lattice-point counts give
//! a necessary condition for congruence of a square-free integer.
//!
//! * [`arith`]: factorization, Möbius, square-free parts, Bernoulli numbers.
//! * [`triangles`]: Pythagorean parametrization and witness search.
//! * [`elliptic`]: the group law on `E[q]` and the triangle ↔ point bijection.
//! * [`tunnell`]: ternary-form counts and classification.
//! * [`lseries`]: Dirichlet characters, zeta/L partial sums, `a_p(E[n])`.
//! * [`modular`]: congruence-subgroup indices, genera, `E_k`, `Δ`, `j`.
//! * [`cli`]: the `congruent` command line.
//!
//! ```
//! use congruent::tunnell::{classify, CongruenceStatus};
//!
//! let status = classify(5, 200).unwrap();
//! let w = status.witness().unwrap();
//! assert_eq!(w.triangle.to_string(), "[5|3/2,20/3,41/6]");
//! assert_ne!(classify(1, 200).unwrap(), CongruenceStatus::TunnellPositiveUnverified);
//! ```

pub mod arith;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod lseries;
pub mod modular;
pub mod triangles;
pub mod tunnell;

pub use arith::ExactRational;
pub use error::{Error, Result};
