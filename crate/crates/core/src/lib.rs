//! Exact graded characters of local Weyl modules for the current algebra
//! `sl(n+1)[t]`.
//!
//! The crate computes the graded character of `W_loc(λ)` as the specialized
//! Macdonald (q-Whittaker) polynomial `P_λ(x; q, 0)` in two independent ways
//! (a Gelfand-Tsetlin sum of Gaussian binomials and an explicit enumeration of
//! partition overlaid patterns), multiplies characters with the `t = 0` Pieri
//! rule, and checks the closed-form character identities for tensor products
//! `W_loc(mω_i) ⊗ W_loc(kω_j)`: truncated Weyl module filtrations, `M(ν, λ)`
//! filtrations, and the `sl_3` fusion dimension recurrences.
//!
//! All arithmetic is exact over `Z[q]` with arbitrary-precision coefficients.
//!
//! Module map:
//!
//! * [`weights`]: weight lattice of `sl(n+1)`, partitions, dominance.
//! * [`qalg`]: `Z[q]`, Gaussian binomials, ratios of `(1 - q^k)` factors.
//! * [`gtpop`]: Gelfand-Tsetlin patterns, partition overlaid patterns, their
//!   order and the symbolic Chari-Loktev basis words.
//! * [`charformulas`]: graded characters, Pieri rule, closed-form formulas,
//!   decomposition in the Weyl-character basis.
//! * [`filtration`]: identity checkers, fusion dimensions, filtration layers.
//! * [`cli`]: the command-line front end used by the `weylfusion` binary.

pub mod charformulas;
pub mod cli;
pub mod error;
pub mod filtration;
pub mod gtpop;
pub mod qalg;
pub mod weights;

pub use charformulas::GradedCharacter;
pub use error::{Error, Result};
pub use gtpop::{GtPattern, Pop};
pub use qalg::{QFactorRatio, QPoly};
pub use weights::{Partition, Rank, Root, Weight};
