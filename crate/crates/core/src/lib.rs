//! Trace codes over the cubic ring `R = F2 + vF2 + v^2F2` with `v^3 = 1`.
//!
//! For a degree `m`, the code `C_m` has one coordinate per unit `x` of
//! `R_m = F_{2^m} + vF_{2^m} + v^2F_{2^m}` and one codeword
//! `Ev(a) = (Tr(a x))_x` per ring element `a`. The Gray map sends each
//! symbol of `R` to three bits, producing a binary three-weight code of
//! length `3|R_m^*|` and dimension `3m`.
//!
//! Module layout:
//!
//! * [`gf2m`]: the binary field `F_{2^m}` and its absolute trace.
//! * [`ring`]: `R_m`, its Frobenius and Trace maps, units and the CRT split.
//! * [`gray`]: the Gray map, Lee and Hamming weights, packed binary words.
//! * [`code`]: the evaluation code, generator matrix and weight distributions.
//! * [`analysis`]: Griesmer optimality, dual Lee distance, minimal codewords
//!   and secret-sharing classification.

pub mod analysis;
pub mod code;
mod error;
pub mod gf2m;
pub mod gray;
pub mod linalg;
pub mod ring;

pub use error::{Error, Result};
