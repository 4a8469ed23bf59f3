//! Exact arithmetic for the polynomials `K_{a,n}(x) = x^n + (1-x)^n + a^n`:
//! the reduced forms `K~_n`, root localization, the Moebius symmetry group,
//! finite-field reductions, discriminants and irreducibility certificates.
//!
//! ```
//! use kfermat::kfamily::k_tilde;
//!
//! let r = k_tilde(8).unwrap();
//! assert_eq!(r.poly.to_string(), "x^6 - 3x^5 + 10x^4 - 15x^3 + 10x^2 - 3x + 1");
//! assert_eq!(r.b_n, 1);
//! ```

pub mod certify;
pub mod cli;
pub mod disc;
pub mod error;
pub mod kfamily;
pub mod localization;
pub mod modp;
pub mod polycore;
pub mod report;
pub mod symmetry;

pub use error::{Error, Result};
pub use polycore::{IntPoly, RatScalar};
