//! Exact degrees of irreducible representations of simply-connected
//! semisimple complex groups, searches for pairs of representations of equal
//! degree that no automorphism relates, and the Pell-equation machinery that
//! produces infinitely many such pairs in type `C_l`.
//!
//! ```
//! use weyldeg::dimension::{weyl_dim, DominantWeight};
//! use weyldeg::rootdata::datum_from_str;
//!
//! let g2 = datum_from_str("G2").unwrap();
//! let a = weyl_dim(&g2, &DominantWeight::from_u64s(&[2, 0])).unwrap();
//! let b = weyl_dim(&g2, &DominantWeight::from_u64s(&[0, 3])).unwrap();
//! assert_eq!(a, b);
//! assert_eq!(a.to_string(), "77");
//! ```

pub mod cli;
pub mod dimension;
pub mod error;
pub mod families;
pub mod pell;
pub mod records;
pub mod rootdata;
pub mod search;
pub mod verify;

pub use dimension::{weyl_dim, Degree, DominantWeight};
pub use error::{Error, Result};
pub use rootdata::{build_datum, datum_from_str, LieType, RootDatum};
