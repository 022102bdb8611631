//! Grossberg-Karshon twisted cubes built from a Lie type, a word in the
//! simple reflections and a dominant weight.
//!
//! The crate decides untwistedness through the Cartier data `m_sigma`,
//! detects hesitant lambda-walks in words, converts witnesses between the
//! two sides, enumerates signed lattice points, and runs exhaustive sweeps
//! checking that the cube is untwisted exactly when the word avoids
//! hesitant lambda-walks.

pub mod cartier;
pub mod error;
pub mod harness;
pub mod io;
pub mod render;
pub mod rootdata;
pub mod twistedcube;
pub mod walks;
pub mod weightword;

pub use error::{Error, Result};
pub use rootdata::{Family, LieType, RootData};
pub use weightword::{DominantWeight, Instance, TwistData, Word};
