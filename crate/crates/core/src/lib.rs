pub mod cyclo;
pub mod error;
mod json;

pub use cyclo::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub mod chartab;
pub use chartab::{CharacterTable, Character, ConjugacyClass, CoverInfo};
pub mod molien;
pub use molien::MolienProfile;
pub mod oracle;
pub mod rdplan;
pub mod data;
pub mod cli;
