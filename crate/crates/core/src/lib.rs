pub mod chimney;
pub mod cosets;
pub mod coxeter;
pub mod error;
pub mod gallery;
pub mod geometry;
pub mod oracle;
pub mod parse;
pub mod polynomial;
pub mod render;
pub mod verify;
