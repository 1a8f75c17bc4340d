//! Rendering and verification sweeps behind the `umbral` binary.

pub mod render;
pub mod verify;

pub use render::OutputFormat;
pub use verify::{Property, VerifyReport};
