pub mod factory;
pub mod gf2;
pub mod graph;
pub mod matroid;
pub mod oracle;
pub mod stabilizer;
pub mod surface;
pub mod text;

pub use text::ParseError;
