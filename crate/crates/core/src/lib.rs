pub mod canon;
pub mod compat;
pub mod cycles;
pub mod generator;
pub mod graph;
pub mod io;
pub mod validate;
