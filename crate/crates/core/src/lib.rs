pub mod chain;
pub mod checkers;
pub mod cli;
pub mod engine;
pub mod error;
pub mod filtration;
pub mod pp;
pub mod sset;
