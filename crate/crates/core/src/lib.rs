pub mod cache;
pub mod cli;
pub mod error;
pub mod hall_littlewood;
pub mod kernels;
pub mod macdonald;
pub mod matrix;
pub mod operators;
pub mod partitions;
pub mod ring;
pub mod symfun;
pub mod verify;
pub mod xpoly;

pub use error::{Error, Result};
