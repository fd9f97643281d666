//! Exact computations in the super Yangian Y(gl(M|N)).

pub mod algebra;
pub mod api;
pub mod error;
pub mod gauss;
pub mod json;
pub mod matrix;
pub mod morphisms;
pub mod pbw;
pub mod rational;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
