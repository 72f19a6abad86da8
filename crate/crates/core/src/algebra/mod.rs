pub mod matrix;
pub mod parse;
pub mod partition;
pub mod permutation;
pub mod poly;
pub mod polyzq;
pub mod rational;
pub mod ring;
pub mod symfunc;

pub use matrix::RingMatrix;
pub use partition::Partition;
pub use permutation::Permutation;
pub use poly::{Monomial, Poly};
pub use polyzq::{PolyZQ, Var};
pub use rational::Rational;
pub use ring::{Field, Ring};
pub use symfunc::SymFunc;
