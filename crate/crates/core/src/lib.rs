pub mod blocks;
pub mod characters;
pub mod cli;
pub mod error;
pub mod rational;
pub mod osp;
pub mod rootdata;
pub mod system;
pub mod tables;
pub mod translation;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rat;
pub use rootdata::Root;
pub use weights::Weight;
pub use weyl::WeylElt;
