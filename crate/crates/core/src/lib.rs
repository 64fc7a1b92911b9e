//! Core numerics and learning machinery for online off-policy RL with a fixed
//! offline dataset.
//!
//! The crate is self-contained and `no_std`-compatible (`alloc` required):
//! dense-network forward/backward passes with LayerNorm, Adam, replay storage
//! with symmetric online/offline sampling, the ensemble actor-critic learner,
//! two toy control environments with scripted data-collection policies, and
//! diagnostic experiments for the critic-bounding analysis. File formats, the
//! CLI, and run orchestration live in the companion `rlpd-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod agent;
pub mod diagnostics;
pub mod env;
pub mod error;
pub mod nn;
pub mod optim;
pub mod policy;
pub mod replay;

mod linalg;

pub use error::{CoreError, Result};
