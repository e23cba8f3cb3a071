//! Learning-policy optimization for gradient-descent training.
//!
//! The crate trains models under a *learning policy* — a time-varying
//! distribution over training examples — and optimizes that policy so the
//! area under the desired-loss curve is minimal. Around that sit the
//! diagnostics that make the result inspectable: per-example contribution
//! scores, the contribution signal-noise ratio, compression ratios in the
//! training-as-compression view, a lossless codec that realizes that view
//! bit-for-bit, and power-law fits of the loss curves.
//!
//! Module map:
//! - [`data`]: synthetic linear-classification task, text ingestion,
//!   tokenization and perturbation.
//! - [`models`]: differentiable kernels (logistic perceptron, small
//!   decoder-only transformer) exposing loss / gradient / HVP on a flat
//!   parameter vector.
//! - [`trainer`]: full-batch weighted GD rollouts with checkpointed
//!   trajectories.
//! - [`policy`]: simplex projection, adjoint hypergradients through the
//!   training dynamics, proximal-gradient policy optimization.
//! - [`metrics`]: contribution matrices, SIM series, compression ratios,
//!   zero-weight diagnostics.
//! - [`codec`]: training-as-compression encoder/decoder over a range coder.
//! - [`scaling`]: loss-curve power-law fitting and acceleration ratios.
//!
//! Everything is deterministic given explicit seeds; per-example inner
//! loops fan out over rayon (feature `parallel`, on by default) with a
//! fixed reduction order so worker count never changes results.

pub mod codec;
pub mod data;
mod error;
pub mod exec;
pub mod io;
pub mod metrics;
pub mod models;
pub mod policy;
pub mod rng;
pub mod scaling;
pub mod trainer;

pub use error::{Error, Result};
