//! Hand-rolled neural network kernels with explicit backward passes.
//!
//! The crate provides the small set of layers needed for a CNN audio
//! encoder (3x3 convolutions, batch normalization, 2x2 average pooling,
//! ReLU, fully connected layers, global average pooling) together with
//! SGD/Adam optimizers and a softmax cross-entropy loss. There is no
//! autograd: every layer exposes `forward` and a matching `backward`
//! that consumes whatever the forward pass cached.
//!
//! Everything is generic over the element type so the same code runs in
//! `f32` for training and in `f64` for finite-difference gradient
//! verification.
//!
//! Batch-level work is data-parallel via rayon when the `parallel`
//! feature (default) is enabled; disabling it yields a sequential build
//! with bitwise-identical results. Parallel loops only ever write
//! disjoint output slots and reduce in a fixed order, so the thread
//! count never changes a single bit of the output.

use ndarray::NdFloat;
use num_traits::FromPrimitive;
use rand::distributions::uniform::SampleUniform;

pub mod act;
pub mod bn;
pub mod conv;
pub mod init;
pub mod linear;
pub mod losses;
pub mod optim;
pub mod par;
pub mod param;
pub mod pool;

pub use act::Relu;
pub use bn::{BatchNorm2d, BnCache, BnMode};
pub use conv::Conv2d;
pub use linear::Linear;
pub use optim::{Adam, Sgd};
pub use param::{Param, StepEntry, TensorEntry, TensorEntryMut, TensorKind};
pub use pool::{global_avg_pool, global_avg_pool_backward, AvgPool2};

/// Element type of all tensors: `f32` or `f64`.
pub trait Element: NdFloat + FromPrimitive + SampleUniform {
    const DTYPE: &'static str;
}

impl Element for f32 {
    const DTYPE: &'static str = "f32";
}

impl Element for f64 {
    const DTYPE: &'static str = "f64";
}

/// Shorthand for `F::from_f64(x).unwrap()`, for literals in generic code.
#[inline]
pub fn lit<F: Element>(x: f64) -> F {
    F::from_f64(x).expect("literal representable in element type")
}
