// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! Scalar abstraction shared by the linear algebra, circuit, and thermodynamic
//! layers.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
///
/// The associated tolerances are the validation thresholds used by the
/// checked constructors. They are expressed as `f64` and converted on use.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Max-abs entrywise deviation of `U†U` from identity.
    const UNITARY_TOL: f64;
    /// Hermiticity, trace and normalization slack.
    const STATE_TOL: f64;
    /// Most negative eigenvalue (or diagonal) tolerated before a hard error.
    const NEGATIVE_TOL: f64;

    /// Converts an `f64` literal. Panics only for non-representable values,
    /// which cannot happen for finite inputs with `f32`/`f64`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const UNITARY_TOL: f64 = 1e-10;
    const STATE_TOL: f64 = 1e-12;
    const NEGATIVE_TOL: f64 = 1e-10;
}

impl Real for f32 {
    const UNITARY_TOL: f64 = 1e-5;
    const STATE_TOL: f64 = 1e-5;
    const NEGATIVE_TOL: f64 = 1e-5;
}
