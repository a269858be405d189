// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact scalar types used by the recursions.
//!
//! Class minima are small integers that grow like `3^n`; MEDS counts grow
//! doubly exponentially. Both are handled through the [`Exact`] trait so the
//! same recursion code runs on machine words (with overflow detection) or on
//! the arbitrary-precision [`Count`].

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use malachite_nz::natural::Natural;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Zero};

use crate::error::{Error, Result};

/// Nonnegative exact integer arithmetic with overflow reporting.
pub trait Exact:
    Clone
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
{
}

impl<T> Exact for T where
    T: Clone
        + Ord
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
{
}

pub(crate) fn add<T: Exact>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b)
        .ok_or_else(|| Error::Capacity(format!("{a} + {b} overflows the scalar type")))
}

pub(crate) fn sub<T: Exact>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b)
        .ok_or_else(|| Error::Input(format!("{a} - {b} is negative")))
}

pub(crate) fn mul<T: Exact>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Capacity(format!("{a} * {b} overflows the scalar type")))
}

pub(crate) fn lift<T: Exact>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or_else(|| Error::Capacity(format!("{v} does not fit the scalar type")))
}

/// `k * a` for a small constant `k`.
pub(crate) fn scale<T: Exact>(k: u64, a: &T) -> Result<T> {
    mul(&lift::<T>(k)?, a)
}

/// `base^exp` with overflow reporting.
pub(crate) fn pow<T: Exact>(base: u64, exp: u32) -> Result<T> {
    let b = lift::<T>(base)?;
    let mut acc = T::one();
    for _ in 0..exp {
        acc = mul(&acc, &b)?;
    }
    Ok(acc)
}

/// Arbitrary-precision nonnegative integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(Natural);

impl Count {
    pub fn new(v: Natural) -> Self {
        Count(v)
    }

    pub fn as_natural(&self) -> &Natural {
        &self.0
    }

    /// Number of decimal digits.
    pub fn decimal_len(&self) -> usize {
        self.to_string().len()
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Natural::from_str(s.trim())
            .map(Count)
            .map_err(|_| Error::Input(format!("not a nonnegative decimal integer: {s:?}")))
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(Natural::from(v))
    }
}

impl From<u32> for Count {
    fn from(v: u32) -> Self {
        Count(Natural::from(v))
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl Mul for Count {
    type Output = Count;

    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl Zero for Count {
    fn zero() -> Self {
        Count(Natural::from(0u32))
    }

    fn is_zero(&self) -> bool {
        self.0 == 0u32
    }
}

impl One for Count {
    fn one() -> Self {
        Count(Natural::from(1u32))
    }
}

impl CheckedAdd for Count {
    fn checked_add(&self, v: &Self) -> Option<Self> {
        Some(Count(&self.0 + &v.0))
    }
}

impl std::ops::Sub for Count {
    type Output = Count;

    fn sub(self, rhs: Count) -> Count {
        Count(self.0 - rhs.0)
    }
}

impl CheckedSub for Count {
    fn checked_sub(&self, v: &Self) -> Option<Self> {
        (self.0 >= v.0).then(|| Count(&self.0 - &v.0))
    }
}

impl CheckedMul for Count {
    fn checked_mul(&self, v: &Self) -> Option<Self> {
        Some(Count(&self.0 * &v.0))
    }
}

impl FromPrimitive for Count {
    fn from_i64(n: i64) -> Option<Self> {
        u64::try_from(n).ok().map(Count::from)
    }

    fn from_u64(n: u64) -> Option<Self> {
        Some(Count::from(n))
    }

    fn from_u128(n: u128) -> Option<Self> {
        Some(Count(Natural::from(n)))
    }
}
