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

//! Pseudofractal scale-free web: class minima `c^0, d^0, c^1, b^2`, the edge
//! domination number and the MEDS counting recursion.

use crate::error::{Error, Result};
use crate::generators::Generation;
use crate::oracle::{ClassKey, ClassReport, MinEds};
use crate::scalar::{add, lift, mul, pow, scale, Count, Exact};

use super::tables::web;
use super::{min_over, steps_from_base};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WebField {
    /// Two filled hubs, none cross.
    C0,
    /// Three filled hubs.
    D0,
    /// Two filled hubs, one cross.
    C1,
    /// One filled hub, two cross.
    B2,
}

impl WebField {
    pub const ALL: [WebField; 4] = [WebField::C0, WebField::D0, WebField::C1, WebField::B2];

    pub fn class_key(self) -> ClassKey {
        let (f, c) = match self {
            WebField::C0 => (2, 0),
            WebField::D0 => (3, 0),
            WebField::C1 => (2, 1),
            WebField::B2 => (1, 2),
        };
        ClassKey::new(f, c).expect("valid class key")
    }
}

/// Class-minimum cardinalities of `G_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SfwState<T = u64> {
    pub c0: T,
    pub d0: T,
    pub c1: T,
    pub b2: T,
}

impl<T: Exact> SfwState<T> {
    pub fn new(c0: T, d0: T, c1: T, b2: T) -> Self {
        SfwState { c0, d0, c1, b2 }
    }

    /// Generation-3 seed `(c0, d0, c1, b2) = (5, 3, 3, 4)`.
    pub fn base() -> Result<Self> {
        Ok(SfwState::new(lift(5)?, lift(3)?, lift(3)?, lift(4)?))
    }

    pub fn get(&self, f: WebField) -> &T {
        match f {
            WebField::C0 => &self.c0,
            WebField::D0 => &self.d0,
            WebField::C1 => &self.c1,
            WebField::B2 => &self.b2,
        }
    }

    /// `c0 > b2 > c1 = d0`.
    pub fn satisfies_ordering(&self) -> bool {
        self.c0 > self.b2 && self.b2 > self.c1 && self.c1 == self.d0
    }

    /// One decimation step over the full term lists.
    pub fn step(&self) -> Result<Self> {
        let eval = |terms| min_over(terms, |f| self.get(f).clone());
        Ok(SfwState {
            c0: eval(web::C0_TERMS)?,
            d0: eval(web::D0_TERMS)?,
            c1: eval(web::C1_TERMS)?,
            b2: eval(web::B2_TERMS)?,
        })
    }

    /// The step specialised to states with `c0 > b2 > c1 = d0`, where each
    /// minimum is attained by a single term.
    pub fn step_reduced(&self) -> Result<Self> {
        if !self.satisfies_ordering() {
            return Err(Error::Contract(format!(
                "reduced step needs c0 > b2 > c1 = d0, got {self:?}"
            )));
        }
        Ok(SfwState {
            c0: add(&scale(2, &self.c0)?, &self.c1)?,
            d0: scale(3, &self.d0)?,
            c1: scale(3, &self.c1)?,
            b2: add(&self.b2, &scale(2, &self.c1)?)?,
        })
    }

    /// `min(c0, d0)`, the edge domination number when the state is exact.
    pub fn gamma(&self) -> T {
        self.c0.clone().min(self.d0.clone())
    }
}

impl SfwState<u64> {
    /// Reads the four class minima from a brute-force report, if all four
    /// classes are inhabited.
    pub fn from_report(report: &ClassReport) -> Option<Self> {
        let m = |f: WebField| report.get(f.class_key()).map(|e| e.min_cardinality as u64);
        Some(SfwState::new(
            m(WebField::C0)?,
            m(WebField::D0)?,
            m(WebField::C1)?,
            m(WebField::B2)?,
        ))
    }
}

/// Iterates [`SfwState::step`] from `seed` (taken as generation 3) up to `n`.
pub fn state_at<T: Exact>(seed: &SfwState<T>, n: Generation) -> Result<SfwState<T>> {
    let mut s = seed.clone();
    for _ in 0..steps_from_base(n)? {
        s = s.step()?;
    }
    Ok(s)
}

/// Edge domination number of `G_n` from the iterated recursion.
pub fn gamma<T: Exact>(n: Generation) -> Result<T> {
    Ok(state_at(&SfwState::base()?, n)?.gamma())
}

/// `(3^(n-2) + 2^(n-2), 3^(n-2), 3^(n-2), 3^(n-2) + 1)`.
pub fn closed_form<T: Exact>(n: Generation) -> Result<SfwState<T>> {
    steps_from_base(n)?;
    let p3: T = pow(3, n.get() - 2)?;
    let p2: T = pow(2, n.get() - 2)?;
    Ok(SfwState {
        c0: add(&p3, &p2)?,
        d0: p3.clone(),
        c1: p3.clone(),
        b2: add(&p3, &T::one())?,
    })
}

/// `3^(n-2)`.
pub fn gamma_closed_form<T: Exact>(n: Generation) -> Result<T> {
    Ok(closed_form::<T>(n)?.d0)
}

/// `x`: number of MEDSs; `y`: number of sets in the class `c^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SfwCounts<T = Count> {
    pub x: T,
    pub y: T,
}

impl<T: Exact> SfwCounts<T> {
    pub fn new(x: T, y: T) -> Self {
        SfwCounts { x, y }
    }

    /// Generation-3 seed `(x, y) = (1, 1)`.
    pub fn base() -> Self {
        SfwCounts::new(T::one(), T::one())
    }

    /// `x' = x^3 + x^2 y + 2 x y^2 + y^3`, `y' = x y^2 + y^3`.
    pub fn step(&self) -> Result<Self> {
        let (x, y) = (&self.x, &self.y);
        let x2 = mul(x, x)?;
        let y2 = mul(y, y)?;
        let x_plus_y = add(x, y)?;
        // x^2 (x + y) + y^2 (2x + y)
        let nx = add(&mul(&x2, &x_plus_y)?, &mul(&y2, &add(&scale(2, x)?, y)?)?)?;
        let ny = mul(&y2, &x_plus_y)?;
        Ok(SfwCounts { x: nx, y: ny })
    }
}

impl SfwCounts<Count> {
    /// `x` from the brute-force MEDS count and `y` from the `c^1` count for
    /// one fixed anchor state vector.
    pub fn from_oracle(meds: &MinEds, report: &ClassReport) -> Option<Self> {
        let y = report
            .get(WebField::C1.class_key())?
            .uniform_per_vector()?
            .clone();
        Some(SfwCounts::new(meds.count.clone(), y))
    }
}

/// Iterates [`SfwCounts::step`] from `seed` (taken as generation 3) up to `n`.
pub fn counts_at<T: Exact>(seed: &SfwCounts<T>, n: Generation) -> Result<SfwCounts<T>> {
    let mut c = seed.clone();
    for _ in 0..steps_from_base(n)? {
        c = c.step()?;
    }
    Ok(c)
}

/// Number of MEDSs of `G_n` from the counting recursion.
pub fn meds_count<T: Exact>(n: Generation) -> Result<T> {
    Ok(counts_at(&SfwCounts::base(), n)?.x)
}
