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

//! Sierpinski gasket: the ten class minima, the value chain they settle
//! into, the edge domination number and the MEDS counting recursion.

use crate::error::Result;
use crate::generators::Generation;
use crate::oracle::{ClassKey, ClassReport, MinEds};
use crate::scalar::{add, lift, mul, pow, scale, sub, Count, Exact};

use super::tables::gasket;
use super::{min_over, steps_from_base};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SgField {
    A0,
    A1,
    A2,
    A3,
    B0,
    B1,
    B2,
    C0,
    C1,
    D0,
}

impl SgField {
    pub const ALL: [SgField; 10] = [
        SgField::A0,
        SgField::A1,
        SgField::A2,
        SgField::A3,
        SgField::B0,
        SgField::B1,
        SgField::B2,
        SgField::C0,
        SgField::C1,
        SgField::D0,
    ];

    /// `(filled, cross)` anchor counts: `a^i = (0, i)`, `b^i = (1, i)`,
    /// `c^i = (2, i)`, `d^0 = (3, 0)`.
    pub fn class_key(self) -> ClassKey {
        let (f, c) = match self {
            SgField::A0 => (0, 0),
            SgField::A1 => (0, 1),
            SgField::A2 => (0, 2),
            SgField::A3 => (0, 3),
            SgField::B0 => (1, 0),
            SgField::B1 => (1, 1),
            SgField::B2 => (1, 2),
            SgField::C0 => (2, 0),
            SgField::C1 => (2, 1),
            SgField::D0 => (3, 0),
        };
        ClassKey::new(f, c).expect("valid class key")
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Class-minimum cardinalities of `S_n`, in [`SgField::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SgState<T = u64> {
    pub a0: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub b0: T,
    pub b1: T,
    pub b2: T,
    pub c0: T,
    pub c1: T,
    pub d0: T,
}

impl<T: Exact> SgState<T> {
    pub fn from_array(v: [T; 10]) -> Self {
        let [a0, a1, a2, a3, b0, b1, b2, c0, c1, d0] = v;
        SgState {
            a0,
            a1,
            a2,
            a3,
            b0,
            b1,
            b2,
            c0,
            c1,
            d0,
        }
    }

    pub fn to_array(&self) -> [T; 10] {
        SgField::ALL.map(|f| self.get(f).clone())
    }

    /// The chain state built around `m`: `a3 = m - 1`, `b0 = c0 = d0 = m + 1`
    /// and the remaining six fields equal to `m`.
    pub fn chain(m: T) -> Result<Self> {
        let below = sub(&m, &T::one())?;
        let above = add(&m, &T::one())?;
        Ok(SgState {
            a0: m.clone(),
            a1: m.clone(),
            a2: m.clone(),
            a3: below,
            b0: above.clone(),
            b1: m.clone(),
            b2: m.clone(),
            c0: above.clone(),
            c1: m,
            d0: above,
        })
    }

    /// Generation-3 seed, the chain around 5:
    /// `(5, 5, 5, 4, 6, 5, 5, 6, 5, 6)`.
    pub fn base() -> Result<Self> {
        SgState::chain(lift(5)?)
    }

    pub fn get(&self, f: SgField) -> &T {
        match f {
            SgField::A0 => &self.a0,
            SgField::A1 => &self.a1,
            SgField::A2 => &self.a2,
            SgField::A3 => &self.a3,
            SgField::B0 => &self.b0,
            SgField::B1 => &self.b1,
            SgField::B2 => &self.b2,
            SgField::C0 => &self.c0,
            SgField::C1 => &self.c1,
            SgField::D0 => &self.d0,
        }
    }

    /// `a3 + 1 = a0 = a1 = a2 = b1 = b2 = c1 = b0 - 1 = c0 - 1 = d0 - 1`.
    pub fn satisfies_chain(&self) -> bool {
        SgState::chain(self.a0.clone()).is_ok_and(|c| &c == self)
    }

    /// One decimation step over the full term lists.
    pub fn step(&self) -> Result<Self> {
        let mut out: [Option<T>; 10] = Default::default();
        for (field, terms) in gasket::ALL {
            out[field.index()] = Some(min_over(terms, |f| self.get(f).clone())?);
        }
        Ok(SgState::from_array(
            out.map(|v| v.expect("every field has a term list")),
        ))
    }

    /// `min(a0, b0, c0, d0)`, the edge domination number when the state is
    /// exact.
    pub fn gamma(&self) -> T {
        [&self.a0, &self.b0, &self.c0, &self.d0]
            .into_iter()
            .min()
            .expect("non-empty")
            .clone()
    }
}

impl SgState<u64> {
    /// Reads the ten class minima from a brute-force report, if all ten
    /// classes are inhabited.
    pub fn from_report(report: &ClassReport) -> Option<Self> {
        let mut out = [0u64; 10];
        for f in SgField::ALL {
            out[f.index()] = report.get(f.class_key())?.min_cardinality as u64;
        }
        Some(SgState::from_array(out))
    }
}

/// Iterates [`SgState::step`] from `seed` (taken as generation 3) up to `n`.
pub fn state_at<T: Exact>(seed: &SgState<T>, n: Generation) -> Result<SgState<T>> {
    let mut s = seed.clone();
    for _ in 0..steps_from_base(n)? {
        s = s.step()?;
    }
    Ok(s)
}

/// Edge domination number of `S_n` from the iterated recursion.
pub fn gamma<T: Exact>(n: Generation) -> Result<T> {
    Ok(state_at(&SgState::base()?, n)?.gamma())
}

/// The chain state around `5 * 3^(n-3)`.
pub fn closed_chain<T: Exact>(n: Generation) -> Result<SgState<T>> {
    let steps = steps_from_base(n)?;
    SgState::chain(scale(5, &pow::<T>(3, steps)?)?)
}

/// `5 * 3^(n-3)`.
pub fn gamma_closed_form<T: Exact>(n: Generation) -> Result<T> {
    Ok(closed_chain::<T>(n)?.a0)
}

/// `x`: number of MEDSs; `y`, `z`, `w`: number of sets in the classes
/// `b^1`, `c^1`, `b^2` for one fixed anchor state vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SgCounts<T = Count> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub w: T,
}

impl<T: Exact> SgCounts<T> {
    pub fn new(x: T, y: T, z: T, w: T) -> Self {
        SgCounts { x, y, z, w }
    }

    /// Generation-3 seed `(x, y, z, w) = (2, 9, 4, 16)`.
    pub fn base() -> Result<Self> {
        Ok(SgCounts::new(lift(2)?, lift(9)?, lift(4)?, lift(16)?))
    }

    /// ```text
    /// x' = x^3 + y^3
    /// y' = x y^2 + 2 x y z + y^3 + 4 y^2 z + 2 y z w + 3 y z^2
    /// z' = 2 y^2 z + 2 y z^2 + z^2 w
    /// w' = 2 y^3 + 2 y^2 w + 2 y^2 z + 4 y z^2 + 4 w z^2 + z^3
    /// ```
    pub fn step(&self) -> Result<Self> {
        let (x, y, z, w) = (&self.x, &self.y, &self.z, &self.w);
        let y2 = mul(y, y)?;
        let z2 = mul(z, z)?;
        let yz = mul(y, z)?;
        let y3 = mul(&y2, y)?;

        let nx = add(&mul(&mul(x, x)?, x)?, &y3)?;

        // y (x y + 2 x z + y^2 + 4 y z + 2 z w + 3 z^2)
        let inner = [
            mul(x, y)?,
            scale(2, &mul(x, z)?)?,
            y2.clone(),
            scale(4, &yz)?,
            scale(2, &mul(z, w)?)?,
            scale(3, &z2)?,
        ];
        let ny = mul(y, &sum(&inner)?)?;

        // z (2 y^2 + 2 y z + z w)
        let nz = mul(z, &sum(&[scale(2, &y2)?, scale(2, &yz)?, mul(z, w)?])?)?;

        // 2 y^3 + 2 y^2 (w + z) + 4 z^2 (y + w) + z^3
        let nw = sum(&[
            scale(2, &y3)?,
            scale(2, &mul(&y2, &add(w, z)?)?)?,
            scale(4, &mul(&z2, &add(y, w)?)?)?,
            mul(&z2, z)?,
        ])?;

        Ok(SgCounts {
            x: nx,
            y: ny,
            z: nz,
            w: nw,
        })
    }
}

fn sum<T: Exact>(terms: &[T]) -> Result<T> {
    terms.iter().try_fold(T::zero(), |acc, t| add(&acc, t))
}

impl SgCounts<Count> {
    /// `x` from the brute-force MEDS count; `y`, `z`, `w` from the `b^1`,
    /// `c^1`, `b^2` counts for one fixed anchor state vector.
    pub fn from_oracle(meds: &MinEds, report: &ClassReport) -> Option<Self> {
        let per = |f: SgField| report.get(f.class_key())?.uniform_per_vector().cloned();
        Some(SgCounts::new(
            meds.count.clone(),
            per(SgField::B1)?,
            per(SgField::C1)?,
            per(SgField::B2)?,
        ))
    }
}

/// Iterates [`SgCounts::step`] from `seed` (taken as generation 3) up to `n`.
pub fn counts_at<T: Exact>(seed: &SgCounts<T>, n: Generation) -> Result<SgCounts<T>> {
    let mut c = seed.clone();
    for _ in 0..steps_from_base(n)? {
        c = c.step()?;
    }
    Ok(c)
}

/// Number of MEDSs of `S_n` from the counting recursion.
pub fn meds_count<T: Exact>(n: Generation) -> Result<T> {
    Ok(counts_at(&SgCounts::base()?, n)?.x)
}
