// SPDX-License-Identifier: Apache-2.0

use core::fmt;

/// A nonnegative half-integer, stored doubled so comparisons stay exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_doubled(doubled: u32) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(value: u32) -> Self {
        HalfInt(value * 2)
    }

    pub const fn doubled(self) -> u32 {
        self.0
    }

    /// Largest integer not greater than the value.
    pub const fn floor(self) -> u32 {
        self.0 / 2
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

/// Renders as `k/2` with `k` the doubled value, e.g. `3/2` or `0/2`.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

impl core::str::FromStr for HalfInt {
    type Err = core::num::ParseIntError;

    /// Accepts `k/2` or a plain integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_suffix("/2") {
            Some(k) => k.trim().parse().map(HalfInt),
            None => s.trim().parse::<u32>().map(HalfInt::from_int),
        }
    }
}
