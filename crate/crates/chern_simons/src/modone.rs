use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of `R/Z`, stored as its representative in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct ModOne(f64);

impl ModOne {
    pub fn new(x: f64) -> Self {
        let r = x.rem_euclid(1.0);
        // rem_euclid can round up to exactly 1.0
        ModOne(if r >= 1.0 { 0.0 } else { r })
    }

    pub fn zero() -> Self {
        ModOne(0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Circular distance, in `[0, 1/2]`.
    pub fn dist(self, other: ModOne) -> f64 {
        let d = (self.0 - other.0).abs();
        d.min(1.0 - d)
    }
}

impl Add for ModOne {
    type Output = ModOne;
    fn add(self, o: ModOne) -> ModOne {
        ModOne::new(self.0 + o.0)
    }
}

impl Sub for ModOne {
    type Output = ModOne;
    fn sub(self, o: ModOne) -> ModOne {
        ModOne::new(self.0 - o.0)
    }
}

impl Neg for ModOne {
    type Output = ModOne;
    fn neg(self) -> ModOne {
        ModOne::new(-self.0)
    }
}

impl Mul<i64> for ModOne {
    type Output = ModOne;
    fn mul(self, k: i64) -> ModOne {
        ModOne::new(self.0 * k as f64)
    }
}

impl fmt::Display for ModOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
