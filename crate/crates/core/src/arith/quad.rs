//! The quadratic layer ℚ(√m): values a + b√m with m a fixed squarefree
//! integer. m = 1 encodes plain rationals (b is forced to 0 on construction).

use super::rational::rat_int;
use super::{Int, Rat};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Quad {
    pub a: Rat,
    pub b: Rat,
    pub m: Int,
}

impl Quad {
    pub fn new(a: Rat, b: Rat, m: Int) -> Self {
        if m.is_one() {
            // a + b·√1 = a + b
            Quad {
                a: a + b,
                b: Rat::zero(),
                m,
            }
        } else {
            Quad { a, b, m }
        }
    }

    pub fn from_rat(a: Rat, m: Int) -> Self {
        Quad {
            a,
            b: Rat::zero(),
            m,
        }
    }

    pub fn from_int(n: i64, m: Int) -> Self {
        Self::from_rat(rat_int(n), m)
    }

    pub fn zero(m: Int) -> Self {
        Self::from_rat(Rat::zero(), m)
    }

    pub fn one(m: Int) -> Self {
        Self::from_rat(Rat::one(), m)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, panicking if a √m component survives: callers use
    /// this exactly where the theory guarantees rationality, so a failure is
    /// a bug in the caller rather than bad input.
    pub fn expect_rat(&self, what: &str) -> Rat {
        assert!(
            self.b.is_zero(),
            "quantity {what} should be rational but has √m component {}",
            self.b
        );
        self.a.clone()
    }

    pub fn conj(&self) -> Self {
        Quad {
            a: self.a.clone(),
            b: -self.b.clone(),
            m: self.m.clone(),
        }
    }

    /// a² − m·b², the norm to ℚ.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(self.m.clone()) * &self.b * &self.b
    }

    pub fn trace(&self) -> Rat {
        &self.a + &self.a
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverting zero or a zero-norm element");
        Quad {
            a: &self.a / &n,
            b: -&self.b / n,
            m: self.m.clone(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Quad {
            a: &self.a * k,
            b: &self.b * k,
            m: self.m.clone(),
        }
    }

    fn same_layer(&self, rhs: &Quad) {
        assert_eq!(self.m, rhs.m, "mixed quadratic layers");
    }
}

impl Add for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Quad) -> Quad {
        self.same_layer(rhs);
        Quad {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            m: self.m.clone(),
        }
    }
}

impl Sub for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Quad) -> Quad {
        self.same_layer(rhs);
        Quad {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            m: self.m.clone(),
        }
    }
}

impl Mul for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Quad) -> Quad {
        self.same_layer(rhs);
        let m = Rat::from_integer(self.m.clone());
        Quad {
            a: &self.a * &rhs.a + m * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            m: self.m.clone(),
        }
    }
}

impl Div for &Quad {
    type Output = Quad;
    fn div(self, rhs: &Quad) -> Quad {
        self * &rhs.inv()
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a.clone(),
            b: -self.b.clone(),
            m: self.m.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Quad {
            type Output = Quad;
            fn $f(self, rhs: Quad) -> Quad {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        -&self
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.m)
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
