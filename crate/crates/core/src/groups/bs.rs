//! Baumslag–Solitar groups BS(1, n) as affine maps of `Z[1/n]`.
//!
//! The pair `(r, k)` is the map `x ↦ n^(-k)·x + r`. Composition is
//! `(r₁,k₁)(r₂,k₂) = (r₁ + n^(-k₁)·r₂, k₁ + k₂)`, so `a = (1, 0)`,
//! `t = (0, 1)` and `t⁻¹ a t = aⁿ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `r = num / n^den_exp`, with `den_exp` minimal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BsElem {
    pub num: BigInt,
    pub den_exp: u32,
    pub k: i64,
}

fn pow(n: u32, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(n), e as usize)
}

impl BsElem {
    pub fn identity() -> Self {
        BsElem {
            num: BigInt::zero(),
            den_exp: 0,
            k: 0,
        }
    }

    pub fn a() -> Self {
        BsElem {
            num: BigInt::one(),
            den_exp: 0,
            k: 0,
        }
    }

    pub fn t() -> Self {
        BsElem {
            num: BigInt::zero(),
            den_exp: 0,
            k: 1,
        }
    }

    fn normalized(mut self, n: u32) -> Self {
        if self.num.is_zero() {
            self.den_exp = 0;
            return self;
        }
        if n < 2 {
            self.den_exp = 0;
            return self;
        }
        let nb = BigInt::from(n);
        while self.den_exp > 0 && self.num.is_multiple_of(&nb) {
            self.num /= &nb;
            self.den_exp -= 1;
        }
        self
    }

    /// `n^(-k) · (num / n^den)` as `(num', den')`.
    fn scaled(num: &BigInt, den: u32, k: i64, n: u32) -> (BigInt, u32) {
        if n < 2 {
            return (num.clone(), 0);
        }
        if k >= 0 {
            (num.clone(), den + k as u32)
        } else {
            (num * pow(n, k.unsigned_abs() as u32), den)
        }
    }

    pub fn mul(&self, other: &Self, n: u32) -> Self {
        let (n2, d2) = Self::scaled(&other.num, other.den_exp, self.k, n);
        let d = self.den_exp.max(d2);
        let lift = |num: &BigInt, e: u32| {
            if n < 2 {
                num.clone()
            } else {
                num * pow(n, d - e)
            }
        };
        BsElem {
            num: lift(&self.num, self.den_exp) + lift(&n2, d2),
            den_exp: d,
            k: self.k + other.k,
        }
        .normalized(n)
    }

    pub fn inverse(&self, n: u32) -> Self {
        // (r, k)⁻¹ = (-n^k r, -k)
        let (num, den) = Self::scaled(&(-&self.num), self.den_exp, -self.k, n);
        BsElem {
            num,
            den_exp: den,
            k: -self.k,
        }
        .normalized(n)
    }

    /// Sign of the translation part `r`.
    pub fn r_sign(&self) -> i32 {
        if self.num.is_positive() {
            1
        } else if self.num.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn display(&self, n: u32) -> BsDisplay<'_> {
        BsDisplay { e: self, n }
    }
}

pub struct BsDisplay<'a> {
    e: &'a BsElem,
    n: u32,
}

impl fmt::Display for BsDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.e;
        if e.den_exp == 0 || self.n < 2 {
            write!(f, "(r={}, k={})", e.num, e.k)
        } else {
            let den = pow(self.n, e.den_exp);
            let g = e.num.gcd(&den);
            write!(f, "(r={}/{}, k={})", &e.num / &g, den / g, e.k)
        }
    }
}
