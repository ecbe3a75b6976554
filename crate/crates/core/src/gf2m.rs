//! Arithmetic in the binary field `F_{2^m}`, `1 <= m <= 16`.
//!
//! Elements are plain `u32` bitmasks in the polynomial basis: bit `i` is the
//! coefficient of `x^i`. The [`FieldContext`] carries the reduction
//! polynomial and is passed to every operation that needs it.

use crate::{Error, Result};

/// An element of `F_{2^m}` as a polynomial-basis bitmask, `< 2^m`.
pub type FieldElement = u32;

pub const MAX_DEGREE: u32 = 16;

/// Lexicographically least irreducible polynomial with nonzero constant
/// term, per degree 1..=16.
const DEFAULT_POLYS: [u32; 16] = [
    0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

/// Default reduction polynomial for `F_{2^m}`.
pub fn default_polynomial(m: u32) -> Result<u32> {
    if !(1..=MAX_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    Ok(DEFAULT_POLYS[m as usize - 1])
}

fn degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

/// Remainder of carry-less polynomial division over F2.
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

/// Smallest nontrivial factor of `poly`, or `None` if it is irreducible.
fn smallest_factor(poly: u32) -> Option<u32> {
    let d = degree(poly as u64);
    (2u32..1 << (d / 2 + 1))
        .find(|&q| degree(q as u64) >= 1 && poly_rem(poly as u64, q as u64) == 0)
}

/// The field `F_{2^m}` defined by an irreducible polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldContext {
    m: u32,
    poly: u32,
    /// Bit `i` is `tr(x^i)`, so `tr(a) = parity(a & trace_mask)`.
    trace_mask: u32,
}

impl FieldContext {
    /// Builds `F_{2^m}` from `poly`, or from the default table when `None`.
    ///
    /// The polynomial must have degree exactly `m` and be irreducible; a
    /// reducible input is rejected with its smallest nontrivial factor.
    pub fn new(m: u32, poly: Option<u32>) -> Result<Self> {
        let default = default_polynomial(m)?;
        let poly = poly.unwrap_or(default);
        if poly == 0 || degree(poly as u64) != m {
            let found = if poly == 0 { 0 } else { degree(poly as u64) };
            return Err(Error::PolynomialDegree {
                poly,
                expected: m,
                found,
            });
        }
        if let Some(factor) = smallest_factor(poly) {
            return Err(Error::Reducible { poly, factor });
        }
        let mut ctx = FieldContext {
            m,
            poly,
            trace_mask: 0,
        };
        ctx.trace_mask = (0..m)
            .filter(|&i| ctx.trace_by_conjugates(1 << i) == 1)
            .fold(0, |acc, i| acc | (1 << i));
        Ok(ctx)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn polynomial(&self) -> u32 {
        self.poly
    }

    /// Number of field elements, `2^m`.
    pub fn size(&self) -> u32 {
        1 << self.m
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.size()
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a < self.size()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a ^ b
    }

    /// Carry-less product reduced modulo the field polynomial.
    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut prod: u64 = 0;
        let mut b = b as u64;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= (a as u64) << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let poly = self.poly as u64;
        for i in (self.m..2 * self.m.max(1)).rev() {
            if prod >> i & 1 == 1 {
                prod ^= poly << (i - self.m);
            }
        }
        prod as FieldElement
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse as `a^(2^m - 2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.m));
        }
        Ok(self.pow(a, (1u64 << self.m) - 2))
    }

    /// Absolute trace `tr: F_{2^m} -> F_2`.
    #[inline]
    pub fn trace(&self, a: FieldElement) -> u8 {
        ((a & self.trace_mask).count_ones() & 1) as u8
    }

    /// `a + a^2 + ... + a^(2^(m-1))`, summed directly over the conjugates.
    pub fn trace_by_conjugates(&self, a: FieldElement) -> u8 {
        let mut sum = 0;
        let mut conj = a;
        for _ in 0..self.m {
            sum ^= conj;
            conj = self.square(conj);
        }
        debug_assert!(sum <= 1, "trace left the prime field");
        sum as u8
    }

    /// Mask `t` with `tr(y x) = parity(x & t)` for every `x`.
    ///
    /// Folds the multiplication by `y` into the linear form, which is what
    /// makes exhaustive enumeration cheap.
    pub fn trace_form(&self, y: FieldElement) -> u32 {
        (0..self.m)
            .filter(|&i| self.trace(self.mul(y, 1 << i)) == 1)
            .fold(0, |acc, i| acc | (1 << i))
    }

    /// `sum over x in F_{2^m} of (-1)^tr(z x)`.
    pub fn char_sum(&self, z: FieldElement) -> i64 {
        self.elements()
            .map(|x| {
                if self.trace(self.mul(z, x)) == 0 {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    /// The roots of `X^2 + X + 1` in this field, ascending.
    pub fn cube_roots_of_unity(&self) -> Vec<FieldElement> {
        self.elements()
            .filter(|&w| self.square(w) ^ w ^ 1 == 0)
            .collect()
    }
}
