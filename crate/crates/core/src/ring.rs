//! The ring `R_m = F_{2^m} + vF_{2^m} + v^2F_{2^m}` with `v^3 = 1`.
//!
//! Multiplication is cyclic convolution of the coefficient triples. Since
//! `v^3 - 1 = (v + 1)(v^2 + v + 1)` over F2, the ring splits by the Chinese
//! remainder theorem:
//!
//! * odd `m`: `v^2 + v + 1` stays irreducible over `F_{2^m}` and
//!   `R_m ~ F_{2^m} x F_{4^m}` via `a -> (a(1), a mod (v^2 + v + 1))`;
//! * even `m`: `F_{2^m}` holds a primitive cube root of unity `omega` and
//!   `R_m ~ F_{2^m}^3` via `a -> (a(1), a(omega), a(omega^2))`.
//!
//! A ring element is a unit exactly when every CRT component is nonzero.

use std::fmt;

use crate::gf2m::{FieldContext, FieldElement};
use crate::{Error, Result};

/// `a1 + a2 v + a3 v^2` with coefficients in `F_{2^m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElement {
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub a3: FieldElement,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement::new(0, 0, 0);
    pub const ONE: RingElement = RingElement::new(1, 0, 0);
    pub const V: RingElement = RingElement::new(0, 1, 0);
    pub const V2: RingElement = RingElement::new(0, 0, 1);

    pub const fn new(a1: FieldElement, a2: FieldElement, a3: FieldElement) -> Self {
        RingElement { a1, a2, a3 }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// True when all coefficients are 0 or 1, i.e. the element lies in `R`.
    pub fn in_base_ring(&self) -> bool {
        self.a1 <= 1 && self.a2 <= 1 && self.a3 <= 1
    }

    pub fn coefficients(&self) -> [FieldElement; 3] {
        [self.a1, self.a2, self.a3]
    }

    /// Multiplication by `v`, a cyclic shift of the coefficients.
    pub fn times_v(self) -> Self {
        RingElement::new(self.a3, self.a1, self.a2)
    }

    /// Packs an element of `R` into three bits (bit `k` = coefficient of `v^k`).
    pub(crate) fn base_bits(&self) -> u8 {
        debug_assert!(self.in_base_ring());
        (self.a1 | self.a2 << 1 | self.a3 << 2) as u8
    }

    pub fn from_base_bits(bits: u8) -> Self {
        RingElement::new(
            (bits & 1) as u32,
            (bits >> 1 & 1) as u32,
            (bits >> 2 & 1) as u32,
        )
    }
}

impl std::ops::Add for RingElement {
    type Output = RingElement;

    fn add(self, rhs: RingElement) -> RingElement {
        RingElement::new(self.a1 ^ rhs.a1, self.a2 ^ rhs.a2, self.a3 ^ rhs.a3)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:#x}, {:#x}, {:#x})", self.a1, self.a2, self.a3)
    }
}

/// Product in `R` of two elements packed as 3-bit masks.
#[inline]
pub(crate) fn base_mul_bits(a: u8, b: u8) -> u8 {
    let mut acc = 0u8;
    for k in 0..3 {
        if b >> k & 1 == 1 {
            acc ^= ((a << k) | (a >> (3 - k))) & 0b111;
        }
    }
    acc
}

/// `c0 + c1 v` in `F_{2^m}[v] / (v^2 + v + 1)`, isomorphic to `F_{4^m}` for odd `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadExtElement {
    pub c0: FieldElement,
    pub c1: FieldElement,
}

impl QuadExtElement {
    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
}

/// CRT coordinates of a ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrtImage {
    /// `u = a(1)`, `w = a mod (v^2 + v + 1)`.
    Odd { u: FieldElement, w: QuadExtElement },
    /// `d = a(1)`, `e = a(omega)`, `f = a(omega^2)`.
    Even {
        d: FieldElement,
        e: FieldElement,
        f: FieldElement,
    },
}

/// Which CRT components of an element vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vanishing {
    Zero,
    Unit,
    /// Odd `m`: `a(1) != 0`, quadratic component zero. `a = a1 (1 + v + v^2)`.
    QuadraticZero,
    /// Odd `m`: `a(1) = 0`, quadratic component nonzero.
    LinearZero,
    /// Even `m`: exactly one of `D, E, F` vanishes.
    OneZero,
    /// Even `m`: exactly two of `D, E, F` vanish.
    TwoZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(m: u32) -> Self {
        if m % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: FieldContext,
    parity: Parity,
    omega: Option<FieldElement>,
}

impl RingContext {
    /// Ring over `field`; for even `m`, `omega` is the smaller root of `X^2+X+1`.
    pub fn new(field: FieldContext) -> Self {
        let parity = Parity::of(field.degree());
        let roots = field.cube_roots_of_unity();
        match parity {
            Parity::Odd => {
                assert!(roots.is_empty(), "v^2+v+1 must be irreducible for odd m");
                RingContext {
                    field,
                    parity,
                    omega: None,
                }
            }
            Parity::Even => RingContext {
                field,
                parity,
                omega: Some(roots[0]),
            },
        }
    }

    /// Even-`m` ring with an explicit choice of primitive cube root of unity.
    pub fn with_omega(field: FieldContext, omega: FieldElement) -> Result<Self> {
        if !field.contains(omega) || field.square(omega) ^ omega ^ 1 != 0 {
            return Err(Error::InvalidOmega(omega));
        }
        Ok(RingContext {
            field,
            parity: Parity::Even,
            omega: Some(omega),
        })
    }

    pub fn from_degree(m: u32, poly: Option<u32>) -> Result<Self> {
        Ok(Self::new(FieldContext::new(m, poly)?))
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn omega(&self) -> Option<FieldElement> {
        self.omega
    }

    /// `|R_m| = 2^(3m)`.
    pub fn size(&self) -> u64 {
        1 << (3 * self.degree())
    }

    /// `|R_m^*|`: `(2^m-1)(2^(2m)-1)` for odd `m`, `(2^m-1)^3` for even `m`.
    pub fn unit_count(&self) -> u64 {
        let q = 1u64 << self.degree();
        match self.parity {
            Parity::Odd => (q - 1) * (q * q - 1),
            Parity::Even => (q - 1).pow(3),
        }
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        a.coefficients().iter().all(|&c| self.field.contains(c))
    }

    /// The `i`-th element in lexicographic order of `(a1, a2, a3)`.
    pub fn element_at(&self, index: u64) -> RingElement {
        let m = self.degree();
        let mask = (1u64 << m) - 1;
        RingElement::new(
            (index >> (2 * m) & mask) as u32,
            (index >> m & mask) as u32,
            (index & mask) as u32,
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size()).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: RingElement, b: RingElement) -> RingElement {
        a + b
    }

    /// Cyclic convolution with `v^3 = 1`.
    pub fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(
            f.mul(a.a1, b.a1) ^ f.mul(a.a2, b.a3) ^ f.mul(a.a3, b.a2),
            f.mul(a.a1, b.a2) ^ f.mul(a.a2, b.a1) ^ f.mul(a.a3, b.a3),
            f.mul(a.a1, b.a3) ^ f.mul(a.a2, b.a2) ^ f.mul(a.a3, b.a1),
        )
    }

    /// Squares every coefficient.
    pub fn frobenius(&self, a: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.square(a.a1), f.square(a.a2), f.square(a.a3))
    }

    /// `Tr: R_m -> R`, the field trace applied coefficientwise.
    pub fn trace(&self, a: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(
            f.trace(a.a1) as u32,
            f.trace(a.a2) as u32,
            f.trace(a.a3) as u32,
        )
    }

    /// `sum_{j<m} F^j(a)`, the Trace by its definition.
    pub fn trace_by_frobenius(&self, a: RingElement) -> RingElement {
        let mut acc = RingElement::ZERO;
        let mut conj = a;
        for _ in 0..self.degree() {
            acc = acc + conj;
            conj = self.frobenius(conj);
        }
        acc
    }

    pub fn crt_decompose(&self, a: RingElement) -> CrtImage {
        let f = &self.field;
        let d = a.a1 ^ a.a2 ^ a.a3;
        match self.omega {
            None => CrtImage::Odd {
                u: d,
                w: QuadExtElement {
                    c0: a.a1 ^ a.a3,
                    c1: a.a2 ^ a.a3,
                },
            },
            Some(w) => {
                let w2 = f.square(w);
                CrtImage::Even {
                    d,
                    e: a.a1 ^ f.mul(a.a2, w) ^ f.mul(a.a3, w2),
                    f: a.a1 ^ f.mul(a.a2, w2) ^ f.mul(a.a3, w),
                }
            }
        }
    }

    /// Inverse of [`crt_decompose`](Self::crt_decompose).
    pub fn crt_compose(&self, img: CrtImage) -> RingElement {
        match img {
            CrtImage::Odd { u, w } => RingElement::new(u ^ w.c1, u ^ w.c0, u ^ w.c0 ^ w.c1),
            CrtImage::Even { d, e, f: ff } => {
                let f = &self.field;
                let w = self.omega.expect("even image requires omega");
                let w2 = f.square(w);
                RingElement::new(
                    d ^ e ^ ff,
                    d ^ f.mul(w2, e) ^ f.mul(w, ff),
                    d ^ f.mul(w, e) ^ f.mul(w2, ff),
                )
            }
        }
    }

    /// Componentwise product of CRT images.
    pub fn crt_mul(&self, x: CrtImage, y: CrtImage) -> CrtImage {
        let f = &self.field;
        match (x, y) {
            (CrtImage::Odd { u: u1, w: w1 }, CrtImage::Odd { u: u2, w: w2 }) => {
                let hi = f.mul(w1.c1, w2.c1);
                CrtImage::Odd {
                    u: f.mul(u1, u2),
                    w: QuadExtElement {
                        c0: f.mul(w1.c0, w2.c0) ^ hi,
                        c1: f.mul(w1.c0, w2.c1) ^ f.mul(w1.c1, w2.c0) ^ hi,
                    },
                }
            }
            (
                CrtImage::Even {
                    d: d1,
                    e: e1,
                    f: f1,
                },
                CrtImage::Even {
                    d: d2,
                    e: e2,
                    f: f2,
                },
            ) => CrtImage::Even {
                d: f.mul(d1, d2),
                e: f.mul(e1, e2),
                f: f.mul(f1, f2),
            },
            _ => panic!("CRT images of different parity"),
        }
    }

    pub fn vanishing(&self, a: RingElement) -> Vanishing {
        if a.is_zero() {
            return Vanishing::Zero;
        }
        match self.crt_decompose(a) {
            CrtImage::Odd { u, w } => match (u == 0, w.is_zero()) {
                (false, false) => Vanishing::Unit,
                (false, true) => Vanishing::QuadraticZero,
                (true, false) => Vanishing::LinearZero,
                (true, true) => unreachable!("nonzero element with zero CRT image"),
            },
            CrtImage::Even { d, e, f } => match [d, e, f].iter().filter(|&&c| c == 0).count() {
                0 => Vanishing::Unit,
                1 => Vanishing::OneZero,
                2 => Vanishing::TwoZero,
                _ => unreachable!("nonzero element with zero CRT image"),
            },
        }
    }

    pub fn is_unit(&self, a: RingElement) -> bool {
        self.vanishing(a) == Vanishing::Unit
    }

    /// All units in ascending lexicographic order of `(a1, a2, a3)`.
    pub fn units(&self) -> Vec<RingElement> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }
}
