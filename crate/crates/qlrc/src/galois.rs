//! Exact arithmetic in GF(4) and GF(256).
//!
//! GF(4) is the field `{0, 1, a, b}` defined by `x² + x + 1`, so `a` is a
//! primitive cube root of unity and `b = a² = a + 1`. Elements are stored as
//! 2-bit integers with `2 ↔ a` and `3 ↔ b`; addition is bitwise XOR and
//! multiplication goes through a 16-entry table, which keeps the inner loops
//! of codeword enumeration branch-free.
//!
//! GF(256) is represented by 8-bit polynomials modulo the primitive
//! polynomial `x⁸ + x⁴ + x³ + x² + 1` (0x11D), with `g = x` (0x02) as the
//! fixed primitive element. The copy of GF(4) inside GF(256) is the subfield
//! fixed by the Frobenius map `x ↦ x⁴`; the embedding sends `a` to `g^85`,
//! an element of multiplicative order 3. GF(256) exists here for one
//! purpose: 17-th roots of unity and their minimal polynomials over GF(4),
//! which build the [17,4,12] cyclic code.

use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Sub};

/// An element of GF(4).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(u8);

/// Multiplication table, indexed by `(x << 2) | y`.
const MUL4: [u8; 16] = [
    0, 0, 0, 0, // 0 * _
    0, 1, 2, 3, // 1 * _
    0, 2, 3, 1, // a * _
    0, 3, 1, 2, // b * _
];

/// Inverses of 1, a, b.
const INV4: [u8; 3] = [1, 3, 2];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const A: F4 = F4(2);
    pub const B: F4 = F4(3);

    /// All four elements in canonical order 0, 1, a, b.
    pub const ALL: [F4; 4] = [F4(0), F4(1), F4(2), F4(3)];

    /// The three nonzero elements.
    pub const NONZERO: [F4; 3] = [F4(1), F4(2), F4(3)];

    /// Builds an element from its 2-bit representation.
    pub fn from_bits(v: u8) -> F4 {
        assert!(v < 4, "GF(4) element out of range: {v}");
        F4(v)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self) -> F4 {
        assert!(self.0 != 0, "division by zero in GF(4)");
        F4(INV4[(self.0 - 1) as usize])
    }

    /// Parses one of the symbols `0 1 a b` (with `α`/`β` accepted as
    /// aliases of `a`/`b`).
    pub fn from_symbol(s: &str) -> Option<F4> {
        match s {
            "0" => Some(F4::ZERO),
            "1" => Some(F4::ONE),
            "a" | "α" => Some(F4::A),
            "b" | "β" => Some(F4::B),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'a',
            _ => 'b',
        }
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl AddAssign for F4 {
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Sub for F4 {
    type Output = F4;
    fn sub(self, rhs: F4) -> F4 {
        // characteristic 2
        self + rhs
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL4[((self.0 << 2) | rhs.0) as usize])
    }
}

impl Div for F4 {
    type Output = F4;
    fn div(self, rhs: F4) -> F4 {
        self * rhs.inv()
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Full operation tables for GF(4).
pub struct F4Tables {
    pub add: [[F4; 4]; 4],
    pub mul: [[F4; 4]; 4],
    /// Inverses of the three nonzero elements, indexed by `bits - 1`.
    pub inv: [F4; 3],
}

/// Returns the complete addition/multiplication/inverse tables for GF(4).
pub fn f4_table() -> F4Tables {
    let mut add = [[F4::ZERO; 4]; 4];
    let mut mul = [[F4::ZERO; 4]; 4];
    for x in 0..4u8 {
        for y in 0..4u8 {
            add[x as usize][y as usize] = F4(x) + F4(y);
            mul[x as usize][y as usize] = F4(x) * F4(y);
        }
    }
    F4Tables {
        add,
        mul,
        inv: [F4(1).inv(), F4(2).inv(), F4(3).inv()],
    }
}

/// An element of GF(256), as a polynomial over GF(2) modulo 0x11D.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct F256(u8);

/// The reduction polynomial x⁸ + x⁴ + x³ + x² + 1.
const POLY256: u16 = 0x11D;

impl F256 {
    pub const ZERO: F256 = F256(0);
    pub const ONE: F256 = F256(1);
    /// The fixed primitive element `g = x`.
    pub const GENERATOR: F256 = F256(2);

    pub fn from_bits(v: u8) -> F256 {
        F256(v)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut e: u32) -> F256 {
        let mut base = self;
        let mut acc = F256::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order. Panics on zero.
    pub fn order(self) -> u32 {
        assert!(!self.is_zero(), "zero has no multiplicative order");
        let mut x = self;
        let mut ord = 1;
        while x != F256::ONE {
            x = x * self;
            ord += 1;
        }
        ord
    }

    pub fn inv(self) -> F256 {
        assert!(!self.is_zero(), "division by zero in GF(256)");
        self.pow(254)
    }

    /// Frobenius power `x ↦ x⁴`, the generator of Gal(GF(256)/GF(4)).
    pub fn frob4(self) -> F256 {
        self.pow(4)
    }
}

impl Add for F256 {
    type Output = F256;
    fn add(self, rhs: F256) -> F256 {
        F256(self.0 ^ rhs.0)
    }
}

impl Mul for F256 {
    type Output = F256;
    fn mul(self, rhs: F256) -> F256 {
        // Carry-less multiply then reduce modulo 0x11D.
        let mut acc: u16 = 0;
        let a = self.0 as u16;
        for i in 0..8 {
            if rhs.0 >> i & 1 == 1 {
                acc ^= a << i;
            }
        }
        for i in (8..16).rev() {
            if acc >> i & 1 == 1 {
                acc ^= POLY256 << (i - 8);
            }
        }
        F256(acc as u8)
    }
}

impl fmt::Debug for F256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F256(0x{:02x})", self.0)
    }
}

/// Image of GF(4) inside GF(256): `a ↦ g^85`.
///
/// `g^85` has multiplicative order 3, so it satisfies `x² + x + 1 = 0` and
/// the map is automatically a ring homomorphism.
pub fn embed_f4(x: F4) -> F256 {
    let omega = F256::GENERATOR.pow(85);
    match x {
        F4::ZERO => F256::ZERO,
        F4::ONE => F256::ONE,
        F4::A => omega,
        _ => omega * omega,
    }
}

/// Preimage under [`embed_f4`], if the element lies in the embedded GF(4).
pub fn retract_f4(x: F256) -> Option<F4> {
    F4::ALL.into_iter().find(|&c| embed_f4(c) == x)
}

/// A fixed 17-th root of unity in GF(256): `γ = g^15`.
pub fn f256_seventeenth_root() -> F256 {
    F256::GENERATOR.pow(15)
}

/// Monic minimal polynomial of `x` over the embedded GF(4), as coefficients
/// in ascending degree order. The degree equals the size of the orbit of `x`
/// under `x ↦ x⁴` and always divides 4.
pub fn minimal_poly_over_f4(x: F256) -> Result<Vec<F4>> {
    if x.is_zero() {
        return Err(Error::invalid(
            "minimal polynomial over GF(4) requires a nonzero element",
        ));
    }
    let mut orbit = vec![x];
    let mut y = x.frob4();
    while y != x {
        orbit.push(y);
        y = y.frob4();
    }
    // Product of (X + root) over the Frobenius orbit, computed in GF(256).
    let mut coeffs = vec![F256::ONE];
    for root in orbit {
        let mut next = vec![F256::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1] + c; // X * c
            next[i] = next[i] + c * root;
        }
        coeffs = next;
    }
    coeffs
        .iter()
        .map(|&c| {
            retract_f4(c).ok_or_else(|| {
                Error::invalid("minimal polynomial coefficient escaped GF(4); orbit not closed")
            })
        })
        .collect()
}

/// Evaluates a polynomial with GF(4) coefficients (ascending order) at a
/// point of GF(256), through the embedding.
pub fn eval_poly_at_f256(coeffs: &[F4], x: F256) -> F256 {
    let mut acc = F256::ZERO;
    for &c in coeffs.iter().rev() {
        acc = acc * x + embed_f4(c);
    }
    acc
}
