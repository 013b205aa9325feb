//! Basis blades of the six-generator algebra.
//!
//! A blade is a bitmask over the six generators together with a sign.
//! Bits 0–2 are the plus-signature generators `t1, t2, t3` (square +1),
//! bits 3–5 the minus-signature generators `s1, s2, s3` (square −1).
//! Generator order is global and immutable; all signs derive from it.

use crate::error::{Error, Result};
use std::fmt;

/// Number of generators.
pub const GEN_COUNT: usize = 6;
/// Number of basis blades (2^6).
pub const BLADE_COUNT: usize = 64;
/// Bits of the minus-signature generators.
pub const MINUS_MASK: u8 = 0b111_000;

/// Names of the six generators, in canonical bit order.
pub const GEN_NAMES: [&str; GEN_COUNT] = ["t1", "t2", "t3", "s1", "s2", "s3"];

/// Parity sign of merging generator set `b` into canonical position after
/// `a`: counts, for each generator in `a`, the generators of `b` strictly
/// below it, i.e. the transpositions a sorted merge needs.
const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the geometric product of two canonical blades: reorder parity
/// times the metric contraction of the shared generators.
const fn product_sign(a: u8, b: u8) -> i8 {
    let mut sign = reorder_sign(a, b);
    if (a & b & MINUS_MASK).count_ones() % 2 == 1 {
        sign = -sign;
    }
    sign
}

const fn build_sign_table() -> [[i8; BLADE_COUNT]; BLADE_COUNT] {
    let mut table = [[0i8; BLADE_COUNT]; BLADE_COUNT];
    let mut a = 0;
    while a < BLADE_COUNT {
        let mut b = 0;
        while b < BLADE_COUNT {
            table[a][b] = product_sign(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    table
}

/// Sign of `canonical(a) * canonical(b)`; the product mask is `a ^ b`.
pub static SIGN_TABLE: [[i8; BLADE_COUNT]; BLADE_COUNT] = build_sign_table();

/// A signed basis blade.
///
/// `mask` selects the generators; `sign` is ±1 relative to the canonical
/// (ascending) generator order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Blade {
    mask: u8,
    sign: i8,
}

impl Blade {
    /// The scalar blade.
    pub const ONE: Blade = Blade { mask: 0, sign: 1 };

    /// Canonical blade for a generator mask.
    pub const fn new(mask: u8) -> Blade {
        Blade { mask, sign: 1 }
    }

    pub const fn with_sign(mask: u8, sign: i8) -> Blade {
        Blade { mask, sign }
    }

    /// Single generator by bit index (0–5).
    pub const fn generator(index: usize) -> Blade {
        Blade {
            mask: 1 << index,
            sign: 1,
        }
    }

    pub const fn mask(&self) -> u8 {
        self.mask
    }

    pub const fn sign(&self) -> i8 {
        self.sign
    }

    pub const fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Geometric product of two signed blades.
    pub fn product(&self, other: &Blade) -> Blade {
        Blade {
            mask: self.mask ^ other.mask,
            sign: self.sign
                * other.sign
                * SIGN_TABLE[self.mask as usize][other.mask as usize],
        }
    }

    /// Product of a sequence of generators in the written order, e.g.
    /// `[0, 4, 2]` for t1·s2·t3.
    pub fn from_generators(indices: &[usize]) -> Blade {
        let mut acc = Blade::ONE;
        for &i in indices {
            acc = acc.product(&Blade::generator(i));
        }
        acc
    }

    /// Reversal: the blade with its generators written backwards.
    /// Flips the sign on grades 2 and 3 mod 4.
    pub fn reverse(&self) -> Blade {
        let g = self.grade();
        let flip = (g * (g.wrapping_sub(1)) / 2) % 2 == 1;
        Blade {
            mask: self.mask,
            sign: if flip { -self.sign } else { self.sign },
        }
    }

    /// Sign of the blade's square (always ±1: the metric is nondegenerate).
    pub fn square_sign(&self) -> i8 {
        SIGN_TABLE[self.mask as usize][self.mask as usize]
    }

    /// Canonical text form: concatenated generator names, `"1"` for the
    /// scalar. A leading `-` marks a negative sign.
    pub fn text(&self) -> String {
        let mut s = String::new();
        if self.sign < 0 {
            s.push('-');
        }
        if self.mask == 0 {
            s.push('1');
            return s;
        }
        for (i, name) in GEN_NAMES.iter().enumerate() {
            if self.mask & (1 << i) != 0 {
                s.push_str(name);
            }
        }
        s
    }

    /// Parse the canonical text form produced by [`Blade::text`] (without
    /// a sign prefix): `"1"` or generator names in ascending order.
    pub fn parse(input: &str) -> Result<Blade> {
        if input == "1" {
            return Ok(Blade::ONE);
        }
        let bytes = input.as_bytes();
        let mut mask = 0u8;
        let mut last_bit: i32 = -1;
        let mut pos = 0;
        while pos < bytes.len() {
            if pos + 2 > bytes.len() {
                return Err(Error::parse(pos, "dangling generator name"));
            }
            let name = &input[pos..pos + 2];
            let bit = GEN_NAMES
                .iter()
                .position(|&g| g == name)
                .ok_or_else(|| Error::parse(pos, format!("unknown generator {name:?}")))?
                as i32;
            if bit <= last_bit {
                return Err(Error::parse(
                    pos,
                    "generators must be distinct and in canonical order",
                ));
            }
            last_bit = bit;
            mask |= 1 << bit;
            pos += 2;
        }
        Ok(Blade::new(mask))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}
