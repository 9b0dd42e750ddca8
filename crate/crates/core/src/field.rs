//! Log/antilog arithmetic over GF(2^s) for small `s`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Primitive moduli for s = 1..=5, as bitmasks including the leading term.
/// For s = 1 the field is GF(2) and the "modulus" `x + 1` only fixes the
/// generator to 1.
const MODULI: [u32; 5] = [0b11, 0b111, 0b1011, 0b10011, 0b100101];

pub const MAX_DEGREE: u32 = 5;

/// Arithmetic tables for GF(2^s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    s: u32,
    modulus: u32,
    /// `exp[k] = g^k` for `k` in `0..2(q-1)`, doubled to skip a reduction in `mul`.
    exp: Vec<u8>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u8>,
}

impl FieldTable {
    pub fn new(s: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&s) {
            return Err(Error::UnsupportedDegree(s));
        }
        let modulus = MODULI[(s - 1) as usize];
        let q = 1usize << s;
        let order = q - 1;
        let mut exp = vec![0u8; 2 * order];
        let mut log = vec![0u8; q];
        let mut x: u32 = 1;
        for k in 0..order {
            exp[k] = x as u8;
            log[x as usize] = k as u8;
            if s == 1 {
                break;
            }
            x <<= 1;
            if x & (1 << s) != 0 {
                x ^= modulus;
            }
        }
        for k in order..2 * order {
            exp[k] = exp[k - order];
        }
        Ok(Self { s, modulus, exp, log })
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements.
    pub fn order(&self) -> usize {
        1 << self.s
    }

    /// The primitive element the tables are built on.
    pub fn generator(&self) -> u8 {
        if self.s == 1 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        if a == 0 {
            return None;
        }
        let order = self.order() - 1;
        let l = self.log[a as usize] as usize;
        Some(self.exp[(order - l) % order])
    }

    /// `g^k` for the table generator `g`.
    pub fn exp(&self, k: usize) -> u8 {
        self.exp[k % (self.order() - 1)]
    }

    pub fn log(&self, a: u8) -> Option<usize> {
        (a != 0).then(|| self.log[a as usize] as usize)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u8) -> Option<usize> {
        let mut x = a;
        for k in 1..self.order() {
            if x == 1 {
                return Some(k);
            }
            x = self.mul(x, a);
        }
        None
    }

    /// Frobenius map `a -> a^2`.
    pub fn square(&self, a: u8) -> u8 {
        self.mul(a, a)
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.order() as u8
    }
}

/// Returns the tables for GF(2^s), `1 <= s <= 5`.
pub fn make_field(s: u32) -> Result<FieldTable> {
    FieldTable::new(s)
}

/// `log2(q)` when `q` is a supported field order.
pub fn degree_of_order(q: u32) -> Result<u32> {
    if q.is_power_of_two() && q >= 2 {
        let s = q.trailing_zeros();
        if s <= MAX_DEGREE {
            return Ok(s);
        }
    }
    Err(Error::UnsupportedOrder(q))
}
