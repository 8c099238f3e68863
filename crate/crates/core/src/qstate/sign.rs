use std::fmt;

use crate::error::{Error, Result};

/// A `w`-bit sign allocation over the words of one code vector. Bit `m` set
/// means word `m` carries amplitude −1. Printed forms put word 0 rightmost.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    len: usize,
    blocks: Vec<u64>,
}

impl SignVector {
    pub fn zeros(len: usize) -> Result<Self> {
        if !len.is_power_of_two() {
            return Err(Error::InvalidParameter(format!("sign vector length {len} is not a power of two")));
        }
        Ok(Self { len, blocks: vec![0; len.div_ceil(64)] })
    }

    /// Parses hexadecimal as an integer whose bit `m` is the sign of word `m`.
    pub fn from_hex(hex: &str, len: usize) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        let digits: Vec<char> = hex.trim().chars().filter(|c| *c != '_').collect();
        if digits.is_empty() {
            return Err(Error::Parse("empty hex sign vector".into()));
        }
        for (pos, c) in digits.iter().rev().enumerate() {
            let nibble =
                c.to_digit(16).ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?} in {hex:?}")))?;
            for bit in 0..4 {
                if nibble >> bit & 1 == 1 {
                    let m = pos * 4 + bit;
                    if m >= len {
                        return Err(Error::Parse(format!(
                            "hex sign vector {hex:?} does not fit in {len} bits"
                        )));
                    }
                    v.set(m, true);
                }
            }
        }
        Ok(v)
    }

    /// Parses a `'0'/'1'` string whose rightmost character is word 0.
    pub fn from_binary(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.len())?;
        for (pos, c) in s.chars().rev().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(pos, true),
                other => return Err(Error::Parse(format!("invalid sign bit {other:?}"))),
            }
        }
        Ok(v)
    }

    /// Sign of word `m` given by the bits of an integer (`len <= 64`).
    pub fn from_u64(bits: u64, len: usize) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        if len < 64 && bits >> len != 0 {
            return Err(Error::InvalidParameter(format!("{bits:#x} does not fit in {len} bits")));
        }
        v.blocks[0] = bits;
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, m: usize) -> bool {
        self.blocks[m / 64] >> (m % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, m: usize, minus: bool) {
        let mask = 1u64 << (m % 64);
        if minus {
            self.blocks[m / 64] |= mask;
        } else {
            self.blocks[m / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, m: usize) {
        self.blocks[m / 64] ^= 1u64 << (m % 64);
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { left: self.len, right: other.len });
        }
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// `result(m) = self(m ⊕ delta)`.
    pub fn permute_xor(&self, delta: usize) -> Self {
        let mut out = self.clone();
        let mut bit = 1usize;
        while bit < self.len {
            if delta & bit != 0 {
                if bit >= 64 {
                    let stride = bit / 64;
                    for i in 0..out.blocks.len() {
                        if i & stride == 0 {
                            out.blocks.swap(i, i + stride);
                        }
                    }
                } else {
                    let shift = bit as u32;
                    let low = SWAP_MASKS[bit.trailing_zeros() as usize];
                    for b in out.blocks.iter_mut() {
                        *b = (*b & low) << shift | (*b >> shift) & low;
                    }
                }
            }
            bit <<= 1;
        }
        out
    }

    /// Words carrying a minus sign, ascending.
    pub fn minus_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&m| self.get(m)).collect()
    }

    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4);
        (0..digits)
            .rev()
            .map(|d| {
                let mut nibble = 0;
                for bit in 0..4 {
                    let m = d * 4 + bit;
                    if m < self.len && self.get(m) {
                        nibble |= 1 << bit;
                    }
                }
                char::from_digit(nibble, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    pub fn to_binary(&self) -> String {
        (0..self.len).rev().map(|m| if self.get(m) { '1' } else { '0' }).collect()
    }
}

/// Masks selecting the low half of each `2^(i+1)`-bit group.
const SWAP_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({})", self.to_binary())
    }
}
