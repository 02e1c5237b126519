//! Bit sequences: the common currency for programs, machine input and
//! output, and induction data.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// An immutable-by-convention sequence of bits, most significant first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Deserialize)]
#[serde(try_from = "String")]
pub struct Bits(Vec<bool>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseBitsError {
    #[error("invalid character {0:?} in bit string")]
    InvalidChar(char),
    #[error("hex program text must have an even number of nibbles")]
    OddNibbleCount,
    #[error("invalid hex digit {0:?}")]
    InvalidHexDigit(char),
}

impl Bits {
    pub fn new() -> Self {
        Bits(Vec::new())
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        Bits(bits)
    }

    /// Low `len` bits of `code`, most significant first. Handy for
    /// exhaustive scans that count through raw bit strings.
    pub fn from_code(code: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = Vec::with_capacity(len);
        for i in (0..len).rev() {
            v.push(code >> i & 1 == 1);
        }
        Bits(v)
    }

    /// Parses ASCII '0'/'1' with optional whitespace.
    pub fn parse(text: &str) -> Result<Self, ParseBitsError> {
        let mut v = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => v.push(false),
                '1' => v.push(true),
                c if c.is_whitespace() => {}
                c => return Err(ParseBitsError::InvalidChar(c)),
            }
        }
        Ok(Bits(v))
    }

    /// Parses hex with an even nibble count; each nibble contributes four
    /// bits, most significant first.
    pub fn parse_hex(text: &str) -> Result<Self, ParseBitsError> {
        let digits: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if digits.len() % 2 != 0 {
            return Err(ParseBitsError::OddNibbleCount);
        }
        let mut v = Vec::with_capacity(digits.len() * 4);
        for c in digits {
            let nibble = c
                .to_digit(16)
                .ok_or(ParseBitsError::InvalidHexDigit(c))? as u8;
            for i in (0..4).rev() {
                v.push(nibble >> i & 1 == 1);
            }
        }
        Ok(Bits(v))
    }

    /// Program-file text: binary by default, hex when prefixed with "hex:".
    pub fn parse_program_text(text: &str) -> Result<Self, ParseBitsError> {
        let trimmed = text.trim();
        match trimmed.strip_prefix("hex:") {
            Some(rest) => Self::parse_hex(rest),
            None => Self::parse(trimmed),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    /// `self` extended by one bit; used when walking prediction trees.
    pub fn with_bit(&self, bit: bool) -> Self {
        let mut v = self.0.clone();
        v.push(bit);
        Bits(v)
    }

    pub fn concat(&self, other: &Bits) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Bits(v)
    }

    pub fn starts_with(&self, prefix: &Bits) -> bool {
        self.0.len() >= prefix.0.len() && self.0[..prefix.0.len()] == prefix.0[..]
    }

    /// True when `prefix` is a proper prefix of `self`.
    pub fn has_proper_prefix(&self, prefix: &Bits) -> bool {
        self.0.len() > prefix.0.len() && self.starts_with(prefix)
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bits {
    // Renders like Display, quoted, so test failures stay readable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl Serialize for Bits {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl TryFrom<String> for Bits {
    type Error = ParseBitsError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        Bits::parse(&s)
    }
}

impl std::str::FromStr for Bits {
    type Err = ParseBitsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bits::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ignores_whitespace() {
        let b = Bits::parse("0111 1111").unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.to_string(), "01111111");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(Bits::parse("01x"), Err(ParseBitsError::InvalidChar('x')));
    }

    #[test]
    fn hex_round_trip() {
        let b = Bits::parse_hex("7f").unwrap();
        assert_eq!(b.to_string(), "01111111");
        assert_eq!(Bits::parse_hex("7"), Err(ParseBitsError::OddNibbleCount));
    }

    #[test]
    fn program_text_dispatch() {
        assert_eq!(
            Bits::parse_program_text("hex:7f").unwrap(),
            Bits::parse("01111111").unwrap()
        );
        assert_eq!(
            Bits::parse_program_text("0111 1111").unwrap(),
            Bits::parse("01111111").unwrap()
        );
    }

    #[test]
    fn prefix_relations() {
        let p = Bits::parse("010").unwrap();
        let q = Bits::parse("0101").unwrap();
        assert!(q.starts_with(&p));
        assert!(q.has_proper_prefix(&p));
        assert!(!p.has_proper_prefix(&p));
        assert!(Bits::new().len() == 0 && q.starts_with(&Bits::new()));
    }

    #[test]
    fn from_code_is_msb_first() {
        assert_eq!(Bits::from_code(0b0111, 4).to_string(), "0111");
        assert_eq!(Bits::from_code(1, 3).to_string(), "001");
    }
}
