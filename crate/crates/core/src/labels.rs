//! Binary strings and per-vertex labelings ordered by the coordinatewise
//! partial order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A fixed-width binary string. Position 0 is the leftmost character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    width: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(width: usize) -> Self {
        Bits { width, words: vec![0; width.div_ceil(64)] }
    }

    /// Low `width` bits of `mask`, bit `i` of the mask at position `i`.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= 64);
        let mut b = Bits::zeros(width);
        for i in 0..width {
            if mask >> i & 1 == 1 {
                b.set(i, true);
            }
        }
        b
    }

    /// Inverse of [`Bits::from_mask`]; `None` when wider than 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.width);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.width);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn with(&self, i: usize, value: bool) -> Self {
        let mut b = self.clone();
        b.set(i, value);
        b
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn hamming(&self, other: &Bits) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a ^ b).count_ones() as usize).sum()
    }

    /// Coordinatewise `self <= other`.
    pub fn is_le(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn xor(&self, other: &Bits) -> Bits {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Bits { width: self.width, words }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&i| self.get(i))
    }

    /// Permutes coordinates: position `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Bits {
        let mut out = Bits::zeros(perm.len());
        for i in self.ones() {
            out.set(perm[i], true);
        }
        out
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Bits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut b = Bits::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => b.set(i, true),
                _ => return Err(Error::InvalidArgument(format!("not a binary string: {s:?}"))),
            }
        }
        Ok(b)
    }
}

/// One bit string per vertex, all of the same width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryLabeling {
    width: usize,
    labels: Vec<Bits>,
}

impl BinaryLabeling {
    pub fn new(width: usize, labels: Vec<Bits>) -> Result<Self> {
        if let Some(bad) = labels.iter().find(|b| b.width() != width) {
            return Err(Error::WidthMismatch { expected: width, found: bad.width() });
        }
        let mut seen = std::collections::HashSet::new();
        if !labels.iter().all(|b| seen.insert(b)) {
            return Err(Error::InvalidArgument("labels are not pairwise distinct".into()));
        }
        Ok(BinaryLabeling { width, labels })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &Bits {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Bits] {
        &self.labels
    }

    /// `label(u) <= label(v)` coordinatewise.
    pub fn le(&self, u: usize, v: usize) -> bool {
        self.labels[u].is_le(&self.labels[v])
    }

    pub fn index(&self) -> HashMap<&Bits, usize> {
        self.labels.iter().enumerate().map(|(v, b)| (b, v)).collect()
    }

    /// Every label with bit `i` set has its bit-`i`-cleared copy present.
    pub fn is_downward_closed(&self) -> bool {
        is_downward_closed(&self.labels)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.labels.iter().map(ToString::to_string).collect()
    }
}

pub fn is_downward_closed(labels: &[Bits]) -> bool {
    let set: std::collections::HashSet<&Bits> = labels.iter().collect();
    labels.iter().all(|b| b.ones().all(|i| set.contains(&b.with(i, false))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Bits {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let b = bits("0110");
        assert_eq!(b.to_string(), "0110");
        assert!(b.get(1) && !b.get(0));
        assert!("01x".parse::<Bits>().is_err());
    }

    #[test]
    fn order_and_distance() {
        assert!(bits("0100").is_le(&bits("0110")));
        assert!(!bits("1000").is_le(&bits("0110")));
        assert_eq!(bits("1100").hamming(&bits("0110")), 2);
        let wide = Bits::zeros(130).with(129, true);
        assert_eq!(wide.hamming(&Bits::zeros(130)), 1);
    }

    #[test]
    fn downward_closure() {
        let l = |v: &[&str]| v.iter().map(|s| bits(s)).collect::<Vec<_>>();
        assert!(is_downward_closed(&l(&["00", "10", "01"])));
        assert!(!is_downward_closed(&l(&["00", "11"])));
    }

    #[test]
    fn labeling_rejects_duplicates() {
        assert!(BinaryLabeling::new(2, vec![bits("01"), bits("01")]).is_err());
        assert!(BinaryLabeling::new(2, vec![bits("011")]).is_err());
    }

    #[test]
    fn mask_roundtrip() {
        let b = Bits::from_mask(5, 0b10110);
        assert_eq!(b.to_string(), "01101");
        assert_eq!(b.to_mask(), Some(0b10110));
        assert_eq!(b.permute(&[4, 3, 2, 1, 0]).to_string(), "10110");
    }
}
