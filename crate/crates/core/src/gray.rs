//! Gray map `R -> F2^3`, Lee weight and packed binary words.
//!
//! A ring word of length `n` maps to `3n` bits in component-block order:
//! all `a1` coordinates first, then all `a2`, then all `a3`.

use crate::ring::RingElement;
use crate::{Error, Result};

/// Packed bit vector; bit `i` lives in `words[i / 64]` at position `i % 64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    words: Vec<u64>,
    len: usize,
}

impl BinaryWord {
    pub fn zeros(len: usize) -> Self {
        BinaryWord {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut w = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            w.set(i, b);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BinaryWord) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Population count.
    pub fn hamming_weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// True when the support of `self` contains the support of `other`.
    pub fn covers(&self, other: &BinaryWord) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| b & !a == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Little-endian packing: bit `i` goes to byte `i / 8`, bit `i % 8`.
    pub fn to_le_bytes(&self) -> Vec<u8> {
        let nbytes = self.len.div_ceil(8);
        self.words
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .take(nbytes)
            .collect()
    }

    pub fn from_le_bytes(bytes: &[u8], len: usize) -> Result<Self> {
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::MalformedDump(format!(
                "expected {} bytes for {} bits, got {}",
                len.div_ceil(8),
                len,
                bytes.len()
            )));
        }
        let mut w = Self::zeros(len);
        for (i, chunk) in bytes.chunks(8).enumerate() {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            w.words[i] = u64::from_le_bytes(buf);
        }
        if !len.is_multiple_of(64) && w.words.last().is_some_and(|&last| last >> (len % 64) != 0) {
            return Err(Error::MalformedDump("padding bits are not zero".into()));
        }
        Ok(w)
    }
}

impl std::fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A word over the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingWord {
    pub symbols: Vec<RingElement>,
}

impl RingWord {
    pub fn new(symbols: Vec<RingElement>) -> Self {
        RingWord { symbols }
    }

    pub fn zeros(n: usize) -> Self {
        RingWord {
            symbols: vec![RingElement::ZERO; n],
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn add(&self, other: &RingWord) -> RingWord {
        assert_eq!(self.len(), other.len());
        RingWord::new(
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

/// `a1 + a2 v + a3 v^2 -> (a1, a2, a3)` for symbols of `R`.
pub fn gray_symbol(a: RingElement) -> Result<[bool; 3]> {
    if let Some(&bad) = a.coefficients().iter().find(|&&c| c > 1) {
        return Err(Error::NotInBaseRing(bad));
    }
    Ok([a.a1 == 1, a.a2 == 1, a.a3 == 1])
}

/// Gray image in component-block order.
pub fn gray_word(w: &RingWord) -> Result<BinaryWord> {
    let n = w.len();
    let mut out = BinaryWord::zeros(3 * n);
    for (i, &s) in w.symbols.iter().enumerate() {
        let bits = gray_symbol(s)?;
        for (k, &b) in bits.iter().enumerate() {
            if b {
                out.set(k * n + i, true);
            }
        }
    }
    Ok(out)
}

/// Lee weight of a single symbol of `R`.
pub fn symbol_lee_weight(a: RingElement) -> Result<u64> {
    Ok(gray_symbol(a)?.iter().filter(|&&b| b).count() as u64)
}

/// Lee weight: the Hamming weight of the Gray image.
pub fn lee_weight(w: &RingWord) -> Result<u64> {
    w.symbols.iter().map(|&s| symbol_lee_weight(s)).sum()
}

pub fn lee_distance(u: &RingWord, w: &RingWord) -> Result<u64> {
    lee_weight(&u.add(w))
}

pub fn hamming_weight(b: &BinaryWord) -> u64 {
    b.hamming_weight()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn base(bits: u8) -> RingElement {
        RingElement::from_base_bits(bits)
    }

    /// Per-symbol interleaved layout, the alternative serialization.
    fn interleaved(w: &RingWord) -> BinaryWord {
        let bits: Vec<bool> = w
            .symbols
            .iter()
            .flat_map(|&s| gray_symbol(s).unwrap())
            .collect();
        BinaryWord::from_bits(&bits)
    }

    fn word_strategy(n: usize) -> impl Strategy<Value = RingWord> {
        prop::collection::vec(0u8..8, n)
            .prop_map(|v| RingWord::new(v.into_iter().map(base).collect()))
    }

    #[test]
    fn gray_symbol_examples() {
        assert_eq!(
            gray_symbol(RingElement::new(1, 0, 1)),
            Ok([true, false, true])
        );
        assert_eq!(gray_symbol(RingElement::ZERO), Ok([false; 3]));
        assert_eq!(gray_symbol(RingElement::new(1, 1, 1)), Ok([true; 3]));
        assert_eq!(
            gray_symbol(RingElement::new(2, 0, 0)),
            Err(Error::NotInBaseRing(2))
        );
    }

    #[test]
    fn gray_word_examples() {
        let w = RingWord::new(vec![RingElement::ONE, RingElement::V]);
        assert_eq!(gray_word(&w).unwrap().to_string(), "100100");
        let z = gray_word(&RingWord::zeros(5)).unwrap();
        assert_eq!(z.len(), 15);
        assert!(z.is_zero());
        let bad = RingWord::new(vec![RingElement::ONE, RingElement::new(0, 3, 0)]);
        assert!(gray_word(&bad).is_err());
    }

    #[test]
    fn lee_weight_examples() {
        assert_eq!(
            lee_weight(&RingWord::new(vec![RingElement::new(1, 1, 0)])),
            Ok(2)
        );
        assert_eq!(lee_weight(&RingWord::zeros(4)), Ok(0));
        let w = RingWord::new(vec![RingElement::ONE, RingElement::V, RingElement::V2]);
        assert_eq!(lee_weight(&w), Ok(3));
    }

    #[test]
    fn hamming_weight_examples() {
        let w = BinaryWord::from_bits(&[true, false, false, true, false, false]);
        assert_eq!(hamming_weight(&w), 2);
        assert_eq!(hamming_weight(&BinaryWord::zeros(9)), 0);
        assert_eq!(hamming_weight(&BinaryWord::from_bits(&[true; 9])), 9);
    }

    #[test]
    fn gray_word_injective_on_length_two() {
        let mut seen = std::collections::HashSet::new();
        for a in 0..8 {
            for b in 0..8 {
                let w = RingWord::new(vec![base(a), base(b)]);
                assert!(seen.insert(gray_word(&w).unwrap()));
            }
        }
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn covers_is_support_inclusion() {
        let a = BinaryWord::from_bits(&[true, true, false, true]);
        let b = BinaryWord::from_bits(&[true, false, false, true]);
        assert!(a.covers(&b));
        assert!(!b.covers(&a));
        assert!(a.covers(&a));
    }

    #[test]
    fn le_bytes_rejects_bad_input() {
        assert!(BinaryWord::from_le_bytes(&[0xff], 9).is_err());
        assert!(BinaryWord::from_le_bytes(&[0xff, 0x02], 9).is_err());
        assert!(BinaryWord::from_le_bytes(&[0xff, 0x01], 9).is_ok());
    }

    proptest! {
        #[test]
        fn gray_is_an_isometry(u in word_strategy(40), w in word_strategy(40)) {
            let gu = gray_word(&u).unwrap();
            let gw = gray_word(&w).unwrap();
            prop_assert_eq!(lee_distance(&u, &w).unwrap(), gu.xor(&gw).hamming_weight());
            prop_assert_eq!(gray_word(&u.add(&w)).unwrap(), gu.xor(&gw));
        }

        #[test]
        fn lee_weight_is_layout_independent(u in word_strategy(33)) {
            let block = gray_word(&u).unwrap().hamming_weight();
            prop_assert_eq!(block, interleaved(&u).hamming_weight());
            prop_assert_eq!(block, lee_weight(&u).unwrap());
        }

        #[test]
        fn le_bytes_round_trip(bits in prop::collection::vec(any::<bool>(), 0..300)) {
            let w = BinaryWord::from_bits(&bits);
            let back = BinaryWord::from_le_bytes(&w.to_le_bytes(), bits.len()).unwrap();
            prop_assert_eq!(back, w);
        }

        #[test]
        fn covering_is_antisymmetric(a in prop::collection::vec(any::<bool>(), 20),
                                     b in prop::collection::vec(any::<bool>(), 20)) {
            let (x, y) = (BinaryWord::from_bits(&a), BinaryWord::from_bits(&b));
            if x.covers(&y) && y.covers(&x) {
                prop_assert_eq!(x.support(), y.support());
            }
        }
    }
}
