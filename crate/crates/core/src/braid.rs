//! Braid words in the Artin generators, their permutations, and the
//! exponent-sum homomorphism.
//!
//! A word is read left to right: `σ2 σ1` applies `σ2` first. The strand
//! count travels with every word, so words on different strand counts
//! can never be mixed silently.

use std::fmt;
use std::num::NonZeroI32;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on the number of letters produced by expanding powers.
pub const MAX_EXPANDED_LETTERS: usize = 10_000_000;

/// `σ_i` or `σ_i^{-1}`, stored as the signed index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ArtinLetter(NonZeroI32);

impl ArtinLetter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1, "Artin generator indices start at 1");
        let i = i32::try_from(index).expect("generator index fits in i32");
        let v = if positive { i } else { -i };
        ArtinLetter(NonZeroI32::new(v).unwrap())
    }

    pub fn positive(index: usize) -> Self {
        Self::new(index, true)
    }

    pub fn negative(index: usize) -> Self {
        Self::new(index, false)
    }

    /// Signed form: `i` for `σ_i`, `-i` for `σ_i^{-1}`.
    pub fn from_signed(v: i32) -> Option<Self> {
        NonZeroI32::new(v).map(ArtinLetter)
    }

    pub fn signed(self) -> i32 {
        self.0.get()
    }

    pub fn index(self) -> usize {
        self.0.get().unsigned_abs() as usize
    }

    pub fn sign(self) -> i32 {
        self.0.get().signum()
    }

    pub fn is_positive(self) -> bool {
        self.0.get() > 0
    }

    pub fn inverse(self) -> Self {
        ArtinLetter(NonZeroI32::new(-self.0.get()).unwrap())
    }

    fn shifted(self, offset: usize) -> Self {
        Self::new(self.index() + offset, self.is_positive())
    }
}

/// A finite word in the Artin generators of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<ArtinLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<ArtinLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.signed() as i64,
                max: strands - 1,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2]` for `σ1 σ2⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &v in letters {
            let l = ArtinLetter::from_signed(v).ok_or(Error::IndexOutOfRange {
                index: 0,
                max: strands.saturating_sub(1),
                strands,
            })?;
            out.push(l);
        }
        Self::new(strands, out)
    }

    /// Parses the braid-word grammar:
    ///
    /// ```text
    /// WORD  := ITEM*
    /// ITEM  := (INT | "(" WORD ")") ("^" SIGNED_INT)?
    /// ```
    ///
    /// `i` stands for `σ_i`, `-i` for `σ_i^{-1}`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            strands,
        };
        let letters = p.word(0)?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected ')'"));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Group product: letters of `self` followed by letters of `other`.
    /// No cancellation happens.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub(crate) fn push(&mut self, letter: ArtinLetter) {
        debug_assert!(letter.index() < self.strands);
        self.letters.push(letter);
    }

    pub(crate) fn extend(&mut self, other: &BraidWord) {
        debug_assert_eq!(self.strands, other.strands);
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `d`-fold concatenation; negative `d` repeats the inverse word.
    pub fn power(&self, d: i64) -> BraidWord {
        let base = if d < 0 { self.inverse() } else { self.clone() };
        let reps = d.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Removes adjacent pairs `σ_i^{±1} σ_i^{∓1}` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<ArtinLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top == l.inverse() => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// The abelianization `B_n → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// Image in `S_n`: `σ_i` swaps the strands at positions `i` and `i+1`.
    /// The result maps each starting position to the final position of
    /// the strand that starts there.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        // at[pos] = strand currently at position pos
        let mut at: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            let i = l.index() - 1;
            at.swap(i, i + 1);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    /// Re-indexes this word onto strands `offset+1 ..= offset+self.strands`
    /// of a braid on `strands` strands.
    pub fn embed(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        if offset + self.strands > strands {
            return Err(Error::StrandMismatch {
                left: offset + self.strands,
                right: strands,
            });
        }
        Ok(BraidWord {
            strands,
            letters: self.letters.iter().map(|l| l.shifted(offset)).collect(),
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    strands: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn word(&mut self, depth: usize) -> Result<Vec<ArtinLetter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let base = match self.peek() {
                None => break,
                Some(b')') => break,
                Some(b'(') => {
                    let open = self.pos;
                    self.pos += 1;
                    let inner = self.word(depth + 1)?;
                    self.skip_ws();
                    if self.peek() != Some(b')') {
                        self.pos = open;
                        return Err(self.error("unclosed '('"));
                    }
                    self.pos += 1;
                    inner
                }
                Some(c) if c == b'-' || c == b'+' || c.is_ascii_digit() => {
                    let start = self.pos;
                    let v = self.int()?;
                    if v == 0 {
                        self.pos = start;
                        return Err(self.error("generator index 0 is not allowed"));
                    }
                    let index = v.unsigned_abs() as usize;
                    if index >= self.strands {
                        return Err(Error::IndexOutOfRange {
                            index: v,
                            max: self.strands - 1,
                            strands: self.strands,
                        });
                    }
                    vec![ArtinLetter::new(index, v > 0)]
                }
                Some(_) => return Err(self.error("unexpected character")),
            };
            self.skip_ws();
            let item = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let e = self.int()?;
                let reps = e.unsigned_abs() as usize;
                let total = reps.saturating_mul(base.len()).saturating_add(out.len());
                if total > MAX_EXPANDED_LETTERS {
                    return Err(Error::WordTooLong(total));
                }
                let unit: Vec<ArtinLetter> = if e < 0 {
                    base.iter().rev().map(|l| l.inverse()).collect()
                } else {
                    base
                };
                let mut v = Vec::with_capacity(unit.len() * reps);
                for _ in 0..reps {
                    v.extend_from_slice(&unit);
                }
                v
            } else {
                base
            };
            out.extend(item);
            if out.len() > MAX_EXPANDED_LETTERS {
                return Err(Error::WordTooLong(out.len()));
            }
        }
        if depth == 0 && self.peek() == Some(b')') {
            return Err(self.error("unmatched ')'"));
        }
        Ok(out)
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<i64>().map_err(|_| {
            let e = self.error("integer out of range");
            self.pos = start;
            e
        })
    }
}

/// A permutation of `{0, …, n-1}`, stored as its image array.
///
/// Displayed and serialized 1-based (`[2,1,3]` is the transposition of the
/// first two points).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(n));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `next`: `i ↦ next(self(i))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len());
        Permutation {
            images: self.images.iter().map(|&x| next.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Cycle decomposition; each cycle starts at its smallest point
    /// and cycles are ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths, a conjugacy invariant in `S_n`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

impl FromStr for ArtinLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: i32 = s.trim().parse().map_err(|_| Error::Syntax {
            pos: 0,
            msg: format!("bad letter {s:?}"),
        })?;
        ArtinLetter::from_signed(v).ok_or(Error::Syntax {
            pos: 0,
            msg: "generator index 0 is not allowed".into(),
        })
    }
}
