//! Reduced words in free groups of finite rank.
//!
//! A [`Word`] always holds its freely reduced form together with the rank
//! of the ambient free group, so two words are equal as group elements
//! exactly when they are equal as values. Letters are stored left to right
//! as written.

use std::fmt;
use std::num::NonZeroI32;

use crate::error::{Error, Result};

/// A basis element of a free group, indexed from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(u32);

impl Generator {
    pub fn new(index: u32) -> Option<Self> {
        (index >= 1 && index <= i32::MAX as u32).then_some(Generator(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// A generator or its inverse, packed as a nonzero signed index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(NonZeroI32);

impl Letter {
    pub fn new(generator: Generator, inverse: bool) -> Self {
        let i = generator.0 as i32;
        Letter(NonZeroI32::new(if inverse { -i } else { i }).unwrap())
    }

    /// Letter from a signed index: `3` is the third generator, `-3` its inverse.
    pub fn from_signed(v: i32) -> Option<Self> {
        NonZeroI32::new(v).map(Letter)
    }

    pub fn pos(index: u32) -> Self {
        Letter::new(
            Generator::new(index).expect("generator index must be >= 1"),
            false,
        )
    }

    pub fn neg(index: u32) -> Self {
        Letter::new(
            Generator::new(index).expect("generator index must be >= 1"),
            true,
        )
    }

    pub fn generator(self) -> Generator {
        Generator(self.0.get().unsigned_abs())
    }

    pub fn index(self) -> u32 {
        self.0.get().unsigned_abs()
    }

    pub fn is_inverse(self) -> bool {
        self.0.get() < 0
    }

    /// +1 or -1.
    pub fn sign(self) -> i32 {
        self.0.get().signum()
    }

    pub fn signed(self) -> i32 {
        self.0.get()
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Incremental free reduction: pushing letters keeps the buffer reduced.
#[derive(Debug, Default)]
pub(crate) struct Reducer {
    stack: Vec<Letter>,
}

impl Reducer {
    pub(crate) fn with_capacity(n: usize) -> Self {
        Reducer {
            stack: Vec::with_capacity(n),
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, l: Letter) {
        if self.stack.last() == Some(&l.inverse()) {
            self.stack.pop();
        } else {
            self.stack.push(l);
        }
    }

    pub(crate) fn extend(&mut self, letters: &[Letter]) {
        // Only the seam can cancel when `letters` is itself reduced, but
        // pushing one at a time is correct for arbitrary input.
        for &l in letters {
            self.push(l);
        }
    }

    pub(crate) fn extend_inverse(&mut self, letters: &[Letter]) {
        for &l in letters.iter().rev() {
            self.push(l.inverse());
        }
    }

    pub(crate) fn finish(self, rank: u32) -> Word {
        Word {
            rank,
            letters: self.stack,
        }
    }
}

/// A freely reduced word in the free group of rank `rank`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: u32,
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn identity(rank: u32) -> Self {
        assert!(rank >= 1, "free group rank must be positive");
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// The word consisting of the single generator `index`.
    pub fn generator(rank: u32, index: u32) -> Result<Self> {
        Word::reduce(
            rank,
            [Letter::from_signed(index as i32)
                .ok_or_else(|| Error::InvalidGenerator(format!("index {index}")))?],
        )
    }

    /// Freely reduce a raw letter sequence.
    pub fn reduce(rank: u32, raw: impl IntoIterator<Item = Letter>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("free group rank must be positive".into()));
        }
        let mut r = Reducer::default();
        for l in raw {
            if l.index() > rank {
                return Err(Error::InvalidGenerator(format!(
                    "index {} exceeds rank {rank}",
                    l.index()
                )));
            }
            r.push(l);
        }
        Ok(r.finish(rank))
    }

    /// Reduce a sequence of signed indices (`-2` is the inverse of generator 2).
    pub fn from_signed(rank: u32, raw: &[i32]) -> Result<Self> {
        let letters = raw
            .iter()
            .map(|&v| {
                Letter::from_signed(v).ok_or_else(|| Error::InvalidGenerator("index 0".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::reduce(rank, letters)
    }

    /// Caller guarantees the letters are reduced and in range.
    pub(crate) fn from_reduced_unchecked(rank: u32, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        debug_assert!(letters.iter().all(|l| l.index() <= rank));
        Word { rank, letters }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn check_rank(&self, other: &Word) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    pub fn mul(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Word) -> Word {
        // Cancellation only happens at the seam.
        let overlap = self
            .letters
            .iter()
            .rev()
            .zip(other.letters.iter())
            .take_while(|(x, y)| **x == y.inverse())
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * overlap);
        letters.extend_from_slice(&self.letters[..self.len() - overlap]);
        letters.extend_from_slice(&other.letters[overlap..]);
        Word {
            rank: self.rank,
            letters,
        }
    }

    #[must_use]
    pub fn inv(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    #[must_use]
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let (u, c) = base.cyclic_decompose();
        // u c^n u^-1 has no cancellation inside c^n since c is cyclically reduced.
        let k = n.unsigned_abs() as usize;
        let mut r = Reducer::with_capacity(2 * u.len() + k * c.len());
        r.extend(&u.letters);
        for _ in 0..k {
            r.extend(&c.letters);
        }
        r.extend_inverse(&u.letters);
        r.finish(self.rank)
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        let mut r = Reducer::with_capacity(2 * self.len() + other.len());
        r.extend(&self.letters);
        r.extend(&other.letters);
        r.extend_inverse(&self.letters);
        Ok(r.finish(self.rank))
    }

    /// Split `w = u c u^-1` with `c` cyclically reduced and `u` maximal.
    pub fn cyclic_decompose(&self) -> (Word, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        (
            Word::from_reduced_unchecked(self.rank, self.letters[..k].to_vec()),
            Word::from_reduced_unchecked(self.rank, self.letters[k..n - k].to_vec()),
        )
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => self.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }

    /// Signed occurrence count of each generator.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank as usize];
        for l in &self.letters {
            v[l.index() as usize - 1] += i64::from(l.sign());
        }
        v
    }

    /// The same letters viewed in a free group of larger rank.
    pub fn lift(&self, rank: u32) -> Result<Word> {
        if rank < self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rank,
            });
        }
        Ok(Word {
            rank,
            letters: self.letters.clone(),
        })
    }

    /// Same letters, relabelled as a word in another rank-`rank` alphabet.
    pub(crate) fn with_rank(&self, rank: u32) -> Word {
        debug_assert!(self.letters.iter().all(|l| l.index() <= rank));
        Word {
            rank,
            letters: self.letters.clone(),
        }
    }

    /// Maximal runs `(letter, count)` of the reduced word.
    pub fn syllables(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((prev, n)) if *prev == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(F{}; {:?})", self.rank, self.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i32]) -> Word {
        Word::from_signed(2, raw).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[1, 2, -2, 1]).letters(), w(&[1, 1]).letters());
        assert!(w(&[]).is_identity());
        assert!(w(&[1, -1, 2, -2]).is_identity());
        assert_eq!(
            Word::from_signed(2, &[1, 3]),
            Err(Error::InvalidGenerator("index 3 exceeds rank 2".into()))
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(w(&[1, 2]).mul(&w(&[-2, 1])).unwrap(), w(&[1, 1]));
        assert_eq!(w(&[1, 2]).mul(&w(&[])).unwrap(), w(&[1, 2]));
        assert_eq!(w(&[1, 2]).mul(&w(&[1, 2])).unwrap(), w(&[1, 2, 1, 2]));
        let other = Word::identity(3);
        assert_eq!(
            w(&[1]).mul(&other),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inv_examples() {
        assert_eq!(w(&[1, 2]).inv(), w(&[-2, -1]));
        assert_eq!(w(&[]).inv(), w(&[]));
        assert_eq!(w(&[-1]).inv(), w(&[1]));
    }

    #[test]
    fn cyclic_decompose_examples() {
        assert_eq!(w(&[1, 2, -1]).cyclic_decompose(), (w(&[1]), w(&[2])));
        assert_eq!(w(&[2, 1, -2]).cyclic_decompose(), (w(&[2]), w(&[1])));
        assert_eq!(w(&[1, 2]).cyclic_decompose(), (w(&[]), w(&[1, 2])));
        assert_eq!(w(&[]).cyclic_decompose(), (w(&[]), w(&[])));
        assert_eq!(w(&[-1]).cyclic_decompose(), (w(&[]), w(&[-1])));
    }

    #[test]
    fn exponent_vector_examples() {
        assert_eq!(w(&[1, 2, 2]).exponent_vector(), vec![1, 2]);
        assert_eq!(w(&[]).exponent_vector(), vec![0, 0]);
        assert_eq!(w(&[1, 2, -1, -2]).exponent_vector(), vec![0, 0]);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = w(&[1, 2, -1]);
        let mut acc = Word::identity(2);
        for _ in 0..5 {
            acc = acc.mul(&x).unwrap();
        }
        assert_eq!(x.pow(5), acc);
        assert_eq!(x.pow(-5), acc.inv());
        assert!(x.pow(0).is_identity());
    }

    #[test]
    fn syllables_collapse_runs() {
        assert_eq!(
            w(&[1, 2, 2, -1]).syllables(),
            vec![
                (Letter::pos(1), 1),
                (Letter::pos(2), 2),
                (Letter::neg(1), 1)
            ]
        );
    }

    #[test]
    fn long_words_are_handled() {
        let n = 100_000;
        let x: Vec<i32> = (0..n).map(|i| if i % 3 == 0 { 2 } else { 1 }).collect();
        let big = Word::from_signed(2, &x).unwrap();
        assert_eq!(big.len(), n);
        assert!(big.mul(&big.inv()).unwrap().is_identity());
    }
}
