//! Exact 2x2 integer matrices and membership in the free group <A1, A2>.
//!
//! `A1 = [[1,2],[0,1]]` and `A2 = [[1,0],[2,1]]` generate a free subgroup of
//! SL(2,Z) of index 2 in the level-2 congruence subgroup; together with
//! `-I` they generate all of it. [`sanov_rewrite`] inverts [`eval_sanov`]
//! up to that sign.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub entries: [[BigInt; 2]; 2],
}

impl IntMatrix2 {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Self {
        IntMatrix2 {
            entries: [[p.into(), q.into()], [r.into(), s.into()]],
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn a1() -> Self {
        Self::new(1, 2, 0, 1)
    }

    pub fn a2() -> Self {
        Self::new(1, 0, 2, 1)
    }

    /// `A1^n`, computed in closed form.
    pub fn a1_pow(n: &BigInt) -> Self {
        Self::new(BigInt::one(), n * 2, BigInt::zero(), BigInt::one())
    }

    /// `A2^n`, computed in closed form.
    pub fn a2_pow(n: &BigInt) -> Self {
        Self::new(BigInt::one(), BigInt::zero(), n * 2, BigInt::one())
    }

    pub fn mul(&self, other: &IntMatrix2) -> IntMatrix2 {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &other.entries;
        IntMatrix2 {
            entries: [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
        }
    }

    pub fn det(&self) -> BigInt {
        let [[a, b], [c, d]] = &self.entries;
        a * d - b * c
    }

    #[must_use]
    pub fn neg(&self) -> IntMatrix2 {
        let [[a, b], [c, d]] = &self.entries;
        IntMatrix2 {
            entries: [[-a, -b], [-c, -d]],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Inverse over the integers; exists iff the determinant is a unit.
    pub fn inverse(&self) -> Option<IntMatrix2> {
        let det = self.det();
        if det.abs() != BigInt::one() {
            return None;
        }
        let [[a, b], [c, d]] = &self.entries;
        Some(IntMatrix2 {
            entries: [[d * &det, -b * &det], [-c * &det, a * &det]],
        })
    }

    pub fn mod2(&self) -> Mod2Matrix {
        let bit = |x: &BigInt| u8::from(x.is_odd());
        let [[a, b], [c, d]] = &self.entries;
        Mod2Matrix([[bit(a), bit(b)], [bit(c), bit(d)]])
    }

    /// Sum of absolute values of the entries.
    pub fn l1_norm(&self) -> BigInt {
        self.entries.iter().flatten().map(|x| x.abs()).sum()
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntMatrix2 {
    type Err = Error;

    /// `[[p,q],[r,s]]`, whitespace allowed anywhere.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::parse(0, format!("expected [[p,q],[r,s]], got {s:?}"));
        let inner = compact
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (top, bottom) = inner.split_once("],[").ok_or_else(bad)?;
        let mut nums = Vec::with_capacity(4);
        for part in top.split(',').chain(bottom.split(',')) {
            nums.push(part.parse::<BigInt>().map_err(|_| bad())?);
        }
        let [p, q, r, s]: [BigInt; 4] = nums.try_into().map_err(|_| bad())?;
        Ok(IntMatrix2::new(p, q, r, s))
    }
}

/// A matrix over Z/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mod2Matrix(pub [[u8; 2]; 2]);

impl Mod2Matrix {
    pub const IDENTITY: Mod2Matrix = Mod2Matrix([[1, 0], [0, 1]]);

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

pub fn mat_mul(m: &IntMatrix2, n: &IntMatrix2) -> IntMatrix2 {
    m.mul(n)
}

pub fn mod2_reduce(m: &IntMatrix2) -> Mod2Matrix {
    m.mod2()
}

/// Product of `A1`, `A2` (and inverses) read left to right; letter 1 is `A1`.
pub fn eval_sanov(word: &Word) -> IntMatrix2 {
    word.syllables()
        .into_iter()
        .fold(IntMatrix2::identity(), |acc, (l, n)| {
            let k = BigInt::from(n) * l.sign();
            let step = if l.index() == 1 {
                IntMatrix2::a1_pow(&k)
            } else {
                IntMatrix2::a2_pow(&k)
            };
            acc.mul(&step)
        })
}

/// One of the two free generators `A1`, `A2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SanovGen {
    A1,
    A2,
}

/// `matrix = sign * (A_{g1}^{n1} A_{g2}^{n2} ...)` with alternating generators
/// and nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SanovCertificate {
    pub syllables: Vec<(SanovGen, BigInt)>,
    pub sign: i8,
}

impl SanovCertificate {
    /// The certified word over `{A1, A2}` (letter 1 is `A1`).
    ///
    /// Exponents are expanded into letters, so this is only sensible when the
    /// exponents are small; [`fmt::Display`] never expands.
    pub fn word(&self) -> Result<Word> {
        let mut raw = Vec::new();
        for (g, n) in &self.syllables {
            let idx = match g {
                SanovGen::A1 => 1,
                SanovGen::A2 => 2,
            };
            let count = n
                .abs()
                .to_usize()
                .ok_or_else(|| Error::Invalid(format!("exponent {n} too large to expand")))?;
            let letter = if n.is_negative() {
                Letter::neg(idx)
            } else {
                Letter::pos(idx)
            };
            raw.extend(std::iter::repeat_n(letter, count));
        }
        Word::reduce(2, raw)
    }

    /// Recompute `sign * eval(word)` without expanding exponents.
    pub fn evaluate(&self) -> IntMatrix2 {
        let m = self
            .syllables
            .iter()
            .fold(IntMatrix2::identity(), |acc, (g, n)| {
                acc.mul(&match g {
                    SanovGen::A1 => IntMatrix2::a1_pow(n),
                    SanovGen::A2 => IntMatrix2::a2_pow(n),
                })
            });
        if self.sign < 0 {
            m.neg()
        } else {
            m
        }
    }
}

impl fmt::Display for SanovCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sign={} word=", if self.sign < 0 { "-1" } else { "+1" })?;
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, n)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(match g {
                SanovGen::A1 => "A1",
                SanovGen::A2 => "A2",
            })?;
            if !n.is_one() {
                write!(f, "^{n}")?;
            }
        }
        Ok(())
    }
}

/// Parse the `sign=+1 word=A1 A2` certificate text.
impl FromStr for SanovCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .trim()
            .strip_prefix("sign=")
            .ok_or_else(|| Error::parse(0, "expected sign="))?;
        let (sign_text, word_text) = rest
            .split_once(" word=")
            .ok_or_else(|| Error::parse(5, "expected word="))?;
        let sign = match sign_text {
            "+1" | "1" => 1,
            "-1" => -1,
            _ => return Err(Error::parse(5, format!("bad sign {sign_text:?}"))),
        };
        let w = Alphabet::sanov().parse_word(word_text)?;
        let syllables = w
            .syllables()
            .into_iter()
            .map(|(l, n)| {
                let g = if l.index() == 1 {
                    SanovGen::A1
                } else {
                    SanovGen::A2
                };
                (g, BigInt::from(n) * l.sign())
            })
            .collect();
        Ok(SanovCertificate { syllables, sign })
    }
}

/// The `n` with `|x - 2 n y| < |y|`; unique because `x` is odd and `y` even.
fn nearest_even_quotient(x: &BigInt, y: &BigInt) -> BigInt {
    let d: BigInt = y * 2;
    let mut n = x.div_floor(&d);
    let rem = x - &n * &d;
    if rem.abs() > y.abs() {
        n += 1;
    }
    n
}

/// Write `m = sign * eval_sanov(word)` with the unique reduced `word`.
///
/// Ping-pong on the first column `(p, r)`: when `|p| > |r|` the word starts
/// with a nonzero power of `A1`, when `|p| < |r|` with a power of `A2`; the
/// exponent is the one that brings the dominant entry below the other.
/// Terminates when `r = 0`, leaving `+-A1^n`. Every step strictly shrinks
/// the column, so the number of steps is linear in the bit size.
pub fn sanov_rewrite(m: &IntMatrix2) -> Result<SanovCertificate> {
    if !m.det().is_one() || !m.mod2().is_identity() {
        return Err(Error::NotCongruent);
    }
    let mut cur = m.clone();
    let mut syllables = Vec::new();
    loop {
        let [[p, q], [r, _]] = &cur.entries;
        if r.is_zero() {
            // det = 1 forces p = s = +-1.
            let sign: i8 = if p.is_positive() { 1 } else { -1 };
            let q = if sign < 0 { -q } else { q.clone() };
            let (n, odd) = q.div_rem(&BigInt::from(2));
            if !odd.is_zero() {
                return Err(Error::NotInSanov);
            }
            if !n.is_zero() {
                syllables.push((SanovGen::A1, n));
            }
            return Ok(SanovCertificate { syllables, sign });
        }
        let (g, n) = if p.abs() > r.abs() {
            (SanovGen::A1, nearest_even_quotient(p, r))
        } else {
            (SanovGen::A2, nearest_even_quotient(r, p))
        };
        if n.is_zero() {
            return Err(Error::NotInSanov);
        }
        let step = match g {
            SanovGen::A1 => IntMatrix2::a1_pow(&-&n),
            SanovGen::A2 => IntMatrix2::a2_pow(&-&n),
        };
        cur = step.mul(&cur);
        syllables.push((g, n));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: i64, q: i64, r: i64, s: i64) -> IntMatrix2 {
        IntMatrix2::new(p, q, r, s)
    }

    fn sw(text: &str) -> Word {
        Alphabet::sanov().parse_word(text).unwrap()
    }

    #[test]
    fn integer_inverse() {
        let m = IntMatrix2::new(2, 1, 1, 1);
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        let r = IntMatrix2::new(0, 1, 1, 0);
        assert!(r.mul(&r.inverse().unwrap()).is_identity());
        assert_eq!(IntMatrix2::new(2, 0, 0, 1).inverse(), None);
    }

    #[test]
    fn mat_mul_examples() {
        assert_eq!(mat_mul(&IntMatrix2::a1(), &IntMatrix2::a2()), m(5, 2, 2, 1));
        assert_eq!(
            mat_mul(&IntMatrix2::identity(), &m(3, 2, 4, 5)),
            m(3, 2, 4, 5)
        );
        assert_eq!(mat_mul(&IntMatrix2::a1(), &IntMatrix2::a1()), m(1, 4, 0, 1));
    }

    #[test]
    fn mod2_examples() {
        assert!(mod2_reduce(&IntMatrix2::a1()).is_identity());
        assert_eq!(mod2_reduce(&m(1, 1, 0, 1)), Mod2Matrix([[1, 1], [0, 1]]));
        assert!(mod2_reduce(&m(3, 2, 4, 5)).is_identity());
        assert!(mod2_reduce(&m(-3, -2, 4, -5)).is_identity());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_sanov(&sw("A1 A2")), m(5, 2, 2, 1));
        assert_eq!(eval_sanov(&sw("1")), IntMatrix2::identity());
        assert_eq!(eval_sanov(&sw("A1^-1")), m(1, -2, 0, 1));
    }

    /// Every reduced word of length <= `n` over {A1, A2}.
    fn all_words(n: usize) -> Vec<Word> {
        let mut out = vec![Word::identity(2)];
        let mut frontier = vec![Vec::<i32>::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &frontier {
                for l in [1, -1, 2, -2] {
                    if w.last() == Some(&-l) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    out.push(Word::from_signed(2, &v).unwrap());
                    next.push(v);
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn rewrite_matches_brute_force_enumeration() {
        // Oracle: the only (word, sign) pairs of length <= 2 evaluating to
        // [[5,2],[2,1]].
        let target = m(5, 2, 2, 1);
        let hits: Vec<(Word, i8)> = all_words(2)
            .into_iter()
            .flat_map(|w| [(w.clone(), 1i8), (w, -1i8)])
            .filter(|(w, s)| {
                let e = eval_sanov(w);
                (if *s < 0 { e.neg() } else { e }) == target
            })
            .collect();
        assert_eq!(hits, vec![(sw("A1 A2"), 1)]);
        let cert = sanov_rewrite(&target).unwrap();
        assert_eq!((cert.word().unwrap(), cert.sign), hits[0]);
        assert_eq!(cert.to_string(), "sign=+1 word=A1 A2");
    }

    #[test]
    fn rewrite_small_words_exhaustively() {
        for w in all_words(6) {
            let cert = sanov_rewrite(&eval_sanov(&w)).unwrap();
            assert_eq!(cert.word().unwrap(), w);
            assert_eq!(cert.sign, 1);
            let neg = sanov_rewrite(&eval_sanov(&w).neg()).unwrap();
            assert_eq!((neg.word().unwrap(), neg.sign), (w, -1));
        }
    }

    #[test]
    fn rewrite_identity_and_minus_identity() {
        let c = sanov_rewrite(&IntMatrix2::identity()).unwrap();
        assert!(c.word().unwrap().is_identity());
        assert_eq!(c.sign, 1);
        let c = sanov_rewrite(&IntMatrix2::identity().neg()).unwrap();
        assert!(c.word().unwrap().is_identity());
        assert_eq!(c.sign, -1);
        assert_eq!(c.to_string(), "sign=-1 word=1");
    }

    #[test]
    fn rewrite_rejects_non_congruent() {
        assert_eq!(sanov_rewrite(&m(1, 1, 0, 1)), Err(Error::NotCongruent));
        assert_eq!(sanov_rewrite(&m(3, 2, 4, 5)), Err(Error::NotCongruent));
        assert_eq!(sanov_rewrite(&m(0, 1, 1, 0)), Err(Error::NotCongruent));
    }

    #[test]
    fn rewrite_huge_exponents_stays_compact() {
        let n: BigInt = BigInt::from(10).pow(40);
        let mat = IntMatrix2::a1_pow(&n).mul(&IntMatrix2::a2_pow(&-&n));
        let cert = sanov_rewrite(&mat).unwrap();
        assert_eq!(
            cert.syllables,
            vec![(SanovGen::A1, n.clone()), (SanovGen::A2, -n)]
        );
        assert_eq!(cert.evaluate(), mat);
    }

    #[test]
    fn matrix_text_roundtrip() {
        let mat: IntMatrix2 = " [[5, 2], [2,1]] ".parse().unwrap();
        assert_eq!(mat, m(5, 2, 2, 1));
        assert_eq!(mat.to_string(), "[[5,2],[2,1]]");
        assert!("[[1,2],[3]]".parse::<IntMatrix2>().is_err());
        assert!("[1,2,3,4]".parse::<IntMatrix2>().is_err());
    }

    #[test]
    fn certificate_text_roundtrip() {
        let c = sanov_rewrite(&eval_sanov(&sw("A1^3 A2^-2 A1"))).unwrap();
        let text = c.to_string();
        assert_eq!(text, "sign=+1 word=A1^3 A2^-2 A1");
        assert_eq!(text.parse::<SanovCertificate>().unwrap(), c);
    }
}
