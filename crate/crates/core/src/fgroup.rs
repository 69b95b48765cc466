//! The subgroup F of Aut(F2) generated by the inner automorphisms and
//! `x1: a -> a b^2`, `x2: b -> b a^2`.
//!
//! F splits as Inn(F2) x| <x1, x2>, so every element is uniquely
//! `tau_w . eval_x(X)`; [`FElement`] stores the pair `(w, X)`.

use crate::endos::{named, Automorphism, Endomorphism};
use crate::error::{Error, NotInFReason, Result};
use crate::intmat::{sanov_rewrite, SanovGen};
use crate::words::{Letter, Word};

use num_traits::{Signed, ToPrimitive};

/// Normal form `tau_w . eval_x(x)` with `w` over `{a, b}` and `x` over `{x1, x2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FElement {
    pub w: Word,
    pub x: Word,
}

fn x_generator(l: Letter) -> Automorphism {
    let a = if l.index() == 1 {
        named::x1()
    } else {
        named::x2()
    };
    if l.is_inverse() {
        a.invert()
    } else {
        a
    }
}

/// `eval_x(x)(w)`, applying the letters of `x` from the right.
pub fn apply_x(x: &Word, w: &Word) -> Word {
    let (x1, x2) = (named::x1(), named::x2());
    x.letters().iter().rev().fold(w.clone(), |acc, l| {
        let a = if l.index() == 1 { &x1 } else { &x2 };
        let e = if l.is_inverse() {
            a.backward()
        } else {
            a.forward()
        };
        e.apply_unchecked(&acc)
    })
}

/// The automorphism named by a word over `{x1, x2}`.
pub fn eval_x(x: &Word) -> Automorphism {
    let gens = [
        Word::generator(2, 1).unwrap(),
        Word::generator(2, 2).unwrap(),
    ];
    let x_inv = x.inv();
    let forward = Endomorphism::new(gens.iter().map(|g| apply_x(x, g)).collect()).unwrap();
    let backward = Endomorphism::new(gens.iter().map(|g| apply_x(&x_inv, g)).collect()).unwrap();
    Automorphism::from_parts_unchecked(forward, backward)
}

/// Left-to-right composite of the generators, built one composition at a
/// time. Slower than [`eval_x`]; used as an independent route in tests.
pub fn eval_x_by_composition(x: &Word) -> Automorphism {
    x.letters()
        .iter()
        .fold(Automorphism::identity(2), |acc, &l| {
            acc.compose(&x_generator(l)).unwrap()
        })
}

/// Recover `w` with `phi = tau_w`, if it exists. Unique since F2 has trivial
/// center.
pub fn is_inner(phi: &Endomorphism) -> Result<Word> {
    if phi.rank() != 2 {
        return Err(Error::RankMismatch {
            left: 2,
            right: phi.rank(),
        });
    }
    if phi.abelianize() != [[1, 0], [0, 1]] {
        return Err(Error::NotInner);
    }
    // phi(a) = u a u^-1 where w = u a^k and u does not end in a^{+-1}.
    let (u, c) = phi.image(1).cyclic_decompose();
    if c.letters() != [Letter::pos(1)] {
        return Err(Error::NotInner);
    }
    // u^-1 phi(b) u = a^k b a^-k
    let y = u.inv().mul_unchecked(phi.image(2)).mul_unchecked(&u);
    let lead = y.letters().first().copied();
    let k = match lead {
        Some(l) if l.index() == 1 => {
            let run = y.letters().iter().take_while(|&&m| m == l).count() as i64;
            run * i64::from(l.sign())
        }
        _ => 0,
    };
    let w = u.mul_unchecked(&Word::generator(2, 1).unwrap().pow(k));
    if Automorphism::inner(&w).forward() == phi {
        Ok(w)
    } else {
        Err(Error::NotInner)
    }
}

/// Decompose `phi` as `tau_w . eval_x(X)`, deciding membership in F.
///
/// The x-part is read off the abelianization: it lies in `<A1, A2>` and the
/// column convention swaps names, so `A2` letters become `x1` and `A1`
/// letters become `x2`. What remains after removing the x-part must be inner.
pub fn decompose_f(phi: &Endomorphism) -> Result<FElement> {
    if phi.rank() != 2 {
        return Err(Error::RankMismatch {
            left: 2,
            right: phi.rank(),
        });
    }
    let m = phi.abelianize2()?;
    let cert = sanov_rewrite(&m).map_err(|_| Error::NotInF(NotInFReason::NotCongruent))?;
    if cert.sign < 0 {
        return Err(Error::NotInF(NotInFReason::MinusSign));
    }
    let mut raw = Vec::new();
    for (g, n) in &cert.syllables {
        let idx = match g {
            SanovGen::A2 => 1,
            SanovGen::A1 => 2,
        };
        // Exponents are bounded by the image lengths of phi.
        let count = n
            .abs()
            .to_usize()
            .expect("exponent bounded by image length");
        let l = if n.is_negative() {
            Letter::neg(idx)
        } else {
            Letter::pos(idx)
        };
        raw.extend(std::iter::repeat_n(l, count));
    }
    let x = Word::reduce(2, raw)?;
    // phi . eval_x(X)^-1, peeling one generator at a time from the right so
    // every step composes with a map whose images have at most 3 letters.
    let (x1, x2) = (named::x1(), named::x2());
    let residual = x.letters().iter().rev().fold(phi.clone(), |acc, l| {
        let a = if l.index() == 1 { &x1 } else { &x2 };
        let undo = if l.is_inverse() {
            a.forward()
        } else {
            a.backward()
        };
        acc.compose_unchecked(undo)
    });
    let w = is_inner(&residual).map_err(|_| Error::NotInF(NotInFReason::NotInner))?;
    Ok(FElement { w, x })
}

impl FElement {
    pub fn new(w: Word, x: Word) -> Result<Self> {
        for word in [&w, &x] {
            if word.rank() != 2 {
                return Err(Error::RankMismatch {
                    left: 2,
                    right: word.rank(),
                });
            }
        }
        Ok(FElement { w, x })
    }

    pub fn identity() -> Self {
        FElement {
            w: Word::identity(2),
            x: Word::identity(2),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.x.is_identity()
    }

    /// `(w1, X1)(w2, X2) = (w1 X1(w2), X1 X2)`.
    pub fn mul(&self, other: &FElement) -> FElement {
        FElement {
            w: self.w.mul_unchecked(&apply_x(&self.x, &other.w)),
            x: self.x.mul_unchecked(&other.x),
        }
    }

    #[must_use]
    pub fn inv(&self) -> FElement {
        let x_inv = self.x.inv();
        FElement {
            w: apply_x(&x_inv, &self.w.inv()),
            x: x_inv,
        }
    }

    /// `tau_w . eval_x(X)`: images `w X(g) w^-1`, inverse images
    /// `X^-1(w^-1 g w)`.
    pub fn to_aut(&self) -> Automorphism {
        let x_inv = self.x.inv();
        let w_back = apply_x(&x_inv, &self.w);
        let conj = |c: &Word, w: &Word| c.mul_unchecked(w).mul_unchecked(&c.inv());
        let gens = [
            Word::generator(2, 1).unwrap(),
            Word::generator(2, 2).unwrap(),
        ];
        let forward = gens
            .iter()
            .map(|g| conj(&self.w, &apply_x(&self.x, g)))
            .collect();
        let backward = gens
            .iter()
            .map(|g| conj(&w_back.inv(), &apply_x(&x_inv, g)))
            .collect();
        Automorphism::from_parts_unchecked(
            Endomorphism::new(forward).expect("rank 2"),
            Endomorphism::new(backward).expect("rank 2"),
        )
    }

    /// Total letters in the explicit images of `eval_x(X)`, bounded below by
    /// the 1-norm of its abelianization.
    pub fn x_image_lower_bound(x: &Word) -> num_bigint::BigInt {
        crate::intmat::eval_sanov(&x_to_sanov(x)).l1_norm()
    }
}

/// Abelianization of `eval_x(X)` as a word over `{A1, A2}`.
pub fn x_to_sanov(x: &Word) -> Word {
    let letters = x
        .letters()
        .iter()
        .map(|l| {
            let idx = 3 - l.index();
            if l.is_inverse() {
                Letter::neg(idx)
            } else {
                Letter::pos(idx)
            }
        })
        .collect();
    Word::from_reduced_unchecked(2, letters)
}

pub fn f_mul(e1: &FElement, e2: &FElement) -> FElement {
    e1.mul(e2)
}

pub fn f_inv(e: &FElement) -> FElement {
    e.inv()
}

pub fn f_to_aut(e: &FElement) -> Automorphism {
    e.to_aut()
}
