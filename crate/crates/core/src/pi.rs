//! The subgroup pi = p^-1(F) of Hol(F2) and its embedding into F x F.
//!
//! With `t_a = a^-1 tau_a` and `t_b = b^-1 tau_b`, pi splits as
//! `(<a, b> x <t_a, t_b>) x| <x1, x2>`; the t-letters commute with `a` and
//! `b` but not with each other. [`PiElement`] is the resulting normal form.

use crate::endos::{named, Automorphism};
use crate::error::{Error, Result};
use crate::fgroup::{apply_x, decompose_f, FElement};
use crate::holomorph::HolElement;
use crate::words::Word;

/// Normal form `u . t(v) . X` with `u` over `{a, b}`, `v` over `{ta, tb}`
/// and `X` over `{x1, x2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiElement {
    pub u: Word,
    pub v: Word,
    pub x: Word,
}

impl PiElement {
    pub fn new(u: Word, v: Word, x: Word) -> Result<Self> {
        for word in [&u, &v, &x] {
            if word.rank() != 2 {
                return Err(Error::RankMismatch {
                    left: 2,
                    right: word.rank(),
                });
            }
        }
        Ok(PiElement { u, v, x })
    }

    pub fn identity() -> Self {
        PiElement {
            u: Word::identity(2),
            v: Word::identity(2),
            x: Word::identity(2),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_identity() && self.v.is_identity() && self.x.is_identity()
    }

    /// Direct rewriting: move `X1` right past `u2 t(v2)` using the action of
    /// `<x1, x2>` on both free factors, then let `t(v1)` commute past
    /// `X1(u2)`.
    pub fn mul(&self, other: &PiElement) -> PiElement {
        PiElement {
            u: self.u.mul_unchecked(&apply_x(&self.x, &other.u)),
            v: self.v.mul_unchecked(&apply_x(&self.x, &other.v)),
            x: self.x.mul_unchecked(&other.x),
        }
    }

    /// Multiplication computed in Hol(F2) and brought back to normal form.
    pub fn mul_via_hol(&self, other: &PiElement) -> Result<PiElement> {
        pi_normal_form(&self.to_hol().mul(&other.to_hol())?)
    }

    #[must_use]
    pub fn inv(&self) -> PiElement {
        let x_inv = self.x.inv();
        PiElement {
            u: apply_x(&x_inv, &self.u.inv()),
            v: apply_x(&x_inv, &self.v.inv()),
            x: x_inv,
        }
    }

    pub fn to_hol(&self) -> HolElement {
        pi_from_normal_form(self)
    }

    /// `f1 = h`: kill the t-letters.
    pub fn f1(&self) -> FElement {
        FElement {
            w: self.u.clone(),
            x: self.x.clone(),
        }
    }

    /// `f2 = p`: kill `<a, b>` and read `ta, tb` as `a, b`.
    pub fn f2(&self) -> FElement {
        FElement {
            w: self.v.clone(),
            x: self.x.clone(),
        }
    }

    pub fn embed(&self) -> (FElement, FElement) {
        (self.f1(), self.f2())
    }
}

/// True iff the automorphism part lies in F.
pub fn pi_member(p: &HolElement) -> bool {
    p.rank() == 2 && decompose_f(p.phi.forward()).is_ok()
}

/// `(g, tau_w . eval_x(X)) = g . w . t_w . X`, since `tau_w = w t_w`.
pub fn pi_normal_form(p: &HolElement) -> Result<PiElement> {
    if p.rank() != 2 {
        return Err(Error::NotInPi);
    }
    let f = decompose_f(p.phi.forward()).map_err(|_| Error::NotInPi)?;
    Ok(PiElement {
        u: p.g.mul_unchecked(&f.w),
        // t-transcription: same letters, read over {ta, tb}
        v: f.w,
        x: f.x,
    })
}

/// Fold of the generator interpretations `a = (a, id)`, `ta = (a^-1, tau_a)`,
/// `x1 = (1, x1)` and so on, multiplied in Hol(F2).
pub fn pi_from_normal_form(e: &PiElement) -> HolElement {
    let a = Word::generator(2, 1).unwrap();
    let b = Word::generator(2, 2).unwrap();
    let fiber = [
        HolElement::from_word(a.clone()),
        HolElement::from_word(b.clone()),
    ];
    let t = [
        HolElement::new(a.inv(), named::tau_a()).unwrap(),
        HolElement::new(b.inv(), named::tau_b()).unwrap(),
    ];
    let xs = [
        HolElement::from_automorphism(named::x1()),
        HolElement::from_automorphism(named::x2()),
    ];
    let interpret = |gens: &[HolElement; 2], w: &Word| -> HolElement {
        w.letters().iter().fold(HolElement::identity(2), |acc, l| {
            let g = &gens[l.index() as usize - 1];
            let g = if l.is_inverse() { g.inv() } else { g.clone() };
            acc.mul(&g).expect("rank 2")
        })
    };
    interpret(&fiber, &e.u)
        .mul(&interpret(&t, &e.v))
        .and_then(|h| h.mul(&interpret(&xs, &e.x)))
        .expect("rank 2")
}

pub fn pi_mul(e1: &PiElement, e2: &PiElement) -> PiElement {
    e1.mul(e2)
}

pub fn map_f1(e: &PiElement) -> FElement {
    e.f1()
}

pub fn map_f2(e: &PiElement) -> FElement {
    e.f2()
}

pub fn embed_pi(e: &PiElement) -> (FElement, FElement) {
    e.embed()
}

/// Hol element `t_w = (w^-1, tau_w)`.
pub fn t_element(w: &Word) -> HolElement {
    HolElement::new(w.inv(), Automorphism::inner(w)).expect("rank agrees")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::endos::named::*;

    fn ab(text: &str) -> Word {
        Alphabet::ab().parse_word(text).unwrap()
    }

    fn pe(u: &str, v: &str, x: &str) -> PiElement {
        PiElement::new(
            ab(u),
            Alphabet::t().parse_word(v).unwrap(),
            Alphabet::x().parse_word(x).unwrap(),
        )
        .unwrap()
    }

    fn fe(w: &str, x: &str) -> FElement {
        FElement::new(ab(w), Alphabet::x().parse_word(x).unwrap()).unwrap()
    }

    fn hol(g: &str, phi: Automorphism) -> HolElement {
        HolElement::new(ab(g), phi).unwrap()
    }

    #[test]
    fn pi_member_examples() {
        assert!(pi_member(&hol("a b", tau_b())));
        assert!(!pi_member(&hol("1", swap())));
        assert!(pi_member(&hol(
            "b^-2 a",
            crate::fgroup::eval_x(&Alphabet::x().parse_word("x1 x2^-1").unwrap())
        )));
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            pi_normal_form(&hol("a", tau_b())).unwrap(),
            pe("a b", "tb", "1")
        );
        assert_eq!(
            pi_normal_form(&HolElement::identity(2)).unwrap(),
            PiElement::identity()
        );
        assert_eq!(pi_normal_form(&hol("1", x1())).unwrap(), pe("1", "1", "x1"));
        assert_eq!(pi_normal_form(&hol("1", swap())), Err(Error::NotInPi));
    }

    #[test]
    fn from_normal_form_examples() {
        assert_eq!(
            pi_from_normal_form(&pe("a b", "tb", "1")),
            hol("a", tau_b())
        );
        assert!(pi_from_normal_form(&PiElement::identity()).is_identity());
        assert_eq!(
            pi_from_normal_form(&pe("1", "ta", "1")),
            hol("a^-1", tau_a())
        );
    }

    #[test]
    fn pi_mul_examples() {
        let a = pe("a", "1", "1");
        let ta = pe("1", "ta", "1");
        assert_eq!(pi_mul(&a, &ta), pe("a", "ta", "1"));
        assert_eq!(pi_mul(&ta, &a), pe("a", "ta", "1"));
        let x1e = pe("1", "1", "x1");
        let conj = pi_mul(&pi_mul(&x1e, &ta), &x1e.inv());
        assert_eq!(conj, pe("1", "ta tb^2", "1"));
        let e = pe("a b^-1", "tb ta", "x2 x1^-1");
        assert!(pi_mul(&e, &e.inv()).is_identity());
    }

    #[test]
    fn pi_mul_routes_agree() {
        let xs = [
            pe("a b^-1", "tb ta", "x2 x1^-1"),
            pe("b", "ta^-2", "x1 x2"),
            pe("a^3", "1", "x2^-1"),
        ];
        for p in &xs {
            for q in &xs {
                assert_eq!(p.mul(q), p.mul_via_hol(q).unwrap());
            }
        }
    }

    #[test]
    fn f_maps_examples() {
        let e = pe("a b", "tb", "1");
        assert_eq!(map_f1(&e), fe("a b", "1"));
        assert_eq!(map_f2(&e), fe("b", "1"));
        assert!(map_f1(&PiElement::identity()).is_identity());
        assert!(map_f2(&PiElement::identity()).is_identity());
        assert_eq!(map_f1(&pe("1", "ta tb", "x1")), fe("1", "x1"));
        assert!(map_f2(&pe("a b a^-1", "1", "1")).is_identity());
        // f2 agrees with p on the Hol side
        let p = hol("a", tau_b());
        assert_eq!(
            map_f2(&pi_normal_form(&p).unwrap()),
            decompose_f(p.phi.forward()).unwrap()
        );
    }

    #[test]
    fn embed_examples() {
        let (l, r) = embed_pi(&PiElement::identity());
        assert!(l.is_identity() && r.is_identity());
        let (l, r) = embed_pi(&pe("a", "1", "1"));
        assert_eq!(l, fe("a", "1"));
        assert!(r.is_identity());
        let (l, r) = embed_pi(&pe("1", "ta", "1"));
        assert!(l.is_identity());
        assert_eq!(r, fe("a", "1"));
    }

    #[test]
    fn t_transcription_law() {
        for w in ["a", "b a^-2", "a b a^-1 b^-1", "b^3 a b^-1"] {
            let w = ab(w);
            let nf =
                pi_normal_form(&HolElement::from_automorphism(Automorphism::inner(&w))).unwrap();
            assert_eq!(
                nf,
                PiElement {
                    u: w.clone(),
                    v: w.clone(),
                    x: Word::identity(2)
                }
            );
            // tau_w = w t_w
            let via_t = HolElement::from_word(w.clone())
                .mul(&t_element(&w))
                .unwrap();
            assert_eq!(
                via_t,
                HolElement::from_automorphism(Automorphism::inner(&w))
            );
        }
    }
}
