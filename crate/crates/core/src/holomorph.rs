//! The holomorph Hol(F_n) = F_n x| Aut(F_n), semidirect products over free
//! base groups, and the embedding of Hol(F_n) into Aut(F_{n+m}).
//!
//! Elements are pairs `(g, phi)` multiplied by
//! `(g1, phi1)(g2, phi2) = (g1 phi1(g2), phi1 phi2)`, so that conjugating a
//! fiber element by `(1, phi)` applies `phi` to it.

use crate::endos::{Automorphism, Endomorphism};
use crate::error::{Error, Result};
use crate::words::{Letter, Reducer, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HolElement {
    pub g: Word,
    pub phi: Automorphism,
}

impl HolElement {
    pub fn new(g: Word, phi: Automorphism) -> Result<Self> {
        if g.rank() != phi.rank() {
            return Err(Error::RankMismatch {
                left: g.rank(),
                right: phi.rank(),
            });
        }
        Ok(HolElement { g, phi })
    }

    pub fn identity(rank: u32) -> Self {
        HolElement {
            g: Word::identity(rank),
            phi: Automorphism::identity(rank),
        }
    }

    /// Fiber inclusion `g -> (g, id)`.
    pub fn from_word(g: Word) -> Self {
        let rank = g.rank();
        HolElement {
            g,
            phi: Automorphism::identity(rank),
        }
    }

    /// Section `phi -> (1, phi)`.
    pub fn from_automorphism(phi: Automorphism) -> Self {
        HolElement {
            g: Word::identity(phi.rank()),
            phi,
        }
    }

    pub fn rank(&self) -> u32 {
        self.g.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && self.phi.is_identity()
    }

    pub fn mul(&self, other: &HolElement) -> Result<HolElement> {
        let moved = self.phi.apply(&other.g)?;
        Ok(HolElement {
            g: self.g.mul_unchecked(&moved),
            phi: self.phi.compose(&other.phi)?,
        })
    }

    #[must_use]
    pub fn inv(&self) -> HolElement {
        let phi_inv = self.phi.invert();
        HolElement {
            g: phi_inv.forward().apply_unchecked(&self.g.inv()),
            phi: phi_inv,
        }
    }

    /// Equality in Hol(F_n): word parts and automorphism parts agree.
    pub fn equals(&self, other: &HolElement) -> Result<bool> {
        self.g.check_rank(&other.g)?;
        Ok(self == other)
    }
}

pub fn hol_mul(p: &HolElement, q: &HolElement) -> Result<HolElement> {
    p.mul(q)
}

pub fn hol_inv(p: &HolElement) -> HolElement {
    p.inv()
}

pub fn hol_eq(p: &HolElement, q: &HolElement) -> Result<bool> {
    p.equals(q)
}

/// An action of the free group `F_k` on `F_n`, given on the basis of `F_k`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    fiber_rank: u32,
    actions: Vec<Automorphism>,
}

/// An element `(g, h)` of `F_n x|_rho F_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    pub g: Word,
    pub h: Word,
}

impl ActionTable {
    pub fn new(fiber_rank: u32, actions: Vec<Automorphism>) -> Result<Self> {
        if actions.is_empty() {
            return Err(Error::Invalid(
                "the base group needs at least one generator".into(),
            ));
        }
        for a in &actions {
            if a.rank() != fiber_rank {
                return Err(Error::RankMismatch {
                    left: fiber_rank,
                    right: a.rank(),
                });
            }
        }
        Ok(ActionTable {
            fiber_rank,
            actions,
        })
    }

    pub fn fiber_rank(&self) -> u32 {
        self.fiber_rank
    }

    pub fn base_rank(&self) -> u32 {
        self.actions.len() as u32
    }

    pub fn actions(&self) -> &[Automorphism] {
        &self.actions
    }

    /// The automorphism assigned to `h` by extending the table over `F_k`.
    pub fn rho(&self, h: &Word) -> Result<Automorphism> {
        if h.rank() != self.base_rank() {
            return Err(Error::RankMismatch {
                left: self.base_rank(),
                right: h.rank(),
            });
        }
        h.letters()
            .iter()
            .try_fold(Automorphism::identity(self.fiber_rank), |acc, l| {
                let a = &self.actions[l.index() as usize - 1];
                if l.is_inverse() {
                    acc.compose(&a.invert())
                } else {
                    acc.compose(a)
                }
            })
    }

    /// `rho(h)(g)`, applied letter by letter from the right.
    pub fn act(&self, h: &Word, g: &Word) -> Result<Word> {
        h.letters().iter().rev().try_fold(g.clone(), |acc, l| {
            let a = &self.actions[l.index() as usize - 1];
            if l.is_inverse() {
                a.apply_inverse(&acc)
            } else {
                a.apply(&acc)
            }
        })
    }

    fn check(&self, e: &SemidirectElement) -> Result<()> {
        if e.g.rank() != self.fiber_rank {
            return Err(Error::RankMismatch {
                left: self.fiber_rank,
                right: e.g.rank(),
            });
        }
        if e.h.rank() != self.base_rank() {
            return Err(Error::RankMismatch {
                left: self.base_rank(),
                right: e.h.rank(),
            });
        }
        Ok(())
    }

    pub fn identity(&self) -> SemidirectElement {
        SemidirectElement {
            g: Word::identity(self.fiber_rank),
            h: Word::identity(self.base_rank()),
        }
    }

    /// `(g1, h1)(g2, h2) = (g1 rho(h1)(g2), h1 h2)`.
    pub fn mul(&self, x: &SemidirectElement, y: &SemidirectElement) -> Result<SemidirectElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(SemidirectElement {
            g: x.g.mul_unchecked(&self.act(&x.h, &y.g)?),
            h: x.h.mul_unchecked(&y.h),
        })
    }

    pub fn inv(&self, x: &SemidirectElement) -> Result<SemidirectElement> {
        self.check(x)?;
        let h_inv = x.h.inv();
        Ok(SemidirectElement {
            g: self.act(&h_inv, &x.g.inv())?,
            h: h_inv,
        })
    }
}

pub fn semidirect_build(fiber_rank: u32, action: Vec<Automorphism>) -> Result<ActionTable> {
    ActionTable::new(fiber_rank, action)
}

/// `(g, h) -> ((g, rho(h)), h)` into `Hol(F2) x F_k`.
pub fn corollary_injection(
    table: &ActionTable,
    e: &SemidirectElement,
) -> Result<(HolElement, Word)> {
    if table.fiber_rank() != 2 {
        return Err(Error::RankMismatch {
            left: 2,
            right: table.fiber_rank(),
        });
    }
    table.check(e)?;
    let phi = table.rho(&e.h)?;
    Ok((HolElement::new(e.g.clone(), phi)?, e.h.clone()))
}

/// `E: Hol(F_n) -> Aut(F_n * F_m)`.
///
/// `E(g, phi) = E_G(g) . E_A(phi)` where `E_A(phi)` acts by `phi` on the
/// first `n` generators and fixes the last `m`, and `E_G(g)` fixes the first
/// `n` and sends each of the last `m` to `g^-1 z g`.
///
/// Since `compose` applies its right argument first, `z -> g z g^-1` would
/// make `g -> E_G(g)` order-reversing; conjugating by `g^-1` makes `E`
/// multiplicative.
pub fn embed_e(m: u32, p: &HolElement) -> Result<Automorphism> {
    if m == 0 {
        return Err(Error::Invalid(
            "embedding needs m >= 1 extra generators".into(),
        ));
    }
    let forward = embed_endo(m, &p.g, p.phi.forward());
    let q = p.inv();
    let backward = embed_endo(m, &q.g, q.phi.forward());
    Ok(Automorphism::from_parts_unchecked(forward, backward))
}

fn embed_endo(m: u32, g: &Word, phi: &Endomorphism) -> Endomorphism {
    let n = g.rank();
    let rank = n + m;
    let mut images: Vec<Word> = phi.images().iter().map(|w| w.with_rank(rank)).collect();
    for j in 1..=m {
        let mut r = Reducer::with_capacity(2 * g.len() + 1);
        r.extend_inverse(g.letters());
        r.push(Letter::pos(n + j));
        r.extend(g.letters());
        images.push(r.finish(rank));
    }
    Endomorphism::new(images).expect("ranks agree by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::endos::named::*;

    fn ab(text: &str) -> Word {
        Alphabet::ab().parse_word(text).unwrap()
    }

    fn hol(g: &str, phi: Automorphism) -> HolElement {
        HolElement::new(ab(g), phi).unwrap()
    }

    fn id() -> Automorphism {
        Automorphism::identity(2)
    }

    #[test]
    fn hol_mul_examples() {
        let p = hol("1", x1()).mul(&hol("a", id())).unwrap();
        assert_eq!(p, hol("a b^2", x1()));
        assert_eq!(
            hol("a", id()).mul(&hol("b", id())).unwrap(),
            hol("a b", id())
        );
        let t_a = hol("a^-1", tau_a());
        let a = hol("a", id());
        let left = t_a.mul(&a).unwrap();
        let right = a.mul(&t_a).unwrap();
        assert_eq!(left, hol("1", tau_a()));
        assert_eq!(right, hol("1", tau_a()));
    }

    #[test]
    fn hol_inv_examples() {
        assert_eq!(hol("a", id()).inv(), hol("a^-1", id()));
        assert_eq!(hol("1", x1()).inv(), hol("1", x1().invert()));
        let t_a = hol("a^-1", tau_a());
        let inv = t_a.inv();
        assert_eq!(inv, hol("a", Automorphism::inner(&ab("a^-1"))));
        assert!(t_a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn hol_eq_examples() {
        let t_a = hol("a^-1", tau_a());
        let a = hol("a", id());
        assert!(hol_eq(&t_a.mul(&a).unwrap(), &a.mul(&t_a).unwrap()).unwrap());
        assert!(!hol_eq(&hol("a", id()), &hol("1", tau_a())).unwrap());
        let p = hol("a b^-1", x2());
        assert!(hol_eq(&p, &p.mul(&HolElement::identity(2)).unwrap()).unwrap());
        assert!(hol_eq(&p, &HolElement::identity(3)).is_err());
    }

    #[test]
    fn conjugation_by_automorphism_applies_it() {
        let x = HolElement::from_automorphism(x1());
        let a = HolElement::from_word(ab("a"));
        let c = x.mul(&a).unwrap().mul(&x.inv()).unwrap();
        assert_eq!(c, HolElement::from_word(ab("a b^2")));
    }

    #[test]
    fn trivial_action_is_direct_product() {
        let table = semidirect_build(2, vec![id(), id()]).unwrap();
        let h = Alphabet::base(2);
        let x = SemidirectElement {
            g: ab("a b"),
            h: h.parse_word("h1").unwrap(),
        };
        let y = SemidirectElement {
            g: ab("b^-1 a"),
            h: h.parse_word("h2 h1").unwrap(),
        };
        let z = table.mul(&x, &y).unwrap();
        assert_eq!(z.g, ab("a a"));
        assert_eq!(z.h, h.parse_word("h1 h2 h1").unwrap());
    }

    #[test]
    fn x_action_reproduces_f_structure() {
        // (1, x1)(a, 1) = (a b^2, x1)
        let table = semidirect_build(2, vec![x1(), x2()]).unwrap();
        let h = Alphabet::base(2);
        let x = SemidirectElement {
            g: Word::identity(2),
            h: h.parse_word("h1").unwrap(),
        };
        let y = SemidirectElement {
            g: ab("a"),
            h: Word::identity(2),
        };
        let z = table.mul(&x, &y).unwrap();
        assert_eq!(z.g, ab("a b^2"));
        assert_eq!(
            table.rho(&h.parse_word("h1 h2^-1").unwrap()).unwrap(),
            x1().compose(&x2().invert()).unwrap()
        );
        let zi = table.inv(&z).unwrap();
        assert_eq!(table.mul(&z, &zi).unwrap(), table.identity());
    }

    #[test]
    fn corollary_injection_examples() {
        let table = semidirect_build(2, vec![tau_b()]).unwrap();
        let base = Alphabet::base(1);
        let h = base.parse_word("h1^3").unwrap();
        let e = SemidirectElement {
            g: Word::identity(2),
            h: h.clone(),
        };
        let (p, hh) = corollary_injection(&table, &e).unwrap();
        assert_eq!(
            p,
            HolElement::from_automorphism(Automorphism::inner(&ab("b^3")))
        );
        assert_eq!(hh, h);
        let e = SemidirectElement {
            g: ab("a b"),
            h: Word::identity(1),
        };
        let (p, hh) = corollary_injection(&table, &e).unwrap();
        assert_eq!(p, hol("a b", id()));
        assert!(hh.is_identity());
        let wide = semidirect_build(3, vec![Automorphism::identity(3)]).unwrap();
        assert!(corollary_injection(&wide, &wide.identity()).is_err());
    }

    #[test]
    fn embed_e_examples() {
        let f3 = Alphabet::embedding(1);
        let e = embed_e(1, &hol("a b", id())).unwrap();
        assert_eq!(
            e.forward().image(3),
            &f3.parse_word("b^-1 a^-1 z1 a b").unwrap()
        );
        assert_eq!(e.forward().image(1), &f3.parse_word("a").unwrap());
        assert_eq!(e.forward().image(2), &f3.parse_word("b").unwrap());
        let e = embed_e(1, &hol("1", x1())).unwrap();
        assert_eq!(e.forward().image(1), &f3.parse_word("a b^2").unwrap());
        assert_eq!(e.forward().image(2), &f3.parse_word("b").unwrap());
        assert_eq!(e.forward().image(3), &f3.parse_word("z1").unwrap());
        assert!(embed_e(1, &HolElement::identity(2)).unwrap().is_identity());
        assert!(embed_e(0, &HolElement::identity(2)).is_err());
    }

    #[test]
    fn embed_e_multiplies_on_fiber() {
        let (p, q) = (hol("a", id()), hol("b", id()));
        let lhs = embed_e(1, &p.mul(&q).unwrap()).unwrap();
        let rhs = embed_e(1, &p)
            .unwrap()
            .compose(&embed_e(1, &q).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn embed_e_inverse_is_genuine() {
        let p = hol("a b^-1 a", x1().compose(&swap()).unwrap());
        let e = embed_e(2, &p).unwrap();
        assert!(Automorphism::new(e.forward().clone(), e.backward().clone()).is_ok());
    }
}
