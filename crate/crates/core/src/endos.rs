//! Endomorphisms and automorphisms of F_n given by generator images.
//!
//! Conventions used throughout the crate:
//!
//! * `compose(phi, psi)` applies `psi` first: `(phi . psi)(g) = phi(psi(g))`.
//! * [`Endomorphism::abelianize`] puts the exponent vector of the image of
//!   generator `j` in column `j`, so abelianization is a homomorphism for
//!   this composition order. Under it `x1: a -> a b^2` abelianizes to
//!   `A2 = [[1,0],[2,1]]` and `x2: b -> b a^2` to `A1 = [[1,2],[0,1]]`.

use crate::error::{Error, Result};
use crate::intmat::IntMatrix2;
use crate::words::{Letter, Reducer, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    rank: u32,
    images: Vec<Word>,
}

impl Endomorphism {
    /// The endomorphism sending generator `i` to `images[i - 1]`.
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let rank = images.len() as u32;
        if rank == 0 {
            return Err(Error::Invalid(
                "an endomorphism needs at least one image".into(),
            ));
        }
        for w in &images {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
        }
        Ok(Endomorphism { rank, images })
    }

    pub fn identity(rank: u32) -> Self {
        Endomorphism {
            rank,
            images: (1..=rank)
                .map(|i| Word::from_reduced_unchecked(rank, vec![Letter::pos(i)]))
                .collect(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of generator `index` (1-based).
    pub fn image(&self, index: u32) -> &Word {
        &self.images[index as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [Letter::pos(i as u32 + 1)])
    }

    /// Total number of letters over all images.
    pub fn size(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        let mut r = Reducer::default();
        for &l in w.letters() {
            let img = self.images[l.index() as usize - 1].letters();
            if l.is_inverse() {
                r.extend_inverse(img);
            } else {
                r.extend(img);
            }
        }
        r.finish(self.rank)
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            rank: self.rank,
            images: other
                .images
                .iter()
                .map(|w| self.apply_unchecked(w))
                .collect(),
        }
    }

    /// Integer matrix whose column `j` is the exponent vector of image `j`.
    pub fn abelianize(&self) -> Vec<Vec<i64>> {
        let n = self.rank as usize;
        let cols: Vec<Vec<i64>> = self.images.iter().map(Word::exponent_vector).collect();
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect()
    }

    /// Rank-2 abelianization as an exact [`IntMatrix2`].
    pub fn abelianize2(&self) -> Result<IntMatrix2> {
        if self.rank != 2 {
            return Err(Error::RankMismatch {
                left: 2,
                right: self.rank,
            });
        }
        let m = self.abelianize();
        Ok(IntMatrix2::new(m[0][0], m[0][1], m[1][0], m[1][1]))
    }

    /// Same images viewed in `F_rank`, fixing the new generators.
    pub fn extend_identity(&self, rank: u32) -> Result<Endomorphism> {
        if rank < self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rank,
            });
        }
        let mut images: Vec<Word> = self.images.iter().map(|w| w.with_rank(rank)).collect();
        images.extend(
            (self.rank + 1..=rank)
                .map(|i| Word::from_reduced_unchecked(rank, vec![Letter::pos(i)])),
        );
        Ok(Endomorphism { rank, images })
    }
}

impl std::fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.images).finish()
    }
}

pub fn make_endo(images: Vec<Word>) -> Result<Endomorphism> {
    Endomorphism::new(images)
}

/// Equality of endomorphisms: generator images agree as reduced words.
pub fn endo_eq(phi: &Endomorphism, psi: &Endomorphism) -> Result<bool> {
    if phi.rank != psi.rank {
        return Err(Error::RankMismatch {
            left: phi.rank,
            right: psi.rank,
        });
    }
    Ok(phi.images == psi.images)
}

/// An endomorphism together with a verified two-sided inverse.
#[derive(Clone, Debug)]
pub struct Automorphism {
    forward: Endomorphism,
    backward: Endomorphism,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.forward == other.forward
    }
}

impl Eq for Automorphism {}

impl std::hash::Hash for Automorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.forward.hash(state);
    }
}

impl Automorphism {
    /// Checks that both composites are the identity.
    pub fn new(forward: Endomorphism, backward: Endomorphism) -> Result<Self> {
        if forward.rank != backward.rank {
            return Err(Error::RankMismatch {
                left: forward.rank,
                right: backward.rank,
            });
        }
        if !forward.compose_unchecked(&backward).is_identity()
            || !backward.compose_unchecked(&forward).is_identity()
        {
            return Err(Error::NotInverse);
        }
        Ok(Automorphism { forward, backward })
    }

    /// Caller guarantees `backward` inverts `forward`. Not re-checked: the
    /// composite of two maps with long images is quadratic in their length.
    pub(crate) fn from_parts_unchecked(forward: Endomorphism, backward: Endomorphism) -> Self {
        Automorphism { forward, backward }
    }

    pub fn from_images(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        Automorphism::new(
            Endomorphism::new(images)?,
            Endomorphism::new(inverse_images)?,
        )
    }

    pub fn identity(rank: u32) -> Self {
        let id = Endomorphism::identity(rank);
        Automorphism {
            forward: id.clone(),
            backward: id,
        }
    }

    /// `tau_w: z -> w z w^-1`.
    pub fn inner(w: &Word) -> Self {
        let rank = w.rank();
        let conj = |c: &Word| Endomorphism {
            rank,
            images: (1..=rank)
                .map(|i| {
                    let mut r = Reducer::with_capacity(2 * c.len() + 1);
                    r.extend(c.letters());
                    r.push(Letter::pos(i));
                    r.extend_inverse(c.letters());
                    r.finish(rank)
                })
                .collect(),
        };
        Automorphism {
            forward: conj(w),
            backward: conj(&w.inv()),
        }
    }

    /// `chi_{k,i}`: `x_k -> x_i^-1 x_k x_i`, other generators fixed.
    pub fn chi(n: u32, k: u32, i: u32) -> Result<Self> {
        for idx in [k, i] {
            if idx < 1 || idx > n {
                return Err(Error::Index {
                    index: idx,
                    rank: n,
                });
            }
        }
        if k == i {
            return Err(Error::InvalidChi(k));
        }
        let make = |s: i32| {
            let mut images: Vec<Word> = Endomorphism::identity(n).images;
            let (xi, xk) = (i as i32, k as i32);
            images[k as usize - 1] = Word::from_reduced_unchecked(
                n,
                [-s * xi, xk, s * xi]
                    .map(|v| Letter::from_signed(v).unwrap())
                    .to_vec(),
            );
            Endomorphism { rank: n, images }
        };
        Ok(Automorphism {
            forward: make(1),
            backward: make(-1),
        })
    }

    pub fn rank(&self) -> u32 {
        self.forward.rank
    }

    pub fn forward(&self) -> &Endomorphism {
        &self.forward
    }

    pub fn backward(&self) -> &Endomorphism {
        &self.backward
    }

    #[must_use]
    pub fn invert(&self) -> Automorphism {
        Automorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.forward.apply(w)
    }

    pub fn apply_inverse(&self, w: &Word) -> Result<Word> {
        self.backward.apply(w)
    }

    /// `self . other`, apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        Ok(Automorphism {
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }

    pub fn abelianize2(&self) -> Result<IntMatrix2> {
        self.forward.abelianize2()
    }
}

pub fn make_automorphism(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Automorphism> {
    Automorphism::from_images(images, inverse_images)
}

pub fn inner(w: &Word) -> Automorphism {
    Automorphism::inner(w)
}

pub fn chi(n: u32, k: u32, i: u32) -> Result<Automorphism> {
    Automorphism::chi(n, k, i)
}

pub fn compose(phi: &Endomorphism, psi: &Endomorphism) -> Result<Endomorphism> {
    phi.compose(psi)
}

pub fn apply(phi: &Endomorphism, w: &Word) -> Result<Word> {
    phi.apply(w)
}

/// Named automorphisms of F2 = <a, b> used across the crate.
pub mod named {
    use super::*;

    fn w(raw: &[i32]) -> Word {
        Word::from_signed(2, raw).expect("static word")
    }

    fn aut(fwd: [&[i32]; 2], bwd: [&[i32]; 2]) -> Automorphism {
        Automorphism::from_parts_unchecked(
            Endomorphism::new(vec![w(fwd[0]), w(fwd[1])]).unwrap(),
            Endomorphism::new(vec![w(bwd[0]), w(bwd[1])]).unwrap(),
        )
    }

    /// `x1: a -> a b^2, b -> b`.
    pub fn x1() -> Automorphism {
        aut([&[1, 2, 2], &[2]], [&[1, -2, -2], &[2]])
    }

    /// `x2: a -> a, b -> b a^2`.
    pub fn x2() -> Automorphism {
        aut([&[1], &[2, 1, 1]], [&[1], &[2, -1, -1]])
    }

    pub fn tau_a() -> Automorphism {
        Automorphism::inner(&w(&[1]))
    }

    pub fn tau_b() -> Automorphism {
        Automorphism::inner(&w(&[2]))
    }

    /// `a <-> b`.
    pub fn swap() -> Automorphism {
        aut([&[2], &[1]], [&[2], &[1]])
    }

    /// `a -> a^-1, b -> b`.
    pub fn invert_a() -> Automorphism {
        aut([&[-1], &[2]], [&[-1], &[2]])
    }

    /// `a -> a b, b -> b`.
    pub fn transvection() -> Automorphism {
        aut([&[1, 2], &[2]], [&[1, -2], &[2]])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab(text: &str) -> Word {
        Alphabet::ab().parse_word(text).unwrap()
    }

    fn endo(a: &str, b: &str) -> Endomorphism {
        Endomorphism::new(vec![ab(a), ab(b)]).unwrap()
    }

    #[test]
    fn make_endo_examples() {
        assert_eq!(
            make_endo(vec![ab("a b^2"), ab("b")]).unwrap(),
            *x1().forward()
        );
        assert!(make_endo(vec![ab("a"), ab("b")]).unwrap().is_identity());
        assert_eq!(
            make_endo(vec![ab("a"), ab("b a^2")]).unwrap(),
            *x2().forward()
        );
        assert_eq!(
            make_endo(vec![ab("a"), Word::identity(3)]),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(x1().apply(&ab("a")).unwrap(), ab("a b^2"));
        assert_eq!(tau_b().apply(&ab("a")).unwrap(), ab("b a b^-1"));
        let w = ab("a b^-3 a b");
        assert_eq!(Endomorphism::identity(2).apply(&w).unwrap(), w);
        assert!(x1().apply(&Word::identity(3)).is_err());
    }

    #[test]
    fn compose_examples() {
        let xx = compose(x1().forward(), x1().forward()).unwrap();
        assert_eq!(xx, endo("a b^4", "b"));
        let id = Endomorphism::identity(2);
        assert_eq!(compose(x1().forward(), &id).unwrap(), *x1().forward());
        let tab = tau_a().compose(&tau_b()).unwrap();
        assert_eq!(tab, inner(&ab("a b")));
        assert_eq!(tab.apply(&ab("a")).unwrap(), ab("a b a b^-1 a^-1"));
    }

    #[test]
    fn make_automorphism_examples() {
        assert!(make_automorphism(vec![ab("a b^2"), ab("b")], vec![ab("a b^-2"), ab("b")]).is_ok());
        assert_eq!(
            make_automorphism(vec![ab("a^2"), ab("b")], vec![ab("a"), ab("b")]),
            Err(Error::NotInverse)
        );
        // one-sided inverse is not enough
        assert_eq!(
            make_automorphism(vec![ab("a b^2"), ab("b")], vec![ab("a b^-1"), ab("b")]),
            Err(Error::NotInverse)
        );
        assert!(make_automorphism(vec![ab("a"), ab("b")], vec![ab("a"), ab("b")]).is_ok());
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(&ab("a")).apply(&ab("b")).unwrap(), ab("a b a^-1"));
        assert!(inner(&Word::identity(2)).is_identity());
        assert_eq!(
            inner(&ab("a b")).apply(&ab("a")).unwrap(),
            ab("a b a b^-1 a^-1")
        );
    }

    #[test]
    fn chi_examples() {
        let g = Alphabet::generic(3);
        let c = chi(3, 2, 1).unwrap();
        assert_eq!(
            c.apply(&g.parse_word("g2").unwrap()).unwrap(),
            g.parse_word("g1^-1 g2 g1").unwrap()
        );
        assert_eq!(
            c.apply(&g.parse_word("g1").unwrap()).unwrap(),
            g.parse_word("g1").unwrap()
        );
        assert_eq!(
            c.apply(&g.parse_word("g3").unwrap()).unwrap(),
            g.parse_word("g3").unwrap()
        );
        assert_eq!(
            c.apply_inverse(&g.parse_word("g2").unwrap()).unwrap(),
            g.parse_word("g1 g2 g1^-1").unwrap()
        );
        let c = chi(2, 1, 2).unwrap();
        assert_eq!(c.apply(&ab("b")).unwrap(), ab("b"));
        assert_eq!(chi(3, 1, 1), Err(Error::InvalidChi(1)));
        assert_eq!(chi(3, 4, 1), Err(Error::Index { index: 4, rank: 3 }));
        // the stored inverse is genuine
        let c = chi(4, 3, 2).unwrap();
        assert!(Automorphism::new(c.forward().clone(), c.backward().clone()).is_ok());
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(x1().abelianize2().unwrap(), IntMatrix2::a2());
        assert_eq!(x2().abelianize2().unwrap(), IntMatrix2::a1());
        assert!(inner(&ab("a b^3 a b^-1"))
            .abelianize2()
            .unwrap()
            .is_identity());
        assert_eq!(
            Automorphism::chi(3, 2, 1).unwrap().forward().abelianize(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn endo_eq_examples() {
        assert!(endo_eq(x1().forward(), x1().forward()).unwrap());
        assert!(!endo_eq(x1().forward(), x2().forward()).unwrap());
        let lhs = x1().compose(&inner(&ab("a"))).unwrap();
        let rhs = inner(&x1().apply(&ab("a")).unwrap())
            .compose(&x1())
            .unwrap();
        assert!(endo_eq(lhs.forward(), rhs.forward()).unwrap());
        assert!(endo_eq(&Endomorphism::identity(2), &Endomorphism::identity(3)).is_err());
    }

    #[test]
    fn named_automorphisms_are_verified() {
        for a in [
            x1(),
            x2(),
            tau_a(),
            tau_b(),
            swap(),
            invert_a(),
            transvection(),
        ] {
            assert!(Automorphism::new(a.forward().clone(), a.backward().clone()).is_ok());
        }
    }

    #[test]
    fn relation_table_in_aut() {
        // x1 tau_a x1^-1 = tau_a tau_b^2 and its three siblings
        let conj = |x: &Automorphism, t: &Automorphism| {
            x.compose(t).unwrap().compose(&x.invert()).unwrap()
        };
        let tb2 = tau_b().compose(&tau_b()).unwrap();
        let ta2 = tau_a().compose(&tau_a()).unwrap();
        assert_eq!(conj(&x1(), &tau_a()), tau_a().compose(&tb2).unwrap());
        assert_eq!(conj(&x1(), &tau_b()), tau_b());
        assert_eq!(conj(&x2(), &tau_a()), tau_a());
        assert_eq!(conj(&x2(), &tau_b()), tau_b().compose(&ta2).unwrap());
    }

    #[test]
    fn extend_identity_fixes_new_generators() {
        let e = x1().forward().extend_identity(3).unwrap();
        let g = Alphabet::embedding(1);
        assert_eq!(e.image(1), &g.parse_word("a b^2").unwrap());
        assert_eq!(e.image(3), &g.parse_word("z1").unwrap());
    }
}
