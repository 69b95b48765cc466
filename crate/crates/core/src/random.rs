//! Seeded sampling of words and group elements for randomized checks.
//!
//! Every stream is a ChaCha8 generator keyed by a master seed; independent
//! streams for parallel workers are selected with [`stream`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::endos::{named, Automorphism};
use crate::fgroup::FElement;
use crate::holomorph::HolElement;
use crate::pi::PiElement;
use crate::words::{Letter, Word};

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Reduced word of exactly `len` letters, uniform with no immediate
/// cancellation.
pub fn word_of_len<R: Rng + ?Sized>(rng: &mut R, rank: u32, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let i = rng.gen_range(1..=rank);
        let l = if rng.gen_bool(0.5) {
            Letter::neg(i)
        } else {
            Letter::pos(i)
        };
        if letters.last() == Some(&l.inverse()) {
            continue;
        }
        letters.push(l);
    }
    Word::reduce(rank, letters).expect("letters in range")
}

/// Reduced word with length uniform in `0..=max_len`.
pub fn word<R: Rng + ?Sized>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    word_of_len(rng, rank, len)
}

pub fn nontrivial_word<R: Rng + ?Sized>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    word_of_len(rng, rank, len)
}

pub fn felement<R: Rng + ?Sized>(rng: &mut R, max_w: usize, max_x: usize) -> FElement {
    let w = word(rng, 2, max_w);
    let x = word(rng, 2, max_x);
    FElement { w, x }
}

pub fn pi_element<R: Rng + ?Sized>(rng: &mut R, max_uv: usize, max_x: usize) -> PiElement {
    let u = word(rng, 2, max_uv);
    let v = word(rng, 2, max_uv);
    let x = word(rng, 2, max_x);
    PiElement { u, v, x }
}

/// Generators of Aut(F2) used to sample automorphisms: the Nielsen moves
/// (swap, inversion, transvection) together with `x1, x2, tau_a, tau_b`.
pub fn aut_generators() -> Vec<Automorphism> {
    vec![
        named::swap(),
        named::invert_a(),
        named::transvection(),
        named::x1(),
        named::x2(),
        named::tau_a(),
        named::tau_b(),
    ]
}

/// Product of up to `max_steps` generators (or their inverses).
pub fn automorphism<R: Rng + ?Sized>(rng: &mut R, max_steps: usize) -> Automorphism {
    let gens = aut_generators();
    let steps = rng.gen_range(0..=max_steps);
    (0..steps).fold(Automorphism::identity(2), |acc, _| {
        let g = &gens[rng.gen_range(0..gens.len())];
        let g = if rng.gen_bool(0.5) {
            g.invert()
        } else {
            g.clone()
        };
        acc.compose(&g).expect("rank 2")
    })
}

pub fn hol_element<R: Rng + ?Sized>(rng: &mut R, max_g: usize, max_steps: usize) -> HolElement {
    let g = word(rng, 2, max_g);
    let phi = automorphism(rng, max_steps);
    HolElement { g, phi }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let a: Vec<Word> = (0..5).map(|_| word(&mut stream(7, 0), 2, 20)).collect();
        let b: Vec<Word> = (0..5).map(|_| word(&mut stream(7, 0), 2, 20)).collect();
        assert_eq!(a, b);
        let mut s0 = stream(7, 0);
        let mut s1 = stream(7, 1);
        let x: Vec<Word> = (0..5).map(|_| word_of_len(&mut s0, 2, 20)).collect();
        let y: Vec<Word> = (0..5).map(|_| word_of_len(&mut s1, 2, 20)).collect();
        assert_ne!(x, y);
    }

    #[test]
    fn word_of_len_has_exact_length() {
        let mut rng = stream(1, 0);
        for len in [0, 1, 2, 17, 64] {
            assert_eq!(word_of_len(&mut rng, 3, len).len(), len);
        }
    }
}
