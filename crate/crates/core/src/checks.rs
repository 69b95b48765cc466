//! Randomized property checks, one independent sample at a time.
//!
//! Sample `i` of a suite draws from `random::stream(seed, i)`, so a run is
//! reproducible from `(suite, seed, i)` alone and samples can be evaluated
//! in any order or in parallel.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::Rng;

use crate::alphabet::Alphabet;
use crate::endos::{named, Automorphism};
use crate::error::{Error, Result};
use crate::fgroup::{decompose_f, is_inner, FElement};
use crate::holomorph::{
    corollary_injection, embed_e, hol_eq, ActionTable, HolElement, SemidirectElement,
};
use crate::intmat::{eval_sanov, sanov_rewrite};
use crate::pi::{pi_from_normal_form, pi_normal_form, PiElement};
use crate::random;
use crate::text::{format_f, format_hol, format_pi, format_semidirect};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `sanov_rewrite . eval` is the identity, with sign -1 on negations.
    Sanov,
    /// `decompose_f(f_to_aut(e)) = e`.
    FRoundtrip,
    /// `f_to_aut(e1 e2) = f_to_aut(e1) . f_to_aut(e2)`.
    FMul,
    /// Normal form and Hol element roundtrips in pi.
    PiRoundtrip,
    /// Direct pi multiplication agrees with multiplication through Hol(F2).
    PiMul,
    /// `f1`, `f2` are homomorphisms.
    PiHom,
    /// Elements of `ker f1` and `ker f2` embed trivially only when trivial.
    PiKernel,
    /// Two triples have equal images in F x F exactly when they are equal
    /// in Hol(F2).
    PiDistinct,
    /// `E(p q) = E(p) . E(q)` in Aut(F3).
    EmbedHom,
    /// Nontrivial Hol elements have nontrivial images in Aut(F3).
    EmbedFaithful,
    /// The pullback into Hol(F2) x F1 for the action table `(tau_b)`.
    SemidirectTauB,
    /// The pullback into Hol(F2) x F2 for the action table `(x1, x2)`.
    SemidirectX,
    /// `is_inner(inner(w)) = w`.
    Inner,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Sanov,
        Suite::FRoundtrip,
        Suite::FMul,
        Suite::PiRoundtrip,
        Suite::PiMul,
        Suite::PiHom,
        Suite::PiKernel,
        Suite::PiDistinct,
        Suite::EmbedHom,
        Suite::EmbedFaithful,
        Suite::SemidirectTauB,
        Suite::SemidirectX,
        Suite::Inner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sanov => "sanov-roundtrip",
            Suite::FRoundtrip => "f-roundtrip",
            Suite::FMul => "f-mul",
            Suite::PiRoundtrip => "pi-roundtrip",
            Suite::PiMul => "pi-mul",
            Suite::PiHom => "pi-hom",
            Suite::PiKernel => "pi-kernel",
            Suite::PiDistinct => "embed-ff",
            Suite::EmbedHom => "embed-aut3",
            Suite::EmbedFaithful => "embed-aut3-faithful",
            Suite::SemidirectTauB => "semidirect-taub",
            Suite::SemidirectX => "semidirect-x",
            Suite::Inner => "inner",
        }
    }

    /// Default sampling bounds, sized so every sample stays cheap.
    pub fn default_bounds(self) -> Bounds {
        let b = Bounds::default();
        match self {
            Suite::Sanov | Suite::Inner => Bounds { word: 64, ..b },
            Suite::FRoundtrip => Bounds {
                word: 32,
                x: 10,
                ..b
            },
            Suite::FMul => Bounds {
                word: 32,
                x: 6,
                ..b
            },
            Suite::PiRoundtrip
            | Suite::PiMul
            | Suite::PiHom
            | Suite::PiKernel
            | Suite::PiDistinct => Bounds {
                word: 32,
                x: 8,
                ..b
            },
            Suite::EmbedHom | Suite::EmbedFaithful => Bounds {
                word: 16,
                steps: 6,
                ..b
            },
            Suite::SemidirectTauB | Suite::SemidirectX => Bounds {
                word: 16,
                x: 8,
                ..b
            },
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// Length bounds for sampled words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Words over `{a, b}` (or `{A1, A2}`, or the fiber of a semidirect product).
    pub word: usize,
    /// Words over `{x1, x2}`, and base words of semidirect products.
    pub x: usize,
    /// Generator steps for sampled automorphisms.
    pub steps: usize,
    /// Samples whose explicit automorphism images are estimated to need more
    /// letter operations than this are skipped rather than computed.
    pub max_work: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            word: 32,
            x: 8,
            steps: 6,
            max_work: 1 << 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Outcome of one sample, with its inputs and computed outputs as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub suite: Suite,
    pub seed: u64,
    pub index: u64,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }

    /// Every sample was evaluated and passed.
    pub fn all_passed(&self) -> bool {
        self.fail == 0 && self.skipped == 0
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} pass, {} fail, {} skipped",
            self.pass, self.fail, self.skipped
        )
    }
}

pub fn run(suite: Suite, seed: u64, count: u64, bounds: &Bounds) -> (Tally, Vec<Sample>) {
    let mut tally = Tally::default();
    let mut failures = Vec::new();
    for i in 0..count {
        let s = sample(suite, seed, i, bounds);
        tally.add(s.verdict);
        if s.verdict != Verdict::Pass {
            failures.push(s);
        }
    }
    (tally, failures)
}

/// Estimated letters in the forward images of `f_to_aut(e)`.
fn forward_size(e: &FElement) -> BigInt {
    FElement::x_image_lower_bound(&e.x) + 2 * e.w.len()
}

/// Estimated letters in the inverse images of `f_to_aut(e)`, which carry
/// `X^-1(w)`.
fn backward_size(e: &FElement) -> BigInt {
    FElement::x_image_lower_bound(&e.x) * (2 * e.w.len() + 1)
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn fiber_table(suite: Suite) -> ActionTable {
    match suite {
        Suite::SemidirectTauB => ActionTable::new(2, vec![named::tau_b()]),
        _ => ActionTable::new(2, vec![named::x1(), named::x2()]),
    }
    .expect("rank 2 actions")
}

/// Evaluate sample `index` of `suite`.
pub fn sample(suite: Suite, seed: u64, index: u64, bounds: &Bounds) -> Sample {
    let mut rng = random::stream(seed, index);
    let rng = &mut rng;
    let budget = BigInt::from(bounds.max_work);
    let mut inputs = Vec::new();
    let mut outputs = Vec::new();
    let v = match suite {
        Suite::Sanov => {
            let w = random::word(rng, 2, bounds.word);
            let m = eval_sanov(&w);
            inputs.push(Alphabet::sanov().format_word(&w));
            match (sanov_rewrite(&m), sanov_rewrite(&m.neg())) {
                (Ok(pos), Ok(neg)) => {
                    outputs.push(pos.to_string());
                    outputs.push(neg.to_string());
                    verdict(
                        pos.sign == 1
                            && neg.sign == -1
                            && pos.word().as_ref() == Ok(&w)
                            && neg.syllables == pos.syllables,
                    )
                }
                (a, b) => {
                    outputs.push(format!("{a:?} / {b:?}"));
                    Verdict::Fail
                }
            }
        }
        Suite::FRoundtrip => {
            let e = random::felement(rng, bounds.word, bounds.x);
            inputs.push(format_f(&e));
            if backward_size(&e) > budget {
                Verdict::Skipped
            } else {
                let back = decompose_f(e.to_aut().forward());
                outputs.push(match &back {
                    Ok(f) => format_f(f),
                    Err(err) => err.to_string(),
                });
                verdict(back.as_ref() == Ok(&e))
            }
        }
        Suite::FMul => {
            let e1 = random::felement(rng, bounds.word, bounds.x);
            let e2 = random::felement(rng, bounds.word, bounds.x);
            inputs.push(format_f(&e1));
            inputs.push(format_f(&e2));
            // f_mul(e1, e2) = (w1 X1(w2), X1 X2) with |X1(w2)| <= |w2| lb(X1);
            // its inverse images carry X2^-1 X1^-1(w1) X2^-1(w2).
            let x12 = e1.x.mul_unchecked(&e2.x);
            let (lb1, lb2) = (
                FElement::x_image_lower_bound(&e1.x),
                FElement::x_image_lower_bound(&e2.x),
            );
            let lb12 = FElement::x_image_lower_bound(&x12);
            let w_len = BigInt::from(e1.w.len()) + &lb1 * e2.w.len();
            let sizes = [
                &lb12 + 2 * &w_len,
                &w_len * x12.len(),
                lb12 * (2 * e1.w.len() + 1) + lb2 * (2 * e2.w.len()),
                backward_size(&e1),
                backward_size(&e2),
                forward_size(&e1) * forward_size(&e2),
            ];
            let too_big = sizes.iter().any(|n| n > &budget);
            if too_big {
                Verdict::Skipped
            } else {
                let prod = e1.mul(&e2);
                outputs.push(format_f(&prod));
                let composed = e1
                    .to_aut()
                    .forward()
                    .compose(e2.to_aut().forward())
                    .expect("rank 2");
                verdict(prod.to_aut().forward() == &composed)
            }
        }
        Suite::PiRoundtrip => {
            let e = random::pi_element(rng, bounds.word, bounds.x);
            // an independently built member of pi: (g, tau_w . eval_x(X))
            let g = random::word(rng, 2, bounds.word);
            let f = random::felement(rng, bounds.word, bounds.x);
            let h = HolElement::new(g, f.to_aut()).expect("rank 2");
            inputs.push(format_pi(&e));
            inputs.push(format_hol(&h));
            let nf = pi_normal_form(&pi_from_normal_form(&e));
            let h_nf = pi_normal_form(&h);
            outputs.push(
                nf.as_ref()
                    .map(format_pi)
                    .unwrap_or_else(|err| err.to_string()),
            );
            outputs.push(
                h_nf.as_ref()
                    .map(format_pi)
                    .unwrap_or_else(|err| err.to_string()),
            );
            let back = h_nf.map(|p| pi_from_normal_form(&p));
            verdict(nf.as_ref() == Ok(&e) && back.as_ref() == Ok(&h))
        }
        Suite::PiMul => {
            let e1 = random::pi_element(rng, bounds.word, bounds.x);
            let e2 = random::pi_element(rng, bounds.word, bounds.x);
            inputs.push(format_pi(&e1));
            inputs.push(format_pi(&e2));
            let direct = e1.mul(&e2);
            outputs.push(format_pi(&direct));
            verdict(e1.mul_via_hol(&e2).as_ref() == Ok(&direct))
        }
        Suite::PiHom => {
            let e1 = random::pi_element(rng, bounds.word, bounds.x);
            let e2 = random::pi_element(rng, bounds.word, bounds.x);
            inputs.push(format_pi(&e1));
            inputs.push(format_pi(&e2));
            let prod = e1.mul(&e2);
            outputs.push(format_f(&prod.f1()));
            outputs.push(format_f(&prod.f2()));
            verdict(prod.f1() == e1.f1().mul(&e2.f1()) && prod.f2() == e1.f2().mul(&e2.f2()))
        }
        Suite::PiKernel => {
            let id = Word::identity(2);
            let ker_f1 = PiElement {
                u: id.clone(),
                v: random::word(rng, 2, bounds.word),
                x: id.clone(),
            };
            let ker_f2 = PiElement {
                u: random::word(rng, 2, bounds.word),
                v: id.clone(),
                x: id,
            };
            let mut ok = true;
            for e in [ker_f1, ker_f2] {
                inputs.push(format_pi(&e));
                let (f1, f2) = e.embed();
                outputs.push(format!("{} , {}", format_f(&f1), format_f(&f2)));
                ok &= (f1.is_identity() && f2.is_identity()) == e.is_identity();
            }
            verdict(ok)
        }
        Suite::PiDistinct => {
            let e1 = random::pi_element(rng, bounds.word, bounds.x);
            // equal draws are rare; force some so both directions are exercised
            let e2 = if rng.gen_ratio(1, 8) {
                e1.clone()
            } else {
                random::pi_element(rng, bounds.word, bounds.x)
            };
            inputs.push(format_pi(&e1));
            inputs.push(format_pi(&e2));
            let (a1, a2) = (e1.embed(), e2.embed());
            outputs.push(format!("{} , {}", format_f(&a1.0), format_f(&a1.1)));
            outputs.push(format!("{} , {}", format_f(&a2.0), format_f(&a2.1)));
            let same_in_hol = hol_eq(&e1.to_hol(), &e2.to_hol()).expect("rank 2");
            verdict((a1 == a2) == same_in_hol)
        }
        Suite::EmbedHom => {
            let p = random::hol_element(rng, bounds.word, bounds.steps);
            let q = random::hol_element(rng, bounds.word, bounds.steps);
            inputs.push(format_hol(&p));
            inputs.push(format_hol(&q));
            let lhs = embed_e(1, &p.mul(&q).expect("rank 2")).expect("m = 1");
            let rhs = embed_e(1, &p)
                .and_then(|ep| ep.compose(&embed_e(1, &q)?))
                .expect("rank 3");
            verdict(lhs == rhs && lhs.backward() == rhs.backward())
        }
        Suite::EmbedFaithful => {
            let mut p = random::hol_element(rng, bounds.word, bounds.steps);
            while p.is_identity() {
                p = random::hol_element(rng, bounds.word, bounds.steps);
            }
            inputs.push(format_hol(&p));
            let e = embed_e(1, &p).expect("m = 1");
            let checked = Automorphism::new(e.forward().clone(), e.backward().clone()).is_ok();
            verdict(checked && !e.is_identity())
        }
        Suite::SemidirectTauB | Suite::SemidirectX => {
            let table = fiber_table(suite);
            let k = table.base_rank();
            let draw = |rng: &mut rand_chacha::ChaCha8Rng| SemidirectElement {
                g: random::word(rng, 2, bounds.word),
                h: random::word(rng, k, bounds.x),
            };
            let e1 = draw(rng);
            let e2 = draw(rng);
            let (fib, base) = (Alphabet::ab(), Alphabet::base(k));
            inputs.push(format_semidirect(&e1, &fib, &base));
            inputs.push(format_semidirect(&e2, &fib, &base));
            let inj =
                |e: &SemidirectElement| corollary_injection(&table, e).expect("valid element");
            let prod = table.mul(&e1, &e2).expect("valid elements");
            outputs.push(format_semidirect(&prod, &fib, &base));
            let (p1, h1) = inj(&e1);
            let (p2, h2) = inj(&e2);
            let (p12, h12) = inj(&prod);
            let multiplicative =
                p12 == p1.mul(&p2).expect("rank 2") && h12 == h1.mul_unchecked(&h2);
            let separating = (e1 == e2) == ((p1, h1) == (p2, h2));
            verdict(multiplicative && separating)
        }
        Suite::Inner => {
            let w = random::word(rng, 2, bounds.word);
            inputs.push(Alphabet::ab().format_word(&w));
            let back = is_inner(Automorphism::inner(&w).forward());
            outputs.push(match &back {
                Ok(u) => Alphabet::ab().format_word(u),
                Err(err) => err.to_string(),
            });
            verdict(back.as_ref() == Ok(&w))
        }
    };
    Sample {
        suite,
        seed,
        index,
        inputs,
        outputs,
        verdict: v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_a_few_samples() {
        for suite in Suite::ALL {
            let (tally, failures) = run(suite, 11, 5, &suite.default_bounds());
            assert_eq!(tally.fail, 0, "{suite}: {failures:?}");
        }
    }

    #[test]
    fn suite_names_roundtrip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn samples_are_reproducible() {
        let b = Suite::PiMul.default_bounds();
        assert_eq!(
            sample(Suite::PiMul, 3, 9, &b),
            sample(Suite::PiMul, 3, 9, &b)
        );
    }
}
