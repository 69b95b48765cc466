//! Text formats for endomorphisms and group elements.
//!
//! * endomorphism: `a -> a b^2; b -> b` (every generator assigned once);
//!   `id` is the identity.
//! * automorphism: an endomorphism, optionally followed by `| <inverse>`.
//!   Without an explicit inverse, rank-2 maps are certified through their
//!   decomposition in F.
//! * Hol element: `(<word> ; <automorphism>)`.
//! * F element: `(<word over a,b> ; <word over x1,x2>)`.
//! * pi element: `(<u> ; <v> ; <X>)` over `{a,b}`, `{ta,tb}`, `{x1,x2}`.
//! * semidirect element: `(<fiber word> ; <base word>)`.

use crate::alphabet::Alphabet;
use crate::endos::{Automorphism, Endomorphism};
use crate::error::{Error, Result};
use crate::fgroup::{decompose_f, FElement};
use crate::holomorph::{HolElement, SemidirectElement};
use crate::pi::PiElement;
use crate::words::Word;

pub fn parse_endo(text: &str, alphabet: &Alphabet) -> Result<Endomorphism> {
    let trimmed = text.trim();
    if trimmed == "id" || trimmed.is_empty() {
        return Ok(Endomorphism::identity(alphabet.rank()));
    }
    let mut images: Vec<Option<Word>> = vec![None; alphabet.rank() as usize];
    let mut offset = 0;
    for part in text.split(';') {
        let here = offset;
        offset += part.len() + 1;
        if part.trim().is_empty() {
            continue;
        }
        let (name, image) = part
            .split_once("->")
            .ok_or_else(|| Error::parse(here, "expected '<generator> -> <word>'"))?;
        let index = alphabet
            .index_of(name.trim())
            .ok_or_else(|| Error::InvalidGenerator(format!("unknown name {:?}", name.trim())))?;
        let slot = &mut images[index as usize - 1];
        if slot.is_some() {
            return Err(Error::parse(
                here,
                format!("{} assigned twice", name.trim()),
            ));
        }
        *slot = Some(alphabet.parse_word(image).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + here + name.len() + 2,
                msg,
            },
            other => other,
        })?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or_else(|| {
                Error::parse(
                    text.len(),
                    format!("no image for {}", alphabet.name(i as u32 + 1)),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Endomorphism::new(images)
}

pub fn format_endo(e: &Endomorphism, alphabet: &Alphabet) -> String {
    e.images()
        .iter()
        .enumerate()
        .map(|(i, w)| format!("{} -> {}", alphabet.name(i as u32 + 1), alphabet.display(w)))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn parse_automorphism(text: &str, alphabet: &Alphabet) -> Result<Automorphism> {
    match text.split_once('|') {
        Some((fwd, bwd)) => {
            Automorphism::new(parse_endo(fwd, alphabet)?, parse_endo(bwd, alphabet)?)
        }
        None => {
            let e = parse_endo(text, alphabet)?;
            if e.is_identity() {
                return Ok(Automorphism::identity(e.rank()));
            }
            if e.rank() == 2 {
                if let Ok(f) = decompose_f(&e) {
                    return Ok(f.to_aut());
                }
            }
            Err(Error::Invalid(
                "cannot certify invertibility; supply inverse images after '|'".into(),
            ))
        }
    }
}

/// Forward images only; the inverse witness is implied.
pub fn format_automorphism(a: &Automorphism, alphabet: &Alphabet) -> String {
    format_endo(a.forward(), alphabet)
}

/// Forward and inverse images, re-parseable for any automorphism.
pub fn format_automorphism_full(a: &Automorphism, alphabet: &Alphabet) -> String {
    format!(
        "{} | {}",
        format_endo(a.forward(), alphabet),
        format_endo(a.backward(), alphabet)
    )
}

/// Strip the surrounding parentheses and split into `n` `;`-separated parts
/// (the last part keeps any further `;`).
fn tuple_parts(text: &str, n: usize) -> Result<Vec<&str>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(0, "expected a parenthesised tuple"))?;
    let parts: Vec<&str> = inner.splitn(n, ';').collect();
    if parts.len() != n {
        return Err(Error::parse(
            0,
            format!("expected {n} ';'-separated components"),
        ));
    }
    Ok(parts)
}

pub fn parse_hol(text: &str) -> Result<HolElement> {
    let parts = tuple_parts(text, 2)?;
    let ab = Alphabet::ab();
    HolElement::new(ab.parse_word(parts[0])?, parse_automorphism(parts[1], &ab)?)
}

pub fn format_hol(p: &HolElement) -> String {
    let ab = Alphabet::ab();
    format!(
        "({} ; {})",
        ab.display(&p.g),
        format_automorphism(&p.phi, &ab)
    )
}

pub fn parse_f(text: &str) -> Result<FElement> {
    let parts = tuple_parts(text, 2)?;
    FElement::new(
        Alphabet::ab().parse_word(parts[0])?,
        Alphabet::x().parse_word(parts[1])?,
    )
}

pub fn format_f(e: &FElement) -> String {
    format!(
        "({} ; {})",
        Alphabet::ab().display(&e.w),
        Alphabet::x().display(&e.x)
    )
}

pub fn parse_pi(text: &str) -> Result<PiElement> {
    let parts = tuple_parts(text, 3)?;
    PiElement::new(
        Alphabet::ab().parse_word(parts[0])?,
        Alphabet::t().parse_word(parts[1])?,
        Alphabet::x().parse_word(parts[2])?,
    )
}

pub fn format_pi(e: &PiElement) -> String {
    format!(
        "({} ; {} ; {})",
        Alphabet::ab().display(&e.u),
        Alphabet::t().display(&e.v),
        Alphabet::x().display(&e.x)
    )
}

pub fn parse_semidirect(
    text: &str,
    fiber: &Alphabet,
    base: &Alphabet,
) -> Result<SemidirectElement> {
    let parts = tuple_parts(text, 2)?;
    Ok(SemidirectElement {
        g: fiber.parse_word(parts[0])?,
        h: base.parse_word(parts[1])?,
    })
}

pub fn format_semidirect(e: &SemidirectElement, fiber: &Alphabet, base: &Alphabet) -> String {
    format!("({} ; {})", fiber.display(&e.g), base.display(&e.h))
}
