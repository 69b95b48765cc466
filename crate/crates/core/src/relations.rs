//! Defining relations of pi, checked two independent ways.
//!
//! A relation `lhs = rhs` is a pair of words over the generators
//! `a, b, taua, taub, ta, tb, x1, x2` of Hol(F2). Each side is evaluated by
//! multiplying the generator interpretations in Hol(F2), and separately by
//! pushing every generator through the embedding `E: Hol(F2) -> Aut(F3)` and
//! composing automorphisms there. A relation passes when both routes agree.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::endos::{endo_eq, named, Automorphism};
use crate::error::{Error, Result};
use crate::holomorph::{embed_e, HolElement};
use crate::pi::t_element;
use crate::words::Word;

/// Generator names accepted in relation text.
pub fn generator_alphabet() -> Alphabet {
    Alphabet::new(["a", "b", "taua", "taub", "ta", "tb", "x1", "x2"]).unwrap()
}

fn interpretations() -> Vec<HolElement> {
    let a = Word::generator(2, 1).unwrap();
    let b = Word::generator(2, 2).unwrap();
    vec![
        HolElement::from_word(a.clone()),
        HolElement::from_word(b.clone()),
        HolElement::from_automorphism(named::tau_a()),
        HolElement::from_automorphism(named::tau_b()),
        t_element(&a),
        t_element(&b),
        HolElement::from_automorphism(named::x1()),
        HolElement::from_automorphism(named::x2()),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub text: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn parse(text: &str) -> Result<Self> {
        let (l, r) = text
            .split_once('=')
            .ok_or_else(|| Error::parse(0, "relation needs '='"))?;
        let alphabet = generator_alphabet();
        let offset = l.len() + 1;
        Ok(Relation {
            text: text.trim().to_string(),
            lhs: alphabet.parse_word(l)?,
            rhs: alphabet.parse_word(r).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + offset,
                    msg,
                },
                other => other,
            })?,
        })
    }

    pub fn check(&self) -> RelationResult {
        let gens = interpretations();
        let embedded: Vec<Automorphism> =
            gens.iter().map(|g| embed_e(1, g).expect("m = 1")).collect();

        let in_hol = |w: &Word| {
            w.letters().iter().fold(HolElement::identity(2), |acc, l| {
                let g = &gens[l.index() as usize - 1];
                acc.mul(&if l.is_inverse() { g.inv() } else { g.clone() })
                    .unwrap()
            })
        };
        let in_aut = |w: &Word| {
            w.letters()
                .iter()
                .fold(Automorphism::identity(3), |acc, l| {
                    let g = &embedded[l.index() as usize - 1];
                    acc.compose(&if l.is_inverse() {
                        g.invert()
                    } else {
                        g.clone()
                    })
                    .unwrap()
                })
        };
        let hol = in_hol(&self.lhs) == in_hol(&self.rhs);
        let aut = endo_eq(in_aut(&self.lhs).forward(), in_aut(&self.rhs).forward()).unwrap();
        RelationResult {
            relation: self.text.clone(),
            hol,
            aut,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResult {
    pub relation: String,
    /// Verdict of Hol(F2) arithmetic.
    pub hol: bool,
    /// Verdict of composition in Aut(F3).
    pub aut: bool,
}

impl RelationResult {
    pub fn passed(&self) -> bool {
        self.hol && self.aut
    }
}

impl fmt::Display for RelationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let route = |ok: bool| if ok { "ok" } else { "differ" };
        write!(
            f,
            "{verdict}  {}  [hol: {}, aut3: {}]",
            self.relation,
            route(self.hol),
            route(self.aut)
        )
    }
}

/// The twelve action relations followed by the four t-commutators.
pub const STANDARD_RELATIONS: [&str; 16] = [
    "x1 a x1^-1 = a b^2",
    "x2 a x2^-1 = a",
    "x1 b x1^-1 = b",
    "x2 b x2^-1 = b a^2",
    "x1 taua x1^-1 = taua taub^2",
    "x2 taua x2^-1 = taua",
    "x1 taub x1^-1 = taub",
    "x2 taub x2^-1 = taub taua^2",
    "taua a taua^-1 = a",
    "taub a taub^-1 = b a b^-1",
    "taua b taua^-1 = a b a^-1",
    "taub b taub^-1 = b",
    "ta a ta^-1 a^-1 = 1",
    "tb a tb^-1 a^-1 = 1",
    "ta b ta^-1 b^-1 = 1",
    "tb b tb^-1 b^-1 = 1",
];

pub fn standard_relations() -> Vec<Relation> {
    STANDARD_RELATIONS
        .iter()
        .map(|r| Relation::parse(r).expect("static relation"))
        .collect()
}

pub fn verify_relations() -> Vec<RelationResult> {
    standard_relations().iter().map(Relation::check).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_standard_relations_pass() {
        let results = verify_relations();
        assert_eq!(results.len(), 16);
        for r in &results {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn named_examples() {
        assert!(Relation::parse("x1 b x1^-1 = b").unwrap().check().passed());
        // t-form of the x2 action
        assert!(Relation::parse("x2 tb x2^-1 = tb ta^2")
            .unwrap()
            .check()
            .passed());
        assert!(Relation::parse("x1 ta x1^-1 = ta tb^2")
            .unwrap()
            .check()
            .passed());
    }

    #[test]
    fn corrupted_relation_fails_both_routes() {
        let r = Relation::parse("x1 a x1^-1 = a b").unwrap().check();
        assert!(!r.passed());
        assert!(!r.hol && !r.aut);
        assert!(r.to_string().starts_with("FAIL"));
    }

    #[test]
    fn t_letters_do_not_commute_with_each_other() {
        assert!(!Relation::parse("ta tb = tb ta").unwrap().check().passed());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Relation::parse("x1 a"), Err(Error::Parse { .. })));
        assert!(matches!(
            Relation::parse("x3 = 1"),
            Err(Error::InvalidGenerator(_))
        ));
        assert!(matches!(
            Relation::parse("a = b^q"),
            Err(Error::Parse { pos: 6, .. })
        ));
    }
}
