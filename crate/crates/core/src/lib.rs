//! Exact computation in free groups, Aut(F2) and the holomorph Hol(F2).
//!
//! The crate builds up from reduced words ([`words`]) and exact 2x2 integer
//! matrices ([`intmat`]) to automorphisms ([`endos`]), the holomorph and its
//! embedding into Aut(F_{n+m}) ([`holomorph`]), the free-by-free subgroup
//! F of Aut(F2) ([`fgroup`]), and its preimage pi in Hol(F2) together with
//! the injective map pi -> F x F ([`pi`]).

pub mod alphabet;
pub mod checks;
pub mod endos;
pub mod error;
pub mod fgroup;
pub mod holomorph;
pub mod intmat;
pub mod pi;
pub mod random;
pub mod relations;
pub mod text;
pub mod words;

pub use alphabet::Alphabet;
pub use endos::{Automorphism, Endomorphism};
pub use error::{Error, NotInFReason, Result};
pub use fgroup::FElement;
pub use holomorph::{ActionTable, HolElement, SemidirectElement};
pub use intmat::{IntMatrix2, SanovCertificate};
pub use pi::PiElement;
pub use words::{Generator, Letter, Word};
