//! Atomic normal logic programs, argumentation frameworks with ungrounded
//! attacks and well-formed claim-augmented frameworks under stable semantics.
//!
//! The crate provides the translations between the three formalisms, the
//! rule-refinement updates (`⊎` keyed by head, `⊎⁺` keyed by rule id) and
//! deciders for ordinary and strong equivalence. Every syntactic decider has
//! a brute-force counterpart in [`equivalence::oracle`] that enumerates
//! bounded update programs and compares answer sets directly.

pub mod af;
pub mod caf;
mod compact;
pub mod dynamics;
pub mod equivalence;
mod error;
pub mod format;
pub mod generate;
pub mod lp;
mod symbol;
pub mod translate;

pub use af::ArgFramework;
pub use caf::ClaimFramework;
pub use equivalence::{SeVerdict, Witness};
pub use error::{Error, Result};
pub use lp::{Program, Rule, RuleId};
pub use symbol::{sym, syms, Argument, Atom, Claim, InterpretationSet, Symbol};
