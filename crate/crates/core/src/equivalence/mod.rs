//! Strong-equivalence deciders and the bounded oracles that check them.
//!
//! * [`rr_se_hunique`] and [`rr_se_atomic`] decide equivalence under the
//!   two rule-refinement updates syntactically.
//! * [`standard_se`] decides classical strong equivalence (updates by set
//!   union) through SE-models.
//! * [`oracle_se`] enumerates bounded update programs and compares answer
//!   sets directly; [`Profiler`] does the same for whole families at once.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::af::KernelDiff;
use crate::caf::CafMismatch;
use crate::dynamics::UpdateMode;
use crate::lp::{Program, Rule, RuleId};
use crate::symbol::{fmt_set, Atom, InterpretationSet};

mod kernel;
mod oracle;
mod sanity;
mod standard;

pub use kernel::{lp_kernel, rr_se_atomic, rr_se_hunique};
pub use oracle::{oracle_se, DeltaSpace, OracleBudget, Profile, Profiler, CANDIDATE_LIMIT};
pub use sanity::{kernel_sanity, kernel_sanity_with, KernelReport};
pub use standard::{se_models, standard_se, SeModel};

/// Outcome of an equivalence check.
///
/// A witness is present exactly when the programs (or frameworks) are not
/// equivalent. `bounded` marks a positive answer that only covers the
/// updates an oracle enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeVerdict {
    equivalent: bool,
    bounded: bool,
    witness: Option<Witness>,
}

impl SeVerdict {
    pub fn exact() -> Self {
        SeVerdict {
            equivalent: true,
            bounded: false,
            witness: None,
        }
    }

    pub fn bounded() -> Self {
        SeVerdict {
            equivalent: true,
            bounded: true,
            witness: None,
        }
    }

    pub fn distinct(witness: Witness) -> Self {
        SeVerdict {
            equivalent: false,
            bounded: false,
            witness: Some(witness),
        }
    }

    pub fn is_equivalent(&self) -> bool {
        self.equivalent
    }

    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

impl fmt::Display for SeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, self.bounded) {
            (Some(w), _) => write!(f, "not equivalent\n{w}"),
            (None, true) => f.write_str("equivalent (within the enumerated updates)\n"),
            (None, false) => f.write_str("equivalent\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Why two rules sharing an id break equivalence under `⊎⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleMismatchKind {
    /// The id occurs in one program only.
    MissingId,
    Body,
    /// Heads differ and the rules are not both loop rules.
    Head,
}

/// A structured counterexample to equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Stable kernels of two frameworks differ.
    AfKernelDiff { diff: KernelDiff },
    /// A clause of the claim-framework characterization fails.
    Caf { mismatch: CafMismatch },
    /// Program kernels differ; rules are listed without their ids.
    ProgramKernelDiff {
        left_only: Vec<Rule>,
        right_only: Vec<Rule>,
    },
    RuleMismatch {
        id: RuleId,
        reason: RuleMismatchKind,
        left: Option<Rule>,
        right: Option<Rule>,
    },
    /// An SE-model of one side only, with an update realizing the
    /// difference.
    SeModel {
        side: Side,
        x: BTreeSet<Atom>,
        y: BTreeSet<Atom>,
        update: Program,
        left: InterpretationSet,
        right: InterpretationSet,
    },
    /// An update after which the answer sets differ.
    Update {
        mode: UpdateMode,
        update: Program,
        left: InterpretationSet,
        right: InterpretationSet,
    },
}

impl Witness {
    /// The distinguishing update carried by the witness, if any.
    pub fn update(&self) -> Option<(UpdateMode, &Program)> {
        match self {
            Witness::SeModel { update, .. } => Some((UpdateMode::Union, update)),
            Witness::Update { mode, update, .. } => Some((*mode, update)),
            _ => None,
        }
    }
}

fn write_rules(f: &mut fmt::Formatter<'_>, label: &str, rules: &[Rule]) -> fmt::Result {
    writeln!(f, "{label}:")?;
    for r in rules {
        writeln!(f, "  {}", RuleBody(r))?;
    }
    Ok(())
}

/// A rule printed without its id.
struct RuleBody<'a>(&'a Rule);

impl fmt::Display for RuleBody<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.0.to_string();
        f.write_str(text.split_once(": ").map_or(text.as_str(), |(_, rest)| rest))
    }
}

fn write_update(
    f: &mut fmt::Formatter<'_>,
    update: &Program,
    left: &InterpretationSet,
    right: &InterpretationSet,
) -> fmt::Result {
    writeln!(f, "update:")?;
    for r in update.rules() {
        writeln!(f, "  {r}")?;
    }
    if update.is_empty() {
        writeln!(f, "  (empty)")?;
    }
    let sets = |s: &InterpretationSet| {
        s.iter()
            .map(|x| {
                let mut out = String::new();
                fmt_set(&mut out, x).expect("writing to a string");
                out
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(f, "left answer sets: {}", sets(left))?;
    writeln!(f, "right answer sets: {}", sets(right))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::AfKernelDiff { diff } => {
                writeln!(f, "stable kernels differ")?;
                let names = |v: &[Atom]| v.iter().map(|a| a.as_str()).collect::<Vec<_>>().join(" ");
                let pairs = |v: &[(Atom, Atom)]| {
                    v.iter()
                        .map(|(a, b)| format!("({a},{b})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let lines = [
                    ("left only arguments", names(&diff.left_only_args)),
                    ("right only arguments", names(&diff.right_only_args)),
                    ("left only attacks", pairs(&diff.left_only_attacks)),
                    ("right only attacks", pairs(&diff.right_only_attacks)),
                ];
                for (label, items) in lines.iter().filter(|(_, items)| !items.is_empty()) {
                    writeln!(f, "{label}: {items}")?;
                }
                Ok(())
            }
            Witness::Caf { mismatch } => writeln!(f, "{mismatch}"),
            Witness::ProgramKernelDiff { left_only, right_only } => {
                writeln!(f, "kernels differ")?;
                write_rules(f, "left only", left_only)?;
                write_rules(f, "right only", right_only)
            }
            Witness::RuleMismatch {
                id,
                reason,
                left,
                right,
            } => {
                let what = match reason {
                    RuleMismatchKind::MissingId => "occurs on one side only",
                    RuleMismatchKind::Body => "has different bodies",
                    RuleMismatchKind::Head => "has different heads and is not a loop rule on both sides",
                };
                writeln!(f, "rule {id} {what}")?;
                let show = |r: &Option<Rule>| r.as_ref().map_or("(none)".to_string(), |r| r.to_string());
                writeln!(f, "left: {}", show(left))?;
                writeln!(f, "right: {}", show(right))
            }
            Witness::SeModel {
                side,
                x,
                y,
                update,
                left,
                right,
            } => {
                let mut pair = String::new();
                fmt_set(&mut pair, x)?;
                pair.push_str(", ");
                fmt_set(&mut pair, y)?;
                let side = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                writeln!(f, "SE-model ({pair}) of the {side} program only")?;
                write_update(f, update, left, right)
            }
            Witness::Update {
                mode,
                update,
                left,
                right,
            } => {
                writeln!(f, "{mode} update distinguishes the programs")?;
                write_update(f, update, left, right)
            }
        }
    }
}
