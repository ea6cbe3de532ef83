//! Well-formed claim-augmented frameworks given by claim-attacks.
//!
//! A claim-attack `(c, x)` lets every argument labelled `c` attack `x`, so
//! equally labelled arguments always attack the same arguments. Claims that
//! label no argument give ungrounded attacks, which have no semantic effect.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::af::{self, ArgFramework, Attack};
use crate::compact;
use crate::equivalence::{SeVerdict, Witness};
use crate::error::{Error, Result};
use crate::symbol::{Argument, Claim, InterpretationSet};

pub type ClaimAttack = (Claim, Argument);

/// `(A, R^C, γ)`; the arguments are the domain of `γ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ClaimFramework {
    gamma: BTreeMap<Argument, Claim>,
    claim_attacks: BTreeSet<ClaimAttack>,
}

impl ClaimFramework {
    pub fn new(
        labels: impl IntoIterator<Item = (Argument, Claim)>,
        claim_attacks: impl IntoIterator<Item = ClaimAttack>,
    ) -> Result<Self> {
        let mut gamma = BTreeMap::new();
        for (arg, claim) in labels {
            if let Some(prev) = gamma.insert(arg.clone(), claim.clone()) {
                if prev != claim {
                    return Err(Error::ConflictingClaim(arg));
                }
            }
        }
        let claim_attacks: BTreeSet<ClaimAttack> = claim_attacks.into_iter().collect();
        if let Some((_, t)) = claim_attacks.iter().find(|(_, t)| !gamma.contains_key(t)) {
            return Err(Error::UndeclaredTarget(t.clone()));
        }
        Ok(ClaimFramework { gamma, claim_attacks })
    }

    pub fn args(&self) -> impl Iterator<Item = &Argument> {
        self.gamma.keys()
    }

    pub fn arg_set(&self) -> BTreeSet<Argument> {
        self.gamma.keys().cloned().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn claim(&self, arg: &Argument) -> Option<&Claim> {
        self.gamma.get(arg)
    }

    pub fn labels(&self) -> &BTreeMap<Argument, Claim> {
        &self.gamma
    }

    pub fn claim_attacks(&self) -> &BTreeSet<ClaimAttack> {
        &self.claim_attacks
    }

    /// Claims attacking `arg`.
    pub fn attacking_claims<'a>(&'a self, arg: &'a Argument) -> impl Iterator<Item = &'a Claim> {
        self.claim_attacks.iter().filter(move |(_, t)| t == arg).map(|(c, _)| c)
    }

    /// Argument-level attacks: `(x, y)` whenever `(γ(x), y) ∈ R^C`.
    pub fn induced_attacks(&self) -> BTreeSet<Attack> {
        self.claim_attacks
            .iter()
            .flat_map(|(c, target)| {
                self.gamma
                    .iter()
                    .filter(move |(_, claim)| *claim == c)
                    .map(move |(source, _)| (source.clone(), target.clone()))
            })
            .collect()
    }
}

impl fmt::Display for ClaimFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, c) in &self.gamma {
            writeln!(f, "carg({a},{c}).")?;
        }
        for (c, a) in &self.claim_attacks {
            writeln!(f, "catt({c},{a}).")?;
        }
        Ok(())
    }
}

/// The underlying framework; fails only when the CAF has no arguments.
pub fn induced_af(framework: &ClaimFramework) -> Result<ArgFramework> {
    ArgFramework::new(framework.arg_set(), framework.induced_attacks())
}

/// `{γ(E) | E stable in the induced framework}`, duplicates merged.
pub fn stable_claim_extensions(framework: &ClaimFramework) -> InterpretationSet {
    let (universe, masks) = af::attacker_masks(&framework.arg_set(), framework.induced_attacks());
    let mut exts = Vec::new();
    compact::stable_extensions(&masks, &mut exts);
    exts.into_iter()
        .map(|m| universe.decode(m).iter().map(|a| framework.gamma[a].clone()).collect())
        .collect()
}

/// `F₁ ∪ F₂`: labels of `F₁` win on shared arguments.
pub fn caf_union(left: &ClaimFramework, right: &ClaimFramework) -> ClaimFramework {
    let mut gamma = left.gamma.clone();
    for (a, c) in &right.gamma {
        gamma.entry(a.clone()).or_insert_with(|| c.clone());
    }
    ClaimFramework {
        gamma,
        claim_attacks: left.claim_attacks.union(&right.claim_attacks).cloned().collect(),
    }
}

/// The first clause of the syntactic characterization that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum CafMismatch {
    Arguments {
        left_only: Vec<Argument>,
        right_only: Vec<Argument>,
    },
    ClaimAttacks {
        left_only: Vec<ClaimAttack>,
        right_only: Vec<ClaimAttack>,
    },
    /// Different claims on `argument`, not both attacking it.
    Label {
        argument: Argument,
        left: Claim,
        right: Claim,
    },
}

impl fmt::Display for CafMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CafMismatch::Arguments { left_only, right_only } => {
                write!(
                    f,
                    "arguments differ: left only {left_only:?}, right only {right_only:?}"
                )
            }
            CafMismatch::ClaimAttacks { left_only, right_only } => write!(
                f,
                "claim-attacks differ: left only {left_only:?}, right only {right_only:?}"
            ),
            CafMismatch::Label { argument, left, right } => write!(
                f,
                "argument {argument} is labelled {left} vs {right} and not attacked by both"
            ),
        }
    }
}

/// Strong equivalence of well-formed CAFs: same arguments and
/// claim-attacks, and on every argument either the claims agree or both
/// claims attack it.
pub fn caf_strongly_equivalent(left: &ClaimFramework, right: &ClaimFramework) -> SeVerdict {
    let (la, ra) = (left.arg_set(), right.arg_set());
    if la != ra {
        return SeVerdict::distinct(Witness::Caf {
            mismatch: CafMismatch::Arguments {
                left_only: la.difference(&ra).cloned().collect(),
                right_only: ra.difference(&la).cloned().collect(),
            },
        });
    }
    if left.claim_attacks != right.claim_attacks {
        return SeVerdict::distinct(Witness::Caf {
            mismatch: CafMismatch::ClaimAttacks {
                left_only: left.claim_attacks.difference(&right.claim_attacks).cloned().collect(),
                right_only: right.claim_attacks.difference(&left.claim_attacks).cloned().collect(),
            },
        });
    }
    for (arg, lc) in &left.gamma {
        let rc = &right.gamma[arg];
        let attacked_by = |c: &Claim| left.claim_attacks.contains(&(c.clone(), arg.clone()));
        if lc != rc && !(attacked_by(lc) && attacked_by(rc)) {
            return SeVerdict::distinct(Witness::Caf {
                mismatch: CafMismatch::Label {
                    argument: arg.clone(),
                    left: lc.clone(),
                    right: rc.clone(),
                },
            });
        }
    }
    SeVerdict::exact()
}
