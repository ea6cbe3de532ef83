//! Argumentation frameworks whose attacks may come from outside the
//! argument set ("ungrounded" attacks), under stable semantics.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::compact::{self, Universe};
use crate::equivalence::{SeVerdict, Witness};
use crate::error::{Error, Result};
use crate::symbol::{Argument, InterpretationSet};

pub type Attack = (Argument, Argument);

/// `(A, R)` with `A` nonempty and `R ⊆ U × A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ArgFramework {
    args: BTreeSet<Argument>,
    attacks: BTreeSet<Attack>,
}

impl ArgFramework {
    pub fn new(args: impl IntoIterator<Item = Argument>, attacks: impl IntoIterator<Item = Attack>) -> Result<Self> {
        let args: BTreeSet<Argument> = args.into_iter().collect();
        if args.is_empty() {
            return Err(Error::EmptyFramework);
        }
        let attacks: BTreeSet<Attack> = attacks.into_iter().collect();
        if let Some((_, target)) = attacks.iter().find(|(_, t)| !args.contains(t)) {
            return Err(Error::UndeclaredTarget(target.clone()));
        }
        Ok(ArgFramework { args, attacks })
    }

    pub fn args(&self) -> &BTreeSet<Argument> {
        &self.args
    }

    pub fn attacks(&self) -> &BTreeSet<Attack> {
        &self.attacks
    }

    /// `R ∩ (A × A)`.
    pub fn proper_attacks(&self) -> impl Iterator<Item = &Attack> {
        self.attacks.iter().filter(|(s, _)| self.args.contains(s))
    }

    pub fn ungrounded_attacks(&self) -> impl Iterator<Item = &Attack> {
        self.attacks.iter().filter(|(s, _)| !self.args.contains(s))
    }

    pub fn is_strict(&self) -> bool {
        self.ungrounded_attacks().next().is_none()
    }

    /// Every source attacking `arg`, ungrounded ones included.
    pub fn attackers_of<'a>(&'a self, arg: &'a Argument) -> impl Iterator<Item = &'a Argument> {
        self.attacks.iter().filter(move |(_, t)| t == arg).map(|(s, _)| s)
    }

    pub fn is_self_attacking(&self, arg: &Argument) -> bool {
        self.attacks.contains(&(arg.clone(), arg.clone()))
    }
}

impl fmt::Display for ArgFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.args {
            writeln!(f, "arg({a}).")?;
        }
        for (s, t) in &self.attacks {
            writeln!(f, "att({s},{t}).")?;
        }
        Ok(())
    }
}

/// `F↓A = (A, R ∩ (A × A))`.
pub fn restrict(framework: &ArgFramework) -> ArgFramework {
    ArgFramework {
        args: framework.args.clone(),
        attacks: framework.proper_attacks().cloned().collect(),
    }
}

pub fn is_conflict_free(framework: &ArgFramework, set: &BTreeSet<Argument>) -> Result<bool> {
    if let Some(a) = set.iter().find(|a| !framework.args.contains(*a)) {
        return Err(Error::UnknownArgument(a.clone()));
    }
    Ok(!framework
        .attacks
        .iter()
        .any(|(s, t)| set.contains(s) && set.contains(t)))
}

/// Per-argument attacker masks over the proper attacks.
pub(crate) fn attacker_masks(
    args: &BTreeSet<Argument>,
    attacks: impl IntoIterator<Item = (Argument, Argument)>,
) -> (Universe, Vec<u64>) {
    let universe = Universe::new(args.iter().cloned()).unwrap_or_else(|e| panic!("{e}"));
    let mut masks = vec![0u64; universe.len()];
    for (s, t) in attacks {
        if let (Some(si), Some(ti)) = (universe.index(&s), universe.index(&t)) {
            masks[ti] |= 1 << si;
        }
    }
    (universe, masks)
}

/// Conflict-free sets whose range over the proper attacks is all of `A`.
pub fn stable_extensions(framework: &ArgFramework) -> InterpretationSet {
    let (universe, masks) = attacker_masks(&framework.args, framework.attacks.iter().cloned());
    let mut out = Vec::new();
    compact::stable_extensions(&masks, &mut out);
    out.into_iter().map(|m| universe.decode(m)).collect()
}

/// `F ∪ G`, componentwise. Ungrounded attacks of one side may become proper.
pub fn union(f: &ArgFramework, g: &ArgFramework) -> ArgFramework {
    ArgFramework {
        args: f.args.union(&g.args).cloned().collect(),
        attacks: f.attacks.union(&g.attacks).cloned().collect(),
    }
}

/// Drops every attack `(a, b)` with `a ≠ b` whose source attacks itself.
pub fn stable_kernel(framework: &ArgFramework) -> ArgFramework {
    let attacks = framework
        .attacks
        .iter()
        .filter(|(s, t)| s == t || !framework.is_self_attacking(s))
        .cloned()
        .collect();
    ArgFramework {
        args: framework.args.clone(),
        attacks,
    }
}

/// Symmetric difference of two frameworks, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KernelDiff {
    pub left_only_args: Vec<Argument>,
    pub right_only_args: Vec<Argument>,
    pub left_only_attacks: Vec<Attack>,
    pub right_only_attacks: Vec<Attack>,
}

impl KernelDiff {
    pub fn between(left: &ArgFramework, right: &ArgFramework) -> Self {
        KernelDiff {
            left_only_args: left.args.difference(&right.args).cloned().collect(),
            right_only_args: right.args.difference(&left.args).cloned().collect(),
            left_only_attacks: left.attacks.difference(&right.attacks).cloned().collect(),
            right_only_attacks: right.attacks.difference(&left.attacks).cloned().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.left_only_args.is_empty()
            && self.right_only_args.is_empty()
            && self.left_only_attacks.is_empty()
            && self.right_only_attacks.is_empty()
    }

    pub fn contains_attack(&self, attack: &Attack) -> bool {
        self.left_only_attacks.contains(attack) || self.right_only_attacks.contains(attack)
    }
}

/// Strong equivalence under stable semantics: equal stable kernels.
pub fn af_strongly_equivalent(f: &ArgFramework, g: &ArgFramework) -> SeVerdict {
    let diff = KernelDiff::between(&stable_kernel(f), &stable_kernel(g));
    if diff.is_empty() {
        SeVerdict::exact()
    } else {
        SeVerdict::distinct(Witness::AfKernelDiff { diff })
    }
}
