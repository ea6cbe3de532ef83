//! Translations between programs and (claim-augmented) frameworks.
//!
//! Programs map to frameworks by turning every negative body atom into an
//! attacker of the rule. For Dung-style frameworks the rule is identified
//! with its head (h-unique programs); for claim-augmented frameworks each
//! rule `i` becomes an argument `x<i>` labelled with the head.

use crate::af::ArgFramework;
use crate::caf::ClaimFramework;
use crate::error::{Error, Result};
use crate::lp::{Program, Rule, RuleId};
use crate::symbol::{Argument, Symbol};

/// One rule `a :- not b₁, …, not bₖ.` per argument, the `bᵢ` being all
/// attackers of `a` (ungrounded sources included). Ids follow the
/// lexicographic rank of the argument names.
pub fn af_to_lp(framework: &ArgFramework) -> Program {
    let rules = framework.args().iter().map(|a| {
        Rule::atomic(
            RuleId::new(1).expect("nonzero"),
            a.clone(),
            framework.attackers_of(a).cloned(),
        )
    });
    Program::head_ranked(rules).expect("argument names are distinct")
}

/// Arguments are the heads; each `not a` in the rule for `b` yields `(a, b)`.
pub fn lp_to_af(program: &Program) -> Result<ArgFramework> {
    program.require_atomic()?;
    program.require_h_unique()?;
    let attacks = program
        .rules()
        .flat_map(|r| r.neg.iter().map(move |a| (a.clone(), r.head.clone())));
    ArgFramework::new(program.heads(), attacks)
}

pub fn argument_for(id: RuleId) -> Argument {
    Symbol::new(&format!("x{id}")).expect("x<int> is a valid name")
}

/// Inverse of [`argument_for`]: `x<positive integer>` without leading zeros.
pub fn rule_id_of(arg: &Argument) -> Result<RuleId> {
    let bad = || Error::BadArgumentName(arg.clone());
    let digits = arg.as_str().strip_prefix('x').ok_or_else(bad)?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let value: u32 = digits.parse().map_err(|_| bad())?;
    RuleId::new(value).map_err(|_| bad())
}

/// Argument `x<i>` per rule `i`, labelled with the head and attacked by
/// every claim in the rule's negative body.
pub fn lp_to_caf(program: &Program) -> Result<ClaimFramework> {
    program.require_atomic()?;
    let labels = program.rules().map(|r| (argument_for(r.id), r.head.clone()));
    let claim_attacks = program
        .rules()
        .flat_map(|r| r.neg.iter().map(move |c| (c.clone(), argument_for(r.id))));
    ClaimFramework::new(labels, claim_attacks)
}

/// Rule `i: γ(x<i>) :- not c, …` with `c` ranging over the claims attacking
/// `x<i>`.
pub fn caf_to_lp(framework: &ClaimFramework) -> Result<Program> {
    let mut rules = Vec::new();
    for (arg, claim) in framework.labels() {
        let id = rule_id_of(arg)?;
        rules.push(Rule::atomic(
            id,
            claim.clone(),
            framework.attacking_claims(arg).cloned(),
        ));
    }
    Program::new(rules)
}
