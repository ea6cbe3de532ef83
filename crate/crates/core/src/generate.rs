//! Seeded random instances for property tests and the `gen` command.
//!
//! The same [`RandomSpec`] always yields the same instance.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::af::ArgFramework;
use crate::caf::ClaimFramework;
use crate::error::{Error, Result};
use crate::format::{Document, Format};
use crate::lp::{Program, Rule, RuleId};
use crate::symbol::{Atom, Symbol};
use crate::translate::argument_for;

/// Class flags the generated instance must satisfy. A flag left unset is
/// not enforced, so the instance may still happen to have the property.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub atomic: bool,
    pub strict: bool,
    pub h_unique: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandomSpec {
    pub kind: Format,
    /// Atoms of a program, arguments of a framework.
    pub size: usize,
    /// Probability of each candidate body literal or attack.
    pub density: f64,
    pub flags: ClassFlags,
    pub seed: u64,
}

impl RandomSpec {
    fn validate(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::InvalidSpec("size must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidSpec(format!("density {} outside [0, 1]", self.density)));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// `a`, `b`, ..., `z`, then `p26`, `p27`, ...
fn name(i: usize) -> Symbol {
    let text = if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("p{i}")
    };
    Symbol::new(&text).expect("generated names are valid")
}

fn names(range: std::ops::Range<usize>) -> Vec<Symbol> {
    range.map(name).collect()
}

/// Atoms outside the base that only ever occur negatively.
fn ungrounded_count(size: usize) -> usize {
    size.div_ceil(2)
}

fn pick(pool: &[Atom], p: f64, rng: &mut impl Rng) -> BTreeSet<Atom> {
    pool.iter().filter(|_| rng.gen_bool(p)).cloned().collect()
}

pub fn program(spec: &RandomSpec) -> Result<Program> {
    spec.validate()?;
    let mut rng = spec.rng();
    let base = names(0..spec.size);
    let mut neg_pool = base.clone();
    if !spec.flags.strict {
        neg_pool.extend(names(spec.size..spec.size + ungrounded_count(spec.size)));
    }
    let heads: Vec<Atom> = if spec.flags.h_unique {
        let mut heads: Vec<Atom> = base
            .iter()
            .filter(|_| spec.flags.strict || rng.gen_bool(0.75))
            .cloned()
            .collect();
        if heads.is_empty() {
            heads.push(base.choose(&mut rng).expect("size > 0").clone());
        }
        heads
    } else {
        // Every atom heads a rule when strictness is required; extra rules
        // repeat heads.
        let mut heads: Vec<Atom> = if spec.flags.strict { base.clone() } else { Vec::new() };
        let extra = rng.gen_range(1..=spec.size);
        heads.extend((0..extra).map(|_| base.choose(&mut rng).expect("size > 0").clone()));
        heads
    };
    let rules: Vec<Rule> = heads
        .into_iter()
        .enumerate()
        .map(|(i, head)| {
            let neg = pick(&neg_pool, spec.density, &mut rng);
            let pos = if spec.flags.atomic {
                BTreeSet::new()
            } else {
                pick(&base, spec.density / 2.0, &mut rng)
            };
            Rule::new(RuleId::new(i as u32 + 1).expect("ids start at 1"), head, pos, neg)
        })
        .collect();
    if spec.flags.h_unique {
        Program::head_ranked(rules)
    } else {
        Program::new(rules)
    }
}

pub fn framework(spec: &RandomSpec) -> Result<ArgFramework> {
    spec.validate()?;
    let mut rng = spec.rng();
    let args = names(0..spec.size);
    let mut sources = args.clone();
    if !spec.flags.strict {
        sources.extend(names(spec.size..spec.size + ungrounded_count(spec.size)));
    }
    let mut attacks = Vec::new();
    for s in &sources {
        for t in &args {
            if rng.gen_bool(spec.density) {
                attacks.push((s.clone(), t.clone()));
            }
        }
    }
    ArgFramework::new(args, attacks)
}

/// Arguments `x1`, ..., `x<size>` labelled with claims drawn from about
/// half as many atoms, so that some claims label several arguments.
pub fn claim_framework(spec: &RandomSpec) -> Result<ClaimFramework> {
    spec.validate()?;
    let mut rng = spec.rng();
    let claims = names(0..spec.size.div_ceil(2));
    let mut attackers = claims.clone();
    if !spec.flags.strict {
        attackers.push(name(claims.len()));
    }
    let args: Vec<Symbol> = (1..=spec.size as u32)
        .map(|i| argument_for(RuleId::new(i).expect("ids start at 1")))
        .collect();
    let labels: Vec<(Symbol, Atom)> = args
        .iter()
        .map(|a| (a.clone(), claims.choose(&mut rng).expect("at least one claim").clone()))
        .collect();
    let mut claim_attacks = Vec::new();
    for c in &attackers {
        for a in &args {
            if rng.gen_bool(spec.density) {
                claim_attacks.push((c.clone(), a.clone()));
            }
        }
    }
    ClaimFramework::new(labels, claim_attacks)
}

pub fn generate(spec: &RandomSpec) -> Result<Document> {
    Ok(match spec.kind {
        Format::Lp => Document::Program(program(spec)?),
        Format::Af => Document::Framework(framework(spec)?),
        Format::Caf => Document::Claims(claim_framework(spec)?),
    })
}
