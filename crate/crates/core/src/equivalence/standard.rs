use std::collections::BTreeSet;

use serde::Serialize;

use crate::compact::{CompactRule, Universe};
use crate::error::{Error, Result};
use crate::lp::{answer_sets, language, Program, Rule, RuleId};
use crate::symbol::Atom;

use super::{SeVerdict, Side, Witness};

/// SE-model enumeration visits `3^n` pairs.
const MAX_SE_ATOMS: usize = 16;

/// A pair `(X, Y)` with `X ⊆ Y`, `Y ⊨ P` and `X ⊨ P^Y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SeModel {
    pub x: BTreeSet<Atom>,
    pub y: BTreeSet<Atom>,
}

fn models(rules: &[CompactRule], y: u64) -> bool {
    rules
        .iter()
        .all(|r| r.pos & !y != 0 || r.neg & y != 0 || y & r.head_bit() != 0)
}

fn models_reduct(rules: &[CompactRule], x: u64, y: u64) -> bool {
    rules
        .iter()
        .all(|r| r.neg & y != 0 || r.pos & !x != 0 || x & r.head_bit() != 0)
}

fn se_masks(rules: &[CompactRule], n: usize) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for y in 0..(1u64 << n) {
        if !models(rules, y) {
            continue;
        }
        let mut x = 0u64;
        loop {
            if models_reduct(rules, x, y) {
                out.insert((x, y));
            }
            if x == y {
                break;
            }
            x = x.wrapping_sub(y) & y;
        }
    }
    out
}

fn universe_for(alphabet: &BTreeSet<Atom>) -> Result<Universe> {
    if alphabet.len() > MAX_SE_ATOMS {
        return Err(Error::TooManyAtoms(alphabet.len(), MAX_SE_ATOMS));
    }
    Universe::new(alphabet.iter().cloned())
}

/// All SE-models of `program` over `alphabet`.
pub fn se_models(program: &Program, alphabet: &BTreeSet<Atom>) -> Result<BTreeSet<SeModel>> {
    if let Some(missing) = language(program).difference(alphabet).next() {
        return Err(Error::AlphabetTooSmall(missing.clone()));
    }
    let universe = universe_for(alphabet)?;
    let rules = program.encode(&universe);
    Ok(se_masks(&rules, universe.len())
        .into_iter()
        .map(|(x, y)| SeModel {
            x: universe.decode(x),
            y: universe.decode(y),
        })
        .collect())
}

fn fact(id: u32, head: &Atom, pos: Option<&Atom>) -> Rule {
    let id = RuleId::new(id).expect("ids start at 1");
    Rule::new(id, head.clone(), pos.into_iter().cloned().collect(), BTreeSet::new())
}

/// An update `R` such that `Y` is an answer set of exactly one of
/// `P ∪ R`, `Q ∪ R`, given that `(X, Y)` is an SE-model of `has` only.
fn realizing_update(model: &SeModel, other: &Program) -> Program {
    let (x, y) = (&model.x, &model.y);
    let mut rules = Vec::new();
    let y_models_other = other
        .rules()
        .all(|r| !r.pos.is_subset(y) || r.neg.iter().any(|a| y.contains(a)) || y.contains(&r.head));
    if !y_models_other {
        // Y is an answer set of the side having (X, Y) once all of Y is
        // asserted, and not of the other side, which Y fails to satisfy.
        for a in y {
            rules.push(fact(rules.len() as u32 + 1, a, None));
        }
    } else {
        // X as facts plus a cycle through Y \ X: the other side derives one
        // atom of Y \ X from X and the cycle yields the rest, while the
        // side having (X, Y) stays inside X.
        for a in x {
            rules.push(fact(rules.len() as u32 + 1, a, None));
        }
        let gap: Vec<&Atom> = y.difference(x).collect();
        if gap.len() > 1 {
            for (i, a) in gap.iter().enumerate() {
                let next = gap[(i + 1) % gap.len()];
                rules.push(fact(rules.len() as u32 + 1, a, Some(next)));
            }
        }
    }
    Program::new(rules).expect("ids are consecutive")
}

/// Strong equivalence under set union, decided on SE-models over
/// `L(P) ∪ L(Q)`.
pub fn standard_se(p: &Program, q: &Program) -> Result<SeVerdict> {
    let alphabet: BTreeSet<Atom> = language(p).union(&language(q)).cloned().collect();
    let (mp, mq) = (se_models(p, &alphabet)?, se_models(q, &alphabet)?);
    let left = mp.difference(&mq).next();
    let right = mq.difference(&mp).next();
    let (side, model) = match (left, right) {
        (None, None) => return Ok(SeVerdict::exact()),
        (Some(l), Some(r)) if r < l => (Side::Right, r),
        (Some(l), _) => (Side::Left, l),
        (None, Some(r)) => (Side::Right, r),
    };
    let update = realizing_update(model, if side == Side::Left { q } else { p });
    Ok(SeVerdict::distinct(Witness::SeModel {
        side,
        x: model.x.clone(),
        y: model.y.clone(),
        left: answer_sets(&p.union(&update)),
        right: answer_sets(&q.union(&update)),
        update,
    }))
}
