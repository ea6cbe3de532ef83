//! Exhaustive instance families shared by the integration suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lpaf::{sym, ArgFramework, Atom, Program, Rule, RuleId};

pub fn id(i: u32) -> RuleId {
    RuleId::new(i).unwrap()
}

/// Every subset of `atoms`, in binary counting order.
pub fn subsets(atoms: &[Atom]) -> Vec<BTreeSet<Atom>> {
    (0..1u32 << atoms.len())
        .map(|m| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, a)| a.clone())
                .collect()
        })
        .collect()
}

pub fn atoms(names: &[&str]) -> Vec<Atom> {
    names.iter().map(|n| sym(n)).collect()
}

/// Nonempty h-unique atomic programs with heads in `heads` and negative
/// bodies drawn from `negs`.
pub fn h_unique_family(heads: &[&str], negs: &[&str]) -> Vec<Program> {
    let heads = atoms(heads);
    let bodies = subsets(&atoms(negs));
    let mut out = vec![Vec::new()];
    for h in &heads {
        let mut next = Vec::new();
        for rules in &out {
            next.push(rules.clone());
            for body in &bodies {
                let mut r: Vec<Rule> = rules.clone();
                r.push(Rule::atomic(id(1), h.clone(), body.iter().cloned()));
                next.push(r);
            }
        }
        out = next;
    }
    out.into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| Program::head_ranked(r).unwrap())
        .collect()
}

/// Atomic programs whose ids are a subset of `ids`, each rule with a head
/// and negative body over `names`. The empty program is included.
pub fn atomic_family(ids: &[u32], names: &[&str]) -> Vec<Program> {
    let names = atoms(names);
    let bodies = subsets(&names);
    let mut out: Vec<Vec<Rule>> = vec![Vec::new()];
    for &i in ids {
        let mut next = Vec::new();
        for rules in &out {
            next.push(rules.clone());
            for h in &names {
                for body in &bodies {
                    let mut r = rules.clone();
                    r.push(Rule::atomic(id(i), h.clone(), body.iter().cloned()));
                    next.push(r);
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|r| Program::new(r).unwrap()).collect()
}

/// Normal programs with at most `max_rules` rules over `names`, positive
/// bodies allowed.
pub fn normal_family(max_rules: u32, names: &[&str]) -> Vec<Program> {
    let names = atoms(names);
    let bodies = subsets(&names);
    let mut rules = Vec::new();
    for h in &names {
        for pos in &bodies {
            for neg in &bodies {
                rules.push((h.clone(), pos.clone(), neg.clone()));
            }
        }
    }
    let mut out: Vec<Vec<Rule>> = vec![Vec::new()];
    let mut frontier = out.clone();
    for i in 1..=max_rules {
        let mut next = Vec::new();
        for prefix in &frontier {
            for (h, pos, neg) in &rules {
                let mut r = prefix.clone();
                r.push(Rule::new(id(i), h.clone(), pos.clone(), neg.clone()));
                next.push(r);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(|r| Program::new(r).unwrap()).collect()
}

/// Every framework over `args`, optionally with the ungrounded source
/// `source` attacking some of them.
pub fn all_frameworks(args: &[&str], source: Option<&str>) -> Vec<ArgFramework> {
    let args = atoms(args);
    let mut sources = args.clone();
    sources.extend(source.map(sym));
    let pairs: Vec<(Atom, Atom)> = sources
        .iter()
        .flat_map(|s| args.iter().map(move |t| (s.clone(), t.clone())))
        .collect();
    assert!(pairs.len() < 32);
    (0..1u64 << pairs.len())
        .map(|m| {
            let attacks = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, p)| p.clone());
            ArgFramework::new(args.clone(), attacks).unwrap()
        })
        .collect()
}
