use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::af::stable_kernel;
use crate::dynamics::head_update_program;
use crate::error::Result;
use crate::lp::{answer_sets, language, Program, Rule, RuleId};
use crate::symbol::{Atom, Symbol};
use crate::translate::lp_to_af;

use super::lp_kernel;

const DEFAULT_TRIALS: usize = 64;
const DEFAULT_SEED: u64 = 0;

/// Outcome of the three kernel laws on one program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    /// `AS(P) = AS(P^K)`.
    pub answer_sets_preserved: bool,
    /// The stable kernel of the framework of `P` is the framework of `P^K`.
    pub af_kernel_commutes: bool,
    /// `(P ⊎ R)^K = (Q ⊎ R)^K` for random `Q` sharing the kernel of `P`
    /// and random updates `R`.
    pub update_stable: bool,
    pub trials: usize,
}

impl KernelReport {
    pub fn all_pass(&self) -> bool {
        self.answer_sets_preserved && self.af_kernel_commutes && self.update_stable
    }
}

impl fmt::Display for KernelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "pass" } else { "fail" };
        writeln!(
            f,
            "answer sets preserved by the kernel: {}",
            mark(self.answer_sets_preserved)
        )?;
        writeln!(
            f,
            "stable kernel commutes with translation: {}",
            mark(self.af_kernel_commutes)
        )?;
        writeln!(
            f,
            "kernel stable under updates ({} trials): {}",
            self.trials,
            mark(self.update_stable)
        )
    }
}

pub fn kernel_sanity(program: &Program) -> Result<KernelReport> {
    kernel_sanity_with(program, DEFAULT_TRIALS, DEFAULT_SEED)
}

/// Adds to every rule a random subset of the literals the kernel removes.
fn random_kernel_mate(program: &Program, rng: &mut impl Rng) -> Program {
    let loop_heads: Vec<Atom> = program
        .rules()
        .filter(|r| r.is_loop())
        .map(|r| r.head.clone())
        .collect();
    let rules = program.rules().map(|r| {
        let mut rule = r.clone();
        for h in loop_heads.iter().filter(|h| **h != r.head) {
            if rng.gen_bool(0.5) {
                rule.neg.insert(h.clone());
            }
        }
        rule
    });
    Program::new(rules).expect("ids unchanged")
}

/// A random h-unique atomic update over `atoms`.
fn random_update(atoms: &[Atom], rng: &mut impl Rng) -> Program {
    let mut rules = Vec::new();
    for head in atoms {
        if rng.gen_bool(0.5) {
            let neg: BTreeSet<Atom> = atoms.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
            rules.push(Rule::atomic(RuleId::new(1).expect("nonzero"), head.clone(), neg));
        }
    }
    Program::head_ranked(rules).expect("one rule per head")
}

/// Checks the kernel laws on `program`, drawing `trials` random partners
/// from `seed`.
pub fn kernel_sanity_with(program: &Program, trials: usize, seed: u64) -> Result<KernelReport> {
    let kernel = lp_kernel(program)?;
    let answer_sets_preserved = answer_sets(program) == answer_sets(&kernel);
    let af_kernel_commutes = program.is_empty() || stable_kernel(&lp_to_af(program)?) == lp_to_af(&kernel)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut atoms: Vec<Atom> = language(program).into_iter().collect();
    let fresh = (0..)
        .map(|i| Symbol::new(&format!("z{i}")).expect("valid name"))
        .find(|s| !atoms.contains(s))
        .expect("some name is unused");
    atoms.push(fresh);
    let mut update_stable = true;
    for _ in 0..trials {
        let mate = random_kernel_mate(program, &mut rng);
        let update = random_update(&atoms, &mut rng);
        let left = lp_kernel(&head_update_program(program, &update)?)?;
        let right = lp_kernel(&head_update_program(&mate, &update)?)?;
        update_stable &= left == right;
    }
    Ok(KernelReport {
        answer_sets_preserved,
        af_kernel_commutes,
        update_stable,
        trials,
    })
}
