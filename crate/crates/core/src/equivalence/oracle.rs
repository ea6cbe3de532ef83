use std::collections::BTreeSet;

use serde::Serialize;

use crate::compact::{self, bits, CompactRule, Universe};
use crate::dynamics::{self, UpdateMode};
use crate::error::{Error, Result};
use crate::lp::{answer_sets, language, Program, Rule, RuleId};
use crate::symbol::{Atom, Symbol};

use super::{SeVerdict, Witness};

/// Largest number of candidate updates an oracle run may enumerate.
pub const CANDIDATE_LIMIT: u128 = 10_000_000;

/// A profile stores each answer-set collection as a bitmask over the
/// `2^n` interpretations, so `2^n` must fit in 64 bits.
const MAX_PROFILE_ATOMS: usize = 6;

/// Bounds on the update programs an oracle enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    /// Atoms added to the language of the compared programs.
    pub fresh_atoms: usize,
    pub max_rules: usize,
    /// Bound on the negative body of every update rule.
    pub max_body: usize,
    /// Ids added above the largest id in use (`⊎⁺` only).
    pub fresh_ids: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            fresh_atoms: 1,
            max_rules: 2,
            max_body: 2,
            fresh_ids: 1,
        }
    }
}

/// The smallest `count` names not in `used`: single letters first, then
/// `f1`, `f2`, ...
fn fresh_names(used: &BTreeSet<Atom>, count: usize) -> Vec<Atom> {
    let letters = ('a'..='z').map(|c| c.to_string());
    let numbered = (1..).map(|i| format!("f{i}"));
    letters
        .chain(numbered)
        .map(|n| Symbol::new(&n).expect("generated names are valid"))
        .filter(|s| !used.contains(s))
        .take(count)
        .collect()
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Negative bodies of size at most `max_body`, as sorted index lists in
/// lexicographic order.
fn neg_bodies(n: usize, max_body: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, left: usize, current: u64, out: &mut Vec<u64>) {
        out.push(current);
        if left == 0 {
            return;
        }
        for i in start..n {
            go(i + 1, n, left - 1, current | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    go(0, n, max_body, 0, &mut out);
    out
}

fn check_class(mode: UpdateMode, program: &Program) -> Result<()> {
    match mode {
        UpdateMode::Union => Ok(()),
        UpdateMode::Head => {
            program.require_atomic()?;
            program.require_h_unique()
        }
        UpdateMode::Id => program.require_atomic(),
    }
}

/// All update programs within a budget, in canonical order: by number of
/// rules, then total body size, then lexicographically by rule sequence.
///
/// Update rules are atomic under `⊎` and `⊎⁺`. Under `⊎` an update never
/// repeats a head (rules with a common head would merge into one) and under
/// `⊎⁺` it never repeats an id. Under set union a rule may carry at most
/// one positive body atom.
#[derive(Debug, Clone)]
pub struct DeltaSpace {
    mode: UpdateMode,
    universe: Universe,
    pool: Vec<CompactRule>,
    /// End of the group of rules sharing a head (`⊎`) or id (`⊎⁺`).
    group_end: Vec<usize>,
    max_rules: usize,
    count: u128,
}

impl DeltaSpace {
    pub fn new(mode: UpdateMode, atoms: &BTreeSet<Atom>, ids: &BTreeSet<RuleId>, budget: OracleBudget) -> Result<Self> {
        let mut all = atoms.clone();
        all.extend(fresh_names(atoms, budget.fresh_atoms));
        let universe = Universe::new(all)?;
        let n = universe.len();
        let mut id_list: Vec<u32> = ids.iter().map(|i| i.get()).collect();
        let top = id_list.last().copied().unwrap_or(0);
        id_list.extend((1..=budget.fresh_ids as u32).map(|i| top + i));

        let bodies: u128 = (0..=budget.max_body.min(n) as u128)
            .map(|k| binomial(n as u128, k))
            .fold(0, u128::saturating_add);
        let n128 = n as u128;
        let pool_size = match mode {
            UpdateMode::Union => n128 * (n128 + 1) * bodies,
            UpdateMode::Head => n128 * bodies,
            UpdateMode::Id => id_list.len() as u128 * n128 * bodies,
        };
        if budget.max_rules > 0 && pool_size > CANDIDATE_LIMIT {
            return Err(Error::BudgetTooLarge(pool_size, CANDIDATE_LIMIT));
        }

        let mut pool = Vec::new();
        let mut group_end = Vec::new();
        if budget.max_rules > 0 {
            let negs = neg_bodies(n, budget.max_body);
            let rule = |id, head: usize, pos, neg| CompactRule {
                id,
                head: head as u8,
                pos,
                neg,
            };
            match mode {
                UpdateMode::Union => {
                    for head in 0..n {
                        let positives = std::iter::once(0).chain((0..n).map(|i| 1u64 << i));
                        for pos in positives {
                            pool.extend(negs.iter().map(|&neg| rule(0, head, pos, neg)));
                        }
                    }
                    group_end = (1..=pool.len()).collect();
                }
                UpdateMode::Head => {
                    for head in 0..n {
                        pool.extend(negs.iter().map(|&neg| rule(0, head, 0, neg)));
                        group_end.resize(pool.len(), pool.len());
                    }
                }
                UpdateMode::Id => {
                    for &id in &id_list {
                        for head in 0..n {
                            pool.extend(negs.iter().map(|&neg| rule(id, head, 0, neg)));
                        }
                        group_end.resize(pool.len(), pool.len());
                    }
                }
            }
        }

        let mut groups = Vec::new();
        let mut i = 0;
        while i < pool.len() {
            groups.push((group_end[i] - i) as u128);
            i = group_end[i];
        }
        // Elementary symmetric sums of the group sizes count the updates
        // with k rules.
        let mut e = vec![0u128; budget.max_rules + 1];
        e[0] = 1;
        for g in groups {
            for k in (1..=budget.max_rules).rev() {
                e[k] = e[k].saturating_add(e[k - 1].saturating_mul(g));
            }
        }
        let count = e.into_iter().fold(0, u128::saturating_add);
        Ok(DeltaSpace {
            mode,
            universe,
            pool,
            group_end,
            max_rules: budget.max_rules,
            count,
        })
    }

    /// The space over `L(P) ∪ L(Q)` and `id(P) ∪ id(Q)` plus the fresh
    /// atoms and ids of `budget`.
    pub fn for_programs(mode: UpdateMode, p: &Program, q: &Program, budget: OracleBudget) -> Result<Self> {
        let atoms = language(p).union(&language(q)).cloned().collect();
        let ids = p.ids().union(&q.ids()).copied().collect();
        DeltaSpace::new(mode, &atoms, &ids, budget)
    }

    pub fn mode(&self) -> UpdateMode {
        self.mode
    }

    pub fn atoms(&self) -> &[Atom] {
        self.universe.atoms()
    }

    /// Number of updates in the space, the empty update included.
    pub fn candidate_count(&self) -> u128 {
        self.count
    }

    fn check_program(&self, program: &Program) -> Result<()> {
        check_class(self.mode, program)?;
        match language(program).into_iter().find(|a| self.universe.index(a).is_none()) {
            Some(a) => Err(Error::AlphabetTooSmall(a)),
            None => Ok(()),
        }
    }

    /// Calls `f` on every update with `k` rules, in lexicographic order.
    fn for_each_of_size(&self, k: usize, f: &mut impl FnMut(&[usize])) {
        fn go(space: &DeltaSpace, start: usize, k: usize, stack: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
            if stack.len() == k {
                f(stack);
                return;
            }
            for i in start..space.pool.len() {
                stack.push(i);
                go(space, space.group_end[i], k, stack, f);
                stack.pop();
            }
        }
        go(self, 0, k, &mut Vec::with_capacity(k), f);
    }

    fn body_size(&self, delta: &[usize]) -> u32 {
        delta
            .iter()
            .map(|&i| self.pool[i].pos.count_ones() + self.pool[i].neg.count_ones())
            .sum()
    }

    fn apply(&self, base: &[CompactRule], delta: &[usize], out: &mut Vec<CompactRule>) {
        out.clear();
        out.extend_from_slice(base);
        for &i in delta {
            let rule = &self.pool[i];
            match self.mode {
                UpdateMode::Union => out.push(*rule),
                UpdateMode::Head => compact::head_update(out, rule),
                UpdateMode::Id => compact::id_update(out, rule),
            }
        }
    }

    fn answer_sets_after(
        &self,
        base: &[CompactRule],
        delta: &[usize],
        scratch: &mut Vec<CompactRule>,
        out: &mut Vec<u64>,
    ) {
        self.apply(base, delta, scratch);
        out.clear();
        compact::answer_sets(scratch, out);
    }

    /// The update as a program. Under `⊎` ids follow head rank, under set
    /// union they count up from 1.
    pub fn delta_program(&self, delta: &[usize]) -> Program {
        let rules = delta.iter().enumerate().map(|(k, &i)| {
            let r = &self.pool[i];
            let id = match self.mode {
                UpdateMode::Id => r.id,
                _ => k as u32 + 1,
            };
            Rule::new(
                RuleId::new(id).expect("ids start at 1"),
                self.universe.atoms()[r.head as usize].clone(),
                self.universe.decode(r.pos),
                self.universe.decode(r.neg),
            )
        });
        match self.mode {
            UpdateMode::Head => Program::head_ranked(rules),
            _ => Program::new(rules),
        }
        .expect("updates repeat neither heads under ⊎ nor ids")
    }

    /// Searches the space for the canonically first update after which
    /// `p` and `q` have different answer sets.
    pub fn search(&self, p: &Program, q: &Program) -> Result<SeVerdict> {
        self.check_program(p)?;
        self.check_program(q)?;
        if self.count > CANDIDATE_LIMIT {
            return Err(Error::BudgetTooLarge(self.count, CANDIDATE_LIMIT));
        }
        let (bp, bq) = (p.encode(&self.universe), q.encode(&self.universe));
        let mut scratch = Vec::new();
        let (mut ap, mut aq) = (Vec::new(), Vec::new());
        for k in 0..=self.max_rules {
            let mut best: Option<(u32, Vec<usize>)> = None;
            self.for_each_of_size(k, &mut |delta| {
                let size = self.body_size(delta);
                if best.as_ref().is_some_and(|(b, _)| *b <= size) {
                    return;
                }
                self.answer_sets_after(&bp, delta, &mut scratch, &mut ap);
                self.answer_sets_after(&bq, delta, &mut scratch, &mut aq);
                if ap != aq {
                    best = Some((size, delta.to_vec()));
                }
            });
            if let Some((_, delta)) = best {
                return Ok(SeVerdict::distinct(self.witness(p, q, &delta)));
            }
        }
        Ok(SeVerdict::bounded())
    }

    fn witness(&self, p: &Program, q: &Program, delta: &[usize]) -> Witness {
        let update = self.delta_program(delta);
        let replay = |x: &Program| {
            answer_sets(&dynamics::apply(self.mode, x, &update).expect("class checked before enumeration"))
        };
        Witness::Update {
            mode: self.mode,
            left: replay(p),
            right: replay(q),
            update,
        }
    }
}

/// Searches the bounded update space for an update `R` after which `P` and
/// `Q` have different answer sets.
///
/// The returned witness is the canonically first distinguishing update. A
/// positive verdict is marked bounded: it covers the enumerated updates
/// only.
pub fn oracle_se(p: &Program, q: &Program, mode: UpdateMode, budget: OracleBudget) -> Result<SeVerdict> {
    check_class(mode, p)?;
    check_class(mode, q)?;
    DeltaSpace::for_programs(mode, p, q, budget)?.search(p, q)
}

/// Answer sets of a program after each update of a [`Profiler`], in
/// canonical update order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile(Vec<u64>);

/// Evaluates whole program families against one materialized update space.
///
/// Two programs are indistinguishable within the space exactly when their
/// profiles are equal, and [`Profiler::first_difference`] reports the same
/// update [`oracle_se`] would.
#[derive(Debug, Clone)]
pub struct Profiler {
    space: DeltaSpace,
    deltas: Vec<Vec<usize>>,
}

impl Profiler {
    pub fn new(space: DeltaSpace) -> Result<Self> {
        if space.universe.len() > MAX_PROFILE_ATOMS {
            return Err(Error::TooManyAtoms(space.universe.len(), MAX_PROFILE_ATOMS));
        }
        if space.count > CANDIDATE_LIMIT {
            return Err(Error::BudgetTooLarge(space.count, CANDIDATE_LIMIT));
        }
        let mut deltas = Vec::with_capacity(space.count as usize);
        for k in 0..=space.max_rules {
            let mut level = Vec::new();
            space.for_each_of_size(k, &mut |d| level.push((space.body_size(d), d.to_vec())));
            level.sort_by_key(|(size, _)| *size);
            deltas.extend(level.into_iter().map(|(_, d)| d));
        }
        Ok(Profiler { space, deltas })
    }

    pub fn space(&self) -> &DeltaSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    pub fn profile(&self, program: &Program) -> Result<Profile> {
        self.space.check_program(program)?;
        let base = program.encode(&self.space.universe);
        let mut scratch = Vec::new();
        let mut sets = Vec::new();
        let fingerprints = self
            .deltas
            .iter()
            .map(|d| {
                self.space.answer_sets_after(&base, d, &mut scratch, &mut sets);
                sets.iter().fold(0u64, |m, &s| m | 1 << s)
            })
            .collect();
        Ok(Profile(fingerprints))
    }

    /// The canonically first update on which the profiles disagree.
    pub fn first_difference(&self, a: &Profile, b: &Profile) -> Option<Program> {
        let i = a.0.iter().zip(&b.0).position(|(x, y)| x != y)?;
        Some(self.space.delta_program(&self.deltas[i]))
    }

    /// Answer sets recorded in a profile for the `i`-th update.
    pub fn answer_sets_at(&self, profile: &Profile, i: usize) -> BTreeSet<BTreeSet<Atom>> {
        bits(profile.0[i])
            .map(|s| self.space.universe.decode(s as u64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_lp;
    use crate::symbol::{sym, syms};

    fn lp(text: &str) -> Program {
        parse_lp(text).unwrap()
    }

    fn budget(fresh_atoms: usize, max_rules: usize, max_body: usize, fresh_ids: usize) -> OracleBudget {
        OracleBudget {
            fresh_atoms,
            max_rules,
            max_body,
            fresh_ids,
        }
    }

    #[test]
    fn fresh_names_skip_used() {
        assert_eq!(fresh_names(&syms(["a", "b", "c"]), 2), vec![sym("d"), sym("e")]);
        let letters: BTreeSet<Atom> = ('a'..='z').map(|c| sym(&c.to_string())).collect();
        assert_eq!(fresh_names(&letters, 2), vec![sym("f1"), sym("f2")]);
    }

    #[test]
    fn neg_bodies_are_lexicographic() {
        assert_eq!(neg_bodies(3, 3), vec![0, 0b1, 0b11, 0b111, 0b101, 0b10, 0b110, 0b100]);
        assert_eq!(neg_bodies(3, 1), vec![0, 0b1, 0b10, 0b100]);
    }

    #[test]
    fn candidate_counts() {
        let atoms = syms(["a", "b", "c"]);
        let space = DeltaSpace::new(UpdateMode::Head, &atoms, &BTreeSet::new(), budget(1, 4, 4, 0)).unwrap();
        assert_eq!(space.candidate_count(), 17u128.pow(4));
        let ids: BTreeSet<RuleId> = [RuleId::new(1).unwrap(), RuleId::new(2).unwrap()].into();
        let space = DeltaSpace::new(UpdateMode::Id, &syms(["a", "b"]), &ids, budget(1, 3, 3, 1)).unwrap();
        assert_eq!(space.candidate_count(), 25u128.pow(3));
        let mut total = 0u128;
        for k in 0..=3 {
            space.for_each_of_size(k, &mut |_| total += 1);
        }
        assert_eq!(total, space.candidate_count());
    }

    #[test]
    fn budget_limit_is_enforced() {
        let p = lp("a :- not b. b :- not c. c :- not d. d :- not e. e :- not a.");
        let big = budget(3, 6, 8, 0);
        assert!(matches!(
            oracle_se(&p, &p, UpdateMode::Head, big),
            Err(Error::BudgetTooLarge(..))
        ));
    }

    #[test]
    fn identical_programs_are_bounded_equivalent() {
        let p = lp("a :- not b. b :- not a.");
        for mode in [UpdateMode::Union, UpdateMode::Head, UpdateMode::Id] {
            let v = oracle_se(&p, &p, mode, OracleBudget::default()).unwrap();
            assert!(v.is_equivalent() && v.is_bounded());
        }
    }

    #[test]
    fn head_mode_separates_refinement_pair() {
        let p = lp("a :- not b, not c. b :- not a, not c. c.");
        let q = lp("a :- not b, not c. b :- not c. c.");
        let v = oracle_se(&p, &q, UpdateMode::Head, budget(1, 2, 2, 0)).unwrap();
        let Some(Witness::Update {
            update, left, right, ..
        }) = v.witness()
        else {
            panic!("expected an update witness, got {v:?}");
        };
        assert_ne!(left, right);
        let r = lp("c :- not d. d.");
        let after = |x: &Program| answer_sets(&dynamics::head_update_program(x, &r).unwrap());
        assert!(after(&p).contains(&syms(["a", "d"])));
        assert!(!after(&q).contains(&syms(["a", "d"])));
        assert!(update.len() <= 2);
        assert!(oracle_se(&p, &q, UpdateMode::Union, budget(1, 2, 2, 0))
            .unwrap()
            .is_equivalent());
    }

    #[test]
    fn profiler_matches_streaming_search() {
        let programs = [
            "a :- not b.",
            "a :- not a.",
            "a.",
            "a :- not a, not b.",
            "b :- not a. a :- not b.",
        ];
        let atoms = syms(["a", "b"]);
        let space = DeltaSpace::new(UpdateMode::Head, &atoms, &BTreeSet::new(), budget(1, 2, 2, 0)).unwrap();
        let profiler = Profiler::new(space).unwrap();
        assert_eq!(profiler.len() as u128, profiler.space().candidate_count());
        for p in programs {
            for q in programs {
                let (p, q) = (lp(p), lp(q));
                let (pp, pq) = (profiler.profile(&p).unwrap(), profiler.profile(&q).unwrap());
                let v = profiler.space().search(&p, &q).unwrap();
                assert_eq!(v.is_equivalent(), pp == pq, "{p}\n{q}");
                let streamed = v.witness().and_then(|w| w.update()).map(|(_, u)| u.clone());
                assert_eq!(profiler.first_difference(&pp, &pq), streamed);
            }
        }
    }
}
