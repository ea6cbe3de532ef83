//! Algebraic laws of the translations and updates on random instances.

use lpaf::af::{self, restrict, stable_extensions, stable_kernel};
use lpaf::caf::{caf_union, induced_af, stable_claim_extensions};
use lpaf::dynamics::{head_update, head_update_program, id_update, id_update_program};
use lpaf::equivalence::{kernel_sanity_with, lp_kernel};
use lpaf::format::{parse_af, parse_caf, parse_lp, Format};
use lpaf::generate::{claim_framework, framework, program, ClassFlags, RandomSpec};
use lpaf::lp::{answer_sets, strict_projection};
use lpaf::translate::{af_to_lp, caf_to_lp, lp_to_af, lp_to_caf};
use lpaf::{ArgFramework, ClaimFramework, Program, Rule};
use proptest::prelude::*;

fn spec(kind: Format, flags: ClassFlags) -> impl Strategy<Value = RandomSpec> {
    (any::<u64>(), 1usize..=5, 0.0f64..=0.6).prop_map(move |(seed, size, density)| RandomSpec {
        kind,
        size,
        density,
        flags,
        seed,
    })
}

const ATOMIC: ClassFlags = ClassFlags {
    atomic: true,
    strict: false,
    h_unique: false,
};

const XI: ClassFlags = ClassFlags {
    atomic: true,
    strict: false,
    h_unique: true,
};

fn any_program() -> impl Strategy<Value = Program> {
    let flags = (any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(atomic, strict, h_unique)| ClassFlags {
        atomic,
        strict,
        h_unique,
    });
    flags
        .prop_flat_map(|f| spec(Format::Lp, f))
        .prop_map(|s| program(&s).unwrap())
}

fn programs(flags: ClassFlags) -> impl Strategy<Value = Program> {
    spec(Format::Lp, flags).prop_map(|s| program(&s).unwrap())
}

fn frameworks() -> impl Strategy<Value = ArgFramework> {
    (any::<bool>(), any::<u64>(), 1usize..=5, 0.0f64..=0.6).prop_map(|(strict, seed, size, density)| {
        framework(&RandomSpec {
            kind: Format::Af,
            size,
            density,
            flags: ClassFlags {
                strict,
                ..Default::default()
            },
            seed,
        })
        .unwrap()
    })
}

fn claim_frameworks() -> impl Strategy<Value = ClaimFramework> {
    spec(Format::Caf, ClassFlags::default()).prop_map(|s| claim_framework(&s).unwrap())
}

/// Rules of `delta` in the given order, ready for a manual fold.
fn permuted(delta: &Program, order: &[usize]) -> Vec<Rule> {
    let rules: Vec<Rule> = delta.rules().cloned().collect();
    order
        .iter()
        .filter(|&&i| i < rules.len())
        .map(|&i| rules[i].clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rendering_round_trips(p in any_program(), f in frameworks(), c in claim_frameworks()) {
        prop_assert_eq!(parse_lp(&p.to_string()).unwrap(), p);
        prop_assert_eq!(parse_af(&f.to_string()).unwrap(), f);
        prop_assert_eq!(parse_caf(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn translation_round_trips(f in frameworks(), p in programs(XI), q in programs(ATOMIC), c in claim_frameworks()) {
        prop_assert_eq!(lp_to_af(&af_to_lp(&f)).unwrap(), f);
        prop_assert!(af_to_lp(&lp_to_af(&p).unwrap()).same_rules_ignoring_ids(&p));
        prop_assert_eq!(caf_to_lp(&lp_to_caf(&q).unwrap()).unwrap(), q);
        prop_assert_eq!(lp_to_caf(&caf_to_lp(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn semantics_agree_across_translations(f in frameworks(), p in programs(XI), q in programs(ATOMIC), c in claim_frameworks()) {
        prop_assert_eq!(stable_extensions(&f), answer_sets(&af_to_lp(&f)));
        prop_assert_eq!(answer_sets(&p), stable_extensions(&lp_to_af(&p).unwrap()));
        prop_assert_eq!(answer_sets(&q), stable_claim_extensions(&lp_to_caf(&q).unwrap()));
        prop_assert_eq!(stable_claim_extensions(&c), answer_sets(&caf_to_lp(&c).unwrap()));
    }

    #[test]
    fn updates_distribute_over_translations(
        p in programs(XI), q in programs(XI), r in programs(ATOMIC), s in programs(ATOMIC),
        f in frameworks(), g in frameworks(),
    ) {
        let pq = head_update_program(&p, &q).unwrap();
        prop_assert_eq!(lp_to_af(&pq).unwrap(), af::union(&lp_to_af(&p).unwrap(), &lp_to_af(&q).unwrap()));
        let fg = af_to_lp(&af::union(&f, &g));
        prop_assert_eq!(fg, head_update_program(&af_to_lp(&f), &af_to_lp(&g)).unwrap());
        let rs = id_update_program(&r, &s).unwrap();
        prop_assert_eq!(lp_to_caf(&rs).unwrap(), caf_union(&lp_to_caf(&r).unwrap(), &lp_to_caf(&s).unwrap()));
        let (cr, cs) = (lp_to_caf(&r).unwrap(), lp_to_caf(&s).unwrap());
        prop_assert_eq!(caf_to_lp(&caf_union(&cr, &cs)).unwrap(), rs);
    }

    #[test]
    fn updates_keep_heads_and_ids(p in programs(XI), q in programs(XI), r in programs(ATOMIC), s in programs(ATOMIC)) {
        let pq = head_update_program(&p, &q).unwrap();
        prop_assert!(pq.is_h_unique() && pq.is_atomic());
        prop_assert_eq!(pq.heads(), p.heads().union(&q.heads()).cloned().collect());
        let rs = id_update_program(&r, &s).unwrap();
        prop_assert!(rs.is_atomic());
        prop_assert_eq!(rs.ids(), r.ids().union(&s.ids()).copied().collect());
    }

    #[test]
    fn folds_are_order_independent(
        p in programs(XI), q in programs(ATOMIC), r in programs(ATOMIC),
        order in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let folded = permuted(&q, &order)
            .iter()
            .fold(p.with_head_rank_ids().unwrap(), |acc, rule| head_update(&acc, rule).unwrap());
        prop_assert_eq!(folded, head_update_program(&p, &q).unwrap());
        let folded = permuted(&q, &order)
            .iter()
            .fold(r.clone(), |acc, rule| id_update(&acc, rule).unwrap());
        prop_assert_eq!(folded, id_update_program(&r, &q).unwrap());
    }

    #[test]
    fn projection_commutes_and_preserves_answer_sets(p in programs(ATOMIC), q in programs(XI)) {
        prop_assert_eq!(answer_sets(&p), answer_sets(&strict_projection(&p).unwrap()));
        let projected = strict_projection(&q).unwrap();
        prop_assert_eq!(lp_to_af(&projected).unwrap(), restrict(&lp_to_af(&q).unwrap()));
    }

    #[test]
    fn kernel_laws(p in programs(XI), seed in any::<u64>()) {
        let k = lp_kernel(&p).unwrap();
        prop_assert_eq!(answer_sets(&p), answer_sets(&k));
        prop_assert_eq!(stable_kernel(&lp_to_af(&p).unwrap()), lp_to_af(&k).unwrap());
        prop_assert!(kernel_sanity_with(&p, 4, seed).unwrap().all_pass());
    }

    #[test]
    fn framework_laws(f in frameworks(), g in frameworks(), h in frameworks()) {
        let stb = stable_extensions(&f);
        prop_assert_eq!(&stb, &stable_extensions(&restrict(&f)));
        prop_assert_eq!(&stb, &stable_extensions(&stable_kernel(&f)));
        prop_assert_eq!(stable_kernel(&stable_kernel(&f)), stable_kernel(&f));
        prop_assert_eq!(af::union(&f, &g), af::union(&g, &f));
        prop_assert_eq!(af::union(&f, &f), f.clone());
        prop_assert_eq!(af::union(&af::union(&f, &g), &h), af::union(&f, &af::union(&g, &h)));
    }

    #[test]
    fn claim_framework_laws(c in claim_frameworks(), d in claim_frameworks(), e in claim_frameworks()) {
        prop_assert_eq!(caf_union(&caf_union(&c, &d), &e), caf_union(&c, &caf_union(&d, &e)));
        prop_assert_eq!(caf_union(&c, &c), c.clone());
        // Equally labelled arguments attack the same arguments.
        let af = induced_af(&c).unwrap();
        for (x, cx) in c.labels() {
            for (y, cy) in c.labels() {
                if cx == cy {
                    let out = |a| af.attacks().iter().filter(|(s, _)| s == a).map(|(_, t)| t.clone()).collect::<Vec<_>>();
                    prop_assert_eq!(out(x), out(y));
                }
            }
        }
    }
}
