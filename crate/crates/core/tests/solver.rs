use dyck_core::bruteforce::bf_find_wrong;
use dyck_core::generate::gen_balanced;
use dyck_core::model::{balance, classical_check, BracketString, DyckParams, Verdict};
use dyck_core::quantum::check::check_substr;
use dyck_core::quantum::Tape;
use dyck_core::{solve, QuerySim, SolverOptions, Stage, Step1Mode, SubroutineModel};
use proptest::prelude::*;

fn sim(seed: u64) -> QuerySim {
    QuerySim::new(SubroutineModel::default().with_seed(seed))
}

fn word(max_len: usize, types: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=2 * types, 1..=max_len)
}

#[test]
fn check_substr_finds_wrong_pairs_at_least_half_the_time() {
    let fixtures: [(&[u32], usize); 4] = [
        (&[1, 3, 4, 4], 2),
        (&[1, 1, 2, 4], 2),
        (&[3, 1, 1, 2, 2, 2], 3),
        (&[1, 2, 3, 1, 3, 4, 2, 2, 1, 2], 3),
    ];
    for (codes, v) in fixtures {
        let s = BracketString::from_codes(codes).unwrap();
        assert!(bf_find_wrong(&s, v).is_some());
        assert!((1..v).all(|u| bf_find_wrong(&s, u).is_none()));
        let tape = Tape::new(&s);
        let runs = 10_000;
        let hits = (0..runs)
            .filter(|&seed| check_substr(&mut sim(seed), &tape, v, true).wrong.is_some())
            .count();
        assert!(hits * 2 >= runs as usize, "{codes:?}: {hits}/{runs}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reported_pairs_are_mismatched_zero_substrings(w in word(40, 3), v in 1usize..5, seed in any::<u64>()) {
        let s = BracketString::new(&w, 3).unwrap();
        let out = check_substr(&mut sim(seed), &Tape::new(&s), v, true);
        if let Some((i, j)) = out.wrong {
            prop_assert!(i < j && j <= s.len());
            prop_assert!(s.at(i).is_open() && !s.at(j).is_open());
            prop_assert_ne!(s.at(i).type_id(), s.at(j).type_id());
            prop_assert_eq!(balance(&s, i, j).unwrap(), 0);
        }
    }

    #[test]
    fn valid_words_are_always_accepted(
        half in 1usize..100,
        k in 1usize..5,
        t in 1u32..5,
        seed in any::<u64>(),
        general in any::<bool>(),
    ) {
        let s = gen_balanced(2 * half, k, t, seed).unwrap();
        let p = DyckParams::new(k, t, s.len()).unwrap();
        let opts = SolverOptions {
            step1: if general { Step1Mode::General } else { Step1Mode::Bounded },
            ..Default::default()
        };
        prop_assert_eq!(solve(&mut sim(seed), &s, &p, &opts), Verdict::Accept);
    }

    #[test]
    fn ledger_breakdown_sums_to_total(w in word(64, 3), k in 1usize..5, t in 1u32..4, seed in any::<u64>()) {
        let s = BracketString::new(&w, 3).unwrap();
        let p = DyckParams::new(k, t, s.len()).unwrap();
        let mut sim = sim(seed);
        let mut last = 0;
        for _ in 0..3 {
            solve(&mut sim, &s, &p, &SolverOptions::default());
            let l = sim.ledger;
            prop_assert!(l.total() >= last);
            last = l.total();
            prop_assert_eq!(l.total(), l.get(Stage::Step1) + l.get(Stage::Step2) + l.get(Stage::Step3));
        }
    }

    #[test]
    fn rejections_are_never_spurious(w in word(24, 2), k in 1usize..5, seed in any::<u64>()) {
        let s = BracketString::new(&w, 2).unwrap();
        let p = DyckParams::new(k, 2, s.len()).unwrap();
        if solve(&mut sim(seed), &s, &p, &SolverOptions::default()) == Verdict::Reject {
            prop_assert_eq!(classical_check(&s, &p), Verdict::Reject);
        }
    }
}
