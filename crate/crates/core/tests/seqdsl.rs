use badc::badc::{expressiveness_cycle, Cycle, DoubleCycle, Kind, Layout};
use badc::network::Configuration;
use badc::seqdsl::{
    self, comp, comp1, comp2, copy, copy_p, exec, exec_with, fix0, fix1, parse, simp, CertificateStatus, ExecError,
    ExecOptions, Instruction, Program,
};
use proptest::prelude::*;

fn system(kind: Kind, n: usize, m: usize) -> DoubleCycle {
    DoubleCycle::canonical(kind, n, m).unwrap()
}

fn run(d: &DoubleCycle, start: &str, text: &str) -> String {
    let trace = exec(d, d.parse(start).unwrap(), &parse(text).unwrap()).unwrap();
    d.format(&trace.final_config)
}

#[test]
fn fix1_reaches_all_ones() {
    let d = system(Kind::Positive, 3, 3);
    let t = fix1(&d, d.parse("(011,010)").unwrap()).unwrap();
    assert_eq!(d.format(&t.final_config), "(111,111)");
    assert!(t.all_certified());
}

#[test]
fn fix0_reaches_all_zeros_within_bound() {
    let d = system(Kind::Positive, 3, 3);
    let t = fix0(&d, d.parse("(110,101)").unwrap()).unwrap();
    assert_eq!(d.format(&t.final_config), "(000,000)");
    assert!(t.effective <= 2 * 3 + 3 - 3);
}

#[test]
fn simp_reaches_zero_in_mixed_system() {
    let d = system(Kind::Mixed, 2, 2);
    let t = simp(&d, d.parse("(11,10)").unwrap()).unwrap();
    assert_eq!(d.format(&t.final_config), "(00,00)");
    assert!(t.all_certified());
}

#[test]
fn comp_macros_on_even_negative_systems() {
    let d = system(Kind::Negative, 4, 2);
    let l = d.layout();
    let x0 = d.parse("(1010,10)").unwrap();
    let t = comp1(&d, l.zeros()).unwrap();
    assert_eq!(d.format(&t.final_config), "(1010,11)");
    let t = comp(&d, l.zeros()).unwrap();
    assert_eq!(t.final_config, x0);
    assert!(t.all_certified());
    let t = comp2(&d, d.parse("(1010,11)").unwrap()).unwrap();
    assert_eq!(d.format(&t.final_config), "(1010,10)");
}

#[test]
fn copy_p_from_alternating_configuration() {
    let d = system(Kind::Negative, 4, 4);
    let t = copy_p(&d, d.parse("(1010,1010)").unwrap(), &d.parse("(0000,0000)").unwrap()).unwrap();
    assert_eq!(d.format(&t.final_config), "(0000,0000)");
}

#[test]
fn sigma_round_trip() {
    let d = system(Kind::Negative, 3, 2);
    let (x0, x1) = seqdsl::sigma_forms(&d.layout()).unwrap();
    let forward = seqdsl::sigma_a(&d, x0).unwrap();
    assert_eq!(forward.final_config, x1);
    let back = seqdsl::sigma_a_inv(&d, x1).unwrap();
    assert_eq!(back.final_config, x0);
}

#[test]
fn primitive_examples() {
    let d = system(Kind::Positive, 4, 2);
    assert_eq!(run(&d, "(1000,10)", "erase L"), "(1111,10)");
    assert_eq!(run(&d, "(1000,10)", "incUp L 2 1"), "(1000,10)");
    assert_eq!(run(&d, "(0100,00)", "shift L"), "(0010,00)");
    let d = system(Kind::Negative, 2, 2);
    assert_eq!(run(&d, "(00,00)", "sync"), "(10,10)");
}

#[test]
fn macro_kind_is_checked() {
    let d = system(Kind::Negative, 3, 3);
    let err = fix0(&d, d.layout().zeros()).unwrap_err();
    assert!(matches!(err, ExecError::WrongKind { .. }));
}

#[test]
fn strict_expand_rejects_undefined_kappa() {
    let d = system(Kind::Positive, 3, 3);
    let x = d.parse("(000,000)").unwrap();
    let program = parse("expand L").unwrap();
    let lenient = exec(&d, x, &program).unwrap();
    assert_eq!(lenient.final_config, x);
    assert!(!lenient.annotations.is_empty());
    let strict = exec_with(&d, x, &program, ExecOptions { strict_expand: true });
    assert!(matches!(strict, Err(ExecError::UndefinedKappa { .. })));
}

#[test]
fn program_text_round_trips() {
    let text = "sync\nupdate L 2\nincUp R 1 3\ndecUp L 1 2\nerase R\nexpand L\nshift R\ncopy (10,01)\ncomp_bit 1\nsigma_b_inv\n";
    let program = parse(text).unwrap();
    assert_eq!(program.to_string(), text);
    assert_eq!(parse(&program.to_string()).unwrap(), program);
}

#[test]
fn copy_lands_on_every_target_at_six() {
    // Sources alternate fully, so every target with a matching hub qualifies.
    let d = system(Kind::Negative, 6, 6);
    let l = d.layout();
    let sources = [d.parse("(010101,010101)").unwrap(), d.parse("(101010,101010)").unwrap()];
    for bits in (0..1u64 << l.automata()).step_by(97) {
        let target = Configuration::from_bits(bits, l.automata()).unwrap();
        let source = sources[usize::from(target.get(0))];
        let t = copy(&d, source, &target).unwrap();
        assert_eq!(t.final_config, target);
        assert_ne!(t.certificates[0].status, CertificateStatus::Uncertified);
    }
}

fn word_strategy(max: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 1..=max)
}

fn setup() -> impl Strategy<Value = (Kind, Vec<bool>, Vec<bool>, bool)> {
    (
        prop_oneof![Just(Kind::Positive), Just(Kind::Mixed), Just(Kind::Negative)],
        word_strategy(7),
        word_strategy(7),
        any::<bool>(),
    )
}

fn build(kind: Kind, left: &[bool], right: &[bool], hub: bool) -> (DoubleCycle, Layout, Configuration) {
    let d = system(kind, left.len() + 1, right.len() + 1);
    let l = d.layout();
    let mut lw = vec![hub];
    lw.extend_from_slice(left);
    let mut rw = vec![hub];
    rw.extend_from_slice(right);
    let x = l.pair(lw, rw).unwrap();
    (d, l, x)
}

fn cycle_strategy() -> impl Strategy<Value = Cycle> {
    prop_oneof![Just(Cycle::Left), Just(Cycle::Right)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn only_sync_changes_the_hub((kind, left, right, hub) in setup(), cycle in cycle_strategy(), a in 1usize..8, b in 1usize..8, op in 0usize..6) {
        let (d, l, x) = build(kind, &left, &right, hub);
        let size = l.size(cycle);
        let (i, j) = (1 + a % (size - 1).max(1), 1 + b % (size - 1).max(1));
        prop_assume!(size > 1);
        let ins = match op {
            0 => Instruction::Update(cycle, i),
            1 => Instruction::IncUp(cycle, i, j),
            2 => Instruction::DecUp(cycle, i, j),
            3 => Instruction::Erase(cycle),
            4 => Instruction::Expand(cycle),
            _ => Instruction::Shift(cycle),
        };
        let t = exec(&d, x, &Program::new(vec![ins])).unwrap();
        prop_assert_eq!(t.final_config.get(0), x.get(0));
        let other = cycle.other();
        prop_assert_eq!(l.word(&t.final_config, other), l.word(&x, other));
        prop_assert_eq!(t.replay(), t.final_config);
        prop_assert!(t.effective <= t.attempted);
    }

    #[test]
    fn erase_shift_expand_and_expressiveness((kind, left, right, hub) in setup(), cycle in cycle_strategy()) {
        let (d, l, x) = build(kind, &left, &right, hub);
        let before = expressiveness_cycle(&l.word(&x, cycle));
        let after = |text: &str| {
            let t = exec(&d, x, &parse(&format!("{text} {cycle}")).unwrap()).unwrap();
            expressiveness_cycle(&l.word(&t.final_config, cycle))
        };
        prop_assert_eq!(after("erase"), 0);
        let shifted = after("shift");
        prop_assert!(shifted <= before && before <= shifted + 1);
        prop_assert!(after("expand") >= before);
    }

    #[test]
    fn range_updates_match_direct_construction((kind, left, right, hub) in setup(), cycle in cycle_strategy(), a in 1usize..8, b in 1usize..8) {
        let (d, l, x) = build(kind, &left, &right, hub);
        let size = l.size(cycle);
        prop_assume!(size > 1);
        let (i, j) = (1 + a % (size - 1), 1 + b % (size - 1));
        let w = l.word(&x, cycle);

        let mut inc = w.clone();
        let mut dec = w.clone();
        for k in i..=j {
            inc[k] = w[i - 1];
            dec[k] = w[k - 1];
        }
        let result = |text: String| {
            let t = exec(&d, x, &parse(&text).unwrap()).unwrap();
            l.word(&t.final_config, cycle)
        };
        prop_assert_eq!(result(format!("incUp {cycle} {i} {j}")), inc);
        prop_assert_eq!(result(format!("decUp {cycle} {i} {j}")), dec);
    }

    #[test]
    fn replay_is_deterministic((kind, left, right, hub) in setup(), ops in prop::collection::vec((0usize..4, cycle_strategy()), 0..12)) {
        let (d, _, x) = build(kind, &left, &right, hub);
        let instructions = ops.into_iter().map(|(op, c)| match op {
            0 => Instruction::Sync,
            1 => Instruction::Erase(c),
            2 => Instruction::Shift(c),
            _ => Instruction::Expand(c),
        }).collect();
        let program = Program::new(instructions);
        let a = exec(&d, x, &program).unwrap();
        let b = exec(&d, x, &program).unwrap();
        prop_assert_eq!(a.replay(), a.final_config);
        prop_assert_eq!(a.to_json(&d.layout()), b.to_json(&d.layout()));
    }
}
