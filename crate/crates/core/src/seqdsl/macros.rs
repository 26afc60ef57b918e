//! Named sequences built from the elementary instructions. Each top-level
//! macro call appends a certificate stating whether its documented
//! postcondition was observed.

use super::exec::{run_macro, Machine};
use super::{Certificate, CertificateStatus, ExecError, Macro, PairLiteral, Trace};
use crate::badc::{alternating, constant, Cycle, DoubleCycle, Kind, Layout};
use crate::network::Configuration;

/// Which of the three structural conditions lets `copy_c` rebuild a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopyProperty {
    /// The whole cycle alternates.
    Alternating,
    /// All but the last position alternate and the last already matches.
    LastMatches,
    /// All but the last position alternate and some inner position differs.
    InnerDiffers,
}

/// First copy property satisfied by cycle `cycle` of `x` with respect to
/// `target`, if any.
pub fn copy_property(layout: &Layout, x: &Configuration, target: &Configuration, cycle: Cycle) -> Option<CopyProperty> {
    let w = layout.word(x, cycle);
    let t = layout.word(target, cycle);
    let s = w.len();
    if s < 2 {
        return Some(CopyProperty::Alternating);
    }
    let alternates_to = |end: usize| (1..=end).all(|i| w[i] != w[i - 1]);
    if alternates_to(s - 1) {
        Some(CopyProperty::Alternating)
    } else if alternates_to(s.saturating_sub(2)) && w[s - 1] == t[s - 1] {
        Some(CopyProperty::LastMatches)
    } else if alternates_to(s.saturating_sub(2)) && (1..s - 1).any(|p| w[p] != t[p]) {
        Some(CopyProperty::InnerDiffers)
    } else {
        None
    }
}

/// The two most expressive configurations related by the σ sequences when at
/// least one cycle has odd size, as `(x0, x1)`. `None` when both are even.
pub fn sigma_forms(layout: &Layout) -> Option<(Configuration, Configuration)> {
    let (n, m) = (layout.n, layout.m);
    let odd_tail = |first: bool, len: usize, last: bool| {
        let mut w = alternating(first, len - 1);
        w.push(last);
        w
    };
    let pair = |l: Vec<bool>, r: Vec<bool>| layout.pair(l, r).expect("forms match the layout");
    match (n % 2 == 1, m % 2 == 1) {
        (true, false) => Some((
            pair(odd_tail(false, n, false), alternating(false, m)),
            pair(odd_tail(true, n, false), alternating(true, m)),
        )),
        (false, true) => Some((
            pair(alternating(false, n), odd_tail(false, m, false)),
            pair(alternating(true, n), odd_tail(true, m, false)),
        )),
        (true, true) => Some((
            pair(odd_tail(false, n, true), odd_tail(false, m, false)),
            pair(odd_tail(true, n, false), odd_tail(true, m, false)),
        )),
        (false, false) => None,
    }
}

fn require_canonical(mc: &Machine<'_>, name: &'static str) -> Result<(), ExecError> {
    if !mc.system.is_canonical() {
        return Err(ExecError::NotCanonical { name });
    }
    let Layout { n, m } = mc.layout;
    if n < 2 || m < 2 {
        return Err(ExecError::CyclesTooSmall { name, n, m });
    }
    Ok(())
}

fn require_kind(
    mc: &Machine<'_>,
    name: &'static str,
    allowed: &[Kind],
    expected: &'static str,
) -> Result<(), ExecError> {
    require_canonical(mc, name)?;
    let found = mc.system.kind();
    if !allowed.contains(&found) {
        return Err(ExecError::WrongKind { name, expected, found });
    }
    Ok(())
}

fn precondition(name: &'static str, reason: impl Into<String>) -> ExecError {
    ExecError::Precondition {
        name,
        reason: reason.into(),
    }
}

fn min_position(mc: &Machine<'_>, cycle: Cycle, value: bool) -> Option<usize> {
    (1..mc.size(cycle)).find(|&k| mc.bit(cycle, k) == value)
}

fn copy_c_body(mc: &mut Machine<'_>, target: &Configuration, cycle: Cycle) -> Result<(), ExecError> {
    let s = mc.size(cycle);
    if s < 2 {
        return Ok(());
    }
    let goal = mc.layout.word(target, cycle);
    let j = if mc.bit(cycle, s - 1) == mc.bit(cycle, s - 2) && mc.bit(cycle, s - 1) != goal[s - 1] {
        (1..s - 1)
            .rev()
            .find(|&k| mc.bit(cycle, k) != goal[k])
            .ok_or(ExecError::EmptyCopySet { cycle })?
    } else {
        s
    };
    for k in (j + 1..s).rev() {
        mc.update(cycle, k - 1)?;
        mc.update(cycle, k)?;
    }
    for k in (1..j).rev() {
        if mc.bit(cycle, k) != goal[k] {
            mc.update(cycle, k)?;
        }
    }
    Ok(())
}

fn copy_body(mc: &mut Machine<'_>, target: &Configuration) -> Result<(), ExecError> {
    copy_c_body(mc, target, Cycle::Left)?;
    copy_c_body(mc, target, Cycle::Right)
}

fn copy_p_body(mc: &mut Machine<'_>, target: &Configuration) -> Result<(), ExecError> {
    if mc.hub() != target.get(0) {
        mc.shift(Cycle::Left)?;
        mc.shift(Cycle::Right)?;
        mc.sync();
    }
    copy_body(mc, target)
}

/// Runs fix0 and returns the bound matching the variant that ran.
fn fix0_body(mc: &mut Machine<'_>) -> Result<i64, ExecError> {
    let Layout { n, m } = mc.layout;
    let (n, m) = (n as i64, m as i64);
    let mut bound = 2 * n + m - 3;
    if mc.hub() {
        if let Some(i) = min_position(mc, Cycle::Left, false) {
            mc.inc_up(Cycle::Left, i + 1, mc.size(Cycle::Left) - 1)?;
        } else if let Some(j) = min_position(mc, Cycle::Right, false) {
            mc.note("fix0: the left cycle holds no 0, running the mirrored sequence on the right cycle");
            mc.inc_up(Cycle::Right, j + 1, mc.size(Cycle::Right) - 1)?;
            bound = 2 * m + n - 3;
        } else {
            return Err(precondition("fix0", "no automaton is at 0"));
        }
        mc.sync();
    }
    mc.erase(Cycle::Left)?;
    mc.erase(Cycle::Right)?;
    Ok(bound)
}

fn fix1_body(mc: &mut Machine<'_>) -> Result<(), ExecError> {
    if !mc.hub() {
        let i = min_position(mc, Cycle::Left, true);
        let j = min_position(mc, Cycle::Right, true);
        let (Some(i), Some(j)) = (i, j) else {
            return Err(precondition("fix1", "both cycles need an automaton at 1"));
        };
        mc.inc_up(Cycle::Left, i + 1, mc.size(Cycle::Left) - 1)?;
        mc.inc_up(Cycle::Right, j + 1, mc.size(Cycle::Right) - 1)?;
        mc.sync();
    }
    mc.erase(Cycle::Left)?;
    mc.erase(Cycle::Right)
}

fn simp_body(mc: &mut Machine<'_>) -> Result<(), ExecError> {
    if mc.hub() {
        mc.erase(Cycle::Left)?;
        mc.sync();
    }
    mc.erase(Cycle::Left)?;
    mc.erase(Cycle::Right)
}

fn comp1_body(mc: &mut Machine<'_>) -> Result<(), ExecError> {
    for _ in 1..mc.size(Cycle::Left) {
        mc.sync();
        mc.expand(Cycle::Left)?;
        mc.erase(Cycle::Right)?;
    }
    Ok(())
}

fn comp2_body(mc: &mut Machine<'_>) -> Result<(), ExecError> {
    if mc.word(Cycle::Right).iter().all(|&b| b) {
        mc.sync();
        mc.erase(Cycle::Right)?;
    }
    mc.sync();
    mc.expand(Cycle::Right)?;
    for _ in 1..mc.size(Cycle::Right).saturating_sub(1) {
        mc.shift(Cycle::Left)?;
        mc.sync();
        mc.expand(Cycle::Right)?;
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Sigma {
    A,
    AInv,
    B,
    BInv,
}

fn sigma_body(mc: &mut Machine<'_>, which: Sigma) -> Result<(), ExecError> {
    let Layout { n, m } = mc.layout;
    let (odd_l, odd_r) = (n % 2 == 1, m % 2 == 1);
    let name = match which {
        Sigma::A => "sigma_a",
        Sigma::AInv => "sigma_a_inv",
        Sigma::B => "sigma_b",
        Sigma::BInv => "sigma_b_inv",
    };
    match which {
        Sigma::A | Sigma::AInv if odd_l == odd_r => {
            return Err(precondition(name, "needs exactly one cycle of odd size"))
        }
        Sigma::B | Sigma::BInv if !(odd_l && odd_r) => return Err(precondition(name, "needs both cycles of odd size")),
        _ => {}
    }
    mc.shift(Cycle::Left)?;
    mc.shift(Cycle::Right)?;
    match which {
        Sigma::A if odd_l => mc.update(Cycle::Left, n - 1)?,
        Sigma::A => mc.update(Cycle::Right, m - 1)?,
        Sigma::B => {
            mc.update(Cycle::Left, n - 1)?;
            mc.update(Cycle::Right, m - 1)?;
        }
        Sigma::BInv => mc.update(Cycle::Left, n - 1)?,
        Sigma::AInv => {}
    }
    mc.sync();
    Ok(())
}

fn comp_bit_body(mc: &mut Machine<'_>, b: bool) -> Result<(), ExecError> {
    comp1_body(mc)?;
    comp2_body(mc)?;
    if b {
        let Layout { n, m } = mc.layout;
        match (n % 2 == 1, m % 2 == 1) {
            (false, false) => mc.note("comp_bit: both cycles are even, no σ sequence is appended"),
            (true, true) => sigma_body(mc, Sigma::B)?,
            _ => sigma_body(mc, Sigma::A)?,
        }
    }
    Ok(())
}

struct Outcome {
    status: CertificateStatus,
    detail: String,
}

fn uncertified(reason: impl Into<String>) -> Outcome {
    Outcome {
        status: CertificateStatus::Uncertified,
        detail: reason.into(),
    }
}

/// Compares the landing configuration (and optionally the effective count)
/// with the documented postcondition.
fn judge(mc: &Machine<'_>, expected: &Configuration, effective: usize, bound: Option<i64>) -> Outcome {
    let landed = mc.x == *expected;
    let within = bound.is_none_or(|b| (effective as i64) <= b);
    let mut detail = format!(
        "expected {}, reached {}, {effective} effective",
        mc.layout.format(expected),
        mc.layout.format(&mc.x)
    );
    if let Some(b) = bound {
        detail.push_str(&format!(" (bound {b})"));
    }
    Outcome {
        status: if landed && within {
            CertificateStatus::Met
        } else {
            CertificateStatus::Violated
        },
        detail,
    }
}

fn property_label(p: Option<CopyProperty>) -> &'static str {
    match p {
        Some(CopyProperty::Alternating) => "alternating",
        Some(CopyProperty::LastMatches) => "last position already matches",
        Some(CopyProperty::InnerDiffers) => "an inner position differs",
        None => "none",
    }
}

fn copy_preconditions(mc: &Machine<'_>, target: &Configuration, cycles: &[Cycle]) -> Result<(), String> {
    if mc.hub() != target.get(0) {
        return Err("the hub state differs from the target".into());
    }
    for &cycle in cycles {
        if copy_property(&mc.layout, &mc.x, target, cycle).is_none() {
            return Err(format!("the {cycle} cycle satisfies none of the copy properties"));
        }
    }
    Ok(())
}

fn both_alternating(layout: &Layout, x: &Configuration) -> bool {
    [Cycle::Left, Cycle::Right].iter().all(|&c| {
        let w = layout.word(x, c);
        w.windows(2).all(|p| p[0] != p[1])
    })
}

fn half_alternating_word(layout: &Layout, ones_right: bool) -> Configuration {
    let right = if ones_right {
        constant(true, layout.m)
    } else {
        alternating(true, layout.m)
    };
    layout
        .pair(alternating(true, layout.n), right)
        .expect("forms match the layout")
}

/// Executes one macro call against the live machine.
pub(crate) fn run(mc: &mut Machine<'_>, m: &Macro) -> Result<(), ExecError> {
    let name = m.name();
    let start = mc.x;
    let effective_before = mc.trace.effective;
    let layout = mc.layout;
    let (n, mm) = (layout.n as i64, layout.m as i64);
    let even = layout.n.is_multiple_of(2) && layout.m.is_multiple_of(2);
    let is_zero = start == layout.zeros();
    let outcome = match m {
        Macro::CopyC { cycle, target } => {
            require_canonical(mc, name)?;
            let target = target.resolve(&layout)?;
            let pre = copy_preconditions(mc, &target, &[*cycle]);
            copy_c_body(mc, &target, *cycle)?;
            match pre {
                Err(reason) => uncertified(reason),
                Ok(()) => {
                    let mut expected = mc.x;
                    for k in 1..layout.size(*cycle) {
                        let i = layout.index(*cycle, k);
                        expected = expected.with(i, target.get(i));
                    }
                    let e = mc.trace.effective - effective_before;
                    judge(mc, &expected, e, None)
                }
            }
        }
        Macro::Copy { target } => {
            require_canonical(mc, name)?;
            let target = target.resolve(&layout)?;
            let pre = copy_preconditions(mc, &target, &[Cycle::Left, Cycle::Right]);
            let props = format!(
                "left: {}, right: {}",
                property_label(copy_property(&layout, &start, &target, Cycle::Left)),
                property_label(copy_property(&layout, &start, &target, Cycle::Right))
            );
            copy_body(mc, &target)?;
            match pre {
                Err(reason) => uncertified(format!("{reason} ({props})")),
                Ok(()) => {
                    let e = mc.trace.effective - effective_before;
                    let mut o = judge(mc, &target, e, Some(2 * (n + mm - 6)));
                    o.detail.push_str(&format!("; {props}"));
                    o
                }
            }
        }
        Macro::CopyP { target } => {
            require_canonical(mc, name)?;
            let target = target.resolve(&layout)?;
            copy_p_body(mc, &target)?;
            if mc.system.kind() != Kind::Negative || !even {
                uncertified("certified only on negative double-cycles with two even cycles")
            } else if !both_alternating(&layout, &start) {
                uncertified("the start configuration is not alternating in both cycles")
            } else {
                let e = mc.trace.effective - effective_before;
                judge(mc, &target, e, Some(3 * (n + mm - 4) - 1))
            }
        }
        Macro::Fix0 => {
            require_kind(mc, name, &[Kind::Positive], "positive")?;
            let bound = fix0_body(mc)?;
            let e = mc.trace.effective - effective_before;
            judge(mc, &layout.zeros(), e, Some(bound))
        }
        Macro::Fix1 => {
            require_kind(mc, name, &[Kind::Positive], "positive")?;
            fix1_body(mc)?;
            let e = mc.trace.effective - effective_before;
            judge(mc, &layout.ones(), e, Some(2 * (n + mm) - 5))
        }
        Macro::Simp => {
            require_kind(mc, name, &[Kind::Mixed, Kind::Negative], "mixed or negative")?;
            simp_body(mc)?;
            let e = mc.trace.effective - effective_before;
            judge(mc, &layout.zeros(), e, Some(2 * n + mm - 2))
        }
        Macro::Comp1 => {
            require_kind(mc, name, &[Kind::Negative], "negative")?;
            comp1_body(mc)?;
            if !is_zero {
                uncertified("the start configuration is not all zeros")
            } else if layout.n % 2 == 1 {
                uncertified("the left cycle has odd size")
            } else {
                let e = mc.trace.effective - effective_before;
                judge(
                    mc,
                    &half_alternating_word(&layout, true),
                    e,
                    Some((n - 1) * (n + mm - 2)),
                )
            }
        }
        Macro::Comp2 => {
            require_kind(mc, name, &[Kind::Negative], "negative")?;
            comp2_body(mc)?;
            if !even {
                uncertified("a cycle has odd size")
            } else if start != half_alternating_word(&layout, true) {
                uncertified("the start configuration is not the comp1 landing configuration")
            } else {
                let e = mc.trace.effective - effective_before;
                judge(
                    mc,
                    &half_alternating_word(&layout, false),
                    e,
                    Some((mm - 2) * (n + mm - 2) + (2 * mm - 1)),
                )
            }
        }
        Macro::Comp => {
            require_kind(mc, name, &[Kind::Negative], "negative")?;
            comp1_body(mc)?;
            comp2_body(mc)?;
            if !is_zero {
                uncertified("the start configuration is not all zeros")
            } else if !even {
                uncertified("a cycle has odd size")
            } else {
                let e = mc.trace.effective - effective_before;
                let bound = (n + mm) * (n + mm) - 5 * (n - 1) - 3 * mm;
                judge(mc, &half_alternating_word(&layout, false), e, Some(bound))
            }
        }
        Macro::CompBit(b) => {
            require_kind(mc, name, &[Kind::Negative], "negative")?;
            comp_bit_body(mc, *b)?;
            if !is_zero {
                uncertified("the start configuration is not all zeros")
            } else {
                match sigma_forms(&layout) {
                    None => {
                        let e = mc.trace.effective - effective_before;
                        let bound = (n + mm) * (n + mm) - 5 * (n - 1) - 3 * mm;
                        judge(mc, &half_alternating_word(&layout, false), e, Some(bound))
                    }
                    Some((x0, x1)) => {
                        let e = mc.trace.effective - effective_before;
                        judge(mc, if *b { &x1 } else { &x0 }, e, None)
                    }
                }
            }
        }
        Macro::SigmaA | Macro::SigmaAInv | Macro::SigmaB | Macro::SigmaBInv => {
            require_kind(mc, name, &[Kind::Negative], "negative")?;
            let (which, forward) = match m {
                Macro::SigmaA => (Sigma::A, true),
                Macro::SigmaAInv => (Sigma::AInv, false),
                Macro::SigmaB => (Sigma::B, true),
                _ => (Sigma::BInv, false),
            };
            sigma_body(mc, which)?;
            let (x0, x1) = sigma_forms(&layout).expect("parity checked by sigma_body");
            let (from, to) = if forward { (x0, x1) } else { (x1, x0) };
            if start != from {
                uncertified(format!("the start configuration is not {}", layout.format(&from)))
            } else {
                let e = mc.trace.effective - effective_before;
                judge(mc, &to, e, None)
            }
        }
    };
    mc.trace.certificates.push(Certificate {
        subject: m.to_string(),
        status: outcome.status,
        detail: outcome.detail,
    });
    Ok(())
}

pub fn copy_c(
    system: &DoubleCycle,
    x: Configuration,
    target: &Configuration,
    cycle: Cycle,
) -> Result<Trace, ExecError> {
    let target = PairLiteral::from_configuration(&system.layout(), target);
    run_macro(system, x, Macro::CopyC { cycle, target })
}

pub fn copy(system: &DoubleCycle, x: Configuration, target: &Configuration) -> Result<Trace, ExecError> {
    let target = PairLiteral::from_configuration(&system.layout(), target);
    run_macro(system, x, Macro::Copy { target })
}

pub fn copy_p(system: &DoubleCycle, x: Configuration, target: &Configuration) -> Result<Trace, ExecError> {
    let target = PairLiteral::from_configuration(&system.layout(), target);
    run_macro(system, x, Macro::CopyP { target })
}

pub fn fix0(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::Fix0)
}

pub fn fix1(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::Fix1)
}

pub fn simp(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::Simp)
}

pub fn comp1(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::Comp1)
}

pub fn comp2(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::Comp2)
}

pub fn comp(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::Comp)
}

pub fn comp_bit(system: &DoubleCycle, x: Configuration, b: bool) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::CompBit(b))
}

pub fn sigma_a(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::SigmaA)
}

pub fn sigma_a_inv(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::SigmaAInv)
}

pub fn sigma_b(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::SigmaB)
}

pub fn sigma_b_inv(system: &DoubleCycle, x: Configuration) -> Result<Trace, ExecError> {
    run_macro(system, x, Macro::SigmaBInv)
}
