//! Boolean automata networks with a restricted local-function family.
//!
//! Every automaton carries one of three local functions: a copy of some
//! automaton, a negated copy, or a two-input conjunction whose inputs may be
//! individually negated. Configurations are integer-encoded words where bit
//! `i` holds the state of automaton `i`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest automaton count a [`Configuration`] can hold.
pub const MAX_AUTOMATA: usize = 64;

/// Default cap on the automaton count for anything that enumerates `2^N`
/// configurations.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("automaton index {index} out of range for a network of {count} automata")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("configuration length {got} does not match network size {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("a network needs between 1 and {MAX_AUTOMATA} automata, got {0}")]
    InvalidSize(usize),
    #[error("value {bits:#x} does not fit in {len} bits")]
    EncodingOverflow { bits: u64, len: usize },
    #[error("enumerating 2^{count} configurations exceeds the cap of 2^{cap}")]
    StateSpaceTooLarge { count: usize, cap: usize },
    #[error("interaction {from} -> {to} is not simple: its sign takes both +1 and -1")]
    NonSimple { from: usize, to: usize },
}

/// Sign of an interaction or polarity of a gate input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// Applies the polarity to a Boolean input.
    pub fn apply(self, b: bool) -> bool {
        b ^ self.is_negative()
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// A gate input: a source automaton read either as-is or negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub source: usize,
    pub polarity: Sign,
}

impl Literal {
    pub fn new(source: usize, polarity: Sign) -> Self {
        Literal { source, polarity }
    }

    #[inline]
    fn eval(self, bits: u64) -> bool {
        self.polarity.apply(bits >> self.source & 1 == 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalFunction {
    Identity(usize),
    Negation(usize),
    AndGate(Literal, Literal),
}

impl LocalFunction {
    pub fn and(a: usize, pa: Sign, b: usize, pb: Sign) -> Self {
        LocalFunction::AndGate(Literal::new(a, pa), Literal::new(b, pb))
    }

    pub fn sources(&self) -> Vec<usize> {
        match *self {
            LocalFunction::Identity(s) | LocalFunction::Negation(s) => vec![s],
            LocalFunction::AndGate(a, b) => vec![a.source, b.source],
        }
    }

    #[inline]
    fn eval(&self, bits: u64) -> bool {
        match *self {
            LocalFunction::Identity(s) => bits >> s & 1 == 1,
            LocalFunction::Negation(s) => bits >> s & 1 == 0,
            LocalFunction::AndGate(a, b) => a.eval(bits) && b.eval(bits),
        }
    }
}

/// A Boolean word of fixed length, bit `i` being the state of automaton `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    bits: u64,
    len: u8,
}

impl Configuration {
    /// The all-zero configuration of the given length.
    pub fn zeros(len: usize) -> Result<Self, NetworkError> {
        Self::from_bits(0, len)
    }

    pub fn from_bits(bits: u64, len: usize) -> Result<Self, NetworkError> {
        if len == 0 || len > MAX_AUTOMATA {
            return Err(NetworkError::InvalidSize(len));
        }
        if len < 64 && bits >> len != 0 {
            return Err(NetworkError::EncodingOverflow { bits, len });
        }
        Ok(Configuration { bits, len: len as u8 })
    }

    pub fn from_bools(states: &[bool]) -> Result<Self, NetworkError> {
        let bits = states
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
        Self::from_bits(bits, states.len())
    }

    /// Integer encoding.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// State of automaton `i`. Panics when `i` is out of range.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len(), "automaton {i} out of range");
        self.bits >> i & 1 == 1
    }

    pub fn with(&self, i: usize, value: bool) -> Self {
        assert!(i < self.len(), "automaton {i} out of range");
        let bits = (self.bits & !(1 << i)) | (value as u64) << i;
        Configuration { bits, len: self.len }
    }

    /// `x̄^i`: the configuration with bit `i` flipped.
    pub fn flipped(&self, i: usize) -> Self {
        assert!(i < self.len(), "automaton {i} out of range");
        Configuration {
            bits: self.bits ^ 1 << i,
            len: self.len,
        }
    }

    pub fn hamming(&self, other: &Configuration) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// All `2^len` configurations in integer order.
    pub fn all(len: usize) -> Result<impl Iterator<Item = Configuration>, NetworkError> {
        if len == 0 || len >= 64 {
            return Err(NetworkError::InvalidSize(len));
        }
        Ok((0..1u64 << len).map(move |bits| Configuration { bits, len: len as u8 }))
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({self})")
    }
}

/// Renders the word in automaton order, automaton 0 first.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A signed arc of the interaction graph. Only arcs of constant nonzero sign
/// are ever stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedArc {
    pub from: usize,
    pub to: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkSpec {
    functions: Vec<LocalFunction>,
}

impl NetworkSpec {
    pub fn new(functions: Vec<LocalFunction>) -> Result<Self, NetworkError> {
        let count = functions.len();
        if count == 0 || count > MAX_AUTOMATA {
            return Err(NetworkError::InvalidSize(count));
        }
        for f in &functions {
            if let Some(&index) = f.sources().iter().find(|&&s| s >= count) {
                return Err(NetworkError::IndexOutOfRange { index, count });
            }
        }
        Ok(NetworkSpec { functions })
    }

    pub fn count(&self) -> usize {
        self.functions.len()
    }

    pub fn functions(&self) -> &[LocalFunction] {
        &self.functions
    }

    pub fn function(&self, i: usize) -> Result<&LocalFunction, NetworkError> {
        self.functions.get(i).ok_or(NetworkError::IndexOutOfRange {
            index: i,
            count: self.count(),
        })
    }

    fn check(&self, x: &Configuration, i: usize) -> Result<(), NetworkError> {
        if x.len() != self.count() {
            return Err(NetworkError::LengthMismatch {
                expected: self.count(),
                got: x.len(),
            });
        }
        if i >= self.count() {
            return Err(NetworkError::IndexOutOfRange {
                index: i,
                count: self.count(),
            });
        }
        Ok(())
    }

    /// `f_i(x)`.
    pub fn eval_local(&self, x: &Configuration, i: usize) -> Result<bool, NetworkError> {
        self.check(x, i)?;
        Ok(self.functions[i].eval(x.bits))
    }

    /// Unchecked evaluation on a raw encoding; used by the enumeration loops.
    #[inline]
    pub fn eval_raw(&self, bits: u64, i: usize) -> bool {
        self.functions[i].eval(bits)
    }

    /// Raw single-automaton update: returns the encoding after setting bit `i`
    /// to `f_i`.
    #[inline]
    pub fn step_raw(&self, bits: u64, i: usize) -> u64 {
        let v = self.functions[i].eval(bits) as u64;
        (bits & !(1 << i)) | v << i
    }

    pub fn async_step(&self, x: &Configuration, i: usize) -> Result<Configuration, NetworkError> {
        self.check(x, i)?;
        Ok(Configuration {
            bits: self.step_raw(x.bits, i),
            len: x.len,
        })
    }

    /// `sign_x(j,i) = s(x_j) * (f_i(x) - f_i(x̄^j))` with `s(b) = b - ¬b`.
    pub fn interaction_sign(&self, x: &Configuration, j: usize, i: usize) -> Result<i8, NetworkError> {
        self.check(x, i)?;
        self.check(x, j)?;
        Ok(self.sign_raw(x.bits, j, i))
    }

    #[inline]
    fn sign_raw(&self, bits: u64, j: usize, i: usize) -> i8 {
        let s: i8 = if bits >> j & 1 == 1 { 1 } else { -1 };
        let here = self.eval_raw(bits, i) as i8;
        let there = self.eval_raw(bits ^ 1 << j, i) as i8;
        s * (here - there)
    }

    pub fn interaction_graph(&self) -> Result<Vec<SignedArc>, NetworkError> {
        self.interaction_graph_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Signed interaction graph obtained by evaluating the sign formula on
    /// every configuration. An arc is kept when its sign is nonzero somewhere;
    /// a sign that is `+1` on some configurations and `-1` on others is
    /// rejected as non-simple. Arcs are returned sorted by `(from, to)`.
    pub fn interaction_graph_with_cap(&self, cap: usize) -> Result<Vec<SignedArc>, NetworkError> {
        let count = self.count();
        if count > cap || count >= 64 {
            return Err(NetworkError::StateSpaceTooLarge { count, cap });
        }
        let mut arcs = Vec::new();
        for j in 0..count {
            for i in 0..count {
                let (mut pos, mut neg) = (false, false);
                for bits in 0..1u64 << count {
                    match self.sign_raw(bits, j, i) {
                        1 => pos = true,
                        -1 => neg = true,
                        _ => {}
                    }
                    if pos && neg {
                        return Err(NetworkError::NonSimple { from: j, to: i });
                    }
                }
                if pos || neg {
                    let sign = if pos { Sign::Positive } else { Sign::Negative };
                    arcs.push(SignedArc { from: j, to: i, sign });
                }
            }
        }
        Ok(arcs)
    }
}

/// Sign classes of the simple cycles in a signed digraph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CyclePolarity {
    pub positive: bool,
    pub negative: bool,
}

/// Enumerates simple directed cycles (self-loops included), stopping as soon
/// as both signs have been seen. Exponential in general; meant for small
/// graphs.
pub fn cycle_polarity(arcs: &[SignedArc]) -> CyclePolarity {
    let nodes = arcs.iter().map(|a| a.from.max(a.to) + 1).max().unwrap_or(0);
    let mut adjacency: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); nodes];
    for a in arcs {
        adjacency[a.from].push((a.to, a.sign));
    }
    let mut found = CyclePolarity::default();
    let mut on_path = vec![false; nodes];
    for start in 0..nodes {
        // Cycles whose smallest node is `start`.
        let mut stack: Vec<(usize, usize, Sign)> = vec![(start, 0, Sign::Positive)];
        on_path[start] = true;
        while let Some(frame) = stack.last_mut() {
            let (node, next, sign) = *frame;
            if next == adjacency[node].len() {
                on_path[node] = false;
                stack.pop();
                continue;
            }
            frame.1 += 1;
            let (to, arc_sign) = adjacency[node][next];
            let product = sign * arc_sign;
            if to == start {
                match product {
                    Sign::Positive => found.positive = true,
                    Sign::Negative => found.negative = true,
                }
                if found.positive && found.negative {
                    return found;
                }
            } else if to > start && !on_path[to] {
                on_path[to] = true;
                stack.push((to, 0, product));
            }
        }
    }
    found
}

pub fn positive_cycle_exists(arcs: &[SignedArc]) -> bool {
    cycle_polarity(arcs).positive
}

pub fn negative_cycle_exists(arcs: &[SignedArc]) -> bool {
    cycle_polarity(arcs).negative
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(from: usize, to: usize, s: i8) -> SignedArc {
        SignedArc {
            from,
            to,
            sign: Sign::from_value(s).unwrap(),
        }
    }

    #[test]
    fn configuration_rejects_overflowing_encodings() {
        assert!(Configuration::from_bits(0b1000, 3).is_err());
        assert!(Configuration::from_bits(0b111, 3).is_ok());
        assert!(Configuration::zeros(0).is_err());
        assert!(Configuration::zeros(65).is_err());
        assert!(Configuration::from_bits(u64::MAX, 64).is_ok());
    }

    #[test]
    fn display_is_automaton_order() {
        let x = Configuration::from_bools(&[true, false, false, true]).unwrap();
        assert_eq!(x.to_string(), "1001");
        assert_eq!(x.bits(), 0b1001);
        assert_eq!(x.flipped(1).to_string(), "1101");
    }

    #[test]
    fn identity_reads_source() {
        let net = NetworkSpec::new(vec![LocalFunction::Identity(1), LocalFunction::Identity(1)]).unwrap();
        let x = Configuration::from_bools(&[false, true]).unwrap();
        assert!(net.eval_local(&x, 0).unwrap());
    }

    #[test]
    fn out_of_range_sources_are_rejected() {
        let err = NetworkSpec::new(vec![LocalFunction::Identity(3)]).unwrap_err();
        assert_eq!(err, NetworkError::IndexOutOfRange { index: 3, count: 1 });
        let net = NetworkSpec::new(vec![LocalFunction::Identity(0)]).unwrap();
        let x = Configuration::zeros(1).unwrap();
        assert!(net.eval_local(&x, 1).is_err());
        assert!(net.async_step(&x, 2).is_err());
        assert!(net.interaction_sign(&x, 0, 5).is_err());
        let wrong = Configuration::zeros(2).unwrap();
        assert!(matches!(
            net.eval_local(&wrong, 0),
            Err(NetworkError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn and_gate_applies_polarities_first() {
        let net = NetworkSpec::new(vec![
            LocalFunction::and(1, Sign::Negative, 2, Sign::Positive),
            LocalFunction::Identity(0),
            LocalFunction::Identity(0),
        ])
        .unwrap();
        let truth: Vec<bool> = Configuration::all(3)
            .unwrap()
            .map(|x| net.eval_local(&x, 0).unwrap())
            .collect();
        // bits (x0,x1,x2): true only when x1 = 0 and x2 = 1
        let expected: Vec<bool> = (0..8u64).map(|b| b >> 1 & 1 == 0 && b >> 2 & 1 == 1).collect();
        assert_eq!(truth, expected);
    }

    #[test]
    fn negation_arc_sign_is_negative_everywhere() {
        let net = NetworkSpec::new(vec![LocalFunction::Negation(1), LocalFunction::Identity(0)]).unwrap();
        for x in Configuration::all(2).unwrap() {
            assert_eq!(net.interaction_sign(&x, 1, 0).unwrap(), -1);
            assert_eq!(net.interaction_sign(&x, 0, 1).unwrap(), 1);
            assert_eq!(net.interaction_sign(&x, 0, 0).unwrap(), 0);
        }
    }

    #[test]
    fn self_identity_gives_one_positive_self_arc() {
        let net = NetworkSpec::new(vec![LocalFunction::Identity(0)]).unwrap();
        assert_eq!(net.interaction_graph().unwrap(), vec![arc(0, 0, 1)]);
    }

    #[test]
    fn contradictory_gate_reads_nothing() {
        // x1 AND NOT x1 is constant false, so automaton 1 has no influence on 0.
        let net = NetworkSpec::new(vec![
            LocalFunction::and(1, Sign::Positive, 1, Sign::Negative),
            LocalFunction::Identity(1),
        ])
        .unwrap();
        let arcs = net.interaction_graph().unwrap();
        assert!(!arcs.iter().any(|a| a.to == 0));
    }

    #[test]
    fn cap_is_enforced() {
        let net = NetworkSpec::new(vec![LocalFunction::Identity(0); 5]).unwrap();
        assert_eq!(
            net.interaction_graph_with_cap(4).unwrap_err(),
            NetworkError::StateSpaceTooLarge { count: 5, cap: 4 }
        );
    }

    #[test]
    fn cycle_signs() {
        let chain = [arc(0, 1, 1), arc(1, 2, -1)];
        assert_eq!(cycle_polarity(&chain), CyclePolarity::default());

        let two_cycles = [arc(0, 1, 1), arc(1, 0, 1), arc(0, 2, 1), arc(2, 0, -1)];
        let p = cycle_polarity(&two_cycles);
        assert!(p.positive && p.negative);

        let negative_loop = [arc(0, 0, -1)];
        assert!(negative_cycle_exists(&negative_loop));
        assert!(!positive_cycle_exists(&negative_loop));

        // Two negative arcs around a 3-cycle make it positive.
        let tri = [arc(0, 1, -1), arc(1, 2, -1), arc(2, 0, 1)];
        assert!(positive_cycle_exists(&tri));
        assert!(!negative_cycle_exists(&tri));
    }
}
