//! Boolean automata double-cycles: two cycles sharing a single hub automaton.
//!
//! Automaton layout for a double-cycle with a left cycle of size `n` and a
//! right cycle of size `m` (`n + m - 1` automata in total):
//!
//! * index `0` is the hub `c`,
//! * indices `1..n` are the left-cycle automata `c^l_1 .. c^l_{n-1}`,
//! * indices `n..n+m-1` are the right-cycle automata `c^r_1 .. c^r_{m-1}`.
//!
//! Configurations are written as a pair of words `(w_l,w_r)` where both
//! words start with the hub state.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{Configuration, LocalFunction, NetworkError, NetworkSpec, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BadcError {
    #[error("cycle sizes must be at least 1 (got n={n}, m={m})")]
    ZeroSize { n: usize, m: usize },
    #[error("double-cycle with n={n}, m={m} has too many automata")]
    TooLarge { n: usize, m: usize },
    #[error("malformed configuration {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("configuration {text:?} does not fit n={n}, m={m}")]
    SizeMismatch { text: String, n: usize, m: usize },
    #[error("configuration {text:?}: both words must start with the same hub state")]
    HubMismatch { text: String },
    #[error("expected {expected} arc signs for the {cycle} cycle, got {got}")]
    SignCount { cycle: Cycle, expected: usize, got: usize },
    #[error("no explicit arc signs were given")]
    MissingSigns,
    #[error("explicit signs describe a {actual} double-cycle but {declared} was declared")]
    KindMismatch { declared: Kind, actual: Kind },
    #[error(transparent)]
    Network(#[from] NetworkError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Positive,
    Mixed,
    Negative,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Positive, Kind::Mixed, Kind::Negative];

    /// Hub input polarities of the canonical form, left input first.
    pub fn hub_polarities(self) -> (Sign, Sign) {
        match self {
            Kind::Positive => (Sign::Positive, Sign::Positive),
            Kind::Mixed => (Sign::Negative, Sign::Positive),
            Kind::Negative => (Sign::Negative, Sign::Negative),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Positive => "positive",
            Kind::Mixed => "mixed",
            Kind::Negative => "negative",
        })
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "positive" | "pos" | "+" => Ok(Kind::Positive),
            "mixed" | "mix" | "+-" => Ok(Kind::Mixed),
            "negative" | "neg" | "-" => Ok(Kind::Negative),
            _ => Err(format!("unknown double-cycle kind {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cycle {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Cycle {
    pub fn other(self) -> Cycle {
        match self {
            Cycle::Left => Cycle::Right,
            Cycle::Right => Cycle::Left,
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cycle::Left => "L",
            Cycle::Right => "R",
        })
    }
}

/// Cycle sizes of a double-cycle and the index arithmetic that goes with them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Layout {
    pub n: usize,
    pub m: usize,
}

impl Layout {
    pub fn new(n: usize, m: usize) -> Result<Self, BadcError> {
        if n == 0 || m == 0 {
            return Err(BadcError::ZeroSize { n, m });
        }
        if n + m - 1 > crate::network::MAX_AUTOMATA {
            return Err(BadcError::TooLarge { n, m });
        }
        Ok(Layout { n, m })
    }

    pub fn automata(&self) -> usize {
        self.n + self.m - 1
    }

    pub fn size(&self, cycle: Cycle) -> usize {
        match cycle {
            Cycle::Left => self.n,
            Cycle::Right => self.m,
        }
    }

    /// Global automaton index of position `k` of a cycle (`k = 0` is the hub).
    pub fn index(&self, cycle: Cycle, k: usize) -> usize {
        debug_assert!(k < self.size(cycle));
        match (cycle, k) {
            (_, 0) => 0,
            (Cycle::Left, k) => k,
            (Cycle::Right, k) => self.n - 1 + k,
        }
    }

    /// Inverse of [`Layout::index`] for non-hub automata.
    pub fn position(&self, automaton: usize) -> Option<(Cycle, usize)> {
        if automaton == 0 || automaton >= self.automata() {
            None
        } else if automaton < self.n {
            Some((Cycle::Left, automaton))
        } else {
            Some((Cycle::Right, automaton - self.n + 1))
        }
    }

    /// Short name of an automaton: `c`, `L3`, `R1`.
    pub fn automaton_name(&self, automaton: usize) -> String {
        match self.position(automaton) {
            Some((cycle, k)) => format!("{cycle}{k}"),
            None => "c".to_string(),
        }
    }

    pub fn word(&self, x: &Configuration, cycle: Cycle) -> Vec<bool> {
        (0..self.size(cycle)).map(|k| x.get(self.index(cycle, k))).collect()
    }

    pub fn compose(&self, left: &[bool], right: &[bool]) -> Result<Configuration, BadcError> {
        let text = format!("({},{})", bits_to_string(left), bits_to_string(right));
        if left.len() != self.n || right.len() != self.m {
            return Err(BadcError::SizeMismatch {
                text,
                n: self.n,
                m: self.m,
            });
        }
        if left[0] != right[0] {
            return Err(BadcError::HubMismatch { text });
        }
        let mut states = vec![false; self.automata()];
        for (k, &b) in left.iter().enumerate() {
            states[self.index(Cycle::Left, k)] = b;
        }
        for (k, &b) in right.iter().enumerate() {
            states[self.index(Cycle::Right, k)] = b;
        }
        Ok(Configuration::from_bools(&states)?)
    }

    pub fn format(&self, x: &Configuration) -> String {
        format!(
            "({},{})",
            bits_to_string(&self.word(x, Cycle::Left)),
            bits_to_string(&self.word(x, Cycle::Right))
        )
    }

    /// Parses the pair notation `(w_l,w_r)`. Whitespace is ignored.
    pub fn parse(&self, text: &str) -> Result<Configuration, BadcError> {
        let (left, right) = parse_pair(text)?;
        self.compose(&left, &right).map_err(|e| match e {
            BadcError::SizeMismatch { n, m, .. } => BadcError::SizeMismatch {
                text: text.to_string(),
                n,
                m,
            },
            BadcError::HubMismatch { .. } => BadcError::HubMismatch { text: text.to_string() },
            other => other,
        })
    }

    pub fn zeros(&self) -> Configuration {
        Configuration::zeros(self.automata()).expect("layout size checked")
    }

    pub fn ones(&self) -> Configuration {
        let len = self.automata();
        let bits = if len == 64 { u64::MAX } else { (1 << len) - 1 };
        Configuration::from_bits(bits, len).expect("layout size checked")
    }

    /// Configuration whose cycles are the given words, which may be built by
    /// any of the word helpers below.
    pub fn pair(&self, left: Vec<bool>, right: Vec<bool>) -> Result<Configuration, BadcError> {
        self.compose(&left, &right)
    }
}

/// Splits `(w_l,w_r)` into its two words without checking sizes.
pub fn parse_pair(text: &str) -> Result<(Vec<bool>, Vec<bool>), BadcError> {
    let syntax = |reason: &str| BadcError::Syntax {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| syntax("expected parentheses around the pair"))?;
    let (l, r) = inner
        .split_once(',')
        .ok_or_else(|| syntax("expected a comma between the two words"))?;
    let word = |w: &str| -> Result<Vec<bool>, BadcError> {
        if w.is_empty() {
            return Err(syntax("empty word"));
        }
        w.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(syntax("words may only contain 0 and 1")),
            })
            .collect()
    };
    Ok((word(l)?, word(r)?))
}

pub fn bits_to_string(word: &[bool]) -> String {
    word.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// `(b, ¬b, b, ...)` of the given length.
pub fn alternating(first: bool, len: usize) -> Vec<bool> {
    (0..len).map(|k| first ^ (k % 2 == 1)).collect()
}

pub fn constant(value: bool, len: usize) -> Vec<bool> {
    vec![value; len]
}

/// A concrete double-cycle network together with its layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCycle {
    layout: Layout,
    kind: Kind,
    canonical: bool,
    network: NetworkSpec,
}

impl DoubleCycle {
    pub fn canonical(kind: Kind, n: usize, m: usize) -> Result<Self, BadcError> {
        let layout = Layout::new(n, m)?;
        Ok(DoubleCycle {
            layout,
            kind,
            canonical: true,
            network: build_canonical(kind, n, m)?,
        })
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn network(&self) -> &NetworkSpec {
        &self.network
    }

    pub fn format(&self, x: &Configuration) -> String {
        self.layout.format(x)
    }

    pub fn parse(&self, text: &str) -> Result<Configuration, BadcError> {
        self.layout.parse(text)
    }
}

/// Canonical network: identity along both cycles and a hub AND gate reading
/// the last automaton of each cycle, with negated inputs according to `kind`.
/// A cycle of size 1 makes the hub read itself.
pub fn build_canonical(kind: Kind, n: usize, m: usize) -> Result<NetworkSpec, BadcError> {
    let layout = Layout::new(n, m)?;
    let (pl, pr) = kind.hub_polarities();
    build_from_polarities(
        layout,
        &vec![Sign::Positive; n - 1],
        pl,
        &vec![Sign::Positive; m - 1],
        pr,
    )
}

fn build_from_polarities(
    layout: Layout,
    left_inner: &[Sign],
    left_hub: Sign,
    right_inner: &[Sign],
    right_hub: Sign,
) -> Result<NetworkSpec, BadcError> {
    let mut functions = Vec::with_capacity(layout.automata());
    functions.push(LocalFunction::and(
        layout.index(Cycle::Left, layout.n - 1),
        left_hub,
        layout.index(Cycle::Right, layout.m - 1),
        right_hub,
    ));
    for (cycle, inner) in [(Cycle::Left, left_inner), (Cycle::Right, right_inner)] {
        for k in 1..layout.size(cycle) {
            let source = layout.index(cycle, k - 1);
            functions.push(match inner[k - 1] {
                Sign::Positive => LocalFunction::Identity(source),
                Sign::Negative => LocalFunction::Negation(source),
            });
        }
    }
    Ok(NetworkSpec::new(functions)?)
}

/// Arc signs of a possibly non-canonical double-cycle. `left[k]` is the sign
/// of the arc `c^l_k -> c^l_{k+1}` (the last one entering the hub), and
/// likewise for `right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcSigns {
    pub left: Vec<Sign>,
    pub right: Vec<Sign>,
}

impl ArcSigns {
    pub fn cycle_sign(&self, cycle: Cycle) -> Sign {
        let signs = match cycle {
            Cycle::Left => &self.left,
            Cycle::Right => &self.right,
        };
        signs.iter().fold(Sign::Positive, |acc, &s| acc * s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadcSpec {
    pub n: usize,
    pub m: usize,
    pub kind: Kind,
    pub signs: Option<ArcSigns>,
}

impl BadcSpec {
    pub fn canonical(kind: Kind, n: usize, m: usize) -> Result<Self, BadcError> {
        Layout::new(n, m)?;
        Ok(BadcSpec {
            n,
            m,
            kind,
            signs: None,
        })
    }

    /// Builds a spec from explicit arc signs; the kind follows from the
    /// per-cycle sign products.
    pub fn with_signs(left: Vec<Sign>, right: Vec<Sign>) -> Result<Self, BadcError> {
        let (n, m) = (left.len(), right.len());
        Layout::new(n, m)?;
        let signs = ArcSigns { left, right };
        let kind = kind_of(&signs);
        Ok(BadcSpec {
            n,
            m,
            kind,
            signs: Some(signs),
        })
    }

    pub fn layout(&self) -> Layout {
        Layout { n: self.n, m: self.m }
    }

    /// Checks the sign counts and, when signs are present, that they agree
    /// with the declared kind.
    pub fn validate(&self) -> Result<(), BadcError> {
        Layout::new(self.n, self.m)?;
        if let Some(signs) = &self.signs {
            for (cycle, got, expected) in [
                (Cycle::Left, signs.left.len(), self.n),
                (Cycle::Right, signs.right.len(), self.m),
            ] {
                if got != expected {
                    return Err(BadcError::SignCount { cycle, expected, got });
                }
            }
            let actual = kind_of(signs);
            if actual != self.kind {
                return Err(BadcError::KindMismatch {
                    declared: self.kind,
                    actual,
                });
            }
        }
        Ok(())
    }

    /// The network described by this spec: explicit signs when present,
    /// otherwise the canonical form.
    pub fn network(&self) -> Result<NetworkSpec, BadcError> {
        self.validate()?;
        match &self.signs {
            None => build_canonical(self.kind, self.n, self.m),
            Some(s) => build_from_polarities(
                self.layout(),
                &s.left[..self.n - 1],
                s.left[self.n - 1],
                &s.right[..self.m - 1],
                s.right[self.m - 1],
            ),
        }
    }

    pub fn double_cycle(&self) -> Result<DoubleCycle, BadcError> {
        Ok(DoubleCycle {
            layout: self.layout(),
            kind: self.kind,
            canonical: self.signs.as_ref().is_none_or(|s| is_canonical_signs(s, self.kind)),
            network: self.network()?,
        })
    }
}

fn kind_of(signs: &ArcSigns) -> Kind {
    match (signs.cycle_sign(Cycle::Left), signs.cycle_sign(Cycle::Right)) {
        (Sign::Positive, Sign::Positive) => Kind::Positive,
        (Sign::Negative, Sign::Negative) => Kind::Negative,
        _ => Kind::Mixed,
    }
}

fn is_canonical_signs(signs: &ArcSigns, kind: Kind) -> bool {
    let (pl, pr) = kind.hub_polarities();
    let inner_positive = |v: &[Sign]| v[..v.len() - 1].iter().all(|&s| s == Sign::Positive);
    inner_positive(&signs.left)
        && inner_positive(&signs.right)
        && signs.left.last() == Some(&pl)
        && signs.right.last() == Some(&pr)
}

/// Kind of a double-cycle given with explicit signs.
pub fn classify(spec: &BadcSpec) -> Result<Kind, BadcError> {
    spec.signs.as_ref().map(kind_of).ok_or(BadcError::MissingSigns)
}

/// State relabeling `y = swap(x XOR flips)` mapping a double-cycle onto its
/// canonical form. `swap_cycles` is only set for mixed double-cycles whose
/// negative cycle is the right one: the canonical mixed form carries the
/// negation on the left, so the two cycles trade places.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relabeling {
    pub source: Layout,
    pub flips: Vec<bool>,
    pub swap_cycles: bool,
}

impl Relabeling {
    pub fn identity(layout: Layout) -> Self {
        Relabeling {
            source: layout,
            flips: vec![false; layout.automata()],
            swap_cycles: false,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.swap_cycles && self.flips.iter().all(|&f| !f)
    }

    pub fn target(&self) -> Layout {
        if self.swap_cycles {
            Layout {
                n: self.source.m,
                m: self.source.n,
            }
        } else {
            self.source
        }
    }

    /// Where automaton `i` of the source network lands in the target network.
    pub fn map_automaton(&self, i: usize) -> usize {
        if !self.swap_cycles {
            return i;
        }
        match self.source.position(i) {
            None => 0,
            Some((cycle, k)) => self.target().index(cycle.other(), k),
        }
    }

    pub fn apply(&self, x: &Configuration) -> Configuration {
        let mut states = vec![false; x.len()];
        for (i, &flip) in self.flips.iter().enumerate() {
            states[self.map_automaton(i)] = x.get(i) ^ flip;
        }
        Configuration::from_bools(&states).expect("same length as the source")
    }
}

/// Canonical network of the spec's kind and a relabeling that is an
/// isomorphism of asynchronous transition graphs.
///
/// Walking each cycle away from the hub, every negative arc toggles the flip
/// state of the automata after it, so each along-cycle function becomes the
/// identity in the new coordinates. The residual parity of each cycle ends up
/// on the corresponding hub input. The hub itself is never flipped.
pub fn canonicalize(spec: &BadcSpec) -> Result<(DoubleCycle, Relabeling), BadcError> {
    let signs = spec.signs.as_ref().ok_or(BadcError::MissingSigns)?;
    spec.validate()?;
    let layout = spec.layout();
    let kind = kind_of(signs);
    let mut flips = vec![false; layout.automata()];
    for (cycle, arcs) in [(Cycle::Left, &signs.left), (Cycle::Right, &signs.right)] {
        let mut flip = false;
        for k in 1..layout.size(cycle) {
            flip ^= arcs[k - 1].is_negative();
            flips[layout.index(cycle, k)] = flip;
        }
    }
    let swap_cycles = kind == Kind::Mixed && signs.cycle_sign(Cycle::Right) == Sign::Negative;
    let relabel = Relabeling {
        source: layout,
        flips,
        swap_cycles,
    };
    let target = relabel.target();
    let canonical = DoubleCycle::canonical(kind, target.n, target.m)?;
    Ok((canonical, relabel))
}

/// Cyclic count of `01` occurrences in a word.
pub fn expressiveness_cycle(word: &[bool]) -> usize {
    let len = word.len();
    (0..len).filter(|&i| !word[i] && word[(i + 1) % len]).count()
}

pub fn expressiveness(layout: &Layout, x: &Configuration) -> Result<usize, BadcError> {
    if x.len() != layout.automata() {
        return Err(NetworkError::LengthMismatch {
            expected: layout.automata(),
            got: x.len(),
        }
        .into());
    }
    Ok(expressiveness_cycle(&layout.word(x, Cycle::Left)) + expressiveness_cycle(&layout.word(x, Cycle::Right)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn layout_indices() {
        let l = Layout::new(4, 3).unwrap();
        assert_eq!(l.automata(), 6);
        assert_eq!(l.index(Cycle::Left, 3), 3);
        assert_eq!(l.index(Cycle::Right, 1), 4);
        assert_eq!(l.index(Cycle::Right, 2), 5);
        assert_eq!(l.position(5), Some((Cycle::Right, 2)));
        assert_eq!(l.position(0), None);
        assert_eq!(l.automaton_name(4), "R1");
    }

    #[test]
    fn pair_notation_round_trip() {
        let l = Layout::new(4, 2).unwrap();
        let x = l.parse("(1000,10)").unwrap();
        assert_eq!(x.to_string(), "10000");
        assert_eq!(l.format(&x), "(1000,10)");
        let y = l.parse(" ( 1101 , 11 ) ").unwrap();
        assert_eq!(l.format(&y), "(1101,11)");
    }

    #[test]
    fn pair_notation_rejections() {
        let l = Layout::new(2, 2).unwrap();
        assert!(matches!(l.parse("(10,01)"), Err(BadcError::HubMismatch { .. })));
        assert!(matches!(l.parse("(100,10)"), Err(BadcError::SizeMismatch { .. })));
        assert!(matches!(l.parse("10,10"), Err(BadcError::Syntax { .. })));
        assert!(matches!(l.parse("(1010)"), Err(BadcError::Syntax { .. })));
        assert!(matches!(l.parse("(12,10)"), Err(BadcError::Syntax { .. })));
        assert!(matches!(l.parse("(,10)"), Err(BadcError::Syntax { .. })));
    }

    #[test]
    fn zero_sizes_are_rejected() {
        assert!(matches!(
            build_canonical(Kind::Positive, 0, 2),
            Err(BadcError::ZeroSize { .. })
        ));
        assert!(DoubleCycle::canonical(Kind::Mixed, 3, 0).is_err());
    }

    #[test]
    fn canonical_hub_wiring() {
        let net = build_canonical(Kind::Mixed, 3, 2).unwrap();
        assert_eq!(
            net.functions()[0],
            LocalFunction::and(2, Sign::Negative, 3, Sign::Positive)
        );
        assert_eq!(net.functions()[1], LocalFunction::Identity(0));
        assert_eq!(net.functions()[2], LocalFunction::Identity(1));
        assert_eq!(net.functions()[3], LocalFunction::Identity(0));

        let single = build_canonical(Kind::Mixed, 1, 2).unwrap();
        assert_eq!(
            single.functions()[0],
            LocalFunction::and(0, Sign::Negative, 1, Sign::Positive)
        );
    }

    #[test]
    fn classify_by_sign_products() {
        use Sign::{Negative as N, Positive as P};
        let k = |l: Vec<Sign>, r: Vec<Sign>| classify(&BadcSpec::with_signs(l, r).unwrap()).unwrap();
        assert_eq!(k(vec![P, P, P], vec![P, P]), Kind::Positive);
        assert_eq!(k(vec![P, N, P], vec![P, P]), Kind::Mixed);
        assert_eq!(k(vec![P, P], vec![N, P, P]), Kind::Mixed);
        assert_eq!(k(vec![N, P], vec![P, N]), Kind::Negative);
        assert_eq!(k(vec![N, N], vec![N, N]), Kind::Positive);
        assert_eq!(
            classify(&BadcSpec::canonical(Kind::Mixed, 2, 2).unwrap()),
            Err(BadcError::MissingSigns)
        );
    }

    #[test]
    fn validate_catches_bad_signs() {
        let mut spec = BadcSpec::with_signs(vec![Sign::Positive; 3], vec![Sign::Positive; 2]).unwrap();
        spec.kind = Kind::Negative;
        assert!(matches!(spec.validate(), Err(BadcError::KindMismatch { .. })));
        spec.kind = Kind::Positive;
        spec.n = 4;
        assert!(matches!(spec.validate(), Err(BadcError::SignCount { .. })));
    }

    #[test]
    fn canonical_signs_give_identity_relabeling() {
        for kind in Kind::ALL {
            let (pl, pr) = kind.hub_polarities();
            let spec =
                BadcSpec::with_signs(vec![Sign::Positive, Sign::Positive, pl], vec![Sign::Positive, pr]).unwrap();
            let (canon, relabel) = canonicalize(&spec).unwrap();
            assert_eq!(canon.kind(), kind);
            assert!(relabel.is_identity(), "{kind}");
            assert!(spec.double_cycle().unwrap().is_canonical());
        }
    }

    #[test]
    fn flips_sit_between_two_negative_arcs() {
        use Sign::{Negative as N, Positive as P};
        // arcs c->l1 (+), l1->l2 (-), l2->c (-)
        let spec = BadcSpec::with_signs(vec![P, N, N], vec![P, P, P]).unwrap();
        let (canon, relabel) = canonicalize(&spec).unwrap();
        assert_eq!(canon.kind(), Kind::Positive);
        assert_eq!(relabel.flips, vec![false, false, true, false, false]);
        assert!(!relabel.swap_cycles);
    }

    #[test]
    fn expressiveness_examples() {
        assert_eq!(expressiveness_cycle(&word("0000")), 0);
        assert_eq!(expressiveness_cycle(&word("1010")), 2);
        assert_eq!(expressiveness_cycle(&word("1")), 0);
        assert_eq!(expressiveness_cycle(&word("0")), 0);
        assert_eq!(expressiveness_cycle(&word("01")), 1);

        let l = Layout::new(4, 2).unwrap();
        assert_eq!(expressiveness(&l, &l.zeros()).unwrap(), 0);
        assert_eq!(expressiveness(&l, &l.parse("(1010,10)").unwrap()).unwrap(), 3);
        let l = Layout::new(2, 2).unwrap();
        assert_eq!(expressiveness(&l, &l.parse("(01,01)").unwrap()).unwrap(), 2);
        assert!(expressiveness(&l, &Configuration::zeros(5).unwrap()).is_err());
    }

    #[test]
    fn word_helpers() {
        assert_eq!(bits_to_string(&alternating(true, 5)), "10101");
        assert_eq!(bits_to_string(&alternating(false, 4)), "0101");
        assert_eq!(bits_to_string(&constant(true, 3)), "111");
    }
}
