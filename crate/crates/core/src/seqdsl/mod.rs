//! Update-sequence language for double-cycles.
//!
//! A program is a list of instructions, each of which expands into an
//! ordered list of single-automaton updates. Elementary instructions
//! (`sync`, `update`, `incUp`, `decUp`, `erase`, `expand`, `shift`) map
//! directly onto updates; macros (`copy`, `fix0`, `simp`, `comp`, ...) read
//! the live configuration to decide which updates to make.

mod exec;
mod macros;
mod parse;

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::badc::{bits_to_string, BadcError, Cycle, Kind, Layout};
use crate::network::Configuration;

pub use exec::{exec, exec_with, run_macro, ExecOptions};
pub use macros::{
    comp, comp1, comp2, comp_bit, copy, copy_c, copy_p, copy_property, fix0, fix1, sigma_a, sigma_a_inv, sigma_b,
    sigma_b_inv, sigma_forms, simp, CopyProperty,
};
pub use parse::parse;

pub const TRACE_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExecError {
    #[error("position {index} is outside 1..{size} of the {cycle} cycle")]
    IndexOutOfRange { cycle: Cycle, index: usize, size: usize },
    #[error("{name} needs both cycles of size at least 2 (n={n}, m={m})")]
    CyclesTooSmall { name: &'static str, n: usize, m: usize },
    #[error("{name} runs on {expected} double-cycles, this one is {found}")]
    WrongKind {
        name: &'static str,
        expected: &'static str,
        found: Kind,
    },
    #[error("{name} needs a canonical double-cycle")]
    NotCanonical { name: &'static str },
    #[error("expand on the {cycle} cycle: no position matches the hub pattern")]
    UndefinedKappa { cycle: Cycle },
    #[error("copy_c on the {cycle} cycle: no position below the last one differs from the target")]
    EmptyCopySet { cycle: Cycle },
    #[error("{name}: {reason}")]
    Precondition { name: &'static str, reason: String },
    #[error(transparent)]
    Configuration(#[from] BadcError),
}

/// A configuration literal inside a program, checked against the layout
/// when the instruction runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLiteral {
    pub left: Vec<bool>,
    pub right: Vec<bool>,
}

impl PairLiteral {
    pub fn resolve(&self, layout: &Layout) -> Result<Configuration, BadcError> {
        layout.compose(&self.left, &self.right)
    }

    pub fn from_configuration(layout: &Layout, x: &Configuration) -> Self {
        PairLiteral {
            left: layout.word(x, Cycle::Left),
            right: layout.word(x, Cycle::Right),
        }
    }
}

impl fmt::Display for PairLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", bits_to_string(&self.left), bits_to_string(&self.right))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Macro {
    CopyC { cycle: Cycle, target: PairLiteral },
    Copy { target: PairLiteral },
    CopyP { target: PairLiteral },
    Fix0,
    Fix1,
    Simp,
    Comp1,
    Comp2,
    Comp,
    CompBit(bool),
    SigmaA,
    SigmaAInv,
    SigmaB,
    SigmaBInv,
}

impl Macro {
    pub fn name(&self) -> &'static str {
        match self {
            Macro::CopyC { .. } => "copy_c",
            Macro::Copy { .. } => "copy",
            Macro::CopyP { .. } => "copy_p",
            Macro::Fix0 => "fix0",
            Macro::Fix1 => "fix1",
            Macro::Simp => "simp",
            Macro::Comp1 => "comp1",
            Macro::Comp2 => "comp2",
            Macro::Comp => "comp",
            Macro::CompBit(_) => "comp_bit",
            Macro::SigmaA => "sigma_a",
            Macro::SigmaAInv => "sigma_a_inv",
            Macro::SigmaB => "sigma_b",
            Macro::SigmaBInv => "sigma_b_inv",
        }
    }
}

impl fmt::Display for Macro {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Macro::CopyC { cycle, target } => write!(f, "copy_c {cycle} {target}"),
            Macro::Copy { target } | Macro::CopyP { target } => write!(f, "{} {target}", self.name()),
            Macro::CompBit(b) => write!(f, "comp_bit {}", u8::from(*b)),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instruction {
    Sync,
    Update(Cycle, usize),
    IncUp(Cycle, usize, usize),
    DecUp(Cycle, usize, usize),
    Erase(Cycle),
    Expand(Cycle),
    Shift(Cycle),
    Macro(Macro),
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Sync => f.write_str("sync"),
            Instruction::Update(c, k) => write!(f, "update {c} {k}"),
            Instruction::IncUp(c, i, j) => write!(f, "incUp {c} {i} {j}"),
            Instruction::DecUp(c, i, j) => write!(f, "decUp {c} {i} {j}"),
            Instruction::Erase(c) => write!(f, "erase {c}"),
            Instruction::Expand(c) => write!(f, "expand {c}"),
            Instruction::Shift(c) => write!(f, "shift {c}"),
            Instruction::Macro(m) => m.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    pub instructions: Vec<Instruction>,
}

impl Program {
    pub fn new(instructions: Vec<Instruction>) -> Self {
        Program { instructions }
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ins in &self.instructions {
            writeln!(f, "{ins}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Update {
    pub automaton: usize,
    pub old: bool,
    pub new: bool,
}

impl Update {
    pub fn is_effective(&self) -> bool {
        self.old != self.new
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateStatus {
    /// Preconditions held and the postcondition was observed.
    Met,
    /// Preconditions held but the postcondition was not observed.
    Violated,
    /// Preconditions did not hold; the macro ran anyway.
    Uncertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub subject: String,
    pub status: CertificateStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub start: Configuration,
    pub updates: Vec<Update>,
    pub final_config: Configuration,
    pub attempted: usize,
    pub effective: usize,
    pub annotations: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl Trace {
    pub fn new(start: Configuration) -> Self {
        Trace {
            start,
            updates: Vec::new(),
            final_config: start,
            attempted: 0,
            effective: 0,
            annotations: Vec::new(),
            certificates: Vec::new(),
        }
    }

    /// Applies the recorded updates to the start configuration.
    pub fn replay(&self) -> Configuration {
        self.updates.iter().fold(self.start, |x, u| x.with(u.automaton, u.new))
    }

    pub fn all_certified(&self) -> bool {
        self.certificates.iter().all(|c| c.status == CertificateStatus::Met)
    }

    pub fn to_text(&self, layout: &Layout) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "start {}", layout.format(&self.start));
        for (step, u) in self.updates.iter().enumerate() {
            let _ = writeln!(
                out,
                "({}, {}, {}→{})",
                step + 1,
                layout.automaton_name(u.automaton),
                u8::from(u.old),
                u8::from(u.new)
            );
        }
        for note in &self.annotations {
            let _ = writeln!(out, "note: {note}");
        }
        for c in &self.certificates {
            let status = match c.status {
                CertificateStatus::Met => "met",
                CertificateStatus::Violated => "VIOLATED",
                CertificateStatus::Uncertified => "uncertified",
            };
            let _ = writeln!(out, "{}: {status}: {}", c.subject, c.detail);
        }
        let _ = writeln!(out, "final {}", layout.format(&self.final_config));
        let _ = writeln!(out, "attempted {}, effective {}", self.attempted, self.effective);
        out
    }

    pub fn to_json(&self, layout: &Layout) -> serde_json::Value {
        let updates: Vec<serde_json::Value> = self
            .updates
            .iter()
            .enumerate()
            .map(|(step, u)| {
                serde_json::json!({
                    "step": step + 1,
                    "automaton": u.automaton,
                    "name": layout.automaton_name(u.automaton),
                    "old": u8::from(u.old),
                    "new": u8::from(u.new),
                })
            })
            .collect();
        serde_json::json!({
            "schemaVersion": TRACE_SCHEMA_VERSION,
            "start": layout.format(&self.start),
            "updates": updates,
            "final": layout.format(&self.final_config),
            "attempted": self.attempted,
            "effective": self.effective,
            "annotations": self.annotations,
            "certificates": self.certificates,
        })
    }
}
