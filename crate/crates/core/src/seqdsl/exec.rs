use super::macros;
use super::{ExecError, Instruction, Macro, Program, Trace, Update};
use crate::badc::{Cycle, DoubleCycle, Layout};
use crate::network::Configuration;

#[derive(Debug, Clone, Copy, Default)]
pub struct ExecOptions {
    /// Treat `expand` without a matching position as an error instead of a
    /// no-op.
    pub strict_expand: bool,
}

/// Interpreter state: the live configuration and the trace so far.
pub(crate) struct Machine<'a> {
    pub system: &'a DoubleCycle,
    pub layout: Layout,
    pub x: Configuration,
    pub trace: Trace,
    pub options: ExecOptions,
}

impl<'a> Machine<'a> {
    pub fn new(system: &'a DoubleCycle, x: Configuration, options: ExecOptions) -> Result<Self, ExecError> {
        let layout = system.layout();
        if x.len() != layout.automata() {
            return Err(crate::badc::BadcError::SizeMismatch {
                text: x.to_string(),
                n: layout.n,
                m: layout.m,
            }
            .into());
        }
        Ok(Machine {
            system,
            layout,
            x,
            trace: Trace::new(x),
            options,
        })
    }

    pub fn finish(mut self) -> Trace {
        self.trace.final_config = self.x;
        self.trace
    }

    pub fn size(&self, cycle: Cycle) -> usize {
        self.layout.size(cycle)
    }

    /// State of position `k` of a cycle in the live configuration.
    pub fn bit(&self, cycle: Cycle, k: usize) -> bool {
        self.x.get(self.layout.index(cycle, k))
    }

    pub fn hub(&self) -> bool {
        self.x.get(0)
    }

    pub fn word(&self, cycle: Cycle) -> Vec<bool> {
        self.layout.word(&self.x, cycle)
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.trace.annotations.push(text.into());
    }

    fn apply(&mut self, automaton: usize) {
        let old = self.x.get(automaton);
        let new = self.system.network().eval_raw(self.x.bits(), automaton);
        self.x = self.x.with(automaton, new);
        self.trace.updates.push(Update { automaton, old, new });
        self.trace.attempted += 1;
        if old != new {
            self.trace.effective += 1;
        }
    }

    fn check(&self, cycle: Cycle, k: usize) -> Result<(), ExecError> {
        let size = self.size(cycle);
        if k == 0 || k >= size {
            return Err(ExecError::IndexOutOfRange { cycle, index: k, size });
        }
        Ok(())
    }

    pub fn sync(&mut self) {
        self.apply(0);
    }

    pub fn update(&mut self, cycle: Cycle, k: usize) -> Result<(), ExecError> {
        self.check(cycle, k)?;
        self.apply(self.layout.index(cycle, k));
        Ok(())
    }

    pub fn inc_up(&mut self, cycle: Cycle, i: usize, j: usize) -> Result<(), ExecError> {
        if j < i {
            return Ok(());
        }
        self.check(cycle, i)?;
        self.check(cycle, j)?;
        for k in i..=j {
            self.apply(self.layout.index(cycle, k));
        }
        Ok(())
    }

    pub fn dec_up(&mut self, cycle: Cycle, i: usize, j: usize) -> Result<(), ExecError> {
        if j < i {
            return Ok(());
        }
        self.check(cycle, i)?;
        self.check(cycle, j)?;
        for k in (i..=j).rev() {
            self.apply(self.layout.index(cycle, k));
        }
        Ok(())
    }

    pub fn erase(&mut self, cycle: Cycle) -> Result<(), ExecError> {
        self.inc_up(cycle, 1, self.size(cycle) - 1)
    }

    pub fn shift(&mut self, cycle: Cycle) -> Result<(), ExecError> {
        self.dec_up(cycle, 1, self.size(cycle) - 1)
    }

    /// Smallest `k` in `1..|C|` whose pair `(x_k, x_{k+1 mod |C|})` reads
    /// `01` when the hub is at 1, or `10` when it is at 0.
    pub fn kappa(&self, cycle: Cycle) -> Option<usize> {
        let size = self.size(cycle);
        let hub = self.hub();
        (1..size).find(|&k| self.bit(cycle, k) != hub && self.bit(cycle, (k + 1) % size) == hub)
    }

    pub fn expand(&mut self, cycle: Cycle) -> Result<(), ExecError> {
        match self.kappa(cycle) {
            Some(kappa) => self.inc_up(cycle, 1, kappa - 1),
            None if self.options.strict_expand => Err(ExecError::UndefinedKappa { cycle }),
            None => {
                let text = format!(
                    "expand {cycle} at {}: no matching position, nothing updated",
                    self.layout.format(&self.x)
                );
                self.note(text);
                Ok(())
            }
        }
    }

    pub fn instruction(&mut self, ins: &Instruction) -> Result<(), ExecError> {
        match ins {
            Instruction::Sync => {
                self.sync();
                Ok(())
            }
            Instruction::Update(c, k) => self.update(*c, *k),
            Instruction::IncUp(c, i, j) => self.inc_up(*c, *i, *j),
            Instruction::DecUp(c, i, j) => self.dec_up(*c, *i, *j),
            Instruction::Erase(c) => self.erase(*c),
            Instruction::Expand(c) => self.expand(*c),
            Instruction::Shift(c) => self.shift(*c),
            Instruction::Macro(m) => macros::run(self, m),
        }
    }
}

pub fn exec(system: &DoubleCycle, x: Configuration, program: &Program) -> Result<Trace, ExecError> {
    exec_with(system, x, program, ExecOptions::default())
}

pub fn exec_with(
    system: &DoubleCycle,
    x: Configuration,
    program: &Program,
    options: ExecOptions,
) -> Result<Trace, ExecError> {
    let mut machine = Machine::new(system, x, options)?;
    for ins in &program.instructions {
        machine.instruction(ins)?;
    }
    Ok(machine.finish())
}

/// Runs a single macro from `x`.
pub fn run_macro(system: &DoubleCycle, x: Configuration, m: Macro) -> Result<Trace, ExecError> {
    exec(system, x, &Program::new(vec![Instruction::Macro(m)]))
}
