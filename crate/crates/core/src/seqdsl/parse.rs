//! Text syntax: one instruction per line or `;`-separated, `#` starts a
//! comment, cycles are `L`/`R`, configuration arguments use `(w_l,w_r)`.

use super::{Instruction, Macro, PairLiteral, ParseError, Program};
use crate::badc::{parse_pair, Cycle};

struct Token<'a> {
    column: usize,
    text: &'a str,
}

/// Splits a statement into whitespace-separated tokens, keeping a
/// parenthesised pair together even when it contains spaces.
fn tokenize(line: usize, stmt: &str, offset: usize) -> Result<Vec<Token<'_>>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = stmt.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = stmt.len();
        if c == '(' {
            match stmt[start..].find(')') {
                Some(close) => end = start + close + 1,
                None => {
                    return Err(ParseError {
                        line,
                        column: offset + stmt[..start].chars().count() + 1,
                        message: "unclosed '('".into(),
                    })
                }
            }
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
        } else {
            while let Some(&(i, ch)) = chars.peek() {
                if ch.is_whitespace() {
                    end = i;
                    break;
                }
                chars.next();
            }
        }
        tokens.push(Token {
            column: offset + stmt[..start].chars().count() + 1,
            text: &stmt[start..end],
        });
    }
    Ok(tokens)
}

struct Statement<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
    end_column: usize,
}

impl<'a> Statement<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn arg(&self, k: usize, what: &str) -> Result<&Token<'a>, ParseError> {
        self.tokens
            .get(k)
            .ok_or_else(|| self.error(self.end_column, format!("{} expects {what}", self.tokens[0].text)))
    }

    fn cycle(&self, k: usize) -> Result<Cycle, ParseError> {
        let tok = self.arg(k, "a cycle (L or R)")?;
        match tok.text {
            "L" => Ok(Cycle::Left),
            "R" => Ok(Cycle::Right),
            other => Err(self.error(tok.column, format!("expected a cycle L or R, found `{other}`"))),
        }
    }

    fn position(&self, k: usize) -> Result<usize, ParseError> {
        let tok = self.arg(k, "a cycle position")?;
        let value: usize = tok
            .text
            .parse()
            .map_err(|_| self.error(tok.column, format!("expected a position, found `{}`", tok.text)))?;
        if value == 0 {
            return Err(self.error(tok.column, "position 0 is the hub, which only sync updates"));
        }
        Ok(value)
    }

    fn pair(&self, k: usize) -> Result<PairLiteral, ParseError> {
        let tok = self.arg(k, "a configuration (w_l,w_r)")?;
        let (left, right) = parse_pair(tok.text).map_err(|e| self.error(tok.column, e.to_string()))?;
        Ok(PairLiteral { left, right })
    }

    fn bit(&self, k: usize) -> Result<bool, ParseError> {
        let tok = self.arg(k, "a bit (0 or 1)")?;
        match tok.text {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(self.error(tok.column, format!("expected 0 or 1, found `{other}`"))),
        }
    }

    fn finish(&self, arity: usize, ins: Instruction) -> Result<Instruction, ParseError> {
        match self.tokens.get(arity + 1) {
            Some(extra) => Err(self.error(extra.column, format!("unexpected argument `{}`", extra.text))),
            None => Ok(ins),
        }
    }

    fn instruction(&self) -> Result<Instruction, ParseError> {
        let head = &self.tokens[0];
        let (arity, ins) = match head.text {
            "sync" => (0, Instruction::Sync),
            "update" => (2, Instruction::Update(self.cycle(1)?, self.position(2)?)),
            "incUp" => (
                3,
                Instruction::IncUp(self.cycle(1)?, self.position(2)?, self.position(3)?),
            ),
            "decUp" => (
                3,
                Instruction::DecUp(self.cycle(1)?, self.position(2)?, self.position(3)?),
            ),
            "erase" => (1, Instruction::Erase(self.cycle(1)?)),
            "expand" => (1, Instruction::Expand(self.cycle(1)?)),
            "shift" => (1, Instruction::Shift(self.cycle(1)?)),
            "copy_c" => (
                2,
                Instruction::Macro(Macro::CopyC {
                    cycle: self.cycle(1)?,
                    target: self.pair(2)?,
                }),
            ),
            "copy" => (1, Instruction::Macro(Macro::Copy { target: self.pair(1)? })),
            "copy_p" => (1, Instruction::Macro(Macro::CopyP { target: self.pair(1)? })),
            "comp_bit" => (1, Instruction::Macro(Macro::CompBit(self.bit(1)?))),
            name => {
                let m = match name {
                    "fix0" => Macro::Fix0,
                    "fix1" => Macro::Fix1,
                    "simp" => Macro::Simp,
                    "comp1" => Macro::Comp1,
                    "comp2" => Macro::Comp2,
                    "comp" => Macro::Comp,
                    "sigma_a" => Macro::SigmaA,
                    "sigma_a_inv" => Macro::SigmaAInv,
                    "sigma_b" => Macro::SigmaB,
                    "sigma_b_inv" => Macro::SigmaBInv,
                    _ => return Err(self.error(head.column, format!("unknown instruction or macro `{name}`"))),
                };
                (0, Instruction::Macro(m))
            }
        };
        self.finish(arity, ins)
    }
}

pub fn parse(text: &str) -> Result<Program, ParseError> {
    let mut instructions = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let code = raw.split_once('#').map_or(raw, |(code, _)| code);
        let mut offset = 0;
        for stmt in code.split(';') {
            let tokens = tokenize(line, stmt, offset)?;
            let width = stmt.chars().count();
            if !tokens.is_empty() {
                let statement = Statement {
                    line,
                    tokens,
                    end_column: offset + width + 1,
                };
                instructions.push(statement.instruction()?);
            }
            offset += width + 1;
        }
    }
    Ok(Program { instructions })
}
