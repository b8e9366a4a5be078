//! Circuit netlists and the depth of logical operation `χ`.
//!
//! `χ` is the largest number of instructions touching a single qubit within
//! one error-correction period. Every incidence counts once, whatever the
//! gate or the qubit's role in it.
//!
//! Text format, one directive per line:
//!
//! ```text
//! # comment
//! qubits a b c        optional, repeatable
//! gate cx a b         gate name, then one or more distinct qubits
//! period              error-correction period boundary
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("qubit `{0}` appears twice in one instruction")]
    DuplicateQubit(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A gate applied to an ordered list of distinct qubits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instruction {
    gate: String,
    qubits: Vec<String>,
}

impl Instruction {
    /// Gate names are case-insensitive and stored lower-cased.
    pub fn new<S: Into<String>>(gate: &str, qubits: impl IntoIterator<Item = S>) -> Result<Self, ParseErrorKind> {
        if gate.is_empty() || gate.contains(char::is_whitespace) {
            return Err(ParseErrorKind::Malformed(format!("invalid gate name `{gate}`")));
        }
        let qubits: Vec<String> = qubits.into_iter().map(Into::into).collect();
        if qubits.is_empty() {
            return Err(ParseErrorKind::Malformed(format!("gate `{gate}` has no qubits")));
        }
        for (i, q) in qubits.iter().enumerate() {
            if !is_qubit_name(q) {
                return Err(ParseErrorKind::Malformed(format!("invalid qubit name `{q}`")));
            }
            if qubits[..i].contains(q) {
                return Err(ParseErrorKind::DuplicateQubit(q.clone()));
            }
        }
        Ok(Self {
            gate: gate.to_lowercase(),
            qubits,
        })
    }

    pub fn gate(&self) -> &str {
        &self.gate
    }

    pub fn qubits(&self) -> &[String] {
        &self.qubits
    }
}

fn is_qubit_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Qubits in first-declared order plus instructions grouped into
/// error-correction periods. Always holds at least one (possibly empty) period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    qubit_names: Vec<String>,
    periods: Vec<Vec<Instruction>>,
}

impl Default for Circuit {
    fn default() -> Self {
        Self::new()
    }
}

impl Circuit {
    pub fn new() -> Self {
        Self {
            qubit_names: Vec::new(),
            periods: vec![Vec::new()],
        }
    }

    pub fn qubit_names(&self) -> &[String] {
        &self.qubit_names
    }

    pub fn periods(&self) -> &[Vec<Instruction>] {
        &self.periods
    }

    pub fn instruction_count(&self) -> usize {
        self.periods.iter().map(Vec::len).sum()
    }

    /// Declares a qubit; redeclaring is a no-op.
    pub fn declare_qubit(&mut self, name: &str) -> Result<(), ParseErrorKind> {
        if !is_qubit_name(name) {
            return Err(ParseErrorKind::Malformed(format!("invalid qubit name `{name}`")));
        }
        if !self.qubit_names.iter().any(|q| q == name) {
            self.qubit_names.push(name.to_string());
        }
        Ok(())
    }

    /// Appends to the current period, declaring any new qubits.
    pub fn push(&mut self, instruction: Instruction) {
        for q in &instruction.qubits {
            if !self.qubit_names.contains(q) {
                self.qubit_names.push(q.clone());
            }
        }
        self.periods.last_mut().expect("at least one period").push(instruction);
    }

    /// Starts a new error-correction period.
    pub fn begin_period(&mut self) {
        self.periods.push(Vec::new());
    }

    /// Serializes to the text format. Parsing the output gives back an equal circuit.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.qubit_names.is_empty() {
            writeln!(f, "qubits {}", self.qubit_names.join(" "))?;
        }
        for (i, period) in self.periods.iter().enumerate() {
            if i > 0 {
                writeln!(f, "period")?;
            }
            for ins in period {
                writeln!(f, "gate {} {}", ins.gate, ins.qubits.join(" "))?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Circuit {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_circuit(s)
    }
}

pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit = Circuit::new();
    for (idx, raw) in text.lines().enumerate() {
        let at = |kind| ParseError { line: idx + 1, kind };
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(directive) = tokens.next() else {
            continue;
        };
        match directive {
            "qubits" => {
                let names: Vec<&str> = tokens.collect();
                if names.is_empty() {
                    return Err(at(ParseErrorKind::Malformed("`qubits` needs at least one name".into())));
                }
                for name in names {
                    circuit.declare_qubit(name).map_err(at)?;
                }
            }
            "gate" => {
                let Some(gate) = tokens.next() else {
                    return Err(at(ParseErrorKind::Malformed("`gate` needs a gate name".into())));
                };
                let ins = Instruction::new(gate, tokens).map_err(at)?;
                circuit.push(ins);
            }
            "period" => {
                if let Some(extra) = tokens.next() {
                    return Err(at(ParseErrorKind::Malformed(format!(
                        "unexpected `{extra}` after `period`"
                    ))));
                }
                circuit.begin_period();
            }
            other => return Err(at(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    Ok(circuit)
}

/// Per-period, per-qubit operation counts and their maximum `χ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub qubit_names: Vec<String>,
    /// `counts[period][qubit]`, qubits in the circuit's declaration order.
    pub counts: Vec<Vec<usize>>,
    pub chi: usize,
    /// Where `χ` is attained: lowest period first, then the lexicographically
    /// smallest qubit name. `None` when `χ = 0`.
    pub argmax: Option<(usize, String)>,
}

impl DepthReport {
    pub fn count(&self, period: usize, qubit: &str) -> Option<usize> {
        let q = self.qubit_names.iter().position(|n| n == qubit)?;
        self.counts.get(period).map(|row| row[q])
    }

    /// Largest count of `qubit` over all periods.
    pub fn qubit_max(&self, qubit: &str) -> Option<usize> {
        let q = self.qubit_names.iter().position(|n| n == qubit)?;
        self.counts.iter().map(|row| row[q]).max()
    }
}

pub fn logical_depth(circuit: &Circuit) -> DepthReport {
    let index: HashMap<&str, usize> = circuit
        .qubit_names
        .iter()
        .enumerate()
        .map(|(i, q)| (q.as_str(), i))
        .collect();
    let width = circuit.qubit_names.len();

    let counts: Vec<Vec<usize>> = circuit
        .periods
        .iter()
        .map(|period| {
            let mut row = vec![0usize; width];
            for ins in period {
                for q in &ins.qubits {
                    row[index[q.as_str()]] += 1;
                }
            }
            row
        })
        .collect();

    let mut chi = 0;
    let mut argmax: Option<(usize, &str)> = None;
    for (p, row) in counts.iter().enumerate() {
        for (q, &c) in row.iter().enumerate() {
            let name = circuit.qubit_names[q].as_str();
            let better = match argmax {
                None => c > 0,
                Some((bp, bn)) => c > chi || (c == chi && bp == p && name < bn),
            };
            if better {
                chi = c;
                argmax = Some((p, name));
            }
        }
    }

    DepthReport {
        qubit_names: circuit.qubit_names.clone(),
        counts,
        chi,
        argmax: argmax.map(|(p, n)| (p, n.to_string())),
    }
}
