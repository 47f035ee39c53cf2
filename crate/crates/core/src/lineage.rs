//! Nested recombination records.
//!
//! Text form:
//!
//! ```text
//! lineage := leaf | node
//! leaf    := "[" id "]"
//! node    := "[" "recomb" "cuts=(" [int ("," int)*] ")" lineage+ "]"
//! ```
//!
//! `id` is any run of characters other than whitespace, brackets and `=`.
//! A node with `c` cuts has exactly `c + 1` children, listed in source order:
//! `[recomb cuts=(7,9) [row:5] [row:2] [row:1]]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::LineageError;
use crate::machine::Machine;
use crate::recombine::recombine;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Lineage {
    Leaf(String),
    Node {
        cuts: Vec<usize>,
        children: Vec<Lineage>,
    },
}

/// Lookup of machines by id.
pub trait MachineRegistry {
    fn resolve(&self, id: &str) -> Option<&Machine>;
}

impl MachineRegistry for HashMap<String, Machine> {
    fn resolve(&self, id: &str) -> Option<&Machine> {
        self.get(id)
    }
}

impl MachineRegistry for BTreeMap<String, Machine> {
    fn resolve(&self, id: &str) -> Option<&Machine> {
        self.get(id)
    }
}

impl Lineage {
    pub fn leaf(id: impl Into<String>) -> Self {
        Lineage::Leaf(id.into())
    }

    pub fn node(cuts: Vec<usize>, children: Vec<Lineage>) -> Self {
        Lineage::Node { cuts, children }
    }

    pub fn evaluate<R: MachineRegistry + ?Sized>(&self, registry: &R) -> Result<Machine, LineageError> {
        match self {
            Lineage::Leaf(id) => registry
                .resolve(id)
                .cloned()
                .ok_or_else(|| LineageError::UnresolvedLeaf(id.clone())),
            Lineage::Node { cuts, children } => {
                let machines = children
                    .iter()
                    .map(|child| child.evaluate(registry))
                    .collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&Machine> = machines.iter().collect();
                Ok(recombine(&refs, cuts)?)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Lineage::Leaf(_) => 0,
            Lineage::Node { children, .. } => {
                1 + children.iter().map(Lineage::depth).max().unwrap_or(0)
            }
        }
    }

    /// Leaf ids in left-to-right order.
    pub fn leaves(&self) -> Vec<&str> {
        match self {
            Lineage::Leaf(id) => vec![id.as_str()],
            Lineage::Node { children, .. } => children.iter().flat_map(Lineage::leaves).collect(),
        }
    }
}

pub fn evaluate_lineage<R: MachineRegistry + ?Sized>(
    lineage: &Lineage,
    registry: &R,
) -> Result<Machine, LineageError> {
    lineage.evaluate(registry)
}

impl fmt::Display for Lineage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lineage::Leaf(id) => write!(f, "[{id}]"),
            Lineage::Node { cuts, children } => {
                let cuts: Vec<String> = cuts.iter().map(|c| c.to_string()).collect();
                write!(f, "[recomb cuts=({})", cuts.join(","))?;
                for child in children {
                    write!(f, " {child}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl FromStr for Lineage {
    type Err = LineageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { text: s, pos: 0 };
        let lineage = parser.lineage()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(lineage)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> LineageError {
        LineageError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn expect(&mut self, token: &str) -> Result<(), LineageError> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| c.is_whitespace() || c == '[' || c == ']' || c == '=')
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn lineage(&mut self) -> Result<Lineage, LineageError> {
        self.expect("[")?;
        let word = self.word().to_string();
        if word.is_empty() {
            return Err(self.error("expected an id or `recomb`"));
        }
        if word != "recomb" || self.rest().trim_start().starts_with(']') {
            self.expect("]")?;
            return Ok(Lineage::Leaf(word));
        }

        self.expect("cuts=(")?;
        let close = self
            .rest()
            .find(')')
            .ok_or_else(|| self.error("unterminated cut list"))?;
        let list = &self.rest()[..close];
        let cuts = list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| self.error("malformed cut"))?;
        self.pos += close + 1;

        let mut children = Vec::new();
        loop {
            self.skip_ws();
            if self.rest().starts_with(']') {
                self.pos += 1;
                break;
            }
            if self.rest().is_empty() {
                return Err(self.error("unterminated node"));
            }
            children.push(self.lineage()?);
        }
        if children.len() != cuts.len() + 1 {
            return Err(self.error(&format!(
                "node with {} cuts needs {} children, found {}",
                cuts.len(),
                cuts.len() + 1,
                children.len()
            )));
        }
        Ok(Lineage::Node { cuts, children })
    }
}
