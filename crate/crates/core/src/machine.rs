//! Machine model and the integer-tuple naming scheme.
//!
//! A machine over `n` states reads a binary tape. Its rule table has `2n`
//! slots, one per `(state, read)` pair, addressed by `2 * state + read`.
//! A defined slot holds an action code `6 * next + 3 * write + move` with
//! `move` being 0 (left), 1 (stay) or 2 (right). Undefined slots halt.
//!
//! Names list the defined slots as `(r, i1, c1, ..., ir, cr)`, where `r`
//! is the number of defined rules and the indices ascend.

use std::fmt;

use crate::error::{ListingError, NameError};

/// Number of states of a machine. Always at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateCount(u32);

impl StateCount {
    pub const BB5: StateCount = StateCount(5);

    /// Largest supported state count; keeps every action code below `u16::MAX`.
    pub const MAX: u32 = 10_000;

    pub fn new(n: u32) -> Option<Self> {
        (1..=Self::MAX).contains(&n).then_some(StateCount(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Size of the rule-index space, `2n`.
    pub fn rule_slots(self) -> usize {
        2 * self.0 as usize
    }

    /// Size of the action-code space, `6n`.
    pub fn action_codes(self) -> u32 {
        6 * self.0
    }
}

impl Default for StateCount {
    fn default() -> Self {
        Self::BB5
    }
}

impl fmt::Display for StateCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Left,
    Stay,
    Right,
}

impl Move {
    pub fn code(self) -> u32 {
        match self {
            Move::Left => 0,
            Move::Stay => 1,
            Move::Right => 2,
        }
    }

    pub fn from_code(code: u32) -> Option<Self> {
        match code {
            0 => Some(Move::Left),
            1 => Some(Move::Stay),
            2 => Some(Move::Right),
            _ => None,
        }
    }

    /// Head displacement.
    pub fn delta(self) -> isize {
        self.code() as isize - 1
    }
}

/// Decoded right-hand side of a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Action {
    pub next_state: u32,
    pub write: u8,
    pub movement: Move,
}

impl Action {
    pub fn new(next_state: u32, write: u8, movement: Move) -> Self {
        Action {
            next_state,
            write,
            movement,
        }
    }

    pub fn encode(self) -> ActionCode {
        ActionCode(6 * self.next_state + 3 * u32::from(self.write) + self.movement.code())
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.next_state,
            self.write,
            self.movement.code()
        )
    }
}

/// Packed action `6 * next + 3 * write + move`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionCode(pub u32);

impl ActionCode {
    pub fn decode(self, n: StateCount) -> Result<Action, NameError> {
        decode_action(self.0, n)
    }
}

pub fn decode_action(code: u32, n: StateCount) -> Result<Action, NameError> {
    if code >= n.action_codes() {
        return Err(NameError::CodeOutOfRange {
            position: None,
            code: u64::from(code),
            limit: n.action_codes(),
        });
    }
    Ok(Action {
        next_state: code / 6,
        write: ((code % 6) / 3) as u8,
        movement: Move::from_code(code % 3).expect("code % 3 is a valid move"),
    })
}

/// `2 * state + read`.
pub fn rule_index(state: u32, read: u8) -> usize {
    2 * state as usize + usize::from(read & 1)
}

/// A partial transition table over `n` states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Machine {
    states: StateCount,
    table: Vec<Option<ActionCode>>,
}

impl Machine {
    /// Machine with no rules; it halts before its first step.
    pub fn empty(states: StateCount) -> Self {
        Machine {
            states,
            table: vec![None; states.rule_slots()],
        }
    }

    /// Builds a machine from a full table of `2n` slots.
    pub fn from_table(
        states: StateCount,
        table: Vec<Option<ActionCode>>,
    ) -> Result<Self, NameError> {
        if table.len() != states.rule_slots() {
            return Err(NameError::TableSize {
                expected: states.rule_slots(),
                found: table.len(),
            });
        }
        for (index, code) in table.iter().enumerate() {
            if let Some(code) = code {
                if code.0 >= states.action_codes() {
                    return Err(NameError::CodeOutOfRange {
                        position: Some(index),
                        code: u64::from(code.0),
                        limit: states.action_codes(),
                    });
                }
            }
        }
        Ok(Machine { states, table })
    }

    pub fn states(&self) -> StateCount {
        self.states
    }

    pub fn table(&self) -> &[Option<ActionCode>] {
        &self.table
    }

    pub fn get(&self, index: usize) -> Option<ActionCode> {
        self.table.get(index).copied().flatten()
    }

    pub fn action(&self, state: u32, read: u8) -> Option<Action> {
        self.get(rule_index(state, read))
            .map(|code| code.decode(self.states).expect("validated on construction"))
    }

    /// Sets or clears one slot.
    pub fn set(&mut self, index: usize, code: Option<ActionCode>) -> Result<(), NameError> {
        let slots = self.states.rule_slots();
        if index >= slots {
            return Err(NameError::IndexOutOfRange {
                position: None,
                index: index as u64,
                limit: slots,
            });
        }
        if let Some(c) = code {
            if c.0 >= self.states.action_codes() {
                return Err(NameError::CodeOutOfRange {
                    position: None,
                    code: u64::from(c.0),
                    limit: self.states.action_codes(),
                });
            }
        }
        self.table[index] = code;
        Ok(())
    }

    pub fn defined_rules(&self) -> impl Iterator<Item = (usize, ActionCode)> + '_ {
        self.table
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| (i, c)))
    }

    pub fn rule_count(&self) -> usize {
        self.table.iter().filter(|c| c.is_some()).count()
    }

    pub fn name(&self) -> MachineName {
        MachineName {
            pairs: self.defined_rules().collect(),
        }
    }

    /// Rule listing in the `(state, read)->(next, write, move)` form.
    pub fn rule_listing(&self) -> String {
        let mut out = String::new();
        for (index, code) in self.defined_rules() {
            let action = code.decode(self.states).expect("validated on construction");
            out.push_str(&format!("({}, {})->{}\n", index / 2, index % 2, action));
        }
        out
    }
}

impl fmt::Display for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name().fmt(f)
    }
}

/// Canonical name: the defined rules in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MachineName {
    pairs: Vec<(usize, ActionCode)>,
}

impl MachineName {
    pub fn pairs(&self) -> &[(usize, ActionCode)] {
        &self.pairs
    }

    pub fn rule_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn to_machine(&self, states: StateCount) -> Result<Machine, NameError> {
        let mut machine = Machine::empty(states);
        for (position, &(index, code)) in self.pairs.iter().enumerate() {
            machine.set(index, Some(code)).map_err(|e| e.at(position))?;
        }
        Ok(machine)
    }
}

impl fmt::Display for MachineName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.pairs.len())?;
        for (index, code) in &self.pairs {
            write!(f, ", {}, {}", index, code.0)?;
        }
        f.write_str(")")
    }
}

/// Parses a name in either the counted form `(r, i1, c1, ...)` or the bare
/// row form `i1, c1, ...` (no leading count).
pub fn decode_name(text: &str, states: StateCount) -> Result<Machine, NameError> {
    let numbers = parse_integer_list(text)?;

    let (pairs_start, declared) = if numbers.len() % 2 == 1 {
        let declared = numbers[0];
        let actual = (numbers.len() - 1) / 2;
        if declared != actual as u64 {
            return Err(NameError::CountMismatch { declared, actual });
        }
        (1, actual)
    } else {
        (0, numbers.len() / 2)
    };

    let slots = states.rule_slots();
    let mut machine = Machine::empty(states);
    let mut previous: Option<u64> = None;
    for pair in 0..declared {
        let at = pairs_start + 2 * pair;
        let index = numbers[at];
        let code = numbers[at + 1];
        if index >= slots as u64 {
            return Err(NameError::IndexOutOfRange {
                position: Some(at),
                index,
                limit: slots,
            });
        }
        if code >= u64::from(states.action_codes()) {
            return Err(NameError::CodeOutOfRange {
                position: Some(at + 1),
                code,
                limit: states.action_codes(),
            });
        }
        match previous {
            Some(p) if p == index => {
                return Err(NameError::DuplicateIndex {
                    position: at,
                    index,
                })
            }
            Some(p) if p > index => {
                return Err(NameError::NotAscending {
                    position: at,
                    index,
                    previous: p,
                })
            }
            _ => {}
        }
        previous = Some(index);
        machine.table[index as usize] = Some(ActionCode(code as u32));
    }
    Ok(machine)
}

/// Canonical counted name of `machine`.
pub fn encode_name(machine: &Machine) -> String {
    machine.name().to_string()
}

/// Parses a rule listing, one `(state, read)->(next, write, move)` rule per
/// line. Blank lines and `#` comments are skipped.
pub fn parse_rule_listing(text: &str, states: StateCount) -> Result<Machine, ListingError> {
    let mut machine = Machine::empty(states);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| ListingError { line, message };
        let (lhs, rhs) = content
            .split_once("->")
            .ok_or_else(|| err("expected `(state, read)->(next, write, move)`".into()))?;
        let numbers = |side: &str| -> Result<Vec<u32>, ListingError> {
            side.trim()
                .trim_start_matches('(')
                .trim_end_matches(')')
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err(format!("malformed integers in {side:?}")))
        };
        let (from, to) = (numbers(lhs)?, numbers(rhs)?);
        let (&[state, read], &[next, write, movement]) = (&from[..], &to[..]) else {
            return Err(err("expected two integers before `->` and three after".into()));
        };
        if state >= states.get() || next >= states.get() {
            return Err(err(format!("state out of range [0, {states})")));
        }
        if read > 1 || write > 1 {
            return Err(err("symbols must be 0 or 1".into()));
        }
        let movement = Move::from_code(movement)
            .ok_or_else(|| err(format!("move {movement} is not 0, 1 or 2")))?;
        let index = rule_index(state, read as u8);
        if machine.get(index).is_some() {
            return Err(err(format!("rule ({state}, {read}) given twice")));
        }
        let code = Action::new(next, write as u8, movement).encode();
        machine.table[index] = Some(code);
    }
    Ok(machine)
}

fn parse_integer_list(text: &str) -> Result<Vec<u64>, NameError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix('(') {
        body = rest
            .strip_suffix(')')
            .ok_or(NameError::UnbalancedParens)?;
    } else if body.ends_with(')') {
        return Err(NameError::UnbalancedParens);
    }
    let body = body.trim().trim_end_matches(|c: char| c == ',' || c.is_whitespace());

    let mut numbers = Vec::new();
    if body.is_empty() {
        return Ok(numbers);
    }
    for (position, token) in body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let value = token.parse::<u64>().map_err(|_| NameError::MalformedInteger {
            position,
            token: token.to_string(),
        })?;
        numbers.push(value);
    }
    Ok(numbers)
}
