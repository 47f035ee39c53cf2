//! Empty-tape execution of partial machines.
//!
//! A run starts in state 0 at position 0 on a blank tape. Each step looks
//! up `2 * state + read`; a missing rule halts the machine without counting
//! a step. Only executed transitions are counted.

use std::fmt;

use crate::error::NotHalted;
use crate::machine::Machine;
use crate::tape::{count_ones, Tape};

pub const DEFAULT_STEP_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Halted,
    StepLimitExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Halted => "halted",
            Status::StepLimitExceeded => "limit",
        })
    }
}

/// Result of a run. `ones` is the count at termination, which for a capped
/// run is the count after `steps` transitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RunOutcome {
    pub status: Status,
    pub steps: u64,
    pub ones: u64,
    /// Number of distinct cells that were ever under the head.
    pub extent: u64,
}

impl RunOutcome {
    pub fn halted(&self) -> bool {
        self.status == Status::Halted
    }
}

/// Counts under the model with an explicit halting transition that writes 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadoCounts {
    pub steps: u64,
    pub ones: u64,
}

pub fn rado_report(outcome: &RunOutcome) -> Result<RadoCounts, NotHalted> {
    if !outcome.halted() {
        return Err(NotHalted {
            steps: outcome.steps,
        });
    }
    Ok(RadoCounts {
        steps: outcome.steps + 1,
        ones: outcome.ones + 1,
    })
}

const HALT: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Transition {
    // 2 * next state, or HALT
    next: u32,
    write: u8,
    delta: i8,
}

/// A machine in mid-run.
#[derive(Debug, Clone)]
pub struct Simulation {
    table: Vec<Transition>,
    tape: Tape,
    state: u32,
    steps: u64,
}

impl Simulation {
    pub fn new(machine: &Machine) -> Self {
        let table = machine
            .table()
            .iter()
            .map(|slot| match slot {
                Some(code) => {
                    let action = code
                        .decode(machine.states())
                        .expect("machine codes are validated on construction");
                    Transition {
                        next: 2 * action.next_state,
                        write: action.write,
                        delta: action.movement.delta() as i8,
                    }
                }
                None => Transition {
                    next: HALT,
                    write: 0,
                    delta: 0,
                },
            })
            .collect();
        Simulation {
            table,
            tape: Tape::new(),
            state: 0,
            steps: 0,
        }
    }

    pub fn tape(&self) -> &Tape {
        &self.tape
    }

    pub fn state(&self) -> u32 {
        self.state
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// True when no rule applies to the current configuration.
    pub fn is_halted(&self) -> bool {
        self.table[(2 * self.state) as usize + self.tape.read() as usize].next == HALT
    }

    /// Executes up to `budget` transitions; returns true once halted.
    pub fn advance(&mut self, budget: u64) -> bool {
        let table = self.table.as_slice();
        let mut rule_base = 2 * self.state as usize;
        let mut remaining = budget;

        let tape = &mut self.tape;
        let mut head = tape.head;
        let mut min = tape.min;
        let mut max = tape.max;

        let halted = loop {
            let t = table[rule_base + tape.cells[head] as usize];
            if t.next == HALT {
                break true;
            }
            if remaining == 0 {
                break false;
            }
            tape.cells[head] = t.write;
            let target = head as isize + t.delta as isize;
            if target < 0 || target as usize >= tape.cells.len() {
                tape.head = head;
                tape.min = min;
                tape.max = max;
                tape.grow_for(target);
                head = tape.head;
                min = tape.min;
                max = tape.max;
            }
            head = (head as isize + t.delta as isize) as usize;
            min = min.min(head);
            max = max.max(head);
            rule_base = t.next as usize;
            remaining -= 1;
        };

        tape.head = head;
        tape.min = min;
        tape.max = max;
        self.state = (rule_base / 2) as u32;
        self.steps += budget - remaining;
        halted
    }

    /// Single transition; returns false if the machine was already halted.
    pub fn step(&mut self) -> bool {
        if self.is_halted() {
            return false;
        }
        self.advance(1);
        true
    }

    pub fn outcome(&self) -> RunOutcome {
        RunOutcome {
            status: if self.is_halted() {
                Status::Halted
            } else {
                Status::StepLimitExceeded
            },
            steps: self.steps,
            ones: count_ones(&self.tape),
            extent: self.tape.extent_width(),
        }
    }
}

/// Runs `machine` from the blank tape for at most `step_limit` transitions.
///
/// A machine that halts after exactly `step_limit` steps is reported as
/// halted.
pub fn run(machine: &Machine, step_limit: u64) -> RunOutcome {
    let mut sim = Simulation::new(machine);
    sim.advance(step_limit);
    sim.outcome()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{decode_name, StateCount};

    fn m(name: &str) -> Machine {
        decode_name(name, StateCount::BB5).unwrap()
    }

    #[test]
    fn empty_machine_halts_immediately() {
        for cap in [0, 1, 1000] {
            let o = run(&m("(0)"), cap);
            assert_eq!(o.status, Status::Halted);
            assert_eq!((o.steps, o.ones, o.extent), (0, 0, 1));
        }
    }

    #[test]
    fn self_loop_hits_the_cap() {
        // (0,0) -> (0,1,Right)
        let o = run(&m("(1, 0, 5)"), 1000);
        assert_eq!(o.status, Status::StepLimitExceeded);
        assert_eq!(o.steps, 1000);
        assert_eq!(o.ones, 1000);
        assert_eq!(o.extent, 1001);
    }

    #[test]
    fn one_step_then_undefined_state() {
        let o = run(&m("(1, 0, 11)"), 1000);
        assert_eq!(o.status, Status::Halted);
        assert_eq!((o.steps, o.ones), (1, 1));
    }

    #[test]
    fn halting_exactly_at_the_cap_counts_as_halted() {
        let o = run(&m("(1, 0, 11)"), 1);
        assert_eq!(o.status, Status::Halted);
        assert_eq!(o.steps, 1);
        let o = run(&m("(1, 0, 11)"), 0);
        assert_eq!(o.status, Status::StepLimitExceeded);
        assert_eq!(o.steps, 0);
    }

    #[test]
    fn stay_moves_keep_the_head() {
        // (0,0)->(1,1,Stay); (1,1)->(0,0,Stay) loops on one cell
        let o = run(&m("(2, 0, 10, 3, 1)"), 99);
        assert_eq!(o.status, Status::StepLimitExceeded);
        assert_eq!(o.extent, 1);
        assert_eq!(o.ones, 1);
    }

    #[test]
    fn rado_conversion() {
        let o = RunOutcome {
            status: Status::Halted,
            steps: 70_740_809,
            ones: 4097,
            extent: 0,
        };
        assert_eq!(
            rado_report(&o).unwrap(),
            RadoCounts {
                steps: 70_740_810,
                ones: 4098
            }
        );
        let empty = run(&m("(0)"), 10);
        assert_eq!(rado_report(&empty).unwrap(), RadoCounts { steps: 1, ones: 1 });
        let capped = run(&m("(1, 0, 5)"), 10);
        assert_eq!(rado_report(&capped), Err(NotHalted { steps: 10 }));
    }

    #[test]
    fn stepping_matches_advance() {
        let machine = m("(9, 0, 11, 1, 12, 2, 17, 3, 23, 4, 3, 5, 8, 6, 26, 8, 15, 9, 5)");
        let mut stepped = Simulation::new(&machine);
        for _ in 0..5000 {
            stepped.step();
        }
        let mut bulk = Simulation::new(&machine);
        bulk.advance(5000);
        assert_eq!(stepped.outcome(), bulk.outcome());
        assert_eq!(stepped.state(), bulk.state());
        assert_eq!(stepped.tape().visited(), bulk.tape().visited());
    }
}
