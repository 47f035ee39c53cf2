//! Reference interpreter shared by the oracle and acceptance suites.
//!
//! Deliberately naive: a hash-map tape and arithmetic decoding of action
//! codes straight from the raw table.

#![allow(dead_code)]

use std::collections::HashMap;

/// Returns (halted, steps, ones, leftmost, rightmost).
pub fn reference_run(table: &[Option<u32>], cap: u64) -> (bool, u64, u64, i64, i64) {
    let mut tape: HashMap<i64, u8> = HashMap::new();
    let (mut head, mut state, mut steps) = (0i64, 0u32, 0u64);
    let (mut lo, mut hi) = (0i64, 0i64);
    loop {
        let read = *tape.get(&head).unwrap_or(&0);
        let Some(code) = table[(2 * state + read as u32) as usize] else {
            let ones = tape.values().filter(|&&v| v == 1).count() as u64;
            return (true, steps, ones, lo, hi);
        };
        if steps == cap {
            let ones = tape.values().filter(|&&v| v == 1).count() as u64;
            return (false, steps, ones, lo, hi);
        }
        let next = code / 6;
        let write = (code % 6) / 3;
        let mv = code % 3;
        tape.insert(head, write as u8);
        head += mv as i64 - 1;
        lo = lo.min(head);
        hi = hi.max(head);
        state = next;
        steps += 1;
    }
}

/// Every table over `n` states: each slot undefined or one of `6n` codes.
pub fn all_tables(n: u32) -> Vec<Vec<Option<u32>>> {
    let slots = 2 * n as usize;
    let choices: Vec<Option<u32>> = std::iter::once(None).chain((0..6 * n).map(Some)).collect();
    let mut tables = vec![Vec::new()];
    for _ in 0..slots {
        tables = tables
            .into_iter()
            .flat_map(|t| {
                choices.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(*c);
                    t
                })
            })
            .collect();
    }
    tables
}
