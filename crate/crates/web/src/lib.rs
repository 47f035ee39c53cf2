//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Errors cross the boundary as plain strings so the same functions can be
//! unit tested natively.

use bbrecomb::{
    builtin_pool, decode_name, golden_pool, recombine, run as simulate, Machine, Simulation,
    StateCount,
};
use wasm_bindgen::prelude::*;

/// Cell codes in a space-time diagram.
pub const BLANK: u8 = 0;
pub const ONE: u8 = 1;
pub const HEAD_ON_BLANK: u8 = 2;
pub const HEAD_ON_ONE: u8 = 3;

/// Largest cap the demo accepts; keeps the page responsive.
pub const MAX_DEMO_STEPS: u32 = 200_000_000;

#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    name: String,
    halted: bool,
    steps: f64,
    ones: f64,
    extent: f64,
}

#[wasm_bindgen]
impl RunSummary {
    #[wasm_bindgen(getter)]
    pub fn name(&self) -> String {
        self.name.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn halted(&self) -> bool {
        self.halted
    }

    #[wasm_bindgen(getter)]
    pub fn steps(&self) -> f64 {
        self.steps
    }

    #[wasm_bindgen(getter)]
    pub fn ones(&self) -> f64 {
        self.ones
    }

    #[wasm_bindgen(getter)]
    pub fn extent(&self) -> f64 {
        self.extent
    }
}

fn lookup(text: &str) -> Result<Machine, String> {
    let text = text.trim();
    let catalog = builtin_pool();
    let golden = golden_pool();
    if let Some(entry) = catalog.get(text).or_else(|| golden.get(text)) {
        return Ok(entry.machine.clone());
    }
    decode_name(text, StateCount::BB5).map_err(|e| e.to_string())
}

/// The catalog as pool-file lines, seeds first.
#[wasm_bindgen]
pub fn catalog() -> String {
    let mut text = builtin_pool().to_pool_file();
    text.push_str(&golden_pool().to_pool_file());
    text
}

/// Simulates a machine given by name or catalog id.
#[wasm_bindgen]
pub fn run_machine(machine: &str, step_limit: u32) -> Result<RunSummary, String> {
    let m = lookup(machine)?;
    let outcome = simulate(&m, u64::from(step_limit.min(MAX_DEMO_STEPS)));
    Ok(RunSummary {
        name: m.to_string(),
        halted: outcome.halted(),
        steps: outcome.steps as f64,
        ones: outcome.ones as f64,
        extent: outcome.extent as f64,
    })
}

/// Recombines catalog ids or names (one per line) at comma-separated cuts and
/// returns the resulting name.
#[wasm_bindgen]
pub fn recombine_sources(sources: &str, cuts: &str) -> Result<String, String> {
    let machines = sources
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(lookup)
        .collect::<Result<Vec<_>, _>>()?;
    let cuts = cuts
        .split(',')
        .map(str::trim)
        .filter(|c| !c.is_empty())
        .map(|c| c.parse::<usize>().map_err(|_| format!("bad cut {c:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Machine> = machines.iter().collect();
    recombine(&refs, &cuts).map(|m| m.to_string()).map_err(|e| e.to_string())
}

/// Space-time diagram: `rows` tape snapshots of `width` cells centred on the
/// start cell, one per step after skipping `skip` steps. Rows after a halt
/// repeat the final tape.
#[wasm_bindgen]
pub fn space_time(machine: &str, skip: u32, rows: u32, width: u32) -> Result<Vec<u8>, String> {
    if rows == 0 || width == 0 || u64::from(rows) * u64::from(width) > 1 << 24 {
        return Err("diagram must have between 1 and 2^24 cells".into());
    }
    let m = lookup(machine)?;
    let mut sim = Simulation::new(&m);
    sim.advance(u64::from(skip.min(MAX_DEMO_STEPS)));
    let left = -(i64::from(width) / 2);
    let mut cells = Vec::with_capacity((rows * width) as usize);
    for _ in 0..rows {
        let tape = sim.tape();
        let head = tape.head();
        for pos in left..left + i64::from(width) {
            let symbol = tape.get(pos);
            cells.push(match (pos == head, symbol) {
                (false, 0) => BLANK,
                (false, _) => ONE,
                (true, 0) => HEAD_ON_BLANK,
                (true, _) => HEAD_ON_ONE,
            });
        }
        sim.step();
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_by_id_and_by_name() {
        let by_id = run_machine("row:8", 1_000_000).unwrap();
        assert!(by_id.halted());
        assert_eq!((by_id.ones(), by_id.steps()), (501.0, 134_466.0));
        let by_name = run_machine(&by_id.name(), 1_000_000).unwrap();
        assert_eq!(by_id, by_name);
        assert!(run_machine("(1, 2", 10).is_err());
    }

    #[test]
    fn recombination_matches_core() {
        let name = recombine_sources("row:5\nrow:2\nrow:1\n", "7, 9").unwrap();
        assert_eq!(name, "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 24, 9, 8)");
        assert!(recombine_sources("row:5\nrow:2", "7, 9").is_err());
        assert!(recombine_sources("row:5\nrow:2", "x").is_err());
    }

    #[test]
    fn space_time_marks_the_head() {
        // rule (0, 0) writes a 1 and moves right
        let cells = space_time("row:8", 0, 3, 8).unwrap();
        assert_eq!(cells.len(), 24);
        assert_eq!(&cells[..8], &[0, 0, 0, 0, HEAD_ON_BLANK, 0, 0, 0]);
        assert_eq!(&cells[8..16], &[0, 0, 0, 0, ONE, HEAD_ON_BLANK, 0, 0]);
        assert_eq!(cells.iter().filter(|&&c| c >= HEAD_ON_BLANK).count(), 3);
        assert!(space_time("row:8", 0, 0, 8).is_err());
    }

    #[test]
    fn space_time_repeats_after_halt() {
        let cells = space_time("(0)", 0, 2, 4).unwrap();
        assert_eq!(cells[..4], cells[4..]);
    }

    #[test]
    fn catalog_lists_seeds_and_recombinations() {
        let text = catalog();
        assert!(text.starts_with("row:0, "));
        assert_eq!(text.lines().count(), 14 + 22);
    }
}
