//! Cross-checks against independent reference implementations.
//!
//! Nothing here goes through the simulator's tape buffer or the recombinator's
//! segment walk: the interpreter uses a hash-map tape and decodes action codes
//! arithmetically, and the recombination oracle rebuilds tables from the raw
//! integer lists.

mod common;

use common::{all_tables, reference_run};

use bbrecomb::{
    builtin_pool, decode_name, enumerate_pairwise, recombine, run, ActionCode, Lineage, Machine,
    StateCount, Status,
};

fn to_machine(n: u32, table: &[Option<u32>]) -> Machine {
    Machine::from_table(
        StateCount::new(n).unwrap(),
        table.iter().map(|c| c.map(ActionCode)).collect(),
    )
    .unwrap()
}

fn check_exhaustive(n: u32, cap: u64) -> usize {
    let tables = all_tables(n);
    for table in &tables {
        let machine = to_machine(n, table);
        let outcome = run(&machine, cap);
        let (halted, steps, ones, lo, hi) = reference_run(table, cap);
        assert_eq!(outcome.halted(), halted, "{machine}");
        assert_eq!(outcome.steps, steps, "{machine}");
        assert_eq!(outcome.ones, ones, "{machine}");
        assert_eq!(outcome.extent, (hi - lo + 1) as u64, "{machine}");
        assert!(outcome.extent <= outcome.steps + 1);
        assert!(outcome.ones <= outcome.extent);
    }
    tables.len()
}

#[test]
fn simulator_matches_reference_for_every_one_state_machine() {
    assert_eq!(check_exhaustive(1, 1000), 49);
}

#[test]
fn simulator_matches_reference_for_every_two_state_machine() {
    assert_eq!(check_exhaustive(2, 1000), 13usize.pow(4));
}

#[test]
fn simulator_matches_reference_on_seed_rows() {
    // rows 6-8 halt within a few million steps; compare in full
    let pool = builtin_pool();
    for id in ["row:8", "row:9", "row:10", "row:11", "row:12", "row:13"] {
        let machine = &pool.get(id).unwrap().machine;
        let table: Vec<Option<u32>> = machine.table().iter().map(|c| c.map(|c| c.0)).collect();
        let (halted, steps, ones, _, _) = reference_run(&table, 2_000_000);
        let outcome = run(machine, 2_000_000);
        assert_eq!((outcome.halted(), outcome.steps, outcome.ones), (halted, steps, ones), "{id}");
    }
}

/// Table of `(index, code)` pairs straight from a bare row list.
fn row_table(row: &[u32]) -> [Option<u32>; 10] {
    let mut table = [None; 10];
    for pair in row.chunks(2) {
        table[pair[0] as usize] = Some(pair[1]);
    }
    table
}

fn oracle_recombine(sources: &[[Option<u32>; 10]], cuts: &[usize]) -> [Option<u32>; 10] {
    let mut bounds = vec![0];
    bounds.extend_from_slice(cuts);
    bounds.push(10);
    let mut out = [None; 10];
    for (m, source) in sources.iter().enumerate() {
        let end = if m + 1 == sources.len() { 10 } else { bounds[m + 1] };
        out[bounds[m]..end].copy_from_slice(&source[bounds[m]..end]);
    }
    out
}

fn oracle_name(table: &[Option<u32>; 10]) -> String {
    let pairs: Vec<String> = table
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.map(|c| format!("{i}, {c}")))
        .collect();
    if pairs.is_empty() {
        "(0)".into()
    } else {
        format!("({}, {})", pairs.len(), pairs.join(", "))
    }
}

const ROW1: [u32; 18] = [0, 11, 1, 18, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 5, 9, 8];
const ROW2: [u32; 18] = [0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 24, 9, 11];
const ROW5: [u32; 18] = [0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 26, 8, 15, 9, 11];
const THREE_WAY: &str = "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 24, 9, 8)";
const SLOT9_CODE1: &str = "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 26, 8, 15, 9, 1)";

/// Brute force over all ordered triples of rows {1, 2, 5} and all cuts
/// `0 <= u <= v <= 9`; returns every hit for the 4096 / 11,792,723 name.
fn three_way_hits() -> Vec<([usize; 3], (usize, usize))> {
    let rows = [(1, row_table(&ROW1)), (2, row_table(&ROW2)), (5, row_table(&ROW5))];
    let mut hits = Vec::new();
    for a in &rows {
        for b in &rows {
            for c in &rows {
                for u in 0..10 {
                    for v in u..10 {
                        let t = oracle_recombine(&[a.1, b.1, c.1], &[u, v]);
                        if oracle_name(&t) == THREE_WAY {
                            hits.push(([a.0, b.0, c.0], (u, v)));
                        }
                    }
                }
            }
        }
    }
    hits
}

#[test]
fn three_way_oracle_finds_the_11792723_machine_at_cuts_7_9() {
    let hits = three_way_hits();
    // frozen from the brute force above
    assert!(hits.contains(&([5, 2, 1], (7, 9))), "{hits:?}");
    let pool = builtin_pool();
    let m = |id: &str| &pool.get(id).unwrap().machine;
    for (rows, (u, v)) in &hits {
        let sources: Vec<&Machine> = rows.iter().map(|r| m(&format!("row:{r}"))).collect();
        assert_eq!(recombine(&sources, &[*u, *v]).unwrap().to_string(), THREE_WAY);
    }
}

#[test]
fn pairwise_enumeration_agrees_with_oracle_on_unreachable_machine() {
    let rows: Vec<[Option<u32>; 10]> = builtin_pool().entries()[..6]
        .iter()
        .map(|e| {
            let mut t = [None; 10];
            for (i, c) in e.machine.defined_rules() {
                t[i] = Some(c.0);
            }
            t
        })
        .collect();
    let mut oracle_hits = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            for u in 0..10 {
                if oracle_name(&oracle_recombine(&[*a, *b], &[u])) == SLOT9_CODE1 {
                    oracle_hits.push((i, j, u));
                }
            }
        }
    }

    let machines: Vec<Machine> = builtin_pool().machines()[..6].to_vec();
    let enumeration = enumerate_pairwise(&machines).unwrap();
    let found: Vec<(usize, usize, usize)> = enumeration
        .iter()
        .filter(|(_, m)| m.to_string() == SLOT9_CODE1)
        .map(|(s, _)| (s.sources[0], s.sources[1], s.cuts[0]))
        .collect();
    assert_eq!(found, oracle_hits);
    // Slot 9 of this machine holds code 1, which no seed row carries, so no
    // recombination of the seeds can produce it.
    assert!(found.is_empty());
    assert!(builtin_pool()
        .entries()
        .iter()
        .all(|e| e.machine.get(9) != Some(ActionCode(1))));

    let outcome = run(&decode_name(SLOT9_CODE1, StateCount::BB5).unwrap(), 100_000_000);
    assert_eq!((outcome.ones, outcome.steps), (4096, 11_803_885));
}

#[test]
fn pairwise_enumeration_matches_independent_generator_for_two_states() {
    let n2 = StateCount::new(2).unwrap();
    let a = decode_name("(3, 0, 7, 1, 2, 3, 10)", n2).unwrap();
    let b = decode_name("(2, 1, 11, 2, 0)", n2).unwrap();
    let pool = vec![a.clone(), b.clone()];
    let tables: Vec<Vec<Option<ActionCode>>> = pool.iter().map(|m| m.table().to_vec()).collect();

    let mut expected = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for u in 0..4 {
                let mut t = tables[j].clone();
                t[..u].copy_from_slice(&tables[i][..u]);
                expected.push(((i, j, u), t));
            }
        }
    }
    let got: Vec<_> = enumerate_pairwise(&pool)
        .unwrap()
        .iter()
        .map(|(s, m)| ((s.sources[0], s.sources[1], s.cuts[0]), m.table().to_vec()))
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn nested_lineage_reproduces_the_flat_three_way_machine() {
    // search nested pairwise cuts (inner over rows 5,2; outer with row 1)
    // for a table equal to the flat (7, 9) recombination
    let pool = builtin_pool();
    let flat: Lineage = "[recomb cuts=(7,9) [row:5] [row:2] [row:1]]".parse().unwrap();
    let target = flat.evaluate(&pool).unwrap();
    let mut nested_hits = Vec::new();
    for inner in 0..10 {
        for outer in 0..10 {
            let nested = Lineage::node(
                vec![outer],
                vec![
                    Lineage::node(vec![inner], vec![Lineage::leaf("row:5"), Lineage::leaf("row:2")]),
                    Lineage::leaf("row:1"),
                ],
            );
            if nested.evaluate(&pool).unwrap() == target {
                nested_hits.push((inner, outer));
            }
        }
    }
    assert!(nested_hits.contains(&(7, 9)), "{nested_hits:?}");
    let nested: Lineage = "[recomb cuts=(9) [recomb cuts=(7) [row:5] [row:2]] [row:1]]"
        .parse()
        .unwrap();
    assert_eq!(nested.evaluate(&pool).unwrap().to_string(), THREE_WAY);
    let outcome = run(&target, 20_000_000);
    assert_eq!(
        (outcome.status, outcome.ones, outcome.steps),
        (Status::Halted, 4096, 11_792_723)
    );
}
