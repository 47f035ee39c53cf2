use bbrecomb::search::{parse_record_line, OutputFormat};
use bbrecomb::{
    builtin_pool, decode_name, golden_pool, run, search, verify_catalog, Lineage, SearchConfig,
    StateCount, Status, Verdict,
};

fn config(arity: usize, step_limit: u64, jobs: usize) -> SearchConfig {
    SearchConfig {
        arity,
        step_limit,
        jobs,
        ..SearchConfig::default()
    }
}

#[test]
fn output_does_not_depend_on_jobs() {
    let pool = builtin_pool().select(&["row:2", "row:3", "row:8"]).unwrap();
    let one = search(&pool, &config(2, 20_000_000, 1)).unwrap();
    let eight = search(&pool, &config(2, 20_000_000, 8)).unwrap();
    assert_eq!(
        one.render(OutputFormat::Records),
        eight.render(OutputFormat::Records)
    );
    assert_eq!(one.render(OutputFormat::Csv), eight.render(OutputFormat::Csv));
    assert_eq!(one.summary.to_string(), eight.summary.to_string());
}

#[test]
fn repeated_runs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let pool = builtin_pool().select(&["row:6", "row:8"]).unwrap();
    let cfg = config(2, 5_000_000, 4);
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    search(&pool, &cfg).unwrap().write_to(&a, OutputFormat::Records).unwrap();
    search(&pool, &cfg).unwrap().write_to(&b, OutputFormat::Records).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn records_resimulate_from_their_names() {
    let pool = builtin_pool().select(&["row:6", "row:7", "row:8"]).unwrap();
    let cfg = config(2, 3_000_000, 4);
    let report = search(&pool, &cfg).unwrap();
    let text = report.render(OutputFormat::Records);
    assert_eq!(text.lines().count(), report.records.len());
    for line in text.lines() {
        let stored = parse_record_line(line).unwrap();
        let machine = stored.machine(StateCount::BB5).unwrap();
        let outcome = run(&machine, cfg.step_limit);
        assert_eq!(
            (outcome.status, outcome.steps, outcome.ones),
            (stored.status, stored.steps, stored.ones),
            "{line}"
        );
        // the stored lineage rebuilds the same machine
        let lineage: Lineage = stored.lineage.parse().unwrap();
        assert_eq!(lineage.evaluate(&pool).unwrap(), machine);
    }
}

#[test]
fn filter_keeps_only_large_machines() {
    let pool = builtin_pool().select(&["row:2", "row:3"]).unwrap();
    let cfg = SearchConfig {
        min_ones: Some(4095),
        ..config(2, 20_000_000, 4)
    };
    let report = search(&pool, &cfg).unwrap();
    assert!(!report.records.is_empty());
    assert!(report.records.iter().all(|r| r.outcome.ones >= 4095));
}

#[test]
fn dedup_keeps_first_provenance() {
    let pool = builtin_pool().select(&["row:2", "row:3"]).unwrap();
    let deduped = search(&pool, &config(2, 20_000_000, 2)).unwrap();
    let all = search(
        &pool,
        &SearchConfig {
            dedup: false,
            ..config(2, 20_000_000, 2)
        },
    )
    .unwrap();
    assert_eq!(all.records.len(), 40);
    let total: usize = deduped.records.iter().map(|r| r.provenances).sum();
    assert_eq!(total, 40);
    for record in &deduped.records {
        let first = all.records.iter().find(|r| r.name == record.name).unwrap();
        assert_eq!(first.index, record.index);
        assert_eq!(first.lineage, record.lineage);
    }
    // sources reappear as outputs and are recorded
    assert!(deduped.find(&pool.entries()[0].name()).is_some());
}

#[test]
fn seed_pool_max_steps_reaches_the_11_8m_machines() {
    let pool = builtin_pool()
        .select(&["row:0", "row:1", "row:2", "row:3", "row:4", "row:5"])
        .unwrap();
    let report = search(
        &pool,
        &SearchConfig {
            min_steps: Some(11_000_000),
            ..config(2, 12_000_000, 8)
        },
    )
    .unwrap();
    let best = report.summary.max_steps.as_ref().unwrap();
    assert!(best.outcome.steps >= 11_792_681);
    assert_eq!(best.outcome.status, Status::Halted);
}

#[test]
fn golden_verification_covers_every_entry() {
    let report = verify_catalog(golden_pool().entries(), 100_000_000, 8);
    assert_eq!(report.rows.len(), 22);
    assert!(report.rows.iter().all(|r| r.verdict == Verdict::Pass), "{report}");
}

#[test]
fn seed_verification_marks_partial_expectations() {
    let report = verify_catalog(builtin_pool().entries(), 100_000_000, 8);
    for row in &report.rows[..9] {
        assert_eq!(row.verdict, Verdict::Pass, "{row}");
    }
    println!("{report}");
    let m = decode_name("(0)", StateCount::BB5).unwrap();
    let entry = bbrecomb::CatalogEntry {
        id: "e".into(),
        machine: m,
        attribution: String::new(),
        expected_ones: None,
        expected_steps: None,
    };
    let measured = verify_catalog(&[entry], 10, 1);
    assert_eq!(measured.rows[0].verdict, Verdict::Measured);
}
