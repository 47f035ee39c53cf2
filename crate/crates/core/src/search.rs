//! Enumerate, simulate, classify, deduplicate and persist.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::catalog::{CatalogEntry, Pool};
use crate::error::{NotHalted, SearchError};
use crate::lineage::Lineage;
use crate::machine::{decode_name, Machine, StateCount};
use crate::recombine::{Enumeration, RecombinationSpec};
use crate::simulator::{run, RunOutcome, Status};

/// Placid Platypus class label: machines writing exactly `m` ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MppClass(pub u64);

impl fmt::Display for MppClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_PP({})", self.0)
    }
}

pub fn classify_mpp(outcome: &RunOutcome) -> Result<MppClass, NotHalted> {
    if outcome.halted() {
        Ok(MppClass(outcome.ones))
    } else {
        Err(NotHalted {
            steps: outcome.steps,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Records,
    Csv,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub arity: usize,
    pub step_limit: u64,
    pub jobs: usize,
    pub dedup: bool,
    pub min_ones: Option<u64>,
    pub min_steps: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            arity: 2,
            step_limit: crate::simulator::DEFAULT_STEP_LIMIT,
            jobs: 1,
            dedup: true,
            min_ones: None,
            min_steps: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.arity == 0 {
            return Err(SearchError::Config("arity must be at least 1".into()));
        }
        if self.step_limit == 0 {
            return Err(SearchError::Config("step limit must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(SearchError::Config("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn accepts(&self, outcome: &RunOutcome) -> bool {
        self.min_ones.is_none_or(|m| outcome.ones >= m)
            && self.min_steps.is_none_or(|m| outcome.steps >= m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub name: String,
    pub lineage: Lineage,
    /// Position of the owning spec in enumeration order.
    pub index: usize,
    pub outcome: RunOutcome,
    /// Number of enumerated specs that produced this machine.
    pub provenances: usize,
}

impl SearchRecord {
    pub fn mpp_class(&self) -> Option<MppClass> {
        classify_mpp(&self.outcome).ok()
    }

    /// Tab-separated `key=value` line.
    pub fn to_line(&self) -> String {
        format!(
            "name={}\tstatus={}\tsteps={}\tones={}\tclass={}\tprovenances={}\tlineage={}",
            self.name,
            self.outcome.status,
            self.outcome.steps,
            self.outcome.ones,
            self.mpp_class()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".into()),
            self.provenances,
            self.lineage
        )
    }
}

/// Fields of a persisted record line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredRecord {
    pub name: String,
    pub status: Status,
    pub steps: u64,
    pub ones: u64,
    pub lineage: String,
}

impl StoredRecord {
    pub fn machine(&self, states: StateCount) -> Option<Machine> {
        decode_name(&self.name, states).ok()
    }
}

pub fn parse_record_line(line: &str) -> Option<StoredRecord> {
    let mut fields = HashMap::new();
    for field in line.split('\t') {
        let (key, value) = field.split_once('=')?;
        fields.insert(key, value);
    }
    Some(StoredRecord {
        name: fields.get("name")?.to_string(),
        status: match *fields.get("status")? {
            "halted" => Status::Halted,
            "limit" => Status::StepLimitExceeded,
            _ => return None,
        },
        steps: fields.get("steps")?.parse().ok()?,
        ones: fields.get("ones")?.parse().ok()?,
        lineage: fields.get("lineage")?.to_string(),
    })
}

#[derive(Debug, Clone, Default)]
pub struct SearchSummary {
    pub enumerated: usize,
    pub distinct_machines: usize,
    pub records: usize,
    pub halted: usize,
    pub step_limited: usize,
    pub per_class: BTreeMap<MppClass, usize>,
    pub max_steps: Option<SearchRecord>,
}

impl fmt::Display for SearchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "enumerated:  {}", self.enumerated)?;
        writeln!(f, "distinct:    {}", self.distinct_machines)?;
        writeln!(f, "records:     {}", self.records)?;
        writeln!(f, "halted:      {}", self.halted)?;
        writeln!(f, "step-capped: {}", self.step_limited)?;
        for (class, count) in self.per_class.iter().rev() {
            writeln!(f, "  {class}: {count}")?;
        }
        if let Some(best) = &self.max_steps {
            writeln!(
                f,
                "max steps:   {} ones {} {} {}",
                best.outcome.steps, best.outcome.ones, best.name, best.lineage
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    /// Sorted by canonical name, then enumeration index.
    pub records: Vec<SearchRecord>,
    pub summary: SearchSummary,
}

impl SearchReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Records => {
                let mut out = String::new();
                for record in &self.records {
                    out.push_str(&record.to_line());
                    out.push('\n');
                }
                out
            }
            OutputFormat::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(["name", "status", "steps", "ones", "class", "provenances", "lineage"])
                    .expect("in-memory write");
                for r in &self.records {
                    writer
                        .write_record([
                            r.name.clone(),
                            r.outcome.status.to_string(),
                            r.outcome.steps.to_string(),
                            r.outcome.ones.to_string(),
                            r.mpp_class().map(|c| c.to_string()).unwrap_or_default(),
                            r.provenances.to_string(),
                            r.lineage.to_string(),
                        ])
                        .expect("in-memory write");
                }
                String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
        }
    }

    pub fn write_to(&self, path: &Path, format: OutputFormat) -> Result<(), SearchError> {
        let io_err = |source| SearchError::Output {
            path: path.to_path_buf(),
            source,
        };
        let mut file = std::fs::File::create(path).map_err(io_err)?;
        file.write_all(self.render(format).as_bytes()).map_err(io_err)?;
        file.flush().map_err(io_err)
    }

    pub fn find(&self, name: &str) -> Option<&SearchRecord> {
        self.records.iter().find(|r| r.name == name)
    }
}

fn spec_lineage(spec: &RecombinationSpec, pool: &Pool) -> Lineage {
    let leaf = |i: usize| Lineage::leaf(pool.entries()[i].id.clone());
    if spec.sources.len() == 1 {
        leaf(spec.sources[0])
    } else {
        Lineage::node(spec.cuts.clone(), spec.sources.iter().map(|&i| leaf(i)).collect())
    }
}

/// Applies `f` to every item on `jobs` threads; results keep input order.
pub fn parallel_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let chunks: Vec<Vec<(usize, R)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= items.len() {
                            break done;
                        }
                        done.push((i, f(&items[i])));
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    for (i, r) in chunks.into_iter().flatten() {
        slots[i] = Some(r);
    }
    slots
        .into_iter()
        .map(|r| r.expect("every index is processed"))
        .collect()
}

/// Runs every recombination of `pool` at the configured arity.
///
/// Distinct machines are simulated once. With dedup on, each canonical
/// name keeps the first spec in enumeration order; otherwise every spec
/// yields a record. The result does not depend on `jobs`.
pub fn search(pool: &Pool, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    config.validate()?;
    let machines = pool.machines();
    let enumeration = Enumeration::new(&machines, config.arity)?;

    // machine -> position in `unique`
    let mut distinct: HashMap<Machine, usize> = HashMap::new();
    let mut unique: Vec<(usize, Machine)> = Vec::new();
    let mut provenances: Vec<usize> = Vec::new();
    let mut owners: Vec<(usize, RecombinationSpec)> = Vec::with_capacity(enumeration.len());
    for (index, (spec, machine)) in enumeration.iter().enumerate() {
        let id = *distinct.entry(machine.clone()).or_insert_with(|| {
            unique.push((index, machine));
            provenances.push(0);
            unique.len() - 1
        });
        provenances[id] += 1;
        owners.push((id, spec));
    }

    let outcomes = parallel_map(&unique, config.jobs, |(_, m)| run(m, config.step_limit));

    let mut records = Vec::new();
    if config.dedup {
        for (id, (index, machine)) in unique.iter().enumerate() {
            if !config.accepts(&outcomes[id]) {
                continue;
            }
            records.push(SearchRecord {
                name: machine.to_string(),
                lineage: spec_lineage(&owners[*index].1, pool),
                index: *index,
                outcome: outcomes[id],
                provenances: provenances[id],
            });
        }
    } else {
        for (index, (id, spec)) in owners.iter().enumerate() {
            if !config.accepts(&outcomes[*id]) {
                continue;
            }
            records.push(SearchRecord {
                name: unique[*id].1.to_string(),
                lineage: spec_lineage(spec, pool),
                index,
                outcome: outcomes[*id],
                provenances: provenances[*id],
            });
        }
    }
    records.sort_by(|a, b| a.name.cmp(&b.name).then(a.index.cmp(&b.index)));

    let mut summary = SearchSummary {
        enumerated: enumeration.len(),
        distinct_machines: unique.len(),
        records: records.len(),
        ..SearchSummary::default()
    };
    for record in &records {
        match classify_mpp(&record.outcome) {
            Ok(class) => {
                summary.halted += 1;
                *summary.per_class.entry(class).or_default() += 1;
                let better = summary.max_steps.as_ref().is_none_or(|best| {
                    (record.outcome.steps, std::cmp::Reverse(record.index))
                        > (best.outcome.steps, std::cmp::Reverse(best.index))
                });
                if better {
                    summary.max_steps = Some(record.clone());
                }
            }
            Err(_) => summary.step_limited += 1,
        }
    }
    Ok(SearchReport { records, summary })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// No expectations to compare against.
    Measured,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Measured => "MEASURED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub id: String,
    pub name: String,
    pub expected_ones: Option<u64>,
    pub expected_steps: Option<u64>,
    pub outcome: RunOutcome,
    pub verdict: Verdict,
}

impl fmt::Display for VerifyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        write!(
            f,
            "{:<8} {:<8} {} ones={} steps={} expected ones={} steps={} {}",
            self.verdict,
            self.id,
            self.outcome.status,
            self.outcome.ones,
            self.outcome.steps,
            expected(self.expected_ones),
            expected(self.expected_steps),
            self.name
        )
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == Verdict::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail).count()
    }

    pub fn all_ok(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        write!(
            f,
            "{} passed, {} failed, {} measured",
            self.passed(),
            self.failed(),
            self.rows.len() - self.passed() - self.failed()
        )
    }
}

/// Simulates each entry and compares against its expectations.
pub fn verify_catalog(entries: &[CatalogEntry], step_limit: u64, jobs: usize) -> VerifyReport {
    let outcomes = parallel_map(entries, jobs, |e| run(&e.machine, step_limit));
    let rows = entries
        .iter()
        .zip(outcomes)
        .map(|(entry, outcome)| {
            let verdict = if entry.expected_ones.is_none() && entry.expected_steps.is_none() {
                Verdict::Measured
            } else if outcome.halted()
                && entry.expected_ones.is_none_or(|v| v == outcome.ones)
                && entry.expected_steps.is_none_or(|v| v == outcome.steps)
            {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            VerifyRow {
                id: entry.id.clone(),
                name: entry.name(),
                expected_ones: entry.expected_ones,
                expected_steps: entry.expected_steps,
                outcome,
                verdict,
            }
        })
        .collect();
    VerifyReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_pool;

    fn small_pool(ids: &[&str]) -> Pool {
        builtin_pool().select(ids).unwrap()
    }

    #[test]
    fn classify() {
        let halted = RunOutcome {
            status: Status::Halted,
            steps: 297,
            ones: 20,
            extent: 30,
        };
        assert_eq!(classify_mpp(&halted).unwrap().to_string(), "M_PP(20)");
        let capped = RunOutcome {
            status: Status::StepLimitExceeded,
            ..halted
        };
        assert!(classify_mpp(&capped).is_err());
    }

    #[test]
    fn single_machine_dedups_to_one_record() {
        let pool = small_pool(&["row:8"]);
        let report = search(&pool, &SearchConfig::default()).unwrap();
        assert_eq!(report.summary.enumerated, 10);
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0].provenances, 10);
        assert_eq!(report.records[0].outcome.ones, 501);
        assert_eq!(
            report.records[0].lineage.to_string(),
            "[recomb cuts=(0) [row:8] [row:8]]"
        );

        let all = search(
            &pool,
            &SearchConfig {
                dedup: false,
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(all.records.len(), 10);
    }

    #[test]
    fn record_lines_parse_back() {
        let pool = small_pool(&["row:8"]);
        let report = search(&pool, &SearchConfig::default()).unwrap();
        let line = report.records[0].to_line();
        let stored = parse_record_line(&line).unwrap();
        assert_eq!(stored.name, report.records[0].name);
        assert_eq!(stored.steps, 134_466);
        assert_eq!(stored.status, Status::Halted);
        assert!(parse_record_line("garbage").is_none());
    }

    #[test]
    fn config_validation() {
        let pool = small_pool(&["row:8"]);
        for bad in [
            SearchConfig { arity: 0, ..SearchConfig::default() },
            SearchConfig { jobs: 0, ..SearchConfig::default() },
            SearchConfig { step_limit: 0, ..SearchConfig::default() },
        ] {
            assert!(matches!(search(&pool, &bad), Err(SearchError::Config(_))));
        }
    }

    #[test]
    fn parallel_map_keeps_order() {
        let items: Vec<u64> = (0..1000).collect();
        let out = parallel_map(&items, 7, |x| x * x);
        assert_eq!(out, items.iter().map(|x| x * x).collect::<Vec<_>>());
        assert!(parallel_map(&Vec::<u64>::new(), 4, |x| *x).is_empty());
    }

    #[test]
    fn verify_flags_capped_runs() {
        let rows = crate::catalog::builtin_catalog();
        let report = verify_catalog(&rows[..1], 1000, 1);
        assert_eq!(report.rows[0].verdict, Verdict::Fail);
        assert_eq!(report.rows[0].outcome.status, Status::StepLimitExceeded);
        assert!(!report.all_ok());
    }

    #[test]
    fn csv_quotes_names() {
        let pool = small_pool(&["row:8"]);
        let report = search(&pool, &SearchConfig::default()).unwrap();
        let csv = report.render(OutputFormat::Csv);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "name,status,steps,ones,class,provenances,lineage"
        );
        assert!(lines.next().unwrap().starts_with("\"(9, 0, 11,"));
    }
}
