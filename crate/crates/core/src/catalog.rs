//! Seed machines, published recombinations and pool files.
//!
//! Pool file lines look like
//!
//! ```text
//! # comment
//! id, (r, i1, c1, ...)[, attribution[, ones[, steps]]]
//! ```
//!
//! The name must be parenthesized. Counts may use `.`, `_` or `,` as
//! thousands separators (`70.740.809`, `70_740_809`, `70,740,809`); a comma
//! counts as a separator only between a digit and a group of exactly three
//! digits. Empty fields mean "absent".

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::CatalogError;
use crate::lineage::MachineRegistry;
use crate::machine::{decode_name, Machine, StateCount};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub machine: Machine,
    pub attribution: String,
    pub expected_ones: Option<u64>,
    pub expected_steps: Option<u64>,
}

impl CatalogEntry {
    fn builtin(
        id: &str,
        name: &str,
        attribution: &str,
        ones: Option<u64>,
        steps: Option<u64>,
    ) -> Self {
        CatalogEntry {
            id: id.to_string(),
            machine: decode_name(name, StateCount::BB5).expect("builtin names are valid"),
            attribution: attribution.to_string(),
            expected_ones: ones,
            expected_steps: steps,
        }
    }

    pub fn name(&self) -> String {
        self.machine.to_string()
    }

    /// One pool-file line.
    pub fn to_line(&self) -> String {
        let num = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        let mut line = format!("{}, {}", self.id, self.machine);
        if !self.attribution.is_empty() || self.expected_ones.is_some() || self.expected_steps.is_some() {
            let _ = write!(line, ", {}", self.attribution);
        }
        if self.expected_ones.is_some() || self.expected_steps.is_some() {
            let _ = write!(line, ", {}", num(self.expected_ones));
        }
        if self.expected_steps.is_some() {
            let _ = write!(line, ", {}", num(self.expected_steps));
        }
        line
    }
}

/// An ordered list of catalog entries with unique ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Pool {
    entries: Vec<CatalogEntry>,
}

impl Pool {
    pub fn new(entries: Vec<CatalogEntry>) -> Result<Self, CatalogError> {
        let mut seen = HashSet::new();
        for (i, entry) in entries.iter().enumerate() {
            if !seen.insert(entry.id.as_str()) {
                return Err(CatalogError::DuplicateId {
                    line: i + 1,
                    id: entry.id.clone(),
                });
            }
        }
        Ok(Pool { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn machines(&self) -> Vec<Machine> {
        self.entries.iter().map(|e| e.machine.clone()).collect()
    }

    /// Sub-pool with the given ids, in the given order.
    pub fn select(&self, ids: &[&str]) -> Result<Pool, CatalogError> {
        let entries = ids
            .iter()
            .map(|id| {
                self.get(id)
                    .cloned()
                    .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Pool::new(entries)
    }

    pub fn to_pool_file(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&entry.to_line());
            out.push('\n');
        }
        out
    }
}

impl MachineRegistry for Pool {
    fn resolve(&self, id: &str) -> Option<&Machine> {
        self.get(id).map(|e| &e.machine)
    }
}

/// The fourteen published seed rows, ids `row:0` to `row:13`.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let e = CatalogEntry::builtin;
    vec![
        e("row:0", "0, 11, 1, 15, 2, 17, 3, 11, 4, 23, 5, 24, 6, 3, 7, 21, 9, 0", "Marxen-Buntrock", Some(4097), Some(47_176_869)),
        e("row:1", "0, 11, 1, 18, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 5, 9, 8", "Marxen-Buntrock", Some(4096), Some(23_554_763)),
        e("row:2", "0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 24, 9, 11", "Marxen-Buntrock", Some(4095), Some(11_804_909)),
        e("row:3", "0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 15, 9, 11", "Marxen-Buntrock", Some(4095), Some(11_804_895)),
        e("row:4", "0, 11, 1, 5, 2, 15, 3, 9, 4, 5, 5, 21, 6, 5, 7, 27, 9, 12", "Marxen-Buntrock", Some(4097), Some(11_798_825)),
        e("row:5", "0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 26, 8, 15, 9, 11", "Marxen-Buntrock", Some(4096), Some(11_798_795)),
        e("row:6", "0, 11, 2, 15, 3, 17, 4, 26, 5, 18, 6, 15, 7, 6, 8, 23, 9, 5", "Uhing", Some(1471), Some(2_358_063)),
        e("row:7", "0, 11, 1, 15, 2, 0, 3, 18, 4, 3, 6, 9, 7, 29, 8, 20, 9, 8", "Uhing", Some(1915), Some(2_133_491)),
        e("row:8", "0, 11, 1, 12, 2, 17, 3, 23, 4, 3, 5, 8, 6, 26, 8, 15, 9, 5", "Schult", Some(501), Some(134_466)),
        e("row:9", "0, 9, 1, 12, 2, 15, 3, 21, 4, 29, 5, 1, 7, 24, 8, 2, 9, 27", "160", Some(160), None),
        e("row:10", "0, 21, 1, 9, 2, 24, 3, 6, 4, 3, 5, 20, 6, 17, 7, 0, 9, 15", "32", Some(32), None),
        e("row:11", "0, 9, 1, 11, 2, 17, 3, 21, 4, 19, 5, 29, 6, 5, 7, 6, 8, 8", "26", Some(26), None),
        e("row:12", "0, 9, 1, 11, 2, 15, 3, 20, 4, 21, 5, 27, 6, 4, 7, 2, 8, 12", "21", Some(21), None),
        e("row:13", "0, 9, 1, 11, 2, 26, 3, 23, 4, 27, 5, 2, 7, 17, 8, 5, 9, 13", "19", Some(19), None),
    ]
}

/// Every recombined machine with published counts, ids `rec:0` to `rec:21`.
pub fn golden_recombinations() -> Vec<CatalogEntry> {
    let e = |id: &str, name: &str, ones: u64, steps: u64| {
        CatalogEntry::builtin(id, name, "recombination", Some(ones), Some(steps))
    };
    vec![
        e("rec:0", "(9, 0, 11, 1, 5, 2, 15, 3, 9, 4, 19, 5, 21, 6, 5, 7, 27, 9, 12)", 4097, 11_801_882),
        e("rec:1", "(9, 0, 11, 1, 5, 2, 15, 3, 9, 4, 5, 5, 21, 6, 4, 7, 27, 9, 12)", 4097, 11_798_832),
        e("rec:2", "(9, 0, 11, 1, 15, 2, 17, 3, 1, 4, 23, 5, 24, 6, 3, 7, 21, 9, 0)", 4097, 70_740_809),
        e("rec:3", "(9, 0, 11, 1, 13, 2, 15, 3, 9, 4, 5, 5, 21, 6, 5, 7, 27, 9, 12)", 4097, 17_689_051),
        e("rec:4", "(9, 0, 11, 1, 13, 2, 15, 3, 9, 4, 19, 5, 21, 6, 5, 7, 27, 9, 12)", 4097, 23_582_334),
        e("rec:5", "(9, 0, 11, 1, 13, 2, 15, 3, 9, 4, 5, 5, 21, 6, 4, 7, 27, 9, 12)", 4097, 17_689_065),
        e("rec:6", "(9, 0, 11, 1, 5, 2, 15, 3, 9, 4, 19, 5, 21, 6, 4, 7, 27, 9, 12)", 4097, 11_804_946),
        e("rec:7", "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 5, 9, 8)", 4096, 11_792_681),
        e("rec:8", "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 24, 9, 8)", 4096, 11_792_723),
        e("rec:9", "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 26, 8, 15, 9, 1)", 4096, 11_803_885),
        e("rec:10", "(9, 0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 15, 9, 0)", 4095, 11_815_075),
        e("rec:11", "(9, 0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 15, 9, 1)", 4095, 11_809_985),
        e("rec:12", "(9, 0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 24, 9, 1)", 4095, 11_810_006),
        e("rec:13", "(9, 0, 11, 1, 5, 2, 18, 3, 20, 4, 3, 5, 15, 7, 29, 8, 15, 9, 0)", 4095, 11_821_189),
        e("rec:14", "(9, 0, 11, 1, 5, 2, 18, 3, 20, 4, 3, 5, 15, 7, 29, 8, 15, 9, 1)", 4095, 11_816_099),
        e("rec:15", "(9, 0, 11, 1, 5, 2, 18, 3, 20, 4, 3, 5, 15, 7, 29, 8, 15, 9, 11)", 4095, 11_811_009),
        e("rec:16", "(9, 0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 2, 9, 1)", 239, 41_082),
        e("rec:17", "(9, 0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 2, 9, 0)", 239, 41_359),
        e("rec:18", "(9, 0, 11, 1, 5, 2, 15, 3, 20, 4, 3, 5, 15, 7, 29, 8, 2, 9, 11)", 239, 40_805),
        e("rec:19", "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 15, 9, 8)", 20, 279),
        e("rec:20", "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 26, 8, 0, 9, 11)", 20, 297),
        e("rec:21", "(9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 26, 8, 0, 9, 1)", 20, 314),
    ]
}

pub fn builtin_pool() -> Pool {
    Pool::new(builtin_catalog()).expect("builtin ids are unique")
}

pub fn golden_pool() -> Pool {
    Pool::new(golden_recombinations()).expect("golden ids are unique")
}

pub fn load_pool(path: &Path, states: StateCount) -> Result<Pool, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_pool(&text, states)
}

pub fn parse_pool(text: &str, states: StateCount) -> Result<Pool, CatalogError> {
    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let entry = parse_line(content, line, states)?;
        if !seen.insert(entry.id.clone()) {
            return Err(CatalogError::DuplicateId { line, id: entry.id });
        }
        entries.push(entry);
    }
    Ok(Pool { entries })
}

fn parse_line(content: &str, line: usize, states: StateCount) -> Result<CatalogEntry, CatalogError> {
    let parse_err = |message: &str| CatalogError::Parse {
        line,
        message: message.to_string(),
    };

    let (id, rest) = content
        .split_once(',')
        .ok_or_else(|| parse_err("expected `id, (name)`"))?;
    let id = id.trim();
    if id.is_empty() || id.contains(|c: char| c.is_whitespace() || c == '[' || c == ']' || c == '=') {
        return Err(parse_err("id must be nonempty without whitespace, brackets or `=`"));
    }

    let rest = rest.trim_start();
    if !rest.starts_with('(') {
        return Err(parse_err("machine name must be parenthesized"));
    }
    let close = rest.find(')').ok_or_else(|| parse_err("unterminated machine name"))?;
    let machine = decode_name(&rest[..=close], states)
        .map_err(|source| CatalogError::Name { line, source })?;

    let tail = rest[close + 1..].trim();
    let fields = if tail.is_empty() {
        Vec::new()
    } else {
        let tail = tail
            .strip_prefix(',')
            .ok_or_else(|| parse_err("expected `,` after the machine name"))?;
        split_fields(tail)
    };
    if fields.len() > 3 {
        return Err(parse_err("too many fields"));
    }

    let attribution = fields.first().map(|s| s.to_string()).unwrap_or_default();
    let number = |index: usize, what: &str| -> Result<Option<u64>, CatalogError> {
        match fields.get(index) {
            None | Some(&"") => Ok(None),
            Some(f) => parse_count(f)
                .map(Some)
                .ok_or_else(|| parse_err(&format!("malformed {what} {f:?}"))),
        }
    };
    Ok(CatalogEntry {
        id: id.to_string(),
        machine,
        attribution,
        expected_ones: number(1, "ones count")?,
        expected_steps: number(2, "step count")?,
    })
}

/// Splits on commas that are not thousands separators.
fn split_fields(text: &str) -> Vec<&str> {
    let bytes = text.as_bytes();
    let mut fields = Vec::new();
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if b != b',' {
            continue;
        }
        let digit_before = i > 0 && bytes[i - 1].is_ascii_digit();
        let group = bytes[i + 1..].iter().take_while(|c| c.is_ascii_digit()).count();
        if digit_before && group == 3 {
            continue;
        }
        fields.push(text[start..i].trim());
        start = i + 1;
    }
    fields.push(text[start..].trim());
    fields
}

/// Parses a count with optional `.`, `_` or `,` digit-group separators.
pub fn parse_count(text: &str) -> Option<u64> {
    let text = text.trim();
    if text.is_empty() || !text.starts_with(|c: char| c.is_ascii_digit()) {
        return None;
    }
    let mut digits = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '0'..='9' => digits.push(c),
            '.' | '_' | ',' => {}
            _ => return None,
        }
    }
    digits.parse().ok()
}
