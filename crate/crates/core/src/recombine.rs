//! Recombination of rule tables.
//!
//! `k` sources and `k - 1` nondecreasing cuts `v1 <= ... <= v(k-1)` in
//! `[0, 2n - 1]` split the rule-index range into segments. Source `m`
//! (1-based) supplies slots `[v(m-1), v(m))` with `v0 = 0`; the last source
//! supplies `[v(k-1), 2n - 1]`. Slots are copied whether defined or not, so
//! a recombination can drop a rule as well as add one.

use std::fmt;

use crate::error::RecombineError;
use crate::machine::{Machine, StateCount};

/// Sources (as indices into a pool) plus cut points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RecombinationSpec {
    pub sources: Vec<usize>,
    pub cuts: Vec<usize>,
}

impl RecombinationSpec {
    pub fn new(sources: Vec<usize>, cuts: Vec<usize>) -> Self {
        RecombinationSpec { sources, cuts }
    }

    pub fn apply(&self, pool: &[Machine]) -> Result<Machine, RecombineError> {
        let sources: Vec<&Machine> = self.sources.iter().map(|&i| &pool[i]).collect();
        recombine(&sources, &self.cuts)
    }
}

impl fmt::Display for RecombinationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "sources=({}) cuts=({})", join(&self.sources), join(&self.cuts))
    }
}

pub fn validate_cuts(states: StateCount, sources: usize, cuts: &[usize]) -> Result<(), RecombineError> {
    if sources == 0 {
        return Err(RecombineError::NoSources);
    }
    if cuts.len() + 1 != sources {
        return Err(RecombineError::CutCount {
            sources,
            cuts: cuts.len(),
        });
    }
    let max = states.rule_slots() - 1;
    let mut previous = 0;
    for (position, &cut) in cuts.iter().enumerate() {
        if cut > max {
            return Err(RecombineError::CutOutOfRange { position, cut, max });
        }
        if cut < previous {
            return Err(RecombineError::CutsDecreasing {
                position,
                cut,
                previous,
            });
        }
        previous = cut;
    }
    Ok(())
}

/// Zero-based source segment that owns rule slot `index`.
pub fn segment_of(cuts: &[usize], index: usize) -> usize {
    cuts.iter().take_while(|&&cut| cut <= index).count()
}

/// Builds the recombined machine.
pub fn recombine(sources: &[&Machine], cuts: &[usize]) -> Result<Machine, RecombineError> {
    let first = sources.first().ok_or(RecombineError::NoSources)?;
    let states = first.states();
    for (position, source) in sources.iter().enumerate() {
        if source.states() != states {
            return Err(RecombineError::StateMismatch {
                position,
                expected: states.get(),
                found: source.states().get(),
            });
        }
    }
    validate_cuts(states, sources.len(), cuts)?;

    let slots = states.rule_slots();
    let mut table = Vec::with_capacity(slots);
    let mut segment = 0;
    for index in 0..slots {
        while segment < cuts.len() && cuts[segment] <= index {
            segment += 1;
        }
        table.push(sources[segment].get(index));
    }
    Ok(Machine::from_table(states, table).expect("slots copied from valid sources"))
}

/// Number of nondecreasing `len`-tuples over `[0, slots)`.
pub fn cut_vector_count(slots: usize, len: usize) -> usize {
    // multichoose(slots, len) = C(slots + len - 1, len)
    if len == 0 {
        return 1;
    }
    let (top, k) = (slots + len - 1, len);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (top - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// All nondecreasing cut vectors of length `len` over `[0, slots)`, in
/// lexicographic order.
pub fn cut_vectors(slots: usize, len: usize) -> Vec<Vec<usize>> {
    fn extend(slots: usize, len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let from = prefix.last().copied().unwrap_or(0);
        for cut in from..slots {
            prefix.push(cut);
            extend(slots, len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(cut_vector_count(slots, len));
    extend(slots, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every `k`-way recombination over a pool, addressable by index.
///
/// Order: source tuples lexicographically (first source slowest), then cut
/// vectors lexicographically.
#[derive(Debug, Clone)]
pub struct Enumeration<'a> {
    pool: &'a [Machine],
    arity: usize,
    cut_vectors: Vec<Vec<usize>>,
    len: usize,
}

impl<'a> Enumeration<'a> {
    pub fn new(pool: &'a [Machine], arity: usize) -> Result<Self, RecombineError> {
        if arity == 0 {
            return Err(RecombineError::ZeroArity);
        }
        let first = pool.first().ok_or(RecombineError::NoSources)?;
        let states = first.states();
        if let Some((position, m)) = pool.iter().enumerate().find(|(_, m)| m.states() != states) {
            return Err(RecombineError::StateMismatch {
                position,
                expected: states.get(),
                found: m.states().get(),
            });
        }
        let cut_vectors = cut_vectors(states.rule_slots(), arity - 1);
        let tuples = (pool.len() as u128).pow(arity as u32);
        let len = usize::try_from(tuples * cut_vectors.len() as u128)
            .map_err(|_| RecombineError::TooLarge)?;
        Ok(Enumeration {
            pool,
            arity,
            cut_vectors,
            len,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn spec_at(&self, index: usize) -> RecombinationSpec {
        assert!(index < self.len, "enumeration index {index} out of range");
        let cut_index = index % self.cut_vectors.len();
        let mut tuple_index = index / self.cut_vectors.len();
        let mut sources = vec![0; self.arity];
        for slot in sources.iter_mut().rev() {
            *slot = tuple_index % self.pool.len();
            tuple_index /= self.pool.len();
        }
        RecombinationSpec {
            sources,
            cuts: self.cut_vectors[cut_index].clone(),
        }
    }

    pub fn item_at(&self, index: usize) -> (RecombinationSpec, Machine) {
        let spec = self.spec_at(index);
        let machine = spec
            .apply(self.pool)
            .expect("enumerated specs are valid by construction");
        (spec, machine)
    }

    /// Items in `[start, end)`.
    pub fn range(
        &self,
        start: usize,
        end: usize,
    ) -> impl Iterator<Item = (RecombinationSpec, Machine)> + '_ {
        (start..end.min(self.len)).map(move |i| self.item_at(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (RecombinationSpec, Machine)> + '_ {
        self.range(0, self.len)
    }
}

/// `(T_i, T_j, u)` for every ordered pair and every cut.
pub fn enumerate_pairwise(pool: &[Machine]) -> Result<Enumeration<'_>, RecombineError> {
    Enumeration::new(pool, 2)
}

pub fn enumerate_kway(pool: &[Machine], arity: usize) -> Result<Enumeration<'_>, RecombineError> {
    Enumeration::new(pool, arity)
}
