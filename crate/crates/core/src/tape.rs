/// Two-sided binary tape that grows on demand.
///
/// Cells live in one buffer; `origin` is the buffer index of position 0.
/// The buffer doubles when the head walks off either end, so access stays
/// O(1) amortized without hashing.
#[derive(Debug, Clone)]
pub struct Tape {
    pub(crate) cells: Vec<u8>,
    pub(crate) origin: usize,
    pub(crate) head: usize,
    pub(crate) min: usize,
    pub(crate) max: usize,
}

pub const INITIAL_CAPACITY: usize = 2048;

impl Tape {
    pub fn new() -> Self {
        Self::with_capacity(INITIAL_CAPACITY)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        let capacity = capacity.max(2);
        let origin = capacity / 2;
        Tape {
            cells: vec![0; capacity],
            origin,
            head: origin,
            min: origin,
            max: origin,
        }
    }

    /// Builds a tape from explicit `(position, symbol)` cells; the head sits at 0.
    pub fn from_cells(cells: &[(i64, u8)]) -> Self {
        let mut tape = Tape::new();
        for &(position, symbol) in cells {
            tape.move_to(position);
            tape.write(symbol);
        }
        tape.move_to(0);
        tape
    }

    pub fn head(&self) -> i64 {
        self.head as i64 - self.origin as i64
    }

    pub fn read(&self) -> u8 {
        self.cells[self.head]
    }

    pub fn write(&mut self, symbol: u8) {
        self.cells[self.head] = symbol & 1;
    }

    /// Symbol at an absolute position; unvisited cells read as 0.
    pub fn get(&self, position: i64) -> u8 {
        let index = position + self.origin as i64;
        if index < 0 || index as usize >= self.cells.len() {
            0
        } else {
            self.cells[index as usize]
        }
    }

    /// Shifts the head by `delta` cells, extending the visited extent.
    pub fn shift(&mut self, delta: isize) {
        let target = self.head as isize + delta;
        if target < 0 || target as usize >= self.cells.len() {
            self.grow_for(target);
        }
        self.head = (self.head as isize + delta) as usize;
        self.min = self.min.min(self.head);
        self.max = self.max.max(self.head);
    }

    fn move_to(&mut self, position: i64) {
        while self.head() < position {
            self.shift(1);
        }
        while self.head() > position {
            self.shift(-1);
        }
    }

    /// Reallocates so that buffer index `target` (relative to the current
    /// layout) becomes valid, keeping free space on both sides.
    #[cold]
    pub(crate) fn grow_for(&mut self, target: isize) {
        let old_len = self.cells.len();
        let mut new_len = old_len * 2;
        let mut shift = old_len / 2;
        while target + (shift as isize) < 0 || target + shift as isize >= new_len as isize {
            new_len *= 2;
            shift = (new_len - old_len) / 2;
        }
        let mut cells = vec![0u8; new_len];
        cells[shift..shift + old_len].copy_from_slice(&self.cells);
        self.cells = cells;
        self.origin += shift;
        self.head += shift;
        self.min += shift;
        self.max += shift;
    }

    /// Leftmost and rightmost positions that have been under the head.
    pub fn extent(&self) -> (i64, i64) {
        (
            self.min as i64 - self.origin as i64,
            self.max as i64 - self.origin as i64,
        )
    }

    pub fn extent_width(&self) -> u64 {
        (self.max - self.min + 1) as u64
    }

    /// Visited cells, left to right.
    pub fn visited(&self) -> &[u8] {
        &self.cells[self.min..=self.max]
    }
}

impl Default for Tape {
    fn default() -> Self {
        Tape::new()
    }
}

/// Number of 1 cells on the tape.
pub fn count_ones(tape: &Tape) -> u64 {
    tape.visited().iter().map(|&c| u64::from(c)).sum()
}
