//! Dense matrices over GF(2) and the rank primitives built on them.
//!
//! Rows are stored as packed `u64` words, least significant bit first. All
//! padding bits past `cols` are kept at zero so that whole-word comparisons
//! and XORs never leak garbage into the rank.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD).max(1);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows. Any nonzero entry counts as one.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "row {i} has {} entries, expected {cols}", row.len());
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix whose rows are the low `cols` bits of the given words.
    pub fn from_u64_rows(rows: &[u64], cols: usize) -> Self {
        assert!(cols <= WORD);
        let mask = low_mask(cols);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, &r) in rows.iter().enumerate() {
            m.data[i * m.words_per_row] = r & mask;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.data[r * self.words_per_row + c / WORD] >> (c % WORD)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words_per_row + c / WORD];
        if value {
            *w |= 1 << (c % WORD);
        } else {
            *w &= !(1 << (c % WORD));
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Row `r` as a single word. Only valid when `cols <= 64`.
    pub fn row_u64(&self, r: usize) -> u64 {
        assert!(self.cols <= WORD);
        self.data[r * self.words_per_row]
    }

    /// Adds row `src` into row `dst` (XOR).
    pub fn add_row(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        for k in 0..w {
            let s = self.data[src * w + k];
            self.data[dst * w + k] ^= s;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    m.set(r, j, true);
                }
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            m.data[i * m.words_per_row..(i + 1) * m.words_per_row].copy_from_slice(self.row_words(r));
        }
        m
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row_words(r).iter().all(|&w| w == 0)
    }

    /// GF(2) rank. Works on a private copy.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(None).len()
    }

    /// Gauss-Jordan elimination in place. Pivot columns are taken from
    /// `column_order` when given (in that order), otherwise left to right.
    /// Returns the `(row, column)` pivot positions; pivot rows end up as rows
    /// `0..rank` and every pivot column is a unit vector afterwards.
    pub fn eliminate(&mut self, column_order: Option<&[usize]>) -> Vec<(usize, usize)> {
        let default_order: Vec<usize>;
        let order = match column_order {
            Some(o) => o,
            None => {
                default_order = (0..self.cols).collect();
                &default_order
            }
        };
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in order {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(p, next);
            for r in 0..self.rows {
                if r != next && self.get(r, c) {
                    self.add_row(next, r);
                }
            }
            pivots.push((next, c));
            next += 1;
        }
        pivots
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn low_mask(bits: usize) -> u64 {
    if bits >= WORD {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Rank of a set of single-word rows, destroying the slice contents.
///
/// This is the hot path behind cut-rank: each row already has the column
/// mask applied.
pub fn rank_of_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    let mut i = 0;
    while i < rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            i += 1;
            continue;
        }
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
        i += 1;
    }
    rank
}

/// Rank of `adj[v] & cols` over the vertices `v` in `rows`, without allocating.
pub fn masked_rank(adj: &[u64], rows: u64, cols: u64) -> usize {
    let mut buf = [0u64; 64];
    let mut len = 0;
    let mut it = rows;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let r = adj[v] & cols;
        if r != 0 {
            buf[len] = r;
            len += 1;
        }
    }
    rank_of_words(&mut buf[..len])
}
