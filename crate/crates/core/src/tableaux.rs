//! Weak compositions, partitions, set-valued tableaux and keys.
//!
//! Tableaux are drawn in English notation: row 1 is the top row and public
//! cell positions are `(row, col)`, both 1-indexed. A semistandard tableau is
//! the special case of a set-valued tableau whose cells are all singletons.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest value an [`EntrySet`] can hold.
pub const MAX_ENTRY: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("cell ({0},{1}) is empty")]
    EmptyCell(usize, usize),
    #[error("row condition violated at cell ({0},{1})")]
    RowViolation(usize, usize),
    #[error("column condition violated at cell ({0},{1})")]
    ColumnViolation(usize, usize),
    #[error("cells do not match a partition shape")]
    RaggedShape,
    #[error("entry {0} is outside 1..={MAX_ENTRY}")]
    EntryOutOfRange(u64),
    #[error("malformed tableau JSON: {0}")]
    Json(String),
}

/// A weak composition, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Composition(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// The `i`-th entry (1-indexed); zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest index holding a positive entry, 0 for the empty composition.
    pub fn support(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entries padded with zeros (or truncated) to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The image under the adjacent transposition `s_i`.
    pub fn swap(&self, i: usize) -> Self {
        assert!(i >= 1, "transpositions are 1-indexed");
        let mut v = self.padded(self.support().max(i + 1));
        v.swap(i - 1, i);
        Composition::new(v)
    }

    /// Applies `s_{w_1} s_{w_2} ... s_{w_k}`, rightmost first.
    pub fn apply_word(&self, word: &[usize]) -> Self {
        word.iter().rev().fold(self.clone(), |acc, &i| acc.swap(i))
    }

    /// The sorted rearrangement `α⁺`.
    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Number of pairs `i < j` with `α_i < α_j`: the length of the shortest
    /// permutation sorting `α⁺` into `α`.
    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] < v[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition::new(v)
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Composition::new(v.to_vec())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Returns `None` unless `parts` is weakly decreasing; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.0.clone())
    }

    /// All partitions whose diagram fits inside this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(bound: &[u32], cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            if let Some((&first, rest)) = bound.split_first() {
                for p in 1..=first.min(cap) {
                    prefix.push(p);
                    go(rest, p, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&self.0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

/// A non-empty set of positive integers, at most [`MAX_ENTRY`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EntrySet(u64);

impl EntrySet {
    pub const EMPTY: EntrySet = EntrySet(0);

    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=MAX_ENTRY).contains(&v));
        EntrySet(1 << (v - 1))
    }

    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Self {
        values.into_iter().fold(EntrySet::EMPTY, |s, v| s.insert(v))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_ENTRY).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    #[must_use]
    pub fn insert(self, v: u32) -> Self {
        EntrySet(self.0 | EntrySet::singleton(v).0)
    }

    #[must_use]
    pub fn remove(self, v: u32) -> Self {
        EntrySet(self.0 & !EntrySet::singleton(v).0)
    }

    pub fn smallest(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn largest(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn is_subset(self, other: EntrySet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl Ord for EntrySet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EntrySet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set-valued tableau of partition shape.
///
/// Construction always goes through [`SetValuedTableau::from_rows`] (or
/// operations that preserve validity), so every value of this type satisfies
/// the row condition `max(left) <= min(right)` and the column condition
/// `max(above) < min(below)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SetValuedTableau {
    rows: Vec<Vec<EntrySet>>,
}

impl SetValuedTableau {
    /// Validates a filling given row by row, top to bottom.
    pub fn from_rows(rows: Vec<Vec<EntrySet>>) -> Result<Self, TableauError> {
        if rows.iter().any(|r| r.is_empty()) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(TableauError::RaggedShape);
        }
        let t = SetValuedTableau { rows };
        t.check()?;
        Ok(t)
    }

    /// Validates a filling given as explicit value lists.
    pub fn from_values(rows: &[Vec<Vec<u32>>]) -> Result<Self, TableauError> {
        let mut out = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let mut cells = Vec::with_capacity(row.len());
            for (c, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(TableauError::EmptyCell(r + 1, c + 1));
                }
                if let Some(&bad) = cell.iter().find(|&&v| v == 0 || v > MAX_ENTRY) {
                    return Err(TableauError::EntryOutOfRange(bad as u64));
                }
                cells.push(EntrySet::from_values(cell.iter().copied()));
            }
            out.push(cells);
        }
        SetValuedTableau::from_rows(out)
    }

    /// A semistandard tableau from plain rows of numbers.
    pub fn from_ssyt_rows(rows: &[Vec<u32>]) -> Result<Self, TableauError> {
        let rows: Vec<Vec<Vec<u32>>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| vec![v]).collect())
            .collect();
        SetValuedTableau::from_values(&rows)
    }

    /// The tableau `u_λ` whose `r`-th row is filled with `r`.
    pub fn highest_weight(shape: &Partition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| vec![EntrySet::singleton(r as u32 + 1); len as usize])
            .collect();
        SetValuedTableau { rows }
    }

    fn check(&self) -> Result<(), TableauError> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &cell) in row.iter().enumerate() {
                let (Some(lo), Some(_)) = (cell.smallest(), cell.largest()) else {
                    return Err(TableauError::EmptyCell(r + 1, c + 1));
                };
                if c > 0 && row[c - 1].largest().unwrap_or(0) > lo {
                    return Err(TableauError::RowViolation(r + 1, c + 1));
                }
                if r > 0 && self.rows[r - 1][c].largest().unwrap_or(0) >= lo {
                    return Err(TableauError::ColumnViolation(r + 1, c + 1));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn rows(&self) -> &[Vec<EntrySet>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Height of column `col` (1-indexed).
    pub fn column_len(&self, col: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() >= col).count()
    }

    /// Cell at `(row, col)`, 1-indexed.
    pub fn cell(&self, row: usize, col: usize) -> Option<EntrySet> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(col.checked_sub(1)?)
            .copied()
    }

    /// Replaces one cell, re-validating the result.
    pub fn with_cell(&self, row: usize, col: usize, set: EntrySet) -> Result<Self, TableauError> {
        let mut t = self.clone();
        t.rows[row - 1][col - 1] = set;
        t.check()?;
        Ok(t)
    }

    /// Wraps rows produced by an operation known to preserve validity.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<EntrySet>>) -> Self {
        let t = SetValuedTableau { rows };
        debug_assert!(
            t.check().is_ok(),
            "operation produced an invalid tableau: {t:?}"
        );
        t
    }

    /// Cells in column order: columns left to right, each read bottom to top.
    pub fn column_order(&self) -> impl Iterator<Item = ((usize, usize), EntrySet)> + '_ {
        self.column_order_from(1)
    }

    /// Column order restricted to columns `first_col..`.
    pub fn column_order_from(
        &self,
        first_col: usize,
    ) -> impl Iterator<Item = ((usize, usize), EntrySet)> + '_ {
        (first_col.max(1)..=self.num_cols()).flat_map(move |c| {
            (1..=self.column_len(c))
                .rev()
                .map(move |r| ((r, c), self.rows[r - 1][c - 1]))
        })
    }

    /// Reading word of the columns `first_col..`.
    pub fn column_word_from(&self, first_col: usize) -> Vec<u32> {
        self.column_order_from(first_col)
            .flat_map(|(_, s)| s.iter())
            .collect()
    }

    pub fn column_word(&self) -> Vec<u32> {
        self.column_word_from(1)
    }

    /// Number of occurrences of each value.
    pub fn weight(&self) -> Composition {
        let mut counts: Vec<u32> = Vec::new();
        for v in self.rows.iter().flatten().flat_map(|s| s.iter()) {
            let v = v as usize;
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Composition::new(counts)
    }

    /// Total number of entries minus number of cells.
    pub fn excess(&self) -> u32 {
        self.rows.iter().flatten().map(|s| s.len() as u32 - 1).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().flatten().all(|s| s.len() == 1)
    }

    pub fn max_entry(&self) -> u32 {
        self.rows
            .iter()
            .flatten()
            .filter_map(|s| s.largest())
            .max()
            .unwrap_or(0)
    }

    /// Every semistandard tableau obtained by picking one entry per cell.
    pub fn expand(&self) -> Vec<SetValuedTableau> {
        let mut out = vec![Vec::<Vec<EntrySet>>::new()];
        for row in &self.rows {
            let mut next = Vec::new();
            for partial in out {
                let mut fillings: Vec<Vec<EntrySet>> = vec![Vec::new()];
                for &cell in row {
                    fillings = fillings
                        .into_iter()
                        .flat_map(|f| {
                            cell.iter().map(move |v| {
                                let mut f = f.clone();
                                f.push(EntrySet::singleton(v));
                                f
                            })
                        })
                        .collect();
                }
                for f in fillings {
                    let mut p = partial.clone();
                    p.push(f);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|rows| SetValuedTableau { rows })
            .collect()
    }

    /// Product of the cell sizes, saturating.
    pub fn expansion_count(&self) -> u64 {
        self.rows
            .iter()
            .flatten()
            .fold(1u64, |acc, s| acc.saturating_mul(s.len() as u64))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableauJson::from(self)).expect("tableau serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, TableauError> {
        let raw: TableauJson =
            serde_json::from_str(text).map_err(|e| TableauError::Json(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Debug for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl fmt::Display for SetValuedTableau {
    /// One line per row, cells separated by spaces, multi-entry cells braced.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                let vals: Vec<String> = cell.iter().map(|v| v.to_string()).collect();
                if vals.len() == 1 {
                    write!(f, "{}", vals[0])?;
                } else {
                    write!(f, "{{{}}}", vals.join(","))?;
                }
            }
        }
        Ok(())
    }
}

/// Wire format: `{"shape":[..],"cells":[[[..],..],..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<u32>,
    pub cells: Vec<Vec<Vec<u32>>>,
}

impl From<&SetValuedTableau> for TableauJson {
    fn from(t: &SetValuedTableau) -> Self {
        TableauJson {
            shape: t.shape().parts().to_vec(),
            cells: t
                .rows
                .iter()
                .map(|row| row.iter().map(|s| s.iter().collect()).collect())
                .collect(),
        }
    }
}

impl TryFrom<TableauJson> for SetValuedTableau {
    type Error = TableauError;

    fn try_from(raw: TableauJson) -> Result<Self, Self::Error> {
        let shape = Partition::new(raw.shape.clone()).ok_or(TableauError::RaggedShape)?;
        if shape.parts().len() != raw.cells.len()
            || shape
                .parts()
                .iter()
                .zip(&raw.cells)
                .any(|(&len, row)| len as usize != row.len())
        {
            return Err(TableauError::RaggedShape);
        }
        SetValuedTableau::from_values(&raw.cells)
    }
}

/// A key: a semistandard tableau whose column `j` values all occur in
/// column `j - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyTableau(SetValuedTableau);

impl KeyTableau {
    /// Builds a key from its columns (each listed top to bottom, increasing).
    /// Returns `None` if the columns do not form a key of partition shape.
    pub fn from_columns(columns: &[Vec<u32>]) -> Option<Self> {
        if columns
            .windows(2)
            .any(|w| w[0].len() < w[1].len() || w[1].iter().any(|v| !w[0].contains(v)))
        {
            return None;
        }
        let height = columns.first().map_or(0, Vec::len);
        let rows: Vec<Vec<u32>> = (0..height)
            .map(|r| {
                columns
                    .iter()
                    .take_while(|col| col.len() > r)
                    .map(|col| col[r])
                    .collect()
            })
            .collect();
        let t = SetValuedTableau::from_ssyt_rows(&rows).ok()?;
        Some(KeyTableau(t))
    }

    /// Wraps a semistandard tableau that satisfies the nesting condition.
    pub fn try_from_tableau(t: SetValuedTableau) -> Option<Self> {
        if !t.is_semistandard() {
            return None;
        }
        let cols = tableau_columns(&t);
        KeyTableau::from_columns(&cols).filter(|k| k.0 == t)
    }

    pub fn as_tableau(&self) -> &SetValuedTableau {
        &self.0
    }

    pub fn into_tableau(self) -> SetValuedTableau {
        self.0
    }

    pub fn shape(&self) -> Partition {
        self.0.shape()
    }

    /// Entry at `(row, col)`, 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        self.0.cell(row, col).and_then(EntrySet::smallest)
    }

    /// Columns listed top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        tableau_columns(&self.0)
    }

    /// Row-by-row values.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.0
            .rows()
            .iter()
            .map(|r| r.iter().filter_map(|s| s.smallest()).collect())
            .collect()
    }

    pub fn weight(&self) -> Composition {
        self.0.weight()
    }
}

impl fmt::Debug for KeyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key{:?}", self.rows())
    }
}

fn tableau_columns(t: &SetValuedTableau) -> Vec<Vec<u32>> {
    (1..=t.num_cols())
        .map(|c| {
            (1..=t.column_len(c))
                .filter_map(|r| t.cell(r, c).and_then(EntrySet::smallest))
                .collect()
        })
        .collect()
}

/// The key of weight `α`: column `j` holds `{i : α_i >= j}`.
pub fn key_of(alpha: &Composition) -> KeyTableau {
    let width = alpha.entries().iter().copied().max().unwrap_or(0);
    let columns: Vec<Vec<u32>> = (1..=width)
        .map(|j| {
            (1..=alpha.support())
                .filter(|&i| alpha.get(i) >= j)
                .map(|i| i as u32)
                .collect()
        })
        .collect();
    KeyTableau::from_columns(&columns).expect("columns of a key nest")
}

/// Sorts `α` into `α⁺` by repeatedly swapping the leftmost ascent.
///
/// Returns `(α⁺, [i_1, ..., i_k])` with `α = s_{i_1} ... s_{i_k} α⁺` and `k`
/// minimal.
pub fn sort_to_partition(alpha: &Composition) -> (Partition, Vec<usize>) {
    let mut current = alpha.padded(alpha.support());
    let mut word = Vec::new();
    while let Some(i) = current.windows(2).position(|w| w[0] < w[1]) {
        current.swap(i, i + 1);
        word.push(i + 1);
    }
    let lambda = Partition::new(current).expect("bubble sort ends at a partition");
    (lambda, word)
}
