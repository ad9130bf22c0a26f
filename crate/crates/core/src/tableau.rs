//! Partitions, multishapes, and barred fillings.
//!
//! A multishape is a sequence of Young diagrams assembled corner-to-corner:
//! each diagram sits strictly below and to the left of the one before it, so
//! no two diagrams share a row or a column. A barred filling assigns every
//! box a value in 1..=n together with an optional bar; values weakly increase
//! along rows and strictly increase down columns, bars ignored.
//!
//! The column word reads unbarred values column by column from the rightmost
//! global column to the leftmost, each column top to bottom. A barred box in
//! diagram d at local (row, col) contributes the variable y<d>_(value+col-row)
//! to the weight of the filling.
//!
//! `bender_knuth` implements the value-swap involution s_i: entries of value
//! i or i+1 are classified by whether the adjacent box in their column holds
//! the partner value (locked or semi-free) or not (free). Semi-free pairs
//! move the bar to the other member; maximal runs of free entries in a row
//! rebalance their unbarred counts, shifting bars one column sideways so that
//! every barred box keeps its value+col-row index.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{Monomial, Polynomial, VarId};
use crate::Error;

/// Weakly decreasing nonnegative parts; trailing zeros are accepted on input
/// and never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Partition, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// 1-based part access; zero beyond the last nonzero part.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// First part, i.e. the number of columns.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = self.0.iter().filter(|&&p| p as usize > j).count() as u32;
        }
        Partition(out)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        assert!(v.len() <= n, "partition has more than {n} parts");
        v.resize(n, 0);
        v
    }

    pub fn fits_rows(&self, n: usize) -> bool {
        self.len() <= n
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.0
                .iter()
                .map(|&p| serde_json::Value::from(p))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Partition, Error> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::BadJson("partition: expected array".to_string()))?;
        let parts: Result<Vec<u32>, Error> = arr
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|u| u32::try_from(u).ok())
                    .ok_or_else(|| Error::BadJson("partition: parts must be small nonnegative integers".to_string()))
            })
            .collect();
        Partition::new(parts?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Sequence of diagrams placed corner-to-corner; diagram 1 is the top-right
/// one, so it owns the rightmost global columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct MultiShape {
    diagrams: Vec<Partition>,
}

impl MultiShape {
    pub fn new(diagrams: Vec<Partition>) -> MultiShape {
        MultiShape { diagrams }
    }

    pub fn single(lambda: Partition) -> MultiShape {
        MultiShape {
            diagrams: vec![lambda],
        }
    }

    pub fn diagrams(&self) -> &[Partition] {
        &self.diagrams
    }

    /// Number of diagrams.
    pub fn r(&self) -> usize {
        self.diagrams.len()
    }

    pub fn total_boxes(&self) -> u32 {
        self.diagrams.iter().map(|d| d.size()).sum()
    }

    pub fn total_columns(&self) -> u32 {
        self.diagrams.iter().map(|d| d.first()).sum()
    }

    /// Global columns owned by diagram d (0-based) are
    /// `col_offset(d) + 1 ..= col_offset(d) + diagram.first()`.
    pub fn col_offset(&self, d: usize) -> u32 {
        self.diagrams[d + 1..].iter().map(|p| p.first()).sum()
    }

    pub fn fits_rows(&self, n: usize) -> bool {
        self.diagrams.iter().all(|p| p.fits_rows(n))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.diagrams.iter().map(|p| p.to_json()).collect())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MultiShape, Error> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::BadJson("shape: expected array of partitions".to_string()))?;
        let diagrams: Result<Vec<Partition>, Error> =
            arr.iter().map(Partition::from_json).collect();
        Ok(MultiShape::new(diagrams?))
    }
}

impl fmt::Display for MultiShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.diagrams.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Box content: a value with an optional bar.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BarredEntry {
    pub value: u32,
    pub barred: bool,
}

impl BarredEntry {
    pub fn plain(value: u32) -> BarredEntry {
        BarredEntry {
            value,
            barred: false,
        }
    }

    pub fn barred(value: u32) -> BarredEntry {
        BarredEntry {
            value,
            barred: true,
        }
    }

    pub fn to_text(&self) -> String {
        if self.barred {
            format!("{}~", self.value)
        } else {
            self.value.to_string()
        }
    }
}

/// Classification of a value-i or value-(i+1) entry for the involution s_i.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntryClass {
    /// No partner of the other value in the same column.
    Free,
    /// Partnered, exactly one of the pair barred.
    SemiFree,
    /// Partnered, both barred or both unbarred.
    Locked,
}

/// A barred filling of a multishape. `rows[d][r]` holds row r of diagram d,
/// left to right; indices are 0-based in code and 1-based in JSON.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BarredSkewTableau {
    shape: MultiShape,
    rows: Vec<Vec<Vec<BarredEntry>>>,
}

impl BarredSkewTableau {
    pub fn new(
        shape: MultiShape,
        rows: Vec<Vec<Vec<BarredEntry>>>,
    ) -> Result<BarredSkewTableau, Error> {
        let t = BarredSkewTableau { shape, rows };
        t.check_shape()?;
        t.check_order()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(
        shape: MultiShape,
        rows: Vec<Vec<Vec<BarredEntry>>>,
    ) -> BarredSkewTableau {
        let t = BarredSkewTableau { shape, rows };
        debug_assert!(t.check_shape().is_ok() && t.check_order().is_ok());
        t
    }

    fn check_shape(&self) -> Result<(), Error> {
        if self.rows.len() != self.shape.r() {
            return Err(Error::ArityMismatch {
                expected: self.shape.r(),
                got: self.rows.len(),
            });
        }
        for (d, part) in self.shape.diagrams().iter().enumerate() {
            if self.rows[d].len() != part.len() {
                return Err(Error::ArityMismatch {
                    expected: part.len(),
                    got: self.rows[d].len(),
                });
            }
            for (r, row) in self.rows[d].iter().enumerate() {
                if row.len() != part.part(r + 1) as usize {
                    return Err(Error::ArityMismatch {
                        expected: part.part(r + 1) as usize,
                        got: row.len(),
                    });
                }
                if row.iter().any(|e| e.value == 0) {
                    return Err(Error::IndexOutOfRange { index: 0, limit: 0 });
                }
            }
        }
        Ok(())
    }

    fn check_order(&self) -> Result<(), Error> {
        for d in 0..self.rows.len() {
            let rows = &self.rows[d];
            for row in rows {
                if row.windows(2).any(|w| w[0].value > w[1].value) {
                    return Err(Error::NotAPartition(
                        row.iter().map(|e| e.value).collect(),
                    ));
                }
            }
            for r in 1..rows.len() {
                for c in 0..rows[r].len() {
                    if rows[r - 1][c].value >= rows[r][c].value {
                        return Err(Error::NotAPartition(vec![
                            rows[r - 1][c].value,
                            rows[r][c].value,
                        ]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &MultiShape {
        &self.shape
    }

    /// Re-checks the shape bookkeeping and the row/column order.
    pub fn check(&self) -> Result<(), Error> {
        self.check_shape()?;
        self.check_order()
    }

    pub fn entry(&self, d: usize, r: usize, c: usize) -> Option<BarredEntry> {
        self.rows.get(d)?.get(r)?.get(c).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize, BarredEntry)> + '_ {
        self.rows.iter().enumerate().flat_map(|(d, rows)| {
            rows.iter().enumerate().flat_map(move |(r, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(c, &e)| (d, r, c, e))
            })
        })
    }

    pub fn max_value(&self) -> u32 {
        self.cells().map(|(_, _, _, e)| e.value).max().unwrap_or(0)
    }

    /// Unbarred values read from the rightmost global column to the leftmost,
    /// each column top to bottom. Equals the concatenation of the diagrams'
    /// own column words in diagram order.
    pub fn unbarred_column_word(&self) -> Vec<u32> {
        let mut word = Vec::new();
        for (d, part) in self.shape.diagrams().iter().enumerate() {
            for col in (0..part.first() as usize).rev() {
                for row in &self.rows[d] {
                    if col < row.len() {
                        let e = row[col];
                        if !e.barred {
                            word.push(e.value);
                        }
                    } else {
                        break;
                    }
                }
            }
        }
        word
    }

    /// Counts of unbarred values 1..=n.
    pub fn unbarred_content(&self, n: usize) -> Vec<u32> {
        let mut counts = vec![0u32; n];
        for (_, _, _, e) in self.cells() {
            if !e.barred {
                assert!(e.value as usize <= n, "entry {} exceeds n={n}", e.value);
                counts[(e.value - 1) as usize] += 1;
            }
        }
        counts
    }

    /// Product over barred boxes of y<d>_(value + col - row), local 1-based
    /// coordinates. A monomial with coefficient 1.
    pub fn weight(&self) -> Polynomial {
        let mut m = Monomial::one();
        for (d, r, c, e) in self.cells() {
            if e.barred {
                let index = e.value as i64 + c as i64 - r as i64;
                assert!(index >= 1, "barred box with nonpositive shift index");
                m = m.mul(&Monomial::var(VarId::y(d as u32 + 1, index as u32)));
            }
        }
        Polynomial::term(1, m)
    }

    fn partner(&self, d: usize, r: usize, c: usize, i: u32) -> Option<(usize, usize)> {
        let v = self.rows[d][r][c].value;
        if v == i {
            // partner below holds i+1
            if let Some(row) = self.rows[d].get(r + 1) {
                if row.get(c).map(|e| e.value) == Some(i + 1) {
                    return Some((r + 1, c));
                }
            }
            None
        } else {
            // v == i+1: partner above holds i
            if r > 0 && self.rows[d][r - 1].get(c).map(|e| e.value) == Some(i) {
                return Some((r - 1, c));
            }
            None
        }
    }

    /// Classification of the entry at (d, r, c), 0-based, for the pair
    /// (i, i+1). The value there must be i or i+1.
    pub fn classify_entry(
        &self,
        d: usize,
        r: usize,
        c: usize,
        i: u32,
    ) -> Result<EntryClass, Error> {
        let e = self
            .entry(d, r, c)
            .ok_or(Error::IndexOutOfRange {
                index: c as u32,
                limit: self.shape.total_columns(),
            })?;
        if e.value != i && e.value != i + 1 {
            return Err(Error::IndexOutOfRange {
                index: e.value,
                limit: i + 1,
            });
        }
        Ok(match self.partner(d, r, c, i) {
            None => EntryClass::Free,
            Some((pr, pc)) => {
                let p = self.rows[d][pr][pc];
                if e.barred != p.barred {
                    EntryClass::SemiFree
                } else {
                    EntryClass::Locked
                }
            }
        })
    }

    /// The involution s_i: swaps the roles of values i and i+1 while
    /// preserving the weight. Requires 1 <= i < n.
    pub fn bender_knuth(&self, i: u32, n: u32) -> Result<BarredSkewTableau, Error> {
        if i < 1 || i + 1 > n {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        let mut out = self.clone();
        for d in 0..self.rows.len() {
            // semi-free pairs: the bar switches members
            for r in 0..self.rows[d].len() {
                for c in 0..self.rows[d][r].len() {
                    let e = self.rows[d][r][c];
                    if e.value == i {
                        if let Some((pr, pc)) = self.partner(d, r, c, i) {
                            let p = self.rows[d][pr][pc];
                            if e.barred != p.barred {
                                out.rows[d][r][c].barred = !e.barred;
                                out.rows[d][pr][pc].barred = !p.barred;
                            }
                        }
                    }
                }
            }
            // free runs: rebalance unbarred counts
            for r in 0..self.rows[d].len() {
                let width = self.rows[d][r].len();
                let mut c = 0;
                while c < width {
                    let e = self.rows[d][r][c];
                    let is_free = (e.value == i || e.value == i + 1)
                        && self.partner(d, r, c, i).is_none();
                    if !is_free {
                        c += 1;
                        continue;
                    }
                    let start = c;
                    while c < width {
                        let e = self.rows[d][r][c];
                        let free = (e.value == i || e.value == i + 1)
                            && self.partner(d, r, c, i).is_none();
                        if !free {
                            break;
                        }
                        c += 1;
                    }
                    rebalance_run(&mut out.rows[d][r][start..c], i);
                }
            }
        }
        debug_assert!(out.check_order().is_ok(), "involution broke the filling");
        Ok(out)
    }

    /// Applies s_{w[0]} ( s_{w[1]} ( ... s_{w[last]} (T) ) ): the rightmost
    /// index acts first.
    pub fn apply_permutation(&self, word: &[u32], n: u32) -> Result<BarredSkewTableau, Error> {
        let mut t = self.clone();
        for &i in word.iter().rev() {
            t = t.bender_knuth(i, n)?;
        }
        Ok(t)
    }

    /// Splits at the global column boundary j (1-based): the left part keeps
    /// columns < j, the right part columns >= j. Valid j range is
    /// 1..=total_columns+1; both parts keep one (possibly empty) diagram per
    /// original diagram.
    pub fn split_columns(
        &self,
        j: u32,
    ) -> Result<(BarredSkewTableau, BarredSkewTableau), Error> {
        let total = self.shape.total_columns();
        if j < 1 || j > total + 1 {
            return Err(Error::IndexOutOfRange {
                index: j,
                limit: total + 1,
            });
        }
        let mut left_shape = Vec::new();
        let mut right_shape = Vec::new();
        let mut left_rows = Vec::new();
        let mut right_rows = Vec::new();
        for (d, part) in self.shape.diagrams().iter().enumerate() {
            let offset = self.shape.col_offset(d);
            let keep = (j.saturating_sub(offset + 1)).min(part.first()) as usize;
            let mut lp = Vec::new();
            let mut rp = Vec::new();
            let mut lr = Vec::new();
            let mut rr = Vec::new();
            for row in &self.rows[d] {
                let cut = keep.min(row.len());
                if cut > 0 {
                    lp.push(cut as u32);
                    lr.push(row[..cut].to_vec());
                }
                if row.len() > cut {
                    rp.push((row.len() - cut) as u32);
                    rr.push(row[cut..].to_vec());
                }
            }
            left_shape.push(Partition::new(lp).expect("row prefix lengths stay weakly decreasing"));
            right_shape.push(Partition::new(rp).expect("row suffix lengths stay weakly decreasing"));
            left_rows.push(lr);
            right_rows.push(rr);
        }
        Ok((
            BarredSkewTableau::from_rows_unchecked(MultiShape::new(left_shape), left_rows),
            BarredSkewTableau::from_rows_unchecked(MultiShape::new(right_shape), right_rows),
        ))
    }

    /// Inverse of `split_columns` for two parts produced by the same cut.
    pub(crate) fn reattach(
        shape: &MultiShape,
        left: &BarredSkewTableau,
        right: &BarredSkewTableau,
    ) -> BarredSkewTableau {
        let mut rows = Vec::with_capacity(shape.r());
        for (d, part) in shape.diagrams().iter().enumerate() {
            let mut dr = Vec::with_capacity(part.len());
            for r in 0..part.len() {
                let mut row = Vec::with_capacity(part.part(r + 1) as usize);
                if let Some(lrow) = left.rows[d].get(r) {
                    row.extend_from_slice(lrow);
                }
                if let Some(rrow) = right.rows[d].get(r) {
                    row.extend_from_slice(rrow);
                }
                dr.push(row);
            }
            rows.push(dr);
        }
        BarredSkewTableau::from_rows_unchecked(shape.clone(), rows)
    }

    /// The cancellation partner of a non-Yamanouchi filling: the suffix
    /// content first fails to be a partition at the maximal column boundary
    /// j; with i the first descent violation there, the columns left of j are
    /// replaced by their image under s_i. Returns None when the column word
    /// is Yamanouchi. The partner has the same weight, and the contents of
    /// the two fillings pad to alternant exponent vectors that differ by the
    /// transposition (i, i+1).
    pub fn bad_guy_pair(&self, n: usize) -> Option<BarredSkewTableau> {
        let total = self.shape.total_columns();
        let mut suffix = vec![0u32; n];
        let mut found: Option<(u32, u32)> = None;
        for j in (1..=total).rev() {
            for v in self.column_values(j) {
                assert!(v as usize <= n, "entry {v} exceeds n={n}");
                suffix[(v - 1) as usize] += 1;
            }
            if let Some(i) = first_ascent(&suffix) {
                found = Some((j, i));
                break;
            }
        }
        let (j, i) = found?;
        let (left, right) = self.split_columns(j).expect("j is in range");
        let flipped = left
            .bender_knuth(i, n as u32)
            .expect("violation index is within 1..n");
        Some(BarredSkewTableau::reattach(&self.shape, &flipped, &right))
    }

    /// Unbarred values in global column j (1-based), top to bottom.
    fn column_values(&self, j: u32) -> Vec<u32> {
        for (d, part) in self.shape.diagrams().iter().enumerate() {
            let offset = self.shape.col_offset(d);
            if j > offset && j <= offset + part.first() {
                let col = (j - offset - 1) as usize;
                return self.rows[d]
                    .iter()
                    .filter_map(|row| row.get(col))
                    .filter(|e| !e.barred)
                    .map(|e| e.value)
                    .collect();
            }
        }
        Vec::new()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = self
            .cells()
            .map(|(d, r, c, e)| {
                serde_json::json!({
                    "d": d + 1,
                    "r": r + 1,
                    "c": c + 1,
                    "v": e.value,
                    "b": e.barred,
                })
            })
            .collect();
        serde_json::json!({
            "shape": self.shape.to_json(),
            "cells": cells,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<BarredSkewTableau, Error> {
        let bad = |msg: &str| Error::BadJson(msg.to_string());
        let shape = MultiShape::from_json(
            v.get("shape").ok_or_else(|| bad("tableau: missing shape"))?,
        )?;
        let cells = v
            .get("cells")
            .and_then(|c| c.as_array())
            .ok_or_else(|| bad("tableau: missing cells array"))?;
        let mut map: BTreeMap<(usize, usize, usize), BarredEntry> = BTreeMap::new();
        for cell in cells {
            let field = |k: &str| -> Result<u64, Error> {
                cell.get(k)
                    .and_then(|x| x.as_u64())
                    .ok_or_else(|| bad(&format!("cell: missing field {k}")))
            };
            let d = field("d")? as usize;
            let r = field("r")? as usize;
            let c = field("c")? as usize;
            let value = field("v")? as u32;
            let barred = cell
                .get("b")
                .and_then(|x| x.as_bool())
                .ok_or_else(|| bad("cell: missing bar flag"))?;
            if d == 0 || r == 0 || c == 0 {
                return Err(bad("cell: indices are 1-based"));
            }
            if map
                .insert((d - 1, r - 1, c - 1), BarredEntry { value, barred })
                .is_some()
            {
                return Err(bad("cell: duplicate position"));
            }
        }
        let mut rows = Vec::new();
        for (d, part) in shape.diagrams().iter().enumerate() {
            let mut dr = Vec::new();
            for r in 0..part.len() {
                let mut row = Vec::new();
                for c in 0..part.part(r + 1) as usize {
                    let e = map
                        .remove(&(d, r, c))
                        .ok_or_else(|| bad(&format!("cell: missing ({},{},{})", d + 1, r + 1, c + 1)))?;
                    row.push(e);
                }
                dr.push(row);
            }
            rows.push(dr);
        }
        if !map.is_empty() {
            return Err(bad("cell: position outside the shape"));
        }
        BarredSkewTableau::new(shape, rows)
    }

    /// Corner-to-corner ASCII sketch; bars render as a trailing `~`.
    pub fn render_ascii(&self) -> String {
        let width = self
            .cells()
            .map(|(_, _, _, e)| e.to_text().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (d, part) in self.shape.diagrams().iter().enumerate() {
            let indent = self.shape.col_offset(d) as usize * (width + 1);
            for row in &self.rows[d] {
                if part.is_empty() {
                    continue;
                }
                out.push_str(&" ".repeat(indent));
                for (c, e) in row.iter().enumerate() {
                    if c > 0 {
                        out.push(' ');
                    }
                    out.push_str(&format!("{:>width$}", e.to_text()));
                }
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for BarredSkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

/// Rewrites one maximal free run for s_i. Within a run all value-i entries
/// precede all value-(i+1) entries; the minority side absorbs the surplus
/// and bars shift one box sideways to keep value+col-row fixed.
fn rebalance_run(run: &mut [BarredEntry], i: u32) {
    let l = run.iter().filter(|e| e.value == i && !e.barred).count();
    let r = run.iter().filter(|e| e.value == i + 1 && !e.barred).count();
    if l == r {
        return;
    }
    if l < r {
        let start = run.iter().position(|e| e.value == i + 1).expect("r > 0");
        let mut seen = 0;
        let mut end = start;
        for (k, e) in run.iter().enumerate().skip(start) {
            if e.value == i + 1 && !e.barred {
                seen += 1;
                if seen == r - l {
                    end = k;
                    break;
                }
            }
        }
        for e in run[start..=end].iter_mut() {
            e.value = i;
        }
        // bars move one box to the right; the run segment ends unbarred
        for k in (start + 1..=end).rev() {
            run[k].barred = run[k - 1].barred;
        }
        run[start].barred = false;
    } else {
        let mut seen = 0;
        let mut start = 0;
        for (k, e) in run.iter().enumerate() {
            if e.value == i && !e.barred {
                seen += 1;
                if seen == r + 1 {
                    start = k;
                    break;
                }
            }
        }
        let end = run
            .iter()
            .rposition(|e| e.value == i)
            .expect("l > 0 entries of value i exist");
        for e in run[start..=end].iter_mut() {
            e.value = i + 1;
        }
        // bars move one box to the left; the run segment starts unbarred
        for k in start..end {
            run[k].barred = run[k + 1].barred;
        }
        run[end].barred = false;
    }
}

/// First position i (1-based) with counts[i-1] < counts[i], if any.
fn first_ascent(counts: &[u32]) -> Option<u32> {
    counts
        .windows(2)
        .position(|w| w[0] < w[1])
        .map(|p| p as u32 + 1)
}

/// True when every prefix of the word contains at least as many k as k+1,
/// for every k.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let n = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; n + 1];
    for &v in word {
        let v = v as usize;
        if v >= 2 && counts[v - 2] == counts[v - 1] {
            return false;
        }
        counts[v - 1] += 1;
    }
    true
}

/// True when the counts are weakly decreasing.
pub fn is_partition_content(counts: &[u32]) -> bool {
    counts.windows(2).all(|w| w[0] >= w[1])
}

/// All fillings of one diagram with entries in 1..=n, weakly increasing
/// along rows and strictly increasing down columns by value; every bar
/// pattern when `bars` is set. Lexicographic in the row-major sequence of
/// (value, bar) with unbarred before barred.
pub(crate) fn diagram_fillings(lambda: &Partition, n: u32, bars: bool) -> Vec<Vec<Vec<BarredEntry>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<BarredEntry>> = lambda
        .parts()
        .iter()
        .map(|&len| Vec::with_capacity(len as usize))
        .collect();
    fill_cell(lambda, n, bars, 0, 0, &mut rows, &mut out);
    out
}

fn fill_cell(
    lambda: &Partition,
    n: u32,
    bars: bool,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<BarredEntry>>,
    out: &mut Vec<Vec<Vec<BarredEntry>>>,
) {
    if r == lambda.len() {
        out.push(rows.clone());
        return;
    }
    if c == lambda.part(r + 1) as usize {
        fill_cell(lambda, n, bars, r + 1, 0, rows, out);
        return;
    }
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1].value);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c].value + 1);
    }
    for v in lo..=n {
        for barred in [false, true] {
            if barred && !bars {
                continue;
            }
            rows[r].push(BarredEntry { value: v, barred });
            fill_cell(lambda, n, bars, r, c + 1, rows, out);
            rows[r].pop();
        }
    }
}

/// Every barred filling of the multishape with values in 1..=n. The stream
/// is the cross product of per-diagram fillings, diagram 1 varying slowest,
/// each diagram in its documented lexicographic order.
pub fn enumerate_barred(shape: &MultiShape, n: u32) -> Vec<BarredSkewTableau> {
    let per: Vec<Vec<Vec<Vec<BarredEntry>>>> = shape
        .diagrams()
        .iter()
        .map(|p| diagram_fillings(p, n, true))
        .collect();
    cross_product(shape, &per)
}

/// Bar-free fillings of a single diagram (classical semistandard fillings).
pub fn enumerate_semistandard(lambda: &Partition, n: u32) -> Vec<BarredSkewTableau> {
    let shape = MultiShape::single(lambda.clone());
    let per = vec![diagram_fillings(lambda, n, false)];
    cross_product(&shape, &per)
}

fn cross_product(
    shape: &MultiShape,
    per: &[Vec<Vec<Vec<BarredEntry>>>],
) -> Vec<BarredSkewTableau> {
    let total: usize = per.iter().map(|v| v.len()).product();
    let mut out = Vec::with_capacity(total);
    let mut picks = vec![0usize; per.len()];
    if per.iter().any(|v| v.is_empty()) {
        return out;
    }
    loop {
        let rows: Vec<Vec<Vec<BarredEntry>>> =
            picks.iter().enumerate().map(|(d, &k)| per[d][k].clone()).collect();
        out.push(BarredSkewTableau::from_rows_unchecked(shape.clone(), rows));
        // odometer, last diagram fastest
        let mut d = per.len();
        loop {
            if d == 0 {
                return out;
            }
            d -= 1;
            picks[d] += 1;
            if picks[d] < per[d].len() {
                break;
            }
            picks[d] = 0;
        }
    }
}

/// Cells of the multishape in column-word order: global columns right to
/// left, each top to bottom. Yields (diagram, row, col), 0-based.
pub(crate) fn column_word_cells(shape: &MultiShape) -> Vec<(usize, usize, usize)> {
    let mut cells = Vec::with_capacity(shape.total_boxes() as usize);
    for (d, part) in shape.diagrams().iter().enumerate() {
        let conj = part.conjugate();
        for col in (0..part.first() as usize).rev() {
            for row in 0..conj.part(col + 1) as usize {
                cells.push((d, row, col));
            }
        }
    }
    cells
}
