//! Conjugate-semistandard tableaux: rows strictly increasing, columns weakly
//! increasing, entries positive integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigUint, One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// Outcome of comparing two elements under a pre-order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Less,
    Greater,
    Equivalent,
    Incomparable,
}

/// A filling of a Young diagram, stored row-major.
///
/// The derived `Ord` is not used; [`Ord`] is implemented as shape first, then
/// [`compare_colex`], so sorted collections of same-shape tableaux iterate in
/// the column-lexicographic total order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from its rows. Row lengths must be weakly decreasing and
    /// entries positive; no semistandard condition is imposed here.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidArgument(format!("rows do not form a diagram: {e}")))?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidArgument("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(shape: Partition, rows: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(rows.iter().map(Vec::len).collect::<Vec<_>>(), shape.parts());
        Tableau { shape, rows }
    }

    /// The tableau with every entry equal to its (1-based) column index. It is
    /// the least element of the majorization order on tableaux of this shape.
    pub fn minimum(shape: &Partition) -> Self {
        let rows = shape.parts().iter().map(|&len| (1..=len).collect()).collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at row `i`, column `j` (both 0-based).
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.first_part()).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn max_entry(&self) -> usize {
        self.entries().max().unwrap_or(0)
    }

    pub fn is_conjugate_semistandard(&self) -> bool {
        is_conjugate_semistandard(self)
    }

    /// Sum over boxes of `entry - column`, with 1-based columns. Zero exactly
    /// for [`Tableau::minimum`]; every decrement lowers it by one.
    pub fn rank(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter().enumerate().map(|(j, &x)| x - (j + 1)))
            .sum()
    }

    pub fn weight(&self) -> Composition {
        tableau_weight(self)
    }

    /// Tableaux obtained by lowering one entry by one, keeping the
    /// conjugate-semistandard conditions. These are the lower covers under
    /// majorization.
    pub fn lower_covers(&self) -> Vec<Tableau> {
        self.neighbours(false)
    }

    /// Tableaux obtained by raising one entry by one; the upper covers.
    pub fn upper_covers(&self) -> Vec<Tableau> {
        self.neighbours(true)
    }

    fn neighbours(&self, up: bool) -> Vec<Tableau> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            for j in 0..self.rows[i].len() {
                let x = self.rows[i][j];
                let y = if up {
                    x + 1
                } else if x > 1 {
                    x - 1
                } else {
                    continue;
                };
                if self.accepts(i, j, y) {
                    let mut rows = self.rows.clone();
                    rows[i][j] = y;
                    out.push(Tableau { shape: self.shape.clone(), rows });
                }
            }
        }
        out.sort();
        out
    }

    /// Whether `value` at (i, j) is compatible with its four neighbours.
    fn accepts(&self, i: usize, j: usize, value: usize) -> bool {
        let r = &self.rows;
        if j > 0 && r[i][j - 1] >= value {
            return false;
        }
        if j + 1 < r[i].len() && r[i][j + 1] <= value {
            return false;
        }
        if i > 0 && r[i - 1][j] > value {
            return false;
        }
        if i + 1 < r.len() && j < r[i + 1].len() && r[i + 1][j] < value {
            return false;
        }
        true
    }

    /// Column-lexicographic sort key: columns right to left, each read from the
    /// bottom up. Lexicographic order on keys is [`compare_colex`].
    fn colex_key(&self) -> impl Iterator<Item = usize> + '_ {
        let width = self.shape.first_part();
        (0..width).rev().flat_map(move |j| {
            let height = self.rows.iter().take_while(|r| r.len() > j).count();
            (0..height).rev().map(move |i| self.rows[i][j])
        })
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.colex_key().cmp(other.colex_key()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.entries().any(|x| x >= 10);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, x) in row.iter().enumerate() {
                if wide && j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Accepts `12/1`, `1 2/1`, and the parenthesised `(12,1)`.
    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ParseTableau {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        let (body, sep) = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(inner) => (inner, ','),
            None => (trimmed, '/'),
        };
        if body.trim().is_empty() {
            return Err(bad("empty tableau"));
        }
        let mut rows = Vec::new();
        for row in body.split(sep) {
            let row = row.trim();
            let entries: Option<Vec<usize>> = if row.contains(char::is_whitespace) {
                row.split_whitespace().map(|t| t.parse().ok()).collect()
            } else {
                row.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
            };
            match entries {
                Some(e) if !e.is_empty() => rows.push(e),
                _ => return Err(bad(&format!("bad row `{row}`"))),
            }
        }
        Tableau::from_rows(rows).map_err(|e| bad(&e.to_string()))
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_conjugate_semistandard(t: &Tableau) -> bool {
    let rows_ok = t.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = t
        .rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above <= below));
    rows_ok && cols_ok
}

/// All conjugate-semistandard `mu`-tableaux with entries in `1..=k`, sorted by
/// [`compare_colex`].
pub fn enumerate_cs(mu: &Partition, k: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if mu.is_empty() {
        out.push(Tableau::minimum(mu));
        return out;
    }
    if k < mu.first_part() {
        return out;
    }
    let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&l| vec![0; l]).collect();
    let boxes: Vec<(usize, usize)> = (0..mu.first_part())
        .flat_map(|j| (0..mu.conjugate().part(j)).map(move |i| (i, j)))
        .collect();
    fill(mu, k, &boxes, 0, &mut rows, &mut out);
    out.sort();
    out
}

fn fill(
    mu: &Partition,
    k: usize,
    boxes: &[(usize, usize)],
    pos: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if pos == boxes.len() {
        out.push(Tableau::from_rows_unchecked(mu.clone(), rows.clone()));
        return;
    }
    let (i, j) = boxes[pos];
    let mut lo = 1;
    if j > 0 {
        lo = lo.max(rows[i][j - 1] + 1);
    }
    if i > 0 {
        lo = lo.max(rows[i - 1][j]);
    }
    // leave room for the strictly larger entries still to come in this row
    let hi = k - (mu.part(i) - 1 - j);
    for x in lo..=hi {
        rows[i][j] = x;
        fill(mu, k, boxes, pos + 1, rows, out);
    }
}

/// `|CS(mu, k)|` by the hook-content formula: the product over boxes (i, j)
/// of `(k + i - j) / hook(i, j)`.
pub fn count_cs(mu: &Partition, k: usize) -> u128 {
    let conj = mu.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row {
            if k + i <= j {
                return 0;
            }
            num *= BigUint::from(k + i - j);
            den *= BigUint::from((row - j) + (conj.part(j) - i) - 1);
        }
    }
    let q = num / den;
    debug_assert!(!q.is_zero() || mu.first_part() > k);
    q.to_u128().expect("tableau count fits in u128")
}

fn same_shape(u: &Tableau, v: &Tableau) -> Result<()> {
    if u.shape != v.shape {
        return Err(Error::ShapeMismatch(u.shape.to_string(), v.shape.to_string()));
    }
    Ok(())
}

/// Colexicographic comparison of multisets of equal size: the larger multiset
/// is the one with more copies of the largest element where they differ.
fn colex_multiset(a: &[usize], b: &[usize]) -> Ordering {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    a.cmp(&b)
}

/// The total order: at the rightmost column where the tableaux differ, compare
/// the column entry multisets colexicographically.
pub fn compare_colex(u: &Tableau, v: &Tableau) -> Result<Ordering> {
    same_shape(u, v)?;
    for j in (0..u.shape.first_part()).rev() {
        let ord = colex_multiset(&u.column(j), &v.column(j));
        if ord != Ordering::Equal {
            return Ok(ord);
        }
    }
    Ok(Ordering::Equal)
}

/// `u ≼ v` under majorization: each row of `v`, sorted, is entrywise at least
/// the corresponding sorted row of `u`.
pub fn is_majorized_by(u: &Tableau, v: &Tableau) -> Result<bool> {
    same_shape(u, v)?;
    Ok(u.rows.iter().zip(&v.rows).all(|(ru, rv)| {
        let mut ru = ru.clone();
        let mut rv = rv.clone();
        ru.sort_unstable();
        rv.sort_unstable();
        ru.iter().zip(&rv).all(|(a, b)| a <= b)
    }))
}

/// The column pre-order: at the rightmost column whose entry multisets differ,
/// compare the sorted columns componentwise.
pub fn compare_col_preorder(u: &Tableau, v: &Tableau) -> Result<Relation> {
    same_shape(u, v)?;
    for j in (0..u.shape.first_part()).rev() {
        let mut cu = u.column(j);
        let mut cv = v.column(j);
        cu.sort_unstable();
        cv.sort_unstable();
        if cu == cv {
            continue;
        }
        let le = cu.iter().zip(&cv).all(|(a, b)| a <= b);
        let ge = cu.iter().zip(&cv).all(|(a, b)| a >= b);
        return Ok(match (le, ge) {
            (true, _) => Relation::Less,
            (_, true) => Relation::Greater,
            _ => Relation::Incomparable,
        });
    }
    Ok(Relation::Equivalent)
}

/// The entry pre-order: colexicographic comparison of the entry multisets.
pub fn compare_entry_preorder(u: &Tableau, v: &Tableau) -> Result<Relation> {
    same_shape(u, v)?;
    let a: Vec<usize> = u.entries().collect();
    let b: Vec<usize> = v.entries().collect();
    Ok(match colex_multiset(&a, &b) {
        Ordering::Less => Relation::Less,
        Ordering::Greater => Relation::Greater,
        Ordering::Equal => Relation::Equivalent,
    })
}

/// Number of occurrences of each value `1..=max_entry`.
pub fn tableau_weight(t: &Tableau) -> Composition {
    let mut w = vec![0; t.max_entry()];
    for x in t.entries() {
        w[x - 1] += 1;
    }
    Composition::new(w)
}
