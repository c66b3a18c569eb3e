//! Integer partitions, compositions, and the orders and constructions on them.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. The
//! textual form groups equal parts with a caret exponent, so `(3,3,2,2,2,1)`
//! prints as `3^2,2^3,1`; the parser accepts both that form and the plain
//! comma-separated list.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts that must already be weakly decreasing.
    /// Zero parts are accepted only at the tail and are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidArgument(format!(
                    "parts {parts:?} are not weakly decreasing"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("zero part inside {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition `(part^count)`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        if part == 0 {
            Partition::empty()
        } else {
            Partition(vec![part; count])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    pub fn is_rectangular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.first_part();
        let mut out = Vec::with_capacity(first);
        for j in 1..=first {
            out.push(self.0.iter().take_while(|&&p| p >= j).count());
        }
        Partition(out)
    }

    /// Dominance: every leading partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominates(self, other)
    }

    /// Multiset union of parts.
    pub fn join(&self, other: &Partition) -> Partition {
        join(self, other)
    }

    /// Componentwise sum, padding the shorter with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Multiplicities of parts: `(part, count)` in decreasing part order.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn standard_tableaux_count(&self) -> num::BigUint {
        use num::{BigUint, One};
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= BigUint::from(k);
        }
        let conj = self.conjugate();
        let mut den = BigUint::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.0[j] - i - 1) + 1;
                den *= BigUint::from(hook);
            }
        }
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for (part, count) in self.grouped() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if count == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{count}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(&compact);
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = |token: &str| Error::ParsePartition {
            input: input.to_string(),
            token: token.to_string(),
        };
        let mut parts = Vec::new();
        for token in body.split(',') {
            let (part, count) = match token.split_once('^') {
                Some((p, e)) => (p, e),
                None => (token, "1"),
            };
            let part: usize = part.parse().map_err(|_| bad(token))?;
            let count: usize = count.parse().map_err(|_| bad(token))?;
            if part == 0 {
                return Err(bad(token));
            }
            if let Some(&prev) = parts.last() {
                if prev < part {
                    return Err(bad(token));
                }
            }
            parts.extend(std::iter::repeat(part).take(count));
        }
        Ok(Partition(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// A finite sequence of non-negative integers with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_partition() {
            Some(Partition(self.0.clone()))
        } else {
            None
        }
    }

    /// Adds `other` componentwise.
    pub fn add(&self, other: &Composition) -> Composition {
        let len = self.0.len().max(other.0.len());
        let get = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
        Composition::new((0..len).map(|i| get(&self.0, i) + get(&other.0, i)).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `a ⊵ b` in the dominance order. Partitions of different sizes are an error.
pub fn dominates(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::IncomparableSizes(a.size(), b.size()));
    }
    let len = a.length().max(b.length());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..len {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict dominance `a ⊳ b`.
pub fn strictly_dominates(a: &Partition, b: &Partition) -> Result<bool> {
    Ok(a != b && dominates(a, b)?)
}

pub fn join(a: &Partition, b: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(a.length() + b.length());
    parts.extend_from_slice(a.parts());
    parts.extend_from_slice(b.parts());
    Partition::from_unsorted(parts)
}

/// All partitions of `n` with at most `max_parts` parts, each at most
/// `max_part`, in decreasing lexicographic order.
pub fn enumerate_partitions(
    n: usize,
    max_parts: Option<usize>,
    max_part: Option<usize>,
) -> Vec<Partition> {
    fn go(
        remaining: usize,
        cap: usize,
        parts_left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if parts_left == 0 {
            return;
        }
        // the remaining parts are each at most `cap`
        if cap.saturating_mul(parts_left) < remaining {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            current.push(p);
            go(remaining - p, p, parts_left - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let cap = max_part.unwrap_or(n);
    let parts_left = max_parts.unwrap_or(n);
    go(n, cap, parts_left, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `d` whose diagram fits in a `rows × cols` box,
/// i.e. the coefficient of `q^d` in the Gaussian binomial `[rows+cols, rows]_q`.
pub fn count_partitions_in_box(d: usize, rows: usize, cols: usize) -> u128 {
    if d > rows * cols {
        return 0;
    }
    // table[r][s] = partitions of s with at most r parts, each at most c, for the
    // current c. A partition with exactly r parts loses one from every part to
    // leave at most r parts, each at most c - 1.
    let mut table = vec![vec![0u128; d + 1]; rows + 1];
    for row in table.iter_mut() {
        row[0] = 1;
    }
    for _ in 0..cols {
        let prev = table.clone();
        for r in 1..=rows {
            for s in 1..=d {
                let exact_r = if s >= r { prev[r][s - r] } else { 0 };
                table[r][s] = table[r - 1][s] + exact_r;
            }
        }
    }
    table[rows][d]
}

/// Members that do not strictly dominate any other member.
pub fn dominance_minimal(set: &[Partition]) -> Result<Vec<Partition>> {
    dominance_extreme(set, true)
}

/// Members not strictly dominated by any other member.
pub fn dominance_maximal(set: &[Partition]) -> Result<Vec<Partition>> {
    dominance_extreme(set, false)
}

fn dominance_extreme(set: &[Partition], minimal: bool) -> Result<Vec<Partition>> {
    let distinct: Vec<Partition> = set
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if let Some(first) = distinct.first() {
        for p in &distinct {
            if p.size() != first.size() {
                return Err(Error::IncomparableSizes(first.size(), p.size()));
            }
        }
    }
    let mut out = Vec::new();
    'outer: for a in &distinct {
        for b in &distinct {
            let beaten = if minimal {
                strictly_dominates(a, b)?
            } else {
                strictly_dominates(b, a)?
            };
            if beaten {
                continue 'outer;
            }
        }
        out.push(a.clone());
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Lexicographic comparison of partitions as sequences.
pub fn lex_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.parts().cmp(b.parts())
}

/// Shorthand used throughout the tests: `part!(3, 1)`.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Partition::new(vec![$($x),+]).expect("valid partition") };
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("8,3,1").conjugate(), p("3,2,2,1,1,1,1,1"));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("8,4"), &p("7,5")).unwrap());
        assert!(!dominates(&p("8,3,1"), &p("7,5")).unwrap());
        assert!(!dominates(&p("7,5"), &p("8,3,1")).unwrap());
        assert!(dominates(&p("5,1^7"), &p("5,1^7")).unwrap());
        assert_eq!(
            dominates(&p("2"), &p("1")),
            Err(Error::IncomparableSizes(2, 1))
        );
    }

    #[test]
    fn join_examples() {
        assert_eq!(p("4,2,1,1").join(&p("6,2,2,1")), p("6,4,2,2,2,1,1,1"));
        assert_eq!(p("3,1").join(&Partition::empty()), p("3,1"));
        assert_eq!(p("3^2,2^2,1^2").join(&p("2,1")), p("3^2,2^3,1^3"));
    }

    #[test]
    fn enumerate_examples() {
        let four: Vec<String> = enumerate_partitions(4, None, None)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(four, ["4", "3,1", "2^2", "2,1^2", "1^4"]);
        assert_eq!(enumerate_partitions(5, Some(3), Some(2)), vec![p("2,2,1")]);
        assert!(enumerate_partitions(5, Some(2), Some(2)).is_empty());
        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
    }

    #[test]
    fn partition_count_matches_euler_recurrence() {
        // oracle: p(n) by the recurrence over the largest part
        fn oracle(n: usize) -> Vec<u64> {
            // ways[k][s]: partitions of s with parts ≤ k
            let mut ways = vec![0u64; n + 1];
            ways[0] = 1;
            for k in 1..=n {
                for s in k..=n {
                    ways[s] += ways[s - k];
                }
            }
            ways
        }
        let table = oracle(20);
        assert_eq!(table[15], 176);
        for n in 0..=20 {
            assert_eq!(enumerate_partitions(n, None, None).len() as u64, table[n]);
        }
    }

    #[test]
    fn box_counts() {
        assert_eq!(count_partitions_in_box(0, 3, 5), 1);
        assert_eq!(count_partitions_in_box(0, 0, 0), 1);
        assert_eq!(count_partitions_in_box(2, 2, 2), 2);
        // (3,1), (2,2), (2,1,1); (1^4) has too many rows
        assert_eq!(count_partitions_in_box(4, 3, 3), 3);
        for rows in 0..5 {
            for cols in 0..5 {
                for d in 0..=rows * cols + 2 {
                    let brute = enumerate_partitions(d, Some(rows), Some(cols)).len() as u128;
                    assert_eq!(count_partitions_in_box(d, rows, cols), brute, "{d} {rows} {cols}");
                }
            }
        }
    }

    #[test]
    fn dominance_minimal_examples() {
        let set = vec![p("4,2,1^6"), p("3,2^3,1^3"), p("3,2^4,1")];
        assert_eq!(dominance_minimal(&set).unwrap(), vec![p("4,2,1^6"), p("3,2^3,1^3")]);
        assert_eq!(dominance_minimal(&[p("4")]).unwrap(), vec![p("4")]);
        assert_eq!(dominance_maximal(&[p("8,4")]).unwrap(), vec![p("8,4")]);
        assert!(dominance_minimal(&[p("4"), p("3")]).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("3,3,2,2,2,1,1,1").to_string(), "3^2,2^3,1^3");
        assert_eq!(p("3^2,2^3,1^3"), p("3,3,2,2,2,1,1,1"));
        assert_eq!(p(" ( 5 , 1^7 ) ").to_string(), "5,1^7");
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "()");
        match "3,x,1".parse::<Partition>() {
            Err(Error::ParsePartition { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn hook_length_formula() {
        assert_eq!(p("2,2").standard_tableaux_count(), 2u32.into());
        assert_eq!(p("3,2").standard_tableaux_count(), 5u32.into());
        assert_eq!(p("2,1").standard_tableaux_count(), 2u32.into());
    }
}
