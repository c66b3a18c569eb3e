//! Initial segments of length `n` in total orders refining the entry
//! pre-order, and the lexicographically least type they realise.
//!
//! Tableaux are built tier by tier. Tier `j` fixes the positions of the `j - 1`
//! largest entries by peeling vertical strips off `mu`, one strip per distinct
//! earlier bound, and fills what is left with any conjugate-semistandard
//! tableau whose entries are at most the new bound `k_j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::TableauFamily;
use crate::partition::Partition;
use crate::tableau::{count_cs, enumerate_cs, Tableau};

/// Completions beyond this many are not materialised by [`SegmentTrace::completions`].
pub const MAX_COMPLETIONS: u128 = 100_000;

/// Full record of one run of the segment construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentTrace {
    pub mu: Partition,
    pub n: usize,
    /// The bounds `k_1 >= k_2 >= ... >= k_m`.
    pub k: Vec<usize>,
    /// Tableaux fixed at each step, each tier in colex order.
    pub tiers: Vec<Vec<Tableau>>,
    /// Interchangeable tableaux from which the segment is completed.
    pub pool: Vec<Tableau>,
    /// How many pool members each completion uses.
    pub extra: usize,
}

impl SegmentTrace {
    /// Union of the tiers.
    pub fn base(&self) -> Vec<Tableau> {
        let mut out: Vec<Tableau> = self.tiers.iter().flatten().cloned().collect();
        out.sort();
        out
    }

    pub fn completion_count(&self) -> u128 {
        binomial(self.pool.len() as u128, self.extra as u128)
    }

    /// Completion by the colex-least `extra` members of the pool.
    pub fn canonical_family(&self) -> TableauFamily {
        let mut members = self.base();
        members.extend(self.pool.iter().take(self.extra).cloned());
        TableauFamily::new(self.mu.clone(), members).expect("segment members are distinct")
    }

    /// Every initial segment of length `n`, one per `extra`-subset of the pool.
    pub fn completions(&self) -> Result<Vec<TableauFamily>> {
        let count = self.completion_count();
        if count > MAX_COMPLETIONS {
            return Err(Error::InvalidArgument(format!(
                "{count} completions exceed the limit of {MAX_COMPLETIONS}"
            )));
        }
        let base = self.base();
        let mut out = Vec::with_capacity(count as usize);
        let mut chosen = Vec::with_capacity(self.extra);
        choose(&self.pool, self.extra, 0, &mut chosen, &mut |subset| {
            let mut members = base.clone();
            members.extend(subset.iter().map(|&t| t.clone()));
            out.push(TableauFamily::new(self.mu.clone(), members).expect("segment members are distinct"));
        });
        Ok(out)
    }
}

fn choose<'a>(
    pool: &'a [Tableau],
    r: usize,
    from: usize,
    chosen: &mut Vec<&'a Tableau>,
    emit: &mut dyn FnMut(&[&'a Tableau]),
) {
    if chosen.len() == r {
        emit(chosen);
        return;
    }
    for i in from..pool.len() {
        if pool.len() - i < r - chosen.len() {
            break;
        }
        chosen.push(&pool[i]);
        choose(pool, r, i + 1, chosen, emit);
        chosen.pop();
    }
}

pub(crate) fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// A partially filled diagram: the remaining shape plus entries already placed
/// in the boxes peeled off so far.
#[derive(Clone)]
struct Peeled {
    shape: Vec<usize>,
    placed: Vec<Vec<Option<usize>>>,
}

impl Peeled {
    fn new(mu: &Partition) -> Self {
        Peeled {
            shape: mu.parts().to_vec(),
            placed: mu.parts().iter().map(|&l| vec![None; l]).collect(),
        }
    }

    fn remaining(&self) -> Partition {
        Partition::from_unsorted(self.shape.clone())
    }

    /// All ways to remove `c` boxes, at most one per row, leaving a partition;
    /// the removed boxes receive `value`.
    fn strips(&self, c: usize, value: usize) -> Vec<Peeled> {
        let rows: Vec<usize> = (0..self.shape.len()).filter(|&i| self.shape[i] > 0).collect();
        let mut out = Vec::new();
        let mut pick = Vec::new();
        self.pick_rows(&rows, c, 0, &mut pick, value, &mut out);
        out
    }

    fn pick_rows(
        &self,
        rows: &[usize],
        c: usize,
        from: usize,
        pick: &mut Vec<usize>,
        value: usize,
        out: &mut Vec<Peeled>,
    ) {
        if pick.len() == c {
            let mut next = self.clone();
            for &i in pick.iter() {
                next.shape[i] -= 1;
                next.placed[i][next.shape[i]] = Some(value);
            }
            if next.shape.windows(2).all(|w| w[0] >= w[1]) {
                out.push(next);
            }
            return;
        }
        for idx in from..rows.len() {
            pick.push(rows[idx]);
            self.pick_rows(rows, c, idx + 1, pick, value, out);
            pick.pop();
        }
    }

    /// Fills the remaining shape with `inner` and returns the whole tableau.
    fn complete(&self, mu: &Partition, inner: Option<&Tableau>) -> Tableau {
        let rows = self
            .placed
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| x.unwrap_or_else(|| inner.expect("inner filling").entry(i, j)))
                    .collect()
            })
            .collect();
        Tableau::from_rows(rows)
            .map(|t| {
                debug_assert_eq!(t.shape(), mu);
                t
            })
            .expect("peeled filling is a tableau")
    }
}

/// Runs of equal values in a weakly decreasing sequence: `(value, length)`.
fn runs(k: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in k {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Every peeling of `mu` by vertical strips of the given sizes, the strip for
/// `(value, c)` receiving `value + 1`.
fn peelings(mu: &Partition, groups: &[(usize, usize)]) -> Vec<Peeled> {
    let mut current = vec![Peeled::new(mu)];
    for &(value, c) in groups {
        current = current.iter().flat_map(|p| p.strips(c, value + 1)).collect();
    }
    current
}

/// The segment construction for shape `mu` and length `n`.
pub fn lexmin_segments(mu: &Partition, n: usize) -> Result<SegmentTrace> {
    if n == 0 || mu.is_empty() {
        return Err(Error::InvalidArgument("need a non-empty shape and n >= 1".into()));
    }
    let m = mu.size();
    let mut k: Vec<usize> = Vec::with_capacity(m);
    let mut tiers: Vec<Vec<Tableau>> = Vec::with_capacity(m);
    let mut used = 0usize;

    for _ in 0..m {
        let peeled = peelings(mu, &runs(&k));
        let budget = (n - used) as u128;
        let total = |bound: usize| -> u128 { peeled.iter().map(|p| count_cs(&p.remaining(), bound)).sum() };
        if peeled.is_empty() {
            return Err(Error::Inconsistent(format!("no vertical-strip peeling for bounds {k:?}")));
        }
        // the remaining shapes are non-empty, so the totals grow without bound;
        // stopping one past the previous bound is enough to detect an increase
        let cap = k.last().map_or(usize::MAX, |&prev| prev + 1);
        let mut bound = 0;
        while bound < cap && total(bound + 1) <= budget {
            bound += 1;
        }
        if let Some(&prev) = k.last() {
            if bound > prev {
                return Err(Error::Inconsistent(format!("bounds increase: {k:?} then {bound}")));
            }
        }
        let mut tier: Vec<Tableau> = peeled
            .iter()
            .flat_map(|p| {
                enumerate_cs(&p.remaining(), bound)
                    .into_iter()
                    .map(move |inner| p.complete(mu, Some(&inner)))
            })
            .collect();
        tier.sort();
        used += tier.len();
        k.push(bound);
        tiers.push(tier);
    }

    let mut pool: Vec<Tableau> = peelings(mu, &runs(&k))
        .iter()
        .map(|p| p.complete(mu, None))
        .collect();
    pool.sort();
    let extra = n - used;
    if pool.len() < extra {
        return Err(Error::Inconsistent(format!(
            "pool of {} cannot complete {extra} more tableaux",
            pool.len()
        )));
    }
    Ok(SegmentTrace { mu: mu.clone(), n, k, tiers, pool, extra })
}

/// The type shared by all families from [`lexmin_segments`], from the closed
/// formula in the bounds `k_j` and tier sizes.
pub fn lexmin_type(mu: &Partition, n: usize) -> Result<Partition> {
    let trace = lexmin_segments(mu, n)?;
    lexmin_type_from_trace(&trace)
}

pub fn lexmin_type_from_trace(trace: &SegmentTrace) -> Result<Partition> {
    let m = trace.mu.size();
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    let mut used = 0usize;
    for (j, (&kj, tier)) in trace.k.iter().zip(&trace.tiers).enumerate() {
        used += tier.len();
        let a = (trace.n - used) as i64;
        let b = if kj == 0 {
            0
        } else {
            let num = tier.len() * (m - j);
            if num % kj != 0 {
                return Err(Error::Inconsistent(format!("tier {} size {} not divisible", j + 1, tier.len())));
            }
            (num / kj) as i64
        };
        *counts.entry(kj + 1).or_insert(0) += a;
        if kj > 0 {
            *counts.entry(kj).or_insert(0) += b - a;
        }
    }
    let mut parts = Vec::new();
    for (&value, &count) in counts.iter().rev() {
        if count < 0 {
            return Err(Error::Inconsistent(format!("negative multiplicity {count} of part {value}")));
        }
        parts.extend(std::iter::repeat(value).take(count as usize));
    }
    Partition::new(parts)
}

/// Number of segments of length `n` for the hook `(m - 1, 1)`.
pub fn lexmin_multiplicity_hook(m: usize, n: usize) -> Result<u128> {
    if m < 2 || n == 0 {
        return Err(Error::InvalidArgument("need m >= 2 and n >= 1".into()));
    }
    let mu = Partition::new(vec![m - 1, 1])?;
    Ok(lexmin_segments(&mu, n)?.completion_count())
}

/// Least `n` at which [`lexmin_multiplicity_hook`] reaches the central
/// binomial coefficient `C(m - 1, floor((m - 1) / 2))`.
pub fn least_n_attaining_max_hook_multiplicity(m: usize) -> Result<usize> {
    let target = binomial((m - 1) as u128, ((m - 1) / 2) as u128);
    let mut n = 1;
    loop {
        if lexmin_multiplicity_hook(m, n)? == target {
            return Ok(n);
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn strings(ts: &[Tableau]) -> Vec<String> {
        ts.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn worked_example() {
        let tr = lexmin_segments(&p("3,1"), 7).unwrap();
        assert_eq!(tr.k, vec![3, 2, 1, 0]);
        assert_eq!(strings(&tr.tiers[0]), ["123/1", "123/2", "123/3"]);
        assert_eq!(strings(&tr.tiers[1]), ["124/1", "124/2"]);
        assert_eq!(strings(&tr.tiers[2]), ["134/1"]);
        assert!(tr.tiers[3].is_empty());
        assert_eq!(strings(&tr.pool), ["123/4", "124/3", "134/2"]);
        assert_eq!(tr.extra, 1);
        assert_eq!(tr.completions().unwrap().len(), 3);
        assert_eq!(lexmin_type_from_trace(&tr).unwrap(), p("4^4,3^2,2^2,1^2"));
    }

    #[test]
    fn exact_first_tier() {
        let tr = lexmin_segments(&p("3,1"), 3).unwrap();
        assert_eq!(tr.k[0], 3);
        assert_eq!(tr.extra, 0);
        let fams = tr.completions().unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(strings(fams[0].members()), ["123/1", "123/2", "123/3"]);
    }

    #[test]
    fn single_row_is_colex_on_subsets() {
        // initial segments of the colex order on 2-subsets: 12, 13, 23, 14, 24, ...
        let tr = lexmin_segments(&p("2"), 4).unwrap();
        let fams = tr.completions().unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(strings(fams[0].members()), ["12", "13", "23", "14"]);
    }

    #[test]
    fn types_from_formula_and_weights_agree() {
        for mu in ["2", "1,1", "2,1", "3,1", "2,2"] {
            let mu = p(mu);
            for n in 1..=8 {
                let tr = lexmin_segments(&mu, n).unwrap();
                let formula = lexmin_type_from_trace(&tr).unwrap();
                for f in tr.completions().unwrap() {
                    assert_eq!(f.len(), n);
                    assert_eq!(f.family_type().unwrap(), formula, "{mu} {n}");
                }
            }
        }
    }

    #[test]
    fn hook_multiplicities() {
        assert_eq!(lexmin_multiplicity_hook(4, 7).unwrap(), 3);
        assert_eq!(lexmin_multiplicity_hook(4, 3).unwrap(), 1);
        assert_eq!(least_n_attaining_max_hook_multiplicity(4).unwrap(), 7);
        assert_eq!(least_n_attaining_max_hook_multiplicity(3).unwrap(), 4);
        assert_eq!(least_n_attaining_max_hook_multiplicity(5).unwrap(), 12);
        assert_eq!(least_n_attaining_max_hook_multiplicity(6).unwrap(), 17);
    }

    #[test]
    fn small_types() {
        assert_eq!(lexmin_type(&p("2,1"), 4).unwrap(), p("3,3,2,2,1,1"));
        assert_eq!(lexmin_type(&p("2,1"), 1).unwrap(), p("2,1"));
        // the single tableau with (a, b) -> b has weight mu conjugate, so type mu
        assert_eq!(lexmin_type(&p("3,2"), 1).unwrap(), p("3,2"));
    }
}
