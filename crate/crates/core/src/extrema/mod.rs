//! Dominance-extreme and lexicographically extreme constituents of `s_nu[s_mu]`.
//!
//! Minimal constituents are the minimal types of tuples of closed families of
//! shape `mu^kappa`, where `kappa = nu'` for even `m` and `kappa = nu` for odd
//! `m`. Maximal constituents come from the minimal ones of the sign-twisted
//! instance `(mu', nu)` or `(mu', nu')` by conjugation.

pub mod lexmin;

use std::collections::BTreeSet;

use serde::Serialize;

pub use lexmin::{
    least_n_attaining_max_hook_multiplicity, lexmin_multiplicity_hook, lexmin_segments, lexmin_type,
    lexmin_type_from_trace, SegmentTrace,
};

use crate::error::{Error, Result};
use crate::family::{closed_family_weights, enumerate_closed_tuples, tuple_type, TableauFamily};
use crate::partition::{dominance_maximal, dominance_minimal, Partition};
use crate::tableau::Tableau;

/// The pair `(mu, nu)` labelling `s_nu[s_mu]`, with `m = |mu|` and `n = |nu|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlethysmInstance {
    pub mu: Partition,
    pub nu: Partition,
}

impl PlethysmInstance {
    pub fn new(mu: Partition, nu: Partition) -> Result<Self> {
        if mu.is_empty() || nu.is_empty() {
            return Err(Error::InvalidArgument("both partitions must be non-empty".into()));
        }
        Ok(PlethysmInstance { mu, nu })
    }

    pub fn m(&self) -> usize {
        self.mu.size()
    }

    pub fn n(&self) -> usize {
        self.nu.size()
    }

    /// Sizes of the families in the relevant tuples.
    pub fn kappa(&self) -> Partition {
        if self.m() % 2 == 0 {
            self.nu.conjugate()
        } else {
            self.nu.clone()
        }
    }

    /// The instance whose minimal constituents are the conjugates of the
    /// maximal constituents of this one.
    pub fn sign_twisted(&self) -> PlethysmInstance {
        let nu = if self.m() % 2 == 0 { self.nu.clone() } else { self.nu.conjugate() };
        PlethysmInstance { mu: self.mu.conjugate(), nu }
    }
}

/// Dominance-maximal weights of tuples of closed families of shape `mu^kappa`.
/// A non-maximal component weight can always be raised, so only maximal
/// component weights need to be summed.
fn maximal_tuple_weights(mu: &Partition, kappa: &Partition) -> Result<Vec<Partition>> {
    let mut sums: Vec<Partition> = vec![Partition::empty()];
    let mut cache: Vec<(usize, Vec<Partition>)> = Vec::new();
    for &d in kappa.parts() {
        let weights = match cache.iter().find(|(size, _)| *size == d) {
            Some((_, w)) => w.clone(),
            None => {
                let w = dominance_maximal(&closed_family_weights(mu, d)?)?;
                cache.push((d, w.clone()));
                w
            }
        };
        let next: BTreeSet<Partition> = sums
            .iter()
            .flat_map(|s| weights.iter().map(move |w| s.add(w)))
            .collect();
        sums = dominance_maximal(&next.into_iter().collect::<Vec<_>>())?;
    }
    Ok(sums)
}

/// Minimal constituents, in decreasing lexicographic order.
pub fn minimal_constituents(inst: &PlethysmInstance) -> Result<Vec<Partition>> {
    let types: Vec<Partition> = maximal_tuple_weights(&inst.mu, &inst.kappa())?
        .iter()
        .map(Partition::conjugate)
        .collect();
    dominance_minimal(&types)
}

/// Minimal types over the full product of closed families. Slower than
/// [`minimal_constituents`] and kept as a cross-check.
pub fn minimal_constituents_exhaustive(inst: &PlethysmInstance) -> Result<Vec<Partition>> {
    let types = enumerate_closed_tuples(&inst.mu, &inst.kappa())
        .iter()
        .map(tuple_type)
        .collect::<Result<Vec<_>>>()?;
    dominance_minimal(&types)
}

/// Maximal constituents, in decreasing lexicographic order.
pub fn maximal_constituents(inst: &PlethysmInstance) -> Result<Vec<Partition>> {
    let conj: Vec<Partition> = minimal_constituents(&inst.sign_twisted())?
        .iter()
        .map(Partition::conjugate)
        .collect();
    dominance_maximal(&conj)
}

/// The lexicographically greatest constituent, which always has multiplicity 1:
/// `(n mu_1, ..., n mu_{k-1}, n (mu_k - 1) + nu_1, nu_2, ..., nu_l)` with `k = l(mu)`.
pub fn lex_greatest(inst: &PlethysmInstance) -> Result<(Partition, u64)> {
    let n = inst.n();
    let k = inst.mu.length();
    let mut parts: Vec<usize> = inst.mu.parts()[..k - 1].iter().map(|&x| n * x).collect();
    parts.push(n * (inst.mu.part(k - 1) - 1) + inst.nu.first_part());
    parts.extend_from_slice(&inst.nu.parts()[1..]);
    Ok((Partition::new(parts)?, 1))
}

/// The lexicographically least constituent: the join, over the parts `d` of
/// `kappa`, of the least type of a family of `d` tableaux of shape `mu`.
pub fn lex_least(inst: &PlethysmInstance) -> Result<Partition> {
    let mut out = Partition::empty();
    for &d in inst.kappa().parts() {
        out = out.join(&lexmin_type(&inst.mu, d)?);
    }
    Ok(out)
}

/// Closed-form uniqueness criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Uniqueness {
    /// Exactly one dominance-maximal constituent.
    pub unique_max: bool,
    /// Exactly one dominance-minimal constituent.
    pub unique_min: bool,
    /// Exactly one family of shape `mu^n` with dominance-maximal weight.
    pub unique_maxweight_family: bool,
}

pub fn uniqueness_predicates(inst: &PlethysmInstance) -> Uniqueness {
    let (m, n) = (inst.m(), inst.n());
    let rect = inst.mu.is_rectangular();
    let unique_maxweight_family = m == 1 || n == 1 || (rect && n == 2);
    if m == 1 {
        // s_nu[s_1] = s_nu
        return Uniqueness { unique_max: true, unique_min: true, unique_maxweight_family };
    }
    let kappa = inst.kappa();
    let two_and_ones = kappa.parts().iter().all(|&x| x <= 2);
    Uniqueness {
        unique_max: inst.nu.length() == 1 || (rect && inst.nu.length() == 2),
        unique_min: kappa.first_part() == 1 || (rect && two_and_ones),
        unique_maxweight_family,
    }
}

/// The unique minimal constituent of `s_{(n-c,c)}[s_{(a^b)}]` for even `ab`:
/// `((a+1)^c, a^{(2b-2)c + b(n-2c)}, (a-1)^c)` with zero parts dropped.
pub fn rectangular_min_formula(a: usize, b: usize, n: usize, c: usize) -> Result<Partition> {
    if a == 0 || b == 0 || 2 * c > n {
        return Err(Error::InvalidArgument("need a, b >= 1 and 2c <= n".into()));
    }
    let mut parts = vec![a + 1; c];
    parts.extend(std::iter::repeat(a).take((2 * b - 2) * c + b * (n - 2 * c)));
    parts.extend(std::iter::repeat(a - 1).take(c));
    Ok(Partition::from_unsorted(parts))
}

/// The family `{t, t+1, ..., t+(n-1)}` of lexicographically greatest weight,
/// where `t` has `(a, b) -> b` and `t+c` raises the entry in the last box of
/// the first row with a removable box by `c`.
pub fn lex_max_weight_family(mu: &Partition, n: usize) -> Result<TableauFamily> {
    if mu.is_empty() || n == 0 {
        return Err(Error::InvalidArgument("need a non-empty shape and n >= 1".into()));
    }
    let base = Tableau::minimum(mu);
    let e = (0..mu.length())
        .find(|&i| mu.part(i) > mu.part(i + 1))
        .expect("the last row has a removable box");
    let members = (0..n)
        .map(|c| {
            let mut rows = base.rows().to_vec();
            let last = rows[e].len() - 1;
            rows[e][last] += c;
            Tableau::from_rows(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    TableauFamily::new(mu.clone(), members)
}
