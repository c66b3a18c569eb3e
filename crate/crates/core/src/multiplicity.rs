//! Bounds on the multiplicity of a constituent of `s_nu[s_mu]`.
//!
//! The upper bound counts tuples of families of shape `mu^kappa` and type
//! `lambda`. The lower bound is the length of the longest sequence of such
//! tuples in which every tuple contains a tableau strictly above, in the
//! column pre-order, every tableau of every earlier tuple.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extrema::PlethysmInstance;
use crate::family::{count_tuples_of_type, enumerate_tuples_of_type};
use crate::oracle::{plethysm_coefficient_with, OracleBudget};
use crate::partition::Partition;
use crate::tableau::{compare_col_preorder, Relation, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityBounds {
    pub lower: u64,
    pub upper_ordered: u128,
    pub upper_symmetrized: u128,
    pub exact: Option<u64>,
}

fn check_size(inst: &PlethysmInstance, lambda: &Partition) -> Result<()> {
    let size = inst.m() * inst.n();
    if lambda.size() != size {
        return Err(Error::SizeMismatch { expected: size, actual: lambda.size() });
    }
    Ok(())
}

/// Tuple counts `(ordered, symmetrized)`; the multiplicity is at most the
/// ordered count.
pub fn upper_bound(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(u128, u128)> {
    let inst = PlethysmInstance::new(mu.clone(), nu.clone())?;
    check_size(&inst, lambda)?;
    let c = count_tuples_of_type(mu, &inst.kappa(), lambda)?;
    Ok((c.ordered, c.symmetrized))
}

/// Longest admissible sequence of tuples of type `lambda`; zero when there
/// are no tuples.
pub fn lower_bound(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
    let inst = PlethysmInstance::new(mu.clone(), nu.clone())?;
    check_size(&inst, lambda)?;
    let tuples = enumerate_tuples_of_type(mu, &inst.kappa(), lambda)?;
    // tuples with the same members can never both occur in a sequence
    let unions: BTreeSet<Vec<Tableau>> = tuples
        .iter()
        .map(|t| t.member_union().into_iter().collect())
        .collect();
    longest_chain(&unions.into_iter().collect::<Vec<_>>())
}

fn strictly_below(u: &Tableau, s: &Tableau) -> Result<bool> {
    Ok(compare_col_preorder(u, s)? == Relation::Less)
}

/// The column pre-order is transitive, so it suffices that each set has an
/// element above everything in its predecessor.
fn longest_chain(sets: &[Vec<Tableau>]) -> Result<u64> {
    // colex refines the column pre-order, so an edge always goes to a set
    // with a larger colex maximum
    let mut order: Vec<&Vec<Tableau>> = sets.iter().collect();
    order.sort_by(|a, b| a.iter().max().cmp(&b.iter().max()));
    let mut best: Vec<u64> = Vec::with_capacity(order.len());
    for (i, set) in order.iter().enumerate() {
        let mut g = 1;
        for (j, prev) in order[..i].iter().enumerate() {
            if best[j] + 1 <= g {
                continue;
            }
            let mut edge = false;
            for s in set.iter() {
                if prev.iter().try_fold(true, |acc, u| Ok::<_, Error>(acc && strictly_below(u, s)?))? {
                    edge = true;
                    break;
                }
            }
            if edge {
                g = best[j] + 1;
            }
        }
        best.push(g);
    }
    Ok(best.into_iter().max().unwrap_or(0))
}

/// Both bounds, plus the exact value from the oracle when requested.
pub fn bounds(mu: &Partition, nu: &Partition, lambda: &Partition, with_oracle: bool) -> Result<MultiplicityBounds> {
    bounds_with(mu, nu, lambda, with_oracle, &OracleBudget::default())
}

pub fn bounds_with(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    with_oracle: bool,
    budget: &OracleBudget,
) -> Result<MultiplicityBounds> {
    let (upper_ordered, upper_symmetrized) = upper_bound(mu, nu, lambda)?;
    let lower = lower_bound(mu, nu, lambda)?;
    let exact = if with_oracle {
        let e = plethysm_coefficient_with(nu, mu, lambda, budget)?;
        if lower > e || e as u128 > upper_ordered {
            return Err(Error::Inconsistent(format!(
                "multiplicity {e} of {lambda} outside the bounds [{lower}, {upper_ordered}]"
            )));
        }
        Some(e)
    } else {
        None
    };
    Ok(MultiplicityBounds { lower, upper_ordered, upper_symmetrized, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(upper_bound(&p("2,1"), &p("4"), &p("3,3,2,2,1,1")).unwrap(), (2, 2));
        assert_eq!(lower_bound(&p("2,1"), &p("4"), &p("3,3,2,2,1,1")).unwrap(), 2);
        let b = bounds(&p("2,1"), &p("4,1"), &p("3^2,2^3,1^3"), true).unwrap();
        assert_eq!(b, MultiplicityBounds { lower: 2, upper_ordered: 2, upper_symmetrized: 2, exact: Some(2) });
        let b = bounds(&p("2"), &p("2"), &p("2,2"), true).unwrap();
        assert_eq!((b.lower, b.upper_ordered, b.exact), (1, 1, Some(1)));
    }

    #[test]
    fn no_tuples() {
        assert_eq!(lower_bound(&p("2"), &p("2"), &p("1^4")).unwrap(), 0);
        assert_eq!(upper_bound(&p("2"), &p("2"), &p("1^4")).unwrap(), (0, 0));
    }

    #[test]
    fn wrong_size() {
        assert!(matches!(
            lower_bound(&p("2"), &p("2"), &p("3")),
            Err(Error::SizeMismatch { expected: 4, actual: 3 })
        ));
    }
}
