//! Brute-force plethysm coefficients through the power-sum basis.
//!
//! `s_nu[s_mu]` is expanded in power sums using `p_r[p_rho] = p_{r rho}`, and
//! each Schur coefficient is read off as `sum over rho of c_rho chi^lambda(rho)`.
//! Everything is exact; any non-integral or negative coefficient is reported
//! as an internal inconsistency.

pub mod character;
pub mod powersum;

use std::collections::BTreeMap;

use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use character::{centralizer_order, character, CharacterTable};
pub use powersum::{inner_product, plethysm_powersum, schur_coefficient, schur_to_powersum, PowerSumVector};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Size limits on `mn` for the two kinds of oracle query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    /// Largest `mn` accepted by [`full_decomposition`].
    pub decomposition_cap: usize,
    /// Largest `mn` accepted by [`plethysm_coefficient`].
    pub coefficient_cap: usize,
}

/// Single coefficients above this size log a warning.
pub const COEFFICIENT_WARN_ABOVE: usize = 16;

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { decomposition_cap: 16, coefficient_cap: 48 }
    }
}

/// The Schur expansion of `s_nu[s_mu]`, zero multiplicities omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlethysmExpansion {
    pub mu: Partition,
    pub nu: Partition,
    pub multiplicities: BTreeMap<Partition, u64>,
}

impl PlethysmExpansion {
    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<Partition> {
        self.multiplicities.keys().cloned().collect()
    }

    /// Constituents in decreasing lexicographic order.
    pub fn constituents(&self) -> Vec<(Partition, u64)> {
        self.multiplicities.iter().rev().map(|(p, &m)| (p.clone(), m)).collect()
    }
}

fn to_multiplicity(c: &BigRational, what: &str) -> Result<u64> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::OracleInconsistency(format!("coefficient {c} of {what} is not a non-negative integer")));
    }
    c.to_integer()
        .to_u64()
        .ok_or_else(|| Error::OracleInconsistency(format!("coefficient {c} of {what} overflows u64")))
}

/// `<s_nu[s_mu], s_lambda>` with the default budget.
pub fn plethysm_coefficient(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<u64> {
    plethysm_coefficient_with(nu, mu, lambda, &OracleBudget::default())
}

pub fn plethysm_coefficient_with(
    nu: &Partition,
    mu: &Partition,
    lambda: &Partition,
    budget: &OracleBudget,
) -> Result<u64> {
    let size = mu.size() * nu.size();
    if lambda.size() != size {
        return Err(Error::SizeMismatch { expected: size, actual: lambda.size() });
    }
    if size > budget.coefficient_cap {
        return Err(Error::BudgetExceeded { size, cap: budget.coefficient_cap, what: "a single coefficient" });
    }
    if size > COEFFICIENT_WARN_ABOVE {
        log::warn!("oracle coefficient at mn = {size} may be slow");
    }
    let f = plethysm_powersum(nu, mu)?;
    log::debug!("power-sum support of s_{nu}[s_{mu}]: {} terms", f.len());
    let c = schur_coefficient(&f, lambda)?;
    to_multiplicity(&c, &format!("s_{lambda} in s_{nu}[s_{mu}]"))
}

/// Every constituent of `s_nu[s_mu]` with the default budget.
pub fn full_decomposition(nu: &Partition, mu: &Partition) -> Result<PlethysmExpansion> {
    full_decomposition_with(nu, mu, &OracleBudget::default())
}

pub fn full_decomposition_with(nu: &Partition, mu: &Partition, budget: &OracleBudget) -> Result<PlethysmExpansion> {
    let size = mu.size() * nu.size();
    if size > budget.decomposition_cap {
        return Err(Error::BudgetExceeded { size, cap: budget.decomposition_cap, what: "a full decomposition" });
    }
    let f = plethysm_powersum(nu, mu)?;
    let lambdas = enumerate_partitions(size, None, None);
    let values: Vec<(Partition, u64)> = lambdas
        .into_par_iter()
        .map(|lambda| {
            let c = schur_coefficient(&f, &lambda)?;
            let m = to_multiplicity(&c, &format!("s_{lambda} in s_{nu}[s_{mu}]"))?;
            Ok((lambda, m))
        })
        .collect::<Result<_>>()?;
    let expansion = PlethysmExpansion {
        mu: mu.clone(),
        nu: nu.clone(),
        multiplicities: values.into_iter().filter(|(_, m)| *m > 0).collect(),
    };
    check_dimension(&expansion)?;
    Ok(expansion)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Dimension of the induced module: `(mn)! / ((m!)^n n!) (f^mu)^n f^nu`.
pub fn expected_dimension(nu: &Partition, mu: &Partition) -> BigUint {
    let (m, n) = (mu.size(), nu.size());
    let index = factorial(m * n) / (num::pow(factorial(m), n) * factorial(n));
    index * num::pow(mu.standard_tableaux_count(), n) * nu.standard_tableaux_count()
}

/// Checks `sum of mult * f^lambda` against [`expected_dimension`].
pub fn check_dimension(e: &PlethysmExpansion) -> Result<()> {
    let got = e
        .multiplicities
        .iter()
        .fold(BigUint::zero(), |acc, (l, &m)| acc + l.standard_tableaux_count() * BigUint::from(m));
    let want = expected_dimension(&e.nu, &e.mu);
    if got != want {
        return Err(Error::OracleInconsistency(format!(
            "dimension check failed for s_{}[s_{}]: {got} != {want}",
            e.nu, e.mu
        )));
    }
    Ok(())
}

/// `<f, g>` for symmetric functions given in power sums, as an integer when it is one.
pub fn integer_inner_product(a: &PowerSumVector, b: &PowerSumVector) -> Result<BigInt> {
    let v = inner_product(a, b);
    if !v.is_integer() {
        return Err(Error::OracleInconsistency(format!("inner product {v} is not integral")));
    }
    Ok(v.to_integer())
}
