//! Symmetric functions in the power-sum basis with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul};

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;

use super::character::{centralizer_order, character};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// `sum over rho of c_rho p_rho`, with zero coefficients never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PowerSumVector {
    coefficients: BTreeMap<Partition, BigRational>,
}

impl PowerSumVector {
    pub fn zero() -> Self {
        PowerSumVector::default()
    }

    /// The constant 1, i.e. `p` of the empty partition.
    pub fn one() -> Self {
        PowerSumVector::monomial(Partition::empty(), BigRational::one())
    }

    pub fn monomial(rho: Partition, c: BigRational) -> Self {
        let mut v = PowerSumVector::zero();
        v.add_term(rho, c);
        v
    }

    pub fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coefficients.entry(rho) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &PowerSumVector, c: &BigRational) {
        for (rho, v) in &other.coefficients {
            self.add_term(rho.clone(), v * c);
        }
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.coefficients.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coefficients.iter()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = PowerSumVector::zero();
        out.add_scaled(self, c);
        out
    }

    /// `p_r` applied to this function by plethysm: each `p_rho` becomes
    /// `p_{r rho}`.
    pub fn dilate(&self, r: usize) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .map(|(rho, c)| {
                let scaled = rho.parts().iter().map(|&x| x * r).collect();
                (Partition::new(scaled).expect("scaling keeps order"), c.clone())
            })
            .collect();
        PowerSumVector { coefficients }
    }
}

impl Add for &PowerSumVector {
    type Output = PowerSumVector;

    fn add(self, other: &PowerSumVector) -> PowerSumVector {
        let mut out = self.clone();
        for (rho, c) in &other.coefficients {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }
}

impl Mul for &PowerSumVector {
    type Output = PowerSumVector;

    /// `p_alpha p_beta = p_{alpha joined with beta}`.
    fn mul(self, other: &PowerSumVector) -> PowerSumVector {
        let mut out = PowerSumVector::zero();
        for (a, ca) in &self.coefficients {
            for (b, cb) in &other.coefficients {
                out.add_term(a.join(b), ca * cb);
            }
        }
        out
    }
}

fn ratio(num: i128, den: &num::BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den.clone()))
}

/// `s_lambda = sum over rho of chi^lambda(rho) / z_rho p_rho`.
pub fn schur_to_powersum(lambda: &Partition) -> Result<PowerSumVector> {
    let mut out = PowerSumVector::zero();
    for rho in enumerate_partitions(lambda.size(), None, None) {
        let chi = character(lambda, &rho)?;
        if chi != 0 {
            let z = centralizer_order(&rho);
            out.add_term(rho, ratio(chi, &z));
        }
    }
    Ok(out)
}

/// `<p_rho, p_sigma> = z_rho` when equal, zero otherwise.
pub fn inner_product(a: &PowerSumVector, b: &PowerSumVector) -> BigRational {
    let mut total = BigRational::zero();
    for (rho, ca) in a.iter() {
        if let Some(cb) = b.coefficients.get(rho) {
            let z = BigInt::from(centralizer_order(rho));
            total += ca * cb * BigRational::from_integer(z);
        }
    }
    total
}

/// `<f, s_lambda> = sum over rho of c_rho chi^lambda(rho)`, summed in parallel.
pub fn schur_coefficient(f: &PowerSumVector, lambda: &Partition) -> Result<BigRational> {
    let terms: Vec<(&Partition, &BigRational)> = f.iter().collect();
    terms
        .par_iter()
        .map(|(rho, c)| {
            if rho.size() != lambda.size() {
                return Err(Error::IncomparableSizes(rho.size(), lambda.size()));
            }
            let chi = character(lambda, rho)?;
            Ok(*c * BigRational::from_integer(BigInt::from(chi)))
        })
        .try_reduce(BigRational::zero, |a, b| Ok(a + b))
}

/// The power-sum expansion of the plethysm `s_nu[s_mu]`.
pub fn plethysm_powersum(nu: &Partition, mu: &Partition) -> Result<PowerSumVector> {
    let inner = schur_to_powersum(mu)?;
    let outer = schur_to_powersum(nu)?;
    let mut dilated: HashMap<usize, PowerSumVector> = HashMap::new();
    for sigma in outer.iter().map(|(s, _)| s) {
        for &r in sigma.parts() {
            dilated.entry(r).or_insert_with(|| inner.dilate(r));
        }
    }

    // products over suffixes of sigma, shared between sigmas with equal tails
    let mut products: HashMap<Vec<usize>, PowerSumVector> = HashMap::new();
    products.insert(Vec::new(), PowerSumVector::one());
    let mut result = PowerSumVector::zero();
    for (sigma, c) in outer.iter() {
        let parts = sigma.parts();
        for start in (0..parts.len()).rev() {
            let key = parts[start..].to_vec();
            if products.contains_key(&key) {
                continue;
            }
            let tail = &products[&parts[start + 1..]];
            let value = &dilated[&parts[start]] * tail;
            products.insert(key, value);
        }
        result.add_scaled(&products[parts], c);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn schur_expansions() {
        let one = schur_to_powersum(&p("1")).unwrap();
        assert_eq!(one, PowerSumVector::monomial(p("1"), q(1, 1)));
        let two = schur_to_powersum(&p("2")).unwrap();
        assert_eq!(two.coefficient(&p("2")), q(1, 2));
        assert_eq!(two.coefficient(&p("1,1")), q(1, 2));
        let col = schur_to_powersum(&p("1,1")).unwrap();
        assert_eq!(col.coefficient(&p("2")), q(-1, 2));
        assert_eq!(col.coefficient(&p("1,1")), q(1, 2));
    }

    #[test]
    fn schur_functions_are_orthonormal() {
        let parts = enumerate_partitions(5, None, None);
        let vecs: Vec<PowerSumVector> = parts.iter().map(|l| schur_to_powersum(l).unwrap()).collect();
        for (i, a) in vecs.iter().enumerate() {
            for (j, b) in vecs.iter().enumerate() {
                let expect = if i == j { q(1, 1) } else { q(0, 1) };
                assert_eq!(inner_product(a, b), expect);
            }
        }
    }

    #[test]
    fn trivial_plethysms() {
        let mu = p("2,1");
        assert_eq!(plethysm_powersum(&p("1"), &mu).unwrap(), schur_to_powersum(&mu).unwrap());
        assert_eq!(plethysm_powersum(&p("4"), &p("1")).unwrap(), schur_to_powersum(&p("4")).unwrap());
    }

    #[test]
    fn square_of_square() {
        let f = plethysm_powersum(&p("2"), &p("2")).unwrap();
        assert_eq!(schur_coefficient(&f, &p("4")).unwrap(), q(1, 1));
        assert_eq!(schur_coefficient(&f, &p("3,1")).unwrap(), q(0, 1));
        assert_eq!(schur_coefficient(&f, &p("2,2")).unwrap(), q(1, 1));
        assert_eq!(schur_coefficient(&f, &p("2,1,1")).unwrap(), q(0, 1));
        assert_eq!(schur_coefficient(&f, &p("1^4")).unwrap(), q(0, 1));
    }
}
