//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, computed on beta-sets with a shared memo table.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::{BigUint, One, ToPrimitive};

use crate::error::{Error, Result};
use crate::partition::Partition;

type Key = (Vec<u8>, Vec<u8>);

/// Memoized character values. The table is cleared wholesale once it holds
/// more than `capacity` entries.
pub struct CharacterTable {
    cache: Mutex<HashMap<Key, i128>>,
    capacity: usize,
}

impl Default for CharacterTable {
    fn default() -> Self {
        CharacterTable::with_capacity(4_000_000)
    }
}

impl CharacterTable {
    pub fn with_capacity(capacity: usize) -> Self {
        CharacterTable { cache: Mutex::new(HashMap::new()), capacity }
    }

    /// The process-wide table used by the free functions of this module.
    pub fn global() -> &'static CharacterTable {
        static TABLE: OnceLock<CharacterTable> = OnceLock::new();
        TABLE.get_or_init(CharacterTable::default)
    }

    pub fn len(&self) -> usize {
        self.cache.lock().expect("character cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `chi^lambda(rho)`.
    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<i128> {
        if lambda.size() != rho.size() {
            return Err(Error::IncomparableSizes(lambda.size(), rho.size()));
        }
        let shape = to_small(lambda.parts())?;
        let parts = to_small(rho.parts())?;
        self.eval(&shape, &parts)
    }

    fn eval(&self, shape: &[u8], parts: &[u8]) -> Result<i128> {
        let Some((&r, rest)) = parts.split_first() else {
            return Ok(1);
        };
        if r == 1 {
            return standard_count(shape);
        }
        let key = (shape.to_vec(), parts.to_vec());
        if let Some(&v) = self.cache.lock().expect("character cache poisoned").get(&key) {
            return Ok(v);
        }

        let len = shape.len();
        let beta: Vec<usize> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p as usize + (len - 1 - i))
            .collect();
        let r = r as usize;
        let mut total: i128 = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            // beads jumped over by the moving bead give the height of the hook
            let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let new_shape: Vec<u8> = next
                .iter()
                .enumerate()
                .map(|(i, &x)| (x - (len - 1 - i)) as u8)
                .filter(|&p| p > 0)
                .collect();
            let value = self.eval(&new_shape, rest)?;
            let signed = if crossed % 2 == 0 { value } else { -value };
            total = total.checked_add(signed).ok_or_else(overflow)?;
        }

        let mut cache = self.cache.lock().expect("character cache poisoned");
        if cache.len() >= self.capacity {
            cache.clear();
        }
        cache.insert(key, total);
        Ok(total)
    }
}

fn overflow() -> Error {
    Error::OracleInconsistency("character value overflows i128".into())
}

fn to_small(parts: &[usize]) -> Result<Vec<u8>> {
    parts
        .iter()
        .map(|&p| u8::try_from(p).map_err(|_| Error::InvalidArgument(format!("part {p} too large for the oracle"))))
        .collect()
}

/// Number of standard tableaux, i.e. the character at the identity.
fn standard_count(shape: &[u8]) -> Result<i128> {
    let p = Partition::new(shape.iter().map(|&x| x as usize).collect())?;
    p.standard_tableaux_count().to_i128().ok_or_else(overflow)
}

/// `chi^lambda(rho)` from the shared table.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i128> {
    CharacterTable::global().character(lambda, rho)
}

/// Size of the centralizer of a permutation of cycle type `rho`:
/// the product over part sizes `i` with multiplicity `m` of `i^m m!`.
pub fn centralizer_order(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in rho.grouped() {
        for k in 1..=mult {
            z *= BigUint::from(part) * BigUint::from(k);
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        for rho in enumerate_partitions(5, None, None) {
            assert_eq!(character(&p("5"), &rho).unwrap(), 1);
        }
        assert_eq!(character(&p("2,2"), &p("1,1,1,1")).unwrap(), 2);
        assert_eq!(character(&p("2,2"), &p("2,2")).unwrap(), 2);
        assert_eq!(character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(character(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert_eq!(character(&p("1^4"), &p("4")).unwrap(), -1);
        assert!(character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p("1,1,1")), 6u32.into());
        assert_eq!(centralizer_order(&p("3")), 3u32.into());
        assert_eq!(centralizer_order(&p("2,2,1")), 8u32.into());
    }

    #[test]
    fn column_orthogonality() {
        // sum over lambda of chi(rho) chi(sigma) = z_rho when rho = sigma, else 0
        for n in 1..=6 {
            let parts = enumerate_partitions(n, None, None);
            for rho in &parts {
                for sigma in &parts {
                    let s: i128 = parts
                        .iter()
                        .map(|l| character(l, rho).unwrap() * character(l, sigma).unwrap())
                        .sum();
                    let expect = if rho == sigma {
                        centralizer_order(rho).to_i128().unwrap()
                    } else {
                        0
                    };
                    assert_eq!(s, expect, "{rho} {sigma}");
                }
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        // sum over classes of chi^lambda chi^eta / z = delta
        use num::{BigInt, BigRational, Zero};
        let parts = enumerate_partitions(6, None, None);
        for a in &parts {
            for b in &parts {
                let mut s = BigRational::zero();
                for rho in &parts {
                    let num = BigInt::from(character(a, rho).unwrap() * character(b, rho).unwrap());
                    s += BigRational::new(num, BigInt::from(centralizer_order(rho)));
                }
                let expect = if a == b { BigRational::one() } else { BigRational::zero() };
                assert_eq!(s, expect);
            }
        }
    }
}
