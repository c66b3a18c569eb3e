//! Families of distinct conjugate-semistandard tableaux of a common shape, and
//! tuples of such families.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Composition, Partition};
use crate::tableau::{enumerate_cs, Tableau};

/// A set of distinct conjugate-semistandard tableaux of one shape, kept sorted
/// in the column-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "Vec<Tableau>")]
pub struct TableauFamily {
    shape: Partition,
    members: Vec<Tableau>,
}

impl TableauFamily {
    pub fn new(shape: Partition, members: Vec<Tableau>) -> Result<Self> {
        for t in &members {
            if t.shape() != &shape {
                return Err(Error::ShapeMismatch(shape.to_string(), t.shape().to_string()));
            }
            if !t.is_conjugate_semistandard() {
                return Err(Error::InvalidFamily(format!("{t} is not conjugate-semistandard")));
            }
        }
        let mut members = members;
        members.sort();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFamily("repeated member".into()));
        }
        Ok(TableauFamily { shape, members })
    }

    /// Parses members like `["12/1", "13/1"]`; the shape is read off the first.
    pub fn from_strs<S: AsRef<str>>(members: &[S]) -> Result<Self> {
        let members: Vec<Tableau> = members
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<_>>()?;
        let shape = members
            .first()
            .map(|t| t.shape().clone())
            .ok_or_else(|| Error::InvalidFamily("empty family needs an explicit shape".into()))?;
        TableauFamily::new(shape, members)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn members(&self) -> &[Tableau] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn weight(&self) -> Composition {
        self.members
            .iter()
            .fold(Composition::default(), |acc, t| acc.add(&t.weight()))
    }

    /// The conjugate of the weight; an error when the weight is not a partition.
    pub fn family_type(&self) -> Result<Partition> {
        type_of_weight(&self.weight())
    }

    pub fn is_closed(&self) -> bool {
        is_closed(self)
    }
}

impl TryFrom<Vec<Tableau>> for TableauFamily {
    type Error = Error;

    fn try_from(members: Vec<Tableau>) -> Result<Self> {
        let shape = members
            .first()
            .map(|t| t.shape().clone())
            .ok_or_else(|| Error::InvalidFamily("empty family needs an explicit shape".into()))?;
        TableauFamily::new(shape, members)
    }
}

impl Serialize for TableauFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

/// A sequence of families of one shape whose sizes form the partition `kappa`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyTuple {
    mu: Partition,
    kappa: Partition,
    components: Vec<TableauFamily>,
}

impl FamilyTuple {
    pub fn new(mu: Partition, components: Vec<TableauFamily>) -> Result<Self> {
        for c in &components {
            if c.shape() != &mu {
                return Err(Error::ShapeMismatch(mu.to_string(), c.shape().to_string()));
            }
        }
        let kappa = Partition::new(components.iter().map(TableauFamily::len).collect())
            .map_err(|_| Error::InvalidFamily("component sizes must be weakly decreasing and non-zero".into()))?;
        if kappa.length() != components.len() {
            return Err(Error::InvalidFamily("empty component".into()));
        }
        Ok(FamilyTuple { mu, kappa, components })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn kappa(&self) -> &Partition {
        &self.kappa
    }

    pub fn components(&self) -> &[TableauFamily] {
        &self.components
    }

    /// Distinct tableaux occurring in any component, in colex order.
    pub fn member_union(&self) -> BTreeSet<Tableau> {
        self.components.iter().flat_map(|c| c.members().iter().cloned()).collect()
    }
}

impl Serialize for FamilyTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FamilyTuple", 3)?;
        s.serialize_field("mu", &self.mu)?;
        s.serialize_field("kappa", &self.kappa)?;
        s.serialize_field("families", &self.components)?;
        s.end()
    }
}

fn type_of_weight(w: &Composition) -> Result<Partition> {
    w.to_partition()
        .map(|p| p.conjugate())
        .ok_or_else(|| Error::TypeUndefined(w.to_string()))
}

pub fn tuple_weight(t: &FamilyTuple) -> Composition {
    t.components
        .iter()
        .fold(Composition::default(), |acc, c| acc.add(&c.weight()))
}

pub fn tuple_type(t: &FamilyTuple) -> Result<Partition> {
    type_of_weight(&tuple_weight(t))
}

/// Every conjugate-semistandard tableau majorized by `v`, in colex order.
/// Built by repeated single-entry decrements.
pub fn downward_closure(v: &Tableau) -> Vec<Tableau> {
    let mut seen: HashSet<Tableau> = HashSet::new();
    let mut queue = VecDeque::from([v.clone()]);
    seen.insert(v.clone());
    while let Some(t) = queue.pop_front() {
        for u in t.lower_covers() {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<Tableau> = seen.into_iter().collect();
    out.sort();
    out
}

/// Downward closed under majorization. Checking lower covers suffices since
/// every majorized tableau is reached by a chain of covers.
pub fn is_closed(f: &TableauFamily) -> bool {
    f.members()
        .iter()
        .all(|t| t.lower_covers().iter().all(|u| f.contains(u)))
}

/// The majorization poset on tableaux of rank below `d`, which holds every
/// member of every closed family of size `d`.
struct IdealPoset {
    elements: Vec<Tableau>,
    lower: Vec<Vec<usize>>,
}

impl IdealPoset {
    fn new(mu: &Partition, d: usize) -> Self {
        // rank r forces r smaller elements below, so larger ranks never fit
        let bound = mu.first_part() + d.saturating_sub(1);
        let elements: Vec<Tableau> = enumerate_cs(mu, bound)
            .into_iter()
            .filter(|t| t.rank() < d)
            .collect();
        let index: HashMap<&Tableau, usize> =
            elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let lower = elements
            .iter()
            .map(|t| {
                t.lower_covers()
                    .iter()
                    .map(|u| *index.get(u).expect("lower cover has smaller rank"))
                    .collect()
            })
            .collect();
        IdealPoset { elements, lower }
    }

    /// Order ideals of size `d`. Each ideal is generated once, from the ideal
    /// obtained by deleting its colex-greatest element; colex is a linear
    /// extension of majorization.
    fn ideals(&self, d: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut inside = vec![false; self.elements.len()];
        let mut current = Vec::new();
        self.extend(d, 0, &mut inside, &mut current, &mut out);
        out
    }

    fn extend(
        &self,
        d: usize,
        from: usize,
        inside: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == d {
            out.push(current.clone());
            return;
        }
        for x in from..self.elements.len() {
            if self.lower[x].iter().all(|&y| inside[y]) {
                inside[x] = true;
                current.push(x);
                self.extend(d, x + 1, inside, current, out);
                current.pop();
                inside[x] = false;
            }
        }
    }
}

/// All closed families of `d` tableaux of shape `mu`. Families are listed in
/// decreasing colex order of their member sets (largest members first).
pub fn enumerate_closed_families(mu: &Partition, d: usize) -> Vec<TableauFamily> {
    let poset = IdealPoset::new(mu, d);
    let bound = mu.first_part() + d.saturating_sub(1);
    let mut out: Vec<TableauFamily> = poset
        .ideals(d)
        .into_iter()
        .map(|ideal| {
            let members: Vec<Tableau> = ideal.iter().map(|&i| poset.elements[i].clone()).collect();
            debug_assert!(members.iter().all(|t| t.max_entry() <= bound));
            TableauFamily { shape: mu.clone(), members }
        })
        .collect();
    out.sort_by(|a, b| colex_sets(b.members(), a.members()));
    out
}

fn colex_sets(a: &[Tableau], b: &[Tableau]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Cartesian product of the closed families of sizes `kappa_1, kappa_2, ...`.
pub fn enumerate_closed_tuples(mu: &Partition, kappa: &Partition) -> Vec<FamilyTuple> {
    let mut cache: HashMap<usize, Vec<TableauFamily>> = HashMap::new();
    for &d in kappa.parts() {
        cache.entry(d).or_insert_with(|| enumerate_closed_families(mu, d));
    }
    let mut tuples: Vec<Vec<TableauFamily>> = vec![Vec::new()];
    for &d in kappa.parts() {
        let choices = &cache[&d];
        tuples = tuples
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |f| {
                    let mut next = prefix.clone();
                    next.push(f.clone());
                    next
                })
            })
            .collect();
    }
    tuples
        .into_iter()
        .map(|components| FamilyTuple {
            mu: mu.clone(),
            kappa: kappa.clone(),
            components,
        })
        .collect()
}

/// Counts of tuples of a given type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleCount {
    /// Sequences `(T_1, ..., T_c)`.
    pub ordered: u128,
    /// Tuples identified under permutations of components of equal size.
    pub symmetrized: u128,
}

type Weight = Vec<u16>;

/// The tableaux able to occur in a tuple of type `lambda`, with their weights
/// as vectors of length `lambda_1`.
struct WeightedTableaux {
    tableaux: Vec<Tableau>,
    weights: Vec<Weight>,
    target: Weight,
}

impl WeightedTableaux {
    fn new(mu: &Partition, kappa: &Partition, lambda: &Partition) -> Result<Self> {
        let expected = mu.size() * kappa.size();
        if lambda.size() != expected {
            return Err(Error::SizeMismatch { expected, actual: lambda.size() });
        }
        let len = lambda.first_part();
        let target: Weight = lambda.conjugate().parts().iter().map(|&x| x as u16).collect();
        let tableaux = enumerate_cs(mu, len);
        let weights = tableaux
            .iter()
            .map(|t| {
                let mut w = vec![0u16; len];
                for x in t.entries() {
                    w[x - 1] += 1;
                }
                w
            })
            .collect();
        Ok(WeightedTableaux { tableaux, weights, target })
    }

    fn fits(&self, w: &[u16]) -> bool {
        w.iter().zip(&self.target).all(|(a, b)| a <= b)
    }

    /// `counts[d][w]`: number of `d`-subsets with weight `w`, for `d <= max_d`,
    /// restricted to weights below the target.
    fn subset_counts(&self, max_d: usize) -> Vec<HashMap<Weight, u128>> {
        let mut counts: Vec<HashMap<Weight, u128>> = vec![HashMap::new(); max_d + 1];
        counts[0].insert(vec![0; self.target.len()], 1);
        for tw in &self.weights {
            for d in (0..max_d).rev() {
                let additions: Vec<(Weight, u128)> = counts[d]
                    .iter()
                    .filter_map(|(w, &c)| {
                        let sum: Weight = w.iter().zip(tw).map(|(a, b)| a + b).collect();
                        self.fits(&sum).then_some((sum, c))
                    })
                    .collect();
                for (w, c) in additions {
                    *counts[d + 1].entry(w).or_insert(0) += c;
                }
            }
        }
        counts
    }

    fn convolve(&self, a: &HashMap<Weight, u128>, b: &HashMap<Weight, u128>) -> Result<HashMap<Weight, u128>> {
        let mut out: HashMap<Weight, u128> = HashMap::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                let sum: Weight = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                if self.fits(&sum) {
                    let prod = ca.checked_mul(*cb).ok_or_else(overflow)?;
                    let slot = out.entry(sum).or_insert(0);
                    *slot = slot.checked_add(prod).ok_or_else(overflow)?;
                }
            }
        }
        Ok(out)
    }
}

fn overflow() -> Error {
    Error::InvalidArgument("tuple count overflows u128".into())
}

/// Components of `kappa` grouped by size: `(size, multiplicity)`.
fn groups(kappa: &Partition) -> Vec<(usize, usize)> {
    kappa.grouped()
}

/// Number of tuples of shape `mu^kappa` and type `lambda`, counting all tuples
/// rather than only closed ones.
pub fn count_tuples_of_type(mu: &Partition, kappa: &Partition, lambda: &Partition) -> Result<TupleCount> {
    let wt = WeightedTableaux::new(mu, kappa, lambda)?;
    let zero: Weight = vec![0; wt.target.len()];
    let counts = wt.subset_counts(kappa.first_part());

    let mut ordered: HashMap<Weight, u128> = HashMap::from([(zero.clone(), 1)]);
    for &d in kappa.parts() {
        ordered = wt.convolve(&ordered, &counts[d])?;
    }

    let mut symmetrized: HashMap<Weight, u128> = HashMap::from([(zero.clone(), 1)]);
    for (d, g) in groups(kappa) {
        let multisets = multiset_counts(&wt, &counts[d], g)?;
        symmetrized = wt.convolve(&symmetrized, &multisets)?;
    }

    Ok(TupleCount {
        ordered: ordered.get(&wt.target).copied().unwrap_or(0),
        symmetrized: symmetrized.get(&wt.target).copied().unwrap_or(0),
    })
}

/// Multisets of `g` families drawn from the weighted collection `f`, by the
/// cycle index of the symmetric group: `sum over rho of (1/z_rho) prod f(x^r)`.
fn multiset_counts(
    wt: &WeightedTableaux,
    f: &HashMap<Weight, u128>,
    g: usize,
) -> Result<HashMap<Weight, u128>> {
    let factorial: u128 = (1..=g as u128).product();
    let zero: Weight = vec![0; wt.target.len()];
    let mut total: HashMap<Weight, u128> = HashMap::new();
    for rho in enumerate_partitions(g, None, None) {
        let mut z: u128 = 1;
        for (part, mult) in rho.grouped() {
            z *= (part as u128).pow(mult as u32) * (1..=mult as u128).product::<u128>();
        }
        let mut term: HashMap<Weight, u128> = HashMap::from([(zero.clone(), factorial / z)]);
        for &r in rho.parts() {
            let scaled: HashMap<Weight, u128> = f
                .iter()
                .filter_map(|(w, &c)| {
                    let s: Weight = w.iter().map(|&x| x * r as u16).collect();
                    wt.fits(&s).then_some((s, c))
                })
                .collect();
            term = wt.convolve(&term, &scaled)?;
        }
        for (w, c) in term {
            let slot = total.entry(w).or_insert(0);
            *slot = slot.checked_add(c).ok_or_else(overflow)?;
        }
    }
    Ok(total
        .into_iter()
        .map(|(w, c)| {
            debug_assert_eq!(c % factorial, 0);
            (w, c / factorial)
        })
        .collect())
}

/// One representative of every tuple of shape `mu^kappa` and type `lambda`
/// up to permuting components of equal size: within each run of equal sizes,
/// families appear in weakly increasing order. The number returned equals
/// [`TupleCount::symmetrized`].
pub fn enumerate_tuples_of_type(
    mu: &Partition,
    kappa: &Partition,
    lambda: &Partition,
) -> Result<Vec<FamilyTuple>> {
    let wt = WeightedTableaux::new(mu, kappa, lambda)?;
    let zero: Weight = vec![0; wt.target.len()];
    let counts = wt.subset_counts(kappa.first_part());
    let sizes = kappa.parts();

    // reachable[i]: weights attainable by components i.. (as an ordered tuple)
    let mut reachable: Vec<HashSet<Weight>> = vec![HashSet::new(); sizes.len() + 1];
    reachable[sizes.len()].insert(zero.clone());
    let mut acc: HashMap<Weight, u128> = HashMap::from([(zero.clone(), 1)]);
    for i in (0..sizes.len()).rev() {
        acc = wt.convolve(&acc, &counts[sizes[i]])?;
        reachable[i] = acc.keys().cloned().collect();
    }

    let mut by_weight: HashMap<usize, HashMap<Weight, Vec<Vec<usize>>>> = HashMap::new();
    for &d in sizes {
        by_weight.entry(d).or_insert_with(|| wt.subsets_by_weight(d));
    }
    let mut search = TupleSearch {
        sizes,
        reachable: &reachable,
        by_weight: &by_weight,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    if reachable[0].contains(&wt.target) {
        search.component(0, &wt.target);
    }
    let mut out = Vec::with_capacity(search.out.len());
    for choice in search.out {
        let components = choice
            .into_iter()
            .map(|ids| TableauFamily {
                shape: mu.clone(),
                members: ids.into_iter().map(|i| wt.tableaux[i].clone()).collect(),
            })
            .collect();
        out.push(FamilyTuple { mu: mu.clone(), kappa: kappa.clone(), components });
    }
    Ok(out)
}

impl WeightedTableaux {
    /// Every `d`-subset (as sorted indices) whose weight fits the target.
    fn subsets_by_weight(&self, d: usize) -> HashMap<Weight, Vec<Vec<usize>>> {
        let mut out: HashMap<Weight, Vec<Vec<usize>>> = HashMap::new();
        let mut subset = Vec::with_capacity(d);
        self.collect_subsets(d, 0, &mut subset, vec![0; self.target.len()], &mut out);
        for list in out.values_mut() {
            list.sort();
        }
        out
    }

    fn collect_subsets(
        &self,
        d: usize,
        from: usize,
        subset: &mut Vec<usize>,
        weight: Weight,
        out: &mut HashMap<Weight, Vec<Vec<usize>>>,
    ) {
        if subset.len() == d {
            out.entry(weight).or_default().push(subset.clone());
            return;
        }
        let need = d - subset.len();
        for x in from..self.tableaux.len() {
            if self.tableaux.len() - x < need {
                break;
            }
            let next: Weight = weight.iter().zip(&self.weights[x]).map(|(a, b)| a + b).collect();
            if self.fits(&next) {
                subset.push(x);
                self.collect_subsets(d, x + 1, subset, next, out);
                subset.pop();
            }
        }
    }
}

struct TupleSearch<'a> {
    sizes: &'a [usize],
    reachable: &'a [HashSet<Weight>],
    by_weight: &'a HashMap<usize, HashMap<Weight, Vec<Vec<usize>>>>,
    chosen: Vec<Vec<usize>>,
    out: Vec<Vec<Vec<usize>>>,
}

impl TupleSearch<'_> {
    fn component(&mut self, i: usize, remaining: &Weight) {
        if i == self.sizes.len() {
            self.out.push(self.chosen.clone());
            return;
        }
        let d = self.sizes[i];
        let floor = if i > 0 && self.sizes[i - 1] == d {
            self.chosen.last().cloned()
        } else {
            None
        };
        let mut options: Vec<(&Weight, &Vec<Vec<usize>>)> = self.by_weight[&d].iter().collect();
        options.sort();
        for (w, subsets) in options {
            if !w.iter().zip(remaining).all(|(a, b)| a <= b) {
                continue;
            }
            let rest: Weight = remaining.iter().zip(w).map(|(a, b)| a - b).collect();
            if !self.reachable[i + 1].contains(&rest) {
                continue;
            }
            for ids in subsets {
                if floor.as_ref().is_some_and(|f| ids < f) {
                    continue;
                }
                self.chosen.push(ids.clone());
                self.component(i + 1, &rest);
                self.chosen.pop();
            }
        }
    }
}

/// Weights of the closed families of size `d`, deduplicated.
pub fn closed_family_weights(mu: &Partition, d: usize) -> Result<Vec<Partition>> {
    let mut set = BTreeSet::new();
    for f in enumerate_closed_families(mu, d) {
        let w = f.weight();
        let p = w.to_partition().ok_or_else(|| {
            Error::OracleInconsistency(format!("closed family with non-partition weight {w}"))
        })?;
        set.insert(p);
    }
    Ok(set.into_iter().collect())
}

/// Groups families by type; handy for reports.
pub fn families_by_type(families: &[TableauFamily]) -> Result<BTreeMap<Partition, usize>> {
    let mut out = BTreeMap::new();
    for f in families {
        *out.entry(f.family_type()?).or_insert(0) += 1;
    }
    Ok(out)
}
