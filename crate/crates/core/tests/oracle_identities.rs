use std::collections::BTreeSet;

use num::BigInt;
use plethysm_core::oracle::{full_decomposition, integer_inner_product, plethysm_coefficient, plethysm_powersum};
use plethysm_core::partition::{count_partitions_in_box, enumerate_partitions};
use plethysm_core::Partition;

fn row(n: usize) -> Partition {
    Partition::new(vec![n]).unwrap()
}

fn column(n: usize) -> Partition {
    Partition::rectangle(1, n)
}

#[test]
fn square_of_square() {
    let e = full_decomposition(&row(2), &row(2)).unwrap();
    assert_eq!(e.constituents(), vec![(row(4), 1), ("2,2".parse().unwrap(), 1)]);
}

#[test]
fn two_row_multiplicities() {
    for m in 1..=4 {
        for n in 1..=4 {
            let e = full_decomposition(&row(n), &row(m)).unwrap();
            for d in 0..=m * n / 2 {
                let lambda = Partition::from_unsorted(vec![m * n - d, d]);
                let below = if d == 0 { 0 } else { count_partitions_in_box(d - 1, n, m) };
                let expected = count_partitions_in_box(d, n, m) - below;
                assert_eq!(e.multiplicity(&lambda) as u128, expected, "m={m} n={n} d={d}");
            }
        }
    }
}

#[test]
fn foulkes_difference_is_nonnegative() {
    for m in 1..=4 {
        for n in m..=8 - m {
            let small = full_decomposition(&row(n), &row(m)).unwrap();
            let large = full_decomposition(&row(m), &row(n)).unwrap();
            for lambda in enumerate_partitions(m * n, None, None) {
                assert!(
                    small.multiplicity(&lambda) >= large.multiplicity(&lambda),
                    "m={m} n={n} {lambda}"
                );
            }
        }
    }
}

/// `lambda + (1^n)`, padding `lambda` with zeros to `n` parts.
fn add_column(lambda: &Partition, n: usize) -> Partition {
    Partition::new((0..n).map(|i| lambda.part(i) + 1).collect()).unwrap()
}

#[test]
fn column_shifts_between_symmetric_and_exterior() {
    for m in 1..=3 {
        for n in 1..=3 {
            let sym = full_decomposition(&row(n), &row(m)).unwrap();
            let ext = full_decomposition(&column(n), &row(m)).unwrap();
            let ext_up = full_decomposition(&column(n), &row(m + 1)).unwrap();
            let sym_up = full_decomposition(&row(n), &row(m + 1)).unwrap();
            for lambda in enumerate_partitions(m * n, Some(n), None) {
                let shifted = add_column(&lambda, n);
                assert_eq!(sym.multiplicity(&lambda), ext_up.multiplicity(&shifted), "m={m} n={n} {lambda}");
                assert_eq!(ext.multiplicity(&lambda), sym_up.multiplicity(&shifted), "m={m} n={n} {lambda}");
            }
        }
    }
}

#[test]
fn decompositions_satisfy_the_dimension_identity() {
    // full_decomposition checks the identity itself and fails otherwise
    for m in 1..=4 {
        for n in 1..=3 {
            for mu in enumerate_partitions(m, None, None) {
                for nu in enumerate_partitions(n, None, None) {
                    full_decomposition(&nu, &mu).unwrap_or_else(|e| panic!("{mu} {nu}: {e}"));
                }
            }
        }
    }
}

#[test]
fn single_coefficients_agree_with_decompositions() {
    let mu: Partition = "2,1".parse().unwrap();
    let nu: Partition = "2,1".parse().unwrap();
    let e = full_decomposition(&nu, &mu).unwrap();
    for lambda in enumerate_partitions(9, None, None) {
        assert_eq!(plethysm_coefficient(&nu, &mu, &lambda).unwrap(), e.multiplicity(&lambda));
    }
}

type Multigraph = Vec<Vec<usize>>;

/// Symmetric matrices with non-negative entries in which row `i` satisfies
/// `2 a_ii + sum over j != i of a_ij = k`: loops count twice towards the degree.
fn regular_multigraphs(n: usize, k: usize) -> Vec<Multigraph> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut a = vec![vec![0; n]; n];
    fn degree(a: &Multigraph, i: usize) -> usize {
        a[i].iter().enumerate().map(|(j, &x)| if i == j { 2 * x } else { x }).sum()
    }
    fn go(cells: &[(usize, usize)], idx: usize, k: usize, a: &mut Multigraph, out: &mut Vec<Multigraph>) {
        let n = a.len();
        if idx == cells.len() {
            if (0..n).all(|i| degree(a, i) == k) {
                out.push(a.clone());
            }
            return;
        }
        let (i, j) = cells[idx];
        for x in 0..=k {
            a[i][j] = x;
            a[j][i] = x;
            if degree(a, i) <= k && degree(a, j) <= k {
                go(cells, idx + 1, k, a, out);
            }
        }
        a[i][j] = 0;
        a[j][i] = 0;
    }
    go(&cells, 0, k, &mut a, &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphism_classes(graphs: &[Multigraph]) -> usize {
    let n = graphs.first().map_or(0, |g| g.len());
    let perms = permutations(n);
    let canon: BTreeSet<Multigraph> = graphs
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|p| (0..n).map(|i| (0..n).map(|j| g[p[i]][p[j]]).collect()).collect::<Multigraph>())
                .min()
                .unwrap()
        })
        .collect();
    canon.len()
}

fn graph_counts(n: usize, k: usize) -> (usize, usize) {
    let all = regular_multigraphs(n, k);
    let simple: Vec<Multigraph> = all
        .iter()
        .filter(|g| (0..n).all(|i| g[i][i] == 0 && g[i].iter().all(|&x| x <= 1)))
        .cloned()
        .collect();
    (isomorphism_classes(&all), isomorphism_classes(&simple))
}

#[test]
fn regular_graph_counts() {
    for (n, k, simple_expected) in [(4, 2, 1), (5, 2, 1), (4, 3, 1)] {
        let outer = plethysm_powersum(&row(n), &row(k)).unwrap();
        let pairs = plethysm_powersum(&row(n * k / 2), &row(2)).unwrap();
        let inner = integer_inner_product(&outer, &pairs).unwrap();
        let (multigraphs, simple) = graph_counts(n, k);
        assert_eq!(simple, simple_expected);
        // the inner product counts multigraphs in which loops add two to a degree
        assert_eq!(inner, BigInt::from(multigraphs), "n={n} k={k}");
        assert!(multigraphs > simple);
    }
}
