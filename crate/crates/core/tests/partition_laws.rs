use plethysm_core::partition::{
    count_partitions_in_box, dominance_maximal, dominance_minimal, dominates, enumerate_partitions, join,
};
use plethysm_core::Partition;
use proptest::prelude::*;

fn partition_strategy(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

#[test]
fn conjugation_is_a_size_preserving_involution() {
    for n in 0..=12 {
        for p in enumerate_partitions(n, None, None) {
            let c = p.conjugate();
            assert_eq!(c.size(), n);
            assert_eq!(c.conjugate(), p);
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=10 {
        let ps = enumerate_partitions(n, None, None);
        for a in &ps {
            assert!(dominates(a, a).unwrap());
            for b in &ps {
                let ab = dominates(a, b).unwrap();
                if ab && dominates(b, a).unwrap() {
                    assert_eq!(a, b);
                }
                // conjugation reverses dominance
                assert_eq!(ab, dominates(&b.conjugate(), &a.conjugate()).unwrap());
            }
        }
    }
    for n in 1..=7 {
        let ps = enumerate_partitions(n, None, None);
        for a in &ps {
            for b in ps.iter().filter(|b| dominates(a, b).unwrap()) {
                for c in ps.iter().filter(|c| dominates(b, c).unwrap()) {
                    assert!(dominates(a, c).unwrap(), "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn lexicographic_order_extends_dominance() {
    for n in 1..=9 {
        let ps = enumerate_partitions(n, None, None);
        for a in &ps {
            for b in &ps {
                if dominates(a, b).unwrap() {
                    assert!(a >= b);
                }
            }
        }
    }
}

#[test]
fn box_complement_symmetry() {
    for rows in 0..=5 {
        for cols in 0..=5 {
            let total: u128 = (0..=rows * cols).map(|d| count_partitions_in_box(d, rows, cols)).sum();
            // total number of lattice paths through the box
            let binom = (1..=rows as u128).fold(1u128, |acc, i| acc * (cols as u128 + i) / i);
            assert_eq!(total, binom);
            for d in 0..=rows * cols {
                let direct = enumerate_partitions(d, Some(rows), Some(cols)).len() as u128;
                assert_eq!(count_partitions_in_box(d, rows, cols), direct);
                assert_eq!(count_partitions_in_box(d, rows, cols), count_partitions_in_box(rows * cols - d, rows, cols));
            }
        }
    }
}

proptest! {
    #[test]
    fn join_laws(a in partition_strategy(6, 6), b in partition_strategy(6, 6), c in partition_strategy(6, 6)) {
        prop_assert_eq!(join(&a, &b), join(&b, &a));
        prop_assert_eq!(join(&join(&a, &b), &c), join(&a, &join(&b, &c)));
        prop_assert_eq!(join(&a, &b).size(), a.size() + b.size());
        // joining rows is adding columns
        prop_assert_eq!(join(&a, &b).conjugate(), a.conjugate().add(&b.conjugate()));
    }

    #[test]
    fn text_round_trip(p in partition_strategy(10, 8)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn extremes_form_antichains(n in 1usize..9, picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let all = enumerate_partitions(n, None, None);
        let set: Vec<Partition> = picks.iter().map(|i| i.get(&all).clone()).collect();
        for extreme in [dominance_minimal(&set).unwrap(), dominance_maximal(&set).unwrap()] {
            prop_assert!(!extreme.is_empty());
            for a in &extreme {
                prop_assert!(set.contains(a));
                for b in &extreme {
                    if a != b {
                        prop_assert!(!dominates(a, b).unwrap());
                    }
                }
            }
        }
        let min = dominance_minimal(&set).unwrap();
        for s in &set {
            prop_assert!(min.iter().any(|m| dominates(s, m).unwrap()));
        }
        let conj: Vec<Partition> = set.iter().map(Partition::conjugate).collect();
        let mut flipped: Vec<Partition> = dominance_maximal(&conj).unwrap().iter().map(Partition::conjugate).collect();
        flipped.sort_by(|a, b| b.cmp(a));
        prop_assert_eq!(flipped, min);
    }
}
