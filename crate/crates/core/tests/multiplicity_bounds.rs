use plethysm_core::extrema::{lex_least, lexmin_multiplicity_hook, PlethysmInstance};
use plethysm_core::family::count_tuples_of_type;
use plethysm_core::multiplicity::{bounds, lower_bound, upper_bound, MultiplicityBounds};
use plethysm_core::{Error, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(upper_bound(&p("2,1"), &p("4"), &p("3,3,2,2,1,1")).unwrap(), (2, 2));
    assert_eq!(upper_bound(&p("2,1"), &p("4,1"), &p("3^2,2^3,1^3")).unwrap(), (2, 2));
    assert_eq!(lower_bound(&p("2,1"), &p("4"), &p("3,3,2,2,1,1")).unwrap(), 2);
    assert_eq!(lower_bound(&p("2,1"), &p("4,1"), &p("3^2,2^3,1^3")).unwrap(), 2);
    assert_eq!(
        bounds(&p("2"), &p("2"), &p("2,2"), true).unwrap(),
        MultiplicityBounds { lower: 1, upper_ordered: 1, upper_symmetrized: 1, exact: Some(1) }
    );
}

#[test]
fn single_tuple_gives_lower_bound_one() {
    for (mu, nu, lambda) in [("2,1", "3,1", "4,2,1^6"), ("2", "3", "2^3"), ("2,1", "2", "2,2,2")] {
        let (mu, nu, lambda) = (p(mu), p(nu), p(lambda));
        let (_, symmetrized) = upper_bound(&mu, &nu, &lambda).unwrap();
        assert_eq!(symmetrized, 1, "{mu} {nu} {lambda}");
        assert_eq!(lower_bound(&mu, &nu, &lambda).unwrap(), 1);
    }
}

#[test]
fn two_equal_rows_outer_shape_has_five_tuples() {
    let count = count_tuples_of_type(&p("2,1"), &p("8,8"), &p("4^4,3^5,2^5,1^7")).unwrap();
    assert_eq!(count.symmetrized, 5);
    assert!(count.ordered >= count.symmetrized);
}

/// For `mu = (m-1, 1)` the upper bound and the oracle both give the binomial
/// coefficient. The chain bound reaches it except for `m = 4, n = 7, 8`, where
/// tableaux shared by all three families block the third step.
#[test]
fn hook_least_constituent_multiplicities() {
    for m in [3, 4] {
        for n in 1..=9 {
            let mu = Partition::new(vec![m - 1, 1]).unwrap();
            let nu = if m % 2 == 1 { Partition::new(vec![n]).unwrap() } else { Partition::rectangle(1, n) };
            let inst = PlethysmInstance::new(mu.clone(), nu.clone()).unwrap();
            let lambda = lex_least(&inst).unwrap();
            let b = bounds(&mu, &nu, &lambda, true).unwrap();
            let hook = lexmin_multiplicity_hook(m, n).unwrap();
            assert_eq!(b.upper_ordered, hook, "m={m} n={n}");
            assert_eq!(b.exact.map(u128::from), Some(hook), "m={m} n={n}");
            let expected_lower = if m == 4 && (n == 7 || n == 8) { 2 } else { hook as u64 };
            assert_eq!(b.lower, expected_lower, "m={m} n={n}");
        }
    }
}

#[test]
fn size_errors() {
    assert!(matches!(
        upper_bound(&p("2,1"), &p("4"), &p("3,3")),
        Err(Error::SizeMismatch { expected: 12, actual: 6 })
    ));
}
