use num_bigint::BigInt;
use partition_forge::energy::{descent_example, Energy};
use partition_forge::enumerate::classical::{partitions_of, all_odd, is_distinct, is_m_flat, is_m_regular, occurrences_below};
use partition_forge::enumerate::{enumerate, EnumBudget, Family};
use partition_forge::qseries::{as_count, gf_from_partitions, pochhammer_expand, ProductFactor, Substitution, TruncatedSeries};
use proptest::prelude::*;

fn counts(s: &TruncatedSeries) -> Vec<i64> {
    s.q_coefficients().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

fn classical(n_max: u32, pred: impl Fn(&[u32]) -> bool) -> Vec<i64> {
    (0..=n_max).map(|n| partitions_of(n).iter().filter(|p| pred(p)).count() as i64).collect()
}

fn expand(f: &[ProductFactor], order: u32) -> TruncatedSeries {
    pochhammer_expand(f, &[], order).unwrap()
}

fn q(order: u32, d: u32, c: i64) -> TruncatedSeries {
    TruncatedSeries::monomial(order, &[], d, vec![], BigInt::from(c)).unwrap()
}

#[test]
fn one_plus_q_times_one_minus_q() {
    let one = TruncatedSeries::one(3, &[]);
    let a = one.add(&q(3, 1, 1)).unwrap();
    let b = one.sub(&q(3, 1, 1)).unwrap();
    assert_eq!(counts(&a.mul(&b).unwrap()), vec![1, 0, -1, 0]);
}

#[test]
fn constant_term_of_products() {
    let f = [
        ProductFactor::pos(vec![], 1, 1),
        ProductFactor::neg(vec![], 2, 3),
        ProductFactor::pos(vec![], 1, 2).inverse(),
    ];
    assert_eq!(counts(&expand(&f, 6))[0], 1);
}

#[test]
fn distinct_parts_series() {
    assert_eq!(counts(&expand(&[ProductFactor::neg(vec![], 1, 1)], 5)), vec![1, 1, 1, 2, 2, 3]);
    assert_eq!(counts(&expand(&[ProductFactor::neg(vec![], 1, 1)], 20)), classical(20, is_distinct));
}

#[test]
fn distinct_odd_parts_series() {
    let s = expand(&[ProductFactor::neg(vec![], 1, 2)], 9);
    assert_eq!(counts(&s), vec![1, 1, 0, 1, 1, 1, 1, 1, 2, 2]);
    assert_eq!(counts(&s), classical(9, |p| is_distinct(p) && all_odd(p)));
}

#[test]
fn euler_identity() {
    let lhs = expand(&[ProductFactor::neg(vec![], 1, 1)], 20);
    let rhs = expand(&[ProductFactor::pos(vec![], 2, 2), ProductFactor::pos(vec![], 1, 1).inverse()], 20);
    assert_eq!(lhs, rhs);
    assert_eq!(counts(&rhs), classical(20, all_odd));
}

#[test]
fn glaisher_three_way() {
    for m in 2..=4u32 {
        let s = expand(&[ProductFactor::pos(vec![], m as i64, m as i64), ProductFactor::pos(vec![], 1, 1).inverse()], 20);
        let regular = classical(20, |p| is_m_regular(p, m));
        assert_eq!(counts(&s), regular);
        assert_eq!(regular, classical(20, |p| occurrences_below(p, m)));
        assert_eq!(regular, classical(20, |p| is_m_flat(p, m)));
    }
    let s = expand(&[ProductFactor::pos(vec![], 3, 3), ProductFactor::pos(vec![], 1, 1).inverse()], 16);
    assert_eq!(as_count(&s.q_coefficients()[16]), partitions_of(16).iter().filter(|p| is_m_regular(p, 3)).count() as u64);
}

#[test]
fn strict_partitions_by_number_of_parts() {
    let vars = vec!["x".to_string()];
    let s = pochhammer_expand(&[ProductFactor::neg(vec![1], 1, 1)], &vars, 12).unwrap();
    for n in 0..=12u32 {
        for k in 0..=4i32 {
            let expected = partitions_of(n).iter().filter(|p| is_distinct(p) && p.len() as i32 == k).count();
            assert_eq!(s.coeff(n, &[k]), BigInt::from(expected), "n={n} k={k}");
        }
    }
}

#[test]
fn nonterminating_reciprocal_is_rejected() {
    assert!(pochhammer_expand(&[ProductFactor::pos(vec![], 0, 1).inverse()], &[], 5).is_err());
    assert!(pochhammer_expand(&[ProductFactor::pos(vec![], 1, 0)], &[], 5).is_err());
}

#[test]
fn mismatched_series_are_rejected() {
    let a = TruncatedSeries::one(3, &[]);
    let b = TruncatedSeries::one(4, &[]);
    assert!(a.add(&b).is_err());
    assert!(a.mul(&TruncatedSeries::one(3, &["x".to_string()])).is_err());
}

#[test]
fn gf_from_flat_partitions() {
    let e: Energy = descent_example();
    let list = enumerate(Family::F1, &e, &EnumBudget::new(2, 4)).unwrap();
    let s = gf_from_partitions(&list, &e, &Substitution::sizes(e.colors()), 2).unwrap();
    let one_part = list.iter().filter(|p| p.size(&e) == 1 && p.body().len() == 1).count();
    let at_one: i64 = counts(&s)[1];
    assert_eq!(at_one as usize, list.iter().filter(|p| p.size(&e) == 1).count());
    // with this energy every size-one flat partition has a single non-terminal part
    assert_eq!(at_one as usize, one_part);
    assert!(gf_from_partitions(&[], &e, &Substitution::sizes(e.colors()), 2).unwrap().is_zero());
}

#[test]
fn negative_degree_is_rejected() {
    let e = descent_example();
    let list = enumerate(Family::F1, &e, &EnumBudget::new(3, 4)).unwrap();
    let subst = Substitution::affine(e.colors(), 1, &[-5, -5, 0], false);
    assert!(gf_from_partitions(&list, &e, &subst, 3).is_err());
}

#[test]
fn text_form_is_sorted() {
    let vars = vec!["x".to_string()];
    let s = pochhammer_expand(&[ProductFactor::neg(vec![1], 1, 1)], &vars, 3).unwrap();
    assert_eq!(s.to_text(), "1 * q^0\n1 * q^1 * x^1\n1 * q^2 * x^1\n1 * q^3 * x^1\n1 * q^3 * x^2");
}

fn series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((0u32..=6, -2i32..3, -5i64..6), 0..6).prop_map(|terms| {
        let vars = vec!["x".to_string()];
        let mut s = TruncatedSeries::zero(6, &vars);
        for (d, e, c) in terms {
            s = s.add(&TruncatedSeries::monomial(6, &vars, d, vec![e], BigInt::from(c)).unwrap()).unwrap();
        }
        s
    })
}

proptest! {
    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        let one = TruncatedSeries::one(6, a.variables());
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn reciprocal_cancels(a in 1i64..4, b in 1i64..4, sign in prop::bool::ANY) {
        let f = if sign { ProductFactor::pos(vec![], a, b) } else { ProductFactor::neg(vec![], a, b) };
        let s = pochhammer_expand(&[f.clone(), f.inverse()], &[], 12).unwrap();
        prop_assert_eq!(s, TruncatedSeries::one(12, &[]));
    }
}
