mod common;

use proptest::prelude::*;

use k3cr3::abelian::oracle::subgroup_quotient_pairs;
use k3cr3::catalog;
use k3cr3::exec::Exec;
use k3cr3::extensions::{is_product_type, product_type_by_decomposition};
use k3cr3::lattice::Lattice;
use k3cr3::orbits::{self, Hypothesis};
use k3cr3::partitions::{enumerate_extensions, extension_exists, lr_coefficient, Partition};
use k3cr3::rr::{self, Basket};
use k3cr3::AbelianGroup;

fn group() -> impl Strategy<Value = AbelianGroup> {
    prop::collection::vec(1u64..=24, 0..5).prop_map(|f| AbelianGroup::canonicalize(&f).unwrap())
}

fn small_group() -> impl Strategy<Value = AbelianGroup> {
    prop::collection::vec(prop::sample::select(vec![1u64, 2, 3, 4, 6, 8]), 0..4)
        .prop_map(|f| AbelianGroup::canonicalize(&f).unwrap())
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=4, 0..=max as usize).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn display_parse_roundtrip(x in group()) {
        let back: AbelianGroup = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        let fs = x.invariant_factors();
        prop_assert!(fs.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert_eq!(fs.iter().product::<u64>().max(1), x.order());
    }

    #[test]
    fn products_multiply_orders(a in group(), b in group()) {
        let p = a.direct_product(&b);
        prop_assert_eq!(p.order(), a.order() * b.order());
        prop_assert!(a.embeds_in(&p) && b.embeds_in(&p));
        prop_assert_eq!(p, b.direct_product(&a));
    }

    #[test]
    fn subgroup_classes_embed(x in small_group()) {
        for s in x.subgroup_classes() {
            prop_assert!(s.embeds_in(&x));
            prop_assert_eq!(x.order() % s.order(), 0);
        }
    }

    #[test]
    fn extensions_are_consistent(a in small_group(), b in small_group()) {
        let exts = enumerate_extensions(&a, &b);
        prop_assert!(exts.contains(&a.direct_product(&b)));
        for e in &exts {
            prop_assert_eq!(e.order(), a.order() * b.order());
            prop_assert!(a.embeds_in(e));
            prop_assert!(extension_exists(&a, &b, e));
        }
    }

    #[test]
    fn lr_is_symmetric(l in partition(4), n in partition(4), m in partition(6)) {
        prop_assert_eq!(lr_coefficient(&l, &n, &m), lr_coefficient(&n, &l, &m));
    }

    #[test]
    fn lr_support_contains_both_factors(l in partition(3), n in partition(3)) {
        for m in Partition::all_of_size(l.size() + n.size()) {
            if lr_coefficient(&l, &n, &m) > 0 {
                prop_assert!(l.is_contained_in(&m) && n.is_contained_in(&m));
            }
        }
    }

    #[test]
    fn product_type_closed_under_subgroups(x in small_group()) {
        if is_product_type(&x) {
            for s in x.subgroup_classes() {
                prop_assert!(is_product_type(&s), "{} in {}", s, x);
            }
        }
    }

    #[test]
    fn product_type_tests_agree(x in group()) {
        prop_assert_eq!(is_product_type(&x), product_type_by_decomposition(&x).is_some());
    }

    #[test]
    fn cremona_extensions_are_product_type(i in 0usize..64, j in 0usize..64, swap: bool) {
        // Extensions of a Cr₂ group by a Cr₁ group (either way round).
        let cr1: Vec<AbelianGroup> = AbelianGroup::all_up_to_order(12).into_iter().filter(catalog::cr1_members).collect();
        let cr2: Vec<AbelianGroup> = AbelianGroup::all_up_to_order(32).into_iter().filter(catalog::cr2_members).collect();
        let h = &cr1[i % cr1.len()];
        let k = &cr2[j % cr2.len()];
        let (a, b) = if swap { (k, h) } else { (h, k) };
        for e in enumerate_extensions(a, b) {
            prop_assert!(is_product_type(&e), "{} from {} and {}", e, a, b);
        }
    }

    #[test]
    fn stabilizer_splits_balance(x in small_group(), d in 1u64..=16) {
        prop_assume!(x.order() <= 128 && x.order() % d == 0);
        for (hx, hs) in orbits::stabilizer_splits(&x, d, 128).unwrap() {
            prop_assert_eq!(hx.order() * d, x.order());
            prop_assert_eq!(hs.order(), d);
        }
    }

    #[test]
    fn groupings_respect_constraints(h in 0usize..6, n2 in 0u32..10, n3 in 0u32..9, n4 in 0u32..5) {
        let six = catalog::exceptional_groups();
        let h = &six[h];
        let mut t = Vec::new();
        for (n, r) in [(n2, 2), (n3, 3), (n4, 4)] {
            if n > 0 { t.push((n, r, 1)); }
        }
        let basket = Basket::from_triples(&t).unwrap();
        let c = orbits::orbit_constraints(h).unwrap();
        for gr in orbits::basket_groupings(&c, &basket, Hypothesis::General) {
            prop_assert!(gr.0.iter().all(|o| c.count_ok(u64::from(o.count))));
            prop_assert!(!c.single_class || gr.0.len() <= 1);
            let used: u32 = gr.0.iter().map(|o| o.count * o.kind.basket_points()).sum();
            prop_assert_eq!(used, basket.total_point_count());
        }
        for total in 1..=12u64 {
            for (k, per) in orbits::admissible_groupings(h, 2, total).unwrap() {
                prop_assert!(c.count_ok(k) && k * per == total);
            }
        }
    }

    #[test]
    fn discriminant_order_is_det(d in prop::collection::vec(-12i64..=12, 1..4), u in -3i64..=3) {
        prop_assume!(d.iter().all(|&x| x != 0));
        let n = d.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n { m[i][i] = d[i]; }
        if n > 1 { m[0][1] = u; m[1][0] = u; }
        let l = Lattice::new(m).unwrap();
        let det = l.determinant();
        prop_assume!(det != 0.into());
        let disc = l.discriminant_group().unwrap();
        prop_assert_eq!(num_bigint::BigInt::from(disc.order()), det.magnitude().clone().into());
        let (p, q) = l.signature().unwrap();
        prop_assert_eq!(p + q, n);
    }
}

#[test]
fn cyclic_models_list_every_subgroup_once() {
    for n in 1..=36u64 {
        let pairs = subgroup_quotient_pairs(&AbelianGroup::cyclic(n), 128).unwrap();
        assert_eq!(pairs.len(), k3cr3::abelian::divisors(n).len());
    }
}

#[test]
fn basket_enumeration_is_schedule_independent() {
    let a = rr::enumerate_baskets(1, 1, Exec::Sequential).unwrap();
    let b = rr::enumerate_baskets(1, 1, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 5250);
}
