mod support;

use proptest::prelude::*;
use purecone_core::exactcore::GF2Poly;
use purecone_core::groupring::{
    ann_component_basis, build_f, gr_mul, syzygy_basis, GradedComponent, GroupRingElement, Subset,
};
use support::{check_groupring, poly2_from_mask, syzygy_dim_direct};

fn generators(m: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..64, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn two_generators(a in generators(2), aux in prop::collection::vec(0u8..64, 8)) {
        if let Err(msg) = check_groupring(&a, &aux, 3) {
            prop_assert!(false, "{}", msg);
        }
    }

    #[test]
    fn three_generators(a in generators(3), aux in prop::collection::vec(0u8..64, 8)) {
        if let Err(msg) = check_groupring(&a, &aux, 3) {
            prop_assert!(false, "{}", msg);
        }
    }
}

#[test]
fn subsets_order_by_size_then_lex() {
    let all: Vec<Subset> = (0..=3).flat_map(|r| Subset::of_size(3, r)).collect();
    let mut sorted = all.clone();
    sorted.sort();
    assert_eq!(all, sorted);
    assert_eq!(Subset::of_size(3, 2).iter().map(|s| s.elements()).collect::<Vec<_>>(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    assert_eq!(Subset::from_elements(&[1, 2]).to_string(), "e1*e2");
}

#[test]
fn koszul_pair() {
    let x = GF2Poly::var(2, 0);
    let y = GF2Poly::var(2, 1);
    let a = [x.clone(), y.clone()];
    let syz = syzygy_basis(&a, 1).unwrap();
    assert_eq!(syz, vec![vec![y.clone(), x.clone()]]);
    let ann = ann_component_basis(&a, 1, 1).unwrap();
    assert_eq!(ann.len(), 1);
    let f = build_f(&a).unwrap();
    assert!(gr_mul(&ann[0], &f).unwrap().is_zero());
    assert!(gr_mul(&f, &f).unwrap().is_zero());
    for bound in 0..5 {
        let a2 = [poly2_from_mask(0b10), poly2_from_mask(0b100)];
        assert_eq!(syzygy_basis(&a, bound).unwrap().len(), syzygy_dim_direct(&a2, bound));
        assert_eq!(syzygy_dim_direct(&a2, bound), (bound * (bound + 1) / 2) as usize);
    }
}

#[test]
fn graded_components_validate() {
    let e = GroupRingElement::epsilon(3, 2, 0);
    assert!(GradedComponent::new(1, e.clone()).is_ok());
    assert!(GradedComponent::new(2, e.clone()).is_err());
    let w = GroupRingElement::w(3, 2);
    assert_eq!(w.homogeneous_degree(), Some(3));
    assert!(gr_mul(&w, &e).unwrap().is_zero());
    let mixed = e.checked_add(&w).unwrap();
    assert_eq!(mixed.homogeneous_degree(), None);
    assert_eq!(mixed.component(3).element(), &w);
}
