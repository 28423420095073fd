use num_bigint::BigInt;
use num_traits::{One, Zero};
use pieri_core::oracle::{count_syt, gl_double_cosets_tiny};
use pieri_core::partitions::enumerate_partitions;
use pieri_core::rep_ring::{decompose_induced_sps, iota};
use pieri_core::tabloid::count_contingency_tables;
use pieri_core::{Basis, Group, Partition, RepRing, VirtualRep};
use proptest::prelude::*;

#[test]
fn basis_changes_are_inverse() {
    for n in 0..=8 {
        let ring = RepRing::new(n).unwrap();
        for d in enumerate_partitions(n).unwrap() {
            let y = VirtualRep::young(d.clone());
            let there = ring.to_irreducible_basis(&y).unwrap();
            assert_eq!(there.coefficient(&d), BigInt::one());
            assert!(there.terms().all(|(e, _)| e.dominates(&d).unwrap()));
            assert_eq!(ring.from_irreducible_basis(&there).unwrap(), y);

            let s = VirtualRep::sigma(d.clone());
            let back = ring.from_irreducible_basis(&s).unwrap();
            assert_eq!(back.coefficient(&d), BigInt::one());
            assert!(back.terms().all(|(e, _)| e.dominates(&d).unwrap()));
            assert_eq!(ring.to_irreducible_basis(&back).unwrap(), s);
        }
    }
}

#[test]
fn pairing_of_young_modules_counts_tables() {
    for n in 1..=7 {
        let ring = RepRing::new(n).unwrap();
        let all = enumerate_partitions(n).unwrap();
        for d in &all {
            for e in &all {
                let expected = BigInt::from(count_contingency_tables(d, e).unwrap());
                let sn = ring.intertwining_number(&VirtualRep::young(d.clone()), &VirtualRep::young(e.clone()));
                assert_eq!(sn.unwrap(), expected);
                let gl = ring.intertwining_number(&VirtualRep::induced(d.clone()), &VirtualRep::induced(e.clone()));
                assert_eq!(gl.unwrap(), expected);
            }
        }
    }
}

#[test]
fn bruhat_transfer_on_tiny_fields() {
    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        let ring = RepRing::new(n).unwrap();
        let all = enumerate_partitions(n).unwrap();
        for d in &all {
            for e in &all {
                let form = ring
                    .intertwining_number(&iota(&VirtualRep::young(d.clone())), &iota(&VirtualRep::young(e.clone())))
                    .unwrap();
                assert_eq!(form, BigInt::from(gl_double_cosets_tiny(n, p, d, e).unwrap()));
            }
        }
    }
}

#[test]
fn rho_sits_once_in_its_flag_module() {
    for n in 0..=8 {
        let ring = RepRing::new(n).unwrap();
        for d in enumerate_partitions(n).unwrap() {
            let pairing = ring.intertwining_number(&VirtualRep::rho(d.clone()), &VirtualRep::induced(d.clone()));
            assert_eq!(pairing.unwrap(), BigInt::one());
        }
    }
}

#[test]
fn rho_in_borel_induction_has_dimension_multiplicity() {
    for n in 1..=7 {
        let ring = RepRing::new(n).unwrap();
        let borel = VirtualRep::induced(Partition::column(n));
        for d in enumerate_partitions(n).unwrap() {
            let pairing = ring.intertwining_number(&VirtualRep::rho(d.clone()), &borel).unwrap();
            assert_eq!(pairing, BigInt::from(count_syt(&d).unwrap()));
        }
    }
}

#[test]
fn flag_module_by_repeated_induction() {
    for n in 0..=7 {
        let ring = RepRing::new(n).unwrap();
        for d in enumerate_partitions(n).unwrap() {
            // induce row by row: I_{(d_1)}, then add d_2 boxes, ...
            let mut current: Vec<(Partition, BigInt)> = vec![(Partition::empty(), BigInt::one())];
            let mut size = 0;
            for &row in d.parts() {
                size += row;
                let mut next = VirtualRep::zero(size, Group::FiniteGeneralLinear, Basis::Irreducible);
                for (shape, c) in &current {
                    for (e, m) in decompose_induced_sps(shape, size).unwrap().terms() {
                        next.add_term(e.clone(), c * m).unwrap();
                    }
                }
                current = next.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
            }
            let table = ring.decompose_flag_module(&d).unwrap();
            let recursive = VirtualRep::from_terms(n, Group::FiniteGeneralLinear, Basis::Irreducible, current).unwrap();
            assert_eq!(table, recursive, "D={d:?}");
            let young = ring.to_irreducible_basis(&VirtualRep::young(d.clone())).unwrap();
            assert_eq!(table, iota(&young));
        }
    }
}

#[test]
fn induced_sps_pairs_with_borel() {
    let v = decompose_induced_sps(&Partition::new(vec![1, 1]).unwrap(), 4).unwrap();
    let names: Vec<String> = v.terms().map(|(e, _)| e.to_string()).collect();
    assert_eq!(names, ["3,1", "2,1,1"]);
    assert_eq!(v.group(), Group::FiniteGeneralLinear);
}

fn arb_virtual(n: usize, group: Group) -> impl Strategy<Value = VirtualRep> {
    let all = enumerate_partitions(n).unwrap();
    let len = all.len();
    prop::collection::vec(-4i64..=4, len).prop_map(move |cs| {
        let terms = all.iter().cloned().zip(cs.into_iter().map(BigInt::from));
        VirtualRep::from_terms(n, group, Basis::Irreducible, terms).unwrap()
    })
}

fn arb_pair() -> impl Strategy<Value = (VirtualRep, VirtualRep, bool, bool)> {
    (1usize..=6).prop_flat_map(|n| {
        (arb_virtual(n, Group::SymmetricGroup), arb_virtual(n, Group::SymmetricGroup), any::<bool>(), any::<bool>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn iota_is_an_isometry((v, w, young_v, young_w) in arb_pair()) {
        let ring = RepRing::new(v.n()).unwrap();
        let v = if young_v { ring.from_irreducible_basis(&v).unwrap() } else { v };
        let w = if young_w { ring.from_irreducible_basis(&w).unwrap() } else { w };
        let before = ring.intertwining_number(&v, &w).unwrap();
        let after = ring.intertwining_number(&iota(&v), &iota(&w)).unwrap();
        prop_assert_eq!(before, after);
        let (vi, wi) = (ring.to_irreducible_basis(&v).unwrap(), ring.to_irreducible_basis(&w).unwrap());
        prop_assert_eq!(vi.le(&wi).unwrap(), iota(&vi).le(&iota(&wi)).unwrap());
    }

    #[test]
    fn form_is_symmetric_and_definite((v, w, young_v, _young_w) in arb_pair()) {
        let ring = RepRing::new(v.n()).unwrap();
        let v = if young_v { ring.from_irreducible_basis(&v).unwrap() } else { v };
        prop_assert_eq!(ring.intertwining_number(&v, &w).unwrap(), ring.intertwining_number(&w, &v).unwrap());
        let norm = ring.intertwining_number(&v, &v).unwrap();
        prop_assert!(norm >= BigInt::zero());
        prop_assert_eq!(norm.is_zero(), v.is_zero());
        let irreducible = ring.to_irreducible_basis(&v).unwrap();
        let single = irreducible.terms().count() == 1 && irreducible.terms().all(|(_, c)| c.magnitude().is_one());
        prop_assert_eq!(norm.is_one(), single);
    }
}

#[test]
fn genuine_elements_have_norm_one_only_when_irreducible() {
    for n in 1..=8 {
        let ring = RepRing::new(n).unwrap();
        for d in enumerate_partitions(n).unwrap() {
            let y = VirtualRep::young(d.clone());
            let norm = ring.intertwining_number(&y, &y).unwrap();
            let irr = ring.to_irreducible_basis(&y).unwrap();
            assert!(irr.is_genuine());
            assert_eq!(norm.is_one(), irr.terms().count() == 1);
        }
    }
}
