mod common;

use bialg::catalog::{self, NAMES};
use bialg::structures::{structural_flags, verify_structure};
use bialg::{
    build, monoid_semidirect_eval, verify_action, verify_split_extension, CatalogEntry, Fp,
};
use common::*;
use num_bigint::BigUint;

fn n(v: u64) -> BigUint {
    BigUint::from(v)
}

fn eval(l: (u64, u64), r: (u64, u64)) -> (BigUint, BigUint) {
    monoid_semidirect_eval((&n(l.0), &n(l.1)), (&n(r.0), &n(r.1))).unwrap()
}

#[test]
fn monoid_bracketings_disagree() {
    assert_eq!(eval((0, 2), (1, 1)), (n(1), n(2)));
    assert_eq!(eval((1, 2), (1, 1)), (n(2), n(2)));
    assert_eq!(eval((1, 1), (1, 1)), (n(2), n(1)));
    assert_eq!(eval((0, 2), (2, 1)), (n(4), n(2)));
}

#[test]
fn monoid_eval_is_exact_for_large_powers() {
    let (x, b) = eval((0, 100), (3, 1));
    assert_eq!(x, n(3).pow(100));
    assert_eq!(b, n(100));
}

#[test]
fn monoid_b_one_slice_is_associative() {
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                let (l0, l1) = eval((x, 1), (y, 1));
                let l0: u64 = l0.try_into().unwrap();
                let l1: u64 = l1.try_into().unwrap();
                let left = eval((l0, l1), (z, 1));
                let (r0, r1) = eval((y, 1), (z, 1));
                let right = eval((x, 1), (r0.try_into().unwrap(), r1.try_into().unwrap()));
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn every_name_builds_and_verifies() {
    for name in NAMES {
        match build::<Q>(name).unwrap() {
            CatalogEntry::Structure(s) => {
                let r = verify_structure(&s, catalog::declared_level(&s)).unwrap();
                assert!(r.all_passed(), "{name}");
            }
            CatalogEntry::Action(a) => assert!(verify_action(&a).unwrap().all_passed(), "{name}"),
            CatalogEntry::Extension(e) => {
                let r = verify_split_extension(&e, e.level()).unwrap();
                assert!(r.all_passed(), "{name}");
            }
        }
    }
}

#[test]
fn parametrised_names() {
    let e = build::<Q>("kC7").unwrap();
    assert_eq!(e.structure().unwrap().dim(), 7);
    let e = build::<Q>("trivial_action(kS3,kC2)").unwrap();
    let a = e.action().unwrap();
    assert_eq!((a.acted().dim(), a.acting().dim()), (6, 2));
    assert!(build::<Q>("no_such_entry").is_err());
}

#[test]
fn sweedler_rejects_characteristic_two() {
    assert!(build::<Fp<2>>("sweedler4").is_err());
    assert!(build::<Fp<3>>("sweedler4").is_ok());
}

#[test]
fn ks3_is_cocommutative_of_dimension_six() {
    let e = build::<Q>("kS3").unwrap();
    let s = e.structure().unwrap();
    assert_eq!(s.dim(), 6);
    let f = structural_flags(s).unwrap();
    assert!(f.associative && f.cocommutative);
    assert!(isomorphic_to_s3(s));
}
