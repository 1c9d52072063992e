mod common;

use bialg::actions::{ACTION_CHECKS, HOPF_ACTION_CHECKS};
use bialg::catalog::{self, kc};
use bialg::extensions::EXTENSION_CHECKS;
use bialg::structures::{is_cocommutative, verify_structure, Level};
use bialg::{
    build_theta, semidirect, verify_action, verify_assoc_conditions, verify_hopf_action,
    verify_split_extension, verify_theta_identities, ActionData, Witness,
};
use common::*;

fn pow5(x: usize, e: usize) -> usize {
    (0..e).fold(1, |acc, _| acc * x % 5)
}

/// `m((x,b),(y,c)) = (x + y^b, bc)` on `C₅ × {1,2,3,4}` with `b, c` as integers.
fn pow_product(l: (usize, usize), r: (usize, usize)) -> (usize, usize) {
    ((l.0 + pow5(r.0, l.1)) % 5, l.1 * r.1 % 5)
}

#[test]
fn c2_inversion_matches_enumeration() {
    let a = catalog::c2_inv_c3_action::<Q>().unwrap();
    for b in 0..2 {
        for x in 0..3 {
            let col = a.act().column(b * 3 + x);
            let expected = if b == 0 { x } else { (3 - x) % 3 };
            assert_eq!(col, [(expected, q(1))]);
        }
    }
    assert!(verify_hopf_action(&a).unwrap().all_passed());
    let r = verify_assoc_conditions(&a).unwrap();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.len(), 3);
}

#[test]
fn c4_pow_c5_fails_module_associativity_at_expected_witness() {
    let a = catalog::c4_pow_c5_action::<Q>().unwrap();
    assert!(verify_action(&a).unwrap().all_passed());
    let r = verify_hopf_action(&a).unwrap();
    let check = r.get(HOPF_ACTION_CHECKS[0]).unwrap();
    match check.witness().unwrap() {
        Witness::Entry { domain, input, .. } => {
            assert_eq!(input, "2⊗3⊗2");
            assert_eq!(domain, &vec![1, 2, 2]);
        }
        w => panic!("unexpected witness {w:?}"),
    }
    // ▷(2, ▷(3, 2)) = 4 while ▷(2·3, 2) = 2.
    assert_eq!(pow5(pow5(2, 3), 2), 4);
    assert_eq!(pow5(2, 2 * 3 % 5), 2);
}

#[test]
fn c4_pow_c5_semidirect_is_not_associative() {
    let a = catalog::c4_pow_c5_action::<Q>().unwrap();
    let r = verify_assoc_conditions(&a).unwrap();
    assert!(r.failed(HOPF_ACTION_CHECKS[0]));
    assert!(r.failed(HOPF_ACTION_CHECKS[1]));
    assert!(r.failed("semidirect_associative"));
    let Some(Witness::Entry { domain, .. }) = r.get("semidirect_associative").unwrap().witness()
    else {
        panic!("entry witness expected");
    };
    // domain = (x, b, y, c, z, d) with b, c, d indexing {1,2,3,4}
    let el = |i: usize| (domain[2 * i], domain[2 * i + 1] + 1);
    let (p, s, t) = (el(0), el(1), el(2));
    assert_ne!(
        pow_product(pow_product(p, s), t),
        pow_product(p, pow_product(s, t))
    );

    let mut failures = 0;
    for i in 0..20 {
        for j in 0..20 {
            for k in 0..20 {
                let e = |n: usize| (n / 4, n % 4 + 1);
                let (p, s, t) = (e(i), e(j), e(k));
                if pow_product(pow_product(p, s), t) != pow_product(p, pow_product(s, t)) {
                    failures += 1;
                }
            }
        }
    }
    assert!(failures > 0);
}

#[test]
fn assoc_conditions_iff_semidirect_associative() {
    let mut actions = catalog_actions();
    for (_, a) in random_actions(5, 6) {
        actions.push(("random", a));
    }
    for (name, a) in actions {
        let r = verify_assoc_conditions(&a).unwrap();
        let conditions = r.passed(HOPF_ACTION_CHECKS[0]) && r.passed(HOPF_ACTION_CHECKS[1]);
        assert_eq!(conditions, r.passed("semidirect_associative"), "{name}");
    }
}

#[test]
fn theta_on_group_likes() {
    let a = catalog::c2_inv_c3_action::<Q>().unwrap();
    let t = build_theta(&a).unwrap();
    for b in 0..2 {
        for x in 0..3 {
            let image = if b == 0 { x } else { (3 - x) % 3 };
            assert_eq!(t.map.column(b * 3 + x), [(image * 2 + b, q(1))]);
        }
    }
}

#[test]
fn theta_identities_fail_for_c4_pow_c5() {
    let a = catalog::c4_pow_c5_action::<Q>().unwrap();
    let r = verify_theta_identities(&build_theta(&a).unwrap()).unwrap();
    assert!(r.failed("theta_multiplication_b"), "{r}");
    assert!(r.passed("theta_unit_b") && r.passed("theta_unit_x"));
}

#[test]
fn theta_identities_on_hopf_actions() {
    for (name, a) in catalog_actions() {
        if a.is_hopf() && verify_hopf_action(&a).unwrap().all_passed() {
            let r = verify_theta_identities(&build_theta(&a).unwrap()).unwrap();
            assert!(r.all_passed(), "{name}: {r}");
        }
    }
}

#[test]
fn semidirect_passes_bialgebra_verification() {
    let mut actions = catalog_actions();
    for (_, a) in random_actions(9, 6) {
        actions.push(("random", a));
    }
    for (name, a) in actions {
        assert!(verify_action(&a).unwrap().all_passed());
        let (sd, _) = semidirect(&a).unwrap();
        let r = verify_structure(&sd.carrier, Level::Bialgebra).unwrap();
        assert!(r.all_passed(), "{name}: {r}");
        if sd.carrier.is_hopf() {
            assert!(
                verify_structure(&sd.carrier, Level::Hopf)
                    .unwrap()
                    .all_passed(),
                "{name}"
            );
        }
    }
}

#[test]
fn cocommutative_coco_is_automatic() {
    for (name, a) in catalog_actions() {
        if !(is_cocommutative(a.acting()).unwrap() && is_cocommutative(a.acted()).unwrap()) {
            continue;
        }
        let r = verify_action(&a).unwrap();
        let others = ACTION_CHECKS
            .iter()
            .filter(|c| **c != "coco")
            .all(|c| r.passed(c));
        if others {
            assert!(r.passed("coco"), "{name}");
        }
        let (_, ext) = semidirect(&a).unwrap();
        let r = verify_split_extension(&ext, Level::Bialgebra).unwrap();
        let others = EXTENSION_CHECKS
            .iter()
            .filter(|c| **c != "coco")
            .all(|c| r.passed(c));
        if others {
            assert!(r.passed("coco"), "{name}");
        }
    }
}

#[test]
fn non_action_is_rejected_by_semidirect() {
    let (b, x) = (kc::<Q>(2).unwrap(), kc::<Q>(3).unwrap());
    // b ↦ shift by b is not unit-preserving on X.
    let a = action_from(b, x, |b, x| (x + b) % 3);
    assert!(verify_action(&a).unwrap().failed("acts_on_unit"));
    assert!(semidirect(&a).is_err());
}

#[test]
fn trivial_action_on_sweedler_is_hopf() {
    let a = ActionData::trivial(kc::<Q>(2).unwrap(), catalog::sweedler4().unwrap()).unwrap();
    let r = verify_hopf_action(&a).unwrap();
    assert!(r.all_passed(), "{r}");
}
