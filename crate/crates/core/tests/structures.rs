mod common;

use bialg::catalog::{self, groups, octonion_table, FANO};
use bialg::structures::{structural_flags, verify_structure, Flags, Level};
use bialg::{linearize_magma, Bialgebra, Fp, LinMap, Witness};
use common::*;

/// Elements of Sweedler's algebra as coefficient vectors over `1, g, x, gx`.
type V4 = [i64; 4];

fn sw_mul_basis(l: usize, r: usize) -> (usize, i64) {
    let (p1, q1, p2, q2) = (l % 2, l / 2, r % 2, r / 2);
    if q1 + q2 > 1 {
        return (0, 0);
    }
    let sign = if q1 == 1 && p2 == 1 { -1 } else { 1 };
    ((p1 + p2) % 2 + 2 * (q1 + q2), sign)
}

fn sw_mul(a: &V4, b: &V4) -> V4 {
    let mut out = [0; 4];
    for i in 0..4 {
        for j in 0..4 {
            let (k, s) = sw_mul_basis(i, j);
            out[k] += s * a[i] * b[j];
        }
    }
    out
}

/// `Δ` of a basis element as a 4×4 coefficient table.
fn sw_delta(i: usize) -> [[i64; 4]; 4] {
    let mut t = [[0; 4]; 4];
    match i {
        0 => t[0][0] = 1,
        1 => t[1][1] = 1,
        2 => {
            t[2][0] = 1;
            t[1][2] = 1;
        }
        _ => {
            t[3][1] = 1;
            t[0][3] = 1;
        }
    }
    t
}

fn sw_eps(i: usize) -> i64 {
    i64::from(i < 2)
}

fn sw_s(i: usize) -> V4 {
    match i {
        2 => [0, 0, 0, -1],
        3 => [0, 0, 1, 0],
        i => {
            let mut v = [0; 4];
            v[i] = 1;
            v
        }
    }
}

#[test]
fn sweedler_axioms_by_brute_force() {
    let basis = |i: usize| {
        let mut v = [0; 4];
        v[i] = 1;
        v
    };
    for i in 0..4 {
        // antipode: Σ S(a1) a2 = ε(a) 1 = Σ a1 S(a2)
        let d = sw_delta(i);
        let (mut left, mut right) = ([0; 4], [0; 4]);
        for a in 0..4 {
            for b in 0..4 {
                if d[a][b] != 0 {
                    let l = sw_mul(&sw_s(a), &basis(b));
                    let r = sw_mul(&basis(a), &sw_s(b));
                    for k in 0..4 {
                        left[k] += d[a][b] * l[k];
                        right[k] += d[a][b] * r[k];
                    }
                }
            }
        }
        assert_eq!(left, [sw_eps(i), 0, 0, 0]);
        assert_eq!(right, [sw_eps(i), 0, 0, 0]);
        for j in 0..4 {
            // Δ(ab) = Δ(a)Δ(b)
            let prod = sw_mul(&basis(i), &basis(j));
            let mut lhs = [[0i64; 4]; 4];
            for k in 0..4 {
                let dk = sw_delta(k);
                for a in 0..4 {
                    for b in 0..4 {
                        lhs[a][b] += prod[k] * dk[a][b];
                    }
                }
            }
            let (di, dj) = (sw_delta(i), sw_delta(j));
            let mut rhs = [[0i64; 4]; 4];
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        for e in 0..4 {
                            let coeff = di[a][b] * dj[c][e];
                            if coeff != 0 {
                                let (x, s1) = sw_mul_basis(a, c);
                                let (y, s2) = sw_mul_basis(b, e);
                                rhs[x][y] += coeff * s1 * s2;
                            }
                        }
                    }
                }
            }
            assert_eq!(lhs, rhs, "Δ({i}·{j})");
        }
    }
    let h = catalog::sweedler4::<Q>().unwrap();
    // the library's structure constants agree with the oracle
    for i in 0..4 {
        for j in 0..4 {
            let (k, s) = sw_mul_basis(i, j);
            let expected = if s == 0 { vec![] } else { vec![(k, q(s))] };
            assert_eq!(h.m().column(i * 4 + j), expected.as_slice());
        }
    }
    let r = verify_structure(&h, Level::Hopf).unwrap();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.len(), 14);
}

#[test]
fn sweedler_over_prime_fields() {
    let h = catalog::sweedler4::<Fp<3>>().unwrap();
    assert!(verify_structure(&h, Level::Hopf).unwrap().all_passed());
}

#[test]
fn flags_on_catalog() {
    let ks3 = catalog::ks3::<Q>().unwrap();
    assert_eq!(
        structural_flags(&ks3).unwrap(),
        Flags {
            associative: true,
            cocommutative: true
        }
    );
    let h = catalog::sweedler4::<Q>().unwrap();
    assert_eq!(
        structural_flags(&h).unwrap(),
        Flags {
            associative: true,
            cocommutative: false
        }
    );
    // σΔ(x) = 1⊗x + x⊗g differs from Δ(x) at the input x.
    let flipped = LinMap::symmetry(h.space(), h.space())
        .compose(h.delta())
        .unwrap();
    let d = flipped.first_difference(h.delta()).unwrap().unwrap();
    assert_eq!(d.col, 2);
    let o = catalog::octonion_loop::<Q>().unwrap();
    assert_eq!(
        structural_flags(&o).unwrap(),
        Flags {
            associative: false,
            cocommutative: true
        }
    );
}

fn oct_unit(k: usize) -> usize {
    2 * k
}

#[test]
fn octonion_table_follows_fano_lines() {
    let t = octonion_table();
    let minus = |i: usize| i ^ 1;
    for k in 1..8 {
        assert_eq!(t.mul(oct_unit(k), oct_unit(k)), 1, "e{k}² = -1");
    }
    for (a, b, c) in FANO {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            assert_eq!(t.mul(oct_unit(x), oct_unit(y)), oct_unit(z));
            assert_eq!(t.mul(oct_unit(y), oct_unit(x)), minus(oct_unit(z)));
        }
    }
    // (e1 e2) e3 = -(e1 (e2 e3))
    let l = t.mul(t.mul(oct_unit(1), oct_unit(2)), oct_unit(3));
    let r = t.mul(oct_unit(1), t.mul(oct_unit(2), oct_unit(3)));
    assert_eq!(l, minus(r));
    // Moufang: z(x(zy)) = ((zx)z)y
    for x in 0..16 {
        for y in 0..16 {
            for z in 0..16 {
                assert_eq!(
                    t.mul(z, t.mul(x, t.mul(z, y))),
                    t.mul(t.mul(t.mul(z, x), z), y)
                );
            }
        }
    }
}

#[test]
fn octonion_loop_is_non_associative_hopf() {
    let o: Bialgebra<Q> = catalog::octonion_loop().unwrap();
    assert_eq!(o.dim(), 16);
    let r = verify_structure(&o, Level::Hopf).unwrap();
    assert!(r.all_passed(), "{r}");
    let s = o.antipodes().unwrap();
    assert_eq!(s.left, s.right);
}

#[test]
fn small_groups_are_hopf() {
    for g in groups::small_groups() {
        let a: Bialgebra<Q> = linearize_magma(&g).unwrap();
        let r = verify_structure(&a, Level::Hopf).unwrap();
        assert!(r.all_passed(), "{}: {r}", g.name);
        let s = a.antipodes().unwrap();
        assert_eq!(s.left, s.right);
        let f: Bialgebra<Fp<7>> = linearize_magma(&g).unwrap();
        assert!(verify_structure(&f, Level::Hopf).unwrap().all_passed());
    }
}

#[test]
fn catalog_structures_pass_at_declared_level() {
    for name in ["kC2", "kC3", "kC5", "kS3", "sweedler4", "octonion_loop"] {
        let e = catalog::build::<Q>(name).unwrap();
        let s = e.structure().unwrap();
        let r = verify_structure(s, catalog::declared_level(s)).unwrap();
        assert!(r.all_passed(), "{name}");
    }
}

#[test]
fn every_single_constant_mutation_of_kc2_is_caught() {
    let a = catalog::kc::<Q>(2).unwrap();
    let maps = [a.m(), a.u(), a.delta(), a.eps()];
    for (which, f) in maps.iter().enumerate() {
        for row in 0..f.nrows() {
            for col in 0..f.ncols() {
                let bumped = f.entry(row, col) + q(1);
                let g = f.with_entry(row, col, bumped).unwrap();
                let mut parts: [Option<LinMap<Q>>; 4] = Default::default();
                parts[which] = Some(g);
                let [m, u, d, e] = parts;
                let broken = a.with_maps(m, u, d, e).unwrap();
                let r = verify_structure(&broken, Level::Hopf).unwrap();
                let fail = r
                    .failures()
                    .next()
                    .unwrap_or_else(|| panic!("map {which} ({row},{col})"));
                assert!(matches!(fail.witness(), Some(Witness::Entry { .. })));
            }
        }
    }
}

#[test]
fn verification_is_deterministic() {
    let a = catalog::kc::<Q>(2).unwrap();
    let eps = a.eps().with_entry(0, 1, q(0)).unwrap();
    let broken = a.with_maps(None, None, None, Some(eps)).unwrap();
    let r1 = verify_structure(&broken, Level::Hopf).unwrap();
    let r2 = verify_structure(&broken, Level::Hopf).unwrap();
    assert_eq!(r1, r2);
    assert!(!r1.all_passed());
}

#[test]
fn kc2_table_oracle() {
    let a = catalog::kc::<Q>(2).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(basis_product(&a, i, j), (i + j) % 2);
        }
    }
}
