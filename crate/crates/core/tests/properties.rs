mod common;

use bialg::catalog::{groups, kc};
use bialg::structures::{verify_structure, Level};
use bialg::{
    chain, equalizer, invert, linearize_magma, quotient, rank, tensor, Bialgebra, Field, Fp,
    LinMap, Space,
};
use common::*;
use proptest::prelude::*;

type F7 = Fp<7>;

fn space(name: &str, dim: usize) -> Space {
    Space::numbered(name, dim)
}

fn matrix<K: Field>(dom: &Space, cod: &Space, values: &[i64]) -> LinMap<K> {
    let rows: Vec<Vec<K>> = (0..cod.dim())
        .map(|r| {
            (0..dom.dim())
                .map(|c| K::from_i64(values[r * dom.dim() + c]))
                .collect()
        })
        .collect();
    LinMap::from_dense(dom.clone(), cod.clone(), &rows).unwrap()
}

fn entries(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

/// Dimensions and entries for three composable maps `U → V → W → Z`.
fn composable() -> impl Strategy<Value = ([usize; 4], Vec<i64>, Vec<i64>, Vec<i64>)> {
    prop::array::uniform4(1usize..=3).prop_flat_map(|d| {
        (
            Just(d),
            entries(d[0] * d[1]),
            entries(d[1] * d[2]),
            entries(d[2] * d[3]),
        )
    })
}

fn square(n: usize) -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (1..=n).prop_flat_map(|d| (Just(d), entries(d * d), entries(d * d)))
}

/// Transports the structure of `a` along an invertible `p : A → A`.
fn transport<K: Field>(a: &Bialgebra<K>, p: &LinMap<K>) -> Bialgebra<K> {
    let pi = invert(p).unwrap();
    let m = chain(&[p, a.m(), &tensor(&pi, &pi)]).unwrap();
    let u = p.compose(a.u()).unwrap();
    let d = chain(&[&tensor(p, p), a.delta(), &pi]).unwrap();
    let e = a.eps().compose(&pi).unwrap();
    let b = Bialgebra::new("transported", a.space().clone(), m, u, d, e).unwrap();
    match a.antipodes() {
        Some(s) => b
            .with_antipodes(
                chain(&[p, &s.left, &pi]).unwrap(),
                chain(&[p, &s.right, &pi]).unwrap(),
            )
            .unwrap(),
        None => b,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative((d, f, g, h) in composable()) {
        let s: Vec<Space> = d.iter().enumerate().map(|(i, &n)| space(&format!("S{i}"), n)).collect();
        let f: LinMap<F7> = matrix(&s[0], &s[1], &f);
        let g = matrix(&s[1], &s[2], &g);
        let h = matrix(&s[2], &s[3], &h);
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral((d, f, _, _) in composable()) {
        let (a, b) = (space("A", d[0]), space("B", d[1]));
        let f: LinMap<Q> = matrix(&a, &b, &f);
        prop_assert_eq!(LinMap::identity(&b).compose(&f).unwrap(), f.clone());
        prop_assert_eq!(f.compose(&LinMap::identity(&a)).unwrap(), f);
    }

    #[test]
    fn tensor_is_associative((d, f, g, h) in composable()) {
        let s: Vec<Space> = d.iter().enumerate().map(|(i, &n)| space(&format!("S{i}"), n)).collect();
        let f: LinMap<F7> = matrix(&s[0], &s[1], &f);
        let g = matrix(&s[1], &s[2], &g);
        let h = matrix(&s[2], &s[3], &h);
        prop_assert_eq!(tensor(&tensor(&f, &g), &h), tensor(&f, &tensor(&g, &h)));
    }

    #[test]
    fn tensor_is_bilinear((n, f, g) in square(3), h in entries(9), c in -3i64..=3) {
        let a = space("A", n);
        let b = space("B", 3);
        let f: LinMap<Q> = matrix(&a, &a, &f);
        let g = matrix(&a, &a, &g);
        let h = matrix(&b, &b, &h);
        let c = Q::from_i64(c);
        prop_assert_eq!(
            tensor(&f.add(&g).unwrap(), &h),
            tensor(&f, &h).add(&tensor(&g, &h)).unwrap()
        );
        prop_assert_eq!(tensor(&f.scale(&c), &h), tensor(&f, &h.scale(&c)));
    }

    #[test]
    fn tensor_is_functorial((n, f, g) in square(3), (k, h, j) in square(2)) {
        let (a, b) = (space("A", n), space("B", k));
        let f: LinMap<F7> = matrix(&a, &a, &f);
        let g = matrix(&a, &a, &g);
        let h = matrix(&b, &b, &h);
        let j = matrix(&b, &b, &j);
        prop_assert_eq!(
            tensor(&f, &h).compose(&tensor(&g, &j)).unwrap(),
            tensor(&f.compose(&g).unwrap(), &h.compose(&j).unwrap())
        );
    }

    #[test]
    fn symmetry_is_natural_and_involutive((d, f, g, _) in composable()) {
        let s: Vec<Space> = d.iter().enumerate().map(|(i, &n)| space(&format!("S{i}"), n)).collect();
        let f: LinMap<Q> = matrix(&s[0], &s[1], &f);
        let g = matrix(&s[1], &s[2], &g);
        let left = LinMap::symmetry(&s[1], &s[2]).compose(&tensor(&f, &g)).unwrap();
        let right = tensor(&g, &f).compose(&LinMap::symmetry(&s[0], &s[1])).unwrap();
        prop_assert_eq!(left, right);
        let twice = LinMap::<Q>::symmetry(&s[1], &s[0])
            .compose(&LinMap::symmetry(&s[0], &s[1]))
            .unwrap();
        prop_assert_eq!(twice, LinMap::identity(&s[0].tensor(&s[1])));
    }

    #[test]
    fn equalizer_is_the_largest_agreeing_subspace((n, f, g) in square(4)) {
        let a = space("A", n);
        let f: LinMap<F7> = matrix(&a, &a, &f);
        let g = matrix(&a, &a, &g);
        let e = equalizer(&f, &g).unwrap();
        prop_assert_eq!(f.compose(e.basis()).unwrap(), g.compose(e.basis()).unwrap());
        prop_assert_eq!(e.dim(), n - rank(&f.sub(&g).unwrap()));
    }

    #[test]
    fn quotient_projection_kills_subspace((n, f, _) in square(4)) {
        let a = space("A", n);
        let f: LinMap<Q> = matrix(&a, &a, &f);
        let u = bialg::Subspace::image(&f);
        let (qs, proj) = quotient(&u).unwrap();
        prop_assert_eq!(qs.dim(), n - u.dim());
        prop_assert!(proj.compose(u.basis()).unwrap().is_zero());
        prop_assert_eq!(rank(&proj), qs.dim());
    }

    #[test]
    fn inverse_is_two_sided((n, f, _) in square(4)) {
        let a = space("A", n);
        let f: LinMap<F7> = matrix(&a, &a, &f);
        match invert(&f) {
            Ok(g) => {
                prop_assert_eq!(f.compose(&g).unwrap(), LinMap::identity(&a));
                prop_assert_eq!(g.compose(&f).unwrap(), LinMap::identity(&a));
            }
            Err(_) => prop_assert!(rank(&f) < n),
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn counit_identity_holds_for_coalgebras(which in 0usize..4, perturb in entries(9)) {
        let a = kc::<Q>(3).unwrap();
        let p: LinMap<Q> = matrix(a.space(), a.space(), &perturb);
        let p = if rank(&p) == 3 { p } else { LinMap::identity(a.space()) };
        let t = transport(&a, &p);
        // a perturbed counit usually breaks the coalgebra; the identity is checked only when it passes
        let t = if which == 0 {
            t.with_maps(None, None, None, Some(t.eps().with_entry(0, 1, Q::from_i64(perturb[0])).unwrap()))
                .unwrap()
        } else {
            t
        };
        if verify_structure(&t, Level::Coalgebra).unwrap().all_passed() {
            let id = LinMap::identity(t.space());
            let left = chain(&[&tensor(t.eps(), &id), t.delta()]).unwrap();
            let right = chain(&[&tensor(&id, t.eps()), t.delta()]).unwrap();
            prop_assert_eq!(left.reshaped(t.space().clone(), t.space().clone()).unwrap(), id.clone());
            prop_assert_eq!(right.reshaped(t.space().clone(), t.space().clone()).unwrap(), id);
        }
    }

    #[test]
    fn associative_hopf_antipodes_coincide(index in 0usize..14, perturb in entries(64)) {
        let g = &groups::small_groups()[index];
        let a: Bialgebra<F7> = linearize_magma(g).unwrap();
        let n = a.dim();
        let values: Vec<i64> = (0..n * n).map(|i| perturb[i % 64]).collect();
        let p: LinMap<F7> = matrix(a.space(), a.space(), &values);
        let p = if rank(&p) == n { p } else { LinMap::identity(a.space()) };
        let t = transport(&a, &p);
        let r = verify_structure(&t, Level::Hopf).unwrap();
        prop_assert!(r.all_passed());
        let s = t.antipodes().unwrap();
        prop_assert_eq!(&s.left, &s.right);
    }
}
