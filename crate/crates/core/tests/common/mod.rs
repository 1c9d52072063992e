#![allow(dead_code)]

use bialg::catalog::{self, cyclic_unit_action, group_like_action, kc};
use bialg::{ActionData, Bialgebra, Field, LinMap, MorphismTriple, Rational, SplitExtension};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Q = Rational;

pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn order_mod(u: usize, m: usize) -> usize {
    let mut x = u % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * u % m;
        k += 1;
    }
    k
}

/// Parameters `(n, m, u)` of a group-like action of `C_n` on `C_m` by `x ↦ u^b x`,
/// with `n·m ≤ 20` so the semidirect product stays small.
pub fn random_action_params(rng: &mut StdRng) -> (usize, usize, usize) {
    loop {
        let m = rng.gen_range(2..=5);
        let u = rng.gen_range(1..m);
        if gcd(u, m) != 1 {
            continue;
        }
        let ord = order_mod(u, m);
        let n = ord * rng.gen_range(1..=2);
        if n * m <= 20 {
            return (n, m, u);
        }
    }
}

pub fn random_actions(seed: u64, count: usize) -> Vec<((usize, usize, usize), ActionData<Q>)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p = random_action_params(&mut rng);
            (p, cyclic_unit_action(p.0, p.1, p.2).unwrap())
        })
        .collect()
}

/// A morphism from the semidirect extension of `x ↦ u^b x` to itself:
/// `v(x) = w·x`, `g(b) = t·b` with `t ≡ 1 mod ord(u)`, `p = v⊗g`.
pub fn random_triple(rng: &mut StdRng) -> (MorphismTriple<Q>, (usize, usize, usize, usize, usize)) {
    let (n, m, u) = random_action_params(rng);
    let ord = order_mod(u, m);
    let w = loop {
        let w = rng.gen_range(1..m.max(2));
        if gcd(w, m) == 1 {
            break w;
        }
    };
    let ts: Vec<usize> = (1..=n)
        .filter(|&t| gcd(t, n) == 1 && t % ord == 1 % ord)
        .collect();
    let t = ts[rng.gen_range(0..ts.len())];
    let act = cyclic_unit_action::<Q>(n, m, u).unwrap();
    let (_, ext) = bialg::semidirect(&act).unwrap();
    let v = perm(ext.x.space(), |x| w * x % m);
    let g = perm(ext.b.space(), |b| t * b % n);
    let p = v.tensor(&g);
    let triple = MorphismTriple {
        source: ext.clone(),
        target: ext,
        g,
        v,
        p,
    };
    (triple, (n, m, u, w, t))
}

pub fn perm(space: &bialg::Space, f: impl Fn(usize) -> usize) -> LinMap<Q> {
    LinMap::from_basis_images(space.clone(), space.clone(), |i| vec![(f(i), q(1))]).unwrap()
}

/// The product of two basis elements of a group algebra, read off `m`.
pub fn basis_product<K: Field>(a: &Bialgebra<K>, i: usize, j: usize) -> usize {
    let col = a.m().column(i * a.dim() + j);
    assert_eq!(col.len(), 1, "product of group-likes is a basis element");
    assert!(col[0].1.is_one());
    col[0].0
}

/// `S_3` as permutations of `{0,1,2}` composed as functions: `(p∘q)(i) = p(q(i))`.
pub fn s3_permutations() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn compose_perm(p: &[usize; 3], q: &[usize; 3]) -> [usize; 3] {
    [p[q[0]], p[q[1]], p[q[2]]]
}

/// Whether some bijection of bases carries the multiplication of `a` onto the
/// permutation-composition table of `S_3`.
pub fn isomorphic_to_s3<K: Field>(a: &Bialgebra<K>) -> bool {
    if a.dim() != 6 {
        return false;
    }
    let perms = s3_permutations();
    let target = |x: usize, y: usize| {
        let c = compose_perm(&perms[x], &perms[y]);
        perms.iter().position(|p| *p == c).unwrap()
    };
    let mut images: Vec<usize> = (0..6).collect();
    loop {
        let ok = (0..6).all(|i| {
            (0..6).all(|j| images[basis_product(a, i, j)] == target(images[i], images[j]))
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut images) {
            return false;
        }
    }
}

pub fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn catalog_actions() -> Vec<(&'static str, ActionData<Q>)> {
    vec![
        (
            "trivial_action(kC3,kC2)",
            ActionData::trivial(kc(2).unwrap(), kc(3).unwrap()).unwrap(),
        ),
        ("c2_inv_c3_action", catalog::c2_inv_c3_action().unwrap()),
        ("c4_pow_c5_action", catalog::c4_pow_c5_action().unwrap()),
        (
            "trivial_action(kS3,kC2)",
            ActionData::trivial(kc(2).unwrap(), catalog::ks3().unwrap()).unwrap(),
        ),
        (
            "trivial_action(sweedler4,kC2)",
            ActionData::trivial(kc(2).unwrap(), catalog::sweedler4().unwrap()).unwrap(),
        ),
    ]
}

pub fn catalog_extensions() -> Vec<(&'static str, SplitExtension<Q>)> {
    let ks3 = catalog::ks3::<Q>().unwrap();
    let c3 = kc::<Q>(3).unwrap();
    let inv = c3.s_left().unwrap().clone();
    vec![
        ("ks3_sign_extension", catalog::ks3_sign_extension().unwrap()),
        (
            "gamma_extension(kS3)",
            catalog::gamma_extension(ks3.clone(), ks3.id()).unwrap(),
        ),
        (
            "gamma_extension(kC3,inv)",
            catalog::gamma_extension(c3, inv).unwrap(),
        ),
        (
            "semidirect(c2_inv_c3_action)",
            bialg::semidirect(&catalog::c2_inv_c3_action::<Q>().unwrap())
                .unwrap()
                .1,
        ),
    ]
}

/// A group-like action of `B` on `X` from element-index arithmetic.
pub fn action_from(
    b: Bialgebra<Q>,
    x: Bialgebra<Q>,
    f: impl Fn(usize, usize) -> usize,
) -> ActionData<Q> {
    group_like_action(b, x, f).unwrap()
}
