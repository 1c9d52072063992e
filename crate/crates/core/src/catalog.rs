//! Named, verified instances: group algebras, the Sweedler algebra, the octonion
//! loop, group-like actions, split extensions, and the pointwise monoid example.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::actions::{verify_action, ActionData};
use crate::error::{Error, Result};
use crate::extensions::{verify_split_extension, SplitExtension};
use crate::field::Field;
use crate::linmap::LinMap;
use crate::report::Report;
use crate::space::Space;
use crate::structures::{
    natural_level, trivial_bialgebra, verify_morphism, verify_structure, Bialgebra, Level,
    MagmaTable,
};

/// Cayley tables of small groups.
pub mod groups {
    use crate::structures::MagmaTable;

    fn inverses(table: &[Vec<usize>], unit: usize) -> Vec<usize> {
        let n = table.len();
        (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == unit)
                    .expect("group element has an inverse")
            })
            .collect()
    }

    /// Completes a table with its two-sided inverses.
    pub fn group(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> MagmaTable {
        let inv = inverses(&table, 0);
        MagmaTable::new(name, labels, table, 0).with_inverses(inv.clone(), inv)
    }

    /// `C_n` written additively with labels `0..n`.
    pub fn cyclic(n: usize) -> MagmaTable {
        assert!(n > 0);
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        group(&format!("C{n}"), labels, table)
    }

    /// The dihedral group of order `2n`; element `s^j r^i` sits at index `j·n + i`.
    pub fn dihedral(n: usize) -> MagmaTable {
        assert!(n > 0);
        let label = |j: usize, i: usize| match (j, i) {
            (0, 0) => "e".to_string(),
            (0, 1) => "r".to_string(),
            (0, i) => format!("r{i}"),
            (_, 0) => "s".to_string(),
            (_, 1) => "sr".to_string(),
            (_, i) => format!("sr{i}"),
        };
        let labels = (0..2 * n).map(|k| label(k / n, k % n)).collect();
        let table = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let (j, i, k, l) = (a / n, a % n, b / n, b % n);
                        // s^j r^i s^k r^l = s^(j+k) r^((-1)^k i + l)
                        let twisted = if k == 0 { i } else { (n - i) % n };
                        ((j + k) % 2) * n + (twisted + l) % n
                    })
                    .collect()
            })
            .collect();
        group(&format!("D{n}"), labels, table)
    }

    /// `S_3` as the dihedral group of order 6, labels `e, r, r2, s, sr, sr2`.
    pub fn symmetric3() -> MagmaTable {
        let mut t = dihedral(3);
        t.name = "S3".into();
        t
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> MagmaTable {
        let names = ["1", "i", "j", "k"];
        let labels = (0..8)
            .map(|x| {
                let sign = if x % 2 == 0 { "" } else { "-" };
                format!("{sign}{}", names[x / 2])
            })
            .collect();
        // Products of units: (unit index, negated).
        let unit = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, neg) = unit(a / 2, b / 2);
                        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                        2 * u + usize::from(sign)
                    })
                    .collect()
            })
            .collect();
        group("Q8", labels, table)
    }

    /// Componentwise product; element `(a, b)` sits at `a·|B| + b`.
    pub fn direct_product(a: &MagmaTable, b: &MagmaTable) -> MagmaTable {
        let (n, m) = (a.order(), b.order());
        let labels = (0..n * m)
            .map(|k| format!("({},{})", a.labels[k / m], b.labels[k % m]))
            .collect();
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| a.table[x / m][y / m] * m + b.table[x % m][y % m])
                    .collect()
            })
            .collect();
        group(&format!("{}x{}", a.name, b.name), labels, table)
    }

    /// Every group of order at most 8, up to isomorphism.
    pub fn small_groups() -> Vec<MagmaTable> {
        let mut out: Vec<MagmaTable> = (1..=8).map(cyclic).collect();
        out.push(direct_product(&cyclic(2), &cyclic(2)));
        out.push(symmetric3());
        out.push(direct_product(&cyclic(2), &cyclic(4)));
        out.push(direct_product(
            &direct_product(&cyclic(2), &cyclic(2)),
            &cyclic(2),
        ));
        out.push(dihedral(4));
        out.push(quaternion());
        out
    }
}

/// A verified catalog instance.
#[derive(Clone, Debug)]
pub enum CatalogEntry<K: Field> {
    Structure(Bialgebra<K>),
    Action(ActionData<K>),
    Extension(SplitExtension<K>),
}

impl<K: Field> CatalogEntry<K> {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogEntry::Structure(s) if s.is_hopf() => "hopf",
            CatalogEntry::Structure(_) => "bialgebra",
            CatalogEntry::Action(_) => "action",
            CatalogEntry::Extension(_) => "extension",
        }
    }

    pub fn structure(&self) -> Option<&Bialgebra<K>> {
        match self {
            CatalogEntry::Structure(s) => Some(s),
            _ => None,
        }
    }

    pub fn action(&self) -> Option<&ActionData<K>> {
        match self {
            CatalogEntry::Action(a) => Some(a),
            _ => None,
        }
    }

    pub fn extension(&self) -> Option<&SplitExtension<K>> {
        match self {
            CatalogEntry::Extension(e) => Some(e),
            _ => None,
        }
    }
}

/// One concrete name per catalog family, for enumeration.
pub const NAMES: &[&str] = &[
    "kC2",
    "kC3",
    "kC5",
    "kS3",
    "sweedler4",
    "octonion_loop",
    "trivial_action(kC3,kC2)",
    "c2_inv_c3_action",
    "c4_pow_c5_action",
    "gamma_extension(kS3)",
    "gamma_extension(kC3,inv)",
    "ks3_sign_extension",
];

fn one<K: Field>() -> K {
    K::one()
}

pub fn kc<K: Field>(n: usize) -> Result<Bialgebra<K>> {
    if n == 0 {
        return Err(Error::UnknownEntry("kC0".into()));
    }
    Ok(groups::cyclic(n)
        .linearize::<K>()?
        .renamed(format!("kC{n}")))
}

pub fn ks3<K: Field>() -> Result<Bialgebra<K>> {
    Ok(groups::symmetric3().linearize::<K>()?.renamed("kS3"))
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx`.
pub fn sweedler4<K: Field>() -> Result<Bialgebra<K>> {
    let p = K::spec().characteristic();
    if p == 2 {
        return Err(Error::Characteristic {
            name: "sweedler4".into(),
            characteristic: p,
        });
    }
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let a = Space::new("H4", labels);
    let aa = a.tensor(&a);
    // basis element g^p x^q at index p + 2q
    let m = LinMap::from_basis_images(aa.clone(), a.clone(), |c| {
        let (l, r) = (c / 4, c % 4);
        let (p1, q1, p2, q2) = (l % 2, l / 2, r % 2, r / 2);
        if q1 + q2 > 1 {
            return vec![];
        }
        let sign = if q1 * p2 == 1 { -one::<K>() } else { one() };
        vec![((p1 + p2) % 2 + 2 * (q1 + q2), sign)]
    })?;
    let u = LinMap::from_triplets(Space::unit(), a.clone(), [(0, 0, one())])?;
    let t = |i: usize, j: usize| i * 4 + j;
    let delta = LinMap::from_basis_images(a.clone(), aa, |c| match c {
        0 => vec![(t(0, 0), one())],
        1 => vec![(t(1, 1), one())],
        2 => vec![(t(2, 0), one()), (t(1, 2), one())],
        _ => vec![(t(3, 1), one()), (t(0, 3), one())],
    })?;
    let eps = LinMap::from_triplets(a.clone(), Space::unit(), [(0, 0, one()), (0, 1, one())])?;
    let s = LinMap::from_basis_images(a.clone(), a.clone(), |c| match c {
        2 => vec![(3, -one::<K>())],
        3 => vec![(2, one())],
        c => vec![(c, one())],
    })?;
    Bialgebra::new("H4", a, m, u, delta, eps)?.with_antipode(s)
}

/// The Fano-plane triples `e_a e_b = e_c`.
pub const FANO: [(usize, usize, usize); 7] = [
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 7),
    (5, 6, 1),
    (6, 7, 2),
    (7, 1, 3),
];

/// The octonion loop `{±1, ±e₁, …, ±e₇}`; `±e_k` sits at `2k` and `2k+1` with `e₀ = 1`.
pub fn octonion_table() -> MagmaTable {
    let unit = |a: usize, b: usize| -> (usize, bool) {
        if a == 0 || b == 0 {
            return (a + b, false);
        }
        if a == b {
            return (0, true);
        }
        for &(x, y, z) in &FANO {
            for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                if (a, b) == (p, q) {
                    return (r, false);
                }
                if (a, b) == (q, p) {
                    return (r, true);
                }
            }
        }
        unreachable!("every pair of distinct imaginary units lies on one line")
    };
    let labels = (0..16)
        .map(|k| {
            let sign = if k % 2 == 0 { "" } else { "-" };
            let base = if k / 2 == 0 {
                "1".to_string()
            } else {
                format!("e{}", k / 2)
            };
            format!("{sign}{base}")
        })
        .collect();
    let table = (0..16)
        .map(|a| {
            (0..16)
                .map(|b| {
                    let (u, neg) = unit(a / 2, b / 2);
                    2 * u + usize::from((a % 2 == 1) ^ (b % 2 == 1) ^ neg)
                })
                .collect()
        })
        .collect();
    let conj: Vec<usize> = (0..16).map(|k| if k < 2 { k } else { k ^ 1 }).collect();
    MagmaTable::new("O16", labels, table, 0).with_inverses(conj.clone(), conj)
}

pub fn octonion_loop<K: Field>() -> Result<Bialgebra<K>> {
    octonion_table().linearize()
}

/// `{1, 2, 3, 4}` under multiplication mod 5.
pub fn units_mod5<K: Field>() -> Result<Bialgebra<K>> {
    let labels = (1..=4).map(|i| i.to_string()).collect();
    let table = (1..=4usize)
        .map(|a| (1..=4usize).map(|b| (a * b) % 5 - 1).collect())
        .collect();
    Ok(groups::group("U5", labels, table)
        .linearize::<K>()?
        .renamed("kU5"))
}

/// A group-like action built from a function on element indices.
pub fn group_like_action<K: Field>(
    b: Bialgebra<K>,
    x: Bialgebra<K>,
    f: impl Fn(usize, usize) -> usize,
) -> Result<ActionData<K>> {
    let n = x.dim();
    let act = LinMap::from_basis_images(b.space().tensor(x.space()), x.space().clone(), |c| {
        vec![(f(c / n, c % n), one())]
    })?;
    ActionData::new(b, x, act)
}

fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    (0..exp).fold(1 % modulus, |acc, _| acc * base % modulus)
}

/// `C_n` acting on `kC_m` by `x ↦ u^b·x`. Requires `u` to be a unit mod `m` with `u^n ≡ 1`.
pub fn cyclic_unit_action<K: Field>(n: usize, m: usize, u: usize) -> Result<ActionData<K>> {
    if n == 0 || m == 0 || u.gcd(&m) != 1 || pow_mod(u, n, m) != 1 % m {
        return Err(Error::InvalidTable(format!(
            "{u} does not define an action of C{n} on C{m}"
        )));
    }
    group_like_action(kc(n)?, kc(m)?, |b, x| pow_mod(u, b, m) * x % m)
}

/// `C₂` acting on `kC₃` by inversion.
pub fn c2_inv_c3_action<K: Field>() -> Result<ActionData<K>> {
    cyclic_unit_action(2, 3, 2)
}

/// `{1,2,3,4} ⊂ (ℤ/5)^×` acting on additive `C₅` by `x ↦ x^b mod 5`.
pub fn c4_pow_c5_action<K: Field>() -> Result<ActionData<K>> {
    group_like_action(units_mod5()?, kc(5)?, |b, x| pow_mod(x, b + 1, 5))
}

/// `kC₃ → kS₃ ⇄ kC₂` with `κ(k) = r^k`, `α` the sign, `e(1) = s`, and
/// `λ(σ) = σ·e(α(σ))⁻¹`.
pub fn ks3_sign_extension<K: Field>() -> Result<SplitExtension<K>> {
    let (x, a, b) = (kc::<K>(3)?, ks3::<K>()?, kc::<K>(2)?);
    let kappa =
        LinMap::from_basis_images(x.space().clone(), a.space().clone(), |k| vec![(k, one())])?;
    let alpha = LinMap::from_basis_images(a.space().clone(), b.space().clone(), |c| {
        vec![(c / 3, one())]
    })?;
    let e = LinMap::from_basis_images(b.space().clone(), a.space().clone(), |g| {
        vec![(3 * g, one())]
    })?;
    // s^j r^i · s^-j = r^((-1)^j i)
    let lambda = LinMap::from_basis_images(a.space().clone(), x.space().clone(), |c| {
        let (j, i) = (c / 3, c % 3);
        vec![(if j == 0 { i } else { (3 - i) % 3 }, one())]
    })?;
    SplitExtension::new(x, a, b, kappa, alpha, e, lambda)
}

/// `I → A ⇄ A` with `α = γ`, `e = γ⁻¹`, `κ = u_A`, `λ = ε_A`, for a Hopf automorphism `γ`.
pub fn gamma_extension<K: Field>(a: Bialgebra<K>, gamma: LinMap<K>) -> Result<SplitExtension<K>> {
    let inv = crate::linalg::invert(&gamma)?;
    let r = verify_morphism(&gamma, &a, &a, natural_level(&a))?;
    if !r.all_passed() {
        return Err(Error::VerificationFailed {
            what: "γ".into(),
            report: r,
        });
    }
    let i = trivial_bialgebra::<K>();
    let (kappa, lambda) = (a.u().clone(), a.eps().clone());
    SplitExtension::new(i, a.clone(), a, kappa, gamma, inv, lambda)
}

/// The group inversion as a linear map on a group algebra.
fn inversion_map<K: Field>(a: &Bialgebra<K>) -> Result<LinMap<K>> {
    match a.s_left() {
        Some(s) => Ok(s.clone()),
        None => Err(Error::NotHopf {
            what: a.name().to_string(),
        }),
    }
}

fn split_call(name: &str) -> Option<(&str, Vec<&str>)> {
    let open = name.find('(')?;
    let inner = name.strip_suffix(')')?.get(open + 1..)?;
    Some((&name[..open], inner.split(',').map(str::trim).collect()))
}

fn build_structure<K: Field>(name: &str) -> Result<Bialgebra<K>> {
    match build::<K>(name)? {
        CatalogEntry::Structure(s) => Ok(s),
        _ => Err(Error::UnknownEntry(format!("{name} is not a structure"))),
    }
}

/// Builds and verifies a named entry. Structures are checked at their natural
/// level, actions with the action conditions, extensions at their natural level.
pub fn build<K: Field>(name: &str) -> Result<CatalogEntry<K>> {
    let entry = match name {
        "kC2" => CatalogEntry::Structure(kc(2)?),
        "kC3" => CatalogEntry::Structure(kc(3)?),
        "kS3" => CatalogEntry::Structure(ks3()?),
        "sweedler4" => CatalogEntry::Structure(sweedler4()?),
        "octonion_loop" => CatalogEntry::Structure(octonion_loop()?),
        "c2_inv_c3_action" => CatalogEntry::Action(c2_inv_c3_action()?),
        "c4_pow_c5_action" => CatalogEntry::Action(c4_pow_c5_action()?),
        "ks3_sign_extension" => CatalogEntry::Extension(ks3_sign_extension()?),
        other => {
            if let Some(n) = other
                .strip_prefix("kC")
                .and_then(|n| n.parse::<usize>().ok())
            {
                CatalogEntry::Structure(kc(n)?)
            } else {
                match split_call(other) {
                    Some(("kCn", args)) if args.len() == 1 => {
                        let n = args[0]
                            .parse()
                            .map_err(|_| Error::UnknownEntry(other.to_string()))?;
                        CatalogEntry::Structure(kc(n)?)
                    }
                    Some(("trivial_action", args)) if args.len() == 2 => {
                        let x = build_structure::<K>(args[0])?;
                        let b = build_structure::<K>(args[1])?;
                        CatalogEntry::Action(ActionData::trivial(b, x)?)
                    }
                    Some(("gamma_extension", args)) if (1..=2).contains(&args.len()) => {
                        let a = build_structure::<K>(args[0])?;
                        let gamma = match args.get(1).copied().unwrap_or("id") {
                            "id" => a.id(),
                            "inv" => inversion_map(&a)?,
                            g => return Err(Error::UnknownEntry(format!("automorphism {g}"))),
                        };
                        CatalogEntry::Extension(gamma_extension(a, gamma)?)
                    }
                    _ => return Err(Error::UnknownEntry(other.to_string())),
                }
            }
        }
    };
    let report = verify_entry(&entry)?;
    if !report.all_passed() {
        return Err(Error::VerificationFailed {
            what: name.to_string(),
            report,
        });
    }
    Ok(entry)
}

/// The verification suite an entry must pass.
pub fn verify_entry<K: Field>(entry: &CatalogEntry<K>) -> Result<Report> {
    match entry {
        CatalogEntry::Structure(s) => verify_structure(s, natural_level(s)),
        CatalogEntry::Action(a) => verify_action(a),
        CatalogEntry::Extension(e) => verify_split_extension(e, e.level()),
    }
}

/// The declared level of a structure entry.
pub fn declared_level<K: Field>(s: &Bialgebra<K>) -> Level {
    natural_level(s)
}

/// `m((x,b),(y,c)) = (x + y^b, b·c)` on `(ℕ,+)` and `(ℕ₀,·)`, evaluated exactly.
pub fn monoid_semidirect_eval(
    (x, b): (&BigUint, &BigUint),
    (y, c): (&BigUint, &BigUint),
) -> Result<(BigUint, BigUint)> {
    let power = if y.is_zero() || y.is_one() {
        if b.is_zero() {
            BigUint::one()
        } else {
            y.clone()
        }
    } else {
        let e = b
            .to_u32()
            .ok_or_else(|| Error::Inconsistent(format!("exponent {b} too large")))?;
        y.pow(e)
    };
    Ok((x + power, b * c))
}
