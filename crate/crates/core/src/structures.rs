//! Bialgebras and Hopf algebras by structure constants, and the axiom checker.
//!
//! Multiplication need not be associative; comultiplication is always required
//! to be coassociative. A Hopf structure carries a left and a right antipode.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linmap::{chain, LinMap};
use crate::report::Report;
use crate::space::Space;

/// Which axioms to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Coalgebra,
    Algebra,
    Bialgebra,
    Hopf,
}

impl Level {
    fn includes_coalgebra(self) -> bool {
        self != Level::Algebra
    }

    fn includes_algebra(self) -> bool {
        self != Level::Coalgebra
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "coalgebra" => Ok(Level::Coalgebra),
            "algebra" => Ok(Level::Algebra),
            "bialgebra" => Ok(Level::Bialgebra),
            "hopf" => Ok(Level::Hopf),
            other => Err(format!("unknown level `{other}`")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::Coalgebra => "coalgebra",
            Level::Algebra => "algebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipodes<K: Field> {
    pub left: LinMap<K>,
    pub right: LinMap<K>,
}

/// A (possibly non-associative) bialgebra, optionally with antipodes.
///
/// The carrier may be a tensor word (a semidirect product lives on `X⊗B`), in
/// which case `m` has domain `X⊗B⊗X⊗B` and so on.
#[derive(Clone, Debug)]
pub struct Bialgebra<K: Field> {
    name: String,
    space: Space,
    m: LinMap<K>,
    u: LinMap<K>,
    delta: LinMap<K>,
    eps: LinMap<K>,
    antipodes: Option<Antipodes<K>>,
}

fn expect_shape<K: Field>(
    what: &'static str,
    f: &LinMap<K>,
    domain: &Space,
    codomain: &Space,
) -> Result<()> {
    if f.domain().same_shape(domain) && f.codomain().same_shape(codomain) {
        Ok(())
    } else {
        Err(Error::ShapeMismatch {
            op: what,
            left: format!("{domain} → {codomain}"),
            right: format!("{} → {}", f.domain(), f.codomain()),
        })
    }
}

impl<K: Field> Bialgebra<K> {
    pub fn new(
        name: impl Into<String>,
        space: Space,
        m: LinMap<K>,
        u: LinMap<K>,
        delta: LinMap<K>,
        eps: LinMap<K>,
    ) -> Result<Self> {
        let aa = space.tensor(&space);
        let i = Space::unit();
        expect_shape("multiplication", &m, &aa, &space)?;
        expect_shape("unit", &u, &i, &space)?;
        expect_shape("comultiplication", &delta, &space, &aa)?;
        expect_shape("counit", &eps, &space, &i)?;
        Ok(Bialgebra {
            name: name.into(),
            space,
            m,
            u,
            delta,
            eps,
            antipodes: None,
        })
    }

    /// Attaches a single antipode. Only allowed when the multiplication is
    /// associative, where the antipode is unique and serves as both `S_L` and `S_R`.
    pub fn with_antipode(self, s: LinMap<K>) -> Result<Self> {
        if !self.flags()?.associative {
            return Err(Error::AntipodesRequired);
        }
        self.with_antipodes(s.clone(), s)
    }

    pub fn with_antipodes(mut self, left: LinMap<K>, right: LinMap<K>) -> Result<Self> {
        expect_shape("left antipode", &left, &self.space, &self.space)?;
        expect_shape("right antipode", &right, &self.space, &self.space)?;
        self.antipodes = Some(Antipodes { left, right });
        Ok(self)
    }

    pub fn without_antipodes(mut self) -> Self {
        self.antipodes = None;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn m(&self) -> &LinMap<K> {
        &self.m
    }

    pub fn u(&self) -> &LinMap<K> {
        &self.u
    }

    pub fn delta(&self) -> &LinMap<K> {
        &self.delta
    }

    pub fn eps(&self) -> &LinMap<K> {
        &self.eps
    }

    pub fn antipodes(&self) -> Option<&Antipodes<K>> {
        self.antipodes.as_ref()
    }

    pub fn is_hopf(&self) -> bool {
        self.antipodes.is_some()
    }

    pub fn s_left(&self) -> Option<&LinMap<K>> {
        self.antipodes.as_ref().map(|a| &a.left)
    }

    pub fn s_right(&self) -> Option<&LinMap<K>> {
        self.antipodes.as_ref().map(|a| &a.right)
    }

    pub(crate) fn require_hopf(&self, what: &str) -> Result<&Antipodes<K>> {
        self.antipodes.as_ref().ok_or_else(|| Error::NotHopf {
            what: format!("{what} ({})", self.name),
        })
    }

    pub fn id(&self) -> LinMap<K> {
        LinMap::identity(&self.space)
    }

    /// `u·ε: A → A`.
    pub fn unit_counit(&self) -> LinMap<K> {
        self.u.compose(&self.eps).expect("u and ε compose")
    }

    /// Replaces one structure map; used to build counterexamples.
    pub fn with_maps(
        &self,
        m: Option<LinMap<K>>,
        u: Option<LinMap<K>>,
        delta: Option<LinMap<K>>,
        eps: Option<LinMap<K>>,
    ) -> Result<Self> {
        let mut out = Bialgebra::new(
            self.name.clone(),
            self.space.clone(),
            m.unwrap_or_else(|| self.m.clone()),
            u.unwrap_or_else(|| self.u.clone()),
            delta.unwrap_or_else(|| self.delta.clone()),
            eps.unwrap_or_else(|| self.eps.clone()),
        )?;
        out.antipodes = self.antipodes.clone();
        Ok(out)
    }

    pub fn flags(&self) -> Result<Flags> {
        structural_flags(self)
    }
}

/// `(associative, cocommutative)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub associative: bool,
    pub cocommutative: bool,
}

pub fn structural_flags<K: Field>(a: &Bialgebra<K>) -> Result<Flags> {
    Ok(Flags {
        associative: is_associative(a)?,
        cocommutative: is_cocommutative(a)?,
    })
}

/// `m·(m⊗1) = m·(1⊗m)`.
pub fn is_associative<K: Field>(a: &Bialgebra<K>) -> Result<bool> {
    let (lhs, rhs) = associativity_sides(a)?;
    Ok(lhs == rhs)
}

pub(crate) fn associativity_sides<K: Field>(a: &Bialgebra<K>) -> Result<(LinMap<K>, LinMap<K>)> {
    let id = a.id();
    let lhs = chain(&[&a.m, &a.m.tensor(&id)])?;
    let rhs = chain(&[&a.m, &id.tensor(&a.m)])?;
    Ok((lhs, rhs))
}

/// `σ_{A,A}·Δ = Δ`.
pub fn is_cocommutative<K: Field>(a: &Bialgebra<K>) -> Result<bool> {
    let flipped = LinMap::symmetry(&a.space, &a.space).compose(&a.delta)?;
    Ok(flipped == a.delta)
}

/// Checks the axioms up to `level`.
///
/// Check names: `coassociativity`, `counit` (coalgebra); `unit` (algebra);
/// `comultiplication_multiplicative`, `comultiplication_unit`,
/// `counit_multiplicative`, `counit_unit` (bialgebra); `left_antipode`,
/// `right_antipode`, the anti-(co)multiplicativity of each antipode, and
/// `antipodes_preserve_unit_counit` (hopf). Coalgebra and algebra levels are
/// independent of each other; bialgebra includes both; hopf includes everything.
pub fn verify_structure<K: Field>(a: &Bialgebra<K>, level: Level) -> Result<Report> {
    let mut r = Report::new();
    let sp = &a.space;
    let id = a.id();
    let (m, u, delta, eps) = (&a.m, &a.u, &a.delta, &a.eps);

    if level.includes_coalgebra() {
        r.equal(
            "coassociativity",
            &chain(&[&delta.tensor(&id), delta])?,
            &chain(&[&id.tensor(delta), delta])?,
        )?;
        r.all_equal(
            "counit",
            &[
                (&chain(&[&eps.tensor(&id), delta])?, &id),
                (&chain(&[&id.tensor(eps), delta])?, &id),
            ],
        )?;
    }
    if level.includes_algebra() {
        r.all_equal(
            "unit",
            &[
                (&chain(&[m, &u.tensor(&id)])?, &id),
                (&chain(&[m, &id.tensor(u)])?, &id),
            ],
        )?;
    }
    if level >= Level::Bialgebra {
        let middle = id.tensor(&LinMap::symmetry(sp, sp)).tensor(&id);
        r.equal(
            "comultiplication_multiplicative",
            &delta.compose(m)?,
            &chain(&[&m.tensor(m), &middle, &delta.tensor(delta)])?,
        )?;
        r.equal("comultiplication_unit", &delta.compose(u)?, &u.tensor(u))?;
        r.equal("counit_multiplicative", &eps.compose(m)?, &eps.tensor(eps))?;
        r.equal(
            "counit_unit",
            &eps.compose(u)?,
            &LinMap::identity(&Space::unit()),
        )?;
    }
    if level == Level::Hopf {
        let s = a.require_hopf("hopf-level verification")?;
        let ue = a.unit_counit();
        let sigma = LinMap::symmetry(sp, sp);
        r.equal(
            "left_antipode",
            &chain(&[m, &s.left.tensor(&id), delta])?,
            &ue,
        )?;
        r.equal(
            "right_antipode",
            &chain(&[m, &id.tensor(&s.right), delta])?,
            &ue,
        )?;
        for (side, anti) in [("left", &s.left), ("right", &s.right)] {
            r.equal(
                format!("{side}_antipode_antimultiplicative"),
                &anti.compose(m)?,
                &chain(&[m, &anti.tensor(anti), &sigma])?,
            )?;
        }
        for (side, anti) in [("left", &s.left), ("right", &s.right)] {
            r.equal(
                format!("{side}_antipode_anticomultiplicative"),
                &delta.compose(anti)?,
                &chain(&[&anti.tensor(anti), &sigma, delta])?,
            )?;
        }
        r.all_equal(
            "antipodes_preserve_unit_counit",
            &[
                (&s.left.compose(u)?, u),
                (&s.right.compose(u)?, u),
                (&eps.compose(&s.left)?, eps),
                (&eps.compose(&s.right)?, eps),
            ],
        )?;
    }
    Ok(r)
}

/// The highest level a structure can be checked at: hopf when antipodes are present.
pub fn natural_level<K: Field>(a: &Bialgebra<K>) -> Level {
    if a.is_hopf() {
        Level::Hopf
    } else {
        Level::Bialgebra
    }
}

/// Checks that `f: src → tgt` is a morphism at `level`.
///
/// Hopf morphisms must preserve both antipodes, in addition to being bialgebra maps.
pub fn verify_morphism<K: Field>(
    f: &LinMap<K>,
    src: &Bialgebra<K>,
    tgt: &Bialgebra<K>,
    level: Level,
) -> Result<Report> {
    if !f.domain().same_shape(src.space()) || !f.codomain().same_shape(tgt.space()) {
        return Err(Error::ShapeMismatch {
            op: "morphism",
            left: format!("{} → {}", src.space(), tgt.space()),
            right: format!("{} → {}", f.domain(), f.codomain()),
        });
    }
    let mut r = Report::new();
    if level.includes_algebra() {
        r.equal(
            "preserves_multiplication",
            &f.compose(src.m())?,
            &tgt.m().compose(&f.tensor(f))?,
        )?;
        r.equal("preserves_unit", &f.compose(src.u())?, tgt.u())?;
    }
    if level.includes_coalgebra() {
        r.equal(
            "preserves_comultiplication",
            &tgt.delta().compose(f)?,
            &f.tensor(f).compose(src.delta())?,
        )?;
        r.equal("preserves_counit", &tgt.eps().compose(f)?, src.eps())?;
    }
    if level == Level::Hopf {
        let s = src.require_hopf("Hopf morphism source")?;
        let t = tgt.require_hopf("Hopf morphism target")?;
        r.equal(
            "preserves_left_antipode",
            &f.compose(&s.left)?,
            &t.left.compose(f)?,
        )?;
        r.equal(
            "preserves_right_antipode",
            &f.compose(&s.right)?,
            &t.right.compose(f)?,
        )?;
    }
    Ok(r)
}

/// A finite unital magma given by its Cayley table, with optional one-sided inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagmaTable {
    pub name: String,
    pub labels: Vec<String>,
    /// `table[i][j]` is the index of `labels[i] · labels[j]`.
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
    pub left_inverse: Option<Vec<usize>>,
    pub right_inverse: Option<Vec<usize>>,
}

impl MagmaTable {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        unit: usize,
    ) -> Self {
        MagmaTable {
            name: name.into(),
            labels,
            table,
            unit,
            left_inverse: None,
            right_inverse: None,
        }
    }

    pub fn with_inverses(mut self, left: Vec<usize>, right: Vec<usize>) -> Self {
        self.left_inverse = Some(left);
        self.right_inverse = Some(right);
        self
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTable(format!("table is not {n}×{n}")));
        }
        if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.table[i][j] >= n)
        {
            return Err(Error::InvalidTable(format!(
                "entry ({i}, {j}) = {} is out of range",
                self.table[i][j]
            )));
        }
        if self.unit >= n {
            return Err(Error::InvalidTable(format!(
                "unit index {} out of range",
                self.unit
            )));
        }
        if let Some(x) =
            (0..n).find(|&x| self.table[self.unit][x] != x || self.table[x][self.unit] != x)
        {
            return Err(Error::InvalidTable(format!(
                "{} is not a two-sided unit (fails at {})",
                self.labels[self.unit], self.labels[x]
            )));
        }
        for (side, inv) in [("left", &self.left_inverse), ("right", &self.right_inverse)] {
            let Some(inv) = inv else { continue };
            if inv.len() != n || inv.iter().any(|&i| i >= n) {
                return Err(Error::InvalidTable(format!(
                    "{side} inverse table has wrong shape"
                )));
            }
            for x in 0..n {
                let prod = if side == "left" {
                    self.table[inv[x]][x]
                } else {
                    self.table[x][inv[x]]
                };
                if prod != self.unit {
                    return Err(Error::InverseViolation {
                        element: x,
                        detail: format!(
                            "{side} inverse {} of {} multiplies to {}",
                            self.labels[inv[x]], self.labels[x], self.labels[prod]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// The linearization `k[M]`: basis = elements, all elements group-like.
    pub fn linearize<K: Field>(&self) -> Result<Bialgebra<K>> {
        linearize_magma(self)
    }
}

/// Builds `k[M]` from a magma table: `m` from the table, `Δ(x) = x⊗x`, `ε(x) = 1`.
/// With both inverse tables supplied the result is Hopf with `S_L(x) = x⁻¹_L`,
/// `S_R(x) = x⁻¹_R`; with one, the magma must be associative.
pub fn linearize_magma<K: Field>(t: &MagmaTable) -> Result<Bialgebra<K>> {
    t.validate()?;
    let n = t.order();
    let a = Space::new(t.name.clone(), t.labels.clone());
    let aa = a.tensor(&a);
    let one = K::one;
    let m = LinMap::from_basis_images(aa.clone(), a.clone(), |c| {
        vec![(t.table[c / n][c % n], one())]
    })?;
    let u = LinMap::from_triplets(Space::unit(), a.clone(), [(t.unit, 0, one())])?;
    let delta = LinMap::from_basis_images(a.clone(), aa, |x| vec![(x * n + x, one())])?;
    let eps = LinMap::from_basis_images(a.clone(), Space::unit(), |_| vec![(0, one())])?;
    let b = Bialgebra::new(t.name.clone(), a.clone(), m, u, delta, eps)?;
    let perm =
        |inv: &[usize]| LinMap::from_basis_images(a.clone(), a.clone(), |x| vec![(inv[x], one())]);
    match (&t.left_inverse, &t.right_inverse) {
        (Some(l), Some(r)) => b.with_antipodes(perm(l)?, perm(r)?),
        (Some(s), None) | (None, Some(s)) => b.with_antipode(perm(s)?),
        (None, None) => Ok(b),
    }
}

/// The one-dimensional Hopf algebra on `I`; the zero object.
pub fn trivial_bialgebra<K: Field>() -> Bialgebra<K> {
    let i = Space::unit();
    let id = LinMap::identity(&i);
    Bialgebra::new("I", i, id.clone(), id.clone(), id.clone(), id.clone())
        .and_then(|b| b.with_antipodes(id.clone(), id))
        .expect("unit object maps have matching shapes")
}
