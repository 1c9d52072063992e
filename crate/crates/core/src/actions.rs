//! Actions of bialgebras and Hopf algebras, the Θ map, and the semidirect
//! multiplication with its associativity criterion.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linmap::{chain, tensor_all, LinMap};
use crate::report::Report;
use crate::space::Space;
use crate::structures::{associativity_sides, Bialgebra};

/// `▷: B⊗X → X`, with `B` acting on `X`.
#[derive(Clone, Debug)]
pub struct ActionData<K: Field> {
    acting: Bialgebra<K>,
    acted: Bialgebra<K>,
    act: LinMap<K>,
}

impl<K: Field> ActionData<K> {
    pub fn new(acting: Bialgebra<K>, acted: Bialgebra<K>, act: LinMap<K>) -> Result<Self> {
        let domain = acting.space().tensor(acted.space());
        if !act.domain().same_shape(&domain) || !act.codomain().same_shape(acted.space()) {
            return Err(Error::ShapeMismatch {
                op: "action",
                left: format!("{domain} → {}", acted.space()),
                right: format!("{} → {}", act.domain(), act.codomain()),
            });
        }
        Ok(ActionData { acting, acted, act })
    }

    /// `ε_B ⊗ 1_X`.
    pub fn trivial(acting: Bialgebra<K>, acted: Bialgebra<K>) -> Result<Self> {
        let act = acting.eps().tensor(&acted.id());
        Self::new(acting, acted, act)
    }

    /// The acting structure `B`.
    pub fn acting(&self) -> &Bialgebra<K> {
        &self.acting
    }

    /// The acted-on structure `X`.
    pub fn acted(&self) -> &Bialgebra<K> {
        &self.acted
    }

    pub fn act(&self) -> &LinMap<K> {
        &self.act
    }

    pub fn with_act(&self, act: LinMap<K>) -> Result<Self> {
        Self::new(self.acting.clone(), self.acted.clone(), act)
    }

    pub fn is_hopf(&self) -> bool {
        self.acting.is_hopf() && self.acted.is_hopf()
    }

    fn sigma_bx(&self) -> LinMap<K> {
        LinMap::symmetry(self.acting.space(), self.acted.space())
    }
}

pub const ACTION_CHECKS: [&str; 5] = [
    "unit_acts_trivially",
    "acts_on_unit",
    "coco",
    "counit_compatible",
    "comultiplication_compatible",
];

pub const HOPF_ACTION_CHECKS: [&str; 4] = [
    "module_associativity",
    "module_algebra",
    "left_antipode_equivariant",
    "right_antipode_condition",
];

/// The five defining conditions of an action of bialgebras.
pub fn verify_action<K: Field>(a: &ActionData<K>) -> Result<Report> {
    let (b, x, act) = (&a.acting, &a.acted, &a.act);
    let (ib, ix) = (b.id(), x.id());
    let mut r = Report::new();
    r.equal(ACTION_CHECKS[0], &act.compose(&b.u().tensor(&ix))?, &ix)?;
    r.equal(
        ACTION_CHECKS[1],
        &act.compose(&ib.tensor(x.u()))?,
        &x.u().compose(b.eps())?,
    )?;
    let spread = b.delta().tensor(&ix);
    let lift = ib.tensor(act);
    let sigma_bb = LinMap::symmetry(b.space(), b.space()).tensor(&ix);
    r.equal(
        ACTION_CHECKS[2],
        &lift.compose(&spread)?,
        &chain(&[&lift, &sigma_bb, &spread])?,
    )?;
    r.equal(
        ACTION_CHECKS[3],
        &x.eps().compose(act)?,
        &b.eps().tensor(x.eps()),
    )?;
    let middle = tensor_all(&[&ib, &a.sigma_bx(), &ix]);
    r.equal(
        ACTION_CHECKS[4],
        &x.delta().compose(act)?,
        &chain(&[&act.tensor(act), &middle, &b.delta().tensor(x.delta())])?,
    )?;
    Ok(r)
}

/// Module associativity and the module-algebra law, shared by the Hopf action
/// and associativity criteria.
fn module_checks<K: Field>(a: &ActionData<K>, r: &mut Report) -> Result<()> {
    let (b, x, act) = (&a.acting, &a.acted, &a.act);
    let (ib, ix) = (b.id(), x.id());
    r.equal(
        HOPF_ACTION_CHECKS[0],
        &act.compose(&ib.tensor(act))?,
        &act.compose(&b.m().tensor(&ix))?,
    )?;
    let middle = tensor_all(&[&ib, &a.sigma_bx(), &ix]);
    r.equal(
        HOPF_ACTION_CHECKS[1],
        &act.compose(&ib.tensor(x.m()))?,
        &chain(&[
            x.m(),
            &act.tensor(act),
            &middle,
            &tensor_all(&[b.delta(), &ix, &ix]),
        ])?,
    )?;
    Ok(())
}

/// The action conditions followed by the four Hopf conditions. When the base
/// layer fails, the Hopf layer is reported as skipped.
pub fn verify_hopf_action<K: Field>(a: &ActionData<K>) -> Result<Report> {
    let sb = a.acting.require_hopf("acting structure of a Hopf action")?;
    let sx = a.acted.require_hopf("acted structure of a Hopf action")?;
    let mut r = verify_action(a)?;
    if !r.all_passed() {
        for name in HOPF_ACTION_CHECKS {
            r.skip(name, "bialgebra action conditions fail");
        }
        return Ok(r);
    }
    module_checks(a, &mut r)?;
    let (b, x, act) = (&a.acting, &a.acted, &a.act);
    let ix = x.id();
    r.equal(
        HOPF_ACTION_CHECKS[2],
        &act.compose(&b.id().tensor(&sx.left))?,
        &sx.left.compose(act)?,
    )?;
    r.equal(
        HOPF_ACTION_CHECKS[3],
        &chain(&[
            act,
            &sb.right.tensor(&sx.right),
            &b.id().tensor(act),
            &b.delta().tensor(&ix),
        ])?,
        &b.eps().tensor(&sx.right),
    )?;
    Ok(r)
}

/// `Θ = (▷⊗1_B)·(1_B⊗σ_{B,X})·(Δ⊗1_X): B⊗X → X⊗B`.
#[derive(Clone, Debug)]
pub struct ThetaMap<K: Field> {
    pub map: LinMap<K>,
    pub source: ActionData<K>,
}

pub fn build_theta<K: Field>(a: &ActionData<K>) -> Result<ThetaMap<K>> {
    let (b, x) = (&a.acting, &a.acted);
    let map = chain(&[
        &a.act.tensor(&b.id()),
        &b.id().tensor(&a.sigma_bx()),
        &b.delta().tensor(&x.id()),
    ])?;
    Ok(ThetaMap {
        map,
        source: a.clone(),
    })
}

/// The four compatibilities of `Θ` with the units and multiplications of `X` and `B`.
pub fn verify_theta_identities<K: Field>(t: &ThetaMap<K>) -> Result<Report> {
    let (b, x) = (&t.source.acting, &t.source.acted);
    let (ib, ix) = (b.id(), x.id());
    let th = &t.map;
    let mut r = Report::new();
    r.equal(
        "theta_multiplication_x",
        &chain(&[&x.m().tensor(&ib), &ix.tensor(th), &th.tensor(&ix)])?,
        &th.compose(&ib.tensor(x.m()))?,
    )?;
    r.equal(
        "theta_unit_b",
        &th.compose(&b.u().tensor(&ix))?,
        &ix.tensor(b.u()),
    )?;
    r.equal(
        "theta_multiplication_b",
        &chain(&[&ix.tensor(b.m()), &th.tensor(&ib), &ib.tensor(th)])?,
        &th.compose(&b.m().tensor(&ix))?,
    )?;
    r.equal(
        "theta_unit_x",
        &th.compose(&ib.tensor(x.u()))?,
        &x.u().tensor(&ib),
    )?;
    Ok(r)
}

/// `m_{X⋊B} = (m⊗m)·(1⊗▷⊗1⊗1)·(1⊗1⊗σ_{B,X}⊗1)·(1⊗Δ⊗1⊗1)` on `(X⊗B)⊗(X⊗B)`.
pub fn semidirect_multiplication<K: Field>(a: &ActionData<K>) -> Result<LinMap<K>> {
    let (b, x) = (&a.acting, &a.acted);
    let (ib, ix) = (b.id(), x.id());
    chain(&[
        &x.m().tensor(b.m()),
        &tensor_all(&[&ix, &a.act, &ib, &ib]),
        &tensor_all(&[&ix, &ib, &a.sigma_bx(), &ib]),
        &tensor_all(&[&ix, b.delta(), &ix, &ib]),
    ])
}

/// `Δ_{X⋊B} = (1⊗σ_{X,B}⊗1)·(Δ⊗Δ)`.
pub fn semidirect_comultiplication<K: Field>(a: &ActionData<K>) -> Result<LinMap<K>> {
    let (b, x) = (&a.acting, &a.acted);
    let sigma_xb = LinMap::symmetry(x.space(), b.space());
    tensor_all(&[&x.id(), &sigma_xb, &b.id()]).compose(&x.delta().tensor(b.delta()))
}

/// `S = Θ·(S⊗S)·σ_{X,B}` for a pair of antipodes of `B` and `X`.
pub fn semidirect_antipode<K: Field>(
    theta: &ThetaMap<K>,
    s_b: &LinMap<K>,
    s_x: &LinMap<K>,
) -> Result<LinMap<K>> {
    let (b, x) = (&theta.source.acting, &theta.source.acted);
    let sigma_xb = LinMap::symmetry(x.space(), b.space());
    chain(&[&theta.map, &s_b.tensor(s_x), &sigma_xb])
}

/// The two conditions under which the semidirect multiplication of two
/// associative bialgebras is associative, together with the associativity of
/// that multiplication itself (`semidirect_associative`).
pub fn verify_assoc_conditions<K: Field>(a: &ActionData<K>) -> Result<Report> {
    for s in [&a.acting, &a.acted] {
        let (l, r) = associativity_sides(s)?;
        if l != r {
            return Err(Error::NotAssociative {
                what: s.name().to_string(),
            });
        }
    }
    let mut r = Report::new();
    module_checks(a, &mut r)?;
    let carrier = a.acted.space().tensor(a.acting.space());
    let m = semidirect_multiplication(a)?;
    let id = LinMap::identity(&carrier);
    r.equal(
        "semidirect_associative",
        &m.compose(&m.tensor(&id))?,
        &m.compose(&id.tensor(&m))?,
    )?;
    Ok(r)
}

/// The carrier space `X⊗B` of the semidirect product.
pub fn semidirect_space<K: Field>(a: &ActionData<K>) -> Space {
    a.acted.space().tensor(a.acting.space())
}
