//! Operator identities in `M^λ`, evaluated exactly by the engine.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{Multicharge, Quiver};
use crate::error::{Error, Result};
use crate::filtration::{last_garnir_node, resolution_length, resolution_term};
use crate::klr::Atom;
use crate::module::{ModuleContext, ModuleElement};
use crate::partitions::{Multipartition, Node, Partition};
use crate::scalar::Rational;
use crate::tableaux::std_mu;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `y_j ψ_1⋯ψ_k e(i)z = 0` on the hook `(k,1^r)`.
    HookTopY,
    /// `y_j ψ_{k+i-1} e(i)z = 0` for `2 ≤ i ≤ r`.
    HookLegY,
    /// `ψ_j ψ_1⋯ψ_k z = 0` for `j ≤ k`.
    HookTopPsi,
    /// `ψ_j ψ_{k+i-1} z = 0` for `2 ≤ i ≤ r`, `j ≤ k-1`.
    HookLegPsi,
    /// `ψ_{2s} ψ^{B_{s+1}} z = 0` on `(k,r)`.
    TwoRowVanishing,
    /// `(ψ_s⋯ψ_{k+s}) ψ^{B_s} z = -ψ^{B_{s+1}} z`.
    TwoRowStepUp,
    /// `(ψ_{k+s-1}⋯ψ_{s-1}) ψ^{B_s} z = -ψ^{B_{s-1}} z`.
    TwoRowStepDown,
    /// The submodule generated by `ψ^{B_1} z` contains every `ψ^{B_s} z`.
    TwoRowCyclic,
    /// First-column Garnir elements generate the same submodule as all of them.
    FirstColumnGenerates,
    /// `ψ^t ψ^{B_1} z` lies in the submodule generated by `ψ^{B_i} z`, `i ≥ 2`.
    SecondLayerMembership,
    /// The defining relations of the algebra act as zero.
    Relations,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::HookTopY,
        Identity::HookLegY,
        Identity::HookTopPsi,
        Identity::HookLegPsi,
        Identity::TwoRowVanishing,
        Identity::TwoRowStepUp,
        Identity::TwoRowStepDown,
        Identity::TwoRowCyclic,
        Identity::FirstColumnGenerates,
        Identity::SecondLayerMembership,
        Identity::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::HookTopY => "hook-top-y",
            Identity::HookLegY => "hook-leg-y",
            Identity::HookTopPsi => "hook-top-psi",
            Identity::HookLegPsi => "hook-leg-psi",
            Identity::TwoRowVanishing => "two-row-vanishing",
            Identity::TwoRowStepUp => "two-row-step-up",
            Identity::TwoRowStepDown => "two-row-step-down",
            Identity::TwoRowCyclic => "two-row-cyclic",
            Identity::FirstColumnGenerates => "first-column-generates",
            Identity::SecondLayerMembership => "second-layer-membership",
            Identity::Relations => "relations",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse { what: "identity", input: s.into() })
    }
}

#[derive(Clone, Debug)]
pub struct IdentityParams {
    pub shape: Partition,
    pub quiver: Quiver,
    pub charge: i64,
    /// Restrict to one value of the identity's running index (`s` or `i`).
    pub index: Option<usize>,
    pub cap: u64,
}

impl IdentityParams {
    pub fn new(shape: Partition, quiver: Quiver) -> Self {
        IdentityParams { shape, quiver, charge: 0, index: None, cap: crate::module::DEFAULT_CAP }
    }

    pub fn with_index(mut self, index: Option<usize>) -> Self {
        self.index = index;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub shape: String,
    pub instances: Vec<Instance>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.holds)
    }
}

struct Checker<'a> {
    ctx: &'a ModuleContext,
    out: Vec<Instance>,
}

impl Checker<'_> {
    fn equal(&mut self, label: String, lhs: &ModuleElement<Rational>, rhs: &ModuleElement<Rational>) {
        self.out.push(Instance {
            label,
            lhs: self.ctx.render(lhs),
            rhs: self.ctx.render(rhs),
            holds: lhs == rhs,
        });
    }

    fn zero(&mut self, label: String, lhs: &ModuleElement<Rational>) {
        self.equal(label, lhs, &ModuleElement::zero());
    }
}

fn hook_arms(shape: &Partition) -> Result<(usize, usize)> {
    let parts = shape.parts();
    if parts.len() < 2 || parts[1..].iter().any(|&x| x != 1) {
        return Err(Error::Precondition(format!("{shape} is not a hook with a leg")));
    }
    Ok((parts[0], parts.len() - 1))
}

fn two_row(p: &IdentityParams) -> Result<(usize, usize)> {
    if !p.quiver.is_linear() {
        return Err(Error::Precondition("two-row identities need the linear quiver".into()));
    }
    if p.shape.rows() != 2 {
        return Err(Error::Precondition(format!("{} does not have exactly two rows", p.shape)));
    }
    Ok((p.shape.part(1), p.shape.part(2)))
}

fn indices(range: std::ops::RangeInclusive<usize>, pick: Option<usize>) -> Result<Vec<usize>> {
    match pick {
        None => Ok(range.collect()),
        Some(i) if range.contains(&i) => Ok(vec![i]),
        Some(i) => Err(Error::OutOfRange { index: i, max: *range.end() }),
    }
}

fn psi(word: &[usize]) -> String {
    word.iter().map(|s| format!("ψ{s}")).collect()
}

/// `ψ^{B_s} z` with `B_s = (1, s)` on a two-row shape.
fn top_row_element(ctx: &ModuleContext, s: usize) -> Result<ModuleElement<Rational>> {
    ctx.garnir_element(Node::new(1, 1, s))
}

/// Evaluate every instance of `id` for `params`.
pub fn verify_identity(id: Identity, params: &IdentityParams) -> Result<IdentityReport> {
    // cheap precondition checks first, so usage errors do not build a module
    match id {
        Identity::HookTopY | Identity::HookTopPsi | Identity::HookLegY | Identity::HookLegPsi => {
            let (k, r) = hook_arms(&params.shape)?;
            if matches!(id, Identity::HookLegY | Identity::HookLegPsi) && r < 2 {
                return Err(Error::Precondition(format!("{} has no leg Garnir nodes past the first", params.shape)));
            }
            if id == Identity::HookLegPsi && k < 2 {
                return Err(Error::Precondition(format!("{} has an arm of length 1", params.shape)));
            }
        }
        Identity::TwoRowVanishing | Identity::TwoRowStepUp | Identity::TwoRowStepDown | Identity::TwoRowCyclic => {
            two_row(params)?;
        }
        Identity::FirstColumnGenerates => {
            if !params.quiver.is_linear() {
                return Err(Error::Precondition("needs the linear quiver".into()));
            }
            if params.shape.rows() < 2 {
                return Err(Error::Precondition(format!("{} has no Garnir nodes", params.shape)));
            }
        }
        Identity::SecondLayerMembership => {
            if !params.quiver.is_linear() {
                return Err(Error::Precondition("needs the linear quiver".into()));
            }
            if params.shape.rows() < 3 || params.shape.part(3) < 2 {
                return Err(Error::Precondition(format!("{} needs a third row of length at least 2", params.shape)));
            }
        }
        Identity::Relations => {}
    }
    let shape = Multipartition::single(params.shape.clone());
    let ctx = ModuleContext::new(&shape, params.quiver, &Multicharge::single(params.charge), params.cap)?;
    let mut ck = Checker { ctx: &ctx, out: Vec::new() };
    let n = ctx.n();
    let e = Atom::E(ctx.i_lambda().to_vec());
    let z = ctx.z::<Rational>();
    match id {
        Identity::HookTopY | Identity::HookTopPsi => {
            let (k, _) = hook_arms(&params.shape)?;
            let top: Vec<usize> = (1..=k).collect();
            let mut atoms: Vec<Atom> = top.iter().map(|&s| Atom::Psi(s)).collect();
            atoms.push(e.clone());
            let base = ctx.eval_word::<Rational>(&atoms)?;
            if id == Identity::HookTopY {
                for j in indices(1..=n, params.index)? {
                    let v = ctx.act(&Atom::Y(j), &base)?;
                    ck.zero(format!("y{j}{}e(i)z", psi(&top)), &v);
                }
            } else {
                let bare = ctx.apply_psi_word(&top, &z)?;
                for j in indices(1..=k.min(n - 1), params.index)? {
                    let v = ctx.act(&Atom::Psi(j), &bare)?;
                    ck.zero(format!("ψ{j}{}z", psi(&top)), &v);
                }
            }
        }
        Identity::HookLegY | Identity::HookLegPsi => {
            let (k, r) = hook_arms(&params.shape)?;
            for i in indices(2..=r, params.index)? {
                let s = k + i - 1;
                if id == Identity::HookLegY {
                    let base = ctx.eval_word::<Rational>(&[Atom::Psi(s), e.clone()])?;
                    for j in 1..=n {
                        let v = ctx.act(&Atom::Y(j), &base)?;
                        ck.zero(format!("y{j}ψ{s}e(i)z"), &v);
                    }
                } else {
                    let base = ctx.apply_psi_word(&[s], &z)?;
                    for j in 1..k {
                        let v = ctx.act(&Atom::Psi(j), &base)?;
                        ck.zero(format!("ψ{j}ψ{s}z"), &v);
                    }
                }
            }
        }
        Identity::TwoRowVanishing => {
            let (_, r) = two_row(params)?;
            for s in indices(1..=r.saturating_sub(1), params.index)? {
                let b = top_row_element(&ctx, s + 1)?;
                let v = ctx.act(&Atom::Psi(2 * s), &b)?;
                ck.zero(format!("ψ{}ψ^B{}z", 2 * s, s + 1), &v);
            }
        }
        Identity::TwoRowStepUp => {
            let (k, r) = two_row(params)?;
            for s in indices(1..=r.saturating_sub(1), params.index)? {
                let word: Vec<usize> = (s..=k + s).collect();
                let lhs = ctx.apply_psi_word(&word, &top_row_element(&ctx, s)?)?;
                let rhs = top_row_element(&ctx, s + 1)?.neg();
                ck.equal(format!("{}ψ^B{s}z = -ψ^B{}z", psi(&word), s + 1), &lhs, &rhs);
            }
        }
        Identity::TwoRowStepDown => {
            let (k, r) = two_row(params)?;
            for s in indices(2..=r, params.index)? {
                let word: Vec<usize> = (s - 1..=k + s - 1).rev().collect();
                let lhs = ctx.apply_psi_word(&word, &top_row_element(&ctx, s)?)?;
                let rhs = top_row_element(&ctx, s - 1)?.neg();
                ck.equal(format!("{}ψ^B{s}z = -ψ^B{}z", psi(&word), s - 1), &lhs, &rhs);
            }
        }
        Identity::TwoRowCyclic => {
            let (_, r) = two_row(params)?;
            let first = top_row_element(&ctx, 1)?;
            let span = ctx.span(std::slice::from_ref(&first));
            for s in indices(1..=r, params.index)? {
                let b = top_row_element(&ctx, s)?;
                ck.out.push(Instance {
                    label: format!("ψ^B{s}z ∈ ⟨ψ^B1 z⟩"),
                    lhs: ctx.render(&b),
                    rhs: format!("span of dimension {}", span.dim()),
                    holds: span.contains(&ctx, &b),
                });
            }
        }
        Identity::FirstColumnGenerates => {
            let rows = params.shape.rows();
            let all = ctx.garnir_elements::<Rational>();
            let firsts: Vec<ModuleElement<Rational>> =
                (1..rows).map(|i| ctx.garnir_element(Node::new(1, i, 1))).collect::<Result<_>>()?;
            let big = ctx.span(&all);
            let small = ctx.span(&firsts);
            ck.out.push(Instance {
                label: format!("⟨ψ^A z : A = (i,1), i < {rows}⟩ = ⟨all Garnir elements⟩"),
                lhs: small.dim().to_string(),
                rhs: big.dim().to_string(),
                holds: small.dim() == big.dim() && all.iter().all(|g| small.contains(&ctx, g)),
            });
        }
        Identity::SecondLayerMembership => {
            let lambda = &params.shape;
            let (first, kappa) = resolution_term(lambda, 1, 1, params.charge)?;
            let (second, _) = resolution_term(lambda, 1, 2, params.charge)?;
            let found = std_mu(&first, &second, &params.quiver, &kappa)?;
            if found.len() != 1 {
                return Err(Error::Inconsistent(format!(
                    "expected one standard {first}-tableau of residue type {second}, found {}",
                    found.len()
                )));
            }
            let word = found[0].chosen_word()?.indices;
            let b1 = ctx.garnir_element::<Rational>(last_garnir_node(lambda, 1))?;
            let v = ctx.apply_psi_word(&word, &b1)?;
            let gens: Vec<ModuleElement<Rational>> = (2..lambda.rows())
                .map(|i| ctx.garnir_element(last_garnir_node(lambda, i)))
                .collect::<Result<_>>()?;
            let m2 = ctx.span(&gens);
            ck.out.push(Instance {
                label: format!("{}ψ^B1 z ∈ M_2 (k_1 = {})", psi(&word), resolution_length(lambda, 1)?),
                lhs: ctx.render(&v),
                rhs: format!("span of dimension {}", m2.dim()),
                holds: m2.contains(&ctx, &v),
            });
        }
        Identity::Relations => {
            let rep = ctx.check_defining_relations();
            ck.out.push(Instance {
                label: format!("{} relation instances on {} basis vectors", rep.checked, ctx.dim()),
                lhs: format!("{} violations", rep.violations.len()),
                rhs: "0 violations".into(),
                holds: rep.passed(),
            });
            for v in rep.violations.iter().take(20) {
                ck.out.push(Instance { label: v.clone(), lhs: String::new(), rhs: String::new(), holds: false });
            }
        }
    }
    Ok(IdentityReport { identity: id, shape: params.shape.to_string(), instances: ck.out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: &str, q: Quiver) -> IdentityParams {
        IdentityParams::new(s.parse().unwrap(), q)
    }

    fn holds(id: Identity, s: &str, q: Quiver) -> IdentityReport {
        let r = verify_identity(id, &params(s, q)).unwrap();
        assert!(r.passed(), "{id} on {s}: {:?}", r.failures().collect::<Vec<_>>());
        assert!(!r.instances.is_empty());
        r
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("thm".parse::<Identity>().is_err());
    }

    #[test]
    fn hook_identities() {
        for q in [Quiver::affine(3).unwrap(), Quiver::affine(4).unwrap(), Quiver::linear()] {
            for s in ["2,1", "3,1,1", "2,1,1,1", "1,1,1", "4,1"] {
                holds(Identity::HookTopY, s, q);
                holds(Identity::HookTopPsi, s, q);
            }
            for s in ["3,1,1", "2,1,1,1", "3,1,1,1"] {
                holds(Identity::HookLegY, s, q);
                holds(Identity::HookLegPsi, s, q);
            }
            holds(Identity::HookLegY, "1,1,1", q);
        }
    }

    #[test]
    fn two_row_identities() {
        let q = Quiver::linear();
        for s in ["2,2", "3,2", "3,3", "4,2"] {
            holds(Identity::TwoRowVanishing, s, q);
            holds(Identity::TwoRowStepUp, s, q);
            holds(Identity::TwoRowStepDown, s, q);
            holds(Identity::TwoRowCyclic, s, q);
        }
        let r = verify_identity(Identity::TwoRowStepUp, &params("2,2", q).with_index(Some(1))).unwrap();
        assert_eq!(r.instances.len(), 1);
        assert!(r.passed());
    }

    #[test]
    fn first_column_and_second_layer() {
        let q = Quiver::linear();
        for s in ["2,1", "2,2", "3,2,1", "2,2,1", "2,1,1"] {
            holds(Identity::FirstColumnGenerates, s, q);
        }
        holds(Identity::SecondLayerMembership, "2,2,2", q);
        holds(Identity::SecondLayerMembership, "3,2,2", q);
    }

    #[test]
    fn relations_entry() {
        holds(Identity::Relations, "2,1", Quiver::affine(3).unwrap());
        holds(Identity::Relations, "1", Quiver::linear());
    }

    #[test]
    fn preconditions() {
        let q = Quiver::linear();
        for (id, s) in [
            (Identity::TwoRowStepUp, "1"),
            (Identity::TwoRowStepUp, "2,1,1"),
            (Identity::HookLegY, "3,1"),
            (Identity::HookTopY, "2,2"),
            (Identity::SecondLayerMembership, "2,2,1"),
        ] {
            assert!(matches!(verify_identity(id, &params(s, q)), Err(Error::Precondition(_))), "{id} {s}");
        }
        assert!(verify_identity(Identity::TwoRowStepUp, &params("2,2", Quiver::affine(3).unwrap())).is_err());
        assert!(verify_identity(Identity::TwoRowStepUp, &params("2,2", q).with_index(Some(5))).is_err());
    }
}
