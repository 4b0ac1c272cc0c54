//! Filtrations of `M^λ` by submodules generated by Garnir elements, with the
//! predicted subquotients: Specht modules for hooks and two-row shapes,
//! Specht resolutions in general.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{Multicharge, Quiver};
use crate::error::{Error, Result};
use crate::module::{ModuleContext, ModuleElement, SpanBasis};
use crate::partitions::{multinomial, Multipartition, Node, Partition};
use crate::scalar::Rational;

/// One step `M_i ⊇ M_{i+1}` of a filtration.
///
/// `resolution` lists the multipartitions whose Specht modules resolve
/// `M_i/M_{i+1}`; a single entry means the subquotient is that Specht module.
/// `generators` are the Garnir nodes whose elements generate `M_i`; it is
/// empty for `i = 0`, where `M_0 = M^λ` is generated by `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationLayer {
    pub index: usize,
    pub generators: Vec<Node>,
    pub resolution: Vec<Multipartition>,
    pub charge: Multicharge,
    pub dim: BigUint,
}

impl FiltrationLayer {
    fn new(index: usize, generators: Vec<Node>, resolution: Vec<Multipartition>, charge: Multicharge) -> Self {
        let dim = alternating_dim(&resolution);
        FiltrationLayer { index, generators, resolution, charge, dim }
    }

    /// Leading shape of the layer.
    pub fn shape(&self) -> &Multipartition {
        &self.resolution[0]
    }

    pub fn record(&self) -> LayerRecord {
        LayerRecord {
            index: self.index,
            generators: self.generators.iter().map(|n| [n.comp, n.row, n.col]).collect(),
            shape: self.shape().to_string(),
            charges: self.charge.entries.clone(),
            dim: self.dim.to_string(),
            resolution: self
                .resolution
                .iter()
                .map(|m| ResolutionRecord { shape: m.to_string(), dim: m.count_std().to_string() })
                .collect(),
        }
    }
}

/// JSON form of a layer; field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerRecord {
    pub index: usize,
    pub generators: Vec<[usize; 3]>,
    pub shape: String,
    pub charges: Vec<i64>,
    pub dim: String,
    pub resolution: Vec<ResolutionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionRecord {
    pub shape: String,
    pub dim: String,
}

/// `Σ_j (-1)^{j+1} #Std(μ_j)`, the dimension forced by an exact resolution.
pub fn alternating_dim(resolution: &[Multipartition]) -> BigUint {
    let mut acc = BigInt::zero();
    for (j, m) in resolution.iter().enumerate() {
        let d = BigInt::from(m.count_std());
        if j % 2 == 0 {
            acc += d;
        } else {
            acc -= d;
        }
    }
    acc.to_biguint().expect("alternating sum of a resolution is nonnegative")
}

pub fn total_dim(layers: &[FiltrationLayer]) -> BigUint {
    layers.iter().map(|l| &l.dim).sum()
}

fn p(parts: Vec<usize>) -> Partition {
    Partition::from_unsorted(parts)
}

fn ones(m: usize) -> Vec<usize> {
    vec![1; m]
}

/// Layers for the hook `(k, 1^r)` with charge `j`.
///
/// Layer `i` is generated by the first-column Garnir nodes `(i,1), …, (r,1)`.
pub fn hook_filtration(k: usize, r: usize, q: &Quiver, j: i64) -> Result<Vec<FiltrationLayer>> {
    if k == 0 {
        return Err(Error::InvalidShape("hook arm must be positive".into()));
    }
    let gens = |i: usize| (i..=r).map(|a| Node::new(1, a, 1)).collect::<Vec<_>>();
    let mut out = Vec::with_capacity(r + 1);
    let lambda = Multipartition::single(Partition::hook(k, r)?);
    out.push(FiltrationLayer::new(0, vec![], vec![lambda.clone()], Multicharge::single(j)));
    if r >= 1 {
        let mut parts = vec![k + 1];
        parts.extend(ones(r - 1));
        out.push(FiltrationLayer::new(1, gens(1), vec![Multipartition::single(p(parts))], Multicharge::single(j - 1)));
    }
    for i in 2..=r {
        let mut comps = vec![p(vec![k])];
        comps.extend((0..i - 2).map(|_| p(vec![1])));
        let mut last = vec![2];
        last.extend(ones(r - i));
        comps.push(p(last));
        let mut charge: Vec<i64> = (0..i as i64 - 1).map(|t| j - t).collect();
        charge.push(j - i as i64);
        out.push(FiltrationLayer::new(i, gens(i), vec![Multipartition::new(comps)], Multicharge::new(charge)));
    }
    check_content(&lambda, &Multicharge::single(j), q, &out)?;
    Ok(out)
}

fn check_content(lambda: &Multipartition, kappa: &Multicharge, q: &Quiver, layers: &[FiltrationLayer]) -> Result<()> {
    let alpha = lambda.residue_content(q, kappa)?;
    for l in layers {
        for m in &l.resolution {
            if m.residue_content(q, &l.charge)? != alpha {
                return Err(Error::Inconsistent(format!(
                    "layer {} shape {m} with charge {} leaves the block of {lambda}",
                    l.index, l.charge
                )));
            }
        }
    }
    Ok(())
}

/// `dim M^λ` equals the sum of the hook layer dimensions.
pub fn hook_dim_identity(k: usize, r: usize) -> bool {
    let Ok(layers) = hook_filtration(k, r, &Quiver::linear(), 0) else {
        return false;
    };
    Partition::hook(k, r).map(|h| h.dim_perm() == total_dim(&layers)).unwrap_or(false)
}

/// Two layers for `(k, r)`: `M_1` is generated by the Garnir element at `(1,1)`
/// and is predicted to be the Specht module of `(k+1 | r-1)`.
///
/// The charge `(x-1, x)` is the one that puts the leading residues of
/// `(k+1 | r-1)` where they are in `λ`; it is not decreasing.
pub fn two_row_filtration(k: usize, r: usize, x: i64) -> Result<Vec<FiltrationLayer>> {
    if r == 0 || k < r {
        return Err(Error::InvalidShape(format!("two-row shape needs k >= r >= 1, got ({k},{r})")));
    }
    let lambda = Multipartition::single(Partition::new(vec![k, r])?);
    let top = Multipartition::new(vec![p(vec![k + 1]), p(vec![r - 1])]);
    let out = vec![
        FiltrationLayer::new(0, vec![], vec![lambda.clone()], Multicharge::single(x)),
        FiltrationLayer::new(1, vec![Node::new(1, 1, 1)], vec![top], Multicharge::new(vec![x - 1, x])),
    ];
    check_content(&lambda, &Multicharge::single(x), &Quiver::linear(), &out)?;
    Ok(out)
}

/// `k_i(λ)`: the largest `j ≤ r - i` with `λ_{i+j} ≥ j`.
pub fn resolution_length(lambda: &Partition, i: usize) -> Result<usize> {
    let r = lambda.rows();
    if i == 0 || i >= r {
        return Err(Error::OutOfRange { index: i, max: r.saturating_sub(1) });
    }
    Ok((1..=r - i).filter(|&j| lambda.part(i + j) >= j).max().expect("j = 1 always qualifies"))
}

/// `μ_{i,j}` and its charge: components `λ_1, …, λ_{i-1}`, then the row
/// `λ_{i+j} - j`, then `(λ_i + 1, …, λ_{i+j-1} + 1, λ_{i+j+1}, …, λ_r)`.
///
/// The charge `(x, x-1, …, x-i+1, x-i)` has one entry per component and puts
/// every leading residue where it sits in `λ`.
pub fn resolution_term(lambda: &Partition, i: usize, j: usize, x: i64) -> Result<(Multipartition, Multicharge)> {
    let r = lambda.rows();
    if i == 0 || i >= r {
        return Err(Error::OutOfRange { index: i, max: r.saturating_sub(1) });
    }
    if j == 0 || j > r - i || lambda.part(i + j) < j {
        return Err(Error::OutOfRange { index: j, max: resolution_length(lambda, i)? });
    }
    let mut comps: Vec<Partition> = (1..i).map(|c| p(vec![lambda.part(c)])).collect();
    comps.push(p(vec![lambda.part(i + j) - j]));
    let mut last: Vec<usize> = (i..i + j).map(|m| lambda.part(m) + 1).collect();
    last.extend((i + j + 1..=r).map(|m| lambda.part(m)));
    comps.push(p(last));
    let charge: Vec<i64> = (0..=i as i64).map(|t| x - t).collect();
    Ok((Multipartition::new(comps), Multicharge::new(charge)))
}

/// Garnir node `B_i = (i, λ_{i+1})`, the last one between rows `i` and `i+1`.
pub fn last_garnir_node(lambda: &Partition, i: usize) -> Node {
    Node::new(1, i, lambda.part(i + 1))
}

/// Layers `M_0 ⊋ M_1 ⊋ ⋯ ⊋ M_{r-1}` with their Specht resolutions, linear quiver.
pub fn general_layers(lambda: &Partition, q: &Quiver, x: i64) -> Result<Vec<FiltrationLayer>> {
    if !q.is_linear() {
        return Err(Error::Precondition("the general filtration needs the linear quiver".into()));
    }
    let r = lambda.rows();
    let whole = Multipartition::single(lambda.clone());
    let mut out = vec![FiltrationLayer::new(0, vec![], vec![whole.clone()], Multicharge::single(x))];
    for i in 1..r {
        let k = resolution_length(lambda, i)?;
        let mut terms = Vec::with_capacity(k);
        let mut charge = Multicharge::new(vec![]);
        for j in 1..=k {
            let (m, c) = resolution_term(lambda, i, j, x)?;
            charge = c;
            terms.push(m);
        }
        for pair in terms.windows(2) {
            if pair[0] == pair[1] || !pair[0].dominates(&pair[1])? {
                return Err(Error::Inconsistent(format!(
                    "{} does not strictly dominate {} in layer {i} of {lambda}",
                    pair[0], pair[1]
                )));
            }
        }
        let gens = (i..r).map(|m| last_garnir_node(lambda, m)).collect();
        out.push(FiltrationLayer::new(i, gens, terms, charge));
    }
    check_content(&whole, &Multicharge::single(x), q, &out)?;
    Ok(out)
}

/// `ν_i = (λ_{i+1} - 1 | λ_i + 1, λ_{i+2}, …, λ_r)`.
pub fn nu_layer(lambda: &Partition, i: usize) -> Result<Multipartition> {
    let r = lambda.rows();
    if i == 0 || i >= r {
        return Err(Error::OutOfRange { index: i, max: r.saturating_sub(1) });
    }
    let mut second = vec![lambda.part(i) + 1];
    second.extend((i + 2..=r).map(|m| lambda.part(m)));
    Ok(Multipartition::new(vec![p(vec![lambda.part(i + 1) - 1]), p(second)]))
}

/// `dim D^{μ_{1,j}} = Σ_{j ≤ s ≤ k_1} (-1)^{s-j} #Std(μ_{1,s})`.
pub fn simple_dim(lambda: &Partition, j: usize) -> Result<BigInt> {
    let k = resolution_length(lambda, 1)?;
    if j == 0 || j > k {
        return Err(Error::OutOfRange { index: j, max: k });
    }
    let mut acc = BigInt::zero();
    for s in j..=k {
        let d = BigInt::from(resolution_term(lambda, 1, s, 0)?.0.count_std());
        if (s - j).is_multiple_of(2) {
            acc += d;
        } else {
            acc -= d;
        }
    }
    Ok(acc)
}

/// Dimension of `M_i/M_{i+1}` read as an induction product of one-row Specht
/// modules `λ_1, …, λ_{i-1}` with the simple head of `ν_i`.
pub fn almost_specht_dim(lambda: &Partition, i: usize) -> Result<BigInt> {
    let r = lambda.rows();
    if i == 0 || i >= r {
        return Err(Error::OutOfRange { index: i, max: r.saturating_sub(1) });
    }
    let tail = p(lambda.parts()[i - 1..].to_vec());
    let mut sizes: Vec<usize> = lambda.parts()[..i - 1].to_vec();
    sizes.push(tail.size());
    Ok(BigInt::from(multinomial(&sizes)) * simple_dim(&tail, 1)?)
}

/// Both sides of the hook-length inequality `h_1 d_1 ≤ d_1·λ_1! + h_2·λ_1!/(λ_2-1)!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookInequality {
    pub shape: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub equality: bool,
    /// `k_1(λ)`.
    pub resolution_length: usize,
    /// `λ_3 ≥ 2`.
    pub third_row_at_least_two: bool,
}

pub fn hook_inequality(lambda: &Partition) -> Result<HookInequality> {
    if lambda.rows() < 2 {
        return Err(Error::Precondition(format!("{lambda} has fewer than two rows")));
    }
    use crate::partitions::factorial;
    let h1 = lambda.row_hook_product(1)?;
    let h2 = lambda.row_hook_product(2)?;
    let d1 = BigUint::from(lambda.gap(1)?);
    let l1 = factorial(lambda.part(1));
    let lhs = &h1 * &d1;
    let rhs = &d1 * &l1 + &h2 * &l1 / factorial(lambda.part(2) - 1);
    Ok(HookInequality {
        shape: lambda.to_string(),
        holds: lhs <= rhs,
        equality: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        resolution_length: resolution_length(lambda, 1)?,
        third_row_at_least_two: lambda.part(3) >= 2,
    })
}

/// `((λ_1..λ_k | λ_{k+1}..λ_r), (x, x-k))`.
pub fn split_partition(lambda: &Partition, k: usize, x: i64) -> Result<(Multipartition, Multicharge)> {
    let r = lambda.rows();
    if k == 0 || k >= r {
        return Err(Error::OutOfRange { index: k, max: r.saturating_sub(1) });
    }
    let parts = lambda.parts();
    Ok((
        Multipartition::new(vec![p(parts[..k].to_vec()), p(parts[k..].to_vec())]),
        Multicharge::new(vec![x, x - k as i64]),
    ))
}

/// Layers of a multipartition assembled from per-component layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combined {
    pub layers: Vec<FiltrationLayer>,
    /// Sum of the layer dimensions.
    pub total: BigUint,
    /// `dim M^λ`, recovered from the component layers.
    pub expected: BigUint,
}

impl Combined {
    pub fn consistent(&self) -> bool {
        self.total == self.expected
    }
}

/// Combine per-component layer lists index by index: layer `i` takes the
/// `j`-th resolution term of every component side by side, padding with empty
/// partitions when a component has fewer terms or has already reached zero.
pub fn level_ell_combine(per_component: &[Vec<FiltrationLayer>]) -> Result<Combined> {
    if per_component.iter().any(|l| l.is_empty()) {
        return Err(Error::Precondition("every component needs at least one layer".into()));
    }
    let r = per_component.iter().map(|l| l.len()).max().unwrap_or(0);
    let mut layers = Vec::with_capacity(r);
    for i in 0..r {
        let k = per_component.iter().filter_map(|l| l.get(i)).map(|x| x.resolution.len()).max().unwrap_or(0);
        let mut resolution = Vec::with_capacity(k);
        for j in 0..k {
            let mut comps = Vec::new();
            for l in per_component {
                let width = l[0].charge.level().max(l.iter().map(|x| x.charge.level()).max().unwrap_or(0));
                match l.get(i).and_then(|x| x.resolution.get(j)) {
                    Some(m) => comps.extend(m.components().iter().cloned()),
                    None => {
                        let w = l.get(i).map(|x| x.charge.level()).unwrap_or(width);
                        comps.extend((0..w).map(|_| Partition::empty()));
                    }
                }
            }
            resolution.push(Multipartition::new(comps));
        }
        let mut charge = Vec::new();
        let mut generators = Vec::new();
        for (s, l) in per_component.iter().enumerate() {
            let layer = l.get(i).unwrap_or(&l[0]);
            charge.extend(layer.charge.entries.iter().copied());
            if let Some(x) = l.get(i) {
                generators.extend(x.generators.iter().map(|n| Node::new(s + 1, n.row, n.col)));
            }
        }
        layers.push(FiltrationLayer::new(i, generators, resolution, Multicharge::new(charge)));
    }
    let sizes: Vec<usize> = per_component.iter().map(|l| l[0].shape().size()).collect();
    let expected = per_component.iter().fold(multinomial(&sizes), |acc, l| acc * total_dim(l));
    let total = total_dim(&layers);
    Ok(Combined { layers, total, expected })
}

/// One level of the reversed chain `M'_0 ⊇ M'_1 ⊇ ⋯ ⊇ M'_r = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainLevel {
    Whole,
    Generated(Vec<Node>),
    Zero,
}

/// `M'_i` generated by the first-column Garnir nodes `(1,1), …, (r-i,1)`.
pub fn skew_chain(lambda: &Partition) -> Vec<ChainLevel> {
    let r = lambda.rows().max(1);
    let mut out = vec![ChainLevel::Whole];
    for i in 1..r {
        out.push(ChainLevel::Generated((1..=r - i).map(|a| Node::new(1, a, 1)).collect()));
    }
    out.push(ChainLevel::Zero);
    out
}

/// Which constructor predicts the layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiltrationKind {
    Hook,
    TwoRow,
    General,
}

impl std::str::FromStr for FiltrationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hook" => Ok(FiltrationKind::Hook),
            "two-row" => Ok(FiltrationKind::TwoRow),
            "general" => Ok(FiltrationKind::General),
            _ => Err(Error::Parse { what: "filtration kind", input: s.into() }),
        }
    }
}

fn as_hook(lambda: &Partition) -> Option<(usize, usize)> {
    let parts = lambda.parts();
    if parts.is_empty() || parts[1..].iter().any(|&x| x != 1) {
        None
    } else {
        Some((parts[0], parts.len() - 1))
    }
}

/// The constructor that applies to `λ` over `q`, preferring the most specific.
pub fn default_kind(lambda: &Partition, q: &Quiver) -> Option<FiltrationKind> {
    if as_hook(lambda).is_some() {
        Some(FiltrationKind::Hook)
    } else if !q.is_linear() {
        None
    } else if lambda.rows() == 2 {
        Some(FiltrationKind::TwoRow)
    } else {
        Some(FiltrationKind::General)
    }
}

pub fn build_layers(kind: FiltrationKind, lambda: &Partition, q: &Quiver, x: i64) -> Result<Vec<FiltrationLayer>> {
    match kind {
        FiltrationKind::Hook => {
            let (k, r) = as_hook(lambda).ok_or_else(|| Error::InvalidShape(format!("{lambda} is not a hook")))?;
            hook_filtration(k, r, q, x)
        }
        FiltrationKind::TwoRow => {
            if !q.is_linear() {
                return Err(Error::Precondition("the two-row filtration needs the linear quiver".into()));
            }
            if lambda.rows() != 2 {
                return Err(Error::InvalidShape(format!("{lambda} does not have two rows")));
            }
            two_row_filtration(lambda.part(1), lambda.part(2), x)
        }
        FiltrationKind::General => general_layers(lambda, q, x),
    }
}

/// Span dimension of one layer against its prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerCheck {
    pub index: usize,
    pub span_dim: usize,
    pub quotient_dim: usize,
    pub predicted: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub shape: String,
    pub kind: FiltrationKind,
    pub dim: usize,
    pub layers: Vec<LayerCheck>,
    /// `dim M^λ - dim M_1` against `#Std(λ)`.
    pub top_quotient_ok: bool,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.top_quotient_ok && self.layers.iter().all(|l| l.ok)
    }
}

/// Dimensions `dim M_i` for every layer, computed from spans of the generators.
pub fn span_dims(ctx: &ModuleContext, layers: &[FiltrationLayer]) -> Result<Vec<usize>> {
    let mut dims = vec![0; layers.len()];
    let mut span: SpanBasis<Rational> = SpanBasis::new();
    // generator sets shrink as i grows; walk upwards from the smallest M_i
    for (i, layer) in layers.iter().enumerate().rev() {
        if i == 0 {
            dims[0] = ctx.dim();
            continue;
        }
        let gens: Vec<ModuleElement<Rational>> =
            layer.generators.iter().map(|&a| ctx.garnir_element(a)).collect::<Result<_>>()?;
        span.extend(ctx, &gens);
        dims[i] = span.dim();
    }
    Ok(dims)
}

/// Compute every `M_i` in `M^λ` and compare `dim M_i/M_{i+1}` with the prediction.
pub fn verify_filtration(kind: FiltrationKind, lambda: &Partition, q: &Quiver, x: i64, cap: u64) -> Result<FiltrationReport> {
    let layers = build_layers(kind, lambda, q, x)?;
    let shape = Multipartition::single(lambda.clone());
    let ctx = ModuleContext::new(&shape, *q, &Multicharge::single(x), cap)?;
    let dims = span_dims(&ctx, &layers)?;
    let mut checks = Vec::with_capacity(layers.len());
    for (i, layer) in layers.iter().enumerate() {
        let next = dims.get(i + 1).copied().unwrap_or(0);
        let quotient = dims[i] - next;
        checks.push(LayerCheck {
            index: i,
            span_dim: dims[i],
            quotient_dim: quotient,
            predicted: layer.dim.to_string(),
            ok: layer.dim.to_usize() == Some(quotient),
        });
    }
    let top = dims[0] - dims.get(1).copied().unwrap_or(0);
    Ok(FiltrationReport {
        shape: lambda.to_string(),
        kind,
        dim: ctx.dim(),
        top_quotient_ok: lambda.count_std().to_usize() == Some(top),
        layers: checks,
    })
}
