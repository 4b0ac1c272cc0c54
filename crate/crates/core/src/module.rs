//! The permutation module `M^λ` on its row-standard basis.
//!
//! The basis vector at a row-standard tableau `T` is `ψ^T z`, where `z` is the
//! cyclic generator and `ψ^T` runs along the chosen reduced word of `w^T`.
//! A generator acts on `ψ^T z` by putting `g·ψ^T e(i^λ)` in normal form with the
//! engine; monomials carrying a `y` vanish on `z`, and each surviving `ψ_w z` is
//! rewritten onto the basis by [`ModuleContext::eval_on_z`].

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::rc::Rc;

use crate::cartan::{Multicharge, Quiver, Residue};
use crate::error::{Error, Result};
use crate::garnir::{garnir_nodes, garnir_word};
use crate::klr::{key_perm, perm_key, relation_instances, Atom, Combo, FixedIdempotent, Lin, Term};
use crate::partitions::{Multipartition, Node};
use crate::scalar::{Rational, Scalar};
use crate::tableaux::{enumerate_row_standard, initial_residues, Tableau};

/// Largest `dim M^λ` accepted unless a different cap is given.
pub const DEFAULT_CAP: u64 = 5000;

type Key = Box<[u8]>;
/// Named relation instances at one idempotent.
type Relations = Vec<(String, Combo, Combo)>;
type Sparse = Vec<(usize, i64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Gen {
    Psi(usize),
    Y(usize),
}

/// Element of `M^λ`: coefficients indexed by basis position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement<F: Scalar = Rational> {
    coeffs: BTreeMap<usize, F>,
}

impl<F: Scalar> Default for ModuleElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> ModuleElement<F> {
    pub fn zero() -> Self {
        ModuleElement { coeffs: BTreeMap::new() }
    }

    pub fn basis(k: usize) -> Self {
        ModuleElement { coeffs: BTreeMap::from([(k, F::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_term(&mut self, k: usize, c: F) {
        if c.is_zero() {
            return;
        }
        let v = match self.coeffs.get(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if v.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ModuleElement { coeffs: self.coeffs.iter().map(|(&k, c)| (k, c.neg())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ModuleElement { coeffs: self.coeffs.iter().map(|(&k, v)| (k, v.mul(c))).collect() }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

/// `M^λ` for a fixed shape, quiver and multicharge.
pub struct ModuleContext {
    shape: Multipartition,
    quiver: Quiver,
    charge: Multicharge,
    i_lambda: Vec<Residue>,
    basis: Vec<Tableau>,
    keys: Vec<Key>,
    index: HashMap<Key, usize>,
    weight_id: Vec<usize>,
    weights: Vec<Vec<Residue>>,
    // same_row[p]: reading positions p-1 and p lie in one row
    same_row: Vec<bool>,
    engine: RefCell<FixedIdempotent>,
    on_z: RefCell<HashMap<Key, Rc<Sparse>>>,
    actions: RefCell<HashMap<(Gen, usize), Rc<Sparse>>>,
    relations: RefCell<HashMap<usize, Rc<Relations>>>,
}

impl ModuleContext {
    /// Fails with [`Error::CapExceeded`] when `dim M^λ > cap`.
    pub fn new(shape: &Multipartition, quiver: Quiver, charge: &Multicharge, cap: u64) -> Result<Self> {
        shape.check_level(charge)?;
        let dim = shape.dim_perm();
        if dim > cap.into() {
            return Err(Error::CapExceeded { dim: dim.to_string(), cap });
        }
        if shape.size() > 255 {
            return Err(Error::Precondition("shapes of size above 255 are not supported".into()));
        }
        let i_lambda = initial_residues(shape, &quiver, charge);
        let basis = enumerate_row_standard(shape);
        let keys: Vec<Key> = basis.iter().map(|t| perm_key(t.perm())).collect();
        let index = keys.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut ids: HashMap<Vec<Residue>, usize> = HashMap::new();
        let mut weights = Vec::new();
        let weight_id = basis
            .iter()
            .map(|t| {
                let j = t.perm().act_on(&i_lambda);
                *ids.entry(j.clone()).or_insert_with(|| {
                    weights.push(j);
                    weights.len() - 1
                })
            })
            .collect();
        let nodes = shape.diagram();
        let mut same_row = vec![false; shape.size().max(1)];
        for p in 1..nodes.len() {
            same_row[p] = nodes[p - 1].comp == nodes[p].comp && nodes[p - 1].row == nodes[p].row;
        }
        Ok(ModuleContext {
            shape: shape.clone(),
            quiver,
            charge: charge.clone(),
            engine: RefCell::new(FixedIdempotent::new(quiver, i_lambda.clone())),
            i_lambda,
            basis,
            keys,
            index,
            weight_id,
            weights,
            same_row,
            on_z: RefCell::new(HashMap::new()),
            actions: RefCell::new(HashMap::new()),
            relations: RefCell::new(HashMap::new()),
        })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn i_lambda(&self) -> &[Residue] {
        &self.i_lambda
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn tableau(&self, k: usize) -> &Tableau {
        &self.basis[k]
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(&perm_key(t.perm())).copied()
    }

    /// Residue sequence of the basis vector `k`.
    pub fn weight(&self, k: usize) -> &[Residue] {
        &self.weights[self.weight_id[k]]
    }

    /// Number of distinct weights among basis vectors.
    pub fn weight_count(&self) -> usize {
        self.weights.len()
    }

    /// The cyclic generator `z`.
    pub fn z<F: Scalar>(&self) -> ModuleElement<F> {
        ModuleElement::basis(self.index[&perm_key(&crate::perm::Perm::identity(self.n()))])
    }

    fn zero_exponents(t: &Term) -> bool {
        t.a.iter().all(|&x| x == 0)
    }

    /// `ψ_w z` on the basis, for any permutation `w`.
    ///
    /// If `w·T^λ` is not row-standard, `w` has a right descent `p` inside a row,
    /// and `ψ_{w s_p} ψ_p` expands to `ψ_w` plus shorter terms; since `ψ_p z = 0`
    /// the shorter terms give `-ψ_w z`.
    pub fn eval_on_z(&self, w: &[u8]) -> Rc<Sparse> {
        if let Some(&k) = self.index.get(w) {
            return Rc::new(vec![(k, 1)]);
        }
        let hit = self.on_z.borrow().get(w).cloned();
        if let Some(h) = hit {
            return h;
        }
        let n = self.n();
        let p = (1..n)
            .find(|&p| self.same_row[p] && w[p - 1] > w[p])
            .expect("a permutation outside the basis has a descent inside a row");
        let mut u = w.to_vec();
        u.swap(p - 1, p);
        let word = key_perm(&u).chosen_word();
        let lin = {
            let mut eng = self.engine.borrow_mut();
            let mut sp: Vec<u8> = (0..n as u8).collect();
            sp.swap(p - 1, p);
            let mut cur = Lin::from([(Term { w: sp.into(), a: vec![0; n].into() }, 1)]);
            for &s in word.indices.iter().rev() {
                cur = eng.apply_psi(s, &cur);
                cur.retain(|t, _| Self::zero_exponents(t));
            }
            cur
        };
        let mut acc: HashMap<usize, i64> = HashMap::new();
        let mut lead = 0;
        for (t, c) in &lin {
            if *t.w == *w {
                lead = *c;
                continue;
            }
            for &(k, v) in self.eval_on_z(&t.w).iter() {
                *acc.entry(k).or_insert(0) -= c.checked_mul(v).expect("coefficient overflow");
            }
        }
        assert_eq!(lead, 1, "leading coefficient of a reduced word must be 1");
        let out = Rc::new(sorted(acc));
        self.on_z.borrow_mut().insert(w.into(), out.clone());
        out
    }

    fn act_basis(&self, g: Gen, k: usize) -> Rc<Sparse> {
        let hit = self.actions.borrow().get(&(g, k)).cloned();
        if let Some(h) = hit {
            return h;
        }
        let lin = {
            let mut eng = self.engine.borrow_mut();
            match g {
                Gen::Psi(s) => eng.mul_psi(s, &self.keys[k]),
                Gen::Y(r) => eng.mul_y(r, &self.keys[k]),
            }
        };
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (t, c) in lin.iter().filter(|(t, _)| Self::zero_exponents(t)) {
            for &(k2, v) in self.eval_on_z(&t.w).iter() {
                *acc.entry(k2).or_insert(0) += c.checked_mul(v).expect("coefficient overflow");
            }
        }
        let out = Rc::new(sorted(acc));
        self.actions.borrow_mut().insert((g, k), out.clone());
        out
    }

    fn check_atom(&self, atom: &Atom) -> Result<()> {
        let n = self.n();
        let ok = match atom {
            Atom::E(j) => j.len() == n,
            Atom::Y(r) => (1..=n).contains(r),
            Atom::Psi(r) => *r >= 1 && *r < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Incompatible(format!("{atom} on a module with n = {n}")))
        }
    }

    fn act_gen<F: Scalar>(&self, g: Gen, v: &ModuleElement<F>) -> ModuleElement<F> {
        let mut out = ModuleElement::zero();
        for (k, c) in v.iter() {
            for &(k2, x) in self.act_basis(g, k).iter() {
                out.add_term(k2, c.mul(&F::from_i64(x)));
            }
        }
        out
    }

    /// Left action of one generator.
    pub fn act<F: Scalar>(&self, atom: &Atom, v: &ModuleElement<F>) -> Result<ModuleElement<F>> {
        self.check_atom(atom)?;
        Ok(match atom {
            Atom::E(j) => ModuleElement {
                coeffs: v
                    .coeffs
                    .iter()
                    .filter(|(&k, _)| self.weight(k) == j.as_slice())
                    .map(|(&k, c)| (k, c.clone()))
                    .collect(),
            },
            Atom::Psi(s) => self.act_gen(Gen::Psi(*s), v),
            Atom::Y(r) => self.act_gen(Gen::Y(*r), v),
        })
    }

    /// `atoms[0] ⋯ atoms[k-1] · v`.
    pub fn apply_word<F: Scalar>(&self, atoms: &[Atom], v: &ModuleElement<F>) -> Result<ModuleElement<F>> {
        let mut cur = v.clone();
        for a in atoms.iter().rev() {
            cur = self.act(a, &cur)?;
        }
        Ok(cur)
    }

    /// `ψ_{w_1} ⋯ ψ_{w_k} · v`.
    pub fn apply_psi_word<F: Scalar>(&self, word: &[usize], v: &ModuleElement<F>) -> Result<ModuleElement<F>> {
        let atoms: Vec<Atom> = word.iter().map(|&s| Atom::Psi(s)).collect();
        self.apply_word(&atoms, v)
    }

    /// The word applied to `z`.
    pub fn eval_word<F: Scalar>(&self, atoms: &[Atom]) -> Result<ModuleElement<F>> {
        self.apply_word(atoms, &self.z())
    }

    /// `ψ^{G^A} e(i^λ) z` for the Garnir node `A`.
    pub fn garnir_element<F: Scalar>(&self, node: Node) -> Result<ModuleElement<F>> {
        let word = garnir_word(node, &self.shape)?;
        let mut atoms: Vec<Atom> = word.indices.iter().map(|&s| Atom::Psi(s)).collect();
        atoms.push(Atom::E(self.i_lambda.clone()));
        self.eval_word(&atoms)
    }

    pub fn garnir_elements<F: Scalar>(&self) -> Vec<ModuleElement<F>> {
        garnir_nodes(&self.shape)
            .into_iter()
            .map(|a| self.garnir_element(a).expect("garnir node"))
            .collect()
    }

    /// Basis of the submodule generated by `gens`.
    pub fn span<F: Scalar>(&self, gens: &[ModuleElement<F>]) -> SpanBasis<F> {
        let mut s = SpanBasis::new();
        s.extend(self, gens);
        s
    }

    /// `dim M^λ` minus the dimension of the span of all Garnir elements.
    pub fn specht_quotient_dim(&self) -> usize {
        let gens: Vec<ModuleElement<Rational>> = self.garnir_elements();
        self.dim() - self.span(&gens).dim()
    }

    fn relations_at(&self, weight: usize) -> Rc<Vec<(String, Combo, Combo)>> {
        let hit = self.relations.borrow().get(&weight).cloned();
        if let Some(h) = hit {
            return h;
        }
        let rel = Rc::new(relation_instances(&self.quiver, &self.weights[weight]));
        self.relations.borrow_mut().insert(weight, rel.clone());
        rel
    }

    fn eval_combo(&self, combo: &Combo, v: &ModuleElement<Rational>) -> Result<ModuleElement<Rational>> {
        let mut acc = ModuleElement::zero();
        for (c, w) in combo {
            if *c != 0 {
                acc = acc.add(&self.apply_word(w, v)?.scale(&Rational::from_i64(*c)));
            }
        }
        Ok(acc)
    }

    /// Every defining relation of `R_α`, applied to every basis vector.
    pub fn check_defining_relations(&self) -> RelationReport {
        let mut report = RelationReport::default();
        for k in 0..self.dim() {
            let v = ModuleElement::basis(k);
            for (name, lhs, rhs) in self.relations_at(self.weight_id[k]).iter() {
                report.checked += 1;
                let a = self.eval_combo(lhs, &v).expect("atoms sized for n");
                let b = self.eval_combo(rhs, &v).expect("atoms sized for n");
                if a != b {
                    report.violations.push(format!(
                        "{name} on {}: {} vs {}",
                        self.basis[k],
                        self.render(&a),
                        self.render(&b)
                    ));
                }
            }
        }
        report
    }

    /// Text form such as `2·[1,3/2] - [2,3/1]`.
    pub fn render<F: Scalar>(&self, v: &ModuleElement<F>) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (pos, (k, c)) in v.iter().enumerate() {
            let txt = c.to_string();
            let (neg, mag) = match txt.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, txt),
            };
            if pos == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                let _ = write!(s, "{mag}·");
            }
            let _ = write!(s, "[{}]", self.basis[k]);
        }
        s
    }

    /// Number of memoised actions and evaluations, for diagnostics.
    pub fn memo_size(&self) -> usize {
        self.on_z.borrow().len() + self.actions.borrow().len() + self.engine.borrow().memo_size()
    }
}

fn sorted(acc: HashMap<usize, i64>) -> Sparse {
    let mut v: Sparse = acc.into_iter().filter(|&(_, c)| c != 0).collect();
    v.sort_unstable();
    v
}

/// Outcome of [`ModuleContext::check_defining_relations`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Row<F> = Vec<(usize, F)>;

/// Semi-echelon basis of a submodule, kept separately in each weight space.
///
/// Every row is normalised so that its smallest basis index (the pivot) has
/// coefficient one, and no two rows share a pivot.
#[derive(Clone, Debug)]
pub struct SpanBasis<F: Scalar = Rational> {
    rows: HashMap<usize, BTreeMap<usize, Row<F>>>,
    dim: usize,
}

impl<F: Scalar> Default for SpanBasis<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Scalar> SpanBasis<F> {
    pub fn new() -> Self {
        SpanBasis { rows: HashMap::new(), dim: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Pivot positions in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.values().flat_map(|m| m.keys().copied()).collect();
        p.sort_unstable();
        p
    }

    /// Rows as elements, ordered by pivot.
    pub fn rows(&self) -> Vec<ModuleElement<F>> {
        let mut all: Vec<(usize, &Row<F>)> =
            self.rows.values().flat_map(|m| m.iter().map(|(&p, r)| (p, r))).collect();
        all.sort_by_key(|(p, _)| *p);
        all.into_iter()
            .map(|(_, r)| ModuleElement { coeffs: r.iter().cloned().collect() })
            .collect()
    }

    fn reduce(&self, weight: usize, mut v: BTreeMap<usize, F>) -> BTreeMap<usize, F> {
        let Some(rows) = self.rows.get(&weight) else {
            return v;
        };
        let mut cursor = 0;
        while let Some((&k, c)) = v.range(cursor..).next() {
            if let Some(row) = rows.get(&k) {
                let c = c.clone();
                for (j, x) in row {
                    let nv = v.get(j).cloned().unwrap_or_else(F::zero).sub(&c.mul(x));
                    if nv.is_zero() {
                        v.remove(j);
                    } else {
                        v.insert(*j, nv);
                    }
                }
            }
            cursor = k + 1;
        }
        v
    }

    fn insert(&mut self, weight: usize, v: BTreeMap<usize, F>) -> Option<Row<F>> {
        let v = self.reduce(weight, v);
        let (&pivot, lead) = v.iter().next()?;
        let inv = lead.inv().expect("nonzero pivot");
        let row: Row<F> = v.iter().map(|(&k, c)| (k, c.mul(&inv))).collect();
        self.rows.entry(weight).or_default().insert(pivot, row.clone());
        self.dim += 1;
        Some(row)
    }

    fn split(ctx: &ModuleContext, v: &ModuleElement<F>) -> HashMap<usize, BTreeMap<usize, F>> {
        let mut parts: HashMap<usize, BTreeMap<usize, F>> = HashMap::new();
        for (k, c) in v.iter() {
            parts.entry(ctx.weight_id[k]).or_default().insert(k, c.clone());
        }
        parts
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, ctx: &ModuleContext, v: &ModuleElement<F>) -> bool {
        Self::split(ctx, v).into_iter().all(|(w, part)| self.reduce(w, part).is_empty())
    }

    /// Enlarge to the submodule generated by the current span and `gens`.
    pub fn extend(&mut self, ctx: &ModuleContext, gens: &[ModuleElement<F>]) {
        let n = ctx.n();
        let mut queue: VecDeque<Row<F>> = VecDeque::new();
        for g in gens {
            for (w, part) in Self::split(ctx, g) {
                if let Some(row) = self.insert(w, part) {
                    queue.push_back(row);
                }
            }
        }
        let generators: Vec<Gen> =
            (1..n).map(Gen::Psi).chain((1..=n).map(Gen::Y)).collect();
        while let Some(row) = queue.pop_front() {
            for &g in &generators {
                let mut image: BTreeMap<usize, F> = BTreeMap::new();
                for (k, c) in &row {
                    for &(k2, x) in ctx.act_basis(g, *k).iter() {
                        let e = image.entry(k2).or_insert_with(F::zero);
                        *e = e.add(&c.mul(&F::from_i64(x)));
                    }
                }
                image.retain(|_, c| !c.is_zero());
                let Some(&first) = image.keys().next() else {
                    continue;
                };
                if let Some(new_row) = self.insert(ctx.weight_id[first], image) {
                    queue.push_back(new_row);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, Partition};
    use crate::scalar::Fp;

    fn ctx(shape: &str, q: Quiver) -> ModuleContext {
        let shape = Multipartition::parse(shape).unwrap();
        let kappa = Multicharge::new(vec![0; shape.level()]);
        ModuleContext::new(&shape, q, &kappa, DEFAULT_CAP).unwrap()
    }

    fn e3() -> Quiver {
        Quiver::affine(3).unwrap()
    }

    #[test]
    fn generator_relations_on_z() {
        let m = ctx("4,2", e3());
        let z: ModuleElement = m.z();
        assert_eq!(m.act(&Atom::E(m.i_lambda().to_vec()), &z).unwrap(), z);
        for r in 1..=6 {
            assert!(m.act(&Atom::Y(r), &z).unwrap().is_zero());
        }
        for r in [1, 2, 3, 5] {
            assert!(m.act(&Atom::Psi(r), &z).unwrap().is_zero());
        }
        let v = m.act(&Atom::Psi(4), &z).unwrap();
        let t = Tableau::parse("1,2,3,5/4,6").unwrap();
        assert_eq!(v, ModuleElement::basis(m.index_of(&t).unwrap()));
        let res: Vec<i64> = m.weight(m.index_of(&t).unwrap()).iter().map(|r| r.0).collect();
        assert_eq!(res, vec![0, 1, 2, 2, 0, 0]);
    }

    #[test]
    fn chosen_words_reach_every_basis_vector() {
        for n in 1..=6 {
            for p in partitions_of(n) {
                let m = ctx(&p.to_string(), Quiver::linear());
                for (k, t) in m.basis().iter().enumerate() {
                    let mut atoms: Vec<Atom> =
                        t.chosen_word().unwrap().indices.iter().map(|&s| Atom::Psi(s)).collect();
                    atoms.push(Atom::E(m.i_lambda().to_vec()));
                    let v: ModuleElement = m.eval_word(&atoms).unwrap();
                    assert_eq!(v, ModuleElement::basis(k), "{p} {t}");
                }
            }
        }
    }

    #[test]
    fn z_generates_everything() {
        for q in [e3(), Quiver::affine(4).unwrap(), Quiver::linear()] {
            for n in 1..=5 {
                for p in partitions_of(n) {
                    let m = ctx(&p.to_string(), q);
                    let s = m.span::<Rational>(&[m.z()]);
                    assert_eq!(s.dim(), m.dim(), "{q} {p}");
                }
            }
        }
    }

    #[test]
    fn quotient_dimensions() {
        assert_eq!(ctx("2,1", e3()).specht_quotient_dim(), 2);
        assert_eq!(ctx("2,2", Quiver::linear()).specht_quotient_dim(), 2);
        assert_eq!(ctx("4,2", e3()).specht_quotient_dim(), 9);
        assert_eq!(ctx("3,1,1", Quiver::affine(4).unwrap()).specht_quotient_dim(), 6);
        assert_eq!(ctx("3", e3()).specht_quotient_dim(), 1);
        let m = ctx("2,1", e3());
        assert_eq!(m.span::<Rational>(&m.garnir_elements()).dim(), 1);
        assert_eq!(m.span::<Rational>(&[]).dim(), 0);
    }

    #[test]
    fn prime_field_spans_agree() {
        let m = ctx("3,2,1", e3());
        let a = m.span::<Rational>(&m.garnir_elements());
        let b = m.span::<Fp>(&m.garnir_elements());
        assert_eq!(a.dim(), b.dim());
        assert_eq!(a.pivots(), b.pivots());
    }

    #[test]
    fn relations_on_small_modules() {
        assert!(ctx("2,1", e3()).check_defining_relations().passed());
        assert!(ctx("2,2", Quiver::linear()).check_defining_relations().passed());
        let one = ctx("1", e3()).check_defining_relations();
        assert!(one.passed());
    }

    #[test]
    fn e_acts_diagonally() {
        let m = ctx("3,2", e3());
        for k in 0..m.dim() {
            let v: ModuleElement = ModuleElement::basis(k);
            for j in 0..m.weight_count() {
                let w = m.weights[j].clone();
                let got = m.act(&Atom::E(w.clone()), &v).unwrap();
                if w == m.weight(k) {
                    assert_eq!(got, v);
                } else {
                    assert!(got.is_zero());
                }
            }
        }
    }

    #[test]
    fn span_membership_and_rendering() {
        let m = ctx("2,1", Quiver::linear());
        let g: ModuleElement = m.garnir_element(Node::new(1, 1, 1)).unwrap();
        let s = m.span(std::slice::from_ref(&g));
        assert!(s.contains(&m, &g));
        assert!(!s.contains(&m, &m.z()));
        assert_eq!(m.render(&ModuleElement::<Rational>::zero()), "0");
        assert!(m.render(&g).contains('['));
        assert!(m.garnir_element::<Rational>(Node::new(1, 2, 1)).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let shape = Multipartition::single(Partition::new(vec![1; 8]).unwrap());
        let err = ModuleContext::new(&shape, Quiver::linear(), &Multicharge::single(0), DEFAULT_CAP);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }
}
