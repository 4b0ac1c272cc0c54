//! Normal-form arithmetic in the KLR algebra `R_α`.
//!
//! Every element is written in the basis `ψ_w y^a e(i)`, where `ψ_w` is the
//! product of `ψ` generators along [`Perm::chosen_word`]. The idempotent on the
//! right never changes while a word is multiplied out, so all rewriting runs
//! inside a [`FixedIdempotent`], which memoises `ψ_s·ψ_w e(i)` and
//! `y_r·ψ_w e(i)` with integer coefficients.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::cartan::{Adjacency, Multicharge, PositiveRoot, Quiver, Residue};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::scalar::{Rational, Scalar};

/// One generator of `R_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    E(Vec<Residue>),
    Y(usize),
    Psi(usize),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::E(i) => write!(f, "e({})", join(i)),
            Atom::Y(r) => write!(f, "y{r}"),
            Atom::Psi(r) => write!(f, "ψ{r}"),
        }
    }
}

/// `Q_{i,j}(u, v)` as one of the four shapes it can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QPoly {
    Zero,
    One,
    /// `v - u`, for `i -> j`.
    SecondMinusFirst,
    /// `u - v`, for `i <- j`.
    FirstMinusSecond,
}

pub fn q_poly(q: &Quiver, i: Residue, j: Residue) -> QPoly {
    match q.adjacency(i, j) {
        Adjacency::Equal => QPoly::Zero,
        Adjacency::Distant => QPoly::One,
        Adjacency::ArrowTo => QPoly::SecondMinusFirst,
        Adjacency::ArrowFrom => QPoly::FirstMinusSecond,
    }
}

/// Constant term of the braid relation at `(i, j, k)`.
pub fn braid_correction(q: &Quiver, i: Residue, j: Residue, k: Residue) -> i64 {
    if i != k {
        return 0;
    }
    match q.adjacency(i, j) {
        Adjacency::ArrowTo => 1,
        Adjacency::ArrowFrom => -1,
        _ => 0,
    }
}

/// A basis monomial `ψ_w y^a e(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KlrMonomial {
    pub idempotent: Vec<Residue>,
    pub perm: Perm,
    pub exponents: Vec<u32>,
}

impl KlrMonomial {
    pub fn idempotent(i: Vec<Residue>) -> Self {
        let n = i.len();
        KlrMonomial { idempotent: i, perm: Perm::identity(n), exponents: vec![0; n] }
    }

    /// Left idempotent `w·i`.
    pub fn left_idempotent(&self) -> Vec<Residue> {
        self.perm.act_on(&self.idempotent)
    }
}

impl fmt::Display for KlrMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.perm.is_identity() {
            parts.push(format!("ψ[{}]", join(&self.perm.chosen_word().indices)));
        }
        if self.exponents.iter().any(|&a| a > 0) {
            parts.push(format!("y^({})", join(&self.exponents)));
        }
        parts.push(format!("e({})", join(&self.idempotent)));
        write!(f, "{}", parts.join(" "))
    }
}

/// Degree of `ψ_w y^a e(i)`.
pub fn monomial_degree(q: &Quiver, m: &KlrMonomial) -> i64 {
    let mut deg: i64 = 2 * m.exponents.iter().map(|&a| a as i64).sum::<i64>();
    let mut j = m.idempotent.clone();
    for &s in m.perm.chosen_word().indices.iter().rev() {
        deg -= q.cartan_entry(j[s - 1], j[s]);
        j.swap(s - 1, s);
    }
    deg
}

/// A finite combination of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlrElement<F: Scalar = Rational> {
    n: usize,
    terms: BTreeMap<KlrMonomial, F>,
}

impl<F: Scalar> KlrElement<F> {
    pub fn zero(n: usize) -> Self {
        KlrElement { n, terms: BTreeMap::new() }
    }

    pub fn idempotent(i: Vec<Residue>) -> Self {
        let mut out = Self::zero(i.len());
        out.terms.insert(KlrMonomial::idempotent(i), F::one());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KlrMonomial, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: KlrMonomial, c: F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(F::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::from_i64(-1)))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    /// The cyclotomic relation: drop monomials with `a_1 ≥ (Λ, α_{i_1})`.
    pub fn cyclotomic_reduce(&self, q: &Quiver, kappa: &Multicharge) -> Self {
        let weight = q.weight_of_multicharge(kappa);
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m.idempotent.is_empty() {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let bound = weight.get(&m.idempotent[0]).copied().unwrap_or(0) as u32;
            if m.exponents[0] < bound {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Display for KlrElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mag != "1" {
                write!(f, "{mag}·")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

type PermKey = Box<[u8]>;
type Exps = Box<[u16]>;

/// `ψ_w y^a` with the right idempotent implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub w: PermKey,
    pub a: Exps,
}

/// Integer combination of terms, all with the same right idempotent.
pub type Lin = HashMap<Term, i64>;

fn add_into(acc: &mut Lin, t: Term, c: i64) {
    use std::collections::hash_map::Entry;
    if c == 0 {
        return;
    }
    match acc.entry(t) {
        Entry::Occupied(mut e) => {
            let v = e.get().checked_add(c).expect("coefficient overflow");
            if v == 0 {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn mul_c(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

fn left_mul_key(w: &[u8], r: usize) -> PermKey {
    let (a, b) = ((r - 1) as u8, r as u8);
    w.iter().map(|&v| if v == a { b } else if v == b { a } else { v }).collect()
}

fn is_left_descent_key(w: &[u8], r: usize) -> bool {
    let (a, b) = ((r - 1) as u8, r as u8);
    let pa = w.iter().position(|&v| v == a).expect("value");
    let pb = w.iter().position(|&v| v == b).expect("value");
    pa > pb
}

fn max_left_descent_key(w: &[u8]) -> Option<usize> {
    let n = w.len();
    let mut inv = vec![0u8; n];
    for (p, &v) in w.iter().enumerate() {
        inv[v as usize] = p as u8;
    }
    (1..n).rev().find(|&r| inv[r - 1] > inv[r])
}

fn act_key<T: Copy>(w: &[u8], seq: &[T]) -> Vec<T> {
    let mut out = seq.to_vec();
    for (p, &x) in seq.iter().enumerate() {
        out[w[p] as usize] = x;
    }
    out
}

pub fn perm_key(p: &Perm) -> PermKey {
    p.images().iter().map(|&v| v as u8).collect()
}

pub fn key_perm(k: &[u8]) -> Perm {
    Perm::from_images(k.iter().map(|&v| v as usize).collect()).expect("valid key")
}

/// Rewriting with a fixed right idempotent `e(i)`.
pub struct FixedIdempotent {
    quiver: Quiver,
    i: Vec<Residue>,
    n: usize,
    psi_memo: HashMap<(usize, PermKey), Rc<Lin>>,
    y_memo: HashMap<(usize, PermKey), Rc<Lin>>,
}

impl FixedIdempotent {
    pub fn new(quiver: Quiver, i: Vec<Residue>) -> Self {
        let n = i.len();
        assert!(n < 256, "sequences longer than 255 are not supported");
        FixedIdempotent { quiver, i, n, psi_memo: HashMap::new(), y_memo: HashMap::new() }
    }

    pub fn idempotent(&self) -> &[Residue] {
        &self.i
    }

    pub fn identity_term(&self) -> Term {
        Term { w: (0..self.n as u8).collect(), a: vec![0; self.n].into() }
    }

    fn mono(&self, w: PermKey) -> Lin {
        let mut l = Lin::new();
        l.insert(Term { w, a: vec![0; self.n].into() }, 1);
        l
    }

    /// Idempotent to the left of `ψ_w e(i)`.
    fn idem_after(&self, w: &[u8]) -> Vec<Residue> {
        act_key(w, &self.i)
    }

    /// `ψ_s ψ_w e(i)`.
    pub fn mul_psi(&mut self, s: usize, w: &[u8]) -> Rc<Lin> {
        let key = (s, PermKey::from(w));
        if let Some(hit) = self.psi_memo.get(&key) {
            return hit.clone();
        }
        let out = if !is_left_descent_key(w, s) {
            let v = left_mul_key(w, s);
            let t = max_left_descent_key(&v).expect("nonidentity");
            if t == s {
                self.mono(v)
            } else if t.abs_diff(s) >= 2 {
                // ψ_w = ψ_t ψ_x and ψ_s commutes past ψ_t
                let x = left_mul_key(w, t);
                let inner = self.mul_psi(s, &x);
                self.apply_psi(t, &inner)
            } else {
                // ψ_w = ψ_t ψ_{sx}; ψ_{sx} = ψ_s ψ_x - d1; braid ψ_sψ_tψ_s
                let x = left_mul_key(&left_mul_key(w, t), s);
                let sx = left_mul_key(&x, s);
                let tx = self.mul_psi(t, &x);
                let stx = self.apply_psi(s, &tx);
                let mut out = self.apply_psi(t, &stx);
                let j = self.idem_after(&x);
                let r = s.min(t);
                let q3 = braid_correction(&self.quiver, j[r - 1], j[r], j[r + 1]);
                let c = if s < t { q3 } else { -q3 };
                for (term, v) in self.mono(x.clone()) {
                    add_into(&mut out, term, mul_c(c, v));
                }
                let mut d1 = (*self.mul_psi(s, &x)).clone();
                for (term, v) in self.mono(sx) {
                    add_into(&mut d1, term, -v);
                }
                if !d1.is_empty() {
                    let td1 = self.apply_psi(t, &d1);
                    let std1 = self.apply_psi(s, &td1);
                    for (term, v) in std1 {
                        add_into(&mut out, term, -v);
                    }
                }
                out
            }
        } else {
            let u = left_mul_key(w, s);
            let t = max_left_descent_key(w).expect("nonidentity");
            let mut out = self.square(s, &u);
            if t != s {
                // ψ_w = ψ_s ψ_u - rest
                let mut rest = (*self.mul_psi(s, &u)).clone();
                for (term, v) in self.mono(PermKey::from(w)) {
                    add_into(&mut rest, term, -v);
                }
                if !rest.is_empty() {
                    for (term, v) in self.apply_psi(s, &rest) {
                        add_into(&mut out, term, -v);
                    }
                }
            }
            out
        };
        let out = Rc::new(out);
        self.psi_memo.insert(key, out.clone());
        out
    }

    /// `ψ_s² ψ_u e(i) = Q(y_s, y_{s+1}) ψ_u e(i)`.
    fn square(&mut self, s: usize, u: &[u8]) -> Lin {
        let j = self.idem_after(u);
        match q_poly(&self.quiver, j[s - 1], j[s]) {
            QPoly::Zero => Lin::new(),
            QPoly::One => self.mono(PermKey::from(u)),
            QPoly::SecondMinusFirst | QPoly::FirstMinusSecond => {
                let sign = if q_poly(&self.quiver, j[s - 1], j[s]) == QPoly::SecondMinusFirst { 1 } else { -1 };
                let hi = self.mul_y(s + 1, u);
                let lo = self.mul_y(s, u);
                let mut out = Lin::new();
                for (t, v) in hi.iter() {
                    add_into(&mut out, t.clone(), sign * v);
                }
                for (t, v) in lo.iter() {
                    add_into(&mut out, t.clone(), -sign * v);
                }
                out
            }
        }
    }

    /// `y_r ψ_w e(i)`.
    pub fn mul_y(&mut self, r: usize, w: &[u8]) -> Rc<Lin> {
        let key = (r, PermKey::from(w));
        if let Some(hit) = self.y_memo.get(&key) {
            return hit.clone();
        }
        let out = match max_left_descent_key(w) {
            None => {
                let mut a = vec![0u16; self.n];
                a[r - 1] = 1;
                let mut l = Lin::new();
                l.insert(Term { w: PermKey::from(w), a: a.into() }, 1);
                l
            }
            Some(s1) => {
                let w1 = left_mul_key(w, s1);
                let j = self.idem_after(&w1);
                let delta = i64::from(j[s1 - 1] == j[s1]);
                if r != s1 && r != s1 + 1 {
                    let inner = self.mul_y(r, &w1);
                    self.apply_psi(s1, &inner)
                } else if r == s1 + 1 {
                    let inner = self.mul_y(s1, &w1);
                    let mut out = self.apply_psi(s1, &inner);
                    if delta != 0 {
                        for (t, v) in self.mono(w1) {
                            add_into(&mut out, t, v);
                        }
                    }
                    out
                } else {
                    let inner = self.mul_y(s1 + 1, &w1);
                    let mut out = self.apply_psi(s1, &inner);
                    if delta != 0 {
                        for (t, v) in self.mono(w1) {
                            add_into(&mut out, t, -v);
                        }
                    }
                    out
                }
            }
        };
        let out = Rc::new(out);
        self.y_memo.insert(key, out.clone());
        out
    }

    fn shifted(base: &Lin, a: &[u16], c: i64, out: &mut Lin) {
        for (t, v) in base {
            let exps: Exps = t.a.iter().zip(a).map(|(x, y)| x + y).collect();
            add_into(out, Term { w: t.w.clone(), a: exps }, mul_c(*v, c));
        }
    }

    pub fn apply_psi(&mut self, s: usize, x: &Lin) -> Lin {
        let mut out = Lin::new();
        for (t, c) in x {
            let base = self.mul_psi(s, &t.w);
            Self::shifted(&base, &t.a, *c, &mut out);
        }
        out
    }

    pub fn apply_y(&mut self, r: usize, x: &Lin) -> Lin {
        let mut out = Lin::new();
        for (t, c) in x {
            let base = self.mul_y(r, &t.w);
            Self::shifted(&base, &t.a, *c, &mut out);
        }
        out
    }

    /// Left multiplication by a single generator.
    pub fn apply_atom(&mut self, atom: &Atom, x: &Lin) -> Lin {
        match atom {
            Atom::Psi(s) => self.apply_psi(*s, x),
            Atom::Y(r) => self.apply_y(*r, x),
            Atom::E(j) => x
                .iter()
                .filter(|(t, _)| self.idem_after(&t.w) == *j)
                .map(|(t, c)| (t.clone(), *c))
                .collect(),
        }
    }

    /// `atoms[0] ⋯ atoms[k-1] · x`.
    pub fn apply_word(&mut self, atoms: &[Atom], x: &Lin) -> Lin {
        let mut cur = x.clone();
        for atom in atoms.iter().rev() {
            if cur.is_empty() {
                break;
            }
            cur = self.apply_atom(atom, &cur);
        }
        cur
    }

    pub fn memo_size(&self) -> usize {
        self.psi_memo.len() + self.y_memo.len()
    }
}

/// Entry point for reductions; caches one [`FixedIdempotent`] per right idempotent.
///
/// The caches sit behind a `RefCell`, so an engine is confined to one thread.
pub struct KlrEngine {
    quiver: Quiver,
    n: usize,
    cache: RefCell<HashMap<Vec<Residue>, FixedIdempotent>>,
}

impl KlrEngine {
    pub fn new(quiver: Quiver, n: usize) -> Self {
        KlrEngine { quiver, n, cache: RefCell::new(HashMap::new()) }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_atoms(&self, word: &[Atom]) -> Result<()> {
        for a in word {
            let ok = match a {
                Atom::E(i) => {
                    i.len() == self.n && i.iter().all(|&r| self.quiver.residue(r.0) == r)
                }
                Atom::Y(r) => *r >= 1 && *r <= self.n,
                Atom::Psi(r) => *r >= 1 && *r < self.n,
            };
            if !ok {
                return Err(Error::MalformedWord(format!("{a} with n = {}", self.n)));
            }
        }
        Ok(())
    }

    /// Run `f` with the fixed-idempotent rewriter for `i`.
    pub fn with_fixed<T>(&self, i: &[Residue], f: impl FnOnce(&mut FixedIdempotent) -> T) -> T {
        let mut cache = self.cache.borrow_mut();
        let fixed = cache
            .entry(i.to_vec())
            .or_insert_with(|| FixedIdempotent::new(self.quiver, i.to_vec()));
        f(fixed)
    }

    fn to_element<F: Scalar>(&self, i: &[Residue], lin: &Lin) -> KlrElement<F> {
        let mut out = KlrElement::zero(self.n);
        for (t, c) in lin {
            let m = KlrMonomial {
                idempotent: i.to_vec(),
                perm: key_perm(&t.w),
                exponents: t.a.iter().map(|&x| x as u32).collect(),
            };
            out.add_term(m, F::from_i64(*c));
        }
        out
    }

    /// Normal form of the product of `word`. Without any `E` atom the word is
    /// multiplied by `Σ_{i ∈ I^α} e(i)`, which needs `alpha`.
    pub fn reduce<F: Scalar>(&self, word: &[Atom], alpha: Option<&PositiveRoot>) -> Result<KlrElement<F>> {
        self.check_atoms(word)?;
        let starts: Vec<Vec<Residue>> = match word.iter().rposition(|a| matches!(a, Atom::E(_))) {
            Some(p) => {
                let Atom::E(j) = &word[p] else { unreachable!() };
                let mut j = j.clone();
                for a in &word[p + 1..] {
                    if let Atom::Psi(s) = a {
                        j.swap(s - 1, *s);
                    }
                }
                vec![j]
            }
            None => {
                let alpha = alpha.ok_or_else(|| {
                    Error::MalformedWord("word without idempotent needs a weight".into())
                })?;
                if alpha.height() != self.n {
                    return Err(Error::SizeMismatch(alpha.height(), self.n));
                }
                orbit(alpha)
            }
        };
        let mut out = KlrElement::zero(self.n);
        for i in starts {
            let lin = self.with_fixed(&i, |fx| {
                let start = Lin::from([(fx.identity_term(), 1)]);
                fx.apply_word(word, &start)
            });
            out = out.add(&self.to_element(&i, &lin));
        }
        Ok(out)
    }

    /// Bilinear product of two normal forms.
    pub fn multiply<F: Scalar>(&self, x: &KlrElement<F>, y: &KlrElement<F>) -> Result<KlrElement<F>> {
        if x.n != self.n || y.n != self.n {
            return Err(Error::Incompatible(format!("sizes {} and {} vs {}", x.n, y.n, self.n)));
        }
        let mut out = KlrElement::zero(self.n);
        for (my, cy) in y.terms() {
            let left = my.left_idempotent();
            let start = Term {
                w: perm_key(&my.perm),
                a: my.exponents.iter().map(|&a| a as u16).collect(),
            };
            for (mx, cx) in x.terms() {
                if mx.idempotent != left {
                    continue;
                }
                let mut atoms: Vec<Atom> =
                    mx.perm.chosen_word().indices.iter().map(|&s| Atom::Psi(s)).collect();
                for (r, &a) in mx.exponents.iter().enumerate() {
                    atoms.extend(std::iter::repeat_n(Atom::Y(r + 1), a as usize));
                }
                let lin = self.with_fixed(&my.idempotent, |fx| {
                    fx.apply_word(&atoms, &Lin::from([(start.clone(), 1)]))
                });
                let part: KlrElement<F> = self.to_element(&my.idempotent, &lin);
                out = out.add(&part.scale(&cx.mul(cy)));
            }
        }
        Ok(out)
    }

    /// Number of memoised products, for diagnostics.
    pub fn memo_size(&self) -> usize {
        self.cache.borrow().values().map(|f| f.memo_size()).sum()
    }
}

/// All sequences with the given content, in lexicographic order.
pub fn orbit(alpha: &PositiveRoot) -> Vec<Vec<Residue>> {
    let mut pool: Vec<(Residue, usize)> = alpha.multiplicities().iter().map(|(&r, &m)| (r, m)).collect();
    let n = alpha.height();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(pool: &mut [(Residue, usize)], n: usize, cur: &mut Vec<Residue>, out: &mut Vec<Vec<Residue>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..pool.len() {
            if pool[k].1 == 0 {
                continue;
            }
            pool[k].1 -= 1;
            cur.push(pool[k].0);
            go(pool, n, cur, out);
            cur.pop();
            pool[k].1 += 1;
        }
    }
    go(&mut pool, n, &mut cur, &mut out);
    out
}

/// Integer combination of words in the generators.
pub type Combo = Vec<(i64, Vec<Atom>)>;

/// Every defining relation whose right-hand idempotent is `e(j)`, as a pair of
/// integer combinations of words. Both sides of each pair are equal in `R_α`.
pub fn relation_instances(q: &Quiver, j: &[Residue]) -> Vec<(String, Combo, Combo)> {
    let n = j.len();
    let e = |v: &[Residue]| Atom::E(v.to_vec());
    let mut out = Vec::new();
    let sig = |r: usize| {
        let mut v = j.to_vec();
        v.swap(r - 1, r);
        v
    };
    for r in 1..=n {
        out.push((
            format!("y{r} e = e y{r} e"),
            vec![(1, vec![Atom::Y(r), e(j)])],
            vec![(1, vec![e(j), Atom::Y(r), e(j)])],
        ));
        for s in 1..=n {
            out.push((
                format!("y{r} y{s}"),
                vec![(1, vec![Atom::Y(r), Atom::Y(s), e(j)])],
                vec![(1, vec![Atom::Y(s), Atom::Y(r), e(j)])],
            ));
        }
    }
    for r in 1..n {
        let d = i64::from(j[r - 1] == j[r]);
        out.push((
            format!("ψ{r} e = e' ψ{r} e"),
            vec![(1, vec![Atom::Psi(r), e(j)])],
            vec![(1, vec![e(&sig(r)), Atom::Psi(r), e(j)])],
        ));
        for s in 1..=n {
            if s != r && s != r + 1 {
                out.push((
                    format!("ψ{r} y{s}"),
                    vec![(1, vec![Atom::Psi(r), Atom::Y(s), e(j)])],
                    vec![(1, vec![Atom::Y(s), Atom::Psi(r), e(j)])],
                ));
            }
        }
        for s in 1..n {
            if s.abs_diff(r) > 1 {
                out.push((
                    format!("ψ{r} ψ{s}"),
                    vec![(1, vec![Atom::Psi(r), Atom::Psi(s), e(j)])],
                    vec![(1, vec![Atom::Psi(s), Atom::Psi(r), e(j)])],
                ));
            }
        }
        out.push((
            format!("ψ{r} y{} e", r + 1),
            vec![(1, vec![Atom::Psi(r), Atom::Y(r + 1), e(j)])],
            vec![(1, vec![Atom::Y(r), Atom::Psi(r), e(j)]), (d, vec![e(j)])],
        ));
        out.push((
            format!("y{} ψ{r} e", r + 1),
            vec![(1, vec![Atom::Y(r + 1), Atom::Psi(r), e(j)])],
            vec![(1, vec![Atom::Psi(r), Atom::Y(r), e(j)]), (d, vec![e(j)])],
        ));
        let sq = match q_poly(q, j[r - 1], j[r]) {
            QPoly::Zero => vec![],
            QPoly::One => vec![(1, vec![e(j)])],
            QPoly::SecondMinusFirst => {
                vec![(1, vec![Atom::Y(r + 1), e(j)]), (-1, vec![Atom::Y(r), e(j)])]
            }
            QPoly::FirstMinusSecond => {
                vec![(1, vec![Atom::Y(r), e(j)]), (-1, vec![Atom::Y(r + 1), e(j)])]
            }
        };
        out.push((format!("ψ{r}² e"), vec![(1, vec![Atom::Psi(r), Atom::Psi(r), e(j)])], sq));
        if r + 1 < n {
            let c = braid_correction(q, j[r - 1], j[r], j[r + 1]);
            out.push((
                format!("braid at {r}"),
                vec![(1, vec![Atom::Psi(r), Atom::Psi(r + 1), Atom::Psi(r), e(j)])],
                vec![(1, vec![Atom::Psi(r + 1), Atom::Psi(r), Atom::Psi(r + 1), e(j)]), (c, vec![e(j)])],
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(v: &[i64]) -> Vec<Residue> {
        v.iter().map(|&x| Residue(x)).collect()
    }

    fn red(eng: &KlrEngine, word: &[Atom]) -> KlrElement {
        eng.reduce(word, None).unwrap()
    }

    #[test]
    fn q_table_and_braid_table() {
        let q = Quiver::affine(3).unwrap();
        assert_eq!(q_poly(&q, Residue(1), Residue(1)), QPoly::Zero);
        assert_eq!(q_poly(&q, Residue(0), Residue(1)), QPoly::SecondMinusFirst);
        assert_eq!(q_poly(&q, Residue(1), Residue(0)), QPoly::FirstMinusSecond);
        let l = Quiver::linear();
        assert_eq!(q_poly(&l, Residue(0), Residue(5)), QPoly::One);
        assert_eq!(braid_correction(&l, Residue(0), Residue(1), Residue(0)), 1);
        assert_eq!(braid_correction(&l, Residue(0), Residue(-1), Residue(0)), -1);
        assert_eq!(braid_correction(&l, Residue(0), Residue(1), Residue(2)), 0);
    }

    #[test]
    fn small_reductions() {
        let q = Quiver::linear();
        let eng = KlrEngine::new(q, 3);
        let i = res(&[0, 0, 1]);
        assert!(red(&eng, &[Atom::Psi(1), Atom::Psi(1), Atom::E(i.clone())]).is_zero());
        let lhs = red(&eng, &[Atom::Psi(1), Atom::Y(2), Atom::E(i.clone())]);
        let rhs = red(&eng, &[Atom::Y(1), Atom::Psi(1), Atom::E(i.clone())])
            .add(&KlrElement::idempotent(i.clone()));
        assert_eq!(lhs, rhs);
        assert!(red(&eng, &[Atom::E(i.clone()), Atom::E(res(&[0, 1, 0]))]).is_zero());
        assert_eq!(red(&eng, &[Atom::E(i.clone()), Atom::E(i.clone())]), KlrElement::idempotent(i));
        let j = res(&[0, 2, 1]);
        let a = red(&eng, &[Atom::Psi(1), Atom::Psi(2), Atom::Psi(1), Atom::E(j.clone())]);
        let b = red(&eng, &[Atom::Psi(2), Atom::Psi(1), Atom::Psi(2), Atom::E(j)]);
        assert_eq!(a, b);
    }

    #[test]
    fn rendering() {
        let eng = KlrEngine::new(Quiver::linear(), 3);
        let i = res(&[0, 1, 2]);
        let x: KlrElement = red(&eng, &[Atom::Psi(2), Atom::Psi(1), Atom::Y(2), Atom::E(i.clone())]);
        assert_eq!(x.to_string(), "ψ[2,1] y^(0,1,0) e(0,1,2)");
        let y = x.scale(&Rational::from_i64(3));
        assert_eq!(y.to_string(), "3·ψ[2,1] y^(0,1,0) e(0,1,2)");
        assert_eq!(x.scale(&Rational::from_i64(-1)).to_string(), "-ψ[2,1] y^(0,1,0) e(0,1,2)");
        assert_eq!(KlrElement::<Rational>::zero(3).to_string(), "0");
    }

    #[test]
    fn degrees() {
        let q = Quiver::linear();
        let i = res(&[0, 0]);
        let mut m = KlrMonomial::idempotent(i);
        assert_eq!(monomial_degree(&q, &m), 0);
        m.exponents[1] = 1;
        assert_eq!(monomial_degree(&q, &m), 2);
        m.exponents[1] = 0;
        m.perm = Perm::from_word(2, &[1]).unwrap();
        assert_eq!(monomial_degree(&q, &m), -2);
    }

    #[test]
    fn cyclotomic_truncation() {
        let q = Quiver::linear();
        let eng = KlrEngine::new(q, 2);
        let i = res(&[0, 1]);
        let x: KlrElement = red(&eng, &[Atom::Y(1), Atom::E(i.clone())]);
        assert!(x.cyclotomic_reduce(&q, &Multicharge::single(0)).is_zero());
        let e: KlrElement = KlrElement::idempotent(i.clone());
        assert_eq!(e.cyclotomic_reduce(&q, &Multicharge::single(0)), e);
        assert!(e.cyclotomic_reduce(&q, &Multicharge::single(5)).is_zero());
        assert!(KlrElement::<Rational>::zero(2).cyclotomic_reduce(&q, &Multicharge::single(0)).is_zero());
    }

    #[test]
    fn orbit_sizes() {
        let a = PositiveRoot::from_residues(res(&[0, 0, 1, 2]));
        assert_eq!(orbit(&a).len(), 12);
    }

    #[test]
    fn sum_over_orbit_without_idempotent() {
        let q = Quiver::linear();
        let eng = KlrEngine::new(q, 2);
        let alpha = PositiveRoot::from_residues(res(&[0, 1]));
        let one: KlrElement = eng.reduce(&[], Some(&alpha)).unwrap();
        assert_eq!(one.len(), 2);
        assert!(eng.reduce::<Rational>(&[Atom::Psi(1)], None).is_err());
        assert!(eng.reduce::<Rational>(&[Atom::Psi(2), Atom::E(res(&[0, 1]))], None).is_err());
    }
}
