//! Tableaux of a fixed shape, residue sequences and enumeration.
//!
//! A tableau of shape `λ` is stored as the permutation `w` with `T = w·T^λ`:
//! the node at reading position `p` holds entry `w(p) + 1`.

use std::fmt;

use crate::cartan::{Multicharge, Quiver, Residue};
use crate::error::{Error, Result};
use crate::partitions::{Multipartition, Node, Partition};
use crate::perm::Perm;

pub use crate::perm::ReducedWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Multipartition,
    perm: Perm,
}

impl Tableau {
    /// Entries `1..=n` along successive rows.
    pub fn initial(shape: &Multipartition) -> Tableau {
        Tableau { shape: shape.clone(), perm: Perm::identity(shape.size()) }
    }

    /// The tableau `w·T^λ`.
    pub fn from_perm(shape: &Multipartition, perm: Perm) -> Result<Tableau> {
        if perm.n() != shape.size() {
            return Err(Error::SizeMismatch(perm.n(), shape.size()));
        }
        Ok(Tableau { shape: shape.clone(), perm })
    }

    /// From 1-based entries listed in reading order.
    pub fn from_entries(shape: &Multipartition, entries: &[usize]) -> Result<Tableau> {
        let images = entries.iter().map(|&e| e.wrapping_sub(1)).collect();
        Self::from_perm(shape, Perm::from_images(images)?)
    }

    /// Parse rows such as `"1,4,5,6/2,3"`, components separated by `|`.
    pub fn parse(s: &str) -> Result<Tableau> {
        let err = || Error::Parse { what: "tableau", input: s.to_string() };
        let mut comps = Vec::new();
        let mut entries = Vec::new();
        for comp in s.split('|') {
            let comp = comp.trim();
            let mut parts = Vec::new();
            if !(comp.is_empty() || comp == "∅") {
                for row in comp.split('/') {
                    let vals = row
                        .split(',')
                        .map(|v| v.trim().parse::<usize>().map_err(|_| err()))
                        .collect::<Result<Vec<_>>>()?;
                    parts.push(vals.len());
                    entries.extend(vals);
                }
            }
            comps.push(Partition::new(parts).map_err(|_| err())?);
        }
        Self::from_entries(&Multipartition::new(comps), &entries)
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// The permutation `w` with `w·T^λ = T`.
    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// 1-based entries in reading order.
    pub fn entries(&self) -> Vec<usize> {
        self.perm.images().iter().map(|v| v + 1).collect()
    }

    pub fn entry_at(&self, node: &Node) -> Option<usize> {
        self.shape.position(node).map(|p| self.perm.apply(p) + 1)
    }

    /// Node holding entry `m` (1-based).
    pub fn node_of(&self, m: usize) -> Node {
        let p = self.perm.images().iter().position(|&v| v + 1 == m).expect("entry present");
        self.shape.diagram()[p]
    }

    /// Entries grouped as components, then rows.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let entries = self.entries();
        let mut it = entries.into_iter();
        self.shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect())
            .collect()
    }

    pub fn residue_sequence(&self, q: &Quiver, kappa: &Multicharge) -> Result<Vec<Residue>> {
        self.shape.check_level(kappa)?;
        Ok(self.perm.act_on(&initial_residues(&self.shape, q, kappa)))
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows().iter().flatten().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        if !self.is_row_standard() {
            return false;
        }
        self.rows().iter().all(|comp| {
            comp.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi))
        })
    }

    /// `s_r · T`: swap the entries `r` and `r+1`.
    pub fn apply_transposition(&self, r: usize) -> Result<Tableau> {
        if r == 0 || r >= self.n() {
            return Err(Error::OutOfRange { index: r, max: self.n().saturating_sub(1) });
        }
        Ok(Tableau { shape: self.shape.clone(), perm: self.perm.left_mul(r) })
    }

    /// `w^T`, defined for row-standard tableaux.
    pub fn w_of(&self) -> Result<Perm> {
        if !self.is_row_standard() {
            return Err(Error::NotRowStandard);
        }
        Ok(self.perm.clone())
    }

    /// The fixed reduced word for `w^T`.
    pub fn chosen_word(&self) -> Result<ReducedWord> {
        Ok(self.w_of()?.chosen_word())
    }

    /// Shape occupied by the entries `1..=m`.
    pub fn restricted_shape(&self, m: usize) -> Multipartition {
        let comps = self
            .rows()
            .iter()
            .map(|comp| {
                Partition::from_unsorted(
                    comp.iter().map(|row| row.iter().filter(|&&v| v <= m).count()).collect(),
                )
            })
            .collect();
        Multipartition::new(comps)
    }

    /// Weak tableau dominance: every restricted shape dominates.
    pub fn dominates(&self, other: &Tableau) -> Result<bool> {
        for m in 1..=self.n() {
            if !self.restricted_shape(m).dominates(&other.restricted_shape(m))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows()
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "∅".to_string()
                } else {
                    comp.iter()
                        .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join("/")
                }
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

/// `i^λ`: residues of the nodes in reading order.
pub fn initial_residues(shape: &Multipartition, q: &Quiver, kappa: &Multicharge) -> Vec<Residue> {
    shape.diagram().iter().map(|n| shape.node_residue(n, q, kappa)).collect()
}

fn enumerate(shape: &Multipartition, column_strict: bool) -> Vec<Tableau> {
    let nodes = shape.diagram();
    let n = nodes.len();
    // reading position of the node directly above, and of the row end
    let above: Vec<Option<usize>> = nodes
        .iter()
        .map(|nd| {
            if nd.row == 1 {
                None
            } else {
                shape.position(&Node::new(nd.comp, nd.row - 1, nd.col))
            }
        })
        .collect();
    let left_in_row: Vec<usize> = nodes
        .iter()
        .map(|nd| shape.component(nd.comp).part(nd.row) - nd.col)
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut fill = vec![0usize; n];

    struct Ctx<'a> {
        nodes: &'a [Node],
        above: &'a [Option<usize>],
        left_in_row: &'a [usize],
        column_strict: bool,
    }

    fn go(
        p: usize,
        ctx: &Ctx<'_>,
        used: &mut [bool],
        fill: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = fill.len();
        if p == n {
            out.push(fill.to_vec());
            return;
        }
        let mut lo = if ctx.nodes[p].col > 1 { fill[p - 1] + 1 } else { 0 };
        if ctx.column_strict {
            if let Some(a) = ctx.above[p] {
                lo = lo.max(fill[a] + 1);
            }
        }
        for v in lo..n {
            if used[v] {
                continue;
            }
            // the rest of the row needs larger unused values
            let larger_free = (v + 1..n).filter(|&u| !used[u]).count();
            if larger_free < ctx.left_in_row[p] {
                break;
            }
            used[v] = true;
            fill[p] = v;
            go(p + 1, ctx, used, fill, out);
            used[v] = false;
        }
    }

    let ctx = Ctx { nodes: &nodes, above: &above, left_in_row: &left_in_row, column_strict };
    let mut raw = Vec::new();
    go(0, &ctx, &mut used, &mut fill, &mut raw);
    for images in raw {
        out.push(Tableau { shape: shape.clone(), perm: Perm::from_images(images).expect("bijection") });
    }
    out
}

/// Row-standard tableaux, lexicographic in their reading-order entries.
pub fn enumerate_row_standard(shape: &Multipartition) -> Vec<Tableau> {
    enumerate(shape, false)
}

/// Standard tableaux, lexicographic in their reading-order entries.
pub fn enumerate_standard(shape: &Multipartition) -> Vec<Tableau> {
    enumerate(shape, true)
}

/// Standard `λ`-tableaux with residue sequence `i^μ` that dominate `T^μ`.
pub fn std_mu(
    lambda: &Multipartition,
    mu: &Multipartition,
    q: &Quiver,
    kappa: &Multicharge,
) -> Result<Vec<Tableau>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    lambda.check_level(kappa)?;
    mu.check_level(kappa)?;
    let target = initial_residues(mu, q, kappa);
    let n = lambda.size();
    let level = lambda.level();
    let truncations: Vec<Multipartition> = (0..=n).map(|m| mu.truncate(m)).collect();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); level];
    let mut placed: Vec<Node> = Vec::with_capacity(n);
    let mut found = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        m: usize,
        lambda: &Multipartition,
        q: &Quiver,
        kappa: &Multicharge,
        target: &[Residue],
        truncations: &[Multipartition],
        rows: &mut Vec<Vec<usize>>,
        placed: &mut Vec<Node>,
        found: &mut Vec<Vec<Node>>,
    ) {
        let n = target.len();
        if m == n {
            found.push(placed.clone());
            return;
        }
        for c in 0..rows.len() {
            let comp = lambda.component(c + 1);
            for r in 0..=rows[c].len() {
                let len = rows[c].get(r).copied().unwrap_or(0);
                let fits_row = len < comp.part(r + 1);
                let fits_col = r == 0 || rows[c][r - 1] > len;
                if !fits_row || !fits_col {
                    continue;
                }
                let node = Node::new(c + 1, r + 1, len + 1);
                if lambda.node_residue(&node, q, kappa) != target[m] {
                    continue;
                }
                if r == rows[c].len() {
                    rows[c].push(1);
                } else {
                    rows[c][r] += 1;
                }
                let shape = Multipartition::new(
                    rows.iter().map(|p| Partition::from_unsorted(p.clone())).collect(),
                );
                if shape.dominates(&truncations[m + 1]).unwrap_or(false) {
                    placed.push(node);
                    go(m + 1, lambda, q, kappa, target, truncations, rows, placed, found);
                    placed.pop();
                }
                rows[c][r] -= 1;
                if rows[c][r] == 0 {
                    rows[c].pop();
                }
            }
        }
    }

    let mut paths = Vec::new();
    go(0, lambda, q, kappa, &target, &truncations, &mut rows, &mut placed, &mut paths);
    for path in paths {
        let mut entries = vec![0usize; n];
        for (m, node) in path.iter().enumerate() {
            entries[lambda.position(node).expect("inside")] = m + 1;
        }
        found.push(Tableau::from_entries(lambda, &entries)?);
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{multipartitions_of, partitions_of};

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn initial_tableaux() {
        assert_eq!(Tableau::initial(&mp("4,2")).to_string(), "1,2,3,4/5,6");
        assert_eq!(Tableau::initial(&mp("4|2,1,1,1")).to_string(), "1,2,3,4|5,6/7/8/9");
    }

    #[test]
    fn residue_sequences_and_transpositions() {
        let q = Quiver::affine(3).unwrap();
        let k = Multicharge::single(0);
        let t = Tableau::initial(&mp("4,2"));
        let res = |t: &Tableau| t.residue_sequence(&q, &k).unwrap().iter().map(|r| r.0).collect::<Vec<_>>();
        assert_eq!(res(&t), vec![0, 1, 2, 0, 2, 0]);
        let s4 = t.apply_transposition(4).unwrap();
        assert_eq!(s4.to_string(), "1,2,3,5/4,6");
        assert_eq!(res(&s4), vec![0, 1, 2, 2, 0, 0]);
        let t2 = s4.apply_transposition(3).unwrap().apply_transposition(2).unwrap();
        assert_eq!(t2.to_string(), "1,3,4,5/2,6");
        assert_eq!(t2.chosen_word().unwrap().indices, vec![2, 3, 4]);
        assert_eq!(s4.apply_transposition(4).unwrap(), t);
        assert!(t.apply_transposition(6).is_err());
    }

    #[test]
    fn garnir_example_word() {
        let g = Tableau::parse("1,4,5,6/2,3").unwrap();
        assert_eq!(g.chosen_word().unwrap().indices, vec![3, 4, 5, 2, 3, 4]);
        assert!(g.is_row_standard());
        assert!(!g.is_standard());
        assert!(Tableau::parse("1,3/2,4").unwrap().is_standard());
        assert!(Tableau::parse("3,1/2,4").unwrap().chosen_word().is_err());
    }

    #[test]
    fn chosen_word_rebuilds_tableau() {
        for n in 1..=6 {
            for shape in partitions_of(n) {
                let shape = Multipartition::single(shape);
                let base = Tableau::initial(&shape);
                for t in enumerate_row_standard(&shape) {
                    let word = t.chosen_word().unwrap();
                    assert_eq!(word.len(), t.perm().length());
                    let mut u = base.clone();
                    for &r in word.indices.iter().rev() {
                        u = u.apply_transposition(r).unwrap();
                    }
                    assert_eq!(u, t);
                }
            }
        }
    }

    #[test]
    fn residues_follow_place_permutation() {
        let q = Quiver::affine(4).unwrap();
        let k = Multicharge::new(vec![0, 2]);
        let shape = mp("2,1|2");
        let base = initial_residues(&shape, &q, &k);
        for t in enumerate_row_standard(&shape) {
            assert_eq!(t.residue_sequence(&q, &k).unwrap(), t.perm().act_on(&base));
        }
    }

    #[test]
    fn enumeration_counts_match_closed_forms() {
        for n in 0..=8 {
            for p in partitions_of(n) {
                let shape = Multipartition::single(p);
                assert_eq!(enumerate_row_standard(&shape).len(), usize::try_from(shape.dim_perm()).unwrap());
            }
        }
        for n in 0..=10 {
            for p in partitions_of(n) {
                let shape = Multipartition::single(p);
                let brute = enumerate_standard(&shape).len();
                assert_eq!(brute, usize::try_from(shape.count_std()).unwrap());
            }
        }
        for n in 0..=7 {
            for shape in multipartitions_of(n, 2) {
                let brute = enumerate_standard(&shape).len();
                assert_eq!(brute, usize::try_from(shape.count_std()).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_row_standard(&mp("3,2"));
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
        assert_eq!(enumerate_standard(&mp("2,2")).len(), 2);
        assert_eq!(enumerate_standard(&mp("5")).len(), 1);
    }

    #[test]
    fn std_mu_diagonal() {
        let q = Quiver::linear();
        let k = Multicharge::new(vec![1, 0]);
        for shape in multipartitions_of(4, 2) {
            let found = std_mu(&shape, &shape, &q, &k).unwrap();
            assert_eq!(found, vec![Tableau::initial(&shape)]);
        }
    }
}
