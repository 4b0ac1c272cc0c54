//! Partitions, multipartitions, Young diagrams and the closed-form counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cartan::{Multicharge, PositiveRoot, Quiver, Residue};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts and sorts; for internal construction from computed data.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(k, 1^r)`.
    pub fn hook(k: usize, r: usize) -> Result<Self> {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, r));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, 1-based, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Partial sum of the first `i` rows.
    pub fn prefix_sum(&self, i: usize) -> usize {
        self.parts.iter().take(i).sum()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if !self.contains(i, j) {
            return Err(Error::NodeOutside(format!("({i},{j}) in {self}")));
        }
        let col_len = self.parts.iter().filter(|&&p| p >= j).count();
        Ok(1 + (self.part(i) - j) + (col_len - i))
    }

    /// Product of the hook lengths along row `i`.
    pub fn row_hook_product(&self, i: usize) -> Result<BigUint> {
        if i == 0 || i > self.rows() {
            return Err(Error::OutOfRange { index: i, max: self.rows() });
        }
        let mut acc = BigUint::one();
        for j in 1..=self.part(i) {
            acc *= BigUint::from(self.hook_length(i, j)?);
        }
        Ok(acc)
    }

    /// `λ_i - λ_{i+1} + 1`.
    pub fn gap(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rows() {
            return Err(Error::OutOfRange { index: i, max: self.rows() });
        }
        Ok(self.part(i) - self.part(i + 1) + 1)
    }

    /// Multinomial `n! / (λ_1! ⋯ λ_r!)`.
    pub fn dim_perm(&self) -> BigUint {
        multinomial(&self.parts)
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn count_std(&self) -> BigUint {
        let mut hooks = BigUint::one();
        for i in 1..=self.rows() {
            for j in 1..=self.part(i) {
                hooks *= BigUint::from(self.hook_length(i, j).expect("node inside"));
            }
        }
        factorial(self.size()) / hooks
    }

    /// Partition dominance, padding with zero parts.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.rows().max(other.rows());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse { what: "partition", input: s.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A node `(component, row, column)`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(comp: usize, row: usize, col: usize) -> Self {
        Node { comp, row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comp == 1 {
            write!(f, "({},{})", self.row, self.col)
        } else {
            write!(f, "({},{},{})", self.row, self.col, self.comp)
        }
    }
}

/// An ordered tuple of partitions; components may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn single(p: Partition) -> Self {
        Multipartition { components: vec![p] }
    }

    /// Parse `"4|2,1,1,1"`; components separated by `|`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && self.component(node.comp).contains(node.row, node.col)
    }

    /// Nodes in row-reading order: component, then row, then column.
    pub fn diagram(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (c, p) in self.components.iter().enumerate() {
            for (r, &len) in p.parts().iter().enumerate() {
                for col in 1..=len {
                    out.push(Node::new(c + 1, r + 1, col));
                }
            }
        }
        out
    }

    /// Number of nodes preceding component `c` in row-reading order.
    pub fn component_offset(&self, c: usize) -> usize {
        self.components[..c - 1].iter().map(|p| p.size()).sum()
    }

    /// 0-based row-reading position of a node.
    pub fn position(&self, node: &Node) -> Option<usize> {
        if !self.contains(node) {
            return None;
        }
        let p = self.component(node.comp);
        Some(self.component_offset(node.comp) + p.prefix_sum(node.row - 1) + node.col - 1)
    }

    pub fn check_level(&self, kappa: &Multicharge) -> Result<()> {
        if kappa.level() != self.level() {
            return Err(Error::LevelMismatch { shape: self.level(), charge: kappa.level() });
        }
        Ok(())
    }

    pub fn node_residue(&self, node: &Node, q: &Quiver, kappa: &Multicharge) -> Residue {
        q.residue_of_node(kappa.entries[node.comp - 1], node.row, node.col)
    }

    pub fn residue_content(&self, q: &Quiver, kappa: &Multicharge) -> Result<PositiveRoot> {
        self.check_level(kappa)?;
        Ok(PositiveRoot::from_residues(
            self.diagram().iter().map(|n| self.node_residue(n, q, kappa)),
        ))
    }

    pub fn dim_perm(&self) -> BigUint {
        let sizes: Vec<usize> = self.components.iter().map(|p| p.size()).collect();
        let mut acc = multinomial(&sizes);
        for p in &self.components {
            acc *= p.dim_perm();
        }
        acc
    }

    pub fn count_std(&self) -> BigUint {
        let sizes: Vec<usize> = self.components.iter().map(|p| p.size()).collect();
        let mut acc = multinomial(&sizes);
        for p in &self.components {
            acc *= p.count_std();
        }
        acc
    }

    /// Dominance of multipartitions: cumulative node counts compared
    /// component by component and row by row.
    pub fn dominates(&self, other: &Multipartition) -> Result<bool> {
        if self.level() != other.level() {
            return Err(Error::LevelMismatch { shape: self.level(), charge: other.level() });
        }
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let (mut a, mut b) = (0usize, 0usize);
        for (p, q) in self.components.iter().zip(&other.components) {
            let rows = p.rows().max(q.rows());
            for i in 1..=rows {
                if a + p.prefix_sum(i) < b + q.prefix_sum(i) {
                    return Ok(false);
                }
            }
            a += p.size();
            b += q.size();
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The shape formed by the nodes holding entries `1..=m` of the initial
    /// tableau, i.e. the first `m` nodes in reading order.
    pub fn truncate(&self, m: usize) -> Multipartition {
        let mut left = m;
        let comps = self
            .components
            .iter()
            .map(|p| {
                let mut parts = Vec::new();
                for &len in p.parts() {
                    if left == 0 {
                        break;
                    }
                    let take = len.min(left);
                    parts.push(take);
                    left -= take;
                }
                Partition::from_unsorted(parts)
            })
            .collect();
        Multipartition::new(comps)
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Multipartition::single(p)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comps = s.split('|').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        Ok(Multipartition::new(comps))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `(Σ k_i)! / ∏ k_i!`.
pub fn multinomial(ks: &[usize]) -> BigUint {
    let n: usize = ks.iter().sum();
    let mut den = BigUint::one();
    for &k in ks {
        den *= factorial(k);
    }
    factorial(n) / den
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    multinomial(&[k, n - k])
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All multipartitions of `n` with `level` components.
pub fn multipartitions_of(n: usize, level: usize) -> Vec<Multipartition> {
    fn go(n: usize, level: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if level == 1 {
            for p in partitions_of(n) {
                cur.push(p);
                out.push(Multipartition::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        for k in (0..=n).rev() {
            for p in partitions_of(k) {
                cur.push(p);
                go(n - k, level - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if level == 0 {
        if n == 0 {
            out.push(Multipartition::new(Vec::new()));
        }
        return out;
    }
    go(n, level, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("5,5,4,2,2").to_string(), "5,5,4,2,2");
        assert_eq!(mp("4|2,1,1,1").to_string(), "4|2,1,1,1");
        assert_eq!(mp("∅|3").component(1), &Partition::empty());
        assert_eq!(mp("|3"), mp("0|3"));
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn diagrams() {
        assert_eq!(mp("4,2").diagram().len(), 6);
        assert!(mp("").diagram().is_empty());
        let d = mp("4|2,1,1,1").diagram();
        assert_eq!(d.len(), 9);
        assert_eq!(d[4], Node::new(2, 1, 1));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("5,5,4,2,2").conjugate(), p("5,5,3,3,2"));
        assert_eq!(p("6").conjugate(), p("1,1,1,1,1,1"));
        assert_eq!(Partition::hook(4, 3).unwrap().conjugate(), p("4,1,1,1"));
        for n in 0..=9 {
            for q in partitions_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn hooks_and_gaps() {
        let l = p("5,5,4,2,2");
        assert_eq!(l.hook_length(1, 1).unwrap(), 9);
        assert_eq!(p("7").hook_length(1, 7).unwrap(), 1);
        assert_eq!(l.gap(1).unwrap(), 1);
        assert!(l.hook_length(3, 5).is_err());
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(p("4,1,1,1,1,1").dim_perm(), BigUint::from(15120u32));
        assert_eq!(p("5,5,4,2,2").dim_perm(), BigUint::from(4631346720u64));
        assert_eq!(p("5").dim_perm(), BigUint::one());
        assert_eq!(mp("4,1,1,1,1,1").count_std(), BigUint::from(56u32));
        assert_eq!(mp("4|2,1,1,1").count_std(), BigUint::from(504u32));
        assert_eq!(mp("5,5,4,2,2").count_std(), BigUint::from(4594590u32));
    }

    #[test]
    fn residue_contents() {
        let q = Quiver::affine(3).unwrap();
        let c = mp("4,2").residue_content(&q, &Multicharge::single(0)).unwrap();
        assert_eq!(c.multiplicity(Residue(0)), 3);
        assert_eq!(c.multiplicity(Residue(1)), 1);
        assert_eq!(c.multiplicity(Residue(2)), 2);
        let q10 = Quiver::affine(10).unwrap();
        let c = mp("4,1,1,1,1,1").residue_content(&q10, &Multicharge::single(0)).unwrap();
        for r in [0, 1, 2, 3, 5, 6, 7, 8, 9] {
            assert_eq!(c.multiplicity(Residue(r)), 1);
        }
        assert_eq!(c.multiplicity(Residue(4)), 0);
        assert!(mp("2|1").residue_content(&q, &Multicharge::single(0)).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(mp("4|6,4,2,2").dominates(&mp("2|6,6,2,2")).unwrap());
        assert!(!mp("2|6,6,2,2").dominates(&mp("4|6,4,2,2")).unwrap());
        assert!(mp("2|1").dominates(&mp("1|2")).unwrap());
        assert!(!mp("1|2").dominates(&mp("2|1")).unwrap());
        assert!(mp("3,1").dominates(&mp("3,1")).unwrap());
        assert!(mp("1|2").dominates(&mp("2|1")).is_ok());
        assert!(mp("1|2").dominates(&mp("3")).is_err());
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=5 {
            let all = multipartitions_of(n, 2);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    if ab && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        // bipartitions of 3: sum_k p(k) p(3-k) = 3 + 2 + 2 + 3
        assert_eq!(multipartitions_of(3, 2).len(), 10);
    }

    #[test]
    fn truncation() {
        assert_eq!(mp("3,2|2").truncate(4), mp("3,1|∅"));
        assert_eq!(mp("3,2|2").truncate(6), mp("3,2|1"));
    }
}
