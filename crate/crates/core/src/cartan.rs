//! Quiver data: vertex labels, orientation, Cartan pairing, roots and charges.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two supported quivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quiver {
    /// Vertices are all integers, arrows `i -> i+1`.
    LinearInfinite,
    /// Vertices `0..e`, arrows `i -> i+1 mod e`.
    AffineCycle(i64),
}

impl Quiver {
    /// Cyclic quiver with `e` vertices. Only `e >= 3` is accepted.
    pub fn affine(e: i64) -> Result<Quiver> {
        if e < 3 {
            return Err(Error::UnsupportedE(e));
        }
        Ok(Quiver::AffineCycle(e))
    }

    pub fn linear() -> Quiver {
        Quiver::LinearInfinite
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, Quiver::LinearInfinite)
    }

    /// Canonical vertex label for an integer.
    pub fn residue(&self, v: i64) -> Residue {
        match *self {
            Quiver::LinearInfinite => Residue(v),
            Quiver::AffineCycle(e) => Residue(v.rem_euclid(e)),
        }
    }

    pub fn residues(&self, vs: &[i64]) -> Vec<Residue> {
        vs.iter().map(|&v| self.residue(v)).collect()
    }

    /// `i + d` on the vertex set.
    pub fn shift(&self, i: Residue, d: i64) -> Residue {
        self.residue(i.0 + d)
    }

    pub fn adjacency(&self, i: Residue, j: Residue) -> Adjacency {
        if i == j {
            Adjacency::Equal
        } else if self.shift(i, 1) == j {
            Adjacency::ArrowTo
        } else if self.shift(i, -1) == j {
            Adjacency::ArrowFrom
        } else {
            Adjacency::Distant
        }
    }

    pub fn cartan_entry(&self, i: Residue, j: Residue) -> i64 {
        match self.adjacency(i, j) {
            Adjacency::Equal => 2,
            Adjacency::ArrowTo | Adjacency::ArrowFrom => -1,
            Adjacency::Distant => 0,
        }
    }

    pub fn residue_of_node(&self, charge: i64, row: usize, col: usize) -> Residue {
        self.residue(col as i64 - row as i64 + charge)
    }

    pub fn weight_of_sequence(&self, seq: &[Residue]) -> PositiveRoot {
        PositiveRoot::from_residues(seq.iter().map(|&r| self.residue(r.0)))
    }

    /// Multiset of reduced charges, i.e. the dominant weight as a map `vertex -> multiplicity`.
    pub fn weight_of_multicharge(&self, kappa: &Multicharge) -> BTreeMap<Residue, usize> {
        let mut out = BTreeMap::new();
        for &c in &kappa.entries {
            *out.entry(self.residue(c)).or_insert(0) += 1;
        }
        out
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quiver::LinearInfinite => write!(f, "linear"),
            Quiver::AffineCycle(e) => write!(f, "e={e}"),
        }
    }
}

/// A vertex of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue(pub i64);

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Relation between two vertices under the orientation `i -> i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adjacency {
    Equal,
    /// `i -> j`, i.e. `j = i + 1`.
    ArrowTo,
    /// `i <- j`, i.e. `j = i - 1`.
    ArrowFrom,
    Distant,
}

/// A nonnegative combination of simple roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositiveRoot {
    multiplicities: BTreeMap<Residue, usize>,
}

impl PositiveRoot {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_residues<I: IntoIterator<Item = Residue>>(it: I) -> Self {
        let mut m = BTreeMap::new();
        for r in it {
            *m.entry(r).or_insert(0) += 1;
        }
        PositiveRoot { multiplicities: m }
    }

    pub fn height(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn multiplicity(&self, i: Residue) -> usize {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<Residue, usize> {
        &self.multiplicities
    }

    pub fn add(&self, other: &PositiveRoot) -> PositiveRoot {
        let mut m = self.multiplicities.clone();
        for (&k, &v) in &other.multiplicities {
            *m.entry(k).or_insert(0) += v;
        }
        PositiveRoot { multiplicities: m }
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(r, m)| if *m == 1 { format!("a{r}") } else { format!("{m}a{r}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Ordered charges `(k_1, ..., k_l)`, one per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicharge {
    pub entries: Vec<i64>,
    /// False when the entries are not strictly decreasing.
    pub conventional: bool,
}

impl Multicharge {
    pub fn new(entries: Vec<i64>) -> Self {
        let conventional = entries.windows(2).all(|w| w[0] > w[1]);
        Multicharge { entries, conventional }
    }

    pub fn single(j: i64) -> Self {
        Self::new(vec![j])
    }

    pub fn level(&self) -> usize {
        self.entries.len()
    }

    pub fn weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "multicharge", input: s.to_string() };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Err(err());
        }
        let entries = t
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(entries))
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Render a dominant weight as `L0+L9+L7` in charge order.
pub fn weight_label(q: &Quiver, kappa: &Multicharge) -> String {
    kappa
        .entries
        .iter()
        .map(|&c| format!("L{}", q.residue(c)))
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_residues() {
        let q3 = Quiver::affine(3).unwrap();
        assert_eq!(q3.residue_of_node(0, 2, 1), Residue(2));
        assert_eq!(Quiver::linear().residue_of_node(0, 5, 1), Residue(-4));
        assert_eq!(Quiver::linear().residue_of_node(7, 1, 1), Residue(7));
    }

    #[test]
    fn small_e_rejected() {
        assert!(Quiver::affine(2).is_err());
        assert!(Quiver::affine(1).is_err());
        assert!(Quiver::affine(3).is_ok());
    }

    #[test]
    fn sequence_weight() {
        let q = Quiver::affine(3).unwrap();
        let w = q.weight_of_sequence(&q.residues(&[0, 1, 2, 0, 2, 0]));
        assert_eq!(w.multiplicity(Residue(0)), 3);
        assert_eq!(w.multiplicity(Residue(1)), 1);
        assert_eq!(w.multiplicity(Residue(2)), 2);
        assert_eq!(w.height(), 6);
        assert_eq!(q.weight_of_sequence(&[]).height(), 0);
    }

    #[test]
    fn cartan_band() {
        let q = Quiver::affine(10).unwrap();
        assert_eq!(q.cartan_entry(Residue(0), Residue(9)), -1);
        assert_eq!(q.cartan_entry(Residue(4), Residue(4)), 2);
        assert_eq!(q.cartan_entry(Residue(0), Residue(5)), 0);
        assert_eq!(q.adjacency(Residue(2), Residue(0)), Adjacency::Distant);
        let q3 = Quiver::affine(3).unwrap();
        assert_eq!(q3.adjacency(Residue(0), Residue(1)), Adjacency::ArrowTo);
        assert_eq!(q3.adjacency(Residue(0), Residue(2)), Adjacency::ArrowFrom);
    }

    #[test]
    fn pairing_properties() {
        for q in [Quiver::affine(3).unwrap(), Quiver::affine(4).unwrap(), Quiver::linear()] {
            for a in -4..5 {
                for b in -4..5 {
                    let (i, j) = (q.residue(a), q.residue(b));
                    assert_eq!(q.cartan_entry(i, j), q.cartan_entry(j, i));
                    let to = q.adjacency(i, j) == Adjacency::ArrowTo;
                    let from = q.adjacency(j, i) == Adjacency::ArrowFrom;
                    assert_eq!(to, from);
                    let distant = q.adjacency(i, j) == Adjacency::Distant;
                    assert_eq!(distant, q.cartan_entry(i, j) == 0 && i != j);
                }
            }
        }
    }

    #[test]
    fn multicharge_weights() {
        let q = Quiver::affine(10).unwrap();
        let w = q.weight_of_multicharge(&Multicharge::new(vec![0, -2]));
        assert_eq!(w.get(&Residue(0)), Some(&1));
        assert_eq!(w.get(&Residue(8)), Some(&1));
        assert_eq!(weight_label(&q, &Multicharge::new(vec![0, -1, -3])), "L0+L9+L7");
        assert!(!Multicharge::new(vec![0, 1]).conventional);
    }
}
