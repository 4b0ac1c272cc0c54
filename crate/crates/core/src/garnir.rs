//! Garnir nodes, belts, Garnir tableaux and their ψ-words.

use crate::error::{Error, Result};
use crate::partitions::{Multipartition, Node};
use crate::perm::Perm;
use crate::tableaux::{ReducedWord, Tableau};

/// Everything attached to one Garnir node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarnirDatum {
    pub node: Node,
    pub belt: Vec<Node>,
    pub tableau: Tableau,
    pub word: ReducedWord,
}

impl GarnirDatum {
    pub fn new(node: Node, shape: &Multipartition) -> Result<Self> {
        Ok(GarnirDatum {
            node,
            belt: garnir_belt(node, shape)?,
            tableau: garnir_tableau(node, shape)?,
            word: garnir_word(node, shape)?,
        })
    }
}

/// Nodes with a node directly below, in reading order.
pub fn garnir_nodes(shape: &Multipartition) -> Vec<Node> {
    shape
        .diagram()
        .into_iter()
        .filter(|n| shape.contains(&Node::new(n.comp, n.row + 1, n.col)))
        .collect()
}

pub fn is_garnir_node(node: Node, shape: &Multipartition) -> bool {
    shape.contains(&node) && shape.contains(&Node::new(node.comp, node.row + 1, node.col))
}

fn check(node: Node, shape: &Multipartition) -> Result<()> {
    if is_garnir_node(node, shape) {
        Ok(())
    } else {
        Err(Error::NotGarnir(format!("{node} in {shape}")))
    }
}

/// Belt of `(r, c)`: row `r` from column `c` rightwards, then row `r+1` up to column `c`.
pub fn garnir_belt(node: Node, shape: &Multipartition) -> Result<Vec<Node>> {
    check(node, shape)?;
    let p = shape.component(node.comp);
    let mut belt: Vec<Node> =
        (node.col..=p.part(node.row)).map(|z| Node::new(node.comp, node.row, z)).collect();
    belt.extend((1..=node.col).map(|z| Node::new(node.comp, node.row + 1, z)));
    Ok(belt)
}

/// Belt nodes from bottom-left to top-right.
fn belt_in_fill_order(node: Node, shape: &Multipartition) -> Result<Vec<Node>> {
    let belt = garnir_belt(node, shape)?;
    let (top, bottom): (Vec<Node>, Vec<Node>) = belt.into_iter().partition(|n| n.row == node.row);
    Ok(bottom.into_iter().chain(top).collect())
}

/// The initial tableau with the belt entries re-sorted bottom-left to top-right.
pub fn garnir_tableau(node: Node, shape: &Multipartition) -> Result<Tableau> {
    let order = belt_in_fill_order(node, shape)?;
    let mut entries = Tableau::initial(shape).entries();
    let positions: Vec<usize> = order.iter().map(|n| shape.position(n).expect("inside")).collect();
    let mut values: Vec<usize> = positions.iter().map(|&p| entries[p]).collect();
    values.sort_unstable();
    for (&p, v) in positions.iter().zip(values) {
        entries[p] = v;
    }
    Tableau::from_entries(shape, &entries)
}

/// Factorised ψ-word for the Garnir tableau of `(r, c)`:
/// blocks `(N+c+t, …, N+a+t)` for `t = c-1` down to `0`, where `N` counts the
/// entries before row `r` and `a` is the length of row `r`.
pub fn garnir_word(node: Node, shape: &Multipartition) -> Result<ReducedWord> {
    check(node, shape)?;
    let p = shape.component(node.comp);
    let offset = shape.component_offset(node.comp) + p.prefix_sum(node.row - 1);
    let a = p.part(node.row);
    let c = node.col;
    let mut word = Vec::new();
    for t in (0..c).rev() {
        word.extend(offset + c + t..=offset + a + t);
    }
    ReducedWord::new(shape.size(), word)
}

pub fn garnir_data(shape: &Multipartition) -> Vec<GarnirDatum> {
    garnir_nodes(shape)
        .into_iter()
        .map(|n| GarnirDatum::new(n, shape).expect("garnir node"))
        .collect()
}

/// Permutation of the Garnir tableau, `w^{G^A}`.
pub fn garnir_perm(node: Node, shape: &Multipartition) -> Result<Perm> {
    Ok(garnir_tableau(node, shape)?.perm().clone())
}
