//! Permutations in one-line form and the fixed choice of reduced words.
//!
//! Simple transpositions are indexed from 1: `s_r` swaps `r` and `r+1`.
//! Internally a permutation stores 0-based images, `w[p] = w(p)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// From 0-based images; checks bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Precondition(format!("not a permutation: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// `s_{w_1} s_{w_2} ⋯ s_{w_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Perm::identity(n);
        for &s in word {
            if s == 0 || s >= n {
                return Err(Error::MalformedWord(format!("letter {s} with n = {n}")));
            }
            p.swap_positions(s);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(p)` for 0-based `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &v)| p == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (p, &v) in self.images.iter().enumerate() {
            inv[v] = p;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&p| self.images[p]).collect() }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut c = 0;
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                if self.images[a] > self.images[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// In place `w <- s_r w`.
    pub fn swap_values(&mut self, r: usize) {
        for v in self.images.iter_mut() {
            if *v == r - 1 {
                *v = r;
            } else if *v == r {
                *v = r - 1;
            }
        }
    }

    /// In place `w <- w s_r`.
    pub fn swap_positions(&mut self, r: usize) {
        self.images.swap(r - 1, r);
    }

    pub fn left_mul(&self, r: usize) -> Perm {
        let mut p = self.clone();
        p.swap_values(r);
        p
    }

    pub fn right_mul(&self, r: usize) -> Perm {
        let mut p = self.clone();
        p.swap_positions(r);
        p
    }

    /// `l(s_r w) < l(w)`.
    pub fn is_left_descent(&self, r: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x == v).expect("value present");
        pos(r - 1) > pos(r)
    }

    /// `l(w s_r) < l(w)`.
    pub fn is_right_descent(&self, r: usize) -> bool {
        self.images[r - 1] > self.images[r]
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n()).filter(|&r| inv.images[r - 1] > inv.images[r]).collect()
    }

    pub fn max_left_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (1..self.n()).rev().find(|&r| inv.images[r - 1] > inv.images[r])
    }

    /// The fixed reduced word: peel off the largest left descent, repeatedly.
    pub fn chosen_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut out = Vec::with_capacity(self.length());
        while let Some(r) = w.max_left_descent() {
            out.push(r);
            w.swap_values(r);
        }
        ReducedWord { indices: out }
    }

    /// Place permutation of a sequence: `(w·i)_{w(p)} = i_p`.
    pub fn act_on<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        let mut out = seq.to_vec();
        for (p, x) in seq.iter().enumerate() {
            out[self.images[p]] = x.clone();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A word in the simple transpositions, required to be reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedWord {
    pub indices: Vec<usize>,
}

impl ReducedWord {
    /// Checks that the word is reduced for `S_n`.
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        let p = Perm::from_word(n, &indices)?;
        if p.length() != indices.len() {
            return Err(Error::MalformedWord(format!("{indices:?} is not reduced")));
        }
        Ok(ReducedWord { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn perm(&self, n: usize) -> Result<Perm> {
        Perm::from_word(n, &self.indices)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All permutations of `0..n` (Heap's order is not needed; lexicographic).
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}
