//! Exhaustive Bruhat comparator for small groups, built from cover
//! relations.
//!
//! `v` covers `u` exactly when `u = v t` for a reflection `t` with
//! `l(u) = l(v) - 1`; the full order is the transitive closure. This path
//! never touches the greedy subword scan in [`crate::weyl`], so the two can
//! cross-validate each other.

use std::collections::{HashMap, HashSet};

use crate::error::Error;
use crate::weyl::{WeightVector, WeylElement, WeylGroup};

pub struct BruhatOracle {
    elements: Vec<WeylElement>,
    index: HashMap<WeightVector, usize>,
    /// `below[v]` is the bitset of all `u <= v`.
    below: Vec<Vec<u64>>,
}

impl BruhatOracle {
    pub fn new(group: &WeylGroup, budget: u64) -> Result<Self, Error> {
        let elements = group.enumerate(budget)?;
        let n = elements.len();
        let index: HashMap<WeightVector, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.key().to_vec(), i))
            .collect();

        // All reflections, as conjugates of the simple ones.
        let mut reflections: HashSet<WeightVector> = HashSet::new();
        let mut refl_elems = Vec::new();
        for u in &elements {
            let u_inv = group.inverse(u)?;
            for i in 1..=group.rank() {
                let s = group.simple(i)?;
                let t = group.multiply(&group.multiply(u, &s)?, &u_inv)?;
                if reflections.insert(t.key().to_vec()) {
                    refl_elems.push(t);
                }
            }
        }
        assert_eq!(
            refl_elems.len(),
            group.root_table().len(),
            "one reflection per positive root"
        );

        let blocks = n.div_ceil(64);
        let mut below = vec![vec![0u64; blocks]; n];
        // Elements come out of `enumerate` in length order, so every cover
        // parent is already closed when we reach its child.
        for v_idx in 0..n {
            below[v_idx][v_idx / 64] |= 1u64 << (v_idx % 64);
            for t in &refl_elems {
                let u = group.multiply(&elements[v_idx], t)?;
                if u.length() + 1 == elements[v_idx].length() {
                    let u_idx = index[&u.key().to_vec()];
                    let (head, tail) = below.split_at_mut(v_idx);
                    let src = &head[u_idx];
                    let dst = &mut tail[0];
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        *d |= *s;
                    }
                }
            }
        }

        Ok(BruhatOracle {
            elements,
            index,
            below,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w.key()).copied()
    }

    pub fn leq_by_index(&self, u: usize, v: usize) -> bool {
        self.below[v][u / 64] & (1u64 << (u % 64)) != 0
    }

    pub fn leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let ui = self.index_of(u).expect("element of the enumerated group");
        let vi = self.index_of(v).expect("element of the enumerated group");
        self.leq_by_index(ui, vi)
    }

    /// Number of elements below `v` (inclusive).
    pub fn ideal_size(&self, v: usize) -> usize {
        self.below[v].iter().map(|b| b.count_ones() as usize).sum()
    }
}
