//! The cross-section lattice of `J` and the face counts of the orbit
//! polytope `Conv(W . lambda)`.
//!
//! Face `W`-orbits are indexed by the subsets `I` of `S` having no
//! connected component inside `J`. The orbit of the `I`-class has size
//! `[W : W_{I*}]`, where `I*` adds to `I` every node of `J` commuting with
//! all of `I`; the class contributes faces of dimension `|I|`. Everything
//! is computed from component orders, never from coordinates.

use crate::dynkin::{DynkinDiagram, Subset};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeMember {
    pub set: Subset,
    /// `I* = I ∪ { t in J : t commutes with all of I }`.
    pub closure: Subset,
    /// `[W : W_{I*}]`, the number of faces in this class.
    pub orbit_size: u64,
}

#[derive(Debug, Clone)]
pub struct CrossSectionLattice {
    pub j: Subset,
    /// Members ordered by size, then lexicographically. Contains the empty
    /// set (vertex class) and all of `S` (the polytope itself).
    pub members: Vec<LatticeMember>,
}

impl CrossSectionLattice {
    pub fn members_of_size(&self, k: usize) -> impl Iterator<Item = &LatticeMember> {
        self.members.iter().filter(move |m| m.set.len() == k)
    }
}

/// `I*`: `I` plus every node of `J` with no neighbor in `I`.
pub fn closure(diagram: &DynkinDiagram, j: Subset, i: Subset) -> Subset {
    let extra = j
        .difference(i)
        .iter()
        .filter(|&t| diagram.neighbors(t).intersection(i).is_empty())
        .collect::<Vec<_>>();
    i.union(Subset::from_nodes(extra))
}

pub fn cross_section(diagram: &DynkinDiagram, j: Subset) -> Result<CrossSectionLattice, Error> {
    diagram.check_subset(j)?;
    if j == diagram.full_set() {
        return Err(Error::NotProperSubset);
    }
    let rank = diagram.rank();
    let order = diagram.group_order();
    let mut members = Vec::new();
    for mask in 0..(1u32 << rank) {
        let i = Subset::from_nodes((1..=rank).filter(|&n| mask & (1 << (n - 1)) != 0));
        let excluded = diagram
            .connected_components(i)
            .iter()
            .any(|c| c.is_subset_of(j));
        if excluded {
            continue;
        }
        let star = closure(diagram, j, i);
        members.push(LatticeMember {
            set: i,
            closure: star,
            orbit_size: order / diagram.subgroup_order(star),
        });
    }
    members.sort_by_key(|m| m.set);
    Ok(CrossSectionLattice { j, members })
}

/// Face and h-vector of the orbit polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceVector {
    /// `f[k]` = number of `k`-dimensional faces, `0 <= k < |S|`.
    pub f: Vec<u64>,
    /// Coefficients of `h(t) = sum_k f_k (t-1)^k` with `f_{|S|} = 1`.
    pub h: Vec<i64>,
}

impl FaceVector {
    /// `sum (-1)^k f_k` over the proper faces.
    pub fn euler_sum(&self) -> i64 {
        self.f
            .iter()
            .enumerate()
            .map(|(k, &fk)| {
                if k.is_multiple_of(2) {
                    fk as i64
                } else {
                    -(fk as i64)
                }
            })
            .sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.h.len();
        (0..n / 2).all(|k| self.h[k] == self.h[n - 1 - k])
    }
}

pub fn face_vector(diagram: &DynkinDiagram, j: Subset) -> Result<FaceVector, Error> {
    let lattice = cross_section(diagram, j)?;
    let dim = diagram.rank();
    let mut f = vec![0u64; dim];
    for m in &lattice.members {
        if m.set.len() < dim {
            f[m.set.len()] += m.orbit_size;
        }
    }
    // h(t) = sum_{k=0}^{dim} f_k (t-1)^k, with the polytope itself as the
    // top face f_dim = 1.
    let mut h = vec![0i128; dim + 1];
    for k in 0..=dim {
        let fk = f.get(k).map(|&x| x as i128).unwrap_or(1);
        let mut binom = 1i128; // C(k, m) running value
        for (m, hm) in h.iter_mut().enumerate().take(k + 1) {
            let sign = if (k - m).is_multiple_of(2) { 1 } else { -1 };
            *hm += fk * binom * sign;
            binom = binom * (k - m) as i128 / (m + 1) as i128;
        }
    }
    Ok(FaceVector {
        f,
        h: h.into_iter().map(|x| x as i64).collect(),
    })
}
