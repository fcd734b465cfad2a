//! The descent system `(W^J, S^J)` and the augmented poset statistics.
//!
//! `S^J = (W_J (S \ J) W_J) ∩ W^J` plays the role of the simple reflections
//! for the quotient. Every coset in the double coset `W_J s W_J` is of the
//! form `u s W_J` with `u in W_J`, so the class `S^J_s` is computed in one
//! pass as `{ (u s)_0 : u in W_J }`.
//!
//! The order on `W^J` used throughout is the restriction of the Bruhat
//! order of `W` to the minimal representatives (one sometimes sees a
//! different ordering attached to augmented posets; everything here is the
//! plain restricted Bruhat order). For `w in W^J` and `r in S^J` exactly
//! one of `(wr)_0 < w`, `w < (wr)_0` holds, and the two minimal
//! representatives are never equal. Descents are therefore decided by
//! comparing lengths of minimal representatives; the full Bruhat comparator
//! only appears in the cross-validation suites.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::dynkin::Subset;
use crate::error::Error;
use crate::parabolic::{ParabolicQuotient, ParabolicSubgroup};
use crate::smoothness;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscentDescent {
    Ascent,
    Descent,
}

/// A polynomial in one indeterminate per node of `S \ J`, with nonnegative
/// integer coefficients keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPolynomial {
    vars: Vec<usize>,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl MultiPolynomial {
    pub fn new(vars: Vec<usize>) -> Self {
        MultiPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Node indices owning the variables, ascending.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coefficient: u64) {
        assert_eq!(exponents.len(), self.vars.len());
        if coefficient > 0 {
            *self.terms.entry(exponents).or_insert(0) += coefficient;
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms sorted by total degree, then lexicographically.
    pub fn graded_terms(&self) -> Vec<(&[u32], u64)> {
        let mut out: Vec<(&[u32], u64)> =
            self.terms.iter().map(|(e, &c)| (e.as_slice(), c)).collect();
        out.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), e.to_vec()));
        out
    }

    /// Substitutes the same value `t` for every variable; returns the
    /// univariate coefficients indexed by degree.
    pub fn specialize(&self) -> Vec<u64> {
        let top = self
            .terms
            .keys()
            .map(|e| e.iter().sum::<u32>() as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![0u64; top + 1];
        for (e, &c) in &self.terms {
            out[e.iter().sum::<u32>() as usize] += c;
        }
        out
    }
}

/// A directed edge `u -> v` of the orbit polytope skeleton, realized as
/// `v = (u r)_0` for an ascent `r` of `u`; tagged by the class of `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: u32,
    pub to: u32,
    pub class_node: usize,
}

/// All `(u, r)` ascent pairs of the quotient, as edges. The pair count is
/// `sum_w nu(w)`; the number of distinct `(from, to)` pairs is tracked
/// separately so collapses would be visible.
#[derive(Debug, Clone)]
pub struct EdgeSet {
    edges: Vec<Edge>,
    distinct_pairs: usize,
}

impl EdgeSet {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn distinct_pairs(&self) -> usize {
        self.distinct_pairs
    }

    /// Number of edges meeting each vertex, counted over distinct pairs.
    pub fn vertex_degrees(&self, num_vertices: usize) -> Vec<usize> {
        let mut deg = vec![0usize; num_vertices];
        let mut seen = HashSet::new();
        for e in &self.edges {
            if seen.insert((e.from, e.to)) {
                deg[e.from as usize] += 1;
                deg[e.to as usize] += 1;
            }
        }
        deg
    }
}

/// The descent system of `J`, with the `nu` table of the augmented poset
/// cached densely over `W^J x (S \ J)`.
#[derive(Debug)]
pub struct DescentSystem<'g> {
    quotient: ParabolicQuotient<'g>,
    complement: Vec<usize>,
    /// `parts[k]` lists the quotient indices of `S^J_{s_k}`, ascending.
    parts: Vec<Vec<u32>>,
    /// Global enumeration of `S^J`: `(class position, quotient index)`,
    /// classes in ascending node order.
    sj: Vec<(usize, u32)>,
    /// `class_of[idx]` for `idx in S^J`: position in `sj`.
    sj_position: BTreeMap<u32, usize>,
    /// `targets[w][p]` = index of `(w r_p)_0`.
    targets: Vec<Vec<u32>>,
    /// `nu[w][k]` = number of ascents of `w` in class `k`.
    nu: Vec<Vec<u32>>,
}

impl<'g> DescentSystem<'g> {
    /// Builds the full descent system for `J`. Requires enumerating `W_J`
    /// and `W^J`, both guarded by `budget`.
    pub fn compute(group: &'g WeylGroup, j: Subset, budget: u64) -> Result<Self, Error> {
        let quotient = ParabolicQuotient::enumerate(group, j, budget)?;
        let subgroup = ParabolicSubgroup::enumerate(group, j, budget)?;
        let rank = group.rank();
        let complement: Vec<usize> = (1..=rank).filter(|&i| !j.contains(i)).collect();

        let mut parts = Vec::with_capacity(complement.len());
        for &s in &complement {
            let mut s_lambda = quotient.lambda().to_vec();
            crate::weyl::reflect_weight(group.diagram(), s, &mut s_lambda);
            let mut class = BTreeSet::new();
            for u in subgroup.elements() {
                // (u s)(lambda) = u(s(lambda))
                let point = group.apply_word_to_weight(u.word(), &s_lambda);
                let idx = quotient
                    .index_of_point(&point)
                    .expect("orbit point of the same quotient");
                debug_assert_ne!(idx, 0, "the identity never lies in S^J");
                class.insert(idx);
            }
            parts.push(class.into_iter().collect::<Vec<u32>>());
        }

        let mut sj = Vec::new();
        let mut sj_position = BTreeMap::new();
        for (k, part) in parts.iter().enumerate() {
            for &idx in part {
                sj_position.insert(idx, sj.len());
                sj.push((k, idx));
            }
        }
        debug_assert_eq!(sj_position.len(), sj.len(), "the classes are disjoint");

        let n = quotient.len();
        let mut targets = Vec::with_capacity(n);
        let mut nu = Vec::with_capacity(n);
        for w in 0..n as u32 {
            let word = quotient.word(w);
            let mut trow = Vec::with_capacity(sj.len());
            let mut nrow = vec![0u32; complement.len()];
            for &(k, r) in &sj {
                // (w r)(lambda) = w(r(lambda)), and r(lambda) is r's own
                // orbit point.
                let point = group.apply_word_to_weight(word, quotient.point(r));
                let m = quotient
                    .index_of_point(&point)
                    .expect("orbit point of the same quotient");
                debug_assert_ne!(m, w, "(wr)_0 is never w itself");
                debug_assert_ne!(
                    quotient.length(m),
                    quotient.length(w),
                    "minimal representatives of w and wr differ in length"
                );
                if quotient.length(m) > quotient.length(w) {
                    nrow[k] += 1;
                }
                trow.push(m);
            }
            targets.push(trow);
            nu.push(nrow);
        }

        Ok(DescentSystem {
            quotient,
            complement,
            parts,
            sj,
            sj_position,
            targets,
            nu,
        })
    }

    pub fn quotient(&self) -> &ParabolicQuotient<'g> {
        &self.quotient
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.quotient.group()
    }

    pub fn subset(&self) -> Subset {
        self.quotient.subset()
    }

    /// `S \ J` in ascending node order.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Quotient indices of the class `S^J_s`.
    pub fn part(&self, s: usize) -> Option<&[u32]> {
        let k = self.complement.iter().position(|&x| x == s)?;
        Some(&self.parts[k])
    }

    /// All of `S^J` as `(class node, quotient index)` pairs, classes in
    /// ascending node order.
    pub fn sj_members(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.sj.iter().map(|&(k, r)| (self.complement[k], r))
    }

    pub fn sj_size(&self) -> usize {
        self.sj.len()
    }

    pub fn contains_in_sj(&self, idx: u32) -> bool {
        self.sj_position.contains_key(&idx)
    }

    /// Index of `(w r)_0` for `r in S^J` (given by quotient index).
    pub fn target(&self, w: u32, r: u32) -> u32 {
        let p = self.sj_position[&r];
        self.targets[w as usize][p]
    }

    /// Whether `r` is an ascent or a descent of `w`; exactly one holds.
    pub fn ascent_descent(&self, w: u32, r: u32) -> AscentDescent {
        let m = self.target(w, r);
        if self.quotient.length(m) > self.quotient.length(w) {
            AscentDescent::Ascent
        } else {
            AscentDescent::Descent
        }
    }

    /// `A^J(w)` as quotient indices, in the canonical `S^J` order.
    pub fn ascent_set(&self, w: u32) -> Vec<u32> {
        self.sj
            .iter()
            .enumerate()
            .filter(|&(p, _)| {
                self.quotient.length(self.targets[w as usize][p]) > self.quotient.length(w)
            })
            .map(|(_, &(_, r))| r)
            .collect()
    }

    /// `D^J(w)` as quotient indices, in the canonical `S^J` order.
    pub fn descent_set(&self, w: u32) -> Vec<u32> {
        self.sj
            .iter()
            .enumerate()
            .filter(|&(p, _)| {
                self.quotient.length(self.targets[w as usize][p]) < self.quotient.length(w)
            })
            .map(|(_, &(_, r))| r)
            .collect()
    }

    /// `nu_s(w)`, the number of ascents of `w` in class `s`.
    pub fn nu(&self, w: u32, s: usize) -> u32 {
        let k = self
            .complement
            .iter()
            .position(|&x| x == s)
            .expect("s must lie in S \\ J");
        self.nu[w as usize][k]
    }

    /// The `nu` row of `w`, aligned with `complement()`.
    pub fn nu_row(&self, w: u32) -> &[u32] {
        &self.nu[w as usize]
    }

    pub fn nu_total(&self, w: u32) -> u32 {
        self.nu[w as usize].iter().sum()
    }

    /// `H(t) = sum_{w in W^J} prod_s t_s^{nu_s(w)}`.
    pub fn h_polynomial(&self) -> MultiPolynomial {
        let mut poly = MultiPolynomial::new(self.complement.clone());
        for row in &self.nu {
            poly.add_term(row.clone(), 1);
        }
        poly
    }

    /// All ascent pairs `(w, r)` as edges `w -> (w r)_0`.
    pub fn edges(&self) -> EdgeSet {
        let mut edges = Vec::new();
        let mut pairs = HashSet::new();
        for w in 0..self.quotient.len() as u32 {
            for (p, &(k, _)) in self.sj.iter().enumerate() {
                let m = self.targets[w as usize][p];
                if self.quotient.length(m) > self.quotient.length(w) {
                    edges.push(Edge {
                        from: w,
                        to: m,
                        class_node: self.complement[k],
                    });
                    pairs.insert((w, m));
                }
            }
        }
        EdgeSet {
            edges,
            distinct_pairs: pairs.len(),
        }
    }
}

/// The closed-form class `S^J_s` for combinatorially smooth `J`: the
/// singleton `{s}` when `s` commutes with all of `J`, otherwise the chain
/// `s, t_1 s, t_2 t_1 s, ...` walking the attached component away from `s`.
pub fn chain_formula_sjs(
    group: &WeylGroup,
    j: Subset,
    s: usize,
) -> Result<Vec<WeylElement>, Error> {
    let diagram = group.diagram();
    diagram.check_subset(j)?;
    if s < 1 || s > diagram.rank() || j.contains(s) {
        return Err(Error::NodeNotInSubset { node: s });
    }
    let report = smoothness::is_combinatorially_smooth(diagram, j)?;
    if !report.smooth {
        return Err(Error::NotCombinatoriallySmooth);
    }

    let touching = diagram.neighbors(s).intersection(j);
    let mut word = vec![s as u8];
    let mut out = vec![group.element_from_word(&word)?];
    if touching.is_empty() {
        return Ok(out);
    }
    let t = touching.iter().next().expect("nonempty");
    let component = diagram
        .connected_components(j)
        .into_iter()
        .find(|c| c.contains(t))
        .expect("t lies in a component of J");
    let mut prev = s;
    let mut cur = t;
    loop {
        word.insert(0, cur as u8);
        out.push(group.element_from_word(&word)?);
        let next = diagram
            .neighbors(cur)
            .intersection(component)
            .iter()
            .find(|&x| x != prev);
        match next {
            Some(x) => {
                prev = cur;
                cur = x;
            }
            None => break,
        }
    }
    Ok(out)
}
