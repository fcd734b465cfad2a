//! Parabolic subgroups `W_J` and quotients `W^J` of minimal-length coset
//! representatives.
//!
//! `W^J` is enumerated as the orbit of the weight `lambda_J` (coordinate 1
//! on `S \ J`, 0 on `J`): the stabilizer of `lambda_J` is exactly `W_J`, so
//! orbit points biject with cosets `w W_J`, the BFS depth of a point is the
//! length of the minimal representative, and the BFS tree hands out reduced
//! words for free.

use std::collections::{HashMap, VecDeque};

use crate::dynkin::Subset;
use crate::error::Error;
use crate::weyl::{reflect_weight, WeightVector, WeylElement, WeylGroup};

/// All of `W_J`, fully enumerated.
#[derive(Debug, Clone)]
pub struct ParabolicSubgroup {
    j: Subset,
    elements: Vec<WeylElement>,
}

impl ParabolicSubgroup {
    /// Enumerates `W_J` by walking the orbit of `rho` under the generators
    /// in `J`. Fails up front if `|W_J|` exceeds the budget.
    pub fn enumerate(group: &WeylGroup, j: Subset, budget: u64) -> Result<Self, Error> {
        group.diagram().check_subset(j)?;
        let order = group.diagram().subgroup_order(j);
        if order > budget {
            return Err(Error::BudgetExceeded {
                needed: order,
                budget,
            });
        }
        let mut seen: HashMap<WeightVector, ()> = HashMap::with_capacity(order as usize);
        let mut elements = Vec::with_capacity(order as usize);
        let mut queue = VecDeque::new();
        let e = group.identity();
        seen.insert(e.key().to_vec(), ());
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            for i in j.iter() {
                let mut key = w.key().to_vec();
                reflect_weight(group.diagram(), i, &mut key);
                if !seen.contains_key(&key) {
                    seen.insert(key.clone(), ());
                    let mut word = Vec::with_capacity(w.word().len() + 1);
                    word.push(i as u8);
                    word.extend_from_slice(w.word());
                    queue.push_back(WeylElement::from_parts(group.diagram_type(), key, word));
                }
            }
            elements.push(w);
        }
        debug_assert_eq!(elements.len() as u64, order);
        Ok(ParabolicSubgroup { j, elements })
    }

    pub fn subset(&self) -> Subset {
        self.j
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
}

/// The quotient `W^J`, indexed in BFS order (length, then discovery).
/// Index 0 is the identity coset.
#[derive(Debug, Clone)]
pub struct ParabolicQuotient<'g> {
    group: &'g WeylGroup,
    j: Subset,
    lambda: WeightVector,
    points: Vec<WeightVector>,
    words: Vec<Vec<u8>>,
    depths: Vec<u32>,
    index: HashMap<WeightVector, u32>,
}

impl<'g> ParabolicQuotient<'g> {
    pub fn enumerate(group: &'g WeylGroup, j: Subset, budget: u64) -> Result<Self, Error> {
        group.diagram().check_subset(j)?;
        if j == group.diagram().full_set() {
            return Err(Error::NotProperSubset);
        }
        let expected = group.order() / group.diagram().subgroup_order(j);
        if expected > budget {
            return Err(Error::BudgetExceeded {
                needed: expected,
                budget,
            });
        }
        let rank = group.rank();
        let lambda: WeightVector = (1..=rank)
            .map(|i| if j.contains(i) { 0 } else { 1 })
            .collect();

        let mut points = Vec::with_capacity(expected as usize);
        let mut words = Vec::with_capacity(expected as usize);
        let mut depths = Vec::with_capacity(expected as usize);
        let mut index = HashMap::with_capacity(expected as usize);
        let mut queue = VecDeque::new();

        index.insert(lambda.clone(), 0u32);
        points.push(lambda.clone());
        words.push(Vec::new());
        depths.push(0);
        queue.push_back(0u32);

        while let Some(at) = queue.pop_front() {
            for i in 1..=rank {
                let mut next = points[at as usize].clone();
                reflect_weight(group.diagram(), i, &mut next);
                if index.contains_key(&next) {
                    continue;
                }
                let id = points.len() as u32;
                let mut word = Vec::with_capacity(words[at as usize].len() + 1);
                word.push(i as u8);
                word.extend_from_slice(&words[at as usize]);
                index.insert(next.clone(), id);
                points.push(next);
                words.push(word);
                depths.push(depths[at as usize] + 1);
                queue.push_back(id);
            }
        }
        assert_eq!(points.len() as u64, expected, "orbit size is [W : W_J]");

        Ok(ParabolicQuotient {
            group,
            j,
            lambda,
            points,
            words,
            depths,
            index,
        })
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.group
    }

    pub fn subset(&self) -> Subset {
        self.j
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Reduced word of the minimal coset representative.
    pub fn word(&self, idx: u32) -> &[u8] {
        &self.words[idx as usize]
    }

    /// Length of the minimal coset representative (its BFS depth).
    pub fn length(&self, idx: u32) -> u32 {
        self.depths[idx as usize]
    }

    /// The orbit point `w(lambda_J)`.
    pub fn point(&self, idx: u32) -> &[i64] {
        &self.points[idx as usize]
    }

    pub fn index_of_point(&self, point: &[i64]) -> Option<u32> {
        self.index.get(point).copied()
    }

    /// Materializes the minimal representative as a group element.
    pub fn element(&self, idx: u32) -> WeylElement {
        let word = &self.words[idx as usize];
        let key = self.group.apply_word_to_weight(word, &self.group.rho());
        WeylElement::from_parts(self.group.diagram_type(), key, word.clone())
    }

    /// Index of `(w)_0`, the minimal representative of `w W_J`.
    pub fn min_rep_index(&self, w: &WeylElement) -> Result<u32, Error> {
        if w.diagram_type() != self.group.diagram_type() {
            return Err(Error::DiagramMismatch(
                w.diagram_type(),
                self.group.diagram_type(),
            ));
        }
        let point = self.group.apply_word_to_weight(w.word(), &self.lambda);
        Ok(self.index[&point])
    }

    /// Whether `w` itself is a minimal coset representative.
    pub fn is_minimal_rep(&self, w: &WeylElement) -> Result<bool, Error> {
        let idx = self.min_rep_index(w)?;
        Ok(self.depths[idx as usize] == w.length())
    }

    /// Index of the unique length-maximal element of `W^J`.
    pub fn max_length_index(&self) -> u32 {
        let last = self.points.len() as u32 - 1;
        debug_assert!(
            self.depths
                .iter()
                .filter(|&&d| d == self.depths[last as usize])
                .count()
                == 1,
            "the top of W^J is unique"
        );
        last
    }
}

/// `(w)_0`: repeatedly strips a length-decreasing `s in J` from the right.
pub fn min_coset_rep(group: &WeylGroup, w: &WeylElement, j: Subset) -> Result<WeylElement, Error> {
    group.diagram().check_subset(j)?;
    if w.diagram_type() != group.diagram_type() {
        return Err(Error::DiagramMismatch(
            w.diagram_type(),
            group.diagram_type(),
        ));
    }
    // Work on m = key(w^{-1}): a right descent of w at s is a left descent
    // of w^{-1} at s, and w <- ws turns m into s(m).
    let rev: Vec<u8> = w.word().iter().rev().copied().collect();
    let mut m = group.apply_word_to_weight(&rev, &group.rho());
    while let Some(s) = j.iter().find(|&s| m[s - 1] < 0) {
        reflect_weight(group.diagram(), s, &mut m);
    }
    let inv = group.element_from_key(m);
    group.inverse(&inv)
}
