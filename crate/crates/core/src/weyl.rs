//! Weyl group elements: canonical forms, lengths, products, Bruhat order.
//!
//! An element is identified by the image of the strictly dominant vector
//! `rho = (1,...,1)` (in fundamental-weight coordinates). Since `rho` has
//! trivial stabilizer this key is faithful, equality is O(rank), and a
//! reduced word can be read back off the key by stripping left descents.
//!
//! Lengths are computed by counting positive roots sent to negative ones,
//! which stays correct even when an intermediate word is not reduced.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::dynkin::{DiagramType, DynkinDiagram};
use crate::error::Error;

/// Integer coordinates in the fundamental-weight basis.
pub type WeightVector = Vec<i64>;

/// Applies the simple reflection `s_i` to a weight in place:
/// `v <- v - v_i * (i-th Cartan row)`.
pub fn reflect_weight(diagram: &DynkinDiagram, i: usize, v: &mut [i64]) {
    let c = v[i - 1];
    if c == 0 {
        return;
    }
    for (j, x) in v.iter_mut().enumerate() {
        *x -= c * diagram.cartan(i, j + 1);
    }
}

/// Positive roots in simple-root coordinates, with per-generator action
/// tables. `|roots|` always matches the classical count for the type.
#[derive(Debug, Clone)]
pub struct RootTable {
    roots: Vec<Vec<i64>>,
    /// `action[i-1][r]` encodes `s_i(beta_r)` as `+-(index+1)`; the sign
    /// flips exactly when `beta_r = alpha_i`.
    action: Vec<Vec<i32>>,
}

impl RootTable {
    fn build(diagram: &DynkinDiagram) -> RootTable {
        let n = diagram.rank();
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..n {
            let mut alpha = vec![0i64; n];
            alpha[i] = 1;
            index.insert(alpha.clone(), i);
            roots.push(alpha);
        }
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(r) = queue.pop_front() {
            for i in 1..=n {
                let beta = &roots[r];
                // <beta, alpha_i^vee> = sum_j beta_j * cartan(j, i)
                let pairing: i64 = beta
                    .iter()
                    .enumerate()
                    .map(|(j, &b)| b * diagram.cartan(j + 1, i))
                    .sum();
                let mut gamma = beta.clone();
                gamma[i - 1] -= pairing;
                if gamma.iter().any(|&x| x < 0) {
                    continue;
                }
                if !index.contains_key(&gamma) {
                    index.insert(gamma.clone(), roots.len());
                    roots.push(gamma);
                    queue.push_back(roots.len() - 1);
                }
            }
        }
        assert_eq!(
            roots.len(),
            diagram.diagram_type().positive_root_count(),
            "root closure must match the classical positive root count"
        );
        let action = (1..=n)
            .map(|i| {
                roots
                    .iter()
                    .map(|beta| {
                        let pairing: i64 = beta
                            .iter()
                            .enumerate()
                            .map(|(j, &b)| b * diagram.cartan(j + 1, i))
                            .sum();
                        let mut gamma = beta.clone();
                        gamma[i - 1] -= pairing;
                        if gamma.iter().all(|&x| x <= 0) {
                            // beta = alpha_i, reflected to its negative
                            let neg: Vec<i64> = gamma.iter().map(|&x| -x).collect();
                            -((index[&neg] + 1) as i32)
                        } else {
                            (index[&gamma] + 1) as i32
                        }
                    })
                    .collect()
            })
            .collect();
        RootTable { roots, action }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }
}

/// A Weyl group element: canonical key plus one reduced word witness.
/// Two elements are equal exactly when their keys agree.
#[derive(Debug, Clone)]
pub struct WeylElement {
    dtype: DiagramType,
    key: WeightVector,
    word: Vec<u8>,
}

impl WeylElement {
    /// Assembles an element from a key and a matching reduced word.
    /// Callers are responsible for the pair being consistent.
    pub(crate) fn from_parts(dtype: DiagramType, key: WeightVector, word: Vec<u8>) -> Self {
        WeylElement { dtype, key, word }
    }

    pub fn diagram_type(&self) -> DiagramType {
        self.dtype
    }

    /// Image of `rho` under this element.
    pub fn key(&self) -> &[i64] {
        &self.key
    }

    /// A reduced word, as 1-based generator indices, leftmost factor first.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> u32 {
        self.word.len() as u32
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.dtype == other.dtype && self.key == other.key
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dtype.hash(state);
        self.key.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// A Weyl group: the diagram plus its root table.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    diagram: DynkinDiagram,
    roots: RootTable,
}

impl WeylGroup {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let roots = RootTable::build(&diagram);
        WeylGroup { diagram, roots }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn diagram_type(&self) -> DiagramType {
        self.diagram.diagram_type()
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn root_table(&self) -> &RootTable {
        &self.roots
    }

    pub fn order(&self) -> u64 {
        self.diagram.group_order()
    }

    pub fn rho(&self) -> WeightVector {
        vec![1; self.rank()]
    }

    fn check_node(&self, i: usize) -> Result<(), Error> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: i,
                dtype: self.diagram_type(),
            })
        }
    }

    fn check_element(&self, w: &WeylElement) -> Result<(), Error> {
        if w.dtype == self.diagram_type() {
            Ok(())
        } else {
            Err(Error::DiagramMismatch(w.dtype, self.diagram_type()))
        }
    }

    /// `s_i(v)`, leaving `v` untouched.
    pub fn simple_reflection_apply(
        &self,
        i: usize,
        v: &WeightVector,
    ) -> Result<WeightVector, Error> {
        self.check_node(i)?;
        let mut out = v.clone();
        reflect_weight(&self.diagram, i, &mut out);
        Ok(out)
    }

    /// Applies a word to a weight: the rightmost letter acts first.
    pub fn apply_word_to_weight(&self, word: &[u8], v: &[i64]) -> WeightVector {
        let mut out = v.to_vec();
        for &i in word.iter().rev() {
            reflect_weight(&self.diagram, i as usize, &mut out);
        }
        out
    }

    /// Image of the positive root with index `r` under a word, as
    /// `(index, positive?)`.
    pub fn apply_word_to_root(&self, word: &[u8], r: usize) -> (usize, bool) {
        let mut idx = r;
        let mut positive = true;
        for &i in word.iter().rev() {
            let t = self.roots.action[i as usize - 1][idx];
            idx = t.unsigned_abs() as usize - 1;
            if t < 0 {
                positive = !positive;
            }
        }
        (idx, positive)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            dtype: self.diagram_type(),
            key: self.rho(),
            word: Vec::new(),
        }
    }

    pub fn simple(&self, i: usize) -> Result<WeylElement, Error> {
        self.check_node(i)?;
        self.element_from_word(&[i as u8])
    }

    /// Builds the element given by any (not necessarily reduced) word.
    pub fn element_from_word(&self, word: &[u8]) -> Result<WeylElement, Error> {
        for &i in word {
            self.check_node(i as usize)?;
        }
        let key = self.apply_word_to_weight(word, &self.rho());
        Ok(self.element_from_key(key))
    }

    /// Recovers the canonical element from a `rho`-image: strip left
    /// descents (negative key coordinates) until reaching `rho` itself.
    /// The collected word is reduced.
    pub fn element_from_key(&self, key: WeightVector) -> WeylElement {
        let mut k = key.clone();
        let mut word = Vec::new();
        while let Some(p) = k.iter().position(|&x| x < 0) {
            let i = p + 1;
            reflect_weight(&self.diagram, i, &mut k);
            word.push(i as u8);
        }
        debug_assert!(k.iter().all(|&x| x == 1), "key must normalize to rho");
        let elem = WeylElement {
            dtype: self.diagram_type(),
            key,
            word,
        };
        debug_assert_eq!(elem.length(), self.length_by_inversions(&elem));
        elem
    }

    /// Number of positive roots sent to negative roots.
    pub fn length_by_inversions(&self, w: &WeylElement) -> u32 {
        (0..self.roots.len())
            .filter(|&r| !self.apply_word_to_root(&w.word, r).1)
            .count() as u32
    }

    pub fn multiply(&self, u: &WeylElement, w: &WeylElement) -> Result<WeylElement, Error> {
        self.check_element(u)?;
        self.check_element(w)?;
        let key = self.apply_word_to_weight(&u.word, &w.key);
        Ok(self.element_from_key(key))
    }

    pub fn inverse(&self, w: &WeylElement) -> Result<WeylElement, Error> {
        self.check_element(w)?;
        let word: Vec<u8> = w.word.iter().rev().copied().collect();
        let key = self.apply_word_to_weight(&word, &self.rho());
        Ok(WeylElement {
            dtype: self.diagram_type(),
            key,
            word,
        })
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        !self.apply_word_to_root(&w.word, i - 1).1
    }

    /// `l(s_i w) < l(w)`, read off the key sign.
    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        w.key[i - 1] < 0
    }

    /// Bruhat order on `W` via the greedy right-to-left subword scan over
    /// the reduced word of `v`. Cross-validated against the cover-relation
    /// oracle in the test suites.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> Result<bool, Error> {
        self.check_element(u)?;
        self.check_element(v)?;
        if u.length() > v.length() {
            return Ok(false);
        }
        // Track m = key(u^{-1}); a right descent of u at s is a left descent
        // of u^{-1} at s, and u <- u s maps m <- s(m).
        let mut m = self.apply_word_to_weight(
            &u.word.iter().rev().copied().collect::<Vec<u8>>(),
            &self.rho(),
        );
        for &i in v.word.iter().rev() {
            if m[i as usize - 1] < 0 {
                reflect_weight(&self.diagram, i as usize, &mut m);
            }
        }
        Ok(m.iter().all(|&x| x == 1))
    }

    /// Enumerates all of `W` by a breadth-first orbit walk of `rho`,
    /// in order of increasing length.
    pub fn enumerate(&self, budget: u64) -> Result<Vec<WeylElement>, Error> {
        let order = self.order();
        if order > budget {
            return Err(Error::BudgetExceeded {
                needed: order,
                budget,
            });
        }
        let mut seen: HashMap<WeightVector, ()> = HashMap::with_capacity(order as usize);
        let mut out = Vec::with_capacity(order as usize);
        let mut queue = VecDeque::new();
        let e = self.identity();
        seen.insert(e.key.clone(), ());
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let mut key = w.key.clone();
                reflect_weight(&self.diagram, i, &mut key);
                if !seen.contains_key(&key) {
                    seen.insert(key.clone(), ());
                    let mut word = Vec::with_capacity(w.word.len() + 1);
                    word.push(i as u8);
                    word.extend_from_slice(&w.word);
                    queue.push_back(WeylElement {
                        dtype: self.diagram_type(),
                        key,
                        word,
                    });
                }
            }
            out.push(w);
        }
        Ok(out)
    }
}
