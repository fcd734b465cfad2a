//! Irreducible Dynkin diagrams and graph combinatorics on subsets of nodes.
//!
//! Node numbering follows one fixed convention so that classification lists
//! are directly comparable:
//!
//! * `A_n`, `B_n`, `C_n`, `F_4`, `G_2`: a path `s_1 - s_2 - ... - s_n`.
//!   `B_n` has `alpha_n` short, `C_n` has `alpha_n` long.
//! * `D_n`: a path `s_1 - ... - s_{n-2}` with both `s_{n-1}` and `s_n`
//!   attached to `s_{n-2}`.
//! * `E_n`: the nodes `s_1 .. s_{n-1}` form the `A_{n-1}` path and the branch
//!   node `s_n` attaches to `s_3` (E6), `s_4` (E7), `s_5` (E8).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Family letter of an irreducible diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// An irreducible type, e.g. `B4` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagramType {
    family: Family,
    rank: u8,
}

impl DiagramType {
    /// Checks the rank bounds: `A n>=1`, `B n>=2`, `C n>=3`, `D n>=4`,
    /// `E n in {6,7,8}`, `F n=4`, `G n=2`.
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > 16 {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(DiagramType {
            family,
            rank: rank as u8,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Order of the Weyl group of this type.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u32;
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (1u64 << n) * factorial(n),
            Family::D => (1u64 << (n - 1)) * factorial(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank as usize;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DiagramType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::BadDiagramName(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadDiagramName(s.to_string()))?;
        DiagramType::new(family, rank)
    }
}

/// A subset of the nodes `{1, ..., rank}`, stored as a bitmask.
///
/// The ordering is canonical for printed lists: first by size, then
/// lexicographically on the sorted node sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u16);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn full(rank: usize) -> Self {
        Subset(((1u32 << rank) - 1) as u16)
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> Self {
        let mut s = Subset(0);
        for n in nodes {
            s = s.with(n);
        }
        s
    }

    pub fn contains(&self, node: usize) -> bool {
        (1..=16).contains(&node) && self.0 & (1 << (node - 1)) != 0
    }

    #[must_use]
    pub fn with(&self, node: usize) -> Self {
        debug_assert!((1..=16).contains(&node));
        Subset(self.0 | (1 << (node - 1)))
    }

    #[must_use]
    pub fn without(&self, node: usize) -> Self {
        Subset(self.0 & !(1 << (node - 1)))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(&self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(&self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Nodes in ascending order (1-based).
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.0;
        (1..=16usize).filter(move |n| mask & (1 << (n - 1)) != 0)
    }

    pub fn nodes(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Parses a comma-separated list of node indices; empty input is the
    /// empty set.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut s = Subset::empty();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let n: usize = part
                .parse()
                .map_err(|_| Error::BadSubset(text.to_string()))?;
            if !(1..=16).contains(&n) {
                return Err(Error::BadSubset(text.to_string()));
            }
            s = s.with(n);
        }
        Ok(s)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, n) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "s{n}")?;
        }
        write!(f, "}}")
    }
}

/// Kind of a connected induced subdiagram, used for order formulas.
/// `B_k` and `C_k` are not distinguished: their Weyl groups coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    A(usize),
    BC(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl ComponentKind {
    pub fn weyl_order(&self) -> u64 {
        match *self {
            ComponentKind::A(k) => factorial(k as u32 + 1),
            ComponentKind::BC(k) => (1u64 << k) * factorial(k as u32),
            ComponentKind::D(k) => (1u64 << (k - 1)) * factorial(k as u32),
            ComponentKind::E(6) => 51_840,
            ComponentKind::E(7) => 2_903_040,
            ComponentKind::E(_) => 696_729_600,
            ComponentKind::F4 => 1_152,
            ComponentKind::G2 => 12,
        }
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// An irreducible Dynkin diagram with its (generalized) Cartan matrix.
///
/// `cartan(i, j)` is the coefficient of the fundamental weight `w_j` in the
/// simple root `alpha_i`, so a simple reflection acts on fundamental-weight
/// coordinates by `s_i(v) = v - v_i * row_i`.
#[derive(Debug, Clone)]
pub struct DynkinDiagram {
    dtype: DiagramType,
    cartan: Vec<Vec<i64>>,
    adj: Vec<Subset>,
}

impl DynkinDiagram {
    pub fn new(dtype: DiagramType) -> Self {
        let n = dtype.rank();
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize, cij: i64, cji: i64| {
            c[i - 1][j - 1] = cij;
            c[j - 1][i - 1] = cji;
        };
        match dtype.family() {
            Family::A => {
                for i in 1..n {
                    edge(&mut cartan, i, i + 1, -1, -1);
                }
            }
            Family::B => {
                for i in 1..n - 1 {
                    edge(&mut cartan, i, i + 1, -1, -1);
                }
                // alpha_n short
                edge(&mut cartan, n - 1, n, -2, -1);
            }
            Family::C => {
                for i in 1..n - 1 {
                    edge(&mut cartan, i, i + 1, -1, -1);
                }
                // alpha_n long
                edge(&mut cartan, n - 1, n, -1, -2);
            }
            Family::D => {
                for i in 1..n - 2 {
                    edge(&mut cartan, i, i + 1, -1, -1);
                }
                edge(&mut cartan, n - 2, n - 1, -1, -1);
                edge(&mut cartan, n - 2, n, -1, -1);
            }
            Family::E => {
                for i in 1..n - 1 {
                    edge(&mut cartan, i, i + 1, -1, -1);
                }
                edge(&mut cartan, n - 3, n, -1, -1);
            }
            Family::F => {
                edge(&mut cartan, 1, 2, -1, -1);
                edge(&mut cartan, 2, 3, -2, -1);
                edge(&mut cartan, 3, 4, -1, -1);
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                edge(&mut cartan, 1, 2, -1, -3);
            }
        }
        let adj = (1..=n)
            .map(|i| Subset::from_nodes((1..=n).filter(|&j| j != i && cartan[i - 1][j - 1] != 0)))
            .collect();
        DynkinDiagram { dtype, cartan, adj }
    }

    pub fn diagram_type(&self) -> DiagramType {
        self.dtype
    }

    pub fn rank(&self) -> usize {
        self.dtype.rank()
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.rank())
    }

    /// Cartan entry, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_row(&self, i: usize) -> &[i64] {
        &self.cartan[i - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Nodes adjacent to `i` in the Coxeter graph (`s_i s_j != s_j s_i`).
    pub fn neighbors(&self, i: usize) -> Subset {
        self.adj[i - 1]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan(i, j) != 0
    }

    /// Whether the bond between two adjacent nodes is a single bond.
    pub fn simply_laced_edge(&self, i: usize, j: usize) -> bool {
        self.cartan(i, j) == -1 && self.cartan(j, i) == -1
    }

    /// Nodes with at most one neighbor in the full diagram.
    pub fn end_nodes(&self) -> Subset {
        Subset::from_nodes((1..=self.rank()).filter(|&i| self.neighbors(i).len() <= 1))
    }

    /// Maximal connected pieces of the induced subgraph on `set`, ordered by
    /// their smallest node.
    pub fn connected_components(&self, set: Subset) -> Vec<Subset> {
        let mut seen = Subset::empty();
        let mut parts = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = Subset::empty();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if comp.contains(v) {
                    continue;
                }
                comp = comp.with(v);
                for w in self.neighbors(v).intersection(set).iter() {
                    if !comp.contains(w) {
                        stack.push(w);
                    }
                }
            }
            seen = seen.union(comp);
            parts.push(comp);
        }
        parts
    }

    pub fn is_connected(&self, set: Subset) -> bool {
        self.connected_components(set).len() == 1
    }

    /// Decides whether `chain \ {t}` inside `chain` is a type-A inclusion:
    /// the induced subdiagram on `chain` must be a simply-laced path and `t`
    /// an end node of that path. Singletons qualify.
    pub fn is_type_a_chain_setup(&self, chain: Subset, t: usize) -> Result<bool, Error> {
        if !chain.contains(t) {
            return Err(Error::NodeNotInSubset { node: t });
        }
        if !self.is_connected(chain) {
            return Ok(false);
        }
        for i in chain.iter() {
            let inside = self.neighbors(i).intersection(chain);
            if inside.len() > 2 {
                return Ok(false);
            }
            for j in inside.iter() {
                if !self.simply_laced_edge(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(self.neighbors(t).intersection(chain).len() <= 1)
    }

    /// Recognizes the type of a connected induced subdiagram.
    ///
    /// Panics if `comp` is empty or not connected; any connected induced
    /// subdiagram of a finite-type diagram is itself of finite type.
    pub fn classify_component(&self, comp: Subset) -> ComponentKind {
        let n = comp.len();
        assert!(n > 0, "cannot classify an empty component");
        if n == 1 {
            return ComponentKind::A(1);
        }
        let mut max_degree = 0;
        let mut branch = None;
        let mut doubles = Vec::new();
        let mut triple = false;
        for i in comp.iter() {
            let inside = self.neighbors(i).intersection(comp);
            if inside.len() > max_degree {
                max_degree = inside.len();
                branch = Some(i);
            }
            for j in inside.iter() {
                if j > i {
                    match self.cartan(i, j) * self.cartan(j, i) {
                        1 => {}
                        2 => doubles.push((i, j)),
                        _ => triple = true,
                    }
                }
            }
        }
        if triple {
            assert_eq!(n, 2, "triple bond only occurs in G2");
            return ComponentKind::G2;
        }
        if max_degree <= 2 {
            // a path
            match doubles.as_slice() {
                [] => ComponentKind::A(n),
                [(a, b)] => {
                    let end_touches = self.neighbors(*a).intersection(comp).len() == 1
                        || self.neighbors(*b).intersection(comp).len() == 1;
                    if end_touches {
                        ComponentKind::BC(n)
                    } else {
                        assert_eq!(n, 4, "interior double bond only occurs in F4");
                        ComponentKind::F4
                    }
                }
                _ => unreachable!("finite-type path has at most one double bond"),
            }
        } else {
            let b = branch.expect("branch node exists");
            let mut arms: Vec<usize> = self
                .neighbors(b)
                .intersection(comp)
                .iter()
                .map(|first| {
                    let mut len = 0;
                    let mut prev = b;
                    let mut cur = first;
                    loop {
                        len += 1;
                        let next = self
                            .neighbors(cur)
                            .intersection(comp)
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
                    len
                })
                .collect();
            arms.sort_unstable_by(|a, b| b.cmp(a));
            match arms.as_slice() {
                [_, 1, 1] => ComponentKind::D(n),
                [p, 2, 1] if (2..=4).contains(p) => ComponentKind::E(n),
                _ => unreachable!("not a finite-type branched diagram"),
            }
        }
    }

    /// `|W_K|` for `K = set`, as the product of the component orders.
    pub fn subgroup_order(&self, set: Subset) -> u64 {
        self.connected_components(set)
            .iter()
            .map(|&c| self.classify_component(c).weyl_order())
            .product()
    }

    /// Order of the full Weyl group.
    pub fn group_order(&self) -> u64 {
        self.dtype.weyl_order()
    }

    /// Checks that a subset only uses nodes of this diagram.
    pub fn check_subset(&self, set: Subset) -> Result<(), Error> {
        match set.iter().find(|&n| n > self.rank()) {
            Some(node) => Err(Error::NodeOutOfRange {
                node,
                dtype: self.dtype,
            }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn diagram(name: &str) -> DynkinDiagram {
        DynkinDiagram::new(name.parse().unwrap())
    }

    fn subset(nodes: &[usize]) -> Subset {
        Subset::from_nodes(nodes.iter().copied())
    }

    #[test]
    fn rank_bounds_per_family() {
        assert!(DiagramType::new(Family::A, 1).is_ok());
        assert!(DiagramType::new(Family::A, 0).is_err());
        assert!(DiagramType::new(Family::B, 2).is_ok());
        assert!(DiagramType::new(Family::B, 1).is_err());
        assert!(DiagramType::new(Family::C, 3).is_ok());
        assert!(DiagramType::new(Family::C, 2).is_err());
        assert!(DiagramType::new(Family::D, 4).is_ok());
        assert!(DiagramType::new(Family::D, 3).is_err());
        for n in [6, 7, 8] {
            assert!(DiagramType::new(Family::E, n).is_ok());
        }
        assert!(DiagramType::new(Family::E, 5).is_err());
        assert!(DiagramType::new(Family::E, 9).is_err());
        assert!(DiagramType::new(Family::F, 4).is_ok());
        assert!(DiagramType::new(Family::F, 3).is_err());
        assert!(DiagramType::new(Family::G, 2).is_ok());
        assert!(DiagramType::new(Family::G, 3).is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["A1", "A7", "B4", "C3", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let t: DiagramType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("H3".parse::<DiagramType>().is_err());
        assert!("A".parse::<DiagramType>().is_err());
        assert!("".parse::<DiagramType>().is_err());
    }

    #[test]
    fn cartan_a3_rows() {
        let d = diagram("A3");
        assert_eq!(
            d.cartan_matrix(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
    }

    #[test]
    fn cartan_g2_off_diagonal_pair() {
        let d = diagram("G2");
        let mut pair = [d.cartan(1, 2), d.cartan(2, 1)];
        pair.sort();
        assert_eq!(pair, [-3, -1]);
    }

    #[test]
    fn cartan_b3_and_c3_short_long() {
        let b = diagram("B3");
        assert_eq!(b.cartan(2, 3) * b.cartan(3, 2), 2);
        // alpha_3 short in B3: alpha_2's coefficient on omega_3 is -2
        assert_eq!(b.cartan(2, 3), -2);
        let c = diagram("C3");
        assert_eq!(c.cartan(2, 3) * c.cartan(3, 2), 2);
        assert_eq!(c.cartan(3, 2), -2);
    }

    #[test]
    fn cartan_invariants_all_types() {
        for name in [
            "A1", "A5", "B2", "B5", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let d = diagram(name);
            let n = d.rank();
            for i in 1..=n {
                assert_eq!(d.cartan(i, i), 2);
                for j in 1..=n {
                    if i != j {
                        assert!((-3..=0).contains(&d.cartan(i, j)), "{name} ({i},{j})");
                        assert_eq!(d.cartan(i, j) == 0, d.cartan(j, i) == 0);
                    }
                }
            }
            assert!(d.is_connected(d.full_set()), "{name} is connected");
            assert_ne!(det(d.cartan_matrix()), 0, "{name} Cartan determinant");
        }
    }

    /// Integer determinant by fraction-free (Bareiss) elimination.
    fn det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        let mut a: Vec<Vec<i128>> = m
            .iter()
            .map(|row| row.iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }

    #[test]
    fn cartan_determinants_match_known_values() {
        let expected = [
            ("A3", 4),
            ("A5", 6),
            ("B4", 2),
            ("C4", 2),
            ("D5", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
            ("F4", 1),
            ("G2", 1),
        ];
        for (name, want) in expected {
            assert_eq!(det(diagram(name).cartan_matrix()).abs(), want, "{name}");
        }
    }

    #[test]
    fn components_of_subsets() {
        let a3 = diagram("A3");
        assert_eq!(
            a3.connected_components(subset(&[1, 3])),
            vec![subset(&[1]), subset(&[3])]
        );
        assert_eq!(
            a3.connected_components(subset(&[1, 2])),
            vec![subset(&[1, 2])]
        );
        assert_eq!(a3.connected_components(Subset::empty()), vec![]);
    }

    #[test]
    fn components_partition_their_input() {
        for name in ["A4", "B4", "D5", "E6", "F4"] {
            let d = diagram(name);
            let n = d.rank();
            for mask in 0..(1u32 << n) {
                let set = Subset::from_nodes((1..=n).filter(|&i| mask & (1 << (i - 1)) != 0));
                let parts = d.connected_components(set);
                let mut union = Subset::empty();
                for (i, p) in parts.iter().enumerate() {
                    assert!(d.is_connected(*p) || p.len() == 1);
                    for q in parts.iter().skip(i + 1) {
                        assert!(p.intersection(*q).is_empty());
                    }
                    union = union.union(*p);
                }
                assert_eq!(union, set);
            }
        }
    }

    #[test]
    fn type_a_chain_setups() {
        let a3 = diagram("A3");
        assert!(a3.is_type_a_chain_setup(subset(&[2, 3]), 2).unwrap());
        assert!(a3.is_type_a_chain_setup(subset(&[2]), 2).unwrap());
        assert!(matches!(
            a3.is_type_a_chain_setup(subset(&[2, 3]), 1),
            Err(Error::NodeNotInSubset { node: 1 })
        ));

        // double bond inside the chain disqualifies it
        let c3 = diagram("C3");
        assert!(!c3.is_type_a_chain_setup(subset(&[2, 3]), 2).unwrap());

        // t must be an end node of the path
        let d5 = diagram("D5");
        assert!(!d5.is_type_a_chain_setup(subset(&[2, 3, 4]), 3).unwrap());
        assert!(d5.is_type_a_chain_setup(subset(&[2, 3, 4]), 2).unwrap());
    }

    #[test]
    fn e_series_branch_attachment() {
        let e6 = diagram("E6");
        assert!(e6.adjacent(3, 6));
        assert_eq!(e6.neighbors(6), subset(&[3]));
        let e7 = diagram("E7");
        assert!(e7.adjacent(4, 7));
        let e8 = diagram("E8");
        assert!(e8.adjacent(5, 8));
        assert_eq!(e8.end_nodes(), subset(&[1, 7, 8]));
        assert_eq!(diagram("D5").end_nodes(), subset(&[1, 4, 5]));
    }

    #[test]
    fn component_orders() {
        let e8 = diagram("E8");
        assert_eq!(e8.subgroup_order(subset(&[1, 2, 3])), 24); // A3
        assert_eq!(e8.subgroup_order(subset(&[1, 2, 3, 4, 5, 6, 7])), 40_320); // A7
        assert_eq!(e8.subgroup_order(subset(&[4, 5, 6, 8])), 192); // D4
        assert_eq!(e8.subgroup_order(subset(&[1, 3, 5])), 8); // A1 x A1 x A1
        assert_eq!(e8.group_order(), 696_729_600);

        let b4 = diagram("B4");
        assert_eq!(b4.subgroup_order(subset(&[3, 4])), 8); // B2
        assert_eq!(b4.subgroup_order(subset(&[2, 3, 4])), 48); // B3
        assert_eq!(b4.subgroup_order(subset(&[1, 2])), 6); // A2

        let f4 = diagram("F4");
        assert_eq!(f4.subgroup_order(subset(&[1, 2, 3])), 48); // B3
        assert_eq!(f4.subgroup_order(subset(&[2, 3, 4])), 48); // C3
        assert_eq!(f4.subgroup_order(f4.full_set()), 1_152);

        let e7 = diagram("E7");
        assert_eq!(e7.subgroup_order(e7.full_set()), 2_903_040);
        assert_eq!(e7.subgroup_order(subset(&[2, 3, 4, 5, 6, 7])), 51_840); // E6
        assert_eq!(e7.subgroup_order(subset(&[1, 2, 3, 4, 5, 7])), 23_040); // D6
        assert_eq!(e7.subgroup_order(subset(&[1, 2, 3, 4, 5, 6])), 5_040); // A6
    }

    #[test]
    fn subset_ordering_is_size_then_lex() {
        let mut sets = vec![
            subset(&[2, 3]),
            subset(&[1]),
            subset(&[1, 4]),
            Subset::empty(),
            subset(&[2]),
            subset(&[1, 2]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                Subset::empty(),
                subset(&[1]),
                subset(&[2]),
                subset(&[1, 2]),
                subset(&[1, 4]),
                subset(&[2, 3]),
            ]
        );
    }

    #[test]
    fn subset_parse() {
        assert_eq!(Subset::parse("").unwrap(), Subset::empty());
        assert_eq!(Subset::parse("2,3").unwrap(), subset(&[2, 3]));
        assert_eq!(Subset::parse(" 3 , 1 ").unwrap(), subset(&[1, 3]));
        assert!(Subset::parse("0").is_err());
        assert!(Subset::parse("x").is_err());
    }
}
