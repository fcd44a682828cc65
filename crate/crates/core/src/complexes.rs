//! Node sets, simplicial complexes on `{1,…,n}` and their graph view.
//!
//! A [`NodeSet`] is a bitmask over a universe of at most 16 nodes. A
//! [`Complex`] is a downward-closed family of nonempty node sets that always
//! contains every singleton. Faces are stored explicitly.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_NODES: u8 = 16;

/// A subset of `{1,…,n}`, `n ≤ 16`. Node `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeSet {
    n: u8,
    bits: u16,
}

fn check_universe(n: usize) -> Result<u8> {
    if n == 0 || n > MAX_NODES as usize {
        return Err(Error::UniverseOutOfRange(n));
    }
    Ok(n as u8)
}

fn check_vertex(v: usize, n: u8) -> Result<u8> {
    if v == 0 {
        Err(Error::ZeroVertex)
    } else if v > n as usize {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(v as u8)
    }
}

impl NodeSet {
    pub fn empty(n: usize) -> Result<Self> {
        Ok(NodeSet { n: check_universe(n)?, bits: 0 })
    }

    /// All of `{1,…,n}`.
    pub fn full(n: usize) -> Result<Self> {
        let n = check_universe(n)?;
        Ok(NodeSet { n, bits: ((1u32 << n) - 1) as u16 })
    }

    pub fn from_elems(n: usize, elems: &[usize]) -> Result<Self> {
        let n = check_universe(n)?;
        let mut bits = 0u16;
        for &v in elems {
            bits |= 1 << (check_vertex(v, n)? - 1);
        }
        Ok(NodeSet { n, bits })
    }

    pub fn singleton(n: usize, i: usize) -> Result<Self> {
        Self::from_elems(n, &[i])
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        let n = check_universe(n)?;
        if bits >> n != 0 {
            let top = 32 - bits.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: top, n });
        }
        Ok(NodeSet { n, bits: bits as u16 })
    }

    pub fn universe(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: u8) -> bool {
        (1..=self.n).contains(&i) && self.bits & (1 << (i - 1)) != 0
    }

    /// `self ∪ {i}`. Panics if `i` is not a node of the universe.
    pub fn with(self, i: u8) -> Self {
        assert!((1..=self.n).contains(&i), "node {i} outside 1..={}", self.n);
        NodeSet { bits: self.bits | (1 << (i - 1)), ..self }
    }

    pub fn without(self, i: u8) -> Self {
        if (1..=self.n).contains(&i) {
            NodeSet { bits: self.bits & !(1 << (i - 1)), ..self }
        } else {
            self
        }
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        NodeSet { bits: self.bits | other.bits, ..self }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        NodeSet { bits: self.bits & other.bits, ..self }
    }

    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        NodeSet { bits: self.bits & !other.bits, ..self }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        let bits = self.bits;
        (1..=self.n).filter(move |&i| bits & (1 << (i - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.iter().collect()
    }

    /// Every subset of `self`, including `∅` and `self`, in increasing bitmask order.
    pub fn subsets(&self) -> Subsets {
        Subsets { n: self.n, mask: self.bits, next: Some(0) }
    }
}

/// Iterator over submasks of a fixed mask.
pub struct Subsets {
    n: u8,
    mask: u16,
    next: Option<u16>,
}

impl Iterator for Subsets {
    type Item = NodeSet;

    fn next(&mut self) -> Option<NodeSet> {
        let cur = self.next?;
        // standard trick: the next submask above `cur` is ((cur | !mask) + 1) & mask
        self.next = if cur == self.mask { None } else { Some(((cur | !self.mask).wrapping_add(1)) & self.mask) };
        Some(NodeSet { n: self.n, bits: cur })
    }
}

impl Ord for NodeSet {
    /// Size first, then sorted members lexicographically, then universe size.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter())).then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

/// A simplicial complex on `{1,…,n}`: nonempty faces, closed under nonempty
/// subsets, containing every singleton.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    n: u8,
    /// indexed by bitmask
    member: Vec<bool>,
    faces: Vec<NodeSet>,
}

impl Complex {
    /// Smallest complex containing `facets` and every singleton.
    pub fn closure(facets: &[NodeSet], n: usize) -> Result<Self> {
        let n8 = check_universe(n)?;
        let mut member = vec![false; 1 << n];
        for i in 0..n {
            member[1 << i] = true;
        }
        for facet in facets {
            if facet.universe() != n8 {
                // a facet drawn from a larger universe names a node above n
                if let Some(v) = facet.iter().find(|&v| v > n8) {
                    return Err(Error::VertexOutOfRange { vertex: v as usize, n: n8 });
                }
            }
            if facet.is_empty() {
                return Err(Error::EmptyFace);
            }
            if member[facet.bits() as usize] {
                continue;
            }
            for sub in facet.subsets() {
                member[sub.bits() as usize] = true;
            }
        }
        member[0] = false;
        let mut faces: Vec<NodeSet> =
            (1..member.len()).filter(|&b| member[b]).map(|b| NodeSet { n: n8, bits: b as u16 }).collect();
        faces.sort();
        Ok(Complex { n: n8, member, faces })
    }

    /// Closure of facets given as lists of 1-based vertices.
    pub fn from_facet_lists(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let n8 = check_universe(n)?;
        let sets = facets
            .iter()
            .map(|f| {
                if f.is_empty() {
                    return Err(Error::EmptyFace);
                }
                NodeSet::from_elems(n8 as usize, f)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::closure(&sets, n)
    }

    /// The full simplex: every nonempty subset of `{1,…,n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::closure(&[NodeSet::full(n)?], n)
    }

    pub fn universe(&self) -> u8 {
        self.n
    }

    pub fn faces(&self) -> &[NodeSet] {
        &self.faces
    }

    pub fn dimension(&self) -> usize {
        self.faces.iter().map(|f| f.len() - 1).max().unwrap_or(0)
    }

    pub fn is_face(&self, a: &NodeSet) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptyFace);
        }
        if a.universe() != self.n {
            return Err(Error::UniverseMismatch { left: self.n, right: a.universe() });
        }
        Ok(self.member[a.bits() as usize])
    }

    /// Membership without validation; `∅` and foreign sets are never faces.
    pub fn contains(&self, a: &NodeSet) -> bool {
        a.universe() == self.n && !a.is_empty() && self.member[a.bits() as usize]
    }

    /// Two-element faces as pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> BTreeSet<(u8, u8)> {
        self.faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| {
                let v = f.to_vec();
                (v[0], v[1])
            })
            .collect()
    }

    /// Faces not strictly contained in another face.
    pub fn facets(&self) -> Vec<NodeSet> {
        self.faces
            .iter()
            .filter(|f| !(1..=self.n).any(|i| !f.contains(i) && self.contains(&f.with(i))))
            .copied()
            .collect()
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.n == other.n && self.faces.iter().all(|f| other.contains(f))
    }

    /// Compact description listing the facets, e.g. `n=3 facets=[[1,2],[2,3]]`.
    pub fn describe(&self) -> String {
        let facets: Vec<String> = self
            .facets()
            .iter()
            .filter(|f| f.len() > 1)
            .map(|f| format!("[{}]", f.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        format!("n={} facets=[{}]", self.n, facets.join(","))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({})", self.describe())
    }
}

/// One-dimensional view of a complex: nodes `1..=n` and edges `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    edges: BTreeSet<(u8, u8)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let n8 = check_universe(n)?;
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            let a = check_vertex(a, n8)?;
            let b = check_vertex(b, n8)?;
            if a == b {
                return Err(Error::EqualIndices(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n: n8, edges: set })
    }

    pub fn from_complex(c: &Complex) -> Result<Self> {
        let dim = c.dimension();
        if dim > 1 {
            return Err(Error::NotAGraph(dim));
        }
        Ok(Graph { n: c.universe(), edges: c.edges() })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self::new(n, &pairs)
    }

    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &pairs)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        pairs.push((n, 1));
        Self::new(n, &pairs)
    }

    /// Star with centre 1 and leaves `2..=leaves+1`.
    pub fn star(leaves: usize) -> Result<Self> {
        let pairs: Vec<_> = (2..=leaves + 1).map(|j| (1, j)).collect();
        Self::new(leaves + 1, &pairs)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn universe(&self) -> u8 {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(u8, u8)> {
        &self.edges
    }

    pub fn has_edge(&self, i: u8, j: u8) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn to_complex(&self) -> Complex {
        let n = self.n as usize;
        let facets: Vec<NodeSet> = self
            .edges
            .iter()
            .map(|&(a, b)| NodeSet::from_elems(n, &[a as usize, b as usize]).expect("validated edge"))
            .collect();
        Complex::closure(&facets, n).expect("validated graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> NodeSet {
        NodeSet::from_elems(n, e).unwrap()
    }

    fn face_lists(c: &Complex) -> Vec<Vec<u8>> {
        c.faces().iter().map(|f| f.to_vec()).collect()
    }

    #[test]
    fn closure_examples() {
        let c = Complex::closure(&[set(3, &[1, 2, 3])], 3).unwrap();
        assert_eq!(face_lists(&c), vec![vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]);
        let c = Complex::closure(&[], 3).unwrap();
        assert_eq!(face_lists(&c), vec![vec![1], vec![2], vec![3]]);
        let c = Complex::closure(&[set(4, &[1, 2]), set(4, &[2, 3])], 4).unwrap();
        assert_eq!(face_lists(&c), vec![vec![1], vec![2], vec![3], vec![4], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            Complex::from_facet_lists(3, &[vec![1, 4]]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 4, n: 3 }
        );
        assert_eq!(Complex::closure(&[], 17).unwrap_err(), Error::UniverseOutOfRange(17));
        assert_eq!(Complex::closure(&[], 0).unwrap_err(), Error::UniverseOutOfRange(0));
        assert_eq!(Complex::closure(&[set(5, &[1, 5])], 3).unwrap_err(), Error::VertexOutOfRange { vertex: 5, n: 3 });
        assert_eq!(Complex::from_facet_lists(3, &[vec![]]).unwrap_err(), Error::EmptyFace);
        assert_eq!(Complex::from_facet_lists(3, &[vec![0, 1]]).unwrap_err(), Error::ZeroVertex);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(Complex::closure(&[], 3).unwrap().dimension(), 0);
        assert_eq!(Complex::from_facet_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap().dimension(), 1);
        assert_eq!(Complex::simplex(3).unwrap().dimension(), 2);
    }

    #[test]
    fn is_face_examples() {
        let c = Complex::simplex(3).unwrap();
        assert!(c.is_face(&set(3, &[1, 2])).unwrap());
        let p = Complex::from_facet_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert!(!p.is_face(&set(3, &[1, 3])).unwrap());
        let e = Complex::closure(&[], 2).unwrap();
        assert!(e.is_face(&set(2, &[2])).unwrap());
        assert_eq!(e.is_face(&NodeSet::empty(2).unwrap()).unwrap_err(), Error::EmptyFace);
    }

    #[test]
    fn edges_examples() {
        let p = Complex::from_facet_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(p.edges().into_iter().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        assert!(Complex::closure(&[], 3).unwrap().edges().is_empty());
        assert_eq!(Complex::simplex(3).unwrap().edges().into_iter().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let a = set(5, &[1, 3, 4]);
        let subs: Vec<_> = a.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(&a)));
        assert_eq!(NodeSet::empty(3).unwrap().subsets().count(), 1);
        assert_eq!(NodeSet::full(16).unwrap().subsets().count(), 1 << 16);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![set(3, &[2, 3]), set(3, &[1]), set(3, &[1, 2, 3]), set(3, &[1, 3]), set(3, &[3])];
        v.sort();
        assert_eq!(v, vec![set(3, &[1]), set(3, &[3]), set(3, &[1, 3]), set(3, &[2, 3]), set(3, &[1, 2, 3])]);
    }

    #[test]
    fn graph_views() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.edges().len(), 3);
        assert_eq!(Graph::from_complex(&k3.to_complex()).unwrap(), k3);
        assert_eq!(Graph::from_complex(&Complex::simplex(3).unwrap()).unwrap_err(), Error::NotAGraph(2));
        assert_eq!(Graph::star(3).unwrap().universe(), 4);
        assert!(Graph::cycle(4).unwrap().has_edge(1, 4));
    }

    #[test]
    fn facets_and_description() {
        let c = Complex::from_facet_lists(4, &[vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert_eq!(c.describe(), "n=4 facets=[[3,4],[1,2,3]]");
        assert_eq!(Complex::closure(&[], 2).unwrap().describe(), "n=2 facets=[]");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn facets_strategy() -> impl Strategy<Value = (usize, Vec<u32>)> {
            (1usize..=8).prop_flat_map(|n| (Just(n), proptest::collection::vec(1u32..(1 << n), 0..5)))
        }

        proptest! {
            #[test]
            fn closure_is_downward_closed((n, masks) in facets_strategy()) {
                let facets: Vec<_> = masks.iter().map(|&m| NodeSet::from_bits(n, m).unwrap()).collect();
                let c = Complex::closure(&facets, n).unwrap();
                for f in c.faces() {
                    for sub in f.subsets().filter(|s| !s.is_empty()) {
                        prop_assert!(c.is_face(&sub).unwrap());
                    }
                }
                for i in 1..=n {
                    prop_assert!(c.is_face(&NodeSet::singleton(n, i).unwrap()).unwrap());
                }
                for f in &facets {
                    prop_assert!(c.contains(f));
                }
            }

            #[test]
            fn dimension_matches_largest_facet((n, masks) in facets_strategy()) {
                let facets: Vec<_> = masks.iter().map(|&m| NodeSet::from_bits(n, m).unwrap()).collect();
                let c = Complex::closure(&facets, n).unwrap();
                let expected = facets.iter().map(|f| f.len() - 1).max().unwrap_or(0);
                prop_assert_eq!(c.dimension(), expected);
            }

            #[test]
            fn closure_idempotent_and_edges_are_pairs((n, masks) in facets_strategy()) {
                let facets: Vec<_> = masks.iter().map(|&m| NodeSet::from_bits(n, m).unwrap()).collect();
                let c = Complex::closure(&facets, n).unwrap();
                let again = Complex::closure(c.faces(), n).unwrap();
                prop_assert_eq!(&again, &c);
                let from_facets = Complex::closure(&c.facets(), n).unwrap();
                prop_assert_eq!(&from_facets, &c);
                let pairs: BTreeSet<(u8, u8)> = c.faces().iter().filter(|f| f.len() == 2)
                    .map(|f| { let v = f.to_vec(); (v[0], v[1]) }).collect();
                prop_assert_eq!(c.edges(), pairs);
            }
        }
    }
}
