//! Relation builders and algebra presentations.
//!
//! Relations are stored as `LHS − RHS`. Sums over subsets range over all
//! subsets including `∅` and the full set.

use std::collections::BTreeSet;
use std::fmt;

use crate::complexes::{Complex, Graph, NodeSet};
use crate::error::{Error, Result};
use crate::free_algebra::{rat, GeneratorSymbol, Polynomial};

/// A generator list plus relation polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    label: String,
    alphabet: Vec<GeneratorSymbol>,
    relations: Vec<Polynomial>,
}

impl Presentation {
    /// Sorts and deduplicates the alphabet; every relation symbol must belong to it.
    pub fn new(label: impl Into<String>, alphabet: Vec<GeneratorSymbol>, relations: Vec<Polynomial>) -> Result<Self> {
        let alphabet: Vec<GeneratorSymbol> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for r in &relations {
            for s in r.symbols() {
                if alphabet.binary_search(&s).is_err() {
                    return Err(Error::SymbolNotInAlphabet(s));
                }
            }
        }
        Ok(Presentation { label: label.into(), alphabet, relations })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn alphabet(&self) -> &[GeneratorSymbol] {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.label)?;
        let gens: Vec<String> = self.alphabet.iter().map(|s| s.to_string()).collect();
        writeln!(f, "generators: {}", gens.join(" "))?;
        for r in &self.relations {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Which generating set of `Q_n` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QnForm {
    Z,
    U,
}

fn check_index(a: &NodeSet, i: u8) -> Result<()> {
    let n = a.universe();
    if i == 0 {
        return Err(Error::ZeroVertex);
    }
    if i > n {
        return Err(Error::VertexOutOfRange { vertex: i as usize, n });
    }
    if a.contains(i) {
        return Err(Error::IndexInSet { index: i, set: *a });
    }
    Ok(())
}

fn check_triple(a: &NodeSet, i: u8, j: u8) -> Result<()> {
    check_index(a, i)?;
    check_index(a, j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    Ok(())
}

fn zp(a: NodeSet, i: u8) -> Polynomial {
    Polynomial::symbol(GeneratorSymbol::Z { a, i })
}

fn up(a: NodeSet) -> Polynomial {
    debug_assert!(!a.is_empty());
    Polynomial::symbol(GeneratorSymbol::U(a))
}

fn comm(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.commutator(q).expect("same universe")
}

/// `u` of a set given by members inside the universe of `like`.
fn u_of(like: &NodeSet, members: &[u8]) -> Polynomial {
    let mut s = NodeSet::empty(like.universe() as usize).expect("valid universe");
    for &m in members {
        s = s.with(m);
    }
    up(s)
}

/// `z(A∪i,j) + z(A,i) − z(A∪j,i) − z(A,j)`.
pub fn rel_additive(a: NodeSet, i: u8, j: u8) -> Result<Polynomial> {
    check_triple(&a, i, j)?;
    Ok(&(&zp(a.with(i), j) + &zp(a, i)) - &(&zp(a.with(j), i) + &zp(a, j)))
}

/// `z(A∪i,j)·z(A,i) − z(A∪j,i)·z(A,j)`.
pub fn rel_multiplicative(a: NodeSet, i: u8, j: u8) -> Result<Polynomial> {
    check_triple(&a, i, j)?;
    Ok(&(&zp(a.with(i), j) * &zp(a, i)) - &(&zp(a.with(j), i) * &zp(a, j)))
}

/// `z(A,i) = Σ_{D⊆A} u(D∪i)`.
pub fn z_in_u(a: NodeSet, i: u8) -> Result<Polynomial> {
    check_index(&a, i)?;
    Ok(a.subsets().map(|d| up(d.with(i))).sum())
}

/// `u(A) = Σ_{D⊆A∖i} (−1)^{|A|−|D|−1} z(D,i)`, the Möbius inverse of [`z_in_u`].
pub fn u_in_z(a: NodeSet, i: u8) -> Result<Polynomial> {
    if !a.contains(i) {
        return Err(Error::IndexNotInSet { index: i, set: a });
    }
    let rest = a.without(i);
    Ok(rest
        .subsets()
        .map(|d| {
            let sign = if (a.len() - d.len() - 1).is_multiple_of(2) { 1 } else { -1 };
            zp(d, i).scale(&rat(sign))
        })
        .sum())
}

/// Image of a `z` symbol under the change of basis.
pub fn z_symbol_in_u(s: &GeneratorSymbol) -> Option<Polynomial> {
    match *s {
        GeneratorSymbol::Z { a, i } => z_in_u(a, i).ok(),
        GeneratorSymbol::U(_) => None,
    }
}

/// Image of a `u` symbol in `z` form, choosing the smallest member as the index.
pub fn u_symbol_in_z(s: &GeneratorSymbol) -> Option<Polynomial> {
    match *s {
        GeneratorSymbol::U(a) => a.iter().next().and_then(|i| u_in_z(a, i).ok()),
        GeneratorSymbol::Z { .. } => None,
    }
}

/// `Σ_{C,D⊆A} (u(C∪j)+u(C∪i∪j)) u(D∪i) − Σ_{C,D⊆A} (u(D∪i)+u(D∪i∪j)) u(C∪j)`.
pub fn rel_4(a: NodeSet, i: u8, j: u8) -> Result<Polynomial> {
    check_triple(&a, i, j)?;
    let mut out = Polynomial::zero();
    for c in a.subsets() {
        for d in a.subsets() {
            let left = &(&up(c.with(j)) + &up(c.with(i).with(j))) * &up(d.with(i));
            let right = &(&up(d.with(i)) + &up(d.with(i).with(j))) * &up(c.with(j));
            out = &out + &(&left - &right);
        }
    }
    Ok(out)
}

/// `Σ_{C,D⊆A} [u(C∪i),u(D∪j)] − (Σ_{E⊆A} u(E∪i∪j)) Σ_{F⊆A} (u(F∪i) − u(F∪j))`.
pub fn rel_5(a: NodeSet, i: u8, j: u8) -> Result<Polynomial> {
    check_triple(&a, i, j)?;
    let mut lhs = Polynomial::zero();
    for c in a.subsets() {
        for d in a.subsets() {
            lhs = &lhs + &comm(&up(c.with(i)), &up(d.with(j)));
        }
    }
    let e_sum: Polynomial = a.subsets().map(|e| up(e.with(i).with(j))).sum();
    let f_sum: Polynomial = a.subsets().map(|f| &up(f.with(i)) - &up(f.with(j))).sum();
    Ok(&lhs - &(&e_sum * &f_sum))
}

/// `Σ_{C⊆A′, D⊆B′} [u(C∪i), u(D∪j)]`.
pub fn rel_9(ap: NodeSet, bp: NodeSet, i: u8, j: u8) -> Result<Polynomial> {
    if ap.universe() != bp.universe() {
        return Err(Error::UniverseMismatch { left: ap.universe(), right: bp.universe() });
    }
    check_index(&ap, i)?;
    check_index(&bp, j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    let mut out = Polynomial::zero();
    for c in ap.subsets() {
        for d in bp.subsets() {
            out = &out + &comm(&up(c.with(i)), &up(d.with(j)));
        }
    }
    Ok(out)
}

/// The element `R(A,i,j)`:
/// `Σ_{k,l∈A}[u(ik),u(jl)] + Σ_{k∈A}[u(ik),u(j)] + Σ_{k∈A}[u(i),u(jk)] + [u(i),u(j)]
///  − Σ_{k∈A} u(ij)(u(ik)−u(jk)) − u(ij)(u(i)−u(j))`.
pub fn rel_10(a: NodeSet, i: u8, j: u8) -> Result<Polynomial> {
    check_triple(&a, i, j)?;
    let ui = u_of(&a, &[i]);
    let uj = u_of(&a, &[j]);
    let uij = u_of(&a, &[i, j]);
    let mut out = comm(&ui, &uj) - &uij * &(&ui - &uj);
    for k in a.iter() {
        let uik = u_of(&a, &[i, k]);
        let ujk = u_of(&a, &[j, k]);
        for l in a.iter() {
            out = &out + &comm(&uik, &u_of(&a, &[j, l]));
        }
        out = &out + &comm(&uik, &uj);
        out = &out + &comm(&ui, &ujk);
        out = &out - &(&uij * &(&uik - &ujk));
    }
    Ok(out)
}

/// `[u(ik),u(jk)] + [u(ik),u(j)] + [u(i),u(jk)] − u(ij)(u(ik) − u(jk))` over `{1,…,n}`.
pub fn rel_12(n: usize, i: u8, j: u8, k: u8) -> Result<Polynomial> {
    let base = NodeSet::empty(n)?;
    check_triple(&base, i, j)?;
    check_index(&base, k)?;
    if k == i || k == j {
        return Err(Error::EqualIndices(k));
    }
    let (ui, uj) = (u_of(&base, &[i]), u_of(&base, &[j]));
    let (uik, ujk, uij) = (u_of(&base, &[i, k]), u_of(&base, &[j, k]), u_of(&base, &[i, j]));
    Ok(comm(&uik, &ujk) + comm(&uik, &uj) + comm(&ui, &ujk) - &uij * &(&uik - &ujk))
}

/// `R(A,i,j) − R(A∖k,i,j)` minus the terms it should split into; zero when
/// the recursion for `R` holds.
pub fn identity_11_residual(a: NodeSet, i: u8, j: u8, k: u8) -> Result<Polynomial> {
    if !a.contains(k) {
        return Err(Error::IndexNotInSet { index: k, set: a });
    }
    let rest = a.without(k);
    let uik = u_of(&a, &[i, k]);
    let ujk = u_of(&a, &[j, k]);
    let ui = u_of(&a, &[i]);
    let uj = u_of(&a, &[j]);
    let uij = u_of(&a, &[i, j]);
    let mut expected = rel_10(rest, i, j)? + comm(&uik, &ujk);
    for l in rest.iter() {
        expected = &expected + &comm(&u_of(&a, &[i, l]), &ujk);
        expected = &expected + &comm(&uik, &u_of(&a, &[j, l]));
    }
    expected = expected + comm(&uik, &uj) + comm(&ui, &ujk) - &uij * &(&uik - &ujk);
    Ok(&rel_10(a, i, j)? - &expected)
}

/// Sets every `u(S)` with `S ∉ c` to zero.
pub fn restrict_to_complex(p: &Polynomial, c: &Complex) -> Polynomial {
    p.kill_symbols(|s| match s {
        GeneratorSymbol::U(a) => c.contains(a),
        GeneratorSymbol::Z { .. } => true,
    })
}

/// Sets every `u(S)` with `|S| ≥ 3` to zero.
pub fn truncate_to_pairs(p: &Polynomial) -> Polynomial {
    p.kill_symbols(|s| match s {
        GeneratorSymbol::U(a) => a.len() <= 2,
        GeneratorSymbol::Z { .. } => true,
    })
}

/// Clause of the graph theorem a relation instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// `[u(i),u(j)] = u(ij)(u(i)−u(j))`
    Pair,
    /// `[u(ik),u(jk)] + [u(ik),u(j)] + [u(i),u(jk)] = u(ij)(u(ik)−u(jk))`
    Triple,
    /// `[u(ij),u(kl)] = 0` for disjoint edges
    DisjointEdges,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Pair => "(i)",
            Clause::Triple => "(ii)",
            Clause::DisjointEdges => "(iii)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRelation {
    pub clause: Clause,
    pub indices: Vec<u8>,
    pub poly: Polynomial,
}

/// All nonzero instances of the three theorem clauses for `g`, with `u(ij) = 0`
/// for non-edges substituted at build time.
pub fn theorem_relations_labeled(g: &Graph) -> Vec<TheoremRelation> {
    let n = g.universe();
    let base = NodeSet::empty(n as usize).expect("valid universe");
    let pair = |i: u8, j: u8| {
        if g.has_edge(i, j) {
            u_of(&base, &[i, j])
        } else {
            Polynomial::zero()
        }
    };
    let single = |i: u8| u_of(&base, &[i]);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let poly = comm(&single(i), &single(j)) - &pair(i, j) * &(&single(i) - &single(j));
            out.push(TheoremRelation { clause: Clause::Pair, indices: vec![i, j], poly });
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let (ik, jk) = (pair(i, k), pair(j, k));
                let poly = comm(&ik, &jk) + comm(&ik, &single(j)) + comm(&single(i), &jk) - &pair(i, j) * &(&ik - &jk);
                out.push(TheoremRelation { clause: Clause::Triple, indices: vec![i, j, k], poly });
            }
        }
    }
    let edges: Vec<(u8, u8)> = g.edges().iter().copied().collect();
    for (x, &(i, j)) in edges.iter().enumerate() {
        for &(k, l) in &edges[x + 1..] {
            if i == k || i == l || j == k || j == l {
                continue;
            }
            let poly = comm(&pair(i, j), &pair(k, l));
            out.push(TheoremRelation { clause: Clause::DisjointEdges, indices: vec![i, j, k, l], poly });
        }
    }
    out.retain(|r| !r.poly.is_zero());
    out
}

pub fn theorem_relations(g: &Graph) -> Vec<Polynomial> {
    theorem_relations_labeled(g).into_iter().map(|r| r.poly).collect()
}

fn ordered_triples(n: u8) -> impl Iterator<Item = (NodeSet, u8, u8)> {
    let full = NodeSet::full(n as usize).expect("valid universe");
    (1..=n).flat_map(move |i| {
        (1..=n).filter(move |&j| j != i).flat_map(move |j| full.without(i).without(j).subsets().map(move |a| (a, i, j)))
    })
}

/// Every valid `(A, i, j)`: `i ≠ j`, `i, j ∉ A`.
pub fn all_triples(n: usize) -> Result<Vec<(NodeSet, u8, u8)>> {
    NodeSet::empty(n)?;
    Ok(ordered_triples(n as u8).collect())
}

fn all_u_symbols(n: usize) -> Result<Vec<GeneratorSymbol>> {
    Ok(NodeSet::full(n)?.subsets().filter(|s| !s.is_empty()).map(GeneratorSymbol::U).collect())
}

fn all_z_symbols(n: usize) -> Result<Vec<GeneratorSymbol>> {
    let full = NodeSet::full(n)?;
    Ok((1..=n as u8).flat_map(|i| full.without(i).subsets().map(move |a| GeneratorSymbol::Z { a, i })).collect())
}

/// `Q_n` in `z` form (additive and multiplicative relations) or `u` form (`rel_4` relations).
pub fn qn_presentation(n: usize, form: QnForm) -> Result<Presentation> {
    let triples = all_triples(n)?;
    match form {
        QnForm::Z => {
            let mut rels = Vec::with_capacity(2 * triples.len());
            for &(a, i, j) in &triples {
                rels.push(rel_additive(a, i, j)?);
            }
            for &(a, i, j) in &triples {
                rels.push(rel_multiplicative(a, i, j)?);
            }
            Presentation::new(format!("Q_{n} (z-form)"), all_z_symbols(n)?, rels)
        }
        QnForm::U => {
            let rels = triples.iter().map(|&(a, i, j)| rel_4(a, i, j)).collect::<Result<Vec<_>>>()?;
            Presentation::new(format!("Q_{n} (u-form)"), all_u_symbols(n)?, rels)
        }
    }
}

/// `Q(F)`: the `u` form of `Q_n` together with `u(A) = 0` for every `A ∉ F`.
pub fn qf_presentation(c: &Complex) -> Result<Presentation> {
    let n = c.universe() as usize;
    let mut rels = qn_presentation(n, QnForm::U)?.relations;
    let alphabet = all_u_symbols(n)?;
    for s in &alphabet {
        if let GeneratorSymbol::U(a) = s {
            if !c.contains(a) {
                rels.push(Polynomial::symbol(*s));
            }
        }
    }
    Presentation::new(format!("Q(F) {}", c.describe()), alphabet, rels)
}

/// The graph presentation on `u(i)` and `u(ij)` for edges `(ij)`.
pub fn graph_presentation(g: &Graph) -> Result<Presentation> {
    let n = g.universe() as usize;
    let mut alphabet = Vec::new();
    for i in 1..=n {
        alphabet.push(GeneratorSymbol::U(NodeSet::singleton(n, i)?));
    }
    for &(i, j) in g.edges() {
        alphabet.push(GeneratorSymbol::U(NodeSet::from_elems(n, &[i as usize, j as usize])?));
    }
    let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("[{i},{j}]")).collect();
    Presentation::new(format!("graph n={n} edges=[{}]", edges.join(",")), alphabet, theorem_relations(g))
}
