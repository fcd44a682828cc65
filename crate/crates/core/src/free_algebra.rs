//! The free associative algebra over ℚ on set-indexed generators `z(A,i)` and `u(A)`.
//!
//! Polynomials are canonical: a sorted map from words to nonzero exact
//! rationals. Every generator has degree 1, so the degree of a word is its
//! length.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use crate::complexes::NodeSet;
use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// Largest number of words [`enumerate_monomials`] will produce.
pub const MONOMIAL_CAP: u128 = 10_000_000;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A generator of the free algebra.
///
/// The derived order is the canonical symbol order: every `Z` precedes every
/// `U`; within a kind, sets compare by size and then by sorted members, and
/// `Z` symbols with equal sets compare by index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSymbol {
    Z { a: NodeSet, i: u8 },
    U(NodeSet),
}

impl GeneratorSymbol {
    /// `z(A,i)`, requires `i ∉ A`.
    pub fn z(a: NodeSet, i: u8) -> Result<Self> {
        let n = a.universe();
        if i == 0 {
            return Err(Error::ZeroVertex);
        }
        if i > n {
            return Err(Error::VertexOutOfRange { vertex: i as usize, n });
        }
        if a.contains(i) {
            return Err(Error::IndexInSet { index: i, set: a });
        }
        Ok(GeneratorSymbol::Z { a, i })
    }

    /// `u(A)`, requires `A ≠ ∅`; `u(∅)` is the unit and never a symbol.
    pub fn u(a: NodeSet) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::EmptyFace);
        }
        Ok(GeneratorSymbol::U(a))
    }

    pub fn universe(&self) -> u8 {
        match self {
            GeneratorSymbol::Z { a, .. } => a.universe(),
            GeneratorSymbol::U(a) => a.universe(),
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSymbol::Z { a, i } => write!(f, "z({a},{i})"),
            GeneratorSymbol::U(a) => write!(f, "u({a})"),
        }
    }
}

impl fmt::Debug for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word in the generators. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<GeneratorSymbol>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(word: Vec<GeneratorSymbol>) -> Self {
        Monomial(word)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Monomial(w)
    }
}

impl From<GeneratorSymbol> for Monomial {
    fn from(s: GeneratorSymbol) -> Self {
        Monomial(vec![s])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `|alphabet|^d` words of length `d` in canonical order.
pub fn enumerate_monomials(alphabet: &[GeneratorSymbol], d: usize) -> Result<Vec<Monomial>> {
    enumerate_monomials_capped(alphabet, d, MONOMIAL_CAP)
}

pub fn enumerate_monomials_capped(alphabet: &[GeneratorSymbol], d: usize, cap: u128) -> Result<Vec<Monomial>> {
    let letters: Vec<GeneratorSymbol> = alphabet.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let count = (letters.len() as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::MonomialCap { count, cap });
    }
    let mut words = vec![Monomial::unit()];
    for _ in 0..d {
        words = words.iter().flat_map(|w| letters.iter().map(move |&s| w.concat(&Monomial::from(s)))).collect();
    }
    Ok(words)
}

/// An element of the free associative algebra over ℚ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::unit())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn symbol(s: GeneratorSymbol) -> Self {
        Self::monomial(Monomial::from(s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Universe size shared by the symbols, `None` for constants.
    pub fn universe(&self) -> Option<u8> {
        self.terms.keys().flat_map(|m| m.0.first()).map(|s| s.universe()).next()
    }

    pub fn symbols(&self) -> BTreeSet<GeneratorSymbol> {
        self.terms.keys().flat_map(|m| m.0.iter().copied()).collect()
    }

    /// Highest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn graded_component(&self, d: usize) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Nonzero homogeneous components keyed by degree.
    pub fn graded_components(&self) -> BTreeMap<usize, Polynomial> {
        let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().terms.insert(m.clone(), c.clone());
        }
        out
    }

    fn check_universe(&self, other: &Polynomial) -> Result<()> {
        match (self.universe(), other.universe()) {
            (Some(l), Some(r)) if l != r => Err(Error::UniverseMismatch { left: l, right: r }),
            _ => Ok(()),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_universe(other)?;
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// `pq − qp`.
    pub fn commutator(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Applies the algebra homomorphism sending each symbol to its image.
    pub fn substitute(&self, images: &HashMap<GeneratorSymbol, Polynomial>) -> Result<Polynomial> {
        self.substitute_with(|s| images.get(s).cloned())
    }

    pub fn substitute_with<F>(&self, mut image: F) -> Result<Polynomial>
    where
        F: FnMut(&GeneratorSymbol) -> Option<Polynomial>,
    {
        let mut cache: HashMap<GeneratorSymbol, Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for s in &m.0 {
                if !cache.contains_key(s) {
                    let img = image(s).ok_or(Error::MissingImage(*s))?;
                    cache.insert(*s, img);
                }
                acc = acc.checked_mul(&cache[s])?;
                if acc.is_zero() {
                    break;
                }
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }

    /// Sets every symbol rejected by `keep` to zero, dropping the words that contain it.
    pub fn kill_symbols<F>(&self, mut keep: F) -> Polynomial
    where
        F: FnMut(&GeneratorSymbol) -> bool,
    {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.iter().all(&mut keep))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl From<GeneratorSymbol> for Polynomial {
    fn from(s: GeneratorSymbol) -> Self {
        Polynomial::symbol(s)
    }
}

// The operator forms panic on mixed universes; use the `checked_*` methods
// when the operands come from untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut out = Polynomial::zero();
        for p in iter {
            for (m, c) in p.terms {
                out.add_term(m, c);
            }
        }
        out
    }
}

/// Canonical text: terms in increasing monomial order, unit coefficients
/// elided, e.g. `-u({1})*u({2}) + 3/2*u({1,2})*u({1})`; zero prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for `u(A)` given 1-based members.
pub fn u_sym(n: usize, members: &[usize]) -> Result<GeneratorSymbol> {
    GeneratorSymbol::u(NodeSet::from_elems(n, members)?)
}

/// `u(A)` as a polynomial. Panics on invalid input.
pub fn u(n: usize, members: &[usize]) -> Polynomial {
    Polynomial::symbol(u_sym(n, members).expect("valid u(A)"))
}

/// `z(A,i)` as a polynomial. Panics on invalid input.
pub fn z(n: usize, members: &[usize], i: usize) -> Polynomial {
    let a = NodeSet::from_elems(n, members).expect("valid set");
    Polynomial::symbol(GeneratorSymbol::z(a, i as u8).expect("valid z(A,i)"))
}
