//! Degree-truncated two-sided ideals of homogeneous presentations.
//!
//! For each degree `e ≤ d` the slice `I_e` is spanned by the products
//! `m₁·g·m₂` of a relation `g` with words `m₁, m₂` of complementary length.
//! Slices are kept in row-echelon form over ℚ with the greatest monomial of
//! each row as its pivot. Words are encoded as base-`N` integers in the
//! chosen symbol order, so numeric order on codes is the lexicographic order
//! on words of a fixed length.

use std::collections::HashMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::free_algebra::{GeneratorSymbol, Monomial, Polynomial, Rational, MONOMIAL_CAP};
use crate::presentations::Presentation;

/// Largest number of stored matrix entries in one slice.
pub const ENTRY_CAP: usize = 10_000_000;

/// Order of the alphabet used for monomial codes and pivot choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SymbolOrder {
    /// The canonical symbol order.
    #[default]
    Canonical,
    /// The canonical order reversed.
    Reversed,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub order: SymbolOrder,
    /// Record, for every stored row, its combination of generating products.
    pub trace: bool,
    pub entry_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { order: SymbolOrder::Canonical, trace: false, entry_cap: ENTRY_CAP }
    }
}

/// Sparse vector, columns strictly decreasing.
type SparseRow = Vec<(u64, Rational)>;

/// `a − c·b` for rows sorted by decreasing key.
fn sub_scaled(a: &[(u64, Rational)], c: &Rational, b: &[(u64, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        let (ka, kb) = (a[x].0, b[y].0);
        if ka > kb {
            out.push(a[x].clone());
            x += 1;
        } else if kb > ka {
            out.push((kb, -(c * &b[y].1)));
            y += 1;
        } else {
            let v = &a[x].1 - c * &b[y].1;
            if !v.is_zero() {
                out.push((ka, v));
            }
            x += 1;
            y += 1;
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend(b[y..].iter().map(|(k, v)| (*k, -(c * v))));
    out
}

fn scale_row(row: &mut SparseRow, c: &Rational) {
    for (_, v) in row.iter_mut() {
        *v *= c;
    }
}

/// One generating product `m₁·g·m₂`.
#[derive(Clone, Debug)]
struct Product {
    relation: usize,
    left: (u64, usize),
    right: (u64, usize),
}

#[derive(Clone, Debug)]
struct StoredRow {
    entries: SparseRow,
    /// keys index `Slice::products`
    combo: Option<SparseRow>,
}

#[derive(Clone, Debug)]
struct Slice {
    columns: u64,
    rows: Vec<StoredRow>,
    pivots: HashMap<u64, usize>,
    products: Vec<Product>,
}

impl Slice {
    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot column from `row`, returning the remainder.
    fn normal_form(&self, mut row: SparseRow) -> SparseRow {
        let mut pos = 0;
        while pos < row.len() {
            let col = row[pos].0;
            match self.pivots.get(&col) {
                Some(&p) => {
                    let c = row[pos].1.clone();
                    row = sub_scaled(&row, &c, &self.rows[p].entries);
                }
                None => pos += 1,
            }
        }
        row
    }
}

/// Echelonized slices `I_0, …, I_d` of the ideal generated by a presentation.
#[derive(Clone, Debug)]
pub struct TruncatedIdealBasis {
    label: String,
    /// alphabet in engine order
    letters: Vec<GeneratorSymbol>,
    index: HashMap<GeneratorSymbol, u64>,
    order: SymbolOrder,
    max_degree: usize,
    relations: Vec<Polynomial>,
    slices: Vec<Slice>,
}

impl TruncatedIdealBasis {
    pub fn new(p: &Presentation, max_degree: usize) -> Result<Self> {
        Self::with_options(p, max_degree, BuildOptions::default())
    }

    pub fn with_options(p: &Presentation, max_degree: usize, opts: BuildOptions) -> Result<Self> {
        for (k, r) in p.relations().iter().enumerate() {
            if !r.is_homogeneous() {
                return Err(Error::InhomogeneousRelation { index: k });
            }
        }
        let mut letters = p.alphabet().to_vec();
        if opts.order == SymbolOrder::Reversed {
            letters.reverse();
        }
        let n = letters.len() as u128;
        let count = n.checked_pow(max_degree as u32).unwrap_or(u128::MAX);
        if count > MONOMIAL_CAP {
            return Err(Error::MonomialCap { count, cap: MONOMIAL_CAP });
        }
        let index: HashMap<GeneratorSymbol, u64> = letters.iter().enumerate().map(|(k, s)| (*s, k as u64)).collect();
        let mut basis = TruncatedIdealBasis {
            label: p.label().to_string(),
            letters,
            index,
            order: opts.order,
            max_degree,
            relations: p.relations().to_vec(),
            slices: Vec::with_capacity(max_degree + 1),
        };
        let encoded: Vec<(usize, SparseRow)> = basis
            .relations
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| basis.encode(r).map(|row| (r.degree().unwrap_or(0), row)))
            .collect::<Result<_>>()?;
        let relation_ids: Vec<usize> =
            basis.relations.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(|(k, _)| k).collect();
        for e in 0..=max_degree {
            let slice = basis.build_slice(e, &encoded, &relation_ids, &opts)?;
            basis.slices.push(slice);
        }
        Ok(basis)
    }

    fn pow(&self, e: usize) -> u64 {
        (self.letters.len() as u64).pow(e as u32)
    }

    /// Coordinates of a homogeneous polynomial, sorted by decreasing code.
    fn encode(&self, p: &Polynomial) -> Result<SparseRow> {
        let n = self.letters.len() as u64;
        let mut row: SparseRow = p
            .terms()
            .map(|(m, c)| {
                let mut code = 0u64;
                for s in m.symbols() {
                    let k = self.index.get(s).ok_or(Error::SymbolNotInAlphabet(*s))?;
                    code = code * n + k;
                }
                Ok((code, c.clone()))
            })
            .collect::<Result<_>>()?;
        row.sort_by_key(|e| std::cmp::Reverse(e.0));
        Ok(row)
    }

    fn decode(&self, mut code: u64, degree: usize) -> Monomial {
        let n = self.letters.len() as u64;
        let mut word = Vec::with_capacity(degree);
        for _ in 0..degree {
            word.push(self.letters[(code % n) as usize]);
            code /= n;
        }
        word.reverse();
        Monomial::new(word)
    }

    fn to_polynomial(&self, row: &[(u64, Rational)], degree: usize) -> Polynomial {
        row.iter().map(|(k, c)| Polynomial::term(c.clone(), self.decode(*k, degree))).sum()
    }

    fn build_slice(
        &self,
        e: usize,
        relations: &[(usize, SparseRow)],
        relation_ids: &[usize],
        opts: &BuildOptions,
    ) -> Result<Slice> {
        let mut candidates: Vec<(SparseRow, usize)> = Vec::new();
        let mut products = Vec::new();
        for (&(e0, ref rel), &rid) in relations.iter().zip(relation_ids) {
            if e0 > e {
                continue;
            }
            let free = e - e0;
            for a in 0..=free {
                let b = free - a;
                let (left_n, right_n) = (self.pow(a), self.pow(b));
                let shift_left = self.pow(e0 + b);
                let shift_mid = right_n;
                for m1 in 0..left_n {
                    for m2 in 0..right_n {
                        let row: SparseRow =
                            rel.iter().map(|(w, c)| (m1 * shift_left + w * shift_mid + m2, c.clone())).collect();
                        if opts.trace {
                            candidates.push((row, products.len()));
                            products.push(Product { relation: rid, left: (m1, a), right: (m2, b) });
                        } else {
                            candidates.push((row, 0));
                        }
                    }
                }
            }
        }
        // sparsest rows first keeps fill-in low; the pivot set does not depend on this order
        candidates.sort_by_key(|(row, _)| row.len());

        let mut slice = Slice { columns: self.pow(e), rows: Vec::new(), pivots: HashMap::new(), products };
        let mut stored = 0usize;
        for (mut row, pid) in candidates {
            let mut combo: Option<SparseRow> = opts.trace.then(|| vec![(pid as u64, Rational::one())]);
            while let Some((lead, c)) = row.first().cloned() {
                let Some(&p) = slice.pivots.get(&lead) else { break };
                let pivot = &slice.rows[p];
                row = sub_scaled(&row, &c, &pivot.entries);
                if let (Some(cb), Some(pc)) = (combo.as_mut(), pivot.combo.as_ref()) {
                    *cb = sub_scaled(cb, &c, pc);
                }
            }
            let Some((lead, c)) = row.first().cloned() else { continue };
            let inv = c.recip();
            scale_row(&mut row, &inv);
            if let Some(cb) = combo.as_mut() {
                scale_row(cb, &inv);
            }
            stored += row.len();
            if stored > opts.entry_cap {
                return Err(Error::EntryCap { degree: e, cap: opts.entry_cap });
            }
            slice.pivots.insert(lead, slice.rows.len());
            slice.rows.push(StoredRow { entries: row, combo });
        }
        Ok(slice)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn order(&self) -> SymbolOrder {
        self.order
    }

    /// Alphabet in the engine's symbol order.
    pub fn alphabet(&self) -> &[GeneratorSymbol] {
        &self.letters
    }

    fn slice(&self, e: usize) -> Result<&Slice> {
        self.slices.get(e).ok_or(Error::DegreeExceedsBound { degree: e, max: self.max_degree })
    }

    pub fn rank(&self, e: usize) -> Result<usize> {
        Ok(self.slice(e)?.rank())
    }

    /// Dimension of the degree-`e` part of the quotient.
    pub fn dimension(&self, e: usize) -> Result<usize> {
        let s = self.slice(e)?;
        Ok(s.columns as usize - s.rank())
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.columns as usize - s.rank()).collect()
    }

    fn check_query(&self, q: &Polynomial) -> Result<usize> {
        if !q.is_homogeneous() {
            return Err(Error::InhomogeneousPolynomial);
        }
        let d = q.degree().unwrap_or(0);
        if d > self.max_degree {
            return Err(Error::DegreeExceedsBound { degree: d, max: self.max_degree });
        }
        Ok(d)
    }

    /// Remainder of a homogeneous polynomial after eliminating all pivot monomials.
    pub fn normal_form(&self, q: &Polynomial) -> Result<Polynomial> {
        let d = self.check_query(q)?;
        let row = self.encode(q)?;
        let rem = self.slice(d)?.normal_form(row);
        Ok(self.to_polynomial(&rem, d))
    }

    /// Whether a homogeneous polynomial lies in the ideal.
    pub fn contains(&self, q: &Polynomial) -> Result<bool> {
        if q.is_zero() {
            return Ok(true);
        }
        let d = self.check_query(q)?;
        let row = self.encode(q)?;
        Ok(self.slice(d)?.normal_form(row).is_empty())
    }

    /// Non-pivot words of degree `e` in canonical monomial order; a basis of the quotient.
    pub fn quotient_basis(&self, e: usize) -> Result<Vec<Monomial>> {
        let s = self.slice(e)?;
        let mut out: Vec<Monomial> =
            (0..s.columns).filter(|k| !s.pivots.contains_key(k)).map(|k| self.decode(k, e)).collect();
        out.sort();
        Ok(out)
    }

    /// The stored echelon vectors of degree `e` as polynomials.
    pub fn slice_vectors(&self, e: usize) -> Result<Vec<Polynomial>> {
        let s = self.slice(e)?;
        Ok(s.rows.iter().map(|r| self.to_polynomial(&r.entries, e)).collect())
    }

    /// Re-expands stored row `k` of degree `e` from its recorded combination of
    /// products `m₁·g·m₂`. `None` unless the basis was built with tracing.
    pub fn reconstruct(&self, e: usize, k: usize) -> Result<Option<Polynomial>> {
        let s = self.slice(e)?;
        let Some(row) = s.rows.get(k) else { return Ok(None) };
        let Some(combo) = row.combo.as_ref() else { return Ok(None) };
        let mut acc = Polynomial::zero();
        for (pid, c) in combo {
            let prod = &s.products[*pid as usize];
            let m1 = Polynomial::monomial(self.decode(prod.left.0, prod.left.1));
            let m2 = Polynomial::monomial(self.decode(prod.right.0, prod.right.1));
            let g = &self.relations[prod.relation];
            acc = acc.checked_add(&m1.checked_mul(g)?.checked_mul(&m2)?.scale(c))?;
        }
        Ok(Some(acc))
    }
}

pub fn truncated_ideal_basis(p: &Presentation, d: usize) -> Result<TruncatedIdealBasis> {
    TruncatedIdealBasis::new(p, d)
}

pub fn ideal_contains(b: &TruncatedIdealBasis, q: &Polynomial) -> Result<bool> {
    b.contains(q)
}

/// Quotient dimensions in degrees `0..=d`.
pub fn graded_dimension(p: &Presentation, d: usize) -> Result<Vec<usize>> {
    Ok(TruncatedIdealBasis::new(p, d)?.dimensions())
}

pub fn graded_dimension_with_order(p: &Presentation, d: usize, order: SymbolOrder) -> Result<Vec<usize>> {
    Ok(TruncatedIdealBasis::with_options(p, d, BuildOptions { order, ..Default::default() })?.dimensions())
}

pub fn quotient_basis(p: &Presentation, d: usize) -> Result<Vec<Vec<Monomial>>> {
    let b = TruncatedIdealBasis::new(p, d)?;
    (0..=d).map(|e| b.quotient_basis(e)).collect()
}
