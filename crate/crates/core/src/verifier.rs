//! Named, parameterized checks of the algebraic identities and theorems,
//! collected into a [`VerificationReport`].
//!
//! A check never aborts on a false claim: the outcome and a witness (the
//! reduced remainder, a dimension table or a count) go into the report.
//! Only invalid parameters produce an `Err`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::complexes::{Complex, Graph, NodeSet};
use crate::error::{Error, Result};
use crate::free_algebra::{GeneratorSymbol, Polynomial};
use crate::presentations::{
    all_triples, graph_presentation, identity_11_residual, qf_presentation, qn_presentation, rel_10, rel_12, rel_4,
    rel_5, rel_9, rel_additive, rel_multiplicative, restrict_to_complex, theorem_relations_labeled, u_in_z, z_in_u,
    z_symbol_in_u, Presentation, QnForm,
};
use crate::quotient::TruncatedIdealBasis;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    BasisLemma,
    Eq3WellDefined,
    Corollary,
    Identity11,
    Proposition,
    Theorem,
    PresentationEquivalence,
    CommutativeCase,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::BasisLemma,
        CheckKind::Eq3WellDefined,
        CheckKind::Corollary,
        CheckKind::Identity11,
        CheckKind::Proposition,
        CheckKind::Theorem,
        CheckKind::PresentationEquivalence,
        CheckKind::CommutativeCase,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::BasisLemma => "basis_lemma",
            CheckKind::Eq3WellDefined => "eq3_welldefined",
            CheckKind::Corollary => "corollary",
            CheckKind::Identity11 => "identity11",
            CheckKind::Proposition => "proposition",
            CheckKind::Theorem => "theorem",
            CheckKind::PresentationEquivalence => "presentation_equivalence",
            CheckKind::CommutativeCase => "commutative_case",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub witness: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub schema: u32,
    pub pass: bool,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new(mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
        let pass = entries.iter().all(|e| e.pass);
        VerificationReport { schema: REPORT_SCHEMA, pass, entries }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// One line per entry plus an overall line; timings are omitted so the
    /// text is reproducible.
    pub fn summary_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "{} {} [{}] {}\n",
                if e.pass { "PASS" } else { "FAIL" },
                e.check,
                params.join(" "),
                e.witness
            ));
        }
        let passed = self.entries.iter().filter(|e| e.pass).count();
        out.push_str(&format!(
            "overall: {} ({passed}/{} checks passed)\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.entries.len()
        ));
        out
    }
}

fn entry(check: CheckKind, params: &[(&str, String)], started: Instant, pass: bool, witness: String) -> ReportEntry {
    ReportEntry {
        check: check.name().to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        pass,
        witness,
        millis: started.elapsed().as_millis() as u64,
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Bounds(msg()))
    }
}

fn universe_params(n: usize) -> Vec<(&'static str, String)> {
    vec![("n", n.to_string())]
}

fn complex_params(c: &Complex) -> Vec<(&'static str, String)> {
    vec![("complex", c.describe())]
}

/// The linear span of all additive relations, as a degree-1 truncated ideal.
fn additive_span(n: usize, extra: Vec<Polynomial>) -> Result<TruncatedIdealBasis> {
    let zform = qn_presentation(n, QnForm::Z)?;
    let mut rels: Vec<Polynomial> = zform.relations().iter().filter(|r| r.degree() == Some(1)).cloned().collect();
    rels.extend(extra);
    let p = Presentation::new(format!("additive relations n={n}"), zform.alphabet().to_vec(), rels)?;
    TruncatedIdealBasis::new(&p, 1)
}

fn nonempty_subsets(n: usize) -> Result<Vec<NodeSet>> {
    let mut v: Vec<NodeSet> = NodeSet::full(n)?.subsets().filter(|s| !s.is_empty()).collect();
    v.sort();
    Ok(v)
}

/// Degree-one dimension of `Q_n` equals `2^n − 1`; the `u(A)` are independent
/// modulo the additive relations; the change of basis round-trips.
pub fn check_basis_lemma(n: usize) -> Result<ReportEntry> {
    require((1..=5).contains(&n), || format!("basis_lemma needs 1 <= n <= 5, got {n}"))?;
    let t = Instant::now();
    let expected = (1usize << n) - 1;
    let dz = TruncatedIdealBasis::new(&qn_presentation(n, QnForm::Z)?, 1)?.dimension(1)?;
    let du = TruncatedIdealBasis::new(&qn_presentation(n, QnForm::U)?, 1)?.dimension(1)?;

    let sets = nonempty_subsets(n)?;
    let u_images: Vec<Polynomial> =
        sets.iter().map(|a| u_in_z(*a, a.iter().next().expect("nonempty"))).collect::<Result<_>>()?;
    let base_rank = additive_span(n, Vec::new())?.rank(1)?;
    let with_u = additive_span(n, u_images)?.rank(1)?;
    let independent = with_u - base_rank == expected;

    let mut roundtrip_failures = Vec::new();
    for a in &sets {
        for i in a.iter() {
            let back = u_in_z(*a, i)?.substitute_with(z_symbol_in_u)?;
            if back != Polynomial::symbol(GeneratorSymbol::U(*a)) {
                roundtrip_failures.push(format!("u({a}) via i={i}: {back}"));
            }
        }
    }
    let canonical = additive_span(n, Vec::new())?;
    let full = NodeSet::full(n)?;
    for i in 1..=n as u8 {
        for a in full.without(i).subsets() {
            let z = Polynomial::symbol(GeneratorSymbol::Z { a, i });
            // every u(S) in z_in_u(A,i) contains i, so each can be written through index i
            let exact = z_in_u(a, i)?.substitute_with(|s| match *s {
                GeneratorSymbol::U(set) => u_in_z(set, i).ok(),
                GeneratorSymbol::Z { .. } => None,
            })?;
            if exact != z {
                roundtrip_failures.push(format!("z({a},{i}) exact: {exact}"));
            }
            let via_min = z_in_u(a, i)?.substitute_with(crate::presentations::u_symbol_in_z)?;
            if !canonical.contains(&(&via_min - &z))? {
                roundtrip_failures.push(format!("z({a},{i}) modulo additive relations: {via_min}"));
            }
        }
    }
    let pass = dz == expected && du == expected && independent && roundtrip_failures.is_empty();
    let mut witness = format!(
        "dim1 z-form={dz} u-form={du} expected={expected}; u(A) independent mod additive relations: {independent}"
    );
    if !roundtrip_failures.is_empty() {
        witness.push_str(&format!("; round-trip failures: {}", roundtrip_failures.join("; ")));
    }
    Ok(entry(CheckKind::BasisLemma, &universe_params(n), t, pass, witness))
}

/// `u_in_z(A,i) − u_in_z(A,i′)` lies in the span of the additive relations.
pub fn check_eq3_welldefined(n: usize) -> Result<ReportEntry> {
    require((1..=5).contains(&n), || format!("eq3_welldefined needs 1 <= n <= 5, got {n}"))?;
    let t = Instant::now();
    let span = additive_span(n, Vec::new())?;
    let mut checked = 0usize;
    let mut failure = None;
    for a in nonempty_subsets(n)?.into_iter().filter(|a| a.len() >= 2) {
        let members = a.to_vec();
        for (x, &i) in members.iter().enumerate() {
            for &i2 in &members[x + 1..] {
                let diff = &u_in_z(a, i)? - &u_in_z(a, i2)?;
                checked += 1;
                if failure.is_none() && !span.contains(&diff)? {
                    failure = Some(format!("A={a} i={i} i'={i2} remainder {}", span.normal_form(&diff)?));
                }
            }
        }
    }
    let witness = match &failure {
        None => format!("{checked} index pairs, all differences in the additive span"),
        Some(f) => format!("{checked} index pairs; first failure: {f}"),
    };
    Ok(entry(CheckKind::Eq3WellDefined, &universe_params(n), t, failure.is_none(), witness))
}

/// Exact identities: `z→u` kills every additive relation, maps every
/// multiplicative relation to `rel_4`, and `rel_5 = −rel_4`.
pub fn check_corollary(n: usize) -> Result<ReportEntry> {
    require((1..=5).contains(&n), || format!("corollary needs 1 <= n <= 5, got {n}"))?;
    let t = Instant::now();
    let mut images: HashMap<GeneratorSymbol, Polynomial> = HashMap::new();
    let full = NodeSet::full(n)?;
    for i in 1..=n as u8 {
        for a in full.without(i).subsets() {
            images.insert(GeneratorSymbol::Z { a, i }, z_in_u(a, i)?);
        }
    }
    let triples = all_triples(n)?;
    let mut failures = Vec::new();
    for &(a, i, j) in &triples {
        let r4 = rel_4(a, i, j)?;
        let add = rel_additive(a, i, j)?.substitute(&images)?;
        if !add.is_zero() {
            failures.push(format!("additive (A={a},i={i},j={j}) maps to {add}"));
        }
        let mul = rel_multiplicative(a, i, j)?.substitute(&images)?;
        if mul != r4 {
            failures.push(format!("multiplicative (A={a},i={i},j={j}): image - rel_4 = {}", &mul - &r4));
        }
        let sum = &rel_5(a, i, j)? + &r4;
        if !sum.is_zero() {
            failures.push(format!("rel_5 + rel_4 (A={a},i={i},j={j}) = {sum}"));
        }
    }
    let witness = if failures.is_empty() {
        format!("{} instances (A,i,j), all identities exact", triples.len())
    } else {
        format!("{} instances; {} failures; first: {}", triples.len(), failures.len(), failures[0])
    };
    Ok(entry(CheckKind::Corollary, &universe_params(n), t, failures.is_empty(), witness))
}

/// The recursion `R(A) = R(A∖k) + …` as an exact free-algebra identity.
pub fn check_identity11(n: usize) -> Result<ReportEntry> {
    require((1..=5).contains(&n), || format!("identity11 needs 1 <= n <= 5, got {n}"))?;
    let t = Instant::now();
    let (count, failure) = identity11_instances(n)?;
    let witness = match &failure {
        None => format!("{count} instances (A,i,j,k), residual zero"),
        Some(f) => format!("{count} instances; first nonzero residual: {f}"),
    };
    Ok(entry(CheckKind::Identity11, &universe_params(n), t, failure.is_none(), witness))
}

fn identity11_instances(n: usize) -> Result<(usize, Option<String>)> {
    let mut count = 0;
    let mut failure = None;
    for (a, i, j) in all_triples(n)? {
        for k in a.iter() {
            count += 1;
            let r = identity_11_residual(a, i, j, k)?;
            if failure.is_none() && !r.is_zero() {
                failure = Some(format!("A={a} i={i} j={j} k={k}: {r}"));
            }
        }
    }
    Ok((count, failure))
}

/// Readings of the hypothesis under which `[u(A),u(B)]` should vanish in `Q(F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropositionReading {
    /// Some `i ∈ A`, `j ∈ B`, `i ≠ j`, with `{i,j} ∉ F`.
    PairNotFace,
    /// Some `i ∈ A`, `j ∈ B`, `i ≠ j`, with `E ∪ {i,j} ∉ F` for every `E ⊆ (A∖i) ∪ (B∖j)`.
    InstanceGuard,
    /// `A ∩ B = ∅`, some `i ∈ A` with `{i,b} ∉ F` for all `b ∈ B`, and some
    /// `j ∈ B` with `{a,j} ∉ F` for all `a ∈ A`. Under this hypothesis every
    /// term of `rel_5((A∖i)∪(B∖j), i, j)` outside `rel_9(A∖i, B∖j, i, j)` is
    /// killed in `Q(F)`.
    Separated,
}

fn pair_face(c: &Complex, a: u8, b: u8) -> bool {
    let n = c.universe() as usize;
    a == b || c.contains(&NodeSet::from_elems(n, &[a as usize, b as usize]).expect("valid pair"))
}

/// The `(i, j)` certifying that `(A, B)` satisfies `reading`, if any.
pub fn proposition_witness(c: &Complex, a: &NodeSet, b: &NodeSet, reading: PropositionReading) -> Option<(u8, u8)> {
    match reading {
        PropositionReading::PairNotFace => {
            a.iter().flat_map(|i| b.iter().map(move |j| (i, j))).find(|&(i, j)| i != j && !pair_face(c, i, j))
        }
        PropositionReading::InstanceGuard => a.iter().flat_map(|i| b.iter().map(move |j| (i, j))).find(|&(i, j)| {
            i != j && {
                let rest = a.without(i).union(b.without(j));
                rest.subsets().all(|e| !c.contains(&e.with(i).with(j)))
            }
        }),
        PropositionReading::Separated => {
            if !a.is_disjoint(b) {
                return None;
            }
            let i = a.iter().find(|&i| b.iter().all(|x| !pair_face(c, i, x)))?;
            let j = b.iter().find(|&j| a.iter().all(|x| !pair_face(c, x, j)))?;
            Some((i, j))
        }
    }
}

fn u_poly(a: NodeSet) -> Polynomial {
    Polynomial::symbol(GeneratorSymbol::U(a))
}

/// `[u(A),u(B)] = 0` in `Q(F)` for every pair of faces meeting the
/// hypothesis, together with the intermediate relations used to derive it.
///
/// The pass/fail outcome follows the [`PropositionReading::Separated`]
/// reading. Pairs admitted by the weaker pairwise reading are also tested and
/// any that do not commute are listed in the witness.
pub fn check_proposition(c: &Complex, degree_bound: usize) -> Result<ReportEntry> {
    require(degree_bound >= 2, || format!("proposition needs degree bound >= 2, got {degree_bound}"))?;
    require(c.universe() <= 5, || format!("proposition needs n <= 5, got {}", c.universe()))?;
    require(degree_bound <= 3, || format!("proposition needs degree bound <= 3, got {degree_bound}"))?;
    let t = Instant::now();
    let basis = TruncatedIdealBasis::new(&qf_presentation(c)?, degree_bound)?;
    let faces = c.faces().to_vec();
    let mut separated = 0usize;
    let mut failures = Vec::new();
    let mut pairwise = 0usize;
    let mut pairwise_non_commuting = Vec::new();
    let mut readings_disagree = Vec::new();

    for (x, a) in faces.iter().enumerate() {
        for b in &faces[x + 1..] {
            let comm = u_poly(*a).commutator(&u_poly(*b))?;
            let edge = proposition_witness(c, a, b, PropositionReading::PairNotFace);
            let guard = proposition_witness(c, a, b, PropositionReading::InstanceGuard);
            if edge.is_some() != guard.is_some() {
                readings_disagree.push(format!("({a},{b})"));
            }
            if edge.is_some() {
                pairwise += 1;
                if !basis.contains(&comm)? {
                    pairwise_non_commuting.push(format!("[u({a}),u({b})] = {}", basis.normal_form(&comm)?));
                }
            }
            let Some((i, j)) = proposition_witness(c, a, b, PropositionReading::Separated) else { continue };
            separated += 1;
            if !basis.contains(&comm)? {
                failures.push(format!("[u({a}),u({b})] remainder {}", basis.normal_form(&comm)?));
                continue;
            }
            for ap in a.without(i).subsets() {
                for bp in b.without(j).subsets() {
                    let r9 = rel_9(ap, bp, i, j)?;
                    if !basis.contains(&r9)? {
                        failures
                            .push(format!("rel_9(A'={ap},B'={bp},i={i},j={j}) remainder {}", basis.normal_form(&r9)?));
                    }
                    let sub = u_poly(ap.with(i)).commutator(&u_poly(bp.with(j)))?;
                    if !basis.contains(&sub)? {
                        failures.push(format!(
                            "[u({}),u({})] remainder {}",
                            ap.with(i),
                            bp.with(j),
                            basis.normal_form(&sub)?
                        ));
                    }
                }
            }
            if degree_bound >= 3 {
                for g in basis.alphabet() {
                    let gp = Polynomial::symbol(*g);
                    if !basis.contains(&(&gp * &comm))? || !basis.contains(&(&comm * &gp))? {
                        failures.push(format!("[u({a}),u({b})] times {g} leaves the degree-3 slice"));
                    }
                }
            }
        }
    }
    let pass = failures.is_empty() && readings_disagree.is_empty();
    let mut witness = format!("separated reading: {separated} pairs qualify");
    if failures.is_empty() {
        witness.push_str(", all commute and every rel_9 sub-sum lies in the ideal");
    } else {
        witness.push_str(&format!(", {} failures: {}", failures.len(), failures.join("; ")));
    }
    witness.push_str(&format!("; pairwise {{i,j}} reading: {pairwise} pairs qualify"));
    if pairwise_non_commuting.is_empty() {
        witness.push_str(", all commute");
    } else {
        witness.push_str(&format!(
            ", {} do not commute: {}",
            pairwise_non_commuting.len(),
            pairwise_non_commuting.join("; ")
        ));
    }
    if !readings_disagree.is_empty() {
        witness.push_str(&format!("; pairwise and instance guards disagree on {}", readings_disagree.join(" ")));
    }
    let mut params = complex_params(c);
    params.push(("degree", degree_bound.to_string()));
    Ok(entry(CheckKind::Proposition, &params, t, pass, witness))
}

/// Outcome of the graph-theorem check, split by part.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoremOutcome {
    /// theorem relations outside the `Q(F)` ideal
    pub relations_outside: Vec<String>,
    pub recursion_failure: Option<String>,
    pub triple_outside: Vec<String>,
    /// `R(A,i,j)` outside the ideal of the theorem relations
    pub induction_outside: Vec<String>,
    pub counts: [usize; 4],
}

impl TheoremOutcome {
    pub fn pass(&self) -> bool {
        self.relations_outside.is_empty()
            && self.recursion_failure.is_none()
            && self.triple_outside.is_empty()
            && self.induction_outside.is_empty()
    }
}

pub fn theorem_outcome(g: &Graph) -> Result<TheoremOutcome> {
    let n = g.universe() as usize;
    require(n <= 5, || format!("theorem needs n <= 5, got {n}"))?;
    let c = g.to_complex();
    let qf = TruncatedIdealBasis::new(&qf_presentation(&c)?, 2)?;
    let gp = TruncatedIdealBasis::new(&graph_presentation(g)?, 2)?;
    let mut out = TheoremOutcome::default();

    let rels = theorem_relations_labeled(g);
    out.counts[0] = rels.len();
    for r in &rels {
        if !qf.contains(&r.poly)? {
            out.relations_outside.push(format!("{} {:?}: remainder {}", r.clause, r.indices, qf.normal_form(&r.poly)?));
        }
    }

    let (count, failure) = identity11_instances(n)?;
    out.counts[1] = count;
    out.recursion_failure = failure;

    for i in 1..=n as u8 {
        for j in 1..=n as u8 {
            for k in 1..=n as u8 {
                if i == j || j == k || i == k {
                    continue;
                }
                out.counts[2] += 1;
                let r = rel_12(n, i, j, k)?;
                if !qf.contains(&r)? {
                    out.triple_outside.push(format!("(i,j,k)=({i},{j},{k}) remainder {}", qf.normal_form(&r)?));
                }
            }
        }
    }

    for (a, i, j) in all_triples(n)? {
        out.counts[3] += 1;
        let r = restrict_to_complex(&rel_10(a, i, j)?, &c);
        if !gp.contains(&r)? {
            out.induction_outside.push(format!("R({a},{i},{j}) remainder {}", gp.normal_form(&r)?));
        }
    }
    Ok(out)
}

/// Theorem relations lie in the `Q(F)` ideal; identity (11) is exact; the
/// three-index relations lie in the ideal; every `R(A,i,j)` follows from the
/// theorem relations in degree two.
pub fn check_theorem(g: &Graph) -> Result<ReportEntry> {
    let t = Instant::now();
    let o = theorem_outcome(g)?;
    let mut witness = format!(
        "relations in Q(F) ideal: {}/{}; R(A,i,j) recursion: {} instances{}; three-index relations in ideal: {}/{}; R(A,i,j) from theorem relations: {}/{}",
        o.counts[0] - o.relations_outside.len(),
        o.counts[0],
        o.counts[1],
        if o.recursion_failure.is_some() { " with a nonzero residual" } else { " exact" },
        o.counts[2] - o.triple_outside.len(),
        o.counts[2],
        o.counts[3] - o.induction_outside.len(),
        o.counts[3],
    );
    let firsts: Vec<&String> = o
        .relations_outside
        .first()
        .into_iter()
        .chain(o.recursion_failure.as_ref())
        .chain(o.triple_outside.first())
        .chain(o.induction_outside.first())
        .collect();
    for f in firsts {
        witness.push_str(&format!("; {f}"));
    }
    let params = complex_params(&g.to_complex());
    Ok(entry(CheckKind::Theorem, &params, t, o.pass(), witness))
}

/// Graded dimensions of `Q(F)` and of the graph presentation agree through degree `d`.
pub fn check_presentation_equivalence(g: &Graph, d: usize) -> Result<ReportEntry> {
    let n = g.universe() as usize;
    require(n <= 4 && d <= 3, || format!("presentation_equivalence needs n <= 4 and d <= 3, got n={n} d={d}"))?;
    let t = Instant::now();
    let qf = TruncatedIdealBasis::new(&qf_presentation(&g.to_complex())?, d)?.dimensions();
    let gr = TruncatedIdealBasis::new(&graph_presentation(g)?, d)?.dimensions();
    let witness = format!("Q(F) dims {qf:?}, graph dims {gr:?}; certified through degree {d} only");
    let mut params = complex_params(&g.to_complex());
    params.push(("degree", d.to_string()));
    Ok(entry(CheckKind::PresentationEquivalence, &params, t, qf == gr, witness))
}

/// Number of degree-`e` monomials in `n` commuting variables.
pub fn multiset_count(n: usize, e: usize) -> u128 {
    // C(n+e-1, e), built incrementally so every intermediate is an integer
    let mut acc: u128 = 1;
    for k in 1..=e as u128 {
        acc = acc * (n as u128 + k - 1) / k;
    }
    acc
}

/// For a zero-dimensional complex the graded dimensions are those of a
/// commutative polynomial ring in `n` variables.
pub fn check_commutative_case(n: usize, d: usize) -> Result<ReportEntry> {
    require((1..=4).contains(&n) && d <= 3, || {
        format!("commutative_case needs 1 <= n <= 4 and d <= 3, got n={n} d={d}")
    })?;
    let t = Instant::now();
    let dims = TruncatedIdealBasis::new(&qf_presentation(&Complex::closure(&[], n)?)?, d)?.dimensions();
    let expected: Vec<usize> = (0..=d).map(|e| multiset_count(n, e) as usize).collect();
    let witness = format!("dims {dims:?}, commutative count {expected:?}");
    let mut params = universe_params(n);
    params.push(("degree", d.to_string()));
    Ok(entry(CheckKind::CommutativeCase, &params, t, dims == expected, witness))
}

/// Which checks to run and at what size.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub checks: Vec<CheckKind>,
    /// Universe size for the checks indexed by `n`; replaced by the complex's
    /// universe when a complex is given.
    pub n: usize,
    /// Complex for the proposition and graph checks; defaults to the complete graph on `n` nodes.
    pub complex: Option<Complex>,
    pub max_degree: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { checks: CheckKind::ALL.to_vec(), n: 3, complex: None, max_degree: 2 }
    }
}

impl RunConfig {
    pub fn with_check_names(mut self, names: &[&str]) -> Result<Self> {
        self.checks = names.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        Ok(self)
    }
}

fn run_one(kind: CheckKind, n: usize, c: &Complex, d: usize) -> Result<ReportEntry> {
    match kind {
        CheckKind::BasisLemma => check_basis_lemma(n),
        CheckKind::Eq3WellDefined => check_eq3_welldefined(n),
        CheckKind::Corollary => check_corollary(n),
        CheckKind::Identity11 => check_identity11(n),
        CheckKind::Proposition => check_proposition(c, d.max(2)),
        CheckKind::Theorem => check_theorem(&Graph::from_complex(c)?),
        CheckKind::PresentationEquivalence => check_presentation_equivalence(&Graph::from_complex(c)?, d),
        CheckKind::CommutativeCase => check_commutative_case(n, d),
    }
}

/// Runs every configured check concurrently and aggregates the outcomes.
pub fn run_all(config: &RunConfig) -> Result<VerificationReport> {
    let complex = match &config.complex {
        Some(c) => c.clone(),
        None => Graph::complete(config.n)?.to_complex(),
    };
    let n = complex.universe() as usize;
    let mut kinds = config.checks.clone();
    kinds.sort();
    kinds.dedup();
    let results: Vec<Result<ReportEntry>> = std::thread::scope(|scope| {
        let handles: Vec<_> = kinds
            .iter()
            .map(|&k| {
                let complex = &complex;
                scope.spawn(move || run_one(k, n, complex, config.max_degree))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let entries = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facets(n: usize, f: &[&[usize]]) -> Complex {
        let lists: Vec<Vec<usize>> = f.iter().map(|x| x.to_vec()).collect();
        Complex::from_facet_lists(n, &lists).unwrap()
    }

    #[test]
    fn basis_lemma_small() {
        let e = check_basis_lemma(1).unwrap();
        assert!(e.pass, "{}", e.witness);
        assert!(e.witness.starts_with("dim1 z-form=1 u-form=1 expected=1"));
        let e = check_basis_lemma(2).unwrap();
        assert!(e.pass, "{}", e.witness);
        assert!(e.witness.contains("z-form=3"));
        assert!(check_basis_lemma(6).is_err());
    }

    #[test]
    fn eq3_small() {
        assert!(check_eq3_welldefined(1).unwrap().pass);
        let e = check_eq3_welldefined(2).unwrap();
        assert!(e.pass);
        assert!(e.witness.starts_with("1 index pairs"));
        // the n=2 difference is exactly minus one additive relation
        let a = NodeSet::from_elems(2, &[1, 2]).unwrap();
        let diff = &u_in_z(a, 1).unwrap() - &u_in_z(a, 2).unwrap();
        assert_eq!(diff, -rel_additive(NodeSet::empty(2).unwrap(), 1, 2).unwrap());
    }

    #[test]
    fn corollary_and_identity_small() {
        assert!(check_corollary(3).unwrap().pass);
        assert!(check_identity11(3).unwrap().pass);
    }

    #[test]
    fn readings_on_path() {
        let p3 = facets(3, &[&[1, 2], &[2, 3]]);
        let a = NodeSet::from_elems(3, &[1, 2]).unwrap();
        let b = NodeSet::from_elems(3, &[3]).unwrap();
        assert_eq!(proposition_witness(&p3, &a, &b, PropositionReading::PairNotFace), Some((1, 3)));
        assert_eq!(proposition_witness(&p3, &a, &b, PropositionReading::InstanceGuard), Some((1, 3)));
        assert_eq!(proposition_witness(&p3, &a, &b, PropositionReading::Separated), None);
        let one = NodeSet::from_elems(3, &[1]).unwrap();
        assert_eq!(proposition_witness(&p3, &one, &b, PropositionReading::Separated), Some((1, 3)));
    }

    #[test]
    fn proposition_on_path_reports_pairwise_counterexample() {
        let e = check_proposition(&facets(3, &[&[1, 2], &[2, 3]]), 2).unwrap();
        assert!(e.pass, "{}", e.witness);
        assert!(e.witness.contains("[u({3}),u({1,2})]"), "{}", e.witness);
    }

    #[test]
    fn theorem_k2() {
        let e = check_theorem(&Graph::complete(2).unwrap()).unwrap();
        assert!(e.pass, "{}", e.witness);
    }

    #[test]
    fn equivalence_and_commutative() {
        let e = check_presentation_equivalence(&Graph::complete(2).unwrap(), 2).unwrap();
        assert!(e.pass);
        assert!(e.witness.starts_with("Q(F) dims [1, 3, 8], graph dims [1, 3, 8]"));
        let e = check_commutative_case(2, 3).unwrap();
        assert!(e.pass);
        assert!(e.witness.starts_with("dims [1, 2, 3, 4]"));
        assert!(check_commutative_case(1, 3).unwrap().pass);
        assert!(check_commutative_case(5, 1).is_err());
    }

    #[test]
    fn multiset_counts() {
        assert_eq!((0..=3).map(|e| multiset_count(3, e)).collect::<Vec<_>>(), vec![1, 3, 6, 10]);
        assert_eq!(multiset_count(1, 7), 1);
    }

    #[test]
    fn check_names_round_trip() {
        for k in CheckKind::ALL {
            assert_eq!(k.name().parse::<CheckKind>().unwrap(), k);
        }
        assert_eq!("nope".parse::<CheckKind>().unwrap_err(), Error::UnknownCheck("nope".into()));
    }

    #[test]
    fn run_all_single_check() {
        let cfg = RunConfig { n: 2, ..Default::default() }.with_check_names(&["corollary"]).unwrap();
        let r = run_all(&cfg).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(r.pass);
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(RunConfig::default().with_check_names(&["bogus"]).is_err());
    }

    #[test]
    fn run_all_rejects_non_graph_for_theorem() {
        let cfg = RunConfig { complex: Some(Complex::simplex(3).unwrap()), ..Default::default() }
            .with_check_names(&["theorem"])
            .unwrap();
        assert_eq!(run_all(&cfg).unwrap_err(), Error::NotAGraph(2));
    }
}
