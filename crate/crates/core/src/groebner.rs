//! Gröbner bases of ideals generated by pure-difference binomials and
//! monomials, and the commutative-algebra route to `S \ I`.
//!
//! S-pairs and reductions of such polynomials stay within the same shape, so
//! the engine works on exponent vectors only: a working polynomial is zero,
//! a single monomial, or a difference `a - b` of two monomials.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::affine::{extreme_rays_i64, factorizations_i64, image_i64, minimal_generators_i64, AffineSemigroup};
use crate::error::{Error, Result};
use crate::ideal::{IdealComplementResult, SemigroupIdeal};
use crate::lattice::{check_dims, IntVector, TermOrder};

/// A monomial `Z^t`, stored by its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_int_vector(v: &IntVector) -> Result<Self> {
        v.require_nonnegative()?;
        v.coords()
            .iter()
            .map(|c| c.to_u64().ok_or_else(|| Error::TooLarge(c.to_string())))
            .collect::<Result<Vec<u64>>>()
            .map(Monomial)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn to_int_vector(&self) -> IntVector {
        IntVector::new(self.0.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.0, &other.0)
    }

    /// `Some(i)` when this is `Z_i^m` with `m > 0`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = support.next()?;
        support.next().is_none().then_some(i)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "Z{}", i + 1)?;
            } else {
                write!(f, "Z{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Binomial,
    Monomial,
}

/// `lead - tail` with `lead ≻ tail`, or a lone monomial `lead`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialElement {
    lead: Monomial,
    tail: Option<Monomial>,
}

impl BinomialElement {
    /// `a - b`, oriented so that the larger term under `order` leads.
    pub fn binomial(a: Monomial, b: Monomial, order: &TermOrder) -> Result<Self> {
        check_dims(order.nvars(), a.nvars())?;
        check_dims(order.nvars(), b.nvars())?;
        match order.cmp_u64(&a.0, &b.0) {
            Ordering::Equal => Err(Error::Precondition(format!("binomial {a} - {b} is zero"))),
            Ordering::Greater => Ok(BinomialElement { lead: a, tail: Some(b) }),
            Ordering::Less => Ok(BinomialElement { lead: b, tail: Some(a) }),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        BinomialElement { lead: m, tail: None }
    }

    pub fn kind(&self) -> ElementKind {
        if self.tail.is_some() {
            ElementKind::Binomial
        } else {
            ElementKind::Monomial
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> Option<&Monomial> {
        self.tail.as_ref()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }
}

impl fmt::Display for BinomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tail {
            Some(t) => write!(f, "{} - {}", self.lead, t),
            None => write!(f, "{}", self.lead),
        }
    }
}

/// A reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<BinomialElement>,
    order: TermOrder,
    nvars: usize,
}

impl GroebnerBasis {
    /// Elements sorted by lead, then tail (lexicographic on exponents).
    pub fn elements(&self) -> &[BinomialElement] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|e| e.lead.is_one())
    }

    fn engine(&self) -> Vec<Elem> {
        self.elements.iter().map(|e| Elem { lead: e.lead.0.clone(), tail: e.tail.as_ref().map(|t| t.0.clone()) }).collect()
    }

    /// Whether `a - b` lies in the ideal.
    pub fn contains_binomial(&self, a: &Monomial, b: &Monomial) -> Result<bool> {
        check_dims(self.nvars, a.nvars())?;
        check_dims(self.nvars, b.nvars())?;
        let p = Poly::bin(a.0.clone(), b.0.clone());
        Ok(matches!(reduce(p, &self.engine())?, Poly::Zero))
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        check_dims(self.nvars, m.nvars())?;
        Ok(matches!(reduce(Poly::Mono(m.0.clone()), &self.engine())?, Poly::Zero))
    }

    /// Buchberger's criterion: every S-pair reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        let g = self.engine();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if !matches!(reduce(s_poly(&g[i], &g[j])?, &g)?, Poly::Zero) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No lead divides another lead.
    pub fn is_interreduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, a)| {
            self.elements.iter().enumerate().all(|(j, b)| i == j || !a.lead.divides(&b.lead))
        })
    }
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The orders the engine runs under: a term order, or the block order
/// comparing the first `ny` variables by grevlex and breaking ties with a
/// term order on the rest.
#[derive(Clone, Copy)]
enum EngineOrder<'a> {
    Term(&'a TermOrder),
    Elim { ny: usize, y: &'a TermOrder, z: &'a TermOrder },
}

impl EngineOrder<'_> {
    fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        match self {
            EngineOrder::Term(o) => o.cmp_u64(a, b),
            EngineOrder::Elim { ny, y, z } => {
                y.cmp_u64(&a[..*ny], &b[..*ny]).then_with(|| z.cmp_u64(&a[*ny..], &b[*ny..]))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Elem {
    lead: Vec<u64>,
    tail: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Poly {
    Zero,
    Mono(Vec<u64>),
    /// `a - b`
    Bin(Vec<u64>, Vec<u64>),
}

impl Poly {
    fn bin(a: Vec<u64>, b: Vec<u64>) -> Poly {
        if a == b {
            Poly::Zero
        } else {
            Poly::Bin(a, b)
        }
    }

    fn into_elem(self, order: EngineOrder<'_>) -> Option<Elem> {
        match self {
            Poly::Zero => None,
            Poly::Mono(t) => Some(Elem { lead: t, tail: None }),
            Poly::Bin(a, b) => Some(match order.cmp(&a, &b) {
                Ordering::Less => Elem { lead: b, tail: Some(a) },
                _ => Elem { lead: a, tail: Some(b) },
            }),
        }
    }
}

fn shift(t: &[u64], from: &[u64], to: &[u64]) -> Result<Vec<u64>> {
    t.iter()
        .zip(from)
        .zip(to)
        .map(|((&x, &f), &g)| (x - f).checked_add(g).ok_or_else(|| Error::TooLarge("exponent".into())))
        .collect()
}

/// Rewrites `t` with the first element whose lead divides it: `Some(None)`
/// when that element is a monomial, `Some(Some(t'))` for a binomial.
fn rewrite(t: &[u64], basis: &[Elem]) -> Result<Option<Option<Vec<u64>>>> {
    let Some(g) = basis.iter().find(|g| divides(&g.lead, t)) else {
        return Ok(None);
    };
    match &g.tail {
        None => Ok(Some(None)),
        Some(tail) => Ok(Some(Some(shift(t, &g.lead, tail)?))),
    }
}

/// Full reduction. Every step replaces one term by a smaller one or drops
/// it, so the loop terminates.
fn reduce(mut p: Poly, basis: &[Elem]) -> Result<Poly> {
    loop {
        p = match p {
            Poly::Zero => return Ok(Poly::Zero),
            Poly::Mono(t) => match rewrite(&t, basis)? {
                None => return Ok(Poly::Mono(t)),
                Some(None) => Poly::Zero,
                Some(Some(t2)) => Poly::Mono(t2),
            },
            Poly::Bin(a, b) => match rewrite(&a, basis)? {
                Some(None) => Poly::Mono(b),
                Some(Some(a2)) => Poly::bin(a2, b),
                None => match rewrite(&b, basis)? {
                    None => return Ok(Poly::Bin(a, b)),
                    Some(None) => Poly::Mono(a),
                    Some(Some(b2)) => Poly::bin(a, b2),
                },
            },
        }
    }
}

fn lcm(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn s_poly(f: &Elem, g: &Elem) -> Result<Poly> {
    let l = lcm(&f.lead, &g.lead);
    let ft = f.tail.as_ref().map(|t| shift(&l, &f.lead, t)).transpose()?;
    let gt = g.tail.as_ref().map(|t| shift(&l, &g.lead, t)).transpose()?;
    Ok(match (ft, gt) {
        (None, None) => Poly::Zero,
        (Some(a), None) | (None, Some(a)) => Poly::Mono(a),
        (Some(a), Some(b)) => Poly::bin(b, a),
    })
}

fn coprime(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u64>,
    sugar: u64,
}

fn degree(t: &[u64]) -> u64 {
    t.iter().sum()
}

fn elem_degree(e: &Elem) -> u64 {
    degree(&e.lead).max(e.tail.as_deref().map_or(0, degree))
}

/// Buchberger with the sugar selection strategy and the Gebauer–Möller pair
/// update, followed by reduction of the basis.
fn run(gens: Vec<Elem>, order: EngineOrder<'_>, nvars: usize) -> Result<Vec<Elem>> {
    let mut all: Vec<Elem> = Vec::new();
    let mut sugar: Vec<u64> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut reducers: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut queue: VecDeque<(Poly, u64)> = gens.iter().map(|g| (Poly::from_elem(g), elem_degree(g))).collect();
    loop {
        let (poly, s) = match queue.pop_front() {
            Some(next) => next,
            None => {
                let Some(best) = (0..pairs.len()).min_by(|&a, &b| {
                    let (p, q) = (&pairs[a], &pairs[b]);
                    p.sugar.cmp(&q.sugar).then_with(|| order.cmp(&p.lcm, &q.lcm)).then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                }) else {
                    break;
                };
                let pair = pairs.swap_remove(best);
                (s_poly(&all[pair.i], &all[pair.j])?, pair.sugar)
            }
        };
        let Some(h) = reduce(poly, &reducers)?.into_elem(order) else {
            continue;
        };
        if h.lead.iter().all(|&x| x == 0) {
            return Ok(vec![Elem { lead: vec![0; nvars], tail: None }]);
        }
        let hs = s.max(elem_degree(&h));
        let k = all.len();
        all.push(h);
        sugar.push(hs);
        update(&all, &sugar, &mut active, &mut pairs, k);
        reducers = active.iter().map(|&i| all[i].clone()).collect();
    }
    interreduce(reducers, order, nvars)
}

fn pair_sugar(all: &[Elem], sugar: &[u64], i: usize, j: usize, l: &[u64]) -> u64 {
    let d = degree(l);
    (sugar[i] + d - degree(&all[i].lead)).max(sugar[j] + d - degree(&all[j].lead))
}

/// Gebauer–Möller update for a new element `k`.
fn update(all: &[Elem], sugar: &[u64], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, k: usize) {
    let hl = &all[k].lead;
    let candidates: Vec<(usize, Vec<u64>)> = active.iter().map(|&g| (g, lcm(&all[g].lead, hl))).collect();
    let mut kept: Vec<(usize, Vec<u64>)> = Vec::new();
    for (idx, (g, l)) in candidates.iter().enumerate() {
        let cop = coprime(&all[*g].lead, hl);
        let dominated = candidates[idx + 1..].iter().chain(kept.iter()).any(|(_, l2)| divides(l2, l));
        if cop || !dominated {
            kept.push((*g, l.clone()));
        }
    }
    pairs.retain(|p| {
        !divides(hl, &p.lcm) || lcm(&all[p.i].lead, hl) == p.lcm || lcm(&all[p.j].lead, hl) == p.lcm
    });
    for (g, l) in kept {
        if !coprime(&all[g].lead, hl) {
            let sugar = pair_sugar(all, sugar, g, k, &l);
            pairs.push(Pair { i: g, j: k, lcm: l, sugar });
        }
    }
    active.retain(|&g| !divides(hl, &all[g].lead));
    active.push(k);
}

impl Poly {
    fn from_elem(e: &Elem) -> Poly {
        match &e.tail {
            None => Poly::Mono(e.lead.clone()),
            Some(t) => Poly::bin(e.lead.clone(), t.clone()),
        }
    }
}

fn interreduce(basis: Vec<Elem>, order: EngineOrder<'_>, nvars: usize) -> Result<Vec<Elem>> {
    if basis.iter().any(|e| e.lead.iter().all(|&x| x == 0)) {
        return Ok(vec![Elem { lead: vec![0; nvars], tail: None }]);
    }
    // keep one element per minimal lead
    let mut minimal: Vec<Elem> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(&a.lead, &b.lead).then_with(|| a.tail.is_some().cmp(&b.tail.is_some())));
    for e in sorted {
        if !minimal.iter().any(|m| divides(&m.lead, &e.lead)) {
            minimal.push(e);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, e) in minimal.iter().enumerate() {
        let others: Vec<Elem> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, e)| e.clone()).collect();
        let tail = match &e.tail {
            None => None,
            Some(t) => match reduce(Poly::Mono(t.clone()), &others)? {
                Poly::Mono(t2) => Some(t2),
                Poly::Zero => None,
                Poly::Bin(..) => unreachable!("a monomial reduces to a monomial"),
            },
        };
        reduced.push(Elem { lead: e.lead.clone(), tail });
    }
    reduced.sort_by(|a, b| (&a.lead, &a.tail).cmp(&(&b.lead, &b.tail)));
    Ok(reduced)
}

fn to_public(elems: Vec<Elem>, order: &TermOrder) -> GroebnerBasis {
    GroebnerBasis {
        nvars: order.nvars(),
        order: order.clone(),
        elements: elems
            .into_iter()
            .map(|e| BinomialElement { lead: Monomial(e.lead), tail: e.tail.map(Monomial) })
            .collect(),
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(gens: &[BinomialElement], order: &TermOrder) -> Result<GroebnerBasis> {
    let nvars = order.nvars();
    let mut elems = Vec::with_capacity(gens.len());
    for g in gens {
        check_dims(nvars, g.nvars())?;
        elems.push(Elem { lead: g.lead.0.clone(), tail: g.tail.as_ref().map(|t| t.0.clone()) });
    }
    Ok(to_public(run(elems, EngineOrder::Term(order), nvars)?, order))
}

fn small_u64(s: &AffineSemigroup) -> Result<Vec<Vec<u64>>> {
    Ok(s.small()?.into_iter().map(|g| g.into_iter().map(|x| x as u64).collect()).collect())
}

/// Gröbner basis of the toric ideal of `S` under grevlex on `Z_1..Z_n`.
pub fn toric_ideal(s: &AffineSemigroup) -> Result<GroebnerBasis> {
    toric_ideal_with_order(s, &TermOrder::grevlex(s.len()))
}

/// Eliminates `Y_1..Y_d` from `(Z_i - Y^{g_i})` under the block order with
/// the `Y` block first.
pub fn toric_ideal_with_order(s: &AffineSemigroup, order: &TermOrder) -> Result<GroebnerBasis> {
    let n = s.len();
    let d = s.dim();
    check_dims(n, order.nvars())?;
    let gens = small_u64(s)?;
    let elems: Vec<Elem> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut y = g.clone();
            y.extend(std::iter::repeat(0).take(n));
            let mut z = vec![0u64; d + n];
            z[d + i] = 1;
            Elem { lead: y, tail: Some(z) }
        })
        .collect();
    let y_order = TermOrder::grevlex(d);
    let full = run(elems, EngineOrder::Elim { ny: d, y: &y_order, z: order }, d + n)?;
    let kept = full
        .into_iter()
        .filter(|e| e.lead[..d].iter().all(|&x| x == 0) && e.tail.as_ref().is_none_or(|t| t[..d].iter().all(|&x| x == 0)))
        .map(|e| Elem { lead: e.lead[d..].to_vec(), tail: e.tail.map(|t| t[d..].to_vec()) })
        .collect();
    Ok(to_public(kept, order))
}

/// Least `m_i` with `Z_i^{m_i}` a lead, per variable; a constant lead
/// counts as `m_i = 0`.
fn pure_powers(g: &GroebnerBasis) -> Vec<Option<u64>> {
    let mut out = vec![None; g.nvars];
    for e in &g.elements {
        if e.lead.is_one() {
            return vec![Some(0); g.nvars];
        }
        if let Some(i) = e.lead.pure_power_of() {
            let m = e.lead.0[i];
            out[i] = Some(out[i].map_or(m, |x: u64| x.min(m)));
        }
    }
    out
}

/// True iff every variable in `vars` has a pure power among the leads.
pub fn zero_dimensional(g: &GroebnerBasis, vars: &[usize]) -> Result<bool> {
    if let Some(&bad) = vars.iter().find(|&&v| v >= g.nvars) {
        return Err(Error::IndexOutOfRange { index: bad, len: g.nvars });
    }
    let powers = pure_powers(g);
    Ok(!vars.is_empty() && vars.iter().all(|&v| powers[v].is_some()) || (vars.is_empty() && g.is_unit()))
}

/// Monomials outside the initial ideal, sorted lexicographically.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let all: Vec<usize> = (0..g.nvars).collect();
    if !zero_dimensional(g, &all)? {
        return Err(Error::NotZeroDimensional);
    }
    if g.is_unit() {
        return Ok(Vec::new());
    }
    let leads: Vec<&[u64]> = g.elements.iter().map(|e| e.lead.0.as_slice()).collect();
    let standard = |t: &[u64]| !leads.iter().any(|l| divides(l, t));
    let start = vec![0u64; g.nvars];
    let mut seen: HashSet<Vec<u64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for i in 0..g.nvars {
            let mut next = t.clone();
            next[i] += 1;
            if standard(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().map(Monomial).collect();
    out.sort();
    Ok(out)
}

/// `S \ I` via `P_S = J_S + (Z^{a_1}, ..., Z^{a_r})`, taking `a_k` to be the
/// lexicographically smallest factorization of the `k`-th base point.
pub fn ideal_complement_groebner(ideal: &SemigroupIdeal, order: &TermOrder) -> Result<IdealComplementResult> {
    let gens = ideal.ambient().small()?;
    let mut factorizations = Vec::with_capacity(ideal.base().len());
    for u in ideal.small_base()? {
        let first = factorizations_i64(&gens, &u).into_iter().next().ok_or_else(|| {
            Error::Inconsistency(format!("base point {u:?} has no factorization"))
        })?;
        factorizations.push(IntVector::from(first));
    }
    ideal_complement_groebner_with(ideal, order, &factorizations)
}

/// As [`ideal_complement_groebner`] with one given factorization per base
/// point, in the order of [`SemigroupIdeal::base`].
pub fn ideal_complement_groebner_with(
    ideal: &SemigroupIdeal,
    order: &TermOrder,
    factorizations: &[IntVector],
) -> Result<IdealComplementResult> {
    let s = ideal.ambient();
    check_dims(ideal.base().len(), factorizations.len())?;
    for (a, u) in factorizations.iter().zip(ideal.base()) {
        if &s.image(a)? != u {
            return Err(Error::Precondition(format!("{a} is not a factorization of {u}")));
        }
    }
    let monomials = factorizations.iter().map(Monomial::from_int_vector).collect::<Result<Vec<_>>>()?;
    complement_from_monomials(s, order, monomials)
}

fn complement_from_monomials(
    s: &AffineSemigroup,
    order: &TermOrder,
    monomials: Vec<Monomial>,
) -> Result<IdealComplementResult> {
    let toric = toric_ideal_with_order(s, order)?;
    let mut gens = toric.elements;
    gens.extend(monomials.into_iter().map(BinomialElement::monomial));
    let basis = buchberger(&gens, order)?;
    let powers = pure_powers(&basis);
    let witnesses = powers.iter().map(|p| p.map(BigInt::from)).collect();
    if powers.iter().any(Option::is_none) {
        return Ok(IdealComplementResult { finite: false, complement: Vec::new(), witnesses });
    }
    let cg = s.small()?;
    let standard = standard_monomials(&basis)?;
    let mut images = Vec::with_capacity(standard.len());
    for t in &standard {
        let x: Vec<i64> = t.0.iter().map(|&e| e as i64).collect();
        images.push(image_i64(&cg, &x)?);
    }
    images.sort();
    let before = images.len();
    images.dedup();
    if images.len() != before {
        return Err(Error::Inconsistency("two standard monomials have the same image".into()));
    }
    Ok(IdealComplementResult { finite: true, complement: images.into_iter().map(IntVector::from).collect(), witnesses })
}

/// `Ap(S, E)` for `E` the extreme rays, from `J_S + (Z_i : g_i ∈ E)`.
pub fn apery_groebner(s: &AffineSemigroup) -> Result<Vec<IntVector>> {
    apery_groebner_with_order(s, &TermOrder::grevlex(s.len()))
}

pub fn apery_groebner_with_order(s: &AffineSemigroup, order: &TermOrder) -> Result<Vec<IntVector>> {
    let gens = s.small()?;
    let rays = extreme_rays_i64(&minimal_generators_i64(gens.clone()));
    let n = s.len();
    let monomials = rays
        .iter()
        .map(|r| {
            let i = gens.iter().position(|g| g == r).expect("minimal generators occur in every generating set");
            let mut e = vec![0u64; n];
            e[i] = 1;
            Monomial(e)
        })
        .collect();
    let result = complement_from_monomials(s, order, monomials)?;
    if !result.finite {
        return Err(Error::Inconsistency("Apéry set of the extreme rays is infinite".into()));
    }
    Ok(result.complement)
}
