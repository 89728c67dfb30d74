//! A self-contained Buchberger engine for deciding whether a polynomial
//! system has a common complex zero.
//!
//! The engine computes a reduced Groebner basis of the ideal generated by a
//! system; the system is unsolvable over the complex numbers exactly when the
//! reduced basis is `{1}`.  All arithmetic is exact: the content/primitive
//! polynomial representation keeps coefficients as integers with an explicit
//! rational scale, so reductions never lose precision and coefficient growth
//! is tamed by gcd extraction after every step.
//!
//! Runs are bounded by explicit budgets ([`GroebnerCaps`]); exceeding one
//! yields [`BuchbergerOutcome::Exhausted`] with diagnostics instead of an
//! answer, never a wrong answer.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial};

/// Errors raised while assembling polynomial systems.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finite generating set for a polynomial ideal, with zero generators
/// dropped and the rest normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    order: MonomialOrder,
    gens: Vec<Polynomial>,
}

impl PolySystem {
    pub fn new(
        order: MonomialOrder,
        gens: impl IntoIterator<Item = Polynomial>,
    ) -> Result<PolySystem, GroebnerError> {
        let mut kept = Vec::new();
        for g in gens {
            if g.order() != order {
                return Err(PolyError::OrderMismatch(order, g.order()).into());
            }
            if !g.is_zero() {
                kept.push(g.normalize()?);
            }
        }
        Ok(PolySystem { order, gens: kept })
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Budgets that bound a Buchberger run.  Any violation aborts the run with
/// diagnostics rather than returning a possibly wrong basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerCaps {
    /// Maximum number of S-pairs popped from the queue.
    pub max_pairs: u64,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
    /// Maximum total degree of any intermediate polynomial.
    pub max_degree: u32,
    /// Maximum coefficient size in bits (numerator or denominator).
    pub max_coeff_bits: u64,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps {
            max_pairs: 500_000,
            max_terms: 200_000,
            max_degree: 500,
            max_coeff_bits: 1_000_000,
        }
    }
}

/// Why and where a run gave up, for reporting undecided levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub reason: String,
    pub pairs_processed: u64,
    pub basis_size: usize,
    pub max_terms_seen: usize,
    pub max_degree_seen: u32,
    pub max_coeff_bits_seen: u64,
}

/// Result of a bounded Buchberger run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuchbergerOutcome {
    Completed(GroebnerBasis),
    Exhausted(BudgetReport),
}

impl BuchbergerOutcome {
    pub fn basis(&self) -> Option<&GroebnerBasis> {
        match self {
            BuchbergerOutcome::Completed(b) => Some(b),
            BuchbergerOutcome::Exhausted(_) => None,
        }
    }
}

/// A reduced Groebner basis: normalized elements, pairwise non-divisible
/// leading monomials, fully reduced tails, sorted by increasing leading
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True exactly when the basis is `{1}`, i.e. the ideal is the whole
    /// ring and the system has no common complex zero.
    pub fn is_trivial(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_one()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if f.order() != self.order {
            return Err(PolyError::OrderMismatch(self.order, f.order()));
        }
        Ok(reduce_full(f, &self.polys, &mut None).expect("uncapped reduction cannot exhaust"))
    }

    /// Independently re-checks the defining properties of a reduced Groebner
    /// basis for the ideal of `system`: every element is normalized, leading
    /// monomials are pairwise non-divisible, no tail monomial is reducible,
    /// every original generator reduces to zero, and every S-polynomial of
    /// basis pairs reduces to zero.  The S-polynomial check uses the refined
    /// Buchberger criterion: a pair with coprime leading monomials reduces
    /// to zero by the product criterion, and a pair covered by a third
    /// element (chain criterion, with both sub-pair lcms proper divisors of
    /// the pair's lcm) reduces to zero once the two strictly smaller pairs
    /// do, which well-founded induction over the lcm order grounds; every
    /// remaining pair is reduced explicitly.
    pub fn certify(&self, system: &PolySystem) -> Result<(), String> {
        if system.order() != self.order {
            return Err("system and basis use different monomial orders".into());
        }
        for (i, g) in self.polys.iter().enumerate() {
            if g.is_zero() {
                return Err(format!("basis element {i} is zero"));
            }
            if g.normalize().expect("nonzero") != *g {
                return Err(format!("basis element {i} is not normalized"));
            }
        }
        let table = LeadTable::new(&self.polys);
        let leads: Vec<&(Monomial, u64, u32)> = table
            .leads
            .iter()
            .map(|l| l.as_ref().expect("elements are nonzero"))
            .collect();
        for (i, g) in self.polys.iter().enumerate() {
            for (t, (_, m)) in g.terms().enumerate() {
                let mask_m = m.var_mask();
                let deg_m = m.total_degree();
                for (j, (lm_h, mask_h, deg_h)) in leads.iter().enumerate() {
                    if i == j || *deg_h > deg_m || mask_h & !mask_m != 0 {
                        continue;
                    }
                    if lm_h.divides(m) {
                        return Err(if t == 0 {
                            format!(
                                "leading monomial of element {j} divides leading monomial of element {i}"
                            )
                        } else {
                            format!("element {i} has a tail monomial reducible by element {j}")
                        });
                    }
                }
            }
        }
        for (i, gen) in system.generators().iter().enumerate() {
            let r = reduce_with(gen, &self.polys, &table, &mut None)
                .expect("uncapped reduction cannot exhaust");
            if !r.is_zero() {
                return Err(format!("generator {i} does not reduce to zero"));
            }
        }
        for i in 0..self.polys.len() {
            for j in (i + 1)..self.polys.len() {
                if leads[i].0.coprime(&leads[j].0) {
                    continue;
                }
                let lcm = leads[i].0.lcm(&leads[j].0);
                let lcm_mask = lcm.var_mask();
                let lcm_deg = lcm.total_degree();
                let chained = leads.iter().enumerate().any(|(k, (lm_k, mask_k, deg_k))| {
                    k != i
                        && k != j
                        && *deg_k <= lcm_deg
                        && mask_k & !lcm_mask == 0
                        && lm_k.divides(&lcm)
                        && leads[i].0.lcm(lm_k) != lcm
                        && leads[j].0.lcm(lm_k) != lcm
                });
                if chained {
                    continue;
                }
                let s = s_polynomial(&self.polys[i], &self.polys[j])
                    .map_err(|e| e.to_string())?;
                let r = reduce_with(&s, &self.polys, &table, &mut None)
                    .expect("uncapped reduction cannot exhaust");
                if !r.is_zero() {
                    return Err(format!(
                        "S-polynomial of elements {i} and {j} does not reduce to zero"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// The S-polynomial `(lcm/lt(f))*f - (lcm/lt(g))*g` of two nonzero
/// polynomials, where `lt` includes the leading coefficient.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.order() != g.order() {
        return Err(PolyError::OrderMismatch(f.order(), g.order()));
    }
    let (lc_f, lm_f) = f.leading_term()?;
    let (lc_g, lm_g) = g.leading_term()?;
    let lcm = lm_f.lcm(lm_g);
    let mf = lcm.div(lm_f).expect("lcm is divisible by lm(f)");
    let mg = lcm.div(lm_g).expect("lcm is divisible by lm(g)");
    let left = f.mul_term(&lc_f.recip(), &mf);
    let right = g.mul_term(&lc_g.recip(), &mg);
    left.sub(&right)
}

/// Normal form of `f` modulo a list of reducers (need not be a Groebner
/// basis; the result then depends on the list order but is always an exact
/// remainder of `f` by the ideal the reducers generate).
pub fn reduce(f: &Polynomial, reducers: &[Polynomial]) -> Result<Polynomial, PolyError> {
    for g in reducers {
        if g.order() != f.order() {
            return Err(PolyError::OrderMismatch(f.order(), g.order()));
        }
    }
    Ok(reduce_full(f, reducers, &mut None).expect("uncapped reduction cannot exhaust"))
}

/// Tracks per-run extremes and enforces caps.
struct CapTracker<'a> {
    caps: &'a GroebnerCaps,
    max_terms_seen: usize,
    max_degree_seen: u32,
    max_coeff_bits_seen: u64,
}

impl<'a> CapTracker<'a> {
    fn new(caps: &'a GroebnerCaps) -> Self {
        CapTracker {
            caps,
            max_terms_seen: 0,
            max_degree_seen: 0,
            max_coeff_bits_seen: 0,
        }
    }

    fn observe(&mut self, p: &Polynomial) -> Result<(), String> {
        let terms = p.num_terms();
        let degree = p.total_degree().unwrap_or(0);
        let bits = p.coefficient_bits();
        self.max_terms_seen = self.max_terms_seen.max(terms);
        self.max_degree_seen = self.max_degree_seen.max(degree);
        self.max_coeff_bits_seen = self.max_coeff_bits_seen.max(bits);
        if terms > self.caps.max_terms {
            return Err(format!(
                "term budget exceeded: {terms} > {}",
                self.caps.max_terms
            ));
        }
        if degree > self.caps.max_degree {
            return Err(format!(
                "degree budget exceeded: {degree} > {}",
                self.caps.max_degree
            ));
        }
        if bits > self.caps.max_coeff_bits {
            return Err(format!(
                "coefficient budget exceeded: {bits} bits > {}",
                self.caps.max_coeff_bits
            ));
        }
        Ok(())
    }
}

/// Precomputed leading-monomial data for a reducer list: the monomial, its
/// variable-support mask, and its total degree.  `None` marks a zero
/// polynomial.  Divisibility tests check mask and degree first, which
/// rejects almost all non-divisors without touching exponent vectors.
struct LeadTable {
    leads: Vec<Option<(Monomial, u64, u32)>>,
}

impl LeadTable {
    fn new(polys: &[Polynomial]) -> LeadTable {
        LeadTable {
            leads: polys.iter().map(Self::entry).collect(),
        }
    }

    fn entry(p: &Polynomial) -> Option<(Monomial, u64, u32)> {
        p.leading_monomial()
            .map(|lm| (lm.clone(), lm.var_mask(), lm.total_degree()))
    }

    fn push(&mut self, p: &Polynomial) {
        self.leads.push(Self::entry(p));
    }
}

/// Full normal form: repeatedly cancels the leading term against the first
/// reducer whose leading monomial divides it; irreducible leading terms move
/// to the result.  Exact: the return value differs from `f` by an ideal
/// member.  `table` must be `LeadTable::new(reducers)` (kept by callers that
/// reduce many polynomials against one list).
fn reduce_with(
    f: &Polynomial,
    reducers: &[Polynomial],
    table: &LeadTable,
    tracker: &mut Option<&mut CapTracker<'_>>,
) -> Result<Polynomial, String> {
    let order = f.order();
    let mut h = f.clone();
    let mut irreducible: Vec<(num_rational::BigRational, Monomial)> = Vec::new();
    'outer: while !h.is_zero() {
        if let Some(t) = tracker.as_deref_mut() {
            t.observe(&h)?;
        }
        let (lc_h, lm_h) = h.leading_term().expect("nonzero");
        let lm_h = lm_h.clone();
        let mask_h = lm_h.var_mask();
        let deg_h = lm_h.total_degree();
        for (g, lead) in reducers.iter().zip(&table.leads) {
            let Some((lm_g, mask_g, deg_g)) = lead else {
                continue;
            };
            if *deg_g > deg_h || mask_g & !mask_h != 0 {
                continue;
            }
            if let Some(quot) = lm_h.div(lm_g) {
                let (lc_g, _) = g.leading_term().expect("nonzero");
                let factor = &lc_h / lc_g;
                h = h
                    .sub(&g.mul_term(&factor, &quot))
                    .expect("orders match");
                continue 'outer;
            }
        }
        // The leading term is irreducible; set it aside and continue with
        // the strictly smaller tail.
        irreducible.push((lc_h, lm_h));
        let tail: Vec<_> = h.int_terms()[1..].to_vec();
        h = Polynomial::from_int_terms_scaled(order, tail, h.content().clone());
    }
    Ok(Polynomial::from_terms(order, irreducible))
}

/// `reduce_with` against a freshly built lead table; for one-off reductions.
fn reduce_full(
    f: &Polynomial,
    reducers: &[Polynomial],
    tracker: &mut Option<&mut CapTracker<'_>>,
) -> Result<Polynomial, String> {
    reduce_with(f, reducers, &LeadTable::new(reducers), tracker)
}

/// Drops zero polynomials, normalizes, and reduces every element against the
/// others until no element changes.
fn inter_reduce(mut polys: Vec<Polynomial>) -> Vec<Polynomial> {
    polys.retain(|p| !p.is_zero());
    for p in &mut polys {
        *p = p.normalize().expect("nonzero");
    }
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < polys.len() {
            let f = polys[i].clone();
            let mut others = Vec::with_capacity(polys.len() - 1);
            others.extend_from_slice(&polys[..i]);
            others.extend_from_slice(&polys[i + 1..]);
            let r = reduce_full(&f, &others, &mut None).expect("uncapped");
            if r.is_zero() {
                polys.remove(i);
                changed = true;
                continue;
            }
            let r = r.normalize().expect("nonzero");
            if r != f {
                polys[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            return polys;
        }
    }
}

/// An S-pair in the pending set, keyed by (lcm degree, lcm monomial,
/// indices) so iteration pops the normal-strategy minimum deterministically.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    order: MonomialOrder,
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Pair {
    fn from_lms(order: MonomialOrder, lm_i: &Monomial, i: usize, lm_j: &Monomial, j: usize) -> Pair {
        let lcm = lm_i.lcm(lm_j);
        Pair {
            order,
            degree: lcm.total_degree(),
            lcm,
            i,
            j,
        }
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Appends `h` to the basis, updating the pending pair set with the
/// Gebauer-Moeller criteria: prune old pairs whose lcm the new leading
/// monomial strictly refines, drop new candidates whose lcm another new
/// candidate properly divides, keep one candidate per lcm value (preferring
/// one with coprime leading monomials), then discard coprime candidates.
fn add_element(
    order: MonomialOrder,
    basis: &mut Vec<Polynomial>,
    table: &mut LeadTable,
    pending: &mut BTreeSet<Pair>,
    h: Polynomial,
) {
    let t = basis.len();
    let lm_t = h.leading_monomial().expect("nonzero").clone();
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    // Old-pair pruning: (i, j) is redundant once lm(t) divides lcm(i, j)
    // while both lcm(i, t) and lcm(j, t) differ from lcm(i, j).
    pending.retain(|p| {
        if !lm_t.divides(&p.lcm) {
            return true;
        }
        let li = lms[p.i].lcm(&lm_t);
        let lj = lms[p.j].lcm(&lm_t);
        li == p.lcm || lj == p.lcm
    });
    let mut cands: Vec<Pair> = (0..t)
        .map(|i| Pair::from_lms(order, &lms[i], i, &lm_t, t))
        .collect();
    // M criterion: drop a candidate whose lcm is properly divided by
    // another candidate's lcm.
    let keep: Vec<bool> = cands
        .iter()
        .map(|a| {
            !cands.iter().any(|b| {
                b.lcm != a.lcm && b.lcm.divides(&a.lcm)
            })
        })
        .collect();
    let mut kept: Vec<Pair> = cands
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    // F criterion: one candidate per lcm value; prefer a coprime candidate
    // so the B criterion can discard the whole class.
    kept.sort_unstable_by(|a, b| {
        order
            .cmp(&a.lcm, &b.lcm)
            .then_with(|| {
                let ca = lms[a.i].coprime(&lm_t);
                let cb = lms[b.i].coprime(&lm_t);
                cb.cmp(&ca) // coprime candidates first
            })
            .then_with(|| a.i.cmp(&b.i))
    });
    kept.dedup_by(|b, a| a.lcm == b.lcm);
    // B criterion: coprime leading monomials reduce to zero automatically.
    kept.retain(|p| !lms[p.i].coprime(&lm_t));
    pending.extend(kept);
    table.push(&h);
    basis.push(h);
}

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller pair criteria.  Deterministic for a fixed input.
pub fn buchberger(system: &PolySystem, caps: &GroebnerCaps) -> BuchbergerOutcome {
    let order = system.order();
    let mut tracker = CapTracker::new(caps);
    let input = inter_reduce(system.generators().to_vec());
    if input.iter().any(|p| p.is_constant() && !p.is_zero()) {
        return BuchbergerOutcome::Completed(GroebnerBasis {
            order,
            polys: vec![Polynomial::one(order)],
        });
    }
    let mut basis: Vec<Polynomial> = Vec::with_capacity(input.len());
    let mut table = LeadTable { leads: Vec::new() };
    let mut pending: BTreeSet<Pair> = BTreeSet::new();
    for g in input {
        add_element(order, &mut basis, &mut table, &mut pending, g);
    }
    let mut pairs_processed: u64 = 0;

    let exhausted = |reason: String, pairs: u64, basis: &[Polynomial], t: &CapTracker<'_>| {
        BuchbergerOutcome::Exhausted(BudgetReport {
            reason,
            pairs_processed: pairs,
            basis_size: basis.len(),
            max_terms_seen: t.max_terms_seen,
            max_degree_seen: t.max_degree_seen,
            max_coeff_bits_seen: t.max_coeff_bits_seen,
        })
    };

    while let Some(pair) = pending.pop_first() {
        pairs_processed += 1;
        if pairs_processed > caps.max_pairs {
            return exhausted(
                format!("pair budget exceeded: {} pairs", caps.max_pairs),
                pairs_processed,
                &basis,
                &tracker,
            );
        }
        let (i, j) = (pair.i, pair.j);
        let s = s_polynomial(&basis[i], &basis[j]).expect("nonzero basis elements");
        if let Err(msg) = tracker.observe(&s) {
            return exhausted(msg, pairs_processed, &basis, &tracker);
        }
        let r = match reduce_with(&s, &basis, &table, &mut Some(&mut tracker)) {
            Ok(r) => r,
            Err(msg) => return exhausted(msg, pairs_processed, &basis, &tracker),
        };
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return BuchbergerOutcome::Completed(GroebnerBasis {
                order,
                polys: vec![Polynomial::one(order)],
            });
        }
        let r = r.normalize().expect("nonzero");
        add_element(order, &mut basis, &mut table, &mut pending, r);
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // element's leading monomial divides.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading_monomial().expect("nonzero").clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = basis[j].leading_monomial().expect("nonzero");
            if lm_j.divides(&lm_i) && (!lm_i.divides(lm_j) || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    // Tail-reduce each element against the others; leading monomials are
    // pairwise non-divisible, so only tails change and one pass suffices.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let mut others = Vec::with_capacity(minimal.len() - 1);
        others.extend_from_slice(&minimal[..i]);
        others.extend_from_slice(&minimal[i + 1..]);
        let r = reduce_full(&minimal[i], &others, &mut None).expect("uncapped");
        reduced.push(r.normalize().expect("tail reduction keeps elements nonzero"));
    }
    reduced.sort_unstable_by(|a, b| {
        order.cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    BuchbergerOutcome::Completed(GroebnerBasis {
        order,
        polys: reduced,
    })
}

/// Convenience wrapper: the reduced Groebner basis, or budget diagnostics.
pub fn groebner_basis(
    system: &PolySystem,
    caps: &GroebnerCaps,
) -> Result<GroebnerBasis, BudgetReport> {
    match buchberger(system, caps) {
        BuchbergerOutcome::Completed(b) => Ok(b),
        BuchbergerOutcome::Exhausted(r) => Err(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Variable};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn pl(text: &str) -> Polynomial {
        parse_polynomial(text, MonomialOrder::Lex).unwrap()
    }

    fn pg(text: &str) -> Polynomial {
        parse_polynomial(text, MonomialOrder::GrevLex).unwrap()
    }

    fn sys(order: MonomialOrder, gens: &[&str]) -> PolySystem {
        PolySystem::new(
            order,
            gens.iter().map(|t| parse_polynomial(t, order).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn s_polynomial_frozen_example() {
        // f = x^2 - 1, g = x*y - 1 under lex with x = x0 > y = x1:
        // S(f, g) = y*f - x*g = x - y.
        let f = pl("x0^2 - 1");
        let g = pl("x0*x1 - 1");
        let s = s_polynomial(&f, &g).unwrap();
        assert_eq!(s, pl("x0 - x1"));
    }

    #[test]
    fn reduce_examples() {
        let x = pg("x0");
        assert!(reduce(&pg("x0^2"), std::slice::from_ref(&x))
            .unwrap()
            .is_zero());
        assert_eq!(
            reduce(&pg("x0^2*x1 + 1"), &[pg("x0^2")]).unwrap(),
            pg("1")
        );
        assert!(
            reduce(&pg("x0 - x1"), &[pg("x0 - 1"), pg("x1 - 1")])
                .unwrap()
                .is_zero()
        );
        // Scaled reducers give the same normal form.
        assert!(reduce(&pg("x0^2"), &[pg("2*x0")]).unwrap().is_zero());
        // No reducers: identity.
        let f = pg("x0*x1 - 3");
        assert_eq!(reduce(&f, &[]).unwrap(), f);
    }

    #[test]
    fn reduction_is_exact_on_values() {
        // reduce(f, [g]) = f - q*g exactly; check on a sample point that
        // lies on g's zero set, where the normal form must equal f.
        let f = pg("x0^2*x1 + x0 + 5");
        let g = pg("x1 - 2");
        let r = reduce(&f, &[g]).unwrap();
        let mut assign = std::collections::HashMap::new();
        assign.insert(Variable::Diag(0), BigRational::new(3.into(), 7.into()));
        assign.insert(Variable::Diag(1), BigRational::from_integer(2.into()));
        assert_eq!(r.evaluate(&assign).unwrap(), f.evaluate(&assign).unwrap());
    }

    #[test]
    fn buchberger_trivial_ideal() {
        for gens in [
            vec!["x0 - 1", "x0"],
            vec!["x0^2 + 1", "x0"],
            vec!["x1", "x1*yh0 - 1"],
        ] {
            let system = sys(MonomialOrder::GrevLex, &gens);
            let basis = groebner_basis(&system, &GroebnerCaps::default()).unwrap();
            assert!(basis.is_trivial(), "{gens:?} should generate (1)");
            assert_eq!(basis.polys(), &[pg("1")]);
            basis.certify(&system).unwrap();
        }
    }

    #[test]
    fn buchberger_textbook_basis() {
        // Ideal (x^2 - y, x^3 - x) under grevlex with x = x0 > y = x1 has
        // reduced basis {y^2 - y, x*y - x, x^2 - y}.
        let system = sys(MonomialOrder::GrevLex, &["x0^2 - x1", "x0^3 - x0"]);
        let basis = groebner_basis(&system, &GroebnerCaps::default()).unwrap();
        let expected = vec![pg("x1^2 - x1"), pg("x0*x1 - x0"), pg("x0^2 - x1")];
        assert_eq!(basis.polys(), expected.as_slice());
        assert!(!basis.is_trivial());
        basis.certify(&system).unwrap();
    }

    #[test]
    fn rabinowitsch_forces_nonzero() {
        // y = 0 is required by the first generator, so adding y*yh - 1
        // (which forces y != 0) makes the system unsolvable.
        let solvable = sys(MonomialOrder::GrevLex, &["x0*y0", "y0*yh0 - 1"]);
        let basis = groebner_basis(&solvable, &GroebnerCaps::default()).unwrap();
        assert!(!basis.is_trivial());
        basis.certify(&solvable).unwrap();

        let unsolvable = sys(MonomialOrder::GrevLex, &["y0", "y0*yh0 - 1"]);
        let basis = groebner_basis(&unsolvable, &GroebnerCaps::default()).unwrap();
        assert!(basis.is_trivial());
    }

    #[test]
    fn empty_and_lone_systems() {
        let empty = PolySystem::new(MonomialOrder::GrevLex, Vec::new()).unwrap();
        let basis = groebner_basis(&empty, &GroebnerCaps::default()).unwrap();
        assert!(basis.is_empty());
        assert!(!basis.is_trivial());
        basis.certify(&empty).unwrap();

        // Zero generators are dropped.
        let zeros = PolySystem::new(
            MonomialOrder::GrevLex,
            vec![Polynomial::zero(MonomialOrder::GrevLex), pg("x0 - 1")],
        )
        .unwrap();
        assert_eq!(zeros.len(), 1);
        let basis = groebner_basis(&zeros, &GroebnerCaps::default()).unwrap();
        assert_eq!(basis.polys(), &[pg("x0 - 1")]);
    }

    #[test]
    fn budget_exhaustion_reports_diagnostics() {
        let system = sys(MonomialOrder::GrevLex, &["x0^2 - x1", "x0^3 - x0"]);
        let caps = GroebnerCaps {
            max_pairs: 1,
            ..GroebnerCaps::default()
        };
        match buchberger(&system, &caps) {
            BuchbergerOutcome::Exhausted(report) => {
                assert!(report.reason.contains("pair budget"));
                assert!(report.pairs_processed > 1);
                assert!(report.basis_size >= 2);
            }
            BuchbergerOutcome::Completed(_) => panic!("expected exhaustion"),
        }
        let caps = GroebnerCaps {
            max_terms: 1,
            ..GroebnerCaps::default()
        };
        match buchberger(&system, &caps) {
            BuchbergerOutcome::Exhausted(report) => {
                assert!(report.reason.contains("term budget"));
            }
            BuchbergerOutcome::Completed(_) => panic!("expected exhaustion"),
        }
    }

    #[test]
    fn deterministic_and_idempotent() {
        let system = sys(
            MonomialOrder::GrevLex,
            &["x0*x1 - x2^2", "x0^2 - x1*x2", "x1^2 - x0*x2"],
        );
        let caps = GroebnerCaps::default();
        let b1 = groebner_basis(&system, &caps).unwrap();
        let b2 = groebner_basis(&system, &caps).unwrap();
        assert_eq!(b1, b2);
        b1.certify(&system).unwrap();
        // Re-running on the basis itself returns the same basis.
        let again = PolySystem::new(MonomialOrder::GrevLex, b1.polys().to_vec()).unwrap();
        let b3 = groebner_basis(&again, &caps).unwrap();
        assert_eq!(b1.polys(), b3.polys());
    }

    #[test]
    fn lex_elimination_example() {
        // Ideal (x - t, y - t^2) under lex with t = x0 > x = x1 > y = x2
        // eliminates t: the basis contains x^2 - y.
        let system = sys(MonomialOrder::Lex, &["x1 - x0", "x2 - x0^2"]);
        let basis = groebner_basis(&system, &GroebnerCaps::default()).unwrap();
        basis.certify(&system).unwrap();
        assert!(
            basis.polys().iter().any(|p| *p == pl("x1^2 - x2")),
            "expected x^2 - y in {:?}",
            basis.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()
        );
    }

    fn arb_system() -> impl Strategy<Value = PolySystem> {
        let var = (0u32..3).prop_map(Variable::Diag);
        let mono = proptest::collection::vec((var, 1u32..3), 0..3)
            .prop_map(|pairs| Monomial::from_exponents(&pairs));
        let term = (mono, -4i64..=4)
            .prop_map(|(m, c)| (BigRational::from_integer(c.into()), m));
        let poly = proptest::collection::vec(term, 1..4).prop_map(|terms| {
            Polynomial::from_terms(MonomialOrder::GrevLex, terms)
        });
        proptest::collection::vec(poly, 1..4).prop_map(|gens| {
            PolySystem::new(MonomialOrder::GrevLex, gens).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn computed_bases_certify(system in arb_system()) {
            let caps = GroebnerCaps {
                max_pairs: 2_000,
                max_terms: 2_000,
                max_degree: 40,
                max_coeff_bits: 4_096,
            };
            if let BuchbergerOutcome::Completed(basis) = buchberger(&system, &caps) {
                prop_assert!(basis.certify(&system).is_ok());
            }
        }
    }
}
