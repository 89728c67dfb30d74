//! Sparse multivariate polynomials over the rationals with grevlex and lex
//! monomial orders.
//!
//! A polynomial is stored as a primitive integer term vector (coefficients
//! with gcd 1 and positive leading coefficient, strictly decreasing
//! monomials) times a single rational content factor.  This keeps Buchberger
//! reductions in integer arithmetic while every public value stays an exact
//! rational polynomial.
//!
//! Variable precedence is fixed: every Rabinowitsch inverse `yh_e` precedes
//! every edge variable `y_e`, which precede every diagonal variable `x_i`;
//! within a block, smaller indices come first.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by polynomial construction, arithmetic, and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("monomial order mismatch: {0} vs {1}")]
    OrderMismatch(MonomialOrder, MonomialOrder),
    #[error("the zero polynomial cannot be normalized")]
    NormalizeZero,
    #[error("the zero polynomial has no leading term")]
    ZeroLeadingTerm,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(Variable),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// One indeterminate of a pattern-matrix polynomial ring.
///
/// `Diag(i)` is the free diagonal entry `x_i`, `Edge(e)` the off-diagonal
/// entry `y_e` of the edge with index `e`, and `EdgeInv(e)` the Rabinowitsch
/// inverse `yh_e` paired with `Edge(e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    Diag(u32),
    Edge(u32),
    EdgeInv(u32),
}

impl Variable {
    /// Precedence key: lower compares first and binds tighter in both
    /// monomial orders.
    fn precedence(self) -> (u8, u32) {
        match self {
            Variable::EdgeInv(i) => (0, i),
            Variable::Edge(i) => (1, i),
            Variable::Diag(i) => (2, i),
        }
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.precedence().cmp(&other.precedence())
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Diag(i) => write!(f, "x{i}"),
            Variable::Edge(i) => write!(f, "y{i}"),
            Variable::EdgeInv(i) => write!(f, "yh{i}"),
        }
    }
}

impl Variable {
    /// Bit position for the variable-support prefilter.  Distinct variables
    /// may share a bit; the resulting signature is conservative, which is all
    /// the divisibility prefilter needs.
    pub(crate) fn mask_bit(self) -> u32 {
        match self {
            Variable::Diag(i) => i % 21,
            Variable::Edge(e) => 21 + e % 21,
            Variable::EdgeInv(e) => 42 + e % 22,
        }
    }
}

/// A power product of variables; exponents are positive and variables are
/// kept sorted by precedence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables are merged, zero exponents dropped.
    pub fn from_exponents(pairs: &[(Variable, u32)]) -> Monomial {
        let mut map: HashMap<Variable, u32> = HashMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        let mut exps: Vec<(Variable, u32)> = map.into_iter().collect();
        exps.sort_unstable_by_key(|&(v, _)| v.precedence());
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    /// Conservative variable-support signature: whenever `self` divides
    /// `other`, `self.var_mask() & !other.var_mask() == 0`.  The converse
    /// may fail, so a positive prefilter result still needs `divides`.
    pub(crate) fn var_mask(&self) -> u64 {
        self.exps
            .iter()
            .fold(0, |m, &(v, _)| m | 1u64 << v.mask_bit())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            if j == other.exps.len() {
                exps.push(self.exps[i]);
                i += 1;
            } else if i == self.exps.len() {
                exps.push(other.exps[j]);
                j += 1;
            } else {
                match self.exps[i].0.cmp(&other.exps[j].0) {
                    Ordering::Less => {
                        exps.push(self.exps[i]);
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push(other.exps[j]);
                        j += 1;
                    }
                    Ordering::Equal => {
                        exps.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        Monomial { exps }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            let q = e - other.exponent(v);
            if q > 0 {
                exps.push((v, q));
            }
        }
        Some(Monomial { exps })
    }

    /// Least common multiple of two power products.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            if j == other.exps.len() {
                exps.push(self.exps[i]);
                i += 1;
            } else if i == self.exps.len() {
                exps.push(other.exps[j]);
                j += 1;
            } else {
                match self.exps[i].0.cmp(&other.exps[j].0) {
                    Ordering::Less => {
                        exps.push(self.exps[i]);
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push(other.exps[j]);
                        j += 1;
                    }
                    Ordering::Equal => {
                        exps.push((self.exps[i].0, self.exps[i].1.max(other.exps[j].1)));
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        Monomial { exps }
    }

    /// True when the two power products share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        // Factors print in natural reading order (x, then y, then yh), the
        // reverse of the internal precedence order.
        let parts: Vec<String> = self
            .exps
            .iter()
            .rev()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A monomial order: graded reverse lexicographic (the default) or pure
/// lexicographic, both over the fixed variable precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
        }
    }
}

impl MonomialOrder {
    /// Total order on monomials.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                // First differing exponent, scanning from the highest
                // precedence variable: the larger exponent wins.
                let (mut i, mut j) = (0, 0);
                while i < a.exps.len() && j < b.exps.len() {
                    let (va, ea) = a.exps[i];
                    let (vb, eb) = b.exps[j];
                    match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                match (i < a.exps.len(), j < b.exps.len()) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    _ => Ordering::Equal,
                }
            }
            MonomialOrder::GrevLex => {
                // Total degree first; ties scan from the lowest precedence
                // variable and the *smaller* exponent wins.
                let da = a.total_degree();
                let db = b.total_degree();
                if da != db {
                    return da.cmp(&db);
                }
                let (mut i, mut j) = (a.exps.len(), b.exps.len());
                while i > 0 && j > 0 {
                    let (va, ea) = a.exps[i - 1];
                    let (vb, eb) = b.exps[j - 1];
                    match va.cmp(&vb) {
                        // `a` has the lower-precedence variable, so `a` is
                        // smaller under reverse lex.
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Equal => {
                            if ea != eb {
                                return eb.cmp(&ea);
                            }
                            i -= 1;
                            j -= 1;
                        }
                    }
                }
                // Equal degrees with one list exhausted: both exhausted.
                debug_assert!(i == 0 && j == 0);
                Ordering::Equal
            }
        }
    }
}

/// An exact multivariate polynomial: `content * sum(coeff_i * mono_i)` with
/// primitive integer `coeff_i` (gcd 1, leading coefficient positive) and
/// monomials strictly decreasing under the ambient order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    order: MonomialOrder,
    content: BigRational,
    terms: Vec<(BigInt, Monomial)>,
}

impl Polynomial {
    pub fn zero(order: MonomialOrder) -> Polynomial {
        Polynomial {
            order,
            content: BigRational::one(),
            terms: Vec::new(),
        }
    }

    pub fn one(order: MonomialOrder) -> Polynomial {
        Polynomial::constant(order, BigRational::one())
    }

    pub fn constant(order: MonomialOrder, value: BigRational) -> Polynomial {
        if value.is_zero() {
            return Polynomial::zero(order);
        }
        Polynomial {
            order,
            content: value,
            terms: vec![(BigInt::one(), Monomial::one())],
        }
    }

    pub fn variable(order: MonomialOrder, v: Variable) -> Polynomial {
        Polynomial {
            order,
            content: BigRational::one(),
            terms: vec![(BigInt::one(), Monomial::var(v))],
        }
    }

    /// Builds a polynomial from rational terms; equal monomials are combined
    /// and the result is brought to canonical form.
    pub fn from_terms(
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (BigRational, Monomial)>,
    ) -> Polynomial {
        let mut map: HashMap<Monomial, BigRational> = HashMap::new();
        for (c, m) in terms {
            let slot = map.entry(m).or_insert_with(BigRational::zero);
            *slot += c;
        }
        let mut denom_lcm = BigInt::one();
        for c in map.values() {
            if !c.is_zero() {
                denom_lcm = denom_lcm.lcm(c.denom());
            }
        }
        let int_terms: Vec<(BigInt, Monomial)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c.numer() * (&denom_lcm / c.denom()), m))
            .collect();
        Polynomial::from_int_terms_scaled(
            order,
            int_terms,
            BigRational::new(BigInt::one(), denom_lcm),
        )
    }

    /// Canonicalizes integer terms (any order, possibly unnormalized but with
    /// distinct monomials) times an extra rational scale.
    pub(crate) fn from_int_terms_scaled(
        order: MonomialOrder,
        mut terms: Vec<(BigInt, Monomial)>,
        scale: BigRational,
    ) -> Polynomial {
        terms.retain(|(c, _)| !c.is_zero());
        if terms.is_empty() || scale.is_zero() {
            return Polynomial::zero(order);
        }
        terms.sort_unstable_by(|(_, ma), (_, mb)| order.cmp(mb, ma));
        debug_assert!(terms.windows(2).all(|w| w[0].1 != w[1].1));
        let mut gcd = BigInt::zero();
        for (c, _) in &terms {
            gcd = gcd.gcd(c);
            if gcd.is_one() {
                break;
            }
        }
        let negative = terms[0].0.is_negative();
        let divisor = if negative { -gcd } else { gcd };
        for (c, _) in &mut terms {
            *c = &*c / &divisor;
        }
        Polynomial {
            order,
            content: scale * BigRational::from_integer(divisor),
            terms,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.content.is_one()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The primitive integer terms (sorted strictly decreasing).
    pub(crate) fn int_terms(&self) -> &[(BigInt, Monomial)] {
        &self.terms
    }

    pub(crate) fn content(&self) -> &BigRational {
        &self.content
    }

    /// Effective rational coefficient/monomial pairs, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (BigRational, &Monomial)> + '_ {
        self.terms.iter().map(|(c, m)| (&self.content * c, m))
    }

    /// Leading coefficient and monomial under the ambient order.
    pub fn leading_term(&self) -> Result<(BigRational, &Monomial), PolyError> {
        self.terms
            .first()
            .map(|(c, m)| (&self.content * c, m))
            .ok_or(PolyError::ZeroLeadingTerm)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Largest total degree over the monomials (`None` for zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.total_degree()).max()
    }

    /// Largest coefficient numerator/denominator bit length.
    pub fn coefficient_bits(&self) -> u64 {
        let content_bits = self.content.numer().bits().max(self.content.denom().bits());
        self.terms
            .iter()
            .map(|(c, _)| c.bits())
            .max()
            .unwrap_or(0)
            .max(content_bits)
    }

    fn check_order(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.order != other.order {
            return Err(PolyError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    /// Scales the polynomial so its coefficients are integers with gcd 1 and
    /// the leading coefficient is positive; errors on zero.
    pub fn normalize(&self) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::NormalizeZero);
        }
        Ok(Polynomial {
            order: self.order,
            content: BigRational::one(),
            terms: self.terms.clone(),
        })
    }

    pub fn neg(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        Polynomial {
            order: self.order,
            content: -&self.content,
            terms: self.terms.clone(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        // content_a = a/b, content_b = c/d; with l = lcm(b, d) both sides
        // scale to integer multipliers over the common denominator l.
        let l = self.content.denom().lcm(other.content.denom());
        let ma = self.content.numer() * (&l / self.content.denom());
        let mb = other.content.numer() * (&l / other.content.denom());
        let mut merged: Vec<(BigInt, Monomial)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                merged.push((&ma * &self.terms[i].0, self.terms[i].1.clone()));
                i += 1;
            } else if i == self.terms.len() {
                merged.push((&mb * &other.terms[j].0, other.terms[j].1.clone()));
                j += 1;
            } else {
                match self.order.cmp(&self.terms[i].1, &other.terms[j].1) {
                    Ordering::Greater => {
                        merged.push((&ma * &self.terms[i].0, self.terms[i].1.clone()));
                        i += 1;
                    }
                    Ordering::Less => {
                        merged.push((&mb * &other.terms[j].0, other.terms[j].1.clone()));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = &ma * &self.terms[i].0 + &mb * &other.terms[j].0;
                        if !c.is_zero() {
                            merged.push((c, self.terms[i].1.clone()));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        Ok(Polynomial::from_int_terms_scaled(
            self.order,
            merged,
            BigRational::new(BigInt::one(), l),
        ))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.order));
        }
        let mut map: HashMap<Monomial, BigInt> = HashMap::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let slot = map.entry(m).or_insert_with(BigInt::zero);
                *slot += ca * cb;
            }
        }
        let terms: Vec<(BigInt, Monomial)> = map.into_iter().map(|(m, c)| (c, m)).collect();
        Ok(Polynomial::from_int_terms_scaled(
            self.order,
            terms,
            &self.content * &other.content,
        ))
    }

    /// Multiplies by a single rational-coefficient term.
    pub fn mul_term(&self, coeff: &BigRational, mono: &Monomial) -> Polynomial {
        if self.is_zero() || coeff.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            content: &self.content * coeff,
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.clone(), m.mul(mono)))
                .collect(),
        }
    }

    /// Evaluates at a full variable assignment.
    pub fn evaluate(
        &self,
        assignment: &HashMap<Variable, BigRational>,
    ) -> Result<BigRational, PolyError> {
        let mut acc = BigRational::zero();
        for (c, m) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, e) in &m.exps {
                let val = assignment
                    .get(v)
                    .ok_or(PolyError::MissingAssignment(*v))?;
                term *= BigRational::new(val.numer().pow(*e), val.denom().pow(*e));
            }
            acc += term;
        }
        Ok(acc * &self.content)
    }

    /// Deterministic total order on polynomials sharing this polynomial's
    /// monomial order: term-by-term comparison, monomials first.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        debug_assert_eq!(self.order, other.order);
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.terms.get(i), other.terms.get(j)) {
                (None, None) => return self.content.cmp(&other.content),
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ca, ma)), Some((cb, mb))) => {
                    let by_mono = self.order.cmp(ma, mb);
                    if by_mono != Ordering::Equal {
                        return by_mono;
                    }
                    let by_coeff = ca.cmp(cb);
                    if by_coeff != Ordering::Equal {
                        return by_coeff;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (c, m)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the rendered polynomial format, e.g. `3*x0*y2^2 - y0` or
/// `1/2*x1 - 1`.  Variables are `x<i>`, `y<e>`, and `yh<e>`.
pub fn parse_polynomial(text: &str, order: MonomialOrder) -> Result<Polynomial, PolyError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut terms: Vec<(BigRational, Monomial)> = Vec::new();

    fn skip_ws(bytes: &[u8], pos: &mut usize) {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    fn parse_uint(bytes: &[u8], pos: &mut usize) -> Option<BigInt> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        Some(
            std::str::from_utf8(&bytes[start..*pos])
                .expect("digits are ascii")
                .parse()
                .expect("digit string parses"),
        )
    }

    skip_ws(bytes, &mut pos);
    if pos == bytes.len() {
        return Err(PolyError::Parse {
            offset: pos,
            message: "empty polynomial".into(),
        });
    }
    while pos < bytes.len() {
        skip_ws(bytes, &mut pos);
        let mut sign = 1i64;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if terms.is_empty() && bytes[pos] == b'+' {
                return Err(PolyError::Parse {
                    offset: pos,
                    message: "unexpected leading '+'".into(),
                });
            }
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
            skip_ws(bytes, &mut pos);
        } else if !terms.is_empty() {
            return Err(PolyError::Parse {
                offset: pos,
                message: "expected '+' or '-' between terms".into(),
            });
        }
        let mut coeff = BigRational::from_integer(BigInt::from(sign));
        let mut mono = Monomial::one();
        let mut saw_factor = false;
        loop {
            skip_ws(bytes, &mut pos);
            if pos >= bytes.len() {
                break;
            }
            let b = bytes[pos];
            if b.is_ascii_digit() {
                let num = parse_uint(bytes, &mut pos).expect("digit seen");
                let mut den = BigInt::one();
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    den = parse_uint(bytes, &mut pos).ok_or(PolyError::Parse {
                        offset: pos,
                        message: "expected denominator digits".into(),
                    })?;
                    if den.is_zero() {
                        return Err(PolyError::Parse {
                            offset: pos,
                            message: "zero denominator".into(),
                        });
                    }
                }
                coeff *= BigRational::new(num, den);
                saw_factor = true;
            } else if b == b'x' || b == b'y' {
                let var_start = pos;
                pos += 1;
                let hat = b == b'y' && pos < bytes.len() && bytes[pos] == b'h';
                if hat {
                    pos += 1;
                }
                let idx = parse_uint(bytes, &mut pos).ok_or(PolyError::Parse {
                    offset: var_start,
                    message: "expected variable index".into(),
                })?;
                let idx: u32 = idx.try_into().map_err(|_| PolyError::Parse {
                    offset: var_start,
                    message: "variable index too large".into(),
                })?;
                let v = match (b, hat) {
                    (b'x', _) => Variable::Diag(idx),
                    (b'y', false) => Variable::Edge(idx),
                    (b'y', true) => Variable::EdgeInv(idx),
                    _ => unreachable!(),
                };
                let mut exp = 1u32;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let e = parse_uint(bytes, &mut pos).ok_or(PolyError::Parse {
                        offset: pos,
                        message: "expected exponent digits".into(),
                    })?;
                    exp = e.try_into().map_err(|_| PolyError::Parse {
                        offset: pos,
                        message: "exponent too large".into(),
                    })?;
                }
                mono = mono.mul(&Monomial::from_exponents(&[(v, exp)]));
                saw_factor = true;
            } else {
                return Err(PolyError::Parse {
                    offset: pos,
                    message: format!("unexpected character '{}'", b as char),
                });
            }
            skip_ws(bytes, &mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        if !saw_factor {
            return Err(PolyError::Parse {
                offset: pos,
                message: "expected a term".into(),
            });
        }
        terms.push((coeff, mono));
        skip_ws(bytes, &mut pos);
    }
    Ok(Polynomial::from_terms(order, terms))
}
