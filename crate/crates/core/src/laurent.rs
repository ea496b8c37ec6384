//! Exact arithmetic in the ring of integer Laurent polynomials in the
//! ordered variables `(G, s, t)`.
//!
//! Coefficients are arbitrary-precision integers and the representation
//! is sparse: a polynomial is a map from monomials to nonzero
//! coefficients, so exponents may be negative in `s` and `t` (and in
//! principle in `G`, though nothing in this crate produces a negative
//! `G`-power). Two polynomials are equal iff their term maps are equal.
//!
//! Besides the ring operations the module provides the pieces the
//! invariant computations lean on: substitution (`G := 1 - st`,
//! `s := 1/t`), extraction of the coefficient of `G^k`, exact division
//! by iterated leading-term elimination, and normalization modulo the
//! unit group `{± s^a t^b}` that realizes the "equality up to units"
//! relation on Sawollek polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The three formal variables, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    G,
    S,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::G => "G",
            Var::S => "s",
            Var::T => "t",
        })
    }
}

/// A power product `G^g * s^s * t^t` with integer (possibly negative)
/// exponents. The derived ordering is lexicographic on `(g, s, t)`,
/// which is the canonical monomial order everywhere in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub g: i64,
    pub s: i64,
    pub t: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { g: 0, s: 0, t: 0 };

    pub fn new(g: i64, s: i64, t: i64) -> Self {
        Monomial { g, s, t }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::G => Monomial::new(1, 0, 0),
            Var::S => Monomial::new(0, 1, 0),
            Var::T => Monomial::new(0, 0, 1),
        }
    }

    pub fn exponent(&self, v: Var) -> i64 {
        match v {
            Var::G => self.g,
            Var::S => self.s,
            Var::T => self.t,
        }
    }

    fn with_exponent(mut self, v: Var, e: i64) -> Self {
        match v {
            Var::G => self.g = e,
            Var::S => self.s = e,
            Var::T => self.t = e,
        }
        self
    }

    /// Product of monomials: exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.g + other.g, self.s + other.s, self.t + other.t)
    }

    /// Multiplicative inverse: exponents negate.
    pub fn inv(&self) -> Monomial {
        Monomial::new(-self.g, -self.s, -self.t)
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial::new(self.g * k, self.s * k, self.t * k)
    }

    /// Componentwise divisibility in the polynomial (non-Laurent) sense.
    fn divides(&self, other: &Monomial) -> bool {
        self.g <= other.g && self.s <= other.s && self.t <= other.t
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }
}

/// Errors from Laurent-polynomial operations.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// Exact division left a nonzero remainder.
    #[error("not exactly divisible")]
    NotDivisible,
    /// Substitution of a non-unit polynomial into a negative power.
    #[error("cannot substitute a non-unit for {0} raised to a negative power")]
    NegativePowerOfNonUnit(Var),
}

/// A parse failure, with the byte offset where it happened.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// A sparse Laurent polynomial in `(G, s, t)` with `BigInt`
/// coefficients. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(Monomial::ONE, c)
    }

    pub fn variable(v: Var) -> Self {
        LaurentPoly::term(Monomial::var(v), 1)
    }

    /// Single-term polynomial `c * m` (zero if `c` is zero).
    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The term with the largest monomial, if any.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The term with the smallest monomial, if any.
    pub fn trailing(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    /// If the polynomial is `± one monomial`, returns it with its sign.
    pub fn as_unit(&self) -> Option<(Monomial, bool)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if c.magnitude().is_one() {
            Some((*m, c.is_negative()))
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Smallest exponent of `v` over all terms (`None` for the zero
    /// polynomial).
    pub fn min_exponent(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    pub fn max_exponent(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// The polynomial coefficient of `v^k`, as a polynomial in the
    /// remaining variables.
    pub fn coeff_of_power(&self, v: Var, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == k)
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Replaces `v` by `q`, fully expanded.
    ///
    /// Negative powers of `v` require `q` to be a unit (a single term
    /// with coefficient `±1`); otherwise the substitution has no
    /// Laurent-polynomial meaning and `NegativePowerOfNonUnit` is
    /// returned.
    pub fn substitute(&self, v: Var, q: &LaurentPoly) -> Result<Self, PolyError> {
        // Group by the exponent of `v`, with `v` stripped out.
        let mut groups: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.exponent(v);
            groups
                .entry(k)
                .or_insert_with(LaurentPoly::zero)
                .add_term(m.with_exponent(v, 0), c.clone());
        }
        let unit = q.as_unit();
        if groups.keys().any(|&k| k < 0) && unit.is_none() {
            return Err(PolyError::NegativePowerOfNonUnit(v));
        }
        let mut result = LaurentPoly::zero();
        for (k, part) in groups {
            let factor = match unit {
                Some((m, negative)) => {
                    let sign = if negative && k.rem_euclid(2) == 1 { -1 } else { 1 };
                    LaurentPoly::term(m.pow(k), sign)
                }
                None => q.pow(k as u64),
            };
            result += &(&part * &factor);
        }
        Ok(result)
    }

    /// Factors out the componentwise-minimal monomial, returning
    /// `(p / m, m)` where `p / m` has minimum exponent 0 in every
    /// variable. The zero polynomial returns `(0, 1)`.
    fn factor_min_monomial(&self) -> (LaurentPoly, Monomial) {
        if self.is_zero() {
            return (LaurentPoly::zero(), Monomial::ONE);
        }
        let m = Monomial::new(
            self.min_exponent(Var::G).unwrap(),
            self.min_exponent(Var::S).unwrap(),
            self.min_exponent(Var::T).unwrap(),
        );
        (self.mul_monomial(&m.inv()), m)
    }

    /// Exact division: returns `r` with `q * r = self`, or
    /// `NotDivisible`.
    ///
    /// Both operands are first shifted to ordinary polynomials by
    /// factoring out their minimal monomials; the quotient of the
    /// shifted parts is computed by leading-term elimination under the
    /// lexicographic order and the monomial shift is reapplied at the
    /// end. Exactness of every intermediate step is forced: if the true
    /// quotient exists each leading term divides, and if any step fails
    /// the division was impossible.
    pub fn div_exact(&self, q: &LaurentPoly) -> Result<Self, PolyError> {
        if q.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (p_shift, p_mono) = self.factor_min_monomial();
        let (q_shift, q_mono) = q.factor_min_monomial();
        let (q_lead_m, q_lead_c) = {
            let (m, c) = q_shift.leading().unwrap();
            (*m, c.clone())
        };
        let mut rem = p_shift;
        let mut quot = LaurentPoly::zero();
        while let Some((r_m, r_c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !q_lead_m.divides(&r_m) {
                return Err(PolyError::NotDivisible);
            }
            let (qc, rr) = num_integer_div_rem(&r_c, &q_lead_c);
            if !rr.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let term_m = r_m.mul(&q_lead_m.inv());
            rem -= &q_shift.mul_term(&term_m, &qc);
            quot.add_term(term_m, qc);
        }
        Ok(quot.mul_monomial(&p_mono.mul(&q_mono.inv())))
    }

    /// Canonical representative of the `≐` class: multiplies by the
    /// unique `± s^a t^b` that brings the minimum `s`- and
    /// `t`-exponents to 0 and makes the coefficient of the smallest
    /// monomial positive. `G`-exponents are untouched (`G` is not a
    /// unit). The zero polynomial maps to itself.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let shift = Monomial::new(
            0,
            -self.min_exponent(Var::S).unwrap(),
            -self.min_exponent(Var::T).unwrap(),
        );
        let shifted = self.mul_monomial(&shift);
        if shifted.trailing().unwrap().1.is_negative() {
            -&shifted
        } else {
            shifted
        }
    }

    /// Equality up to multiplication by `± s^a t^b`.
    pub fn eq_up_to_unit(&self, other: &LaurentPoly) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

// num-integer is not a dependency; BigInt div_rem via the std ops.
fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

impl std::ops::Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}
forward_binop!(Add, add);

impl std::ops::AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl std::ops::Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}
forward_binop!(Sub, sub);

impl std::ops::SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl std::ops::Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}
forward_binop!(Mul, mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in ascending monomial order, in the grammar accepted by
    /// the parser: `t^-1 - 2 + t`, `-1 + s^2*t^2 + G*t + G*s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.magnitude();
            let mut factors: Vec<String> = Vec::new();
            for v in [Var::G, Var::S, Var::T] {
                let e = m.exponent(v);
                if e == 1 {
                    factors.push(v.to_string());
                } else if e != 0 {
                    factors.push(format!("{v}^{e}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(src: &str) -> Result<Self, ParseError> {
        Parser::new(src).parse()
    }
}

/// Parses the polynomial text grammar.
pub fn parse_poly(src: &str) -> Result<LaurentPoly, ParseError> {
    src.parse()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<LaurentPoly, ParseError> {
        let mut poly = LaurentPoly::zero();
        self.skip_ws();
        if self.pos == self.src.len() {
            return Err(self.error("empty input"));
        }
        let mut first = true;
        while self.pos < self.src.len() {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => {
                    return Err(self.error(format!("expected '+' or '-', found {:?}", c as char)))
                }
                None => unreachable!(),
            };
            first = false;
            self.skip_ws();
            let (m, c) = self.parse_term()?;
            poly.add_term(m, if negative { -c } else { c });
            self.skip_ws();
        }
        Ok(poly)
    }

    fn parse_term(&mut self) -> Result<(Monomial, BigInt), ParseError> {
        let mut coeff: Option<BigInt> = None;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = Some(self.parse_integer()?);
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
        }
        let mut m = Monomial::ONE;
        let mut saw_var = false;
        loop {
            let v = match self.peek() {
                Some(b'G') => Var::G,
                Some(b's') => Var::S,
                Some(b't') => Var::T,
                _ => break,
            };
            self.pos += 1;
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let neg = if self.peek() == Some(b'-') {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let n = self.parse_integer()?;
                let n = i64::try_from(n).map_err(|_| self.error("exponent out of range"))?;
                if neg {
                    -n
                } else {
                    n
                }
            } else {
                1
            };
            if m.exponent(v) != 0 {
                return Err(self.error(format!("variable {v} repeated in term")));
            }
            m = m.with_exponent(v, e);
            saw_var = true;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
        }
        match (coeff, saw_var) {
            (None, false) => Err(self.error("expected a term")),
            (c, _) => Ok((m, c.unwrap_or_else(BigInt::one))),
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits
            .parse::<BigInt>()
            .map_err(|e| self.error(format!("bad integer: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> LaurentPoly {
        src.parse().unwrap_or_else(|e| panic!("parse {src:?}: {e}"))
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("t") + p("-t"), LaurentPoly::zero());
        assert_eq!(p("s*t - 1") + p("1"), p("s*t"));
        assert_eq!(p("s + t") + p("s^2*t^2 - 1"), p("s^2*t^2 + s + t - 1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("t^-1") * p("t"), LaurentPoly::one());
        assert_eq!(
            p("1 - s*t") * p("-1 - s*t + s + t"),
            p("-1 + s + t + s^2*t^2 - s^2*t - s*t^2")
        );
        assert_eq!(p("1 - s*t") * p("-1 - s*t"), p("s^2*t^2 - 1"));
    }

    #[test]
    fn sub_neg_examples() {
        assert_eq!(-LaurentPoly::zero(), LaurentPoly::zero());
        assert_eq!(p("t") - p("t"), LaurentPoly::zero());
        assert_eq!(
            p("s^2*t^2 - 1 + G*s + G*t") - p("G*s + G*t"),
            p("s^2*t^2 - 1")
        );
    }

    #[test]
    fn substitute_g() {
        let asaw = p("s^2*t^2 - 1 + G*s + G*t");
        let g = p("1 - s*t");
        assert_eq!(
            asaw.substitute(Var::G, &g).unwrap(),
            p("-1 + s + t - s^2*t - s*t^2 + s^2*t^2")
        );
    }

    #[test]
    fn substitute_unit() {
        let t_inv = p("t^-1");
        assert_eq!(
            p("-1 - s*t + s + t").substitute(Var::S, &t_inv).unwrap(),
            p("-2 + t + t^-1")
        );
        // absent variable is a no-op
        assert_eq!(
            p("t").substitute(Var::G, &LaurentPoly::zero()).unwrap(),
            p("t")
        );
    }

    #[test]
    fn substitute_negative_power_of_non_unit() {
        assert_eq!(
            p("t^-1").substitute(Var::T, &p("1 + s")),
            Err(PolyError::NegativePowerOfNonUnit(Var::T))
        );
        // a single term that is not ±monomial is still not a unit
        assert_eq!(
            p("t^-1").substitute(Var::T, &p("2*t")),
            Err(PolyError::NegativePowerOfNonUnit(Var::T))
        );
        // negative unit substituted into odd negative powers flips sign
        assert_eq!(
            p("t^-1").substitute(Var::T, &p("-s")).unwrap(),
            p("-s^-1")
        );
    }

    #[test]
    fn coeff_of_power_examples() {
        let asaw = p("s^2*t^2 - 1 + G*s + G*t");
        assert_eq!(asaw.coeff_of_power(Var::G, 1), p("s + t"));
        assert_eq!(asaw.coeff_of_power(Var::G, 0), p("s^2*t^2 - 1"));
        assert_eq!(asaw.coeff_of_power(Var::G, 2), LaurentPoly::zero());
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(
            p("-1 + s + t - s^2*t - s*t^2 + s^2*t^2")
                .div_exact(&p("1 - s*t"))
                .unwrap(),
            p("-1 - s*t + s + t")
        );
        assert_eq!(
            p("s^2*t^2 - 1").div_exact(&p("1 - s*t")).unwrap(),
            p("-1 - s*t")
        );
        assert_eq!(p("t").div_exact(&p("s")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn div_exact_laurent_shift() {
        // negative-writhe case: (st)^-1 - 1 = (st)^-1 (1 - st)
        assert_eq!(
            p("s^-1*t^-1 - 1").div_exact(&p("1 - s*t")).unwrap(),
            p("s^-1*t^-1")
        );
        // division by zero is never exact
        assert_eq!(
            p("t").div_exact(&LaurentPoly::zero()),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn normalize_unit_examples() {
        assert_eq!(p("-t^-1 + 2 - t").normalize_unit(), p("1 - 2*t + t^2"));
        assert_eq!(LaurentPoly::zero().normalize_unit(), LaurentPoly::zero());
        assert_eq!(p("s^3*t").normalize_unit(), LaurentPoly::one());
    }

    #[test]
    fn eq_up_to_unit_examples() {
        let a = p("-2 + t + t^-1");
        assert!(a.eq_up_to_unit(&(&a * &p("t^2"))));
        assert!(a.eq_up_to_unit(&-&a));
        assert!(!p("t + t^-1 - 2").eq_up_to_unit(&p("t^2 + t^-2 - 2")));
    }

    #[test]
    fn display_and_parse_round_trip() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("0"), LaurentPoly::zero());
        let affine_trefoil = p("t + t^-1 - 2");
        assert_eq!(affine_trefoil.to_string(), "t^-1 - 2 + t");
        let asaw = p("G*s + G*t + s^2*t^2 - 1");
        assert_eq!(asaw.to_string().parse::<LaurentPoly>().unwrap(), asaw);
    }

    #[test]
    fn display_coefficients() {
        assert_eq!(p("1 - 2*t + t^2").to_string(), "1 - 2*t + t^2");
        assert_eq!(p("-5").to_string(), "-5");
        assert_eq!(p("-G^2*s^-1").to_string(), "-G^2*s^-1");
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "t +".parse::<LaurentPoly>().unwrap_err();
        assert_eq!(err.position, 3);
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("t t".parse::<LaurentPoly>().is_err());
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
        assert!("t*t".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn pow_and_units() {
        assert_eq!(p("1 - s*t").pow(2), p("1 - 2*s*t + s^2*t^2"));
        assert_eq!(p("-s*t").as_unit(), Some((Monomial::new(0, 1, 1), true)));
        assert_eq!(p("2*s").as_unit(), None);
        assert_eq!(p("s + t").as_unit(), None);
    }
}
