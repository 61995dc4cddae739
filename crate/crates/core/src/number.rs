//! Canonical gross-numbers: finite sums `Σ cᵢ·①^pᵢ` with exact rational
//! coefficients and exponents.
//!
//! A [`GrossNumber`] always keeps its terms sorted by strictly decreasing
//! exponent with no zero coefficients, so structural equality is numeric
//! equality. Zero is the empty term list.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ArithError;

/// Exact arbitrary-precision rational. Always reduced, denominator positive.
pub type Rational = BigRational;

/// Builds a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// One grosspower `coeff·①^expo`; `coeff` is never zero inside a
/// [`GrossNumber`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrossTerm {
    pub coeff: Rational,
    pub expo: Rational,
}

impl GrossTerm {
    pub fn new(coeff: Rational, expo: Rational) -> Self {
        GrossTerm { coeff, expo }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GrossNumber {
    terms: Vec<GrossTerm>,
}

/// Right operand of [`GrossNumber::pow`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exponent {
    Int(i64),
    /// The grossone symbol itself; only `0^①` and `1^①` are defined.
    Grossone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trilean {
    True,
    False,
    Unknown,
}

impl Trilean {
    pub fn is_true(self) -> bool {
        self == Trilean::True
    }
}

impl fmt::Display for Trilean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Trilean::True => "true",
            Trilean::False => "false",
            Trilean::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// Split of a number by exponent sign. Unique for canonical input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Terms with exponent > 0.
    pub infinite_part: GrossNumber,
    /// Coefficient of `①^0`.
    pub finite_part: Rational,
    /// Terms with exponent < 0.
    pub infinitesimal_part: GrossNumber,
}

impl Decomposition {
    pub fn recompose(&self) -> GrossNumber {
        &(&self.infinite_part + &GrossNumber::from_rational(self.finite_part.clone()))
            + &self.infinitesimal_part
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeClass {
    pub is_zero: bool,
    /// No infinite part.
    pub is_finite: bool,
    pub is_purely_infinite: bool,
    pub has_infinitesimal: bool,
    pub is_simple: bool,
    pub is_compound: bool,
}

/// Merges like exponents, drops zero coefficients and sorts by decreasing
/// exponent.
pub fn normalize<I>(terms: I) -> GrossNumber
where
    I: IntoIterator<Item = (Rational, Rational)>,
{
    let mut by_expo: BTreeMap<Rational, Rational> = BTreeMap::new();
    for (coeff, expo) in terms {
        *by_expo.entry(expo).or_insert_with(Rational::zero) += coeff;
    }
    let terms = by_expo
        .into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(expo, coeff)| GrossTerm { coeff, expo })
        .collect();
    GrossNumber { terms }
}

impl GrossNumber {
    pub fn zero() -> Self {
        GrossNumber { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The grossone unit `①`.
    pub fn grossone() -> Self {
        Self::term(Rational::one(), Rational::one())
    }

    /// `coeff·①^expo`, or zero when `coeff == 0`.
    pub fn term(coeff: Rational, expo: Rational) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        GrossNumber {
            terms: vec![GrossTerm { coeff, expo }],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::term(r, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn terms(&self) -> &[GrossTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest-exponent term, `None` for zero.
    pub fn leading(&self) -> Option<&GrossTerm> {
        self.terms.first()
    }

    /// Lowest-exponent term, `None` for zero.
    pub fn trailing(&self) -> Option<&GrossTerm> {
        self.terms.last()
    }

    /// `-1`, `0` or `1` according to the leading coefficient.
    pub fn signum(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(t) if t.coeff.is_positive() => 1,
            Some(_) => -1,
        }
    }

    /// Returns the value as a rational when it has no grosspower terms.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.expo.is_zero() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Checks the canonical-form invariants. Always true for values built
    /// through this module's API.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self.terms.windows(2).all(|w| w[0].expo > w[1].expo)
    }

    fn scale_term(&self, coeff: &Rational, expo: &Rational) -> GrossNumber {
        if coeff.is_zero() {
            return GrossNumber::zero();
        }
        // Multiplying every term by the same nonzero grosspower keeps order.
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| GrossTerm {
                    coeff: &t.coeff * coeff,
                    expo: &t.expo + expo,
                })
                .collect(),
        }
    }

    /// Exact quotient. Single-term divisors divide term-wise; otherwise long
    /// division by leading terms, failing with `NotRepresentable` when the
    /// quotient would need infinitely many terms.
    pub fn div(&self, divisor: &GrossNumber) -> Result<GrossNumber, ArithError> {
        let (lead, low) = match (divisor.leading(), divisor.trailing()) {
            (Some(l), Some(t)) => (l, t),
            _ => return Err(ArithError::DivisionByZero),
        };
        if divisor.terms.len() == 1 {
            let inv = lead.coeff.recip();
            return Ok(self.scale_term(&inv, &-&lead.expo));
        }
        let Some(self_low) = self.trailing() else {
            return Ok(GrossNumber::zero());
        };
        // The lowest term of an exact product is the product of the lowest
        // terms, so no quotient term can sit below this exponent.
        let floor = &self_low.expo - &low.expo;
        let mut quotient = Vec::new();
        let mut rem = self.clone();
        while let Some(r) = rem.leading() {
            let expo = &r.expo - &lead.expo;
            if expo < floor {
                return Err(ArithError::NotRepresentable);
            }
            let coeff = &r.coeff / &lead.coeff;
            rem = &rem - &divisor.scale_term(&coeff, &expo);
            quotient.push(GrossTerm { coeff, expo });
        }
        // Quotient exponents are produced in strictly decreasing order.
        Ok(GrossNumber { terms: quotient })
    }

    pub fn pow(&self, e: &Exponent) -> Result<GrossNumber, ArithError> {
        match e {
            Exponent::Grossone => {
                if self.is_zero() {
                    Ok(GrossNumber::zero())
                } else if *self == GrossNumber::one() {
                    Ok(GrossNumber::one())
                } else {
                    Err(ArithError::NotRepresentable)
                }
            }
            Exponent::Int(0) => Ok(GrossNumber::one()),
            Exponent::Int(n) if *n > 0 => Ok(self.pow_u64(*n as u64)),
            Exponent::Int(n) => {
                if self.is_zero() {
                    return Err(ArithError::ZeroToNegativePower);
                }
                match self.terms.as_slice() {
                    [t] => {
                        let k = n.unsigned_abs();
                        let coeff = pow_rational(&t.coeff, k).recip();
                        let expo = &t.expo * rat(*n);
                        Ok(GrossNumber::term(coeff, expo))
                    }
                    _ => Err(ArithError::NotRepresentable),
                }
            }
        }
    }

    fn pow_u64(&self, mut n: u64) -> GrossNumber {
        let mut base = self.clone();
        let mut acc = GrossNumber::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn decompose(&self) -> Decomposition {
        let mut infinite = Vec::new();
        let mut finite = Rational::zero();
        let mut infinitesimal = Vec::new();
        for t in &self.terms {
            match t.expo.cmp(&Rational::zero()) {
                Ordering::Greater => infinite.push(t.clone()),
                Ordering::Equal => finite = t.coeff.clone(),
                Ordering::Less => infinitesimal.push(t.clone()),
            }
        }
        Decomposition {
            infinite_part: GrossNumber { terms: infinite },
            finite_part: finite,
            infinitesimal_part: GrossNumber {
                terms: infinitesimal,
            },
        }
    }

    pub fn classify_shape(&self) -> ShapeClass {
        let d = self.decompose();
        let infinite_terms = d.infinite_part.terms.len();
        let is_compound = infinite_terms >= 2;
        ShapeClass {
            is_zero: self.is_zero(),
            is_finite: infinite_terms == 0,
            is_purely_infinite: infinite_terms > 0
                && d.finite_part.is_zero()
                && d.infinitesimal_part.is_zero(),
            has_infinitesimal: !d.infinitesimal_part.is_zero(),
            is_simple: !is_compound,
            is_compound,
        }
    }

    /// Integrality under the infinite-unit axiom: `q·①^k` is an integer for
    /// every rational `q` when `k` is a positive integer.
    pub fn is_integer(&self) -> Trilean {
        let mut unknown = false;
        for t in &self.terms {
            match t.expo.cmp(&Rational::zero()) {
                Ordering::Less => return Trilean::False,
                Ordering::Equal => {
                    if !t.coeff.is_integer() {
                        return Trilean::False;
                    }
                }
                Ordering::Greater => {
                    if !t.expo.is_integer() {
                        unknown = true;
                    }
                }
            }
        }
        if unknown {
            Trilean::Unknown
        } else {
            Trilean::True
        }
    }

    /// Whether `d` divides `self` among gross-integers.
    pub fn divisible_by(&self, d: &GrossNumber) -> Result<Trilean, ArithError> {
        divides(d, self)
    }

    /// Substitutes `① := t` and evaluates exactly.
    pub fn eval_at(&self, t: &Rational) -> Result<Rational, ArithError> {
        if !t.is_positive() {
            return Err(ArithError::NonPositivePoint);
        }
        let mut sum = Rational::zero();
        for term in &self.terms {
            if !term.expo.is_integer() {
                return Err(ArithError::NonIntegerExponent);
            }
            let e = term.expo.to_integer();
            let k = e.abs().to_u64().ok_or(ArithError::NonIntegerExponent)?;
            let mut p = pow_rational(t, k);
            if e.is_negative() {
                p = p.recip();
            }
            sum += &term.coeff * p;
        }
        Ok(sum)
    }
}

/// `d | x` among gross-integers.
pub fn divides(d: &GrossNumber, x: &GrossNumber) -> Result<Trilean, ArithError> {
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    match x.div(d) {
        Ok(q) => Ok(q.is_integer()),
        Err(ArithError::NotRepresentable) => {
            if d.is_integer().is_true() && x.is_integer().is_true() {
                Ok(Trilean::False)
            } else {
                Ok(Trilean::Unknown)
            }
        }
        Err(e) => Err(e),
    }
}

pub(crate) fn pow_rational(base: &Rational, k: u64) -> Rational {
    let k = k as usize;
    Rational::new_raw(
        num_traits::pow(base.numer().clone(), k),
        num_traits::pow(base.denom().clone(), k),
    )
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| GrossTerm {
                    coeff: -&t.coeff,
                    expo: t.expo.clone(),
                })
                .collect(),
        }
    }
}

impl Neg for GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        -&self
    }
}

impl Add for &GrossNumber {
    type Output = GrossNumber;
    fn add(self, rhs: &GrossNumber) -> GrossNumber {
        // Merge of two exponent-sorted lists.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (&self.terms[i], &rhs.terms[j]);
            match a.expo.cmp(&b.expo) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(GrossTerm {
                            coeff: c,
                            expo: a.expo.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        GrossNumber { terms: out }
    }
}

impl Sub for &GrossNumber {
    type Output = GrossNumber;
    fn sub(self, rhs: &GrossNumber) -> GrossNumber {
        self + &(-rhs)
    }
}

impl Mul for &GrossNumber {
    type Output = GrossNumber;
    fn mul(self, rhs: &GrossNumber) -> GrossNumber {
        normalize(self.terms.iter().flat_map(|a| {
            rhs.terms
                .iter()
                .map(move |b| (&a.coeff * &b.coeff, &a.expo + &b.expo))
        }))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GrossNumber {
            type Output = GrossNumber;
            fn $m(self, rhs: GrossNumber) -> GrossNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $m(self, rhs: &GrossNumber) -> GrossNumber {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Ord for GrossNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        // The first exponent where the two differ decides the sign of a - b.
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return x.coeff.cmp(&Rational::zero()),
                (None, Some(y)) => return Rational::zero().cmp(&y.coeff),
                (Some(x), Some(y)) => match x.expo.cmp(&y.expo) {
                    Ordering::Greater => return x.coeff.cmp(&Rational::zero()),
                    Ordering::Less => return Rational::zero().cmp(&y.coeff),
                    Ordering::Equal => match x.coeff.cmp(&y.coeff) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for GrossNumber {
    fn from(n: i64) -> Self {
        GrossNumber::from_int(n)
    }
}

impl From<Rational> for GrossNumber {
    fn from(r: Rational) -> Self {
        GrossNumber::from_rational(r)
    }
}

impl fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format(self, crate::parser::Style::Unicode))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> GrossNumber {
        GrossNumber::grossone()
    }

    fn gp(c: Rational, e: Rational) -> GrossNumber {
        GrossNumber::term(c, e)
    }

    #[test]
    fn normalize_merges_and_sorts() {
        let x = normalize(vec![(rat(1), rat(1)), (rat(2), rat(1)), (rat(0), rat(5))]);
        assert_eq!(x, gp(rat(3), rat(1)));
        assert_eq!(normalize(Vec::new()), GrossNumber::zero());
        let y = normalize(vec![(rat(1), rat(0)), (rat(1), rat(2))]);
        assert_eq!(y.terms()[0].expo, rat(2));
        assert_eq!(y.terms()[1].expo, rat(0));
        assert!(y.is_canonical());
    }

    #[test]
    fn normalize_is_idempotent() {
        let x = normalize(vec![
            (rat(3), ratio(1, 2)),
            (rat(-1), rat(0)),
            (rat(2), rat(2)),
        ]);
        let again = normalize(x.terms().iter().map(|t| (t.coeff.clone(), t.expo.clone())));
        assert_eq!(x, again);
    }

    #[test]
    fn add_cancels() {
        assert!((&g() - &g()).is_zero());
        let x = &(&g() * &GrossNumber::from_int(2)) + &GrossNumber::one();
        assert_eq!(&x + &GrossNumber::from_int(-1), gp(rat(2), rat(1)));
    }

    #[test]
    fn div_by_zero_and_unrepresentable() {
        assert_eq!(
            g().div(&GrossNumber::zero()),
            Err(ArithError::DivisionByZero)
        );
        let d = &g() + &GrossNumber::one();
        assert_eq!(
            GrossNumber::one().div(&d),
            Err(ArithError::NotRepresentable)
        );
    }

    #[test]
    fn long_division_is_exact() {
        let a = &(&g() * &g()) - &GrossNumber::one();
        let b = &g() - &GrossNumber::one();
        assert_eq!(a.div(&b).unwrap(), &g() + &GrossNumber::one());
        // rational exponents
        let h = gp(rat(1), ratio(1, 2));
        let x = &h + &GrossNumber::from_int(3);
        let y = &h - &GrossNumber::from_int(2);
        let p = &x * &y;
        assert_eq!(p.div(&y).unwrap(), x);
    }

    #[test]
    fn pow_cases() {
        let x = &g() + &GrossNumber::one();
        let sq = x.pow(&Exponent::Int(2)).unwrap();
        assert_eq!(
            sq,
            normalize(vec![(rat(1), rat(2)), (rat(2), rat(1)), (rat(1), rat(0))])
        );
        assert_eq!(x.pow(&Exponent::Int(-1)), Err(ArithError::NotRepresentable));
        assert_eq!(
            GrossNumber::zero().pow(&Exponent::Int(-2)),
            Err(ArithError::ZeroToNegativePower)
        );
        assert_eq!(
            gp(rat(2), rat(1)).pow(&Exponent::Int(-2)).unwrap(),
            gp(ratio(1, 4), rat(-2))
        );
        assert_eq!(
            GrossNumber::zero().pow(&Exponent::Grossone).unwrap(),
            GrossNumber::zero()
        );
        assert_eq!(
            GrossNumber::one().pow(&Exponent::Grossone).unwrap(),
            GrossNumber::one()
        );
        assert_eq!(
            GrossNumber::from_int(2).pow(&Exponent::Grossone),
            Err(ArithError::NotRepresentable)
        );
        assert_eq!(
            GrossNumber::zero().pow(&Exponent::Int(0)).unwrap(),
            GrossNumber::one()
        );
    }

    #[test]
    fn ordering_basics() {
        let half = gp(ratio(1, 2), rat(1));
        let gm1 = &g() - &GrossNumber::one();
        assert!(half < gm1);
        assert!(gp(rat(1), ratio(31, 10)) > gp(rat(1), ratio(-31, 10)));
        assert!(gp(rat(1), rat(-1)) > GrossNumber::zero());
        assert!(-g() < GrossNumber::from_int(-1_000_000_000));
        assert_eq!(half.cmp(&half), Ordering::Equal);
    }

    #[test]
    fn decompose_splits_by_sign() {
        let k = &gp(ratio(17, 10), rat(1)) - &GrossNumber::from_rational(ratio(3, 2));
        let d = k.decompose();
        assert_eq!(d.infinite_part, gp(ratio(17, 10), rat(1)));
        assert_eq!(d.finite_part, ratio(-3, 2));
        assert!(d.infinitesimal_part.is_zero());
        assert_eq!(d.recompose(), k);

        let x = &g() + &gp(rat(1), rat(-1));
        let d = x.decompose();
        assert_eq!(d.infinite_part, g());
        assert!(d.finite_part.is_zero());
        assert_eq!(d.infinitesimal_part, gp(rat(1), rat(-1)));

        let d = GrossNumber::from_int(5).decompose();
        assert!(d.infinite_part.is_zero());
        assert_eq!(d.finite_part, rat(5));
    }

    #[test]
    fn shapes() {
        let a = &g() - &gp(rat(3), ratio(1, 2));
        let s = a.classify_shape();
        assert!(s.is_purely_infinite && s.is_compound && !s.is_simple);

        let b = normalize(vec![
            (rat(1), rat(2)),
            (rat(1), rat(1)),
            (ratio(7, 2), rat(0)),
        ]);
        let s = b.classify_shape();
        assert!(s.is_compound && !s.is_purely_infinite);

        let s = gp(ratio(1, 2), rat(1)).classify_shape();
        assert!(s.is_simple && s.is_purely_infinite && !s.is_finite);

        let s = (&gp(rat(1), rat(2)) + &GrossNumber::one()).classify_shape();
        assert!(s.is_simple && !s.is_purely_infinite);

        let s = GrossNumber::zero().classify_shape();
        assert!(s.is_zero && s.is_finite && !s.is_purely_infinite);
    }

    #[test]
    fn integrality() {
        assert_eq!(gp(ratio(1, 2), rat(1)).is_integer(), Trilean::True);
        let x = &gp(ratio(1, 2), rat(1)) + &GrossNumber::from_rational(ratio(1, 2));
        assert_eq!(x.is_integer(), Trilean::False);
        assert_eq!(gp(rat(1), ratio(1, 2)).is_integer(), Trilean::Unknown);
        assert_eq!((&g() + &gp(rat(1), rat(-1))).is_integer(), Trilean::False);
        assert_eq!(GrossNumber::zero().is_integer(), Trilean::True);
        // a False term wins over an Unknown one
        let y = &gp(rat(1), ratio(1, 2)) + &GrossNumber::from_rational(ratio(1, 3));
        assert_eq!(y.is_integer(), Trilean::False);
    }

    #[test]
    fn divisibility() {
        assert_eq!(divides(&5.into(), &g()), Ok(Trilean::True));
        let a = &(&g() * &g()) - &GrossNumber::one();
        assert_eq!(
            divides(&(&g() - &GrossNumber::one()), &a),
            Ok(Trilean::True)
        );
        assert_eq!(
            divides(&2.into(), &(&g() + &GrossNumber::one())),
            Ok(Trilean::False)
        );
        assert_eq!(
            divides(&GrossNumber::zero(), &g()),
            Err(ArithError::DivisionByZero)
        );
        // unrepresentable quotient between gross-integers
        assert_eq!(
            divides(&(&g() + &GrossNumber::one()), &g()),
            Ok(Trilean::False)
        );
        let h = gp(rat(1), ratio(1, 2));
        assert_eq!(
            divides(&(&h + &GrossNumber::one()), &g()),
            Ok(Trilean::Unknown)
        );
    }

    #[test]
    fn substitution() {
        let a = &(&g() * &g()) - &GrossNumber::one();
        assert_eq!(a.eval_at(&rat(10)), Ok(rat(99)));
        let b = &gp(rat(2), rat(1)) + &GrossNumber::one();
        assert_eq!(b.eval_at(&rat(5)), Ok(rat(11)));
        assert_eq!(
            gp(rat(1), ratio(31, 10)).eval_at(&rat(2)),
            Err(ArithError::NonIntegerExponent)
        );
        assert_eq!(g().eval_at(&rat(0)), Err(ArithError::NonPositivePoint));
        assert_eq!(gp(rat(3), rat(-2)).eval_at(&rat(2)), Ok(ratio(3, 4)));
    }
}
