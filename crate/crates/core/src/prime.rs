//! Certificate-producing classification of infinite gross-integers.
//!
//! Everything here rests on λ-forms `q·①^k` (`q > 0` rational, `k >= 1`
//! integer). Such a number is divisible by every finite positive integer:
//! `n·d | ①` for finite `n`, `d`, so `n | ①/d`, and the same holds for any
//! positive integer power of `①`.
//!
//! Verdicts carry either a machine-checkable witness (composite factors,
//! square roots) or an ordered trace naming the result each step relies on.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::TheoryError;
use crate::number::{rat, GrossNumber, Rational, Trilean};
use crate::oracle;

/// Trial division limit when looking for odd prime valuations.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Proof obligations a verdict may cite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Citation {
    InfiniteUnitAxiom,
    Lemma1,
    Theorem1,
    Lemma2,
    Lemma3,
    Theorem2,
    FiniteOracle,
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Citation::InfiniteUnitAxiom => "Infinite Unit Axiom",
            Citation::Lemma1 => "Lemma 1",
            Citation::Theorem1 => "Theorem 1",
            Citation::Lemma2 => "Lemma 2",
            Citation::Lemma3 => "Lemma 3",
            Citation::Theorem2 => "Theorem 2",
            Citation::FiniteOracle => "finite oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub cite: Citation,
    pub detail: String,
}

impl TraceStep {
    fn new(cite: Citation, detail: impl Into<String>) -> Self {
        TraceStep {
            cite,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.cite, self.detail)
    }
}

/// Evidence that a value is a λ-form `q·①^k`. Only [`lambda_certify`]
/// constructs one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaCert {
    q: Rational,
    k: u32,
    value: GrossNumber,
}

impl LambdaCert {
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn value(&self) -> &GrossNumber {
        &self.value
    }
}

/// Recognizes `q·①^k` with `q > 0` and `k` a positive integer.
pub fn lambda_certify(x: &GrossNumber) -> Option<LambdaCert> {
    let [t] = x.terms() else {
        return None;
    };
    if !t.coeff.is_positive() || !t.expo.is_integer() || !t.expo.is_positive() {
        return None;
    }
    let k = t.expo.to_integer().to_u32()?;
    Some(LambdaCert {
        q: t.coeff.clone(),
        k,
        value: x.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquarenessVerdict {
    Square {
        root: GrossNumber,
    },
    /// `witness_prime` is the only prime with odd valuation in `q`.
    NotSquare {
        witness_prime: BigUint,
    },
    Unknown {
        reason: String,
    },
}

fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Primes with odd valuation in `n`, or `None` if trial division up to
/// [`TRIAL_LIMIT`] leaves a non-square cofactor it cannot resolve.
fn odd_valuation_primes(n: &BigUint) -> Option<Vec<BigUint>> {
    let mut rest = n.clone();
    let mut odd = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut v = 0u32;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            v += 1;
        }
        if v % 2 == 1 {
            odd.push(dd);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Some(odd);
    }
    let dd = BigUint::from(d);
    if &dd * &dd > rest {
        // Every factor below sqrt(rest) was removed, so rest is prime.
        odd.push(rest);
        return Some(odd);
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        Some(odd)
    } else {
        None
    }
}

/// Decides whether a λ-form is the square of a gross-integer, where the
/// available rules allow.
pub fn squareness(cert: &LambdaCert) -> SquarenessVerdict {
    if cert.k % 2 == 1 {
        return SquarenessVerdict::Unknown {
            reason: format!("grossone degree {} is odd", cert.k),
        };
    }
    let half = rat(i64::from(cert.k / 2));
    if let (Some(n), Some(d)) = (
        integer_sqrt_exact(cert.q.numer()),
        integer_sqrt_exact(cert.q.denom()),
    ) {
        return SquarenessVerdict::Square {
            root: GrossNumber::term(Rational::new(n, d), half),
        };
    }
    let numer = cert.q.numer().magnitude();
    let denom = cert.q.denom().magnitude();
    let (Some(mut odd), Some(odd_den)) = (odd_valuation_primes(numer), odd_valuation_primes(denom))
    else {
        return SquarenessVerdict::Unknown {
            reason: "coefficient could not be fully factored".into(),
        };
    };
    odd.extend(odd_den);
    match odd.len() {
        1 => SquarenessVerdict::NotSquare {
            witness_prime: odd.pop().expect("one element"),
        },
        n => SquarenessVerdict::Unknown {
            reason: format!("coefficient has {n} primes of odd valuation"),
        },
    }
}

/// p-adic valuation of a nonzero rational.
fn valuation(q: &Rational, p: &BigUint) -> i64 {
    let count = |n: &BigInt| {
        let p = BigInt::from_biguint(Sign::Plus, p.clone());
        let mut n = n.abs();
        let mut v = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            v += 1;
        }
        v
    };
    count(q.numer()) - count(q.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeRule {
    /// `λ + 1`.
    R1,
    /// `λ − 1` with λ not a square.
    R2,
    Finite,
}

impl PrimeRule {
    pub fn citation(self) -> Citation {
        match self {
            PrimeRule::R1 => Citation::Theorem1,
            PrimeRule::R2 => Citation::Lemma2,
            PrimeRule::Finite => Citation::FiniteOracle,
        }
    }
}

impl fmt::Display for PrimeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeRule::R1 => "R1",
            PrimeRule::R2 => "R2",
            PrimeRule::Finite => "Finite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimalityVerdict {
    Prime {
        rule: PrimeRule,
        trace: Vec<TraceStep>,
    },
    /// `witness · cofactor` equals the input and `1 < witness < input`.
    Composite {
        witness: GrossNumber,
        cofactor: GrossNumber,
        trace: Vec<TraceStep>,
    },
    NotInteger,
    NotPositive,
    Unknown {
        reason: String,
        trace: Vec<TraceStep>,
    },
}

impl PrimalityVerdict {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimalityVerdict::Prime { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PrimalityVerdict::Prime { .. } => "Prime",
            PrimalityVerdict::Composite { .. } => "Composite",
            PrimalityVerdict::NotInteger => "NotInteger",
            PrimalityVerdict::NotPositive => "NotPositive",
            PrimalityVerdict::Unknown { .. } => "Unknown",
        }
    }

    pub fn trace(&self) -> &[TraceStep] {
        match self {
            PrimalityVerdict::Prime { trace, .. }
            | PrimalityVerdict::Composite { trace, .. }
            | PrimalityVerdict::Unknown { trace, .. } => trace,
            _ => &[],
        }
    }

    /// Re-checks the witness of a Composite verdict against `x`. Other
    /// verdicts carry nothing to check and pass trivially.
    pub fn audit(&self, x: &GrossNumber) -> bool {
        match self {
            PrimalityVerdict::Composite {
                witness, cofactor, ..
            } => &(witness * cofactor) == x && *witness > GrossNumber::one() && witness < x,
            _ => true,
        }
    }
}

fn lambda_step(cert: &LambdaCert) -> TraceStep {
    TraceStep::new(
        Citation::Lemma1,
        format!(
            "λ = {} is a purely infinite simple positive integer divisible by every finite integer",
            cert.value
        ),
    )
}

fn unknown(reason: impl Into<String>, trace: Vec<TraceStep>) -> PrimalityVerdict {
    PrimalityVerdict::Unknown {
        reason: reason.into(),
        trace,
    }
}

fn classify_finite(n: &BigInt) -> PrimalityVerdict {
    let Some(n) = n.to_u64() else {
        return unknown("finite value exceeds the word-size oracle", Vec::new());
    };
    if n == 1 {
        return unknown("1 is a unit, neither prime nor composite", Vec::new());
    }
    let trace = vec![TraceStep::new(
        Citation::FiniteOracle,
        format!("deterministic primality test on {n}"),
    )];
    if oracle::is_prime_small(n) {
        return PrimalityVerdict::Prime {
            rule: PrimeRule::Finite,
            trace,
        };
    }
    let f = oracle::smallest_factor(n);
    PrimalityVerdict::Composite {
        witness: GrossNumber::from_bigint(f.into()),
        cofactor: GrossNumber::from_bigint((n / f).into()),
        trace,
    }
}

/// The Lemma 3 trace step for a λ-form `value` with a NotSquare witness:
/// `value = λ'/p^(2m+1)` for a square λ-form `λ'`.
fn lemma3_step(cert: &LambdaCert, p: &BigUint) -> TraceStep {
    let v = valuation(&cert.q, p);
    let m = if v < 0 { (-v - 1) / 2 } else { 0 };
    let p_rat = Rational::from_integer(BigInt::from_biguint(Sign::Plus, p.clone()));
    let scale = crate::number::pow_rational(&p_rat, (2 * m + 1) as u64);
    let square_lambda = &cert.value * &GrossNumber::from_rational(scale);
    TraceStep::new(
        Citation::Lemma3,
        format!(
            "λ = {square_lambda} / {p}^{} with {square_lambda} a square; {p} has odd valuation, so λ is not a square",
            2 * m + 1
        ),
    )
}

/// Primality of a gross-number. The first matching rule decides; Unknown
/// is returned whenever no rule applies.
pub fn classify_prime(x: &GrossNumber) -> PrimalityVerdict {
    if x.signum() <= 0 {
        return PrimalityVerdict::NotPositive;
    }
    match x.is_integer() {
        Trilean::False => return PrimalityVerdict::NotInteger,
        Trilean::Unknown => {
            return unknown(
                "integrality of a non-integer grosspower is undecided",
                Vec::new(),
            )
        }
        Trilean::True => {}
    }
    if let Some(r) = x.as_rational() {
        return classify_finite(&r.to_integer());
    }
    let parts = x.decompose();
    let Some(cert) = lambda_certify(&parts.infinite_part) else {
        return unknown(
            "no rule applies: the infinite part is not a λ-form",
            vec![TraceStep::new(
                Citation::Lemma1,
                format!("{} is not of the form q·①^k", parts.infinite_part),
            )],
        );
    };
    let offset = parts.finite_part.to_integer();
    let lambda = cert.value.clone();
    let mut trace = vec![lambda_step(&cert)];

    if offset.is_one() {
        trace.push(TraceStep::new(
            Citation::Theorem1,
            "λ + 1 has no nontrivial finite divisor and no factorization into infinite integers",
        ));
        return PrimalityVerdict::Prime {
            rule: PrimeRule::R1,
            trace,
        };
    }
    if offset == BigInt::from(-1) {
        return match squareness(&cert) {
            SquarenessVerdict::Square { root } => {
                trace.push(TraceStep::new(
                    Citation::Lemma2,
                    format!("λ = ({root})², so λ − 1 = ({root} − 1)({root} + 1)"),
                ));
                let one = GrossNumber::one();
                PrimalityVerdict::Composite {
                    witness: &root - &one,
                    cofactor: &root + &one,
                    trace,
                }
            }
            SquarenessVerdict::NotSquare { witness_prime } => {
                trace.push(lemma3_step(&cert, &witness_prime));
                trace.push(TraceStep::new(
                    Citation::Lemma2,
                    "λ is not a square, so λ − 1 is prime",
                ));
                PrimalityVerdict::Prime {
                    rule: PrimeRule::R2,
                    trace,
                }
            }
            SquarenessVerdict::Unknown { reason } => {
                trace.push(TraceStep::new(
                    Citation::Lemma2,
                    format!("squareness of λ undecided: {reason}"),
                ));
                unknown(
                    "λ − 1 is prime iff λ is not a square, which is undecided",
                    trace,
                )
            }
        };
    }
    if offset.is_zero() {
        trace.push(TraceStep::new(Citation::InfiniteUnitAxiom, "2 divides λ"));
        let two = GrossNumber::from_int(2);
        let cofactor = lambda.div(&two).expect("nonzero divisor");
        return PrimalityVerdict::Composite {
            witness: two,
            cofactor,
            trace,
        };
    }
    // |offset| >= 2 divides both λ and the offset.
    let d = GrossNumber::from_bigint(offset.abs());
    trace.push(TraceStep::new(
        Citation::Theorem1,
        format!("{d} divides λ and {d} divides {offset}, so {d} divides λ + {offset}"),
    ));
    let cofactor = x.div(&d).expect("nonzero divisor");
    PrimalityVerdict::Composite {
        witness: d,
        cofactor,
        trace,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPair {
    pub lower: GrossNumber,
    pub upper: GrossNumber,
    pub lambda: LambdaCert,
    pub p: u64,
    pub m: u64,
    pub trace: Vec<TraceStep>,
}

fn check_prime(p: u64) -> Result<(), TheoryError> {
    if oracle::is_prime_small(p) {
        Ok(())
    } else {
        Err(TheoryError::NotPrimeParameter(p))
    }
}

fn scaled(cert: &LambdaCert, p: u64, m: u64) -> GrossNumber {
    let p = Rational::from_integer(BigInt::from(p));
    let scale = crate::number::pow_rational(&p, 2 * m + 1).recip();
    &cert.value * &GrossNumber::from_rational(scale)
}

/// The twin pair `λ/p^(2m+1) ± 1` for a square λ-form.
pub fn make_twins(cert: &LambdaCert, p: u64, m: i64) -> Result<TwinPair, TheoryError> {
    if m < 0 {
        return Err(TheoryError::NegativeM(m));
    }
    let m = m as u64;
    check_prime(p)?;
    let root = match squareness(cert) {
        SquarenessVerdict::Square { root } => root,
        _ => return Err(TheoryError::LambdaNotSquare),
    };
    let x = scaled(cert, p, m);
    let one = GrossNumber::one();
    let lower = &x - &one;
    let upper = &x + &one;

    let mut trace = vec![TraceStep::new(
        Citation::Theorem2,
        format!("λ = ({root})² is a square λ-form, p = {p}, m = {m}"),
    )];
    for (member, want) in [(&lower, PrimeRule::R2), (&upper, PrimeRule::R1)] {
        match classify_prime(member) {
            PrimalityVerdict::Prime { rule, trace: t } if rule == want => trace.extend(t),
            _ => return Err(TheoryError::MemberNotPrime(member.to_string())),
        }
    }
    Ok(TwinPair {
        lower,
        upper,
        lambda: cert.clone(),
        p,
        m,
        trace,
    })
}

/// Finite prefix `[λ/p^(2m+1) : m = m_start .. m_start + count)` of A(p).
///
/// A(p) also contains members for infinite `m` and its size M(p) has no
/// closed numeral; neither is enumerated.
pub fn enumerate_a(
    cert: &LambdaCert,
    p: u64,
    count: u64,
    m_start: i64,
) -> Result<Vec<GrossNumber>, TheoryError> {
    check_prime(p)?;
    if count == 0 {
        return Err(TheoryError::ZeroCount);
    }
    if m_start < 0 {
        return Err(TheoryError::NegativeM(m_start));
    }
    let start = m_start as u64;
    Ok((start..start + count).map(|m| scaled(cert, p, m)).collect())
}

/// The first `2·count` members of B(p), twin pairs for `m = 1..=count`.
pub fn enumerate_b(cert: &LambdaCert, p: u64, count: u64) -> Result<Vec<GrossNumber>, TheoryError> {
    check_prime(p)?;
    if !matches!(squareness(cert), SquarenessVerdict::Square { .. }) {
        return Err(TheoryError::LambdaNotSquare);
    }
    if count == 0 {
        return Err(TheoryError::ZeroCount);
    }
    let mut out = Vec::with_capacity(2 * count as usize);
    for m in 1..=count {
        let pair = make_twins(cert, p, m as i64)?;
        out.push(pair.lower);
        out.push(pair.upper);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetId {
    Naturals,
    Evens,
    Odds,
    Integers,
}

impl std::str::FromStr for SetId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "naturals" | "n" => Ok(SetId::Naturals),
            "evens" | "even" => Ok(SetId::Evens),
            "odds" | "odd" => Ok(SetId::Odds),
            "integers" | "z" => Ok(SetId::Integers),
            _ => Err(format!(
                "unknown set '{s}' (naturals, evens, odds, integers)"
            )),
        }
    }
}

/// Number of elements of a standard infinite set, measured in grossone.
pub fn set_count(set: SetId) -> GrossNumber {
    let g = GrossNumber::grossone();
    let half = GrossNumber::from_rational(crate::number::ratio(1, 2));
    match set {
        SetId::Naturals => g,
        SetId::Evens | SetId::Odds => &g * &half,
        SetId::Integers => &(&g * &GrossNumber::from_int(2)) + &GrossNumber::one(),
    }
}
