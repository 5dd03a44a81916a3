//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is stored in a canonical form: the conductor is the
//! smallest `N` with the value in `Q(ζ_N)`, `N` is never `2 mod 4`, and the
//! coefficients sit on a fixed integral basis of `Q(ζ_N)` made of powers of
//! `ζ_N`. Two values are equal exactly when their representations are, so
//! `Eq` and `Hash` are structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    /// `(exponent, coefficient)` pairs, sorted by exponent, no zero coefficients.
    terms: Vec<(u32, Rational)>,
}

/// Prime factorization by trial division, smallest prime first.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as u64
}

fn lcm(a: u32, b: u32) -> u32 {
    let l = (a as u64).lcm(&(b as u64));
    u32::try_from(l).expect("conductor overflow")
}

/// Rewrites a dense coefficient vector over powers of `ζ_n` onto the
/// canonical basis, in place. `n` must not be `2 mod 4`.
fn reduce_dense(n: u32, v: &mut [Rational]) {
    let n = n as u64;
    for (p, e) in factorize(n) {
        let pe = p.pow(e);
        let hi = pe / p;
        let inv = mod_inverse((n / pe) % pe, pe);
        let step = n / p;
        for k in 0..n {
            if v[k as usize].is_zero() {
                continue;
            }
            let top = ((k % pe) * inv % pe) / hi;
            let bad = if p == 2 { top == 1 } else { top == 0 };
            if !bad {
                continue;
            }
            let x = std::mem::replace(&mut v[k as usize], Rational::zero());
            // Targets are good for p and keep their residues for other primes.
            for j in 1..p {
                let t = ((k + j * step) % n) as usize;
                v[t] -= &x;
            }
        }
    }
}

/// Maps powers of `ζ_{2m}` (`m` odd) onto powers of `ζ_m`, where
/// `ζ_{2m}^j = (-1)^j ζ_m^{j(m+1)/2}`.
fn halve_even_conductor(m: u64, terms: impl IntoIterator<Item = (u64, Rational)>) -> Vec<(u64, Rational)> {
    let half = m.div_ceil(2);
    terms
        .into_iter()
        .map(|(j, c)| {
            let c = if j % 2 == 1 { -c } else { c };
            ((j % (2 * m)) * half % m, c)
        })
        .collect()
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { conductor: 1, terms: vec![(0, q)] }
        }
    }

    pub fn from_integer(i: impl Into<BigInt>) -> Self {
        Self::from_rational(Rational::from_integer(i.into()))
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: u64) -> Self {
        Self::from_terms(n, [(k, Rational::one())])
    }

    /// Builds `Σ c · ζ_n^k` from arbitrary exponents (taken mod `n`) and
    /// brings it to canonical form.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (u64, Rational)>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let (n, terms): (u32, Vec<(u64, Rational)>) = if n % 4 == 2 {
            (n / 2, halve_even_conductor(n as u64 / 2, terms))
        } else {
            (n, terms.into_iter().collect())
        };
        let mut dense = vec![Rational::zero(); n as usize];
        for (k, c) in terms {
            dense[(k % n as u64) as usize] += c;
        }
        Self::from_dense(n, dense)
    }

    fn from_dense(n: u32, mut dense: Vec<Rational>) -> Self {
        debug_assert!(n % 4 != 2);
        if n == 1 {
            return Self::from_rational(dense.pop().unwrap_or_else(Rational::zero));
        }
        reduce_dense(n, &mut dense);
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Self::minimize(n, terms)
    }

    /// Lowers the conductor of a canonical representation as far as it goes.
    fn minimize(mut n: u32, mut terms: Vec<(u32, Rational)>) -> Self {
        'outer: loop {
            if terms.is_empty() {
                return Self::zero();
            }
            if n == 1 {
                break;
            }
            for (p, e) in factorize(n as u64) {
                let p = p as u32;
                if e >= 2 {
                    if terms.iter().all(|(k, _)| k % p == 0) {
                        let m = n / p;
                        if m % 4 == 2 {
                            let h = m / 2;
                            let mapped = halve_even_conductor(
                                h as u64,
                                terms.into_iter().map(|(k, c)| ((k / p) as u64, c)),
                            );
                            return Self::from_terms(h, mapped);
                        }
                        for t in terms.iter_mut() {
                            t.0 /= p;
                        }
                        n = m;
                        continue 'outer;
                    }
                } else if p != 2 {
                    if let Some(lowered) = Self::drop_simple_prime(n, p, &terms) {
                        n /= p;
                        terms = lowered;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        terms.sort_by_key(|t| t.0);
        Cyclotomic { conductor: n, terms }
    }

    /// For `p` exactly dividing `n`: the value lies in `Q(ζ_{n/p})` iff each
    /// residue class mod `n/p` carries exactly `p - 1` equal coefficients.
    fn drop_simple_prime(n: u32, p: u32, terms: &[(u32, Rational)]) -> Option<Vec<(u32, Rational)>> {
        let m = n / p;
        let mut groups: std::collections::BTreeMap<u32, (usize, &Rational)> = Default::default();
        for (k, c) in terms {
            let entry = groups.entry(k % m).or_insert((0, c));
            if entry.1 != c {
                return None;
            }
            entry.0 += 1;
        }
        if groups.values().any(|(count, _)| *count != (p - 1) as usize) {
            return None;
        }
        let mut out: Vec<(u32, Rational)> = groups
            .into_iter()
            .map(|(r, (_, c))| {
                let k0 = (0..p).map(|j| r + j * m).find(|k| k % p == 0).expect("coset meets pZ");
                (k0 / p, -c.clone())
            })
            .collect();
        out.sort_by_key(|t| t.0);
        Some(out)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical `(exponent, coefficient)` pairs over powers of `ζ_N`.
    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Result<Rational> {
        match (self.conductor, self.terms.as_slice()) {
            (_, []) => Ok(Rational::zero()),
            (1, [(_, q)]) => Ok(q.clone()),
            _ => Err(Error::NotRational(self.to_string())),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    fn lifted(&self, n: u32) -> impl Iterator<Item = (u64, &Rational)> {
        let f = (n / self.conductor) as u64;
        self.terms.iter().map(move |(k, c)| (*k as u64 * f, c))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let n = lcm(self.conductor, other.conductor);
        if n == 1 {
            let a = self.as_rational().unwrap_or_default();
            let b = other.as_rational().unwrap_or_default();
            return Self::from_rational(if negate { a - b } else { a + b });
        }
        let mut dense = vec![Rational::zero(); n as usize];
        for (k, c) in self.lifted(n) {
            dense[k as usize] += c;
        }
        for (k, c) in other.lifted(n) {
            if negate {
                dense[k as usize] -= c;
            } else {
                dense[k as usize] += c;
            }
        }
        if self.conductor == other.conductor {
            // Both sides already canonical on the same basis.
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u32, c))
                .collect();
            return Self::minimize(n, terms);
        }
        Self::from_dense(n, dense)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_rational() {
            return other.scale(&self.terms[0].1);
        }
        if other.is_rational() {
            return self.scale(&other.terms[0].1);
        }
        let n = lcm(self.conductor, other.conductor);
        let mut dense = vec![Rational::zero(); n as usize];
        for (a, x) in self.lifted(n) {
            for (b, y) in other.lifted(n) {
                dense[((a + b) % n as u64) as usize] += x * y;
            }
        }
        Self::from_dense(n, dense)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.conductor as u64;
        Self::from_terms(self.conductor, self.terms.iter().map(|(k, c)| ((n - *k as u64) % n, c.clone())))
    }

    /// The Galois automorphism `ζ ↦ ζ^u`.
    ///
    /// # Panics
    ///
    /// If `u` is not coprime to the conductor.
    pub fn galois(&self, u: u64) -> Self {
        let n = self.conductor as u64;
        assert!(u.gcd(&n) == 1, "galois exponent {u} not coprime to conductor {n}");
        if self.is_rational() || u % n == 1 {
            return self.clone();
        }
        Self::from_terms(self.conductor, self.terms.iter().map(|(k, c)| (*k as u64 * u % n, c.clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the product of the nontrivial Galois
    /// conjugates divided by the field norm. `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.terms[0].1.recip()));
        }
        let n = self.conductor as u64;
        let mut rest = Self::one();
        for u in 2..n {
            if u.gcd(&n) == 1 {
                rest = &rest * &self.galois(u);
            }
        }
        let norm = (self * &rest).as_rational().expect("field norm is rational");
        Some(rest.scale(&norm.recip()))
    }

    /// Floating-point value as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let a = std::f64::consts::TAU * *k as f64 / n;
            (re + x * a.cos(), im + x * a.sin())
        })
    }

    /// Writes the canonical JSON form: `[num, den]` for rationals, otherwise
    /// `{"n": N, "coeffs": {"k": [num, den], ...}}`.
    pub fn write_json(&self, out: &mut String) {
        if self.is_rational() {
            write_rational(out, &self.as_rational().unwrap_or_default());
            return;
        }
        out.push_str("{\"n\": ");
        json::write_display(out, self.conductor);
        out.push_str(", \"coeffs\": {");
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            json::write_key(out, &k.to_string());
            write_rational(out, c);
        }
        out.push_str("}}");
    }

    pub fn to_json_string(&self) -> String {
        let mut s = String::new();
        self.write_json(&mut s);
        s
    }

    pub fn from_json(v: &Value, path: &str) -> Result<Self> {
        match v {
            Value::Array(_) => Ok(Self::from_rational(rational_from_json(v, path)?)),
            Value::Object(obj) => {
                let n = json::u64_of(json::field(obj, "n", path)?, &format!("{path}.n"))?;
                let n = u32::try_from(n)
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::parse(format!("{path}.n: conductor {n} out of range")))?;
                let coeffs = json::object(json::field(obj, "coeffs", path)?, &format!("{path}.coeffs"))?;
                let mut terms = Vec::with_capacity(coeffs.len());
                for (k, c) in coeffs {
                    let e: u64 = k
                        .parse()
                        .ok()
                        .filter(|&e| e < n as u64)
                        .ok_or_else(|| Error::parse(format!("{path}.coeffs: bad exponent `{k}` for n = {n}")))?;
                    terms.push((e, rational_from_json(c, &format!("{path}.coeffs.{k}"))?));
                }
                Ok(Self::from_terms(n, terms))
            }
            _ => Err(Error::parse(format!("{path}: expected [num, den] or a cyclotomic object"))),
        }
    }
}

pub(crate) fn write_rational(out: &mut String, q: &Rational) {
    out.push('[');
    json::write_display(out, q.numer());
    out.push_str(", ");
    json::write_display(out, q.denom());
    out.push(']');
}

pub(crate) fn rational_from_json(v: &Value, path: &str) -> Result<Rational> {
    let pair = json::array(v, path)?;
    if pair.len() != 2 {
        return Err(Error::parse(format!("{path}: expected [num, den]")));
    }
    let num = json::bigint(&pair[0], path)?;
    let den = json::bigint(&pair[1], path)?;
    if den.is_zero() {
        return Err(Error::parse(format!("{path}: zero denominator")));
    }
    Ok(Rational::new(num, den))
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(i: i64) -> Self {
        Self::from_integer(i)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if self.conductor == 1 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            match k {
                1 => write!(f, "E({})", self.conductor)?,
                _ => write!(f, "E({})^{k}", self.conductor)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_impl(b, false));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_impl(b, true));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_impl(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, false);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}
