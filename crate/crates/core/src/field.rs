//! Exact coefficient fields: prime fields, prime-power extensions given by an
//! explicit irreducible modulus, and the rationals.
//!
//! All arithmetic is exact. Field contexts are small cloneable values; every
//! downstream structure (polynomials, matrices, complexes) is generic over
//! [`Field`].

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Hard cap on the number of elements `elements()` will enumerate.
pub const ENUMERATION_CAP: u64 = 1 << 20;

/// An exact field of coefficients. The context object carries the modulus
/// data; elements are plain values interpreted relative to it.
pub trait Field: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `DivisionByZero` on zero input.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Characteristic (0 for the rationals).
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    /// Every element exactly once, in a fixed deterministic order.
    /// `None` for infinite fields; an error above [`ENUMERATION_CAP`].
    fn elements(&self) -> Option<Result<Vec<Self::Elem>>>;
    fn fmt_elem(&self, a: &Self::Elem) -> String;
    /// Short description for reports, e.g. `GF(9)` or `QQ`.
    fn describe(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// polynomial helpers over F_p, used for extension-field arithmetic
// ---------------------------------------------------------------------------

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic `m`.
fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for k in 0..=dm {
                let sub = (c * m[k]) % p;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
        fp_trim(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    r
}

fn fp_powmod(base: &[u64], mut n: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut b = fp_rem(base, m, p);
    let mut acc = vec![1u64];
    while n > 0 {
        if n & 1 == 1 {
            acc = fp_rem(&fp_mul(&acc, &b, p), m, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), m, p);
        n >>= 1;
    }
    acc
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        // make b monic before reducing
        let lc = *b.last().unwrap();
        let lcinv = mod_inv(lc, p);
        let monic: Vec<u64> = b.iter().map(|&c| (c * lcinv) % p).collect();
        let r = fp_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a != 0 mod p
    debug_assert!(a % p != 0);
    let mut acc = 1u64;
    let mut base = a % p;
    let mut n = p - 2;
    while n > 0 {
        if n & 1 == 1 {
            acc = (acc * base) % p;
        }
        base = (base * base) % p;
        n >>= 1;
    }
    acc
}

/// Rabin irreducibility test for a monic polynomial over F_p.
fn fp_is_irreducible(m: &[u64], p: u64) -> bool {
    let e = (m.len() - 1) as u32;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^(p^e) == x mod m
    let mut r = x.clone();
    for _ in 0..e {
        r = fp_powmod(&r, p, m, p);
    }
    let mut diff = r.clone();
    while diff.len() < 2 {
        diff.push(0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^(p^(e/q)) - x, m) == 1 for every prime q | e
    let mut primes = vec![];
    let mut n = e;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            primes.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    for q in primes {
        let k = e / q;
        let mut r = x.clone();
        for _ in 0..k {
            r = fp_powmod(&r, p, m, p);
        }
        let mut diff = r;
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(&mut diff);
        let g = fp_gcd(m, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `e` over F_p in base-p counting order
/// of the lower coefficients.
fn find_irreducible(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let mut lower = vec![0u64; e as usize];
    loop {
        let mut m = lower.clone();
        m.push(1);
        if fp_is_irreducible(&m, p) {
            return m;
        }
        // increment base-p counter
        let mut i = 0;
        loop {
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
            assert!(i < e as usize, "no irreducible polynomial found");
        }
    }
}

// ---------------------------------------------------------------------------
// Gf: prime and prime-power fields
// ---------------------------------------------------------------------------

/// Element of [`Gf`]: coefficients of the residue class representative in the
/// generator, little-endian, always of length `e`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfElem(pub Vec<u64>);

impl std::fmt::Debug for GfElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GfElem{:?}", self.0)
    }
}

/// The finite field with `p^e` elements, `F_p[a]/(modulus)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf {
    p: u64,
    e: u32,
    modulus: Vec<u64>,
}

impl Gf {
    /// Prime field `F_p`.
    pub fn prime(p: u64) -> Result<Gf> {
        Gf::extension(p, 1)
    }

    /// `F_{p^e}` with the first irreducible modulus in counting order.
    pub fn extension(p: u64, e: u32) -> Result<Gf> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        if (e as u64) * 64 > 1024 {
            return Err(Error::InvalidField(format!("extension degree {e} too large")));
        }
        Ok(Gf { p, e, modulus: find_irreducible(p, e) })
    }

    /// `F_{p^e}` with an explicit monic modulus (little-endian, length e+1).
    /// The modulus is checked for irreducibility.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Gf> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic of degree >= 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must be reduced mod p".into()));
        }
        if !fp_is_irreducible(&modulus, p) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        let e = (modulus.len() - 1) as u32;
        Ok(Gf { p, e, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn elem_from_vec(&self, mut v: Vec<u64>) -> GfElem {
        v.resize(self.e as usize, 0);
        GfElem(v)
    }

    /// The generator of the extension (the class of the modulus variable).
    pub fn generator(&self) -> GfElem {
        if self.e == 1 {
            // generator of F_p as a ring is 1
            return self.one();
        }
        self.elem_from_vec(vec![0, 1])
    }

    /// Element from little-endian coefficient digits (reduced mod p).
    pub fn from_digits(&self, digits: &[u64]) -> GfElem {
        let v: Vec<u64> = digits.iter().take(self.e as usize).map(|&c| c % self.p).collect();
        self.elem_from_vec(v)
    }
}

impl Field for Gf {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(vec![0; self.e as usize])
    }

    fn one(&self) -> GfElem {
        let mut v = vec![0; self.e as usize];
        v[0] = 1;
        GfElem(v)
    }

    fn is_zero(&self, a: &GfElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + y) % self.p).collect())
    }

    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + self.p - y) % self.p).collect())
    }

    fn neg(&self, a: &GfElem) -> GfElem {
        GfElem(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if self.e == 1 {
            return GfElem(vec![(a.0[0] * b.0[0]) % self.p]);
        }
        let prod = fp_mul(&a.0, &b.0, self.p);
        let red = fp_rem(&prod, &self.modulus, self.p);
        self.elem_from_vec(red)
    }

    fn inv(&self, a: &GfElem) -> Result<GfElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        if self.e == 1 {
            return Ok(GfElem(vec![mod_inv(a.0[0], self.p)]));
        }
        // extended Euclid in F_p[z] against the modulus
        let p = self.p;
        let mut r0 = self.modulus.clone();
        let mut r1 = a.0.clone();
        fp_trim(&mut r1);
        let mut t0: Vec<u64> = vec![];
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // divide r0 by r1
            let mut q: Vec<u64> = vec![0; r0.len().saturating_sub(r1.len()) + 1];
            let mut rem = r0.clone();
            let lc = *r1.last().unwrap();
            let lcinv = mod_inv(lc, p);
            while rem.len() >= r1.len() && !rem.is_empty() {
                let c = (*rem.last().unwrap() * lcinv) % p;
                let shift = rem.len() - r1.len();
                if c != 0 {
                    q[shift] = (q[shift] + c) % p;
                    for (k, &mc) in r1.iter().enumerate() {
                        let sub = (c * mc) % p;
                        rem[shift + k] = (rem[shift + k] + p - sub) % p;
                    }
                }
                let before = rem.len();
                fp_trim(&mut rem);
                if rem.len() == before {
                    rem.pop();
                    fp_trim(&mut rem);
                }
            }
            fp_trim(&mut q);
            let qt1 = fp_mul(&q, &t1, p);
            let mut t2 = t0.clone();
            t2.resize(t2.len().max(qt1.len()), 0);
            for (k, &c) in qt1.iter().enumerate() {
                t2[k] = (t2[k] + p - c) % p;
            }
            fp_trim(&mut t2);
            t0 = t1;
            t1 = t2;
            r0 = r1;
            r1 = rem;
        }
        // r0 = gcd (nonzero constant since modulus irreducible)
        debug_assert_eq!(r0.len(), 1);
        let scale = mod_inv(r0[0], p);
        let out: Vec<u64> = t0.iter().map(|&c| (c * scale) % p).collect();
        Ok(self.elem_from_vec(fp_rem(&out, &self.modulus, p)))
    }

    fn from_int(&self, n: i64) -> GfElem {
        let p = self.p as i64;
        let r = ((n % p) + p) % p;
        let mut v = vec![0; self.e as usize];
        v[0] = r as u64;
        GfElem(v)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        let mut q: u64 = 1;
        for _ in 0..self.e {
            q = q.checked_mul(self.p)?;
        }
        Some(q)
    }

    fn elements(&self) -> Option<Result<Vec<GfElem>>> {
        let q = match self.order() {
            Some(q) if q <= ENUMERATION_CAP => q,
            Some(q) => return Some(Err(Error::FieldTooLarge(q))),
            None => return Some(Err(Error::FieldTooLarge(u64::MAX))),
        };
        let mut out = Vec::with_capacity(q as usize);
        let mut digits = vec![0u64; self.e as usize];
        loop {
            out.push(GfElem(digits.clone()));
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Some(Ok(out));
                }
                digits[i] += 1;
                if digits[i] < self.p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    fn fmt_elem(&self, a: &GfElem) -> String {
        if self.e == 1 {
            return a.0[0].to_string();
        }
        let mut parts = vec![];
        for (i, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".into(),
                (1, c) => format!("{c}*a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}*a^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    fn describe(&self) -> String {
        match self.order() {
            Some(q) => format!("GF({q})"),
            None => format!("GF({}^{})", self.p, self.e),
        }
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Option<Result<Vec<BigRational>>> {
        None
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().magnitude(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn describe(&self) -> String {
        "QQ".into()
    }
}

// ---------------------------------------------------------------------------
// FieldSpec: serializable description, CLI entry point
// ---------------------------------------------------------------------------

/// Parsed description of a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime { p: u64 },
    PrimePower { p: u64, e: u32, modulus: Option<Vec<u64>> },
    Rationals,
}

impl FieldSpec {
    /// Accepts `QQ`, `GF(q)` and `GF(p^e)`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s == "QQ" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("cannot parse field `{s}`")))?;
        let bad = || Error::InvalidField(format!("cannot parse field `{s}`"));
        if let Some((ps, es)) = inner.split_once('^') {
            let p: u64 = ps.trim().parse().map_err(|_| bad())?;
            let e: u32 = es.trim().parse().map_err(|_| bad())?;
            return Ok(if e == 1 {
                FieldSpec::Prime { p }
            } else {
                FieldSpec::PrimePower { p, e, modulus: None }
            });
        }
        let q: u64 = inner.trim().parse().map_err(|_| bad())?;
        // factor q as p^e
        if q < 2 {
            return Err(bad());
        }
        let mut p = 0u64;
        let mut d = 2u64;
        let mut n = q;
        while d * d <= n {
            if n % d == 0 {
                p = d;
                break;
            }
            d += 1;
        }
        if p == 0 {
            p = n; // q itself prime
        }
        let mut e = 0u32;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if n != 1 {
            return Err(Error::InvalidField(format!("{q} is not a prime power")));
        }
        Ok(if e == 1 { FieldSpec::Prime { p } } else { FieldSpec::PrimePower { p, e, modulus: None } })
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, FieldSpec::Rationals)
    }

    /// Build the finite-field context; error for `Rationals`.
    pub fn build_gf(&self) -> Result<Gf> {
        match self {
            FieldSpec::Prime { p } => Gf::prime(*p),
            FieldSpec::PrimePower { p, e, modulus: None } => Gf::extension(*p, *e),
            FieldSpec::PrimePower { modulus: Some(m), p, .. } => Gf::with_modulus(*p, m.clone()),
            FieldSpec::Rationals => Err(Error::InvalidField("not a finite field".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f7_invert() {
        let f = Gf::prime(7).unwrap();
        let three = f.from_int(3);
        assert_eq!(f.inv(&three).unwrap(), f.from_int(5));
        assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn f9_additive_inverses() {
        let f = Gf::extension(3, 2).unwrap();
        for x in f.elements().unwrap().unwrap() {
            assert!(f.is_zero(&f.add(&x, &f.neg(&x))));
        }
    }

    #[test]
    fn f4_enumeration() {
        let f = Gf::extension(2, 2).unwrap();
        let all = f.elements().unwrap().unwrap();
        assert_eq!(all.len(), 4);
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn f9_field_axioms() {
        let f = Gf::extension(3, 2).unwrap();
        let all = f.elements().unwrap().unwrap();
        assert_eq!(all.len(), 9);
        for x in &all {
            if !f.is_zero(x) {
                let xi = f.inv(x).unwrap();
                assert!(f.is_one(&f.mul(x, &xi)));
            }
            for y in &all {
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for z in &all {
                    let lhs = f.mul(x, &f.add(y, z));
                    let rhs = f.add(&f.mul(x, y), &f.mul(x, z));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn f9_modulus_is_z2_plus_1() {
        // first irreducible in counting order over F_3
        let f = Gf::extension(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // z^2 - 1 = (z-1)(z+1) over F_7
        assert!(Gf::with_modulus(7, vec![6, 0, 1]).is_err());
    }

    #[test]
    fn fieldspec_parse() {
        assert_eq!(FieldSpec::parse("GF(7)").unwrap(), FieldSpec::Prime { p: 7 });
        assert_eq!(
            FieldSpec::parse("GF(9)").unwrap(),
            FieldSpec::PrimePower { p: 3, e: 2, modulus: None }
        );
        assert_eq!(
            FieldSpec::parse("GF(3^2)").unwrap(),
            FieldSpec::PrimePower { p: 3, e: 2, modulus: None }
        );
        assert_eq!(FieldSpec::parse("QQ").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse("GF(12)").is_err());
    }

    #[test]
    fn rationals_arithmetic() {
        let f = Rationals;
        let a = f.from_int(3);
        let b = f.inv(&f.from_int(4)).unwrap();
        let c = f.mul(&a, &b);
        assert_eq!(f.fmt_elem(&c), "3/4");
    }

    #[test]
    fn large_prime_rejected() {
        assert!(Gf::prime(1 << 31).is_err());
        assert!(Gf::prime(6).is_err());
    }
}
