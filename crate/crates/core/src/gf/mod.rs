//! Exact arithmetic in GF(p^m).
//!
//! Elements are stored as their integer encoding `sum(digits[i] * p^i)` over the polynomial
//! basis `1, θ, ..., θ^(m-1)`, where θ is a root of the field's modulus. Fields up to
//! [`TABLE_LIMIT`] elements get exp/log/Zech tables; larger fields fall back to polynomial
//! arithmetic on the digit vectors.

mod poly;
mod sqrt;
mod subgroup;

pub use poly::prime_factors;
pub use subgroup::{CosetSelection, GroupKind, Subgroup};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order that gets lookup tables.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Largest field order accepted at all.
pub const MAX_ORDER: u64 = 1 << 62;

/// A field element in integer encoding. Only meaningful together with its [`Field`].
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Fe(pub(crate) u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// The integer encoding of this element.
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    // exp has length 2(q-1) so that exp[i + j] needs no reduction for logs i, j < q-1
    exp: Vec<u32>,
    log: Vec<u32>,
    // zech[d] = log(1 + g^d), or NO_LOG when 1 + g^d = 0
    zech: Option<Vec<u32>>,
}

const NO_LOG: u32 = u32::MAX;

struct Inner {
    p: u64,
    m: usize,
    q: u64,
    modulus: Vec<u64>,
    pow_p: Vec<u64>,
    tables: Option<Tables>,
    primitive: OnceLock<Fe>,
}

/// A finite field GF(p^m) with a fixed monic irreducible modulus.
///
/// Cloning is cheap; the context is immutable and shareable across threads.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec_string())
    }
}

impl Field {
    /// Builds GF(p^m). Without an explicit modulus the lexicographically smallest monic
    /// irreducible of degree `m` (ascending digit order) is used.
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<Field> {
        if !poly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut pow_p = Vec::with_capacity(m + 1);
        let mut acc: u64 = 1;
        pow_p.push(1);
        for _ in 0..m {
            acc = acc
                .checked_mul(p)
                .filter(|&v| v <= MAX_ORDER)
                .ok_or(Error::FieldTooLarge { p, m })?;
            pow_p.push(acc);
        }
        let q = acc;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != m + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m,
                        found: f.len().saturating_sub(1),
                    });
                }
                if let Some(&d) = f.iter().find(|&&d| d >= p) {
                    return Err(Error::BadModulus(format!("digit {d} is not below {p}")));
                }
                if f[m] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if !poly::is_irreducible(f, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                f.to_vec()
            }
            None => poly::smallest_irreducible(p, m),
        };
        let mut field = Field(Arc::new(Inner {
            p,
            m,
            q,
            modulus,
            pow_p,
            tables: None,
            primitive: OnceLock::new(),
        }));
        if q <= TABLE_LIMIT {
            let g = field.find_primitive();
            let tables = field.build_tables(g);
            let inner = Arc::get_mut(&mut field.0).expect("fresh field context is uniquely owned");
            inner.tables = Some(tables);
            let _ = inner.primitive.set(g);
        }
        Ok(field)
    }

    /// GF(p) with the trivial modulus `x`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Parses `"q"` (a prime power), `"p^m"` or `"p^m:c0,c1,...,cm"`.
    pub fn parse(s: &str) -> Result<Field> {
        let bad = || Error::BadFieldString(s.to_string());
        let (head, digits) = match s.split_once(':') {
            Some((h, d)) => (h.trim(), Some(d)),
            None => (s.trim(), None),
        };
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                m.trim().parse::<usize>().map_err(|_| bad())?,
            ),
            None => {
                let q = head.parse::<u64>().map_err(|_| bad())?;
                match prime_factors(q)[..] {
                    [(p, m)] => (p, m as usize),
                    _ => return Err(Error::NotPrimePower(q)),
                }
            }
        };
        let modulus = match digits {
            Some(d) => Some(
                d.split(',')
                    .map(|x| x.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad())?,
            ),
            None => None,
        };
        Field::new(p, m, modulus.as_deref())
    }

    /// Canonical `"p^m:c0,...,cm"` form, always naming the modulus.
    pub fn spec_string(&self) -> String {
        let digits: Vec<String> = self.0.modulus.iter().map(|d| d.to_string()).collect();
        format!("{}^{}:{}", self.0.p, self.0.m, digits.join(","))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus digits, ascending powers, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Element from its integer encoding.
    pub fn elem(&self, value: u64) -> Result<Fe> {
        if value < self.0.q {
            Ok(Fe(value))
        } else {
            Err(Error::NotAnElement { value, q: self.0.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.0.p as i64) as u64)
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.0.q
    }

    /// The generator θ of the polynomial basis (θ = 0 in a prime field with modulus x).
    pub fn theta(&self) -> Fe {
        if self.0.m == 1 {
            // the root of the modulus x + c0 is -c0
            self.neg(Fe(self.0.modulus[0]))
        } else {
            Fe(self.0.p)
        }
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Fe> {
        if digits.len() > self.0.m || digits.iter().any(|&d| d >= self.0.p) {
            return Err(Error::BadModulus(format!(
                "{digits:?} is not a reduced digit vector"
            )));
        }
        Ok(self.encode(digits))
    }

    /// Length-m digit vector of an element.
    pub fn digits(&self, a: Fe) -> Vec<u64> {
        let mut v = a.0;
        let p = self.0.p;
        (0..self.0.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u64]) -> Fe {
        Fe(digits.iter().zip(&self.0.pow_p).map(|(d, w)| d * w).sum())
    }

    /// All elements in ascending integer encoding.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.0.q).map(Fe)
    }

    /// Nonzero elements in ascending integer encoding.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (1..self.0.q).map(Fe)
    }

    /// Compares the digit arrays of two elements lexicographically from the constant term.
    pub fn cmp_digits(&self, a: Fe, b: Fe) -> Ordering {
        self.digits(a).cmp(&self.digits(b))
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let inner = &*self.0;
        if inner.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if inner.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= inner.p { s - inner.p } else { s });
        }
        if let Some(Tables {
            exp,
            log,
            zech: Some(zech),
        }) = &inner.tables
        {
            if a.0 == 0 {
                return b;
            }
            if b.0 == 0 {
                return a;
            }
            let n = inner.q - 1;
            let i = log[a.0 as usize] as u64;
            let j = log[b.0 as usize] as u64;
            let d = (j + n - i) % n;
            let z = zech[d as usize];
            if z == NO_LOG {
                return Fe::ZERO;
            }
            return Fe(exp[(i + z as u64) as usize] as u64);
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        for &w in &self.0.pow_p[..self.0.m] {
            let s = (x % p + y % p) % p;
            out += s * w;
            x /= p;
            y /= p;
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if p == 2 || a.0 == 0 {
            return a;
        }
        if self.0.m == 1 {
            return Fe(p - a.0);
        }
        let mut x = a.0;
        let mut out = 0u64;
        for &w in &self.0.pow_p[..self.0.m] {
            let d = x % p;
            out += ((p - d) % p) * w;
            x /= p;
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let inner = &*self.0;
        if inner.m == 1 {
            return Fe(((a.0 as u128 * b.0 as u128) % inner.p as u128) as u64);
        }
        if let Some(t) = &inner.tables {
            let i = t.log[a.0 as usize] as usize;
            let j = t.log[b.0 as usize] as usize;
            return Fe(t.exp[i + j] as u64);
        }
        self.mul_poly(a, b)
    }

    /// Schoolbook product of digit vectors reduced by the modulus. Independent of the tables.
    pub(crate) fn mul_poly(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        let m = self.0.m;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let f = &self.0.modulus;
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // x^top = x^(top-m) * (-(f_0 + ... + f_{m-1} x^{m-1}))
            for i in 0..m {
                let t = c * f[i] % p;
                prod[top - m + i] = (prod[top - m + i] + p - t) % p;
            }
            prod[top] = 0;
        }
        self.encode(&prod[..m])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            let n = (self.0.q - 1) as usize;
            let l = t.log[a.0 as usize] as usize;
            return Ok(Fe(t.exp[(n - l) % n] as u64));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.q - 1;
            let l = t.log[a.0 as usize] as u128;
            let idx = (l * (e % n) as u128 % n as u128) as usize;
            return Fe(t.exp[idx] as u64);
        }
        self.pow_slow(a, e)
    }

    fn pow_slow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Signed exponent; negative powers go through the inverse.
    pub fn powi(&self, a: Fe, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// The p-power Frobenius map.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.0.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Fe) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.0.q - 1;
        for (r, _) in prime_factors(self.0.q - 1) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == Fe::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// First element in ascending integer encoding whose multiplicative order is q-1.
    pub fn primitive_element(&self) -> Fe {
        *self.0.primitive.get_or_init(|| self.find_primitive())
    }

    fn find_primitive(&self) -> Fe {
        let n = self.0.q - 1;
        if n == 1 {
            return Fe::ONE;
        }
        let factors = prime_factors(n);
        // tables are not built yet when this runs from the constructor; pow_slow is table-free
        let pow = |a: Fe, e: u64| {
            if self.0.tables.is_some() {
                self.pow(a, e)
            } else {
                self.pow_slow(a, e)
            }
        };
        (1..self.0.q)
            .map(Fe)
            .find(|&a| factors.iter().all(|&(r, _)| pow(a, n / r) != Fe::ONE))
            .expect("the multiplicative group is cyclic")
    }

    fn build_tables(&self, g: Fe) -> Tables {
        let q = self.0.q as usize;
        let n = q - 1;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![NO_LOG; q];
        let mut x = Fe::ONE;
        for (i, slot) in exp.iter_mut().take(n).enumerate() {
            *slot = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = if self.0.m == 1 {
                Fe(x.0 * g.0 % self.0.p)
            } else {
                self.mul_poly(x, g)
            };
        }
        exp.copy_within(0..n, n);
        let zech = if self.0.p != 2 && self.0.m > 1 {
            Some(
                (0..n)
                    .map(|d| {
                        let s = self.add_digits(Fe::ONE, Fe(exp[d] as u64));
                        if s.0 == 0 {
                            NO_LOG
                        } else {
                            log[s.0 as usize]
                        }
                    })
                    .collect(),
            )
        } else {
            None
        };
        Tables { exp, log, zech }
    }

    /// Discrete logarithm base [`Field::primitive_element`], available on tabled fields.
    pub fn log(&self, a: Fe) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        match &self.0.tables {
            Some(t) => Some(t.log[a.0 as usize] as u64),
            None => {
                let g = self.primitive_element();
                let mut x = Fe::ONE;
                for i in 0..self.0.q - 1 {
                    if x == a {
                        return Some(i);
                    }
                    x = self.mul(x, g);
                }
                None
            }
        }
    }

    /// Whether `a` lies in the subfield GF(q0^d), where `q0` is a power of the characteristic.
    ///
    /// Decided by the Frobenius fixed-point test `a^(q0^d) = a`.
    pub fn in_subfield(&self, a: Fe, d: u64, q0: u64) -> Result<bool> {
        let e = self.base_degree(q0)?;
        let ambient = self.0.m as u64 / e;
        if d == 0 || !ambient.is_multiple_of(d) {
            return Err(Error::NotASubfield { q0, d });
        }
        let mut x = a;
        for _ in 0..e * d {
            x = self.frobenius(x);
        }
        Ok(x == a)
    }

    /// `e` with `q0 = p^e`, requiring `e | m`.
    pub fn base_degree(&self, q0: u64) -> Result<u64> {
        let p = self.0.p;
        let mut e = 0u64;
        let mut v = q0;
        while v > 1 && v.is_multiple_of(p) {
            v /= p;
            e += 1;
        }
        if v != 1 || e == 0 || !(self.0.m as u64).is_multiple_of(e) {
            return Err(Error::NotASubfield { q0, d: 1 });
        }
        Ok(e)
    }

    /// Parses an element literal (decimal integer encoding).
    pub fn parse_elem(&self, s: &str) -> Result<Fe> {
        let v = s
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidSpec(format!("bad element literal {s:?}")))?;
        self.elem(v)
    }

    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ONE, |acc, x| self.mul(acc, x))
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Field::parse(s)
    }
}
