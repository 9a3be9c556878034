//! Dense polynomials over a prime field GF(p), coefficients in ascending-power order.
//!
//! Only what the field constructor needs: remainder, Rabin irreducibility and
//! the lexicographic search for a default modulus.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, ascending primes with multiplicity collapsed.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Remainder of `a` modulo a nonzero `b` over GF(p).
pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            let shift = top - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * bi % p) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    rem(&prod, f, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: `f` of degree `m` is irreducible iff `x^(p^m) = x (mod f)` and
/// `gcd(x^(p^(m/r)) - x, f) = 1` for every prime `r | m`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    let m = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    if m == 1 {
        return true;
    }
    let has_root = (0..p).any(|x| f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0);
    if has_root {
        return false;
    }
    // x^(p^i) mod f for i = 0..=m
    let mut frob = Vec::with_capacity(m + 1);
    frob.push(rem(&[0, 1], &f, p));
    for i in 0..m {
        let next = pow_poly_mod(&frob[i], p, &f, p);
        frob.push(next);
    }
    let x_minus = |mut h: Vec<u64>| {
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(&mut h);
        h
    };
    if !x_minus(frob[m].clone()).is_empty() {
        return false;
    }
    prime_factors(m as u64).iter().all(|&(r, _)| {
        let g = gcd(&f, &x_minus(frob[m / r as usize].clone()), p);
        g.len() == 1
    })
}

/// Lexicographically smallest monic irreducible of degree `m` over GF(p), comparing the
/// ascending-power digit arrays `[c0, c1, ..., c_{m-1}, 1]` from `c0` onward.
pub(crate) fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let mut digits = vec![0u64; m];
    // every candidate with c0 = 0 is divisible by x
    if m > 1 {
        digits[0] = 1;
    }
    loop {
        let mut f = digits.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        // c_{m-1} is the fastest-moving digit in lexicographic order
        let mut i = m;
        loop {
            if i == 0 {
                unreachable!("an irreducible polynomial of every degree exists");
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All monic polynomials of exact degree `d`, lower coefficients counting in base p.
    fn monic_of_degree(d: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
        let count = p.pow(d as u32);
        (0..count).map(move |mut idx| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(idx % p);
                idx /= p;
            }
            c.push(1);
            c
        })
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn factor_511() {
        assert_eq!(prime_factors(511), vec![(7, 1), (73, 1)]);
        assert_eq!(prime_factors(48), vec![(2, 4), (3, 1)]);
        assert_eq!(prime_factors(1), vec![]);
    }

    #[test]
    fn irreducibility() {
        // x^2 + 1 over GF(7): -1 is a non-residue
        assert!(is_irreducible(&[1, 0, 1], 7));
        assert!(is_irreducible(&[2, 0, 1], 7));
        // x^2 + 1 over GF(5) = (x-2)(x-3)
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // (x^2+x+1)^2 over GF(2) has no roots but a quadratic factor
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn rabin_matches_trial_division() {
        fn by_trial(f: &[u64], p: u64) -> bool {
            let m = f.len() - 1;
            (1..=m / 2).all(|d| monic_of_degree(d, p).all(|g| !rem(f, &g, p).is_empty()))
        }
        for (p, m) in [(2, 6), (3, 4), (5, 3), (7, 2)] {
            for f in monic_of_degree(m, p) {
                assert_eq!(is_irreducible(&f, p), by_trial(&f, p), "{f:?} over GF({p})");
            }
        }
    }

    #[test]
    fn default_moduli() {
        assert_eq!(smallest_irreducible(7, 1), vec![0, 1]);
        assert_eq!(smallest_irreducible(7, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
    }
}
