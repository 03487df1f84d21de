//! Dense polynomials over a prime field, coefficients constant-first.
//!
//! Only what extension-field construction needs: multiplication, remainder
//! and an exhaustive irreducibility test.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic-or-not nonzero `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        let shift = dr - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
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
    trim(out)
}

/// Irreducibility by trial division against every monic polynomial of
/// degree `1..=deg/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The first monic irreducible polynomial of degree `k` in lexicographic
/// (constant-first) order.
pub(crate) fn first_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    for code in 0..count {
        let mut g = Vec::with_capacity(k as usize + 1);
        let mut c = code;
        for _ in 0..k {
            g.push(c % p);
            c /= p;
        }
        g.push(1);
        if is_irreducible(&g, p) {
            return g;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Conway polynomials for the small extension fields callers ask for most.
pub(crate) fn default_min_poly(p: u64, k: u32) -> Vec<u64> {
    match (p, k) {
        (2, 2) => vec![1, 1, 1],
        (2, 3) => vec![1, 1, 0, 1],
        (3, 2) => vec![2, 2, 1],
        (5, 2) => vec![2, 4, 1],
        (3, 3) => vec![1, 2, 0, 1],
        _ => first_irreducible(p, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_polys_are_irreducible() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3), (7, 2), (2, 4)] {
            assert!(is_irreducible(&default_min_poly(p, k), p), "GF({p}^{k})");
        }
    }

    #[test]
    fn reducible_detected() {
        // t^2 + 1 = (t + 1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over GF(2): no roots, still reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(7919));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(7917));
        assert_eq!(prime_factors(24), vec![2, 3]);
    }
}
