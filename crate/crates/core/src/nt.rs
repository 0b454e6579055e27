//! Small number-theoretic helpers on machine integers: factorization, Euler's
//! totient, divisor lists, primality, and multiplicative orders.

/// Greatest common divisor.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Panics on overflow.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
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

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    let mut r = n;
    for (p, _) in factorize(n) {
        r = r / p * (p - 1);
    }
    r
}

/// All positive divisors, sorted increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Modular exponentiation.
pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Multiplicative order of `a` modulo `n`; requires gcd(a, n) = 1.
pub fn mult_order(a: u64, n: u64) -> u64 {
    assert_eq!(gcd_u64(a % n, n), 1, "order requires a unit");
    if n == 1 {
        return 1;
    }
    let lam = phi(n);
    let mut ord = lam;
    for (p, _) in factorize(lam) {
        while ord % p == 0 && pow_mod(a, ord / p, n) == 1 {
            ord /= p;
        }
    }
    ord
}

/// Carmichael function: the exponent of the unit group modulo `n`.
pub fn carmichael_lambda(n: u64) -> u64 {
    let mut lam = 1u64;
    for (p, e) in factorize(n) {
        let pe = p.pow(e);
        let l = if p == 2 && e >= 3 {
            pe / 4
        } else {
            pe / p * (p - 1)
        };
        lam = lcm_u64(lam, l);
    }
    lam
}

/// Representatives of the units modulo `n`, increasing, drawn from `1..=n`.
pub fn units_mod(n: u64) -> Vec<u64> {
    (1..=n.max(1)).filter(|&k| gcd_u64(k, n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_and_divisors() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(8), 4);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(23), 22);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(phi(60), 16);
    }

    #[test]
    fn totient_sums_to_n_over_divisors() {
        for n in 1..=200u64 {
            let s: u64 = divisors(n).into_iter().map(phi).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(is_prime((1u64 << 31) + 11));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(!is_prime(1 << 40));
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(3, 7), 6);
        assert_eq!(carmichael_lambda(24), 2);
        assert_eq!(carmichael_lambda(23), 22);
        assert_eq!(carmichael_lambda(16), 4);
        for &n in &[3u64, 8, 12, 15, 16, 20, 21, 23, 24] {
            let lam = carmichael_lambda(n);
            for k in units_mod(n) {
                assert_eq!(pow_mod(k, lam, n), 1 % n.max(1));
            }
        }
    }
}
