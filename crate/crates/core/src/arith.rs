//! Small-integer number theory used by the constructors.

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n` in ascending order (empty for `n <= 1`).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

/// Product of the distinct primes dividing `n`; `radical(1) == 1`.
pub fn radical(n: u64) -> u64 {
    prime_factors(n).into_iter().product()
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && radical(n) == n
}

/// `p^m` when it fits in a `u64`.
pub fn checked_pow(p: u64, m: u32) -> Option<u64> {
    p.checked_pow(m)
}
