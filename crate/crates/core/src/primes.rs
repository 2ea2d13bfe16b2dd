/// Trial-division primality; inputs here are small.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_odd_prime(n: i64) -> bool {
    n > 2 && is_prime(n)
}

/// Odd primes in `lo..=hi`.
pub fn odd_primes_between(lo: i64, hi: i64) -> Vec<i64> {
    (lo.max(3)..=hi).filter(|&n| is_odd_prime(n)).collect()
}
