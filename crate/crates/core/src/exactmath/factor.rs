//! Integer factorization for rational-root candidate generation.
//!
//! Small primes are removed by trial division; any cofactor left over is
//! split with Brent's variant of Pollard's rho after a Miller–Rabin test.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 1 << 16;

// Deterministic for n < 3.3e24; probabilistic beyond, with error below 4^-13.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn is_probable_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &WITNESSES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of an odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            // Batched product collapsed; replay one step at a time.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let rest = &n / &d;
    split_into(d, out);
    split_into(rest, out);
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `0` and `1`
/// have no factors.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut primes = Vec::new();
    if n.is_zero() {
        return Vec::new();
    }
    let mut m = n.clone();
    let mut p: u32 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let small_enough = m.to_u64().is_some_and(|v| v <= (TRIAL_LIMIT as u64).pow(2));
        if small_enough {
            primes.push(m);
        } else {
            split_into(m, &mut primes);
        }
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigUint {
        s.parse().unwrap()
    }

    fn product(f: &[(BigUint, u32)]) -> BigUint {
        f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    #[test]
    fn small_numbers() {
        assert!(factorize(&BigUint::one()).is_empty());
        assert_eq!(
            factorize(&BigUint::from(10768u32)),
            vec![(BigUint::from(2u32), 4), (BigUint::from(673u32), 1)]
        );
        assert_eq!(divisors(&BigUint::from(12u32)).len(), 6);
    }

    #[test]
    fn large_prime_cofactor() {
        let n = big("19989882674056909935");
        let f = factorize(&n);
        assert_eq!(product(&f), n);
        assert_eq!(f.last().unwrap().0, big("444219614979042443"));
        assert!(f.iter().all(|(p, _)| is_probable_prime(p)));
    }

    #[test]
    fn semiprime_needs_rho() {
        // 1000003 * 998244353
        let n = BigUint::from(1_000_003u64) * BigUint::from(998_244_353u64);
        let f = factorize(&n);
        assert_eq!(f.len(), 2);
        assert_eq!(product(&f), n);
    }

    #[test]
    fn divisor_count_of_septic_constant() {
        // 2^9 3^5 5 31 61 67 127 271 8017 478897
        let n = big("10414527769923133690990080");
        let d = divisors(&n);
        assert_eq!(d.len(), 10 * 6 * 2usize.pow(8));
        assert!(d.iter().all(|x| (&n % x).is_zero()));
    }
}
