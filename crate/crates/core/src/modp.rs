//! Word-sized prime field arithmetic in Montgomery form, used for
//! multi-modular evaluation of large determinants.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Odd prime `p < 2^62` with precomputed Montgomery constants (`R = 2^64`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    /// `-p^{-1} mod 2^64`
    neg_inv: u64,
    /// `R^2 mod p`
    r2: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(
            p % 2 == 1 && p < (1 << 62),
            "modulus must be odd and below 2^62"
        );
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        PrimeField {
            p,
            neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    /// Montgomery product.
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    pub fn one(&self) -> u64 {
        self.to_mont(1)
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element (Montgomery form in and out).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    /// An element of multiplicative order exactly `order`, which must divide
    /// `p - 1`.
    pub fn root_of_unity(&self, order: u64) -> u64 {
        assert!(order > 0 && (self.p - 1) % order == 0);
        let prime_divisors = prime_factors(order);
        for g in 2.. {
            let w = self.pow(self.to_mont(g), (self.p - 1) / order);
            if prime_divisors
                .iter()
                .all(|&q| self.pow(w, order / q) != self.one())
            {
                return w;
            }
        }
        unreachable!()
    }

    /// Reduce a signed big integer, returning Montgomery form.
    pub fn reduce(&self, x: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let mut r = x % &m;
        if r < BigInt::zero() {
            r += &m;
        }
        let v: u64 = r.try_into().expect("residue fits in u64");
        self.to_mont(v)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
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

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d, n);
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

/// The `count` largest primes below `2^62` that are `1 mod step`.
pub fn primes_one_mod(step: u64, count: usize) -> Vec<u64> {
    let step = step.max(1) * 2;
    let mut candidate = ((1u64 << 62) - 1) / step * step + 1;
    if candidate >= 1 << 62 {
        candidate -= step;
    }
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= step;
    }
    out
}

/// Determinant of a square matrix over the field, destroying the input.
/// Entries are in Montgomery form; so is the result.
pub fn det_in_place(f: &PrimeField, a: &mut [u64], n: usize) -> u64 {
    debug_assert_eq!(a.len(), n * n);
    let mut det = f.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if p != col {
            for j in col..n {
                a.swap(p * n + j, col * n + j);
            }
            det = f.neg(det);
        }
        let pivot = a[col * n + col];
        det = f.mul(det, pivot);
        let pinv = f.inv(pivot);
        let (head, tail) = a.split_at_mut((col + 1) * n);
        let prow = &head[col * n..];
        for row in tail.chunks_exact_mut(n) {
            let x = row[col];
            if x == 0 {
                continue;
            }
            let factor = f.mul(x, pinv);
            for j in col + 1..n {
                row[j] = f.sub(row[j], f.mul(factor, prow[j]));
            }
        }
    }
    det
}

/// Coefficients (Montgomery form) of the polynomial of degree `< values.len()`
/// taking `values[i]` at the node `i + 1`.
pub fn interpolate_consecutive(f: &PrimeField, values: &[u64]) -> Vec<u64> {
    let m = values.len();
    if m == 0 {
        return Vec::new();
    }
    // Newton form on nodes 1..=m: the divided differences have denominators
    // `level`, since consecutive nodes differ by one.
    let inverses: Vec<u64> = (0..m as u64)
        .map(|i| if i == 0 { 0 } else { f.inv(f.to_mont(i)) })
        .collect();
    let mut dd = values.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), inverses[level]);
        }
    }
    let mut acc = vec![0u64; m];
    let mut len = 1;
    acc[0] = dd[m - 1];
    for i in (0..m - 1).rev() {
        // acc <- acc * (x - (i + 1)) + dd[i]
        let node = f.to_mont(i as u64 + 1);
        let mut carry = 0;
        for c in acc.iter_mut().take(len) {
            let lower = f.mul(*c, node);
            let next = *c;
            *c = f.sub(carry, lower);
            carry = next;
        }
        acc[len] = carry;
        len += 1;
        acc[0] = f.add(acc[0], dd[i]);
    }
    acc
}

/// Chinese remaindering of residues (plain, not Montgomery) into the
/// symmetric range around zero.
pub fn crt_symmetric(moduli: &[u64], residues: &[u64]) -> BigInt {
    let mut value = BigUint::zero();
    let mut modulus = BigUint::one();
    for (&p, &r) in moduli.iter().zip(residues) {
        let cur = (&value % p).try_into().unwrap_or(0u64);
        let m_mod_p: u64 = (&modulus % p).try_into().unwrap_or(0);
        let diff = (r + p - cur) % p;
        let t = mulmod(diff, powmod(m_mod_p, p - 2, p), p);
        value += &modulus * t;
        modulus *= p;
    }
    let half = &modulus >> 1;
    if value > half {
        BigInt::from(value) - BigInt::from(modulus)
    } else {
        BigInt::from(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_congruent() {
        let ps = primes_one_mod(2520, 4);
        assert_eq!(ps.len(), 4);
        for p in ps {
            assert!(is_prime(p));
            assert_eq!(p % 2520, 1);
            assert!(p < 1 << 62);
        }
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn montgomery_roundtrip_and_inverse() {
        let f = PrimeField::new(primes_one_mod(12, 1)[0]);
        let a = f.to_mont(123_456_789);
        assert_eq!(f.from_mont(a), 123_456_789);
        assert_eq!(f.from_mont(f.mul(a, f.inv(a))), 1);
        let w = f.root_of_unity(12);
        assert_eq!(f.pow(w, 12), f.one());
        assert_ne!(f.pow(w, 6), f.one());
        assert_ne!(f.pow(w, 4), f.one());
    }

    #[test]
    fn small_determinant_and_interpolation() {
        let f = PrimeField::new(primes_one_mod(1, 1)[0]);
        let mut a: Vec<u64> = [9u64, 3, 3, 3].iter().map(|&x| f.to_mont(x)).collect();
        assert_eq!(f.from_mont(det_in_place(&f, &mut a, 2)), 18);
        // n^2 - 3n + 1 at n = 1, 2, 3
        let vals: Vec<u64> = [-1i64, -1, 1]
            .iter()
            .map(|&v| f.reduce(&BigInt::from(v)))
            .collect();
        let coeffs: Vec<u64> = interpolate_consecutive(&f, &vals)
            .iter()
            .map(|&c| f.from_mont(c))
            .collect();
        let p = f.modulus();
        assert_eq!(coeffs, vec![1, p - 3, 1]);
    }

    #[test]
    fn crt_recovers_negative_values() {
        let ps = primes_one_mod(1, 3);
        let x = BigInt::from(-12_345_678_901_234_567_890_123i128);
        let rs: Vec<u64> = ps
            .iter()
            .map(|&p| {
                let f = PrimeField::new(p);
                f.from_mont(f.reduce(&x))
            })
            .collect();
        assert_eq!(crt_symmetric(&ps, &rs), x);
    }
}
