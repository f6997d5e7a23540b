//! Word-size modular arithmetic: prime generation, Hessenberg characteristic
//! polynomials mod p, and CRT lifting back to exact rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Matrix, UPoly, Q};

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream { next: (1u64 << 62) - 1 }
    }
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PrimeStream {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while !is_prime(self.next) {
            self.next -= 2;
        }
        let p = self.next;
        self.next -= 2;
        Some(p)
    }
}

pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Reduces a rational mod p; `None` when p divides the denominator.
pub fn rational_mod(x: &Q, p: u64) -> Option<u64> {
    let d = bigint_mod(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(bigint_mod(x.numer(), p), inv_mod(d, p), p))
}

/// Characteristic polynomial of a square matrix over Z/p, low degree first.
pub fn charpoly_mod_p(rows: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = rows.len();
    let mut h: Vec<Vec<u64>> = rows.to_vec();
    let sub = |a: u64, b: u64| if a >= b { a - b } else { a + p - b };
    // Reduce to upper Hessenberg form by similarity transforms.
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = inv_mod(h[k + 1][k], p);
        for i in k + 2..n {
            if h[i][k] == 0 {
                continue;
            }
            let u = mul_mod(h[i][k], inv, p);
            for j in 0..n {
                let t = mul_mod(u, h[k + 1][j], p);
                h[i][j] = sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[k + 1] = (row[k + 1] + t) % p;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} prod_{j} h_{j,j-1} p_{m-i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            cur[d + 1] = (cur[d + 1] + c) % p;
            cur[d] = sub(cur[d], mul_mod(h[m - 1][m - 1], c, p));
        }
        let mut prod = 1u64;
        for i in 1..m {
            prod = mul_mod(prod, h[m - i][m - i - 1], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(h[m - i - 1][m - 1], prod, p);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[m - i - 1].iter().enumerate() {
                cur[d] = sub(cur[d], mul_mod(coef, c, p));
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Reduces a rational matrix mod p; `None` when p divides a denominator.
pub fn matrix_mod_p(m: &Matrix, p: u64) -> Option<Vec<Vec<u64>>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| rational_mod(x, p)).collect()).collect()
}

/// Squarefreeness of the characteristic polynomial decided modulo `p`:
/// `Some(true)` proves it over Q, `None` when p divides a denominator.
pub fn charpoly_squarefree_mod_p(m: &Matrix, p: u64) -> Option<bool> {
    let rows = matrix_mod_p(m, p)?;
    let cp = charpoly_mod_p(&rows, p);
    Some(gcd_mod_p(&cp, &derivative_mod_p(&cp, p), p).len() == 1)
}

fn clear_denominators(m: &Matrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut d = BigInt::one();
    for x in m.entries() {
        d = d.lcm(x.denom());
    }
    let rows = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.numer() * (&d / x.denom())).collect())
        .collect();
    (rows, d)
}

fn bits(x: &BigInt) -> u64 {
    x.bits()
}

/// Exact characteristic polynomial via multi-modular Hessenberg + CRT.
pub fn charpoly(m: &Matrix) -> UPoly {
    let n = m.rows();
    if n == 0 {
        return UPoly::one();
    }
    let (ints, d) = clear_denominators(m);
    // Hadamard-style bound: |c_k| <= 2^n prod_i max(1, ||row_i||).
    let mut bound_bits: u64 = n as u64 + 2;
    for row in &ints {
        let norm2: BigInt = row.iter().map(|x| x * x).sum();
        bound_bits += bits(&norm2).div_ceil(2) + 1;
    }
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in PrimeStream::new() {
        let rows: Vec<Vec<u64>> =
            ints.iter().map(|r| r.iter().map(|x| bigint_mod(x, p)).collect()).collect();
        let cp = charpoly_mod_p(&rows, p);
        crt_merge(&mut acc, &mut modulus, &cp, p);
        if bits(&modulus) > bound_bits + 1 {
            break;
        }
    }
    let half = &modulus >> 1;
    let coeffs: Vec<Q> = acc
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let c = if c > half { c - &modulus } else { c };
            // charpoly(N/d)(x) = d^{-n} charpoly(N)(d x)
            Q::new(c, num_traits::pow(d.clone(), n - k))
        })
        .collect();
    UPoly::new(coeffs)
}

fn crt_merge(acc: &mut [BigInt], modulus: &mut BigInt, residues: &[u64], p: u64) {
    let pb = BigInt::from(p);
    let m_mod_p = bigint_mod(modulus, p);
    let inv = inv_mod(m_mod_p, p);
    for (a, &r) in acc.iter_mut().zip(residues) {
        let a_mod_p = bigint_mod(a, p);
        let diff = if r >= a_mod_p { r - a_mod_p } else { r + p - a_mod_p };
        let t = mul_mod(diff, inv, p);
        *a += &*modulus * BigInt::from(t);
    }
    *modulus *= pb;
    debug_assert!(modulus.sign() == Sign::Plus && !modulus.is_negative());
}

/// Polynomial gcd over Z/p (monic), low degree first.
pub fn gcd_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let c = mul_mod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                let t = mul_mod(c, bi, p);
                a[i + shift] = if a[i + shift] >= t { a[i + shift] - t } else { a[i + shift] + p - t };
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for x in a.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
    }
    a
}

pub fn derivative_mod_p(a: &[u64], p: u64) -> Vec<u64> {
    a.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % p, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = PrimeStream::new().take(3).collect();
        assert!(ps.iter().all(|&p| is_prime(p) && p < (1 << 62)));
        assert!(ps[0] > ps[1]);
        assert!(!is_prime(1 << 40));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn charpoly_small() {
        // [[2,1],[1,3]] -> x^2 - 5x + 5
        let m = Matrix::from_i64(&[vec![2, 1], vec![1, 3]]).unwrap();
        assert_eq!(m.charpoly().unwrap(), UPoly::new(vec![q(5), q(-5), q(1)]));
        // rational entries: diag(1/2, 1/3) -> x^2 - 5/6 x + 1/6
        let mut r = Matrix::zeros(2, 2);
        r.set(0, 0, Q::new(1.into(), 2.into()));
        r.set(1, 1, Q::new(1.into(), 3.into()));
        let cp = r.charpoly().unwrap();
        assert_eq!(cp, UPoly::new(vec![Q::new(1.into(), 6.into()), Q::new((-5).into(), 6.into()), q(1)]));
    }

    #[test]
    fn charpoly_companion_recovers_polynomial() {
        // companion of x^4 - 3x^3 + 0x^2 + 7x - 100000000000000000000
        let coeffs = [q(-100_000_000_000), q(7), q(0), q(-3)];
        let mut m = Matrix::zeros(4, 4);
        for i in 0..3 {
            m.set(i + 1, i, q(1));
        }
        for (i, c) in coeffs.iter().enumerate() {
            m.set(i, 3, -c.clone());
        }
        let mut big = m.clone();
        big.set(0, 3, -q(100_000_000_000) * q(100_000_000_000));
        let cp = m.charpoly().unwrap();
        let mut expect = coeffs.to_vec();
        expect.push(q(1));
        assert_eq!(cp, UPoly::new(expect));
        let cp_big = big.charpoly().unwrap();
        assert_eq!(cp_big.coeff(0), q(100_000_000_000) * q(100_000_000_000));
    }

    #[test]
    fn gcd_mod_small() {
        let p = 101;
        // (x-1)^2 (x+2) and its derivative share (x-1)
        // x^3 - 3x + 2 = (x-1)^2 (x+2)
        let f = [2, p - 3, 0, 1];
        let g = gcd_mod_p(&f, &derivative_mod_p(&f, p), p);
        assert_eq!(g, vec![p - 1, 1]);
    }
}
