//! Expressing a restricted invariant in the generators of the subgroup by
//! sampling instead of expanding.
//!
//! The unknowns are the coefficients of the weight-`w` monomials in the
//! generators. Sampled at integer points they satisfy a dense linear
//! system, which is solved modulo a few primes and lifted by rational
//! reconstruction. The lift is then checked exactly at every sample. Since
//! the sampled matrix has full column rank, a lift that passes the check
//! is the unique solution over ℚ.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liedata::InvariantGenerator;
use crate::poly::{weighted_monomials, Monomial, Namespace, Polynomial, Rational};

const EXTRA_POINTS: usize = 6;
const MAX_PRIMES: usize = 24;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, descending.
fn primes() -> impl Iterator<Item = u64> {
    (0..).map(|i| (1u64 << 62) - 1 - 2 * i).filter(|&n| is_prime(n))
}

/// Montgomery arithmetic modulo an odd `p < 2^62`.
struct Mont {
    p: u64,
    /// `−p⁻¹ mod 2^64`
    neg_inv: u64,
    /// `2^128 mod p`
    r2: u64,
}

impl Mont {
    fn new(p: u64) -> Mont {
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        Mont {
            p,
            neg_inv: inv.wrapping_neg(),
            r2: mul_mod(r, r, p),
        }
    }

    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let r = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    fn to(&self, a: u64) -> u64 {
        self.mul(a, self.r2)
    }

    fn from(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    fn inv(&self, a: u64) -> u64 {
        self.to(pow_mod(self.from(a), self.p - 2, self.p))
    }
}

/// Solves `a·c = b` mod `p` for an `n×m` system. `None` if the rank is
/// below `m` or the system is inconsistent.
fn solve_mod(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let mt = Mont::new(p);
    let m = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(r, &v)| r.iter().chain([&v]).map(|&x| mt.to(x)).collect())
        .collect();
    for col in 0..m {
        let piv = (col..rows.len()).find(|&i| rows[i][col] != 0)?;
        rows.swap(col, piv);
        let inv = mt.inv(rows[col][col]);
        for x in rows[col].iter_mut() {
            *x = mt.mul(*x, inv);
        }
        let pivot_row = rows[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == col || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                let t = mt.mul(f, y);
                *x = if *x >= t { *x - t } else { *x + p - t };
            }
        }
    }
    if rows[m..].iter().any(|row| row[m] != 0) {
        return None;
    }
    Some(rows[..m].iter().map(|row| mt.from(row[m])).collect())
}

/// `r/s ≡ a (mod modulus)` with `|r|, s ≤ √(modulus/2)`.
fn reconstruct(a: &BigInt, modulus: &BigInt) -> Option<Rational> {
    let bound = (modulus / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (modulus.clone(), a.mod_floor(modulus));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = core::mem::replace(&mut r1, r2);
        s0 = core::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(Rational::from_bigints(r1, s1))
}

/// Deterministic sample points with small nonzero integer coordinates,
/// and the generator values there, grown on demand.
pub(crate) struct SampleCache {
    gens: Vec<InvariantGenerator>,
    dim: usize,
    state: u64,
    points: Vec<Vec<Rational>>,
    values: Vec<Vec<Rational>>,
}

impl SampleCache {
    pub(crate) fn new(gens: Vec<InvariantGenerator>, dim: usize) -> SampleCache {
        SampleCache {
            gens,
            dim,
            state: 0x9e37_79b9_7f4a_7c15,
            points: Vec::new(),
            values: Vec::new(),
        }
    }

    fn next_coordinate(&mut self) -> i64 {
        self.state = self
            .state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        let v = ((self.state >> 33) % 13) as i64 - 6;
        if v >= 0 {
            v + 1
        } else {
            v
        }
    }

    fn ensure(&mut self, count: usize) {
        while self.points.len() < count {
            let pt: Vec<Rational> = (0..self.dim)
                .map(|_| Rational::integer(self.next_coordinate()))
                .collect();
            self.values.push(self.gens.iter().map(|g| g.evaluate(&pt)).collect());
            self.points.push(pt);
        }
    }
}

/// Generator and target values at sample points, scaled to integers.
///
/// Generator `i` is scaled by `den[i]`, the common denominator of its
/// values, so a monomial column is scaled by `Π den[i]^e_i`; each row is
/// scaled by the denominator of the target value.
struct Samples {
    exps: Vec<Vec<u32>>,
    /// `values[j][i]`: scaled value of generator `i` at point `j`
    values: Vec<Vec<BigInt>>,
    row_scale: Vec<BigInt>,
    rhs: Vec<BigInt>,
    column_scale: Vec<BigInt>,
}

fn lcm_all<'a>(xs: impl Iterator<Item = &'a BigInt>) -> BigInt {
    xs.fold(BigInt::one(), |acc, x| acc.lcm(x))
}

impl Samples {
    fn new(cache: &mut SampleCache, target: &InvariantGenerator, count: usize) -> Samples {
        cache.ensure(count);
        let weights: Vec<u32> = cache.gens.iter().map(|g| g.weight).collect();
        let exps = weighted_monomials(&weights, target.weight);
        let raw = &cache.values[..count];
        let den: Vec<BigInt> = (0..weights.len())
            .map(|i| lcm_all(raw.iter().map(|r| r[i].denom())))
            .collect();
        let values = raw
            .iter()
            .map(|r| r.iter().zip(&den).map(|(v, d)| v.numer() * (d / v.denom())).collect())
            .collect();
        let (mut row_scale, mut rhs) = (Vec::new(), Vec::new());
        for pt in &cache.points[..count] {
            let b = target.evaluate(pt);
            row_scale.push(b.denom().clone());
            rhs.push(b.numer().clone());
        }
        let column_scale = exps
            .iter()
            .map(|e| {
                e.iter()
                    .zip(&den)
                    .map(|(&k, d)| num_traits::pow(d.clone(), k as usize))
                    .product()
            })
            .collect();
        Samples {
            exps,
            values,
            row_scale,
            rhs,
            column_scale,
        }
    }

    fn is_zero_target(&self) -> bool {
        self.rhs.iter().all(Zero::is_zero)
    }

    /// The scaled system modulo `p`, or `None` if some denominator vanishes.
    fn reduce(&self, p: u64) -> Option<(Vec<Vec<u64>>, Vec<u64>)> {
        let pb = BigInt::from(p);
        let m = |x: &BigInt| x.mod_floor(&pb).to_u64().unwrap();
        let mut rows = Vec::with_capacity(self.values.len());
        let mut rhs = Vec::with_capacity(self.values.len());
        for ((vals, scale), b) in self.values.iter().zip(&self.row_scale).zip(&self.rhs) {
            let s = m(scale);
            if s == 0 {
                return None;
            }
            let v: Vec<u64> = vals.iter().map(m).collect();
            rows.push(
                self.exps
                    .iter()
                    .map(|e| {
                        e.iter()
                            .zip(&v)
                            .fold(s, |acc, (&k, &x)| mul_mod(acc, pow_mod(x, k as u64, p), p))
                    })
                    .collect(),
            );
            rhs.push(m(b));
        }
        if self.column_scale.iter().any(|c| m(c) == 0) {
            return None;
        }
        Some((rows, rhs))
    }

    /// Exact check of the scaled system at every point.
    fn check(&self, u: &[Rational]) -> bool {
        let common = lcm_all(u.iter().map(Rational::denom));
        let w: Vec<BigInt> = u.iter().map(|x| x.numer() * (&common / x.denom())).collect();
        let live: Vec<usize> = (0..w.len()).filter(|&m| !w[m].is_zero()).collect();
        self.values
            .iter()
            .zip(&self.row_scale)
            .zip(&self.rhs)
            .all(|((vals, scale), b)| {
                let mut sum = BigInt::zero();
                for &m in &live {
                    let mut t = w[m].clone();
                    for (&k, x) in self.exps[m].iter().zip(vals) {
                        if k > 0 {
                            t *= num_traits::pow(x.clone(), k as usize);
                        }
                    }
                    sum += t;
                }
                sum * scale == b * &common
            })
    }
}

/// Writes `target` as a polynomial in the cached generators, over
/// `symbols`. The generators must be algebraically independent.
pub(crate) fn express_by_sampling(
    cache: &mut SampleCache,
    target: &InvariantGenerator,
    symbols: &Namespace,
) -> Result<Polynomial> {
    let weights: Vec<u32> = cache.gens.iter().map(|g| g.weight).collect();
    let ncols = weighted_monomials(&weights, target.weight).len();
    if ncols == 0 {
        return if Samples::new(cache, target, EXTRA_POINTS).is_zero_target() {
            Ok(Polynomial::zero(symbols))
        } else {
            Err(Error::NotInSubring(format!(
                "nothing of weight {} among the generators",
                target.weight
            )))
        };
    }
    let s = Samples::new(cache, target, ncols + EXTRA_POINTS);
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); ncols];
    let mut modulus = BigInt::one();
    let mut used = 0;
    for p in primes() {
        if used == MAX_PRIMES {
            break;
        }
        let Some((a, b)) = s.reduce(p) else { continue };
        used += 1;
        let Some(sol) = solve_mod(&a, &b, p) else {
            return Err(Error::NotInSubring(format!(
                "weight {} is not a polynomial in the generators (or the sample is degenerate)",
                target.weight
            )));
        };
        // Chinese remaindering into the running modulus
        let pb = BigInt::from(p);
        let inv = BigInt::from(pow_mod((&modulus % &pb).to_u64().unwrap(), p - 2, p));
        for (r, &x) in residues.iter_mut().zip(&sol) {
            let diff = (BigInt::from(x) - &*r).mod_floor(&pb);
            *r += &modulus * ((diff * &inv) % &pb);
        }
        modulus *= &pb;
        let lifted: Option<Vec<Rational>> = residues.iter().map(|r| reconstruct(r, &modulus)).collect();
        if let Some(u) = lifted.filter(|u| s.check(u)) {
            let terms = s
                .exps
                .iter()
                .zip(u)
                .zip(&s.column_scale)
                .filter(|((_, x), _)| !x.is_zero())
                .map(|((e, x), c)| (Monomial::from_exponents(e.clone()), x * &Rational::from(c.clone())));
            return Ok(Polynomial::from_terms(symbols, terms));
        }
    }
    Err(Error::NotInSubring(format!(
        "no rational lift at weight {}",
        target.weight
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_000_007u64);
        let a = BigInt::from(-3) * BigInt::from(pow_mod(7, 1_000_000_005, 1_000_000_007)) % &m;
        assert_eq!(reconstruct(&a, &m), Some(Rational::new(-3, 7)));
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(1 << 40));
        let p = primes().next().unwrap();
        let sol = solve_mod(&[vec![2, 1], vec![1, 3], vec![1, 1]], &[5, 10, 4], p).unwrap();
        assert_eq!(sol, [1, 3]);
        assert!(solve_mod(&[vec![1, 1], vec![2, 2]], &[1, 2], p).is_none());
    }
}
