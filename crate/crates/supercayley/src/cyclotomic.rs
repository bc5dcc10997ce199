//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! Values are kept in canonical form: a rational coefficient vector of length
//! φ(n) over the power basis {1, ζ, …, ζ^{φ(n)−1}}, reduced modulo the n-th
//! cyclotomic polynomial. Arithmetic keeps the ambient order; reduction to the
//! smallest possible conductor happens only on explicit request.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Exact quotient of integer polynomials; panics if the division is not exact.
/// Both inputs ascending; divisor must be monic.
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            quot[k] = c.clone();
            for j in 0..=dd {
                rem[k + j] -= &c * &den[j];
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

fn cyclotomic_poly_big(n: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // (x^n - 1) / prod of the lower-order cyclotomic polynomials
        let mut f = vec![BigInt::zero(); n as usize + 1];
        f[0] = BigInt::from(-1);
        f[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d < n {
                let phid = cyclotomic_poly_big(d, memo);
                f = exact_div(&f, &phid);
            }
        }
        f
    };
    memo.insert(n, poly.clone());
    poly
}

/// Coefficients of the n-th cyclotomic polynomial, ascending, length φ(n)+1.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = memo.lock().unwrap();
    if let Some(p) = guard.get(&n) {
        return Arc::clone(p);
    }
    let mut big_memo = HashMap::new();
    let big = cyclotomic_poly_big(n, &mut big_memo);
    let small: Vec<i64> = big
        .iter()
        .map(|c| c.to_i64().expect("cyclotomic coefficient out of i64 range"))
        .collect();
    let arc = Arc::new(small);
    guard.insert(n, Arc::clone(&arc));
    arc
}

/// Canonical coefficient vectors of ζ_n^e for e in 0..n, all of length φ(n).
/// Built once per conductor and shared read-only afterwards.
struct PowerTable {
    n: u64,
    phi: usize,
    rows: Vec<Vec<i64>>,
}

fn power_table(n: u64) -> Arc<PowerTable> {
    static TABLES: OnceLock<Mutex<HashMap<u64, Arc<PowerTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return Arc::clone(t);
    }
    let phi = euler_phi(n) as usize;
    let cyc = cyclotomic_polynomial(n);
    let mut rows = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    rows.push(cur.clone());
    for _ in 1..n {
        // multiply by x, then fold the overflow term back with x^phi = -(lower part)
        let lead = cur[phi - 1];
        for k in (1..phi).rev() {
            cur[k] = cur[k - 1];
        }
        cur[0] = 0;
        if lead != 0 {
            for k in 0..phi {
                let delta = lead.checked_mul(cyc[k]).expect("power table overflow");
                cur[k] = cur[k].checked_sub(delta).expect("power table overflow");
            }
        }
        rows.push(cur.clone());
    }
    let arc = Arc::new(PowerTable { n, phi, rows });
    guard.insert(n, Arc::clone(&arc));
    arc
}

/// An exact element of Q(ζ_n) in canonical reduced form.
#[derive(Clone)]
pub struct CycNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero(n: u64) -> Self {
        assert!(n >= 1);
        CycNumber { order: n, coeffs: vec![BigRational::zero(); euler_phi(n) as usize] }
    }

    pub fn one(n: u64) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[0] = BigRational::one();
        x
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycNumber { order: 1, coeffs: vec![q] }
    }

    /// ζ_n^e, with e taken modulo n.
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        let table = power_table(n);
        let e = e.rem_euclid(n as i64) as usize;
        let coeffs = table.rows[e].iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        CycNumber { order: n, coeffs }
    }

    /// Σ_e counts[e] · ζ_n^e, reduced once. This is the fast path for
    /// character sums: tally exponents first, combine at the end.
    pub fn from_power_counts(n: u64, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), n as usize);
        let table = power_table(n);
        let mut acc = vec![0i128; table.phi];
        for (e, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &table.rows[e];
            for k in 0..table.phi {
                if row[k] != 0 {
                    acc[k] = acc[k]
                        .checked_add(c as i128 * row[k] as i128)
                        .expect("power count overflow");
                }
            }
        }
        let coeffs = acc
            .into_iter()
            .map(|v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        CycNumber { order: n, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-express in Q(ζ_m) for a multiple m of the current order.
    pub fn lift_to(&self, m: u64) -> CycNumber {
        assert!(m % self.order == 0, "target order must be a multiple");
        if m == self.order {
            return self.clone();
        }
        let table = power_table(m);
        let step = (m / self.order) as usize;
        let mut out = vec![BigRational::zero(); table.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table.rows[(i * step) % m as usize];
            for k in 0..table.phi {
                if row[k] != 0 {
                    out[k] += c * BigRational::from_integer(BigInt::from(row[k]));
                }
            }
        }
        CycNumber { order: m, coeffs: out }
    }

    fn common_order(&self, other: &CycNumber) -> u64 {
        self.order.lcm(&other.order)
    }

    pub fn add(&self, other: &CycNumber) -> CycNumber {
        let n = self.common_order(other);
        let mut a = self.lift_to(n);
        let b = other.lift_to(n);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycNumber) -> CycNumber {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNumber {
        CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &CycNumber) -> CycNumber {
        let n = self.common_order(other);
        let a = self.lift_to(n);
        let b = other.lift_to(n);
        let table = power_table(n);
        let phi = table.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut out = vec![BigRational::zero(); phi];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                out[k] += c;
            } else {
                let row = &table.rows[k % n as usize];
                for t in 0..phi {
                    if row[t] != 0 {
                        out[t] += &c * BigRational::from_integer(BigInt::from(row[t]));
                    }
                }
            }
        }
        CycNumber { order: n, coeffs: out }
    }

    pub fn scale(&self, q: &BigRational) -> CycNumber {
        CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn scale_int(&self, k: i64) -> CycNumber {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn pow(&self, mut k: u64) -> CycNumber {
        let mut base = self.clone();
        let mut acc = CycNumber::one(self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Apply the field automorphism ζ_n ↦ ζ_n^a for a coprime to n.
    pub fn galois(&self, a: u64) -> Result<CycNumber> {
        let n = self.order;
        if n == 1 {
            return Ok(self.clone());
        }
        if a.gcd(&n) != 1 {
            return Err(Error::invalid(format!("{a} is not invertible modulo {n}")));
        }
        let table = power_table(n);
        let mut out = vec![BigRational::zero(); table.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table.rows[((a as u128 * i as u128) % n as u128) as usize];
            for k in 0..table.phi {
                if row[k] != 0 {
                    out[k] += c * BigRational::from_integer(BigInt::from(row[k]));
                }
            }
        }
        Ok(CycNumber { order: n, coeffs: out })
    }

    pub fn conj(&self) -> CycNumber {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(self.order - 1).expect("n-1 is coprime to n")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_integer()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.coeffs[0].numer().clone())
        } else {
            None
        }
    }

    /// Floating-point evaluation at ζ_n = exp(2πi/n).
    pub fn approx(&self) -> Complex64 {
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
            acc += Complex64::from_polar(1.0, theta) * v;
        }
        acc
    }

    /// Smallest m dividing the order such that the value lies in Q(ζ_m),
    /// re-expressed over that smaller power basis.
    pub fn reduced_order(&self) -> CycNumber {
        let n = self.order;
        for m in divisors(n) {
            if m == n {
                break;
            }
            // fixed by Gal(Q(ζ_n)/Q(ζ_m)) = {a coprime to n : a ≡ 1 mod m}?
            let fixed = (1..n)
                .filter(|a| a.gcd(&n) == 1 && a % m == 1)
                .all(|a| self.galois(a).unwrap() == *self);
            if fixed {
                if let Some(x) = self.express_in(m) {
                    return x;
                }
            }
        }
        self.clone()
    }

    /// Solve for coordinates over the power basis of ζ_m (m | order).
    fn express_in(&self, m: u64) -> Option<CycNumber> {
        let n = self.order;
        let table = power_table(n);
        let phi_n = table.phi;
        let phi_m = euler_phi(m) as usize;
        // columns: canonical order-n coefficients of ζ_m^j
        let step = (n / m) as usize;
        let mut aug: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..phi_m)
                    .map(|j| BigRational::from_integer(BigInt::from(table.rows[(j * step) % n as usize][r])))
                    .collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        // Gaussian elimination
        let mut pivot_rows = Vec::new();
        let mut r0 = 0;
        for col in 0..phi_m {
            let Some(pr) = (r0..phi_n).find(|&r| !aug[r][col].is_zero()) else {
                return None;
            };
            aug.swap(r0, pr);
            let inv = aug[r0][col].recip();
            for c in col..=phi_m {
                let v = &aug[r0][c] * &inv;
                aug[r0][c] = v;
            }
            for r in 0..phi_n {
                if r != r0 && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for c in col..=phi_m {
                        let v = &aug[r][c] - &factor * &aug[r0][c];
                        aug[r][c] = v;
                    }
                }
            }
            pivot_rows.push(r0);
            r0 += 1;
        }
        // consistency: remaining rows must have zero RHS
        for r in r0..phi_n {
            if !aug[r][phi_m].is_zero() {
                return None;
            }
        }
        let coeffs = (0..phi_m).map(|c| aug[pivot_rows[c]][phi_m].clone()).collect();
        Some(CycNumber { order: m, coeffs })
    }

    /// Coefficients rendered as exact rational strings (lowest terms).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let n = self.common_order(other);
        self.lift_to(n).coeffs == other.lift_to(n).coeffs
    }
}

impl Eq for CycNumber {}

impl std::fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyc[n={}; {}]", self.order, self)
    }
}

impl std::fmt::Display for CycNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_mag = mag.is_one();
            if k == 0 || !unit_mag {
                write!(f, "{mag}")?;
            }
            if k == 1 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "z{}", self.order)?;
            } else if k > 1 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "z{}^{}", self.order, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        CycNumber::add(self, rhs)
    }
}

impl std::ops::Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        CycNumber::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        CycNumber::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber::neg(self)
    }
}

/// An automorphism ζ_n ↦ ζ_n^a of Q(ζ_n), for a invertible modulo n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisElement {
    order: u64,
    a: u64,
}

impl GaloisElement {
    pub fn new(order: u64, a: u64) -> Result<Self> {
        let a = a % order.max(1);
        if order > 1 && a.gcd(&order) != 1 {
            return Err(Error::invalid(format!("{a} is not invertible modulo {order}")));
        }
        Ok(GaloisElement { order, a })
    }

    pub fn exponent(&self) -> u64 {
        self.a
    }

    pub fn apply(&self, x: &CycNumber) -> Result<CycNumber> {
        if x.order() != self.order {
            return Err(Error::invalid(format!(
                "automorphism of order {} applied to a value of order {}",
                self.order,
                x.order()
            )));
        }
        x.galois(self.a)
    }
}

/// Validate that `elems` is a subgroup of (Z/n)^× and return it sorted.
pub fn validate_unit_subgroup(n: u64, elems: &[u64]) -> Result<Vec<u64>> {
    let mut sorted: Vec<u64> = elems.iter().map(|&a| a % n.max(1)).collect();
    sorted.sort_unstable();
    sorted.dedup();
    if n == 1 {
        return Ok(vec![0]);
    }
    for &a in &sorted {
        if a.gcd(&n) != 1 {
            return Err(Error::invalid(format!("{a} is not invertible modulo {n}")));
        }
    }
    if !sorted.contains(&1) {
        return Err(Error::invalid("subgroup must contain 1"));
    }
    for &a in &sorted {
        for &b in &sorted {
            let p = (a as u128 * b as u128 % n as u128) as u64;
            if sorted.binary_search(&p).is_err() {
                return Err(Error::invalid(format!(
                    "set is not closed under multiplication mod {n}: {a}*{b}"
                )));
            }
        }
    }
    Ok(sorted)
}

/// True iff x is fixed by every automorphism ζ ↦ ζ^a with a in the subgroup.
pub fn is_fixed_by(x: &CycNumber, subgroup: &[u64]) -> Result<bool> {
    let h = validate_unit_subgroup(x.order(), subgroup)?;
    if x.order() == 1 {
        return Ok(true);
    }
    for a in h {
        if x.galois(a)? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact multiset equality, comparing canonical forms at a common conductor.
pub fn multiset_eq(a: &[CycNumber], b: &[CycNumber]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut n = 1u64;
    for x in a.iter().chain(b) {
        n = n.lcm(&x.order());
    }
    let mut ka: Vec<Vec<BigRational>> = a.iter().map(|x| x.lift_to(n).coeffs).collect();
    let mut kb: Vec<Vec<BigRational>> = b.iter().map(|x| x.lift_to(n).coeffs).collect();
    ka.sort();
    kb.sort();
    ka == kb
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(n: u64, e: i64) -> CycNumber {
        CycNumber::root_of_unity(n, e)
    }

    #[test]
    fn basic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105)[7], -2);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(zeta(4, 1).mul(&zeta(4, 1)), CycNumber::from_integer(-1));
    }

    #[test]
    fn sixth_root_pair_sums_to_one() {
        // 2cos(pi/3) = 1, equivalently reduction modulo x^2 - x + 1
        assert_eq!(zeta(6, 1).add(&zeta(6, 5)), CycNumber::from_integer(1));
    }

    #[test]
    fn full_nontrivial_root_sum() {
        let s = zeta(5, 1).add(&zeta(5, 2)).add(&zeta(5, 3)).add(&zeta(5, 4));
        assert_eq!(s, CycNumber::from_integer(-1));
    }

    #[test]
    fn cyclotomic_vanishes_at_primitive_root() {
        for n in 1..=200u64 {
            let cyc = cyclotomic_polynomial(n);
            let mut counts = vec![0i64; n as usize];
            for (k, &c) in cyc.iter().enumerate() {
                counts[k % n as usize] += c;
            }
            let v = CycNumber::from_power_counts(n, &counts);
            assert!(v.is_zero(), "phi_{n} not zero at zeta_{n}");
        }
    }

    #[test]
    fn galois_identity_and_conjugation() {
        let x = zeta(12, 1).add(&CycNumber::from_integer(3));
        assert_eq!(x.galois(1).unwrap(), x);
        let c = x.conj();
        assert_eq!(c, zeta(12, 11).add(&CycNumber::from_integer(3)));
        // conjugation is an involution
        assert_eq!(c.conj(), x);
    }

    #[test]
    fn galois_swaps_quadratic_conjugates() {
        let a = zeta(5, 1).add(&zeta(5, 4));
        let b = zeta(5, 2).add(&zeta(5, 3));
        assert_eq!(a.galois(2).unwrap(), b);
        assert_eq!(a.add(&b), CycNumber::from_integer(-1));
    }

    #[test]
    fn fixed_field_membership() {
        let x = zeta(5, 1).add(&zeta(5, 4));
        assert!(is_fixed_by(&x, &[1, 4]).unwrap());
        assert!(!is_fixed_by(&zeta(5, 1), &[1, 4]).unwrap());
        assert!(is_fixed_by(&CycNumber::from_integer(7).lift_to(5), &[1, 2, 3, 4]).unwrap());
        // {1, 2} is not closed mod 5
        assert!(is_fixed_by(&zeta(5, 1), &[1, 2]).is_err());
    }

    #[test]
    fn approx_golden_ratio() {
        let x = zeta(5, 1).add(&zeta(5, 4));
        let expected = (-1.0 + 5.0f64.sqrt()) / 2.0;
        let v = x.approx();
        assert!((v.re - expected).abs() < 1e-12, "{} vs {expected}", v.re);
        assert!(v.im.abs() < 1e-12);
        // independent route: sum of cosines
        let cos_sum = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((v.re - cos_sum).abs() < 1e-12);
    }

    #[test]
    fn order_reduction() {
        let x = zeta(9, 3);
        let r = x.reduced_order();
        assert_eq!(r.order(), 3);
        assert_eq!(r, zeta(3, 1));
        assert_eq!(x, zeta(3, 1), "equality lifts across orders");

        let q = CycNumber::from_integer(4).lift_to(12);
        assert_eq!(q.reduced_order().order(), 1);
    }

    #[test]
    fn equality_across_orders() {
        assert_eq!(zeta(3, 1), zeta(6, 2));
        assert_ne!(zeta(3, 1), zeta(6, 1));
        assert!(multiset_eq(
            &[zeta(3, 1), CycNumber::from_integer(2)],
            &[CycNumber::from_integer(2).lift_to(6), zeta(6, 2)]
        ));
        assert!(!multiset_eq(&[zeta(3, 1)], &[zeta(3, 2)]));
    }

    #[test]
    fn power_count_builder_matches_explicit_sum() {
        let mut counts = vec![0i64; 12];
        counts[3] = 2;
        counts[11] = -1;
        let fast = CycNumber::from_power_counts(12, &counts);
        let slow = zeta(12, 3).scale_int(2).sub(&zeta(12, 11));
        assert_eq!(fast, slow);
    }

    fn arb_cyc(n: u64) -> impl Strategy<Value = CycNumber> {
        let phi = euler_phi(n) as usize;
        prop::collection::vec(-6i64..=6, phi).prop_map(move |v| {
            let coeffs = v
                .into_iter()
                .map(|c| BigRational::from_integer BigInt::from(c))
                .collect();
            CycNumber { order: n, coeffs }
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(n in prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 36, 45, 60]),
                       seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let phi = euler_phi(n) as usize;
            let rand_cyc = |rng: &mut rand_chacha::ChaCha8Rng| {
                let coeffs = (0..phi)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5))))
                    .collect();
                CycNumber { order: n, coeffs }
            };
            let (x, y, z) = (rand_cyc(&mut rng), rand_cyc(&mut rng), rand_cyc(&mut rng));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            // automorphisms respect multiplication
            let a = (1..n).find(|a| num_integer::gcd(*a, n) == 1 && *a != 1).unwrap_or(1);
            prop_assert_eq!(x.mul(&y).galois(a).unwrap(), x.galois(a).unwrap().mul(&y.galois(a).unwrap()));
        }

        #[test]
        fn approx_is_multiplicative(n in prop::sample::select(vec![3u64, 7, 16, 25, 48, 90, 150, 200]),
                                    seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let phi = euler_phi(n) as usize;
            let rand_cyc = |rng: &mut rand_chacha::ChaCha8Rng| {
                let coeffs = (0..phi)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                    .collect();
                CycNumber { order: n, coeffs }
            };
            let (x, y) = (rand_cyc(&mut rng), rand_cyc(&mut rng));
            let lhs = x.mul(&y).approx();
            let rhs = x.approx() * y.approx();
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }
    }
}
