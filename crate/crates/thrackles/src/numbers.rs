//! Certified rational arithmetic: interval enclosures for ln and the
//! Euler–Mascheroni constant, exact integer square roots, directed-rounding
//! harmonic sums, and the closed-form convex-antithickness value for complete
//! graphs. Floating point never appears here; every comparison a caller makes
//! against these enclosures is exact.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_usize(n: usize) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A closed interval [lo, hi] of rationals known to contain a real value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn new(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Q) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn add_scalar(&self, x: &Q) -> Interval {
        Interval::new(&self.lo + x, &self.hi + x)
    }

    /// Scale by a rational of either sign.
    pub fn scale(&self, x: &Q) -> Interval {
        if x.is_negative() {
            Interval::new(&self.hi * x, &self.lo * x)
        } else {
            Interval::new(&self.lo * x, &self.hi * x)
        }
    }

    pub fn contains(&self, x: &Q) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    /// The value `x` is certainly ≤ the enclosed real.
    pub fn certainly_ge(&self, x: &Q) -> bool {
        *x <= self.lo
    }

    /// The value `x` is certainly ≥ the enclosed real.
    pub fn certainly_le(&self, x: &Q) -> bool {
        *x >= self.hi
    }
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt_u128(x: u128) -> u128 {
    x.sqrt()
}

pub fn isqrt_big(x: &BigUint) -> BigUint {
    x.sqrt()
}

/// Enclosure of √x for x ≥ 0, with endpoints differing by at most
/// 2^(−bits) / denom(x).
pub fn sqrt_interval(x: &Q, bits: u32) -> Result<Interval> {
    if x.is_negative() {
        return Err(Error::InvalidInput("sqrt of negative rational".into()));
    }
    // √(N/D) = √(N·D)/D; scale by 4^bits so the integer root carries the
    // fractional precision.
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let scaled = n * d << (2 * bits);
    let s = isqrt_big(&scaled);
    let den = BigInt::from(d << bits);
    let lo = Q::new(BigInt::from(s.clone()), den.clone());
    let hi = Q::new(BigInt::from(s + BigUint::one()), den);
    Ok(Interval::new(lo, hi))
}

/// Enclosure of ln x for x > 0 via the atanh series after reduction to
/// [1, 2). With t = (z−1)/(z+1) ∈ [0, 1/3], the tail after N odd terms is
/// bounded by 2·t^(2N+1) / ((2N+1)(1−t²)).
pub fn ln_interval(x: &Q, terms: usize) -> Result<Interval> {
    if !x.is_positive() {
        return Err(Error::InvalidInput("ln of non-positive rational".into()));
    }
    if *x < Q::one() {
        return Ok(ln_interval(&x.recip(), terms)?.neg());
    }
    let two = q_int(2);
    let mut z = x.clone();
    let mut k = 0i64;
    while z >= two {
        z /= &two;
        k += 1;
    }
    let series = atanh_series_interval(&z, terms);
    let ln2 = ln2_interval(terms);
    Ok(series.add(&ln2.scale(&q_int(k))))
}

/// Enclosure of ln 2.
pub fn ln2_interval(terms: usize) -> Interval {
    // ln 2 = 2 atanh(1/3)
    atanh_like(&q(1, 3), terms)
}

/// Enclosure of ln z for z ∈ [1, 2) via 2 atanh((z−1)/(z+1)).
fn atanh_series_interval(z: &Q, terms: usize) -> Interval {
    let t = (z - Q::one()) / (z + Q::one());
    atanh_like(&t, terms)
}

/// Enclosure of 2 atanh t for t ∈ [0, 1/2).
fn atanh_like(t: &Q, terms: usize) -> Interval {
    assert!(!t.is_negative() && *t < q(1, 2));
    if t.is_zero() {
        return Interval::point(Q::zero());
    }
    let t2 = t * t;
    let mut power = t.clone(); // t^(2j+1)
    let mut sum = Q::zero();
    for j in 0..terms {
        sum += &power / q_int(2 * j as i64 + 1);
        power *= &t2;
    }
    sum *= q_int(2);
    // power now holds t^(2*terms+1)
    let tail = q_int(2) * power / (q_int(2 * terms as i64 + 1) * (Q::one() - t2));
    Interval::new(sum.clone(), sum + tail)
}

/// Enclosure of the Euler–Mascheroni constant, 40 correct decimals.
pub fn gamma_interval() -> Interval {
    let digits = "5772156649015328606065120900824024310421";
    let num: BigInt = digits.parse().expect("static digit string");
    let den = BigInt::from(10u8).pow(40);
    let lo = Q::new(num.clone(), den.clone());
    let hi = Q::new(num + BigInt::one(), den);
    Interval::new(lo, hi)
}

/// Enclosure of the harmonic number H(n) = Σ_{i≤n} 1/i by directed rounding
/// of every term to a multiple of 2^(−96).
pub fn harmonic_interval(n: u64) -> Interval {
    const SHIFT: u32 = 96;
    let unit = 1u128 << SHIFT;
    let mut lo_acc: u128 = 0;
    let mut hi_acc: u128 = 0;
    for i in 1..=n as u128 {
        let fl = unit / i;
        lo_acc += fl;
        hi_acc += if unit % i == 0 { fl } else { fl + 1 };
    }
    let den = BigInt::one() << SHIFT;
    Interval::new(
        Q::new(BigInt::from(lo_acc), den.clone()),
        Q::new(BigInt::from(hi_acc), den),
    )
}

/// Exact rational harmonic number, for cross-checking the dyadic enclosure.
pub fn harmonic_exact(n: u64) -> Q {
    (1..=n).map(|i| q(1, i as i64)).sum()
}

/// Convex antithickness of the complete graph:
/// n − ⌊√(2n+¼) − ½⌋ = n − (⌊√(8n+1)⌋ − 1)/2.
pub fn ctn_complete_formula(n: u64) -> u64 {
    let s = isqrt_u128(8 * n as u128 + 1) as u64;
    n - (s - 1) / 2
}

/// Enclosure of the closed-form upper bound n − √(n/2) − (ln n)/2 + 4.
pub fn ctn_upper_bound_interval(n: u64) -> Result<Interval> {
    let nq = q_int(n as i64);
    let sqrt_half_n = sqrt_interval(&(nq.clone() / q_int(2)), 96)?;
    let ln_n = ln_interval(&nq, 48)?;
    Ok(Interval::point(nq + q_int(4))
        .sub(&sqrt_half_n)
        .sub(&ln_n.scale(&q(1, 2))))
}

/// Lower bound 2⌊(n+1)/3⌋ − 1 on the convex antithickness of K_n.
pub fn ctn_lower_bound(n: u64) -> u64 {
    2 * ((n + 1) / 3) - 1
}

/// Enclosure of n·ln(2n), the cap on the thrackled-matching class count.
pub fn n_ln_2n_interval(n: u64) -> Result<Interval> {
    let ln_2n = ln_interval(&q_int(2 * n as i64), 48)?;
    Ok(ln_2n.scale(&q_int(n as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(s: &str) -> Q {
        // parse "a.b" into an exact rational
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let sign = if int.starts_with('-') { -1 } else { 1 };
        let num: BigInt = format!("{}{}", int.trim_start_matches('-'), frac)
            .parse()
            .unwrap();
        let den = BigInt::from(10u8).pow(frac.len() as u32);
        Q::new(num * BigInt::from(sign), den)
    }

    #[test]
    fn isqrt_values() {
        assert_eq!(isqrt_u128(0), 0);
        assert_eq!(isqrt_u128(15), 3);
        assert_eq!(isqrt_u128(16), 4);
        assert_eq!(isqrt_u128(10_000_000_019), 100_000);
        assert_eq!(
            isqrt_big(&BigUint::from(u128::MAX)),
            BigUint::from(18446744073709551615u128)
        );
    }

    #[test]
    fn sqrt_enclosure_tight() {
        let iv = sqrt_interval(&q_int(2), 64).unwrap();
        assert!(&iv.lo * &iv.lo <= q_int(2));
        assert!(&iv.hi * &iv.hi >= q_int(2));
        assert!(iv.width() <= Q::new(BigInt::one(), BigInt::one() << 64));
        let exact = sqrt_interval(&q_int(49), 8).unwrap();
        assert!(exact.contains(&q_int(7)));
    }

    #[test]
    fn ln_known_values() {
        // each window must land inside a correct 17-digit decimal bracket
        let ln2 = ln2_interval(48);
        assert!(ln2.lo > dec("0.69314718055994530") && ln2.hi < dec("0.69314718055994531"));
        assert!(ln2.width() < dec("0.0000000000000000000001"));
        let ln10 = ln_interval(&q_int(10), 48).unwrap();
        assert!(ln10.lo > dec("2.30258509299404568") && ln10.hi < dec("2.30258509299404569"));
        let ln1 = ln_interval(&q_int(1), 16).unwrap();
        assert!(ln1.contains(&Q::zero()) && ln1.width() < dec("0.000001"));
        // reciprocal symmetry
        let lnhalf = ln_interval(&q(1, 2), 48).unwrap();
        assert!(lnhalf.lo > dec("-0.69314718055994531") && lnhalf.hi < dec("-0.69314718055994530"));
        // a large argument
        let lnm = ln_interval(&q_int(1_000_000), 48).unwrap();
        assert!(lnm.lo > dec("13.81551055796427410") && lnm.hi < dec("13.81551055796427411"));
    }

    #[test]
    fn gamma_window() {
        let g = gamma_interval();
        assert!(g.contains(&dec("0.57721566490153286060651209008240243104215")));
        assert!(g.lo > dec("0.5772156") && g.hi < dec("0.5772157"));
    }

    #[test]
    fn harmonic_small_exact() {
        assert_eq!(harmonic_exact(1), q_int(1));
        assert_eq!(harmonic_exact(2), q(3, 2));
        assert_eq!(harmonic_exact(6), q(49, 20));
        for n in 1..=100 {
            let iv = harmonic_interval(n);
            assert!(iv.contains(&harmonic_exact(n)), "H({n}) outside window");
            assert!(iv.width() <= Q::new(BigInt::from(n), BigInt::one() << 96));
        }
    }

    #[test]
    fn harmonic_log_gamma_sandwich() {
        // ln n + γ ≤ H(n) < ln n + γ + 1/(2n)
        for n in [2u64, 10, 100, 1000, 10_000] {
            let h = harmonic_interval(n);
            let base = ln_interval(&q_int(n as i64), 48).unwrap().add(&gamma_interval());
            // certified: lower end of H window above upper end of ln n + γ window
            assert!(h.lo >= base.hi, "lower sandwich fails at n={n}");
            let upper = base.add_scalar(&Q::new(BigInt::one(), BigInt::from(2 * n)));
            assert!(h.hi < upper.lo, "upper sandwich fails at n={n}");
        }
    }

    #[test]
    fn ctn_formula_values() {
        let expected = [
            (3, 1),
            (4, 2),
            (5, 3),
            (6, 3),
            (7, 4),
            (8, 5),
            (9, 6),
            (10, 6),
            (15, 10),
            (21, 15),
        ];
        for (n, v) in expected {
            assert_eq!(ctn_complete_formula(n), v, "n={n}");
        }
        // n − ctn(K_n) is the largest k with k(k+1)/2 ≤ n
        for n in 3..200u64 {
            let k = n - ctn_complete_formula(n);
            assert!(k * (k + 1) / 2 <= n);
            assert!((k + 1) * (k + 2) / 2 > n);
        }
    }

    #[test]
    fn ctn_bounds_sandwich_formula() {
        // 2⌊(n+1)/3⌋−1 ≤ ctn(K_n) ≤ n − √(n/2) − (ln n)/2 + 4, certified
        for n in [12u64, 24, 48, 64, 128, 1000] {
            let v = q_int(ctn_complete_formula(n) as i64);
            assert!(q_int(ctn_lower_bound(n) as i64) <= v);
            let upper = ctn_upper_bound_interval(n).unwrap();
            assert!(upper.certainly_ge(&v), "upper bound fails at n={n}");
        }
    }

    #[test]
    fn interval_ops() {
        let a = Interval::new(q_int(1), q_int(2));
        let b = Interval::new(q(1, 2), q_int(1));
        let s = a.add(&b);
        assert_eq!(s.lo, q(3, 2));
        assert_eq!(s.hi, q_int(3));
        let d = a.sub(&b);
        assert_eq!(d.lo, Q::zero());
        assert_eq!(d.hi, q(3, 2));
        let n = a.scale(&q_int(-2));
        assert_eq!(n.lo, q_int(-4));
        assert_eq!(n.hi, q_int(-2));
    }
}
