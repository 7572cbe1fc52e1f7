//! Lunar squares, higher powers and their roots, lunar primes, and
//! Pythagorean triples.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{LunarError, Result};
use crate::nat::LunarNat;

/// Calls `f` on every number whose digit `j` lies in `0..=bounds[j]`,
/// in odometer order (lowest digit fastest).
pub(crate) fn for_each_bounded(base: u32, bounds: &[u32], mut f: impl FnMut(LunarNat)) {
    let mut digits = vec![0u32; bounds.len()];
    loop {
        f(LunarNat::from_raw(base, digits.clone()));
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            if digits[pos] < bounds[pos] {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Every number with exactly `len` digits (top digit nonzero).
fn for_each_of_length(base: u32, len: usize, mut f: impl FnMut(LunarNat)) {
    if len == 0 {
        f(LunarNat::from_raw(base, Vec::new()));
        return;
    }
    for_each_bounded(base, &vec![base - 1; len], |m| {
        if m.len() == len {
            f(m)
        }
    });
}

/// Length of `m^k` for a nonzero `m` of `len` digits and `k >= 1`.
///
/// The top digit of the product is the min of the two top digits, which is
/// nonzero, so lengths add like polynomial degrees.
fn power_len(len: usize, k: u32) -> usize {
    k as usize * (len - 1) + 1
}

/// Upper bounds on the digits of any `m` with `m^k` dominated by `n`.
///
/// Position `k*j` of `m^k` is at least `min(m_j, .., m_j) = m_j`, so
/// `m_j <= n_{k*j}`.
fn root_digit_bounds(n: &LunarNat, k: u32, root_len: usize) -> Vec<u32> {
    (0..root_len).map(|j| n.digit(k as usize * j)).collect()
}

/// All `m` with `m^k = n`, sorted. Empty when `n` is not a `k`-th power.
///
/// # Panics
///
/// If `k == 0` (every number is a root of the identity).
pub fn nth_roots(n: &LunarNat, k: u32) -> Vec<LunarNat> {
    assert!(k >= 1, "k-th roots need k >= 1");
    if n.is_zero() {
        return vec![n.clone()];
    }
    let len = n.len();
    if !(len - 1).is_multiple_of(k as usize) {
        return Vec::new();
    }
    let root_len = (len - 1) / k as usize + 1;
    let mut bounds = root_digit_bounds(n, k, root_len);
    // m^k keeps the lowest and highest digits of m.
    let (lo, hi) = (n.digit(0), n.digit(len - 1));
    if bounds[0] < lo || bounds[root_len - 1] < hi {
        return Vec::new();
    }
    bounds[0] = lo;
    bounds[root_len - 1] = hi;
    let mut roots = Vec::new();
    for_each_bounded(n.base(), &bounds, |m| {
        if m.len() == root_len && m.digit(0) == lo && m.pow(k) == *n {
            roots.push(m);
        }
    });
    roots.sort();
    roots
}

/// All `m` with `m * m = n`. Lunar squaring is not injective, so this is a
/// set (returned sorted).
pub fn square_roots(n: &LunarNat) -> Vec<LunarNat> {
    nth_roots(n, 2)
}

pub fn is_square(n: &LunarNat) -> bool {
    !square_roots(n).is_empty()
}

/// All distinct `k`-th powers with at most `max_digits` digits, including
/// zero, in length-lex order.
pub fn enumerate_powers(base: u32, k: u32, max_digits: usize) -> Result<Vec<LunarNat>> {
    LunarNat::zero(base)?;
    if k == 0 {
        return Err(LunarError::InvalidSpec("power must be at least 1".into()));
    }
    if max_digits == 0 {
        return Err(LunarError::InvalidSpec(
            "max_digits must be at least 1".into(),
        ));
    }
    let root_len = (max_digits - 1) / k as usize + 1;
    let mut out = BTreeSet::new();
    for_each_bounded(base, &vec![base - 1; root_len], |m| {
        let p = m.pow(k);
        debug_assert!(m.is_zero() || p.len() == power_len(m.len(), k));
        out.insert(p);
    });
    Ok(out.into_iter().collect())
}

/// All distinct lunar squares with at most `max_digits` digits.
pub fn enumerate_squares(base: u32, max_digits: usize) -> Result<Vec<LunarNat>> {
    enumerate_powers(base, 2, max_digits)
}

/// All distinct `k`-th powers dominated by `total`, sorted.
pub fn powers_dominated_by(total: &LunarNat, k: u32) -> Vec<LunarNat> {
    assert!(k >= 1, "powers need k >= 1");
    let mut out = BTreeSet::new();
    if total.is_zero() {
        out.insert(total.clone());
        return out.into_iter().collect();
    }
    let root_len = (total.len() - 1) / k as usize + 1;
    let bounds = root_digit_bounds(total, k, root_len);
    for_each_bounded(total.base(), &bounds, |m| {
        let p = m.pow(k);
        if total.dominates_unchecked(&p) {
            out.insert(p);
        }
    });
    out.into_iter().collect()
}

/// Largest `b` (digitwise) with `a * b` dominated by `n`.
///
/// The set of such `b` is closed under lunar addition (multiplication
/// distributes), so it has a greatest element.
fn max_cofactor(a: &LunarNat, n: &LunarNat) -> LunarNat {
    let top = n.base() - 1;
    let digits = (0..n.len())
        .map(|j| {
            a.digits()
                .iter()
                .enumerate()
                .filter(|&(i, &ai)| ai > n.digit(i + j))
                .map(|(i, _)| n.digit(i + j))
                .min()
                .unwrap_or(top)
        })
        .collect();
    LunarNat::from_raw(n.base(), digits)
}

/// Some factorization `n = a * b` with neither factor the identity, if any.
///
/// Every candidate `a` up to half the length is tried; for each, the
/// largest cofactor decides whether any cofactor works.
pub fn nontrivial_factorization(n: &LunarNat) -> Option<(LunarNat, LunarNat)> {
    let base = n.base();
    if n.is_zero() {
        let z = n.clone();
        return Some((z.clone(), z));
    }
    let len = n.len();
    let mut found = None;
    for p in 1..=len.div_ceil(2) {
        for_each_of_length(base, p, |a| {
            if found.is_some() || a.is_identity() {
                return;
            }
            let b = max_cofactor(&a, n);
            if &a * &b != *n {
                return;
            }
            if !b.is_identity() {
                found = Some((a, b));
                return;
            }
            // Every cofactor lies below the identity: only single digits.
            for d in 0..base - 1 {
                let small = LunarNat::from_raw(base, vec![d]);
                if &a * &small == *n {
                    found = Some((a, small));
                    return;
                }
            }
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// A lunar prime is not the identity and factors only as `n * identity`.
pub fn is_prime(n: &LunarNat) -> bool {
    !n.is_identity() && nontrivial_factorization(n).is_none()
}

/// All lunar primes with at most `max_digits` digits, in length-lex order.
pub fn enumerate_primes(base: u32, max_digits: usize) -> Result<Vec<LunarNat>> {
    LunarNat::zero(base)?;
    let mut out = Vec::new();
    for len in 1..=max_digits {
        for_each_of_length(base, len, |m| {
            if is_prime(&m) {
                out.push(m);
            }
        });
    }
    out.sort();
    Ok(out)
}

/// A lunar Pythagorean triple `a^2 + b^2 = c^2` with `a, b, c` pairwise
/// distinct and `a <= b` in length-lex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple {
    a: LunarNat,
    b: LunarNat,
    c: LunarNat,
}

impl Triple {
    /// Validates the equation and distinctness; legs are put in canonical
    /// order.
    pub fn new(a: LunarNat, b: LunarNat, c: LunarNat) -> Result<Self> {
        let (a, b) = if b < a { (b, a) } else { (a, b) };
        let lhs = a.pow(2).try_add(&b.pow(2))?;
        let rhs = c.pow(2);
        if lhs.base() != rhs.base() {
            return Err(LunarError::BaseMismatch(lhs.base(), rhs.base()));
        }
        if lhs != rhs {
            return Err(LunarError::InvalidParams(format!(
                "{a}^2 + {b}^2 = {lhs}, but {c}^2 = {rhs}"
            )));
        }
        if a == b || b == c || a == c {
            return Err(LunarError::InvalidParams("triple is not distinct".into()));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> &LunarNat {
        &self.a
    }

    pub fn b(&self) -> &LunarNat {
        &self.b
    }

    pub fn c(&self) -> &LunarNat {
        &self.c
    }
}

/// All distinct triples whose legs have at most `max_leg_digits` digits
/// (zero included), sorted by `(a, b, c)`.
pub fn find_triples(base: u32, max_leg_digits: usize) -> Result<Vec<Triple>> {
    LunarNat::zero(base)?;
    if max_leg_digits == 0 {
        return Err(LunarError::InvalidSpec(
            "max_leg_digits must be at least 1".into(),
        ));
    }
    let mut legs = Vec::new();
    for_each_bounded(base, &vec![base - 1; max_leg_digits], |m| legs.push(m));
    legs.sort();
    let squares: Vec<LunarNat> = legs.iter().map(|m| m.pow(2)).collect();

    let mut out = Vec::new();
    for i in 0..legs.len() {
        for j in i + 1..legs.len() {
            let sum = &squares[i] + &squares[j];
            for c in square_roots(&sum) {
                if c != legs[i] && c != legs[j] {
                    out.push(Triple {
                        a: legs[i].clone(),
                        b: legs[j].clone(),
                        c,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> LunarNat {
        LunarNat::parse(s, 10).unwrap()
    }

    fn brute_square_roots(target: &LunarNat, max_len: usize) -> Vec<LunarNat> {
        let mut out = Vec::new();
        for_each_bounded(target.base(), &vec![target.base() - 1; max_len], |m| {
            if m.pow(2) == *target {
                out.push(m);
            }
        });
        out.sort();
        out
    }

    fn brute_is_prime(target: &LunarNat) -> bool {
        if target.is_identity() || target.is_zero() {
            return false;
        }
        let base = target.base();
        let len = target.len();
        let mut all = Vec::new();
        for_each_bounded(base, &vec![base - 1; len], |m| all.push(m));
        for a in &all {
            for b in &all {
                if !a.is_identity() && !b.is_identity() && &(a * b) == target {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn square_root_examples() {
        assert!(square_roots(&n("557")).contains(&n("57")));
        assert_eq!(square_roots(&n("0")), vec![n("0")]);
        assert!(square_roots(&n("439")).is_empty());
        assert!(square_roots(&n("4444")).is_empty());
    }

    #[test]
    fn square_roots_match_brute_force() {
        for target in enumerate_squares(10, 3).unwrap() {
            assert_eq!(square_roots(&target), brute_square_roots(&target, 2));
        }
        for text in ["439", "101", "998", "110", "909"] {
            assert_eq!(square_roots(&n(text)), brute_square_roots(&n(text), 3));
        }
        for target in enumerate_squares(3, 5).unwrap() {
            assert_eq!(square_roots(&target), brute_square_roots(&target, 3));
        }
    }

    #[test]
    fn squaring_is_not_injective() {
        let b = |s: &str| LunarNat::parse(s, 2).unwrap();
        assert_eq!(b("11011").pow(2), b("11111").pow(2));
        let roots = square_roots(&b("111111111"));
        assert!(roots.contains(&b("11011")) && roots.contains(&b("11111")));
        // Four-digit roots in base 10 still square injectively.
        assert_eq!(enumerate_squares(10, 7).unwrap().len(), 10_000);
    }

    #[test]
    fn enumerate_squares_examples() {
        let sq = enumerate_squares(10, 3).unwrap();
        assert_eq!(sq.len(), 100);
        assert!(!sq.contains(&n("439")));
        assert_eq!(
            enumerate_squares(2, 1).unwrap(),
            vec![
                LunarNat::parse("0", 2).unwrap(),
                LunarNat::parse("1", 2).unwrap()
            ]
        );
        let single: Vec<_> = (0..10).map(|d| n(&d.to_string())).collect();
        assert_eq!(enumerate_squares(10, 1).unwrap(), single);
        assert!(sq.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn powers_dominated_by_matches_filter() {
        let total = n("448");
        let direct: Vec<_> = enumerate_squares(10, 3)
            .unwrap()
            .into_iter()
            .filter(|s| total.dominates(s).unwrap())
            .collect();
        assert_eq!(powers_dominated_by(&total, 2), direct);
        let cubes: Vec<_> = enumerate_powers(10, 3, 4)
            .unwrap()
            .into_iter()
            .filter(|s| n("4448").dominates(s).unwrap())
            .collect();
        assert_eq!(powers_dominated_by(&n("4448"), 3), cubes);
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(&n("439")));
        assert!(!is_prime(&n("5")));
        let one = LunarNat::parse("1", 2).unwrap();
        assert!(!is_prime(&one));
        assert!(one.is_identity());
        assert!(!is_prime(&n("0")));
        assert!(!is_prime(&n("9")));
    }

    #[test]
    fn is_prime_matches_brute_force_up_to_three_digits() {
        for len in 1..=3 {
            for_each_of_length(10, len, |m| {
                assert_eq!(is_prime(&m), brute_is_prime(&m), "{m}");
            });
        }
        for len in 1..=4 {
            for_each_of_length(3, len, |m| {
                assert_eq!(is_prime(&m), brute_is_prime(&m), "{m:?}");
            });
        }
    }

    #[test]
    fn factorization_witness_multiplies_back() {
        let (a, b) = nontrivial_factorization(&n("13")).unwrap();
        assert_eq!(&a * &b, n("13"));
        assert!(!a.is_identity() && !b.is_identity());
    }

    #[test]
    fn triple_examples() {
        let triples = find_triples(10, 2).unwrap();
        let want = Triple::new(n("4"), n("22"), n("24")).unwrap();
        assert!(triples.contains(&want));
        assert!(triples
            .iter()
            .all(|t| !(t.a() == &n("3") && t.b() == &n("3"))));
        assert!(Triple::new(n("3"), n("3"), n("3")).is_err());
        assert!(find_triples(2, 1).unwrap().is_empty());
    }

    #[test]
    fn triples_satisfy_their_equation() {
        for t in find_triples(10, 2).unwrap() {
            assert_eq!(&t.a().pow(2) + &t.b().pow(2), t.c().pow(2));
            assert!(t.a() < t.b());
            assert!(t.a() != t.c() && t.b() != t.c());
        }
    }
}
