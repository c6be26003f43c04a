//! Divisor sums and residue-class divisor counts.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::field::Rational;

thread_local! {
    static DIVISORS: RefCell<HashMap<u64, Rc<Vec<u64>>>> = RefCell::new(HashMap::new());
}

/// Positive divisors of `n` in increasing order, memoized per thread.
pub fn divisors(n: u64) -> Rc<Vec<u64>> {
    assert!(n > 0, "divisors of zero");
    if let Some(d) = DIVISORS.with(|m| m.borrow().get(&n).cloned()) {
        return d;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    let v = Rc::new(small);
    DIVISORS.with(|m| m.borrow_mut().insert(n, v.clone()));
    v
}

/// `σ_k(n) = Σ_{d | n} d^k`.
pub fn sigma(n: u64, k: u32) -> BigInt {
    divisors(n).iter().map(|&d| BigInt::from(d).pow(k)).sum()
}

/// `σ_k` at a rational argument: zero off the integers and at zero.
pub fn sigma_at(x: &Rational, k: u32) -> BigInt {
    if !x.is_integer() || x.is_zero() {
        return BigInt::zero();
    }
    match x.to_integer().to_u64() {
        Some(n) => sigma(n, k),
        None => BigInt::zero(),
    }
}

/// Which divisors of `n` to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisorQuery {
    pub n: u64,
    pub residue: u64,
    pub modulus: u64,
    /// Only count `d` whose cofactor `n/d` is odd.
    pub odd_cofactor: bool,
}

/// `d_{j,k}(n)`: divisors of `n` congruent to `j` mod `k`.
pub fn d(n: u64, j: u64, k: u64) -> i64 {
    count(DivisorQuery { n, residue: j, modulus: k, odd_cofactor: false })
}

/// `d*_{j,k}(n)`: divisors `d ≡ j (mod k)` with `n/d` odd.
pub fn d_star(n: u64, j: u64, k: u64) -> i64 {
    count(DivisorQuery { n, residue: j, modulus: k, odd_cofactor: true })
}

pub fn count(q: DivisorQuery) -> i64 {
    if q.n == 0 {
        return 0;
    }
    divisors(q.n)
        .iter()
        .filter(|&&d| d % q.modulus == q.residue % q.modulus)
        .filter(|&&d| !q.odd_cofactor || (q.n / d) % 2 == 1)
        .count() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1, 3), BigInt::from(1));
        assert_eq!(sigma(6, 1), BigInt::from(12));
        assert_eq!(sigma(12, 3), BigInt::from(2044));
        assert_eq!(sigma(10, 5), BigInt::from(103_158));
        assert_eq!(sigma_at(&rat(5, 2), 3), BigInt::zero());
    }

    #[test]
    fn residue_counts() {
        assert_eq!(d(12, 1, 3), 2);
        assert_eq!(d(12, 2, 3), 1);
        assert_eq!(d(20, 4, 5), 1);
        assert_eq!(d(0, 1, 3), 0);
        assert_eq!(d_star(6, 1, 3), 0);
        assert_eq!(d_star(6, 2, 3), 1);
    }

    #[test]
    fn starred_count_is_difference() {
        // d*_{j,k}(n) = d_{j,k}(n) - d_{j,k}(n/2), the second term absent for odd n
        for n in 1..200u64 {
            for k in [3u64, 6] {
                for j in 1..k {
                    let half = if n % 2 == 0 { d(n / 2, j, k) } else { 0 };
                    assert_eq!(d_star(n, j, k), d(n, j, k) - half);
                }
            }
        }
    }
}
