//! The base parameter `q` and all scalar q-combinatorial quantities:
//! q-numbers, q-factorials, q-binomial and q-multinomial coefficients,
//! and the finite q-shifted factorial.
//!
//! A [`QContext`] fixes a rational `q` with `0 < q < 1`, or the classical
//! limit `q = 1` in which `[a]_q := a` (the limit of `(1-q^a)/(1-q)`).
//! Contexts are cheap to clone and safe to share across threads; the memo
//! tables behind them are filled under a lock and never change a value
//! once written.

use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, parse_rat, rat_pow, Rat};

/// Order of a q-shifted factorial: a finite number of factors, or the
/// infinite product (which this crate does not evaluate).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOrder {
    Finite(u32),
    Infinite,
}

#[derive(Default)]
struct Memo {
    /// q^0, q^1, q^2, ...
    qpow: Vec<Rat>,
    /// [0]_q, [1]_q, [2]_q, ...
    qnum: Vec<Rat>,
    /// [0]_q!, [1]_q!, [2]_q!, ...
    qfact: Vec<Rat>,
}

struct Inner {
    q: Rat,
    classical: bool,
    memo: RwLock<Memo>,
}

/// A fixed base `q` plus memo tables for the quantities derived from it.
#[derive(Clone)]
pub struct QContext {
    inner: Arc<Inner>,
}

impl PartialEq for QContext {
    fn eq(&self, other: &Self) -> bool {
        // q determines everything; memo state is invisible.
        self.inner.q == other.inner.q
    }
}

impl Eq for QContext {}

impl fmt::Debug for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QContext(q={})", format_rat(&self.inner.q))
    }
}

impl fmt::Display for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rat(&self.inner.q))
    }
}

impl QContext {
    /// Context for a rational `q` with `0 < q < 1`.
    pub fn new(q: Rat) -> Result<Self> {
        if !(q.is_positive() && q < Rat::one()) {
            return Err(Error::InvalidQ(format_rat(&q)));
        }
        Ok(Self::build(q, false))
    }

    /// The classical limit `q = 1`, where every q-quantity reduces to
    /// its ordinary counterpart.
    pub fn classical() -> Self {
        Self::build(Rat::one(), true)
    }

    /// Parse a q token: `1` selects the classical limit, anything else
    /// must be a rational in `(0, 1)`.
    pub fn parse(token: &str) -> Result<Self> {
        let q = parse_rat(token).map_err(|_| Error::InvalidQ(token.to_string()))?;
        if q.is_one() {
            Ok(Self::classical())
        } else {
            Self::new(q)
        }
    }

    fn build(q: Rat, classical: bool) -> Self {
        let memo = Memo {
            qpow: vec![Rat::one()],
            qnum: vec![Rat::zero()],
            qfact: vec![Rat::one()],
        };
        QContext {
            inner: Arc::new(Inner {
                q,
                classical,
                memo: RwLock::new(memo),
            }),
        }
    }

    pub fn q(&self) -> &Rat {
        &self.inner.q
    }

    pub fn is_classical(&self) -> bool {
        self.inner.classical
    }

    /// Grow the memo tables to cover index `n`. The fill uses only
    /// multiplication, so it is exact in both modes:
    /// q^a = q*q^{a-1}, [a]_q = 1 + q*[a-1]_q, [a]_q! = [a]_q*[a-1]_q!.
    fn ensure(&self, n: usize) {
        {
            let memo = self.inner.memo.read().unwrap();
            if memo.qnum.len() > n {
                return;
            }
        }
        let mut memo = self.inner.memo.write().unwrap();
        while memo.qnum.len() <= n {
            let i = memo.qnum.len();
            let qp = &memo.qpow[i - 1] * self.q();
            let num = Rat::one() + self.q() * &memo.qnum[i - 1];
            let fact = &memo.qfact[i - 1] * &num;
            memo.qpow.push(qp);
            memo.qnum.push(num);
            memo.qfact.push(fact);
        }
    }

    /// q^e for any integer `e` (negative exponents invert q).
    pub fn q_pow(&self, e: i64) -> Rat {
        if e >= 0 {
            let e = e as usize;
            self.ensure(e);
            self.inner.memo.read().unwrap().qpow[e].clone()
        } else {
            rat_pow(self.q(), e)
        }
    }

    /// q^{k(k-1)/2}, the weight attached to the k-th term of the
    /// q-binomial expansion of (x+y)_q^n.
    pub fn q_tri_pow(&self, k: i64) -> Rat {
        self.q_pow(k * (k - 1) / 2)
    }

    /// The q-number `[a]_q = (1-q^a)/(1-q)`; `a` itself in the classical
    /// limit. Defined for every integer `a`.
    pub fn q_number(&self, a: i64) -> Rat {
        if self.is_classical() {
            return Rat::from_integer(a.into());
        }
        if a >= 0 {
            let a = a as usize;
            self.ensure(a);
            self.inner.memo.read().unwrap().qnum[a].clone()
        } else {
            let one = Rat::one();
            (&one - self.q_pow(a)) / (&one - self.q())
        }
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
    pub fn q_factorial(&self, n: u32) -> Rat {
        let n = n as usize;
        self.ensure(n);
        self.inner.memo.read().unwrap().qfact[n].clone()
    }

    /// `[2n]_q!! = [2n]_q [2n-2]_q ... [2]_q`; empty product for n = 0.
    pub fn q_double_factorial(&self, n: u32) -> Rat {
        (1..=n as i64).fold(Rat::one(), |acc, j| acc * self.q_number(2 * j))
    }

    /// The q-binomial (Gaussian) coefficient. Zero outside `0 <= k <= n`,
    /// which keeps convolution sums index-safe.
    pub fn q_binomial(&self, n: u32, k: i64) -> Rat {
        if k < 0 || k > n as i64 {
            return Rat::zero();
        }
        let k = k as u32;
        self.q_factorial(n) / (self.q_factorial(k) * self.q_factorial(n - k))
    }

    /// `[n]_q! / ([i_1]_q! ... [i_k]_q!)`. Panics unless the parts sum
    /// to `n`; a mismatch is a caller bug, not a data condition.
    pub fn q_multinomial(&self, n: u32, parts: &[u32]) -> Rat {
        let sum: u64 = parts.iter().map(|&p| p as u64).sum();
        assert_eq!(sum, n as u64, "multinomial parts must sum to n");
        parts
            .iter()
            .fold(self.q_factorial(n), |acc, &p| acc / self.q_factorial(p))
    }

    /// The q-shifted factorial `(a;q)_n = prod_{j=0}^{n-1} (1 - q^j a)`.
    /// Only finite orders are exact; the infinite product is rejected.
    pub fn q_shifted_factorial(&self, a: &Rat, order: ProductOrder) -> Result<Rat> {
        let n = match order {
            ProductOrder::Finite(n) => n,
            ProductOrder::Infinite => return Err(Error::InfiniteProduct),
        };
        let mut acc = Rat::one();
        for j in 0..n as i64 {
            acc *= Rat::one() - self.q_pow(j) * a;
        }
        Ok(acc)
    }
}

/// All ordered tuples of `k` nonnegative integers summing to `n`.
/// Used by the multinomial pairing identities and the higher-order
/// Genocchi convolutions; k = 0 yields one empty tuple iff n = 0.
pub fn compositions(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if n == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if k == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=n {
            prefix.push(first);
            go(n - first, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn half() -> QContext {
        QContext::new(rat(1, 2)).unwrap()
    }

    #[test]
    fn q_number_examples() {
        assert_eq!(half().q_number(2), rat(3, 2));
        assert_eq!(QContext::classical().q_number(5), rint(5));
        assert_eq!(half().q_number(0), Rat::zero());
        assert_eq!(QContext::classical().q_number(-3), rint(-3));
        // [-1]_q = (1 - q^{-1})/(1 - q) = -1/q
        assert_eq!(half().q_number(-1), rint(-2));
    }

    #[test]
    fn q_number_shift_recurrence() {
        // [a+1]_q = 1 + q*[a]_q across the whole grid, negative a included.
        for tok in ["1/3", "1/2", "2/3", "9/10", "1"] {
            let ctx = QContext::parse(tok).unwrap();
            for a in -5..=8 {
                assert_eq!(
                    ctx.q_number(a + 1),
                    Rat::one() + ctx.q() * ctx.q_number(a),
                    "q={tok}, a={a}"
                );
            }
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(half().q_factorial(0), Rat::one());
        // direct product oracle: 1 * 3/2 * 7/4
        assert_eq!(half().q_factorial(3), rat(21, 8));
        assert_eq!(QContext::classical().q_factorial(4), rint(24));
    }

    #[test]
    fn q_double_factorial_examples() {
        assert_eq!(half().q_double_factorial(0), Rat::one());
        assert_eq!(QContext::classical().q_double_factorial(3), rint(48));
        assert_eq!(half().q_double_factorial(1), rat(3, 2));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(half().q_binomial(7, 0), Rat::one());
        assert_eq!(QContext::classical().q_binomial(4, 2), rint(6));
        assert_eq!(half().q_binomial(2, 1), rat(3, 2));
        assert_eq!(half().q_binomial(3, -1), Rat::zero());
        assert_eq!(half().q_binomial(3, 4), Rat::zero());
    }

    #[test]
    fn q_pascal_recurrence() {
        // [n,k] = [n-1,k-1] + q^k [n-1,k], n <= 20.
        for tok in ["1/3", "1/2", "9/10", "1"] {
            let ctx = QContext::parse(tok).unwrap();
            for n in 1..=20u32 {
                for k in 0..=n as i64 {
                    let lhs = ctx.q_binomial(n, k);
                    let rhs =
                        ctx.q_binomial(n - 1, k - 1) + ctx.q_pow(k) * ctx.q_binomial(n - 1, k);
                    assert_eq!(lhs, rhs, "q={tok}, n={n}, k={k}");
                }
            }
        }
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(half().q_multinomial(5, &[5]), Rat::one());
        assert_eq!(QContext::classical().q_multinomial(3, &[1, 1, 1]), rint(6));
        assert_eq!(half().q_multinomial(2, &[1, 1]), half().q_binomial(2, 1));
    }

    #[test]
    #[should_panic(expected = "must sum to n")]
    fn q_multinomial_part_sum_mismatch_panics() {
        half().q_multinomial(3, &[1, 1]);
    }

    #[test]
    fn q_shifted_factorial_examples() {
        let ctx = half();
        assert_eq!(
            ctx.q_shifted_factorial(&rint(5), ProductOrder::Finite(0)).unwrap(),
            Rat::one()
        );
        assert_eq!(
            ctx.q_shifted_factorial(&Rat::one(), ProductOrder::Finite(3)).unwrap(),
            Rat::zero()
        );
        // (1 - 1/2)(1 - 1/4)
        assert_eq!(
            ctx.q_shifted_factorial(&rat(1, 2), ProductOrder::Finite(2)).unwrap(),
            rat(3, 8)
        );
        assert_eq!(
            ctx.q_shifted_factorial(&rat(1, 2), ProductOrder::Infinite),
            Err(Error::InfiniteProduct)
        );
    }

    #[test]
    fn classical_mode_matches_integer_combinatorics() {
        let ctx = QContext::classical();
        let fact = |n: u32| (1..=n as i64).product::<i64>().max(1);
        for n in 0..=10u32 {
            assert_eq!(ctx.q_factorial(n), rint(fact(n)));
            for k in 0..=n as i64 {
                let classical = fact(n) / (fact(k as u32) * fact(n - k as u32));
                assert_eq!(ctx.q_binomial(n, k), rint(classical));
            }
        }
    }

    #[test]
    fn cache_transparency() {
        // Memoized values agree with a from-scratch product.
        let ctx = QContext::new(rat(2, 3)).unwrap();
        let direct: Rat = (1..=12).map(|j| ctx.q_number(j)).product();
        assert_eq!(ctx.q_factorial(12), direct);
        // And survive concurrent readers.
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let ctx = ctx.clone();
                std::thread::spawn(move || ctx.q_factorial(30))
            })
            .collect();
        let expect = ctx.q_factorial(30);
        for h in handles {
            assert_eq!(h.join().unwrap(), expect);
        }
    }

    #[test]
    fn context_parsing_and_validation() {
        assert!(QContext::parse("1").unwrap().is_classical());
        assert!(!QContext::parse("1/2").unwrap().is_classical());
        assert!(QContext::parse("0").is_err());
        assert!(QContext::parse("3/2").is_err());
        assert!(QContext::parse("-1/2").is_err());
        assert!(QContext::parse("x").is_err());
        assert!(QContext::new(Rat::one()).is_err());
    }

    #[test]
    fn compositions_enumeration() {
        assert_eq!(compositions(4, 1), vec![vec![4]]);
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(compositions(3, 0).is_empty());
        // count of weak compositions of n into k parts is C(n+k-1, k-1)
        assert_eq!(compositions(5, 3).len(), 21);
    }
}
