//! Möbius function, Witt counts and closed-form multiplier ranks.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};

/// Möbius function of `k >= 1`.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn mobius(k: u64) -> i8 {
    assert!(k >= 1, "mobius is defined on positive integers");
    let mut k = k;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u32;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of basic commutators of weight `w` on `d` letters,
/// `(1/w) * sum_{m | w} mu(m) d^(w/m)`.
pub fn chi(w: u32, d: impl Into<BigUint>) -> Result<BigUint> {
    if w == 0 {
        return Err(Error::InvalidArgument("weight must be at least 1".into()));
    }
    let d = BigInt::from_biguint(Sign::Plus, d.into());
    let mut sum = BigInt::zero();
    for m in divisors(w) {
        match mobius(m as u64) {
            0 => {}
            mu => {
                let term: BigInt = Pow::pow(&d, w / m);
                if mu > 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(w));
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "Witt divisor sum {sum} not divisible by weight {w}"
        )));
    }
    q.to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative Witt count for weight {w}")))
}

/// Which closed form produced a [`RankReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `c >= n`: weights `c+1 ..= c+n`.
    CGeN,
    /// `c <= n`: weights `n+1 ..= c+n`.
    CLeN,
    /// `(c,1)` polynilpotent multiplier, `chi(2, sum)`.
    PolynilpotentC1,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::CGeN => "c_ge_n",
            Branch::CLeN => "c_le_n",
            Branch::PolynilpotentC1 => "polynilpotent_c1",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "c_ge_n" => Some(Branch::CGeN),
            "c_le_n" => Some(Branch::CLeN),
            "polynilpotent_c1" => Some(Branch::PolynilpotentC1),
            _ => None,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rank of a multiplier together with the Witt counts it was assembled from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub n: u32,
    pub c: u32,
    pub m: u32,
    pub branch: Branch,
    pub rank: BigUint,
    /// `(weight, chi(weight, m))`
    pub summands: Vec<(u32, BigUint)>,
}

impl RankReport {
    pub fn summand_total(&self) -> BigUint {
        self.summands.iter().map(|(_, v)| v).sum()
    }
}

fn check_positive(n: u32, c: u32, m: u32) -> Result<()> {
    if n == 0 || c == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "n, c and m must all be at least 1 (got n={n}, c={c}, m={m})"
        )));
    }
    Ok(())
}

fn witt_summands(weights: std::ops::RangeInclusive<u32>, m: u32) -> Result<Vec<(u32, BigUint)>> {
    weights.map(|w| Ok((w, chi(w, m)?))).collect()
}

/// Rank of the `c`-nilpotent multiplier of the free nilpotent group of
/// class `n` and rank `m`.
pub fn nilpotent_multiplier_rank(n: u32, c: u32, m: u32) -> Result<RankReport> {
    check_positive(n, c, m)?;
    let ge = |branch| -> Result<RankReport> {
        let summands = witt_summands(c + 1..=c + n, m)?;
        let rank = summands.iter().map(|(_, v)| v).sum();
        Ok(RankReport { n, c, m, branch, rank, summands })
    };
    let le = |branch| -> Result<RankReport> {
        let summands = witt_summands(n + 1..=c + n, m)?;
        let rank = summands.iter().map(|(_, v)| v).sum();
        Ok(RankReport { n, c, m, branch, rank, summands })
    };
    match c.cmp(&n) {
        std::cmp::Ordering::Greater => ge(Branch::CGeN),
        std::cmp::Ordering::Less => le(Branch::CLeN),
        std::cmp::Ordering::Equal => {
            let a = ge(Branch::CGeN)?;
            let b = le(Branch::CLeN)?;
            if a.rank != b.rank {
                return Err(Error::Internal(format!(
                    "branches disagree at c = n = {n}, m = {m}: {} vs {}",
                    a.rank, b.rank
                )));
            }
            Ok(a)
        }
    }
}

/// Rank of the `(c,1)` polynilpotent multiplier, defined for `c > 2n - 2`.
pub fn polynilpotent_c1_rank(n: u32, c: u32, m: u32) -> Result<RankReport> {
    check_positive(n, c, m)?;
    if c + 2 <= 2 * n {
        return Err(Error::Domain(format!(
            "the (c,1) rank formula requires c > 2n-2, got n={n}, c={c} (2n-2 = {})",
            2 * n - 2
        )));
    }
    let summands = witt_summands(c + 1..=c + n, m)?;
    let y: BigUint = summands.iter().map(|(_, v)| v).sum();
    let rank = chi(2, y)?;
    Ok(RankReport {
        n,
        c,
        m,
        branch: Branch::PolynilpotentC1,
        rank,
        summands,
    })
}
