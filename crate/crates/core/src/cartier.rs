//! Cartier data `m_sigma` and the untwistedness criterion.
//!
//! The cube is untwisted iff every entry of every `m_sigma` is nonnegative.
//! Both witness directions are constructive: a failing `(sigma, k)` yields a
//! hesitant lambda-walk, and a minimal hesitant lambda-walk yields a `sigma`
//! with a negative entry.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::twistedcube::DEFAULT_MAX_N;
use crate::walks::{WalkKind, WalkWitness};
use crate::weightword::{TwistData, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// `sigma in {+,-}^n`, written as a string such as `"-+-"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> SignVector {
        SignVector(signs)
    }

    pub fn all(n: usize, sign: Sign) -> SignVector {
        SignVector(vec![sign; n])
    }

    /// Minus exactly at the given 1-based positions.
    pub fn minus_at(n: usize, positions: &[usize]) -> SignVector {
        let mut v = vec![Sign::Plus; n];
        for &p in positions {
            v[p - 1] = Sign::Minus;
        }
        SignVector(v)
    }

    /// Position 1 is the most significant bit; a set bit is `-`. Counting
    /// `mask` upwards visits sign vectors in lexicographic order with `+ < -`.
    pub fn from_mask(n: usize, mask: u64) -> SignVector {
        SignVector(
            (1..=n)
                .map(|k| {
                    if mask >> (n - k) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sign at 1-based position `k`.
    pub fn get(&self, k: usize) -> Sign {
        self.0[k - 1]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignVector> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::Parse(format!("bad sign {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `m_sigma`, 1-based via [`CartierVector::get`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CartierVector(Vec<i64>);

impl CartierVector {
    pub fn get(&self, k: usize) -> i64 {
        self.0[k - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.0.iter().position(|&v| v < 0).map(|i| i + 1)
    }

    pub fn last_negative(&self) -> Option<usize> {
        self.0.iter().rposition(|&v| v < 0).map(|i| i + 1)
    }
}

/// `m_{sigma,k} = 0` if `sigma_k = +`, else `A_k(m_{sigma,k+1}, ..., m_{sigma,n})`.
pub fn compute_m(d: &TwistData, sigma: &SignVector) -> Result<CartierVector> {
    let n = d.n();
    if sigma.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: sigma.len(),
        });
    }
    let mut m = vec![0i64; n];
    for k in (1..=n).rev() {
        if sigma.get(k) == Sign::Minus {
            let mut v = d.ell(k);
            for p in k + 1..=n {
                v -= d.c(k, p) * m[p - 1];
            }
            m[k - 1] = v;
        }
    }
    Ok(CartierVector(m))
}

/// A failing sign vector: `m[k] < 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistWitness {
    pub sigma: SignVector,
    pub k: usize,
    pub m: CartierVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UntwistResult {
    pub untwisted: bool,
    pub witness: Option<TwistWitness>,
}

pub fn is_untwisted(d: &TwistData) -> Result<UntwistResult> {
    is_untwisted_capped(d, DEFAULT_MAX_N)
}

/// Sweeps all `2^n` sign vectors in lexicographic order (`+ < -`). On failure
/// the witness is the first failing `sigma` and its smallest negative index.
pub fn is_untwisted_capped(d: &TwistData, max_n: usize) -> Result<UntwistResult> {
    let n = d.n();
    if n > max_n || n >= 63 {
        return Err(Error::CapExceeded {
            size: n,
            cap: max_n.min(62),
        });
    }
    for mask in 0..(1u64 << n) {
        let sigma = SignVector::from_mask(n, mask);
        let m = compute_m(d, &sigma)?;
        if let Some(k) = m.first_negative() {
            return Ok(UntwistResult {
                untwisted: false,
                witness: Some(TwistWitness { sigma, k, m }),
            });
        }
    }
    Ok(UntwistResult {
        untwisted: true,
        witness: None,
    })
}

/// Greedy chain from a positive entry: starting at `start`, while
/// `l_{j_t} = 0` step to the smallest `q > j_t` with `c_{j_t q} < 0` and
/// `m_q > 0`. Ends at an index with `l > 0`.
pub(crate) fn increasing_lambda_chain(
    d: &TwistData,
    m: &CartierVector,
    start: usize,
) -> Result<Vec<usize>> {
    let n = d.n();
    if m.get(start) <= 0 {
        return Err(Error::PreconditionViolated(format!(
            "m[{start}] = {} is not positive",
            m.get(start)
        )));
    }
    if let Some(i) = (start + 1..=n).find(|&i| m.get(i) < 0) {
        return Err(Error::PreconditionViolated(format!(
            "m[{i}] = {} is negative past index {start}",
            m.get(i)
        )));
    }
    let mut chain = vec![start];
    let mut cur = start;
    while d.ell(cur) == 0 {
        cur = (cur + 1..=n)
            .find(|&q| d.c(cur, q) < 0 && m.get(q) > 0)
            .ok_or_else(|| {
                Error::PreconditionViolated(format!(
                    "no continuation from index {cur}; is every l nonnegative?"
                ))
            })?;
        chain.push(cur);
    }
    if d.ell(cur) < 0 {
        return Err(Error::PreconditionViolated(format!(
            "chain reached l[{cur}] = {} < 0",
            d.ell(cur)
        )));
    }
    Ok(chain)
}

/// From a failing `(sigma, k)` build a hesitant lambda-walk. `k` is first
/// moved to the largest index with `m[k] < 0`.
pub fn hesitant_walk_from_twist_witness(
    d: &TwistData,
    word: &Word,
    sigma: &SignVector,
    k: usize,
) -> Result<WalkWitness> {
    let n = d.n();
    if word.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: word.len(),
        });
    }
    crate::error::check_index(k, n)?;
    let m = compute_m(d, sigma)?;
    if m.get(k) >= 0 {
        return Err(Error::PreconditionViolated(format!(
            "m[{k}] = {} is not negative",
            m.get(k)
        )));
    }
    if let Some(j) = (1..=n).find(|&j| d.ell(j) < 0) {
        return Err(Error::PreconditionViolated(format!(
            "l[{j}] = {} is negative",
            d.ell(j)
        )));
    }
    let k = m.last_negative().expect("m[k] < 0");
    let p = (k + 1..=n)
        .find(|&p| d.c(k, p) > 0 && m.get(p) > 0)
        .ok_or_else(|| {
            Error::PreconditionViolated(format!("no p > {k} with c[{k},p] > 0 and m[p] > 0"))
        })?;
    let mut positions = vec![k];
    positions.extend(increasing_lambda_chain(d, &m, p)?);
    Ok(WalkWitness {
        positions,
        kind: WalkKind::HesitantLambdaWalk,
    })
}

/// Sign vector with `-` exactly on a minimal hesitant lambda-walk `J`, and its
/// Cartier vector; `m[j_0]` is negative.
pub fn witness_sigma_from_walk(
    d: &TwistData,
    positions: &[usize],
) -> Result<(SignVector, CartierVector)> {
    let n = d.n();
    let bad = |msg: String| Err(Error::NotMinimalWitness(msg));
    if positions.len() < 2 {
        return bad(format!("{positions:?} has fewer than two positions"));
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) || positions[0] == 0 || positions[positions.len() - 1] > n {
        return bad(format!("{positions:?} is not increasing within 1..={n}"));
    }
    let s = positions.len() - 1;
    let j = positions;
    if d.c(j[0], j[1]) <= 1 {
        return bad(format!("c[{},{}] = {} is not > 1", j[0], j[1], d.c(j[0], j[1])));
    }
    if d.ell(j[s]) <= 0 {
        return bad(format!("final l[{}] = {} is not positive", j[s], d.ell(j[s])));
    }
    if s == 1 {
        if d.ell(j[0]) != d.ell(j[1]) {
            return bad(format!("l[{}] != l[{}]", j[0], j[1]));
        }
    } else {
        for p in 0..s {
            if d.ell(j[p]) != 0 {
                return bad(format!("l[{}] = {} is not 0", j[p], d.ell(j[p])));
            }
        }
        for t in 1..s {
            if d.c(j[t], j[t + 1]) >= 0 {
                return bad(format!("c[{},{}] is not negative", j[t], j[t + 1]));
            }
        }
        for p in 1..=s {
            for q in p + 2..=s {
                if d.c(j[p], j[q]) != 0 {
                    return bad(format!("c[{},{}] = {} is not 0", j[p], j[q], d.c(j[p], j[q])));
                }
            }
        }
        for q in 3..=s {
            if d.c(j[0], j[q]) != 0 {
                return bad(format!("c[{},{}] = {} is not 0", j[0], j[q], d.c(j[0], j[q])));
            }
        }
    }
    let sigma = SignVector::minus_at(n, positions);
    let m = compute_m(d, &sigma)?;
    if m.get(j[0]) >= 0 {
        return bad(format!("m[{}] = {} is not negative", j[0], m.get(j[0])));
    }
    Ok((sigma, m))
}
