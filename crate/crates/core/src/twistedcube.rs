//! The twisted cube `C(c, l)`, its density, the polytope `P_D`, and exact
//! lattice-point enumeration.

use std::ops::RangeInclusive;

use num_rational::Ratio;
use num_traits::{Num, Zero};
use serde::Serialize;

use crate::error::{check_index, Error, Result};
use crate::weightword::TwistData;

pub type Rational = Ratio<i64>;

/// Default cap on the dimension accepted by the enumerator.
pub const DEFAULT_MAX_N: usize = 20;

fn check_dim(d: &TwistData, len: usize) -> Result<()> {
    if len != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: len,
        });
    }
    Ok(())
}

/// `A_j(x) = l_j - sum_{k > j} c_jk x_k`; only `x_{j+1..n}` are read.
fn a_value<T: Copy + Num + From<i64>>(d: &TwistData, j: usize, x: &[T]) -> T {
    let mut a = T::from(d.ell(j));
    for k in j + 1..=d.n() {
        let c = d.c(j, k);
        if c != 0 {
            a = a - T::from(c) * x[k - 1];
        }
    }
    a
}

/// The one place the strict/weak split lives: `a < x < 0` or `0 <= x <= a`.
fn coordinate_admitted<T: Zero + PartialOrd>(a: T, x: T) -> bool {
    let zero = T::zero();
    (a < x && x < zero) || (zero <= x && x <= a)
}

/// Integers `x` with `coordinate_admitted(a, x)`: `0..=a` when `a >= 0`,
/// otherwise the open interval `a < x < 0`.
pub fn admissible_integers(a: i64) -> RangeInclusive<i64> {
    if a >= 0 {
        0..=a
    } else {
        a + 1..=-1
    }
}

/// `sgn(x) = 1` for `x < 0` and `-1` for `x >= 0`.
fn sgn<T: Zero + PartialOrd>(x: &T) -> i8 {
    if *x < T::zero() {
        1
    } else {
        -1
    }
}

/// `(-1)^n prod_k sgn(x_k)`.
fn sign_product<T: Zero + PartialOrd>(x: &[T]) -> i8 {
    let parity: i8 = if x.len() % 2 == 0 { 1 } else { -1 };
    x.iter().fold(parity, |acc, v| acc * sgn(v))
}

pub fn eval_a(d: &TwistData, j: usize, x: &[Rational]) -> Result<Rational> {
    check_index(j, d.n())?;
    check_dim(d, x.len())?;
    Ok(a_value(d, j, x))
}

fn contains_generic<T: Copy + Num + From<i64> + PartialOrd>(d: &TwistData, x: &[T]) -> bool {
    (1..=d.n()).all(|j| coordinate_admitted(a_value(d, j, x), x[j - 1]))
}

fn contains_pd_generic<T: Copy + Num + From<i64> + PartialOrd>(d: &TwistData, x: &[T]) -> bool {
    (1..=d.n()).all(|j| {
        let xj = x[j - 1];
        T::zero() <= xj && xj <= a_value(d, j, x)
    })
}

pub fn contains(d: &TwistData, x: &[Rational]) -> Result<bool> {
    check_dim(d, x.len())?;
    Ok(contains_generic(d, x))
}

pub fn contains_integer(d: &TwistData, x: &[i64]) -> Result<bool> {
    check_dim(d, x.len())?;
    Ok(contains_generic(d, x))
}

pub fn density(d: &TwistData, x: &[Rational]) -> Result<i8> {
    Ok(if contains(d, x)? { sign_product(x) } else { 0 })
}

pub fn density_integer(d: &TwistData, x: &[i64]) -> Result<i8> {
    Ok(if contains_integer(d, x)? {
        sign_product(x)
    } else {
        0
    })
}

pub fn contains_pd(d: &TwistData, x: &[Rational]) -> Result<bool> {
    check_dim(d, x.len())?;
    Ok(contains_pd_generic(d, x))
}

pub fn contains_pd_integer(d: &TwistData, x: &[i64]) -> Result<bool> {
    check_dim(d, x.len())?;
    Ok(contains_pd_generic(d, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusPoint {
    pub x: Vec<i64>,
    pub rho: i8,
}

/// Integer points of `C(c, l)` with their densities, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticeCensus {
    pub points: Vec<CensusPoint>,
    pub positive: usize,
    pub negative: usize,
}

impl LatticeCensus {
    pub fn signed(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

pub fn lattice_points(d: &TwistData) -> Result<LatticeCensus> {
    lattice_points_capped(d, DEFAULT_MAX_N)
}

pub fn lattice_points_capped(d: &TwistData, max_n: usize) -> Result<LatticeCensus> {
    if d.n() > max_n {
        return Err(Error::CapExceeded {
            size: d.n(),
            cap: max_n,
        });
    }
    let mut census = LatticeCensus::default();
    let mut x = vec![0i64; d.n()];
    enumerate_level(d, d.n(), &mut x, &mut census);
    census.points.sort_by(|a, b| a.x.cmp(&b.x));
    Ok(census)
}

// Fills coordinates `level, level-1, ..., 1`; coordinates above `level` are fixed.
fn enumerate_level(d: &TwistData, level: usize, x: &mut Vec<i64>, census: &mut LatticeCensus) {
    if level == 0 {
        let rho = sign_product(x);
        if rho > 0 {
            census.positive += 1;
        } else {
            census.negative += 1;
        }
        census.points.push(CensusPoint { x: x.clone(), rho });
        return;
    }
    let a = a_value(d, level, x);
    for v in admissible_integers(a) {
        x[level - 1] = v;
        enumerate_level(d, level - 1, x, census);
    }
    x[level - 1] = 0;
}

pub fn signed_count(d: &TwistData) -> Result<i64> {
    Ok(lattice_points(d)?.signed())
}
