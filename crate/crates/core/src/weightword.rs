//! Words, dominant weights, and the twisted-cube constants they determine.
//!
//! Pairing order matters here. For positions `j < k` of a word with roots
//! `beta_j = alpha_{i_j}`, the constant is `c_{jk} = <beta_k, beta_j^vee>`,
//! which is `RootData::pairing(i_k, i_j)`: row `i_k`, column `i_j`. In type B
//! a word `(r, r-1)` therefore gets `c_{12} = pairing(r-1, r) = -2`.

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Error, Result};
use crate::rootdata::{LieType, RootData};

/// A sequence of 1-based simple-root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(entries: Vec<usize>) -> Word {
        Word(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Root at 1-based position `p`.
    pub fn root(&self, p: usize) -> usize {
        self.0[p - 1]
    }

    pub fn validate(&self, t: LieType) -> Result<()> {
        for &i in &self.0 {
            if i == 0 || i > t.rank() {
                return Err(Error::DimensionMismatch {
                    expected: t.rank(),
                    found: i,
                });
            }
        }
        Ok(())
    }

    /// The subword at the given 1-based positions.
    pub fn subword(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&p| self.root(p)).collect())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// `lambda = sum_i lambda_i varpi_i` with every `lambda_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(coefficients: Vec<i64>) -> Result<DominantWeight> {
        if let Some(bad) = coefficients.iter().find(|&&v| v < 0) {
            return Err(Error::Parse(format!(
                "weight coefficient {bad} is negative; only dominant weights are supported"
            )));
        }
        Ok(DominantWeight(coefficients))
    }

    pub fn zero(rank: usize) -> DominantWeight {
        DominantWeight(vec![0; rank])
    }

    /// `k * varpi_i` in the given rank.
    pub fn fundamental(rank: usize, i: usize, k: i64) -> DominantWeight {
        let mut v = vec![0; rank];
        v[i - 1] = k;
        DominantWeight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    /// Coefficient on `varpi_i`, 1-based.
    pub fn coefficient(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn scaled(&self, factor: i64) -> DominantWeight {
        assert!(factor >= 0);
        DominantWeight(self.0.iter().map(|v| v * factor).collect())
    }

    /// `alpha_i` appears in `lambda` iff `lambda_i > 0`.
    pub fn appears(&self, i: usize) -> Result<bool> {
        check_index(i, self.rank())?;
        Ok(self.0[i - 1] > 0)
    }
}

impl<'de> Deserialize<'de> for DominantWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        DominantWeight::new(v).map_err(serde::de::Error::custom)
    }
}

pub fn appears_in_lambda(lambda: &DominantWeight, i: usize) -> Result<bool> {
    lambda.appears(i)
}

/// The integers `{c_jk}` (for `j < k`) and `(l_1, ..., l_n)` that define one
/// twisted cube. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistData {
    n: usize,
    // dense n x n, only the strict upper triangle is meaningful
    c: Vec<i64>,
    ell: Vec<i64>,
}

impl TwistData {
    /// All `c_jk = 0`.
    pub fn new(ell: Vec<i64>) -> TwistData {
        let n = ell.len();
        TwistData {
            n,
            c: vec![0; n * n],
            ell,
        }
    }

    /// Raw construction from explicit `((j, k), c_jk)` entries; omitted entries are 0.
    pub fn from_entries(
        ell: Vec<i64>,
        entries: impl IntoIterator<Item = ((usize, usize), i64)>,
    ) -> Result<TwistData> {
        let mut d = TwistData::new(ell);
        for ((j, k), v) in entries {
            d.set_c(j, k, v)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn c(&self, j: usize, k: usize) -> i64 {
        debug_assert!(1 <= j && j < k && k <= self.n);
        self.c[(j - 1) * self.n + (k - 1)]
    }

    pub fn set_c(&mut self, j: usize, k: usize, value: i64) -> Result<()> {
        check_index(j, self.n)?;
        check_index(k, self.n)?;
        if j >= k {
            return Err(Error::Parse(format!(
                "c entries are indexed by j < k, got ({j}, {k})"
            )));
        }
        self.c[(j - 1) * self.n + (k - 1)] = value;
        Ok(())
    }

    #[inline]
    pub fn ell(&self, j: usize) -> i64 {
        self.ell[j - 1]
    }

    pub fn ells(&self) -> &[i64] {
        &self.ell
    }

    /// Nonzero `c` entries in `(j, k)` order.
    pub fn nonzero_c(&self) -> Vec<((usize, usize), i64)> {
        let mut out = Vec::new();
        for j in 1..=self.n {
            for k in j + 1..=self.n {
                let v = self.c(j, k);
                if v != 0 {
                    out.push(((j, k), v));
                }
            }
        }
        out
    }

    pub fn with_ell(&self, ell: Vec<i64>) -> TwistData {
        assert_eq!(ell.len(), self.n);
        TwistData {
            n: self.n,
            c: self.c.clone(),
            ell,
        }
    }
}

/// Constants of the twisted cube attached to a word and a dominant weight.
pub fn derive_twist_data(rd: &RootData, word: &Word, lambda: &DominantWeight) -> Result<TwistData> {
    let t = rd.lie_type();
    if lambda.rank() != t.rank() {
        return Err(Error::DimensionMismatch {
            expected: t.rank(),
            found: lambda.rank(),
        });
    }
    word.validate(t)?;
    let roots = word.entries();
    let n = roots.len();
    let mut d = TwistData::new(roots.iter().map(|&i| lambda.coefficient(i)).collect());
    for j in 0..n {
        for k in j + 1..n {
            // <beta_k, beta_j^vee>
            d.c[j * n + k] = rd.entry(roots[k], roots[j]);
        }
    }
    Ok(d)
}

/// A (type, word, weight) triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Instance {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub word: Word,
    pub weight: DominantWeight,
}

impl Instance {
    pub fn new(lie_type: LieType, word: Word, weight: DominantWeight) -> Result<Instance> {
        let inst = Instance {
            lie_type,
            word,
            weight,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.weight.rank() != self.lie_type.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.lie_type.rank(),
                found: self.weight.rank(),
            });
        }
        self.word.validate(self.lie_type)
    }

    pub fn twist_data(&self) -> Result<TwistData> {
        self.twist_data_for(&self.weight)
    }

    /// Twist data for the same word with another weight.
    pub fn twist_data_for(&self, weight: &DominantWeight) -> Result<TwistData> {
        derive_twist_data(&self.lie_type.root_data(), &self.word, weight)
    }
}
