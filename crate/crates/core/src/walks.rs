//! Diagram walks, lambda-walks and hesitant lambda-walks; detection,
//! minimality and minimization of witnesses.

use serde::{Deserialize, Serialize};

use crate::cartier::{compute_m, increasing_lambda_chain, SignVector};
use crate::error::{check_index, Error, Result};
use crate::rootdata::RootData;
use crate::weightword::{DominantWeight, TwistData, Word};

/// Largest word the exhaustive detector accepts.
pub const NAIVE_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkKind {
    DiagramWalk,
    LambdaWalk,
    HesitantWalk,
    HesitantLambdaWalk,
}

/// Strictly increasing 1-based positions into a word, plus the claimed kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WalkWitness {
    pub positions: Vec<usize>,
    pub kind: WalkKind,
}

impl WalkWitness {
    pub fn subword(&self, word: &Word) -> Word {
        word.subword(&self.positions)
    }

    /// Checks the position invariants and re-validates the claimed kind.
    pub fn validate(&self, rd: &RootData, word: &Word, lambda: &DominantWeight) -> bool {
        let in_range = self.positions.iter().all(|&p| p >= 1 && p <= word.len());
        let increasing = self.positions.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return false;
        }
        let sub = self.subword(word);
        let roots = sub.entries();
        match self.kind {
            WalkKind::DiagramWalk => is_diagram_walk(rd, roots),
            WalkKind::LambdaWalk => is_lambda_walk(rd, roots, lambda),
            WalkKind::HesitantWalk => is_hesitant_walk(rd, roots),
            WalkKind::HesitantLambdaWalk => is_hesitant_lambda_walk(rd, roots, lambda),
        }
    }
}

fn adj(rd: &RootData, i: usize, j: usize) -> bool {
    rd.adjacent(i, j).unwrap_or(false)
}

fn appears(lambda: &DominantWeight, i: usize) -> bool {
    lambda.appears(i).unwrap_or(false)
}

/// Nonempty, and consecutive roots are distinct and joined by a Dynkin edge.
pub fn is_diagram_walk(rd: &RootData, roots: &[usize]) -> bool {
    !roots.is_empty()
        && roots.iter().all(|&i| i >= 1 && i <= rd.rank())
        && roots.windows(2).all(|w| adj(rd, w[0], w[1]))
}

pub fn is_lambda_walk(rd: &RootData, roots: &[usize], lambda: &DominantWeight) -> bool {
    is_diagram_walk(rd, roots) && appears(lambda, roots[roots.len() - 1])
}

/// Length at least 2, first two roots equal, and `roots[1..]` is a walk.
pub fn is_hesitant_walk(rd: &RootData, roots: &[usize]) -> bool {
    roots.len() >= 2 && roots[0] == roots[1] && is_diagram_walk(rd, &roots[1..])
}

pub fn is_hesitant_lambda_walk(rd: &RootData, roots: &[usize], lambda: &DominantWeight) -> bool {
    roots.len() >= 2 && roots[0] == roots[1] && is_lambda_walk(rd, &roots[1..], lambda)
}

/// Canonical hesitant lambda-walk contained in `word`, if any.
///
/// `reach[p]` holds when some lambda-walk starts at position `p`; it is
/// computed right to left, storing the smallest admissible successor. The
/// witness uses the lexicographically smallest `(j_0, j_1)` with equal roots
/// and `reach[j_1]`, then follows successor links.
pub fn find_hesitant_lambda_walk(
    rd: &RootData,
    word: &Word,
    lambda: &DominantWeight,
) -> Option<WalkWitness> {
    let roots = word.entries();
    let n = roots.len();
    let mut reach = vec![false; n];
    let mut next: Vec<Option<usize>> = vec![None; n];
    for p in (0..n).rev() {
        if appears(lambda, roots[p]) {
            reach[p] = true;
            continue;
        }
        if let Some(q) = (p + 1..n).find(|&q| reach[q] && adj(rd, roots[p], roots[q])) {
            reach[p] = true;
            next[p] = Some(q);
        }
    }
    for j0 in 0..n {
        for j1 in j0 + 1..n {
            if roots[j0] == roots[j1] && reach[j1] {
                let mut positions = vec![j0 + 1, j1 + 1];
                let mut cur = j1;
                while let Some(q) = next[cur] {
                    positions.push(q + 1);
                    cur = q;
                }
                return Some(WalkWitness {
                    positions,
                    kind: WalkKind::HesitantLambdaWalk,
                });
            }
        }
    }
    None
}

/// Exhaustive oracle: tests every subsequence, in order of increasing bitmask.
pub fn find_hesitant_lambda_walk_naive(
    rd: &RootData,
    word: &Word,
    lambda: &DominantWeight,
) -> Result<Option<WalkWitness>> {
    let n = word.len();
    if n > NAIVE_MAX_N {
        return Err(Error::CapExceeded {
            size: n,
            cap: NAIVE_MAX_N,
        });
    }
    let roots = word.entries();
    let mut sub = Vec::with_capacity(n);
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        sub.clear();
        sub.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| roots[i]));
        if is_hesitant_lambda_walk(rd, &sub, lambda) {
            return Ok(Some(WalkWitness {
                positions: (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
                kind: WalkKind::HesitantLambdaWalk,
            }));
        }
    }
    Ok(None)
}

/// Minimality of a hesitant lambda-walk given as its root sequence: the
/// walking component visits no vertex twice, and when it has at least two
/// entries no root before the last appears in `lambda`.
pub fn is_minimal_roots(rd: &RootData, roots: &[usize], lambda: &DominantWeight) -> Result<bool> {
    if !is_hesitant_lambda_walk(rd, roots, lambda) {
        return Err(Error::NotAWitness(format!("{roots:?}")));
    }
    let walking = &roots[1..];
    let distinct = walking
        .iter()
        .enumerate()
        .all(|(a, i)| !walking[a + 1..].contains(i));
    let quiet_prefix =
        walking.len() < 2 || roots[..roots.len() - 1].iter().all(|&i| !appears(lambda, i));
    Ok(distinct && quiet_prefix)
}

pub fn is_minimal(
    rd: &RootData,
    word: &Word,
    witness: &WalkWitness,
    lambda: &DominantWeight,
) -> Result<bool> {
    check_positions(word, &witness.positions)?;
    is_minimal_roots(rd, witness.subword(word).entries(), lambda)
}

fn check_positions(word: &Word, positions: &[usize]) -> Result<()> {
    for &p in positions {
        check_index(p, word.len())?;
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotAWitness(format!(
            "positions {positions:?} are not strictly increasing"
        )));
    }
    Ok(())
}

/// Shrinks a hesitant lambda-walk to a minimal one using a subset of its
/// positions.
///
/// The walking component is cut at its first root that appears in `lambda`
/// (if that is the first walking step, the result is `(j_0, j_1)`). Then,
/// while two walking entries `a < b` share a root, entries `a+1..=b` are
/// dropped; the entry after `b` is adjacent to the root of `b`, which is the
/// root of `a`, so the seam stays a walk.
pub fn minimize(
    rd: &RootData,
    word: &Word,
    witness: &WalkWitness,
    lambda: &DominantWeight,
) -> Result<WalkWitness> {
    check_positions(word, &witness.positions)?;
    let roots = witness.subword(word);
    if !is_hesitant_lambda_walk(rd, roots.entries(), lambda) {
        return Err(Error::NotAWitness(format!("{:?}", roots.entries())));
    }
    let mut positions = witness.positions.clone();
    let cut = (1..positions.len())
        .find(|&t| appears(lambda, word.root(positions[t])))
        .expect("final root appears in lambda");
    positions.truncate(cut + 1);

    'splice: loop {
        for b in 2..positions.len() {
            for a in 1..b {
                if word.root(positions[a]) == word.root(positions[b]) {
                    positions.drain(a + 1..=b);
                    continue 'splice;
                }
            }
        }
        break;
    }
    Ok(WalkWitness {
        positions,
        kind: WalkKind::HesitantLambdaWalk,
    })
}

/// From `m[k] > 0` (with `m[i] >= 0` past `k`), a lambda-walk starting at
/// position `k`.
pub fn lambda_walk_from_positive_entry(
    d: &TwistData,
    word: &Word,
    sigma: &SignVector,
    k: usize,
) -> Result<WalkWitness> {
    if word.len() != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: word.len(),
        });
    }
    check_index(k, d.n())?;
    let m = compute_m(d, sigma)?;
    Ok(WalkWitness {
        positions: increasing_lambda_chain(d, &m, k)?,
        kind: WalkKind::LambdaWalk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;
    use crate::weightword::derive_twist_data;

    fn rd(s: &str) -> RootData {
        s.parse::<LieType>().unwrap().root_data()
    }

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    fn lam(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn diagram_walks() {
        let a5 = rd("A5");
        assert!(!is_diagram_walk(&a5, &[2, 4, 5]));
        assert!(is_diagram_walk(&a5, &[1, 2, 3, 2, 1]));
        assert!(is_diagram_walk(&a5, &[2, 3, 4, 5, 4, 3]));
        assert!(is_diagram_walk(&a5, &[1, 2, 1, 2, 3]));
        assert!(is_diagram_walk(&rd("E8"), &[1, 3, 4, 2, 4, 5]));
        assert!(is_diagram_walk(&a5, &[3]));
        assert!(!is_diagram_walk(&a5, &[]));
        assert!(!is_diagram_walk(&a5, &[3, 3]));
    }

    #[test]
    fn lambda_walks() {
        assert!(is_lambda_walk(&rd("B3"), &[1, 2, 3], &lam(&[0, 0, 1])));
        let a5 = rd("A5");
        assert!(!is_lambda_walk(&a5, &[1, 2, 3, 2, 1], &lam(&[0, 0, 1, 0, 0])));
        assert!(is_lambda_walk(&a5, &[1, 2, 3, 2, 1], &lam(&[1, 0, 0, 0, 0])));
    }

    #[test]
    fn hesitant_lambda_walks() {
        let a3 = rd("A3");
        assert!(is_hesitant_walk(&a3, &[1, 1, 2]));
        assert!(is_hesitant_lambda_walk(&a3, &[1, 1, 2], &lam(&[0, 1, 0])));
        assert!(is_hesitant_lambda_walk(&rd("A2"), &[1, 1], &lam(&[1, 0])));
        assert!(!is_hesitant_lambda_walk(&a3, &[1, 1, 2], &lam(&[0, 0, 1])));
        assert!(!is_hesitant_lambda_walk(&a3, &[1], &lam(&[1, 0, 0])));
        assert!(!is_diagram_walk(&a3, &[1, 1, 2]));
    }

    #[test]
    fn detector_examples() {
        let a3 = rd("A3");
        assert_eq!(find_hesitant_lambda_walk(&a3, &w(&[1, 2, 3, 1, 2, 1]), &lam(&[0, 0, 3])), None);
        let found = find_hesitant_lambda_walk(&rd("A2"), &w(&[1, 2, 1]), &lam(&[2, 1])).unwrap();
        assert_eq!(found.positions, vec![1, 3]);
        for l in [[0, 0, 0], [1, 0, 0], [1, 1, 1], [0, 2, 5]] {
            assert_eq!(find_hesitant_lambda_walk(&a3, &w(&[1, 2, 3]), &lam(&l)), None);
        }
        assert_eq!(find_hesitant_lambda_walk(&a3, &w(&[]), &lam(&[1, 1, 1])), None);
    }

    #[test]
    fn naive_agrees_on_examples() {
        let a3 = rd("A3");
        assert_eq!(
            find_hesitant_lambda_walk_naive(&a3, &w(&[1, 2, 3, 1, 2, 1]), &lam(&[0, 0, 3])).unwrap(),
            None
        );
        assert!(find_hesitant_lambda_walk_naive(&rd("A2"), &w(&[1, 2, 1]), &lam(&[2, 1]))
            .unwrap()
            .is_some());
        assert_eq!(find_hesitant_lambda_walk_naive(&a3, &w(&[]), &lam(&[1, 1, 1])).unwrap(), None);
        assert!(find_hesitant_lambda_walk_naive(&a3, &w(&[1; 17]), &lam(&[1, 1, 1])).is_err());
    }

    #[test]
    fn minimality() {
        let a5 = rd("A5");
        let om2 = lam(&[0, 1, 0, 0, 0]);
        let om25 = lam(&[0, 1, 0, 0, 1]);
        assert!(!is_minimal_roots(&a5, &[5, 5, 4, 3, 4, 3, 2], &om2).unwrap());
        assert!(is_minimal_roots(&a5, &[5, 5, 4, 3, 2], &om2).unwrap());
        assert!(!is_minimal_roots(&a5, &[5, 5, 4, 3, 2], &om25).unwrap());
        assert!(is_minimal_roots(&a5, &[5, 5], &om25).unwrap());
        assert!(matches!(
            is_minimal_roots(&a5, &[5, 4, 3, 2], &om2),
            Err(Error::NotAWitness(_))
        ));

        let word = w(&[1, 5, 5, 2, 4, 3, 4, 3, 2]);
        let wit = WalkWitness {
            positions: vec![2, 3, 5, 6, 7, 8, 9],
            kind: WalkKind::HesitantLambdaWalk,
        };
        assert!(!is_minimal(&a5, &word, &wit, &om2).unwrap());
    }

    #[test]
    fn minimization() {
        let a5 = rd("A5");
        let om2 = lam(&[0, 1, 0, 0, 0]);
        let word = w(&[5, 5, 4, 3, 4, 3, 2]);
        let full = WalkWitness {
            positions: (1..=7).collect(),
            kind: WalkKind::HesitantLambdaWalk,
        };
        let min = minimize(&a5, &word, &full, &om2).unwrap();
        assert_eq!(min.subword(&word).entries(), &[5, 5, 4, 3, 2]);
        assert_eq!(min.positions, vec![1, 2, 3, 6, 7]);
        assert!(is_minimal(&a5, &word, &min, &om2).unwrap());

        let word = w(&[5, 5, 4, 3, 2]);
        let full = WalkWitness {
            positions: (1..=5).collect(),
            kind: WalkKind::HesitantLambdaWalk,
        };
        let min = minimize(&a5, &word, &full, &lam(&[0, 1, 0, 0, 1])).unwrap();
        assert_eq!(min.positions, vec![1, 2]);
        assert_eq!(minimize(&a5, &word, &full, &om2).unwrap(), full);

        let bogus = WalkWitness {
            positions: vec![2, 3],
            kind: WalkKind::HesitantLambdaWalk,
        };
        assert!(matches!(minimize(&a5, &word, &bogus, &om2), Err(Error::NotAWitness(_))));
    }

    #[test]
    fn lambda_walk_from_lemma() {
        let a2 = rd("A2");
        let word = w(&[1, 2, 1]);
        let d = derive_twist_data(&a2, &word, &lam(&[2, 1])).unwrap();
        let sigma: SignVector = "-+-".parse().unwrap();
        let walk = lambda_walk_from_positive_entry(&d, &word, &sigma, 3).unwrap();
        assert_eq!(walk.positions, vec![3]);
        assert!(walk.validate(&a2, &word, &lam(&[2, 1])));
        assert!(matches!(
            lambda_walk_from_positive_entry(&d, &word, &sigma, 1),
            Err(Error::PreconditionViolated(_))
        ));

        let a3 = rd("A3");
        let word = w(&[1, 1, 2, 3]);
        let l3 = lam(&[0, 0, 1]);
        let d = derive_twist_data(&a3, &word, &l3).unwrap();
        let walk = lambda_walk_from_positive_entry(&d, &word, &"----".parse().unwrap(), 2).unwrap();
        assert_eq!(walk.positions, vec![2, 3, 4]);
        assert!(walk.validate(&a3, &word, &l3));
    }
}
