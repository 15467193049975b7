use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n` with no 213 pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation213 {
    values: Vec<usize>,
}

impl Permutation213 {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if let Some(hit) = find_213(&values)? {
            return Err(Error::Contains213(hit));
        }
        Ok(Permutation213 { values })
    }

    pub(crate) fn new_unchecked(values: Vec<usize>) -> Self {
        Permutation213 { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for Permutation213 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn check_permutation(p: &[usize]) -> Result<()> {
    let mut seen = vec![false; p.len() + 1];
    for &v in p {
        if v == 0 || v > p.len() || seen[v] {
            return Err(Error::NotPermutation(p.to_vec()));
        }
        seen[v] = true;
    }
    Ok(())
}

/// First 213 occurrence `(i, j, k)`, 0-based, with `p[j] < p[i] < p[k]`.
pub fn find_213(p: &[usize]) -> Result<Option<(usize, usize, usize)>> {
    check_permutation(p)?;
    for k in 0..p.len() {
        for j in 0..k {
            for i in 0..j {
                if p[j] < p[i] && p[i] < p[k] {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_213_avoiding(p: &[usize]) -> Result<bool> {
    Ok(find_213(p)?.is_none())
}

/// All 213-avoiding permutations of length `n`, lexicographic.
pub fn enumerate_perms213(n: usize) -> Vec<Permutation213> {
    // `low` is the least value already followed by something smaller; a new
    // value above it would finish a 213.
    fn go(
        n: usize,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        low: usize,
        out: &mut Vec<Permutation213>,
    ) {
        if cur.len() == n {
            out.push(Permutation213 {
                values: cur.clone(),
            });
            return;
        }
        for v in 1..=n {
            if used[v] || low < v {
                continue;
            }
            let next_low = cur.iter().copied().filter(|&m| m > v).fold(low, usize::min);
            used[v] = true;
            cur.push(v);
            go(n, cur, used, next_low, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(
        n,
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        usize::MAX,
        &mut out,
    );
    out
}
