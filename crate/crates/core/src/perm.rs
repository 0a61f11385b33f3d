//! Permutations of {1,…,n} in the 1-based cycle notation of the
//! literature, and their cycle types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of {1,…,n}; `images[i-1]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for &x in c {
                if x == 0 || x > n {
                    return Err(Error::InvalidPermutation(format!("point {x} outside 1..={n}")));
                }
                if used[x - 1] {
                    return Err(Error::InvalidPermutation(format!("point {x} appears twice")));
                }
                used[x - 1] = true;
            }
            for (i, &x) in c.iter().enumerate() {
                images[x - 1] = c[(i + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses "(1 2 3)(4,5)"; the degree is the largest point mentioned
    /// unless `degree` is given.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Self> {
        let (cycles, max) = parse_cycles(s)?;
        let n = degree.unwrap_or(max);
        if max > n {
            return Err(Error::Parse(format!("point {max} exceeds degree {n}")));
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// 0-based image table for inner loops.
    pub fn zero_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x - 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&x| self.images[x - 1]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s - 1] {
                continue;
            }
            let mut c = vec![];
            let mut j = s;
            while !seen[j - 1] {
                seen[j - 1] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }
}

/// Non-trivial cycles and the largest point mentioned, singletons included.
fn parse_cycles(s: &str) -> Result<(Vec<Vec<usize>>, usize)> {
    let mut out = Vec::new();
    let mut max = 0;
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in {s:?}")));
        };
        let inner = &body[..end];
        if inner.contains('(') {
            return Err(Error::Parse(format!("nested '(' in {s:?}")));
        }
        let pts: Vec<usize> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
            .collect::<Result<_>>()?;
        if pts.contains(&0) {
            return Err(Error::Parse("points are 1-based".into()));
        }
        max = pts.iter().copied().fold(max, usize::max);
        if pts.len() > 1 {
            out.push(pts);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok((out, max))
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}

/// Disjoint-cycle notation with singletons omitted; "()" for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Multiset of cycle lengths, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    CycleType::new(p.cycles().iter().map(|c| c.len()).collect())
}
