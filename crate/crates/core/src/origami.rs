//! Origamis (square-tiled surfaces), their singularities, and the three
//! stairs families of genus 4, 5 and 6.

use serde::{Deserialize, Serialize};

use crate::cylinders::Direction;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Unit squares 1..=n glued by `h` (right neighbour) and `v` (upper
/// neighbour).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Origami {
    h: Permutation,
    v: Permutation,
}

impl Origami {
    pub fn new(h: Permutation, v: Permutation) -> Result<Self> {
        if h.degree() != v.degree() {
            return Err(Error::DegreeMismatch(h.degree(), v.degree()));
        }
        if h.degree() == 0 {
            return Err(Error::InvalidPermutation("origami needs at least one square".into()));
        }
        Ok(Origami { h, v })
    }

    /// Parses both gluings; the degree is the largest point in either.
    pub fn parse(h: &str, v: &str) -> Result<Self> {
        let hp = Permutation::parse(h, None)?;
        let vp = Permutation::parse(v, None)?;
        let n = hp.degree().max(vp.degree()).max(1);
        Origami::new(Permutation::parse(h, Some(n))?, Permutation::parse(v, Some(n))?)
    }

    pub fn torus() -> Self {
        Origami { h: Permutation::identity(1), v: Permutation::identity(1) }
    }

    pub fn n(&self) -> usize {
        self.h.degree()
    }

    pub fn h(&self) -> &Permutation {
        &self.h
    }

    pub fn v(&self) -> &Permutation {
        &self.v
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let (h, v) = (self.h.zero_based(), self.v.zero_based());
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in [h[i], v[i]] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedOrigami)
        }
    }

    /// h·v·h⁻¹·v⁻¹, acting on lower-left corners.
    pub fn commutator(&self) -> Permutation {
        self.h.compose(&self.v).compose(&self.h.inverse()).compose(&self.v.inverse())
    }

    /// 0-based vertex index of the lower-left corner of each square, and
    /// the cone angle (in multiples of 2π) of every vertex.
    pub fn vertices(&self) -> (Vec<usize>, Vec<usize>) {
        let cycles = self.commutator().cycles();
        let mut of = vec![0; self.n()];
        for (k, c) in cycles.iter().enumerate() {
            for &x in c {
                of[x - 1] = k;
            }
        }
        (of, cycles.iter().map(|c| c.len()).collect())
    }

    /// Orders of the zeros, descending; regular points are dropped.
    pub fn stratum(&self) -> Result<Vec<usize>> {
        self.require_connected()?;
        let mut s: Vec<usize> =
            self.commutator().cycles().iter().map(|c| c.len() - 1).filter(|&k| k > 0).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        Ok(s)
    }

    pub fn genus(&self) -> Result<usize> {
        let total: usize = self.stratum()?.iter().sum();
        Ok(total / 2 + 1)
    }
}

/// The stairs families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Family {
    G4,
    G5,
    G6,
}

impl Family {
    pub fn from_genus(g: u32) -> Result<Self> {
        match g {
            4 => Ok(Family::G4),
            5 => Ok(Family::G5),
            6 => Ok(Family::G6),
            _ => Err(Error::BadParameters(format!("no stairs family of genus {g}"))),
        }
    }

    pub fn genus(self) -> usize {
        match self {
            Family::G4 => 4,
            Family::G5 => 5,
            Family::G6 => 6,
        }
    }

    /// (N, M) as functions of m under the lock that makes c vanish.
    pub fn lock(self, m: usize) -> (usize, usize) {
        match self {
            Family::G4 => (3 * m + 4, 2 * m + 4),
            Family::G5 => (4 * m + 1, 4 * m + 6),
            Family::G6 => (2 * m + 3, 4 * m + 6),
        }
    }

    /// Number of squares of the member with parameters (N, M).
    pub fn squares(self, n: usize, m: usize) -> usize {
        let g = self.genus();
        n + (2..g).sum::<usize>() + m - g + 1
    }

    /// Directions of the three two-cylinder transvections.
    pub fn triple_directions(self) -> [Direction; 3] {
        let d = |p, q| Direction::new(p, q).expect("valid direction");
        match self {
            Family::G4 => [d(1, 1), d(1, -1), d(1, 2)],
            Family::G5 => [d(1, 4), d(1, -2), d(1, 2)],
            Family::G6 => [d(1, -4), d(1, -2), d(1, 4)],
        }
    }

    /// Direction of the rank-one twist B used for the density certificate.
    pub fn density_direction(self) -> Direction {
        match self {
            Family::G4 => Direction::new(1, 1).unwrap(),
            Family::G5 | Family::G6 => Direction::new(1, -2).unwrap(),
        }
    }

    /// lcm(1, …, g−1): the per-family factor in front of N (horizontal)
    /// and M (vertical) in the printed twist matrices.
    pub fn scale_factor(self) -> usize {
        match self {
            Family::G4 => 6,
            Family::G5 => 12,
            Family::G6 => 60,
        }
    }
}

/// A stairs origami together with its parameters.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub family: Family,
    pub m: usize,
    pub n_param: usize,
    pub m_param: usize,
    pub origami: Origami,
}

impl FamilyMember {
    pub fn new(genus: u32, m: usize, overrides: Option<(usize, usize)>) -> Result<Self> {
        let family = Family::from_genus(genus)?;
        if m < 1 {
            return Err(Error::BadParameters("m must be at least 1".into()));
        }
        let (n_param, m_param) = overrides.unwrap_or_else(|| family.lock(m));
        let g = family.genus();
        if n_param < g || m_param < g {
            return Err(Error::BadParameters(format!(
                "genus {g} needs N ≥ {g} and M ≥ {g}, got N = {n_param}, M = {m_param}"
            )));
        }
        let origami = stairs(g, n_param, m_param);
        Ok(FamilyMember { family, m, n_param, m_param, origami })
    }
}

/// Stairs origami: a bottom row of N squares, rows of widths g−1, …, 2
/// stacked flush left above it, and a column over square 1 making the
/// leftmost vertical cylinder M squares tall.
pub fn stairs(g: usize, n_param: usize, m_param: usize) -> Origami {
    assert!(g >= 3 && n_param >= g && m_param >= g, "stairs needs N, M ≥ g ≥ 3");
    let mut rows: Vec<Vec<usize>> = vec![(1..=n_param).collect()];
    let mut next = n_param + 1;
    for w in (2..g).rev() {
        rows.push((next..next + w).collect());
        next += w;
    }
    let column: Vec<usize> = (next..next + m_param - (g - 1)).collect();
    let n = next + column.len() - 1;
    let mut h_cycles = rows.clone();
    h_cycles.extend(column.iter().map(|&c| vec![c]));
    let mut v_cycles = Vec::new();
    for x in 1..=n_param {
        let mut c = vec![x];
        for r in &rows[1..] {
            if x <= r.len() {
                c.push(r[x - 1]);
            }
        }
        if x == 1 {
            c.extend(&column);
        }
        v_cycles.push(c);
    }
    let h = Permutation::from_cycles(n, &h_cycles).expect("disjoint rows");
    let v = Permutation::from_cycles(n, &v_cycles).expect("disjoint columns");
    Origami { h, v }
}

/// The stairs origami of the given genus and m, with optional (N, M).
pub fn make_family(genus: u32, m: usize, overrides: Option<(usize, usize)>) -> Result<Origami> {
    FamilyMember::new(genus, m, overrides).map(|f| f.origami)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycle_type;

    /// V − E + F of the square complex, with vertices found by gluing
    /// corners directly instead of through the commutator.
    fn euler_characteristic(o: &Origami) -> i64 {
        let n = o.n();
        let (h, v) = (o.h().zero_based(), o.v().zero_based());
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        // Upper-right corner of i is LL(h(v(i))) and also LL(v(h(i))).
        for i in 0..n {
            let (a, b) = (find(&mut parent, h[v[i]]), find(&mut parent, v[h[i]]));
            parent[a] = b;
        }
        let verts = (0..n).filter(|&i| find(&mut parent, i) == i).count() as i64;
        verts - 2 * n as i64 + n as i64
    }

    #[test]
    fn torus() {
        let t = Origami::torus();
        assert_eq!(t.stratum().unwrap(), Vec::<usize>::new());
        assert_eq!(t.genus().unwrap(), 1);
    }

    #[test]
    fn l_shape() {
        let o = Origami::parse("(1 2)", "(1 3)").unwrap();
        assert_eq!(o.n(), 3);
        assert_eq!(o.genus().unwrap(), 2);
        assert_eq!(2 - 2 * o.genus().unwrap() as i64, euler_characteristic(&o));
    }

    #[test]
    fn disconnected() {
        let o = Origami::parse("(1 2)", "(1 2)(3 4)").unwrap();
        assert_eq!(o.stratum(), Err(Error::DisconnectedOrigami));
    }

    #[test]
    fn g5_vertical_cycles() {
        let f = FamilyMember::new(5, 1, None).unwrap();
        assert_eq!((f.n_param, f.m_param), (5, 10));
        assert_eq!(cycle_type(f.origami.v()).parts(), &[10, 4, 3, 2, 1]);
        assert_eq!(f.origami.n(), 20);
        assert_eq!(f.origami.stratum().unwrap(), vec![8]);
    }

    #[test]
    fn g4_printed_cycles() {
        // h = (1..N)(N+1,N+2,N+3)(N+4,N+5) and the long column through 1.
        let f = FamilyMember::new(4, 1, None).unwrap();
        let (n, m) = (f.n_param, f.m_param);
        assert_eq!((n, m, f.origami.n()), (7, 6, n + m + 2));
        let h = f.origami.h();
        assert_eq!(h.apply(n + 3), n + 1);
        assert_eq!(h.apply(n + 5), n + 4);
        let v = f.origami.v();
        let col: Vec<usize> = std::iter::successors(Some(1), |&x| Some(v.apply(x))).take(m).collect();
        let mut expect = vec![1, n + 1, n + 4];
        expect.extend(n + 6..=n + m + 2);
        assert_eq!(col, expect);
        assert_eq!(f.origami.stratum().unwrap(), vec![6]);
    }

    #[test]
    fn g6_sizes() {
        let f = FamilyMember::new(6, 2, None).unwrap();
        assert_eq!((f.n_param, f.m_param, f.origami.n()), (7, 14, 30));
        assert_eq!(f.origami.stratum().unwrap(), vec![10]);
        // m = 1 gives N = 5 < 6, below the family minimum.
        assert!(matches!(FamilyMember::new(6, 1, None), Err(Error::BadParameters(_))));
    }

    #[test]
    fn families_have_expected_strata() {
        for g in 4..=6u32 {
            for m in 2..6 {
                let f = FamilyMember::new(g, m, None).unwrap();
                let gg = g as usize;
                assert_eq!(f.origami.stratum().unwrap(), vec![2 * gg - 2]);
                assert_eq!(f.origami.n(), f.family.squares(f.n_param, f.m_param));
                assert_eq!(2 - 2 * gg as i64, euler_characteristic(&f.origami));
            }
        }
    }
}
