//! Cylinder decompositions in rational directions and the multitwists
//! they induce on homology.
//!
//! A square is cut into p + |q| parallel strips of the (p, q) foliation,
//! indexed by the transverse coordinate u = q·x − p·y. Following a strip
//! through right, top or bottom sides gives closed leaves; leaves are
//! merged into cylinders across every regular point of the singular
//! segments that separate them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::homology::{Chain, HomologyClass, HomologyModel};
use crate::origami::Origami;

/// Primitive direction, normalized so p > 0, or (p, q) = (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    p: i64,
    q: i64,
}

impl Direction {
    pub const HORIZONTAL: Direction = Direction { p: 1, q: 0 };
    pub const VERTICAL: Direction = Direction { p: 0, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::BadDirection(p, q));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if p < 0 || (p == 0 && q < 0) {
            p = -p;
            q = -q;
        }
        Ok(Direction { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// p² + q²
    pub fn norm2(self) -> i64 {
        self.p * self.p + self.q * self.q
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("direction must look like \"p,q\", got {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let p = a.trim().parse::<i64>().map_err(|_| bad())?;
        let q = b.trim().parse::<i64>().map_err(|_| bad())?;
        Direction::new(p, q)
    }
}

/// A maximal cylinder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    pub direction: Direction,
    /// Core curve through the lowest (square, strip) of the cylinder.
    pub waist: Chain,
    /// Number of squares the core curve crosses.
    pub length: usize,
    /// Number of parallel strip leaves.
    pub height: usize,
    /// 0-based (square, strip) where the core curve starts.
    pub start: (usize, usize),
}

impl Cylinder {
    /// Circumference over height: length·(p² + q²)/height.
    pub fn modulus(&self) -> BigRational {
        BigRational::new(BigInt::from(self.length as i64 * self.direction.norm2()), BigInt::from(self.height))
    }
}

struct Foliation<'a> {
    h: &'a [usize],
    v: &'a [usize],
    vinv: &'a [usize],
    p: i64,
    q: i64,
    lo: i64,
    w: usize,
}

impl Foliation<'_> {
    /// Strip k of square i to the next (square, strip), and the dual edge
    /// crossed as (is_h, square, sign).
    fn step(&self, i: usize, k: usize) -> ((usize, usize), (bool, usize, i64)) {
        let (p, q) = (self.p, self.q);
        let u2 = 2 * (self.lo + k as i64) + 1;
        let (nu2, j, edge) = if 2 * (q - p) < u2 && u2 < 2 * q {
            (u2 - 2 * q, self.h[i], (true, i, 1))
        } else if q > 0 {
            (u2 + 2 * p, self.v[i], (false, i, 1))
        } else {
            let j = self.vinv[i];
            (u2 - 2 * p, j, (false, j, -1))
        };
        let nk = (nu2 - 1).div_euclid(2) - self.lo;
        debug_assert!(0 <= nk && (nk as usize) < self.w);
        ((j, nk as usize), edge)
    }
}

enum Piece {
    Interior(usize, i64),
    BottomEdge(usize),
    LeftEdge(usize),
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// All maximal cylinders in direction `d`, ordered by starting square.
pub fn decompose(o: &Origami, d: Direction) -> Vec<Cylinder> {
    let n = o.n();
    let (h, v) = (o.h().zero_based(), o.v().zero_based());
    let (hinv, vinv) = (o.h().inverse().zero_based(), o.v().inverse().zero_based());
    let (p, q) = (d.p, d.q);
    let w = (p + q.abs()) as usize;
    let lo = if q >= 0 { -p } else { q - p };
    let fol = Foliation { h: &h, v: &v, vinv: &vinv, p, q, lo, w };
    let comm = o.commutator().zero_based();
    let regular: Vec<bool> = (0..n).map(|j| comm[j] == j).collect();

    // Closed strip leaves.
    let mut orbit_of = vec![usize::MAX; n * w];
    let mut orbits: Vec<(usize, Chain, (usize, usize))> = Vec::new();
    for i in 0..n {
        for k in 0..w {
            if orbit_of[i * w + k] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut chain = Chain::zero(n);
            let mut st = (i, k);
            let mut steps = 0;
            while orbit_of[st.0 * w + st.1] == usize::MAX {
                orbit_of[st.0 * w + st.1] = id;
                let (next, (is_h, sq, s)) = fol.step(st.0, st.1);
                if is_h {
                    chain.h[sq] += s;
                } else {
                    chain.v[sq] += s;
                }
                st = next;
                steps += 1;
            }
            orbits.push((steps, chain, (i, k)));
        }
    }

    // Singular segments: one leaving the lower-left corner of each square
    // (upper-left when q < 0); each is a list of pieces and ends at a vertex.
    let mut pieces: Vec<Vec<Piece>> = Vec::with_capacity(n);
    let mut next_seg = vec![0; n];
    let mut end_regular = vec![false; n];
    let mut start_regular = vec![false; n];
    for j in 0..n {
        let mut ps = Vec::new();
        if p > 0 && q > 0 {
            let (mut cur, mut u) = (j, 0i64);
            loop {
                ps.push(Piece::Interior(cur, u));
                if u == q - p {
                    break;
                }
                if q - p < u && u < q {
                    u -= q;
                    cur = h[cur];
                } else {
                    u += p;
                    cur = v[cur];
                }
            }
            let end = h[v[cur]];
            start_regular[j] = regular[j];
            next_seg[j] = end;
            end_regular[j] = regular[end];
        } else if q < 0 {
            let (mut cur, mut u) = (j, -p);
            loop {
                ps.push(Piece::Interior(cur, u));
                if u == q {
                    break;
                }
                if q - p < u && u < q {
                    u -= q;
                    cur = h[cur];
                } else {
                    u -= p;
                    cur = vinv[cur];
                }
            }
            let end = h[cur];
            start_regular[j] = regular[v[j]];
            next_seg[j] = vinv[end];
            end_regular[j] = regular[end];
        } else if q == 0 {
            ps.push(Piece::BottomEdge(j));
            start_regular[j] = regular[j];
            next_seg[j] = h[j];
            end_regular[j] = regular[h[j]];
        } else {
            ps.push(Piece::LeftEdge(j));
            start_regular[j] = regular[j];
            next_seg[j] = v[j];
            end_regular[j] = regular[v[j]];
        }
        pieces.push(ps);
    }

    // Segments joined through regular points form singular leaves; a leaf
    // is a cylinder boundary iff it meets a cone point.
    let mut seg = (0..n).collect::<Vec<_>>();
    for j in 0..n {
        if end_regular[j] {
            let (a, b) = (find(&mut seg, j), find(&mut seg, next_seg[j]));
            seg[a] = b;
        }
    }
    let mut singular = vec![false; n];
    for j in 0..n {
        let r = find(&mut seg, j);
        singular[r] |= !start_regular[j];
    }

    let mut cyl: Vec<usize> = (0..orbits.len()).collect();
    for j in 0..n {
        let r = find(&mut seg, j);
        if singular[r] {
            continue;
        }
        for pc in &pieces[j] {
            let (a, b) = match *pc {
                Piece::Interior(cur, u) => {
                    if !(lo < u && u < lo + w as i64) {
                        continue;
                    }
                    let k = (u - lo) as usize;
                    (orbit_of[cur * w + k - 1], orbit_of[cur * w + k])
                }
                Piece::BottomEdge(s) => (orbit_of[s * w], orbit_of[vinv[s] * w]),
                Piece::LeftEdge(s) => (orbit_of[s * w], orbit_of[hinv[s] * w]),
            };
            let (a, b) = (find(&mut cyl, a), find(&mut cyl, b));
            cyl[a] = b;
        }
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for id in 0..orbits.len() {
        let r = find(&mut cyl, id);
        groups.entry(r).or_default().push(id);
    }
    let mut out: Vec<Cylinder> = groups
        .into_values()
        .map(|ids| {
            let rep = *ids.iter().min_by_key(|&&id| orbits[id].2).unwrap();
            let (steps, chain, start) = orbits[rep].clone();
            debug_assert_eq!(steps % w, 0);
            let length = steps / w;
            debug_assert_eq!(chain.holonomy(), (length as i64 * p, length as i64 * q));
            Cylinder { direction: d, waist: chain, length, height: ids.len(), start }
        })
        .collect();
    out.sort_by_key(|c| c.start);
    debug_assert_eq!(out.iter().map(|c| c.length * c.height).sum::<usize>(), n);
    out
}

pub fn moduli(o: &Origami, d: Direction) -> Vec<BigRational> {
    decompose(o, d).iter().map(Cylinder::modulus).collect()
}

/// Which waist curve of a two-cylinder direction is called the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaistOrder {
    /// Shorter core curve first, ties broken by starting square.
    Shorter,
    /// The cylinder containing the lowest strip of square 1 first.
    ThroughSquareOne,
}

pub fn two_cylinders(o: &Origami, d: Direction, order: WaistOrder) -> Result<[Cylinder; 2]> {
    let mut c = decompose(o, d);
    if c.len() != 2 {
        return Err(Error::NotTwoCylinders(c.len()));
    }
    if order == WaistOrder::Shorter {
        c.sort_by_key(|c| (c.length, c.start));
    }
    let b = c.pop().unwrap();
    let a = c.pop().unwrap();
    Ok([a, b])
}

/// ℓ₂·γ₁ − ℓ₁·γ₂ for the two waist curves of a two-cylinder direction;
/// holonomy-free by construction.
pub fn transvection_vector(model: &HomologyModel, d: Direction) -> Result<HomologyClass> {
    transvection_vector_ordered(model, d, WaistOrder::Shorter)
}

pub fn transvection_vector_ordered(model: &HomologyModel, d: Direction, order: WaistOrder) -> Result<HomologyClass> {
    let [a, b] = two_cylinders(model.origami(), d, order)?;
    let chain = a.waist.combine(b.length as i64, &b.waist, -(a.length as i64));
    model.class_of(&chain)
}

/// Simultaneous Dehn twists in every cylinder of a direction, acting on
/// H₁⁽⁰⁾.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultitwistMatrix {
    pub direction: Direction,
    /// Columns are images of the H₁⁽⁰⁾ basis vectors.
    pub matrix: IntMatrix,
    pub scale: BigRational,
    /// Twist count k_i = scale/μ_i per cylinder, in decomposition order.
    pub twists: Vec<BigInt>,
}

/// Least positive rational s with s/μ_i integral for all i.
pub fn default_scale(mu: &[BigRational]) -> BigRational {
    let num = mu.iter().fold(BigInt::one(), |l, m| l.lcm(m.numer()));
    let den = mu.iter().fold(BigInt::zero(), |g, m| g.gcd(m.denom()));
    BigRational::new(num, den)
}

/// T(v) = v + Σ k_i Ω(w_i, v) w_i on H₁ coordinates.
pub fn twist_on_h1(model: &HomologyModel, cylinders: &[Cylinder], twists: &[BigInt]) -> Result<IntMatrix> {
    let k = model.basis().len();
    let mut t = IntMatrix::identity(k);
    for (c, kk) in cylinders.iter().zip(twists) {
        let w = model.class_of(&c.waist)?;
        let wg = model.gram().transpose().mul_vec(w.coords());
        for i in 0..k {
            if w.coords()[i].is_zero() {
                continue;
            }
            let f = kk * &w.coords()[i];
            for j in 0..k {
                t[(i, j)] += &f * &wg[j];
            }
        }
    }
    Ok(t)
}

/// Restricts an H₁ automorphism preserving H₁⁽⁰⁾ to the H₁⁽⁰⁾ basis.
pub fn restrict_to_h0(model: &HomologyModel, t: &IntMatrix) -> Result<IntMatrix> {
    let k0 = model.h0_dim();
    let mut cols = Vec::with_capacity(k0);
    for j in 0..k0 {
        let img = t.mul_vec(&model.h0_basis().col(j));
        cols.push(model.project_coords(&img)?);
    }
    if cols.is_empty() {
        return Ok(IntMatrix::zeros(0, 0));
    }
    Ok(IntMatrix::from_cols(&cols))
}

pub fn multitwist(model: &HomologyModel, d: Direction, scale: Option<BigRational>) -> Result<MultitwistMatrix> {
    let cyls = decompose(model.origami(), d);
    let mu: Vec<BigRational> = cyls.iter().map(Cylinder::modulus).collect();
    let scale = scale.unwrap_or_else(|| default_scale(&mu));
    if !scale.is_positive() {
        return Err(Error::BadScale(scale.to_string()));
    }
    let mut twists = Vec::with_capacity(mu.len());
    for m in &mu {
        let k = &scale / m;
        if !k.is_integer() {
            return Err(Error::BadScale(scale.to_string()));
        }
        twists.push(k.to_integer());
    }
    let t = twist_on_h1(model, &cyls, &twists)?;
    let matrix = restrict_to_h0(model, &t)?;
    Ok(MultitwistMatrix { direction: d, matrix, scale, twists })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::build_homology;
    use crate::origami::{FamilyMember, Origami};

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn direction_normalization() {
        assert_eq!(Direction::new(-2, 4).unwrap(), Direction::new(1, -2).unwrap());
        assert_eq!(Direction::new(0, -3).unwrap(), Direction::VERTICAL);
        assert!(Direction::new(0, 0).is_err());
        assert_eq!("1,-4".parse::<Direction>().unwrap(), Direction::new(1, -4).unwrap());
    }

    #[test]
    fn torus_directions() {
        let t = Origami::torus();
        for (p, q) in [(1, 1), (2, 3), (1, -4), (0, 1), (1, 0)] {
            let d = Direction::new(p, q).unwrap();
            let c = decompose(&t, d);
            assert_eq!(c.len(), 1);
            assert_eq!((c[0].length, c[0].height), (1, 1));
            assert_eq!(c[0].modulus(), r(p * p + q * q, 1));
        }
    }

    #[test]
    fn g5_moduli() {
        let f = FamilyMember::new(5, 1, None).unwrap();
        let (n, m) = (f.n_param as i64, f.m_param as i64);
        let mut hm = moduli(&f.origami, Direction::HORIZONTAL);
        hm.sort();
        let mut want = vec![r(1, m - 4), r(2, 1), r(3, 1), r(4, 1), r(n, 1)];
        want.sort();
        assert_eq!(hm, want);
        let mut vm = moduli(&f.origami, Direction::VERTICAL);
        vm.sort();
        let mut want = vec![r(1, n - 4), r(2, 1), r(3, 1), r(4, 1), r(m, 1)];
        want.sort();
        assert_eq!(vm, want);
    }

    #[test]
    fn two_cylinder_lengths() {
        for m in 1..4 {
            let f = FamilyMember::new(5, m, None).unwrap();
            let n = f.n_param;
            let [a, b] = two_cylinders(&f.origami, Direction::new(1, -2).unwrap(), WaistOrder::Shorter).unwrap();
            assert_eq!((a.length, b.length), (2, 9 + n + 4 * m));
        }
        for m in 2..5 {
            let f = FamilyMember::new(6, m, None).unwrap();
            let n = f.n_param;
            let [a, b] = two_cylinders(&f.origami, Direction::new(1, 4).unwrap(), WaistOrder::Shorter).unwrap();
            assert_eq!((a.length, b.length), (2 * m + 6, n + 2 * m + 9));
        }
    }

    #[test]
    fn not_two_cylinders() {
        let f = FamilyMember::new(5, 1, None).unwrap();
        let model = build_homology(&f.origami).unwrap();
        assert_eq!(transvection_vector(&model, Direction::HORIZONTAL), Err(Error::NotTwoCylinders(5)));
    }

    #[test]
    fn bad_scale() {
        let f = FamilyMember::new(5, 1, None).unwrap();
        let model = build_homology(&f.origami).unwrap();
        assert!(matches!(multitwist(&model, Direction::HORIZONTAL, Some(r(1, 1))), Err(Error::BadScale(_))));
        let t = multitwist(&model, Direction::HORIZONTAL, None).unwrap();
        // moduli 1/6, 2, 3, 4, 5 → least scale 60
        assert_eq!(t.scale, r(60, 1));
    }
}
