//! Integral first homology of an origami.
//!
//! Classes are carried by cycles of the dual graph: a [`Chain`] assigns a
//! coefficient to the edge from the centre of square i to the centre of
//! h(i), and to the edge from i to v(i). Pushed by (−½, −½) these become
//! the bottom edge x_i and left edge y_i of square i, so a dual cycle is
//! also a cellular cycle with the same coefficients.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::matrix::{rational_to_int, solve_rational};
use crate::algebra::{smith_normal_form, IntMatrix};
use crate::cylinders::{decompose, Cylinder, Direction};
use crate::error::{Error, Result};
use crate::origami::Origami;

/// Coefficients on the dual edges e^h_i (i → h(i)) and e^v_i (i → v(i)),
/// 0-based by square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    pub h: Vec<i64>,
    pub v: Vec<i64>,
}

impl Chain {
    pub fn zero(n: usize) -> Self {
        Chain { h: vec![0; n], v: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    /// a·self + b·other
    pub fn combine(&self, a: i64, other: &Chain, b: i64) -> Chain {
        Chain {
            h: self.h.iter().zip(&other.h).map(|(x, y)| a * x + b * y).collect(),
            v: self.v.iter().zip(&other.v).map(|(x, y)| a * x + b * y).collect(),
        }
    }

    /// Sum of (dx, dy) over the edges.
    pub fn holonomy(&self) -> (i64, i64) {
        (self.h.iter().sum(), self.v.iter().sum())
    }

    /// Net flow into each square.
    pub fn boundary(&self, o: &Origami) -> Vec<i64> {
        let (h, v) = (o.h().zero_based(), o.v().zero_based());
        let mut b = vec![0; self.len()];
        for i in 0..self.len() {
            b[h[i]] += self.h[i];
            b[i] -= self.h[i];
            b[v[i]] += self.v[i];
            b[i] -= self.v[i];
        }
        b
    }

    pub fn is_cycle(&self, o: &Origami) -> bool {
        self.len() == o.n() && self.boundary(o).iter().all(|&x| x == 0)
    }
}

/// Algebraic intersection of two dual cycles: a horizontal crossing against
/// a vertical one counts +1.
pub fn chain_intersection(o: &Origami, a: &Chain, b: &Chain) -> i64 {
    let (h, v) = (o.h().zero_based(), o.v().zero_based());
    (0..o.n()).map(|i| a.h[i] * b.v[h[i]] - a.v[i] * b.h[v[i]]).sum()
}

/// Cellular chain complex of the square tiling: faces, edges x_i (bottom)
/// and y_i (left), and vertices as commutator cycles.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    n: usize,
    h: Vec<usize>,
    v: Vec<usize>,
    vertex_of: Vec<usize>,
    vertices: usize,
}

impl ChainComplex {
    pub fn new(o: &Origami) -> Self {
        let (vertex_of, angles) = o.vertices();
        ChainComplex { n: o.n(), h: o.h().zero_based(), v: o.v().zero_based(), vertex_of, vertices: angles.len() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// ∂₁: columns x_0…x_{n−1}, y_0…y_{n−1}.
    pub fn d1(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.vertices, 2 * self.n);
        for i in 0..self.n {
            let ll = self.vertex_of[i];
            d[(self.vertex_of[self.h[i]], i)] += 1;
            d[(ll, i)] -= 1;
            d[(self.vertex_of[self.v[i]], self.n + i)] += 1;
            d[(ll, self.n + i)] -= 1;
        }
        d
    }

    /// ∂₂ F_i = x_i + y_{h(i)} − x_{v(i)} − y_i.
    pub fn d2(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(2 * self.n, self.n);
        for i in 0..self.n {
            d[(i, i)] += 1;
            d[(self.n + self.h[i], i)] += 1;
            d[(self.v[i], i)] -= 1;
            d[(self.n + i, i)] -= 1;
        }
        d
    }

    pub fn h1_rank(&self) -> usize {
        2 * self.n - self.d1().rank() - self.d2().rank()
    }

    /// Invariant factors > 1 of H₁; empty for a closed orientable surface.
    pub fn h1_torsion(&self) -> Vec<BigInt> {
        smith_normal_form(&self.d2()).torsion()
    }
}

/// How the H₁ basis was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Horizontal waist curves by length, then vertical ones.
    Cylinders,
    /// Fundamental cycles of a tree–cotree decomposition.
    TreeCotree,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Basis of H₁(ℤ), holonomy, intersection form and the non-tautological
/// part H₁⁽⁰⁾ = ker hol_x ∩ ker hol_y.
#[derive(Clone, Debug)]
pub struct HomologyModel {
    id: u64,
    origami: Origami,
    kind: BasisKind,
    basis: Vec<Chain>,
    labels: Vec<String>,
    gram: IntMatrix,
    gram_inv: IntMatrix,
    hol: Vec<(BigInt, BigInt)>,
    h0: IntMatrix,
    h0_labels: Vec<String>,
    omega0: IntMatrix,
}

/// A homology class: coordinates in the model basis (the canonical form)
/// and a dual cycle representing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyClass {
    model: u64,
    coords: Vec<BigInt>,
    chain: Chain,
}

impl HomologyClass {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn model_id(&self) -> u64 {
        self.model
    }
}

fn gram_of(o: &Origami, basis: &[Chain]) -> IntMatrix {
    let k = basis.len();
    let mut g = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = BigInt::from(chain_intersection(o, &basis[i], &basis[j]));
        }
    }
    g
}

fn sorted_waists(o: &Origami, d: Direction) -> Vec<Cylinder> {
    let mut c = decompose(o, d);
    c.sort_by_key(|c| (c.length, c.start));
    c
}

fn cylinder_basis(o: &Origami, genus: usize) -> Option<(Vec<Chain>, Vec<String>, Vec<(i64, i64)>)> {
    let hs = sorted_waists(o, Direction::HORIZONTAL);
    let vs = sorted_waists(o, Direction::VERTICAL);
    if hs.len() != genus || vs.len() != genus {
        return None;
    }
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    let mut lens = Vec::new();
    for c in &hs {
        basis.push(c.waist.clone());
        labels.push(format!("σ{}", c.length));
        lens.push((c.length as i64, 0));
    }
    for c in &vs {
        basis.push(c.waist.clone());
        labels.push(format!("ζ{}", c.length));
        lens.push((0, c.length as i64));
    }
    let g = gram_of(o, &basis);
    if g.det().abs().is_one() {
        Some((basis, labels, lens))
    } else {
        None
    }
}

fn tree_cotree_basis(o: &Origami) -> Vec<Chain> {
    let n = o.n();
    let (h, v) = (o.h().zero_based(), o.v().zero_based());
    let (vertex_of, angles) = o.vertices();
    // Dual spanning tree by BFS from square 0; parent edge of each square
    // is (edge kind, source square, sign).
    let mut parent: Vec<Option<(bool, usize, i64)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut in_tree_h = vec![false; n];
    let mut in_tree_v = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let hinv = o.h().inverse().zero_based();
    let vinv = o.v().inverse().zero_based();
    while let Some(i) = queue.pop_front() {
        let nbrs = [(h[i], true, i, 1), (v[i], false, i, 1), (hinv[i], true, hinv[i], -1), (vinv[i], false, vinv[i], -1)];
        for (j, is_h, e, s) in nbrs {
            if !seen[j] {
                seen[j] = true;
                parent[j] = Some((is_h, e, s));
                if is_h {
                    in_tree_h[e] = true;
                } else {
                    in_tree_v[e] = true;
                }
                queue.push_back(j);
            }
        }
    }
    // e^h_i crosses y_{h(i)}, e^v_i crosses x_{v(i)}. The cotree is a
    // spanning tree of the primal graph avoiding edges crossed by the tree.
    let mut blocked_x = vec![false; n];
    let mut blocked_y = vec![false; n];
    for i in 0..n {
        if in_tree_h[i] {
            blocked_y[h[i]] = true;
        }
        if in_tree_v[i] {
            blocked_x[v[i]] = true;
        }
    }
    let mut uf: Vec<usize> = (0..angles.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut in_cotree_x = vec![false; n];
    let mut in_cotree_y = vec![false; n];
    for i in 0..n {
        if !blocked_x[i] {
            let (a, b) = (find(&mut uf, vertex_of[i]), find(&mut uf, vertex_of[h[i]]));
            if a != b {
                uf[a] = b;
                in_cotree_x[i] = true;
            }
        }
    }
    for i in 0..n {
        if !blocked_y[i] {
            let (a, b) = (find(&mut uf, vertex_of[i]), find(&mut uf, vertex_of[v[i]]));
            if a != b {
                uf[a] = b;
                in_cotree_y[i] = true;
            }
        }
    }
    let path_to_root = |mut j: usize, c: &mut Chain, sign: i64| {
        // adds the tree path root → j with the given sign
        while let Some((is_h, e, s)) = parent[j] {
            if is_h {
                c.h[e] += sign * s;
            } else {
                c.v[e] += sign * s;
            }
            j = if s == 1 { e } else { if is_h { h[e] } else { v[e] } };
        }
    };
    let mut out = Vec::new();
    for i in 0..n {
        for is_h in [true, false] {
            let (tree, crossed_cotree, target) = if is_h {
                (in_tree_h[i], in_cotree_y[h[i]], h[i])
            } else {
                (in_tree_v[i], in_cotree_x[v[i]], v[i])
            };
            if tree || crossed_cotree {
                continue;
            }
            let mut c = Chain::zero(n);
            if is_h {
                c.h[i] += 1;
            } else {
                c.v[i] += 1;
            }
            // root → i, edge i → target, target → root
            path_to_root(i, &mut c, 1);
            path_to_root(target, &mut c, -1);
            out.push(c);
        }
    }
    out
}

fn bigvec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Builds the homology model. Stairs-type origamis whose horizontal and
/// vertical waist curves form a unimodular basis get that basis; anything
/// else falls back to a tree–cotree basis.
pub fn build_homology(o: &Origami) -> Result<HomologyModel> {
    let genus = o.genus()?;
    let (kind, basis, labels, hol) = match cylinder_basis(o, genus) {
        Some((b, l, hol)) => (BasisKind::Cylinders, b, l, hol),
        None => {
            let b = tree_cotree_basis(o);
            let hol = b.iter().map(|c| c.holonomy()).collect();
            let l = (1..=b.len()).map(|i| format!("c{i}")).collect();
            (BasisKind::TreeCotree, b, l, hol)
        }
    };
    debug_assert_eq!(basis.len(), 2 * genus);
    let gram = gram_of(o, &basis);
    let gram_inv = gram.inverse_unimodular().expect("intersection form is unimodular on H₁");
    let k = basis.len();

    // H₁⁽⁰⁾ basis as columns of `h0` (coordinates in the H₁ basis).
    let (h0_cols, h0_labels) = if kind == BasisKind::Cylinders && hol[0] == (1, 0) && hol[genus] == (0, 1) {
        let mut cols = Vec::new();
        let mut names = Vec::new();
        for i in (0..k).filter(|&i| i != 0 && i != genus) {
            let mut e = vec![0i64; k];
            e[i] = 1;
            e[0] -= hol[i].0;
            e[genus] -= hol[i].1;
            let (base, l) = if i < genus { (&labels[0], hol[i].0) } else { (&labels[genus], hol[i].1) };
            names.push(format!("{} - {}{}", labels[i], l, base));
            cols.push(bigvec(&e));
        }
        (cols, names)
    } else {
        let holm = IntMatrix::from_rows(vec![
            hol.iter().map(|h| BigInt::from(h.0)).collect(),
            hol.iter().map(|h| BigInt::from(h.1)).collect(),
        ]);
        let cols = holm.kernel_basis();
        let names = (1..=cols.len()).map(|i| format!("k{i}")).collect();
        (cols, names)
    };
    let h0 = if h0_cols.is_empty() { IntMatrix::zeros(k, 0) } else { IntMatrix::from_cols(&h0_cols) };
    let omega0 = &(&h0.transpose() * &gram) * &h0;
    assert!(omega0.rows() == 0 || !omega0.det().is_zero(), "Ω is non-degenerate on H₁⁽⁰⁾");
    Ok(HomologyModel {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        origami: o.clone(),
        kind,
        basis,
        labels,
        gram,
        gram_inv,
        hol: hol.into_iter().map(|(a, b)| (BigInt::from(a), BigInt::from(b))).collect(),
        h0,
        h0_labels,
        omega0,
    })
}

impl HomologyModel {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn origami(&self) -> &Origami {
        &self.origami
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn genus(&self) -> usize {
        self.basis.len() / 2
    }

    pub fn basis(&self) -> &[Chain] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Ω on the H₁ basis.
    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Columns are the H₁⁽⁰⁾ basis in H₁ coordinates.
    pub fn h0_basis(&self) -> &IntMatrix {
        &self.h0
    }

    pub fn h0_labels(&self) -> &[String] {
        &self.h0_labels
    }

    pub fn h0_dim(&self) -> usize {
        self.h0.cols()
    }

    /// Ω restricted to H₁⁽⁰⁾.
    pub fn omega0(&self) -> &IntMatrix {
        &self.omega0
    }

    /// (hol_x, hol_y) of each basis element.
    pub fn holonomy_table(&self) -> &[(BigInt, BigInt)] {
        &self.hol
    }

    pub fn class_of(&self, c: &Chain) -> Result<HomologyClass> {
        if !c.is_cycle(&self.origami) {
            return Err(Error::NotACycle);
        }
        let pair: Vec<BigInt> =
            self.basis.iter().map(|b| BigInt::from(chain_intersection(&self.origami, b, c))).collect();
        Ok(HomologyClass { model: self.id, coords: self.gram_inv.mul_vec(&pair), chain: c.clone() })
    }

    pub fn basis_class(&self, i: usize) -> HomologyClass {
        let mut coords = vec![BigInt::zero(); self.basis.len()];
        coords[i] = BigInt::one();
        HomologyClass { model: self.id, coords, chain: self.basis[i].clone() }
    }

    /// The class with the given H₁ coordinates.
    pub fn class_from_coords(&self, coords: &[BigInt]) -> Result<HomologyClass> {
        if coords.len() != self.basis.len() {
            return Err(Error::Dimension(format!("{} coordinates for rank {}", coords.len(), self.basis.len())));
        }
        let mut chain = Chain::zero(self.origami.n());
        for (c, b) in coords.iter().zip(&self.basis) {
            let k: i64 = c.try_into().map_err(|_| Error::Dimension("coefficient exceeds i64".into()))?;
            if k != 0 {
                chain = chain.combine(1, b, k);
            }
        }
        Ok(HomologyClass { model: self.id, coords: coords.to_vec(), chain })
    }

    /// Lifts H₁⁽⁰⁾ coordinates to H₁ coordinates.
    pub fn h0_to_h1(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.h0.mul_vec(y)
    }

    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn intersection_number(&self, a: &HomologyClass, b: &HomologyClass) -> Result<BigInt> {
        if a.model != self.id || b.model != self.id {
            return Err(Error::ModelMismatch);
        }
        Ok(self.pairing(&a.coords, &b.coords))
    }

    pub fn holonomy(&self, c: &HomologyClass) -> (BigInt, BigInt) {
        self.holonomy_of_coords(&c.coords)
    }

    pub fn holonomy_of_coords(&self, x: &[BigInt]) -> (BigInt, BigInt) {
        let mut hx = BigInt::zero();
        let mut hy = BigInt::zero();
        for (c, (a, b)) in x.iter().zip(&self.hol) {
            hx += c * a;
            hy += c * b;
        }
        (hx, hy)
    }

    /// Coordinates in the H₁⁽⁰⁾ basis.
    pub fn project_to_h0(&self, c: &HomologyClass) -> Result<Vec<BigInt>> {
        if c.model != self.id {
            return Err(Error::ModelMismatch);
        }
        self.project_coords(&c.coords)
    }

    pub fn project_coords(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let (hx, hy) = self.holonomy_of_coords(x);
        if !hx.is_zero() || !hy.is_zero() {
            return Err(Error::NotInKernel(hx.to_string(), hy.to_string()));
        }
        // y = Ω₀⁻¹·Kᵀ·G·x
        let rhs: Vec<Vec<BigRational>> = self
            .h0
            .transpose()
            .mul_vec(&self.gram.mul_vec(x))
            .into_iter()
            .map(|v| vec![BigRational::from_integer(v)])
            .collect();
        let y = if rhs.is_empty() {
            vec![]
        } else {
            let sol = solve_rational(&self.omega0.to_rational(), &rhs).expect("Ω₀ is invertible");
            rational_to_int(&sol).expect("H₁⁽⁰⁾ basis is saturated").col(0)
        };
        debug_assert_eq!(self.h0.mul_vec(&y), x);
        Ok(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::origami::{FamilyMember, Origami};

    fn bi(v: &[i64]) -> Vec<BigInt> {
        bigvec(v)
    }

    #[test]
    fn torus_model() {
        let m = build_homology(&Origami::torus()).unwrap();
        assert_eq!(m.gram(), &IntMatrix::from_i64_rows(&[vec![0, 1], vec![-1, 0]]));
        assert_eq!(m.h0_dim(), 0);
        let cc = ChainComplex::new(&Origami::torus());
        assert_eq!(cc.h1_rank(), 2);
        assert!(cc.h1_torsion().is_empty());
    }

    #[test]
    fn boundary_of_boundary() {
        let o = FamilyMember::new(5, 1, None).unwrap().origami;
        let cc = ChainComplex::new(&o);
        assert!((&cc.d1() * &cc.d2()).is_zero());
        assert_eq!(cc.h1_rank(), 10);
    }

    #[test]
    fn g5_basis_elements() {
        let f = FamilyMember::new(5, 1, None).unwrap();
        let m = build_homology(&f.origami).unwrap();
        assert_eq!(m.kind(), BasisKind::Cylinders);
        assert_eq!(m.labels(), &["σ1", "σ2", "σ3", "σ4", "σ5", "ζ1", "ζ2", "ζ3", "ζ4", "ζ10"]);
        assert_eq!(m.h0_labels()[0], "σ2 - 2σ1");
        // Σ₁ projects to the first unit vector.
        let sigma1 = m.class_from_coords(&bi(&[-2, 1, 0, 0, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(m.project_to_h0(&sigma1).unwrap(), bi(&[1, 0, 0, 0, 0, 0, 0, 0]));
        let err = m.project_to_h0(&m.basis_class(0)).unwrap_err();
        assert_eq!(err, Error::NotInKernel("1".into(), "0".into()));
    }

    #[test]
    fn model_mismatch() {
        let o = FamilyMember::new(4, 1, None).unwrap().origami;
        let a = build_homology(&o).unwrap();
        let b = build_homology(&o).unwrap();
        assert_eq!(a.intersection_number(&a.basis_class(0), &b.basis_class(1)), Err(Error::ModelMismatch));
        let c = a.basis_class(2);
        assert_eq!(a.intersection_number(&c, &c).unwrap(), BigInt::zero());
    }

    #[test]
    fn tree_cotree_fallback() {
        let o = Origami::parse("(1 2 3)(4 5)", "(1 4)(2 5 3)").unwrap();
        let m = build_homology(&o).unwrap();
        assert_eq!(m.basis().len(), 2 * o.genus().unwrap());
        assert!(m.gram().det().abs().is_one());
        for b in m.basis() {
            assert!(b.is_cycle(&o));
        }
    }
}
