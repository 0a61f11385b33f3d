//! Zariski density and arithmeticity certificates for the stairs families.
//!
//! Density: A = M_h·M_v is Galois-pinching and B is a unipotent twist whose
//! (B − Id)-image is not Lagrangian. Arithmeticity: three two-cylinder
//! transvections span a non-isotropic W, and a word in their restrictions
//! lies in the unipotent radical fixing the radical vector e of Ω on W.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::IntMatrix;
use crate::cylinders::{multitwist, two_cylinders, Direction, WaistOrder};
use crate::error::{Error, Result};
use crate::galois::{
    dedekind_type, delta_invariants, galois_pinching_certificate, h_k3_type_table, real_split, trace_polynomial,
    DedekindType, FpPoly, HyperGroup, PinchingReport,
};
use crate::homology::{build_homology, HomologyModel};
use crate::origami::{Family, FamilyMember};
use crate::report::Outcome;

/// Density stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub outcome: Outcome,
    pub pinching: PinchingReport,
    pub a_symplectic: bool,
    pub b_symplectic: bool,
    pub b_is_identity: bool,
    pub b_unipotent: bool,
    pub b_image_rank: usize,
    pub b_image_lagrangian: bool,
    /// A and B commute; recorded only, the criterion does not need it.
    pub commute: bool,
    pub reason: Option<String>,
}

fn is_nilpotent(n: &IntMatrix) -> bool {
    let mut p = n.clone();
    for _ in 0..n.rows() {
        if p.is_zero() {
            return true;
        }
        p = &p * n;
    }
    p.is_zero()
}

/// Columns of `basis` span an isotropic subspace of Ω₀.
fn is_isotropic(omega: &IntMatrix, basis: &[Vec<BigInt>]) -> bool {
    basis.iter().all(|u| {
        let ou = omega.transpose().mul_vec(u);
        basis.iter().all(|v| ou.iter().zip(v).map(|(a, b)| a * b).sum::<BigInt>().is_zero())
    })
}

/// Criterion: A Galois-pinching, B ≠ Id unipotent, (B − Id)-image not
/// Lagrangian.
pub fn zariski_density_certificate(
    a: &IntMatrix,
    b: &IntMatrix,
    model: &HomologyModel,
    prime_budget: u64,
    seed: u64,
) -> Result<DensityReport> {
    let omega = model.omega0();
    if a.rows() != omega.rows() || b.rows() != omega.rows() {
        return Err(Error::Dimension("matrices must act on H₁⁽⁰⁾".into()));
    }
    let pinching = galois_pinching_certificate(a, prime_budget, seed)?;
    let id = IntMatrix::identity(b.rows());
    let nb = b - &id;
    let image = nb.image_lattice();
    let g = model.genus();
    let lagrangian = image.len() + 1 == g && is_isotropic(omega, &image);
    let mut rep = DensityReport {
        outcome: Outcome::Fail,
        a_symplectic: a.preserves_form(omega),
        b_symplectic: b.preserves_form(omega),
        b_is_identity: b.is_identity(),
        b_unipotent: is_nilpotent(&nb),
        b_image_rank: image.len(),
        b_image_lagrangian: lagrangian,
        commute: &(a * b) == &(b * a),
        pinching,
        reason: None,
    };
    rep.reason = if !rep.a_symplectic || !rep.b_symplectic {
        Some("A or B does not preserve Ω on H₁⁽⁰⁾".into())
    } else if rep.b_is_identity {
        Some("B is the identity".into())
    } else if !rep.b_unipotent {
        Some("B is not unipotent".into())
    } else if rep.b_image_lagrangian {
        Some("(B − Id)-image is Lagrangian".into())
    } else {
        None
    };
    rep.outcome = if rep.reason.is_some() { Outcome::Fail } else { rep.pinching.outcome };
    if rep.reason.is_none() && !rep.outcome.is_pass() {
        rep.reason = rep.pinching.reason.clone();
    }
    Ok(rep)
}

/// How the three Ω-pairings are named (a, b, c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamConvention {
    /// (R12, −R13, −R23)
    First,
    /// (−R13, −R12, −R23)
    Second,
}

/// Three two-cylinder transvections and their action on W = span(w₁, w₂, w₃).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransvectionTriple {
    pub directions: Vec<Direction>,
    pub labels: Vec<String>,
    /// (ℓ₁, ℓ₂) per direction, first waist curve first.
    pub lengths: Vec<(usize, usize)>,
    pub heights: Vec<(usize, usize)>,
    /// Columns are w₁, w₂, w₃ in the H₁⁽⁰⁾ basis.
    pub w: IntMatrix,
    /// Ω(w_i, w_j).
    pub gram: IntMatrix,
    /// T_i(w_j) = w_j + rm[i][j]·w_i.
    pub rm: IntMatrix,
    pub convention: ParamConvention,
    #[serde(with = "crate::report::bigint")]
    pub a: BigInt,
    #[serde(with = "crate::report::bigint")]
    pub b: BigInt,
    #[serde(with = "crate::report::bigint")]
    pub c: BigInt,
    /// T_i restricted to W, columns in the basis (w₁, w₂, w₃).
    pub restricted: Vec<IntMatrix>,
    /// T_i on H₁⁽⁰⁾, each twist count ℓ_other·h.
    pub twists: Vec<IntMatrix>,
}

fn waist_order(dirs: &[Direction; 3], i: usize) -> WaistOrder {
    // For (1,4) on the genus-5 stairs the shorter waist curve is not the
    // one through square 1 once m > 4; the latter keeps a uniform labeling.
    let g5 = Family::G5.triple_directions();
    if *dirs == g5 && i == 0 {
        WaistOrder::ThroughSquareOne
    } else {
        WaistOrder::Shorter
    }
}

fn convention_for(dirs: &[Direction; 3]) -> (ParamConvention, Vec<String>) {
    let names = |v: [&str; 3]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    if *dirs == Family::G5.triple_directions() {
        (ParamConvention::Second, names(["X", "A", "Γ"]))
    } else if *dirs == Family::G6.triple_directions() {
        (ParamConvention::Second, names(["A", "Γ", "Δ"]))
    } else if *dirs == Family::G4.triple_directions() {
        (ParamConvention::First, names(["X", "A", "Γ"]))
    } else {
        (ParamConvention::First, names(["w1", "w2", "w3"]))
    }
}

/// Builds the triple for three two-cylinder directions.
pub fn three_transvection_setup(model: &HomologyModel, dirs: [Direction; 3]) -> Result<TransvectionTriple> {
    let o = model.origami();
    let mut w_h1 = Vec::new();
    let mut w_h0 = Vec::new();
    let mut gamma1 = Vec::new();
    let mut lengths = Vec::new();
    let mut heights = Vec::new();
    let mut twists = Vec::new();
    for (i, &d) in dirs.iter().enumerate() {
        let [c1, c2] = two_cylinders(o, d, waist_order(&dirs, i))?;
        let chain = c1.waist.combine(c2.length as i64, &c2.waist, -(c1.length as i64));
        let v = model.class_of(&chain)?;
        w_h0.push(model.project_to_h0(&v)?);
        w_h1.push(v.coords().to_vec());
        gamma1.push(model.class_of(&c1.waist)?.coords().to_vec());
        lengths.push((c1.length, c2.length));
        heights.push((c1.height, c2.height));
        let scale = BigRational::from_integer(BigInt::from(d.norm2() * (c1.length * c2.length) as i64));
        twists.push(multitwist(model, d, Some(scale))?.matrix);
    }
    let w = IntMatrix::from_cols(&w_h0);
    let rank = w.rank();
    if rank < 3 {
        return Err(Error::DegenerateSpan(rank));
    }
    let mut gram = IntMatrix::zeros(3, 3);
    let mut rm = IntMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            gram[(i, j)] = model.pairing(&w_h1[i], &w_h1[j]);
            rm[(i, j)] = BigInt::from(heights[i].0) * model.pairing(&gamma1[i], &w_h1[j]);
        }
    }
    // The rank-one form T_i(w) = w + rm·w_i must agree with the full twist.
    for i in 0..3 {
        for j in 0..3 {
            let img = twists[i].mul_vec(&w_h0[j]);
            let want: Vec<BigInt> = w_h0[j].iter().zip(&w_h0[i]).map(|(x, y)| x + &rm[(i, j)] * y).collect();
            if img != want {
                return Err(Error::Verification(format!("twist {i} is not a transvection along w{}", i + 1)));
            }
        }
    }
    let restricted = (0..3).map(|i| restricted_power(&rm, i, &BigInt::one())).collect();
    let (convention, labels) = convention_for(&dirs);
    let (r12, r13, r23) = (rm[(0, 1)].clone(), rm[(0, 2)].clone(), rm[(1, 2)].clone());
    let (a, b, c) = match convention {
        ParamConvention::First => (r12, -r13, -r23),
        ParamConvention::Second => (-r13, -r12, -r23),
    };
    Ok(TransvectionTriple {
        directions: dirs.to_vec(),
        labels,
        lengths,
        heights,
        w,
        gram,
        rm,
        convention,
        a,
        b,
        c,
        restricted,
        twists,
    })
}

/// R_i^s = Id + s·E_i·rm_i on W; exact because rm[i][i] = 0.
pub fn restricted_power(rm: &IntMatrix, i: usize, s: &BigInt) -> IntMatrix {
    let mut m = IntMatrix::identity(3);
    for j in 0..3 {
        m[(i, j)] += s * &rm[(i, j)];
    }
    m
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

fn cross(a: &[BigInt], b: &[BigInt]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn parallel(a: &[BigInt], b: &[BigInt]) -> bool {
    cross(a, b).iter().all(Zero::is_zero)
}

/// The radical of Ω on W, in (w₁, w₂, w₃) coordinates.
pub fn radical_vector(t: &TransvectionTriple) -> Result<Vec<BigInt>> {
    let (rm, g) = (&t.rm, &t.gram);
    if g.is_zero() {
        return Err(Error::NoRadical);
    }
    let std = vec![rm[(1, 2)].clone(), -rm[(0, 2)].clone(), rm[(0, 1)].clone()];
    let e = if !std.iter().all(Zero::is_zero) && g.mul_vec(&std).iter().all(Zero::is_zero) {
        std
    } else {
        let mut k = primitive(vec![g[(1, 2)].clone(), -g[(0, 2)].clone(), g[(0, 1)].clone()]);
        let dot: BigInt = k.iter().zip(&std).map(|(x, y)| x * y).sum();
        if dot.is_negative() {
            k = k.into_iter().map(|x| -x).collect();
        }
        k
    };
    for r in &t.restricted {
        if r.mul_vec(&e) != e {
            return Err(Error::Verification("radical vector not fixed by a restricted twist".into()));
        }
    }
    Ok(e)
}

/// One letter R_gen^exp of a word in the restricted twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    #[serde(with = "crate::report::bigint")]
    pub exponent: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalWitness {
    /// Applied right to left, as a matrix product in the listed order.
    pub word: Vec<Letter>,
    /// U on W in the basis (w₁, w₂, w₃).
    pub matrix: IntMatrix,
    pub closed_form: bool,
}

pub fn evaluate_word(rm: &IntMatrix, word: &[Letter]) -> IntMatrix {
    word.iter().fold(IntMatrix::identity(3), |acc, l| &acc * &restricted_power(rm, l.generator, &l.exponent))
}

/// U ≠ Id, (U − Id)W ⊆ span(e), (U − Id)e = 0.
pub fn is_radical_element(u: &IntMatrix, e: &[BigInt]) -> bool {
    if u.is_identity() || e.iter().all(Zero::is_zero) {
        return false;
    }
    let n = u - &IntMatrix::identity(3);
    (0..3).all(|j| parallel(&n.col(j), e)) && n.mul_vec(e).iter().all(Zero::is_zero)
}

fn letter(generator: usize, exponent: BigInt) -> Letter {
    Letter { generator, exponent }
}

fn det3(a: &[BigInt], b: &[BigInt], c: &[BigInt]) -> BigInt {
    let x = cross(b, c);
    a.iter().zip(&x).map(|(p, q)| p * q).sum()
}

fn unit(i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); 3];
    v[i] = BigInt::one();
    v
}

/// A non-trivial element of the unipotent radical, or None.
///
/// With an Ω-orthogonal pair (j, k) and third index i, U = R_j^s·R_k^t with
/// s = −rm[k][i]·e_j and t = −rm[j][i]·e_k. Otherwise a conjugate
/// R_j^y·R_i^k′·R_j^(−y) is made parallel to R_l modulo e and the two are
/// balanced: R_j^y·R_i^k′·R_j^(−y)·R_l^(−k).
pub fn unipotent_radical_witness(t: &TransvectionTriple) -> Option<RadicalWitness> {
    let e = radical_vector(t).ok()?;
    let rm = &t.rm;
    for (j, k, i) in [(1, 2, 0), (0, 2, 1), (0, 1, 2)] {
        if !rm[(j, k)].is_zero() || !rm[(k, j)].is_zero() {
            continue;
        }
        let s = -(&rm[(k, i)] * &e[j]);
        let tt = -(&rm[(j, i)] * &e[k]);
        let word = vec![letter(j, s), letter(k, tt)];
        let u = evaluate_word(rm, &word);
        if is_radical_element(&u, &e) {
            return Some(RadicalWitness { word, matrix: u, closed_form: true });
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j || rm[(j, i)].is_zero() {
                continue;
            }
            for l in 0..3 {
                // u = E_i + y·rm[j][i]·E_j must be parallel to E_l mod e.
                let d_il = det3(&unit(i), &unit(l), &e);
                let d_jl = det3(&unit(j), &unit(l), &e);
                if d_jl.is_zero() {
                    continue;
                }
                let y = BigRational::new(-d_il, &rm[(j, i)] * &d_jl);
                if !y.is_integer() || y.is_zero() {
                    continue;
                }
                let y = y.to_integer();
                let conj = |kk: &BigInt| {
                    &(&restricted_power(rm, j, &y) * &restricted_power(rm, i, kk)) * &restricted_power(rm, j, &-&y)
                };
                let m1 = &conj(&BigInt::one()) - &IntMatrix::identity(3);
                let m2 = &restricted_power(rm, l, &BigInt::one()) - &IntMatrix::identity(3);
                let Some(x) = (0..3).find(|&c| !parallel(&m2.col(c), &e) && !m2.col(c).iter().all(Zero::is_zero))
                else {
                    continue;
                };
                let (c1, c2) = (cross(&m1.col(x), &e), cross(&m2.col(x), &e));
                let Some(p) = (0..3).find(|&q| !c2[q].is_zero()) else { continue };
                let rho = BigRational::new(c1[p].clone(), c2[p].clone());
                let (kk, k) = (rho.denom().clone(), rho.numer().clone());
                if k.is_zero() {
                    continue;
                }
                let word = vec![letter(j, y.clone()), letter(i, kk), letter(j, -&y), letter(l, -k)];
                let u = evaluate_word(rm, &word);
                if is_radical_element(&u, &e) {
                    return Some(RadicalWitness { word, matrix: u, closed_form: false });
                }
            }
        }
    }
    None
}

/// (T − Id)(H₁⁽⁰⁾(ℤ)) is a rank-one lattice along w.
pub fn rank_one_along(t: &IntMatrix, w: &[BigInt]) -> bool {
    let n = t - &IntMatrix::identity(t.rows());
    let img = n.image_lattice();
    img.len() == 1 && parallel_n(&img[0], w)
}

fn parallel_n(a: &[BigInt], b: &[BigInt]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    !a.iter().all(Zero::is_zero) && !b.iter().all(Zero::is_zero)
}

/// Arithmeticity stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticityReport {
    pub outcome: Outcome,
    pub triple: Option<TransvectionTriple>,
    pub non_isotropic: bool,
    pub rank_one: Vec<bool>,
    #[serde(with = "crate::report::bigint_vec")]
    pub radical: Vec<BigInt>,
    pub witness: Option<RadicalWitness>,
    pub reason: Option<String>,
}

pub fn arithmeticity_stage(model: &HomologyModel, dirs: [Direction; 3]) -> ArithmeticityReport {
    let mut rep = ArithmeticityReport {
        outcome: Outcome::Fail,
        triple: None,
        non_isotropic: false,
        rank_one: vec![],
        radical: vec![],
        witness: None,
        reason: None,
    };
    let t = match three_transvection_setup(model, dirs) {
        Ok(t) => t,
        Err(e) => {
            rep.reason = Some(e.to_string());
            return rep;
        }
    };
    rep.non_isotropic = !t.gram.is_zero();
    rep.rank_one = (0..3).map(|i| rank_one_along(&t.twists[i], &t.w.col(i))).collect();
    match radical_vector(&t) {
        Ok(e) => rep.radical = e,
        Err(e) => rep.reason = Some(e.to_string()),
    }
    rep.witness = unipotent_radical_witness(&t);
    rep.triple = Some(t);
    if !rep.non_isotropic {
        rep.reason = Some("W is isotropic".into());
    } else if !rep.rank_one.iter().all(|&b| b) {
        rep.reason = Some("a transvection image is not rank one along its vector".into());
    } else if rep.reason.is_some() {
    } else if rep.witness.is_none() {
        rep.outcome = Outcome::Inconclusive;
        rep.reason = Some(
            "no unipotent radical element among R_j^s·R_k^t on orthogonal pairs or R_j^y·R_i^k′·R_j^(−y)·R_l^(−k)".into(),
        );
    } else {
        rep.outcome = Outcome::Pass;
    }
    rep
}

/// Where the family member came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrigamiDescriptor {
    pub genus: u32,
    pub m: usize,
    pub n_param: usize,
    pub m_param: usize,
    pub squares: usize,
    pub h: String,
    pub v: String,
    pub stratum: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistData {
    #[serde(with = "crate::report::rational")]
    pub horizontal_scale: BigRational,
    #[serde(with = "crate::report::rational")]
    pub vertical_scale: BigRational,
    pub mh: IntMatrix,
    pub mv: IntMatrix,
    pub a: IntMatrix,
    pub density_direction: Direction,
    pub b: IntMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ArithmeticCertified,
    DensityOnly,
    Inconclusive,
    Fail,
}

impl Verdict {
    /// 0 certified, 1 fail, 4 anything undecided.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::ArithmeticCertified => 0,
            Verdict::Fail => 1,
            Verdict::DensityOnly | Verdict::Inconclusive => 4,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ArithmeticCertified => "arithmetic-certified",
            Verdict::DensityOnly => "density-only",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub tool_version: String,
    pub seed: u64,
    pub prime_budget: u64,
    pub origami: OrigamiDescriptor,
    pub twists: TwistData,
    pub density: DensityReport,
    pub arithmeticity: ArithmeticityReport,
    pub verdict: Verdict,
    pub timings_ms: BTreeMap<String, u64>,
}

impl CertificateReport {
    /// The first failed hypothesis, if any.
    pub fn failure(&self) -> Option<String> {
        if !self.density.outcome.is_pass() {
            return self.density.reason.as_ref().map(|r| format!("density: {r}"));
        }
        self.arithmeticity.reason.as_ref().map(|r| format!("arithmeticity: {r}"))
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub prime_budget: u64,
    pub seed: u64,
    pub overrides: Option<(usize, usize)>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            prime_budget: crate::galois::DEFAULT_PRIME_BUDGET,
            seed: crate::galois::DEFAULT_SEED,
            overrides: None,
        }
    }
}

/// M_h and M_v at the per-family scales, and A = M_h·M_v.
pub fn family_twists(member: &FamilyMember, model: &HomologyModel) -> Result<(IntMatrix, IntMatrix, BigRational, BigRational)> {
    let f = member.family.scale_factor();
    let sh = BigRational::from_integer(BigInt::from(f * member.n_param));
    let sv = BigRational::from_integer(BigInt::from(f * member.m_param));
    let mh = multitwist(model, Direction::HORIZONTAL, Some(sh.clone()))?.matrix;
    let mv = multitwist(model, Direction::VERTICAL, Some(sv.clone()))?.matrix;
    Ok((mh, mv, sh, sv))
}

/// The two-cylinder twist used as B, with twist counts ℓ_other·h.
pub fn density_twist(model: &HomologyModel, d: Direction) -> Result<IntMatrix> {
    let [c1, c2] = two_cylinders(model.origami(), d, WaistOrder::Shorter)?;
    let scale = BigRational::from_integer(BigInt::from(d.norm2() * (c1.length * c2.length) as i64));
    Ok(multitwist(model, d, Some(scale))?.matrix)
}

/// Full pipeline for one family member.
pub fn arithmeticity_certificate(genus: u32, m: usize, opts: &CertifyOptions) -> Result<CertificateReport> {
    let mut timings = BTreeMap::new();
    let clock = Instant::now();
    let member = FamilyMember::new(genus, m, opts.overrides)?;
    let o = &member.origami;
    let model = build_homology(o)?;
    let origami = OrigamiDescriptor {
        genus,
        m,
        n_param: member.n_param,
        m_param: member.m_param,
        squares: o.n(),
        h: o.h().to_string(),
        v: o.v().to_string(),
        stratum: o.stratum()?,
    };
    timings.insert("homology".to_string(), clock.elapsed().as_millis() as u64);

    let t0 = Instant::now();
    let (mh, mv, sh, sv) = family_twists(&member, &model)?;
    let a = &mh * &mv;
    let dd = member.family.density_direction();
    let b = density_twist(&model, dd)?;
    timings.insert("twists".to_string(), t0.elapsed().as_millis() as u64);

    let t1 = Instant::now();
    let density = zariski_density_certificate(&a, &b, &model, opts.prime_budget, opts.seed)?;
    timings.insert("density".to_string(), t1.elapsed().as_millis() as u64);

    let t2 = Instant::now();
    let arithmeticity = arithmeticity_stage(&model, member.family.triple_directions());
    timings.insert("arithmeticity".to_string(), t2.elapsed().as_millis() as u64);

    let verdict = match (density.outcome, arithmeticity.outcome) {
        (Outcome::Pass, Outcome::Pass) => Verdict::ArithmeticCertified,
        (Outcome::Pass, _) => Verdict::DensityOnly,
        (Outcome::Fail, _) => Verdict::Fail,
        (Outcome::Inconclusive, _) => Verdict::Inconclusive,
    };
    timings.insert("total".to_string(), clock.elapsed().as_millis() as u64);
    Ok(CertificateReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seed: opts.seed,
        prime_budget: opts.prime_budget,
        origami,
        twists: TwistData {
            horizontal_scale: sh,
            vertical_scale: sv,
            mh,
            mv,
            a,
            density_direction: dd,
            b,
        },
        density,
        arithmeticity,
        verdict,
        timings_ms: timings,
    })
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(what.to_string()))
    }
}

/// Re-derives every recorded witness from the origami alone.
pub fn verify_report(r: &CertificateReport) -> Result<()> {
    let d = &r.origami;
    let member = FamilyMember::new(d.genus, d.m, Some((d.n_param, d.m_param)))?;
    let o = &member.origami;
    check(o.h().to_string() == d.h && o.v().to_string() == d.v, "origami permutations")?;
    check(o.stratum()? == d.stratum, "stratum")?;
    let model = build_homology(o)?;
    let (mh, mv, sh, sv) = family_twists(&member, &model)?;
    check(mh == r.twists.mh && mv == r.twists.mv, "twist matrices")?;
    check(sh == r.twists.horizontal_scale && sv == r.twists.vertical_scale, "twist scales")?;
    let a = &mh * &mv;
    check(a == r.twists.a, "A = M_h·M_v")?;
    let b = density_twist(&model, r.twists.density_direction)?;
    check(b == r.twists.b, "B")?;

    if r.density.outcome.is_pass() {
        let omega = model.omega0();
        check(a.preserves_form(omega) && b.preserves_form(omega), "symplectic")?;
        let nb = &b - &IntMatrix::identity(b.rows());
        check(!nb.is_zero() && is_nilpotent(&nb), "B unipotent")?;
        let img = nb.image_lattice();
        check(!(img.len() + 1 == model.genus() && is_isotropic(omega, &img)), "B image not Lagrangian")?;

        let pin = &r.density.pinching;
        let p = a.charpoly()?;
        check(p == pin.charpoly, "characteristic polynomial")?;
        let pair = trace_polynomial(&p)?;
        check(Some(&pair.q) == pin.trace_poly.as_ref(), "trace polynomial")?;
        check(real_split(&pair)?, "real splitting")?;
        let hv = pin.hyperoctahedral.as_ref().ok_or_else(|| Error::Verification("missing verdict".into()))?;
        check(hv.group == HyperGroup::Gk, "hyperoctahedral verdict")?;
        let ip = hv.irreducibility_prime.ok_or_else(|| Error::Verification("missing prime".into()))?;
        let fp = FpPoly::from_int(&p, ip);
        check(fp.deg() == p.deg() && fp.is_irreducible(), "irreducibility prime")?;
        let (tp, ty) = hv.type_witness.clone().ok_or_else(|| Error::Verification("missing type".into()))?;
        check(dedekind_type(&p, tp) == DedekindType::Valid(ty.clone()), "Dedekind type")?;
        check(!h_k3_type_table(pair.k()).contains(&ty), "type outside H_k3")?;
        let delta = delta_invariants(&pair);
        check(delta == hv.delta, "Δ invariants")?;
        check(
            !crate::algebra::is_rational_square(&delta.delta1) && !crate::algebra::is_rational_square(&delta.delta2),
            "Δ nonsquare",
        )?;
        let again = crate::galois::hyperoctahedral_certificate(&pair, r.prime_budget, r.seed);
        check(again.group == HyperGroup::Gk, "Gal(Q) step")?;
    }

    if r.arithmeticity.outcome.is_pass() {
        let t = three_transvection_setup(&model, member.family.triple_directions())?;
        let rec = r.arithmeticity.triple.as_ref().ok_or_else(|| Error::Verification("missing triple".into()))?;
        check(&t == rec, "transvection triple")?;
        check(!t.gram.is_zero(), "W non-isotropic")?;
        for i in 0..3 {
            check(rank_one_along(&t.twists[i], &t.w.col(i)), "rank-one transvection")?;
        }
        let e = radical_vector(&t)?;
        check(e == r.arithmeticity.radical, "radical vector")?;
        let w = r.arithmeticity.witness.as_ref().ok_or_else(|| Error::Verification("missing witness".into()))?;
        let u = evaluate_word(&t.rm, &w.word);
        check(u == w.matrix, "witness word")?;
        check(is_radical_element(&u, &e), "witness in unipotent radical")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_b_fails_density() {
        let member = FamilyMember::new(4, 1, None).unwrap();
        let model = build_homology(&member.origami).unwrap();
        let (mh, mv, _, _) = family_twists(&member, &model).unwrap();
        let id = IntMatrix::identity(model.h0_dim());
        let r = zariski_density_certificate(&(&mh * &mv), &id, &model, 200, 1).unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.b_is_identity);
    }

    #[test]
    fn c_vanishes_under_lock() {
        for g in 4..=6u32 {
            for m in 2..5 {
                let member = FamilyMember::new(g, m, None).unwrap();
                let model = build_homology(&member.origami).unwrap();
                let t = three_transvection_setup(&model, member.family.triple_directions()).unwrap();
                assert!(t.c.is_zero(), "g{g} m{m}");
                assert!(!t.gram.is_zero());
                let e = radical_vector(&t).unwrap();
                let w = unipotent_radical_witness(&t).unwrap();
                assert!(w.closed_form && is_radical_element(&w.matrix, &e));
            }
        }
    }

    #[test]
    fn off_lock_witness_still_sound() {
        let member = FamilyMember::new(4, 2, Some((11, 8))).unwrap();
        let model = build_homology(&member.origami).unwrap();
        let t = three_transvection_setup(&model, member.family.triple_directions()).unwrap();
        assert!(!t.c.is_zero());
        let e = radical_vector(&t).unwrap();
        if let Some(w) = unipotent_radical_witness(&t) {
            assert!(is_radical_element(&w.matrix, &e));
            assert_eq!(evaluate_word(&t.rm, &w.word), w.matrix);
        }
    }

    #[test]
    fn isotropic_triple_has_no_witness() {
        let z = IntMatrix::zeros(3, 3);
        let t = TransvectionTriple {
            directions: vec![Direction::HORIZONTAL; 3],
            labels: vec![],
            lengths: vec![],
            heights: vec![],
            w: IntMatrix::identity(3),
            gram: z.clone(),
            rm: z.clone(),
            convention: ParamConvention::First,
            a: BigInt::zero(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            restricted: vec![IntMatrix::identity(3); 3],
            twists: vec![],
        };
        assert_eq!(radical_vector(&t), Err(Error::NoRadical));
        assert!(unipotent_radical_witness(&t).is_none());
    }
}
