//! The triangulation of the product of triangles `Δ^n` into the simplices
//! `T_B`, one per bipermutation, and its verification.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{bipermutation_count, bisequence_of_configuration, enumerate_bipermutations, Bipermutation};
use crate::error::TriangulationError;
use crate::invariants::{bieulerian_by_ehrhart, f_vector_formula, h_from_f};
use crate::linalg::{determinant, solve, unimodular_inverse, IntMatrix};
use crate::poly::{factorial, IntPolynomial, RatPolynomial};
use crate::sets::ElementSet;

/// The vertex `v_{S,T}` of `Δ^n` (`S ∪ T = [n]`), the `3 × n` table with rows
/// `e_{E-S}`, `f_{E-T}`, `g_{S∩T}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub s: ElementSet,
    pub t: ElementSet,
    pub n: usize,
}

impl ProductVertex {
    pub fn new(s: ElementSet, t: ElementSet, n: usize) -> Self {
        assert_eq!(s.union(t), ElementSet::full(n), "S ∪ T must be [n]");
        ProductVertex { s, t, n }
    }

    pub fn table(&self) -> [Vec<i64>; 3] {
        let e = ElementSet::full(self.n);
        let row = |set: ElementSet| (1..=self.n).map(|i| i64::from(set.contains(i))).collect::<Vec<_>>();
        [row(e.difference(self.s)), row(e.difference(self.t)), row(self.s.intersection(self.t))]
    }

    /// `π_1(v) = (1 - u, 1 - v)`, which is `e_S + f_T`.
    pub fn projection(&self) -> [Vec<i64>; 2] {
        let [u, v, _] = self.table();
        [u.iter().map(|x| 1 - x).collect(), v.iter().map(|x| 1 - x).collect()]
    }

    /// One of `v[∅,E]`, `v[E,∅]`, `v[E,E]`, shared by every `T_B`.
    pub fn is_cone_point(&self) -> bool {
        let e = ElementSet::full(self.n);
        (self.s.is_empty() && self.t == e) || (self.s == e && (self.t.is_empty() || self.t == e))
    }
}

impl fmt::Display for ProductVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: ElementSet| if s.is_empty() { "∅".to_string() } else { s.to_string() };
        write!(f, "v[{},{}]", side(self.s), side(self.t))
    }
}

impl fmt::Debug for ProductVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `3^n` vertices of `Δ^n`, sorted by `(S, T)`.
pub fn delta_vertices(n: usize) -> Vec<ProductVertex> {
    let e = ElementSet::full(n);
    let mut out = Vec::new();
    for s in 0..=e.bits() {
        let s = ElementSet::from_bits(s);
        let forced = e.difference(s);
        let mut extra = s.bits();
        loop {
            out.push(ProductVertex { s, t: forced.union(ElementSet::from_bits(extra)), n });
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & s.bits();
        }
    }
    out.sort();
    out
}

/// `π_1` applied to a rational `3 × n` table.
pub fn projection_pi(p: &[Vec<BigRational>; 3]) -> [Vec<BigRational>; 2] {
    let one = BigRational::one();
    [p[0].iter().map(|x| &one - x).collect(), p[1].iter().map(|x| &one - x).collect()]
}

/// `T_B`: the three cone points followed by `v_{S,T}` for the splits of `B`.
#[derive(Clone, Debug)]
pub struct BipermSimplex {
    pub bipermutation: Bipermutation,
    pub vertices: Vec<ProductVertex>,
}

impl BipermSimplex {
    /// Homogeneous vertex matrix: column `j` is `[u_j; v_j; 1]`.
    fn homogeneous_matrix(&self) -> IntMatrix {
        let n = self.bipermutation.n();
        let tables: Vec<[Vec<i64>; 3]> = self.vertices.iter().map(ProductVertex::table).collect();
        let mut m = vec![vec![BigInt::zero(); self.vertices.len()]; 2 * n + 1];
        for (j, t) in tables.iter().enumerate() {
            for i in 0..n {
                m[i][j] = BigInt::from(t[0][i]);
                m[n + i][j] = BigInt::from(t[1][i]);
            }
            m[2 * n][j] = BigInt::one();
        }
        m
    }

    /// Edge vectors from `v_{E,E}` pushed through `π_1`, as a `2n × 2n` matrix.
    pub fn edge_matrix(&self) -> IntMatrix {
        let n = self.bipermutation.n();
        let apex = ProductVertex::new(ElementSet::full(n), ElementSet::full(n), n).projection();
        let cols: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .filter(|v| v.s != ElementSet::full(n) || v.t != ElementSet::full(n))
            .map(|v| {
                let p = v.projection();
                p[0].iter().zip(&apex[0]).chain(p[1].iter().zip(&apex[1])).map(|(a, b)| a - b).collect()
            })
            .collect();
        (0..2 * n).map(|i| cols.iter().map(|c| BigInt::from(c[i])).collect()).collect()
    }
}

pub fn simplex_of_bipermutation(b: &Bipermutation) -> BipermSimplex {
    let n = b.n();
    let e = ElementSet::full(n);
    let mut vertices = vec![
        ProductVertex::new(ElementSet::EMPTY, e, n),
        ProductVertex::new(e, ElementSet::EMPTY, n),
        ProductVertex::new(e, e, n),
    ];
    vertices.extend(b.bisubsets().into_iter().map(|st| ProductVertex::new(st.left(), st.right(), n)));
    BipermSimplex { bipermutation: b.clone(), vertices }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnimodularityReport {
    pub n: usize,
    pub simplices: u64,
    pub failures: Vec<String>,
    /// Determinant of `π_1` on the lattice of the plane `P`.
    pub plane_determinant: i64,
    /// Sum of normalized volumes (each simplex contributes `|det| = 1`).
    pub total_volume: String,
    /// `(2n)!` times the leading coefficient of `C(k+2,2)^n`.
    pub expected_volume: String,
}

impl UnimodularityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.plane_determinant.abs() == 1 && self.total_volume == self.expected_volume
    }
}

/// Determinant of the linear part of `π_1` on the lattice basis
/// `{e_i - g_i, f_i - g_i}` of the plane `P`.
pub fn plane_projection_determinant(n: usize) -> BigInt {
    let mut m = vec![vec![BigInt::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        // e_i - g_i ↦ (-e_i, 0) and f_i - g_i ↦ (0, -f_i).
        m[i][i] = -BigInt::one();
        m[n + i][n + i] = -BigInt::one();
    }
    determinant(&m)
}

pub fn unimodularity_check(n: usize) -> UnimodularityReport {
    let all: Vec<Bipermutation> = enumerate_bipermutations(n).collect();
    let dets: Vec<(String, BigInt)> =
        all.par_iter().map(|b| (b.to_string(), determinant(&simplex_of_bipermutation(b).edge_matrix()))).collect();
    let failures: Vec<String> =
        dets.iter().filter(|(_, d)| !d.abs().is_one()).map(|(b, d)| format!("{b}: det {d}")).collect();
    let total: BigInt = dets.iter().map(|(_, d)| d.abs()).sum();
    let lead = RatPolynomial::binomial(2, 2).pow(n as u32).leading().cloned().unwrap_or_else(BigRational::zero);
    let expected = lead * BigRational::from_integer(factorial(2 * n as u64));
    UnimodularityReport {
        n,
        simplices: all.len() as u64,
        failures,
        plane_determinant: i64::try_from(plane_projection_determinant(n)).unwrap_or(0),
        total_volume: total.to_string(),
        expected_volume: expected.to_string(),
    }
}

/// A point of `Δ^n` written as a convex combination of the vertices of `T_B`.
#[derive(Clone, Debug)]
pub struct Location {
    pub bipermutation: Bipermutation,
    pub coefficients: Vec<(ProductVertex, BigRational)>,
}

fn check_in_product(p: &[Vec<BigRational>; 3]) -> Result<usize, TriangulationError> {
    let n = p[0].len();
    if p[1].len() != n || p[2].len() != n {
        return Err(TriangulationError::NotInProduct("rows have different lengths".into()));
    }
    for i in 0..n {
        if p.iter().any(|row| row[i].is_negative()) {
            return Err(TriangulationError::NotInProduct(format!("negative entry in column {}", i + 1)));
        }
        if &p[0][i] + &p[1][i] + &p[2][i] != BigRational::one() {
            return Err(TriangulationError::NotInProduct(format!("column {} does not sum to 1", i + 1)));
        }
    }
    Ok(n)
}

/// Solves `π_1(p) = Σ λ_{S|T} (e_S + f_T) + λ e_E + μ f_E` and converts to
/// barycentric coordinates `(a, b, c, λ_{S|T}…)` in `T_B`, following the
/// vertex order of [`simplex_of_bipermutation`].
pub fn locate_in_simplex(b: &Bipermutation, p: &[Vec<BigRational>; 3]) -> Result<Location, TriangulationError> {
    let n = check_in_product(p)?;
    let splits = b.bisubsets();
    let target = projection_pi(p);
    // Unknowns: λ_{S|T} for each split, then λ, μ.
    let cols = splits.len() + 2;
    let mut m = vec![vec![BigRational::zero(); cols]; 2 * n];
    for (j, st) in splits.iter().enumerate() {
        for i in st.left().iter() {
            m[i - 1][j] = BigRational::one();
        }
        for i in st.right().iter() {
            m[n + i - 1][j] = BigRational::one();
        }
    }
    for i in 0..n {
        m[i][cols - 2] = BigRational::one();
        m[n + i][cols - 1] = BigRational::one();
    }
    let rhs: Vec<BigRational> = target[0].iter().chain(&target[1]).cloned().collect();
    let sol = solve(&m, &rhs).ok_or_else(|| TriangulationError::Reconstruction(b.to_string()))?;
    let (lams, rest) = sol.split_at(splits.len());
    let (lambda, mu) = (&rest[0], &rest[1]);
    let sum: BigRational = lams.iter().sum();
    let one = BigRational::one();
    let a = &one - &sum - lambda;
    let bb = &one - &sum - mu;
    let c = lambda + mu + &sum - &one;

    let simplex = simplex_of_bipermutation(b);
    let mut coeffs = vec![a, bb, c];
    coeffs.extend(lams.iter().cloned());
    let coefficients: Vec<(ProductVertex, BigRational)> = simplex.vertices.into_iter().zip(coeffs).collect();
    if let Some((v, x)) = coefficients.iter().find(|(_, x)| x.is_negative()) {
        return Err(TriangulationError::NegativeCoefficient {
            bipermutation: b.to_string(),
            vertex: v.to_string(),
            value: x.to_string(),
        });
    }
    let total: BigRational = coefficients.iter().map(|(_, x)| x).sum();
    let mut rebuilt = [vec![BigRational::zero(); n], vec![BigRational::zero(); n], vec![BigRational::zero(); n]];
    for (v, x) in &coefficients {
        for (r, row) in v.table().iter().enumerate() {
            for (i, &e) in row.iter().enumerate() {
                if e != 0 {
                    rebuilt[r][i] += x;
                }
            }
        }
    }
    if total != one || rebuilt != *p {
        return Err(TriangulationError::Reconstruction(b.to_string()));
    }
    Ok(Location { bipermutation: b.clone(), coefficients })
}

/// Finds the simplex containing `p` from the chamber of `π(p)` and returns
/// its barycentric coordinates.
pub fn cover_locate(p: &[Vec<BigRational>; 3]) -> Result<Location, TriangulationError> {
    check_in_product(p)?;
    let [z, w] = projection_pi(p);
    let reading = bisequence_of_configuration(&z, &w);
    let b = reading.as_bipermutation().ok_or_else(|| TriangulationError::TieOnBoundary(reading.to_string()))?;
    locate_in_simplex(&b, p)
}

/// A point of `Δ^n` whose columns have entries `k/q`, drawn uniformly per column.
pub fn random_product_point(rng: &mut impl Rng, n: usize, q: u64) -> [Vec<BigRational>; 3] {
    let mut p = [Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n)];
    for _ in 0..n {
        let (x, y) = (rng.gen_range(0..=q), rng.gen_range(0..=q));
        let (lo, hi) = (x.min(y), x.max(y));
        for (row, v) in p.iter_mut().zip([lo, hi - lo, q - hi]) {
            row.push(BigRational::new(BigInt::from(v), BigInt::from(q)));
        }
    }
    p
}

/// Default prime denominator for random points.
pub const SAMPLE_PRIME: u64 = 10007;

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub n: usize,
    pub located: usize,
    pub resampled: usize,
    pub failures: Vec<String>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Locates `samples` seeded random points, re-sampling those on walls.
pub fn cover_check(n: usize, samples: usize, seed: u64) -> CoverReport {
    let results: Vec<(usize, Option<String>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut resampled = 0;
            loop {
                let p = random_product_point(&mut rng, n, SAMPLE_PRIME);
                match cover_locate(&p) {
                    Ok(_) => return (resampled, None),
                    Err(TriangulationError::TieOnBoundary(_)) => resampled += 1,
                    Err(e) => return (resampled, Some(e.to_string())),
                }
            }
        })
        .collect();
    CoverReport {
        n,
        located: results.iter().filter(|(_, f)| f.is_none()).count(),
        resampled: results.iter().map(|(r, _)| r).sum(),
        failures: results.into_iter().filter_map(|(_, f)| f).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceToFaceReport {
    pub n: usize,
    pub pairs: usize,
    pub samples: usize,
    /// Samples of `T_{B1}` that also lie in `T_{B2}`.
    pub shared_hits: usize,
    pub failures: Vec<String>,
}

impl FaceToFaceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every ordered pair of distinct simplices, samples points on random
/// faces of `T_{B1}` with integer weights and checks that whenever a sample
/// lies in `T_{B2}` it lies in the face spanned by the common vertices, with
/// the same barycentric weights.
pub fn face_to_face_check(n: usize, samples_per_pair: usize, seed: u64) -> FaceToFaceReport {
    let simplices: Vec<BipermSimplex> = enumerate_bipermutations(n).map(|b| simplex_of_bipermutation(&b)).collect();
    let to_i64 = |m: IntMatrix| -> Vec<Vec<i64>> {
        m.into_iter().map(|r| r.into_iter().map(|x| i64::try_from(x).expect("small entry")).collect()).collect()
    };
    let homog: Vec<Vec<Vec<i64>>> = simplices.iter().map(|s| to_i64(s.homogeneous_matrix())).collect();
    let inverses: Vec<Vec<Vec<i64>>> = simplices
        .iter()
        .map(|s| to_i64(unimodular_inverse(&s.homogeneous_matrix()).expect("unimodular simplex")))
        .collect();
    let dim = 2 * n + 1;
    let count = simplices.len();
    let outcomes: Vec<(usize, Vec<String>)> = (0..count * count)
        .into_par_iter()
        .filter(|idx| idx / count != idx % count)
        .map(|idx| {
            let (i1, i2) = (idx / count, idx % count);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x2545_F491_4F6C_DD1D));
            // Position in T_{B2} of each vertex of T_{B1}, when shared.
            let shared: Vec<Option<usize>> =
                simplices[i1].vertices.iter().map(|v| simplices[i2].vertices.iter().position(|w| w == v)).collect();
            let mut hits = 0;
            let mut failures = Vec::new();
            for _ in 0..samples_per_pair {
                let weights: Vec<i64> = (0..dim)
                    .map(|_| if rng.gen_bool(0.5) { rng.gen_range(1..=SAMPLE_PRIME as i64) } else { 0 })
                    .collect();
                if weights.iter().all(|&w| w == 0) {
                    continue;
                }
                let point: Vec<i64> = (0..dim).map(|r| (0..dim).map(|c| homog[i1][r][c] * weights[c]).sum()).collect();
                let bary: Vec<i64> = (0..dim).map(|r| (0..dim).map(|c| inverses[i2][r][c] * point[c]).sum()).collect();
                if bary.iter().any(|&x| x < 0) {
                    continue;
                }
                hits += 1;
                let mut expected = vec![0i64; dim];
                let mut ok = true;
                for (j, &w) in weights.iter().enumerate() {
                    match shared[j] {
                        Some(pos) => expected[pos] = w,
                        None => ok &= w == 0,
                    }
                }
                if !ok || expected != bary {
                    failures.push(format!(
                        "{} ∩ {}: weights {weights:?} give coordinates {bary:?}",
                        simplices[i1].bipermutation, simplices[i2].bipermutation
                    ));
                }
            }
            (hits, failures)
        })
        .collect();
    FaceToFaceReport {
        n,
        pairs: count * count.saturating_sub(1),
        samples: count * count.saturating_sub(1) * samples_per_pair,
        shared_hits: outcomes.iter().map(|(h, _)| h).sum(),
        failures: outcomes.into_iter().flat_map(|(_, f)| f).collect(),
    }
}

/// Face numbers `(f_{-1}, f_0, …, f_{2n})` of the triangulation, by listing
/// every face of every simplex (vertex sets as bitmasks, `n ≤ 4`).
pub fn triangulation_f_vector(n: usize) -> Vec<BigInt> {
    let index: HashMap<ProductVertex, usize> = delta_vertices(n).into_iter().enumerate().map(|(i, v)| (v, i)).collect();
    assert!(index.len() <= 128, "face enumeration supports n ≤ 4");
    let faces: HashSet<u128> = enumerate_bipermutations(n)
        .par_bridge()
        .flat_map_iter(|b| {
            let ids: Vec<usize> = simplex_of_bipermutation(&b).vertices.iter().map(|v| index[v]).collect();
            (0u32..1 << ids.len()).map(move |mask| {
                ids.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).fold(0u128, |acc, (_, &id)| acc | 1 << id)
            })
        })
        .collect();
    let mut f = vec![BigInt::zero(); 2 * n + 2];
    for face in faces {
        f[face.count_ones() as usize] += 1;
    }
    f
}

/// `f_{cΔ}(x) = (x + 1) f_Δ(x)` applied three times to the fan's f-vector.
pub fn triple_cone_f_vector(n: usize) -> Vec<BigInt> {
    let mut f = f_vector_formula(n);
    for _ in 0..3 {
        // Descending-power coefficients: multiply by (x + 1).
        let mut next = vec![BigInt::zero(); f.len() + 1];
        for (i, c) in f.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
        }
        f = next;
    }
    f
}

#[derive(Clone, Debug, Serialize)]
pub struct HstarReport {
    pub n: usize,
    pub method: &'static str,
    pub h_triangulation: Vec<String>,
    pub h_star: Vec<String>,
}

impl HstarReport {
    pub fn passed(&self) -> bool {
        self.h_triangulation == self.h_star
    }
}

/// Compares the h-polynomial of the triangulation with the Ehrhart
/// `h^*`-polynomial of `Δ^n`. Faces are enumerated for `n ≤ 4`; beyond that
/// the triple-cone relation is used.
pub fn hstar_consistency(n: usize) -> HstarReport {
    let (f, method) =
        if n <= 4 { (triangulation_f_vector(n), "face enumeration") } else { (triple_cone_f_vector(n), "triple cone") };
    let h = h_from_f(&f, 2 * n + 1).map(|p| p.to_decimal_strings()).unwrap_or_default();
    let hstar = bieulerian_by_ehrhart(n).map(|p| p.to_decimal_strings()).unwrap_or_default();
    HstarReport { n, method, h_triangulation: h, h_star: hstar }
}

/// `(2n)!/2^n` maximal simplices.
pub fn simplex_count(n: usize) -> u128 {
    bipermutation_count(n)
}

/// The h-polynomial of the triangulation as a polynomial, for callers that
/// want to compare directly.
pub fn triangulation_h_polynomial(n: usize) -> IntPolynomial {
    let f = if n <= 4 { triangulation_f_vector(n) } else { triple_cone_f_vector(n) };
    h_from_f(&f, 2 * n + 1).expect("f-vector has 2n + 2 entries")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> ElementSet {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn point_of(v: &ProductVertex) -> [Vec<BigRational>; 3] {
        v.table().map(|row| row.into_iter().map(|x| q(x, 1)).collect())
    }

    #[test]
    fn product_vertices() {
        let v = ProductVertex::new(set("235"), set("1345"), 5);
        assert_eq!(v.table(), [vec![1, 0, 0, 1, 0], vec![0, 1, 0, 0, 0], vec![0, 0, 1, 0, 1]]);
        assert_eq!(delta_vertices(1).len(), 3);
        for n in 1..=4 {
            let all = delta_vertices(n);
            assert_eq!(all.len(), 3usize.pow(n as u32));
            for v in all {
                let t = v.table();
                assert!((0..n).all(|i| t[0][i] + t[1][i] + t[2][i] == 1));
            }
        }
    }

    #[test]
    fn worked_simplex() {
        let s = simplex_of_bipermutation(&Bipermutation::parse("1|3|2|1|3").unwrap());
        let names: Vec<String> = s.vertices.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["v[∅,123]", "v[123,∅]", "v[123,123]", "v[1,123]", "v[13,123]", "v[123,13]", "v[123,3]"]);
        let one = simplex_of_bipermutation(&Bipermutation::parse("1").unwrap());
        assert_eq!(one.vertices.len(), 3);
        for n in 1..=4 {
            assert!(enumerate_bipermutations(n).all(|b| simplex_of_bipermutation(&b).vertices.len() == 2 * n + 1));
        }
    }

    #[test]
    fn projection_sends_vertices_to_rays() {
        for v in delta_vertices(3) {
            let p = v.projection();
            assert_eq!(p[0], (1..=3).map(|i| i64::from(v.s.contains(i))).collect::<Vec<_>>());
            assert_eq!(p[1], (1..=3).map(|i| i64::from(v.t.contains(i))).collect::<Vec<_>>());
            if v.is_cone_point() {
                // e_∅ + f_E, e_E + f_∅, e_E + f_E all vanish modulo e_E and f_E.
                assert!(p.iter().all(|row| row.iter().all(|&x| x == row[0])));
            }
        }
        assert_eq!(plane_projection_determinant(4).abs(), BigInt::one());
    }

    #[test]
    fn unimodular_and_volume() {
        for n in 1..=4 {
            let r = unimodularity_check(n);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.simplices as u128, simplex_count(n));
        }
        assert_eq!(unimodularity_check(3).expected_volume, "90");
    }

    #[test]
    fn locate_examples() {
        let n = 3;
        let bary = [vec![q(1, 3); 3], vec![q(1, 3); 3], vec![q(1, 3); 3]];
        assert!(matches!(cover_locate(&bary), Err(TriangulationError::TieOnBoundary(_))));
        let b = Bipermutation::parse("1|3|2|1|3").unwrap();
        let target = ProductVertex::new(set("13"), set("123"), n);
        let loc = locate_in_simplex(&b, &point_of(&target)).unwrap();
        for (v, x) in &loc.coefficients {
            assert_eq!(*x, if *v == target { q(1, 1) } else { q(0, 1) });
        }
        let bad = [vec![q(1, 2); 3], vec![q(1, 2); 3], vec![q(1, 2); 3]];
        assert!(matches!(cover_locate(&bad), Err(TriangulationError::NotInProduct(_))));
    }

    #[test]
    fn vertices_lie_in_every_incident_simplex() {
        for b in enumerate_bipermutations(3) {
            for v in simplex_of_bipermutation(&b).vertices {
                let loc = locate_in_simplex(&b, &point_of(&v)).unwrap();
                assert!(loc.coefficients.iter().any(|(w, x)| *w == v && x.is_one()));
            }
        }
    }

    #[test]
    fn random_points_are_covered() {
        for n in 1..=3 {
            let r = cover_check(n, 500, 11);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.located, 500);
        }
    }

    #[test]
    fn face_to_face() {
        let r = face_to_face_check(2, 200, 5);
        assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(3)]);
        assert!(r.shared_hits > 0);
        assert_eq!(r.pairs, 30);
    }

    #[test]
    fn adjacent_hexagon_chambers_share_a_tetrahedron() {
        let a = simplex_of_bipermutation(&Bipermutation::parse("1|1|2").unwrap());
        let b = simplex_of_bipermutation(&Bipermutation::parse("1|2|1").unwrap());
        let common = a.vertices.iter().filter(|v| b.vertices.contains(v)).count();
        assert_eq!(common, 4);
    }

    #[test]
    fn hstar_matches() {
        for n in 1..=4 {
            let r = hstar_consistency(n);
            assert!(r.passed(), "{r:?}");
            assert_eq!(triangulation_f_vector(n), triple_cone_f_vector(n));
        }
        let r5 = hstar_consistency(5);
        assert_eq!(r5.method, "triple cone");
        assert!(r5.passed());
        assert_eq!(triangulation_h_polynomial(2), IntPolynomial::from_i64s(&[1, 4, 1]));
    }
}
