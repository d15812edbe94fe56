//! Hyperplane arrangement of the fan's walls and the action of
//! `S_n × Z_2` on rays and vertices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{all_bisubsets, enumerate_bipermutations, enumerate_bisequences, Bisequence};
use crate::geometry::{vertex_of_bipermutation, LatticePoint, Ray};
use crate::linalg::nullspace;
use crate::poly::factorial;

/// The four families of hyperplanes in `M_n × M_n` that contain walls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum HyperplaneType {
    /// Normal `(e_i - e_j, e_i - e_j)`.
    Diagonal,
    /// Normal `(e_i - e_j, 0)`.
    Top,
    /// Normal `(0, e_i - e_j)`.
    Bottom,
    /// Normal `(e_i - e_k, e_j - e_k)`, `i, j, k` distinct.
    Mixed,
}

/// Primitive integer normal `(a, b)` of the hyperplane spanned by a
/// codimension-one cone, with row sums 0 and a sign fixed by the first
/// nonzero entry being positive.
pub fn wall_normal(wall: &Bisequence) -> Option<(Vec<i64>, Vec<i64>)> {
    let n = wall.n();
    let mut rows: Vec<Vec<BigRational>> = wall
        .splits()
        .iter()
        .map(|b| {
            let r = Ray::new(*b, n).vector;
            r.top.iter().chain(&r.bottom).map(|&v| BigRational::from_integer(v.into())).collect()
        })
        .collect();
    // Orthogonality to e_E and f_E puts the normal in M_n × M_n.
    for block in 0..2 {
        rows.push((0..2 * n).map(|c| BigRational::from_integer(BigInt::from(i64::from(c / n == block)))).collect());
    }
    let basis = nullspace(&rows);
    if basis.len() != 1 {
        return None;
    }
    let v = &basis[0];
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().find(|x| !x.is_zero())?.is_negative() { -BigInt::one() } else { BigInt::one() };
    let scaled: Vec<i64> = ints.iter().map(|x| i64::try_from(x * &sign / &g).expect("small normal")).collect();
    Some((scaled[..n].to_vec(), scaled[n..].to_vec()))
}

/// Type of a normal `(a, b)` produced by [`wall_normal`], if it is one of the four.
pub fn classify_normal(a: &[i64], b: &[i64]) -> Option<HyperplaneType> {
    let is_root = |v: &[i64]| {
        v.iter().filter(|&&x| x == 1).count() == 1
            && v.iter().filter(|&&x| x == -1).count() == 1
            && v.iter().filter(|&&x| x == 0).count() == v.len() - 2
    };
    let is_zero = |v: &[i64]| v.iter().all(|&x| x == 0);
    let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
    if is_root(a) && (a == b || neg(a) == b) {
        return (a == b).then_some(HyperplaneType::Diagonal);
    }
    if is_root(a) && is_zero(b) {
        return Some(HyperplaneType::Top);
    }
    if is_zero(a) && is_root(b) {
        return Some(HyperplaneType::Bottom);
    }
    if is_root(a) && is_root(b) {
        // Both roots share one index with the same sign and differ elsewhere.
        for (sa, sb) in [(a.to_vec(), b.to_vec()), (neg(a), neg(b))] {
            let ka = sa.iter().position(|&x| x == -1);
            let kb = sb.iter().position(|&x| x == -1);
            let ia = sa.iter().position(|&x| x == 1);
            let ib = sb.iter().position(|&x| x == 1);
            if ka == kb && ia != ib {
                return Some(HyperplaneType::Mixed);
            }
        }
    }
    None
}

/// Per-type tallies of walls on each hyperplane, with the closed forms.
#[derive(Clone, Debug, Serialize)]
pub struct HyperplaneCount {
    pub kind: HyperplaneType,
    pub hyperplanes: usize,
    pub min_walls: usize,
    pub max_walls: usize,
    pub closed_form: u128,
}

impl HyperplaneCount {
    pub fn matches(&self) -> bool {
        self.min_walls as u128 == self.closed_form && self.max_walls as u128 == self.closed_form
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperplaneReport {
    pub n: usize,
    pub walls: usize,
    pub unclassified: Vec<String>,
    pub counts: Vec<HyperplaneCount>,
}

impl HyperplaneReport {
    pub fn passed(&self) -> bool {
        self.unclassified.is_empty() && self.counts.iter().all(HyperplaneCount::matches)
    }
}

/// Number of walls lying on a single hyperplane of each type.
pub fn closed_form_walls_per_hyperplane(kind: HyperplaneType, n: usize) -> u128 {
    let f = |m: usize| u128::try_from(factorial(m as u64)).expect("small factorial");
    let pow2 = |e: i64| if e >= 0 { 1u128 << e } else { 0 };
    match kind {
        HyperplaneType::Diagonal => f(2 * n - 2) / pow2(n as i64 - 2),
        HyperplaneType::Top | HyperplaneType::Bottom => f(2 * n - 1) / (3 * pow2(n as i64 - 2)),
        // For n = 2 there is no third index and no such hyperplane.
        HyperplaneType::Mixed if n >= 3 => f(2 * n - 2) / pow2(n as i64 - 3) / 6,
        HyperplaneType::Mixed => 0,
    }
}

/// Classifies every wall by the hyperplane it spans and tallies walls per hyperplane.
pub fn hyperplane_face_counts(n: usize) -> HyperplaneReport {
    let walls = enumerate_bisequences(n, Some(2 * n - 2));
    type Normal = (Vec<i64>, Vec<i64>);
    let normals: Vec<(String, Option<Normal>)> = walls.par_iter().map(|w| (w.to_string(), wall_normal(w))).collect();
    let mut per_plane: BTreeMap<(HyperplaneType, Vec<i64>, Vec<i64>), usize> = BTreeMap::new();
    let mut unclassified = Vec::new();
    for (name, normal) in normals {
        match normal.and_then(|(a, b)| classify_normal(&a, &b).map(|t| (t, a, b))) {
            Some(key) => *per_plane.entry(key).or_default() += 1,
            None => unclassified.push(name),
        }
    }
    let counts = [HyperplaneType::Diagonal, HyperplaneType::Top, HyperplaneType::Bottom, HyperplaneType::Mixed]
        .into_iter()
        .map(|kind| {
            let tallies: Vec<usize> = per_plane.iter().filter(|(k, _)| k.0 == kind).map(|(_, &c)| c).collect();
            HyperplaneCount {
                kind,
                hyperplanes: tallies.len(),
                min_walls: tallies.iter().copied().min().unwrap_or(0),
                max_walls: tallies.iter().copied().max().unwrap_or(0),
                closed_form: closed_form_walls_per_hyperplane(kind, n),
            }
        })
        .collect();
    HyperplaneReport { n, walls: walls.len(), unclassified, counts }
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub n: usize,
    pub permutations_checked: usize,
    pub rays_invariant: bool,
    pub vertices_invariant: bool,
    pub vertex_action_matches: bool,
    /// A bisubset whose negated ray is not a ray, when one exists.
    pub negation_witness: Option<String>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.rays_invariant
            && self.vertices_invariant
            && self.vertex_action_matches
            && (self.n < 3 || self.negation_witness.is_some())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n > 6 {
        // Generators of S_n: a transposition and an n-cycle.
        let mut t: Vec<usize> = (1..=n).collect();
        t.swap(0, 1);
        let c: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
        return vec![t, c];
    }
    let mut out = vec![vec![]];
    for m in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..m).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, m);
                    q
                })
            })
            .collect();
    }
    out
}

/// Checks that coordinate permutations and the row swap preserve the ray and
/// vertex sets, and looks for a ray whose negative is not a ray.
pub fn symmetry_checks(n: usize) -> SymmetryReport {
    let ray_set: BTreeSet<LatticePoint> =
        all_bisubsets(n).into_iter().map(|b| Ray::new(b, n).vector.normalize_rows()).collect();
    let biperms: Vec<_> = enumerate_bipermutations(n).collect();
    let vertex_set: BTreeSet<LatticePoint> = biperms.iter().map(vertex_of_bipermutation).collect();
    let perms = permutations(n);

    let mut rays_invariant = true;
    let mut vertices_invariant = true;
    let mut vertex_action_matches = true;
    for p in &perms {
        rays_invariant &= ray_set.iter().all(|r| ray_set.contains(&r.permute_columns(p)));
        vertices_invariant &= vertex_set.iter().all(|v| vertex_set.contains(&v.permute_columns(p)));
        vertex_action_matches &= biperms
            .par_iter()
            .all(|b| vertex_of_bipermutation(&b.relabel(p)) == vertex_of_bipermutation(b).permute_columns(p));
    }
    rays_invariant &= ray_set.iter().all(|r| ray_set.contains(&r.swap_rows()));
    vertices_invariant &= vertex_set.iter().all(|v| vertex_set.contains(&v.swap_rows()));
    vertex_action_matches &=
        biperms.par_iter().all(|b| vertex_of_bipermutation(&b.reverse()) == vertex_of_bipermutation(b).swap_rows());

    let negation_witness = all_bisubsets(n)
        .into_iter()
        .find(|b| !ray_set.contains(&Ray::new(*b, n).vector.negate().normalize_rows()))
        .map(|b| b.to_string());

    SymmetryReport {
        n,
        permutations_checked: perms.len(),
        rays_invariant,
        vertices_invariant,
        vertex_action_matches,
        negation_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Bisubset;

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_walls_per_hyperplane(HyperplaneType::Diagonal, 3), 12);
        assert_eq!(closed_form_walls_per_hyperplane(HyperplaneType::Top, 3), 20);
        assert_eq!(closed_form_walls_per_hyperplane(HyperplaneType::Mixed, 3), 4);
        assert_eq!(closed_form_walls_per_hyperplane(HyperplaneType::Diagonal, 4), 180);
        assert_eq!(closed_form_walls_per_hyperplane(HyperplaneType::Bottom, 4), 420);
        assert_eq!(closed_form_walls_per_hyperplane(HyperplaneType::Mixed, 4), 60);
    }

    #[test]
    fn hyperplane_counts_match_enumeration() {
        for (n, walls, planes) in [(3, 180, [3, 3, 3, 6]), (4, 7560, [6, 6, 6, 24])] {
            let r = hyperplane_face_counts(n);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.walls, walls);
            let got: Vec<usize> = r.counts.iter().map(|c| c.hyperplanes).collect();
            assert_eq!(got, planes);
            let total: u128 = r.counts.iter().map(|c| c.closed_form * c.hyperplanes as u128).sum();
            assert_eq!(total, walls as u128);
        }
    }

    #[test]
    fn group_action_preserves_rays_and_vertices() {
        for n in 2..=4 {
            let r = symmetry_checks(n);
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(symmetry_checks(3).permutations_checked, 6);
    }

    #[test]
    fn negation_witness() {
        assert!(symmetry_checks(2).negation_witness.is_none());
        let r = symmetry_checks(3);
        let w = Bisubset::parse(r.negation_witness.as_deref().unwrap(), 3).unwrap();
        assert!(!w.left().intersection(w.right()).is_empty());
        // The example pair 12|23 is sent outside the ray set.
        let n = 3;
        let ray_set: BTreeSet<LatticePoint> =
            all_bisubsets(n).into_iter().map(|b| Ray::new(b, n).vector.normalize_rows()).collect();
        let image = Ray::new(Bisubset::parse("12|23", 3).unwrap(), 3).vector.negate().normalize_rows();
        assert_eq!(image, LatticePoint { top: vec![0, 0, 1], bottom: vec![1, 0, 0] });
        assert!(!ray_set.contains(&image));
    }

    #[test]
    fn hexagon_symmetries() {
        // At n = 2 the transposition, the swap and negation all preserve the hexagon.
        let verts: BTreeSet<LatticePoint> = enumerate_bipermutations(2).map(|b| vertex_of_bipermutation(&b)).collect();
        assert_eq!(verts.len(), 6);
        for v in &verts {
            assert!(verts.contains(&v.permute_columns(&[2, 1])));
            assert!(verts.contains(&v.swap_rows()));
            assert!(verts.contains(&v.negate()));
        }
    }
}
