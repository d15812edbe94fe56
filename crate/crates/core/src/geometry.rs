//! Vertices and facet inequalities of the bipermutahedron, the rays and
//! chambers of its normal fan, and support functions on bisubsets.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{all_bisubsets, enumerate_bipermutations, Bipermutation, Bisubset, Occurrence};
use crate::error::SupportError;
use crate::sets::ElementSet;

/// A `2 × n` integer table: `top` holds the `x`/`z` row, `bottom` the `y`/`w` row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl LatticePoint {
    pub fn zero(n: usize) -> Self {
        LatticePoint { top: vec![0; n], bottom: vec![0; n] }
    }

    /// `e_S + f_T`.
    pub fn indicator(s: ElementSet, t: ElementSet, n: usize) -> Self {
        LatticePoint {
            top: (1..=n).map(|i| i64::from(s.contains(i))).collect(),
            bottom: (1..=n).map(|i| i64::from(t.contains(i))).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    /// `(Σ top, Σ bottom)`.
    pub fn row_sums(&self) -> (i64, i64) {
        (self.top.iter().sum(), self.bottom.iter().sum())
    }

    /// `(e_S + f_T)(self)`.
    pub fn pair(&self, s: ElementSet, t: ElementSet) -> i64 {
        s.iter().map(|i| self.top[i - 1]).sum::<i64>() + t.iter().map(|i| self.bottom[i - 1]).sum::<i64>()
    }

    /// Column `i` moves to column `perm[i - 1]`.
    #[must_use]
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        let n = self.n();
        let mut out = LatticePoint::zero(n);
        for i in 0..n {
            out.top[perm[i] - 1] = self.top[i];
            out.bottom[perm[i] - 1] = self.bottom[i];
        }
        out
    }

    /// Exchanges the two rows.
    #[must_use]
    pub fn swap_rows(&self) -> Self {
        LatticePoint { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    #[must_use]
    pub fn negate(&self) -> Self {
        LatticePoint { top: self.top.iter().map(|v| -v).collect(), bottom: self.bottom.iter().map(|v| -v).collect() }
    }

    /// Representative modulo `e_E` and `f_E`: each row shifted so its minimum is 0.
    #[must_use]
    pub fn normalize_rows(&self) -> Self {
        let shift = |row: &[i64]| {
            let m = row.iter().copied().min().unwrap_or(0);
            row.iter().map(|v| v - m).collect()
        };
        LatticePoint { top: shift(&self.top), bottom: shift(&self.bottom) }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[i64]| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", row(&self.top), row(&self.bottom))
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The ray `e_S + f_T` of the fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub bisubset: Bisubset,
    pub vector: LatticePoint,
}

impl Ray {
    pub fn new(bisubset: Bisubset, n: usize) -> Self {
        Ray { bisubset, vector: LatticePoint::indicator(bisubset.left(), bisubset.right(), n) }
    }
}

/// All `3^n - 3` rays.
pub fn rays(n: usize) -> Vec<Ray> {
    all_bisubsets(n).into_iter().map(|b| Ray::new(b, n)).collect()
}

/// `v_B = u_π - s_π (e^k + f^k)`, where `u_π = (x, y)` comes from the signed word.
pub fn vertex_of_bipermutation(b: &Bipermutation) -> LatticePoint {
    let word = b.signed_word();
    let k = b.k();
    let s = word.s();
    let mut top = word.x().to_vec();
    let mut bottom = word.y();
    top[k - 1] -= s;
    bottom[k - 1] -= s;
    LatticePoint { top, bottom }
}

/// `Π(S|T) = -(|S| + |S - T|)(|T| + |T - S|)`.
pub fn biperm_support(b: &Bisubset) -> i64 {
    let (s, t) = (b.left(), b.right());
    let a = (s.len() + s.difference(t).len()) as i64;
    let c = (t.len() + t.difference(s).len()) as i64;
    -a * c
}

/// `H(S|T) = f(|S|) + f(|T|) + 1` with `f(x) = x((x - n)/2 - 1/n)`.
pub fn harmonic_support(b: &Bisubset, n: usize) -> BigRational {
    let f = |x: usize| {
        let x = BigRational::from_integer(BigInt::from(x));
        let nn = BigRational::from_integer(BigInt::from(n));
        let two = BigRational::from_integer(BigInt::from(2));
        &x * ((&x - &nn) / two - nn.recip())
    };
    f(b.left().len()) + f(b.right().len()) + BigRational::one()
}

/// One step of a chamber's defining chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainTerm {
    /// `z_i - z_k`, for the letter `i`.
    Top(usize),
    /// `w_k - w_i`, for the letter `ī`.
    Bottom(usize),
}

/// The chamber `σ_B`: the chain values weakly decrease along the word of `B`
/// (with `k` read as `k k̄`, both contributing 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberCone {
    pub bipermutation: Bipermutation,
    pub chain: Vec<ChainTerm>,
}

impl ChamberCone {
    pub fn new(b: &Bipermutation) -> Self {
        let mut chain = Vec::with_capacity(b.len() + 1);
        for (&l, o) in b.letters().iter().zip(b.occurrences()) {
            let e = l as usize;
            match o {
                Occurrence::First => chain.push(ChainTerm::Top(e)),
                Occurrence::Second => chain.push(ChainTerm::Bottom(e)),
                Occurrence::Single => {
                    chain.push(ChainTerm::Top(e));
                    chain.push(ChainTerm::Bottom(e));
                }
            }
        }
        ChamberCone { bipermutation: b.clone(), chain }
    }

    /// Values of the chain at `(z, w)`.
    pub fn evaluate(&self, z: &[BigRational], w: &[BigRational]) -> Vec<BigRational> {
        let k = self.bipermutation.k() - 1;
        self.chain
            .iter()
            .map(|t| match *t {
                ChainTerm::Top(i) => &z[i - 1] - &z[k],
                ChainTerm::Bottom(i) => &w[k] - &w[i - 1],
            })
            .collect()
    }

    pub fn contains(&self, z: &[BigRational], w: &[BigRational]) -> bool {
        self.evaluate(z, w).windows(2).all(|p| p[0] >= p[1])
    }
}

/// Whether `(z, w)` lies in the chamber of `B`.
pub fn cone_contains(b: &Bipermutation, z: &[BigRational], w: &[BigRational]) -> bool {
    ChamberCone::new(b).contains(z, w)
}

/// Outcome of checking every vertex against every facet inequality.
#[derive(Clone, Debug, Serialize)]
pub struct FacetReport {
    pub n: usize,
    pub vertices: usize,
    pub facets: usize,
    /// Fewest vertices attaining equality on any one facet.
    pub min_vertices_per_facet: usize,
    pub counterexample: Option<String>,
}

impl FacetReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.min_vertices_per_facet > 0
    }
}

/// For every vertex `v_B` and bisubset `S|T`, checks `(e_S + f_T)(v_B) ≥ Π(S|T)`
/// with equality exactly when `S|T` is a split of `B`.
pub fn facet_check(n: usize) -> FacetReport {
    let bisubsets = all_bisubsets(n);
    let index: BTreeMap<Bisubset, usize> = bisubsets.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let rhs: Vec<i64> = bisubsets.iter().map(biperm_support).collect();
    let all: Vec<Bipermutation> = enumerate_bipermutations(n).collect();
    let (tight, bad) = all
        .par_iter()
        .map(|b| {
            let v = vertex_of_bipermutation(b);
            let mut tight = vec![0usize; bisubsets.len()];
            let splits: Vec<usize> = b.bisubsets().iter().map(|s| index[s]).collect();
            let mut bad = None;
            for (i, st) in bisubsets.iter().enumerate() {
                let value = v.pair(st.left(), st.right());
                let is_split = splits.contains(&i);
                if value < rhs[i] || (value == rhs[i]) != is_split {
                    bad = Some(format!(
                        "vertex {v} of {b}: ({st}) pairs to {value}, bound {}, split: {is_split}",
                        rhs[i]
                    ));
                    break;
                }
                if value == rhs[i] {
                    tight[i] += 1;
                }
            }
            (tight, bad)
        })
        .reduce(
            || (vec![0usize; bisubsets.len()], None),
            |(mut ta, ba), (tb, bb)| {
                for (a, b) in ta.iter_mut().zip(tb) {
                    *a += b;
                }
                (ta, ba.or(bb))
            },
        );
    FacetReport {
        n,
        vertices: all.len(),
        facets: bisubsets.len(),
        min_vertices_per_facet: tight.iter().copied().min().unwrap_or(0),
        counterexample: bad,
    }
}

/// A function on the bisubsets of `[n]`, total by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct SupportFunction {
    n: usize,
    values: BTreeMap<Bisubset, BigRational>,
}

impl SupportFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Bisubset) -> BigRational) -> Self {
        let values = all_bisubsets(n).into_iter().map(|b| {
            let v = f(&b);
            (b, v)
        });
        SupportFunction { n, values: values.collect() }
    }

    /// Builds from explicit values; every bisubset of `[n]` must be present.
    pub fn from_values(n: usize, values: BTreeMap<Bisubset, BigRational>) -> Result<Self, SupportError> {
        if let Some(missing) = all_bisubsets(n).into_iter().find(|b| !values.contains_key(b)) {
            return Err(SupportError::Missing(missing.to_string()));
        }
        Ok(SupportFunction { n, values })
    }

    pub fn bipermutahedron(n: usize) -> Self {
        SupportFunction::from_fn(n, |b| BigRational::from_integer(biperm_support(b).into()))
    }

    pub fn harmonic(n: usize) -> Self {
        SupportFunction::from_fn(n, |b| harmonic_support(b, n))
    }

    pub fn zero(n: usize) -> Self {
        SupportFunction::from_fn(n, |_| BigRational::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, b: &Bisubset) -> &BigRational {
        &self.values[b]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bisubset, &BigRational)> {
        self.values.iter()
    }

    #[must_use]
    pub fn add(&self, other: &SupportFunction) -> Self {
        SupportFunction::from_fn(self.n, |b| self.get(b) + other.get(b))
    }

    #[must_use]
    pub fn sub(&self, other: &SupportFunction) -> Self {
        SupportFunction::from_fn(self.n, |b| self.get(b) - other.get(b))
    }

    #[must_use]
    pub fn scale(&self, c: &BigRational) -> Self {
        SupportFunction::from_fn(self.n, |b| self.get(b) * c)
    }

    /// Parses lines `S;T;value`, sets as comma-separated elements and values
    /// as exact rationals (`p/q` or an integer). Blank lines and `#` comments
    /// are skipped.
    pub fn parse_csv(text: &str, n: usize) -> Result<Self, SupportError> {
        let parse_set = |field: &str, line: usize| -> Result<ElementSet, SupportError> {
            let mut set = ElementSet::EMPTY;
            for tok in field.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let e: usize = tok
                    .parse()
                    .map_err(|_| SupportError::Malformed { line, reason: format!("bad element {tok:?}") })?;
                if e == 0 || e > n {
                    return Err(SupportError::Malformed { line, reason: format!("element {e} outside 1..={n}") });
                }
                set.insert(e);
            }
            Ok(set)
        };
        let mut values = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split(';').collect();
            if fields.len() != 3 {
                return Err(SupportError::Malformed { line, reason: "expected S;T;value".into() });
            }
            let (s, t) = (parse_set(fields[0], line)?, parse_set(fields[1], line)?);
            let pair = format!("{s}|{t}");
            let b = Bisubset::new(s, t, n).map_err(|_| SupportError::NotABisubset { line, pair: pair.clone(), n })?;
            let value: BigRational = fields[2].trim().parse().map_err(|_| SupportError::Malformed {
                line,
                reason: format!("bad rational {:?}", fields[2].trim()),
            })?;
            if values.insert(b, value).is_some() {
                return Err(SupportError::Duplicate { line, pair });
            }
        }
        SupportFunction::from_values(n, values)
    }

    pub fn to_csv(&self) -> String {
        let join = |s: ElementSet| s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        self.values.iter().map(|(b, v)| format!("{};{};{}\n", join(b.left()), join(b.right()), v)).collect()
    }
}

impl fmt::Debug for SupportFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.values.iter().map(|(b, v)| (b.to_string(), v.to_string()))).finish()
    }
}

#[derive(Serialize)]
struct VertexRecord {
    biperm: String,
    top: Vec<i64>,
    bottom: Vec<i64>,
}

#[derive(Serialize)]
struct FacetRecord {
    #[serde(rename = "S")]
    s: Vec<usize>,
    #[serde(rename = "T")]
    t: Vec<usize>,
    rhs: String,
}

/// `{"n", "vertices": [{"biperm", "top", "bottom"}]}` in lexicographic order.
pub fn vertices_json(n: usize) -> serde_json::Value {
    let vertices: Vec<VertexRecord> = enumerate_bipermutations(n)
        .map(|b| {
            let v = vertex_of_bipermutation(&b);
            VertexRecord { biperm: b.to_string(), top: v.top, bottom: v.bottom }
        })
        .collect();
    serde_json::json!({ "n": n, "vertices": vertices })
}

/// `{"n", "facets": [{"S", "T", "rhs"}]}` with `rhs = Π(S|T)` as a decimal string.
pub fn facets_json(n: usize) -> serde_json::Value {
    let facets: Vec<FacetRecord> = all_bisubsets(n)
        .into_iter()
        .map(|b| FacetRecord {
            s: b.left().iter().collect(),
            t: b.right().iter().collect(),
            rhs: biperm_support(&b).to_string(),
        })
        .collect();
    serde_json::json!({ "n": n, "facets": facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bisequence_of_configuration;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn bs(text: &str, n: usize) -> Bisubset {
        Bisubset::parse(text, n).unwrap()
    }

    #[test]
    fn worked_vertex() {
        let v = vertex_of_bipermutation(&Bipermutation::parse("2|3|4|2|4|1|1").unwrap());
        assert_eq!(v.top, vec![5, -7, 3, -1]);
        assert_eq!(v.bottom, vec![-7, -1, 11, -3]);
    }

    #[test]
    fn hexagon_vertices() {
        let v = vertex_of_bipermutation(&Bipermutation::parse("1|2|1").unwrap());
        assert_eq!((v.top.clone(), v.bottom.clone()), (vec![-3, 3], vec![-3, 3]));
        let mut firsts: Vec<(i64, i64)> = enumerate_bipermutations(2)
            .map(|b| {
                let v = vertex_of_bipermutation(&b);
                (v.top[0], v.bottom[0])
            })
            .collect();
        firsts.sort();
        assert_eq!(firsts, vec![(-3, -3), (-3, 1), (-1, 3), (1, -3), (3, -1), (3, 3)]);
    }

    #[test]
    fn row_sums_vanish() {
        for n in 1..=5 {
            for b in enumerate_bipermutations(n) {
                assert_eq!(vertex_of_bipermutation(&b).row_sums(), (0, 0), "{b}");
            }
        }
    }

    #[test]
    fn support_examples() {
        assert_eq!(biperm_support(&bs("2347|124567", 7)), -45);
        assert_eq!(biperm_support(&bs("1|2", 2)), -4);
        // Oracle: the minimum of x_1 + y_2 over the six hexagon vertices.
        let min = enumerate_bipermutations(2)
            .map(|b| vertex_of_bipermutation(&b).pair(ElementSet::singleton(1), ElementSet::singleton(2)))
            .min()
            .unwrap();
        assert_eq!(min, -4);
        for n in 2..=4 {
            for b in all_bisubsets(n) {
                assert_eq!(biperm_support(&b), biperm_support(&b.swapped()));
                assert_eq!(harmonic_support(&b, n), harmonic_support(&b.swapped(), n));
            }
        }
    }

    #[test]
    fn harmonic_matches_translated_description() {
        assert_eq!(harmonic_support(&bs("1|2", 2), 2), q(-1));
        // Untranslated right-hand side (|S|(|S|+1) + |T|(|T|+1))/2 + 1, shifted by
        // -((n+1)/2 + 1/n) per coordinate in S and in T.
        for n in 1..=6usize {
            let nn = BigRational::from_integer(BigInt::from(n));
            let shift = (&nn + q(1)) / q(2) + nn.recip();
            for b in all_bisubsets(n) {
                let (s, t) = (b.left().len() as i64, b.right().len() as i64);
                let raw = q(s * (s + 1) + t * (t + 1)) / q(2) + q(1);
                let expected = raw - &shift * q(s + t);
                assert_eq!(harmonic_support(&b, n), expected, "{b}");
            }
        }
    }

    #[test]
    fn facet_inequalities_hold() {
        for n in 2..=4 {
            let r = facet_check(n);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.facets, 3usize.pow(n as u32) - 3);
        }
        assert!(facet_check(2).min_vertices_per_facet >= 2);
        assert_eq!(facet_check(3).facets, 24);
        assert_eq!(facet_check(4).facets, 78);
    }

    #[test]
    fn worked_chamber_chain() {
        let b = Bipermutation::parse("2|3|4|2|4|1|1").unwrap();
        let cone = ChamberCone::new(&b);
        assert_eq!(cone.chain.len(), 8);
        assert_eq!(cone.chain[..3], [ChainTerm::Top(2), ChainTerm::Top(3), ChainTerm::Bottom(3)]);
        // Strict chain values 3 > 0 > -1 > -2 > -3 > -4 > -5 with k = 3:
        // z2 - z3 = 3, z4 - z3 = -1, w3 - w2 = -2, w3 - w4 = -3, z1 - z3 = -4, w3 - w1 = -5.
        let z = vec![q(-4), q(3), q(0), q(-1)];
        let w = vec![q(5), q(2), q(0), q(3)];
        assert!(cone_contains(&b, &z, &w));
        let zero = vec![q(0); 4];
        assert!(cone_contains(&b, &zero, &zero));
        assert!(!cone_contains(&b, &w, &z));
    }

    #[test]
    fn cones_agree_with_configuration_reading() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4usize {
            let all: Vec<Bipermutation> = enumerate_bipermutations(n).collect();
            let mut tested = 0;
            while tested < 1000 {
                let z: Vec<i64> = (0..n).map(|_| rng.gen_range(-1000..1000)).collect();
                let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-1000..1000)).collect();
                let reading = bisequence_of_configuration(&z, &w);
                let Some(b) = reading.as_bipermutation() else { continue };
                tested += 1;
                let (zq, wq): (Vec<_>, Vec<_>) = (z.iter().map(|&v| q(v)).collect(), w.iter().map(|&v| q(v)).collect());
                assert!(cone_contains(&b, &zq, &wq));
                if tested % 50 == 0 {
                    let inside: Vec<_> = all.iter().filter(|c| cone_contains(c, &zq, &wq)).collect();
                    assert_eq!(inside, vec![&b]);
                }
            }
        }
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let h = SupportFunction::harmonic(3);
        let text = h.to_csv();
        assert_eq!(text.lines().count(), 24);
        assert_eq!(SupportFunction::parse_csv(&text, 3).unwrap(), h);
        let first = text.lines().next().unwrap().to_string();
        let doubled = format!("{text}{first}\n");
        assert!(matches!(SupportFunction::parse_csv(&doubled, 3), Err(SupportError::Duplicate { .. })));
        let missing: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert!(matches!(SupportFunction::parse_csv(&missing, 3), Err(SupportError::Missing(_))));
        assert!(matches!(SupportFunction::parse_csv("1;1;0\n", 3), Err(SupportError::NotABisubset { .. })));
        assert!(matches!(SupportFunction::parse_csv("1;2;x\n", 2), Err(SupportError::Malformed { .. })));
        assert!(matches!(SupportFunction::parse_csv("1;2\n", 2), Err(SupportError::Malformed { .. })));
    }

    #[test]
    fn json_dumps() {
        let v = vertices_json(2);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
        assert_eq!(v["vertices"][1]["biperm"], "1|2|1");
        let f = facets_json(7);
        let rec = f["facets"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["S"] == serde_json::json!([2, 3, 4, 7]) && r["T"] == serde_json::json!([1, 2, 4, 5, 6, 7]))
            .unwrap();
        assert_eq!(rec["rhs"], "-45");
    }
}
