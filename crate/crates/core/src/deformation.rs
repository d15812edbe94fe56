//! Walls of the bipermutahedral fan, their wall-crossing inequalities, the
//! nef and ample cones, and Minkowski quotients of support functions.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{enumerate_bisequences, Bipermutation, Bisequence, Bisubset};
use crate::error::{QuotientError, WallError};
use crate::geometry::{LatticePoint, SupportFunction};
use crate::linalg::nullspace;
use crate::sets::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WallKind {
    /// One two-element part and `2n - 3` singletons.
    A,
    /// `2n - 2` singletons; two elements appear once.
    B,
}

/// A codimension-one cone of the fan, given by a bisequence with `2n - 2` parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    bisequence: Bisequence,
    kind: WallKind,
}

impl Wall {
    pub fn new(bisequence: Bisequence) -> Result<Self, WallError> {
        let n = bisequence.n();
        let expected = (2 * n).saturating_sub(2);
        if n < 2 || bisequence.len() != expected {
            return Err(WallError::NotAWall {
                bisequence: bisequence.to_string(),
                n,
                parts: bisequence.len(),
                expected,
            });
        }
        // With 2n - 2 parts there are 2n - 2 or 2n - 1 letters, so the two
        // shapes below are the only possibilities.
        let kind = if bisequence.parts().iter().all(|p| p.len() == 1) { WallKind::B } else { WallKind::A };
        Ok(Wall { bisequence, kind })
    }

    pub fn bisequence(&self) -> &Bisequence {
        &self.bisequence
    }

    pub fn kind(&self) -> WallKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.bisequence.n()
    }

    /// The `2n - 3` rays spanning the wall.
    pub fn rays(&self) -> Vec<Bisubset> {
        self.bisequence.splits()
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bisequence)
    }
}

impl fmt::Debug for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Wall({}, {:?})", self.bisequence, self.kind)
    }
}

/// Every wall of the fan for `[n]`.
pub fn enumerate_walls(n: usize) -> Vec<Wall> {
    if n < 2 {
        return Vec::new();
    }
    enumerate_bisequences(n, Some(2 * n - 2)).into_iter().map(|b| Wall::new(b).expect("2n - 2 parts")).collect()
}

/// `I(h) = Σ plus - Σ minus`, with positive coefficients on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallInequality {
    #[serde(serialize_with = "serialize_terms")]
    pub plus: Vec<(Bisubset, BigRational)>,
    #[serde(serialize_with = "serialize_terms")]
    pub minus: Vec<(Bisubset, BigRational)>,
}

fn serialize_terms<S: serde::Serializer>(terms: &[(Bisubset, BigRational)], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<(String, String)> = terms.iter().map(|(b, c)| (b.to_string(), c.to_string())).collect();
    serde::Serialize::serialize(&strings, s)
}

impl WallInequality {
    fn unit(plus: Vec<Bisubset>, minus: Vec<Bisubset>) -> Self {
        WallInequality {
            plus: plus.into_iter().map(|b| (b, BigRational::one())).collect(),
            minus: minus.into_iter().map(|b| (b, BigRational::one())).collect(),
        }
    }

    pub fn evaluate(&self, h: &SupportFunction) -> BigRational {
        let plus: BigRational = self.plus.iter().map(|(b, c)| c * h.get(b)).sum();
        let minus: BigRational = self.minus.iter().map(|(b, c)| c * h.get(b)).sum();
        plus - minus
    }

    /// Signed coefficients keyed by bisubset, zeros removed.
    pub fn signed(&self) -> BTreeMap<Bisubset, BigRational> {
        let mut out: BTreeMap<Bisubset, BigRational> = BTreeMap::new();
        for (b, c) in &self.plus {
            *out.entry(*b).or_insert_with(BigRational::zero) += c;
        }
        for (b, c) in &self.minus {
            *out.entry(*b).or_insert_with(BigRational::zero) -= c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// The positive factor `λ` with `self = λ · other`, if there is one.
    pub fn positive_multiple_of(&self, other: &WallInequality) -> Option<BigRational> {
        let (a, b) = (self.signed(), other.signed());
        if a.len() != b.len() || a.keys().ne(b.keys()) {
            return None;
        }
        let (k, v) = a.iter().next()?;
        let ratio = v / &b[k];
        (ratio.is_positive() && a.iter().all(|(k, v)| *v == &ratio * &b[k])).then_some(ratio)
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(|(_, c)| c.is_one())
    }
}

impl fmt::Display for WallInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |terms: &[(Bisubset, BigRational)]| {
            terms
                .iter()
                .map(|(b, c)| if c.is_one() { format!("h({b})") } else { format!("{c}·h({b})") })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(f, "{} >= {}", side(&self.plus), side(&self.minus))
    }
}

/// Where the two elements of the pair part reappear in a kind-A wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SupermodularCase {
    /// Both on the same side of the pair.
    SameSide,
    /// On opposite sides.
    OppositeSides,
    /// Only one of them reappears.
    OneReappears,
}

/// Prefix set `S`, pair `(i, j)` and suffix set `T` of a kind-A wall.
fn pair_context(w: &Wall) -> Result<(ElementSet, usize, usize, ElementSet), WallError> {
    if w.kind != WallKind::A {
        return Err(WallError::KindMismatch(w.to_string()));
    }
    let parts = w.bisequence.parts();
    let h = parts.iter().position(|p| p.len() == 2).expect("kind A has a pair part");
    let union = |ps: &[ElementSet]| ps.iter().fold(ElementSet::EMPTY, |a, &p| a.union(p));
    let mut pair = parts[h].iter();
    let (i, j) = (pair.next().expect("pair"), pair.next().expect("pair"));
    Ok((union(&parts[..h]), i, j, union(&parts[h + 1..])))
}

pub fn supermodular_case(w: &Wall) -> Result<SupermodularCase, WallError> {
    let (s, i, j, t) = pair_context(w)?;
    let side = |e: usize| {
        if s.contains(e) {
            Some(0)
        } else if t.contains(e) {
            Some(1)
        } else {
            None
        }
    };
    Ok(match (side(i), side(j)) {
        (Some(a), Some(b)) if a == b => SupermodularCase::SameSide,
        (Some(_), Some(_)) => SupermodularCase::OppositeSides,
        _ => SupermodularCase::OneReappears,
    })
}

/// `h(S|ijT) + h(Sij|T) - h(Si|Tj) - h(Sj|Ti) ≥ 0`. A term whose pair is
/// `∅|E` or `E|∅` is not a ray and is omitted (it lies in the lineality space).
pub fn supermodular_inequality(w: &Wall) -> Result<WallInequality, WallError> {
    let (s, i, j, t) = pair_context(w)?;
    let n = w.n();
    let ij = ElementSet::singleton(i).with(j);
    let term = |l: ElementSet, r: ElementSet| Bisubset::new(l, r, n).ok();
    let plus = [term(s, t.union(ij)), term(s.union(ij), t)].into_iter().flatten().collect();
    let minus = [term(s.with(i), t.with(j)), term(s.with(j), t.with(i))]
        .into_iter()
        .map(|b| b.expect("Si|Tj and Sj|Ti are bisubsets"))
        .collect();
    Ok(WallInequality::unit(plus, minus))
}

/// Whether a split of the doubled word goes from unbarred to barred (up)
/// or from barred to unbarred (down).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Switch {
    Up,
    Down,
    None,
}

/// The bipartite graph of a kind-B wall: prefix sets on top, suffix sets on
/// the bottom, one edge per split of the doubled word.
#[derive(Clone, Debug, Serialize)]
pub struct WallTree {
    pub top: Vec<String>,
    pub bottom: Vec<String>,
    /// `(top index, bottom index, switch)` per split, left to right.
    pub edges: Vec<(usize, usize, Switch)>,
    /// Edge indices on the path from bottom `[n]` to top `[n]`.
    pub spine: Vec<usize>,
    pub is_tree: bool,
    /// The spine consists exactly of the up and down switches.
    pub spine_is_switches: bool,
    /// `Σ_up (e_S + f_T) - Σ_down (e_S + f_T) = e_E + f_E`.
    pub spine_sum_vanishes: bool,
}

impl WallTree {
    pub fn valid(&self) -> bool {
        self.is_tree && self.spine_is_switches && self.spine_sum_vanishes
    }
}

/// The doubled word `B̄` of a kind-B wall as `(element, barred)` letters.
fn doubled_word(w: &Wall) -> Vec<(usize, bool)> {
    let mut seen = ElementSet::EMPTY;
    let once = w.bisequence.once_elements();
    let mut out = Vec::with_capacity(2 * w.n());
    for p in w.bisequence.parts() {
        let e = p.max_element().expect("singleton");
        if once.contains(e) {
            out.push((e, false));
            out.push((e, true));
        } else {
            out.push((e, seen.contains(e)));
            seen.insert(e);
        }
    }
    out
}

/// Splits of `B̄` as `(S, T, switch)`.
fn doubled_splits(w: &Wall) -> Vec<(ElementSet, ElementSet, Switch)> {
    let word = doubled_word(w);
    (1..word.len())
        .map(|m| {
            let s: ElementSet = word[..m].iter().map(|&(e, _)| e).collect();
            let t: ElementSet = word[m..].iter().map(|&(e, _)| e).collect();
            let switch = match (word[m - 1].1, word[m].1) {
                (false, true) => Switch::Up,
                (true, false) => Switch::Down,
                _ => Switch::None,
            };
            (s, t, switch)
        })
        .collect()
}

/// `Σ_down h(S|T) - Σ_up h(S|T) ≥ 0`, read from the switches of `B̄`, and
/// the wall's bipartite tree.
pub fn updown_inequality(w: &Wall) -> Result<(WallInequality, WallTree), WallError> {
    if w.kind != WallKind::B {
        return Err(WallError::KindMismatch(w.to_string()));
    }
    let n = w.n();
    let splits = doubled_splits(w);
    let bis = |s: ElementSet, t: ElementSet| Bisubset::new(s, t, n).expect("splits of B̄ are bisubsets");
    let plus = splits.iter().filter(|x| x.2 == Switch::Down).map(|x| bis(x.0, x.1)).collect();
    let minus = splits.iter().filter(|x| x.2 == Switch::Up).map(|x| bis(x.0, x.1)).collect();

    let mut tops: Vec<ElementSet> = splits.iter().map(|x| x.0).collect();
    tops.dedup();
    let mut bottoms: Vec<ElementSet> = splits.iter().map(|x| x.1).collect();
    bottoms.dedup();
    let edges: Vec<(usize, usize, Switch)> = splits
        .iter()
        .map(|(s, t, sw)| {
            (tops.iter().position(|x| x == s).expect("top"), bottoms.iter().position(|x| x == t).expect("bottom"), *sw)
        })
        .collect();

    // Tree check and spine by breadth-first search; nodes are tops then bottoms.
    let nodes = tops.len() + bottoms.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
    for (k, &(a, b, _)) in edges.iter().enumerate() {
        adj[a].push((tops.len() + b, k));
        adj[tops.len() + b].push((a, k));
    }
    let full = ElementSet::full(n);
    let start = tops.len() + bottoms.iter().position(|&x| x == full).expect("suffix [n]");
    let goal = tops.iter().position(|&x| x == full).expect("prefix [n]");
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; nodes];
    let mut visited = vec![false; nodes];
    visited[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(v, k) in &adj[u] {
            if !visited[v] {
                visited[v] = true;
                parent[v] = Some((u, k));
                queue.push_back(v);
            }
        }
    }
    let connected = visited.iter().all(|&v| v);
    let is_tree = connected && edges.len() + 1 == nodes && tops.len() == n && bottoms.len() == n;
    let mut spine = Vec::new();
    let mut cur = goal;
    while let Some((p, k)) = parent[cur] {
        spine.push(k);
        cur = p;
    }
    spine.sort_unstable();
    let switches: Vec<usize> = edges.iter().enumerate().filter(|(_, e)| e.2 != Switch::None).map(|(k, _)| k).collect();

    let mut sum = LatticePoint::zero(n);
    for (s, t, sw) in &splits {
        let sign = match sw {
            Switch::Up => 1,
            Switch::Down => -1,
            Switch::None => 0,
        };
        let v = LatticePoint::indicator(*s, *t, n);
        for i in 0..n {
            sum.top[i] += sign * v.top[i];
            sum.bottom[i] += sign * v.bottom[i];
        }
    }

    let tree = WallTree {
        top: tops.iter().map(|s| s.to_string()).collect(),
        bottom: bottoms.iter().map(|s| s.to_string()).collect(),
        edges,
        spine_is_switches: spine == switches,
        spine,
        is_tree,
        spine_sum_vanishes: sum == LatticePoint::indicator(full, full, n),
    };
    Ok((WallInequality::unit(plus, minus), tree))
}

/// The closed-form inequality for either kind.
pub fn wall_inequality(w: &Wall) -> WallInequality {
    match w.kind {
        WallKind::A => supermodular_inequality(w).expect("kind A"),
        WallKind::B => updown_inequality(w).expect("kind B").0,
    }
}

/// Run lengths of the unbarred/barred blocks of `B̄`.
pub fn run_lengths(w: &Wall) -> Result<Vec<u64>, WallError> {
    if w.kind != WallKind::B {
        return Err(WallError::KindMismatch(w.to_string()));
    }
    let word = doubled_word(w);
    let mut runs: Vec<u64> = Vec::new();
    for (k, &(_, barred)) in word.iter().enumerate() {
        if k > 0 && word[k - 1].1 == barred {
            *runs.last_mut().expect("nonempty") += 1;
        } else {
            runs.push(1);
        }
    }
    Ok(runs)
}

/// `I(Π)` of a kind-B wall from the run lengths `a_1, …, a_{2k}`:
/// `Σ_{i odd} (a_1+…+a_i)(a_{i+1}+…) - Σ_{i even} (a_1+…+a_i)(a_{i+1}+…)`.
pub fn updown_value_from_runs(runs: &[u64]) -> i64 {
    let total: u64 = runs.iter().sum();
    let mut prefix = 0u64;
    let mut value = 0i64;
    for (idx, a) in runs.iter().enumerate() {
        prefix += a;
        let area = (prefix * (total - prefix)) as i64;
        // idx is 0-based, so odd positions have even idx.
        value += if idx % 2 == 0 { area } else { -area };
    }
    value
}

/// Chambers whose bipermutation refines the wall, found by splitting each
/// part in every possible way.
pub fn adjacent_chambers(w: &Wall) -> Vec<Bipermutation> {
    fn refinements(part: ElementSet) -> Vec<Vec<ElementSet>> {
        // Sequences of nonempty subsets covering `part`, each element used at most twice.
        let elems: Vec<usize> = part.iter().collect();
        let subsets: Vec<ElementSet> = (1u32..1 << elems.len())
            .map(|m| elems.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &e)| e).collect())
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<ElementSet>> = vec![Vec::new()];
        while let Some(seq) = stack.pop() {
            let covered = seq.iter().fold(ElementSet::EMPTY, |a, &p| a.union(p));
            if covered == part && !seq.is_empty() {
                out.push(seq.clone());
            }
            if seq.len() == 2 * elems.len() {
                continue;
            }
            for &s in &subsets {
                let mut next = seq.clone();
                next.push(s);
                if elems.iter().all(|&e| next.iter().filter(|p| p.contains(e)).count() <= 2) {
                    stack.push(next);
                }
            }
        }
        out
    }
    let n = w.n();
    let mut partial: Vec<Vec<ElementSet>> = vec![Vec::new()];
    for &p in w.bisequence.parts() {
        let opts = refinements(p);
        partial = partial
            .into_iter()
            .flat_map(|pre| {
                opts.iter().map(move |o| {
                    let mut v = pre.clone();
                    v.extend(o.iter().copied());
                    v
                })
            })
            .filter(|v| v.len() < 2 * n)
            .collect();
    }
    let mut out: Vec<Bipermutation> = partial
        .into_iter()
        .filter_map(|parts| Bisequence::new(parts, n).ok())
        .filter_map(|b| b.as_bipermutation())
        .filter(|b| w.bisequence.is_coarsening_of(&b.to_bisequence()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Wall-crossing inequality from the unique linear dependence
/// `c·r + c'·r' = Σ c_i r_i` modulo `e_E` and `f_E`, normalized to `c = 1`,
/// read as `Σ c_i h(r_i) - c h(r) - c' h(r') ≥ 0`.
pub fn generic_wallcross_oracle(w: &Wall) -> Result<WallInequality, WallError> {
    let n = w.n();
    let err = |reason: String| WallError::DependenceNotUnique { wall: w.to_string(), reason };
    let chambers = adjacent_chambers(w);
    if chambers.len() != 2 {
        return Err(err(format!("{} adjacent chambers", chambers.len())));
    }
    let wall_rays = w.rays();
    let outside = |b: &Bipermutation| -> Result<Bisubset, WallError> {
        let extra: Vec<Bisubset> = b.bisubsets().into_iter().filter(|r| !wall_rays.contains(r)).collect();
        match extra.as_slice() {
            [r] => Ok(*r),
            _ => Err(err(format!("chamber {b} has {} rays off the wall", extra.len()))),
        }
    };
    let (r, r2) = (outside(&chambers[0])?, outside(&chambers[1])?);
    // Columns: r, r', the wall rays (with a minus sign), e_E, f_E.
    let mut columns: Vec<LatticePoint> = vec![LatticePoint::indicator(r.left(), r.right(), n)];
    columns.push(LatticePoint::indicator(r2.left(), r2.right(), n));
    columns.extend(wall_rays.iter().map(|x| LatticePoint::indicator(x.left(), x.right(), n).negate()));
    columns.push(LatticePoint::indicator(ElementSet::full(n), ElementSet::EMPTY, n));
    columns.push(LatticePoint::indicator(ElementSet::EMPTY, ElementSet::full(n), n));
    let matrix: Vec<Vec<BigRational>> = (0..2 * n)
        .map(|row| {
            columns
                .iter()
                .map(|c| {
                    let v = if row < n { c.top[row] } else { c.bottom[row - n] };
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let basis = nullspace(&matrix);
    if basis.len() != 1 {
        return Err(err(format!("dependence space has dimension {}", basis.len())));
    }
    let v = &basis[0];
    if v[0].is_zero() {
        return Err(err("c = 0".into()));
    }
    let scale = v[0].recip();
    let coeffs: Vec<BigRational> = v.iter().map(|x| x * &scale).collect();
    if !coeffs[1].is_positive() {
        return Err(err(format!("c' = {} is not positive", coeffs[1])));
    }
    let mut plus = Vec::new();
    let mut minus = vec![(r, coeffs[0].clone()), (r2, coeffs[1].clone())];
    for (ray, c) in wall_rays.iter().zip(&coeffs[2..2 + wall_rays.len()]) {
        if c.is_positive() {
            plus.push((*ray, c.clone()));
        } else if c.is_negative() {
            minus.push((*ray, -c.clone()));
        }
    }
    Ok(WallInequality { plus, minus })
}

/// Outcome of evaluating every wall inequality on a support function.
#[derive(Clone, Debug, Serialize)]
pub struct NefReport {
    pub n: usize,
    pub walls: usize,
    pub nef: bool,
    pub ample: bool,
    /// First wall with a negative value.
    pub violation: Option<(String, String)>,
    /// First wall with value zero.
    pub degenerate: Option<(String, String)>,
}

pub fn nef_report(h: &SupportFunction) -> NefReport {
    let walls = enumerate_walls(h.n());
    let values: Vec<BigRational> = walls.par_iter().map(|w| wall_inequality(w).evaluate(h)).collect();
    let find = |pred: &dyn Fn(&BigRational) -> bool| {
        walls.iter().zip(&values).find(|(_, v)| pred(v)).map(|(w, v)| (w.to_string(), v.to_string()))
    };
    let violation = find(&|v| v.is_negative());
    let degenerate = find(&|v| v.is_zero());
    NefReport {
        n: h.n(),
        walls: walls.len(),
        nef: violation.is_none(),
        ample: violation.is_none() && degenerate.is_none(),
        violation,
        degenerate,
    }
}

pub fn is_nef(h: &SupportFunction) -> bool {
    nef_report(h).nef
}

pub fn is_ample(h: &SupportFunction) -> bool {
    nef_report(h).ample
}

/// Histograms of wall values, by kind-A case and for kind B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallValueTable {
    pub cases: BTreeMap<SupermodularCase, BTreeMap<BigRational, usize>>,
    pub kind_b: BTreeMap<BigRational, usize>,
}

impl WallValueTable {
    pub fn case_values(&self, case: SupermodularCase) -> Vec<BigRational> {
        self.cases.get(&case).map(|m| m.keys().cloned().collect()).unwrap_or_default()
    }

    pub fn kind_b_min(&self) -> Option<&BigRational> {
        self.kind_b.keys().next()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let hist = |m: &BTreeMap<BigRational, usize>| {
            m.iter().map(|(v, c)| (v.to_string(), serde_json::json!(c))).collect::<serde_json::Map<_, _>>()
        };
        let cases: serde_json::Map<String, serde_json::Value> =
            self.cases.iter().map(|(k, m)| (format!("{k:?}"), serde_json::Value::Object(hist(m)))).collect();
        serde_json::json!({ "kind_a": cases, "kind_b": hist(&self.kind_b) })
    }
}

pub fn wall_value_table(h: &SupportFunction) -> WallValueTable {
    let walls = enumerate_walls(h.n());
    let rows: Vec<(Option<SupermodularCase>, BigRational)> = walls
        .par_iter()
        .map(|w| {
            let case = (w.kind == WallKind::A).then(|| supermodular_case(w).expect("kind A"));
            (case, wall_inequality(w).evaluate(h))
        })
        .collect();
    let mut table = WallValueTable { cases: BTreeMap::new(), kind_b: BTreeMap::new() };
    for (case, v) in rows {
        let bucket = match case {
            Some(c) => table.cases.entry(c).or_default(),
            None => &mut table.kind_b,
        };
        *bucket.entry(v).or_default() += 1;
    }
    table
}

#[derive(Clone, Debug, Serialize)]
pub struct Quotient {
    pub value: String,
    /// A wall attaining the minimum ratio.
    pub binding_wall: String,
}

/// `P/Q = min I(P)/I(Q)` over walls with `I(Q) > 0`. Both errors carry the
/// first wall with `I(P) < 0`.
pub fn minkowski_quotient(p: &SupportFunction, q: &SupportFunction) -> Result<(BigRational, Quotient), QuotientError> {
    let walls = enumerate_walls(p.n());
    let values: Vec<(BigRational, BigRational)> = walls
        .par_iter()
        .map(|w| {
            let ineq = wall_inequality(w);
            (ineq.evaluate(p), ineq.evaluate(q))
        })
        .collect();
    if let Some((w, (ip, iq))) = walls.iter().zip(&values).find(|(_, (ip, _))| ip.is_negative()) {
        return Err(if iq.is_positive() {
            QuotientError::NotSummand { wall: w.to_string(), ip: ip.to_string(), iq: iq.to_string() }
        } else {
            QuotientError::NotNef { wall: w.to_string(), ip: ip.to_string() }
        });
    }
    let best = walls
        .iter()
        .zip(&values)
        .filter(|(_, (_, iq))| iq.is_positive())
        .map(|(w, (ip, iq))| (ip / iq, w))
        .min_by(|a, b| a.0.cmp(&b.0))
        .ok_or(QuotientError::Unbounded)?;
    Ok((best.0.clone(), Quotient { value: best.0.to_string(), binding_wall: best.1.to_string() }))
}
