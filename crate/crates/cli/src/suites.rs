use bipermutahedron::combinatorics::{all_bisubsets, bipermutation_count, enumerate_bipermutations, Bisequence};
use bipermutahedron::deformation::{
    enumerate_walls, generic_wallcross_oracle, is_ample, is_nef, minkowski_quotient, run_lengths, updown_inequality,
    updown_value_from_runs, wall_inequality, wall_value_table, SupermodularCase, WallKind,
};
use bipermutahedron::geometry::{facet_check, SupportFunction};
use bipermutahedron::invariants::{
    bieulerian_by_descents, bieulerian_by_ehrhart, expected_vertex_count, f_generating_check, f_vector_bruteforce,
    f_vector_formula, h_from_f, logconcavity_check, real_root_check, sweep_orientation_check, unimodality_check,
    RootVerdict,
};
use bipermutahedron::symmetry::{hyperplane_face_counts, symmetry_checks};
use bipermutahedron::triangulation::{cover_check, face_to_face_check, hstar_consistency, unimodularity_check};
use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Combinatorics,
    Geometry,
    Invariants,
    Triangulation,
    Deformation,
    Symmetry,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Combinatorics => "combinatorics",
            Suite::Geometry => "geometry",
            Suite::Invariants => "invariants",
            Suite::Triangulation => "triangulation",
            Suite::Deformation => "deformation",
            Suite::Symmetry => "symmetry",
        }
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Combinatorics,
                Suite::Geometry,
                Suite::Symmetry,
                Suite::Invariants,
                Suite::Triangulation,
                Suite::Deformation,
            ],
            s => vec![s],
        }
    }

    /// Sizes run when `--n` is not given.
    pub fn default_sizes(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Suite::Combinatorics => 1..=4,
            Suite::Geometry | Suite::Symmetry => 2..=4,
            Suite::Invariants => 1..=5,
            Suite::Triangulation => 1..=3,
            Suite::Deformation => 2..=3,
            Suite::All => 1..=3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub n: usize,
    pub name: &'static str,
    /// `None` when the check does not apply at this size.
    pub passed: Option<bool>,
    pub detail: Value,
}

impl Check {
    pub fn failed(&self) -> bool {
        self.passed == Some(false)
    }

    pub fn line(&self) -> String {
        let verdict = match self.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        };
        format!("{verdict} {} n={} {}", self.suite.name(), self.n, self.name)
    }
}

pub struct Params {
    pub samples: usize,
    pub seed: u64,
}

struct Collector {
    suite: Suite,
    n: usize,
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: &'static str, passed: bool, detail: Value) {
        self.checks.push(Check { suite: self.suite, n: self.n, name, passed: Some(passed), detail });
    }

    fn skip(&mut self, name: &'static str, reason: &str) {
        self.checks.push(Check {
            suite: self.suite,
            n: self.n,
            name,
            passed: None,
            detail: json!({ "skipped": reason }),
        });
    }
}

fn big(v: u128) -> BigInt {
    BigInt::from(v)
}

pub fn run(suite: Suite, n: usize, params: &Params) -> Vec<Check> {
    let mut c = Collector { suite, n, checks: Vec::new() };
    match suite {
        Suite::All => {
            return Suite::All.members().into_iter().flat_map(|s| run(s, n, params)).collect();
        }
        Suite::Combinatorics => combinatorics(&mut c),
        Suite::Geometry => geometry(&mut c),
        Suite::Symmetry => symmetry(&mut c),
        Suite::Invariants => invariants(&mut c),
        Suite::Triangulation => triangulation(&mut c, params),
        Suite::Deformation => deformation(&mut c),
    }
    c.checks
}

fn combinatorics(c: &mut Collector) {
    let n = c.n;
    if n <= 5 {
        let all: Vec<_> = enumerate_bipermutations(n).collect();
        let roundtrip = all.iter().all(|b| {
            let s = b.to_bisequence();
            Bisequence::parse(&s.to_string(), n).ok().as_ref() == Some(&s)
        });
        c.push(
            "bipermutation count is (2n)!/2^n",
            all.len() as u128 == bipermutation_count(n),
            json!({ "enumerated": all.len().to_string(), "closed_form": bipermutation_count(n).to_string() }),
        );
        c.push("bisequence text encoding round-trips", roundtrip, json!({}));
    } else {
        c.skip("bipermutation count is (2n)!/2^n", "enumeration capped at n = 5");
    }
    let bisubsets = all_bisubsets(n).len();
    let expected = 3usize.pow(n as u32) - 3;
    c.push("bisubset count is 3^n - 3", bisubsets == expected, json!({ "count": bisubsets, "expected": expected }));
    if n <= 4 {
        let (f, g) = (f_vector_formula(n), f_vector_bruteforce(n));
        c.push(
            "face counts: multigraph formula equals brute force",
            f == g,
            json!({ "formula": bigs(&f), "bruteforce": bigs(&g) }),
        );
    } else {
        c.skip("face counts: multigraph formula equals brute force", "brute force capped at n = 4");
    }
}

fn geometry(c: &mut Collector) {
    let n = c.n;
    let r = facet_check(n);
    c.push("every vertex satisfies every facet inequality, tight exactly on its splits", r.passed(), json!(r));
    let vertices = enumerate_bipermutations(n).count();
    c.push(
        "vertex count equals bipermutation count",
        BigInt::from(vertices) == expected_vertex_count(n),
        json!({ "vertices": vertices.to_string() }),
    );
}

fn symmetry(c: &mut Collector) {
    let n = c.n;
    let s = symmetry_checks(n);
    c.push("S_n and the row swap preserve rays and vertices; negation does not (n >= 3)", s.passed(), json!(s));
    if n >= 2 {
        let h = hyperplane_face_counts(n);
        c.push("walls per hyperplane match the closed forms", h.passed(), json!(h));
    }
}

fn invariants(c: &mut Collector) {
    let n = c.n;
    let descents = bieulerian_by_descents(n);
    let from_f = h_from_f(&f_vector_formula(n), 2 * n - 2);
    let ehrhart = bieulerian_by_ehrhart(n);
    let agree = matches!((&from_f, &ehrhart), (Ok(a), Ok(b)) if *a == descents && *b == descents);
    c.push(
        "biEulerian polynomial: descents, h-from-f and Ehrhart routes agree",
        agree,
        json!({
            "descents": descents.to_decimal_strings(),
            "h_from_f": from_f.as_ref().map(|p| json!(p.to_decimal_strings())).unwrap_or_else(|e| json!(e.to_string())),
            "ehrhart": ehrhart.as_ref().map(|p| json!(p.to_decimal_strings())).unwrap_or_else(|e| json!(e.to_string())),
        }),
    );
    c.push(
        "B_n(1) = (2n)!/2^n and the guard coefficients vanish",
        ehrhart.is_ok() && descents.coefficient_sum() == big(bipermutation_count(n)),
        json!({ "sum": descents.coefficient_sum().to_string() }),
    );
    c.push("B_n is palindromic", descents.is_palindromic(), json!({}));
    let roots = real_root_check(&descents);
    c.push("B_n is real-rooted (Sturm count)", roots.verdict == RootVerdict::RealRooted, json!(roots));
    c.push("B_n is log-concave", logconcavity_check(&descents), json!({}));
    c.push("B_n is unimodal", unimodality_check(&descents), json!({}));
    if n <= 5 {
        match sweep_orientation_check(n) {
            Ok(r) => c.push("sweep indegree equals descent count at every vertex", r.passed(), json!(r)),
            Err(e) => c.push("sweep indegree equals descent count at every vertex", false, json!(e.to_string())),
        }
    } else {
        c.skip("sweep indegree equals descent count at every vertex", "capped at n = 5");
    }
    let max_d = (2 * n).max(2);
    match f_generating_check(n, max_d) {
        Ok(ok) => {
            c.push("deformed exponential generating function gives the face counts", ok, json!({ "max_d": max_d }))
        }
        Err(e) => c.push("deformed exponential generating function gives the face counts", false, json!(e.to_string())),
    }
}

fn triangulation(c: &mut Collector, p: &Params) {
    let n = c.n;
    let u = unimodularity_check(n);
    c.push(
        "every simplex T_B is unimodular and the volumes add up",
        u.passed(),
        json!({ "failures": u.failures, "volumes": { "total": u.total_volume, "expected": u.expected_volume }, "simplices": u.simplices.to_string() }),
    );
    if n <= 4 {
        let r = cover_check(n, p.samples, p.seed);
        c.push("random points are covered with nonnegative coefficients", r.passed(), json!(r));
    } else {
        c.skip("random points are covered with nonnegative coefficients", "capped at n = 4");
    }
    if n <= 3 {
        let per_pair = (p.samples / 100).max(1);
        let r = face_to_face_check(n, per_pair, p.seed);
        c.push("simplices meet face to face", r.passed(), json!(r));
    } else {
        c.skip("simplices meet face to face", "capped at n = 3");
    }
    if n <= 6 {
        let r = hstar_consistency(n);
        c.push("h of the triangulation equals the Ehrhart h*", r.passed(), json!(r));
    }
}

fn deformation(c: &mut Collector) {
    let n = c.n;
    if n < 2 {
        c.skip("wall count equals the number of codimension-one cones", "no walls for n = 1");
        return;
    }
    let walls = enumerate_walls(n);
    let expected = f_vector_formula(n)[2 * n - 3].clone();
    c.push(
        "wall count equals the number of codimension-one cones",
        BigInt::from(walls.len()) == expected,
        json!({ "walls": walls.len().to_string(), "expected": expected.to_string() }),
    );
    if n <= 4 {
        let mismatches: Vec<String> = walls
            .iter()
            .filter(|w| match generic_wallcross_oracle(w) {
                Ok(o) => wall_inequality(w).positive_multiple_of(&o).is_none(),
                Err(_) => true,
            })
            .map(ToString::to_string)
            .collect();
        c.push(
            "supermodular and up-down inequalities match the dependence oracle",
            mismatches.is_empty(),
            json!({ "mismatches": mismatches }),
        );
    } else {
        c.skip("supermodular and up-down inequalities match the dependence oracle", "capped at n = 4");
    }
    let pi = SupportFunction::bipermutahedron(n);
    let bad_trees: Vec<String> = walls
        .iter()
        .filter(|w| w.kind() == WallKind::B)
        .filter(|w| {
            let tree_ok = updown_inequality(w).map(|(_, t)| t.valid()).unwrap_or(false);
            let runs_ok = run_lengths(w)
                .map(|r| {
                    BigRational::from_integer(updown_value_from_runs(&r).into()) == wall_inequality(w).evaluate(&pi)
                })
                .unwrap_or(false);
            !(tree_ok && runs_ok)
        })
        .map(ToString::to_string)
        .collect();
    c.push("up-down walls: tree, spine and run-length value", bad_trees.is_empty(), json!({ "failures": bad_trees }));

    let int = |v: i64| BigRational::from_integer(v.into());
    let pt = wall_value_table(&pi);
    let ht = wall_value_table(&SupportFunction::harmonic(n));
    let case_ok = |t: &bipermutahedron::deformation::WallValueTable, case, v: i64| {
        let vals = t.case_values(case);
        vals.is_empty() || vals == vec![int(v)]
    };
    let pi_ok = case_ok(&pt, SupermodularCase::SameSide, 2)
        && case_ok(&pt, SupermodularCase::OppositeSides, 2)
        && case_ok(&pt, SupermodularCase::OneReappears, 4)
        && pt.kind_b_min().is_some_and(|m| *m >= int(n as i64));
    c.push(
        "bipermutahedron wall values: 2, 2, 4 and up-down at least n",
        pi_ok,
        json!({ "table": pt.to_json(), "kind_b_min": pt.kind_b_min().map(ToString::to_string) }),
    );
    let h_ok = case_ok(&ht, SupermodularCase::SameSide, 1)
        && case_ok(&ht, SupermodularCase::OppositeSides, 0)
        && case_ok(&ht, SupermodularCase::OneReappears, 1)
        && ht.kind_b.keys().eq([int(1)].iter());
    c.push("harmonic wall values: 1, 0, 1 and up-down exactly 1", h_ok, json!({ "table": ht.to_json() }));
    let h = SupportFunction::harmonic(n);
    c.push(
        "bipermutahedron is ample; harmonic polytope is nef, and not ample for n >= 3",
        is_ample(&pi) && is_nef(&h) && (n < 3 || !is_ample(&h)),
        json!({}),
    );
    match minkowski_quotient(&pi, &h) {
        Ok((v, q)) => {
            c.push("Minkowski quotient of the bipermutahedron by the harmonic polytope is 2", v == int(2), json!(q))
        }
        Err(e) => c.push(
            "Minkowski quotient of the bipermutahedron by the harmonic polytope is 2",
            false,
            json!(e.to_string()),
        ),
    }
}

fn bigs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}
