//! One PASS/FAIL line per acceptance criterion. Exact arithmetic throughout.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kirillov::classification::{depth, heisenberg_quotient, is_character, metaplectic_degree_bound, DegreeBound, DepthClass};
use kirillov::degeneration::{
    check_simple, double_coset_reps, inner_coset_reps, levi_orbit_stabilizer_lie, p_orbit_dimension,
    search_cocharacters, stabilizer_monotonicity_check, RootDatum,
};
use kirillov::exact::{frac, neg_vec, rat, Matrix, Rational, Subspace};
use kirillov::lie::catalog::{self, gl_label, gl_stable_polarization_labels, sp_stable_polarization_labels};
use kirillov::orbits::{canonical_form, coadjoint_act, functional, n_stabilizer, orbit_dimension, replay, same_orbit, skew_form};
use kirillov::polarization::{default_flags, is_polarization, vergne_polarization};
use kirillov::LieAlgebra;

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn run(id: usize, title: &str, budget: Option<Duration>, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    body(&mut out);
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        out.check(elapsed < b, format!("runtime {elapsed:.2?} exceeds {b:?}"));
    }
    let ok = out.failures.is_empty();
    let status = if ok { "PASS" } else { "FAIL" };
    let mut line = format!("[{status}] {id}. {title} ({elapsed:.2?})");
    if !out.failures.is_empty() {
        line.push_str(&format!(": {}", out.failures.join("; ")));
    }
    println!("{line}");
    for n in &out.notes {
        println!("       {n}");
    }
    ok
}

fn labels_subalgebra(alg: &LieAlgebra, labels: &[String]) -> Subspace {
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    alg.subalgebra_from_labels(&refs).unwrap()
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = small(rng);
        if x != rat(0) {
            return x;
        }
    }
}

/// Rank of a rational matrix, by fraction-free Gaussian elimination over i128
/// after clearing denominators row by row.
fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(1i128, |acc, x| {
                let d: i128 = x.denom().try_into().unwrap();
                acc / gcd(acc, d) * d
            });
            r.iter()
                .map(|x| {
                    let n: i128 = x.numer().try_into().unwrap();
                    let d: i128 = x.denom().try_into().unwrap();
                    n * (l / d)
                })
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Skew form of `a * e_{1,n}^*` on strictly upper triangular `n x n` matrices,
/// computed from matrix commutators `E_ij E_kl - E_kl E_ij`.
fn gl_corner_form(n: usize, a: i64) -> Vec<Vec<Rational>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs
        .iter()
        .map(|&(i, j)| {
            pairs
                .iter()
                .map(|&(k, l)| {
                    // (1, n) entry of [E_ij, E_kl] = [j == k][i == 0][l == n-1] - [l == i][k == 0][j == n-1]
                    let plus = (j == k && i == 0 && l == n - 1) as i64;
                    let minus = (l == i && k == 0 && j == n - 1) as i64;
                    rat(a * (plus - minus))
                })
                .collect()
        })
        .collect()
}

/// Places identity blocks into a square matrix whose rows split as `row_blocks`
/// and columns as `col_blocks`; `ones[(r, c)]` marks block `(r, c)` as identity.
fn block_matrix(row_blocks: &[usize], col_blocks: &[usize], ones: &[(usize, usize)]) -> Matrix {
    let n: usize = row_blocks.iter().sum();
    let offset = |blocks: &[usize], b: usize| blocks[..b].iter().sum::<usize>();
    let mut m = Matrix::zeros(n, n);
    for &(r, c) in ones {
        assert_eq!(row_blocks[r], col_blocks[c]);
        for t in 0..row_blocks[r] {
            m.set(offset(row_blocks, r) + t, offset(col_blocks, c) + t, rat(1));
        }
    }
    m
}

fn criterion_gl4(out: &mut Outcome) {
    let e = catalog::lookup("gl_upper:4").unwrap();
    let (alg, levi) = (&e.algebra, &e.levi);
    let h = labels_subalgebra(alg, &gl_stable_polarization_labels(4));
    for (a, b) in [(1, 1), (2, 3), (1, 0), (-1, 0)] {
        let psi = functional(alg, &[("e_1,4", rat(a)), ("e_2,3", rat(b))]).unwrap();
        let tag = format!("psi({a},{b})");
        out.check(orbit_dimension(alg, &psi) == 4, format!("{tag} orbit dimension"));
        out.check(depth(alg, &psi).depth == 3, format!("{tag} depth"));
        let s = levi_orbit_stabilizer_lie(alg, levi, &psi);
        let pattern: &[&str] = if b != 0 { &["x", "y", "y", "x"] } else { &["x", "y", "z", "x"] };
        let expected_dim = if b != 0 { 2 } else { 3 };
        out.check(s.dim() == expected_dim, format!("{tag} stabilizer dim {}", s.dim()));
        out.check(s == levi.diagonal_pattern(pattern).unwrap(), format!("{tag} stabilizer pattern"));
        out.check(is_polarization(alg, &psi, &h).unwrap(), format!("{tag} polarization"));
        let bound = metaplectic_degree_bound(alg, levi, &s, &psi, std::slice::from_ref(&h));
        out.check(
            bound.bound == DegreeBound::ExactlyOne && bound.reason.tag() == "FlagStable",
            format!("{tag} degree bound {:?}/{}", bound.bound, bound.reason.tag()),
        );

        let mut rng = ChaCha8Rng::seed_from_u64(0x6c34 ^ ((a * 10 + b) as u64));
        let ix = |l: &str| alg.label_index(l).unwrap();
        for _ in 0..20 {
            let mut point = vec![rat(0); 6];
            let (y13, y24) = (small(&mut rng), small(&mut rng));
            point[ix("e_1,2")] = small(&mut rng);
            point[ix("e_3,4")] = small(&mut rng);
            point[ix("e_1,3")] = y13.clone();
            point[ix("e_2,4")] = y24.clone();
            point[ix("e_1,4")] = rat(a);
            let y23 = rat(b) + &y13 * &y24 / rat(a);
            point[ix("e_2,3")] = y23.clone();
            match same_orbit(alg, &psi, &point).unwrap() {
                Some(w) => out.check(replay(alg, &w, &psi) == point, format!("{tag} witness replay")),
                None => out.check(false, format!("{tag} quadric point rejected")),
            }
            let mut off = point.clone();
            off[ix("e_2,3")] = y23 + nonzero(&mut rng);
            out.check(same_orbit(alg, &psi, &off).unwrap().is_none(), format!("{tag} off-quadric point accepted"));
        }
    }
}

fn criterion_gln(out: &mut Outcome) {
    for n in 4..=7 {
        let e = catalog::lookup(&format!("gl_upper:{n}")).unwrap();
        let (alg, levi) = (&e.algebra, &e.levi);
        for a in [1, 3] {
            let f = functional(alg, &[(&gl_label(1, n), rat(a))]).unwrap();
            let tag = format!("n={n} a={a}");
            out.check(depth(alg, &f).depth == n - 1, format!("{tag} depth"));
            let d = orbit_dimension(alg, &f);
            out.check(d == 2 * n - 4, format!("{tag} orbit dimension {d}"));
            out.check(oracle_rank(&gl_corner_form(n, a)) == d, format!("{tag} oracle rank"));
            out.check(skew_form(alg, &f).matrix.to_rows() == gl_corner_form(n, a), format!("{tag} skew form"));
            let s = levi_orbit_stabilizer_lie(alg, levi, &f);
            let mut pattern = vec!["x".to_string()];
            pattern.extend((1..=n - 2).map(|k| format!("y{k}")));
            pattern.push("x".into());
            let refs: Vec<&str> = pattern.iter().map(String::as_str).collect();
            out.check(s.dim() == n - 1, format!("{tag} stabilizer dim {}", s.dim()));
            out.check(s == levi.diagonal_pattern(&refs).unwrap(), format!("{tag} stabilizer pattern"));
        }
    }
}

fn criterion_sp(out: &mut Outcome) {
    for n in [3, 4] {
        let e = catalog::lookup(&format!("sp:{n}")).unwrap();
        let (alg, levi) = (&e.algebra, &e.levi);
        let tag = format!("n={n}");
        out.check(alg.dim() == n * n, format!("{tag} dim {}", alg.dim()));
        out.check(alg.center().dim() == 1, format!("{tag} center dim {}", alg.center().dim()));
        let f = functional(alg, &[(&gl_label(1, 2 * n), rat(1))]).unwrap();
        let d = depth(alg, &f).depth;
        out.check(d == n, format!("{tag} depth {d}, expected {n}"));
        if d != n {
            out.notes.push(format!(
                "{tag}: lower central series has {} nonzero terms, so the corner functional has depth {d}",
                alg.nilpotency_class()
            ));
        }
        let s = levi_orbit_stabilizer_lie(alg, levi, &f);
        let mut pattern = vec!["0".to_string()];
        pattern.extend((2..=n).map(|k| format!("x{k}")));
        pattern.extend((2..=n).rev().map(|k| format!("-x{k}")));
        pattern.push("0".into());
        let refs: Vec<&str> = pattern.iter().map(String::as_str).collect();
        out.check(s.dim() == n - 1, format!("{tag} stabilizer dim {}", s.dim()));
        out.check(s == levi.diagonal_pattern(&refs).unwrap(), format!("{tag} stabilizer pattern"));
        let h = labels_subalgebra(alg, &sp_stable_polarization_labels(n));
        out.check(is_polarization(alg, &f, &h).unwrap(), format!("{tag} polarization"));
    }
}

fn criterion_heisenberg(out: &mut Outcome) {
    for m in 1..=3 {
        let e = catalog::lookup(&format!("heis:{m}")).unwrap();
        let alg = &e.algebra;
        let tag = format!("m={m}");
        let z = functional(alg, &[("z", rat(1))]).unwrap();
        let rep = depth(alg, &z);
        out.check(rep.classification == DepthClass::WeilPullback, format!("{tag} central class {:?}", rep.classification));
        let q = heisenberg_quotient(alg, &z).unwrap();
        out.check(q.symplectic_space_dim == 2 * m && q.is_non_degenerate(), format!("{tag} symplectic dim"));

        let flat = functional(alg, &[("p_1", rat(2)), (&format!("q_{m}"), rat(-1))]).unwrap();
        let rep = depth(alg, &flat);
        out.check(rep.classification == DepthClass::Character && is_character(alg, &flat), format!("{tag} character"));

        let center = alg.center();
        for flag in default_flags(alg) {
            let pol = vergne_polarization(alg, &z, &flag).unwrap();
            out.check(pol.is_certified(), format!("{tag} Vergne certificate"));
            out.check(pol.subspace.dim() == m + 1, format!("{tag} Vergne dim {}", pol.subspace.dim()));
            out.check(pol.subspace.contains_subspace(&center), format!("{tag} Vergne misses center"));
            // The part outside the center is isotropic of half rank: a Lagrangian.
            let outside = Subspace::span(alg.dim(), pol.subspace.basis().iter().map(|v| {
                let mut v = v.clone();
                v[alg.dim() - 1] = rat(0);
                v
            }));
            let restricted = skew_form(alg, &z).restrict(&outside);
            out.check(outside.dim() == m && restricted.matrix.is_zero(), format!("{tag} Lagrangian"));
        }
    }
}

fn criterion_degeneration(out: &mut Outcome) {
    let e = catalog::lookup("gl_upper:4").unwrap();
    let (alg, levi) = (&e.algebra, &e.levi);
    let rd = RootDatum::gl(4).unwrap();
    let psi11 = functional(alg, &[("e_1,4", rat(1)), ("e_2,3", rat(1))]).unwrap();
    let psi10 = functional(alg, &[("e_1,4", rat(1))]).unwrap();
    let cert = check_simple(alg, levi, &rd, &psi11, &psi10, &[0, 0, 1, 0]).unwrap();
    let c = &cert.checks;
    out.check(c.distinct_orbits, "distinct orbits");
    out.check(c.equal_orbit_dims, "equal orbit dims");
    out.check(c.limit_matches, "limit");
    out.check(c.lambda_commutes_with_stabilizer, "commutes with stabilizer");
    match &cert.simple_checks {
        Some(s) => {
            out.check(s.p_orbit_dim_drop_one, "p-orbit drop");
            out.check(s.delta_is_simple_negative_root_multiple_orthogonal_to_j, "delta root");
        }
        None => out.check(false, "simple checks missing"),
    }
    out.check(stabilizer_monotonicity_check(alg, levi, &psi11, &psi10), "monotonicity");
    let (d1, d0) = (p_orbit_dimension(alg, levi, &psi11), p_orbit_dimension(alg, levi, &psi10));
    out.check(d1 == d0 + 1, format!("p-orbit dims {d1} -> {d0}"));
    let found = search_cocharacters(alg, levi, &psi11, &psi10, 2).unwrap();
    out.check(!found.is_empty(), "search found nothing");
    out.notes.push(format!("search with bound 2 found {} cocharacters, e.g. {:?}", found.len(), found.first()));
}

fn criterion_cosets(out: &mut Outcome) {
    for n in 4..=8 {
        let reps = double_coset_reps(n).unwrap();
        out.check(reps.len() == n - 2, format!("n={n} double coset count {}", reps.len()));
    }
    let reps = double_coset_reps(5).unwrap();
    out.check(reps[0] == Matrix::identity(5), "g_0");
    for k in 1..=2 {
        // Rows split (1, 1, k, n-k-2), columns (1, k, 1, n-k-2).
        let rows = [1, 1, k, 5 - k - 2];
        let cols = [1, k, 1, 5 - k - 2];
        let expected = block_matrix(&rows, &cols, &[(0, 0), (1, 2), (2, 1), (3, 3)]);
        out.check(reps[k] == expected, format!("g_{k} entries"));
    }
    for n in 5..=8 {
        let reps = inner_coset_reps(n).unwrap();
        out.check(reps.len() == n - 3, format!("n={n} inner coset count {}", reps.len()));
    }
}

const CASES: usize = 200;

fn random_case(rng: &mut ChaCha8Rng, entries: &[catalog::CatalogEntry]) -> (usize, Vec<Rational>) {
    let i = rng.gen_range(0..entries.len());
    let dim = entries[i].algebra.dim();
    let psi = (0..dim)
        .map(|_| if rng.gen_bool(0.3) { rat(0) } else { small(rng) })
        .collect();
    (i, psi)
}

fn criterion_properties(out: &mut Outcome) {
    let names = ["gl_upper:3", "gl_upper:4", "gl_upper:5", "sp:2", "sp:3", "heis:1", "heis:2", "heis:3"];
    let entries: Vec<_> = names.iter().map(|n| catalog::lookup(n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20261014);
    let mut counts = [0usize; 7];
    for _ in 0..CASES {
        let (i, psi) = random_case(&mut rng, &entries);
        let alg = &entries[i].algebra;
        let tag = names[i];

        let form = skew_form(alg, &psi);
        out.check(form.rank() % 2 == 0, format!("{tag} odd rank"));
        counts[0] += 1;

        out.check(orbit_dimension(alg, &psi) + n_stabilizer(alg, &psi).dim() == alg.dim(), format!("{tag} dimension sum"));
        counts[1] += 1;

        for flag in default_flags(alg) {
            let pol = vergne_polarization(alg, &psi, &flag).unwrap();
            let law = 2 * pol.subspace.dim() + orbit_dimension(alg, &psi) == 2 * alg.dim();
            out.check(law && is_polarization(alg, &psi, &pol.subspace).unwrap(), format!("{tag} Vergne"));
        }
        counts[2] += 1;

        let y: Vec<Rational> = (0..alg.dim()).map(|_| small(&mut rng)).collect();
        let moved = coadjoint_act(alg, &y, &psi);
        match same_orbit(alg, &psi, &moved).unwrap() {
            Some(w) => out.check(replay(alg, &w, &psi) == moved, format!("{tag} witness")),
            None => out.check(false, format!("{tag} same_orbit refused a translate")),
        }
        counts[3] += 1;

        let c = canonical_form(alg, &psi);
        out.check(canonical_form(alg, &c) == c, format!("{tag} canonical idempotent"));
        out.check(canonical_form(alg, &moved) == c, format!("{tag} canonical orbit-constant"));
        counts[4] += 1;

        out.check(depth(alg, &psi).depth == depth(alg, &neg_vec(&psi)).depth, format!("{tag} depth sign"));
        counts[5] += 1;

        let levi = &entries[i].levi;
        let s = levi_orbit_stabilizer_lie(alg, levi, &psi);
        out.check(levi.is_subalgebra(&s), format!("{tag} stabilizer not closed"));
        counts[6] += 1;
    }
    out.check(counts.iter().all(|&c| c >= CASES), "case count");
    out.notes.push(format!("{CASES} seeded cases per property over {}", names.join(", ")));
}

fn main() -> ExitCode {
    println!("acceptance: exact rational arithmetic, zero tolerance");
    let results = [
        run(1, "GL4 battery", Some(Duration::from_secs(1)), criterion_gl4),
        run(2, "GLn corner functionals, n = 4..7", Some(Duration::from_secs(5)), criterion_gln),
        run(3, "Sp2n corner functionals, n = 3, 4", Some(Duration::from_secs(5)), criterion_sp),
        run(4, "Heisenberg algebras, m = 1..3", None, criterion_heisenberg),
        run(5, "GL4 simple horizontal degeneration", None, criterion_degeneration),
        run(6, "coset representatives", None, criterion_cosets),
        run(7, "seeded property checks", Some(Duration::from_secs(60)), criterion_properties),
    ];
    println!("[N/A ] 8. multiplicity-one statements: infinite-dimensional, covered by 1-7");
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
