//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured evidence (run with `--nocapture` to see all of them).
//!
//! Every tolerance here is exact equality of integers or polynomials; the
//! only numeric thresholds are the stated runtime budgets.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::Instant;
use treepoly::alexander::{pd, pd_determinant, pd_direct};
use treepoly::bijection::{lemma_checks, verify_weight_relation};
use treepoly::files::parse_bipartite;
use treepoly::graphs::EulerianDigraph;
use treepoly::links::{build_models, crowell_polynomial, kauffman_polynomial};
use treepoly::poly::{one_plus_t_pow, t_minus_one_pow, IntPoly};
use treepoly::scanner::{enumerate_eulerian, enumerate_eulerian_labeled, scan, Check, ScanConfig};
use treepoly::trees::{
    ck_inclusion_exclusion_vector, ck_vector, classify, count_eulerian_tours, spanning_trees,
};

fn corpus_labeled() -> &'static [EulerianDigraph] {
    static CORPUS: OnceLock<Vec<EulerianDigraph>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_eulerian_labeled(5, 10))
}

fn three_cycle() -> EulerianDigraph {
    EulerianDigraph::new(treepoly::graphs::Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap())
        .unwrap()
}

fn p(cs: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(cs.to_vec())
}

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"))
}

const BIPARTITE_FIXTURES: &[&str] = &[
    "theta.bg",
    "hopf.bg",
    "square.bg",
    "theta4.bg",
    "square_doubled.bg",
    "k23.bg",
    "hexagon.bg",
    "path3.bg",
    "star3.bg",
    "single_edge.bg",
];

#[test]
fn criterion_01_three_cycle_ground_truth() {
    let d = three_cycle();
    let expected = p(&[1, 1, 1]);
    let start = Instant::now();
    let direct = pd_direct(&d, 0).unwrap();
    let det = pd_determinant(&d);
    let ie = IntPoly::from_coeffs(ck_inclusion_exclusion_vector(&d, 0).unwrap());
    let elapsed = start.elapsed();
    assert_eq!(direct, expected);
    assert_eq!(det, expected);
    assert_eq!(ie, expected);
    assert!(
        elapsed.as_micros() < 1000,
        "three pipelines took {elapsed:?}, budget 1 ms"
    );
    println!("[criterion 1] PASS - three-cycle = 1+t+t^2 on all pipelines in {elapsed:?}");
}

#[test]
fn criterion_02_pipeline_equivalence_on_corpus() {
    let start = Instant::now();
    let corpus = corpus_labeled();
    for d in corpus {
        let direct = pd_direct(d, 0).unwrap();
        let det = pd_determinant(d);
        let ie = IntPoly::from_coeffs(ck_inclusion_exclusion_vector(d, 0).unwrap());
        assert_eq!(direct, det, "direct vs det on {:?}", d.graph());
        assert_eq!(det, ie, "det vs incl-excl on {:?}", d.graph());
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "corpus sweep took {elapsed:?}, budget 60 s"
    );
    println!(
        "[criterion 2] PASS - {} labeled instances (|V|<=5, |E|<=10), three pipelines equal, {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn criterion_03_root_independence_palindromicity_transpose() {
    let corpus = corpus_labeled();
    let start = Instant::now();
    for d in corpus {
        let n = d.graph().vertex_count();
        let base = ck_vector(d, 0).unwrap();
        for r in 1..n {
            assert_eq!(ck_vector(d, r).unwrap(), base, "root {r} on {:?}", d.graph());
        }
        let poly = IntPoly::from_coeffs(base.clone());
        assert!(poly.is_palindromic(), "palindromic on {:?}", d.graph());
        let t = d.transpose();
        assert_eq!(ck_vector(&t, 0).unwrap(), base, "transpose on {:?}", d.graph());
        // per-tree bijection: a k-tree of D is an (n-1-k)-tree of Dᵀ
        for tree in spanning_trees(d.graph()).unwrap() {
            let k = classify(d.graph(), &tree, 0).unwrap().k;
            let kt = classify(t.graph(), &tree, 0).unwrap().k;
            assert_eq!(k + kt, n - 1);
        }
    }
    println!
        ("[criterion 3] PASS - root independence, palindromicity, transpose symmetry on {} instances, {:?}",
        corpus.len(), start.elapsed()
    );
}

#[test]
fn criterion_04_best_identity() {
    let start = Instant::now();
    let mut checked_edges = 0usize;
    for d in corpus_labeled().iter().filter(|d| d.graph().edge_count() <= 9) {
        let c0 = ck_vector(d, 0).unwrap()[0].clone();
        let mut factor = BigInt::one();
        for v in 0..d.graph().vertex_count() {
            for i in 1..d.out_degree(v) {
                factor *= BigInt::from(i);
            }
        }
        for e in d.graph().edges() {
            // every admissible starting edge: c0 is root independent, so
            // the expected count is the same for each of them
            let tours = count_eulerian_tours(d, e.id).unwrap();
            assert_eq!(tours, &c0 * &factor, "BEST on {:?} edge {}", d.graph(), e.id);
            checked_edges += 1;
        }
    }
    println!(
        "[criterion 4] PASS - BEST identity over {checked_edges} starting edges, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_05_volume_expansion() {
    // hand-derived census for the three-cycle:
    // 3 + 3(t-1) + (t-1)^2 = t^2 + t + 1
    let census = &(&IntPoly::constant(3) + &t_minus_one_pow(1).scale(&BigInt::from(3)))
        + &t_minus_one_pow(2);
    assert_eq!(census, p(&[1, 1, 1]));
    let d = three_cycle();
    assert_eq!(
        treepoly::rootpolytope::theorem_volume_expansion(&d, 0).unwrap(),
        census
    );

    let start = Instant::now();
    let mut checked = 0usize;
    for d in corpus_labeled().iter().filter(|d| d.graph().edge_count() <= 9) {
        let expected = pd_determinant(d);
        for root in 0..d.graph().vertex_count() {
            let expansion = treepoly::rootpolytope::theorem_volume_expansion(d, root).unwrap();
            assert_eq!(expansion, expected, "expansion at root {root} on {:?}", d.graph());
        }
        checked += 1;
    }
    println!(
        "[criterion 5] PASS - volume expansion = P_D on {checked} instances (all roots), {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_06_model_agreement() {
    let start = Instant::now();
    for name in BIPARTITE_FIXTURES {
        let parsed = parse_bipartite(&fixture(name)).unwrap();
        assert!(parsed.graph.graph().edge_count() <= 6);
        let models = build_models(&parsed.graph).unwrap();
        let dual = EulerianDigraph::new(models.diagram.dual.graph().clone()).unwrap();
        let expected = pd(&dual).unwrap().canonical();
        let kauffman = kauffman_polynomial(&models.diagram).unwrap();
        let crowell = crowell_polynomial(&models.crowell, models.diagram.v0).unwrap();
        assert_eq!(kauffman, expected, "kauffman on {name}");
        assert_eq!(crowell, expected, "crowell on {name}");
        // crowell canonical form is root independent
        for v in 0..models.crowell.digraph.vertex_count() {
            assert_eq!(crowell_polynomial(&models.crowell, v).unwrap(), expected);
        }
    }
    println!(
        "[criterion 6] PASS - Kauffman = Crowell = P_D(dual) on {} fixtures, {:?}",
        BIPARTITE_FIXTURES.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_07_bijection_suite() {
    let start = Instant::now();
    let mut trees_total = 0usize;
    for name in BIPARTITE_FIXTURES {
        let parsed = parse_bipartite(&fixture(name)).unwrap();
        let models = build_models(&parsed.graph).unwrap();
        let weights =
            verify_weight_relation(&models.diagram, &models.crowell, &models.gold_blue).unwrap();
        assert!(
            weights.all_ok(),
            "weight relation on {name}: {:?}",
            weights.violations
        );
        let lemmas = lemma_checks(&models.diagram, &models.crowell, &models.gold_blue).unwrap();
        assert!(
            lemmas.all_ok(),
            "lemmas on {name}: {:?} {:?} {:?} {:?}",
            lemmas.fe_color_violations,
            lemmas.last_edge_violations,
            lemmas.overlap_violations,
            lemmas.path_violations
        );
        trees_total += weights.rows.len();
    }
    println!(
        "[criterion 7] PASS - bijection + weight relation + lemmas over {trees_total} trees, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_08_symmetric_ultra_log_concavity() {
    let start = Instant::now();
    let mut checked = 0usize;
    for d in corpus_labeled() {
        // symmetric multiplicities: every arc is paired with its reversal
        let mut counts: std::collections::BTreeMap<(usize, usize), i64> = Default::default();
        for e in d.graph().edges() {
            *counts.entry((e.init, e.fin)).or_default() += 1;
        }
        let symmetric = counts
            .iter()
            .all(|(&(i, j), &c)| counts.get(&(j, i)).copied().unwrap_or(0) == c);
        if !symmetric {
            continue;
        }
        let n = d.graph().vertex_count();
        let poly = pd_determinant(d);
        let quotient = poly.exact_div(&one_plus_t_pow(n - 1));
        assert!(
            quotient.is_some(),
            "symmetric {:?} not divisible by (1+t)^{}",
            d.graph(),
            n - 1
        );
        assert!(
            poly.is_ultra_log_concave().unwrap(),
            "symmetric {:?} not ULC",
            d.graph()
        );
        checked += 1;
    }
    // and the plain three-cycle is flagged as not ultra-log-concave
    let tri = pd_determinant(&three_cycle());
    assert!(!tri.is_ultra_log_concave().unwrap());
    assert!(tri.is_log_concave_no_internal_zeros().unwrap());
    println!(
        "[criterion 8] PASS - {checked} symmetric instances divisible by (1+t)^(n-1) and ULC; three-cycle flagged, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_09_conjecture_scan() {
    let start = Instant::now();
    // exhaustive small corpus
    for d in enumerate_eulerian(4, 8) {
        let poly = pd_determinant(&d);
        assert!(
            poly.is_log_concave_no_internal_zeros().unwrap(),
            "log-concavity counterexample: {:?} -> {poly}",
            d.graph()
        );
        // on true coefficient vectors ultra-log-concavity implies log-concavity
        if poly.is_ultra_log_concave().unwrap() {
            assert!(poly.is_log_concave_no_internal_zeros().unwrap());
        }
    }
    // 10,000 seeded random instances
    let cfg = ScanConfig {
        n_range: (3, 7),
        m_range: (3, 14),
        count: 10_000,
        seed: 20240601,
        checks: BTreeSet::from([Check::LogConcave, Check::Palindromic]),
        jobs: 4,
        symmetric: false,
        exhaustive_small: true,
    };
    let report = scan(&cfg).unwrap();
    if !report.violations.is_empty() {
        // replayable artifact for human eyes
        let path = format!(
            "{}/../../target/logconcavity_counterexamples.txt",
            env!("CARGO_MANIFEST_DIR")
        );
        let mut body = String::new();
        for v in &report.violations {
            body.push_str(&format!(
                "# index {} check {} coeffs {:?}\n{}\n",
                v.index, v.check, v.coeffs, v.digraph
            ));
        }
        std::fs::write(&path, body).unwrap();
        panic!(
            "{} counterexample(s) found; replay artifacts written to {path}",
            report.violations.len()
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "scan took {elapsed:?}, budget 10 min"
    );
    println!(
        "[criterion 9] PASS - zero violations over exhaustive corpus + {} random instances, {elapsed:?}",
        report.instances_checked
    );
}

#[test]
fn criterion_10_determinism() {
    let cfg = ScanConfig {
        n_range: (4, 6),
        m_range: (4, 10),
        count: 200,
        seed: 7,
        checks: Check::all(),
        jobs: 1,
        symmetric: false,
        exhaustive_small: false,
    };
    let a = scan(&cfg).unwrap();
    let b = scan(&cfg).unwrap();
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    // parallel evaluation must not change the bytes
    let par = scan(&ScanConfig { jobs: 4, ..cfg.clone() }).unwrap();
    assert_eq!(a.to_text(), par.to_text());

    // the CLI binary end to end, twice
    let exe = env!("CARGO_BIN_EXE_treepoly");
    let run = || {
        std::process::Command::new(exe)
            .args(["scan", "--n", "4..5", "--m", "4..9", "--count", "50", "--seed", "11", "--json"])
            .output()
            .unwrap()
    };
    let (o1, o2) = (run(), run());
    assert!(o1.status.success());
    assert_eq!(o1.stdout, o2.stdout);
    println!("[criterion 10] PASS - identical seeds give byte-identical reports (library and CLI)");
}
