//! Random Eulerian digraph generation, exhaustive small-corpus enumeration,
//! and empirical conjecture scanning (log-concavity, trapezoidality,
//! ultra-log-concavity, palindromicity) over the resulting polynomials.
//!
//! Identical seed and configuration produce identical reports; instance
//! generation is sequential and evaluation is parallelized with a merge
//! ordered by instance index.

use crate::alexander::{pd, pd_determinant};
use crate::files::serialize_digraph;
use crate::graphs::{Digraph, EulerianDigraph};
use crate::poly::one_plus_t_pow;
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    LogConcave,
    Trapezoidal,
    UltraLogConcave,
    Palindromic,
}

impl Check {
    pub fn all() -> BTreeSet<Check> {
        BTreeSet::from([
            Check::LogConcave,
            Check::Trapezoidal,
            Check::UltraLogConcave,
            Check::Palindromic,
        ])
    }

    pub fn name(&self) -> &'static str {
        match self {
            Check::LogConcave => "log-concave",
            Check::Trapezoidal => "trapezoidal",
            Check::UltraLogConcave => "ultra-log-concave",
            Check::Palindromic => "palindromic",
        }
    }

    pub fn parse(s: &str) -> Result<Check> {
        match s {
            "log-concave" | "lc" => Ok(Check::LogConcave),
            "trapezoidal" | "trap" => Ok(Check::Trapezoidal),
            "ultra-log-concave" | "ulc" => Ok(Check::UltraLogConcave),
            "palindromic" | "palin" => Ok(Check::Palindromic),
            other => Err(Error::input(format!("unknown check {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanConfig {
    pub n_range: (usize, usize),
    pub m_range: (usize, usize),
    pub count: usize,
    pub seed: u64,
    pub checks: BTreeSet<Check>,
    pub jobs: usize,
    /// Force symmetric edge multiplicities (every generated edge is paired
    /// with its reversal).
    pub symmetric: bool,
    /// Prepend the exhaustive corpus of all Eulerian digraphs with
    /// |V| ≤ 4 and |E| ≤ 8 (up to relabeling) to the random stream.
    pub exhaustive_small: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            n_range: (3, 5),
            m_range: (3, 10),
            count: 100,
            seed: 0,
            checks: Check::all(),
            jobs: 1,
            symmetric: false,
            exhaustive_small: false,
        }
    }
}

/// A connected balanced loopless digraph with `n` vertices and `m` edges,
/// built by unioning random directed cycles; deterministic per seed.
pub fn random_eulerian_digraph(n: usize, m: usize, seed: u64) -> Result<EulerianDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_eulerian_with_rng(n, m, &mut rng)
}

pub(crate) fn random_eulerian_with_rng(
    n: usize,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Result<EulerianDigraph> {
    if n == 1 && m == 0 {
        return EulerianDigraph::new(Digraph::new(1, &[]).unwrap());
    }
    if n < 1 || m < n || (n == 2 && !m.is_multiple_of(2)) {
        return Err(Error::input(format!(
            "no loopless Eulerian digraph with n={n}, m={m}"
        )));
    }
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        // split m into cycle lengths in 2..=n
        let mut lengths = Vec::new();
        let mut rem = m;
        let mut ok = true;
        while rem > 0 {
            let max_len = rem.min(n);
            if max_len < 2 {
                ok = false;
                break;
            }
            let len = rng.gen_range(2..=max_len);
            if rem - len == 1 {
                continue; // a remainder of 1 can never form a cycle
            }
            lengths.push(len);
            rem -= len;
        }
        if !ok {
            continue;
        }
        let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(m);
        let mut vertices: Vec<usize> = (0..n).collect();
        for &len in &lengths {
            vertices.shuffle(rng);
            let cycle = &vertices[0..len];
            for w in 0..len {
                arcs.push((cycle[w], cycle[(w + 1) % len]));
            }
        }
        let d = Digraph::new(n, &arcs).unwrap();
        if d.is_connected_underlying() {
            let e = EulerianDigraph::new(d).expect("balanced by construction");
            return Ok(e);
        }
    }
    Err(Error::input(format!(
        "could not generate a connected Eulerian digraph with n={n}, m={m}"
    )))
}

/// Exhaustive enumeration of Eulerian digraphs (connected, balanced,
/// loopless) with `n ≤ max_n` vertices and `m ≤ max_m` edges, one canonical
/// representative per vertex-relabeling class.
pub fn enumerate_eulerian(max_n: usize, max_m: usize) -> Vec<EulerianDigraph> {
    enumerate_impl(max_n, max_m, true)
}

/// Exhaustive enumeration of all distinct labeled edge multisets (no
/// relabeling reduction).
pub fn enumerate_eulerian_labeled(max_n: usize, max_m: usize) -> Vec<EulerianDigraph> {
    enumerate_impl(max_n, max_m, false)
}

fn enumerate_impl(max_n: usize, max_m: usize, canonical: bool) -> Vec<EulerianDigraph> {
    let mut out = Vec::new();
    out.push(EulerianDigraph::new(Digraph::new(1, &[]).unwrap()).unwrap());
    for n in 2..=max_n {
        let perms = if canonical {
            permutations(n)
        } else {
            vec![(0..n).collect()]
        };
        let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        // out-degree sequences d with sum <= max_m, each >= 1
        let mut degs = vec![1usize; n];
        loop {
            let m: usize = degs.iter().sum();
            if m <= max_m {
                enumerate_with_degrees(n, &degs, &perms, &mut seen, &mut out);
            }
            // next degree vector with entries in 1..=max_m
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                degs[i] += 1;
                if degs.iter().sum::<usize>() <= max_m {
                    break;
                }
                degs[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out
}

fn enumerate_with_degrees(
    n: usize,
    out_deg: &[usize],
    perms: &[Vec<usize>],
    seen: &mut BTreeSet<Vec<(usize, usize)>>,
    out: &mut Vec<EulerianDigraph>,
) {
    // fill the adjacency matrix row by row; column sums must match out_deg
    // (balance) and the diagonal stays zero.
    let mut matrix = vec![vec![0usize; n]; n];
    let mut col_remaining: Vec<usize> = out_deg.to_vec();

    #[allow(clippy::too_many_arguments)]
    fn fill_row(
        n: usize,
        row: usize,
        col: usize,
        remaining_row: usize,
        matrix: &mut Vec<Vec<usize>>,
        col_remaining: &mut Vec<usize>,
        out_deg: &[usize],
        perms: &[Vec<usize>],
        seen: &mut BTreeSet<Vec<(usize, usize)>>,
        out: &mut Vec<EulerianDigraph>,
    ) {
        if col == n {
            if remaining_row != 0 {
                return;
            }
            if row + 1 == n {
                finish(n, matrix, out_deg, perms, seen, out);
            } else {
                fill_row(
                    n,
                    row + 1,
                    0,
                    out_deg[row + 1],
                    matrix,
                    col_remaining,
                    out_deg,
                    perms,
                    seen,
                    out,
                );
            }
            return;
        }
        if col == row {
            fill_row(
                n,
                row,
                col + 1,
                remaining_row,
                matrix,
                col_remaining,
                out_deg,
                perms,
                seen,
                out,
            );
            return;
        }
        let max_here = remaining_row.min(col_remaining[col]);
        for v in 0..=max_here {
            matrix[row][col] = v;
            col_remaining[col] -= v;
            fill_row(
                n,
                row,
                col + 1,
                remaining_row - v,
                matrix,
                col_remaining,
                out_deg,
                perms,
                seen,
                out,
            );
            col_remaining[col] += v;
            matrix[row][col] = 0;
        }
    }

    fn finish(
        n: usize,
        matrix: &[Vec<usize>],
        _out_deg: &[usize],
        perms: &[Vec<usize>],
        seen: &mut BTreeSet<Vec<(usize, usize)>>,
        out: &mut Vec<EulerianDigraph>,
    ) {
        // connectivity
        let mut uf = crate::graphs::UnionFind::new(n);
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] > 0 {
                    uf.union(i, j);
                }
            }
        }
        if (1..n).any(|v| uf.find(v) != uf.find(0)) {
            return;
        }
        // canonical form under vertex relabeling
        let mut best: Option<Vec<(usize, usize)>> = None;
        for p in perms {
            let mut arcs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for _ in 0..matrix[i][j] {
                        arcs.push((p[i], p[j]));
                    }
                }
            }
            arcs.sort_unstable();
            if best.as_ref().is_none_or(|b| &arcs < b) {
                best = Some(arcs);
            }
        }
        let key = best.unwrap();
        if seen.insert(key.clone()) {
            let d = Digraph::new(n, &key).unwrap();
            out.push(EulerianDigraph::new(d).expect("balanced and connected"));
        }
    }

    let first = out_deg[0];
    fill_row(
        n,
        0,
        0,
        first,
        &mut matrix,
        &mut col_remaining,
        out_deg,
        perms,
        seen,
        out,
    );
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceResult {
    pub index: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Coefficients low-to-high, as decimal strings.
    pub coeffs: Vec<String>,
    pub failed_checks: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub check: String,
    /// Replayable digraph file contents.
    pub digraph: String,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub instances_checked: usize,
    pub pass_counts: Vec<(String, usize)>,
    pub violations: Vec<Violation>,
}

/// Run the scan: generate instances (sequentially, for determinism),
/// evaluate the polynomial and the configured predicates (in parallel when
/// `jobs > 1`), and collect violations as replayable artifacts.
pub fn scan(cfg: &ScanConfig) -> Result<ScanReport> {
    let mut instances: Vec<EulerianDigraph> = Vec::new();
    if cfg.exhaustive_small {
        instances.extend(enumerate_eulerian(4, 8));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut made = 0;
    let mut failures = 0;
    while made < cfg.count {
        let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
        let (lo, hi) = (cfg.m_range.0.max(n), cfg.m_range.1);
        if cfg.symmetric {
            // generate half the edges and union with their reversals
            let half_lo = lo.div_ceil(2).max(n);
            let half_hi = hi / 2;
            if half_lo > half_hi {
                failures += 1;
                if failures > 1000 {
                    return Err(Error::input("symmetric scan range infeasible"));
                }
                continue;
            }
            let hm = rng.gen_range(half_lo..=half_hi);
            match random_eulerian_with_rng(n, hm, &mut rng) {
                Ok(d) => {
                    let mut arcs: Vec<(usize, usize)> = d
                        .graph()
                        .edges()
                        .iter()
                        .map(|e| (e.init, e.fin))
                        .collect();
                    let rev: Vec<(usize, usize)> = arcs.iter().map(|&(a, b)| (b, a)).collect();
                    arcs.extend(rev);
                    let sym = Digraph::new(n, &arcs).unwrap();
                    instances.push(EulerianDigraph::new(sym).expect("symmetric union"));
                    made += 1;
                }
                Err(_) => {
                    failures += 1;
                    if failures > 1000 {
                        return Err(Error::input("could not generate instances in range"));
                    }
                }
            }
        } else {
            if lo > hi {
                return Err(Error::input("edge range below vertex count"));
            }
            let m = rng.gen_range(lo..=hi);
            match random_eulerian_with_rng(n, m, &mut rng) {
                Ok(d) => {
                    instances.push(d);
                    made += 1;
                }
                Err(_) => {
                    failures += 1;
                    if failures > 1000 {
                        return Err(Error::input("could not generate instances in range"));
                    }
                }
            }
        }
    }

    let evaluate = |(index, d): (usize, &EulerianDigraph)| -> Result<InstanceResult> {
        // determinant route; spot cross-check through the full pipeline
        let poly = if index % 50 == 0 {
            pd(d)?
        } else {
            pd_determinant(d)
        };
        let mut failed = Vec::new();
        for check in &cfg.checks {
            let ok = match check {
                Check::LogConcave => poly.is_log_concave_no_internal_zeros()?,
                Check::Trapezoidal => poly.is_trapezoidal()?,
                Check::UltraLogConcave => {
                    let ulc = poly.is_ultra_log_concave()?;
                    if cfg.symmetric {
                        // the symmetric factorization must also hold exactly
                        let n = d.graph().vertex_count();
                        if poly.exact_div(&one_plus_t_pow(n - 1)).is_none() {
                            return Err(Error::inconsistency(format!(
                                "symmetric instance polynomial {poly} not divisible by (1+t)^{}",
                                n - 1
                            )));
                        }
                    }
                    ulc
                }
                Check::Palindromic => poly.is_palindromic(),
            };
            if !ok {
                failed.push(check.name().to_string());
            }
        }
        Ok(InstanceResult {
            index,
            vertices: d.graph().vertex_count(),
            edges: d.graph().edge_count(),
            coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
            failed_checks: failed,
        })
    };

    let results: Vec<Result<InstanceResult>> = if cfg.jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::input(format!("thread pool: {e}")))?;
        pool.install(|| {
            instances
                .par_iter()
                .enumerate()
                .map(evaluate)
                .collect()
        })
    } else {
        instances.iter().enumerate().map(evaluate).collect()
    };

    let mut pass_counts: Vec<(String, usize)> = cfg
        .checks
        .iter()
        .map(|c| (c.name().to_string(), 0usize))
        .collect();
    let mut violations = Vec::new();
    let mut entries = Vec::new();
    for r in results {
        entries.push(r?);
    }
    entries.sort_by_key(|e| e.index);
    for e in &entries {
        for (name, count) in pass_counts.iter_mut() {
            if !e.failed_checks.iter().any(|f| f == name) {
                *count += 1;
            }
        }
        for f in &e.failed_checks {
            violations.push(Violation {
                index: e.index,
                check: f.clone(),
                digraph: serialize_digraph(instances[e.index].graph(), None),
                coeffs: e.coeffs.clone(),
            });
        }
    }

    Ok(ScanReport {
        config: cfg.clone(),
        instances_checked: entries.len(),
        pass_counts,
        violations,
    })
}

impl ScanReport {
    /// Line-oriented text form; stable for byte-identical comparisons.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "scan: n={}..={} m={}..={} count={} seed={} symmetric={} exhaustive={}\n",
            self.config.n_range.0,
            self.config.n_range.1,
            self.config.m_range.0,
            self.config.m_range.1,
            self.config.count,
            self.config.seed,
            self.config.symmetric,
            self.config.exhaustive_small,
        ));
        s.push_str(&format!("instances checked: {}\n", self.instances_checked));
        for (name, count) in &self.pass_counts {
            s.push_str(&format!(
                "{name}: {count}/{} pass\n",
                self.instances_checked
            ));
        }
        if self.violations.is_empty() {
            s.push_str("violations: none\n");
        } else {
            s.push_str(&format!("violations: {}\n", self.violations.len()));
            for v in &self.violations {
                s.push_str(&format!(
                    "violation index={} check={} coeffs={:?}\n{}\n",
                    v.index, v.check, v.coeffs, v.digraph
                ));
            }
        }
        s
    }
}
