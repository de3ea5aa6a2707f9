//! Exhaustive and seeded-random verification checks.
//!
//! Every check enumerates its instances, evaluates them on a rayon pool
//! of the requested size, and collects results in enumeration order, so a
//! report depends only on the check, `n` and the seed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;
use ucat_core::factor::exhaustive_irreducible_factorizations;
use ucat_core::{
    caterpillar_view, compositions_of, enumerate_free_trees, enumerate_proper_caterpillars,
    irreducible_factorization, l_polynomial, normalize_triple, phi,
    proper_caterpillar_compositions, psi, sym_class, u_polynomial_bruteforce, u_polynomial_tree,
    u_restricted, witness_theorem, Composition, PartitionPolynomial, Tree, FREE_TREE_COUNTS,
    MAX_FREE_TREE_ORDER,
};

/// Environment variable raising every check's cap on `n`.
pub const CAP_ENV_VAR: &str = "UCAT_MAX_N";

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Random trees drawn by [`Check::FastVsBruteforce`].
pub const RANDOM_TREE_SAMPLES: usize = 500;
/// Vertex range of those random trees.
pub const RANDOM_TREE_ORDERS: (u32, u32) = (10, 15);
/// Triples drawn by [`Check::WitnessRandom`].
pub const WITNESS_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    SymEqualsLclass,
    PalindromesUnique,
    Factorization,
    UlEqualsL,
    X1Proposition,
    MainResult,
    StanleyTrees,
    CorollaryLImpliesU,
    FastVsBruteforce,
    WitnessRandom,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::SymEqualsLclass,
        Check::PalindromesUnique,
        Check::Factorization,
        Check::UlEqualsL,
        Check::X1Proposition,
        Check::MainResult,
        Check::StanleyTrees,
        Check::CorollaryLImpliesU,
        Check::FastVsBruteforce,
        Check::WitnessRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SymEqualsLclass => "sym-equals-lclass",
            Check::PalindromesUnique => "palindromes-unique",
            Check::Factorization => "factorization",
            Check::UlEqualsL => "ul-equals-l",
            Check::X1Proposition => "x1-proposition",
            Check::MainResult => "main-result",
            Check::StanleyTrees => "stanley-trees",
            Check::CorollaryLImpliesU => "corollary-l-implies-u",
            Check::FastVsBruteforce => "fast-vs-bruteforce",
            Check::WitnessRandom => "witness-random",
        }
    }

    /// Largest `n` run without an explicit override.
    pub fn default_cap(self) -> u32 {
        match self {
            Check::SymEqualsLclass | Check::PalindromesUnique | Check::Factorization => 14,
            Check::UlEqualsL => 16,
            Check::X1Proposition => 12,
            Check::MainResult => 20,
            Check::StanleyTrees | Check::CorollaryLImpliesU => 14,
            Check::FastVsBruteforce => 9,
            Check::WitnessRandom => 30,
        }
    }

    /// Largest `n` the implementation supports at all.
    pub fn hard_limit(self) -> u32 {
        match self {
            Check::X1Proposition
            | Check::UlEqualsL
            | Check::StanleyTrees
            | Check::CorollaryLImpliesU
            | Check::FastVsBruteforce => MAX_FREE_TREE_ORDER,
            Check::SymEqualsLclass | Check::PalindromesUnique | Check::Factorization => 24,
            Check::MainResult => 40,
            Check::WitnessRandom => 60,
        }
    }

    pub fn min_n(self) -> u32 {
        match self {
            Check::WitnessRandom => 4,
            _ => 1,
        }
    }

    pub fn is_seeded(self) -> bool {
        matches!(self, Check::FastVsBruteforce | Check::WitnessRandom)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().replace('_', "-");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{check}: n = {n} is below the minimum {min}")]
    BelowMinimum { check: Check, n: u32, min: u32 },
    #[error("{check}: n = {n} exceeds the cap {cap}; raise it with --max-n or {CAP_ENV_VAR}")]
    AboveCap { check: Check, n: u32, cap: u32 },
    #[error("{check}: n = {n} exceeds the supported maximum {limit}")]
    AboveHardLimit { check: Check, n: u32, limit: u32 },
    #[error("invalid {CAP_ENV_VAR} value {0:?}")]
    BadCapVariable(String),
    #[error("jobs must be at least 1")]
    ZeroJobs,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub jobs: usize,
    pub seed: u64,
    /// Raises the cap on `n`; falls back to [`CAP_ENV_VAR`].
    pub cap_override: Option<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            jobs: 1,
            seed: DEFAULT_SEED,
            cap_override: None,
        }
    }
}

/// Outcome of one check. Only `elapsed` varies between identical runs;
/// it is left out of [`text`](Self::text) and of the JSON form.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub parameter_n: u32,
    pub instances_checked: u64,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "check: {}\nn: {}\ninstances: {}\nfailures: {}\n",
            self.check_name,
            self.parameter_n,
            self.instances_checked,
            self.failures.len()
        );
        if let Some(seed) = self.seed {
            s.push_str(&format!("seed: {seed}\n"));
        }
        for f in &self.failures {
            s.push_str(&format!("failure: {f}\n"));
        }
        s.push_str(if self.passed() {
            "status: PASS\n"
        } else {
            "status: FAIL\n"
        });
        s
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Validates `n` for `check`. Returns a cost warning when `n` is above the
/// default cap but allowed by an override.
pub fn admit(
    check: Check,
    n: u32,
    cap_override: Option<u32>,
) -> Result<Option<String>, VerifyError> {
    if n < check.min_n() {
        return Err(VerifyError::BelowMinimum {
            check,
            n,
            min: check.min_n(),
        });
    }
    if n > check.hard_limit() {
        return Err(VerifyError::AboveHardLimit {
            check,
            n,
            limit: check.hard_limit(),
        });
    }
    let cap = match cap_override {
        Some(c) => c,
        None => match std::env::var(CAP_ENV_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| VerifyError::BadCapVariable(v))?,
            Err(_) => check.default_cap(),
        },
    };
    if n > cap.max(check.default_cap()) {
        return Err(VerifyError::AboveCap { check, n, cap });
    }
    if n > check.default_cap() {
        return Ok(Some(format!(
            "{check}: n = {n} is above the default cap {}; cost grows exponentially in n",
            check.default_cap()
        )));
    }
    Ok(None)
}

pub fn run_check(
    check: Check,
    n: u32,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    if let Some(warning) = admit(check, n, config.cap_override)? {
        log::warn!("{warning}");
    }
    if config.jobs == 0 {
        return Err(VerifyError::ZeroJobs);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let start = Instant::now();
    let (instances, failures) = pool.install(|| match check {
        Check::SymEqualsLclass => sym_equals_lclass(n),
        Check::PalindromesUnique => palindromes_unique(n),
        Check::Factorization => factorization(n),
        Check::UlEqualsL => ul_equals_l(n),
        Check::X1Proposition => x1_proposition(n),
        Check::MainResult => main_result(n),
        Check::StanleyTrees => stanley_trees(n),
        Check::CorollaryLImpliesU => corollary_l_implies_u(n),
        Check::FastVsBruteforce => fast_vs_bruteforce(n, config.seed),
        Check::WitnessRandom => witness_random(n, config.seed),
    });
    Ok(VerificationReport {
        check_name: check.name().to_string(),
        parameter_n: n,
        instances_checked: instances,
        failures,
        seed: check.is_seeded().then_some(config.seed),
        elapsed: start.elapsed(),
    })
}

type Outcome = (u64, Vec<String>);

fn collect_failures(results: Vec<Option<String>>) -> Outcome {
    let instances = results.len() as u64;
    (instances, results.into_iter().flatten().collect())
}

/// All compositions of `n`, grouped by L-polynomial.
fn l_classes(n: u32) -> (Vec<Composition>, Vec<usize>, Vec<BTreeSet<Composition>>) {
    let all = compositions_of(n, 1);
    let polys: Vec<PartitionPolynomial> = all.par_iter().map(l_polynomial).collect();
    let mut class_of_poly: HashMap<&PartitionPolynomial, usize> = HashMap::new();
    let mut classes: Vec<BTreeSet<Composition>> = Vec::new();
    let mut class_index = Vec::with_capacity(all.len());
    for (beta, poly) in all.iter().zip(&polys) {
        let next = classes.len();
        let idx = *class_of_poly.entry(poly).or_insert(next);
        if idx == next {
            classes.push(BTreeSet::new());
        }
        classes[idx].insert(beta.clone());
        class_index.push(idx);
    }
    (all, class_index, classes)
}

fn show_set(set: &BTreeSet<Composition>) -> String {
    let items: Vec<String> = set.iter().map(|c| format!("({c})")).collect();
    format!("{{{}}}", items.join(" "))
}

fn sym_equals_lclass(n: u32) -> Outcome {
    let (all, class_index, classes) = l_classes(n);
    let results = all
        .par_iter()
        .zip(class_index.par_iter())
        .map(|(beta, &idx)| {
            let sym = sym_class(beta);
            (sym != classes[idx]).then(|| {
                format!(
                    "({beta}): Sym = {} but L-class = {}",
                    show_set(&sym),
                    show_set(&classes[idx])
                )
            })
        })
        .collect();
    collect_failures(results)
}

fn palindromes_unique(n: u32) -> Outcome {
    let (all, class_index, classes) = l_classes(n);
    let results = all
        .iter()
        .zip(&class_index)
        .filter(|(beta, _)| beta.is_palindrome())
        .map(|(beta, &idx)| {
            (classes[idx].len() != 1)
                .then(|| format!("({beta}): L-class = {}", show_set(&classes[idx])))
        })
        .collect();
    collect_failures(results)
}

fn factorization(n: u32) -> Outcome {
    let all = compositions_of(n, 1);
    let results = all
        .par_iter()
        .map(|beta| {
            let ours = irreducible_factorization(beta);
            if ours.recompose() != *beta {
                return Some(format!(
                    "({beta}): factors {ours} recompose to ({})",
                    ours.recompose()
                ));
            }
            let found = exhaustive_irreducible_factorizations(beta);
            (found != [ours.factors().to_vec()]).then(|| {
                format!(
                    "({beta}): exhaustive search found {} factorizations, ours is {ours}",
                    found.len()
                )
            })
        })
        .collect();
    collect_failures(results)
}

fn free_trees(n: u32) -> Vec<Tree> {
    enumerate_free_trees(n).expect("n admitted").collect()
}

fn ul_equals_l(n: u32) -> Outcome {
    if n < 4 {
        return (0, Vec::new());
    }
    let trees = free_trees(n);
    let results: Vec<Option<(Composition, Option<String>)>> = trees
        .par_iter()
        .map(|t| {
            let view = caterpillar_view(t).ok()?;
            if !view.is_proper() {
                return None;
            }
            let beta = phi(t).expect("proper caterpillar");
            let ul = u_restricted(t).expect("caterpillar");
            let l = l_polynomial(&beta);
            let failure = (ul != l).then(|| format!("({beta}): U^L = {ul} but L = {l}"));
            Some((beta, failure))
        })
        .collect();
    let checked: Vec<_> = results.into_iter().flatten().collect();
    let mut failures: Vec<String> = checked.iter().filter_map(|(_, f)| f.clone()).collect();
    let images: BTreeSet<&Composition> = checked.iter().map(|(b, _)| b).collect();
    let expected = proper_caterpillar_compositions(n);
    if images.len() != checked.len() || images.into_iter().ne(expected.iter()) {
        failures.push(format!(
            "Φ images of the {} proper caterpillars are not the {} reverse-class representatives",
            checked.len(),
            expected.len()
        ));
    }
    (checked.len() as u64, failures)
}

fn x1_proposition(n: u32) -> Outcome {
    let trees = free_trees(n);
    let results: Vec<Option<Option<String>>> = trees
        .par_iter()
        .map(|t| {
            let view = caterpillar_view(t).ok()?;
            let ul = u_restricted(t).expect("caterpillar");
            let u = u_polynomial_tree(t);
            let blocks = view.block_sizes();
            if u.drop_part_one() != ul.drop_part_one() {
                return Some(Some(format!(
                    "caterpillar with blocks ({blocks}): U and U^L differ away from part 1"
                )));
            }
            if view.is_proper() && ul.terms().any(|(lambda, _)| lambda.contains_part(1)) {
                return Some(Some(format!(
                    "proper caterpillar ({blocks}): U^L has a part-1 term"
                )));
            }
            Some(None)
        })
        .collect();
    let checked: Vec<Option<String>> = results.into_iter().flatten().collect();
    collect_failures(checked)
}

/// Groups `(label, polynomial)` pairs by canonical string, confirming each
/// shared key by full equality.
fn collisions(items: &[(String, PartitionPolynomial)]) -> Vec<String> {
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, (_, poly)) in items.iter().enumerate() {
        buckets.entry(poly.canonical_string()).or_default().push(i);
    }
    let mut failures = Vec::new();
    for members in buckets.values() {
        if members.len() < 2 {
            continue;
        }
        let first = &items[members[0]].1;
        let labels: Vec<&str> = members.iter().map(|&i| items[i].0.as_str()).collect();
        if members.iter().all(|&i| items[i].1 == *first) {
            failures.push(format!("equal U-polynomials: {}", labels.join(" ")));
        } else {
            failures.push(format!(
                "canonical strings agree but polynomials differ: {}",
                labels.join(" ")
            ));
        }
    }
    failures
}

fn main_result(n: u32) -> Outcome {
    let betas = proper_caterpillar_compositions(n);
    let trees = enumerate_proper_caterpillars(n);
    let items: Vec<(String, PartitionPolynomial)> = betas
        .par_iter()
        .zip(trees.par_iter())
        .map(|(beta, t)| (format!("({beta})"), u_polynomial_tree(t)))
        .collect();
    (items.len() as u64, collisions(&items))
}

fn stanley_trees(n: u32) -> Outcome {
    let trees = free_trees(n);
    let items: Vec<(String, PartitionPolynomial)> = trees
        .par_iter()
        .map(|t| (t.canonical_code().into_string(), u_polynomial_tree(t)))
        .collect();
    let mut failures = collisions(&items);
    let expected = FREE_TREE_COUNTS[n as usize - 1];
    if trees.len() as u64 != expected {
        failures.push(format!(
            "generated {} classes, expected {expected}",
            trees.len()
        ));
    }
    let codes: BTreeSet<&str> = items.iter().map(|(c, _)| c.as_str()).collect();
    if codes.len() != items.len() {
        failures.push(format!(
            "generator produced {} duplicate trees",
            items.len() - codes.len()
        ));
    }
    (items.len() as u64, failures)
}

fn corollary_l_implies_u(n: u32) -> Outcome {
    if n < 4 {
        return (0, Vec::new());
    }
    let (all, class_index, classes) = l_classes(n);
    let l_unique: Vec<&Composition> = all
        .iter()
        .zip(&class_index)
        .filter(|(beta, &idx)| {
            beta.is_proper()
                && beta.len() >= 2
                && classes[idx]
                    .iter()
                    .all(|c| c == *beta || *c == beta.reverse())
        })
        .map(|(beta, _)| beta)
        .collect();
    let trees = free_trees(n);
    let tree_polys: Vec<(String, PartitionPolynomial)> = trees
        .par_iter()
        .map(|t| (t.canonical_code().into_string(), u_polynomial_tree(t)))
        .collect();
    let results = l_unique
        .par_iter()
        .map(|beta| {
            let t = psi(beta).expect("proper, length >= 2");
            let code = t.canonical_code().into_string();
            let u = u_polynomial_tree(&t);
            let rivals: Vec<&str> = tree_polys
                .iter()
                .filter(|(c, p)| *c != code && *p == u)
                .map(|(c, _)| c.as_str())
                .collect();
            (!rivals.is_empty())
                .then(|| format!("({beta}): U shared with trees {}", rivals.join(" ")))
        })
        .collect();
    collect_failures(results)
}

/// A uniformly random labeled tree on `n` vertices.
pub fn random_tree(rng: &mut ChaCha8Rng, n: u32) -> Tree {
    let seq: Vec<u32> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    Tree::from_prufer(&seq).expect("Prüfer sequences decode to trees")
}

fn fast_vs_bruteforce(n: u32, seed: u64) -> Outcome {
    let mut trees: Vec<Tree> = (1..=n).flat_map(free_trees).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = RANDOM_TREE_ORDERS;
    for _ in 0..RANDOM_TREE_SAMPLES {
        let order = rng.gen_range(lo..=hi);
        trees.push(random_tree(&mut rng, order));
    }
    let results = trees
        .par_iter()
        .map(|t| {
            let fast = u_polynomial_tree(t);
            let slow = u_polynomial_bruteforce(&t.to_graph()).expect("at most 14 edges");
            (slow.max_y_exponent() != 0 || fast != slow.x_part()).then(|| {
                format!(
                    "tree {}: fast {} vs brute force {}",
                    crate::edgelist::render_edge_list(t)
                        .trim_end()
                        .replace('\n', ","),
                    fast,
                    slow
                )
            })
        })
        .collect();
    collect_failures(results)
}

fn random_composition(rng: &mut ChaCha8Rng, size: u32) -> Composition {
    let mut parts = vec![1u32];
    for _ in 1..size {
        if rng.gen_bool(0.5) {
            parts.push(1);
        } else {
            *parts.last_mut().unwrap() += 1;
        }
    }
    Composition::new(parts).expect("positive parts")
}

/// Draws a triple satisfying the witness hypotheses with |α∘γ| ≤ `max_size`.
pub fn random_witness_triple(
    rng: &mut ChaCha8Rng,
    max_size: u32,
) -> (Composition, Composition, Composition) {
    loop {
        let g = rng.gen_range(2..=max_size / 2);
        let m = rng.gen_range(2..=max_size / g);
        let gamma = random_composition(rng, g);
        let alpha = random_composition(rng, m);
        let beta = random_composition(rng, m);
        if gamma.is_palindrome()
            || alpha == beta
            || !alpha.circ(&gamma).is_proper()
            || !beta.circ(&gamma).is_proper()
        {
            continue;
        }
        return normalize_triple(&alpha, &beta, &gamma);
    }
}

fn witness_random(n: u32, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<_> = (0..WITNESS_SAMPLES)
        .map(|_| random_witness_triple(&mut rng, n))
        .collect();
    let results = triples
        .par_iter()
        .map(|(alpha, beta, gamma)| {
            let label = format!("alpha=({alpha}) beta=({beta}) gamma=({gamma})");
            match witness_theorem(alpha, beta, gamma) {
                Err(e) => Some(format!("{label}: {e}")),
                Ok(w) => {
                    let leaf_step = w.rho2.leaf_functional() == w.rho1.leaf_functional() + 1;
                    (!leaf_step || w.coeff_s == w.coeff_t).then(|| {
                        format!(
                            "{label}: coefficients {} and {}, N(rho1) = {}, N(rho2) = {}",
                            w.coeff_s,
                            w.coeff_t,
                            w.rho1.leaf_functional(),
                            w.rho2.leaf_functional()
                        )
                    })
                }
            }
        })
        .collect();
    collect_failures(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(check: Check, n: u32) -> VerificationReport {
        run_check(check, n, &VerifyConfig::default()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!("main_result".parse::<Check>().unwrap(), Check::MainResult);
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        assert_eq!(run(Check::SymEqualsLclass, 4).instances_checked, 8);
        assert_eq!(run(Check::SymEqualsLclass, 1).instances_checked, 1);
        assert_eq!(run(Check::PalindromesUnique, 4).instances_checked, 4);
        assert_eq!(run(Check::UlEqualsL, 4).instances_checked, 1);
        assert_eq!(run(Check::MainResult, 4).instances_checked, 1);
        assert_eq!(run(Check::StanleyTrees, 8).instances_checked, 23);
        assert_eq!(run(Check::StanleyTrees, 2).instances_checked, 1);
        assert!(run(Check::CorollaryLImpliesU, 6).passed());
        assert!(run(Check::X1Proposition, 7).passed());
        assert!(run(Check::Factorization, 8).passed());
    }

    #[test]
    fn caps() {
        assert!(matches!(
            admit(Check::X1Proposition, 13, None),
            Err(VerifyError::AboveCap { .. })
        ));
        assert!(admit(Check::X1Proposition, 13, Some(13)).unwrap().is_some());
        assert!(admit(Check::X1Proposition, 12, None).unwrap().is_none());
        assert!(matches!(
            admit(Check::StanleyTrees, 21, Some(30)),
            Err(VerifyError::AboveHardLimit { .. })
        ));
        assert!(admit(Check::SymEqualsLclass, 0, None).is_err());
    }

    #[test]
    fn report_text_is_deterministic() {
        let a = run(Check::WitnessRandom, 20);
        let b = run(Check::WitnessRandom, 20);
        assert!(a.passed(), "{}", a.text());
        assert_eq!(a.text(), b.text());
        assert_eq!(a.json(), b.json());
        assert!(a.text().contains("seed: "));
        assert!(!a.json().contains("elapsed"));
    }

    #[test]
    fn random_triples_meet_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (a, b, g) = random_witness_triple(&mut rng, 30);
            assert!(a.circ(&g).size() <= 30);
            assert!(a < b && g < g.reverse());
        }
    }
}
