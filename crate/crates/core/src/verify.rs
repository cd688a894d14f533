//! Verification suites and avoidance-basis computation.
//!
//! Each suite exhaustively checks one structural fact over a bounded slice
//! of the symmetric groups and reports counterexamples instead of panicking,
//! so a failed run is inspectable. Suites iterate over independent
//! permutations and may fan out across threads; aggregation preserves
//! iteration order, so reports are deterministic regardless of thread count.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::graph::{is_hypercube, BruhatGraph, UndirectedGraph};
use crate::order::{bruhat_leq, bruhat_leq_oracle};
use crate::perm::{contains_pattern, Permutation};
use crate::planarity::{is_planar, kuratowski_oracle, random_graph_corpus, validate_witness};

/// Outcome of one verification suite. `passed` holds exactly when no
/// counterexample was recorded; counterexamples are one-line permutation
/// words, or short labels for suites ranging over named graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Vec<(String, usize)>,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl VerificationReport {
    fn new(suite: &str, params: &[(&str, usize)]) -> Self {
        Self {
            suite: suite.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            checked: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        if !self.params.is_empty() {
            let parts: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(f, "params: {}", parts.join(" "))?;
        }
        writeln!(f, "checked: {}", self.checked)?;
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })?;
        for c in self.counterexamples.iter().take(20) {
            write!(f, "\ncounterexample: {c}")?;
        }
        if self.counterexamples.len() > 20 {
            write!(f, "\n... and {} more", self.counterexamples.len() - 20)?;
        }
        Ok(())
    }
}

/// A minimal avoidance basis: the antichain of pattern-minimal permutations
/// with a given upward-closed "bad" property, searched up to `ceiling`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub property: String,
    pub ceiling: usize,
    pub candidates_examined: usize,
    /// Sorted by (size, word); an antichain under pattern containment.
    pub basis: Vec<Permutation>,
}

fn pattern_321() -> &'static Permutation {
    static P: OnceLock<Permutation> = OnceLock::new();
    P.get_or_init(|| Permutation::new(vec![3, 2, 1]).unwrap())
}

/// Constant-time planarity predicate for Bruhat graphs: `sigma` avoids 321
/// and has length at most 3. Its validity against the real planarity tester
/// is itself checked by [`verify_planar_characterization`].
pub fn planar_by_characterization(p: &Permutation) -> bool {
    p.coxeter_length() <= 3 && !contains_pattern(pattern_321(), p)
}

/// Minimal bad permutations of each size `1..=max_size`, in (size, lex)
/// order. `bad` must be monotone upward in pattern order: any permutation
/// containing a bad pattern is bad. A permutation joins the basis iff it is
/// bad and contains no smaller basis element.
pub fn compute_basis(
    property: &str,
    bad: impl Fn(&Permutation) -> bool + Sync,
    max_size: usize,
) -> BasisReport {
    let mut basis: Vec<Permutation> = Vec::new();
    let mut examined = 0usize;
    for m in 1..=max_size {
        let candidates: Vec<Permutation> = Permutation::all(m).collect();
        examined += candidates.len();
        // within one size, additions are independent: equal-size containment
        // is equality, so they cannot contain each other
        let additions: Vec<Permutation> = candidates
            .into_par_iter()
            .filter(|p| bad(p) && basis.iter().all(|b| !contains_pattern(b, p)))
            .collect();
        basis.extend(additions);
    }
    BasisReport {
        property: property.to_string(),
        ceiling: max_size,
        candidates_examined: examined,
        basis,
    }
}

/// The avoidance basis for non-planar Bruhat graphs: bad means "contains 321
/// or has length at least 4".
pub fn planar_basis(ceiling: usize) -> BasisReport {
    compute_basis(
        "planar",
        |p| p.coxeter_length() >= 4 || contains_pattern(pattern_321(), p),
        ceiling,
    )
}

/// The avoidance basis for the property `length < n`: bad means
/// `length >= n`. Basis elements all fit within size `2n`.
pub fn max_length_basis(n: usize, ceiling: usize) -> BasisReport {
    compute_basis(
        &format!("max-length:{n}"),
        |p| p.coxeter_length() >= n,
        ceiling,
    )
}

/// Checks, for every permutation of size at most `max_m`, that the Bruhat
/// graph is planar exactly when the permutation avoids 321 and has length at
/// most 3. Planarity is decided by the real tester on the built graph.
pub fn verify_planar_characterization(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("planar-char", &[("max_m", max_m)]);
    for m in 1..=max_m {
        let perms: Vec<Permutation> = Permutation::all(m).collect();
        report.checked += perms.len();
        report.counterexamples.extend(
            perms
                .par_iter()
                .filter(|sigma| {
                    let graph_planar =
                        is_planar(&BruhatGraph::build(sigma).underlying_undirected());
                    graph_planar != planar_by_characterization(sigma)
                })
                .map(|sigma| sigma.to_string())
                .collect::<Vec<_>>(),
        );
    }
    report
}

/// Checks that every planar Bruhat graph up to `max_m` is the edge graph of
/// a hypercube of dimension equal to the permutation's length, and that the
/// length is at most 3.
pub fn verify_cube_classification(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("cube-class", &[("max_m", max_m)]);
    for m in 1..=max_m {
        let perms: Vec<Permutation> = Permutation::all(m).collect();
        report.checked += perms.len();
        report.counterexamples.extend(
            perms
                .par_iter()
                .filter(|sigma| {
                    let g = BruhatGraph::build(sigma);
                    if !is_planar(&g.underlying_undirected()) {
                        return false;
                    }
                    let len = sigma.coxeter_length();
                    len > 3 || !is_hypercube(&g, len)
                })
                .map(|sigma| sigma.to_string())
                .collect::<Vec<_>>(),
        );
    }
    report
}

/// Checks the finite-basis property of bounded length: a permutation of any
/// size up to `max_m` has length at least `n` iff it contains a pattern of
/// size at most `2n` with length at least `n` (both directions). Uses the
/// computed basis as a witness accelerator.
pub fn verify_length_basis(n: usize, max_m: usize) -> VerificationReport {
    let basis = max_length_basis(n, 2 * n).basis;
    verify_length_basis_with(n, max_m, Some(&basis))
}

/// [`verify_length_basis`] with an explicit witness strategy: with a basis,
/// containment of a basis element is the witness; without one, a raw
/// subsequence search is the ground truth.
pub fn verify_length_basis_with(
    n: usize,
    max_m: usize,
    basis: Option<&[Permutation]>,
) -> VerificationReport {
    let mut report = VerificationReport::new("length-basis", &[("n", n), ("max_m", max_m)]);
    for m in 1..=max_m {
        let perms: Vec<Permutation> = Permutation::all(m).collect();
        report.checked += perms.len();
        report.counterexamples.extend(
            perms
                .par_iter()
                .filter(|sigma| {
                    let has_witness = match basis {
                        Some(basis) => basis.iter().any(|b| contains_pattern(b, sigma)),
                        None => contains_short_long_pattern(sigma, n),
                    };
                    has_witness != (sigma.coxeter_length() >= n)
                })
                .map(|sigma| sigma.to_string())
                .collect::<Vec<_>>(),
        );
    }
    report
}

/// Raw witness search: does `sigma` contain a pattern of size at most `2n`
/// with at least `n` inversions? Any witness extends to one of size exactly
/// `min(2n, m)`, so only subsets of that size are scanned.
fn contains_short_long_pattern(sigma: &Permutation, n: usize) -> bool {
    let m = sigma.size();
    let s = (2 * n).min(m);
    let word = sigma.word();
    let mut found = false;
    for_each_combination(m, s, &mut |idx| {
        let mut inversions = 0;
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                if word[idx[a]] > word[idx[b]] {
                    inversions += 1;
                }
            }
        }
        if inversions >= n {
            found = true;
        }
        found
    });
    found
}

/// Calls `stop` with each size-`k` subset of `0..m` in lexicographic order
/// until it returns true.
fn for_each_combination(m: usize, k: usize, stop: &mut impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return;
    }
    loop {
        if stop(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sharpness of the `2n` bound: the fixed-point-free involution
/// `2 1 4 3 ... (2n) (2n-1)` has length exactly `n` and every strictly
/// contained pattern has length below `n`.
pub fn verify_sharpness(n: usize) -> VerificationReport {
    assert!((1..=15).contains(&n), "sharpness scan is exponential in n");
    let mut report = VerificationReport::new("sharpness", &[("n", n)]);
    let word: Vec<u8> = (1..=n as u8).flat_map(|i| [2 * i, 2 * i - 1]).collect();
    let sigma = Permutation::new(word).unwrap();
    report.checked += 1;
    if sigma.coxeter_length() != n {
        report
            .counterexamples
            .push(format!("{sigma} has length {}", sigma.coxeter_length()));
    }
    let m = sigma.size();
    let full = (1u64 << m) - 1;
    for mask in 1..full {
        report.checked += 1;
        let positions: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let mut inversions = 0;
        for a in 0..positions.len() {
            for b in a + 1..positions.len() {
                if sigma.word()[positions[a]] > sigma.word()[positions[b]] {
                    inversions += 1;
                }
            }
        }
        if inversions >= n {
            report.counterexamples.push(format!(
                "{} strictly contained with length {inversions}",
                crate::perm::subsequence_pattern(
                    &sigma,
                    &positions.iter().map(|i| i + 1).collect::<Vec<_>>()
                )
            ));
        }
    }
    report
}

/// Empirical check of the three supporting lemmas on their hypothesis
/// classes, by exhaustive witness search:
///
/// - fixed-point: for `m > 2n` and `sigma` with a fixed point, `sigma` has
///   length at least `n` iff it strictly contains a pattern of length at
///   least `n`;
/// - cycle: every `m`-cycle contains a pattern of size `m - 1` with length
///   at least `m - 2`;
/// - disjoint cycles: for `m > 2n`, a fixed-point-free permutation with at
///   least two cycles contains a pattern of size at most `m - 2` with length
///   at least `n`.
pub fn verify_lemmas(n: usize, max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lemmas", &[("n", n), ("max_m", max_m)]);

    // inversions of sigma touching each position, for deletion arguments
    fn inversions_at(sigma: &Permutation) -> (usize, Vec<usize>) {
        let w = sigma.word();
        let mut total = 0;
        let mut at = vec![0usize; w.len()];
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    total += 1;
                    at[i] += 1;
                    at[j] += 1;
                }
            }
        }
        (total, at)
    }

    for m in 2 * n + 1..=max_m {
        for sigma in Permutation::all(m) {
            let has_fixed_point = (1..=m).any(|i| sigma.at(i) == i);
            if !has_fixed_point {
                continue;
            }
            report.checked += 1;
            // a witness of any size extends to one obtained by a single
            // deletion, so deletions are a complete search
            let (total, at) = inversions_at(&sigma);
            let strictly_contains = at.iter().any(|&a| total - a >= n);
            if strictly_contains != (total >= n) {
                report
                    .counterexamples
                    .push(format!("fixed-point lemma: {sigma}"));
            }
        }
    }

    for m in 2..=max_m {
        for sigma in Permutation::all(m) {
            let cycles = sigma.cycles();
            if cycles.len() != 1 || cycles[0].len() != m {
                continue;
            }
            report.checked += 1;
            let (total, at) = inversions_at(&sigma);
            if !at.iter().any(|&a| total - a >= m - 2) {
                report.counterexamples.push(format!("cycle lemma: {sigma}"));
            }
        }
    }

    for m in 2 * n + 1..=max_m {
        for sigma in Permutation::all(m) {
            let cycles = sigma.cycles();
            if cycles.len() < 2 || cycles.iter().any(|c| c.len() == 1) {
                continue;
            }
            report.checked += 1;
            // witnesses of size <= m - 2 extend to size exactly m - 2:
            // scan all double deletions
            let w = sigma.word();
            let mut found = false;
            'outer: for d1 in 0..m {
                for d2 in d1 + 1..m {
                    let mut inversions = 0;
                    for a in 0..m {
                        if a == d1 || a == d2 {
                            continue;
                        }
                        for b in a + 1..m {
                            if b == d1 || b == d2 {
                                continue;
                            }
                            if w[a] > w[b] {
                                inversions += 1;
                            }
                        }
                    }
                    if inversions >= n {
                        found = true;
                        break 'outer;
                    }
                }
            }
            if !found {
                report
                    .counterexamples
                    .push(format!("disjoint-cycles lemma: {sigma}"));
            }
        }
    }

    report
}

/// Closed-form count of permutations in `S_m` of the given length with a
/// planar Bruhat graph. Negative formula values (possible only where the
/// length is unattainable) are clamped to zero.
fn expected_planar_count(m: usize, length: usize) -> usize {
    let m = m as i64;
    let value = match length {
        0 => 1,
        1 => m - 1,
        2 => (m + 1) * (m - 2) / 2,
        3 => (m + 4) * (m - 1) * (m - 3) / 6,
        _ => 0,
    };
    value.max(0) as usize
}

/// Checks the closed-form counts of planar-Bruhat-graph permutations by
/// length (0 through 3) against exhaustive enumeration for every `m` up to
/// `max_m`.
pub fn verify_counts(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("counts", &[("max_m", max_m)]);
    for m in 1..=max_m {
        let perms: Vec<Permutation> = Permutation::all(m).collect();
        report.checked += perms.len();
        let counted: [usize; 4] = perms
            .par_iter()
            .fold(
                || [0usize; 4],
                |mut acc, sigma| {
                    let len = sigma.coxeter_length();
                    if len <= 3 && planar_by_characterization(sigma) {
                        acc[len] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || [0usize; 4],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        for (length, &got) in counted.iter().enumerate() {
            let want = expected_planar_count(m, length);
            if got != want {
                report.counterexamples.push(format!(
                    "m={m} length={length}: counted {got}, formula {want}"
                ));
            }
        }
    }
    report
}

/// Cross-checks the rank-matrix Bruhat comparison against the
/// transitive-closure search on every ordered pair of permutations of each
/// size up to `max_m`.
pub fn verify_bruhat_oracle(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("bruhat-oracle", &[("max_m", max_m)]);
    for m in 1..=max_m {
        let perms: Vec<Permutation> = Permutation::all(m).collect();
        report.checked += perms.len() * perms.len();
        report.counterexamples.extend(
            perms
                .par_iter()
                .flat_map_iter(|u| {
                    perms.iter().filter_map(move |v| {
                        let fast = bruhat_leq(u, v).unwrap();
                        let slow = bruhat_leq_oracle(u, v).unwrap();
                        (fast != slow).then(|| format!("{u} vs {v}"))
                    })
                })
                .collect::<Vec<_>>(),
        );
    }
    report
}

/// The designated corpus for planarity cross-checking: Bruhat graphs of all
/// permutations of size `max_bruhat`, complete graphs through `K_6`,
/// complete bipartite graphs through `K_{4,4}`, hypercubes through `Q_4`,
/// and fifty deterministic random graphs on at most 8 vertices.
pub fn planarity_corpus(max_bruhat: usize) -> Vec<(String, UndirectedGraph)> {
    let mut corpus = Vec::new();
    for sigma in Permutation::all(max_bruhat) {
        corpus.push((
            format!("B({sigma})"),
            BruhatGraph::build(&sigma).underlying_undirected(),
        ));
    }
    for n in 1..=6 {
        corpus.push((format!("K{n}"), UndirectedGraph::complete(n)));
    }
    for a in 1..=4 {
        for b in a..=4 {
            corpus.push((
                format!("K{a}x{b}"),
                UndirectedGraph::complete_bipartite(a, b),
            ));
        }
    }
    for dim in 0..=4 {
        corpus.push((format!("Q{dim}"), UndirectedGraph::hypercube(dim)));
    }
    for (i, g) in random_graph_corpus(50, 8).into_iter().enumerate() {
        corpus.push((format!("rand{i}"), g));
    }
    corpus
}

/// Runs the left-right planarity test and the Kuratowski-subdivision oracle
/// over [`planarity_corpus`] and reports every disagreement (or oracle
/// failure). Witnesses returned by the oracle are validated against their
/// graphs.
pub fn verify_planarity_oracle(max_bruhat: usize) -> VerificationReport {
    let mut report = VerificationReport::new("planarity-oracle", &[("max_bruhat", max_bruhat)]);
    let corpus = planarity_corpus(max_bruhat);
    report.checked = corpus.len();
    report.counterexamples = corpus
        .par_iter()
        .filter_map(|(label, g)| {
            let fast = is_planar(g);
            match kuratowski_oracle(g) {
                Ok(verdict) => {
                    if let Some(w) = &verdict.witness {
                        if !validate_witness(g, w) {
                            return Some(format!("{label}: invalid witness"));
                        }
                    }
                    (fast != verdict.planar)
                        .then(|| format!("{label}: left-right {fast}, oracle {}", verdict.planar))
                }
                Err(e) => Some(format!("{label}: {e}")),
            }
        })
        .collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::avoids_all;
    use crate::planarity::splitmix64;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn words(perms: &[Permutation]) -> Vec<String> {
        perms.iter().map(|q| q.to_string()).collect()
    }

    #[test]
    fn characterization_examples() {
        assert!(planar_by_characterization(&p("214365")));
        assert!(!planar_by_characterization(&p("321")));
        assert!(planar_by_characterization(&Permutation::identity(7)));
        assert!(!planar_by_characterization(&p("3412")));
    }

    #[test]
    fn planar_characterization_small() {
        let r3 = verify_planar_characterization(3);
        assert!(r3.passed());
        assert_eq!(r3.checked, 9);
        let r5 = verify_planar_characterization(5);
        assert!(r5.passed());
        assert_eq!(r5.checked, 153);
    }

    #[test]
    fn cube_classification_small() {
        let r = verify_cube_classification(5);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 153);
    }

    #[test]
    fn basis_examples() {
        let single = max_length_basis(1, 2);
        assert_eq!(words(&single.basis), vec!["21"]);
        assert_eq!(single.candidates_examined, 3);

        let quad = max_length_basis(2, 4);
        assert_eq!(words(&quad.basis), vec!["231", "312", "321", "2143"]);
    }

    #[test]
    fn basis_is_an_antichain() {
        let report = planar_basis(6);
        assert_eq!(report.basis.len(), 22);
        assert_eq!(report.basis[0], p("321"));
        assert_eq!(report.basis[1], p("3412"));
        for a in &report.basis {
            for b in &report.basis {
                if a != b {
                    assert!(!contains_pattern(a, b), "{a} contained in {b}");
                }
            }
        }
    }

    #[test]
    fn basis_characterizes_badness_up_to_ceiling() {
        // bad iff containing a basis element, for everything searched
        let report = max_length_basis(2, 4);
        for m in 1..=4 {
            for sigma in Permutation::all(m) {
                let bad = sigma.coxeter_length() >= 2;
                let hits = !avoids_all(&sigma, &report.basis);
                assert_eq!(bad, hits, "{sigma}");
            }
        }
    }

    #[test]
    fn length_basis_small() {
        assert!(verify_length_basis(1, 4).passed());
        let r = verify_length_basis(2, 5);
        assert!(r.passed());
        assert_eq!(r.checked, 153);
    }

    #[test]
    fn length_basis_raw_fallback_agrees() {
        for n in 1..=2 {
            let with_basis = verify_length_basis(n, 5);
            let raw = verify_length_basis_with(n, 5, None);
            assert!(with_basis.passed());
            assert!(raw.passed());
            assert_eq!(with_basis.checked, raw.checked);
        }
    }

    #[test]
    fn sharpness_small() {
        for n in 1..=4 {
            let r = verify_sharpness(n);
            assert!(r.passed(), "{r}");
            assert_eq!(r.checked, (1usize << (2 * n)) - 1);
        }
    }

    #[test]
    fn lemmas_small() {
        let r = verify_lemmas(2, 5);
        assert!(r.passed(), "{r}");
        // hypothesis classes at m = 5: 76 with a fixed point, 24 cycles of
        // each size 2..5 sum to 33, and 20 products of disjoint cycles
        assert_eq!(r.checked, 76 + (1 + 2 + 6 + 24) + 20);
    }

    #[test]
    fn counts_examples() {
        assert_eq!(expected_planar_count(4, 2), 5);
        assert_eq!(expected_planar_count(5, 3), 12);
        assert_eq!(expected_planar_count(3, 3), 0);
        assert_eq!(expected_planar_count(1, 2), 0);
        assert_eq!(expected_planar_count(2, 3), 0);
        let r = verify_counts(7);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn bruhat_oracle_small() {
        let r = verify_bruhat_oracle(4);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 1 + 4 + 36 + 576);
    }

    #[test]
    fn planarity_oracle_small() {
        let r = verify_planarity_oracle(3);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn bad_predicates_are_monotone() {
        let perms: Vec<Permutation> = (1..=5).flat_map(Permutation::all).collect();
        let planar_bad =
            |q: &Permutation| q.coxeter_length() >= 4 || contains_pattern(pattern_321(), q);
        let length_bad = |q: &Permutation| q.coxeter_length() >= 2;
        for pi in &perms {
            for tau in &perms {
                if contains_pattern(pi, tau) {
                    if planar_bad(pi) {
                        assert!(planar_bad(tau), "{pi} in {tau}");
                    }
                    if length_bad(pi) {
                        assert!(length_bad(tau), "{pi} in {tau}");
                    }
                }
            }
        }
    }

    #[test]
    fn planar_basis_matches_characterization_on_samples() {
        let basis = planar_basis(8).basis;
        assert_eq!(basis.len(), 29);
        // exhaustive up to the ceiling
        for m in 1..=8 {
            for sigma in Permutation::all(m) {
                let bad = !planar_by_characterization(&sigma);
                assert_eq!(bad, !avoids_all(&sigma, &basis), "{sigma}");
            }
        }
        // seeded random samples from S_9 and S_10
        let mut state = 0x5eed_cafe_f00du64;
        for m in [9usize, 10] {
            for _ in 0..1000 {
                let mut word: Vec<u8> = (1..=m as u8).collect();
                for i in (1..m).rev() {
                    let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
                    word.swap(i, j);
                }
                let sigma = Permutation::new(word).unwrap();
                let bad = !planar_by_characterization(&sigma);
                assert_eq!(bad, !avoids_all(&sigma, &basis), "{sigma}");
            }
        }
    }

    #[test]
    fn report_display_is_stable() {
        let r = verify_planar_characterization(3);
        let text = format!("{r}");
        assert!(text.contains("suite: planar-char"));
        assert!(text.contains("checked: 9"));
        assert!(text.ends_with("result: pass"));
    }
}
