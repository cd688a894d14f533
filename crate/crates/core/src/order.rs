//! Bruhat order on the symmetric group.
//!
//! `u < v` holds when some chain of length-increasing transposition
//! multiplications leads from `u` up to `v`. Comparison is implemented with
//! the classical rank-matrix dominance criterion; a direct transitive-closure
//! search ([`bruhat_leq_oracle`]) is kept alongside it as an independent
//! cross-check for small sizes.

use std::collections::{HashSet, VecDeque};

use crate::perm::{all_transpositions, Permutation};
use crate::{Error, Result};

/// True iff `u <= v` in Bruhat order, via rank-matrix dominance:
/// `u <= v` iff for all `(i, j)`, `#{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j}`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    check_sizes(u, v)?;
    Ok(leq_by_dominance(u, v))
}

pub(crate) fn leq_by_dominance(u: &Permutation, v: &Permutation) -> bool {
    let n = u.size();
    let mut count_u = vec![0u16; n + 1];
    let mut count_v = vec![0u16; n + 1];
    for i in 0..n {
        for c in count_u.iter_mut().take(u.word()[i] as usize + 1).skip(1) {
            *c += 1;
        }
        for c in count_v.iter_mut().take(v.word()[i] as usize + 1).skip(1) {
            *c += 1;
        }
        if count_u.iter().zip(&count_v).any(|(&cu, &cv)| cu > cv) {
            return false;
        }
    }
    true
}

/// Transitive-closure oracle: breadth-first search upward from `u` through
/// length-increasing transposition steps, looking for `v`. Exponential in
/// spirit; intended for sizes up to about 6.
pub fn bruhat_leq_oracle(u: &Permutation, v: &Permutation) -> Result<bool> {
    check_sizes(u, v)?;
    if u == v {
        return Ok(true);
    }
    let n = u.size();
    let target_len = v.coxeter_length();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue: VecDeque<(Permutation, usize)> = VecDeque::new();
    let start_len = u.coxeter_length();
    seen.insert(u.clone());
    queue.push_back((u.clone(), start_len));
    while let Some((x, len_x)) = queue.pop_front() {
        for t in all_transpositions(n) {
            let y = x.apply_unchecked(t);
            let len_y = y.coxeter_length();
            if len_y <= len_x || len_y > target_len {
                continue;
            }
            if y == *v {
                return Ok(true);
            }
            if seen.insert(y.clone()) {
                queue.push_back((y, len_y));
            }
        }
    }
    Ok(false)
}

/// The lower interval `{x : x <= sigma}`, sorted by (length, word).
/// Always contains the identity and `sigma`.
pub fn lower_interval(sigma: &Permutation) -> Vec<Permutation> {
    lower_interval_capped(sigma, usize::MAX).expect("uncapped")
}

/// Like [`lower_interval`] but fails once more than `cap` elements are found.
///
/// Downward closure: every element of the interval is reachable from `sigma`
/// by length-decreasing transposition steps, so a search applying all
/// transpositions and keeping strict length drops visits exactly the
/// interval.
pub fn lower_interval_capped(sigma: &Permutation, cap: usize) -> Result<Vec<Permutation>> {
    let n = sigma.size();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut stack: Vec<(Permutation, usize)> = Vec::new();
    seen.insert(sigma.clone());
    if seen.len() > cap {
        return Err(Error::IntervalCapExceeded { cap });
    }
    stack.push((sigma.clone(), sigma.coxeter_length()));
    while let Some((x, len_x)) = stack.pop() {
        for t in all_transpositions(n) {
            let y = x.apply_unchecked(t);
            let len_y = y.coxeter_length();
            if len_y >= len_x || seen.contains(&y) {
                continue;
            }
            if seen.len() == cap {
                return Err(Error::IntervalCapExceeded { cap });
            }
            seen.insert(y.clone());
            stack.push((y, len_y));
        }
    }
    let mut interval: Vec<Permutation> = seen.into_iter().collect();
    interval.sort_by_cached_key(|p| (p.coxeter_length(), p.word().to_vec()));
    Ok(interval)
}

fn check_sizes(u: &Permutation, v: &Permutation) -> Result<()> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch {
            left: u.size(),
            right: v.size(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn comparison_examples() {
        assert!(bruhat_leq(&p("1432"), &p("3412")).unwrap());
        assert!(bruhat_leq_oracle(&p("1432"), &p("3412")).unwrap());
        assert!(bruhat_leq(&p("2143"), &p("2143")).unwrap());
        assert!(!bruhat_leq(&p("2143"), &p("1234")).unwrap());
        assert!(bruhat_leq_oracle(&p("123"), &p("321")).unwrap());
        assert!(!bruhat_leq_oracle(&p("213"), &p("132")).unwrap());
        assert!(!bruhat_leq(&p("213"), &p("132")).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            bruhat_leq(&p("21"), &p("321")),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            bruhat_leq_oracle(&p("21"), &p("321")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dominance_agrees_with_oracle_up_to_s4() {
        for n in 1..=4 {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            for u in &perms {
                for v in &perms {
                    assert_eq!(
                        bruhat_leq(u, v).unwrap(),
                        bruhat_leq_oracle(u, v).unwrap(),
                        "disagreement at {u} vs {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn order_respects_length() {
        for n in 1..=4 {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            for u in &perms {
                for v in &perms {
                    if bruhat_leq(u, v).unwrap() {
                        assert!(u.coxeter_length() <= v.coxeter_length());
                        if u.coxeter_length() == v.coxeter_length() {
                            assert_eq!(u, v);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interval_examples() {
        let interval = lower_interval(&p("2143"));
        let words: Vec<String> = interval.iter().map(|q| q.to_string()).collect();
        assert_eq!(words, vec!["1234", "1243", "2134", "2143"]);

        assert_eq!(lower_interval(&Permutation::identity(5)).len(), 1);
        assert_eq!(lower_interval(&p("321")).len(), 6);
    }

    #[test]
    fn interval_matches_full_filter() {
        for n in 1..=5 {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            for sigma in &perms {
                let interval = lower_interval(sigma);
                let filtered: Vec<&Permutation> = perms
                    .iter()
                    .filter(|x| bruhat_leq(x, sigma).unwrap())
                    .collect();
                assert_eq!(interval.len(), filtered.len(), "sigma = {sigma}");
                assert!(interval.contains(sigma));
                assert!(interval.contains(&Permutation::identity(n)));
            }
        }
    }

    #[test]
    fn interval_cap() {
        assert!(matches!(
            lower_interval_capped(&p("321"), 5),
            Err(Error::IntervalCapExceeded { cap: 5 })
        ));
        assert!(lower_interval_capped(&p("321"), 6).is_ok());
    }
}
