//! Sidon predicates, the greedy Mian–Chowla generator, and the greedy
//! "just-do-it" extension that realizes every small difference exactly once.
//!
//! A set is Sidon when all differences of distinct elements are distinct;
//! equivalently all pairwise sums (repeats allowed) are distinct up to
//! swapping the addends. Both formulations are implemented and tested
//! against each other.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::modular::{normalize, reduce_int_set, Modulus};

/// A finite set of (possibly negative) integers, sorted strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerSet {
    elements: Vec<i64>,
}

impl IntegerSet {
    /// Builds a set from arbitrary values (sorted, duplicates merged).
    pub fn new(elements: impl IntoIterator<Item = i64>) -> IntegerSet {
        let mut elements: Vec<i64> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        IntegerSet { elements }
    }

    pub fn empty() -> IntegerSet {
        IntegerSet::default()
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Elementwise translate `x − c`.
    pub fn translate(&self, c: i64) -> IntegerSet {
        IntegerSet {
            elements: self.elements.iter().map(|&x| x - c).collect(),
        }
    }

    pub fn max_abs(&self) -> u64 {
        self.elements
            .iter()
            .map(|&x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
    }
}

impl Serialize for IntegerSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("IntegerSet", 1)?;
        s.serialize_field("elements", &self.elements)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for IntegerSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            elements: Vec<i64>,
        }
        Ok(IntegerSet::new(Raw::deserialize(deserializer)?.elements))
    }
}

/// The input set is not Sidon, so an operation requiring the Sidon property
/// cannot proceed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("input set is not a Sidon set")]
pub struct NotSidonError;

/// A concrete witness that a set fails a Sidon predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SidonViolation {
    /// `pairs[0] = [a, b]`, `pairs[1] = [c, d]` with `a − b = c − d`
    /// (equal modulo `v` when a modulus was given).
    Difference { pairs: [[i64; 2]; 2] },
    /// `pairs[0] = [a, b]`, `pairs[1] = [c, d]` with `a + b = c + d` and
    /// `{a, b} ≠ {c, d}`.
    Sum { pairs: [[i64; 2]; 2] },
    /// Two elements congruent modulo `v`.
    Injectivity { pair: [i64; 2] },
}

// Sidon checks run in one of two strategies: a dense table indexed by the
// difference value when the span is small, and a hash map otherwise. The
// two must agree; debug builds cross-check them on every call.
const DENSE_SPAN_LIMIT: u64 = 1 << 22;

fn difference_violation_dense(xs: &[i64], span: u64) -> Option<SidonViolation> {
    // positive differences only: a − a′ = c − c′ iff a′ − a = c′ − c
    let mut first: Vec<Option<(i64, i64)>> = vec![None; span as usize + 1];
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[..i] {
            let d = (a - b) as usize;
            match first[d] {
                Some((c, e)) => {
                    return Some(SidonViolation::Difference {
                        pairs: [[c, e], [a, b]],
                    })
                }
                None => first[d] = Some((a, b)),
            }
        }
    }
    None
}

fn difference_violation_sparse(xs: &[i64]) -> Option<SidonViolation> {
    let mut first: HashMap<i64, (i64, i64)> = HashMap::new();
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[..i] {
            if let Some(&(c, e)) = first.get(&(a - b)) {
                return Some(SidonViolation::Difference {
                    pairs: [[c, e], [a, b]],
                });
            }
            first.insert(a - b, (a, b));
        }
    }
    None
}

/// First repeated difference of distinct elements, if any.
pub fn find_difference_violation(a: &IntegerSet) -> Option<SidonViolation> {
    let xs = a.elements();
    if xs.len() < 3 {
        return None;
    }
    let span = (xs[xs.len() - 1] - xs[0]) as u64;
    let out = if span <= DENSE_SPAN_LIMIT {
        difference_violation_dense(xs, span)
    } else {
        difference_violation_sparse(xs)
    };
    debug_assert_eq!(
        out.is_some(),
        difference_violation_sparse(xs).is_some(),
        "dense and sparse Sidon strategies disagree on {xs:?}"
    );
    out
}

/// First repeated sum `a + a′` (repeats allowed, order ignored), if any.
pub fn find_sum_violation(a: &IntegerSet) -> Option<SidonViolation> {
    let xs = a.elements();
    let mut first: HashMap<i64, (i64, i64)> = HashMap::new();
    for (i, &x) in xs.iter().enumerate() {
        for &y in &xs[i..] {
            if let Some(&(c, e)) = first.get(&(x + y)) {
                return Some(SidonViolation::Sum {
                    pairs: [[c, e], [x, y]],
                });
            }
            first.insert(x + y, (x, y));
        }
    }
    None
}

/// Sidon predicate, difference formulation: all differences of distinct
/// elements are distinct.
pub fn is_sidon_differences(a: &IntegerSet) -> bool {
    find_difference_violation(a).is_none()
}

/// Sidon predicate, sum formulation: all sums `a + a′` (repeats allowed)
/// are distinct up to re-ordering of the addends.
pub fn is_sidon_sums(a: &IntegerSet) -> bool {
    find_sum_violation(a).is_none()
}

/// First failure of the modular Sidon property: an injectivity collision,
/// or a repeated residue difference.
pub fn find_mod_violation(a: &IntegerSet, v: Modulus) -> Option<SidonViolation> {
    let xs = a.elements();
    if let Err(e) = reduce_int_set(a, v) {
        return Some(SidonViolation::Injectivity { pair: [e.0, e.1] });
    }
    let mut first: Vec<Option<(i64, i64)>> = vec![None; v.get() as usize];
    for &x in xs {
        for &y in xs {
            if x == y {
                continue;
            }
            let d = normalize(x - y, v) as usize;
            match first[d] {
                Some((c, e)) if (c, e) != (x, y) => {
                    return Some(SidonViolation::Difference {
                        pairs: [[c, e], [x, y]],
                    })
                }
                _ => first[d] = Some((x, y)),
            }
        }
    }
    None
}

/// Sidon predicate modulo `v`: the reduction is injective and all residue
/// differences of distinct elements are distinct.
pub fn is_sidon_mod(a: &IntegerSet, v: Modulus) -> bool {
    find_mod_violation(a, v).is_none()
}

/// First `n` terms of the greedy Sidon sequence seeded with `{1}`
/// (Mian–Chowla, OEIS A005282): each step appends the smallest positive
/// integer preserving the Sidon property.
///
/// ```
/// let a = difset::sidon::mian_chowla(5);
/// assert_eq!(a.elements(), &[1, 2, 4, 8, 13]);
/// ```
pub fn mian_chowla(n: usize) -> IntegerSet {
    assert!(n >= 1, "need at least one term");
    let mut elements: Vec<i64> = vec![1];
    let mut used = vec![false; 2]; // used[d] = difference d already taken
    while elements.len() < n {
        let mut x = elements.last().unwrap() + 1;
        'candidate: loop {
            for &a in &elements {
                let d = (x - a) as usize;
                if d < used.len() && used[d] {
                    x += 1;
                    continue 'candidate;
                }
            }
            break;
        }
        for &a in &elements {
            let d = (x - a) as usize;
            if d >= used.len() {
                used.resize(d + 1, false);
            }
            used[d] = true;
        }
        elements.push(x);
    }
    IntegerSet { elements }
}

/// `|A ∩ [1, n]| / √n`, the density statistic of a Sidon set against the
/// conjectured extremal growth. The count is exact; the quotient is an
/// `f64` (about 15 significant digits).
pub fn density_profile(a: &IntegerSet, n: u64) -> f64 {
    assert!(n >= 1);
    let count = a
        .elements()
        .iter()
        .filter(|&&x| x >= 1 && x <= n as i64)
        .count();
    count as f64 / (n as f64).sqrt()
}

/// Result of [`extend_to_perfect_ruler`]: a Sidon superset in which every
/// difference `d ∈ [1, d_max]` has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RulerExtension {
    pub base: IntegerSet,
    pub extended: IntegerSet,
    pub realized_up_to: u64,
}

/// Greedily extends a Sidon set until every difference `d ∈ [1, d_max]` is
/// realized. Missing differences are processed in ascending order; for each,
/// the pair `{x, x + d}` of fresh elements with the minimal nonnegative `x`
/// keeping the set Sidon is added. Each step has only finitely many
/// obstructions, so the greedy choice always exists.
pub fn extend_to_perfect_ruler(
    a: &IntegerSet,
    d_max: u64,
) -> Result<RulerExtension, NotSidonError> {
    if !is_sidon_differences(a) {
        return Err(NotSidonError);
    }
    let mut s: Vec<i64> = a.elements().to_vec();
    let mut used: std::collections::HashSet<u64> = std::collections::HashSet::new();
    for (i, &x) in s.iter().enumerate() {
        for &y in &s[..i] {
            used.insert((x - y) as u64);
        }
    }
    for d in 1..=d_max {
        if used.contains(&d) {
            continue;
        }
        let mut x: i64 = 0;
        let (x, new_diffs) = loop {
            if let Some(diffs) = fresh_pair_diffs(&s, &used, x, d as i64) {
                break (x, diffs);
            }
            x += 1;
        };
        s.push(x);
        s.push(x + d as i64);
        s.sort_unstable();
        used.extend(new_diffs);
    }
    Ok(RulerExtension {
        base: a.clone(),
        extended: IntegerSet { elements: s },
        realized_up_to: d_max,
    })
}

/// The new absolute differences created by adding the fresh pair
/// `{x, x + d}`, or `None` when the addition breaks the Sidon property or
/// reuses an existing element.
fn fresh_pair_diffs(
    s: &[i64],
    used: &std::collections::HashSet<u64>,
    x: i64,
    d: i64,
) -> Option<Vec<u64>> {
    let y = x + d;
    if s.binary_search(&x).is_ok() || s.binary_search(&y).is_ok() {
        return None;
    }
    let mut new_diffs: Vec<u64> = Vec::with_capacity(2 * s.len() + 1);
    new_diffs.push(d as u64);
    for &a in s {
        new_diffs.push((x - a).unsigned_abs());
        new_diffs.push((y - a).unsigned_abs());
    }
    new_diffs.sort_unstable();
    for w in new_diffs.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    if new_diffs.iter().any(|d| used.contains(d)) {
        return None;
    }
    Some(new_diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    /// Definition-level oracle: literally compare all ordered differences.
    fn sidon_oracle(xs: &[i64]) -> bool {
        let mut diffs = Vec::new();
        for &a in xs {
            for &b in xs {
                if a != b {
                    diffs.push(a - b);
                }
            }
        }
        diffs.sort_unstable();
        diffs.windows(2).all(|w| w[0] != w[1])
    }

    #[test]
    fn difference_formulation() {
        assert!(!is_sidon_differences(&IntegerSet::new(vec![1, 2, 3])));
        assert!(is_sidon_differences(&IntegerSet::empty()));
        assert!(is_sidon_differences(&IntegerSet::new(vec![5])));
        assert!(is_sidon_differences(&IntegerSet::new(vec![1, 2, 4, 8, 13])));

        let violation = find_difference_violation(&IntegerSet::new(vec![1, 2, 3])).unwrap();
        assert_eq!(
            violation,
            SidonViolation::Difference {
                pairs: [[2, 1], [3, 2]],
            }
        );
    }

    #[test]
    fn sum_formulation() {
        assert!(!is_sidon_sums(&IntegerSet::new(vec![1, 2, 3])));
        assert!(is_sidon_sums(&IntegerSet::new(vec![0])));
        assert!(is_sidon_sums(&IntegerSet::new(vec![1, 2, 4, 8])));
        let violation = find_sum_violation(&IntegerSet::new(vec![1, 2, 3])).unwrap();
        assert_eq!(
            violation,
            SidonViolation::Sum {
                pairs: [[1, 3], [2, 2]],
            }
        );
    }

    #[test]
    fn formulations_agree_exhaustively() {
        // all subsets of {0..11}
        for mask in 0u32..(1 << 12) {
            let xs: Vec<i64> = (0..12)
                .filter(|i| mask >> i & 1 == 1)
                .map(i64::from)
                .collect();
            let a = IntegerSet::new(xs.clone());
            let diff = is_sidon_differences(&a);
            assert_eq!(diff, is_sidon_sums(&a), "subset {xs:?}");
            assert_eq!(diff, sidon_oracle(&xs), "subset {xs:?}");
        }
    }

    #[test]
    fn formulations_agree_randomized() {
        let mut rng = SplitMix64::new(0xd1f5);
        for _ in 0..300 {
            let n = 2 + (rng.next_u64() % 9) as usize;
            let xs: Vec<i64> = (0..n)
                .map(|_| rng.next_u64() as i64 % 2_000 - 1_000)
                .collect();
            let a = IntegerSet::new(xs);
            assert_eq!(is_sidon_differences(&a), is_sidon_sums(&a), "{a:?}");
            assert_eq!(is_sidon_differences(&a), sidon_oracle(a.elements()));
        }
    }

    #[test]
    fn dense_and_sparse_strategies_agree() {
        let mut rng = SplitMix64::new(7);
        for round in 0..200 {
            let n = 3 + (rng.next_u64() % 8) as usize;
            // every other round uses a huge span to force the sparse path
            let scale: i64 = if round % 2 == 0 { 500 } else { 1 << 40 };
            let xs: Vec<i64> = (0..n)
                .map(|_| (rng.next_u64() % 1000) as i64 * scale)
                .collect();
            let a = IntegerSet::new(xs);
            assert_eq!(
                difference_violation_sparse(a.elements()).is_some(),
                !is_sidon_differences(&a)
            );
        }
    }

    #[test]
    fn subsets_of_sidon_sets_are_sidon() {
        let a = mian_chowla(9);
        let xs = a.elements();
        for mask in 0u32..(1 << xs.len()) {
            let sub: Vec<i64> = xs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            assert!(is_sidon_differences(&IntegerSet::new(sub)));
        }
    }

    #[test]
    fn modular_sidon() {
        let v7 = Modulus::new(7);
        assert!(!is_sidon_mod(&IntegerSet::new(vec![1, 2, 4, 8]), v7));
        assert_eq!(
            find_mod_violation(&IntegerSet::new(vec![1, 2, 4, 8]), v7),
            Some(SidonViolation::Injectivity { pair: [1, 8] })
        );
        assert!(is_sidon_mod(&IntegerSet::new(vec![1, 2, 4]), v7));

        // 13 − 4 ≡ 1 − 13 (mod 21)
        let v21 = Modulus::new(21);
        let a = IntegerSet::new(vec![1, 2, 4, 8, 13]);
        assert!(!is_sidon_mod(&a, v21));
        // confirm by enumerating all residue differences
        let mut seen = std::collections::HashSet::new();
        let mut repeated = false;
        for &x in a.elements() {
            for &y in a.elements() {
                if x != y && !seen.insert(normalize(x - y, v21)) {
                    repeated = true;
                }
            }
        }
        assert!(repeated);
    }

    #[test]
    fn mian_chowla_matches_listing() {
        assert_eq!(mian_chowla(1).elements(), &[1]);
        assert_eq!(mian_chowla(5).elements(), &[1, 2, 4, 8, 13]);
        assert_eq!(
            mian_chowla(11).elements(),
            &[1, 2, 4, 8, 13, 21, 31, 45, 66, 81, 97]
        );
    }

    #[test]
    fn mian_chowla_prefix_and_minimality() {
        let long = mian_chowla(10);
        for n in 1..10 {
            assert_eq!(mian_chowla(n).elements(), &long.elements()[..n]);
        }
        // each term is the smallest positive integer preserving the property
        for n in 1..10 {
            let prefix = &long.elements()[..n];
            let next = long.elements()[n];
            for candidate in prefix[n - 1] + 1..next {
                let mut trial: Vec<i64> = prefix.to_vec();
                trial.push(candidate);
                assert!(
                    !sidon_oracle(&trial),
                    "candidate {candidate} after {prefix:?}"
                );
            }
            let mut trial: Vec<i64> = prefix.to_vec();
            trial.push(next);
            assert!(sidon_oracle(&trial));
        }
    }

    #[test]
    fn density_profile_values() {
        assert_eq!(density_profile(&IntegerSet::new(vec![1, 2, 4]), 4), 1.5);
        assert_eq!(density_profile(&IntegerSet::empty(), 100), 0.0);
        let d = density_profile(&mian_chowla(11), 97);
        assert!((d - 11.0 / 97f64.sqrt()).abs() < 1e-12);
        assert!((d - 1.1168).abs() < 1e-4);
        // elements outside [1, n] do not count
        assert_eq!(density_profile(&IntegerSet::new(vec![-3, 0, 5]), 4), 0.0);
    }

    #[test]
    fn ruler_extension_small_cases() {
        let r = extend_to_perfect_ruler(&IntegerSet::empty(), 1).unwrap();
        assert_eq!(r.extended.elements(), &[0, 1]);

        let r = extend_to_perfect_ruler(&IntegerSet::new(vec![1, 2]), 1).unwrap();
        assert_eq!(r.extended.elements(), &[1, 2]);

        let r = extend_to_perfect_ruler(&IntegerSet::empty(), 2).unwrap();
        assert_eq!(r.extended.elements(), &[0, 1, 4, 6]);

        assert_eq!(
            extend_to_perfect_ruler(&IntegerSet::new(vec![1, 2, 3]), 1),
            Err(NotSidonError)
        );
    }

    #[test]
    fn ruler_extension_realizes_each_difference_once() {
        let base = IntegerSet::new(vec![1, 2, 4, 8, 13]);
        let r = extend_to_perfect_ruler(&base, 40).unwrap();
        assert!(is_sidon_differences(&r.extended));
        for &b in base.elements() {
            assert!(r.extended.contains(b));
        }
        // independent difference count
        let xs = r.extended.elements();
        for d in 1..=40u64 {
            let count = xs
                .iter()
                .flat_map(|&x| xs.iter().map(move |&y| x - y))
                .filter(|&diff| diff == d as i64)
                .count();
            assert_eq!(count, 1, "difference {d}");
        }
    }
}
