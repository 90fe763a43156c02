//! Exact modular arithmetic on canonical residues.
//!
//! Everything downstream (difference sets, planes, the extension search)
//! reasons about residues in the canonical range `[0, v)`. Signed integer
//! inputs are normalized once at the boundary; a [`ResidueSet`] is always
//! sorted and duplicate-free so that set equality is list equality.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sidon::IntegerSet;

/// A positive modulus, conventionally named `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl Modulus {
    /// Creates a modulus. Panics when `v == 0`; the cyclic group must be
    /// nontrivial and finite.
    pub fn new(v: u64) -> Modulus {
        assert!(v >= 1, "modulus must be positive");
        Modulus(v)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// The plane order `q ≥ 2` with `q² + q + 1 = v`, when it exists.
    ///
    /// A perfect difference set of `m` elements covers `m(m−1)` ordered
    /// differences, so it can exist modulo `v` only when `v − 1 = m(m−1)`,
    /// i.e. `v = q² + q + 1` with `q = m − 1`.
    pub fn plane_order(self) -> Option<u64> {
        let v = self.0;
        if v < 7 {
            return None;
        }
        let mut q = v.isqrt();
        while q * q + q + 1 > v {
            q -= 1;
        }
        (q >= 2 && q * q + q + 1 == v).then_some(q)
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Two elements of an integer set that collide modulo the target modulus.
///
/// Signals that the set cannot sit inside any residue-set superset for that
/// modulus: the colliding pair would already produce a zero difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("{0} and {1} are congruent modulo the target modulus")]
pub struct InjectivityError(pub i64, pub i64);

/// Canonical residue of `x` modulo `v`, in `[0, v)`.
pub fn normalize(x: i64, v: Modulus) -> u64 {
    (x as i128).rem_euclid(v.get() as i128) as u64
}

/// A finite set of residues with an explicit modulus.
///
/// Elements are strictly increasing and in `[0, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSet {
    modulus: Modulus,
    elements: Vec<u64>,
}

impl ResidueSet {
    /// Builds a residue set from arbitrary values, reducing, sorting, and
    /// deduplicating. Congruent inputs silently merge; use
    /// [`reduce_int_set`] when a merge must be reported instead.
    pub fn new(modulus: Modulus, elements: impl IntoIterator<Item = u64>) -> ResidueSet {
        let mut elements: Vec<u64> = elements.into_iter().map(|x| x % modulus.get()).collect();
        elements.sort_unstable();
        elements.dedup();
        ResidueSet { modulus, elements }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.elements.binary_search(&r).is_ok()
    }

    /// Elementwise translate `(b + c) mod v`.
    pub fn translate(&self, c: i64) -> ResidueSet {
        let v = self.modulus;
        ResidueSet::new(v, self.elements.iter().map(|&b| normalize(b as i64 + c, v)))
    }

    /// Membership bitmap over `[0, v)`.
    pub fn bitmap(&self) -> Vec<bool> {
        let mut map = vec![false; self.modulus.get() as usize];
        for &b in &self.elements {
            map[b as usize] = true;
        }
        map
    }
}

// Serialized as {"elements":[...],"modulus":v}; re-canonicalized on the way
// back in so deserialized values keep the sorted/deduped invariant.
impl Serialize for ResidueSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ResidueSet", 2)?;
        s.serialize_field("elements", &self.elements)?;
        s.serialize_field("modulus", &self.modulus)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ResidueSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            elements: Vec<u64>,
            modulus: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.modulus == 0 {
            return Err(serde::de::Error::custom("modulus must be positive"));
        }
        Ok(ResidueSet::new(Modulus::new(raw.modulus), raw.elements))
    }
}

/// Reduces an integer set modulo `v`, failing rather than silently merging
/// congruent elements.
pub fn reduce_int_set(a: &IntegerSet, v: Modulus) -> Result<ResidueSet, InjectivityError> {
    let mut seen: Vec<Option<i64>> = vec![None; v.get() as usize];
    let mut residues = Vec::with_capacity(a.len());
    for &x in a.elements() {
        let r = normalize(x, v);
        match seen[r as usize] {
            Some(prev) => return Err(InjectivityError(prev, x)),
            None => {
                seen[r as usize] = Some(x);
                residues.push(r);
            }
        }
    }
    Ok(ResidueSet::new(v, residues))
}

/// Counts of ordered differences `b − b′ (mod v)` over distinct pairs of a
/// residue set. `counts[0]` is always zero; the total is `|B|·(|B|−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTable {
    modulus: Modulus,
    counts: Vec<u32>,
}

impl DifferenceTable {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, d: u64) -> u32 {
        self.counts[(d % self.modulus.get()) as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Nonzero residues not represented as a difference.
    pub fn missing(&self) -> Vec<u64> {
        (1..self.modulus.get())
            .filter(|&d| self.counts[d as usize] == 0)
            .collect()
    }

    /// Nonzero residues represented more than once.
    pub fn repeated(&self) -> Vec<u64> {
        (1..self.modulus.get())
            .filter(|&d| self.counts[d as usize] >= 2)
            .collect()
    }
}

/// Tabulates every ordered difference of distinct elements of `b`.
pub fn difference_table(b: &ResidueSet) -> DifferenceTable {
    let v = b.modulus().get();
    let mut counts = vec![0u32; v as usize];
    let elems = b.elements();
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            if i != j {
                counts[((x + v - y) % v) as usize] += 1;
            }
        }
    }
    DifferenceTable {
        modulus: b.modulus(),
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_canonical_range() {
        assert_eq!(normalize(0, Modulus::new(21)), 0);
        assert_eq!(normalize(-8, Modulus::new(21)), 13);
        assert_eq!(normalize(16, Modulus::new(7)), 2);
        assert_eq!(
            normalize(i64::MIN, Modulus::new(3)),
            ((i64::MIN as i128).rem_euclid(3)) as u64
        );
    }

    #[test]
    fn plane_orders() {
        assert_eq!(Modulus::new(7).plane_order(), Some(2));
        assert_eq!(Modulus::new(13).plane_order(), Some(3));
        assert_eq!(Modulus::new(21).plane_order(), Some(4));
        assert_eq!(Modulus::new(73).plane_order(), Some(8));
        assert_eq!(Modulus::new(12).plane_order(), None);
        assert_eq!(Modulus::new(1).plane_order(), None);
        assert_eq!(Modulus::new(3).plane_order(), None); // q = 1 is below plane range
                                                         // exhaustive against the defining equation
        for v in 1..20_000u64 {
            let direct = (2..200u64).find(|q| q * q + q + 1 == v);
            assert_eq!(Modulus::new(v).plane_order(), direct, "v={v}");
        }
    }

    #[test]
    fn reduce_reports_collisions() {
        let a = IntegerSet::new(vec![1, 2, 4, 8]);
        let err = reduce_int_set(&a, Modulus::new(7)).unwrap_err();
        assert_eq!(err, InjectivityError(1, 8));

        let ok = reduce_int_set(&a, Modulus::new(13)).unwrap();
        assert_eq!(ok.elements(), &[1, 2, 4, 8]);

        let hall = IntegerSet::new(vec![-8, -6, 0, 1, 4]);
        let reduced = reduce_int_set(&hall, Modulus::new(21)).unwrap();
        assert_eq!(reduced.elements(), &[0, 1, 4, 13, 15]);
    }

    #[test]
    fn difference_table_counts() {
        let b = ResidueSet::new(Modulus::new(7), [1, 2, 4]);
        let t = difference_table(&b);
        assert_eq!(t.counts(), &[0, 1, 1, 1, 1, 1, 1]);
        assert!(t.missing().is_empty());
        assert!(t.repeated().is_empty());

        let b = ResidueSet::new(Modulus::new(7), [1, 2, 3]);
        let t = difference_table(&b);
        assert_eq!(t.count(1), 2);
        assert_eq!(t.repeated(), vec![1, 6]);
        assert_eq!(t.missing(), vec![3, 4]);

        let b = ResidueSet::new(Modulus::new(21), [1, 2, 5, 15, 17]);
        let t = difference_table(&b);
        assert!((1..21).all(|d| t.count(d) == 1));
        assert_eq!(t.count(0), 0);
    }

    #[test]
    fn difference_table_total_and_translation_invariance() {
        let v = Modulus::new(21);
        let b = ResidueSet::new(v, [0, 3, 5, 8, 11, 14]);
        let t = difference_table(&b);
        assert_eq!(t.total(), (b.len() * (b.len() - 1)) as u64);
        assert_eq!(t.count(0), 0);
        for c in [0i64, 1, 9, -4, 20, 44] {
            let shifted = difference_table(&b.translate(c));
            assert_eq!(shifted.counts(), t.counts(), "c={c}");
        }
    }

    #[test]
    fn residue_set_canonicalizes() {
        let v = Modulus::new(10);
        let a = ResidueSet::new(v, [13, 3, 7, 3, 27]);
        assert_eq!(a.elements(), &[3, 7]);
        assert!(a.contains(7));
        assert!(!a.contains(4));
    }

    #[test]
    fn residue_set_json_round_trip() {
        let b = ResidueSet::new(Modulus::new(21), [1, 2, 5, 15, 17]);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"elements":[1,2,5,15,17],"modulus":21}"#);
        let back: ResidueSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<ResidueSet>(r#"{"elements":[],"modulus":0}"#).is_err());
    }
}
