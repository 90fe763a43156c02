//! Perfect difference sets: verification, translation, the third-order
//! linear-recurrence construction (Singer's, in disguise) in deterministic
//! and randomized modes, and exhaustive small-modulus enumeration.
//!
//! A set `B` of residues is a perfect difference set modulo `v` when every
//! nonzero residue has exactly one representation `b − b′` with distinct
//! `b, b′ ∈ B` (λ = 1). Counting ordered pairs forces `v = q² + q + 1` and
//! `|B| = q + 1`; Singer's theorem provides such a set for every prime
//! power `q`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{is_prime_power, CubicExtension, FieldElement, FieldError, FieldSpec};
use crate::modular::{difference_table, reduce_int_set, Modulus, ResidueSet};
use crate::rng::SplitMix64;
use crate::sidon::IntegerSet;

/// Subset budget for [`enumerate_pds`]; `C(v, q+1)` above this refuses.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdsError {
    #[error("modulus {0} is not of the form q²+q+1 with q ≥ 2")]
    InvalidModulus(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("a₃ = 0 degenerates the recurrence below order three")]
    DegenerateCoefficients,
    #[error("the set is not a perfect difference set")]
    NotPerfect,
    #[error("budget of {budget} exceeded ({required} required)")]
    BudgetExceeded { budget: u64, required: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The plane order `q ≥ 2` with `q² + q + 1 = v`, when it exists.
pub fn order_of_modulus(v: Modulus) -> Option<u64> {
    v.plane_order()
}

/// Strict mode demands a plane-form modulus up front; lenient mode reports
/// difference counts for any modulus (and such a report can never be
/// `is_pds` unless the modulus has plane form).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckMode {
    #[default]
    Strict,
    Lenient,
}

/// Outcome of a perfect-difference-set check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdsReport {
    pub is_pds: bool,
    /// Plane order of the modulus, when the modulus has plane form.
    pub q: Option<u64>,
    pub size: usize,
    /// Nonzero residues never hit as a difference.
    pub missing: Vec<u64>,
    /// Nonzero residues hit more than once.
    pub repeated: Vec<u64>,
    /// Two input integers congruent modulo `v`, when the input was an
    /// integer set whose reduction collapses.
    pub injectivity_failure: Option<[i64; 2]>,
}

/// Checks the perfect-difference-set property of a residue set.
///
/// ```
/// use difset::modular::{Modulus, ResidueSet};
/// use difset::pds::{check_pds, CheckMode};
///
/// let b = ResidueSet::new(Modulus::new(7), [1, 2, 4]);
/// let report = check_pds(&b, CheckMode::Strict)?;
/// assert!(report.is_pds);
/// assert_eq!(report.q, Some(2));
/// # Ok::<(), difset::pds::PdsError>(())
/// ```
pub fn check_pds(b: &ResidueSet, mode: CheckMode) -> Result<PdsReport, PdsError> {
    let q = b.modulus().plane_order();
    if mode == CheckMode::Strict && q.is_none() {
        return Err(PdsError::InvalidModulus(b.modulus().get()));
    }
    let table = difference_table(b);
    let missing = table.missing();
    let repeated = table.repeated();
    let is_pds =
        missing.is_empty() && repeated.is_empty() && q.is_some_and(|q| b.len() as u64 == q + 1);
    Ok(PdsReport {
        is_pds,
        q,
        size: b.len(),
        missing,
        repeated,
        injectivity_failure: None,
    })
}

/// Checks an integer set modulo `v`, reporting an injectivity failure
/// instead of silently merging congruent elements.
pub fn check_pds_ints(a: &IntegerSet, v: Modulus, mode: CheckMode) -> Result<PdsReport, PdsError> {
    if mode == CheckMode::Strict && v.plane_order().is_none() {
        return Err(PdsError::InvalidModulus(v.get()));
    }
    match reduce_int_set(a, v) {
        Ok(b) => check_pds(&b, mode),
        Err(e) => {
            // counts over the merged image are still informative
            let merged = ResidueSet::new(
                v,
                a.elements()
                    .iter()
                    .map(|&x| crate::modular::normalize(x, v)),
            );
            let mut report = check_pds(&merged, CheckMode::Lenient)?;
            report.is_pds = false;
            report.q = v.plane_order();
            report.injectivity_failure = Some([e.0, e.1]);
            Ok(report)
        }
    }
}

/// A verified perfect difference set together with its plane order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectDifferenceSet {
    residues: ResidueSet,
    q: u64,
}

impl PerfectDifferenceSet {
    /// Validates and wraps a residue set.
    pub fn new(residues: ResidueSet) -> Result<PerfectDifferenceSet, PdsError> {
        let report = check_pds(&residues, CheckMode::Strict)?;
        if !report.is_pds {
            return Err(PdsError::NotPerfect);
        }
        let q = report.q.expect("is_pds implies plane order");
        Ok(PerfectDifferenceSet { residues, q })
    }

    pub fn residues(&self) -> &ResidueSet {
        &self.residues
    }

    pub fn modulus(&self) -> Modulus {
        self.residues.modulus()
    }

    /// The plane order `q`; the set has `q + 1` elements.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn contains(&self, r: u64) -> bool {
        self.residues.contains(r)
    }

    /// Elementwise translate; the `c`s cancel when computing differences,
    /// so the result is again perfect.
    pub fn translate(&self, c: i64) -> PerfectDifferenceSet {
        PerfectDifferenceSet {
            residues: self.residues.translate(c),
            q: self.q,
        }
    }
}

impl Serialize for PerfectDifferenceSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.residues.serialize(serializer)
    }
}

/// Indices `k < horizon` with `x_k = 0` for the third-order linear
/// recurrence `x_k = a₁x_{k−1} + a₂x_{k−2} + a₃x_{k−3}` over GF(q), with
/// initial conditions `x₀ = 0, x₁ = 0, x₂ = 1`.
pub fn recurrence_zero_positions(
    f: &FieldSpec,
    a1: &FieldElement,
    a2: &FieldElement,
    a3: &FieldElement,
    horizon: u64,
) -> Result<Vec<u64>, PdsError> {
    assert!(horizon >= 1);
    for a in [a1, a2, a3] {
        if a.field() != f {
            return Err(FieldError::FieldMismatch.into());
        }
    }
    if a3.is_zero() {
        return Err(PdsError::DegenerateCoefficients);
    }
    let mut zeros = Vec::new();
    let mut window = [f.zero(), f.zero(), f.one()]; // x_{k−3}, x_{k−2}, x_{k−1}
    for (k, x) in [0u64, 1].iter().zip(&window) {
        debug_assert!(x.is_zero() == (*k < 2));
    }
    for k in 0..horizon {
        let x_k = if k < 3 {
            window[k as usize].clone()
        } else {
            let next = a1
                .mul(&window[2])?
                .add(&a2.mul(&window[1])?)?
                .add(&a3.mul(&window[0])?)?;
            window = [window[1].clone(), window[2].clone(), next.clone()];
            next
        };
        if x_k.is_zero() {
            zeros.push(k);
        }
    }
    Ok(zeros)
}

/// Runs the recurrence over a horizon of two periods, keeps the result only
/// when the zero positions are periodic modulo `v = q² + q + 1` and their
/// reduction passes the perfect-difference-set check.
pub fn recurrence_pds(
    q: u64,
    a1: &FieldElement,
    a2: &FieldElement,
    a3: &FieldElement,
) -> Result<Option<PerfectDifferenceSet>, PdsError> {
    if is_prime_power(q).is_none() {
        return Err(PdsError::NotPrimePower(q));
    }
    if a1.field().size() != q {
        return Err(FieldError::FieldMismatch.into());
    }
    let v = q * q + q + 1;
    let zeros = recurrence_zero_positions(a1.field(), a1, a2, a3, 2 * v)?;
    let first: Vec<u64> = zeros.iter().copied().filter(|&k| k < v).collect();
    let second: Vec<u64> = zeros.iter().copied().filter(|&k| k >= v).collect();
    let periodic =
        first.len() == second.len() && first.iter().zip(&second).all(|(&a, &b)| a + v == b);
    if !periodic {
        return Ok(None);
    }
    let candidate = ResidueSet::new(Modulus::new(v), first);
    match PerfectDifferenceSet::new(candidate) {
        Ok(pds) => Ok(Some(pds)),
        Err(PdsError::NotPerfect) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Deterministic Singer-type construction for a prime power `q`: take the
/// minimal polynomial `x³ − a₁x² − a₂x − a₃` over GF(q) of the
/// deterministically chosen generator of GF(q³)*, and feed its coefficients
/// to the recurrence. The characteristic polynomial of the recurrence is
/// then primitive, so the zero positions always form a perfect difference
/// set.
pub fn singer_pds(q: u64) -> Result<PerfectDifferenceSet, PdsError> {
    let (p, k) = is_prime_power(q).ok_or(PdsError::NotPrimePower(q))?;
    let base = FieldSpec::new(p, k)?;
    let ext = CubicExtension::new(&base)?;
    let gamma = ext.primitive_element();
    let (a1, a2, a3) = ext.min_poly_of(&gamma);
    recurrence_pds(q, &a1, &a2, &a3)?.ok_or(PdsError::NotPerfect)
}

/// Result of the randomized construction: the set, the coefficient indices
/// that produced it, and how many draws were needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomConstruction {
    pub pds: PerfectDifferenceSet,
    pub coefficients: [u64; 3],
    pub tries: u32,
}

/// Draws coefficient triples from a seeded deterministic generator and
/// retries until the recurrence construction succeeds. Identical seeds give
/// identical outputs.
pub fn random_recurrence_pds(
    q: u64,
    seed: u64,
    max_tries: u32,
) -> Result<RandomConstruction, PdsError> {
    let (p, k) = is_prime_power(q).ok_or(PdsError::NotPrimePower(q))?;
    let field = FieldSpec::new(p, k)?;
    let mut rng = SplitMix64::new(seed);
    for tries in 1..=max_tries {
        let idx = [rng.below(q), rng.below(q), rng.below(q)];
        if idx[2] == 0 {
            continue; // degenerate draw; counts as a try
        }
        let a1 = field.element_from_index(idx[0]);
        let a2 = field.element_from_index(idx[1]);
        let a3 = field.element_from_index(idx[2]);
        if let Some(pds) = recurrence_pds(q, &a1, &a2, &a3)? {
            return Ok(RandomConstruction {
                pds,
                coefficients: idx,
                tries,
            });
        }
    }
    Err(PdsError::BudgetExceeded {
        budget: max_tries as u64,
        required: 0,
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u128::from(u64::MAX) {
            return u128::MAX;
        }
    }
    acc
}

/// All `(q+1)`-subsets of `ℤ/vℤ` that are perfect difference sets, in
/// lexicographic order, with no quotienting by translation or multiplier
/// equivalence.
pub fn enumerate_pds(v: Modulus) -> Result<Vec<ResidueSet>, PdsError> {
    enumerate_pds_with_budget(v, DEFAULT_ENUMERATION_BUDGET)
}

/// As [`enumerate_pds`], refusing when `C(v, q+1)` exceeds `budget`.
pub fn enumerate_pds_with_budget(v: Modulus, budget: u64) -> Result<Vec<ResidueSet>, PdsError> {
    let q = v.plane_order().ok_or(PdsError::InvalidModulus(v.get()))?;
    let n = v.get();
    let k = (q + 1) as usize;
    let subsets = binomial(n, q + 1);
    if subsets > budget as u128 {
        return Err(PdsError::BudgetExceeded {
            budget,
            required: subsets.min(u128::from(u64::MAX)) as u64,
        });
    }
    let mut out = Vec::new();
    // lexicographic combinations of {0, …, v−1}
    let mut idx: Vec<u64> = (0..k as u64).collect();
    let mut counts = vec![0u32; n as usize];
    loop {
        counts.iter_mut().for_each(|c| *c = 0);
        let mut perfect = true;
        'diffs: for (i, &x) in idx.iter().enumerate() {
            for &y in &idx[..i] {
                let d1 = (x - y) as usize;
                let d2 = (n - (x - y)) as usize;
                counts[d1] += 1;
                counts[d2] += 1;
                if counts[d1] > 1 || counts[d2] > 1 {
                    perfect = false;
                    break 'diffs;
                }
            }
        }
        if perfect && counts[1..].iter().all(|&c| c == 1) {
            out.push(ResidueSet::new(v, idx.iter().copied()));
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if idx[i] != n - (k - i) as u64 {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
