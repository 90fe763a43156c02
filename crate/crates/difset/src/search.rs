//! The decision engine: does a given Sidon set extend to a perfect
//! difference set?
//!
//! [`extend_to_pds`] answers for one modulus by complete backtracking with
//! a difference bitmask; `Exhausted` is a proof of non-existence for that
//! modulus. [`sweep`] runs the question across a range of plane orders.
//! [`certify_non_extension`] assembles a machine-checkable certificate that
//! the answer is "no" for *every* modulus, combining:
//!
//! * a collinear triple of forced absolute points, which rules out every
//!   odd plane order (at most two absolute points per line there);
//! * an even-order witness: either a fourth forced absolute point off that
//!   line (all absolute points are collinear for even order), or a forced
//!   doubling membership colliding with a difference of the set (every
//!   point of the absolute line is itself absolute);
//! * an aliasing bound `V₀ = 2M + 1`: for `v ≥ V₀` every integer identity
//!   and distinctness claim in the certificate transfers verbatim to
//!   residues, and every plane modulus `v < V₀` is closed off by an
//!   exhaustive search recorded in the certificate.
//!
//! [`check_certificate`] re-validates all of this from scratch with integer
//! arithmetic plus re-runs of the recorded small searches, deliberately
//! sharing no state with the certifier.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::is_prime_power;
use crate::modular::{reduce_int_set, InjectivityError, Modulus, ResidueSet};
use crate::sidon::{is_sidon_differences, IntegerSet, NotSidonError};

/// Default backtracking node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Default largest plane order for sweeps.
pub const DEFAULT_Q_MAX: u64 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    NotSidon(#[from] NotSidonError),
    #[error("modulus {0} is not of the form q²+q+1 with q ≥ 2")]
    InvalidModulus(u64),
    #[error("node budget {0} exhausted")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    Exhausted,
    PrecheckFailed,
    BudgetExceeded,
}

/// Why the search never started.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrecheckReason {
    /// Two elements congruent modulo `v`.
    Injectivity { pair: [i64; 2] },
    /// A repeated residue difference modulo `v`.
    NotSidonMod,
    /// More elements than the `q + 1` a perfect difference set can hold.
    Size { set_size: usize, capacity: u64 },
}

/// Outcome of one extension search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Lexicographically least witness, on `Found`.
    pub witness: Option<ResidueSet>,
    pub nodes_explored: u64,
    pub precheck_reason: Option<PrecheckReason>,
}

impl SearchOutcome {
    fn precheck(reason: PrecheckReason) -> SearchOutcome {
        SearchOutcome {
            status: SearchStatus::PrecheckFailed,
            witness: None,
            nodes_explored: 0,
            precheck_reason: Some(reason),
        }
    }

    pub fn found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

struct Dfs {
    v: u64,
    target: usize,
    budget: u64,
    nodes: u64,
    used: Vec<bool>,
    in_image: Vec<bool>,
    current: Vec<u64>,
    witness: Option<Vec<u64>>,
    exceeded: bool,
    strong_prune: bool,
}

impl Dfs {
    /// Marks the differences of `x` against the current set; on a clash,
    /// rolls back the partial marks and reports infeasibility. Both
    /// directions are marked, and because marking is incremental, a clash
    /// between two *new* differences (`x − b ≡ b′ − x`) is caught as well.
    fn try_place(&mut self, x: u64) -> bool {
        let v = self.v;
        for i in 0..self.current.len() {
            let b = self.current[i];
            let d1 = ((x + v - b) % v) as usize;
            let d2 = ((b + v - x) % v) as usize;
            if self.used[d1] || self.used[d2] {
                for &b2 in &self.current[..i] {
                    self.used[((x + v - b2) % v) as usize] = false;
                    self.used[((b2 + v - x) % v) as usize] = false;
                }
                return false;
            }
            self.used[d1] = true;
            self.used[d2] = true;
        }
        self.current.push(x);
        true
    }

    fn unplace(&mut self) {
        let x = self.current.pop().expect("place/unplace are paired");
        let v = self.v;
        for &b in &self.current {
            self.used[((x + v - b) % v) as usize] = false;
            self.used[((b + v - x) % v) as usize] = false;
        }
    }

    /// One-level feasibility of a candidate without mutating the mask.
    fn feasible(&self, x: u64) -> bool {
        let v = self.v;
        self.current.iter().all(|&b| {
            !self.used[((x + v - b) % v) as usize] && !self.used[((b + v - x) % v) as usize]
        })
    }

    /// Counting prune: the free elements still to be placed must all come
    /// from candidates ≥ `start` that are individually compatible with the
    /// differences already used. (Pairwise clashes among them are not
    /// consulted, so the prune is conservative and completeness holds.)
    fn enough_candidates_left(&self, start: u64, remaining: u64) -> bool {
        let mut count = 0;
        for x in start..self.v {
            if !self.in_image[x as usize] && self.feasible(x) {
                count += 1;
                if count >= remaining {
                    return true;
                }
            }
        }
        false
    }

    /// Free elements are chosen in increasing residue order; each candidate
    /// is tested once, counted as one node.
    fn run(&mut self, start: u64) {
        if self.current.len() == self.target {
            let mut w = self.current.clone();
            w.sort_unstable();
            self.witness = Some(w);
            return;
        }
        let remaining = (self.target - self.current.len()) as u64;
        if self.strong_prune && remaining >= 2 && !self.enough_candidates_left(start, remaining) {
            return;
        }
        let mut x = start;
        while x + remaining <= self.v {
            if !self.in_image[x as usize] {
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.exceeded = true;
                    return;
                }
                if self.try_place(x) {
                    self.run(x + 1);
                    self.unplace();
                    if self.witness.is_some() || self.exceeded {
                        return;
                    }
                }
            }
            x += 1;
        }
    }
}

/// Complete backtracking search for a perfect difference set modulo `v`
/// containing the image of `a`. `Found` returns the lexicographically
/// least witness; `Exhausted` proves there is none for this modulus.
pub fn extend_to_pds(
    a: &IntegerSet,
    v: Modulus,
    budget: u64,
) -> Result<SearchOutcome, SearchError> {
    extend_to_pds_with_options(a, v, budget, false)
}

/// [`extend_to_pds`] with the stronger remaining-candidates counting prune
/// switched on or off. The prune changes node counts, never outcomes or
/// witnesses; it pays off only when the search tree is deep.
pub fn extend_to_pds_with_options(
    a: &IntegerSet,
    v: Modulus,
    budget: u64,
    strong_prune: bool,
) -> Result<SearchOutcome, SearchError> {
    let q = v
        .plane_order()
        .ok_or(SearchError::InvalidModulus(v.get()))?;
    let image = match reduce_int_set(a, v) {
        Ok(image) => image,
        Err(InjectivityError(x, y)) => {
            return Ok(SearchOutcome::precheck(PrecheckReason::Injectivity {
                pair: [x, y],
            }))
        }
    };
    let target = (q + 1) as usize;
    if image.len() > target {
        return Ok(SearchOutcome::precheck(PrecheckReason::Size {
            set_size: image.len(),
            capacity: q + 1,
        }));
    }
    let vv = v.get();
    let mut used = vec![false; vv as usize];
    for (i, &x) in image.elements().iter().enumerate() {
        for &y in &image.elements()[..i] {
            let d1 = ((x + vv - y) % vv) as usize;
            let d2 = ((y + vv - x) % vv) as usize;
            if used[d1] || used[d2] {
                return Ok(SearchOutcome::precheck(PrecheckReason::NotSidonMod));
            }
            used[d1] = true;
            used[d2] = true;
        }
    }
    let mut dfs = Dfs {
        v: vv,
        target,
        budget,
        nodes: 0,
        used,
        in_image: image.bitmap(),
        current: image.elements().to_vec(),
        witness: None,
        exceeded: false,
        strong_prune,
    };
    dfs.run(0);
    Ok(if let Some(w) = dfs.witness {
        SearchOutcome {
            status: SearchStatus::Found,
            witness: Some(ResidueSet::new(v, w)),
            nodes_explored: dfs.nodes,
            precheck_reason: None,
        }
    } else if dfs.exceeded {
        SearchOutcome {
            status: SearchStatus::BudgetExceeded,
            witness: None,
            nodes_explored: dfs.nodes,
            precheck_reason: None,
        }
    } else {
        SearchOutcome {
            status: SearchStatus::Exhausted,
            witness: None,
            nodes_explored: dfs.nodes,
            precheck_reason: None,
        }
    })
}

/// Plane orders `q ∈ [2, q_max]` passing the admissibility prechecks for
/// `a`: the reduction modulo `q² + q + 1` is injective, stays Sidon, and
/// the set fits in `q + 1` elements. The prechecks do not consult plane
/// existence.
pub fn admissible_orders(a: &IntegerSet, q_max: u64) -> Result<Vec<u64>, SearchError> {
    if !is_sidon_differences(a) {
        return Err(NotSidonError.into());
    }
    Ok((2..=q_max)
        .filter(|&q| {
            let v = Modulus::new(q * q + q + 1);
            q + 1 >= a.len() as u64
                && reduce_int_set(a, v).is_ok()
                && crate::sidon::is_sidon_mod(a, v)
        })
        .collect())
}

/// Which plane orders a sweep visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ModulusFilter {
    /// Every integer order.
    #[default]
    All,
    /// Prime orders only.
    Primes,
    /// Prime-power orders only.
    PrimePowers,
}

impl ModulusFilter {
    pub fn admits(self, q: u64) -> bool {
        match self {
            ModulusFilter::All => true,
            ModulusFilter::Primes => crate::field::is_prime(q),
            ModulusFilter::PrimePowers => is_prime_power(q).is_some(),
        }
    }
}

/// Runs [`extend_to_pds`] for every admitted order `q ≤ q_max`.
pub fn sweep(
    a: &IntegerSet,
    q_max: u64,
    filter: ModulusFilter,
    budget: u64,
) -> Result<BTreeMap<u64, SearchOutcome>, SearchError> {
    if !is_sidon_differences(a) {
        return Err(NotSidonError.into());
    }
    let mut out = BTreeMap::new();
    for q in (2..=q_max).filter(|&q| filter.admits(q)) {
        let v = Modulus::new(q * q + q + 1);
        out.insert(q, extend_to_pds(a, v, budget)?);
    }
    Ok(out)
}

/// [`sweep`] with the per-order searches distributed over `jobs` threads.
/// Orders are independent, so the merged result is identical to the
/// sequential one.
pub fn sweep_parallel(
    a: &IntegerSet,
    q_max: u64,
    filter: ModulusFilter,
    budget: u64,
    jobs: usize,
) -> Result<BTreeMap<u64, SearchOutcome>, SearchError> {
    if jobs <= 1 {
        return sweep(a, q_max, filter, budget);
    }
    if !is_sidon_differences(a) {
        return Err(NotSidonError.into());
    }
    let orders: Vec<u64> = (2..=q_max).filter(|&q| filter.admits(q)).collect();
    let results: Vec<Result<(u64, SearchOutcome), SearchError>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in orders.chunks(orders.len().div_ceil(jobs).max(1)) {
            handles.push(scope.spawn(move || {
                chunk
                    .iter()
                    .map(|&q| extend_to_pds(a, Modulus::new(q * q + q + 1), budget).map(|o| (q, o)))
                    .collect::<Vec<_>>()
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut out = BTreeMap::new();
    for r in results {
        let (q, outcome) = r?;
        out.insert(q, outcome);
    }
    Ok(out)
}

/// The collinear part of a certificate: an integer line offset `t` and
/// three distinct forced absolute points `hᵢ` with `hᵢ − t` in the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollinearWitness {
    pub t: i64,
    pub triple: [i64; 3],
}

/// The even-order half of a certificate. `collision = [a₁, a₂, a₃]` with
/// `w − a₁ = a₂ − a₃` (resp. `u − a₁ = a₂ − a₃`) as integers, the pairs
/// `{w, a₁}` and `{a₂, a₃}` distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum EvenCaseWitness {
    /// A fourth forced absolute point `h₄`; for even order all absolute
    /// points share one line, so `w = h₄ − t` would be a member of the
    /// difference set, clashing with an existing difference.
    OffLineWitness {
        h4: i64,
        w: i64,
        collision: [i64; 3],
    },
    /// For even order every point of the absolute line `B + t` is
    /// absolute; the point `a + t` then forces the doubled value
    /// `u = 2a + 2t` into the set, clashing with an existing difference.
    SaturationWitness { a: i64, u: i64, collision: [i64; 3] },
}

/// One recorded small-modulus search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallModulusSearch {
    pub v: u64,
    pub outcome: SearchOutcome,
}

/// Machine-checkable witness that a Sidon set extends to no perfect
/// difference set modulo any `v > 0`.
///
/// All reasoning happens in the frame of the translated set `A − shift`
/// (translating a perfect difference set preserves the property, so
/// non-extension transfers back). Every field is re-checkable by integer
/// arithmetic plus the recorded small-modulus searches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonExtensionCertificate {
    /// The certificate reasons about `A − shift`.
    pub shift: i64,
    /// Integers `h` with `2h` in the translated set: guaranteed absolute
    /// points of any hosting plane.
    pub forced_absolute: Vec<i64>,
    pub collinear_witness: CollinearWitness,
    pub even_case: EvenCaseWitness,
    /// `V₀ = 2M + 1` for `M` the largest absolute value among the integers
    /// above. For `v ≥ V₀`, congruence of any two of them implies equality.
    pub aliasing_bound: u64,
    /// Non-`Found` searches covering every `v = q² + q + 1 < V₀`, `q ≥ 2`.
    pub small_moduli_exhausted: Vec<SmallModulusSearch>,
}

/// Certificate document version written by this crate.
pub const CERTIFICATE_VERSION: u32 = 1;

/// Versioned serialization wrapper for [`NonExtensionCertificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub version: u32,
    pub set: IntegerSet,
    pub certificate: NonExtensionCertificate,
}

/// Result of [`certify_non_extension`]. Absence of an obstruction is never
/// evidence of extendability, so the negative arm is `Inconclusive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Certificate(NonExtensionCertificate),
    Inconclusive { reason: String },
}

/// Searches for a non-extension certificate for the Sidon set `a`.
///
/// Shifts 0 and 1 are tried in turn (halving reaches only one parity class
/// of the set per shift, and any larger shift is equivalent to one of these
/// two up to retargeting `t`); within a shift, line offsets `t` ascend and
/// the collision minimizing the aliasing bound is preferred, so output is
/// deterministic.
///
/// ```
/// use difset::search::{self, CertifyOutcome, DEFAULT_NODE_BUDGET};
/// use difset::sidon::IntegerSet;
///
/// let a = IntegerSet::new(vec![1, 2, 4, 8, 13]);
/// let CertifyOutcome::Certificate(cert) =
///     search::certify_non_extension(&a, DEFAULT_NODE_BUDGET)?
/// else {
///     unreachable!("this set extends to no perfect difference set");
/// };
/// assert!(search::check_certificate(&cert, &a).valid);
/// # Ok::<(), difset::search::SearchError>(())
/// ```
pub fn certify_non_extension(a: &IntegerSet, budget: u64) -> Result<CertifyOutcome, SearchError> {
    if !is_sidon_differences(a) {
        return Err(NotSidonError.into());
    }
    let mut reason = "fewer than three forced absolute points in either parity frame".to_string();
    for shift in [0i64, 1] {
        let translated = a.translate(shift);
        let forced: Vec<i64> = translated
            .elements()
            .iter()
            .filter(|&&x| x % 2 == 0)
            .map(|&x| x / 2)
            .collect();
        if forced.len() < 3 {
            continue;
        }
        let mut offsets = BTreeSet::new();
        for &h in &forced {
            for &x in translated.elements() {
                offsets.insert(h - x);
            }
        }
        let mut saw_triple = false;
        for t in offsets {
            let on_line: Vec<i64> = forced
                .iter()
                .copied()
                .filter(|&h| translated.contains(h - t))
                .collect();
            if on_line.len() < 3 {
                continue;
            }
            saw_triple = true;
            let triple = [on_line[0], on_line[1], on_line[2]];
            let Some(even_case) = find_even_case(&translated, &forced, t) else {
                reason = format!(
                    "collinear triple found (shift {shift}, t = {t}) but no even-order witness"
                );
                continue;
            };
            let mut ints: Vec<i64> = forced.clone();
            ints.push(t);
            ints.extend_from_slice(&triple);
            match &even_case {
                EvenCaseWitness::OffLineWitness { h4, w, collision } => {
                    ints.extend_from_slice(&[*h4, *w]);
                    ints.extend_from_slice(collision);
                }
                EvenCaseWitness::SaturationWitness { a, u, collision } => {
                    ints.extend_from_slice(&[*a, *u]);
                    ints.extend_from_slice(collision);
                }
            }
            let m = ints.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
            let aliasing_bound = 2 * m + 1;
            let mut small = Vec::new();
            let mut extension_found = None;
            for q in 2.. {
                let v = q * q + q + 1;
                if v >= aliasing_bound {
                    break;
                }
                let outcome = extend_to_pds(&translated, Modulus::new(v), budget)?;
                match outcome.status {
                    SearchStatus::Found => {
                        extension_found = Some(v);
                        break;
                    }
                    SearchStatus::BudgetExceeded => {
                        return Err(SearchError::BudgetExceeded(budget));
                    }
                    SearchStatus::Exhausted | SearchStatus::PrecheckFailed => {
                        small.push(SmallModulusSearch { v, outcome });
                    }
                }
            }
            if let Some(v) = extension_found {
                // the set does extend below the bound, so no certificate
                // exists along this branch (or at all)
                return Ok(CertifyOutcome::Inconclusive {
                    reason: format!("an extension exists modulo {v}"),
                });
            }
            return Ok(CertifyOutcome::Certificate(NonExtensionCertificate {
                shift,
                forced_absolute: forced,
                collinear_witness: CollinearWitness { t, triple },
                even_case,
                aliasing_bound,
                small_moduli_exhausted: small,
            }));
        }
        if !saw_triple {
            reason =
                format!("no line offset collects three forced absolute points (shift {shift})");
        }
    }
    Ok(CertifyOutcome::Inconclusive { reason })
}

/// Off-line witnesses are preferred over saturation witnesses; within one
/// kind, candidates ascend (`h₄` resp. `a`), and the collision minimizing
/// the certificate's aliasing bound is chosen.
fn find_even_case(translated: &IntegerSet, forced: &[i64], t: i64) -> Option<EvenCaseWitness> {
    for &h4 in forced {
        let w = h4 - t;
        if let Some(collision) = best_collision(translated, w) {
            return Some(EvenCaseWitness::OffLineWitness { h4, w, collision });
        }
    }
    for &a in translated.elements() {
        let u = 2 * a + 2 * t;
        if let Some(collision) = best_collision(translated, u) {
            return Some(EvenCaseWitness::SaturationWitness { a, u, collision });
        }
    }
    None
}

/// Smallest collision `w − a₁ = a₂ − a₃` with all `aᵢ` in the set and
/// `{w, a₁} ≠ {a₂, a₃}`, ranked by (max |value|, |difference|, difference,
/// a₁, a₂). Returns `None` when `w`'s differences against the set avoid
/// every internal difference — in particular whenever `w` is itself a
/// member of a Sidon set.
fn best_collision(xs: &IntegerSet, w: i64) -> Option<[i64; 3]> {
    let mut best: Option<(u64, u64, i64, i64, i64, [i64; 3])> = None;
    for &a1 in xs.elements() {
        let d = w - a1;
        if d == 0 {
            continue;
        }
        for &a3 in xs.elements() {
            let a2 = a3 + d;
            if !xs.contains(a2) {
                continue;
            }
            if (w == a2 && a1 == a3) || (w == a3 && a1 == a2) {
                continue; // same unordered pair
            }
            let key = (
                [w, a1, a2, a3]
                    .iter()
                    .map(|x| x.unsigned_abs())
                    .max()
                    .unwrap(),
                d.unsigned_abs(),
                d,
                a1,
                a2,
            );
            let candidate = (key.0, key.1, key.2, key.3, key.4, [a1, a2, a3]);
            if best.as_ref().is_none_or(|b| {
                (
                    candidate.0,
                    candidate.1,
                    candidate.2,
                    candidate.3,
                    candidate.4,
                ) < (b.0, b.1, b.2, b.3, b.4)
            }) {
                best = Some(candidate);
            }
        }
    }
    best.map(|b| b.5)
}

/// Outcome of independent certificate validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub valid: bool,
    pub reasons: Vec<String>,
}

/// Re-validates a certificate against the set it claims to cover, using
/// integer arithmetic only plus re-runs of the recorded small-modulus
/// searches.
///
/// Moduli below the plane range (`v ∈ {1, 3}`, orders 0 and 1) need no
/// record: the collinear triple forces three distinct elements `2hᵢ` into
/// the set, and three distinct residues cannot embed in a difference set
/// of at most two elements.
pub fn check_certificate(cert: &NonExtensionCertificate, a: &IntegerSet) -> CertificateCheck {
    check_certificate_with_budget(cert, a, DEFAULT_NODE_BUDGET)
}

/// As [`check_certificate`] with an explicit node budget for the re-runs.
pub fn check_certificate_with_budget(
    cert: &NonExtensionCertificate,
    a: &IntegerSet,
    budget: u64,
) -> CertificateCheck {
    let mut reasons = Vec::new();
    let translated = a.translate(cert.shift);

    for &h in &cert.forced_absolute {
        if !translated.contains(2 * h) {
            reasons.push(format!("2·{h} is not an element of the translated set"));
        }
    }

    let CollinearWitness { t, triple } = &cert.collinear_witness;
    if triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2] {
        reasons.push("collinear triple is not three distinct points".into());
    }
    for h in triple {
        if !cert.forced_absolute.contains(h) {
            reasons.push(format!(
                "triple member {h} is not a recorded forced absolute"
            ));
        }
        if !translated.contains(h - t) {
            reasons.push(format!("{h} − {t} is not an element of the translated set"));
        }
    }

    let (anchor, collision) = match &cert.even_case {
        EvenCaseWitness::OffLineWitness { h4, w, collision } => {
            if !cert.forced_absolute.contains(h4) {
                reasons.push(format!("h₄ = {h4} is not a recorded forced absolute"));
            }
            if *w != h4 - t {
                reasons.push(format!("w = {w} differs from h₄ − t = {}", h4 - t));
            }
            (*w, collision)
        }
        EvenCaseWitness::SaturationWitness { a, u, collision } => {
            if !translated.contains(*a) {
                reasons.push(format!("a = {a} is not an element of the translated set"));
            }
            if *u != 2 * a + 2 * t {
                reasons.push(format!("u = {u} differs from 2a + 2t = {}", 2 * a + 2 * t));
            }
            (*u, collision)
        }
    };
    let [a1, a2, a3] = *collision;
    for x in [a1, a2, a3] {
        if !translated.contains(x) {
            reasons.push(format!(
                "collision member {x} is not an element of the translated set"
            ));
        }
    }
    if anchor - a1 != a2 - a3 {
        reasons.push(format!(
            "collision identity fails: {anchor} − {a1} = {} but {a2} − {a3} = {}",
            anchor - a1,
            a2 - a3
        ));
    }
    if anchor == a1 {
        reasons.push("collision difference is zero".into());
    }
    if (anchor == a2 && a1 == a3) || (anchor == a3 && a1 == a2) {
        reasons.push("collision pairs coincide".into());
    }

    // aliasing bound from scratch
    let mut ints: Vec<i64> = cert.forced_absolute.clone();
    ints.push(*t);
    ints.extend_from_slice(triple);
    match &cert.even_case {
        EvenCaseWitness::OffLineWitness { h4, w, collision } => {
            ints.extend_from_slice(&[*h4, *w]);
            ints.extend_from_slice(collision);
        }
        EvenCaseWitness::SaturationWitness { a, u, collision } => {
            ints.extend_from_slice(&[*a, *u]);
            ints.extend_from_slice(collision);
        }
    }
    let m = ints.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    if cert.aliasing_bound != 2 * m + 1 {
        reasons.push(format!(
            "aliasing bound {} differs from recomputed 2·{m}+1",
            cert.aliasing_bound
        ));
    }
    let v0 = 2 * m + 1;

    // coverage and re-runs below the bound
    for q in 2.. {
        let v = q * q + q + 1;
        if v >= v0 {
            break;
        }
        match cert.small_moduli_exhausted.iter().find(|s| s.v == v) {
            None => reasons.push(format!(
                "modulus {v} below the aliasing bound is not covered"
            )),
            Some(record) => {
                if !matches!(
                    record.outcome.status,
                    SearchStatus::Exhausted | SearchStatus::PrecheckFailed
                ) {
                    reasons.push(format!(
                        "recorded outcome for modulus {v} is not conclusive"
                    ));
                    continue;
                }
                // the re-run is the evidence; the recorded status is only
                // required to be conclusive, not to match verbatim, so
                // certificates from other producers remain checkable
                match extend_to_pds(&translated, Modulus::new(v), budget) {
                    Ok(rerun)
                        if matches!(
                            rerun.status,
                            SearchStatus::Exhausted | SearchStatus::PrecheckFailed
                        ) => {}
                    Ok(rerun) => reasons.push(format!(
                        "re-run at modulus {v} is not conclusive: {:?}",
                        rerun.status
                    )),
                    Err(e) => reasons.push(format!("re-run at modulus {v} failed: {e}")),
                }
            }
        }
    }

    CertificateCheck {
        valid: reasons.is_empty(),
        reasons,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pds::{check_pds, CheckMode};

    fn set(xs: &[i64]) -> IntegerSet {
        IntegerSet::new(xs.iter().copied())
    }

    /// Naive oracle: lexicographically first (q+1)-subset of ℤ/v that
    /// contains `image` and is a perfect difference set.
    fn oracle_extension(image: &ResidueSet, v: u64, k: usize) -> Option<Vec<u64>> {
        if image.len() > k {
            return None;
        }
        let free: Vec<u64> = (0..v).filter(|x| !image.contains(*x)).collect();
        let need = k - image.len();
        let mut pick = vec![0usize; need];
        for (i, p) in pick.iter_mut().enumerate() {
            *p = i;
        }
        if need == 0 {
            return perfect(image.elements(), v).then(|| image.elements().to_vec());
        }
        if free.len() < need {
            return None;
        }
        loop {
            let mut candidate: Vec<u64> = image.elements().to_vec();
            candidate.extend(pick.iter().map(|&i| free[i]));
            candidate.sort_unstable();
            if perfect(&candidate, v) {
                return Some(candidate);
            }
            // next combination
            let mut i = need;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if pick[i] != free.len() - (need - i) {
                    break;
                }
            }
            pick[i] += 1;
            for j in i + 1..need {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }

    fn perfect(xs: &[u64], v: u64) -> bool {
        let mut counts = vec![0u32; v as usize];
        for &x in xs {
            for &y in xs {
                if x != y {
                    counts[((x + v - y) % v) as usize] += 1;
                }
            }
        }
        counts[1..].iter().all(|&c| c == 1)
    }

    #[test]
    fn small_extensions() {
        let out = extend_to_pds(&set(&[1, 2]), Modulus::new(7), 1_000_000).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        assert_eq!(out.witness.unwrap().elements(), &[1, 2, 4]);

        let out = extend_to_pds(&set(&[1]), Modulus::new(7), 1_000_000).unwrap();
        assert_eq!(out.status, SearchStatus::Found);

        assert_eq!(
            extend_to_pds(&set(&[1, 2]), Modulus::new(12), 100).err(),
            Some(SearchError::InvalidModulus(12))
        );
    }

    #[test]
    fn prechecks_fire() {
        // 1 ≡ 8 (mod 7)
        let out = extend_to_pds(&set(&[1, 2, 4, 8]), Modulus::new(7), 100).unwrap();
        assert_eq!(out.status, SearchStatus::PrecheckFailed);
        assert_eq!(
            out.precheck_reason,
            Some(PrecheckReason::Injectivity { pair: [1, 8] })
        );

        // 13 − 4 ≡ 1 − 13 (mod 21)
        let out = extend_to_pds(&set(&[1, 2, 4, 8, 13]), Modulus::new(21), 100).unwrap();
        assert_eq!(out.status, SearchStatus::PrecheckFailed);
        assert_eq!(out.precheck_reason, Some(PrecheckReason::NotSidonMod));

        // five elements cannot fit into a 4-element set
        let out = extend_to_pds(&set(&[1, 2, 4, 8, 13]), Modulus::new(13), 100).unwrap();
        assert_eq!(out.status, SearchStatus::PrecheckFailed);
        assert_eq!(
            out.precheck_reason,
            Some(PrecheckReason::Size {
                set_size: 5,
                capacity: 4
            })
        );
    }

    #[test]
    fn found_witnesses_are_sound() {
        for (xs, v) in [
            (vec![1i64, 2], 7u64),
            (vec![1], 7),
            (vec![0, 1], 13),
            (vec![1, 2, 4, 8], 73),
            (vec![], 21),
        ] {
            let a = set(&xs);
            let out = extend_to_pds(&a, Modulus::new(v), DEFAULT_NODE_BUDGET).unwrap();
            assert_eq!(out.status, SearchStatus::Found, "{xs:?} mod {v}");
            let w = out.witness.unwrap();
            assert!(check_pds(&w, CheckMode::Strict).unwrap().is_pds);
            for &x in a.elements() {
                assert!(w.contains(crate::modular::normalize(x, Modulus::new(v))));
            }
        }
    }

    #[test]
    fn power_of_two_set_extends_only_at_order_eight() {
        let a = set(&[1, 2, 4, 8]);
        let outcomes = sweep(&a, 8, ModulusFilter::All, DEFAULT_NODE_BUDGET).unwrap();
        for (q, out) in &outcomes {
            if *q == 8 {
                assert_eq!(out.status, SearchStatus::Found, "q={q}");
            } else {
                assert_ne!(out.status, SearchStatus::Found, "q={q}");
            }
        }
        // prime orders only: nothing
        let primes = sweep(&a, 8, ModulusFilter::Primes, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(primes.keys().copied().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
        assert!(primes.values().all(|o| o.status != SearchStatus::Found));
    }

    #[test]
    fn sweep_parallel_matches_sequential() {
        let a = set(&[1, 2, 4, 8]);
        let seq = sweep(&a, 8, ModulusFilter::All, DEFAULT_NODE_BUDGET).unwrap();
        let par = sweep_parallel(&a, 8, ModulusFilter::All, DEFAULT_NODE_BUDGET, 4).unwrap();
        assert_eq!(seq, par);
        assert!(sweep(&set(&[1, 2, 3]), 5, ModulusFilter::All, 100).is_err());
    }

    #[test]
    fn oracle_agreement_small_moduli() {
        use crate::rng::SplitMix64;
        let mut rng = SplitMix64::new(0x0facade);
        for &v in &[7u64, 13, 21] {
            let q = Modulus::new(v).plane_order().unwrap();
            for _ in 0..40 {
                let n = (rng.below(4) + 1) as usize;
                let a = IntegerSet::new((0..n).map(|_| rng.below(v) as i64));
                let out = extend_to_pds(&a, Modulus::new(v), DEFAULT_NODE_BUDGET).unwrap();
                match reduce_int_set(&a, Modulus::new(v)) {
                    Err(_) => assert_eq!(out.status, SearchStatus::PrecheckFailed),
                    Ok(image) => {
                        let oracle = oracle_extension(&image, v, (q + 1) as usize);
                        match (out.status, oracle) {
                            (SearchStatus::Found, Some(w)) => {
                                assert_eq!(out.witness.unwrap().elements(), w.as_slice())
                            }
                            (SearchStatus::PrecheckFailed | SearchStatus::Exhausted, None) => {}
                            (status, oracle) => {
                                panic!("disagreement at v={v}: {status:?} vs {oracle:?}")
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_agreement_at_modulus_31() {
        // the largest desk-scale modulus the naive oracle still covers
        use crate::rng::SplitMix64;
        let mut rng = SplitMix64::new(31);
        let v = Modulus::new(31);
        for _ in 0..10 {
            let n = (rng.below(6) + 1) as usize;
            let a = IntegerSet::new((0..n).map(|_| rng.below(31) as i64));
            let out = extend_to_pds(&a, v, DEFAULT_NODE_BUDGET).unwrap();
            match reduce_int_set(&a, v) {
                Err(_) => assert_eq!(out.status, SearchStatus::PrecheckFailed),
                Ok(image) => {
                    let oracle = oracle_extension(&image, 31, 6);
                    match (out.status, oracle) {
                        (SearchStatus::Found, Some(w)) => {
                            assert_eq!(out.witness.unwrap().elements(), w.as_slice())
                        }
                        (SearchStatus::PrecheckFailed | SearchStatus::Exhausted, None) => {}
                        (status, oracle) => {
                            panic!("disagreement at v=31: {status:?} vs {oracle:?}")
                        }
                    }
                }
            }
        }
        // the four-powers-of-two exhaustion at v=31 agrees with the oracle
        let a = set(&[1, 2, 4, 8]);
        let out = extend_to_pds(&a, v, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(out.status, SearchStatus::Exhausted);
        let image = reduce_int_set(&a, v).unwrap();
        assert_eq!(oracle_extension(&image, 31, 6), None);
    }

    #[test]
    fn admissible_orders_examples() {
        // q = 2 fails injectivity; q = 3 fails the modular Sidon check
        // (8 − 1 ≡ 2 − 8 mod 13); the rest pass the prechecks.
        let a = set(&[1, 2, 4, 8]);
        assert_eq!(admissible_orders(&a, 8).unwrap(), vec![4, 5, 6, 7, 8]);

        // five elements need q ≥ 4, and q = 4 fails the mod-21 Sidon check
        let a = set(&[1, 2, 4, 8, 13]);
        assert_eq!(admissible_orders(&a, 4).unwrap(), Vec::<u64>::new());
        assert!(admissible_orders(&set(&[1, 2, 3]), 5).is_err());
    }

    #[test]
    fn mian_chowla_five_terms_certificate() {
        let a = set(&[1, 2, 4, 8, 13]);
        let cert = match certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap() {
            CertifyOutcome::Certificate(c) => c,
            CertifyOutcome::Inconclusive { reason } => panic!("inconclusive: {reason}"),
        };
        assert_eq!(cert.shift, 0);
        assert_eq!(cert.forced_absolute, vec![1, 2, 4]);
        assert_eq!(
            cert.collinear_witness,
            CollinearWitness {
                t: 0,
                triple: [1, 2, 4]
            }
        );
        assert_eq!(
            cert.even_case,
            EvenCaseWitness::SaturationWitness {
                a: 8,
                u: 16,
                collision: [13, 4, 1], // 16 − 13 = 4 − 1
            }
        );
        assert_eq!(cert.aliasing_bound, 33);
        assert_eq!(
            cert.small_moduli_exhausted
                .iter()
                .map(|s| s.v)
                .collect::<Vec<_>>(),
            vec![7, 13, 21, 31]
        );
        let check = check_certificate(&cert, &a);
        assert!(check.valid, "{:?}", check.reasons);
    }

    #[test]
    fn hall_set_certificate() {
        let a = set(&[-8, -6, 0, 1, 4]);
        let cert = match certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap() {
            CertifyOutcome::Certificate(c) => c,
            CertifyOutcome::Inconclusive { reason } => panic!("inconclusive: {reason}"),
        };
        assert_eq!(cert.shift, 0);
        assert_eq!(cert.forced_absolute, vec![-4, -3, 0, 2]);
        assert_eq!(
            cert.collinear_witness,
            CollinearWitness {
                t: -4,
                triple: [-4, -3, 0]
            }
        );
        assert_eq!(
            cert.even_case,
            EvenCaseWitness::OffLineWitness {
                h4: 2,
                w: 6,
                collision: [0, 0, -6], // 6 − 0 = 0 − (−6)
            }
        );
        assert_eq!(cert.aliasing_bound, 13);
        let check = check_certificate(&cert, &a);
        assert!(check.valid, "{:?}", check.reasons);
    }

    #[test]
    fn translated_hall_set_certificate() {
        let a = set(&[1, 3, 9, 10, 13]);
        let cert = match certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap() {
            CertifyOutcome::Certificate(c) => c,
            CertifyOutcome::Inconclusive { reason } => panic!("inconclusive: {reason}"),
        };
        // only one even element, so the odd parity frame must be used
        assert_eq!(cert.shift, 1);
        let check = check_certificate(&cert, &a);
        assert!(check.valid, "{:?}", check.reasons);
    }

    #[test]
    fn extendable_sets_are_inconclusive() {
        let out = certify_non_extension(&set(&[1, 2]), DEFAULT_NODE_BUDGET).unwrap();
        assert!(matches!(out, CertifyOutcome::Inconclusive { .. }));
        assert!(certify_non_extension(&set(&[1, 2, 3]), 100).is_err());
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let a = set(&[1, 2, 4, 8, 13]);
        let CertifyOutcome::Certificate(cert) =
            certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap()
        else {
            panic!("expected certificate");
        };

        let mut tampered = cert.clone();
        tampered.even_case = EvenCaseWitness::SaturationWitness {
            a: 8,
            u: 16,
            collision: [13, 4, 2], // 16 − 13 ≠ 4 − 2
        };
        let check = check_certificate(&tampered, &a);
        assert!(!check.valid);
        assert!(check.reasons.iter().any(|r| r.contains("identity")));

        let mut gap = cert.clone();
        gap.small_moduli_exhausted.retain(|s| s.v != 13);
        let check = check_certificate(&gap, &a);
        assert!(!check.valid);
        assert!(check.reasons.iter().any(|r| r.contains("13")));

        let mut wrong_bound = cert.clone();
        wrong_bound.aliasing_bound = 7;
        assert!(!check_certificate(&wrong_bound, &a).valid);

        // certificates do not transfer to other sets
        let other = set(&[0, 1, 3]);
        assert!(!check_certificate(&cert, &other).valid);
    }

    #[test]
    fn certified_sets_never_extend_in_sweeps() {
        for xs in [
            vec![1i64, 2, 4, 8, 13],
            vec![-8, -6, 0, 1, 4],
            vec![1, 3, 9, 10, 13],
        ] {
            let a = set(&xs);
            let CertifyOutcome::Certificate(_) =
                certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap()
            else {
                panic!("expected certificate for {xs:?}");
            };
            let outcomes =
                sweep(&a, DEFAULT_Q_MAX, ModulusFilter::All, DEFAULT_NODE_BUDGET).unwrap();
            assert!(outcomes.values().all(|o| o.status != SearchStatus::Found));
        }
    }

    #[test]
    fn aliasing_bound_transfers_for_large_moduli() {
        // for v ≥ V₀ all certificate integers stay distinct modulo v and the
        // collision identity keeps holding on residues
        let a = set(&[1, 2, 4, 8, 13]);
        let CertifyOutcome::Certificate(cert) =
            certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap()
        else {
            panic!("expected certificate");
        };
        let mut ints: Vec<i64> = cert.forced_absolute.clone();
        ints.push(cert.collinear_witness.t);
        let EvenCaseWitness::SaturationWitness {
            a: sa,
            u,
            collision,
        } = &cert.even_case
        else {
            panic!("expected saturation witness");
        };
        ints.extend_from_slice(&[*sa, *u]);
        ints.extend_from_slice(collision);
        for v in [43u64, 57, 73, 91, 133] {
            assert!(v >= cert.aliasing_bound);
            let m = Modulus::new(v);
            let residues: Vec<u64> = ints
                .iter()
                .map(|&x| crate::modular::normalize(x, m))
                .collect();
            for (i, &x) in ints.iter().enumerate() {
                for (j, &y) in ints.iter().enumerate() {
                    assert_eq!(x == y, residues[i] == residues[j], "v={v} {x} {y}");
                }
            }
            let [a1, a2, a3] = *collision;
            assert_eq!(
                crate::modular::normalize(u - a1, m),
                crate::modular::normalize(a2 - a3, m)
            );
            assert_ne!(crate::modular::normalize(u - a1, m), 0);
        }
    }

    #[test]
    fn certificate_document_round_trip() {
        let a = set(&[-8, -6, 0, 1, 4]);
        let CertifyOutcome::Certificate(cert) =
            certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap()
        else {
            panic!("expected certificate");
        };
        let doc = CertificateDocument {
            version: CERTIFICATE_VERSION,
            set: a.clone(),
            certificate: cert.clone(),
        };
        let json = serde_json::to_string_pretty(&doc).unwrap();
        assert!(json.contains("\"forced_absolute\""));
        assert!(json.contains("\"collinear_witness\""));
        assert!(json.contains("\"even_case\""));
        assert!(json.contains("\"aliasing_bound\""));
        assert!(json.contains("\"small_moduli_exhausted\""));
        assert!(json.contains("\"OffLineWitness\""));
        let back: CertificateDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.certificate, cert);
        assert!(check_certificate(&back.certificate, &back.set).valid);
    }

    #[test]
    fn certifier_is_sound_across_a_small_universe() {
        // every certificate issued over a whole family of small Sidon sets
        // must validate and must never coexist with a successful sweep
        let mut certified = 0;
        let mut inconclusive = 0;
        for mask in 0u32..(1 << 14) {
            if mask.count_ones() != 4 && mask.count_ones() != 5 {
                continue;
            }
            let xs: Vec<i64> = (0..14)
                .filter(|i| mask >> i & 1 == 1)
                .map(i64::from)
                .collect();
            let a = IntegerSet::new(xs);
            if !is_sidon_differences(&a) {
                continue;
            }
            match certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap() {
                CertifyOutcome::Inconclusive { .. } => inconclusive += 1,
                CertifyOutcome::Certificate(cert) => {
                    certified += 1;
                    let check = check_certificate(&cert, &a);
                    assert!(check.valid, "{a:?}: {:?}", check.reasons);
                    let outcomes = sweep(&a, 7, ModulusFilter::All, DEFAULT_NODE_BUDGET).unwrap();
                    assert!(
                        outcomes.values().all(|o| o.status != SearchStatus::Found),
                        "{a:?} was certified but extends"
                    );
                }
            }
        }
        assert!(certified > 0, "the universe contains certifiable sets");
        assert!(inconclusive > 0);
        println!("small universe: {certified} certified, {inconclusive} inconclusive");
    }

    #[test]
    fn strong_prune_changes_nodes_not_answers() {
        use crate::rng::SplitMix64;
        let mut rng = SplitMix64::new(0xacc0);
        for _ in 0..30 {
            let n = (rng.below(4) + 1) as usize;
            let a = IntegerSet::new((0..n).map(|_| rng.below(40) as i64));
            for v in [7u64, 13, 21, 31] {
                let plain = extend_to_pds(&a, Modulus::new(v), DEFAULT_NODE_BUDGET).unwrap();
                let pruned =
                    extend_to_pds_with_options(&a, Modulus::new(v), DEFAULT_NODE_BUDGET, true)
                        .unwrap();
                assert_eq!(plain.status, pruned.status, "{a:?} mod {v}");
                assert_eq!(plain.witness, pruned.witness, "{a:?} mod {v}");
                assert!(pruned.nodes_explored <= plain.nodes_explored);
            }
        }
        // the prune genuinely fires somewhere
        let a = set(&[1, 2, 4, 8, 13]);
        let plain = extend_to_pds(&a, Modulus::new(91), DEFAULT_NODE_BUDGET).unwrap();
        let pruned =
            extend_to_pds_with_options(&a, Modulus::new(91), DEFAULT_NODE_BUDGET, true).unwrap();
        assert_eq!(plain.status, SearchStatus::Exhausted);
        assert_eq!(pruned.status, SearchStatus::Exhausted);
        assert!(pruned.nodes_explored < plain.nodes_explored);
    }

    #[test]
    fn node_counts_are_deterministic() {
        let a = set(&[1, 2, 4, 8]);
        let x = extend_to_pds(&a, Modulus::new(73), DEFAULT_NODE_BUDGET).unwrap();
        let y = extend_to_pds(&a, Modulus::new(73), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(x, y);
        assert!(x.nodes_explored > 0);

        // a tiny budget trips the budget status
        let out = extend_to_pds(&set(&[]), Modulus::new(91), 5).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert_eq!(out.nodes_explored, 6);
    }
}
