//! Enumeration of Donagi-Morrison lift candidates and the per-genus audit.
//!
//! Given a Brill-Noether special `g^r_d` whose Lazarsfeld-Mukai bundle has a
//! stable quotient by a line bundle, the determinant of that quotient is a
//! potential lift of type `(r', d')` constrained by
//!
//! ```text
//! r' >= r,
//! gamma(M) <= gamma(A) - delta + floor(delta/r),   delta = r' - r,
//! d       <= d'      <= d + delta + floor(delta/r),
//! gamma(C) <= gamma(M),
//! delta   <= (r/(r-1)) (gamma(A) + 3/2 - g/2).
//! ```
//!
//! [`enumerate_lift_candidates`] walks exactly this box and attaches, per
//! candidate, the quotient-bundle invariants and a ledger recording each
//! inequality. [`audit_genus`] replays the whole genus-14..19 case analysis:
//! every non-computing `g^r_d` is enumerated (rank-4 cases first reduced to
//! rank 3) and each candidate is certified as a Brill-Noether special marking
//! via the `h^0` product criterion.

use std::cmp::{max, min};
use std::fmt;

use num_rational::Ratio;

use crate::bn::{
    check_genus, check_nonneg, gamma_formula, generic_clifford, rho, rho_formula,
    CurveCliffordContext, LinearSystemType,
};
use crate::bundles::{
    min_c2_for_stable, mukai_self_pairing, quotient_invariants, BundleInvariants,
};
use crate::error::{domain, Error, Result};
use crate::lattice::{discriminant, marking_certificate, MarkingCertificate};
use crate::scalar::{c, Scalar};

/// One recorded constraint check. The box inequalities are satisfied by
/// construction for every emitted candidate; the stability entries
/// (`mukai_feasible`, `min_c2_bound`) and the strictness flag
/// `gamma_m_exceeds_gamma_c` are informational and may be false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub id: &'static str,
    pub satisfied: bool,
    pub strict_form: &'static str,
}

/// A potential Donagi-Morrison lift type `(r', d')` of the source `g^r_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftCandidate<T: Scalar> {
    pub r_p: T,
    pub d_p: T,
    /// `r' - r`.
    pub delta: T,
    /// `d' - 2r'`.
    pub gamma_m: T,
    /// `rho(g, r', d')`.
    pub rho_p: T,
    /// Invariants of the LM-bundle quotient whose determinant has this type.
    pub quotient: BundleInvariants<T>,
    pub ledger: Vec<LedgerEntry>,
}

/// How a case of the genus audit was handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Lift candidates enumerated for the source type itself.
    Direct,
    /// Rank-4 source replaced by the rank-3 system of degree `d-1` first.
    Rank4Reduced,
    /// `d <= r` forces a special marking outright; nothing to enumerate.
    LargeSlope,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Rank4Reduced => "rank4_reduced",
            Route::LargeSlope => "large_slope",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A lift candidate together with its marking certificate and the
/// discriminant of the induced lattice (metadata; not part of the verdict).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditedCandidate<T: Scalar> {
    pub candidate: LiftCandidate<T>,
    pub certificate: MarkingCertificate<T>,
    pub disc: T,
}

/// One non-computing case of the genus audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditCase<T: Scalar> {
    pub source: LinearSystemType<T>,
    pub route: Route,
    pub reduced_to: Option<LinearSystemType<T>>,
    pub candidates: Vec<AuditedCandidate<T>>,
    /// True iff every candidate has `rho(g,r',d') < 0` (or the route is
    /// `large_slope`); false when the rank-4 reduction is unavailable.
    pub verdict: bool,
}

/// The full case analysis for one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport<T: Scalar> {
    pub g: T,
    /// The case analysis is a theorem for `14 <= g <= 19`; outside that
    /// range the report is still computed but flagged.
    pub in_theorem_range: bool,
    pub cases: Vec<AuditCase<T>>,
}

impl<T: Scalar> AuditReport<T> {
    pub fn verdict(&self) -> bool {
        self.cases.iter().all(|case| case.verdict)
    }
}

/// Outcome of the slope test `d <= r`; `rho_value` is `-rg - (r+1)(r-d)`,
/// which equals `rho(g,r,d)` identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeSlope<T: Scalar> {
    pub applies: bool,
    pub rho_value: T,
}

/// True iff `(r', d')` is a potential Donagi-Morrison lift type of the
/// source: `gamma(r',d') <= gamma(r,d)` and `d' >= d`.
pub fn potential_lift<T: Scalar>(g: &T, r: &T, d: &T, r_p: &T, d_p: &T) -> bool {
    let _ = g;
    gamma_formula(r_p, d_p) <= gamma_formula(r, d) && d_p >= d
}

/// `floor((r/(r-1)) (gamma_A + 3/2 - g/2))`, the largest admissible
/// `delta = r' - r` when `gamma(M) >= floor((g-1)/2)`. May be negative.
pub fn delta_upper<T: Scalar>(g: &T, r: &T, gamma_a: &T) -> Result<T> {
    check_genus(g)?;
    if *r < c(2) {
        return Err(domain(format!("r must be >= 2 (got {r})")));
    }
    let bound = Ratio::new(r.clone(), r.clone() - T::one())
        * (Ratio::from_integer(gamma_a.clone()) + Ratio::new(c::<T>(3), c(2))
            - Ratio::new(g.clone(), c(2)));
    Ok(bound.floor().to_integer())
}

fn validate_enumeration_input<T: Scalar>(g: &T, r: &T, d: &T, gamma_c: &T) -> Result<T> {
    let src_rho = rho(g, r, d)?;
    if *r < c(2) {
        return Err(domain(format!("r must be >= 2 (got {r})")));
    }
    if !src_rho.is_negative() {
        return Err(domain(format!(
            "rho(g,r,d) must be negative (got rho = {src_rho})"
        )));
    }
    CurveCliffordContext::new(g.clone(), gamma_c.clone())?;
    Ok(src_rho)
}

/// All potential lift types `(r', d')` of a Brill-Noether special `g^r_d`
/// on a curve of Clifford index `gamma_c`, sorted lexicographically.
///
/// `delta` runs from 0 to `max(0, delta_upper)`; for each `delta` the
/// degree window is cut by both the degree bound and the `gamma(M)` window
/// `gamma_c <= gamma(M) <= gamma(A) - delta + floor(delta/r)`.
pub fn enumerate_lift_candidates<T: Scalar>(
    g: &T,
    r: &T,
    d: &T,
    gamma_c: &T,
) -> Result<Vec<LiftCandidate<T>>> {
    let src_rho = validate_enumeration_input(g, r, d, gamma_c)?;
    let gamma_a = gamma_formula(r, d);
    let du = max(T::zero(), delta_upper(g, r, &gamma_a)?);
    let two = c::<T>(2);

    let mut out = Vec::new();
    let mut delta = T::zero();
    while delta <= du {
        let r_p = r.clone() + delta.clone();
        let fl = delta.div_floor(r);
        let gamma_hi = gamma_a.clone() - delta.clone() + fl.clone();
        let d_lo = max(d.clone(), gamma_c.clone() + two.clone() * r_p.clone());
        let d_hi = min(
            d.clone() + delta.clone() + fl.clone(),
            gamma_hi + two.clone() * r_p.clone(),
        );
        let mut d_p = d_lo;
        while d_p <= d_hi {
            out.push(build_candidate(
                g, r, d, gamma_c, &src_rho, &gamma_a, &r_p, &d_p, &delta, &fl,
            )?);
            d_p = d_p + T::one();
        }
        delta = delta + T::one();
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn build_candidate<T: Scalar>(
    g: &T,
    r: &T,
    d: &T,
    gamma_c: &T,
    src_rho: &T,
    gamma_a: &T,
    r_p: &T,
    d_p: &T,
    delta: &T,
    fl: &T,
) -> Result<LiftCandidate<T>> {
    let gamma_m = gamma_formula(r_p, d_p);
    let rho_p = rho_formula(g, r_p, d_p);
    let quotient = quotient_invariants(g, r, d, r_p, d_p)?;
    let pairing = mukai_self_pairing(&quotient.mukai_vector())?;
    let min_c2 = min_c2_for_stable(quotient.rank(), quotient.c1_sq())?;

    let ledger = vec![
        LedgerEntry {
            id: "r_prime_ge_r",
            satisfied: r_p >= r,
            strict_form: "r' >= r",
        },
        LedgerEntry {
            id: "gamma_m_le_gamma_a",
            satisfied: gamma_m <= *gamma_a,
            strict_form: "gamma(M) <= gamma(A)",
        },
        LedgerEntry {
            id: "eq1_gamma_bound",
            satisfied: gamma_m <= gamma_a.clone() - delta.clone() + fl.clone(),
            strict_form: "gamma(M) <= gamma(A) - delta + floor(delta/r)",
        },
        LedgerEntry {
            id: "eq2_degree_bound",
            satisfied: *d_p <= d.clone() + delta.clone() + fl.clone(),
            strict_form: "d' <= d + delta + floor(delta/r)",
        },
        LedgerEntry {
            id: "rho_monotone",
            satisfied: rho_p <= *src_rho,
            strict_form: "rho(g,r',d') <= rho(g,r,d)",
        },
        LedgerEntry {
            id: "mukai_feasible",
            satisfied: pairing >= c(-2),
            strict_form: "<v(E/N), v(E/N)> >= -2",
        },
        LedgerEntry {
            id: "min_c2_bound",
            satisfied: *quotient.c2() >= min_c2,
            strict_form: "c2(E/N) >= (rk-1)c1^2/(2 rk) + rk - 1/rk",
        },
        LedgerEntry {
            id: "quotient_gamma_bound",
            satisfied: *quotient.gamma() <= gamma_a.clone() - gamma_c.clone(),
            strict_form: "gamma(E/N) <= gamma(A) - gamma(C)",
        },
        LedgerEntry {
            id: "gamma_m_exceeds_gamma_c",
            satisfied: gamma_m > *gamma_c,
            strict_form: "gamma(M) > gamma(C)",
        },
    ];

    Ok(LiftCandidate {
        r_p: r_p.clone(),
        d_p: d_p.clone(),
        delta: delta.clone(),
        gamma_m,
        rho_p,
        quotient,
        ledger,
    })
}

/// Brute-force cross-check: filter the box `r <= r' <= r+20`,
/// `d <= d' <= d+40` by the raw inequalities alone. Sorted lexicographically.
pub fn lift_candidates_box<T: Scalar>(
    g: &T,
    r: &T,
    d: &T,
    gamma_c: &T,
) -> Result<Vec<(T, T)>> {
    validate_enumeration_input(g, r, d, gamma_c)?;
    let gamma_a = gamma_formula(r, d);
    let mut out = Vec::new();
    let mut r_p = r.clone();
    let r_end = r.clone() + c(20);
    while r_p <= r_end {
        let delta = r_p.clone() - r.clone();
        let fl = delta.div_floor(r);
        let mut d_p = d.clone();
        let d_end = d.clone() + c(40);
        while d_p <= d_end {
            let gamma_m = gamma_formula(&r_p, &d_p);
            if gamma_m >= *gamma_c
                && gamma_m <= gamma_a.clone() - delta.clone() + fl.clone()
                && d_p <= d.clone() + delta.clone() + fl.clone()
            {
                out.push((r_p.clone(), d_p.clone()));
            }
            d_p = d_p + T::one();
        }
        r_p = r_p + T::one();
    }
    Ok(out)
}

/// All non-computing types in genus `g`: `r >= 1`, `d <= g-1`,
/// `rho(g,r,d) < 0`, `gamma(r,d) > floor((g-1)/2)`. Sorted lexicographically.
pub fn enumerate_non_computing<T: Scalar>(g: &T) -> Result<Vec<(T, T)>> {
    check_genus(g)?;
    let gamma_gen = generic_clifford(g)?;
    let gm1 = g.clone() - T::one();
    let two = c::<T>(2);
    let mut out = Vec::new();
    let mut r = T::one();
    loop {
        // gamma(r,d) > gamma_gen forces d >= 2r + gamma_gen + 1.
        let d_min = two.clone() * r.clone() + gamma_gen.clone() + T::one();
        if d_min > gm1 {
            break;
        }
        let mut d = d_min;
        while d <= gm1 {
            if rho_formula(g, &r, &d).is_negative() {
                out.push((r.clone(), d.clone()));
            }
            d = d + T::one();
        }
        r = r + T::one();
    }
    Ok(out)
}

/// Replace a Brill-Noether special `g^4_d` by the `g^3_{d-1}` obtained by
/// subtracting a non-basepoint. Requires `rho(g,4,d) < 0`; fails with
/// [`Error::ReductionUnavailable`] when `rho(g,3,d-1) >= 0`, i.e. when the
/// rank-4 locus is expected maximal and the containment trick no longer
/// applies.
pub fn reduce_rank4<T: Scalar>(g: &T, d: &T) -> Result<(T, T)> {
    check_genus(g)?;
    if *d < T::one() {
        return Err(domain(format!("d must be >= 1 (got {d})")));
    }
    let rho4 = rho_formula(g, &c(4), d);
    if !rho4.is_negative() {
        return Err(domain(format!(
            "rho(g,4,d) must be negative (got rho = {rho4})"
        )));
    }
    let d2 = d.clone() - T::one();
    let rho3 = rho_formula(g, &c(3), &d2);
    if !rho3.is_negative() {
        return Err(Error::ReductionUnavailable(format!(
            "rho({g},3,{d2}) = {rho3} >= 0, so the g^3_{d2} is no longer Brill-Noether special"
        )));
    }
    Ok((c(3), d2))
}

/// Whether the rank-`r` Brill-Noether locus at `(g, d)` is expected maximal:
/// `rho(g,r,d) < 0`, `rho(g,r,d+1) >= 0`, `rho(g,r-1,d-1) >= 0`.
pub fn is_expected_maximal<T: Scalar>(g: &T, r: &T, d: &T) -> Result<bool> {
    check_genus(g)?;
    if *r < T::one() {
        return Err(domain(format!("r must be >= 1 (got {r})")));
    }
    check_nonneg(d, "d")?;
    Ok(rho_formula(g, r, d).is_negative()
        && !rho_formula(g, r, &(d.clone() + T::one())).is_negative()
        && !rho_formula(g, &(r.clone() - T::one()), &(d.clone() - T::one())).is_negative())
}

/// The slope test: a globally generated type with `d <= r` has
/// `rho = -rg - (r+1)(r-d) < 0` and is special outright.
pub fn large_slope_special<T: Scalar>(g: &T, r: &T, d: &T) -> Result<LargeSlope<T>> {
    check_genus(g)?;
    if *r < T::one() {
        return Err(domain(format!("r must be >= 1 (got {r})")));
    }
    check_nonneg(d, "d")?;
    let rho_value =
        -(r.clone() * g.clone()) - (r.clone() + T::one()) * (r.clone() - d.clone());
    assert_eq!(
        rho_value,
        rho_formula(g, r, d),
        "-rg - (r+1)(r-d) must equal rho(g,r,d)"
    );
    Ok(LargeSlope {
        applies: d <= r,
        rho_value,
    })
}

/// Degree bound `g(r-1)/r + (2g-2)/(r(r+1)) + r - 1/r` under which a
/// sub-line bundle of the LM bundle is forced to be nontrivial; compare
/// `d < bound` strictly.
pub fn proof_strategy_bound<T: Scalar>(g: &T, r: &T) -> Result<Ratio<T>> {
    check_genus(g)?;
    if *r < c(2) {
        return Err(domain(format!("r must be >= 2 (got {r})")));
    }
    let one = T::one();
    Ok(
        Ratio::new(g.clone() * (r.clone() - one.clone()), r.clone())
            + Ratio::new(
                c::<T>(2) * g.clone() - c(2),
                r.clone() * (r.clone() + one.clone()),
            )
            + Ratio::from_integer(r.clone())
            - Ratio::new(one.clone(), r.clone()),
    )
}

/// Degree bound for lifting a `g^3_d`:
/// `min{ 5g/4 + (mu+m+9)/2, 5g/4 + m/2 + 5, 3g/2 + 5, (g+g-1)/2 + 4 }`
/// evaluated at the curve's Clifford index `gamma`, the minimal effective
/// square `m`, and the minimal positive slope `mu`. Genera 2, 3, 4, 8 are
/// outside the theorem and rejected.
pub fn g3_lifting_bound<T: Scalar>(g: &T, gamma: &T, m: &T, mu: &T) -> Result<Ratio<T>> {
    check_genus(g)?;
    if *g == c(2) || *g == c(3) || *g == c(4) || *g == c(8) {
        return Err(domain(format!("g must not be one of {{2,3,4,8}} (got {g})")));
    }
    check_nonneg(gamma, "gamma")?;
    check_nonneg(m, "m")?;
    check_nonneg(mu, "mu")?;
    let five_quarters = Ratio::new(c::<T>(5) * gamma.clone(), c(4));
    let t1 = five_quarters.clone()
        + Ratio::new(mu.clone() + m.clone() + c(9), c(2));
    let t2 = five_quarters + Ratio::new(m.clone(), c(2)) + Ratio::from_integer(c(5));
    let t3 = Ratio::new(c::<T>(3) * gamma.clone(), c(2)) + Ratio::from_integer(c(5));
    let t4 = Ratio::new(gamma.clone() + g.clone() - T::one(), c(2))
        + Ratio::from_integer(c(4));
    Ok(min(min(t1, t2), min(t3, t4)))
}

/// Replay the case analysis for one genus: each non-computing type is routed
/// (slope test, rank-4 reduction, or direct enumeration), its candidates are
/// enumerated at the generic Clifford index, and every candidate is certified
/// via the `h^0` product criterion. The lattice discriminant of each
/// candidate marking is attached as metadata.
pub fn audit_genus<T: Scalar>(g: &T) -> Result<AuditReport<T>> {
    check_genus(g)?;
    let gamma_c = generic_clifford(g)?;
    let in_theorem_range = *g >= c(14) && *g <= c(19);
    let mut cases = Vec::new();
    for (r, d) in enumerate_non_computing(g)? {
        let source = LinearSystemType::new(g.clone(), r.clone(), d.clone())?;
        let slope = large_slope_special(g, &r, &d)?;
        let case = if slope.applies {
            AuditCase {
                source,
                route: Route::LargeSlope,
                reduced_to: None,
                candidates: Vec::new(),
                verdict: true,
            }
        } else if r == c(4) {
            match reduce_rank4(g, &d) {
                Ok((r2, d2)) => {
                    let reduced = LinearSystemType::new(g.clone(), r2.clone(), d2.clone())?;
                    let candidates = audited_candidates(g, &r2, &d2, &gamma_c)?;
                    let verdict = all_rho_negative(&candidates);
                    AuditCase {
                        source,
                        route: Route::Rank4Reduced,
                        reduced_to: Some(reduced),
                        candidates,
                        verdict,
                    }
                }
                Err(Error::ReductionUnavailable(_)) => AuditCase {
                    source,
                    route: Route::Rank4Reduced,
                    reduced_to: None,
                    candidates: Vec::new(),
                    verdict: false,
                },
                Err(e) => return Err(e),
            }
        } else {
            let candidates = audited_candidates(g, &r, &d, &gamma_c)?;
            let verdict = all_rho_negative(&candidates);
            AuditCase {
                source,
                route: Route::Direct,
                reduced_to: None,
                candidates,
                verdict,
            }
        };
        cases.push(case);
    }
    Ok(AuditReport {
        g: g.clone(),
        in_theorem_range,
        cases,
    })
}

fn all_rho_negative<T: Scalar>(candidates: &[AuditedCandidate<T>]) -> bool {
    candidates.iter().all(|ac| ac.candidate.rho_p.is_negative())
}

fn audited_candidates<T: Scalar>(
    g: &T,
    r: &T,
    d: &T,
    gamma_c: &T,
) -> Result<Vec<AuditedCandidate<T>>> {
    enumerate_lift_candidates(g, r, d, gamma_c)?
        .into_iter()
        .map(|candidate| {
            let certificate = marking_certificate(g, &candidate.r_p, &candidate.d_p)?;
            let disc = discriminant(g, &candidate.r_p, &candidate.d_p)?;
            Ok(AuditedCandidate {
                candidate,
                certificate,
                disc,
            })
        })
        .collect()
}
