//! Numerical invariants of Lazarsfeld-Mukai bundles and their quotients.
//!
//! Only the Chern/cohomology numbers are tracked: `c1` appears through its
//! self-intersection and `H`-degree, never as a divisor class on an actual
//! surface. That is enough for the Mukai pairing, the stability bound on
//! `c2`, and the quotient Clifford-index bookkeeping.

use num_rational::Ratio;

use crate::bn::{check_genus, check_nonneg, rho_formula};
use crate::error::{domain, Error, Result};
use crate::scalar::{c, Scalar};

/// Numerical invariants of an LM or gLM bundle. `gamma = c2 - 2(rank-1)`
/// holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleInvariants<T: Scalar> {
    rank: T,
    c1_sq: T,
    c2: T,
    h0: Option<T>,
    gamma: T,
}

impl<T: Scalar> BundleInvariants<T> {
    pub fn new(rank: T, c1_sq: T, c2: T, h0: Option<T>) -> Result<Self> {
        if rank < T::one() {
            return Err(domain(format!("rank must be >= 1 (got {rank})")));
        }
        let gamma = c2.clone() - c::<T>(2) * (rank.clone() - T::one());
        Ok(Self { rank, c1_sq, c2, h0, gamma })
    }

    /// Invariants labeled as a type-(II) gLM quotient. A globally generated
    /// sheaf with `c1^2 = 0` must have `c2 = 0`; other combinations are
    /// rejected.
    pub fn glm_type_ii(rank: T, c1_sq: T, c2: T) -> Result<Self> {
        if c1_sq.is_zero() && !c2.is_zero() {
            return Err(domain(format!(
                "a type-(II) gLM bundle with c1^2 = 0 must have c2 = 0 (got c2 = {c2})"
            )));
        }
        Self::new(rank, c1_sq, c2, None)
    }

    pub fn rank(&self) -> &T {
        &self.rank
    }

    pub fn c1_sq(&self) -> &T {
        &self.c1_sq
    }

    pub fn c2(&self) -> &T {
        &self.c2
    }

    pub fn h0(&self) -> Option<&T> {
        self.h0.as_ref()
    }

    /// Clifford index `c2 - 2(rank - 1)` of the bundle.
    pub fn gamma(&self) -> &T {
        &self.gamma
    }

    pub fn mukai_vector(&self) -> MukaiVector<T> {
        MukaiVector {
            rank: self.rank.clone(),
            c1_sq: self.c1_sq.clone(),
            c2: self.c2.clone(),
        }
    }
}

/// `(rank, c1^2, c2)` of a sheaf, pairing itself under the Mukai form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MukaiVector<T: Scalar> {
    pub rank: T,
    pub c1_sq: T,
    pub c2: T,
}

/// An LM bundle's invariants together with `chi(F (x) E) = 2(1 - rho)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmBundle<T: Scalar> {
    pub invariants: BundleInvariants<T>,
    pub chi_f_tensor_e: T,
}

/// Invariants of the Lazarsfeld-Mukai bundle of a basepoint-free `g^r_d` on
/// a genus-`g` hyperplane curve: rank `r+1`, `c1^2 = 2g-2`, `c2 = d`,
/// `h^0 = g - (d-2r) + 1`.
pub fn lm_invariants<T: Scalar>(g: &T, r: &T, d: &T) -> Result<LmBundle<T>> {
    check_genus(g)?;
    if *r < T::one() {
        return Err(domain(format!("r must be >= 1 (got {r})")));
    }
    check_nonneg(d, "d")?;
    let dmax = c::<T>(2) * g.clone() - c(2);
    if *d > dmax {
        return Err(domain(format!("d must be <= 2g-2 = {dmax} (got {d})")));
    }
    let gamma = d.clone() - c::<T>(2) * r.clone();
    let invariants = BundleInvariants::new(
        r.clone() + T::one(),
        dmax,
        d.clone(),
        Some(g.clone() - gamma + T::one()),
    )?;
    let chi_f_tensor_e = c::<T>(2) * (T::one() - rho_formula(g, r, d));
    Ok(LmBundle { invariants, chi_f_tensor_e })
}

/// Mukai self-pairing `(1-rk) c1^2 + 2 rk c2 - 2 rk^2`.
pub fn mukai_self_pairing<T: Scalar>(v: &MukaiVector<T>) -> Result<T> {
    if v.rank < T::one() {
        return Err(domain(format!("rank must be >= 1 (got {})", v.rank)));
    }
    Ok(pairing_formula(&v.rank, &v.c1_sq, &v.c2))
}

fn pairing_formula<T: Scalar>(rank: &T, c1_sq: &T, c2: &T) -> T {
    (T::one() - rank.clone()) * c1_sq.clone() + c::<T>(2) * rank.clone() * c2.clone()
        - c::<T>(2) * rank.clone() * rank.clone()
}

/// Whether a stable sheaf with this Mukai vector can exist: `<v, v> >= -2`.
pub fn stability_feasible<T: Scalar>(v: &MukaiVector<T>) -> Result<bool> {
    Ok(mukai_self_pairing(v)? >= c(-2))
}

/// Smallest integer `c2` with
/// `c2 >= (rk-1) c1^2 / (2 rk) + rk - 1/rk`, i.e. the least second Chern
/// number a stable sheaf of the given rank and `c1^2` can carry.
pub fn min_c2_for_stable<T: Scalar>(rank: &T, c1_sq: &T) -> Result<T> {
    if *rank < T::one() {
        return Err(domain(format!("rank must be >= 1 (got {rank})")));
    }
    check_nonneg(c1_sq, "c1_sq")?;
    let bound = Ratio::new(
        (rank.clone() - T::one()) * c1_sq.clone() + c::<T>(2) * rank.clone() * rank.clone()
            - c(2),
        c::<T>(2) * rank.clone(),
    );
    Ok(bound.ceil().to_integer())
}

/// Invariants of the quotient `E_{C,A} / N` when `det(E/N)` has type
/// `(r', d')`: rank `r`, `c1^2 = 2r'-2`, `c2 = d - (d'-2r') - 2`,
/// `gamma = gamma(A) - gamma(M)`.
///
/// A negative `c2` is reported as an error: the `(r', d')` type cannot arise
/// as such a quotient.
pub fn quotient_invariants<T: Scalar>(
    g: &T,
    r: &T,
    d: &T,
    r_p: &T,
    d_p: &T,
) -> Result<BundleInvariants<T>> {
    lm_invariants(g, r, d)?;
    if *r_p < T::one() {
        return Err(domain(format!("r' must be >= 1 (got {r_p})")));
    }
    check_nonneg(d_p, "d'")?;
    let dmax = c::<T>(2) * g.clone() - c(2);
    if *d_p > dmax {
        return Err(domain(format!("d' must be <= 2g-2 = {dmax} (got {d_p})")));
    }
    let two = c::<T>(2);
    let c2 = d.clone() - (d_p.clone() - two.clone() * r_p.clone()) - two.clone();
    if c2.is_negative() {
        return Err(Error::NegativeC2(c2.to_string()));
    }
    BundleInvariants::new(r.clone(), two.clone() * r_p.clone() - two, c2, None)
}

/// Instability threshold `r + r(k - ell)/(r-1)` for the rank of the
/// determinant of a gLM quotient of rank `r` and Clifford index `k`:
/// a quotient whose `r'` strictly exceeds it cannot be stable. `ell` is the
/// length correction of the non-locally-free locus.
pub fn glm_instability_threshold_with_correction<T: Scalar>(
    r: &T,
    k: &T,
    ell: &T,
) -> Result<Ratio<T>> {
    if *r < c(2) {
        return Err(domain(format!("quotient rank r must be >= 2 (got {r})")));
    }
    check_nonneg(k, "k")?;
    if ell.is_negative() || ell > k {
        return Err(domain(format!("ell must satisfy 0 <= ell <= k = {k} (got {ell})")));
    }
    Ok(Ratio::from_integer(r.clone())
        + Ratio::new(r.clone() * (k.clone() - ell.clone()), r.clone() - T::one()))
}

/// Locally free case of [`glm_instability_threshold_with_correction`]
/// (`ell = 0`).
pub fn glm_instability_threshold<T: Scalar>(r: &T, k: &T) -> Result<Ratio<T>> {
    glm_instability_threshold_with_correction(r, k, &T::zero())
}

/// Ceiling `gamma(A) + r' - r' g / (r'+1)` on the Clifford index of a gLM
/// quotient whose determinant type `(r', d')` is not Brill-Noether special.
pub fn glm_gamma_ceiling<T: Scalar>(g: &T, r_p: &T, gamma_a: &T) -> Result<Ratio<T>> {
    check_genus(g)?;
    if *r_p < T::one() {
        return Err(domain(format!("r' must be >= 1 (got {r_p})")));
    }
    Ok(Ratio::from_integer(gamma_a.clone() + r_p.clone())
        - Ratio::new(r_p.clone() * g.clone(), r_p.clone() + T::one()))
}

/// True when `gamma_e` strictly exceeds [`glm_gamma_ceiling`]; the marking
/// `<H, det(E)>` is then forced to be Brill-Noether special.
pub fn bn_special_from_glm<T: Scalar>(
    g: &T,
    r_p: &T,
    gamma_a: &T,
    gamma_e: &T,
) -> Result<bool> {
    Ok(Ratio::from_integer(gamma_e.clone()) > glm_gamma_ceiling(g, r_p, gamma_a)?)
}
