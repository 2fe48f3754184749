//! Rank-2 Picard-lattice arithmetic for markings `<H, L>`.
//!
//! A marking of type `(g, r, d)` is the rank-2 lattice with Gram matrix
//! `[[2g-2, d], [d, 2r-2]]`. Its discriminant `4(g-1)(r-1) - d^2` must be
//! negative for the marking to embed in the Picard group of a K3 surface
//! (Hodge index theorem), and `rho(g,r,d) < 0` for the marking to be
//! Brill-Noether special. This module classifies the Noether-Lefschetz
//! divisors cut out by both constraints and checks marking certificates
//! via the `h^0` product criterion.

use crate::bn::{check_genus, check_nonneg, rho_formula};
use crate::error::{domain, Error, Result};
use crate::scalar::{c, Scalar};

/// Gram data of the rank-2 marking `<H, L>` with `H^2 = 2g-2`, `H.L = d`,
/// `L^2 = 2r-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkingLattice<T: Scalar> {
    g: T,
    r: T,
    d: T,
}

impl<T: Scalar> MarkingLattice<T> {
    pub fn new(g: T, r: T, d: T) -> Result<Self> {
        check_genus(&g)?;
        check_nonneg(&r, "r")?;
        check_nonneg(&d, "d")?;
        Ok(Self { g, r, d })
    }

    pub fn g(&self) -> &T {
        &self.g
    }

    pub fn r(&self) -> &T {
        &self.r
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    /// The symmetric Gram matrix `[[2g-2, d], [d, 2r-2]]`.
    pub fn gram(&self) -> [[T; 2]; 2] {
        let two = c::<T>(2);
        [
            [two.clone() * self.g.clone() - two.clone(), self.d.clone()],
            [self.d.clone(), two.clone() * self.r.clone() - two],
        ]
    }

    /// Determinant of the Gram matrix; equals `discriminant(g, r, d)`.
    pub fn det(&self) -> T {
        let m = self.gram();
        m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
    }

    /// A class `a*H + b*L` in this lattice.
    pub fn class(&self, a: T, b: T) -> LatticeClass<T> {
        LatticeClass {
            a,
            b,
            lattice: self.clone(),
        }
    }
}

/// An integral class `a*H + b*L` tied to its marking lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeClass<T: Scalar> {
    a: T,
    b: T,
    lattice: MarkingLattice<T>,
}

impl<T: Scalar> LatticeClass<T> {
    pub fn coefficients(&self) -> (&T, &T) {
        (&self.a, &self.b)
    }

    pub fn lattice(&self) -> &MarkingLattice<T> {
        &self.lattice
    }
}

/// Discriminant `Delta(g,r,d) = 4(g-1)(r-1) - d^2` of the marking lattice.
pub fn discriminant<T: Scalar>(g: &T, r: &T, d: &T) -> Result<T> {
    check_genus(g)?;
    check_nonneg(r, "r")?;
    check_nonneg(d, "d")?;
    Ok(disc_formula(g, r, d))
}

pub(crate) fn disc_formula<T: Scalar>(g: &T, r: &T, d: &T) -> T {
    c::<T>(4) * (g.clone() - T::one()) * (r.clone() - T::one()) - d.clone() * d.clone()
}

/// The Hodge constraint `Delta(g,r,d) < 0`, equivalently `d^2 > 4(g-1)(r-1)`.
pub fn hodge_constraint<T: Scalar>(g: &T, r: &T, d: &T) -> Result<bool> {
    Ok(discriminant(g, r, d)?.is_negative())
}

/// Intersection pairing `(a1, b1) . gram . (a2, b2)^T`. Both classes must
/// reference `lat`.
pub fn intersect<T: Scalar>(
    x: &LatticeClass<T>,
    y: &LatticeClass<T>,
    lat: &MarkingLattice<T>,
) -> Result<T> {
    if x.lattice != *lat || y.lattice != *lat {
        return Err(Error::LatticeMismatch);
    }
    let m = lat.gram();
    Ok(
        x.a.clone() * m[0][0].clone() * y.a.clone()
            + (x.a.clone() * y.b.clone() + x.b.clone() * y.a.clone()) * m[0][1].clone()
            + x.b.clone() * m[1][1].clone() * y.b.clone(),
    )
}

/// Type `(r'', d'') = (g-d+r-1, 2g-2-d)` of the complementary class `H - L`.
/// An involution on `0 <= d <= 2g-2`.
pub fn complement_class<T: Scalar>(g: &T, r: &T, d: &T) -> Result<(T, T)> {
    check_genus(g)?;
    check_nonneg(r, "r")?;
    check_nonneg(d, "d")?;
    let dmax = c::<T>(2) * g.clone() - c(2);
    if *d > dmax {
        return Err(domain(format!("d must be <= 2g-2 = {dmax} (got {d})")));
    }
    let r2 = g.clone() - d.clone() + r.clone() - T::one();
    let d2 = dmax - d.clone();
    Ok((r2, d2))
}

/// One Noether-Lefschetz divisor `K^r_{g,d}` in the Brill-Noether special
/// locus. `fixed_component` marks the `d <= 1` entries, where `H` acquires
/// a fixed component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NlDivisor<T: Scalar> {
    pub r: T,
    pub d: T,
    pub fixed_component: bool,
}

/// All `(r, d)` with `r >= 1`, `0 <= d <= g-1`, `rho(g,r,d) < 0`, and
/// `Delta(g,r,d) < 0`, sorted lexicographically by `(r, d)`.
///
/// `r` is capped where the Hodge constraint becomes unsatisfiable: once
/// `4(r-1) >= g-1`, no `d <= g-1` has `d^2 > 4(g-1)(r-1)`.
pub fn enumerate_bn_special_nl<T: Scalar>(g: &T) -> Result<Vec<NlDivisor<T>>> {
    check_genus(g)?;
    let gm1 = g.clone() - T::one();
    let mut out = Vec::new();
    let mut r = T::one();
    while c::<T>(4) * (r.clone() - T::one()) < gm1 {
        let mut d = T::zero();
        while d <= gm1 {
            if rho_formula(g, &r, &d).is_negative() && disc_formula(g, &r, &d).is_negative() {
                out.push(NlDivisor {
                    r: r.clone(),
                    d: d.clone(),
                    fixed_component: d <= T::one(),
                });
            }
            d = d + T::one();
        }
        r = r + T::one();
    }
    Ok(out)
}

/// Witness data for the `h^0` product criterion of a marking of type
/// `(r', d')` on a genus-`g` polarized surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkingCertificate<T: Scalar> {
    /// Riemann-Roch lower bound `r' + 1` for `h^0(S, M)`.
    pub h0_m_lower: T,
    /// Riemann-Roch lower bound `g - d' + r'` for `h^0(S, H - M)`.
    pub h0_h_minus_m_lower: T,
    /// `(r'+1)(g-d'+r')`.
    pub product: T,
    /// `product >= g+1`, equivalently `rho(g,r',d') <= -1`.
    pub is_special_marking: bool,
}

/// Certificate that `<H, M>` is a Brill-Noether special marking, from the
/// Riemann-Roch lower bounds on `h^0(S, M)` and `h^0(S, H-M)`.
pub fn marking_certificate<T: Scalar>(g: &T, r_p: &T, d_p: &T) -> Result<MarkingCertificate<T>> {
    check_genus(g)?;
    check_nonneg(r_p, "r'")?;
    check_nonneg(d_p, "d'")?;
    let dmax = c::<T>(2) * g.clone() - c(2);
    if *d_p > dmax {
        return Err(domain(format!("d' must be <= 2g-2 = {dmax} (got {d_p})")));
    }
    let h0_m_lower = r_p.clone() + T::one();
    let h0_h_minus_m_lower = g.clone() - d_p.clone() + r_p.clone();
    let product = h0_m_lower.clone() * h0_h_minus_m_lower.clone();
    let is_special_marking = product >= g.clone() + T::one();
    // product >= g+1 and rho <= -1 are the same inequality rearranged.
    assert_eq!(
        is_special_marking,
        rho_formula(g, r_p, d_p) <= c(-1),
        "h0 product criterion must agree with rho(g,r',d') <= -1"
    );
    Ok(MarkingCertificate {
        h0_m_lower,
        h0_h_minus_m_lower,
        product,
        is_special_marking,
    })
}
