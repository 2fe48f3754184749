//! Closed-form Brill-Noether arithmetic.
//!
//! The Brill-Noether number of a `g^r_d` on a genus-`g` curve is
//! `rho(g,r,d) = g - (r+1)(g-d+r)`; the Clifford index of the series is
//! `gamma(r,d) = d - 2r`. Everything here is an exact evaluation of one of
//! these two quantities or a predicate built from them.

use crate::error::{domain, Result};
use crate::scalar::{c, Scalar};

/// A `g^r_d`: a linear series of degree `d` and rank `r` on a genus-`g` curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystemType<T: Scalar> {
    g: T,
    r: T,
    d: T,
}

impl<T: Scalar> LinearSystemType<T> {
    /// Rejects `g < 2`, `r < 0`, `d < 0`.
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

    /// Brill-Noether number of this type.
    pub fn rho(&self) -> T {
        rho_formula(&self.g, &self.r, &self.d)
    }

    /// Clifford index `d - 2r`; may be negative.
    pub fn gamma(&self) -> T {
        gamma_formula(&self.r, &self.d)
    }
}

/// A genus together with the Clifford index of the ambient curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCliffordContext<T: Scalar> {
    g: T,
    gamma_c: T,
}

impl<T: Scalar> CurveCliffordContext<T> {
    /// Requires `0 <= gamma_c <= floor((g-1)/2)` (Clifford's theorem range).
    pub fn new(g: T, gamma_c: T) -> Result<Self> {
        check_genus(&g)?;
        let cap = generic_clifford(&g)?;
        if gamma_c < T::zero() || gamma_c > cap {
            return Err(domain(format!(
                "gamma_C must satisfy 0 <= gamma_C <= floor((g-1)/2) = {cap} (got {gamma_c})"
            )));
        }
        Ok(Self { g, gamma_c })
    }

    pub fn g(&self) -> &T {
        &self.g
    }

    pub fn gamma_c(&self) -> &T {
        &self.gamma_c
    }
}

pub(crate) fn check_genus<T: Scalar>(g: &T) -> Result<()> {
    if *g < c(2) {
        return Err(domain(format!("g must be >= 2 (got {g})")));
    }
    Ok(())
}

pub(crate) fn check_nonneg<T: Scalar>(v: &T, name: &str) -> Result<()> {
    if v.is_negative() {
        return Err(domain(format!("{name} must be >= 0 (got {v})")));
    }
    Ok(())
}

/// `g - (r+1)(g-d+r)` with no domain checks; total on all integers.
pub(crate) fn rho_formula<T: Scalar>(g: &T, r: &T, d: &T) -> T {
    g.clone() - (r.clone() + T::one()) * (g.clone() - d.clone() + r.clone())
}

pub(crate) fn gamma_formula<T: Scalar>(r: &T, d: &T) -> T {
    d.clone() - c::<T>(2) * r.clone()
}

/// Brill-Noether number `rho(g,r,d) = g - (r+1)(g-d+r)`.
pub fn rho<T: Scalar>(g: &T, r: &T, d: &T) -> Result<T> {
    check_genus(g)?;
    check_nonneg(r, "r")?;
    check_nonneg(d, "d")?;
    Ok(rho_formula(g, r, d))
}

/// Clifford index `gamma(r,d) = d - 2r` of a `g^r_d`.
pub fn clifford_index<T: Scalar>(r: &T, d: &T) -> Result<T> {
    check_nonneg(r, "r")?;
    check_nonneg(d, "d")?;
    Ok(gamma_formula(r, d))
}

/// Clifford index `floor((g-1)/2)` of a general genus-`g` curve.
pub fn generic_clifford<T: Scalar>(g: &T) -> Result<T> {
    check_genus(g)?;
    Ok((g.clone() - T::one()).div_floor(&c(2)))
}

/// True iff `rho(g,r,d) < 0`.
pub fn is_bn_special_type<T: Scalar>(g: &T, r: &T, d: &T) -> Result<bool> {
    Ok(rho(g, r, d)?.is_negative())
}

/// True iff the type is Brill-Noether special and its Clifford index exceeds
/// the generic curve value, so it cannot compute the Clifford index of any
/// smooth curve with generic `gamma(C)`.
pub fn is_non_computing<T: Scalar>(g: &T, r: &T, d: &T) -> Result<bool> {
    let special = is_bn_special_type(g, r, d)?;
    Ok(special && clifford_index(r, d)? > generic_clifford(g)?)
}

/// Self-intersection `2r - 2 - 2*h1` a lift of a `g^r_d` must have when
/// `h^1(S, L(-C)) = h1`.
pub fn expected_square<T: Scalar>(r: &T, h1: &T) -> Result<T> {
    check_nonneg(r, "r")?;
    check_nonneg(h1, "h1")?;
    Ok(c::<T>(2) * r.clone() - c(2) - c::<T>(2) * h1.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&7i64, &0, &0).unwrap(), 0);
        assert_eq!(rho(&14i64, &2, &11).unwrap(), -1);
        assert_eq!(rho(&18i64, &4, &17).unwrap(), -7);
    }

    #[test]
    fn rho_domain_errors() {
        assert!(matches!(rho(&1i64, &0, &0), Err(Error::Domain(_))));
        assert!(matches!(rho(&5i64, &-1, &0), Err(Error::Domain(_))));
        assert!(matches!(rho(&5i64, &0, &-3), Err(Error::Domain(_))));
    }

    #[test]
    fn clifford_examples() {
        assert_eq!(clifford_index(&4i64, &8).unwrap(), 0);
        assert_eq!(clifford_index(&3i64, &13).unwrap(), 7);
        assert_eq!(clifford_index(&2i64, &11).unwrap(), 7);
    }

    #[test]
    fn generic_clifford_examples() {
        assert_eq!(generic_clifford(&2i64).unwrap(), 0);
        assert_eq!(generic_clifford(&14i64).unwrap(), 6);
        assert_eq!(generic_clifford(&19i64).unwrap(), 9);
    }

    #[test]
    fn bn_special_examples() {
        assert!(is_bn_special_type(&14i64, &2, &11).unwrap());
        assert!(!is_bn_special_type(&14i64, &2, &12).unwrap());
        assert!(!is_bn_special_type(&9i64, &0, &0).unwrap());
    }

    #[test]
    fn non_computing_examples() {
        assert!(is_non_computing(&14i64, &3, &13).unwrap());
        // gamma = 6 equals floor(13/2); equality is not enough.
        assert!(!is_non_computing(&14i64, &2, &10).unwrap());
        assert!(!is_non_computing(&13i64, &2, &10).unwrap());
    }

    #[test]
    fn expected_square_examples() {
        assert_eq!(expected_square(&1i64, &0).unwrap(), 0);
        assert_eq!(expected_square(&3i64, &0).unwrap(), 4);
        assert_eq!(expected_square(&4i64, &1).unwrap(), 4);
    }

    #[test]
    fn linear_system_type_carries_rho_and_gamma() {
        let a = LinearSystemType::new(18i64, 3, 16).unwrap();
        assert_eq!(a.rho(), -2);
        assert_eq!(a.gamma(), 10);
        assert!(LinearSystemType::new(1i64, 0, 0).is_err());
    }

    #[test]
    fn clifford_context_range() {
        assert!(CurveCliffordContext::new(18i64, 8).is_ok());
        assert!(CurveCliffordContext::new(18i64, 9).is_err());
        assert!(CurveCliffordContext::new(18i64, -1).is_err());
    }
}
