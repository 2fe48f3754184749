//! Grid sweeps checking every closed-form operation against an
//! independently coded evaluation.

use k3bn::bn::{generic_clifford, is_non_computing, rho};
use k3bn::bundles::{lm_invariants, min_c2_for_stable, mukai_self_pairing, MukaiVector};
use k3bn::lattice::{discriminant, enumerate_bn_special_nl, marking_certificate, MarkingLattice};
use k3bn::lifting::audit_genus;
use k3bn::Rat64;

/// Term-by-term expansion of g - (r+1)(g-d+r), kept deliberately different
/// from the library's factored form.
fn rho_oracle(g: i64, r: i64, d: i64) -> i64 {
    let mut acc = g as i128;
    acc -= (r as i128 + 1) * g as i128;
    acc += (r as i128 + 1) * d as i128;
    acc -= (r as i128 + 1) * r as i128;
    i128::try_from(acc).unwrap() as i64
}

fn disc_oracle(g: i64, r: i64, d: i64) -> i64 {
    4 * (g - 1) * (r - 1) - d * d
}

#[test]
fn rho_matches_oracle_on_grid() {
    for g in 2i64..=60 {
        for r in 0i64..=12 {
            for d in 0i64..=2 * g {
                assert_eq!(rho(&g, &r, &d).unwrap(), rho_oracle(g, r, d), "({g},{r},{d})");
            }
        }
    }
}

#[test]
fn rho_threshold_is_a_rational_degree_bound() {
    // rho <= -1 iff d <= r + g - (g+1)/(r+1), compared as exact fractions.
    for g in 2i64..=60 {
        for r in 1i64..=12 {
            for d in 0i64..=2 * g {
                let special = rho(&g, &r, &d).unwrap() <= -1;
                let threshold =
                    Rat64::from_integer(r + g) - Rat64::new(g + 1, r + 1);
                assert_eq!(
                    special,
                    Rat64::from_integer(d) <= threshold,
                    "({g},{r},{d})"
                );
            }
        }
    }
}

#[test]
fn non_computing_is_empty_below_genus_14() {
    for g in 2i64..=13 {
        for r in 0i64..=12 {
            for d in 0i64..=g - 1 {
                assert!(!is_non_computing(&g, &r, &d).unwrap(), "({g},{r},{d})");
            }
        }
    }
}

#[test]
fn gram_determinant_equals_discriminant() {
    for g in 2i64..=60 {
        for r in 0i64..=12 {
            for d in 0i64..=2 * g - 2 {
                let lat = MarkingLattice::new(g, r, d).unwrap();
                let disc = discriminant(&g, &r, &d).unwrap();
                assert_eq!(lat.det(), disc, "({g},{r},{d})");
                assert_eq!(disc, disc_oracle(g, r, d), "({g},{r},{d})");
            }
        }
    }
}

#[test]
fn nl_classification_matches_brute_force() {
    for g in 2i64..=40 {
        let got: Vec<(i64, i64, bool)> = enumerate_bn_special_nl(&g)
            .unwrap()
            .into_iter()
            .map(|e| (e.r, e.d, e.fixed_component))
            .collect();
        let mut expect = Vec::new();
        for r in 1i64..=g {
            for d in 0i64..=g - 1 {
                if rho_oracle(g, r, d) < 0 && disc_oracle(g, r, d) < 0 {
                    expect.push((r, d, d <= 1));
                }
            }
        }
        expect.sort();
        assert_eq!(got, expect, "g={g}");
    }
}

#[test]
fn certificate_agrees_with_rho_on_grid() {
    for g in 2i64..=60 {
        for r in 0i64..=12 {
            for d in 0i64..=2 * g - 2 {
                let cert = marking_certificate(&g, &r, &d).unwrap();
                assert_eq!(
                    cert.is_special_marking,
                    rho_oracle(g, r, d) <= -1,
                    "({g},{r},{d})"
                );
                assert_eq!(cert.product, cert.h0_m_lower * cert.h0_h_minus_m_lower);
            }
        }
    }
}

#[test]
fn min_c2_sits_exactly_on_the_pairing_boundary() {
    for rank in 1i64..=8 {
        for c1_sq in 0i64..=60 {
            let floor = min_c2_for_stable(&rank, &c1_sq).unwrap();
            let at = mukai_self_pairing(&MukaiVector { rank, c1_sq, c2: floor }).unwrap();
            let below =
                mukai_self_pairing(&MukaiVector { rank, c1_sq, c2: floor - 1 }).unwrap();
            assert!(at >= -2, "rank={rank} c1_sq={c1_sq}");
            assert!(below < -2, "rank={rank} c1_sq={c1_sq}");
        }
    }
}

#[test]
fn lm_chi_equals_two_one_minus_rho() {
    for g in 2i64..=40 {
        for r in 1i64..=8 {
            for d in 0i64..=2 * g - 2 {
                let lm = lm_invariants(&g, &r, &d).unwrap();
                assert_eq!(lm.chi_f_tensor_e, 2 * (1 - rho(&g, &r, &d).unwrap()));
                let direct = (1 - (r + 1)) * (2 * g - 2) + 2 * (r + 1) * d - 2 * (r + 1) * (r + 1);
                assert_eq!(
                    mukai_self_pairing(&lm.invariants.mukai_vector()).unwrap(),
                    direct
                );
            }
        }
    }
}

#[test]
fn audits_14_to_19_satisfy_every_recorded_bound() {
    for g in 14i64..=19 {
        let gamma_c = generic_clifford(&g).unwrap();
        let report = audit_genus(&g).unwrap();
        assert!(report.verdict(), "g={g}");
        for case in &report.cases {
            let src = case.reduced_to.as_ref().unwrap_or(&case.source);
            let (r, d) = (*src.r(), *src.d());
            let src_rho = src.rho();
            let gamma_a = src.gamma();
            assert!(!case.candidates.is_empty(), "g={g} case ({r},{d})");
            for ac in &case.candidates {
                let cand = &ac.candidate;
                assert!(cand.r_p >= r);
                assert!(cand.gamma_m <= gamma_a);
                assert!(cand.rho_p < 0);
                assert!(cand.rho_p <= src_rho, "rho monotonicity at g={g}");
                // gamma(E/N) <= gamma(A) - gamma(C)
                assert!(*cand.quotient.gamma() <= gamma_a - gamma_c);
                // Stability data is informational but holds throughout the
                // theorem's range.
                assert!(
                    mukai_self_pairing(&cand.quotient.mukai_vector()).unwrap() >= -2,
                    "g={g} candidate ({},{})",
                    cand.r_p,
                    cand.d_p
                );
                assert!(ac.certificate.is_special_marking);
                // Exact rank-shift identity, evaluated at the lifted degree.
                let delta = cand.delta;
                assert_eq!(
                    cand.rho_p,
                    rho(&g, &r, &cand.d_p).unwrap()
                        + delta * (cand.d_p - g - 2 * r - delta - 1)
                );
                for entry in &cand.ledger {
                    assert!(
                        entry.satisfied || entry.id == "gamma_m_exceeds_gamma_c",
                        "g={g}: ledger entry {} not satisfied",
                        entry.id
                    );
                }
            }
        }
    }
}

#[test]
fn audit_cases_cover_the_non_computing_list_exactly() {
    for g in 14i64..=19 {
        let report = audit_genus(&g).unwrap();
        let from_cases: Vec<(i64, i64)> = report
            .cases
            .iter()
            .map(|c| (*c.source.r(), *c.source.d()))
            .collect();
        assert_eq!(
            from_cases,
            k3bn::lifting::enumerate_non_computing(&g).unwrap()
        );
    }
}
