//! Report assembly: run the whole pipeline on an arrangement, cross-check
//! the identities that tie the modules together, and serialize the result.
//!
//! All integers and rationals serialize as decimal strings, so the JSON is
//! exact and byte-stable; Chow classes carry an explicit basis tag to pin
//! the [P^k] convention.

use num::traits::{One, Zero};
use num::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charpoly::{
    char_poly, poincare_poly, reduced_char_poly, reduced_poincare_poly, split_over_z, SplitResult,
};
use crate::classes::{
    betti, betti_affine, chern_projective_space, csm_arrangement_via_complement,
    csm_arrangement_via_mobius, csm_complement, effectivity_poly, grothendieck_class,
    grothendieck_class_affine, hodge_deligne, is_effective, stable_birational_constant, ChowClass,
};
use crate::ffcount::{verify_point_count, FfError};
use crate::lattice::{Arrangement, IntersectionLattice};
use crate::poly::IntPoly;
use crate::segre::{betti_from_sigma, pi_from_sigma, segre_pushforward, sigma_from_pi};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Primes at which to run the point-counting oracle.
    pub verify_primes: Vec<u64>,
    /// Point budget for the enumerations; `None` uses the default.
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementSummary {
    pub n: usize,
    pub d: usize,
    pub essential: bool,
    pub center_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub flat_count: usize,
    pub flats_per_codim: Vec<usize>,
    pub mobius_per_codim: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowSummary {
    pub basis: String,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrothSummary {
    pub projective: Vec<String>,
    pub affine: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectivitySummary {
    pub poly: Vec<String>,
    pub effective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSummary {
    pub projective: Vec<String>,
    pub affine: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentSummary {
    pub splits_over_z: bool,
    pub roots: Option<Vec<String>>,
    pub exponents: Option<Vec<String>>,
    pub sum_equals_hyperplane_count: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCountSummary {
    pub p: u64,
    pub status: String,
    pub chi_reduced_at_p: Option<String>,
    pub projective_count: Option<String>,
    pub chi_at_p: Option<String>,
    pub affine_count: Option<String>,
    pub pass: bool,
}

/// Everything the pipeline computes, with numbers as decimal strings.
/// Polynomial coefficient arrays are lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub arrangement: ArrangementSummary,
    pub lattice: LatticeSummary,
    pub char_poly: Vec<String>,
    pub char_poly_reduced: Vec<String>,
    pub poincare_poly: Vec<String>,
    pub poincare_poly_reduced: Vec<String>,
    pub grothendieck_class: GrothSummary,
    pub hodge_deligne: Vec<String>,
    pub stable_birational_constant: String,
    pub csm_complement: ChowSummary,
    pub csm_arrangement: ChowSummary,
    pub effectivity: EffectivitySummary,
    pub betti: BettiSummary,
    pub sigma: Vec<String>,
    pub segre_pushforward: ChowSummary,
    pub exponents: ExponentSummary,
    pub point_counts: Option<Vec<PointCountSummary>>,
}

impl Report {
    /// True when a requested point-count verification failed or could not run.
    pub fn verification_failed(&self) -> bool {
        self.point_counts
            .as_ref()
            .is_some_and(|checks| checks.iter().any(|c| !c.pass))
    }
}

fn poly_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn chow_strings(c: &ChowClass) -> ChowSummary {
    ChowSummary {
        basis: "P^k".to_string(),
        coeffs: c.coeffs().iter().map(|x| x.to_string()).collect(),
    }
}

fn fail(msg: impl Into<String>) -> ReportError {
    ReportError::Consistency(msg.into())
}

/// Run lattice -> polynomials -> classes -> sigma, verify the cross-module
/// identities, optionally run the point-count oracle, and assemble the
/// report.
pub fn run_report(arr: &Arrangement, opts: &ReportOptions) -> Result<Report, ReportError> {
    let n = arr.n();
    let d = arr.d();
    let lattice = IntersectionLattice::build(arr);

    let chi = char_poly(&lattice);
    if !chi.eval(&BigInt::one()).is_zero() {
        return Err(fail("chi(1) != 0"));
    }
    let chibar = reduced_char_poly(&chi);
    let pi = poincare_poly(&chi);
    if !pi.eval(&BigInt::from(-1)).is_zero() {
        return Err(fail("pi(-1) != 0"));
    }
    let pibar = reduced_poincare_poly(&pi);
    if chibar.reverse_signed(n) != pibar {
        return Err(fail("signed reversal does not carry chibar to pibar"));
    }

    let groth = grothendieck_class(&chibar);
    let groth_affine = grothendieck_class_affine(&chibar);
    let hodge = hodge_deligne(&chibar);
    let stable = stable_birational_constant(&chibar);

    let csm_m = csm_complement(&chibar, n);
    if csm_m.coeff(0) != &chibar.eval(&BigInt::one()) {
        return Err(fail("degree-zero CSM coefficient differs from chibar(1)"));
    }
    let csm_a = csm_arrangement_via_complement(&lattice);
    if csm_a != csm_arrangement_via_mobius(&lattice) {
        return Err(fail("the two CSM computations of the arrangement disagree"));
    }
    if csm_a != chern_projective_space(n).sub(&csm_m) {
        return Err(fail("CSM classes of complement and arrangement do not add up"));
    }

    let eff = effectivity_poly(&lattice);
    if eff.coeff(0) != BigInt::one() {
        return Err(fail("effectivity polynomial has constant term != 1"));
    }
    for k in 1..=n + 1 {
        if eff.coeff(k) != *csm_a.coeff(k - 1) {
            return Err(fail(format!(
                "effectivity coefficient {k} does not match the CSM class"
            )));
        }
    }

    let betti_proj =
        betti(&pibar, n).map_err(|e| fail(format!("projective Betti numbers: {e}")))?;
    let betti_aff =
        betti_affine(&pi, n).map_err(|e| fail(format!("affine Betti numbers: {e}")))?;
    {
        // 1 - chibar(0) = 1 - (-1)^n r_n
        let r_n = betti_proj.ranks()[n].clone();
        let signed = if n % 2 == 0 { r_n } else { -r_n };
        if stable != BigInt::one() - signed {
            return Err(fail("stable birational constant disagrees with the top Betti number"));
        }
    }

    let sigma = sigma_from_pi(&pibar, d, n);
    if pi_from_sigma(&sigma, d) != pibar {
        return Err(fail("sigma transform does not invert"));
    }
    let betti_sigma =
        betti_from_sigma(&sigma, d).map_err(|e| fail(format!("Betti from sigma: {e}")))?;
    if betti_sigma != betti_proj {
        return Err(fail("Betti numbers from sigma disagree with the lattice"));
    }
    let segre = segre_pushforward(&sigma);

    let split = split_over_z(&chibar, Some(d));
    let exponents = match &split {
        SplitResult::Split {
            roots,
            exponents,
            sum_matches_count,
        } => ExponentSummary {
            splits_over_z: true,
            roots: Some(roots.iter().map(|r| r.to_string()).collect()),
            exponents: Some(exponents.iter().map(|r| r.to_string()).collect()),
            sum_equals_hyperplane_count: *sum_matches_count,
        },
        SplitResult::NotSplit => ExponentSummary {
            splits_over_z: false,
            roots: None,
            exponents: None,
            sum_equals_hyperplane_count: None,
        },
    };

    let budget = opts.budget.unwrap_or(crate::ffcount::DEFAULT_BUDGET);
    let point_counts = if opts.verify_primes.is_empty() {
        None
    } else {
        let mut checks = Vec::new();
        for &p in &opts.verify_primes {
            let summary = match verify_point_count(arr, &lattice, &chi, &chibar, p, budget) {
                Ok(check) => PointCountSummary {
                    p,
                    status: if check.pass() {
                        "ok".to_string()
                    } else {
                        "mismatch".to_string()
                    },
                    chi_reduced_at_p: Some(check.chi_reduced_at_p.to_string()),
                    projective_count: Some(check.projective_count.to_string()),
                    chi_at_p: Some(check.chi_at_p.to_string()),
                    affine_count: Some(check.affine_count.to_string()),
                    pass: check.pass(),
                },
                Err(err @ (FfError::NotPrime(_) | FfError::BadPrime { .. })) => PointCountSummary {
                    p,
                    status: err.to_string(),
                    chi_reduced_at_p: None,
                    projective_count: None,
                    chi_at_p: None,
                    affine_count: None,
                    pass: false,
                },
                Err(err @ FfError::BudgetExceeded { .. }) => PointCountSummary {
                    p,
                    status: err.to_string(),
                    chi_reduced_at_p: None,
                    projective_count: None,
                    chi_at_p: None,
                    affine_count: None,
                    pass: false,
                },
            };
            checks.push(summary);
        }
        Some(checks)
    };

    Ok(Report {
        arrangement: ArrangementSummary {
            n,
            d,
            essential: arr.is_essential(),
            center_dim: arr.center_dim(),
        },
        lattice: LatticeSummary {
            flat_count: lattice.flats().len(),
            flats_per_codim: lattice.level_counts(),
            mobius_per_codim: lattice
                .mobius_by_level()
                .iter()
                .map(|level| level.iter().map(|m| m.to_string()).collect())
                .collect(),
        },
        char_poly: poly_strings(&chi),
        char_poly_reduced: poly_strings(&chibar),
        poincare_poly: poly_strings(&pi),
        poincare_poly_reduced: poly_strings(&pibar),
        grothendieck_class: GrothSummary {
            projective: poly_strings(groth.poly()),
            affine: poly_strings(groth_affine.poly()),
        },
        hodge_deligne: poly_strings(hodge.poly()),
        stable_birational_constant: stable.to_string(),
        csm_complement: chow_strings(&csm_m),
        csm_arrangement: chow_strings(&csm_a),
        effectivity: EffectivitySummary {
            poly: poly_strings(&eff),
            effective: is_effective(&eff),
        },
        betti: BettiSummary {
            projective: betti_proj.ranks().iter().map(|r| r.to_string()).collect(),
            affine: betti_aff.ranks().iter().map(|r| r.to_string()).collect(),
        },
        sigma: sigma.entries().iter().map(|s| s.to_string()).collect(),
        segre_pushforward: chow_strings(&segre),
        exponents,
        point_counts,
    })
}

fn display_coeff_poly(coeffs: &[String], var: &str) -> String {
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.parse().unwrap()).collect();
    IntPoly::from_coeffs(ints).display_with_var(var)
}

fn display_chow(c: &ChowSummary) -> String {
    let ints: Vec<BigInt> = c.coeffs.iter().map(|x| x.parse().unwrap()).collect();
    let n = ints.len() - 1;
    ChowClass::from_coeffs(n, ints).to_string()
}

/// Human-readable rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!(
        "Arrangement: d = {} hyperplanes in P^{}, essential: {} (center dim {})",
        r.arrangement.d, r.arrangement.n, r.arrangement.essential, r.arrangement.center_dim
    ));
    line(format!(
        "Lattice: {} flats, per codim {:?}",
        r.lattice.flat_count, r.lattice.flats_per_codim
    ));
    for (codim, level) in r.lattice.mobius_per_codim.iter().enumerate() {
        line(format!("  mobius at codim {codim}: [{}]", level.join(", ")));
    }
    line(format!("chi           = {}", display_coeff_poly(&r.char_poly, "t")));
    line(format!(
        "chi/(t-1)     = {}",
        display_coeff_poly(&r.char_poly_reduced, "t")
    ));
    line(format!("pi            = {}", display_coeff_poly(&r.poincare_poly, "t")));
    line(format!(
        "pi/(1+t)      = {}",
        display_coeff_poly(&r.poincare_poly_reduced, "t")
    ));
    line(format!(
        "Grothendieck class: projective = {}, affine = {}",
        display_coeff_poly(&r.grothendieck_class.projective, "L"),
        display_coeff_poly(&r.grothendieck_class.affine, "L")
    ));
    line(format!(
        "Hodge-Deligne polynomial = {}",
        display_coeff_poly(&r.hodge_deligne, "uv")
    ));
    line(format!(
        "Stable birational constant = {}",
        r.stable_birational_constant
    ));
    line(format!("CSM(complement)  = {}", display_chow(&r.csm_complement)));
    line(format!("CSM(arrangement) = {}", display_chow(&r.csm_arrangement)));
    line(format!(
        "Effectivity polynomial = {} -> effective: {}",
        display_coeff_poly(&r.effectivity.poly, "t"),
        r.effectivity.effective
    ));
    line(format!(
        "Betti numbers: projective [{}], affine [{}]",
        r.betti.projective.join(", "),
        r.betti.affine.join(", ")
    ));
    line(format!("sigma = ({})", r.sigma.join(", ")));
    line(format!(
        "Segre push-forward = {}",
        display_chow(&r.segre_pushforward)
    ));
    match (&r.exponents.roots, &r.exponents.exponents) {
        (Some(roots), Some(exponents)) => {
            line(format!(
                "chi/(t-1) splits over Z: roots [{}], exponents [{}], sum check: {}",
                roots.join(", "),
                exponents.join(", "),
                match r.exponents.sum_equals_hyperplane_count {
                    Some(true) => "ok",
                    Some(false) => "FAILED",
                    None => "skipped",
                }
            ));
        }
        _ => line("chi/(t-1) does not split over Z".to_string()),
    }
    if let Some(checks) = &r.point_counts {
        for c in checks {
            match (&c.projective_count, &c.affine_count) {
                (Some(proj), Some(aff)) => line(format!(
                    "point count p = {}: projective {} (chibar(p) = {}), affine {} (chi(p) = {}) -> {}",
                    c.p,
                    proj,
                    c.chi_reduced_at_p.as_deref().unwrap_or("?"),
                    aff,
                    c.chi_at_p.as_deref().unwrap_or("?"),
                    if c.pass { "ok" } else { "MISMATCH" }
                )),
                _ => line(format!("point count p = {}: {}", c.p, c.status)),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn four_lines_report() {
        let arr = builtins::four_lines();
        let report = run_report(
            &arr,
            &ReportOptions {
                verify_primes: vec![2, 5],
                budget: None,
            },
        )
        .unwrap();
        assert_eq!(report.char_poly, vec!["-2", "5", "-4", "1"]);
        assert_eq!(report.csm_arrangement.coeffs, vec!["3", "4", "0"]);
        assert_eq!(report.effectivity.poly, vec!["1", "3", "4"]);
        assert!(report.effectivity.effective);
        assert_eq!(report.sigma, vec!["1", "0", "-7"]);
        assert_eq!(report.poincare_poly_reduced, vec!["1", "3", "2"]);
        assert!(!report.verification_failed());
        let checks = report.point_counts.as_ref().unwrap();
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(|c| c.pass));
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let arr = builtins::generic(6, 2);
        let opts = ReportOptions {
            verify_primes: vec![7],
            budget: None,
        };
        let report = run_report(&arr, &opts).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        let again = serde_json::to_string_pretty(&run_report(&arr, &opts).unwrap()).unwrap();
        assert_eq!(json, again);
    }

    #[test]
    fn bad_prime_is_flagged_distinctly() {
        let arr = builtins::counterexample();
        let report = run_report(
            &arr,
            &ReportOptions {
                verify_primes: vec![2, 7],
                budget: None,
            },
        )
        .unwrap();
        let checks = report.point_counts.as_ref().unwrap();
        assert!(!checks[0].pass);
        assert!(checks[0].status.contains("bad prime"));
        assert!(checks[1].pass);
        assert!(report.verification_failed());
    }

    #[test]
    fn text_rendering_mentions_the_essentials() {
        let arr = builtins::four_lines();
        let report = run_report(&arr, &ReportOptions::default()).unwrap();
        let text = render_text(&report);
        assert!(text.contains("chi           = t^3 - 4t^2 + 5t - 2"));
        assert!(text.contains("CSM(arrangement) = 4[P^1] + 3[P^0]"));
        assert!(text.contains("sigma = (1, 0, -7)"));
    }
}
