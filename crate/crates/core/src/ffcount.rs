//! Independent verification by counting points over prime fields.
//!
//! Reducing the arrangement mod a good prime p preserves the intersection
//! lattice, so the number of points of the projective complement over F_p
//! equals the reduced characteristic polynomial evaluated at p, and the
//! affine count equals the full characteristic polynomial at p. Both counts
//! are obtained here by direct enumeration, independent of the lattice code.

use std::collections::HashSet;

use num::BigInt;
use thiserror::Error;

use crate::fp::{is_prime, Fp};
use crate::lattice::{Arrangement, IntersectionLattice};
use crate::mat::Mat;
use crate::poly::IntPoly;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: BadPrimeReason },
    #[error("enumerating {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u64 },
}

#[derive(Debug, PartialEq, Eq)]
pub enum BadPrimeReason {
    DenominatorVanishes,
    RowVanishes(usize),
    RowsCollide(usize, usize),
    FlatRankDrops(usize),
    FlatsCollide,
}

impl std::fmt::Display for BadPrimeReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BadPrimeReason::DenominatorVanishes => {
                write!(f, "a coefficient denominator vanishes")
            }
            BadPrimeReason::RowVanishes(i) => write!(f, "row {i} reduces to zero"),
            BadPrimeReason::RowsCollide(i, j) => {
                write!(f, "rows {i} and {j} become proportional")
            }
            BadPrimeReason::FlatRankDrops(i) => {
                write!(f, "the defining forms of flat {i} drop rank")
            }
            BadPrimeReason::FlatsCollide => write!(f, "two distinct flats reduce to one"),
        }
    }
}

/// The reduction of an arrangement mod p, with the checks of
/// `good_prime_check` already passed.
#[derive(Clone, Debug)]
pub struct ModArrangement {
    p: u64,
    n: usize,
    forms: Mat<Fp>,
}

impl ModArrangement {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn forms(&self) -> &Mat<Fp> {
        &self.forms
    }

    /// Reduce mod p and verify that the intersection lattice survives:
    /// rows stay nonzero and pairwise non-proportional, every flat keeps its
    /// codimension, and distinct flats stay distinct.
    pub fn reduce(
        arr: &Arrangement,
        lattice: &IntersectionLattice,
        p: u64,
    ) -> Result<ModArrangement, FfError> {
        if !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        let bad = |reason| FfError::BadPrime { p, reason };

        let d = arr.d();
        let cols = arr.n() + 1;
        let mut rows: Vec<Vec<Fp>> = Vec::with_capacity(d);
        for i in 0..d {
            let mut row = Vec::with_capacity(cols);
            for c in 0..cols {
                match Fp::from_rat(arr.forms().at(i, c), p) {
                    Some(x) => row.push(x),
                    None => return Err(bad(BadPrimeReason::DenominatorVanishes)),
                }
            }
            rows.push(row);
        }
        let forms = Mat::from_rows(rows);

        for i in 0..d {
            if forms.row_is_zero(i) {
                return Err(bad(BadPrimeReason::RowVanishes(i)));
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                if forms.row_mat(i).stack(&forms.row_mat(j)).rank() < 2 {
                    return Err(bad(BadPrimeReason::RowsCollide(i, j)));
                }
            }
        }

        let mut seen: HashSet<Mat<Fp>> = HashSet::new();
        for (fi, flat) in lattice.flats().iter().enumerate() {
            let member_rows: Vec<Vec<Fp>> = flat
                .members()
                .iter()
                .map(|&i| forms.row(i).to_vec())
                .collect();
            let stacked = if member_rows.is_empty() {
                Mat::zero(0, cols)
            } else {
                Mat::from_rows(member_rows)
            };
            let basis = stacked.row_space_basis();
            if basis.rows() != flat.codim() {
                return Err(bad(BadPrimeReason::FlatRankDrops(fi)));
            }
            if !seen.insert(basis) {
                return Err(bad(BadPrimeReason::FlatsCollide));
            }
        }

        Ok(ModArrangement {
            p,
            n: arr.n(),
            forms,
        })
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.forms.rows())
            .map(|i| self.forms.row(i).iter().map(|x| x.value()).collect())
            .collect()
    }
}

/// True iff reducing mod p preserves the intersection lattice.
pub fn good_prime_check(arr: &Arrangement, lattice: &IntersectionLattice, p: u64) -> bool {
    ModArrangement::reduce(arr, lattice, p).is_ok()
}

/// The first `count` good primes among `candidates` whose projective point
/// enumeration fits the budget.
pub fn first_good_primes(
    arr: &Arrangement,
    lattice: &IntersectionLattice,
    candidates: &[u64],
    count: usize,
    budget: u64,
) -> Vec<u64> {
    candidates
        .iter()
        .copied()
        .filter(|&p| {
            projective_point_total(p, arr.n()) <= budget as u128
                && affine_point_total(p, arr.n()) <= budget as u128
                && good_prime_check(arr, lattice, p)
        })
        .take(count)
        .collect()
}

fn projective_point_total(p: u64, n: usize) -> u128 {
    // (p^{n+1} - 1) / (p - 1)
    let mut total = 0u128;
    let mut power = 1u128;
    for _ in 0..=n {
        total += power;
        power = power.saturating_mul(p as u128);
    }
    total
}

fn affine_point_total(p: u64, n: usize) -> u128 {
    // p^{n+1}
    let mut power = 1u128;
    for _ in 0..=n {
        power = power.saturating_mul(p as u128);
    }
    power
}

/// Does any form vanish at the point? Forms and point are residues mod p.
fn on_some_hyperplane(forms: &[Vec<u64>], point: &[u64], p: u64) -> bool {
    forms.iter().any(|form| {
        let mut acc = 0u128;
        for (a, x) in form.iter().zip(point) {
            acc += (*a as u128) * (*x as u128);
        }
        acc % (p as u128) == 0
    })
}

/// Advance a base-p odometer; false once it wraps around to all zeros.
fn advance(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// Number of points of P^n(F_p) on no hyperplane, by streaming over the
/// normalized representatives (first nonzero coordinate equal to 1).
pub fn count_projective_complement(marr: &ModArrangement, budget: u64) -> Result<u64, FfError> {
    let n = marr.n;
    let p = marr.p;
    let total = projective_point_total(p, n);
    if total > budget as u128 {
        return Err(FfError::BudgetExceeded {
            points: total,
            budget,
        });
    }
    let forms = marr.residue_rows();
    let mut count = 0u64;
    let mut enumerated = 0u128;
    let mut point = vec![0u64; n + 1];
    for lead in 0..=n {
        // coordinates before `lead` are zero, coordinate `lead` is one
        point.iter_mut().for_each(|x| *x = 0);
        point[lead] = 1;
        loop {
            enumerated += 1;
            if !on_some_hyperplane(&forms, &point, p) {
                count += 1;
            }
            if lead == n || !advance(&mut point[lead + 1..], p) {
                break;
            }
        }
    }
    debug_assert_eq!(enumerated, total);
    Ok(count)
}

/// Number of points of F_p^{n+1} on no hyperplane, by full enumeration.
pub fn count_affine_complement(marr: &ModArrangement, budget: u64) -> Result<u64, FfError> {
    let n = marr.n;
    let p = marr.p;
    let total = affine_point_total(p, n);
    if total > budget as u128 {
        return Err(FfError::BudgetExceeded {
            points: total,
            budget,
        });
    }
    let forms = marr.residue_rows();
    let mut count = 0u64;
    let mut point = vec![0u64; n + 1];
    loop {
        if !on_some_hyperplane(&forms, &point, p) {
            count += 1;
        }
        if !advance(&mut point, p) {
            break;
        }
    }
    Ok(count)
}

/// Outcome of checking one prime: the enumerated counts against the
/// polynomial evaluations they must equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountCheck {
    pub p: u64,
    pub chi_reduced_at_p: BigInt,
    pub projective_count: u64,
    pub chi_at_p: BigInt,
    pub affine_count: u64,
    pub projective_matches: bool,
    pub affine_matches: bool,
}

impl CountCheck {
    pub fn pass(&self) -> bool {
        self.projective_matches && self.affine_matches
    }
}

/// Run both enumerations at p and compare with chi and chibar. A bad prime
/// surfaces as an error; a count mismatch at a good prime is reported in the
/// result (and means a bug somewhere, since equality is a theorem).
pub fn verify_point_count(
    arr: &Arrangement,
    lattice: &IntersectionLattice,
    chi: &IntPoly,
    chibar: &IntPoly,
    p: u64,
    budget: u64,
) -> Result<CountCheck, FfError> {
    let marr = ModArrangement::reduce(arr, lattice, p)?;
    let projective_count = count_projective_complement(&marr, budget)?;
    let affine_count = count_affine_complement(&marr, budget)?;
    let chi_reduced_at_p = chibar.eval(&BigInt::from(p));
    let chi_at_p = chi.eval(&BigInt::from(p));
    Ok(CountCheck {
        p,
        projective_matches: BigInt::from(projective_count) == chi_reduced_at_p,
        affine_matches: BigInt::from(affine_count) == chi_at_p,
        chi_reduced_at_p,
        projective_count,
        chi_at_p,
        affine_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::charpoly::{char_poly, reduced_char_poly};
    use num::traits::{One, Zero};

    fn verify(arr: &Arrangement, p: u64) -> Result<CountCheck, FfError> {
        let lat = IntersectionLattice::build(arr);
        let chi = char_poly(&lat);
        let chibar = reduced_char_poly(&chi);
        verify_point_count(arr, &lat, &chi, &chibar, p, DEFAULT_BUDGET)
    }

    #[test]
    fn four_lines_at_five() {
        let arr = builtins::four_lines();
        let check = verify(&arr, 5).unwrap();
        assert_eq!(check.projective_count, 12); // (5-1)(5-2)
        assert_eq!(check.affine_count, 48);
        assert!(check.pass());
        // complement counts stay below the totals of P^2(F_5) and F_5^3
        assert!(check.projective_count < 31);
        assert!(check.affine_count < 125);
        // the Grothendieck class specializes to the point count at L = p
        let lat = IntersectionLattice::build(&arr);
        let chibar = reduced_char_poly(&char_poly(&lat));
        let groth = crate::classes::grothendieck_class(&chibar);
        assert_eq!(groth.eval_at(&BigInt::from(5)), BigInt::from(12));
    }

    #[test]
    fn good_prime_checks() {
        let arr = builtins::four_lines();
        let lat = IntersectionLattice::build(&arr);
        assert!(good_prime_check(&arr, &lat, 5));
        assert!(good_prime_check(&arr, &lat, 2));

        for p in [2u64, 3, 5, 7, 11, 13] {
            let b = builtins::boolean(2);
            let bl = IntersectionLattice::build(&b);
            assert!(good_prime_check(&b, &bl, p));
        }

        // x, y, x + 5y degenerates mod 5: the third row collides with x
        let arr = Arrangement::from_integer_rows(1, &[vec![1, 0], vec![0, 1], vec![1, 5]]).unwrap();
        let lat = IntersectionLattice::build(&arr);
        assert!(!good_prime_check(&arr, &lat, 5));
        assert!(matches!(
            ModArrangement::reduce(&arr, &lat, 5),
            Err(FfError::BadPrime {
                p: 5,
                reason: BadPrimeReason::RowsCollide(0, 2)
            })
        ));
        assert!(good_prime_check(&arr, &lat, 7));
    }

    #[test]
    fn denominators_and_non_primes() {
        let half = crate::Rat::new(num::BigInt::from(1), num::BigInt::from(2));
        let arr = Arrangement::new(
            1,
            vec![
                vec![half, crate::Rat::zero()],
                vec![crate::Rat::zero(), crate::Rat::one()],
            ],
        )
        .unwrap();
        let lat = IntersectionLattice::build(&arr);
        assert!(matches!(
            ModArrangement::reduce(&arr, &lat, 2),
            Err(FfError::BadPrime {
                p: 2,
                reason: BadPrimeReason::DenominatorVanishes
            })
        ));
        assert!(good_prime_check(&arr, &lat, 3));
        assert_eq!(
            ModArrangement::reduce(&arr, &lat, 4).unwrap_err(),
            FfError::NotPrime(4)
        );
    }

    #[test]
    fn projective_counts() {
        // two points in P^1 at p = 7: complement has 7 - 1 = 6 points
        let two = builtins::pencil(2, 1);
        let check = verify(&two, 7).unwrap();
        assert_eq!(check.projective_count, 6);
        assert!(check.pass());

        // pencil of three lines in P^2 at p = 5: chibar(5) = 25 - 10 = 15
        let check = verify(&builtins::pencil(3, 2), 5).unwrap();
        assert_eq!(check.projective_count, 15);
        assert!(check.pass());
    }

    #[test]
    fn affine_counts() {
        // Boolean in P^1 at p = 3: (F_3*)^2 has 4 points
        let check = verify(&builtins::boolean(1), 3).unwrap();
        assert_eq!(check.affine_count, 4);
        assert!(check.pass());

        // one point in P^1 at p = 2: 2^2 - 2 = 2
        let arr = Arrangement::from_integer_rows(1, &[vec![1, 0]]).unwrap();
        let check = verify(&arr, 2).unwrap();
        assert_eq!(check.affine_count, 2);
        assert!(check.pass());
    }

    #[test]
    fn nine_lines_at_seven() {
        let check = verify(&builtins::counterexample(), 7).unwrap();
        assert_eq!(check.chi_reduced_at_p, BigInt::from(8)); // (7-3)(7-5)
        assert_eq!(check.projective_count, 8);
        assert!(check.pass());
    }

    #[test]
    fn budget_refusal() {
        let arr = builtins::counterexample().cone(7);
        let lat = IntersectionLattice::build(&arr);
        let chi = char_poly(&lat);
        let chibar = reduced_char_poly(&chi);
        assert!(matches!(
            verify_point_count(&arr, &lat, &chi, &chibar, 7, DEFAULT_BUDGET),
            Err(FfError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn first_good_primes_skip_bad_ones() {
        // rows degenerate mod 2 and mod 3
        let arr = Arrangement::from_integer_rows(
            1,
            &[vec![1, 0], vec![0, 1], vec![1, 2], vec![1, 3]],
        )
        .unwrap();
        let lat = IntersectionLattice::build(&arr);
        let primes = first_good_primes(&arr, &lat, &[2, 3, 5, 7, 11, 13], 2, DEFAULT_BUDGET);
        assert_eq!(primes, vec![5, 7]);
    }
}
