//! Central hyperplane arrangements, their intersection lattices, and the
//! Möbius function.
//!
//! An arrangement in projective space P^n is stored as the matrix of linear
//! forms of the corresponding central arrangement in k^{n+1} (one row per
//! hyperplane). A flat is an intersection of some of the hyperplanes; flats
//! ordered by reverse inclusion form the intersection lattice, whose minimum
//! is the whole space and whose maximum is the common intersection of all
//! hyperplanes (the center).

use std::collections::{BTreeSet, HashMap};

use num::traits::{One, Zero};
use num::BigInt;
use thiserror::Error;

use crate::mat::{span_contains, Mat};
use crate::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("an arrangement needs at least one hyperplane")]
    Empty,
    #[error("row {row} has {got} entries, expected {expected}")]
    BadRowLength { row: usize, got: usize, expected: usize },
    #[error("row {0} is zero; every hyperplane needs a nonzero linear form")]
    ZeroRow(usize),
    #[error("rows {0} and {1} are proportional; hyperplanes must be distinct")]
    ProportionalRows(usize, usize),
}

/// A hyperplane arrangement in P^n, given by the d x (n+1) matrix of linear
/// forms of the central arrangement in k^{n+1}. Construction enforces that
/// every row is nonzero and no two rows are proportional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    forms: Mat<Rat>,
}

fn rows_proportional(a: &[Rat], b: &[Rat]) -> bool {
    let Some(i0) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[i0].is_zero() {
        return false;
    }
    let ratio = b[i0].clone() / a[i0].clone();
    a.iter()
        .zip(b.iter())
        .all(|(x, y)| y.clone() == ratio.clone() * x.clone())
}

impl Arrangement {
    pub fn new(n: usize, rows: Vec<Vec<Rat>>) -> Result<Self, ArrangementError> {
        if rows.is_empty() {
            return Err(ArrangementError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(ArrangementError::BadRowLength {
                    row: i,
                    got: row.len(),
                    expected: n + 1,
                });
            }
            if row.iter().all(|x| x.is_zero()) {
                return Err(ArrangementError::ZeroRow(i));
            }
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if rows_proportional(&rows[i], &rows[j]) {
                    return Err(ArrangementError::ProportionalRows(i, j));
                }
            }
        }
        Ok(Arrangement {
            n,
            forms: Mat::from_rows(rows),
        })
    }

    pub fn from_integer_rows(n: usize, rows: &[Vec<i64>]) -> Result<Self, ArrangementError> {
        Arrangement::new(
            n,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// Projective ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperplanes.
    pub fn d(&self) -> usize {
        self.forms.rows()
    }

    pub fn forms(&self) -> &Mat<Rat> {
        &self.forms
    }

    /// Dimension of the common intersection of all hyperplanes, as a linear
    /// subspace of k^{n+1}.
    pub fn center_dim(&self) -> usize {
        self.n + 1 - self.forms.rank()
    }

    /// Essential means the hyperplanes intersect only at the origin.
    pub fn is_essential(&self) -> bool {
        self.center_dim() == 0
    }

    /// The same hyperplanes viewed in P^{n+k}: append k coordinates on which
    /// no form depends. The characteristic polynomial picks up a factor t^k.
    pub fn cone(&self, k: usize) -> Arrangement {
        let cols = self.n + 1;
        let forms = Mat::from_fn(self.d(), cols + k, |r, c| {
            if c < cols {
                self.forms.at(r, c).clone()
            } else {
                Rat::zero()
            }
        });
        Arrangement {
            n: self.n + k,
            forms,
        }
    }

    /// Quotient by the center: returns an essential arrangement in P^{n-k}
    /// together with k = dim(center). The forms are rewritten on the pivot
    /// coordinates of their row space, which is a linear change of
    /// coordinates, so the intersection lattice is unchanged.
    pub fn essentialize(&self) -> (Arrangement, usize) {
        let pivots = self.forms.pivot_cols();
        let k = self.n + 1 - pivots.len();
        let restricted = self.forms.select_cols(&pivots);
        let arr = Arrangement {
            n: pivots.len() - 1,
            forms: restricted,
        };
        (arr, k)
    }
}

/// A flat of the intersection lattice: a subspace of k^{n+1} obtained by
/// intersecting some of the hyperplanes.
#[derive(Clone, Debug)]
pub struct Flat {
    span: Mat<Rat>,
    codim: usize,
    dim: usize,
    members: BTreeSet<usize>,
    mobius: BigInt,
}

impl Flat {
    /// Canonical basis (RREF rows) of the linear forms vanishing on the flat.
    pub fn span(&self) -> &Mat<Rat> {
        &self.span
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Dimension as a linear subspace of k^{n+1}.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Indices of the hyperplanes containing the flat.
    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn mobius(&self) -> &BigInt {
        &self.mobius
    }
}

/// The intersection poset of a central arrangement, with Möbius values
/// assigned. Flat 0 is the whole space; flats are stored by increasing
/// codimension.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    n: usize,
    d: usize,
    flats: Vec<Flat>,
}

impl IntersectionLattice {
    /// Build all flats breadth-first by codimension and run the Möbius
    /// recursion. Every subspace is keyed by the canonical RREF of its
    /// defining forms, so each flat is produced exactly once with its full
    /// membership closure.
    pub fn build(arr: &Arrangement) -> IntersectionLattice {
        let n = arr.n();
        let d = arr.d();
        let rows: Vec<Mat<Rat>> = (0..d).map(|i| arr.forms().row_mat(i)).collect();

        let ambient = Flat {
            span: Mat::zero(0, n + 1),
            codim: 0,
            dim: n + 1,
            members: BTreeSet::new(),
            mobius: BigInt::one(),
        };
        let mut flats = vec![ambient];
        let mut index: HashMap<Mat<Rat>, usize> = HashMap::new();
        index.insert(flats[0].span.clone(), 0);

        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &fi in &frontier {
                for j in 0..d {
                    if flats[fi].members.contains(&j) {
                        continue;
                    }
                    // j is not a member, so stacking its form raises the rank
                    // by exactly one.
                    let span = flats[fi].span.stack(&rows[j]).row_space_basis();
                    if index.contains_key(&span) {
                        continue;
                    }
                    let members: BTreeSet<usize> =
                        (0..d).filter(|&i| span_contains(&span, &rows[i])).collect();
                    let codim = span.rows();
                    index.insert(span.clone(), flats.len());
                    next.push(flats.len());
                    flats.push(Flat {
                        span,
                        codim,
                        dim: n + 1 - codim,
                        members,
                        mobius: BigInt::zero(),
                    });
                }
            }
            frontier = next;
        }

        let mut lattice = IntersectionLattice { n, d, flats };
        lattice.assign_mobius();
        lattice
    }

    /// Möbius recursion from the defining prescription: mu of the whole space
    /// is 1, and the values summed over each down-set vanish.
    fn assign_mobius(&mut self) {
        for i in 1..self.flats.len() {
            let mut acc = BigInt::zero();
            for j in 0..self.flats.len() {
                if j != i && self.leq(j, i) {
                    acc += &self.flats[j].mobius;
                }
            }
            self.flats[i].mobius = -acc;
        }
    }

    /// Poset order: flat `a` precedes flat `b` iff the subspace of `a`
    /// contains the subspace of `b`. For flats of one arrangement this is
    /// equivalent to membership containment, since a flat is the intersection
    /// of exactly the hyperplanes in its member set.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.flats[a].members.is_subset(&self.flats[b].members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// The maximum of the lattice: the common intersection of all
    /// hyperplanes. The arrangement is essential iff this flat has dim 0.
    pub fn center(&self) -> &Flat {
        self.flats
            .iter()
            .find(|f| f.members.len() == self.d)
            .expect("the intersection of all hyperplanes is always a flat")
    }

    /// Number of flats of each codimension, index = codim.
    pub fn level_counts(&self) -> Vec<usize> {
        let max = self.flats.iter().map(|f| f.codim).max().unwrap_or(0);
        let mut counts = vec![0usize; max + 1];
        for f in &self.flats {
            counts[f.codim] += 1;
        }
        counts
    }

    /// Sorted Möbius values of each codimension level.
    pub fn mobius_by_level(&self) -> Vec<Vec<BigInt>> {
        let max = self.flats.iter().map(|f| f.codim).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); max + 1];
        for f in &self.flats {
            levels[f.codim].push(f.mobius.clone());
        }
        for level in &mut levels {
            level.sort();
        }
        levels
    }
}
