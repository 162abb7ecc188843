//! Generalised symmetric spaces as fixed-point data, and the restriction
//! of ambient torus coordinates to the isotropy torus.

mod blocks;
mod catalog;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use blocks::{
    check_summand, classical_restriction, derived_block, exceptional_restriction, is_special_a3, lift_free,
    special_a3_fixture, SummandCoordinates,
};
pub use catalog::{catalog, extra_spaces, find_family, CatalogFamily, Params};

use crate::error::{Error, Result};
use crate::liedata::{
    invariant_generators, kac_basis_matrix, CoordinateFrame, ExponentMultiset, Family, GeneratorSet, SimpleType, Twist,
    Variant,
};
use crate::linalg::{self, Matrix};
use crate::poly::{LinearSubstitution, Namespace, Rational};

/// A simple summand of the isotropy algebra, given by the Kac-basis rows
/// that map to its simple coroots (in order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SummandSpec {
    pub ty: SimpleType,
    pub indices: Vec<usize>,
}

impl SummandSpec {
    pub fn new(ty: SimpleType, indices: Vec<usize>) -> SummandSpec {
        SummandSpec { ty, indices }
    }
}

/// `G/H` with `G` simple and `H` the identity component of the fixed points
/// of a finite-order automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceDescriptor {
    pub ambient: SimpleType,
    pub twist: Twist,
    pub torus_rank: usize,
    pub summands: Vec<SummandSpec>,
    pub name: Option<String>,
    /// Inert label metadata, e.g. `(k; s0,...,sr; m)`.
    pub kac_type: Option<String>,
}

impl SpaceDescriptor {
    pub fn new(ambient: SimpleType, twist: Twist, torus_rank: usize, summands: Vec<SummandSpec>) -> SpaceDescriptor {
        SpaceDescriptor {
            ambient,
            twist,
            torus_rank,
            summands,
            name: None,
            kac_type: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> SpaceDescriptor {
        self.name = Some(name.into());
        self
    }

    pub fn category(&self) -> u8 {
        self.twist.number()
    }

    /// The display name, or the generic form
    /// `g=A5; cat=2; torus=0; summands=[(C3,[1,2,3])]`.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.generic_form(),
        }
    }

    pub fn generic_form(&self) -> String {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let idx: Vec<String> = s.indices.iter().map(|i| i.to_string()).collect();
                format!("({},[{}])", s.ty, idx.join(","))
            })
            .collect();
        format!(
            "g={}; cat={}; torus={}; summands=[{}]",
            self.ambient,
            self.category(),
            self.torus_rank,
            parts.join(",")
        )
    }

    pub fn frame(&self) -> Result<CoordinateFrame> {
        kac_basis_matrix(self.ambient, self.twist)
    }

    pub fn rank_h(&self) -> usize {
        self.torus_rank + self.summands.iter().map(|s| s.ty.rank() as usize).sum::<usize>()
    }

    pub fn is_equal_rank(&self) -> bool {
        self.rank_h() == self.ambient.rank() as usize
    }

    /// Exponent multiset of the semisimple part of `H`.
    pub fn h_exponents(&self) -> ExponentMultiset {
        self.summands
            .iter()
            .fold(ExponentMultiset::default(), |acc, s| acc.union(&s.ty.exponents()))
    }

    /// Checks the index sets against the Kac diagram, mutual orthogonality
    /// of the summands and the torus rank.
    pub fn validate(&self) -> Result<()> {
        let frame = self.frame()?;
        for s in &self.summands {
            check_summand(&frame, s)?;
        }
        for (a, s) in self.summands.iter().enumerate() {
            for t in &self.summands[a + 1..] {
                if s.indices.iter().any(|i| t.indices.contains(i)) {
                    return Err(Error::NotGeneralisedSymmetric(format!(
                        "summands share a basis vector: {:?} {:?}",
                        s.indices, t.indices
                    )));
                }
                for &i in &s.indices {
                    for &j in &t.indices {
                        if !frame.inner(&frame.rows()[i], &frame.rows()[j]).is_zero() {
                            return Err(Error::NotGeneralisedSymmetric(format!(
                                "{} and {} are not orthogonal",
                                frame.row_label(i),
                                frame.row_label(j)
                            )));
                        }
                    }
                }
            }
        }
        let semisimple: usize = self.summands.iter().map(|s| s.ty.rank() as usize).sum();
        let expected = frame.span_dim() - semisimple;
        if self.torus_rank != expected {
            return Err(Error::RankMismatch {
                expected,
                found: self.torus_rank,
            });
        }
        Ok(())
    }

    /// Weyl invariants of `G` over the frame's columns.
    pub fn ambient_generators(&self) -> Result<GeneratorSet> {
        let variant = if self.twist == Twist::Second && self.ambient.family() == Family::E6 {
            Variant::Takeuchi
        } else {
            Variant::Standard
        };
        invariant_generators(self.ambient, variant)
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A linear map from the ambient columns to `u1..ut` followed by the free
/// coordinates of each summand.
#[derive(Clone, Debug)]
pub struct RestrictionMap {
    pub source: Namespace,
    pub target: Namespace,
    /// One row per ambient column, coefficients over `target`.
    pub matrix: Matrix,
    pub torus: Vec<usize>,
    /// Target positions of each summand's free coordinates.
    pub blocks: Vec<Vec<usize>>,
    /// The complement basis used for the torus, in ambient column values.
    pub center: Vec<Vec<Rational>>,
}

impl RestrictionMap {
    pub fn substitution(&self) -> LinearSubstitution {
        LinearSubstitution::from_matrix(&self.source, &self.target, &self.matrix).expect("shapes agree")
    }

    /// Composes with a linear change of the target coordinates, given as
    /// one row per target variable.
    pub fn then_matrix(&self, m: &[Vec<Rational>]) -> RestrictionMap {
        RestrictionMap {
            matrix: linalg::mat_mul(&self.matrix, m),
            ..self.clone()
        }
    }

    /// Negates the listed target coordinates.
    pub fn with_signs(&self, negate: &[usize]) -> RestrictionMap {
        let mut m = linalg::identity(self.target.len());
        for &i in negate {
            m[i][i] = Rational::integer(-1);
        }
        self.then_matrix(&m)
    }
}

fn suffix(s: usize, count: usize) -> String {
    if count >= 2 {
        format!("_{}", s + 1)
    } else {
        String::new()
    }
}

/// Names of summand `s`'s free coordinates in the target namespace.
pub fn summand_variable_names(space: &SpaceDescriptor, s: usize) -> Vec<String> {
    let coords = SummandCoordinates::new(space.summands[s].ty);
    let sfx = suffix(s, space.summands.len());
    coords.free.names().iter().map(|n| format!("{n}{sfx}")).collect()
}

/// Symbol for a summand generator, `P4 ↦ Q4` (`Q4_2` with several summands).
pub fn summand_symbol(space: &SpaceDescriptor, s: usize, symbol: &str) -> String {
    let sfx = suffix(s, space.summands.len());
    match symbol.strip_suffix('\'') {
        Some(base) => format!("Q{}{sfx}'", &base[1..]),
        None => format!("Q{}{sfx}", &symbol[1..]),
    }
}

/// Metric complement of the summand coroots inside the span of the basis.
fn center(frame: &CoordinateFrame, space: &SpaceDescriptor) -> Vec<Vec<Rational>> {
    let mut basis = frame.rows().to_vec();
    let pivots = linalg::rref(&mut basis);
    basis.truncate(pivots.len());
    let summand_rows: Vec<&Vec<Rational>> = space
        .summands
        .iter()
        .flat_map(|s| s.indices.iter().map(|&i| &frame.rows()[i]))
        .collect();
    let gram: Matrix = summand_rows
        .iter()
        .map(|r| basis.iter().map(|b| frame.inner(b, r)).collect())
        .collect();
    linalg::nullspace(&gram, basis.len())
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![Rational::zero(); frame.columns().len()];
            for (c, b) in coeffs.iter().zip(&basis) {
                for (o, x) in v.iter_mut().zip(b) {
                    *o += &(c * x);
                }
            }
            v
        })
        .collect()
}

/// The full restriction `ρ*`: torus coordinates from the metric complement
/// of the summands, and each summand block from its coroots.
pub fn full_restriction(space: &SpaceDescriptor) -> Result<RestrictionMap> {
    space.validate()?;
    let frame = space.frame()?;
    let zeta = center(&frame, space);
    if zeta.len() != space.torus_rank {
        return Err(Error::RankMismatch {
            expected: zeta.len(),
            found: space.torus_rank,
        });
    }
    let mut names: Vec<String> = (1..=space.torus_rank).map(|t| format!("u{t}")).collect();
    let mut blocks = Vec::new();
    for s in 0..space.summands.len() {
        let start = names.len();
        names.extend(summand_variable_names(space, s));
        blocks.push((start..names.len()).collect::<Vec<_>>());
    }
    let cols = frame.columns().len();
    let mut matrix = linalg::zeros(cols, names.len());
    for (t, z) in zeta.iter().enumerate() {
        for j in 0..cols {
            matrix[j][t] = z[j].clone();
        }
    }
    for (s, spec) in space.summands.iter().enumerate() {
        let block = derived_block(&frame, spec)?;
        for j in 0..cols {
            for (k, &pos) in blocks[s].iter().enumerate() {
                matrix[j][pos] = block[j][k].clone();
            }
        }
    }
    Ok(RestrictionMap {
        source: frame.columns().clone(),
        target: Namespace::new(names),
        matrix,
        torus: (0..space.torus_rank).collect(),
        blocks,
        center: zeta,
    })
}
