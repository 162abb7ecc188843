use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::SummandSpec;
use crate::error::{Error, Result};
use crate::liedata::{
    canonical_frame, free_coordinates, invariant_generators, CoordinateFrame, Family, GeneratorSet, SimpleType, Twist,
    Variant,
};
use crate::linalg::{self, Matrix};
use crate::poly::{LinearSubstitution, Namespace, Rational};

/// Coordinates on the torus of a simple summand: the canonical columns
/// (renamed `y…`) and the free subset actually used as variables.
#[derive(Clone, Debug)]
pub struct SummandCoordinates {
    pub ty: SimpleType,
    pub canonical: Namespace,
    pub free: Namespace,
    /// Each canonical column as a combination of the free ones.
    pub to_free: Matrix,
    frame: CoordinateFrame,
}

impl SummandCoordinates {
    pub fn new(ty: SimpleType) -> SummandCoordinates {
        let frame = canonical_frame(ty);
        let canonical = Namespace::new(frame.columns().names().iter().map(|n| n.replacen('x', "y", 1)));
        let (kept, eliminated) = free_coordinates(ty);
        let free = Namespace::new(kept.iter().map(|&c| canonical.name(c).to_string()));
        let mut to_free = linalg::zeros(canonical.len(), kept.len());
        for (i, &c) in kept.iter().enumerate() {
            to_free[c][i] = Rational::one();
        }
        if let Some(e) = eliminated {
            for x in to_free[e].iter_mut() {
                *x = Rational::integer(-1);
            }
        }
        SummandCoordinates {
            ty,
            canonical,
            free,
            to_free,
            frame,
        }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank() as usize
    }

    /// Simple coroots as canonical-column vectors.
    pub fn coroots(&self) -> Vec<Vec<Rational>> {
        self.frame.rows()[1..=self.rank()].to_vec()
    }

    /// Simple coroots in free coordinates: an invertible `l×l` matrix.
    pub fn coroots_free(&self) -> Matrix {
        let (kept, _) = free_coordinates(self.ty);
        self.coroots()
            .iter()
            .map(|r| kept.iter().map(|&c| r[c].clone()).collect())
            .collect()
    }

    pub fn cartan(&self) -> Matrix {
        let idx: Vec<usize> = (1..=self.rank()).collect();
        self.frame.cartan_matrix(&idx)
    }

    /// Weyl invariants of the summand written in the free coordinates.
    pub fn generators(&self) -> Result<GeneratorSet> {
        let set = invariant_generators(self.ty, Variant::Standard)?;
        let gens = set.gens.iter().map(|g| g.restrict(&self.to_free)).collect();
        Ok(GeneratorSet {
            variables: self.free.clone(),
            gens,
        })
    }

    /// Rewrites a block over the canonical columns in free coordinates.
    pub fn block_to_free(&self, block: &LinearSubstitution) -> Result<Matrix> {
        let m = block.matrix();
        Ok(m.iter()
            .map(|row| {
                let mut out = vec![Rational::zero(); self.free.len()];
                for (c, coeffs) in row.iter().zip(&self.to_free) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(coeffs) {
                        *o += &(c * x);
                    }
                }
                out
            })
            .collect())
    }
}

fn ambient_rows(frame: &CoordinateFrame, s: &SummandSpec) -> Result<Vec<Vec<Rational>>> {
    let n = frame.rows().len();
    let mut seen = Vec::new();
    for &i in &s.indices {
        if i >= n || seen.contains(&i) {
            return Err(Error::NotGeneralisedSymmetric(format!(
                "basis indices {:?} invalid for a diagram with {n} nodes",
                s.indices
            )));
        }
        seen.push(i);
    }
    if s.indices.len() != s.ty.rank() as usize {
        return Err(Error::RankMismatch {
            expected: s.ty.rank() as usize,
            found: s.indices.len(),
        });
    }
    Ok(s.indices.iter().map(|&i| frame.rows()[i].clone()).collect())
}

/// Checks that the chosen basis vectors form a diagram of the summand's
/// type, in the summand's node order.
pub fn check_summand(frame: &CoordinateFrame, s: &SummandSpec) -> Result<()> {
    let rows = ambient_rows(frame, s)?;
    let ambient = crate::liedata::cartan_of(rows, |a, b| frame.inner(a, b));
    let own = SummandCoordinates::new(s.ty).cartan();
    if ambient != own {
        return Err(Error::NotGeneralisedSymmetric(format!(
            "{}{:?} does not span a {} subdiagram in this order",
            if frame.twist() == Twist::First { "H" } else { "H̄" },
            s.indices,
            s.ty
        )));
    }
    Ok(())
}

/// The restriction of every ambient column to the summand torus, as
/// coefficients over the summand's free coordinates (one row per column).
///
/// Sends the `i`-th summand coroot to the `i`-th chosen basis vector, so
/// `x_j ↦ yᵀ W⁻¹ X_j` with `W` the free-coordinate coroot matrix.
pub fn derived_block(frame: &CoordinateFrame, s: &SummandSpec) -> Result<Matrix> {
    check_summand(frame, s)?;
    let coords = SummandCoordinates::new(s.ty);
    let w_inv = linalg::inverse(&coords.coroots_free()).expect("coroots are independent");
    let x = ambient_rows(frame, s)?;
    let m = linalg::mat_mul(&w_inv, &x);
    Ok(linalg::transpose(&m))
}

/// Lifts a free-coordinate image back to the canonical columns when it is a
/// signed coordinate (`±y_i`, including the eliminated one).
fn as_signed_coordinate(row: &[Rational], coords: &SummandCoordinates) -> Option<Option<(usize, Rational)>> {
    if row.iter().all(Rational::is_zero) {
        return Some(None);
    }
    for sign in [Rational::one(), Rational::integer(-1)] {
        for (c, image) in coords.to_free.iter().enumerate() {
            if row.iter().zip(image).all(|(a, b)| *a == &sign * b) {
                return Some(Some((c, sign)));
            }
        }
    }
    None
}

fn unlisted(ambient: SimpleType, twist: Twist, s: &SummandSpec) -> Error {
    Error::UnlistedCase(format!(
        "{} in {ambient} (category {}) via {:?}",
        s.ty,
        twist.number(),
        s.indices
    ))
}

/// Bases spanning the same torus as an `A3` that are handled separately.
pub fn is_special_a3(ambient: SimpleType, twist: Twist, s: &SummandSpec) -> bool {
    if s.ty != SimpleType::a(3) {
        return false;
    }
    let mut idx = s.indices.clone();
    idx.sort_unstable();
    let n = ambient.rank() as usize;
    match (ambient.family(), twist) {
        (Family::B | Family::D, Twist::First) if idx == [0, 1, 2] => true,
        (Family::D, Twist::First) => idx == [n - 2, n - 1, n],
        (Family::A, Twist::Second) if n % 2 == 0 => idx == [0, 1, 2],
        _ => false,
    }
}

/// The signed coordinate matching of a classical summand: every ambient
/// column goes to `±y_i` or to `0`, with distinct targets.
pub fn classical_restriction(ambient: SimpleType, twist: Twist, s: &SummandSpec) -> Result<LinearSubstitution> {
    if !ambient.family().is_classical() || twist == Twist::Third {
        return Err(unlisted(ambient, twist, s));
    }
    if is_special_a3(ambient, twist, s) {
        return Err(unlisted(ambient, twist, s));
    }
    let frame = crate::liedata::kac_basis_matrix(ambient, twist)?;
    let block = derived_block(&frame, s).map_err(|_| unlisted(ambient, twist, s))?;
    let coords = SummandCoordinates::new(s.ty);
    let mut used = Vec::new();
    let mut m = linalg::zeros(block.len(), coords.canonical.len());
    for (j, row) in block.iter().enumerate() {
        match as_signed_coordinate(row, &coords) {
            Some(None) => {}
            Some(Some((c, sign))) => {
                // category 2 images repeat a coordinate once, with the opposite sign
                let clash = used
                    .iter()
                    .any(|(u, sg): &(usize, Rational)| *u == c && (*sg == sign || twist == Twist::First));
                if clash {
                    return Err(unlisted(ambient, twist, s));
                }
                used.push((c, sign.clone()));
                m[j][c] = sign;
            }
            None => return Err(unlisted(ambient, twist, s)),
        }
    }
    LinearSubstitution::from_matrix(frame.columns(), &coords.canonical, &m)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Hand-written maps for exceptional ambients, written over the summand's
/// canonical columns. Returns `UnlistedCase` when no map is recorded.
pub fn exceptional_restriction(ambient: SimpleType, twist: Twist, s: &SummandSpec) -> Result<LinearSubstitution> {
    let coords = SummandCoordinates::new(s.ty);
    let frame = crate::liedata::kac_basis_matrix(ambient, twist)?;
    let l = coords.canonical.len();
    let e = |i: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); l];
        v[i - 1] = Rational::one();
        v
    };
    let zero = || vec![Rational::zero(); l];
    let comb = |terms: &[(usize, Rational)]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); l];
        for (i, c) in terms {
            v[i - 1] += c;
        }
        v
    };
    let neg = |v: Vec<Rational>| -> Vec<Rational> { v.into_iter().map(|x| -x).collect() };
    let one = Rational::one;
    let m1 = || Rational::integer(-1);
    let idx = s.indices.as_slice();
    let rows: Vec<Vec<Rational>> = match (ambient.family(), twist, s.ty.family(), s.ty.rank(), idx) {
        (Family::D, Twist::Third, Family::G2, _, _) => {
            // only x4 = 0 and x1 = x2 + x3 are pinned down; use the derived map
            let block = derived_block(&frame, s)?;
            return lift_free(&frame, &coords, &block);
        }
        (Family::F4, Twist::First, Family::B, 3, [4, 3, 2]) => vec![zero(), e(1), e(2), e(3)],
        (Family::F4, Twist::First, Family::B, 4, [0, 4, 3, 2]) => vec![neg(e(1)), e(2), e(3), e(4)],
        (Family::F4, Twist::First, Family::C, 3, [1, 2, 3]) => vec![
            e(1),
            neg(e(1)),
            comb(&[(2, one()), (3, one())]),
            comb(&[(2, one()), (3, m1())]),
        ],
        (Family::E6, Twist::First, Family::A, 4, [1, 2, 3, 4]) => {
            vec![e(1), e(2), e(3), e(4), e(5), zero(), zero()]
        }
        (Family::E6, Twist::First, Family::A, 5, [1, 2, 3, 4, 5]) => {
            vec![e(1), e(2), e(3), e(4), e(5), e(6), zero()]
        }
        (Family::E6, Twist::First, Family::D, 4, [2, 3, 4, 6]) => {
            let y = |c: i64| -> Vec<(usize, Rational)> { (1..=4).map(|i| (i, q(c, 4))).collect() };
            let shifted = |i: usize| {
                let mut t = y(-1);
                t.push((i, one()));
                comb(&t)
            };
            vec![
                comb(&y(-1)),
                shifted(1),
                shifted(2),
                shifted(3),
                shifted(4),
                comb(&y(1)),
                comb(&y(1)),
            ]
        }
        (Family::E6, Twist::First, Family::D, 5, [1, 2, 3, 4, 6]) => {
            let y = |c: i64| -> Vec<(usize, Rational)> { (1..=5).map(|i| (i, q(c, 4))).collect() };
            let shifted = |i: usize| {
                let mut t = y(-1);
                t.push((i, one()));
                comb(&t)
            };
            vec![
                shifted(1),
                shifted(2),
                shifted(3),
                shifted(4),
                shifted(5),
                comb(&y(1)),
                comb(&y(1)),
            ]
        }
        (Family::E6, Twist::Second, Family::B, 3, [4, 3, 2]) => vec![
            zero(),
            comb(&[(1, q(1, 2)), (2, q(1, 2)), (3, q(1, 2))]),
            comb(&[(1, q(1, 2)), (2, q(1, 2)), (3, q(-1, 2))]),
            comb(&[(1, q(1, 2)), (2, q(-1, 2)), (3, q(1, 2))]),
            comb(&[(1, q(1, 2)), (2, q(-1, 2)), (3, q(-1, 2))]),
            e(1),
        ],
        (Family::E6, Twist::Second, Family::C, 3, [1, 2, 3]) => {
            vec![e(1), e(2), e(3), neg(e(3)), neg(e(2)), neg(e(1))]
        }
        (Family::E6, Twist::Second, Family::C, 4, [0, 1, 2, 3]) => vec![
            comb(&[(1, m1()), (2, one())]),
            comb(&[(1, m1()), (3, one())]),
            comb(&[(1, m1()), (4, one())]),
            comb(&[(1, m1()), (4, m1())]),
            comb(&[(1, m1()), (3, m1())]),
            comb(&[(1, m1()), (2, m1())]),
        ],
        _ => return Err(unlisted(ambient, twist, s)),
    };
    LinearSubstitution::from_matrix(frame.columns(), &coords.canonical, &rows)
}

/// Writes a free-coordinate block over the canonical columns, leaving the
/// eliminated column unused.
pub fn lift_free(frame: &CoordinateFrame, coords: &SummandCoordinates, block: &Matrix) -> Result<LinearSubstitution> {
    let (kept, _) = free_coordinates(coords.ty);
    let rows: Matrix = block
        .iter()
        .map(|r| {
            let mut v = vec![Rational::zero(); coords.canonical.len()];
            for (x, &c) in r.iter().zip(&kept) {
                v[c] = x.clone();
            }
            v
        })
        .collect();
    LinearSubstitution::from_matrix(frame.columns(), &coords.canonical, &rows)
}

/// `Σ_{i<j≤3} (y_i + y_j)^4`, the restricted quartic for the `A3` bases
/// excluded from the signed-matching cases, together with the generator
/// set it is expressed in: standard `A3` power sums with `y4 = −y1−y2−y3`.
pub fn special_a3_fixture() -> (crate::poly::Polynomial, GeneratorSet) {
    let coords = SummandCoordinates::new(SimpleType::a(3));
    let ns = coords.free.clone();
    let mut r = crate::poly::Polynomial::zero(&ns);
    for i in 0..3 {
        for j in i + 1..3 {
            let mut f = vec![Rational::zero(); 3];
            f[i] = Rational::one();
            f[j] = Rational::one();
            r.add_scaled(&crate::poly::Polynomial::linear(&ns, &f).pow(4), &Rational::one())
                .expect("same namespace");
        }
    }
    (r, coords.generators().expect("A3 generators"))
}
