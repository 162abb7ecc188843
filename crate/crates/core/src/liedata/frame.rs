use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Family, SimpleType};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Namespace, Rational};

/// Which affine diagram the Kac basis comes from: the untwisted one
/// (inner automorphisms), the order-2 twist, or the D4 order-3 twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Twist {
    First,
    Second,
    Third,
}

impl Twist {
    pub fn number(self) -> u8 {
        match self {
            Twist::First => 1,
            Twist::Second => 2,
            Twist::Third => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Twist> {
        match n {
            1 => Some(Twist::First),
            2 => Some(Twist::Second),
            3 => Some(Twist::Third),
            _ => None,
        }
    }
}

/// Canonical coordinates on a maximal torus together with the Kac basis
/// vectors written in them.
///
/// `columns` are the frame coordinates; `variables` adds linear forms
/// derived from them (only the E6 twisted frame has any). Row `i` holds the
/// values of the columns on the basis vector `H_i` (or `H̄_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateFrame {
    ty: SimpleType,
    twist: Twist,
    columns: Namespace,
    variables: Namespace,
    derived: Vec<Vec<Rational>>,
    rows: Vec<Vec<Rational>>,
    metric: Vec<(Rational, Vec<Rational>)>,
}

impl CoordinateFrame {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn columns(&self) -> &Namespace {
        &self.columns
    }

    /// Columns followed by derived forms.
    pub fn variables(&self) -> &Namespace {
        &self.variables
    }

    /// Each variable as a combination of the columns.
    pub fn derived(&self) -> &[Vec<Rational>] {
        &self.derived
    }

    /// Basis vectors as column-value vectors.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row_label(&self, i: usize) -> String {
        match self.twist {
            Twist::First => format!("H{i}"),
            _ => format!("H̄{i}"),
        }
    }

    /// Values of every variable on basis vector `i`.
    pub fn matrix(&self) -> linalg::Matrix {
        self.rows.iter().map(|r| self.values(r)).collect()
    }

    /// Extends a column-value vector by the derived forms.
    pub fn values(&self, v: &[Rational]) -> Vec<Rational> {
        self.derived.iter().map(|d| linalg::dot(d, v)).collect()
    }

    /// Invariant inner product on column-value vectors.
    pub fn inner(&self, v: &[Rational], w: &[Rational]) -> Rational {
        self.metric
            .iter()
            .map(|(c, f)| c * &(linalg::dot(f, v) * linalg::dot(f, w)))
            .sum()
    }

    /// `2(v_i, v_j)/(v_j, v_j)` over the chosen rows.
    pub fn cartan_matrix(&self, indices: &[usize]) -> linalg::Matrix {
        cartan_of(indices.iter().map(|&i| self.rows[i].clone()).collect(), |a, b| {
            self.inner(a, b)
        })
    }

    /// Dimension of the span of the basis vectors.
    pub fn span_dim(&self) -> usize {
        linalg::rank(&self.rows)
    }
}

pub fn cartan_of<F>(vs: Vec<Vec<Rational>>, inner: F) -> linalg::Matrix
where
    F: Fn(&[Rational], &[Rational]) -> Rational,
{
    let two = Rational::integer(2);
    vs.iter()
        .map(|a| vs.iter().map(|b| &two * &inner(a, b) / inner(b, b)).collect())
        .collect()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

fn grid(rows: usize, cols: usize) -> Vec<Vec<Rational>> {
    linalg::zeros(rows, cols)
}

/// `p[i][j-1] = v`, i.e. column indices are 1-based.
fn set(p: &mut [Vec<Rational>], i: usize, j: usize, v: Rational) {
    p[i][j - 1] = v;
}

fn unit_forms(n: usize) -> Vec<(Rational, Vec<Rational>)> {
    linalg::identity(n).into_iter().map(|f| (Rational::one(), f)).collect()
}

fn plain(
    ty: SimpleType,
    twist: Twist,
    columns: Namespace,
    rows: Vec<Vec<Rational>>,
    metric: Vec<(Rational, Vec<Rational>)>,
) -> CoordinateFrame {
    let n = columns.len();
    CoordinateFrame {
        ty,
        twist,
        variables: columns.clone(),
        columns,
        derived: linalg::identity(n),
        rows,
        metric,
    }
}

fn first_category_rows(t: SimpleType) -> Vec<Vec<Rational>> {
    let n = t.rank() as usize;
    match t.family() {
        Family::A => {
            let mut p = grid(n + 1, n + 1);
            for i in 1..=n {
                set(&mut p, i, i, int(1));
            }
            for i in 1..=n + 1 {
                set(&mut p, i - 1, i, int(-1));
            }
            set(&mut p, 0, n + 1, int(1));
            p
        }
        Family::B => {
            let mut p = grid(n + 1, n);
            for i in 1..n {
                set(&mut p, i, i, int(1));
            }
            for i in 1..=n {
                set(&mut p, i - 1, i, int(-1));
            }
            if n >= 2 {
                set(&mut p, 0, 2, int(-1));
            }
            set(&mut p, n, n, int(2));
            p
        }
        Family::C => {
            let mut p = grid(n + 1, n);
            for i in 1..=n {
                set(&mut p, i, i, int(1));
                set(&mut p, i - 1, i, int(-1));
            }
            p
        }
        Family::D => {
            let mut p = grid(n + 1, n);
            for i in 1..=n {
                set(&mut p, i, i, int(1));
                set(&mut p, i - 1, i, int(-1));
            }
            set(&mut p, 0, 2, int(-1));
            set(&mut p, n, n - 1, int(1));
            p
        }
        Family::G2 => [[-1, 0, 1], [1, -2, 1], [0, 1, -1]]
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect(),
        Family::F4 => [
            [-1, -1, 0, 0],
            [1, -1, -1, -1],
            [0, 0, 0, 2],
            [0, 0, 1, -1],
            [0, 1, -1, 0],
        ]
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect(),
        Family::E6 => {
            // columns x1..x6, then ε
            let mut p = grid(7, 7);
            for i in 1..=5 {
                set(&mut p, i, i, int(1));
            }
            for i in 2..=6 {
                set(&mut p, i - 1, i, int(-1));
            }
            for i in 1..=3 {
                set(&mut p, 6, i, q(-1, 2));
            }
            for i in 4..=6 {
                set(&mut p, 6, i, q(1, 2));
            }
            set(&mut p, 0, 7, int(-1));
            set(&mut p, 6, 7, q(1, 2));
            p
        }
        Family::E7 => {
            // eight columns
            let mut p = grid(8, 8);
            for i in 1..=6 {
                set(&mut p, i, i, int(1));
            }
            for i in 2..=7 {
                set(&mut p, i - 1, i, int(-1));
            }
            for i in 1..=4 {
                set(&mut p, 7, i, q(-1, 2));
            }
            for i in 5..=8 {
                set(&mut p, 7, i, q(1, 2));
            }
            set(&mut p, 0, 7, int(1));
            set(&mut p, 0, 8, int(-1));
            p
        }
        Family::E8 => {
            // the "x_{8i}" row is read as p_{8i}
            let mut p = grid(9, 8);
            for i in 1..=7 {
                set(&mut p, i, i, int(1));
            }
            for i in 1..=8 {
                set(&mut p, i - 1, i, int(-1));
            }
            for i in 1..=5 {
                set(&mut p, 8, i, q(-1, 3));
            }
            for i in 6..=8 {
                set(&mut p, 8, i, q(2, 3));
            }
            p
        }
    }
}

fn canonical_columns(t: SimpleType) -> Namespace {
    let n = t.rank() as usize;
    match t.family() {
        Family::A => Namespace::indexed("x", n + 1),
        Family::G2 => Namespace::indexed("x", 3),
        Family::E6 => Namespace::new(["x1", "x2", "x3", "x4", "x5", "x6", "eps"]),
        Family::E7 | Family::E8 => Namespace::indexed("x", 8),
        _ => Namespace::indexed("x", n),
    }
}

fn canonical_metric(t: SimpleType) -> Vec<(Rational, Vec<Rational>)> {
    let cols = canonical_columns(t).len();
    match t.family() {
        Family::E6 => {
            let mut m = unit_forms(7);
            m[6].0 = int(2);
            m
        }
        Family::E8 => {
            // the omitted ninth coordinate is −Σx
            let mut m = unit_forms(8);
            m.push((Rational::one(), vec![int(-1); 8]));
            m
        }
        _ => unit_forms(cols),
    }
}

fn ambient_ok(t: SimpleType) -> bool {
    let n = t.rank();
    match t.family() {
        Family::A => n >= 1,
        Family::B | Family::C => n >= 2,
        Family::D => n >= 4,
        _ => true,
    }
}

/// Untwisted frame with no ambient rank bound, for summands such as
/// `B1`, `C2` or `D3`. Row 0 is only meaningful for ambient ranks.
pub fn canonical_frame(t: SimpleType) -> CoordinateFrame {
    plain(
        t,
        Twist::First,
        canonical_columns(t),
        first_category_rows(t),
        canonical_metric(t),
    )
}

/// Columns kept as free coordinates, and the column (if any) that equals
/// minus the sum of the others on the torus.
pub fn free_coordinates(t: SimpleType) -> (Vec<usize>, Option<usize>) {
    let cols = canonical_columns(t).len();
    let eliminated = match t.family() {
        Family::A => Some(cols - 1),
        Family::G2 => Some(2),
        Family::E6 => Some(5),
        Family::E7 => Some(7),
        _ => None,
    };
    ((0..cols).filter(|&c| Some(c) != eliminated).collect(), eliminated)
}

/// The Kac-basis frame of `t` for the given twist.
pub fn kac_basis_matrix(t: SimpleType, twist: Twist) -> Result<CoordinateFrame> {
    let invalid = || Error::InvalidCategory {
        ty: format!("{t}"),
        category: twist.number(),
    };
    if !ambient_ok(t) {
        return Err(Error::InvalidRank {
            family: format!("{:?}", t.family()),
            rank: t.rank(),
        });
    }
    let n = t.rank() as usize;
    match twist {
        Twist::First => Ok(canonical_frame(t)),
        Twist::Second => match t.family() {
            Family::A => {
                let h = first_category_rows(t);
                let rows = if n % 2 == 0 {
                    twisted_a_even(&h, n / 2)
                } else if n >= 3 {
                    twisted_a_odd(&h, n.div_ceil(2))
                } else {
                    return Err(invalid());
                };
                Ok(plain(t, twist, canonical_columns(t), rows, canonical_metric(t)))
            }
            Family::D => {
                let h = first_category_rows(t);
                Ok(plain(
                    t,
                    twist,
                    canonical_columns(t),
                    twisted_d(&h, n - 1),
                    canonical_metric(t),
                ))
            }
            Family::E6 => Ok(e6_twisted()),
            _ => Err(invalid()),
        },
        Twist::Third if t == SimpleType::d(4) => {
            let h = first_category_rows(t);
            let rows = vec![
                combo(&h, &[(2, -3), (1, -2), (3, -2), (4, -2)]),
                combo(&h, &[(1, 1), (3, 1), (4, 1)]),
                combo(&h, &[(2, 1)]),
            ];
            Ok(plain(t, twist, canonical_columns(t), rows, canonical_metric(t)))
        }
        Twist::Third => Err(invalid()),
    }
}

fn combo(h: &[Vec<Rational>], terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); h[0].len()];
    for &(i, c) in terms {
        for (o, x) in out.iter_mut().zip(&h[i]) {
            *o += &(x * &int(c));
        }
    }
    out
}

/// `A_{2r}`: H̄0 = −ΣH_i, H̄i = H_i + H_{2r−i+1}, H̄r = 2(H_r + H_{r+1}).
fn twisted_a_even(h: &[Vec<Rational>], r: usize) -> Vec<Vec<Rational>> {
    let mut rows = vec![combo(h, &(1..=2 * r).map(|i| (i, -1)).collect::<Vec<_>>())];
    for i in 1..r {
        rows.push(combo(h, &[(i, 1), (2 * r - i + 1, 1)]));
    }
    rows.push(combo(h, &[(r, 2), (r + 1, 2)]));
    rows
}

/// `A_{2r−1}`: H̄0 = −(H1 + H_{2r−1} + 2ΣH_{2..2r−2}), H̄i = H_i + H_{2r−i}, H̄r = H_r.
fn twisted_a_odd(h: &[Vec<Rational>], r: usize) -> Vec<Vec<Rational>> {
    let mut t0 = vec![(1, -1), (2 * r - 1, -1)];
    t0.extend((2..=2 * r - 2).map(|i| (i, -2)));
    let mut rows = vec![combo(h, &t0)];
    for i in 1..r {
        rows.push(combo(h, &[(i, 1), (2 * r - i, 1)]));
    }
    rows.push(combo(h, &[(r, 1)]));
    rows
}

/// `D_{r+1}`: H̄0 = −2ΣH_{1..r−1} − (H_r + H_{r+1}), H̄i = H_i, H̄r = H_r + H_{r+1}.
fn twisted_d(h: &[Vec<Rational>], r: usize) -> Vec<Vec<Rational>> {
    let mut t0: Vec<(usize, i64)> = (1..r).map(|i| (i, -2)).collect();
    t0.push((r, -1));
    t0.push((r + 1, -1));
    let mut rows = vec![combo(h, &t0)];
    for i in 1..r {
        rows.push(combo(h, &[(i, 1)]));
    }
    rows.push(combo(h, &[(r, 1), (r + 1, 1)]));
    rows
}

/// Twisted E6 in the forms `a1..a6`, with `b_i = −a_{7−i}` and
/// `c_ij = −a_i + a_{7−j}` (i < j) derived.
fn e6_twisted() -> CoordinateFrame {
    let a = [
        [-2, -1, -1, -1, -1, 0],
        [1, -1, 0, 0, 1, -1],
        [0, 1, -1, 1, -1, 0],
        [0, 0, 1, -1, 0, 0],
        [0, 0, 0, 1, 1, 1],
    ];
    let rows: Vec<Vec<Rational>> = a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let mut names: Vec<String> = (1..=6).map(|i| format!("a{i}")).collect();
    let mut derived = linalg::identity(6);
    for i in 1..=6 {
        names.push(format!("b{i}"));
        let mut f = vec![Rational::zero(); 6];
        f[6 - i] = int(-1);
        derived.push(f);
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            names.push(format!("c{i}{j}"));
            let mut f = vec![Rational::zero(); 6];
            f[i - 1] += int(-1);
            f[6 - j] += int(1);
            derived.push(f);
        }
    }
    let half = q(1, 2);
    let metric = derived.iter().map(|f| (half.clone(), f.clone())).collect();
    CoordinateFrame {
        ty: SimpleType::E6,
        twist: Twist::Second,
        columns: Namespace::indexed("a", 6),
        variables: Namespace::new(names),
        derived,
        rows,
        metric,
    }
}

/// Explicit second-category matrices for the classical families, with
/// the mirror rule of the odd case read as `j ↦ 2r+1−j`.
pub fn explicit_second_category(t: SimpleType) -> Option<Vec<Vec<Rational>>> {
    let n = t.rank() as usize;
    match t.family() {
        Family::A if n % 2 == 0 => {
            let r = n / 2;
            let mut p = grid(r + 1, 2 * r + 1);
            for i in 1..r {
                set(&mut p, i, i, int(1));
            }
            for i in 1..=r {
                set(&mut p, i - 1, i, int(-1));
            }
            set(&mut p, r, r, int(2));
            for row in p.iter_mut() {
                for j in 1..=r {
                    row[2 * r - j + 1] = -&row[j - 1];
                }
            }
            Some(p)
        }
        Family::A if n >= 3 => {
            let r = n.div_ceil(2);
            let mut p = grid(r + 1, 2 * r);
            for i in 1..=r {
                set(&mut p, i, i, int(1));
                set(&mut p, i - 1, i, int(-1));
            }
            set(&mut p, 0, 2, int(-1));
            for row in p.iter_mut() {
                for j in 1..=r {
                    row[2 * r - j] = -&row[j - 1];
                }
            }
            Some(p)
        }
        Family::D if n >= 4 => {
            let r = n - 1;
            let mut p = grid(r + 1, r + 1);
            for i in 1..r {
                set(&mut p, i, i, int(1));
                set(&mut p, i, i + 1, int(-1));
            }
            set(&mut p, 0, 1, int(-2));
            set(&mut p, r, r, int(2));
            Some(p)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(m: &[Vec<Rational>]) -> Vec<Vec<i64>> {
        m.iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("integer")).collect())
            .collect()
    }

    /// Generalised Cartan matrix of an untwisted affine diagram.
    fn affine_cartan(t: SimpleType) -> Vec<Vec<i64>> {
        let n = t.rank() as usize;
        let mut a = vec![vec![0i64; n + 1]; n + 1];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut edge = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match t.family() {
            Family::A => {
                for i in 1..n {
                    edge(i, i + 1, -1, -1);
                }
                edge(0, 1, -1, -1);
                edge(0, n, -1, -1);
            }
            Family::B => {
                for i in 1..n - 1 {
                    edge(i, i + 1, -1, -1);
                }
                edge(0, 2, -1, -1);
                // α_{n−1}(H_n) = −2: H_n is the long coroot of the short root
                edge(n - 1, n, -2, -1);
            }
            Family::C => {
                for i in 1..n - 1 {
                    edge(i, i + 1, -1, -1);
                }
                edge(0, 1, -2, -1);
                edge(n - 1, n, -1, -2);
            }
            Family::D => {
                for i in 1..n - 1 {
                    edge(i, i + 1, -1, -1);
                }
                edge(0, 2, -1, -1);
                edge(n - 2, n, -1, -1);
            }
            _ => unreachable!(),
        }
        a
    }

    /// `a_ij = 2(α_i, α_j)/(α_j, α_j)` as stated; through the metric this is
    /// the transpose of the coroot pairing computed by `cartan_matrix`.
    #[test]
    fn classical_cartan_spot_checks() {
        for t in [SimpleType::a(3), SimpleType::b(3), SimpleType::c(3), SimpleType::d(4)] {
            let f = kac_basis_matrix(t, Twist::First).unwrap();
            let idx: Vec<usize> = (0..f.rows().len()).collect();
            let c = ints(&f.cartan_matrix(&idx));
            let expect = affine_cartan(t);
            let expect_t: Vec<Vec<i64>> = (0..expect.len())
                .map(|i| (0..expect.len()).map(|j| expect[j][i]).collect())
                .collect();
            assert_eq!(c, expect_t, "{t}");
        }
    }

    #[test]
    fn matrix_shapes() {
        let shapes = [
            (SimpleType::a(4), (5, 5)),
            (SimpleType::b(3), (4, 3)),
            (SimpleType::c(3), (4, 3)),
            (SimpleType::d(5), (6, 5)),
            (SimpleType::G2, (3, 3)),
            (SimpleType::F4, (5, 4)),
            (SimpleType::E6, (7, 7)),
            (SimpleType::E7, (8, 8)),
            (SimpleType::E8, (9, 8)),
        ];
        for (t, (r, c)) in shapes {
            let f = kac_basis_matrix(t, Twist::First).unwrap();
            assert_eq!((f.rows().len(), f.columns().len()), (r, c), "{t}");
            assert_eq!(f.span_dim(), t.rank() as usize, "{t}");
        }
    }

    #[test]
    fn c3_rows() {
        let f = kac_basis_matrix(SimpleType::c(3), Twist::First).unwrap();
        assert_eq!(
            ints(f.rows()),
            vec![vec![-1, 0, 0], vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 1]]
        );
    }

    #[test]
    fn g2_rows() {
        let f = kac_basis_matrix(SimpleType::G2, Twist::First).unwrap();
        assert_eq!(ints(f.rows()), vec![vec![-1, 0, 1], vec![1, -2, 1], vec![0, 1, -1]]);
    }

    #[test]
    fn d4_triality_rows() {
        let f = kac_basis_matrix(SimpleType::d(4), Twist::Third).unwrap();
        assert_eq!(
            ints(f.rows()),
            vec![vec![-2, -1, -1, 0], vec![1, -1, 2, 0], vec![0, 1, -1, 0]]
        );
    }

    #[test]
    fn explicit_second_category_matches_combinations() {
        for n in [2u32, 4, 6, 8, 3, 5, 7] {
            let t = SimpleType::a(n);
            let f = kac_basis_matrix(t, Twist::Second).unwrap();
            assert_eq!(explicit_second_category(t).unwrap(), f.rows(), "{t}");
        }
        for n in 4..=8 {
            let t = SimpleType::d(n);
            let f = kac_basis_matrix(t, Twist::Second).unwrap();
            assert_eq!(explicit_second_category(t).unwrap(), f.rows(), "{t}");
        }
    }

    #[test]
    fn literal_odd_mirror_disagrees() {
        // reading the mirror as j ↦ 2r−j misplaces the entries
        let r = 3;
        let f = kac_basis_matrix(SimpleType::a(5), Twist::Second).unwrap();
        let row = &f.rows()[1];
        assert_eq!(row[2 * r - 1], -&row[0]);
        assert_ne!(row[2 * r - 2], -&row[0]);
    }

    #[test]
    fn exceptional_kac_diagrams() {
        // E6: chain 1-2-3-4-5, node 6 on 3, node 0 on 6
        let f = kac_basis_matrix(SimpleType::E6, Twist::First).unwrap();
        let c = ints(&f.cartan_matrix(&[0, 1, 2, 3, 4, 5, 6]));
        for (i, j) in [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (0, 6)] {
            assert_eq!((c[i][j], c[j][i]), (-1, -1), "E6 {i}-{j}");
        }
        assert_eq!(c[0][1], 0);
        // E7: chain 0-6-5-4-3-2-1, node 7 on 4
        let f = kac_basis_matrix(SimpleType::E7, Twist::First).unwrap();
        let c = ints(&f.cartan_matrix(&(0..8).collect::<Vec<_>>()));
        for (i, j) in [(0, 6), (6, 5), (5, 4), (4, 3), (3, 2), (2, 1), (7, 4)] {
            assert_eq!((c[i][j], c[j][i]), (-1, -1), "E7 {i}-{j}");
        }
        // E8: chain 0-1-…-7, node 8 on 5
        let f = kac_basis_matrix(SimpleType::E8, Twist::First).unwrap();
        let c = ints(&f.cartan_matrix(&(0..9).collect::<Vec<_>>()));
        for i in 0..7 {
            assert_eq!((c[i][i + 1], c[i + 1][i]), (-1, -1), "E8 {i}");
        }
        assert_eq!((c[8][5], c[5][8]), (-1, -1));
        assert!((0..9).all(|i| c[i][i] == 2));
        // F4: 0-4-3⇒2-1 in our row order
        let f = kac_basis_matrix(SimpleType::F4, Twist::First).unwrap();
        let c = ints(&f.cartan_matrix(&[0, 1, 2, 3, 4]));
        assert_eq!((c[0][4], c[4][3]), (-1, -1));
        assert_eq!(c[2][3] * c[3][2], 2);
        assert_eq!(c[1][2] * c[2][1], 1);
    }

    #[test]
    fn twisted_e6_is_f4_shaped() {
        let f = kac_basis_matrix(SimpleType::E6, Twist::Second).unwrap();
        assert_eq!(f.variables().len(), 27);
        assert_eq!(f.span_dim(), 4);
        let c = ints(&f.cartan_matrix(&[1, 2, 3, 4]));
        // a double bond between H̄2 and H̄3, simple bonds elsewhere
        assert_eq!(c[1][2] * c[2][1], 2);
        assert_eq!(c[0][1] * c[1][0], 1);
        assert_eq!(c[2][3] * c[3][2], 1);
    }

    #[test]
    fn invalid_pairs() {
        assert!(kac_basis_matrix(SimpleType::b(3), Twist::Second).is_err());
        assert!(kac_basis_matrix(SimpleType::d(5), Twist::Third).is_err());
        assert!(kac_basis_matrix(SimpleType::a(1), Twist::Second).is_err());
        assert!(kac_basis_matrix(SimpleType::d(3), Twist::First).is_err());
    }
}
