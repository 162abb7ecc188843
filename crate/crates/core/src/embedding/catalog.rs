use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{SpaceDescriptor, SummandSpec};
use crate::error::{Error, Result};
use crate::liedata::{kac_basis_matrix, SimpleType, Twist};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Params {
    Fixed,
    N,
    NK,
}

/// A named family of spaces, instantiated by `(n, k)`.
#[derive(Clone, Copy)]
pub struct CatalogFamily {
    pub name: &'static str,
    pub params: Params,
    /// Human-readable parameter range, e.g. `n≥4, 2≤k≤n/2`.
    pub range: &'static str,
    /// Ambient invariants are not tabulated, so only the closed-form
    /// route applies.
    pub theorem_only: bool,
    check: fn(u32, u32) -> bool,
    build: fn(u32, u32) -> Vec<Part>,
    ambient: fn(u32) -> (SimpleType, Twist),
}

impl core::fmt::Debug for CatalogFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name)
    }
}

enum Part {
    Torus(usize),
    S(SimpleType, Vec<usize>),
}

impl CatalogFamily {
    pub fn in_range(&self, n: u32, k: u32) -> bool {
        (self.check)(n, k)
    }

    /// `SU(2n)/Sp(n)` at `n = 3` is `SU(6)/Sp(3)`.
    pub fn instance_name(&self, n: u32, k: u32) -> String {
        instance_label(self.name, n, k)
    }

    pub fn instantiate(&self, n: u32, k: u32) -> Result<SpaceDescriptor> {
        let (n, k) = match self.params {
            Params::Fixed => (0, 0),
            Params::N => (n, 0),
            Params::NK => (n, k),
        };
        if !self.in_range(n, k) {
            return Err(Error::ParameterOutOfRange(format!(
                "{}: need {}, got n={n}, k={k}",
                self.name, self.range
            )));
        }
        let (ambient, twist) = (self.ambient)(n);
        let frame = kac_basis_matrix(ambient, twist)?;
        let mut torus = 0;
        let mut summands = Vec::new();
        for part in (self.build)(n, k) {
            match part {
                Part::Torus(t) => torus += t,
                Part::S(ty, idx) => summands.push(orient(&frame, ty, idx)),
            }
        }
        let name = match self.params {
            Params::Fixed => String::from(self.name),
            _ => self.instance_name(n, k),
        };
        Ok(SpaceDescriptor::new(ambient, twist, torus, summands).named(name))
    }
}

/// Keeps the index order if it matches the summand's diagram, otherwise
/// tries it reversed.
fn orient(frame: &crate::liedata::CoordinateFrame, ty: SimpleType, idx: Vec<usize>) -> SummandSpec {
    let s = SummandSpec::new(ty, idx);
    if super::check_summand(frame, &s).is_ok() {
        return s;
    }
    let mut rev = s.indices.clone();
    rev.reverse();
    let r = SummandSpec::new(ty, rev);
    if super::check_summand(frame, &r).is_ok() {
        r
    } else {
        s
    }
}

fn s(ty: SimpleType, idx: impl IntoIterator<Item = usize>) -> Part {
    Part::S(ty, idx.into_iter().collect())
}

fn evaluate_linear(expr: &str, n: u32, k: u32) -> Option<i64> {
    let mut total = 0i64;
    let mut any_var = false;
    let bytes = expr.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let sign = match bytes[i] {
            b'+' => {
                i += 1;
                1
            }
            b'-' => {
                i += 1;
                -1
            }
            _ if i == 0 => 1,
            _ => return None,
        };
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<i64> = if i > start { expr[start..i].parse().ok() } else { None };
        let var = match bytes.get(i) {
            Some(b'n') => Some(n as i64),
            Some(b'k') => Some(k as i64),
            _ => None,
        };
        let term = match (coef, var) {
            (c, Some(v)) => {
                i += 1;
                any_var = true;
                c.unwrap_or(1) * v
            }
            (Some(c), None) => c,
            (None, None) => return None,
        };
        total += sign * term;
    }
    any_var.then_some(total)
}

fn instance_label(name: &str, n: u32, k: u32) -> String {
    let mut out = String::new();
    let mut rest = name;
    while let Some(open) = rest.find('(') {
        out.push_str(&rest[..=open]);
        rest = &rest[open + 1..];
        let close = rest.find(')').unwrap_or(rest.len());
        let inner = &rest[..close];
        match evaluate_linear(inner, n, k) {
            Some(v) => out.push_str(&format!("{v}")),
            None => out.push_str(inner),
        }
        rest = &rest[close..];
    }
    out.push_str(rest);
    out
}

fn a(n: u32) -> SimpleType {
    SimpleType::a(n)
}
fn b(n: u32) -> SimpleType {
    SimpleType::b(n)
}
fn c(n: u32) -> SimpleType {
    SimpleType::c(n)
}
fn d(n: u32) -> SimpleType {
    SimpleType::d(n)
}

fn fixed(_: u32, _: u32) -> bool {
    true
}

macro_rules! family {
    ($name:expr, $params:ident, $range:expr, $only:expr, $check:expr, $amb:expr, $build:expr) => {
        CatalogFamily {
            name: $name,
            params: Params::$params,
            range: $range,
            theorem_only: $only,
            check: $check,
            ambient: $amb,
            build: $build,
        }
    };
}

/// The 26 tabulated families.
pub fn catalog() -> Vec<CatalogFamily> {
    use SimpleType as T;
    vec![
        family!(
            "SU(2n+1)/SO(2n+1)",
            N,
            "n≥1",
            false,
            |n, _| n >= 1,
            |n| (a(2 * n), Twist::Second),
            |n, _| { vec![s(b(n), 1..=n as usize)] }
        ),
        family!(
            "SU(2n)/SO(2n)",
            N,
            "n≥2",
            false,
            |n, _| n >= 2,
            |n| (a(2 * n - 1), Twist::Second),
            |n, _| { vec![s(d(n), (0..n as usize).rev())] }
        ),
        family!(
            "SU(2n)/Sp(n)",
            N,
            "n≥2",
            false,
            |n, _| n >= 2,
            |n| (a(2 * n - 1), Twist::Second),
            |n, _| { vec![s(c(n), 1..=n as usize)] }
        ),
        family!(
            "U(n+1)/U(k)xU(n-k+1)",
            NK,
            "n≥1, 1≤k≤(n+1)/2",
            false,
            |n, k| n >= 1 && k >= 1 && 2 * k <= n + 1,
            |n| (a(n), Twist::First),
            |n, k| {
                let (n, k) = (n as usize, k as usize);
                let mut v = vec![Part::Torus(1)];
                if k >= 2 {
                    v.push(s(a(k as u32 - 1), 1..k));
                }
                if n > k {
                    v.push(s(a((n - k) as u32), k + 1..=n));
                }
                v
            }
        ),
        family!(
            "SO(2n+1)/SO(2)xSO(2n-1)",
            N,
            "n≥2",
            false,
            |n, _| n >= 2,
            |n| (b(n), Twist::First),
            |n, _| { vec![Part::Torus(1), s(b(n - 1), 2..=n as usize)] }
        ),
        family!(
            "SO(2n+1)/SO(2k)xSO(2n+1-2k)",
            NK,
            "2≤k≤(n+1)/2, k<n",
            false,
            |n, k| k >= 2 && 2 * k <= n + 1 && k < n,
            |n| (b(n), Twist::First),
            |n, k| {
                let (n, k) = (n as usize, k as usize);
                vec![s(d(k as u32), (0..k).rev()), s(b((n - k) as u32), k + 1..=n)]
            }
        ),
        family!(
            "SO(2n+1)/SO(2n)",
            N,
            "n≥2",
            false,
            |n, _| n >= 2,
            |n| (b(n), Twist::First),
            |n, _| { vec![s(d(n), (0..n as usize).rev())] }
        ),
        family!(
            "Sp(n)/U(n)",
            N,
            "n≥2",
            false,
            |n, _| n >= 2,
            |n| (c(n), Twist::First),
            |n, _| { vec![Part::Torus(1), s(a(n - 1), 1..n as usize)] }
        ),
        family!(
            "Sp(n)/Sp(k)xSp(n-k)",
            NK,
            "n≥2, 1≤k≤n/2",
            false,
            |n, k| n >= 2 && k >= 1 && 2 * k <= n,
            |n| (c(n), Twist::First),
            |n, k| {
                let (n, k) = (n as usize, k as usize);
                vec![s(c(k as u32), (0..k).rev()), s(c((n - k) as u32), k + 1..=n)]
            }
        ),
        family!(
            "SO(2n)/SO(2)xSO(2n-2)",
            N,
            "n≥4",
            false,
            |n, _| n >= 4,
            |n| (d(n), Twist::First),
            |n, _| { vec![Part::Torus(1), s(d(n - 1), 2..=n as usize)] }
        ),
        family!(
            "SO(2n)/SO(2k)xSO(2n-2k)",
            NK,
            "n≥4, 2≤k≤n/2",
            false,
            |n, k| n >= 4 && k >= 2 && 2 * k <= n,
            |n| (d(n), Twist::First),
            |n, k| {
                let (n, k) = (n as usize, k as usize);
                vec![s(d(k as u32), (0..k).rev()), s(d((n - k) as u32), k + 1..=n)]
            }
        ),
        family!(
            "SO(2n)/SO(2k+1)xSO(2n-2k-1)",
            NK,
            "n≥4, 1≤k≤(n-1)/2",
            false,
            |n, k| n >= 4 && k >= 1 && 2 * k < n,
            |n| (d(n), Twist::Second),
            |n, k| {
                let (n, k) = (n as usize, k as usize);
                vec![s(b(k as u32), (0..k).rev()), s(b((n - 1 - k) as u32), k + 1..n)]
            }
        ),
        family!(
            "SO(2n)/SO(2n-1)",
            N,
            "n≥4",
            false,
            |n, _| n >= 4,
            |n| (d(n), Twist::Second),
            |n, _| { vec![s(b(n - 1), 1..n as usize)] }
        ),
        family!(
            "SO(2n)/U(n)",
            N,
            "n≥4",
            false,
            |n, _| n >= 4,
            |n| (d(n), Twist::First),
            |n, _| { vec![Part::Torus(1), s(a(n - 1), 1..n as usize)] }
        ),
        family!(
            "G2/SO(4)",
            Fixed,
            "",
            false,
            fixed,
            |_| (T::G2, Twist::First),
            |_, _| { vec![s(a(1), [0]), s(a(1), [1])] }
        ),
        family!(
            "F4/SU(2).Sp(3)",
            Fixed,
            "",
            false,
            fixed,
            |_| (T::F4, Twist::First),
            |_, _| { vec![s(a(1), [0]), s(c(3), [1, 2, 3])] }
        ),
        family!(
            "F4/Spin(9)",
            Fixed,
            "",
            false,
            fixed,
            |_| (T::F4, Twist::First),
            |_, _| { vec![s(b(4), [0, 4, 3, 2])] }
        ),
        family!(
            "E6/PSp(4)",
            Fixed,
            "",
            false,
            fixed,
            |_| (T::E6, Twist::Second),
            |_, _| { vec![s(c(4), [0, 1, 2, 3])] }
        ),
        family!("E6/F4", Fixed, "", false, fixed, |_| (T::E6, Twist::Second), |_, _| {
            vec![s(T::F4, [1, 2, 3, 4])]
        }),
        family!(
            "E6/SU(2).SU(6)",
            Fixed,
            "",
            false,
            fixed,
            |_| (T::E6, Twist::First),
            |_, _| { vec![s(a(5), [1, 2, 3, 4, 5]), s(a(1), [0])] }
        ),
        family!(
            "AdE6/T1.Spin(10)",
            Fixed,
            "",
            false,
            fixed,
            |_| (T::E6, Twist::First),
            |_, _| { vec![Part::Torus(1), s(d(5), [1, 2, 3, 4, 6])] }
        ),
        family!("E7/SU(8)", Fixed, "", true, fixed, |_| (T::E7, Twist::First), |_, _| {
            vec![s(a(7), [1, 2, 3, 4, 5, 6, 0])]
        }),
        family!(
            "E7/SU(2).Spin(12)",
            Fixed,
            "",
            true,
            fixed,
            |_| (T::E7, Twist::First),
            |_, _| { vec![s(a(1), [0]), s(d(6), [1, 2, 3, 4, 5, 7])] }
        ),
        family!(
            "AdE7/T1.E6",
            Fixed,
            "",
            true,
            fixed,
            |_| (T::E7, Twist::First),
            |_, _| { vec![Part::Torus(1), s(T::E6, [2, 3, 4, 5, 6, 7])] }
        ),
        family!(
            "E8/SO(16)",
            Fixed,
            "",
            true,
            fixed,
            |_| (T::E8, Twist::First),
            |_, _| { vec![s(d(8), [0, 1, 2, 3, 4, 5, 6, 8])] }
        ),
        family!(
            "E8/SU(2).E7",
            Fixed,
            "",
            true,
            fixed,
            |_| (T::E8, Twist::First),
            |_, _| { vec![s(a(1), [0]), s(T::E7, [2, 3, 4, 5, 6, 7, 8])] }
        ),
    ]
}

/// Looks a family up by name, ignoring case and spaces.
pub fn find_family(name: &str) -> Option<CatalogFamily> {
    let key = normalise(name);
    catalog().into_iter().find(|f| normalise(f.name) == key)
}

fn normalise(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .flat_map(char::to_lowercase)
        .collect()
}

/// Generalised symmetric spaces that are not symmetric, used as fixtures.
pub fn extra_spaces() -> Vec<SpaceDescriptor> {
    use SimpleType as T;
    let mk = |name: &str, ambient: SimpleType, twist: Twist, torus: usize, parts: Vec<(SimpleType, Vec<usize>)>| {
        let frame = kac_basis_matrix(ambient, twist).expect("valid ambient");
        let summands = parts.into_iter().map(|(ty, idx)| orient(&frame, ty, idx)).collect();
        SpaceDescriptor::new(ambient, twist, torus, summands).named(name)
    };
    vec![
        mk("D4/G2", T::d(4), Twist::Third, 0, vec![(T::G2, vec![1, 2])]),
        mk("D4/SU(3)", T::d(4), Twist::Third, 0, vec![(T::a(2), vec![0, 1])]),
        mk("F4/T1.Spin(7)", T::F4, Twist::First, 1, vec![(T::b(3), vec![4, 3, 2])]),
        mk("F4/T1.Sp(3)", T::F4, Twist::First, 1, vec![(T::c(3), vec![1, 2, 3])]),
        mk("E6/T2.SU(5)", T::E6, Twist::First, 2, vec![(T::a(4), vec![1, 2, 3, 4])]),
        mk(
            "E6/T2.Spin(8)",
            T::E6,
            Twist::First,
            2,
            vec![(T::d(4), vec![2, 3, 4, 6])],
        ),
        mk(
            "E6/T1.SU(6)",
            T::E6,
            Twist::First,
            1,
            vec![(T::a(5), vec![1, 2, 3, 4, 5])],
        ),
        mk("E6/T1.Spin(7)", T::E6, Twist::Second, 1, vec![(T::b(3), vec![4, 3, 2])]),
        mk("E6/T1.Sp(3)", T::E6, Twist::Second, 1, vec![(T::c(3), vec![1, 2, 3])]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_substitute_parameters() {
        assert_eq!(instance_label("SU(2n)/Sp(n)", 3, 0), "SU(6)/Sp(3)");
        assert_eq!(
            instance_label("SO(2n)/SO(2k+1)xSO(2n-2k-1)", 5, 1),
            "SO(10)/SO(3)xSO(7)"
        );
        assert_eq!(instance_label("G2/SO(4)", 0, 0), "G2/SO(4)");
        assert_eq!(instance_label("E6/SU(2).SU(6)", 0, 0), "E6/SU(2).SU(6)");
    }
}
