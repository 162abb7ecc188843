use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::frame::{kac_basis_matrix, CoordinateFrame, Twist};
use super::{Family, SimpleType};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Fraction, Generator, Namespace, Polynomial, Rational};

/// How an invariant is built from linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `Σ c·f^k`, `k` the generator weight.
    PowerSum(Vec<(Rational, Vec<Rational>)>),
    /// `Π f`.
    Product(Vec<Vec<Rational>>),
}

/// A Weyl-invariant polynomial kept as linear forms until it is needed
/// in expanded form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantGenerator {
    pub symbol: String,
    pub weight: u32,
    pub shape: Shape,
}

impl InvariantGenerator {
    /// Composes with a linear map: `images[j]` is the image of variable `j`
    /// as a coefficient vector over the new variables.
    pub fn restrict(&self, images: &[Vec<Rational>]) -> InvariantGenerator {
        let map = |f: &Vec<Rational>| -> Vec<Rational> {
            let m = images.first().map_or(0, Vec::len);
            let mut out = vec![Rational::zero(); m];
            for (c, img) in f.iter().zip(images) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(img) {
                    *o += &(c * x);
                }
            }
            out
        };
        let shape = match &self.shape {
            Shape::PowerSum(fs) => Shape::PowerSum(fs.iter().map(|(c, f)| (c.clone(), map(f))).collect()),
            Shape::Product(fs) => Shape::Product(fs.iter().map(map).collect()),
        };
        InvariantGenerator {
            symbol: self.symbol.clone(),
            weight: self.weight,
            shape,
        }
    }

    pub fn polynomial(&self, ns: &Namespace) -> Polynomial {
        match &self.shape {
            Shape::PowerSum(fs) => {
                let mut acc = Polynomial::zero(ns);
                let mut seen: Vec<(&Vec<Rational>, Polynomial)> = Vec::new();
                for (c, f) in fs {
                    if f.iter().all(Rational::is_zero) {
                        continue;
                    }
                    // forms differing by sign share a power up to (−1)^k
                    let neg: Vec<Rational> = f.iter().map(|x| -x).collect();
                    let hit = seen.iter().find_map(|(g, p)| {
                        if *g == f {
                            Some((p, true))
                        } else if **g == neg {
                            Some((p, false))
                        } else {
                            None
                        }
                    });
                    let (p, sign) = match hit {
                        Some((p, same)) => (p.clone(), same || self.weight % 2 == 0),
                        None => {
                            let p = Polynomial::linear(ns, f).pow(self.weight);
                            seen.push((f, p.clone()));
                            (p, true)
                        }
                    };
                    let c = if sign { c.clone() } else { -c };
                    acc.add_scaled(&p, &c).expect("same namespace");
                }
                acc
            }
            Shape::Product(fs) => fs.iter().fold(Polynomial::one(ns), |acc, f| {
                acc.mul(&Polynomial::linear(ns, f)).expect("same namespace")
            }),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        match &self.shape {
            Shape::PowerSum(fs) => {
                let mut acc = Fraction::zero();
                for (c, f) in fs {
                    let v = linalg::dot(f, point);
                    if !v.is_zero() {
                        let p = v.pow(self.weight);
                        acc.add(c.numer() * p.numer(), c.denom() * p.denom());
                    }
                }
                acc.finish()
            }
            Shape::Product(fs) => fs.iter().map(|f| linalg::dot(f, point)).product(),
        }
    }

    pub fn to_generator(&self, ns: &Namespace) -> Generator {
        Generator::new(self.symbol.clone(), self.weight, self.polynomial(ns))
    }
}

/// Which generating set to use for `E6`: power sums of the 27 weights in
/// the untwisted coordinates, or the halved sums `I_k` over the 27
/// coordinates of the twisted frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Standard,
    Takeuchi,
}

/// Algebraically independent Weyl invariants in the columns of a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub variables: Namespace,
    pub gens: Vec<InvariantGenerator>,
}

impl GeneratorSet {
    pub fn symbols(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.symbol.clone()).collect()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.weight).collect()
    }

    pub fn get(&self, symbol: &str) -> Option<&InvariantGenerator> {
        self.gens.iter().find(|g| g.symbol == symbol)
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.gens.iter().map(|g| g.to_generator(&self.variables)).collect()
    }

    /// The frame whose columns these generators are written in.
    pub fn frame(t: SimpleType, variant: Variant) -> Result<CoordinateFrame> {
        match variant {
            Variant::Standard => Ok(super::canonical_frame(t)),
            Variant::Takeuchi => kac_basis_matrix(t, Twist::Second),
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

fn units(n: usize) -> Vec<Vec<Rational>> {
    linalg::identity(n)
}

fn power_sum(symbol: String, k: u32, c: Rational, forms: &[Vec<Rational>]) -> InvariantGenerator {
    InvariantGenerator {
        symbol,
        weight: k,
        shape: Shape::PowerSum(forms.iter().map(|f| (c.clone(), f.clone())).collect()),
    }
}

fn power_sums(prefix: &str, ks: &[u32], c: Rational, forms: &[Vec<Rational>]) -> Vec<InvariantGenerator> {
    ks.iter()
        .map(|&k| power_sum(format!("{prefix}{k}"), k, c.clone(), forms))
        .collect()
}

/// The 27 weight forms of `E6` over `(x1..x6, ε)`.
fn e6_forms() -> Vec<Vec<Rational>> {
    let mut forms = Vec::new();
    for i in 0..6 {
        for s in [1, -1] {
            let mut f = vec![Rational::zero(); 7];
            f[i] = int(1);
            f[6] = int(s);
            forms.push(f);
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            let mut f = vec![Rational::zero(); 7];
            f[i] = int(-1);
            f[j] = int(-1);
            forms.push(f);
        }
    }
    forms
}

fn f4_forms() -> Vec<Vec<Rational>> {
    let mut forms = Vec::new();
    for i in 0..4 {
        for s in [1, -1] {
            let mut f = vec![Rational::zero(); 4];
            f[i] = int(s);
            forms.push(f);
        }
    }
    for mask in 0..16u32 {
        forms.push(
            (0..4)
                .map(|i| {
                    if mask >> i & 1 == 0 {
                        Rational::new(1, 2)
                    } else {
                        Rational::new(-1, 2)
                    }
                })
                .collect(),
        );
    }
    forms
}

/// Generators of the invariant ring of the Weyl group of `t`, written in
/// the columns of its frame.
pub fn invariant_generators(t: SimpleType, variant: Variant) -> Result<GeneratorSet> {
    let n = t.rank() as usize;
    let frame = GeneratorSet::frame(t, variant)?;
    let one = Rational::one();
    let gens = match (t.family(), variant) {
        (Family::E6, Variant::Takeuchi) => power_sums("I", &[2, 5, 6, 8, 9, 12], Rational::new(1, 2), frame.derived()),
        (_, Variant::Takeuchi) => {
            return Err(Error::Unsupported(format!("Takeuchi generators for {t}")));
        }
        (Family::A, _) => {
            let ks: Vec<u32> = (2..=n as u32 + 1).collect();
            power_sums("P", &ks, one, &units(n + 1))
        }
        (Family::B | Family::C, _) => {
            let ks: Vec<u32> = (1..=n as u32).map(|i| 2 * i).collect();
            power_sums("P", &ks, one, &units(n))
        }
        (Family::D, _) => {
            let ks: Vec<u32> = (1..n as u32).map(|i| 2 * i).collect();
            let mut g = power_sums("P", &ks, one, &units(n));
            g.push(InvariantGenerator {
                symbol: format!("P{n}'"),
                weight: n as u32,
                shape: Shape::Product(units(n)),
            });
            g
        }
        (Family::G2, _) => power_sums("P", &[2, 6], int(2), &units(3)),
        (Family::F4, _) => power_sums("P", &[2, 6, 8, 12], one, &f4_forms()),
        (Family::E6, _) => power_sums("P", &[2, 5, 6, 8, 9, 12], one, &e6_forms()),
        (Family::E7 | Family::E8, _) => {
            return Err(Error::Unsupported(format!("explicit invariants for {t}")));
        }
    };
    Ok(GeneratorSet {
        variables: frame.columns().clone(),
        gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus_images(frame: &CoordinateFrame) -> (Namespace, Vec<Vec<Rational>>) {
        // x_j ↦ Σ_i t_i x_j(H_i) over a basis of the span
        let mut basis = linalg::RowBasis::default();
        let mut chosen = Vec::new();
        for r in frame.rows() {
            if basis.insert(r) {
                chosen.push(r.clone());
            }
        }
        let ns = Namespace::indexed("t", chosen.len());
        (ns, linalg::transpose(&chosen))
    }

    fn jacobian_rank(t: SimpleType, variant: Variant) -> (usize, usize) {
        let set = invariant_generators(t, variant).unwrap();
        let frame = GeneratorSet::frame(t, variant).unwrap();
        let (ns, images) = torus_images(&frame);
        let point: Vec<Rational> = (0..ns.len())
            .map(|i| Rational::new(3 + 7 * i as i64 * i as i64, 5 + i as i64))
            .collect();
        let jac: Vec<Vec<Rational>> = set
            .gens
            .iter()
            .map(|g| {
                let p = g.restrict(&images).polynomial(&ns);
                (0..ns.len())
                    .map(|i| p.derivative(i).evaluate(&point).unwrap())
                    .collect()
            })
            .collect();
        (linalg::rank(&jac), ns.len())
    }

    #[test]
    fn generators_are_independent() {
        let mut types = vec![SimpleType::G2, SimpleType::F4, SimpleType::E6];
        for n in 2..=5 {
            types.push(SimpleType::a(n));
            types.push(SimpleType::b(n));
            types.push(SimpleType::c(n.max(2)));
        }
        types.push(SimpleType::d(4));
        types.push(SimpleType::d(5));
        for t in types {
            let (r, l) = jacobian_rank(t, Variant::Standard);
            assert_eq!((r, l), (t.rank() as usize, t.rank() as usize), "{t}");
        }
    }

    #[test]
    fn takeuchi_generators_on_twisted_torus() {
        // rank-4 torus: only the weights 2, 6, 8, 12 survive independently
        let set = invariant_generators(SimpleType::E6, Variant::Takeuchi).unwrap();
        assert_eq!(set.symbols(), ["I2", "I5", "I6", "I8", "I9", "I12"]);
        let frame = GeneratorSet::frame(SimpleType::E6, Variant::Takeuchi).unwrap();
        let (ns, images) = torus_images(&frame);
        assert_eq!(ns.len(), 4);
        for g in &set.gens {
            let p = g.restrict(&images).polynomial(&ns);
            assert_eq!(p.is_zero(), g.weight % 2 == 1, "{}", g.symbol);
        }
    }

    #[test]
    fn weyl_invariance_under_simple_reflections() {
        for t in [
            SimpleType::G2,
            SimpleType::F4,
            SimpleType::E6,
            SimpleType::b(3),
            SimpleType::d(4),
        ] {
            let frame = kac_basis_matrix(t, Twist::First).unwrap();
            let set = invariant_generators(t, Variant::Standard).unwrap();
            let v: Vec<Rational> = frame.rows().iter().enumerate().skip(1).fold(
                vec![Rational::zero(); frame.columns().len()],
                |mut acc, (i, r)| {
                    for (a, x) in acc.iter_mut().zip(r) {
                        *a += &(x * &Rational::new(2 * i as i64 + 1, i as i64 + 2));
                    }
                    acc
                },
            );
            for h in frame.rows() {
                // s_h(v) = v − 2(v,h)/(h,h)·h
                let c = Rational::integer(2) * frame.inner(&v, h) / frame.inner(h, h);
                let w: Vec<Rational> = v.iter().zip(h).map(|(a, b)| a - &(&c * b)).collect();
                for g in &set.gens {
                    assert_eq!(g.evaluate(&v), g.evaluate(&w), "{t} {}", g.symbol);
                }
            }
        }
    }

    #[test]
    fn quadratic_invariant_is_the_metric() {
        for t in [
            SimpleType::G2,
            SimpleType::F4,
            SimpleType::E6,
            SimpleType::a(3),
            SimpleType::c(3),
        ] {
            let frame = kac_basis_matrix(t, Twist::First).unwrap();
            let p2 = invariant_generators(t, Variant::Standard).unwrap().gens.remove(0);
            let rows = frame.rows();
            let ratio = p2.evaluate(&rows[1]) / frame.inner(&rows[1], &rows[1]);
            for r in rows {
                assert_eq!(p2.evaluate(r), &ratio * &frame.inner(r, r), "{t}");
            }
        }
    }

    #[test]
    fn pfaffian_symbol() {
        let set = invariant_generators(SimpleType::d(4), Variant::Standard).unwrap();
        assert_eq!(set.symbols(), ["P2", "P4", "P6", "P4'"]);
        assert_eq!(set.weights(), [2, 4, 6, 4]);
        assert!(invariant_generators(SimpleType::E7, Variant::Standard).is_err());
    }
}
