//! Free commutative graded differential algebras of Cartan type and their
//! Sullivan reduction.

mod solve;
mod text;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::embedding::{full_restriction, summand_symbol, RestrictionMap, SpaceDescriptor, SummandCoordinates};
use crate::error::{Error, Result};
use crate::liedata::{InvariantGenerator, Shape};
use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, Namespace, Polynomial};

/// `∧(odd) ⊗ ℚ[even]` with `d` zero on even generators and `d z` a
/// polynomial in the even ones.
///
/// Weights are half-degrees: an even generator of weight `l` sits in
/// degree `2l`, an odd one of weight `k` in degree `2k−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCGDA {
    even: Namespace,
    even_weights: Vec<u32>,
    odd: Vec<(String, u32)>,
    differential: Vec<Polynomial>,
}

impl FreeCGDA {
    /// `differential[i]` is `d` of `odd[i]`, over the even symbols.
    pub fn new(even: Vec<(String, u32)>, odd: Vec<(String, u32)>, differential: Vec<Polynomial>) -> Result<FreeCGDA> {
        let even_ns = Namespace::new(even.iter().map(|(s, _)| s.clone()));
        let even_weights: Vec<u32> = even.iter().map(|&(_, w)| w).collect();
        if differential.len() != odd.len() {
            return Err(Error::InvalidDescriptor(format!(
                "{} odd generators but {} differentials",
                odd.len(),
                differential.len()
            )));
        }
        let mut seen: Vec<&str> = even.iter().map(|(s, _)| s.as_str()).collect();
        for (s, w) in even.iter().chain(&odd) {
            if *w == 0 {
                return Err(Error::InvalidDescriptor(format!("generator {s} has weight 0")));
            }
        }
        for (s, _) in &odd {
            if seen.contains(&s.as_str()) {
                return Err(Error::InvalidDescriptor(format!("duplicate generator {s}")));
            }
            seen.push(s);
        }
        if seen.len() != even.len() + odd.len() || even_ns.len() != even.len() {
            return Err(Error::InvalidDescriptor(String::from("duplicate even generator")));
        }
        for ((s, w), dz) in odd.iter().zip(&differential) {
            if dz.namespace() != &even_ns {
                return Err(Error::NamespaceMismatch);
            }
            if dz.terms().keys().any(|m| m.weighted_degree(&even_weights) != *w) {
                return Err(Error::NotHomogeneous(*w));
            }
            // odd weight 1 would make the algebra non-simply connected
            if *w == 1 {
                return Err(Error::HypothesisViolated(format!("odd generator {s} in degree 1")));
            }
        }
        Ok(FreeCGDA {
            even: even_ns,
            even_weights,
            odd,
            differential,
        })
    }

    pub fn even_symbols(&self) -> &Namespace {
        &self.even
    }

    pub fn even_gens(&self) -> impl Iterator<Item = (&str, u32)> + '_ {
        self.even
            .names()
            .iter()
            .map(String::as_str)
            .zip(self.even_weights.iter().copied())
    }

    pub fn odd_gens(&self) -> impl Iterator<Item = (&str, u32)> + '_ {
        self.odd.iter().map(|(s, w)| (s.as_str(), *w))
    }

    pub fn d(&self, odd_symbol: &str) -> Option<&Polynomial> {
        self.odd
            .iter()
            .position(|(s, _)| s == odd_symbol)
            .map(|i| &self.differential[i])
    }

    pub fn differentials(&self) -> &[Polynomial] {
        &self.differential
    }

    /// All weights carrying a generator.
    pub fn weights(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self
            .even_weights
            .iter()
            .copied()
            .chain(self.odd.iter().map(|&(_, w)| w))
            .collect();
        w.sort_unstable();
        w.dedup();
        w
    }
}

/// Linear part of `d` at weight `w`: rows are odd generators of weight `w`,
/// columns even generators of weight `w`.
pub fn delta_matrix(c: &FreeCGDA, w: u32) -> Matrix {
    let n = c.even.len();
    let cols: Vec<usize> = (0..n).filter(|&i| c.even_weights[i] == w).collect();
    c.odd
        .iter()
        .zip(&c.differential)
        .filter(|((_, k), _)| *k == w)
        .map(|(_, dz)| cols.iter().map(|&i| dz.coefficient(&Monomial::var(n, i))).collect())
        .collect()
}

/// Surviving generator counts of the minimal model, keyed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinimalModelSignature {
    pub even: BTreeMap<u32, u32>,
    pub odd: BTreeMap<u32, u32>,
}

/// One pass of the reduction: at each weight the rank of `δ` cancels that
/// many odd generators against as many even ones.
///
/// A Cartan algebra's differential lands in the polynomial algebra on the
/// even generators, so what remains after cancelling linear parts is
/// already minimal and no second pass is needed.
pub fn sullivan_reduce(c: &FreeCGDA) -> MinimalModelSignature {
    let mut sig = MinimalModelSignature::default();
    for w in c.weights() {
        let n_even = c.even_weights.iter().filter(|&&x| x == w).count();
        let n_odd = c.odd.iter().filter(|&&(_, x)| x == w).count();
        let r = linalg::rank(&delta_matrix(c, w));
        if n_even > r {
            sig.even.insert(2 * w, (n_even - r) as u32);
        }
        if n_odd > r {
            sig.odd.insert(2 * w - 1, (n_odd - r) as u32);
        }
    }
    sig
}

/// `q ↦ dim π_q ⊗ ℚ`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankTable {
    entries: BTreeMap<u32, u32>,
}

impl RankTable {
    pub fn new() -> RankTable {
        RankTable::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> RankTable {
        let mut t = RankTable::new();
        for (q, d) in pairs {
            t.add(q, d);
        }
        t
    }

    pub fn add(&mut self, q: u32, dim: u32) {
        if dim > 0 {
            *self.entries.entry(q).or_insert(0) += dim;
        }
    }

    pub fn set(&mut self, q: u32, dim: u32) {
        if dim == 0 {
            self.entries.remove(&q);
        } else {
            self.entries.insert(q, dim);
        }
    }

    pub fn get(&self, q: u32) -> u32 {
        self.entries.get(&q).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&q, &d)| (q, d))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn even_total(&self) -> u32 {
        self.iter().filter(|(q, _)| q % 2 == 0).map(|(_, d)| d).sum()
    }

    pub fn odd_total(&self) -> u32 {
        self.iter().filter(|(q, _)| q % 2 == 1).map(|(_, d)| d).sum()
    }

    /// Smallest degree where the tables differ.
    pub fn first_difference(&self, other: &RankTable) -> Option<u32> {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .filter(|&q| self.get(q) != other.get(q))
            .min()
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (q, d)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}: {d}")?;
        }
        f.write_str("}")
    }
}

pub fn homotopy_ranks(sig: &MinimalModelSignature) -> RankTable {
    RankTable::from_pairs(sig.even.iter().chain(&sig.odd).map(|(&q, &d)| (q, d)))
}

/// Odd symbol for an ambient generator: `P4 → z4`, `P4' → z4'`, `I9 → z9`.
fn odd_symbol(symbol: &str) -> String {
    format!("z{}", &symbol[1..])
}

/// The Cartan algebra `H*(BH) ⊗ H*(G)` with `d z = ρ*(P)` written in the
/// generators of `H*(BH)`.
pub fn build_cartan_algebra(space: &SpaceDescriptor) -> Result<FreeCGDA> {
    let map = full_restriction(space)?;
    build_cartan_algebra_with(space, &map)
}

/// As [`build_cartan_algebra`], with an explicit restriction map.
pub fn build_cartan_algebra_with(space: &SpaceDescriptor, map: &RestrictionMap) -> Result<FreeCGDA> {
    build(space, map, None)
}

/// The Cartan algebra after negating the listed target coordinates, on
/// the restriction map and on the generators of `H*(BH)` alike.
pub fn build_cartan_algebra_flipped(space: &SpaceDescriptor, negate: &[usize]) -> Result<FreeCGDA> {
    let map = full_restriction(space)?;
    let mut flip = linalg::identity(map.target.len());
    for &i in negate {
        if i >= flip.len() {
            return Err(Error::InvalidDescriptor(format!("no target coordinate {i}")));
        }
        flip[i][i] = crate::poly::Rational::integer(-1);
    }
    build(space, &map.with_signs(negate), Some(&flip))
}

fn build(space: &SpaceDescriptor, map: &RestrictionMap, flip: Option<&Matrix>) -> Result<FreeCGDA> {
    let ambient = space.ambient_generators()?;
    if ambient.variables != map.source {
        return Err(Error::NamespaceMismatch);
    }
    let target = &map.target;
    let mut even: Vec<(String, u32)> = Vec::new();
    let mut h_gens: Vec<InvariantGenerator> = Vec::new();
    for &t in &map.torus {
        even.push((target.name(t).to_string(), 1));
        let mut form = alloc::vec![crate::poly::Rational::zero(); target.len()];
        form[t] = crate::poly::Rational::one();
        h_gens.push(InvariantGenerator {
            symbol: target.name(t).to_string(),
            weight: 1,
            shape: Shape::PowerSum(alloc::vec![(crate::poly::Rational::one(), form)]),
        });
    }
    for (s, spec) in space.summands.iter().enumerate() {
        let coords = SummandCoordinates::new(spec.ty);
        let set = coords.generators()?;
        let mut embed = linalg::zeros(coords.free.len(), target.len());
        for (j, &pos) in map.blocks[s].iter().enumerate() {
            embed[j][pos] = crate::poly::Rational::one();
        }
        for g in &set.gens {
            let sym = summand_symbol(space, s, &g.symbol);
            even.push((sym.clone(), g.weight));
            let mut g = g.restrict(&embed);
            g.symbol = sym;
            h_gens.push(g);
        }
    }
    if let Some(f) = flip {
        h_gens = h_gens.iter().map(|g| g.restrict(f)).collect();
    }
    let symbols = Namespace::new(even.iter().map(|(s, _)| s.clone()));
    let mut cache = solve::SampleCache::new(h_gens, target.len());
    let mut odd = Vec::new();
    let mut differential = Vec::new();
    for g in &ambient.gens {
        let restricted = g.restrict(&map.matrix);
        differential.push(solve::express_by_sampling(&mut cache, &restricted, &symbols)?);
        odd.push((odd_symbol(&g.symbol), g.weight));
    }
    FreeCGDA::new(even, odd, differential)
}

pub use text::format_cgda;

#[cfg(test)]
mod tests;
