//! Rational homotopy ranks of `G/H` by the closed-form rules and by the
//! Cartan algebra, with cross-checking.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::cgda::{build_cartan_algebra, homotopy_ranks, sullivan_reduce, RankTable};
use crate::embedding::{catalog, Params, SpaceDescriptor};
use crate::error::{Error, Result};
use crate::liedata::{ExponentMultiset, Family, SimpleType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Theorem,
    Cartan,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Theorem => "theorem",
            Method::Cartan => "cartan",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "theorem" => Ok(Method::Theorem),
            "cartan" => Ok(Method::Cartan),
            "both" => Ok(Method::Both),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown method `{s}`"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodReport {
    pub space: SpaceDescriptor,
    pub method: Method,
    pub ranks: RankTable,
    /// Set for [`Method::Both`].
    pub agreement: Option<bool>,
    pub first_difference: Option<u32>,
    pub notes: Vec<String>,
}

/// `π₂ = torus_dim`, `π_{2k−1} = ν(k)`: the homotopy of `G/S` for a torus `S`.
pub fn flag_ranks(g: SimpleType, torus_dim: usize) -> Result<RankTable> {
    if torus_dim > g.rank() as usize {
        return Err(Error::ParameterOutOfRange(format!(
            "torus of dimension {torus_dim} in {g} of rank {}",
            g.rank()
        )));
    }
    let mut t = RankTable::new();
    t.add(2, torus_dim as u32);
    for &(k, m) in g.exponents().entries() {
        t.add(2 * k - 1, m);
    }
    Ok(t)
}

/// Odd ranks `ν_g(k) − ν_h(k)` for a pair where restriction is onto.
pub fn tncz_ranks(g_exp: &ExponentMultiset, h_exp: &ExponentMultiset) -> Result<RankTable> {
    for &(l, m) in h_exp.entries() {
        if m > g_exp.nu(l) {
            return Err(Error::HypothesisViolated(format!(
                "exponent {l} has multiplicity {m} in H but {} in G",
                g_exp.nu(l)
            )));
        }
    }
    let mut t = RankTable::new();
    for &(k, m) in g_exp.entries() {
        t.add(2 * k - 1, m - h_exp.nu(k));
    }
    Ok(t)
}

/// `G = D_{2n}` and `p = 2n`: the doubled exponent.
fn is_doubled_exponent(g: SimpleType, p: u32) -> bool {
    g.family() == Family::D && g.rank() % 2 == 0 && p == g.rank()
}

/// The rule list, with a note for each contribution.
pub fn theorem_with_notes(space: &SpaceDescriptor) -> Result<(RankTable, Vec<String>)> {
    space.validate().map_err(|e| match e {
        Error::NotGeneralisedSymmetric(m) => Error::NotGeneralisedSymmetric(m),
        other => Error::NotGeneralisedSymmetric(format!("{other}")),
    })?;
    let g = space.ambient;
    let mut notes = Vec::new();
    if space.summands.is_empty() {
        notes.push(format!("H is a torus of dimension {}: flag formula", space.torus_rank));
        return Ok((flag_ranks(g, space.torus_rank)?, notes));
    }
    let ge = g.exponents();
    let he = space.h_exponents();
    let equal = space.is_equal_rank();
    let mut t = RankTable::new();
    if space.torus_rank > 0 {
        t.add(2, space.torus_rank as u32);
        notes.push(format!("q=2: centre of dimension {}", space.torus_rank));
    }
    let mut ps: Vec<u32> = ge.entries().iter().chain(he.entries()).map(|e| e.0).collect();
    ps.sort_unstable();
    ps.dedup();
    let only_a = |n: u32| space.summands.len() == 1 && space.summands[0].ty == SimpleType::a(2 * n - 1);
    for p in ps {
        let (ng, nh) = (ge.nu(p), he.nu(p));
        let (even, odd, why) = match (ng, nh) {
            (_, 0) => (0, ng, "exponent of G only"),
            (0, _) => (nh, 0, "exponent of H only"),
            _ if equal => {
                let odd = if is_doubled_exponent(g, p) && !only_a(p / 2) {
                    1
                } else {
                    0
                };
                (
                    nh - 1,
                    odd,
                    if odd == 1 {
                        "common exponent, equal rank, doubled exponent of G"
                    } else {
                        "common exponent, equal rank"
                    },
                )
            }
            _ if p % 2 == 1 => (nh, 1, "common odd exponent, lower rank"),
            _ => {
                let odd = if is_doubled_exponent(g, p) { 1 } else { 0 };
                (
                    nh - 1,
                    odd,
                    if odd == 1 {
                        "common even exponent, lower rank, doubled exponent of G"
                    } else {
                        "common even exponent, lower rank"
                    },
                )
            }
        };
        if even > 0 {
            t.add(2 * p, even);
            notes.push(format!("q={}: {why} (p={p})", 2 * p));
        }
        if odd > 0 {
            t.add(2 * p - 1, odd);
            notes.push(format!("q={}: {why} (p={p})", 2 * p - 1));
        }
    }
    Ok((t, notes))
}

pub fn ranks_via_theorem(space: &SpaceDescriptor) -> Result<RankTable> {
    theorem_with_notes(space).map(|(t, _)| t)
}

pub fn ranks_via_cartan(space: &SpaceDescriptor) -> Result<RankTable> {
    Ok(homotopy_ranks(&sullivan_reduce(&build_cartan_algebra(space)?)))
}

/// Runs one or both paths.
pub fn report(space: &SpaceDescriptor, method: Method) -> Result<MethodReport> {
    let mut out = MethodReport {
        space: space.clone(),
        method,
        ranks: RankTable::new(),
        agreement: None,
        first_difference: None,
        notes: Vec::new(),
    };
    match method {
        Method::Theorem => {
            let (t, notes) = theorem_with_notes(space)?;
            out.ranks = t;
            out.notes = notes;
        }
        Method::Cartan => out.ranks = ranks_via_cartan(space)?,
        Method::Both => {
            let (t, notes) = theorem_with_notes(space)?;
            let c = ranks_via_cartan(space)?;
            out.first_difference = t.first_difference(&c);
            out.agreement = Some(out.first_difference.is_none());
            out.notes = notes;
            if let Some(q) = out.first_difference {
                out.notes.push(format!(
                    "disagreement at q={q}: theorem {} vs cartan {}",
                    t.get(q),
                    c.get(q)
                ));
                out.notes.push(format!("cartan: {c}"));
            }
            out.ranks = t;
        }
    }
    Ok(out)
}

pub fn cross_check(space: &SpaceDescriptor) -> Result<MethodReport> {
    report(space, Method::Both)
}

/// One row of the symmetric-space table.
#[derive(Clone, Debug)]
pub struct TableInstance {
    pub space: SpaceDescriptor,
    pub family: &'static str,
    /// `(n, k)`, zero where the family takes fewer parameters.
    pub params: (u32, u32),
    pub theorem_only: bool,
}

impl TableInstance {
    pub fn method(&self) -> Method {
        if self.theorem_only {
            Method::Theorem
        } else {
            Method::Both
        }
    }
}

/// Every tabulated family at every admissible parameter with ambient rank
/// at most `max_rank`, in catalog order.
pub fn symmetric_instances(max_rank: u32) -> Vec<TableInstance> {
    let mut out = Vec::new();
    for f in catalog() {
        let params: Vec<(u32, u32)> = match f.params {
            Params::Fixed => alloc::vec![(0, 0)],
            Params::N => (1..=max_rank + 1).map(|n| (n, 0)).collect(),
            Params::NK => (1..=max_rank + 1).flat_map(|n| (1..=n).map(move |k| (n, k))).collect(),
        };
        for (n, k) in params {
            if !f.in_range(n, k) {
                continue;
            }
            let sp = f.instantiate(n, k).expect("in range");
            if sp.ambient.rank() <= max_rank {
                out.push(TableInstance {
                    space: sp,
                    family: f.name,
                    params: (n, k),
                    theorem_only: f.theorem_only,
                });
            }
        }
    }
    out
}

/// Reports for [`symmetric_instances`]: both paths where the ambient
/// invariants are available, the closed form otherwise.
pub fn symmetric_table(max_rank: u32) -> Vec<MethodReport> {
    symmetric_instances(max_rank)
        .into_iter()
        .map(|row| report(&row.space, row.method()).expect("catalog spaces are valid"))
        .collect()
}

#[cfg(test)]
mod tests;
