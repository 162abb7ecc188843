use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Monomial, Namespace, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, RowBasis};

/// Every exponent vector `e` with `Σ e_i·weights_i = target`, largest
/// leading exponent first.
pub fn weighted_monomials(weights: &[u32], target: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        assert!(w > 0, "weights must be positive");
        for e in (0..=rem / w).rev() {
            cur.push(e);
            rec(weights, i + 1, rem - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, target, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}

/// A named, weighted generator together with its polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub symbol: String,
    pub weight: u32,
    pub poly: Polynomial,
}

impl Generator {
    pub fn new(symbol: impl Into<String>, weight: u32, poly: Polynomial) -> Generator {
        Generator {
            symbol: symbol.into(),
            weight,
            poly,
        }
    }
}

/// A polynomial in weighted generator symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorExpression {
    weights: Vec<u32>,
    poly: Polynomial,
}

impl GeneratorExpression {
    /// Checks that every term has weighted degree `weight`.
    pub fn new(weights: Vec<u32>, poly: Polynomial, weight: u32) -> Result<GeneratorExpression> {
        assert_eq!(weights.len(), poly.namespace().len());
        if poly.terms().keys().any(|m| m.weighted_degree(&weights) != weight) {
            return Err(Error::NotHomogeneous(weight));
        }
        Ok(GeneratorExpression { weights, poly })
    }

    pub fn zero(symbols: &Namespace, weights: Vec<u32>) -> GeneratorExpression {
        GeneratorExpression {
            weights,
            poly: Polynomial::zero(symbols),
        }
    }

    pub fn symbols(&self) -> &Namespace {
        self.poly.namespace()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Terms of total exponent one, as `(symbol, coefficient)`.
    pub fn linear_part(&self) -> Vec<(String, Rational)> {
        self.poly
            .terms()
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| {
                let (i, _) = m.support().next().unwrap();
                (self.symbols().name(i).to_string(), c.clone())
            })
            .collect()
    }

    /// Substitutes the generator polynomials back in.
    pub fn expand(&self, gens: &[Generator]) -> Result<Polynomial> {
        let ns = gens
            .first()
            .map(|g| g.poly.namespace().clone())
            .ok_or_else(|| Error::UnknownSymbol(String::from("<no generators>")))?;
        let mut out = Polynomial::zero(&ns);
        for (m, c) in self.poly.terms() {
            let mut t = Polynomial::constant(&ns, c.clone());
            for (i, e) in m.support() {
                let name = self.symbols().name(i);
                let g = gens
                    .iter()
                    .find(|g| g.symbol == name)
                    .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
                t = t.mul(&g.poly.pow(e))?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }
}

/// Coefficient of the degree-one term in `symbol`.
pub fn linear_coefficient(e: &GeneratorExpression, symbol: &str) -> Result<Rational> {
    let i = e
        .symbols()
        .index_of(symbol)
        .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))?;
    let n = e.symbols().len();
    Ok(e.poly.coefficient(&Monomial::var(n, i)))
}

impl fmt::Display for GeneratorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for GeneratorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorExpression({})", self.poly)
    }
}

/// Write `r` (homogeneous of weight `w`) as a polynomial in `gens`.
pub fn express_in_generators(r: &Polynomial, w: u32, gens: &[Generator]) -> Result<GeneratorExpression> {
    ExpressionSolver::new(gens)?.express(r, w)
}

/// Reusable solver: caches generator products and per-weight linear systems.
///
/// Generators are split into groups with pairwise disjoint variable
/// support, and the target polynomial is decomposed along that tensor
/// structure, so each dense solve only sees one group's monomials.
pub struct ExpressionSolver {
    gens: Vec<Generator>,
    symbols: Namespace,
    weights: Vec<u32>,
    var_ns: Option<Namespace>,
    groups: Vec<Group>,
    /// group index for each variable of the namespace, if any
    var_group: Vec<Option<usize>>,
}

struct Group {
    members: Vec<usize>,
    vars: Vec<usize>,
    products: BTreeMap<Vec<u32>, Polynomial>,
    systems: BTreeMap<u32, WeightSystem>,
}

struct WeightSystem {
    exps: Vec<Vec<u32>>,
    columns: Vec<Polynomial>,
    rows: Vec<Monomial>,
    matrix: linalg::Matrix,
    /// whether some nullspace direction moves a linear coefficient
    ambiguous_linear: bool,
}

impl ExpressionSolver {
    pub fn new(gens: &[Generator]) -> Result<ExpressionSolver> {
        let symbols = Namespace::new(gens.iter().map(|g| g.symbol.clone()));
        let weights: Vec<u32> = gens.iter().map(|g| g.weight).collect();
        let var_ns = gens.first().map(|g| g.poly.namespace().clone());
        let nvars = var_ns.as_ref().map_or(0, Namespace::len);
        for g in gens {
            if Some(g.poly.namespace()) != var_ns.as_ref() {
                return Err(Error::NamespaceMismatch);
            }
            if g.weight == 0 || !g.poly.is_homogeneous_of(g.weight) || g.poly.is_zero() {
                return Err(Error::NotHomogeneous(g.weight));
            }
        }
        // union-find over generators sharing a variable
        let mut parent: Vec<usize> = (0..gens.len()).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut owner: Vec<Option<usize>> = vec![None; nvars];
        for (gi, g) in gens.iter().enumerate() {
            for m in g.poly.terms().keys() {
                for (v, _) in m.support() {
                    match owner[v] {
                        None => owner[v] = Some(gi),
                        Some(o) => {
                            let (a, b) = (find(&mut parent, o), find(&mut parent, gi));
                            parent[a] = b;
                        }
                    }
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut groups: Vec<Group> = Vec::new();
        for gi in 0..gens.len() {
            let r = find(&mut parent, gi);
            let idx = match roots.iter().position(|&x| x == r) {
                Some(i) => i,
                None => {
                    roots.push(r);
                    groups.push(Group {
                        members: Vec::new(),
                        vars: Vec::new(),
                        products: BTreeMap::new(),
                        systems: BTreeMap::new(),
                    });
                    roots.len() - 1
                }
            };
            groups[idx].members.push(gi);
        }
        let mut var_group = vec![None; nvars];
        for (v, o) in owner.iter().enumerate() {
            if let Some(gi) = o {
                let r = find(&mut parent, *gi);
                let idx = roots.iter().position(|&x| x == r).unwrap();
                var_group[v] = Some(idx);
                groups[idx].vars.push(v);
            }
        }
        Ok(ExpressionSolver {
            gens: gens.to_vec(),
            symbols,
            weights,
            var_ns,
            groups,
            var_group,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn symbols(&self) -> &Namespace {
        &self.symbols
    }

    pub fn express(&mut self, r: &Polynomial, w: u32) -> Result<GeneratorExpression> {
        if r.is_zero() {
            return Ok(GeneratorExpression::zero(&self.symbols, self.weights.clone()));
        }
        if !r.is_homogeneous_of(w) {
            return Err(Error::NotHomogeneous(w));
        }
        match &self.var_ns {
            Some(ns) if ns == r.namespace() => {}
            _ => return Err(Error::NamespaceMismatch),
        }
        // every variable of r must belong to some group
        for m in r.terms().keys() {
            for (v, _) in m.support() {
                if self.var_group[v].is_none() {
                    return Err(Error::NotInSubring(format!(
                        "variable `{}` is not covered by any generator",
                        r.namespace().name(v)
                    )));
                }
            }
        }
        let mut acc = Polynomial::zero(&self.symbols);
        let unit = Polynomial::one(&self.symbols);
        self.express_rec(r, 0, &unit, &mut acc)?;
        GeneratorExpression::new(self.weights.clone(), acc, w)
    }

    /// Expresses `r` (only involving groups `gi..`) and adds `prefix·expr` to `acc`.
    fn express_rec(&mut self, r: &Polynomial, gi: usize, prefix: &Polynomial, acc: &mut Polynomial) -> Result<()> {
        if r.is_zero() {
            return Ok(());
        }
        if gi == self.groups.len() {
            // only a constant may remain
            let c = r.coefficient(&Monomial::one(r.namespace().len()));
            if r.num_terms() != 1 || c.is_zero() {
                return Err(Error::NotInSubring(String::from("leftover non-constant part")));
            }
            acc.add_scaled(prefix, &c)?;
            return Ok(());
        }
        let ns = r.namespace().clone();
        let nvars = ns.len();
        let in_group: Vec<bool> = (0..nvars).map(|v| self.var_group[v] == Some(gi)).collect();
        // split each monomial into (group part, rest part)
        let mut by_rest: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in r.terms() {
            let mut inner = vec![0; nvars];
            let mut outer = vec![0; nvars];
            for (v, e) in m.support() {
                if in_group[v] {
                    inner[v] = e;
                } else {
                    outer[v] = e;
                }
            }
            by_rest
                .entry(Monomial::from_exponents(outer))
                .or_insert_with(|| Polynomial::zero(&ns))
                .add_term(Monomial::from_exponents(inner), c.clone());
        }
        // express each inner part; gather coefficients per group exponent
        let mut by_exp: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        for (outer, inner) in by_rest {
            let deg = inner.degree().unwrap_or(0);
            if !inner.is_homogeneous_of(deg) {
                return Err(Error::NotHomogeneous(deg));
            }
            let sol = self.solve_group(gi, &inner, deg)?;
            for (exp, c) in sol {
                let slot = by_exp.entry(exp).or_insert_with(|| Polynomial::zero(&ns));
                slot.add_term(outer.clone(), c);
            }
        }
        let members = self.groups[gi].members.clone();
        for (exp, rest) in by_exp {
            let mut e = vec![0; self.symbols.len()];
            for (k, &gidx) in members.iter().enumerate() {
                e[gidx] = exp[k];
            }
            let mono = Polynomial::from_terms(&self.symbols, [(Monomial::from_exponents(e), Rational::one())]);
            let next = prefix.mul(&mono)?;
            self.express_rec(&rest, gi + 1, &next, acc)?;
        }
        Ok(())
    }

    /// Dense solve of `f` (homogeneous of degree `w`, group `gi` variables only).
    fn solve_group(&mut self, gi: usize, f: &Polynomial, w: u32) -> Result<Vec<(Vec<u32>, Rational)>> {
        if w == 0 {
            let c = f.coefficient(&Monomial::one(f.namespace().len()));
            let k = self.groups[gi].members.len();
            return Ok(vec![(vec![0; k], c)]);
        }
        self.ensure_system(gi, w);
        let sys = &self.groups[gi].systems[&w];
        if sys.exps.is_empty() {
            return Err(Error::NotInSubring(format!("no generator products of weight {w}")));
        }
        let b: Vec<Rational> = sys.rows.iter().map(|m| f.coefficient(m)).collect();
        let x = linalg::solve(&sys.matrix, &b)
            .ok_or_else(|| Error::NotInSubring(format!("inconsistent system at weight {w}")))?;
        let mut check = Polynomial::zero(f.namespace());
        for (c, col) in x.iter().zip(&sys.columns) {
            check.add_scaled(col, c)?;
        }
        if &check != f {
            return Err(Error::NotInSubring(format!("residual at weight {w}")));
        }
        if sys.ambiguous_linear {
            return Err(Error::AmbiguousExpression);
        }
        Ok(sys.exps.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect())
    }

    fn ensure_system(&mut self, gi: usize, w: u32) {
        if self.groups[gi].systems.contains_key(&w) {
            return;
        }
        let gw: Vec<u32> = self.groups[gi].members.iter().map(|&g| self.weights[g]).collect();
        let exps = weighted_monomials(&gw, w);
        let columns: Vec<Polynomial> = exps.iter().map(|e| self.product(gi, e)).collect();
        let mut support: Vec<&Monomial> = columns.iter().flat_map(|c| c.terms().keys()).collect();
        support.sort();
        support.dedup();
        let mut basis = RowBasis::new();
        let mut rows = Vec::new();
        let mut matrix = Vec::new();
        for m in support {
            if basis.rank() == exps.len() {
                break;
            }
            let row: Vec<Rational> = columns.iter().map(|c| c.coefficient(m)).collect();
            if basis.insert(&row) {
                rows.push(m.clone());
                matrix.push(row);
            }
        }
        let ambiguous_linear = if basis.rank() < exps.len() {
            let linear: Vec<bool> = exps.iter().map(|e| e.iter().sum::<u32>() == 1).collect();
            linalg::nullspace(&matrix, exps.len())
                .iter()
                .any(|v| v.iter().zip(&linear).any(|(x, &l)| l && !x.is_zero()))
        } else {
            false
        };
        self.groups[gi].systems.insert(
            w,
            WeightSystem {
                exps,
                columns,
                rows,
                matrix,
                ambiguous_linear,
            },
        );
    }

    /// Expanded product `Π gens^e` for the group, memoised.
    fn product(&mut self, gi: usize, e: &[u32]) -> Polynomial {
        if let Some(p) = self.groups[gi].products.get(e) {
            return p.clone();
        }
        let ns = self.var_ns.clone().expect("nonempty generator list");
        let p = match e.iter().position(|&x| x > 0) {
            None => Polynomial::one(&ns),
            Some(i) => {
                let mut smaller = e.to_vec();
                smaller[i] -= 1;
                let g = self.groups[gi].members[i];
                let base = self.product(gi, &smaller);
                base.mul(&self.gens[g].poly).expect("same namespace")
            }
        };
        self.groups[gi].products.insert(e.to_vec(), p.clone());
        p
    }
}
