use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone)]
pub struct Namespace(Arc<[String]>);

impl Namespace {
    pub fn new<I, S>(names: I) -> Namespace
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Namespace(names.into())
    }

    /// `prefix1, …, prefix{n}`.
    pub fn indexed(prefix: &str, n: usize) -> Namespace {
        Namespace::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Namespace {
    fn eq(&self, other: &Namespace) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Namespace {}

impl fmt::Debug for Namespace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector over a namespace. Ordered graded-lexicographically:
/// total degree first, then the exponent of the first variable, and so on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Nonzero `(variable, exponent)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn render(&self, ns: &Namespace) -> String {
        let mut parts = Vec::new();
        for (i, e) in self.support() {
            if e == 1 {
                parts.push(ns.name(i).to_string());
            } else {
                parts.push(format!("{}^{}", ns.name(i), e));
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ns: Namespace,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ns: &Namespace) -> Polynomial {
        Polynomial {
            ns: ns.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ns: &Namespace, c: Rational) -> Polynomial {
        let mut p = Polynomial::zero(ns);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ns.len()), c);
        }
        p
    }

    pub fn one(ns: &Namespace) -> Polynomial {
        Polynomial::constant(ns, Rational::one())
    }

    pub fn var(ns: &Namespace, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(ns);
        p.terms.insert(Monomial::var(ns.len(), i), Rational::one());
        p
    }

    pub fn var_named(ns: &Namespace, name: &str) -> Result<Polynomial> {
        let i = ns
            .index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        Ok(Polynomial::var(ns, i))
    }

    /// Linear form `Σ coeffs[i]·var_i`.
    pub fn linear(ns: &Namespace, coeffs: &[Rational]) -> Polynomial {
        assert_eq!(coeffs.len(), ns.len());
        let mut p = Polynomial::zero(ns);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(ns.len(), i), c.clone());
            }
        }
        p
    }

    pub fn from_terms<I>(ns: &Namespace, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(ns);
        for (m, c) in terms {
            assert_eq!(m.0.len(), ns.len(), "monomial length");
            p.add_term(m, c);
        }
        p
    }

    pub fn namespace(&self) -> &Namespace {
        &self.ns
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Degree ≤ 1 with no constant term.
    pub fn is_linear_form(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficients of a linear form, one per variable.
    pub fn linear_coefficients(&self) -> Option<Vec<Rational>> {
        if !self.is_linear_form() {
            return None;
        }
        let mut out = vec![Rational::zero(); self.ns.len()];
        for (m, c) in &self.terms {
            let (i, _) = m.support().next().unwrap();
            out[i] = c.clone();
        }
        Some(out)
    }

    fn check_ns(&self, other: &Polynomial) -> Result<()> {
        if self.ns == other.ns {
            Ok(())
        } else {
            Err(Error::NamespaceMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ns(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ns(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ns(other)?;
        let mut out = Polynomial::zero(&self.ns);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ns);
        }
        Polynomial {
            ns: self.ns.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&Rational::integer(-1))
    }

    /// `self += c·other`, in place.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational) -> Result<()> {
        self.check_ns(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
        Ok(())
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ns);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same namespace");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same namespace");
            }
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ns);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * &Rational::integer(i64::from(e)));
        }
        out
    }

    /// Value at a point given in namespace order.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() < self.ns.len() {
            return Err(Error::UnassignedVariable(self.ns.name(point.len()).to_string()));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.support() {
                v *= &point[i].pow(e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Value at a point given by name; every variable must be assigned.
    pub fn evaluate_named(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.ns.len());
        for name in self.ns.names() {
            let v = point
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::UnassignedVariable(name.clone()))?;
            values.push(v);
        }
        self.evaluate(&values)
    }

    /// Image under a linear change of variables.
    pub fn substitute_linear(&self, sigma: &LinearSubstitution) -> Result<Polynomial> {
        if self.ns != sigma.source {
            return Err(Error::NamespaceMismatch);
        }
        let n = self.ns.len();
        let mut powers: Vec<Vec<Polynomial>> = (0..n)
            .map(|j| alloc::vec![Polynomial::one(&sigma.target), sigma.images[j].clone()])
            .collect();
        let mut out = Polynomial::zero(&sigma.target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&sigma.target, c.clone());
            for (j, e) in m.support() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap().mul(&sigma.images[j]).expect("same namespace");
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][e])?;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Re-express over a namespace that contains every variable of `self`.
    pub fn embed(&self, target: &Namespace) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ns
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::UnknownSymbol(n.clone())))
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, k) in m.support() {
                e[map[i]] = k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Parse `3/2*x1^2*x2 - (y1+y2)^4 + 5` style text over `ns`.
    pub fn parse(ns: &Namespace, text: &str) -> Result<Polynomial> {
        let mut p = Parser {
            ns,
            src: text.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.render(&self.ns))?;
            } else {
                write!(f, "{}*{}", a, m.render(&self.ns))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on namespace mismatch; use [`Polynomial::add`] to handle it.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs).expect("namespace mismatch")
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs).expect("namespace mismatch")
    }
}

impl core::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs).expect("namespace mismatch")
    }
}

/// Linear change of variables: every source variable maps to a linear form
/// over the target namespace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSubstitution {
    source: Namespace,
    target: Namespace,
    images: Vec<Polynomial>,
}

impl LinearSubstitution {
    pub fn new(source: &Namespace, target: &Namespace, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.len() {
            let missing = source.names().get(images.len()).cloned().unwrap_or_default();
            return Err(Error::UnassignedVariable(missing));
        }
        for (j, img) in images.iter().enumerate() {
            if img.namespace() != target {
                return Err(Error::NamespaceMismatch);
            }
            if !img.is_linear_form() {
                return Err(Error::NonLinearImage(source.name(j).to_string()));
            }
        }
        Ok(LinearSubstitution {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Build from `(source name, image)` pairs; every source variable must appear.
    pub fn from_pairs(source: &Namespace, target: &Namespace, pairs: &[(&str, Polynomial)]) -> Result<Self> {
        let mut images = Vec::with_capacity(source.len());
        for name in source.names() {
            let img = pairs
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, p)| p.clone())
                .ok_or_else(|| Error::UnassignedVariable(name.clone()))?;
            images.push(img);
        }
        for (n, _) in pairs {
            if source.index_of(n).is_none() {
                return Err(Error::UnknownSymbol((*n).to_string()));
            }
        }
        LinearSubstitution::new(source, target, images)
    }

    /// Matrix form: `images[j] = Σ_i m[j][i]·target_i`.
    pub fn from_matrix(source: &Namespace, target: &Namespace, m: &[Vec<Rational>]) -> Result<Self> {
        let images = m.iter().map(|row| Polynomial::linear(target, row)).collect();
        LinearSubstitution::new(source, target, images)
    }

    pub fn source(&self) -> &Namespace {
        &self.source
    }

    pub fn target(&self) -> &Namespace {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, name: &str) -> Option<&Polynomial> {
        self.source.index_of(name).map(|j| &self.images[j])
    }

    /// Coefficient matrix, one row per source variable.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        self.images
            .iter()
            .map(|p| p.linear_coefficients().expect("linear image"))
            .collect()
    }

    /// Source-coordinate values of a target point.
    pub fn apply_to_point(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.images.iter().map(|p| p.evaluate(point)).collect()
    }

    /// `other ∘ self`: first `self`, then substitute `other` into the result.
    pub fn then(&self, other: &LinearSubstitution) -> Result<LinearSubstitution> {
        let images = self
            .images
            .iter()
            .map(|p| p.substitute_linear(other))
            .collect::<Result<Vec<_>>>()?;
        LinearSubstitution::new(&self.source, &other.target, images)
    }
}

struct Parser<'a> {
    ns: &'a Namespace,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ns);
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = Rational::integer(-1);
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc.add_scaled(&t, &sign)?;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = Rational::integer(-1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                e
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.number()?;
                Polynomial::constant(self.ns, r)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && is_ident_byte(self.src[self.pos]) {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ns.index_of(name) {
                    Some(i) => Polynomial::var(self.ns, i),
                    None => {
                        self.pos = start;
                        return Err(self.error(&format!("unknown variable `{name}`")));
                    }
                }
            }
            _ => return Err(self.error("expected a factor")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let k: u32 = core::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.error("expected an exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.src.len()
            && self.src[self.pos] == b'/'
            && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse().map_err(|_| self.error("bad number"))
    }
}

pub(crate) fn is_ident_byte(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' || c == b'.'
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ns3() -> Namespace {
        Namespace::indexed("x", 3)
    }

    #[test]
    fn add_cancels_and_identity() {
        let ns = ns3();
        let p = Polynomial::parse(&ns, "x1^2 + x2").unwrap();
        let q = Polynomial::parse(&ns, "-x2").unwrap();
        assert_eq!(p.add(&q).unwrap().to_string(), "x1^2");
        assert_eq!(p.add(&Polynomial::zero(&ns)).unwrap(), p);
        let a = Polynomial::parse(&ns, "x1+x2").unwrap();
        let b = Polynomial::parse(&ns, "x1-x2").unwrap();
        assert_eq!(a.add(&b).unwrap().to_string(), "2*x1");
    }

    #[test]
    fn mul_examples() {
        let ns = ns3();
        let a = Polynomial::parse(&ns, "x1+x2").unwrap();
        let b = Polynomial::parse(&ns, "x1-x2").unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "x1^2 - x2^2");
        assert_eq!(a.mul(&Polynomial::one(&ns)).unwrap(), a);
        let y = Namespace::indexed("y", 2);
        let s = Polynomial::parse(&y, "y1+y2").unwrap();
        assert_eq!(s.pow(2).to_string(), "y1^2 + 2*y1*y2 + y2^2");
    }

    #[test]
    fn pow_examples() {
        let y = Namespace::indexed("y", 2);
        let s = Polynomial::parse(&y, "y1+y2").unwrap();
        assert_eq!(
            s.pow(4).to_string(),
            "y1^4 + 4*y1^3*y2 + 6*y1^2*y2^2 + 4*y1*y2^3 + y2^4"
        );
        assert_eq!(s.pow(1), s);
        assert!(Polynomial::zero(&y).pow(3).is_zero());
        assert_eq!(Polynomial::zero(&y).pow(0), Polynomial::one(&y));
    }

    #[test]
    fn namespace_mismatch_is_an_error() {
        let a = Polynomial::var(&Namespace::indexed("x", 2), 0);
        let b = Polynomial::var(&Namespace::indexed("y", 2), 0);
        assert_eq!(a.add(&b), Err(Error::NamespaceMismatch));
        assert_eq!(a.mul(&b), Err(Error::NamespaceMismatch));
    }

    #[test]
    fn coordinate_projection() {
        let x = ns3();
        let y = Namespace::indexed("y", 2);
        let p = Polynomial::parse(&x, "x1^4 + x2^4 + x3^4").unwrap();
        let sigma = LinearSubstitution::from_pairs(
            &x,
            &y,
            &[
                ("x1", Polynomial::var(&y, 0)),
                ("x2", Polynomial::var(&y, 1)),
                ("x3", Polynomial::zero(&y)),
            ],
        )
        .unwrap();
        assert_eq!(p.substitute_linear(&sigma).unwrap().to_string(), "y1^4 + y2^4");
    }

    #[test]
    fn substitution_requires_every_assignment() {
        let x = ns3();
        let y = Namespace::indexed("y", 1);
        let err = LinearSubstitution::from_pairs(&x, &y, &[("x1", Polynomial::var(&y, 0))]);
        assert_eq!(err, Err(Error::UnassignedVariable("x2".into())));
        let bad = LinearSubstitution::new(
            &Namespace::indexed("x", 1),
            &y,
            alloc::vec![Polynomial::parse(&y, "y1^2").unwrap()],
        );
        assert_eq!(bad, Err(Error::NonLinearImage("x1".into())));
    }

    #[test]
    fn evaluate_examples() {
        let y = ns_y();
        let p = Polynomial::parse(&y, "(y1+y2)^4+(y1+y3)^4+(y2+y3)^4").unwrap();
        let pt = [Rational::one(), Rational::zero(), Rational::zero()];
        assert_eq!(p.evaluate(&pt).unwrap(), Rational::integer(2));
        let c = Polynomial::parse(&y, "7 + y1*y2").unwrap();
        let zero = [Rational::zero(), Rational::zero(), Rational::zero()];
        assert_eq!(c.evaluate(&zero).unwrap(), Rational::integer(7));
        let x = Namespace::indexed("x", 2);
        let q = Polynomial::parse(&x, "x1^2 + x2^2").unwrap();
        let v = q.evaluate(&[Rational::new(3, 2), Rational::new(1, 2)]).unwrap();
        assert_eq!(v, Rational::new(5, 2));
        assert_eq!(
            q.evaluate(&[Rational::one()]),
            Err(Error::UnassignedVariable("x2".into()))
        );
    }

    fn ns_y() -> Namespace {
        Namespace::indexed("y", 3)
    }

    #[test]
    fn grlex_order_and_rendering() {
        let x = ns3();
        let p = Polynomial::parse(&x, "x3 + x1*x2 + x1^2 + 1/2*x2^2 - 4").unwrap();
        assert_eq!(p.to_string(), "x1^2 + x1*x2 + 1/2*x2^2 + x3 - 4");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn parse_errors_carry_position() {
        let x = ns3();
        match Polynomial::parse(&x, "x1 + z9") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
    }
}
