//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms are stored in a `BTreeMap` from exponent vectors to nonzero
//! coefficients, so iteration order (and therefore printing and hashing)
//! is deterministic. The canonical printed form sorts terms in graded
//! lexicographic order, highest first.

use crate::gauss::GaussRat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Total degree, with a dedicated sentinel for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    /// Degree of the zero polynomial.
    NegInf,
    Of(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInf => None,
            Degree::Of(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Of(a), Degree::Of(b)) => a.cmp(b),
        }
    }
}

pub type Expo = Vec<u32>;

/// A multivariate polynomial over ℚ(i) in a fixed, ordered variable list.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Expo, GaussRat>,
}

/// Graded-lex comparison of exponent vectors: higher total degree first,
/// ties broken lexicographically on the exponents in variable order.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let ta: u32 = a.iter().sum();
    let tb: u32 = b.iter().sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

impl Poly {
    pub fn zero(vars: &[String]) -> Self {
        Poly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: GaussRat) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Poly::constant(vars, GaussRat::one())
    }

    pub fn var(vars: &[String], idx: usize) -> Self {
        assert!(idx < vars.len());
        let mut e = vec![0u32; vars.len()];
        e[idx] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(e, GaussRat::one());
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Expo, GaussRat)>) -> Self {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() <= Degree::Of(0)
    }

    pub fn constant_term(&self) -> GaussRat {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(GaussRat::zero)
    }

    pub fn coeff(&self, e: &[u32]) -> GaussRat {
        self.terms.get(e).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub(crate) fn add_term(&mut self, e: Expo, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .map_or(Degree::NegInf, Degree::Of)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|e| e[var])
            .max()
            .map_or(Degree::NegInf, Degree::Of)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Leading term under graded lex, `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Expo, &GaussRat)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Top-degree homogeneous component (the initial form at infinity).
    pub fn initial_form(&self) -> Result<Poly, crate::error::Error> {
        let d = match self.degree() {
            Degree::NegInf => return Err(crate::error::Error::ZeroPolynomial),
            Degree::Of(d) => d,
        };
        let mut p = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        Ok(p)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn neg(&self) -> Poly {
        let mut p = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            p.terms.insert(e.clone(), -c);
        }
        p
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut p = Poly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Expo = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        let mut p = Poly::zero(&self.vars);
        for (e, k) in &self.terms {
            p.terms.insert(e.clone(), k * c);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        let mut p = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            let factor = GaussRat::from_int(e[var] as i64);
            p.add_term(e2, &factor * c);
        }
        p
    }

    /// Evaluate at a full point.
    pub fn eval(&self, point: &[GaussRat]) -> GaussRat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitute a constant for one variable; the result keeps the same
    /// variable list (with that variable no longer occurring).
    pub fn substitute_const(&self, var: usize, value: &GaussRat) -> Poly {
        let mut p = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] = 0;
            p.add_term(e2, c * &value.pow(k));
        }
        p
    }

    /// Substitute polynomials for every variable (used for map composition).
    /// `images[j]` replaces variable `j`; all images share a variable list,
    /// which becomes the variable list of the result.
    pub fn substitute_all(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.vars.len());
        let out_vars = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut acc = Poly::zero(&out_vars);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(&out_vars, c.clone());
            for (img, &k) in images.iter().zip(e.iter()) {
                if k > 0 {
                    t = t.mul(&img.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Reinterpret the polynomial on a larger variable list. Every current
    /// variable must appear in `new_vars`.
    pub fn embed(&self, new_vars: &[String]) -> Poly {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                new_vars
                    .iter()
                    .position(|w| w == v)
                    .expect("variable missing from extended list")
            })
            .collect();
        let mut p = Poly::zero(new_vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u32; new_vars.len()];
            for (j, &k) in e.iter().enumerate() {
                e2[map[j]] = k;
            }
            p.terms.insert(e2, c.clone());
        }
        p
    }

    /// Drop variables that do not occur. Keeps the relative order of the
    /// surviving names; if nothing survives, keeps the first variable so the
    /// polynomial stays well-formed.
    pub fn restrict_to_occurring(&self) -> Poly {
        let mut used: Vec<usize> = (0..self.vars.len())
            .filter(|&j| self.terms.keys().any(|e| e[j] > 0))
            .collect();
        if used.is_empty() {
            used.push(0);
        }
        let new_vars: Vec<String> = used.iter().map(|&j| self.vars[j].clone()).collect();
        let mut p = Poly::zero(&new_vars);
        for (e, c) in &self.terms {
            let e2: Expo = used.iter().map(|&j| e[j]).collect();
            p.terms.insert(e2, c.clone());
        }
        p
    }

    /// Indices of variables that actually occur.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&j| self.terms.keys().any(|e| e[j] > 0))
            .collect()
    }

    /// View as a univariate polynomial in `var`: coefficient polynomials
    /// (in the full variable list) indexed by the power of `var`, low to high.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let d = match self.degree_in(var) {
            Degree::NegInf => return vec![],
            Degree::Of(d) => d as usize,
        };
        let mut out = vec![Poly::zero(&self.vars); d + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Leading coefficient with respect to `var` (a polynomial in the
    /// remaining variables, still on the full variable list).
    pub fn leading_coeff_in(&self, var: usize) -> Poly {
        match self.coeffs_in(var).pop() {
            Some(p) => p,
            None => Poly::zero(&self.vars),
        }
    }

    /// Divide by the graded-lex leading coefficient, making the polynomial
    /// monic in the canonical sense. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Σ over terms of (|re| + |im|) of the coefficient: the constant of the
    /// polynomial growth bound.
    pub fn coeff_mag_sum(&self) -> BigRational {
        let mut s = BigRational::zero();
        for c in self.terms.values() {
            s += c.mag_surrogate();
        }
        s
    }
}

/// A growth bound `|f(x)| ≤ c (1 + |x|²)^p`, valid for all real points
/// with the `|re|+|im|` magnitude surrogate on values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LojBound {
    pub c: BigRational,
    pub p: u32,
}

/// Bound constant `c = Σ (|re|+|im|)` over coefficients and exponent
/// `p = ⌈deg/2⌉`; the zero polynomial gets `(0, 0)`.
pub fn lojasiewicz_bound(f: &Poly) -> LojBound {
    let p = match f.degree() {
        Degree::NegInf => 0,
        Degree::Of(d) => d.div_ceil(2),
    };
    LojBound {
        c: f.coeff_mag_sum(),
        p,
    }
}

impl LojBound {
    /// Check the bound at a real rational point, exactly:
    /// `|f(x)|_surrogate ≤ c (1 + Σ x_j²)^p`.
    pub fn holds_at(&self, f: &Poly, point: &[BigRational]) -> bool {
        let gpoint: Vec<GaussRat> = point.iter().map(|q| GaussRat::from_rational(q.clone())).collect();
        let val = f.eval(&gpoint).mag_surrogate();
        let mut norm = BigRational::from_integer(BigInt::from(1));
        for x in point {
            norm += x * x;
        }
        let mut rhs = self.c.clone();
        for _ in 0..self.p {
            rhs *= &norm;
        }
        val <= rhs
    }
}

// ---- printing ----

fn monomial_string(vars: &[String], e: &[u32]) -> String {
    let mut parts = Vec::new();
    for (v, &k) in vars.iter().zip(e.iter()) {
        match k {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    /// Canonical form: graded-lex-sorted terms, highest first. Mixed complex
    /// coefficients are parenthesized so output re-parses under the grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Expo> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex_cmp(b, a));
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mono = monomial_string(&self.vars, e);
            // Decide the sign/core split of this term.
            let (neg, core) = if c.is_real() {
                let a = &c.re;
                let mag = a.abs();
                let coeff_str = {
                    let one = mag == BigRational::from_integer(BigInt::from(1));
                    if mono.is_empty() {
                        fmt_rat(&mag)
                    } else if one {
                        mono.clone()
                    } else {
                        format!("{}*{}", fmt_rat(&mag), mono)
                    }
                };
                (a.is_negative(), coeff_str)
            } else if c.re.is_zero() {
                let b = &c.im;
                let mag = b.abs();
                let unit = if mono.is_empty() {
                    "i".to_string()
                } else {
                    format!("i*{mono}")
                };
                let s = if mag == BigRational::from_integer(BigInt::from(1)) {
                    unit
                } else {
                    format!("{}*{}", fmt_rat(&mag), unit)
                };
                (b.is_negative(), s)
            } else {
                let s = if mono.is_empty() {
                    format!("({})", c.to_canonical_string())
                } else {
                    format!("({})*{}", c.to_canonical_string(), mono)
                };
                (false, s)
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&core);
        }
        write!(f, "{out}")
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars2() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn p(s: &str) -> Poly {
        crate::parse::parse_poly(s, &vars2()).unwrap()
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Poly::zero(&vars2()).degree(), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Of(0));
        assert_eq!(p("x*y - 1").degree(), Degree::Of(2));
    }

    #[test]
    fn initial_form_cases() {
        assert_eq!(p("x + x*y").initial_form().unwrap(), p("x*y"));
        assert_eq!(p("x^2 - y^2 + x").initial_form().unwrap(), p("x^2 - y^2"));
        let h = p("x^2 + x*y");
        assert_eq!(h.initial_form().unwrap(), h);
        assert!(Poly::zero(&vars2()).initial_form().is_err());
    }

    #[test]
    fn mul_degree_law() {
        let f = p("x^2 + y");
        let g = p("x*y - 3");
        assert_eq!(f.mul(&g).degree(), Degree::Of(4));
    }

    #[test]
    fn display_roundtrip_basics() {
        for s in [
            "x*y - 1",
            "-x + 2*y - 1/2",
            "(1+2*i)*x^2 + i*y",
            "0",
            "x^2 - y^2",
            "-i*x + 3",
        ] {
            let q = p(s);
            let printed = q.to_string();
            let back = crate::parse::parse_poly(&printed, &vars2()).unwrap();
            assert_eq!(q, back, "roundtrip failed for {s} -> {printed}");
        }
    }

    #[test]
    fn lojasiewicz_examples() {
        let b = lojasiewicz_bound(&p("x"));
        assert_eq!(b.c, BigRational::from_integer(BigInt::from(1)));
        assert_eq!(b.p, 1);
        let b = lojasiewicz_bound(&p("3*x^2*y"));
        assert_eq!(b.c, BigRational::from_integer(BigInt::from(3)));
        assert_eq!(b.p, 2);
        let b = lojasiewicz_bound(&Poly::zero(&vars2()));
        assert_eq!(b.c, BigRational::zero());
        assert_eq!(b.p, 0);
    }
}
