//! Sparse exact multivariate polynomials over the integers.
//!
//! Two variable alphabets are used throughout the crate: `x1..xn`, and shift
//! parameters `y<f>_<j>` grouped into families `f = 1, 2, ...` (one family
//! per diagram of a multishape). Variables are totally ordered with every x
//! before every y, x by index, y by (family, index).
//!
//! A polynomial is a map from monomials to nonzero integer coefficients, so
//! structural equality coincides with mathematical equality. Terms serialize
//! in graded lexicographic order (largest first). All arithmetic is exact;
//! there is no floating point anywhere in this crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A single variable: `X(i)` prints as `x<i>`, `Y{f,j}` as `y<f>_<j>`.
/// Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarId {
    X(u32),
    Y { family: u32, index: u32 },
}

impl VarId {
    pub fn x(i: u32) -> VarId {
        assert!(i >= 1, "x index is 1-based");
        VarId::X(i)
    }

    pub fn y(family: u32, index: u32) -> VarId {
        assert!(family >= 1 && index >= 1, "y indices are 1-based");
        VarId::Y { family, index }
    }

    pub fn is_x(&self) -> bool {
        matches!(self, VarId::X(_))
    }

    pub fn to_text(&self) -> String {
        match self {
            VarId::X(i) => format!("x{i}"),
            VarId::Y { family, index } => format!("y{family}_{index}"),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            VarId::X(i) => format!("x_{{{i}}}"),
            VarId::Y { family, index } => format!("y^{{({family})}}_{{{index}}}"),
        }
    }

    pub fn parse(s: &str) -> Result<VarId, Error> {
        let bad = || Error::BadVariable(s.to_string());
        if let Some(rest) = s.strip_prefix('x') {
            let i: u32 = rest.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            Ok(VarId::X(i))
        } else if let Some(rest) = s.strip_prefix('y') {
            let (f, j) = rest.split_once('_').ok_or_else(bad)?;
            let family: u32 = f.parse().map_err(|_| bad())?;
            let index: u32 = j.parse().map_err(|_| bad())?;
            if family == 0 || index == 0 {
                return Err(bad());
            }
            Ok(VarId::Y { family, index })
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Product of variable powers. Exponents are strictly positive and the
/// factor list is sorted by variable, so equal monomials are structurally
/// equal. The ordering is graded lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: VarId, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds from arbitrary (variable, exponent) pairs; merges repeats and
    /// drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Monomial {
        let mut m: BTreeMap<VarId, u64> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *m.entry(v).or_insert(0) += e as u64;
            }
        }
        Monomial(
            m.into_iter()
                .map(|(v, e)| (v, u32::try_from(e).expect("exponent overflow")))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea.checked_add(eb).expect("exponent overflow")));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    out.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// Exact division; `None` if any exponent of `other` exceeds ours.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut b = other.0.iter().peekable();
        for &(v, e) in &self.0 {
            match b.peek() {
                Some(&&(vb, eb)) if vb == v => {
                    if eb > e {
                        return None;
                    }
                    if eb < e {
                        out.push((v, e - eb));
                    }
                    b.next();
                }
                Some(&&(vb, _)) if vb < v => return None,
                _ => out.push((v, e)),
            }
        }
        if b.peek().is_some() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Splits into the x-exponent vector (padded to n) and the y-only part.
    /// Panics if an x variable beyond `x<n>` occurs.
    pub fn split_x(&self, n: usize) -> (Vec<u32>, Monomial) {
        let mut xs = vec![0u32; n];
        let mut rest = Vec::new();
        for &(v, e) in &self.0 {
            match v {
                VarId::X(i) => {
                    assert!((i as usize) <= n, "x{i} out of range for n={n}");
                    xs[(i - 1) as usize] = e;
                }
                _ => rest.push((v, e)),
            }
        }
        (xs, Monomial(rest))
    }

    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_text()
                } else {
                    format!("{}^{}", v.to_text(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn to_latex(&self) -> String {
        self.0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_latex()
                } else {
                    format!("{}^{{{}}}", v.to_latex(), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // lexicographic: the earlier variable with the larger exponent wins
            let mut a = self.0.iter().peekable();
            let mut b = other.0.iter().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            a.next();
                            b.next();
                        }
                    },
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (None, None) => return Ordering::Equal,
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with BigInt coefficients. Invariant: no stored
/// coefficient is zero, so `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Polynomial {
        let c = c.into();
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in the serialization order (descending graded-lex).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_assign_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_assign_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_assign_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_assign_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient, or `None` when `self` is not a polynomial multiple of
    /// `d`. Relies on leading-term division under the monomial order.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = Polynomial::zero();
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let m = rm.div(&dm)?;
            let qc = &rc / &dc;
            if &qc * &dc != rc {
                return None;
            }
            let t = Polynomial::term(qc, m);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True when every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn assign_var(&self, v: VarId, value: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                out.add_assign_term(m.clone(), c.clone());
            } else {
                let rest = Monomial(
                    m.0.iter()
                        .filter(|&&(w, _)| w != v)
                        .cloned()
                        .collect::<Vec<_>>(),
                );
                out.add_assign_term(rest, c * value.pow(e));
            }
        }
        out
    }

    /// Sets every variable of the family to zero.
    pub fn zero_y_family(&self, family: u32) -> Polynomial {
        let hits_family = |m: &Monomial| {
            m.0.iter()
                .any(|&(v, _)| matches!(v, VarId::Y { family: f, .. } if f == family))
        };
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !hits_family(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `y<family>_j -> values[j-1]`, and 0 past the end.
    pub fn assign_y_family(&self, family: u32, values: &[BigInt]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            let mut dead = false;
            for &(v, e) in &m.0 {
                match v {
                    VarId::Y { family: f, index } if f == family => {
                        let val = values
                            .get((index - 1) as usize)
                            .cloned()
                            .unwrap_or_else(BigInt::zero);
                        if val.is_zero() {
                            dead = true;
                            break;
                        }
                        coeff *= val.pow(e);
                    }
                    _ => rest.push((v, e)),
                }
            }
            if !dead {
                out.add_assign_term(Monomial(rest), coeff);
            }
        }
        out
    }

    /// Substitutes `y<family>_j -> -y<family>_j` for every j.
    pub fn negate_y_family(&self, family: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let deg: u64 =
                        m.0.iter()
                            .filter(|&&(v, _)| {
                                matches!(v, VarId::Y { family: f, .. } if f == family)
                            })
                            .map(|&(_, e)| e as u64)
                            .sum();
                    let c = if deg % 2 == 1 { -c } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Renames `y<from>_j` to `y<to>_j` for every j. The target family must
    /// not already occur when it differs from the source.
    pub fn rename_y_family(&self, from: u32, to: u32) -> Polynomial {
        if from == to {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mapped = Monomial::from_pairs(m.0.iter().map(|&(v, e)| match v {
                VarId::Y { family, index } if family == from => (VarId::y(to, index), e),
                VarId::Y { family, .. } if family == to => {
                    panic!("rename target family {to} already present")
                }
                other => (other, e),
            }));
            out.add_assign_term(mapped, c.clone());
        }
        out
    }

    /// Renames `x<i>` to `x<perm[i-1]>`; `perm` must be a permutation of 1..=len.
    pub fn permute_x(&self, perm: &[u32]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mapped = Monomial::from_pairs(m.0.iter().map(|&(v, e)| match v {
                VarId::X(i) => (VarId::x(perm[(i - 1) as usize]), e),
                other => (other, e),
            }));
            out.add_assign_term(mapped, c.clone());
        }
        out
    }

    /// The (y-)coefficient of the exact x-monomial `x1^e1 * ... * xk^ek`.
    pub fn coefficient_of_x(&self, exps: &[u32]) -> Polynomial {
        let want: Vec<(VarId, u32)> = exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| (VarId::x(i as u32 + 1), e))
            .collect();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let xs: Vec<(VarId, u32)> =
                m.0.iter().filter(|&&(v, _)| v.is_x()).cloned().collect();
            if xs == want {
                let ys = Monomial(
                    m.0.iter()
                        .filter(|&&(v, _)| !v.is_x())
                        .cloned()
                        .collect::<Vec<_>>(),
                );
                out.add_assign_term(ys, c.clone());
            }
        }
        out
    }

    /// Groups terms by their x-exponent vector (padded to n).
    pub fn group_by_x(&self, n: usize) -> BTreeMap<Vec<u32>, Polynomial> {
        let mut out: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (xs, ys) = m.split_x(n);
            out.entry(xs)
                .or_insert_with(Polynomial::zero)
                .add_assign_term(ys, c.clone());
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push(' ');
                }
                s.push_str(&m.to_latex());
            }
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms_desc()
                .map(|(m, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "vars": m
                            .factors()
                            .iter()
                            .map(|&(v, e)| serde_json::json!([v.to_text(), e]))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Polynomial, Error> {
        let bad = |msg: &str| Error::BadJson(msg.to_string());
        let arr = v.as_array().ok_or_else(|| bad("polynomial: expected array"))?;
        let mut out = Polynomial::zero();
        for t in arr {
            let coeff = t
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| bad("term: missing coeff string"))?;
            let coeff: BigInt = coeff
                .parse()
                .map_err(|_| bad("term: coeff is not an integer"))?;
            let vars = t
                .get("vars")
                .and_then(|w| w.as_array())
                .ok_or_else(|| bad("term: missing vars array"))?;
            let mut pairs = Vec::new();
            for pair in vars {
                let pair = pair.as_array().filter(|p| p.len() == 2);
                let pair = pair.ok_or_else(|| bad("term: var entry is not a pair"))?;
                let name = pair[0]
                    .as_str()
                    .ok_or_else(|| bad("term: variable name is not a string"))?;
                let e = pair[1]
                    .as_u64()
                    .ok_or_else(|| bad("term: exponent is not a nonnegative integer"))?;
                let e = u32::try_from(e).map_err(|_| bad("term: exponent overflow"))?;
                pairs.push((VarId::parse(name)?, e));
            }
            out.add_assign_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&m.to_text())?;
            } else {
                write!(f, "{}*{}", mag, m.to_text())?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$method(self, rhs)
            }
        }
        impl std::ops::$trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                Polynomial::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// det[(x_i)^{xi_j}] for i, j = 1..n. Zero when `xi` has repeated entries.
/// Uses the signed permutation sum up to n = 8 and cofactor expansion of the
/// power matrix beyond that; the two paths agree on the overlap.
pub fn alternant(xi: &[u32], n: usize) -> Result<Polynomial, Error> {
    if xi.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: xi.len(),
        });
    }
    if n <= 8 {
        Ok(alternant_perm_sum(xi))
    } else {
        Ok(det_cofactor(&power_matrix(xi)))
    }
}

fn alternant_perm_sum(xi: &[u32]) -> Polynomial {
    use itertools::Itertools;
    let n = xi.len();
    let mut out = Polynomial::zero();
    for perm in (0..n).permutations(n) {
        let mut inversions = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let m = Monomial::from_pairs(
            (0..n).map(|i| (VarId::x(i as u32 + 1), xi[perm[i]])),
        );
        out.add_assign_term(m, BigInt::from(sign));
    }
    out
}

fn power_matrix(xi: &[u32]) -> Vec<Vec<Polynomial>> {
    let n = xi.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    Polynomial::term(1, Monomial::var_pow(VarId::x(i as u32 + 1), xi[j]))
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row. No division.
pub fn det_cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let cols: Vec<usize> = (0..n).collect();
    det_cofactor_inner(m, 0, &cols)
}

fn det_cofactor_inner(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.is_empty() {
        return Polynomial::one();
    }
    let mut out = Polynomial::zero();
    for (k, &j) in cols.iter().enumerate() {
        let entry = &m[row][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != j)
            .collect();
        let minor = det_cofactor_inner(m, row + 1, &rest);
        let signed = if k % 2 == 0 { minor } else { minor.neg() };
        out = out.add(&entry.mul(&signed));
    }
    out
}

/// Fraction-free Bareiss elimination; every interior division is exact.
pub fn det_bareiss(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return Polynomial::one();
    }
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("inexact division in fraction-free elimination");
            }
            a[i][k] = Polynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Cofactor expansion for small matrices, Bareiss elimination beyond.
pub fn det(m: &[Vec<Polynomial>]) -> Polynomial {
    if m.len() <= 6 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// e_r of the first p variables of a y-family; each variable is negated when
/// `negate` is set. Zero for r < 0 or r > p, one for r = 0.
pub fn elementary_sym(r: i64, p: u32, family: u32, negate: bool) -> Polynomial {
    if r < 0 || r > p as i64 {
        return Polynomial::zero();
    }
    if r == 0 {
        return Polynomial::one();
    }
    let r = r as usize;
    let mut e: Vec<Polynomial> = vec![Polynomial::zero(); r + 1];
    e[0] = Polynomial::one();
    for j in 1..=p {
        let v = gen_var(family, j, negate);
        let top = r.min(j as usize);
        for k in (1..=top).rev() {
            let bump = e[k - 1].mul(&v);
            e[k] = e[k].add(&bump);
        }
    }
    e[r].clone()
}

/// h_r of the first p variables of a y-family, with optional negation.
/// Zero for r < 0 (and for r > 0 with p = 0), one for r = 0.
pub fn complete_sym(r: i64, p: u32, family: u32, negate: bool) -> Polynomial {
    if r < 0 {
        return Polynomial::zero();
    }
    if r == 0 {
        return Polynomial::one();
    }
    if p == 0 {
        return Polynomial::zero();
    }
    let r = r as usize;
    let mut h: Vec<Polynomial> = vec![Polynomial::zero(); r + 1];
    h[0] = Polynomial::one();
    for j in 1..=p {
        let v = gen_var(family, j, negate);
        for k in 1..=r {
            let bump = h[k - 1].mul(&v);
            h[k] = h[k].add(&bump);
        }
    }
    h[r].clone()
}

fn gen_var(family: u32, index: u32, negate: bool) -> Polynomial {
    let v = Polynomial::var(VarId::y(family, index));
    if negate {
        v.neg()
    } else {
        v
    }
}
