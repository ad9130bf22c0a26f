//! Expanding products of factorial Schur polynomials.
//!
//! The factorial Schur polynomial attached to a partition with at most n
//! parts is the sum over semistandard fillings T of the product of
//! (x_v + y_(v+c-r)) over boxes, where v is the box value and (r, c) its
//! 1-based position. A product of several factorial Schur polynomials, one
//! shifted-variable family per factor, expands in ordinary Schur polynomials
//! of x with coefficients in the y families.
//!
//! `lr_coefficient` computes one expansion coefficient combinatorially: it
//! sums the weights of the barred fillings of the multishape whose unbarred
//! column word is Yamanouchi and whose unbarred content is the target
//! partition. `oracle_coefficient` computes the same value independently by
//! multiplying the product with the Vandermonde alternant and extracting an
//! x coefficient; the two paths share no enumeration code.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::poly::{alternant, Monomial, Polynomial, VarId};
use crate::tableau::{
    column_word_cells, enumerate_semistandard, BarredEntry, BarredSkewTableau, MultiShape,
    Partition,
};
use crate::Error;

/// The staircase (n-1, n-2, ..., 0).
pub fn rho(n: usize) -> Vec<u32> {
    (0..n).rev().map(|k| k as u32).collect()
}

/// Factorial Schur polynomial in x_1..x_n with shifted variables from the
/// given y family. Errors when the partition has more than n parts.
pub fn factorial_schur(lambda: &Partition, n: usize, family: u32) -> Result<Polynomial, Error> {
    if !lambda.fits_rows(n) {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            n,
        });
    }
    static MEMO: OnceLock<Mutex<HashMap<(Vec<u32>, usize, u32), Polynomial>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda.parts().to_vec(), n, family);
    if let Some(hit) = memo.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut sum = Polynomial::zero();
    for t in enumerate_semistandard(lambda, n as u32) {
        let mut prod = Polynomial::one();
        for (_, r, c, e) in t.cells() {
            let shift = e.value + c as u32 - r as u32;
            let factor = Polynomial::var(VarId::x(e.value)) + Polynomial::var(VarId::y(family, shift));
            prod = &prod * &factor;
        }
        sum = sum + prod;
    }
    memo.lock().unwrap().insert(key, sum.clone());
    Ok(sum)
}

/// Ordinary Schur polynomial in x_1..x_n.
pub fn schur(lambda: &Partition, n: usize) -> Result<Polynomial, Error> {
    if !lambda.fits_rows(n) {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            n,
        });
    }
    let mut sum = Polynomial::zero();
    for t in enumerate_semistandard(lambda, n as u32) {
        let content = t.unbarred_content(n);
        let m = Monomial::from_pairs(
            content
                .iter()
                .enumerate()
                .map(|(i, &e)| (VarId::x(i as u32 + 1), e)),
        );
        sum.add_assign_term(m, 1.into());
    }
    Ok(sum)
}

/// Product over the diagrams of the multishape of their factorial Schur
/// polynomials; diagram d uses the y family d (1-based).
pub fn product_factorial_schur(shape: &MultiShape, n: usize) -> Result<Polynomial, Error> {
    let mut prod = Polynomial::one();
    for (d, part) in shape.diagrams().iter().enumerate() {
        prod = &prod * &factorial_schur(part, n, d as u32 + 1)?;
    }
    Ok(prod)
}

/// Visits every barred filling with Yamanouchi unbarred column word, filling
/// boxes in column-word order, values ascending and unbarred before barred
/// at each box. `target` restricts the unbarred content; `bars` false limits
/// the walk to bar-free fillings.
fn for_each_yamanouchi(
    shape: &MultiShape,
    n: usize,
    target: Option<&Partition>,
    bars: bool,
    visit: &mut dyn FnMut(&BarredSkewTableau),
) {
    let cells = column_word_cells(shape);
    let mut rows: Vec<Vec<Vec<BarredEntry>>> = shape
        .diagrams()
        .iter()
        .map(|p| {
            p.parts()
                .iter()
                .map(|&len| vec![BarredEntry::plain(0); len as usize])
                .collect()
        })
        .collect();
    let mut counts = vec![0u32; n];
    let goal: Option<Vec<u32>> = target.map(|mu| mu.padded(n));
    let still_needed: u32 = goal.as_ref().map(|g| g.iter().sum()).unwrap_or(0);
    let mut state = Walk {
        shape,
        cells: &cells,
        n: n as u32,
        bars,
        rows: &mut rows,
        counts: &mut counts,
        goal: goal.as_deref(),
        still_needed,
        visit,
    };
    state.step(0);
}

struct Walk<'a> {
    shape: &'a MultiShape,
    cells: &'a [(usize, usize, usize)],
    n: u32,
    bars: bool,
    rows: &'a mut Vec<Vec<Vec<BarredEntry>>>,
    counts: &'a mut Vec<u32>,
    goal: Option<&'a [u32]>,
    still_needed: u32,
    visit: &'a mut dyn FnMut(&BarredSkewTableau),
}

impl Walk<'_> {
    fn step(&mut self, k: usize) {
        if k == self.cells.len() {
            if self.goal.is_some() && self.still_needed > 0 {
                return;
            }
            let t = BarredSkewTableau::from_rows_unchecked(
                self.shape.clone(),
                self.rows.clone(),
            );
            (self.visit)(&t);
            return;
        }
        let (d, r, c) = self.cells[k];
        let boxes_left = (self.cells.len() - k - 1) as u32;
        // the box above and the box to the right are already filled
        let mut lo = 1;
        if r > 0 && c < self.rows[d][r - 1].len() {
            lo = lo.max(self.rows[d][r - 1][c].value + 1);
        }
        let hi = self
            .rows[d][r]
            .get(c + 1)
            .map(|e| e.value)
            .unwrap_or(self.n);
        for v in lo..=hi {
            let vi = (v - 1) as usize;
            // unbarred: the growing column word must stay Yamanouchi and
            // the content must stay inside the target
            let word_ok = v == 1 || self.counts[vi - 1] > self.counts[vi];
            let cap_ok = match self.goal {
                Some(g) => self.counts[vi] < g[vi],
                None => true,
            };
            if word_ok && cap_ok {
                let needed_after = self.still_needed.saturating_sub(1);
                if self.goal.is_none() || needed_after <= boxes_left {
                    self.rows[d][r][c] = BarredEntry::plain(v);
                    self.counts[vi] += 1;
                    let saved = self.still_needed;
                    self.still_needed = needed_after;
                    self.step(k + 1);
                    self.still_needed = saved;
                    self.counts[vi] -= 1;
                }
            }
            if self.bars && (self.goal.is_none() || self.still_needed <= boxes_left) {
                self.rows[d][r][c] = BarredEntry::barred(v);
                self.step(k + 1);
            }
        }
        self.rows[d][r][c] = BarredEntry::plain(0);
    }
}

/// The barred fillings with Yamanouchi unbarred column word and unbarred
/// content mu, in the documented deterministic order.
pub fn enumerate_lr_tableaux(
    shape: &MultiShape,
    mu: &Partition,
    n: usize,
) -> Result<Vec<BarredSkewTableau>, Error> {
    if !mu.fits_rows(n) {
        return Err(Error::TooManyParts { parts: mu.len(), n });
    }
    let mut out = Vec::new();
    for_each_yamanouchi(shape, n, Some(mu), true, &mut |t| out.push(t.clone()));
    Ok(out)
}

/// One expansion coefficient: the weight sum over the fillings counted by
/// `enumerate_lr_tableaux`.
pub fn lr_coefficient(shape: &MultiShape, mu: &Partition, n: usize) -> Result<Polynomial, Error> {
    if !mu.fits_rows(n) {
        return Err(Error::TooManyParts { parts: mu.len(), n });
    }
    let mut sum = Polynomial::zero();
    for_each_yamanouchi(shape, n, Some(mu), true, &mut |t| {
        sum = &sum + &t.weight();
    });
    Ok(sum)
}

/// The full expansion: every partition with a nonzero coefficient, from one
/// enumeration of all Yamanouchi barred fillings.
pub fn lr_expand(shape: &MultiShape, n: usize) -> Result<CoeffTable, Error> {
    if !shape.fits_rows(n) {
        return Err(Error::TooManyParts {
            parts: shape.diagrams().iter().map(|p| p.len()).max().unwrap_or(0),
            n,
        });
    }
    let mut coeffs: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    for_each_yamanouchi(shape, n, None, true, &mut |t| {
        let content = t.unbarred_content(n);
        let mu = Partition::new(content).expect("a full Yamanouchi word has partition content");
        let entry = coeffs.entry(mu).or_insert_with(Polynomial::zero);
        *entry = &*entry + &t.weight();
    });
    coeffs.retain(|_, p| !p.is_zero());
    Ok(CoeffTable {
        shape: shape.clone(),
        n,
        coeffs,
    })
}

/// Number of bar-free Yamanouchi fillings of the multishape with the given
/// unbarred content (the classical coefficient for a product of ordinary
/// Schur polynomials).
pub fn classical_lr_count(shape: &MultiShape, mu: &Partition, n: usize) -> Result<u64, Error> {
    if !mu.fits_rows(n) {
        return Err(Error::TooManyParts { parts: mu.len(), n });
    }
    let mut count = 0u64;
    for_each_yamanouchi(shape, n, Some(mu), false, &mut |_| count += 1);
    Ok(count)
}

/// The same coefficient through an independent route: multiply the product
/// of factorial Schur polynomials by the Vandermonde alternant and read off
/// the coefficient of x^(mu + staircase).
pub fn oracle_coefficient(
    shape: &MultiShape,
    mu: &Partition,
    n: usize,
) -> Result<Polynomial, Error> {
    if !mu.fits_rows(n) {
        return Err(Error::TooManyParts { parts: mu.len(), n });
    }
    let staircase = rho(n);
    let prod = product_factorial_schur(shape, n)?;
    let anti = &alternant(&staircase, n)? * &prod;
    let exps: Vec<u32> = mu
        .padded(n)
        .iter()
        .zip(staircase.iter())
        .map(|(a, b)| a + b)
        .collect();
    Ok(anti.coefficient_of_x(&exps))
}

/// The full expansion through the alternant route: group the alternating
/// polynomial by x exponent vector and keep the strictly decreasing ones.
pub fn oracle_expand(shape: &MultiShape, n: usize) -> Result<CoeffTable, Error> {
    let staircase = rho(n);
    let prod = product_factorial_schur(shape, n)?;
    let anti = &alternant(&staircase, n)? * &prod;
    let mut coeffs: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    for (exps, poly) in anti.group_by_x(n) {
        // the alternating polynomial carries every permutation of each
        // strictly decreasing exponent vector; one representative suffices
        let strict = exps.windows(2).all(|w| w[0] > w[1]);
        if !strict {
            continue;
        }
        let mu_parts: Vec<u32> = exps
            .iter()
            .zip(staircase.iter())
            .map(|(a, b)| a - b)
            .collect();
        let mu = Partition::new(mu_parts).expect("strict exponents give a partition");
        coeffs.insert(mu, poly);
    }
    coeffs.retain(|_, p| !p.is_zero());
    Ok(CoeffTable {
        shape: shape.clone(),
        n,
        coeffs,
    })
}

/// Expansion coefficients of one product, keyed by partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffTable {
    pub shape: MultiShape,
    pub n: usize,
    coeffs: BTreeMap<Partition, Polynomial>,
}

impl CoeffTable {
    pub fn new(shape: MultiShape, n: usize) -> CoeffTable {
        CoeffTable {
            shape,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, mu: Partition, poly: Polynomial) {
        if !poly.is_zero() {
            self.coeffs.insert(mu, poly);
        }
    }

    /// The coefficient at mu; zero when absent.
    pub fn coefficient(&self, mu: &Partition) -> Polynomial {
        self.coeffs.get(mu).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Polynomial)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Applies a polynomial map to every coefficient, dropping zeros.
    pub fn map_polys(&self, f: impl Fn(&Polynomial) -> Polynomial) -> CoeffTable {
        let mut out = CoeffTable::new(self.shape.clone(), self.n);
        for (mu, poly) in &self.coeffs {
            out.insert(mu.clone(), f(poly));
        }
        out
    }

    /// Partitions in ascending order with their coefficients, one line each.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for (mu, poly) in &self.coeffs {
            out.push_str(&format!("c{mu} = {poly}\n"));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        for (mu, poly) in &self.coeffs {
            let label = if mu.is_empty() {
                "\\emptyset".to_string()
            } else {
                mu.to_string()
            };
            out.push_str(&format!("c^{{{label}}} = {}\n", poly.to_latex()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coefficients: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(mu, poly)| {
                serde_json::json!({
                    "mu": mu.to_json(),
                    "poly": poly.to_json(),
                })
            })
            .collect();
        serde_json::json!({
            "shape": self.shape.to_json(),
            "n": self.n,
            "coefficients": coefficients,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CoeffTable, Error> {
        let bad = |msg: &str| Error::BadJson(msg.to_string());
        let shape = MultiShape::from_json(v.get("shape").ok_or_else(|| bad("table: missing shape"))?)?;
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| bad("table: missing n"))? as usize;
        let list = v
            .get("coefficients")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("table: missing coefficients"))?;
        let mut table = CoeffTable::new(shape, n);
        for item in list {
            let mu = Partition::from_json(item.get("mu").ok_or_else(|| bad("table: missing mu"))?)?;
            let poly =
                Polynomial::from_json(item.get("poly").ok_or_else(|| bad("table: missing poly"))?)?;
            table.insert(mu, poly);
        }
        Ok(table)
    }
}

impl fmt::Display for CoeffTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::det;
    use num_bigint::BigInt;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shape(parts: &[&[u32]]) -> MultiShape {
        MultiShape::new(parts.iter().map(|q| p(q)).collect())
    }

    fn x(i: u32) -> Polynomial {
        Polynomial::var(VarId::x(i))
    }

    fn y(f: u32, j: u32) -> Polynomial {
        Polynomial::var(VarId::y(f, j))
    }

    #[test]
    fn single_box_golden() {
        let got = factorial_schur(&p(&[1]), 2, 1).unwrap();
        let want = x(1) + x(2) + y(1, 1) + y(1, 2);
        assert_eq!(got, want);
    }

    #[test]
    fn column_golden() {
        // the only filling of a 2-box column is 1 over 2
        let got = factorial_schur(&p(&[1, 1]), 2, 1).unwrap();
        let want = &(x(1) + y(1, 1)) * &(x(2) + y(1, 1));
        assert_eq!(got, want);
    }

    #[test]
    fn too_many_parts_rejected() {
        assert!(factorial_schur(&p(&[1, 1, 1]), 2, 1).is_err());
        assert!(schur(&p(&[1, 1, 1]), 2).is_err());
        assert!(lr_coefficient(&shape(&[&[1]]), &p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_golden_and_specialization() {
        let got = schur(&p(&[2, 1]), 2).unwrap();
        let want = &(&x(1) * &x(1)) * &x(2) + &x(1) * &(&x(2) * &x(2));
        assert_eq!(got, want);
        // the factorial polynomial at y = 0 is the ordinary one
        let fac = factorial_schur(&p(&[2, 1]), 2, 1).unwrap().zero_y_family(1);
        assert_eq!(fac, want);
    }

    /// (x_j + y_1) (x_j + y_2) ... (x_j + y_k)
    fn falling(j: u32, k: u32) -> Polynomial {
        let mut prod = Polynomial::one();
        for s in 1..=k {
            prod = &prod * &(x(j) + y(1, s));
        }
        prod
    }

    #[test]
    fn bialternant_identity() {
        // row i, column j holds the generalized power with exponent
        // lambda_i + n - i; dividing by the Vandermonde gives the factorial
        // polynomial, so multiplying the polynomial by the Vandermonde must
        // reproduce the determinant
        for lam in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2])] {
            for n in [2usize, 3] {
                if !lam.fits_rows(n) {
                    continue;
                }
                let rows: Vec<Vec<Polynomial>> = (1..=n)
                    .map(|i| {
                        let k = lam.part(i) + (n - i) as u32;
                        (1..=n).map(|j| falling(j as u32, k)).collect()
                    })
                    .collect();
                let numerator = det(&rows);
                let vandermonde = alternant(&rho(n), n).unwrap();
                let fac = factorial_schur(&lam, n, 1).unwrap();
                assert_eq!(&vandermonde * &fac, numerator, "lambda {lam} n={n}");
            }
        }
    }

    #[test]
    fn symmetric_in_x() {
        let f = factorial_schur(&p(&[2, 1]), 3, 1).unwrap();
        assert_eq!(f.permute_x(&[2, 1, 3]), f);
        assert_eq!(f.permute_x(&[3, 1, 2]), f);
    }

    #[test]
    fn two_diagram_coefficient_golden() {
        // shape ((2,1),(1,1)), n = 2, mu = (2,2)
        let sh = shape(&[&[2, 1], &[1, 1]]);
        let got = lr_coefficient(&sh, &p(&[2, 2]), 2).unwrap();
        let want = y(1, 1) + y(1, 2) + y(1, 3) + y(2, 1);
        assert_eq!(got, want);
        let tabs = enumerate_lr_tableaux(&sh, &p(&[2, 2]), 2).unwrap();
        assert_eq!(tabs.len(), 4);
        for t in &tabs {
            assert!(crate::tableau::is_yamanouchi(&t.unbarred_column_word()));
            assert_eq!(t.unbarred_content(2), vec![2, 2]);
        }
        // the four weights are exactly the four terms
        let mut weights: Vec<Polynomial> = tabs.iter().map(|t| t.weight()).collect();
        weights.sort_by_key(|w| w.to_string());
        let mut expect = vec![y(1, 1), y(1, 2), y(1, 3), y(2, 1)];
        expect.sort_by_key(|w| w.to_string());
        assert_eq!(weights, expect);
    }

    #[test]
    fn expansion_matches_oracle_small() {
        for (sh, n) in [
            (shape(&[&[1], &[1]]), 2),
            (shape(&[&[2, 1], &[1, 1]]), 2),
            (shape(&[&[2, 2]]), 3),
            (shape(&[&[1], &[1], &[1]]), 2),
        ] {
            let combinatorial = lr_expand(&sh, n).unwrap();
            let alternants = oracle_expand(&sh, n).unwrap();
            assert_eq!(combinatorial, alternants, "shape {sh} n={n}");
        }
    }

    #[test]
    fn coefficient_matches_oracle_pointwise() {
        let sh = shape(&[&[2, 1], &[1, 1]]);
        for mu in [p(&[2, 2]), p(&[3, 2]), p(&[5]), p(&[4, 1])] {
            let a = lr_coefficient(&sh, &mu, 2).unwrap();
            let b = oracle_coefficient(&sh, &mu, 2).unwrap();
            assert_eq!(a, b, "mu {mu}");
        }
    }

    #[test]
    fn reconstruction_identity() {
        // the weighted expansion rebuilds the product of factorial Schur
        // polynomials against ordinary Schur polynomials of x
        for (sh, n) in [(shape(&[&[2, 1], &[1, 1]]), 2), (shape(&[&[1], &[1], &[1]]), 2)] {
            let table = lr_expand(&sh, n).unwrap();
            let mut rebuilt = Polynomial::zero();
            for (mu, coeff) in table.iter() {
                rebuilt = rebuilt + &schur(mu, n).unwrap() * coeff;
            }
            assert_eq!(rebuilt, product_factorial_schur(&sh, n).unwrap(), "shape {sh}");
        }
    }

    #[test]
    fn classical_specialization() {
        // with every shifted variable at zero only bar-free fillings count
        let sh = shape(&[&[2, 1], &[2, 1]]);
        let mu = p(&[3, 2, 1]);
        let coeff = lr_coefficient(&sh, &mu, 3).unwrap();
        let classical = coeff.zero_y_family(1).zero_y_family(2);
        assert_eq!(classical, Polynomial::constant(2));
        assert_eq!(classical_lr_count(&sh, &mu, 3).unwrap(), 2);
    }

    #[test]
    fn classical_table_matches_counts() {
        let sh = shape(&[&[2, 1], &[2, 1]]);
        let table = lr_expand(&sh, 3).unwrap();
        for (mu, coeff) in table.iter() {
            let at_zero = coeff.zero_y_family(1).zero_y_family(2);
            let count = classical_lr_count(&sh, mu, 3).unwrap();
            assert_eq!(at_zero, Polynomial::constant(BigInt::from(count)), "mu {mu}");
        }
    }

    #[test]
    fn impossible_content_is_zero() {
        let sh = shape(&[&[1]]);
        assert!(lr_coefficient(&sh, &p(&[7]), 2).unwrap().is_zero());
        assert!(enumerate_lr_tableaux(&sh, &p(&[7]), 2).unwrap().is_empty());
    }

    #[test]
    fn table_json_round_trip() {
        let table = lr_expand(&shape(&[&[2, 1], &[1, 1]]), 2).unwrap();
        let back = CoeffTable::from_json(&table.to_json()).unwrap();
        assert_eq!(back, table);
    }

    #[test]
    fn table_text_goldens() {
        let sh = shape(&[&[2, 1], &[1, 1]]);
        let table = lr_expand(&sh, 2).unwrap();
        let latex = table.to_latex();
        assert!(
            latex.contains("c^{(2,2)} = y^{(1)}_{1} + y^{(1)}_{2} + y^{(1)}_{3} + y^{(2)}_{1}"),
            "latex was:\n{latex}"
        );
        let plain = table.to_plain();
        assert!(plain.contains("c(2,2) = y1_1 + y1_2 + y1_3 + y2_1"), "plain was:\n{plain}");
    }
}
