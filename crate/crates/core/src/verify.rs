//! Exhaustive identity sweeps over bounded families of shapes.
//!
//! Each suite walks every multishape inside an envelope (total boxes, number
//! of diagrams, number of values) and checks one cluster of identities on
//! every filling, reporting the number of checks performed and any failures.
//! The involution and cancellation suites add a seeded random phase on
//! larger shapes than the exhaustive walk can afford.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basis::{
    c_coeff_det, complement, compose_via_classical, d_coeff_det, d_coeff_dual, d_coeff_tableau,
    e_expand, expand_factorial_in_schur, expand_schur_in_factorial, mat_identity, mat_mul,
    matrix_a, matrix_b, partition_to_index_set, rho_count, sub_partitions,
};
use crate::lr::{
    factorial_schur, lr_coefficient, lr_expand, oracle_expand, product_factorial_schur, rho,
    schur,
};
use crate::poly::{alternant, Monomial, Polynomial, VarId};
use crate::tableau::{
    enumerate_barred, is_yamanouchi, BarredEntry, BarredSkewTableau, MultiShape, Partition,
};

/// Outcome of one suite: how many checks ran and which ones failed.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub failures_total: u64,
}

impl SuiteReport {
    fn new(name: &str) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            checks: 0,
            failures: Vec::new(),
            failures_total: 0,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures_total == 0
    }

    fn check(&mut self, pass: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !pass {
            self.failures_total += 1;
            if self.failures.len() < 10 {
                self.failures.push(msg());
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "suite {}: {} checks, PASS", self.name, self.checks)
        } else {
            writeln!(
                f,
                "suite {}: {} checks, FAIL ({} failures)",
                self.name, self.checks, self.failures_total
            )?;
            for msg in &self.failures {
                writeln!(f, "  {msg}")?;
            }
            Ok(())
        }
    }
}

/// All partitions with at most `max_parts` parts and at most `max_size`
/// boxes, the empty one first, ordered by size then by first part.
pub fn partitions_up_to(max_size: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(left: u32, cap: u32, parts_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            return;
        }
        if parts_left == 0 {
            return;
        }
        for v in (1..=cap.min(left)).rev() {
            cur.push(v);
            rec(left - v, v, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=max_size {
        rec(size, size.max(1), max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// All multishapes with 1..=max_diagrams nonempty diagrams, each with at
/// most `max_rows` rows, and at most `max_boxes` boxes in total.
pub fn multishapes(max_boxes: u32, max_diagrams: usize, max_rows: usize) -> Vec<MultiShape> {
    let pool: Vec<Partition> = partitions_up_to(max_boxes, max_rows)
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    fn rec(
        pool: &[Partition],
        left: u32,
        slots: usize,
        cur: &mut Vec<Partition>,
        out: &mut Vec<MultiShape>,
    ) {
        if !cur.is_empty() {
            out.push(MultiShape::new(cur.clone()));
        }
        if slots == 0 {
            return;
        }
        for p in pool {
            if p.size() <= left {
                cur.push(p.clone());
                rec(pool, left - p.size(), slots - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&pool, max_boxes, max_diagrams, &mut Vec::new(), &mut out);
    out
}

/// A filling drawn cell by cell, uniform over the locally admissible
/// (value, bar) choices; any valid filling has positive probability.
pub fn random_tableau(shape: &MultiShape, n: u32, rng: &mut impl Rng) -> BarredSkewTableau {
    let mut rows: Vec<Vec<Vec<BarredEntry>>> = Vec::new();
    for part in shape.diagrams() {
        let conj = part.conjugate();
        let mut dr: Vec<Vec<BarredEntry>> = Vec::new();
        for r in 0..part.len() {
            let mut row: Vec<BarredEntry> = Vec::new();
            for c in 0..part.part(r + 1) as usize {
                let mut lo = 1;
                if c > 0 {
                    lo = lo.max(row[c - 1].value);
                }
                if r > 0 {
                    lo = lo.max(dr[r - 1][c].value + 1);
                }
                // leave room for the strictly increasing column below
                let below = conj.part(c + 1) as usize - 1 - r;
                let hi = n - below as u32;
                assert!(lo <= hi, "shape does not fit {n} values");
                let value = rng.random_range(lo..=hi);
                let barred = rng.random_bool(0.5);
                row.push(BarredEntry { value, barred });
            }
            dr.push(row);
        }
        rows.push(dr);
    }
    BarredSkewTableau::new(shape.clone(), rows).expect("sampled filling is valid")
}

fn swap_adjacent(content: &[u32], i: u32) -> Vec<u32> {
    let mut out = content.to_vec();
    out.swap((i - 1) as usize, i as usize);
    out
}

/// Checks the value-swap involutions on every filling in the envelope:
/// validity, weight preservation, self-inverse, content transposition, and
/// decomposition independence of weight and content for words naming the
/// same permutation, then a seeded random phase on larger shapes.
pub fn involution_suite(
    max_boxes: u32,
    max_diagrams: usize,
    max_n: usize,
    seed: u64,
) -> SuiteReport {
    let mut report = SuiteReport::new("involutions");
    for n in 2..=max_n {
        for shape in multishapes(max_boxes, max_diagrams, n) {
            for t in enumerate_barred(&shape, n as u32) {
                involution_checks(&mut report, &t, n as u32);
            }
        }
    }
    // words for the same permutation give the same weight and content,
    // though not always the same filling; pairs whose equality reduces to
    // self-inverseness or to swaps with disjoint values agree cell by cell
    let equal_fillings: &[(&[u32], &[u32], u32)] = &[
        (&[1], &[1, 1, 1], 2),
        (&[], &[1, 1], 2),
        (&[], &[2, 2], 3),
        (&[1, 3], &[3, 1], 4),
    ];
    let equal_weight_content: &[(&[u32], &[u32], u32)] =
        &[(&[1, 2, 1], &[2, 1, 2], 3), (&[1, 2, 1, 3], &[2, 1, 2, 3], 4)];
    for &(wa, wb, min_n) in equal_fillings {
        let n = (min_n as usize).max(2);
        for shape in multishapes(max_boxes.min(4), max_diagrams.min(2), n) {
            for t in enumerate_barred(&shape, n as u32) {
                let a = t.apply_permutation(wa, n as u32).unwrap();
                let b = t.apply_permutation(wb, n as u32).unwrap();
                report.check(a == b, || {
                    format!("words {wa:?} and {wb:?} disagree on a filling of {shape}")
                });
            }
        }
    }
    for &(wa, wb, min_n) in equal_weight_content {
        let n = (min_n as usize).max(2);
        for shape in multishapes(max_boxes.min(4), max_diagrams.min(2), n) {
            for t in enumerate_barred(&shape, n as u32) {
                let a = t.apply_permutation(wa, n as u32).unwrap();
                let b = t.apply_permutation(wb, n as u32).unwrap();
                report.check(a.weight() == b.weight(), || {
                    format!("words {wa:?} and {wb:?} give different weights on a filling of {shape}")
                });
                report.check(
                    a.unbarred_content(n) == b.unbarred_content(n),
                    || {
                        format!(
                            "words {wa:?} and {wb:?} give different contents on a filling of {shape}"
                        )
                    },
                );
            }
        }
    }
    // random phase: bigger shapes than the exhaustive walk can afford
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = partitions_up_to(5, 4);
    for _ in 0..300 {
        let n = rng.random_range(2..=4u32);
        let r = rng.random_range(1..=3usize);
        let diagrams: Vec<Partition> = (0..r)
            .map(|_| loop {
                let p = &pool[rng.random_range(0..pool.len())];
                if !p.is_empty() && p.fits_rows(n as usize) {
                    break p.clone();
                }
            })
            .collect();
        let shape = MultiShape::new(diagrams);
        let t = random_tableau(&shape, n, &mut rng);
        involution_checks(&mut report, &t, n);
    }
    report
}

fn involution_checks(report: &mut SuiteReport, t: &BarredSkewTableau, n: u32) {
    for i in 1..n {
        let u = match t.bender_knuth(i, n) {
            Ok(u) => u,
            Err(e) => {
                report.check(false, || format!("swap {i} failed: {e}"));
                continue;
            }
        };
        report.check(u.check().is_ok(), || {
            format!("swap {i} broke a filling of {}", t.shape())
        });
        report.check(u.weight() == t.weight(), || {
            format!("swap {i} changed the weight on {}", t.shape())
        });
        report.check(
            u.unbarred_content(n as usize) == swap_adjacent(&t.unbarred_content(n as usize), i),
            || format!("swap {i} did not transpose the content on {}", t.shape()),
        );
        report.check(u.bender_knuth(i, n).unwrap() == *t, || {
            format!("swap {i} is not an involution on {}", t.shape())
        });
    }
}

/// Checks the pairing that cancels non-Yamanouchi fillings: it is a
/// weight-preserving involution, it flips the sign of the shifted alternant,
/// and the signed sum over the cancelled fillings vanishes shape by shape.
pub fn cancellation_suite(
    max_boxes: u32,
    max_diagrams: usize,
    max_n: usize,
    seed: u64,
) -> SuiteReport {
    let mut report = SuiteReport::new("cancellation");
    for n in 1..=max_n {
        let staircase = rho(n);
        let mut alternants: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        for shape in multishapes(max_boxes, max_diagrams, n) {
            let mut signed_sum = Polynomial::zero();
            for t in enumerate_barred(&shape, n as u32) {
                let word = t.unbarred_column_word();
                let partner = t.bad_guy_pair(n);
                if is_yamanouchi(&word) {
                    report.check(partner.is_none(), || {
                        format!("Yamanouchi filling of {shape} was paired")
                    });
                    continue;
                }
                let partner = match partner {
                    Some(p) => p,
                    None => {
                        report.check(false, || {
                            format!("non-Yamanouchi filling of {shape} has no partner")
                        });
                        continue;
                    }
                };
                report.check(partner.check().is_ok(), || {
                    format!("partner is not a valid filling of {shape}")
                });
                report.check(partner.weight() == t.weight(), || {
                    format!("pairing changed the weight on {shape}")
                });
                report.check(
                    partner.bad_guy_pair(n).as_ref() == Some(&t),
                    || format!("pairing is not an involution on {shape}"),
                );
                let a_t = shifted_alternant(&t, &staircase, n, &mut alternants);
                let a_p = shifted_alternant(&partner, &staircase, n, &mut alternants);
                report.check(a_p == -&a_t, || {
                    format!("pairing did not flip the alternant sign on {shape}")
                });
                if partner == t {
                    report.check(a_t.is_zero(), || {
                        format!("fixed point with a nonzero alternant on {shape}")
                    });
                }
                signed_sum = signed_sum + t.weight().mul(&a_t);
            }
            report.check(signed_sum.is_zero(), || {
                format!("cancelled fillings of {shape} do not sum to zero")
            });
        }
    }
    // random phase on larger shapes: pairing properties only
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = partitions_up_to(5, 3);
    for _ in 0..300 {
        let n = rng.random_range(2..=3usize);
        let r = rng.random_range(1..=3usize);
        let diagrams: Vec<Partition> = (0..r)
            .map(|_| loop {
                let p = &pool[rng.random_range(0..pool.len())];
                if !p.is_empty() && p.fits_rows(n) {
                    break p.clone();
                }
            })
            .collect();
        let shape = MultiShape::new(diagrams);
        let t = random_tableau(&shape, n as u32, &mut rng);
        if let Some(partner) = t.bad_guy_pair(n) {
            report.check(partner.weight() == t.weight(), || {
                format!("random phase: pairing changed the weight on {shape}")
            });
            report.check(partner.bad_guy_pair(n).as_ref() == Some(&t), || {
                format!("random phase: pairing is not an involution on {shape}")
            });
        } else {
            report.check(is_yamanouchi(&t.unbarred_column_word()), || {
                format!("random phase: unpaired filling of {shape} is not Yamanouchi")
            });
        }
    }
    report
}

fn shifted_alternant(
    t: &BarredSkewTableau,
    staircase: &[u32],
    n: usize,
    cache: &mut BTreeMap<Vec<u32>, Polynomial>,
) -> Polynomial {
    let exps: Vec<u32> = t
        .unbarred_content(n)
        .iter()
        .zip(staircase.iter())
        .map(|(a, b)| a + b)
        .collect();
    cache
        .entry(exps.clone())
        .or_insert_with(|| alternant(&exps, n).expect("content has length n"))
        .clone()
}

/// Checks the two expansion identities over all barred fillings: grouping by
/// unbarred content reproduces the product of factorial Schur polynomials,
/// and the same grouping against shifted alternants reproduces the product
/// times the Vandermonde alternant.
pub fn lemma3_suite(max_boxes: u32, max_diagrams: usize, max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("lemma3");
    for n in 1..=max_n {
        let staircase = rho(n);
        let vandermonde = alternant(&staircase, n).expect("staircase has length n");
        for shape in multishapes(max_boxes, max_diagrams, n) {
            // weight sums grouped by unbarred content
            let mut groups: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
            for t in enumerate_barred(&shape, n as u32) {
                let entry = groups
                    .entry(t.unbarred_content(n))
                    .or_insert_with(Polynomial::zero);
                *entry = &*entry + &t.weight();
            }
            let product = product_factorial_schur(&shape, n).expect("diagrams fit n rows");
            let mut monomial_side = Polynomial::zero();
            let mut alternant_side = Polynomial::zero();
            for (content, wt) in &groups {
                let xs = Monomial::from_pairs(
                    content
                        .iter()
                        .enumerate()
                        .map(|(k, &e)| (VarId::x(k as u32 + 1), e)),
                );
                monomial_side = monomial_side + wt.mul_monomial(&xs);
                let exps: Vec<u32> = content
                    .iter()
                    .zip(staircase.iter())
                    .map(|(a, b)| a + b)
                    .collect();
                let shifted = alternant(&exps, n).expect("content has length n");
                alternant_side = alternant_side + wt.mul(&shifted);
            }
            report.check(monomial_side == product, || {
                format!("content expansion of {shape} misses the product at n={n}")
            });
            report.check(alternant_side == vandermonde.mul(&product), || {
                format!("alternant expansion of {shape} misses the product at n={n}")
            });
        }
    }
    report
}

/// Checks the main expansion shape by shape: the weighted Yamanouchi count
/// agrees with the alternant oracle for every coefficient at once.
pub fn theorem_suite(max_boxes: u32, max_diagrams: usize, max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("theorem");
    for n in 1..=max_n {
        for shape in multishapes(max_boxes, max_diagrams, n) {
            let combinatorial = lr_expand(&shape, n).expect("diagrams fit n rows");
            let oracle = oracle_expand(&shape, n).expect("diagrams fit n rows");
            report.check(combinatorial == oracle, || {
                format!("expansion of {shape} disagrees with the oracle at n={n}")
            });
        }
    }
    report
}

/// Checks the change-of-basis layer: the unitriangular matrix pair inverts,
/// determinants match the tableau rule and the rectangle duality, the c and
/// d transitions invert each other, and both reconstructions hold.
pub fn basis_suite(max_size: u32, max_n: usize, max_matrix: usize) -> SuiteReport {
    let mut report = SuiteReport::new("basis");
    for big in 1..=max_matrix {
        let a = matrix_a(big, 1);
        let b = matrix_b(big, 1);
        report.check(mat_mul(&a, &b) == mat_identity(big), || {
            format!("A B is not the identity at N={big}")
        });
        report.check(mat_mul(&b, &a) == mat_identity(big), || {
            format!("B A is not the identity at N={big}")
        });
    }
    for n in 1..=max_n {
        let pool: Vec<Partition> = partitions_up_to(max_size, n);
        for lam in &pool {
            let set = partition_to_index_set(lam, n).expect("fits n rows");
            let top = set.elems().last().copied().unwrap_or(0);
            report.check(rho_count(&set, top + 1) == lam.size() as u64, || {
                format!("index-set count of {lam} is not its size at n={n}")
            });
            let m = lam.first().max(1);
            let comp = complement(lam, n, m).expect("m covers the first part");
            let back = complement(&comp, m as usize, n as u32).expect("round trip fits");
            report.check(back == *lam, || {
                format!("complement round trip failed for {lam} at n={n}")
            });
            for mu in &pool {
                let c = c_coeff_det(lam, mu, n, 1).expect("fits n rows");
                let t =
                    lr_coefficient(&MultiShape::single(lam.clone()), mu, n).expect("fits n rows");
                report.check(c == t, || {
                    format!("c determinant and tableau rule disagree at {lam} / {mu}, n={n}")
                });
                let d = d_coeff_det(lam, mu, n, 1).expect("fits n rows");
                let dual = d_coeff_dual(lam, mu, n, None, 1).expect("default rectangle fits");
                report.check(d == dual, || {
                    format!("d determinant and duality disagree at {lam} / {mu}, n={n}")
                });
                let tab = d_coeff_tableau(lam, mu, n, None, 1).expect("default rectangle fits");
                report.check(d == tab, || {
                    format!("d determinant and dual tableau rule disagree at {lam} / {mu}, n={n}")
                });
                let mut folded = Polynomial::zero();
                for mid in sub_partitions(lam) {
                    let cc = c_coeff_det(lam, &mid, n, 1).expect("fits n rows");
                    let dd = d_coeff_det(&mid, mu, n, 1).expect("fits n rows");
                    folded = folded + &cc * &dd;
                }
                let delta = if lam == mu {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                };
                report.check(folded == delta, || {
                    format!("c and d do not invert at {lam} / {mu}, n={n}")
                });
            }
            // both reconstructions
            let through_c = expand_factorial_in_schur(lam, n, 1).expect("fits n rows");
            let mut rebuilt = Polynomial::zero();
            for (mu, coeff) in through_c.iter() {
                rebuilt = rebuilt + coeff * &schur(mu, n).expect("fits n rows");
            }
            report.check(
                rebuilt == factorial_schur(lam, n, 1).expect("fits n rows"),
                || format!("c expansion does not rebuild the factorial polynomial at {lam}, n={n}"),
            );
            let through_d = expand_schur_in_factorial(lam, n, 1).expect("fits n rows");
            let mut rebuilt = Polynomial::zero();
            for (mu, coeff) in through_d.iter() {
                rebuilt = rebuilt + coeff * &factorial_schur(mu, n, 1).expect("fits n rows");
            }
            report.check(rebuilt == schur(lam, n).expect("fits n rows"), || {
                format!("d expansion does not rebuild the Schur polynomial at {lam}, n={n}")
            });
        }
    }
    report
}

/// Checks the composed evaluation of two-diagram coefficients against the
/// direct rule, and the factorial-basis expansion of a product against the
/// product itself.
pub fn compose_suite(
    max_boxes: u32,
    max_n: usize,
    e_max_boxes: u32,
    e_max_n: usize,
) -> SuiteReport {
    let mut report = SuiteReport::new("compose");
    for n in 1..=max_n {
        for shape in multishapes(max_boxes, 2, n) {
            if shape.r() != 2 {
                continue;
            }
            let table = lr_expand(&shape, n).expect("diagrams fit n rows");
            for mu in partitions_up_to(shape.total_boxes(), n) {
                let composed = compose_via_classical(&shape, &mu, n).expect("two diagrams");
                report.check(composed == table.coefficient(&mu), || {
                    format!("composition disagrees at {shape} / {mu}, n={n}")
                });
            }
        }
    }
    for n in 1..=e_max_n {
        for shape in multishapes(e_max_boxes, 2, n) {
            let target = shape.r() as u32 + 1;
            let table = e_expand(&shape, n, target).expect("diagrams fit n rows");
            let mut rebuilt = Polynomial::zero();
            for (mu, coeff) in table.iter() {
                rebuilt = rebuilt + coeff * &factorial_schur(mu, n, target).expect("fits n rows");
            }
            let product = product_factorial_schur(&shape, n).expect("diagrams fit n rows");
            report.check(rebuilt == product, || {
                format!("factorial-basis expansion does not rebuild the product at {shape}, n={n}")
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_families() {
        // sizes 0..=3 with at most 2 parts: (), (1), (2), (1,1), (3), (2,1)
        let all = partitions_up_to(3, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Partition::empty());
        // 1-row partitions only
        assert_eq!(partitions_up_to(4, 1).len(), 5);
    }

    #[test]
    fn multishape_family_counts() {
        // r = 1: (1), (2), (1,1); r = 2: four pairs of total <= 2
        let shapes = multishapes(2, 2, 2);
        assert_eq!(shapes.len(), 3 + 1);
        let singles = multishapes(6, 1, 3);
        assert_eq!(singles.len(), 22);
    }

    #[test]
    fn random_fillings_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let shape = MultiShape::new(vec![
            Partition::new(vec![3, 1]).unwrap(),
            Partition::new(vec![2, 2]).unwrap(),
        ]);
        for _ in 0..50 {
            let t = random_tableau(&shape, 3, &mut rng);
            assert!(t.check().is_ok());
            assert!(t.max_value() <= 3);
        }
    }

    #[test]
    fn small_suites_pass() {
        for report in [
            involution_suite(3, 2, 3, 11),
            cancellation_suite(3, 2, 2, 11),
            lemma3_suite(3, 2, 2),
            theorem_suite(3, 2, 2),
            basis_suite(2, 2, 3),
            compose_suite(3, 2, 2, 2),
        ] {
            assert!(report.ok(), "{report}");
        }
    }

    #[test]
    fn report_formatting() {
        let mut r = SuiteReport::new("demo");
        r.check(true, || unreachable!());
        assert!(r.to_string().contains("PASS"));
        r.check(false, || "broken".to_string());
        assert!(!r.ok());
        assert!(r.to_string().contains("FAIL"));
        assert!(r.to_string().contains("broken"));
    }
}
