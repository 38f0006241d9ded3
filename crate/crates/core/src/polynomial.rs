//! Multivariate integer polynomials in the panel parameters `q_0, …, q_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

/// A polynomial `Σ c·∏ q_i^{e_i}` with integer coefficients, stored in the
/// monomial basis so that equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

/// One term of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub exps: Vec<u32>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub monomials: Vec<Monomial>,
}

impl CountPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `q_i`.
    pub fn q(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, 1);
        p
    }

    /// `q_i − 1`.
    pub fn q_minus_one(nvars: usize, i: usize) -> Self {
        Self::q(nvars, i) + Self::constant(nvars, -1)
    }

    /// `∏_j q_{word_j}`.
    pub fn product_of_q(nvars: usize, word: &[u8]) -> Self {
        let mut e = vec![0; nvars];
        for &i in word {
            e[i as usize] += 1;
        }
        let mut p = Self::zero(nvars);
        p.add_term(e, 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q_i`.
    pub fn mul_q(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e = e.clone();
                e[i] += 1;
                (e, c)
            })
            .collect();
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    /// Evaluate at `q_i = values[i]`.
    pub fn evaluate(&self, values: &[i64]) -> i128 {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        self.terms
            .iter()
            .map(|(e, &c)| {
                e.iter()
                    .zip(values)
                    .fold(c as i128, |acc, (&k, &v)| acc * (v as i128).pow(k))
            })
            .sum()
    }

    /// Evaluate with every `q_i = q`.
    pub fn evaluate_uniform(&self, q: i64) -> i128 {
        self.evaluate(&vec![q; self.nvars])
    }

    /// Rewrite in the variables `u_i = q_i − 1`. The result has nonnegative
    /// coefficients whenever `self` counts labelings.
    pub fn in_shifted_basis(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            // ∏ (u_i + 1)^{e_i} = ∏ Σ_k C(e_i, k) u_i^k
            let mut partial: Vec<(Vec<u32>, i64)> = vec![(vec![0; self.nvars], c)];
            for (i, &ei) in e.iter().enumerate() {
                let mut next = Vec::with_capacity(partial.len() * (ei as usize + 1));
                for (pe, pc) in &partial {
                    let mut binom = 1i64;
                    for k in 0..=ei {
                        let mut ne = pe.clone();
                        ne[i] = k;
                        next.push((ne, pc * binom));
                        binom = binom * (ei - k) as i64 / (k + 1) as i64;
                    }
                }
                partial = next;
            }
            for (pe, pc) in partial {
                out.add_term(pe, pc);
            }
        }
        out
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            monomials: self
                .terms
                .iter()
                .rev()
                .map(|(e, &c)| Monomial {
                    exps: e.clone(),
                    coeff: c,
                })
                .collect(),
        }
    }

    pub fn from_json(nvars: usize, json: &PolynomialJson) -> Self {
        let mut p = Self::zero(nvars);
        for m in &json.monomials {
            p.add_term(m.exps.clone(), m.coeff);
        }
        p
    }
}

impl Add for CountPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl AddAssign<&CountPolynomial> for CountPolynomial {
    fn add_assign(&mut self, rhs: &CountPolynomial) {
        debug_assert_eq!(self.nvars, rhs.nvars);
        for (e, &c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl Mul for &CountPolynomial {
    type Output = CountPolynomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &CountPolynomial) -> CountPolynomial {
        let mut out = CountPolynomial::zero(self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Highest total degree first, written as `3*q0^2*q1 - q2 + 1`.
impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Vec<u32>, i64)> = self.terms.iter().map(|(e, &c)| (e, c)).collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("q{i}")
                    } else {
                        format!("q{i}^{p}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_evaluation() {
        let q0 = CountPolynomial::q(2, 0);
        let u1 = CountPolynomial::q_minus_one(2, 1);
        let p = &q0 * &u1;
        assert_eq!(p.evaluate(&[3, 5]), 12);
        assert_eq!(p.to_string(), "q0*q1 - q0");
        let sum = p.clone() + CountPolynomial::q(2, 0);
        assert_eq!(sum, CountPolynomial::product_of_q(2, &[0, 1]));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p =
            CountPolynomial::q(1, 0) + CountPolynomial::constant(1, -1) + CountPolynomial::one(1);
        assert_eq!(p, CountPolynomial::q(1, 0));
        let z = CountPolynomial::one(1) + CountPolynomial::constant(1, -1);
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn shifted_basis() {
        // q^2 = u^2 + 2u + 1
        let p = CountPolynomial::product_of_q(1, &[0, 0]);
        let s = p.in_shifted_basis();
        assert_eq!(s.coefficient(&[2]), 1);
        assert_eq!(s.coefficient(&[1]), 2);
        assert_eq!(s.coefficient(&[0]), 1);
        // q(q-1) = u^2 + u
        let r = &CountPolynomial::q(1, 0) * &CountPolynomial::q_minus_one(1, 0);
        let rs = r.in_shifted_basis();
        assert_eq!(rs.terms().count(), 2);
        assert!(rs.terms().all(|(_, c)| c > 0));
    }

    #[test]
    fn json_round_trip() {
        let p = &CountPolynomial::q(3, 2) * &CountPolynomial::q_minus_one(3, 0);
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let back: PolynomialJson = serde_json::from_str(&json).unwrap();
        assert_eq!(CountPolynomial::from_json(3, &back), p);
    }

    #[test]
    fn display_of_constants_and_powers() {
        assert_eq!(CountPolynomial::constant(2, 7).to_string(), "7");
        let p = &CountPolynomial::product_of_q(2, &[1, 1, 0]) * &CountPolynomial::constant(2, 3);
        assert_eq!(p.to_string(), "3*q0*q1^2");
    }
}
