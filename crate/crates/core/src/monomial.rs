//! Monomials with cached weighted degree and the graded reverse
//! lexicographic order. The order is fixed globally; module terms are
//! compared term-over-position with twisted-degree priority.

use std::cmp::Ordering;

/// Exponent vector with cached weighted total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: i64,
}

impl Monomial {
    pub fn new(exps: Vec<u32>, weights: &[u32]) -> Monomial {
        assert_eq!(exps.len(), weights.len());
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(i: usize, weights: &[u32]) -> Monomial {
        let mut exps = vec![0; weights.len()];
        exps[i] = 1;
        Monomial { exps, deg: weights[i] as i64 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> i64 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(&a, &b)| a - b).collect();
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Vec<u32> =
            self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial::new(exps, weights)
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a.min(b) == 0)
    }

    /// Graded reverse lexicographic comparison: first by weighted degree,
    /// ties broken by the last differing exponent, smaller exponent winning.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.grevlex_cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.grevlex_cmp(other)
    }
}

/// All monomials of exact weighted degree `d`.
pub fn monomials_of_degree(weights: &[u32], d: i64) -> Vec<Monomial> {
    let mut out = vec![];
    if d < 0 {
        return out;
    }
    let mut exps = vec![0u32; weights.len()];
    fill(weights, 0, d, &mut exps, &mut out);
    // descending grevlex for deterministic bases (leading monomial first)
    out.sort_by(|a, b| b.grevlex_cmp(a));
    out
}

fn fill(weights: &[u32], i: usize, rem: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == weights.len() {
        if rem == 0 {
            out.push(Monomial::new(exps.clone(), weights));
        }
        return;
    }
    if weights[i] == 0 {
        // weight-0 variables are rejected at ring construction
        unreachable!("zero weight");
    }
    let maxe = rem / weights[i] as i64;
    for e in 0..=maxe {
        exps[i] = e as u32;
        fill(weights, i + 1, rem - e * weights[i] as i64, exps, out);
    }
    exps[i] = 0;
}

/// A term position in a free module: component index plus monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModTerm {
    pub component: usize,
    pub monomial: Monomial,
}

/// Term-over-position order with twisted-degree priority: compare by
/// `deg(monomial) + twist(component)`, then grevlex on the monomial, then by
/// component (lower index larger). Compatible with multiplication.
pub fn module_cmp(a: &ModTerm, b: &ModTerm, twists: &[i64]) -> Ordering {
    let da = a.monomial.degree() + twists[a.component];
    let db = b.monomial.degree() + twists[b.component];
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    match a.monomial.grevlex_cmp(&b.monomial) {
        Ordering::Equal => {}
        ord => return ord,
    }
    b.component.cmp(&a.component)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec(), &vec![1; exps.len()])
    }

    #[test]
    fn grevlex_degree_first() {
        assert_eq!(m(&[2, 0]).grevlex_cmp(&m(&[1, 0])), Ordering::Greater);
        assert_eq!(m(&[0, 1]).grevlex_cmp(&m(&[1, 0])), Ordering::Less);
        // x^2 > xy > y^2 in grevlex
        assert_eq!(m(&[2, 0]).grevlex_cmp(&m(&[1, 1])), Ordering::Greater);
        assert_eq!(m(&[1, 1]).grevlex_cmp(&m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn grevlex_classic_triple() {
        // x y^2 z vs x^2 z^2: same degree 4, last differing exponent decides
        let a = Monomial::new(vec![1, 2, 1], &[1, 1, 1]);
        let b = Monomial::new(vec![2, 0, 2], &[1, 1, 1]);
        assert_eq!(a.grevlex_cmp(&b), Ordering::Greater);
    }

    #[test]
    fn weighted_degree() {
        let m = Monomial::new(vec![1, 2], &[2, 3]);
        assert_eq!(m.degree(), 8);
    }

    #[test]
    fn division() {
        let a = m(&[1, 0]);
        let b = m(&[2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.div_into(&b).unwrap(), m(&[1, 1]));
        assert!(b.div_into(&a).is_none());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(&[1, 1], 3).len(), 4);
        assert_eq!(monomials_of_degree(&[1, 1, 1], 2).len(), 6);
        assert_eq!(monomials_of_degree(&[2, 3], 6).len(), 2); // x^3, y^2
        assert_eq!(monomials_of_degree(&[1, 1], -1).len(), 0);
    }
}
