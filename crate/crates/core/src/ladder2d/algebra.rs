//! Formal words over the polar ladder generators and their normal ordering.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    ADag,
    B,
    BDag,
}

impl Generator {
    /// Change of `N` when the generator acts.
    pub fn delta_level(self) -> i64 {
        match self {
            Generator::A | Generator::B => -1,
            Generator::ADag | Generator::BDag => 1,
        }
    }

    /// Change of `m` when the generator acts.
    pub fn delta_m(self) -> i64 {
        match self {
            Generator::A | Generator::BDag => 1,
            Generator::ADag | Generator::B => -1,
        }
    }

    pub fn is_raising(self) -> bool {
        matches!(self, Generator::ADag | Generator::BDag)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::A => "a",
            Generator::ADag => "a+",
            Generator::B => "b",
            Generator::BDag => "b+",
        })
    }
}

/// Coefficient times an ordered product of generators; the rightmost acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: Rational,
    pub word: Vec<Generator>,
}

impl Monomial {
    pub fn new(coefficient: Rational, word: Vec<Generator>) -> Self {
        Monomial { coefficient, word }
    }

    pub fn delta_level(&self) -> i64 {
        self.word.iter().map(|g| g.delta_level()).sum()
    }

    pub fn delta_m(&self) -> i64 {
        self.word.iter().map(|g| g.delta_m()).sum()
    }

    pub fn raising_count(&self) -> usize {
        self.word.iter().filter(|g| g.is_raising()).count()
    }

    pub fn lowering_count(&self) -> usize {
        self.word.len() - self.raising_count()
    }
}

/// A formal sum of monomials, kept in the order written.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LadderExpr {
    pub terms: Vec<Monomial>,
}

impl LadderExpr {
    pub fn zero() -> Self {
        LadderExpr::default()
    }

    pub fn constant(value: Rational) -> Self {
        LadderExpr { terms: vec![Monomial::new(value, Vec::new())] }
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(1, &[g])
    }

    /// `coefficient * g_1 g_2 ... g_k`.
    pub fn word(coefficient: i64, word: &[Generator]) -> Self {
        LadderExpr { terms: vec![Monomial::new(rational::int(coefficient), word.to_vec())] }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        LadderExpr {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial::new(&t.coefficient * factor, t.word.clone()))
                .collect(),
        }
    }

    pub fn normal_order(&self) -> NormalOrdered {
        let mut out = NormalOrdered::zero();
        for term in &self.terms {
            let mut acc = NormalOrdered::constant(term.coefficient.clone());
            for &g in &term.word {
                acc = acc.times_generator(g);
            }
            out = out + acc;
        }
        out
    }
}

impl Add for LadderExpr {
    type Output = LadderExpr;
    fn add(mut self, rhs: LadderExpr) -> LadderExpr {
        self.terms.extend(rhs.terms);
        self
    }
}

impl Neg for LadderExpr {
    type Output = LadderExpr;
    fn neg(self) -> LadderExpr {
        self.scale(&rational::int(-1))
    }
}

impl Sub for LadderExpr {
    type Output = LadderExpr;
    fn sub(self, rhs: LadderExpr) -> LadderExpr {
        self + (-rhs)
    }
}

impl Mul for &LadderExpr {
    type Output = LadderExpr;
    fn mul(self, rhs: &LadderExpr) -> LadderExpr {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let mut word = a.word.clone();
                word.extend_from_slice(&b.word);
                terms.push(Monomial::new(&a.coefficient * &b.coefficient, word));
            }
        }
        LadderExpr { terms }
    }
}

impl Mul for LadderExpr {
    type Output = LadderExpr;
    fn mul(self, rhs: LadderExpr) -> LadderExpr {
        &self * &rhs
    }
}

/// Exponents `[i, j, k, l]` of `(a+)^i (b+)^j a^k b^l`.
pub type NormalKey = [u32; 4];

/// Canonical normal-ordered form: creators left of annihilators, `a` before
/// `b` within each group. Two expressions are equal as operators iff their
/// normal-ordered forms are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalOrdered {
    terms: BTreeMap<NormalKey, Rational>,
}

impl NormalOrdered {
    pub fn zero() -> Self {
        NormalOrdered::default()
    }

    pub fn constant(value: Rational) -> Self {
        let mut out = NormalOrdered::zero();
        out.insert([0, 0, 0, 0], value);
        out
    }

    fn insert(&mut self, key: NormalKey, value: Rational) {
        if value.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<NormalKey, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, key: NormalKey) -> Rational {
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Right-multiplication by one generator, using `a^k a+ = a+ a^k + k a^{k-1}`
    /// and the analogue for `b`.
    pub fn times_generator(&self, g: Generator) -> NormalOrdered {
        let mut out = NormalOrdered::zero();
        for (&[i, j, k, l], coef) in &self.terms {
            match g {
                Generator::A => out.insert([i, j, k + 1, l], coef.clone()),
                Generator::B => out.insert([i, j, k, l + 1], coef.clone()),
                Generator::ADag => {
                    out.insert([i + 1, j, k, l], coef.clone());
                    if k > 0 {
                        out.insert([i, j, k - 1, l], coef * rational::from_u64(u64::from(k)));
                    }
                }
                Generator::BDag => {
                    out.insert([i, j + 1, k, l], coef.clone());
                    if l > 0 {
                        out.insert([i, j, k, l - 1], coef * rational::from_u64(u64::from(l)));
                    }
                }
            }
        }
        out
    }

    /// Terms with as many creators as annihilators.
    pub fn level_conserving(&self) -> NormalOrdered {
        NormalOrdered {
            terms: self
                .terms
                .iter()
                .filter(|([i, j, k, l], _)| i + j == k + l)
                .map(|(key, c)| (*key, c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for NormalOrdered {
    type Output = NormalOrdered;
    fn add(mut self, rhs: NormalOrdered) -> NormalOrdered {
        for (key, value) in rhs.terms {
            self.insert(key, value);
        }
        self
    }
}

impl fmt::Display for NormalOrdered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["a+", "b+", "a", "b"];
        for (idx, (key, coef)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", rational::to_pq(coef))?;
            for (name, &p) in names.iter().zip(key.iter()) {
                match p {
                    0 => {}
                    1 => write!(f, " {name}")?,
                    _ => write!(f, " {name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

impl One for NormalOrdered {
    fn one() -> Self {
        NormalOrdered::constant(Rational::one())
    }
}

impl Mul for NormalOrdered {
    type Output = NormalOrdered;
    fn mul(self, rhs: NormalOrdered) -> NormalOrdered {
        let mut out = NormalOrdered::zero();
        for (&[i, j, k, l], c) in &rhs.terms {
            let mut word = Vec::new();
            word.extend(std::iter::repeat(Generator::ADag).take(i as usize));
            word.extend(std::iter::repeat(Generator::BDag).take(j as usize));
            word.extend(std::iter::repeat(Generator::A).take(k as usize));
            word.extend(std::iter::repeat(Generator::B).take(l as usize));
            let mut acc = self.clone();
            for g in word {
                acc = acc.times_generator(g);
            }
            for (key, v) in acc.terms {
                out.insert(key, v * c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::Generator::*;
    use super::*;
    use crate::rational::int;

    #[test]
    fn canonical_commutators() {
        // a a+ - a+ a = 1
        let comm = LadderExpr::word(1, &[A, ADag]) - LadderExpr::word(1, &[ADag, A]);
        assert_eq!(comm.normal_order(), NormalOrdered::constant(int(1)));
        let comm = LadderExpr::word(1, &[B, BDag]) - LadderExpr::word(1, &[BDag, B]);
        assert_eq!(comm.normal_order(), NormalOrdered::constant(int(1)));
        for (x, y) in [(A, B), (A, BDag), (ADag, B), (ADag, BDag)] {
            let comm = LadderExpr::word(1, &[x, y]) - LadderExpr::word(1, &[y, x]);
            assert!(comm.normal_order().is_zero(), "[{x},{y}]");
        }
    }

    #[test]
    fn number_operator_squared() {
        // (a+ a)^2 = a+^2 a^2 + a+ a
        let n = LadderExpr::word(1, &[ADag, A]);
        let sq = (&n * &n).normal_order();
        assert_eq!(sq.coefficient([2, 0, 2, 0]), int(1));
        assert_eq!(sq.coefficient([1, 0, 1, 0]), int(1));
        assert_eq!(sq.terms().len(), 2);
    }

    #[test]
    fn normal_product_matches_word_product() {
        let x = LadderExpr::word(2, &[A, B, ADag]) + LadderExpr::word(-1, &[BDag, B]);
        let y = LadderExpr::word(3, &[A, ADag, BDag]) + LadderExpr::constant(int(5));
        assert_eq!((&x * &y).normal_order(), x.normal_order() * y.normal_order());
    }

    #[test]
    fn bookkeeping() {
        let m = Monomial::new(int(1), vec![ADag, A, ADag, BDag]);
        assert_eq!(m.delta_level(), 2);
        assert_eq!(m.delta_m(), 0);
        assert_eq!(m.raising_count(), 3);
        assert_eq!(m.lowering_count(), 1);
    }
}
