use std::collections::BTreeMap;
use std::fmt;

use num::{BigUint, One};

use super::algebra::{Generator, LadderExpr, Monomial};
use crate::amplitude::Amplitude;
use crate::error::{Error, Result};
use crate::rational::{from_u64, Rational};

/// `|N m>` of the two-dimensional oscillator, with `n_a = (N-m)/2` and
/// `n_b = (N+m)/2` quanta in the circular modes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockState2D {
    level: u64,
    m: i64,
}

impl FockState2D {
    pub fn new(level: u64, m: i64) -> Result<Self> {
        let n = level as i64;
        if m.abs() > n || (n - m) % 2 != 0 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "N={level}, m={m}: need |m| <= N and N-m even"
            )));
        }
        Ok(FockState2D { level, m })
    }

    pub fn from_occupations(n_a: u64, n_b: u64) -> Self {
        FockState2D { level: n_a + n_b, m: n_b as i64 - n_a as i64 }
    }

    pub fn vacuum() -> Self {
        FockState2D { level: 0, m: 0 }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n_a(&self) -> u64 {
        ((self.level as i64 - self.m) / 2) as u64
    }

    pub fn n_b(&self) -> u64 {
        ((self.level as i64 + self.m) / 2) as u64
    }

    /// All valid `m` at level `N`: `-N, -N+2, ..., N`.
    pub fn all_at_level(level: u64) -> impl Iterator<Item = FockState2D> {
        (0..=level).map(move |n_b| FockState2D::from_occupations(level - n_b, n_b))
    }
}

impl fmt::Display for FockState2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|N={}, m={}>", self.level, self.m)
    }
}

/// Result of acting on a basis state: the unique target (if any) and the amplitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub target: Option<FockState2D>,
    pub amplitude: Amplitude,
}

impl Transition {
    fn annihilated() -> Self {
        Transition { target: None, amplitude: Amplitude::zero() }
    }
}

pub fn apply_generator(g: Generator, s: FockState2D) -> Transition {
    let (n_a, n_b) = (s.n_a(), s.n_b());
    let (target, square) = match g {
        Generator::A if n_a == 0 => return Transition::annihilated(),
        Generator::B if n_b == 0 => return Transition::annihilated(),
        Generator::A => (FockState2D::from_occupations(n_a - 1, n_b), n_a),
        Generator::B => (FockState2D::from_occupations(n_a, n_b - 1), n_b),
        Generator::ADag => (FockState2D::from_occupations(n_a + 1, n_b), n_a + 1),
        Generator::BDag => (FockState2D::from_occupations(n_a, n_b + 1), n_b + 1),
    };
    Transition { target: Some(target), amplitude: Amplitude::sqrt(from_u64(square)) }
}

/// Applies the word right to left and multiplies in the coefficient.
pub fn apply_monomial(mono: &Monomial, s: FockState2D) -> Transition {
    let mut state = s;
    let mut amplitude = Amplitude::from_rational(&mono.coefficient);
    for &g in mono.word.iter().rev() {
        if amplitude.is_zero() {
            return Transition::annihilated();
        }
        let step = apply_generator(g, state);
        let Some(next) = step.target else {
            return Transition::annihilated();
        };
        state = next;
        amplitude = &amplitude * &step.amplitude;
    }
    if amplitude.is_zero() {
        return Transition::annihilated();
    }
    Transition { target: Some(state), amplitude }
}

/// `expr |ket>` grouped by target state, each group summed exactly.
pub fn transitions(expr: &LadderExpr, ket: FockState2D) -> Result<BTreeMap<FockState2D, Amplitude>> {
    let mut grouped: BTreeMap<FockState2D, Vec<Amplitude>> = BTreeMap::new();
    for mono in &expr.terms {
        let t = apply_monomial(mono, ket);
        if let Some(target) = t.target {
            grouped.entry(target).or_default().push(t.amplitude);
        }
    }
    let mut out = BTreeMap::new();
    for (target, amps) in grouped {
        let sum = Amplitude::try_sum(&amps)
            .map_err(|e| Error::IncompatibleRadical(format!("{ket} -> {target}: {e}")))?;
        if !sum.is_zero() {
            out.insert(target, sum);
        }
    }
    Ok(out)
}

pub fn matrix_element(expr: &LadderExpr, bra: FockState2D, ket: FockState2D) -> Result<Amplitude> {
    let amps: Vec<Amplitude> = expr
        .terms
        .iter()
        .map(|mono| apply_monomial(mono, ket))
        .filter(|t| t.target == Some(bra))
        .map(|t| t.amplitude)
        .collect();
    Amplitude::try_sum(&amps)
}

/// `|<bra|expr|ket>|^2`, exact.
pub fn matrix_element_squared(expr: &LadderExpr, bra: FockState2D, ket: FockState2D) -> Result<Rational> {
    Ok(matrix_element(expr, bra, ket)?.square().clone())
}

/// `<s|expr|s>`, which is rational for every operator built from the ladder algebra.
pub fn expectation(expr: &LadderExpr, s: FockState2D) -> Result<Rational> {
    let amp = matrix_element(expr, s, s)?;
    amp.to_rational()
        .ok_or_else(|| Error::IncompatibleRadical(format!("diagonal element {amp} on {s} is irrational")))
}

/// Construction of `|N m>` from the vacuum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltState {
    pub state: FockState2D,
    /// Squared amplitude of the bare product `(a+)^{n_a} (b+)^{n_b} |0 0>`: `n_a! n_b!`.
    pub raw_square: Rational,
    /// Amplitude after dividing by `sqrt(n_a! n_b!)`.
    pub amplitude: Amplitude,
}

pub fn build_state(level: u64, m: i64) -> Result<BuiltState> {
    let target = FockState2D::new(level, m)?;
    let mut word = vec![Generator::ADag; target.n_a() as usize];
    word.extend(std::iter::repeat(Generator::BDag).take(target.n_b() as usize));
    let t = apply_monomial(&Monomial::new(Rational::one(), word), FockState2D::vacuum());
    let state = t.target.expect("creation never annihilates");
    let norm = Rational::from_integer((factorial(target.n_a()) * factorial(target.n_b())).into());
    let amplitude = Amplitude::new(t.amplitude.sign(), t.amplitude.square() / &norm);
    Ok(BuiltState { state, raw_square: t.amplitude.square().clone(), amplitude })
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::Generator::*;
    use super::*;
    use crate::rational::int;

    fn st(level: u64, m: i64) -> FockState2D {
        FockState2D::new(level, m).unwrap()
    }

    #[test]
    fn validity() {
        assert!(FockState2D::new(3, 2).is_err());
        assert!(FockState2D::new(2, 4).is_err());
        assert_eq!(st(3, -1).n_a(), 2);
        assert_eq!(FockState2D::all_at_level(4).count(), 5);
    }

    #[test]
    fn generator_actions() {
        let t = apply_generator(A, st(0, 0));
        assert!(t.target.is_none() && t.amplitude.is_zero());
        let t = apply_generator(BDag, st(0, 0));
        assert_eq!(t.target, Some(st(1, 1)));
        assert_eq!(t.amplitude.square(), &int(1));
        let t = apply_generator(A, st(2, 0));
        assert_eq!(t.target, Some(st(1, 1)));
        assert_eq!(t.amplitude.square(), &int(1));
        let t = apply_generator(ADag, st(3, 1));
        assert_eq!(t.target, Some(st(4, 0)));
        assert_eq!(t.amplitude.square(), &int(2));
    }

    #[test]
    fn number_like_monomials() {
        let t = apply_monomial(&Monomial::new(int(1), vec![ADag, A]), st(5, 1));
        assert_eq!(t.target, Some(st(5, 1)));
        assert_eq!(t.amplitude.to_rational(), Some(int(2)));
        let t = apply_monomial(&Monomial::new(int(1), vec![BDag, B]), st(4, 2));
        assert_eq!(t.amplitude.to_rational(), Some(int(3)));
        let t = apply_monomial(&Monomial::new(int(1), vec![A, ADag]), st(5, 1));
        assert_eq!(t.amplitude.to_rational(), Some(int(3)));
    }

    #[test]
    fn built_states_are_normalized() {
        assert_eq!(build_state(0, 0).unwrap().amplitude, Amplitude::one());
        let b = build_state(1, 1).unwrap();
        assert_eq!(b.raw_square, int(1));
        let b = build_state(2, 0).unwrap();
        assert_eq!(b.raw_square, int(1));
        let b = build_state(6, 0).unwrap();
        assert_eq!(b.raw_square, int(36));
        assert_eq!(b.amplitude, Amplitude::one());
        for level in 0..10 {
            for s in FockState2D::all_at_level(level) {
                let b = build_state(level, s.m()).unwrap();
                assert_eq!(b.state, s);
                assert_eq!(b.amplitude, Amplitude::one());
            }
        }
    }
}
