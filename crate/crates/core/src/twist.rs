//! The twist recursion on weight-indexed Poincaré polynomials.
//!
//! A state is a vector `(P_0, …, P_j)` of polynomials in `a, q, s, t` with
//! nonnegative coefficients, `P_k` multiplying the weight-`k` basic web of the
//! current boundary configuration. A top twist sends `X_k` to a combination of
//! `X_h` with `h >= k`, a right twist to `h <= k`.

use crate::qsymbols::{quantum_binomial, ExponentVector, LaurentPoly4, Monomial, Variant};
use crate::tangle::{config_step, BoundaryConfig, TangleDesc, TwistMove};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Poincaré polynomial of a colored complex: configuration plus one
/// coefficient per weight `0..=j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexState {
    pub color_j: u32,
    pub config: BoundaryConfig,
    pub coeffs: Vec<LaurentPoly4>,
}

impl ComplexState {
    /// `X_0` with coefficient 1 in the given configuration.
    pub fn start(j: u32, config: BoundaryConfig) -> Self {
        let mut coeffs = vec![LaurentPoly4::zero(); j as usize + 1];
        coeffs[0] = LaurentPoly4::one();
        ComplexState { color_j: j, config, coeffs }
    }

    /// True iff every coefficient lies in `N[a±, q±, s±, t±]`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly4::all_nonnegative)
    }

    /// Divides every weight by `m`.
    pub fn unshift(&self, m: ExponentVector) -> Self {
        ComplexState {
            color_j: self.color_j,
            config: self.config,
            coeffs: self.coeffs.iter().map(|p| p.mul_monomial(m.inv())).collect(),
        }
    }

    /// Normalizes by the single monomial that normalizes the lowest nonzero
    /// weight; returns the state and the removed monomial.
    pub fn normalized(&self) -> (Self, ExponentVector) {
        let shift =
            self.coeffs.iter().find(|p| !p.is_zero()).map(|p| p.normalize_up_to_monomial().1).unwrap_or_default();
        (self.unshift(shift), shift)
    }

    pub fn to_json(&self, shift: ExponentVector) -> serde_json::Value {
        serde_json::json!({
            "config": self.config.name(),
            "j": self.color_j,
            "shift": shift,
            "weights": self.coeffs.iter().map(LaurentPoly4::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ComplexState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "config {}", self.config)?;
        for (k, p) in self.coeffs.iter().enumerate() {
            writeln!(f, "X_{k}: {p}")?;
        }
        Ok(())
    }
}

/// The twelve twist rules, named by move and source configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    TUP,
    TUPs,
    TOP,
    TOPs,
    TRI,
    TRIs,
    RUP,
    RUPs,
    ROP,
    ROPs,
    RRI,
    RRIs,
}

impl RuleId {
    pub const ALL: [RuleId; 12] = [
        Self::TUP,
        Self::TUPs,
        Self::TOP,
        Self::TOPs,
        Self::TRI,
        Self::TRIs,
        Self::RUP,
        Self::RUPs,
        Self::ROP,
        Self::ROPs,
        Self::RRI,
        Self::RRIs,
    ];

    pub fn of(config: BoundaryConfig, m: TwistMove) -> Self {
        use BoundaryConfig::*;
        match (m, config) {
            (TwistMove::Top, UP) => Self::TUP,
            (TwistMove::Top, UPs) => Self::TUPs,
            (TwistMove::Top, OP) => Self::TOP,
            (TwistMove::Top, OPs) => Self::TOPs,
            (TwistMove::Top, RI) => Self::TRI,
            (TwistMove::Top, RIs) => Self::TRIs,
            (TwistMove::Right, UP) => Self::RUP,
            (TwistMove::Right, UPs) => Self::RUPs,
            (TwistMove::Right, OP) => Self::ROP,
            (TwistMove::Right, OPs) => Self::ROPs,
            (TwistMove::Right, RI) => Self::RRI,
            (TwistMove::Right, RIs) => Self::RRIs,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, Self::TUP | Self::TUPs | Self::TOP | Self::TOPs | Self::TRI | Self::TRIs)
    }

    /// Target weights reachable from weight `k`.
    pub fn range(self, j: u32, k: u32) -> std::ops::RangeInclusive<u32> {
        if self.is_top() {
            k..=j
        } else {
            0..=k
        }
    }

    /// Exponents `(a, q, s)` of the monomial part; the `t` exponent is always `-h`.
    pub fn monomial(self, j: i64, k: i64, h: i64) -> (i64, i64, i64) {
        use RuleId::*;
        match self {
            TUP => (0, k * k + h, k),
            TUPs => (0, k * k + h, h),
            TOPs => (k, k * (k - 2 * j) + h, h - k),
            TOP => (k, k * (k - 2 * j) + h, -k),
            TRI => (h, k * k + h * (1 - 2 * j), k - h),
            TRIs => (h, k * k + h * (1 - 2 * j), -h),
            RUP => (h, k * (2 * j - k) + h * (1 - 2 * j), k - h),
            RUPs => (h, k * (2 * j - k) + h * (1 - 2 * j), -h),
            ROP => (k, -k * k + h, h - k),
            ROPs => (k, -k * k + h, -k),
            RRI => (0, -k * (k - 2 * j) + h, k),
            RRIs => (0, -k * (k - 2 * j) + h, h),
        }
    }
}

/// Deliberate corruption of one rule, for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub rule: RuleId,
    /// Added to the `q`-exponent of every coefficient of `rule` with `h != k`.
    pub q_offset: i64,
}

/// Applies twist rules with coefficients memoized per `(rule, j, k, h)`.
#[derive(Default)]
pub struct TwistEngine {
    memo: HashMap<(RuleId, u32, u32, u32), LaurentPoly4>,
    mutation: Option<Mutation>,
}

impl TwistEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_mutation(m: Mutation) -> Self {
        TwistEngine { memo: HashMap::new(), mutation: Some(m) }
    }

    /// Coefficient of `X_h` in the image of `X_k`.
    pub fn coefficient(&mut self, rule: RuleId, j: u32, k: u32, h: u32) -> &LaurentPoly4 {
        let mutation = self.mutation;
        self.memo.entry((rule, j, k, h)).or_insert_with(|| {
            let (ji, ki, hi) = (j as i64, k as i64, h as i64);
            let (ea, mut eq, es) = rule.monomial(ji, ki, hi);
            if let Some(m) = mutation {
                if m.rule == rule && h != k {
                    eq += m.q_offset;
                }
            }
            let binom = if rule.is_top() {
                quantum_binomial(hi, k, Variant::Plus)
            } else {
                quantum_binomial(ji - hi, k - h, Variant::Minus)
            }
            .expect("quantum binomial division is exact");
            LaurentPoly4::from_q(&binom).mul_monomial(ExponentVector::new(ea, eq, es, -hi))
        })
    }

    pub fn apply_twist(&mut self, state: &ComplexState, m: TwistMove) -> ComplexState {
        let j = state.color_j;
        let rule = RuleId::of(state.config, m);
        let mut coeffs = vec![LaurentPoly4::zero(); j as usize + 1];
        for (k, p) in state.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for h in rule.range(j, k as u32) {
                let c = self.coefficient(rule, j, k as u32, h);
                coeffs[h as usize] += c * p;
            }
        }
        ComplexState { color_j: j, config: config_step(state.config, m), coeffs }
    }

    /// Folds the twist word from `X_0` in the start configuration (unnormalized).
    pub fn run(&mut self, word: &[TwistMove], j: u32, start: BoundaryConfig) -> ComplexState {
        word.iter().fold(ComplexState::start(j, start), |s, &m| self.apply_twist(&s, m))
    }
}

/// One twist step with a fresh engine.
pub fn apply_twist(state: &ComplexState, m: TwistMove) -> ComplexState {
    TwistEngine::new().apply_twist(state, m)
}

/// Poincaré polynomial of the tangle's complex, normalized, with the removed monomial.
pub fn poincare_polynomial(tangle: &TangleDesc, j: u32, start: BoundaryConfig) -> (ComplexState, ExponentVector) {
    TwistEngine::new().run(&tangle.word, j, start).normalized()
}

/// Number of generators per weight (every coefficient at `a = q = s = t = 1`).
pub fn generator_count(state: &ComplexState) -> Vec<BigInt> {
    state.coeffs.iter().map(LaurentPoly4::eval_ones).collect()
}

/// Left and right intersection numbers `(L, R)` produced by a word from the trivial start:
/// a top twist adds `R` to `L`, a right twist adds `L` to `R`.
pub fn intersection_numbers(word: &[TwistMove]) -> (u64, u64) {
    word.iter().fold((0, 1), |(l, r), m| match m {
        TwistMove::Top => (l + r, r),
        TwistMove::Right => (l, r + l),
    })
}
