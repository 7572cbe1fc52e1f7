use serde::Serialize;

use super::Grid3;
use crate::error::{LunarError, Result};
use crate::nat::LunarNat;

/// Parameters of the two-plane square factory: `a` dominates `b, c, d` and
/// `alpha` dominates `beta, gamma, delta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructParams {
    a: LunarNat,
    b: LunarNat,
    c: LunarNat,
    d: LunarNat,
    alpha: LunarNat,
    beta: LunarNat,
    gamma: LunarNat,
    delta: LunarNat,
}

impl ConstructParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a: LunarNat,
        b: LunarNat,
        c: LunarNat,
        d: LunarNat,
        alpha: LunarNat,
        beta: LunarNat,
        gamma: LunarNat,
        delta: LunarNat,
    ) -> Result<Self> {
        let base = a.base();
        for x in [&b, &c, &d, &alpha, &beta, &gamma, &delta] {
            if x.base() != base {
                return Err(LunarError::BaseMismatch(base, x.base()));
            }
        }
        if alpha.is_zero() {
            return Err(LunarError::InvalidParams(
                "alpha must be nonzero: its length sets the shift width".into(),
            ));
        }
        for (name, x) in [("b", &b), ("c", &c), ("d", &d)] {
            if !a.dominates_unchecked(x) {
                return Err(LunarError::DominanceViolated(format!(
                    "a = {a} does not dominate {name} = {x}"
                )));
            }
        }
        for (name, x) in [("beta", &beta), ("gamma", &gamma), ("delta", &delta)] {
            if !alpha.dominates_unchecked(x) {
                return Err(LunarError::DominanceViolated(format!(
                    "alpha = {alpha} does not dominate {name} = {x}"
                )));
            }
        }
        Ok(Self {
            a,
            b,
            c,
            d,
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    /// Parses eight digit strings in the order `a b c d alpha beta gamma delta`.
    pub fn parse(base: u32, texts: [&str; 8]) -> Result<Self> {
        let [a, b, c, d, alpha, beta, gamma, delta] = texts;
        let p = |t: &str| LunarNat::parse(t, base);
        Self::new(
            p(a)?,
            p(b)?,
            p(c)?,
            p(d)?,
            p(alpha)?,
            p(beta)?,
            p(gamma)?,
            p(delta)?,
        )
    }

    pub fn base(&self) -> u32 {
        self.a.base()
    }

    /// Total of the constructed square: `a` followed by the digits of
    /// `alpha`.
    pub fn total(&self) -> LunarNat {
        &self.a.shift(self.alpha.len()) + &self.alpha
    }
}

/// Builds
///
/// ```text
///  a0..0 | bα | aδ
///  aγ    | 0  | cα
///  dα    | aβ | α
/// ```
///
/// where `xy` is `x` shifted left by the length of `α`, plus `y`. The
/// result is magic with total `aα`; entries need not be distinct.
pub fn construct(params: &ConstructParams) -> Grid3 {
    let w = params.alpha.len();
    let s = |x: &LunarNat| x.shift(w);
    let p = params;
    let zero = LunarNat::from_raw(p.base(), Vec::new());
    Grid3::from_flat_unchecked(
        p.base(),
        [
            s(&p.a),
            &s(&p.b) + &p.alpha,
            &s(&p.a) + &p.delta,
            &s(&p.a) + &p.gamma,
            zero,
            &s(&p.c) + &p.alpha,
            &s(&p.d) + &p.alpha,
            &s(&p.a) + &p.beta,
            p.alpha.clone(),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_the_44_square() {
        let p = ConstructParams::parse(10, ["4", "3", "2", "1", "4", "3", "2", "1"]).unwrap();
        let g = construct(&p);
        let want = Grid3::parse(
            10,
            [["40", "34", "41"], ["42", "0", "24"], ["14", "43", "4"]],
        )
        .unwrap();
        assert_eq!(g, want);
        assert_eq!(g.magic_total(), Some(p.total()));
        assert_eq!(p.total().to_string(), "44");
    }

    #[test]
    fn rejects_dominance_violations() {
        let err = ConstructParams::parse(10, ["4", "3", "2", "1", "4", "8", "2", "1"]);
        assert!(matches!(err, Err(LunarError::DominanceViolated(_))));
        let err = ConstructParams::parse(10, ["4", "5", "2", "1", "8", "7", "6", "5"]);
        assert!(matches!(err, Err(LunarError::DominanceViolated(_))));
        let err = ConstructParams::parse(10, ["4", "3", "2", "1", "0", "0", "0", "0"]);
        assert!(matches!(err, Err(LunarError::InvalidParams(_))));
    }

    #[test]
    fn total_48_construction() {
        let p = ConstructParams::parse(10, ["4", "3", "2", "1", "8", "7", "6", "5"]).unwrap();
        let g = construct(&p);
        assert_eq!(g.magic_total().unwrap().to_string(), "48");
        assert!(g.has_distinct_entries());
    }

    #[test]
    fn multi_digit_alpha_pads_short_parts() {
        let p = ConstructParams::parse(10, ["7", "5", "6", "1", "52", "50", "12", "2"]).unwrap();
        let g = construct(&p);
        assert_eq!(g.cell(0, 0).to_string(), "700");
        assert_eq!(g.cell(0, 2).to_string(), "702");
        assert_eq!(g.magic_total().unwrap().to_string(), "752");
    }
}
