//! An explicit coefficient that separates the U-polynomials of Ψ(α∘γ) and
//! Ψ(β∘γ) when γ is not a palindrome and α ≠ β have equal size.
//!
//! With k = k(α, β), l = k(γ, reverse γ), a = |α₁…α_k| and
//! b = |γ₁…γ_l|, set δ₁ = a|γ| + b and δ₂ = n|γ| − δ₁. The partition
//! λ = (1, δ₁ − 1, δ₂) sorted is the witness: its coefficient in U_S counts
//! the leaves of Ψ(ρ₁) and in U_T the leaves of Ψ(ρ₂), where
//! ρ₁ = (α₁…α_k ∘ γ) · γ₁…γ_l and ρ₂ = (α₁…α_k ∘ γ) ⊙ γ₁…γ_l, and the
//! two leaf counts differ by one.

use alloc::string::ToString;
use alloc::vec;

use crate::caterpillar::psi;
use crate::composition::{first_difference_index, Composition, Partition};
use crate::error::WitnessError;
use crate::upoly::u_polynomial_tree;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessData {
    pub alpha: Composition,
    pub beta: Composition,
    pub gamma: Composition,
    /// First index where α and β differ (1-based).
    pub k_ab: usize,
    /// First index where γ and its reverse differ (1-based).
    pub k_g: usize,
    pub a: u32,
    pub b: u32,
    pub delta1: u32,
    pub delta2: u32,
    pub lambda_witness: Partition,
    pub rho1: Composition,
    pub rho2: Composition,
    /// [x_λ] U_S for S = Ψ(α∘γ).
    pub coeff_s: i64,
    /// [x_λ] U_T for T = Ψ(β∘γ).
    pub coeff_t: i64,
}

/// Applies the without-loss-of-generality moves: reverse all three
/// compositions if γ is not below its reverse (this maps α∘γ to the reverse
/// of itself, so the caterpillars are unchanged), then swap α and β so that
/// α < β.
pub fn normalize_triple(
    alpha: &Composition,
    beta: &Composition,
    gamma: &Composition,
) -> (Composition, Composition, Composition) {
    let (mut alpha, mut beta, mut gamma) = (alpha.clone(), beta.clone(), gamma.clone());
    if gamma.reverse() < gamma {
        alpha = alpha.reverse();
        beta = beta.reverse();
        gamma = gamma.reverse();
    }
    if beta < alpha {
        core::mem::swap(&mut alpha, &mut beta);
    }
    (alpha, beta, gamma)
}

fn prefix_size(c: &Composition, k: usize) -> u32 {
    c.parts()[..k].iter().sum()
}

/// Builds the witness for an already-normalized triple and checks it
/// against the fast U-polynomial.
pub fn witness_theorem(
    alpha: &Composition,
    beta: &Composition,
    gamma: &Composition,
) -> Result<WitnessData, WitnessError> {
    if gamma.is_palindrome() {
        return Err(WitnessError::PalindromicGamma(gamma.to_string()));
    }
    if alpha == beta {
        return Err(WitnessError::EqualAlphaBeta);
    }
    if alpha.size() != beta.size() {
        return Err(WitnessError::SizeMismatch(alpha.size(), beta.size()));
    }
    let sigma = alpha.circ(gamma);
    let tau = beta.circ(gamma);
    if !sigma.is_proper() {
        return Err(WitnessError::ImproperProduct {
            name: "alpha∘gamma",
            value: sigma.to_string(),
        });
    }
    if !tau.is_proper() {
        return Err(WitnessError::ImproperProduct {
            name: "beta∘gamma",
            value: tau.to_string(),
        });
    }
    let gamma_rev = gamma.reverse();
    if gamma_rev < *gamma {
        return Err(WitnessError::GammaNotNormalized(gamma.to_string()));
    }
    if beta < alpha {
        return Err(WitnessError::AlphaBetaNotNormalized(
            alpha.to_string(),
            beta.to_string(),
        ));
    }

    let n = alpha.size();
    let k_ab = first_difference_index(alpha, beta).expect("alpha != beta");
    let k_g = first_difference_index(gamma, &gamma_rev).expect("gamma is not a palindrome");
    // Equal sizes rule out one being a proper prefix of the other.
    debug_assert!(k_ab <= alpha.len().min(beta.len()));
    let a = prefix_size(alpha, k_ab);
    let b = prefix_size(gamma, k_g);
    let delta1 = a * gamma.size() + b;
    let delta2 = n * gamma.size() - delta1;
    let lambda_witness = Partition::from_unsorted(vec![1, delta1 - 1, delta2]);

    let head = alpha.prefix(k_ab).circ(gamma);
    let tail = gamma.prefix(k_g);
    let rho1 = head.concat(&tail);
    let rho2 = head.near_concat(&tail);

    let s = psi(&sigma).expect("sigma is proper with length >= 2");
    let t = psi(&tau).expect("tau is proper with length >= 2");
    let coeff_s = u_polynomial_tree(&s).coeff(&lambda_witness);
    let coeff_t = u_polynomial_tree(&t).coeff(&lambda_witness);

    let leaves1 = psi(&rho1)
        .map_err(|e| WitnessError::CoefficientMismatch(e.to_string()))?
        .leaf_count() as i64;
    let leaves2 = psi(&rho2)
        .map_err(|e| WitnessError::CoefficientMismatch(e.to_string()))?
        .leaf_count() as i64;
    if coeff_s != leaves1 {
        return Err(WitnessError::CoefficientMismatch(alloc::format!(
            "[x_{lambda_witness}]U_S = {coeff_s} but Ψ({rho1}) has {leaves1} leaves"
        )));
    }
    if coeff_t != leaves2 {
        return Err(WitnessError::CoefficientMismatch(alloc::format!(
            "[x_{lambda_witness}]U_T = {coeff_t} but Ψ({rho2}) has {leaves2} leaves"
        )));
    }
    if coeff_s == coeff_t {
        return Err(WitnessError::CoefficientMismatch(alloc::format!(
            "[x_{lambda_witness}] coefficients agree ({coeff_s})"
        )));
    }

    Ok(WitnessData {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        k_ab,
        k_g,
        a,
        b,
        delta1,
        delta2,
        lambda_witness,
        rho1,
        rho2,
        coeff_s,
        coeff_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::from_parts(p)
    }

    #[test]
    fn worked_triple() {
        let w = witness_theorem(&c(&[1, 1]), &c(&[2]), &c(&[2, 3])).unwrap();
        assert_eq!((w.k_ab, w.k_g), (1, 1));
        assert_eq!((w.a, w.b), (1, 2));
        assert_eq!((w.delta1, w.delta2), (7, 3));
        assert_eq!(w.lambda_witness.parts(), &[6, 3, 1]);
        assert_eq!(w.rho1, c(&[2, 3, 2]));
        assert_eq!(w.rho2, c(&[2, 5]));
        assert_eq!((w.rho1.leaf_functional(), w.rho2.leaf_functional()), (4, 5));
        assert_eq!((w.coeff_s, w.coeff_t), (4, 5));
    }

    #[test]
    fn unnormalized_gamma_is_rejected() {
        let err = witness_theorem(&c(&[2]), &c(&[1, 1]), &c(&[3, 2])).unwrap_err();
        assert_eq!(err, WitnessError::GammaNotNormalized("3,2".into()));
        let (a, b, g) = normalize_triple(&c(&[2]), &c(&[1, 1]), &c(&[3, 2]));
        assert_eq!(
            (a.clone(), b.clone(), g.clone()),
            (c(&[1, 1]), c(&[2]), c(&[2, 3]))
        );
        assert!(witness_theorem(&a, &b, &g).is_ok());
    }

    #[test]
    fn symmetric_pair() {
        let w = witness_theorem(&c(&[2, 3]), &c(&[3, 2]), &c(&[2, 3])).unwrap();
        assert_eq!(w.rho2.leaf_functional(), w.rho1.leaf_functional() + 1);
        assert_ne!(w.coeff_s, w.coeff_t);
    }

    #[test]
    fn hypothesis_errors() {
        assert!(matches!(
            witness_theorem(&c(&[1, 1]), &c(&[2]), &c(&[2, 2])),
            Err(WitnessError::PalindromicGamma(_))
        ));
        assert_eq!(
            witness_theorem(&c(&[2]), &c(&[2]), &c(&[2, 3])),
            Err(WitnessError::EqualAlphaBeta)
        );
        assert_eq!(
            witness_theorem(&c(&[2]), &c(&[3]), &c(&[2, 3])),
            Err(WitnessError::SizeMismatch(2, 3))
        );
        assert!(matches!(
            witness_theorem(&c(&[1, 1]), &c(&[2]), &c(&[1, 3])),
            Err(WitnessError::ImproperProduct { .. })
        ));
        assert!(matches!(
            witness_theorem(&c(&[2]), &c(&[1, 1]), &c(&[2, 3])),
            Err(WitnessError::AlphaBetaNotNormalized(..))
        ));
    }
}
