//! The worked example structures, as constructors, plus the combinatorial
//! oracles used to cross-check the algebraic formulas against independent
//! descriptions.

use crate::bimodules::{HopfModuleData, LeftAction, LeftCoaction, RightAction, RightCoaction};
use crate::error::{Error, Result};
use crate::laurent::DividedDifferences;
use crate::quasi::QuasiTriangular;
use crate::quiver::Quiver;
use crate::scalar::Scalar;
use crate::structures::{Algebra, DenseBialgebra, EpsBialgebra, FinAlgebra};
use crate::tensor::{Element, Idx, Tensor2};

/// Single-arrow quiver `e0 → e1`.
pub fn single_arrow_quiver() -> Quiver {
    Quiver::new(&["e0", "e1"]).arrow("a", 0, 1)
}

/// Its 3-dimensional path algebra: basis `e0, e1, a` with `Δ(a) = e0⊗e1`.
pub fn single_arrow() -> DenseBialgebra {
    single_arrow_quiver().path_algebra().expect("acyclic")
}

/// Chain of three arrows `v0 → v1 → v2 → v3` (dimension 10).
pub fn chain_quiver() -> Quiver {
    Quiver::new(&["v0", "v1", "v2", "v3"])
        .arrow("a1", 0, 1)
        .arrow("a2", 1, 2)
        .arrow("a3", 2, 3)
}

pub fn chain() -> DenseBialgebra {
    chain_quiver().path_algebra().expect("acyclic")
}

/// Triangle with a chord: arrows `a: e0→e1`, `b: e1→e2` and the shortcut
/// target `c: e0→e2` (dimension 7, with the composite path `ab`).
pub fn triangle_chord_quiver() -> Quiver {
    Quiver::new(&["e0", "e1", "e2"])
        .arrow("a", 0, 1)
        .arrow("b", 1, 2)
        .arrow("c", 0, 2)
}

pub fn triangle_chord() -> DenseBialgebra {
    triangle_chord_quiver().path_algebra().expect("acyclic")
}

/// Basis indices of the matrix units in [`m2_algebra`].
pub const M2_E11: Idx = 0;
pub const M2_E12: Idx = 1;
pub const M2_E21: Idx = 2;
pub const M2_E22: Idx = 3;

/// The full 2×2 matrix algebra on the matrix-unit basis.
pub fn m2_algebra() -> FinAlgebra {
    let labels = vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()];
    let mut alg = FinAlgebra::new(4).with_labels(labels);
    let idx = |i: Idx, j: Idx| 2 * (i - 1) + (j - 1);
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    if j == k {
                        alg.add_mul(idx(i, j), idx(k, l), idx(i, l), Scalar::one());
                    }
                }
            }
        }
    }
    alg.with_unit(Element::basis(M2_E11).add(&Element::basis(M2_E22)))
}

/// `M₂(k)` with the comultiplication
///
/// ```text
/// Δ[a b; c d] = [0 a; 0 c]⊗[0 1; 0 0] − [0 1; 0 0]⊗[c d; 0 0]
/// ```
///
/// i.e. `Δ(x) = xE₁₂⊗E₁₂ − E₁₂⊗E₁₂x`, the principal coproduct of
/// `−E₁₂⊗E₁₂`.
pub fn m2_bialgebra() -> DenseBialgebra {
    let mut b = DenseBialgebra::new(m2_algebra());
    b.add_comul(M2_E11, M2_E12, M2_E12, Scalar::one());
    b.add_comul(M2_E21, M2_E22, M2_E12, Scalar::one());
    b.add_comul(M2_E21, M2_E12, M2_E11, -Scalar::one());
    b.add_comul(M2_E22, M2_E12, M2_E12, -Scalar::one());
    b
}

/// `M₂(k)` with the canonical element `r = E₁₁⊗E₁₂ − E₁₂⊗E₁₁`.
///
/// Note that the principal coproduct of this `r` is a different
/// ε-bialgebra structure than [`m2_bialgebra`]; the latter is principal for
/// `−E₁₂⊗E₁₂` (a regression test pins both facts).
pub fn m2_quasitriangular() -> QuasiTriangular {
    let mut r = Tensor2::new();
    r.add_to((M2_E11, M2_E12), Scalar::one());
    r.add_to((M2_E12, M2_E11), -Scalar::one());
    QuasiTriangular::new(m2_algebra(), r)
}

/// Both structures carried by `M₂(k)`.
pub fn m2_example() -> (DenseBialgebra, QuasiTriangular) {
    (m2_bialgebra(), m2_quasitriangular())
}

/// Divided differences on `k[x, x⁻¹]` with a probing window.
pub fn divided_differences(window: i64) -> DividedDifferences {
    DividedDifferences::new(window)
}

/// `k[t]/(t²)` with basis `1, t` and the square-zero element `t`.
pub fn truncated_poly_square_zero() -> (FinAlgebra, Element) {
    let mut alg = FinAlgebra::new(2).with_labels(vec!["1".into(), "t".into()]);
    alg.add_mul(0, 0, 0, Scalar::one());
    alg.add_mul(0, 1, 1, Scalar::one());
    alg.add_mul(1, 0, 1, Scalar::one());
    let alg = alg.with_unit(Element::basis(0));
    (alg, Element::basis(1))
}

/// Upper-triangular 2×2 matrices with the square-zero element `E₁₂`.
pub fn upper_triangular_square_zero() -> (FinAlgebra, Element) {
    let labels = vec!["E11".into(), "E12".into(), "E22".into()];
    let mut alg = FinAlgebra::new(3).with_labels(labels);
    alg.add_mul(0, 0, 0, Scalar::one());
    alg.add_mul(0, 1, 1, Scalar::one());
    alg.add_mul(1, 2, 1, Scalar::one());
    alg.add_mul(2, 2, 2, Scalar::one());
    let alg = alg.with_unit(Element::basis(0).add(&Element::basis(2)));
    (alg, Element::basis(1))
}

/// `r = 1⊗b` for a unital algebra and a square-zero `b`; refuses when
/// `b² ≠ 0`.
pub fn nilpotent_r_example(alg: FinAlgebra, b: Element) -> Result<QuasiTriangular> {
    let b2 = alg.multiply(&b, &b);
    if !b2.is_zero() {
        return Err(Error::LawViolation {
            law: "square-zero".into(),
            witness: format!("b² = {b2:?}"),
        });
    }
    let unit = alg
        .unit()
        .ok_or_else(|| Error::Unsupported("r = 1⊗b needs a unital algebra".into()))?;
    let r = Tensor2::pure(&unit, &b);
    Ok(QuasiTriangular::new(alg, r))
}

/// The `k[t]/(t²)` instance of `r = 1⊗b`.
pub fn nilpotent_poly_quasi() -> QuasiTriangular {
    let (alg, b) = truncated_poly_square_zero();
    nilpotent_r_example(alg, b).expect("t² = 0")
}

/// The upper-triangular instance of `r = 1⊗b`.
pub fn nilpotent_upper_quasi() -> QuasiTriangular {
    let (alg, b) = upper_triangular_square_zero();
    nilpotent_r_example(alg, b).expect("E₁₂² = 0")
}

/// The regular actions of an algebra on itself: `λ = ξ = μ`.
pub fn regular_actions(alg: &FinAlgebra) -> (LeftAction, RightAction) {
    let n = alg.dim();
    let mut lambda = LeftAction::new();
    let mut xi = RightAction::new();
    for i in 0..n as Idx {
        for j in 0..n as Idx {
            lambda.set(i, j, alg.multiply_basis(i, j));
            xi.set(i, j, alg.multiply_basis(i, j));
        }
    }
    (lambda, xi)
}

/// `M₂(k)` acting on column vectors `k²`: `E_{ij}·vⱼ = vᵢ`.
pub fn m2_column_action() -> LeftAction {
    let mut lambda = LeftAction::new();
    for i in 0..2 {
        for j in 0..2 {
            lambda.set(2 * i + j, j, Element::basis(i));
        }
    }
    lambda
}

/// `M = A` as a left ε-Hopf module over itself: `λ = μ`, `Λ = Δ`.
pub fn regular_hopf_module(alg: &DenseBialgebra) -> HopfModuleData {
    let n = alg.dim();
    let (lambda, _) = regular_actions(&alg.alg);
    let mut coaction = LeftCoaction::new();
    for m in 0..n as Idx {
        coaction.set(m, alg.comultiply_basis(m));
    }
    HopfModuleData::left(n, lambda, coaction)
        .with_labels((0..n).map(|i| alg.label(i as Idx)).collect())
}

/// `M = A⊗V` for a trivial space `V`: `λ = μ⊗id`, `Λ = Δ⊗id`.
/// Module index `(a, v) ↦ a·v_dim + v`.
pub fn free_hopf_module(alg: &DenseBialgebra, v_dim: usize) -> HopfModuleData {
    let n = alg.dim();
    let vd = v_dim as Idx;
    let mut lambda = LeftAction::new();
    let mut coaction = LeftCoaction::new();
    for a in 0..n as Idx {
        for v in 0..vd {
            let m = a * vd + v;
            for i in 0..n as Idx {
                let prod: Element = alg
                    .multiply_basis(i, a)
                    .iter()
                    .map(|(&k, c)| (k * vd + v, c.clone()))
                    .collect();
                lambda.set(i, m, prod);
            }
            let t: Tensor2 = alg
                .comultiply_basis(a)
                .iter()
                .map(|(&(p, q), c)| ((p, q * vd + v), c.clone()))
                .collect();
            coaction.set(m, t);
        }
    }
    HopfModuleData::left(n * v_dim, lambda, coaction)
}

/// `M = A⊗A` as an ε-Hopf bimodule: `λ = μ⊗id`, `Λ = Δ⊗id`, `ξ = id⊗μ`,
/// `Ξ = id⊗Δ`. Module index `(i, j) ↦ i·n + j`.
pub fn tensor_square_bimodule(alg: &DenseBialgebra) -> HopfModuleData {
    let n = alg.dim() as Idx;
    let mut lambda = LeftAction::new();
    let mut coaction = LeftCoaction::new();
    let mut xi = RightAction::new();
    let mut right_coaction = RightCoaction::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let m = i * n + j;
            labels.push(format!("{}⊗{}", alg.label(i), alg.label(j)));
            for k in 0..n {
                let left: Element = alg
                    .multiply_basis(k, i)
                    .iter()
                    .map(|(&p, c)| (p * n + j, c.clone()))
                    .collect();
                lambda.set(k, m, left);
                let right: Element = alg
                    .multiply_basis(j, k)
                    .iter()
                    .map(|(&p, c)| (i * n + p, c.clone()))
                    .collect();
                xi.set(m, k, right);
            }
            let lt: Tensor2 = alg
                .comultiply_basis(i)
                .iter()
                .map(|(&(p, q), c)| ((p, q * n + j), c.clone()))
                .collect();
            coaction.set(m, lt);
            let rt: Tensor2 = alg
                .comultiply_basis(j)
                .iter()
                .map(|(&(p, q), c)| ((i * n + p, q), c.clone()))
                .collect();
            right_coaction.set(m, rt);
        }
    }
    HopfModuleData::left((n * n) as usize, lambda, coaction)
        .two_sided(xi, right_coaction)
        .with_labels(labels)
}

/// The ε-Hopf module `A⊗N` of a counital ε-bialgebra acting by
///
/// ```text
/// a·(a′⊗n) = aa′⊗n + η(a′)·a₁⊗a₂n        Λ(a⊗n) = a₁⊗a₂⊗n
/// ```
///
/// With a trivial action on `N` this reduces to the free module `A⊗V`.
pub fn counital_hopf_fixture(
    alg: &DenseBialgebra,
    n_dim: usize,
    n_action: &LeftAction,
) -> Result<HopfModuleData> {
    let eta = alg
        .counit()
        .ok_or_else(|| Error::Unsupported("fixture needs a counital presentation".into()))?;
    let dim_a = alg.dim() as Idx;
    let nd = n_dim as Idx;
    let mut lambda = LeftAction::new();
    let mut coaction = LeftCoaction::new();
    for a2 in 0..dim_a {
        for v in 0..nd {
            let m = a2 * nd + v;
            for a in 0..dim_a {
                let mut act: Element = alg
                    .multiply_basis(a, a2)
                    .iter()
                    .map(|(&k, c)| (k * nd + v, c.clone()))
                    .collect();
                let eta_a2 = eta.coeff(&a2);
                if !eta_a2.is_zero() {
                    for (&(p, q), c) in alg.comultiply_basis(a).iter() {
                        for (&w, d) in n_action.basis(q, v).iter() {
                            act.add_to(p * nd + w, &(&eta_a2 * c) * d);
                        }
                    }
                }
                lambda.set(a, m, act);
            }
            let t: Tensor2 = alg
                .comultiply_basis(a2)
                .iter()
                .map(|(&(p, q), c)| ((p, q * nd + v), c.clone()))
                .collect();
            coaction.set(m, t);
        }
    }
    Ok(HopfModuleData::left(alg.dim() * n_dim, lambda, coaction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasi::{principal_coproduct, QuasiTriangular};
    use crate::structures::{check_eps_axioms, EpsBialgebra};

    #[test]
    fn m2_displayed_coproduct_is_principal_for_minus_e12_e12() {
        let displayed = m2_bialgebra();
        let mut r = Tensor2::new();
        r.add_to((M2_E12, M2_E12), -Scalar::one());
        let principal = principal_coproduct(&QuasiTriangular::new(m2_algebra(), r)).unwrap();
        for i in 0..4 {
            assert_eq!(
                displayed.comultiply_basis(i),
                principal.comultiply_basis(i),
                "basis {i}"
            );
        }
        // The same comultiplication is NOT principal for the canonical
        // element of `m2_quasitriangular`, under either sign.
        let q = m2_quasitriangular();
        let other = principal_coproduct(&q).unwrap();
        assert_ne!(displayed.comultiply_basis(M2_E11), other.comultiply_basis(M2_E11));
        assert_ne!(
            displayed.comultiply_basis(M2_E11),
            other.comultiply_basis(M2_E11).neg()
        );
    }

    #[test]
    fn m2_displayed_values() {
        let b = m2_bialgebra();
        assert_eq!(b.comultiply_basis(M2_E11), Tensor2::basis(M2_E12, M2_E12));
        assert!(b.comultiply_basis(M2_E12).is_zero());
        assert_eq!(
            b.comultiply_basis(M2_E21),
            Tensor2::basis(M2_E22, M2_E12).sub(&Tensor2::basis(M2_E12, M2_E11))
        );
        assert_eq!(
            b.comultiply_basis(M2_E22),
            Tensor2::basis(M2_E12, M2_E12).neg()
        );
        assert!(check_eps_axioms(&b, &b.probe(0)).passed());
    }

    #[test]
    fn all_dense_fixtures_pass_the_axiom_suite() {
        for alg in [single_arrow(), chain(), triangle_chord(), m2_bialgebra()] {
            let report = check_eps_axioms(&alg, &alg.probe(0));
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn nilpotent_constructor_rejects_non_square_zero() {
        let (alg, _) = truncated_poly_square_zero();
        assert!(nilpotent_r_example(alg, Element::basis(0)).is_err());
    }
}
