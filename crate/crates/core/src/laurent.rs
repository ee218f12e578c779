//! Divided differences: the closed-form ℤ-indexed backend.
//!
//! The algebra is `k[x, x⁻¹]` with basis `xⁿ`, `n ∈ ℤ`, and the divided-
//! difference comultiplication
//!
//! ```text
//! Δ(xⁿ)     =  Σ_{i=0}^{n-1} xⁱ ⊗ xⁿ⁻¹⁻ⁱ            (n ≥ 0)
//! Δ(x⁻ⁿ)    = −Σ_{i=1}^{n}   x⁻ⁱ ⊗ x⁻⁽ⁿ⁺¹⁻ⁱ⁾         (n ≥ 1)
//! ```
//!
//! Both rules are exact on any finitely supported element; the stored window
//! only bounds which basis exponents law checkers enumerate.

use crate::structures::{Algebra, Endo, EpsBialgebra};
use crate::scalar::Scalar;
use crate::tensor::{Element, Idx, Tensor2};

/// The ε-bialgebra of divided differences on `k[x, x⁻¹]`.
#[derive(Clone, Debug)]
pub struct DividedDifferences {
    /// Default exponent window for law probing.
    pub window: i64,
}

impl DividedDifferences {
    pub fn new(window: i64) -> Self {
        assert!(window >= 1);
        DividedDifferences { window }
    }
}

impl Algebra for DividedDifferences {
    fn dimension(&self) -> Option<usize> {
        None
    }

    fn multiply_basis(&self, m: Idx, n: Idx) -> Element {
        Element::basis(m + n)
    }

    fn unit(&self) -> Option<Element> {
        Some(Element::basis(0))
    }

    fn label(&self, i: Idx) -> String {
        if i < 0 {
            format!("x^({i})")
        } else {
            format!("x^{i}")
        }
    }
}

impl EpsBialgebra for DividedDifferences {
    fn comultiply_basis(&self, n: Idx) -> Tensor2 {
        let mut out = Tensor2::new();
        if n > 0 {
            for i in 0..n {
                out.add_to((i, n - 1 - i), Scalar::one());
            }
        } else if n < 0 {
            let k = -n;
            for i in 1..=k {
                out.add_to((-i, -(k + 1 - i)), -Scalar::one());
            }
        }
        out
    }
}

/// `d/dx`: sends `xⁿ` to `n·xⁿ⁻¹`. A biderivation of divided differences.
pub struct Derivative;

impl Endo for Derivative {
    fn apply_element(&self, x: &Element) -> Element {
        let mut out = Element::new();
        for (&n, c) in x.iter() {
            out.add_to(n - 1, c * &Scalar::from_int(n));
        }
        out
    }
}

/// Multiplication by `xᵐ`.
pub struct MultiplyByPower(pub i64);

impl Endo for MultiplyByPower {
    fn apply_element(&self, x: &Element) -> Element {
        x.iter().map(|(&n, c)| (n + self.0, c.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check_eps_axioms, convolve_apply};

    #[test]
    fn displayed_coproducts() {
        let dd = DividedDifferences::new(5);
        let d2 = dd.comultiply_basis(2);
        assert_eq!(d2, Tensor2::basis(0, 1).add(&Tensor2::basis(1, 0)));
        assert!(dd.comultiply_basis(0).is_zero());
        let dm1 = dd.comultiply_basis(-1);
        assert_eq!(dm1, Tensor2::basis(-1, -1).neg());
        let dm2 = dd.comultiply_basis(-2);
        assert_eq!(
            dm2,
            Tensor2::basis(-1, -2).add(&Tensor2::basis(-2, -1)).neg()
        );
    }

    #[test]
    fn axioms_pass_on_window() {
        let dd = DividedDifferences::new(3);
        let probe = dd.probe(3);
        let report = check_eps_axioms(&dd, &probe);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn convolution_of_identities_is_derivative() {
        // (id∗id)(xⁿ) = Σ xⁱ·xⁿ⁻¹⁻ⁱ = n·xⁿ⁻¹, the same as d/dx.
        struct Id;
        impl Endo for Id {
            fn apply_element(&self, x: &Element) -> Element {
                x.clone()
            }
        }
        let dd = DividedDifferences::new(8);
        for n in -8..=8 {
            let conv = convolve_apply(&dd, &Id, &Id, &Element::basis(n));
            let deriv = Derivative.apply_element(&Element::basis(n));
            assert_eq!(conv, deriv, "n={n}");
        }
    }
}
