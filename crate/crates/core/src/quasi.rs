//! Quasitriangular structures: solutions of the associative Yang-Baxter
//! equation, the principal coproduct they induce, and Baxter operators.
//!
//! For `r = Σᵢ uᵢ⊗vᵢ ∈ A⊗A` the associative Yang-Baxter equation is
//!
//! ```text
//! r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃ = 0
//! ```
//!
//! A solution makes `Δ(a) = r·a − a·r` a coassociative derivation, so
//! `(A, Δ)` becomes an ε-bialgebra, and `β(x) = Σᵢ uᵢxvᵢ` a Baxter operator:
//! `β(x)β(y) = β(xβ(y) + β(x)y)`.

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::probe::Probe;
use crate::report::{check_law, Report};
use crate::structures::{Algebra, DenseBialgebra, FinAlgebra};
use crate::tensor::{Element, Idx, Tensor2, Tensor3};

/// An algebra together with a canonical element `r ∈ A⊗A`.
///
/// Construction does not validate the Yang-Baxter equation; operations that
/// need it check first and refuse otherwise.
#[derive(Clone)]
pub struct QuasiTriangular {
    pub alg: FinAlgebra,
    pub r: Tensor2,
}

impl QuasiTriangular {
    pub fn new(alg: FinAlgebra, r: Tensor2) -> Self {
        QuasiTriangular { alg, r }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

/// `r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃` expanded without reference to a unit:
///
/// ```text
/// Σ uᵢuⱼ⊗vⱼ⊗vᵢ − Σ uᵢ⊗vᵢuⱼ⊗vⱼ + Σ uⱼ⊗uᵢ⊗vᵢvⱼ
/// ```
pub fn aybe_residual(alg: &dyn Algebra, r: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::new();
    for (&(ui, vi), ci) in r.iter() {
        for (&(uj, vj), cj) in r.iter() {
            let c = ci * cj;
            for (&k, d) in alg.multiply_basis(ui, uj).iter() {
                out.add_to((k, vj, vi), &c * d);
            }
            for (&k, d) in alg.multiply_basis(vi, uj).iter() {
                out.add_to((ui, k, vj), -&(&c * d));
            }
            for (&k, d) in alg.multiply_basis(vi, vj).iter() {
                out.add_to((uj, ui, k), &c * d);
            }
        }
    }
    out
}

pub fn check_aybe(alg: &FinAlgebra, r: &Tensor2) -> Report {
    let mut report = Report::new("associative Yang-Baxter equation");
    let probe = Probe::dense(0);
    report.push(check_law("aybe", &probe, 0, |_| {
        let res = aybe_residual(alg, r);
        (!res.is_zero()).then(|| format!("{res:?}"))
    }));
    report
}

/// The principal coproduct `Δ(a) = r·a − a·r`, refused unless `r` solves
/// the Yang-Baxter equation (coassociativity is not guaranteed otherwise).
pub fn principal_coproduct(q: &QuasiTriangular) -> Result<DenseBialgebra> {
    if !aybe_residual(&q.alg, &q.r).is_zero() {
        return Err(Error::LawViolation {
            law: "aybe".into(),
            witness: "canonical element does not solve the Yang-Baxter equation".into(),
        });
    }
    let mut bialg = DenseBialgebra::new(q.alg.clone());
    for a in 0..q.dim() as Idx {
        let ea = Element::basis(a);
        let delta = q.alg.act_right(&q.r, &ea).sub(&q.alg.act_left(&ea, &q.r));
        bialg.set_comul(a, delta);
    }
    Ok(bialg)
}

/// Residual of `(Δ⊗id)(r) = r₂₃r₁₃ = Σ uᵢ⊗uⱼ⊗vⱼvᵢ` for the principal Δ.
pub fn delta_on_r_residual(q: &QuasiTriangular, bialg: &DenseBialgebra) -> Tensor3 {
    use crate::structures::EpsBialgebra;
    let mut out = Tensor3::new();
    for (&(u, v), c) in q.r.iter() {
        for (&(p, s), d) in bialg.comultiply_basis(u).iter() {
            out.add_to((p, s, v), c * d);
        }
    }
    for (&(ui, vi), ci) in q.r.iter() {
        for (&(uj, vj), cj) in q.r.iter() {
            for (&k, d) in q.alg.multiply_basis(vj, vi).iter() {
                out.add_to((ui, uj, k), -&(&(ci * cj) * d));
            }
        }
    }
    out
}

/// A Baxter operator on an algebra.
#[derive(Clone)]
pub struct BaxterOp {
    pub carrier: FinAlgebra,
    pub beta: LinearMap,
}

/// `β(x) = Σᵢ uᵢxvᵢ`, a Baxter operator whenever `r` solves the
/// Yang-Baxter equation.
pub fn baxter_from_r(q: &QuasiTriangular) -> Result<BaxterOp> {
    if !aybe_residual(&q.alg, &q.r).is_zero() {
        return Err(Error::LawViolation {
            law: "aybe".into(),
            witness: "canonical element does not solve the Yang-Baxter equation".into(),
        });
    }
    Ok(BaxterOp { carrier: q.alg.clone(), beta: sandwich_by_r(&q.alg, &q.r) })
}

/// The map `x ↦ Σᵢ uᵢ x vᵢ` as a matrix; also used for bimodule carriers.
pub fn sandwich_by_r(alg: &FinAlgebra, r: &Tensor2) -> LinearMap {
    let n = alg.dim();
    let cols: Vec<Element> = (0..n as Idx)
        .map(|x| {
            let mut out = Element::new();
            for (&(u, v), c) in r.iter() {
                let uxv = alg.product_chain(&[
                    Element::basis(u),
                    Element::basis(x),
                    Element::basis(v),
                ]);
                for (&k, d) in uxv.iter() {
                    out.add_to(k, c * d);
                }
            }
            out
        })
        .collect();
    LinearMap::from_columns(n, &cols)
}

/// Checks `β(x)β(y) = β(xβ(y) + β(x)y)` on all basis pairs.
pub fn check_baxter(op: &BaxterOp) -> Report {
    let mut report = Report::new("Baxter operator");
    let probe = op.carrier.probe(0);
    report.push(check_law("baxter", &probe, 2, |t| {
        let r = baxter_residual(&op.carrier, &op.beta, t[0], t[1]);
        (!r.is_zero()).then(|| format!("{r:?}"))
    }));
    report
}

fn baxter_residual(alg: &FinAlgebra, beta: &LinearMap, x: Idx, y: Idx) -> Element {
    let ex = Element::basis(x);
    let ey = Element::basis(y);
    let bx = beta.apply(&ex);
    let by = beta.apply(&ey);
    let lhs = alg.multiply(&bx, &by);
    let inner = alg.multiply(&ex, &by).add(&alg.multiply(&bx, &ey));
    lhs.sub(&beta.apply(&inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Scalar;
    use crate::structures::{check_eps_axioms, EpsBialgebra};

    #[test]
    fn zero_r_is_a_solution() {
        let (alg, _) = fixtures::truncated_poly_square_zero();
        assert!(check_aybe(&alg, &Tensor2::new()).passed());
        let q = QuasiTriangular::new(alg, Tensor2::new());
        let b = baxter_from_r(&q).unwrap();
        assert!(b.beta.is_zero());
        assert!(check_baxter(&b).passed());
    }

    #[test]
    fn nilpotent_one_tensor_b_solves_aybe() {
        // r = 1⊗b with b² = 0: the three terms cancel pairwise.
        let q = fixtures::nilpotent_poly_quasi();
        assert!(check_aybe(&q.alg, &q.r).passed());
        let bialg = principal_coproduct(&q).unwrap();
        assert!(check_eps_axioms(&bialg, &bialg.probe(0)).passed());
        assert!(delta_on_r_residual(&q, &bialg).is_zero());
        // Δ(1) = r·1 − 1·r = 0, and Δ(t) = 1⊗bt − t⊗b = −t⊗t for b = t.
        assert!(bialg.comultiply_basis(0).is_zero());
        assert_eq!(bialg.comultiply_basis(1), Tensor2::basis(1, 1).neg());
        // β(x) = xb here.
        let b = baxter_from_r(&q).unwrap();
        assert!(check_baxter(&b).passed());
        assert_eq!(b.beta.apply(&Element::basis(0)), Element::basis(1));
        assert!(b.beta.apply(&Element::basis(1)).is_zero());
    }

    #[test]
    fn m2_r_solves_aybe() {
        let q = fixtures::m2_quasitriangular();
        assert!(check_aybe(&q.alg, &q.r).passed());
        let bialg = principal_coproduct(&q).unwrap();
        assert!(check_eps_axioms(&bialg, &bialg.probe(0)).passed());
        assert!(delta_on_r_residual(&q, &bialg).is_zero());
        // β(x) = E₁₁xE₁₂ − E₁₂xE₁₁; in particular β(E₂₁) = −E₁₁.
        let b = baxter_from_r(&q).unwrap();
        assert!(check_baxter(&b).passed());
        assert_eq!(
            b.beta.apply(&Element::basis(fixtures::M2_E21)),
            Element::term(fixtures::M2_E11, -Scalar::one())
        );
    }

    #[test]
    fn identity_is_not_baxter_on_single_arrow() {
        let a3 = fixtures::single_arrow();
        let op = BaxterOp { carrier: a3.alg.clone(), beta: LinearMap::identity(3) };
        let report = check_baxter(&op);
        let law = report.law("baxter").unwrap();
        assert_eq!(law.status, crate::report::LawStatus::Fail);
        // First failure at (e₀, e₀): e₀e₀ vs β(2e₀) = 2e₀.
        assert_eq!(law.witnesses[0].tuple, vec![0, 0]);
    }

    #[test]
    fn principal_coproduct_refuses_non_solutions() {
        let a3 = fixtures::single_arrow();
        // r = e₀⊗a fails the Yang-Baxter equation on A₃.
        let q = QuasiTriangular::new(a3.alg.clone(), Tensor2::basis(0, 2));
        assert!(!check_aybe(&q.alg, &q.r).passed());
        assert!(principal_coproduct(&q).is_err());
        assert!(baxter_from_r(&q).is_err());
    }
}
