//! Brace structure of an ε-bialgebra.
//!
//! The n-ary operations are built from iterated coproducts:
//!
//! ```text
//! ⟨a₁,…,aₙ; b⟩ = b₍₁₎a₁b₍₂₎a₂…b₍ₙ₎aₙb₍ₙ₊₁₎,    ⟨; b⟩ = b
//! ```
//!
//! and satisfy, for every n, m ≥ 1, the interval-partition axiom
//!
//! ```text
//! ⟨x₁,…,xₙ; ⟨y₁,…,yₘ; z⟩⟩
//!   = Σ ⟨X₀, ⟨X₁;y₁⟩, X₂, ⟨X₃;y₂⟩, …, ⟨X₂ₘ₋₁;yₘ⟩, X₂ₘ; z⟩
//! ```
//!
//! summed over all partitions of the ordered inputs into possibly empty
//! consecutive intervals `X₀⊔X₁⊔…⊔X₂ₘ`. The 1-ary operation is the
//! pre-Lie product `b₁ab₂`.
//!
//! Iterated coproducts are memoized per (basis index, power); n-ary
//! structure constants are never stored.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::derived::interleave_product;
use crate::error::{Error, Result};
use crate::probe::Probe;
use crate::report::{check_law, Report};
use crate::scalar::Scalar;
use crate::structures::{Algebra, Endo, EpsBialgebra};
use crate::tensor::{Element, Idx, TensorN};

pub struct BraceStructure<'a> {
    alg: &'a dyn EpsBialgebra,
    n_max: usize,
    memo: Mutex<HashMap<(Idx, usize), TensorN>>,
}

impl<'a> BraceStructure<'a> {
    /// `n_max` bounds the arity the evaluator accepts.
    pub fn new(alg: &'a dyn EpsBialgebra, n_max: usize) -> Self {
        BraceStructure { alg, n_max, memo: Mutex::new(HashMap::new()) }
    }

    pub fn arity_bound(&self) -> usize {
        self.n_max
    }

    fn coproduct_power(&self, i: Idx, n: usize) -> TensorN {
        if let Some(t) = self.memo.lock().unwrap().get(&(i, n)) {
            return t.clone();
        }
        let t = self.alg.iterated_coproduct(i, n);
        self.memo.lock().unwrap().insert((i, n), t.clone());
        t
    }

    /// `⟨args; z⟩`, multilinear in every slot.
    pub fn evaluate(&self, args: &[Element], z: &Element) -> Result<Element> {
        let n = args.len();
        if n > self.n_max {
            return Err(Error::Unsupported(format!(
                "brace arity {n} exceeds the configured bound {}",
                self.n_max
            )));
        }
        if n == 0 {
            return Ok(z.clone());
        }
        let mut out = Element::new();
        for (&i, c) in z.iter() {
            let coeffs = self.coproduct_power(i, n);
            for (&k, d) in interleave_product(self.alg_upcast(), &coeffs, args).iter() {
                out.add_to(k, c * d);
            }
        }
        Ok(out)
    }

    fn alg_upcast(&self) -> &dyn Algebra {
        self.alg
    }
}

/// Compositions of `n` into `parts` ordered non-negative summands.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            let mut c = Vec::with_capacity(parts);
            c.push(first);
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

/// Checks the interval-partition axiom at fixed arities `(n, m)` over all
/// tuples of probe points.
pub fn check_brace(brace: &BraceStructure<'_>, n: usize, m: usize, probe: &Probe) -> Report {
    let mut report = Report::new(format!("brace axiom (n={n}, m={m})"));
    let law = format!("brace-axiom-{n}-{m}");
    let splits = compositions(n, 2 * m + 1);
    report.push(check_law(&law, probe, n + m + 1, |t| {
        let xs: Vec<Element> = t[..n].iter().map(|&i| Element::basis(i)).collect();
        let ys: Vec<Element> = t[n..n + m].iter().map(|&i| Element::basis(i)).collect();
        let z = Element::basis(t[n + m]);
        let inner = brace.evaluate(&ys, &z).expect("arity bound");
        let lhs = brace.evaluate(&xs, &inner).expect("arity bound");
        let mut rhs = Element::new();
        for split in &splits {
            // split = [|X₀|, |X₁|, …, |X₂ₘ|]; odd intervals are braced
            // onto the yⱼ, even intervals are spliced verbatim.
            let mut args: Vec<Element> = Vec::new();
            let mut pos = 0usize;
            for (slot, &len) in split.iter().enumerate() {
                let interval = &xs[pos..pos + len];
                pos += len;
                if slot % 2 == 0 {
                    args.extend_from_slice(interval);
                } else {
                    let y = &ys[(slot - 1) / 2];
                    args.push(brace.evaluate(interval, y).expect("arity bound"));
                }
            }
            rhs = rhs.add(&brace.evaluate(&args, &z).expect("arity bound"));
        }
        let r = lhs.sub(&rhs);
        (!r.is_zero()).then(|| format!("{r:?}"))
    }));
    report
}

/// The brace structure `⟨x₁,…,xₙ; z⟩ = x₁⋯xₙ·Dⁿ(z)/n!` carried by a
/// commutative algebra with a derivation `D` (characteristic zero).
pub struct DerivationBrace<'a> {
    pub alg: &'a dyn Algebra,
    pub derivation: &'a dyn Endo,
}

impl DerivationBrace<'_> {
    pub fn evaluate(&self, args: &[Element], z: &Element) -> Element {
        let mut dz = z.clone();
        let mut factorial = Scalar::one();
        for k in 0..args.len() {
            dz = self.derivation.apply_element(&dz);
            factorial *= Scalar::from_int(k as i64 + 1);
        }
        if args.is_empty() {
            return dz;
        }
        let mut chain: Vec<Element> = args.to_vec();
        chain.push(dz.scale(&factorial.recip()));
        self.alg.product_chain(&chain)
    }
}

/// Preconditions of the derivation brace: commutativity of the carrier and
/// the Leibniz rule for `D`, over the probe window.
pub fn check_derivation_brace_preconditions(
    alg: &dyn Algebra,
    d: &dyn Endo,
    probe: &Probe,
) -> Report {
    let mut report = Report::new("derivation brace preconditions");
    report.push(check_law("commutativity", probe, 2, |t| {
        let r = alg
            .multiply_basis(t[0], t[1])
            .sub(&alg.multiply_basis(t[1], t[0]));
        (!r.is_zero()).then(|| format!("{r:?}"))
    }));
    report.push(check_law("derivation", probe, 2, |t| {
        let (x, y) = (Element::basis(t[0]), Element::basis(t[1]));
        let lhs = d.apply_element(&alg.multiply(&x, &y));
        let rhs = alg
            .multiply(&x, &d.apply_element(&y))
            .add(&alg.multiply(&d.apply_element(&x), &y));
        let r = lhs.sub(&rhs);
        (!r.is_zero()).then(|| format!("{r:?}"))
    }));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::laurent::Derivative;

    #[test]
    fn empty_brace_is_identity_and_bound_is_enforced() {
        let a3 = fixtures::single_arrow();
        let brace = BraceStructure::new(&a3, 3);
        let z = Element::basis(2);
        assert_eq!(brace.evaluate(&[], &z).unwrap(), z);
        assert!(brace
            .evaluate(&[z.clone(), z.clone(), z.clone(), z.clone()], &z)
            .is_err());
    }

    #[test]
    fn brace_on_vertices_vanishes() {
        let a3 = fixtures::single_arrow();
        let brace = BraceStructure::new(&a3, 3);
        for x in 0..3 {
            for y in 0..3 {
                for z in [0, 1] {
                    let v = brace
                        .evaluate(&[Element::basis(x), Element::basis(y)], &Element::basis(z))
                        .unwrap();
                    assert!(v.is_zero(), "Δ(z) = 0 kills every bracket");
                }
            }
        }
    }

    #[test]
    fn binomial_closed_form_on_divided_differences() {
        let dd = fixtures::divided_differences(5);
        let brace = BraceStructure::new(&dd, 3);
        // ⟨x^{p₁},…,x^{pₙ}; x^r⟩ = C(r,n)·x^{r+Σp−n}, including negative r.
        for n in 1..=3usize {
            for r in -5..=5i64 {
                for combo in 0..(11i64.pow(n as u32)) {
                    let mut ps = Vec::with_capacity(n);
                    let mut rem = combo;
                    for _ in 0..n {
                        ps.push((rem % 11) - 5);
                        rem /= 11;
                    }
                    if n == 3 && (ps[0] + ps[1] + ps[2]).rem_euclid(3) != 0 {
                        continue; // thin the cubic sweep, keep it mixed-sign
                    }
                    let args: Vec<Element> = ps.iter().map(|&p| Element::basis(p)).collect();
                    let got = brace.evaluate(&args, &Element::basis(r)).unwrap();
                    let coeff = Scalar::binomial(r, n as u32);
                    let target = r + ps.iter().sum::<i64>() - n as i64;
                    assert_eq!(got, Element::term(target, coeff), "n={n} r={r} ps={ps:?}");
                }
            }
        }
        // ⟨x¹,x¹; x³⟩ = C(3,2)x³ = 3x³.
        let v = brace
            .evaluate(&[Element::basis(1), Element::basis(1)], &Element::basis(3))
            .unwrap();
        assert_eq!(v, Element::term(3, Scalar::from_int(3)));
    }

    #[test]
    fn contraction_of_iterated_coproduct_is_binomial() {
        // μ⁽ⁿ⁾Δ⁽ⁿ⁾(xʳ) = C(r,n)·x^{r−n}.
        let dd = fixtures::divided_differences(5);
        for r in -5..=5i64 {
            for n in 0..=3usize {
                let mut got = Element::new();
                for (key, c) in dd.iterated_coproduct(r, n).iter() {
                    let factors: Vec<Element> =
                        key.iter().map(|&k| Element::basis(k)).collect();
                    for (&k, d) in dd.product_chain(&factors).iter() {
                        got.add_to(k, c * d);
                    }
                }
                let expect = Element::term(r - n as i64, Scalar::binomial(r, n as u32));
                assert_eq!(got, expect, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn brace_axiom_small_arities() {
        let a3 = fixtures::single_arrow();
        let brace = BraceStructure::new(&a3, 5);
        let probe = a3.probe(0);
        for (n, m) in [(1, 1), (2, 1), (1, 2)] {
            let report = check_brace(&brace, n, m, &probe);
            assert!(report.passed(), "A₃ ({n},{m}): {report}");
        }
        let dd = fixtures::divided_differences(1);
        let brace = BraceStructure::new(&dd, 5);
        let probe = dd.probe(1);
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let report = check_brace(&brace, n, m, &probe);
            assert!(report.passed(), "divided differences ({n},{m}): {report}");
        }
    }

    #[test]
    fn derivation_brace_matches_eps_brace_on_divided_differences() {
        let dd = fixtures::divided_differences(3);
        let probe = dd.probe(3);
        assert!(
            check_derivation_brace_preconditions(&dd, &Derivative, &probe).passed()
        );
        let via_derivation = DerivationBrace { alg: &dd, derivation: &Derivative };
        let via_eps = BraceStructure::new(&dd, 3);
        for n in 0..=3usize {
            for r in -3..=3i64 {
                for p in -2..=2i64 {
                    let args = vec![Element::basis(p); n];
                    let a = via_derivation.evaluate(&args, &Element::basis(r));
                    let b = via_eps.evaluate(&args, &Element::basis(r)).unwrap();
                    assert_eq!(a, b, "n={n} r={r} p={p}");
                }
            }
        }
        // ⟨x²,x²; x⁴⟩ two ways: x⁴·D²(x⁴)/2! = 6x⁶ and C(4,2)x⁶ = 6x⁶.
        let args = vec![Element::basis(2), Element::basis(2)];
        let v = via_derivation.evaluate(&args, &Element::basis(4));
        assert_eq!(v, Element::term(6, Scalar::from_int(6)));
    }
}
