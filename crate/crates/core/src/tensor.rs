//! Sparse vectors and tensors over a basis-indexed free module.
//!
//! Basis indices are `i64` so that the same containers serve both the dense
//! backends (indices `0..dim`) and the ℤ-indexed Laurent backend. All
//! containers keep a canonical sparse form: a coefficient that becomes zero
//! is removed immediately, so equality is structural comparison.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Index into a basis. Dense backends use `0..dim`, the Laurent backend uses
/// the exponent itself.
pub type Idx = i64;

macro_rules! sparse_container {
    ($(#[$doc:meta])* $name:ident, $key:ty) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Default)]
        pub struct $name(BTreeMap<$key, Scalar>);

        impl $name {
            pub fn new() -> Self {
                Self(BTreeMap::new())
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_empty()
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn coeff(&self, k: &$key) -> Scalar {
                self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
            }

            pub fn iter(&self) -> impl Iterator<Item = (&$key, &Scalar)> {
                self.0.iter()
            }

            /// Adds `c` to the coefficient at `k`, dropping exact zeros.
            pub fn add_to(&mut self, k: $key, c: Scalar) {
                if c.is_zero() {
                    return;
                }
                let entry = self.0.entry(k).or_insert_with(Scalar::zero);
                *entry += c;
                if entry.is_zero() {
                    self.0.remove(&k);
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, c) in other.iter() {
                    out.add_to(*k, c.clone());
                }
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, c) in other.iter() {
                    out.add_to(*k, -c);
                }
                out
            }

            pub fn scale(&self, c: &Scalar) -> Self {
                if c.is_zero() {
                    return Self::new();
                }
                Self(self.0.iter().map(|(k, v)| (*k, c * v)).collect())
            }

            pub fn neg(&self) -> Self {
                Self(self.0.iter().map(|(k, v)| (*k, -v)).collect())
            }
        }

        impl FromIterator<($key, Scalar)> for $name {
            fn from_iter<I: IntoIterator<Item = ($key, Scalar)>>(iter: I) -> Self {
                let mut out = Self::new();
                for (k, c) in iter {
                    out.add_to(k, c);
                }
                out
            }
        }
    };
}

sparse_container!(
    /// A finitely supported vector: element of the free module on the basis.
    Element,
    Idx
);

sparse_container!(
    /// A finitely supported order-2 tensor, e.g. a coproduct value `Δ(a)` or
    /// a canonical element `r ∈ A⊗A`.
    Tensor2,
    (Idx, Idx)
);

sparse_container!(
    /// A finitely supported order-3 tensor: structure constants and residuals
    /// in `A⊗A⊗A`.
    Tensor3,
    (Idx, Idx, Idx)
);

impl Element {
    pub fn basis(i: Idx) -> Self {
        Self::from_iter([(i, Scalar::one())])
    }

    pub fn term(i: Idx, c: Scalar) -> Self {
        Self::from_iter([(i, c)])
    }

    /// Dual pairing when `self` is read as a functional on the basis.
    pub fn pair(&self, other: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in self.iter() {
            let d = other.coeff(i);
            if !d.is_zero() {
                acc += c * &d;
            }
        }
        acc
    }

    /// Renders the element against basis labels, e.g. `e0 - 2·a`.
    pub fn display_with<'a>(&'a self, label: &'a dyn Fn(Idx) -> String) -> ElementDisplay<'a> {
        ElementDisplay { el: self, label }
    }
}

impl Tensor2 {
    pub fn basis(i: Idx, j: Idx) -> Self {
        Self::from_iter([((i, j), Scalar::one())])
    }

    /// The simple tensor `x⊗y`.
    pub fn pure(x: &Element, y: &Element) -> Self {
        let mut out = Self::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_to((*i, *j), a * b);
            }
        }
        out
    }

    pub fn swap(&self) -> Self {
        self.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect()
    }

    /// Pairs a functional against the left slot: `f(t₁)·t₂`.
    pub fn pair_left(&self, f: &Element) -> Element {
        let mut out = Element::new();
        for (&(i, j), c) in self.iter() {
            let fi = f.coeff(&i);
            if !fi.is_zero() {
                out.add_to(j, c * &fi);
            }
        }
        out
    }

    /// Pairs a functional against the right slot: `f(t₂)·t₁`.
    pub fn pair_right(&self, f: &Element) -> Element {
        let mut out = Element::new();
        for (&(i, j), c) in self.iter() {
            let fj = f.coeff(&j);
            if !fj.is_zero() {
                out.add_to(i, c * &fj);
            }
        }
        out
    }
}

impl Tensor3 {
    /// Embeds a rank-2 tensor with a fixed slot left untouched.
    /// `slot` names the position (0, 1, or 2) the extra index occupies.
    pub fn from_pairs(t: &Tensor2, extra: Idx, slot: usize) -> Self {
        t.iter()
            .map(|(&(i, j), c)| {
                let key = match slot {
                    0 => (extra, i, j),
                    1 => (i, extra, j),
                    _ => (i, j, extra),
                };
                (key, c.clone())
            })
            .collect()
    }
}

/// An order-n tensor keyed by index vectors; used for iterated coproducts.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorN(BTreeMap<Vec<Idx>, Scalar>);

impl TensorN {
    pub fn new() -> Self {
        Self(BTreeMap::new())
    }

    pub fn unit(key: Vec<Idx>) -> Self {
        let mut t = Self::new();
        t.add_to(key, Scalar::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_to(&mut self, k: Vec<Idx>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Idx>, &Scalar)> {
        self.0.iter()
    }
}

pub struct ElementDisplay<'a> {
    el: &'a Element,
    label: &'a dyn Fn(Idx) -> String,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.el.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.el.iter().enumerate() {
            let name = (self.label)(*i);
            if n > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{c}·{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zeros() {
        let mut e = Element::new();
        e.add_to(3, Scalar::from_int(2));
        e.add_to(3, Scalar::from_int(-2));
        assert!(e.is_zero());
        assert_eq!(e, Element::new());
    }

    #[test]
    fn pure_tensor_and_pairing() {
        let x = Element::basis(0).add(&Element::term(1, Scalar::from_int(2)));
        let y = Element::basis(5);
        let t = Tensor2::pure(&x, &y);
        assert_eq!(t.coeff(&(1, 5)), Scalar::from_int(2));
        let f = Element::basis(1); // functional dual to e1
        assert_eq!(t.pair_left(&f), Element::term(5, Scalar::from_int(2)));
        assert_eq!(t.pair_right(&Element::basis(5)), x);
    }
}
