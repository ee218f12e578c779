//! The associative, Baxter and dendriform structures on `End(A)⊕A⊕A*`.
//!
//! For finite-dimensional `A`, `End(A) ≅ A⊗A*` via `(a⋈f)(b) = f(b)a`, so
//! the space `End(A)⊕A⊕A*` is the carrier of the Drinfeld double and
//! inherits its algebra structure. The Baxter operator
//!
//! ```text
//! β(a) = R_a,   β(f) = L_f,   β(T) = id∗T
//! ```
//!
//! coincides with `x ↦ Σᵢ eᵢxfᵢ` for the canonical element of the double,
//! and the induced dendriform structure has the explicit mixed table
//! implemented by [`triple_dendriform`] in terms of the six endomorphisms
//!
//! ```text
//! L_a(x) = ax    R_a(x) = xa    L_f(x) = f(x₂)x₁
//! R_f(x) = f(x₁)x₂    P_a(x) = x₁ax₂    P_f(x) = f(x₂)x₁x₃
//! ```
//!
//! and the convolution `T∗S = μ(T⊗S)Δ`. The `End(A)` corner is closed
//! under both operations ([`end_dendriform`]), and for quasitriangular `A`
//! the evaluation map `π(T) = Σᵢ T(uᵢ)vᵢ` is a morphism of dendriform
//! algebras onto `A`.

use crate::derived::BilinearOp;
use crate::double::{drinfeld_double_with_cap, DoubleBlock, DrinfeldDouble};
use crate::error::Result;
use crate::linalg::LinearMap;
use crate::quasi::{BaxterOp, QuasiTriangular};
use crate::structures::{convolution_of_maps, Algebra, DenseBialgebra, EpsBialgebra};
use crate::tensor::{Element, Idx};

/// The six basic endomorphisms attached to elements and functionals.
pub struct EndHelpers<'a> {
    pub alg: &'a DenseBialgebra,
}

impl EndHelpers<'_> {
    fn n(&self) -> usize {
        self.alg.dim()
    }

    pub fn l_a(&self, a: &Element) -> LinearMap {
        self.alg.alg.left_mult(a)
    }

    pub fn r_a(&self, a: &Element) -> LinearMap {
        self.alg.alg.right_mult(a)
    }

    /// `L_f(x) = f(x₂)x₁`.
    pub fn l_f(&self, f: &Element) -> LinearMap {
        let cols: Vec<Element> = (0..self.n() as Idx)
            .map(|q| self.alg.comultiply_basis(q).pair_right(f))
            .collect();
        LinearMap::from_columns(self.n(), &cols)
    }

    /// `R_f(x) = f(x₁)x₂`.
    pub fn r_f(&self, f: &Element) -> LinearMap {
        let cols: Vec<Element> = (0..self.n() as Idx)
            .map(|q| self.alg.comultiply_basis(q).pair_left(f))
            .collect();
        LinearMap::from_columns(self.n(), &cols)
    }

    /// `P_a(x) = x₁ax₂`.
    pub fn p_a(&self, a: &Element) -> LinearMap {
        let cols: Vec<Element> = (0..self.n() as Idx)
            .map(|q| {
                let mut out = Element::new();
                for (&(p, s), c) in self.alg.comultiply_basis(q).iter() {
                    let chain = self.alg.product_chain(&[
                        Element::basis(p),
                        a.clone(),
                        Element::basis(s),
                    ]);
                    for (&k, d) in chain.iter() {
                        out.add_to(k, c * d);
                    }
                }
                out
            })
            .collect();
        LinearMap::from_columns(self.n(), &cols)
    }

    /// `P_f(x) = f(x₂)x₁x₃`.
    pub fn p_f(&self, f: &Element) -> LinearMap {
        let cols: Vec<Element> = (0..self.n() as Idx)
            .map(|q| {
                let mut out = Element::new();
                for (key, c) in self.alg.iterated_coproduct(q, 2).iter() {
                    let (x1, x2, x3) = (key[0], key[1], key[2]);
                    let fx2 = f.coeff(&x2);
                    if fx2.is_zero() {
                        continue;
                    }
                    for (&k, d) in self.alg.multiply_basis(x1, x3).iter() {
                        out.add_to(k, &(c * d) * &fx2);
                    }
                }
                out
            })
            .collect();
        LinearMap::from_columns(self.n(), &cols)
    }

    /// Covector `f∘T` of a functional and an endomorphism.
    pub fn compose_functional(&self, f: &Element, t: &LinearMap) -> Element {
        let mut out = Element::new();
        for q in 0..self.n() as Idx {
            let v = f.pair(&t.column(q as usize));
            out.add_to(q, v);
        }
        out
    }
}

/// A value in `End(A)⊕A⊕A*`, prior to embedding in double coordinates.
#[derive(Default)]
struct TripleValue {
    base: Element,
    dual: Element,
    endo: Option<LinearMap>,
}

impl TripleValue {
    fn endo(m: LinearMap) -> Self {
        TripleValue { base: Element::new(), dual: Element::new(), endo: Some(m) }
    }

    fn add_endo(mut self, m: LinearMap) -> Self {
        self.endo = Some(match self.endo {
            Some(e) => e.add(&m),
            None => m,
        });
        self
    }

    fn with_base(mut self, e: Element) -> Self {
        self.base = self.base.add(&e);
        self
    }

    fn with_dual(mut self, f: Element) -> Self {
        self.dual = self.dual.add(&f);
        self
    }

    fn embed(self, dd: &DrinfeldDouble) -> Element {
        let mut out = dd.embed_base(&self.base).add(&dd.embed_dual(&self.dual));
        if let Some(m) = self.endo {
            for p in 0..m.rows() as Idx {
                for q in 0..m.cols() as Idx {
                    let c = m.get(p as usize, q as usize);
                    if !c.is_zero() {
                        out.add_to(dd.pair_index(p, q), c.clone());
                    }
                }
            }
        }
        out
    }
}

/// Convolution powers with the identity: `(id∗T, T∗id, id∗T∗id)`.
fn convolutions(alg: &DenseBialgebra, t: &LinearMap) -> Result<(LinearMap, LinearMap, LinearMap)> {
    let id = LinearMap::identity(alg.dim());
    let id_t = convolution_of_maps(&id, t, alg)?;
    let t_id = convolution_of_maps(t, &id, alg)?;
    let id_t_id = convolution_of_maps(&id_t, &id, alg)?;
    Ok((id_t, t_id, id_t_id))
}

/// The Baxter operator `β(a) = R_a`, `β(f) = L_f`, `β(T) = id∗T` on the
/// double's carrier.
pub fn end_baxter(alg: &DenseBialgebra) -> Result<BaxterOp> {
    let dd = drinfeld_double_with_cap(alg, None)?;
    let helpers = EndHelpers { alg };
    let mut cols: Vec<Element> = Vec::with_capacity(dd.dim());
    for idx in 0..dd.dim() as Idx {
        let v = match dd.block(idx) {
            DoubleBlock::Base(i) => {
                TripleValue::endo(helpers.r_a(&Element::basis(i)))
            }
            DoubleBlock::Dual(j) => {
                TripleValue::endo(helpers.l_f(&Element::basis(j)))
            }
            DoubleBlock::Pair(i, j) => {
                let t = matrix_unit(alg.dim(), i, j);
                let (id_t, _, _) = convolutions(alg, &t)?;
                TripleValue::endo(id_t)
            }
        };
        cols.push(v.embed(&dd));
    }
    Ok(BaxterOp {
        carrier: dd.bialgebra.alg.clone(),
        beta: LinearMap::from_columns(dd.dim(), &cols),
    })
}

fn matrix_unit(n: usize, row: Idx, col: Idx) -> LinearMap {
    let mut m = LinearMap::zero(n, n);
    m.set(row as usize, col as usize, crate::scalar::Scalar::one());
    m
}

/// The explicit dendriform table on `End(A)⊕A⊕A*`, block by block.
/// Agrees entrywise with the dendriform structure of the double's Baxter
/// operator; that equality is this module's central regression oracle.
pub fn triple_dendriform(alg: &DenseBialgebra) -> Result<(BilinearOp, BilinearOp)> {
    let dd = drinfeld_double_with_cap(alg, None)?;
    let h = EndHelpers { alg };
    let n = alg.dim();
    let dim = dd.dim() as Idx;

    let mut succ = BilinearOp::new();
    let mut prec = BilinearOp::new();
    for xi in 0..dim {
        for yi in 0..dim {
            let (s, p): (TripleValue, TripleValue) = match (dd.block(xi), dd.block(yi)) {
                (DoubleBlock::Base(a), DoubleBlock::Base(b)) => {
                    let ea = Element::basis(a);
                    let eb = Element::basis(b);
                    // a≻b = P_a(b) + R_aL_b ;  a≺b = L_aR_b
                    let s = TripleValue::endo(h.r_a(&ea).compose(&h.l_a(&eb)))
                        .with_base(h.p_a(&ea).apply(&eb));
                    let p = TripleValue::endo(h.l_a(&ea).compose(&h.r_a(&eb)));
                    (s, p)
                }
                (DoubleBlock::Dual(f), DoubleBlock::Base(a)) => {
                    let ef = Element::basis(f);
                    let ea = Element::basis(a);
                    // f≻a = P_f(a) + L_fL_a ;  f≺a = fP_a + R_fR_a
                    let s = TripleValue::endo(h.l_f(&ef).compose(&h.l_a(&ea)))
                        .with_base(h.p_f(&ef).apply(&ea));
                    let p = TripleValue::endo(h.r_f(&ef).compose(&h.r_a(&ea)))
                        .with_dual(h.compose_functional(&ef, &h.p_a(&ea)));
                    (s, p)
                }
                (DoubleBlock::Base(a), DoubleBlock::Dual(f)) => {
                    let ea = Element::basis(a);
                    let ef = Element::basis(f);
                    // a≻f = R_aR_f ;  a≺f = L_aL_f
                    let s = TripleValue::endo(h.r_a(&ea).compose(&h.r_f(&ef)));
                    let p = TripleValue::endo(h.l_a(&ea).compose(&h.l_f(&ef)));
                    (s, p)
                }
                (DoubleBlock::Dual(f), DoubleBlock::Dual(g)) => {
                    let ef = Element::basis(f);
                    let eg = Element::basis(g);
                    // f≻g = L_fR_g ;  f≺g = fP_g + R_fL_g
                    let s = TripleValue::endo(h.l_f(&ef).compose(&h.r_f(&eg)));
                    let p = TripleValue::endo(h.r_f(&ef).compose(&h.l_f(&eg)))
                        .with_dual(h.compose_functional(&ef, &h.p_f(&eg)));
                    (s, p)
                }
                (DoubleBlock::Base(a), DoubleBlock::Pair(i, j)) => {
                    let ea = Element::basis(a);
                    let t = matrix_unit(n, i, j);
                    let (id_t, t_id, _) = convolutions(alg, &t)?;
                    // a≻T = P_aT + R_a(T∗id) ;  a≺T = L_a(id∗T)
                    let s = TripleValue::endo(
                        h.p_a(&ea).compose(&t).add(&h.r_a(&ea).compose(&t_id)),
                    );
                    let p = TripleValue::endo(h.l_a(&ea).compose(&id_t));
                    (s, p)
                }
                (DoubleBlock::Dual(f), DoubleBlock::Pair(i, j)) => {
                    let ef = Element::basis(f);
                    let t = matrix_unit(n, i, j);
                    let (id_t, t_id, id_t_id) = convolutions(alg, &t)?;
                    // f≻T = P_fT + L_f(T∗id) ;  f≺T = f(id∗T∗id) + R_f(id∗T)
                    let s = TripleValue::endo(
                        h.p_f(&ef).compose(&t).add(&h.l_f(&ef).compose(&t_id)),
                    );
                    let p = TripleValue::endo(h.r_f(&ef).compose(&id_t))
                        .with_dual(h.compose_functional(&ef, &id_t_id));
                    (s, p)
                }
                (DoubleBlock::Pair(i, j), DoubleBlock::Base(a)) => {
                    let ea = Element::basis(a);
                    let t = matrix_unit(n, i, j);
                    let (id_t, t_id, id_t_id) = convolutions(alg, &t)?;
                    // T≻a = (id∗T∗id)(a) + (id∗T)L_a ;  T≺a = TP_a + (T∗id)R_a
                    let s = TripleValue::endo(id_t.compose(&h.l_a(&ea)))
                        .with_base(id_t_id.apply(&ea));
                    let p = TripleValue::endo(
                        t.compose(&h.p_a(&ea)).add(&t_id.compose(&h.r_a(&ea))),
                    );
                    (s, p)
                }
                (DoubleBlock::Pair(i, j), DoubleBlock::Dual(f)) => {
                    let ef = Element::basis(f);
                    let t = matrix_unit(n, i, j);
                    let (id_t, t_id, _) = convolutions(alg, &t)?;
                    // T≻f = (id∗T)R_f ;  T≺f = TP_f + (T∗id)L_f
                    let s = TripleValue::endo(id_t.compose(&h.r_f(&ef)));
                    let p = TripleValue::endo(
                        t.compose(&h.p_f(&ef)).add(&t_id.compose(&h.l_f(&ef))),
                    );
                    (s, p)
                }
                (DoubleBlock::Pair(i, j), DoubleBlock::Pair(k, l)) => {
                    let t = matrix_unit(n, i, j);
                    let s_mat = matrix_unit(n, k, l);
                    let (id_t, t_id, id_t_id) = convolutions(alg, &t)?;
                    let (id_s, s_id, id_s_id) = convolutions(alg, &s_mat)?;
                    // T≻S = (id∗T∗id)S + (id∗T)(S∗id)
                    // T≺S = T(id∗S∗id) + (T∗id)(id∗S)
                    let s = TripleValue::endo(
                        id_t_id.compose(&s_mat).add(&id_t.compose(&s_id)),
                    );
                    let p = TripleValue::endo(
                        t.compose(&id_s_id).add(&t_id.compose(&id_s)),
                    );
                    (s, p)
                }
            };
            succ.set(xi, yi, s.embed(&dd));
            prec.set(xi, yi, p.embed(&dd));
        }
    }
    Ok((succ, prec))
}

/// The `End(A)` corner: `T≻S = (id∗T∗id)S + (id∗T)(S∗id)` and
/// `T≺S = T(id∗S∗id) + (T∗id)(id∗S)` on the `n²`-dimensional carrier with
/// index `(row, col) ↦ row·n + col`.
pub fn end_dendriform(alg: &DenseBialgebra) -> Result<(BilinearOp, BilinearOp)> {
    let n = alg.dim() as Idx;
    let mut succ = BilinearOp::new();
    let mut prec = BilinearOp::new();
    let embed = |m: &LinearMap| -> Element {
        let mut out = Element::new();
        for p in 0..m.rows() as Idx {
            for q in 0..m.cols() as Idx {
                let c = m.get(p as usize, q as usize);
                if !c.is_zero() {
                    out.add_to(p * n + q, c.clone());
                }
            }
        }
        out
    };
    for ti in 0..n {
        for tj in 0..n {
            let t = matrix_unit(n as usize, ti, tj);
            let (id_t, t_id, id_t_id) = convolutions(alg, &t)?;
            for si in 0..n {
                for sj in 0..n {
                    let s = matrix_unit(n as usize, si, sj);
                    let (id_s, s_id, id_s_id) = convolutions(alg, &s)?;
                    let sv = id_t_id.compose(&s).add(&id_t.compose(&s_id));
                    let pv = t.compose(&id_s_id).add(&t_id.compose(&id_s));
                    succ.set(ti * n + tj, si * n + sj, embed(&sv));
                    prec.set(ti * n + tj, si * n + sj, embed(&pv));
                }
            }
        }
    }
    Ok((succ, prec))
}

/// `T∗S` pairs of endomorphisms applied to concrete maps, exposed for
/// regression values.
pub fn end_products(
    alg: &DenseBialgebra,
    t: &LinearMap,
    s: &LinearMap,
) -> Result<(LinearMap, LinearMap)> {
    let (id_t, t_id, id_t_id) = convolutions(alg, t)?;
    let (id_s, s_id, id_s_id) = convolutions(alg, s)?;
    let succ = id_t_id.compose(s).add(&id_t.compose(&s_id));
    let prec = t.compose(&id_s_id).add(&t_id.compose(&id_s));
    Ok((succ, prec))
}

/// The evaluation projection `π: End(A)⊕A⊕A* → A` of a quasitriangular
/// structure: `π(a) = a`, `π(f) = Σᵢ f(uᵢ)vᵢ`, `π(T) = Σᵢ T(uᵢ)vᵢ`.
pub fn pi_projection(q: &QuasiTriangular) -> LinearMap {
    let n = q.dim();
    let nn = n as Idx;
    let mut cols: Vec<Element> = (0..nn).map(Element::basis).collect();
    for j in 0..nn {
        // π(fⱼ) = Σ fⱼ(uᵢ)vᵢ.
        let mut out = Element::new();
        for (&(u, v), c) in q.r.iter() {
            if u == j {
                out.add_to(v, c.clone());
            }
        }
        cols.push(out);
    }
    for p in 0..nn {
        for qq in 0..nn {
            // π(E_{p,q}) = Σ E_{p,q}(uᵢ)vᵢ = Σ_{uᵢ=q} e_p·vᵢ.
            let mut out = Element::new();
            for (&(u, v), c) in q.r.iter() {
                if u == qq {
                    for (&k, d) in q.alg.multiply_basis(p, v).iter() {
                        out.add_to(k, c * d);
                    }
                }
            }
            cols.push(out);
        }
    }
    LinearMap::from_columns(n, &cols)
}
