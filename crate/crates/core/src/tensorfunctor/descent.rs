//! Ring maps between targets, base change of modules, and descent of modules
//! over an algebra object along an algebra map to the base.

use crate::exactlinalg::CommRing;

use super::target::{SpanTester, TElem, TMatrix, TModule, TargetRing};
use super::TensorError;

/// A ring map given on generators: nothing for a field source, the image of
/// `t` for `F[t]`, the images of the basis for a finite-dimensional algebra.
/// Coefficient fields must agree and are mapped identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    source: TargetRing,
    target: TargetRing,
    images: Vec<TElem>,
}

impl RingMap {
    pub fn new(source: TargetRing, target: TargetRing, images: Vec<TElem>) -> Result<Self, TensorError> {
        if source.field() != target.field() {
            return Err(TensorError::InvalidRingMap(format!(
                "coefficient fields {} and {} differ",
                source.field(),
                target.field()
            )));
        }
        let expected = match &source {
            TargetRing::Field(_) => 0,
            TargetRing::Univariate(_) => 1,
            TargetRing::FinDim(a) => a.dim(),
        };
        if images.len() != expected {
            return Err(TensorError::InvalidRingMap(format!(
                "{source} needs {expected} generator images, got {}",
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|e| !target.contains(e)) {
            return Err(TensorError::InvalidRingMap(format!("{bad} is not in {target}")));
        }
        let map = RingMap {
            source,
            target,
            images,
        };
        if let TargetRing::FinDim(a) = &map.source {
            let tr = &map.target;
            if map.apply(&map.source.one()) != tr.one() {
                return Err(TensorError::InvalidRingMap("unit is not sent to 1".into()));
            }
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let lhs = map.apply(&TElem::Vector(a.mul(&a.basis(i), &a.basis(j))));
                    let rhs = tr.mul(&map.images[i], &map.images[j]);
                    if lhs != rhs {
                        return Err(TensorError::InvalidRingMap(format!(
                            "images of b{i} and b{j} do not multiply compatibly"
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    pub fn identity(ring: &TargetRing) -> Self {
        let images = match ring {
            TargetRing::Field(_) => Vec::new(),
            TargetRing::Univariate(_) => vec![ring.t().expect("univariate")],
            TargetRing::FinDim(a) => (0..a.dim()).map(|k| ring.basis_elem(k)).collect(),
        };
        RingMap {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    pub fn source(&self) -> &TargetRing {
        &self.source
    }

    pub fn target(&self) -> &TargetRing {
        &self.target
    }

    pub fn images(&self) -> &[TElem] {
        &self.images
    }

    pub fn apply(&self, e: &TElem) -> TElem {
        let tr = &self.target;
        match e {
            TElem::Scalar(c) => tr.from_scalar(c),
            TElem::Poly(p) => p.eval_in(tr, &self.images[0]),
            TElem::Vector(v) => v.iter().zip(&self.images).fold(tr.zero(), |acc, (c, img)| {
                tr.add(&acc, &tr.mul(&tr.from_scalar(c), img))
            }),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &RingMap) -> Result<RingMap, TensorError> {
        if first.target != self.source {
            return Err(TensorError::InvalidRingMap("maps are not composable".into()));
        }
        let images = first.images.iter().map(|e| self.apply(e)).collect();
        RingMap::new(first.source.clone(), self.target.clone(), images)
    }

    pub fn apply_matrix(&self, m: &TMatrix) -> TMatrix {
        m.map_entries(self.target.clone(), |e| self.apply(e))
    }
}

/// Pullback of a module along a ring map: the presentation entries are
/// mapped through it.
pub fn base_change(f: &RingMap, m: &TModule) -> Result<TModule, TensorError> {
    if m.ring() != f.source() {
        return Err(TensorError::RingMismatch(format!(
            "module over {} cannot be pulled back along a map from {}",
            m.ring(),
            f.source()
        )));
    }
    Ok(TModule::new(f.apply_matrix(m.rels())))
}

/// A commutative algebra object in modules over a target ring: a carrier
/// with unit `u` (a vector over the generators) and multiplication given by
/// the images of `e_i ⊗ e_j`, column `i * r + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraObject {
    carrier: TModule,
    unit: Vec<TElem>,
    mult: TMatrix,
}

impl AlgebraObject {
    /// Checks that the multiplication is well defined on the cokernel and
    /// that unitality, commutativity and associativity hold modulo the
    /// relations of the carrier.
    pub fn new(carrier: TModule, unit: Vec<TElem>, mult: TMatrix) -> Result<Self, TensorError> {
        let r = carrier.gens();
        if unit.len() != r || mult.rows() != r || mult.cols() != r * r {
            return Err(TensorError::InvalidAlgebra(format!(
                "algebra data on {r} generators needs a unit of length {r} and a {r}x{} product",
                r * r
            )));
        }
        let alg = AlgebraObject {
            carrier,
            unit,
            mult,
        };
        let ring = alg.ring().clone();
        let tester = SpanTester::new(alg.carrier.rels());
        let zero_mod = |v: &[TElem]| tester.contains(v);
        let e = |i: usize| unit_vector(&ring, r, i);
        let err = |what: String| Err(TensorError::InvalidAlgebra(what));

        let rels = alg.carrier.rels();
        for c in 0..rels.cols() {
            let rel = rels.column(c);
            for j in 0..r {
                if !zero_mod(&alg.multiply(&rel, &e(j))) {
                    return err(format!("product of relation {c} with e{j} is nonzero"));
                }
            }
        }
        for j in 0..r {
            if !zero_mod(&sub(&ring, &alg.multiply(&alg.unit, &e(j)), &e(j))) {
                return err(format!("unit does not fix e{j}"));
            }
            for i in 0..r {
                let ij = alg.multiply(&e(i), &e(j));
                if !zero_mod(&sub(&ring, &ij, &alg.multiply(&e(j), &e(i)))) {
                    return err(format!("e{i}*e{j} != e{j}*e{i}"));
                }
                for k in 0..r {
                    let left = alg.multiply(&ij, &e(k));
                    let right = alg.multiply(&e(i), &alg.multiply(&e(j), &e(k)));
                    if !zero_mod(&sub(&ring, &left, &right)) {
                        return err(format!("(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})"));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// The ring itself: free of rank one, unit `1`, product `1 * 1 = 1`.
    pub fn unit_algebra(ring: &TargetRing) -> Self {
        AlgebraObject {
            carrier: TModule::free(ring.clone(), 1),
            unit: vec![ring.one()],
            mult: TMatrix::identity(ring.clone(), 1),
        }
    }

    pub fn ring(&self) -> &TargetRing {
        self.carrier.ring()
    }

    pub fn carrier(&self) -> &TModule {
        &self.carrier
    }

    pub fn unit(&self) -> &[TElem] {
        &self.unit
    }

    pub fn mult(&self) -> &TMatrix {
        &self.mult
    }

    /// Bilinear product of two vectors over the generators.
    pub fn multiply(&self, x: &[TElem], y: &[TElem]) -> Vec<TElem> {
        bilinear(&self.mult, x, y)
    }

    pub fn base_change(&self, f: &RingMap) -> Result<AlgebraObject, TensorError> {
        Ok(AlgebraObject {
            carrier: base_change(f, &self.carrier)?,
            unit: self.unit.iter().map(|e| f.apply(e)).collect(),
            mult: f.apply_matrix(&self.mult),
        })
    }
}

/// A module over an [`AlgebraObject`]: the action sends `e_i ⊗ x_j` to
/// column `i * g + j`, `g` the number of generators of the underlying module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule {
    algebra: AlgebraObject,
    underlying: TModule,
    action: TMatrix,
}

impl AModule {
    pub fn new(algebra: AlgebraObject, underlying: TModule, action: TMatrix) -> Result<Self, TensorError> {
        let r = algebra.carrier.gens();
        let g = underlying.gens();
        let bad = |what: String| Err(TensorError::InvalidModuleStructure(what));
        if underlying.ring() != algebra.ring() {
            return bad("module and algebra live over different rings".into());
        }
        if action.rows() != g || action.cols() != r * g {
            return bad(format!("action must be {g}x{}", r * g));
        }
        let m = AModule {
            algebra,
            underlying,
            action,
        };
        let ring = m.underlying.ring().clone();
        let tester = SpanTester::new(m.underlying.rels());
        let zero_mod = |v: &[TElem]| tester.contains(v);
        let ea = |i: usize| unit_vector(&ring, r, i);
        let ex = |j: usize| unit_vector(&ring, g, j);

        let arels = m.algebra.carrier.rels();
        for c in 0..arels.cols() {
            for j in 0..g {
                if !zero_mod(&m.act(&arels.column(c), &ex(j))) {
                    return bad(format!("algebra relation {c} acts nontrivially on x{j}"));
                }
            }
        }
        let mrels = m.underlying.rels();
        for c in 0..mrels.cols() {
            for i in 0..r {
                if !zero_mod(&m.act(&ea(i), &mrels.column(c))) {
                    return bad(format!("e{i} does not preserve relation {c}"));
                }
            }
        }
        for j in 0..g {
            if !zero_mod(&sub(&ring, &m.act(&m.algebra.unit, &ex(j)), &ex(j))) {
                return bad(format!("unit does not fix x{j}"));
            }
            for i in 0..r {
                for k in 0..r {
                    let left = m.act(&m.algebra.multiply(&ea(i), &ea(k)), &ex(j));
                    let right = m.act(&ea(i), &m.act(&ea(k), &ex(j)));
                    if !zero_mod(&sub(&ring, &left, &right)) {
                        return bad(format!("(e{i}*e{k})*x{j} != e{i}*(e{k}*x{j})"));
                    }
                }
            }
        }
        Ok(m)
    }

    /// The algebra acting on itself.
    pub fn regular(algebra: &AlgebraObject) -> Self {
        AModule {
            algebra: algebra.clone(),
            underlying: algebra.carrier.clone(),
            action: algebra.mult.clone(),
        }
    }

    pub fn algebra(&self) -> &AlgebraObject {
        &self.algebra
    }

    pub fn underlying(&self) -> &TModule {
        &self.underlying
    }

    pub fn action(&self) -> &TMatrix {
        &self.action
    }

    pub fn act(&self, a: &[TElem], x: &[TElem]) -> Vec<TElem> {
        bilinear(&self.action, a, x)
    }
}

/// An algebra map from an algebra object to the ring it lives over, given by
/// the images of the carrier generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub images: Vec<TElem>,
}

impl AlgebraMap {
    /// Checks that relations map to zero, the unit to `1`, and products to
    /// products.
    pub fn check(&self, a: &AlgebraObject) -> Result<(), TensorError> {
        let ring = a.ring();
        let r = a.carrier.gens();
        let bad = |what: String| Err(TensorError::InvalidAlgebraMap(what));
        if self.images.len() != r || !self.images.iter().all(|e| ring.contains(e)) {
            return bad(format!("need {r} images in {ring}"));
        }
        let eval = |v: &[TElem]| {
            v.iter()
                .zip(&self.images)
                .fold(ring.zero(), |acc, (c, s)| ring.add(&acc, &ring.mul(c, s)))
        };
        let rels = a.carrier.rels();
        for c in 0..rels.cols() {
            if !ring.is_zero(&eval(&rels.column(c))) {
                return bad(format!("relation {c} is not sent to zero"));
            }
        }
        if eval(&a.unit) != ring.one() {
            return bad("unit is not sent to 1".into());
        }
        for i in 0..r {
            for j in 0..r {
                let prod = eval(&a.multiply(&unit_vector(ring, r, i), &unit_vector(ring, r, j)));
                if prod != ring.mul(&self.images[i], &self.images[j]) {
                    return bad(format!("e{i}*e{j} is not sent to the product of images"));
                }
            }
        }
        Ok(())
    }
}

/// Descends an `A`-module along `sigma: f^*A -> T''`.
///
/// The result is `f^*(underlying)` with the two actions of `f^*A`
/// identified through `sigma`: for every algebra generator `e_i` and module
/// generator `x_j` the relation `f(e_i · x_j) - sigma(e_i) x_j` is appended
/// (zero columns are skipped).
pub fn descend_module(
    f: &RingMap,
    a: &AlgebraObject,
    sigma: &AlgebraMap,
    m: &AModule,
) -> Result<TModule, TensorError> {
    if m.algebra() != a {
        return Err(TensorError::InvalidModuleStructure(
            "module is over a different algebra".into(),
        ));
    }
    let pulled = a.base_change(f)?;
    sigma.check(&pulled)?;
    let base = base_change(f, m.underlying())?;
    let ring = f.target().clone();
    let g = base.gens();
    let action = f.apply_matrix(m.action());
    let mut extra = Vec::new();
    for (i, s) in sigma.images.iter().enumerate() {
        for j in 0..g {
            let mut col = action.column(i * g + j);
            col[j] = ring.sub(&col[j], s);
            if !col.iter().all(|e| ring.is_zero(e)) {
                extra.push(col);
            }
        }
    }
    let extra = TMatrix::from_columns(ring, g, extra);
    Ok(TModule::new(base.rels().hstack(&extra)))
}

fn unit_vector(ring: &TargetRing, n: usize, i: usize) -> Vec<TElem> {
    let mut v = vec![ring.zero(); n];
    v[i] = ring.one();
    v
}

fn sub(ring: &TargetRing, a: &[TElem], b: &[TElem]) -> Vec<TElem> {
    a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect()
}

/// `sum_{i,j} x_i y_j * column(i * len(y) + j)`.
fn bilinear(m: &TMatrix, x: &[TElem], y: &[TElem]) -> Vec<TElem> {
    let ring = m.ring();
    let mut out = vec![ring.zero(); m.rows()];
    for (i, xi) in x.iter().enumerate() {
        if ring.is_zero(xi) {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if ring.is_zero(yj) {
                continue;
            }
            let c = ring.mul(xi, yj);
            for (r, o) in out.iter_mut().enumerate() {
                let e = m.get(r, i * y.len() + j);
                if !ring.is_zero(e) {
                    *o = ring.add(o, &ring.mul(&c, e));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{Field, UPoly};
    use crate::tensorfunctor::Classification;

    fn q() -> Field {
        Field::Rationals
    }

    fn p(c: &[i64]) -> TElem {
        TElem::Poly(UPoly::from_i64(q(), c))
    }

    #[test]
    fn evaluation_at_zero_kills_t_squared() {
        let qt = TargetRing::Univariate(q());
        let f = RingMap::new(qt.clone(), TargetRing::Field(q()), vec![TElem::Scalar(q().zero())]).unwrap();
        let m = TModule::new(TMatrix::from_rows(qt.clone(), vec![vec![p(&[0, 0, 1])]]));
        assert_eq!(base_change(&f, &m).unwrap().classify(), Classification::Dimension(1));
        assert_eq!(base_change(&RingMap::identity(&qt), &m).unwrap(), m);
    }

    #[test]
    fn ring_map_checks() {
        let qt = TargetRing::Univariate(q());
        let gf = TargetRing::Field(Field::prime(7).unwrap());
        assert!(RingMap::new(qt.clone(), gf, vec![]).is_err());
        let dual = TargetRing::algebra(
            crate::tensorfunctor::FinDimAlgebra::truncated_polynomials(q(), 2).unwrap(),
        );
        // eps |-> t does not square to zero.
        let bad = RingMap::new(dual.clone(), qt.clone(), vec![p(&[1]), p(&[0, 1])]);
        assert!(matches!(bad, Err(TensorError::InvalidRingMap(_))));
        let ok = RingMap::new(dual, TargetRing::Field(q()), vec![TElem::Scalar(q().one()), TElem::Scalar(q().zero())]);
        assert!(ok.is_ok());
    }

    #[test]
    fn descent_through_the_unit_algebra_is_base_change() {
        let qt = TargetRing::Univariate(q());
        let a = AlgebraObject::unit_algebra(&qt);
        let n = TModule::new(TMatrix::from_rows(qt.clone(), vec![vec![p(&[0, 1])]]));
        let m = AModule::new(a.clone(), n.clone(), TMatrix::identity(qt.clone(), 1)).unwrap();
        let f = RingMap::identity(&qt);
        let sigma = AlgebraMap { images: vec![qt.one()] };
        assert_eq!(descend_module(&f, &a, &sigma, &m).unwrap(), base_change(&f, &n).unwrap());
    }

    #[test]
    fn descent_of_rank_two_algebra() {
        let qt = TargetRing::Univariate(q());
        let (o, z) = (p(&[1]), p(&[0]));
        let mult = TMatrix::from_rows(
            qt.clone(),
            vec![
                vec![o.clone(), z.clone(), z.clone(), o.clone()],
                vec![z.clone(), o.clone(), o.clone(), z.clone()],
            ],
        );
        let a = AlgebraObject::new(TModule::free(qt.clone(), 2), vec![o.clone(), z.clone()], mult).unwrap();
        let m = AModule::regular(&a);
        let sigma = AlgebraMap { images: vec![o.clone(), o.clone()] };
        let out = descend_module(&RingMap::identity(&qt), &a, &sigma, &m).unwrap();
        assert_eq!(out.classify(), Classification::Pid { free_rank: 1, torsion: vec![] });
        let bad_sigma = AlgebraMap { images: vec![o.clone(), p(&[2])] };
        assert!(matches!(
            descend_module(&RingMap::identity(&qt), &a, &bad_sigma, &m),
            Err(TensorError::InvalidAlgebraMap(_))
        ));
    }

    #[test]
    fn non_associative_product_is_rejected() {
        let qt = TargetRing::Univariate(q());
        let (o, z) = (p(&[1]), p(&[0]));
        // e0 is meant as the unit but e0*e1 = 0.
        let mult = TMatrix::from_rows(
            qt.clone(),
            vec![vec![o.clone(), z.clone(), z.clone(), p(&[2])], vec![z.clone(), z.clone(), z.clone(), z.clone()]],
        );
        assert!(AlgebraObject::new(TModule::free(qt, 2), vec![o, z], mult).is_err());
    }
}
