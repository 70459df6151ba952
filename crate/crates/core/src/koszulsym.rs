//! Explicit presentations built from Koszul-type relations.
//!
//! For `a + d >= 0` the truncation `S(d)_{>=a}` is presented as
//!
//! ```text
//! S(-a-1)^{H_{a+d-1} x pairs}  -->  S(-a)^{H_{a+d}}  -->  S(d)_{>=a}  -->  0
//!     e_{q,i,j} |-> x_i e_{x_j q} - x_j e_{x_i q}       e_p |-> p
//! ```
//!
//! with `0 <= i < j <= n`. Generators follow the monomial basis order of
//! `H_{a+d}`; relation columns run over `q` in basis order, then over pairs
//! `(i, j)` lexicographically. A graded map out of the truncation is the same
//! thing as a tuple `(m_p)` of degree-`a` elements satisfying
//! `x_i m_{x_j q} = x_j m_{x_i q}`; [`PhiExtension`] rebuilds the map degree
//! by degree from such a tuple.
//!
//! Symmetric powers of a cokernel `coker(X -> Y)` with `Y` free are presented
//! as `coker(X ⊗ Sym^{k-1} Y -> Sym^k Y)`, with bases of `Sym^k Y` indexed by
//! sorted multisets of generator indices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::grmod::{FPGradedModule, GrModError, GradedFree, GradedMatrix, GradedModuleMap};
use crate::polyring::{HomPoly, Monomial, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error(transparent)]
    Graded(#[from] GrModError),
    #[error("tuple violates x{i}*m[x{j}*{q}] = x{j}*m[x{i}*{q}]")]
    IncompatibleTuple { q: Monomial, i: usize, j: usize },
    #[error("malformed tuple: {0}")]
    TupleShape(String),
    #[error("a + d = {} < 0: the truncation is all of S(d) and no tuple determines a map", a + d)]
    FullTwist { a: i64, d: i64 },
}

/// Label `(q, i, j)` of a Koszul relation column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationLabel {
    pub q: Monomial,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.q, self.i, self.j)
    }
}

/// Presentation of `S(d)_{>=a}` together with its inclusion into `S(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationPresentation {
    ring: PolyRing,
    a: i64,
    d: i64,
    module: FPGradedModule,
    inclusion: GradedModuleMap,
    generators: Vec<Monomial>,
    relations: Vec<RelationLabel>,
}

impl TruncationPresentation {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The truncation as a finitely presented module.
    pub fn module(&self) -> &FPGradedModule {
        &self.module
    }

    pub fn inclusion(&self) -> &GradedModuleMap {
        &self.inclusion
    }

    /// `H_{a+d}`, the labels `p` of the generators `e_p`. Empty when
    /// `a + d < 0`, where the single generator is that of `S(d)`.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn relations(&self) -> &[RelationLabel] {
        &self.relations
    }

    /// Whether the truncation is all of `S(d)` (the case `a + d < 0`).
    pub fn is_full(&self) -> bool {
        self.a + self.d < 0
    }

    /// `relations -> generators -> S(d)` as maps between free modules.
    pub fn exact_sequence(&self) -> [GradedModuleMap; 2] {
        let rels = self.module.rels();
        let rel_free = FPGradedModule::free(self.ring, rels.source().twists().to_vec());
        let gen_free = FPGradedModule::free(self.ring, self.module.gens().twists().to_vec());
        let first = GradedModuleMap::new(rel_free, gen_free.clone(), rels.clone())
            .expect("maps between free modules are well defined");
        let second = GradedModuleMap::new(
            gen_free,
            self.inclusion.target().clone(),
            self.inclusion.matrix().clone(),
        )
        .expect("maps between free modules are well defined");
        [first, second]
    }
}

/// All pairs `0 <= i < j < nvars`, lexicographic.
fn index_pairs(nvars: usize) -> Vec<(usize, usize)> {
    (0..nvars)
        .flat_map(|i| (i + 1..nvars).map(move |j| (i, j)))
        .collect()
}

/// Builds the presentation of `S(d)_{>=a}` over `ring`.
pub fn truncation_presentation(ring: PolyRing, a: i64, d: i64) -> TruncationPresentation {
    let target = FPGradedModule::free(ring, vec![d]);
    if a + d < 0 {
        return TruncationPresentation {
            ring,
            a,
            d,
            module: target.clone(),
            inclusion: GradedModuleMap::identity(&target),
            generators: Vec::new(),
            relations: Vec::new(),
        };
    }
    let generators = ring.monomials(a + d);
    let gens = GradedFree::new(vec![-a; generators.len()]);
    let mut relations = Vec::new();
    let mut columns = Vec::new();
    for q in ring.monomials(a + d - 1) {
        for (i, j) in index_pairs(ring.nvars) {
            let mut col: Vec<HomPoly> = (0..generators.len()).map(|_| ring.zero(1)).collect();
            col[q.mul_var(j).index()] = ring.var(i);
            col[q.mul_var(i).index()] = ring.var(j).neg();
            columns.push((-a - 1, col));
            relations.push(RelationLabel { q: q.clone(), i, j });
        }
    }
    let rels = GradedMatrix::from_columns(ring, gens.clone(), columns)
        .expect("Koszul entries have degree one");
    let module = FPGradedModule::new(rels);
    let incl = GradedMatrix::new(
        ring,
        gens,
        GradedFree::new(vec![d]),
        vec![generators.iter().map(|p| ring.monomial(p.clone())).collect()],
    )
    .expect("e_p |-> p has degree a + d");
    let inclusion =
        GradedModuleMap::new(module.clone(), target, incl).expect("Koszul relations map to zero");
    TruncationPresentation {
        ring,
        a,
        d,
        module,
        inclusion,
        generators,
        relations,
    }
}

/// A tuple `(m_p)` indexed by `H_{a+d}`. Each value is a degree-`a` element
/// of a target module, written as one polynomial per target generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionTuple {
    pub a: i64,
    pub d: i64,
    pub values: BTreeMap<Monomial, Vec<HomPoly>>,
}

impl SectionTuple {
    pub fn new(a: i64, d: i64, values: BTreeMap<Monomial, Vec<HomPoly>>) -> Self {
        SectionTuple { a, d, values }
    }

    /// Pairs the values with `H_{a+d}` in basis order.
    pub fn from_ordered(ring: &PolyRing, a: i64, d: i64, values: Vec<Vec<HomPoly>>) -> Self {
        let keys = ring.monomials(a + d);
        assert_eq!(keys.len(), values.len(), "one value per monomial of H_(a+d)");
        SectionTuple::new(a, d, keys.into_iter().zip(values).collect())
    }
}

/// The graded map out of a truncation determined by a compatible tuple,
/// with the degree-by-degree recursion that constructs it.
#[derive(Clone, Debug)]
pub struct PhiExtension {
    truncation: TruncationPresentation,
    tuple: SectionTuple,
    map: GradedModuleMap,
}

impl PhiExtension {
    /// Validates the tuple against the Koszul relations and builds the map
    /// `e_p |-> m_p`.
    pub fn new(
        t: &TruncationPresentation,
        target: &FPGradedModule,
        tuple: &SectionTuple,
    ) -> Result<Self, KoszulError> {
        if t.is_full() {
            return Err(KoszulError::FullTwist { a: t.a, d: t.d });
        }
        if tuple.a != t.a || tuple.d != t.d {
            return Err(KoszulError::TupleShape(format!(
                "tuple is for (a, d) = ({}, {}), truncation for ({}, {})",
                tuple.a, tuple.d, t.a, t.d
            )));
        }
        let mut columns = Vec::with_capacity(t.generators.len());
        for p in &t.generators {
            let value = tuple
                .values
                .get(p)
                .ok_or_else(|| KoszulError::TupleShape(format!("no value for {p}")))?;
            if value.len() != target.gens().rank() {
                return Err(KoszulError::TupleShape(format!(
                    "value for {p} has {} components, target has {} generators",
                    value.len(),
                    target.gens().rank()
                )));
            }
            columns.push((-t.a, value.clone()));
        }
        if tuple.values.len() != t.generators.len() {
            return Err(KoszulError::TupleShape("tuple has extra keys".into()));
        }
        let matrix = GradedMatrix::from_columns(t.ring, target.gens().clone(), columns)?;
        let map = match GradedModuleMap::new(t.module.clone(), target.clone(), matrix) {
            Ok(m) => m,
            Err(GrModError::IllDefinedMap { column, .. }) => {
                let RelationLabel { q, i, j } = t.relations[column].clone();
                return Err(KoszulError::IncompatibleTuple { q, i, j });
            }
            Err(e) => return Err(e.into()),
        };
        Ok(PhiExtension {
            truncation: t.clone(),
            tuple: tuple.clone(),
            map,
        })
    }

    pub fn map(&self) -> &GradedModuleMap {
        &self.map
    }

    /// `phi(mono)` for a monomial of `S(d)` of degree `k + d`.
    ///
    /// For `k < a` the value is zero; for `k = a` it is `m_mono`; above, the
    /// smallest-index variable `x_s` dividing `mono` is peeled off and
    /// `phi(mono) = x_s * phi(mono / x_s)`.
    pub fn evaluate(&self, mono: &Monomial) -> Vec<HomPoly> {
        let a = self.truncation.a;
        let d = self.truncation.d;
        let k = mono.degree() as i64 - d;
        let target = self.map.target();
        let ring = self.truncation.ring;
        if k < a {
            return target
                .gens()
                .twists()
                .iter()
                .map(|t| ring.zero((k + t).max(0) as u32))
                .collect();
        }
        if k == a {
            return self.tuple.values[mono].clone();
        }
        let s = mono.first_var().expect("positive degree above a + d >= 0");
        let below = self.evaluate(&mono.div_var(s).expect("x_s divides mono"));
        let xs = Monomial::var(ring.nvars, s);
        below.iter().map(|c| c.mul_monomial(&xs)).collect()
    }
}

/// The unique graded map from the truncation with `e_p |-> m_p`.
pub fn phi_extend(
    t: &TruncationPresentation,
    target: &FPGradedModule,
    tuple: &SectionTuple,
) -> Result<GradedModuleMap, KoszulError> {
    Ok(PhiExtension::new(t, target, tuple)?.map)
}

/// Runs the recursion for a single monomial after validating the tuple.
pub fn evaluate_phi_recursive(
    t: &TruncationPresentation,
    tuple: &SectionTuple,
    target: &FPGradedModule,
    mono: &Monomial,
) -> Result<Vec<HomPoly>, KoszulError> {
    Ok(PhiExtension::new(t, target, tuple)?.evaluate(mono))
}

/// `Sym^m` of a free module, with its multiset basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFree {
    pub free: GradedFree,
    /// Sorted generator-index sequences, in lexicographic order.
    pub labels: Vec<Vec<usize>>,
}

/// Nondecreasing sequences of length `m` over `0..rank`, lexicographic.
pub fn multisets(rank: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(rank: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for g in start..rank {
            cur.push(g);
            go(rank, m, g, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rank, m, 0, &mut Vec::with_capacity(m), &mut out);
    out
}

pub fn sym_free(f: &GradedFree, m: usize) -> SymFree {
    let labels = multisets(f.rank(), m);
    let twists = labels
        .iter()
        .map(|ms| ms.iter().map(|&g| f.twists()[g]).sum())
        .collect();
    SymFree {
        free: GradedFree::new(twists),
        labels,
    }
}

/// `Sym^k` of a finitely presented module.
pub fn sym_module(m: &FPGradedModule, k: usize) -> Result<FPGradedModule, KoszulError> {
    let ring = *m.ring();
    let gens = m.gens();
    let top = sym_free(gens, k);
    if k == 0 {
        return Ok(FPGradedModule::free(ring, top.free.twists().to_vec()));
    }
    let index: HashMap<&[usize], usize> = top
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_slice(), i))
        .collect();
    let below = sym_free(gens, k - 1);
    let rels = m.rels();
    let mut columns = Vec::new();
    for r in 0..rels.cols() {
        let rt = rels.source().twists()[r];
        for (mu, mu_twist) in below.labels.iter().zip(below.free.twists()) {
            let mut col: Vec<HomPoly> = top
                .free
                .twists()
                .iter()
                .map(|t| ring.zero((t - rt - mu_twist).max(0) as u32))
                .collect();
            for i in 0..gens.rank() {
                let entry = rels.get(i, r);
                if entry.is_zero() {
                    continue;
                }
                let mut label = mu.clone();
                let pos = label.partition_point(|&g| g <= i);
                label.insert(pos, i);
                let row = index[label.as_slice()];
                col[row] = col[row].add(entry);
            }
            columns.push((rt + mu_twist, col));
        }
    }
    let matrix = GradedMatrix::from_columns(ring, top.free, columns)?;
    Ok(FPGradedModule::new(matrix))
}
