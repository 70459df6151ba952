//! Builds declared objects and executes commands, one JSON object per
//! command.

use std::collections::{BTreeMap, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value as Json};

use crate::exactlinalg::{Field, Scalar, UPoly};
use crate::grmod::{
    is_exact_window, DegreeWindow, FPGradedModule, GrModError, GradedFree, GradedMatrix,
    GradedModuleMap,
};
use crate::koszulsym::{
    sym_module, truncation_presentation, KoszulError, PhiExtension, SectionTuple,
    TruncationPresentation,
};
use crate::polyring::{HomPoly, Monomial, PolyRing};
use crate::random;
use crate::tensorfunctor::{
    base_change, check_good_epi, check_monoidality, check_truncation_iso, descend_module,
    evaluate_object, reconstruct_morphism, verify_relation, AModule, AlgebraMap, AlgebraObject,
    EpiCertificate, FinDimAlgebra, RingMap, SectionData, TElem, TMatrix, TModule, TargetRing,
    TensorError,
};

use super::ast::*;
use super::CliError;

/// Options shared by every command of a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Seed for randomized commands.
    pub seed: u64,
    /// Window for `exact` and `hilbert` commands that do not give one.
    pub window: Option<(i64, i64)>,
}

/// Output lines and the process exit code they imply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub exit_code: i32,
}

enum Value {
    Field(Field),
    Ring(PolyRing),
    Free(PolyRing, GradedFree),
    Matrix(GradedMatrix),
    Module(FPGradedModule),
    Map(GradedModuleMap),
    Target(TargetRing),
    Sections(SectionData),
    TModule(TModule),
    RingMap(RingMap),
    Algebra(AlgebraObject),
    AModule(AModule),
    AlgMap(AlgebraMap, TargetRing),
    Trunc(TruncationPresentation),
}

/// A command's outcome before serialization.
enum Outcome {
    Value(Json),
    Verdict {
        verdict: &'static str,
        pass: bool,
        witness: Option<Json>,
        extra: Vec<(&'static str, Json)>,
    },
}

fn pass(extra: Vec<(&'static str, Json)>) -> Outcome {
    Outcome::Verdict {
        verdict: "pass",
        pass: true,
        witness: None,
        extra,
    }
}

fn fail(witness: Option<Json>, extra: Vec<(&'static str, Json)>) -> Outcome {
    Outcome::Verdict {
        verdict: "fail",
        pass: false,
        witness,
        extra,
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        pass(Vec::new())
    } else {
        fail(None, Vec::new())
    }
}

/// Operation failures: reported as error lines, counted as failed verdicts.
struct OpError {
    kind: &'static str,
    detail: String,
}

impl From<TensorError> for OpError {
    fn from(e: TensorError) -> Self {
        let kind = match &e {
            TensorError::PreconditionNotGood(_) => "PreconditionNotGood",
            TensorError::InvalidRingMap(_) => "InvalidRingMap",
            TensorError::InvalidAlgebraMap(_) => "InvalidAlgebraMap",
            TensorError::InvalidModuleStructure(_) => "InvalidModuleStructure",
            TensorError::InvalidAlgebra(_) => "InvalidAlgebra",
            _ => "TensorError",
        };
        OpError {
            kind,
            detail: e.to_string(),
        }
    }
}

impl From<GrModError> for OpError {
    fn from(e: GrModError) -> Self {
        OpError {
            kind: "GradedError",
            detail: e.to_string(),
        }
    }
}

impl From<KoszulError> for OpError {
    fn from(e: KoszulError) -> Self {
        OpError {
            kind: "KoszulError",
            detail: e.to_string(),
        }
    }
}

/// Either a construction failure (exit code 2) or an operation failure.
enum Failure {
    Input(CliError),
    Op(OpError),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Input(e)
    }
}

impl<E: Into<OpError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Op(e.into())
    }
}

struct Session<'o> {
    values: HashMap<String, Value>,
    /// Coefficient field of the latest `field` or `ring` declaration; used by
    /// commands that build their own ring and by algebra targets.
    field: Field,
    opts: &'o RunOptions,
}

// Polynomial expressions are evaluated into sparse exponent maps first, then
// converted to the ring at hand.
type Sparse = BTreeMap<Vec<u32>, Scalar>;

fn sparse_add(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (m, c) in b {
        let v = match out.get(m) {
            Some(x) => x + c,
            None => c.clone(),
        };
        if v.is_zero() {
            out.remove(m);
        } else {
            out.insert(m.clone(), v);
        }
    }
    out
}

fn sparse_neg(a: &Sparse) -> Sparse {
    a.iter().map(|(m, c)| (m.clone(), -c)).collect()
}

fn sparse_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            out = sparse_add(&out, &BTreeMap::from([(m, ca * cb)]));
        }
    }
    out
}

fn input(line: usize, detail: impl Into<String>) -> CliError {
    CliError::Input {
        line,
        detail: detail.into(),
        entry: None,
    }
}

fn eval_sparse(
    e: &Expr,
    field: Field,
    nvars: usize,
    var: &dyn Fn(&str) -> Option<usize>,
    line: usize,
) -> Result<Sparse, CliError> {
    let rec = |x: &Expr| eval_sparse(x, field, nvars, var, line);
    Ok(match e {
        Expr::Num(q) => {
            let c = field
                .from_rational(q)
                .map_err(|err| input(line, err.to_string()))?;
            if c.is_zero() {
                Sparse::new()
            } else {
                BTreeMap::from([(vec![0; nvars], c)])
            }
        }
        Expr::Var(v) => {
            let i = var(v).ok_or_else(|| input(line, format!("unknown variable '{v}'")))?;
            let mut m = vec![0; nvars];
            m[i] = 1;
            BTreeMap::from([(m, field.one())])
        }
        Expr::Neg(a) => sparse_neg(&rec(a)?),
        Expr::Add(a, b) => sparse_add(&rec(a)?, &rec(b)?),
        Expr::Sub(a, b) => sparse_add(&rec(a)?, &sparse_neg(&rec(b)?)),
        Expr::Mul(a, b) => sparse_mul(&rec(a)?, &rec(b)?),
        Expr::Pow(a, k) => {
            let base = rec(a)?;
            let mut acc = BTreeMap::from([(vec![0; nvars], field.one())]);
            for _ in 0..*k {
                acc = sparse_mul(&acc, &base);
            }
            acc
        }
    })
}

fn x_index(nvars: usize) -> impl Fn(&str) -> Option<usize> {
    move |v: &str| {
        v.strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| i < nvars)
    }
}

fn hompoly(ring: &PolyRing, e: &Expr, line: usize) -> Result<HomPoly, CliError> {
    let sparse = eval_sparse(e, ring.field, ring.nvars, &x_index(ring.nvars), line)?;
    let Some(degree) = sparse.keys().next().map(|m| m.iter().sum::<u32>()) else {
        return Ok(ring.zero(0));
    };
    if sparse.keys().any(|m| m.iter().sum::<u32>() != degree) {
        return Err(input(line, format!("'{e}' is not homogeneous")));
    }
    Ok(HomPoly::from_terms(
        ring.nvars,
        degree,
        sparse.into_iter().map(|(m, c)| (Monomial::new(m), c)),
    ))
}

fn scalar(field: Field, e: &Expr, line: usize) -> Result<Scalar, CliError> {
    let sparse = eval_sparse(e, field, 0, &|_| None, line)?;
    Ok(sparse.into_values().next().unwrap_or_else(|| field.zero()))
}

fn upoly(field: Field, e: &Expr, line: usize) -> Result<UPoly, CliError> {
    let sparse = eval_sparse(e, field, 1, &|v| (v == "t").then_some(0), line)?;
    let deg = sparse.keys().map(|m| m[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in sparse {
        coeffs[m[0] as usize] = c;
    }
    Ok(UPoly::new(field, coeffs))
}

fn elem(ring: &TargetRing, e: &ElemExpr, line: usize) -> Result<TElem, CliError> {
    let field = ring.field();
    match (ring, e) {
        (TargetRing::Field(_), ElemExpr::Scalar(x)) => Ok(TElem::Scalar(scalar(field, x, line)?)),
        (TargetRing::Univariate(_), ElemExpr::Scalar(x)) => Ok(TElem::Poly(upoly(field, x, line)?)),
        (TargetRing::FinDim(a), ElemExpr::Vector(v)) => {
            if v.len() != a.dim() {
                return Err(input(line, format!("expected {} coordinates", a.dim())));
            }
            let c = v
                .iter()
                .map(|x| scalar(field, x, line))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(TElem::Vector(c))
        }
        (TargetRing::FinDim(_), ElemExpr::Scalar(x)) => {
            Ok(ring.from_scalar_elem(&scalar(field, x, line)?))
        }
        (_, ElemExpr::Vector(_)) => Err(input(line, format!("coordinate vectors need an algebra target, not {ring}"))),
    }
}

trait FromScalarElem {
    #[allow(clippy::wrong_self_convention)]
    fn from_scalar_elem(&self, s: &Scalar) -> TElem;
}

impl FromScalarElem for TargetRing {
    fn from_scalar_elem(&self, s: &Scalar) -> TElem {
        crate::exactlinalg::CommRing::from_scalar(self, s)
    }
}

fn elems(ring: &TargetRing, es: &[ElemExpr], line: usize) -> Result<Vec<TElem>, CliError> {
    es.iter().map(|e| elem(ring, e, line)).collect()
}

fn tmatrix(ring: &TargetRing, rows: &MatrixLit<ElemExpr>, cols: Option<usize>, line: usize) -> Result<TMatrix, CliError> {
    let width = cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
    if rows.iter().any(|r| r.len() != width) {
        return Err(input(line, format!("every row needs {width} entries")));
    }
    let rows = rows
        .iter()
        .map(|r| elems(ring, r, line))
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Ok(TMatrix::zeros(ring.clone(), 0, width));
    }
    Ok(TMatrix::from_rows(ring.clone(), rows))
}

fn graded_error(line: usize, e: GrModError) -> CliError {
    let entry = match &e {
        GrModError::DegreeMismatch { row, col, .. } | GrModError::NegativeDegreeEntry { row, col, .. } => {
            Some((*row, *col))
        }
        _ => None,
    };
    CliError::Input {
        line,
        detail: e.to_string(),
        entry,
    }
}

fn strs<T: ToString>(items: impl IntoIterator<Item = T>) -> Json {
    Json::Array(items.into_iter().map(|x| json!(x.to_string())).collect())
}

impl<'o> Session<'o> {
    fn get(&self, name: &str) -> &Value {
        self.values.get(name).expect("names are resolved by the parser")
    }

    fn module(&self, name: &str) -> FPGradedModule {
        match self.get(name) {
            Value::Module(m) => m.clone(),
            Value::Trunc(t) => t.module().clone(),
            _ => unreachable!("parser checks kinds"),
        }
    }

    fn sections(&self, name: &str) -> &SectionData {
        match self.get(name) {
            Value::Sections(s) => s,
            _ => unreachable!("parser checks kinds"),
        }
    }

    fn target(&self, name: &str) -> TargetRing {
        match self.get(name) {
            Value::Target(t) => t.clone(),
            _ => unreachable!("parser checks kinds"),
        }
    }

    fn tmodule(&self, name: &str) -> &TModule {
        match self.get(name) {
            Value::TModule(m) => m,
            _ => unreachable!("parser checks kinds"),
        }
    }

    fn free(&self, name: &str) -> (PolyRing, GradedFree) {
        match self.get(name) {
            Value::Free(r, f) => (*r, f.clone()),
            _ => unreachable!("parser checks kinds"),
        }
    }

    fn graded_rows(
        &self,
        ring: &PolyRing,
        rows: &MatrixLit<Expr>,
        line: usize,
    ) -> Result<Vec<Vec<HomPoly>>, CliError> {
        rows.iter()
            .map(|r| r.iter().map(|e| hompoly(ring, e, line)).collect())
            .collect()
    }

    fn window(&self, explicit: Option<(i64, i64)>, default: DegreeWindow, line: usize) -> Result<DegreeWindow, CliError> {
        match explicit.or(self.opts.window) {
            Some((lo, hi)) => DegreeWindow::new(lo, hi).map_err(|e| input(line, e.to_string())),
            None => Ok(default),
        }
    }

    fn declare(&mut self, d: &Decl, line: usize) -> Result<(), CliError> {
        let value = match d {
            Decl::Field { spec, .. } => {
                let f = match spec {
                    FieldSpec::Rationals => Field::Rationals,
                    FieldSpec::Prime(p) => Field::prime(*p).map_err(|e| input(line, e.to_string()))?,
                };
                self.field = f;
                Value::Field(f)
            }
            Decl::Ring { field, top, .. } => {
                let &Value::Field(f) = self.get(field) else { unreachable!() };
                self.field = f;
                Value::Ring(PolyRing::new(f, top + 1))
            }
            Decl::Free { summands, .. } => {
                let mut ring = None;
                let mut twists = Vec::new();
                for (r, t) in summands {
                    let Value::Ring(rr) = self.get(r) else { unreachable!() };
                    if ring.is_some_and(|x| x != *rr) {
                        return Err(input(line, "summands over different rings"));
                    }
                    ring = Some(*rr);
                    twists.push(*t);
                }
                Value::Free(ring.expect("at least one summand"), GradedFree::new(twists))
            }
            Decl::Matrix { source, target, rows, .. } => {
                let (rs, fs) = self.free(source);
                let (rt, ft) = self.free(target);
                if rs != rt {
                    return Err(input(line, "source and target over different rings"));
                }
                let rows = self.graded_rows(&rs, rows, line)?;
                Value::Matrix(GradedMatrix::new(rs, fs, ft, rows).map_err(|e| graded_error(line, e))?)
            }
            Decl::Module { def, .. } => match def {
                ModuleDef::Coker(m) => {
                    let Value::Matrix(m) = self.get(m) else { unreachable!() };
                    Value::Module(FPGradedModule::new(m.clone()))
                }
                ModuleDef::Free(f) => {
                    let (r, f) = self.free(f);
                    Value::Module(FPGradedModule::free(r, f.twists().to_vec()))
                }
            },
            Decl::Map { source, target, rows, .. } => {
                let (src, tgt) = (self.module(source), self.module(target));
                if src.ring() != tgt.ring() {
                    return Err(input(line, "source and target over different rings"));
                }
                let ring = *src.ring();
                let rows = self.graded_rows(&ring, rows, line)?;
                let m = GradedMatrix::new(ring, src.gens().clone(), tgt.gens().clone(), rows)
                    .map_err(|e| graded_error(line, e))?;
                Value::Map(GradedModuleMap::new(src, tgt, m).map_err(|e| graded_error(line, e))?)
            }
            Decl::Target { def, .. } => Value::Target(match def {
                TargetDef::Field(f) => {
                    let Value::Field(f) = self.get(f) else { unreachable!() };
                    TargetRing::Field(*f)
                }
                TargetDef::Univariate(f) => {
                    let Value::Field(f) = self.get(f) else { unreachable!() };
                    TargetRing::Univariate(*f)
                }
                TargetDef::Algebra { dim, values } => {
                    let f = self.field;
                    let vals = values
                        .iter()
                        .map(|e| scalar(f, e, line))
                        .collect::<Result<Vec<_>, _>>()?;
                    let cube = dim * dim * dim;
                    let (constants, unit) = if vals.len() == cube {
                        let mut unit = vec![f.zero(); *dim];
                        if *dim > 0 {
                            unit[0] = f.one();
                        }
                        (vals, unit)
                    } else if vals.len() == cube + dim {
                        (vals[..cube].to_vec(), vals[cube..].to_vec())
                    } else {
                        return Err(input(
                            line,
                            format!("algebra of dimension {dim} needs {cube} or {} values", cube + dim),
                        ));
                    };
                    let alg = FinDimAlgebra::new(f, *dim, constants, unit)
                        .map_err(|e| input(line, e.to_string()))?;
                    TargetRing::algebra(alg)
                }
            }),
            Decl::Sections { target, elems: es, .. } => {
                let ring = self.target(target);
                let s = elems(&ring, es, line)?;
                Value::Sections(SectionData::new(ring, s).map_err(|e| input(line, e.to_string()))?)
            }
            Decl::TModule { target, def, .. } => {
                let ring = self.target(target);
                Value::TModule(match def {
                    TModuleDef::Free(r) => TModule::free(ring, *r),
                    TModuleDef::Coker(rows) => TModule::new(tmatrix(&ring, rows, None, line)?),
                })
            }
            Decl::RingMap { source, target, images, .. } => {
                let (s, t) = (self.target(source), self.target(target));
                let imgs = elems(&t, images, line)?;
                Value::RingMap(RingMap::new(s, t, imgs).map_err(|e| input(line, e.to_string()))?)
            }
            Decl::AlgObj { target, carrier, unit, mult, .. } => {
                let ring = self.target(target);
                let carrier = self.tmodule(carrier).clone();
                if carrier.ring() != &ring {
                    return Err(input(line, "carrier lives over a different target"));
                }
                let r = carrier.gens();
                let u = elems(&ring, unit, line)?;
                let m = tmatrix(&ring, mult, Some(r * r), line)?;
                Value::Algebra(AlgebraObject::new(carrier, u, m).map_err(|e| input(line, e.to_string()))?)
            }
            Decl::AModule { algebra, underlying, action, .. } => {
                let Value::Algebra(a) = self.get(algebra) else { unreachable!() };
                let a = a.clone();
                let n = self.tmodule(underlying).clone();
                let width = a.carrier().gens() * n.gens();
                let act = tmatrix(a.ring(), action, Some(width), line)?;
                Value::AModule(AModule::new(a, n, act).map_err(|e| input(line, e.to_string()))?)
            }
            Decl::AlgMap { target, images, .. } => {
                let ring = self.target(target);
                let imgs = elems(&ring, images, line)?;
                Value::AlgMap(AlgebraMap { images: imgs }, ring)
            }
        };
        self.values.insert(d.name().to_string(), value);
        Ok(())
    }

    fn execute(&mut self, cmd: &Command, line: usize) -> Result<Outcome, Failure> {
        Ok(match cmd {
            Command::Monomials { n, m } => {
                let ring = PolyRing::projective(self.field, *n);
                Outcome::Value(strs(ring.monomials(*m)))
            }
            Command::Hilbert { module, window } => {
                let m = self.module(module);
                let w = self.window(*window, m.default_window(), line)?;
                let table: Vec<Json> = m
                    .hilbert_table(w)
                    .into_iter()
                    .map(|(k, d)| json!({"degree": k, "dim": d}))
                    .collect();
                Outcome::Value(Json::Array(table))
            }
            Command::Exact { maps, window } => {
                let seq: Vec<GradedModuleMap> = maps
                    .iter()
                    .map(|m| match self.get(m) {
                        Value::Map(f) => f.clone(),
                        _ => unreachable!("parser checks kinds"),
                    })
                    .collect();
                let degrees = seq
                    .iter()
                    .flat_map(|f| [f.source(), f.target()])
                    .flat_map(|m| m.gens().generator_degrees().collect::<Vec<_>>());
                let w = self.window(*window, DegreeWindow::covering(degrees), line)?;
                match is_exact_window(&seq, w) {
                    Ok(report) => {
                        let table: Vec<Json> = report
                            .degrees
                            .iter()
                            .map(|d| json!({"degree": d.degree, "dims": d.dims, "image_dims": d.image_dims}))
                            .collect();
                        let extra = vec![("table", Json::Array(table))];
                        match report.witness() {
                            None => pass(extra),
                            Some((degree, position)) => {
                                fail(Some(json!({"degree": degree, "position": position})), extra)
                            }
                        }
                    }
                    Err(GrModError::NotComplex { position, degree }) => fail(
                        Some(json!({"degree": degree, "position": position, "reason": "not_a_complex"})),
                        Vec::new(),
                    ),
                    Err(e) => return Err(e.into()),
                }
            }
            Command::Trunc { n, a, d, bind } => {
                let t = truncation_presentation(PolyRing::projective(self.field, *n), *a, *d);
                let value = json!({
                    "generators": strs(t.generators()),
                    "generator_twists": t.module().gens().twists(),
                    "relation_count": t.relations().len(),
                    "full": t.is_full(),
                });
                if let Some(b) = bind {
                    let [rel, incl] = t.exact_sequence();
                    self.values.insert(format!("{b}.rel"), Value::Map(rel));
                    self.values.insert(format!("{b}.incl"), Value::Map(incl));
                    self.values.insert(b.clone(), Value::Trunc(t));
                }
                Outcome::Value(value)
            }
            Command::PhiExtend { trunc, target, rows, bind } => {
                let Value::Trunc(t) = self.get(trunc) else { unreachable!() };
                let t = t.clone();
                let y = self.module(target);
                if y.ring() != t.ring() {
                    return Err(input(line, "target module lives over a different ring").into());
                }
                let polys = self.graded_rows(t.ring(), rows, line)?;
                let cols = t.generators().len();
                if polys.len() != y.gens().rank() || polys.iter().any(|r| r.len() != cols) {
                    return Err(input(
                        line,
                        format!("expected a {}x{} matrix of values m_p", y.gens().rank(), cols),
                    )
                    .into());
                }
                let values = (0..cols)
                    .map(|c| polys.iter().map(|r| r[c].clone()).collect())
                    .collect();
                let tuple = SectionTuple::from_ordered(t.ring(), t.a(), t.d(), values);
                match PhiExtension::new(&t, &y, &tuple) {
                    Ok(ext) => {
                        if let Some(b) = bind {
                            self.values.insert(b.clone(), Value::Map(ext.map().clone()));
                        }
                        pass(Vec::new())
                    }
                    Err(KoszulError::IncompatibleTuple { q, i, j }) => {
                        fail(Some(json!({"q": q.to_string(), "i": i, "j": j})), Vec::new())
                    }
                    Err(KoszulError::Graded(e)) => return Err(graded_error(line, e).into()),
                    Err(e) => return Err(e.into()),
                }
            }
            Command::Sym { module, power, bind } => {
                let s = sym_module(&self.module(module), *power)?;
                let value = json!({
                    "generator_twists": s.gens().twists(),
                    "relation_count": s.rels().cols(),
                });
                if let Some(b) = bind {
                    self.values.insert(b.clone(), Value::Module(s));
                }
                Outcome::Value(value)
            }
            Command::GoodEpi { sections } => {
                let v = check_good_epi(self.sections(sections));
                if v.good() {
                    Outcome::Verdict {
                        verdict: "good",
                        pass: true,
                        witness: Some(json!({"bezout": strs(v.bezout().expect("good"))})),
                        extra: Vec::new(),
                    }
                } else if !v.epi {
                    let witness = match &v.certificate {
                        EpiCertificate::NonUnitGcd(g) => json!({"gcd": g.to_string()}),
                        EpiCertificate::ZeroSections => json!({"zero_sections": true}),
                        EpiCertificate::ProperIdeal { dim } => json!({"ideal_dim": dim}),
                        EpiCertificate::Bezout(_) => unreachable!("not epi"),
                    };
                    Outcome::Verdict {
                        verdict: "not_epi",
                        pass: false,
                        witness: Some(witness),
                        extra: Vec::new(),
                    }
                } else {
                    Outcome::Verdict {
                        verdict: "not_middle_exact",
                        pass: false,
                        witness: v.syzygy.as_ref().map(|s| json!({"syzygy": strs(s)})),
                        extra: Vec::new(),
                    }
                }
            }
            Command::Eval { sections, module } => {
                let t = evaluate_object(self.sections(sections), &self.module(module))?;
                Outcome::Value(tmodule_json(&t))
            }
            Command::TruncIso { sections, d, a } => {
                verdict(check_truncation_iso(self.sections(sections), *d, *a)?)
            }
            Command::Monoidal { sections, args } => {
                let sd = self.sections(sections).clone();
                match args {
                    MonoidalArgs::Modules(x, y) => {
                        verdict(check_monoidality(&sd, &self.module(x), &self.module(y))?)
                    }
                    MonoidalArgs::Random(count) => {
                        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
                        rng.set_stream(line as u64);
                        let ring = sd.polyring();
                        let mut first_failure = None;
                        for i in 0..*count {
                            let m = random::module(&mut rng, &ring, 2, 2);
                            let n = random::module(&mut rng, &ring, 2, 2);
                            if first_failure.is_none() && !check_monoidality(&sd, &m, &n)? {
                                first_failure = Some(i);
                            }
                        }
                        let extra = vec![("pairs", json!(count))];
                        match first_failure {
                            None => pass(extra),
                            Some(i) => fail(Some(json!({"pair": i})), extra),
                        }
                    }
                }
            }
            Command::Reconstruct { sections } => {
                let sd = self.sections(sections);
                let map = reconstruct_morphism(sd)?;
                let charts: Vec<Json> = map
                    .charts
                    .iter()
                    .map(|c| {
                        let coords: Vec<Json> = c
                            .coordinates
                            .iter()
                            .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                            .collect();
                        json!({"index": c.index, "coordinates": coords})
                    })
                    .collect();
                let mut value = json!({"charts": charts, "cover": strs(&map.cover_certificate)});
                if let Some(p) = map.point(sd) {
                    value["point"] = strs(&p);
                }
                Outcome::Value(value)
            }
            Command::BaseChange { map, module } => {
                let Value::RingMap(f) = self.get(map) else { unreachable!() };
                Outcome::Value(tmodule_json(&base_change(f, self.tmodule(module))?))
            }
            Command::Descend { ringmap, algebra, algmap, module } => {
                let Value::RingMap(f) = self.get(ringmap) else { unreachable!() };
                let Value::Algebra(a) = self.get(algebra) else { unreachable!() };
                let Value::AlgMap(sigma, codomain) = self.get(algmap) else { unreachable!() };
                let Value::AModule(m) = self.get(module) else { unreachable!() };
                if codomain != f.target() {
                    return Err(input(line, "algebra map and ring map have different codomains").into());
                }
                Outcome::Value(tmodule_json(&descend_module(f, a, sigma, m)?))
            }
            Command::Relation { sections, poly } => {
                let sd = self.sections(sections);
                let p = hompoly(&sd.polyring(), poly, line)?;
                verdict(verify_relation(sd, &p)?)
            }
        })
    }
}

fn tmodule_json(m: &TModule) -> Json {
    json!({
        "generators": m.gens(),
        "relations": m.rels().to_string(),
        "classification": m.classify().to_string(),
    })
}

fn error_json(kind: &str, detail: &str, extra: Option<(&str, Json)>) -> String {
    let mut err = json!({"kind": kind, "detail": detail});
    if let Some((k, v)) = extra {
        err[k] = v;
    }
    json!({ "error": err }).to_string()
}

/// JSON line for a parse, name or input error.
pub fn cli_error_line(e: &CliError) -> String {
    let kind = match e {
        CliError::Parse { .. } => "ParseError",
        CliError::Name { .. } => "NameError",
        CliError::Input { .. } => "InputError",
        CliError::Usage(_) => "UsageError",
    };
    let extra = match e {
        CliError::Input { entry: Some((r, c)), .. } => Some(("entry", json!([r, c]))),
        _ => None,
    };
    error_json(kind, &e.to_string(), extra)
}

/// Runs the statements in order. Construction errors stop the run with exit
/// code 2; failed verdicts and operation errors give exit code 1.
pub fn run(script: &SessionScript, opts: &RunOptions) -> Report {
    let mut session = Session {
        values: HashMap::new(),
        field: Field::Rationals,
        opts,
    };
    let mut lines = Vec::new();
    let mut failed = false;
    for st in &script.statements {
        match &st.kind {
            StatementKind::Decl(d) => {
                if let Err(e) = session.declare(d, st.line) {
                    lines.push(cli_error_line(&e));
                    return Report { lines, exit_code: 2 };
                }
            }
            StatementKind::Command(cmd) => {
                let head = json!({"command": cmd.keyword(), "inputs": cmd.render_args()});
                match session.execute(cmd, st.line) {
                    Ok(Outcome::Value(v)) => {
                        let mut obj = head;
                        obj["value"] = v;
                        lines.push(obj.to_string());
                    }
                    Ok(Outcome::Verdict { verdict, pass, witness, extra }) => {
                        let mut obj = head;
                        obj["verdict"] = json!(verdict);
                        if let Some(w) = witness {
                            obj["witness"] = w;
                        }
                        for (k, v) in extra {
                            obj[k] = v;
                        }
                        failed |= !pass;
                        lines.push(obj.to_string());
                    }
                    Err(Failure::Input(e)) => {
                        lines.push(cli_error_line(&e));
                        return Report { lines, exit_code: 2 };
                    }
                    Err(Failure::Op(e)) => {
                        let mut obj = head;
                        obj["error"] = json!({"kind": e.kind, "detail": e.detail});
                        failed = true;
                        lines.push(obj.to_string());
                    }
                }
            }
        }
    }
    Report {
        lines,
        exit_code: i32::from(failed),
    }
}
