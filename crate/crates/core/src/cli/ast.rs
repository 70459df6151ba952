//! Syntax tree of a `.qpk` script and its canonical rendering.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Arithmetic expression in entries and section values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative literal `p` or `p/q`.
    Num(BigRational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Num(BigRational::from_integer(BigInt::from(v)))
    }
}

/// A target-ring element: a scalar or polynomial expression, or a
/// coordinate vector `[c0, c1, ..]` for finite-dimensional algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemExpr {
    Scalar(Expr),
    Vector(Vec<Expr>),
}

pub type MatrixLit<T> = Vec<Vec<T>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    Coker(String),
    Free(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetDef {
    Field(String),
    Univariate(String),
    /// Dimension, structure constants, and optionally unit coordinates.
    Algebra { dim: usize, values: Vec<Expr> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TModuleDef {
    Coker(MatrixLit<ElemExpr>),
    Free(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Field { name: String, spec: FieldSpec },
    Ring { name: String, field: String, top: usize },
    Free { name: String, summands: Vec<(String, i64)> },
    Matrix { name: String, source: String, target: String, rows: MatrixLit<Expr> },
    Module { name: String, def: ModuleDef },
    Map { name: String, source: String, target: String, rows: MatrixLit<Expr> },
    Target { name: String, def: TargetDef },
    Sections { name: String, target: String, elems: Vec<ElemExpr> },
    TModule { name: String, target: String, def: TModuleDef },
    RingMap { name: String, source: String, target: String, images: Vec<ElemExpr> },
    AlgObj {
        name: String,
        target: String,
        carrier: String,
        unit: Vec<ElemExpr>,
        mult: MatrixLit<ElemExpr>,
    },
    AModule { name: String, algebra: String, underlying: String, action: MatrixLit<ElemExpr> },
    AlgMap { name: String, algebra: String, target: String, images: Vec<ElemExpr> },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Field { name, .. }
            | Decl::Ring { name, .. }
            | Decl::Free { name, .. }
            | Decl::Matrix { name, .. }
            | Decl::Module { name, .. }
            | Decl::Map { name, .. }
            | Decl::Target { name, .. }
            | Decl::Sections { name, .. }
            | Decl::TModule { name, .. }
            | Decl::RingMap { name, .. }
            | Decl::AlgObj { name, .. }
            | Decl::AModule { name, .. }
            | Decl::AlgMap { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidalArgs {
    Modules(String, String),
    Random(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Monomials { n: usize, m: i64 },
    Hilbert { module: String, window: Option<(i64, i64)> },
    Exact { maps: Vec<String>, window: Option<(i64, i64)> },
    Trunc { n: usize, a: i64, d: i64, bind: Option<String> },
    PhiExtend { trunc: String, target: String, rows: MatrixLit<Expr>, bind: Option<String> },
    Sym { module: String, power: usize, bind: Option<String> },
    GoodEpi { sections: String },
    Eval { sections: String, module: String },
    TruncIso { sections: String, d: i64, a: i64 },
    Monoidal { sections: String, args: MonoidalArgs },
    Reconstruct { sections: String },
    BaseChange { map: String, module: String },
    Descend { ringmap: String, algebra: String, algmap: String, module: String },
    Relation { sections: String, poly: Expr },
}

impl Command {
    pub fn keyword(&self) -> &'static str {
        match self {
            Command::Monomials { .. } => "monomials",
            Command::Hilbert { .. } => "hilbert",
            Command::Exact { .. } => "exact",
            Command::Trunc { .. } => "trunc",
            Command::PhiExtend { .. } => "phi-extend",
            Command::Sym { .. } => "sym",
            Command::GoodEpi { .. } => "good-epi",
            Command::Eval { .. } => "eval",
            Command::TruncIso { .. } => "trunc-iso",
            Command::Monoidal { .. } => "monoidal",
            Command::Reconstruct { .. } => "reconstruct",
            Command::BaseChange { .. } => "base-change",
            Command::Descend { .. } => "descend",
            Command::Relation { .. } => "relation",
        }
    }

    /// The arguments as they appear after the keyword.
    pub fn render_args(&self) -> String {
        let full = render_command(self);
        full[self.keyword().len()..].trim_start().to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    Decl(Decl),
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub line: usize,
    pub kind: StatementKind,
}

/// A parsed script: declarations and commands in source order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SessionScript {
    pub statements: Vec<Statement>,
}

impl SessionScript {
    pub fn declarations(&self) -> impl Iterator<Item = &Decl> {
        self.statements.iter().filter_map(|s| match &s.kind {
            StatementKind::Decl(d) => Some(d),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match &s.kind {
            StatementKind::Command(c) => Some(c),
            _ => None,
        })
    }

    /// Structural equality ignoring line numbers.
    pub fn same_statements(&self, other: &SessionScript) -> bool {
        self.statements.len() == other.statements.len()
            && self
                .statements
                .iter()
                .zip(&other.statements)
                .all(|(a, b)| a.kind == b.kind)
    }
}

// Rendering. Each expression level parenthesizes exactly the children the
// parser would otherwise associate differently.

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Product,
    Unary,
    Atom,
}

fn level(e: &Expr) -> Level {
    match e {
        Expr::Add(..) | Expr::Sub(..) => Level::Sum,
        Expr::Mul(..) => Level::Product,
        Expr::Neg(..) => Level::Unary,
        Expr::Pow(..) | Expr::Num(_) | Expr::Var(_) => Level::Atom,
    }
}

fn render_at(e: &Expr, min: Level, out: &mut String) {
    if level(e) < min {
        out.push('(');
        render_expr_into(e, out);
        out.push(')');
    } else {
        render_expr_into(e, out);
    }
}

fn render_expr_into(e: &Expr, out: &mut String) {
    match e {
        Expr::Num(q) => {
            if q.denom().is_one() {
                write!(out, "{}", q.numer()).unwrap();
            } else {
                write!(out, "{}/{}", q.numer(), q.denom()).unwrap();
            }
        }
        Expr::Var(v) => out.push_str(v),
        Expr::Neg(a) => {
            out.push('-');
            render_at(a, Level::Unary, out);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            render_at(a, Level::Sum, out);
            out.push_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " });
            render_at(b, Level::Product, out);
        }
        Expr::Mul(a, b) => {
            render_at(a, Level::Product, out);
            out.push('*');
            render_at(b, Level::Unary, out);
        }
        Expr::Pow(a, k) => {
            // a power of a power needs parentheses: the parser reads one `^`
            let nested = matches!(**a, Expr::Pow(..));
            if nested {
                out.push('(');
                render_expr_into(a, out);
                out.push(')');
            } else {
                render_at(a, Level::Atom, out);
            }
            write!(out, "^{k}").unwrap();
        }
    }
}

pub fn render_expr(e: &Expr) -> String {
    let mut s = String::new();
    render_expr_into(e, &mut s);
    s
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_expr(self))
    }
}

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

fn render_elem(e: &ElemExpr) -> String {
    match e {
        ElemExpr::Scalar(x) => render_expr(x),
        ElemExpr::Vector(v) => format!("[{}]", join(v, render_expr)),
    }
}

fn render_matrix<T>(rows: &MatrixLit<T>, f: impl Fn(&T) -> String) -> String {
    format!(
        "[{}]",
        rows.iter()
            .map(|r| format!("[{}]", join(r, &f)))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn render_tuple(items: &[ElemExpr]) -> String {
    format!("({})", join(items, render_elem))
}

fn render_bind(bind: &Option<String>) -> String {
    bind.as_ref().map(|b| format!(" as {b}")).unwrap_or_default()
}

fn render_window(w: &Option<(i64, i64)>) -> String {
    w.map(|(lo, hi)| format!(" {lo} {hi}")).unwrap_or_default()
}

pub fn render_decl(d: &Decl) -> String {
    match d {
        Decl::Field { name, spec } => match spec {
            FieldSpec::Rationals => format!("field {name} = Q"),
            FieldSpec::Prime(p) => format!("field {name} = GF({p})"),
        },
        Decl::Ring { name, field, top } => format!("ring {name} = {field}[x0..x{top}]"),
        Decl::Free { name, summands } => format!(
            "free {name} = {}",
            summands
                .iter()
                .map(|(r, d)| format!("{r}({d})"))
                .collect::<Vec<_>>()
                .join(" + ")
        ),
        Decl::Matrix { name, source, target, rows } => format!(
            "matrix {name} : {source} -> {target} = {}",
            render_matrix(rows, render_expr)
        ),
        Decl::Module { name, def } => match def {
            ModuleDef::Coker(m) => format!("module {name} = coker {m}"),
            ModuleDef::Free(f) => format!("module {name} = free {f}"),
        },
        Decl::Map { name, source, target, rows } => format!(
            "map {name} : {source} -> {target} = {}",
            render_matrix(rows, render_expr)
        ),
        Decl::Target { name, def } => match def {
            TargetDef::Field(f) => format!("target {name} = {f}"),
            TargetDef::Univariate(f) => format!("target {name} = {f}[t]"),
            TargetDef::Algebra { dim, values } => {
                let mut args = vec![dim.to_string()];
                args.extend(values.iter().map(render_expr));
                format!("target {name} = algebra({})", args.join(", "))
            }
        },
        Decl::Sections { name, target, elems } => {
            format!("sections {name} over {target} = {}", render_tuple(elems))
        }
        Decl::TModule { name, target, def } => match def {
            TModuleDef::Coker(rows) => format!(
                "tmodule {name} over {target} = coker {}",
                render_matrix(rows, render_elem)
            ),
            TModuleDef::Free(r) => format!("tmodule {name} over {target} = free {r}"),
        },
        Decl::RingMap { name, source, target, images } => {
            format!("ringmap {name} : {source} -> {target} = {}", render_tuple(images))
        }
        Decl::AlgObj { name, target, carrier, unit, mult } => format!(
            "algobj {name} over {target} = {carrier} unit {} mult {}",
            render_tuple(unit),
            render_matrix(mult, render_elem)
        ),
        Decl::AModule { name, algebra, underlying, action } => format!(
            "amodule {name} over {algebra} = {underlying} action {}",
            render_matrix(action, render_elem)
        ),
        Decl::AlgMap { name, algebra, target, images } => {
            format!("algmap {name} : {algebra} -> {target} = {}", render_tuple(images))
        }
    }
}

pub fn render_command(c: &Command) -> String {
    let k = c.keyword();
    match c {
        Command::Monomials { n, m } => format!("{k} {n} {m}"),
        Command::Hilbert { module, window } => format!("{k} {module}{}", render_window(window)),
        Command::Exact { maps, window } => {
            format!("{k} {}{}", maps.join(" "), render_window(window))
        }
        Command::Trunc { n, a, d, bind } => format!("{k} {n} {a} {d}{}", render_bind(bind)),
        Command::PhiExtend { trunc, target, rows, bind } => format!(
            "{k} {trunc} {target} {}{}",
            render_matrix(rows, render_expr),
            render_bind(bind)
        ),
        Command::Sym { module, power, bind } => {
            format!("{k} {module} {power}{}", render_bind(bind))
        }
        Command::GoodEpi { sections } | Command::Reconstruct { sections } => {
            format!("{k} {sections}")
        }
        Command::Eval { sections, module } => format!("{k} {sections} {module}"),
        Command::TruncIso { sections, d, a } => format!("{k} {sections} {d} {a}"),
        Command::Monoidal { sections, args } => match args {
            MonoidalArgs::Modules(x, y) => format!("{k} {sections} {x} {y}"),
            MonoidalArgs::Random(n) => format!("{k} {sections} random {n}"),
        },
        Command::BaseChange { map, module } => format!("{k} {map} {module}"),
        Command::Descend { ringmap, algebra, algmap, module } => {
            format!("{k} {ringmap} {algebra} {algmap} {module}")
        }
        Command::Relation { sections, poly } => format!("{k} {sections} {}", render_expr(poly)),
    }
}

/// Canonical text of a script, one statement per line.
pub fn render(script: &SessionScript) -> String {
    let mut out = String::new();
    for s in &script.statements {
        match &s.kind {
            StatementKind::Decl(d) => out.push_str(&render_decl(d)),
            StatementKind::Command(c) => out.push_str(&render_command(c)),
        }
        out.push('\n');
    }
    out
}
