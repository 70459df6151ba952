//! Line-oriented parser with name resolution.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ast::*;
use super::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Arrow,
    DotDot,
    Punct(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn lex(line: usize, text: &str, offset: usize) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() {
                let ch = chars[i];
                let dotted = ch == '.'
                    && chars
                        .get(i + 1)
                        .is_some_and(|n| n.is_ascii_alphabetic() || *n == '_');
                if ch.is_ascii_alphanumeric() || ch == '_' || dotted {
                    i += 1;
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digits")),
                col,
            });
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Token { tok: Tok::Arrow, col });
            i += 2;
        } else if c == '.' && chars.get(i + 1) == Some(&'.') {
            out.push(Token { tok: Tok::DotDot, col });
            i += 2;
        } else if "=:()[],+-*^/".contains(c) {
            out.push(Token {
                tok: Tok::Punct(c),
                col,
            });
            i += 1;
        } else {
            return Err(CliError::Parse {
                line,
                column: col,
                expected: format!("a token, found '{c}'"),
            });
        }
    }
    Ok(out)
}

/// Kinds of named objects, for reference checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Field,
    Ring,
    Free,
    Matrix,
    Module,
    Map,
    Target,
    Sections,
    TModule,
    RingMap,
    Algebra,
    AModule,
    AlgMap,
    Trunc,
}

impl Kind {
    fn describe(self) -> &'static str {
        match self {
            Kind::Field => "field",
            Kind::Ring => "ring",
            Kind::Free => "free module",
            Kind::Matrix => "matrix",
            Kind::Module => "module",
            Kind::Map => "map",
            Kind::Target => "target",
            Kind::Sections => "sections",
            Kind::TModule => "tmodule",
            Kind::RingMap => "ringmap",
            Kind::Algebra => "algobj",
            Kind::AModule => "amodule",
            Kind::AlgMap => "algmap",
            Kind::Trunc => "truncation",
        }
    }
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [Token],
    pos: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn err<T>(&self, expected: impl Into<String>) -> Result<T, CliError> {
        Err(CliError::Parse {
            line: self.line,
            column: self.col(),
            expected: expected.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn punct(&mut self, c: char) -> Result<(), CliError> {
        if self.eat_punct(c) {
            Ok(())
        } else {
            self.err(format!("'{c}'"))
        }
    }

    fn arrow(&mut self) -> Result<(), CliError> {
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            Ok(())
        } else {
            self.err("'->'")
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, CliError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(what.to_string()),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), CliError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("'{kw}'")),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self, what: &str) -> Result<u64, CliError> {
        match self.peek() {
            Some(Tok::Int(v)) => match v.to_u64() {
                Some(x) => {
                    self.pos += 1;
                    Ok(x)
                }
                None => self.err(format!("{what} (too large)")),
            },
            _ => self.err(what.to_string()),
        }
    }

    fn usize(&mut self, what: &str) -> Result<usize, CliError> {
        let col = self.col();
        let v = self.uint(what)?;
        usize::try_from(v).map_err(|_| CliError::Parse {
            line: self.line,
            column: col,
            expected: format!("{what} (too large)"),
        })
    }

    fn int(&mut self, what: &str) -> Result<i64, CliError> {
        let neg = self.eat_punct('-');
        let col = self.col();
        let v = self.uint(what)?;
        let v = i64::try_from(v).map_err(|_| CliError::Parse {
            line: self.line,
            column: col,
            expected: format!("{what} (too large)"),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn end(&self) -> Result<(), CliError> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("end of line")
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.term()?;
        loop {
            if self.eat_punct('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat_punct('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.unary()?;
        while self.eat_punct('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat_punct('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_punct('^') {
            let col = self.col();
            let k = self.uint("an exponent")?;
            let k = u32::try_from(k).map_err(|_| CliError::Parse {
                line: self.line,
                column: col,
                expected: "an exponent below 2^32".into(),
            })?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    // atom := INT ['/' INT] | IDENT | '(' expr ')'
    fn atom(&mut self) -> Result<Expr, CliError> {
        match self.peek().cloned() {
            Some(Tok::Int(p)) => {
                self.pos += 1;
                if self.eat_punct('/') {
                    let col = self.col();
                    let Some(Tok::Int(q)) = self.peek().cloned() else {
                        return self.err("a denominator");
                    };
                    if q.is_zero() {
                        return Err(CliError::Parse {
                            line: self.line,
                            column: col,
                            expected: "a nonzero denominator".into(),
                        });
                    }
                    self.pos += 1;
                    return Ok(Expr::Num(BigRational::new(p, q)));
                }
                Ok(Expr::Num(BigRational::from_integer(p)))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Expr::Var(v))
            }
            Some(Tok::Punct('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.punct(')')?;
                Ok(e)
            }
            _ => self.err("a number, variable or '('"),
        }
    }

    fn elem(&mut self) -> Result<ElemExpr, CliError> {
        if self.eat_punct('[') {
            let mut v = Vec::new();
            if !self.eat_punct(']') {
                loop {
                    v.push(self.expr()?);
                    if self.eat_punct(']') {
                        break;
                    }
                    self.punct(',')?;
                }
            }
            Ok(ElemExpr::Vector(v))
        } else {
            Ok(ElemExpr::Scalar(self.expr()?))
        }
    }

    fn list<T>(
        &mut self,
        open: char,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, CliError>,
    ) -> Result<Vec<T>, CliError> {
        self.punct(open)?;
        let mut out = Vec::new();
        if self.eat_punct(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_punct(close) {
                return Ok(out);
            }
            self.punct(',')?;
        }
    }

    fn matrix<T>(
        &mut self,
        item: impl Fn(&mut Self) -> Result<T, CliError> + Copy,
    ) -> Result<MatrixLit<T>, CliError> {
        self.list('[', ']', |c| c.list('[', ']', item))
    }

    fn bind(&mut self) -> Result<Option<String>, CliError> {
        if self.eat_keyword("as") {
            Ok(Some(self.ident("a name")?))
        } else {
            Ok(None)
        }
    }

    fn window(&mut self) -> Result<Option<(i64, i64)>, CliError> {
        if self.at_end() {
            return Ok(None);
        }
        let lo = self.int("a window start")?;
        let hi = self.int("a window end")?;
        Ok(Some((lo, hi)))
    }
}

struct Names {
    kinds: HashMap<String, Kind>,
}

impl Names {
    fn define(&mut self, line: usize, name: &str, kind: Kind) -> Result<(), CliError> {
        if self.kinds.contains_key(name) {
            return Err(CliError::Name {
                line,
                name: name.to_string(),
                detail: "already declared".into(),
            });
        }
        self.kinds.insert(name.to_string(), kind);
        Ok(())
    }

    fn expect(&self, line: usize, name: &str, allowed: &[Kind]) -> Result<(), CliError> {
        match self.kinds.get(name) {
            None => Err(CliError::Name {
                line,
                name: name.to_string(),
                detail: "undeclared".into(),
            }),
            Some(k) if allowed.contains(k) => Ok(()),
            Some(k) => Err(CliError::Name {
                line,
                name: name.to_string(),
                detail: format!(
                    "is a {}, expected {}",
                    k.describe(),
                    allowed
                        .iter()
                        .map(|k| k.describe())
                        .collect::<Vec<_>>()
                        .join(" or ")
                ),
            }),
        }
    }
}

const MODULES: &[Kind] = &[Kind::Module, Kind::Trunc];

fn parse_decl(kw: &str, c: &mut Cursor<'_>) -> Result<Decl, CliError> {
    let name = c.ident("a name")?;
    let decl = match kw {
        "field" => {
            c.punct('=')?;
            let spec = match c.ident("'Q' or 'GF'")?.as_str() {
                "Q" => FieldSpec::Rationals,
                "GF" => {
                    c.punct('(')?;
                    let p = c.uint("a prime")?;
                    c.punct(')')?;
                    FieldSpec::Prime(p)
                }
                _ => {
                    c.pos -= 1;
                    return c.err("'Q' or 'GF'");
                }
            };
            Decl::Field { name, spec }
        }
        "ring" => {
            c.punct('=')?;
            let field = c.ident("a field name")?;
            c.punct('[')?;
            if c.ident("x0")? != "x0" {
                c.pos -= 1;
                return c.err("x0");
            }
            if c.peek() != Some(&Tok::DotDot) {
                return c.err("'..'");
            }
            c.pos += 1;
            let last = c.ident("xN")?;
            let top = last
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok());
            let Some(top) = top else {
                c.pos -= 1;
                return c.err("xN with N a number");
            };
            c.punct(']')?;
            Decl::Ring { name, field, top }
        }
        "free" => {
            c.punct('=')?;
            let mut summands = Vec::new();
            loop {
                let ring = c.ident("a ring name")?;
                c.punct('(')?;
                let d = c.int("a twist")?;
                c.punct(')')?;
                summands.push((ring, d));
                if !c.eat_punct('+') {
                    break;
                }
            }
            Decl::Free { name, summands }
        }
        "matrix" | "map" => {
            c.punct(':')?;
            let source = c.ident("a source")?;
            c.arrow()?;
            let target = c.ident("a target")?;
            c.punct('=')?;
            let rows = c.matrix(Cursor::expr)?;
            if kw == "matrix" {
                Decl::Matrix { name, source, target, rows }
            } else {
                Decl::Map { name, source, target, rows }
            }
        }
        "module" => {
            c.punct('=')?;
            let def = if c.eat_keyword("coker") {
                ModuleDef::Coker(c.ident("a matrix name")?)
            } else if c.eat_keyword("free") {
                ModuleDef::Free(c.ident("a free module name")?)
            } else {
                return c.err("'coker' or 'free'");
            };
            Decl::Module { name, def }
        }
        "target" => {
            c.punct('=')?;
            let head = c.ident("a field name or 'algebra'")?;
            let def = if head == "algebra" && c.peek() == Some(&Tok::Punct('(')) {
                c.punct('(')?;
                let dim = c.usize("a dimension")?;
                let mut values = Vec::new();
                while c.eat_punct(',') {
                    values.push(c.expr()?);
                }
                c.punct(')')?;
                TargetDef::Algebra { dim, values }
            } else if c.eat_punct('[') {
                c.keyword("t")?;
                c.punct(']')?;
                TargetDef::Univariate(head)
            } else {
                TargetDef::Field(head)
            };
            Decl::Target { name, def }
        }
        "sections" => {
            c.keyword("over")?;
            let target = c.ident("a target name")?;
            c.punct('=')?;
            let elems = c.list('(', ')', Cursor::elem)?;
            Decl::Sections { name, target, elems }
        }
        "tmodule" => {
            c.keyword("over")?;
            let target = c.ident("a target name")?;
            c.punct('=')?;
            let def = if c.eat_keyword("coker") {
                TModuleDef::Coker(c.matrix(Cursor::elem)?)
            } else if c.eat_keyword("free") {
                TModuleDef::Free(c.usize("a rank")?)
            } else {
                return c.err("'coker' or 'free'");
            };
            Decl::TModule { name, target, def }
        }
        "ringmap" => {
            c.punct(':')?;
            let source = c.ident("a source target")?;
            c.arrow()?;
            let target = c.ident("a target")?;
            c.punct('=')?;
            let images = c.list('(', ')', Cursor::elem)?;
            Decl::RingMap { name, source, target, images }
        }
        "algobj" => {
            c.keyword("over")?;
            let target = c.ident("a target name")?;
            c.punct('=')?;
            let carrier = c.ident("a tmodule name")?;
            c.keyword("unit")?;
            let unit = c.list('(', ')', Cursor::elem)?;
            c.keyword("mult")?;
            let mult = c.matrix(Cursor::elem)?;
            Decl::AlgObj { name, target, carrier, unit, mult }
        }
        "amodule" => {
            c.keyword("over")?;
            let algebra = c.ident("an algobj name")?;
            c.punct('=')?;
            let underlying = c.ident("a tmodule name")?;
            c.keyword("action")?;
            let action = c.matrix(Cursor::elem)?;
            Decl::AModule { name, algebra, underlying, action }
        }
        "algmap" => {
            c.punct(':')?;
            let algebra = c.ident("an algobj name")?;
            c.arrow()?;
            let target = c.ident("a target name")?;
            c.punct('=')?;
            let images = c.list('(', ')', Cursor::elem)?;
            Decl::AlgMap { name, algebra, target, images }
        }
        _ => unreachable!("dispatch covers declaration keywords"),
    };
    c.end()?;
    Ok(decl)
}

fn check_decl(d: &Decl, line: usize, names: &mut Names) -> Result<(), CliError> {
    let e = |n: &str, k: &[Kind]| names.expect(line, n, k);
    let kind = match d {
        Decl::Field { .. } => Kind::Field,
        Decl::Ring { field, .. } => {
            e(field, &[Kind::Field])?;
            Kind::Ring
        }
        Decl::Free { summands, .. } => {
            for (r, _) in summands {
                e(r, &[Kind::Ring])?;
            }
            Kind::Free
        }
        Decl::Matrix { source, target, .. } => {
            e(source, &[Kind::Free])?;
            e(target, &[Kind::Free])?;
            Kind::Matrix
        }
        Decl::Module { def, .. } => {
            match def {
                ModuleDef::Coker(m) => e(m, &[Kind::Matrix])?,
                ModuleDef::Free(f) => e(f, &[Kind::Free])?,
            }
            Kind::Module
        }
        Decl::Map { source, target, .. } => {
            e(source, MODULES)?;
            e(target, MODULES)?;
            Kind::Map
        }
        Decl::Target { def, .. } => {
            match def {
                TargetDef::Field(f) | TargetDef::Univariate(f) => e(f, &[Kind::Field])?,
                TargetDef::Algebra { .. } => {}
            }
            Kind::Target
        }
        Decl::Sections { target, .. } | Decl::TModule { target, .. } => {
            e(target, &[Kind::Target])?;
            if matches!(d, Decl::Sections { .. }) {
                Kind::Sections
            } else {
                Kind::TModule
            }
        }
        Decl::RingMap { source, target, .. } => {
            e(source, &[Kind::Target])?;
            e(target, &[Kind::Target])?;
            Kind::RingMap
        }
        Decl::AlgObj { target, carrier, .. } => {
            e(target, &[Kind::Target])?;
            e(carrier, &[Kind::TModule])?;
            Kind::Algebra
        }
        Decl::AModule { algebra, underlying, .. } => {
            e(algebra, &[Kind::Algebra])?;
            e(underlying, &[Kind::TModule])?;
            Kind::AModule
        }
        Decl::AlgMap { algebra, target, .. } => {
            e(algebra, &[Kind::Algebra])?;
            e(target, &[Kind::Target])?;
            Kind::AlgMap
        }
    };
    names.define(line, d.name(), kind)
}

fn parse_command(kw: &str, c: &mut Cursor<'_>) -> Result<Command, CliError> {
    let cmd = match kw {
        "monomials" => Command::Monomials {
            n: c.usize("n")?,
            m: c.int("a degree")?,
        },
        "hilbert" => Command::Hilbert {
            module: c.ident("a module name")?,
            window: c.window()?,
        },
        "exact" => {
            let mut maps = Vec::new();
            while let Some(Tok::Ident(_)) = c.peek() {
                maps.push(c.ident("a map name")?);
            }
            if maps.is_empty() {
                return c.err("a map name");
            }
            Command::Exact {
                maps,
                window: c.window()?,
            }
        }
        "trunc" => Command::Trunc {
            n: c.usize("n")?,
            a: c.int("a")?,
            d: c.int("d")?,
            bind: c.bind()?,
        },
        "phi-extend" => Command::PhiExtend {
            trunc: c.ident("a truncation name")?,
            target: c.ident("a module name")?,
            rows: c.matrix(Cursor::expr)?,
            bind: c.bind()?,
        },
        "sym" => Command::Sym {
            module: c.ident("a module name")?,
            power: c.usize("a power")?,
            bind: c.bind()?,
        },
        "good-epi" => Command::GoodEpi {
            sections: c.ident("a sections name")?,
        },
        "eval" => Command::Eval {
            sections: c.ident("a sections name")?,
            module: c.ident("a module name")?,
        },
        "trunc-iso" => Command::TruncIso {
            sections: c.ident("a sections name")?,
            d: c.int("d")?,
            a: c.int("a")?,
        },
        "monoidal" => {
            let sections = c.ident("a sections name")?;
            let args = if c.eat_keyword("random") {
                MonoidalArgs::Random(c.usize("a count")?)
            } else {
                let x = c.ident("a module name")?;
                let y = c.ident("a module name")?;
                MonoidalArgs::Modules(x, y)
            };
            Command::Monoidal { sections, args }
        }
        "reconstruct" => Command::Reconstruct {
            sections: c.ident("a sections name")?,
        },
        "base-change" => Command::BaseChange {
            map: c.ident("a ringmap name")?,
            module: c.ident("a tmodule name")?,
        },
        "descend" => Command::Descend {
            ringmap: c.ident("a ringmap name")?,
            algebra: c.ident("an algobj name")?,
            algmap: c.ident("an algmap name")?,
            module: c.ident("an amodule name")?,
        },
        "relation" => Command::Relation {
            sections: c.ident("a sections name")?,
            poly: c.expr()?,
        },
        _ => unreachable!("dispatch covers command keywords"),
    };
    c.end()?;
    Ok(cmd)
}

fn check_command(cmd: &Command, line: usize, names: &mut Names) -> Result<(), CliError> {
    let e = |n: &str, k: &[Kind]| names.expect(line, n, k);
    match cmd {
        Command::Monomials { .. } => {}
        Command::Hilbert { module, .. } => e(module, MODULES)?,
        Command::Exact { maps, .. } => {
            for m in maps {
                e(m, &[Kind::Map])?;
            }
        }
        Command::Trunc { .. } => {}
        Command::PhiExtend { trunc, target, .. } => {
            e(trunc, &[Kind::Trunc])?;
            e(target, MODULES)?;
        }
        Command::Sym { module, .. } => e(module, MODULES)?,
        Command::GoodEpi { sections }
        | Command::Reconstruct { sections }
        | Command::TruncIso { sections, .. }
        | Command::Relation { sections, .. } => e(sections, &[Kind::Sections])?,
        Command::Eval { sections, module } => {
            e(sections, &[Kind::Sections])?;
            e(module, MODULES)?;
        }
        Command::Monoidal { sections, args } => {
            e(sections, &[Kind::Sections])?;
            if let MonoidalArgs::Modules(x, y) = args {
                e(x, MODULES)?;
                e(y, MODULES)?;
            }
        }
        Command::BaseChange { map, module } => {
            e(map, &[Kind::RingMap])?;
            e(module, &[Kind::TModule])?;
        }
        Command::Descend { ringmap, algebra, algmap, module } => {
            e(ringmap, &[Kind::RingMap])?;
            e(algebra, &[Kind::Algebra])?;
            e(algmap, &[Kind::AlgMap])?;
            e(module, &[Kind::AModule])?;
        }
    }
    match cmd {
        Command::Trunc { bind: Some(b), .. } => {
            names.define(line, b, Kind::Trunc)?;
            names.define(line, &format!("{b}.rel"), Kind::Map)?;
            names.define(line, &format!("{b}.incl"), Kind::Map)?;
        }
        Command::PhiExtend { bind: Some(b), .. } => names.define(line, b, Kind::Map)?,
        Command::Sym { bind: Some(b), .. } => names.define(line, b, Kind::Module)?,
        _ => {}
    }
    Ok(())
}

const DECLS: &[&str] = &[
    "field", "ring", "free", "matrix", "module", "map", "target", "sections", "tmodule",
    "ringmap", "algobj", "amodule", "algmap",
];
const COMMANDS: &[&str] = &[
    "monomials", "hilbert", "exact", "trunc", "phi-extend", "sym", "good-epi", "eval",
    "trunc-iso", "monoidal", "reconstruct", "base-change", "descend", "relation",
];

/// Parses a script and checks that every name is declared before use with
/// the right kind.
pub fn parse(text: &str) -> Result<SessionScript, CliError> {
    let mut names = Names {
        kinds: HashMap::new(),
    };
    let mut statements = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = body.chars().count() - trimmed.chars().count();
        let kw: String = trimmed.chars().take_while(|c| !c.is_whitespace()).collect();
        let rest_offset = indent + kw.chars().count();
        let rest: String = trimmed.chars().skip(kw.chars().count()).collect();
        let toks = lex(line, &rest, rest_offset)?;
        let mut c = Cursor {
            line,
            toks: &toks,
            pos: 0,
            end_col: body.chars().count() + 1,
        };
        let kind = if DECLS.contains(&kw.as_str()) {
            let d = parse_decl(&kw, &mut c)?;
            check_decl(&d, line, &mut names)?;
            StatementKind::Decl(d)
        } else if COMMANDS.contains(&kw.as_str()) {
            let cmd = parse_command(&kw, &mut c)?;
            check_command(&cmd, line, &mut names)?;
            StatementKind::Command(cmd)
        } else {
            return Err(CliError::Parse {
                line,
                column: indent + 1,
                expected: "a declaration or command keyword".into(),
            });
        };
        statements.push(Statement { line, kind });
    }
    Ok(SessionScript { statements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_script() {
        let s = parse("field F = GF(7)\nring S = F[x0..x1]\n").unwrap();
        assert_eq!(
            s.statements[1].kind,
            StatementKind::Decl(Decl::Ring { name: "S".into(), field: "F".into(), top: 1 })
        );
    }

    #[test]
    fn undeclared_name() {
        let err = parse("field F = Q\nring S = F[x0..x1]\nhilbert X\n").unwrap_err();
        assert_eq!(err, CliError::Name { line: 3, name: "X".into(), detail: "undeclared".into() });
    }

    #[test]
    fn wrong_kind() {
        let err = parse("field F = Q\nhilbert F\n").unwrap_err();
        assert!(matches!(err, CliError::Name { line: 2, .. }));
    }

    #[test]
    fn parse_error_position() {
        let err = parse("field F = Q\nring S = F[x0 x1]\n").unwrap_err();
        assert_eq!(
            err,
            CliError::Parse { line: 2, column: 15, expected: "'..'".into() }
        );
        assert!(matches!(parse("frobnicate x\n"), Err(CliError::Parse { line: 1, column: 1, .. })));
    }

    #[test]
    fn expressions_and_comments() {
        let s = parse("# header\r\nfield F = Q   # trailing\r\nring S = F[x0..x2]\nfree A = S(0) + S(-1)\n\
                       matrix M : A -> A = [[1, 0], [x0 - 2*x1^2, -1/2]]\n")
            .unwrap();
        assert_eq!(s.statements.len(), 4);
        let StatementKind::Decl(Decl::Matrix { rows, .. }) = &s.statements[3].kind else { panic!() };
        assert_eq!(rows[1][1], Expr::Neg(Box::new(Expr::Num(BigRational::new(1.into(), 2.into())))));
    }

    #[test]
    fn trunc_binds_names() {
        let s = parse("trunc 1 0 1 as P\nexact P.rel P.incl -1 6\n").unwrap();
        assert_eq!(
            s.statements[1].kind,
            StatementKind::Command(Command::Exact {
                maps: vec!["P.rel".into(), "P.incl".into()],
                window: Some((-1, 6))
            })
        );
    }
}
