//! Parser for relationship statements written in table notation, e.g.
//! `m[ABCD]=dp(EFGH)`, `QA-P1=homot[ABCD,EFGH]=QA-P1` or `[ABCD]/[EFGH]=9/4`.
//! A statement is a conjunction of atoms, each matched against detected
//! relations.

use crate::relation::parse_rational;
use crate::{Alignment, CenterRef, NotationError, Pairing, Relation, RelationKind, Role};
use cqe_numerics::SmallRational;
use cqe_quadcenters::QuadCenterKind;

/// A center named inside a statement. Quadrangle centers without a native
/// construction (QA-P4 and so on) cannot be checked and match anything.
#[derive(Debug, Clone, PartialEq)]
pub enum IdPattern {
    Known(CenterRef),
    Unchecked(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Located {
    Homothety,
    Perspector,
    Conic,
    Hyperbola,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Atom {
    /// Any relation of the named kind, e.g. from a bare `concentric`.
    Kind(String),
    AreaEqual,
    AreaRatio(SmallRational),
    Congruent(Option<Alignment>),
    Similar(Option<Alignment>),
    Orthogonal(Option<Alignment>),
    PerimeterEqual,
    CircumcircleCongruent,
    CircumcircleSame,
    /// Shared circumcenter, concentric or not.
    CircumcenterSame,
    IncenterSame,
    DpSame(Pairing),
    Point { what: Located, alignment: Alignment, ids: Vec<IdPattern> },
    Coincide(QuadCenterKind, QuadCenterKind),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub source: String,
    pub atoms: Vec<Atom>,
}

/// QA-P2 and QA-P3 are named anti and o on cyclic quadrilaterals.
fn same_center(a: QuadCenterKind, b: QuadCenterKind) -> bool {
    use QuadCenterKind::*;
    let canon = |k| match k {
        Anticenter => Poncelet,
        Circumcenter => Steiner,
        k => k,
    };
    canon(a) == canon(b)
}

impl Atom {
    pub fn matches(&self, r: &Relation) -> bool {
        use RelationKind as K;
        let al_ok = |want: &Option<Alignment>| want.is_none_or(|a| a == r.alignment);
        match (self, &r.kind) {
            (Atom::Kind(n), k) => n == k.name() || (n == "circumcenter_same" && k.name() == "circumcircle_concentric"),
            (Atom::AreaEqual, K::AreaEqual) => true,
            (Atom::AreaRatio(a), K::AreaRatio { k }) => a == k,
            (Atom::Congruent(a), K::Congruent) => al_ok(a),
            (Atom::Similar(a), K::Similar { .. }) => al_ok(a),
            (Atom::Orthogonal(a), K::Orthogonal) => al_ok(a),
            (Atom::PerimeterEqual, K::PerimeterEqual) => true,
            (Atom::CircumcircleCongruent, K::CircumcircleCongruent) => true,
            (Atom::CircumcircleSame, K::CircumcircleSame) => true,
            (Atom::CircumcenterSame, K::CircumcenterSame | K::CircumcircleConcentric { .. }) => true,
            (Atom::IncenterSame, K::IncenterSame) => true,
            (Atom::DpSame(p), K::DpSame { pairing }) => p == pairing,
            (Atom::Coincide(a, b), K::CentersCoincide { on_ref, on_central }) => a == on_ref && b == on_central,
            (Atom::Point { what, alignment, ids }, kind) => {
                let found = match (what, kind) {
                    (Located::Homothety, K::Homothetic { ids, .. }) => ids,
                    (Located::Perspector, K::Perspective { ids, .. }) => ids,
                    (Located::Conic, K::ConicCommon { ids, .. }) => ids,
                    (Located::Hyperbola, K::HyperbCommon { ids, .. }) => ids,
                    _ => return false,
                };
                *alignment == r.alignment
                    && ids.iter().all(|p| match p {
                        IdPattern::Known(c) => found.iter().any(|f| f.role == c.role && same_center(f.kind, c.kind)),
                        IdPattern::Unchecked(_) => true,
                    })
            }
            _ => false,
        }
    }

    /// True when the atom names a center the detectors cannot construct.
    pub fn has_unchecked(&self) -> bool {
        matches!(self, Atom::Point { ids, .. } if ids.iter().any(|i| matches!(i, IdPattern::Unchecked(_))))
    }
}

impl Statement {
    /// Every atom is matched by some relation.
    pub fn holds(&self, rels: &[Relation]) -> bool {
        self.atoms.iter().all(|a| rels.iter().any(|r| a.matches(r)))
    }

    /// Relations that some atom of this statement accounts for.
    pub fn covers(&self, r: &Relation) -> bool {
        self.atoms.iter().any(|a| a.matches(r))
    }
}

fn normalize(src: &str) -> String {
    let mut s = src.to_string();
    for (from, to) in [
        ("\\mathrm", ""),
        ("\\raggedright", ""),
        ("\\cong", "≅"),
        ("\\sim", "∼"),
        ("\\equiv", "≡"),
        ("\\odot", "⊙"),
        ("\\partial", "∂"),
        ("\\perp", "⊥"),
        ("~=", "≅"),
        ("~", "∼"),
        ("$", ""),
        ("{", ""),
        ("}", ""),
        ("\\", ""),
    ] {
        s = s.replace(from, to);
    }
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn bare_kind(word: &str) -> Option<&'static str> {
    let w = word.to_ascii_lowercase().replace('-', "_");
    Some(match w.as_str() {
        "area_equal" | "same_area" => "area_equal",
        "area_ratio" => "area_ratio",
        "congruent" => "congruent",
        "similar" => "similar",
        "homothetic" | "homot" => "homothetic",
        "perspective" | "persp" => "perspective",
        "perimeter_equal" | "same_perimeter" => "perimeter_equal",
        "circumcircle_congruent" => "circumcircle_congruent",
        "circumcircle_same" | "same_circumcircle" => "circumcircle_same",
        "concentric" | "circumcircle_concentric" => "circumcircle_concentric",
        "circumcenter_same" => "circumcenter_same",
        "incenter_same" => "incenter_same",
        "dp_same" => "dp_same",
        "conic" | "conic_common" => "conic_common",
        "hyperb" | "hyperb_common" => "hyperb_common",
        "orthogonal" => "orthogonal",
        "centers_coincide" => "centers_coincide",
        _ => return None,
    })
}

fn err(pos: usize, msg: impl Into<String>) -> NotationError {
    NotationError::Syntax { pos, msg: msg.into() }
}

/// Splits on `=` outside brackets.
fn split_terms(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '=' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

fn role_of(name: &str) -> Option<Role> {
    match name {
        "ABCD" => Some(Role::Reference),
        "EFGH" => Some(Role::Central),
        _ => None,
    }
}

fn qa_label(s: &str) -> Option<Option<QuadCenterKind>> {
    let n: u32 = s.strip_prefix("QA-P")?.parse().ok()?;
    Some(match n {
        1 => Some(QuadCenterKind::VertexCentroid),
        2 => Some(QuadCenterKind::Poncelet),
        3 => Some(QuadCenterKind::Steiner),
        7 => Some(QuadCenterKind::Centrocenter),
        _ => None,
    })
}

/// `name[ARGS]` or `name(ARGS)`.
fn call(term: &str) -> Option<(&str, Vec<&str>)> {
    let open = term.find(['[', '('])?;
    let close = term.len() - 1;
    if !matches!(term.as_bytes()[close], b']' | b')') {
        return None;
    }
    Some((&term[..open], term[open + 1..close].split(',').collect()))
}

enum Term<'a> {
    Center { kind: QuadCenterKind, quad: &'a str },
    Qa(String, Option<QuadCenterKind>),
    Located { what: Located, alignment: Alignment },
}

fn term<'a>(pos: usize, t: &'a str) -> Result<Term<'a>, NotationError> {
    if let Some(k) = qa_label(t) {
        return Ok(Term::Qa(t.to_string(), k));
    }
    let (name, args) = call(t).ok_or_else(|| err(pos, format!("cannot read `{t}`")))?;
    let what = match name {
        "homot" => Some(Located::Homothety),
        "persp" => Some(Located::Perspector),
        "conic" => Some(Located::Conic),
        "hyperb" => Some(Located::Hyperbola),
        _ => None,
    };
    if let Some(what) = what {
        if args.len() != 2 || args[0] != "ABCD" {
            return Err(err(pos, format!("`{name}` takes (ABCD, <alignment>)")));
        }
        let alignment = Alignment::parse(args[1]).ok_or_else(|| err(pos, format!("bad alignment `{}`", args[1])))?;
        return Ok(Term::Located { what, alignment });
    }
    let kind: QuadCenterKind = name.parse().map_err(|m: String| err(pos, m))?;
    match args.as_slice() {
        [q] => Ok(Term::Center { kind, quad: q }),
        _ => Err(err(pos, format!("`{name}` takes one quadrilateral"))),
    }
}

/// `k[QUAD]` split into `k` and the quadrilateral. Area does not depend on the
/// vertex order, so any dihedral order of EFGH names the central quad.
fn area_term(t: &str) -> Option<(&str, Role)> {
    let q = t.strip_suffix(']')?;
    let (k, name) = q.rsplit_once('[')?;
    let role = match name {
        "ABCD" => Role::Reference,
        _ => Alignment::parse(name).map(|_| Role::Central)?,
    };
    Some((k, role))
}

fn area_atom(terms: &[(usize, &str)]) -> Option<Atom> {
    let num = |s: &str| -> Option<SmallRational> { if s.is_empty() { Some(SmallRational::new(1, 1)) } else { parse_rational(s) } };
    let atom = |k: SmallRational| if k.num == 1 && k.den == 1 { Atom::AreaEqual } else { Atom::AreaRatio(k) };
    let [(_, l), (_, r)] = terms else { return None };
    if let Some((lq, rq)) = l.split_once('/') {
        return match (area_term(lq)?, area_term(rq)?) {
            (("", Role::Reference), ("", Role::Central)) => Some(atom(parse_rational(r)?)),
            _ => None,
        };
    }
    match (area_term(l)?, area_term(r)?) {
        (("", Role::Reference), (k, Role::Central)) => Some(atom(num(k)?)),
        (("", Role::Central), (k, Role::Reference)) => Some(atom(num(k)?.recip()?)),
        _ => None,
    }
}

fn binary_atom(t: &str) -> Option<Atom> {
    let strip = |s: &str| s.trim_start_matches('⊙').trim_start_matches('(').trim_end_matches(')').to_string();
    for (op, circ) in [("≅", false), ("∼", false), ("⊥", false), ("≡", true)] {
        if let Some((l, r)) = t.split_once(op) {
            let circle = circ || l.starts_with('⊙') || l.starts_with('(');
            let (l, r) = (strip(l), strip(r));
            if l != "ABCD" {
                return None;
            }
            let al = Alignment::parse(&r)?;
            return Some(match (op, circle) {
                ("≅", true) => Atom::CircumcircleCongruent,
                ("≡", _) => Atom::CircumcircleSame,
                ("≅", false) => Atom::Congruent(Some(al)),
                ("∼", _) => Atom::Similar(Some(al)),
                _ => Atom::Orthogonal(Some(al)),
            });
        }
    }
    None
}

fn pairing_of(a: &str, e: &str) -> Option<Pairing> {
    Pairing::ALL.into_iter().find(|p| {
        let (pa, pe) = p.names();
        pa == a && pe == e
    })
}

pub fn parse_statement(src: &str) -> Result<Statement, NotationError> {
    let s = normalize(src);
    let done = |atoms: Vec<Atom>| Ok(Statement { source: src.trim().to_string(), atoms });
    if s.is_empty() {
        return Err(err(0, "empty statement"));
    }
    if let Some(k) = bare_kind(&s) {
        return done(vec![Atom::Kind(k.to_string())]);
    }
    let terms = split_terms(&s);
    if let Some(a) = area_atom(&terms) {
        return done(vec![a]);
    }
    if terms.len() == 1 {
        if let Some(a) = binary_atom(&s) {
            return done(vec![a]);
        }
    }
    if terms.len() == 2 && terms.iter().all(|(_, t)| t.starts_with('∂')) {
        let names: Vec<String> =
            terms.iter().map(|(_, t)| t.trim_start_matches('∂').trim_matches(['[', ']', '(', ')']).to_string()).collect();
        if names == ["ABCD", "EFGH"] {
            return done(vec![Atom::PerimeterEqual]);
        }
        return Err(NotationError::Unsupported(src.into()));
    }

    let parsed: Vec<Term> = terms.iter().map(|(p, t)| term(*p, t)).collect::<Result<_, _>>()?;
    let located: Vec<usize> = parsed.iter().enumerate().filter(|(_, t)| matches!(t, Term::Located { .. })).map(|(i, _)| i).collect();
    match located.as_slice() {
        [at] => {
            let Term::Located { what, alignment } = parsed[*at] else { unreachable!() };
            let mut ids = Vec::new();
            for (i, t) in parsed.iter().enumerate() {
                let side = if i < *at { Role::Reference } else { Role::Central };
                match t {
                    Term::Located { .. } => {}
                    Term::Qa(label, None) => ids.push(IdPattern::Unchecked(label.clone())),
                    Term::Qa(_, Some(kind)) => ids.push(IdPattern::Known(CenterRef { role: side, kind: *kind })),
                    Term::Center { kind, quad } => {
                        let role = role_of(quad).ok_or_else(|| err(terms[i].0, format!("unknown quadrilateral `{quad}`")))?;
                        ids.push(IdPattern::Known(CenterRef { role, kind: *kind }));
                    }
                }
            }
            done(vec![Atom::Point { what, alignment, ids }])
        }
        [] => {
            let mut refs = Vec::new();
            let mut cents = Vec::new();
            for (i, t) in parsed.iter().enumerate() {
                match t {
                    Term::Center { kind, quad } => match (role_of(quad), kind) {
                        (Some(Role::Reference), _) => refs.push((*kind, *quad)),
                        (Some(Role::Central), _) => cents.push((*kind, *quad)),
                        (None, QuadCenterKind::DiagonalPoint) if quad.starts_with('A') => refs.push((*kind, *quad)),
                        (None, QuadCenterKind::DiagonalPoint) if quad.starts_with('E') => cents.push((*kind, *quad)),
                        _ => return Err(err(terms[i].0, format!("unknown quadrilateral `{quad}`"))),
                    },
                    _ => return Err(err(terms[i].0, "quadrangle labels need a relation such as persp[...]")),
                }
            }
            if refs.is_empty() || cents.is_empty() {
                return Err(NotationError::Unsupported(src.into()));
            }
            let mut atoms = Vec::new();
            for (k1, q1) in &refs {
                for (k2, q2) in &cents {
                    let dp = QuadCenterKind::DiagonalPoint;
                    let atom = match (k1, k2) {
                        (a, b) if *a == dp && *b == dp => {
                            Atom::DpSame(pairing_of(q1, q2).ok_or_else(|| err(0, format!("dp({q1}) and dp({q2}) do not correspond")))?)
                        }
                        (QuadCenterKind::Circumcenter, QuadCenterKind::Circumcenter) => Atom::CircumcenterSame,
                        (QuadCenterKind::Incenter, QuadCenterKind::Incenter) => Atom::IncenterSame,
                        _ if q1.len() == 4 && (*q1 != "ABCD" || *q2 != "EFGH") => {
                            return Err(err(0, "only diagonal points use re-paired vertex orders"))
                        }
                        _ => Atom::Coincide(*k1, *k2),
                    };
                    atoms.push(atom);
                }
            }
            done(atoms)
        }
        _ => Err(NotationError::Unsupported(src.into())),
    }
}
