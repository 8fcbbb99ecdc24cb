use std::collections::BTreeMap;

use jones::KnotSpec;
use laurent::{quantum_bracket, LaurentPoly};
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::habiro::HabiroPoly;
use crate::seq::{apply_at, PolySequence};
use crate::{QTorusError, QTorusOp};

/// Sum of monomials `s q^e M^a L^b`.
pub(crate) fn op(terms: &[(i64, i64, i64, i64)]) -> QTorusOp {
    terms.iter().fold(QTorusOp::zero(), |acc, &(s, e, a, b)| &acc + &QTorusOp::mono(s, e, a, b))
}

/// One equation `sum_c (op_c f_c)_n = D aff(q^n)` with `D = 1/(q - q^-1)`.
#[derive(Clone, Debug)]
pub struct Row {
    pub ops: Vec<(usize, QTorusOp)>,
    pub affine: QTorusOp,
}

/// Affine system of q-difference equations over a family of sequences.
#[derive(Clone)]
pub struct LinearSystem {
    pub sequences: Vec<PolySequence>,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    /// `{1} (sum_c (op_c f_c)_n) - aff(q^n)` for every row; zero exactly when
    /// the equations hold at `n`.
    pub fn residuals(&self, n: i64) -> Vec<LaurentPoly> {
        let one = quantum_bracket(1);
        self.rows
            .iter()
            .map(|row| {
                let mut lhs = LaurentPoly::zero();
                for (c, o) in &row.ops {
                    lhs += &apply_at(o, &self.sequences[*c], n);
                }
                &(&one * &lhs) - &row.affine.eval_m(n).inflate(2)
            })
            .collect()
    }
}

/// A q-difference relation with a default verification range.
pub trait Relation: Send + Sync {
    /// Canonical identifier, parameters included.
    fn id(&self) -> String;
    fn anchor(&self) -> &'static str;
    fn default_range(&self) -> (i64, i64);
    fn system(&self) -> LinearSystem;
}

/// `(id - q^{2ab} M^{-2ab} L^{-2}) J = q D q^e M^{-e} (1 - q^{2a-2} M^{-2a} - q^{2b-2} M^{-2b} + q^{2a+2b} M^{-2a-2b})`
/// for the `(a,b)` torus knot, `e = ab - a - b`.
pub struct TorusTwoStep {
    pub a: i64,
    pub b: i64,
}

impl TorusTwoStep {
    pub fn operator(&self) -> QTorusOp {
        let ab = self.a * self.b;
        op(&[(1, 0, 0, 0), (-1, 2 * ab, -2 * ab, -2)])
    }

    pub fn affine(&self) -> QTorusOp {
        let (a, b) = (self.a, self.b);
        let e = a * b - a - b;
        op(&[
            (1, e + 1, -e, 0),
            (-1, e + 2 * a - 1, -e - 2 * a, 0),
            (-1, e + 2 * b - 1, -e - 2 * b, 0),
            (1, e + 2 * a + 2 * b + 1, -e - 2 * a - 2 * b, 0),
        ])
    }
}

impl Relation for TorusTwoStep {
    fn id(&self) -> String {
        format!("torus-two-step:{},{}", self.a, self.b)
    }
    fn anchor(&self) -> &'static str {
        "torus knot two-step recurrence"
    }
    fn default_range(&self) -> (i64, i64) {
        (3, 40)
    }
    fn system(&self) -> LinearSystem {
        let knot = KnotSpec::Torus { a: self.a, b: self.b };
        LinearSystem {
            sequences: vec![PolySequence::jones(knot)],
            rows: vec![Row { ops: vec![(0, self.operator())], affine: self.affine() }],
        }
    }
}

/// `(id + q^b M^{-2b} L^{-1}) J = D q^b M^{-b} (q^{-1} M^2 - q M^{-2})` for the `(2,b)` torus knot.
pub struct TorusOneStep {
    pub b: i64,
}

impl TorusOneStep {
    pub fn operator(&self) -> QTorusOp {
        op(&[(1, 0, 0, 0), (1, self.b, -2 * self.b, -1)])
    }

    pub fn affine(&self) -> QTorusOp {
        let b = self.b;
        op(&[(1, b - 1, 2 - b, 0), (-1, b + 1, -b - 2, 0)])
    }
}

impl Relation for TorusOneStep {
    fn id(&self) -> String {
        format!("torus-one-step:{}", self.b)
    }
    fn anchor(&self) -> &'static str {
        "(2,b) torus knot one-step recurrence"
    }
    fn default_range(&self) -> (i64, i64) {
        (2, 40)
    }
    fn system(&self) -> LinearSystem {
        LinearSystem {
            sequences: vec![PolySequence::jones(KnotSpec::Torus { a: 2, b: self.b })],
            rows: vec![Row { ops: vec![(0, self.operator())], affine: self.affine() }],
        }
    }
}

/// The three shift identities of the Habiro bracket:
/// `<P> = <A P(q^2 x)> + (M - M^-1) R`, `L<P> = <B P(q^2 x)> + (qM - q^-1 M^-1) R`,
/// `L^-1<P> = <C P(q^2 x)> + (q^-1 M - q M^-1) R`, with `R = D P(q, M, 1)`.
pub struct BracketShift {
    pub label: String,
    pub p: HabiroPoly,
}

impl BracketShift {
    pub fn new(label: &str) -> Result<Self, QTorusError> {
        let p = match label {
            "1" => HabiroPoly::one(),
            "x" => HabiroPoly::x(),
            _ => {
                return Err(QTorusError::BadParams {
                    relation: "habiro-bracket".into(),
                    reason: format!("P must be 1 or x, got `{label}`"),
                })
            }
        };
        Ok(Self { label: label.into(), p })
    }

    fn multipliers() -> [HabiroPoly; 3] {
        let h = |t: &[(i64, i64, i64, i64)]| {
            t.iter().fold(HabiroPoly::zero(), |acc, &(s, e, a, c)| &acc + &HabiroPoly::mono(s, e, a, c))
        };
        [
            h(&[(1, 0, 2, 0), (1, 0, -2, 0), (-1, 2, 0, 1), (-1, -2, 0, -1)]),
            h(&[(1, 3, 2, 1), (1, -3, -2, -1), (-1, 1, 0, 0), (-1, -1, 0, 0)]),
            h(&[(1, 3, -2, 1), (1, -3, 2, -1), (-1, 1, 0, 0), (-1, -1, 0, 0)]),
        ]
    }
}

impl Relation for BracketShift {
    fn id(&self) -> String {
        format!("habiro-bracket:{}", self.label)
    }
    fn anchor(&self) -> &'static str {
        "shift identities of the Habiro bracket"
    }
    fn default_range(&self) -> (i64, i64) {
        (1, 20)
    }
    fn system(&self) -> LinearSystem {
        let shifted = self.p.shift_x(2);
        let mut sequences = vec![PolySequence::bracket_of(self.p.clone())];
        for m in Self::multipliers() {
            sequences.push(PolySequence::bracket_of(&m * &shifted));
        }
        let r = self.p.at_x_one();
        let lhs = [QTorusOp::identity(), QTorusOp::l(), QTorusOp::mono(1, 0, 0, -1)];
        let aff = [
            op(&[(1, 0, 1, 0), (-1, 0, -1, 0)]),
            op(&[(1, 1, 1, 0), (-1, -1, -1, 0)]),
            op(&[(1, -1, 1, 0), (-1, 1, -1, 0)]),
        ];
        let rows = (0..3)
            .map(|i| Row { ops: vec![(0, lhs[i].clone()), (i + 1, -&QTorusOp::identity())], affine: &aff[i] * &r })
            .collect();
        LinearSystem { sequences, rows }
    }
}

/// `Q J = R` for the figure-eight knot.
pub struct Fig8Inhomogeneous;

impl Fig8Inhomogeneous {
    pub fn operator() -> QTorusOp {
        let m2 = op(&[(1, 0, 2, 0), (-1, 0, -2, 0)]);
        let inner = op(&[(-1, 0, 4, 0), (-1, 0, -4, 0), (1, 0, 2, 0), (1, 0, -2, 0), (1, 2, 0, 0), (1, -2, 0, 0)]);
        &op(&[(1, -1, 2, 1), (-1, 1, -2, 1), (1, 1, 2, -1), (-1, -1, -2, -1)]) + &(&m2 * &inner)
    }

    /// `R / D`.
    pub fn affine() -> QTorusOp {
        op(&[
            (1, 0, 5, 0),
            (1, 0, -5, 0),
            (1, 0, 3, 0),
            (1, 0, -3, 0),
            (-1, 2, 1, 0),
            (-1, -2, 1, 0),
            (-1, 2, -1, 0),
            (-1, -2, -1, 0),
        ])
    }
}

impl Relation for Fig8Inhomogeneous {
    fn id(&self) -> String {
        "fig8-inhomogeneous".into()
    }
    fn anchor(&self) -> &'static str {
        "inhomogeneous figure-eight recurrence QJ = R"
    }
    fn default_range(&self) -> (i64, i64) {
        (1, 40)
    }
    fn system(&self) -> LinearSystem {
        LinearSystem {
            sequences: vec![PolySequence::jones(KnotSpec::FigureEight)],
            rows: vec![Row { ops: vec![(0, Self::operator())], affine: Self::affine() }],
        }
    }
}

/// First-order system for `(J_n, I_n)` with `I_n = <x>_n`.
pub struct Fig8System;

impl Fig8System {
    /// Rows `[L - a11, -a12]` and `[-a21, L - a22]` with their affine parts.
    pub fn rows() -> Vec<Row> {
        let l = QTorusOp::l();
        let a11 = op(&[(1, -1, -4, 0), (-1, -1, -2, 0), (-1, 1, 0, 0)]);
        let a12 = op(&[(1, 3, 2, 0), (-1, 1, -2, 0)]);
        let a21 = op(&[(1, -1, -2, 0), (-1, 1, 2, 0)]);
        let a22 = op(&[(1, 3, 4, 0), (-1, 1, 2, 0), (-1, 1, 0, 0)]);
        vec![
            Row { ops: vec![(0, &l - &a11), (1, -&a12)], affine: op(&[(1, 1, 1, 0), (-1, -1, -3, 0)]) },
            Row { ops: vec![(0, -&a21), (1, &l - &a22)], affine: op(&[(1, 1, 3, 0), (-1, -1, -1, 0)]) },
        ]
    }
}

impl Relation for Fig8System {
    fn id(&self) -> String {
        "fig8-system".into()
    }
    fn anchor(&self) -> &'static str {
        "first-order system for the figure-eight knot"
    }
    fn default_range(&self) -> (i64, i64) {
        (1, 30)
    }
    fn system(&self) -> LinearSystem {
        LinearSystem {
            sequences: vec![PolySequence::jones(KnotSpec::FigureEight), PolySequence::bracket_of(HabiroPoly::x())],
            rows: Self::rows(),
        }
    }
}

type Factory = fn(&str) -> Result<Box<dyn Relation>, QTorusError>;

fn ints(name: &str, params: &str) -> Result<Vec<i64>, QTorusError> {
    params
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| QTorusError::BadParams { relation: name.into(), reason: e.to_string() })
}

fn two_step(params: &str) -> Result<Box<dyn Relation>, QTorusError> {
    let v = ints("torus-two-step", if params.is_empty() { "2,3" } else { params })?;
    let [a, b] = v[..] else {
        return Err(QTorusError::BadParams { relation: "torus-two-step".into(), reason: "expected a,b".into() });
    };
    KnotSpec::torus(a, b)?;
    Ok(Box::new(TorusTwoStep { a, b }))
}

fn one_step(params: &str) -> Result<Box<dyn Relation>, QTorusError> {
    let v = ints("torus-one-step", if params.is_empty() { "3" } else { params })?;
    match v[..] {
        [b] if b >= 3 && b % 2 != 0 => Ok(Box::new(TorusOneStep { b })),
        _ => Err(QTorusError::BadParams { relation: "torus-one-step".into(), reason: "expected an odd b >= 3".into() }),
    }
}

fn bracket_shift(params: &str) -> Result<Box<dyn Relation>, QTorusError> {
    Ok(Box::new(BracketShift::new(if params.is_empty() { "1" } else { params })?))
}

fn fig8_inhomogeneous(_: &str) -> Result<Box<dyn Relation>, QTorusError> {
    Ok(Box::new(Fig8Inhomogeneous))
}

fn fig8_system(_: &str) -> Result<Box<dyn Relation>, QTorusError> {
    Ok(Box::new(Fig8System))
}

static REGISTRY: Lazy<BTreeMap<&'static str, Factory>> = Lazy::new(|| {
    let entries: [(&str, &str, Factory); 5] = [
        ("torus-two-step", "prop4.2", two_step),
        ("torus-one-step", "prop4.3", one_step),
        ("habiro-bracket", "prop4.4", bracket_shift),
        ("fig8-inhomogeneous", "prop4.5", fig8_inhomogeneous),
        ("fig8-system", "prop4.6", fig8_system),
    ];
    let mut m = BTreeMap::new();
    for (name, alias, f) in entries {
        m.insert(name, f);
        m.insert(alias, f);
    }
    m
});

/// Registered relation names and aliases.
pub fn relation_names() -> Vec<&'static str> {
    REGISTRY.keys().copied().collect()
}

/// Builds a relation from `name` or `name:params`, e.g. `torus-two-step:3,4`
/// or `prop4.4:x`. Names are case-insensitive.
pub fn relation_from_id(id: &str) -> Result<Box<dyn Relation>, QTorusError> {
    let (name, params) = id.split_once(':').unwrap_or((id, ""));
    let name = name.trim().to_ascii_lowercase();
    let f = REGISTRY.get(name.as_str()).ok_or_else(|| QTorusError::UnknownRelation(id.into()))?;
    f(params.trim())
}

/// The exact recurrence suite with default ranges.
pub fn standard_suite() -> Vec<Box<dyn Relation>> {
    let mut out: Vec<Box<dyn Relation>> = Vec::new();
    for (a, b) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
        out.push(Box::new(TorusTwoStep { a, b }));
    }
    for b in [3, 5, 7] {
        out.push(Box::new(TorusOneStep { b }));
    }
    for p in ["1", "x"] {
        out.push(Box::new(BracketShift::new(p).expect("valid label")));
    }
    out.push(Box::new(Fig8Inhomogeneous));
    out.push(Box::new(Fig8System));
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub relation: String,
    pub range: [i64; 2],
    pub all_zero: bool,
    pub first_failure: Option<i64>,
    /// Text of the first nonzero residual.
    pub witness: Option<String>,
}

/// Checks every row of the relation at each `n` in `lo..=hi`.
pub fn verify_recurrence(rel: &dyn Relation, lo: i64, hi: i64) -> RecurrenceReport {
    let system = rel.system();
    let mut report =
        RecurrenceReport { relation: rel.id(), range: [lo, hi], all_zero: true, first_failure: None, witness: None };
    for n in lo..=hi {
        if let Some(r) = system.residuals(n).into_iter().find(|r| !r.is_zero()) {
            report.all_zero = false;
            report.first_failure = Some(n);
            report.witness = Some(r.to_string());
            break;
        }
    }
    report
}
