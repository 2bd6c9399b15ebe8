//! JSON files: systems, matrices, certificates, games and fixture facts.
//!
//! Every value is a string in the core format (`"3"`, `"-1/2"`, `"inf"`), so
//! nothing passes through floating point.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tropsatz_core::game::GameGraph;
use tropsatz_core::linsys::TropMatrix;
use tropsatz_core::macaulay::{MacaulaySystem, MonomialIndex, Semiring};
use tropsatz_core::nullsatz::{Certificate, DominatedCombination, NonsingularCombination, Part, Polys, System};
use tropsatz_core::oracle::Fixture;
use tropsatz_core::{Exponent, ExtValue, MinPlusPolynomial, Point, Rational, TropicalPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SemiringName {
    R,
    Rinf,
}

impl From<Semiring> for SemiringName {
    fn from(s: Semiring) -> Self {
        match s {
            Semiring::R => SemiringName::R,
            Semiring::RInf => SemiringName::Rinf,
        }
    }
}

impl From<SemiringName> for Semiring {
    fn from(s: SemiringName) -> Self {
        match s {
            SemiringName::R => Semiring::R,
            SemiringName::Rinf => Semiring::RInf,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindName {
    Tropical,
    Minplus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialJson {
    pub coef: String,
    pub exp: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TropicalJson {
    pub monomials: Vec<MonomialJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinPlusJson {
    pub lhs: TropicalJson,
    pub rhs: TropicalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolynomialJson {
    MinPlus(MinPlusJson),
    Tropical(TropicalJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub semiring: SemiringName,
    pub kind: KindName,
    pub num_vars: usize,
    pub polynomials: Vec<PolynomialJson>,
}

pub fn parse_value(s: &str) -> Result<ExtValue> {
    s.parse::<ExtValue>().map_err(|e| anyhow!("bad value {s:?}: {e}"))
}

pub fn parse_finite(s: &str) -> Result<Rational> {
    match parse_value(s)? {
        ExtValue::Finite(r) => Ok(r),
        ExtValue::Infinity => bail!("value must be finite here"),
    }
}

/// Parses `"v1,v2,..."`; an empty string is the point in zero variables.
pub fn parse_point(s: &str) -> Result<Point> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_value).collect()
}

pub fn point_strings(p: &[ExtValue]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

pub fn format_point(p: &[ExtValue]) -> String {
    point_strings(p).join(",")
}

fn tropical_from_json(n: usize, p: &TropicalJson) -> Result<TropicalPolynomial> {
    let mut terms = Vec::with_capacity(p.monomials.len());
    for m in &p.monomials {
        ensure!(m.exp.len() == n, "exponent {:?} has {} entries, expected {n}", m.exp, m.exp.len());
        let c = parse_value(&m.coef)?;
        ensure!(c.is_finite(), "coefficient inf is written by leaving the monomial out");
        terms.push((Exponent(m.exp.clone()), c));
    }
    Ok(TropicalPolynomial::new(n, terms)?)
}

fn tropical_to_json(p: &TropicalPolynomial) -> TropicalJson {
    let monomials = p.phi().iter().map(|(e, c)| MonomialJson { coef: c.to_string(), exp: e.0.clone() }).collect();
    TropicalJson { monomials }
}

impl SystemFile {
    pub fn to_system(&self) -> Result<(System, Semiring)> {
        let n = self.num_vars;
        let system = match self.kind {
            KindName::Tropical => {
                let polys = self
                    .polynomials
                    .iter()
                    .enumerate()
                    .map(|(i, p)| match p {
                        PolynomialJson::Tropical(t) => {
                            tropical_from_json(n, t).with_context(|| format!("polynomial {i}"))
                        }
                        PolynomialJson::MinPlus(_) => bail!("polynomial {i} is a pair in a tropical system"),
                    })
                    .collect::<Result<Vec<_>>>()?;
                System::tropical(n, polys)
            }
            KindName::Minplus => {
                let polys = self
                    .polynomials
                    .iter()
                    .enumerate()
                    .map(|(i, p)| match p {
                        PolynomialJson::MinPlus(mp) => {
                            let lhs = tropical_from_json(n, &mp.lhs).with_context(|| format!("polynomial {i} lhs"))?;
                            let rhs = tropical_from_json(n, &mp.rhs).with_context(|| format!("polynomial {i} rhs"))?;
                            Ok(MinPlusPolynomial::new(lhs, rhs)?)
                        }
                        PolynomialJson::Tropical(_) => bail!("polynomial {i} needs lhs and rhs in a min-plus system"),
                    })
                    .collect::<Result<Vec<_>>>()?;
                System::minplus(n, polys)
            }
        };
        Ok((system, self.semiring.into()))
    }

    pub fn from_system(system: &System, semiring: Semiring) -> Self {
        let (kind, polynomials) = match &system.polys {
            Polys::Tropical(p) => {
                (KindName::Tropical, p.iter().map(|f| PolynomialJson::Tropical(tropical_to_json(f))).collect())
            }
            Polys::MinPlus(p) => (
                KindName::Minplus,
                p.iter()
                    .map(|f| {
                        PolynomialJson::MinPlus(MinPlusJson {
                            lhs: tropical_to_json(&f.lhs),
                            rhs: tropical_to_json(&f.rhs),
                        })
                    })
                    .collect(),
            ),
        };
        SystemFile { semiring: semiring.into(), kind, num_vars: system.num_vars, polynomials }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
    /// Exponent of each column, for Macaulay matrices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub legend: Option<Vec<Vec<u32>>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<TropMatrix> {
        let mut data: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        let mut seen = BTreeSet::new();
        for (i, j, v) in &self.entries {
            ensure!(*i < self.rows && *j < self.cols, "entry ({i}, {j}) outside a {}×{} matrix", self.rows, self.cols);
            ensure!(seen.insert((*i, *j)), "entry ({i}, {j}) appears twice");
            let v = parse_finite(v).with_context(|| format!("entry ({i}, {j}); absent entries are inf"))?;
            data[*i].push((*j, v));
        }
        if let Some(legend) = &self.legend {
            ensure!(legend.len() == self.cols, "legend has {} columns, matrix has {}", legend.len(), self.cols);
        }
        for row in &mut data {
            row.sort_by_key(|(j, _)| *j);
        }
        Ok(TropMatrix::from_sparse_rows(self.cols, data))
    }

    pub fn from_matrix(m: &TropMatrix, legend: Option<&MonomialIndex>) -> Self {
        let entries = m.entries().map(|(i, j, v)| (i, j, v.to_string())).collect();
        let legend = legend.map(|idx| idx.exponents().iter().map(|e| e.0.clone()).collect());
        MatrixFile { rows: m.rows(), cols: m.cols(), entries, legend }
    }
}

/// One Macaulay system: a matrix for tropical input, a pair for min-plus input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MacaulayFile {
    Pair { lhs: MatrixFile, rhs: MatrixFile },
    Single(MatrixFile),
}

impl MacaulayFile {
    pub fn from_system(m: &MacaulaySystem) -> Self {
        let lhs = MatrixFile::from_matrix(&m.lhs, Some(&m.index));
        match &m.rhs {
            None => MacaulayFile::Single(lhs),
            Some(r) => MacaulayFile::Pair { lhs, rhs: MatrixFile::from_matrix(r, Some(&m.index)) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartJson {
    pub poly: usize,
    pub shift: Vec<u32>,
    pub coef: String,
    #[serde(default)]
    pub swapped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub exp: Vec<u32>,
    pub part: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CertificateFile {
    Root { point: Vec<String> },
    Nonsingular { semiring: SemiringName, degree: u64, parts: Vec<PartJson>, witness: Vec<WitnessJson> },
    Dominated { semiring: SemiringName, degree: u64, parts: Vec<PartJson> },
}

fn parts_to_json(parts: &[Part]) -> Vec<PartJson> {
    parts
        .iter()
        .map(|p| PartJson { poly: p.poly, shift: p.shift.0.clone(), coef: p.coef.to_string(), swapped: p.swapped })
        .collect()
}

fn parts_from_json(parts: &[PartJson]) -> Result<Vec<Part>> {
    parts
        .iter()
        .map(|p| {
            Ok(Part {
                poly: p.poly,
                shift: Exponent(p.shift.clone()),
                coef: parse_finite(&p.coef)?,
                swapped: p.swapped,
            })
        })
        .collect()
}

impl CertificateFile {
    pub fn root(point: &[ExtValue]) -> Self {
        CertificateFile::Root { point: point_strings(point) }
    }

    pub fn from_certificate(c: &Certificate) -> Self {
        match c {
            Certificate::Nonsingular(c) => CertificateFile::Nonsingular {
                semiring: c.semiring.into(),
                degree: c.degree,
                parts: parts_to_json(&c.parts),
                witness: c.witness.iter().map(|(e, k)| WitnessJson { exp: e.0.clone(), part: *k }).collect(),
            },
            Certificate::Dominated(c) => CertificateFile::Dominated {
                semiring: c.semiring.into(),
                degree: c.degree,
                parts: parts_to_json(&c.parts),
            },
        }
    }

    /// The no-root certificate, or `None` for a root.
    pub fn to_certificate(&self) -> Result<Option<Certificate>> {
        Ok(match self {
            CertificateFile::Root { .. } => None,
            CertificateFile::Nonsingular { semiring, degree, parts, witness } => {
                Some(Certificate::Nonsingular(NonsingularCombination {
                    semiring: (*semiring).into(),
                    degree: *degree,
                    parts: parts_from_json(parts)?,
                    witness: witness.iter().map(|w| (Exponent(w.exp.clone()), w.part)).collect(),
                }))
            }
            CertificateFile::Dominated { semiring, degree, parts } => {
                Some(Certificate::Dominated(DominatedCombination {
                    semiring: (*semiring).into(),
                    degree: *degree,
                    parts: parts_from_json(parts)?,
                }))
            }
        })
    }

    pub fn root_point(&self) -> Result<Option<Point>> {
        match self {
            CertificateFile::Root { point } => point.iter().map(|s| parse_value(s)).collect::<Result<_>>().map(Some),
            _ => Ok(None),
        }
    }
}

/// A bipartite game: `r_i → c_j` edges and `c_j → r_i` edges with weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameFile {
    pub rows: usize,
    pub cols: usize,
    pub row_edges: Vec<(usize, usize, String)>,
    pub col_edges: Vec<(usize, usize, String)>,
}

impl GameFile {
    pub fn to_game(&self) -> Result<GameGraph> {
        let mut re = vec![Vec::new(); self.rows];
        let mut ce = vec![Vec::new(); self.cols];
        for (i, j, w) in &self.row_edges {
            ensure!(*i < self.rows && *j < self.cols, "row edge ({i}, {j}) out of range");
            re[*i].push((*j, parse_finite(w)?));
        }
        for (j, i, w) in &self.col_edges {
            ensure!(*j < self.cols && *i < self.rows, "column edge ({j}, {i}) out of range");
            ce[*j].push((*i, parse_finite(w)?));
        }
        Ok(GameGraph::from_edges(self.rows, self.cols, re, ce))
    }

    pub fn from_game(g: &GameGraph) -> Self {
        let mut row_edges = Vec::new();
        let mut col_edges = Vec::new();
        for i in 0..g.rows() {
            row_edges.extend(g.row_edges(i).iter().map(|(j, w)| (i, *j, w.to_string())));
        }
        for j in 0..g.cols() {
            col_edges.extend(g.col_edges(j).iter().map(|(i, w)| (j, *i, w.to_string())));
        }
        GameFile { rows: g.rows(), cols: g.cols(), row_edges, col_edges }
    }
}

/// What a generated fixture is expected to satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactsFile {
    pub name: String,
    pub system: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minplus_system: Option<String>,
    pub has_root: Option<bool>,
    /// Degree of the Macaulay system the witness solves.
    pub witness_degree: u64,
    pub nonhomogeneous: bool,
    pub witness: Vec<String>,
    pub legend: Vec<Vec<u32>>,
}

impl FactsFile {
    pub fn from_fixture(fx: &Fixture, system: &str, minplus_system: Option<&str>) -> Self {
        let index = MonomialIndex::new(fx.num_vars, fx.witness_degree);
        FactsFile {
            name: fx.name.clone(),
            system: system.to_string(),
            minplus_system: minplus_system.map(str::to_string),
            has_root: fx.has_root,
            witness_degree: fx.witness_degree,
            nonhomogeneous: fx.nonhomogeneous,
            witness: point_strings(&fx.witness),
            legend: index.exponents().iter().map(|e| e.0.clone()).collect(),
        }
    }

    pub fn witness(&self) -> Result<Point> {
        self.witness.iter().map(|s| parse_value(s)).collect()
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}
