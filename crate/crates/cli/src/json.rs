//! Serialized forms of library values.
//!
//! Field order in these structs is the printed key order, so outputs are
//! byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use metaplectic_core::characters::{CharacterContext, GenuineTorusCharacter, SmoothCharacterFx};
use metaplectic_core::classify::{GlDatum, SupersingularDatum, SupersingularTriple};
use metaplectic_core::cover::SquareClass;
use metaplectic_core::hecke::{symmetric, TorusHeckeElement};
use metaplectic_core::oracle::CosetCountResult;
use metaplectic_core::rootdata::ParabolicSubset;

use crate::UsageError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub mu: Vec<i64>,
    /// Symmetric residue mod `p`.
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeJson {
    pub terms: Vec<TermJson>,
}

impl HeckeJson {
    pub fn from_element(h: &TorusHeckeElement) -> Self {
        let p = h.p();
        HeckeJson {
            terms: h
                .terms()
                .map(|(mu, c)| TermJson {
                    mu: mu.coords().to_vec(),
                    c: symmetric(c, p),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    /// Exponent on the units, mod `q − 1`.
    pub unit: i64,
    /// Value at the uniformizer, as an exponent mod `N`.
    pub pi: i64,
}

impl CharacterJson {
    pub fn from_character(c: &SmoothCharacterFx) -> Self {
        CharacterJson {
            unit: c.unit_exp() as i64,
            pi: c.pi_val() as i64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusJson {
    pub xi: Vec<CharacterJson>,
    pub psi: String,
}

impl TorusJson {
    pub fn from_character(ch: &GenuineTorusCharacter) -> Self {
        TorusJson {
            xi: ch.xi.iter().map(CharacterJson::from_character).collect(),
            psi: ch.psi_class.to_string(),
        }
    }

    pub fn to_character(&self, ctx: &CharacterContext) -> Result<GenuineTorusCharacter, UsageError> {
        let xi = self.xi.iter().map(|c| ctx.character(c.unit, c.pi)).collect();
        GenuineTorusCharacter::new(xi, parse_class(&self.psi)?).map_err(UsageError::from_core)
    }
}

pub fn parse_class(s: &str) -> Result<SquareClass, UsageError> {
    s.parse()
        .map_err(|e| UsageError(format!("{s:?}: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaJson {
    pub levi: Vec<usize>,
    pub flags: BTreeMap<String, bool>,
    pub torus_character: Option<TorusJson>,
    pub label: String,
}

fn flags_out(flags: &BTreeMap<usize, bool>) -> BTreeMap<String, bool> {
    // keys are single digits for n ≤ 9, so string order is numeric order
    flags.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn flags_in(flags: &BTreeMap<String, bool>) -> Result<BTreeMap<usize, bool>, UsageError> {
    flags
        .iter()
        .map(|(k, v)| {
            k.parse::<usize>()
                .map(|k| (k, *v))
                .map_err(|_| UsageError(format!("flag key {k:?} is not a root index")))
        })
        .collect()
}

fn subset(n: usize, idx: &[usize]) -> Result<ParabolicSubset, UsageError> {
    ParabolicSubset::from_indices(n, idx).map_err(UsageError::from_core)
}

impl SigmaJson {
    pub fn from_datum(d: &SupersingularDatum) -> Self {
        SigmaJson {
            levi: d.levi().indices(),
            flags: flags_out(d.flags()),
            torus_character: d.torus_character().map(TorusJson::from_character),
            label: d.label().to_string(),
        }
    }

    pub fn to_datum(&self, n: usize, ctx: &CharacterContext) -> Result<SupersingularDatum, UsageError> {
        let flags = flags_in(&self.flags)?;
        let d = match &self.torus_character {
            Some(t) => {
                if !self.levi.is_empty() {
                    return Err(UsageError("a torus character needs an empty levi".into()));
                }
                SupersingularDatum::with_torus_character(flags, t.to_character(ctx)?, self.label.clone())
            }
            None => SupersingularDatum::new(subset(n, &self.levi)?, flags, self.label.clone()),
        };
        d.map_err(UsageError::from_core)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct TripleJson {
    pub P: Vec<usize>,
    pub Q: Vec<usize>,
    pub sigma: SigmaJson,
}

impl TripleJson {
    pub fn from_triple(t: &SupersingularTriple) -> Self {
        TripleJson {
            P: t.p().indices(),
            Q: t.q().indices(),
            sigma: SigmaJson::from_datum(t.sigma()),
        }
    }
}

/// `classify` input: a datum, a bare torus character, or (with `--siegel`)
/// a reductive `GL_n` datum with its `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ClassifyInput {
    #[serde(default)]
    pub levi: Vec<usize>,
    #[serde(default)]
    pub flags: Option<BTreeMap<String, bool>>,
    #[serde(default)]
    pub torus_character: Option<TorusJson>,
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default, rename = "Q")]
    pub q: Option<Vec<usize>>,
}

impl ClassifyInput {
    fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| "sigma".into())
    }

    /// A torus character without explicit flags takes them from the character.
    pub fn to_datum(&self, n: usize, ctx: &CharacterContext) -> Result<SupersingularDatum, UsageError> {
        match (&self.torus_character, &self.flags) {
            (Some(t), None) => {
                if !self.levi.is_empty() {
                    return Err(UsageError("a torus character needs an empty levi".into()));
                }
                SupersingularDatum::from_torus_character(t.to_character(ctx)?, self.label())
                    .map_err(UsageError::from_core)
            }
            (t, f) => SigmaJson {
                levi: self.levi.clone(),
                flags: f.clone().unwrap_or_default(),
                torus_character: t.clone(),
                label: self.label(),
            }
            .to_datum(n, ctx),
        }
    }

    pub fn to_gl_datum(&self, n: usize, ctx: &CharacterContext) -> Result<(GlDatum, ParabolicSubset), UsageError> {
        let q = self
            .q
            .as_ref()
            .ok_or_else(|| UsageError("a Siegel input needs \"Q\"".into()))?;
        let torus = self
            .torus_character
            .as_ref()
            .map(|t| t.xi.iter().map(|c| ctx.character(c.unit, c.pi)).collect());
        let d = GlDatum {
            levi: subset(n, &self.levi)?,
            flags: flags_in(&self.flags.clone().unwrap_or_default())?,
            label: self.label(),
            torus,
        };
        Ok((d, subset(n, q)?))
    }

    pub fn psi(&self) -> Result<SquareClass, UsageError> {
        match &self.torus_character {
            Some(t) => parse_class(&t.psi),
            None => Ok(SquareClass::One),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyOut {
    pub triples: Vec<TripleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
}

fn csv_set(s: &[usize]) -> String {
    s.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
}

impl ClassifyOut {
    /// One row per triple; set-valued fields are space separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("P,Q,levi,flags,torus_character,label\n");
        for t in &self.triples {
            let flags = t
                .sigma
                .flags
                .iter()
                .map(|(k, v)| format!("{k}={}", if *v { 1 } else { 0 }))
                .collect::<Vec<_>>()
                .join(" ");
            let torus = t
                .sigma
                .torus_character
                .as_ref()
                .map(|c| {
                    let xi: Vec<String> = c.xi.iter().map(|x| format!("{}:{}", x.unit, x.pi)).collect();
                    format!("{} psi={}", xi.join(" "), c.psi)
                })
                .unwrap_or_default();
            let label = if t.sigma.label.contains([',', '"', '\n']) {
                format!("\"{}\"", t.sigma.label.replace('"', "\"\""))
            } else {
                t.sigma.label.clone()
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                csv_set(&t.P),
                csv_set(&t.Q),
                csv_set(&t.sigma.levi),
                flags,
                torus,
                label
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowJson {
    pub mu: Vec<i64>,
    pub raw: u64,
    pub mod_p: u64,
}

impl RowJson {
    pub fn from_result(r: &CosetCountResult) -> Self {
        RowJson {
            mu: r.mu.coords().to_vec(),
            raw: r.raw_count,
            mod_p: r.count_mod_p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleOut {
    pub group: String,
    pub i: usize,
    pub p: u64,
    pub depth: u32,
    pub lambda: Vec<i64>,
    pub stabilized: bool,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub p: u64,
    pub depth: u32,
    pub agrees: bool,
    pub computed: HeckeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatakeOut {
    pub terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertOut {
    pub x: String,
    pub y: String,
    pub p: u64,
    pub f: u32,
    pub symbol: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverRow {
    pub i: usize,
    pub coroot: Vec<i64>,
    pub q: i64,
    pub splits: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverOut {
    pub n: usize,
    pub rows: Vec<CoverRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_lambda: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberJson {
    pub a: Vec<i64>,
    pub members: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsetOut {
    pub i: usize,
    pub n: usize,
    pub lambda: Vec<i64>,
    pub elements: Vec<Vec<i64>>,
    pub fibers: Vec<FiberJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibers_conform: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vanishing_sum: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRow {
    pub i: usize,
    pub nu_prime: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightsOut {
    pub nu: Vec<i64>,
    pub q: u64,
    pub pairings: Vec<i64>,
    pub pi_nu: Vec<usize>,
    pub change_of_weight: Vec<WeightRow>,
}
