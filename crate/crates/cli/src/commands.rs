//! Subcommand bodies. Each returns a [`Report`] holding the text and JSON
//! renderings; the JSON is schema-checked before anything is printed.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use metaplectic_core::characters::GenuineTorusCharacter;
use metaplectic_core::classify::{composition_factors, ps_irreducible, ps_length, siegel_lift, SupersingularTriple};
use metaplectic_core::cover::{eval_q, hilbert, hilbert_by_solvability, splits_over_mprime, GspCocharacter, SquareClass};
use metaplectic_core::hecke::{
    a_fiber, enumerate_a, lambda_for, metaplectic_satake_t2lambda, vanishing_sum_check, TorusHeckeElement,
};
use metaplectic_core::oracle::{satake_counts_with, verify_metaplectic_pipeline_with, GroupTag};
use metaplectic_core::rootdata::{coroot, Character, Cocharacter};
use metaplectic_core::weights::{change_of_weight_pair, pi_nu, QRestrictedWeight};
use metaplectic_core::Error;

use crate::config::RunConfig;
use crate::criteria::{self, SelftestOptions};
use crate::json::*;
use crate::schema::{self, Shape};
use crate::{par, UsageError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Text,
    Json,
    Csv,
}

/// Why a command did not succeed; maps to the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1: a requested verification could not be confirmed.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Verification(m) => f.write_str(m),
        }
    }
}

impl From<UsageError> for CliError {
    fn from(e: UsageError) -> Self {
        CliError::Usage(e.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotStabilized(_) | Error::Precision => CliError::Verification(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

/// Rendered output and exit code of a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub json: String,
    pub csv: Option<String>,
    /// 0, or 1 when a requested verification failed.
    pub exit: i32,
}

impl Report {
    fn new<T: Serialize>(value: &T, shape: &Shape, text: String, exit: i32) -> Result<Self, CliError> {
        let v = serde_json::to_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
        schema::validate(&v, shape).map_err(|e| CliError::Usage(e.to_string()))?;
        let json = serde_json::to_string(value).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Report {
            text,
            json,
            csv: None,
            exit,
        })
    }

    pub fn render(&self, emit: Emit) -> Result<String, CliError> {
        match emit {
            Emit::Text => Ok(self.text.clone()),
            Emit::Json => Ok(format!("{}\n", self.json)),
            Emit::Csv => self
                .csv
                .clone()
                .ok_or_else(|| CliError::Usage("CSV is only offered for classify".into())),
        }
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, UsageError> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| UsageError(format!("{s:?} is not a comma-separated integer list"))))
        .collect()
}

fn fmt_ints(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(","))
}

pub fn hilbert_cmd(x: &str, y: &str, verify: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    let (a, b) = (parse_class(x)?, parse_class(y)?);
    let field = cfg.field()?;
    let symbol = hilbert(a, b, &field);
    let oracle = if verify {
        cfg.require_qp()?;
        Some(hilbert_by_solvability(a, b, &field, criteria::SOLVABILITY_EXPONENT)?)
    } else {
        None
    };
    let mut text = format!("{symbol}\n");
    let mut exit = 0;
    if let Some(o) = oracle {
        if o == symbol {
            text.push_str("oracle: agree\n");
        } else {
            text.push_str(&format!("oracle: disagree ({o})\n"));
            exit = 1;
        }
    }
    let out = HilbertOut {
        x: a.to_string(),
        y: b.to_string(),
        p: cfg.p,
        f: cfg.f,
        symbol,
        oracle,
    };
    Report::new(&out, &schema::HILBERT, text, exit)
}

pub fn cover_cmd(lambda: Option<&str>, cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.n;
    let mut rows = vec![];
    let mut text = String::new();
    for i in 1..=n {
        let c = coroot(i, n)?;
        let q = eval_q(&GspCocharacter::from(c.clone()));
        let splits = splits_over_mprime(i, n)?;
        text.push_str(&format!("i={i} coroot={} Q={q} splits={splits}\n", fmt_ints(c.coords())));
        rows.push(CoverRow {
            i,
            coroot: c.coords().to_vec(),
            q,
            splits,
        });
    }
    let (lambda, q_lambda) = match lambda {
        Some(s) => {
            let v = parse_ints(s)?;
            let q = eval_q(&GspCocharacter::from(Cocharacter::new(v.clone())));
            text.push_str(&format!("Q({})={q}\n", fmt_ints(&v)));
            (Some(v), Some(q))
        }
        None => (None, None),
    };
    let out = CoverOut {
        n,
        rows,
        lambda,
        q_lambda,
    };
    Report::new(&out, &schema::COVER, text, 0)
}

fn check_index(i: usize, n: usize) -> Result<(), CliError> {
    if i == 0 || i > n {
        return Err(CliError::Usage(format!("index i = {i} must lie in 1..={n}")));
    }
    Ok(())
}

pub fn satake_cmd(i: usize, oracle: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.n;
    check_index(i, n)?;
    let h = metaplectic_satake_t2lambda(i, n, cfg.p)?;
    let terms = HeckeJson::from_element(&h);
    let mut text = format!("{}\n", serde_json::to_string(&terms).map_err(|e| CliError::Usage(e.to_string()))?);
    let mut exit = 0;
    let summary = if oracle {
        cfg.require_qp()?;
        if n > 2 {
            return Err(CliError::Usage("the oracle covers n = 1 and n = 2 only".into()));
        }
        let r = verify_metaplectic_pipeline_with(i, n, cfg.p, cfg.depth, par::count)?;
        if r.agrees {
            text.push_str("oracle: agree\n");
        } else {
            text.push_str(&format!("oracle: disagree {}\n", hecke_text(&r.computed)));
            exit = 1;
        }
        Some(OracleSummary {
            p: cfg.p,
            depth: cfg.depth,
            agrees: r.agrees,
            computed: HeckeJson::from_element(&r.computed),
        })
    } else {
        None
    };
    let out = SatakeOut {
        terms: terms.terms,
        oracle: summary,
    };
    Report::new(&out, &schema::SATAKE, text, exit)
}

fn hecke_text(h: &TorusHeckeElement) -> String {
    serde_json::to_string(&HeckeJson::from_element(h)).unwrap_or_default()
}

pub fn aset_cmd(i: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.n;
    check_index(i, n)?;
    let lambda = lambda_for(i, n)?;
    let set = enumerate_a(&lambda)?;
    let mut fibers = BTreeSet::new();
    let mut conform = true;
    for a in set.elements() {
        let f = a_fiber(&set, a, i)?;
        conform &= f.conforms.unwrap_or(true);
        fibers.insert(f.members);
    }
    let (fibers_conform, vanishing_sum) = if i < n {
        let h = metaplectic_satake_t2lambda(i, n, cfg.p)?;
        let family = set
            .elements()
            .iter()
            .map(|a| {
                let mu = set.cocharacter(a);
                let c = h.signed_coeff(&mu);
                (mu, c)
            })
            .collect();
        (Some(conform), Some(vanishing_sum_check(&family, &set, i, cfg.p)?))
    } else {
        (None, None)
    };
    let elements: Vec<Vec<i64>> = set.elements().iter().cloned().collect();
    let mut text = format!("lambda={} |A|={}\n", fmt_ints(lambda.coords()), elements.len());
    for a in &elements {
        text.push_str(&format!("a={} mu={}\n", fmt_ints(a), fmt_ints(set.cocharacter(a).coords())));
    }
    if let (Some(c), Some(v)) = (fibers_conform, vanishing_sum) {
        text.push_str(&format!("fibers_conform={c} vanishing_sum={v}\n"));
    }
    let out = AsetOut {
        i,
        n,
        lambda: lambda.coords().to_vec(),
        fibers: fibers
            .into_iter()
            .map(|members| FiberJson {
                a: members[0].clone(),
                members,
            })
            .collect(),
        elements,
        fibers_conform,
        vanishing_sum,
    };
    Report::new(&out, &schema::ASET, text, 0)
}

pub fn weights_cmd(nu: &str, cfg: &RunConfig) -> Result<Report, CliError> {
    let coords = parse_ints(nu)?;
    let q = cfg.field()?.q();
    let w = QRestrictedWeight::new(Character::new(coords.clone()), q)?;
    let n = w.rank();
    let pairings = w.pairings();
    let pi = pi_nu(&w).indices();
    let mut rows = vec![];
    let mut text = format!("nu={} q={q} pairings={} pi_nu={:?}\n", fmt_ints(&coords), fmt_ints(&pairings), pi);
    for i in 1..=n {
        let nu_prime = change_of_weight_pair(&w, i).ok().map(|v| v.nu().coords().to_vec());
        if let Some(v) = &nu_prime {
            text.push_str(&format!("i={i} nu'={}\n", fmt_ints(v)));
        }
        rows.push(WeightRow { i, nu_prime });
    }
    let out = WeightsOut {
        nu: coords,
        q,
        pairings,
        pi_nu: pi,
        change_of_weight: rows,
    };
    Report::new(&out, &schema::WEIGHTS, text, 0)
}

/// Where `classify` takes its datum from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifySource {
    /// The trivial character of rank `n`.
    Trivial,
    /// A datum or torus character document.
    Datum(String),
    /// A reductive `GL_n` datum with `Q`, lifted through the Siegel Levi.
    Siegel(String),
}

fn parse_input(doc: &str) -> Result<ClassifyInput, CliError> {
    let v: serde_json::Value = serde_json::from_str(doc).map_err(|e| CliError::Usage(format!("input: {e}")))?;
    schema::validate(&v, &schema::CLASSIFY_INPUT).map_err(|e| CliError::Usage(format!("input {e}")))?;
    serde_json::from_value(v).map_err(|e| CliError::Usage(format!("input: {e}")))
}

pub fn classify_cmd(source: &ClassifySource, cfg: &RunConfig) -> Result<Report, CliError> {
    let ctx = cfg.context()?;
    let mut torus: Option<GenuineTorusCharacter> = None;
    let triples: Vec<SupersingularTriple> = match source {
        ClassifySource::Trivial => {
            let ch = GenuineTorusCharacter::new(vec![ctx.trivial(); cfg.n], SquareClass::One)?;
            torus = Some(ch.clone());
            let d = metaplectic_core::classify::SupersingularDatum::from_torus_character(ch, "trivial")?;
            composition_factors(&d)
        }
        ClassifySource::Datum(doc) => {
            let input = parse_input(doc)?;
            let n = input.torus_character.as_ref().map_or(cfg.n, |t| t.xi.len());
            let d = input.to_datum(n, &ctx)?;
            torus = d.torus_character().cloned();
            composition_factors(&d)
        }
        ClassifySource::Siegel(doc) => {
            let input = parse_input(doc)?;
            let n = input.torus_character.as_ref().map_or(cfg.n, |t| t.xi.len());
            let (rho, q) = input.to_gl_datum(n, &ctx)?;
            vec![siegel_lift(&rho, &q, input.psi()?)?]
        }
    };
    let (length, irreducible) = match (&torus, source) {
        (Some(ch), ClassifySource::Trivial | ClassifySource::Datum(_)) => (Some(ps_length(ch)), Some(ps_irreducible(ch))),
        _ => (None, None),
    };
    let mut text = String::new();
    for t in &triples {
        text.push_str(&format!("{t}\n"));
    }
    if let (Some(l), Some(irr)) = (length, irreducible) {
        text.push_str(&format!("length: {l}\nirreducible: {irr}\n"));
    }
    let out = ClassifyOut {
        triples: triples.iter().map(TripleJson::from_triple).collect(),
        length,
        irreducible,
    };
    let csv = out.to_csv();
    let mut r = Report::new(&out, &schema::CLASSIFY, text, 0)?;
    r.csv = Some(csv);
    Ok(r)
}

pub fn oracle_satake_cmd(group: GroupTag, i: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.require_qp()?;
    let r = group.symplectic_rank().ok_or_else(|| CliError::Usage("unsupported group".into()))?;
    check_index(i, r)?;
    let lambda = lambda_for(i, r)?.scale(2);
    let counts = satake_counts_with(&lambda, cfg.depth, group, cfg.p, par::count)?;
    let stabilized = counts.iter().all(|c| c.stabilized);
    let name = match group {
        GroupTag::Sl2 => "sl2",
        _ => "sp4",
    };
    let mut text = format!(
        "group={name} lambda={} p={} depth={} stabilized={stabilized}\n",
        fmt_ints(lambda.coords()),
        cfg.p,
        cfg.depth
    );
    for c in &counts {
        text.push_str(&format!(
            "mu={} raw={} mod_p={}{}\n",
            fmt_ints(c.mu.coords()),
            c.raw_count,
            c.count_mod_p,
            if c.stabilized { "" } else { " (not stabilized)" }
        ));
    }
    let out = OracleOut {
        group: name.into(),
        i,
        p: cfg.p,
        depth: cfg.depth,
        lambda: lambda.coords().to_vec(),
        stabilized,
        rows: counts.iter().map(RowJson::from_result).collect(),
    };
    Report::new(&out, &schema::ORACLE, text, 0)
}

#[derive(Debug, Clone, Serialize)]
struct SelftestOut {
    criteria: Vec<criteria::Outcome>,
    pass: bool,
}

pub fn selftest_cmd(with_sp4: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    let outcomes = criteria::run_all(&SelftestOptions {
        with_sp4,
        seed: cfg.seed,
    });
    let pass = outcomes.iter().all(|o| o.pass);
    let mut text: String = outcomes.iter().map(|o| format!("{}\n", o.line())).collect();
    text.push_str(&format!("selftest: {}\n", if pass { "PASS" } else { "FAIL" }));
    let out = SelftestOut {
        criteria: outcomes,
        pass,
    };
    Report::new(&out, &schema::SELFTEST, text, if pass { 0 } else { 1 })
}
