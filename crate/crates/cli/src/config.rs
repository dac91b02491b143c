//! Run parameters: `key = value` file, command-line overrides, defaults.

use std::fmt;
use std::path::Path;

use metaplectic_core::characters::CharacterContext;
use metaplectic_core::cover::LocalFieldDescriptor;

use crate::UsageError;

/// Fully resolved parameters for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub p: u64,
    pub f: u32,
    pub n: usize,
    /// Order `N` of the cyclic value group.
    pub order: u64,
    pub depth: u32,
    pub seed: u64,
}

/// Partially specified parameters, from a file or from flags.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub p: Option<u64>,
    pub f: Option<u32>,
    pub n: Option<usize>,
    pub order: Option<u64>,
    pub depth: Option<u32>,
    pub seed: Option<u64>,
}

impl Overrides {
    /// Fields set in `self` win over those in `lower`.
    pub fn over(&self, lower: &Overrides) -> Overrides {
        Overrides {
            p: self.p.or(lower.p),
            f: self.f.or(lower.f),
            n: self.n.or(lower.n),
            order: self.order.or(lower.order),
            depth: self.depth.or(lower.depth),
            seed: self.seed.or(lower.seed),
        }
    }
}

fn bad(msg: impl fmt::Display) -> UsageError {
    UsageError(msg.to_string())
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str, line: usize) -> Result<T, UsageError> {
    v.parse()
        .map_err(|_| bad(format!("config line {line}: bad value {v:?} for {key}")))
}

/// Parse `key = value` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_config(text: &str) -> Result<Overrides, UsageError> {
    let mut o = Overrides::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| bad(format!("config line {line}: expected key = value")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "p" => o.p = Some(parse_value(key, value, line)?),
            "f" => o.f = Some(parse_value(key, value, line)?),
            "n" => o.n = Some(parse_value(key, value, line)?),
            "N" | "order" => o.order = Some(parse_value(key, value, line)?),
            "depth" => o.depth = Some(parse_value(key, value, line)?),
            "seed" => o.seed = Some(parse_value(key, value, line)?),
            _ => return Err(bad(format!("config line {line}: unknown key {key:?}"))),
        }
    }
    Ok(o)
}

pub fn load_config(path: &Path) -> Result<Overrides, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

impl RunConfig {
    /// Defaults: `p = 3`, `f = 1`, `n = 2`, `N = 2(p − 1)`, `depth = 4`, `seed = 0`.
    pub fn resolve(o: &Overrides) -> Result<Self, UsageError> {
        let p = o.p.unwrap_or(3);
        let c = RunConfig {
            p,
            f: o.f.unwrap_or(1),
            n: o.n.unwrap_or(2),
            order: o.order.unwrap_or(2 * p.saturating_sub(1)),
            depth: o.depth.unwrap_or(4),
            seed: o.seed.unwrap_or(0),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        self.field()?;
        if self.n == 0 {
            return Err(bad("n must be at least 1"));
        }
        if self.order == 0 || !self.order.is_multiple_of(2) || gcd(self.order, self.p) != 1 {
            return Err(bad(format!(
                "N = {} must be even and prime to p = {}",
                self.order, self.p
            )));
        }
        if self.depth == 0 {
            return Err(bad("depth must be at least 1"));
        }
        Ok(())
    }

    pub fn field(&self) -> Result<LocalFieldDescriptor, UsageError> {
        LocalFieldDescriptor::new(self.p, self.f).map_err(|e| bad(format!("p = {}, f = {}: {e}", self.p, self.f)))
    }

    pub fn context(&self) -> Result<CharacterContext, UsageError> {
        CharacterContext::new(self.field()?, self.order).map_err(bad)
    }

    /// The oracle works over `Q_p` only.
    pub fn require_qp(&self) -> Result<(), UsageError> {
        if self.f != 1 {
            return Err(bad("the coset oracle needs f = 1"));
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
