//! Structural validation of JSON documents, version 1.
//!
//! Objects are closed: unknown keys are errors. Every document the binary
//! prints is checked against its shape first.

use std::fmt;

use serde_json::Value;

#[derive(Debug, Clone, Copy)]
pub enum Shape {
    Int,
    UInt,
    Bool,
    Str,
    /// `±1`.
    Sign,
    Array(&'static Shape),
    /// Object with string keys and uniform values.
    Map(&'static Shape),
    Object(&'static [Field]),
    /// `null` or the inner shape.
    Nullable(&'static Shape),
    /// The first alternative that matches.
    OneOf(&'static [Shape]),
}

#[derive(Debug, Clone, Copy)]
pub struct Field {
    pub name: &'static str,
    pub shape: Shape,
    pub required: bool,
}

const fn req(name: &'static str, shape: Shape) -> Field {
    Field {
        name,
        shape,
        required: true,
    }
}

const fn opt(name: &'static str, shape: Shape) -> Field {
    Field {
        name,
        shape,
        required: false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "schema violation at {}: {}", self.path, self.message)
    }
}

impl std::error::Error for SchemaError {}

pub fn validate(v: &Value, shape: &Shape) -> Result<(), SchemaError> {
    check(v, shape, "$")
}

fn fail(path: &str, message: impl Into<String>) -> Result<(), SchemaError> {
    Err(SchemaError {
        path: path.to_string(),
        message: message.into(),
    })
}

fn check(v: &Value, shape: &Shape, path: &str) -> Result<(), SchemaError> {
    match *shape {
        Shape::Int => match v.as_i64() {
            Some(_) => Ok(()),
            None => fail(path, "expected integer"),
        },
        Shape::UInt => match v.as_u64() {
            Some(_) => Ok(()),
            None => fail(path, "expected non-negative integer"),
        },
        Shape::Bool => match v {
            Value::Bool(_) => Ok(()),
            _ => fail(path, "expected boolean"),
        },
        Shape::Str => match v {
            Value::String(_) => Ok(()),
            _ => fail(path, "expected string"),
        },
        Shape::Sign => match v.as_i64() {
            Some(1) | Some(-1) => Ok(()),
            _ => fail(path, "expected 1 or -1"),
        },
        Shape::Array(inner) => match v {
            Value::Array(xs) => xs
                .iter()
                .enumerate()
                .try_for_each(|(k, x)| check(x, inner, &format!("{path}[{k}]"))),
            _ => fail(path, "expected array"),
        },
        Shape::Map(inner) => match v {
            Value::Object(m) => m.iter().try_for_each(|(k, x)| check(x, inner, &format!("{path}.{k}"))),
            _ => fail(path, "expected object"),
        },
        Shape::Object(fields) => {
            let Value::Object(m) = v else {
                return fail(path, "expected object");
            };
            for k in m.keys() {
                if !fields.iter().any(|f| f.name == k) {
                    return fail(path, format!("unknown key {k:?}"));
                }
            }
            for f in fields {
                match m.get(f.name) {
                    Some(x) => check(x, &f.shape, &format!("{path}.{}", f.name))?,
                    None if f.required => return fail(path, format!("missing key {:?}", f.name)),
                    None => {}
                }
            }
            Ok(())
        }
        Shape::Nullable(inner) => match v {
            Value::Null => Ok(()),
            _ => check(v, inner, path),
        },
        Shape::OneOf(alts) => {
            let mut last = None;
            for a in alts {
                match check(v, a, path) {
                    Ok(()) => return Ok(()),
                    Err(e) => last = Some(e),
                }
            }
            Err(last.unwrap_or(SchemaError {
                path: path.to_string(),
                message: "no alternative".into(),
            }))
        }
    }
}

const INTS: Shape = Shape::Array(&Shape::Int);
const INDICES: Shape = Shape::Array(&Shape::UInt);
const FLAGS: Shape = Shape::Map(&Shape::Bool);

pub const TERM: Shape = Shape::Object(&[req("mu", INTS), req("c", Shape::Int)]);
pub const HECKE: Shape = Shape::Object(&[req("terms", Shape::Array(&TERM))]);

pub const CHARACTER: Shape = Shape::Object(&[req("unit", Shape::Int), req("pi", Shape::Int)]);
pub const TORUS: Shape = Shape::Object(&[req("xi", Shape::Array(&CHARACTER)), req("psi", Shape::Str)]);

pub const SIGMA: Shape = Shape::Object(&[
    req("levi", INDICES),
    req("flags", FLAGS),
    req("torus_character", Shape::Nullable(&TORUS)),
    req("label", Shape::Str),
]);
pub const TRIPLE: Shape = Shape::Object(&[req("P", INDICES), req("Q", INDICES), req("sigma", SIGMA)]);

pub const CLASSIFY_INPUT: Shape = Shape::Object(&[
    opt("levi", INDICES),
    opt("flags", FLAGS),
    opt("torus_character", Shape::Nullable(&TORUS)),
    opt("label", Shape::Str),
    opt("Q", INDICES),
]);

pub const CLASSIFY: Shape = Shape::Object(&[
    req("triples", Shape::Array(&TRIPLE)),
    opt("length", Shape::UInt),
    opt("irreducible", Shape::Bool),
]);

pub const SATAKE: Shape = Shape::Object(&[
    req("terms", Shape::Array(&TERM)),
    opt(
        "oracle",
        Shape::Object(&[
            req("p", Shape::UInt),
            req("depth", Shape::UInt),
            req("agrees", Shape::Bool),
            req("computed", HECKE),
        ]),
    ),
]);

pub const ROW: Shape = Shape::Object(&[req("mu", INTS), req("raw", Shape::UInt), req("mod_p", Shape::UInt)]);
pub const ORACLE: Shape = Shape::Object(&[
    req("group", Shape::Str),
    req("i", Shape::UInt),
    req("p", Shape::UInt),
    req("depth", Shape::UInt),
    req("lambda", INTS),
    req("stabilized", Shape::Bool),
    req("rows", Shape::Array(&ROW)),
]);

pub const HILBERT: Shape = Shape::Object(&[
    req("x", Shape::Str),
    req("y", Shape::Str),
    req("p", Shape::UInt),
    req("f", Shape::UInt),
    req("symbol", Shape::Sign),
    opt("oracle", Shape::Sign),
]);

pub const COVER: Shape = Shape::Object(&[
    req("n", Shape::UInt),
    req(
        "rows",
        Shape::Array(&Shape::Object(&[
            req("i", Shape::UInt),
            req("coroot", INTS),
            req("q", Shape::Int),
            req("splits", Shape::Bool),
        ])),
    ),
    opt("lambda", INTS),
    opt("q_lambda", Shape::Int),
]);

pub const ASET: Shape = Shape::Object(&[
    req("i", Shape::UInt),
    req("n", Shape::UInt),
    req("lambda", INTS),
    req("elements", Shape::Array(&INTS)),
    req(
        "fibers",
        Shape::Array(&Shape::Object(&[req("a", INTS), req("members", Shape::Array(&INTS))])),
    ),
    opt("fibers_conform", Shape::Bool),
    opt("vanishing_sum", Shape::Bool),
]);

pub const WEIGHTS: Shape = Shape::Object(&[
    req("nu", INTS),
    req("q", Shape::UInt),
    req("pairings", INTS),
    req("pi_nu", INDICES),
    req(
        "change_of_weight",
        Shape::Array(&Shape::Object(&[req("i", Shape::UInt), req("nu_prime", Shape::Nullable(&INTS))])),
    ),
]);

pub const SELFTEST: Shape = Shape::Object(&[
    req(
        "criteria",
        Shape::Array(&Shape::Object(&[
            req("id", Shape::UInt),
            req("name", Shape::Str),
            req("pass", Shape::Bool),
            req("detail", Shape::Str),
        ])),
    ),
    req("pass", Shape::Bool),
]);
