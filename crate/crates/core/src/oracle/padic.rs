//! Elements of `Q_p` known to finite precision.

use crate::util;
use crate::{Error, Result};

/// `p^valuation · unit` with `unit` known modulo `p^rel_prec`, or a zero
/// known modulo `p^abs_prec` (`None`: exactly zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadicApprox {
    Zero { abs_prec: Option<i64> },
    Unit { valuation: i64, unit: u64, rel_prec: u32 },
}

impl PadicApprox {
    pub const EXACT_ZERO: Self = Self::Zero { abs_prec: None };

    pub fn valuation(&self) -> Option<i64> {
        match *self {
            Self::Unit { valuation, .. } => Some(valuation),
            Self::Zero { .. } => None,
        }
    }

    /// `None` for an exact zero.
    pub fn abs_prec(&self) -> Option<i64> {
        match *self {
            Self::Unit {
                valuation,
                rel_prec,
                ..
            } => Some(valuation + rel_prec as i64),
            Self::Zero { abs_prec } => abs_prec,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero { .. })
    }
}

/// Arithmetic context for a fixed prime.
#[derive(Debug, Clone)]
pub struct PadicRing {
    p: u64,
    pows: alloc::vec::Vec<u64>,
}

impl PadicRing {
    pub fn new(p: u64) -> Result<Self> {
        if !util::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let mut pows = alloc::vec![1u64];
        while let Some(next) = pows.last().unwrap().checked_mul(p) {
            if next > (1 << 62) {
                break;
            }
            pows.push(next);
        }
        Ok(Self { p, pows })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Largest supported relative precision.
    pub fn max_prec(&self) -> u32 {
        (self.pows.len() - 1) as u32
    }

    fn pow(&self, k: u32) -> u64 {
        self.pows[k as usize]
    }

    fn check_prec(&self, prec: u32) -> Result<()> {
        if prec == 0 || prec > self.max_prec() {
            Err(Error::Precision)
        } else {
            Ok(())
        }
    }

    /// `num · p^shift` to relative precision `prec`.
    pub fn from_scaled(&self, num: i128, shift: i64, prec: u32) -> Result<PadicApprox> {
        self.check_prec(prec)?;
        if num == 0 {
            return Ok(PadicApprox::EXACT_ZERO);
        }
        let (t, rest) = split_valuation(num, self.p);
        let m = self.pow(prec) as i128;
        Ok(PadicApprox::Unit {
            valuation: t as i64 + shift,
            unit: rest.rem_euclid(m) as u64,
            rel_prec: prec,
        })
    }

    pub fn from_int(&self, n: i128, prec: u32) -> Result<PadicApprox> {
        self.from_scaled(n, 0, prec)
    }

    pub fn neg(&self, a: PadicApprox) -> PadicApprox {
        match a {
            PadicApprox::Unit {
                valuation,
                unit,
                rel_prec,
            } => {
                let m = self.pow(rel_prec);
                PadicApprox::Unit {
                    valuation,
                    unit: (m - unit) % m,
                    rel_prec,
                }
            }
            z => z,
        }
    }

    pub fn add(&self, a: PadicApprox, b: PadicApprox) -> PadicApprox {
        use PadicApprox::*;
        match (a, b) {
            (Zero { abs_prec: None }, x) | (x, Zero { abs_prec: None }) => x,
            (Zero { abs_prec: Some(s) }, Zero { abs_prec: Some(t) }) => Zero {
                abs_prec: Some(s.min(t)),
            },
            (Zero { abs_prec: Some(s) }, u @ Unit { .. }) | (u @ Unit { .. }, Zero { abs_prec: Some(s) }) => {
                let Unit {
                    valuation,
                    unit,
                    rel_prec,
                } = u
                else {
                    unreachable!()
                };
                if valuation >= s {
                    Zero { abs_prec: Some(s) }
                } else {
                    let r = rel_prec.min((s - valuation) as u32);
                    Unit {
                        valuation,
                        unit: unit % self.pow(r),
                        rel_prec: r,
                    }
                }
            }
            (
                Unit {
                    valuation: va,
                    unit: ua,
                    rel_prec: ra,
                },
                Unit {
                    valuation: vb,
                    unit: ub,
                    rel_prec: rb,
                },
            ) => {
                let abs = (va + ra as i64).min(vb + rb as i64);
                let v = va.min(vb);
                if abs <= v {
                    return Zero { abs_prec: Some(abs) };
                }
                let k = (abs - v) as u32;
                let m = self.pow(k);
                let lift = |u: u64, dv: i64| -> u64 {
                    if dv >= k as i64 {
                        0
                    } else {
                        util::mul_mod(u % m, self.pow(dv as u32), m)
                    }
                };
                let s = (lift(ua, va - v) + lift(ub, vb - v)) % m;
                if s == 0 {
                    return Zero { abs_prec: Some(abs) };
                }
                let (t, rest) = split_valuation(s as i128, self.p);
                Unit {
                    valuation: v + t as i64,
                    unit: rest as u64,
                    rel_prec: k - t,
                }
            }
        }
    }

    pub fn sub(&self, a: PadicApprox, b: PadicApprox) -> PadicApprox {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: PadicApprox, b: PadicApprox) -> PadicApprox {
        use PadicApprox::*;
        match (a, b) {
            (Zero { abs_prec: None }, _) | (_, Zero { abs_prec: None }) => PadicApprox::EXACT_ZERO,
            (Zero { abs_prec: Some(s) }, x) | (x, Zero { abs_prec: Some(s) }) => Zero {
                abs_prec: Some(s + x.valuation().or(x.abs_prec()).unwrap_or(0)),
            },
            (
                Unit {
                    valuation: va,
                    unit: ua,
                    rel_prec: ra,
                },
                Unit {
                    valuation: vb,
                    unit: ub,
                    rel_prec: rb,
                },
            ) => {
                let r = ra.min(rb);
                let m = self.pow(r);
                Unit {
                    valuation: va + vb,
                    unit: util::mul_mod(ua % m, ub % m, m),
                    rel_prec: r,
                }
            }
        }
    }

    /// `a / b`; `b` must have a known valuation.
    pub fn div(&self, a: PadicApprox, b: PadicApprox) -> Result<PadicApprox> {
        use PadicApprox::*;
        let Unit {
            valuation: vb,
            unit: ub,
            rel_prec: rb,
        } = b
        else {
            return Err(Error::Precision);
        };
        Ok(match a {
            Zero { abs_prec: None } => a,
            Zero { abs_prec: Some(s) } => Zero {
                abs_prec: Some(s - vb),
            },
            Unit {
                valuation: va,
                unit: ua,
                rel_prec: ra,
            } => {
                let r = ra.min(rb);
                let m = self.pow(r);
                let inv = inverse_mod(ub % m, m).ok_or(Error::Precision)?;
                Unit {
                    valuation: va - vb,
                    unit: util::mul_mod(ua % m, inv, m),
                    rel_prec: r,
                }
            }
        })
    }

    /// Whether `a` and `b` agree to the precision of both.
    pub fn approx_eq(&self, a: PadicApprox, b: PadicApprox) -> bool {
        self.sub(a, b).is_zero()
    }
}

fn split_valuation(mut x: i128, p: u64) -> (u32, i128) {
    let p = p as i128;
    let mut t = 0;
    while x % p == 0 {
        x /= p;
        t += 1;
    }
    (t, x)
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}
