//! Smooth characters of `F^×` with values in a finite cyclic group, and
//! genuine characters of the covering torus written as `ξ ⊗ χ_ψ`.
//!
//! Values are written additively. A character of `F^×` killing `1 + ϖO` is
//! determined by its restriction to `k^×` (an exponent mod `q − 1` against a
//! fixed generator) and its value at `ϖ` (an element of `Z/N`).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::cover::{hilbert, LocalFieldDescriptor, SquareClass};
use crate::{Error, Result};

/// The field together with the order `N` of the value group for `ϖ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterContext {
    field: LocalFieldDescriptor,
    order: u64,
}

impl CharacterContext {
    /// `N` must be even (to hold `±1`) and prime to `p`.
    pub fn new(field: LocalFieldDescriptor, order: u64) -> Result<Self> {
        if order == 0 || !order.is_multiple_of(2) || order.gcd(&field.p()) != 1 {
            return Err(Error::BadValueGroup {
                order,
                p: field.p(),
            });
        }
        Ok(Self { field, order })
    }

    /// `N = lcm(q − 1, 2)`.
    pub fn with_default_order(field: LocalFieldDescriptor) -> Self {
        let order = (field.q() - 1).lcm(&2);
        Self::new(field, order).expect("lcm(q-1, 2) is even and prime to p")
    }

    pub fn field(&self) -> &LocalFieldDescriptor {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn trivial(&self) -> SmoothCharacterFx {
        SmoothCharacterFx {
            unit_exp: 0,
            unit_mod: self.field.q() - 1,
            pi_val: 0,
            pi_mod: self.order,
        }
    }

    pub fn character(&self, unit_exp: i64, pi_val: i64) -> SmoothCharacterFx {
        let unit_mod = self.field.q() - 1;
        SmoothCharacterFx {
            unit_exp: unit_exp.rem_euclid(unit_mod as i64) as u64,
            unit_mod,
            pi_val: pi_val.rem_euclid(self.order as i64) as u64,
            pi_mod: self.order,
        }
    }

    /// The quadratic character `x ↦ (x, c)_F`.
    pub fn hilbert_character(&self, c: SquareClass) -> SmoothCharacterFx {
        let q = self.field.q();
        let on_units = if c.valuation_parity() == 1 {
            (q - 1) / 2
        } else {
            0
        };
        let at_pi = if hilbert(SquareClass::Pi, c, &self.field) == -1 {
            self.order / 2
        } else {
            0
        };
        self.character(on_units as i64, at_pi as i64)
    }

    /// Every character in this context, in a fixed order.
    pub fn all_characters(&self) -> Vec<SmoothCharacterFx> {
        let um = self.field.q() - 1;
        (0..um)
            .flat_map(|u| (0..self.order).map(move |v| (u, v)))
            .map(|(u, v)| self.character(u as i64, v as i64))
            .collect()
    }
}

/// A smooth character of `F^×`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmoothCharacterFx {
    unit_exp: u64,
    unit_mod: u64,
    pi_val: u64,
    pi_mod: u64,
}

impl SmoothCharacterFx {
    pub fn unit_exp(&self) -> u64 {
        self.unit_exp
    }

    pub fn pi_val(&self) -> u64 {
        self.pi_val
    }

    pub fn is_trivial(&self) -> bool {
        self.unit_exp == 0 && self.pi_val == 0
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.unit_mod == o.unit_mod && self.pi_mod == o.pi_mod {
            Ok(())
        } else {
            Err(Error::ValueGroupMismatch)
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self {
            unit_exp: (self.unit_exp + o.unit_exp) % self.unit_mod,
            pi_val: (self.pi_val + o.pi_val) % self.pi_mod,
            ..*self
        })
    }

    pub fn inv(&self) -> Self {
        Self {
            unit_exp: (self.unit_mod - self.unit_exp) % self.unit_mod,
            pi_val: (self.pi_mod - self.pi_val) % self.pi_mod,
            ..*self
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inv())
    }
}

/// `ξ ⊗ χ_{ψ_a}` with `ξ = (ξ_1, …, ξ_n)` along `λ_i = e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenuineTorusCharacter {
    pub xi: Vec<SmoothCharacterFx>,
    pub psi_class: SquareClass,
}

impl GenuineTorusCharacter {
    pub fn new(xi: Vec<SmoothCharacterFx>, psi_class: SquareClass) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::ZeroRank);
        }
        for w in xi.windows(2) {
            w[0].check(&w[1])?;
        }
        Ok(Self { xi, psi_class })
    }

    pub fn rank(&self) -> usize {
        self.xi.len()
    }

    /// The same `ξ` against `ψ_{a·b}`.
    pub fn twist_psi(&self, b: SquareClass) -> Self {
        Self {
            xi: self.xi.clone(),
            psi_class: self.psi_class.mul(b),
        }
    }
}

/// `x ↦ σ(α̃_i^∨(x)) = ξ_i ξ_{i+1}^{−1}` for short `α_i`.
pub fn restrict_short_coroot(s: &GenuineTorusCharacter, i: usize) -> Result<SmoothCharacterFx> {
    let n = s.rank();
    if i == n {
        return Err(Error::LongRootRestriction);
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    s.xi[i - 1].div(&s.xi[i])
}

/// `ξ ⊗ χ_{ψ_a} = ξ' ⊗ χ_{ψ_{a'}}` iff `ξ'_i = ξ_i · (·, a a')_F` for all `i`.
pub fn genuine_equal(
    s: &GenuineTorusCharacter,
    t: &GenuineTorusCharacter,
    ctx: &CharacterContext,
) -> Result<bool> {
    if s.rank() != t.rank() {
        return Err(Error::RankMismatch {
            left: s.rank(),
            right: t.rank(),
        });
    }
    let h = ctx.hilbert_character(s.psi_class.mul(t.psi_class));
    for (a, b) in s.xi.iter().zip(&t.xi) {
        if a.mul(&h)? != *b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `flag[i]` = triviality of `σ ∘ α̃_i^∨`; the long index `n` is always false.
pub fn supersingular_flags_from_character(s: &GenuineTorusCharacter) -> BTreeMap<usize, bool> {
    let n = s.rank();
    (1..=n)
        .map(|i| {
            let flag = i < n && s.xi[i - 1] == s.xi[i];
            (i, flag)
        })
        .collect()
}
