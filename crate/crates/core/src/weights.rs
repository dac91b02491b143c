//! q-restricted highest weights of the maximal compact subgroup.

use alloc::vec::Vec;

use crate::rootdata::{pairing, Character, ParabolicSubset, RootDatumCn};
use crate::util;
use crate::{Error, Result};

/// A character `ν` with `0 ≤ ⟨ν, α^∨⟩ < q` for every simple `α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRestrictedWeight {
    nu: Character,
    q: u64,
}

impl QRestrictedWeight {
    pub fn new(nu: Character, q: u64) -> Result<Self> {
        if util::prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        let rd = RootDatumCn::new(nu.rank())?;
        for c in rd.coroots() {
            let v = pairing(&nu, &c)?;
            if v < 0 || v >= q as i64 {
                return Err(Error::NotRestricted);
            }
        }
        Ok(Self { nu, q })
    }

    pub fn nu(&self) -> &Character {
        &self.nu
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.nu.rank()
    }

    /// `(⟨ν, α_1^∨⟩, …, ⟨ν, α_n^∨⟩)`.
    pub fn pairings(&self) -> Vec<i64> {
        let rd = RootDatumCn::new(self.rank()).expect("validated rank");
        rd.coroots()
            .iter()
            .map(|c| pairing(&self.nu, c).expect("same rank"))
            .collect()
    }

    /// Every q-restricted weight of rank `n`.
    pub fn all(n: usize, q: u64) -> Result<Vec<Self>> {
        let rd = RootDatumCn::new(n)?;
        let omegas: Vec<Character> = (1..=n)
            .map(|i| rd.fundamental_weight(i))
            .collect::<Result<_>>()?;
        let total = (q as usize).pow(n as u32);
        (0..total)
            .map(|m| {
                let mut nu = Character::zero(n);
                let mut r = m;
                for w in &omegas {
                    nu = &nu + &w.scale((r % q as usize) as i64);
                    r /= q as usize;
                }
                Self::new(nu, q)
            })
            .collect()
    }
}

/// `Π_ν = {α ∈ Π : ⟨ν, α^∨⟩ = 0}`.
pub fn pi_nu(w: &QRestrictedWeight) -> ParabolicSubset {
    let mut s = ParabolicSubset::empty(w.rank());
    for (k, v) in w.pairings().into_iter().enumerate() {
        if v == 0 {
            s.insert(k + 1).expect("index in range");
        }
    }
    s
}

/// `Π_ν ⊆ J`.
pub fn is_m_regular(w: &QRestrictedWeight, j: &ParabolicSubset) -> bool {
    pi_nu(w).is_subset(j)
}

/// `ν' = ν + (q − 1) ω_{α_i}`, defined when `⟨ν, α_i^∨⟩ = 0`.
pub fn change_of_weight_pair(w: &QRestrictedWeight, i: usize) -> Result<QRestrictedWeight> {
    let rd = RootDatumCn::new(w.rank())?;
    let omega = rd.fundamental_weight(i)?;
    if pairing(&w.nu, &rd.coroot(i)?)? != 0 {
        return Err(Error::Precondition("<nu, alpha_i^vee> must vanish"));
    }
    QRestrictedWeight::new(&w.nu + &omega.scale(w.q as i64 - 1), w.q)
}

/// Rank of `X^0(T) = {χ : ⟨χ, α^∨⟩ = 0 for all α}`, from the pairing matrix.
pub fn x0_rank(n: usize) -> Result<usize> {
    let rd = RootDatumCn::new(n)?;
    let m: Vec<Vec<i64>> = rd.coroots().iter().map(|c| c.coords().to_vec()).collect();
    Ok(n - util::rank(&m))
}

/// `F(ν) ≅ F(ν')` iff `ν − ν' ∈ (q − 1) X^0(T)`.
///
/// Tested directly: `(q − 1)` divides `ν − ν'` and the quotient pairs to
/// zero with every simple coroot. `X^0(T)` is saturated, so this is exact.
pub fn same_weight_class(w: &QRestrictedWeight, v: &QRestrictedWeight) -> Result<bool> {
    if w.rank() != v.rank() {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: v.rank(),
        });
    }
    if w.q != v.q {
        return Err(Error::Precondition("weights must share q"));
    }
    let d = &w.nu - &v.nu;
    let m = w.q as i64 - 1;
    if m == 0 {
        return Ok(false);
    }
    if d.coords().iter().any(|x| x % m != 0) {
        return Ok(false);
    }
    let quot = Character::new(d.coords().iter().map(|x| x / m).collect());
    let rd = RootDatumCn::new(w.rank())?;
    for c in rd.coroots() {
        if pairing(&quot, &c)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A weight regarded as the highest weight of a representation of the Levi
/// `M_J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviWeight {
    pub weight: QRestrictedWeight,
    pub levi: ParabolicSubset,
}

impl LeviWeight {
    /// Restrict further to `J' ⊆ J`.
    pub fn restrict(&self, j: &ParabolicSubset) -> Result<Self> {
        if !j.is_subset(&self.levi) {
            return Err(Error::Precondition("restriction target must be a subset"));
        }
        Ok(Self {
            weight: self.weight.clone(),
            levi: *j,
        })
    }

    /// One-dimensional exactly when `ν` is orthogonal to every coroot of the
    /// Levi; always so for the torus.
    pub fn is_one_dimensional(&self) -> bool {
        self.levi.is_subset(&pi_nu(&self.weight))
    }
}

pub fn restrict_weight_to_levi(w: &QRestrictedWeight, j: &ParabolicSubset) -> LeviWeight {
    LeviWeight {
        weight: w.clone(),
        levi: *j,
    }
}
