//! The type `C_n` root datum of `Sp_2n` in orthonormal coordinates.
//!
//! Characters are stored in the basis `ε_1, …, ε_n` and cocharacters in the
//! dual basis `e_1, …, e_n`. With these coordinates
//!
//! * `α_i = ε_i − ε_{i+1}` for `i < n` and `α_n = 2ε_n`,
//! * `α_i^∨ = e_i − e_{i+1}` for `i < n` and `α_n^∨ = e_n`,
//! * the recursive bases `χ_i` (from `2χ_n = α_n`, `χ_i = α_i + χ_{i+1}`) and
//!   `λ_i` (from `λ_n = α_n^∨`, `λ_i = α_i^∨ + λ_{i+1}`) are exactly `ε_i`
//!   and `e_i`,
//!
//! so pairings are dot products and the Weyl group acts by signed
//! permutations. Indices of simple roots are 1-based throughout.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::util;
use crate::{Error, Result};

macro_rules! lattice_vector {
    ($name:ident) => {
        impl $name {
            pub fn new(coords: Vec<i64>) -> Self {
                Self(coords)
            }

            pub fn zero(n: usize) -> Self {
                Self(vec![0; n])
            }

            /// The `i`-th standard basis vector (1-based).
            pub fn basis(i: usize, n: usize) -> Result<Self> {
                check_index(i, n)?;
                let mut v = vec![0; n];
                v[i - 1] = 1;
                Ok(Self(v))
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn scale(&self, k: i64) -> Self {
                Self(self.0.iter().map(|x| k * x).collect())
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn coord_sum(&self) -> i64 {
                self.0.iter().sum()
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: Self) -> $name {
                assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: Self) -> $name {
                assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (k, x) in self.0.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }
    };
}

/// An element of `X^*(T)` in the `ε` basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character(Vec<i64>);

/// An element of `X_*(T)` in the `e` basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cocharacter(Vec<i64>);

lattice_vector!(Character);
lattice_vector!(Cocharacter);

impl Character {
    /// Coordinates in the `χ_i` basis (identical to the `ε` coordinates).
    pub fn chi_coords(&self) -> Vec<i64> {
        self.0.clone()
    }

    pub fn from_chi_coords(c: Vec<i64>) -> Self {
        Self(c)
    }

    /// Coordinates in the simple-root basis. Rational in general; integral
    /// exactly on the root lattice.
    pub fn simple_root_coords(&self) -> Vec<Ratio<i64>> {
        let n = self.rank();
        let mut b = Vec::with_capacity(n);
        let mut prev = Ratio::zero();
        for (k, &c) in self.0.iter().enumerate() {
            let cur = if k + 1 < n {
                Ratio::from_integer(c) + prev
            } else {
                (Ratio::from_integer(c) + prev) / 2
            };
            b.push(cur);
            prev = cur;
        }
        b
    }

    /// Sum of simple-root coordinates; `None` off the root lattice.
    pub fn height(&self) -> Option<i64> {
        let b = self.simple_root_coords();
        b.iter()
            .all(Ratio::is_integer)
            .then(|| b.iter().map(|r| r.to_integer()).sum())
    }
}

impl Cocharacter {
    /// Coordinates in the `λ_i` basis (identical to the `e` coordinates).
    pub fn lambda_coords(&self) -> Vec<i64> {
        self.0.clone()
    }

    pub fn from_lambda_coords(c: Vec<i64>) -> Self {
        Self(c)
    }

    /// The unique `a` with `self = Σ a_i α_i^∨`; these are prefix sums.
    pub fn coroot_coords(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0i64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    pub fn from_coroot_coords(a: &[i64]) -> Self {
        let mut prev = 0;
        Self(
            a.iter()
                .map(|&x| {
                    let d = x - prev;
                    prev = x;
                    d
                })
                .collect(),
        )
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, rank: n })
    } else {
        Ok(())
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RankMismatch { left: a, right: b })
    }
}

/// A subset of the simple roots `{1, …, n}`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicSubset {
    rank: usize,
    bits: u64,
}

impl ParabolicSubset {
    pub const MAX_RANK: usize = 63;

    pub fn empty(n: usize) -> Self {
        assert!(n <= Self::MAX_RANK, "rank too large for a parabolic subset");
        Self { rank: n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_RANK, "rank too large for a parabolic subset");
        Self {
            rank: n,
            bits: (1u64 << n) - 1,
        }
    }

    /// `Π_S`, the simple roots of the Siegel Levi.
    pub fn siegel(n: usize) -> Self {
        Self::full(n).without(n)
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &i in indices {
            s.insert(i)?;
        }
        Ok(s)
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        let full = Self::full(n);
        Self {
            rank: n,
            bits: bits & full.bits,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn insert(&mut self, i: usize) -> Result<()> {
        check_index(i, self.rank)?;
        self.bits |= 1 << (i - 1);
        Ok(())
    }

    pub fn with(mut self, i: usize) -> Result<Self> {
        self.insert(i)?;
        Ok(self)
    }

    pub fn without(mut self, i: usize) -> Self {
        if (1..=self.rank).contains(&i) {
            self.bits &= !(1 << (i - 1));
        }
        self
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=self.rank).contains(&i) && self.bits & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.rank)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            rank: self.rank.max(other.rank),
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            rank: self.rank.max(other.rank),
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            rank: self.rank,
            bits: self.bits & !other.bits,
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&i| self.contains(i)).collect()
    }

    /// All `2^n` subsets in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (0..1u64 << n).map(move |bits| Self { rank: n, bits })
    }

    /// All subsets of `self`, in bitmask order.
    pub fn subsets(&self) -> Vec<Self> {
        let idx = self.indices();
        (0..1u64 << idx.len())
            .map(|m| {
                let mut s = Self::empty(self.rank);
                for (k, &i) in idx.iter().enumerate() {
                    if m & (1 << k) != 0 {
                        s.bits |= 1 << (i - 1);
                    }
                }
                s
            })
            .collect()
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// The root datum of `Sp_2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootDatumCn {
    rank: usize,
}

impl RootDatumCn {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_root(&self, i: usize) -> Result<Character> {
        check_index(i, self.rank)?;
        let mut v = vec![0; self.rank];
        if i < self.rank {
            v[i - 1] = 1;
            v[i] = -1;
        } else {
            v[i - 1] = 2;
        }
        Ok(Character(v))
    }

    pub fn coroot(&self, i: usize) -> Result<Cocharacter> {
        check_index(i, self.rank)?;
        let mut v = vec![0; self.rank];
        v[i - 1] = 1;
        if i < self.rank {
            v[i] = -1;
        }
        Ok(Cocharacter(v))
    }

    /// `ω_i = ε_1 + … + ε_i`, dual to the simple coroots.
    pub fn fundamental_weight(&self, i: usize) -> Result<Character> {
        check_index(i, self.rank)?;
        Ok(Character(
            (1..=self.rank).map(|k| i64::from(k <= i)).collect(),
        ))
    }

    /// `λ_{α_i} = −(e_1 + … + e_i)`: antidominant, pairing negatively with
    /// `α_i` and trivially with every other simple root.
    pub fn lambda_alpha(&self, i: usize) -> Result<Cocharacter> {
        check_index(i, self.rank)?;
        Ok(Cocharacter(
            (1..=self.rank).map(|k| -i64::from(k <= i)).collect(),
        ))
    }

    pub fn simple_roots(&self) -> Vec<Character> {
        (1..=self.rank)
            .map(|i| self.simple_root(i).expect("index in range"))
            .collect()
    }

    pub fn coroots(&self) -> Vec<Cocharacter> {
        (1..=self.rank)
            .map(|i| self.coroot(i).expect("index in range"))
            .collect()
    }

    /// `C[j][k] = ⟨α_j, α_k^∨⟩` (0-based storage).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let roots = self.simple_roots();
        let coroots = self.coroots();
        roots
            .iter()
            .map(|a| coroots.iter().map(|c| dot(&a.0, &c.0)).collect())
            .collect()
    }

    pub fn cartan_inverse(&self) -> Vec<Vec<Ratio<i64>>> {
        util::invert(&self.cartan_matrix()).expect("Cartan matrix of C_n is invertible")
    }

    pub fn full(&self) -> ParabolicSubset {
        ParabolicSubset::full(self.rank)
    }

    pub fn siegel(&self) -> ParabolicSubset {
        ParabolicSubset::siegel(self.rank)
    }

    /// All `2n^2` roots: `±ε_i ± ε_j` (`i < j`) and `±2ε_i`.
    pub fn roots(&self) -> Vec<Character> {
        let mut out = self.positive_roots();
        let neg: Vec<_> = out.iter().map(|r| -r).collect();
        out.extend(neg);
        out
    }

    pub fn positive_roots(&self) -> Vec<Character> {
        let n = self.rank;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = vec![0; n];
                a[i] = 1;
                a[j] = -1;
                out.push(Character(a));
                let mut b = vec![0; n];
                b[i] = 1;
                b[j] = 1;
                out.push(Character(b));
            }
            let mut c = vec![0; n];
            c[i] = 2;
            out.push(Character(c));
        }
        out
    }

    pub fn is_root(&self, x: &Character) -> bool {
        if x.rank() != self.rank {
            return false;
        }
        let nz: Vec<i64> = x.0.iter().copied().filter(|&c| c != 0).collect();
        match nz.as_slice() {
            [a] => a.abs() == 2,
            [a, b] => a.abs() == 1 && b.abs() == 1,
            _ => false,
        }
    }

    pub fn is_positive_root(&self, x: &Character) -> bool {
        self.is_root(x) && x.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    /// Positive roots of the Siegel Levi: `ε_i − ε_j` with `i < j`.
    pub fn is_siegel_positive_root(&self, x: &Character) -> bool {
        self.is_positive_root(x) && x.0.iter().sum::<i64>() == 0
    }

    /// Every signed permutation, `2^n n!` of them.
    pub fn weyl_group(&self) -> Vec<SignedPermutation> {
        let n = self.rank;
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..1u32 << n {
                let signs = (0..n)
                    .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermutation {
                    perm: p.clone(),
                    signs,
                });
            }
        }
        out
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for j in k..cur.len() {
        cur.swap(k, j);
        permutations(cur, k + 1, out);
        cur.swap(k, j);
    }
}

/// `w(v)_{perm[k]} = signs[k] · v_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

impl SignedPermutation {
    fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (k, &x) in v.iter().enumerate() {
            out[self.perm[k]] = self.signs[k] * x;
        }
        out
    }

    pub fn act_cochar(&self, v: &Cocharacter) -> Cocharacter {
        Cocharacter(self.act(&v.0))
    }

    pub fn act_char(&self, v: &Character) -> Character {
        Character(self.act(&v.0))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn simple_root(i: usize, n: usize) -> Result<Character> {
    RootDatumCn::new(n)?.simple_root(i)
}

pub fn coroot(i: usize, n: usize) -> Result<Cocharacter> {
    RootDatumCn::new(n)?.coroot(i)
}

pub fn pairing(chi: &Character, lambda: &Cocharacter) -> Result<i64> {
    check_rank(chi.rank(), lambda.rank())?;
    Ok(dot(&chi.0, &lambda.0))
}

/// `λ ≤_J μ`: `μ − λ` is a nonnegative combination of `α_j^∨`, `j ∈ J`.
pub fn leq(lambda: &Cocharacter, mu: &Cocharacter, j: &ParabolicSubset) -> bool {
    if lambda.rank() != mu.rank() {
        return false;
    }
    (mu - lambda)
        .coroot_coords()
        .iter()
        .enumerate()
        .all(|(k, &a)| a >= 0 && (a == 0 || j.contains(k + 1)))
}

/// `⟨α_j, λ⟩ ≤ 0` for all `j ∈ J`.
pub fn is_antidominant(lambda: &Cocharacter, j: &ParabolicSubset) -> bool {
    let n = lambda.rank();
    if n == 0 {
        return true;
    }
    let c = &lambda.0;
    j.indices().into_iter().filter(|&i| i <= n).all(|i| {
        if i < n {
            c[i - 1] - c[i] <= 0
        } else {
            2 * c[n - 1] <= 0
        }
    })
}

/// `{μ : μ antidominant for J, μ ≥_J λ}`, sorted.
///
/// Writing `μ = λ + Σ_{k∈J} a_k α_k^∨`, antidominance reads `C_J a ≤ b` with
/// `b_j = −⟨α_j, λ⟩ ≥ 0`. Since `C_J^{-1} ≥ 0` this forces
/// `0 ≤ a ≤ C_J^{-1} b`, a finite box.
pub fn antidominant_above(lambda: &Cocharacter, j: &ParabolicSubset) -> Result<Vec<Cocharacter>> {
    let n = lambda.rank();
    let rd = RootDatumCn::new(n)?;
    if !is_antidominant(lambda, j) {
        return Err(Error::NotAntidominant);
    }
    let idx = j.indices();
    if idx.is_empty() {
        return Ok(vec![lambda.clone()]);
    }
    let full = rd.cartan_matrix();
    let cj: Vec<Vec<i64>> = idx
        .iter()
        .map(|&r| idx.iter().map(|&c| full[r - 1][c - 1]).collect())
        .collect();
    let inv = util::invert(&cj).expect("principal Cartan submatrix is invertible");
    let roots = rd.simple_roots();
    let b: Vec<i64> = idx.iter().map(|&r| -dot(&roots[r - 1].0, &lambda.0)).collect();
    let bound: Vec<i64> = inv
        .iter()
        .map(|row| {
            row.iter()
                .zip(&b)
                .map(|(x, &y)| *x * y)
                .fold(Ratio::zero(), |s, t| s + t)
                .floor()
                .to_integer()
        })
        .collect();
    let coroots = rd.coroots();
    let mut out = BTreeSet::new();
    let mut a = vec![0i64; idx.len()];
    loop {
        let ok = (0..idx.len()).all(|r| dot(&cj[r], &a) <= b[r]);
        if ok {
            let mut mu = lambda.clone();
            for (k, &i) in idx.iter().enumerate() {
                mu = &mu + &coroots[i - 1].scale(a[k]);
            }
            out.insert(mu);
        }
        let mut k = 0;
        loop {
            if k == a.len() {
                return Ok(out.into_iter().collect());
            }
            if a[k] < bound[k] {
                a[k] += 1;
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

/// `P_λ = {α ∈ Π : ⟨α, λ⟩ = 0}` for antidominant `λ`.
pub fn parabolic_from_cochar(lambda: &Cocharacter) -> Result<ParabolicSubset> {
    let n = lambda.rank();
    let rd = RootDatumCn::new(n)?;
    if !is_antidominant(lambda, &rd.full()) {
        return Err(Error::NotAntidominant);
    }
    let mut s = ParabolicSubset::empty(n);
    for (k, a) in rd.simple_roots().iter().enumerate() {
        if dot(&a.0, &lambda.0) == 0 {
            s.insert(k + 1)?;
        }
    }
    Ok(s)
}

/// The antidominant element of the signed-permutation orbit of `λ`.
pub fn antidominant_rep(lambda: &Cocharacter) -> Cocharacter {
    let mut v: Vec<i64> = lambda.0.iter().map(|x| -x.abs()).collect();
    v.sort_unstable();
    Cocharacter(v)
}

/// Root-string facts used when commuting `u_β` past `u_{−γ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootStringData {
    /// Whether `β − γ` is a root.
    pub exists: bool,
    /// `#{j ≥ 1 : jβ − γ ∈ Φ}`.
    pub length: usize,
    /// `|c_{β,−γ;j,1}|` for `j = 1..=length`.
    pub magnitudes: Vec<u64>,
}

/// Structure-constant magnitudes for the pair `(β, −γ)`.
///
/// `β` must be a positive root of the Siegel Levi and `γ` a positive root.
/// With `r = max{r : −γ − rβ ∈ Φ}`, Chevalley's formula gives
/// `|c_{β,−γ;j,1}| = binom(r + j, j)`.
pub fn root_string_data(beta: &Character, gamma: &Character) -> Result<RootStringData> {
    check_rank(beta.rank(), gamma.rank())?;
    let rd = RootDatumCn::new(beta.rank())?;
    if !rd.is_root(beta) || !rd.is_root(gamma) {
        return Err(Error::NotARoot);
    }
    if !rd.is_siegel_positive_root(beta) {
        return Err(Error::NotSiegelPositive);
    }
    if !rd.is_positive_root(gamma) {
        return Err(Error::NotARoot);
    }
    let minus_gamma = -gamma;
    let shifted = |k: i64| &minus_gamma + &beta.scale(k);
    let exists = rd.is_root(&shifted(1));
    let length = (1..=3).take_while(|&j| rd.is_root(&shifted(j))).count();
    let r = (1..).take_while(|&k| rd.is_root(&shifted(-k))).count() as u64;
    let magnitudes = (1..=length as u64)
        .map(|j| binomial(r + j, j))
        .collect();
    Ok(RootStringData {
        exists,
        length,
        magnitudes,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Length of the `β`-string through `γ`.
pub fn string_length(rd: &RootDatumCn, beta: &Character, gamma: &Character) -> usize {
    let bound = 2 * rd.rank() as i64 + 4;
    (-bound..=bound)
        .filter(|&k| rd.is_root(&(gamma + &beta.scale(k))))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn co(v: &[i64]) -> Cocharacter {
        Cocharacter::new(v.to_vec())
    }

    #[test]
    fn simple_roots_and_coroots() {
        assert_eq!(simple_root(1, 2).unwrap().coords(), &[1, -1]);
        assert_eq!(simple_root(2, 2).unwrap().coords(), &[0, 2]);
        assert_eq!(simple_root(3, 4).unwrap().coords(), &[0, 0, 1, -1]);
        assert_eq!(coroot(2, 2).unwrap().coords(), &[0, 1]);
        assert_eq!(coroot(1, 3).unwrap().coords(), &[1, -1, 0]);
        for n in 1..6 {
            assert_eq!(coroot(n, n).unwrap(), Cocharacter::basis(n, n).unwrap());
        }
        assert!(matches!(simple_root(0, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(coroot(3, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn recursive_bases_unwind_to_orthonormal() {
        for n in 1..7 {
            let rd = RootDatumCn::new(n).unwrap();
            // λ_n = α_n^∨, λ_i = α_i^∨ + λ_{i+1}
            let mut lam = vec![rd.coroot(n).unwrap()];
            for i in (1..n).rev() {
                let next = &rd.coroot(i).unwrap() + lam.last().unwrap();
                lam.push(next);
            }
            lam.reverse();
            // 2χ_n = α_n, χ_i = α_i + χ_{i+1}
            let an = rd.simple_root(n).unwrap();
            let mut chi = vec![Character::new(an.coords().iter().map(|x| x / 2).collect())];
            for i in (1..n).rev() {
                let next = &rd.simple_root(i).unwrap() + chi.last().unwrap();
                chi.push(next);
            }
            chi.reverse();
            for i in 0..n {
                assert_eq!(lam[i], Cocharacter::basis(i + 1, n).unwrap());
                assert_eq!(chi[i], Character::basis(i + 1, n).unwrap());
                for j in 0..n {
                    assert_eq!(pairing(&chi[i], &lam[j]).unwrap(), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn cartan_matrix_shape() {
        for n in 1..9 {
            let rd = RootDatumCn::new(n).unwrap();
            let c = rd.cartan_matrix();
            for j in 0..n {
                for k in 0..n {
                    let expect = if j == k {
                        2
                    } else if n >= 2 && j == n - 2 && k == n - 1 {
                        -1
                    } else if n >= 2 && j == n - 1 && k == n - 2 {
                        -2
                    } else if j.abs_diff(k) == 1 {
                        -1
                    } else {
                        0
                    };
                    assert_eq!(c[j][k], expect, "n={n} ({j},{k})");
                    let a = rd.simple_root(j + 1).unwrap();
                    let b = rd.coroot(k + 1).unwrap();
                    assert_eq!(pairing(&a, &b).unwrap(), c[j][k]);
                }
            }
            for row in rd.cartan_inverse() {
                assert!(row.iter().all(|x| *x >= Ratio::zero()));
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let rd = RootDatumCn::new(2).unwrap();
        let a2 = rd.simple_root(2).unwrap();
        assert_eq!(pairing(&a2, &rd.coroot(1).unwrap()).unwrap(), -2);
        assert!(matches!(
            pairing(&a2, &co(&[1, 2, 3])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn leq_examples() {
        let full = ParabolicSubset::full(2);
        let j1 = ParabolicSubset::from_indices(2, &[1]).unwrap();
        assert!(leq(&co(&[-2, -2]), &co(&[-2, -2]), &j1));
        assert!(leq(&co(&[-2, -2]), &co(&[-1, -1]), &full));
        assert!(!leq(&co(&[-2, -2]), &co(&[-1, -1]), &j1));
        assert!(!leq(&co(&[-1, -1]), &co(&[-2, -2]), &full));
    }

    #[test]
    fn antidominance_examples() {
        let full = ParabolicSubset::full(2);
        assert!(is_antidominant(&co(&[0, 0]), &full));
        assert!(is_antidominant(&co(&[-2, -1]), &full));
        assert!(!is_antidominant(&co(&[-1, -2]), &full));
        assert!(!is_antidominant(&co(&[0, 1]), &full));
    }

    #[test]
    fn antidominant_above_examples() {
        let full2 = ParabolicSubset::full(2);
        assert_eq!(antidominant_above(&co(&[0, 0]), &full2).unwrap(), vec![co(&[0, 0])]);
        let got = antidominant_above(&co(&[-2, -2]), &full2).unwrap();
        // (0,0) sits on the boundary: a = (2,4) gives C a = (0,4) = b.
        let want: Vec<_> = [[-2, -2], [-2, -1], [-2, 0], [-1, -1], [-1, 0], [0, 0]]
            .iter()
            .map(|v| co(v))
            .collect();
        assert_eq!(got, want);
        let a: BTreeSet<Vec<i64>> = got
            .iter()
            .map(|m| (m - &co(&[-2, -2])).coroot_coords())
            .collect();
        let want_a: BTreeSet<Vec<i64>> = [[0, 0], [0, 1], [0, 2], [1, 2], [1, 3], [2, 4]]
            .iter()
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(a, want_a);
        let full1 = ParabolicSubset::full(1);
        assert_eq!(
            antidominant_above(&co(&[-2]), &full1).unwrap(),
            vec![co(&[-2]), co(&[-1]), co(&[0])]
        );
        assert_eq!(
            antidominant_above(&co(&[-2, 0]), &full2).unwrap(),
            vec![co(&[-2, 0]), co(&[-1, -1]), co(&[-1, 0]), co(&[0, 0])]
        );
        assert_eq!(
            antidominant_above(&co(&[-1, -2]), &full2),
            Err(Error::NotAntidominant)
        );
    }

    /// Independent enumeration: scan a coordinate cube for antidominant
    /// vectors above `λ`.
    fn cube_scan(lambda: &Cocharacter, j: &ParabolicSubset, radius: i64) -> Vec<Cocharacter> {
        let n = lambda.rank();
        let mut out = Vec::new();
        let mut v = vec![-radius; n];
        loop {
            let mu = Cocharacter::new(v.clone());
            if is_antidominant(&mu, j) && leq(lambda, &mu, j) {
                out.push(mu);
            }
            let mut k = 0;
            loop {
                if k == n {
                    out.sort();
                    return out;
                }
                if v[k] < radius {
                    v[k] += 1;
                    break;
                }
                v[k] = -radius;
                k += 1;
            }
        }
    }

    #[test]
    fn antidominant_above_matches_cube_scan() {
        for n in 1..4 {
            for j in ParabolicSubset::all(n) {
                for base in [vec![-2; n], (0..n as i64).map(|k| k - n as i64).collect()] {
                    let lambda = co(&base);
                    if !is_antidominant(&lambda, &j) {
                        continue;
                    }
                    let r = 2 * n as i64 + 3;
                    let mut got = antidominant_above(&lambda, &j).unwrap();
                    got.sort();
                    assert_eq!(got, cube_scan(&lambda, &j, r), "n={n} J={j}");
                }
            }
        }
    }

    #[test]
    fn parabolic_from_cochar_examples() {
        assert_eq!(parabolic_from_cochar(&co(&[0, 0])).unwrap(), ParabolicSubset::full(2));
        assert_eq!(
            parabolic_from_cochar(&co(&[-1, -1])).unwrap().indices(),
            vec![1]
        );
        assert_eq!(
            parabolic_from_cochar(&co(&[-1, 0])).unwrap().indices(),
            vec![2]
        );
        assert_eq!(parabolic_from_cochar(&co(&[0, -1])), Err(Error::NotAntidominant));
    }

    #[test]
    fn antidominant_rep_examples() {
        assert_eq!(antidominant_rep(&co(&[2, -1])), co(&[-2, -1]));
        assert_eq!(antidominant_rep(&co(&[0, 0])), co(&[0, 0]));
        assert_eq!(antidominant_rep(&co(&[-1, -3])), co(&[-3, -1]));
    }

    #[test]
    fn antidominant_rep_is_weyl_invariant() {
        for n in 1..4 {
            let rd = RootDatumCn::new(n).unwrap();
            let w = rd.weyl_group();
            assert_eq!(w.len(), (1..=n).product::<usize>() << n);
            let full = rd.full();
            let samples: Vec<Cocharacter> = (0..5i64.pow(n as u32))
                .map(|m| co(&(0..n).map(|k| (m / 5i64.pow(k as u32)) % 5 - 2).collect::<Vec<_>>()))
                .collect();
            for lam in &samples {
                let r = antidominant_rep(lam);
                assert!(is_antidominant(&r, &full));
                assert_eq!(antidominant_rep(&r), r);
                for g in &w {
                    assert_eq!(antidominant_rep(&g.act_cochar(lam)), r);
                }
            }
        }
    }

    #[test]
    fn weyl_group_permutes_roots_and_preserves_pairing() {
        let rd = RootDatumCn::new(3).unwrap();
        let roots: BTreeSet<_> = rd.roots().into_iter().collect();
        assert_eq!(roots.len(), 18);
        for g in rd.weyl_group() {
            let img: BTreeSet<_> = roots.iter().map(|r| g.act_char(r)).collect();
            assert_eq!(img, roots);
        }
    }

    #[test]
    fn root_string_examples() {
        let rd = RootDatumCn::new(2).unwrap();
        let a1 = rd.simple_root(1).unwrap();
        let d = root_string_data(&a1, &Character::new(vec![2, 0])).unwrap();
        assert_eq!(
            d,
            RootStringData {
                exists: true,
                length: 2,
                magnitudes: vec![1, 1]
            }
        );
        let d = root_string_data(&a1, &Character::new(vec![1, 1])).unwrap();
        assert_eq!(
            d,
            RootStringData {
                exists: true,
                length: 1,
                magnitudes: vec![2]
            }
        );
        for n in 2..6 {
            let rd = RootDatumCn::new(n).unwrap();
            let an = rd.simple_root(n).unwrap();
            for beta in rd.positive_roots() {
                if rd.is_siegel_positive_root(&beta) {
                    assert!(!root_string_data(&beta, &an).unwrap().exists);
                }
            }
        }
        assert_eq!(
            root_string_data(&Character::new(vec![0, 2]), &a1),
            Err(Error::NotSiegelPositive)
        );
        assert_eq!(
            root_string_data(&a1, &Character::new(vec![1, 0])),
            Err(Error::NotARoot)
        );
    }

    #[test]
    fn root_string_magnitudes_are_units_or_two() {
        for n in 2..6 {
            let rd = RootDatumCn::new(n).unwrap();
            for beta in rd.positive_roots().into_iter().filter(|b| rd.is_siegel_positive_root(b)) {
                for gamma in rd.positive_roots() {
                    let d = root_string_data(&beta, &gamma).unwrap();
                    assert!(d.magnitudes.iter().all(|&m| m == 1 || m == 2));
                    let two = d.magnitudes.contains(&2);
                    let centered = rd.is_root(&(&(-&gamma) - &beta))
                        && rd.is_root(&(&beta - &gamma));
                    assert_eq!(two, centered);
                }
            }
        }
    }

    #[test]
    fn root_strings_have_length_at_most_three() {
        for n in 1..6 {
            let rd = RootDatumCn::new(n).unwrap();
            let roots = rd.roots();
            for b in &roots {
                for g in &roots {
                    if g == b || *g == -b {
                        continue;
                    }
                    assert!(string_length(&rd, b, g) <= 3);
                }
            }
        }
    }

    #[test]
    fn heights_and_root_coords() {
        let rd = RootDatumCn::new(3).unwrap();
        for (i, a) in rd.simple_roots().iter().enumerate() {
            assert_eq!(a.height(), Some(1), "α_{}", i + 1);
        }
        assert_eq!(Character::new(vec![2, 0, 0]).height(), Some(5));
        assert_eq!(Character::new(vec![1, 1, 0]).height(), Some(4));
        assert_eq!(Character::new(vec![1, 0, 0]).height(), None);
        let top = rd
            .positive_roots()
            .into_iter()
            .map(|r| r.height().unwrap())
            .max();
        assert_eq!(top, Some(5));
    }

    #[test]
    fn parabolic_subsets() {
        let s = ParabolicSubset::siegel(3);
        assert_eq!(s.indices(), vec![1, 2]);
        assert_eq!(ParabolicSubset::siegel(1).indices(), Vec::<usize>::new());
        assert_eq!(ParabolicSubset::all(3).count(), 8);
        assert_eq!(s.subsets().len(), 4);
        assert!(s.is_subset(&ParabolicSubset::full(3)));
    }

    fn small_cochar(n: usize) -> impl Strategy<Value = Cocharacter> {
        proptest::collection::vec(-4i64..=4, n).prop_map(Cocharacter::new)
    }

    proptest! {
        #[test]
        fn coordinate_conversions_roundtrip(v in proptest::collection::vec(-50i64..50, 1..8)) {
            let c = Cocharacter::new(v.clone());
            prop_assert_eq!(Cocharacter::from_coroot_coords(&c.coroot_coords()), c.clone());
            prop_assert_eq!(Cocharacter::from_lambda_coords(c.lambda_coords()), c);
            let x = Character::new(v);
            prop_assert_eq!(Character::from_chi_coords(x.chi_coords()), x);
        }

        #[test]
        fn leq_is_a_partial_order(
            (a, b, c, bits) in (1usize..=6).prop_flat_map(|n| (small_cochar(n), small_cochar(n), small_cochar(n), 0u64..64))
        ) {
            let j = ParabolicSubset::from_bits(a.rank(), bits);
            prop_assert!(leq(&a, &a, &j));
            if leq(&a, &b, &j) && leq(&b, &a, &j) {
                prop_assert_eq!(&a, &b);
            }
            if leq(&a, &b, &j) && leq(&b, &c, &j) {
                prop_assert!(leq(&a, &c, &j));
            }
            // transitivity along an explicit chain
            let coroots = RootDatumCn::new(a.rank()).unwrap().coroots();
            let mut up = a.clone();
            for i in j.indices() {
                up = &up + &coroots[i - 1];
            }
            prop_assert!(leq(&a, &up, &j));
        }

        #[test]
        fn antidominant_above_is_downward_compatible(
            v in proptest::collection::vec(0i64..=3, 1..=3), bits in 0u64..8
        ) {
            let lambda = antidominant_rep(&Cocharacter::new(v));
            let j = ParabolicSubset::from_bits(lambda.rank(), bits);
            let above = antidominant_above(&lambda, &j).unwrap();
            prop_assert!(above.contains(&lambda));
            for mu in &above {
                prop_assert!(is_antidominant(mu, &j));
                prop_assert!(leq(&lambda, mu, &j));
                for nu in antidominant_above(mu, &j).unwrap() {
                    prop_assert!(above.contains(&nu));
                }
            }
        }
    }
}
