//! Supersingular data, triples and the classification bookkeeping.
//!
//! A representation is indexed by a triple `(P, σ, Q)` with `σ` supersingular
//! on the Levi `M_P` and `P ⊆ Q ⊆ P ⊔ Π(σ)`. Non-torus `σ` are opaque and
//! identified by a label; torus `σ` carry their genuine character.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{
    genuine_equal, restrict_short_coroot, supersingular_flags_from_character, CharacterContext,
    GenuineTorusCharacter, SmoothCharacterFx,
};
use crate::cover::SquareClass;
use crate::rootdata::{ParabolicSubset, RootDatumCn};
use crate::{Error, Result};

/// Cartan entry `⟨α_j, α_k^∨⟩` for type `C_n`.
fn cartan(j: usize, k: usize, n: usize) -> i64 {
    if j == k {
        2
    } else if j.abs_diff(k) == 1 {
        if j == n {
            // ⟨α_n, α_{n−1}^∨⟩
            -2
        } else {
            -1
        }
    } else {
        0
    }
}

/// `{α ∈ Π : ⟨β, α^∨⟩ = 0 for all β ∈ levi}`.
pub fn eligible_roots(levi: &ParabolicSubset) -> ParabolicSubset {
    let n = levi.rank();
    let mut out = ParabolicSubset::empty(n);
    for a in 1..=n {
        if levi.indices().iter().all(|&b| cartan(b, a, n) == 0) {
            out.insert(a).expect("index in range");
        }
    }
    out
}

/// Parameters of a supersingular representation of a Levi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersingularDatum {
    levi: ParabolicSubset,
    flags: BTreeMap<usize, bool>,
    torus_character: Option<GenuineTorusCharacter>,
    label: String,
}

impl SupersingularDatum {
    /// Datum with user-supplied triviality flags, one per eligible root.
    pub fn new(levi: ParabolicSubset, flags: BTreeMap<usize, bool>, label: impl Into<String>) -> Result<Self> {
        let d = Self {
            levi,
            flags,
            torus_character: None,
            label: label.into(),
        };
        d.validate()?;
        Ok(d)
    }

    /// Torus datum whose flags are read off the character.
    pub fn from_torus_character(ch: GenuineTorusCharacter, label: impl Into<String>) -> Result<Self> {
        let n = ch.rank();
        let flags = supersingular_flags_from_character(&ch);
        let d = Self {
            levi: ParabolicSubset::empty(n),
            flags,
            torus_character: Some(ch),
            label: label.into(),
        };
        d.validate()?;
        Ok(d)
    }

    /// Torus datum with explicit flags, which must agree with the character.
    pub fn with_torus_character(
        flags: BTreeMap<usize, bool>,
        ch: GenuineTorusCharacter,
        label: impl Into<String>,
    ) -> Result<Self> {
        let d = Self {
            levi: ParabolicSubset::empty(ch.rank()),
            flags,
            torus_character: Some(ch),
            label: label.into(),
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let n = self.levi.rank();
        RootDatumCn::new(n)?;
        let eligible = eligible_roots(&self.levi);
        for a in eligible.indices() {
            if !self.flags.contains_key(&a) {
                return Err(Error::MissingFlag(a));
            }
        }
        for &a in self.flags.keys() {
            if a == 0 || a > n || !eligible.contains(a) {
                return Err(Error::IneligibleFlag(a));
            }
        }
        if self.flags.get(&n) == Some(&true) {
            return Err(Error::LongRootFlag);
        }
        if let Some(ch) = &self.torus_character {
            if !self.levi.is_empty() {
                return Err(Error::TorusCharacterLevi);
            }
            if ch.rank() != n {
                return Err(Error::RankMismatch {
                    left: ch.rank(),
                    right: n,
                });
            }
            if supersingular_flags_from_character(ch) != self.flags {
                return Err(Error::FlagMismatch);
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.levi.rank()
    }

    pub fn levi(&self) -> &ParabolicSubset {
        &self.levi
    }

    pub fn flags(&self) -> &BTreeMap<usize, bool> {
        &self.flags
    }

    pub fn torus_character(&self) -> Option<&GenuineTorusCharacter> {
        self.torus_character.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Every datum here stands for a genuine representation.
    pub fn is_genuine(&self) -> bool {
        true
    }
}

/// `Π(σ)`: eligible roots whose rank-one subgroup acts trivially.
pub fn pi_sigma(sigma: &SupersingularDatum) -> ParabolicSubset {
    let mut s = ParabolicSubset::empty(sigma.rank());
    for (&a, &f) in &sigma.flags {
        if f {
            s.insert(a).expect("validated index");
        }
    }
    s
}

/// `P(σ) = Π_M ⊔ Π(σ)`.
pub fn p_sigma(sigma: &SupersingularDatum) -> ParabolicSubset {
    sigma.levi.union(&pi_sigma(sigma))
}

/// `(P, σ, Q)` with `P ⊆ Q ⊆ P ⊔ Π(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersingularTriple {
    p: ParabolicSubset,
    sigma: SupersingularDatum,
    q: ParabolicSubset,
}

impl SupersingularTriple {
    pub fn new(p: ParabolicSubset, sigma: SupersingularDatum, q: ParabolicSubset) -> Result<Self> {
        if sigma.levi != p {
            return Err(Error::InvalidTriple("sigma must live on the Levi of P"));
        }
        if !p.is_subset(&q) {
            return Err(Error::InvalidTriple("P must be contained in Q"));
        }
        if !q.is_subset(&p_sigma(&sigma)) {
            return Err(Error::InvalidTriple("Q must be contained in P(sigma)"));
        }
        Ok(Self { p, sigma, q })
    }

    pub fn p(&self) -> &ParabolicSubset {
        &self.p
    }

    pub fn q(&self) -> &ParabolicSubset {
        &self.q
    }

    pub fn sigma(&self) -> &SupersingularDatum {
        &self.sigma
    }
}

impl fmt::Display for SupersingularTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.sigma.label, self.q)
    }
}

/// The factors `I(P, σ, Q)` of the induction of `σ`, one per `S ⊆ Π(σ)`.
pub fn composition_factors(sigma: &SupersingularDatum) -> Vec<SupersingularTriple> {
    pi_sigma(sigma)
        .subsets()
        .into_iter()
        .map(|s| {
            SupersingularTriple::new(sigma.levi, sigma.clone(), sigma.levi.union(&s))
                .expect("Q between P and P(sigma) by construction")
        })
        .collect()
}

/// `σ ≅ σ'`: `genuine_equal` for torus data, label equality otherwise.
pub fn sigma_equivalent(a: &SupersingularDatum, b: &SupersingularDatum, ctx: &CharacterContext) -> Result<bool> {
    if a.levi != b.levi {
        return Ok(false);
    }
    match (&a.torus_character, &b.torus_character) {
        (Some(x), Some(y)) => genuine_equal(x, y, ctx),
        (None, None) => Ok(a.label == b.label),
        _ => Ok(false),
    }
}

pub fn triples_equivalent(t: &SupersingularTriple, u: &SupersingularTriple, ctx: &CharacterContext) -> Result<bool> {
    if t.p != u.p || t.q != u.q {
        return Ok(false);
    }
    sigma_equivalent(&t.sigma, &u.sigma, ctx)
}

/// Number of short `i` with `σ ∘ α_i^∨` trivial.
fn trivial_short_count(sigma: &GenuineTorusCharacter) -> u32 {
    (1..sigma.rank())
        .filter(|&i| {
            restrict_short_coroot(sigma, i)
                .map(|c| c.is_trivial())
                .unwrap_or(false)
        })
        .count() as u32
}

/// Length of the principal series induced from `σ`.
pub fn ps_length(sigma: &GenuineTorusCharacter) -> u64 {
    1u64 << trivial_short_count(sigma)
}

pub fn ps_irreducible(sigma: &GenuineTorusCharacter) -> bool {
    ps_length(sigma) == 1
}

pub fn ps_equivalent(s: &GenuineTorusCharacter, t: &GenuineTorusCharacter, ctx: &CharacterContext) -> Result<bool> {
    genuine_equal(s, t, ctx)
}

/// `GL_{n_1} × … × GL_{n_r} × Sp_{2m}`, blocks in coordinate order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviShape {
    pub gl_blocks: Vec<usize>,
    pub sp_rank: usize,
}

impl LeviShape {
    pub fn rank(&self) -> usize {
        self.gl_blocks.iter().sum::<usize>() + self.sp_rank
    }

    /// Inverse of [`levi_shape`].
    pub fn to_subset(&self) -> ParabolicSubset {
        let n = self.rank();
        let mut s = ParabolicSubset::empty(n);
        let mut start = 1;
        for &b in &self.gl_blocks {
            for k in start..start + b - 1 {
                s.insert(k).expect("in range");
            }
            start += b;
        }
        if self.sp_rank > 0 {
            for k in start..=n {
                s.insert(k).expect("in range");
            }
        }
        s
    }
}

impl fmt::Display for LeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.gl_blocks.iter().map(|b| format!("GL_{b}")).collect();
        if self.sp_rank > 0 {
            parts.push(format!("Sp_{}", 2 * self.sp_rank));
        }
        write!(f, "{}", parts.join(" × "))
    }
}

/// Block decomposition of the Levi `M_J`.
pub fn levi_shape(j: &ParabolicSubset) -> LeviShape {
    let n = j.rank();
    // the run of J ending at α_n spans the symplectic factor
    let mut k = n + 1;
    while k > 1 && j.contains(k - 1) {
        k -= 1;
    }
    let sp_rank = n + 1 - k;
    let gl_coords = n - sp_rank;
    let mut gl_blocks = Vec::new();
    let mut size = 0;
    for c in 1..=gl_coords {
        size += 1;
        if c == gl_coords || !j.contains(c) {
            gl_blocks.push(size);
            size = 0;
        }
    }
    LeviShape { gl_blocks, sp_rank }
}

/// Supersingular datum for a Levi of the Siegel Levi `GL_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlDatum {
    pub levi: ParabolicSubset,
    /// Flags on `{α ∈ Π_S : ⟨levi, α^∨⟩ = 0}`.
    pub flags: BTreeMap<usize, bool>,
    pub label: String,
    /// `ξ_1 ⊗ … ⊗ ξ_n` when the Levi is the torus.
    pub torus: Option<Vec<SmoothCharacterFx>>,
}

impl GlDatum {
    /// `Π(ρ)_S`.
    pub fn pi_rho(&self) -> ParabolicSubset {
        let mut s = ParabolicSubset::empty(self.levi.rank());
        for (&a, &f) in &self.flags {
            if f && a < self.levi.rank() {
                s.insert(a).expect("validated index");
            }
        }
        s
    }

    fn validate(&self) -> Result<()> {
        let n = self.levi.rank();
        let siegel = ParabolicSubset::siegel(n);
        if !self.levi.is_subset(&siegel) {
            return Err(Error::InvalidTriple("GL Levi must lie in the Siegel Levi"));
        }
        let eligible = eligible_roots(&self.levi).intersection(&siegel);
        for a in eligible.indices() {
            if !self.flags.contains_key(&a) {
                return Err(Error::MissingFlag(a));
            }
        }
        for &a in self.flags.keys() {
            if !eligible.contains(a) {
                return Err(Error::IneligibleFlag(a));
            }
        }
        if let Some(xi) = &self.torus {
            if !self.levi.is_empty() {
                return Err(Error::TorusCharacterLevi);
            }
            if xi.len() != n {
                return Err(Error::RankMismatch {
                    left: xi.len(),
                    right: n,
                });
            }
            for i in 1..n {
                if self.flags.get(&i) != Some(&(xi[i - 1] == xi[i])) {
                    return Err(Error::FlagMismatch);
                }
            }
        }
        Ok(())
    }
}

/// Lift a reductive triple `(P, ρ, Q)` of `GL_n` to `(P, ρ ⊗ χ_ψ, Q)`.
pub fn siegel_lift(rho: &GlDatum, q: &ParabolicSubset, psi: SquareClass) -> Result<SupersingularTriple> {
    rho.validate()?;
    let n = rho.levi.rank();
    let p = rho.levi;
    if !p.is_subset(q) || !q.is_subset(&p.union(&rho.pi_rho())) {
        return Err(Error::InvalidTriple("reductive triple needs P ⊆ Q ⊆ P ∪ Π(ρ)"));
    }
    let sigma = match &rho.torus {
        Some(xi) => {
            let ch = GenuineTorusCharacter::new(xi.clone(), psi)?;
            SupersingularDatum::from_torus_character(ch, rho.label.clone())?
        }
        None => {
            let mut flags = rho.flags.clone();
            if eligible_roots(&p).contains(n) {
                flags.insert(n, false);
            }
            SupersingularDatum::new(p, flags, rho.label.clone())?
        }
    };
    SupersingularTriple::new(p, sigma, *q)
}

/// `P = Π`, i.e. the representation is supersingular itself.
pub fn is_supercuspidal_class(t: &SupersingularTriple) -> bool {
    t.p.is_full()
}

/// Outcome of [`enumerate_classification`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub triples: Vec<SupersingularTriple>,
    /// `(kept, dropped)` labels of menu entries found equivalent.
    pub merges: Vec<(String, String)>,
    /// Index pairs of equivalent triples among the output.
    pub collisions: Vec<(usize, usize)>,
    pub injective: bool,
}

/// All triples over the menu, after merging equivalent data.
pub fn enumerate_classification(
    n: usize,
    menu: &[SupersingularDatum],
    ctx: &CharacterContext,
) -> Result<ClassificationReport> {
    RootDatumCn::new(n)?;
    let mut kept: Vec<&SupersingularDatum> = Vec::new();
    let mut merges = Vec::new();
    for d in menu {
        if d.rank() != n {
            return Err(Error::RankMismatch {
                left: d.rank(),
                right: n,
            });
        }
        let mut merged = false;
        for k in &kept {
            if k.torus_character.is_none() && d.torus_character.is_none() && k.label == d.label && *k != d {
                return Err(Error::InconsistentDatum);
            }
            if sigma_equivalent(k, d, ctx)? {
                merges.push((k.label.clone(), d.label.clone()));
                merged = true;
                break;
            }
        }
        if !merged {
            kept.push(d);
        }
    }
    let triples: Vec<SupersingularTriple> = kept.iter().flat_map(|d| composition_factors(d)).collect();
    let mut collisions = Vec::new();
    for a in 0..triples.len() {
        for b in a + 1..triples.len() {
            if triples_equivalent(&triples[a], &triples[b], ctx)? {
                collisions.push((a, b));
            }
        }
    }
    Ok(ClassificationReport {
        injective: collisions.is_empty(),
        triples,
        merges,
        collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::LocalFieldDescriptor;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn ctx(p: u64, order: u64) -> CharacterContext {
        CharacterContext::new(LocalFieldDescriptor::qp(p).unwrap(), order).unwrap()
    }

    fn set(n: usize, idx: &[usize]) -> ParabolicSubset {
        ParabolicSubset::from_indices(n, idx).unwrap()
    }

    fn flags(pairs: &[(usize, bool)]) -> BTreeMap<usize, bool> {
        pairs.iter().copied().collect()
    }

    fn trivial_torus(n: usize, c: &CharacterContext) -> SupersingularDatum {
        let ch = GenuineTorusCharacter::new(vec![c.trivial(); n], SquareClass::One).unwrap();
        SupersingularDatum::from_torus_character(ch, "triv").unwrap()
    }

    /// All flag assignments on the eligible roots of `levi`, α_n false.
    fn all_data(levi: ParabolicSubset) -> Vec<SupersingularDatum> {
        let n = levi.rank();
        let elig: Vec<usize> = eligible_roots(&levi).indices().into_iter().filter(|&a| a < n).collect();
        let long = eligible_roots(&levi).contains(n);
        (0..1u64 << elig.len())
            .map(|m| {
                let mut f: BTreeMap<usize, bool> =
                    elig.iter().enumerate().map(|(k, &a)| (a, m >> k & 1 == 1)).collect();
                if long {
                    f.insert(n, false);
                }
                SupersingularDatum::new(levi, f, format!("{levi}:{m}")).unwrap()
            })
            .collect()
    }

    #[test]
    fn eligibility() {
        assert_eq!(eligible_roots(&ParabolicSubset::empty(3)), ParabolicSubset::full(3));
        assert!(eligible_roots(&ParabolicSubset::siegel(2)).is_empty());
        assert!(eligible_roots(&ParabolicSubset::siegel(3)).is_empty());
        assert_eq!(eligible_roots(&set(4, &[1])).indices(), vec![3, 4]);
        assert_eq!(eligible_roots(&set(3, &[3])).indices(), vec![1]);
        assert!(eligible_roots(&ParabolicSubset::full(2)).is_empty());
    }

    #[test]
    fn datum_validation() {
        let levi = set(3, &[1]);
        assert_eq!(
            SupersingularDatum::new(levi, flags(&[]), "x").unwrap_err(),
            Error::MissingFlag(3)
        );
        assert_eq!(
            SupersingularDatum::new(levi, flags(&[(3, false), (2, true)]), "x").unwrap_err(),
            Error::IneligibleFlag(2)
        );
        assert_eq!(
            SupersingularDatum::new(levi, flags(&[(3, true)]), "x").unwrap_err(),
            Error::LongRootFlag
        );
        let c = ctx(3, 4);
        let ch = GenuineTorusCharacter::new(vec![c.trivial(); 2], SquareClass::One).unwrap();
        assert_eq!(
            SupersingularDatum::with_torus_character(flags(&[(1, false), (2, false)]), ch.clone(), "t").unwrap_err(),
            Error::FlagMismatch
        );
        assert!(SupersingularDatum::with_torus_character(flags(&[(1, true), (2, false)]), ch, "t").is_ok());
        assert!(SupersingularDatum::new(levi, flags(&[(3, false)]), "x").unwrap().is_genuine());
    }

    #[test]
    fn pi_sigma_examples() {
        let c = ctx(3, 4);
        for n in 1..=4 {
            let d = trivial_torus(n, &c);
            assert_eq!(pi_sigma(&d), ParabolicSubset::siegel(n));
        }
        assert_eq!(p_sigma(&trivial_torus(2, &c)), set(2, &[1]));
        for n in 2..=5 {
            for d in all_data(ParabolicSubset::siegel(n)) {
                assert!(pi_sigma(&d).is_empty());
                assert_eq!(p_sigma(&d), ParabolicSubset::siegel(n));
            }
        }
        let full = SupersingularDatum::new(ParabolicSubset::full(3), flags(&[]), "sc").unwrap();
        assert_eq!(p_sigma(&full), ParabolicSubset::full(3));
        let off = SupersingularDatum::new(set(3, &[1]), flags(&[(3, false)]), "x").unwrap();
        assert!(pi_sigma(&off).is_empty());
    }

    #[test]
    fn composition_factor_counts() {
        let c = ctx(3, 4);
        let f2 = composition_factors(&trivial_torus(2, &c));
        assert_eq!(f2.len(), 2);
        assert_eq!(f2[0].q(), &ParabolicSubset::empty(2));
        assert_eq!(f2[1].q(), &set(2, &[1]));
        assert_eq!(composition_factors(&trivial_torus(3, &c)).len(), 4);
        for n in 1..=5 {
            for levi in ParabolicSubset::all(n) {
                for d in all_data(levi) {
                    let fs = composition_factors(&d);
                    assert_eq!(fs.len(), 1 << pi_sigma(&d).len());
                    assert!(!pi_sigma(&d).contains(n));
                    for t in &fs {
                        assert!(SupersingularTriple::new(*t.p(), t.sigma().clone(), *t.q()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn triple_validation() {
        let c = ctx(3, 4);
        let d = trivial_torus(2, &c);
        let e = ParabolicSubset::empty(2);
        assert!(SupersingularTriple::new(e, d.clone(), set(2, &[2])).is_err());
        assert!(SupersingularTriple::new(set(2, &[1]), d.clone(), set(2, &[1])).is_err());
        assert!(SupersingularTriple::new(e, d, set(2, &[1])).is_ok());
    }

    #[test]
    fn equivalence_of_triples() {
        let c = ctx(3, 4);
        let d = trivial_torus(2, &c);
        let t = &composition_factors(&d)[0];
        let u = &composition_factors(&d)[1];
        assert!(triples_equivalent(t, t, &c).unwrap());
        assert!(!triples_equivalent(t, u, &c).unwrap());
        // a square ψ-class change is invisible
        let ch = GenuineTorusCharacter::new(vec![c.trivial(); 2], SquareClass::One).unwrap();
        let d2 = SupersingularDatum::from_torus_character(ch.twist_psi(SquareClass::One), "other").unwrap();
        assert!(triples_equivalent(t, &composition_factors(&d2)[0], &c).unwrap());
        // nonsquare class: differs
        let d3 = SupersingularDatum::from_torus_character(ch.twist_psi(SquareClass::U), "u").unwrap();
        assert!(!triples_equivalent(t, &composition_factors(&d3)[0], &c).unwrap());
    }

    #[test]
    fn principal_series_lengths() {
        let c = ctx(5, 4);
        let chi = |k: i64| c.character(k, 0);
        let mk = |xi: Vec<SmoothCharacterFx>| GenuineTorusCharacter::new(xi, SquareClass::One).unwrap();
        for n in 1..=4 {
            let t = mk(vec![c.trivial(); n]);
            assert_eq!(ps_length(&t), 1 << (n - 1));
            assert_eq!(ps_irreducible(&t), n == 1);
        }
        let generic = mk(vec![chi(1), chi(2), chi(3)]);
        assert_eq!(ps_length(&generic), 1);
        assert!(ps_irreducible(&generic));
        assert_eq!(ps_length(&mk(vec![chi(1), chi(1), chi(2)])), 2);
        assert!(ps_equivalent(&generic, &generic, &c).unwrap());
        assert!(!ps_equivalent(&generic, &generic.twist_psi(SquareClass::U), &c).unwrap());
    }

    #[test]
    fn ps_compensated_by_hilbert_character() {
        let c = ctx(5, 4);
        let xi = vec![c.character(1, 0), c.character(3, 1)];
        let s = GenuineTorusCharacter::new(xi.clone(), SquareClass::One).unwrap();
        let h = c.hilbert_character(SquareClass::Pi);
        let xi2: Vec<SmoothCharacterFx> = xi.iter().map(|x| x.mul(&h).unwrap()).collect();
        let t = GenuineTorusCharacter::new(xi2, SquareClass::Pi).unwrap();
        assert!(ps_equivalent(&s, &t, &c).unwrap());
    }

    #[test]
    fn levi_shapes() {
        for n in 1..=5 {
            let s = levi_shape(&ParabolicSubset::siegel(n));
            assert_eq!(s.gl_blocks, vec![n]);
            assert_eq!(s.sp_rank, 0);
            let t = levi_shape(&ParabolicSubset::empty(n));
            assert_eq!(t.gl_blocks, vec![1; n]);
            let g = levi_shape(&ParabolicSubset::full(n));
            assert!(g.gl_blocks.is_empty());
            assert_eq!(g.sp_rank, n);
        }
        let s = levi_shape(&set(3, &[1, 3]));
        assert_eq!(s.gl_blocks, vec![2]);
        assert_eq!(s.sp_rank, 1);
        assert_eq!(s.to_string(), "GL_2 × Sp_2");
        assert_eq!(levi_shape(&set(4, &[2, 3])).to_string(), "GL_1 × GL_3");
        for n in 1..=6 {
            for j in ParabolicSubset::all(n) {
                let s = levi_shape(&j);
                assert_eq!(s.rank(), n);
                assert_eq!(s.to_subset(), j);
            }
        }
    }

    #[test]
    fn siegel_lifts() {
        // supercuspidal datum on GL_2
        let rho = GlDatum {
            levi: ParabolicSubset::siegel(2),
            flags: flags(&[]),
            label: "rho".into(),
            torus: None,
        };
        let s = ParabolicSubset::siegel(2);
        let t = siegel_lift(&rho, &s, SquareClass::One).unwrap();
        assert!(pi_sigma(t.sigma()).is_empty());
        assert_eq!(composition_factors(t.sigma()).len(), 1);
        assert!(!is_supercuspidal_class(&t));
        // torus of GL_2 with α_1 trivial
        let c = ctx(3, 4);
        let rho = GlDatum {
            levi: ParabolicSubset::empty(2),
            flags: flags(&[(1, true)]),
            label: "xi".into(),
            torus: Some(vec![c.trivial(); 2]),
        };
        let t = siegel_lift(&rho, &set(2, &[1]), SquareClass::One).unwrap();
        assert_eq!(pi_sigma(t.sigma()), set(2, &[1]));
        assert_eq!(t.q(), &set(2, &[1]));
        // Q beyond P ∪ Π(ρ)
        let rho = GlDatum {
            levi: ParabolicSubset::empty(2),
            flags: flags(&[(1, false)]),
            label: "z".into(),
            torus: None,
        };
        assert!(siegel_lift(&rho, &set(2, &[1]), SquareClass::One).is_err());
        let lifted = siegel_lift(&rho, &ParabolicSubset::empty(2), SquareClass::One).unwrap();
        assert_eq!(lifted.sigma().flags().get(&2), Some(&false));
    }

    #[test]
    fn siegel_lift_transports_flags() {
        for n in 1..=4 {
            let siegel = ParabolicSubset::siegel(n);
            for levi in siegel.subsets() {
                let elig: Vec<usize> = eligible_roots(&levi).intersection(&siegel).indices();
                for m in 0..1u64 << elig.len() {
                    let f: BTreeMap<usize, bool> = elig.iter().enumerate().map(|(k, &a)| (a, m >> k & 1 == 1)).collect();
                    let rho = GlDatum { levi, flags: f, label: format!("{levi}/{m}"), torus: None };
                    for extra in rho.pi_rho().subsets() {
                        let t = siegel_lift(&rho, &levi.union(&extra), SquareClass::U).unwrap();
                        assert_eq!(pi_sigma(t.sigma()), rho.pi_rho().intersection(&siegel));
                        assert!(!pi_sigma(t.sigma()).contains(n));
                        assert!(!is_supercuspidal_class(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn supercuspidal_class() {
        let sc = SupersingularDatum::new(ParabolicSubset::full(2), flags(&[]), "sc").unwrap();
        let t = SupersingularTriple::new(ParabolicSubset::full(2), sc, ParabolicSubset::full(2)).unwrap();
        assert!(is_supercuspidal_class(&t));
        let c = ctx(3, 4);
        assert!(!is_supercuspidal_class(&composition_factors(&trivial_torus(2, &c))[0]));
    }

    #[test]
    fn classification_menus() {
        let c = ctx(3, 4);
        let r = enumerate_classification(2, &[trivial_torus(2, &c)], &c).unwrap();
        assert_eq!(r.triples.len(), 2);
        assert!(r.injective);
        let sc = SupersingularDatum::new(ParabolicSubset::full(2), flags(&[]), "sc").unwrap();
        let r = enumerate_classification(2, core::slice::from_ref(&sc), &c).unwrap();
        assert_eq!(r.triples.len(), 1);
        let ch = GenuineTorusCharacter::new(vec![c.trivial(); 2], SquareClass::One).unwrap();
        let dup = SupersingularDatum::from_torus_character(ch, "again").unwrap();
        let r = enumerate_classification(2, &[trivial_torus(2, &c), dup, sc.clone()], &c).unwrap();
        assert_eq!(r.triples.len(), 3);
        assert_eq!(r.merges, vec![("triv".into(), "again".into())]);
        assert!(r.injective);
        // one label, two different data
        let other = SupersingularDatum::new(ParabolicSubset::siegel(2), flags(&[]), "sc").unwrap();
        assert_eq!(
            enumerate_classification(2, &[sc.clone(), other], &c).unwrap_err(),
            Error::InconsistentDatum
        );
        let twice = enumerate_classification(2, &[sc.clone(), sc.clone()], &c).unwrap();
        assert_eq!(twice.triples.len(), 1);
        assert_eq!(twice.merges.len(), 1);
        assert!(enumerate_classification(3, &[sc], &c).is_err());
    }

    proptest! {
        #[test]
        fn torus_data_agree_with_ps_length(
            exps in prop::collection::vec((0i64..4, 0i64..2), 1..5),
            psi in 0usize..4,
        ) {
            let c = ctx(5, 4);
            let xi: Vec<SmoothCharacterFx> = exps.iter().map(|&(u, v)| c.character(u, v)).collect();
            let ch = GenuineTorusCharacter::new(xi, SquareClass::ALL[psi]).unwrap();
            let d = SupersingularDatum::from_torus_character(ch.clone(), "x").unwrap();
            let n = ch.rank();
            prop_assert_eq!(composition_factors(&d).len() as u64, ps_length(&ch));
            prop_assert!(ps_length(&ch) <= 1 << (n - 1));
            prop_assert_eq!(ps_irreducible(&ch), pi_sigma(&d).is_empty());
        }
    }
}
