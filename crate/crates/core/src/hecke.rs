//! Torus Hecke elements, the metaplectic Satake identities for `T_{2λ}`,
//! the parity filter, the set `𝒜`, and Hecke-algebra characters.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::rootdata::{antidominant_above, is_antidominant, Cocharacter, ParabolicSubset, RootDatumCn};
use crate::util;
use crate::{Error, Result};

/// A finitely supported `Σ c_μ τ_μ` with `c_μ ∈ F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusHeckeElement {
    p: u64,
    coeffs: BTreeMap<Cocharacter, u64>,
}

impl TorusHeckeElement {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        Self {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(p: u64, mu: Cocharacter, c: i64) -> Self {
        let mut h = Self::zero(p);
        h.add_term(mu, c);
        h
    }

    pub fn from_terms<I: IntoIterator<Item = (Cocharacter, i64)>>(p: u64, terms: I) -> Self {
        let mut h = Self::zero(p);
        for (mu, c) in terms {
            h.add_term(mu, c);
        }
        h
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add_term(&mut self, mu: Cocharacter, c: i64) {
        let c = util::reduce_mod(c, self.p);
        let e = self.coeffs.entry(mu).or_insert(0);
        *e = (*e + c) % self.p;
        self.coeffs.retain(|_, v| *v != 0);
    }

    /// Coefficient in `0..p`.
    pub fn coeff(&self, mu: &Cocharacter) -> u64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    /// Coefficient as the symmetric residue in `(−p/2, p/2]`.
    pub fn signed_coeff(&self, mu: &Cocharacter) -> i64 {
        symmetric(self.coeff(mu), self.p)
    }

    /// Nonzero terms in increasing order of `μ`.
    pub fn terms(&self) -> impl Iterator<Item = (&Cocharacter, u64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn support(&self) -> Vec<Cocharacter> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p, "modulus mismatch");
        let mut h = self.clone();
        for (mu, c) in o.terms() {
            h.add_term(mu.clone(), c as i64);
        }
        h
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(
            self.p,
            self.terms().map(|(mu, c)| (mu.clone(), c as i64 * k)),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }
}

pub fn symmetric(c: u64, p: u64) -> i64 {
    if c > p / 2 {
        c as i64 - p as i64
    } else {
        c as i64
    }
}

/// `τ_λ * τ_μ = τ_{λ+μ}`, extended bilinearly.
pub fn tau_convolve(h: &TorusHeckeElement, g: &TorusHeckeElement) -> TorusHeckeElement {
    assert_eq!(h.p, g.p, "modulus mismatch");
    let mut out = TorusHeckeElement::zero(h.p);
    for (a, x) in h.terms() {
        for (b, y) in g.terms() {
            out.add_term(a + b, util::mul_mod(x, y, h.p) as i64);
        }
    }
    out
}

/// `λ = −(e_1 + … + e_i)`.
pub fn lambda_for(i: usize, n: usize) -> Result<Cocharacter> {
    RootDatumCn::new(n)?.lambda_alpha(i)
}

/// The transform of `T_{2λ}` for `λ = −(e_1 + … + e_i)`:
/// `τ_{2λ} − τ_{2λ+α_i^∨}` for `i < n`, and `τ_{2λ}` for `i = n`.
pub fn metaplectic_satake_t2lambda(i: usize, n: usize, p: u64) -> Result<TorusHeckeElement> {
    let rd = RootDatumCn::new(n)?;
    let two_lambda = rd.lambda_alpha(i)?.scale(2);
    let mut h = TorusHeckeElement::monomial(p, two_lambda.clone(), 1);
    if i < n {
        h.add_term(&two_lambda + &rd.coroot(i)?, -1);
    }
    Ok(h)
}

/// Zero every `c(μ)` with `Σ (μ + index)_k` odd, where `index` is the
/// cocharacter indexing the Hecke operator whose transform `h` is.
pub fn parity_filter(h: &TorusHeckeElement, index: &Cocharacter) -> TorusHeckeElement {
    TorusHeckeElement {
        p: h.p,
        coeffs: h
            .coeffs
            .iter()
            .filter(|(mu, _)| (mu.coord_sum() + index.coord_sum()).rem_euclid(2) == 0)
            .map(|(k, &v)| (k.clone(), v))
            .collect(),
    }
}

/// `𝒜 = {a ≥ 0 : Σ_k a_k ⟨α_j, α_k^∨⟩ ≤ 2⟨α_j, −λ⟩ for all j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASet {
    base: Cocharacter,
    elements: BTreeSet<Vec<i64>>,
}

impl ASet {
    pub fn base(&self) -> &Cocharacter {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn elements(&self) -> &BTreeSet<Vec<i64>> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        self.elements.contains(a)
    }

    /// `2λ + a·α^∨`.
    pub fn cocharacter(&self, a: &[i64]) -> Cocharacter {
        &self.base.scale(2) + &Cocharacter::from_coroot_coords(a)
    }
}

pub fn enumerate_a(lambda: &Cocharacter) -> Result<ASet> {
    let two = lambda.scale(2);
    let full = ParabolicSubset::full(lambda.rank());
    let elements = antidominant_above(&two, &full)?
        .iter()
        .map(|mu| (mu - &two).coroot_coords())
        .collect();
    Ok(ASet {
        base: lambda.clone(),
        elements,
    })
}

/// The raw fiber `{b ∈ 𝒜 : b_j = a_j for j ≠ i}` and, for short `i`,
/// whether it has the shape `{0, ε_i}` (when `a_j = 0` off `i`) or `{a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AFiber {
    pub members: Vec<Vec<i64>>,
    pub conforms: Option<bool>,
}

pub fn a_fiber(set: &ASet, a: &[i64], i: usize) -> Result<AFiber> {
    let n = set.rank();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    if !set.contains(a) {
        return Err(Error::NotAMember);
    }
    let members: Vec<Vec<i64>> = set
        .elements
        .iter()
        .filter(|b| (0..n).all(|j| j == i - 1 || b[j] == a[j]))
        .cloned()
        .collect();
    let conforms = (i < n).then(|| {
        let off_zero = (0..n).all(|j| j == i - 1 || a[j] == 0);
        if off_zero {
            let mut e = vec![0; n];
            e[i - 1] = 1;
            members == vec![vec![0; n], e]
        } else {
            members == vec![a.to_vec()]
        }
    });
    Ok(AFiber { members, conforms })
}

/// Accepts a coefficient family on `{2λ + b·α^∨ : b ∈ 𝒜}` iff
/// `c(2λ) = 1` and, for every distinct fiber in direction `i`, the
/// coefficients sum to zero mod `p`.
pub fn vanishing_sum_check(
    coeffs: &BTreeMap<Cocharacter, i64>,
    set: &ASet,
    i: usize,
    p: u64,
) -> Result<bool> {
    let n = set.rank();
    if i == 0 || i >= n {
        return Err(Error::Precondition("vanishing sums are stated for short i"));
    }
    let points: BTreeSet<Cocharacter> = set.elements.iter().map(|a| set.cocharacter(a)).collect();
    if coeffs.keys().any(|k| !points.contains(k)) {
        return Err(Error::UnexpectedCoefficient);
    }
    let mut sums: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for a in &set.elements {
        let c = coeffs
            .get(&set.cocharacter(a))
            .ok_or(Error::MissingCoefficient)?;
        let mut key = a.clone();
        key.remove(i - 1);
        let s = sums.entry(key).or_insert(0);
        *s = (*s + util::reduce_mod(*c, p)) % p;
    }
    let lead = util::reduce_mod(coeffs[&set.cocharacter(&vec![0; n])], p);
    Ok(lead == 1 % p && sums.values().all(|&s| s == 0))
}

/// A value of a Hecke-algebra character: `0`, or `ζ^k` in the cyclic value
/// group `Z/N` (written additively).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HeckeValue {
    Zero,
    Unit(u64),
}

impl HeckeValue {
    pub fn one() -> Self {
        Self::Unit(0)
    }

    pub fn mul(self, o: Self, order: u64) -> Self {
        match (self, o) {
            (Self::Unit(a), Self::Unit(b)) => Self::Unit((a + b) % order),
            _ => Self::Zero,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Self::Zero
    }
}

/// A character of a torus-level Hecke algebra, stored on the finitely many
/// `J`-antidominant cocharacters a computation touches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeCharacter {
    levi: ParabolicSubset,
    order: u64,
    values: BTreeMap<Cocharacter, HeckeValue>,
}

impl HeckeCharacter {
    /// Unit exponents are reduced mod `order`; the value at `0` is forced to
    /// be `1`.
    pub fn new(
        levi: ParabolicSubset,
        order: u64,
        values: BTreeMap<Cocharacter, HeckeValue>,
    ) -> Result<Self> {
        let n = levi.rank();
        if order == 0 {
            return Err(Error::Precondition("value group order must be positive"));
        }
        let mut values: BTreeMap<_, _> = values
            .into_iter()
            .map(|(k, v)| {
                let v = match v {
                    HeckeValue::Unit(a) => HeckeValue::Unit(a % order),
                    z => z,
                };
                (k, v)
            })
            .collect();
        for k in values.keys() {
            if k.rank() != n {
                return Err(Error::RankMismatch {
                    left: k.rank(),
                    right: n,
                });
            }
            if !is_antidominant(k, &levi) {
                return Err(Error::NotAntidominant);
            }
        }
        match values.get(&Cocharacter::zero(n)) {
            None => {
                values.insert(Cocharacter::zero(n), HeckeValue::one());
            }
            Some(&v) if v != HeckeValue::one() => return Err(Error::ValueAtZero),
            _ => {}
        }
        Ok(Self {
            levi,
            order,
            values,
        })
    }

    pub fn levi(&self) -> &ParabolicSubset {
        &self.levi
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.levi.rank()
    }

    pub fn value(&self, mu: &Cocharacter) -> Result<HeckeValue> {
        self.values.get(mu).copied().ok_or(Error::UndefinedValue)
    }

    pub fn values(&self) -> &BTreeMap<Cocharacter, HeckeValue> {
        &self.values
    }

    /// `χ(λ + μ) = χ(λ) χ(μ)` wherever all three are stored.
    pub fn check_multiplicative(&self) -> Result<()> {
        for (a, &x) in &self.values {
            for (b, &y) in &self.values {
                if let Some(&z) = self.values.get(&(a + b)) {
                    if x.mul(y, self.order) != z {
                        return Err(Error::NotMultiplicative);
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Π(χ) = {α : χ(τ_{λ_α}) = 0}` with `λ_{α_i} = −(e_1 + … + e_i)`.
pub fn pi_chi(chi: &HeckeCharacter) -> Result<ParabolicSubset> {
    pi_chi_scaled(chi, 1)
}

/// [`pi_chi`] evaluated at `k·λ_α` instead; independent of `k ≥ 1`.
pub fn pi_chi_scaled(chi: &HeckeCharacter, k: i64) -> Result<ParabolicSubset> {
    let n = chi.rank();
    let rd = RootDatumCn::new(n)?;
    let mut s = ParabolicSubset::empty(n);
    for i in 1..=n {
        if chi.value(&rd.lambda_alpha(i)?.scale(k))?.is_zero() {
            s.insert(i)?;
        }
    }
    Ok(s)
}

/// The scalar by which `φ^− * φ^+` acts, in the value group extended by 0.
///
/// A difference of two values is kept formally: it vanishes exactly when
/// the two values coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightConstant {
    Single(HeckeValue),
    Difference(HeckeValue, HeckeValue),
}

impl WeightConstant {
    pub fn is_zero(&self) -> bool {
        match *self {
            Self::Single(v) => v.is_zero(),
            Self::Difference(a, b) => a == b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChangeOfWeight {
    pub applicable: bool,
    pub constant: WeightConstant,
}

/// Decide whether the change-of-weight isomorphism applies at `α_i`.
///
/// With `λ = −(e_1 + … + e_i)` the constant is `χ(τ_{2λ})` for `i = n` and
/// `χ(τ_{2λ}) − χ(τ_{2λ+α_i^∨})` for `i < n`.
pub fn change_of_weight_decision(i: usize, chi: &HeckeCharacter) -> Result<ChangeOfWeight> {
    let n = chi.rank();
    let rd = RootDatumCn::new(n)?;
    if pi_chi(chi)?.contains(i) {
        return Err(Error::Precondition("alpha_i lies in Pi(chi)"));
    }
    let two_lambda = rd.lambda_alpha(i)?.scale(2);
    let lead = chi.value(&two_lambda)?;
    let constant = if i == n {
        WeightConstant::Single(lead)
    } else {
        WeightConstant::Difference(lead, chi.value(&(&two_lambda + &rd.coroot(i)?))?)
    };
    Ok(ChangeOfWeight {
        applicable: !constant.is_zero(),
        constant,
    })
}
