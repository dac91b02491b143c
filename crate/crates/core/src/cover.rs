//! Arithmetic of the twofold cover: the quadratic form `Q`, the quadratic
//! Hilbert symbol, commutator signs, and the cocycle on the Siegel Levi.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::rootdata::{Cocharacter, RootDatumCn};
use crate::util;
use crate::{Error, Result};

/// A cocharacter of `GSp_2n`: the `Sp` part in `λ_1..λ_n` coordinates and
/// the coefficient of the similitude cocharacter `λ_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GspCocharacter {
    pub sp: Cocharacter,
    pub similitude: i64,
}

impl GspCocharacter {
    pub fn new(sp: Cocharacter, similitude: i64) -> Self {
        Self { sp, similitude }
    }

    /// `λ_{n+1}` on its own.
    pub fn similitude_only(n: usize) -> Self {
        Self::new(Cocharacter::zero(n), 1)
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(&self.sp + &o.sp, self.similitude + o.similitude)
    }
}

impl From<Cocharacter> for GspCocharacter {
    fn from(sp: Cocharacter) -> Self {
        Self { sp, similitude: 0 }
    }
}

/// `Q(Σ a_i λ_i) = Σ_{i ≤ n} (a_i² + a_i a_{n+1})`.
pub fn eval_q(l: &GspCocharacter) -> i64 {
    l.sp.coords()
        .iter()
        .map(|&a| a * a + a * l.similitude)
        .sum()
}

/// `B(λ, λ') = Q(λ + λ') − Q(λ) − Q(λ')`.
pub fn eval_b(l: &GspCocharacter, m: &GspCocharacter) -> Result<i64> {
    if l.sp.rank() != m.sp.rank() {
        return Err(Error::RankMismatch {
            left: l.sp.rank(),
            right: m.sp.rank(),
        });
    }
    Ok(eval_q(&l.add(m)) - eval_q(l) - eval_q(m))
}

/// `F^×/(F^×)²` for odd residue characteristic: `ϖ^v · u^s` with
/// `v, s ∈ {0, 1}` and `u` a fixed non-square unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SquareClass {
    One,
    U,
    Pi,
    UPi,
}

impl SquareClass {
    pub const ALL: [SquareClass; 4] = [Self::One, Self::U, Self::Pi, Self::UPi];

    pub fn from_parts(valuation_parity: u8, unit_class: u8) -> Self {
        match (valuation_parity & 1, unit_class & 1) {
            (0, 0) => Self::One,
            (0, _) => Self::U,
            (_, 0) => Self::Pi,
            _ => Self::UPi,
        }
    }

    pub fn valuation_parity(self) -> u8 {
        matches!(self, Self::Pi | Self::UPi) as u8
    }

    pub fn unit_class(self) -> u8 {
        matches!(self, Self::U | Self::UPi) as u8
    }

    pub fn mul(self, o: Self) -> Self {
        Self::from_parts(
            self.valuation_parity() ^ o.valuation_parity(),
            self.unit_class() ^ o.unit_class(),
        )
    }

    pub fn is_square(self) -> bool {
        self == Self::One
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::One => "1",
            Self::U => "u",
            Self::Pi => "pi",
            Self::UPi => "upi",
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSquareClassError;

impl fmt::Display for ParseSquareClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("square class must be one of 1, u, pi, upi")
    }
}

impl FromStr for SquareClass {
    type Err = ParseSquareClassError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "1" => Ok(Self::One),
            "u" => Ok(Self::U),
            "pi" => Ok(Self::Pi),
            "upi" | "piu" => Ok(Self::UPi),
            _ => Err(ParseSquareClassError),
        }
    }
}

/// A p-adic field with odd residue characteristic, described by `p`, `f`
/// and the choice of non-square unit.
///
/// Over `Q_p` (`f = 1`) the uniformizer is `p` and `u` is an integer
/// representative, by default the least quadratic non-residue mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalFieldDescriptor {
    p: u64,
    f: u32,
    q: u64,
    nonsquare: Option<u64>,
}

impl LocalFieldDescriptor {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if p == 2 || !util::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if f == 0 {
            return Err(Error::FieldTooLarge);
        }
        let q = util::checked_pow(p, f).ok_or(Error::FieldTooLarge)?;
        let nonsquare = (f == 1).then(|| (2..p).find(|&a| util::legendre(a, p) == -1).unwrap());
        Ok(Self { p, f, q, nonsquare })
    }

    /// `Q_p` with the default non-square.
    pub fn qp(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Replace the non-square representative (`f = 1` only).
    pub fn with_nonsquare(mut self, u: u64) -> Result<Self> {
        if self.f != 1 {
            return Err(Error::OracleNeedsPrimeField);
        }
        if util::legendre(u, self.p) != -1 {
            return Err(Error::NotNonSquare(u));
        }
        self.nonsquare = Some(u % self.p);
        Ok(self)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn nonsquare(&self) -> Option<u64> {
        self.nonsquare
    }

    /// Value of the quadratic character of `k^×` at `−1`.
    pub fn chi_minus_one(&self) -> i8 {
        if self.q % 4 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn minus_one_class(&self) -> SquareClass {
        if self.q % 4 == 1 {
            SquareClass::One
        } else {
            SquareClass::U
        }
    }
}

fn sign(b: bool) -> i8 {
    if b {
        -1
    } else {
        1
    }
}

/// The quadratic Hilbert symbol by the tame formula.
///
/// For `x = ϖ^a u_x`, `y = ϖ^b u_y` it is the quadratic character of
/// `(−1)^{ab} u_x^b u_y^{−a}` mod `ϖ`, i.e.
/// `χ(−1)^{ab} · χ(u_x)^b · χ(u_y)^a`.
pub fn hilbert(x: SquareClass, y: SquareClass, field: &LocalFieldDescriptor) -> i8 {
    let (a, sx) = (x.valuation_parity(), x.unit_class());
    let (b, sy) = (y.valuation_parity(), y.unit_class());
    let from_minus_one = a & b == 1 && field.chi_minus_one() == -1;
    let from_units = (sx & b) ^ (sy & a) == 1;
    sign(from_minus_one ^ from_units)
}

/// `(x, y)_F` decided by searching for a primitive zero of
/// `x X² + y Y² − Z²` modulo `p^k` (`f = 1` only).
///
/// Representatives: `ϖ = p`, `u` the field's non-square. For `k ≥ 3` a
/// primitive solution mod `p^k` lifts by Hensel's lemma, since every
/// coefficient has valuation at most 1.
pub fn hilbert_by_solvability(
    x: SquareClass,
    y: SquareClass,
    field: &LocalFieldDescriptor,
    k: u32,
) -> Result<i8> {
    if field.f() != 1 {
        return Err(Error::OracleNeedsPrimeField);
    }
    if k < 3 {
        return Err(Error::Precondition("solvability oracle needs k >= 3"));
    }
    let p = field.p();
    let m = util::checked_pow(p, k).ok_or(Error::FieldTooLarge)?;
    let u = field.nonsquare().expect("prime field has a non-square");
    let rep = |c: SquareClass| {
        let mut r = 1u64;
        if c.valuation_parity() == 1 {
            r *= p;
        }
        if c.unit_class() == 1 {
            r = util::mul_mod(r, u, m);
        }
        r
    };
    let (xr, yr) = (rep(x), rep(y));
    let mut is_square = vec![false; m as usize];
    let mut is_unit_square = vec![false; m as usize];
    for z in 0..m {
        let s = util::mul_mod(z, z, m) as usize;
        is_square[s] = true;
        if z % p != 0 {
            is_unit_square[s] = true;
        }
    }
    let collect = |t: &[bool]| -> Vec<u64> { (0..m).filter(|&s| t[s as usize]).collect() };
    let (all, unit_squares) = (collect(&is_square), collect(&is_unit_square));
    // Primitive: X or Y a unit. If both are non-units, xX² + yY² is
    // divisible by p, so Z is too and the triple is not primitive.
    for &s1 in &unit_squares {
        for &s2 in &all {
            let v1 = (util::mul_mod(xr, s1, m) + util::mul_mod(yr, s2, m)) % m;
            let v2 = (util::mul_mod(xr, s2, m) + util::mul_mod(yr, s1, m)) % m;
            if is_square[v1 as usize] || is_square[v2 as usize] {
                return Ok(1);
            }
        }
    }
    Ok(-1)
}

/// `(x, y)^{B(λ, λ')}`, the sign in the commutator of lifted torus elements.
pub fn commutator_sign(
    l: &GspCocharacter,
    x: SquareClass,
    m: &GspCocharacter,
    y: SquareClass,
    field: &LocalFieldDescriptor,
) -> Result<i8> {
    let b = eval_b(l, m)?;
    Ok(if b.rem_euclid(2) == 0 {
        1
    } else {
        hilbert(x, y, field)
    })
}

/// Whether the cover splits over `M'_{α_i}`: exactly for short `α_i`.
pub fn splits_over_mprime(i: usize, n: usize) -> Result<bool> {
    RootDatumCn::new(n)?.coroot(i)?;
    Ok(i != n)
}

/// An element of the Siegel-Levi cover up to the data the cocycle sees:
/// the square class of `det(m)` and the sign `ζ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SiegelElement {
    pub det_class: SquareClass,
    pub zeta: i8,
}

impl SiegelElement {
    pub fn identity() -> Self {
        Self {
            det_class: SquareClass::One,
            zeta: 1,
        }
    }

    /// The inverse for [`rao_siegel_product`]: `(d, ζ)(d, ζ') = (1, (d,d) ζ ζ')`.
    pub fn inverse(self, field: &LocalFieldDescriptor) -> Self {
        Self {
            det_class: self.det_class,
            zeta: hilbert(self.det_class, self.det_class, field) * self.zeta,
        }
    }
}

/// `(m, ζ)(m', ζ') = (mm', (det m, det m')_F ζ ζ')`.
pub fn rao_siegel_product(
    a: SiegelElement,
    b: SiegelElement,
    field: &LocalFieldDescriptor,
) -> SiegelElement {
    SiegelElement {
        det_class: a.det_class.mul(b.det_class),
        zeta: hilbert(a.det_class, b.det_class, field) * a.zeta * b.zeta,
    }
}

/// The ratio character `x ↦ (x, a)_F` between the `ψ_a` and `ψ` data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioCharacter {
    pub a: SquareClass,
    pub field: LocalFieldDescriptor,
}

impl RatioCharacter {
    pub fn eval(&self, x: SquareClass) -> i8 {
        hilbert(x, self.a, &self.field)
    }

    pub fn is_trivial(&self) -> bool {
        SquareClass::ALL.iter().all(|&x| self.eval(x) == 1)
    }
}

pub fn psi_ratio_character(a: SquareClass, field: &LocalFieldDescriptor) -> RatioCharacter {
    RatioCharacter { a, field: *field }
}
