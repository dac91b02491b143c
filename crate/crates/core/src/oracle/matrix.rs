//! Matrix realizations of `SL_2`, `GL_k` and `Sp_4` and their Cartan
//! invariants.
//!
//! The symplectic form on `F^{2r}` is `J = Σ_{k ≤ r} (E_{k,k'} − E_{k',k})`
//! with `k' = 2r + 1 − k`. The torus acts by
//! `diag(ϖ^{μ_1}, …, ϖ^{μ_r}, ϖ^{−μ_r}, …, ϖ^{−μ_1})`, and the root vectors
//! are
//!
//! * `ε_i − ε_j`: `E_{ij} − E_{j'i'}`
//! * `ε_i + ε_j`: `E_{ij'} + E_{ji'}`
//! * `2ε_i`: `E_{ii'}`
//!
//! with transposes for the negative roots. `SL_2` is the case `r = 1`.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::padic::{PadicApprox, PadicRing};
use crate::rootdata::{antidominant_rep, Character, Cocharacter};
use crate::{Error, Result};

/// Exact rational matrix.
pub type QMatrix = Vec<Vec<Ratio<i128>>>;

/// Which group a matrix is meant to lie in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Sl2,
    Gl(usize),
    Sp4,
}

impl GroupTag {
    pub fn size(&self) -> usize {
        match *self {
            Self::Sl2 => 2,
            Self::Gl(k) => k,
            Self::Sp4 => 4,
        }
    }

    /// Rank of the symplectic group, when the tag is symplectic.
    pub fn symplectic_rank(&self) -> Option<usize> {
        match *self {
            Self::Sl2 => Some(1),
            Self::Sp4 => Some(2),
            Self::Gl(_) => None,
        }
    }
}

fn prime(k: usize, r: usize) -> usize {
    2 * r - 1 - k
}

pub fn symplectic_form(r: usize) -> Vec<Vec<i64>> {
    let mut j = vec![vec![0; 2 * r]; 2 * r];
    for k in 0..r {
        j[k][prime(k, r)] = 1;
        j[prime(k, r)][k] = -1;
    }
    j
}

/// The integer matrix `X_γ` spanning the root space of `γ` in `sp_{2r}`.
pub fn root_vector(r: usize, root: &Character) -> Result<Vec<Vec<i64>>> {
    if root.rank() != r {
        return Err(Error::RankMismatch {
            left: root.rank(),
            right: r,
        });
    }
    let c = root.coords();
    let support: Vec<usize> = (0..r).filter(|&k| c[k] != 0).collect();
    let mut x = vec![vec![0; 2 * r]; 2 * r];
    match support.as_slice() {
        [i] if c[*i].abs() == 2 => {
            let i = *i;
            if c[i] > 0 {
                x[i][prime(i, r)] = 1;
            } else {
                x[prime(i, r)][i] = 1;
            }
        }
        [i, j] if c[*i].abs() == 1 && c[*j].abs() == 1 => {
            let (i, j) = (*i, *j);
            match (c[i], c[j]) {
                (1, -1) | (-1, 1) => {
                    let (a, b) = if c[i] == 1 { (i, j) } else { (j, i) };
                    x[a][b] = 1;
                    x[prime(b, r)][prime(a, r)] = -1;
                }
                (1, 1) => {
                    x[i][prime(j, r)] = 1;
                    x[j][prime(i, r)] = 1;
                }
                _ => {
                    x[prime(j, r)][i] = 1;
                    x[prime(i, r)][j] = 1;
                }
            }
        }
        _ => return Err(Error::NotARoot),
    }
    Ok(x)
}

pub fn q_identity(size: usize) -> QMatrix {
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| if r == c { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect()
}

pub fn q_from_ints(m: &[Vec<i64>]) -> QMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x as i128)).collect())
        .collect()
}

pub fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| {
                    (0..b.len()).fold(Ratio::zero(), |s: Ratio<i128>, k| s + a[r][k] * b[k][c])
                })
                .collect()
        })
        .collect()
}

pub fn q_transpose(a: &QMatrix) -> QMatrix {
    (0..a[0].len())
        .map(|c| (0..a.len()).map(|r| a[r][c]).collect())
        .collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn q_inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i128>>> = a
        .iter()
        .zip(q_identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let t = m[col][c];
                    m[r][c] -= f * t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// All entries lie in `Z_(p)`.
pub fn q_is_integral(a: &QMatrix, p: u64) -> bool {
    a.iter()
        .flatten()
        .all(|x| x.denom() % (p as i128) != 0)
}

/// `u_γ(x) = I + x X_γ` (root vectors square to zero in this realization).
pub fn root_element(r: usize, root: &Character, x: Ratio<i128>) -> Result<QMatrix> {
    let xv = root_vector(r, root)?;
    let mut m = q_identity(2 * r);
    for (row, xr) in m.iter_mut().zip(&xv) {
        for (e, &v) in row.iter_mut().zip(xr) {
            *e += x * Ratio::from_integer(v as i128);
        }
    }
    Ok(m)
}

/// `μ(ϖ)` with `ϖ = p`.
pub fn torus_element(mu: &Cocharacter, p: u64) -> QMatrix {
    let r = mu.rank();
    let mut m = q_identity(2 * r);
    let pw = |e: i64| -> Ratio<i128> {
        let b = Ratio::from_integer(p as i128);
        if e >= 0 {
            num_traits::pow(b, e as usize)
        } else {
            num_traits::pow(b, (-e) as usize).recip()
        }
    };
    for (k, &e) in mu.coords().iter().enumerate() {
        m[k][k] = pw(e);
        m[prime(k, r)][prime(k, r)] = pw(-e);
    }
    m
}

/// `w_{α_r} = u_{α_r}(1) u_{−α_r}(−1) u_{α_r}(1)`.
pub fn weyl_long(r: usize) -> Result<QMatrix> {
    let a = Character::basis(r, r)?.scale(2);
    let one = Ratio::one();
    let up = root_element(r, &a, one)?;
    let down = root_element(r, &a.scale(-1), -one)?;
    Ok(q_mul(&q_mul(&up, &down), &up))
}

/// `g^T J g = J`.
pub fn q_is_symplectic(g: &QMatrix, r: usize) -> bool {
    let j = q_from_ints(&symplectic_form(r));
    q_mul(&q_mul(&q_transpose(g), &j), g) == j
}

/// Negative roots of `C_r`, highest first.
pub fn negative_roots_by_height(r: usize) -> Result<Vec<Character>> {
    let rd = crate::rootdata::RootDatumCn::new(r)?;
    let mut pos = rd.positive_roots();
    pos.sort_by_key(|a| core::cmp::Reverse(a.height().unwrap_or(0)));
    Ok(pos.iter().map(|a| a.scale(-1)).collect())
}

/// Square matrix over `Q_p` to finite precision, tagged with its group.
#[derive(Debug, Clone)]
pub struct PadicMatrix {
    ring: PadicRing,
    tag: GroupTag,
    size: usize,
    entries: Vec<PadicApprox>,
}

impl PadicMatrix {
    pub fn from_entries(ring: &PadicRing, tag: GroupTag, entries: Vec<PadicApprox>) -> Result<Self> {
        let size = tag.size();
        if entries.len() != size * size {
            return Err(Error::Precondition("entry count must match the group"));
        }
        Ok(Self {
            ring: ring.clone(),
            tag,
            size,
            entries,
        })
    }

    pub fn from_rational(ring: &PadicRing, tag: GroupTag, m: &QMatrix, prec: u32) -> Result<Self> {
        let size = tag.size();
        if m.len() != size || m.iter().any(|r| r.len() != size) {
            return Err(Error::Precondition("matrix shape must match the group"));
        }
        let p = ring.p() as i128;
        let mut entries = Vec::with_capacity(size * size);
        for x in m.iter().flatten() {
            let (mut den, mut shift) = (*x.denom(), 0i64);
            while den % p == 0 {
                den /= p;
                shift -= 1;
            }
            // num/den with den a unit: num · den^{-1} mod p^prec
            let num = ring.from_scaled(*x.numer(), shift, prec)?;
            let d = ring.from_int(den, prec)?;
            entries.push(ring.div(num, d)?);
        }
        Self::from_entries(ring, tag, entries)
    }

    pub fn identity(ring: &PadicRing, tag: GroupTag, prec: u32) -> Result<Self> {
        Self::from_rational(ring, tag, &q_identity(tag.size()), prec)
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> PadicApprox {
        self.entries[r * self.size + c]
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.size != o.size {
            return Err(Error::RankMismatch {
                left: self.size,
                right: o.size,
            });
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut s = PadicApprox::EXACT_ZERO;
                for k in 0..n {
                    s = self.ring.add(s, self.ring.mul(self.get(r, k), o.get(k, c)));
                }
                entries.push(s);
            }
        }
        Self::from_entries(&self.ring, self.tag, entries)
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Self {
            entries,
            ..self.clone()
        }
    }

    fn det2(&self) -> PadicApprox {
        let r = &self.ring;
        r.sub(
            r.mul(self.get(0, 0), self.get(1, 1)),
            r.mul(self.get(0, 1), self.get(1, 0)),
        )
    }

    /// Group membership to working precision.
    pub fn verify_membership(&self) -> Result<()> {
        let r = &self.ring;
        let ok = match self.tag {
            GroupTag::Gl(_) => true,
            GroupTag::Sl2 => {
                let one = r.from_int(1, self.get_prec())?;
                r.approx_eq(self.det2(), one)
            }
            GroupTag::Sp4 => {
                let j = Self::from_rational(r, self.tag, &q_from_ints(&symplectic_form(2)), self.get_prec())?;
                let lhs = self.transpose().mul(&j)?.mul(self)?;
                lhs.entries
                    .iter()
                    .zip(&j.entries)
                    .all(|(&a, &b)| r.approx_eq(a, b))
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotInGroup)
        }
    }

    fn get_prec(&self) -> u32 {
        self.entries
            .iter()
            .filter_map(|e| match *e {
                PadicApprox::Unit { rel_prec, .. } => Some(rel_prec),
                PadicApprox::Zero { .. } => None,
            })
            .max()
            .unwrap_or(1)
    }

    /// Valuations of the elementary divisors, ascending, by full pivoting.
    pub fn elementary_divisors(&self) -> Result<Vec<i64>> {
        let n = self.size;
        let r = &self.ring;
        let mut a = self.entries.clone();
        let mut out = Vec::with_capacity(n);
        for s in 0..n {
            let mut best: Option<(usize, usize, i64)> = None;
            let mut worst_zero: Option<i64> = None;
            for i in s..n {
                for j in s..n {
                    match a[i * n + j] {
                        PadicApprox::Unit { valuation, .. } => {
                            if best.is_none_or(|(_, _, v)| valuation < v) {
                                best = Some((i, j, valuation));
                            }
                        }
                        PadicApprox::Zero { abs_prec: Some(ap) } => {
                            worst_zero = Some(worst_zero.map_or(ap, |w: i64| w.min(ap)));
                        }
                        PadicApprox::Zero { abs_prec: None } => {}
                    }
                }
            }
            let Some((pi, pj, v)) = best else {
                return Err(Error::Precision);
            };
            if worst_zero.is_some_and(|w| w <= v) {
                return Err(Error::Precision);
            }
            for c in 0..n {
                a.swap(s * n + c, pi * n + c);
            }
            for row in 0..n {
                a.swap(row * n + s, row * n + pj);
            }
            let pivot = a[s * n + s];
            for i in s + 1..n {
                let f = r.div(a[i * n + s], pivot)?;
                if f.is_zero() && f.abs_prec().is_none() {
                    continue;
                }
                for c in s..n {
                    a[i * n + c] = r.sub(a[i * n + c], r.mul(f, a[s * n + c]));
                }
            }
            out.push(v);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The antidominant `λ` with `g ∈ K λ(ϖ) K`.
    pub fn cartan_invariant(&self) -> Result<Cocharacter> {
        let d = self.elementary_divisors()?;
        match self.tag {
            GroupTag::Gl(_) => Ok(Cocharacter::new(d)),
            GroupTag::Sl2 | GroupTag::Sp4 => {
                let m = d.len();
                if (0..m).any(|i| d[i] + d[m - 1 - i] != 0) {
                    return Err(Error::NotInGroup);
                }
                Ok(antidominant_rep(&Cocharacter::new(d[..m / 2].to_vec())))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatumCn;

    fn q(n: i128, d: i128) -> Ratio<i128> {
        Ratio::new(n, d)
    }

    fn padic(tag: GroupTag, m: &QMatrix, p: u64) -> PadicMatrix {
        PadicMatrix::from_rational(&PadicRing::new(p).unwrap(), tag, m, 12).unwrap()
    }

    #[test]
    fn root_elements_are_symplectic_and_weighted() {
        for r in 1..=3 {
            let rd = RootDatumCn::new(r).unwrap();
            for a in rd.roots() {
                let u = root_element(r, &a, q(7, 9)).unwrap();
                assert!(q_is_symplectic(&u, r), "{a}");
                // t X t^{-1} = γ(t) X for t = μ(2)
                let mu = Cocharacter::new((1..=r as i64).collect());
                let t = torus_element(&mu, 2);
                let x = q_from_ints(&root_vector(r, &a).unwrap());
                let conj = q_mul(&q_mul(&t, &x), &q_inverse(&t).unwrap());
                let w = crate::rootdata::pairing(&a, &mu).unwrap();
                let scale = if w >= 0 {
                    Ratio::from_integer(1i128 << w)
                } else {
                    Ratio::new(1, 1i128 << -w)
                };
                let expect: QMatrix = x.iter().map(|row| row.iter().map(|e| *e * scale).collect()).collect();
                assert_eq!(conj, expect, "{a}");
            }
            assert!(q_is_symplectic(&torus_element(&Cocharacter::new(vec![-1; r]), 3), r));
        }
    }

    #[test]
    fn weyl_element_is_signed_swap() {
        for r in 1..=2 {
            let w = weyl_long(r).unwrap();
            assert!(q_is_symplectic(&w, r));
            let n = 2 * r;
            let (a, b) = (r - 1, r);
            for i in 0..n {
                for j in 0..n {
                    let v = w[i][j];
                    let expect = if (i, j) == (a, b) {
                        1
                    } else if (i, j) == (b, a) {
                        -1
                    } else if i == j && i != a && i != b {
                        1
                    } else {
                        0
                    };
                    assert_eq!(v, Ratio::from_integer(expect), "({i},{j})");
                }
            }
            let p = padic(if r == 1 { GroupTag::Sl2 } else { GroupTag::Sp4 }, &w, 3);
            p.verify_membership().unwrap();
            assert_eq!(p.cartan_invariant().unwrap(), Cocharacter::zero(r));
        }
    }

    #[test]
    fn cartan_examples() {
        let id = padic(GroupTag::Sp4, &q_identity(4), 5);
        assert_eq!(id.cartan_invariant().unwrap(), Cocharacter::zero(2));
        for mu in [vec![-2, -1], vec![-3, 0], vec![0, 0]] {
            let mu = Cocharacter::new(mu);
            let g = padic(GroupTag::Sp4, &torus_element(&mu, 3), 3);
            g.verify_membership().unwrap();
            assert_eq!(g.cartan_invariant().unwrap(), mu);
        }
        // SL_2: lower unipotent with entry p^{-1}, times diag(p^{-1}, p)
        let p = 3;
        let u = root_element(1, &Character::new(vec![-2]), q(1, 3)).unwrap();
        let t = torus_element(&Cocharacter::new(vec![-1]), p);
        let g = padic(GroupTag::Sl2, &q_mul(&u, &t), p);
        g.verify_membership().unwrap();
        assert_eq!(g.cartan_invariant().unwrap(), Cocharacter::new(vec![-2]));
    }

    #[test]
    fn membership_failures() {
        let mut m = q_identity(4);
        m[0][0] = q(3, 1);
        let g = padic(GroupTag::Sp4, &m, 3);
        assert_eq!(g.verify_membership(), Err(Error::NotInGroup));
        assert_eq!(g.cartan_invariant(), Err(Error::NotInGroup));
        let mut m = q_identity(2);
        m[0][1] = q(1, 1);
        m[1][0] = q(1, 1);
        assert_eq!(padic(GroupTag::Sl2, &m, 5).verify_membership(), Err(Error::NotInGroup));
    }

    #[test]
    fn gl_divisors() {
        let m = q_from_ints(&[vec![3, 0, 0], vec![0, 1, 0], vec![0, 9, 1]]);
        let g = padic(GroupTag::Gl(3), &m, 3);
        assert_eq!(g.cartan_invariant().unwrap(), Cocharacter::new(vec![0, 0, 1]));
        let m = q_from_ints(&[vec![3, 1], vec![0, 3]]);
        let g = padic(GroupTag::Gl(2), &m, 3);
        assert_eq!(g.cartan_invariant().unwrap(), Cocharacter::new(vec![0, 2]));
    }

    #[test]
    fn singular_input_is_a_precision_error() {
        let m = q_from_ints(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(padic(GroupTag::Gl(2), &m, 3).elementary_divisors(), Err(Error::Precision));
    }

    #[test]
    fn non_roots_rejected() {
        assert_eq!(root_vector(1, &Character::new(vec![1])), Err(Error::NotARoot));
        assert_eq!(root_vector(3, &Character::new(vec![1, 1, 1])), Err(Error::NotARoot));
        assert!(root_vector(2, &Character::new(vec![1])).is_err());
    }

    #[test]
    fn negative_roots_are_ordered() {
        let r = negative_roots_by_height(2).unwrap();
        assert_eq!(r[0], Character::new(vec![-2, 0]));
        assert_eq!(r.len(), 4);
        let h: Vec<i64> = r.iter().map(|a| a.scale(-1).height().unwrap()).collect();
        assert!(h.windows(2).all(|w| w[0] >= w[1]));
    }
}
