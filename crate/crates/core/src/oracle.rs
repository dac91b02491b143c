//! Brute-force recount of Satake coefficients for `SL_2` and `Sp_4` over
//! `Q_p`.
//!
//! A coset of `(U^- ∩ K)\U^-` is represented by `u = Π u_{−γ}(x_γ)` over the
//! positive roots `γ`, highest first, with each `x_γ` in `p^{−d}Z/Z` for the
//! enumeration depth `d`. The count of `S_{μ,λ}` is the number of such `u`
//! with `u μ(ϖ) ∈ K λ(ϖ) K`.

mod matrix;
mod padic;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_rational::Ratio;

pub use matrix::{
    negative_roots_by_height, q_from_ints, q_identity, q_inverse, q_is_integral, q_is_symplectic, q_mul,
    q_transpose, root_element, root_vector, symplectic_form, torus_element, weyl_long, GroupTag, PadicMatrix,
    QMatrix,
};
pub use padic::{PadicApprox, PadicRing};

use crate::hecke::{lambda_for, metaplectic_satake_t2lambda, parity_filter, TorusHeckeElement};
use crate::rootdata::{antidominant_above, is_antidominant, leq, Cocharacter, ParabolicSubset};
use crate::{Error, Result};

/// Outcome of counting one `S_{μ,λ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCountResult {
    pub mu: Cocharacter,
    pub lambda: Cocharacter,
    pub raw_count: u64,
    pub count_mod_p: u64,
    pub depth_used: u32,
    pub stabilized: bool,
}

/// Working precision `depth + max|λ_k| + 2`.
pub fn working_precision(lambda: &Cocharacter, depth: u32) -> u32 {
    let m = lambda.coords().iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    depth + m as u32 + 2
}

/// Polynomial with integer coefficients in the coset coordinates.
type Poly = BTreeMap<Vec<u8>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add(a: &mut Poly, b: &Poly) {
    for (e, c) in b {
        *a.entry(e.clone()).or_insert(0) += c;
    }
    a.retain(|_, c| *c != 0);
}

/// An entry of `u`, compiled for repeated evaluation.
#[derive(Debug, Clone)]
struct Entry {
    terms: Vec<(i64, Vec<u8>)>,
    degree: u32,
    /// Index of the last coordinate the entry depends on.
    last_var: Option<usize>,
}

impl Entry {
    fn new(p: &Poly) -> Self {
        let terms: Vec<(i64, Vec<u8>)> = p.iter().map(|(e, c)| (*c, e.clone())).collect();
        let degree = terms
            .iter()
            .map(|(_, e)| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0);
        let last_var = terms
            .iter()
            .filter_map(|(_, e)| e.iter().rposition(|&x| x > 0))
            .max();
        Self {
            terms,
            degree,
            last_var,
        }
    }

    /// The entry as `num · p^{−depth·degree}`.
    fn numerator(&self, a: &[u64], p_depth: i128) -> i128 {
        let mut s = 0i128;
        for (c, e) in &self.terms {
            let deg: u32 = e.iter().map(|&x| x as u32).sum();
            let mut t = *c as i128 * p_depth.pow(self.degree - deg);
            for (k, &x) in e.iter().enumerate() {
                if x > 0 {
                    t *= (a[k] as i128).pow(x as u32);
                }
            }
            s += t;
        }
        s
    }
}

fn valuation(mut x: i128, p: i128) -> i64 {
    debug_assert!(x != 0);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// Enumerates the representatives of `(U^- ∩ K)\U^-` at a fixed depth and
/// counts those landing in the double coset of `λ`.
#[derive(Debug, Clone)]
pub struct CosetEnumerator {
    group: GroupTag,
    p: u64,
    depth: u32,
    mu: Cocharacter,
    lambda: Cocharacter,
    ring: PadicRing,
    prec: u32,
    size: usize,
    nvars: usize,
    entries: Vec<Entry>,
    col_exp: Vec<i64>,
    /// Entries fully determined once coordinate `k` is fixed.
    check_after: Vec<Vec<usize>>,
    min_divisor: i64,
    prune: bool,
}

impl CosetEnumerator {
    pub fn new(mu: &Cocharacter, lambda: &Cocharacter, depth: u32, group: GroupTag, p: u64) -> Result<Self> {
        let r = group.symplectic_rank().ok_or(Error::UnsupportedGroup)?;
        if mu.rank() != r || lambda.rank() != r {
            return Err(Error::RankMismatch {
                left: mu.rank().max(lambda.rank()),
                right: r,
            });
        }
        let full = ParabolicSubset::full(r);
        if !is_antidominant(lambda, &full) || !is_antidominant(mu, &full) {
            return Err(Error::NotAntidominant);
        }
        if !leq(lambda, mu, &full) {
            return Err(Error::Precondition("mu must lie above lambda"));
        }
        if depth == 0 {
            return Err(Error::Precondition("depth must be positive"));
        }
        let ring = PadicRing::new(p)?;
        if p == 2 {
            return Err(Error::NotOddPrime(p));
        }
        let prec = working_precision(lambda, depth);
        let size = 2 * r;
        // negative roots highest first; coordinate k belongs to the k-th root
        // counted from the lowest
        let roots = negative_roots_by_height(r)?;
        let nvars = roots.len();
        let mut u: Vec<Vec<Poly>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let mut p = Poly::new();
                        if i == j {
                            p.insert(vec![0; nvars], 1);
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        for (pos, root) in roots.iter().enumerate() {
            let var = nvars - 1 - pos;
            let x = root_vector(r, root)?;
            let mut f: Vec<Vec<Poly>> = (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| {
                            let mut p = Poly::new();
                            if i == j {
                                p.insert(vec![0; nvars], 1);
                            }
                            if x[i][j] != 0 {
                                let mut e = vec![0u8; nvars];
                                e[var] = 1;
                                p.insert(e, x[i][j]);
                            }
                            p
                        })
                        .collect()
                })
                .collect();
            for row in f.iter_mut() {
                for e in row.iter_mut() {
                    e.retain(|_, c| *c != 0);
                }
            }
            let mut next = vec![vec![Poly::new(); size]; size];
            for i in 0..size {
                for j in 0..size {
                    for k in 0..size {
                        poly_add(&mut next[i][j], &poly_mul(&u[i][k], &f[k][j]));
                    }
                }
            }
            u = next;
        }
        let entries: Vec<Entry> = u.iter().flatten().map(Entry::new).collect();
        let mut check_after = vec![Vec::new(); nvars];
        for (idx, e) in entries.iter().enumerate() {
            if let Some(k) = e.last_var {
                check_after[k].push(idx);
            }
        }
        let mut col_exp: Vec<i64> = mu.coords().to_vec();
        col_exp.extend(mu.coords().iter().rev().map(|x| -x));
        let min_divisor = lambda.coords().iter().copied().min().unwrap_or(0);
        Ok(Self {
            group,
            p,
            depth,
            mu: mu.clone(),
            lambda: lambda.clone(),
            ring,
            prec,
            size,
            nvars,
            entries,
            col_exp,
            check_after,
            min_divisor,
            prune: true,
        })
    }

    /// Disable pruning, so every representative reaches the Cartan test.
    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    pub fn with_precision(mut self, prec: u32) -> Self {
        self.prec = prec;
        self
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn mu(&self) -> &Cocharacter {
        &self.mu
    }

    pub fn lambda(&self) -> &Cocharacter {
        &self.lambda
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    /// Number of values of the first coordinate; the unit of parallel work.
    pub fn outer_size(&self) -> u64 {
        self.p.pow(self.depth)
    }

    /// Number of representatives at this depth.
    pub fn representative_count(&self) -> u128 {
        (self.outer_size() as u128).pow(self.nvars as u32)
    }

    pub fn count(&self) -> Result<u64> {
        self.count_outer_range(0..self.outer_size())
    }

    /// Count with the first coordinate restricted to `range`.
    pub fn count_outer_range(&self, range: Range<u64>) -> Result<u64> {
        let pd = (self.p as i128).pow(self.depth);
        // entries without coordinates are the constant diagonal
        if self.prune {
            for (idx, e) in self.entries.iter().enumerate() {
                if e.last_var.is_none() && !self.entry_feasible(idx, &[], pd) {
                    return Ok(0);
                }
            }
        }
        let mut a = vec![0u64; self.nvars];
        let mut total = 0;
        for x in range.start..range.end.min(self.outer_size()) {
            a[0] = x;
            if self.prune && !self.level_feasible(0, &a, pd) {
                continue;
            }
            total += self.descend(1, &mut a, pd)?;
        }
        Ok(total)
    }

    fn entry_value(&self, idx: usize, a: &[u64], pd: i128) -> (i128, i64) {
        let e = &self.entries[idx];
        let num = e.numerator(a, pd);
        let shift = self.col_exp[idx % self.size] - (self.depth as i64) * e.degree as i64;
        (num, shift)
    }

    fn entry_feasible(&self, idx: usize, a: &[u64], pd: i128) -> bool {
        let (num, shift) = self.entry_value(idx, a, pd);
        num == 0 || valuation(num, self.p as i128) + shift >= self.min_divisor
    }

    fn level_feasible(&self, k: usize, a: &[u64], pd: i128) -> bool {
        self.check_after[k].iter().all(|&idx| self.entry_feasible(idx, a, pd))
    }

    fn descend(&self, k: usize, a: &mut Vec<u64>, pd: i128) -> Result<u64> {
        if k == self.nvars {
            return self.leaf(a, pd).map(u64::from);
        }
        let mut total = 0;
        for x in 0..self.outer_size() {
            a[k] = x;
            if self.prune && !self.level_feasible(k, a, pd) {
                continue;
            }
            total += self.descend(k + 1, a, pd)?;
        }
        a[k] = 0;
        Ok(total)
    }

    fn leaf(&self, a: &[u64], pd: i128) -> Result<bool> {
        let mut entries = Vec::with_capacity(self.size * self.size);
        let mut min_val = i64::MAX;
        for idx in 0..self.entries.len() {
            let (num, shift) = self.entry_value(idx, a, pd);
            if num != 0 {
                min_val = min_val.min(valuation(num, self.p as i128) + shift);
            }
            entries.push(self.ring.from_scaled(num, shift, self.prec)?);
        }
        // the first elementary divisor is the minimal entry valuation
        if min_val != self.min_divisor {
            return Ok(false);
        }
        let g = PadicMatrix::from_entries(&self.ring, self.group, entries)?;
        Ok(g.cartan_invariant()? == self.lambda)
    }

    /// The representative for coordinates `a` (numerators over `p^depth`),
    /// as an exact matrix `u`.
    pub fn representative(&self, a: &[u64]) -> Result<QMatrix> {
        if a.len() != self.nvars {
            return Err(Error::Precondition("one coordinate per negative root"));
        }
        let r = self.size / 2;
        let roots = negative_roots_by_height(r)?;
        let pd = (self.p as i128).pow(self.depth);
        let mut u = q_identity(self.size);
        for (pos, root) in roots.iter().enumerate() {
            let var = self.nvars - 1 - pos;
            u = q_mul(&u, &root_element(r, root, Ratio::new(a[var] as i128, pd))?);
        }
        Ok(u)
    }
}

/// Raw count of `S_{μ,λ}` at a single depth.
pub fn count_at_depth(mu: &Cocharacter, lambda: &Cocharacter, depth: u32, group: GroupTag, p: u64) -> Result<u64> {
    CosetEnumerator::new(mu, lambda, depth, group, p)?.count()
}

/// Count at `depth` and `depth + 1`; the result is stabilized when both agree.
pub fn count_cosets(mu: &Cocharacter, lambda: &Cocharacter, depth: u32, group: GroupTag, p: u64) -> Result<CosetCountResult> {
    count_cosets_with(mu, lambda, depth, group, p, |e| e.count())
}

/// As [`count_cosets`], with a caller-supplied counter (for example one that
/// splits [`CosetEnumerator::count_outer_range`] across threads).
pub fn count_cosets_with<F>(
    mu: &Cocharacter,
    lambda: &Cocharacter,
    depth: u32,
    group: GroupTag,
    p: u64,
    mut counter: F,
) -> Result<CosetCountResult>
where
    F: FnMut(&CosetEnumerator) -> Result<u64>,
{
    let first = counter(&CosetEnumerator::new(mu, lambda, depth, group, p)?)?;
    let second = counter(&CosetEnumerator::new(mu, lambda, depth + 1, group, p)?)?;
    Ok(CosetCountResult {
        mu: mu.clone(),
        lambda: lambda.clone(),
        raw_count: first,
        count_mod_p: first % p,
        depth_used: depth,
        stabilized: first == second,
    })
}

/// One row of counts per `μ ∈ antidominant_above(λ)`.
pub fn satake_counts_with<F>(lambda: &Cocharacter, depth: u32, group: GroupTag, p: u64, mut counter: F) -> Result<Vec<CosetCountResult>>
where
    F: FnMut(&CosetEnumerator) -> Result<u64>,
{
    let r = group.symplectic_rank().ok_or(Error::UnsupportedGroup)?;
    if lambda.rank() != r {
        return Err(Error::RankMismatch {
            left: lambda.rank(),
            right: r,
        });
    }
    antidominant_above(lambda, &ParabolicSubset::full(r))?
        .iter()
        .map(|mu| count_cosets_with(mu, lambda, depth, group, p, &mut counter))
        .collect()
}

/// `Σ_μ |S_{μ,λ}| τ_μ` reduced mod `p`.
pub fn reductive_satake_row(lambda: &Cocharacter, depth: u32, group: GroupTag, p: u64) -> Result<TorusHeckeElement> {
    reductive_satake_row_with(lambda, depth, group, p, |e| e.count())
}

pub fn reductive_satake_row_with<F>(lambda: &Cocharacter, depth: u32, group: GroupTag, p: u64, counter: F) -> Result<TorusHeckeElement>
where
    F: FnMut(&CosetEnumerator) -> Result<u64>,
{
    let rows = satake_counts_with(lambda, depth, group, p, counter)?;
    row_from_counts(&rows, p, depth)
}

/// Assemble a Hecke element from counts, refusing unstabilized ones.
pub fn row_from_counts(rows: &[CosetCountResult], p: u64, depth: u32) -> Result<TorusHeckeElement> {
    if rows.iter().any(|r| !r.stabilized) {
        return Err(Error::NotStabilized(depth));
    }
    Ok(TorusHeckeElement::from_terms(
        p,
        rows.iter().map(|r| (r.mu.clone(), r.count_mod_p as i64)),
    ))
}

/// Report from [`verify_metaplectic_pipeline`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub i: usize,
    pub n: usize,
    pub p: u64,
    pub depth: u32,
    pub counts: Vec<CosetCountResult>,
    pub computed: TorusHeckeElement,
    pub expected: TorusHeckeElement,
    pub agrees: bool,
}

pub fn group_for_rank(n: usize) -> Result<GroupTag> {
    match n {
        1 => Ok(GroupTag::Sl2),
        2 => Ok(GroupTag::Sp4),
        _ => Err(Error::UnsupportedGroup),
    }
}

/// Recount the transform of `T_{2λ}` and compare with the closed form.
///
/// For `i = n` the parity filter is applied with index `2λ`; for `i < n` it
/// would remove nothing.
pub fn verify_metaplectic_pipeline(i: usize, n: usize, p: u64, depth: u32) -> Result<PipelineReport> {
    verify_metaplectic_pipeline_with(i, n, p, depth, |e| e.count())
}

pub fn verify_metaplectic_pipeline_with<F>(i: usize, n: usize, p: u64, depth: u32, counter: F) -> Result<PipelineReport>
where
    F: FnMut(&CosetEnumerator) -> Result<u64>,
{
    let group = group_for_rank(n)?;
    let two_lambda = lambda_for(i, n)?.scale(2);
    let expected = metaplectic_satake_t2lambda(i, n, p)?;
    let counts = satake_counts_with(&two_lambda, depth, group, p, counter)?;
    let row = row_from_counts(&counts, p, depth)?;
    let computed = if i == n {
        parity_filter(&row, &two_lambda)
    } else {
        row
    };
    Ok(PipelineReport {
        i,
        n,
        p,
        depth,
        agrees: computed == expected,
        counts,
        computed,
        expected,
    })
}

/// Whether distinct coordinate tuples give distinct cosets `(U^- ∩ K) u`,
/// tested pairwise via integrality of `u' u^{-1}`.
pub fn representatives_distinct(group: GroupTag, p: u64, depth: u32) -> Result<bool> {
    let r = group.symplectic_rank().ok_or(Error::UnsupportedGroup)?;
    let zero = Cocharacter::zero(r);
    let e = CosetEnumerator::new(&zero, &zero, depth, group, p)?;
    let total = e.representative_count();
    if total > 4096 {
        return Err(Error::Precondition("too many representatives for a pairwise check"));
    }
    let mut reps = Vec::with_capacity(total as usize);
    for m in 0..total as u64 {
        let mut a = vec![0u64; e.nvars];
        let mut rest = m;
        for x in a.iter_mut() {
            *x = rest % e.outer_size();
            rest /= e.outer_size();
        }
        let u = e.representative(&a)?;
        let inv = q_inverse(&u).ok_or(Error::NotInGroup)?;
        reps.push((u, inv));
    }
    for (k, (u, _)) in reps.iter().enumerate() {
        for (_, inv) in &reps[..k] {
            if q_is_integral(&q_mul(u, inv), p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(v: &[i64]) -> Cocharacter {
        Cocharacter::new(v.to_vec())
    }

    #[test]
    fn sl2_hand_counts() {
        for p in [3u64, 5, 7] {
            let target = c(&[-2]);
            for (mu, expect) in [(-2, 1), (-1, p - 1), (0, p * p - p)] {
                let r = count_cosets(&c(&[mu]), &target, 3, GroupTag::Sl2, p).unwrap();
                assert_eq!(r.raw_count, expect, "p={p} mu={mu}");
                assert!(r.stabilized);
                assert_eq!(r.count_mod_p, expect % p);
            }
        }
    }

    #[test]
    fn sl2_row() {
        let row = reductive_satake_row(&c(&[-2]), 3, GroupTag::Sl2, 3).unwrap();
        let expect = TorusHeckeElement::from_terms(3, [(c(&[-2]), 1), (c(&[-1]), -1)]);
        assert_eq!(row, expect);
    }

    #[test]
    fn sp4_counts_at_p3() {
        let target = c(&[-2, -2]);
        let expected = [
            (c(&[-2, -2]), 1),
            (c(&[-2, -1]), 2),
            (c(&[-2, 0]), 6),
            (c(&[-1, -1]), 30),
            (c(&[-1, 0]), 72),
            (c(&[0, 0]), 1188),
        ];
        let rows = satake_counts_with(&target, 4, GroupTag::Sp4, 3, |e| e.count()).unwrap();
        let got: Vec<(Cocharacter, u64)> = rows.iter().map(|r| (r.mu.clone(), r.raw_count)).collect();
        assert_eq!(got, expected.to_vec());
        assert!(rows.iter().all(|r| r.stabilized));
    }

    /// Products of root coordinates bound `x_{−2ε_1}` only by twice the
    /// entry bound, so raw counts settle at depth `2·max|λ_k|`.
    #[test]
    fn sp4_stabilization_depth() {
        let got: Vec<u64> = (1..=5)
            .map(|d| count_at_depth(&c(&[0, 0]), &c(&[-2, -2]), d, GroupTag::Sp4, 3).unwrap())
            .collect();
        assert_eq!(got, vec![0, 540, 864, 1188, 1188]);
        assert!(got.iter().all(|x| x % 3 == 0));
    }

    #[test]
    fn sp4_short_root_counts() {
        let target = c(&[-2, 0]);
        let rows = satake_counts_with(&target, 3, GroupTag::Sp4, 3, |e| e.count()).unwrap();
        let got: Vec<u64> = rows.iter().map(|r| r.raw_count).collect();
        assert_eq!(got, vec![1, 2, 6, 108]);
    }

    #[test]
    fn pruning_does_not_change_counts() {
        for (mu, lambda) in [(c(&[-1, 0]), c(&[-1, -1])), (c(&[0, 0]), c(&[-1, -1])), (c(&[-1, 0]), c(&[-2, 0]))] {
            let e = CosetEnumerator::new(&mu, &lambda, 1, GroupTag::Sp4, 3).unwrap();
            let a = e.count().unwrap();
            let b = e.clone().without_pruning().count().unwrap();
            assert_eq!(a, b, "{mu} {lambda}");
        }
        for d in 1..=3 {
            let e = CosetEnumerator::new(&c(&[0]), &c(&[-2]), d, GroupTag::Sl2, 5).unwrap();
            assert_eq!(e.count().unwrap(), e.clone().without_pruning().count().unwrap());
        }
    }

    #[test]
    fn outer_blocks_sum_to_total() {
        let e = CosetEnumerator::new(&c(&[-1, 0]), &c(&[-2, -2]), 2, GroupTag::Sp4, 3).unwrap();
        let whole = e.count().unwrap();
        let parts: u64 = (0..9).map(|k| e.count_outer_range(k..k + 1).unwrap()).sum();
        assert_eq!(whole, parts);
        let halves = e.count_outer_range(0..4).unwrap() + e.count_outer_range(4..100).unwrap();
        assert_eq!(whole, halves);
    }

    #[test]
    fn pipeline_examples() {
        for (i, n, p, depth) in [(1, 1, 3, 2), (1, 1, 5, 2), (1, 2, 3, 2), (2, 2, 3, 4)] {
            let r = verify_metaplectic_pipeline(i, n, p, depth).unwrap();
            assert!(r.agrees, "{i} {n} {p}: {:?}", r.computed);
        }
    }

    #[test]
    fn representatives_are_distinct_cosets() {
        assert!(representatives_distinct(GroupTag::Sl2, 3, 2).unwrap());
        assert!(representatives_distinct(GroupTag::Sl2, 5, 2).unwrap());
        assert!(representatives_distinct(GroupTag::Sp4, 3, 1).unwrap());
    }

    #[test]
    fn representatives_are_in_the_group() {
        let e = CosetEnumerator::new(&c(&[0, 0]), &c(&[0, 0]), 1, GroupTag::Sp4, 3).unwrap();
        for a in [[1u64, 2, 0, 1], [2, 2, 2, 2], [0, 1, 1, 0]] {
            let u = e.representative(&a).unwrap();
            assert!(q_is_symplectic(&u, 2));
            for i in 0..4 {
                assert_eq!(u[i][i], Ratio::from_integer(1));
                for j in i + 1..4 {
                    assert_eq!(u[i][j], Ratio::from_integer(0));
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            CosetEnumerator::new(&c(&[0, 0]), &c(&[1, 0]), 2, GroupTag::Sp4, 3).unwrap_err(),
            Error::NotAntidominant
        );
        assert!(CosetEnumerator::new(&c(&[-2, -2]), &c(&[-1, -1]), 2, GroupTag::Sp4, 3).is_err());
        assert_eq!(
            CosetEnumerator::new(&c(&[0, 0]), &c(&[0, 0]), 2, GroupTag::Gl(4), 3).unwrap_err(),
            Error::UnsupportedGroup
        );
        assert_eq!(
            CosetEnumerator::new(&c(&[0]), &c(&[0]), 2, GroupTag::Sl2, 2).unwrap_err(),
            Error::NotOddPrime(2)
        );
        assert_eq!(verify_metaplectic_pipeline(1, 3, 3, 2).unwrap_err(), Error::UnsupportedGroup);
    }

    #[test]
    fn unstabilized_rows_are_refused() {
        let mut calls = 0u64;
        let err = reductive_satake_row_with(&c(&[-2]), 3, GroupTag::Sl2, 3, |_| {
            calls += 1;
            Ok(calls)
        })
        .unwrap_err();
        assert_eq!(err, Error::NotStabilized(3));
    }

    #[test]
    fn working_precision_formula() {
        assert_eq!(working_precision(&c(&[-2, -2]), 4), 8);
        assert_eq!(working_precision(&c(&[0]), 1), 3);
    }
}
