//! Algebraic series: an annihilator together with a verified expansion.
//!
//! Expansions are produced by Newton iteration from a short seed. The
//! stored annihilator is primitive, free of `(1 − σ)` factors, squarefree,
//! and (when [`Minimality::Certified`]) irreducible over K(σ).

use std::fmt;

use crate::annpoly::AnnPoly;
use crate::error::{Error, Result};
use crate::guess;
use crate::series::Series;

/// Upper limit on the number of unknowns in the minimality check.
const MAX_MINIMALITY_UNKNOWNS: usize = 160;

/// Whether the stored annihilator is known to be the minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Minimality {
    /// No annihilator of lower T-degree exists.
    Certified,
    /// The check was skipped as too large; scalar data holds up to divisibility.
    UpToDivisibility,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Minimality::Certified => "certified",
            Minimality::UpToDivisibility => "up_to_divisibility",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicSeries {
    ann: AnnPoly,
    expansion: Series,
    seed_len: usize,
    stripped_power: usize,
    multiplicity: usize,
    ambiguous: bool,
    minimality: Minimality,
}

impl AlgebraicSeries {
    pub fn ann(&self) -> &AnnPoly {
        &self.ann
    }

    pub fn expansion(&self) -> &Series {
        &self.expansion
    }

    /// Number of leading coefficients that pin down the branch.
    pub fn seed_len(&self) -> usize {
        self.seed_len
    }

    pub fn seed(&self) -> Series {
        self.expansion.truncate(self.seed_len)
    }

    /// Order to which `ann(expansion) ≡ 0` has been checked.
    pub fn certified_order(&self) -> usize {
        self.expansion.order()
    }

    /// Power of `(1 − σ)` removed from the input annihilator.
    pub fn stripped_power(&self) -> usize {
        self.stripped_power
    }

    /// Multiplicity of the selected factor in the input annihilator.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// True when more than one squarefree factor vanished on the expansion.
    pub fn ambiguous(&self) -> bool {
        self.ambiguous
    }

    pub fn minimality(&self) -> Minimality {
        self.minimality
    }

    /// Same flags with a new annihilator and expansion; used for
    /// transforms (negation, reflection, shifts) that map minimal
    /// polynomials to minimal polynomials.
    pub(crate) fn transformed(&self, ann: &AnnPoly, expansion: Series) -> Result<AlgebraicSeries> {
        let (ann, stripped_power) = ann.normalized()?;
        let seed_len = seed_len_for(&ann, &expansion)?;
        Ok(AlgebraicSeries { ann, expansion, seed_len, stripped_power, ..self.clone() })
    }

    /// Re-lifts from the seed to `order` coefficients.
    pub fn extend(&self, order: usize) -> Result<AlgebraicSeries> {
        let expansion = newton_lift(&self.ann, &self.seed(), order)?;
        Ok(AlgebraicSeries { expansion, ..self.clone() })
    }

    /// Re-lifts from the seed to `order` and checks that the result agrees
    /// with the stored expansion and is annihilated to `order`.
    pub fn verify_annihilation(&self, order: usize) -> Result<bool> {
        match newton_lift(&self.ann, &self.seed(), order) {
            Ok(x) => Ok(x.agrees_with(&self.expansion) && self.ann.eval_at_series(&x).is_zero()),
            Err(Error::SeedNotRoot) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// Extends `seed` to the unique root of `p` with `order` coefficients.
///
/// With `v` the valuation of `P'(seed)`, the seed must have more than `2v`
/// coefficients; the iteration then roughly doubles the number of correct
/// coefficients per step.
pub fn newton_lift(p: &AnnPoly, seed: &Series, order: usize) -> Result<Series> {
    let seed_len = seed.order();
    if seed_len == 0 {
        return Err(Error::OrderExhausted { needed: 1, available: 0 });
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.eval_at_series(seed).is_zero() {
        return Err(Error::SeedNotRoot);
    }
    let dp = p.derivative();
    if dp.is_zero() {
        return Err(Error::SingularRoot);
    }
    let v = match dp.eval_at_series(seed).valuation() {
        Some(v) if 2 * v < seed_len => v,
        _ => return Err(Error::SingularRoot),
    };
    let target = order.max(seed_len);
    let mut x = seed.clone();
    let mut known = seed_len;
    while known < target {
        let next = (2 * known - 2 * v).min(target);
        let work = pad(&x, next + v);
        let residual = p.eval_at_series(&work).divide_sigma_power(v).ok_or(Error::SingularRoot)?;
        let slope = dp.eval_at_series(&work).divide_sigma_power(v).ok_or(Error::SingularRoot)?;
        let delta = &residual.truncate(next) * &slope.truncate(next).invert()?;
        x = &pad(&x, next) - &delta;
        known = next;
    }
    if !x.agrees_with(seed) || !p.eval_at_series(&x).is_zero() {
        return Err(Error::SeedNotRoot);
    }
    Ok(x.truncate(order))
}

fn pad(x: &Series, order: usize) -> Series {
    let mut coeffs = x.coeffs()[..order.min(x.order())].to_vec();
    coeffs.resize(order, x.field().zero());
    Series::new(x.field(), coeffs)
}

/// Normalizes `p`, selects the squarefree factor admitting `seed` as a root,
/// and lifts to `order` coefficients.
pub fn make_algebraic(p: &AnnPoly, seed: &Series, order: usize) -> Result<AlgebraicSeries> {
    let (prim, stripped_power) = p.normalized()?;
    let factors = squarefree_or_whole(&prim);
    let order = order.max(seed.order());
    let mut singular = false;
    let mut lifted = Vec::new();
    for (f, m) in factors.iter() {
        match newton_lift(f, seed, order) {
            Ok(x) => lifted.push((f.clone(), *m, x)),
            Err(Error::SingularRoot) => singular = true,
            Err(Error::SeedNotRoot) => {}
            Err(e) => return Err(e),
        }
    }
    lifted.sort_by_key(|(f, _, _)| f.degree());
    let Some((ann, multiplicity, expansion)) = lifted.first().cloned() else {
        return Err(if singular { Error::SingularRoot } else { Error::NoBranchMatches });
    };
    let others_vanish = factors.iter().filter(|(f, _)| f.eval_at_series(&expansion).is_zero()).count() > 1;
    let ambiguous = lifted.len() > 1 || others_vanish;
    let (ann, minimality) = minimize(ann, &expansion);
    Ok(AlgebraicSeries {
        ann,
        expansion,
        seed_len: seed.order(),
        stripped_power,
        multiplicity,
        ambiguous,
        minimality,
    })
}

/// Pairs `p` with an expansion known by other means (a rational function,
/// a ring operation), choosing the squarefree factor that vanishes on it.
pub fn from_expansion(p: &AnnPoly, expansion: Series) -> Result<AlgebraicSeries> {
    let (prim, stripped_power) = p.normalized()?;
    let factors = squarefree_or_whole(&prim);
    let mut vanishing: Vec<(AnnPoly, usize)> = factors
        .into_iter()
        .filter(|(f, _)| f.eval_at_series(&expansion).is_zero())
        .collect();
    vanishing.sort_by_key(|(f, _)| f.degree());
    let ambiguous = vanishing.len() > 1;
    let Some((ann, multiplicity)) = vanishing.into_iter().next() else {
        return Err(Error::NoBranchMatches);
    };
    let seed_len = seed_len_for(&ann, &expansion)?;
    let (ann, minimality) = minimize(ann, &expansion);
    Ok(AlgebraicSeries {
        ann,
        expansion,
        seed_len,
        stripped_power,
        multiplicity,
        ambiguous,
        minimality,
    })
}

/// `2v + 1` where `v` is the valuation of `P'(x)`: enough leading
/// coefficients for [`newton_lift`] to recover `x`.
fn seed_len_for(p: &AnnPoly, x: &Series) -> Result<usize> {
    let v = p.derivative().eval_at_series(x).valuation().ok_or(Error::SingularRoot)?;
    let seed_len = 2 * v + 1;
    if seed_len > x.order() {
        return Err(Error::SingularRoot);
    }
    Ok(seed_len)
}

fn squarefree_or_whole(prim: &AnnPoly) -> Vec<(AnnPoly, usize)> {
    match prim.squarefree_factors() {
        Ok(fs) => fs,
        Err(_) => vec![(prim.clone(), 1)],
    }
}

/// Shrinks `p` to the minimal polynomial of `x`.
///
/// If a proper factor `R` of `p` vanishes on `x`, then by Gauss's lemma its
/// σ-degree is at most that of `p`, and any `Q` in the search space with
/// `Q(x) ≠ 0` has `val Q(x) ≤ deg_σ Res_T(R, Q)`. Solving for annihilators
/// of T-degree `< deg p` on more rows than that bound therefore finds only
/// true annihilators, and none exist exactly when `p` is minimal.
fn minimize(mut p: AnnPoly, x: &Series) -> (AnnPoly, Minimality) {
    let mut x = x.clone();
    loop {
        let m = p.degree().unwrap_or(0);
        if m <= 1 {
            return (p, Minimality::Certified);
        }
        let ds = p.sigma_degree();
        let d = m - 1;
        let rows = (m + d) * ds + 1;
        if (d + 1) * (ds + 1) > MAX_MINIMALITY_UNKNOWNS {
            return (p, Minimality::UpToDivisibility);
        }
        if x.order() < rows {
            match newton_lift(&p, &x, rows) {
                Ok(longer) => x = longer,
                Err(_) => return (p, Minimality::UpToDivisibility),
            }
        }
        let kernel = guess::relation_kernel(&x, d, ds, rows);
        let Some(q) = kernel.first() else {
            return (p, Minimality::Certified);
        };
        let g = p.gcd(q);
        match g.degree() {
            Some(k) if k > 0 && k < m && g.eval_at_series(&x).is_zero() => p = g,
            _ => return (p, Minimality::UpToDivisibility),
        }
    }
}
