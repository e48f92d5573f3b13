//! Annihilators and telescoping relations recovered from coefficient streams.
//!
//! Both searches solve an exact linear system whose unknowns are the
//! coefficients of the relation; a relation found on `N` coefficients is
//! then re-checked on `N'` coefficients before it is returned.

use std::cmp::Ordering;

use crate::annpoly::AnnPoly;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::SigmaPoly;
use crate::series::Series;

/// Search space and orders for [`guess_annihilator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuessBounds {
    pub max_t_degree: usize,
    pub max_sigma_degree: usize,
    /// Number of coefficients used to solve for the relation.
    pub order_used: usize,
    /// Number of coefficients on which the relation is re-checked.
    pub certify_order: usize,
}

impl GuessBounds {
    /// Bounds with the certification order set to `2 * order_used`.
    pub fn new(max_t_degree: usize, max_sigma_degree: usize, order_used: usize) -> Self {
        GuessBounds { max_t_degree, max_sigma_degree, order_used, certify_order: 2 * order_used }
    }

    pub fn unknowns(&self) -> usize {
        (self.max_t_degree + 1) * (self.max_sigma_degree + 1)
    }
}

/// Nullspace of the system `Σ c_{j,k} σ^k x^j ≡ 0 (mod σ^rows)` with
/// `j ≤ d_t`, `k ≤ d_s`, each kernel vector read back as a polynomial.
pub fn relation_kernel(x: &Series, d_t: usize, d_s: usize, rows: usize) -> Vec<AnnPoly> {
    let field = x.field();
    let x = x.truncate(rows);
    let n = x.order();
    let mut powers = vec![Series::one(field, n)];
    for j in 1..=d_t {
        let next = &powers[j - 1] * &x;
        powers.push(next);
    }
    let ncols = (d_t + 1) * (d_s + 1);
    let matrix: Vec<Vec<_>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(ncols);
            for pw in &powers {
                for k in 0..=d_s {
                    row.push(if i >= k { pw.coeff(i - k).clone() } else { field.zero() });
                }
            }
            row
        })
        .collect();
    linalg::nullspace(field, &matrix, ncols)
        .into_iter()
        .map(|v| {
            let coeffs = v.chunks(d_s + 1).map(|c| SigmaPoly::new(field, c.to_vec())).collect();
            AnnPoly::new(field, coeffs)
        })
        .collect()
}

/// Total order on normalized candidates: T-degree, σ-degree, then
/// coefficients from the constant term upward.
fn candidate_cmp(a: &AnnPoly, b: &AnnPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then(a.sigma_degree().cmp(&b.sigma_degree()))
        .then_with(|| {
            for (ca, cb) in a.coeffs().iter().zip(b.coeffs()) {
                for k in 0..=ca.degree().max(cb.degree()).unwrap_or(0) {
                    let o = ca.coeff(k).canonical_cmp(&cb.coeff(k));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
            Ordering::Equal
        })
}

/// Smallest annihilator of `x` within the bounds, certified on
/// `certify_order` coefficients. `None` when no relation exists.
pub fn guess_annihilator(x: &Series, b: &GuessBounds) -> Result<Option<AnnPoly>> {
    if b.unknowns() >= b.order_used {
        return Err(Error::InsufficientOrder { needed: b.unknowns() + 1, available: b.order_used });
    }
    let needed = b.order_used.max(b.certify_order);
    if x.order() < needed {
        return Err(Error::InsufficientOrder { needed, available: x.order() });
    }
    for d in 1..=b.max_t_degree {
        for e in 0..=b.max_sigma_degree {
            let mut candidates: Vec<AnnPoly> = relation_kernel(x, d, e, b.order_used)
                .iter()
                .filter_map(|p| p.normalized().ok().map(|(q, _)| q))
                .filter(|p| p.degree().is_some_and(|k| k > 0))
                .collect();
            candidates.sort_by(candidate_cmp);
            for p in candidates {
                if certify(&p, x, b.certify_order)? {
                    return Ok(Some(p));
                }
            }
        }
    }
    Ok(None)
}

/// Whether `p(x) ≡ 0 (mod σ^order)`.
pub fn certify(p: &AnnPoly, x: &Series, order: usize) -> Result<bool> {
    if x.order() < order {
        return Err(Error::InsufficientOrder { needed: order, available: x.order() });
    }
    Ok(p.eval_at_series(&x.truncate(order)).is_zero())
}

/// Finds `F` of minimal degree `≤ d_f` such that `F·x` is a polynomial `A`,
/// returned as `(A, F)` in lowest terms with `F(0) = 1`.
///
/// The polynomial part is allowed degree up to `N − E − 1`, where the last
/// `E = max(2(d_f + 1), N/2)` coefficients of `F·x` must vanish.
pub fn detect_telescope(x: &Series, d_f: usize) -> Result<Option<(SigmaPoly, SigmaPoly)>> {
    let n = x.order();
    if n <= 2 * (d_f + 1) {
        return Err(Error::InsufficientOrder { needed: 2 * (d_f + 1) + 1, available: n });
    }
    let field = x.field();
    let equations = (2 * (d_f + 1)).max(n / 2);
    let deg_a = n - equations - 1;
    for df in 0..=d_f {
        let rows: Vec<Vec<_>> = (deg_a + 1..n)
            .map(|i| (0..=df).map(|k| if i >= k { x.coeff(i - k).clone() } else { field.zero() }).collect())
            .collect();
        let mut candidates: Vec<SigmaPoly> = linalg::nullspace(field, &rows, df + 1)
            .into_iter()
            .map(|v| SigmaPoly::new(field, v))
            .filter_map(|f| {
                let c0 = f.coeff(0).inv()?;
                Some(f.scale(&c0))
            })
            .collect();
        candidates.sort_by(|a, b| {
            (0..=df).map(|k| a.coeff(k).canonical_cmp(&b.coeff(k))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        });
        if let Some(f) = candidates.into_iter().next() {
            let prod = x.mul_poly(&f);
            let a = SigmaPoly::new(field, prod.coeffs()[..=deg_a].to_vec());
            let g = a.gcd(&f);
            let (mut a, mut f) = if g.is_zero() { (a, f) } else { (a.div_exact(&g).expect("gcd"), f.div_exact(&g).expect("gcd")) };
            let c0 = f.coeff(0).inv().expect("F(0) stays nonzero after removing a common factor");
            a = a.scale(&c0);
            f = f.scale(&c0);
            return Ok(Some((a, f)));
        }
    }
    Ok(None)
}
