//! Exact linear algebra: fraction-free determinants over K[σ][T] and
//! nullspaces over K.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::annpoly::AnnPoly;
use crate::par;
use crate::scalar::{Field, Scalar};

/// Determinant by Bareiss elimination; every division is exact in K[σ][T].
/// Row updates below the pivot run through [`par::map`].
pub fn det_bareiss(field: Field, m: Vec<Vec<AnnPoly>>) -> AnnPoly {
    bareiss(field, m, true)
}

/// As [`det_bareiss`] with row updates performed one after another.
pub fn det_bareiss_sequential(field: Field, m: Vec<Vec<AnnPoly>>) -> AnnPoly {
    bareiss(field, m, false)
}

fn bareiss(field: Field, mut a: Vec<Vec<AnnPoly>>, parallel: bool) -> AnnPoly {
    let n = a.len();
    let one = AnnPoly::from_scalar(field.one());
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return AnnPoly::zero(field);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let pivot_row = a[k].clone();
        let update = |row: &Vec<AnnPoly>| -> Vec<AnnPoly> {
            let mut out = row.clone();
            for j in k + 1..n {
                let num = &(&pivot_row[k] * &row[j]) - &(&row[k] * &pivot_row[j]);
                out[j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            out[k] = AnnPoly::zero(field);
            out
        };
        let below = &a[k + 1..];
        let updated = if parallel { par::map(below, update) } else { par::map_sequential(below, update) };
        for (i, row) in updated.into_iter().enumerate() {
            a[k + 1 + i] = row;
        }
        prev = pivot_row[k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// A basis of `{x : M x = 0}`, one vector per free column in increasing
/// column order; each vector has a `1` in its free column.
pub fn nullspace(field: Field, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    match field {
        Field::Rationals => nullspace_rational(rows, ncols),
        Field::Prime(_) => nullspace_modular(field, rows, ncols),
    }
}

/// Reduced row echelon form over the integers with row contents removed
/// after every update, so entries never leave ℤ.
fn nullspace_rational(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let qs: Vec<&BigRational> = r.iter().map(|c| c.as_rational().expect("rational entry")).collect();
            let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints = qs.iter().map(|q| (q.numer() * &lcm) / q.denom()).collect();
            primitive_row(ints)
        })
        .filter(|r: &Vec<BigInt>| r.iter().any(|c| !c.is_zero()))
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let pivot_row = m[r].clone();
        let piv = pivot_row[c].clone();
        let idx: Vec<usize> = (0..m.len()).collect();
        let updated = par::map(&idx, |&i| {
            let row = &m[i];
            if i == r || row[c].is_zero() {
                return row.clone();
            }
            let f = &row[c];
            primitive_row(row.iter().zip(&pivot_row).map(|(x, y)| &piv * x - f * y).collect())
        });
        m = updated;
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &c) in m.iter().zip(&pivots) {
                v[c] = -BigRational::new(row[f].clone(), row[c].clone());
            }
            v.into_iter().map(Scalar::Rational).collect()
        })
        .collect()
}

fn primitive_row(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return row;
    }
    let g = g.abs();
    row.into_iter().map(|x| x / &g).collect()
}

fn nullspace_modular(field: Field, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<Scalar> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
        }
        m[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (row, &c) in m.iter().zip(&pivots) {
                v[c] = -&row[f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn qrow(r: &[i64]) -> Vec<Scalar> {
        r.iter().map(|&x| Q.from_i64(x)).collect()
    }

    fn apply(rows: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
        rows.iter()
            .map(|r| r.iter().zip(v).fold(Q.zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect()
    }

    #[test]
    fn nullspace_small() {
        let rows = vec![qrow(&[1, 2, 3]), qrow(&[2, 4, 6]), qrow(&[1, 0, 1])];
        let ns = nullspace(Q, &rows, 3);
        assert_eq!(ns.len(), 1);
        assert!(apply(&rows, &ns[0]).iter().all(Scalar::is_zero));
        assert!(nullspace(Q, &[qrow(&[1, 0]), qrow(&[0, 1])], 2).is_empty());
        assert_eq!(nullspace(Q, &[], 2).len(), 2);
    }

    #[test]
    fn nullspace_mod_p() {
        let f = Field::Prime(5);
        let rows = vec![
            vec![f.from_i64(1), f.from_i64(2)],
            vec![f.from_i64(3), f.from_i64(1)],
        ];
        // det = 1 - 6 = -5 = 0 mod 5
        let ns = nullspace(f, &rows, 2);
        assert_eq!(ns, vec![vec![f.from_i64(3), f.one()]]);
    }

    #[test]
    fn bareiss_matches_expansion() {
        let c = |v: &[i64]| AnnPoly::from_i64(Q, &[v]);
        let m = vec![
            vec![c(&[2]), c(&[0, 1]), c(&[1])],
            vec![c(&[1, 1]), c(&[3]), c(&[0])],
            vec![c(&[0]), c(&[1]), c(&[1, 0, 1])],
        ];
        // 2*(3(1+s^2) - 0) - s*((1+s)(1+s^2) - 0) + 1*((1+s) - 0)
        let expect = c(&[7, 0, 5, -1, -1]);
        assert_eq!(det_bareiss(Q, m.clone()), expect);
        assert_eq!(det_bareiss_sequential(Q, m), expect);
        let t = AnnPoly::t(Q);
        let m = vec![vec![c(&[0]), t.clone()], vec![t.clone(), c(&[1])]];
        assert_eq!(det_bareiss(Q, m), -&t.pow(2));
    }
}
