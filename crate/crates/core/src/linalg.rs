//! Exact rank and solve over `Q` for vectors indexed by words.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linear::WordSum;
use crate::seg::Word;

/// Dense matrix whose columns are the given word sums, one row per word.
fn matrix(columns: &[&WordSum], extra: Option<&WordSum>) -> Vec<Vec<BigRational>> {
    let mut index: BTreeMap<&Word, usize> = BTreeMap::new();
    for c in columns.iter().copied().chain(extra) {
        for w in c.keys() {
            let next = index.len();
            index.entry(w).or_insert(next);
        }
    }
    let width = columns.len() + extra.is_some() as usize;
    let mut rows = vec![vec![BigRational::zero(); width]; index.len()];
    for (j, c) in columns.iter().copied().chain(extra).enumerate() {
        for (w, k) in c.iter() {
            rows[index[w]][j] = BigRational::from_integer(k.clone());
        }
    }
    rows
}

/// Row-reduce in place; returns pivot columns among the first `ncols`.
fn reduce(rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][col];
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *v = &*v - &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of the span of `vectors` over `Q`.
pub fn rank(vectors: &[WordSum]) -> usize {
    let cols: Vec<&WordSum> = vectors.iter().collect();
    let mut m = matrix(&cols, None);
    reduce(&mut m, cols.len()).len()
}

/// Integer coefficients `x` with `Σ x_j columns[j] = target`, provided the
/// columns are independent and the unique solution is integral.
pub fn solve_integral(columns: &[WordSum], target: &WordSum) -> Option<Vec<BigInt>> {
    let cols: Vec<&WordSum> = columns.iter().collect();
    let mut m = matrix(&cols, Some(target));
    let n = cols.len();
    let pivots = reduce(&mut m, n + 1);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    (0..n)
        .map(|j| {
            let v = &m[j][n];
            v.is_integer().then(|| v.to_integer())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seg::Exponent;

    fn w(v: &[i64]) -> Word {
        Word(v.iter().map(|&k| Exponent::int(k)).collect())
    }

    #[test]
    fn rank_and_solve() {
        let a = WordSum::basis(w(&[0, 1])).add(&WordSum::basis(w(&[1, 0])));
        let b = WordSum::basis(w(&[1, 0]));
        assert_eq!(rank(&[a.clone(), b.clone()]), 2);
        assert_eq!(rank(&[a.clone(), a.clone()]), 1);
        let target = WordSum::basis(w(&[0, 1]));
        assert_eq!(
            solve_integral(&[a.clone(), b.clone()], &target),
            Some(vec![1.into(), (-1).into()])
        );
        assert_eq!(solve_integral(&[b], &target), None);
    }
}
