use std::collections::HashMap;

use crate::exactalg::Ring;

/// Determinant by Laplace expansion along rows, memoized on the set of
/// remaining columns. Works over any commutative ring without division.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let k = m.len();
    if k == 0 {
        return R::one();
    }
    assert!(k <= 20, "determinant too large for subset memoization");
    let mut memo: HashMap<u32, R> = HashMap::new();
    let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    det_rec(m, full, &mut memo)
}

fn det_rec<R: Ring>(m: &[Vec<R>], mask: u32, memo: &mut HashMap<u32, R>) -> R {
    let k = m.len();
    let row = k - mask.count_ones() as usize;
    if row == k {
        return R::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut pos = 0;
    for c in 0..k {
        if mask & (1 << c) == 0 {
            continue;
        }
        let e = &m[row][c];
        if !e.is_zero() {
            let sub = det_rec(m, mask & !(1 << c), memo);
            let t = e.times(&sub);
            acc = if pos % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
        }
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Matrix with row i and column j removed.
pub fn minor<R: Ring>(m: &[Vec<R>], i: usize, j: usize) -> Vec<Vec<R>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()
        })
        .collect()
}

/// Cofactor matrix: entry (i, j) is (−1)^{i+j} det(minor(i, j)).
pub fn cofactor_matrix<R: Ring>(m: &[Vec<R>]) -> Vec<Vec<R>> {
    let k = m.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = det(&minor(m, i, j));
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        d.negated()
                    }
                })
                .collect()
        })
        .collect()
}

/// Σ_ij a_ij b_ij.
pub fn inner_product<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> R {
    let mut acc = R::zero();
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            if !x.is_zero() && !y.is_zero() {
                acc = acc.plus(&x.times(y));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), Rational::from(-2));
        assert_eq!(det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])), Rational::from(0));
        assert_eq!(det(&m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])), Rational::from(1));
        assert_eq!(det::<Rational>(&[]), Rational::from(1));
    }

    #[test]
    fn adjugate_trace() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let c = cofactor_matrix(&a);
        assert_eq!(inner_product(&a, &c), &Rational::from(3) * &det(&a));
    }
}
