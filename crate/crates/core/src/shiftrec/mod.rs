//! Structural matrices of the hook recursions and the hook linear-system solve.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Rational, Ring};
use crate::young::{hook, YoungDiagram};

/// Which structural matrix to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MatrixKind {
    B,
    A,
    C1,
    C2,
    C3,
    C4,
    C1Trunc,
    C2Trunc,
    C3Trunc,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::B => "B",
            MatrixKind::A => "A",
            MatrixKind::C1 => "C1",
            MatrixKind::C2 => "C2",
            MatrixKind::C3 => "C3",
            MatrixKind::C4 => "C4",
            MatrixKind::C1Trunc => "C1~",
            MatrixKind::C2Trunc => "C2~",
            MatrixKind::C3Trunc => "C3~",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "B" => MatrixKind::B,
            "A" => MatrixKind::A,
            "C1" => MatrixKind::C1,
            "C2" => MatrixKind::C2,
            "C3" => MatrixKind::C3,
            "C4" => MatrixKind::C4,
            "C1~" | "C1t" => MatrixKind::C1Trunc,
            "C2~" | "C2t" => MatrixKind::C2Trunc,
            "C3~" | "C3t" => MatrixKind::C3Trunc,
            _ => return None,
        })
    }
}

/// A dense structural matrix with its defining parameters.
#[derive(Clone, PartialEq, Debug)]
pub struct StructMatrix<C> {
    pub kind: MatrixKind,
    pub l: usize,
    pub entries: Vec<Vec<C>>,
}

impl<C: Ring> StructMatrix<C> {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }
}

fn sgn(n: i64) -> Rational {
    Rational::minus_one_pow(n)
}

/// a + b·k in the active ring.
fn lin<C: Ring>(a: Rational, b: Rational, k: &C) -> C {
    C::from_rational(&a).plus(&k.scaled(&b))
}

/// Entry (i, j) of B^{(l)}, 1-based.
pub fn b_entry(l: i64, i: i64, j: i64) -> Rational {
    if j == l {
        return &sgn(i - 1) * &Rational::frac(1, l);
    }
    if j >= i {
        &sgn(i + j - 1) * &Rational::frac(1, j * (j + 1))
    } else if j == i - 1 {
        Rational::frac(-1, i)
    } else {
        Rational::zero()
    }
}

/// Entry (i, j) of A^{(l)} = (B^{(l)})^{-1}, 1-based.
pub fn a_entry(l: i64, i: i64, j: i64) -> Rational {
    if i == l {
        return sgn(j - 1);
    }
    if j <= i {
        sgn(i - j + 1)
    } else if j == i + 1 {
        Rational::from(-i)
    } else {
        Rational::zero()
    }
}

/// Entry (i, j) of C1^{(l)} as a + b·k.
fn c1_parts(l: i64, i: i64, j: i64) -> (Rational, Rational) {
    if i <= j && j <= l - 1 {
        let s = sgn(i + j);
        let a = &Rational::frac(l - 1 - j, j + 1) + &Rational::frac(1 - j, j * (j + 1));
        let b = Rational::frac(2, j * (j + 1));
        (&s * &a, &s * &b)
    } else if j == i - 1 {
        (Rational::frac(-(l - 1 - j * j), j + 1), Rational::frac(-2 * j, j + 1))
    } else {
        (Rational::zero(), Rational::zero())
    }
}

/// Entry (i, j) of C2^{(l)} as a + b·k.
fn c2_parts(l: i64, i: i64, j: i64) -> (Rational, Rational) {
    if i - 1 <= j && j <= l - 2 {
        let f = &sgn(i + j) * &Rational::frac(1, (j + 1) * (j + 2));
        (&f * &Rational::from(2), f)
    } else if j == i - 2 {
        (Rational::frac(i - 2, i), Rational::frac(-1, i))
    } else {
        (Rational::zero(), Rational::zero())
    }
}

/// Entry (i, j) of C3^{(l)}.
pub fn c3_entry(i: i64, j: i64) -> Rational {
    if i == 1 && (j == 1 || j == 2) {
        sgn(j)
    } else if j > i + 1 {
        &sgn(i + j) * &Rational::frac(1, (j - 1) * (j - 2))
    } else if j == i + 1 {
        Rational::frac(j, j - 1)
    } else {
        Rational::zero()
    }
}

/// Entry (i, j) of C4^{(m)}.
pub fn c4_entry(i: i64, j: i64) -> Rational {
    if i == 1 && (1..=3).contains(&j) {
        sgn(j - 1)
    } else if j > i + 2 {
        &sgn(i - j - 1) * &Rational::frac(2, (j - 2) * (j - 3))
    } else if j == i + 2 {
        Rational::frac(i + 2, i)
    } else {
        Rational::zero()
    }
}

fn grid<C>(rows: i64, cols: i64, f: impl Fn(i64, i64) -> C) -> Vec<Vec<C>> {
    (1..=rows).map(|i| (1..=cols).map(|j| f(i, j)).collect()).collect()
}

/// Builds a structural matrix in the ring of `k`. The truncated kinds need
/// the integer value of k as well.
pub fn build_matrix<C: Ring>(
    kind: MatrixKind,
    l: usize,
    k: Option<&C>,
    k_int: Option<usize>,
) -> Result<StructMatrix<C>> {
    let li = l as i64;
    let min_l = match kind {
        MatrixKind::C1 | MatrixKind::C1Trunc => 2,
        MatrixKind::C2 | MatrixKind::C2Trunc => 3,
        _ => 1,
    };
    if l < min_l {
        return Err(Error::MatrixSize { kind: kind.name(), l: li });
    }
    let need_k = || k.ok_or(Error::MissingK(kind.name()));
    let need_kint = || k_int.map(|v| v as i64).ok_or(Error::MissingK(kind.name()));
    let q = |r: Rational| C::from_rational(&r);
    let entries = match kind {
        MatrixKind::B => grid(li, li, |i, j| q(b_entry(li, i, j))),
        MatrixKind::A => grid(li, li, |i, j| q(a_entry(li, i, j))),
        MatrixKind::C1 => {
            let k = need_k()?;
            grid(li, li - 1, |i, j| {
                let (a, b) = c1_parts(li, i, j);
                lin(a, b, k)
            })
        }
        MatrixKind::C2 => {
            let k = need_k()?;
            grid(li, li - 2, |i, j| {
                let (a, b) = c2_parts(li, i, j);
                lin(a, b, k)
            })
        }
        MatrixKind::C3 => grid(li, li + 1, |i, j| q(c3_entry(i, j))),
        MatrixKind::C4 => grid(li, li + 2, |i, j| q(c4_entry(i, j))),
        MatrixKind::C1Trunc => {
            let kv = need_kint()?;
            let (l0, l1) = (li.min(kv), (li - 1).min(kv));
            grid(l0, l1, |i, j| {
                if j <= l0 - 1 {
                    let (a, b) = c1_parts(li, i, j);
                    q(&a + &(&b * &Rational::from(kv)))
                } else {
                    q(&sgn(i + j) * &Rational::frac(2 * kv - 2 * j + li, l0))
                }
            })
        }
        MatrixKind::C2Trunc => {
            let kv = need_kint()?;
            let (l0, l2) = (li.min(kv), (li - 2).min(kv));
            grid(l0, l2, |i, j| {
                if j <= l0 - 2 {
                    let (a, b) = c2_parts(li, i, j);
                    q(&a + &(&b * &Rational::from(kv)))
                } else {
                    q(&sgn(i + j) * &Rational::frac(1, l0))
                }
            })
        }
        MatrixKind::C3Trunc => {
            let kv = need_kint()?;
            let (l0, l3) = (li.min(kv), (li + 1).min(kv));
            grid(l0, l3, |i, j| q(c3_entry(i, j)))
        }
    };
    Ok(StructMatrix { kind, l, entries })
}

/// Rational-valued builder for kinds that do not depend on k.
pub fn rational_matrix(kind: MatrixKind, l: usize) -> Result<Vec<Vec<Rational>>> {
    Ok(build_matrix::<Rational>(kind, l, None, None)?.entries)
}

/// Matrix product over a ring.
pub fn mat_mul<C: Ring>(a: &[Vec<C>], b: &[Vec<C>]) -> Vec<Vec<C>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = C::zero();
                    for t in 0..inner {
                        if !row[t].is_zero() && !b[t][j].is_zero() {
                            acc = acc.plus(&row[t].times(&b[t][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Applies a rational matrix to a vector of ring values.
pub fn apply_matrix<R: Ring>(m: &[Vec<Rational>], v: &[R]) -> Vec<R> {
    m.iter()
        .map(|row| {
            let mut acc = R::zero();
            for (c, x) in row.iter().zip(v) {
                if !c.is_zero() {
                    acc = acc.plus(&x.scaled(c));
                }
            }
            acc
        })
        .collect()
}

/// The hook system: returns (H_{k,{X;Y_{l,1}}}, …, H_{k,{X;Y_{l,l}}}) as
/// B^{(l)} times the vector whose (j−1)-th entry, j = 2..l, is
/// Σ_{h=1}^{j−1} (−1)^h T_h H_{k,{X;Y_{l−h,j−h}}} and whose last entry is
/// T_l H_{k,X}. `t_of(h, Y)` must return T_h H_{k,{X;Y}}.
pub fn solve_hook_system<R: Ring>(
    l: usize,
    mut t_of: impl FnMut(i64, &YoungDiagram) -> Result<R>,
) -> Result<Vec<R>> {
    if l == 0 {
        return Err(Error::MatrixSize { kind: "B", l: 0 });
    }
    let li = l as i64;
    let mut rhs = Vec::with_capacity(l);
    for j in 2..=li {
        let mut acc = R::zero();
        for h in 1..j {
            let y = hook(li - h, j - h)?;
            let t = t_of(h, &y)?;
            acc = if h % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
        }
        rhs.push(acc);
    }
    rhs.push(t_of(li, &YoungDiagram::empty())?);
    Ok(apply_matrix(&rational_matrix(MatrixKind::B, l)?, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, PolyK};
    use crate::oracle::det;

    #[test]
    fn b_and_a_of_size_two() {
        let b = rational_matrix(MatrixKind::B, 2).unwrap();
        assert_eq!(b, vec![vec![q(-1, 2), q(1, 2)], vec![q(-1, 2), q(-1, 2)]]);
        let a = rational_matrix(MatrixKind::A, 2).unwrap();
        assert_eq!(a, vec![vec![q(-1, 1), q(-1, 1)], vec![q(1, 1), q(-1, 1)]]);
    }

    #[test]
    fn inverse_and_determinant() {
        for l in 1..=10 {
            let a = rational_matrix(MatrixKind::A, l).unwrap();
            let b = rational_matrix(MatrixKind::B, l).unwrap();
            let p = mat_mul(&a, &b);
            for (i, row) in p.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, if i == j { Rational::one() } else { Rational::zero() }, "l={l}");
                }
            }
            assert_eq!(det(&a), Rational::factorial(l as u64));
        }
    }

    #[test]
    fn c4_first_row() {
        let c = rational_matrix(MatrixKind::C4, 1).unwrap();
        assert_eq!(c, vec![vec![q(1, 1), q(-1, 1), q(1, 1)]]);
    }

    #[test]
    fn shapes_and_missing_k() {
        let k = PolyK::k();
        let c1 = build_matrix(MatrixKind::C1, 4, Some(&k), None).unwrap();
        assert_eq!((c1.rows(), c1.cols()), (4, 3));
        let c2 = build_matrix(MatrixKind::C2, 4, Some(&k), None).unwrap();
        assert_eq!((c2.rows(), c2.cols()), (4, 2));
        let c3 = build_matrix::<PolyK>(MatrixKind::C3, 4, None, None).unwrap();
        assert_eq!((c3.rows(), c3.cols()), (4, 5));
        assert!(matches!(build_matrix::<PolyK>(MatrixKind::C1, 4, None, None), Err(Error::MissingK(_))));
        let t = build_matrix(MatrixKind::C1Trunc, 5, Some(&Rational::from(2)), Some(2)).unwrap();
        assert_eq!((t.rows(), t.cols()), (2, 2));
    }

    #[test]
    fn c1_entry_formula() {
        // (i,j) = (1,1), l = 3: (1/2 + 2k/2) = k + 1/2.
        let k = PolyK::k();
        let c1 = build_matrix(MatrixKind::C1, 3, Some(&k), None).unwrap();
        assert_eq!(c1.entries[0][0], PolyK::new(vec![q(1, 2), q(1, 1)]));
        // (2,1): -(2k - 1 + 2)/2.
        assert_eq!(c1.entries[1][0], PolyK::new(vec![q(-1, 2), q(-1, 1)]));
    }
}
