//! Young diagrams, hooks, translations, weak compositions and column-shift
//! normalization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Non-increasing tuple of positive integers. The empty tuple is ∅.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    /// Builds a diagram from parts in any order; zeros are dropped.
    pub fn new(parts: &[u32]) -> Self {
        let mut p: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { parts: p }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total number of boxes.
    pub fn length(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// t_r (1-based), zero past the last row.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Column offsets j + t_{k-j} for j = 0..k-1 of the shifted Hankel matrix.
    pub fn column_offsets(&self, k: usize) -> Result<Vec<i64>> {
        if self.rows() > k {
            return Err(Error::TooManyRows { rows: self.rows(), k });
        }
        Ok((0..k).map(|j| j as i64 + self.part(k - j) as i64).collect())
    }
}

impl std::fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Hook Y_{l,j} = (l-j+1, 1^{j-1}).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HookDiagram {
    pub l: u32,
    pub j: u32,
}

impl HookDiagram {
    pub fn new(l: u32, j: u32) -> Result<Self> {
        if j < 1 || j > l {
            return Err(Error::HookIndex { l: l as i64, j: j as i64 });
        }
        Ok(HookDiagram { l, j })
    }

    pub fn diagram(&self) -> YoungDiagram {
        let mut parts = vec![self.l - self.j + 1];
        parts.extend(std::iter::repeat_n(1, (self.j - 1) as usize));
        YoungDiagram::new(&parts)
    }
}

/// The hook Y_{l,j}.
pub fn hook(l: i64, j: i64) -> Result<YoungDiagram> {
    if l < 1 || j < 1 || j > l {
        return Err(Error::HookIndex { l, j });
    }
    Ok(HookDiagram::new(l as u32, j as u32)?.diagram())
}

/// T_h Y = (t_1+h, …, t_s+h, h, …, h) with k entries.
pub fn translate_diagram(y: &YoungDiagram, h: u32, k: usize) -> Result<YoungDiagram> {
    if y.rows() > k {
        return Err(Error::TooManyRows { rows: y.rows(), k });
    }
    let parts: Vec<u32> = (1..=k).map(|r| y.part(r) + h).collect();
    Ok(YoungDiagram::new(&parts))
}

/// Per-column additive shifts of a k-column matrix, in column order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftVector {
    pub shifts: Vec<u32>,
}

impl ShiftVector {
    pub fn k(&self) -> usize {
        self.shifts.len()
    }

    /// Column offsets j + s_j.
    pub fn offsets(&self) -> Vec<i64> {
        self.shifts.iter().enumerate().map(|(j, &s)| j as i64 + s as i64).collect()
    }
}

/// Lexicographic iterator over k-tuples of non-negative integers summing to l.
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    current: Option<Vec<u32>>,
}

impl Iterator for WeakCompositions {
    type Item = ShiftVector;

    fn next(&mut self) -> Option<ShiftVector> {
        let cur = self.current.take()?;
        let out = ShiftVector { shifts: cur.clone() };
        // Successor: find the rightmost position (excluding the last) that can
        // grow, take one unit from the tail and reset the tail.
        let k = cur.len();
        let mut next = cur;
        if k >= 2 {
            let mut pos = None;
            for i in (0..k - 1).rev() {
                let tail: u32 = next[i + 1..].iter().sum();
                if tail > 0 {
                    pos = Some(i);
                    break;
                }
            }
            if let Some(i) = pos {
                let tail: u32 = next[i + 1..].iter().sum();
                next[i] += 1;
                for v in next[i + 1..].iter_mut() {
                    *v = 0;
                }
                next[k - 1] = tail - 1;
                self.current = Some(next);
            }
        }
        Some(out)
    }
}

/// All weak compositions of l into k parts, lexicographically.
pub fn weak_compositions(l: u32, k: usize) -> WeakCompositions {
    if k == 0 {
        return WeakCompositions { current: None };
    }
    let mut first = vec![0; k];
    first[k - 1] = l;
    WeakCompositions { current: Some(first) }
}

/// Result of reordering columns into the canonical increasing form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Normalized {
    /// Two columns coincide, so the determinant vanishes.
    Zero,
    /// Equivalent diagram and the sign of the reordering.
    Diagram(YoungDiagram, i32),
}

/// Sorts column offsets β_j = j + s_j (s_j ≥ 0) increasingly and reads off
/// the diagram with t_{k-j} = β̃_j − j.
pub fn normalize_shifts(shifts: &ShiftVector) -> Normalized {
    let offs = shifts.offsets();
    let k = offs.len();
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by_key(|&i| offs[i]);
    for w in idx.windows(2) {
        if offs[w[0]] == offs[w[1]] {
            return Normalized::Zero;
        }
    }
    let mut sign = 1;
    let mut seen = vec![false; k];
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = idx[c];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    let parts: Vec<u32> = (0..k).map(|j| (offs[idx[j]] - j as i64) as u32).collect();
    Normalized::Diagram(YoungDiagram::new(&parts), sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hooks() {
        assert_eq!(hook(3, 2).unwrap().parts(), &[2, 1]);
        assert_eq!(hook(5, 1).unwrap().parts(), &[5]);
        assert_eq!(hook(4, 4).unwrap().parts(), &[1, 1, 1, 1]);
        assert!(hook(3, 4).is_err());
        assert!(hook(3, 0).is_err());
        for l in 1..=12 {
            for j in 1..=l {
                assert_eq!(hook(l, j).unwrap().length(), l as u32);
            }
        }
    }

    #[test]
    fn translations() {
        let one = YoungDiagram::new(&[1]);
        assert_eq!(translate_diagram(&one, 2, 3).unwrap().parts(), &[3, 2, 2]);
        assert_eq!(translate_diagram(&YoungDiagram::empty(), 1, 2).unwrap().parts(), &[1, 1]);
        let y = YoungDiagram::new(&[2, 1]);
        assert_eq!(translate_diagram(&y, 0, 4).unwrap(), y);
        assert!(translate_diagram(&YoungDiagram::new(&[1, 1, 1]), 1, 2).is_err());
    }

    #[test]
    fn ascending_input_is_sorted() {
        assert_eq!(YoungDiagram::new(&[1, 1, 2]).parts(), &[2, 1, 1]);
    }

    #[test]
    fn compositions() {
        let v: Vec<Vec<u32>> = weak_compositions(1, 2).map(|s| s.shifts).collect();
        assert_eq!(v, vec![vec![0, 1], vec![1, 0]]);
        let v: Vec<Vec<u32>> = weak_compositions(2, 2).map(|s| s.shifts).collect();
        assert_eq!(v, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(weak_compositions(4, 3).count(), 15);
        assert_eq!(weak_compositions(0, 3).count(), 1);
        assert_eq!(weak_compositions(3, 1).count(), 1);
    }

    #[test]
    fn normalization() {
        let n = normalize_shifts(&ShiftVector { shifts: vec![2, 0] });
        assert_eq!(n, Normalized::Diagram(YoungDiagram::new(&[1, 1]), -1));
        let n = normalize_shifts(&ShiftVector { shifts: vec![0, 0, 3] });
        assert_eq!(n, Normalized::Diagram(YoungDiagram::new(&[3]), 1));
        assert_eq!(normalize_shifts(&ShiftVector { shifts: vec![1, 0] }), Normalized::Zero);
    }

    #[test]
    fn column_offsets_follow_convention() {
        let y = YoungDiagram::new(&[2, 1]);
        assert_eq!(y.column_offsets(3).unwrap(), vec![0, 2, 4]);
        assert!(y.column_offsets(1).is_err());
    }
}
