//! Reduced simplicial homology over a prime field.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::PrimeField;

type Column = Vec<(usize, u32)>;

/// Faces as vertex masks, grouped by size; `by_size[0] == [0]` is the empty face.
#[derive(Debug, Clone)]
pub(crate) struct Faces {
    pub by_size: Vec<Vec<u64>>,
}

impl Faces {
    pub fn max_size(&self) -> usize {
        self.by_size.len() - 1
    }

    fn index(&self, size: usize, face: u64) -> usize {
        self.by_size[size]
            .binary_search(&face)
            .expect("boundary face present")
    }

    /// Columns of the boundary map from faces of `size` to faces of `size - 1`.
    fn boundary(&self, size: usize, face: u64, f: PrimeField) -> Column {
        let mut col: Column = Vec::with_capacity(size);
        let mut rest = face;
        let mut k = 0;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let sign = if k % 2 == 0 { 1 } else { f.neg(1) };
            col.push((self.index(size - 1, face & !b), sign));
            k += 1;
        }
        col.sort_unstable_by_key(|e| e.0);
        col
    }
}

fn add_scaled(a: &Column, c: u32, b: &Column, f: PrimeField) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(usize::MAX, |e| e.0);
        let rb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i]);
            i += 1;
        } else if rb < ra {
            out.push((rb, f.mul(c, b[j].1)));
            j += 1;
        } else {
            let v = f.add(a[i].1, f.mul(c, b[j].1));
            if v != 0 {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduces the boundary map out of faces of `size`, skipping the columns in `cleared`.
/// Returns the rank and the pivot rows.
fn reduce(faces: &Faces, size: usize, cleared: &[bool], f: PrimeField) -> (usize, Vec<bool>) {
    let rows = faces.by_size[size - 1].len();
    let mut pivots: Vec<Option<Column>> = vec![None; rows];
    let mut is_pivot = vec![false; rows];
    let mut rank = 0;
    for (idx, &face) in faces.by_size[size].iter().enumerate() {
        if cleared.get(idx).copied().unwrap_or(false) {
            continue;
        }
        let mut col = faces.boundary(size, face, f);
        while let Some(&(r, c)) = col.last() {
            match &pivots[r] {
                Some(p) => {
                    let lead = p.last().expect("pivot column nonempty").1;
                    let factor = f.neg(f.mul(c, f.inv(lead)));
                    col = add_scaled(&col, factor, p, f);
                }
                None => break,
            }
        }
        if let Some(&(r, _)) = col.last() {
            is_pivot[r] = true;
            pivots[r] = Some(col);
            rank += 1;
        }
    }
    (rank, is_pivot)
}

/// `dim H̃_d` for `d` from the top dimension down to `floor` (at least `-1`), keyed by
/// `d`. With `first_only` it stops at the first nonzero group.
pub(crate) fn betti_top_down(
    faces: &Faces,
    f: PrimeField,
    floor: i64,
    first_only: bool,
) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    let top = faces.max_size();
    let mut rank_above = 0;
    let mut cleared: Vec<bool> = Vec::new();
    for size in (0..=top).rev() {
        let d = size as i64 - 1;
        if d < floor.max(-1) {
            break;
        }
        let (rank_here, pivots) = if size == 0 {
            (0, Vec::new())
        } else {
            reduce(faces, size, &cleared, f)
        };
        let h = faces.by_size[size].len() - rank_here - rank_above;
        if h > 0 {
            out.insert(d, h);
            if first_only {
                break;
            }
        }
        rank_above = rank_here;
        cleared = pivots;
    }
    out
}

/// Reduced homology dimensions of the complex with the given faces, which must be
/// closed under taking subsets and include the empty face. Entry `k` is
/// `dim H̃_{k-1}`, for `k = 0..=|vertices|`.
pub fn reduced_homology_dims(faces: &[Vec<usize>], field: PrimeField) -> Result<Vec<usize>> {
    let mut labels: Vec<usize> = faces.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() > 64 {
        return Err(Error::cap("complex vertices", 64, labels.len()));
    }
    let local = |v: usize| labels.binary_search(&v).expect("label collected");
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); labels.len() + 1];
    for face in faces {
        let mut m = 0u64;
        for &v in face {
            let b = 1u64 << local(v);
            if m & b != 0 {
                return Err(Error::Precondition(format!(
                    "face {face:?} repeats a vertex"
                )));
            }
            m |= b;
        }
        by_size[face.len()].push(m);
    }
    for level in &mut by_size {
        level.sort_unstable();
        let before = level.len();
        level.dedup();
        if level.len() != before {
            return Err(Error::Precondition("duplicate face".into()));
        }
    }
    if by_size[0].is_empty() {
        return Err(Error::Precondition("the empty face is missing".into()));
    }
    for size in 1..by_size.len() {
        for &m in &by_size[size] {
            let mut rest = m;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if by_size[size - 1].binary_search(&(m & !b)).is_err() {
                    return Err(Error::Precondition(
                        "face family is not closed under subsets".into(),
                    ));
                }
            }
        }
    }
    while by_size.len() > 1 && by_size.last().is_some_and(|l| l.is_empty()) {
        by_size.pop();
    }
    let n = labels.len();
    let faces = Faces { by_size };
    let found = betti_top_down(&faces, field, -1, false);
    let mut dims = vec![0; n + 1];
    for (d, h) in found {
        dims[(d + 1) as usize] = h;
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_subsets(n: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect()
    }

    #[test]
    fn simplex_is_acyclic() {
        for n in 1..6 {
            let dims = reduced_homology_dims(&all_subsets(n), PrimeField::GF2).unwrap();
            assert!(dims.iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn two_points() {
        let faces = vec![vec![], vec![1], vec![2]];
        assert_eq!(
            reduced_homology_dims(&faces, PrimeField::GF3).unwrap(),
            vec![0, 1, 0]
        );
    }

    #[test]
    fn empty_complex() {
        assert_eq!(
            reduced_homology_dims(&[vec![]], PrimeField::GF2).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn hollow_square_and_sphere() {
        let square = vec![
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![1, 2],
            vec![2, 3],
            vec![3, 4],
            vec![1, 4],
        ];
        for f in [PrimeField::GF2, PrimeField::GF3, PrimeField::GF32003] {
            assert_eq!(
                reduced_homology_dims(&square, f).unwrap(),
                vec![0, 0, 1, 0, 0]
            );
        }
        // boundary of the tetrahedron
        let sphere: Vec<Vec<usize>> = all_subsets(4).into_iter().filter(|s| s.len() < 4).collect();
        assert_eq!(
            reduced_homology_dims(&sphere, PrimeField::GF2).unwrap(),
            vec![0, 0, 0, 1, 0]
        );
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let tris = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [3, 5, 6],
            [2, 4, 6],
        ];
        let mut faces: Vec<Vec<usize>> = vec![vec![]];
        for t in tris {
            for m in 1u32..8 {
                let f: Vec<usize> = (0..3).filter(|&i| m >> i & 1 == 1).map(|i| t[i]).collect();
                faces.push(f);
            }
        }
        faces.sort();
        faces.dedup();
        let gf2 = reduced_homology_dims(&faces, PrimeField::GF2).unwrap();
        let gf3 = reduced_homology_dims(&faces, PrimeField::GF3).unwrap();
        assert_eq!(gf2[2..4], [1, 1]);
        assert!(gf3.iter().all(|&d| d == 0));
    }

    #[test]
    fn rejects_non_complexes() {
        assert!(reduced_homology_dims(&[vec![1]], PrimeField::GF2).is_err());
        assert!(reduced_homology_dims(&[vec![], vec![1, 2]], PrimeField::GF2).is_err());
    }
}
