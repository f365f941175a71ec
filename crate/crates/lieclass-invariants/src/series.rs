//! Descending central and derived series, nilpotency and solvability.

use crate::subspace::Subspace;
use lieclass_core::StructureConstants;

/// Dimension profiles of the two canonical ideal series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesProfile {
    /// Dims of A ⊇ [A,A] ⊇ [A,[A,A]] ⊇ … until stabilization.
    pub central_dims: Vec<usize>,
    /// Dims of A ⊇ [A,A] ⊇ [[A,A],[A,A]] ⊇ … until stabilization.
    pub derived_dims: Vec<usize>,
    pub nilpotent: bool,
    /// Least p with the central series vanishing at step p.
    pub nilpotency_degree: Option<usize>,
    pub solvable: bool,
    /// Least q with the derived series vanishing at step q.
    pub solvability_degree: Option<usize>,
}

fn series_dims(
    sc: &StructureConstants,
    step: impl Fn(&StructureConstants, &Subspace) -> Subspace,
) -> Vec<usize> {
    let mut dims = vec![sc.dim()];
    let mut current = Subspace::full(sc.dim());
    loop {
        let next = step(sc, &current);
        let d = next.dim();
        let last = *dims.last().unwrap();
        if d == last {
            // Stabilized; show the repeat unless already terminated at zero.
            if d != 0 {
                dims.push(d);
            }
            break;
        }
        dims.push(d);
        current = next;
        if d == 0 {
            break;
        }
    }
    dims
}

pub fn series_profile(sc: &StructureConstants) -> SeriesProfile {
    let full = Subspace::full(sc.dim());
    let central_dims = series_dims(sc, |sc, c| Subspace::bracket_span(sc, &full, c));
    let derived_dims = series_dims(sc, |sc, c| Subspace::bracket_span(sc, c, c));
    let nilpotent = central_dims.last() == Some(&0) || sc.dim() == 0;
    let solvable = derived_dims.last() == Some(&0) || sc.dim() == 0;
    SeriesProfile {
        nilpotency_degree: nilpotent.then(|| central_dims.len().saturating_sub(1)),
        solvability_degree: solvable.then(|| derived_dims.len().saturating_sub(1)),
        central_dims,
        derived_dims,
        nilpotent,
        solvable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_core::scalar::qi;

    fn mk(dim: usize, brs: &[(usize, usize, usize, i64)]) -> StructureConstants {
        let mut t = StructureConstants::new(dim).unwrap();
        for &(i, j, k, c) in brs {
            t.set(i, j, k, qi(c)).unwrap();
        }
        t
    }

    #[test]
    fn heisenberg_is_nilpotent_of_degree_two() {
        let p = series_profile(&mk(3, &[(2, 3, 1, 1)]));
        assert_eq!(p.central_dims, vec![3, 1, 0]);
        assert!(p.nilpotent);
        assert_eq!(p.nilpotency_degree, Some(2));
        assert!(p.solvable);
        assert_eq!(p.solvability_degree, Some(2));
    }

    #[test]
    fn abelian_series_terminate_immediately() {
        let p = series_profile(&mk(4, &[]));
        assert_eq!(p.central_dims, vec![4, 0]);
        assert_eq!(p.derived_dims, vec![4, 0]);
        assert!(p.nilpotent && p.solvable);
        assert_eq!(p.nilpotency_degree, Some(1));
    }

    #[test]
    fn su2_is_neither_solvable_nor_nilpotent() {
        let p = series_profile(&mk(3, &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)]));
        assert_eq!(p.derived_dims, vec![3, 3]);
        assert!(!p.solvable);
        assert!(!p.nilpotent);
        assert_eq!(p.nilpotency_degree, None);
    }

    #[test]
    fn scaling_algebra_solvable_not_nilpotent() {
        // [e1,e3]=e1, [e2,e3]=e2.
        let p = series_profile(&mk(3, &[(1, 3, 1, 1), (2, 3, 2, 1)]));
        assert!(p.solvable);
        assert!(!p.nilpotent);
        assert_eq!(p.central_dims, vec![3, 2, 2]);
        assert_eq!(p.derived_dims, vec![3, 2, 0]);
    }
}
