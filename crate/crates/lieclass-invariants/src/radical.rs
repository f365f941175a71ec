//! Maximal solvable ideal, computed as the orthogonal complement of the
//! derived subspace with respect to the Killing form.

use crate::killing::killing_matrix;
use crate::series::series_profile;
use crate::subspace::{derived_subspace, Subspace};
use lieclass_core::matrix::Mat;
use lieclass_core::StructureConstants;

pub fn radical(sc: &StructureConstants) -> Subspace {
    let n = sc.dim();
    let derived = derived_subspace(sc);
    if derived.is_zero() {
        return Subspace::full(n);
    }
    let k = killing_matrix(sc);
    // x in the radical iff K(x, d) = 0 for every derived generator d.
    let rows = derived.dim();
    let m = Mat::from_fn(rows, n, |r, c| {
        let d = &derived.basis()[r];
        (0..n).fold(lieclass_core::scalar::qi(0), |acc, i| {
            acc + &k[(c, i)] * &d[i]
        })
    });
    let rad = Subspace::span(n, &m.kernel());
    debug_assert!(rad.is_ideal(sc));
    debug_assert!(rad
        .restricted(sc)
        .map(|t| series_profile(&t).solvable)
        .unwrap_or(true));
    rad
}
