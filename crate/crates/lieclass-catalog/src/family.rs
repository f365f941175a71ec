//! Parametric series of solvable algebras defined in every dimension: the
//! pure scaling series, the Heisenberg-plus-center series, the single
//! maximal-Jordan-block series, the nilpotent and unipotent shift series,
//! the mixed diagonal/nilpotent series, and the scaled unipotent series.

use crate::CatalogError;
use lieclass_core::scalar::{qi, Q};
use lieclass_core::tensor::MAX_DIM;
use lieclass_core::StructureConstants;
use num::Zero;

fn err(family: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::Family {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn shell(name: &str, n: usize, min: usize) -> Result<StructureConstants, CatalogError> {
    if n < min {
        return Err(err(name, format!("needs dimension at least {min}, got {n}")));
    }
    if n > MAX_DIM {
        return Err(err(name, format!("dimension {n} exceeds the supported maximum {MAX_DIM}")));
    }
    Ok(StructureConstants::new(n)?)
}

/// e_n scales every other direction by 1.
pub fn ve(n: usize) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("ve", n, 2)?;
    for i in 1..n {
        sc.set(i, n, i, qi(1))?;
    }
    Ok(sc)
}

/// One Heisenberg bracket plus center: [e_{n-1}, e_n] = e_{n-2}.
pub fn heisenberg_center(n: usize) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("II", n, 3)?;
    sc.set(n - 1, n, n - 2, qi(1))?;
    Ok(sc)
}

/// e_n acts on the hyperplane by the identity plus one nilpotent step.
pub fn scaling_with_step(n: usize) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("IV", n, 3)?;
    for i in 1..=(n - 2) {
        sc.set(i, n, i, qi(1))?;
    }
    sc.set(n - 1, n, n - 2, qi(1))?;
    sc.set(n - 1, n, n - 1, qi(1))?;
    Ok(sc)
}

/// Nilpotent series: e_n acts on the hyperplane by shift blocks of size 2,
/// with one size-3 block when the hyperplane dimension is odd.
pub fn nilpotent_shift(n: usize) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("ii", n, 3)?;
    if n % 2 == 1 {
        for i in 1..=(n - 1) / 2 {
            sc.set(2 * i, n, 2 * i - 1, qi(1))?;
        }
    } else {
        sc.set(2, n, 1, qi(1))?;
        sc.set(3, n, 2, qi(1))?;
        for i in 1..=(n - 4) / 2 {
            sc.set(2 * i + 3, n, 2 * i + 2, qi(1))?;
        }
    }
    Ok(sc)
}

/// Unipotent series: e_n acts by eigenvalue-1 Jordan blocks of size 2, with
/// one size-3 block when the hyperplane dimension is odd.
pub fn unipotent_shift(n: usize) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("iv", n, 3)?;
    if n % 2 == 1 {
        for i in 1..=(n - 1) / 2 {
            sc.set(2 * i - 1, n, 2 * i - 1, qi(1))?;
            sc.set(2 * i, n, 2 * i - 1, qi(1))?;
            sc.set(2 * i, n, 2 * i, qi(1))?;
        }
    } else {
        sc.set(1, n, 1, qi(1))?;
        sc.set(2, n, 1, qi(1))?;
        sc.set(2, n, 2, qi(1))?;
        sc.set(3, n, 2, qi(1))?;
        sc.set(3, n, 3, qi(1))?;
        for i in 1..=(n - 4) / 2 {
            sc.set(2 * i + 2, n, 2 * i + 2, qi(1))?;
            sc.set(2 * i + 3, n, 2 * i + 2, qi(1))?;
            sc.set(2 * i + 3, n, 2 * i + 3, qi(1))?;
        }
    }
    Ok(sc)
}

/// Admissible `m` range for `mixed_scaling_shift` in dimension n.
pub fn mixed_range(n: usize) -> Option<(usize, usize)> {
    if n < 5 {
        return None;
    }
    let lo = 2 + (n - 4) / 3;
    let hi = n - 3;
    if lo <= hi {
        Some((lo, hi))
    } else {
        None
    }
}

/// e_n scales e_1..e_m by 1 and acts on the rest by nilpotent shift blocks.
pub fn mixed_scaling_shift(n: usize, m: usize) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("a_m", n, 5)?;
    let (lo, hi) = mixed_range(n).ok_or_else(|| err("a_m", "dimension too small"))?;
    if m < lo || m > hi {
        return Err(err(
            "a_m",
            format!("m = {m} outside the admissible range {lo}..={hi} for n = {n}"),
        ));
    }
    for i in 1..=m {
        sc.set(i, n, i, qi(1))?;
    }
    let r = n - m;
    if r % 2 == 1 {
        for i in 1..=(r - 1) / 2 {
            sc.set(2 * i + m, n, 2 * i + m - 1, qi(1))?;
        }
    } else {
        sc.set(m + 2, n, m + 1, qi(1))?;
        sc.set(m + 3, n, m + 2, qi(1))?;
        for i in 1..=(r - 4) / 2 {
            sc.set(2 * i + m + 3, n, 2 * i + m + 2, qi(1))?;
        }
    }
    Ok(sc)
}

/// e_n scales e_1 by `a` and acts on e_2..e_{n-1} by eigenvalue-1 Jordan
/// blocks (size 3 first when that range has odd dimension, size 2 otherwise).
pub fn scaled_unipotent(n: usize, a: &Q) -> Result<StructureConstants, CatalogError> {
    let mut sc = shell("A_n2", n, 4)?;
    if a.is_zero() {
        return Err(err("A_n2", "parameter a must be nonzero"));
    }
    sc.set(1, n, 1, a.clone())?;
    let d = n - 2;
    if d % 2 == 0 {
        for i in 1..=d / 2 {
            sc.set(2 * i, n, 2 * i, qi(1))?;
            sc.set(2 * i + 1, n, 2 * i, qi(1))?;
            sc.set(2 * i + 1, n, 2 * i + 1, qi(1))?;
        }
    } else {
        sc.set(2, n, 2, qi(1))?;
        sc.set(3, n, 2, qi(1))?;
        sc.set(3, n, 3, qi(1))?;
        sc.set(4, n, 3, qi(1))?;
        sc.set(4, n, 4, qi(1))?;
        for i in 1..=(d - 3) / 2 {
            sc.set(2 * i + 3, n, 2 * i + 3, qi(1))?;
            sc.set(2 * i + 4, n, 2 * i + 3, qi(1))?;
            sc.set(2 * i + 4, n, 2 * i + 4, qi(1))?;
        }
    }
    Ok(sc)
}

/// The abelian algebra of any dimension.
pub fn abelian(n: usize) -> Result<StructureConstants, CatalogError> {
    shell("nA_1", n, 1)
}

/// Dispatch by series name. `m` is used by `a_m`, `a` by `A_n2`.
pub fn family(
    name: &str,
    n: usize,
    m: Option<usize>,
    a: Option<&Q>,
) -> Result<StructureConstants, CatalogError> {
    match name {
        "ve" => ve(n),
        "II" | "II_n" => heisenberg_center(n),
        "IV" | "IV_n" => scaling_with_step(n),
        "ii" => nilpotent_shift(n),
        "iv" => unipotent_shift(n),
        "a_m" => mixed_scaling_shift(n, m.ok_or_else(|| err("a_m", "missing block count m"))?),
        "A_n2" => scaled_unipotent(n, a.ok_or_else(|| err("A_n2", "missing parameter a"))?),
        "nA_1" | "abelian" => abelian(n),
        other => Err(err(other, "unknown family name")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_core::scalar::qr;

    #[test]
    fn all_families_satisfy_the_axioms() {
        for n in 3..=9 {
            for name in ["ve", "II", "IV", "ii", "iv", "nA_1"] {
                let sc = family(name, n, None, None).unwrap();
                assert!(sc.is_valid(), "{name}({n})");
            }
            if let Some((lo, hi)) = mixed_range(n) {
                for m in lo..=hi {
                    assert!(mixed_scaling_shift(n, m).unwrap().is_valid());
                }
            }
            if n >= 4 {
                assert!(scaled_unipotent(n, &qr(-3, 2)).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn low_dimensional_members_match_catalog_classes() {
        let cat = crate::Catalog::bundled();
        let same = |sc: &lieclass_core::StructureConstants, id: &str| {
            let inst = cat.instantiate(id, &[]).unwrap();
            assert_eq!(sc, &inst.tensor, "{id}");
        };
        same(&ve(2).unwrap(), "A_2");
        same(&ve(3).unwrap(), "A_{3,3}");
        same(&heisenberg_center(3).unwrap(), "A_{3,1}");
        same(&scaling_with_step(3).unwrap(), "A_{3,2}");
        same(&nilpotent_shift(3).unwrap(), "A_{3,1}");
        same(&unipotent_shift(3).unwrap(), "A_{3,2}");
        same(&nilpotent_shift(4).unwrap(), "A_{4,1}");
        same(&unipotent_shift(4).unwrap(), "A_{4,4}");
        let a42 = cat.instantiate("A_{4,2}", &[qr(5, 3)]).unwrap();
        assert_eq!(scaled_unipotent(4, &qr(5, 3)).unwrap(), a42.tensor);
    }

    #[test]
    fn range_checks() {
        assert!(family("ve", 1, None, None).is_err());
        assert!(family("ii", 2, None, None).is_err());
        assert!(family("ve", 40, None, None).is_err());
        assert!(family("a_m", 7, Some(1), None).is_err());
        assert!(family("a_m", 7, None, None).is_err());
        assert!(family("A_n2", 5, None, Some(&qi(0))).is_err());
        assert!(family("nope", 4, None, None).is_err());
        assert_eq!(mixed_range(4), None);
        assert_eq!(mixed_range(5), Some((2, 2)));
        assert_eq!(mixed_range(9), Some((3, 6)));
    }
}
