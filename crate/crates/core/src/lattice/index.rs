use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{solve_integer_system, smith_normal_form, IntMatrix, LatticeError};

/// Index of a sublattice; rank-deficient sublattices have infinite index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeIndex {
    Finite(#[serde(with = "crate::serde_dec")] BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(n) => Some(n),
            LatticeIndex::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LatticeIndex::Finite(_))
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// Coordinates of each column of `vectors` in the basis given by the columns
/// of `basis`. Column `j` of the result holds the coefficients of column `j`.
pub fn express_in_basis(vectors: &IntMatrix, basis: &IntMatrix) -> Result<IntMatrix, LatticeError> {
    if vectors.rows() != basis.rows() {
        return Err(LatticeError::DimensionMismatch(format!(
            "vectors live in Z^{} but basis in Z^{}",
            vectors.rows(),
            basis.rows()
        )));
    }
    if smith_normal_form(basis)?.rank() < basis.cols() {
        return Err(LatticeError::NotABasis);
    }
    let mut coords = Vec::with_capacity(vectors.cols());
    for j in 0..vectors.cols() {
        match solve_integer_system(basis, &vectors.column(j))? {
            Some(c) => coords.push(c),
            None => return Err(LatticeError::Membership { column: j }),
        }
    }
    if coords.is_empty() {
        return Ok(IntMatrix::zeros(basis.cols(), 0));
    }
    IntMatrix::from_columns(&coords)
}

/// `[ambient : sub]` for lattices given by column bases.
pub fn lattice_index(sub: &IntMatrix, ambient: &IntMatrix) -> Result<LatticeIndex, LatticeError> {
    if sub.is_empty() || ambient.is_empty() {
        return Err(LatticeError::Empty);
    }
    let coords = express_in_basis(sub, ambient)?;
    let smith = smith_normal_form(&coords)?;
    if smith.rank() < ambient.cols() {
        return Ok(LatticeIndex::Infinite);
    }
    Ok(LatticeIndex::Finite(smith.diagonal.iter().product()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    /// Counts residue classes of Z² modulo span{u, v} by brute force: two
    /// points share a coset iff adj(M)·(p − q) ≡ 0 mod det, so the adjugate
    /// image mod |det| labels cosets. The box contains det·Z² representatives.
    fn coset_count(u: (i64, i64), v: (i64, i64)) -> u64 {
        let det = (u.0 * v.1 - u.1 * v.0).abs();
        assert!(det != 0);
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..det {
            for y in 0..det {
                let a = (x * v.1 - y * v.0).rem_euclid(det);
                let b = (u.0 * y - u.1 * x).rem_euclid(det);
                seen.insert((a, b));
            }
        }
        seen.len() as u64
    }

    fn cols(u: (i64, i64), v: (i64, i64)) -> IntMatrix {
        IntMatrix::from_rows(&[&[u.0, v.0], &[u.1, v.1]])
    }

    #[test]
    fn identity_index_one() {
        let e = IntMatrix::identity(2);
        assert_eq!(lattice_index(&e, &e).unwrap(), LatticeIndex::Finite(1.into()));
    }

    #[test]
    fn doubled_standard_basis() {
        let sub = IntMatrix::from_rows(&[&[2i64, 0], &[0, 2]]);
        assert_eq!(
            lattice_index(&sub, &IntMatrix::identity(2)).unwrap(),
            LatticeIndex::Finite(4.into())
        );
    }

    #[test]
    fn cartan_sublattice_has_index_three() {
        assert_eq!(coset_count((2, -1), (-1, 2)), 3);
        assert_eq!(
            lattice_index(&cols((2, -1), (-1, 2)), &IntMatrix::identity(2)).unwrap(),
            LatticeIndex::Finite(3.into())
        );
    }

    #[test]
    fn rank_drop_is_infinite() {
        let sub = cols((2, 0), (0, 0));
        assert_eq!(
            lattice_index(&sub, &IntMatrix::identity(2)).unwrap(),
            LatticeIndex::Infinite
        );
    }

    #[test]
    fn non_member_is_rejected() {
        let ambient = cols((2, 0), (0, 2));
        let sub = cols((1, 0), (0, 2));
        assert_eq!(
            lattice_index(&sub, &ambient),
            Err(LatticeError::Membership { column: 0 })
        );
    }

    #[test]
    fn dependent_ambient_is_rejected() {
        let ambient = cols((1, 1), (2, 2));
        assert_eq!(
            lattice_index(&cols((1, 1), (2, 2)), &ambient),
            Err(LatticeError::NotABasis)
        );
    }

    #[test]
    fn relative_index_in_nonstandard_ambient() {
        let ambient = cols((4, 2), (0, 2));
        let sub = cols((8, 2), (-4, 2));
        assert_eq!(
            lattice_index(&sub, &ambient).unwrap(),
            LatticeIndex::Finite(3.into())
        );
    }

    proptest! {
        #[test]
        fn index_matches_determinant_and_cosets(
            a in -6i64..=6, b in -6i64..=6, c in -6i64..=6, d in -6i64..=6
        ) {
            let det = a * d - b * c;
            prop_assume!(det != 0);
            let m = IntMatrix::from_rows(&[&[a, b], &[c, d]]);
            let idx = lattice_index(&m, &IntMatrix::identity(2)).unwrap();
            prop_assert_eq!(idx.clone(), LatticeIndex::Finite(BigInt::from(det.abs())));
            let smith = smith_normal_form(&m).unwrap();
            prop_assert_eq!(smith.diagonal.iter().product::<BigInt>(), m.determinant().unwrap().abs());
            prop_assert_eq!(coset_count((a, c), (b, d)), det.unsigned_abs());
        }
    }
}
