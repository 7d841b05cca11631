//! Brute-force oracles for the fast paths.
//!
//! Everything here recomputes a result by a structurally different route:
//! point location by searching all 2^r maximal cones, divisor-class
//! coefficients by eliminating against the dual-basis relations read off the
//! ray vectors, smoothness by generic determinants. The oracles are
//! exhaustive and therefore capped at [`EXHAUSTIVE_CAP`] positions; the fast
//! paths have no such cap.

use crate::arith;
use crate::bott_fan::{
    cone_determinant, locate_point, ray_vector, BottMatrix, LatticePoint, Location, RayId,
    SignVector,
};
use crate::classify::{d_values, h_table, intersection_number, is_mori_ray, ToricDivisor};
use crate::curves::{
    enumerate_walls, index_set_wall, mori_cone_basis, mori_index_set, primitive_relation,
    relation_class, schubert_line, wall_relation, Wall,
};
use crate::error::{Error, Result};
use crate::EXHAUSTIVE_CAP;

fn check_cap(m: &BottMatrix) -> Result<()> {
    if m.word_len() > EXHAUSTIVE_CAP {
        return Err(Error::ExhaustiveCapExceeded {
            len: m.word_len(),
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(())
}

/// Expresses `v` in the basis of one maximal cone by forward substitution.
///
/// The coefficients may be negative; the caller decides what to do with the
/// signs. A pivot other than ±1 would force rational coefficients and is
/// rejected as a smoothness violation.
pub fn solve_in_cone(m: &BottMatrix, cone: &SignVector, v: &LatticePoint) -> Result<Vec<i64>> {
    let r = m.word_len();
    if v.coords().len() != r || cone.len() != r {
        return Err(Error::DimensionMismatch {
            len: v.coords().len(),
            expected: r,
        });
    }
    let columns: Vec<Vec<i64>> = (1..=r)
        .map(|l| ray_vector(m, cone.ray(l)).coords().to_vec())
        .collect();
    let mut residual = v.coords().to_vec();
    let mut coeffs = vec![0i64; r];
    for l in 0..r {
        let pivot = columns[l][l];
        if pivot.abs() != 1 {
            return Err(Error::Inconsistency(format!(
                "smoothness violation: pivot {pivot} at position {}",
                l + 1
            )));
        }
        let c = if pivot == 1 {
            residual[l]
        } else {
            arith::neg(residual[l])?
        };
        if c != 0 {
            for j in l..r {
                residual[j] = arith::sub(residual[j], arith::mul(c, columns[l][j])?)?;
            }
        }
        coeffs[l] = c;
    }
    if residual.iter().any(|&t| t != 0) {
        return Err(Error::Inconsistency(
            "cone basis failed to span the lattice".to_string(),
        ));
    }
    Ok(coeffs)
}

/// All maximal cones containing `v`, with the coefficients of `v` in each.
pub fn containing_cones(m: &BottMatrix, v: &LatticePoint) -> Result<Vec<(SignVector, Vec<i64>)>> {
    check_cap(m)?;
    let mut out = Vec::new();
    for cone in SignVector::enumerate(m.word_len()) {
        let coeffs = solve_in_cone(m, &cone, v)?;
        if coeffs.iter().all(|&c| c >= 0) {
            out.push((cone, coeffs));
        }
    }
    Ok(out)
}

/// Point location by exhaustive cone search: finds every containing cone
/// and checks that they all agree on the strictly positive sub-support.
pub fn locate_point_exhaustive(m: &BottMatrix, v: &LatticePoint) -> Result<Location> {
    let cones = containing_cones(m, v)?;
    let mut found: Option<Vec<(RayId, i64)>> = None;
    for (cone, coeffs) in &cones {
        let support: Vec<(RayId, i64)> = (1..=m.word_len())
            .filter(|&l| coeffs[l - 1] > 0)
            .map(|l| (cone.ray(l), coeffs[l - 1]))
            .collect();
        match &found {
            None => found = Some(support),
            Some(prev) if *prev != support => {
                return Err(Error::Inconsistency(format!(
                    "ambiguous location for {:?}: {:?} vs {:?}",
                    v.coords(),
                    prev,
                    support
                )))
            }
            Some(_) => {}
        }
    }
    found.map(|support| Location { support }).ok_or_else(|| {
        Error::Inconsistency(format!(
            "point {:?} not contained in any maximal cone of a complete fan",
            v.coords()
        ))
    })
}

/// Checks |det| = 1 on all 2^r maximal cones via generic determinants.
pub fn smoothness_exhaustive(m: &BottMatrix) -> Result<bool> {
    check_cap(m)?;
    for cone in SignVector::enumerate(m.word_len()) {
        if cone_determinant(m, &cone)?.abs() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independent route to the h-table: build the relations
/// D_{ρ_k^+} = Σ_l L[k][l] D_{ρ_l^-} directly from the ray coordinates
/// (L[k][l] = -⟨e_k^*, u_{ρ_l^-}⟩) and invert L by forward substitution.
pub fn h_table_dual_basis(m: &BottMatrix) -> Result<Vec<Vec<i64>>> {
    let r = m.word_len();
    let mut lower = vec![vec![0i64; r]; r];
    for l in 1..=r {
        let u = ray_vector(m, RayId::minus(l));
        for k in 1..=r {
            lower[k - 1][l - 1] = arith::neg(u.coords()[k - 1])?;
        }
    }
    // Solve L X = I column by column; h_j^i is X[j][i].
    let mut table = vec![vec![0i64; r]; r];
    for i in 0..r {
        let mut x = vec![0i64; r];
        for k in 0..r {
            let pivot = lower[k][k];
            if pivot != 1 {
                return Err(Error::Inconsistency(format!(
                    "dual-basis relation has pivot {pivot} at position {}",
                    k + 1
                )));
            }
            let mut acc = i64::from(k == i);
            for l in 0..k {
                acc = arith::sub(acc, arith::mul(lower[k][l], x[l])?)?;
            }
            x[k] = acc;
        }
        for j in 0..r {
            table[j][i] = x[j];
        }
    }
    Ok(table)
}

/// Cross-checks every fast path on one Bott matrix against its brute-force
/// counterpart. Any disagreement is an internal error — the caller treats
/// it as a bug, never as data.
pub fn verify_matrix(m: &BottMatrix) -> Result<()> {
    check_cap(m)?;
    let r = m.word_len();

    if !smoothness_exhaustive(m)? {
        return Err(Error::Inconsistency(
            "a maximal cone has determinant != ±1".to_string(),
        ));
    }

    let basis = mori_cone_basis(m)?;
    let minus_k = ToricDivisor::anticanonical(r);
    let d = d_values(m, &minus_k)?;

    for i in 1..=r {
        let relation = primitive_relation(m, i)?;

        // Locate agreement on the primitive-relation point.
        let mut coords = vec![0i64; r];
        for j in i + 1..=r {
            coords[j - 1] = arith::neg(m.beta(i, j))?;
        }
        let point = LatticePoint::new(coords);
        let fast = locate_point(m, &point)?;
        let slow = locate_point_exhaustive(m, &point)?;
        if fast != slow {
            return Err(Error::Inconsistency(format!(
                "locate mismatch at position {i}: {fast:?} vs {slow:?}"
            )));
        }

        // Class of r(P_i) along both routes.
        let direct = relation_class(m, &relation)?;
        let set = mori_index_set(m, i)?;
        let via_wall = wall_relation(m, &index_set_wall(m, &set))?;
        if direct != via_wall {
            return Err(Error::Inconsistency(format!(
                "r(P_{i}) differs between primitive relation and index-set wall"
            )));
        }
        if !direct.is_lattice_relation(m)? {
            return Err(Error::Inconsistency(format!(
                "r(P_{i}) is not a lattice relation"
            )));
        }

        // Degree identity -K·r(P_i) = 2 - Σ c_ρ = d_i.
        let degree = direct.anticanonical_degree()?;
        let coefficient_sum = arith::sum(relation.gamma_rays.iter().map(|&(_, c)| c))?;
        if degree != arith::sub(2, coefficient_sum)? || degree != d[i - 1] {
            return Err(Error::Inconsistency(format!(
                "degree identity fails at position {i}: {degree} vs 2-{coefficient_sum} vs d={}",
                d[i - 1]
            )));
        }

        // Mori-ray criterion ⟺ K·r(P_i) < 0.
        if is_mori_ray(m, i)? != (degree > 0) {
            return Err(Error::Inconsistency(format!(
                "Mori-ray criterion disagrees with the degree sign at position {i}"
            )));
        }
    }

    // h-table against the dual-basis elimination.
    if h_table(m)? != h_table_dual_basis(m)? {
        return Err(Error::Inconsistency(
            "h-table differs from the dual-basis oracle".to_string(),
        ));
    }

    // K·L_j from the wall relation against the closed form -2 - Σ_{k>j} β_jk.
    for j in 1..=r {
        let (_, class) = schubert_line(m, j)?;
        let closed = arith::add(2, arith::sum((j + 1..=r).map(|k| m.beta(j, k)))?)?;
        if class.anticanonical_degree()? != closed {
            return Err(Error::Inconsistency(format!(
                "K·L_{j} disagrees with the closed form"
            )));
        }
    }

    // Wall sweep: lattice relations, Mori-cone membership, and the
    // positivity characterizations of ample and nef.
    let walls = enumerate_walls(m)?;
    let mut all_positive = true;
    let mut all_nonnegative = true;
    for wall in &walls {
        let class = wall_relation(m, wall)?;
        if !class.is_lattice_relation(m)? {
            return Err(Error::Inconsistency(format!(
                "wall {wall:?} violates the lattice relation"
            )));
        }
        let coords = crate::curves::curve_class_in_basis(&class, &basis)?;
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::Inconsistency(format!(
                "wall {wall:?} leaves the Mori cone"
            )));
        }
        let degree = intersection_number(&minus_k, &class)?;
        all_positive &= degree > 0;
        all_nonnegative &= degree >= 0;
    }
    if all_positive != d.iter().all(|&v| v > 0) {
        return Err(Error::Inconsistency(
            "ample(-K) by d-values disagrees with wall positivity".to_string(),
        ));
    }
    if all_nonnegative != d.iter().all(|&v| v >= 0) {
        return Err(Error::Inconsistency(
            "nef(-K) by d-values disagrees with wall nonnegativity".to_string(),
        ));
    }

    Ok(())
}

/// Verifies a single wall class against its defining relation and the
/// Mori-cone basis. Used by the oracle mode of wall queries.
pub fn verify_wall(m: &BottMatrix, wall: &Wall) -> Result<()> {
    let class = wall_relation(m, wall)?;
    if !class.is_lattice_relation(m)? {
        return Err(Error::Inconsistency(format!(
            "wall {wall:?} violates the lattice relation"
        )));
    }
    let basis = mori_cone_basis(m)?;
    crate::curves::curve_class_in_basis(&class, &basis)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{Family, GeneralizedCartanMatrix, Word};

    fn matrix_for(family: Family, rank: usize, letters: &[usize]) -> BottMatrix {
        let gcm = GeneralizedCartanMatrix::builtin(family, rank).unwrap();
        let word = Word::new(letters.to_vec(), rank).unwrap();
        BottMatrix::from_word(&gcm, &word).unwrap()
    }

    #[test]
    fn exhaustive_locate_agrees_on_fixtures() {
        let m = matrix_for(Family::A, 3, &[1, 2, 1]);
        for coords in [
            vec![0, 0, 0],
            vec![1, 2, 3],
            vec![-1, 1, -2],
            vec![0, 1, -2],
            vec![-5, 0, 4],
        ] {
            let v = LatticePoint::new(coords);
            assert_eq!(
                locate_point(&m, &v).unwrap(),
                locate_point_exhaustive(&m, &v).unwrap()
            );
        }
    }

    #[test]
    fn dual_basis_oracle_matches_recursion() {
        for m in [
            matrix_for(Family::A, 3, &[1, 2, 1]),
            matrix_for(Family::B, 2, &[2, 1, 2, 1]),
            matrix_for(Family::G2, 2, &[1, 2, 1, 2]),
            BottMatrix::product_of_lines(4),
        ] {
            assert_eq!(h_table(&m).unwrap(), h_table_dual_basis(&m).unwrap());
        }
    }

    #[test]
    fn verify_matrix_passes_on_fixtures() {
        verify_matrix(&matrix_for(Family::A, 4, &[2, 1, 3, 1, 2, 1, 2])).unwrap();
        verify_matrix(&matrix_for(Family::A, 3, &[1, 1])).unwrap();
        verify_matrix(&matrix_for(Family::B, 2, &[2, 1])).unwrap();
        verify_matrix(&matrix_for(Family::G2, 2, &[1, 2])).unwrap();
        verify_matrix(&BottMatrix::product_of_lines(3)).unwrap();
    }

    #[test]
    fn cap_is_enforced() {
        let m = BottMatrix::product_of_lines(EXHAUSTIVE_CAP + 1);
        assert!(matches!(
            smoothness_exhaustive(&m),
            Err(Error::ExhaustiveCapExceeded { .. })
        ));
    }
}
