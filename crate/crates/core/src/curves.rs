//! Invariant curves of the Bott fan: primitive relations, walls and their
//! relations, Schubert lines, the index-set recursion, and the Mori cone
//! basis.
//!
//! The primitive collections of the fan are exactly the pairs
//! P_i = {ρ_i^+, ρ_i^-}. The primitive relation of P_i writes
//! u_{ρ_i^+} + u_{ρ_i^-} as a positive combination of the rays of the cone
//! containing it, and the associated curve class r(P_i) pairs with the
//! invariant divisors by
//!
//! ```text
//! D_{ρ_i^±} · r(P_i) = 1,    D_ρ · r(P_i) = -c_ρ  for support rays,
//! ```
//!
//! all other pairings zero. The classes r(P_1) .. r(P_r) generate the Mori
//! cone and form a lattice basis of the curve classes.

use std::collections::HashSet;

use crate::arith;
use crate::bott_fan::{
    locate_point, ray_vector, BottMatrix, LatticePoint, RayId, Sign, SignVector,
};
use crate::error::{Error, Result};
use crate::EXHAUSTIVE_CAP;

/// The primitive relation at position i:
/// u_{ρ_i^+} + u_{ρ_i^-} = Σ c_ρ u_ρ with all c_ρ > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRelation {
    pub position: usize,
    /// Support rays with coefficients; every position here exceeds `position`.
    pub gamma_rays: Vec<(RayId, i64)>,
}

/// Computes the primitive relation of P_i by locating
/// u_{ρ_i^+} + u_{ρ_i^-} = -Σ_{j>i} β_ij e_j^+ in the fan.
pub fn primitive_relation(m: &BottMatrix, i: usize) -> Result<PrimitiveRelation> {
    check_position(m, i)?;
    let r = m.word_len();
    let mut coords = vec![0i64; r];
    for j in i + 1..=r {
        coords[j - 1] = arith::neg(m.beta(i, j))?;
    }
    let location = locate_point(m, &LatticePoint::new(coords))?;
    debug_assert!(location.support.iter().all(|(ray, _)| ray.position > i));
    Ok(PrimitiveRelation {
        position: i,
        gamma_rays: location.support,
    })
}

/// One value a_{k,j} of the index-set recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    /// Recursion level k.
    pub level: usize,
    /// Column index j.
    pub index: usize,
    /// a_{k,j}.
    pub value: i64,
}

/// The index set Ĩ_i = {i = j_1 < j_2 < … < j_m} together with the full
/// trace of intermediate a_{k,j} values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoriIndexSet {
    pub position: usize,
    pub indices: Vec<usize>,
    pub trace: Vec<TraceEntry>,
}

impl MoriIndexSet {
    pub fn a_value(&self, level: usize, index: usize) -> Option<i64> {
        self.trace
            .iter()
            .find(|e| e.level == level && e.index == index)
            .map(|e| e.value)
    }
}

/// Runs the index-set recursion starting at position i.
///
/// Level 1 is a_{1,j} = β_{ij}; j_2 is the least j with a_{1,j} > 0 and
/// a_{2,j} = β_{i j_2} β_{j_2 j} - β_{ij}. For k > 2, j_k is the least
/// j > j_{k-1} with a_{k-1,j} < 0, and a_{k,j} = a_{k-1,j} - a_{k-1,j_k}
/// β_{j_k j}. The sign flip between the j_2 rule and the later rules is
/// deliberate: level 1 carries the opposite sign of the locate residual,
/// the later levels carry the residual itself.
pub fn mori_index_set(m: &BottMatrix, i: usize) -> Result<MoriIndexSet> {
    check_position(m, i)?;
    let r = m.word_len();
    let mut indices = vec![i];
    let mut trace = Vec::new();

    let mut level_values: Vec<(usize, i64)> = Vec::new();
    for j in i + 1..=r {
        let value = m.beta(i, j);
        trace.push(TraceEntry {
            level: 1,
            index: j,
            value,
        });
        level_values.push((j, value));
    }

    let Some(&(j2, beta_ij2)) = level_values.iter().find(|&&(_, v)| v > 0) else {
        return Ok(MoriIndexSet {
            position: i,
            indices,
            trace,
        });
    };
    indices.push(j2);

    let mut prev: Vec<(usize, i64)> = Vec::new();
    for j in j2 + 1..=r {
        let value = arith::sub(arith::mul(beta_ij2, m.beta(j2, j))?, m.beta(i, j))?;
        trace.push(TraceEntry {
            level: 2,
            index: j,
            value,
        });
        prev.push((j, value));
    }

    let mut level = 2;
    while let Some(&(jk, a_jk)) = prev.iter().find(|&&(_, v)| v < 0) {
        indices.push(jk);
        level += 1;
        let mut next = Vec::new();
        for &(j, a_j) in prev.iter().filter(|&&(j, _)| j > jk) {
            let value = arith::add(arith::mul(arith::neg(a_jk)?, m.beta(jk, j))?, a_j)?;
            trace.push(TraceEntry {
                level,
                index: j,
                value,
            });
            next.push((j, value));
        }
        prev = next;
    }

    Ok(MoriIndexSet {
        position: i,
        indices,
        trace,
    })
}

/// A wall of the fan: the common facet of the two maximal cones that agree
/// everywhere except at `flip`, where one takes ρ^+ and the other ρ^-.
///
/// Stored in canonical form (the sign at `flip` is normalized to `+`), so
/// equality and hashing identify walls regardless of which adjacent cone
/// they were carved from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    flip: usize,
    signs: SignVector,
}

impl Wall {
    pub fn new(signs: SignVector, flip: usize) -> Self {
        assert!(
            (1..=signs.len()).contains(&flip),
            "flip position {flip} out of range"
        );
        Wall {
            flip,
            signs: signs.with_sign(flip, Sign::Plus),
        }
    }

    /// The wall of the Schubert line L_j: all-plus signs away from j.
    pub fn schubert(r: usize, j: usize) -> Self {
        Wall::new(SignVector::all_plus(r), j)
    }

    pub fn flip_position(&self) -> usize {
        self.flip
    }

    /// Signs of the wall rays; the entry at the flip position is not a wall
    /// ray and reads `+` by normalization.
    pub fn signs(&self) -> SignVector {
        self.signs
    }

    /// The r-1 rays spanning the wall, ordered by position.
    pub fn rays(&self) -> Vec<RayId> {
        (1..=self.signs.len())
            .filter(|&l| l != self.flip)
            .map(|l| self.signs.ray(l))
            .collect()
    }

    /// The two rays completing the wall to its adjacent maximal cones.
    pub fn completing(&self) -> (RayId, RayId) {
        (RayId::plus(self.flip), RayId::minus(self.flip))
    }

    /// The two adjacent maximal cones.
    pub fn adjacent_cones(&self) -> (SignVector, SignVector) {
        (
            self.signs.with_sign(self.flip, Sign::Plus),
            self.signs.with_sign(self.flip, Sign::Minus),
        )
    }
}

/// The numerical class of an invariant curve, stored as the intersection
/// functional D_ρ ↦ D_ρ · C over all 2r rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    r: usize,
    plus: Vec<i64>,
    minus: Vec<i64>,
}

impl CurveClass {
    pub fn zero(r: usize) -> Self {
        CurveClass {
            r,
            plus: vec![0; r],
            minus: vec![0; r],
        }
    }

    pub fn word_len(&self) -> usize {
        self.r
    }

    pub fn value(&self, ray: RayId) -> i64 {
        assert!((1..=self.r).contains(&ray.position));
        match ray.sign {
            Sign::Plus => self.plus[ray.position - 1],
            Sign::Minus => self.minus[ray.position - 1],
        }
    }

    fn set(&mut self, ray: RayId, value: i64) {
        assert!((1..=self.r).contains(&ray.position));
        match ray.sign {
            Sign::Plus => self.plus[ray.position - 1] = value,
            Sign::Minus => self.minus[ray.position - 1] = value,
        }
    }

    /// Nonzero entries, plus rays before minus rays at each position.
    pub fn nonzero(&self) -> Vec<(RayId, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.r {
            for ray in [RayId::plus(i), RayId::minus(i)] {
                let v = self.value(ray);
                if v != 0 {
                    out.push((ray, v));
                }
            }
        }
        out
    }

    /// (-K) · C = Σ_ρ D_ρ · C, the anticanonical degree of the curve.
    pub fn anticanonical_degree(&self) -> Result<i64> {
        arith::sum(self.plus.iter().chain(self.minus.iter()).copied())
    }

    /// Checks the defining relation Σ_ρ (D_ρ·C) u_ρ = 0.
    pub fn is_lattice_relation(&self, m: &BottMatrix) -> Result<bool> {
        let r = self.r;
        let mut acc = vec![0i64; r];
        for i in 1..=r {
            for ray in [RayId::plus(i), RayId::minus(i)] {
                let c = self.value(ray);
                if c == 0 {
                    continue;
                }
                let u = ray_vector(m, ray);
                for (k, &coord) in u.coords().iter().enumerate() {
                    acc[k] = arith::add_mul(acc[k], c, coord)?;
                }
            }
        }
        Ok(acc.iter().all(|&v| v == 0))
    }
}

/// Solves the wall relation u_{ρ^+} + u_{ρ^-} + Σ b_l u_l = 0 exactly and
/// returns the intersection functional of V(τ): both completing rays pair
/// to 1, each wall ray to its b_l, everything else to 0.
///
/// The wall-ray matrix is triangular with ±1 pivots, so one forward sweep
/// solves the system in integers. A nonzero residual at the flip position
/// (or a pivot other than ±1) would mean the wall is degenerate, which a
/// smooth complete fan cannot produce; it is reported as an internal error.
pub fn wall_relation(m: &BottMatrix, wall: &Wall) -> Result<CurveClass> {
    let r = m.word_len();
    if wall.signs().len() != r {
        return Err(Error::DimensionMismatch {
            len: wall.signs().len(),
            expected: r,
        });
    }
    let flip = wall.flip_position();

    // Target: Σ b_l u_l = -(u_{flip+} + u_{flip-}) = Σ_{k>flip} β_{flip,k} e_k.
    let mut residual = vec![0i64; r];
    for k in flip + 1..=r {
        residual[k - 1] = m.beta(flip, k);
    }

    let mut class = CurveClass::zero(r);
    let (a, b) = wall.completing();
    class.set(a, 1);
    class.set(b, 1);

    for l in 1..=r {
        if l == flip {
            if residual[l - 1] != 0 {
                return Err(Error::Inconsistency(format!(
                    "degenerate wall at flip position {flip}: residual {}",
                    residual[l - 1]
                )));
            }
            continue;
        }
        let t = residual[l - 1];
        if t == 0 {
            continue;
        }
        let ray = wall.signs().ray(l);
        let coeff = match ray.sign {
            Sign::Plus => t,
            Sign::Minus => {
                let c = arith::neg(t)?;
                for j in l + 1..=r {
                    // residual -= c * e_l^-, i.e. each later coordinate
                    // gains c * β_lj.
                    residual[j - 1] = arith::add_mul(residual[j - 1], c, m.beta(l, j))?;
                }
                c
            }
        };
        residual[l - 1] = 0;
        class.set(ray, coeff);
    }
    debug_assert!(residual.iter().all(|&t| t == 0));
    Ok(class)
}

/// The Schubert line L_j: the invariant curve over the Schubert point in
/// the j-th ℙ¹-fibration, realized as the wall between the all-plus cone
/// and its flip at j.
pub fn schubert_line(m: &BottMatrix, j: usize) -> Result<(Wall, CurveClass)> {
    check_position(m, j)?;
    let wall = Wall::schubert(m.word_len(), j);
    let class = wall_relation(m, &wall)?;
    Ok((wall, class))
}

/// The curve class r(P_i) read off the primitive relation.
pub fn relation_class(m: &BottMatrix, relation: &PrimitiveRelation) -> Result<CurveClass> {
    let mut class = CurveClass::zero(m.word_len());
    class.set(RayId::plus(relation.position), 1);
    class.set(RayId::minus(relation.position), 1);
    for &(ray, c) in &relation.gamma_rays {
        class.set(ray, arith::neg(c)?);
    }
    Ok(class)
}

/// The classes r(P_1) .. r(P_r): extremal rays of the Mori cone and a
/// lattice basis of the curve classes.
pub fn mori_cone_basis(m: &BottMatrix) -> Result<Vec<CurveClass>> {
    (1..=m.word_len())
        .map(|i| relation_class(m, &primitive_relation(m, i)?))
        .collect()
}

/// The wall realizing r(P_i) as an invariant curve: minus signs exactly on
/// Ĩ_i \ {i}, flip at i.
pub fn index_set_wall(m: &BottMatrix, index_set: &MoriIndexSet) -> Wall {
    let mut signs = SignVector::all_plus(m.word_len());
    for &j in &index_set.indices {
        if j != index_set.position {
            signs = signs.with_sign(j, Sign::Minus);
        }
    }
    Wall::new(signs, index_set.position)
}

/// Coordinates of [V(τ)] in the basis {r(P_i)}.
///
/// The pairing matrix (D_{ρ_k^+} · r(P_j)) is lower triangular with unit
/// diagonal, so the coordinates are integers; they are nonnegative because
/// the basis generates the Mori cone.
pub fn curve_in_basis(m: &BottMatrix, wall: &Wall) -> Result<Vec<i64>> {
    let class = wall_relation(m, wall)?;
    let basis = mori_cone_basis(m)?;
    curve_class_in_basis(&class, &basis)
}

pub(crate) fn curve_class_in_basis(class: &CurveClass, basis: &[CurveClass]) -> Result<Vec<i64>> {
    let r = basis.len();
    let mut x = vec![0i64; r];
    for k in 1..=r {
        let mut acc = class.value(RayId::plus(k));
        for j in 1..k {
            acc = arith::sub(
                acc,
                arith::mul(basis[j - 1].value(RayId::plus(k)), x[j - 1])?,
            )?;
        }
        // Diagonal pairing D_{ρ_k^+} · r(P_k) = 1.
        x[k - 1] = acc;
    }
    if let Some(position) = x.iter().position(|&c| c < 0) {
        return Err(Error::Inconsistency(format!(
            "curve class leaves the Mori cone: coordinate {} is {}",
            position + 1,
            x[position]
        )));
    }
    Ok(x)
}

/// All walls of the fan, by visiting every maximal cone, dropping each ray
/// once and deduplicating on the canonical form. Exhaustive, so gated by
/// [`EXHAUSTIVE_CAP`].
pub fn enumerate_walls(m: &BottMatrix) -> Result<Vec<Wall>> {
    let r = m.word_len();
    if r > EXHAUSTIVE_CAP {
        return Err(Error::ExhaustiveCapExceeded {
            len: r,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let mut seen = HashSet::new();
    for cone in SignVector::enumerate(r) {
        for flip in 1..=r {
            seen.insert(Wall::new(cone, flip));
        }
    }
    let mut walls: Vec<Wall> = seen.into_iter().collect();
    walls.sort();
    Ok(walls)
}

fn check_position(m: &BottMatrix, i: usize) -> Result<()> {
    if (1..=m.word_len()).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: i,
            bound: m.word_len(),
        })
    }
}
