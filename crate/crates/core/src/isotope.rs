//! Isotopes `J_a` for `det(a) ≠ 0`, built two ways.
//!
//! * Springer's construction: `X ∘_a Y = det(a)⁻⁴ Φ_a(X, Y)` with
//!   `⟨X, Y⟩_a = det(a)⁻² Q_a(X, Y)`.
//! * Through the degree-6 trilinear form
//!   `T_a(X,Y,Z) = 27 D(a,a,X) D(a,a,Y) D(a,a,Z) − 24 D(a,a,a) D(a×X, a×Y, a×Z)`:
//!   `X ∘_a Y` is the unique `U` with `Q_a(U, Z) = det(a)⁻¹ T_a(X, Y, Z)`
//!   for all `Z`, found by an exact 27×27 solve against the Gram matrix
//!   of `Q_a`.

use num_traits::Zero;

use crate::albert::{cross, det_j, pair, trilinear_d, AlbertElem, JBasis, DIM};
use crate::error::{AlbertError, Result};
use crate::linalg::{self, ExactSolver, Matrix};
use crate::rat::{self, int, Rat};
use crate::smap::StructureTensor;

/// `T_a(X, Y, Z)`, straight from the defining formula.
pub fn t_form(a: &AlbertElem, x: &AlbertElem, y: &AlbertElem, z: &AlbertElem) -> Rat {
    let first = int(27) * trilinear_d(a, a, x) * trilinear_d(a, a, y) * trilinear_d(a, a, z);
    let (ax, ay, az) = (cross(a, x), cross(a, y), cross(a, z));
    first - int(24) * trilinear_d(a, a, a) * trilinear_d(&ax, &ay, &az)
}

/// `T_e(X, Y, Z)` written out in coordinates:
///
/// ```text
/// Σᵢ sᵢtᵢuᵢ + ½ Σ_{(i,j,k)} tr(xᵢyⱼzₖ)
///   + ½ Σ_{i≠j} (sᵢ tr(yⱼz̄ⱼ) + tᵢ tr(xⱼz̄ⱼ) + uᵢ tr(xⱼȳⱼ))
/// ```
///
/// with `(i,j,k)` over the six orderings of `(1,2,3)`. The triple product
/// is multiplied in index order: the factor with index 1 first, then 2,
/// then 3, whichever of `X, Y, Z` it comes from.
pub fn t_form_e_expanded(x: &AlbertElem, y: &AlbertElem, z: &AlbertElem) -> Rat {
    let h = rat::half();
    let mut total = Rat::zero();
    for i in 0..3 {
        total += &x.s[i] * &y.s[i] * &z.s[i];
    }
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        let mut slot = [&x.x[i]; 3];
        slot[j] = &y.x[j];
        slot[k] = &z.x[k];
        total += &h * (&(slot[0] * slot[1]) * slot[2]).trace();
    }
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            let yz = (&y.x[j] * &z.x[j].conj()).trace();
            let xz = (&x.x[j] * &z.x[j].conj()).trace();
            let xy = (&x.x[j] * &y.x[j].conj()).trace();
            total += &h * (&x.s[i] * yz + &y.s[i] * xz + &z.s[i] * xy);
        }
    }
    total
}

/// `Q_a(X, Y) = −6 det(a) D(X, Y, a) + 9 D(X, a, a) D(Y, a, a)`.
pub fn q_a(a: &AlbertElem, x: &AlbertElem, y: &AlbertElem) -> Rat {
    int(-6) * det_j(a) * trilinear_d(x, y, a) + int(9) * trilinear_d(x, a, a) * trilinear_d(y, a, a)
}

/// Gram matrix of `Q_a` in [`JBasis`].
///
/// Uses `3 D(X, Y, a) = ⟨X, a×Y⟩`, so each entry is
/// `−2 det(a) ⟨bᵢ, a×bⱼ⟩ + ⟨a×a, bᵢ⟩⟨a×a, bⱼ⟩`.
pub fn gram_qa(a: &AlbertElem) -> Matrix {
    let basis = JBasis::standard();
    let det = det_j(a);
    let sharp = cross(a, a);
    let sharp_dual: Vec<Rat> = basis.iter().map(|b| pair(&sharp, b)).collect();
    let a_cross: Vec<AlbertElem> = basis.iter().map(|b| cross(a, b)).collect();
    let minus_two_det = int(-2) * det;
    Matrix::from_fn(DIM, DIM, |i, j| {
        &minus_two_det * pair(basis.get(i), &a_cross[j]) + &sharp_dual[i] * &sharp_dual[j]
    })
}

/// `Φ_a(X, Y) = 4 det(a)³ (X×a)×(Y×a) + ½(det(a)² Q_a(X,Y) − Q_a(X,a) Q_a(Y,a)) a`.
pub fn phi_a(a: &AlbertElem, x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    let det = det_j(a);
    let det2 = &det * &det;
    let main = cross(&cross(x, a), &cross(y, a)).scale(&(int(4) * &det2 * &det));
    let corr = rat::half() * (&det2 * q_a(a, x, y) - q_a(a, x, a) * q_a(a, y, a));
    &main + &a.scale(&corr)
}

fn nonsingular_det(a: &AlbertElem) -> Result<Rat> {
    let det = det_j(a);
    if det.is_zero() {
        Err(AlbertError::SingularPoint)
    } else {
        Ok(det)
    }
}

/// Springer's isotope product `det(a)⁻⁴ Φ_a(X, Y)`.
pub fn circ_a_springer(a: &AlbertElem, x: &AlbertElem, y: &AlbertElem) -> Result<AlbertElem> {
    let det = nonsingular_det(a)?;
    Ok(phi_a(a, x, y).scale(&rat::pow(&det, -4)))
}

/// `⟨X, Y⟩_a = det(a)⁻² Q_a(X, Y)`.
pub fn pairing_a(a: &AlbertElem, x: &AlbertElem, y: &AlbertElem) -> Result<Rat> {
    let det = nonsingular_det(a)?;
    Ok(q_a(a, x, y) * rat::pow(&det, -2))
}

/// The isotope product defined through `T_a`, one exact solve per call.
pub fn circ_a_tform(a: &AlbertElem, x: &AlbertElem, y: &AlbertElem) -> Result<AlbertElem> {
    TFormIsotope::new(a)?.product(x, y)
}

/// Solves `M u = rhs` exactly.
pub fn solve_exact(m: &Matrix, rhs: &[Rat]) -> Result<Vec<Rat>> {
    linalg::solve_exact(m, rhs)
}

/// Precomputed data for the `T_a` construction at a fixed `a`.
#[derive(Clone, Debug)]
pub struct TFormIsotope {
    a: AlbertElem,
    det: Rat,
    /// `⟨a×a, bₖ⟩` for every basis element.
    sharp_dual: Vec<Rat>,
    /// `a × bₖ` for every basis element.
    a_cross: Vec<AlbertElem>,
    gram: Matrix,
}

impl TFormIsotope {
    pub fn new(a: &AlbertElem) -> Result<Self> {
        let det = nonsingular_det(a)?;
        let basis = JBasis::standard();
        let sharp = cross(a, a);
        Ok(TFormIsotope {
            a: a.clone(),
            det,
            sharp_dual: basis.iter().map(|b| pair(&sharp, b)).collect(),
            a_cross: basis.iter().map(|b| cross(a, b)).collect(),
            gram: gram_qa(a),
        })
    }

    pub fn point(&self) -> &AlbertElem {
        &self.a
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `T_a(X, Y, bₖ)` for all `k`, via
    /// `T_a = ⟨a×a,X⟩⟨a×a,Y⟩⟨a×a,Z⟩ − 8 det(a) ⟨(a×X)×(a×Y), a×Z⟩`.
    pub fn t_column(&self, x: &AlbertElem, y: &AlbertElem) -> Vec<Rat> {
        let sharp = cross(&self.a, &self.a);
        let lin = pair(&sharp, x) * pair(&sharp, y);
        let p = cross(&cross(&self.a, x), &cross(&self.a, y));
        let eight_det = int(8) * &self.det;
        (0..DIM)
            .map(|k| &lin * &self.sharp_dual[k] - &eight_det * pair(&p, &self.a_cross[k]))
            .collect()
    }

    fn rhs(&self, x: &AlbertElem, y: &AlbertElem) -> Vec<Rat> {
        let inv = self.det.recip();
        self.t_column(x, y).into_iter().map(|t| t * &inv).collect()
    }

    pub fn product(&self, x: &AlbertElem, y: &AlbertElem) -> Result<AlbertElem> {
        let u = linalg::solve_exact(&self.gram, &self.rhs(x, y))?;
        Ok(AlbertElem::from_coords(&u))
    }

    /// Structure constants of `J_a`; the Gram matrix is inverted once and
    /// shared by all 729 right-hand sides.
    pub fn tensor(&self) -> Result<StructureTensor> {
        let solver = ExactSolver::new(&self.gram)?;
        Ok(StructureTensor::tabulate(|x, y| AlbertElem::from_coords(&solver.solve(&self.rhs(x, y)))))
    }
}

/// Structure constants of Springer's product on `J_a`.
pub fn springer_tensor(a: &AlbertElem) -> Result<StructureTensor> {
    let det = nonsingular_det(a)?;
    let scale = rat::pow(&det, -4);
    Ok(StructureTensor::tabulate(|x, y| phi_a(a, x, y).scale(&scale)))
}
