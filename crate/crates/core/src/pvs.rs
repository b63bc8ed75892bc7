//! The prehomogeneous space `V = J ⊗ Aff²`: a point `x = a·v₁ + b·v₂`
//! carries the binary cubic `F_x(v₁, v₂) = det(x)` and its discriminant
//! `Δ(x)`, the degree-12 relative invariant.

use num_traits::Zero;

use crate::albert::{det_j, trilinear_d, AlbertElem};
use crate::rat::{int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VPoint {
    pub a: AlbertElem,
    pub b: AlbertElem,
}

impl VPoint {
    pub fn new(a: AlbertElem, b: AlbertElem) -> Self {
        VPoint { a, b }
    }

    pub fn zero() -> Self {
        VPoint::new(AlbertElem::zero(), AlbertElem::zero())
    }

    pub fn scale(&self, t: &Rat) -> Self {
        VPoint::new(self.a.scale(t), self.b.scale(t))
    }
}

/// Coefficients of `c30 v₁³ + c21 v₁²v₂ + c12 v₁v₂² + c03 v₂³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryCubic {
    pub c30: Rat,
    pub c21: Rat,
    pub c12: Rat,
    pub c03: Rat,
}

impl BinaryCubic {
    pub fn coeffs(&self) -> [Rat; 4] {
        [self.c30.clone(), self.c21.clone(), self.c12.clone(), self.c03.clone()]
    }

    pub fn eval(&self, v1: &Rat, v2: &Rat) -> Rat {
        &self.c30 * v1 * v1 * v1 + &self.c21 * v1 * v1 * v2 + &self.c12 * v1 * v2 * v2 + &self.c03 * v2 * v2 * v2
    }

    /// `18abcd − 4b³d + b²c² − 4ac³ − 27a²d²`.
    pub fn discriminant(&self) -> Rat {
        let (a, b, c, d) = (&self.c30, &self.c21, &self.c12, &self.c03);
        int(18) * a * b * c * d - int(4) * b * b * b * d + b * b * c * c
            - int(4) * a * c * c * c
            - int(27) * a * a * d * d
    }
}

/// `F_x` by polarization: `det(v₁a + v₂b)` has middle coefficients
/// `3D(a,a,b)` and `3D(a,b,b)`.
pub fn cubic_of(x: &VPoint) -> BinaryCubic {
    BinaryCubic {
        c30: det_j(&x.a),
        c21: int(3) * trilinear_d(&x.a, &x.a, &x.b),
        c12: int(3) * trilinear_d(&x.a, &x.b, &x.b),
        c03: det_j(&x.b),
    }
}

pub fn delta(x: &VPoint) -> Rat {
    cubic_of(x).discriminant()
}

pub fn is_semistable(x: &VPoint) -> bool {
    !delta(x).is_zero()
}

/// The base point `w = diag(1,−1,0)·v₁ + diag(0,1,−1)·v₂`.
pub fn w_point() -> VPoint {
    VPoint::new(AlbertElem::diag_i(1, -1, 0), AlbertElem::diag_i(0, 1, -1))
}
