//! An explicitly constructible subfamily of `GE₆ × GL(2)`.
//!
//! Generic `E₆` elements have no elementary construction, so elements here
//! are products of scalars, diagonal conjugations `X ↦ DXD`, permutation
//! conjugations `X ↦ PXPᵀ` and `GL(2)` factors. Each carries its action on
//! `J` as a 27×27 matrix in [`JBasis`] together with its character `c`.

use std::ops::Mul;

use num_traits::Zero;

use crate::albert::{self, AlbertElem, JBasis, DIM};
use crate::error::{AlbertError, Result};
use crate::linalg::Matrix;
use crate::pvs::VPoint;
use crate::rat::{self, Rat};

pub type Mat2 = [[Rat; 2]; 2];

pub fn det2(m: &Mat2) -> Rat {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

fn id2() -> Mat2 {
    [[rat::one(), rat::zero()], [rat::zero(), rat::one()]]
}

/// `g = (g₁, g₂)` with `g₁` given by the matrix `l` and
/// `det(g₁X) = c·det(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElem {
    pub l: Matrix,
    pub c: Rat,
    pub g2: Mat2,
}

impl GroupElem {
    pub fn identity() -> Self {
        GroupElem { l: Matrix::identity(DIM), c: rat::one(), g2: id2() }
    }

    /// Assembles `g₁` from its values on the basis.
    pub fn from_linear_map(f: impl Fn(&AlbertElem) -> AlbertElem, c: Rat, g2: Mat2) -> Self {
        let cols: Vec<Vec<Rat>> = JBasis::standard().iter().map(|b| f(b).coords()).collect();
        GroupElem { l: Matrix::from_columns(&cols), c, g2 }
    }

    /// `X ↦ tX`, with `c = t³`.
    pub fn scalar(t: Rat) -> Result<Self> {
        if t.is_zero() {
            return Err(AlbertError::ZeroScalar);
        }
        let c = &t * &t * &t;
        Ok(GroupElem { l: Matrix::identity(DIM).scale(&t), c, g2: id2() })
    }

    /// `X ↦ DXD` with `D = diag(l1, l2, l3)`, so `c = (l1 l2 l3)²`.
    pub fn diag_conj(l1: Rat, l2: Rat, l3: Rat) -> Result<Self> {
        if l1.is_zero() || l2.is_zero() || l3.is_zero() {
            return Err(AlbertError::ZeroScalar);
        }
        let prod = &l1 * &l2 * &l3;
        let l = [l1, l2, l3];
        let f = |x: &AlbertElem| AlbertElem {
            s: std::array::from_fn(|i| &l[i] * &l[i] * &x.s[i]),
            x: std::array::from_fn(|i| x.x[i].scale(&(&l[(i + 1) % 3] * &l[(i + 2) % 3]))),
        };
        Ok(GroupElem::from_linear_map(f, &prod * &prod, id2()))
    }

    /// `X ↦ PXPᵀ` where `P` sends the standard basis vector `i` to
    /// `sigma[i]` (0-based). Slot bookkeeping, including any conjugations,
    /// falls out of permuting the full octonion matrix.
    pub fn perm(sigma: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &s in &sigma {
            if s >= 3 || seen[s] {
                return Err(AlbertError::Parse(format!("not a permutation of 0..3: {sigma:?}")));
            }
            seen[s] = true;
        }
        let f = |x: &AlbertElem| {
            let m = x.to_matrix();
            let mut n = m.clone();
            for i in 0..3 {
                for j in 0..3 {
                    n[sigma[i]][sigma[j]] = m[i][j].clone();
                }
            }
            AlbertElem::from_matrix(&n).expect("conjugation by a permutation keeps X Hermitian")
        };
        Ok(GroupElem::from_linear_map(f, rat::one(), id2()))
    }

    /// `(1, m)` for invertible `m = [[a, b], [c, d]]`.
    pub fn gl2(m: Mat2) -> Result<Self> {
        let d = det2(&m);
        if d.is_zero() {
            return Err(AlbertError::SingularMatrix { rank: 1, size: 2 });
        }
        Ok(GroupElem { l: Matrix::identity(DIM), c: rat::one(), g2: m })
    }

    /// Applies `g₁` to an element of `J`.
    pub fn apply(&self, x: &AlbertElem) -> AlbertElem {
        AlbertElem::from_coords(&self.l.mul_vec(&x.coords()))
    }

    /// `g(a v₁ + b v₂) = g₁(a)(αv₁ + γv₂) + g₁(b)(βv₁ + δv₂)` for
    /// `g₂ = [[α, β], [γ, δ]]`.
    pub fn act_v(&self, x: &VPoint) -> VPoint {
        let (la, lb) = (self.apply(&x.a), self.apply(&x.b));
        let [[p, q], [r, s]] = &self.g2;
        VPoint::new(&la.scale(p) + &lb.scale(q), &la.scale(r) + &lb.scale(s))
    }

    pub fn det_g2(&self) -> Rat {
        det2(&self.g2)
    }

    /// `χ(g) = c(g₁)⁴ det(g₂)⁶`.
    pub fn chi(&self) -> Rat {
        rat::pow(&self.c, 4) * rat::pow(&self.det_g2(), 6)
    }

    /// `μ_g = c(g₁) det(g₂)² g₁`, as an element of the first factor.
    pub fn mu(&self) -> GroupElem {
        let d = self.det_g2();
        let s = &self.c * &d * &d;
        GroupElem { l: self.l.scale(&s), c: &s * &s * &s * &self.c, g2: id2() }
    }

    /// The `⟨,⟩`-adjoint inverse: the linear map with
    /// `⟨g₁X, g̃₁Y⟩ = ⟨X, Y⟩`, i.e. `M⁻¹ (Lᵀ)⁻¹ M` with `M` the Gram matrix.
    /// The `GL(2)` factor is left unchanged.
    pub fn tilde(&self) -> Result<GroupElem> {
        let gram = albert::pair_gram();
        let gram_inv = gram.inverse()?;
        let lt_inv = self.l.transpose().inverse()?;
        let l = &(&gram_inv * &lt_inv) * gram;
        Ok(GroupElem { l, c: self.c.recip(), g2: self.g2.clone() })
    }

    /// Checks `det(g₁X) = c·det(X)` at one point.
    pub fn preserves_det_at(&self, x: &AlbertElem) -> bool {
        albert::det_j(&self.apply(x)) == &self.c * albert::det_j(x)
    }
}

impl Mul for &GroupElem {
    type Output = GroupElem;
    fn mul(self, o: &GroupElem) -> GroupElem {
        GroupElem { l: &self.l * &o.l, c: &self.c * &o.c, g2: mul2(&self.g2, &o.g2) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::{cross, pair};
    use crate::pvs::{delta, w_point};
    use crate::rat::{frac, int};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn trivial_generators_are_identity() {
        let id = GroupElem::identity();
        assert_eq!(GroupElem::scalar(int(1)).unwrap(), id);
        assert_eq!(GroupElem::diag_conj(int(1), int(1), int(1)).unwrap(), id);
        assert_eq!(GroupElem::perm([0, 1, 2]).unwrap(), id);
        assert_eq!(id.act_v(&w_point()), w_point());
    }

    #[test]
    fn zero_parameters_rejected() {
        assert_eq!(GroupElem::scalar(int(0)).unwrap_err(), AlbertError::ZeroScalar);
        assert_eq!(GroupElem::diag_conj(int(1), int(0), int(2)).unwrap_err(), AlbertError::ZeroScalar);
        assert!(GroupElem::gl2([[int(1), int(2)], [int(2), int(4)]]).is_err());
        assert!(GroupElem::perm([0, 0, 1]).is_err());
    }

    #[test]
    fn characters() {
        let mut r = rng(1);
        let two = GroupElem::scalar(int(2)).unwrap();
        assert_eq!(two.c, int(8));
        assert_eq!(GroupElem::scalar(frac(1, 2)).unwrap().chi(), frac(1, 4096));
        let d = GroupElem::diag_conj(int(2), int(1), int(1)).unwrap();
        assert_eq!(d.c, int(4));
        let e6 = GroupElem::diag_conj(int(2), int(1), frac(1, 2)).unwrap();
        assert_eq!(e6.c, int(1));
        let swap = GroupElem::perm([1, 0, 2]).unwrap();
        let cyc = GroupElem::perm([1, 2, 0]).unwrap();
        for _ in 0..100 {
            let x = sample::albert(&mut r);
            for g in [&two, &d, &e6, &swap, &cyc] {
                assert!(g.preserves_det_at(&x));
            }
        }
    }

    #[test]
    fn permutations_compose_like_matrices() {
        let s01 = GroupElem::perm([1, 0, 2]).unwrap();
        let s12 = GroupElem::perm([0, 2, 1]).unwrap();
        // P_σ P_τ = P_{σ∘τ}
        let composed = &s01 * &s12;
        let sigma = [1, 0, 2];
        let tau = [0, 2, 1];
        let expected = GroupElem::perm([sigma[tau[0]], sigma[tau[1]], sigma[tau[2]]]).unwrap();
        assert_eq!(composed, expected);
        assert_eq!(&s01 * &s01, GroupElem::identity());
    }

    #[test]
    fn gl2_swap_on_base_point() {
        let g = GroupElem::gl2([[int(0), int(1)], [int(1), int(0)]]).unwrap();
        let w = w_point();
        assert_eq!(g.act_v(&w), VPoint::new(w.b.clone(), w.a.clone()));
        assert_eq!(delta(&g.act_v(&w)), g.chi() * delta(&w));
    }

    #[test]
    fn action_is_a_left_action() {
        let mut r = rng(2);
        for _ in 0..5 {
            let g = sample::group_elem(&mut r, 2);
            let h = sample::group_elem(&mut r, 2);
            let x = sample::vpoint(&mut r);
            assert_eq!(g.act_v(&h.act_v(&x)), (&g * &h).act_v(&x));
            assert_eq!((&g * &h).mu(), &g.mu() * &h.mu());
            assert_eq!((&g * &h).chi(), g.chi() * h.chi());
        }
    }

    #[test]
    fn mu_of_gl2_factor() {
        let m = [[int(2), int(1)], [int(1), int(3)]];
        let g = GroupElem::gl2(m).unwrap();
        assert_eq!(g.mu().l, Matrix::identity(DIM).scale(&int(25)));
    }

    #[test]
    fn tilde_is_adjoint_and_involutive() {
        let mut r = rng(3);
        assert_eq!(GroupElem::identity().tilde().unwrap(), GroupElem::identity());
        let e6 = &GroupElem::diag_conj(int(2), int(1), frac(1, 2)).unwrap()
            * &GroupElem::perm([2, 0, 1]).unwrap();
        let g = &e6 * &GroupElem::diag_conj(int(1), int(-1), int(3)).unwrap();
        for h in [&e6, &g] {
            let t = h.tilde().unwrap();
            assert_eq!(t.tilde().unwrap(), *h);
            let x = sample::albert(&mut r);
            let y = sample::albert(&mut r);
            assert_eq!(pair(&h.apply(&x), &t.apply(&y)), pair(&x, &y));
            assert!(t.preserves_det_at(&x));
        }
        let t = e6.tilde().unwrap();
        for _ in 0..10 {
            let x = sample::albert(&mut r);
            let y = sample::albert(&mut r);
            assert_eq!(e6.apply(&cross(&x, &y)), cross(&t.apply(&x), &t.apply(&y)));
            assert_eq!(t.apply(&cross(&x, &y)), cross(&e6.apply(&x), &e6.apply(&y)));
        }
    }
}
