//! Split octonions in Zorn vector-matrix coordinates.
//!
//! An element is a 2×2 array `(α, v; w, β)` with scalar diagonal and
//! 3-vector off-diagonal entries. The coordinate order used everywhere
//! (basis, JSON, tensors) is `[α, v1, v2, v3, w1, w2, w3, β]`.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rat::{self, Rat};

pub type Vec3 = [Rat; 3];

fn dot3(a: &Vec3, b: &Vec3) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross3(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn lin3(s: &Rat, a: &Vec3, t: &Rat, b: &Vec3) -> Vec3 {
    [
        s * &a[0] + t * &b[0],
        s * &a[1] + t * &b[1],
        s * &a[2] + t * &b[2],
    ]
}

fn map3(a: &Vec3, f: impl Fn(&Rat) -> Rat) -> Vec3 {
    [f(&a[0]), f(&a[1]), f(&a[2])]
}

fn zip3(a: &Vec3, b: &Vec3, f: impl Fn(&Rat, &Rat) -> Rat) -> Vec3 {
    [f(&a[0], &b[0]), f(&a[1], &b[1]), f(&a[2], &b[2])]
}

fn is_zero3(a: &Vec3) -> bool {
    a.iter().all(Zero::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Oct {
    pub alpha: Rat,
    pub v: Vec3,
    pub w: Vec3,
    pub beta: Rat,
}

impl Oct {
    pub const DIM: usize = 8;

    pub fn new(alpha: Rat, v: Vec3, w: Vec3, beta: Rat) -> Self {
        Oct { alpha, v, w, beta }
    }

    pub fn zero() -> Self {
        Oct::scalar(rat::zero())
    }

    /// The unit u₀ = (1, 0; 0, 1).
    pub fn one() -> Self {
        Oct::scalar(rat::one())
    }

    /// `t·u₀`.
    pub fn scalar(t: Rat) -> Self {
        Oct {
            alpha: t.clone(),
            v: [rat::zero(), rat::zero(), rat::zero()],
            w: [rat::zero(), rat::zero(), rat::zero()],
            beta: t,
        }
    }

    /// The `j`-th Zorn basis element in coordinate order.
    pub fn basis(j: usize) -> Self {
        let mut c = vec![rat::zero(); 8];
        c[j] = rat::one();
        Oct::from_coords(&c)
    }

    pub fn from_coords(c: &[Rat]) -> Self {
        assert_eq!(c.len(), 8, "octonion needs 8 coordinates");
        Oct {
            alpha: c[0].clone(),
            v: [c[1].clone(), c[2].clone(), c[3].clone()],
            w: [c[4].clone(), c[5].clone(), c[6].clone()],
            beta: c[7].clone(),
        }
    }

    pub fn coords(&self) -> [Rat; 8] {
        [
            self.alpha.clone(),
            self.v[0].clone(),
            self.v[1].clone(),
            self.v[2].clone(),
            self.w[0].clone(),
            self.w[1].clone(),
            self.w[2].clone(),
            self.beta.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && is_zero3(&self.v) && is_zero3(&self.w)
    }

    /// True iff the element lies on the scalar line k·u₀.
    pub fn is_scalar(&self) -> bool {
        self.alpha == self.beta && is_zero3(&self.v) && is_zero3(&self.w)
    }

    pub fn conj(&self) -> Self {
        Oct {
            alpha: self.beta.clone(),
            v: map3(&self.v, |x| -x),
            w: map3(&self.w, |x| -x),
            beta: self.alpha.clone(),
        }
    }

    pub fn norm(&self) -> Rat {
        &self.alpha * &self.beta - dot3(&self.v, &self.w)
    }

    pub fn trace(&self) -> Rat {
        &self.alpha + &self.beta
    }

    /// Q(x, y) = ½(‖x+y‖ − ‖x‖ − ‖y‖), written out in coordinates.
    pub fn q(&self, other: &Oct) -> Rat {
        let s = &self.alpha * &other.beta + &other.alpha * &self.beta
            - dot3(&self.v, &other.w)
            - dot3(&other.v, &self.w);
        s * rat::half()
    }

    pub fn scale(&self, t: &Rat) -> Self {
        if t.is_zero() {
            return Oct::zero();
        }
        Oct {
            alpha: t * &self.alpha,
            v: map3(&self.v, |x| t * x),
            w: map3(&self.w, |x| t * x),
            beta: t * &self.beta,
        }
    }

    /// Zorn product
    /// `(α₁α₂ + v₁·w₂, α₁v₂ + β₂v₁ − w₁×w₂ ; α₂w₁ + β₁w₂ + v₁×v₂, β₁β₂ + w₁·v₂)`.
    pub fn mul(&self, y: &Oct) -> Oct {
        if self.is_zero() || y.is_zero() {
            return Oct::zero();
        }
        let x = self;
        let alpha = &x.alpha * &y.alpha + dot3(&x.v, &y.w);
        let beta = &x.beta * &y.beta + dot3(&x.w, &y.v);
        let v = zip3(&lin3(&x.alpha, &y.v, &y.beta, &x.v), &cross3(&x.w, &y.w), |a, b| a - b);
        let w = zip3(&lin3(&y.alpha, &x.w, &x.beta, &y.w), &cross3(&x.v, &y.v), |a, b| a + b);
        Oct { alpha, v, w, beta }
    }
}

impl Add for &Oct {
    type Output = Oct;
    fn add(self, o: &Oct) -> Oct {
        Oct {
            alpha: &self.alpha + &o.alpha,
            v: zip3(&self.v, &o.v, |a, b| a + b),
            w: zip3(&self.w, &o.w, |a, b| a + b),
            beta: &self.beta + &o.beta,
        }
    }
}

impl Sub for &Oct {
    type Output = Oct;
    fn sub(self, o: &Oct) -> Oct {
        Oct {
            alpha: &self.alpha - &o.alpha,
            v: zip3(&self.v, &o.v, |a, b| a - b),
            w: zip3(&self.w, &o.w, |a, b| a - b),
            beta: &self.beta - &o.beta,
        }
    }
}

impl Neg for &Oct {
    type Output = Oct;
    fn neg(self) -> Oct {
        self.scale(&rat::int(-1))
    }
}

impl Mul for &Oct {
    type Output = Oct;
    fn mul(self, o: &Oct) -> Oct {
        Oct::mul(self, o)
    }
}

impl Add for Oct {
    type Output = Oct;
    fn add(self, o: Oct) -> Oct {
        &self + &o
    }
}

impl Sub for Oct {
    type Output = Oct;
    fn sub(self, o: Oct) -> Oct {
        &self - &o
    }
}

impl Neg for Oct {
    type Output = Oct;
    fn neg(self) -> Oct {
        -&self
    }
}

impl Mul for Oct {
    type Output = Oct;
    fn mul(self, o: Oct) -> Oct {
        Oct::mul(&self, &o)
    }
}

impl AddAssign<&Oct> for Oct {
    fn add_assign(&mut self, o: &Oct) {
        *self = &*self + o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::rat::{frac, int};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use proptest::prelude::*;

    fn oct(c: [i64; 8]) -> Oct {
        Oct::from_coords(&c.map(int))
    }

    #[test]
    fn unit_and_idempotent() {
        let u = Oct::one();
        assert_eq!(&u * &u, u);
        let p = oct([1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(&p * &p, p);
        assert!(p.norm().is_zero());
        for j in 0..8 {
            let b = Oct::basis(j);
            assert_eq!(&u * &b, b);
            assert_eq!(&b * &u, b);
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(Oct::one().conj(), Oct::one());
        let x = oct([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(x.conj(), oct([8, -2, -3, -4, -5, -6, -7, 1]));
        assert_eq!(x.conj().conj(), x);
        assert_eq!(&x + &x.conj(), Oct::scalar(x.trace()));
    }

    #[test]
    fn composition_on_basis() {
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (Oct::basis(i), Oct::basis(j));
                assert_eq!((&x * &y).norm(), x.norm() * y.norm(), "basis {i},{j}");
            }
        }
    }

    #[test]
    fn q_is_polarized_norm() {
        assert_eq!(Oct::one().q(&Oct::one()), int(1));
        let x = oct([1, -2, 0, 3, 1, 1, -1, 2]);
        let y = oct([0, 1, 1, -1, 2, 0, 3, -2]);
        let polar = ((&x + &y).norm() - x.norm() - y.norm()) * frac(1, 2);
        assert_eq!(x.q(&y), polar);
        assert_eq!(x.q(&x), x.norm());
        assert_eq!(int(2) * x.q(&y), (&x * &y.conj()).trace());
        let a = frac(-3, 2);
        assert_eq!(x.scale(&a).norm(), &a * &a * x.norm());
    }

    #[test]
    fn q_gram_is_nondegenerate() {
        let gram = Matrix::from_fn(8, 8, |i, j| Oct::basis(i).q(&Oct::basis(j)));
        // Q pairs α with β and v_i with w_i, each with weight ±1/2.
        assert_eq!(gram.determinant(), frac(1, 256));
    }

    #[test]
    fn random_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let x = sample::oct(&mut rng);
            let y = sample::oct(&mut rng);
            let xy = &x * &y;
            assert_eq!(xy.norm(), x.norm() * y.norm());
            assert_eq!(xy.trace(), (&y * &x).trace());
            assert_eq!(xy.conj(), &y.conj() * &x.conj());
            assert_eq!(&x * &x.conj(), Oct::scalar(x.norm()));
            let xx = &x * &x;
            assert_eq!(&xx * &y, &x * &xy);
            assert_eq!(&(&y * &x) * &x, &y * &xx);
            let quad = &(&xx - &x.scale(&x.trace())) + &Oct::scalar(x.norm());
            assert!(quad.is_zero());
        }
    }

    proptest! {
        #[test]
        fn composition_and_conjugation(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (x, y) = (sample::oct(&mut rng), sample::oct(&mut rng));
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
            prop_assert_eq!(&x * &x.conj(), Oct::scalar(x.norm()));
        }
    }
}
