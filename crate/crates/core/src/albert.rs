//! The exceptional Jordan algebra `J` of 3×3 Hermitian matrices over the
//! split octonions.
//!
//! An element is stored as three diagonal scalars `s1, s2, s3` and three
//! octonion slots `x1, x2, x3`, laid out as
//!
//! ```text
//!     ⎛ s1   x3   x̄2 ⎞
//!     ⎜ x̄3   s2   x1 ⎟
//!     ⎝ x2   x̄1   s3 ⎠
//! ```
//!
//! The 27 coordinates are `[s1, s2, s3, x1 (8), x2 (8), x3 (8)]`, which is
//! also the order of [`JBasis`].

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::octonion::Oct;
use crate::rat::{self, frac, int, Rat};

pub const DIM: usize = 27;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlbertElem {
    /// Diagonal entries `s1, s2, s3`.
    pub s: [Rat; 3],
    /// Off-diagonal slots `x1, x2, x3`.
    pub x: [Oct; 3],
}

type OctMatrix = [[Oct; 3]; 3];

impl AlbertElem {
    pub fn new(s: [Rat; 3], x: [Oct; 3]) -> Self {
        AlbertElem { s, x }
    }

    pub fn zero() -> Self {
        AlbertElem::diag(rat::zero(), rat::zero(), rat::zero())
    }

    /// The unit `e = diag(1, 1, 1)`.
    pub fn identity() -> Self {
        AlbertElem::diag(rat::one(), rat::one(), rat::one())
    }

    pub fn diag(s1: Rat, s2: Rat, s3: Rat) -> Self {
        AlbertElem { s: [s1, s2, s3], x: [Oct::zero(), Oct::zero(), Oct::zero()] }
    }

    pub fn diag_i(s1: i64, s2: i64, s3: i64) -> Self {
        AlbertElem::diag(int(s1), int(s2), int(s3))
    }

    /// `E_ii`, the unit in diagonal slot `i` (0-based).
    pub fn unit_diag(i: usize) -> Self {
        let mut e = AlbertElem::zero();
        e.s[i] = rat::one();
        e
    }

    /// `F_i(c)`: octonion `c` in slot `x_{i+1}` (0-based `i`), zero elsewhere.
    pub fn off(i: usize, c: Oct) -> Self {
        let mut e = AlbertElem::zero();
        e.x[i] = c;
        e
    }

    pub fn from_coords(c: &[Rat]) -> Self {
        assert_eq!(c.len(), DIM, "Albert element needs 27 coordinates");
        AlbertElem {
            s: [c[0].clone(), c[1].clone(), c[2].clone()],
            x: [
                Oct::from_coords(&c[3..11]),
                Oct::from_coords(&c[11..19]),
                Oct::from_coords(&c[19..27]),
            ],
        }
    }

    pub fn coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(DIM);
        out.extend(self.s.iter().cloned());
        for o in &self.x {
            out.extend(o.coords());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.s.iter().all(Zero::is_zero) && self.x.iter().all(Oct::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.x.iter().all(Oct::is_zero)
    }

    pub fn scale(&self, t: &Rat) -> Self {
        AlbertElem {
            s: [t * &self.s[0], t * &self.s[1], t * &self.s[2]],
            x: [self.x[0].scale(t), self.x[1].scale(t), self.x[2].scale(t)],
        }
    }

    /// `Tr(X) = s1 + s2 + s3`.
    pub fn trace(&self) -> Rat {
        &self.s[0] + &self.s[1] + &self.s[2]
    }

    /// The full 3×3 octonion matrix.
    pub fn to_matrix(&self) -> OctMatrix {
        let [s1, s2, s3] = &self.s;
        let [x1, x2, x3] = &self.x;
        [
            [Oct::scalar(s1.clone()), x3.clone(), x2.conj()],
            [x3.conj(), Oct::scalar(s2.clone()), x1.clone()],
            [x2.clone(), x1.conj(), Oct::scalar(s3.clone())],
        ]
    }

    /// Reads an element back from a Hermitian octonion matrix. Returns
    /// `None` if the matrix is not Hermitian with scalar diagonal.
    pub fn from_matrix(m: &OctMatrix) -> Option<Self> {
        let hermitian = (0..3).all(|i| m[i][i].is_scalar())
            && m[1][0] == m[0][1].conj()
            && m[2][1] == m[1][2].conj()
            && m[0][2] == m[2][0].conj();
        hermitian.then(|| AlbertElem {
            s: [m[0][0].alpha.clone(), m[1][1].alpha.clone(), m[2][2].alpha.clone()],
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        })
    }
}

fn matrix_product(a: &OctMatrix, b: &OctMatrix) -> OctMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Oct::zero();
            for k in 0..3 {
                acc += &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

/// `X ∘ Y = ½(XY + YX)` computed with octonion matrix products.
pub fn jordan_mul(x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    if x.is_zero() || y.is_zero() {
        return AlbertElem::zero();
    }
    let (mx, my) = (x.to_matrix(), y.to_matrix());
    let xy = matrix_product(&mx, &my);
    let yx = matrix_product(&my, &mx);
    let sum: OctMatrix = std::array::from_fn(|i| std::array::from_fn(|j| &xy[i][j] + &yx[i][j]));
    AlbertElem::from_matrix(&sum)
        .expect("XY + YX is Hermitian with scalar diagonal")
        .scale(&rat::half())
}

/// `X ∘ X`.
pub fn square(x: &AlbertElem) -> AlbertElem {
    jordan_mul(x, x)
}

/// `⟨X, Y⟩ = Tr(X ∘ Y)`, in closed form `Σ sᵢtᵢ + 2 Σ Q(xᵢ, yᵢ)`.
pub fn pair(x: &AlbertElem, y: &AlbertElem) -> Rat {
    let mut acc = rat::zero();
    for i in 0..3 {
        if !x.s[i].is_zero() && !y.s[i].is_zero() {
            acc += &x.s[i] * &y.s[i];
        }
        if !x.x[i].is_zero() && !y.x[i].is_zero() {
            acc += int(2) * x.x[i].q(&y.x[i]);
        }
    }
    acc
}

pub fn trace_j(x: &AlbertElem) -> Rat {
    x.trace()
}

/// Freudenthal determinant
/// `s1s2s3 − s1‖x1‖ − s2‖x2‖ − s3‖x3‖ + tr((x1x2)x3)`.
pub fn det_j(x: &AlbertElem) -> Rat {
    let [s1, s2, s3] = &x.s;
    let [x1, x2, x3] = &x.x;
    s1 * s2 * s3 - s1 * x1.norm() - s2 * x2.norm() - s3 * x3.norm() + (&(x1 * x2) * x3).trace()
}

/// The symmetric trilinear form with `D(X, X, X) = det(X)`, by the
/// seven-term polarization of `det`.
pub fn trilinear_d(x: &AlbertElem, y: &AlbertElem, z: &AlbertElem) -> Rat {
    let xy = x + y;
    let yz = y + z;
    let zx = z + x;
    let xyz = &xy + z;
    let six = det_j(&xyz) - det_j(&xy) - det_j(&yz) - det_j(&zx) + det_j(x) + det_j(y) + det_j(z);
    six * frac(1, 6)
}

/// Second route to `D`: the multilinear expansion of `det`,
///
/// `6D = Σ_σ s_σ(1) t_σ(2) u_σ(3) + Σ_σ tr(p₁p₂p₃) − Σ_i (sᵢ tr(yᵢz̄ᵢ) + tᵢ tr(xᵢz̄ᵢ) + uᵢ tr(xᵢȳᵢ))`
///
/// where in the middle sum `σ` assigns the octonion slots 1, 2, 3 to the
/// three arguments and the product is taken in slot order.
pub fn trilinear_d_expanded(x: &AlbertElem, y: &AlbertElem, z: &AlbertElem) -> Rat {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let args = [x, y, z];
    let mut six = rat::zero();
    for p in PERMS {
        // p[k] is the slot taken from argument k.
        six += &args[0].s[p[0]] * &args[1].s[p[1]] * &args[2].s[p[2]];
        let mut slot: [Option<&Oct>; 3] = [None; 3];
        for k in 0..3 {
            slot[p[k]] = Some(&args[k].x[p[k]]);
        }
        let [a, b, c] = slot.map(|o| o.expect("each slot assigned once"));
        six += (&(a * b) * c).trace();
    }
    for i in 0..3 {
        six -= &x.s[i] * (&y.x[i] * &z.x[i].conj()).trace();
        six -= &y.s[i] * (&x.x[i] * &z.x[i].conj()).trace();
        six -= &z.s[i] * (&x.x[i] * &y.x[i].conj()).trace();
    }
    six * frac(1, 6)
}

/// Freudenthal cross product
/// `X × Y = X∘Y − ½Tr(X)Y − ½Tr(Y)X − ½Tr(X∘Y)e + ½Tr(X)Tr(Y)e`.
pub fn cross(x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    let h = rat::half();
    let (tx, ty) = (x.trace(), y.trace());
    let xy = jordan_mul(x, y);
    let shift = &h * (&tx * &ty - xy.trace());
    let mut out = &(&xy - &y.scale(&(&h * &tx))) - &x.scale(&(&h * &ty));
    for s in out.s.iter_mut() {
        *s += &shift;
    }
    out
}

/// The product written out entry by entry, transcribed from the closed
/// form of `X ∘ Y`. Kept as an independent check on [`jordan_mul`].
pub fn jordan_mul_closed_form(x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    let [s1, s2, s3] = &x.s;
    let [t1, t2, t3] = &y.s;
    let [x1, x2, x3] = &x.x;
    let [y1, y2, y3] = &y.x;
    let tr = |a: &Oct, b: &Oct| (a * &b.conj()).trace();
    let c = Oct::conj;
    let sum = |terms: &[Oct]| terms.iter().fold(Oct::zero(), |acc, o| &acc + o);
    let h = rat::half();
    let d1 = &h * (int(2) * s1 * t1 + tr(x3, y3) + tr(x2, y2));
    let d2 = &h * (int(2) * s2 * t2 + tr(x3, y3) + tr(x1, y1));
    let d3 = &h * (int(2) * s3 * t3 + tr(x2, y2) + tr(x1, y1));
    // (1,2) entry
    let n3 = sum(&[
        y3.scale(s1),
        x3.scale(t2),
        &c(x2) * &c(y1),
        x3.scale(t1),
        y3.scale(s2),
        &c(y2) * &c(x1),
    ]);
    // (2,3) entry
    let n1 = sum(&[
        &c(x3) * &c(y2),
        y1.scale(s2),
        x1.scale(t3),
        &c(y3) * &c(x2),
        x1.scale(t2),
        y1.scale(s3),
    ]);
    // (3,1) entry
    let n2 = sum(&[
        y2.scale(s1),
        &c(y1) * &c(x3),
        x2.scale(t3),
        x2.scale(t1),
        &c(x1) * &c(y3),
        y2.scale(s3),
    ]);
    AlbertElem { s: [d1, d2, d3], x: [n1.scale(&h), n2.scale(&h), n3.scale(&h)] }
}

impl Add for &AlbertElem {
    type Output = AlbertElem;
    fn add(self, o: &AlbertElem) -> AlbertElem {
        AlbertElem {
            s: std::array::from_fn(|i| &self.s[i] + &o.s[i]),
            x: std::array::from_fn(|i| &self.x[i] + &o.x[i]),
        }
    }
}

impl Sub for &AlbertElem {
    type Output = AlbertElem;
    fn sub(self, o: &AlbertElem) -> AlbertElem {
        AlbertElem {
            s: std::array::from_fn(|i| &self.s[i] - &o.s[i]),
            x: std::array::from_fn(|i| &self.x[i] - &o.x[i]),
        }
    }
}

impl Neg for &AlbertElem {
    type Output = AlbertElem;
    fn neg(self) -> AlbertElem {
        self.scale(&int(-1))
    }
}

impl Add for AlbertElem {
    type Output = AlbertElem;
    fn add(self, o: AlbertElem) -> AlbertElem {
        &self + &o
    }
}

impl Sub for AlbertElem {
    type Output = AlbertElem;
    fn sub(self, o: AlbertElem) -> AlbertElem {
        &self - &o
    }
}

/// The ordered basis `E11, E22, E33, F1(b_0..7), F2(b_0..7), F3(b_0..7)`.
#[derive(Clone, Debug)]
pub struct JBasis {
    elems: Vec<AlbertElem>,
}

impl JBasis {
    pub const NAME: &'static str = "jbasis-v1";

    pub fn standard() -> &'static JBasis {
        static BASIS: OnceLock<JBasis> = OnceLock::new();
        BASIS.get_or_init(|| {
            let mut elems: Vec<AlbertElem> = (0..3).map(AlbertElem::unit_diag).collect();
            for slot in 0..3 {
                for j in 0..Oct::DIM {
                    elems.push(AlbertElem::off(slot, Oct::basis(j)));
                }
            }
            JBasis { elems }
        })
    }

    pub fn get(&self, i: usize) -> &AlbertElem {
        &self.elems[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AlbertElem> {
        self.elems.iter()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// Gram matrix of `⟨,⟩` in [`JBasis`].
pub fn pair_gram() -> &'static crate::linalg::Matrix {
    static GRAM: OnceLock<crate::linalg::Matrix> = OnceLock::new();
    GRAM.get_or_init(|| {
        let b = JBasis::standard();
        crate::linalg::Matrix::from_fn(DIM, DIM, |i, j| pair(b.get(i), b.get(j)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use proptest::prelude::*;

    fn w1() -> AlbertElem {
        AlbertElem::diag_i(1, -1, 0)
    }

    fn w2() -> AlbertElem {
        AlbertElem::diag_i(0, 1, -1)
    }

    #[test]
    fn unit_and_trace() {
        let e = AlbertElem::identity();
        assert_eq!(trace_j(&e), int(3));
        assert_eq!(pair(&e, &e), int(3));
        assert_eq!(det_j(&e), int(1));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let x = sample::albert(&mut rng);
            assert_eq!(jordan_mul(&e, &x), x);
        }
    }

    #[test]
    fn diagonal_multiplier_scales_slots() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = sample::albert(&mut rng);
        let (t1, t2, t3) = (int(2), frac(1, 3), int(-5));
        let y = AlbertElem::diag(t1.clone(), t2.clone(), t3.clone());
        let p = jordan_mul(&x, &y);
        let h = rat::half();
        assert_eq!(p.s[0], &x.s[0] * &t1);
        assert_eq!(p.x[2], x.x[2].scale(&(&h * (&t1 + &t2))));
        assert_eq!(p.x[1], x.x[1].scale(&(&h * (&t1 + &t3))));
        assert_eq!(p.x[0], x.x[0].scale(&(&h * (&t2 + &t3))));

        let c = sample::oct(&mut rng);
        let f3 = AlbertElem::off(2, c);
        assert_eq!(jordan_mul(&f3, &AlbertElem::unit_diag(0)), f3.scale(&h));
    }

    #[test]
    fn closed_form_product_agrees_on_basis() {
        let b = JBasis::standard();
        for x in b.iter() {
            for y in b.iter() {
                assert_eq!(jordan_mul(x, y), jordan_mul_closed_form(x, y));
            }
        }
    }

    #[test]
    fn pair_is_trace_of_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let x = sample::albert(&mut rng);
            let y = sample::albert(&mut rng);
            assert_eq!(pair(&x, &y), jordan_mul(&x, &y).trace());
        }
        assert!(!pair_gram().determinant().is_zero());
    }

    #[test]
    fn determinant_anchors() {
        // det(v1 w1 + v2 w2) = v1 v2 (v1 - v2)
        assert!(det_j(&w1()).is_zero());
        assert!(det_j(&w2()).is_zero());
        assert_eq!(trilinear_d(&w1(), &w1(), &w2()), frac(1, 3));
        assert_eq!(trilinear_d(&w1(), &w2(), &w2()), frac(-1, 3));
        assert_eq!(trilinear_d(&AlbertElem::identity(), &AlbertElem::identity(), &AlbertElem::identity()), int(1));

        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = sample::oct(&mut rng);
        let x = &AlbertElem::identity() + &AlbertElem::off(0, c.clone());
        assert_eq!(det_j(&x), int(1) - c.norm());
        assert_eq!(det_j(&AlbertElem::diag_i(2, 3, 5)), int(30));
        let y = sample::albert(&mut rng);
        let t = frac(-2, 3);
        assert_eq!(det_j(&y.scale(&t)), &t * &t * &t * det_j(&y));
        let e = AlbertElem::identity();
        assert_eq!(trilinear_d(&e, &e, &y), y.trace() * frac(1, 3));
    }

    #[test]
    fn cross_anchors() {
        let e = AlbertElem::identity();
        assert_eq!(cross(&e, &e), e);
        assert_eq!(cross(&w1(), &w1()), AlbertElem::diag_i(0, 0, -1));
        assert_eq!(cross(&w2(), &w2()), AlbertElem::diag_i(-1, 0, 0));
        let c = &w1() + &w2();
        assert_eq!(cross(&c, &c), AlbertElem::diag_i(0, -1, 0));

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = sample::albert(&mut rng);
        let [s1, s2, s3] = x.s.clone();
        let mut expected = x.clone();
        expected.s = [-(&s2 + &s3), -(&s1 + &s3), -(&s1 + &s2)];
        assert_eq!(cross(&e, &x), expected.scale(&frac(-1, 2)));
    }

    #[test]
    fn random_jordan_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..40 {
            let x = sample::albert(&mut rng);
            let y = sample::albert(&mut rng);
            let z = sample::albert(&mut rng);
            assert_eq!(jordan_mul(&x, &y), jordan_mul(&y, &x));
            let xx = square(&x);
            assert_eq!(jordan_mul(&xx, &jordan_mul(&x, &y)), jordan_mul(&x, &jordan_mul(&xx, &y)));
            assert_eq!(jordan_mul(&x, &cross(&x, &x)), AlbertElem::identity().scale(&det_j(&x)));
            assert_eq!(pair(&jordan_mul(&x, &y), &z), pair(&x, &jordan_mul(&y, &z)));
            assert_eq!(pair(&cross(&x, &y), &z), int(3) * trilinear_d(&x, &y, &z));
            assert_eq!(trilinear_d(&x, &y, &z), trilinear_d_expanded(&x, &y, &z));
            assert_eq!(trilinear_d(&x, &x, &x), det_j(&x));
            let h = rat::half();
            assert_eq!(
                cross(&x, &y).trace(),
                -(&h * jordan_mul(&x, &y).trace()) + &h * x.trace() * y.trace()
            );
        }
    }

    #[test]
    fn matrix_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = sample::albert(&mut rng);
        assert_eq!(AlbertElem::from_matrix(&x.to_matrix()), Some(x.clone()));
        assert_eq!(AlbertElem::from_coords(&x.coords()), x);
        for (i, b) in JBasis::standard().iter().enumerate() {
            let c = b.coords();
            assert!(c.iter().enumerate().all(|(k, v)| *v == if k == i { int(1) } else { int(0) }));
        }
    }

    proptest! {
        #[test]
        fn cubic_norm_identities(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (x, y, z) = (sample::albert(&mut rng), sample::albert(&mut rng), sample::albert(&mut rng));
            prop_assert_eq!(pair(&cross(&x, &y), &z), int(3) * trilinear_d(&x, &y, &z));
            prop_assert_eq!(jordan_mul(&x, &cross(&x, &x)), AlbertElem::identity().scale(&det_j(&x)));
            prop_assert_eq!(trilinear_d(&x, &x, &x), det_j(&x));
            prop_assert_eq!(jordan_mul(&x, &y), jordan_mul(&y, &x));
        }
    }
}
