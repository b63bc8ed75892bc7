//! The degree-8 equivariant map `S : V → Hom(J ⊗ J, J)`.
//!
//! For `x = (a, b)` the tensor `t₄(a, b) = (a⊗b − b⊗a)^{⊗4} ∈ J^{⊗8}`
//! expands into 16 signed pure tensors `v₁ ⊗ … ⊗ v₈`. Two kernels turn a
//! pure tensor into a bilinear map on `J`:
//!
//! ```text
//! Ψ₁(v)(X, Y) = D(v₂,v₅,v₇) D(v₄,v₆,v₈) (v₁×v₃) × (X×Y)
//! Ψ₂(v)(X, Y) = D(v₂,v₅,v₇) D(v₄,v₆,v₈) (D(v₁,v₃,X) Y + D(v₁,v₃,Y) X)
//! ```
//!
//! `Φ_i = Ψ_i(t₄(a, b))` and `S = −18 Φ₁ + (27/2) Φ₂`.
//!
//! At the base point `w` these kernels give `−18 Φ₁,w(X, Y) = X∘Y −
//! ½Tr(Y)X − ½Tr(X)Y` and `27 Φ₂,w(X, Y) = Tr(Y)X + Tr(X)Y`, so the
//! weight `27/2` on `Φ₂` is the one for which `S_w(X, Y) = X∘Y`. A weight
//! of `3/2` would instead go with `3 Φ₂,w = Tr(Y)X + Tr(X)Y`, which the
//! kernel above does not satisfy.
//!
//! `J^{⊗8}` is never materialized. The scalar factors only see `a` and
//! `b`, so [`PhiKernel`] sums the 16 terms once into a single element
//! `K = Σ ± D(v₂,v₅,v₇) D(v₄,v₆,v₈) (v₁×v₃)`, after which
//! `Φ₁(X, Y) = K × (X×Y)` and, since `3 D(v₁,v₃,X) = ⟨v₁×v₃, X⟩`,
//! `Φ₂(X, Y) = (⟨K, X⟩ Y + ⟨K, Y⟩ X) / 3`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::albert::{cross, jordan_mul, pair, trilinear_d, AlbertElem, JBasis, DIM};
use crate::error::{AlbertError, Result};
use crate::linalg::{self, Matrix};
use crate::pvs::{delta, VPoint};
use crate::rat::{self, frac, int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    A,
    B,
}

/// One pure tensor `±v₁⊗…⊗v₈` in the expansion of `t₄(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedTerm {
    pub sign: i8,
    pub slots: [Slot; 8],
}

impl SignedTerm {
    fn pick<'a>(&self, pos: usize, x: &'a VPoint) -> &'a AlbertElem {
        match self.slots[pos] {
            Slot::A => &x.a,
            Slot::B => &x.b,
        }
    }

    /// Number of `A`s among the given (0-based) positions.
    fn count_a(&self, positions: [usize; 3]) -> usize {
        positions.iter().filter(|&&p| self.slots[p] == Slot::A).count()
    }
}

/// The 16 terms of `t₄(a, b)`, ordered with the first factor most
/// significant and `(a, b)` before `(b, a)` in each factor. The sign is
/// `(−1)^(number of (b, a) factors)`.
pub fn signed_terms() -> Vec<SignedTerm> {
    (0..16u8)
        .map(|mask| {
            let mut slots = [Slot::A; 8];
            let mut flips = 0;
            for j in 0..4 {
                let swapped = mask & (1 << (3 - j)) != 0;
                flips += usize::from(swapped);
                let (first, second) = if swapped { (Slot::B, Slot::A) } else { (Slot::A, Slot::B) };
                slots[2 * j] = first;
                slots[2 * j + 1] = second;
            }
            SignedTerm { sign: if flips % 2 == 0 { 1 } else { -1 }, slots }
        })
        .collect()
}

/// The contracted form of `t₄(x)`: everything `Φ₁` and `Φ₂` need from `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiKernel {
    k: AlbertElem,
}

impl PhiKernel {
    pub fn new(x: &VPoint) -> Self {
        let (a, b) = (&x.a, &x.b);
        // D is symmetric, so D(v₂,v₅,v₇) only depends on how many of its
        // arguments are `a`: index 3 is D(a,a,a), index 0 is D(b,b,b).
        let d_by_count = [
            trilinear_d(b, b, b),
            trilinear_d(a, b, b),
            trilinear_d(a, a, b),
            trilinear_d(a, a, a),
        ];
        let aa = cross(a, a);
        let ab = cross(a, b);
        let bb = cross(b, b);
        let mut coeff = [rat::zero(), rat::zero(), rat::zero()];
        for t in signed_terms() {
            let d = &d_by_count[t.count_a([1, 4, 6])] * &d_by_count[t.count_a([3, 5, 7])];
            if d.is_zero() {
                continue;
            }
            let idx = match (t.slots[0], t.slots[2]) {
                (Slot::A, Slot::A) => 0,
                (Slot::B, Slot::B) => 2,
                _ => 1,
            };
            coeff[idx] += int(t.sign.into()) * d;
        }
        let k = &(&aa.scale(&coeff[0]) + &ab.scale(&coeff[1])) + &bb.scale(&coeff[2]);
        PhiKernel { k }
    }

    /// `K = Σ ± D(v₂,v₅,v₇) D(v₄,v₆,v₈) (v₁×v₃)`.
    pub fn element(&self) -> &AlbertElem {
        &self.k
    }

    pub fn phi1(&self, x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
        cross(&self.k, &cross(x, y))
    }

    pub fn phi2(&self, x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
        let third = frac(1, 3);
        &y.scale(&(&third * pair(&self.k, x))) + &x.scale(&(&third * pair(&self.k, y)))
    }

    pub fn s(&self, x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
        &self.phi1(x, y).scale(&phi1_weight()) + &self.phi2(x, y).scale(&phi2_weight())
    }
}

/// Weight of `Φ₁` in `S`.
pub fn phi1_weight() -> Rat {
    int(-18)
}

/// Weight of `Φ₂` in `S`.
pub fn phi2_weight() -> Rat {
    frac(27, 2)
}

/// `Φ₁,ₓ(X, Y)`.
pub fn phi1(x: &VPoint, a: &AlbertElem, b: &AlbertElem) -> AlbertElem {
    PhiKernel::new(x).phi1(a, b)
}

/// `Φ₂,ₓ(X, Y)`.
pub fn phi2(x: &VPoint, a: &AlbertElem, b: &AlbertElem) -> AlbertElem {
    PhiKernel::new(x).phi2(a, b)
}

/// `S_x(X, Y) = −18 Φ₁,ₓ(X, Y) + (27/2) Φ₂,ₓ(X, Y)`.
pub fn s_map(x: &VPoint, a: &AlbertElem, b: &AlbertElem) -> AlbertElem {
    PhiKernel::new(x).s(a, b)
}

/// `Φ₁` summed term by term with no sharing between terms.
pub fn phi1_by_terms(x: &VPoint, a: &AlbertElem, b: &AlbertElem) -> AlbertElem {
    let xy = cross(a, b);
    signed_terms().iter().fold(AlbertElem::zero(), |acc, t| {
        let v = |p: usize| t.pick(p - 1, x);
        let d = trilinear_d(v(2), v(5), v(7)) * trilinear_d(v(4), v(6), v(8));
        let term = cross(&cross(v(1), v(3)), &xy).scale(&(int(t.sign.into()) * d));
        &acc + &term
    })
}

/// `Φ₂` summed term by term with no sharing between terms.
pub fn phi2_by_terms(x: &VPoint, a: &AlbertElem, b: &AlbertElem) -> AlbertElem {
    signed_terms().iter().fold(AlbertElem::zero(), |acc, t| {
        let v = |p: usize| t.pick(p - 1, x);
        let d = int(t.sign.into()) * trilinear_d(v(2), v(5), v(7)) * trilinear_d(v(4), v(6), v(8));
        let term = &b.scale(&trilinear_d(v(1), v(3), a)) + &a.scale(&trilinear_d(v(1), v(3), b));
        &acc + &term.scale(&d)
    })
}

/// `X ∘_x Y = Δ(x)⁻¹ S_x(X, Y)`, the product of the algebra `M_x`.
pub fn circ_x(x: &VPoint, a: &AlbertElem, b: &AlbertElem) -> Result<AlbertElem> {
    let d = delta(x);
    if d.is_zero() {
        return Err(AlbertError::NotSemistable);
    }
    Ok(s_map(x, a, b).scale(&d.recip()))
}

/// Element of `Hom(J ⊗ J, J)` in [`JBasis`]: entry `(i, j, k)` is the
/// `k`-th coordinate of `bᵢ · bⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    entries: Vec<Rat>,
}

impl StructureTensor {
    pub const LEN: usize = DIM * DIM * DIM;

    pub fn zeros() -> Self {
        StructureTensor { entries: vec![rat::zero(); Self::LEN] }
    }

    pub fn from_entries(entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != Self::LEN {
            return Err(AlbertError::Dimension { expected: Self::LEN, got: entries.len() });
        }
        Ok(StructureTensor { entries })
    }

    /// Tabulates a bilinear product on basis pairs, in parallel over rows.
    pub fn tabulate<F>(f: F) -> Self
    where
        F: Fn(&AlbertElem, &AlbertElem) -> AlbertElem + Sync,
    {
        let basis = JBasis::standard();
        let rows: Vec<Vec<Rat>> = (0..DIM)
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::with_capacity(DIM * DIM);
                for j in 0..DIM {
                    row.extend(f(basis.get(i), basis.get(j)).coords());
                }
                row
            })
            .collect();
        StructureTensor { entries: rows.concat() }
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.entries[(i * DIM + j) * DIM + k]
    }

    /// The product `bᵢ · bⱼ` as an element.
    pub fn basis_product(&self, i: usize, j: usize) -> AlbertElem {
        let start = (i * DIM + j) * DIM;
        AlbertElem::from_coords(&self.entries[start..start + DIM])
    }

    /// Evaluates the bilinear product on arbitrary arguments.
    pub fn apply(&self, x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
        let (cx, cy) = (x.coords(), y.coords());
        let mut out = vec![rat::zero(); DIM];
        for (i, xi) in cx.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in cy.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let t = self.get(i, j, k);
                    if !t.is_zero() {
                        *o += &w * t;
                    }
                }
            }
        }
        AlbertElem::from_coords(&out)
    }

    pub fn scale(&self, t: &Rat) -> Self {
        StructureTensor { entries: self.entries.iter().map(|e| t * e).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// A two-sided unit, if the algebra has one. Solves `u · bⱼ = bⱼ` for
    /// all `j` as a 729 × 27 linear system.
    pub fn unit(&self) -> Option<AlbertElem> {
        let m = Matrix::from_fn(DIM * DIM, DIM, |row, i| self.get(i, row / DIM, row % DIM).clone());
        let rhs: Vec<Rat> = (0..DIM * DIM).map(|row| if row / DIM == row % DIM { rat::one() } else { rat::zero() }).collect();
        let u = AlbertElem::from_coords(&linalg::solve_consistent(&m, &rhs)?);
        let basis = JBasis::standard();
        basis.iter().all(|b| self.apply(b, &u) == *b).then_some(u)
    }

    /// Symmetric in the two input slots.
    pub fn is_commutative(&self) -> bool {
        (0..DIM).all(|i| (0..i).all(|j| (0..DIM).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }
}

/// Structure constants of `(J, ∘)`.
pub fn jordan_tensor() -> StructureTensor {
    StructureTensor::tabulate(jordan_mul)
}

/// `S_x` tabulated on all basis pairs. The kernel is computed once and
/// shared by all 729 pairs.
pub fn structure_tensor(x: &VPoint) -> StructureTensor {
    let kernel = PhiKernel::new(x);
    if kernel.element().is_zero() {
        return StructureTensor::zeros();
    }
    StructureTensor::tabulate(|a, b| kernel.s(a, b))
}

/// Structure constants of `M_x`, i.e. `Δ(x)⁻¹ S_x`.
pub fn isotope_tensor(x: &VPoint) -> Result<StructureTensor> {
    let d = delta(x);
    if d.is_zero() {
        return Err(AlbertError::NotSemistable);
    }
    Ok(structure_tensor(x).scale(&d.recip()))
}

/// Closed form of `−18 Φ₁,w(X, Y)`: `X∘Y − ½Tr(Y)X − ½Tr(X)Y`.
pub fn phi1_at_w_reference(x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    let h = rat::half();
    &(&jordan_mul(x, y) - &x.scale(&(&h * y.trace()))) - &y.scale(&(&h * x.trace()))
}

/// `Tr(Y)X + Tr(X)Y`, which equals `27 Φ₂,w(X, Y)`.
pub fn phi2_at_w_reference(x: &AlbertElem, y: &AlbertElem) -> AlbertElem {
    &x.scale(&y.trace()) + &y.scale(&x.trace())
}
