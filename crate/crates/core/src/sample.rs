//! Seeded random test data with small entries.
//!
//! Entries are kept to one digit (with the occasional denominator 2 or 3)
//! so that exact arithmetic through degree-12 invariants stays cheap.

use num_traits::Zero;
use rand::Rng;

use crate::albert::{det_j, AlbertElem};
use crate::gaction::GroupElem;
use crate::octonion::Oct;
use crate::pvs::{delta, VPoint};
use crate::rat::{frac, int, Rat};

pub fn rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    let p = rng.gen_range(-3..=3);
    if rng.gen_bool(0.15) {
        frac(p, rng.gen_range(2..=3))
    } else {
        int(p)
    }
}

pub fn nonzero_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    loop {
        let r = rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Integer in `-2..=2`.
pub fn small_int<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    int(rng.gen_range(-2..=2))
}

pub fn oct<R: Rng + ?Sized>(rng: &mut R) -> Oct {
    let c: Vec<Rat> = (0..8).map(|_| rat(rng)).collect();
    Oct::from_coords(&c)
}

pub fn albert<R: Rng + ?Sized>(rng: &mut R) -> AlbertElem {
    let c: Vec<Rat> = (0..27).map(|_| rat(rng)).collect();
    AlbertElem::from_coords(&c)
}

/// Integer entries in `-2..=2`; cheaper to push through high-degree maps.
pub fn albert_small<R: Rng + ?Sized>(rng: &mut R) -> AlbertElem {
    let c: Vec<Rat> = (0..27).map(|_| small_int(rng)).collect();
    AlbertElem::from_coords(&c)
}

pub fn vpoint<R: Rng + ?Sized>(rng: &mut R) -> VPoint {
    VPoint::new(albert_small(rng), albert_small(rng))
}

pub fn semistable<R: Rng + ?Sized>(rng: &mut R) -> VPoint {
    loop {
        let x = vpoint(rng);
        if !delta(&x).is_zero() {
            return x;
        }
    }
}

/// An element `a` with `det(a) ≠ 0`.
pub fn invertible<R: Rng + ?Sized>(rng: &mut R) -> AlbertElem {
    loop {
        let a = albert_small(rng);
        if !det_j(&a).is_zero() {
            return a;
        }
    }
}

fn small_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    const CHOICES: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 1)];
    let (p, q) = CHOICES[rng.gen_range(0..CHOICES.len())];
    frac(p, q)
}

/// One generator from the test subfamily: scalar, diagonal conjugation,
/// permutation conjugation, or a GL(2) factor.
pub fn generator<R: Rng + ?Sized>(rng: &mut R) -> GroupElem {
    match rng.gen_range(0..4) {
        0 => GroupElem::scalar(small_nonzero(rng)).expect("nonzero scalar"),
        1 => GroupElem::diag_conj(small_nonzero(rng), small_nonzero(rng), small_nonzero(rng))
            .expect("nonzero scalars"),
        2 => {
            let mut p = [0, 1, 2];
            for i in (1..3).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            GroupElem::perm(p).expect("valid permutation")
        }
        _ => loop {
            let m = [[small_int(rng), small_int(rng)], [small_int(rng), small_int(rng)]];
            if let Ok(g) = GroupElem::gl2(m) {
                return g;
            }
        },
    }
}

/// A product of `len` random generators.
pub fn group_elem<R: Rng + ?Sized>(rng: &mut R, len: usize) -> GroupElem {
    (0..len).fold(GroupElem::identity(), |acc, _| &acc * &generator(rng))
}
