//! Small well-known algebras used across tests, docs, and fixtures.

use crate::lie::LieAlgebra;
use crate::linalg::{rat, Rat};

fn coeffs(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat(x)).collect()
}

/// The abelian algebra of dimension `n`, named `an`, basis `e1 … en`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("a{n}"), n)
}

/// The 3-dimensional Heisenberg algebra: `[e1, e2] = e3`, `e3` central.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::new(
        "heis3",
        vec!["e1".into(), "e2".into(), "e3".into()],
        vec![((0, 1), coeffs(&[0, 0, 1]))],
    )
    .expect("Heisenberg table satisfies Jacobi")
}

/// `sl2` over ℚ in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = −2f`,
/// `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        "sl2",
        vec!["h".into(), "e".into(), "f".into()],
        vec![
            ((0, 1), coeffs(&[0, 2, 0])),
            ((0, 2), coeffs(&[0, 0, -2])),
            ((1, 2), coeffs(&[1, 0, 0])),
        ],
    )
    .expect("sl2 table satisfies Jacobi")
}

/// The nonabelian 2-dimensional algebra: `[x, y] = y`.
pub fn solvable2() -> LieAlgebra {
    LieAlgebra::new("solv2", vec!["x".into(), "y".into()], vec![((0, 1), coeffs(&[0, 1]))])
        .expect("two-dimensional table satisfies Jacobi")
}

/// The 3-dimensional solvable algebra `[x, y] = y`, `[x, z] = 2z` — a
/// centerless algebra that is not complete: its derivations are spanned by
/// `ad x`, `ad y`, `ad z` and `y ↦ y`, leaving one outer class.
pub fn solvable3() -> LieAlgebra {
    LieAlgebra::new(
        "solv3",
        vec!["x".into(), "y".into(), "z".into()],
        vec![((0, 1), coeffs(&[0, 1, 0])), ((0, 2), coeffs(&[0, 0, 2]))],
    )
    .expect("weighted solvable table satisfies Jacobi")
}
