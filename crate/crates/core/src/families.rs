//! Closed forms for Fibonacci and Lucas cubes and for Cartesian products of
//! modular graphs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::{binomial, exact_div, BigCount, ExactRatio};
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, wiener_from_distances};
use crate::structure::is_modular_with;

/// Factors up to this size are re-checked for modularity by
/// [`sw3_product_modular`].
pub const PRODUCT_RECHECK_LIMIT: usize = 200;

/// `F_n` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> BigCount {
    fib_pair(n).0
}

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair(n: u64) -> (BigCount, BigCount) {
    if n == 0 {
        return (BigCount::zero(), BigCount::one());
    }
    let (a, b) = fib_pair(n / 2);
    // F_2k = F_k (2F_{k+1} − F_k), F_2k+1 = F_k² + F_{k+1}²
    let c = &a * (&b * 2u32 - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// `L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: u64) -> BigCount {
    if n == 0 {
        return BigCount::from(2u32);
    }
    // L_n = F_{n−1} + F_{n+1} = 2F_{n+1} − F_n
    let (f, f1) = fib_pair(n);
    f1 * 2u32 - f
}

/// `4(n+1)F_n² + (9n+2)F_nF_{n+1} + 6nF_{n+1}²`, the bracket shared by the
/// Fibonacci-cube Wiener and Steiner formulas.
fn fibonacci_cube_bracket(n: u64) -> BigCount {
    let (f, f1) = fib_pair(n);
    &f * &f * (4 * (n + 1)) + &f * &f1 * (9 * n + 2) + &f1 * &f1 * (6 * n)
}

/// `W(Γ_n) = bracket / 25`.
pub fn wiener_fibonacci_closed(n: u64) -> Result<BigCount> {
    exact_div(fibonacci_cube_bracket(n), 25, "W(fibonacci cube)")
}

/// `W(Λ_n) = n F_{n−1} F_{n+1}`; `Λ_0 = K1` gives 0.
pub fn wiener_lucas_closed(n: u64) -> Result<BigCount> {
    if n == 0 {
        return Ok(BigCount::zero());
    }
    Ok(fibonacci(n - 1) * fibonacci(n + 1) * n)
}

/// `SW₃(Γ_n) = (F_{n+2} − 2) · bracket / 50`.
pub fn sw3_fibonacci_closed(n: u64) -> Result<BigCount> {
    let order = fibonacci(n + 2);
    if order < BigUint::from(2u32) {
        return Ok(BigCount::zero());
    }
    exact_div((order - 2u32) * fibonacci_cube_bracket(n), 50, "SW3(fibonacci cube)")
}

/// `SW₃(Λ_n) = (n/2) F_{n−1} F_{n+1} (L_n − 2)`; zero for `n <= 1`.
pub fn sw3_lucas_closed(n: u64) -> Result<BigCount> {
    if n <= 1 {
        return Ok(BigCount::zero());
    }
    let value = fibonacci(n - 1) * fibonacci(n + 1) * (lucas(n) - 2u32) * n;
    exact_div(value, 2, "SW3(lucas cube)")
}

/// Vertex count of the cube: `F_{n+2}` or `L_n` (`Λ_0 = K1`).
pub fn cube_order(family: Family, n: u64) -> Result<BigCount> {
    match family {
        Family::FibonacciCube => Ok(fibonacci(n + 2)),
        Family::LucasCube if n == 0 => Ok(BigCount::one()),
        Family::LucasCube => Ok(lucas(n)),
        Family::Hypercube => Ok(BigCount::one() << n as usize),
        other => Err(Error::range(format!("{other} has no cube order"))),
    }
}

/// Closed-form `SW₃` of the Fibonacci or Lucas cube of dimension `n`.
pub fn sw3_cube_closed(family: Family, n: u64) -> Result<BigCount> {
    match family {
        Family::FibonacciCube => sw3_fibonacci_closed(n),
        Family::LucasCube => sw3_lucas_closed(n),
        other => Err(Error::range(format!("no SW3 closed form for {other}"))),
    }
}

/// Closed-form `W` of the Fibonacci or Lucas cube of dimension `n`.
pub fn wiener_cube_closed(family: Family, n: u64) -> Result<BigCount> {
    match family {
        Family::FibonacciCube => wiener_fibonacci_closed(n),
        Family::LucasCube => wiener_lucas_closed(n),
        other => Err(Error::range(format!("no Wiener closed form for {other}"))),
    }
}

/// `μ₃(cube_n) / n = SW₃ / (C(|V|, 3) · n)`, exact.
pub fn mu3_ratio(n: u64, family: Family) -> Result<ExactRatio> {
    let order = cube_order(family, n)?;
    let order: u64 = order
        .try_into()
        .map_err(|_| Error::range("cube order exceeds u64"))?;
    if n == 0 || order < 3 {
        return Err(Error::range(format!(
            "{family} cube of dimension {n} has fewer than three vertices"
        )));
    }
    let sw3 = sw3_cube_closed(family, n)?;
    ExactRatio::new(sw3, binomial(order, 3) * n)
}

/// `SW₃(G □ H) = (|G||H| − 2)/2 · (|G|² W(H) + |H|² W(G))` for modular,
/// connected factors, without building the product.
pub fn sw3_product_modular(g: &Graph, h: &Graph) -> Result<BigCount> {
    let (dg, dh) = (all_pairs_distances(g)?, all_pairs_distances(h)?);
    for (graph, d) in [(g, &dg), (h, &dh)] {
        if graph.n() == 0 {
            return Err(Error::range("product factors must be nonempty"));
        }
        if graph.n() <= PRODUCT_RECHECK_LIMIT && !is_modular_with(d) {
            return Err(Error::NotModular);
        }
    }
    let (ng, nh) = (g.n() as u64, h.n() as u64);
    let (wg, wh) = (wiener_from_distances(&dg), wiener_from_distances(&dh));
    let w_product = wh * (ng * ng) + wg * (nh * nh);
    let order = ng * nh;
    if order < 2 {
        return Ok(BigCount::zero());
    }
    exact_div(w_product * (order - 2), 2, "SW3(product)")
}

/// The factor-`SW₃` form of the product formula,
/// `(|G||H| − 2)(|G|²/(|H|−2) SW₃(H) + |H|²/(|G|−2) SW₃(G))`.
/// Undefined (`None`) unless both factors have more than two vertices.
pub fn sw3_product_from_factor_sw3(
    ng: u64,
    nh: u64,
    sw3_g: &BigCount,
    sw3_h: &BigCount,
) -> Option<ExactRatio> {
    if ng <= 2 || nh <= 2 {
        return None;
    }
    let left = ExactRatio::new(sw3_h * (ng * ng), nh - 2).ok()?;
    let right = ExactRatio::new(sw3_g * (nh * nh), ng - 2).ok()?;
    Some(left.add(&right).mul(&ExactRatio::integer(ng * nh - 2)))
}
