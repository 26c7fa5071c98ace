//! Modified Chebyshev polynomials `t_n(x) = 2 T_n(x/2)`, `u_n(x) = U_n(x/2)`
//! and the spines `f_{a^n b}`, `f_{ab^n}` of the t-Markov tree.

use crate::arith::{BigInt, IntPoly};
use serde::{Deserialize, Serialize};

fn t() -> IntPoly {
    IntPoly::t()
}

fn c(n: i64) -> IntPoly {
    IntPoly::constant(n)
}

/// Runs `x_{k+1} = t x_k - x_{k-1}` from `(x0, x1)` and returns `x_n`.
fn three_term(x0: IntPoly, x1: IntPoly, n: usize) -> IntPoly {
    let (mut a, mut b) = (x0, x1);
    for _ in 0..n {
        let next = &(&t() * &b) - &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `t_0 = 2`, `t_1 = t`.
pub fn chebyshev_t(n: usize) -> IntPoly {
    three_term(c(2), t(), n)
}

/// `u_0 = 1`, `u_1 = t`.
pub fn chebyshev_u(n: usize) -> IntPoly {
    three_term(c(1), t(), n)
}

/// `u_n` with `u_{-1} = 0`.
fn u_signed(n: i64) -> IntPoly {
    if n < 0 {
        assert_eq!(n, -1, "u_n only extended to n = -1");
        IntPoly::default()
    } else {
        chebyshev_u(n as usize)
    }
}

/// `S_n = f_{a^{n-1} b}` by `S_{n+1} = t S_n - S_{n-1}`, `S_0 = 1`, `S_1 = t - 1`.
pub fn s_poly_recurrence(n: usize) -> IntPoly {
    three_term(c(1), IntPoly::from_i64s(&[-1, 1]), n)
}

/// `u_n - u_{n-1}`.
pub fn s_poly_chebyshev(n: usize) -> IntPoly {
    &chebyshev_u(n) - &u_signed(n as i64 - 1)
}

/// `t u_n - u_{n-1}`, the form that does not match `S_n`.
pub fn s_poly_printed(n: usize) -> IntPoly {
    &(&t() * &chebyshev_u(n)) - &u_signed(n as i64 - 1)
}

/// Determinant of the `n x n` tridiagonal matrix with diagonal
/// `(t - 1, t, ..., t)` and ones beside it, by fraction-free (Bareiss)
/// elimination. `n = 0` gives the empty determinant 1.
pub fn s_poly_determinant(n: usize) -> IntPoly {
    if n == 0 {
        return c(1);
    }
    let mut m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    (0, 0) => IntPoly::from_i64s(&[-1, 1]),
                    _ if i == j => t(),
                    _ if i.abs_diff(j) == 1 => c(1),
                    _ => IntPoly::default(),
                })
                .collect()
        })
        .collect();
    let mut prev = c(1);
    for k in 0..n - 1 {
        // pivots stay nonzero: every leading minor is some S_j
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.divexact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SPolyForms {
    pub n: usize,
    pub recurrence: IntPoly,
    pub chebyshev: IntPoly,
    pub determinant: IntPoly,
}

impl SPolyForms {
    pub fn agree(&self) -> bool {
        self.recurrence == self.chebyshev && self.chebyshev == self.determinant
    }
}

pub fn s_poly(n: usize) -> SPolyForms {
    SPolyForms {
        n,
        recurrence: s_poly_recurrence(n),
        chebyshev: s_poly_chebyshev(n),
        determinant: s_poly_determinant(n),
    }
}

fn x_poly() -> IntPoly {
    IntPoly::from_i64s(&[0, -1, 1])
}

/// `(t_n(x) + (x + shift) u_{n-1}(x)) / 2` at `x = t^2 - t`.
fn half_combo(n: usize, shift: i64) -> IntPoly {
    let x = x_poly();
    let tn = chebyshev_t(n).compose(&x);
    let un1 = u_signed(n as i64 - 1).compose(&x);
    let twice = &tn + &(&(&x + &c(shift)) * &un1);
    twice
        .div_scalar_exact(&BigInt::from(2))
        .expect("t_n + (x +- 2) u_{n-1} has even coefficients")
}

/// `p_n = t_n(x)/2 + (x - 2) u_{n-1}(x)/2` with `x = t^2 - t`.
pub fn p_poly(n: usize) -> IntPoly {
    half_combo(n, -2)
}

/// `q_n = t_n(x)/2 + (x + 2) u_{n-1}(x)/2` with `x = t^2 - t`.
pub fn q_poly(n: usize) -> IntPoly {
    half_combo(n, 2)
}

/// Closed form of `f_{ab^n}`; equal to `p_n`.
pub fn f_ab_power(n: usize) -> IntPoly {
    p_poly(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqReport {
    pub n_max: usize,
    /// `p_{n+2} - p_n = (t^2-t-2) q_{n+1}` and `q_{n+2} - q_n = (t^2-t+2) p_{n+1}`.
    pub pq_holds: bool,
    /// `u_{n+2} - u_n = t_{n+2}`.
    pub u_difference_holds: bool,
    /// `t_{n+2} - t_n = (t^2 - 4) u_n`.
    pub t_difference_holds: bool,
    /// The same with `t^4 - 4` in place of `t^2 - 4`.
    pub t_difference_quartic_holds: bool,
    pub first_failure: Option<String>,
}

impl PqReport {
    pub fn holds(&self) -> bool {
        self.pq_holds && self.u_difference_holds && self.t_difference_holds
    }
}

pub fn pq_recurrence_check(n_max: usize) -> PqReport {
    let minus = IntPoly::from_i64s(&[-2, -1, 1]);
    let plus = IntPoly::from_i64s(&[2, -1, 1]);
    let t2m4 = IntPoly::from_i64s(&[-4, 0, 1]);
    let t4m4 = IntPoly::from_i64s(&[-4, 0, 0, 0, 1]);
    let mut r = PqReport {
        n_max,
        pq_holds: true,
        u_difference_holds: true,
        t_difference_holds: true,
        t_difference_quartic_holds: true,
        first_failure: None,
    };
    let fail = |r: &mut PqReport, what: String| {
        if r.first_failure.is_none() {
            r.first_failure = Some(what);
        }
    };
    for n in 0..=n_max {
        let ok_p = &p_poly(n + 2) - &p_poly(n) == &minus * &q_poly(n + 1);
        let ok_q = &q_poly(n + 2) - &q_poly(n) == &plus * &p_poly(n + 1);
        if !(ok_p && ok_q) {
            r.pq_holds = false;
            fail(&mut r, format!("p/q recurrence at n = {n}"));
        }
        if &chebyshev_u(n + 2) - &chebyshev_u(n) != chebyshev_t(n + 2) {
            r.u_difference_holds = false;
            fail(&mut r, format!("u difference at n = {n}"));
        }
        let dt = &chebyshev_t(n + 2) - &chebyshev_t(n);
        if dt != &t2m4 * &chebyshev_u(n) {
            r.t_difference_holds = false;
            fail(&mut r, format!("t difference at n = {n}"));
        }
        if dt != &t4m4 * &chebyshev_u(n) {
            r.t_difference_quartic_holds = false;
        }
    }
    r
}
