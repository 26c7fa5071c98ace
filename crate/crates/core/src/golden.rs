//! Printed reference values: q-Markov values `h_w(q)` and t-Markov values
//! `f_w(t)` for small Christoffel words, transcribed as printed (including
//! the bad `a^4b` entry, which repeats the `ab^4` polynomial).

use crate::arith::{IntPoly, LaurentPoly};

/// `(word, k, coefficients highest first)` meaning `q^k * (poly)`.
pub const H_TABLE: &[(&str, i64, &[i64])] = &[
    ("a", -1, &[1]),
    ("b", -2, &[1, 0, 1]),
    ("ab", -3, &[1, 1, 1, 1, 1]),
    ("a^2b", -4, &[1, 2, 2, 3, 2, 2, 1]),
    ("ab^2", -5, &[1, 2, 4, 5, 5, 5, 4, 2, 1]),
    ("a^3b", -5, &[1, 3, 4, 6, 6, 6, 4, 3, 1]),
    (
        "a^2bab",
        -7,
        &[1, 4, 9, 16, 23, 29, 30, 29, 23, 16, 9, 4, 1],
    ),
    (
        "abab^2",
        -8,
        &[1, 4, 11, 22, 36, 50, 60, 65, 60, 50, 36, 22, 11, 4, 1],
    ),
    ("ab^3", -7, &[1, 3, 8, 14, 20, 25, 27, 25, 20, 14, 8, 3, 1]),
    (
        "a^4b",
        -9,
        &[
            1, 4, 13, 29, 53, 82, 110, 131, 139, 131, 110, 82, 53, 29, 13, 4, 1,
        ],
    ),
    (
        "a^3ba^2b",
        -9,
        &[
            1, 6, 18, 40, 72, 110, 148, 175, 185, 175, 148, 110, 72, 40, 18, 6, 1,
        ],
    ),
    (
        "a^2ba^2bab",
        -11,
        &[
            1, 7, 26, 70, 151, 276, 440, 623, 793, 914, 959, 914, 793, 623, 440, 276, 151, 70, 26,
            7, 1,
        ],
    ),
    (
        "a^2babab",
        -10,
        &[
            1, 6, 20, 49, 97, 164, 240, 313, 366, 385, 366, 313, 240, 164, 97, 49, 20, 6, 1,
        ],
    ),
    (
        "ababab^2",
        -11,
        &[
            1, 6, 22, 59, 128, 235, 375, 533, 679, 784, 822, 784, 679, 533, 375, 235, 128, 59, 22,
            6, 1,
        ],
    ),
    (
        "abab^2ab^2",
        -13,
        &[
            1, 7, 30, 94, 237, 504, 932, 1531, 2264, 3045, 3746, 4236, 4412, 4236, 3746, 3045,
            2264, 1531, 932, 504, 237, 94, 30, 7, 1,
        ],
    ),
    (
        "ab^2ab^3",
        -12,
        &[
            1, 6, 24, 70, 165, 328, 567, 870, 1201, 1504, 1717, 1795, 1717, 1504, 1201, 870, 567,
            328, 165, 70, 24, 6, 1,
        ],
    ),
    (
        "ab^4",
        -9,
        &[
            1, 4, 13, 29, 53, 82, 110, 131, 139, 131, 110, 82, 53, 29, 13, 4, 1,
        ],
    ),
];

/// Word whose printed `h_w` is known to be wrong.
pub const H_MISPRINTED: &str = "a^4b";

/// `(word, coefficients highest first)`.
pub const F_TABLE: &[(&str, &[i64])] = &[
    ("a", &[1]),
    ("b", &[1, -1]),
    ("ab", &[1, -1, -1]),
    ("a^2b", &[1, -1, -2, 1]),
    ("ab^2", &[1, -2, 0, 1, -1]),
    ("a^3b", &[1, -1, -3, 2, 1]),
    ("a^2bab", &[1, -2, -2, 4, 1, -1, -1]),
    ("abab^2", &[1, -3, 1, 3, -2, 0, 0, 1]),
    ("ab^3", &[1, -3, 2, 1, -3, 2, 1]),
    ("a^4b", &[1, -1, -4, 3, 3, -1]),
    ("a^3ba^2b", &[1, -2, -4, 8, 4, -8, 0, 1, -1]),
    ("a^2ba^2bab", &[1, -3, -2, 11, -1, -12, 2, 4, 0, 0, 1]),
    ("a^2babab", &[1, -3, -1, 8, -1, -6, -2, 3, 3, -1]),
    ("ababab^2", &[1, -4, 3, 5, -6, -1, 1, 3, -1, -2, 1]),
    ("abab^2ab^2", &[1, -5, 7, 2, -12, 8, 2, -4, 0, 0, 0, 0, 1]),
    ("ab^2ab^3", &[1, -5, 8, -2, -9, 13, -4, -6, 5, -1, -2, 1]),
    ("ab^4", &[1, -4, 5, -1, -5, 7, -1, -2, 1]),
];

fn reversed(c: &[i64]) -> Vec<i64> {
    c.iter().rev().copied().collect()
}

pub fn laurent(k: i64, hi_to_lo: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(k, &reversed(hi_to_lo))
}

pub fn poly(hi_to_lo: &[i64]) -> IntPoly {
    IntPoly::from_i64s(&reversed(hi_to_lo))
}

/// Printed `h_w` values as Laurent polynomials.
pub fn h_table() -> Vec<(&'static str, LaurentPoly)> {
    H_TABLE
        .iter()
        .map(|&(w, k, c)| (w, laurent(k, c)))
        .collect()
}

/// Printed `f_w` values.
pub fn f_table() -> Vec<(&'static str, IntPoly)> {
    F_TABLE.iter().map(|&(w, c)| (w, poly(c))).collect()
}
