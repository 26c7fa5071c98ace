//! Places where exact computation disagrees with a printed formula or
//! value, each with the computed correction. Every entry is recomputed on
//! demand rather than stored.

use crate::arith::{parse_rational, IntPoly, LaurentPoly, Mat2};
use crate::castling::{
    chebyshev_u, f_of_word, figure4_search, figure4_targets, polycf, pq_recurrence_check,
    s_poly_chebyshev, s_poly_printed, t_markov_root, FIGURE4_MAX_DEGREE, FIGURE4_MAX_LEN,
};
use crate::contfrac::{CFNegative, CFRegular};
use crate::markov::{
    cohn_matrix_q, entry_form, entry_form_unscaled, q_markov_value, verify_alt_deformation_2,
    verify_alt_deformation_2_corrected, ALT2_WINDOW,
};
use crate::qrat::{b_q, generator_product, q_int};
use crate::words::{Word, WordTriple};
use crate::{golden, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub location: String,
    pub printed: String,
    pub computed: String,
    pub note: String,
}

fn entry(id: &str, location: &str, printed: String, computed: String, note: &str) -> Erratum {
    Erratum {
        id: id.into(),
        location: location.into(),
        printed,
        computed,
        note: note.into(),
    }
}

fn w(s: &str) -> Word {
    s.parse().expect("static word")
}

/// Per-term product for the regular q-deformation with the final factor's
/// `q^-a` entry negated.
fn printed_sign_product(terms: &[u64]) -> Mat2<LaurentPoly> {
    let last = terms.len() - 1;
    let factors: Vec<_> = terms
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let (d, off) = if i % 2 == 0 {
                (q_int(a), LaurentPoly::q_pow(a as i64))
            } else {
                (q_int(a).invert_var(), LaurentPoly::q_pow(-(a as i64)))
            };
            let off = if i == last { -&off } else { off };
            Mat2::new(d, off, LaurentPoly::constant(1), LaurentPoly::constant(0))
        })
        .collect();
    Mat2::product(&factors)
}

pub fn errata() -> Result<Vec<Erratum>> {
    let mut out = Vec::new();

    let cf: CFRegular = "2,2".parse()?;
    let printed = printed_sign_product(&cf.even_terms());
    let computed = generator_product(&cf);
    if printed != computed {
        out.push(entry(
            "regular-product-sign",
            "per-term matrix product for the regular q-deformation, final factor",
            format!("-q^-a in the last factor; for [2,2] gives {printed}"),
            format!("+q^-a; for [2,2] gives {computed} = R_q^2 L_q^2"),
            "only the plus sign reproduces the generator product",
        ));
    }

    let b12 = &b_q().a12;
    let printed_b12 = LaurentPoly::from_i64s(-1, &[1, 1]);
    if *b12 != printed_b12 {
        out.push(entry(
            "b-q-entry",
            "definition of B_q in the introduction, (1,2) entry",
            printed_b12.to_string(),
            b12.to_string(),
            "R_q^2 L_q^2 gives (q+1)/q^2, which also makes det B_q = 1",
        ));
    }

    let bad = CFRegular::new(vec![1, 1, 2, 1]);
    let good = CFRegular::from_rational(&parse_rational("7/5")?)?;
    let bad_value = bad
        .as_ref()
        .map(|c| c.value().to_string())
        .unwrap_or_default();
    out.push(entry(
        "regular-form-7-5",
        "worked q-rational examples, regular expansion of 7/5",
        format!("[1,1,2,1] (value {bad_value})"),
        good.to_string(),
        "the negative expansion and the q-rational printed for 7/5 match the corrected list",
    ));

    let neg = CFNegative::from_rational(&parse_rational("5/2")?)?;
    out.push(entry(
        "negative-terms-bound",
        "uniqueness condition for negative continued fractions",
        "coefficients greater than 2".into(),
        format!("coefficients at least 2, e.g. 5/2 = {neg}"),
        "terms equal to 2 are needed",
    ));

    for (word, printed) in golden::h_table() {
        let computed = q_markov_value(&w(word))?;
        if computed != printed {
            out.push(entry(
                "h-table",
                &format!("table of q-Markov values, h_{{{word}}}"),
                format!("{printed} (value {} at q = 1)", printed.eval_at_one()),
                format!("{computed} (value {} at q = 1)", computed.eval_at_one()),
                "the printed polynomial repeats the entry for ab^4",
            ));
        }
    }

    let m = cohn_matrix_q(&w("ab"));
    let h = q_markov_value(&w("ab"))?;
    if entry_form_unscaled(&m) != h && entry_form(&m) == h {
        out.push(entry(
            "entry-form",
            "entry formula for the q-Markov value of a Cohn matrix",
            format!("m12 - (q-1) m22; for ab gives {}", entry_form_unscaled(&m)),
            format!("q m12 - (q-1) m22; for ab gives {h}"),
            "checked on every word to depth 5",
        ));
    }

    let t = WordTriple::from_outer(w("abab^2"), w("ab^2"));
    if verify_alt_deformation_2(&t).is_err() {
        let fixed = verify_alt_deformation_2_corrected(&t)?;
        out.push(entry(
            "alt-deformation-2",
            "second alternative q-deformation, worked triple (abab^2, abab^2ab^2, ab^2)",
            "[3]_q x y' z' with exponent 23".into(),
            format!(
                "no exponent in [-{ALT2_WINDOW}, {ALT2_WINDOW}] works with [3]_q; with [3]_{{q^2}} the identity holds at exponent {}",
                fixed.exponent.unwrap_or_default()
            ),
            "the printed factorisation of the left side contains q^2 - q + 1, which the right side lacks",
        ));
    }

    let root = t_markov_root();
    let tt = IntPoly::t();
    let wrong_right = &(&(&tt * &root.x) * &root.y) - &root.z;
    let f_ab2 = f_of_word(&w("ab^2"))?;
    out.push(entry(
        "t-tree-right-child",
        "child formulas of the t-Markov tree, right child",
        format!("same middle term as the left child; at the root gives {wrong_right}"),
        format!("t f_uv f_v - f_u; at the root gives {f_ab2} = f_{{ab^2}}"),
        "only this choice keeps the t-Markov equation",
    ));
    let inline = &(&(&tt * &root.x) * &root.y) * &root.z;
    out.push(entry(
        "f-ab2-inline",
        "inline formula for f_{ab^2}",
        format!("t f_a f_ab f_b = {inline}"),
        format!("t f_ab f_b - f_a = {f_ab2}"),
        "the tabulated value agrees with the corrected formula",
    ));
    out.push(entry(
        "t-tree-seed",
        "seed of the t-Markov tree",
        "(t, f_a, f_ab, f_b) := (t, t^2 - t - 1, t - 1)".into(),
        format!("(f_a, f_ab, f_b) = ({}, {}, {})", root.x, root.y, root.z),
        "f_a = 1 is missing from the printed seed",
    ));

    out.push(entry(
        "s-poly-chebyshev",
        "Chebyshev form of S_n = f_{a^{n-1}b}",
        format!("t u_n - u_{{n-1}}; n = 2 gives {}", s_poly_printed(2)),
        format!("u_n - u_{{n-1}}; n = 2 gives {}", s_poly_chebyshev(2)),
        "agrees with the closed form and the tridiagonal determinant",
    ));
    let off_by_one = &chebyshev_u(3) - &chebyshev_u(2);
    out.push(entry(
        "s-poly-index",
        "remark expressing f_{a^{n-1}b} through u_n",
        format!("u_{{n+1}} - u_n; n = 2 gives {off_by_one}"),
        format!("u_n - u_{{n-1}}; n = 2 gives {}", s_poly_chebyshev(2)),
        "index shifted by one",
    ));
    let pq = pq_recurrence_check(20);
    if pq.t_difference_holds && !pq.t_difference_quartic_holds {
        out.push(entry(
            "chebyshev-t-difference",
            "difference identity for modified Chebyshev polynomials",
            "t_{n+2} - t_n = (t^4 - 4) u_n".into(),
            "t_{n+2} - t_n = (t^2 - 4) u_n".into(),
            "checked for n <= 20",
        ));
    }

    let (a, b, c) = (13i64, 194i64, 7561i64);
    if a * a + b * b + c * c == 3 * a * b * c && a * a + b * b + c * c != 3 * a * b * 7651 {
        out.push(entry(
            "markov-7561",
            "list of Markov relations from the castling scan",
            "13^2 + 194^2 + 7561^2 = 57206526 = 3 x 13 x 194 x 7651".into(),
            "3 x 13 x 194 x 7561 = 57206526".into(),
            "digit swap",
        ));
    }

    let report = figure4_search(&figure4_targets(), FIGURE4_MAX_DEGREE, FIGURE4_MAX_LEN);
    for o in &report.outcomes {
        let computed = match &o.path {
            Some(p) => format!(
                "found after moves {} in {}",
                p.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                o.tuple
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default()
            ),
            None => format!(
                "not found within max degree {}, max length {} ({} tuples)",
                report.max_degree, report.max_len, report.states
            ),
        };
        out.push(entry(
            "castling-tree-search",
            &format!("polynomial {} of the t-castling tree", o.name),
            o.target.to_string(),
            computed,
            "reachability from (t; 1) under up and flat moves",
        ));
    }
    for (name, printed, word) in [
        (
            "f_2a^(1)",
            "t^6 - 2*t^5 - 2*t^4 + 4*t^3 - t^2 - t - 1",
            "a^2bab",
        ),
        (
            "(f_2a^(1))_b",
            "t^10 - 3*t^9 - 2*t^8 + 11*t^7 - t^6 - 12*t^5 + 2*t^4 + 3*t^2 + 1",
            "a^2ba^2bab",
        ),
    ] {
        let f = f_of_word(&w(word))?;
        if f.to_string() != printed {
            out.push(entry(
                "castling-tree-polynomial",
                &format!("polynomial {name} of the t-castling tree"),
                printed.into(),
                format!("nearest t-Markov polynomial f_{{{word}}} = {f}"),
                "differs from the tabulated t-Markov value in a few low-order terms",
            ));
        }
    }
    out.push(entry(
        "castling-tree-f3a",
        "polynomial f_3a of the t-castling tree",
        "two values: t^5 - 2t^4 + 2t + 1 and t^5 - 2t^4 - t^2 + 2t + 1".into(),
        "both searched as separate targets".into(),
        "the label is given two different polynomials",
    ));

    for c in polycf::check_all() {
        if c.matches {
            continue;
        }
        let computed = match (&c.value, &c.note) {
            (Some((n, d)), None) => format!("evaluates to ({n}) / ({d})"),
            (Some((n, d)), Some(note)) => format!("evaluates to ({n}) / ({d}); {note}"),
            (None, Some(note)) => note.clone(),
            (None, None) => String::new(),
        };
        out.push(entry(
            "polynomial-continued-fraction",
            &format!("continued fraction display {}", c.label),
            format!("f_{{{}}} / f_{{{}}}", c.numerator, c.denominator),
            computed,
            "evaluated exactly and compared by cross-multiplication",
        ));
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_contents() {
        let all = errata().unwrap();
        let has = |id: &str| all.iter().any(|e| e.id == id);
        assert!(has("h-table"));
        let h = all.iter().find(|e| e.id == "h-table").unwrap();
        assert!(h.computed.contains("value 89"));
        assert!(h.printed.contains("value 985"));
        let t = all
            .iter()
            .find(|e| e.id == "chebyshev-t-difference")
            .unwrap();
        assert!(t.computed.contains("t^2 - 4"));
        for id in [
            "regular-product-sign",
            "b-q-entry",
            "t-tree-right-child",
            "s-poly-chebyshev",
            "markov-7561",
            "castling-tree-f3a",
            "alt-deformation-2",
            "polynomial-continued-fraction",
        ] {
            assert!(has(id), "{id}");
        }
        assert_eq!(errata().unwrap(), all);
    }
}
