use crate::output::{emit, Format, Report};
use anyhow::Result;
use markov_deform::arith::BigInt;
use markov_deform::bridge::{bridge_check, constant_identity, transported_equation, tree_words};
use markov_deform::castling::{
    f_ab_power, f_of_word, polycf, pq_recurrence_check, s_poly, t_markov_tree, verify_t_markov,
    TMarkovTriple,
};
use markov_deform::markov::{
    cohn_matrix_classical, commutator_trace_check, fixed_point, fricke_check, q_markov_tree,
    q_markov_value, verify_alt_deformation_1, verify_alt_deformation_2,
    verify_alt_deformation_2_corrected, verify_q_markov, verify_q_markov_scaled, CohnTriple,
    QMarkovTriple,
};
use markov_deform::tree::word_triples;
use serde::Serialize;
use serde_json::{json, Value};

/// Witnesses written to stderr are capped at this many failures.
const MAX_WITNESSES: usize = 10;

#[derive(Serialize)]
struct Summary {
    check: String,
    params: Value,
    checked: usize,
    failed: usize,
    passed: bool,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    fn finish(self, check: &str, params: Value, format: Format) -> Result<Report> {
        let summary = Summary {
            check: check.into(),
            params,
            checked: self.checked,
            failed: self.failures.len(),
            passed: self.failures.is_empty(),
        };
        let stdout = emit(format, &summary, || {
            format!(
                "{}: {} ({} checked, {} failed)\n",
                summary.check,
                if summary.passed { "ok" } else { "FAILED" },
                summary.checked,
                summary.failed
            )
        })?;
        let witness = (!self.failures.is_empty()).then(|| {
            json!({
                "check": check,
                "failed": self.failures.len(),
                "failures": self.failures.into_iter().take(MAX_WITNESSES).collect::<Vec<_>>(),
            })
        });
        Ok(Report { stdout, witness })
    }
}

fn depth_params(depth: usize) -> Value {
    json!({ "depth": depth })
}

pub fn qmarkov(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    let tree = q_markov_tree(depth);
    for (node, words) in tree.iter().zip(word_triples(depth)) {
        let q = QMarkovTriple::from_words(&words)?;
        let w = verify_q_markov(&q);
        let scaled = verify_q_markov_scaled(&q);
        let same = (&q.x, &q.y, &q.z) == (&node.values.0, &node.values.1, &node.values.2);
        t.record(
            w.holds && scaled.holds && same,
            || json!({ "triple": words.to_string(), "witness": w, "tree_values_match": same }),
        );
    }
    t.finish("qmarkov", depth_params(depth), format)
}

pub fn t_eq(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for n in t_markov_tree(depth) {
        let (x, y, z) = n.values;
        let w = verify_t_markov(&TMarkovTriple::new(x, y, z));
        t.record(
            w.holds,
            || json!({ "triple": n.words.to_string(), "witness": w }),
        );
    }
    t.finish("t-eq", depth_params(depth), format)
}

pub fn bridge(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for w in tree_words(depth) {
        let r = bridge_check(&w)?;
        t.record(r.holds, || json!({ "word": w, "witness": r }));
    }
    t.record(
        constant_identity(),
        || json!({ "constant_identity": false }),
    );
    for words in word_triples(depth) {
        let r = transported_equation(&QMarkovTriple::from_words(&words)?);
        t.record(
            r.holds,
            || json!({ "triple": words.to_string(), "transported": r }),
        );
    }
    t.finish("bridge", depth_params(depth), format)
}

pub fn fricke(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for words in word_triples(depth) {
        let c = CohnTriple::q(&words);
        for (name, x, y) in [
            ("m1,m2", &c.m1, &c.m2),
            ("m1,m12", &c.m1, &c.m12),
            ("m12,m2", &c.m12, &c.m2),
        ] {
            let r = fricke_check(x, y)?;
            t.record(
                r.holds,
                || json!({ "triple": words.to_string(), "pair": name, "witness": r }),
            );
        }
    }
    t.finish("fricke", depth_params(depth), format)
}

pub fn commutator(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for words in word_triples(depth) {
        let r = commutator_trace_check(&CohnTriple::q(&words))?;
        t.record(
            r.holds,
            || json!({ "triple": words.to_string(), "witness": r }),
        );
    }
    t.finish("commutator", depth_params(depth), format)
}

pub fn divisibility(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    let three = BigInt::from(3);
    for w in tree_words(depth) {
        let tr = cohn_matrix_classical(&w).trace();
        let h = q_markov_value(&w);
        let ok = match &h {
            Ok(h) => &h.eval_at_one() * &three == tr,
            Err(_) => false,
        };
        t.record(ok, || {
            json!({
                "word": w,
                "classical_trace": tr.to_string(),
                "q_value": h.as_ref().map(ToString::to_string).map_err(ToString::to_string),
            })
        });
    }
    t.finish("divisibility", depth_params(depth), format)
}

pub fn alt1(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for words in word_triples(depth) {
        let r = verify_alt_deformation_1(&words)?;
        t.record(
            r.holds,
            || json!({ "triple": words.to_string(), "witness": r }),
        );
    }
    t.finish("alt1", depth_params(depth), format)
}

pub fn alt2(depth: usize, corrected: bool, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for words in word_triples(depth) {
        let r = if corrected {
            verify_alt_deformation_2_corrected(&words)
        } else {
            verify_alt_deformation_2(&words)
        };
        match r {
            Ok(r) => t.record(
                r.holds,
                || json!({ "triple": words.to_string(), "witness": r }),
            ),
            Err(e) => t.record(
                false,
                || json!({ "triple": words.to_string(), "error": e.to_string() }),
            ),
        }
    }
    let params = json!({ "depth": depth, "corrected": corrected });
    t.finish("alt2", params, format)
}

pub fn chebyshev(n: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for k in 1..=n {
        let s = s_poly(k);
        t.record(s.agree(), || json!({ "s_poly": s }));
    }
    for k in 1..=n {
        let word = format!("ab^{k}").parse()?;
        let tree = f_of_word(&word)?;
        let closed = f_ab_power(k);
        t.record(
            tree == closed,
            || json!({ "n": k, "f_ab_power": closed, "tree": tree }),
        );
    }
    let pq = pq_recurrence_check(n);
    t.record(pq.holds(), || json!({ "pq": pq }));
    t.finish("chebyshev", json!({ "n": n }), format)
}

pub fn polycf(format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for c in polycf::check_all() {
        t.record(c.matches, || json!(c));
    }
    t.finish("polycf", json!({}), format)
}

pub fn fixedpoint(depth: usize, format: Format) -> Result<Report> {
    let mut t = Tally::default();
    for w in tree_words(depth) {
        let fp = fixed_point(&w)?;
        let v = fp.verify();
        let tag = fp.tag_matches();
        let pal = fp.surd.d.is_palindromic();
        t.record(
            v.holds && tag && pal,
            || json!({ "word": w, "witness": v, "tag_matches": tag, "palindromic": pal }),
        );
    }
    t.finish("fixedpoint", depth_params(depth), format)
}
