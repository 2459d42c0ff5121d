//! Canonical text forms. Everything printed here parses back with [`crate::parse`].

use num_bigint::Sign;
use rsumset::sumset::FSet;
use rsumset::{BPoly, Fe, FieldCtx, UPoly};

/// GF(p): the residue. Extensions: ascending `t`-polynomial such as `1+t` or
/// `2+t^2`. Q: `a` or `a/b`.
pub fn element(e: &Fe) -> String {
    match e {
        Fe::Prime(v) => v.to_string(),
        Fe::Rat(r) => r.to_string(),
        Fe::Ext(cs) => {
            let parts: Vec<String> = cs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| match (i, c) {
                    (0, c) => c.to_string(),
                    (1, 1) => "t".into(),
                    (1, c) => format!("{c}*t"),
                    (i, 1) => format!("t^{i}"),
                    (i, c) => format!("{c}*t^{i}"),
                })
                .collect();
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join("+")
            }
        }
    }
}

/// Sign and magnitude text of a coefficient. Only rationals are ever negative.
fn split_sign(e: &Fe) -> (bool, String) {
    match e {
        Fe::Rat(r) if r.numer().sign() == Sign::Minus => (true, (-r).to_string()),
        _ => (false, element(e)),
    }
}

fn monomial(i: usize, j: usize) -> String {
    let var = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        e => Some(format!("{v}^{e}")),
    };
    [var("x", i), var("y", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

fn is_one(e: &Fe) -> bool {
    match e {
        Fe::Prime(v) => *v == 1,
        Fe::Ext(cs) => cs.first() == Some(&1) && cs[1..].iter().all(|&c| c == 0),
        Fe::Rat(r) => r.is_integer() && r.numer() == &1.into(),
    }
}

fn join_terms(terms: impl IntoIterator<Item = ((usize, usize), Fe)>) -> String {
    let mut out = String::new();
    for (n, ((i, j), c)) in terms.into_iter().enumerate() {
        let (neg, mag) = split_sign(&c);
        let mono = monomial(i, j);
        let coeff = if matches!(c, Fe::Ext(_)) && mag.contains('+') { format!("({mag})") } else { mag };
        let body = match (mono.is_empty(), is_one(&c) || (neg && coeff == "1")) {
            (true, _) => coeff,
            (false, true) => mono,
            (false, false) => format!("{coeff}*{mono}"),
        };
        match (n, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Terms by descending total degree, then descending power of `x`; unit
/// coefficients are omitted and multi-term extension coefficients parenthesised.
pub fn poly(p: &BPoly) -> String {
    let mut terms: Vec<((usize, usize), Fe)> = p.terms().map(|(k, c)| (k, c.clone())).collect();
    terms.sort_by(|((a, b), _), ((c, d), _)| (c + d, c).cmp(&(a + b, a)));
    join_terms(terms)
}

/// Descending powers of `x`.
pub fn upoly(p: &UPoly) -> String {
    let terms: Vec<((usize, usize), Fe)> =
        p.support().collect::<Vec<_>>().into_iter().rev().map(|i| ((i, 0), p.coeff(i))).collect();
    join_terms(terms)
}

pub fn set(s: &FSet) -> String {
    let items: Vec<String> = s.elems().iter().map(element).collect();
    format!("{{{}}}", items.join(","))
}

/// `7`, `2^2/x^2+x+1` or `Q`; always accepted by [`crate::parse::parse_field`].
pub fn field(ctx: &FieldCtx) -> String {
    match (ctx.characteristic().prime(), ctx.modulus()) {
        (None, _) => "Q".into(),
        (Some(p), None) => p.to_string(),
        (Some(p), Some(m)) => {
            let n = m.degree().finite().expect("nonzero modulus");
            format!("{p}^{n}/{}", upoly(&m).replace(' ', ""))
        }
    }
}
