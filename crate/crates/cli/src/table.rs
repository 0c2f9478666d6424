//! Plain-text rendering for people.

use std::fmt::Write;

use crate::document::{Big, Body, CofinitenessWitnesses, ResultDocument};

fn point(v: &[Big]) -> String {
    let parts: Vec<String> = v.iter().map(Big::to_string).collect();
    format!("({})", parts.join(", "))
}

fn opt(v: &Option<Big>) -> String {
    v.as_ref().map_or_else(|| "-".into(), Big::to_string)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn points(out: &mut String, title: &str, vs: &[Vec<Big>]) {
    let _ = writeln!(out, "{title} ({}):", vs.len());
    for v in vs {
        let _ = writeln!(out, "  {}", point(v));
    }
}

fn cofiniteness(out: &mut String, w: &CofinitenessWitnesses) {
    let _ = writeln!(out, "axis semigroups:");
    for a in &w.axis_semigroups {
        let detail = match (&a.generators, &a.gcd) {
            (Some(g), _) => format!("<{}>", g.iter().map(Big::to_string).collect::<Vec<_>>().join(", ")),
            (None, Some(gcd)) => format!("not numerical, gcd {gcd}"),
            (None, None) => "not numerical".into(),
        };
        let _ = writeln!(out, "  S_{}  {detail}", a.generator + 1);
    }
    if !w.mixing.is_empty() {
        let _ = writeln!(out, "mixing coefficients:");
        for m in &w.mixing {
            let _ = writeln!(out, "  n_{}^({})  {}", m.i + 1, m.j + 1, opt(&m.n));
        }
    }
}

pub fn render(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", doc.kind.name());
    match &doc.body {
        Body::RelativeGaps { finite, gaps, witnesses } => {
            let _ = writeln!(out, "finite: {}", yes_no(*finite));
            if let Some(g) = gaps {
                points(&mut out, "gaps", g);
            }
            cofiniteness(&mut out, witnesses);
        }
        Body::CofiniteCheck { cofinite, witnesses } => {
            let _ = writeln!(out, "cofinite: {}", yes_no(*cofinite));
            cofiniteness(&mut out, witnesses);
        }
        Body::Complement { base, finite, complement, methods } => {
            points(&mut out, "base", base);
            let _ = writeln!(out, "finite: {}", yes_no(*finite));
            if let Some(c) = complement {
                points(&mut out, "complement", c);
            }
            let _ = writeln!(out, "{:<10} {:<7} witnesses", "method", "finite");
            for m in methods {
                let ks: Vec<String> = m.witnesses.iter().map(opt).collect();
                let _ = writeln!(out, "{:<10} {:<7} {}", m.method.name(), yes_no(m.finite), ks.join(" "));
            }
        }
        Body::Hilbert { rhs, solutions } => {
            if let Some(b) = rhs {
                let _ = writeln!(out, "rhs: {}", point(b));
                points(&mut out, "minimal solutions", solutions);
            } else {
                points(&mut out, "hilbert basis", solutions);
            }
        }
        Body::Factorize { element, member, factorizations } => {
            let _ = writeln!(out, "element: {}", point(element));
            let _ = writeln!(out, "member: {}", yes_no(*member));
            points(&mut out, "factorizations", factorizations);
        }
    }
    if let Some(t) = &doc.timing {
        for (stage, ms) in t {
            let _ = writeln!(out, "time {stage}: {ms}");
        }
    }
    out
}
