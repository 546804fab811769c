//! Reference values printed for a few worked ideals that disagree with what
//! this crate computes. Each note is attached to a report whenever the
//! evaluated ideal equals the stored one.

use crate::ideal::MonomialIdeal;

use super::expr::parse;

struct Entry {
    expr: &'static str,
    notes: &'static [&'static str],
}

const ENTRIES: &[Entry] = &[
    Entry {
        expr: "sbt(x2^6*x3^7)",
        notes: &[
            "reference value chi_2^(1) = 23 is printed as (6+7-1) + 2*5, which evaluates to 22; \
             enumeration gives s(J^sat/J) = 23 at the first chain step and reg = 24",
        ],
    },
    Entry {
        expr: "dfix(x2^7, x3^10, x5^17; 1|2|6|12)",
        notes: &[
            "reference value reg = 27 conflicts with chi = (15, 22): sum(chi) + 1 = 38, the reference \
             socle element x1^5*x2^5*x3^5*x4^11*x5^11 has degree 37, and enumeration gives reg = 38",
        ],
    },
    Entry {
        expr: "dfix(x1^2, x2^7, x3^16; 1|4|12)",
        notes: &[
            "reference value chi_3 = 19; the recursion and enumeration give chi_3 = 15",
            "reference value reg = 23; enumeration gives max socle degree 19 and reg = 20",
            "reference socle element x1*x2^3*x3^19 lies in the ideal (x3^16 divides it); \
             enumeration gives the socle element x1*x2^3*x3^15 in top degree",
        ],
    },
];

pub(crate) fn notes_for(ideal: &MonomialIdeal) -> Vec<String> {
    let mut out = Vec::new();
    for entry in ENTRIES {
        let expr = parse(entry.expr).expect("reference expressions parse");
        let Ok(n) = expr.ambient(None) else { continue };
        if n != ideal.ambient() {
            continue;
        }
        if expr.eval(n).ok().as_ref() == Some(ideal) {
            out.extend(entry.notes.iter().map(|s| s.to_string()));
        }
    }
    out
}
