use std::fmt::Write;

use crate::presentation::Quiver;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders a quiver in DOT format: one node per vertex in index order, then one
/// edge per arrow in index order.
pub fn emit_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph Q {\n");
    for (v, label) in q.vertices().iter().enumerate() {
        writeln!(out, "  v{v} [label={}];", quote(label)).unwrap();
    }
    for a in q.arrows() {
        writeln!(
            out,
            "  v{} -> v{} [label={}];",
            a.source,
            a.target,
            quote(&a.name)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;

    #[test]
    fn counts_match_the_quiver() {
        let p = generators::brauer_adr_quiver(3, FieldSpec::Rational).unwrap();
        let dot = emit_dot(p.quiver());
        assert_eq!(dot.matches("[label=").count(), 9 + 14);
        assert_eq!(dot.matches("->").count(), 14);
        assert!(dot.contains("label=\"(2,3)\""));
    }

    #[test]
    fn empty_quiver() {
        let q = Quiver::checked(Vec::new(), Vec::new()).unwrap();
        assert_eq!(emit_dot(&q), "digraph Q {\n}\n");
    }
}
