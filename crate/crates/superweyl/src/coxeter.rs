//! Coxeter matrices of the super simple generator set and their graphs.
//!
//! The entry `m_xy` is the exact order of the product of the two generator
//! permutations on the full Borel set, never a local rank-2 computation.

use crate::catalog::{AlgebraCatalog, AlgebraSpec, Family};
use crate::permgroup::{element_order, GeneratorTable};
use crate::reflection::ReflectionKind;
use serde::Serialize;

/// Symmetric matrix of pairwise product orders, `m_xx = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxeterMatrix {
    pub labels: Vec<String>,
    /// `true` marks an odd generator (filled node in the graph).
    pub odd: Vec<bool>,
    pub entries: Vec<Vec<u64>>,
}

impl CoxeterMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Restrict to the generators selected by `keep`.
    pub fn restrict(&self, keep: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            odd: keep.iter().map(|&i| self.odd[i]).collect(),
            entries: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }
}

/// Graph form: nodes with parity, edges for `m >= 3`, labels for `m >= 4`.
#[derive(Debug, Clone, Serialize)]
pub struct CoxeterGraph {
    pub nodes: Vec<(String, bool)>,
    pub edges: Vec<(usize, usize, u64)>,
}

impl From<&CoxeterMatrix> for CoxeterGraph {
    fn from(m: &CoxeterMatrix) -> Self {
        let nodes = m
            .labels
            .iter()
            .cloned()
            .zip(m.odd.iter().copied())
            .collect();
        let mut edges = Vec::new();
        for i in 0..m.size() {
            for j in (i + 1)..m.size() {
                if m.entries[i][j] >= 3 {
                    edges.push((i, j, m.entries[i][j]));
                }
            }
        }
        CoxeterGraph { nodes, edges }
    }
}

/// Compute the Coxeter matrix from the generator permutations.
pub fn coxeter_matrix(table: &GeneratorTable) -> CoxeterMatrix {
    let k = table.gens.len();
    let mut entries = vec![vec![1u64; k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            let prod = table.gens[i].compose(&table.gens[j]);
            let m = element_order(&prod);
            entries[i][j] = m;
            entries[j][i] = m;
        }
    }
    CoxeterMatrix {
        labels: table.labels.clone(),
        odd: table.parity.iter().map(|p| matches!(p, ReflectionKind::Odd)).collect(),
        entries,
    }
}

/// Render the graph in DOT. Node ids are `g0..gk` in extended-system
/// order; odd generators are filled black. Edges appear for `m >= 3` and
/// carry labels for `m >= 4`. Line order is deterministic.
pub fn emit_dot(g: &CoxeterGraph) -> String {
    let mut out = String::from("graph coxeter { node [shape=circle];\n");
    for (i, (label, odd)) in g.nodes.iter().enumerate() {
        if *odd {
            out.push_str(&format!(
                "g{i} [label=\"{label}\", style=filled, fillcolor=black, fontcolor=white];\n"
            ));
        } else {
            out.push_str(&format!("g{i} [label=\"{label}\"];\n"));
        }
    }
    for &(x, y, m) in &g.edges {
        if m >= 4 {
            out.push_str(&format!("g{x} -- g{y} [label=\"{m}\"];\n"));
        } else {
            out.push_str(&format!("g{x} -- g{y};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// Render the matrix as a labeled integer table.
pub fn emit_text(m: &CoxeterMatrix) -> String {
    let width = m
        .labels
        .iter()
        .map(|l| l.len())
        .chain(std::iter::once(2))
        .max()
        .unwrap_or(2);
    let mut out = String::new();
    out.push_str(&" ".repeat(width + 1));
    for l in &m.labels {
        out.push_str(&format!("{l:>width$} "));
    }
    out.push('\n');
    for (i, row) in m.entries.iter().enumerate() {
        out.push_str(&format!("{:>width$} ", m.labels[i]));
        for v in row {
            out.push_str(&format!("{v:>width$} "));
        }
        out.push('\n');
    }
    out
}

/// The reference Coxeter matrix for a family and rank, where one is known.
///
/// For `gl` with `m + n >= 4` this is the general chain with the odd node
/// flanked by order-12 edges; for the small general linear algebras the
/// dihedral matrix. The `spo` families follow the corresponding chain
/// patterns, with the `m = 1` orthosymplectic degenerations derived from
/// the same orbit analysis. The exceptional families return the expected
/// star and chain graphs.
pub fn expected_graph(spec: &AlgebraSpec, cat: &AlgebraCatalog) -> Option<CoxeterMatrix> {
    let k = cat.extended_pi.len();
    let labels: Vec<String> =
        cat.extended_pi.iter().map(|r| cat.generator_label(r)).collect();
    let odd: Vec<bool> =
        cat.extended_pi.iter().map(|r| cat.is_isotropic_root(r)).collect();
    let mut entries = vec![vec![2u64; k]; k];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 1;
    }
    let set = |entries: &mut Vec<Vec<u64>>, i: usize, j: usize, v: u64| {
        entries[i][j] = v;
        entries[j][i] = v;
    };
    let (m, n) = (spec.m, spec.n);
    match spec.family {
        Family::Gl => {
            if m + n < 4 {
                if m + n == 3 {
                    // gl(1|2) and gl(2|1): the dihedral group of order 12.
                    set(&mut entries, 0, 1, 6);
                } else {
                    return None;
                }
            } else {
                // Chain d1-d2 .. d(m-1)-dm, dm-e1 (odd), e1-e2 .. e(n-1)-en.
                // Even neighbors meet in order 3, the odd node in order 12.
                let odd_idx = m - 1;
                for i in 0..k - 1 {
                    set(&mut entries, i, i + 1, 3);
                }
                if odd_idx > 0 {
                    set(&mut entries, odd_idx - 1, odd_idx, 12);
                }
                if odd_idx + 1 < k {
                    set(&mut entries, odd_idx, odd_idx + 1, 12);
                }
            }
        }
        Family::SpoD => {
            // Extended chain: -2d1, d1-d2, .., dm-e1 (odd), e1-e2, ..,
            // e(n-1)-en with the fork e(n-1)+en attached next to the last
            // epsilon difference.
            let odd_idx = m;
            for i in 0..k - 2 {
                set(&mut entries, i, i + 1, 3);
            }
            set(&mut entries, 0, 1, if m == 1 { 12 } else { 4 });
            if m >= 2 {
                set(&mut entries, odd_idx - 1, odd_idx, 12);
            }
            set(&mut entries, odd_idx, odd_idx + 1, 12);
            // Fork: the sum root pairs with the same node as the last
            // difference root.
            let fork = k - 1;
            set(&mut entries, fork - 1, fork, 2);
            if n == 2 {
                // Both epsilon roots hang off the odd node.
                set(&mut entries, odd_idx, fork, 12);
            } else {
                set(&mut entries, fork - 2, fork, 3);
            }
        }
        Family::SpoC => {
            if m == 1 {
                // spo(2|2): dihedral of order 12.
                set(&mut entries, 0, 1, 6);
            } else {
                // Chain e1-d1 (odd), d1-d2, .., d(m-1)-dm, 2dm.
                set(&mut entries, 0, 1, 12);
                for i in 1..k - 2 {
                    set(&mut entries, i, i + 1, 3);
                }
                set(&mut entries, k - 2, k - 1, 4);
            }
        }
        Family::SpoB => {
            // Chain: -2d1, d1-d2, .., dm-e1 (odd), e1-e2, .., e(n-1)-en, en.
            let odd_idx = m;
            for i in 0..k - 1 {
                set(&mut entries, i, i + 1, 3);
            }
            set(&mut entries, 0, 1, 4);
            if m >= 2 {
                set(&mut entries, odd_idx - 1, odd_idx, 12);
            }
            if n >= 2 {
                set(&mut entries, odd_idx, odd_idx + 1, 12);
                set(&mut entries, k - 2, k - 1, 4);
            } else {
                set(&mut entries, odd_idx, odd_idx + 1, 4);
            }
        }
        Family::D21Alpha => {
            // Star: the odd node joined to all three even nodes by 12.
            set(&mut entries, 0, 1, 12);
            set(&mut entries, 1, 2, 12);
            set(&mut entries, 1, 3, 12);
        }
        Family::F4 => {
            // -d, (e1+e2+e3+d)/2 (odd), -e3, e3-e1, e1-e2.
            set(&mut entries, 0, 1, 12);
            set(&mut entries, 1, 2, 12);
            set(&mut entries, 2, 3, 4);
            set(&mut entries, 3, 4, 3);
        }
        Family::G3 => {
            // -2d, d-e1 (odd), e2-e3, -e2.
            set(&mut entries, 0, 1, 4);
            set(&mut entries, 1, 3, 12);
            set(&mut entries, 2, 3, 6);
        }
    }
    Some(CoxeterMatrix { labels, odd, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, parse_spec};
    use crate::enumerator::enumerate_borels;
    use crate::permgroup::build_generator_table;

    fn matrix(text: &str) -> (AlgebraCatalog, CoxeterMatrix) {
        let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
        let borels = enumerate_borels(&cat).unwrap();
        let table = build_generator_table(&cat, &borels);
        let m = coxeter_matrix(&table);
        (cat, m)
    }

    #[test]
    fn gl12_matrix() {
        let (_, m) = matrix("gl(1|2)");
        assert_eq!(m.entries, vec![vec![1, 6], vec![6, 1]]);
    }

    #[test]
    fn spo22_matrix() {
        let (_, m) = matrix("spo(2|2)");
        assert_eq!(m.entries, vec![vec![1, 6], vec![6, 1]]);
    }

    #[test]
    fn spo23_matrix() {
        let (_, m) = matrix("spo(2|3)");
        // Labels in extended order: -2d1, d1-e1 (odd), e1.
        assert_eq!(m.entries[0][1], 4);
        assert_eq!(m.entries[1][2], 4);
        assert_eq!(m.entries[0][2], 2);
    }

    #[test]
    fn matrices_match_the_stated_graphs() {
        for text in ["gl(1|2)", "gl(2|2)", "spo(2|2)", "spo(2|3)", "spo(2|4)", "spo(4|2)"] {
            let (cat, m) = matrix(text);
            let expected = expected_graph(&cat.spec, &cat).unwrap();
            assert_eq!(m, expected, "{text}");
        }
    }

    #[test]
    fn even_restriction_is_classical() {
        // gl(2|3): even generators form A1 x A2.
        let (_, m) = matrix("gl(2|3)");
        let even: Vec<usize> = m.odd.iter().enumerate().filter(|(_, o)| !**o).map(|(i, _)| i).collect();
        let r = m.restrict(&even);
        assert_eq!(r.entries, vec![vec![1, 2, 2], vec![2, 1, 3], vec![2, 3, 1]]);
        // spo(2|5): even part B1 x B2 with one 4.
        let (_, m) = matrix("spo(2|5)");
        let even: Vec<usize> = m.odd.iter().enumerate().filter(|(_, o)| !**o).map(|(i, _)| i).collect();
        let r = m.restrict(&even);
        assert_eq!(r.entries, vec![vec![1, 2, 2], vec![2, 1, 4], vec![2, 4, 1]]);
    }

    #[test]
    fn dot_output_shape() {
        let (_, m) = matrix("gl(1|2)");
        let dot = emit_dot(&CoxeterGraph::from(&m));
        let expected = "graph coxeter { node [shape=circle];\n\
            g0 [label=\"r[d1-e1]\", style=filled, fillcolor=black, fontcolor=white];\n\
            g1 [label=\"r[e1-e2]\"];\n\
            g0 -- g1 [label=\"6\"];\n\
            }\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn dot_omits_commuting_pairs_and_labels_only_high_orders() {
        let m = CoxeterMatrix {
            labels: vec!["a".into(), "b".into(), "c".into()],
            odd: vec![false, false, false],
            entries: vec![vec![1, 3, 2], vec![3, 1, 2], vec![2, 2, 1]],
        };
        let dot = emit_dot(&CoxeterGraph::from(&m));
        assert!(dot.contains("g0 -- g1;\n"));
        assert!(!dot.contains("g0 -- g2"));
        assert!(!dot.contains("label=\"3\""));
    }
}
