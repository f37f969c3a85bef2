//! Built-in figure graphs and the statements made about them.
//!
//! Each fixture pairs a vertex set with a claims file. Statements that
//! disagree with the derived coloring are kept as they were made; the audit
//! reports them.

use std::fmt::Write;

use crate::catalog::Catalog;
use crate::graph::{audit, build_graph, clique_report, parse_claims, CliqueReport, ColoredGraph, DiscrepancyReport, GraphError, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub vertices: &'static [&'static str],
    pub claims: &'static str,
}

pub const FIGURES: [Fixture; 10] = [
    Fixture {
        id: "fig1a",
        vertices: &["p_x", "p_y", "l_x"],
        claims: "claim fig1a-caption none\n",
    },
    Fixture {
        id: "fig1b",
        vertices: &["l_x", "l_y", "l_z"],
        claims: "claim fig1b-caption mono green l_x l_y l_z\n",
    },
    Fixture {
        id: "fig1c",
        vertices: &["p_x", "p_y", "x", "y"],
        claims: "claim fig1c-caption none\n",
    },
    Fixture {
        id: "fig2a",
        vertices: &["p_x", "p_y", "p_z", "z", "y"],
        claims: "\
claim fig2a-caption mono red p_x p_y p_z
claim fig2a-caption mono red p_x p_y z
claim fig2a-caption mono red p_x p_z y
claim fig2a-caption mono red p_y z y
",
    },
    Fixture {
        id: "fig2b",
        vertices: &["p_x", "p_y", "p_z", "l_y", "l_z"],
        claims: "\
claim fig2b-caption mono red p_x p_y l_y
claim fig2b-caption mono any p_x p_z l_z
",
    },
    Fixture {
        id: "fig2c",
        vertices: &["p_x", "p_y", "l_x", "l_y", "l_z"],
        claims: "\
claim fig2c-caption mono green p_x l_x l_y
claim fig2c-caption mono green l_x l_y l_z
",
    },
    Fixture {
        id: "fig3a",
        vertices: &["p_x", "p_y", "l_x", "l_y", "x"],
        claims: "\
claim fig3a-caption mono green p_x l_x x
claim fig3a-text mono green p_x l_y x
claim fig3a-text quad red p_x p_y l_x x
",
    },
    Fixture {
        id: "fig3b",
        vertices: &["p_x", "p_y", "l_x", "l_y", "H_central"],
        claims: "claim fig3b-caption none\n",
    },
    Fixture {
        id: "fig3c",
        vertices: &["r", "p_r", "l_z", "H_central", "L2"],
        claims: "\
claim fig3c-caption mono red r p_r L2
claim fig3c-caption mono red p_r l_z L2
claim fig3c-caption mono green r l_x p_r
claim fig3c-text mono red p_r l_z L2
claim fig3c-text mono green r p_r H_central
claim fig3c-text mono red r L2 l_z
",
    },
    Fixture {
        id: "fig4",
        vertices: &["p_x", "p_y", "p_z", "x", "y", "z"],
        claims: "\
claim fig4-caption mono red p_x p_y p_z
claim fig4-caption mono red p_y p_z x
claim fig4-caption mono red p_z x y
claim fig4-caption mono red x y z
claim fig4-caption none green
claim fig4-text mono red p_x y z
",
    },
];

/// The five-vertex Hamiltonian panel with a Hamiltonian that commutes with
/// nothing else, i.e. the reading where H fails to commute with `l_x, l_y`.
pub const FIG3B_GENERIC: Fixture = Fixture {
    id: "fig3b-generic",
    vertices: &["p_x", "p_y", "l_x", "l_y", "H_generic"],
    claims: "claim fig3b-caption none\n",
};

#[derive(Clone, Debug)]
pub struct FigureRun {
    pub id: &'static str,
    pub graph: ColoredGraph,
    pub cliques: CliqueReport,
    pub audit: DiscrepancyReport,
}

pub fn run_fixture(fixture: &Fixture, catalog: &Catalog) -> Result<FigureRun, GraphError> {
    let graph = build_graph(fixture.vertices, catalog)?;
    let claims = parse_claims(fixture.claims).expect("built-in claims parse");
    Ok(FigureRun {
        id: fixture.id,
        cliques: clique_report(&graph),
        audit: audit(&graph, &claims),
        graph,
    })
}

/// All ten figure panels followed by the generic-Hamiltonian variant.
pub fn run_all(catalog: &Catalog) -> Result<Vec<FigureRun>, GraphError> {
    FIGURES
        .iter()
        .chain(std::iter::once(&FIG3B_GENERIC))
        .map(|f| run_fixture(f, catalog))
        .collect()
}

/// Plain-text table of every audited claim, refutations with evidence.
pub fn discrepancy_summary(runs: &[FigureRun]) -> String {
    let mut out = String::new();
    let count = |v| runs.iter().map(|r| r.audit.count(v)).sum::<usize>();
    let _ = writeln!(
        out,
        "claims: {} confirmed, {} refuted, {} unverifiable",
        count(Verdict::Confirmed),
        count(Verdict::Refuted),
        count(Verdict::Unverifiable)
    );
    for run in runs {
        let _ = writeln!(out, "\n[{}] {}", run.id, run.graph.vertices().join(", "));
        for d in &run.audit.claims {
            let _ = writeln!(out, "  {:<12} {}: {}", d.verdict.to_string(), d.source, d.claim);
            let _ = writeln!(out, "               derived: {}", d.derived);
            if d.verdict != Verdict::Confirmed {
                for e in &d.evidence {
                    let _ = writeln!(out, "               - {e}");
                }
            }
        }
    }
    out
}
