//! The verification driver: run every oracle and every predictor on one
//! graph, compare, and emit a structured report.
//!
//! A claim row records a predicted value, a computed value, and a match flag.
//! Mismatches are first-class data, not panics: the two energy-corollary rows
//! are *expected* to mismatch (the corollary formulas contradict the verified
//! factorisation theorems on every case), so they carry
//! `expected_mismatch: true` and do not make a run fail unless `--strict`
//! semantics are requested by the caller.
//!
//! Searches that would be exponential on large graphs are skipped above their
//! bound — skipped, never silently passed: the row stays in the report with
//! `status: "skipped"` and the reason.

use crate::closedform::{predict_all, rational_string};
use crate::decimal::Decimal;
use crate::gf::FieldSpec;
use crate::graph::{
    adjacency_matrix, build_graph, build_windmill, distance_matrix, laplacian_matrix, DepGraph,
    GraphMeta,
};
use crate::invariants::{self, Planarity};
use crate::poly::ExactPoly;
use crate::spectra::{self, MatrixKind};
use crate::{Result, DEFAULT_GRAPH_BOUND, DEFAULT_ORACLE_BOUND, DEFAULT_SPECTRA_BOUND};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Size gates for one suite run.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Cap on q^n for materialising the graph at all.
    pub graph_bound: u64,
    /// Cap on q^n for the exact characteristic-polynomial work.
    pub spectra_bound: u64,
    /// Cap on q^n for the NP-hard search oracles.
    pub oracle_bound: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            graph_bound: DEFAULT_GRAPH_BOUND,
            spectra_bound: DEFAULT_SPECTRA_BOUND,
            oracle_bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Evaluated,
    Skipped,
}

/// One row of the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub claim_id: String,
    pub anchor: String,
    pub predicted: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub status: ClaimStatus,
    /// True for the two energy-corollary rows, which are known to disagree
    /// with the verified spectrum theorems.
    pub expected_mismatch: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyCheck {
    pub matrix: String,
    pub computed_coeffs: Vec<String>,
    pub predicted_coeffs: Vec<String>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub meta: GraphMeta,
    pub claims: Vec<Claim>,
    pub charpoly_checks: Vec<CharpolyCheck>,
    /// Wall-clock stage timings; excluded from the determinism guarantee.
    pub timings: BTreeMap<String, u128>,
}

impl VerificationReport {
    /// A theorem row failed: something other than the known corollary
    /// discrepancies mismatched.
    pub fn has_unexpected_mismatch(&self) -> bool {
        self.claims
            .iter()
            .any(|c| c.status == ClaimStatus::Evaluated && !c.matched && !c.expected_mismatch)
    }

    /// Any evaluated row mismatched, known discrepancies included.
    pub fn has_any_mismatch(&self) -> bool {
        self.claims
            .iter()
            .any(|c| c.status == ClaimStatus::Evaluated && !c.matched)
    }
}

/// The fixed claim registry: (claim_id, anchor), in report order.
pub const CLAIM_REGISTRY: [(&str, &str); 21] = [
    ("size", "m = q(q^n-1)/2"),
    ("completeness", "complete iff n = 1"),
    ("diameter", "diam = 2 for n >= 2; 1 for n = 1"),
    ("domination_number", "domination number = 1"),
    ("independence_number", "alpha = N = q^(n-1)+...+q+1"),
    ("clique_number", "omega = q"),
    (
        "maximal_cliques",
        "maximal cliques = {theta} ∪ class, one per 1-dim subspace",
    ),
    ("chromatic_number", "chi = q"),
    ("eulerian", "Eulerian iff q odd"),
    ("edge_connectivity", "lambda = q-1"),
    ("vertex_connectivity", "kappa = 1 for n >= 2; q-1 for n = 1"),
    ("planarity", "planar iff q <= 4"),
    (
        "windmill_isomorphism",
        "Gamma(V) isomorphic to windmill(q, N)",
    ),
    (
        "charpoly_adjacency",
        "Theta(A) = {x^2-(q-2)x-(q^n-1)}{x-(q-2)}^(N-1)(x+1)^((q-2)N)",
    ),
    (
        "charpoly_laplacian",
        "Theta(L) = x(x-q^n)(x-1)^(N-1)(x-q)^((q-2)N)",
    ),
    (
        "charpoly_distance",
        "Theta(D) = [x^2-{2(q^n-1)-q}x-(q^n-1)](x+q)^(N-1)(x+1)^((q-2)N)",
    ),
    ("algebraic_connectivity", "a = 1 for n >= 2; q for n = 1"),
    ("spanning_trees", "tau = q^((q-2)N)"),
    (
        "adjacency_energy_corollary",
        "corollary 2(q-2)N vs spectrum-derived sum of abs(lambda_i)",
    ),
    (
        "laplacian_energy",
        "LE = q^n + ((q^n(q-1)-q)/q^n)(N-1) + (q/q^n)(q-2)N",
    ),
    (
        "distance_energy_corollary",
        "corollary 2(2q^n-q-2) vs spectrum-derived sum of abs(lambda_i)",
    ),
];

fn anchor_of(id: &str) -> &'static str {
    CLAIM_REGISTRY
        .iter()
        .find(|(cid, _)| *cid == id)
        .map(|(_, a)| *a)
        .expect("claim id in registry")
}

struct ClaimSink {
    claims: Vec<Claim>,
}

impl ClaimSink {
    fn eval(&mut self, id: &str, predicted: String, computed: String, matched: bool) {
        self.push(id, predicted, computed, matched, false, String::new());
    }

    fn eval_noted(
        &mut self,
        id: &str,
        predicted: String,
        computed: String,
        matched: bool,
        expected_mismatch: bool,
        note: String,
    ) {
        self.push(id, predicted, computed, matched, expected_mismatch, note);
    }

    fn skip(&mut self, id: &str, predicted: String, reason: String) {
        self.claims.push(Claim {
            claim_id: id.to_string(),
            anchor: anchor_of(id).to_string(),
            predicted,
            computed: "(skipped)".to_string(),
            matched: false,
            status: ClaimStatus::Skipped,
            expected_mismatch: false,
            note: reason,
        });
    }

    fn push(
        &mut self,
        id: &str,
        predicted: String,
        computed: String,
        matched: bool,
        expected_mismatch: bool,
        note: String,
    ) {
        self.claims.push(Claim {
            claim_id: id.to_string(),
            anchor: anchor_of(id).to_string(),
            predicted,
            computed,
            matched,
            status: ClaimStatus::Evaluated,
            expected_mismatch,
            note,
        });
    }
}

fn poly_brief(p: &ExactPoly) -> String {
    if p.degree() <= 12 {
        p.to_string()
    } else {
        format!("monic integer polynomial, degree {}", p.degree())
    }
}

fn coeff_strings(p: &ExactPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Run the full claim-by-claim suite for Γ(V) over the given field.
pub fn run_suite(field: &FieldSpec, n: u32, options: &SuiteOptions) -> Result<VerificationReport> {
    let suite_start = Instant::now();
    let mut timings: BTreeMap<String, u128> = BTreeMap::new();

    let stage = Instant::now();
    let g = build_graph(field, n, options.graph_bound)?;
    timings.insert("build_graph".into(), stage.elapsed().as_millis());
    let meta = g.meta().expect("built graphs carry meta").clone();
    let q = meta.q;
    let nv = g.order() as u64;
    let preds = predict_all(q, n)?;

    let stage = Instant::now();
    let a = adjacency_matrix(&g);
    let l = laplacian_matrix(&g);
    let d = distance_matrix(&g)?;
    timings.insert("matrices".into(), stage.elapsed().as_millis());

    let mut sink = ClaimSink { claims: Vec::new() };

    // ---- structural and invariant claims -------------------------------
    let stage = Instant::now();
    let m_oracle = invariants::edge_count(&g);
    sink.eval(
        "size",
        preds.size.to_string(),
        m_oracle.to_string(),
        BigInt::from(m_oracle) == preds.size,
    );

    let complete = invariants::is_complete(&g);
    sink.eval(
        "completeness",
        (n == 1).to_string(),
        complete.to_string(),
        complete == (n == 1),
    );

    match invariants::diameter(&g) {
        Ok(diam) => sink.eval(
            "diameter",
            preds.diameter.to_string(),
            diam.to_string(),
            diam == preds.diameter,
        ),
        Err(_) => sink.eval(
            "diameter",
            preds.diameter.to_string(),
            "infinite (disconnected)".to_string(),
            false,
        ),
    }

    let np_allowed = nv <= options.oracle_bound;
    let np_reason = || {
        format!(
            "order {nv} exceeds the search-oracle bound {} (raise --oracle-bound)",
            options.oracle_bound
        )
    };
    if np_allowed {
        let dom = invariants::domination_number(&g);
        sink.eval(
            "domination_number",
            preds.domination.to_string(),
            dom.to_string(),
            dom == preds.domination,
        );

        let (alpha, ind_set) = invariants::independence_number(&g);
        let witness_ok = ind_set.len() as u64 == alpha
            && ind_set
                .iter()
                .enumerate()
                .all(|(i, &u)| ind_set[i + 1..].iter().all(|&v| !g.is_edge(u, v)));
        sink.eval_noted(
            "independence_number",
            preds.independence.to_string(),
            alpha.to_string(),
            BigInt::from(alpha) == preds.independence && witness_ok,
            false,
            if witness_ok {
                String::new()
            } else {
                "witness set failed revalidation".into()
            },
        );

        let omega = invariants::clique_number(&g);
        sink.eval(
            "clique_number",
            preds.clique.to_string(),
            omega.to_string(),
            omega == preds.clique,
        );

        let cliques = invariants::maximal_cliques(&g);
        let block = (q - 1) as usize;
        let classes = meta.num_subspaces as usize;
        let mut expected: Vec<Vec<usize>> = (0..classes)
            .map(|i| {
                let mut c = vec![0usize];
                c.extend(1 + i * block..1 + (i + 1) * block);
                c
            })
            .collect();
        expected.sort();
        let structure_ok = cliques == expected;
        let described = format!("{classes} cliques: {{theta}} ∪ one subspace class each");
        sink.eval(
            "maximal_cliques",
            described.clone(),
            if structure_ok {
                described
            } else {
                format!("{} maximal cliques; structure differs", cliques.len())
            },
            structure_ok,
        );

        let (chi, colouring) = invariants::chromatic_number(&g);
        let proper = g.edges().iter().all(|&(u, v)| colouring[u] != colouring[v]);
        let used: std::collections::BTreeSet<u32> = colouring.iter().copied().collect();
        let colour_witness_ok = proper && used.len() as u64 == chi;
        sink.eval_noted(
            "chromatic_number",
            preds.chromatic.to_string(),
            chi.to_string(),
            chi == preds.chromatic && colour_witness_ok,
            false,
            if colour_witness_ok {
                String::new()
            } else {
                "witness colouring failed revalidation".into()
            },
        );
    } else {
        sink.skip(
            "domination_number",
            preds.domination.to_string(),
            np_reason(),
        );
        sink.skip(
            "independence_number",
            preds.independence.to_string(),
            np_reason(),
        );
        sink.skip("clique_number", preds.clique.to_string(), np_reason());
        sink.skip(
            "maximal_cliques",
            format!(
                "{} cliques: {{theta}} ∪ one subspace class each",
                meta.num_subspaces
            ),
            np_reason(),
        );
        sink.skip("chromatic_number", preds.chromatic.to_string(), np_reason());
    }

    let eulerian = invariants::is_eulerian(&g);
    sink.eval(
        "eulerian",
        preds.eulerian.to_string(),
        eulerian.to_string(),
        eulerian == preds.eulerian,
    );

    let (lambda, cut) = invariants::edge_connectivity(&g);
    let cut_ok = cut.len() as u64 == lambda && {
        let keep: Vec<(usize, usize)> =
            g.edges().into_iter().filter(|e| !cut.contains(e)).collect();
        !invariants::is_connected(&DepGraph::from_edges(g.order(), &keep))
    };
    sink.eval_noted(
        "edge_connectivity",
        preds.edge_connectivity.to_string(),
        lambda.to_string(),
        lambda == preds.edge_connectivity && cut_ok,
        false,
        if cut_ok {
            String::new()
        } else {
            "witness cut failed revalidation".into()
        },
    );

    let kappa = invariants::vertex_connectivity(&g);
    sink.eval(
        "vertex_connectivity",
        preds.vertex_connectivity.to_string(),
        kappa.to_string(),
        kappa == preds.vertex_connectivity,
    );

    let planarity = invariants::planarity_by_blocks(&g);
    let planarity_pred = if preds.planar { "planar" } else { "nonplanar" };
    let planarity_str = match planarity {
        Planarity::Planar => "planar",
        Planarity::Nonplanar => "nonplanar",
        Planarity::Unknown => "unknown",
    };
    sink.eval(
        "planarity",
        planarity_pred.to_string(),
        planarity_str.to_string(),
        planarity_str == planarity_pred,
    );

    if nv <= 32 {
        let windmill = build_windmill(q, meta.num_subspaces);
        let iso = invariants::are_isomorphic(&g, &windmill)?;
        sink.eval(
            "windmill_isomorphism",
            "true".to_string(),
            iso.to_string(),
            iso,
        );
    } else {
        sink.skip(
            "windmill_isomorphism",
            "true".to_string(),
            format!("order {nv} exceeds the isomorphism bound 32"),
        );
    }
    timings.insert("oracles".into(), stage.elapsed().as_millis());

    // ---- exact spectra --------------------------------------------------
    let mut charpoly_checks = Vec::new();
    if nv <= options.spectra_bound {
        let stage = Instant::now();
        let (pa, pl, pd) = std::thread::scope(|s| {
            let ha = s.spawn(|| spectra::charpoly_exact(&a));
            let hl = s.spawn(|| spectra::charpoly_exact(&l));
            let hd = s.spawn(|| spectra::charpoly_exact(&d));
            (
                ha.join().expect("charpoly thread"),
                hl.join().expect("charpoly thread"),
                hd.join().expect("charpoly thread"),
            )
        });
        timings.insert("charpolys".into(), stage.elapsed().as_millis());

        let stage = Instant::now();
        let mut factored_ok = BTreeMap::new();
        for (kind, computed) in [
            (MatrixKind::Adjacency, &pa),
            (MatrixKind::Laplacian, &pl),
            (MatrixKind::Distance, &pd),
        ] {
            let predicted = spectra::predicted_poly(q, n, kind);
            let equal = *computed == predicted;
            factored_ok.insert(kind.name(), equal);
            charpoly_checks.push(CharpolyCheck {
                matrix: kind.name().to_string(),
                computed_coeffs: coeff_strings(computed),
                predicted_coeffs: coeff_strings(&predicted),
                equal,
            });
            sink.eval(
                &format!("charpoly_{}", kind.name()),
                poly_brief(&predicted),
                poly_brief(computed),
                equal,
            );
        }

        let unverified_note = |kind: MatrixKind| {
            if factored_ok[kind.name()] {
                String::new()
            } else {
                "factorisation unverified: computed value uses the claimed factored form".into()
            }
        };

        let s_lap = spectra::spectrum_from_factored_form(q, n, MatrixKind::Laplacian);
        let fiedler = spectra::algebraic_connectivity(&s_lap)?;
        sink.eval_noted(
            "algebraic_connectivity",
            preds.algebraic_connectivity.to_string(),
            rational_string(&fiedler),
            fiedler == num_rational::BigRational::from(BigInt::from(preds.algebraic_connectivity)),
            false,
            unverified_note(MatrixKind::Laplacian),
        );

        let tau = spectra::spanning_trees_kirchhoff(&l);
        sink.eval(
            "spanning_trees",
            preds.spanning_trees.to_string(),
            tau.to_string(),
            tau == preds.spanning_trees,
        );

        let s_adj = spectra::spectrum_from_factored_form(q, n, MatrixKind::Adjacency);
        let adj_energy = spectra::adjacency_energy(&s_adj);
        let adj_corollary = Decimal::from_bigint(&preds.adjacency_energy_corollary);
        sink.eval_noted(
            "adjacency_energy_corollary",
            preds.adjacency_energy_corollary.to_string(),
            adj_energy.to_sig_string(12),
            adj_corollary.rel_close_1e9(&adj_energy),
            true,
            join_notes(
                "corollary inconsistent with spectrum theorem",
                &unverified_note(MatrixKind::Adjacency),
            ),
        );

        let le = spectra::laplacian_energy(&s_lap, &BigInt::from(m_oracle), nv)?;
        sink.eval_noted(
            "laplacian_energy",
            rational_string(&preds.laplacian_energy_corollary),
            rational_string(&le),
            le == preds.laplacian_energy_corollary,
            false,
            unverified_note(MatrixKind::Laplacian),
        );

        let s_dist = spectra::spectrum_from_factored_form(q, n, MatrixKind::Distance);
        let dist_energy = spectra::distance_energy(&s_dist);
        let dist_corollary = Decimal::from_bigint(&preds.distance_energy_corollary);
        sink.eval_noted(
            "distance_energy_corollary",
            preds.distance_energy_corollary.to_string(),
            dist_energy.to_sig_string(12),
            dist_corollary.rel_close_1e9(&dist_energy),
            true,
            join_notes(
                "corollary inconsistent with spectrum theorem",
                &unverified_note(MatrixKind::Distance),
            ),
        );
        timings.insert("spectra".into(), stage.elapsed().as_millis());
    } else {
        let reason = format!(
            "order {nv} exceeds the spectra bound {} (raise --spectra-bound)",
            options.spectra_bound
        );
        for kind in MatrixKind::ALL {
            sink.skip(
                &format!("charpoly_{}", kind.name()),
                poly_brief(&spectra::predicted_poly(q, n, kind)),
                reason.clone(),
            );
        }
        sink.skip(
            "algebraic_connectivity",
            preds.algebraic_connectivity.to_string(),
            reason.clone(),
        );
        sink.skip(
            "spanning_trees",
            preds.spanning_trees.to_string(),
            reason.clone(),
        );
        sink.skip(
            "adjacency_energy_corollary",
            preds.adjacency_energy_corollary.to_string(),
            reason.clone(),
        );
        sink.skip(
            "laplacian_energy",
            rational_string(&preds.laplacian_energy_corollary),
            reason.clone(),
        );
        sink.skip(
            "distance_energy_corollary",
            preds.distance_energy_corollary.to_string(),
            reason,
        );
    }

    timings.insert("total".into(), suite_start.elapsed().as_millis());

    // keep report order = registry order regardless of evaluation order
    let mut claims = sink.claims;
    let position = |id: &str| {
        CLAIM_REGISTRY
            .iter()
            .position(|(cid, _)| *cid == id)
            .expect("claim id in registry")
    };
    claims.sort_by_key(|c| position(&c.claim_id));

    Ok(VerificationReport {
        meta,
        claims,
        charpoly_checks,
        timings,
    })
}

fn join_notes(base: &str, extra: &str) -> String {
    if extra.is_empty() {
        base.to_string()
    } else {
        format!("{base}; {extra}")
    }
}

/// Output formats for [`render_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

/// Deterministic rendering (stable claim order and number formatting).
pub fn render_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serialises") + "\n"
        }
        ReportFormat::Markdown => {
            let meta = &report.meta;
            let mut out = format!(
                "# Verification of Γ(V) for p={}, k={}, n={} (q={}, N={})\n\n",
                meta.p, meta.k, meta.n, meta.q, meta.num_subspaces
            );
            out.push_str("| claim | anchor | predicted | computed | match | note |\n");
            out.push_str("|---|---|---|---|---|---|\n");
            for c in &report.claims {
                let verdict = match c.status {
                    ClaimStatus::Skipped => "skipped",
                    ClaimStatus::Evaluated if c.matched => "yes",
                    ClaimStatus::Evaluated => "NO",
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    c.claim_id, c.anchor, c.predicted, c.computed, verdict, c.note
                ));
            }
            out.push_str("\n## Characteristic polynomials\n\n");
            if report.charpoly_checks.is_empty() {
                out.push_str("skipped\n");
            } else {
                out.push_str("| matrix | degree | coefficientwise equal |\n|---|---|---|\n");
                for ch in &report.charpoly_checks {
                    out.push_str(&format!(
                        "| {} | {} | {} |\n",
                        ch.matrix,
                        ch.computed_coeffs.len().saturating_sub(1),
                        if ch.equal { "yes" } else { "NO" }
                    ));
                }
            }
            out.push_str("\n## Timings (ms)\n\n");
            for (stage, ms) in &report.timings {
                out.push_str(&format!("- {stage}: {ms}\n"));
            }
            out
        }
    }
}
