//! Executable forms of the residue / Maxine / MDI claims, evaluated one
//! graph at a time, plus the scan driver in [`scan`].

mod scan;
pub mod structure;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::degseq::{hh_realization, residue};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::heuristics::{hh_property_vertices, maxine_all, maxine_hh_all, MaxineSummary, MAXINE_ALL_LIMIT};
use crate::independence::{
    all_mis, mdi_from, partition_neighborhood, prune_outside, reduce_to_unique_mis_with, reduction_pipeline, MISReport,
};
use crate::patterns::{cycle, f_catalog, find_induced, has_p5_star_given, path, FMember};

pub use scan::{hunt, run_suite, ParseFailure, Source, VerifyReport, TOOL_VERSION};
pub use structure::{anchored_location, unanchored_member, StructureFinding};

/// One verifiable claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// `R(G) <= α(G)`.
    Thm1ResidueLeAlpha,
    /// `R(G) <= M <= α(G)` for every Maxine run.
    Thm2Sandwich,
    /// Deleting a Havel-Hakimi-property vertex at every step ends with `M = R(G)`.
    HhDeletionGivesResidue,
    /// The degree sequence has a realization with a Havel-Hakimi-property vertex.
    RealizationHasHhVertex,
    /// `{C4, P5}`-free graphs: every Maxine run reaches `α`.
    ThmBmC4P5,
    /// The unique-MIS and `N(v) ∪ I` reductions keep `v` MDI.
    LemmaReductionsPreserveMdi,
    /// MDI with `α <= 2` forces an edgeless graph.
    AlphaLe2Edgeless,
    /// `Q_u`, `Q_w` and `Q` are cliques after reduction (`α = 3`, `P5*`-free).
    QCliques,
    /// MDI with `α = 3` contains a family member (anchored and un-anchored).
    ThmStructureAlpha3,
    /// MDI with `α > 3` contains a family member.
    ThmStructureAlphaGt3,
    /// `{F, P5}`-free graphs: every Maxine run reaches `α`.
    CorollaryFP5,
    /// A graph isomorphic to a family member has MDI conditions at its `v`.
    FMembersAreMdi,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Thm1ResidueLeAlpha,
        CheckId::Thm2Sandwich,
        CheckId::HhDeletionGivesResidue,
        CheckId::RealizationHasHhVertex,
        CheckId::ThmBmC4P5,
        CheckId::LemmaReductionsPreserveMdi,
        CheckId::AlphaLe2Edgeless,
        CheckId::QCliques,
        CheckId::ThmStructureAlpha3,
        CheckId::ThmStructureAlphaGt3,
        CheckId::CorollaryFP5,
        CheckId::FMembersAreMdi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Thm1ResidueLeAlpha => "thm1_residue_le_alpha",
            CheckId::Thm2Sandwich => "thm2_sandwich",
            CheckId::HhDeletionGivesResidue => "hh_deletion_gives_residue",
            CheckId::RealizationHasHhVertex => "realization_has_hh_vertex",
            CheckId::ThmBmC4P5 => "thm_bm_c4p5",
            CheckId::LemmaReductionsPreserveMdi => "lemma_reductions_preserve_mdi",
            CheckId::AlphaLe2Edgeless => "alpha_le_2_edgeless",
            CheckId::QCliques => "q_cliques",
            CheckId::ThmStructureAlpha3 => "thm_structure_alpha3",
            CheckId::ThmStructureAlphaGt3 => "thm_structure_alpha_gt3",
            CheckId::CorollaryFP5 => "corollary_f_p5",
            CheckId::FMembersAreMdi => "f_members_are_mdi",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }
}

/// Lazily computed invariants of one graph, shared across checks.
pub(crate) struct Facts<'g> {
    g: &'g Graph,
    mis: OnceCell<MISReport>,
    maxine: OnceCell<MaxineSummary>,
    residue: OnceCell<usize>,
    mdi: OnceCell<VertexSet>,
    p5_star: OnceCell<bool>,
}

impl<'g> Facts<'g> {
    pub(crate) fn new(g: &'g Graph) -> Result<Self> {
        let n = g.order();
        if n > MAXINE_ALL_LIMIT {
            return Err(Error::LimitExceeded { what: "verification", limit: MAXINE_ALL_LIMIT, n });
        }
        Ok(Facts {
            g,
            mis: OnceCell::new(),
            maxine: OnceCell::new(),
            residue: OnceCell::new(),
            mdi: OnceCell::new(),
            p5_star: OnceCell::new(),
        })
    }

    fn mis(&self) -> &MISReport {
        self.mis.get_or_init(|| all_mis(self.g).expect("size checked"))
    }

    fn alpha(&self) -> usize {
        self.mis().alpha
    }

    fn maxine(&self) -> &MaxineSummary {
        self.maxine.get_or_init(|| maxine_all(self.g).expect("size checked"))
    }

    fn residue(&self) -> usize {
        *self.residue.get_or_init(|| residue(self.g))
    }

    fn mdi(&self) -> VertexSet {
        *self.mdi.get_or_init(|| if self.g.order() == 0 { VertexSet::EMPTY } else { mdi_from(self.g, self.mis()) })
    }

    fn p5_star(&self) -> bool {
        *self.p5_star.get_or_init(|| has_p5_star_given(self.g, self.mdi()).expect("anchor in range"))
    }

    fn maxine_always_optimal(&self) -> bool {
        self.maxine().min_size == self.alpha()
    }
}

/// Catalogs sized for hosts up to `max_order` vertices, built once per scan.
pub struct Checker {
    max_order: usize,
    theorem_catalog: Vec<FMember>,
    forbidden: Vec<Graph>,
    c4: Graph,
    p5: Graph,
}

impl Checker {
    pub fn new(max_order: usize) -> Self {
        let theorem_catalog = f_catalog(max_order, false);
        let forbidden = theorem_catalog.iter().filter(|m| m.mdi_verified).map(|m| m.graph.clone()).collect();
        Checker { max_order, theorem_catalog, forbidden, c4: cycle(4).expect("C4"), p5: path(5) }
    }

    /// Unfiltered family members on at most `max_order` vertices.
    pub fn theorem_catalog(&self) -> &[FMember] {
        &self.theorem_catalog
    }

    /// MDI-filtered family members plus `P5`, the corollary's hypothesis set.
    pub fn corollary_patterns(&self) -> impl Iterator<Item = &Graph> {
        self.forbidden.iter().chain(std::iter::once(&self.p5))
    }

    pub fn check(&self, g: &Graph, id: CheckId) -> Result<CheckOutcome> {
        let facts = Facts::new(g)?;
        self.check_with(&facts, id)
    }

    pub(crate) fn check_with(&self, facts: &Facts<'_>, id: CheckId) -> Result<CheckOutcome> {
        use CheckOutcome::*;
        let g = facts.g;
        if g.order() > self.max_order {
            return Err(Error::Precondition(format!(
                "checker built for {} vertices, graph has {}",
                self.max_order,
                g.order()
            )));
        }
        let outcome = match id {
            CheckId::Thm1ResidueLeAlpha => CheckOutcome::from_bool(facts.residue() <= facts.alpha()),
            CheckId::Thm2Sandwich => {
                let m = facts.maxine();
                CheckOutcome::from_bool(facts.residue() <= m.min_size && m.max_size <= facts.alpha())
            }
            CheckId::HhDeletionGivesResidue => {
                let x = maxine_hh_all(g)?;
                if x.completed_sizes.is_empty() {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(x.completed_sizes.iter().all(|&m| m == facts.residue()))
                }
            }
            CheckId::RealizationHasHhVertex => {
                if g.order() == 0 {
                    NotApplicable
                } else if !hh_property_vertices(g).is_empty() {
                    Pass
                } else {
                    let r = hh_realization(&g.degree_sequence())?;
                    CheckOutcome::from_bool(!hh_property_vertices(&r).is_empty())
                }
            }
            CheckId::ThmBmC4P5 => {
                if crate::patterns::is_family_free(g, [&self.c4, &self.p5]) {
                    CheckOutcome::from_bool(facts.maxine_always_optimal())
                } else {
                    NotApplicable
                }
            }
            CheckId::LemmaReductionsPreserveMdi => {
                if facts.mdi().is_empty() {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(self.reductions_hold(facts)?)
                }
            }
            CheckId::AlphaLe2Edgeless => {
                if facts.mdi().is_empty() || facts.alpha() > 2 {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(g.is_edgeless() && facts.maxine_always_optimal())
                }
            }
            CheckId::QCliques => {
                if facts.mdi().is_empty() || facts.alpha() != 3 || facts.p5_star() {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(self.q_cliques_hold(facts)?)
                }
            }
            CheckId::ThmStructureAlpha3 => {
                if !self.structure_applies(facts, |a| a == 3) {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(self.structure(facts, true)?.holds())
                }
            }
            CheckId::ThmStructureAlphaGt3 => {
                if !self.structure_applies(facts, |a| a > 3) {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(self.structure(facts, false)?.holds())
                }
            }
            CheckId::CorollaryFP5 => {
                if crate::patterns::is_family_free(g, self.corollary_patterns()) {
                    CheckOutcome::from_bool(facts.maxine_always_optimal())
                } else {
                    NotApplicable
                }
            }
            CheckId::FMembersAreMdi => {
                let matches = self.catalog_matches(g)?;
                if matches.is_empty() {
                    NotApplicable
                } else {
                    CheckOutcome::from_bool(matches.iter().all(|&v| facts.mdi().contains(v)))
                }
            }
        };
        Ok(outcome)
    }

    /// MDI, the given `α` condition, at least one edge, and no induced `P5`
    /// centred at an MDI vertex.
    fn structure_applies(&self, facts: &Facts<'_>, alpha_ok: impl Fn(usize) -> bool) -> bool {
        !facts.mdi().is_empty() && alpha_ok(facts.alpha()) && !facts.g.is_edgeless() && !facts.p5_star()
    }

    /// Both detection modes for a structure check; anchored mode only when
    /// `anchored` is set.
    pub fn structure_finding(&self, g: &Graph, anchored: bool) -> Result<StructureFinding> {
        let facts = Facts::new(g)?;
        self.structure(&facts, anchored)
    }

    fn structure(&self, facts: &Facts<'_>, anchored: bool) -> Result<StructureFinding> {
        let g = facts.g;
        let unanchored = unanchored_member(g, &self.theorem_catalog)?.map(|(m, e)| (m.label(), e));
        let anchored_ok = if anchored {
            let mut all = true;
            for v in facts.mdi() {
                if anchored_location(g, v, &self.theorem_catalog)?.is_none() {
                    all = false;
                    break;
                }
            }
            Some(all)
        } else {
            None
        };
        Ok(StructureFinding { unanchored, anchored: anchored_ok })
    }

    fn reductions_hold(&self, facts: &Facts<'_>) -> Result<bool> {
        let g = facts.g;
        for v in facts.mdi() {
            for keep in 0..facts.mis().all_mis.len() {
                let first = reduce_to_unique_mis_with(g, v, keep)?;
                let report = all_mis(&first.graph)?;
                if !report.is_unique() || !mdi_from(&first.graph, &report).contains(first.center) {
                    return Ok(false);
                }
                let second = match prune_outside(&first.graph, first.center) {
                    Ok(r) => r,
                    Err(Error::NotMdi(_) | Error::NoUniqueMis) => return Ok(false),
                    Err(e) => return Err(e),
                };
                let report = all_mis(&second.graph)?;
                let h = &second.graph;
                let iset = report.all_mis[0];
                if !report.is_unique()
                    || !mdi_from(h, &report).contains(second.center)
                    || h.neighbors(second.center).union(iset) != h.vertices()
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn q_cliques_hold(&self, facts: &Facts<'_>) -> Result<bool> {
        for v in facts.mdi() {
            let red = reduction_pipeline(facts.g, v)?;
            let part = partition_neighborhood(&red.graph, red.center)?;
            let Some(a3) = part.alpha_three(&red.graph) else { return Ok(false) };
            let h = &red.graph;
            if !(h.is_clique(a3.q_u) && h.is_clique(a3.q_w) && h.is_clique(a3.q)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For every catalog member isomorphic to `g`, the image of its `v`.
    fn catalog_matches(&self, g: &Graph) -> Result<Vec<usize>> {
        let seq = g.degree_sequence();
        let mut out = Vec::new();
        for m in self.theorem_catalog.iter().filter(|m| m.graph.order() == g.order()) {
            if m.graph.degree_sequence() != seq {
                continue;
            }
            if let Some(e) = find_induced(g, &m.graph, &[])? {
                out.push(e.map[m.v()]);
            }
        }
        Ok(out)
    }
}

/// Evaluates one claim on one graph.
pub fn check_one(g: &Graph, id: CheckId) -> Result<CheckOutcome> {
    Checker::new(g.order()).check(g, id)
}
