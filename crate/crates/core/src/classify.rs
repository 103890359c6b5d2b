//! Ramsey-finite / Ramsey-infinite verdicts for a target pair `(G, H)`.
//!
//! The decision tree applies known theorems in a fixed order and stops at the
//! first one that decides the pair:
//!
//! | rule | verdict  | condition                                                        |
//! |------|----------|------------------------------------------------------------------|
//! | R1   | finite   | `G` or `H` is a matching                                         |
//! | R2   | infinite | both contain a cycle                                             |
//! | R3   | infinite | exactly one contains a cycle                                     |
//! | R4   | infinite | both forests, some component is not a star                       |
//! | R5   | finite   | star forests with one non-trivial star each, both odd            |
//! | R6   | infinite | star forests outside every finite case of the forest classification |
//! | R7   | finite   | `(S(n) ∪ S(s), S(ℓ) ∪ kK₂)` with the explicit bound on `k`       |
//! | R8   | unknown  | the remaining finite case, which hinges on an unspecified bound  |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components, ComponentKind, Graph};
use crate::spec::GraphSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Finite,
    Infinite,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Finite => "finite",
            Verdict::Infinite => "infinite",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl Rule {
    pub fn verdict(self) -> Verdict {
        match self {
            Rule::R1 | Rule::R5 | Rule::R7 => Verdict::Finite,
            Rule::R2 | Rule::R3 | Rule::R4 | Rule::R6 => Verdict::Infinite,
            Rule::R8 => Verdict::Unknown,
        }
    }

    /// The theorem each rule applies.
    pub fn citation(self) -> &'static str {
        match self {
            Rule::R1 => "Burr-Erdos-Faudree-Schelp 1978: if one target is a matching, the pair is Ramsey-finite",
            Rule::R2 => "cyclic-cyclic theorem: if both targets contain a cycle, the pair is Ramsey-infinite (via the asymmetric random Ramsey threshold of Mousset-Nenadov-Samotij, Kuperwasser-Samotij, Christoph-Martinsson-Steiner-Wigderson)",
            Rule::R3 => "Luczak 1994: a forest that is not a matching against a graph with a cycle is Ramsey-infinite",
            Rule::R4 => "Burr-Erdos-Faudree-Rousseau-Schelp 1982: forests, neither a matching, one with a non-star component, are Ramsey-infinite",
            Rule::R5 => "Faudree 1991 forest classification, case s = t = 1 with both stars odd (without K2 components: Burr-Erdos-Faudree-Rousseau-Schelp 1981, both targets odd stars)",
            Rule::R6 => "Faudree 1991 forest classification: no finite case applies in either orientation (without K2 components: Burr-Erdos-Faudree-Rousseau-Schelp 1981, finite only for two odd stars)",
            Rule::R7 => "Burr-Erdos-Faudree-Rousseau-Schelp 1981: (S(n) u S(s), S(l) u kK2) with l, n odd and n >= l + s - 1 is Ramsey-finite for k >= (n + 2l + s - 2)^2 + 1",
            Rule::R8 => "Faudree 1991 forest classification, case s >= 2, t = 1: finite iff the matching count reaches the threshold n0(F1, F2), which is not explicit",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailEntry {
    pub rule: Rule,
    pub citation: String,
    pub reason: String,
}

/// Which graph played `F₁` in the forest-classification rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `F₁ = G`, `F₂ = H`.
    AsGiven,
    /// `F₁ = H`, `F₂ = G`.
    Swapped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub trail: Vec<TrailEntry>,
    /// For `Unknown`: the inequality that would settle the pair.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub condition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orientation: Option<Orientation>,
}

impl Classification {
    fn decided(rule: Rule, reason: String, orientation: Option<Orientation>) -> Self {
        Classification {
            verdict: rule.verdict(),
            trail: vec![TrailEntry {
                rule,
                citation: rule.citation().to_string(),
                reason,
            }],
            condition: None,
            orientation,
        }
    }

    /// The rule that produced the verdict.
    pub fn rule(&self) -> Rule {
        self.trail.last().expect("trail is never empty").rule
    }

    pub fn citations(&self) -> Vec<String> {
        self.trail.iter().map(|t| t.citation.clone()).collect()
    }
}

/// A star forest `S(m₁) ∪ … ∪ S(m_s) ∪ mK₂` with `m₁ ≥ … ≥ m_s ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarForestShape {
    /// Non-trivial star sizes, descending.
    pub stars: Vec<usize>,
    /// Number of `K₂` components.
    pub matching_count: usize,
}

impl StarForestShape {
    pub fn is_matching(&self) -> bool {
        self.stars.is_empty()
    }

    /// Rebuilds the forest as a graph.
    pub fn to_graph(&self) -> Result<Graph> {
        self.stars
            .iter()
            .try_fold(Graph::matching(self.matching_count)?, |acc, &r| {
                Graph::star(r)?.disjoint_union(&acc)
            })
    }
}

impl fmt::Display for StarForestShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.stars.iter().map(|r| format!("S{r}")).collect();
        match self.matching_count {
            0 => {}
            1 => parts.push("K2".into()),
            m => parts.push(format!("{m}K2")),
        }
        f.write_str(&parts.join("+"))
    }
}

/// The star-forest shape of `f`, if every component is a star; `K₂`
/// components count towards the matching. Isolated vertices are ignored.
pub fn shape_of(f: &Graph) -> Option<StarForestShape> {
    TargetProfile::from_graph(f).shape()
}

/// The multiset of component kinds of a target graph: everything the
/// decision tree looks at. Profiles can be built from a [`GraphSpec`]
/// without materialising the graph, so targets such as `S3+122K2` are not
/// limited by the vertex cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TargetProfile {
    components: Vec<ComponentKind>,
}

impl TargetProfile {
    pub fn from_graph(g: &Graph) -> Self {
        TargetProfile {
            components: components(g).into_iter().map(|c| c.kind).collect(),
        }
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        spec.validate()?;
        let mut components = Vec::new();
        collect_kinds(spec, &mut components);
        Ok(TargetProfile { components })
    }

    pub fn components(&self) -> &[ComponentKind] {
        &self.components
    }

    /// Adds `j` further `K₂` components.
    pub fn with_matching(&self, j: usize) -> Self {
        let mut components = self.components.clone();
        components.extend(std::iter::repeat_n(ComponentKind::K2, j));
        TargetProfile { components }
    }

    fn has_edge(&self) -> bool {
        self.components
            .iter()
            .any(|&k| k != ComponentKind::Isolated)
    }

    fn has_isolated(&self) -> bool {
        self.components.contains(&ComponentKind::Isolated)
    }

    pub fn is_matching(&self) -> bool {
        self.components
            .iter()
            .all(|&k| matches!(k, ComponentKind::K2 | ComponentKind::Isolated))
    }

    pub fn has_cycle(&self) -> bool {
        self.components.contains(&ComponentKind::Cyclic)
    }

    fn has_non_star_tree(&self) -> bool {
        self.components.contains(&ComponentKind::Tree)
    }

    pub fn shape(&self) -> Option<StarForestShape> {
        let mut stars = Vec::new();
        let mut matching_count = 0;
        for &kind in &self.components {
            match kind {
                ComponentKind::Isolated => {}
                ComponentKind::K2 => matching_count += 1,
                ComponentKind::Star(r) => stars.push(r),
                ComponentKind::Tree | ComponentKind::Cyclic => return None,
            }
        }
        stars.sort_unstable_by(|a, b| b.cmp(a));
        Some(StarForestShape {
            stars,
            matching_count,
        })
    }
}

fn collect_kinds(spec: &GraphSpec, out: &mut Vec<ComponentKind>) {
    match *spec {
        GraphSpec::Star(1) => out.push(ComponentKind::K2),
        GraphSpec::Star(r) => out.push(ComponentKind::Star(r)),
        GraphSpec::Matching(j) => out.extend(std::iter::repeat_n(ComponentKind::K2, j)),
        GraphSpec::Path(2) | GraphSpec::Complete(2) => out.push(ComponentKind::K2),
        GraphSpec::Path(3) => out.push(ComponentKind::Star(2)),
        GraphSpec::Path(_) => out.push(ComponentKind::Tree),
        GraphSpec::Cycle(_) | GraphSpec::Complete(_) => out.push(ComponentKind::Cyclic),
        GraphSpec::DisjointUnion(ref parts) => {
            for p in parts {
                collect_kinds(p, out);
            }
        }
    }
}

/// `(n + 2ℓ + s − 2)² + 1`, the matching count beyond which
/// `(S(n) ∪ S(s), S(ℓ) ∪ kK₂)` is known to be Ramsey-finite.
pub fn star_forest_matching_bound(n: usize, l: usize, s: usize) -> u128 {
    let base = (n + 2 * l + s) as u128 - 2;
    base * base + 1
}

fn check_target(name: &str, t: &TargetProfile) -> Result<()> {
    if !t.has_edge() {
        return Err(Error::Precondition(format!("{name} has no edges")));
    }
    if t.has_isolated() {
        return Err(Error::Precondition(format!("{name} has isolated vertices")));
    }
    Ok(())
}

pub fn classify(g: &Graph, h: &Graph) -> Result<Classification> {
    classify_profiles(&TargetProfile::from_graph(g), &TargetProfile::from_graph(h))
}

pub fn classify_profiles(g: &TargetProfile, h: &TargetProfile) -> Result<Classification> {
    check_target("G", g)?;
    check_target("H", h)?;

    if g.is_matching() || h.is_matching() {
        let which = if g.is_matching() { "G" } else { "H" };
        return Ok(Classification::decided(
            Rule::R1,
            format!("{which} is a matching"),
            None,
        ));
    }
    match (g.has_cycle(), h.has_cycle()) {
        (true, true) => {
            return Ok(Classification::decided(
                Rule::R2,
                "both G and H contain a cycle".into(),
                None,
            ))
        }
        (true, false) | (false, true) => {
            let (cyclic, forest) = if g.has_cycle() {
                ("G", "H")
            } else {
                ("H", "G")
            };
            return Ok(Classification::decided(
                Rule::R3,
                format!(
                    "{cyclic} contains a cycle and {forest} is a forest that is not a matching"
                ),
                None,
            ));
        }
        (false, false) => {}
    }
    if g.has_non_star_tree() || h.has_non_star_tree() {
        let which = if g.has_non_star_tree() { "G" } else { "H" };
        return Ok(Classification::decided(
            Rule::R4,
            format!("both are forests and {which} has a component that is not a star"),
            None,
        ));
    }

    let sg = g.shape().expect("forest without non-star components");
    let sh = h.shape().expect("forest without non-star components");
    Ok(classify_star_forests(&sg, &sh))
}

/// Both shapes have at least one non-trivial star.
fn classify_star_forests(g: &StarForestShape, h: &StarForestShape) -> Classification {
    debug_assert!(!g.is_matching() && !h.is_matching());
    let orientations = [(Orientation::AsGiven, g, h), (Orientation::Swapped, h, g)];

    // R5: s = t = 1, both odd.
    if g.stars.len() == 1 && h.stars.len() == 1 && g.stars[0] % 2 == 1 && h.stars[0] % 2 == 1 {
        let reason = if g.matching_count == 0 && h.matching_count == 0 {
            format!(
                "G = S({}) and H = S({}) are both odd stars",
                g.stars[0], h.stars[0]
            )
        } else {
            format!("G = {g} and H = {h}: one odd star on each side, plus matchings")
        };
        return Classification::decided(Rule::R5, reason, Some(Orientation::AsGiven));
    }

    // Shapes fitting case (iii) structurally: s ≥ 2, t = 1, m₁, n₁ odd,
    // m₁ ≥ n₁ + m₂ − 1.
    let case_three: Vec<_> = orientations
        .iter()
        .filter(|(_, f1, f2)| {
            f1.stars.len() >= 2
                && f2.stars.len() == 1
                && f1.stars[0] % 2 == 1
                && f2.stars[0] % 2 == 1
                && f1.stars[0] + 1 >= f2.stars[0] + f1.stars[1]
        })
        .collect();

    let Some(&&(orientation, f1, f2)) = case_three.first() else {
        return Classification::decided(Rule::R6, no_case_reason(g, h), None);
    };

    // R7: F₁ = S(n') ∪ S(s') exactly, F₂ = S(ℓ) ∪ kK₂ with k past the bound.
    if f1.stars.len() == 2 && f1.matching_count == 0 {
        let (n1, s1, l) = (f1.stars[0], f1.stars[1], f2.stars[0]);
        let k = f2.matching_count;
        let bound = star_forest_matching_bound(n1, l, s1);
        if k as u128 >= bound {
            return Classification::decided(
                Rule::R7,
                format!(
                    "F1 = S({n1})+S({s1}), F2 = S({l})+{k}K2: {n1} >= {l} + {s1} - 1 and \
                     k = {k} >= ({n1} + 2*{l} + {s1} - 2)^2 + 1 = {bound}"
                ),
                Some(orientation),
            );
        }
    }

    // Without K2 components on either side the star-forest theorem already
    // decides the pair: finite only for two single odd stars.
    if f1.matching_count == 0 && f2.matching_count == 0 {
        return Classification::decided(
            Rule::R6,
            format!(
                "G = {g} and H = {h} have no K2 components and are not both odd stars, \
                 so the case s >= 2, t = 1 needs n >= n0 >= 1 matching edges in F2 = {f2}"
            ),
            Some(orientation),
        );
    }

    let n0 = format!("n0({f1}, {f2})");
    let mut c = Classification::decided(
        Rule::R8,
        format!(
            "F1 = {f1}, F2 = {f2} fit the s >= 2, t = 1 case; finiteness requires \
             the matching count of F2 to reach {n0}"
        ),
        Some(orientation),
    );
    c.condition = Some(format!("{} >= {n0}", f2.matching_count));
    c
}

fn no_case_reason(g: &StarForestShape, h: &StarForestShape) -> String {
    let (s, t) = (g.stars.len(), h.stars.len());
    if s >= 2 && t >= 2 {
        format!("G = {g} and H = {h} both have at least two non-trivial stars")
    } else if g.stars[0].is_multiple_of(2) || h.stars[0].is_multiple_of(2) {
        format!("G = {g} and H = {h}: a largest star is even")
    } else {
        format!("G = {g} and H = {h}: the largest star of the multi-star side is too small")
    }
}

/// Classifies `(G ∪ ℓK₂, H ∪ mK₂)` for a pair already known to be
/// Ramsey-finite. Adjoining matchings preserves finiteness, so an
/// `Infinite` verdict here means the decision tree is inconsistent.
pub fn matching_extension_check(
    g: &Graph,
    h: &Graph,
    l: usize,
    m: usize,
) -> Result<Classification> {
    matching_extension_check_profiles(
        &TargetProfile::from_graph(g),
        &TargetProfile::from_graph(h),
        l,
        m,
    )
}

pub fn matching_extension_check_profiles(
    g: &TargetProfile,
    h: &TargetProfile,
    l: usize,
    m: usize,
) -> Result<Classification> {
    let base = classify_profiles(g, h)?;
    if base.verdict != Verdict::Finite {
        return Err(Error::Precondition(format!(
            "base pair is {} (rule {}), not finite",
            base.verdict,
            base.rule()
        )));
    }
    let extended = classify_profiles(&g.with_matching(l), &h.with_matching(m))?;
    if extended.verdict == Verdict::Infinite {
        return Err(Error::SelfConsistency(format!(
            "adding {l}K2 and {m}K2 to a finite pair gave an infinite verdict via {}",
            extended.rule()
        )));
    }
    Ok(extended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::build;

    fn profile(s: &str) -> TargetProfile {
        TargetProfile::from_spec(&s.parse().unwrap()).unwrap()
    }

    fn classify_str(g: &str, h: &str) -> Classification {
        classify_profiles(&profile(g), &profile(h)).unwrap()
    }

    #[test]
    fn shapes() {
        let s = shape_of(&build("S5+S2").unwrap()).unwrap();
        assert_eq!((s.stars.clone(), s.matching_count), (vec![5, 2], 0));
        let s = profile("S3+122K2").shape().unwrap();
        assert_eq!((s.stars.clone(), s.matching_count), (vec![3], 122));
        assert_eq!(
            shape_of(&build("S3+20K2").unwrap()).unwrap().matching_count,
            20
        );
        assert_eq!(shape_of(&build("P4").unwrap()), None);
        assert_eq!(shape_of(&build("K3").unwrap()), None);
        assert_eq!(s.to_string(), "S3+122K2");
    }

    #[test]
    fn bound_arithmetic() {
        assert_eq!(star_forest_matching_bound(5, 3, 2), 122);
    }

    #[test]
    fn rule_examples() {
        let c = classify_str("S5+S2", "S3+122K2");
        assert_eq!((c.verdict, c.rule()), (Verdict::Finite, Rule::R7));
        assert_eq!(c.orientation, Some(Orientation::AsGiven));
        let c = classify_str("S3+121K2", "S5+S2");
        assert_eq!((c.verdict, c.rule()), (Verdict::Unknown, Rule::R8));
        assert_eq!(c.orientation, Some(Orientation::Swapped));
        assert_eq!(c.condition.as_deref(), Some("121 >= n0(S5+S2, S3+121K2)"));

        assert_eq!(classify_str("S3", "S3").rule(), Rule::R5);
        assert_eq!(classify_str("S2", "S2").rule(), Rule::R6);
        assert_eq!(classify_str("K3", "K3").rule(), Rule::R2);
        assert_eq!(classify_str("P4", "S3").rule(), Rule::R4);
        assert_eq!(classify_str("K3", "5K2").rule(), Rule::R1);
        assert_eq!(classify_str("K3", "S2+K2").rule(), Rule::R3);
        assert_eq!(classify_str("S3+K2", "S5+2K2").rule(), Rule::R5);
    }

    #[test]
    fn star_forest_infinite_cases() {
        // Two multi-star sides.
        assert_eq!(classify_str("S3+S3", "S3+S3").rule(), Rule::R6);
        // Case (iii) inequality fails: 3 < 3 + 3 - 1.
        assert_eq!(classify_str("S3+S3", "S3").rule(), Rule::R6);
        // Even largest star on the single-star side.
        assert_eq!(classify_str("S5+S2", "S4+200K2").rule(), Rule::R6);
        // Case (iii) shape, but no K2 components anywhere.
        assert_eq!(classify_str("S5+S2", "S3").rule(), Rule::R6);
        assert_eq!(classify_str("S5+S2+K2", "S3").rule(), Rule::R8);
    }

    #[test]
    fn preconditions() {
        let k3 = build("K3").unwrap();
        let isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(classify(&k3, &isolated).is_err());
        assert!(classify(&Graph::empty(0).unwrap(), &k3).is_err());
    }

    #[test]
    fn spec_profiles_match_built_graphs() {
        for text in ["S5+S2", "P3+K2", "P5+C4", "K3+S1", "2K2+S4", "K2"] {
            let spec: GraphSpec = text.parse().unwrap();
            let mut a = TargetProfile::from_spec(&spec)
                .unwrap()
                .components()
                .to_vec();
            let mut b = TargetProfile::from_graph(&spec.build().unwrap())
                .components()
                .to_vec();
            a.sort_by_key(|k| format!("{k:?}"));
            b.sort_by_key(|k| format!("{k:?}"));
            assert_eq!(a, b, "{text}");
        }
    }

    #[test]
    fn extension_check() {
        let s3 = build("S3").unwrap();
        assert_eq!(
            matching_extension_check(&s3, &s3, 2, 1).unwrap().verdict,
            Verdict::Finite
        );
        assert_eq!(
            matching_extension_check(&s3, &s3, 0, 7).unwrap().verdict,
            Verdict::Finite
        );
        let c =
            matching_extension_check(&build("2K2").unwrap(), &build("K3").unwrap(), 0, 0).unwrap();
        assert_eq!(c.verdict, Verdict::Finite);
        assert!(
            matching_extension_check(&build("K3").unwrap(), &build("K3").unwrap(), 0, 0).is_err()
        );
    }
}
