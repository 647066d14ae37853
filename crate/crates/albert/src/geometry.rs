//! Generic rank-2 incidence geometry on finite samples: building a geometry
//! from a collinearity relation, generalized-quadrangle axiom audits,
//! duality, graph exports, and the exact constructive projection in the
//! classical quadrangle of the 6-dimensional hermitian space.
//!
//! Audits distinguish two modes. `Full` treats the sample as the whole
//! geometry (fixtures like the order-(2,2) quadrangle). `SampleLocal`
//! treats it as a finite window onto an infinite geometry: a projection
//! count of zero is reported as unresolved rather than as a violation,
//! while two or more distinct projections remain a hard failure.

use crate::plucker::{form_h6, Subspace, Vec6, DIM_V};
use crate::rng::SplitMix64;
use crate::scalar::{Field, GScalar};
use crate::spin::{orbit, Generator};
use crate::veronese::{collinear, is_strongly_isotropic, ProjPoint};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeometryError {
    BadDimension { expected: usize, got: usize },
    NotIsotropic,
    NotTotallyIsotropic,
    PointOnLine,
    /// `dim(M  cap  p^perp) = 2` would force a totally isotropic 3-space,
    /// impossible at Witt index 2; signals corrupted input data.
    WittViolation,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::BadDimension { expected, got } => {
                write!(f, "expected dimension {expected}, got {got}")
            }
            GeometryError::NotIsotropic => write!(f, "point is not isotropic"),
            GeometryError::NotTotallyIsotropic => write!(f, "line is not totally isotropic"),
            GeometryError::PointOnLine => write!(f, "point lies on the line"),
            GeometryError::WittViolation => {
                write!(f, "Witt-index violation: data is corrupt")
            }
        }
    }
}

impl std::error::Error for GeometryError {}

/// A finite materialized point/line incidence structure. Lines are stored
/// as sorted point-index rows; rows with identical point sets are merged
/// (an element of a thick geometry is determined by its point row).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncidenceSample {
    point_labels: Vec<String>,
    lines: Vec<Vec<usize>>,
}

impl IncidenceSample {
    pub fn new(point_labels: Vec<String>, line_rows: Vec<Vec<usize>>) -> Self {
        let n = point_labels.len();
        let mut seen = BTreeSet::new();
        let mut lines = Vec::new();
        for row in line_rows {
            let set: BTreeSet<usize> = row.into_iter().collect();
            assert!(
                set.iter().all(|&p| p < n),
                "incidence references a missing point"
            );
            if seen.insert(set.clone()) {
                lines.push(set.into_iter().collect());
            }
        }
        IncidenceSample {
            point_labels,
            lines,
        }
    }

    pub fn n_points(&self) -> usize {
        self.point_labels.len()
    }

    pub fn n_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point_label(&self, p: usize) -> &str {
        &self.point_labels[p]
    }

    pub fn line_rows(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn incident(&self, p: usize, l: usize) -> bool {
        self.lines[l].binary_search(&p).is_ok()
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&l| self.incident(p, l))
            .collect()
    }

    /// The dual geometry: lines become points and points become lines.
    pub fn dualize(&self) -> IncidenceSample {
        let labels = (0..self.lines.len()).map(|l| format!("L{l}")).collect();
        let rows = (0..self.point_labels.len())
            .map(|p| self.lines_through(p))
            .collect();
        IncidenceSample::new(labels, rows)
    }
}

/// A reflexive symmetric relation on an indexed set (closed on
/// construction).
#[derive(Clone, Debug)]
pub struct RelationSample {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl RelationSample {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        for i in 0..n {
            adj[i].insert(i);
        }
        for &(a, b) in pairs {
            assert!(a < n && b < n, "relation references a missing element");
            adj[a].insert(b);
            adj[b].insert(a);
        }
        RelationSample { n, adj }
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }
}

/// The incidence geometry of a relation: lines are the common-neighbor sets
/// `L(x,y)` over related distinct pairs, deduplicated.
pub fn gamma_from_relation(r: &RelationSample) -> IncidenceSample {
    let labels = (0..r.n).map(|i| format!("p{i}")).collect();
    let mut rows = Vec::new();
    for x in 0..r.n {
        for y in x + 1..r.n {
            if !r.related(x, y) {
                continue;
            }
            let row: Vec<usize> = (0..r.n)
                .filter(|&z| r.related(z, x) && r.related(z, y))
                .collect();
            rows.push(row);
        }
    }
    IncidenceSample::new(labels, rows)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AuditMode {
    /// The sample is the entire geometry.
    Full,
    /// The sample is a finite window; missing projections are unresolved,
    /// not violations.
    SampleLocal,
}

/// Result of the generalized-quadrangle axiom audit.
#[derive(Clone, Debug)]
pub struct GqReport {
    pub mode: AuditMode,
    /// Pairs of distinct lines sharing two or more points.
    pub line_pair_violations: Vec<(usize, usize)>,
    /// Non-incident `(point, line)` pairs with a projection count other
    /// than one (in sample-local mode: two or more).
    pub projection_violations: Vec<(usize, usize, usize)>,
    /// Sample-local only: non-incident pairs with no projection in the
    /// sample.
    pub unresolved_projections: usize,
    /// Points on fewer than three lines.
    pub thin_points: Vec<usize>,
    /// Lines with fewer than three points.
    pub thin_lines: Vec<usize>,
    /// Point pairs joined by two or more distinct lines.
    pub digons: Vec<(usize, usize)>,
    /// Pairwise collinear point triples not contained in a common line.
    pub triangles: Vec<(usize, usize, usize)>,
}

impl GqReport {
    pub fn axiom_a_ok(&self) -> bool {
        self.line_pair_violations.is_empty()
    }

    pub fn projections_ok(&self) -> bool {
        self.projection_violations.is_empty()
    }

    pub fn thick(&self) -> bool {
        self.thin_points.is_empty() && self.thin_lines.is_empty()
    }

    pub fn digon_triangle_free(&self) -> bool {
        self.digons.is_empty() && self.triangles.is_empty()
    }

    /// Full generalized-quadrangle verdict (thickness included).
    pub fn gq_pass(&self) -> bool {
        self.axiom_a_ok() && self.projections_ok() && self.thick() && self.digon_triangle_free()
    }
}

/// Audit the generalized-quadrangle axioms on a sample: (a) two distinct
/// lines share at most one point; (b) every non-incident point-line pair
/// has exactly one projection pair; plus thickness and a digon/triangle
/// scan of the collinearity graph.
pub fn check_gq_axioms(g: &IncidenceSample, mode: AuditMode) -> GqReport {
    let n = g.n_points();
    let m = g.n_lines();

    let mut line_pair_violations = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let shared = g.line_rows()[a]
                .iter()
                .filter(|p| g.line_rows()[b].contains(p))
                .count();
            if shared >= 2 {
                line_pair_violations.push((a, b));
            }
        }
    }

    let mut projection_violations = Vec::new();
    let mut unresolved = 0usize;
    for p in 0..n {
        let through_p = g.lines_through(p);
        for l in 0..m {
            if g.incident(p, l) {
                continue;
            }
            let mut count = 0usize;
            for &lp in &through_p {
                count += g.line_rows()[lp]
                    .iter()
                    .filter(|q| g.line_rows()[l].contains(q))
                    .count();
            }
            match mode {
                AuditMode::Full => {
                    if count != 1 {
                        projection_violations.push((p, l, count));
                    }
                }
                AuditMode::SampleLocal => {
                    if count >= 2 {
                        projection_violations.push((p, l, count));
                    } else if count == 0 {
                        unresolved += 1;
                    }
                }
            }
        }
    }

    let thin_points = (0..n)
        .filter(|&p| g.lines_through(p).len() < 3)
        .collect();
    let thin_lines = (0..m)
        .filter(|&l| g.line_rows()[l].len() < 3)
        .collect();

    // collinearity graph with line witnesses
    let mut joined = vec![vec![false; n]; n];
    for row in g.line_rows() {
        for (ai, &a) in row.iter().enumerate() {
            for &b in &row[ai + 1..] {
                joined[a][b] = true;
                joined[b][a] = true;
            }
        }
    }
    let mut digons = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let common = (0..m)
                .filter(|&l| g.incident(a, l) && g.incident(b, l))
                .count();
            if common >= 2 {
                digons.push((a, b));
            }
        }
    }
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !joined[a][b] {
                continue;
            }
            for c in b + 1..n {
                if !joined[a][c] || !joined[b][c] {
                    continue;
                }
                let on_common_line = (0..m)
                    .any(|l| g.incident(a, l) && g.incident(b, l) && g.incident(c, l));
                if !on_common_line {
                    triangles.push((a, b, c));
                }
            }
        }
    }

    GqReport {
        mode,
        line_pair_violations,
        projection_violations,
        unresolved_projections: unresolved,
        thin_points,
        thin_lines,
        digons,
        triangles,
    }
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

/// The 15 point rows of the unique generalized quadrangle of order (2,2):
/// points are the nonzero vectors of a 4-dimensional binary symplectic
/// space (labels are the bitmask values 1..15), lines its totally isotropic
/// 2-dimensional subspaces.
const W2_LINES: [[usize; 3]; 15] = [
    [1, 4, 5],
    [1, 8, 9],
    [1, 12, 13],
    [2, 4, 6],
    [2, 8, 10],
    [2, 12, 14],
    [3, 4, 7],
    [3, 8, 11],
    [3, 12, 15],
    [5, 10, 15],
    [5, 11, 14],
    [6, 9, 15],
    [6, 11, 13],
    [7, 9, 14],
    [7, 10, 13],
];

/// Hard-coded order-(2,2) generalized quadrangle.
pub fn w2_fixture() -> IncidenceSample {
    let labels = (1..=15).map(|v| format!("{v:04b}")).collect();
    let rows = W2_LINES
        .iter()
        .map(|row| row.iter().map(|&p| p - 1).collect())
        .collect();
    IncidenceSample::new(labels, rows)
}

/// The seven-point projective plane, as a negative control: its dual axiom
/// profile (triangles everywhere) is what the quadrangle audit must flag.
pub fn fano_fixture() -> IncidenceSample {
    let labels = (1..=7).map(|v| v.to_string()).collect();
    let rows = [
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 7],
        [5, 6, 1],
        [6, 7, 2],
        [7, 1, 3],
    ]
    .iter()
    .map(|row| row.iter().map(|&p| p - 1).collect())
    .collect();
    IncidenceSample::new(labels, rows)
}

/// The 3x3 grid geometry (rows and columns as lines); thin, hence not a
/// generalized quadrangle.
pub fn grid3_fixture() -> IncidenceSample {
    let labels = (0..9).map(|v| format!("({},{})", v / 3, v % 3)).collect();
    let mut rows = Vec::new();
    for r in 0..3 {
        rows.push((0..3).map(|c| 3 * r + c).collect());
        rows.push((0..3).map(|c| 3 * c + r).collect());
    }
    IncidenceSample::new(labels, rows)
}

// ---------------------------------------------------------------------------
// the classical quadrangle over the 6-dimensional hermitian space
// ---------------------------------------------------------------------------

/// Exact projection in the classical quadrangle: for a non-incident
/// isotropic point `p` and totally isotropic line `M`, the unique pair
/// `(q, L)` with `p I L I q I M`. `q = M cap p^perp` (certified
/// one-dimensional), `L = span(p, q)`.
pub fn classical_projection(
    p: &Subspace,
    m: &Subspace,
) -> Result<(Subspace, Subspace), GeometryError> {
    if p.dim() != 1 {
        return Err(GeometryError::BadDimension {
            expected: 1,
            got: p.dim(),
        });
    }
    if m.dim() != 2 {
        return Err(GeometryError::BadDimension {
            expected: 2,
            got: m.dim(),
        });
    }
    let pv = &p.basis()[0];
    if !form_h6(pv, pv).is_zero() {
        return Err(GeometryError::NotIsotropic);
    }
    if !m.totally_isotropic_h6() {
        return Err(GeometryError::NotTotallyIsotropic);
    }
    if m.contains(pv) {
        return Err(GeometryError::PointOnLine);
    }
    let q = m.intersect(&p.perp_h6());
    match q.dim() {
        1 => {}
        2 => return Err(GeometryError::WittViolation),
        other => unreachable!("dim(M cap p^perp) = {other} is impossible for valid input"),
    }
    let l = Subspace::from_spanning(&[pv.clone(), q.basis()[0].clone()]);
    debug_assert_eq!(l.dim(), 2);
    if !l.totally_isotropic_h6() {
        return Err(GeometryError::WittViolation);
    }
    Ok((q, l))
}

/// A generated finite window of the classical quadrangle with coordinate
/// back-pointers.
#[derive(Clone, Debug)]
pub struct ClassicalSample {
    pub points: Vec<Subspace>,
    pub lines: Vec<Subspace>,
    pub sample: IncidenceSample,
}

/// Lagrange decomposition `s = a^2 + b^2 + c^2 + d^2` by bounded search.
fn four_squares(s: u64) -> (i64, i64, i64, i64) {
    let r = (s as f64).sqrt() as u64 + 1;
    for a in 0..=r {
        if a * a > s {
            break;
        }
        for b in a..=r {
            if a * a + b * b > s {
                break;
            }
            for c in b..=r {
                let partial = a * a + b * b + c * c;
                if partial > s {
                    break;
                }
                let rest = s - partial;
                let d = (rest as f64).sqrt().round() as u64;
                for dd in d.saturating_sub(1)..=d + 1 {
                    if dd * dd == rest {
                        return (a as i64, b as i64, c as i64, dd as i64);
                    }
                }
            }
        }
    }
    unreachable!("every natural number is a sum of four squares");
}

/// A random `h6`-isotropic point: draw the positive-slot part with Gaussian
/// integer coordinates, then give the negative slots the matching norm via a
/// four-square decomposition.
pub fn random_isotropic_point(rng: &mut SplitMix64) -> Subspace {
    loop {
        let mut v = Vec6::zero();
        for k in 2..DIM_V {
            v.0[k] = GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3));
        }
        let norm: u64 = {
            let mut acc = GScalar::zero();
            for k in 2..DIM_V {
                acc = &acc + &Field::mul(&v.0[k], &v.0[k].conj_sigma());
            }
            let r = acc.expect_real();
            use num_traits::ToPrimitive;
            r.to_integer().to_u64().expect("small nonnegative")
        };
        if norm == 0 {
            continue;
        }
        let (a, b, c, d) = four_squares(norm);
        v.0[0] = GScalar::from_ints(a, b);
        v.0[1] = GScalar::from_ints(c, d);
        debug_assert!(form_h6(&v, &v).is_zero());
        return Subspace::from_spanning(&[v]);
    }
}

/// A random isotropic partner collinear with `p` (isotropic, orthogonal,
/// independent), by bounded search inside `p^perp`.
pub fn random_collinear_partner(rng: &mut SplitMix64, p: &Subspace) -> Option<Subspace> {
    let perp = p.perp_h6();
    let basis = perp.basis();
    for _ in 0..200 {
        let mut v = Vec6::zero();
        for b in &basis {
            let c = GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2));
            for k in 0..DIM_V {
                v.0[k] = &v.0[k] + &Field::mul(&c, &b.0[k]);
            }
        }
        if v.is_zero() || p.contains(&v) || !form_h6(&v, &v).is_zero() {
            continue;
        }
        return Some(Subspace::from_spanning(&[v]));
    }
    None
}

/// Generate a finite window of the classical quadrangle: around `n` points
/// on the isotropic quadric (clustered on totally isotropic lines so the
/// sample actually contains line rows), closed under the line construction
/// for collinear pairs.
pub fn build_classical_sample(n: usize, seed: u64) -> ClassicalSample {
    let mut rng = SplitMix64::new(seed);
    let mut points: Vec<Subspace> = Vec::new();
    let push = |pt: Subspace, points: &mut Vec<Subspace>| {
        if !points.contains(&pt) {
            points.push(pt);
        }
    };
    while points.len() < n {
        let p = random_isotropic_point(&mut rng);
        push(p.clone(), &mut points);
        // seed a full sampled line through p so rows are nonempty
        if let Some(q) = random_collinear_partner(&mut rng, &p) {
            push(q.clone(), &mut points);
            let (pb, qb) = (p.basis()[0].clone(), q.basis()[0].clone());
            for _ in 0..2 {
                let alpha = GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2));
                let mixed = &pb + &qb.scale(&alpha);
                if mixed.is_zero() {
                    continue;
                }
                push(Subspace::from_spanning(&[mixed]), &mut points);
            }
        }
    }
    points.truncate(n.max(points.len().min(n + 8)));

    // lines: spans of collinear independent pairs
    let mut lines: Vec<Subspace> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (pi, pj) = (&points[i], &points[j]);
            let (a, b) = (&pi.basis()[0], &pj.basis()[0]);
            if !form_h6(a, b).is_zero() {
                continue;
            }
            let l = Subspace::from_spanning(&[a.clone(), b.clone()]);
            if l.dim() != 2 {
                continue;
            }
            debug_assert!(l.totally_isotropic_h6());
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
    }

    let labels = points
        .iter()
        .enumerate()
        .map(|(i, _)| format!("p{i}"))
        .collect();
    let rows = lines
        .iter()
        .map(|l| {
            (0..points.len())
                .filter(|&i| l.contains(&points[i].basis()[0]))
                .collect()
        })
        .collect();
    ClassicalSample {
        sample: IncidenceSample::new(labels, rows),
        points,
        lines,
    }
}

// ---------------------------------------------------------------------------
// the exceptional quadrangle sample
// ---------------------------------------------------------------------------

/// A finite window of the exceptional quadrangle: strongly isotropic points
/// from generator orbits, lines as common-neighbor sets of collinear pairs.
#[derive(Clone, Debug)]
pub struct ExceptionalSample {
    pub points: Vec<ProjPoint>,
    pub sample: IncidenceSample,
}

pub fn build_e6_sample(
    seeds: &[ProjPoint],
    gens: &[Generator],
    depth: usize,
    cap: usize,
) -> ExceptionalSample {
    let mut points: Vec<ProjPoint> = Vec::new();
    for seed in seeds {
        for p in orbit(seed, gens, depth) {
            if points.len() >= cap {
                break;
            }
            if !points.contains(&p) {
                assert_eq!(
                    is_strongly_isotropic(&p),
                    Ok(true),
                    "orbit left the strongly isotropic locus"
                );
                points.push(p);
            }
        }
    }

    let n = points.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        adj[i][i] = true;
        for j in i + 1..n {
            let c = collinear(&points[i], &points[j]).expect("orbit points are Veronese");
            adj[i][j] = c;
            adj[j][i] = c;
        }
    }
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] {
                continue;
            }
            let row: Vec<usize> = (0..n).filter(|&z| adj[z][i] && adj[z][j]).collect();
            rows.push(row);
        }
    }
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    ExceptionalSample {
        sample: IncidenceSample::new(labels, rows),
        points,
    }
}

// ---------------------------------------------------------------------------
// exports
// ---------------------------------------------------------------------------

/// Bipartite DOT graph: square nodes for lines, circles for points.
pub fn export_dot(g: &IncidenceSample) -> String {
    let mut out = String::from("graph incidence {\n  node [shape=circle];\n");
    for p in 0..g.n_points() {
        out.push_str(&format!("  p{p} [label=\"{}\"];\n", g.point_label(p)));
    }
    out.push_str("  node [shape=box];\n");
    for l in 0..g.n_lines() {
        out.push_str(&format!("  l{l} [label=\"L{l}\"];\n"));
    }
    for (l, row) in g.line_rows().iter().enumerate() {
        for p in row {
            out.push_str(&format!("  p{p} -- l{l};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// JSON export `{"points": [...], "lines": [[...]]}`.
pub fn export_json(g: &IncidenceSample) -> String {
    let points: Vec<String> = (0..g.n_points())
        .map(|p| g.point_label(p).to_string())
        .collect();
    serde_json::json!({
        "schema": 1,
        "points": points,
        "lines": g.line_rows(),
    })
    .to_string()
}
