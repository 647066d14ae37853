//! The verification suites behind the `verify` command: each suite runs the
//! identities and invariants of one module on seeded random samples and
//! reports one named check per property.
//!
//! Sampling constants (documented for reproducibility): random rationals
//! have numerators in `[-9, 9]` and denominators in `{1, 2, 3, 5}`; every
//! suite draws from a SplitMix64 stream seeded by the run configuration, so
//! a fixed seed reproduces the run byte for byte. The float backend swaps
//! the exact scalars of the composition and Jordan suites for
//! double-precision complex numbers compared at tolerance `1e-9`; the other
//! suites are exact by nature and ignore the backend.

use crate::cayley::{cd_table, CdTable, CDNum};
use crate::geometry::{
    self, check_gq_axioms, classical_projection, AuditMode, RelationSample,
};
use crate::jordan::{Herm3, DIM};
use crate::plucker::{
    self, confluent, cross6, form_h2, form_h6, gram_h2, gram_h6, gram_positive_test,
    inverse_plucker, is_strongly_isotropic_biv, is_weakly_isotropic_biv, plucker_embed, triple6,
    wedge2, wedge4, witt_index, Bivector, Subspace, Vec6,
};
use crate::rng::SplitMix64;
use crate::scalar::{rat, Field, GScalar, Rational, C64};
use crate::spin::{
    certify, det_invariance_of_images, orbit, standard_generators, DetMode, Generator, GroupWord,
};
use crate::veronese::{
    appendix_violation, classify, collinear_strong_family, form_h,
    generate_nonisotropic_points, generate_weak_points, is_strongly_isotropic,
    is_strongly_isotropic_appendix, is_veronese, map_h, strong_fixture, symplecton, v_incident,
    weak_not_strong_witness, HermC, ProjPoint,
};
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Composition,
    Jordan,
    Veronese,
    Liegroups,
    Plucker,
    Geometry,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Composition,
        Suite::Jordan,
        Suite::Veronese,
        Suite::Liegroups,
        Suite::Plucker,
        Suite::Geometry,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Composition => "composition",
            Suite::Jordan => "jordan",
            Suite::Veronese => "veronese",
            Suite::Liegroups => "liegroups",
            Suite::Plucker => "plucker",
            Suite::Geometry => "geometry",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .find(|s| s.name() == name)
            .map(|s| vec![*s])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub samples: usize,
    pub seed: u64,
    pub backend: Backend,
    pub fast: bool,
    /// Test hook: corrupt one structure-constant table entry so the
    /// composition suite must fail with a witness.
    pub inject_table_fault: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: Suite::ALL.to_vec(),
            samples: 500,
            seed: 7,
            backend: Backend::Exact,
            fast: false,
            inject_table_fault: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: Option<String>,
}

impl Check {
    fn ok(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            details: None,
        }
    }

    fn ok_with(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            details: Some(details.into()),
        }
    }

    fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: false,
            details: Some(details.into()),
        }
    }

    fn expect(name: impl Into<String>, violation: Option<String>) -> Self {
        match violation {
            None => Check::ok(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
    /// Structured suite-specific payload (the liegroups suite publishes its
    /// per-generator certification records here).
    pub payload: Option<serde_json::Value>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub backend: Backend,
    pub fast: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.suites.iter().all(|s| s.pass())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::wire::SCHEMA_VERSION,
            "seed": self.seed,
            "samples": self.samples,
            "backend": self.backend.name(),
            "fast": self.fast,
            "pass": self.pass(),
            "suites": self.suites.iter().map(|s| json!({
                "name": s.suite,
                "pass": s.pass(),
                "payload": s.payload,
                "checks": s.checks.iter().map(|c| json!({
                    "name": c.name,
                    "pass": c.pass,
                    "details": c.details,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            for c in &s.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("[{tag}] {}/{}", s.suite, c.name));
                if let Some(d) = &c.details {
                    out.push_str(&format!(" -- {d}"));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "suite {}: {}\n",
                s.suite,
                if s.pass() { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.pass() { "pass" } else { "FAIL" }
        ));
        out
    }
}

pub fn run(cfg: &RunConfig) -> VerifyReport {
    let suites = cfg
        .suites
        .iter()
        .map(|s| match s {
            Suite::Composition => composition_suite(cfg),
            Suite::Jordan => jordan_suite(cfg),
            Suite::Veronese => veronese_suite(cfg),
            Suite::Liegroups => liegroups_suite(cfg),
            Suite::Plucker => plucker_suite(cfg),
            Suite::Geometry => geometry_suite(cfg),
        })
        .collect();
    VerifyReport {
        seed: cfg.seed,
        samples: cfg.samples,
        backend: cfg.backend,
        fast: cfg.fast,
        suites,
    }
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

const DENOMINATORS: [i64; 4] = [1, 2, 3, 5];

pub fn sample_rational(rng: &mut SplitMix64) -> Rational {
    rat(rng.int_in(-9, 9), *rng.pick(&DENOMINATORS))
}

pub fn sample_gscalar(rng: &mut SplitMix64) -> GScalar {
    GScalar::new(sample_rational(rng), sample_rational(rng))
}

/// A scalar field the suites can draw samples from.
pub trait SampleField: Field {
    fn sample(rng: &mut SplitMix64) -> Self;
    const FIELD_LABEL: &'static str;
}

impl SampleField for Rational {
    fn sample(rng: &mut SplitMix64) -> Self {
        sample_rational(rng)
    }
    const FIELD_LABEL: &'static str = "Q";
}

impl SampleField for GScalar {
    fn sample(rng: &mut SplitMix64) -> Self {
        sample_gscalar(rng)
    }
    const FIELD_LABEL: &'static str = "Q(i)";
}

impl SampleField for C64 {
    fn sample(rng: &mut SplitMix64) -> Self {
        use num_traits::ToPrimitive;
        let g = sample_gscalar(rng);
        C64 {
            re: g.re.to_f64().unwrap(),
            im: g.im.to_f64().unwrap(),
        }
    }
    const FIELD_LABEL: &'static str = "C64";
}

fn sample_cd<K: SampleField>(rng: &mut SplitMix64, level: u8) -> CDNum<K> {
    CDNum::new(level, (0..1usize << level).map(|_| K::sample(rng)).collect()).unwrap()
}

fn sample_herm<K: SampleField>(rng: &mut SplitMix64) -> Herm3<K> {
    let coords: Vec<K> = (0..DIM).map(|_| K::sample(rng)).collect();
    Herm3::from_coords(&coords)
}

// ---------------------------------------------------------------------------
// composition suite
// ---------------------------------------------------------------------------

fn corrupted_table() -> CdTable {
    let mut t = cd_table().clone();
    t.sign[3][5] = -t.sign[3][5];
    t
}

fn composition_checks<K: SampleField>(
    rng: &mut SplitMix64,
    samples: usize,
    table: &CdTable,
) -> Vec<Check> {
    let label = K::FIELD_LABEL;
    let mut checks = Vec::new();
    let mul = |a: &CDNum<K>, b: &CDNum<K>| a.mul_with_table(b, table).unwrap();

    // table is derived from the recursion; check it agrees (deterministic
    // over the basis, so a corrupted table is caught here with a witness)
    let mut violation = None;
    'table: for a in 0..8 {
        for b in 0..8 {
            let ea: CDNum<K> = CDNum::unit(3, a).unwrap();
            let eb = CDNum::unit(3, b).unwrap();
            if !mul(&ea, &eb).close_to(&ea.mul_recursive(&eb).unwrap()) {
                violation = Some(format!("table disagrees with the recursion at e{a} * e{b}"));
                break 'table;
            }
        }
    }
    checks.push(Check::expect(
        format!("structure table matches doubling recursion over {label}"),
        violation,
    ));

    let mut violation = None;
    for s in 0..samples {
        let level = 1 + (s % 3) as u8;
        let x = sample_cd::<K>(rng, level);
        let y = sample_cd::<K>(rng, level);
        let lhs = mul(&x, &y).norm_form();
        let rhs = x.norm_form().mul(&y.norm_form());
        if !lhs.close_to(&rhs) {
            violation = Some(format!("N(xy) != N(x)N(y) at level {level}: x={x}, y={y}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("norm composition N(xy) = N(x)N(y) over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples / 2 {
        let x = sample_cd::<K>(rng, 3);
        let y = sample_cd::<K>(rng, 3);
        let sq = mul(&x, &x);
        if !mul(&sq, &y).close_to(&mul(&x, &mul(&x, &y)))
            || !mul(&y, &sq).close_to(&mul(&mul(&y, &x), &x))
        {
            violation = Some(format!("alternativity fails: x={x}, y={y}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("alternativity x^2y = x(xy), yx^2 = (yx)x over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples / 2 {
        let x = sample_cd::<K>(rng, 3);
        let y = sample_cd::<K>(rng, 3);
        let z = sample_cd::<K>(rng, 3);
        let b = |a: &CDNum<K>, c: &CDNum<K>| a.bracket(c).unwrap();
        // multiplication adjoints: <xy|z> = <y|conj(x) z> = <x|z conj(y)>
        let lhs = b(&mul(&x, &y), &z);
        if !lhs.close_to(&b(&y, &mul(&x.conj(), &z)))
            || !lhs.close_to(&b(&x, &mul(&z, &y.conj())))
        {
            violation = Some(format!("bracket adjoint fails: x={x}, y={y}, z={z}"));
            break;
        }
        // conjugation is a bracket isometry: <conj(y)conj(x)|conj(z)> = <xy|z>
        // and <conj(x)|conj(z)conj(y)> = <x|yz>
        if !lhs.close_to(&b(&mul(&y.conj(), &x.conj()), &z.conj()))
            || !b(&x, &mul(&y, &z)).close_to(&b(&x.conj(), &mul(&z.conj(), &y.conj())))
        {
            violation = Some(format!("bracket isometry fails: x={x}, y={y}, z={z}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!(
            "bracket adjoints <xy|z> = <y|conj(x)z> = <x|z conj(y)> and conjugation isometry over {label}"
        ),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples / 2 {
        let x = sample_cd::<K>(rng, 3);
        let y = sample_cd::<K>(rng, 3);
        let z = sample_cd::<K>(rng, 3);
        if !mul(&x, &y).re_part().close_to(&mul(&y, &x).re_part())
            || !mul(&x, &mul(&y, &z))
                .re_part()
                .close_to(&mul(&mul(&x, &y), &z).re_part())
        {
            violation = Some(format!("trace identity fails: x={x}, y={y}, z={z}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("Re(xy) = Re(yx) and Re(x(yz)) = Re((xy)z) over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples / 4 {
        let x = sample_cd::<K>(rng, 2);
        let y = sample_cd::<K>(rng, 2);
        let z = sample_cd::<K>(rng, 2);
        if !mul(&mul(&x, &y), &z).close_to(&mul(&x, &mul(&y, &z))) {
            violation = Some(format!("quaternions failed to associate: {x}, {y}, {z}"));
            break;
        }
        let x = sample_cd::<K>(rng, 1);
        let y = sample_cd::<K>(rng, 1);
        if !mul(&x, &y).close_to(&mul(&y, &x)) {
            violation = Some(format!("level-1 numbers failed to commute: {x}, {y}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("associativity at level 2 and commutativity at level 1 over {label}"),
        violation,
    ));

    // witnesses for the failures that must exist at the next level up
    let mut non_assoc = None;
    'assoc: for a in 1..8 {
        for b in 1..8 {
            for c in 1..8 {
                let ea: CDNum<K> = CDNum::unit(3, a).unwrap();
                let eb = CDNum::unit(3, b).unwrap();
                let ec = CDNum::unit(3, c).unwrap();
                if !mul(&mul(&ea, &eb), &ec).close_to(&mul(&ea, &mul(&eb, &ec))) {
                    non_assoc = Some(format!("(e{a} e{b}) e{c} != e{a} (e{b} e{c})"));
                    break 'assoc;
                }
            }
        }
    }
    checks.push(match non_assoc {
        Some(w) => Check::ok_with(
            format!("non-associativity witness at level 3 over {label}"),
            w,
        ),
        None => Check::fail(
            format!("non-associativity witness at level 3 over {label}"),
            "no witness found: level 3 appears associative",
        ),
    });
    let mut non_comm = None;
    'comm: for a in 1..4 {
        for b in 1..4 {
            let ea: CDNum<K> = CDNum::unit(2, a).unwrap();
            let eb = CDNum::unit(2, b).unwrap();
            if !mul(&ea, &eb).close_to(&mul(&eb, &ea)) {
                non_comm = Some(format!("e{a} e{b} != e{b} e{a}"));
                break 'comm;
            }
        }
    }
    checks.push(match non_comm {
        Some(w) => Check::ok_with(
            format!("non-commutativity witness at level 2 over {label}"),
            w,
        ),
        None => Check::fail(
            format!("non-commutativity witness at level 2 over {label}"),
            "no witness found: level 2 appears commutative",
        ),
    });

    let mut violation = None;
    for _ in 0..samples / 4 {
        let x = sample_cd::<K>(rng, 3);
        if !x.conj().conj().close_to(&x) {
            violation = Some(format!("conjugation is not involutive on {x}"));
            break;
        }
        if let Ok(inv) = x.invert() {
            if !mul(&x, &inv).close_to(&CDNum::one(3)) {
                violation = Some(format!("x * invert(x) != 1 for {x}"));
                break;
            }
        }
    }
    checks.push(Check::expect(
        format!("conjugation involutive and x invert(x) = 1 over {label}"),
        violation,
    ));

    checks
}

fn composition_suite(cfg: &RunConfig) -> SuiteReport {
    let mut rng = SplitMix64::new(cfg.seed ^ 0xc0de);
    let table = if cfg.inject_table_fault {
        corrupted_table()
    } else {
        cd_table().clone()
    };
    let mut checks = Vec::new();
    match cfg.backend {
        Backend::Exact => {
            checks.extend(composition_checks::<Rational>(
                &mut rng,
                cfg.samples,
                &table,
            ));
            checks.extend(composition_checks::<GScalar>(&mut rng, cfg.samples, &table));
            // a dedicated null-element check only makes sense over Q(i)
            let mut c = vec![GScalar::zero(); 8];
            c[0] = GScalar::one();
            c[1] = GScalar::i();
            let null = CDNum::new(3, c).unwrap();
            checks.push(Check::expect(
                "null octonion 1 + i e1 is reported non-invertible".to_string(),
                match null.invert() {
                    Err(crate::cayley::CayleyError::NotInvertible) => None,
                    other => Some(format!("unexpected result {other:?}")),
                },
            ));
        }
        Backend::Float => {
            checks.extend(composition_checks::<C64>(&mut rng, cfg.samples, &table));
        }
    }
    SuiteReport {
        suite: "composition",
        checks,
        payload: None,
    }
}

// ---------------------------------------------------------------------------
// jordan suite
// ---------------------------------------------------------------------------

fn jordan_checks<K: SampleField>(rng: &mut SplitMix64, samples: usize) -> Vec<Check> {
    let label = K::FIELD_LABEL;
    let mut checks = Vec::new();

    let mut violation = None;
    for _ in 0..samples {
        let x = sample_herm::<K>(rng);
        let y = sample_herm::<K>(rng);
        if !x.jordan_mul(&y).close_to(&y.jordan_mul(&x)) {
            violation = Some(format!("commutativity fails: X={x}, Y={y}"));
            break;
        }
        let sq = x.jordan_mul(&x);
        if !sq
            .jordan_mul(&y)
            .jordan_mul(&x)
            .close_to(&sq.jordan_mul(&y.jordan_mul(&x)))
        {
            violation = Some(format!("Jordan identity fails: X={x}, Y={y}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("commutativity and the Jordan identity over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples {
        let x = sample_herm::<K>(rng);
        let y = sample_herm::<K>(rng);
        let z = sample_herm::<K>(rng);
        if !x
            .bilinear(&y.jordan_mul(&z))
            .close_to(&x.jordan_mul(&y).bilinear(&z))
        {
            violation = Some(format!("(X, Y o Z) != (X o Y, Z): X={x}, Y={y}, Z={z}"));
            break;
        }
        if !x.bilinear(&y).close_to(&x.bilinear_via_trace(&y)) {
            violation = Some(format!("bilinear routes disagree: X={x}, Y={y}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("bilinear associativity and trace-route agreement over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples / 2 {
        let x = sample_herm::<K>(rng);
        let y = sample_herm::<K>(rng);
        let z = sample_herm::<K>(rng);
        let t = x.trilinear(&y, &z);
        if !t.close_to(&y.trilinear(&z, &x)) || !t.close_to(&z.trilinear(&y, &x)) {
            violation = Some(format!("trilinear symmetry fails: X={x}, Y={y}, Z={z}"));
            break;
        }
        // 6(X,Y,Z) = det(X+Y+Z) - det(X+Y) - det(X+Z) - det(Y+Z)
        //            + det X + det Y + det Z
        let mut six = (&(&x + &y) + &z).det();
        six = six.sub(&(&x + &y).det());
        six = six.sub(&(&x + &z).det());
        six = six.sub(&(&y + &z).det());
        six = six.add(&x.det()).add(&y.det()).add(&z.det());
        if !t.mul(&K::from_int(6)).close_to(&six) {
            violation = Some(format!("polarization fails: X={x}, Y={y}, Z={z}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("trilinear symmetry and six-term determinant polarization over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples {
        let x = sample_herm::<K>(rng);
        if !x.det().close_to(&x.det_via_trilinear()) {
            violation = Some(format!("det routes disagree on X={x}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("closed-form and trace-form determinants agree over {label}"),
        violation,
    ));

    let basis = Herm3::<K>::basis27();
    let mut violation = None;
    for _ in 0..samples / 4 {
        let x = sample_herm::<K>(rng);
        let y = sample_herm::<K>(rng);
        let c = x.cross(&y);
        if !c.close_to(&x.cross_via_jordan(&y)) {
            violation = Some(format!("cross routes disagree: X={x}, Y={y}"));
            break;
        }
        for z in &basis {
            if !c
                .bilinear(z)
                .close_to(&x.trilinear(&y, z).mul(&K::from_int(3)))
            {
                violation = Some(format!("(X x Y, Z) != 3(X,Y,Z): X={x}, Y={y}, Z={z}"));
                break;
            }
        }
        if violation.is_some() {
            break;
        }
    }
    checks.push(Check::expect(
        format!("cross product routes and duality to the trilinear form over {label}"),
        violation,
    ));

    let mut violation = None;
    for _ in 0..samples {
        let x = sample_herm::<K>(rng);
        let xx = x.cross(&x);
        if !x.scale(&x.det()).close_to(&xx.cross(&xx)) {
            violation = Some(format!("adjoint identity fails on X={x}"));
            break;
        }
    }
    checks.push(Check::expect(
        format!("adjoint identity X det X = (XxX)x(XxX) over {label}"),
        violation,
    ));

    checks
}

fn jordan_suite(cfg: &RunConfig) -> SuiteReport {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x10da);
    let samples = cfg.samples.max(8);
    let checks = match cfg.backend {
        Backend::Exact => {
            let mut checks = jordan_checks::<Rational>(&mut rng, samples);
            checks.extend(jordan_checks::<GScalar>(&mut rng, samples / 2));
            checks
        }
        Backend::Float => jordan_checks::<C64>(&mut rng, samples),
    };
    SuiteReport {
        suite: "jordan",
        checks,
        payload: None,
    }
}

// ---------------------------------------------------------------------------
// veronese suite
// ---------------------------------------------------------------------------

fn veronese_suite(cfg: &RunConfig) -> SuiteReport {
    let mut checks = Vec::new();
    let weak_points = generate_weak_points(cfg.samples, cfg.seed ^ 0x7e50);
    checks.push(Check::ok_with(
        "weak-point generator emits verified Veronese isotropic points",
        format!("{} points", weak_points.len()),
    ));

    let fixture = strong_fixture();
    checks.push(Check::expect(
        "frozen strongly isotropic fixture certified by both procedures",
        match (
            is_strongly_isotropic(&fixture),
            is_strongly_isotropic_appendix(&fixture),
        ) {
            (Ok(true), Ok(true)) => None,
            other => Some(format!("{other:?}")),
        },
    ));
    let witness = weak_not_strong_witness();
    checks.push(Check::expect(
        "weakly-but-not-strongly isotropic witness rejected by both procedures",
        match (
            is_strongly_isotropic(&witness),
            is_strongly_isotropic_appendix(&witness),
        ) {
            (Ok(false), Ok(false)) => None,
            other => Some(format!("{other:?}")),
        },
    ));

    let controls = generate_nonisotropic_points(cfg.samples / 5 + 5, cfg.seed ^ 0x0c11);
    let mut violation = None;
    let mut strong_count = 0usize;
    for p in weak_points.iter().chain(controls.iter()) {
        let defining = is_strongly_isotropic(p);
        let appendix = is_strongly_isotropic_appendix(p);
        if defining != appendix {
            violation = Some(format!(
                "procedures disagree on {p}: defining {defining:?}, appendix {appendix:?}"
            ));
            break;
        }
        if defining == Ok(true) {
            strong_count += 1;
        }
    }
    checks.push(Check::expect(
        format!(
            "defining identity and coordinate equations agree on {} weak points and {} controls ({strong_count} strong)",
            weak_points.len(),
            controls.len()
        ),
        violation,
    ));

    let mut rng = SplitMix64::new(cfg.seed ^ 0xf00f);
    let mut violation = None;
    for _ in 0..cfg.samples / 4 {
        let x = sample_herm::<GScalar>(&mut rng);
        let y = sample_herm::<GScalar>(&mut rng);
        if form_h(&x, &y) != form_h(&y, &x).conj_sigma() {
            violation = Some(format!("h not hermitian on X={x}, Y={y}"));
            break;
        }
        let lam = sample_gscalar(&mut rng);
        if form_h(&x.scale(&lam), &y) != Field::mul(&lam, &form_h(&x, &y)) {
            violation = Some(format!("h not linear in the first slot on X={x}"));
            break;
        }
        if map_h(&map_h(&x)) != x {
            violation = Some(format!("H not involutive on X={x}"));
            break;
        }
        if form_h(&x, &y) != x.bilinear(&map_h(&y)) {
            violation = Some(format!("h routes disagree on X={x}, Y={y}"));
            break;
        }
    }
    checks.push(Check::expect(
        "h is sigma-hermitian, first-slot linear, and agrees with (X, H(Y))",
        violation,
    ));

    let mut violation = None;
    let phases = crate::veronese::unit_phases();
    for (k, p) in weak_points.iter().take(40).enumerate() {
        let lam = &phases[k % phases.len()];
        let scaled = p.rep().scale(&Field::mul(lam, &GScalar::from_int(3)));
        if !is_veronese(&scaled) {
            violation = Some(format!("rescaling broke the Veronese conditions on {p}"));
            break;
        }
        let q = ProjPoint::new(scaled).expect("nonzero");
        if q != *p {
            violation = Some(format!("projective normalization not canonical on {p}"));
            break;
        }
    }
    checks.push(Check::expect(
        "classifier verdicts are invariant under rescaling of the representative",
        violation,
    ));

    let family = collinear_strong_family();
    let gens = standard_generators();
    let mut violation = None;
    for g in &gens {
        for p in family.iter().take(4) {
            let image = ProjPoint::new(g.apply(p.rep())).expect("nonzero");
            if is_strongly_isotropic(&image) != Ok(true) {
                violation = Some(format!("{} broke strong isotropy of {p}", g.label()));
                break;
            }
        }
        let w = ProjPoint::new(g.apply(witness.rep())).expect("nonzero");
        if is_strongly_isotropic(&w) != Ok(false) {
            violation = Some(format!("{} made the weak witness strong", g.label()));
            break;
        }
    }
    checks.push(Check::expect(
        "group generators preserve the isotropy classes",
        violation,
    ));

    let mut violation = None;
    for (i, p) in family.iter().enumerate() {
        for q in family.iter().skip(i) {
            let direct = p.rep().cross(q.rep()).is_zero();
            let through_h = map_h(p.rep()).cross(&map_h(q.rep())).is_zero();
            if direct != through_h {
                violation = Some(format!("X x Y = 0 not equivalent through H: {p}, {q}"));
                break;
            }
        }
    }
    for p in weak_points.iter().take(20) {
        let q = &family[0];
        let direct = p.rep().cross(q.rep()).is_zero();
        let through_h = map_h(p.rep()).cross(&map_h(q.rep())).is_zero();
        if direct != through_h {
            violation = Some(format!("X x Y = 0 not equivalent through H: {p}, {q}"));
            break;
        }
    }
    checks.push(Check::expect(
        "X x Y = 0 iff H(X) x H(Y) = 0 on Veronese pairs",
        violation,
    ));

    let u = HermC::diag_unit(0);
    let sympl = symplecton(&u).expect("E1 is Veronese");
    checks.push(Check::expect(
        "symplecton of the first diagonal idempotent has complex dimension 10",
        if sympl.dim() == 10 {
            None
        } else {
            Some(format!("dimension {}", sympl.dim()))
        },
    ));
    checks.push(Check::expect(
        "points with X o U = 0 are V-incident with the symplecton of U",
        {
            let e2 = ProjPoint::new(HermC::diag_unit(1)).unwrap();
            match v_incident(&e2, &u) {
                Ok(true) => None,
                other => Some(format!("{other:?}")),
            }
        },
    ));
    checks.push(Check::expect(
        "strong isotropy is V-incidence with the symplecton of H(X)",
        {
            let p = strong_fixture();
            match v_incident(&p, &map_h(p.rep())) {
                Ok(true) => None,
                other => Some(format!("{other:?}")),
            }
        },
    ));
    checks.push(Check::expect(
        "appendix certificate names the violated equation for the weak witness",
        match appendix_violation(witness.rep()) {
            Some(eq) => {
                if classify(witness.rep())
                    .expect("nonzero")
                    .failed_equation
                    .is_some()
                {
                    let _ = eq;
                    None
                } else {
                    Some("classification lost the certificate".to_string())
                }
            }
            None => Some("no violation found for a non-strong point".to_string()),
        },
    ));

    SuiteReport {
        suite: "veronese",
        checks,
        payload: None,
    }
}

// ---------------------------------------------------------------------------
// liegroups suite
// ---------------------------------------------------------------------------

fn liegroups_suite(cfg: &RunConfig) -> SuiteReport {
    let mut checks = Vec::new();
    let mut certifications = Vec::new();
    let mode = if cfg.fast {
        DetMode::Fast {
            samples: 2000,
            seed: cfg.seed ^ 0xde7,
        }
    } else {
        DetMode::Exhaustive
    };

    for g in standard_generators() {
        let word = GroupWord(vec![g.clone()]);
        let cert = certify(&word, mode);
        certifications.push(json!({
            "generator": crate::wire::generator_to_wire(&g),
            "det": cert.det,
            "h": cert.h,
            "bilinear": cert.bilinear,
            "commutesH": cert.commutes_h,
            "witness": cert.witness,
        }));
        let is_phase = matches!(&g, Generator::Somega(w)
            if *w != GScalar::one() && *w != GScalar::from_int(-1));
        let expected_bilinear = !is_phase;
        let mut problems = Vec::new();
        if !cert.det {
            problems.push("det");
        }
        if !cert.h {
            problems.push("h");
        }
        if cert.bilinear != expected_bilinear {
            problems.push("bilinear");
        }
        if cert.commutes_h != expected_bilinear {
            problems.push("commutesH");
        }
        let name = format!(
            "generator {} preserves det and h{}",
            cert.label,
            if expected_bilinear {
                ", the bilinear form, and commutes with H"
            } else {
                "; breaks (.,.) as a proper phase must"
            }
        );
        if problems.is_empty() {
            match (is_phase, &cert.witness) {
                (true, Some(w)) => checks.push(Check::ok_with(name, format!("witness: {w}"))),
                _ => checks.push(Check::ok(name)),
            }
        } else {
            checks.push(Check::fail(
                name,
                format!(
                    "failed properties {:?}; witness {:?}",
                    problems, cert.witness
                ),
            ));
        }
    }

    let images: Vec<HermC> = HermC::basis27()
        .iter()
        .map(|b| b.scale(&GScalar::from_int(2)))
        .collect();
    let scaling = det_invariance_of_images(&images, mode);
    let ratio = HermC::identity()
        .scale(&GScalar::from_int(2))
        .det();
    checks.push(Check::expect(
        "scaling map X -> 2X fails determinant invariance with det ratio 8",
        match (scaling, ratio == GScalar::from_int(8)) {
            (Err(w), true) => {
                let _ = w;
                None
            }
            (Ok(()), _) => Some("scaling map passed det invariance".to_string()),
            (_, false) => Some("det(2I) != 8".to_string()),
        },
    ));

    let gens = standard_generators();
    let word = GroupWord(vec![gens[0].clone(), gens[2].clone(), gens[5].clone()]);
    let m = word.to_matrix();
    let mut rng = SplitMix64::new(cfg.seed ^ 0x3a3a);
    let x = sample_herm::<GScalar>(&mut rng);
    checks.push(Check::expect(
        "word matrix reproduces the word action and composes by product",
        {
            let via_matrix = Herm3::from_coords(&m.apply(&x.coords()));
            let w1 = GroupWord(vec![gens[0].clone()]);
            let w2 = GroupWord(vec![gens[2].clone(), gens[5].clone()]);
            if via_matrix != word.apply(&x) {
                Some("matrix action mismatch".to_string())
            } else if w2.to_matrix().matmul(&w1.to_matrix()) != m {
                Some("matrix composition mismatch".to_string())
            } else {
                None
            }
        },
    ));

    let seed_point = strong_fixture();
    let depth = 2;
    let orb = orbit(&seed_point, &gens[..4], depth);
    let mut violation = None;
    for p in orb.iter().take(30) {
        if is_strongly_isotropic(p) != Ok(true) {
            violation = Some(format!("orbit point {p} lost strong isotropy"));
            break;
        }
    }
    checks.push(Check::expect(
        format!(
            "depth-{depth} orbit of the strong fixture stays strongly isotropic ({} points)",
            orb.len()
        ),
        violation,
    ));

    SuiteReport {
        suite: "liegroups",
        checks,
        payload: Some(json!({ "certifications": certifications })),
    }
}

// ---------------------------------------------------------------------------
// plucker suite
// ---------------------------------------------------------------------------

fn random_plane(rng: &mut SplitMix64) -> Subspace {
    loop {
        let a = Vec6(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
        }));
        let b = Vec6(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
        }));
        let s = Subspace::from_spanning(&[a, b]);
        if s.dim() == 2 {
            return s;
        }
    }
}

fn plucker_suite(cfg: &RunConfig) -> SuiteReport {
    let mut checks = Vec::new();

    let w_h6 = witt_index(&gram_h6());
    let w_h2 = witt_index(&gram_h2());
    let w_pos = witt_index(&gram_positive_test(5));
    checks.push(Check::expect(
        "Witt indices: h6 has 2, induced h2 has 7, positive form has 0",
        if (w_h6, w_h2, w_pos) == (2, 7, 0) {
            None
        } else {
            Some(format!("got ({w_h6}, {w_h2}, {w_pos})"))
        },
    ));

    let mut rng = SplitMix64::new(cfg.seed ^ 0x9a9a);
    let mut violation = None;
    for _ in 0..cfg.samples {
        let l = random_plane(&mut rng);
        let u = plucker_embed(&l).expect("dimension 2");
        if !plucker::is_decomposable(&u) {
            violation = Some(format!("embedded bivector not decomposable: {l:?}"));
            break;
        }
        if inverse_plucker(&u).unwrap() != l {
            violation = Some(format!("round trip failed on {l:?}"));
            break;
        }
    }
    checks.push(Check::expect(
        "embedding round trip on random planes",
        violation,
    ));

    let mut violation = None;
    let mut confluent_seen = 0usize;
    for round in 0..cfg.samples {
        let l1 = random_plane(&mut rng);
        // mix in pairs sharing a vector so both verdicts occur
        let l2 = if round % 3 == 0 {
            let shared = l1.basis()[0].clone();
            loop {
                let other = random_plane(&mut rng);
                let cand =
                    Subspace::from_spanning(&[shared.clone(), other.basis()[1].clone()]);
                if cand.dim() == 2 {
                    break cand;
                }
            }
        } else {
            random_plane(&mut rng)
        };
        let u = plucker_embed(&l1).unwrap();
        let v = plucker_embed(&l2).unwrap();
        let by_wedge = wedge4(&u, &v).iter().all(|c| c.is_zero());
        let by_cross = cross6(&u, &v).is_zero();
        let by_planes = confluent(&u, &v).expect("decomposable");
        if by_wedge != by_cross || by_wedge != by_planes {
            violation = Some(format!(
                "confluence routes disagree: wedge {by_wedge}, cross {by_cross}, planes {by_planes}"
            ));
            break;
        }
        if by_wedge {
            confluent_seen += 1;
        }
    }
    checks.push(Check::expect(
        format!(
            "confluence equivalence u^v = 0 iff u x v = 0 iff the planes meet ({confluent_seen} confluent pairs)"
        ),
        violation,
    ));

    let mut violation = None;
    for _ in 0..cfg.samples / 4 {
        let (l1, l2) = (random_plane(&mut rng), random_plane(&mut rng));
        let (b1, b2) = (l1.basis(), l2.basis());
        let u = wedge2(&b1[0], &b1[1]);
        let v = wedge2(&b2[0], &b2[1]);
        let det = Field::mul(&form_h6(&b1[0], &b2[0]), &form_h6(&b1[1], &b2[1])).sub(&Field::mul(
            &form_h6(&b1[0], &b2[1]),
            &form_h6(&b1[1], &b2[0]),
        ));
        if form_h2(&u, &v) != det {
            violation = Some(format!("h2 determinant formula fails on {l1:?}, {l2:?}"));
            break;
        }
        if form_h2(&u, &v) != form_h2(&v, &u).conj_sigma() {
            violation = Some("h2 not hermitian".to_string());
            break;
        }
    }
    checks.push(Check::expect(
        "h2 matches the 2x2 determinant formula on decomposables and is hermitian",
        violation,
    ));

    let mut violation = None;
    for _ in 0..cfg.samples / 4 {
        let u = Bivector(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2))
        }));
        let v = Bivector(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2))
        }));
        let w = Bivector(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2))
        }));
        let t = triple6(&u, &v, &w);
        if t != triple6(&v, &u, &w) || t != triple6(&w, &v, &u) || t != triple6(&u, &w, &v) {
            violation = Some("trilinear form not symmetric".to_string());
            break;
        }
    }
    checks.push(Check::expect(
        "wedge trilinear form is symmetric under all argument permutations",
        violation,
    ));

    let e = Vec6::basis;
    let mut violation = None;
    let strong = wedge2(&(&e(0) + &e(2)), &(&e(1) + &e(3)));
    if is_strongly_isotropic_biv(&strong) != Ok(true) {
        violation = Some("hyperbolic wedge should be strongly isotropic".to_string());
    }
    let not_weak = wedge2(&e(2), &e(3));
    if violation.is_none() && is_weakly_isotropic_biv(&not_weak) != Ok(false) {
        violation = Some("e3^e4 should not be weakly isotropic".to_string());
    }
    let weak_not_strong = wedge2(&(&e(0) + &e(2)), &e(1));
    if violation.is_none()
        && (is_weakly_isotropic_biv(&weak_not_strong) != Ok(true)
            || is_strongly_isotropic_biv(&weak_not_strong) != Ok(false))
    {
        violation = Some("degenerate plane misclassified".to_string());
    }
    checks.push(Check::expect(
        "bivector isotropy classifications on the reference examples",
        violation,
    ));

    SuiteReport {
        suite: "plucker",
        checks,
        payload: None,
    }
}

// ---------------------------------------------------------------------------
// geometry suite
// ---------------------------------------------------------------------------

fn geometry_suite(cfg: &RunConfig) -> SuiteReport {
    let mut checks = Vec::new();

    let w2 = geometry::w2_fixture();
    let w2_report = check_gq_axioms(&w2, AuditMode::Full);
    checks.push(Check::expect(
        "order-(2,2) quadrangle fixture passes the full axiom audit",
        if w2_report.gq_pass() {
            None
        } else {
            Some(format!("{w2_report:?}"))
        },
    ));
    let dual_report = check_gq_axioms(&w2.dualize(), AuditMode::Full);
    checks.push(Check::expect(
        "dual of the fixture is again a generalized quadrangle",
        if dual_report.gq_pass() {
            None
        } else {
            Some(format!("{dual_report:?}"))
        },
    ));
    let fano_report = check_gq_axioms(&geometry::fano_fixture(), AuditMode::Full);
    checks.push(Check::expect(
        "projective-plane control is flagged by the triangle scan",
        if !fano_report.triangles.is_empty() && fano_report.axiom_a_ok() {
            None
        } else {
            Some(format!("{fano_report:?}"))
        },
    ));
    let grid_report = check_gq_axioms(&geometry::grid3_fixture(), AuditMode::Full);
    checks.push(Check::expect(
        "grid control fails thickness",
        if grid_report.thick() {
            Some("grid misreported as thick".to_string())
        } else {
            None
        },
    ));

    let sample = geometry::build_classical_sample(26, cfg.seed ^ 0x6e0);
    let audit = check_gq_axioms(&sample.sample, AuditMode::SampleLocal);
    checks.push(Check::expect(
        "classical sample passes the sample-local audit",
        if audit.axiom_a_ok() && audit.projections_ok() && audit.digon_triangle_free() {
            None
        } else {
            Some(format!("{audit:?}"))
        },
    ));

    let mut projections = 0usize;
    let mut violation = None;
    'outer: for p in &sample.points {
        for m in &sample.lines {
            if projections >= cfg.samples.max(200) {
                break 'outer;
            }
            if m.contains(&p.basis()[0]) {
                continue;
            }
            match classical_projection(p, m) {
                Ok((q, l)) => {
                    let pv = &p.basis()[0];
                    let qv = &q.basis()[0];
                    if !l.contains(pv)
                        || !l.contains(qv)
                        || !m.contains(qv)
                        || !l.totally_isotropic_h6()
                    {
                        violation = Some("projection output failed certification".to_string());
                        break 'outer;
                    }
                    projections += 1;
                }
                Err(e) => {
                    violation = Some(format!("projection failed: {e}"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(Check::expect(
        format!("unique certified projection on {projections} non-incident point-line pairs"),
        violation,
    ));

    let n = sample.points.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j
                && form_h6(&sample.points[i].basis()[0], &sample.points[j].basis()[0]).is_zero()
            {
                pairs.push((i, j));
            }
        }
    }
    let gamma = geometry::gamma_from_relation(&RelationSample::new(n, &pairs));
    let original: std::collections::BTreeSet<Vec<usize>> = sample
        .sample
        .line_rows()
        .iter()
        .filter(|r| r.len() >= 2)
        .cloned()
        .collect();
    let derived: std::collections::BTreeSet<Vec<usize>> = gamma
        .line_rows()
        .iter()
        .filter(|r| r.len() >= 2)
        .cloned()
        .collect();
    checks.push(Check::expect(
        "collinearity relation reconstructs the classical line rows",
        if original == derived {
            None
        } else {
            Some("row sets differ".to_string())
        },
    ));

    let seeds = collinear_strong_family();
    let gens = standard_generators();
    let e6 = geometry::build_e6_sample(&seeds, &gens[..4], 2, 56);
    let e6_report = check_gq_axioms(&e6.sample, AuditMode::SampleLocal);
    checks.push(Check::expect(
        format!(
            "exceptional sample ({} strongly isotropic points, {} lines) has no digons or triangles",
            e6.points.len(),
            e6.sample.n_lines()
        ),
        if e6.points.len() >= 50
            && e6_report.digon_triangle_free()
            && e6_report.axiom_a_ok()
        {
            None
        } else {
            Some(format!(
                "points {}, digons {:?}, triangles {:?}",
                e6.points.len(),
                e6_report.digons,
                e6_report.triangles
            ))
        },
    ));

    SuiteReport {
        suite: "geometry",
        checks,
        payload: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_full_run_passes() {
        let cfg = RunConfig {
            samples: 24,
            fast: true,
            ..RunConfig::default()
        };
        let report = run(&cfg);
        for s in &report.suites {
            for c in &s.checks {
                assert!(c.pass, "{}/{}: {:?}", s.suite, c.name, c.details);
            }
        }
        assert!(report.pass());
    }

    #[test]
    fn fault_injection_is_caught_with_a_witness() {
        let cfg = RunConfig {
            suites: vec![Suite::Composition],
            samples: 16,
            inject_table_fault: true,
            ..RunConfig::default()
        };
        let report = run(&cfg);
        assert!(!report.pass());
        let failing: Vec<&Check> = report.suites[0]
            .checks
            .iter()
            .filter(|c| !c.pass)
            .collect();
        assert!(!failing.is_empty());
        assert!(failing
            .iter()
            .any(|c| c.details.as_deref().unwrap_or("").contains("e3 * e5")));
    }

    #[test]
    fn float_backend_runs_composition_and_jordan() {
        let cfg = RunConfig {
            suites: vec![Suite::Composition, Suite::Jordan],
            samples: 16,
            backend: Backend::Float,
            ..RunConfig::default()
        };
        let report = run(&cfg);
        assert!(report.pass(), "{}", report.render_text());
    }

    #[test]
    fn report_json_is_deterministic() {
        let cfg = RunConfig {
            suites: vec![Suite::Composition],
            samples: 12,
            ..RunConfig::default()
        };
        let a = run(&cfg).to_json().to_string();
        let b = run(&cfg).to_json().to_string();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\":1"));
    }
}
