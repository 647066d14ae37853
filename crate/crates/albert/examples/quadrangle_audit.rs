//! Incidence-geometry audits: the order-(2,2) quadrangle fixture, negative
//! controls, exact projections in the classical quadrangle, and a finite
//! window of the exceptional quadrangle built from generator orbits.
//!
//! Run with: `cargo run --example quadrangle_audit`

use albert::geometry::{
    build_classical_sample, build_e6_sample, check_gq_axioms, classical_projection, export_dot,
    fano_fixture, grid3_fixture, w2_fixture, AuditMode,
};
use albert::spin::standard_generators;
use albert::veronese::collinear_strong_family;

fn main() {
    // the unique generalized quadrangle of order (2,2)
    let w2 = w2_fixture();
    let report = check_gq_axioms(&w2, AuditMode::Full);
    println!(
        "W(2): {} points, {} lines, quadrangle audit pass = {}",
        w2.n_points(),
        w2.n_lines(),
        report.gq_pass()
    );
    println!(
        "dual W(2) audit pass = {}",
        check_gq_axioms(&w2.dualize(), AuditMode::Full).gq_pass()
    );

    // controls: a projective plane fails by triangles, the grid by thinness
    let fano = check_gq_axioms(&fano_fixture(), AuditMode::Full);
    println!(
        "Fano plane: triangles found = {}, line-pair axiom ok = {}",
        fano.triangles.len(),
        fano.axiom_a_ok()
    );
    let grid = check_gq_axioms(&grid3_fixture(), AuditMode::Full);
    println!("3x3 grid: thick = {}", grid.thick());

    // exact projections in the classical quadrangle
    let sample = build_classical_sample(20, 7);
    let p = &sample.points[0];
    let m = sample
        .lines
        .iter()
        .find(|m| !m.contains(&p.basis()[0]))
        .expect("a non-incident line exists");
    let (q, l) = classical_projection(p, m).unwrap();
    println!(
        "\nclassical projection: q has dim {}, L has dim {} and is totally isotropic: {}",
        q.dim(),
        l.dim(),
        l.totally_isotropic_h6()
    );

    // a window of the exceptional quadrangle from generator orbits
    let seeds = collinear_strong_family();
    let gens = standard_generators();
    let e6 = build_e6_sample(&seeds, &gens[..4], 1, 30);
    let audit = check_gq_axioms(&e6.sample, AuditMode::SampleLocal);
    println!(
        "\nexceptional sample: {} strongly isotropic points, {} lines",
        e6.points.len(),
        e6.sample.n_lines()
    );
    println!(
        "digon/triangle free = {}, line-pair axiom ok = {}",
        audit.digon_triangle_free(),
        audit.axiom_a_ok()
    );

    println!("\nDOT export of W(2), first lines:");
    for line in export_dot(&w2).lines().take(5) {
        println!("  {line}");
    }
}
