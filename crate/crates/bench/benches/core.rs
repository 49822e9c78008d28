use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use ratxs::automata::Automaton;
use ratxs::catalog;
use ratxs::grigorchuk::{quotient_size, GrigWord};
use ratxs::groups::{Group, GroupElement, HoughtonPerm};
use ratxs::orders::build_cone;
use ratxs::verify::{bounded_power_membership, check_cross_section, cone_axioms_check};

fn automata(c: &mut Criterion) {
    let re = "((a|b)*abb(a|b)?)+|(ba)*";
    c.bench_function("regex to minimal DFA", |b| {
        b.iter(|| Automaton::from_regex(black_box(re), None).unwrap().minimize())
    });
    let m = catalog::lamplighter();
    c.bench_function("enumerate lamplighter words ≤ 14", |b| {
        b.iter(|| m.enumerate_words(black_box(14)).len())
    });
}

fn cross_sections(c: &mut Criterion) {
    let g = Group::parse("wr(C2,Z)").unwrap();
    let m = catalog::lamplighter();
    c.bench_function("lamplighter cross-section check", |b| {
        b.iter(|| check_cross_section(&m, &g, 12, 3, 100_000).unwrap())
    });
}

fn houghton(c: &mut Criterion) {
    let g = Group::parse("H2").unwrap();
    let s: Vec<GroupElement> = [(0, 1), (1, 2), (2, 3)]
        .iter()
        .map(|&(x, y)| GroupElement::Houghton(HoughtonPerm::transposition(x, y)))
        .chain([g.identity()])
        .collect();
    let h = GroupElement::Houghton(HoughtonPerm::crossing_witness(13));
    c.bench_function("power membership of h13", |b| {
        b.iter(|| bounded_power_membership(&g, &h, &s, 2, 8).unwrap())
    });
}

fn grigorchuk(c: &mut Criterion) {
    c.bench_function("quotient G_4", |b| b.iter(|| quotient_size(black_box(4), 1 << 20).unwrap()));
    let w: GrigWord = "abacabadacab".repeat(4).parse().unwrap();
    c.bench_function("word problem, 48 letters", |b| b.iter(|| w.is_trivial()));
}

fn cones(c: &mut Criterion) {
    let cone = build_cone("wr(z+,z+)").unwrap();
    c.bench_function("wreath cone axioms, radius 5", |b| {
        b.iter(|| cone_axioms_check(&cone, 5, 100_000, 5_000, 1).unwrap())
    });
}

criterion_group!(benches, automata, cross_sections, houghton, grigorchuk, cones);
criterion_main!(benches);
