//! Randomized property suites, 500 cases each.

mod common;

use common::props;

#[test]
fn sigma_separation_is_monotone() {
    props::sigma_separation_is_monotone().unwrap();
}

#[test]
fn minimality_witness_is_exact() {
    props::minimality_witness_is_exact().unwrap();
}

#[test]
fn canonical_partition_refines_every_partition() {
    props::canonical_partition_refines_every_partition().unwrap();
}

#[test]
fn equatability_is_an_equivalence() {
    props::equatability_is_an_equivalence().unwrap();
}

#[test]
fn cutset_predicates_are_automorphism_invariant() {
    props::cutset_predicates_are_automorphism_invariant().unwrap();
}

#[test]
fn search_ignores_worker_count() {
    props::search_ignores_worker_count().unwrap();
}

#[test]
fn tracing_ignores_worker_count() {
    props::tracing_ignores_worker_count().unwrap();
}

#[test]
fn big_grid_has_forty_mid_lines() {
    props::big_grid_mid_lines();
}

#[test]
fn far_apart_vertices_are_cut_by_a_mid_line() {
    props::far_apart_vertices_are_cut_by_a_mid_line().unwrap();
}
