//! End-to-end certificate exercises: building across an instance pool,
//! verifying, detecting mutations, and JSON round trips.

use kdom::certificate::{
    build_certificate, build_certificate_with, parse_certificate, serialize_certificate,
    verify_certificate, Certificate, MatrixClass,
};
use kdom::graph::Graph;
use kdom::multiset::Multiset;
use kdom::product::{Factor, ProductGraph};
use kdom::solver::{gamma_bnb, gamma_brute, SolveResult};

fn solve_instance(g: &Graph, h: &Graph, k: usize) -> (SolveResult, SolveResult, SolveResult) {
    let pg = ProductGraph::new(g.clone(), h.clone());
    (
        gamma_brute(g, k).unwrap(),
        gamma_brute(h, k).unwrap(),
        gamma_bnb(pg.graph(), k),
    )
}

fn certified(g: &Graph, h: &Graph, k: usize) -> Certificate {
    let (sg, sh, sp) = solve_instance(g, h, k);
    build_certificate(g, h, k, &sg, &sh, &sp).unwrap()
}

fn small_pool() -> Vec<Graph> {
    vec![
        Graph::complete(1).unwrap(),
        Graph::complete(2).unwrap(),
        Graph::path(3).unwrap(),
        Graph::path(4).unwrap(),
        Graph::cycle(3).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::star(4).unwrap(),
        Graph::random_gnp(4, 0.4, 5).unwrap(),
        Graph::random_gnp(4, 0.7, 6).unwrap(),
    ]
}

#[test]
fn every_built_certificate_verifies() {
    for g in small_pool() {
        for h in small_pool() {
            for k in 1..=2 {
                let cert = certified(&g, &h, k);
                let report = verify_certificate(&cert);
                assert!(report.all_passed(), "({g}, {h}, k={k}) failed:\n{report}");
                // headline bound plus the weaker quadratic corollary
                assert!(cert.chain.lhs <= 2 * k * cert.gamma_gh);
                assert!(cert.chain.lhs <= k * (k + 1) * cert.gamma_gh);
            }
        }
    }
}

#[test]
fn product_blocks_form_a_k_squared_partition() {
    for (g, h, k) in [
        (Graph::path(4).unwrap(), Graph::cycle(3).unwrap(), 2),
        (Graph::star(4).unwrap(), Graph::complete(3).unwrap(), 2),
        (Graph::path(3).unwrap(), Graph::path(3).unwrap(), 3),
    ] {
        let cert = certified(&g, &h, k);
        let pg = ProductGraph::new(g.clone(), h.clone());
        let mut union = Multiset::new();
        for i in 0..cert.partition_g.block_count() {
            for j in 0..cert.partition_h.block_count() {
                for &gv in cert.partition_g.block(i) {
                    for &hv in cert.partition_h.block(j) {
                        union.insert(pg.index(gv, hv));
                    }
                }
            }
        }
        let expected = pg.graph().vertex_multiset().power_union(k * k);
        assert_eq!(
            union, expected,
            "block products must cover V(G box H) k^2-fold"
        );
    }
}

#[test]
fn strip_counts_scale_dk_per_element() {
    let g = Graph::cycle(4).unwrap();
    let h = Graph::path(3).unwrap();
    let k = 2;
    let cert = certified(&g, &h, k);
    let pg = ProductGraph::new(g, h);
    // recompute S_i strips and check sum_i |S_i|_v = k * |D_k|_v per vertex
    let mut per_vertex = vec![0usize; pg.vertex_count()];
    for i in 0..cert.partition_g.block_count() {
        let block = cert.partition_g.block(i);
        for (v, mult) in cert.d_k.iter() {
            let (gv, _) = pg.coords(v);
            if block.binary_search(&gv).is_ok() {
                per_vertex[v] += mult.min(k);
            }
        }
    }
    for (v, mult) in cert.d_k.iter() {
        assert_eq!(per_vertex[v], k * mult);
    }
}

#[test]
fn stored_z_sets_project_onto_y_sets() {
    let g = Graph::path(4).unwrap();
    let h = Graph::cycle(3).unwrap();
    let (sg, sh, sp) = solve_instance(&g, &h, 2);
    let cert = build_certificate_with(&g, &h, 2, &sg, &sh, &sp, true).unwrap();
    let pg = ProductGraph::new(g, h);
    let z_sets = cert.z_sets.as_ref().unwrap();
    for (z, y) in z_sets.iter().zip(&cert.y_sets) {
        assert_eq!(&pg.phi_projection(z, Factor::H), y);
    }
    let z_bar_sets = cert.z_bar_sets.as_ref().unwrap();
    for (z, y) in z_bar_sets.iter().zip(&cert.y_bar_sets) {
        assert_eq!(&pg.phi_projection(z, Factor::G), y);
    }
    assert!(verify_certificate(&cert).all_passed());
}

// ---------------------------------------------------------------------------
// mutation detection
// ---------------------------------------------------------------------------

enum Mutation {
    FlipMatrixBit,
    RemoveClassification,
    ShrinkStrip,
    DecrementChain(usize),
    CorruptPartitionBlock,
}

/// Applies the mutation; returns false when the certificate offers no
/// applicable site (e.g. no multi-vertex block to corrupt).
fn apply_mutation(cert: &mut Certificate, mutation: &Mutation) -> bool {
    match mutation {
        Mutation::FlipMatrixBit => {
            let cell = &mut cert.blocks[0].rows[0][0];
            *cell = !*cell;
            true
        }
        Mutation::RemoveClassification => {
            for bm in &mut cert.blocks {
                if let Some(&first) = bm.classification.iter().next() {
                    bm.classification.remove(&first);
                    return true;
                }
            }
            false
        }
        Mutation::ShrinkStrip => match cert.s_sizes.iter().position(|&s| s > 0) {
            Some(idx) => {
                cert.s_sizes[idx] -= 1;
                true
            }
            None => false,
        },
        Mutation::DecrementChain(which) => {
            let field = match which % 4 {
                0 => &mut cert.chain.lhs,
                1 => &mut cert.chain.sum_n,
                2 => &mut cert.chain.sum_s,
                _ => &mut cert.chain.rhs,
            };
            if *field == 0 {
                return false;
            }
            *field -= 1;
            true
        }
        Mutation::CorruptPartitionBlock => {
            let anchors = cert.partition_g.anchors().to_vec();
            let mut blocks = cert.partition_g.blocks().to_vec();
            let Some(block) = blocks.iter_mut().find(|b| b.len() > 1) else {
                return false;
            };
            block.pop();
            cert.partition_g = kdom::partition::KPartition::from_parts(
                cert.k,
                anchors,
                blocks,
                cert.g.vertex_count(),
            );
            true
        }
    }
}

#[test]
fn every_single_mutation_is_detected() {
    let pool = small_pool();
    let mut tested = 0;
    for g in &pool {
        for h in &pool {
            let k = 1 + (tested % 2);
            let baseline = certified(g, h, k);
            assert!(verify_certificate(&baseline).all_passed());
            for (idx, mutation) in [
                Mutation::FlipMatrixBit,
                Mutation::RemoveClassification,
                Mutation::ShrinkStrip,
                Mutation::DecrementChain(tested),
                Mutation::CorruptPartitionBlock,
            ]
            .iter()
            .enumerate()
            {
                let mut mutated = baseline.clone();
                if !apply_mutation(&mut mutated, mutation) {
                    continue;
                }
                let report = verify_certificate(&mutated);
                assert!(
                    !report.all_passed(),
                    "mutation {idx} on ({g}, {h}, k={k}) went undetected"
                );
                assert!(!report.failed_checks().is_empty());
            }
            tested += 1;
        }
    }
    assert!(tested >= 50, "pool too small: {tested}");
}

#[test]
fn mutation_failures_name_the_expected_checks() {
    let g = Graph::path(4).unwrap();
    let h = Graph::cycle(4).unwrap();
    let baseline = certified(&g, &h, 2);

    let mut flipped = baseline.clone();
    assert!(apply_mutation(&mut flipped, &Mutation::FlipMatrixBit));
    assert!(verify_certificate(&flipped).failed_checks().contains(&4));

    let mut unclassified = baseline.clone();
    assert!(apply_mutation(
        &mut unclassified,
        &Mutation::RemoveClassification
    ));
    assert!(verify_certificate(&unclassified)
        .failed_checks()
        .contains(&4));

    let mut shrunk = baseline.clone();
    assert!(apply_mutation(&mut shrunk, &Mutation::ShrinkStrip));
    assert!(verify_certificate(&shrunk).failed_checks().contains(&8));

    let mut tampered = baseline.clone();
    assert!(apply_mutation(&mut tampered, &Mutation::DecrementChain(3)));
    assert!(verify_certificate(&tampered).failed_checks().contains(&9));

    let mut corrupted = baseline.clone();
    assert!(apply_mutation(
        &mut corrupted,
        &Mutation::CorruptPartitionBlock
    ));
    assert!(verify_certificate(&corrupted).failed_checks().contains(&2));
}

#[test]
fn classification_tampering_is_caught_even_when_nonempty() {
    // replace a sound classification with the other statement
    let g = Graph::path(4).unwrap();
    let h = Graph::complete(2).unwrap();
    let mut cert = certified(&g, &h, 1);
    let bm = &mut cert.blocks[0];
    let honest = bm.classification.clone();
    bm.classification.clear();
    if honest.contains(&MatrixClass::A) {
        bm.classification.insert(MatrixClass::B);
    } else {
        bm.classification.insert(MatrixClass::A);
    }
    let report = verify_certificate(&cert);
    assert!(report.failed_checks().contains(&4), "{report}");
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

#[test]
fn json_round_trip_is_lossless_across_the_pool() {
    for (g, h, k) in [
        (Graph::complete(1).unwrap(), Graph::complete(1).unwrap(), 3),
        (Graph::path(4).unwrap(), Graph::star(4).unwrap(), 2),
        (Graph::cycle(5).unwrap(), Graph::path(2).unwrap(), 1),
    ] {
        let cert = certified(&g, &h, k);
        let text = serialize_certificate(&cert);
        let parsed = parse_certificate(&text).unwrap();
        assert_eq!(parsed, cert);
        assert!(verify_certificate(&parsed).all_passed());
        assert_eq!(
            serialize_certificate(&parsed),
            text,
            "serialization must be stable"
        );
    }
}

#[test]
fn verification_failures_survive_the_round_trip() {
    let g = Graph::path(3).unwrap();
    let h = Graph::cycle(3).unwrap();
    let mut cert = certified(&g, &h, 2);
    apply_mutation(&mut cert, &Mutation::ShrinkStrip);
    let reparsed = parse_certificate(&serialize_certificate(&cert)).unwrap();
    let report = verify_certificate(&reparsed);
    assert!(report.failed_checks().contains(&8), "{report}");
}

#[test]
fn degenerate_certificates_fail_without_panicking() {
    // an emptied partition block parses fine and must fail verification
    let cert = certified(&Graph::path(3).unwrap(), &Graph::complete(2).unwrap(), 1);
    let mut value: serde_json::Value = serde_json::from_str(&serialize_certificate(&cert)).unwrap();
    value["partition_g"]["blocks"][0] = serde_json::json!([]);
    let parsed = parse_certificate(&serde_json::to_string(&value).unwrap()).unwrap();
    let report = verify_certificate(&parsed);
    assert!(!report.all_passed());
    assert!(report.failed_checks().contains(&2), "{report}");

    // hand-assembled certificate with out-of-range ids: failures, no panics
    let mut bad = cert.clone();
    bad.d_k = Multiset::from_elements([999]);
    let report = verify_certificate(&bad);
    assert!(!report.all_passed());
    for number in [1, 6, 8] {
        assert!(report.failed_checks().contains(&number), "{report}");
    }
}

#[test]
fn schema_errors_carry_paths() {
    let cert = certified(
        &Graph::complete(2).unwrap(),
        &Graph::complete(2).unwrap(),
        1,
    );
    let mut value: serde_json::Value = serde_json::from_str(&serialize_certificate(&cert)).unwrap();
    value["blocks"][0]["class"] = serde_json::json!(["q"]);
    let err = parse_certificate(&serde_json::to_string(&value).unwrap()).unwrap_err();
    assert!(err.to_string().contains("blocks[0].class[0]"), "{err}");

    value["blocks"][0]["class"] = serde_json::json!("not-a-list");
    let err = parse_certificate(&serde_json::to_string(&value).unwrap()).unwrap_err();
    assert!(err.to_string().contains("blocks"), "{err}");
}
