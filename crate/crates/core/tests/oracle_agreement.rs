use dtgraph_core::oracles::{brute_dt, BruteDt};
use dtgraph_core::recognition::recognize;
use dtgraph_core::weights::{decompose_from_c0, synthesize, verify_dt};
use dtgraph_core::Graph;
use dtgraph_core::rational::int;

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).unwrap()
    })
}

#[test]
fn recognition_matches_oracle_on_six_vertices() {
    let mut dt = 0;
    for g in all_graphs(6) {
        let cert = recognize(&g);
        assert!(cert.verify(&g), "{g:?} {cert:?}");
        let brute = brute_dt(&g).unwrap();
        if let BruteDt::Core(core) = &brute {
            // any core meeting the conditions must synthesize on its component
            let comp = g.connected_components().into_iter().find(|c| c.contains(core.first().unwrap())).unwrap();
            let (h, map) = g.induced(&comp);
            let local = dtgraph_core::VertexSet::from_iter_in(h.vertex_count(), map.iter().enumerate().filter(|(_, &v)| core.contains(v)).map(|(k, _)| k));
            let d = decompose_from_c0(&h, &local).unwrap();
            let wa = synthesize(&h, &d, &int(2), &int(1)).unwrap_or_else(|e| panic!("{g:?} core {core:?} {e}"));
            assert_eq!(verify_dt(&h, &wa), Ok(()));
        }
        assert_eq!(cert.is_dt(), brute != BruteDt::No, "{g:?} {cert:?} {brute:?}");
        dt += cert.is_dt() as usize;
    }
    assert!(dt > 0);
}

#[test]
fn recognition_matches_oracle_on_random_connected_graphs() {
    use dtgraph_core::generators::random_connected;
    let mut dt = 0;
    for seed in 0..3000u64 {
        let n = 6 + (seed % 4) as usize;
        let g = random_connected(n, seed);
        let cert = recognize(&g);
        assert!(cert.verify(&g), "{g:?} {cert:?}");
        let brute = brute_dt(&g).unwrap();
        assert_eq!(cert.is_dt(), brute != BruteDt::No, "seed {seed} {g:?} {cert:?} {brute:?}");
        dt += cert.is_dt() as usize;
    }
    println!("{dt} of 3000 random connected graphs are DT");
    assert!(dt > 300);
}

#[test]
fn random_dt_graphs_are_recognized() {
    use dtgraph_core::generators::{gen_random_dt, WeightDistribution};
    for seed in 0..2000u64 {
        let n = 3 + (seed % 30) as usize;
        let dist = if seed % 2 == 0 { WeightDistribution::uniform(0.2, 4.0, seed) } else { WeightDistribution::gaussian(1.5, 1.0, seed) };
        let (g, _) = gen_random_dt(n, &int(2), &int(1), &dist).unwrap();
        let cert = recognize(&g);
        assert!(cert.is_dt() && cert.verify(&g), "seed {seed} {g:?} {cert:?}");
    }
}

#[test]
fn every_satisfiable_candidate_synthesizes() {
    use dtgraph_core::generators::random_connected;
    use dtgraph_core::patterns::is_semi_unit_interval;
    use dtgraph_core::recognition::{evaluate_candidate, p_max_partition, Attempt};
    let mut tried = 0;
    for seed in 0..1500u64 {
        let g = random_connected(6 + (seed % 4) as usize, seed);
        if !is_semi_unit_interval(&g) {
            continue;
        }
        for p in 0..g.vertex_count() {
            match evaluate_candidate(&g, p, &int(2), &int(1)) {
                Ok(_) | Err(Attempt::Unsatisfiable) => {}
                Err(other) => panic!("seed {seed} p {p} {g:?} {other:?} {:?}", p_max_partition(&g, p)),
            }
            tried += 1;
        }
    }
    assert!(tried > 1000);
}

/// Rejection rate after flipping each pair with probability 0.3; reported only.
#[test]
fn perturbed_dt_graphs_rejection_rate() {
    use dtgraph_core::generators::{flip_edges, gen_random_dt, WeightDistribution};
    let trials = 500u64;
    let mut rejected = 0;
    for seed in 0..trials {
        let dist = WeightDistribution::uniform(0.2, 4.0, seed);
        let (g, _) = gen_random_dt(4 + (seed % 12) as usize, &int(2), &int(1), &dist).unwrap();
        let h = flip_edges(&g, 0.3, seed ^ 0x5eed);
        let cert = recognize(&h);
        assert!(cert.verify(&h));
        rejected += !cert.is_dt() as u64;
    }
    println!("flip p=0.3: {rejected}/{trials} perturbed graphs rejected");
}

/// Suns larger than the 3-sun are not screened up front; the candidate loop rejects them.
#[test]
fn larger_suns_are_rejected() {
    use dtgraph_core::oracles::brute_force_is_dt;
    for k in 4..=6usize {
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                edges.push((i, j));
            }
            edges.push((i, k + i));
            edges.push(((i + 1) % k, k + i));
        }
        let g = Graph::new(2 * k, &edges).unwrap();
        let cert = recognize(&g);
        assert!(!cert.is_dt() && cert.verify(&g), "{k}-sun: {}", cert.kind());
        assert!(!brute_force_is_dt(&g).unwrap());
    }
}
