//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use dtgraph_core::generators::{gen_random_dt, gen_threshold, random_connected, random_unit_interval, WeightDistribution};
use dtgraph_core::metrics::{
    clustering_coefficient, decomposition_from_weights, diameter, dt_ordering, forward_pair_count, intersection_number,
    min_layer_count, triplet_count,
};
use dtgraph_core::oracles::{
    brute_2sat, brute_diameter, brute_force_is_dt, brute_min_edge_clique_cover, brute_min_layers, brute_triangle_count,
};
use dtgraph_core::patterns::{Pattern, PatternKind};
use dtgraph_core::rational::int;
use dtgraph_core::recognition::{recognize, Certificate};
use dtgraph_core::twosat::{evaluate, solve, Literal, TwoSatInstance};
use dtgraph_core::weights::{
    check_layer_bounds, check_theorem_conditions, edge_exists, verify_dt, Synthesis, WeightAssignment,
};
use dtgraph_core::{Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Generator settings shared by the random DT suites: parameters cycle with the seed.
fn random_dt(n: usize, seed: u64) -> (Graph, WeightAssignment) {
    let (alpha, beta, dist) = match seed % 3 {
        0 => (int(2), int(1), WeightDistribution::uniform(0.2, 4.0, seed)),
        1 => (int(2), int(1), WeightDistribution::gaussian(1.5, 1.0, seed)),
        _ => (int(10), int(2), WeightDistribution::uniform(0.5, 14.0, seed)),
    };
    gen_random_dt(n, &alpha, &beta, &dist).expect("valid generator settings")
}

fn fixture(kind: PatternKind) -> Graph {
    Pattern::new(kind).graph
}

fn criterion_1() -> Outcome {
    let (a, b) = (int(10), int(2));
    let adj = edge_exists(&int(5), &int(7), &a, &b).map_err(|e| e.to_string())?;
    let non = edge_exists(&int(4), &int(7), &a, &b).map_err(|e| e.to_string())?;
    if adj && !non {
        Ok("(5,7) adjacent, (4,7) not".into())
    } else {
        Err(format!("(5,7) -> {adj}, (4,7) -> {non}"))
    }
}

/// Runs criteria 2 and 10 over the same graphs.
fn criteria_2_and_10() -> (Outcome, Outcome) {
    let mut failures2 = Vec::new();
    let mut failures10 = Vec::new();
    let (mut decomposed, mut unit) = (0usize, 0usize);
    for seed in 0..10_000u64 {
        let n = 3 + (seed % 30) as usize;
        let (g, _) = random_dt(n, seed);
        let cert = recognize(&g);
        let Some(wa) = cert.weights() else {
            failures2.push(format!("seed {seed}: rejected as {}", cert.kind()));
            continue;
        };
        if let Err(e) = verify_dt(&g, wa) {
            failures2.push(format!("seed {seed}: {e}"));
            continue;
        }
        let floor = (&wa.alpha - &wa.beta) / int(2);
        if let Some(v) = (0..n).find(|&v| wa.weights[v] < floor) {
            failures10.push(format!("seed {seed}: vertex {v} below (α−β)/2"));
        }
        match &cert {
            Certificate::Decomposition(d) => {
                decomposed += 1;
                let main = d.layers.layers().iter().map(|l| l.len()).sum();
                let s = Synthesis { assignment: d.weights.clone(), epsilon: d.epsilon.clone() };
                if let Err((l, v)) = check_layer_bounds(&d.layers, &s, main) {
                    failures10.push(format!("seed {seed}: vertex {v} outside the window of layer {l}"));
                }
            }
            _ => unit += 1,
        }
    }
    let c2 = if failures2.is_empty() {
        Ok(format!("10000/10000 accepted and verified ({decomposed} decompositions, {unit} unit interval)"))
    } else {
        Err(format!("{} failures, first: {}", failures2.len(), failures2[0]))
    };
    let c10 = if failures10.is_empty() {
        Ok(format!("layer windows hold on {decomposed} decompositions, weight floor on every accepted graph"))
    } else {
        Err(format!("{} failures, first: {}", failures10.len(), failures10[0]))
    };
    (c2, c10)
}

fn criterion_3() -> Outcome {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let mut checked = 0;
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
        let g = Graph::new(5, &edges).unwrap();
        let fast = recognize(&g).is_dt();
        let slow = brute_force_is_dt(&g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("n=5 mask {mask}: recognize {fast}, brute {slow}"));
        }
        checked += 1;
    }
    let mut dt = 0;
    for seed in 0..2000u64 {
        let g = random_connected(6 + (seed % 4) as usize, seed);
        let fast = recognize(&g).is_dt();
        let slow = brute_force_is_dt(&g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("connected seed {seed}: recognize {fast}, brute {slow}"));
        }
        dt += fast as usize;
        checked += 1;
    }
    Ok(format!("{checked} graphs agree ({dt} of the 2000 random connected graphs are DT)"))
}

fn criterion_4() -> Outcome {
    let rejected: [(PatternKind, &str); 7] = [
        (PatternKind::C4, "chordless_cycle"),
        (PatternKind::Net, "net"),
        (PatternKind::Sun3, "sun"),
        (PatternKind::Cycle(5), "chordless_cycle"),
        (PatternKind::Cycle(6), "chordless_cycle"),
        (PatternKind::Cycle(7), "chordless_cycle"),
        (PatternKind::Cycle(8), "chordless_cycle"),
    ];
    for (kind, want) in rejected {
        let g = fixture(kind);
        let cert = recognize(&g);
        if cert.kind() != want || !cert.verify(&g) {
            return Err(format!("{} gave {}", kind.name(), cert.kind()));
        }
    }
    for kind in [PatternKind::K13, PatternKind::P4] {
        let g = fixture(kind);
        let cert = recognize(&g);
        match cert.weights() {
            Some(wa) if verify_dt(&g, wa).is_ok() => {}
            _ => return Err(format!("{} not accepted with valid weights", kind.name())),
        }
    }
    Ok("7 rejections with matching certificates, K13 and P4 accepted and verified".into())
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in 1..=10usize {
        for bits in 0u32..1 << n {
            let seq: Vec<bool> = (0..n).map(|k| bits >> k & 1 == 1).collect();
            let g = gen_threshold(&seq).unwrap();
            let cert = recognize(&g);
            match cert.weights() {
                Some(wa) if verify_dt(&g, wa).is_ok() => count += 1,
                _ => return Err(format!("threshold sequence {seq:?} gave {}", cert.kind())),
            }
        }
    }
    for seed in 0..1000u64 {
        let n = 1 + (seed % 32) as usize;
        let g = random_unit_interval(n, seed);
        let cert = recognize(&g);
        match cert.weights() {
            Some(wa) if verify_dt(&g, wa).is_ok() => {}
            _ => return Err(format!("unit interval seed {seed} gave {}", cert.kind())),
        }
    }
    Ok(format!("{count} threshold graphs and 1000 unit interval graphs accepted"))
}

fn criterion_6() -> Outcome {
    let fixed = [
        ("K3", Graph::complete(3), 1),
        ("P3", Graph::new(3, &[(0, 1), (1, 2)]).unwrap(), 2),
        ("edgeless", Graph::empty(4), 0),
    ];
    for (name, g, want) in fixed {
        let wa = recognize(&g).weights().cloned().ok_or(format!("{name} rejected"))?;
        let ord = dt_ordering(&g, &wa).map_err(|e| e.to_string())?;
        let (k, cover) = intersection_number(&ord);
        if k != want || !cover.verify(&g) {
            return Err(format!("i({name}) = {k}, expected {want}"));
        }
    }
    for seed in 0..500u64 {
        let n = 1 + (seed % 10) as usize;
        let (g, generated) = random_dt(n, seed);
        let brute = brute_min_edge_clique_cover(&g).map_err(|e| e.to_string())?;
        let recognized = recognize(&g).weights().cloned().ok_or(format!("seed {seed} rejected"))?;
        for wa in [&generated, &recognized] {
            let ord = dt_ordering(&g, wa).map_err(|e| e.to_string())?;
            let (k, cover) = intersection_number(&ord);
            if k != brute || cover.size() != k || !cover.verify(&g) {
                return Err(format!("seed {seed}: |S| = {k}, brute {brute}"));
            }
        }
    }
    Ok("fixed values and 500 graphs match the exhaustive cover under both weightings".into())
}

fn criterion_7() -> Outcome {
    let mut found = 0;
    let mut seed = 0u64;
    let mut tally = [0usize; 2];
    while found < 500 {
        if seed > 200_000 {
            return Err(format!("only {found} connected graphs with m >= 1 generated"));
        }
        let (g, wa) = random_dt(4 + (seed % 29) as usize, seed);
        seed += 1;
        if !g.is_connected() {
            continue;
        }
        // layers from the generating weights when they meet the conditions, else the recognized ones
        let d = match decomposition_from_weights(&g, &wa) {
            Some(d) if check_theorem_conditions(&g, &d).is_ok() => d,
            _ => match recognize(&g) {
                Certificate::Decomposition(d) => d.layers,
                _ => continue,
            },
        };
        if d.m() < 1 {
            continue;
        }
        let diam = diameter(&g).map_err(|e| e.to_string())?;
        if brute_diameter(&g) != Some(diam) {
            return Err(format!("seed {}: BFS diameter disagrees with Floyd–Warshall", seed - 1));
        }
        if diam < d.m() || diam > d.m() + 1 {
            return Err(format!("seed {}: m = {}, diameter {diam}", seed - 1, d.m()));
        }
        tally[diam - d.m()] += 1;
        found += 1;
    }
    let mut threshold = 0;
    for n in 1..=10usize {
        for bits in 0u32..1 << n {
            let seq: Vec<bool> = (0..n).map(|k| bits >> k & 1 == 1).collect();
            let g = gen_threshold(&seq).unwrap();
            if !g.is_connected() {
                continue;
            }
            if diameter(&g).map_err(|e| e.to_string())? > 2 {
                return Err(format!("threshold sequence {seq:?} has diameter above 2"));
            }
            threshold += 1;
        }
    }
    Ok(format!("500 graphs: {} with D = m, {} with D = m+1; {threshold} connected threshold graphs within 2", tally[0], tally[1]))
}

fn criterion_8() -> Outcome {
    let k3 = Graph::complete(3);
    let wa = recognize(&k3).weights().cloned().unwrap();
    let c = clustering_coefficient(&k3, &dt_ordering(&k3, &wa).unwrap()).map_err(|e| e.to_string())?;
    if c != int(1) {
        return Err(format!("C(K3) = {c}"));
    }
    let mut with_triplets = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed % 64) as usize;
        let (g, wa) = random_dt(n, seed);
        let ord = dt_ordering(&g, &wa).map_err(|e| e.to_string())?;
        let tri = brute_triangle_count(&g);
        if forward_pair_count(&ord) != tri {
            return Err(format!("seed {seed}: forward pairs {}, triangles {tri}", forward_pair_count(&ord)));
        }
        let triplets = triplet_count(&g);
        if triplets > 0 {
            let c = clustering_coefficient(&g, &ord).map_err(|e| e.to_string())?;
            if c != Rational::new((3 * tri).into(), triplets.into()) {
                return Err(format!("seed {seed}: clustering {c}"));
            }
            with_triplets += 1;
        }
    }
    Ok(format!("C(K3) = 1; 500 graphs match the triangle count ({with_triplets} with triplets)"))
}

fn criterion_9() -> Outcome {
    let mut sat = 0;
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = rng.random_range(1..=12usize);
        let mut inst = TwoSatInstance::new(vars);
        for _ in 0..rng.random_range(0..=3 * vars) {
            let lit = |rng: &mut ChaCha8Rng| {
                let v = rng.random_range(0..vars);
                if rng.random_bool(0.5) {
                    Literal::pos(v)
                } else {
                    Literal::neg(v)
                }
            };
            let (a, b) = (lit(&mut rng), lit(&mut rng));
            inst.add_clause(a, b).unwrap();
        }
        let fast = solve(&inst);
        let slow = brute_2sat(&inst).map_err(|e| e.to_string())?;
        if fast.is_some() != slow.is_some() {
            return Err(format!("seed {seed}: solver and enumeration disagree"));
        }
        for a in fast.iter().chain(slow.iter()) {
            if !evaluate(&inst, a).map_err(|e| e.to_string())? {
                return Err(format!("seed {seed}: assignment fails evaluate"));
            }
        }
        sat += fast.is_some() as usize;
    }
    Ok(format!("1000 instances agree ({sat} satisfiable)"))
}

fn criterion_11() -> Outcome {
    let mut found = 0;
    let mut seed = 0u64;
    let mut histogram = [0usize; 11];
    while found < 200 {
        if seed > 100_000 {
            return Err(format!("only {found} suitable graphs generated"));
        }
        let (g, wa) = random_dt(2 + (seed % 9) as usize, seed);
        seed += 1;
        if !g.is_connected() {
            continue;
        }
        let Some(known) = decomposition_from_weights(&g, &wa).filter(|d| check_theorem_conditions(&g, d).is_ok()) else {
            continue;
        };
        let n = g.vertex_count();
        let fast = min_layer_count(&g, n).map(|(m, _, _)| m);
        let slow = brute_min_layers(&g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("seed {}: reported {fast:?}, exhaustive {slow:?}", seed - 1));
        }
        match fast {
            Some(m) if m <= known.m() => histogram[m] += 1,
            _ => return Err(format!("seed {}: minimum {fast:?} above the generated {}", seed - 1, known.m())),
        }
        found += 1;
    }
    let spread: Vec<String> = histogram.iter().enumerate().filter(|(_, &c)| c > 0).map(|(m, c)| format!("m={m}:{c}")).collect();
    Ok(format!("200 graphs match the exhaustive sweep ({})", spread.join(" ")))
}

fn main() -> ExitCode {
    let mut all_ok = true;
    let mut report = |id: u32, start: Instant, out: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {id:>2}: PASS ({secs:.1}s) {msg}"),
            Err(msg) => {
                all_ok = false;
                println!("criterion {id:>2}: FAIL ({secs:.1}s) {msg}");
            }
        }
    };
    let t = Instant::now();
    report(1, t, criterion_1());
    let t = Instant::now();
    let (c2, c10) = criteria_2_and_10();
    report(2, t, c2);
    let t = Instant::now();
    report(3, t, criterion_3());
    let t = Instant::now();
    report(4, t, criterion_4());
    let t = Instant::now();
    report(5, t, criterion_5());
    let t = Instant::now();
    report(6, t, criterion_6());
    let t = Instant::now();
    report(7, t, criterion_7());
    let t = Instant::now();
    report(8, t, criterion_8());
    let t = Instant::now();
    report(9, t, criterion_9());
    report(10, Instant::now(), c10);
    let t = Instant::now();
    report(11, t, criterion_11());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
