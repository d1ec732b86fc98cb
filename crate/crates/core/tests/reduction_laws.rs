//! Reductions preserve the answers of the problems they encode.

use std::collections::VecDeque;

use grg_core::maxreach::{max_value_adam_general, max_value_general, promise_value_adam};
use grg_core::oracle::{min_vertex_cover, sat_optimum};
use grg_core::reductions::{
    cnf_to_game, parse_graph, streach_to_game, vertex_cover_to_game, Cnf, Graph,
};
use grg_core::{solve, Algorithm, Player, SolverConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, density: f64) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let edges = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::new(n, edges).unwrap()
}

fn reaches(h: &Graph, s: usize, t: usize) -> bool {
    let mut seen = vec![false; h.vertices];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    while let Some(u) = queue.pop_front() {
        for &(a, b) in &h.edges {
            if a == u && !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    seen[t]
}

#[test]
fn st_reach_examples() {
    let h3 = parse_graph("p edge 3 5\ne 1 2\ne 2 1\ne 2 2\ne 2 3\ne 3 3\n").unwrap();
    let (g, _) = streach_to_game(&h3, 0, 2).unwrap();
    assert_eq!(
        solve(&g, Algorithm::Auto, &cfg()).unwrap().winner,
        Player::Adam
    );
    assert_eq!(promise_value_adam(&g).unwrap().value, 0);
    // t cannot reach s
    let (g, _) = streach_to_game(&h3, 2, 0).unwrap();
    assert_eq!(
        solve(&g, Algorithm::Auto, &cfg()).unwrap().winner,
        Player::Eve
    );
    let (g, _) = streach_to_game(&h3, 1, 1).unwrap();
    assert_eq!(
        solve(&g, Algorithm::Auto, &cfg()).unwrap().winner,
        Player::Adam
    );
}

#[test]
fn st_reach_matches_bfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let h = random_graph(&mut rng, 12, 0.15);
        let (s, t) = (rng.gen_range(0..h.vertices), rng.gen_range(0..h.vertices));
        let (g, meta) = streach_to_game(&h, s, t).unwrap();
        assert_eq!(g.arena.vertex_count(), h.vertices * (h.vertices + 1) + 2);
        assert_eq!(meta.expected_vertices, g.arena.vertex_count());
        let adam = solve(&g, Algorithm::Auto, &cfg()).unwrap().winner == Player::Adam;
        assert_eq!(adam, reaches(&h, s, t));
    }
}

#[test]
fn vertex_cover_examples() {
    let cases = [
        (Graph::new(2, vec![(0, 1)]).unwrap(), 1),
        (Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap(), 2),
        (Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap(), 1),
    ];
    for (g, want) in cases {
        let (game, meta) = vertex_cover_to_game(&g).unwrap();
        assert_eq!(meta.expected_vertices, g.vertices + g.edges.len());
        assert_eq!(max_value_general(&game, &cfg()).unwrap().value, want);
    }
}

#[test]
fn vertex_cover_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    while checked < 60 {
        let g = random_graph(&mut rng, 7, 0.3);
        let Ok((game, _)) = vertex_cover_to_game(&g) else {
            continue;
        };
        let undirected = Graph::new(g.vertices, g.undirected_edges()).unwrap();
        assert_eq!(
            max_value_general(&game, &cfg()).unwrap().value,
            min_vertex_cover(&undirected).unwrap()
        );
        checked += 1;
    }
}

#[test]
fn cnf_examples() {
    let value = |psi: Cnf, owner| {
        max_value_general(&cnf_to_game(&psi, owner).0, &cfg())
            .unwrap()
            .value
    };
    assert_eq!(
        value(Cnf::new(1, vec![vec![1], vec![-1]]).unwrap(), Player::Eve),
        1
    );
    assert_eq!(
        value(
            Cnf::new(2, vec![vec![1, 2], vec![-1, 2]]).unwrap(),
            Player::Eve
        ),
        2
    );
    let psi = Cnf::new(2, vec![vec![1, 2], vec![1, -2], vec![-1]]).unwrap();
    assert_eq!(
        value(psi.clone(), Player::Adam),
        sat_optimum(&psi, false).unwrap()
    );
}

#[test]
fn cnf_values_match_sat_optima() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4usize);
        let clauses = (0..rng.gen_range(0..=4))
            .map(|_| {
                (0..rng.gen_range(1..=2))
                    .map(|_| rng.gen_range(1..=n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 })
                    .collect()
            })
            .collect();
        let psi = Cnf::new(n, clauses).unwrap();
        let (eve, _) = cnf_to_game(&psi, Player::Eve);
        assert_eq!(
            max_value_general(&eve, &cfg()).unwrap().value,
            sat_optimum(&psi, true).unwrap()
        );
        let (adam, _) = cnf_to_game(&psi, Player::Adam);
        assert_eq!(
            max_value_adam_general(&adam, &cfg()).unwrap().value,
            sat_optimum(&psi, false).unwrap()
        );
    }
}
