//! Brute-force oracles and seeded graph generators shared by the integration tests.
#![allow(dead_code)]

use bei_core::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n + 1]; n + 1];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Components of `g` restricted to `keep` (1-based flags), by flood fill.
pub fn component_count(g: &Graph, keep: &[bool]) -> usize {
    let a = adjacency(g);
    let n = g.n();
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for s in 1..=n {
        if !keep[s] || seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 1..=n {
                if keep[v] && a[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// Cut vertices by deleting each vertex and recounting components.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let all = vec![true; n + 1];
    let base = component_count(g, &all);
    (1..=n)
        .filter(|&v| {
            let mut keep = all.clone();
            keep[v] = false;
            component_count(g, &keep) > base
        })
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect())
}

pub fn is_clique(a: &[Vec<bool>], s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(k, &u)| s[k + 1..].iter().all(|&v| a[u][v]))
}

/// Maximal cliques by checking every vertex subset.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let a = adjacency(g);
    let n = g.n();
    let cliques: Vec<Vec<usize>> = subsets(n)
        .filter(|s| !s.is_empty() && is_clique(&a, s))
        .collect();
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|s| (1..=n).all(|v| s.contains(&v) || !s.iter().all(|&u| a[u][v])))
        .cloned()
        .collect();
    out.sort();
    out
}

/// True iff some vertex set of size at least four induces a cycle.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let a = adjacency(g);
    subsets(g.n()).any(|s| {
        if s.len() < 4 {
            return false;
        }
        let keep: Vec<bool> = (0..=g.n()).map(|v| s.contains(&v)).collect();
        let two_regular = s
            .iter()
            .all(|&u| s.iter().filter(|&&v| a[u][v]).count() == 2);
        two_regular && component_count(g, &keep) == 1
    })
}

/// Block graph straight from the definition: chordal, and maximal cliques pairwise meet
/// in at most one vertex.
pub fn is_block_graph_by_definition(g: &Graph) -> bool {
    let cliques = brute_maximal_cliques(g);
    !has_long_induced_cycle(g)
        && cliques.iter().enumerate().all(|(k, c)| {
            cliques[k + 1..]
                .iter()
                .all(|d| c.iter().filter(|v| d.contains(v)).count() <= 1)
        })
}

/// Every vertex in at most two maximal cliques of size at least two.
pub fn at_most_two_cliques(g: &Graph) -> bool {
    let cliques = brute_maximal_cliques(g);
    g.vertices().all(|v| {
        cliques
            .iter()
            .filter(|c| c.len() >= 2 && c.contains(&v))
            .count()
            <= 2
    })
}

fn acyclic_on(a: &[Vec<bool>], s: &[usize]) -> bool {
    // union-find over the induced edges
    let mut parent: Vec<usize> = (0..a.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (k, &u) in s.iter().enumerate() {
        for &v in &s[k + 1..] {
            if a[u][v] {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return false;
                }
                parent[ru] = rv;
            }
        }
    }
    true
}

/// All simple paths with first vertex below the last, by exhaustive search.
pub fn all_simple_paths(g: &Graph) -> Vec<Vec<usize>> {
    let a = adjacency(g);
    let n = g.n();
    let mut out = Vec::new();
    fn go(a: &[Vec<bool>], n: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() >= 2 && path[0] < *path.last().unwrap() {
            out.push(path.clone());
        }
        let last = *path.last().unwrap();
        for v in 1..=n {
            if a[last][v] && !path.contains(&v) {
                path.push(v);
                go(a, n, path, out);
                path.pop();
            }
        }
    }
    for s in 1..=n {
        go(&a, n, &mut vec![s], &mut out);
    }
    out
}

/// Admissible paths filtered straight from the definition.
pub fn brute_admissible_paths(g: &Graph) -> Vec<Vec<usize>> {
    let a = adjacency(g);
    let mut out: Vec<Vec<usize>> = all_simple_paths(g)
        .into_iter()
        .filter(|p| {
            let (i, j) = (p[0], *p.last().unwrap());
            p[1..p.len() - 1].iter().all(|&v| v < i || v > j) && acyclic_on(&a, p)
        })
        .collect();
    out.sort();
    out
}

/// Graph isomorphism by backtracking over vertex maps.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    struct Search<'a> {
        g: &'a Graph,
        h: &'a Graph,
        a: Vec<Vec<bool>>,
        b: Vec<Vec<bool>>,
        map: Vec<usize>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn extend(&mut self, v: usize) -> bool {
            let n = self.g.n();
            if v > n {
                return true;
            }
            for w in 1..=n {
                if self.used[w] || self.g.degree(v) != self.h.degree(w) {
                    continue;
                }
                if (1..v).all(|u| self.a[u][v] == self.b[self.map[u]][w]) {
                    self.map[v] = w;
                    self.used[w] = true;
                    if self.extend(v + 1) {
                        return true;
                    }
                    self.used[w] = false;
                }
            }
            false
        }
    }
    let n = g.n();
    Search {
        g,
        h,
        a: adjacency(g),
        b: adjacency(h),
        map: vec![0; n + 1],
        used: vec![false; n + 1],
    }
    .extend(1)
}

/// Arbitrary labeled graphs on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

/// Random relabeling of `g`.
pub fn shuffle<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (1..=g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

/// A random Cohen-Macaulay block graph on at most `max_n` vertices: cliques attached
/// one at a time at vertices lying in at most one block so far, plus optional isolated
/// vertices.
pub fn random_cm_block_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let first = rng.gen_range(1..=max_n.min(4));
    let mut n = first;
    let mut edges: Vec<(usize, usize)> = complete_edges(&(1..=first).collect::<Vec<_>>());
    let mut blocks_at = vec![0usize; max_n + 1];
    if first >= 2 {
        blocks_at[1..=first].fill(1);
    }
    loop {
        let room = max_n - n;
        if room == 0 || rng.gen_bool(0.2) {
            break;
        }
        let open: Vec<usize> = (1..=n).filter(|&v| blocks_at[v] < 2).collect();
        if open.is_empty() {
            break;
        }
        let anchor = *open.choose(rng).unwrap();
        let size = rng.gen_range(1..=room.min(3));
        let fresh: Vec<usize> = (n + 1..=n + size).collect();
        let mut block = fresh.clone();
        block.push(anchor);
        edges.extend(complete_edges(&block));
        blocks_at[anchor] += 1;
        for &v in &fresh {
            blocks_at[v] = 1;
        }
        n += size;
    }
    let isolated = if n < max_n && rng.gen_bool(0.2) { 1 } else { 0 };
    let g = Graph::from_edges(n + isolated, edges).unwrap();
    shuffle(&g, rng)
}

fn complete_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for (k, &u) in vs.iter().enumerate() {
        for &v in &vs[k + 1..] {
            e.push((u.min(v), u.max(v)));
        }
    }
    e
}

/// A small connected graph that is usually not a block graph.
pub fn random_piece<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n.max(2));
    match rng.gen_range(0..4) {
        0 if n >= 3 => Graph::cycle(n),
        1 => Graph::complete(n),
        _ => loop {
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    if rng.gen_bool(0.5) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            if g.is_connected() {
                break g;
            }
        },
    }
}

/// Glues random pieces at vertices free on both sides until the graph has at least two
/// factors, keeping at most `max_n` vertices; labels are shuffled.
pub fn random_decomposable<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let mut g = random_piece(rng, 5.min(max_n - 1));
        while g.n() < max_n {
            let room = max_n - g.n() + 1;
            if room < 2 {
                break;
            }
            let piece = random_piece(rng, room.min(5));
            let free_g: Vec<usize> = g
                .vertices()
                .filter(|&v| g.is_free_vertex(v).unwrap())
                .collect();
            let free_p: Vec<usize> = piece
                .vertices()
                .filter(|&v| piece.is_free_vertex(v).unwrap())
                .collect();
            let (Some(&a), Some(&b)) = (free_g.choose(rng), free_p.choose(rng)) else {
                break;
            };
            g = g.glue(a, &piece, b).unwrap();
            if rng.gen_bool(0.35) {
                break;
            }
        }
        if g.decompose().unwrap().len() >= 2 {
            return shuffle(&g, rng);
        }
    }
}

fn canonical(g: &Graph) -> Vec<bool> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n);
                out.push(q);
            }
        }
        out
    }
    let a = adjacency(g);
    let n = g.n();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut code = Vec::with_capacity(n * n);
            for i in 1..=n {
                for j in i + 1..=n {
                    code.push(a[p[i - 1]][p[j - 1]]);
                }
            }
            code
        })
        .max()
        .unwrap()
}

fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    (0u32..1 << n)
        .map(|nbrs| {
            let new = (1..=n)
                .filter(|v| nbrs >> (v - 1) & 1 == 1)
                .map(|v| (v, n + 1));
            Graph::from_edges(n + 1, g.edges().into_iter().chain(new)).unwrap()
        })
        .collect()
}

/// One representative per isomorphism class of graphs on `n <= 6` vertices.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n));
    let mut level = vec![Graph::empty(1).unwrap()];
    for _ in 1..n {
        let mut seen = std::collections::HashSet::new();
        level = level
            .iter()
            .flat_map(extensions)
            .filter(|h| seen.insert(canonical(h)))
            .collect();
    }
    level
}

/// Graphs on `n <= 7` vertices covering every isomorphism class, possibly with
/// repeats.
pub fn graphs_covering_classes(n: usize) -> Vec<Graph> {
    if n <= 6 {
        graph_classes(n)
    } else {
        graph_classes(n - 1).iter().flat_map(extensions).collect()
    }
}

use bei_core::families::{validate_setup, ChainSpec, Join, Segment};

/// Chain specs with a valid join pattern: every interior `C_3` carries one merge flag.
/// Whiskers sit on a random subset of the block unless `rail` is set.
pub fn arb_chain_spec(max_segments: usize, rail: bool) -> impl Strategy<Value = ChainSpec> {
    let first = prop_oneof![
        Just(Segment::Complete(3)),
        Just(Segment::Complete(4)),
        Just(Segment::Complete(5)),
        Just(Segment::C4),
    ];
    let rest = proptest::collection::vec((any::<bool>(), any::<bool>()), 0..max_segments);
    (first, rest, any::<u64>()).prop_map(move |(first, rest, whisker_bits)| {
        let mut segments = vec![first];
        segments.extend(
            rest.iter()
                .map(|&(c4, _)| if c4 { Segment::C4 } else { Segment::C3 }),
        );
        let r = segments.len();
        let joins: Vec<Join> = (1..r)
            .map(|i| match segments[i] {
                Segment::C3 if i + 1 < r => {
                    if rest[i - 1].1 {
                        Join::W
                    } else {
                        Join::U
                    }
                }
                _ => Join::EDGE,
            })
            .collect();
        if rail {
            return ChainSpec::on_rail(segments, joins).unwrap();
        }
        let n = ChainSpec::new(segments.clone(), joins.clone(), vec![])
            .layout()
            .unwrap()
            .block
            .n();
        let whiskers = (1..=n)
            .filter(|v| whisker_bits >> (v - 1) & 1 == 1)
            .collect();
        ChainSpec::new(segments, joins, whiskers)
    })
}

/// Setup-valid specs whose whiskered graph has at most `max_n` vertices.
pub fn arb_valid_chain(max_segments: usize, max_n: usize) -> impl Strategy<Value = ChainSpec> {
    prop_oneof![
        arb_chain_spec(max_segments, true),
        arb_chain_spec(max_segments, false)
    ]
    .prop_filter("setup-valid", |s| validate_setup(s).is_empty())
    .prop_filter("small", move |s| {
        s.layout().unwrap().block.n() + s.whiskers.len() <= max_n
    })
}
