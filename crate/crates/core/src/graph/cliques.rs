use super::{bit, mask_vertices, Graph};

impl Graph {
    /// All maximal cliques, each sorted, listed in lexicographic order. An isolated
    /// vertex is reported as the singleton clique it forms.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        self.bron_kerbosch(0, self.all_mask(), 0, &mut found);
        let mut cliques: Vec<Vec<usize>> = found
            .into_iter()
            .map(|m| mask_vertices(m).collect())
            .collect();
        cliques.sort();
        cliques
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 && r != 0 {
                out.push(r);
            }
            return;
        }
        // pivot: the vertex of P ∪ X with the most neighbors in P
        let pivot = mask_vertices(p | x)
            .max_by_key(|&u| (self.neighbor_mask(u) & p).count_ones())
            .expect("P is nonempty");
        for v in mask_vertices(p & !self.neighbor_mask(pivot)) {
            let nv = self.neighbor_mask(v);
            self.bron_kerbosch(r | bit(v), p & nv, x & nv, out);
            p &= !bit(v);
            x |= bit(v);
        }
    }
}
