use minabc_core::Tree;

use crate::params::{order_of, FamilyParams, ParamError};

/// Largest order `materialize` will build.
pub const MATERIALIZE_LIMIT: u64 = 50_000_000;

struct Builder {
    adj: Vec<Vec<usize>>,
}

impl Builder {
    fn vertex(&mut self, parent: Option<usize>) -> usize {
        let id = self.adj.len();
        self.adj.push(Vec::new());
        if let Some(p) = parent {
            self.adj[p].push(id);
            self.adj[id].push(p);
        }
        id
    }

    fn pendant_paths(&mut self, at: usize, count: u64) {
        for _ in 0..count {
            let mid = self.vertex(Some(at));
            self.vertex(Some(mid));
        }
    }

    fn b_branch(&mut self, parent: usize, k: u64) {
        let c = self.vertex(Some(parent));
        self.pendant_paths(c, k);
    }

    /// Degree-4 centre with two pendant paths and a degree-3 child that
    /// carries two more.
    fn b3_double_star(&mut self, parent: usize) {
        let c = self.vertex(Some(parent));
        self.pendant_paths(c, 2);
        let w = self.vertex(Some(c));
        self.pendant_paths(w, 2);
    }

    fn d_branch(&mut self, root: usize, b3: u64, b2: u64, double_star: bool) {
        let c = self.vertex(Some(root));
        for _ in 0..b3 {
            self.b_branch(c, 3);
        }
        for _ in 0..b2 {
            self.b_branch(c, 2);
        }
        if double_star {
            self.b3_double_star(c);
        }
    }
}

/// Builds the explicit tree. Vertex 0 is the root and branches are numbered
/// depth-first in the order `D_z`, `D_{z+1}`, `D_z**`, `D_{k1,1}^2`,
/// `D_{k2,2}^2`, root B3s, root B4s.
pub fn materialize(p: &FamilyParams) -> Result<Tree, ParamError> {
    p.validate()?;
    let n = order_of(p);
    if n > MATERIALIZE_LIMIT {
        return Err(ParamError::TooLarge(n));
    }
    let z = p.z as u64;
    let mut b = Builder { adj: Vec::with_capacity(n as usize) };
    let root = b.vertex(None);
    for _ in 0..p.n_z {
        b.d_branch(root, z, 0, false);
    }
    for _ in 0..p.n_zp1 {
        b.d_branch(root, z + 1, 0, false);
    }
    if p.b_star {
        b.d_branch(root, z - 1, 0, true);
    }
    if p.b1 {
        b.d_branch(root, p.k1 as u64 - 1, 1, false);
    }
    if p.b2 {
        b.d_branch(root, p.k2 as u64 - 2, 2, false);
    }
    if p.b3 {
        for _ in 0..p.n3 {
            b.b_branch(root, 3);
        }
    }
    if p.b4 {
        for _ in 0..p.n4 {
            b.b_branch(root, 4);
        }
    }
    debug_assert_eq!(b.adj.len() as u64, n);
    Ok(Tree::from_adjacency(b.adj).expect("construction yields a tree"))
}
