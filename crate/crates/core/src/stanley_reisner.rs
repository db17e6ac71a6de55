//! Strict closedness of Stanley-Reisner rings `k[Δ]`.
//!
//! The condition on a monomial `X^h` depends only on `supp(h)`, so sweeping
//! every nonempty vertex subset decides the question completely.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest vertex count accepted; vertex sets are stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A simplicial complex given by its facets on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<u64>,
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl SimplicialComplex {
    /// Facets are lists of 1-based vertex labels. Rejects empty facets,
    /// labels outside `1..=n`, repeated labels and nested facets.
    pub fn new(n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n_vertices == 0 || n_vertices > MAX_VERTICES {
            return Err(Error::InvalidComplex(format!("vertex count must be in 1..={MAX_VERTICES}")));
        }
        if facets.is_empty() {
            return Err(Error::InvalidComplex("no facets".into()));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::InvalidComplex(format!("facet {} is empty", i + 1)));
            }
            if let Some(v) = f.iter().find(|&&v| v == 0 || v > n_vertices) {
                return Err(Error::InvalidComplex(format!("vertex {v} outside 1..={n_vertices}")));
            }
            let m = mask_of(f);
            if m.count_ones() as usize != f.len() {
                return Err(Error::InvalidComplex(format!("facet {} repeats a vertex", i + 1)));
            }
            masks.push(m);
        }
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if i != j && a & b == a {
                    return Err(Error::InvalidComplex(format!("facet {} is contained in facet {}", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { n_vertices, facets: masks })
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, &[(1..=n).collect()])
    }

    /// `n` isolated vertices: `k[Δ] = S/(X_i X_j | i < j)`, of dimension one.
    pub fn points(n: usize) -> Result<Self> {
        Self::skeleton(n, 1)
    }

    /// All `k`-subsets of `{1..n}` as facets. `skeleton(n, n - 2)` is the
    /// complex of `S/(X_1⋯X̂_i⋯X_n | 1 <= i <= n)`.
    pub fn skeleton(n: usize, k: usize) -> Result<Self> {
        use itertools::Itertools;
        Self::new(n, &(1..=n).combinations(k).collect::<Vec<_>>())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| vertices_of(m)).collect()
    }

    fn all_vertices(&self) -> u64 {
        if self.n_vertices == 64 {
            u64::MAX
        } else {
            (1u64 << self.n_vertices) - 1
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .facets()
            .iter()
            .map(|fc| format!("{{{}}}", fc.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `P_i = (X_α | α ∉ F_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetPrime {
    pub index: usize,
    pub variables: Vec<usize>,
}

pub fn minimal_primes(delta: &SimplicialComplex) -> Vec<FacetPrime> {
    let all = delta.all_vertices();
    delta
        .facets
        .iter()
        .enumerate()
        .map(|(index, &f)| FacetPrime { index, variables: vertices_of(all & !f) })
        .collect()
}

/// A support `U` with `Γ(U) = {i : U ⊆ F_i}` (0-based facet indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportClass {
    pub support: Vec<usize>,
    pub gamma: Vec<usize>,
}

impl SupportClass {
    pub fn new(delta: &SimplicialComplex, support: &[usize]) -> Self {
        let u = mask_of(support);
        let gamma = delta.facets.iter().enumerate().filter(|(_, &f)| u & f == u).map(|(i, _)| i).collect();
        Self { support: vertices_of(u), gamma }
    }
}

/// Number of connected components of the graph on `Γ(U)` with an edge
/// `i - j` whenever `U ⊆ F_i ∩ F_j`.
fn constraint_components(facets: &[u64], u: u64, gamma: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..gamma.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = gamma.len();
    for a in 0..gamma.len() {
        for b in a + 1..gamma.len() {
            let both = facets[gamma[a]] & facets[gamma[b]];
            if u & both == u {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
    }
    components
}

fn component_mask(delta: &SimplicialComplex, u: u64) -> (usize, usize) {
    let gamma: Vec<usize> = (0..delta.facets.len()).filter(|&i| u & delta.facets[i] == u).collect();
    let dim_star = constraint_components(&delta.facets, u, &gamma);
    let dim_ring = usize::from(!gamma.is_empty());
    debug_assert!(dim_star <= 1, "constraint graph on Γ(U) is complete");
    (dim_star, dim_ring)
}

/// `(dim_star, dim_ring)` for the support `U`: the dimension of the
/// degree-`h` piece of `R*` inside `∏ R/P_i`, and of `R` itself.
pub fn sr_component(delta: &SimplicialComplex, support: &[usize]) -> Result<(usize, usize)> {
    if support.is_empty() {
        return Err(Error::InvalidInput("support must be nonempty".into()));
    }
    if let Some(v) = support.iter().find(|&&v| v == 0 || v > delta.n_vertices) {
        return Err(Error::InvalidInput(format!("vertex {v} outside 1..={}", delta.n_vertices)));
    }
    Ok(component_mask(delta, mask_of(support)))
}

/// The first support whose two dimensions differ, if any.
pub fn sr_violation(delta: &SimplicialComplex) -> Option<Vec<usize>> {
    let all = delta.all_vertices();
    (1..=all)
        .into_par_iter()
        .filter(|&u| {
            let (star, ring) = component_mask(delta, u);
            assert!(star <= 1, "dim_star > 1 on support {:?}", vertices_of(u));
            star != ring
        })
        .min()
        .map(vertices_of)
}

/// Sweeps all `2^n - 1` supports. Complete: no degree box involved.
pub fn sr_is_strictly_closed(delta: &SimplicialComplex) -> bool {
    sr_violation(delta).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> SimplicialComplex {
        SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SimplicialComplex::new(3, &[vec![1, 2], vec![1]]).is_err());
        assert!(SimplicialComplex::new(3, &[vec![1, 4]]).is_err());
        assert!(SimplicialComplex::new(3, &[vec![]]).is_err());
        assert!(SimplicialComplex::new(3, &[]).is_err());
        assert!(SimplicialComplex::new(3, &[vec![1, 1]]).is_err());
        assert!(SimplicialComplex::new(0, &[vec![1]]).is_err());
        assert_eq!(path3().to_string(), "{1,2} {2,3}");
    }

    #[test]
    fn primes_are_complements() {
        let p = minimal_primes(&path3());
        assert_eq!(p[0].variables, vec![3]);
        assert_eq!(p[1].variables, vec![1]);
        let p = minimal_primes(&SimplicialComplex::points(3).unwrap());
        let vars: Vec<Vec<usize>> = p.into_iter().map(|q| q.variables).collect();
        assert_eq!(vars, vec![vec![2, 3], vec![1, 3], vec![1, 2]]);
        let p = minimal_primes(&SimplicialComplex::simplex(4).unwrap());
        assert_eq!(p.len(), 1);
        assert!(p[0].variables.is_empty());
    }

    #[test]
    fn components() {
        let d = path3();
        assert_eq!(sr_component(&d, &[2]).unwrap(), (1, 1));
        assert_eq!(sr_component(&d, &[1, 3]).unwrap(), (0, 0));
        assert_eq!(SupportClass::new(&d, &[2]).gamma, vec![0, 1]);
        assert_eq!(sr_component(&SimplicialComplex::points(4).unwrap(), &[1]).unwrap(), (1, 1));
        assert!(sr_component(&d, &[]).is_err());
    }

    #[test]
    fn closed_examples() {
        assert!(sr_is_strictly_closed(&path3()));
        for n in 3..=5 {
            assert!(sr_is_strictly_closed(&SimplicialComplex::points(n).unwrap()));
        }
        assert!(sr_is_strictly_closed(&SimplicialComplex::simplex(3).unwrap()));
        for n in 3..=6 {
            let d = SimplicialComplex::skeleton(n, n - 2).unwrap();
            assert_eq!(d.facet_count(), n * (n - 1) / 2);
            assert!(sr_is_strictly_closed(&d));
        }
        assert_eq!(SimplicialComplex::skeleton(3, 1).unwrap(), SimplicialComplex::points(3).unwrap());
    }

    /// Every antichain of nonempty subsets of `{1..n}`, as facet masks.
    fn antichains(n: usize) -> Vec<Vec<u64>> {
        let subsets: Vec<u64> = (1..1u64 << n).collect();
        let mut out = Vec::new();
        fn go(subsets: &[u64], start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            for i in start..subsets.len() {
                let s = subsets[i];
                if cur.iter().all(|&c| c & s != c && c & s != s) {
                    cur.push(s);
                    go(subsets, i + 1, cur, out);
                    cur.pop();
                }
            }
        }
        go(&subsets, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn exhaustive_small() {
        // nonempty antichains on 3 vertices: Dedekind number 20 minus the two trivial ones
        assert_eq!(antichains(3).len(), 18);
        for n in 1..=4 {
            for a in antichains(n) {
                let facets: Vec<Vec<usize>> = a.iter().map(|&m| vertices_of(m)).collect();
                let d = SimplicialComplex::new(n, &facets).unwrap();
                assert!(sr_is_strictly_closed(&d), "{d}");
            }
        }
    }

    #[test]
    fn relabeling_is_equivariant() {
        let d = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3, 4], vec![1, 4]]).unwrap();
        let perm = [3usize, 1, 4, 2];
        let relabel = |s: &[usize]| s.iter().map(|&v| perm[v - 1]).collect::<Vec<_>>();
        let e = SimplicialComplex::new(4, &d.facets().iter().map(|f| relabel(f)).collect::<Vec<_>>()).unwrap();
        for u in 1u64..16 {
            let s = vertices_of(u);
            assert_eq!(sr_component(&d, &s).unwrap(), sr_component(&e, &relabel(&s)).unwrap());
        }
    }
}
