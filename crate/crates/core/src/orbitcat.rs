//! The reduced orbit category of a finite group.
//!
//! Objects are subgroup-class representatives H (in lattice order). A
//! morphism G/H -> G/K is a coset gK with g^{-1} H g inside K, i.e. an
//! H-fixed point of G/K; it sends eH to gK. Morphisms are stored by the
//! least element of their coset, listed in increasing order, which fixes a
//! deterministic index for every morphism.
//!
//! Composition in coset terms: if f: X -> Y has representative a and
//! g: Y -> Z has representative b, then g*f: X -> Z is the coset of a*b
//! (the left factor of the product is the representative of the morphism
//! applied first).

use crate::error::{Error, Result};
use crate::gset::{coset_space, CosetSpace};
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

/// Flat morphism index into an [`OrbitCategory`].
pub type MorIdx = usize;

#[derive(Debug)]
pub struct OrbitCategory {
    lattice: Arc<SubgroupLattice>,
    n_objects: usize,
    /// hom[i][j]: sorted canonical coset representatives of morphisms i -> j.
    hom: Vec<Vec<Vec<usize>>>,
    /// Flat index of the first morphism in hom[i][j].
    offsets: Vec<Vec<usize>>,
    mor_src: Vec<usize>,
    mor_dst: Vec<usize>,
    mor_rep: Vec<usize>,
    identities: Vec<MorIdx>,
    /// (second, first) -> composite, for every composable pair.
    compose_tbl: BTreeMap<(MorIdx, MorIdx), MorIdx>,
    coset_spaces: Vec<CosetSpace>,
}

impl OrbitCategory {
    pub fn build(lattice: Arc<SubgroupLattice>) -> Result<Self> {
        let group = lattice.group().clone();
        let n = lattice.n_classes();
        let coset_spaces: Vec<CosetSpace> = (0..n)
            .map(|c| coset_space(&group, &lattice.class_rep(c).clone()))
            .collect::<Result<_>>()?;

        let mut hom = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            let h = lattice.class_rep(i);
            for (j, hom_ij) in hom[i].iter_mut().enumerate() {
                let k = lattice.class_rep(j);
                let cs = &coset_spaces[j];
                for &rep in &cs.coset_reps {
                    let inv = group.inv(rep);
                    let fixed = h
                        .elements()
                        .iter()
                        .all(|&e| k.contains(group.mul(group.mul(inv, e), rep)));
                    if fixed {
                        hom_ij.push(rep);
                    }
                }
                // coset reps come out in increasing order already
                debug_assert!(hom_ij.windows(2).all(|w| w[0] < w[1]));
            }
        }

        let mut offsets = vec![vec![0usize; n]; n];
        let mut mor_src = Vec::new();
        let mut mor_dst = Vec::new();
        let mut mor_rep = Vec::new();
        for i in 0..n {
            for j in 0..n {
                offsets[i][j] = mor_rep.len();
                for &rep in &hom[i][j] {
                    mor_src.push(i);
                    mor_dst.push(j);
                    mor_rep.push(rep);
                }
            }
        }

        let mut cat = OrbitCategory {
            lattice,
            n_objects: n,
            hom,
            offsets,
            mor_src,
            mor_dst,
            mor_rep,
            identities: Vec::new(),
            compose_tbl: BTreeMap::new(),
            coset_spaces,
        };

        cat.identities = (0..n)
            .map(|i| {
                cat.find_morphism(i, i, 0).ok_or_else(|| {
                    Error::InternalConsistency(format!("object {i} lacks an identity"))
                })
            })
            .collect::<Result<_>>()?;

        // composition table over all composable pairs
        let group = cat.lattice.group().clone();
        let mut tbl = BTreeMap::new();
        for f in 0..cat.mor_rep.len() {
            let (i, j, a) = (cat.mor_src[f], cat.mor_dst[f], cat.mor_rep[f]);
            for k in 0..n {
                for (p, &b) in cat.hom[j][k].iter().enumerate() {
                    let g = cat.offsets[j][k] + p;
                    let prod = group.mul(a, b);
                    let rep = cat.canonical_rep(prod, k);
                    let comp = cat.find_morphism(i, k, rep).ok_or_else(|| {
                        Error::InternalConsistency(format!(
                            "composite of {f} then {g} missing from hom({i},{k})"
                        ))
                    })?;
                    tbl.insert((g, f), comp);
                }
            }
        }
        cat.compose_tbl = tbl;

        cat.verify()?;
        Ok(cat)
    }

    /// Least element of the coset containing `element` in G/(class rep).
    fn canonical_rep(&self, element: usize, class: usize) -> usize {
        let cs = &self.coset_spaces[class];
        cs.coset_reps[cs.point_of_element[element]]
    }

    fn find_morphism(&self, src: usize, dst: usize, rep: usize) -> Option<MorIdx> {
        self.hom[src][dst]
            .binary_search(&rep)
            .ok()
            .map(|p| self.offsets[src][dst] + p)
    }

    fn verify(&self) -> Result<()> {
        let lat = &self.lattice;
        let n = self.n_objects;
        for i in 0..n {
            if self.hom[i][i].len() != lat.weyl(i).order() {
                return Err(Error::InternalConsistency(format!(
                    "endomorphisms of object {i} do not match its Weyl group"
                )));
            }
            for j in 0..n {
                let nonempty = !self.hom[i][j].is_empty();
                if nonempty != lat.subconjugate(i, j) {
                    return Err(Error::InternalConsistency(format!(
                        "hom({i},{j}) does not match subconjugacy"
                    )));
                }
                if i != j && nonempty && !self.hom[j][i].is_empty() {
                    return Err(Error::InternalConsistency(format!(
                        "category is not skeletal at ({i},{j})"
                    )));
                }
            }
        }
        // identities act neutrally
        for f in 0..self.mor_rep.len() {
            let (i, j) = (self.mor_src[f], self.mor_dst[f]);
            if self.compose(self.identities[j], f)? != f
                || self.compose(f, self.identities[i])? != f
            {
                return Err(Error::InternalConsistency(format!(
                    "identity does not act neutrally on morphism {f}"
                )));
            }
        }
        // associativity on all composable triples
        for f in 0..self.mor_rep.len() {
            let j = self.mor_dst[f];
            for g in self.morphisms_from(j) {
                let k = self.mor_dst[g];
                let gf = self.compose(g, f)?;
                for h in self.morphisms_from(k) {
                    let left = self.compose(h, gf)?;
                    let right = self.compose(self.compose(h, g)?, f)?;
                    if left != right {
                        return Err(Error::InternalConsistency(format!(
                            "associativity fails on ({h}, {g}, {f})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.lattice.group()
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_morphisms(&self) -> usize {
        self.mor_rep.len()
    }

    pub fn hom_size(&self, src: usize, dst: usize) -> usize {
        self.hom[src][dst].len()
    }

    /// Flat indices of hom(src, dst), in canonical order.
    pub fn hom_set(&self, src: usize, dst: usize) -> Vec<MorIdx> {
        (0..self.hom[src][dst].len())
            .map(|p| self.offsets[src][dst] + p)
            .collect()
    }

    fn morphisms_from(&self, src: usize) -> Vec<MorIdx> {
        (0..self.n_objects)
            .flat_map(|dst| self.hom_set(src, dst))
            .collect()
    }

    pub fn src(&self, f: MorIdx) -> usize {
        self.mor_src[f]
    }

    pub fn dst(&self, f: MorIdx) -> usize {
        self.mor_dst[f]
    }

    /// Canonical coset representative of a morphism.
    pub fn rep(&self, f: MorIdx) -> usize {
        self.mor_rep[f]
    }

    pub fn identity(&self, object: usize) -> MorIdx {
        self.identities[object]
    }

    pub fn is_identity(&self, f: MorIdx) -> bool {
        self.identities[self.mor_src[f]] == f
    }

    /// `second * first` (apply `first`, then `second`).
    pub fn compose(&self, second: MorIdx, first: MorIdx) -> Result<MorIdx> {
        self.compose_tbl
            .get(&(second, first))
            .copied()
            .ok_or(Error::NotComposable)
    }

    /// The coset space underlying object `class`.
    pub fn coset_space_of(&self, class: usize) -> &CosetSpace {
        &self.coset_spaces[class]
    }

    /// DOT digraph: one node per object, one edge per non-identity morphism
    /// between distinct objects, and a loop-count annotation per object.
    pub fn to_dot(&self) -> String {
        let lat = &self.lattice;
        let mut out = String::from("digraph orbit_category {\n  rankdir=BT;\n");
        for i in 0..self.n_objects {
            let loops = lat.weyl(i).order() - 1;
            let _ = writeln!(
                out,
                "  n{i} [label=\"G/H{i} |H|={} loops={}\"];",
                lat.class_order(i),
                loops
            );
        }
        for i in 0..self.n_objects {
            for j in 0..self.n_objects {
                if i == j {
                    continue;
                }
                for _ in &self.hom[i][j] {
                    let _ = writeln!(out, "  n{i} -> n{j};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let hom_sizes: Vec<Vec<usize>> = (0..self.n_objects)
            .map(|i| (0..self.n_objects).map(|j| self.hom[i][j].len()).collect())
            .collect();
        let composition: Vec<[usize; 3]> = self
            .compose_tbl
            .iter()
            .map(|(&(g, f), &c)| [g, f, c])
            .collect();
        serde_json::json!({
            "schema": "bredon/orbit-category/v1",
            "group": self.group().descriptor(),
            "objects": (0..self.n_objects).map(|i| serde_json::json!({
                "class": i,
                "subgroup_order": self.lattice.class_order(i),
                "weyl_order": self.lattice.weyl(i).order(),
            })).collect::<Vec<_>>(),
            "hom_sizes": hom_sizes,
            "morphisms": (0..self.n_morphisms()).map(|f| serde_json::json!({
                "src": self.mor_src[f],
                "dst": self.mor_dst[f],
                "coset_rep": self.mor_rep[f],
            })).collect::<Vec<_>>(),
            "composition": composition,
        })
    }
}

/// Convenience: descriptor -> category, with lattice built along the way.
pub fn category_for(descriptor: &str) -> Result<Arc<OrbitCategory>> {
    let group = Arc::new(FiniteGroup::from_descriptor(descriptor)?);
    let lattice = Arc::new(SubgroupLattice::build(group)?);
    Ok(Arc::new(OrbitCategory::build(lattice)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(desc: &str) -> Arc<OrbitCategory> {
        category_for(desc).unwrap()
    }

    /// Independent tally of hom-set sizes straight from the definition,
    /// bypassing the category builder: count cosets gK with g^{-1}Hg in K.
    fn brute_hom_size(lat: &SubgroupLattice, i: usize, j: usize) -> usize {
        let g = lat.group();
        let h = lat.class_rep(i);
        let k = lat.class_rep(j);
        let fixed_elements = (0..g.order())
            .filter(|&a| {
                let inv = g.inv(a);
                h.elements()
                    .iter()
                    .all(|&e| k.contains(g.mul(g.mul(inv, e), a)))
            })
            .count();
        fixed_elements / k.order()
    }

    #[test]
    fn two_element_group_category() {
        let c = cat("C2");
        assert_eq!(c.n_objects(), 2);
        assert_eq!(c.hom_size(0, 0), 2);
        assert_eq!(c.hom_size(0, 1), 1);
        assert_eq!(c.hom_size(1, 1), 1);
        assert_eq!(c.hom_size(1, 0), 0);
        assert_eq!(c.n_morphisms(), 4);
        // the non-identity loop squares to the identity
        let loops = c.hom_set(0, 0);
        let beta = loops[1];
        assert!(c.is_identity(loops[0]));
        assert_eq!(c.compose(beta, beta).unwrap(), loops[0]);
    }

    #[test]
    fn identity_laws() {
        let c = cat("S3");
        for f in 0..c.n_morphisms() {
            assert_eq!(c.compose(c.identity(c.dst(f)), f).unwrap(), f);
            assert_eq!(c.compose(f, c.identity(c.src(f))).unwrap(), f);
        }
        assert!(matches!(
            c.compose(c.identity(0), c.identity(c.n_objects() - 1)),
            Err(Error::NotComposable)
        ));
    }

    #[test]
    fn endomorphism_counts_equal_weyl_orders() {
        for desc in [
            "C2",
            "S3",
            "D8",
            "perm:8:(0,1,2,3)(4,5,6,7);(0,4,2,6)(1,7,3,5)",
            "perm:4:(0,1,2);(0,1)(2,3)",
        ] {
            let c = cat(desc);
            for i in 0..c.n_objects() {
                assert_eq!(c.hom_size(i, i), c.lattice().weyl(i).order(), "{desc} {i}");
            }
        }
    }

    #[test]
    fn hom_sizes_match_brute_force() {
        for desc in ["C2", "S3", "D8"] {
            let c = cat(desc);
            for i in 0..c.n_objects() {
                for j in 0..c.n_objects() {
                    assert_eq!(
                        c.hom_size(i, j),
                        brute_hom_size(c.lattice(), i, j),
                        "{desc} hom({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn hom_from_bottom_and_into_top() {
        let c = cat("D8");
        let top = c.n_objects() - 1;
        for j in 0..c.n_objects() {
            assert_eq!(
                c.hom_size(0, j),
                c.group().order() / c.lattice().class_order(j)
            );
            assert_eq!(c.hom_size(j, top), 1);
        }
    }

    #[test]
    fn skeletal() {
        let c = cat("D8");
        for i in 0..c.n_objects() {
            for j in 0..c.n_objects() {
                if i != j && c.hom_size(i, j) > 0 {
                    assert_eq!(c.hom_size(j, i), 0);
                }
            }
        }
    }

    #[test]
    fn s3_category_shape() {
        let c = cat("S3");
        assert_eq!(c.n_objects(), 4);
        assert_eq!(c.hom_size(0, 0), 6);
    }

    #[test]
    fn d8_levels() {
        let c = cat("D8");
        assert_eq!(c.n_objects(), 8);
        let orders: Vec<usize> = (0..8).map(|i| c.lattice().class_order(i)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn dot_export_shapes() {
        let c2 = cat("C2").to_dot();
        assert_eq!(c2.matches("->").count(), 1);
        assert_eq!(c2.matches("loops=1").count(), 1);
        let s3 = cat("S3").to_dot();
        assert_eq!(s3.matches('[').count(), 4); // one label per node
        let d8 = cat("D8").to_dot();
        assert_eq!(d8.matches('[').count(), 8);
    }

    #[test]
    fn composition_agrees_with_coset_arithmetic() {
        let c = cat("D8");
        let g = c.group().clone();
        for f in 0..c.n_morphisms() {
            for k in 0..c.n_objects() {
                for s in c.hom_set(c.dst(f), k) {
                    let comp = c.compose(s, f).unwrap();
                    let prod = g.mul(c.rep(f), c.rep(s));
                    // composite coset contains the representative product
                    let cs = c.coset_space_of(k);
                    assert_eq!(
                        cs.coset_reps[cs.point_of_element[prod]],
                        c.rep(comp)
                    );
                }
            }
        }
    }
}
