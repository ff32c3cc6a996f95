//! Finite G-sets: coset spaces, fixed points, orbit counting.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::Subgroup;

/// A finite set with a group action, given by one point-permutation per
/// group generator. The action of an arbitrary element is recovered from
/// its generator word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    size: usize,
    gen_actions: Vec<Vec<usize>>,
    label: Option<String>,
}

impl GSet {
    /// Validates that the generator images are bijections and extend to a
    /// genuine action, by checking `act(e*s) = act(e) . act(s)` for every
    /// element `e` and generator `s`.
    pub fn new(
        group: &FiniteGroup,
        size: usize,
        gen_actions: Vec<Vec<usize>>,
        label: Option<String>,
    ) -> Result<Self> {
        if gen_actions.len() != group.generator_indices().len() {
            return Err(Error::Parse(
                "one action permutation required per group generator".into(),
            ));
        }
        for a in &gen_actions {
            if a.len() != size {
                return Err(Error::Parse("action permutation has wrong size".into()));
            }
            let mut seen = vec![false; size];
            for &p in a {
                if p >= size || seen[p] {
                    return Err(Error::Parse("action image is not a bijection".into()));
                }
                seen[p] = true;
            }
        }
        let gset = GSet {
            size,
            gen_actions,
            label,
        };
        let tables = gset.element_tables(group);
        for e in 0..group.order() {
            for (gi, &gidx) in group.generator_indices().iter().enumerate() {
                let prod = group.mul(e, gidx);
                for x in 0..size {
                    // e*s acts as: s first, then e
                    if tables[prod][x] != tables[e][gset.gen_actions[gi][x]] {
                        return Err(Error::Parse(
                            "generator images do not extend to a group action".into(),
                        ));
                    }
                }
            }
        }
        Ok(gset)
    }

    fn unchecked(size: usize, gen_actions: Vec<Vec<usize>>, label: Option<String>) -> Self {
        GSet {
            size,
            gen_actions,
            label,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Action table of a single element, from its generator word. The word
    /// multiplies left to right, so the rightmost letter acts first.
    pub fn element_action(&self, group: &FiniteGroup, element: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.size).collect();
        for &gi in group.word(element).iter().rev() {
            for slot in out.iter_mut() {
                *slot = self.gen_actions[gi][*slot];
            }
        }
        out
    }

    /// Action tables for all group elements.
    pub fn element_tables(&self, group: &FiniteGroup) -> Vec<Vec<usize>> {
        (0..group.order())
            .map(|e| self.element_action(group, e))
            .collect()
    }
}

/// A coset space G/H with its canonical bookkeeping: each point is a coset,
/// named by its least element.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub gset: GSet,
    /// Least element of each coset, indexed by point.
    pub coset_reps: Vec<usize>,
    /// Point containing each group element.
    pub point_of_element: Vec<usize>,
}

/// Left-translation action on the cosets of `h`.
pub fn coset_space(group: &FiniteGroup, h: &Subgroup) -> Result<CosetSpace> {
    h.verify(group)?;
    let n = group.order();
    let mut point_of_element = vec![usize::MAX; n];
    let mut coset_reps = Vec::new();
    for e in 0..n {
        if point_of_element[e] != usize::MAX {
            continue;
        }
        let p = coset_reps.len();
        for &hh in h.elements() {
            point_of_element[group.mul(e, hh)] = p;
        }
        coset_reps.push(e);
    }
    let gen_actions = group
        .generator_indices()
        .iter()
        .map(|&g| {
            coset_reps
                .iter()
                .map(|&rep| point_of_element[group.mul(g, rep)])
                .collect()
        })
        .collect();
    let label = format!("{}/|H|={}", group.descriptor(), h.order());
    let gset = GSet::unchecked(coset_reps.len(), gen_actions, Some(label));
    debug_assert!({
        let check = GSet::new(
            group,
            gset.size,
            gset.gen_actions.clone(),
            gset.label.clone(),
        );
        check.is_ok()
    });
    Ok(CosetSpace {
        gset,
        coset_reps,
        point_of_element,
    })
}

/// Points of `x` fixed by every element of `h`.
pub fn fixed_points(group: &FiniteGroup, x: &GSet, h: &Subgroup) -> Vec<usize> {
    let tables: Vec<Vec<usize>> = h
        .elements()
        .iter()
        .map(|&e| x.element_action(group, e))
        .collect();
    (0..x.size())
        .filter(|&p| tables.iter().all(|t| t[p] == p))
        .collect()
}

/// Number of h-orbits on `x`.
pub fn orbit_count(group: &FiniteGroup, x: &GSet, h: &Subgroup) -> usize {
    let tables: Vec<Vec<usize>> = h
        .elements()
        .iter()
        .map(|&e| x.element_action(group, e))
        .collect();
    let mut seen = vec![false; x.size()];
    let mut count = 0;
    for start in 0..x.size() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(p) = stack.pop() {
            for t in &tables {
                if !seen[t[p]] {
                    seen[t[p]] = true;
                    stack.push(t[p]);
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{closure, SubgroupLattice};
    use std::sync::Arc;

    fn d8() -> (Arc<FiniteGroup>, SubgroupLattice) {
        let g = Arc::new(FiniteGroup::from_descriptor("D8").unwrap());
        let lat = SubgroupLattice::build(g.clone()).unwrap();
        (g, lat)
    }

    #[test]
    fn coset_space_sizes() {
        let (g, lat) = d8();
        let trivial = lat.class_rep(0).clone();
        assert_eq!(coset_space(&g, &trivial).unwrap().gset.size(), 8);
        let whole = lat.class_rep(lat.top_class()).clone();
        assert_eq!(coset_space(&g, &whole).unwrap().gset.size(), 1);
        // the cyclic subgroup of order 4 has index 2
        let sigma = (0..lat.n_classes())
            .find(|&c| lat.class_order(c) == 4 && {
                // cyclic: has an element of order 4
                lat.class_rep(c).elements().iter().any(|&e| {
                    let sq = g.mul(e, e);
                    sq != 0 && g.mul(sq, sq) == 0
                })
            })
            .unwrap();
        assert_eq!(
            coset_space(&g, &lat.class_rep(sigma).clone())
                .unwrap()
                .gset
                .size(),
            2
        );
    }

    #[test]
    fn coset_reps_are_least_elements() {
        let (g, lat) = d8();
        for c in 0..lat.n_classes() {
            let cs = coset_space(&g, &lat.class_rep(c).clone()).unwrap();
            for (p, &rep) in cs.coset_reps.iter().enumerate() {
                let members: Vec<usize> = (0..g.order())
                    .filter(|&e| cs.point_of_element[e] == p)
                    .collect();
                assert_eq!(rep, *members.iter().min().unwrap());
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let (g, lat) = d8();
        let trivial = lat.class_rep(0).clone();
        let regular = coset_space(&g, &trivial).unwrap().gset;
        // the full coset space is fixed by the trivial subgroup
        assert_eq!(fixed_points(&g, &regular, &trivial).len(), 8);
        // one-point space is fixed by everything
        let whole = lat.class_rep(lat.top_class()).clone();
        let point = coset_space(&g, &whole).unwrap().gset;
        for c in 0..lat.n_classes() {
            assert_eq!(fixed_points(&g, &point, &lat.class_rep(c).clone()).len(), 1);
        }
        // no coset of a reflection subgroup is stable under the rotation;
        // conjugates of an order-4 element never land in an order-2 subgroup
        let rotation = g
            .elements()
            .iter()
            .enumerate()
            .find(|(_, p)| {
                let idx = g.index_of(p).unwrap();
                let sq = g.mul(idx, idx);
                sq != 0 && g.mul(sq, sq) == 0
            })
            .map(|(i, _)| i)
            .unwrap();
        let rot4 = closure(&g, &[rotation]);
        let refl_class = (0..lat.n_classes())
            .find(|&c| lat.class_order(c) == 2 && lat.weyl(c).order() == 2)
            .unwrap();
        let cs = coset_space(&g, &lat.class_rep(refl_class).clone()).unwrap();
        assert!(fixed_points(&g, &cs.gset, &rot4).is_empty());
    }

    #[test]
    fn orbit_counts_on_the_regular_set() {
        let (g, lat) = d8();
        let trivial = lat.class_rep(0).clone();
        let regular = coset_space(&g, &trivial).unwrap().gset;
        for c in 0..lat.n_classes() {
            let h = lat.class_rep(c).clone();
            assert_eq!(
                orbit_count(&g, &regular, &h),
                g.order() / h.order(),
                "regular orbits are cosets"
            );
        }
    }

    #[test]
    fn burnside_cross_check() {
        // orbit count equals the average number of fixed points
        for desc in ["S3", "D8"] {
            let g = Arc::new(FiniteGroup::from_descriptor(desc).unwrap());
            let lat = SubgroupLattice::build(g.clone()).unwrap();
            for c in 0..lat.n_classes() {
                let cs = coset_space(&g, &lat.class_rep(c).clone()).unwrap();
                for hc in 0..lat.n_classes() {
                    let h = lat.class_rep(hc).clone();
                    let total: usize = h
                        .elements()
                        .iter()
                        .map(|&e| {
                            let t = cs.gset.element_action(&g, e);
                            (0..cs.gset.size()).filter(|&p| t[p] == p).count()
                        })
                        .sum();
                    assert_eq!(total % h.order(), 0);
                    assert_eq!(orbit_count(&g, &cs.gset, &h), total / h.order());
                }
            }
        }
    }

    #[test]
    fn invalid_actions_are_rejected() {
        let g = FiniteGroup::from_descriptor("C2").unwrap();
        // not a bijection
        assert!(GSet::new(&g, 2, vec![vec![0, 0]], None).is_err());
        // bijective but not an action: the generator has order 2 in C2, a
        // 3-cycle on points does not
        assert!(GSet::new(&g, 3, vec![vec![1, 2, 0]], None).is_err());
        // genuine action passes
        assert!(GSet::new(&g, 2, vec![vec![1, 0]], None).is_ok());
    }

    #[test]
    fn fixed_points_bounded_by_orbit_count() {
        // every fixed point is a singleton orbit, so fixed <= orbits <= size
        let g = Arc::new(FiniteGroup::from_descriptor("D8").unwrap());
        let lat = SubgroupLattice::build(g.clone()).unwrap();
        for c in 0..lat.n_classes() {
            let cs = coset_space(&g, &lat.class_rep(c).clone()).unwrap();
            for hc in 0..lat.n_classes() {
                let h = lat.class_rep(hc).clone();
                let fixed = fixed_points(&g, &cs.gset, &h).len();
                let orbits = orbit_count(&g, &cs.gset, &h);
                assert!(fixed <= orbits);
                assert!(orbits <= cs.gset.size());
                if cs.gset.size() == 1 {
                    assert_eq!((fixed, orbits), (1, 1));
                }
            }
        }
    }
}
