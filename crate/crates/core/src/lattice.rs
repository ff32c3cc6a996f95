//! Subgroup lattices: full enumeration, conjugacy classes, normalizers and
//! Weyl groups.
//!
//! Canonical choices made here pin all downstream indexing. A class
//! representative is the subgroup whose sorted element-index set is
//! lexicographically least in its class, and classes are ordered by
//! (subgroup order, representative); class 0 is therefore always the
//! trivial subgroup and the last class is the whole group.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// A subgroup, stored as the sorted set of parent-group element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    elems: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    /// Checks closure under multiplication and presence of the identity.
    pub fn verify(&self, group: &FiniteGroup) -> Result<()> {
        if !self.contains(0) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for &a in &self.elems {
            if a >= group.order() {
                return Err(Error::NotASubgroup(format!("element {a} out of range")));
            }
            for &b in &self.elems {
                if !self.contains(group.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed: {a} * {b} escapes"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Multiplicative closure of a set of element indices. The empty set closes
/// to the trivial subgroup.
pub fn closure(group: &FiniteGroup, seed: &[usize]) -> Subgroup {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let mut grew = false;
        let snapshot: Vec<usize> = set.iter().copied().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                if set.insert(group.mul(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Subgroup {
        elems: set.into_iter().collect(),
    }
}

/// The Weyl group of a class representative H: the cosets nH for n in the
/// normalizer, with the induced multiplication. Cosets are named by their
/// least element and listed in increasing order, so coset 0 is H itself.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    coset_reps: Vec<usize>,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    classes: Vec<Vec<usize>>,
    class_reps: Vec<usize>,
    class_of: Vec<usize>,
    subconj: Vec<Vec<bool>>,
    normalizers: Vec<Vec<usize>>,
    weyl: Vec<WeylGroup>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup by layered closure: all cyclic subgroups
    /// first, then pairwise joins until nothing new appears.
    pub fn build(group: Arc<FiniteGroup>) -> Result<Self> {
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert(vec![0]);
        for g in 0..group.order() {
            sets.insert(closure(&group, &[g]).elems);
        }
        loop {
            let snapshot: Vec<Vec<usize>> = sets.iter().cloned().collect();
            let mut grew = false;
            for i in 0..snapshot.len() {
                for j in (i + 1)..snapshot.len() {
                    if snapshot[i].len() == group.order() || snapshot[j].len() == group.order() {
                        continue;
                    }
                    let mut seed = snapshot[i].clone();
                    seed.extend_from_slice(&snapshot[j]);
                    let joined = closure(&group, &seed);
                    if sets.insert(joined.elems) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }

        let mut subgroups: Vec<Subgroup> = sets
            .into_iter()
            .map(|elems| Subgroup { elems })
            .collect();
        subgroups.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
        let index_of: BTreeMap<Vec<usize>, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elems.clone(), i))
            .collect();

        // conjugacy classes of subgroups
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members = BTreeSet::new();
            for g in 0..group.order() {
                let conj: Vec<usize> = {
                    let mut v: Vec<usize> = subgroups[i]
                        .elems
                        .iter()
                        .map(|&h| group.conjugate(g, h))
                        .collect();
                    v.sort_unstable();
                    v
                };
                members.insert(index_of[&conj]);
            }
            let cls = classes.len();
            for &m in &members {
                class_of[m] = cls;
            }
            classes.push(members.into_iter().collect());
        }
        // subgroups are sorted by (order, lex), so the first member of each
        // class is its canonical representative, and ordering classes by
        // representative realizes the (order, lex) class order
        classes.sort_by_key(|members| members[0]);
        let mut class_of = vec![0usize; subgroups.len()];
        for (c, members) in classes.iter().enumerate() {
            for &m in members {
                class_of[m] = c;
            }
        }
        let class_reps: Vec<usize> = classes.iter().map(|members| members[0]).collect();

        // subconjugacy: class i below class j iff some conjugate of the
        // i-representative sits inside the j-representative
        let n_classes = classes.len();
        let mut subconj = vec![vec![false; n_classes]; n_classes];
        for (i, members) in classes.iter().enumerate() {
            for (j, &rep_j) in class_reps.iter().enumerate() {
                let big = &subgroups[rep_j];
                subconj[i][j] = members
                    .iter()
                    .any(|&m| subgroups[m].elems.iter().all(|&e| big.contains(e)));
            }
        }

        let normalizers: Vec<Vec<usize>> = subgroups
            .iter()
            .map(|h| {
                (0..group.order())
                    .filter(|&g| {
                        h.elems
                            .iter()
                            .all(|&e| h.contains(group.conjugate(g, e)))
                    })
                    .collect()
            })
            .collect();

        let mut weyl = Vec::with_capacity(n_classes);
        for (c, &rep) in class_reps.iter().enumerate() {
            let h = &subgroups[rep];
            let normalizer = &normalizers[rep];
            if normalizer.len() % h.order() != 0 {
                return Err(Error::InternalConsistency(format!(
                    "normalizer order {} not divisible by subgroup order {} (class {c})",
                    normalizer.len(),
                    h.order()
                )));
            }
            let mut coset_of: BTreeMap<usize, usize> = BTreeMap::new();
            let mut coset_reps = Vec::new();
            for &n in normalizer {
                if coset_of.contains_key(&n) {
                    continue;
                }
                let idx = coset_reps.len();
                // members of nH; n is least because we scan ascending
                for &hh in &h.elems {
                    coset_of.insert(group.mul(n, hh), idx);
                }
                coset_reps.push(n);
            }
            let w = coset_reps.len();
            let mut mult = vec![vec![0usize; w]; w];
            let mut inv = vec![0usize; w];
            for a in 0..w {
                for b in 0..w {
                    mult[a][b] = coset_of[&group.mul(coset_reps[a], coset_reps[b])];
                }
                inv[a] = coset_of[&group.inv(coset_reps[a])];
            }
            weyl.push(WeylGroup {
                coset_reps,
                mult,
                inv,
            });
        }

        Ok(SubgroupLattice {
            group,
            subgroups,
            classes,
            class_reps,
            class_of,
            subconj,
            normalizers,
            weyl,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    pub fn class_rep(&self, class: usize) -> &Subgroup {
        &self.subgroups[self.class_reps[class]]
    }

    pub fn class_of_subgroup(&self, subgroup_index: usize) -> usize {
        self.class_of[subgroup_index]
    }

    pub fn class_order(&self, class: usize) -> usize {
        self.class_rep(class).order()
    }

    /// Is some conjugate of the class-`a` representative contained in the
    /// class-`b` representative?
    pub fn subconjugate(&self, a: usize, b: usize) -> bool {
        self.subconj[a][b]
    }

    pub fn normalizer_of_subgroup(&self, subgroup_index: usize) -> &[usize] {
        &self.normalizers[subgroup_index]
    }

    pub fn weyl(&self, class: usize) -> &WeylGroup {
        &self.weyl[class]
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn top_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Length of the longest chain in the subgroup poset, counted as the
    /// number of subgroups in the chain. Conjugate subgroups never nest, so
    /// chains of subgroups correspond to chains of classes.
    pub fn longest_chain_len(&self) -> usize {
        let n = self.n_classes();
        let mut best = vec![1usize; n];
        // classes are sorted by subgroup order, a topological order
        for j in 0..n {
            for i in 0..j {
                if self.subconj[i][j] && best[i] + 1 > best[j] {
                    best[j] = best[i] + 1;
                }
            }
        }
        best.into_iter().max().unwrap_or(1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "bredon/lattice/v1",
            "group": self.group.descriptor(),
            "order": self.group.order(),
            "subgroups": self.subgroups.iter().map(|s| s.elements().to_vec()).collect::<Vec<_>>(),
            "classes": (0..self.n_classes()).map(|c| serde_json::json!({
                "members": self.classes[c],
                "representative": self.class_reps[c],
                "subgroup_order": self.class_order(c),
                "weyl_order": self.weyl[c].order(),
            })).collect::<Vec<_>>(),
            "subconjugacy": self.subconj,
        })
    }
}
