//! Finite permutation groups.
//!
//! A group is stored as its full, lexicographically ordered element list
//! together with a generator word for every element. Products compose
//! permutations (`(a*b)(x) = a(b(x))`, so `b` acts first) and are resolved
//! back to element indices by lookup. The element ordering is the anchor
//! for every canonical choice made downstream: coset representatives,
//! subgroup class representatives and morphism indices all reduce to
//! "smallest element index".

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Default cap on the group order accepted by the constructors.
pub const DEFAULT_ORDER_CAP: usize = 2000;

/// A permutation of `{0, .., degree-1}`, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(Error::Parse(format!(
                        "cycle point {p} out of range for degree {degree}"
                    )));
                }
                if touched[p] {
                    return Err(Error::Parse(format!("point {p} repeated across cycles")));
                }
                touched[p] = true;
            }
            for k in 0..cycle.len() {
                images[cycle[k]] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn act(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// A finite permutation group with a fully enumerated, deterministically
/// ordered element list.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    descriptor: String,
    degree: usize,
    elements: Vec<Permutation>,
    /// Generator-index word for each element; the word multiplies left to
    /// right, so the last letter acts first on points.
    words: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
    inverses: Vec<usize>,
    generator_indices: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` via breadth-first
    /// closure, then fixes the lexicographic element order.
    pub fn from_generators(
        descriptor: &str,
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator degree {} does not match {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let id = Permutation::identity(degree);
        found.insert(id.images().to_vec(), Vec::new());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                let word_e = found.get(e.images()).cloned().unwrap();
                for (gi, g) in generators.iter().enumerate() {
                    let prod = e.compose(g);
                    if !found.contains_key(prod.images()) {
                        let mut w = word_e.clone();
                        w.push(gi);
                        found.insert(prod.images().to_vec(), w);
                        if found.len() > cap {
                            return Err(Error::OrderCapExceeded {
                                order: found.len(),
                                cap,
                            });
                        }
                        next.push(prod);
                    }
                }
            }
            frontier = next;
        }
        // BTreeMap iteration yields the lexicographic element order
        let mut elements = Vec::with_capacity(found.len());
        let mut words = Vec::with_capacity(found.len());
        let mut index = BTreeMap::new();
        for (i, (images, word)) in found.into_iter().enumerate() {
            index.insert(images.clone(), i);
            elements.push(Permutation { images });
            words.push(word);
        }
        let inverses = elements
            .iter()
            .map(|p| index[p.inverse().images()])
            .collect();
        let generator_indices = generators.iter().map(|g| index[g.images()]).collect();
        Ok(FiniteGroup {
            descriptor: descriptor.to_string(),
            degree,
            elements,
            words,
            index,
            inverses,
            generator_indices,
        })
    }

    /// Builds a group from a descriptor string with the default order cap.
    ///
    /// Descriptors: `C<n>` (cyclic), `D<2n>` (dihedral of order 2n),
    /// `S<n>` (symmetric), or `perm:<degree>:<cycles>[;<cycles>...]` with
    /// each generator written in cycle notation like `(0,1,2)(3,4)`.
    pub fn from_descriptor(descriptor: &str) -> Result<Self> {
        Self::from_descriptor_with_cap(descriptor, DEFAULT_ORDER_CAP)
    }

    pub fn from_descriptor_with_cap(descriptor: &str, cap: usize) -> Result<Self> {
        let desc = descriptor.trim();
        let check_order = |order: usize| -> Result<()> {
            if order > cap {
                Err(Error::OrderCapExceeded { order, cap })
            } else {
                Ok(())
            }
        };
        if let Some(n) = parse_family(desc, 'C') {
            let n = positive(n, desc)?;
            check_order(n)?;
            let gen = Permutation::from_cycles(n, &[(0..n).collect()])?;
            return FiniteGroup::from_generators(desc, n, vec![gen], cap);
        }
        if let Some(m) = parse_family(desc, 'D') {
            if m % 2 != 0 || m == 0 {
                return Err(Error::Parse(format!(
                    "dihedral descriptor {desc:?} must name an even positive order"
                )));
            }
            check_order(m)?;
            let n = m / 2;
            return match n {
                1 => {
                    let gen = Permutation::from_cycles(2, &[vec![0, 1]])?;
                    FiniteGroup::from_generators(desc, 2, vec![gen], cap)
                }
                2 => {
                    let a = Permutation::from_cycles(4, &[vec![0, 1]])?;
                    let b = Permutation::from_cycles(4, &[vec![2, 3]])?;
                    FiniteGroup::from_generators(desc, 4, vec![a, b], cap)
                }
                _ => {
                    let rot = Permutation::from_cycles(n, &[(0..n).collect()])?;
                    let refl =
                        Permutation::from_images((0..n).map(|x| (n - x) % n).collect())?;
                    FiniteGroup::from_generators(desc, n, vec![rot, refl], cap)
                }
            };
        }
        if let Some(n) = parse_family(desc, 'S') {
            let n = positive(n, desc)?;
            let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
                .ok_or(Error::OrderCapExceeded { order: usize::MAX, cap })?;
            check_order(order)?;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
            }
            if n >= 3 {
                gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
            }
            return FiniteGroup::from_generators(desc, n.max(1), gens, cap);
        }
        if let Some(rest) = desc.strip_prefix("perm:") {
            let (deg_str, gens_str) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("malformed descriptor {desc:?}")))?;
            let degree: usize = deg_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree in {desc:?}")))?;
            if degree == 0 {
                return Err(Error::Parse("degree must be positive".into()));
            }
            let mut gens = Vec::new();
            for gen_str in gens_str.split(';') {
                let gen_str = gen_str.trim();
                if gen_str.is_empty() {
                    continue;
                }
                gens.push(Permutation::from_cycles(degree, &parse_cycles(gen_str)?)?);
            }
            return FiniteGroup::from_generators(desc, degree, gens, cap);
        }
        Err(Error::Parse(format!("unknown group descriptor {desc:?}")))
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p.images()).copied()
    }

    /// Product of elements by index; the right factor acts first on points.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose(&self.elements[b]);
        self.index[prod.images()]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        // g h g^{-1}
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Generator word of an element (left-to-right product order).
    pub fn word(&self, a: usize) -> &[usize] {
        &self.words[a]
    }
}

fn parse_family(desc: &str, letter: char) -> Option<usize> {
    let rest = desc.strip_prefix(letter)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

fn positive(n: usize, desc: &str) -> Result<usize> {
    if n == 0 {
        Err(Error::Parse(format!("descriptor {desc:?} names order 0")))
    } else {
        Ok(n)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return Err(Error::Parse(format!("malformed cycles {s:?}")));
    }
    let mut cycles = Vec::new();
    for chunk in s[1..s.len() - 1].split(")(") {
        let mut cycle = Vec::new();
        for part in chunk.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            cycle.push(
                part.parse()
                    .map_err(|_| Error::Parse(format!("bad cycle point {part:?}")))?,
            );
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups_have_expected_orders() {
        assert_eq!(FiniteGroup::from_descriptor("C2").unwrap().order(), 2);
        assert_eq!(FiniteGroup::from_descriptor("C12").unwrap().order(), 12);
        assert_eq!(FiniteGroup::from_descriptor("D8").unwrap().order(), 8);
        assert_eq!(FiniteGroup::from_descriptor("D12").unwrap().order(), 12);
        assert_eq!(FiniteGroup::from_descriptor("S3").unwrap().order(), 6);
        assert_eq!(FiniteGroup::from_descriptor("S4").unwrap().order(), 24);
        assert_eq!(FiniteGroup::from_descriptor("S1").unwrap().order(), 1);
        assert_eq!(FiniteGroup::from_descriptor("C1").unwrap().order(), 1);
        assert_eq!(FiniteGroup::from_descriptor("D2").unwrap().order(), 2);
        assert_eq!(FiniteGroup::from_descriptor("D4").unwrap().order(), 4);
    }

    #[test]
    fn quaternion_and_alternating_via_perm_descriptor() {
        let q8 = FiniteGroup::from_descriptor("perm:8:(0,1,2,3)(4,5,6,7);(0,4,2,6)(1,7,3,5)")
            .unwrap();
        assert_eq!(q8.order(), 8);
        let a4 = FiniteGroup::from_descriptor("perm:4:(0,1,2);(0,1)(2,3)").unwrap();
        assert_eq!(a4.order(), 12);
    }

    #[test]
    fn element_order_is_lexicographic_with_identity_first() {
        let g = FiniteGroup::from_descriptor("D8").unwrap();
        assert!(g.element(0).is_identity());
        for i in 1..g.order() {
            assert!(g.element(i - 1) < g.element(i));
        }
    }

    #[test]
    fn words_reproduce_elements() {
        let g = FiniteGroup::from_descriptor("S4").unwrap();
        for i in 0..g.order() {
            let mut p = Permutation::identity(g.degree());
            for &gi in g.word(i) {
                p = p.compose(g.element(g.generator_indices()[gi]));
            }
            assert_eq!(&p, g.element(i));
        }
    }

    #[test]
    fn group_axioms_by_table() {
        let g = FiniteGroup::from_descriptor("S3").unwrap();
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn descriptor_errors() {
        assert!(matches!(
            FiniteGroup::from_descriptor("X9"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            FiniteGroup::from_descriptor("S7"),
            Err(Error::OrderCapExceeded { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_descriptor("D7"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            FiniteGroup::from_descriptor("perm:3:(0,1,1)"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            FiniteGroup::from_descriptor_with_cap("C30", 20),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn cycle_string_round_trip_flavor() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.cycle_string(), "(0 1 2)(3 4)");
        assert!(Permutation::identity(4).cycle_string() == "()");
    }
}
