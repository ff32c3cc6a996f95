//! Exact computational engine for orbit categories of finite permutation
//! groups, rational coefficient systems over them, and the homology of
//! configuration spaces of linear representations.
//!
//! The pipeline, bottom to top:
//!
//! * [`group`] / [`lattice`] / [`gset`] — permutation groups, their full
//!   subgroup lattice up to conjugacy, Weyl groups, and finite G-sets.
//! * [`orbitcat`] — the reduced orbit category: one object per subgroup
//!   class, hom-sets realized as fixed-point cosets, full composition table.
//! * [`coeffsys`] — contravariant functors from the orbit category to
//!   rational vector spaces, with constructors for the constant system, the
//!   one-class atoms, direct sums, and coinduced injectives.
//! * [`homalg`] — hom spaces as exact nullspace problems, kernels and
//!   cokernels, injective envelopes and resolutions, Ext dimensions.
//! * [`conf`] — cohomology of configuration spaces of Euclidean space:
//!   Betti tables, the admissible monomial basis, ring multiplication.
//! * [`pipeline`] — fixed-point dimensions of permutation representations,
//!   the decomposition of the homology coefficient system of a
//!   configuration space, and assembled E2-style tables.

pub mod conf;
pub mod coeffsys;
pub mod error;
pub mod gset;
pub mod group;
pub mod homalg;
pub mod lattice;
pub mod orbitcat;
pub mod pipeline;
pub mod ratmat;


pub use error::{Error, Result};
pub use group::{FiniteGroup, Permutation, DEFAULT_ORDER_CAP};
pub use gset::{coset_space, fixed_points, orbit_count, CosetSpace, GSet};

pub use lattice::{Subgroup, SubgroupLattice, WeylGroup};
pub use orbitcat::{category_for, MorIdx, OrbitCategory};
pub use ratmat::{Q, QMat};
