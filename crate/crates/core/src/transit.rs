//! Transition matrices among the twelve normalized bases of `V` and `V*`,
//! routed through a graph of tabulated edges, and the matrices of the rotator.
//!
//! A transition matrix `S` from basis `u` to basis `v` satisfies
//! `v_j = sum_i S[i][j] u_i`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::exactla::ExactMatrix;
use crate::modmodel::{ModelError, ModuleSpec};
use crate::repkit::{
    build_canonical, space_ring, Axis, BasisId, CanonicalFamily, FamilyBase, Flavor, SpaceId, VerificationReport,
};
use crate::scalars::{QRing, Scalar};

/// The table an edge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Reversal of the basis order, given by `Z`.
    Inversion,
    /// Between `[xi]_row` and `[xi]_col`, or between their inversions.
    Diagonal,
    /// From a basis of one axis to an inverted basis of a neighbouring axis.
    LowerTriangular,
    /// Between bases of consecutive axes, given by `P_q` and its relatives.
    Rotation,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Inversion => "inversion",
            EdgeKind::Diagonal => "diagonal",
            EdgeKind::LowerTriangular => "lower triangular",
            EdgeKind::Rotation => "rotation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionEdge<S> {
    pub space: SpaceId,
    pub from: BasisId,
    pub to: BasisId,
    pub matrix: ExactMatrix<S>,
    pub kind: EdgeKind,
}

/// The matrix representing the rotator on `space` with respect to `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotatorRep<S> {
    pub space: SpaceId,
    pub basis: BasisId,
    pub matrix: ExactMatrix<S>,
}

fn sign<S: Scalar>(k: usize) -> S {
    if k % 2 == 1 {
        -S::one()
    } else {
        S::one()
    }
}

fn family<S: Scalar>(ring: &QRing<S>, d: usize, transposed: bool, z: bool) -> ExactMatrix<S> {
    build_canonical(ring, CanonicalFamily::new(FamilyBase::P, transposed, false, z), d)
}

fn p<S: Scalar>(spec: &ModuleSpec<S>, space: SpaceId, u: Axis, v: Axis) -> S {
    match space {
        SpaceId::V => spec.pairing(u, v).clone(),
        SpaceId::VDual => spec.pairing(v, u).clone(),
    }
}

/// All tabulated edges on one space: twelve of each kind.
pub fn edges<S: Scalar>(spec: &ModuleSpec<S>, space: SpaceId) -> Vec<TransitionEdge<S>> {
    let d = spec.d();
    let n = d + 1;
    let r = space_ring(spec.ring(), space);
    let pp = |u, v| p(spec, space, u, v);
    let binom = |a: usize, b: usize| r.q_binom(a, b).expect("indices are in range");
    let rev = |i: usize, inv: bool| if inv { d - i } else { i };
    let mut out = Vec::with_capacity(48);
    let mut push = |from: BasisId, to: BasisId, matrix: ExactMatrix<S>, kind| {
        out.push(TransitionEdge { space, from, to, matrix, kind });
    };

    for b in BasisId::all() {
        push(b, b.inversion(), ExactMatrix::reversal(n), EdgeKind::Inversion);
    }

    for xi in Axis::ALL {
        let (nu, pi) = (xi.next(), xi.prev());
        for inv in [false, true] {
            let to_col = ExactMatrix::diagonal(
                (0..n)
                    .map(|i| {
                        let k = rev(i, inv);
                        sign::<S>(k) * r.pow(k as i64 * (1 - d as i64)) / binom(d, k) * pp(nu, pi)
                            / (pp(nu, xi) * pp(xi, pi))
                    })
                    .collect(),
            );
            let to_row = ExactMatrix::diagonal(
                (0..n)
                    .map(|i| {
                        let k = rev(i, inv);
                        sign::<S>(k) * r.pow(k as i64 * (d as i64 - 1)) * binom(d, k) * pp(nu, xi) * pp(xi, pi)
                            / pp(nu, pi)
                    })
                    .collect(),
            );
            let (row, col) = (BasisId::new(xi, inv, Flavor::Row), BasisId::new(xi, inv, Flavor::Col));
            push(row, col, to_col, EdgeKind::Diagonal);
            push(col, row, to_row, EdgeKind::Diagonal);
        }

        let lower = |f: &dyn Fn(usize, usize) -> S| {
            ExactMatrix::from_fn(n, n, |i, j| if j <= i { f(i, j) } else { S::zero() })
        };
        let (di, c) = (d as i64, pp(nu, pi) / pp(xi, pi));
        push(
            BasisId::row(xi),
            BasisId::inv_row(nu),
            lower(&|i, j| sign::<S>(j) * r.pow(j as i64 * (1 - i as i64)) * binom(i, j) * &c),
            EdgeKind::LowerTriangular,
        );
        let c = pp(pi, xi) / pp(pi, nu);
        push(
            BasisId::col(xi),
            BasisId::inv_col(nu),
            lower(&|i, j| {
                sign::<S>(d - i) * r.pow((i as i64 - di) * (di - j as i64 - 1)) * binom(d - j, i - j) * &c
            }),
            EdgeKind::LowerTriangular,
        );
        let c = pp(pi, nu) / pp(xi, nu);
        push(
            BasisId::inv_row(xi),
            BasisId::row(pi),
            lower(&|i, j| sign::<S>(j) * r.pow(j as i64 * (i as i64 - 1)) * binom(i, j) * &c),
            EdgeKind::LowerTriangular,
        );
        let c = pp(nu, xi) / pp(nu, pi);
        push(
            BasisId::inv_col(xi),
            BasisId::col(pi),
            lower(&|i, j| {
                sign::<S>(d - i) * r.pow((di - i as i64) * (di - j as i64 - 1)) * binom(d - j, i - j) * &c
            }),
            EdgeKind::LowerTriangular,
        );

        let row_scale = pp(nu, pi) / pp(xi, pi);
        let col_scale = pp(pi, xi) / pp(pi, nu);
        for inv in [false, true] {
            push(
                BasisId::new(xi, inv, Flavor::Row),
                BasisId::new(nu, inv, Flavor::Row),
                family(&r, d, false, inv).scale(&row_scale),
                EdgeKind::Rotation,
            );
            push(
                BasisId::new(xi, inv, Flavor::Col),
                BasisId::new(nu, inv, Flavor::Col),
                family(&r, d, true, inv).scale(&col_scale),
                EdgeKind::Rotation,
            );
        }
    }
    out
}

/// The edge graph of one space with breadth-first routing.
#[derive(Clone, Debug)]
pub struct TransitGraph<S> {
    space: SpaceId,
    n: usize,
    edges: BTreeMap<(BasisId, BasisId), TransitionEdge<S>>,
}

impl<S: Scalar> TransitGraph<S> {
    pub fn new(spec: &ModuleSpec<S>, space: SpaceId) -> Self {
        let edges = edges(spec, space).into_iter().map(|e| ((e.from, e.to), e)).collect();
        TransitGraph { space, n: spec.d() + 1, edges }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn edges(&self) -> impl Iterator<Item = &TransitionEdge<S>> {
        self.edges.values()
    }

    pub fn edge(&self, from: BasisId, to: BasisId) -> Option<&TransitionEdge<S>> {
        self.edges.get(&(from, to))
    }

    /// A shortest chain of bases from `from` to `to` through tabulated edges.
    pub fn path(&self, from: BasisId, to: BasisId) -> Vec<BasisId> {
        let mut prev: BTreeMap<BasisId, BasisId> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        while let Some(b) = queue.pop_front() {
            if b == to {
                break;
            }
            for &(_, next) in self.edges.keys().filter(|(f, _)| *f == b) {
                if next != from && !prev.contains_key(&next) {
                    prev.insert(next, b);
                    queue.push_back(next);
                }
            }
        }
        let mut path = vec![to];
        while *path.last().expect("nonempty") != from {
            let b = prev[path.last().expect("nonempty")];
            path.push(b);
        }
        path.reverse();
        path
    }

    /// The product of edge matrices along a chain of bases.
    pub fn compose(&self, path: &[BasisId]) -> Option<ExactMatrix<S>> {
        path.windows(2).try_fold(ExactMatrix::identity(self.n), |acc, w| {
            self.edge(w[0], w[1]).map(|e| acc.mul(&e.matrix))
        })
    }

    pub fn transition(&self, from: BasisId, to: BasisId) -> ExactMatrix<S> {
        self.compose(&self.path(from, to)).expect("paths follow tabulated edges")
    }
}

/// The transition matrix from `from` to `to` on `space`.
pub fn transition<S: Scalar>(spec: &ModuleSpec<S>, space: SpaceId, from: BasisId, to: BasisId) -> ExactMatrix<S> {
    TransitGraph::new(spec, space).transition(from, to)
}

/// The transition matrix computed directly from the closed-form bases.
pub fn change_of_coordinates<S: Scalar>(
    spec: &ModuleSpec<S>,
    space: SpaceId,
    from: BasisId,
    to: BasisId,
) -> Result<ExactMatrix<S>, ModelError> {
    let u = spec.basis_matrix(space, from)?;
    let v = spec.basis_matrix(space, to)?;
    Ok(u.inverse()?.mul(&v))
}

/// The rotator matrix with respect to `basis`: `P`, `P^t`, `ZPZ` or `ZP^tZ`
/// by flavor and inversion, at `q` on `V` and at `q^-1` on `V*`.
pub fn rotator_rep<S: Scalar>(ring: &QRing<S>, space: SpaceId, basis: BasisId, d: usize) -> RotatorRep<S> {
    let r = space_ring(ring, space);
    let matrix = family(&r, d, basis.flavor == Flavor::Col, basis.inverted);
    RotatorRep { space, basis, matrix }
}

/// Edge tables against closed-form bases, routing, cycles and duality transport.
pub fn transition_suite<S: Scalar>(spec: &ModuleSpec<S>) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = spec.d() + 1;
    let graphs = [TransitGraph::new(spec, SpaceId::V), TransitGraph::new(spec, SpaceId::VDual)];
    let mut bases: BTreeMap<(SpaceId, BasisId), ExactMatrix<S>> = BTreeMap::new();
    for space in SpaceId::ALL {
        for b in BasisId::all() {
            match spec.basis_matrix(space, b) {
                Ok(m) => {
                    bases.insert((space, b), m);
                }
                Err(e) => r.check_with_note(format!("{space} {b}: basis available"), false, e.to_string()),
            }
        }
    }
    if !r.all_passed() {
        return r;
    }
    for g in &graphs {
        let space = g.space();
        for e in g.edges() {
            r.check_eq(
                format!("{space} {} edge {} -> {}", e.kind, e.from, e.to),
                &bases[&(space, e.from)].mul(&e.matrix),
                &bases[&(space, e.to)],
            );
        }
        let routed = BasisId::all().into_iter().all(|a| {
            BasisId::all().into_iter().all(|b| bases[&(space, a)].mul(&g.transition(a, b)) == bases[&(space, b)])
        });
        r.check(format!("{space}: every routed transition matches the closed-form bases"), routed);
        for inv in [false, true] {
            for flavor in [Flavor::Row, Flavor::Col] {
                let cycle: Vec<BasisId> =
                    [Axis::X, Axis::Y, Axis::Z, Axis::X].iter().map(|&a| BasisId::new(a, inv, flavor)).collect();
                let names: Vec<String> = cycle.iter().map(|b| b.to_string()).collect();
                match g.compose(&cycle) {
                    Some(m) => r.check_eq(format!("{space}: cycle {}", names.join(" -> ")), &m, &ExactMatrix::identity(n)),
                    None => r.check(format!("{space}: cycle {}", names.join(" -> ")), false),
                }
            }
        }
    }
    let transported = BasisId::all().into_iter().all(|a| {
        BasisId::all().into_iter().all(|b| {
            graphs[0].transition(a, b).transpose() == graphs[1].transition(b.dual(), a.dual())
        })
    });
    r.check("transposed transitions on V are transitions between dual bases on V*", transported);
    r
}

/// `P^3`, `P^-1 = ZP_{q^-1}Z`, conjugation by the rotator and the adjoint rotator.
pub fn rotator_suite<S: Scalar>(ring: &QRing<S>, d: usize) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = d + 1;
    let pq = family(ring, d, false, false);
    let scalar = sign::<S>(d) * ring.pow(-((d * d.saturating_sub(1)) as i64));
    r.check_eq("P^3 is scalar", &pq.pow(3), &ExactMatrix::identity(n).scale(&scalar));
    let inv = family(&ring.inverted(), d, false, true);
    match pq.inverse() {
        Ok(m) => r.check_eq("P^-1 = ZP_{q^-1}Z", &m, &inv),
        Err(e) => r.check_with_note("P^-1 = ZP_{q^-1}Z", false, e.to_string()),
    }
    for space in SpaceId::ALL {
        for b in BasisId::all() {
            let m = rotator_rep(ring, space, b, d).matrix;
            let m_inv = match m.inverse() {
                Ok(mi) => mi,
                Err(e) => {
                    r.check_with_note(format!("{space} {b}: rotator invertible"), false, e.to_string());
                    continue;
                }
            };
            let reps = crate::repkit::RepMatrices::new(ring, space, b, d);
            for a in Axis::ALL {
                let lhs = m.mul(reps.equitable(a)).mul(&m_inv);
                r.check_eq(format!("{space} {b}: rotator sends {a} to {}", a.next()), &lhs, reps.equitable(a.next()));
            }
        }
    }
    let v = rotator_rep(ring, SpaceId::V, BasisId::row(Axis::X), d).matrix;
    let w = rotator_rep(ring, SpaceId::VDual, BasisId::inv_col(Axis::X), d).matrix;
    match v.transpose().inverse() {
        Ok(m) => r.check_eq("inverse transpose of the rotator on V is the rotator on V*", &m, &w),
        Err(e) => r.check_with_note("inverse transpose of the rotator on V is the rotator on V*", false, e.to_string()),
    }
    r
}
