//! Independent brute-force oracles shared by the integration tests.
//!
//! Everything here works on dense vectors over Z/pZ with its own Gaussian
//! elimination and its own face enumeration, so agreement with the library
//! is a genuine cross-check.

#![allow(dead_code)]

use rand::Rng;
use simplicial_resilience::complex::SimplicialComplex;
use simplicial_resilience::linalg::{FpMatrix, PrimeField};
use simplicial_resilience::persistence::{Barcode, Tower};

pub type Col = Vec<u32>;

fn inv(p: u32, a: u32) -> u32 {
    (1..p)
        .find(|&b| (a as u64 * b as u64) % p as u64 == 1)
        .expect("nonzero element")
}

fn axpy(p: u32, y: &mut [u32], c: u32, x: &[u32]) {
    for (a, &b) in y.iter_mut().zip(x) {
        *a = ((*a as u64 + c as u64 * b as u64) % p as u64) as u32;
    }
}

/// Incremental elimination that remembers how each stored row was built
/// from the inserted vectors.
pub struct Solver {
    p: u32,
    dim: usize,
    rows: Vec<(usize, Col, Col)>,
    inserted: usize,
}

impl Solver {
    pub fn new(p: u32, dim: usize) -> Self {
        Solver {
            p,
            dim,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    /// Reduces `v`; returns the residue and the combination `c` of inserted
    /// vectors with `v - residue = Σ c_k input_k`.
    fn reduce(&self, v: &[u32]) -> (Col, Col) {
        let mut r = v.to_vec();
        let mut combo = vec![0u32; self.inserted];
        for (piv, row, expr) in &self.rows {
            let c = r[*piv];
            if c != 0 {
                axpy(self.p, &mut r, self.p - c, row);
                for (k, &e) in expr.iter().enumerate() {
                    combo[k] = ((combo[k] as u64 + c as u64 * e as u64) % self.p as u64) as u32;
                }
            }
        }
        (r, combo)
    }

    /// Inserts `v`. If it is dependent, returns its coefficients on the
    /// previously inserted vectors.
    pub fn insert(&mut self, v: &[u32]) -> Option<Col> {
        assert_eq!(v.len(), self.dim);
        let (r, mut combo) = self.reduce(v);
        let index = self.inserted;
        self.inserted += 1;
        for row in &mut self.rows {
            row.2.push(0);
        }
        match r.iter().position(|&x| x != 0) {
            None => Some(combo),
            Some(piv) => {
                let s = inv(self.p, r[piv]);
                let row: Col = r
                    .iter()
                    .map(|&x| ((x as u64 * s as u64) % self.p as u64) as u32)
                    .collect();
                // row = s (v - Σ combo_k input_k)
                let mut expr: Col = combo
                    .iter()
                    .map(|&c| ((self.p - c) as u64 * s as u64 % self.p as u64) as u32)
                    .collect();
                combo.clear();
                expr.push(s);
                debug_assert_eq!(expr.len(), index + 1);
                self.rows.push((piv, row, expr));
                None
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).0.iter().all(|&x| x == 0)
    }

    /// Coefficients on the inserted vectors reproducing `v`, if any.
    pub fn solve(&self, v: &[u32]) -> Option<Col> {
        let (r, combo) = self.reduce(v);
        r.iter().all(|&x| x == 0).then_some(combo)
    }
}

pub fn rank(p: u32, dim: usize, cols: &[Col]) -> usize {
    let mut s = Solver::new(p, dim);
    for c in cols {
        s.insert(c);
    }
    s.rank()
}

/// Null space basis of the map whose columns are `cols` (each of length `dim`).
pub fn nullspace(p: u32, dim: usize, cols: &[Col]) -> Vec<Col> {
    let mut s = Solver::new(p, dim);
    let mut out = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if let Some(combo) = s.insert(c) {
            let mut v = vec![0u32; cols.len()];
            for (k, &x) in combo.iter().enumerate() {
                v[k] = (p - x) % p;
            }
            v[j] = 1;
            out.push(v);
        }
    }
    out
}

pub fn apply(p: u32, rows: usize, cols: &[Col], v: &[u32]) -> Col {
    let mut out = vec![0u32; rows];
    for (c, &x) in cols.iter().zip(v) {
        if x != 0 {
            axpy(p, &mut out, x, c);
        }
    }
    out
}

/// Simplices of the complex generated by `facets`, dimension-major and
/// lexicographic, from a direct subset enumeration.
pub fn closure(facets: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let mut all: Vec<Vec<u32>> = Vec::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        for mask in 1u32..(1 << f.len()) {
            all.push(
                (0..f.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect(),
            );
        }
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    all.dedup();
    let top = all.last().map_or(0, Vec::len);
    (1..=top)
        .map(|k| all.iter().filter(|s| s.len() == k).cloned().collect())
        .collect()
}

pub fn facets_of(x: &SimplicialComplex) -> Vec<Vec<u32>> {
    x.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

/// Cohomology of one complex in one degree.
pub struct Coh {
    pub p: u32,
    pub n: usize,
    pub basis: Vec<Vec<u32>>,
    pub reps: Vec<Col>,
    solver: Solver,
    k: usize,
    cob: Vec<Col>,
    next_dim: usize,
}

impl Coh {
    pub fn new(facets: &[Vec<u32>], n: usize, p: u32) -> Self {
        let s = closure(facets);
        let get = |k: usize| s.get(k).cloned().unwrap_or_default();
        let (lower, here, upper) = (if n == 0 { vec![] } else { get(n - 1) }, get(n), get(n + 1));
        let cob_into = |from: &[Vec<u32>], to: &[Vec<u32>]| -> Vec<Col> {
            from.iter()
                .map(|sigma| {
                    let mut col = vec![0u32; to.len()];
                    for (r, tau) in to.iter().enumerate() {
                        let pos = (0..tau.len()).find(|&j| {
                            let mut t = tau.clone();
                            t.remove(j);
                            &t == sigma
                        });
                        if let Some(j) = pos {
                            col[r] = if j % 2 == 0 { 1 } else { p - 1 };
                        }
                    }
                    col
                })
                .collect()
        };
        let d_n = cob_into(&here, &upper);
        let d_prev = cob_into(&lower, &here);
        let z = nullspace(p, upper.len(), &d_n);
        let mut sel = Solver::new(p, here.len());
        for b in &d_prev {
            sel.insert(b);
        }
        let reps: Vec<Col> = z.into_iter().filter(|c| sel.insert(c).is_none()).collect();
        let mut solver = Solver::new(p, here.len());
        for r in &reps {
            solver.insert(r);
        }
        for b in &d_prev {
            solver.insert(b);
        }
        let k = reps.len();
        Coh {
            p,
            n,
            basis: here,
            reps,
            solver,
            k,
            cob: d_n,
            next_dim: upper.len(),
        }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn classify(&self, z: &[u32]) -> Col {
        assert!(
            apply(self.p, self.next_dim, &self.cob, z)
                .iter()
                .all(|&x| x == 0),
            "not a cocycle"
        );
        let x = self
            .solver
            .solve(z)
            .expect("cocycles are classes plus coboundaries");
        x[..self.k].to_vec()
    }

    /// Matrix (columns) of `H^n(self) -> H^n(sub)` for a subcomplex `sub`.
    pub fn restrict_to(&self, sub: &Coh) -> Vec<Col> {
        self.reps
            .iter()
            .map(|z| {
                let r: Col = sub
                    .basis
                    .iter()
                    .map(|s| {
                        let i = self.basis.iter().position(|t| t == s).expect("subcomplex");
                        z[i]
                    })
                    .collect();
                sub.classify(&r)
            })
            .collect()
    }
}

pub fn betti(facets: &[Vec<u32>], n: usize, p: u32) -> usize {
    Coh::new(facets, n, p).dim()
}

/// A tower given by dense column matrices.
#[derive(Clone, Debug)]
pub struct DenseTower {
    pub p: u32,
    pub dims: Vec<usize>,
    pub steps: Vec<Vec<Col>>,
}

impl DenseTower {
    pub fn to_tower(&self) -> Tower {
        let f = PrimeField::new(self.p).unwrap();
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, cols)| to_matrix(self.dims[i + 1], cols, f))
            .collect();
        Tower::new(self.dims.clone(), steps, f).unwrap()
    }
}

pub fn to_matrix(rows: usize, cols: &[Col], f: PrimeField) -> FpMatrix {
    let triplets = cols
        .iter()
        .enumerate()
        .flat_map(|(j, c)| c.iter().enumerate().map(move |(i, &x)| (i, j, x as i64)));
    FpMatrix::from_triplets(rows, cols.len(), f, triplets)
}

/// Interval decomposition by the elder rule: push every live vector forward
/// oldest first; a vector whose image depends on older images dies, and the
/// next space is completed by new births.
pub fn elder_barcode(t: &DenseTower) -> Vec<(usize, usize, usize)> {
    let p = t.p;
    let len = t.dims.len();
    let mut bars: Vec<(usize, usize)> = Vec::new();
    // (birth, vector)
    let mut live: Vec<(usize, Col)> = Vec::new();
    for i in 0..len {
        // complete a basis of M_i
        let mut s = Solver::new(p, t.dims[i]);
        for (_, v) in &live {
            assert!(s.insert(v).is_none(), "live vectors stay independent");
        }
        for e in 0..t.dims[i] {
            let mut v = vec![0u32; t.dims[i]];
            v[e] = 1;
            if s.insert(&v).is_none() {
                live.push((i, v));
            }
        }
        if i + 1 == len {
            break;
        }
        live.sort_by_key(|(b, _)| *b);
        let mut next = Vec::new();
        let mut s = Solver::new(p, t.dims[i + 1]);
        for (b, v) in live {
            let w = apply(p, t.dims[i + 1], &t.steps[i], &v);
            if s.insert(&w).is_none() {
                next.push((b, w));
            } else {
                bars.push((b, i + 1));
            }
        }
        live = next;
    }
    for (b, _) in live {
        bars.push((b, len));
    }
    bars.sort_unstable();
    let mut out: Vec<(usize, usize, usize)> = Vec::new();
    for (b, d) in bars {
        match out.last_mut() {
            Some(last) if (last.0, last.1) == (b, d) => last.2 += 1,
            _ => out.push((b, d, 1)),
        }
    }
    out
}

pub fn bar_triples(c: &Barcode) -> Vec<(usize, usize, usize)> {
    c.bars()
        .iter()
        .map(|b| (b.birth, b.death, b.mult))
        .collect()
}

pub fn random_tower(rng: &mut impl Rng, p: u32) -> DenseTower {
    let len = rng.gen_range(1..=5);
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=4)).collect();
    let steps = (0..len - 1)
        .map(|i| {
            // low-rank products now and then, so long bars appear
            let inner = if rng.gen_bool(0.3) {
                rng.gen_range(0..=2)
            } else {
                4
            };
            let a: Vec<Col> = (0..dims[i])
                .map(|_| (0..inner).map(|_| sparse_entry(rng, p)).collect())
                .collect();
            let b: Vec<Col> = (0..inner)
                .map(|_| (0..dims[i + 1]).map(|_| sparse_entry(rng, p)).collect())
                .collect();
            a.iter().map(|col| apply(p, dims[i + 1], &b, col)).collect()
        })
        .collect();
    DenseTower { p, dims, steps }
}

fn sparse_entry(rng: &mut impl Rng, p: u32) -> u32 {
    if rng.gen_bool(0.5) {
        0
    } else {
        rng.gen_range(0..p)
    }
}

/// Random complex on at most `max_vertices` vertices with facets of
/// dimension at most 3.
pub fn random_complex(rng: &mut impl Rng, max_vertices: u32) -> SimplicialComplex {
    let nv = rng.gen_range(1..=max_vertices);
    let nf = rng.gen_range(1..=6);
    let facets: Vec<Vec<u32>> = (0..nf)
        .map(|_| {
            let size = rng.gen_range(1..=4.min(nv as usize));
            let mut pool: Vec<u32> = (0..nv).collect();
            let mut f = Vec::with_capacity(size);
            for _ in 0..size {
                let k = rng.gen_range(0..pool.len());
                f.push(pool.swap_remove(k));
            }
            f
        })
        .collect();
    SimplicialComplex::from_facets(facets).unwrap()
}

/// Ladder oracle: image, kernel and cokernel towers of `rungs : bottom -> top`.
pub struct DenseLadder {
    pub bottom: DenseTower,
    pub top: DenseTower,
    pub rungs: Vec<Vec<Col>>,
}

impl DenseLadder {
    /// Cohomology ladder of two decreasing chains with `top[i] ⊆ bottom[i]`.
    pub fn of_inclusions(
        bottom: &[Vec<Vec<u32>>],
        top: &[Vec<Vec<u32>>],
        n: usize,
        p: u32,
    ) -> Self {
        let hb: Vec<Coh> = bottom.iter().map(|f| Coh::new(f, n, p)).collect();
        let ht: Vec<Coh> = top.iter().map(|f| Coh::new(f, n, p)).collect();
        let tower = |h: &[Coh]| DenseTower {
            p,
            dims: h.iter().map(Coh::dim).collect(),
            steps: (0..h.len() - 1)
                .map(|i| h[i].restrict_to(&h[i + 1]))
                .collect(),
        };
        let rungs = (0..bottom.len())
            .map(|i| hb[i].restrict_to(&ht[i]))
            .collect();
        DenseLadder {
            bottom: tower(&hb),
            top: tower(&ht),
            rungs,
        }
    }

    pub fn image(&self) -> DenseTower {
        let p = self.top.p;
        let subs: Vec<Vec<Col>> = (0..self.rungs.len())
            .map(|i| {
                let mut s = Solver::new(p, self.top.dims[i]);
                self.rungs[i]
                    .iter()
                    .filter(|c| s.insert(c).is_none())
                    .cloned()
                    .collect()
            })
            .collect();
        restricted(&self.top, &subs)
    }

    pub fn kernel(&self) -> DenseTower {
        let subs: Vec<Vec<Col>> = (0..self.rungs.len())
            .map(|i| nullspace(self.top.p, self.top.dims[i], &self.rungs[i]))
            .collect();
        restricted(&self.bottom, &subs)
    }

    pub fn cokernel(&self) -> DenseTower {
        let p = self.top.p;
        // complement of the image spanned by standard vectors, per index
        let mut ims = Vec::new();
        let mut comps = Vec::new();
        for i in 0..self.rungs.len() {
            let d = self.top.dims[i];
            let mut s = Solver::new(p, d);
            let im: Vec<Col> = self.rungs[i]
                .iter()
                .filter(|c| s.insert(c).is_none())
                .cloned()
                .collect();
            let comp: Vec<Col> = (0..d)
                .map(|e| {
                    let mut v = vec![0u32; d];
                    v[e] = 1;
                    v
                })
                .filter(|v| s.insert(v).is_none())
                .collect();
            ims.push(im);
            comps.push(comp);
        }
        let steps = (0..self.rungs.len() - 1)
            .map(|i| {
                let d = self.top.dims[i + 1];
                let mut s = Solver::new(p, d);
                for v in ims[i + 1].iter().chain(&comps[i + 1]) {
                    s.insert(v);
                }
                let skip = ims[i + 1].len();
                comps[i]
                    .iter()
                    .map(|c| {
                        let w = apply(p, d, &self.top.steps[i], c);
                        s.solve(&w).expect("basis")[skip..].to_vec()
                    })
                    .collect()
            })
            .collect();
        DenseTower {
            p,
            dims: comps.iter().map(Vec::len).collect(),
            steps,
        }
    }
}

fn restricted(t: &DenseTower, subs: &[Vec<Col>]) -> DenseTower {
    let p = t.p;
    let steps = (0..subs.len() - 1)
        .map(|i| {
            let mut s = Solver::new(p, t.dims[i + 1]);
            for v in &subs[i + 1] {
                s.insert(v);
            }
            subs[i]
                .iter()
                .map(|v| {
                    s.solve(&apply(p, t.dims[i + 1], &t.steps[i], v))
                        .expect("image stays in the subspace")
                })
                .collect()
        })
        .collect();
    DenseTower {
        p,
        dims: subs.iter().map(Vec::len).collect(),
        steps,
    }
}

/// Coskeleton by facet filtering, independent of the library.
pub fn coskeleton(facets: &[Vec<u32>], h: usize) -> Vec<Vec<u32>> {
    facets.iter().filter(|f| f.len() > h).cloned().collect()
}
