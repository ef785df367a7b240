use crate::cochain::{
    betti, cohomology_basis, map_on_cohomology, restriction_matrix, simplicial_cochain_complex,
};
use crate::complex::{SimplicialComplex, UnionFind, Vertex};
use crate::error::Result;
use crate::linalg::PrimeField;
use crate::persistence::{barcode, Barcode, Tower};

/// `β^{n,h} = dim H^n(X^h)`; zero once `h > dim X`.
pub fn thick_betti(x: &SimplicialComplex, n: usize, h: usize, field: PrimeField) -> usize {
    betti(&x.coskeleton(h), n, field)
}

/// `H^n(X^0) -> H^n(X^1) -> ... -> H^n(X^{dim X + 1}) = 0`, the maps being
/// induced by the coskeleton inclusions.
pub fn coskeletal_tower(x: &SimplicialComplex, n: usize, field: PrimeField) -> Result<Tower> {
    let top = (x.dim() + 1) as usize;
    let levels: Vec<SimplicialComplex> = (0..=top).map(|h| x.coskeleton(h)).collect();
    let bases: Vec<_> = levels
        .iter()
        .map(|c| cohomology_basis(&simplicial_cochain_complex(c, field), n))
        .collect();
    let steps = (0..top)
        .map(|h| {
            let r = restriction_matrix(&levels[h + 1], &levels[h], n, field)?;
            map_on_cohomology(&r, &bases[h], &bases[h + 1])
        })
        .collect::<Result<Vec<_>>>()?;
    Tower::new(bases.iter().map(|b| b.dim()).collect(), steps, field)
}

/// Multiplicity `β^n_{b,d}` of `[b,d)` in the coskeletal barcode.
pub fn thick_persistent_betti(
    x: &SimplicialComplex,
    n: usize,
    b: usize,
    d: usize,
    field: PrimeField,
) -> Result<usize> {
    Ok(barcode(&coskeletal_tower(x, n, field)?)?.multiplicity(b, d))
}

/// Thick Betti numbers `β^{n,h}` for `0 <= n <= dim X`, `0 <= h <= dim X + 1`,
/// and the coskeletal barcode in every degree.
#[derive(Clone, Debug)]
pub struct ThickProfile {
    pub field: PrimeField,
    /// `betti[n][h]`.
    pub betti: Vec<Vec<usize>>,
    /// `barcodes[n]`.
    pub barcodes: Vec<Barcode>,
}

impl ThickProfile {
    pub fn get(&self, n: usize, h: usize) -> usize {
        self.betti
            .get(n)
            .and_then(|r| r.get(h))
            .copied()
            .unwrap_or(0)
    }

    pub fn persistent(&self, n: usize, b: usize, d: usize) -> usize {
        self.barcodes.get(n).map_or(0, |c| c.multiplicity(b, d))
    }
}

pub fn thick_profile(x: &SimplicialComplex, field: PrimeField) -> Result<ThickProfile> {
    let degrees = (x.dim() + 1) as usize;
    let towers = (0..degrees)
        .map(|n| coskeletal_tower(x, n, field))
        .collect::<Result<Vec<_>>>()?;
    let betti = towers.iter().map(|t| t.dims().to_vec()).collect();
    let barcodes = towers.iter().map(barcode).collect::<Result<Vec<_>>>()?;
    Ok(ThickProfile {
        field,
        betti,
        barcodes,
    })
}

/// Vertices of `X` lying in no simplex of dimension `>= h`.
pub fn isolated_vertices(x: &SimplicialComplex, h: usize) -> Vec<Vertex> {
    let kept = x.coskeleton(h).vertices();
    x.vertices()
        .into_iter()
        .filter(|v| kept.binary_search(v).is_err())
        .collect()
}

/// Number of classes of `S^{>=h}(X)` (simplices of dimension `>= h`) under
/// walks of simplices sharing a vertex.
pub fn thick_simplex_classes(x: &SimplicialComplex, h: usize) -> usize {
    let top = x.dim();
    if (h as isize) > top {
        return 0;
    }
    let members: Vec<_> = (h..=top as usize)
        .flat_map(|d| x.simplices(d).iter())
        .collect();
    let verts = x.vertices();
    let mut uf = UnionFind::new(members.len() + verts.len());
    // join each simplex to its vertices; vertex nodes are offset
    for (k, s) in members.iter().enumerate() {
        for v in s.vertices() {
            let vi = verts
                .binary_search(v)
                .expect("vertices of simplices are vertices");
            uf.union(k, members.len() + vi);
        }
    }
    let roots: std::collections::BTreeSet<usize> = (0..members.len()).map(|k| uf.find(k)).collect();
    roots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures;
    use crate::persistence::Bar;

    const F2: PrimeField = PrimeField::Z2;

    #[test]
    fn table_values() {
        let (l, r) = (fixtures::l6(), fixtures::r6());
        assert_eq!(thick_betti(&l, 0, 2, F2), 1);
        assert_eq!(thick_betti(&r, 0, 2, F2), 2);
        assert_eq!(thick_betti(&l, 1, 2, F2), 0);
        assert_eq!(thick_betti(&l, 1, 7, F2), 0);
    }

    #[test]
    fn l6_towers() {
        let l = fixtures::l6();
        let t1 = coskeletal_tower(&l, 1, F2).unwrap();
        assert_eq!(t1.dims(), &[1, 1, 0, 0]);
        assert!(t1.step(0).is_identity());
        assert_eq!(
            barcode(&t1).unwrap().bars(),
            &[Bar {
                birth: 0,
                death: 2,
                mult: 1
            }]
        );
        let t0 = coskeletal_tower(&l, 0, F2).unwrap();
        assert_eq!(t0.dims(), &[1, 1, 1, 0]);
        assert_eq!(
            barcode(&t0).unwrap().bars(),
            &[Bar {
                birth: 0,
                death: 3,
                mult: 1
            }]
        );
        assert_eq!(thick_persistent_betti(&l, 1, 0, 2, F2).unwrap(), 1);
    }

    #[test]
    fn triforce_hole_is_enclosed_by_triangles() {
        assert_eq!(
            thick_persistent_betti(&fixtures::triforce(), 1, 0, 3, F2).unwrap(),
            1
        );
    }

    #[test]
    fn profile_and_zero_degree_counts() {
        let l = fixtures::l6();
        let p = thick_profile(&l, F2).unwrap();
        assert_eq!(
            p.betti,
            vec![vec![1, 1, 1, 0], vec![1, 1, 0, 0], vec![0, 0, 0, 0]]
        );
        assert_eq!(isolated_vertices(&l, 2), vec![1]);
        assert_eq!(thick_simplex_classes(&l, 2), 1);
        assert_eq!(thick_simplex_classes(&fixtures::r6(), 2), 2);
        assert_eq!(thick_simplex_classes(&l, 3), 0);
        let empty = thick_profile(&SimplicialComplex::empty(), F2).unwrap();
        assert!(empty.betti.is_empty());
    }
}
