//! Builtin finite C2-simplicial sets.

use super::constructions::smash;
use super::simplex::DegSimplex;
use super::space::{C2SimplicialSet, SimplicialSetBuilder, SsetError};

/// Resolves a builtin space by name.
pub fn builtin(name: &str) -> Result<C2SimplicialSet, SsetError> {
    match name {
        "pt" => Ok(pt()),
        "S0" => Ok(s0()),
        "S1" => Ok(s1()),
        "S2" => Ok(s2()),
        "Ssigma" => Ok(s_sigma()),
        "Srho" => s_rho(),
        "C2" => Ok(c2()),
        "RP2" => Ok(rp2()),
        "circle_wedge2" => Ok(circle_wedge2()),
        other => Err(SsetError::UnknownSpace(other.to_string())),
    }
}

pub const BUILTIN_NAMES: &[&str] = &[
    "pt",
    "S0",
    "S1",
    "S2",
    "Ssigma",
    "Srho",
    "C2",
    "RP2",
    "circle_wedge2",
];

/// One fixed vertex, pointed.
pub fn pt() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    b.vertex("v");
    C2SimplicialSet::trivial(b.build().expect("pt is valid"), Some(0))
}

/// Two fixed vertices, pointed at the first.
pub fn s0() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    b.vertex("b");
    b.vertex("p");
    C2SimplicialSet::trivial(b.build().expect("S0 is valid"), Some(0))
}

/// One vertex and one edge with both faces at the vertex; trivial action.
pub fn s1() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let v = b.vertex("v");
    b.simplex(
        1,
        "e",
        vec![DegSimplex::nondegenerate(v), DegSimplex::nondegenerate(v)],
    );
    C2SimplicialSet::trivial(b.build().expect("S1 is valid"), Some(0))
}

/// One vertex and one 2-simplex with all faces the degenerate edge s_0 v;
/// trivial action.
pub fn s2() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let v = b.vertex("v");
    let sv = DegSimplex::nondegenerate(v).degenerate(0);
    b.simplex(2, "w", vec![sv.clone(), sv.clone(), sv]);
    C2SimplicialSet::trivial(b.build().expect("S2 is valid"), Some(0))
}

/// The sign representation sphere: two fixed vertices b, m and two edges
/// from b to m swapped by the action; pointed at b.
pub fn s_sigma() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let vb = b.vertex("b");
    let vm = b.vertex("m");
    let faces = vec![DegSimplex::nondegenerate(vm), DegSimplex::nondegenerate(vb)];
    b.simplex(1, "e0", faces.clone());
    b.simplex(1, "e1", faces);
    let space = b.build().expect("Ssigma is valid");
    C2SimplicialSet::new(space, vec![vec![0, 1], vec![1, 0]], Some(0))
        .expect("swapping the edges is simplicial")
}

/// The regular representation sphere, modelled as Ssigma smashed with S1.
pub fn s_rho() -> Result<C2SimplicialSet, SsetError> {
    smash(&s_sigma(), &s1(), 2)
}

/// The free orbit: two vertices swapped by the action, no basepoint.
pub fn c2() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    b.vertex("a0");
    b.vertex("a1");
    let space = b.build().expect("C2 is valid");
    C2SimplicialSet::new(space, vec![vec![1, 0]], None).expect("the swap is simplicial")
}

/// The six-vertex triangulation of the real projective plane (antipodal
/// quotient of the icosahedron); trivial action, pointed at vertex 1.
pub fn rp2() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let verts: Vec<_> = (1..=6).map(|i| b.vertex(&i.to_string())).collect();
    let mut edge_ref = std::collections::BTreeMap::new();
    for i in 1..=6usize {
        for j in (i + 1)..=6 {
            let r = b.simplex(
                1,
                &format!("{i}{j}"),
                vec![
                    DegSimplex::nondegenerate(verts[j - 1]),
                    DegSimplex::nondegenerate(verts[i - 1]),
                ],
            );
            edge_ref.insert((i, j), r);
        }
    }
    let triangles: [(usize, usize, usize); 10] = [
        (1, 2, 4),
        (1, 2, 6),
        (1, 3, 4),
        (1, 3, 5),
        (1, 5, 6),
        (2, 3, 5),
        (2, 3, 6),
        (2, 4, 5),
        (3, 4, 6),
        (4, 5, 6),
    ];
    for (i, j, k) in triangles {
        b.simplex(
            2,
            &format!("{i}{j}{k}"),
            vec![
                DegSimplex::nondegenerate(edge_ref[&(j, k)]),
                DegSimplex::nondegenerate(edge_ref[&(i, k)]),
                DegSimplex::nondegenerate(edge_ref[&(i, j)]),
            ],
        );
    }
    C2SimplicialSet::trivial(b.build().expect("RP2 is valid"), Some(0))
}

/// Wedge of two circles on a single vertex; trivial action.
pub fn circle_wedge2() -> C2SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let v = b.vertex("v");
    let faces = vec![DegSimplex::nondegenerate(v), DegSimplex::nondegenerate(v)];
    b.simplex(1, "e", faces.clone());
    b.simplex(1, "f", faces);
    C2SimplicialSet::trivial(b.build().expect("circle_wedge2 is valid"), Some(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_dispatch_and_unknown() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).is_ok(), "{name}");
        }
        assert!(matches!(
            builtin("S3"),
            Err(SsetError::UnknownSpace(n)) if n == "S3"
        ));
    }

    #[test]
    fn sigma_sphere_shape() {
        let x = s_sigma();
        assert_eq!(x.space.count(0), 2);
        assert_eq!(x.space.count(1), 2);
        assert_eq!(x.fixed_count(0), 2);
        assert_eq!(x.fixed_count(1), 0);
    }

    #[test]
    fn free_orbit_has_no_fixed_points() {
        let x = c2();
        assert_eq!(x.fixed_count(0), 0);
        assert!(x.basepoint().is_none());
    }

    #[test]
    fn projective_plane_counts() {
        let x = rp2();
        assert_eq!(
            (x.space.count(0), x.space.count(1), x.space.count(2)),
            (6, 15, 10)
        );
        assert_eq!(x.space.euler_characteristic(), 1);
    }
}
