use serde::Serialize;

use super::{monochromatic_triangles, ColoredGraph};
use crate::catalog::EdgeColor;

/// Exhaustive check that every 2-coloring of K6 has a monochromatic
/// triangle, together with a triangle-free coloring of K5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyCertificate {
    pub k6_colorings_checked: u64,
    /// Colorings found without any monochromatic triangle (0 certifies R(3,3) ≤ 6).
    pub k6_colorings_without_mono_triangle: u64,
    pub k6_all_contain_mono_triangle: bool,
    pub k5_witness: K5Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K5Witness {
    pub red: Vec<[usize; 2]>,
    pub green: Vec<[usize; 2]>,
    pub mono_triangles: usize,
    pub verified: bool,
}

const K6_EDGES: usize = 15;

fn k6_edge_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * 6 - i * (i + 1) / 2 + (j - i - 1)
}

/// Edge bitmask of each of the 20 triangles of K6.
fn k6_triangle_masks() -> Vec<u16> {
    let mut out = Vec::with_capacity(20);
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                out.push(
                    (1u16 << k6_edge_index(i, j)) | (1 << k6_edge_index(i, k)) | (1 << k6_edge_index(j, k)),
                );
            }
        }
    }
    out
}

/// Pentagon coloring of K5: the 5-cycle red, the pentagram diagonals green.
pub fn k5_pentagon() -> ColoredGraph {
    let names = (0..5).map(|i| format!("v{i}")).collect();
    ColoredGraph::from_coloring(names, |i, j| {
        let d = (j + 5 - i) % 5;
        if d == 1 || d == 4 {
            EdgeColor::Red
        } else {
            EdgeColor::Green
        }
    })
    .expect("five distinct vertices")
}

pub fn verify_r33() -> RamseyCertificate {
    let triangles = k6_triangle_masks();
    let full: u32 = 1 << K6_EDGES;
    // bit set = red edge
    let without = (0..full)
        .filter(|&coloring| {
            let red = coloring as u16;
            !triangles.iter().any(|&t| red & t == t || red & t == 0)
        })
        .count() as u64;

    let k5 = k5_pentagon();
    let tri = monochromatic_triangles(&k5);
    let mono = tri.red.len() + tri.green.len();
    let (mut red, mut green) = (Vec::new(), Vec::new());
    for e in k5.edges() {
        match e.color {
            EdgeColor::Red => red.push([e.a, e.b]),
            EdgeColor::Green => green.push([e.a, e.b]),
        }
    }
    RamseyCertificate {
        k6_colorings_checked: u64::from(full),
        k6_colorings_without_mono_triangle: without,
        k6_all_contain_mono_triangle: without == 0,
        k5_witness: K5Witness {
            red,
            green,
            mono_triangles: mono,
            verified: mono == 0,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate() {
        let c = verify_r33();
        assert_eq!(c.k6_colorings_checked, 32768);
        assert_eq!(c.k6_colorings_without_mono_triangle, 0);
        assert!(c.k6_all_contain_mono_triangle);
        assert!(c.k5_witness.verified);
        assert_eq!((c.k5_witness.red.len(), c.k5_witness.green.len()), (5, 5));
    }

    #[test]
    fn edge_index_is_a_bijection() {
        let mut seen = [false; K6_EDGES];
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(!std::mem::replace(&mut seen[k6_edge_index(i, j)], true));
            }
        }
        assert!(seen.iter().all(|s| *s));
    }

    #[test]
    fn sweep_agrees_with_graph_scan_on_a_sample() {
        let triangles = k6_triangle_masks();
        for coloring in (0u32..1 << 15).step_by(97) {
            let red = coloring as u16;
            let names = (0..6).map(|i| format!("v{i}")).collect();
            let g = ColoredGraph::from_coloring(names, |i, j| {
                if red >> k6_edge_index(i, j) & 1 == 1 {
                    EdgeColor::Red
                } else {
                    EdgeColor::Green
                }
            })
            .unwrap();
            let t = monochromatic_triangles(&g);
            let by_mask = triangles.iter().filter(|&&m| red & m == m || red & m == 0).count();
            assert_eq!(t.red.len() + t.green.len(), by_mask);
        }
    }
}
