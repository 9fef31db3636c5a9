//! Geometric model of the 4×4×4 cube.
//!
//! The 56 surface pieces sit at integer points of `{-3, -1, 1, 3}³` with at
//! least one coordinate equal to `±3`; each `±3` coordinate carries a sticker
//! whose outward normal names its face. A slice move rotates every piece whose
//! coordinate along the move axis equals the slab value, and the wreath
//! coordinates are read off from where each sticker lands.
//!
//! Indexing:
//! - edges: 12 physical edges, each holding two wings; wing `2k` has offset −1
//!   along the edge axis and `2k + 1` has offset +1, so `{2k, 2k+1}` share
//!   their colors in the solved state;
//! - centers: face `f` (order +x, −x, +y, −y, +z, −z) owns pieces `4f..4f+4`;
//! - corners: 0–7.
//!
//! Markings:
//! - edge: the sticker `n` with `(n × m)·e > 0`, where `m` is the other sticker
//!   normal and `e` points from the edge midpoint towards the wing. Rotations
//!   preserve this, so quarter turns never flip an edge wing, and the two wings
//!   of a pair have their marks on different faces;
//! - corner: the x-face sticker, followed by the stickers reached by the
//!   positive third-turn about the axis pointing from the corner to the
//!   cube center.

use std::collections::HashMap;

use crate::perm::Perm;
use crate::wreath::WreathElem;

use super::CubeElem;

pub type Vec3 = [i32; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    Edge,
    Corner,
    Center,
}

#[derive(Clone, Debug)]
pub struct Piece {
    pub position: Vec3,
    /// Outward sticker normals; index 0 is the marked sticker, the rest follow
    /// the fibre's cyclic order.
    pub stickers: Vec<Vec3>,
}

#[derive(Clone, Debug)]
pub struct Geometry {
    pub edges: Vec<Piece>,
    pub corners: Vec<Piece>,
    pub centers: Vec<Piece>,
    lookup: HashMap<Vec3, (PieceKind, usize)>,
}

fn unit(axis: usize, sign: i32) -> Vec3 {
    let mut v = [0; 3];
    v[axis] = sign;
    v
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: Vec3, b: Vec3) -> i32 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Colour of a sticker in the solved state: index of the face its normal points to.
pub fn face_of(normal: Vec3) -> usize {
    let axis = normal.iter().position(|&c| c != 0).expect("zero normal");
    axis * 2 + usize::from(normal[axis] < 0)
}

/// Quarter turn by +90° about the positive `axis` (right-hand rule).
fn quarter_turn(v: Vec3, axis: usize) -> Vec3 {
    let [x, y, z] = v;
    match axis {
        0 => [x, -z, y],
        1 => [z, y, -x],
        2 => [-y, x, z],
        _ => unreachable!("axis out of range"),
    }
}

/// Clockwise quarter turn as seen from outside the slab: from the positive
/// side for positive slab coordinates, from the negative side otherwise.
pub fn slab_rotation(v: Vec3, axis: usize, coord: i32) -> Vec3 {
    let turns = if coord > 0 { 3 } else { 1 };
    (0..turns).fold(v, |p, _| quarter_turn(p, axis))
}

impl Geometry {
    pub fn new() -> Geometry {
        let signs = [1, -1];

        let mut corners = Vec::new();
        for &sx in &signs {
            for &sy in &signs {
                for &sz in &signs {
                    let position = [3 * sx, 3 * sy, 3 * sz];
                    let towards_center = [-sx, -sy, -sz];
                    let first = unit(0, sx);
                    let (ny, nz) = (unit(1, sy), unit(2, sz));
                    let second = if dot(cross(first, ny), towards_center) > 0 { ny } else { nz };
                    let third = if second == ny { nz } else { ny };
                    corners.push(Piece { position, stickers: vec![first, second, third] });
                }
            }
        }

        let mut edges = Vec::new();
        for free in 0..3 {
            let (a, b) = match free {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            for &sa in &signs {
                for &sb in &signs {
                    for sc in [-1, 1] {
                        let mut position = [0; 3];
                        position[a] = 3 * sa;
                        position[b] = 3 * sb;
                        position[free] = sc;
                        let (na, nb) = (unit(a, sa), unit(b, sb));
                        let offset = unit(free, sc);
                        let stickers = if dot(cross(na, nb), offset) > 0 {
                            vec![na, nb]
                        } else {
                            vec![nb, na]
                        };
                        edges.push(Piece { position, stickers });
                    }
                }
            }
        }

        let mut centers = Vec::new();
        for axis in 0..3 {
            for &s in &signs {
                let others: Vec<usize> = (0..3).filter(|&i| i != axis).collect();
                for u in [-1, 1] {
                    for v in [-1, 1] {
                        let mut position = [0; 3];
                        position[axis] = 3 * s;
                        position[others[0]] = u;
                        position[others[1]] = v;
                        centers.push(Piece { position, stickers: vec![unit(axis, s)] });
                    }
                }
            }
        }

        let mut lookup = HashMap::new();
        for (kind, list) in [
            (PieceKind::Edge, &edges),
            (PieceKind::Corner, &corners),
            (PieceKind::Center, &centers),
        ] {
            for (i, p) in list.iter().enumerate() {
                lookup.insert(p.position, (kind, i));
            }
        }

        Geometry { edges, corners, centers, lookup }
    }

    pub fn piece_at(&self, position: Vec3) -> Option<(PieceKind, usize)> {
        self.lookup.get(&position).copied()
    }

    /// Checks the index map and markings against the solved coloring.
    pub fn validate(&self) -> Result<(), String> {
        if (self.edges.len(), self.corners.len(), self.centers.len()) != (24, 8, 24) {
            return Err("wrong piece counts".into());
        }
        if self.lookup.len() != 56 {
            return Err("piece positions are not distinct".into());
        }
        for k in 0..12 {
            let (p, q) = (&self.edges[2 * k], &self.edges[2 * k + 1]);
            let mut fp: Vec<usize> = p.stickers.iter().map(|&n| face_of(n)).collect();
            let mut fq: Vec<usize> = q.stickers.iter().map(|&n| face_of(n)).collect();
            fp.sort_unstable();
            fq.sort_unstable();
            if fp != fq {
                return Err(format!("edge pair {k} has different colors"));
            }
            if face_of(p.stickers[0]) == face_of(q.stickers[0]) {
                return Err(format!("edge pair {k}: marked stickers share a color"));
            }
        }
        for f in 0..6 {
            if (0..4).any(|j| face_of(self.centers[4 * f + j].stickers[0]) != f) {
                return Err(format!("center block {f} is not one color"));
            }
        }
        for (i, c) in self.corners.iter().enumerate() {
            let towards_center = c.position.map(|x| -x.signum());
            for j in 0..3 {
                let (a, b) = (c.stickers[j], c.stickers[(j + 1) % 3]);
                if dot(cross(a, b), towards_center) <= 0 {
                    return Err(format!("corner {i} stickers are not in cyclic order"));
                }
            }
        }
        Ok(())
    }

    fn slab_wreath(&self, kind: PieceKind, axis: usize, coord: i32) -> (Vec<u8>, Perm) {
        let pieces = match kind {
            PieceKind::Edge => &self.edges,
            PieceKind::Corner => &self.corners,
            PieceKind::Center => &self.centers,
        };
        let n = pieces.len();
        let mut images: Vec<usize> = (0..n).collect();
        let mut twists = vec![0u8; n];
        for (i, piece) in pieces.iter().enumerate() {
            if piece.position[axis] != coord {
                continue;
            }
            let (k2, j) = self
                .piece_at(slab_rotation(piece.position, axis, coord))
                .expect("rotation leaves the surface");
            assert_eq!(k2, kind, "rotation changed the piece kind");
            images[i] = j;
            let k = piece.stickers.len();
            let target = &pieces[j].stickers;
            let mut rho = None;
            for (b, &n) in piece.stickers.iter().enumerate() {
                let moved = slab_rotation(n, axis, coord);
                let b2 = target.iter().position(|&t| t == moved).expect("sticker lost");
                let r = ((b2 + k - b) % k) as u8;
                assert!(rho.is_none_or(|x| x == r), "rotation does not respect the fibre order");
                rho = Some(r);
            }
            twists[j] = rho.unwrap_or(0);
        }
        (twists, Perm::from_images(images).expect("slab rotation is a bijection"))
    }

    /// Quarter turn of the slab `{p : p[axis] == coord}` in wreath coordinates.
    pub fn slab_move(&self, axis: usize, coord: i32) -> CubeElem {
        let (et, ep) = self.slab_wreath(PieceKind::Edge, axis, coord);
        let (ct, cp) = self.slab_wreath(PieceKind::Corner, axis, coord);
        let (_, zp) = self.slab_wreath(PieceKind::Center, axis, coord);
        CubeElem::from_parts(
            WreathElem::new(2, et, ep).expect("edge twists"),
            WreathElem::new(3, ct, cp).expect("corner twists"),
            zp,
        )
        .expect("full-size shape")
    }
}

impl Default for Geometry {
    fn default() -> Self {
        Geometry::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_validates() {
        Geometry::new().validate().unwrap();
    }

    #[test]
    fn rotation_has_order_four() {
        for axis in 0..3 {
            for coord in [3, 1, -1, -3] {
                let v = [3, 1, -3];
                let r = (0..4).fold(v, |p, _| slab_rotation(p, axis, coord));
                assert_eq!(r, v);
            }
        }
    }

    #[test]
    fn up_turn_sends_front_to_left() {
        assert_eq!(slab_rotation([0, 3, 3], 1, 3), [-3, 3, 0]);
    }

    #[test]
    fn axis_order_marking_is_not_move_invariant() {
        // Marking each wing on the face of its lowest axis instead: count the
        // quarter-turn images that land off the mark at their destination.
        let g = Geometry::new();
        let lowest_axis = |p: &Piece| *p.stickers.iter().min_by_key(|n| face_of(**n) / 2).unwrap();
        let mut flips = 0;
        for axis in 0..3 {
            for coord in [3, 1, -1, -3] {
                for p in g.edges.iter().filter(|p| p.position[axis] == coord) {
                    let (_, j) = g.piece_at(slab_rotation(p.position, axis, coord)).unwrap();
                    if slab_rotation(lowest_axis(p), axis, coord) != lowest_axis(&g.edges[j]) {
                        flips += 1;
                    }
                }
            }
        }
        assert!(flips > 0);
    }

    #[test]
    fn moves_never_twist_edges() {
        let g = Geometry::new();
        for axis in 0..3 {
            for coord in [3, 1, -1, -3] {
                let m = g.slab_move(axis, coord);
                assert!(m.edge().twists().iter().all(|&t| t == 0));
            }
        }
    }
}
