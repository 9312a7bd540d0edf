use super::embedding::EmbeddedGraph;
use crate::error::{Error, Result};

/// A face as the cyclic sequence of flags `(dart, local orientation)`
/// traversed along its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub flags: Vec<(usize, i8)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn darts(&self) -> impl Iterator<Item = usize> + '_ {
        self.flags.iter().map(|&(d, _)| d)
    }

    /// Boundary walk as the tails of its darts.
    pub fn vertices(&self, emb: &EmbeddedGraph) -> Vec<usize> {
        self.darts().map(|d| emb.tail(d)).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts().map(|d| d / 2)
    }
}

/// Faces together with a lookup from flags to face indices.
#[derive(Clone, Debug)]
pub struct FaceTable {
    pub faces: Vec<Face>,
    /// `face_of[2 * d + (s < 0)]`.
    face_of: Vec<usize>,
}

impl FaceTable {
    pub fn face_of(&self, d: usize, s: i8) -> usize {
        self.face_of[2 * d + usize::from(s < 0)]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

fn flag_index(d: usize, s: i8) -> usize {
    2 * d + usize::from(s < 0)
}

pub fn face_table(emb: &EmbeddedGraph) -> FaceTable {
    let nd = emb.num_darts();
    let mut face_of = vec![usize::MAX; 2 * nd];
    let mut faces = Vec::new();
    for d in 0..nd {
        for s in [1i8, -1] {
            if face_of[flag_index(d, s)] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut flags = Vec::new();
            let (mut cd, mut cs) = (d, s);
            loop {
                flags.push((cd, cs));
                face_of[flag_index(cd, cs)] = id;
                let (rd, rs) = emb.reverse_flag(cd, cs);
                face_of[flag_index(rd, rs)] = id;
                (cd, cs) = emb.next_flag(cd, cs);
                if (cd, cs) == (d, s) {
                    break;
                }
            }
            faces.push(Face { flags });
        }
    }
    FaceTable { faces, face_of }
}

/// The facial walks of a connected embedded graph.
pub fn trace_faces(emb: &EmbeddedGraph) -> Result<Vec<Face>> {
    if !emb.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(face_table(emb).faces)
}

/// `eg = 2 - |V| + |E| - |F|`.
pub fn embedding_euler_genus(emb: &EmbeddedGraph) -> Result<usize> {
    if emb.size() == 0 {
        return if emb.order() == 1 { Ok(0) } else { Err(Error::Disconnected) };
    }
    let f = trace_faces(emb)?.len();
    let eg = 2 + emb.size() as i64 - emb.order() as i64 - f as i64;
    debug_assert!(eg >= 0);
    Ok(eg as usize)
}
