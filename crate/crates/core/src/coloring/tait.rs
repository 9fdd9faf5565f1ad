use super::{ColoringError, EdgeColoring};
use crate::embedding::Embedding;

/// Edge `uv` gets `vc[u] XOR vc[v]`, read in the Klein four-group and shifted to `0..3`.
pub fn tait_lift(e: &Embedding, vc: &[u8]) -> Result<EdgeColoring, ColoringError> {
    assert_eq!(vc.len(), e.vertex_count(), "one color per vertex");
    let colors = e
        .edges()
        .iter()
        .map(|&[u, v]| {
            let x = vc[u] ^ vc[v];
            if vc[u] > 3 || vc[v] > 3 || x == 0 {
                Err(ColoringError::ImproperVertexColoring(u, v))
            } else {
                Ok(x - 1)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    EdgeColoring::new(colors)
}
