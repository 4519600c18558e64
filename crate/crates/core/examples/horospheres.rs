//! Pullback metrics of the horosphere embedding and the upper half-space chart,
//! degenerating from Euclidean to Galilean to Minkowski as `t` crosses 0.

use halfpipe::catalog::{pullback_metric_at, EmbeddingKind, HorosphereEmbedding};
use halfpipe::numfield::{FieldScalar, TimeParam};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = [FieldScalar::from_ratio(1, 2), FieldScalar::from_ratio(-1, 3), FieldScalar::from_int(2), FieldScalar::from_ratio(3, 4)];
    for expr in ["1/2", "0", "-1/2"] {
        let t: TimeParam = expr.parse()?;
        for kind in [EmbeddingKind::Eta, EmbeddingKind::Zeta] {
            let emb = HorosphereEmbedding::new(kind, t.clone(), 4);
            let point = &y[..emb.chart_dim()];
            let g = pullback_metric_at(&emb, point)?;
            let diag: Vec<String> = (0..g.rows()).map(|i| g.get(i, i).to_decimal(6)).collect();
            println!("t = {expr:>4} {kind:?}: diag [{}], matches closed form {}", diag.join(", "), g == emb.expected_pullback(point)?);
        }
    }
    Ok(())
}
