use crate::graphs::{canonical_graph6, construct_family, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use std::collections::HashMap;
use std::sync::OnceLock;

/// `t_inj = inj / |V(G)|`.
pub fn density(inj: u128, order: usize) -> BigRational {
    BigRational::new(BigInt::from(inj), BigInt::from(order))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializing a Value cannot fail");
    s.push('\n');
    s
}

const NAMED: &[(&str, &str)] = &[
    ("K4", "K4"),
    ("K5", "K5"),
    ("K6", "K6"),
    ("K7", "K7"),
    ("K3,3", "K3,3"),
    ("K4,4", "K4,4"),
    ("K3,3,3", "K3,3,3"),
    ("Petersen", "petersen"),
    ("octahedron", "K2,2,2"),
    ("prism", "prod(K2,K3)"),
    ("cube", "prod(K2,prod(K2,K2))"),
    ("Wagner", "circ(8;1,4)"),
    ("rook 3x3", "prod(K3,K3)"),
];

/// A common name for a few well-known connected graphs.
pub fn known_name(g: &Graph) -> Option<&'static str> {
    static TABLE: OnceLock<HashMap<String, &'static str>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        NAMED
            .iter()
            .map(|(name, expr)| {
                let g = construct_family(&expr.parse().expect("valid family")).expect("constructible");
                (canonical_graph6(&g).expect("small"), *name)
            })
            .collect()
    });
    canonical_graph6(g).ok().and_then(|c| table.get(&c).copied())
}
