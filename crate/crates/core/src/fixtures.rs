//! The two example graphs used throughout the tests and the demo.
//!
//! `triangle`: three vertices, `l1:(v1,v2) l2:(v1,v3) l3:(v2,v3) l4:(v2,v3)`.
//! `kite`: four vertices, `l1:(v1,v2) l2:(v2,v3) l3:(v1,v3) l4:(v1,v3)
//! l5:(v1,v4) l6:(v3,v4)`.

use crate::graph::Multigraph;
use crate::io::parse_graph_str;

pub const TRIANGLE_JSON: &str = include_str!("../fixtures/triangle.json");
pub const KITE_JSON: &str = include_str!("../fixtures/kite.json");

pub fn triangle() -> Multigraph {
    parse_graph_str(TRIANGLE_JSON).expect("triangle fixture is valid")
}

pub fn kite() -> Multigraph {
    parse_graph_str(KITE_JSON).expect("kite fixture is valid")
}
