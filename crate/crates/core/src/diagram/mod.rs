//! Text and picture exports.

mod conway;
mod svg;

pub use conway::{conway_text, ConwayNotation};
pub use svg::{render_svg, write_svg, SvgLayout};
