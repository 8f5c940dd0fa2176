//! SVG rendering: the polygon shaded over a dot grid of integer points,
//! auto-fit with a one-unit lattice margin.

use latgeom::Polygon;

const UNIT: f64 = 48.0;

pub fn polygon_svg(k: &Polygon) -> String {
    let (x0, y0, x1, y1) = k.bounding_box();
    let (x0, y0, x1, y1) = (
        x0.to_f64().floor() - 1.0,
        y0.to_f64().floor() - 1.0,
        x1.to_f64().ceil() + 1.0,
        y1.to_f64().ceil() + 1.0,
    );
    let width = (x1 - x0) * UNIT;
    let height = (y1 - y0) * UNIT;
    let px = |x: f64| (x - x0) * UNIT;
    let py = |y: f64| (y1 - y) * UNIT; // flip so the y axis points up

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.2} {height:.2}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let mut path = String::new();
    for (i, v) in k.vertices().iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        path.push_str(&format!(
            "{cmd} {:.3} {:.3} ",
            px(v.x.to_f64()),
            py(v.y.to_f64())
        ));
    }
    path.push('Z');
    svg.push_str(&format!(
        "  <path d=\"{path}\" fill=\"#b0c4de\" fill-opacity=\"0.8\" \
         stroke=\"#31435f\" stroke-width=\"2\"/>\n"
    ));

    let (gx0, gy0, gx1, gy1) = (
        x0.ceil() as i64,
        y0.ceil() as i64,
        x1.floor() as i64,
        y1.floor() as i64,
    );
    for gx in gx0..=gx1 {
        for gy in gy0..=gy1 {
            svg.push_str(&format!(
                "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"3\" fill=\"#222\"/>\n",
                px(gx as f64),
                py(gy as f64)
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}
