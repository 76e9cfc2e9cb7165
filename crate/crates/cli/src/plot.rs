//! Self-contained SVG scatter plot of a pole set with its reference circle.

use grover_zeta::spectra::PoleSet;
use grover_zeta::ZetaKind;

const VIEW: f64 = 1.3;

/// Renders the poles as dots over the designated circle and the axes.
/// Every dot carries `data-re`, `data-im`, and `data-mult` attributes so the
/// plotted set is machine-readable, and a leading comment records the circle
/// parameters.
pub fn pole_plot_svg(poles: &PoleSet) -> String {
    let circle = poles.circle.expect("plotting requires a regular graph");
    let kind = match poles.kind {
        ZetaKind::Ihara => "ihara",
        ZetaKind::Modified => "modified",
    };
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" \
         viewBox=\"{} {} {} {}\">\n",
        -VIEW,
        -VIEW,
        2.0 * VIEW,
        2.0 * VIEW
    ));
    svg.push_str(&format!(
        "<!-- pole-plot kind={kind} k={} circle_center={},0 circle_radius={} tolerance={} -->\n",
        poles.regular_degree.unwrap_or(0),
        circle.center,
        circle.radius,
        poles.tolerance
    ));
    svg.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        -VIEW,
        -VIEW,
        2.0 * VIEW,
        2.0 * VIEW
    ));
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"#999\" stroke-width=\"0.004\"/>\n",
        -VIEW, VIEW
    ));
    svg.push_str(&format!(
        "<line x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\" stroke=\"#999\" stroke-width=\"0.004\"/>\n",
        -VIEW, VIEW
    ));
    // unit scale ticks
    for t in [-1.0f64, 1.0] {
        svg.push_str(&format!(
            "<line x1=\"{t}\" y1=\"-0.02\" x2=\"{t}\" y2=\"0.02\" stroke=\"#999\" stroke-width=\"0.004\"/>\n"
        ));
        svg.push_str(&format!(
            "<line x1=\"-0.02\" y1=\"{t}\" x2=\"0.02\" y2=\"{t}\" stroke=\"#999\" stroke-width=\"0.004\"/>\n"
        ));
    }
    svg.push_str(&format!(
        "<circle cx=\"{}\" cy=\"0\" r=\"{}\" fill=\"none\" stroke=\"#4682b4\" stroke-width=\"0.008\"/>\n",
        circle.center, circle.radius
    ));
    for p in &poles.poles {
        let class = if p.trivial { "pole trivial" } else { "pole" };
        let fill = if p.trivial { "#e08020" } else { "#c03030" };
        // svg y axis points down
        svg.push_str(&format!(
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"0.022\" fill=\"{fill}\" \
             data-re=\"{}\" data-im=\"{}\" data-mult=\"{}\"/>\n",
            p.re, -p.im, p.re, p.im, p.multiplicity
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
