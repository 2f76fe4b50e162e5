//! Rederives the table of realizable third-move triangles from straight-line pictures.

use std::collections::BTreeSet;

use welded::moves::triangle_realizable;
use welded::Sign;

type Line = ((f64, f64), (f64, f64)); // point, direction

fn intersect(a: Line, b: Line) -> (f64, f64) {
    let ((px, py), (dx, dy)) = a;
    let ((qx, qy), (ex, ey)) = b;
    let det = dx * ey - dy * ex;
    let t = ((qx - px) * ey - (qy - py) * ex) / det;
    (px + t * dx, py + t * dy)
}

fn param(l: Line, p: (f64, f64)) -> f64 {
    (p.0 - l.0 .0) * l.1 .0 + (p.1 - l.0 .1) * l.1 .1
}

/// Sign of the crossing of `over` above `under`; the opposite convention flips all three signs,
/// which leaves the table unchanged.
fn sign(over: Line, under: Line) -> Sign {
    let cross = over.1 .0 * under.1 .1 - over.1 .1 * under.1 .0;
    if cross > 0.0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[test]
fn realizable_triangles_match_line_arrangements() {
    let angles: Vec<f64> = (0..12).map(|k| k as f64 * std::f64::consts::PI / 6.0 + 0.1).collect();
    let offsets = [-1.3, -0.4, 0.7, 1.9];
    let mut seen = BTreeSet::new();
    for &a in &angles {
        for &b in &angles {
            for &c in &angles {
                for &(ot, om, ob) in &[(offsets[0], offsets[1], offsets[2]), (offsets[3], offsets[0], offsets[1])] {
                    let line = |ang: f64, off: f64| -> Line {
                        let d = (ang.cos(), ang.sin());
                        ((-d.1 * off, d.0 * off), d)
                    };
                    let (t, m, bo) = (line(a, ot), line(b, om), line(c, ob));
                    let dets = [(t, m), (t, bo), (m, bo)].map(|(x, y)| (x.1 .0 * y.1 .1 - x.1 .1 * y.1 .0).abs());
                    if dets.iter().any(|&d| d < 1e-6) {
                        continue;
                    }
                    let (x_tm, x_tb, x_mb) = (intersect(t, m), intersect(t, bo), intersect(m, bo));
                    let top_forward = param(t, x_tm) < param(t, x_tb);
                    let middle_forward = param(m, x_tm) < param(m, x_mb);
                    let bottom_forward = param(bo, x_tb) < param(bo, x_mb);
                    let signs = [sign(t, m), sign(t, bo), sign(m, bo)];
                    seen.insert((top_forward, middle_forward, bottom_forward, signs.map(|s| s == Sign::Plus)));
                }
            }
        }
    }
    let mut table = BTreeSet::new();
    for bits in 0..64u32 {
        let f = |k: u32| bits & (1 << k) != 0;
        let signs = [3, 4, 5].map(|k| if f(k) { Sign::Plus } else { Sign::Minus });
        if triangle_realizable(f(0), f(1), f(2), signs) {
            table.insert((f(0), f(1), f(2), [f(3), f(4), f(5)]));
        }
    }
    assert_eq!(seen, table);
    assert_eq!(table.len(), 16);
}
