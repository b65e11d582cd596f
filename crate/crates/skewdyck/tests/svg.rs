use skewdyck::svg::{render_svg, ColorMap, SvgOptions};
use skewdyck_core::path::{enumerate, parse_word};
use skewdyck_core::{SkewPath, Step};

fn step_lines(svg: &str) -> Vec<&str> {
    svg.lines()
        .filter(|l| l.contains("class=\"step\""))
        .collect()
}

#[test]
fn one_segment_per_step_and_red_only_on_red_steps() {
    let opts = SvgOptions::default();
    for p in enumerate(8, None, false).unwrap() {
        let svg = render_svg(&p, &opts);
        let lines = step_lines(&svg);
        assert_eq!(lines.len(), p.len());
        for (line, step) in lines.iter().zip(p.steps()) {
            assert_eq!(
                line.contains("stroke=\"red\""),
                *step == Step::DownRed,
                "{p}"
            );
        }
    }
}

#[test]
fn custom_colors_apply() {
    let opts = SvgOptions {
        unit_px: 5,
        colors: ColorMap {
            up: "#111".into(),
            down_black: "#222".into(),
            down_red: "#f00".into(),
        },
    };
    let p = SkewPath::new(parse_word("UUDR").unwrap()).unwrap();
    let svg = render_svg(&p, &opts);
    let lines = step_lines(&svg);
    assert!(lines[0].contains("#111") && lines[2].contains("#222") && lines[3].contains("#f00"));
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
}
