//! End-to-end runs of the `sumrank` binary.

use std::process::{Command, Output};

fn sumrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_one_rows() {
    let o = sumrank(&["table", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(published)"));
    let row = |d: &str| {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(d))
            .unwrap()
            .split_whitespace()
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    assert_eq!(row("12")[1..4], ["2*8", "2*4", "2*19"]);
    assert_eq!(row("15")[1..4], ["2*2", "none", "2*16"]);
}

#[test]
fn table_two_csv() {
    let o = sumrank(&["table", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d_sr,dimension,comparison,singleton");
    assert_eq!(lines.len(), 1 + 27);
    assert!(lines.contains(&"9,92,88,108"));
    assert_eq!(*lines.last().unwrap(), "30,8,26,66");
    // byte-identical across runs
    assert_eq!(stdout(&sumrank(&["table", "2", "--format", "csv"])), text);
}

#[test]
fn figure_curves() {
    let labels = |fig: &str| {
        let text = stdout(&sumrank(&["bounds", "--figure", fig]));
        let mut ids: Vec<String> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect();
        ids.dedup();
        ids
    };
    assert_eq!(labels("1"), ["gv_asymptotic", "concat_line"]);
    assert_eq!(
        labels("6"),
        ["gv_asymptotic", "tvz_like_sr", "concat_line[t=1]", "concat_line[t=2]"]
    );
}

#[test]
fn bound_rows_and_clamping() {
    let o = sumrank(&["bounds", "--bound", "tvz_like_sr", "--p", "9", "--m", "2", "--grid", "0.1:0.2:0.1", "--raw"]);
    assert_eq!(stdout(&o), "delta,rate,bound_id\n0.1,0.15,tvz_like_sr\n0.2,0.05,tvz_like_sr\n");
    let o = sumrank(&["bounds", "--bound", "tvz_like_sr", "--p", "9", "--m", "2", "--grid", "0.3:0.3:0.1"]);
    assert_eq!(stdout(&o), "delta,rate,bound_id\n0.3,0,tvz_like_sr\n");
    let o = sumrank(&[
        "bounds", "--bound", "concat_line", "--p", "2", "--m", "2", "--t", "3", "--r", "4", "--d", "2", "--grid",
        "1/10:1/10:1/10",
    ]);
    assert_eq!(stdout(&o), "delta,rate,bound_id\n0.1,0.422222222222,concat_line\n");
    let o = sumrank(&["bounds", "--bound", "gv_exact", "--q", "2", "--n", "2", "--m", "2", "--t", "5"]);
    assert_eq!(o.status.code(), Some(0));
    // d = 3..=9; d = N puts delta = 1 outside the default grid
    assert_eq!(stdout(&o).lines().count(), 1 + 7);
}

#[test]
fn bad_bound_parameters_are_usage_errors() {
    for args in [
        &["bounds", "--bound", "tvz_like_sr", "--p", "8", "--m", "2"][..],
        &["bounds", "--bound", "concat_line", "--preset", "d2", "--p", "2", "--m", "1", "--t", "2"],
        &["bounds", "--bound", "nope"],
        &["bounds", "--figure", "1", "--grid", "0:1:0.1"],
        &["bounds", "--figure", "12"],
    ] {
        assert_eq!(sumrank(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn verify_examples() {
    for (desc, dim, designed) in [
        ("sumzero:2:2:3", 8, 2),
        ("gab:2:3:1", 6, 2),
        ("concat:rs:2^4:3:2:gab:2:2:1", 8, 2),
    ] {
        let o = sumrank(&["verify", desc, "--threads", "2"]);
        assert_eq!(o.status.code(), Some(0), "{desc}");
        let text = stdout(&o);
        assert!(text.contains(&format!("dimension: {dim}\n")), "{text}");
        assert!(text.contains(&format!("designed distance: {designed}\n")), "{text}");
        assert!(text.ends_with("PASS\n"));
    }
    assert_eq!(sumrank(&["verify", "explicit:2:15:2:1:8"]).status.code(), Some(2));
    assert_eq!(sumrank(&["verify", "rs:2^4:20:3"]).status.code(), Some(1));
}

#[test]
fn encode_is_linear() {
    let enc = |msg: &str| stdout(&sumrank(&["encode", "concat:rs:2^2:3:2:sumzero:2:1:3", msg]));
    let zero = enc("0,0,0,0");
    assert!(zero.lines().all(|l| l.split(',').all(|e| e == "0")));
    assert_eq!(zero.lines().count(), 9);

    let add = |a: &str, b: &str| -> String {
        a.lines()
            .zip(b.lines())
            .map(|(x, y)| {
                x.split(',')
                    .zip(y.split(','))
                    .map(|(u, v)| ((u.parse::<u8>().unwrap() + v.parse::<u8>().unwrap()) % 2).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .map(|l| l + "\n")
            .collect()
    };
    assert_eq!(add(&enc("1,0,1,0"), &enc("0,1,1,1")), enc("1,1,0,1"));
    assert_eq!(sumrank(&["encode", "sumzero:2:2:3", "1,0"]).status.code(), Some(1));
}

#[test]
fn encode_unit_message_is_first_generator_row() {
    use sumrank::codes::descriptor::CodeDescriptor;
    use sumrank::metrics::LinearCode;
    use sumrank::Mat;

    let desc = "concat:rs:2^2:3:2:sumzero:2:1:3";
    let code = desc.parse::<CodeDescriptor>().unwrap().build().unwrap();
    let row = code.generator().row(0).to_vec();
    let expected: String = row
        .chunks(1)
        .map(|b| Mat::new(code.field(), 1, 1, b.to_vec()).unwrap().to_text() + "\n")
        .collect();
    assert_eq!(stdout(&sumrank(&["encode", desc, "1,0,0,0"])), expected);

    let o = sumrank(&["encode", "rs:2^2:3:2", "(1,0),(0,0)"]);
    assert_eq!(stdout(&o), "(1,0),(1,0),(1,0)\n");
}
