// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! End-to-end behaviour of the `bbp-mcis` command line.

use std::fs;
use std::path::{Path, PathBuf};

use bbp_mcis::format::numeric_names;
use bbp_mcis::{parse_graph, parse_molfile, write_graph, CliError, ResultRecord};
use bbp_mcis_core::generator::{gen_outerplanar, GenParams};
use bbp_mcis_core::{decompose, is_outerplanar, LabelInterner, LabeledGraph};
use proptest::prelude::*;
use tempfile::TempDir;

const TRIANGLE: &str = "g 3 3\nv 0 C\nv 1 C\nv 2 O\ne 0 1 -\ne 1 2 -\ne 0 2 -\n";
const K4: &str = "g 4 6\nv 0 C\nv 1 C\nv 2 C\nv 3 C\ne 0 1 -\ne 0 2 -\ne 0 3 -\ne 1 2 -\ne 1 3 -\ne 2 3 -\n";
const PATH3: &str = "g 3 2\nv 0 C\nv 1 C\nv 2 C\ne 0 1 -\ne 1 2 -\n";
const PATH_CCO: &str = "g 3 2\nv 0 C\nv 1 C\nv 2 O\ne 0 1 -\ne 1 2 -\n";

fn atom(symbol: &str) -> String {
    format!("    0.0000    0.0000    0.0000 {symbol:<3} 0  0  0  0  0  0  0  0  0  0  0  0\n")
}

fn molfile(name: &str, atoms: &[&str], bonds: &[(usize, usize, u8)]) -> String {
    let mut s = format!("{name}\n  test\n\n{:>3}{:>3}  0  0  0  0  0  0  0  0999 V2000\n", atoms.len(), bonds.len());
    for a in atoms {
        s.push_str(&atom(a));
    }
    for &(u, v, t) in bonds {
        s.push_str(&format!("{u:>3}{v:>3}{t:>3}  0  0  0  0\n"));
    }
    s.push_str("M  END\n");
    s
}

fn benzene() -> String {
    let bonds: Vec<_> = (0..6).map(|i| (i + 1, (i + 1) % 6 + 1, if i % 2 == 0 { 2 } else { 1 })).collect();
    molfile("benzene", &["C"; 6], &bonds)
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = bbp_mcis::cli::run(std::iter::once("bbp-mcis").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/result.schema.json");
    let schema: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn records(out: &str) -> Vec<ResultRecord> {
    let validator = schema();
    out.lines()
        .map(|l| {
            let value: serde_json::Value = serde_json::from_str(l).unwrap();
            if let Err(e) = validator.validate(&value) {
                panic!("{l}: {e}");
            }
            serde_json::from_value(value).unwrap()
        })
        .collect()
}

#[test]
fn triangle_against_itself_weighs_six() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.graph", TRIANGLE);
    let (code, out) = run(&["compare", s(&t), s(&t)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains(" weight 6 vertices 3 edges 3 "), "{out}");
    assert!(out.contains("check ok"), "{out}");

    let (code, out) = run(&["compare", s(&t), s(&t), "--json"]);
    assert_eq!(code, 0);
    let r = records(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].weight, 6.0);
    assert_eq!(r[0].vertex_map, vec![[0, 0], [1, 1], [2, 2]]);
    assert_eq!(r[0].mapped_edges, 3);
    assert!(r[0].check.all());
}

#[test]
fn uniform_weights_ignore_labels() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.graph", PATH_CCO);
    let u = write(dir.path(), "u.graph", &PATH_CCO.replace("O", "N"));
    let (_, out) = run(&["compare", s(&t), s(&u), "--json"]);
    assert_eq!(records(&out)[0].weight, 3.0);
    let (_, out) = run(&["compare", s(&t), s(&u), "--json", "--weights", "uniform"]);
    assert_eq!(records(&out)[0].weight, 5.0);
    // A triangle edge is not a bridge, so C-C alone cannot be taken from it.
    let tri = write(dir.path(), "tri.graph", TRIANGLE);
    let (_, out) = run(&["compare", s(&tri), s(&u), "--json"]);
    assert_eq!(records(&out)[0].weight, 1.0);
}

#[test]
fn weight_table_file() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.graph", PATH_CCO);
    let p = write(dir.path(), "p.graph", PATH3);
    // O is never listed, so only C-C pairs and C-C bonds may be mapped.
    let table = write(dir.path(), "w.txt", "# carbon only\nv C C 2.5\ne - - 0.5\n");
    let (code, out) = run(&["compare", s(&t), s(&p), "--weights", s(&table), "--json"]);
    assert_eq!(code, 0);
    let r = &records(&out)[0];
    assert_eq!(r.weight, 5.5);
    assert_eq!(r.vertex_map.len(), 2);
    let bad = write(dir.path(), "bad.txt", "v C C 1\nv C C 2\n");
    assert_eq!(run(&["compare", s(&t), s(&p), "--weights", s(&bad)]).0, 65);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.graph", TRIANGLE);
    let k4 = write(dir.path(), "k4.graph", K4);
    let p = write(dir.path(), "p.graph", PATH3);
    let broken = write(dir.path(), "broken.graph", "g 2 1\nv 0 C\nv 1 C\ne 0 5 -\n");
    let missing = dir.path().join("missing.graph");

    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&[]).0, 64);
    assert_eq!(run(&["compare", s(&t)]).0, 64);
    assert_eq!(run(&["compare", s(&t), s(&t), "--frobnicate"]).0, 64);
    assert_eq!(run(&["bench", "--weights", s(&t)]).0, 64);
    assert_eq!(run(&["compare", s(&t), s(&broken)]).0, 65);
    assert_eq!(run(&["compare", s(&t), s(&missing)]).0, 66);
    assert_eq!(run(&["compare", s(&t), s(&k4)]).0, 2);
    assert_eq!(run(&["compare", s(&k4), s(&t), "--json"]).0, 2);
    assert_eq!(run(&["compare", s(&p), s(&t), "--enumerate-2mcis"]).0, 2);
    assert_eq!(CliError::Mismatch(String::new()).exit_code(), 1);
}

#[test]
fn real_process_exit_codes() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.graph", TRIANGLE);
    let k4 = write(dir.path(), "k4.graph", K4);
    let exe = env!("CARGO_BIN_EXE_bbp-mcis");
    let status = |args: &[&str]| std::process::Command::new(exe).args(args).output().unwrap();
    let ok = status(&["compare", s(&t), s(&t)]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("weight 6"));
    let rejected = status(&["compare", s(&t), s(&k4)]);
    assert_eq!(rejected.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&rejected.stderr).contains("outerplanar"));
    assert_eq!(status(&["nonsense"]).status.code(), Some(64));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let mut names = LabelInterner::new();
    let dup = "g 2 2\nv 0 C\nv 1 C\ne 0 1 -\n# again\ne 1 0 -\n";
    assert_eq!(parse_graph(dup, &mut names).unwrap_err().line, 6);
    let dir = TempDir::new().unwrap();
    let d = write(dir.path(), "d.graph", dup);
    let mut out = Vec::new();
    let code = bbp_mcis::cli::run(["bbp-mcis", "compare", s(&d), s(&d)], &mut out);
    assert_eq!(code, 65);
}

#[test]
fn benzene_molfile() {
    let mut names = LabelInterner::new();
    let g = parse_molfile(&benzene(), &mut names).unwrap();
    assert_eq!(g.vertex_count(), 6);
    assert_eq!(g.edge_count(), 6);
    let c = names.get("C").unwrap();
    assert!(g.vertex_labels().iter().all(|&l| l == c));
    let d = decompose(&g).unwrap();
    assert_eq!((d.blocks.len(), d.bridges.len()), (1, 0));

    let dir = TempDir::new().unwrap();
    let b = write(dir.path(), "benzene.mol", &benzene());
    let (code, out) = run(&["compare", s(&b), s(&b), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(records(&out)[0].weight, 12.0);
    // Six rotations and six reflections, minus those breaking the bond order pattern.
    let (code, out) = run(&["compare", s(&b), s(&b), "--enumerate-2mcis", "--json"]);
    assert_eq!(code, 0);
    let all = records(&out);
    assert_eq!(all.len(), 6);
    assert!(all.iter().all(|r| r.weight == 12.0 && r.check.all()));
}

#[test]
fn non_outerplanar_molecule_parses_but_is_rejected() {
    let k4 = molfile("tetrahedrane", &["C"; 4], &[(1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1), (3, 4, 1)]);
    let g = parse_molfile(&k4, &mut LabelInterner::new()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
    assert!(!is_outerplanar(&g));
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "k4.mol", &k4);
    let b = write(dir.path(), "benzene.mol", &benzene());
    assert_eq!(run(&["compare", s(&b), s(&m)]).0, 2);
}

#[test]
fn gen_is_deterministic_and_outerplanar() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let (code, out) = run(&["gen", "--n", "30", "--labels", "3", "--seed", "7", "--count", "4", "--out", s(d)]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
    }
    for seed in 7..11 {
        let name = format!("n30_s{seed}.graph");
        let text = fs::read_to_string(a.join(&name)).unwrap();
        assert_eq!(text, fs::read_to_string(b.join(&name)).unwrap());
        let g = parse_graph(&text, &mut LabelInterner::new()).unwrap();
        assert_eq!(g.vertex_count(), 30);
        assert!(g.is_connected() && is_outerplanar(&g));
    }
    assert_ne!(
        fs::read_to_string(a.join("n30_s7.graph")).unwrap(),
        fs::read_to_string(a.join("n30_s8.graph")).unwrap()
    );
    assert_eq!(run(&["gen", "--n", "10", "--ratio", "2.5", "--out", s(&a)]).0, 64);
}

#[test]
fn check_agrees_on_seeded_small_pairs() {
    let dir = TempDir::new().unwrap();
    let mut paths = Vec::new();
    for (i, n) in (3..=9).cycle().take(40).enumerate() {
        let sub = dir.path().join(i.to_string());
        let seed = (i * 11).to_string();
        let (code, out) = run(&[
            "gen",
            "--n",
            &n.to_string(),
            "--block-size",
            "4",
            "--labels",
            "2",
            "--seed",
            &seed,
            "--out",
            s(&sub),
        ]);
        assert_eq!(code, 0);
        paths.push(PathBuf::from(out.trim()));
    }
    for pair in paths.windows(2) {
        for weights in ["uniform", "label-eq"] {
            let (code, out) = run(&["check", s(&pair[0]), s(&pair[1]), "--weights", weights]);
            assert_eq!(code, 0, "{out}");
            assert!(out.ends_with("agree\n"), "{out}");
            assert!(out.contains("oracle weight"), "{out}");
        }
    }
}

#[test]
fn batch_is_ordered_and_independent_of_jobs() {
    let dir = TempDir::new().unwrap();
    let gdir = dir.path().join("graphs");
    let (_, out) = run(&["gen", "--n", "25", "--labels", "2", "--count", "6", "--seed", "3", "--out", s(&gdir)]);
    let files: Vec<String> =
        out.lines().map(|l| Path::new(l).file_name().unwrap().to_str().unwrap().to_owned()).collect();
    let mut list = String::from("# pairs\n");
    for i in 0..files.len() {
        for j in i..files.len() {
            list.push_str(&format!("graphs/{}\tgraphs/{}\n", files[i], files[j]));
        }
    }
    let tsv = write(dir.path(), "pairs.tsv", &list);
    let strip = |out: &str| -> Vec<ResultRecord> {
        records(out)
            .into_iter()
            .map(|mut r| {
                r.elapsed_us = 0;
                r
            })
            .collect()
    };
    let (c1, one) = run(&["batch", s(&tsv), "--json", "--jobs", "1"]);
    let (c4, four) = run(&["batch", s(&tsv), "--json", "--jobs", "4"]);
    assert_eq!((c1, c4), (0, 0));
    let (one, four) = (strip(&one), strip(&four));
    assert_eq!(one.len(), 21);
    assert_eq!(one, four);
    assert!(one.iter().all(|r| r.check.all()));
    for (r, line) in one.iter().zip(list.lines().skip(1)) {
        let (a, b) = line.split_once('\t').unwrap();
        assert!(r.g.ends_with(a) && r.h.ends_with(b));
    }
    // a diagonal pair maps everything
    assert_eq!(one[0].vertex_map.len(), 25);

    let bad = write(dir.path(), "bad.tsv", "graphs/x.graph\n");
    assert_eq!(run(&["batch", s(&bad)]).0, 65);
    let k4 = write(dir.path(), "k4.graph", K4);
    let mixed = write(dir.path(), "mixed.tsv", &format!("graphs/{0}\tgraphs/{0}\nk4.graph\tk4.graph\n", files[0]));
    let (code, out) = run(&["batch", s(&mixed), "--json"]);
    assert_eq!(code, 2);
    assert_eq!(records(&out).len(), 1, "the good pair is still reported");
    let _ = k4;
}

#[test]
fn bench_writes_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("b.csv");
    let (code, out) = run(&["bench", "--sizes", "8,16", "--reps", "3", "--seed", "1", "--csv", s(&csv)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 3);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,ratio,block_size,reps,mean_ms,sd_ms,min_ms,max_ms,actual_ratio,actual_block_size,mean_weight"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0][0], rows[1][0]), ("8", "16"));
    assert!(rows.iter().all(|r| r.len() == 11 && r[3] == "3"));
}

fn arb_graph() -> impl Strategy<Value = (LabeledGraph, u32)> {
    (1usize..40, 0.9f64..1.7, 2.0f64..10.0, 1u32..5, 1u32..4, any::<u64>()).prop_filter_map(
        "infeasible generator parameters",
        |(n, r, b, l, el, seed)| {
            let mut p = GenParams::new(n, r, b, l);
            p.edge_labels = el;
            gen_outerplanar(&p, seed).ok().map(|g| (g, l.max(el)))
        },
    )
}

proptest! {
    #[test]
    fn text_format_round_trips((g, labels) in arb_graph()) {
        let names = numeric_names(labels);
        let text = write_graph(&g, &names);
        let mut again = numeric_names(labels);
        let parsed = parse_graph(&text, &mut again).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(write_graph(&parsed, &again), text);
    }
}
