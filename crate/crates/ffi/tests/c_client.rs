//! Compiles a C client against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const CLIENT: &str = r#"
#include <stdio.h>
#include <string.h>
#include "splitgraph.h"

#define CHECK(call) do { SgStatus s_ = (call); if (s_ != SG_STATUS_OK) { \
    fprintf(stderr, "%s -> %d: %s\n", #call, (int)s_, sg_last_error_message()); return 1; } } while (0)

int main(void) {
    SgGraph *g = NULL, *split = NULL;
    size_t n = 0, m = 0, beta0 = 0;
    int64_t star = -1;
    SgVerdict verdict = SG_VERDICT_FAILS;
    char *text = NULL;

    CHECK(sg_counterexample_graph(6, 8, &g));
    CHECK(sg_graph_order(g, &n));
    CHECK(sg_beta0_star(g, &star));
    CHECK(sg_splitting_graph(g, &split));
    CHECK(sg_graph_edge_count(split, &m));
    CHECK(sg_independence_number(split, &beta0));
    CHECK(sg_verify_main_theorem(g, &verdict));
    CHECK(sg_graph_to_graph6(g, &text));
    printf("%zu %lld %zu %zu %d %s\n", n, (long long)star, m, beta0, (int)verdict, text);
    sg_string_free(text);
    sg_graph_free(split);
    sg_graph_free(g);

    g = NULL;
    if (sg_graph_from_graph6("A", &g) != SG_STATUS_PARSE_ERROR || g != NULL) return 2;
    if (strlen(sg_last_error_message()) == 0) return 3;
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_passes_a_c_syntax_check() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include/splitgraph.h");
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Wextra", "-Werror", "-std=c99", "-x", "c", include])
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn c_client_links_and_runs() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let source = dir.join("client.c");
    std::fs::write(&source, CLIENT).unwrap();
    let binary = dir.join("client");
    let lib = target_dir().join("libsplitgraph_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&source)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&binary).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    // G_k(6,8): K3 plus three pendants; S(G) has 3 * 6 edges
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "6 2 18 8 0 E{a?\n");
}
