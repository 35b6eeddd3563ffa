use std::process::{Command, Output};

fn symcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn decompose_examples() {
    let o = symcycle(&["decompose", "--t", "5", "--neg", "2"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "t,neg,tope,x,ell,q\n5,{2},\"(1,-1,1,1,1)\",\"(1,-1,1,0,0)\",3,+R0 -R1 +R2\n"
    );

    let o = symcycle(&["decompose", "--t", "4", "--neg", "1,2,3,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["x"], "(-1,0,0,0)");
    assert_eq!(v[0]["ell"], 1);

    let o = symcycle(&["decompose", "--t", "2", "--neg", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("out of range"));
}

#[test]
fn count_examples() {
    let o = symcycle(&["count", "topes", "--t", "4", "--ell", "3"]);
    assert_eq!(stdout(&o), "t,ell,count\n4,3,8\n");

    let o = symcycle(&["count", "topes", "--t", "4", "--j", "2", "--ell", "3"]);
    assert_eq!(stdout(&o), "t,j,ell,count\n4,2,3,4\n");

    let o = symcycle(&[
        "count", "pairs", "--t", "5", "--jp", "1", "--jpp", "1", "--ellp", "3", "--ellpp", "3",
        "--ell", "5", "--case", "i",
    ]);
    assert_eq!(
        stdout(&o),
        "t,j_prime,j_double_prime,ell_prime,ell_double_prime,ell,case,count\n5,1,1,3,3,5,i,2\n"
    );

    let o = symcycle(&["count", "smirnov", "--start", "theta", "--end", "beta", "--counts", "1,1,1"]);
    assert_eq!(stdout(&o), "start,end,theta,alpha,beta,method,count\ntheta,beta,1,1,1,dp,1\n");

    let o = symcycle(&["count", "compositions", "--m", "2", "--n", "5"]);
    assert_eq!(stdout(&o), "m,n,count\n2,5,4\n");
}

#[test]
fn pairs_case_all_is_itemized_and_summed() {
    for method in ["closed", "structural", "brute"] {
        let o = symcycle(&[
            "count", "pairs", "--t", "4", "--jp", "1", "--jpp", "1", "--ellp", "1", "--ellpp",
            "1", "--ell", "3", "--method", method,
        ]);
        assert!(o.status.success());
        let out = stdout(&o);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 11, "{method}");
        assert!(lines.contains(&"4,1,1,1,1,3,v,1"));
        assert!(lines.contains(&"4,1,1,1,1,3,ix,1"));
        assert_eq!(lines[10], "4,1,1,1,1,3,all,2");
    }
}

#[test]
fn pair_tables_identical_across_thread_counts() {
    let run = |threads: &str| {
        stdout(&symcycle(&[
            "count", "pairs", "--t", "9", "--jp", "2", "--jpp", "3", "--method", "brute",
            "--threads", threads, "--format", "json",
        ]))
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("7"));
}

#[test]
fn smirnov_methods() {
    let count = |method: &str, counts: &str| {
        let o = symcycle(&[
            "count", "smirnov", "--start", "theta", "--end", "theta", "--counts", counts,
            "--method", method,
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        stdout(&o).lines().nth(1).unwrap().rsplit(',').next().unwrap().to_string()
    };
    for method in ["dp", "closed", "enumerate", "gf"] {
        assert_eq!(count(method, "2,1,1"), "2", "{method}");
    }
    // The closed form undercounts from length 7 on.
    assert_eq!(count("dp", "3,2,2"), "8");
    assert_eq!(count("closed", "3,2,2"), "4");

    let o = symcycle(&["count", "smirnov", "--start", "alpha", "--end", "beta", "--counts", "1,1,1", "--method", "gf"]);
    assert_eq!(o.status.code(), Some(2));
    let o = symcycle(&["count", "smirnov", "--start", "gamma", "--end", "beta", "--counts", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_and_domain_errors_exit_two() {
    assert_eq!(symcycle(&["count", "topes", "--t", "4", "--ell", "2"]).status.code(), Some(2));
    assert_eq!(symcycle(&["count", "pairs", "--t", "4", "--jp", "2", "--jpp", "2"]).status.code(), Some(2));
    assert_eq!(symcycle(&["count", "pairs", "--t", "5", "--jp", "1", "--jpp", "1", "--case", "x"]).status.code(), Some(2));
    assert_eq!(symcycle(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn resource_limits_exit_three() {
    let o = symcycle(&["verify", "--t-max", "99"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("cap"));
    let o = symcycle(&["count", "pairs", "--t", "15", "--jp", "1", "--jpp", "1", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_small_passes() {
    let o = symcycle(&["verify", "--t-max", "6", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("suite,check,passed,failed\n"));
    assert!(out.lines().skip(1).all(|l| l.ends_with(",0")));
    assert!(stderr(&o).contains("t=6 brute-force pairs per case: i=50"));
}

#[test]
fn verify_pairs_at_eight_reports_closed_form_gap() {
    let o = symcycle(&["verify", "--t-max", "8", "--suite", "pairs"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("t=7 j'=2 j''=2 l'=5 l''=5 l=5 case=i: closed 4 brute 8"));
    assert!(stdout(&o).contains("pairs,closed = structural,24912,0"));
    assert!(stdout(&o).contains("pairs,exact structural = brute,24912,0"));

    let o = symcycle(&["verify", "--t-max", "8", "--suite", "pairs", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let closed = v.as_array().unwrap().iter().find(|c| c["check"] == "closed = brute").unwrap();
    assert_eq!(closed["failed"], 18);
    assert_eq!(closed["counterexamples"].as_array().unwrap().len(), 10);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--t-max", "7", "--suite", "pairs", "--format", "json"];
    assert_eq!(stdout(&symcycle(&args)), stdout(&symcycle(&args)));
}
