//! Driving the command line front end in-process.

use growth_core::cli::run;

fn call(args: &[&str], input: &str) -> String {
    let mut argv = vec!["growth"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    String::from_utf8(out).expect("utf-8 output")
}

fn main() {
    let tableaux = call(&["rsk", "--rule", "row"], "[[0,2,1],[1,1,0],[2,0,0]]");
    print!("rsk:   {tableaux}");
    print!("unrsk: {}", call(&["unrsk"], &tableaux));
    let encoded = call(&["littlewood", "encode", "--variant", "even-rows"], "[[2,1],[0]]");
    print!("encode: {encoded}");
    print!("decode: {}", call(&["littlewood", "decode", "--variant", "even-rows"], &encoded));
    print!("{}", call(&["verify", "littlewood-asym-1", "--n", "3", "--degree", "6"], ""));
}
