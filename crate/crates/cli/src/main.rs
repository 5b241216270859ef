fn main() {
    let out = workbench::run(std::env::args_os());
    if !out.stdout.is_empty() {
        println!("{}", out.stdout.trim_end());
    }
    std::process::exit(out.code);
}
