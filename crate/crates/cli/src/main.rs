use std::io;

fn main() {
    let code = horokit::run(std::env::args_os().skip(1), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
