use clap::Parser;

fn main() {
    let cli = rb_cycles::cli::Cli::parse();
    std::process::exit(rb_cycles::cli::run(cli));
}
