// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    let code = qpurify::sweep::cli_main(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
