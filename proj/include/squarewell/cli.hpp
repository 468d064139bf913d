#pragma once

#include <iostream>

// Command-line front end.
//
//   solve    --bl <x> [--model both|flex4|schro2] [--format csv|json] [--out PATH]
//   table1   [--out PATH]
//   plot     --kind modes|bars --bl <x> --out PATH [--samples N]
//   infinite --count N [--model both|flex4|schro2] [--format csv|json] [--out PATH]
//
// Exit codes: 0 success, 1 domain error (bad physics input, I/O failure),
// 2 usage error (unknown flags, missing required arguments).  Data goes to
// `out` (or the --out file), diagnostics to `err`.

namespace squarewell {

/// Run the CLI.  Streams default to std::cout / std::cerr and are
/// parameters so tests can capture them in-process.
int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace squarewell
