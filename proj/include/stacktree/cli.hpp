#pragma once

#include <iosfwd>

namespace stacktree {

enum ExitCode : int {
    kExitOk = 0,
    kExitSyntax = 1,
    kExitLayout = 2,
    kExitIo = 3,
};

/// Entry point of the `stacktree` tool. The rendered artifact goes to `out`
/// (or files), everything else to `err`.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace stacktree
