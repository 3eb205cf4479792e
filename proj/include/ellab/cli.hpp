#pragma once

namespace ellab {

// Exit codes: 0 success, 1 bad configuration, 2 assertion failure,
// 3 blowup / non-contraction.
int run_cli(int argc, char** argv);

} // namespace ellab
