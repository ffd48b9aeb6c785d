#pragma once

namespace wp {

// Entry point behind the wpexp binary.  Returns 0 on a PASS verdict, 1 on
// a FAIL verdict, 2 on configuration or usage errors, 3 when the numerics
// give up (non-convergence, accuracy, divergence, pole).
int cli_main(int argc, const char* const* argv);

}  // namespace wp
