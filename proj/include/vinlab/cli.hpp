#pragma once

// Placeholder during bring-up; the full command surface lands with io.hpp.

namespace vinlab {

inline int cli_main(int, char**) { return 0; }

}  // namespace vinlab
