#pragma once

namespace pga {

/// Serial runs the plain reference loop; Parallel spreads independent work
/// items over OpenMP threads. Both produce identical, ordered results.
enum class Execution { Serial, Parallel };

} // namespace pga
