#pragma once

namespace omnilie {

/// Selects the OpenMP kernel or its serial reference. Both must produce
/// identical results; the serial path exists for testing and benchmarks.
enum class Exec { serial, parallel };

}  // namespace omnilie
