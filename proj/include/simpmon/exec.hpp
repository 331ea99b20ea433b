#pragma once

namespace simpmon {

// Selects between the OpenMP kernels and their serial references. Both
// produce identical results; the serial path exists for testing.
enum class Exec { serial, parallel };

}  // namespace simpmon
