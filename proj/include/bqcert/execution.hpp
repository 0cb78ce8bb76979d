#pragma once

namespace bqcert {

/// Selects the OpenMP kernel or its serial reference.
enum class Execution { Serial, Parallel };

}  // namespace bqcert
