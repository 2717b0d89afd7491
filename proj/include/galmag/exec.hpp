#pragma once

namespace galmag {

/// Serial is the reference path; Parallel runs the same loop under OpenMP.
enum class Exec { Serial, Parallel };

}  // namespace galmag
