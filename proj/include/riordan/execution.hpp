#pragma once

namespace riordan {

// Selects between the OpenMP kernel and the plain serial loop it must agree
// with. Results are identical either way; only scheduling differs.
enum class Execution { serial, parallel };

}  // namespace riordan
