#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rootcircles/parabolic.hpp"

namespace rootcircles::cli {

enum class ModelKind {
  projective,
  quadric,
  grassmannian,
  flag,
  spinor,
  lagrangian,
};

// A named homogeneous model plus its integer parameters, as written on the
// command line: "projective:4", "grassmannian:2,5", "flag:1,2,1", ...
struct ModelSpec {
  ModelKind kind;
  std::vector<int> params;
};

// Parses "name:p1,p2,..." and validates the parameter bounds; canonicalizes
// grassmannians of lines or hyperplanes to the projective space they are.
// Throws std::invalid_argument naming the offending token.
ModelSpec parse_model(const std::string& token);

// Inverse of parse_model on canonical specs; format_model(parse_model(s))
// is idempotent.
std::string format_model(const ModelSpec& spec);

// The parabolic realizing the model.
Parabolic make_model(const ModelSpec& spec);

// Entry point shared by the binary and the tests: parses the argument list
// (without the program name), writes the report to `out` and diagnostics to
// `err`, and returns the process exit code (0 success, 1 internal error,
// 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rootcircles::cli
