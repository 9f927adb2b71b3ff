#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orikami/folding.hpp"

namespace orikami::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 1000x1000 view of the unit square, y pointing down.
std::string crease_pattern_svg(const Folding& f, const PaperLoop* loop);

/// Face images as a mesh, the loop image as a closed line object.
std::string folded_obj(const Folding& f, const PaperLoop* loop, const Tolerance& tol);

}  // namespace orikami::cli
