#ifndef TARSKI_PROBLEM_IO_HPP
#define TARSKI_PROBLEM_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "tarski/saturation.hpp"

namespace tarski {

// OTTER-style input file: set(...)/assign(...,n) lines, then clause blocks
// list(usable). / list(sos). / list(hints). / list(passive). /
// list(demodulators). / list(hot). each closed by end_of_list.
// Lines wrap at 80 columns; '%' starts a comment line. Passive goal numbers
// are positional (1-based). Output is byte-stable for identical inputs.
std::string format_problem_file(const ProblemSpec& p);
ProblemSpec parse_problem_file(std::string_view text, const std::string& fallback_name);

void write_problem_file(const ProblemSpec& p, const std::filesystem::path& path);
ProblemSpec read_problem_file(const std::filesystem::path& path);

}  // namespace tarski

#endif
