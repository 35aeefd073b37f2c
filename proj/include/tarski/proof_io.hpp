#ifndef TARSKI_PROOF_IO_HPP
#define TARSKI_PROOF_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tarski/saturation.hpp"

namespace tarski {

// Proof file layout: `# proof <name>`, `# settings <digest>`,
// `# target main` or `# target passive <n>`, one step per line
// `id [rule,parents...,demod,ids...] clause.`, closed by `# end`.
std::string format_proof(const Proof& pf);
Proof parse_proof(std::string_view text);

void write_proof_file(const Proof& pf, const std::filesystem::path& path);
Proof read_proof_file(const std::filesystem::path& path);

struct VerifyResult {
  bool ok = true;
  int failing_step = 0;
  std::string message;

  explicit operator bool() const { return ok; }
};

// Replays every derived step with the named rule on the named parents
// (demodulation re-applied) and checks the recorded clause is among the
// results up to renaming. Input steps are checked against `inputs` when that
// list is non-empty.
VerifyResult verify_proof(const Proof& pf, const std::vector<Clause>& inputs);

}  // namespace tarski

#endif
