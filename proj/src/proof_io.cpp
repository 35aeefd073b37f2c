#include "tarski/proof_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tarski/parse.hpp"
#include "tarski/unify.hpp"

namespace tarski {

std::string format_proof(const Proof& pf) {
  std::ostringstream os;
  os << "# proof " << pf.problem << "\n";
  os << "# settings " << pf.settings_digest << "\n";
  if (pf.target_goal == 0)
    os << "# target main\n";
  else
    os << "# target passive " << pf.target_goal << "\n";
  for (const ProofStep& s : pf.steps) {
    os << s.id << " [" << s.rule;
    for (int p : s.parents) os << ',' << p;
    if (!s.demods.empty()) {
      os << ",demod";
      for (int d : s.demods) os << ',' << d;
    }
    os << "] " << format_clause(s.clause) << "\n";
  }
  os << "# end\n";
  return os.str();
}

namespace {

ParseError proof_error(const std::string& msg, size_t line_no) {
  return ParseError("proof line " + std::to_string(line_no) + ": " + msg, line_no);
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof pf;
  SymbolSession syms;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      if (key == "proof") {
        hs >> std::ws;
        std::getline(hs, pf.problem);
        saw_header = true;
      } else if (key == "settings") {
        hs >> std::ws;
        std::getline(hs, pf.settings_digest);
      } else if (key == "target") {
        std::string kind;
        hs >> kind;
        if (kind == "main") {
          pf.target_goal = 0;
        } else if (kind == "passive") {
          if (!(hs >> pf.target_goal)) throw proof_error("missing passive goal number", line_no);
        } else {
          throw proof_error("unknown target '" + kind + "'", line_no);
        }
      } else if (key == "end") {
        break;
      } else {
        throw proof_error("unknown header '" + key + "'", line_no);
      }
      continue;
    }
    size_t lb = line.find('[');
    size_t rb = line.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      throw proof_error("malformed step (expected 'id [rule,parents] clause.')", line_no);
    ProofStep step;
    try {
      step.id = std::stoi(line.substr(0, lb));
    } catch (const std::exception&) {
      throw proof_error("bad step id", line_no);
    }
    std::string inner = line.substr(lb + 1, rb - lb - 1);
    std::istringstream is(inner);
    std::string tok;
    bool in_demods = false;
    if (!std::getline(is, step.rule, ',')) throw proof_error("missing rule name", line_no);
    while (std::getline(is, tok, ',')) {
      if (tok == "demod") {
        in_demods = true;
        continue;
      }
      int v;
      try {
        v = std::stoi(tok);
      } catch (const std::exception&) {
        throw proof_error("bad parent id '" + tok + "'", line_no);
      }
      (in_demods ? step.demods : step.parents).push_back(v);
    }
    std::string clause_text = line.substr(rb + 1);
    try {
      step.clause = parse_clause(clause_text, syms);
    } catch (const ParseError& e) {
      throw proof_error(std::string("clause: ") + e.what(), line_no);
    }
    pf.steps.push_back(std::move(step));
  }
  if (!saw_header || pf.steps.empty())
    throw ParseError("not a proof file (missing '# proof' header or steps)", 0);
  return pf;
}

void write_proof_file(const Proof& pf, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_proof(pf);
}

Proof read_proof_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str());
}

namespace {

VerifyResult fail_at(int id, std::string msg) { return {false, id, std::move(msg)}; }

}  // namespace

VerifyResult verify_proof(const Proof& pf, const std::vector<Clause>& inputs) {
  std::map<int, const ProofStep*> by_id;
  int prev_id = 0;
  for (const ProofStep& s : pf.steps) {
    if (s.id <= prev_id) return fail_at(s.id, "step ids not strictly increasing");
    prev_id = s.id;
    by_id[s.id] = &s;
  }

  std::vector<Demodulator> demods;
  for (const ProofStep& s : pf.steps) {
    if (s.rule == origin_name(Origin::input_demodulator)) {
      try {
        demods.push_back(make_demodulator(s.clause));
      } catch (const std::invalid_argument& e) {
        return fail_at(s.id, e.what());
      }
    }
  }

  for (const ProofStep& s : pf.steps) {
    if (s.is_input()) {
      if (!inputs.empty()) {
        bool found = false;
        for (const Clause& c : inputs)
          if (variant(c, s.clause)) {
            found = true;
            break;
          }
        if (!found) return fail_at(s.id, "input step not among the problem's input clauses");
      }
      continue;
    }

    std::vector<const Clause*> parents;
    for (int p : s.parents) {
      auto it = by_id.find(p);
      if (it == by_id.end() || p >= s.id)
        return fail_at(s.id, "parent " + std::to_string(p) + " does not precede the step");
      parents.push_back(&it->second->clause);
    }

    std::vector<InferenceResult> candidates;
    if (s.rule == rules::kBinary && parents.size() == 2) {
      candidates = binary_resolve(*parents[0], *parents[1]);
    } else if (s.rule == rules::kUnit && parents.size() == 2) {
      candidates = unit_resolve(*parents[0], *parents[1]);
    } else if (s.rule == rules::kPara && parents.size() == 2) {
      candidates = paramodulate(*parents[0], *parents[1]);
    } else if (s.rule == rules::kFactor && parents.size() == 1) {
      candidates = factor(*parents[0]);
    } else if (s.rule == rules::kHyper && parents.size() >= 2) {
      std::vector<Clause> sats;
      for (size_t i = 1; i < parents.size(); ++i) sats.push_back(*parents[i]);
      if (auto r = hyper_resolve(*parents[0], sats)) candidates.push_back(std::move(*r));
    } else {
      return fail_at(s.id, "rule '" + s.rule + "' with " + std::to_string(parents.size()) +
                               " parents is not replayable");
    }

    bool matched = false;
    for (const InferenceResult& cand : candidates) {
      Clause norm;
      try {
        norm = demodulate(cand.conclusion, demods);
      } catch (const RewriteLimitExceeded&) {
        continue;
      }
      if (variant(norm, s.clause)) {
        matched = true;
        break;
      }
    }
    if (!matched)
      return fail_at(s.id, "replaying " + s.rule + " on the named parents does not yield " +
                               format_clause(s.clause));
  }

  if (pf.target_goal == 0 && !pf.steps.back().clause.empty())
    return fail_at(pf.steps.back().id, "main-goal proof does not end in the empty clause");
  return {};
}

}  // namespace tarski
