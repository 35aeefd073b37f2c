#include "tarski/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "tarski/parse.hpp"

namespace tarski {

namespace {

// Breaks a clause line at " | " joints so no physical line exceeds 80
// columns; continuations are indented and start with "| ".
void emit_wrapped(std::ostringstream& os, const std::string& clause_text) {
  if (clause_text.size() <= 80) {
    os << clause_text << "\n";
    return;
  }
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t bar = clause_text.find(" | ", start);
    if (bar == std::string::npos) {
      parts.push_back(clause_text.substr(start));
      break;
    }
    parts.push_back(clause_text.substr(start, bar - start));
    start = bar + 3;
  }
  std::string line = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) {
    if (line.size() + 3 + parts[i].size() > 80) {
      os << line << "\n";
      line = "  | " + parts[i];
    } else {
      line += " | " + parts[i];
    }
  }
  os << line << "\n";
}

void emit_list(std::ostringstream& os, const char* name, const std::vector<Clause>& cs) {
  if (cs.empty()) return;
  os << "list(" << name << ").\n";
  for (const Clause& c : cs) emit_wrapped(os, format_clause(c));
  os << "end_of_list.\n";
}

}  // namespace

std::string format_problem_file(const ProblemSpec& p) {
  std::ostringstream os;
  os << "% problem " << p.name << "\n";
  const Settings& s = p.settings;
  if (s.rules.binary) os << "set(binary_res).\n";
  if (s.rules.hyper) os << "set(hyper_res).\n";
  if (s.rules.unit) os << "set(ur_res).\n";
  if (s.rules.paramodulation) os << "set(paramodulation).\n";
  if (s.rules.factoring) os << "set(factor).\n";
  if (s.level_saturation) os << "set(level_saturation).\n";
  os << "assign(max_weight," << s.max_weight << ").\n";
  os << "assign(pick_given_ratio," << s.pick_given_ratio << ").\n";
  os << "assign(max_proofs," << s.max_proofs << ").\n";
  if (s.max_seconds) os << "assign(max_seconds," << *s.max_seconds << ").\n";
  if (s.max_distinct_vars) os << "assign(max_distinct_vars," << *s.max_distinct_vars << ").\n";
  if (s.max_given) os << "assign(max_given," << *s.max_given << ").\n";
  // The hint weights are part of the fixed template so that inserting a
  // hints list is the only change between a plain and a hinted file.
  os << "assign(bsub_hint_wt," << s.bsub_hint_wt << ").\n";
  os << "assign(fsub_hint_wt," << (s.fsub_hint_wt ? *s.fsub_hint_wt : -1) << ").\n";

  emit_list(os, "usable", p.usable);
  emit_list(os, "sos", p.sos);
  emit_list(os, "hints", p.hints);
  std::vector<Clause> passive;
  for (const PassiveGoal& g : p.passive) passive.push_back(g.clause);
  emit_list(os, "passive", passive);
  std::vector<Clause> demods;
  for (const Demodulator& d : p.demodulators) demods.push_back(d.equation);
  emit_list(os, "demodulators", demods);
  emit_list(os, "hot", p.hot);
  return os.str();
}

ProblemSpec parse_problem_file(std::string_view text, const std::string& fallback_name) {
  ProblemSpec p;
  p.name = fallback_name;
  Settings& s = p.settings;
  s.rules = RuleFlags{false, false, false, false, false};
  bool saw_bsub = false, saw_fsub = false;

  SymbolSession syms;
  std::istringstream in{std::string(text)};
  std::string raw;
  size_t line_no = 0;
  std::string current_list;
  std::string pending;  // clause text joined across wrapped lines

  auto err = [&](const std::string& msg) {
    return ParseError("problem file line " + std::to_string(line_no) + ": " + msg, line_no);
  };

  auto add_clause = [&](const std::string& text_one) {
    Clause c = parse_clause(text_one, syms);
    if (current_list == "usable") {
      p.usable.push_back(std::move(c));
    } else if (current_list == "sos") {
      p.sos.push_back(std::move(c));
    } else if (current_list == "hints") {
      p.hints.push_back(std::move(c));
    } else if (current_list == "passive") {
      p.passive.push_back({static_cast<int>(p.passive.size()) + 1, std::move(c)});
    } else if (current_list == "demodulators") {
      try {
        p.demodulators.push_back(make_demodulator(c));
      } catch (const std::invalid_argument& e) {
        throw err(e.what());
      }
    } else if (current_list == "hot") {
      p.hot.push_back(std::move(c));
    } else {
      throw err("clause outside any list");
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw[0] == '%') {
      if (raw.rfind("% problem ", 0) == 0 && line_no == 1) p.name = raw.substr(10);
      continue;
    }
    size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(b, e - b + 1);

    if (!current_list.empty()) {
      if (line == "end_of_list.") {
        if (!pending.empty()) throw err("unterminated clause before end_of_list");
        current_list.clear();
        continue;
      }
      pending += pending.empty() ? line : " " + line;
      if (pending.back() == '.') {
        add_clause(pending);
        pending.clear();
      }
      continue;
    }

    if (line.rfind("list(", 0) == 0 && line.size() > 7 && line.substr(line.size() - 2) == ").") {
      current_list = line.substr(5, line.size() - 7);
      if (current_list != "usable" && current_list != "sos" && current_list != "hints" &&
          current_list != "passive" && current_list != "demodulators" && current_list != "hot")
        throw err("unknown list '" + current_list + "'");
      continue;
    }
    if (line.rfind("set(", 0) == 0 && line.substr(line.size() - 2) == ").") {
      std::string flag = line.substr(4, line.size() - 6);
      if (flag == "binary_res") s.rules.binary = true;
      else if (flag == "hyper_res") s.rules.hyper = true;
      else if (flag == "ur_res") s.rules.unit = true;
      else if (flag == "paramodulation") s.rules.paramodulation = true;
      else if (flag == "factor") s.rules.factoring = true;
      else if (flag == "level_saturation") s.level_saturation = true;
      else throw err("unknown flag '" + flag + "'");
      continue;
    }
    if (line.rfind("assign(", 0) == 0 && line.substr(line.size() - 2) == ").") {
      std::string body = line.substr(7, line.size() - 9);
      size_t comma = body.find(',');
      if (comma == std::string::npos) throw err("malformed assign");
      std::string key = body.substr(0, comma);
      int value = 0;
      try {
        value = std::stoi(body.substr(comma + 1));
      } catch (const std::exception&) {
        throw err("bad assign value in '" + line + "'");
      }
      if (key == "max_weight") s.max_weight = value;
      else if (key == "pick_given_ratio") s.pick_given_ratio = value;
      else if (key == "max_proofs") s.max_proofs = value;
      else if (key == "max_seconds") s.max_seconds = value;
      else if (key == "max_distinct_vars") s.max_distinct_vars = value;
      else if (key == "max_given") s.max_given = value;
      else if (key == "bsub_hint_wt") { s.bsub_hint_wt = value; saw_bsub = true; }
      else if (key == "fsub_hint_wt") { s.fsub_hint_wt = value; saw_fsub = true; }
      else if (key == "demod_step_limit") s.demod_step_limit = value;
      else throw err("unknown parameter '" + key + "'");
      continue;
    }
    throw err("unrecognized line: " + line);
  }
  if (!current_list.empty()) throw ParseError("unterminated list(" + current_list + ")", line_no);

  if (saw_bsub && saw_fsub) s.hint_mode = HintMode::both;
  else if (saw_bsub) s.hint_mode = HintMode::subsumed_by_hint;
  else if (saw_fsub) s.hint_mode = HintMode::subsumes_hint;
  return p;
}

void write_problem_file(const ProblemSpec& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_problem_file(p);
}

ProblemSpec read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_file(buf.str(), path.stem().string());
}

}  // namespace tarski
