#include "tarski/master_list.hpp"

namespace tarski {

namespace detail {
const char* starter_master_list_text();
}

const std::string& starter_corpus_text() {
  static const std::string text = detail::starter_master_list_text();
  return text;
}

const MasterList& starter_corpus() {
  static const MasterList list = parse_master_list_or_throw(starter_corpus_text());
  return list;
}

}  // namespace tarski
