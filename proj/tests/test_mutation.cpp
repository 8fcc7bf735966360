#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigproof/registry.hpp"

using namespace trigproof;

namespace {

struct CatalogText {
  std::string id;  // lemma id (file stem)
  std::string text;
};

std::vector<CatalogText> catalog() {
  namespace fs = std::filesystem;
  std::vector<CatalogText> out;
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(TRIGPROOF_PROOFS_DIR))
    if (e.path().extension() == ".trig") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    out.push_back({p.stem().string(), buf.str()});
  }
  return out;
}

// Registry from the catalog with one file's text replaced.
Registry with_replacement(const std::vector<CatalogText>& cat,
                          const std::string& id, const std::string& text) {
  std::vector<std::string> texts;
  for (const auto& c : cat) texts.push_back(c.id == id ? text : c.text);
  return Registry::from_texts(texts);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

bool rejected_or_load_failure(const std::vector<CatalogText>& cat,
                              const std::string& id,
                              const std::string& mutated) {
  try {
    Registry reg = with_replacement(cat, id, mutated);
    const VerifyReport* rep = reg.report_for(id);
    if (rep && !rep->accepted) return true;
    // mutations can also break consumers downstream
    for (const auto& r : reg.reports())
      if (!r.accepted) return true;
    return false;
  } catch (const Error&) {
    return true;  // load refuses the mutated catalog
  }
}

}  // namespace

TEST_CASE("corrupting any script conclusion rejects it") {
  auto cat = catalog();
  int mutated_scripts = 0;
  for (const auto& c : cat) {
    auto lines = split_lines(c.text);
    std::string conclude;
    for (const auto& l : lines)
      if (l.rfind("conclude ", 0) == 0) conclude = l.substr(9);
    if (conclude.empty()) continue;  // axiom file
    bool patched = false;
    for (auto& l : lines) {
      if (l.rfind("step " + conclude + ":", 0) != 0) continue;
      auto by = l.rfind(" by ");
      REQUIRE(by != std::string::npos);
      l = l.substr(0, by) + " + 1" + l.substr(by);
      patched = true;
    }
    REQUIRE(patched);
    INFO("mutating conclusion of ", c.id);
    CHECK(rejected_or_load_failure(cat, c.id, join_lines(lines)));
    ++mutated_scripts;
  }
  CHECK(mutated_scripts == 16);
}

TEST_CASE("deleting any given or hypothesis breaks the script") {
  auto cat = catalog();
  int deletions = 0;
  for (const auto& c : cat) {
    auto lines = split_lines(c.text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      bool is_given = lines[i].rfind("given ", 0) == 0;
      bool is_hyp = lines[i].rfind("hyp ", 0) == 0;
      if (!is_given && !is_hyp) continue;
      auto cut = lines;
      cut.erase(cut.begin() + static_cast<long>(i));
      INFO("deleting from ", c.id, ": ", lines[i]);
      CHECK(rejected_or_load_failure(cat, c.id, join_lines(cut)));
      ++deletions;
    }
  }
  CHECK(deletions >= 25);
}

TEST_CASE("the classic corruption: c^2 = a^2 + b^2 + 1") {
  auto cat = catalog();
  for (const char* id :
       {"proof_first", "proof_second", "proof_third", "proof_exercise"}) {
    for (const auto& c : cat) {
      if (c.id != id) continue;
      std::string text = c.text;
      const std::string from = "step fin: c^2 = a^2 + b^2 by";
      auto pos = text.find(from);
      REQUIRE(pos != std::string::npos);
      text.replace(pos, from.size(), "step fin: c^2 = a^2 + b^2 + 1 by");
      Registry reg = with_replacement(cat, id, text);
      CHECK_FALSE(reg.report_for(id)->accepted);
    }
  }
}
