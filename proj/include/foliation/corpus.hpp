#pragma once

#include <string>
#include <vector>

#include "foliation/report.hpp"

namespace fol {

struct CorpusRow {
  std::string id;
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CorpusEntry {
  std::string id;
  Json data;
};

/// Directory compiled in at build time; FOLIATION_CORPUS overrides it.
std::string default_corpus_dir();

/// Golden files `<id>.json`, sorted by id.
std::vector<CorpusEntry> load_corpus(const std::string& dir = default_corpus_dir());

/// One row per expected value. Analysis errors become failing rows.
std::vector<CorpusRow> run_corpus_entry(const CorpusEntry& e);

/// All entries (or only `id`), one task per entry; rows come back in file order.
/// Throws std::invalid_argument for an unknown id.
std::vector<CorpusRow> run_corpus(const std::string& id = "", const std::string& dir = default_corpus_dir());

}  // namespace fol
