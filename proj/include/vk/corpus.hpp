#pragma once

#include <string>
#include <vector>

#include "vk/gauss.hpp"
#include "vk/invariants.hpp"

namespace vk {

/// Named code list from a text file: `name code` per line, `#` comments.
struct Corpus {
  struct Entry {
    std::string name;
    GaussCode code;
  };
  std::vector<Entry> entries;

  static Corpus load(const std::string& path);
  static Corpus parse(const std::string& text, const std::string& origin = "<corpus>");
};

struct CorpusRow {
  std::string name;
  GaussCode code;
  InvariantReport report;
};

/// One row per entry, in file order.
std::vector<CorpusRow> corpus_run(const Corpus& corpus, const ReportOptions& opts = {});

/// Tab-separated table, stable across runs.
std::string corpus_tsv(const std::vector<CorpusRow>& rows);

}  // namespace vk
