#include "vk/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "vk/surface.hpp"

namespace vk {

Corpus Corpus::parse(const std::string& text, const std::string& origin) {
  Corpus corpus;
  std::istringstream in(text);
  std::string line;
  std::set<std::string> names;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t name_end = line.find_first_of(" \t", start);
    if (name_end == std::string::npos)
      throw Error(ErrorKind::CorpusParseError,
                  origin + ":" + std::to_string(lineno) + ": expected `name code`");
    std::string name = line.substr(start, name_end - start);
    if (!names.insert(name).second)
      throw Error(ErrorKind::CorpusParseError,
                  origin + ":" + std::to_string(lineno) + ": duplicate name " + name);
    try {
      corpus.entries.push_back({name, GaussCode::parse(line.substr(name_end))});
    } catch (const Error& e) {
      throw Error(ErrorKind::CorpusParseError,
                  origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return corpus;
}

Corpus Corpus::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::CorpusParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::vector<CorpusRow> corpus_run(const Corpus& corpus, const ReportOptions& opts) {
  std::vector<CorpusRow> rows;
  for (const auto& e : corpus.entries)
    rows.push_back({e.name, e.code, compute_report(e.code, opts)});
  return rows;
}

std::string corpus_tsv(const std::vector<CorpusRow>& rows) {
  std::string out = "name\tcode\tcrossings\twrithe\todd_writhe\tgenus\tfox3\tfox5\tf_polynomial\n";
  for (const CorpusRow& r : rows) {
    out += r.name + "\t" + r.code.canonical().str() + "\t" + std::to_string(r.code.crossings()) +
           "\t" + std::to_string(r.code.writhe()) + "\t" + std::to_string(r.report.odd_writhe);
    long long fox3 = r.report.fox.count(3) ? r.report.fox.at(3) : 0;
    long long fox5 = r.report.fox.count(5) ? r.report.fox.at(5) : 0;
    out += "\t" + std::to_string(diagram_genus(r.code)) + "\t" + std::to_string(fox3) + "\t" +
           std::to_string(fox5) + "\t" + r.report.f_polynomial.str() + "\n";
  }
  return out;
}

}  // namespace vk
