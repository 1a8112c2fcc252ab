#include "vk/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vk {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::CrossingVisitedTwiceOver: return "CrossingVisitedTwiceOver";
    case ErrorKind::CrossingVisitedTwiceUnder: return "CrossingVisitedTwiceUnder";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::MissingPartnerPass: return "MissingPartnerPass";
    case ErrorKind::UnknownCrossing: return "UnknownCrossing";
    case ErrorKind::InapplicableMove: return "InapplicableMove";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::GroupTableInvalid: return "GroupTableInvalid";
    case ErrorKind::WrongCodomain: return "WrongCodomain";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::CategoryInvalid: return "CategoryInvalid";
    case ErrorKind::FunctorInvalid: return "FunctorInvalid";
    case ErrorKind::CoverageInvalid: return "CoverageInvalid";
    case ErrorKind::CorpusParseError: return "CorpusParseError";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

GaussCode GaussCode::from_passes(std::vector<Pass> passes) {
  struct Seen {
    int over = -1;   // position of the Over pass
    int under = -1;  // position of the Under pass
    int sign = 0;
  };
  std::map<int, Seen> seen;
  for (int i = 0; i < static_cast<int>(passes.size()); ++i) {
    const Pass& p = passes[i];
    if (p.id <= 0)
      throw Error(ErrorKind::MalformedToken, "crossing id must be positive, got " + std::to_string(p.id));
    if (p.sign != 1 && p.sign != -1)
      throw Error(ErrorKind::MalformedToken, "crossing sign must be +1 or -1");
    Seen& s = seen[p.id];
    if (p.strand == Strand::Over) {
      if (s.over >= 0)
        throw Error(ErrorKind::CrossingVisitedTwiceOver,
                    "crossing " + std::to_string(p.id) + " visited twice over");
      s.over = i;
    } else {
      if (s.under >= 0)
        throw Error(ErrorKind::CrossingVisitedTwiceUnder,
                    "crossing " + std::to_string(p.id) + " visited twice under");
      s.under = i;
    }
    if (s.sign != 0 && s.sign != p.sign)
      throw Error(ErrorKind::SignMismatch,
                  "crossing " + std::to_string(p.id) + " occurs with both signs");
    s.sign = p.sign;
  }
  for (const auto& [id, s] : seen) {
    if (s.over < 0 || s.under < 0)
      throw Error(ErrorKind::MissingPartnerPass,
                  "crossing " + std::to_string(id) + " appears only once");
  }
  return GaussCode(std::move(passes));
}

GaussCode GaussCode::parse(std::string_view text) {
  std::vector<Pass> passes;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  if (i + 1 < text.size() && text[i] == '(' && text[i + 1] == ')') {
    i += 2;
    skip();
    if (i != text.size())
      throw Error(ErrorKind::MalformedToken, "trailing input after ()");
    return GaussCode();
  }
  while (i < text.size()) {
    char c = text[i];
    Strand strand;
    if (c == 'O' || c == 'o')
      strand = Strand::Over;
    else if (c == 'U' || c == 'u')
      strand = Strand::Under;
    else
      throw Error(ErrorKind::MalformedToken,
                  "expected O or U at offset " + std::to_string(i));
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::MalformedToken, "expected crossing number at offset " + std::to_string(i));
    int id = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      id = id * 10 + (text[i] - '0');
      if (id > 1'000'000) throw Error(ErrorKind::MalformedToken, "crossing id out of range");
      ++i;
    }
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw Error(ErrorKind::MalformedToken, "expected sign after crossing " + std::to_string(id));
    int sign = text[i] == '+' ? +1 : -1;
    ++i;
    passes.push_back(Pass{id, strand, sign});
    skip();
  }
  if (passes.empty())
    throw Error(ErrorKind::MalformedToken, "empty input (use () for the empty code)");
  return from_passes(std::move(passes));
}

std::string GaussCode::str() const {
  if (passes_.empty()) return "()";
  std::string out;
  for (const Pass& p : passes_) {
    out += p.strand == Strand::Over ? 'O' : 'U';
    out += std::to_string(p.id);
    out += p.sign > 0 ? '+' : '-';
  }
  return out;
}

std::string serialize(const GaussCode& code) { return code.str(); }

GaussCode GaussCode::canonical() const {
  const int n = size();
  if (n == 0) return GaussCode();
  int max_id = 0;
  for (const Pass& p : passes_) max_id = std::max(max_id, p.id);
  std::vector<Pass> best;
  std::vector<Pass> cand(n);
  std::vector<int> relabel(max_id + 1, 0);
  std::vector<int> touched;
  touched.reserve(n / 2);
  for (int r = 0; r < n; ++r) {
    touched.clear();
    int next = 0;
    bool better = best.empty();
    bool worse = false;
    for (int k = 0; k < n; ++k) {
      Pass p = passes_[(r + k) % n];
      int& lbl = relabel[p.id];
      if (lbl == 0) {
        lbl = ++next;
        touched.push_back(p.id);
      }
      p.id = lbl;
      cand[k] = p;
      if (!better && !worse) {
        if (p < best[k]) better = true;
        else if (best[k] < p) worse = true;
      }
    }
    for (int id : touched) relabel[id] = 0;
    if (better) best = cand;
  }
  return GaussCode(std::move(best));
}

std::pair<int, int> GaussCode::positions_of(int crossing_id) const {
  int over = -1, under = -1;
  for (int i = 0; i < size(); ++i) {
    if (passes_[i].id == crossing_id) {
      (passes_[i].strand == Strand::Over ? over : under) = i;
    }
  }
  if (over < 0 || under < 0)
    throw Error(ErrorKind::UnknownCrossing, "crossing " + std::to_string(crossing_id) + " not in code");
  return {over, under};
}

Parity GaussCode::classical_parity(int crossing_id) const {
  auto [a, b] = positions_of(crossing_id);
  if (a > b) std::swap(a, b);
  int gap = b - a - 1;
  return (gap % 2 == 0) ? Parity::Even : Parity::Odd;
}

int GaussCode::writhe() const {
  int w = 0;
  for (const Pass& p : passes_)
    if (p.strand == Strand::Over) w += p.sign;
  return w;
}

std::string GaussCode::key() const {
  std::string k;
  k.reserve(passes_.size());
  for (const Pass& p : passes_) {
    // fits one byte for ids up to 63; larger codes fall back to two bytes
    unsigned v = (static_cast<unsigned>(p.strand) << 1) | (p.sign < 0 ? 1u : 0u);
    if (p.id < 64) {
      k.push_back(static_cast<char>((p.id << 2) | v));
    } else {
      k.push_back(static_cast<char>(0xFF));
      k.push_back(static_cast<char>(p.id & 0xFF));
      k.push_back(static_cast<char>(((p.id >> 8) << 2) | v));
    }
  }
  return k;
}

}  // namespace vk
