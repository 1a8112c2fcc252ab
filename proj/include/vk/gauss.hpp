#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vk {

enum class ErrorKind {
  MalformedToken,
  CrossingVisitedTwiceOver,
  CrossingVisitedTwiceUnder,
  SignMismatch,
  MissingPartnerPass,
  UnknownCrossing,
  InapplicableMove,
  TooManyCrossings,
  GroupTableInvalid,
  WrongCodomain,
  CompositionMismatch,
  CategoryInvalid,
  FunctorInvalid,
  CoverageInvalid,
  CorpusParseError,
  BadInput,
};

/// Domain error carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

enum class Strand : uint8_t { Over = 0, Under = 1 };

/// One visit of the traversal through a classical crossing.
struct Pass {
  int id = 0;             // crossing label, positive
  Strand strand = Strand::Over;
  int sign = +1;          // crossing sign, shared by both passes

  friend bool operator==(const Pass&, const Pass&) = default;
  // Over < Under, then id, then + < -.  The order behind canonical forms.
  friend auto operator<=>(const Pass& a, const Pass& b) {
    if (auto c = static_cast<int>(a.strand) <=> static_cast<int>(b.strand); c != 0) return c;
    if (auto c = a.id <=> b.id; c != 0) return c;
    return (a.sign < 0) <=> (b.sign < 0);
  }
};

enum class Parity { Even, Odd };

/// Signed oriented Gauss code: a cyclic double-occurrence word of passes.
/// Virtual crossings are never stored; the detour moves act trivially on the
/// code, so the word itself is the diagram modulo virtual moves.  The empty
/// word is the crossingless unknot diagram.
class GaussCode {
 public:
  GaussCode() = default;  // empty code

  /// Validates the double-occurrence invariants and throws vk::Error on
  /// violation (each id once Over and once Under, signs agreeing, ids > 0).
  static GaussCode from_passes(std::vector<Pass> passes);

  /// Text form: whitespace/comma separated tokens O<k><s> / U<k><s>,
  /// or the literal "()" for the empty code.
  static GaussCode parse(std::string_view text);

  const std::vector<Pass>& passes() const { return passes_; }
  int size() const { return static_cast<int>(passes_.size()); }
  int crossings() const { return static_cast<int>(passes_.size()) / 2; }
  bool empty() const { return passes_.empty(); }

  std::string str() const;

  /// Lexicographically least word over all rotations combined with the
  /// first-occurrence relabeling each rotation induces.  Idempotent; the
  /// result uses ids 1..n.
  GaussCode canonical() const;

  /// Odd iff an odd number of passes lies strictly between the two
  /// occurrences of the crossing (well defined: the two gaps of a
  /// double-occurrence word have equal parity).
  Parity classical_parity(int crossing_id) const;

  /// Sum of crossing signs.
  int writhe() const;

  /// Positions of the two passes of a crossing, Over first.
  std::pair<int, int> positions_of(int crossing_id) const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend bool operator<(const GaussCode& a, const GaussCode& b) {
    return a.passes_ < b.passes_;
  }

  /// Compact byte key (one byte per pass) for hashing canonical forms.
  std::string key() const;

 private:
  explicit GaussCode(std::vector<Pass> p) : passes_(std::move(p)) {}
  std::vector<Pass> passes_;
};

std::string serialize(const GaussCode& code);

}  // namespace vk
