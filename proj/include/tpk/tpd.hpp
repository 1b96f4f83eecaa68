#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tpk/coloring.hpp"
#include "tpk/diagram.hpp"

namespace tpk {

/// A parsed .tpd file. Only tangle 1's cap colors are stored; boundary
/// colors are always recomputed.
struct TpdDocument {
  int version = 1;
  TriPlaneDiagram diagram;
  std::optional<Coloring> coloring;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const TpdDocument&, const TpdDocument&) = default;
};

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  Kind kind_;
  int line_;
  int column_;
  std::string message_;
};

/// Reads the line-oriented diagram format:
///
///   tpd 1
///   bridges <b>
///   tangle <i> braid <e1> <e2> ...
///   sector <i> (disks|cone)
///   coloring <c1> ... <cb>        (optional)
///   meta <key> <value>            (optional, repeatable)
///
/// '#' starts a comment; blank lines are ignored. Each tangle and sector
/// index 1..3 appears exactly once. Meta values have runs of whitespace
/// collapsed to one space. Throws ParseError on the first problem.
TpdDocument parse_tpd(std::string_view text);

/// Canonical text: header, bridges, tangles 1-3, sectors 1-3, coloring,
/// then meta lines sorted by key. Throws InvalidInput for metadata that
/// cannot be written back (empty, or containing '#', newlines, or
/// non-canonical whitespace).
std::string serialize_tpd(const TpdDocument& doc);

} // namespace tpk
