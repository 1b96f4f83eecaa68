#include "tpk/tpd.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <vector>

#include "tpk/error.hpp"

namespace tpk {

namespace {

struct Token {
  std::string_view text;
  int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t')
      ++i;
    if (i > start)
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

struct Located {
  int value;
  int line;
  int column;
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  TpdDocument run();

private:
  [[noreturn]] void syntax(int line, int col, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, line, col, msg);
  }
  [[noreturn]] void semantic(int line, int col, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Semantic, line, col, msg);
  }

  int integer(int line, const Token& t) const {
    const auto v = to_int(t.text);
    if (!v)
      syntax(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return *v;
  }

  int index(int line, const Token& t) const {
    const int i = integer(line, t);
    if (i < 1 || i > 3)
      semantic(line, t.column, "index must be 1, 2 or 3");
    return i;
  }

  void line(int lineno, const std::vector<Token>& toks);

  std::string_view text_;
  bool have_header_ = false;
  int version_ = 0;
  std::optional<Located> bridges_;
  std::array<std::optional<std::vector<Located>>, 3> tangles_;
  std::array<int, 3> tangle_lines_{};
  std::array<std::optional<SectorPatch>, 3> sectors_;
  std::optional<std::vector<Located>> coloring_;
  int coloring_line_ = 0;
  std::map<std::string, std::string> meta_;
};

void Parser::line(int lineno, const std::vector<Token>& toks) {
  const std::string_view key = toks[0].text;
  if (!have_header_) {
    if (key != "tpd" || toks.size() != 2)
      syntax(lineno, toks[0].column, "document must start with 'tpd <version>'");
    version_ = integer(lineno, toks[1]);
    if (version_ != 1)
      semantic(lineno, toks[1].column, "unsupported version " + std::to_string(version_));
    have_header_ = true;
    return;
  }
  if (key == "tpd")
    syntax(lineno, toks[0].column, "duplicate header");

  if (key == "bridges") {
    if (toks.size() != 2)
      syntax(lineno, toks[0].column, "expected 'bridges <b>'");
    if (bridges_)
      semantic(lineno, toks[0].column, "duplicate bridges line");
    const int b = integer(lineno, toks[1]);
    if (b < 1)
      semantic(lineno, toks[1].column, "bridge count must be positive");
    bridges_ = Located{b, lineno, toks[1].column};
  } else if (key == "tangle") {
    if (toks.size() < 3 || toks[2].text != "braid")
      syntax(lineno, toks[0].column, "expected 'tangle <i> braid <letters...>'");
    const int i = index(lineno, toks[1]);
    std::vector<Located> letters;
    for (std::size_t t = 3; t < toks.size(); ++t)
      letters.push_back({integer(lineno, toks[t]), lineno, toks[t].column});
    if (tangles_[i - 1])
      semantic(lineno, toks[1].column, "duplicate tangle " + std::to_string(i));
    tangles_[i - 1] = std::move(letters);
    tangle_lines_[i - 1] = lineno;
  } else if (key == "sector") {
    if (toks.size() != 3)
      syntax(lineno, toks[0].column, "expected 'sector <i> disks|cone'");
    const int i = index(lineno, toks[1]);
    SectorPatch p;
    if (toks[2].text == "disks")
      p = SectorPatch::TrivialDisks;
    else if (toks[2].text == "cone")
      p = SectorPatch::Cone;
    else
      syntax(lineno, toks[2].column, "sector kind must be 'disks' or 'cone'");
    if (sectors_[i - 1])
      semantic(lineno, toks[1].column, "duplicate sector " + std::to_string(i));
    sectors_[i - 1] = p;
  } else if (key == "coloring") {
    if (coloring_)
      semantic(lineno, toks[0].column, "duplicate coloring line");
    std::vector<Located> colors;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      const int c = integer(lineno, toks[t]);
      if (c < 1 || c > 3)
        semantic(lineno, toks[t].column, "color must be 1, 2 or 3");
      colors.push_back({c, lineno, toks[t].column});
    }
    coloring_ = std::move(colors);
    coloring_line_ = lineno;
  } else if (key == "meta") {
    if (toks.size() < 3)
      syntax(lineno, toks[0].column, "expected 'meta <key> <value>'");
    std::string k(toks[1].text);
    if (meta_.count(k))
      semantic(lineno, toks[1].column, "duplicate meta key '" + k + "'");
    std::string value;
    for (std::size_t t = 2; t < toks.size(); ++t) {
      if (t > 2)
        value += ' ';
      value += toks[t].text;
    }
    meta_.emplace(std::move(k), std::move(value));
  } else {
    syntax(lineno, toks[0].column, "unknown keyword '" + std::string(key) + "'");
  }
}

TpdDocument Parser::run() {
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text_.size()) {
    std::size_t end = text_.find('\n', start);
    if (end == std::string_view::npos)
      end = text_.size();
    std::string_view raw = text_.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    const auto toks = tokenize(raw);
    if (!toks.empty())
      line(lineno, toks);
    if (end == text_.size())
      break;
  }

  // Missing lines are reported on the line after the last one.
  const auto newlines = static_cast<int>(std::count(text_.begin(), text_.end(), '\n'));
  const int eof = newlines + (text_.empty() || text_.back() == '\n' ? 1 : 2);
  if (!have_header_)
    syntax(eof, 1, "missing 'tpd <version>' header");
  if (!bridges_)
    semantic(eof, 1, "missing bridges line");
  const int b = bridges_->value;
  // Generators first: they point at a real token.
  for (const auto& t : tangles_)
    if (t)
      for (const Located& e : *t)
        if (e.value == 0 || e.value > 2 * b - 1 || e.value < -(2 * b - 1))
          semantic(e.line, e.column,
                   "generator " + std::to_string(e.value) + " out of range for " +
                       std::to_string(2 * b) + " strands");
  for (int i = 0; i < 3; ++i) {
    if (!tangles_[i])
      semantic(eof, 1, "missing tangle " + std::to_string(i + 1));
    if (!sectors_[i])
      semantic(eof, 1, "missing sector " + std::to_string(i + 1));
  }

  std::vector<Tangle> tangles;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> letters;
    for (const Located& e : *tangles_[i])
      letters.push_back(e.value);
    tangles.emplace_back(b, BraidWord(2 * b, std::move(letters)));
  }
  TpdDocument doc{version_,
                  TriPlaneDiagram(b, {tangles[0], tangles[1], tangles[2]},
                                  {*sectors_[0], *sectors_[1], *sectors_[2]}),
                  std::nullopt, std::move(meta_)};

  if (coloring_) {
    if (static_cast<int>(coloring_->size()) != b)
      semantic(coloring_line_, 1,
               "coloring has " + std::to_string(coloring_->size()) + " colors, expected " +
                   std::to_string(b));
    std::vector<Color> caps;
    for (const Located& c : *coloring_)
      caps.push_back(color_from_int(c.value));
    Coloring c = make_coloring(doc.diagram.tangle(1), std::move(caps));
    if (!is_triplane_coloring(doc.diagram, c))
      semantic(coloring_line_, 1, "coloring does not extend over all three tangles");
    doc.coloring = std::move(c);
  }
  return doc;
}

bool canonical_token_text(const std::string& s, bool allow_spaces) {
  if (s.empty() || s.front() == ' ' || s.back() == ' ')
    return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '#' || ch == '\n' || ch == '\r' || ch == '\t')
      return false;
    if (ch == ' ' && (!allow_spaces || s[i + 1] == ' '))
      return false;
  }
  return true;
}

} // namespace

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error((kind == Kind::Syntax ? "syntax error" : "semantic error") +
                         std::string(" at line ") + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      kind_(kind), line_(line), column_(column), message_(message) {}

TpdDocument parse_tpd(std::string_view text) { return Parser(text).run(); }

std::string serialize_tpd(const TpdDocument& doc) {
  const TriPlaneDiagram& d = doc.diagram;
  std::string out = "tpd " + std::to_string(doc.version) + "\n";
  out += "bridges " + std::to_string(d.bridges()) + "\n";
  for (int i = 1; i <= 3; ++i) {
    out += "tangle " + std::to_string(i) + " braid";
    for (int e : d.tangle(i).braid().letters())
      out += " " + std::to_string(e);
    out += "\n";
  }
  for (int i = 1; i <= 3; ++i)
    out += "sector " + std::to_string(i) + " " + to_string(d.sector(i)) + "\n";
  if (doc.coloring) {
    out += "coloring";
    for (Color c : doc.coloring->bottom())
      out += " " + std::to_string(tpk::to_int(c));
    out += "\n";
  }
  for (const auto& [k, v] : doc.metadata) {
    if (!canonical_token_text(k, false) || !canonical_token_text(v, true))
      throw InvalidInput("metadata entry '" + k + "' cannot be serialized");
    out += "meta " + k + " " + v + "\n";
  }
  return out;
}

} // namespace tpk
