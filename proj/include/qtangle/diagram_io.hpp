#pragma once

// Text form of tangle diagrams (.tgl).
//
//   # comment
//   tangle N M
//   cap I
//   cup I
//   cross I T        (T in 1..4)
//
// or the one-line braid form
//
//   braid S: W1 W2 ... ; close
//
// where the Wk are nonzero braid letters.

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtangle/tangle.hpp"

namespace qtangle {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline int to_int(const std::string& tok, std::size_t line, const char* what) {
  int v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  return v;
}

inline TangleDiagram parse_braid_line(std::string_view body, std::size_t line) {
  // body is everything after the keyword "braid"
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) throw ParseError(line, "braid form needs 'S:' before the word");
  const auto head = split_ws(body.substr(0, colon));
  if (head.size() != 1) throw ParseError(line, "braid form needs exactly one strand count");
  const int strands = to_int(head[0], line, "strand count");
  std::string_view rest = body.substr(colon + 1);
  const auto semi = rest.find(';');
  if (semi == std::string_view::npos) throw ParseError(line, "braid form must end with '; close'");
  const auto tail = split_ws(rest.substr(semi + 1));
  if (tail.size() != 1 || tail[0] != "close") throw ParseError(line, "braid form must end with '; close'");
  std::vector<int> word;
  for (const auto& tok : split_ws(rest.substr(0, semi))) word.push_back(to_int(tok, line, "braid letter"));
  try {
    return braid_closure(strands, word);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

/// Parses either form. Throws ParseError (with a line number) on syntax errors
/// and ValidationError when the layers do not fit the declared widths.
inline TangleDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  int source = 0;
  int target = 0;
  std::vector<Layer> layers;
  std::optional<TangleDiagram> braid;

  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    const auto toks = detail::split_ws(s);
    if (toks.empty()) continue;
    if (braid) throw ParseError(line, "unexpected content after braid form");

    if (!have_header) {
      if (toks[0] == "tangle") {
        if (toks.size() != 3) throw ParseError(line, "header must be 'tangle N M'");
        source = detail::to_int(toks[1], line, "source width");
        target = detail::to_int(toks[2], line, "target width");
        if (source < 0 || target < 0) throw ParseError(line, "widths must be nonnegative");
        have_header = true;
        continue;
      }
      if (toks[0] == "braid" || toks[0].rfind("braid", 0) == 0) {
        const auto kw = s.find("braid");
        braid = detail::parse_braid_line(s.substr(kw + 5), line);
        continue;
      }
      throw ParseError(line, "expected 'tangle N M' or 'braid S: ... ; close', got '" + toks[0] + "'");
    }

    const std::string& op = toks[0];
    if (op == "cap" || op == "cup") {
      if (toks.size() != 2) throw ParseError(line, "'" + op + "' takes one position");
      const int i = detail::to_int(toks[1], line, "position");
      layers.push_back(op == "cap" ? Layer::cap(i) : Layer::cup(i));
    } else if (op == "cross") {
      if (toks.size() != 3) throw ParseError(line, "'cross' takes a position and a type");
      layers.push_back(Layer::crossing(detail::to_int(toks[1], line, "position"),
                                       detail::to_int(toks[2], line, "crossing type")));
    } else {
      throw ParseError(line, "unknown layer '" + op + "'");
    }
  }
  if (braid) return *braid;
  if (!have_header) throw ParseError(line == 0 ? 1 : line, "empty diagram");
  return TangleDiagram(source, target, std::move(layers));
}

/// Canonical tangle form: header line then one layer per line.
inline std::string serialize(const TangleDiagram& t) {
  std::string out = "tangle " + std::to_string(t.source_width()) + " " + std::to_string(t.target_width()) + "\n";
  for (const Layer& l : t.layers()) out += l.to_string() + "\n";
  return out;
}

}  // namespace qtangle
