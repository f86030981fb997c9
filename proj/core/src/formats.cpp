#include "rigidity/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "rigidity/constructions.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::string text;
  std::vector<Token> tokens;
};

// Splits on whitespace; drops blank lines and '#' comments.
std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line l{number, raw, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      l.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::int64_t to_int(const Token& t, int line) {
  std::int64_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) parse_fail(line, t.col, "expected an integer, found '" + t.text + "'");
  return v;
}

int header_m(const Line& l) {
  const Token& t = l.tokens.front();
  if (t.text.rfind("m=", 0) != 0 || l.tokens.size() != 1) parse_fail(l.number, t.col, "expected header 'm=<int>'");
  const std::int64_t m = to_int({t.text.substr(2), t.col + 2}, l.number);
  if (m < 1 || m > 64) parse_fail(l.number, t.col + 2, "m must lie in 1..64");
  return static_cast<int>(m);
}

int vertex_index(const Token& t, int line, int m) {
  const std::int64_t v = to_int(t, line);
  if (v < 1 || v > m) parse_fail(line, t.col, "index " + t.text + " outside 1.." + std::to_string(m));
  return static_cast<int>(v - 1);
}

}  // namespace

FileKind detect_format(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_fail(1, 1, "empty input");
  const std::string& first = lines.front().tokens.front().text;
  if (first.front() == '{') return FileKind::Json;
  if (first.rfind("m=", 0) == 0) {
    if (lines.size() > 1 && lines[1].text.find(':') != std::string::npos) return FileKind::Polytope;
    return FileKind::Complex;
  }
  return FileKind::Matrix;
}

std::string to_text(const SimplicialComplex& k) {
  std::string out = "m=" + std::to_string(k.m()) + "\n";
  for (Mask f : k.maximal_faces()) {
    std::string line;
    for (int v : elements(f)) line += (line.empty() ? "" : " ") + std::to_string(v + 1);
    out += line + "\n";
  }
  return out;
}

SimplicialComplex complex_from_text(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_fail(1, 1, "empty complex file");
  const int m = header_m(lines.front());
  std::vector<Mask> faces;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Mask f = 0;
    for (const Token& t : lines[i].tokens) {
      const int v = vertex_index(t, lines[i].number, m);
      if (contains(f, v)) parse_fail(lines[i].number, t.col, "repeated vertex in a face");
      f |= bit(v);
    }
    faces.push_back(f);
  }
  return SimplicialComplex(m, faces);
}

std::string to_text(const SimplePolytope& p) {
  std::string out = "m=" + std::to_string(p.m()) + "\n";
  for (int f = 0; f < p.m(); ++f) {
    out += std::to_string(f + 1) + ":";
    for (int g : p.rotation(f)) out += " " + std::to_string(g + 1);
    out += "\n";
  }
  return out;
}

SimplePolytope polytope_from_text(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_fail(1, 1, "empty polytope file");
  const int m = header_m(lines.front());
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(m));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    Token head = l.tokens.front();
    if (head.text.back() != ':') parse_fail(l.number, head.col, "expected '<facet>:'");
    head.text.pop_back();
    const int f = vertex_index(head, l.number, m);
    if (seen[f]) parse_fail(l.number, head.col, "facet " + head.text + " listed twice");
    seen[f] = true;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) rot[f].push_back(vertex_index(l.tokens[k], l.number, m));
  }
  for (int f = 0; f < m; ++f)
    if (!seen[f]) parse_fail(lines.back().number, 1, "facet " + std::to_string(f + 1) + " has no rotation line");
  return SimplePolytope::from_rotation_system(std::move(rot));
}

std::string to_json(const SimplePolytope& p) {
  nlohmann::json j;
  j["m"] = p.m();
  nlohmann::json rot = nlohmann::json::array();
  for (int f = 0; f < p.m(); ++f) {
    nlohmann::json r = nlohmann::json::array();
    for (int g : p.rotation(f)) r.push_back(g + 1);
    rot.push_back(r);
  }
  j["rotation"] = rot;
  return j.dump();
}

SimplePolytope polytope_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rotation") || !j["rotation"].is_array())
    fail(ErrorKind::ParseError, "JSON polytope needs a 'rotation' array");
  const auto& arr = j["rotation"];
  const int m = static_cast<int>(arr.size());
  if (j.contains("m") && j["m"] != m) fail(ErrorKind::ParseError, "'m' disagrees with the rotation array");
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f) {
    if (!arr[f].is_array()) fail(ErrorKind::ParseError, "rotation entries must be arrays");
    for (const auto& g : arr[f]) {
      if (!g.is_number_integer()) fail(ErrorKind::ParseError, "facet labels must be integers");
      const int v = g.get<int>();
      if (v < 1 || v > m) fail(ErrorKind::ParseError, "facet label outside 1..m");
      rot[f].push_back(v - 1);
    }
  }
  return SimplePolytope::from_rotation_system(std::move(rot));
}

std::string to_text(const CharMatrix& l) {
  std::string out;
  for (int r = 0; r < l.n(); ++r) {
    for (int i = 0; i < l.m(); ++i) out += (i ? " " : "") + std::to_string(l.entries(r, i));
    out += "\n";
  }
  return out;
}

CharMatrix char_matrix_from_text(const std::string& text, Coefficients c) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_fail(1, 1, "empty matrix file");
  std::vector<std::vector<std::int64_t>> rows;
  const std::size_t width = lines.front().tokens.size();
  for (const Line& l : lines) {
    if (l.tokens.size() != width)
      parse_fail(l.number, l.tokens.back().col, "row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                                                    std::to_string(width));
    std::vector<std::int64_t> row;
    for (const Token& t : l.tokens) row.push_back(to_int(t, l.number));
    rows.push_back(std::move(row));
  }
  return make_char_matrix(rows, c);
}

Parsed parse_any(const std::string& text, Coefficients matrix_coeffs) {
  switch (detect_format(text)) {
    case FileKind::Polytope: return polytope_from_text(text);
    case FileKind::Json: return polytope_from_json(text);
    case FileKind::Complex: return complex_from_text(text);
    case FileKind::Matrix: return char_matrix_from_text(text, matrix_coeffs);
  }
  fail(ErrorKind::ParseError, "unrecognized format");
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& s) : s_(s) {}

  SimplePolytope parse() {
    SimplePolytope p = polytope();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return p;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    if (pos_ - start > 6) error("number too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  // 1-based facet reference "F3" or "3", returned 0-based.
  int facet(const SimplePolytope& p) {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == 'F' || s_[pos_] == 'f')) ++pos_;
    const std::size_t at = pos_;
    const int f = number();
    if (f < 1 || f > p.m()) {
      pos_ = at;
      error("facet " + std::to_string(f) + " outside 1.." + std::to_string(p.m()));
    }
    return f - 1;
  }

  SimplePolytope polytope() {
    const std::size_t at = (skip(), pos_);
    const std::string name = word();
    if (name == "simplex") return simplex();
    if (name == "cube") return cube();
    if (name == "dodecahedron") return dodecahedron();
    static const char* const kFunctions[] = {"prism", "barrel", "edgecut", "vt", "et", "sk", "sum"};
    if (std::find(std::begin(kFunctions), std::end(kFunctions), name) == std::end(kFunctions)) {
      pos_ = at;
      error("unknown polytope '" + name + "'");
    }
    expect('(');
    SimplePolytope out = [&]() -> SimplePolytope {
      if (name == "prism" || name == "barrel") {
        const int k = number();
        if (name == "prism" && k < 3) error("prism needs k >= 3");
        if (name == "barrel" && k < 5) error("barrel needs k >= 5");
        return name == "prism" ? prism(k) : barrel(k);
      }
      if (name == "edgecut") return edge_cut_all(polytope());
      if (name == "vt") {
        const SimplePolytope p = polytope();
        Mask v = 0;
        for (int i = 0; i < 3; ++i) {
          expect(',');
          v |= bit(facet(p));
        }
        return vertex_truncate(p, v);
      }
      if (name == "et") {
        const SimplePolytope p = polytope();
        expect(',');
        const int a = facet(p);
        expect(',');
        const int b = facet(p);
        return edge_truncate(p, a, b);
      }
      if (name == "sk") {
        const SimplePolytope p = polytope();
        expect(',');
        const int f = facet(p);
        std::vector<int> run;
        while (peek(',')) {
          ++pos_;
          run.push_back(facet(p));
        }
        return sk_truncate(p, f, run);
      }
      if (name == "sum") {
        const SimplePolytope p = polytope();
        expect('@');
        const int f = facet(p);
        expect(',');
        const SimplePolytope q = polytope();
        expect('@');
        const int g = facet(q);
        Alignment align;
        if (peek(',')) {
          ++pos_;
          const std::string dir = word();
          if (dir != "fwd" && dir != "rev") error("alignment must be fwd:n or rev:n");
          expect(':');
          align.reverse = dir == "rev";
          align.start = number();
        }
        return connected_sum(p, f, q, g, align);
      }
      error("unknown polytope '" + name + "'");
    }();
    expect(')');
    return out;
  }
};

}  // namespace

SimplePolytope parse_expression(const std::string& expr) { return ExpressionParser(expr).parse(); }

}  // namespace rigidity
