// SPDX-License-Identifier: Apache-2.0
#include "castreg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "castreg/error.hpp"
#include "castreg/hilbert.hpp"

namespace castreg {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  std::size_t end_column;
};

std::vector<Line> tokenize(std::string_view text, std::optional<std::string>* method = nullptr) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const auto hash = raw.find('#');
    if (hash != std::string_view::npos) {
      if (method) {
        std::istringstream comment{std::string(raw.substr(hash + 1))};
        std::string key, value;
        if (comment >> key >> value && key == "method") *method = value;
      }
      raw = raw.substr(0, hash);
    }
    Line line{number, {}, raw.size() + 1};
    for (std::size_t i = 0; i < raw.size();) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }

  const Line& take(std::string_view what) {
    if (done()) {
      const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw SyntaxError(last, 1, "unexpected end of input, expected " + std::string(what));
    }
    return lines_[next_++];
  }

  const Line* peek() const { return done() ? nullptr : &lines_[next_]; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

std::uint64_t to_uint(const Line& line, std::size_t i) {
  if (i >= line.tokens.size()) throw SyntaxError(line.number, line.end_column, "missing integer");
  const auto& tok = line.tokens[i];
  std::uint64_t value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw SyntaxError(line.number, tok.column, "expected a nonnegative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.tokens.front().text != keyword) {
    throw SyntaxError(line.number, line.tokens.front().column,
                      "expected '" + std::string(keyword) + "', got '" + std::string(line.tokens.front().text) + "'");
  }
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() > count) throw SyntaxError(line.number, line.tokens[count].column, "unexpected token");
  if (line.tokens.size() < count) throw SyntaxError(line.number, line.end_column, "too few values");
}

void expect_header(Cursor& cur, std::string_view name) {
  const Line& h = cur.take("header");
  expect_keyword(h, name);
  expect_count(h, 2);
  if (to_uint(h, 1) != 1) throw SyntaxError(h.number, h.tokens[1].column, "unsupported version");
}

[[noreturn]] void semantic(const std::exception& e) { throw Error(ErrorCode::SemanticError, e.what()); }

std::vector<Elem> elems(const Line& line, std::size_t from, const Field& field) {
  std::vector<Elem> out;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    const Elem x{to_uint(line, i)};
    if (!field.contains(x)) {
      throw Error(ErrorCode::SemanticError, "line " + std::to_string(line.number) + ": value " +
                                                std::to_string(x.value) + " outside " + field.describe());
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

PointConfig parse_pcfg(std::string_view text) {
  Cursor cur(tokenize(text));
  expect_header(cur, "pcfg");

  const Line& fl = cur.take("'field'");
  expect_keyword(fl, "field");
  if (fl.tokens.size() < 3) throw SyntaxError(fl.number, fl.end_column, "field needs p and e");
  const std::uint64_t p = to_uint(fl, 1);
  const std::uint64_t e = to_uint(fl, 2);
  std::optional<std::vector<std::uint64_t>> modulus;
  if (e > 1) {
    expect_count(fl, 3 + e + 1);
    modulus.emplace();
    for (std::size_t i = 3; i < fl.tokens.size(); ++i) modulus->push_back(to_uint(fl, i));
  } else {
    expect_count(fl, 3);
  }
  std::optional<Field> field;
  try {
    if (e > 64) throw Error(ErrorCode::BadParams, "extension degree too large");
    field = Field::make(p, static_cast<unsigned>(e), modulus);
  } catch (const Error& err) {
    semantic(err);
  }

  const Line& al = cur.take("'ambient'");
  expect_keyword(al, "ambient");
  expect_count(al, 2);
  const std::uint64_t n = to_uint(al, 1);

  const Line& pl = cur.take("'points'");
  expect_keyword(pl, "points");
  expect_count(pl, 2);
  const std::uint64_t d = to_uint(pl, 1);

  std::vector<std::vector<Elem>> rows;
  for (std::uint64_t i = 0; i < d; ++i) {
    const Line& row = cur.take("a point row");
    expect_count(row, n + 1);
    rows.push_back(elems(row, 0, *field));
  }
  if (const Line* extra = cur.peek()) throw SyntaxError(extra->number, extra->tokens.front().column, "trailing content");
  try {
    return PointConfig::make(*field, n, rows);
  } catch (const Error& err) {
    semantic(err);
  }
}

std::string emit_pcfg(const PointConfig& config) {
  std::ostringstream os;
  const Field& f = config.field();
  os << "pcfg 1\n";
  os << "field " << f.characteristic() << ' ' << f.degree();
  if (f.degree() > 1)
    for (auto m : f.modulus()) os << ' ' << m;
  os << '\n';
  os << "ambient " << config.ambient_dim() << '\n';
  os << "points " << config.size() << '\n';
  for (const auto& p : config.points()) {
    for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? " " : "") << p.coords[i].value;
    os << '\n';
  }
  return os.str();
}

SeparatorCertificate parse_sepcert(std::string_view text, const Field& field) {
  std::optional<std::string> method;
  Cursor cur(tokenize(text, &method));
  expect_header(cur, "sepcert");
  SeparatorCertificate cert;
  if (method) {
    bool known = false;
    for (auto m : {SeparatorMethod::LinearAlgebra, SeparatorMethod::Greedy, SeparatorMethod::Lemma21,
                   SeparatorMethod::Lemma22N3, SeparatorMethod::Lemma22N4, SeparatorMethod::Lemma22N5,
                   SeparatorMethod::Lemma24, SeparatorMethod::Lemma25}) {
      if (*method == to_string(m)) {
        cert.method = m;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::SemanticError, "unknown method '" + *method + "'");
  }
  const Line& pl = cur.take("'point'");
  expect_keyword(pl, "point");
  expect_count(pl, 2);
  cert.point = to_uint(pl, 1);
  const Line& dl = cur.take("'degree'");
  expect_keyword(dl, "degree");
  expect_count(dl, 2);
  cert.degree = to_uint(dl, 1);
  while (const Line* line = cur.peek()) {
    if (line->tokens.front().text != "hyp") break;
    cur.take("hyp");
    if (line->tokens.size() < 2) throw SyntaxError(line->number, line->end_column, "empty hyperplane");
    cert.hyperplanes.push_back(Hyperplane{elems(*line, 1, field)});
  }
  if (const Line* line = cur.peek()) {
    expect_keyword(*line, "form");
    cur.take("form");
    if (line->tokens.size() < 3) throw SyntaxError(line->number, line->end_column, "form needs a degree and coefficients");
    GeneralForm form;
    form.degree = to_uint(*line, 1);
    form.coeffs = elems(*line, 2, field);
    cert.form = std::move(form);
  }
  if (const Line* extra = cur.peek()) throw SyntaxError(extra->number, extra->tokens.front().column, "trailing content");
  return cert;
}

std::string emit_sepcert(const SeparatorCertificate& cert) {
  std::ostringstream os;
  os << "sepcert 1\n";
  os << "# method " << to_string(cert.method) << '\n';
  os << "point " << cert.point << '\n';
  os << "degree " << cert.degree << '\n';
  for (const auto& h : cert.hyperplanes) {
    os << "hyp";
    for (Elem c : h.coeffs) os << ' ' << c.value;
    os << '\n';
  }
  if (cert.form) {
    os << "form " << cert.form->degree;
    for (Elem c : cert.form->coeffs) os << ' ' << c.value;
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadParams, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace castreg
