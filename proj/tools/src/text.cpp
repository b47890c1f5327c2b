#include "fourier/cli/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "fourier/error.hpp"

namespace fourier::cli {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, const std::string& source, std::size_t line, std::size_t column0 = 0)
      : text_(text), source_(source), line_(line), column0_(column0) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("expected " + std::string(what));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer unsigned_integer(std::string_view what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected " + std::string(what));
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  Integer signed_integer(std::string_view what) {
    const bool negative = accept('-');
    if (!negative) accept('+');
    const Integer v = unsigned_integer(what);
    return negative ? Integer(-v) : v;
  }
  std::int64_t small(const Integer& v, std::string_view what) {
    if (!v.fits_slong_p()) fail(std::string(what) + " is out of range");
    return v.get_si();
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(source_, line_, column0_ + pos + 1, message);
  }
  std::size_t mark() {
    skip_space();
    return pos_;
  }
  std::size_t column() const { return column0_ + pos_ + 1; }

 private:
  std::string_view text_;
  const std::string& source_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

Cyclotomic parse_root(Cursor& c) {
  c.expect('E', "'E('");
  c.expect('(', "'(' after E");
  const Integer n = c.unsigned_integer("root order");
  if (n == 0) c.fail("root order must be positive");
  const std::int64_t order = c.small(n, "root order");
  c.expect(')', "')'");
  std::int64_t k = 1;
  if (c.accept('^')) k = c.small(c.signed_integer("integer exponent"), "exponent");
  return Cyclotomic::root_of_unity(order, k);
}

Cyclotomic parse_term(Cursor& c) {
  if (c.accept('-')) return -parse_term(c);
  if (c.peek() == 'E') return parse_root(c);
  if (!c.at_digit()) c.fail("expected a number or E(n)");
  Rational coeff(c.unsigned_integer("a number"));
  if (c.accept('/')) {
    const std::size_t at = c.mark();
    const Integer den = c.unsigned_integer("denominator");
    if (den == 0) c.fail_at(at, "zero denominator");
    coeff /= den;
  }
  if (c.accept('*')) return Cyclotomic(coeff) * parse_root(c);
  return Cyclotomic(coeff);
}

// Parses an expression and stops before ',' or the end of the text.
Cyclotomic parse_expr(Cursor& c) {
  Cyclotomic sum;
  bool negative = c.accept('-');
  if (!negative) c.accept('+');
  for (;;) {
    Cyclotomic t = parse_term(c);
    sum += negative ? -t : t;
    if (c.accept('+')) {
      negative = false;
    } else if (c.accept('-')) {
      negative = true;
    } else {
      return sum;
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::size_t offset;  // column of text[0], zero-based
  std::string_view text;
};

std::vector<Cyclotomic> parse_row(const Line& line, const std::string& source) {
  Cursor c(line.text, source, line.number, line.offset);
  std::vector<Cyclotomic> row;
  for (;;) {
    row.push_back(parse_expr(c));
    if (c.done()) return row;
    c.expect(',', "',' or end of line");
  }
}

std::size_t parse_index(Cursor& c) {
  const Integer v = c.unsigned_integer("an index");
  return static_cast<std::size_t>(c.small(v, "index"));
}

}  // namespace

std::string_view to_string(Form form) {
  switch (form) {
    case Form::S: return "S";
    case Form::s: return "s";
    case Form::P: return "P";
    case Form::lambda_table: return "lambda-table";
    case Form::degrees: return "degrees";
  }
  return "?";
}

std::optional<Form> parse_form(std::string_view name) {
  for (Form f : {Form::S, Form::s, Form::P, Form::lambda_table, Form::degrees}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

ExactMatrix MatrixDocument::matrix() const {
  if (form == Form::lambda_table || form == Form::degrees) {
    throw Error(ErrorCode::InvalidArgument, source + " holds a " + std::string(to_string(form)) + ", not a matrix");
  }
  return ExactMatrix::from_rows(rows);
}

Tensor3 MatrixDocument::lambda_tensor() const {
  if (form != Form::lambda_table) throw Error(ErrorCode::InvalidArgument, source + " is not a lambda-table");
  Tensor3 t(rank);
  for (const auto& e : lambda) t(e.i, e.j, e.k) = e.value;
  return t;
}

Cyclotomic parse_cyclotomic(std::string_view text, const std::string& source) {
  Cursor c(text, source, 1);
  Cyclotomic x = parse_expr(c);
  if (!c.done()) c.fail("expected '+', '-' or end of input");
  return x;
}

MatrixDocument parse_matrix(std::string_view text, Form fallback, const std::string& source) {
  MatrixDocument doc;
  doc.form = fallback;
  doc.source = source;
  std::optional<std::size_t> declared_rank;
  std::size_t rank_line = 0;
  std::vector<Line> data;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view body = trim(raw);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t offset = static_cast<std::size_t>(body.data() - raw.data());
    if (const auto colon = body.find(':'); colon != std::string_view::npos) {
      const std::string_view key = trim(body.substr(0, colon));
      const std::string_view value = trim(body.substr(colon + 1));
      const std::size_t value_column = offset + static_cast<std::size_t>(value.data() - body.data()) + 1;
      if (!data.empty()) throw ParseError(source, number, offset + 1, "headers must come before the data");
      if (key == "form") {
        const auto f = parse_form(value);
        if (!f) {
          throw ParseError(source, number, value_column,
                           "expected one of S, s, P, lambda-table, degrees");
        }
        doc.form = *f;
      } else if (key == "rank") {
        std::size_t r = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), r);
        if (ec != std::errc() || ptr != value.data() + value.size() || r == 0) {
          throw ParseError(source, number, value_column, "expected a positive rank");
        }
        declared_rank = r;
        rank_line = number;
      } else {
        throw ParseError(source, number, offset + 1, "unknown header '" + std::string(key) + "'");
      }
    } else {
      data.push_back({number, offset, body});
    }
    if (end == text.size()) break;
  }

  if (doc.form == Form::lambda_table) {
    std::size_t max_index = 0;
    for (const auto& line : data) {
      Cursor c(line.text, source, line.number, line.offset);
      LambdaEntry e{parse_index(c), 0, 0, {}};
      c.expect(',', "','");
      e.j = parse_index(c);
      c.expect(',', "','");
      e.k = parse_index(c);
      c.expect(',', "','");
      e.value = parse_expr(c);
      if (!c.done()) c.fail("expected end of line");
      if (declared_rank && std::max({e.i, e.j, e.k}) >= *declared_rank) {
        throw ParseError(source, line.number, line.offset + 1, "index exceeds the declared rank");
      }
      max_index = std::max({max_index, e.i, e.j, e.k});
      const auto same = std::find_if(doc.lambda.begin(), doc.lambda.end(), [&](const LambdaEntry& x) {
        return x.i == e.i && x.j == e.j && x.k == e.k;
      });
      if (same != doc.lambda.end()) throw ParseError(source, line.number, line.offset + 1, "duplicate entry");
      if (!e.value.is_zero()) doc.lambda.push_back(std::move(e));
    }
    if (!declared_rank && data.empty()) throw ParseError(source, number, 1, "empty lambda-table");
    doc.rank = declared_rank ? *declared_rank : max_index + 1;
    std::sort(doc.lambda.begin(), doc.lambda.end(), [](const LambdaEntry& a, const LambdaEntry& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return doc;
  }

  if (data.empty()) throw ParseError(source, number, 1, "expected at least one row");
  if (doc.form == Form::degrees) {
    doc.rows.emplace_back();
    for (const auto& line : data) {
      auto row = parse_row(line, source);
      doc.rows[0].insert(doc.rows[0].end(), row.begin(), row.end());
    }
    doc.rank = doc.rows[0].size();
    if (declared_rank && *declared_rank != doc.rank) {
      throw ParseError(source, rank_line, 1, "rank header disagrees with the number of degrees");
    }
    return doc;
  }

  for (const auto& line : data) doc.rows.push_back(parse_row(line, source));
  doc.rank = declared_rank ? *declared_rank : doc.rows.size();
  if (doc.rows.size() != doc.rank) {
    throw ParseError(source, data.back().number, 1,
                     "expected " + std::to_string(doc.rank) + " rows, found " + std::to_string(doc.rows.size()));
  }
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    if (doc.rows[i].size() != doc.rank) {
      throw ParseError(source, data[i].number, data[i].offset + 1,
                       "expected " + std::to_string(doc.rank) + " entries, found " +
                           std::to_string(doc.rows[i].size()));
    }
  }
  return doc;
}

std::string print(const MatrixDocument& doc) {
  std::ostringstream os;
  os << "form: " << to_string(doc.form) << "\n";
  if (doc.form == Form::lambda_table) {
    os << "rank: " << doc.rank << "\n";
    for (const auto& e : doc.lambda) os << e.i << ", " << e.j << ", " << e.k << ", " << e.value << "\n";
    return os.str();
  }
  for (const auto& row : doc.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

MatrixDocument matrix_document(Form form, const ExactMatrix& m, std::string source) {
  MatrixDocument doc;
  doc.form = form;
  doc.rank = m.rank();
  for (std::size_t i = 0; i < m.rank(); ++i) doc.rows.push_back(m.row(i));
  doc.source = std::move(source);
  return doc;
}

MatrixDocument degrees_document(const std::vector<Cyclotomic>& degrees, std::string source) {
  MatrixDocument doc;
  doc.form = Form::degrees;
  doc.rank = degrees.size();
  doc.rows.push_back(degrees);
  doc.source = std::move(source);
  return doc;
}

MatrixDocument lambda_document(const Tensor3& lambda, std::string source) {
  MatrixDocument doc;
  doc.form = Form::lambda_table;
  doc.rank = lambda.rank();
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    for (std::size_t j = 0; j < lambda.rank(); ++j) {
      for (std::size_t k = 0; k < lambda.rank(); ++k) {
        if (!lambda(i, j, k).is_zero()) doc.lambda.push_back({i, j, k, lambda(i, j, k)});
      }
    }
  }
  doc.source = std::move(source);
  return doc;
}

}  // namespace fourier::cli
