#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourier/cyclotomic.hpp"
#include "fourier/fusion.hpp"
#include "fourier/matrix.hpp"

namespace fourier::cli {

enum class Form { S, s, P, lambda_table, degrees };

std::string_view to_string(Form form);
/// "S", "s", "P", "lambda-table" or "degrees".
std::optional<Form> parse_form(std::string_view name);

struct LambdaEntry {
  std::size_t i, j, k;
  Cyclotomic value;
  friend bool operator==(const LambdaEntry&, const LambdaEntry&) = default;
};

/// A parsed input file.
///
/// Matrix forms keep `rows` (rank x rank). The degrees form keeps a single
/// row. The lambda-table form keeps its nonzero entries sorted by (i, j, k).
struct MatrixDocument {
  Form form = Form::S;
  std::size_t rank = 0;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<LambdaEntry> lambda;
  std::string source;

  ExactMatrix matrix() const;
  Tensor3 lambda_tensor() const;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

/// expr := term (("+" | "-") term)*     term := coeff ("*" root)? | root
/// root := "E(" uint ")" ("^" int)?     coeff := int ("/" uint)?
/// A leading sign is allowed. Throws ParseError.
Cyclotomic parse_cyclotomic(std::string_view text, const std::string& source = "<expr>");

/// One row per line, entries separated by commas; "#" starts a comment and
/// blank lines are skipped. Optional "form: X" and "rank: r" headers come
/// before the data. lambda-table rows are "i, j, k, value". `fallback` is the
/// form used when the text has no header. Throws ParseError.
MatrixDocument parse_matrix(std::string_view text, Form fallback = Form::S,
                            const std::string& source = "<input>");

/// Canonical text with a form header; parse_matrix(print(doc)) == doc.
std::string print(const MatrixDocument& doc);

MatrixDocument matrix_document(Form form, const ExactMatrix& m, std::string source = {});
MatrixDocument degrees_document(const std::vector<Cyclotomic>& degrees, std::string source = {});
MatrixDocument lambda_document(const Tensor3& lambda, std::string source = {});

}  // namespace fourier::cli
