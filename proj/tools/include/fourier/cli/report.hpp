#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fourier/analysis.hpp"
#include "fourier/fusion.hpp"

namespace fourier::cli {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, not_applicable };

std::string_view to_string(Status s);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// One run of a subcommand. Sections and ledger entries keep insertion order,
/// and nothing depends on time or environment, so equal inputs serialize to
/// equal bytes.
class Report {
 public:
  Report(std::string command, std::string source, std::string_view input_bytes);

  void set_input_shape(std::string form, std::size_t rank);
  void add_section(std::string name, Status status, Json details = Json::object());
  void add_ledger(std::string statement, Status status, std::string detail = {});
  /// Raw text printed instead of the summary in text mode (rescaled matrices etc.).
  void set_document(std::string text);

  bool passed() const;
  Json to_json() const;
  std::string to_text() const;

 private:
  struct Section {
    std::string name;
    Status status;
    Json details;
  };
  struct LedgerEntry {
    std::string statement;
    Status status;
    std::string detail;
  };

  std::string command_;
  std::string source_;
  std::string digest_;
  std::string form_;
  std::size_t rank_ = 0;
  std::vector<Section> sections_;
  std::vector<LedgerEntry> ledger_;
  std::string document_;
};

Json to_json(const std::vector<std::size_t>& witness);
Json to_json(const AxiomReport& report);
Status status_of(const AxiomReport& report);
/// holds -> pass, counterexample -> fail, otherwise not_applicable.
Status status_of(Verdict v);

}  // namespace fourier::cli
