#include "fourier/cli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <sstream>

#include "fourier/error.hpp"

#ifndef FOURIER_VERSION
#define FOURIER_VERSION "0.0.0"
#endif

namespace fourier::cli {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

Report::Report(std::string command, std::string source, std::string_view input_bytes)
    : command_(std::move(command)), source_(std::move(source)), digest_(sha256_hex(input_bytes)) {}

void Report::set_input_shape(std::string form, std::size_t rank) {
  form_ = std::move(form);
  rank_ = rank;
}

void Report::add_section(std::string name, Status status, Json details) {
  sections_.push_back({std::move(name), status, std::move(details)});
}

void Report::add_ledger(std::string statement, Status status, std::string detail) {
  ledger_.push_back({std::move(statement), status, std::move(detail)});
}

void Report::set_document(std::string text) { document_ = std::move(text); }

bool Report::passed() const {
  for (const auto& s : sections_) {
    if (s.status == Status::fail) return false;
  }
  for (const auto& l : ledger_) {
    if (l.status == Status::fail) return false;
  }
  return true;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = 1;
  j["tool"] = {{"name", "fourier"}, {"version", FOURIER_VERSION}};
  j["command"] = command_;
  j["input"] = {{"source", source_}, {"sha256", digest_}, {"form", form_}, {"rank", rank_}};
  Json sections = Json::array();
  for (const auto& s : sections_) {
    Json entry = {{"name", s.name}, {"status", to_string(s.status)}};
    for (const auto& [key, value] : s.details.items()) entry[key] = value;
    sections.push_back(std::move(entry));
  }
  j["sections"] = std::move(sections);
  Json ledger = Json::array();
  for (const auto& l : ledger_) {
    Json entry = {{"statement", l.statement}, {"status", to_string(l.status)}};
    if (!l.detail.empty()) entry["detail"] = l.detail;
    ledger.push_back(std::move(entry));
  }
  j["ledger"] = std::move(ledger);
  if (!document_.empty()) j["document"] = document_;
  j["status"] = passed() ? "pass" : "fail";
  return j;
}

namespace {

void write_details(std::ostringstream& os, const Json& details) {
  if (details.contains("checks")) {
    for (const auto& c : details["checks"]) {
      os << "  " << c["id"].get<std::string>() << ": " << c["status"].get<std::string>();
      if (c.contains("witness")) os << " at " << c["witness"].dump();
      if (c.contains("value")) os << " = " << c["value"].get<std::string>();
      if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
      os << "\n";
    }
  }
  for (const auto& [key, value] : details.items()) {
    if (key == "checks") continue;
    os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  if (!document_.empty() && passed()) return document_;
  std::ostringstream os;
  os << "fourier " << FOURIER_VERSION << " " << command_ << " " << source_;
  if (!form_.empty()) os << " (" << form_ << ", rank " << rank_ << ")";
  os << "\n";
  for (const auto& s : sections_) {
    os << s.name << ": " << to_string(s.status) << "\n";
    write_details(os, s.details);
  }
  if (!ledger_.empty()) {
    os << "ledger:\n";
    for (const auto& l : ledger_) {
      os << "  [" << to_string(l.status) << "] " << l.statement;
      if (!l.detail.empty()) os << " (" << l.detail << ")";
      os << "\n";
    }
  }
  os << "result: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

Json to_json(const std::vector<std::size_t>& witness) {
  Json w = Json::array();
  for (auto i : witness) w.push_back(i);
  return w;
}

Json to_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const auto& v : report.verdicts) {
    Json c = {{"id", v.id}, {"statement", v.statement}, {"status", v.passed ? "pass" : "fail"}};
    if (!v.passed) {
      c["witness"] = to_json(v.witness);
      if (v.value) c["value"] = to_string(*v.value);
      if (!v.detail.empty()) c["detail"] = v.detail;
    }
    checks.push_back(std::move(c));
  }
  return {{"checks", std::move(checks)}};
}

Status status_of(const AxiomReport& report) { return report.all_passed() ? Status::pass : Status::fail; }

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::holds: return Status::pass;
    case Verdict::counterexample: return Status::fail;
    default: return Status::not_applicable;
  }
}

}  // namespace fourier::cli
