// Position-carrying error/warning records shared by the whole pipeline.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace asn2cafe {

struct Position {
  int line = 1;    // 1-based
  int column = 1;  // 1-based

  bool operator==(const Position&) const = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  Position position;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline Diagnostic error_at(Position pos, std::string message) {
  return Diagnostic{Severity::Error, std::move(message), pos};
}

inline Diagnostic warning_at(Position pos, std::string message) {
  return Diagnostic{Severity::Warning, std::move(message), pos};
}

inline bool has_errors(const Diagnostics& diags) {
  for (const auto& d : diags)
    if (d.severity == Severity::Error) return true;
  return false;
}

// Renders "file:line:col: severity: message", the format the CLI puts on stderr.
inline std::string format_diagnostic(const Diagnostic& d, const std::string& file = "") {
  std::ostringstream out;
  if (!file.empty()) out << file << ":";
  out << d.position.line << ":" << d.position.column << ": "
      << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message;
  return out.str();
}

// Value-or-diagnostics result. Warnings may accompany a present value;
// an absent value means at least one error was reported.
template <class T>
struct Result {
  std::optional<T> value;
  Diagnostics diagnostics;

  bool ok() const { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }

  static Result failure(Diagnostics diags) { return Result{std::nullopt, std::move(diags)}; }
  static Result failure(Diagnostic diag) { return Result{std::nullopt, {std::move(diag)}}; }
  static Result success(T v, Diagnostics diags = {}) {
    return Result{std::move(v), std::move(diags)};
  }
};

}  // namespace asn2cafe
