#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "asn2cafe/asn/parser.hpp"
#include "asn2cafe/asn/resolve.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline asn2cafe::asn::ResolvedSchema load_schema(const std::string& name,
                                                 const std::string& stem = "") {
  std::string fallback = stem.empty() ? name.substr(0, name.find('.')) : stem;
  auto parsed = asn2cafe::asn::parse_text(read_fixture(name), fallback);
  if (!parsed.ok()) throw std::runtime_error("fixture " + name + " does not parse");
  auto resolved = asn2cafe::asn::resolve_references(*parsed);
  if (!resolved.ok()) throw std::runtime_error("fixture " + name + " does not resolve");
  return *resolved;
}

}  // namespace support
