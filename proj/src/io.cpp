#include "subconv/io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace subconv {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::filesystem::path& path, const std::string& why) {
  throw std::runtime_error(path.string() + ": " + why);
}

}  // namespace

ScalarKind kind_of(const SetFunctionVariant& f) {
  return std::holds_alternative<SetFunction<std::int64_t>>(f) ? ScalarKind::Int64
                                                              : ScalarKind::Real;
}

int ground_set_size(const SetFunctionVariant& f) {
  return std::visit([](const auto& fn) { return fn.n(); }, f);
}

SetFunction<double> as_real(const SetFunctionVariant& f) {
  if (const auto* real = std::get_if<SetFunction<double>>(&f)) return *real;
  const auto& ints = std::get<SetFunction<std::int64_t>>(f);
  std::vector<double> values(ints.values().begin(), ints.values().end());
  return SetFunction<double>(ints.n(), std::move(values));
}

SetFunctionVariant load_set_function(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail(path, "cannot open file");

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(path, std::string("invalid JSON: ") + e.what());
  }

  if (!doc.is_object()) parse_fail(path, "top-level value must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    parse_fail(path, "missing integer field \"n\"");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    parse_fail(path, "missing string field \"kind\"");
  if (!doc.contains("values") || !doc["values"].is_array())
    parse_fail(path, "missing array field \"values\"");

  const int n = doc["n"].get<int>();
  const std::string kind = doc["kind"].get<std::string>();
  const auto& values = doc["values"];
  if (n < 0 || n > max_ground_set_size())
    parse_fail(path, "\"n\" = " + std::to_string(n) + " outside [0, " +
                         std::to_string(max_ground_set_size()) + "]");
  if (values.size() != (std::uint64_t{1} << n))
    parse_fail(path, "dimension error: \"values\" has " + std::to_string(values.size()) +
                         " entries, expected 2^" + std::to_string(n) + " = " +
                         std::to_string(std::uint64_t{1} << n));

  if (kind == "int") {
    std::vector<std::int64_t> out;
    out.reserve(values.size());
    for (const auto& v : values) {
      if (!v.is_number_integer()) parse_fail(path, "kind \"int\" requires integer values");
      out.push_back(v.get<std::int64_t>());
    }
    return SetFunction<std::int64_t>(n, std::move(out));
  }
  if (kind == "float") {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) {
      if (!v.is_number()) parse_fail(path, "kind \"float\" requires numeric values");
      out.push_back(v.get<double>());
    }
    return SetFunction<double>(n, std::move(out));
  }
  parse_fail(path, "\"kind\" must be \"int\" or \"float\", got \"" + kind + "\"");
}

void save_set_function(const std::filesystem::path& path, const SetFunctionVariant& f) {
  json doc;
  doc["n"] = ground_set_size(f);
  std::visit(
      [&doc](const auto& fn) {
        using Scalar = std::decay_t<decltype(fn.values()[0])>;
        doc["kind"] = std::is_same_v<Scalar, std::int64_t> ? "int" : "float";
        doc["values"] = fn.values();
      },
      f);

  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << doc.dump() << '\n';
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace subconv
