#include "cubics/io.hpp"

#include <sstream>

namespace cubics {

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "tsv") return OutputFormat::Tsv;
  if (s == "table") return OutputFormat::Table;
  return std::nullopt;
}

std::optional<std::string> pencil_name(const DivisorClass& d) {
  for (int i = 1; i <= 6; ++i) {
    if (d == standard_class(ClassName::Li(i))) return "L" + std::to_string(i);
    if (d == standard_class(ClassName::B(i))) return "B" + std::to_string(i);
  }
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      if (d == standard_class(ClassName::Lij(i, j))) return "L" + std::to_string(i) + std::to_string(j);
    }
  }
  return std::nullopt;
}

std::optional<DivisorClass> parse_pencil_name(const std::string& name) {
  if (name.size() == 2 && name[0] == 'B' && name[1] >= '1' && name[1] <= '6') {
    return standard_class(ClassName::B(name[1] - '0'));
  }
  if (name.size() == 2 && name[0] == 'L' && name[1] >= '1' && name[1] <= '6') {
    return standard_class(ClassName::Li(name[1] - '0'));
  }
  if (name.size() == 3 && name[0] == 'L' && name[1] >= '1' && name[1] <= '6' && name[2] > name[1] &&
      name[2] <= '6') {
    return standard_class(ClassName::Lij(name[1] - '0', name[2] - '0'));
  }
  return std::nullopt;
}

std::optional<DivisorClass> parse_divisor(const std::vector<std::string>& tokens) {
  if (tokens.size() != 7) return std::nullopt;
  DivisorClass d;
  for (std::size_t k = 0; k < 7; ++k) {
    try {
      d.coeff[k] = Int(tokens[k]);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return d;
}

std::string divisor_tokens(const DivisorClass& d) {
  std::ostringstream os;
  for (std::size_t k = 0; k < 7; ++k) {
    if (k) os << ' ';
    os << d.coeff[k];
  }
  return os.str();
}

nlohmann::ordered_json divisor_json(const DivisorClass& d) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
  static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
  for (std::size_t k = 0; k < 7; ++k) {
    const Int& c = d.coeff[k];
    if (c >= kMin && c <= kMax) {
      arr.push_back(static_cast<std::int64_t>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

std::optional<DivisorClass> divisor_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 7) return std::nullopt;
  DivisorClass d;
  for (std::size_t k = 0; k < 7; ++k) {
    const auto& v = j[k];
    if (v.is_number_integer()) {
      d.coeff[k] = Int(v.get<std::int64_t>());
    } else if (v.is_string()) {
      try {
        d.coeff[k] = Int(v.get<std::string>());
      } catch (const std::exception&) {
        return std::nullopt;
      }
    } else {
      return std::nullopt;
    }
  }
  return d;
}

std::string certificate_label(const Certificate& c) {
  if (c.hyperplane_section) return "hyperplane-section";
  if (auto name = pencil_name(c.pencil)) return *name;
  return divisor_tokens(c.pencil);
}

}  // namespace cubics
