#include "schubert/serialize.hpp"

#include <cctype>
#include <limits>

#include "schubert/errors.hpp"

namespace schubert {

nlohmann::json to_json(const SchubertUnion& u) {
  nlohmann::json maxima = nlohmann::json::array();
  for (const auto& p : u.maxima()) maxima.push_back(p.coords());
  return {{"l", u.params().l()}, {"m", u.params().m()}, {"maxima", maxima}};
}

SchubertUnion union_from_json(const nlohmann::json& j) {
  try {
    const GrassParams params(j.at("l").get<int>(), j.at("m").get<int>());
    std::vector<GridPoint> cycles;
    for (const auto& p : j.at("maxima")) cycles.emplace_back(p.get<std::vector<int>>());
    return SchubertUnion(params, std::move(cycles));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed union JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      out.push_back(static_cast<long long>(c));
    } else {
      out.push_back(c.str());
    }
  }
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      c.emplace_back(v.get<long long>());
    } else if (v.is_string()) {
      c.emplace_back(v.get<std::string>());
    } else {
      throw InvalidArgument("polynomial coefficient must be an integer");
    }
  }
  return Poly(std::move(c));
}

SchubertUnion parse_maxima(const GrassParams& params, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "empty" || s == "∅") return SchubertUnion::empty(params);

  std::vector<GridPoint> cycles;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(';', start), s.size());
    std::string part = s.substr(start, end - start);
    if (!part.empty() && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
    std::vector<int> coords;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      const std::size_t comma = std::min(part.find(',', pos), part.size());
      const std::string num = part.substr(pos, comma - pos);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("cannot parse maxima: " + std::string(text));
      coords.push_back(std::stoi(num));
      pos = comma + 1;
    }
    cycles.emplace_back(std::move(coords));
    start = end + 1;
  }
  return SchubertUnion(params, std::move(cycles));
}

}  // namespace schubert
