#include "revnf/elements.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace revnf {

namespace {

std::pair<std::string, long> split_symbol(const std::string& s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  if (k == s.size()) return {s, -1};
  return {s.substr(0, k), std::stol(s.substr(k))};
}

}  // namespace

bool symbol_less(const std::string& a, const std::string& b) {
  auto sa = split_symbol(a);
  auto sb = split_symbol(b);
  if (sa.first != sb.first) return sa.first < sb.first;
  if (sa.second != sb.second) return sa.second < sb.second;
  return a < b;
}

std::string Label::text() const {
  if (!formula.empty()) return formula;
  std::string out;
  for (const auto& [name, e] : factors) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (!base.empty()) out += (out.empty() ? "" : "*") + base;
  return out.empty() ? "1" : out;
}

Label Label::product(const Label& a, const Label& b) {
  if (!a.is_product() || !b.is_product()) throw std::logic_error("product of derived labels");
  if (!a.base.empty() && !b.base.empty()) throw std::logic_error("product of two generators");
  Label out;
  out.base = a.base.empty() ? b.base : a.base;
  out.factors = a.factors;
  for (const auto& [name, e] : b.factors) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const auto& f) { return f.first == name; });
    if (it == out.factors.end()) {
      out.factors.emplace_back(name, e);
    } else {
      it->second += e;
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return symbol_less(x.first, y.first); });
  return out;
}

std::vector<Polynomial> polys_of(const std::vector<RingElement>& v) {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.poly);
  return out;
}

std::vector<PolyMap> maps_of(const std::vector<ModuleElement>& v) {
  std::vector<PolyMap> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.map);
  return out;
}

}  // namespace revnf
