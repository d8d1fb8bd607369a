#include "jpt/realform.hpp"

namespace jpt {

namespace {

long long so_dim(long long k) { return k * (k - 1) / 2; }

// Complexification of so(k) as simple factors, where one exists.
std::vector<SimpleLieType> so_complex(long long k) {
  if (k == 3) return {{'A', 1}};
  if (k == 4) return {{'A', 1}, {'A', 1}};
  if (k == 5) return {{'B', 2}};
  if (k == 6) return {{'D', 3}};
  if (k >= 7 && k % 2 == 1) return {{'B', static_cast<int>(k / 2)}};
  if (k >= 8) return {{'D', static_cast<int>(k / 2)}};
  return {};  // so(0), so(1) trivial; so(2) abelian
}

}  // namespace

RealFormRecord make_orthogonal(long long p, long long q) {
  if (p < 0 || q < 0) bad_input("so(p,q) needs p,q >= 0");
  RealFormRecord r;
  r.name = q == 0 ? "SO(" + std::to_string(p) + ")"
                  : "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
  long long k = p + q;
  r.dim = so_dim(k);
  r.complex_types = so_complex(k);
  r.abelian = (k == 2);
  r.compact = (p == 0 || q == 0);
  long long c = so_dim(p) + so_dim(q);
  r.character = (p * q) - c;
  if (r.compact) {
    r.mcs = {r.name};
  } else {
    if (p >= 2) r.mcs.push_back("SO(" + std::to_string(p) + ")");
    if (q >= 2) r.mcs.push_back("SO(" + std::to_string(q) + ")");
  }
  return r;
}

std::optional<std::pair<long long, long long>> parse_orthogonal_name(
    const std::string& name) {
  if (name.size() < 5 || name.substr(0, 3) != "SO(" || name.back() != ')')
    return std::nullopt;
  std::string inner = name.substr(3, name.size() - 4);
  auto comma = inner.find(',');
  try {
    size_t used = 0;
    if (comma == std::string::npos) {
      long long p = std::stoll(inner, &used);
      if (used != inner.size() || p < 0) return std::nullopt;
      return std::make_pair(p, 0LL);
    }
    std::string a = inner.substr(0, comma), b = inner.substr(comma + 1);
    long long p = std::stoll(a, &used);
    if (used != a.size()) return std::nullopt;
    long long q = std::stoll(b, &used);
    if (used != b.size() || p < 0 || q < 0) return std::nullopt;
    return std::make_pair(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace jpt
