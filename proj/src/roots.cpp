#include "jpt/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace jpt {

SimpleLieType parse_lie_type(const std::string& s) {
  if (s.size() < 2) bad_input("bad Lie type '" + s + "'");
  SimpleLieType t;
  t.family = s[0];
  try {
    t.rank = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    bad_input("bad Lie type '" + s + "'");
  }
  if (!is_valid_lie_type(t)) bad_input("invalid Lie type '" + s + "'");
  return t;
}

bool is_valid_lie_type(const SimpleLieType& t) {
  switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 3;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

long long lie_algebra_dim(const SimpleLieType& t) {
  long long n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return t.rank == 6 ? 78 : (t.rank == 7 ? 133 : 248);
    case 'F': return 52;
    case 'G': return 14;
  }
  return 0;
}

namespace {

// Cartan matrix (a_ij = <alpha_i, alpha_j^v>) and symmetrizer d with
// (alpha_i, alpha_j) = a_ij d_j.
void build_cartan(const SimpleLieType& t, std::vector<std::vector<int>>& a,
                  std::vector<int>& d) {
  const int n = t.rank;
  a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  d.assign(n, 1);
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      d.assign(n, 2);
      d[n - 1] = 1;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      d.assign(n, 1);
      d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n >= 8) link(6, 7);
      link(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;
      d = {2, 2, 1, 1};
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      link(0, 1);
      a[1][0] = -3;
      d = {1, 3};
      break;
  }
}

}  // namespace

RootSystem::RootSystem(const SimpleLieType& type) : type_(type) {
  if (!is_valid_lie_type(type)) bad_input("invalid Lie type " + type.str());
  build_cartan(type, cartan_, sym_);
  const int n = rank();

  // Closure by root strings: beta + alpha_i is a root iff
  // p_i(beta) - <beta, alpha_i^v> > 0, with p_i the length of the string
  // beta, beta - alpha_i, ... inside the system.
  std::set<Root> roots;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    roots.insert(r);
  }
  std::vector<Root> frontier(roots.begin(), roots.end());
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          bool neg = std::all_of(down.begin(), down.end(),
                                 [](int c) { return c <= 0; });
          bool zero = std::all_of(down.begin(), down.end(),
                                  [](int c) { return c == 0; });
          if (zero) break;  // beta = alpha_i: string ends at the simple root
          if (neg || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Root up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  positive_.assign(roots.begin(), roots.end());
  std::sort(positive_.begin(), positive_.end(),
            [this](const Root& a, const Root& b) {
              int ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : a < b;
            });
  if (static_cast<long long>(positive_.size()) != (dim() - rank()) / 2)
    fail("positive-root count mismatch for " + type.str());
}

int RootSystem::height(const Root& r) const {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

std::vector<int> RootSystem::adjoint_weight() const {
  const Root& theta = positive_.back();
  std::vector<int> labels(rank(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) labels[i] += theta[j] * cartan_[j][i];
  return labels;
}

int RootSystem::coxeter_number() const {
  return height(positive_.back()) + 1;
}

Int RootSystem::weyl_dim(const std::vector<int>& labels) const {
  if (static_cast<int>(labels.size()) != rank())
    bad_input("label count != rank for " + type_.str());
  for (int m : labels)
    if (m < 0) bad_input("Dynkin labels must be non-negative");
  // (lambda + rho, alpha) = sum_j (m_j + 1) c_j d_j for alpha = sum c_j alpha_j.
  Int num = 1, den = 1;
  for (const Root& alpha : positive_) {
    long long top = 0, bot = 0;
    for (int j = 0; j < rank(); ++j) {
      long long w = static_cast<long long>(alpha[j]) * sym_[j];
      top += (labels[j] + 1) * w;
      bot += w;
    }
    num *= top;
    den *= bot;
  }
  Int q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) fail("Weyl dimension came out non-integral for " + type_.str());
  return q;
}

std::vector<int> RootSystem::principal_su2_spins() const {
  // Height histogram; its dual partition lists the exponents.
  std::vector<int> hist;
  for (const Root& r : positive_) {
    int h = height(r);
    if (static_cast<int>(hist.size()) < h) hist.resize(h, 0);
    hist[h - 1]++;
  }
  std::vector<int> spins;
  for (int k = 1; k <= hist[0]; ++k) {
    int e = 0;
    for (int cnt : hist) e += (cnt >= k) ? 1 : 0;
    spins.push_back(2 * e + 1);
  }
  std::sort(spins.begin(), spins.end());
  long long total = 0;
  for (int s : spins) total += s;
  if (total != dim()) fail("principal sl(2) spins do not sum to dim");
  return spins;
}

const RootSystem& RootSystem::get(const SimpleLieType& type) {
  static std::map<SimpleLieType, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, RootSystem(type)).first;
  return it->second;
}

long long weyl_dim(const SimpleLieType& type, const std::vector<int>& labels) {
  return to_ll(RootSystem::get(type).weyl_dim(labels));
}

}  // namespace jpt
