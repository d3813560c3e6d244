#include "hecke/root_data.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <gmpxx.h>

namespace hecke {

// ---------------------------------------------------------------------------
// Coweight

Coweight& Coweight::operator+=(const Coweight& o) {
  if (o.size() != size()) throw ValidationError("coweight size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  if (o.size() != size()) throw ValidationError("coweight size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Coweight Coweight::operator-() const {
  Coweight r = *this;
  for (int& x : r.c_) x = -x;
  return r;
}

Coweight operator*(int k, Coweight a) {
  for (int& x : a.c_) x *= k;
  return a;
}

std::string Coweight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c_[i]);
  }
  return out + ")";
}

Coweight Coweight::parse(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') body.push_back(ch);
  IntVector out;
  if (body.empty()) throw ValidationError("empty coweight");
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("malformed coweight '" + text + "'");
    }
  }
  return Coweight(std::move(out));
}

int pairing(const IntVector& root, const Coweight& lambda) {
  if (root.size() != lambda.size()) throw ValidationError("pairing size mismatch");
  int s = 0;
  for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * lambda[i];
  return s;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

Coweight IntMatrix::apply(const Coweight& x) const {
  IntVector r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * x[j];
  return Coweight(std::move(r));
}

IntVector IntMatrix::pullback(const IntVector& alpha) const {
  IntVector r(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) r[j] += alpha[i] * (*this)(i, j);
  return r;
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(std::size_t n, const std::vector<IntMatrix>& generators, std::size_t max_order) {
  elements_.push_back(WeylElement{{}, IntMatrix::identity(n)});
  index_.emplace(elements_[0].matrix, 0);
  // breadth-first on right multiplication: words found are reduced
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      IntMatrix m = elements_[head].matrix * generators[g];
      if (index_.count(m)) continue;
      if (elements_.size() >= max_order)
        throw ValidationError("Weyl group exceeds " + std::to_string(max_order) +
                              " elements; the root datum is not of finite type");
      std::vector<int> word = elements_[head].word;
      word.push_back(static_cast<int>(g));
      index_.emplace(m, elements_.size());
      elements_.push_back(WeylElement{std::move(word), std::move(m)});
    }
  }
  for (const IntMatrix& g : generators) generator_index_.push_back(index_.at(g));
  std::size_t N = elements_.size();
  mult_.resize(N * N);
  inverse_.resize(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::size_t p = index_.at(elements_[a].matrix * elements_[b].matrix);
      mult_[a * N + b] = p;
      if (p == 0) inverse_[a] = b;
    }
}

std::size_t WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw ConsistencyError("matrix is not a Weyl group element");
  return it->second;
}

// ---------------------------------------------------------------------------
// BasedRootDatum

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PGL: return "PGL";
    case Family::Sp: return "Sp";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family parse_family(const std::string& name) {
  if (name == "GL") return Family::GL;
  if (name == "SL") return Family::SL;
  if (name == "PGL") return Family::PGL;
  if (name == "Sp") return Family::Sp;
  throw ValidationError("unsupported group family '" + name + "' (expected GL, SL, PGL or Sp)");
}

namespace {

std::vector<std::vector<int>> type_a_cartan(int r) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    c[i][i] = 2;
    if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

IntVector unit(int n, int i) {
  IntVector e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

}  // namespace

BasedRootDatum BasedRootDatum::standard(Family family, int n) {
  BasedRootDatum d;
  d.family_ = family;
  d.group_parameter_ = n;
  d.label_ = family_name(family) + std::to_string(n);
  switch (family) {
    case Family::GL: {
      if (n < 1) throw ValidationError("GL_n needs n >= 1");
      d.rank_ = n;
      for (int i = 0; i + 1 < n; ++i) {
        IntVector a(static_cast<std::size_t>(n), 0);
        a[i] = 1;
        a[i + 1] = -1;
        d.simple_roots_.push_back(a);
        d.simple_coroots_.push_back(a);
      }
      break;
    }
    case Family::SL: {
      if (n < 2) throw ValidationError("SL_n needs n >= 2");
      // X_* is the coroot lattice; basis = simple coroots
      int r = n - 1;
      d.rank_ = r;
      auto c = type_a_cartan(r);
      for (int i = 0; i < r; ++i) {
        d.simple_roots_.push_back(c[i]);  // <alpha_i, alpha_j^vee> = c[i][j]
        d.simple_coroots_.push_back(unit(r, i));
      }
      break;
    }
    case Family::PGL: {
      if (n < 2) throw ValidationError("PGL_n needs n >= 2");
      // X_* is the coweight lattice; basis = fundamental coweights
      int r = n - 1;
      d.rank_ = r;
      auto c = type_a_cartan(r);
      for (int i = 0; i < r; ++i) {
        d.simple_roots_.push_back(unit(r, i));
        IntVector col(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) col[k] = c[k][i];
        d.simple_coroots_.push_back(col);
      }
      break;
    }
    case Family::Sp: {
      if (n < 2 || n % 2 != 0) throw ValidationError("Sp_n needs an even n >= 2");
      int m = n / 2;
      d.rank_ = m;
      for (int i = 0; i + 1 < m; ++i) {
        IntVector a(static_cast<std::size_t>(m), 0);
        a[i] = 1;
        a[i + 1] = -1;
        d.simple_roots_.push_back(a);
        d.simple_coroots_.push_back(a);
      }
      IntVector longroot(static_cast<std::size_t>(m), 0), shortcoroot(static_cast<std::size_t>(m), 0);
      longroot[m - 1] = 2;
      shortcoroot[m - 1] = 1;
      d.simple_roots_.push_back(longroot);
      d.simple_coroots_.push_back(shortcoroot);
      break;
    }
    case Family::custom:
      throw ValidationError("custom data must be built from explicit roots");
  }
  d.finish();
  return d;
}

BasedRootDatum BasedRootDatum::custom(std::string label, int rank, std::vector<IntVector> simple_roots,
                                      std::vector<IntVector> simple_coroots) {
  if (rank < 1) throw ValidationError("rank must be positive");
  BasedRootDatum d;
  d.family_ = Family::custom;
  d.group_parameter_ = rank;
  d.label_ = label.empty() ? "custom" : std::move(label);
  d.rank_ = rank;
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  d.finish();
  return d;
}

int BasedRootDatum::cartan(std::size_t i, std::size_t j) const {
  return pairing(simple_roots_[i], Coweight(simple_coroots_[j]));
}

void BasedRootDatum::finish() {
  const std::size_t r = simple_roots_.size();
  const auto n = static_cast<std::size_t>(rank_);
  if (simple_coroots_.size() != r) throw ValidationError("need as many simple coroots as simple roots");
  for (std::size_t i = 0; i < r; ++i)
    if (simple_roots_[i].size() != n || simple_coroots_[i].size() != n)
      throw ValidationError("root or coroot of the wrong length");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      int a = cartan(i, j);
      if (i == j && a != 2) throw ValidationError("Cartan matrix must have 2 on the diagonal");
      if (i != j) {
        if (a > 0) throw ValidationError("Cartan matrix off-diagonal entries must be <= 0");
        int b = cartan(j, i);
        if ((a == 0) != (b == 0)) throw ValidationError("Cartan matrix zero pattern is not symmetric");
        if (a * b > 3) throw ValidationError("Cartan matrix is not of finite type");
      }
    }

  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) {
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) -= simple_coroots_[i][a] * simple_roots_[i][b];
    gens.push_back(std::move(m));
  }
  for (const IntMatrix& g : gens)
    if (g * g != IntMatrix::identity(n)) throw ValidationError("simple reflection is not an involution");
  weyl_ = std::make_shared<const WeylGroup>(n, gens, 20000);

  // Root system: closure of the simple (root, coroot) pairs under simple reflections.
  std::map<IntVector, Root> roots;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector c(r, 0);
    c[i] = 1;
    roots.emplace(c, Root{simple_roots_[i], simple_coroots_[i], c});
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Root beta = roots.at(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      int k = pairing(beta.root, Coweight(simple_coroots_[j]));
      int kc = pairing(simple_roots_[j], Coweight(beta.coroot));
      Root img = beta;
      for (std::size_t a = 0; a < n; ++a) {
        img.root[a] -= k * simple_roots_[j][a];
        img.coroot[a] -= kc * simple_coroots_[j][a];
      }
      img.simple_coeffs[j] -= k;
      if (roots.count(img.simple_coeffs)) continue;
      if (roots.size() > 10000) throw ValidationError("root system is not finite");
      queue.push_back(img.simple_coeffs);
      roots.emplace(img.simple_coeffs, std::move(img));
    }
  }
  positive_roots_.clear();
  for (auto& [c, root] : roots) {
    bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool neg = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!pos && !neg) throw ValidationError("root with mixed-sign simple coordinates; data inconsistent");
    if (pos) positive_roots_.push_back(root);
  }
  // order positive roots by height, then coordinates, for determinism
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int x : a.simple_coeffs) ha += x;
    for (int x : b.simple_coeffs) hb += x;
    if (ha != hb) return ha < hb;
    return a.simple_coeffs > b.simple_coeffs;
  });

  two_rho_coroot_ = Coweight::zero(n);
  for (const Root& a : positive_roots_) two_rho_coroot_ += Coweight(a.coroot);
}

void BasedRootDatum::check_coweight(const Coweight& lambda) const {
  if (lambda.size() != static_cast<std::size_t>(rank_))
    throw ValidationError("coweight " + lambda.str() + " has " + std::to_string(lambda.size()) +
                          " coordinates; " + label_ + " needs " + std::to_string(rank_));
}

Coweight BasedRootDatum::reflect(std::size_t i, const Coweight& lambda) const {
  int k = pairing(simple_roots_[i], lambda);
  Coweight out = lambda;
  for (std::size_t a = 0; a < out.size(); ++a) out[a] -= k * simple_coroots_[i][a];
  return out;
}

int BasedRootDatum::rho_pairing_exponent(const Coweight& lambda) const {
  check_coweight(lambda);
  int s = 0;
  for (const Root& a : positive_roots_) s += pairing(a.root, lambda);
  return s;
}

bool BasedRootDatum::is_dominant(const Coweight& lambda) const {
  check_coweight(lambda);
  for (const IntVector& a : simple_roots_)
    if (pairing(a, lambda) < 0) return false;
  return true;
}

Coweight BasedRootDatum::dominant_representative(const Coweight& lambda) const {
  check_coweight(lambda);
  Coweight x = lambda;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
      if (pairing(simple_roots_[i], x) < 0) {
        x = reflect(i, x);
        changed = true;
      }
    }
  }
  return x;
}

bool BasedRootDatum::dominance_leq(const Coweight& mu, const Coweight& lambda) const {
  check_coweight(mu);
  check_coweight(lambda);
  Coweight diff = lambda - mu;
  const std::size_t r = simple_roots_.size();
  if (r == 0) return diff == Coweight::zero(diff.size());
  // Solve C c = (<alpha_j, diff>)_j with C_{ji} = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<mpq_class>> aug(r, std::vector<mpq_class>(r + 1));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug[j][i] = cartan(j, i);
    aug[j][r] = pairing(simple_roots_[j], diff);
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && aug[piv][col] == 0) ++piv;
    if (piv == r) throw ConsistencyError("singular Cartan matrix");
    std::swap(aug[piv], aug[col]);
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      mpq_class f = aug[row][col] / aug[col][col];
      for (std::size_t k = col; k <= r; ++k) aug[row][k] -= f * aug[col][k];
    }
  }
  Coweight rebuilt = Coweight::zero(diff.size());
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class c = aug[i][r] / aug[i][i];
    c.canonicalize();
    if (c.get_den() != 1 || c < 0) return false;
    rebuilt += static_cast<int>(c.get_num().get_si()) * Coweight(simple_coroots_[i]);
  }
  // catches differences with a component outside the span of the coroots
  return rebuilt == diff;
}

std::vector<Coweight> BasedRootDatum::weyl_orbit(const Coweight& lambda) const {
  check_coweight(lambda);
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
      Coweight y = reflect(i, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.rbegin(), seen.rend()};
}

bool BasedRootDatum::is_minuscule(const Coweight& lambda) const {
  for (const Coweight& x : weyl_orbit(lambda))
    for (const Root& a : positive_roots_) {
      int p = pairing(a.root, x);
      if (p < -1 || p > 1) return false;
    }
  return true;
}

std::vector<Coweight> BasedRootDatum::minuscule_dominants() const {
  std::vector<Coweight> out;
  const auto n = static_cast<std::size_t>(rank_);
  IntVector c(n, -1);
  while (true) {
    Coweight x(c);
    if (is_dominant(x) && is_minuscule(x)) out.push_back(x);
    std::size_t i = 0;
    while (i < n && c[i] == 1) c[i++] = -1;
    if (i == n) break;
    ++c[i];
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace hecke
