#include "hecke/coeff_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hecke {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

// Splits "a+b+-c-d" into signed terms. A '-' directly after '^' or '*' is
// part of a number, everything else starts a new term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '+') {
      if (!cur.empty()) terms.push_back(cur);
      cur.clear();
    } else if (ch == '-' && !cur.empty() && cur.back() != '^' && cur.back() != '*' &&
               cur.back() != '-') {
      terms.push_back(cur);
      cur = "-";
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, std::string_view context) {
  try {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw ValidationError("malformed integer '" + s + "' in '" + std::string(context) + "'");
  }
}

mpz_class parse_mpz(const std::string& s, std::string_view context) {
  mpz_class z;
  std::string body = s;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  if (body.empty() || z.set_str(body, 10) != 0)
    throw ValidationError("malformed integer '" + s + "' in '" + std::string(context) + "'");
  return z;
}

// Parses one product of factors: [coefficient] * sym^e * ...; the callback
// receives (symbol, exponent) for each non-numeric factor.
template <class OnFactor>
mpz_class parse_product(std::string term, std::string_view context, OnFactor&& on_factor) {
  mpz_class coeff = 1;
  if (!term.empty() && term[0] == '-') {
    coeff = -1;
    term.erase(0, 1);
  }
  if (term.empty()) throw ValidationError("empty term in '" + std::string(context) + "'");
  for (const std::string& factor : split_on(term, '*')) {
    if (factor.empty()) throw ValidationError("empty factor in '" + std::string(context) + "'");
    if (std::isdigit(static_cast<unsigned char>(factor[0])) || factor[0] == '-') {
      coeff *= parse_mpz(factor, context);
      continue;
    }
    auto caret = factor.find('^');
    std::string sym = factor.substr(0, caret);
    int exponent = caret == std::string::npos ? 1 : parse_int(factor.substr(caret + 1), context);
    on_factor(sym, exponent);
  }
  return coeff;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit values
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    std::swap(old_r, r);
    r -= quot * old_r;
    std::swap(old_s, s);
    s -= quot * old_s;
  }
  if (old_r != 1) throw DomainMismatch("residue is not invertible");
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t mod_of(const mpz_class& c, std::uint64_t m) {
  mpz_class r = c % mpz_class(std::to_string(m));
  if (r < 0) r += mpz_class(std::to_string(m));
  return std::stoull(r.get_str());
}

mpq_class mpq_pow(const mpq_class& base, long k) {
  mpq_class b = base;
  if (k < 0) {
    if (b == 0) throw DomainMismatch("division by zero");
    b = 1 / b;
    k = -k;
  }
  mpq_class r = 1;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  r.canonicalize();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Laurent

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace(0, mpz_class(c));
}

Laurent::Laurent(const mpz_class& c) {
  if (c != 0) terms_.emplace(0, c);
}

Laurent Laurent::monomial(const mpz_class& c, int exponent) {
  Laurent l;
  if (c != 0) l.terms_.emplace(exponent, c);
  return l;
}

void Laurent::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpz_class Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Laurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::optional<std::pair<mpz_class, int>> Laurent::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

Laurent Laurent::unit_inverse() const {
  auto m = as_monomial();
  if (!m || (m->first != 1 && m->first != -1))
    throw ConsistencyError("Laurent polynomial " + str() + " is not a unit");
  return monomial(m->first, -m->second);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Laurent Laurent::pow(unsigned k) const {
  Laurent r(1), b = *this;
  while (k > 0) {
    if (k & 1U) r *= b;
    k >>= 1U;
    if (k > 0) b *= b;
  }
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += '+';
    first = false;
    out += c.get_str() + "*v^" + std::to_string(e);
  }
  return out;
}

Laurent Laurent::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ValidationError("empty Laurent polynomial");
  Laurent result;
  for (const std::string& term : split_terms(s)) {
    int exponent = 0;
    mpz_class c = parse_product(term, text, [&](const std::string& sym, int e) {
      if (sym == "v")
        exponent += e;
      else if (sym == "q")
        exponent += 2 * e;
      else
        throw ValidationError("unknown symbol '" + sym + "' in Laurent polynomial '" +
                              std::string(text) + "'");
    });
    result.add_term(exponent, c);
  }
  return result;
}

std::string Laurent::pretty() const {
  if (terms_.empty()) return "0";
  bool even = std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
  const char* sym = even ? "q" : "v";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int e = even ? it->first / 2 : it->first;
    mpz_class c = it->second;
    bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string power;
    if (e == 1)
      power = sym;
    else if (e != 0)
      power = std::string(sym) + "^" + std::to_string(e);
    if (power.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += power;
    else
      out += mag.get_str() + "*" + power;
  }
  return out;
}

// ---------------------------------------------------------------------------
// MultiLaurent

namespace {
void trim(MultiLaurent::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

MultiLaurent::MultiLaurent(const mpz_class& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiLaurent::MultiLaurent(const Laurent& l) {
  for (const auto& [e, c] : l.terms()) add_term({e}, c);
}

MultiLaurent MultiLaurent::monomial(const mpz_class& c, Exponents exps) {
  MultiLaurent m;
  m.add_term(std::move(exps), c);
  return m;
}

MultiLaurent MultiLaurent::variable(int j) {
  if (j < 1) throw ValidationError("symbolic variables are numbered from 1");
  Exponents e(static_cast<std::size_t>(j) + 1, 0);
  e[static_cast<std::size_t>(j)] = 1;
  return monomial(1, std::move(e));
}

void MultiLaurent::add_term(Exponents e, const mpz_class& c) {
  if (c == 0) return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiLaurent::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

MultiLaurent MultiLaurent::unit_inverse() const {
  if (!is_unit()) throw DomainMismatch("formal scalar " + str() + " is not invertible");
  Exponents e = terms_.begin()->first;
  for (int& x : e) x = -x;
  return monomial(terms_.begin()->second, std::move(e));
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  MultiLaurent r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiLaurent::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string MultiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += '+';
    first = false;
    out += c.get_str() + "*v^" + std::to_string(e.empty() ? 0 : e[0]);
    for (std::size_t j = 1; j < e.size(); ++j)
      if (e[j] != 0) out += "*x" + std::to_string(j) + "^" + std::to_string(e[j]);
  }
  return out;
}

MultiLaurent MultiLaurent::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ValidationError("empty formal scalar");
  MultiLaurent result;
  for (const std::string& term : split_terms(s)) {
    Exponents exps;
    auto bump = [&](std::size_t idx, int by) {
      if (exps.size() <= idx) exps.resize(idx + 1, 0);
      exps[idx] += by;
    };
    mpz_class c = parse_product(term, text, [&](const std::string& sym, int e) {
      if (sym == "v") {
        bump(0, e);
      } else if (sym == "q") {
        bump(0, 2 * e);
      } else if (sym.size() > 1 && sym[0] == 'x') {
        int j = parse_int(sym.substr(1), text);
        if (j < 1) throw ValidationError("symbolic variables are numbered from 1");
        bump(static_cast<std::size_t>(j), e);
      } else {
        throw ValidationError("unknown symbol '" + sym + "' in '" + std::string(text) + "'");
      }
    });
    result.add_term(std::move(exps), c);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Scalar

DomainKind Scalar::kind() const {
  switch (value_.index()) {
    case 0: return DomainKind::formal;
    case 1: return DomainKind::rational;
    default: return DomainKind::prime_field;
  }
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiLaurent>)
          return x.is_zero();
        else if constexpr (std::is_same_v<T, mpq_class>)
          return x == 0;
        else
          return x.value == 0;
      },
      value_);
}

bool Scalar::is_invertible() const {
  if (const auto* m = std::get_if<MultiLaurent>(&value_)) return m->is_unit();
  return !is_zero();
}

Scalar Scalar::inverse() const {
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiLaurent>) {
          return Scalar(x.unit_inverse());
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          if (x == 0) throw DomainMismatch("division by zero");
          mpq_class r = 1 / x;
          r.canonicalize();
          return Scalar(r);
        } else {
          if (x.value == 0) throw DomainMismatch("division by zero");
          return Scalar(Residue{invmod(x.value, x.modulus), x.modulus});
        }
      },
      value_);
}

Scalar Scalar::pow(long k) const {
  Scalar base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Scalar r = base;
  // start from the multiplicative unit of the same ring
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiLaurent>)
          r = Scalar(MultiLaurent(mpz_class(1)));
        else if constexpr (std::is_same_v<T, mpq_class>)
          r = Scalar(mpq_class(1));
        else
          r = Scalar(Residue{1 % x.modulus, x.modulus});
      },
      base.value_);
  while (e > 0) {
    if (e & 1UL) r *= base;
    e >>= 1UL;
    if (e > 0) base *= base;
  }
  return r;
}

namespace {
[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw DomainMismatch("cannot combine scalars " + a.str() + " and " + b.str() +
                       " from different rings");
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch(*this, o);
  if (auto* m = std::get_if<MultiLaurent>(&value_)) {
    *m += std::get<MultiLaurent>(o.value_);
  } else if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = std::get<Residue>(o.value_);
    if (r.modulus != s.modulus) mismatch(*this, o);
    r.value = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r.value) + s.value) % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch(*this, o);
  if (auto* m = std::get_if<MultiLaurent>(&value_)) {
    *m = *m * std::get<MultiLaurent>(o.value_);
  } else if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = std::get<Residue>(o.value_);
    if (r.modulus != s.modulus) mismatch(*this, o);
    r.value = mulmod(r.value, s.value, r.modulus);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiLaurent>)
          return Scalar(-x);
        else if constexpr (std::is_same_v<T, mpq_class>)
          return Scalar(mpq_class(-x));
        else
          return Scalar(Residue{x.value == 0 ? 0 : x.modulus - x.value, x.modulus});
      },
      value_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  if (const auto* m = std::get_if<MultiLaurent>(&a.value_)) return *m == std::get<MultiLaurent>(b.value_);
  return std::get<Residue>(a.value_) == std::get<Residue>(b.value_);
}

std::string Scalar::str() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiLaurent>)
          return x.str();
        else if constexpr (std::is_same_v<T, mpq_class>)
          return x.get_str();
        else
          return std::to_string(x.value);
      },
      value_);
}

// ---------------------------------------------------------------------------
// ScalarDomain

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Miller-Rabin with the first twelve primes is exact below 3.3e24.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool validate_sqrt(std::uint64_t ell, std::uint64_t q_residue, std::uint64_t v_image) {
  if (!is_prime(ell)) throw ValidationError(std::to_string(ell) + " is not prime");
  if (v_image % ell == 0) return false;
  return mulmod(v_image % ell, v_image % ell, ell) == q_residue % ell;
}

ScalarDomain ScalarDomain::formal() { return ScalarDomain{}; }

ScalarDomain ScalarDomain::rational(const mpq_class& v_value) {
  if (v_value == 0) throw ValidationError("v must be a nonzero rational");
  ScalarDomain d;
  d.kind_ = DomainKind::rational;
  d.v_value_ = v_value;
  d.v_value_.canonicalize();
  return d;
}

ScalarDomain ScalarDomain::prime_field(std::uint64_t ell, std::uint64_t v_image,
                                       std::optional<std::uint64_t> q_residue) {
  if (!is_prime(ell)) throw ValidationError(std::to_string(ell) + " is not prime");
  if (ell >= (1ULL << 62)) throw ValidationError("prime too large");
  v_image %= ell;
  std::uint64_t q = q_residue ? *q_residue % ell : mulmod(v_image, v_image, ell);
  if (!validate_sqrt(ell, q, v_image))
    throw ValidationError("v=" + std::to_string(v_image) + " is not a nonzero square root of q=" +
                          std::to_string(q) + " modulo " + std::to_string(ell));
  ScalarDomain d;
  d.kind_ = DomainKind::prime_field;
  d.ell_ = ell;
  d.v_image_ = v_image;
  d.q_residue_ = q;
  return d;
}

Scalar ScalarDomain::zero() const { return from_int(0); }
Scalar ScalarDomain::one() const { return from_int(1); }

Scalar ScalarDomain::from_int(const mpz_class& c) const {
  switch (kind_) {
    case DomainKind::formal: return Scalar(MultiLaurent(c));
    case DomainKind::rational: return Scalar(mpq_class(c));
    case DomainKind::prime_field: return Scalar(Residue{mod_of(c, ell_), ell_});
  }
  return Scalar{};
}

Scalar ScalarDomain::v_power(int k) const {
  switch (kind_) {
    case DomainKind::formal: return Scalar(MultiLaurent(Laurent::v_power(k)));
    case DomainKind::rational: return Scalar(mpq_pow(v_value_, k));
    case DomainKind::prime_field: {
      std::uint64_t base = k < 0 ? invmod(v_image_, ell_) : v_image_;
      std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -static_cast<long>(k) : k);
      return Scalar(Residue{powmod(base, e, ell_), ell_});
    }
  }
  return Scalar{};
}

Scalar ScalarDomain::symbol(int j) const {
  if (kind_ != DomainKind::formal) throw DomainMismatch("symbolic coordinates exist only in the formal domain");
  return Scalar(MultiLaurent::variable(j));
}

Scalar ScalarDomain::reduce(const Laurent& x) const {
  if (kind_ == DomainKind::formal) return Scalar(MultiLaurent(x));
  Scalar acc = zero();
  for (const auto& [e, c] : x.terms()) acc += from_int(c) * v_power(e);
  return acc;
}

Scalar ScalarDomain::specialize(const MultiLaurent& x, std::span<const Scalar> values) const {
  Scalar acc = zero();
  for (const auto& [exps, c] : x.terms()) {
    Scalar term = from_int(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (i == 0) {
        term *= v_power(exps[0]);
      } else {
        if (i > values.size())
          throw ValidationError("no value supplied for symbolic coordinate x" + std::to_string(i));
        if (!contains(values[i - 1])) throw DomainMismatch("specialization value outside target ring");
        term *= values[i - 1].pow(exps[i]);
      }
    }
    acc += term;
  }
  return acc;
}

Scalar ScalarDomain::parse(std::string_view text) const {
  std::string s = strip_spaces(text);
  switch (kind_) {
    case DomainKind::formal: return Scalar(MultiLaurent::parse(s));
    case DomainKind::rational: {
      mpq_class q;
      std::string body = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
      if (body.empty() || q.set_str(body, 10) != 0) throw ValidationError("malformed rational '" + s + "'");
      if (body.find('/') != std::string::npos && q.get_den() == 0)
        throw ValidationError("zero denominator in '" + s + "'");
      q.canonicalize();
      return Scalar(q);
    }
    case DomainKind::prime_field: return from_int(parse_mpz(s, text));
  }
  return Scalar{};
}

bool ScalarDomain::contains(const Scalar& s) const {
  if (s.kind() != kind_) return false;
  if (kind_ == DomainKind::prime_field) return std::get<Residue>(s.storage()).modulus == ell_;
  return true;
}

std::string ScalarDomain::describe() const {
  switch (kind_) {
    case DomainKind::formal: return "formal";
    case DomainKind::rational: return "rat:v=" + v_value_.get_str();
    case DomainKind::prime_field:
      return "ell=" + std::to_string(ell_) + ",v=" + std::to_string(v_image_) + ",q=" +
             std::to_string(q_residue_);
  }
  return {};
}

}  // namespace hecke
