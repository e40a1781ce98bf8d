#include "minperm/catalog.hpp"

#include <cctype>
#include <functional>

#include "minperm/cayley_io.hpp"
#include "minperm/error.hpp"

namespace minperm {

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    std::vector<GroupSpec> factors;
    skip_space();
    factors.push_back(factor());
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x') fail("expected 'x' between factors");
      ++pos_;
      skip_space();
      factors.push_back(factor());
      skip_space();
    }
    if (factors.size() == 1) return std::move(factors.front());
    return flatten(std::move(factors));
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  std::size_t prime() {
    const std::size_t p = number();
    if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
    return p;
  }

  std::size_t positive() {
    const std::size_t n = number();
    if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "order must be positive");
    return n;
  }

  GroupSpec factor() {
    if (consume("file:")) {
      std::string path(text_.substr(pos_));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      pos_ = text_.size();
      if (path.empty()) fail("empty file path");
      return {FromFile{path}};
    }
    if (consume("heis:")) return {HeisenbergModP{prime()}};
    if (consume("modp3:")) return {ModularP3{prime()}};
    if (consume("saunders")) {
      skip_space();
      if (consume(":")) return {SaundersLike{prime()}};
      return {SaundersLike{3}};
    }
    if (consume("ab:")) {
      Abelian ab;
      ab.orders.push_back(positive());
      skip_space();
      while (consume(",")) {
        ab.orders.push_back(positive());
        skip_space();
      }
      return {ab};
    }
    if (consume("C")) return {Cyclic{positive()}};
    if (consume("D")) {
      const std::size_t n = number();
      if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "dihedral D<n> needs n >= 2");
      return {Dihedral{n}};
    }
    if (consume("Q")) {
      const std::size_t n = number();
      if (n < 8 || (n & (n - 1)) != 0)
        throw Error(ErrorCode::ParameterOutOfRange, "quaternion order must be a power of two, at least 8");
      return {Quaternion{n}};
    }
    fail("unknown group factor");
  }

  static GroupSpec flatten(std::vector<GroupSpec> factors) {
    Product out;
    for (auto &f : factors) {
      if (auto *p = std::get_if<Product>(&f.form))
        for (auto &inner : p->factors) out.factors.push_back(std::move(inner));
      else
        out.factors.push_back(std::move(f));
    }
    return {std::move(out)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

GroupTable relabel(GroupTable g, std::string label) {
  g.set_label(std::move(label));
  return g;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GroupSpec &spec) {
  struct Printer {
    std::string operator()(const Cyclic &c) const { return "C" + std::to_string(c.n); }
    std::string operator()(const Abelian &a) const {
      std::string out = "ab:";
      for (std::size_t i = 0; i < a.orders.size(); ++i) out += (i ? "," : "") + std::to_string(a.orders[i]);
      return out;
    }
    std::string operator()(const Dihedral &d) const { return "D" + std::to_string(d.n); }
    std::string operator()(const Quaternion &q) const { return "Q" + std::to_string(q.order); }
    std::string operator()(const HeisenbergModP &h) const { return "heis:" + std::to_string(h.p); }
    std::string operator()(const ModularP3 &m) const { return "modp3:" + std::to_string(m.p); }
    std::string operator()(const SaundersLike &s) const {
      return s.p == 3 ? "saunders" : "saunders:" + std::to_string(s.p);
    }
    std::string operator()(const Product &p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) out += (i ? " x " : "") + to_string(p.factors[i]);
      return out;
    }
    std::string operator()(const FromFile &f) const { return "file:" + f.path; }
  };
  return std::visit(Printer{}, spec.form);
}

GroupTable cyclic_group(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "cyclic order must be positive");
  if (n > order_cap) throw Error(ErrorCode::OrderCapExceeded, "C" + std::to_string(n) + " above cap");
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<ElementId>((a + b) % n);
  return GroupTable::from_trusted_table(n, std::move(table), "C" + std::to_string(n));
}

GroupTable dihedral_group(std::size_t n, std::size_t order_cap) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "dihedral D<n> needs n >= 2");
  const auto rotations = cyclic_group(n, order_cap);
  const auto flip = cyclic_group(2);
  std::vector<ElementId> inversion(n);
  for (ElementId x = 0; x < n; ++x) inversion[x] = rotations.inv(x);
  const auto action = action_from_generators(rotations, flip, {{1, inversion}});
  return relabel(semidirect_product(rotations, flip, action, order_cap), "D" + std::to_string(n));
}

GroupTable quaternion_group(std::size_t order) {
  if (order != 8 && order != 16)
    throw Error(ErrorCode::UnsupportedParameter, "only Q8 and Q16 are built");
  // a^i b^j with a of order 2m, b^2 = a^m, b^-1 a b = a^-1; id = i + 2m*j.
  const std::size_t two_m = order / 2;
  const std::size_t m = two_m / 2;
  std::vector<ElementId> table(order * order);
  for (std::size_t i = 0; i < two_m; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < two_m; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t power;
          std::size_t b_count = j + l;
          if (j == 0) {
            power = i + k;
          } else {
            power = i + two_m - k;  // b a^k = a^-k b
          }
          if (b_count == 2) {
            power += m;
            b_count = 0;
          }
          table[(i + two_m * j) * order + (k + two_m * l)] =
              static_cast<ElementId>(power % two_m + two_m * b_count);
        }
  return GroupTable::from_trusted_table(order, std::move(table), "Q" + std::to_string(order));
}

GroupTable heisenberg_group(std::size_t p, std::size_t order_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::UnsupportedParameter, "heis:2 is excluded; use the order-8 family");
  const std::size_t n = p * p * p;
  if (n > order_cap) throw Error(ErrorCode::OrderCapExceeded, "heis:" + std::to_string(p) + " above cap");
  // [[1,a,c],[0,1,b],[0,0,1]] stored as id a*p^2 + b*p + c.
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      table[x * n + y] = static_cast<ElementId>(((a + a2) % p) * p * p + ((b + b2) % p) * p +
                                                (c + c2 + a * b2) % p);
    }
  }
  return GroupTable::from_trusted_table(n, std::move(table), "heis:" + std::to_string(p));
}

GroupTable modular_p3_group(std::size_t p, std::size_t order_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::UnsupportedParameter, "modp3:2 is excluded; use the order-8 family");
  if (p * p * p > order_cap) throw Error(ErrorCode::OrderCapExceeded, "modp3 above cap");
  const auto a = cyclic_group(p * p);
  const auto b = cyclic_group(p);
  std::vector<ElementId> twist(p * p);
  for (std::size_t x = 0; x < p * p; ++x) twist[x] = static_cast<ElementId>((x * (1 + p)) % (p * p));
  const auto action = action_from_generators(a, b, {{1, twist}});
  return relabel(semidirect_product(a, b, action, order_cap), "modp3:" + std::to_string(p));
}

GroupTable saunders_group(std::size_t p, std::size_t order_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::UnsupportedParameter, "saunders needs an odd prime");
  // V = C_p x C_p; the involution negates the first factor and fixes the
  // second, so the fixed line V1 = {(0, b)} has the smallest ids.
  const auto line = cyclic_group(p);
  const auto v = direct_product(line, line);
  const auto flip = cyclic_group(2);
  std::vector<ElementId> negate_first(p * p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      negate_first[a * p + b] = static_cast<ElementId>(((p - a) % p) * p + b);
  const auto action = action_from_generators(v, flip, {{1, negate_first}});
  return relabel(semidirect_product(v, flip, action, order_cap),
                 p == 3 ? "saunders" : "saunders:" + std::to_string(p));
}

GroupTable build(const GroupSpec &spec, const Caps &caps) {
  const std::size_t cap = caps.order;
  struct Builder {
    std::size_t cap;
    const Caps &caps;
    GroupTable operator()(const Cyclic &c) const { return cyclic_group(c.n, cap); }
    GroupTable operator()(const Abelian &a) const {
      if (a.orders.empty()) throw Error(ErrorCode::ParameterOutOfRange, "empty abelian spec");
      GroupTable g = cyclic_group(a.orders.front(), cap);
      for (std::size_t i = 1; i < a.orders.size(); ++i) g = direct_product(g, cyclic_group(a.orders[i], cap), cap);
      return g;
    }
    GroupTable operator()(const Dihedral &d) const { return dihedral_group(d.n, cap); }
    GroupTable operator()(const Quaternion &q) const { return quaternion_group(q.order); }
    GroupTable operator()(const HeisenbergModP &h) const { return heisenberg_group(h.p, cap); }
    GroupTable operator()(const ModularP3 &m) const { return modular_p3_group(m.p, cap); }
    GroupTable operator()(const SaundersLike &s) const { return saunders_group(s.p, cap); }
    GroupTable operator()(const Product &p) const {
      GroupTable g = build(p.factors.front(), caps);
      for (std::size_t i = 1; i < p.factors.size(); ++i) g = direct_product(g, build(p.factors[i], caps), cap);
      return g;
    }
    GroupTable operator()(const FromFile &f) const { return read_cayley_table_file(f.path, cap); }
  };
  return relabel(std::visit(Builder{cap, caps}, spec.form), to_string(spec));
}

GroupTable build(std::string_view text, const Caps &caps) { return build(parse_group_spec(text), caps); }

std::vector<GroupTable> order_p3_family(std::size_t p, std::size_t order_cap) {
  if (!is_prime(p) || p == 2)
    throw Error(ErrorCode::ParameterOutOfRange, "order_p3_family needs an odd prime; use order_8_family for p = 2");
  Caps caps;
  caps.order = order_cap;
  const auto ps = std::to_string(p);
  const auto p2 = std::to_string(p * p);
  std::vector<GroupTable> out;
  for (const auto *text : {"C", "E", "M", "heis:", "modp3:"}) {
    const std::string t = text;
    if (t == "C") out.push_back(build("C" + std::to_string(p * p * p), caps));
    else if (t == "E") out.push_back(build("C" + ps + " x C" + ps + " x C" + ps, caps));
    else if (t == "M") out.push_back(build("C" + p2 + " x C" + ps, caps));
    else out.push_back(build(t + ps, caps));
  }
  return out;
}

std::vector<GroupTable> order_8_family() {
  std::vector<GroupTable> out;
  for (const auto *text : {"C8", "C2 x C2 x C2", "C4 x C2", "D4", "Q8"}) out.push_back(build(text));
  return out;
}

std::vector<GroupSpec> abelian_specs_of_order(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "order must be positive");
  if (n == 1) return {GroupSpec{Cyclic{1}}};

  // Per prime, every partition of the exponent, largest parts first.
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;
  for (const auto &[p, e] : factorize(n)) {
    std::vector<std::vector<std::size_t>> options;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> partitions = [&](unsigned left, unsigned max_part) {
      if (left == 0) {
        std::vector<std::size_t> orders;
        for (auto k : parts) {
          std::size_t q = 1;
          for (unsigned i = 0; i < k; ++i) q *= p;
          orders.push_back(q);
        }
        options.push_back(std::move(orders));
        return;
      }
      for (unsigned k = std::min(left, max_part); k >= 1; --k) {
        parts.push_back(k);
        partitions(left - k, k);
        parts.pop_back();
      }
    };
    partitions(e, e);
    per_prime.push_back(std::move(options));
  }

  std::vector<GroupSpec> out;
  std::vector<std::size_t> orders;
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == per_prime.size()) {
      if (orders.size() == 1) {
        out.push_back({Cyclic{orders.front()}});
      } else {
        Product prod;
        for (auto q : orders) prod.factors.push_back({Cyclic{q}});
        out.push_back({std::move(prod)});
      }
      return;
    }
    for (const auto &option : per_prime[i]) {
      orders.insert(orders.end(), option.begin(), option.end());
      combine(i + 1);
      orders.resize(orders.size() - option.size());
    }
  };
  combine(0);
  return out;
}

}  // namespace minperm
