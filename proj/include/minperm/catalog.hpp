#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minperm/caps.hpp"
#include "minperm/group.hpp"

namespace minperm {

struct GroupSpec;

struct Cyclic { std::size_t n; friend bool operator==(const Cyclic &, const Cyclic &) = default; };
/// Product of cyclic groups of the listed orders.
struct Abelian { std::vector<std::size_t> orders; friend bool operator==(const Abelian &, const Abelian &) = default; };
/// Dihedral group of order 2n.
struct Dihedral { std::size_t n; friend bool operator==(const Dihedral &, const Dihedral &) = default; };
struct Quaternion { std::size_t order; friend bool operator==(const Quaternion &, const Quaternion &) = default; };
/// Upper unitriangular 3x3 matrices over F_p.
struct HeisenbergModP { std::size_t p; friend bool operator==(const HeisenbergModP &, const HeisenbergModP &) = default; };
/// <a, b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>.
struct ModularP3 { std::size_t p; friend bool operator==(const ModularP3 &, const ModularP3 &) = default; };
/// (F_p x F_p) x| C_2 with the involution negating one coordinate.
struct SaundersLike { std::size_t p; friend bool operator==(const SaundersLike &, const SaundersLike &) = default; };
struct Product { std::vector<GroupSpec> factors; };
struct FromFile { std::string path; friend bool operator==(const FromFile &, const FromFile &) = default; };

struct GroupSpec {
  std::variant<Cyclic, Abelian, Dihedral, Quaternion, HeisenbergModP, ModularP3, SaundersLike,
               Product, FromFile>
      form;
  friend bool operator==(const GroupSpec &a, const GroupSpec &b) { return a.form == b.form; }
};

inline bool operator==(const Product &a, const Product &b) { return a.factors == b.factors; }

/// Grammar (whitespace-insensitive):
///   spec   := factor ('x' factor)*
///   factor := 'C'n | 'D'n | 'Q'n | 'heis:'p | 'modp3:'p | 'saunders' [':'p]
///           | 'ab:'n(','n)* | 'file:'path
/// A file path extends to the end of the string.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text; parse_group_spec(to_string(s)) == s.
std::string to_string(const GroupSpec &spec);

GroupTable build(const GroupSpec &spec, const Caps &caps = {});
GroupTable build(std::string_view text, const Caps &caps = {});

GroupTable cyclic_group(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
GroupTable dihedral_group(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
GroupTable quaternion_group(std::size_t order);
GroupTable heisenberg_group(std::size_t p, std::size_t order_cap = kDefaultOrderCap);
GroupTable modular_p3_group(std::size_t p, std::size_t order_cap = kDefaultOrderCap);
GroupTable saunders_group(std::size_t p = 3, std::size_t order_cap = kDefaultOrderCap);

/// The five groups of order p^3 for odd p: cyclic, elementary abelian,
/// C_{p^2} x C_p, Heisenberg, modular.
std::vector<GroupTable> order_p3_family(std::size_t p, std::size_t order_cap = kDefaultOrderCap);

/// C8, C2^3, C4 x C2, D4, Q8.
std::vector<GroupTable> order_8_family();

/// Every abelian group of order n as a product of prime-power cyclic
/// factors, one spec per isomorphism type.
std::vector<GroupSpec> abelian_specs_of_order(std::size_t n);

}  // namespace minperm
