#include "pchar/oracle.hpp"

#include <algorithm>

#include "pchar/error.hpp"

namespace pchar {

std::uint64_t IrrTable::degree_square_sum() const {
  std::uint64_t s = 0;
  for (auto d : degrees) s += d * d;
  return s;
}

IrrTable irr_exhaustive(const Subgroup& ambient, std::uint64_t bound) {
  if (ambient.order_log() > 63 || ambient.order() > bound)
    throw SizeGuardError("oracle requires |K| <= " + std::to_string(bound));
  const std::uint64_t order = ambient.order();
  const auto lattice = subgroup_lattice(ambient, ambient.order_log());

  IrrTable table;
  table.group = ambient;
  std::uint64_t squares = 0;
  // Every irreducible of a p-group of degree p^d is induced from a linear
  // character of a subgroup of index p^d, so larger subgroups come first.
  for (std::size_t layer = lattice.size(); layer-- > 0 && squares < order;) {
    std::vector<MonomialDescriptor> found_here;
    for (const auto& b : lattice[layer]) {
      for (const auto& mu : lin_all(b)) {
        MonomialDescriptor d{ambient, mu};
        if (mackey_inner_product(d, d) != 1) continue;
        bool fresh = true;
        for (const auto& other : found_here)
          if (mackey_inner_product(d, other) != 0) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
        const std::uint64_t deg = d.degree();
        squares += deg * deg;
        found_here.push_back(std::move(d));
      }
    }
    for (auto& d : found_here) table.irreducibles.push_back(std::move(d));
  }
  std::sort(table.irreducibles.begin(), table.irreducibles.end());
  for (const auto& d : table.irreducibles) table.degrees.push_back(d.degree());

  table.class_count = conjugacy_class_count(ambient, bound);
  if (table.degree_square_sum() != order)
    throw Error("oracle: degree squares sum to " + std::to_string(table.degree_square_sum()) + ", expected " +
                std::to_string(order));
  if (table.irreducibles.size() != table.class_count)
    throw Error("oracle: " + std::to_string(table.irreducibles.size()) + " irreducibles but " +
                std::to_string(table.class_count) + " conjugacy classes");
  return table;
}

std::vector<Constituent> decompose_against_irr(const MonomialDescriptor& target, const IrrTable& table) {
  if (!(target.ambient == table.group)) throw PreconditionError("table belongs to a different group");
  std::vector<Constituent> out;
  for (const auto& chi : table.irreducibles)
    if (const auto m = mackey_inner_product(target, chi); m > 0) out.push_back({chi, m});
  return out;
}

}  // namespace pchar
