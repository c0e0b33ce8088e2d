#include "galois/constraint.hpp"
#include "galois/error.hpp"

namespace galois {

Scheme::Scheme(std::size_t target, std::size_t indeterminates, std::vector<std::vector<Slot>> maps)
    : target_(target), indeterminates_(indeterminates), maps_(std::move(maps)) {
  if (target_ == 0) throw DomainError("scheme target must be positive");
  if (maps_.empty()) throw DomainError("scheme needs a non-empty source family");
  for (const auto& h : maps_) {
    if (h.empty()) throw DomainError("scheme source arities must be positive");
    for (const Slot& s : h) {
      if (s.indeterminate ? s.index >= indeterminates_ : s.index >= target_) {
        throw DomainError("scheme map leaves target + indeterminates");
      }
    }
  }
}

Scheme Scheme::identity(std::size_t target, std::size_t copies) {
  std::vector<Slot> id;
  for (std::size_t i = 0; i < target; ++i) id.push_back(Slot::target(i));
  return {target, 0, std::vector<std::vector<Slot>>(copies, id)};
}

Scheme Scheme::simple(std::size_t target, const std::vector<std::vector<std::size_t>>& maps) {
  std::vector<std::vector<Slot>> slots;
  for (const auto& h : maps) {
    auto& out = slots.emplace_back();
    for (std::size_t x : h) out.push_back(Slot::target(x));
  }
  return {target, 0, std::move(slots)};
}

std::string toString(const Scheme& h) {
  std::string s = "target " + std::to_string(h.target()) + ", |V| " + std::to_string(h.indeterminates()) + ": ";
  for (std::size_t j = 0; j < h.sourceCount(); ++j) {
    if (j) s += " ";
    s += "[";
    const auto map = h.map(j);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (i) s += ",";
      s += map[i].indeterminate ? "v" + std::to_string(map[i].index) : std::to_string(map[i].index);
    }
    s += "]";
  }
  return s;
}

Scheme composeSchemes(const Scheme& outer, std::span<const Scheme> inner) {
  if (inner.size() != outer.sourceCount()) {
    throw DomainError("composition needs one inner scheme per outer source");
  }
  std::size_t offset = outer.indeterminates();
  std::vector<std::vector<Slot>> maps;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    const auto hj = outer.map(j);
    if (inner[j].target() != hj.size()) {
      throw DomainError("inner scheme " + std::to_string(j) + " has target " + std::to_string(inner[j].target()) +
                        " but outer source arity is " + std::to_string(hj.size()));
    }
    for (std::size_t i = 0; i < inner[j].sourceCount(); ++i) {
      auto& k = maps.emplace_back();
      for (const Slot& s : inner[j].map(i)) {
        k.push_back(s.indeterminate ? Slot::variable(offset + s.index) : hj[s.index]);
      }
    }
    offset += inner[j].indeterminates();
  }
  return {outer.target(), offset, std::move(maps)};
}

}  // namespace galois
