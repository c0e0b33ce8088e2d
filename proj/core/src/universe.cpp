#include "galois/universe.hpp"

#include <set>

#include "galois/error.hpp"

namespace galois {

Universe::Universe(std::string name, std::size_t size, std::vector<std::string> labels)
    : name_(std::move(name)), size_(size), labels_(std::move(labels)) {}

UniverseRef Universe::create(std::string name, std::size_t size, std::vector<std::string> labels) {
  if (size == 0) throw DomainError("universe '" + name + "' must be non-empty");
  if (size > 32) throw DomainError("universe '" + name + "' exceeds 32 elements");
  if (!labels.empty()) {
    if (labels.size() != size) {
      throw DomainError("universe '" + name + "' has " + std::to_string(labels.size()) +
                        " labels for " + std::to_string(size) + " elements");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
      throw DomainError("universe '" + name + "' has duplicate labels");
    }
  }
  return UniverseRef(new Universe(std::move(name), size, std::move(labels)));
}

std::string Universe::label(Element e) const {
  if (e >= size_) throw DomainError("element " + std::to_string(e) + " outside universe '" + name_ + "'");
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

std::optional<Element> Universe::find(std::string_view label) const {
  if (labels_.empty()) {
    Element value = 0;
    if (label.empty()) return std::nullopt;
    for (char c : label) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<Element>(c - '0');
      if (value >= size_) return std::nullopt;
    }
    return value;
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::uint64_t Universe::tupleCount(std::size_t arity) const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n > (std::uint64_t{1} << 62) / size_) {
      throw BudgetExceeded("universe '" + name_ + "' to the power " + std::to_string(arity) +
                           " is too large");
    }
    n *= size_;
  }
  return n;
}

void requireSameUniverse(const Universe& a, const Universe& b, std::string_view context) {
  if (&a != &b) {
    throw DomainError(std::string(context) + ": universe '" + a.name() + "' is not universe '" +
                      b.name() + "'");
  }
}

std::uint64_t tupleRank(std::span<const Element> entries, std::size_t base) {
  std::uint64_t r = 0;
  for (Element e : entries) r = r * base + e;
  return r;
}

std::uint64_t tupleRank(const Tuple& t, const Universe& u) {
  for (Element e : t.entries()) {
    if (e >= u.size()) {
      throw DomainError("tuple entry " + std::to_string(e) + " outside universe '" + u.name() + "'");
    }
  }
  return tupleRank(t.entries(), u.size());
}

Tuple tupleUnrank(std::uint64_t rank, std::size_t arity, std::size_t base) {
  std::vector<Element> entries(arity);
  for (std::size_t i = arity; i-- > 0;) {
    entries[i] = static_cast<Element>(rank % base);
    rank /= base;
  }
  return Tuple(std::move(entries));
}

Tuple tupleUnrank(std::uint64_t rank, std::size_t arity, const Universe& u) {
  if (rank >= u.tupleCount(arity)) {
    throw DomainError("rank " + std::to_string(rank) + " out of range for arity " +
                      std::to_string(arity) + " over '" + u.name() + "'");
  }
  return tupleUnrank(rank, arity, u.size());
}

Tuple composeTuple(const Tuple& a, std::span<const std::size_t> h) {
  std::vector<Element> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] >= a.arity()) {
      throw DomainError("index map sends " + std::to_string(i) + " to " + std::to_string(h[i]) +
                        ", outside arity " + std::to_string(a.arity()));
    }
    out[i] = a[h[i]];
  }
  return Tuple(std::move(out));
}

Tuple extendCompose(const Tuple& a, std::span<const Element> sigma, std::span<const Slot> h) {
  std::vector<Element> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Slot s = h[i];
    if (s.indeterminate) {
      if (s.index >= sigma.size()) {
        throw DomainError("no Skolem value bound for indeterminate " + std::to_string(s.index));
      }
      out[i] = sigma[s.index];
    } else {
      if (s.index >= a.arity()) {
        throw DomainError("scheme map targets position " + std::to_string(s.index) +
                          " outside arity " + std::to_string(a.arity()));
      }
      out[i] = a[s.index];
    }
  }
  return Tuple(std::move(out));
}

}  // namespace galois
