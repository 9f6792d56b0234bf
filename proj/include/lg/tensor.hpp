#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lg/ring.hpp"

namespace lg {

/// Variance of a tensor slot.  Caps have two lower slots and cups two upper
/// slots, so that every contraction in a well-formed network joins exactly
/// one upper and one lower slot.
enum class Slot : unsigned char { upper, lower };

/// Dense tensor over RingElem with any number of 4-dimensional slots.
///
/// Entries are stored row-major in slot order with slot 0 most significant.
/// A rank-4 crossing X^{a c}_{b d} uses slot order (a, c, b, d), which makes
/// the flat layout coincide with the 16x16 matrix convention: entry
/// (4a + c, 4b + d) with zero-based indices.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<Slot> slots)
      : slots_(std::move(slots)), entries_(std::size_t{1} << (2 * slots_.size())) {}

  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t size() const { return entries_.size(); }

  const std::vector<RingElem>& entries() const { return entries_; }
  RingElem& operator[](std::size_t flat) { return entries_[flat]; }
  const RingElem& operator[](std::size_t flat) const { return entries_[flat]; }

  /// Multi-index access; indices run 0..3 in slot order.
  RingElem& at(std::initializer_list<int> idx) { return entries_[flatten(idx)]; }
  const RingElem& at(std::initializer_list<int> idx) const {
    return entries_[flatten(idx)];
  }

  std::size_t flatten(std::initializer_list<int> idx) const {
    std::size_t flat = 0;
    for (int i : idx) flat = flat * 4 + static_cast<std::size_t>(i);
    return flat;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.slots_ == b.slots_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// delta^y_x, slots (upper, lower).
  static Tensor identity_pair() {
    Tensor t({Slot::upper, Slot::lower});
    for (int i = 0; i < 4; ++i) t.at({i, i}) = 1;
    return t;
  }

  /// Rank-4 channel crossing from its 16x16 matrix rows; slots (a, c, b, d)
  /// as described above.
  static Tensor crossing() {
    return Tensor({Slot::upper, Slot::upper, Slot::lower, Slot::lower});
  }

  /// Identity on V (x) V as a rank-4 channel crossing.
  static Tensor identity_crossing() {
    Tensor t = crossing();
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) t.at({a, c, a, c}) = 1;
    return t;
  }

  /// Diagonal cap Omega_{a b}: both slots lower.
  static Tensor cap(const std::array<RingElem, 4>& diag) {
    Tensor t({Slot::lower, Slot::lower});
    for (int i = 0; i < 4; ++i) t.at({i, i}) = diag[i];
    return t;
  }

  /// Diagonal cup Mho^{a b}: both slots upper.
  static Tensor cup(const std::array<RingElem, 4>& diag) {
    Tensor t({Slot::upper, Slot::upper});
    for (int i = 0; i < 4; ++i) t.at({i, i}) = diag[i];
    return t;
  }

 private:
  std::vector<Slot> slots_;
  std::vector<RingElem> entries_;
};

/// A tensor placed in a network with one index name per slot.
struct NetworkNode {
  Tensor tensor;
  std::vector<std::string> names;
};

/// A free (uncontracted) index of a network, in declared output order.
struct FreeIndex {
  std::string name;
  Slot slot;
};

namespace detail {

struct NamedTensor {
  Tensor tensor;
  std::vector<std::string> names;
};

/// Contracts any index name appearing twice within the same tensor.
inline NamedTensor self_trace(NamedTensor a);

/// Contracts a and b over every shared index name (outer product if none).
inline NamedTensor pair_contract(const NamedTensor& a, const NamedTensor& b) {
  std::vector<std::size_t> a_shared, b_shared;
  for (std::size_t i = 0; i < a.names.size(); ++i) {
    for (std::size_t j = 0; j < b.names.size(); ++j) {
      if (a.names[i] == b.names[j]) {
        if (a.tensor.slots()[i] == b.tensor.slots()[j])
          throw MalformedNetwork("index '" + a.names[i] +
                                 "' joins two slots of the same variance");
        a_shared.push_back(i);
        b_shared.push_back(j);
      }
    }
  }

  std::vector<std::size_t> a_free, b_free;
  for (std::size_t i = 0; i < a.names.size(); ++i)
    if (std::find(a_shared.begin(), a_shared.end(), i) == a_shared.end())
      a_free.push_back(i);
  for (std::size_t j = 0; j < b.names.size(); ++j)
    if (std::find(b_shared.begin(), b_shared.end(), j) == b_shared.end())
      b_free.push_back(j);

  // Permute a to (free..., shared...) and b to (shared..., free...); the
  // contraction is then a plain matrix product.
  auto permute = [](const Tensor& t, const std::vector<std::size_t>& order) {
    std::vector<Slot> slots;
    slots.reserve(order.size());
    for (std::size_t s : order) slots.push_back(t.slots()[s]);
    Tensor out(slots);
    const int rank = t.rank();
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      if (!t[flat].is_zero()) {
        std::size_t src = flat;
        for (int s = rank - 1; s >= 0; --s) {
          idx[static_cast<std::size_t>(s)] = static_cast<int>(src % 4);
          src /= 4;
        }
        std::size_t dst = 0;
        for (std::size_t s : order) dst = dst * 4 + static_cast<std::size_t>(idx[s]);
        out[dst] = t[flat];
      }
    }
    return out;
  };

  std::vector<std::size_t> a_order = a_free;
  a_order.insert(a_order.end(), a_shared.begin(), a_shared.end());
  std::vector<std::size_t> b_order = b_shared;
  b_order.insert(b_order.end(), b_free.begin(), b_free.end());
  Tensor pa = permute(a.tensor, a_order);
  Tensor pb = permute(b.tensor, b_order);

  NamedTensor out;
  std::vector<Slot> out_slots;
  for (std::size_t i : a_free) {
    out_slots.push_back(a.tensor.slots()[i]);
    out.names.push_back(a.names[i]);
  }
  for (std::size_t j : b_free) {
    out_slots.push_back(b.tensor.slots()[j]);
    out.names.push_back(b.names[j]);
  }
  out.tensor = Tensor(std::move(out_slots));

  const std::size_t nfa = std::size_t{1} << (2 * a_free.size());
  const std::size_t ns = std::size_t{1} << (2 * a_shared.size());
  const std::size_t nfb = std::size_t{1} << (2 * b_free.size());
  for (std::size_t i = 0; i < nfa; ++i) {
    for (std::size_t k = 0; k < ns; ++k) {
      const RingElem& av = pa[i * ns + k];
      if (av.is_zero()) continue;
      for (std::size_t j = 0; j < nfb; ++j) {
        const RingElem& bv = pb[k * nfb + j];
        if (!bv.is_zero()) out.tensor[i * nfb + j] += av * bv;
      }
    }
  }
  return self_trace(std::move(out));
}

inline NamedTensor self_trace(NamedTensor a) {
  for (std::size_t i = 0; i < a.names.size(); ++i) {
    for (std::size_t j = i + 1; j < a.names.size(); ++j) {
      if (a.names[i] != a.names[j]) continue;
      if (a.tensor.slots()[i] == a.tensor.slots()[j])
        throw MalformedNetwork("index '" + a.names[i] +
                               "' joins two slots of the same variance");
      std::vector<Slot> slots;
      std::vector<std::string> names;
      for (std::size_t s = 0; s < a.names.size(); ++s) {
        if (s != i && s != j) {
          slots.push_back(a.tensor.slots()[s]);
          names.push_back(a.names[s]);
        }
      }
      Tensor out(slots);
      const int rank = a.tensor.rank();
      std::vector<int> idx(static_cast<std::size_t>(rank), 0);
      for (std::size_t flat = 0; flat < a.tensor.size(); ++flat) {
        if (a.tensor[flat].is_zero()) continue;
        std::size_t src = flat;
        for (int s = rank - 1; s >= 0; --s) {
          idx[static_cast<std::size_t>(s)] = static_cast<int>(src % 4);
          src /= 4;
        }
        if (idx[i] != idx[j]) continue;
        std::size_t dst = 0;
        for (std::size_t s = 0; s < a.names.size(); ++s)
          if (s != i && s != j) dst = dst * 4 + static_cast<std::size_t>(idx[s]);
        out[dst] += a.tensor[flat];
      }
      return self_trace(NamedTensor{std::move(out), std::move(names)});
    }
  }
  return a;
}

}  // namespace detail

/// Validates and fully contracts a network; the result carries the declared
/// free indices, in order.  Einstein convention: every non-free index name
/// must appear exactly twice, once in an upper and once in a lower slot.
inline Tensor contract_tensors(const std::vector<NetworkNode>& nodes,
                               std::span<const FreeIndex> free_indices) {
  std::map<std::string, std::vector<Slot>> uses;
  for (const NetworkNode& node : nodes) {
    if (node.names.size() != static_cast<std::size_t>(node.tensor.rank()))
      throw MalformedNetwork("node has " + std::to_string(node.names.size()) +
                             " names for a rank-" +
                             std::to_string(node.tensor.rank()) + " tensor");
    for (std::size_t s = 0; s < node.names.size(); ++s)
      uses[node.names[s]].push_back(node.tensor.slots()[s]);
  }
  for (const auto& [name, slots] : uses) {
    bool is_free = false;
    for (const FreeIndex& f : free_indices) {
      if (f.name != name) continue;
      is_free = true;
      if (slots.size() != 1)
        throw MalformedNetwork("free index '" + name + "' appears " +
                               std::to_string(slots.size()) + " times");
      if (slots[0] != f.slot)
        throw MalformedNetwork("free index '" + name +
                               "' sits in a slot of the wrong variance");
    }
    if (is_free) continue;
    if (slots.size() != 2)
      throw MalformedNetwork("index '" + name + "' appears " +
                             std::to_string(slots.size()) +
                             " times and is not free");
    if (slots[0] == slots[1])
      throw MalformedNetwork("index '" + name +
                             "' joins two slots of the same variance");
  }
  for (const FreeIndex& f : free_indices)
    if (uses.find(f.name) == uses.end())
      throw MalformedNetwork("free index '" + f.name + "' is unused");
  if (nodes.empty()) throw MalformedNetwork("empty network");

  // Fold left to right, preferring the leftmost node that shares an index
  // with the accumulator so intermediate ranks stay small.
  std::vector<bool> used(nodes.size(), false);
  detail::NamedTensor acc =
      detail::self_trace({nodes[0].tensor, nodes[0].names});
  used[0] = true;
  for (std::size_t done = 1; done < nodes.size(); ++done) {
    std::size_t pick = nodes.size();
    for (std::size_t i = 0; i < nodes.size() && pick == nodes.size(); ++i) {
      if (used[i]) continue;
      for (const std::string& nm : nodes[i].names) {
        if (std::find(acc.names.begin(), acc.names.end(), nm) != acc.names.end()) {
          pick = i;
          break;
        }
      }
    }
    if (pick == nodes.size())
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!used[i]) {
          pick = i;
          break;
        }
    acc = detail::pair_contract(acc, {nodes[pick].tensor, nodes[pick].names});
    used[pick] = true;
  }

  // Reorder surviving slots to the declared free order.
  if (acc.names.size() != free_indices.size())
    throw MalformedNetwork("contraction left unexpected free indices");
  std::vector<std::size_t> order;
  std::vector<Slot> out_slots;
  for (const FreeIndex& f : free_indices) {
    auto it = std::find(acc.names.begin(), acc.names.end(), f.name);
    order.push_back(static_cast<std::size_t>(it - acc.names.begin()));
    out_slots.push_back(f.slot);
  }
  Tensor out(out_slots);
  const int rank = acc.tensor.rank();
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  for (std::size_t flat = 0; flat < acc.tensor.size(); ++flat) {
    if (acc.tensor[flat].is_zero()) continue;
    std::size_t src = flat;
    for (int s = rank - 1; s >= 0; --s) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(src % 4);
      src /= 4;
    }
    std::size_t dst = 0;
    for (std::size_t s : order) dst = dst * 4 + static_cast<std::size_t>(idx[s]);
    out[dst] = acc.tensor[flat];
  }
  return out;
}

/// A (1,1)-tangle diagram: a bag of named tensors with one free lower index
/// (the bottom loose end) and one free upper index (the top loose end).
class ContractionNetwork {
 public:
  ContractionNetwork& add(Tensor tensor, std::vector<std::string> names) {
    nodes_.push_back({std::move(tensor), std::move(names)});
    return *this;
  }

  /// Declares the loose ends; x is the lower (incoming) index.
  ContractionNetwork& open(std::string lower, std::string upper) {
    free_lower_ = std::move(lower);
    free_upper_ = std::move(upper);
    return *this;
  }

  const std::vector<NetworkNode>& nodes() const { return nodes_; }
  const std::string& free_lower() const { return free_lower_; }
  const std::string& free_upper() const { return free_upper_; }

  /// Contracts to the raw rank-2 tensor T^y_x, slots (upper y, lower x).
  Tensor contract() const {
    if (free_lower_.empty() || free_upper_.empty())
      throw MalformedNetwork("network has no declared loose ends");
    const FreeIndex frees[2] = {{free_upper_, Slot::upper},
                                {free_lower_, Slot::lower}};
    return contract_tensors(nodes_, frees);
  }

 private:
  std::vector<NetworkNode> nodes_;
  std::string free_lower_;
  std::string free_upper_;
};

}  // namespace lg
