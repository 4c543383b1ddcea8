#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace secmon {

/// Bit i set means party i (in declaration order) is selected.
using PartyMask = std::uint64_t;

/// Ordered, labeled parties with a finite alphabet (or Hilbert dimension) each.
/// Declaration order is canonical: tables are row-major with party 0 most
/// significant.
class PartySet {
 public:
  PartySet() = default;
  PartySet(std::vector<std::string> labels, std::vector<std::size_t> cardinalities);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& cardinalities() const noexcept { return cards_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t cardinality(std::size_t i) const { return cards_.at(i); }

  /// Product of all cardinalities.
  std::size_t total() const noexcept { return total_; }

  /// Throws InvalidArgument for an unknown label.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const noexcept;

  /// Throws InvalidArgument on unknown or repeated labels.
  PartyMask mask_of(std::span<const std::string> labels) const;
  PartyMask all() const noexcept;

  /// Row-major strides (party 0 most significant).
  std::vector<std::size_t> strides() const;

  /// Sub-PartySet of the masked parties, original relative order.
  PartySet restrict_to(PartyMask mask) const;

  /// Copy with party `i`'s cardinality replaced.
  PartySet with_cardinality(std::size_t i, std::size_t card) const;

  friend bool operator==(const PartySet&, const PartySet&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> cards_;
  std::size_t total_ = 1;
};

inline PartyMask bit(std::size_t i) noexcept { return PartyMask{1} << i; }
inline bool has(PartyMask m, std::size_t i) noexcept { return (m >> i) & 1U; }

}  // namespace secmon
