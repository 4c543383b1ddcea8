#include "secmon/party_set.hpp"

#include <unordered_set>

#include "secmon/error.hpp"
#include "secmon/tolerance.hpp"

namespace secmon {

PartySet::PartySet(std::vector<std::string> labels, std::vector<std::size_t> cardinalities)
    : labels_(std::move(labels)), cards_(std::move(cardinalities)) {
  if (labels_.size() != cards_.size()) {
    throw InvalidArgument("party labels and cardinalities differ in length");
  }
  if (labels_.size() > tol::kMaxParties) {
    throw InstanceTooLarge("instance too large: more than " +
                           std::to_string(tol::kMaxParties) + " parties");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidArgument("empty party label");
    if (!seen.insert(labels_[i]).second) {
      throw InvalidArgument("duplicate party label '" + labels_[i] + "'");
    }
    if (cards_[i] == 0) {
      throw InvalidArgument("party '" + labels_[i] + "' has cardinality 0");
    }
    if (total_ > tol::kMaxOutcomes / cards_[i]) {
      throw InstanceTooLarge("instance too large: more than 2^24 outcomes");
    }
    total_ *= cards_[i];
  }
}

std::size_t PartySet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw InvalidArgument("unknown party label '" + label + "'");
}

bool PartySet::contains(const std::string& label) const noexcept {
  for (const auto& l : labels_) {
    if (l == label) return true;
  }
  return false;
}

PartyMask PartySet::mask_of(std::span<const std::string> labels) const {
  PartyMask m = 0;
  for (const auto& l : labels) {
    const auto i = index_of(l);
    if (has(m, i)) throw InvalidArgument("party '" + l + "' listed twice");
    m |= bit(i);
  }
  return m;
}

PartyMask PartySet::all() const noexcept {
  return labels_.size() == 64 ? ~PartyMask{0} : bit(labels_.size()) - 1;
}

std::vector<std::size_t> PartySet::strides() const {
  std::vector<std::size_t> s(cards_.size(), 1);
  for (std::size_t i = cards_.size(); i-- > 1;) s[i - 1] = s[i] * cards_[i];
  return s;
}

PartySet PartySet::restrict_to(PartyMask mask) const {
  std::vector<std::string> l;
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (has(mask, i)) {
      l.push_back(labels_[i]);
      c.push_back(cards_[i]);
    }
  }
  return PartySet(std::move(l), std::move(c));
}

PartySet PartySet::with_cardinality(std::size_t i, std::size_t card) const {
  auto c = cards_;
  c.at(i) = card;
  return PartySet(labels_, std::move(c));
}

}  // namespace secmon
